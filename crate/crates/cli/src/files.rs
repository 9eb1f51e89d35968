//! JSON file formats. Complex entries are `[re, im]` pairs; matrices are
//! lists of rows.

use std::io::Read;
use std::path::Path;

use num_complex::Complex64;
use orthofermion::{CMatrix, Matrix, Rep};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const SCHEMA_VERSION: &str = "1";

pub type JsonMatrix = Vec<Vec<[f64; 2]>>;

pub fn encode_matrix(m: &CMatrix) -> JsonMatrix {
    (0..m.rows()).map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect()).collect()
}

pub fn decode_matrix(rows: &JsonMatrix) -> Result<CMatrix, CliError> {
    let rows = rows.iter().map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect()).collect();
    let m = Matrix::from_rows(rows).map_err(|e| CliError::Parse(e.to_string()))?;
    if !m.is_finite() {
        return Err(CliError::Parse("non-finite matrix entry".into()));
    }
    Ok(m)
}

/// A representation of the orthofermion algebra on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub schema_version: String,
    pub p: usize,
    pub dim: usize,
    pub matrices: Vec<JsonMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<JsonMatrix>,
}

impl RepFile {
    pub fn from_rep(rep: &Rep, unit: Option<&CMatrix>) -> Self {
        RepFile {
            schema_version: SCHEMA_VERSION.into(),
            p: rep.p(),
            dim: rep.dim(),
            matrices: rep.matrices().iter().map(encode_matrix).collect(),
            unit: unit.map(encode_matrix),
        }
    }

    /// Decodes and checks shapes against `p` and `dim`.
    pub fn to_rep(&self) -> Result<(Rep, Option<CMatrix>), CliError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(CliError::Parse(format!("unsupported schema_version {:?}", self.schema_version)));
        }
        if self.matrices.len() != self.p || self.p == 0 {
            return Err(CliError::Parse(format!("p = {} but {} matrices", self.p, self.matrices.len())));
        }
        let shape_ok = |m: &CMatrix| m.shape() == (self.dim, self.dim);
        let c = self.matrices.iter().map(decode_matrix).collect::<Result<Vec<_>, _>>()?;
        if !c.iter().all(shape_ok) {
            return Err(CliError::Parse(format!("matrix shapes do not match dim = {}", self.dim)));
        }
        let unit = self.unit.as_ref().map(decode_matrix).transpose()?;
        if let Some(u) = &unit {
            if !shape_ok(u) {
                return Err(CliError::Parse(format!("unit shape does not match dim = {}", self.dim)));
            }
        }
        let rep = Rep::new(c).map_err(|e| CliError::Parse(e.to_string()))?;
        Ok((rep, unit))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = read_input(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// Truncated bose-orthofermi model written by `osusy --out`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemFile {
    pub schema_version: String,
    pub p: usize,
    pub levels: usize,
    pub dim: usize,
    pub charges: Vec<JsonMatrix>,
    pub hamiltonian: JsonMatrix,
}

/// Basis written by `decompose --emit-basis`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisFile {
    pub schema_version: String,
    pub multiplicity: usize,
    pub trivial_dim: usize,
    pub basis: JsonMatrix,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io("<stdin>".into(), e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))
    }
}

pub fn write_output(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(path.display().to_string(), e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthofermion::reptheory::random_rep;

    #[test]
    fn rep_file_round_trip_is_lossless() {
        let rep = random_rep::<f64>(3, 2, 1, 9).unwrap();
        let unit = rep.infer_unit(1e-10).unwrap();
        let file = RepFile::from_rep(&rep, Some(&unit));
        let back: RepFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back, file);
        let (rep2, unit2) = back.to_rep().unwrap();
        assert_eq!(rep2, rep);
        assert_eq!(unit2.unwrap(), unit);
    }

    #[test]
    fn shape_mismatch_is_a_parse_error() {
        let rep: Rep = orthofermion::canonical(2).unwrap().into();
        let mut file = RepFile::from_rep(&rep, None);
        file.dim = 4;
        assert!(matches!(file.to_rep(), Err(CliError::Parse(_))));
        let mut file = RepFile::from_rep(&rep, None);
        file.p = 3;
        assert!(matches!(file.to_rep(), Err(CliError::Parse(_))));
    }
}

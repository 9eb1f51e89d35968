use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex;
use orthofermion::osusy::analyze;
use orthofermion::reptheory::random_rep;
use orthofermion::{canonical, ladder_f, ladder_identities, ladder_l, CMatrix, Rep, ZMatrix, DEFAULT_RANK_TOL, DEFAULT_TOL};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::files::{encode_matrix, to_json, write_output, BasisFile, RepFile, SystemFile, SCHEMA_VERSION};
use crate::report::Report;

#[derive(Debug, Parser)]
#[command(name = "orthofermion", version, about = "Orthofermion representations and orthosupersymmetric generators")]
pub struct Cli {
    /// Tolerance on relation residuals.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Print the report as JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,

    /// Output file: the representation for `canonical`/`random-rep`, the
    /// model for `osusy`, the JSON report otherwise.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the canonical (p+1)-dimensional representation.
    Canonical {
        #[arg(long)]
        p: usize,
    },
    /// Check the orthofermion relations on a representation file (`-` for stdin).
    Verify { input: PathBuf },
    /// Split a representation into canonical copies and a trivial block.
    Decompose {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        rank_tol: f64,
        /// Write the block-diagonalising unitary here.
        #[arg(long)]
        emit_basis: Option<PathBuf>,
    },
    /// Canonical copies plus a trivial block, scrambled by a seeded unitary.
    RandomRep {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        copies: usize,
        #[arg(long, default_value_t = 0)]
        trivial: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Truncated bose-orthofermi model: spectrum, eigenspace decomposition, generators.
    Osusy {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        levels: usize,
        /// Relative clustering threshold (scaled by max(1, max|E|)).
        #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
        cluster_tol: f64,
    },
    /// Ladder operators L, F of the canonical representation and their identities.
    Ladder {
        #[arg(long)]
        p: usize,
    },
}

/// What a command prints and the exit code it asks for.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
    pub report: Option<Report>,
}

impl Output {
    fn report(report: Report, json: bool) -> Self {
        let stdout = if json { report.to_json() } else { report.render_table() };
        Output { stdout, exit_code: report.exit_code(), report: Some(report) }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let tol = cli.tol;
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Canonical { p } => {
            let rep: Rep = canonical(*p)?.into();
            let unit = CMatrix::identity(rep.dim());
            let file = RepFile::from_rep(&rep, Some(&unit));
            emit_rep(cli, file, Report::new("canonical").input("p", *p))
        }
        Command::RandomRep { p, copies, trivial, seed } => {
            let rep = random_rep::<f64>(*p, *copies, *trivial, *seed)?;
            let file = RepFile::from_rep(&rep, None);
            let report = Report::new("random-rep")
                .input("p", *p)
                .input("copies", *copies)
                .input("trivial", *trivial)
                .input("seed", *seed);
            emit_rep(cli, file, report)
        }
        Command::Verify { input } => {
            let (rep, unit) = RepFile::read(input)?.to_rep()?;
            let mut report = Report::new("verify").input("input", input.display().to_string()).input("tol", tol);
            let (unit, source) = match unit {
                Some(u) => (u, "file"),
                None => {
                    let (candidate, checks) = rep.unit_candidate(tol);
                    report.absorb("unit: ", &checks);
                    (candidate, "inferred")
                }
            };
            report.absorb("", &rep.verify(&unit, tol)?);
            report.payload = json!({ "p": rep.p(), "dim": rep.dim(), "unit_source": source });
            finish(cli, report, out)
        }
        Command::Decompose { input, rank_tol, emit_basis } => {
            let (rep, _) = RepFile::read(input)?.to_rep()?;
            let d = rep.decompose(tol, *rank_tol)?;
            let mut report = Report::new("decompose")
                .input("input", input.display().to_string())
                .input("tol", tol)
                .input("rank_tol", *rank_tol);
            report.absorb("", &d.residuals);
            report.payload = json!({
                "p": rep.p(),
                "dim": rep.dim(),
                "multiplicity": d.multiplicity,
                "trivial_dim": d.trivial_dim,
            });
            if let Some(path) = emit_basis {
                let file = BasisFile {
                    schema_version: SCHEMA_VERSION.into(),
                    multiplicity: d.multiplicity,
                    trivial_dim: d.trivial_dim,
                    basis: encode_matrix(&d.basis),
                };
                write_output(path, &to_json(&file))?;
            }
            finish(cli, report, out)
        }
        Command::Osusy { p, levels, cluster_tol } => {
            let a = analyze::<f64>(*p, *levels, tol, *cluster_tol)?;
            let mut report = Report::new("osusy")
                .input("p", *p)
                .input("levels", *levels)
                .input("tol", tol)
                .input("cluster_tol", *cluster_tol);
            report.absorb("", &a.report);
            let spectrum: Vec<Value> = a
                .eigenspaces
                .iter()
                .map(|es| {
                    let positive = es.energy > 0.0;
                    json!({
                        "energy": es.energy,
                        "multiplicity": es.dim(),
                        "copies": es.copies,
                        "kind": if positive { "canonical" } else { "trivial" },
                    })
                })
                .collect();
            let boundary = a.eigenspaces.first().filter(|es| es.energy == 0.0).map_or(0, |es| es.dim().saturating_sub(1));
            report.payload = json!({
                "dim": a.system.dim(),
                "spectrum": spectrum,
                "zero_energy_states": { "vacuum": 1, "truncation_boundary": boundary },
            });
            if let Some(path) = out {
                let file = SystemFile {
                    schema_version: SCHEMA_VERSION.into(),
                    p: *p,
                    levels: *levels,
                    dim: a.system.dim(),
                    charges: a.system.q.iter().map(encode_matrix).collect(),
                    hamiltonian: encode_matrix(&a.system.h),
                };
                write_output(path, &to_json(&file))?;
            }
            Ok(Output::report(report, cli.json))
        }
        Command::Ladder { p } => {
            let checks = ladder_identities::<Complex<i64>>(*p, tol)?;
            let mut report = Report::new("ladder").input("p", *p).input("tol", tol);
            report.absorb("", &checks);
            report.payload = json!({
                "L": exact_rows(&ladder_l::<Complex<i64>>(*p)?),
                "F": exact_rows(&ladder_f::<Complex<i64>>(*p)?),
            });
            finish(cli, report, out)
        }
    }
}

fn exact_rows(m: &ZMatrix) -> Vec<Vec<[i64; 2]>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect()).collect()
}

/// Representation-producing commands: the file goes to `--out` (followed by
/// a report) or, without `--out`, to stdout.
fn emit_rep(cli: &Cli, file: RepFile, mut report: Report) -> Result<Output, CliError> {
    match &cli.out {
        Some(path) => {
            write_output(path, &file.to_json())?;
            report.payload = json!({ "p": file.p, "dim": file.dim, "path": path.display().to_string() });
            Ok(Output::report(report, cli.json))
        }
        None => Ok(Output { stdout: file.to_json(), exit_code: 0, report: None }),
    }
}

fn finish(cli: &Cli, report: Report, out: Option<&Path>) -> Result<Output, CliError> {
    if let Some(path) = out {
        write_output(path, &report.to_json())?;
    }
    Ok(Output::report(report, cli.json))
}

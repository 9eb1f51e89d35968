use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    Dimension {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("orthofermion order must be at least 1 and agree between operands (got {0})")]
    Order(usize),

    #[error("matrix is not Hermitian (max |A - A^+| = {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("not an orthofermion representation{}: {reason}", energy_suffix(.energy))]
    NotARepresentation { reason: String, energy: Option<f64> },

    #[error("numerical degeneracy: {reason} (defect {defect:e})")]
    NumericalDegeneracy { reason: String, defect: f64 },

    #[error("boson truncation needs at least 2 levels (got {0})")]
    Truncation(usize),

    #[error("ambiguous eigenvalue clustering near E = {energy}: spread {spread:e} exceeds {tol:e}")]
    Clustering { energy: f64, spread: f64, tol: f64 },

    #[error("invalid matrix data: {0}")]
    InvalidData(String),
}

fn energy_suffix(energy: &Option<f64>) -> String {
    match energy {
        Some(e) => format!(" (eigenspace E = {e})"),
        None => String::new(),
    }
}

impl Error {
    pub(crate) fn not_rep(reason: impl Into<String>) -> Self {
        Error::NotARepresentation { reason: reason.into(), energy: None }
    }

    pub(crate) fn at_energy(self, e: f64) -> Self {
        match self {
            Error::NotARepresentation { reason, .. } => {
                Error::NotARepresentation { reason, energy: Some(e) }
            }
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Matrix norm used to size the enclosure slabs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    /// Largest singular value.
    #[default]
    Spectral,
    /// Maximum absolute column sum.
    #[serde(rename = "one")]
    InducedOne,
    /// Maximum absolute row sum.
    #[serde(rename = "inf")]
    InducedInf,
    Frobenius,
}

impl NormKind {
    pub const ALL: [NormKind; 4] = [
        NormKind::Spectral,
        NormKind::InducedOne,
        NormKind::InducedInf,
        NormKind::Frobenius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormKind::Spectral => "spectral",
            NormKind::InducedOne => "one",
            NormKind::InducedInf => "inf",
            NormKind::Frobenius => "frobenius",
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "spectral" | "2" => Ok(NormKind::Spectral),
            "one" | "1" => Ok(NormKind::InducedOne),
            "inf" | "infinity" => Ok(NormKind::InducedInf),
            "frobenius" | "fro" => Ok(NormKind::Frobenius),
            other => Err(Error::Parse {
                field: "norm".into(),
                message: format!("unknown norm `{other}` (expected spectral, one, inf, frobenius)"),
            }),
        }
    }
}

/// Matrix norm of `t`.
///
/// The spectral norm is `sqrt(λ_max(T*T))`; for Hermitian input it short-cuts
/// to `max |λ|` of `t` itself, which avoids squaring the condition number.
pub fn norm(t: &ComplexMatrix, kind: NormKind) -> Result<f64> {
    let n = t.dim();
    let a = t.as_slice();
    Ok(match kind {
        NormKind::Spectral => spectral_norm(t)?,
        NormKind::InducedOne => (0..n)
            .map(|j| (0..n).map(|i| a[i * n + j].norm()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::InducedInf => (0..n)
            .map(|i| a[i * n..(i + 1) * n].iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::Frobenius => frobenius(t),
    })
}

pub fn frobenius(t: &ComplexMatrix) -> f64 {
    t.as_slice().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn spectral_norm(t: &ComplexMatrix) -> Result<f64> {
    if t.is_zero() {
        return Ok(0.0);
    }
    if t.hermitian_deviation() == 0.0 {
        let values = hermitian_eigenvalues(t)?;
        return Ok(values[0].abs().max(values[values.len() - 1].abs()));
    }
    let gram = t.adjoint_matmul(t)?;
    let values = hermitian_eigenvalues(&gram)?;
    Ok(values[values.len() - 1].max(0.0).sqrt())
}

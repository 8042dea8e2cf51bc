//! Upper bounds on the numerical radius `w(T)`.
//!
//! * classical: `‖T‖_σ`
//! * power: `½(‖T‖_σ + ‖T²‖_σ^{1/2})`
//! * mean: `(‖T*T + TT*‖_σ / 2)^{1/2}`
//! * corollary: farthest vertex of the norm polygon (or `|c|‖Q‖_σ` when `T = cQ`)

use serde::{Deserialize, Serialize};

use crate::enclosure::{degenerate_multiple, radius_bound_from_norms, RadiusBoundDetail, SlabNorms, DEGENERATE_TOL};
use crate::error::{Error, Result};
use crate::linalg::{cartesian_split, norm, ComplexMatrix, NormKind};

pub fn bound_classical(t: &ComplexMatrix) -> Result<f64> {
    norm(t, NormKind::Spectral)
}

pub fn bound_kittaneh_power(t: &ComplexMatrix) -> Result<f64> {
    let square = t.matmul(t)?;
    Ok(0.5 * (norm(t, NormKind::Spectral)? + norm(&square, NormKind::Spectral)?.sqrt()))
}

pub fn bound_kittaneh_mean(t: &ComplexMatrix) -> Result<f64> {
    let sum = t.adjoint_matmul(t)?.try_add(&t.matmul(&t.adjoint())?)?;
    Ok((norm(&sum, NormKind::Spectral)? / 2.0).sqrt())
}

/// Corollary bound with the spectral norm, falling back to `|c|‖Q‖_σ` in the
/// degenerate case. The detail is `None` on the degenerate path.
pub fn bound_corollary(t: &ComplexMatrix) -> Result<(f64, Option<RadiusBoundDetail>)> {
    let pair = cartesian_split(t);
    if let Some((c, q)) = degenerate_multiple(&pair, DEGENERATE_TOL) {
        return Ok((c.norm() * norm(&q, NormKind::Spectral)?, None));
    }
    let detail = radius_bound_from_norms(&SlabNorms::compute(&pair, NormKind::Spectral)?);
    Ok((detail.bound, Some(detail)))
}

/// Bounds divided by `‖T‖_σ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundRatios {
    pub kittaneh_power: f64,
    pub kittaneh_mean: f64,
    pub corollary: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub spectral_norm: f64,
    pub classical: f64,
    pub kittaneh_power: f64,
    pub kittaneh_mean: f64,
    pub corollary: f64,
    pub ratios: BoundRatios,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary_detail: Option<RadiusBoundDetail>,
}

/// All four bounds plus their ratios to `‖T‖_σ`.
///
/// Fails with [`Error::ZeroOperator`] for `T = 0`, where the ratios are
/// undefined.
pub fn bound_report(t: &ComplexMatrix) -> Result<BoundReport> {
    let spectral_norm = norm(t, NormKind::Spectral)?;
    if spectral_norm == 0.0 {
        return Err(Error::ZeroOperator);
    }
    let square = t.matmul(t)?;
    let kittaneh_power = 0.5 * (spectral_norm + norm(&square, NormKind::Spectral)?.sqrt());
    let kittaneh_mean = bound_kittaneh_mean(t)?;
    let (corollary, corollary_detail) = bound_corollary(t)?;
    Ok(BoundReport {
        spectral_norm,
        classical: spectral_norm,
        kittaneh_power,
        kittaneh_mean,
        corollary,
        ratios: BoundRatios {
            kittaneh_power: kittaneh_power / spectral_norm,
            kittaneh_mean: kittaneh_mean / spectral_norm,
            corollary: corollary / spectral_norm,
        },
        corollary_detail,
    })
}

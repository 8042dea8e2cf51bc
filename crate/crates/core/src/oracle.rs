//! Brute-force field-of-values oracle.
//!
//! The support function of `W(T)` in direction `θ` is the largest eigenvalue
//! of `H(θ) = cos θ·T_H + sin θ·T_S`, and `⟨Tu, u⟩` for the matching unit
//! eigenvector is a boundary point on the supporting line
//! `x cos θ + y sin θ = h(θ)`. Sweeping `θ` traces the boundary; random unit
//! vectors fill the interior.
//!
//! Interior sampling uses `ChaCha8Rng` seeded with `seed_from_u64(seed)` and
//! draws independent standard normal real and imaginary parts per component.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::enclosure::{EnclosureRegion, Point};
use crate::error::Result;
use crate::linalg::{
    hermitian_eigen, hermitian_eigenvalues, quadratic_form, vector_norm, CartesianPair, ComplexMatrix, ComplexScalar,
};

pub const DEFAULT_ANGLES: usize = 720;
pub const DEFAULT_SAMPLES: usize = 200;
/// Relative tolerance, scaled by `1 + ‖T‖_σ`.
pub const DEFAULT_TOL: f64 = 1e-8;

const GOLDEN_ITERATIONS: usize = 60;

#[derive(Clone, Debug)]
pub struct Support {
    /// `λ_max(cos θ·T_H + sin θ·T_S)`
    pub h: f64,
    /// Unit eigenvector attaining `h`.
    pub u: Vec<ComplexScalar>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub theta: f64,
    pub point: Point,
    pub support: f64,
}

#[derive(Clone, Debug)]
pub struct FovSample {
    pub boundary: Vec<BoundaryPoint>,
    pub interior: Vec<Point>,
    pub oracle_radius: f64,
}

impl FovSample {
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.boundary
            .iter()
            .map(|b| b.point)
            .chain(self.interior.iter().copied())
    }
}

fn rotated(pair: &CartesianPair, theta: f64) -> ComplexMatrix {
    pair.combination(theta.cos(), theta.sin())
}

/// Support value and extreme eigenvector in direction `theta`.
pub fn support_function(pair: &CartesianPair, theta: f64) -> Result<Support> {
    let eig = hermitian_eigen(&rotated(pair, theta))?;
    let (h, u) = eig.max();
    Ok(Support { h, u: u.to_vec() })
}

fn support_value(pair: &CartesianPair, theta: f64) -> Result<f64> {
    let values = hermitian_eigenvalues(&rotated(pair, theta))?;
    Ok(values[values.len() - 1])
}

/// `(⟨T_H u,u⟩, ⟨T_S u,u⟩)`, i.e. `⟨Tu,u⟩` as a point in the plane.
pub fn field_point(pair: &CartesianPair, u: &[ComplexScalar]) -> Result<Point> {
    Ok((quadratic_form(&pair.th, u)?.re, quadratic_form(&pair.ts, u)?.re))
}

fn boundary_point(pair: &CartesianPair, theta: f64) -> Result<BoundaryPoint> {
    let s = support_function(pair, theta)?;
    Ok(BoundaryPoint {
        theta,
        point: field_point(pair, &s.u)?,
        support: s.h,
    })
}

/// Boundary points at `θ_k = 2πk/n_angles`.
///
/// The eight slab normal directions (multiples of π/4) are appended when the
/// uniform grid misses them, and a final point is added at the direction of
/// the numerical radius, located by golden-section search around the best
/// grid angle.
pub fn boundary_sweep(pair: &CartesianPair, n_angles: usize) -> Result<Vec<BoundaryPoint>> {
    let n_angles = n_angles.max(3);
    let mut angles: Vec<f64> = (0..n_angles).map(|k| 2.0 * PI * k as f64 / n_angles as f64).collect();
    if !n_angles.is_multiple_of(8) {
        angles.extend((0..8).map(|k| k as f64 * FRAC_PI_4));
    }
    let mut points = angles
        .into_iter()
        .map(|theta| boundary_point(pair, theta))
        .collect::<Result<Vec<_>>>()?;

    let best = points
        .iter()
        .max_by(|a, b| a.support.total_cmp(&b.support))
        .map(|b| b.theta)
        .unwrap_or(0.0);
    let step = 2.0 * PI / n_angles as f64;
    let theta = golden_max(|t| support_value(pair, t), best - step, best + step)?;
    points.push(boundary_point(pair, theta)?);
    Ok(points)
}

fn golden_max(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64) -> Result<f64> {
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..GOLDEN_ITERATIONS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// `n` values `⟨Tu,u⟩` for seeded random unit vectors `u`.
pub fn interior_sample(t: &ComplexMatrix, n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = t.dim();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let mut u: Vec<ComplexScalar> = (0..dim)
            .map(|_| ComplexScalar::new(StandardNormal.sample(&mut rng), StandardNormal.sample(&mut rng)))
            .collect();
        let norm = vector_norm(&u);
        if norm == 0.0 {
            continue;
        }
        u.iter_mut().for_each(|z| *z /= norm);
        let z = quadratic_form(t, &u).expect("vector normalized above");
        out.push((z.re, z.im));
    }
    out
}

/// Boundary sweep plus interior sampling.
pub fn fov_sample(
    t: &ComplexMatrix,
    pair: &CartesianPair,
    n_angles: usize,
    n_interior: usize,
    seed: u64,
) -> Result<FovSample> {
    let boundary = boundary_sweep(pair, n_angles)?;
    let interior = interior_sample(t, n_interior, seed);
    let oracle_radius = boundary
        .iter()
        .map(|b| b.point)
        .chain(interior.iter().copied())
        .map(|(x, y)| x.hypot(y))
        .fold(0.0, f64::max);
    Ok(FovSample {
        boundary,
        interior,
        oracle_radius,
    })
}

/// How far `p` lies outside `region` (zero when inside).
pub fn distance_outside(region: &EnclosureRegion, p: Point) -> f64 {
    match region {
        EnclosureRegion::Polygon { vertices, .. } => {
            let n = vertices.len();
            (0..n)
                .map(|i| {
                    let a = vertices[i];
                    let b = vertices[(i + 1) % n];
                    let (ex, ey) = (b.0 - a.0, b.1 - a.1);
                    let len = ex.hypot(ey);
                    // Positive inside for counterclockwise order.
                    let inside = (ex * (p.1 - a.1) - ey * (p.0 - a.0)) / len;
                    -inside
                })
                .fold(0.0, f64::max)
        }
        EnclosureRegion::Segment { endpoint } => {
            let (ex, ey) = (endpoint.re, endpoint.im);
            let len2 = ex * ex + ey * ey;
            if len2 == 0.0 {
                return p.0.hypot(p.1);
            }
            let s = ((p.0 * ex + p.1 * ey) / len2).clamp(-1.0, 1.0);
            (p.0 - s * ex).hypot(p.1 - s * ey)
        }
    }
}

pub fn contains(region: &EnclosureRegion, p: Point, tol: f64) -> bool {
    distance_outside(region, p) <= tol
}

/// Tangency of one pair of opposing sides.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TangencyReport {
    /// Unit outward normal of the side.
    pub direction: Point,
    /// Distance from the origin to the side.
    pub offset: f64,
    /// Support of `W(T)` along `direction`.
    pub support_forward: f64,
    /// Support along `-direction`.
    pub support_backward: f64,
    pub tangent: bool,
}

/// The four slab normals `(θ, (cos θ, sin θ))` of the rectangle and the
/// all-ones parallelogram.
pub fn slab_directions() -> [(f64, Point); 4] {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    [
        (0.0, (1.0, 0.0)),
        (PI / 2.0, (0.0, 1.0)),
        (FRAC_PI_4, (r, r)),
        (-FRAC_PI_4, (r, -r)),
    ]
}

/// Checks that for each slab direction at least one of the two opposing
/// sides touches the closure of `W(T)`.
///
/// The side offset is read from the region as its support in that
/// direction; the corner-cutting property makes that equal to the slab
/// offset.
pub fn tangency_check(pair: &CartesianPair, region: &EnclosureRegion, tol: f64) -> Result<Vec<TangencyReport>> {
    let vertices = region.vertices();
    slab_directions()
        .into_iter()
        .map(|(theta, d)| {
            let offset = vertices
                .iter()
                .map(|v| v.0 * d.0 + v.1 * d.1)
                .fold(f64::NEG_INFINITY, f64::max);
            let forward = support_value(pair, theta)?;
            let backward = support_value(pair, theta + PI)?;
            Ok(TangencyReport {
                direction: d,
                offset,
                support_forward: forward,
                support_backward: backward,
                tangent: (forward.max(backward) - offset).abs() <= tol,
            })
        })
        .collect()
}

/// Convex hull (counterclockwise, no collinear points) by monotone chain.
pub fn convex_hull(points: &[Point]) -> Vec<Point> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: Point, a: Point, b: Point| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<Point> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &Point>> = if pass == 0 {
            Box::new(pts.iter())
        } else {
            Box::new(pts.iter().rev())
        };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

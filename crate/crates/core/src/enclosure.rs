//! Polygonal enclosures of the numerical range built from norms only.
//!
//! `W(T)` lies in the rectangle `|x| ≤ ‖T_H‖, |y| ≤ ‖T_S‖` and in every
//! parallelogram `|αx + βy| ≤ ‖αT_H + βT_S‖, |γx − δy| ≤ ‖γT_H − δT_S‖` with
//! positive parameters. With `α = β = γ = δ = 1` the intersection has eight
//! closed-form vertices (some possibly coincident), giving a quadrilateral,
//! hexagon or octagon that is symmetric about the origin.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{frobenius, norm, CartesianPair, ComplexMatrix, ComplexScalar, NormKind};

/// Default tolerance for [`degenerate_multiple`].
pub const DEGENERATE_TOL: f64 = 1e-10;
/// Relative dedup epsilon for coincident vertices.
pub const DEDUP_RTOL: f64 = 1e-9;

pub type Point = (f64, f64);

/// The slab `|a·x + b·y| ≤ c`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HalfPlane {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HalfPlane {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if a == 0.0 && b == 0.0 {
            return Err(Error::InvalidSlabs("slab normal is zero".into()));
        }
        if c.is_nan() || c < 0.0 {
            return Err(Error::InvalidSlabs(format!("slab offset {c} is negative or NaN")));
        }
        Ok(Self { a, b, c })
    }

    /// Offset measured along the unit normal.
    pub fn unit_offset(&self) -> f64 {
        self.c / self.a.hypot(self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolygonClass {
    Quadrilateral,
    Hexagon,
    Octagon,
}

impl PolygonClass {
    pub fn from_vertex_count(n: usize) -> Option<Self> {
        match n {
            4 => Some(Self::Quadrilateral),
            6 => Some(Self::Hexagon),
            8 => Some(Self::Octagon),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Quadrilateral => "quadrilateral",
            Self::Hexagon => "hexagon",
            Self::Octagon => "octagon",
        }
    }
}

/// A convex region known to contain `W(T)`.
#[derive(Clone, Debug, PartialEq)]
pub enum EnclosureRegion {
    /// Counterclockwise, deduplicated, origin-symmetric.
    Polygon { vertices: Vec<Point>, class: PolygonClass },
    /// The closed segment from `-endpoint` to `+endpoint`.
    Segment { endpoint: ComplexScalar },
}

impl EnclosureRegion {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::Polygon { class, .. } => class.name(),
            Self::Segment { .. } => "segment",
        }
    }

    /// Vertices; a segment reports its two endpoints.
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Self::Polygon { vertices, .. } => vertices.clone(),
            Self::Segment { endpoint } => vec![(endpoint.re, endpoint.im), (-endpoint.re, -endpoint.im)],
        }
    }

    /// Largest distance from the origin to any point of the region.
    pub fn max_modulus(&self) -> f64 {
        match self {
            Self::Polygon { vertices, .. } => vertices.iter().map(|&(x, y)| x.hypot(y)).fold(0.0, f64::max),
            Self::Segment { endpoint } => endpoint.norm(),
        }
    }

    /// Returns a copy scaled about the origin. Used to build negative controls.
    pub fn scaled(&self, factor: f64) -> Self {
        match self {
            Self::Polygon { vertices, class } => Self::Polygon {
                vertices: vertices.iter().map(|&(x, y)| (x * factor, y * factor)).collect(),
                class: *class,
            },
            Self::Segment { endpoint } => Self::Segment {
                endpoint: endpoint * factor,
            },
        }
    }
}

/// Corollary quantities behind the numerical-radius bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusBoundDetail {
    pub eta1: f64,
    pub eta2: f64,
    pub bound: f64,
}

/// The four norms the closed-form polygon is built from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlabNorms {
    /// ‖T_H‖
    pub h: f64,
    /// ‖T_S‖
    pub s: f64,
    /// ‖T_H + T_S‖
    pub sum: f64,
    /// ‖T_H − T_S‖
    pub diff: f64,
}

impl SlabNorms {
    pub fn compute(pair: &CartesianPair, kind: NormKind) -> Result<Self> {
        Ok(Self {
            h: norm(&pair.th, kind)?,
            s: norm(&pair.ts, kind)?,
            sum: norm(&pair.combination(1.0, 1.0), kind)?,
            diff: norm(&pair.combination(1.0, -1.0), kind)?,
        })
    }
}

/// Detects `T = cQ` with `Q` self-adjoint.
///
/// Fits `T_S ≈ t·T_H` by least squares and accepts when the residual is
/// within `tol·(1 + ‖T_H‖_F + ‖T_S‖_F)`.
pub fn degenerate_multiple(pair: &CartesianPair, tol: f64) -> Option<(ComplexScalar, ComplexMatrix)> {
    let h_f = frobenius(&pair.th);
    let s_f = frobenius(&pair.ts);
    let scale = tol * (1.0 + h_f + s_f);
    let n = pair.dim();

    if h_f <= scale {
        if s_f <= scale {
            return Some((ComplexScalar::new(0.0, 0.0), ComplexMatrix::zeros(n)));
        }
        return Some((ComplexScalar::new(0.0, 1.0), pair.ts.clone()));
    }

    // For Hermitian pairs the Frobenius inner product is real.
    let t = pair.th.frobenius_inner(&pair.ts).ok()?.re / (h_f * h_f);
    let residual = frobenius(&pair.th.real_combination(-t, &pair.ts, 1.0).ok()?);
    (residual <= scale).then(|| (ComplexScalar::new(1.0, t), pair.th.clone()))
}

/// Slabs `|x| ≤ ‖T_H‖` and `|y| ≤ ‖T_S‖`.
pub fn rectangle(pair: &CartesianPair, kind: NormKind) -> Result<[HalfPlane; 2]> {
    Ok([
        HalfPlane::new(1.0, 0.0, norm(&pair.th, kind)?)?,
        HalfPlane::new(0.0, 1.0, norm(&pair.ts, kind)?)?,
    ])
}

/// Slabs `|αx + βy| ≤ ‖αT_H + βT_S‖` and `|γx − δy| ≤ ‖γT_H − δT_S‖`.
pub fn parallelogram(
    pair: &CartesianPair,
    kind: NormKind,
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
) -> Result<[HalfPlane; 2]> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("delta", delta)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::InvalidSlabs(format!("{name} must be positive, got {v}")));
        }
    }
    let c1 = norm(&pair.combination(alpha, beta), kind)?;
    let c2 = norm(&pair.combination(gamma, -delta), kind)?;
    let eps = dedup_epsilon(&pair.reconstruct(), kind)?;
    if c1 <= eps || c2 <= eps {
        return Err(Error::DegenerateOperator);
    }
    Ok([HalfPlane::new(alpha, beta, c1)?, HalfPlane::new(gamma, -delta, c2)?])
}

/// `1e-9 · (1 + ‖T‖)` in the chosen norm.
pub fn dedup_epsilon(t: &ComplexMatrix, kind: NormKind) -> Result<f64> {
    Ok(DEDUP_RTOL * (1.0 + norm(t, kind)?))
}

/// Intersects up to four slabs by successive half-plane clipping.
///
/// The first two slabs must not be parallel; their intersection is the
/// starting parallelogram.
pub fn clip_intersection(slabs: &[HalfPlane], dedup_eps: f64) -> Result<EnclosureRegion> {
    if slabs.len() < 2 {
        return Err(Error::InvalidSlabs("need at least two slabs".into()));
    }
    if slabs.len() > 4 {
        return Err(Error::InvalidSlabs("at most four slab directions are supported".into()));
    }
    let (s1, s2) = (slabs[0], slabs[1]);
    let det = s1.a * s2.b - s1.b * s2.a;
    if det.abs() <= f64::EPSILON * s1.a.hypot(s1.b) * s2.a.hypot(s2.b) {
        return Err(Error::InvalidSlabs("first two slabs are parallel".into()));
    }
    // Corner where a1 x + b1 y = σ1 c1 and a2 x + b2 y = σ2 c2.
    let corner = |sig1: f64, sig2: f64| -> Point {
        let r1 = sig1 * s1.c;
        let r2 = sig2 * s2.c;
        ((r1 * s2.b - s1.b * r2) / det, (s1.a * r2 - r1 * s2.a) / det)
    };
    let mut poly = vec![
        corner(1.0, 1.0),
        corner(-1.0, 1.0),
        corner(-1.0, -1.0),
        corner(1.0, -1.0),
    ];
    if signed_area(&poly) < 0.0 {
        poly.reverse();
    }

    for slab in &slabs[2..] {
        poly = clip_half_plane(&poly, slab.a, slab.b, slab.c);
        poly = clip_half_plane(&poly, -slab.a, -slab.b, slab.c);
        if poly.is_empty() {
            return Err(Error::EmptyIntersection);
        }
    }

    let vertices = dedup_cyclic(poly, dedup_eps);
    match PolygonClass::from_vertex_count(vertices.len()) {
        Some(class) => Ok(EnclosureRegion::Polygon { vertices, class }),
        None if vertices.len() < 3 => Err(Error::DegenerateOperator),
        None => Err(Error::InvalidSlabs(format!(
            "intersection has {} vertices",
            vertices.len()
        ))),
    }
}

/// Sutherland–Hodgman step keeping `a x + b y ≤ c`.
fn clip_half_plane(poly: &[Point], a: f64, b: f64, c: f64) -> Vec<Point> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 2);
    for i in 0..n {
        let p = poly[i];
        let q = poly[(i + 1) % n];
        let fp = a * p.0 + b * p.1 - c;
        let fq = a * q.0 + b * q.1 - c;
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn signed_area(poly: &[Point]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (x0, y0) = poly[i];
            let (x1, y1) = poly[(i + 1) % n];
            x0 * y1 - x1 * y0
        })
        .sum::<f64>()
        * 0.5
}

/// Merges cyclically consecutive vertices closer than `eps`.
fn dedup_cyclic(poly: Vec<Point>, eps: f64) -> Vec<Point> {
    let close = |p: Point, q: Point| (p.0 - q.0).hypot(p.1 - q.1) <= eps;
    let mut out: Vec<Point> = Vec::with_capacity(poly.len());
    for p in poly {
        if out.last().is_none_or(|&q| !close(p, q)) {
            out.push(p);
        }
    }
    while out.len() > 1 && close(out[0], out[out.len() - 1]) {
        out.pop();
    }
    out
}

/// The all-ones polygon from its eight closed-form vertices, or the segment
/// `±c‖Q‖_σ` when `T = cQ` with `Q` self-adjoint.
pub fn octagon_closed_form(pair: &CartesianPair, kind: NormKind) -> Result<EnclosureRegion> {
    if let Some(segment) = degenerate_segment(pair)? {
        return Ok(segment);
    }
    let n = SlabNorms::compute(pair, kind)?;
    let eps = dedup_epsilon(&pair.reconstruct(), kind)?;
    Ok(polygon_from_norms(&n, eps))
}

/// `Some(Segment)` in the degenerate case. The endpoint always uses the
/// spectral norm of `Q`.
pub fn degenerate_segment(pair: &CartesianPair) -> Result<Option<EnclosureRegion>> {
    match degenerate_multiple(pair, DEGENERATE_TOL) {
        Some((c, q)) => {
            let q_norm = norm(&q, NormKind::Spectral)?;
            Ok(Some(EnclosureRegion::Segment { endpoint: c * q_norm }))
        }
        None => Ok(None),
    }
}

/// Builds the polygon from the four slab norms.
///
/// Vertices run counterclockwise starting on the top side.
pub fn polygon_from_norms(n: &SlabNorms, dedup_eps: f64) -> EnclosureRegion {
    let top_right = (n.sum - n.s, n.s); // L1 ∩ top
    let top_left = (n.s - n.diff, n.s); // L4 ∩ top
    let right_low = (n.h, n.h - n.diff); // L3 ∩ right
    let right_high = (n.h, n.sum - n.h); // L1 ∩ right
    let neg = |(x, y): Point| (-x, -y);
    let raw = vec![
        top_right,
        top_left,
        neg(right_low),
        neg(right_high),
        neg(top_right),
        neg(top_left),
        right_low,
        right_high,
    ];
    let vertices = dedup_cyclic(raw, dedup_eps);
    match PolygonClass::from_vertex_count(vertices.len()) {
        Some(class) => EnclosureRegion::Polygon { vertices, class },
        // Everything collapsed onto a segment; report its far end.
        None => {
            let far = vertices
                .iter()
                .copied()
                .max_by(|p, q| p.0.hypot(p.1).total_cmp(&q.0.hypot(q.1)))
                .unwrap_or((0.0, 0.0));
            EnclosureRegion::Segment {
                endpoint: ComplexScalar::new(far.0, far.1),
            }
        }
    }
}

/// Intersection of the rectangle with the all-ones parallelogram via clipping.
pub fn clipped_enclosure(pair: &CartesianPair, kind: NormKind) -> Result<EnclosureRegion> {
    let eps = dedup_epsilon(&pair.reconstruct(), kind)?;
    let rect = rectangle(pair, kind)?;
    let para = parallelogram(pair, kind, 1.0, 1.0, 1.0, 1.0)?;
    clip_intersection(&[rect[0], rect[1], para[0], para[1]], eps)
}

/// The radius bound `sqrt(max(η₁² + ‖T_H‖², η₂² + ‖T_S‖²))`.
pub fn corollary_radius_bound(pair: &CartesianPair, kind: NormKind) -> Result<RadiusBoundDetail> {
    if degenerate_multiple(pair, DEGENERATE_TOL).is_some() {
        return Err(Error::DegenerateOperator);
    }
    Ok(radius_bound_from_norms(&SlabNorms::compute(pair, kind)?))
}

pub fn radius_bound_from_norms(n: &SlabNorms) -> RadiusBoundDetail {
    let eta1 = (n.sum - n.h).abs().max((n.diff - n.h).abs());
    let eta2 = (n.sum - n.s).abs().max((n.diff - n.s).abs());
    let bound = (eta1 * eta1 + n.h * n.h).max(eta2 * eta2 + n.s * n.s).sqrt();
    RadiusBoundDetail { eta1, eta2, bound }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cartesian_split;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    fn shift() -> CartesianPair {
        cartesian_split(&ComplexMatrix::from_real_rows(&[[0.0, 1.0], [0.0, 0.0]]).unwrap())
    }

    fn diag_pair() -> CartesianPair {
        cartesian_split(&ComplexMatrix::from_diagonal(&[c(1.0, 1.0), c(0.0, -0.5)]).unwrap())
    }

    fn has_vertex(vs: &[Point], p: Point, tol: f64) -> bool {
        vs.iter().any(|v| (v.0 - p.0).abs() <= tol && (v.1 - p.1).abs() <= tol)
    }

    #[test]
    fn degenerate_detection() {
        let (c0, q) = degenerate_multiple(&cartesian_split(&ComplexMatrix::identity(3)), 1e-10).unwrap();
        assert_eq!(c0, c(1.0, 0.0));
        assert_eq!(q, ComplexMatrix::identity(3));

        let swap = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let t = swap.scale(c(1.0, 1.0));
        let (c1, q1) = degenerate_multiple(&cartesian_split(&t), 1e-10).unwrap();
        assert!((c1 - c(1.0, 1.0)).norm() < 1e-15);
        assert_eq!(q1, swap);

        assert!(degenerate_multiple(&shift(), 1e-10).is_none());

        let (cz, qz) = degenerate_multiple(&cartesian_split(&ComplexMatrix::zeros(2)), 1e-10).unwrap();
        assert_eq!(cz, c(0.0, 0.0));
        assert!(qz.is_zero());

        let t = swap.scale(c(0.0, 2.0));
        let (ci, qi) = degenerate_multiple(&cartesian_split(&t), 1e-10).unwrap();
        assert_eq!(ci, c(0.0, 1.0));
        assert_eq!(qi, swap.scale_real(2.0));
    }

    #[test]
    fn rectangle_examples() {
        let r = rectangle(&shift(), NormKind::Spectral).unwrap();
        assert!((r[0].c - 0.5).abs() < 1e-15 && (r[1].c - 0.5).abs() < 1e-15);

        let t = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [0.0, 0.0]]).unwrap();
        let r = rectangle(&cartesian_split(&t), NormKind::Spectral).unwrap();
        assert!((r[0].c - (1.0 + SQRT2) / 2.0).abs() < 1e-14);
        assert!((r[1].c - 0.5).abs() < 1e-14);

        let h = ComplexMatrix::from_real_rows(&[[2.0, 1.0], [1.0, -1.0]]).unwrap();
        let r = rectangle(&cartesian_split(&h), NormKind::Spectral).unwrap();
        assert_eq!(r[1].c, 0.0);
    }

    #[test]
    fn parallelogram_examples() {
        let p = parallelogram(&shift(), NormKind::Spectral, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((p[0].c - SQRT2 / 2.0).abs() < 1e-14);
        assert!((p[1].c - SQRT2 / 2.0).abs() < 1e-14);
        assert_eq!((p[1].a, p[1].b), (1.0, -1.0));

        let p = parallelogram(&diag_pair(), NormKind::Spectral, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert!((p[0].c - 2.0).abs() < 1e-14);
        assert!((p[1].c - 0.5).abs() < 1e-14);

        // Common positive scaling leaves the unit offsets unchanged.
        let q = parallelogram(&diag_pair(), NormKind::Spectral, 3.0, 3.0, 3.0, 3.0).unwrap();
        assert!((q[0].unit_offset() - p[0].unit_offset()).abs() < 1e-14);
        assert!((q[1].unit_offset() - p[1].unit_offset()).abs() < 1e-14);
    }

    #[test]
    fn parallelogram_rejects_bad_parameters_and_degenerate() {
        assert!(parallelogram(&shift(), NormKind::Spectral, 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(parallelogram(&shift(), NormKind::Spectral, 1.0, 1.0, -1.0, 1.0).is_err());
        // T = (1 - i) Q makes T_H - T_S vanish.
        let q = ComplexMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 0.0]]).unwrap();
        let pair = cartesian_split(&q.scale(c(1.0, 1.0)));
        assert_eq!(
            parallelogram(&pair, NormKind::Spectral, 1.0, 1.0, 1.0, 1.0),
            Err(Error::DegenerateOperator)
        );
    }

    #[test]
    fn clip_unit_square() {
        let slabs = [
            HalfPlane::new(1.0, 0.0, 1.0).unwrap(),
            HalfPlane::new(0.0, 1.0, 1.0).unwrap(),
        ];
        let region = clip_intersection(&slabs, 1e-9).unwrap();
        let EnclosureRegion::Polygon { vertices, class } = region else {
            panic!()
        };
        assert_eq!(class, PolygonClass::Quadrilateral);
        for p in [(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)] {
            assert!(has_vertex(&vertices, p, 0.0));
        }
        assert!(signed_area(&vertices) > 0.0);
    }

    #[test]
    fn clip_shift_octagon() {
        let region = clipped_enclosure(&shift(), NormKind::Spectral).unwrap();
        let EnclosureRegion::Polygon { vertices, class } = region else {
            panic!()
        };
        assert_eq!(class, PolygonClass::Octagon);
        let k = (SQRT2 - 1.0) / 2.0;
        for sx in [1.0, -1.0] {
            for sy in [1.0, -1.0] {
                assert!(has_vertex(&vertices, (0.5 * sx, k * sy), 1e-12));
                assert!(has_vertex(&vertices, (k * sx, 0.5 * sy), 1e-12));
            }
        }
    }

    #[test]
    fn clip_diagonal_hexagon() {
        let region = clipped_enclosure(&diag_pair(), NormKind::Spectral).unwrap();
        let EnclosureRegion::Polygon { vertices, class } = region else {
            panic!()
        };
        assert_eq!(class, PolygonClass::Hexagon);
        for p in [
            (0.5, 1.0),
            (1.0, 1.0),
            (1.0, 0.5),
            (-0.5, -1.0),
            (-1.0, -1.0),
            (-1.0, -0.5),
        ] {
            assert!(has_vertex(&vertices, p, 1e-12), "missing {p:?} in {vertices:?}");
        }
    }

    #[test]
    fn clip_errors() {
        let x = HalfPlane::new(1.0, 0.0, 1.0).unwrap();
        assert!(clip_intersection(&[x], 1e-9).is_err());
        assert!(clip_intersection(&[x, x], 1e-9).is_err());
        assert!(HalfPlane::new(0.0, 0.0, 1.0).is_err());
        assert!(HalfPlane::new(1.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let region = octagon_closed_form(&shift(), NormKind::Spectral).unwrap();
        let EnclosureRegion::Polygon { vertices, class } = &region else {
            panic!()
        };
        assert_eq!(*class, PolygonClass::Octagon);
        assert!(has_vertex(vertices, (-0.207107, 0.5), 1e-6));
        assert!(has_vertex(vertices, (0.5, 0.207107), 1e-6));
        assert!(signed_area(vertices) > 0.0);

        let seg = octagon_closed_form(&cartesian_split(&ComplexMatrix::identity(2)), NormKind::Spectral).unwrap();
        assert_eq!(seg, EnclosureRegion::Segment { endpoint: c(1.0, 0.0) });

        let hex = octagon_closed_form(&diag_pair(), NormKind::Spectral).unwrap();
        assert_eq!(hex.kind_name(), "hexagon");
        assert_eq!(hex.vertices().len(), 6);
    }

    #[test]
    fn zero_operator_is_a_point() {
        let region = octagon_closed_form(&cartesian_split(&ComplexMatrix::zeros(3)), NormKind::Spectral).unwrap();
        assert_eq!(region, EnclosureRegion::Segment { endpoint: c(0.0, 0.0) });
    }

    #[test]
    fn segment_uses_spectral_norm_for_any_kind() {
        let q = ComplexMatrix::from_real_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let pair = cartesian_split(&q.scale(c(0.0, 1.0)));
        for kind in NormKind::ALL {
            let EnclosureRegion::Segment { endpoint } = octagon_closed_form(&pair, kind).unwrap() else {
                panic!()
            };
            assert!((endpoint - c(0.0, 2.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn radius_bound_examples() {
        let d = corollary_radius_bound(&shift(), NormKind::Spectral).unwrap();
        let k = (SQRT2 - 1.0) / 2.0;
        assert!((d.eta1 - k).abs() < 1e-14 && (d.eta2 - k).abs() < 1e-14);
        assert!((d.bound - 0.541196).abs() < 1e-6);
        assert!((d.bound - (k * k + 0.25).sqrt()).abs() < 1e-14);

        let d = corollary_radius_bound(&diag_pair(), NormKind::Spectral).unwrap();
        assert!((d.eta1 - 1.0).abs() < 1e-14);
        assert!((d.eta2 - 1.0).abs() < 1e-14);
        assert!((d.bound - SQRT2).abs() < 1e-14);

        let h = ComplexMatrix::from_real_rows(&[[1.0, 2.0], [2.0, 0.0]]).unwrap();
        assert_eq!(
            corollary_radius_bound(&cartesian_split(&h), NormKind::Spectral),
            Err(Error::DegenerateOperator)
        );
    }

    #[test]
    fn closed_form_in_other_norms_matches_clipping() {
        let t = ComplexMatrix::from_rows(&[
            [c(1.0, 2.0), c(-1.0, 0.5), c(0.0, 1.0)],
            [c(0.3, -1.0), c(2.0, 0.0), c(1.5, 1.5)],
            [c(-2.0, 0.0), c(0.0, -0.7), c(-1.0, 1.0)],
        ])
        .unwrap();
        let pair = cartesian_split(&t);
        for kind in NormKind::ALL {
            let a = octagon_closed_form(&pair, kind).unwrap().vertices();
            let b = clipped_enclosure(&pair, kind).unwrap().vertices();
            assert_eq!(a.len(), b.len(), "{kind}");
            for p in &a {
                assert!(has_vertex(&b, *p, 1e-12), "{kind}: {p:?} not in {b:?}");
            }
        }
    }
}

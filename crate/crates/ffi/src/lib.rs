//! C ABI over the `numrange` library.
//!
//! Matrices live behind an opaque [`NrMatrix`] handle created by
//! [`nr_matrix_new`] or [`nr_matrix_parse`] and released with
//! [`nr_matrix_free`]. Every fallible call returns an [`NrStatus`]; on failure
//! a description is available from [`nr_last_error_message`] on the same
//! thread. Panics never cross the boundary; they surface as
//! [`NrStatus::Internal`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use numrange::bounds::bound_report;
use numrange::cli::io::parse_matrix;
use numrange::enclosure::{octagon_closed_form, EnclosureRegion, PolygonClass};
use numrange::linalg::{cartesian_split, norm, ComplexMatrix, ComplexScalar, NormKind};
use numrange::oracle::{distance_outside, fov_sample};
use numrange::Error;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    ZeroOperator = 4,
    Degenerate = 5,
    NotConverged = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NrNorm {
    Spectral = 0,
    InducedOne = 1,
    InducedInf = 2,
    Frobenius = 3,
}

impl From<NrNorm> for NormKind {
    fn from(n: NrNorm) -> Self {
        match n {
            NrNorm::Spectral => NormKind::Spectral,
            NrNorm::InducedOne => NormKind::InducedOne,
            NrNorm::InducedInf => NormKind::InducedInf,
            NrNorm::Frobenius => NormKind::Frobenius,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NrRegionKind {
    Segment = 0,
    Quadrilateral = 1,
    Hexagon = 2,
    Octagon = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NrPoint {
    pub x: f64,
    pub y: f64,
}

/// Numerical-radius bounds for one matrix. `eta1` and `eta2` are NaN when
/// the matrix is a complex multiple of a Hermitian one.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NrBoundReport {
    pub spectral_norm: f64,
    pub classical: f64,
    pub kittaneh_power: f64,
    pub kittaneh_mean: f64,
    pub corollary: f64,
    pub eta1: f64,
    pub eta2: f64,
}

/// Enclosing region. Polygons list `vertex_count` vertices counterclockwise;
/// a segment stores its two endpoints.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NrEnclosure {
    pub kind: NrRegionKind,
    pub vertex_count: usize,
    pub vertices: [NrPoint; 8],
}

/// Opaque matrix handle.
pub struct NrMatrix {
    inner: ComplexMatrix,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NrStatus {
    match e {
        Error::Parse { .. } => NrStatus::Parse,
        Error::ZeroOperator => NrStatus::ZeroOperator,
        Error::DegenerateOperator | Error::EmptyIntersection => NrStatus::Degenerate,
        Error::Convergence { .. } => NrStatus::NotConverged,
        Error::Dimension { .. }
        | Error::InvalidMatrix(_)
        | Error::Normalization { .. }
        | Error::NotHermitian { .. }
        | Error::InvalidSlabs(_) => NrStatus::InvalidArgument,
    }
}

struct Failure(NrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(NrStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `body`, records any failure and converts panics.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> NrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => NrStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {message}"));
            NrStatus::Internal
        }
    }
}

unsafe fn matrix_ref<'a>(m: *const NrMatrix) -> Result<&'a ComplexMatrix, Failure> {
    m.as_ref().map(|m| &m.inner).ok_or_else(|| null("matrix"))
}

fn publish(matrix: ComplexMatrix, out: *mut *mut NrMatrix) {
    let handle = Box::into_raw(Box::new(NrMatrix { inner: matrix }));
    // SAFETY: callers check `out` for NULL before building the matrix.
    unsafe { *out = handle };
}

/// Builds a `dim x dim` matrix from `len = 2 * dim * dim` doubles holding
/// row-major entries as interleaved (real, imaginary) pairs.
///
/// # Safety
/// `data` must point to `len` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_new(dim: usize, data: *const f64, len: usize, out: *mut *mut NrMatrix) -> NrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        if data.is_null() {
            return Err(null("data"));
        }
        let expected = dim
            .checked_mul(dim)
            .and_then(|n| n.checked_mul(2))
            .ok_or_else(|| Failure(NrStatus::InvalidArgument, format!("dimension {dim} overflows")))?;
        if len != expected {
            return Err(Failure(
                NrStatus::InvalidArgument,
                format!("expected {expected} doubles for dimension {dim}, got {len}"),
            ));
        }
        let values = std::slice::from_raw_parts(data, len);
        let entries = values.chunks_exact(2).map(|c| ComplexScalar::new(c[0], c[1])).collect();
        publish(ComplexMatrix::from_row_major(dim, entries)?, out);
        Ok(())
    })
}

/// Parses a matrix from a NUL-terminated UTF-8 string, either the JSON form
/// `{"dim": n, "entries": [[re, im], ...]}` or whitespace-separated rows of
/// complex tokens such as `2-4i`.
///
/// # Safety
/// `text` must be a valid C string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_parse(text: *const c_char, out: *mut *mut NrMatrix) -> NrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(NrStatus::Parse, format!("input is not UTF-8: {e}")))?;
        publish(parse_matrix(text)?, out);
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `m` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_free(m: *mut NrMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Matrix dimension, or 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nr_matrix_dim(m: *const NrMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.dim())
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_norm(m: *const NrMatrix, kind: NrNorm, out: *mut f64) -> NrStatus {
    guard(|| {
        let t = matrix_ref(m)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = norm(t, kind.into())?;
        Ok(())
    })
}

/// Fills `out` with all four numerical-radius bounds.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_bound_report(m: *const NrMatrix, out: *mut NrBoundReport) -> NrStatus {
    guard(|| {
        let t = matrix_ref(m)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let r = bound_report(t)?;
        let (eta1, eta2) = r.corollary_detail.map_or((f64::NAN, f64::NAN), |d| (d.eta1, d.eta2));
        *out = NrBoundReport {
            spectral_norm: r.spectral_norm,
            classical: r.classical,
            kittaneh_power: r.kittaneh_power,
            kittaneh_mean: r.kittaneh_mean,
            corollary: r.corollary,
            eta1,
            eta2,
        };
        Ok(())
    })
}

fn to_ffi(region: &EnclosureRegion) -> NrEnclosure {
    let kind = match region {
        EnclosureRegion::Segment { .. } => NrRegionKind::Segment,
        EnclosureRegion::Polygon { class, .. } => match class {
            PolygonClass::Quadrilateral => NrRegionKind::Quadrilateral,
            PolygonClass::Hexagon => NrRegionKind::Hexagon,
            PolygonClass::Octagon => NrRegionKind::Octagon,
        },
    };
    let points = region.vertices();
    let mut vertices = [NrPoint::default(); 8];
    for (slot, (x, y)) in vertices.iter_mut().zip(&points) {
        *slot = NrPoint { x: *x, y: *y };
    }
    NrEnclosure {
        kind,
        vertex_count: points.len(),
        vertices,
    }
}

/// Computes the polygon (or segment) enclosing the numerical range.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_enclosure(m: *const NrMatrix, kind: NrNorm, out: *mut NrEnclosure) -> NrStatus {
    guard(|| {
        let t = matrix_ref(m)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = to_ffi(&octagon_closed_form(&cartesian_split(t), kind.into())?);
        Ok(())
    })
}

/// Numerical radius estimated from a boundary sweep over `angles` directions.
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_oracle_radius(m: *const NrMatrix, angles: usize, out: *mut f64) -> NrStatus {
    guard(|| {
        let t = matrix_ref(m)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if angles == 0 {
            return Err(Failure(NrStatus::InvalidArgument, "angles must be positive".into()));
        }
        *out = fov_sample(t, &cartesian_split(t), angles, 0, 0)?.oracle_radius;
        Ok(())
    })
}

/// Largest distance by which a sampled point of the numerical range lies
/// outside the enclosure (0 when every sample is contained).
///
/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_max_violation(
    m: *const NrMatrix,
    kind: NrNorm,
    angles: usize,
    samples: usize,
    seed: u64,
    out: *mut f64,
) -> NrStatus {
    guard(|| {
        let t = matrix_ref(m)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if angles == 0 {
            return Err(Failure(NrStatus::InvalidArgument, "angles must be positive".into()));
        }
        let pair = cartesian_split(t);
        let region = octagon_closed_form(&pair, kind.into())?;
        let sample = fov_sample(t, &pair, angles, samples, seed)?;
        *out = sample
            .points()
            .map(|p| distance_outside(&region, p))
            .fold(0.0, f64::max);
        Ok(())
    })
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn nr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn nr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::ZeroOperator), NrStatus::ZeroOperator);
        assert_eq!(status_of(&Error::InvalidMatrix("x".into())), NrStatus::InvalidArgument);
        assert_eq!(
            status_of(&Error::Convergence { sweeps: 60, off: 1.0 }),
            NrStatus::NotConverged
        );
    }

    #[test]
    fn panics_become_internal_errors() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, NrStatus::Internal);
        let msg = unsafe { CStr::from_ptr(nr_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "internal error: boom");
    }

    #[test]
    fn success_clears_the_last_error() {
        set_error("stale".into());
        assert_eq!(guard(|| Ok(())), NrStatus::Ok);
        assert!(nr_last_error_message().is_null());
    }
}

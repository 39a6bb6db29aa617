//! C ABI for the octonionic eigensolver.
//!
//! Matrices and spectra live behind opaque handles; every function returns
//! an [`OcteigStatus`] and writes results through out-pointers. Octonions
//! cross the boundary as 8 doubles on the basis `(1, i, j, k, l, il, jl,
//! kl)`, octonionic 3-vectors as 24 doubles, component-major.
//!
//! The generated header is written to `include/octeig.h` at build time.

use octeig::eigensolve::{self, Spectrum3};
use octeig::embed;
use octeig::hermitian::{Herm2, Herm3, OctVec};
use octeig::octonion::Octonion;
use std::slice;

/// Result codes for every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OcteigStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was outside its domain (bad index, bad dimension).
    InvalidArgument = 2,
    /// The solver reported a defect; no result was produced.
    SolverFailure = 3,
}

/// Opaque handle to a 3x3 octonionic Hermitian matrix.
pub struct OcteigHerm3 {
    inner: Herm3,
}

/// Opaque handle to a solved spectrum (one or two eigenvalue families).
pub struct OcteigSpectrum {
    inner: Spectrum3,
}

unsafe fn read_oct(ptr: *const f64) -> Octonion {
    let mut c = [0.0; 8];
    c.copy_from_slice(slice::from_raw_parts(ptr, 8));
    Octonion::new(c)
}

unsafe fn write_slice(dst: *mut f64, src: &[f64]) {
    std::ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
}

/// Create a 3x3 Hermitian matrix from its diagonal (3 doubles) and the
/// off-diagonal octonions `a`, `b`, `c` (8 doubles each). The caller owns
/// the handle and must release it with [`octeig_herm3_free`].
///
/// # Safety
/// `diag` must point to 3 readable doubles, `a`, `b`, `c` to 8 each, and
/// `out` must be a valid destination for one pointer.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_new(
    diag: *const f64,
    a: *const f64,
    b: *const f64,
    c: *const f64,
    out: *mut *mut OcteigHerm3,
) -> OcteigStatus {
    if diag.is_null() || a.is_null() || b.is_null() || c.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let d = slice::from_raw_parts(diag, 3);
    if d.iter().any(|x| !x.is_finite()) {
        return OcteigStatus::InvalidArgument;
    }
    let h = Herm3::new(d[0], d[1], d[2], read_oct(a), read_oct(b), read_oct(c));
    *out = Box::into_raw(Box::new(OcteigHerm3 { inner: h }));
    OcteigStatus::Ok
}

/// Release a matrix handle. Null is a no-op.
///
/// # Safety
/// `h` must have come from [`octeig_herm3_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_free(h: *mut OcteigHerm3) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Write the two roots of `r² + 4Φ r − |[a,b,c]|² = 0` (descending) to
/// `out[0..2]`.
///
/// # Safety
/// `h` must be a live handle; `out` must hold 2 doubles.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_r_roots(
    h: *const OcteigHerm3,
    out: *mut f64,
) -> OcteigStatus {
    if h.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let (rp, rm) = eigensolve::r_roots(&(*h).inner);
    write_slice(out, &[rp, rm]);
    OcteigStatus::Ok
}

/// Write trace, sigma and determinant to `out[0..3]`.
///
/// # Safety
/// `h` must be a live handle; `out` must hold 3 doubles.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_invariants(
    h: *const OcteigHerm3,
    out: *mut f64,
) -> OcteigStatus {
    if h.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let a = &(*h).inner;
    write_slice(out, &[a.trace(), a.sigma(), a.det()]);
    OcteigStatus::Ok
}

/// Largest coefficient of `A³ − (tr A)A² + σ(A)A − (det A)I`.
///
/// # Safety
/// `h` must be a live handle; `out` must hold 1 double.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_char_residual(
    h: *const OcteigHerm3,
    out: *mut f64,
) -> OcteigStatus {
    if h.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    *out = (*h).inner.char_residual();
    OcteigStatus::Ok
}

/// Solve the real right-eigenvalue problem. On success the caller owns the
/// spectrum handle and must release it with [`octeig_spectrum_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_solve(
    h: *const OcteigHerm3,
    out: *mut *mut OcteigSpectrum,
) -> OcteigStatus {
    if h.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    match eigensolve::solve3(&(*h).inner) {
        Ok(spec) => {
            *out = Box::into_raw(Box::new(OcteigSpectrum { inner: spec }));
            OcteigStatus::Ok
        }
        Err(_) => OcteigStatus::SolverFailure,
    }
}

/// Release a spectrum handle. Null is a no-op.
///
/// # Safety
/// `s` must have come from [`octeig_herm3_solve`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_free(s: *mut OcteigSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of families: 2 generically, 1 for complex-type input whose two
/// `r` roots coincide.
///
/// # Safety
/// `s` must be a live handle; `out` must hold one `size_t`.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_family_count(
    s: *const OcteigSpectrum,
    out: *mut usize,
) -> OcteigStatus {
    if s.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    *out = (*s).inner.families.len();
    OcteigStatus::Ok
}

/// Whether the spectrum is a doubled single family (complex-type input).
///
/// # Safety
/// `s` must be a live handle; `out` must hold one `bool`.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_is_doubled(
    s: *const OcteigSpectrum,
    out: *mut bool,
) -> OcteigStatus {
    if s.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    *out = (*s).inner.doubled;
    OcteigStatus::Ok
}

/// The family's root `r` of the modified characteristic equation.
///
/// # Safety
/// `s` must be a live handle; `out` must hold 1 double.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_r_value(
    s: *const OcteigSpectrum,
    family: usize,
    out: *mut f64,
) -> OcteigStatus {
    if s.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let spec = &(*s).inner;
    match spec.families.get(family) {
        Some(f) => {
            *out = f.r;
            OcteigStatus::Ok
        }
        None => OcteigStatus::InvalidArgument,
    }
}

/// The family's three eigenvalues, ascending, written to `out[0..3]`.
///
/// # Safety
/// `s` must be a live handle; `out` must hold 3 doubles.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_eigenvalues(
    s: *const OcteigSpectrum,
    family: usize,
    out: *mut f64,
) -> OcteigStatus {
    if s.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let spec = &(*s).inner;
    match spec.families.get(family) {
        Some(f) => {
            write_slice(out, &f.lambdas);
            OcteigStatus::Ok
        }
        None => OcteigStatus::InvalidArgument,
    }
}

/// One unit eigenvector of the family (index 0..3, matching the ascending
/// eigenvalues), written as 24 doubles: three octonions, component-major.
///
/// # Safety
/// `s` must be a live handle; `out` must hold 24 doubles.
#[no_mangle]
pub unsafe extern "C" fn octeig_spectrum_eigenvector(
    s: *const OcteigSpectrum,
    family: usize,
    index: usize,
    out: *mut f64,
) -> OcteigStatus {
    if s.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let spec = &(*s).inner;
    let fam = match spec.families.get(family) {
        Some(f) => f,
        None => return OcteigStatus::InvalidArgument,
    };
    match fam.eigvecs.get(index) {
        Some(v) => {
            write_slice(out, &v.coords());
            OcteigStatus::Ok
        }
        None => OcteigStatus::InvalidArgument,
    }
}

/// The 24 eigenvalues of the real symmetric embedding, ascending, written
/// to `out[0..24]`. This is the brute-force oracle spectrum; each analytic
/// eigenvalue appears with multiplicity 4 (8 for a doubled family).
///
/// # Safety
/// `h` must be a live handle; `out` must hold 24 doubles.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_oracle_spectrum(
    h: *const OcteigHerm3,
    out: *mut f64,
) -> OcteigStatus {
    if h.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    match embed::jacobi_eigen(&embed::embed3(&(*h).inner)) {
        Ok(spec) => {
            write_slice(out, &spec.eigenvalues);
            OcteigStatus::Ok
        }
        Err(_) => OcteigStatus::SolverFailure,
    }
}

/// Residual of `A v = v λ` for a candidate eigenpair: `v` is 24 doubles,
/// `lambda` real.
///
/// # Safety
/// `h` must be a live handle; `v` must hold 24 doubles, `out` 1 double.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm3_eigen_residual(
    h: *const OcteigHerm3,
    v: *const f64,
    lambda: f64,
    out: *mut f64,
) -> OcteigStatus {
    if h.is_null() || v.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let coords = slice::from_raw_parts(v, 24);
    let vec = match OctVec::<3>::from_coords(coords) {
        Ok(v) => v,
        Err(_) => return OcteigStatus::InvalidArgument,
    };
    *out = eigensolve::verify_right_eigen(
        &(*h).inner.to_matrix(),
        &vec,
        Octonion::from_real(lambda),
    );
    OcteigStatus::Ok
}

/// Octonion product `out = a * b`, all three as 8 doubles.
///
/// # Safety
/// `a` and `b` must hold 8 readable doubles each; `out` 8 writable ones.
#[no_mangle]
pub unsafe extern "C" fn octeig_octonion_mul(
    a: *const f64,
    b: *const f64,
    out: *mut f64,
) -> OcteigStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let prod = read_oct(a) * read_oct(b);
    write_slice(out, &prod.c);
    OcteigStatus::Ok
}

/// Eigenvalues of a 2x2 Hermitian matrix `[[p, a], [ā, m]]`, ascending,
/// written to `out[0..2]`.
///
/// # Safety
/// `a` must hold 8 readable doubles; `out` 2 writable ones.
#[no_mangle]
pub unsafe extern "C" fn octeig_herm2_eigenvalues(
    p: f64,
    m: f64,
    a: *const f64,
    out: *mut f64,
) -> OcteigStatus {
    if a.is_null() || out.is_null() {
        return OcteigStatus::NullPointer;
    }
    let h = Herm2::new(p, m, read_oct(a));
    let (lo, hi) = eigensolve::eigenvalues2(&h);
    write_slice(out, &[lo, hi]);
    OcteigStatus::Ok
}

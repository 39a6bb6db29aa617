//! The real right-eigenvalue solver: `A v = v λ` with `λ ∈ ℝ`.
//!
//! For a 3x3 Hermitian `A` the real eigenvalues do **not** satisfy the
//! characteristic equation. They satisfy the modified one,
//!
//! ```text
//! λ³ − (tr A) λ² + σ(A) λ − det A = r ,
//! r² + 4 Φ(a,b,c) r − |[a,b,c]|² = 0 ,
//! ```
//!
//! three eigenvalues per root `r` (a *family*). Eigenvectors of distinct
//! eigenvalues in one family are orthogonal in the generalized sense
//! `(v v†) w = 0`, each family's triple satisfies `Σ vᵢvᵢ† = I`, and
//! `A = Σ λᵢ vᵢvᵢ†` family by family.
//!
//! Eigenvector route: the analytic 4-parameter form of the `z` component,
//!
//! ```text
//! z = (α a + β b + γ c + δ)(1 + [a,b,c] r / |[a,b,c]|²) ,
//! ```
//!
//! with `x, y` recovered by back-substitution through the row equations.
//! Whenever that construction degenerates (vanishing associator, vanishing
//! back-substitution denominators, repeated eigenvalues) the solver falls
//! back to kernel extraction in the 24-dimensional real embedding, selecting
//! the family through the `r`-value each eigenvector component carries.

use crate::cubic;
use crate::embed::{jacobi_eigen, kernel_basis, RealSpectrum};
use crate::hermitian::{outer, Herm2, Herm3, OctMatrix, OctVec, OctVec2, OctVec3};
use crate::octonion::{associator, Octonion};
use crate::{Error, Result};

/// Residual tolerance for the eigen equation, per unit eigenvector.
pub fn eigen_tol(a: &Herm3) -> f64 {
    1e-9 * (1.0 + a.max_coeff_norm())
}

/// Residual tolerance for decomposition-level identities.
pub fn recon_tol(a: &Herm3) -> f64 {
    1e-8 * (1.0 + a.max_coeff_norm())
}

fn repeat_tol(a: &Herm3) -> f64 {
    1e-7 * (1.0 + a.max_coeff_norm())
}

/// One family: a root `r` of the quadratic, its three eigenvalues in
/// ascending order, and an orthonormal (in the generalized sense)
/// eigenvector triple.
#[derive(Clone, Debug)]
pub struct Family {
    pub r: f64,
    pub lambdas: [f64; 3],
    pub eigvecs: [OctVec3; 3],
}

/// Both families of a 3x3 Hermitian matrix.
///
/// `doubled` marks complex-type inputs whose two `r` roots coincide at zero;
/// those carry a single family whose eigenvalues each have real multiplicity
/// 8 in the embedding rather than 4.
#[derive(Clone, Debug)]
pub struct Spectrum3 {
    pub families: Vec<Family>,
    pub doubled: bool,
}

/// A 2x2 eigenpair with real eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenPair2 {
    pub lambda: f64,
    pub v: OctVec2,
}

/// Both eigenpairs of a 2x2 Hermitian matrix, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct Spectrum2 {
    pub pairs: [EigenPair2; 2],
}

/// Roots of `r² + 4Φ(a,b,c) r − |[a,b,c]|² = 0`, returned as
/// `(r₊, r₋)` with `r₊ ≥ r₋`. The discriminant `16Φ² + 4|[a,b,c]|²` is
/// nonnegative, so both roots are always real; their sum is `−4Φ` and their
/// product `−|[a,b,c]|²`. A vanishing associator forces one exact zero root.
pub fn r_roots(a: &Herm3) -> (f64, f64) {
    let phi4 = 4.0 * a.phi();
    let asq = associator(a.a, a.b, a.c).norm_sq();
    if asq == 0.0 {
        let other = -phi4;
        return (other.max(0.0), other.min(0.0));
    }
    let s = (phi4 * phi4 + 4.0 * asq).sqrt();
    // avoid cancellation: compute the large-magnitude root directly and the
    // other through the product of roots
    if phi4 >= 0.0 {
        let rm = 0.5 * (-phi4 - s);
        (-asq / rm, rm)
    } else {
        let rp = 0.5 * (-phi4 + s);
        (rp, -asq / rp)
    }
}

/// The three real roots of `λ³ − (tr A)λ² + σ(A)λ − (det A + r) = 0`,
/// ascending. `r` must be a root from [`r_roots`]; the roots are then
/// guaranteed real by the 24x24 real symmetric embedding.
pub fn family_eigenvalues(a: &Herm3, r: f64) -> Result<[f64; 3]> {
    let (t, s, d) = (a.trace(), a.sigma(), a.det());
    let roots = cubic::roots_real(-t, s, -(d + r));
    let coeff_scale = 1.0 + t.abs() + s.abs() + (d + r).abs();
    for lam in roots {
        let res = ((lam - t) * lam + s) * lam - (d + r);
        let deriv_scale = 1.0 + lam.abs().powi(3);
        if res.abs() > 1e-6 * coeff_scale * deriv_scale {
            return Err(Error::SolverDefect(format!(
                "cubic residual {res} at λ={lam} for r={r}"
            )));
        }
    }
    Ok(roots)
}

/// Eigenvalues of a 2x2 Hermitian matrix, ascending. Always real, and
/// distinct whenever `a ≠ 0`.
pub fn eigenvalues2(a: &Herm2) -> (f64, f64) {
    let t = a.trace();
    let disc = (a.p - a.m) * (a.p - a.m) + 4.0 * a.a.norm_sq();
    let s = disc.sqrt();
    if s == 0.0 {
        return (0.5 * t, 0.5 * t);
    }
    let big = 0.5 * (t + s.copysign(t));
    if big == 0.0 {
        return (0.5 * (t - s), 0.5 * (t + s));
    }
    let other = a.det() / big;
    (big.min(other), big.max(other))
}

/// The eigenvector form `v = (|a|², ā(λ−p))ᵀ ξ` for a 2x2 Hermitian matrix
/// with `a ≠ 0`. Any octonion `ξ` gives an eigenvector; left multiples do
/// not. The `a = 0` diagonal case is rejected (its eigenvectors are the
/// standard basis, handled by [`solve2`]).
pub fn eigenvector2(a: &Herm2, lambda: f64, xi: Octonion) -> Result<OctVec2> {
    if a.a.norm_sq() == 0.0 {
        return Err(Error::InvalidInput(
            "eigenvector form requires a nonzero off-diagonal".into(),
        ));
    }
    let head = Octonion::from_real(a.a.norm_sq());
    let tail = a.a.conj() * (lambda - a.p);
    Ok(OctVec([head * xi, tail * xi]))
}

/// Both eigenpairs of a 2x2 Hermitian matrix, unit eigenvectors, ascending.
pub fn solve2(a: &Herm2) -> Spectrum2 {
    let (lo, hi) = eigenvalues2(a);
    if a.a.norm_sq() == 0.0 {
        let (e0, e1): (OctVec2, OctVec2) = (OctVec::basis(0), OctVec::basis(1));
        let pairs = if a.p <= a.m {
            [
                EigenPair2 { lambda: a.p, v: e0 },
                EigenPair2 { lambda: a.m, v: e1 },
            ]
        } else {
            [
                EigenPair2 { lambda: a.m, v: e1 },
                EigenPair2 { lambda: a.p, v: e0 },
            ]
        };
        return Spectrum2 { pairs };
    }
    let vlo = eigenvector2(a, lo, Octonion::ONE).expect("a != 0").normalized();
    let vhi = eigenvector2(a, hi, Octonion::ONE).expect("a != 0").normalized();
    Spectrum2 {
        pairs: [
            EigenPair2 { lambda: lo, v: vlo },
            EigenPair2 { lambda: hi, v: vhi },
        ],
    }
}

/// Residual of the right eigen equation: largest coefficient of `Av − vλ`.
/// `lambda` may be any octonion, so the pinned non-real fixtures can be
/// verified; the solver itself only produces real eigenvalues.
pub fn verify_right_eigen<const N: usize>(
    m: &OctMatrix<N>,
    v: &OctVec<N>,
    lambda: Octonion,
) -> f64 {
    m.mat_vec(v).sub(&v.right_mul(lambda)).max_abs_coeff()
}

/// Residual of the left eigen equation `Av − λv`.
pub fn verify_left_eigen<const N: usize>(
    m: &OctMatrix<N>,
    v: &OctVec<N>,
    lambda: Octonion,
) -> f64 {
    m.mat_vec(v).sub(&v.left_mul(lambda)).max_abs_coeff()
}

/// Generalized orthogonality `(v v†) w = 0`: the residual is the largest
/// coefficient of `(vv†)w`, and the verdict compares it against a tolerance
/// scaled to the vectors.
pub fn is_orthogonal<const N: usize>(v: &OctVec<N>, w: &OctVec<N>) -> (bool, f64) {
    let residual = ortho_residual(v, w);
    (residual <= 1e-9 * (1.0 + v.norm_sq() * w.norm()), residual)
}

/// Largest coefficient of `(v v†) w`.
pub fn ortho_residual<const N: usize>(v: &OctVec<N>, w: &OctVec<N>) -> f64 {
    outer(v).mat_vec(w).max_abs_coeff()
}

/// Largest coefficient of `(vv†)v − v(v†v)`; zero for every octonionic
/// vector (the vector form of alternativity).
pub fn three_psi_residual<const N: usize>(v: &OctVec<N>) -> f64 {
    outer(v)
        .mat_vec(v)
        .sub(&v.right_mul(v.dagger_dot(v)))
        .max_abs_coeff()
}

/// One Gram-Schmidt step in the generalized sense:
/// `w − (vv†/(v†v)) w`, which is orthogonal to `v` per `(vv†)·(…) = 0`.
/// Only valid in 2 components; the 3-component analogue fails along with
/// the idempotent identity.
pub fn gram_schmidt2(v: &OctVec2, w: &OctVec2) -> Result<OctVec2> {
    let vnorm = v.norm_sq();
    if vnorm == 0.0 {
        return Err(Error::InvalidInput("cannot orthogonalize against zero".into()));
    }
    Ok(w.sub(&outer(v).mat_vec(w).scale(1.0 / vnorm)))
}

/// `X = A − α v v†`: subtracting a multiple of an eigenvector's outer
/// product splits a repeated eigenvalue while keeping (generically) the
/// same eigenvectors. Hermitian for any `v` since `vv†` is.
pub fn repeated_eigen_split(a: &Herm3, v: &OctVec3, alpha: f64) -> Herm3 {
    a.sub_scaled_outer(alpha, v)
}

/// Apply the RReal operator `z ↦ b(a(cz)) + c̄(ā(b̄z)) − [b(ac) + (c̄ā)b̄] z`.
///
/// On the `z` component of a family-`r` eigenvector this acts as
/// multiplication by `r`; cycling `(a,b,c) → (c,a,b) → (b,c,a)` gives the
/// analogous action on the `x` and `y` components.
pub fn rreal_apply(a: Octonion, b: Octonion, c: Octonion, z: Octonion) -> Octonion {
    let t1 = b * (a * (c * z));
    let t2 = c.conj() * (a.conj() * (b.conj() * z));
    let t3 = (b * (a * c) + (c.conj() * a.conj()) * b.conj()) * z;
    t1 + t2 - t3
}

fn rreal_apply_vec(a: &Herm3, v: &OctVec3) -> OctVec3 {
    OctVec([
        rreal_apply(a.c, a.a, a.b, v.0[0]),
        rreal_apply(a.b, a.c, a.a, v.0[1]),
        rreal_apply(a.a, a.b, a.c, v.0[2]),
    ])
}

/// The family label an eigenvector carries: the scalar `r` with
/// `RReal(component) = r·component`, extracted from the vector's largest
/// component.
pub fn rreal_r_value(a: &Herm3, v: &OctVec3) -> f64 {
    let norms = [v.0[0].norm_sq(), v.0[1].norm_sq(), v.0[2].norm_sq()];
    let which = (0..3).max_by(|&i, &j| norms[i].total_cmp(&norms[j])).unwrap();
    let image = rreal_apply_vec(a, v).0[which];
    let comp = v.0[which];
    let dot: f64 = image.c.iter().zip(comp.c.iter()).map(|(x, y)| x * y).sum();
    dot / comp.norm_sq()
}

/// Residual of the identity `[det(λI − A)] z = RReal(z)`: left side minus
/// right side. Near zero whenever `(λ, z)` come from a genuine eigenpair;
/// for quaternionic data the right side vanishes identically and the
/// ordinary characteristic equation is recovered.
pub fn charlam_residual(a: &Herm3, lambda: f64, z: Octonion) -> Octonion {
    let det_shift = ((lambda - a.trace()) * lambda + a.sigma()) * lambda - a.det();
    z * det_shift - rreal_apply(a.a, a.b, a.c, z)
}

// --- eigenvector machinery ---

/// Modified Gram-Schmidt over the real coordinates, with a rank cutoff.
/// Inputs that survive come back orthonormal in the flat `ℝ^{8N}` sense.
fn orthonormalize_coords(inputs: &[Vec<f64>], rank_tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for input in inputs {
        let mut x = input.clone();
        for _ in 0..2 {
            for b in &basis {
                let d: f64 = x.iter().zip(b.iter()).map(|(p, q)| p * q).sum();
                for (xi, bi) in x.iter_mut().zip(b.iter()) {
                    *xi -= d * bi;
                }
            }
        }
        let norm = x.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm > rank_tol {
            for xi in x.iter_mut() {
                *xi /= norm;
            }
            basis.push(x);
        }
    }
    basis
}

/// The analytic eigenvector family at `(λ, r)`: the four unit parameter
/// choices `(α,β,γ,δ) ∈ {e₁..e₄}` of the `z` form, back-substituted and
/// orthonormalized. `None` when the construction degenerates and the kernel
/// route must take over.
fn analytic_family_basis(a: &Herm3, lambda: f64, r: f64) -> Option<Vec<OctVec3>> {
    let scale = 1.0 + a.max_coeff_norm();
    let assoc = associator(a.a, a.b, a.c);
    let assoc_nsq = assoc.norm_sq();
    if assoc_nsq <= (1e-8 * scale.powi(3)).powi(2) {
        return None;
    }
    let den_x = lambda - a.p;
    let den_y = (lambda - a.p) * (lambda - a.m) - a.a.norm_sq();
    if den_x.abs() <= 1e-8 * scale || den_y.abs() <= 1e-8 * scale * scale {
        return None;
    }
    let twist = Octonion::ONE + assoc * (r / assoc_nsq);
    let params = [a.a, a.b, a.c, Octonion::ONE];
    let mut raw = Vec::with_capacity(4);
    for combo in params {
        let z = combo * twist;
        let y = (a.a.conj() * (a.b.conj() * z) + (a.c * z) * (lambda - a.p)).scale_div(den_y);
        let x = (a.a * y + a.b.conj() * z).scale_div(den_x);
        raw.push(OctVec([x, y, z]));
    }
    let max_norm = raw.iter().fold(0.0f64, |acc, v| acc.max(v.norm()));
    let coords: Vec<Vec<f64>> = raw.iter().map(|v| v.coords()).collect();
    let basis = orthonormalize_coords(&coords, 1e-8 * max_norm.max(1.0));
    if basis.len() < 4 {
        return None;
    }
    let vecs: Vec<OctVec3> = basis
        .iter()
        .map(|xs| OctVec::<3>::from_coords(xs).expect("24 coords"))
        .collect();
    // residual check per unit vector; redirects ill-conditioned cases
    // (repeated eigenvalues in particular) to the kernel route
    let grid = a.to_matrix();
    let tol = eigen_tol(a);
    for v in &vecs {
        if verify_right_eigen(&grid, v, Octonion::from_real(lambda)) > tol {
            return None;
        }
    }
    Some(vecs)
}

trait ScaleDiv {
    fn scale_div(self, d: f64) -> Self;
}

impl ScaleDiv for Octonion {
    fn scale_div(self, d: f64) -> Self {
        self * (1.0 / d)
    }
}

/// Family-selected kernel extraction: real-orthonormal eigenvectors of the
/// embedding at `lambda`, restricted to family `r` by the spectral projector
/// of the RReal operator (which acts as `r`·id on one family's subspace and
/// `r'`·id on the other's).
fn family_kernel_basis(
    a: &Herm3,
    lambda: f64,
    r: f64,
    oracle: Option<&RealSpectrum>,
) -> Result<Vec<OctVec3>> {
    let kb = match oracle {
        Some(spec) => kernel_from_spectrum(a, lambda, spec)?,
        None => kernel_basis(a, lambda)?,
    };
    if kb.is_empty() {
        return Err(Error::InvalidInput(format!(
            "{lambda} is not an eigenvalue (empty kernel)"
        )));
    }
    let (rp, rm) = r_roots(a);
    let r_other = if (r - rp).abs() < (r - rm).abs() { rm } else { rp };
    if (r - r_other).abs() <= 1e-8 * (1.0 + r.abs() + r_other.abs()) {
        return Ok(kb); // doubled families: the whole kernel is the family
    }
    let dim = kb.len();
    let images: Vec<Vec<f64>> = kb.iter().map(|q| rreal_apply_vec(a, q).coords()).collect();
    let kb_coords: Vec<Vec<f64>> = kb.iter().map(|q| q.coords()).collect();
    // columns of the projector (T − r'·I)/(r − r') in the kernel basis
    let mut columns = Vec::with_capacity(dim);
    for t in 0..dim {
        let mut col = vec![0.0; dim];
        for (s, slot) in col.iter_mut().enumerate() {
            let bst: f64 = kb_coords[s]
                .iter()
                .zip(images[t].iter())
                .map(|(x, y)| x * y)
                .sum();
            *slot = bst;
        }
        col[t] -= r_other;
        for slot in col.iter_mut() {
            *slot /= r - r_other;
        }
        columns.push(col);
    }
    let coeffs = orthonormalize_coords(&columns, 1e-3);
    let mut out = Vec::with_capacity(coeffs.len());
    for w in coeffs {
        let mut combined = vec![0.0; 24];
        for (ws, q) in w.iter().zip(kb_coords.iter()) {
            for (slot, x) in combined.iter_mut().zip(q.iter()) {
                *slot += ws * x;
            }
        }
        out.push(OctVec::<3>::from_coords(&combined)?);
    }
    Ok(out)
}

fn kernel_from_spectrum(a: &Herm3, lambda: f64, spec: &RealSpectrum) -> Result<Vec<OctVec3>> {
    let gap = crate::embed::cluster_gap(a);
    let mut out = Vec::new();
    for (val, vec) in spec.eigenvalues.iter().zip(spec.eigenvectors.iter()) {
        if (val - lambda).abs() <= gap {
            out.push(OctVec::<3>::from_coords(vec)?);
        }
    }
    Ok(out)
}

fn eigenspace_basis3_inner(
    a: &Herm3,
    lambda: f64,
    r: f64,
    oracle: &mut Option<RealSpectrum>,
) -> Result<[OctVec3; 4]> {
    if let Some(vecs) = analytic_family_basis(a, lambda, r) {
        return Ok([vecs[0], vecs[1], vecs[2], vecs[3]]);
    }
    if oracle.is_none() {
        *oracle = Some(jacobi_eigen(&crate::embed::embed3(a))?);
    }
    let vecs = family_kernel_basis(a, lambda, r, oracle.as_ref())?;
    if vecs.len() < 4 {
        return Err(Error::SolverDefect(format!(
            "family eigenspace at λ={lambda}, r={r} has real dimension {} < 4",
            vecs.len()
        )));
    }
    Ok([vecs[0], vecs[1], vecs[2], vecs[3]])
}

/// Four real-independent eigenvectors spanning (the leading part of) the
/// eigenspace at `(λ, r)`, orthonormal in the real coordinate sense.
///
/// Generic octonionic input uses the analytic 4-parameter form; degenerate
/// input (vanishing associator, vanishing denominators, repeated
/// eigenvalues) uses family-selected kernel extraction instead.
pub fn eigenspace_basis3(a: &Herm3, lambda: f64, r: f64) -> Result<[OctVec3; 4]> {
    let mut oracle = None;
    eigenspace_basis3_inner(a, lambda, r, &mut oracle)
}

// --- decomposition ---

fn validate_family(a: &Herm3, fam: &Family) -> Result<()> {
    let grid = a.to_matrix();
    let etol = eigen_tol(a);
    let rtol = recon_tol(a);
    for (lam, v) in fam.lambdas.iter().zip(fam.eigvecs.iter()) {
        let res = verify_right_eigen(&grid, v, Octonion::from_real(*lam));
        if res > etol {
            return Err(Error::SolverDefect(format!(
                "eigen residual {res} at λ={lam} exceeds {etol}"
            )));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let res = ortho_residual(&fam.eigvecs[i], &fam.eigvecs[j]);
            if res > rtol {
                return Err(Error::SolverDefect(format!(
                    "orthogonality residual {res} between eigenvectors {i},{j}"
                )));
            }
        }
    }
    let mut complete = OctMatrix::<3>::zero();
    let mut recon = OctMatrix::<3>::zero();
    for (lam, v) in fam.lambdas.iter().zip(fam.eigvecs.iter()) {
        let o = outer(v);
        complete = complete.add(&o);
        recon = recon.add(&o.scale(*lam));
    }
    let crx = complete.sub(&OctMatrix::identity()).max_abs_coeff();
    if crx > rtol {
        return Err(Error::SolverDefect(format!(
            "completeness residual {crx} exceeds {rtol}"
        )));
    }
    let rrx = recon.sub(&a.to_matrix()).max_abs_coeff();
    if rrx > rtol {
        return Err(Error::SolverDefect(format!(
            "reconstruction residual {rrx} exceeds {rtol}"
        )));
    }
    Ok(())
}

fn simple_triple(
    a: &Herm3,
    r: f64,
    lambdas: [f64; 3],
    oracle: &mut Option<RealSpectrum>,
) -> Result<[OctVec3; 3]> {
    let mut vecs = [OctVec::zero(); 3];
    for (slot, lam) in vecs.iter_mut().zip(lambdas.iter()) {
        let basis = eigenspace_basis3_inner(a, *lam, r, oracle)?;
        *slot = basis[0].normalized();
    }
    Ok(vecs)
}

fn decompose_multiplicity3(a: &Herm3, r: f64) -> Result<Family> {
    // a family with a triple eigenvalue forces A = λI
    let lam = a.trace() / 3.0;
    let dev = a
        .to_matrix()
        .sub(&OctMatrix::identity().scale(lam))
        .max_abs_coeff();
    if dev > recon_tol(a) {
        return Err(Error::SolverDefect(format!(
            "triple eigenvalue but A is not λI (deviation {dev})"
        )));
    }
    Ok(Family {
        r,
        lambdas: [lam; 3],
        eigvecs: [OctVec::basis(0), OctVec::basis(1), OctVec::basis(2)],
    })
}

fn decompose_repeated(
    a: &Herm3,
    r: f64,
    lambdas: [f64; 3],
    pair_low: bool,
    oracle: &mut Option<RealSpectrum>,
) -> Result<Family> {
    let (mu, nu) = if pair_low {
        (0.5 * (lambdas[0] + lambdas[1]), lambdas[2])
    } else {
        (0.5 * (lambdas[1] + lambdas[2]), lambdas[0])
    };
    let v = eigenspace_basis3_inner(a, mu, r, oracle)?[0].normalized();
    let scale = 1.0 + a.max_coeff_norm();
    let grid = a.to_matrix();

    let mut last_err = String::new();
    for attempt in 0..5u32 {
        let alpha = scale * f64::powi(2.0, attempt as i32);
        let x = repeated_eigen_split(a, &v, alpha);
        let mut target = [mu - alpha, mu, nu];
        target.sort_by(f64::total_cmp);

        let (rxp, rxm) = r_roots(&x);
        let mut best: Option<(f64, f64, [f64; 3])> = None;
        for rx in [rxp, rxm] {
            let lx = family_eigenvalues(&x, rx)?;
            let dev = lx
                .iter()
                .zip(target.iter())
                .fold(0.0f64, |acc, (l, t)| acc.max((l - t).abs()));
            if best.as_ref().is_none_or(|(d, _, _)| dev < *d) {
                best = Some((dev, rx, lx));
            }
        }
        let (dev, rx, lx) = best.expect("two candidate families");
        if dev > 1e-4 * (1.0 + x.max_coeff_norm()) {
            last_err = format!("split spectrum off target by {dev} at α={alpha}");
            continue;
        }
        if lx[1] - lx[0] <= repeat_tol(&x) || lx[2] - lx[1] <= repeat_tol(&x) {
            last_err = format!("split spectrum still degenerate at α={alpha}");
            continue;
        }

        let mut ok = true;
        let mut triple: Vec<(f64, OctVec3)> = Vec::with_capacity(3);
        let mut x_oracle = None;
        for lam_x in lx {
            let w = match eigenspace_basis3_inner(&x, lam_x, rx, &mut x_oracle) {
                Ok(basis) => basis[0].normalized(),
                Err(e) => {
                    last_err = e.to_string();
                    ok = false;
                    break;
                }
            };
            // eigenvalue μ−α of X corresponds to eigenvalue μ of A
            let lam_a = if (lam_x - (mu - alpha)).abs() <= 1e-3 * (1.0 + mu.abs() + alpha) {
                mu
            } else {
                lam_x
            };
            if verify_right_eigen(&grid, &w, Octonion::from_real(lam_a)) > eigen_tol(a) {
                last_err = format!("split eigenvector fails on A at λ={lam_a}, α={alpha}");
                ok = false;
                break;
            }
            triple.push((lam_a, w));
        }
        if !ok {
            continue;
        }
        triple.sort_by(|p, q| p.0.total_cmp(&q.0));
        return Ok(Family {
            r,
            lambdas: [triple[0].0, triple[1].0, triple[2].0],
            eigvecs: [triple[0].1, triple[1].1, triple[2].1],
        });
    }
    Err(Error::SolverDefect(format!(
        "repeated-eigenvalue split failed after 5 attempts: {last_err}"
    )))
}

/// The full family at root `r`: eigenvalues ascending plus an orthonormal
/// eigenvector triple, validated against the eigen equation, generalized
/// orthogonality, completeness and reconstruction before returning.
pub fn decompose3(a: &Herm3, r: f64) -> Result<Family> {
    let mut oracle = None;
    decompose3_inner(a, r, &mut oracle)
}

fn decompose3_inner(a: &Herm3, r: f64, oracle: &mut Option<RealSpectrum>) -> Result<Family> {
    let lambdas = family_eigenvalues(a, r)?;
    let tol = repeat_tol(a);
    let pair01 = lambdas[1] - lambdas[0] <= tol;
    let pair12 = lambdas[2] - lambdas[1] <= tol;
    let fam = match (pair01, pair12) {
        (true, true) => decompose_multiplicity3(a, r)?,
        (false, false) => Family {
            r,
            lambdas,
            eigvecs: simple_triple(a, r, lambdas, oracle)?,
        },
        (pair_low, _) => decompose_repeated(a, r, lambdas, pair_low, oracle)?,
    };
    validate_family(a, &fam)?;
    Ok(fam)
}

/// Solve the whole matrix: both families, or a single doubled family for
/// complex-type input whose `r` roots coincide.
pub fn solve3(a: &Herm3) -> Result<Spectrum3> {
    let (rp, rm) = r_roots(a);
    let doubled = rp - rm <= 1e-8 * (1.0 + rp.abs() + rm.abs());
    let mut oracle = None;
    let families = if doubled {
        vec![decompose3_inner(a, 0.5 * (rp + rm), &mut oracle)?]
    } else {
        vec![
            decompose3_inner(a, rp, &mut oracle)?,
            decompose3_inner(a, rm, &mut oracle)?,
        ]
    };
    Ok(Spectrum3 { families, doubled })
}

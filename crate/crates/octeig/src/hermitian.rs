//! Octonionic Hermitian matrices and the Jordan-algebra operations on them.
//!
//! [`Herm2`] and [`Herm3`] store only the independent data (real diagonal,
//! upper-triangle octonions), so Hermiticity holds by construction. Full
//! grids of octonions ([`OctMatrix`]) are materialized only for products,
//! outer products `v v†` and similar non-Hermitian intermediates.
//!
//! Matrix products place parentheses the only way the entries allow: entry
//! `(i,k)` of `AB` is `Σⱼ Aᵢⱼ·Bⱼₖ`, each term a single octonionic product,
//! never re-associated.

use crate::octonion::{phi, Octonion};

/// A column vector of `N` octonions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctVec<const N: usize>(pub [Octonion; N]);

pub type OctVec2 = OctVec<2>;
pub type OctVec3 = OctVec<3>;

impl<const N: usize> OctVec<N> {
    pub const fn new(components: [Octonion; N]) -> Self {
        OctVec(components)
    }

    pub fn zero() -> Self {
        OctVec([Octonion::ZERO; N])
    }

    /// Standard basis vector with 1 in component `idx`.
    pub fn basis(idx: usize) -> Self {
        let mut v = [Octonion::ZERO; N];
        v[idx] = Octonion::ONE;
        OctVec(v)
    }

    /// `Re(v†v) = Σ |vᵢ|²`; `v†v` itself is always real.
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|x| x.norm_sq()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// `v†w = Σ v̄ᵢ wᵢ`, an octonion in general.
    pub fn dagger_dot(&self, w: &OctVec<N>) -> Octonion {
        let mut acc = Octonion::ZERO;
        for (x, y) in self.0.iter().zip(w.0.iter()) {
            acc += x.conj() * *y;
        }
        acc
    }

    /// Componentwise right multiplication `v ξ`.
    pub fn right_mul(&self, xi: Octonion) -> Self {
        OctVec(self.0.map(|x| x * xi))
    }

    /// Componentwise left multiplication `ξ v`.
    pub fn left_mul(&self, xi: Octonion) -> Self {
        OctVec(self.0.map(|x| xi * x))
    }

    pub fn scale(&self, s: f64) -> Self {
        OctVec(self.0.map(|x| x * s))
    }

    pub fn add(&self, w: &OctVec<N>) -> Self {
        let mut out = self.0;
        for (slot, y) in out.iter_mut().zip(w.0.iter()) {
            *slot += *y;
        }
        OctVec(out)
    }

    pub fn sub(&self, w: &OctVec<N>) -> Self {
        let mut out = self.0;
        for (slot, y) in out.iter_mut().zip(w.0.iter()) {
            *slot -= *y;
        }
        OctVec(out)
    }

    pub fn normalized(&self) -> Self {
        self.scale(1.0 / self.norm())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.0
            .iter()
            .fold(0.0, |acc, x| acc.max(x.max_abs_coeff()))
    }

    /// The `8N` real coefficients, component-major.
    pub fn coords(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(8 * N);
        for x in &self.0 {
            out.extend_from_slice(&x.c);
        }
        out
    }

    /// Inverse of [`coords`](Self::coords); `xs` must have length `8N`.
    pub fn from_coords(xs: &[f64]) -> crate::Result<Self> {
        if xs.len() != 8 * N {
            return Err(crate::Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                8 * N,
                xs.len()
            )));
        }
        let mut v = [Octonion::ZERO; N];
        for (i, slot) in v.iter_mut().enumerate() {
            let mut c = [0.0; 8];
            c.copy_from_slice(&xs[8 * i..8 * i + 8]);
            *slot = Octonion::new(c);
        }
        Ok(OctVec(v))
    }
}

/// A dense `N x N` grid of octonions; no Hermiticity assumed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OctMatrix<const N: usize>(pub [[Octonion; N]; N]);

pub type OctMatrix2 = OctMatrix<2>;
pub type OctMatrix3 = OctMatrix<3>;

impl<const N: usize> OctMatrix<N> {
    pub fn zero() -> Self {
        OctMatrix([[Octonion::ZERO; N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.0[i][i] = Octonion::ONE;
        }
        m
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.0;
        for (row, rrow) in out.iter_mut().zip(rhs.0.iter()) {
            for (x, y) in row.iter_mut().zip(rrow.iter()) {
                *x += *y;
            }
        }
        OctMatrix(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.0;
        for (row, rrow) in out.iter_mut().zip(rhs.0.iter()) {
            for (x, y) in row.iter_mut().zip(rrow.iter()) {
                *x -= *y;
            }
        }
        OctMatrix(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        OctMatrix(self.0.map(|row| row.map(|x| x * s)))
    }

    /// `(AB)ᵢₖ = Σⱼ Aᵢⱼ·Bⱼₖ`, one octonionic product per term.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            for k in 0..N {
                let mut acc = Octonion::ZERO;
                for j in 0..N {
                    acc += self.0[i][j] * rhs.0[j][k];
                }
                out.0[i][k] = acc;
            }
        }
        out
    }

    pub fn mat_vec(&self, v: &OctVec<N>) -> OctVec<N> {
        let mut out = [Octonion::ZERO; N];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Octonion::ZERO;
            for j in 0..N {
                acc += self.0[i][j] * v.0[j];
            }
            *slot = acc;
        }
        OctVec(out)
    }

    /// Hermitian conjugate `M†` (transpose + entrywise octonion conjugate).
    pub fn dagger(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..N {
            for j in 0..N {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    /// Entrywise octonionic conjugate (no transpose).
    pub fn conj_entries(&self) -> Self {
        OctMatrix(self.0.map(|row| row.map(|x| x.conj())))
    }

    pub fn trace_re(&self) -> f64 {
        (0..N).map(|i| self.0[i][i].re()).sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |acc, x| acc.max(x.max_abs_coeff()))
    }

    /// Largest coefficient of `M − M†`; zero for Hermitian grids.
    pub fn hermitian_residual(&self) -> f64 {
        self.sub(&self.dagger()).max_abs_coeff()
    }
}

/// Outer product `v v†` with entries `vᵢ·v̄ⱼ`; always a Hermitian grid.
pub fn outer<const N: usize>(v: &OctVec<N>) -> OctMatrix<N> {
    let mut out = OctMatrix::zero();
    for i in 0..N {
        for j in 0..N {
            out.0[i][j] = v.0[i] * v.0[j].conj();
        }
    }
    out
}

/// Jordan product `A ∘ B = ½(AB + BA)`; commutative, Hermitian on Hermitian
/// inputs, but not associative.
pub fn jordan_product<const N: usize>(a: &OctMatrix<N>, b: &OctMatrix<N>) -> OctMatrix<N> {
    a.mul(b).add(&b.mul(a)).scale(0.5)
}

/// A 2x2 octonionic Hermitian matrix `[[p, a], [ā, m]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Herm2 {
    pub p: f64,
    pub m: f64,
    pub a: Octonion,
}

impl Herm2 {
    pub const fn new(p: f64, m: f64, a: Octonion) -> Self {
        Herm2 { p, m, a }
    }

    pub fn identity() -> Self {
        Herm2::new(1.0, 1.0, Octonion::ZERO)
    }

    pub fn to_matrix(&self) -> OctMatrix2 {
        OctMatrix([
            [Octonion::from_real(self.p), self.a],
            [self.a.conj(), Octonion::from_real(self.m)],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.p + self.m
    }

    /// `det A = pm − |a|²`.
    pub fn det(&self) -> f64 {
        self.p * self.m - self.a.norm_sq()
    }

    /// Entrywise octonionic conjugate, still Hermitian.
    pub fn conj(&self) -> Self {
        Herm2::new(self.p, self.m, self.a.conj())
    }

    pub fn mat_vec(&self, v: &OctVec2) -> OctVec2 {
        self.to_matrix().mat_vec(v)
    }

    /// Largest absolute coefficient over all entries.
    pub fn max_coeff_norm(&self) -> f64 {
        self.p.abs().max(self.m.abs()).max(self.a.max_abs_coeff())
    }
}

/// A 3x3 octonionic Hermitian (Jordan) matrix
/// `[[p, a, b̄], [ā, m, c], [b, c̄, n]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Herm3 {
    pub p: f64,
    pub m: f64,
    pub n: f64,
    pub a: Octonion,
    pub b: Octonion,
    pub c: Octonion,
}

impl Herm3 {
    pub const fn new(p: f64, m: f64, n: f64, a: Octonion, b: Octonion, c: Octonion) -> Self {
        Herm3 { p, m, n, a, b, c }
    }

    pub fn identity() -> Self {
        Herm3::diag(1.0, 1.0, 1.0)
    }

    pub fn diag(p: f64, m: f64, n: f64) -> Self {
        Herm3::new(p, m, n, Octonion::ZERO, Octonion::ZERO, Octonion::ZERO)
    }

    pub fn to_matrix(&self) -> OctMatrix3 {
        OctMatrix([
            [Octonion::from_real(self.p), self.a, self.b.conj()],
            [self.a.conj(), Octonion::from_real(self.m), self.c],
            [self.b, self.c.conj(), Octonion::from_real(self.n)],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.p + self.m + self.n
    }

    /// `σ(A) = ½((tr A)² − tr A²) = pm + pn + mn − |a|² − |b|² − |c|²`.
    pub fn sigma(&self) -> f64 {
        self.p * self.m + self.p * self.n + self.m * self.n
            - self.a.norm_sq()
            - self.b.norm_sq()
            - self.c.norm_sq()
    }

    /// `det A = pmn + b(ac) + conj(b(ac)) − n|a|² − m|b|² − p|c|²`.
    pub fn det(&self) -> f64 {
        let bac = self.b * (self.a * self.c);
        self.p * self.m * self.n + 2.0 * bac.re()
            - self.n * self.a.norm_sq()
            - self.m * self.b.norm_sq()
            - self.p * self.c.norm_sq()
    }

    /// `Φ(a,b,c)` of the off-diagonal triple; controls the family splitting.
    pub fn phi(&self) -> f64 {
        phi(self.a, self.b, self.c)
    }

    /// Entrywise octonionic conjugate `Ā`, still Hermitian.
    pub fn conj(&self) -> Self {
        Herm3::new(
            self.p,
            self.m,
            self.n,
            self.a.conj(),
            self.b.conj(),
            self.c.conj(),
        )
    }

    pub fn mat_vec(&self, v: &OctVec3) -> OctVec3 {
        self.to_matrix().mat_vec(v)
    }

    pub fn add(&self, rhs: &Herm3) -> Herm3 {
        Herm3::new(
            self.p + rhs.p,
            self.m + rhs.m,
            self.n + rhs.n,
            self.a + rhs.a,
            self.b + rhs.b,
            self.c + rhs.c,
        )
    }

    pub fn scale(&self, s: f64) -> Herm3 {
        Herm3::new(
            self.p * s,
            self.m * s,
            self.n * s,
            self.a * s,
            self.b * s,
            self.c * s,
        )
    }

    /// `A − α v v†`, staying in Hermitian form. The outer product is
    /// Hermitian for any `v`, so the result is too.
    pub fn sub_scaled_outer(&self, alpha: f64, v: &OctVec3) -> Herm3 {
        let [x, y, z] = v.0;
        Herm3::new(
            self.p - alpha * x.norm_sq(),
            self.m - alpha * y.norm_sq(),
            self.n - alpha * z.norm_sq(),
            self.a - alpha * (x * y.conj()),
            self.b - alpha * (z * x.conj()),
            self.c - alpha * (y * z.conj()),
        )
    }

    /// Jordan cube `A³ = A² ∘ A`; agrees with `A ∘ A²`.
    pub fn cube(&self) -> OctMatrix3 {
        let g = self.to_matrix();
        let sq = g.mul(&g);
        jordan_product(&sq, &g)
    }

    /// Largest coefficient of `A³ − (tr A)A² + σ(A)A − (det A)I`.
    ///
    /// Jordan matrices satisfy their characteristic equation, so this is
    /// zero up to roundoff for every Hermitian input — unlike their real
    /// eigenvalues, which generally do not satisfy it.
    pub fn char_residual(&self) -> f64 {
        let g = self.to_matrix();
        let sq = g.mul(&g);
        let lhs = self
            .cube()
            .sub(&sq.scale(self.trace()))
            .add(&g.scale(self.sigma()))
            .sub(&OctMatrix3::identity().scale(self.det()));
        lhs.max_abs_coeff()
    }

    /// Largest absolute coefficient over all entries.
    pub fn max_coeff_norm(&self) -> f64 {
        self.p
            .abs()
            .max(self.m.abs())
            .max(self.n.abs())
            .max(self.a.max_abs_coeff())
            .max(self.b.max_abs_coeff())
            .max(self.c.max_abs_coeff())
    }
}

/// Freudenthal product of Jordan matrices,
/// `A*B = A∘B − ½(A tr B + B tr A) + ½(tr A tr B − tr(A∘B)) I`.
///
/// It gives the determinant its abstract definition,
/// `det A = ⅓ tr((A*A) ∘ A)`, used in tests as an independent route against
/// the concrete formula in [`Herm3::det`].
pub fn freudenthal_product(a: &Herm3, b: &Herm3) -> Herm3 {
    let (ga, gb) = (a.to_matrix(), b.to_matrix());
    let circ = jordan_product(&ga, &gb);
    let (ta, tb) = (a.trace(), b.trace());
    let scalar = 0.5 * (ta * tb - circ.trace_re());
    let grid = circ
        .sub(&ga.scale(0.5 * tb))
        .sub(&gb.scale(0.5 * ta))
        .add(&OctMatrix3::identity().scale(scalar));
    // Structurally Hermitian: every term above is.
    Herm3::new(
        grid.0[0][0].re(),
        grid.0[1][1].re(),
        grid.0[2][2].re(),
        grid.0[0][1],
        grid.0[2][0],
        grid.0[1][2],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{random_herm3, random_octonion, MatrixClass, SplitMix64};

    fn det_via_freudenthal(a: &Herm3) -> f64 {
        let aa = freudenthal_product(a, a);
        jordan_product(&aa.to_matrix(), &a.to_matrix()).trace_re() / 3.0
    }

    #[test]
    fn jordan_product_basics() {
        let mut rng = SplitMix64::new(11);
        let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
        let ga = a.to_matrix();
        let id = OctMatrix3::identity();
        assert!(jordan_product(&ga, &id).sub(&ga).max_abs_coeff() <= 1e-14);
        // commutative and Hermitian
        let b = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
        let gb = b.to_matrix();
        let ab = jordan_product(&ga, &gb);
        assert!(ab.sub(&jordan_product(&gb, &ga)).max_abs_coeff() == 0.0);
        assert!(ab.hermitian_residual() <= 1e-13);
        // A∘A is the matrix square
        assert!(jordan_product(&ga, &ga).sub(&ga.mul(&ga)).max_abs_coeff() <= 1e-13);
    }

    #[test]
    fn jordan_product_not_associative_fixture() {
        // Frozen triple with associativity defect well above noise.
        let z = Octonion::ZERO;
        let a = Herm3::new(0.0, 0.0, 0.0, Octonion::I, Octonion::J, z);
        let b = Herm3::new(0.0, 0.0, 0.0, z, Octonion::K, Octonion::L);
        let c = Herm3::new(0.0, 0.0, 0.0, Octonion::JL, z, Octonion::KL);
        let (ga, gb, gc) = (a.to_matrix(), b.to_matrix(), c.to_matrix());
        let lhs = jordan_product(&jordan_product(&ga, &gb), &gc);
        let rhs = jordan_product(&ga, &jordan_product(&gb, &gc));
        let defect = lhs.sub(&rhs).max_abs_coeff();
        assert!(defect > 0.1, "expected nonassociativity, defect={defect}");
    }

    #[test]
    fn cube_orderings_agree() {
        assert!(Herm3::identity()
            .cube()
            .sub(&OctMatrix3::identity())
            .max_abs_coeff()
            .abs()
            <= 1e-15);
        let d = Herm3::diag(1.0, 2.0, 3.0);
        let want = Herm3::diag(1.0, 8.0, 27.0).to_matrix();
        assert!(d.cube().sub(&want).max_abs_coeff() <= 1e-12);
        let mut rng = SplitMix64::new(12);
        for _ in 0..20 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
            let g = a.to_matrix();
            let sq = g.mul(&g);
            let one_way = jordan_product(&sq, &g);
            let other = jordan_product(&g, &sq);
            assert!(one_way.sub(&other).max_abs_coeff() <= 1e-12 * (1.0 + a.max_coeff_norm().powi(3)));
        }
    }

    #[test]
    fn freudenthal_diagonal_and_identity() {
        let d = Herm3::diag(2.0, 3.0, 5.0);
        let dd = freudenthal_product(&d, &d);
        assert_eq!((dd.p, dd.m, dd.n), (15.0, 10.0, 6.0));
        assert!(dd.a.is_zero() && dd.b.is_zero() && dd.c.is_zero());
        let i = Herm3::identity();
        let ii = freudenthal_product(&i, &i);
        assert!((ii.p - 1.0).abs() <= 1e-15 && (ii.m - 1.0).abs() <= 1e-15);
    }

    #[test]
    fn traces_and_sigma() {
        assert_eq!(Herm3::diag(1.0, 2.0, 3.0).trace(), 6.0);
        assert_eq!(Herm3::identity().trace(), 3.0);
        assert_eq!(Herm3::identity().sigma(), 3.0);
        assert_eq!(Herm3::diag(1.0, 2.0, 3.0).sigma(), 11.0);
        let h = Herm3::new(0.0, 0.0, 0.0, Octonion::I, Octonion::J, Octonion::L);
        assert_eq!(h.sigma(), -3.0);
        // sigma definition vs its closed form
        let mut rng = SplitMix64::new(13);
        for _ in 0..20 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
            let g = a.to_matrix();
            let direct = 0.5 * (a.trace().powi(2) - g.mul(&g).trace_re());
            assert!((direct - a.sigma()).abs() <= 1e-11 * (1.0 + a.sigma().abs()));
            assert_eq!(a.conj().trace(), a.trace());
            assert_eq!(a.conj().sigma(), a.sigma());
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(Herm2::identity().det(), 1.0);
        let a1 = Herm2::new(0.0, 0.0, Octonion::ONE + Octonion::I);
        assert_eq!(a1.det(), -2.0);
        assert_eq!(Herm3::identity().det(), 1.0);
        let h = Herm3::new(0.0, 0.0, 0.0, Octonion::I, Octonion::J, Octonion::L);
        assert_eq!(h.det(), 0.0); // b(ac) is imaginary here
    }

    #[test]
    fn det_routes_agree() {
        let mut rng = SplitMix64::new(14);
        for _ in 0..1000 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
            let d1 = a.det();
            let d2 = det_via_freudenthal(&a);
            assert!(
                (d1 - d2).abs() <= 1e-10 * (1.0 + d1.abs()),
                "det mismatch {d1} vs {d2}"
            );
        }
    }

    #[test]
    fn det_conj_identity() {
        let mut rng = SplitMix64::new(15);
        for _ in 0..200 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
            let lhs = a.conj().det();
            let rhs = a.det() - 4.0 * a.phi();
            assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
        }
    }

    #[test]
    fn characteristic_equation() {
        assert!(Herm3::identity().char_residual() <= 1e-14);
        assert!(Herm3::diag(1.0, 2.0, 3.0).char_residual() <= 1e-12);
        let mut rng = SplitMix64::new(16);
        for class in [
            MatrixClass::Complex,
            MatrixClass::Quaternionic,
            MatrixClass::Octonionic,
        ] {
            for _ in 0..50 {
                let a = random_herm3(&mut rng, class, 10.0);
                let bound = 1e-9 * (1.0 + a.max_coeff_norm().powi(3));
                assert!(a.char_residual() <= bound);
            }
        }
    }

    #[test]
    fn mat_vec_pinned_rows() {
        // [[1,i],[-i,1]]·(j,l)ᵀ = (j+il, l−k)ᵀ and ·(1,k)ᵀ = (1−j, k−i)ᵀ
        let a = Herm2::new(1.0, 1.0, Octonion::I);
        let got = a.mat_vec(&OctVec([Octonion::J, Octonion::L]));
        assert_eq!(got.0[0], Octonion::J + Octonion::IL);
        assert_eq!(got.0[1], Octonion::L - Octonion::K);
        let got = a.mat_vec(&OctVec([Octonion::ONE, Octonion::K]));
        assert_eq!(got.0[0], Octonion::ONE - Octonion::J);
        assert_eq!(got.0[1], Octonion::K - Octonion::I);
        // identity action
        let v = OctVec([Octonion::I, Octonion::JL, Octonion::from_real(2.5)]);
        assert_eq!(Herm3::identity().mat_vec(&v), v);
    }

    #[test]
    fn outer_products() {
        let e1: OctVec2 = OctVec::basis(0);
        let o = outer(&e1);
        assert_eq!(o.0[0][0], Octonion::ONE);
        assert!(o.0[0][1].is_zero() && o.0[1][0].is_zero() && o.0[1][1].is_zero());
        let v = OctVec([Octonion::J, Octonion::L]);
        let o = outer(&v);
        assert_eq!(o.0[0][0], Octonion::ONE);
        assert_eq!(o.0[1][1], Octonion::ONE);
        let mut rng = SplitMix64::new(17);
        for _ in 0..20 {
            let v: OctVec3 = OctVec([
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
            ]);
            // mirrored entries are computed as vᵢv̄ⱼ vs conj(vⱼv̄ᵢ): equal up
            // to rounding, not bitwise
            assert!(outer(&v).hermitian_residual() <= 1e-14 * (1.0 + v.norm_sq()));
        }
    }

    #[test]
    fn conj_matrix_involution() {
        let d = Herm3::diag(1.0, -2.0, 0.5);
        assert_eq!(d.conj(), d);
        let mut rng = SplitMix64::new(18);
        let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn sub_scaled_outer_matches_grid_arithmetic() {
        let mut rng = SplitMix64::new(19);
        let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
        let v: OctVec3 = OctVec([
            random_octonion(&mut rng, MatrixClass::Octonionic, 1.0),
            random_octonion(&mut rng, MatrixClass::Octonionic, 1.0),
            random_octonion(&mut rng, MatrixClass::Octonionic, 1.0),
        ]);
        let direct = a.sub_scaled_outer(1.5, &v).to_matrix();
        let viagrid = a.to_matrix().sub(&outer(&v).scale(1.5));
        assert!(direct.sub(&viagrid).max_abs_coeff() <= 1e-14);
    }
}

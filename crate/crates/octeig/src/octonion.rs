//! Octonion arithmetic on the ordered basis `(1, i, j, k, l, il, jl, kl)`.
//!
//! The product is the Cayley-Dickson doubling of the quaternions,
//!
//! ```text
//! (a + b l)(c + d l) = (a c − d̄ b) + (d a + b c̄) l ,    a,b,c,d ∈ ℍ
//! ```
//!
//! with the quaternion convention `ij = k = −ji`. Among the standard
//! conventions this is the one consistent with both pinned worked examples
//! (see the crate tests): `[[1,i],[−i,1]]·(1,k)ᵀ = (1−j)·(1,k)ᵀ` and
//! `[[1,i],[−i,1]]·(j,l)ᵀ = (j,l)ᵀ·(1−kl)`.

use crate::{Error, Result};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

/// Printable names of the eight basis units, in coefficient order.
pub const BASIS_NAMES: [&str; 8] = ["1", "i", "j", "k", "l", "il", "jl", "kl"];

/// An octonion, stored as 8 real coefficients on `(1, i, j, k, l, il, jl, kl)`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Octonion {
    pub c: [f64; 8],
}

fn qmul(x: [f64; 4], y: [f64; 4]) -> [f64; 4] {
    [
        x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
        x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
        x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
        x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0],
    ]
}

fn qconj(x: [f64; 4]) -> [f64; 4] {
    [x[0], -x[1], -x[2], -x[3]]
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { c: [0.0; 8] };
    pub const ONE: Octonion = Octonion::unit(0);
    pub const I: Octonion = Octonion::unit(1);
    pub const J: Octonion = Octonion::unit(2);
    pub const K: Octonion = Octonion::unit(3);
    pub const L: Octonion = Octonion::unit(4);
    pub const IL: Octonion = Octonion::unit(5);
    pub const JL: Octonion = Octonion::unit(6);
    pub const KL: Octonion = Octonion::unit(7);

    pub const fn new(c: [f64; 8]) -> Self {
        Octonion { c }
    }

    /// The basis unit with coefficient 1 in slot `idx`.
    pub const fn unit(idx: usize) -> Self {
        let mut c = [0.0; 8];
        c[idx] = 1.0;
        Octonion { c }
    }

    pub const fn from_real(x: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = x;
        Octonion { c }
    }

    /// Real part, the coefficient of 1.
    pub fn re(self) -> f64 {
        self.c[0]
    }

    /// Octonionic conjugate: fixes the real part, negates the 7 imaginary slots.
    pub fn conj(self) -> Self {
        let mut c = [0.0; 8];
        c[0] = self.c[0];
        for (slot, src) in c.iter_mut().zip(self.c.iter()).skip(1) {
            *slot = -src;
        }
        Octonion { c }
    }

    /// Squared norm `|a|² = a ā = Σ cᵢ²`.
    pub fn norm_sq(self) -> f64 {
        self.c.iter().map(|x| x * x).sum()
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Multiplicative inverse `ā / |a|²`; errors on the zero octonion.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sq();
        if n == 0.0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.conj() * (1.0 / n))
    }

    /// Largest absolute coefficient; the norm used for residual reporting.
    pub fn max_abs_coeff(self) -> f64 {
        self.c.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }

    pub fn is_zero(self) -> bool {
        self.c.iter().all(|&x| x == 0.0)
    }
}

/// Commutator `[a,b] = ab − ba`; purely imaginary and antisymmetric.
pub fn commutator(a: Octonion, b: Octonion) -> Octonion {
    a * b - b * a
}

/// Associator `[a,b,c] = (ab)c − a(bc)`.
///
/// Totally antisymmetric, purely imaginary, flips sign when any argument is
/// conjugated, and vanishes whenever the arguments lie in a common
/// quaternionic subalgebra.
pub fn associator(a: Octonion, b: Octonion, c: Octonion) -> Octonion {
    (a * b) * c - a * (b * c)
}

/// The associative 3-form `Φ(a,b,c) = ½ Re([a, b̄] c)`.
pub fn phi(a: Octonion, b: Octonion, c: Octonion) -> f64 {
    0.5 * (commutator(a, b.conj()) * c).re()
}

/// Triple cross product `a × b × c = ½ (a(b̄c) − c(b̄a))`.
///
/// Its real part equals `Φ(a,b,c)`. This is the genuine triple product, not
/// an iterated binary cross product.
pub fn triple_cross(a: Octonion, b: Octonion, c: Octonion) -> Octonion {
    (a * (b.conj() * c) - c * (b.conj() * a)) * 0.5
}

/// The 8x8 real matrix of left multiplication by `a` on coefficient vectors:
/// `left_mul_matrix(a) · coords(x) = coords(a x)`.
///
/// Conjugation transposes it: `left_mul_matrix(ā) = left_mul_matrix(a)ᵀ`,
/// which is what makes the real embedding of a Hermitian matrix symmetric.
pub fn left_mul_matrix(a: Octonion) -> [[f64; 8]; 8] {
    let mut m = [[0.0; 8]; 8];
    for (col, mcol) in (0..8).map(|j| (a * Octonion::unit(j), j)) {
        for (row, entry) in col.c.iter().enumerate() {
            m[row][mcol] = *entry;
        }
    }
    m
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for (slot, x) in c.iter_mut().zip(rhs.c.iter()) {
            *slot += x;
        }
        Octonion { c }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        *self = *self + rhs;
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        let mut c = self.c;
        for (slot, x) in c.iter_mut().zip(rhs.c.iter()) {
            *slot -= x;
        }
        Octonion { c }
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, rhs: Octonion) {
        *self = *self - rhs;
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        let mut c = self.c;
        for slot in c.iter_mut() {
            *slot = -*slot;
        }
        Octonion { c }
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        let a = [self.c[0], self.c[1], self.c[2], self.c[3]];
        let b = [self.c[4], self.c[5], self.c[6], self.c[7]];
        let c = [rhs.c[0], rhs.c[1], rhs.c[2], rhs.c[3]];
        let d = [rhs.c[4], rhs.c[5], rhs.c[6], rhs.c[7]];
        let first = {
            let ac = qmul(a, c);
            let db = qmul(qconj(d), b);
            [ac[0] - db[0], ac[1] - db[1], ac[2] - db[2], ac[3] - db[3]]
        };
        let second = {
            let da = qmul(d, a);
            let bc = qmul(b, qconj(c));
            [da[0] + bc[0], da[1] + bc[1], da[2] + bc[2], da[3] + bc[3]]
        };
        Octonion {
            c: [
                first[0], first[1], first[2], first[3], second[0], second[1], second[2], second[3],
            ],
        }
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        let mut c = self.c;
        for slot in c.iter_mut() {
            *slot *= rhs;
        }
        Octonion { c }
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs * self
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, idx: usize) -> &f64 {
        &self.c[idx]
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (x, name) in self.c.iter().zip(BASIS_NAMES.iter()) {
            if *x == 0.0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if *x < 0.0 { "-" } else { "+" })?;
            } else if *x < 0.0 {
                write!(f, "-")?;
            }
            let mag = x.abs();
            if name == &"1" || mag != 1.0 {
                write!(f, "{mag}")?;
            }
            if name != &"1" {
                write!(f, "{name}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use proptest::prelude::*;

    const UNITS: [Octonion; 8] = [
        Octonion::ONE,
        Octonion::I,
        Octonion::J,
        Octonion::K,
        Octonion::L,
        Octonion::IL,
        Octonion::JL,
        Octonion::KL,
    ];

    fn assert_oct_eq(x: Octonion, y: Octonion, tol: f64) {
        assert!(
            (x - y).max_abs_coeff() <= tol,
            "octonions differ: {x} vs {y}"
        );
    }

    fn random_oct(rng: &mut SplitMix64) -> Octonion {
        let mut c = [0.0; 8];
        for slot in c.iter_mut() {
            *slot = rng.uniform(-2.0, 2.0);
        }
        Octonion::new(c)
    }

    #[test]
    fn quaternion_units() {
        assert_oct_eq(Octonion::I * Octonion::J, Octonion::K, 0.0);
        assert_oct_eq(Octonion::J * Octonion::I, -Octonion::K, 0.0);
        assert_oct_eq(Octonion::J * Octonion::K, Octonion::I, 0.0);
        assert_oct_eq(Octonion::K * Octonion::I, Octonion::J, 0.0);
        for u in UNITS.iter().skip(1) {
            assert_oct_eq(*u * *u, -Octonion::ONE, 0.0);
        }
    }

    #[test]
    fn identity_element() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..20 {
            let x = random_oct(&mut rng);
            assert_oct_eq(Octonion::ONE * x, x, 0.0);
            assert_oct_eq(x * Octonion::ONE, x, 0.0);
        }
    }

    #[test]
    fn convention_pinning_product() {
        // j(kl) = -il is what the pinned worked examples force.
        assert_oct_eq(Octonion::J * Octonion::KL, -Octonion::IL, 0.0);
        assert_oct_eq(Octonion::I * Octonion::L, Octonion::IL, 0.0);
        assert_oct_eq(Octonion::L * Octonion::I, -Octonion::IL, 0.0);
    }

    #[test]
    fn conjugation() {
        assert_oct_eq(Octonion::I.conj(), -Octonion::I, 0.0);
        let x = Octonion::ONE + Octonion::I + Octonion::L;
        assert_oct_eq(x.conj(), Octonion::ONE - Octonion::I - Octonion::L, 0.0);
        // conj(ab) = conj(b) conj(a), exhaustively on basis pairs
        for u in UNITS {
            for v in UNITS {
                assert_oct_eq((u * v).conj(), v.conj() * u.conj(), 0.0);
            }
        }
    }

    #[test]
    fn norms() {
        assert_eq!(Octonion::I.norm_sq(), 1.0);
        assert_eq!(Octonion::ZERO.norm_sq(), 0.0);
        let x = Octonion::ONE + Octonion::I + Octonion::J + Octonion::L;
        assert_eq!(x.norm_sq(), 4.0);
        // norm_sq(a) = Re(a conj(a)) and a conj(a) is real
        let mut rng = SplitMix64::new(2);
        for _ in 0..50 {
            let a = random_oct(&mut rng);
            let aa = a * a.conj();
            assert!((aa.re() - a.norm_sq()).abs() <= 1e-12 * (1.0 + a.norm_sq()));
            assert!((aa - Octonion::from_real(aa.re())).max_abs_coeff() <= 1e-13 * aa.re().abs());
        }
    }

    #[test]
    fn composition_on_basis_pairs() {
        for u in UNITS {
            for v in UNITS {
                assert_eq!((u * v).norm_sq(), 1.0);
            }
        }
    }

    #[test]
    fn composition_on_many_random_pairs() {
        let mut rng = SplitMix64::new(27);
        for _ in 0..1000 {
            let (a, b) = (random_oct(&mut rng), random_oct(&mut rng));
            let lhs = (a * b).norm_sq();
            let rhs = a.norm_sq() * b.norm_sq();
            assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }
    }

    #[test]
    fn commutator_values() {
        assert_oct_eq(
            commutator(Octonion::I, Octonion::J),
            2.0 * Octonion::K,
            0.0,
        );
        let mut rng = SplitMix64::new(3);
        let a = random_oct(&mut rng);
        assert_oct_eq(commutator(a, a), Octonion::ZERO, 0.0);
        assert_oct_eq(commutator(Octonion::ONE, a), Octonion::ZERO, 0.0);
        // purely imaginary
        let b = random_oct(&mut rng);
        assert!(commutator(a, b).re().abs() <= 1e-13);
    }

    #[test]
    fn associator_values() {
        assert_oct_eq(
            associator(Octonion::I, Octonion::J, Octonion::K),
            Octonion::ZERO,
            0.0,
        );
        assert_oct_eq(
            associator(Octonion::I, Octonion::J, Octonion::L),
            2.0 * Octonion::KL,
            0.0,
        );
        let mut rng = SplitMix64::new(4);
        let (a, b) = (random_oct(&mut rng), random_oct(&mut rng));
        assert!(associator(a, a, b).max_abs_coeff() <= 1e-13 * (1.0 + a.norm_sq()));
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(Octonion::I, Octonion::J, Octonion::K), 1.0);
        assert_eq!(phi(Octonion::I, Octonion::J, Octonion::L), 0.0);
        let mut rng = SplitMix64::new(5);
        let (b, c) = (random_oct(&mut rng), random_oct(&mut rng));
        assert!(phi(Octonion::ONE, b, c).abs() <= 1e-13);
    }

    #[test]
    fn triple_cross_values() {
        // vanishes on repeated arguments (totally antisymmetric)
        assert_oct_eq(
            triple_cross(Octonion::ONE, Octonion::ONE, Octonion::ONE),
            Octonion::ZERO,
            0.0,
        );
        assert_eq!(triple_cross(Octonion::I, Octonion::J, Octonion::K).re(), 1.0);
        let mut rng = SplitMix64::new(6);
        for _ in 0..100 {
            let (a, b, c) = (random_oct(&mut rng), random_oct(&mut rng), random_oct(&mut rng));
            let scale = 1.0 + a.norm() * b.norm() * c.norm();
            assert!((triple_cross(a, b, c).re() - phi(a, b, c)).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn left_mul_matrix_properties() {
        let id = left_mul_matrix(Octonion::ONE);
        for (r, row) in id.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                assert_eq!(*x, if r == c { 1.0 } else { 0.0 });
            }
        }
        let mut rng = SplitMix64::new(7);
        let a = random_oct(&mut rng);
        let m = left_mul_matrix(a);
        for (r, row) in m.iter().enumerate() {
            assert_eq!(row[0], a.c[r]); // column 0 is coords(a)
        }
        // transpose property, checked entrywise
        let mc = left_mul_matrix(a.conj());
        for r in 0..8 {
            for c in 0..8 {
                assert_eq!(mc[r][c], m[c][r]);
            }
        }
        // action property against direct products on basis vectors
        for (j, u) in UNITS.iter().enumerate() {
            let prod = a * *u;
            for r in 0..8 {
                assert_eq!(m[r][j], prod.c[r]);
            }
        }
    }

    #[test]
    fn inverses() {
        assert_oct_eq(Octonion::I.inverse().unwrap(), -Octonion::I, 0.0);
        assert_oct_eq(
            Octonion::from_real(2.0).inverse().unwrap(),
            Octonion::from_real(0.5),
            0.0,
        );
        assert!(Octonion::ZERO.inverse().is_err());
        let mut rng = SplitMix64::new(8);
        for _ in 0..50 {
            let a = random_oct(&mut rng);
            if a.is_zero() {
                continue;
            }
            let inv = a.inverse().unwrap();
            assert_oct_eq(a * inv, Octonion::ONE, 1e-13);
            assert_oct_eq(inv * a, Octonion::ONE, 1e-13);
        }
    }

    #[test]
    fn pinned_left_eigenvalue_example() {
        // [[1,i],[-i,1]] (1,k)^T = (1-j,k-i)^T = (1-j)(1,k)^T, exact.
        let a11 = Octonion::ONE;
        let a12 = Octonion::I;
        let v = [Octonion::ONE, Octonion::K];
        let row1 = a11 * v[0] + a12 * v[1];
        let row2 = -Octonion::I * v[0] + a11 * v[1];
        let lam = Octonion::ONE - Octonion::J;
        assert_oct_eq(row1, lam * v[0], 0.0);
        assert_oct_eq(row2, lam * v[1], 0.0);
    }

    #[test]
    fn pinned_right_eigenvalue_example() {
        // [[1,i],[-i,1]] (j,l)^T = (j+il, l-k)^T = (j,l)^T (1-kl), exact.
        let v = [Octonion::J, Octonion::L];
        let row1 = v[0] + Octonion::I * v[1];
        let row2 = -Octonion::I * v[0] + v[1];
        let lam = Octonion::ONE - Octonion::KL;
        assert_oct_eq(row1, Octonion::J + Octonion::IL, 0.0);
        assert_oct_eq(row2, Octonion::L - Octonion::K, 0.0);
        assert_oct_eq(row1, v[0] * lam, 0.0);
        assert_oct_eq(row2, v[1] * lam, 0.0);
    }

    fn oct_strategy() -> impl Strategy<Value = Octonion> {
        prop::array::uniform8(-3.0f64..3.0).prop_map(Octonion::new)
    }

    proptest! {
        #[test]
        fn composition_law(a in oct_strategy(), b in oct_strategy()) {
            let lhs = (a * b).norm_sq();
            let rhs = a.norm_sq() * b.norm_sq();
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        #[test]
        fn alternativity(a in oct_strategy(), b in oct_strategy()) {
            let scale = 1.0 + a.norm_sq() * b.norm();
            prop_assert!((a * (a * b) - (a * a) * b).max_abs_coeff() <= 1e-12 * scale);
            prop_assert!(((b * a) * a - b * (a * a)).max_abs_coeff() <= 1e-12 * scale);
        }

        #[test]
        fn associator_antisymmetry(a in oct_strategy(), b in oct_strategy(), c in oct_strategy()) {
            let scale = 1.0 + a.norm() * b.norm() * c.norm();
            let s = associator(a, b, c);
            prop_assert!((s + associator(b, a, c)).max_abs_coeff() <= 1e-12 * scale);
            prop_assert!((s + associator(a, c, b)).max_abs_coeff() <= 1e-12 * scale);
            prop_assert!(s.re().abs() <= 1e-12 * scale);
        }

        #[test]
        fn conjugation_flip(a in oct_strategy(), b in oct_strategy(), c in oct_strategy()) {
            let scale = 1.0 + a.norm() * b.norm() * c.norm();
            prop_assert!(
                (associator(a.conj(), b, c) + associator(a, b, c)).max_abs_coeff() <= 1e-12 * scale
            );
            prop_assert!((phi(a.conj(), b, c) + phi(a, b, c)).abs() <= 1e-12 * scale);
        }

        #[test]
        fn triple_cross_real_part(a in oct_strategy(), b in oct_strategy(), c in oct_strategy()) {
            let scale = 1.0 + a.norm() * b.norm() * c.norm();
            prop_assert!((triple_cross(a, b, c).re() - phi(a, b, c)).abs() <= 1e-12 * scale);
        }
    }
}

//! Brute-force verification path through real symmetric matrices.
//!
//! An `n x n` octonionic Hermitian matrix acts on coefficient vectors as an
//! `8n x 8n` real symmetric matrix: block `(i,j)` is the left-multiplication
//! matrix of entry `Aᵢⱼ`, and conjugation transposing those blocks is
//! exactly what Hermiticity needs. Diagonalizing the embedding with Jacobi
//! rotations gives the full real spectrum — 24 eigenvalues for the 3x3 case,
//! whose multiplicity structure (generically 6 clusters of 4) is the
//! independent check on the analytic solver.
//!
//! One caveat carries over from the construction: the embedding does not
//! preserve the octonionic inner product, so real-orthogonality of two
//! lifted eigenvectors says nothing about the generalized orthogonality
//! `(v v†) w = 0`. A test pins that non-property.

use crate::hermitian::{Herm2, Herm3, OctMatrix, OctVec, OctVec3};
use crate::octonion::left_mul_matrix;
use crate::{Error, Result};

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug)]
pub struct RealSymMatrix {
    n: usize,
    a: Vec<f64>,
}

impl RealSymMatrix {
    pub fn zeros(n: usize) -> Self {
        RealSymMatrix { n, a: vec![0.0; n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: f64) {
        self.a[i * self.n + j] = x;
    }

    pub fn frobenius(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn symmetry_residual(&self) -> f64 {
        let mut r = 0.0f64;
        for i in 0..self.n {
            for j in 0..i {
                r = r.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        r
    }

    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.a[i * self.n..(i + 1) * self.n];
            *yi = row.iter().zip(x.iter()).map(|(a, b)| a * b).sum();
        }
        y
    }
}

/// Full real spectrum of a symmetric matrix: ascending eigenvalues with the
/// matching orthonormal eigenvectors (`eigenvectors[k]` pairs with
/// `eigenvalues[k]`).
#[derive(Clone, Debug)]
pub struct RealSpectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Vec<Vec<f64>>,
}

/// Embed a grid of octonions blockwise; symmetric by construction when the
/// grid is Hermitian (lower blocks are written as exact transposes).
fn embed_grid<const N: usize>(grid: &OctMatrix<N>) -> RealSymMatrix {
    let mut m = RealSymMatrix::zeros(8 * N);
    for bi in 0..N {
        for bj in bi..N {
            let block = left_mul_matrix(grid.0[bi][bj]);
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    m.set(8 * bi + r, 8 * bj + c, *x);
                    if bi != bj {
                        m.set(8 * bj + c, 8 * bi + r, *x);
                    }
                }
            }
        }
    }
    m
}

/// The 16x16 real symmetric embedding of a 2x2 Hermitian matrix.
pub fn embed2(a: &Herm2) -> RealSymMatrix {
    embed_grid(&a.to_matrix())
}

/// The 24x24 real symmetric embedding of a 3x3 Hermitian matrix.
pub fn embed3(a: &Herm3) -> RealSymMatrix {
    embed_grid(&a.to_matrix())
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization, row-major upper-triangle sweep order,
/// iterated until the off-diagonal Frobenius norm drops below `1e-12·‖M‖`.
pub fn jacobi_eigen(m: &RealSymMatrix) -> Result<RealSpectrum> {
    let n = m.dim();
    let mut a = m.clone();
    let mut v = RealSymMatrix::zeros(n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let threshold = 1e-12 * m.frobenius().max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    s += 2.0 * a.get(i, j) * a.get(i, j);
                }
            }
            s.sqrt()
        };
        if off < threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a.get(p, p), a.get(q, q));
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a.get(k, p), a.get(k, q));
                    a.set(k, p, c * akp - s * akq);
                    a.set(k, q, s * akp + c * akq);
                }
                for k in 0..n {
                    let (apk, aqk) = (a.get(p, k), a.get(q, k));
                    a.set(p, k, c * apk - s * aqk);
                    a.set(q, k, s * apk + c * aqk);
                }
                for k in 0..n {
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    if !converged {
        return Err(Error::JacobiNonConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let eigenvalues = order.iter().map(|&i| a.get(i, i)).collect();
    let eigenvectors = order
        .iter()
        .map(|&col| (0..n).map(|row| v.get(row, col)).collect())
        .collect();
    Ok(RealSpectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// One group of numerically coincident oracle eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cluster {
    pub value: f64,
    pub count: usize,
}

fn cluster(eigenvalues: &[f64], gap: f64) -> Vec<Cluster> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=eigenvalues.len() {
        if i == eigenvalues.len() || eigenvalues[i] - eigenvalues[i - 1] > gap {
            let slice = &eigenvalues[start..i];
            out.push(Cluster {
                value: slice.iter().sum::<f64>() / slice.len() as f64,
                count: slice.len(),
            });
            start = i;
        }
    }
    out
}

/// Oracle spectrum of a 3x3 Hermitian matrix, clustered with gap threshold
/// `1e-7·(1+‖A‖)`. Generic octonionic input: 6 clusters of 4. Complex-type
/// input: at most 3 clusters of 8.
pub fn spectrum_with_multiplicity(a: &Herm3) -> Result<Vec<Cluster>> {
    let spec = jacobi_eigen(&embed3(a))?;
    Ok(cluster(&spec.eigenvalues, cluster_gap(a)))
}

/// The clustering threshold used for multiplicity detection: well above the
/// Jacobi residual, well below generic eigenvalue gaps.
pub fn cluster_gap(a: &Herm3) -> f64 {
    1e-7 * (1.0 + a.max_coeff_norm())
}

/// Real-orthonormal basis of the eigenspace of `embed(A)` at `lambda`,
/// lifted back to octonionic vectors. Empty when `lambda` is not an
/// eigenvalue (no oracle eigenvalue within the cluster gap).
pub fn kernel_basis(a: &Herm3, lambda: f64) -> Result<Vec<OctVec3>> {
    let spec = jacobi_eigen(&embed3(a))?;
    let gap = cluster_gap(a);
    let mut out = Vec::new();
    for (val, vec) in spec.eigenvalues.iter().zip(spec.eigenvectors.iter()) {
        if (val - lambda).abs() <= gap {
            out.push(OctVec::<3>::from_coords(vec)?);
        }
    }
    Ok(out)
}

/// Lift `8n` real coordinates back to an octonionic vector (n = 2 or 3).
pub fn lift3(xs: &[f64]) -> Result<OctVec3> {
    OctVec::<3>::from_coords(xs)
}

pub fn lift2(xs: &[f64]) -> Result<OctVec<2>> {
    OctVec::<2>::from_coords(xs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::{outer, OctVec2};
    use crate::octonion::Octonion;
    use crate::rng::{random_herm3, random_octonion, MatrixClass, SplitMix64};

    #[test]
    fn embed_identity_and_diag() {
        let m = embed3(&Herm3::identity());
        for i in 0..24 {
            for j in 0..24 {
                assert_eq!(m.get(i, j), if i == j { 1.0 } else { 0.0 });
            }
        }
        let d = embed3(&Herm3::diag(1.0, 2.0, 3.0));
        for i in 0..24 {
            assert_eq!(d.get(i, i), (i / 8 + 1) as f64);
        }
    }

    #[test]
    fn embed_symmetric_exactly_and_consistent() {
        let mut rng = SplitMix64::new(21);
        for _ in 0..30 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 3.0);
            let m = embed3(&a);
            assert_eq!(m.symmetry_residual(), 0.0);
            let v = OctVec([
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
                random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
            ]);
            let through_embed = m.mat_vec(&v.coords());
            let direct = a.mat_vec(&v).coords();
            for (x, y) in through_embed.iter().zip(direct.iter()) {
                assert!((x - y).abs() <= 1e-12 * (1.0 + y.abs()));
            }
        }
    }

    #[test]
    fn jacobi_small_cases() {
        let mut d = RealSymMatrix::zeros(3);
        d.set(0, 0, 3.0);
        d.set(1, 1, -1.0);
        d.set(2, 2, 0.5);
        let s = jacobi_eigen(&d).unwrap();
        assert_eq!(s.eigenvalues, vec![-1.0, 0.5, 3.0]);

        let mut f = RealSymMatrix::zeros(2);
        f.set(0, 1, 1.0);
        f.set(1, 0, 1.0);
        let s = jacobi_eigen(&f).unwrap();
        assert!((s.eigenvalues[0] + 1.0).abs() <= 1e-14);
        assert!((s.eigenvalues[1] - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn jacobi_residuals_and_orthogonality() {
        let mut rng = SplitMix64::new(22);
        let a = random_herm3(&mut rng, MatrixClass::Octonionic, 3.0);
        let m = embed3(&a);
        let s = jacobi_eigen(&m).unwrap();
        let mnorm = m.frobenius();
        for (val, vec) in s.eigenvalues.iter().zip(s.eigenvectors.iter()) {
            let mv = m.mat_vec(vec);
            let res: f64 = mv
                .iter()
                .zip(vec.iter())
                .map(|(x, y)| (x - val * y).powi(2))
                .sum::<f64>()
                .sqrt();
            assert!(res <= 1e-9 * mnorm);
        }
        for i in 0..24 {
            for j in 0..24 {
                let dot: f64 = s.eigenvectors[i]
                    .iter()
                    .zip(s.eigenvectors[j].iter())
                    .map(|(x, y)| x * y)
                    .sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn multiplicity_patterns() {
        let clusters = spectrum_with_multiplicity(&Herm3::identity()).unwrap();
        assert_eq!(clusters.len(), 1);
        assert_eq!(clusters[0].count, 24);
        assert!((clusters[0].value - 1.0).abs() <= 1e-12);

        let h = Herm3::new(0.0, 0.0, 0.0, Octonion::I, Octonion::J, Octonion::L);
        let clusters = spectrum_with_multiplicity(&h).unwrap();
        let shape: Vec<(i64, usize)> = clusters
            .iter()
            .map(|c| (c.value.round() as i64, c.count))
            .collect();
        assert_eq!(shape, vec![(-2, 4), (-1, 8), (1, 8), (2, 4)]);

        let mut rng = SplitMix64::new(23);
        for _ in 0..10 {
            let a = random_herm3(&mut rng, MatrixClass::Octonionic, 2.0);
            let clusters = spectrum_with_multiplicity(&a).unwrap();
            assert_eq!(clusters.len(), 6, "clusters: {clusters:?}");
            assert!(clusters.iter().all(|c| c.count == 4));
        }
    }

    #[test]
    fn kernel_basis_dimensions() {
        let d = Herm3::diag(1.0, 2.0, 3.0);
        let basis = kernel_basis(&d, 2.0).unwrap();
        assert_eq!(basis.len(), 8);
        for v in &basis {
            // spans (0, q, 0)
            assert!(v.0[0].max_abs_coeff() <= 1e-10);
            assert!(v.0[2].max_abs_coeff() <= 1e-10);
        }
        assert!(kernel_basis(&d, 5.0).unwrap().is_empty());
    }

    #[test]
    fn lift_round_trip() {
        let mut rng = SplitMix64::new(24);
        let v = OctVec([
            random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
            random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
            random_octonion(&mut rng, MatrixClass::Octonionic, 2.0),
        ]);
        assert_eq!(lift3(&v.coords()).unwrap(), v);
        assert!(lift3(&[0.0; 16]).is_err());
        let e: OctVec2 = lift2(&{
            let mut xs = vec![0.0; 16];
            xs[8 + 4] = 1.0; // basis octonion l in component 1
            xs
        })
        .unwrap();
        assert_eq!(e.0[1], Octonion::L);
    }

    #[test]
    fn real_orthogonality_does_not_imply_octonionic() {
        // Two real-orthonormal eigenvectors of the embedded worked instance
        // at eigenvalue 2; their lifted generalized-orthogonality residual
        // is far from zero.
        let h = Herm3::new(0.0, 0.0, 0.0, Octonion::I, Octonion::J, Octonion::L);
        let basis = kernel_basis(&h, 2.0).unwrap();
        assert_eq!(basis.len(), 4);
        let (u, w) = (&basis[0], &basis[1]);
        let real_dot: f64 = u
            .coords()
            .iter()
            .zip(w.coords().iter())
            .map(|(x, y)| x * y)
            .sum();
        assert!(real_dot.abs() <= 1e-9);
        let resid = outer(u).mat_vec(w).max_abs_coeff();
        assert!(
            resid > 0.05,
            "expected generalized orthogonality to fail, residual {resid}"
        );
    }
}

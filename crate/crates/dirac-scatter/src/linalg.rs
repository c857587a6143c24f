//! Thin layer over `faer`: in-place LU with adjoint solves, norm/condition
//! estimates, smallest singular value, and general complex eigendecomposition.

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::lu::partial_pivoting::{factor, solve};
use faer::perm::PermRef;
use faer::{Conj, Mat, MatMut, MatRef, Par};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = Mat<Complex64>;

/// LU factorization with partial pivoting that owns (and overwrote) its input.
pub struct LuFactor {
    lu: CMat,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    norm1: f64,
}

pub fn norm1(a: MatRef<'_, Complex64>) -> f64 {
    (0..a.ncols())
        .map(|j| (0..a.nrows()).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn norm_fro(a: MatRef<'_, Complex64>) -> f64 {
    let mut s = 0.0;
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            s += a[(i, j)].norm_sqr();
        }
    }
    s.sqrt()
}

/// Deterministic, well-spread start vector for iterative estimates.
fn start_vector(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            let t = i as f64;
            Complex64::new((0.7 * t + 0.3).sin() + 1.1, (1.3 * t + 0.1).cos())
        })
        .collect()
}

impl LuFactor {
    pub fn new(mut a: CMat) -> Result<Self> {
        let n = a.nrows();
        if n != a.ncols() {
            return Err(Error::Invalid("LU of a non-square matrix".into()));
        }
        let norm1 = norm1(a.as_ref());
        let mut fwd = vec![0usize; n];
        let mut bwd = vec![0usize; n];
        let par = Par::Seq;
        let mut mem = MemBuffer::new(factor::lu_in_place_scratch::<usize, Complex64>(n, n, par, Default::default()));
        factor::lu_in_place(a.as_mut(), &mut fwd, &mut bwd, par, MemStack::new(&mut mem), Default::default());
        if (0..n).any(|i| !a[(i, i)].is_finite()) {
            return Err(Error::Numerical("non-finite pivot in LU".into()));
        }
        Ok(LuFactor { lu: a, fwd, bwd, norm1 })
    }

    pub fn dim(&self) -> usize {
        self.lu.nrows()
    }

    fn perm(&self) -> PermRef<'_, usize> {
        PermRef::new_checked(&self.fwd, &self.bwd, self.dim())
    }

    /// Overwrites `rhs` with `A⁻¹ rhs`.
    pub fn solve_in_place(&self, rhs: MatMut<'_, Complex64>) {
        let k = rhs.ncols();
        let mut mem = MemBuffer::new(solve::solve_in_place_scratch::<usize, Complex64>(self.dim(), k, Par::Seq));
        solve::solve_in_place_with_conj(
            self.lu.as_ref(),
            self.lu.as_ref(),
            self.perm(),
            Conj::No,
            rhs,
            Par::Seq,
            MemStack::new(&mut mem),
        );
    }

    /// Overwrites `rhs` with `A⁻* rhs`.
    pub fn solve_adjoint_in_place(&self, rhs: MatMut<'_, Complex64>) {
        let k = rhs.ncols();
        let mut mem =
            MemBuffer::new(solve::solve_transpose_in_place_scratch::<usize, Complex64>(self.dim(), k, Par::Seq));
        solve::solve_transpose_in_place_with_conj(
            self.lu.as_ref(),
            self.lu.as_ref(),
            self.perm(),
            Conj::Yes,
            rhs,
            Par::Seq,
            MemStack::new(&mut mem),
        );
    }

    pub fn solve_vec(&self, b: &[Complex64]) -> Vec<Complex64> {
        let mut m = CMat::from_fn(b.len(), 1, |i, _| b[i]);
        self.solve_in_place(m.as_mut());
        (0..b.len()).map(|i| m[(i, 0)]).collect()
    }

    pub fn solve_adjoint_vec(&self, b: &[Complex64]) -> Vec<Complex64> {
        let mut m = CMat::from_fn(b.len(), 1, |i, _| b[i]);
        self.solve_adjoint_in_place(m.as_mut());
        (0..b.len()).map(|i| m[(i, 0)]).collect()
    }

    /// Hager–Higham estimate of `‖A⁻¹‖₁`.
    pub fn inverse_norm1_estimate(&self) -> f64 {
        let n = self.dim();
        let mut x = vec![Complex64::from(1.0 / n as f64); n];
        let mut est = 0.0;
        for _ in 0..5 {
            let y = self.solve_vec(&x);
            est = y.iter().map(|v| v.norm()).sum::<f64>();
            let xi: Vec<Complex64> =
                y.iter().map(|v| if v.norm() > 0.0 { v / v.norm() } else { Complex64::from(1.0) }).collect();
            let z = self.solve_adjoint_vec(&xi);
            let (jmax, zmax) = z
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v.norm()))
                .fold((0, -1.0), |a, b| if b.1 > a.1 { b } else { a });
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
            if zmax <= ztx {
                break;
            }
            x = vec![Complex64::from(0.0); n];
            x[jmax] = Complex64::from(1.0);
        }
        est
    }

    /// `‖A‖₁ · est(‖A⁻¹‖₁)`.
    pub fn condition_estimate(&self) -> f64 {
        self.norm1 * self.inverse_norm1_estimate()
    }

    /// Smallest singular value: block inverse iteration on `A*A` with a
    /// Rayleigh–Ritz step, so clustered small singular values converge quickly.
    pub fn sigma_min(&self) -> f64 {
        let n = self.dim();
        let p = n.min(8);
        let start = start_vector(n * p);
        let mut q = CMat::from_fn(n, p, |i, j| start[j * n + i] * Complex64::new(1.0, 0.1 * j as f64));
        orthonormalize(&mut q);
        let mut prev = 0.0;
        let mut rho = 0.0;
        for _ in 0..200 {
            // W = A^{-*}Q, H = W*W = Q*(A*A)^{-1}Q
            let mut w = q.clone();
            self.solve_adjoint_in_place(w.as_mut());
            let h = w.adjoint() * &w;
            rho = match hermitian_eigen(h.as_ref()) {
                Ok((vals, _)) => vals[p - 1],
                Err(_) => break,
            };
            if (rho - prev).abs() <= 1e-12 * rho {
                break;
            }
            prev = rho;
            self.solve_in_place(w.as_mut());
            q = w;
            orthonormalize(&mut q);
        }
        1.0 / rho.sqrt()
    }
}

/// Modified Gram–Schmidt, applied twice.
fn orthonormalize(q: &mut CMat) {
    let (n, p) = (q.nrows(), q.ncols());
    for _ in 0..2 {
        for j in 0..p {
            for k in 0..j {
                let mut d = Complex64::from(0.0);
                for i in 0..n {
                    d += q[(i, k)].conj() * q[(i, j)];
                }
                for i in 0..n {
                    let v = q[(i, k)];
                    q[(i, j)] -= d * v;
                }
            }
            let nrm = (0..n).map(|i| q[(i, j)].norm_sqr()).sum::<f64>().sqrt();
            for i in 0..n {
                q[(i, j)] /= nrm;
            }
        }
    }
}

/// Eigenvalues and (unit-norm) eigenvectors of a general complex matrix.
pub fn eigen(a: MatRef<'_, Complex64>) -> Result<(Vec<Complex64>, CMat)> {
    let evd = faer::linalg::solvers::Eigen::new(a).map_err(|e| Error::Numerical(format!("eigensolver: {e:?}")))?;
    let s = evd.S();
    let vals: Vec<Complex64> = (0..a.nrows()).map(|i| s[i]).collect();
    let u = evd.U().to_owned();
    Ok((vals, u))
}

/// Hermitian eigendecomposition: ascending real eigenvalues and orthonormal eigenvectors.
pub fn hermitian_eigen(a: MatRef<'_, Complex64>) -> Result<(Vec<f64>, CMat)> {
    let evd = a
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Numerical(format!("hermitian eigensolver: {e:?}")))?;
    let s = evd.S();
    let vals: Vec<f64> = (0..a.nrows()).map(|i| s[i].re).collect();
    Ok((vals, evd.U().to_owned()))
}

/// `A*A - I` spectral norm estimate by power iteration on the Hermitian defect.
pub fn unitarity_defect(a: MatRef<'_, Complex64>) -> f64 {
    let n = a.nrows();
    let d = a.adjoint() * a - CMat::identity(n, n);
    spectral_norm_hermitian(d.as_ref())
}

/// Largest |eigenvalue| of a Hermitian matrix.
pub fn spectral_norm_hermitian(a: MatRef<'_, Complex64>) -> f64 {
    match hermitian_eigen(a) {
        Ok((v, _)) => v.iter().fold(0.0f64, |m, x| m.max(x.abs())),
        Err(_) => f64::NAN,
    }
}

/// Largest singular value.
pub fn spectral_norm(a: MatRef<'_, Complex64>) -> f64 {
    let g = a.adjoint() * a;
    spectral_norm_hermitian(g.as_ref()).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_matrix(n: usize, shift: f64) -> CMat {
        CMat::from_fn(n, n, |i, j| {
            let t = (i * 7 + j * 13) as f64;
            Complex64::new((0.37 * t).sin(), (0.91 * t + 0.2).cos()) * 0.3 + if i == j { Complex64::from(shift) } else { Complex64::from(0.0) }
        })
    }

    #[test]
    fn lu_solves_and_adjoint_solves() {
        let n = 37;
        let a = test_matrix(n, 4.0);
        let b = CMat::from_fn(n, 3, |i, j| Complex64::new(i as f64 - j as f64, 1.0 + j as f64));
        let lu = LuFactor::new(a.clone()).unwrap();
        let mut x = b.clone();
        lu.solve_in_place(x.as_mut());
        assert!(norm_fro((&a * &x - &b).as_ref()) < 1e-12 * norm_fro(b.as_ref()));
        let mut y = b.clone();
        lu.solve_adjoint_in_place(y.as_mut());
        assert!(norm_fro((a.adjoint() * &y - &b).as_ref()) < 1e-12 * norm_fro(b.as_ref()));
    }

    #[test]
    fn sigma_min_of_diagonal() {
        let n = 20;
        let a = CMat::from_fn(n, n, |i, j| if i == j { Complex64::from(1.0 + i as f64) } else { Complex64::from(0.0) });
        let lu = LuFactor::new(a).unwrap();
        assert!((lu.sigma_min() - 1.0).abs() < 1e-9);
        let est = lu.condition_estimate();
        assert!((est - 20.0).abs() < 1e-9, "{est}");
    }

    #[test]
    fn sigma_min_matches_hermitian_eigen() {
        let n = 25;
        let a = test_matrix(n, 0.5);
        let (vals, _) = hermitian_eigen((a.adjoint() * &a).as_ref()).unwrap();
        let want = vals[0].sqrt();
        let got = LuFactor::new(a).unwrap().sigma_min();
        assert!((got - want).abs() < 1e-6 * want, "{got} vs {want}");
    }

    #[test]
    fn eigen_reconstructs() {
        let n = 12;
        let a = test_matrix(n, 0.0);
        let (vals, u) = eigen(a.as_ref()).unwrap();
        for j in 0..n {
            let v = u.col(j);
            let av = &a * v;
            let mut r = 0.0;
            for i in 0..n {
                r += (av[i] - vals[j] * v[i]).norm_sqr();
            }
            assert!(r.sqrt() < 1e-10);
        }
    }

    #[test]
    fn unitary_has_no_defect() {
        let th = 0.4f64;
        let a = CMat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) | (1, 1) => Complex64::from(th.cos()),
            (0, 1) => Complex64::new(0.0, th.sin()),
            _ => Complex64::new(0.0, th.sin()),
        });
        assert!(unitarity_defect(a.as_ref()) < 1e-15);
        assert!((spectral_norm(a.as_ref()) - 1.0).abs() < 1e-14);
    }
}

//! Dirac and Pauli matrices, free spinors and the two-column frames `Z_p`.
//!
//! Conventions: `α_s = [[0, σ_s], [σ_s, 0]]`, `β = diag(1, 1, -1, -1)`; the free
//! symbol at momentum `k` is `mβ + α·k` with eigenvalues `±√(k² + m²)`.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Vec3 = [f64; 3];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Below this ratio `|k|/m` the lower-energy denominators switch to the directional limit.
pub const SMALL_MOMENTUM: f64 = 1e-8;

pub fn dot3(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn norm3(a: &Vec3) -> f64 {
    dot3(a, a).sqrt()
}

pub fn sub3(a: &Vec3, b: &Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn scale3(a: &Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix2(pub [[Complex64; 2]; 2]);

impl Matrix2 {
    pub fn identity() -> Self {
        Matrix2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn zero() -> Self {
        Matrix2([[ZERO; 2]; 2])
    }

    pub fn adjoint(&self) -> Self {
        let a = &self.0;
        Matrix2([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let mut out = Matrix2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0] * rhs.0[0][j] + self.0[i][1] * rhs.0[1][j];
            }
        }
        out
    }
}

impl Mul<Matrix2> for Complex64 {
    type Output = Matrix2;
    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let mut out = rhs;
        out.0.iter_mut().flatten().for_each(|x| *x *= self);
        out
    }
}

/// Dense 4×4 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix4(pub [[Complex64; 4]; 4]);

impl Default for Matrix4 {
    fn default() -> Self {
        Matrix4::zero()
    }
}

impl Matrix4 {
    pub fn zero() -> Self {
        Matrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        Self::diag([ONE; 4])
    }

    pub fn diag(d: [Complex64; 4]) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.0[i][i] = d[i];
        }
        m
    }

    pub fn from_blocks(a: Matrix2, b: Matrix2, c: Matrix2, d: Matrix2) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = a.0[i][j];
                m.0[i][j + 2] = b.0[i][j];
                m.0[i + 2][j] = c.0[i][j];
                m.0[i + 2][j + 2] = d.0[i][j];
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x *= s);
        m
    }

    pub fn scale_re(&self, s: f64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x *= s);
        m
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..4).map(|i| self.0[i][i]).sum()
    }

    pub fn mul_vec(&self, v: &Spinor4) -> Spinor4 {
        let mut out = [ZERO; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i][0] * v.0[0]
                + self.0[i][1] * v.0[1]
                + self.0[i][2] * v.0[2]
                + self.0[i][3] * v.0[3];
        }
        Spinor4(out)
    }

    pub fn norm_fro(&self) -> f64 {
        self.0.iter().flatten().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    /// Spectral norm: square root of the largest eigenvalue of `A*A`.
    pub fn op_norm(&self) -> f64 {
        let g = self.adjoint() * *self;
        let a = faer::Mat::from_fn(4, 4, |i, j| g.0[i][j]);
        match crate::linalg::hermitian_eigen(a.as_ref()) {
            Ok((vals, _)) => vals[3].max(0.0).sqrt(),
            Err(_) => f64::NAN,
        }
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut out = Matrix4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = ZERO;
                for k in 0..4 {
                    s += self.0[i][k] * rhs.0[k][j];
                }
                out.0[i][j] = s;
            }
        }
        out
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Sub for Matrix4 {
    type Output = Matrix4;
    fn sub(self, rhs: Matrix4) -> Matrix4 {
        let mut out = self;
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] -= rhs.0[i][j];
            }
        }
        out
    }
}

impl Neg for Matrix4 {
    type Output = Matrix4;
    fn neg(self) -> Matrix4 {
        self.scale_re(-1.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor4(pub [Complex64; 4]);

impl Spinor4 {
    pub fn zero() -> Self {
        Spinor4([ZERO; 4])
    }

    pub fn basis(i: usize) -> Self {
        let mut s = Self::zero();
        s.0[i] = ONE;
        s
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `self* · other` (conjugate-linear in `self`).
    pub fn inner(&self, other: &Spinor4) -> Complex64 {
        (0..4).map(|i| self.0[i].conj() * other.0[i]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Spinor4 {
        Spinor4(self.0.map(|x| x * s))
    }

    pub fn add(&self, o: &Spinor4) -> Spinor4 {
        Spinor4([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2], self.0[3] + o.0[3]])
    }

    pub fn sub(&self, o: &Spinor4) -> Spinor4 {
        Spinor4([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2], self.0[3] - o.0[3]])
    }

    pub fn normalized(&self) -> Spinor4 {
        self.scale(Complex64::from(1.0 / self.norm()))
    }
}

/// Mass, energy and momentum magnitude at one spectral point.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Kinematics {
    pub m: f64,
    pub lambda: f64,
    pub kappa: f64,
}

impl Kinematics {
    pub fn new(m: f64, lambda: f64) -> Result<Self> {
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::Invalid(format!("mass must be positive, got {m}")));
        }
        if !(lambda.abs() > m) || !lambda.is_finite() {
            return Err(Error::Invalid(format!("requires |lambda| > m (lambda = {lambda}, m = {m})")));
        }
        let kappa = ((lambda - m) * (lambda + m)).sqrt();
        Ok(Kinematics { m, lambda, kappa })
    }

    /// Wave vector `κω` for a direction `ω` (normalized internally).
    pub fn wavevector(&self, omega: &Vec3) -> Vec3 {
        scale3(omega, self.kappa / norm3(omega))
    }

    /// `+1` above the gap, `-1` below.
    pub fn sign(&self) -> f64 {
        self.lambda.signum()
    }

    /// Energy block: 2 for `λ > m` (channels 3, 4), 1 for `λ < -m` (channels 1, 2).
    pub fn block(&self) -> usize {
        if self.lambda > 0.0 {
            2
        } else {
            1
        }
    }
}

pub fn pauli(s: usize) -> Result<Matrix2> {
    match s {
        1 => Ok(Matrix2([[ZERO, ONE], [ONE, ZERO]])),
        2 => Ok(Matrix2([[ZERO, -I], [I, ZERO]])),
        3 => Ok(Matrix2([[ONE, ZERO], [ZERO, -ONE]])),
        _ => Err(Error::Index { what: "Pauli index", got: s, range: "1..=3" }),
    }
}

pub fn alpha(s: usize) -> Result<Matrix4> {
    let sig = pauli(s)?;
    Ok(Matrix4::from_blocks(Matrix2::zero(), sig, sig, Matrix2::zero()))
}

pub fn beta() -> Matrix4 {
    Matrix4::diag([ONE, ONE, -ONE, -ONE])
}

/// `Σ_s a_s α_s` for a real 3-vector.
pub fn alpha_dot(a: &Vec3) -> Matrix4 {
    let p = Complex64::new(a[0], -a[1]);
    let q = Complex64::new(a[0], a[1]);
    let z = Complex64::from(a[2]);
    Matrix4([
        [ZERO, ZERO, z, p],
        [ZERO, ZERO, q, -z],
        [z, p, ZERO, ZERO],
        [q, -z, ZERO, ZERO],
    ])
}

/// Momentum-space symbol `mβ + α·k` of the free operator.
pub fn dirac_symbol(k: &Vec3, m: f64) -> Matrix4 {
    alpha_dot(k) + beta().scale_re(m)
}

fn check_channel(n: usize) -> Result<()> {
    if (1..=4).contains(&n) {
        Ok(())
    } else {
        Err(Error::Index { what: "spinor channel", got: n, range: "1..=4" })
    }
}

/// `λ_n(k)`: `-√(k²+m²)` for n = 1, 2 and `+√(k²+m²)` for n = 3, 4.
pub fn energy(n: usize, k: &Vec3, m: f64) -> Result<f64> {
    check_channel(n)?;
    let e = (dot3(k, k) + m * m).sqrt();
    Ok(if n <= 2 { -e } else { e })
}

/// Denominator `m ± λ₃` and its cancellation-free form for the lower sign.
fn denominator(n: usize, k2: f64, m: f64) -> f64 {
    let l3 = (k2 + m * m).sqrt();
    if n <= 2 {
        m + l3
    } else {
        -k2 / (m + l3)
    }
}

fn raw_spinor(n: usize, k: &Vec3, d: Complex64) -> Spinor4 {
    // `d · g_n`: the momentum entries carry no denominator
    let z = Complex64::from(k[2]);
    match n {
        1 | 3 => Spinor4([Complex64::new(-k[0], k[1]), z, ZERO, d]),
        _ => Spinor4([-z, Complex64::new(-k[0], -k[1]), d, ZERO]),
    }
}

/// Unnormalized free spinor `g_n(k)`.
pub fn spinor(n: usize, k: &Vec3, m: f64) -> Result<Spinor4> {
    check_channel(n)?;
    let k2 = dot3(k, k);
    if n >= 3 && k2.sqrt() < SMALL_MOMENTUM * m {
        return Err(Error::DirectionalLimit { n, k: k2.sqrt() });
    }
    let d = denominator(n, k2, m);
    Ok(raw_spinor(n, k, Complex64::from(d)).scale(Complex64::from(1.0 / d)))
}

/// `ĝ_n(k) = g_n(k)/|g_n(k)|`; for n = 3, 4 at tiny `|k|` the limit along `k/|k|` is used.
pub fn normalized_spinor(n: usize, k: &Vec3, m: f64) -> Result<Spinor4> {
    check_channel(n)?;
    let k2 = dot3(k, k);
    if n <= 2 {
        return Ok(spinor(n, k, m)?.normalized());
    }
    let kn = k2.sqrt();
    if kn == 0.0 {
        return Err(Error::DirectionalLimit { n, k: 0.0 });
    }
    if kn < SMALL_MOMENTUM * m {
        let dir = scale3(k, 1.0 / kn);
        return Ok(raw_spinor(n, &dir, ZERO).normalized().scale(-ONE));
    }
    let d = denominator(n, k2, m);
    Ok(raw_spinor(n, k, Complex64::from(d)).normalized().scale(Complex64::from(d.signum())))
}

/// Two-column frame `Z_p(k)`: `[ĝ₁, ĝ₂]` for p = 1, `[ĝ₃, ĝ₄]` for p = 2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame {
    pub p: usize,
    pub cols: [Spinor4; 2],
}

impl Frame {
    /// `Z* v` as a 2-vector.
    pub fn adjoint_apply(&self, v: &Spinor4) -> [Complex64; 2] {
        [self.cols[0].inner(v), self.cols[1].inner(v)]
    }

    pub fn apply(&self, c: &[Complex64; 2]) -> Spinor4 {
        self.cols[0].scale(c[0]).add(&self.cols[1].scale(c[1]))
    }

    /// `Z_a* Z_b`.
    pub fn gram(&self, other: &Frame) -> Matrix2 {
        let mut g = Matrix2::zero();
        for i in 0..2 {
            for j in 0..2 {
                g.0[i][j] = self.cols[i].inner(&other.cols[j]);
            }
        }
        g
    }

    /// `Z Z*` as a 4×4 matrix.
    pub fn projector(&self) -> Matrix4 {
        let mut p = Matrix4::zero();
        for c in &self.cols {
            for i in 0..4 {
                for j in 0..4 {
                    p.0[i][j] += c.0[i] * c.0[j].conj();
                }
            }
        }
        p
    }
}

pub fn frame(p: usize, k: &Vec3, m: f64) -> Result<Frame> {
    let (a, b) = match p {
        1 => (1, 2),
        2 => (3, 4),
        _ => return Err(Error::Index { what: "frame block", got: p, range: "1..=2" }),
    };
    Ok(Frame { p, cols: [normalized_spinor(a, k, m)?, normalized_spinor(b, k, m)?] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_products() {
        let (s1, s2, s3) = (pauli(1).unwrap(), pauli(2).unwrap(), pauli(3).unwrap());
        assert!((s1 * s2).max_abs_diff(&(I * s3)) < 1e-15);
        assert_eq!(s3, Matrix2([[ONE, ZERO], [ZERO, -ONE]]));
        for s in [s1, s2, s3] {
            assert!((s * s).max_abs_diff(&Matrix2::identity()) < 1e-15);
            assert!(s.trace().norm() < 1e-15);
            assert!(s.max_abs_diff(&s.adjoint()) < 1e-15);
        }
        assert!(pauli(0).is_err());
        assert!(pauli(4).is_err());
    }

    #[test]
    fn dirac_matrices_anticommute() {
        let b = beta();
        assert_eq!(b, Matrix4::diag([ONE, ONE, -ONE, -ONE]));
        for s in 1..=3 {
            let a = alpha(s).unwrap();
            assert!((a * b + b * a).norm_fro() < 1e-15);
            assert!((a * a).max_abs_diff(&Matrix4::identity()) < 1e-15);
            for t in 1..=3 {
                let at = alpha(t).unwrap();
                let expect = if s == t { Matrix4::identity().scale_re(2.0) } else { Matrix4::zero() };
                assert!((a * at + at * a).max_abs_diff(&expect) < 1e-15);
            }
        }
        assert!(alpha(0).is_err());
    }

    #[test]
    fn alpha_dot_matches_sum() {
        let v = [0.3, -1.2, 2.5];
        let sum = alpha(1).unwrap().scale_re(v[0]) + alpha(2).unwrap().scale_re(v[1]) + alpha(3).unwrap().scale_re(v[2]);
        assert!(alpha_dot(&v).max_abs_diff(&sum) < 1e-15);
    }

    #[test]
    fn symbol_examples() {
        assert_eq!(dirac_symbol(&[0.0; 3], 1.0), beta());
        let h = dirac_symbol(&[3.0, 0.0, 0.0], 4.0);
        for n in 1..=4 {
            let k = [3.0, 0.0, 0.0];
            let g = normalized_spinor(n, &k, 4.0).unwrap();
            let e = energy(n, &k, 4.0).unwrap();
            assert_eq!(e.abs(), 5.0);
            assert!(h.mul_vec(&g).sub(&g.scale(c(e, 0.0))).norm() < 1e-13);
        }
    }

    #[test]
    fn spinor_examples() {
        assert_eq!(spinor(1, &[0.0; 3], 1.0).unwrap(), Spinor4([ZERO, ZERO, ZERO, ONE]));
        let cz = 0.8;
        let g = spinor(1, &[0.0, 0.0, cz], 1.0).unwrap();
        let expect = Spinor4([ZERO, c(cz / (1.0 + (1.0 + cz * cz).sqrt()), 0.0), ZERO, ONE]);
        assert!(g.sub(&expect).norm() < 1e-15);
        assert!(spinor(3, &[0.0; 3], 1.0).is_err());
        assert!(spinor(5, &[1.0, 0.0, 0.0], 1.0).is_err());
    }

    #[test]
    fn energy_examples() {
        assert_eq!(energy(1, &[0.0; 3], 1.0).unwrap(), -1.0);
        assert_eq!(energy(4, &[3.0, 0.0, 0.0], 4.0).unwrap(), 5.0);
    }

    #[test]
    fn tiny_momentum_uses_directional_limit() {
        let m = 1.0;
        let dir = [0.6, 0.0, 0.8];
        for n in 3..=4 {
            let a = normalized_spinor(n, &scale3(&dir, 1e-10), m).unwrap();
            let b = normalized_spinor(n, &scale3(&dir, 1e-6), m).unwrap();
            assert!((a.norm() - 1.0).abs() < 1e-14);
            assert!(a.sub(&b).norm() < 1e-5, "limit mismatch {}", a.sub(&b).norm());
        }
        assert!(normalized_spinor(3, &[0.0; 3], m).is_err());
    }

    #[test]
    fn kinematics_validation() {
        let k = Kinematics::new(1.0, 2.0).unwrap();
        assert!((k.kappa * k.kappa + 1.0 - 4.0).abs() < 1e-12);
        assert!(Kinematics::new(1.0, 0.5).is_err());
        assert_eq!(Kinematics::new(1.0, -2.0).unwrap().block(), 1);
    }

    fn vec3() -> impl Strategy<Value = Vec3> {
        prop::array::uniform3(-5.0f64..5.0)
    }

    proptest! {
        #[test]
        fn symbol_squares_to_energy(k in vec3(), m in 0.1f64..5.0) {
            let h = dirac_symbol(&k, m);
            let e2 = dot3(&k, &k) + m * m;
            prop_assert!((h * h).max_abs_diff(&Matrix4::identity().scale_re(e2)) < 1e-12 * e2.max(1.0));
            prop_assert!(h.is_hermitian(0.0));
        }

        #[test]
        fn spinors_form_orthonormal_eigenbasis(k in vec3(), m in 0.1f64..5.0) {
            prop_assume!(norm3(&k) > 1e-3);
            let h = dirac_symbol(&k, m);
            let g: Vec<Spinor4> = (1..=4).map(|n| normalized_spinor(n, &k, m).unwrap()).collect();
            for a in 0..4 {
                let e = energy(a + 1, &k, m).unwrap();
                prop_assert!(h.mul_vec(&g[a]).sub(&g[a].scale(Complex64::from(e))).norm() < 1e-12 * e.abs().max(1.0));
                for b in 0..4 {
                    let want = if a == b { 1.0 } else { 0.0 };
                    prop_assert!((g[a].inner(&g[b]) - want).norm() < 1e-13);
                }
            }
        }

        #[test]
        fn frames_resolve_identity(k in vec3(), m in 0.1f64..5.0) {
            prop_assume!(norm3(&k) > 1e-3);
            let z1 = frame(1, &k, m).unwrap();
            let z2 = frame(2, &k, m).unwrap();
            prop_assert!(z1.gram(&z1).max_abs_diff(&Matrix2::identity()) < 1e-13);
            prop_assert!(z2.gram(&z2).max_abs_diff(&Matrix2::identity()) < 1e-13);
            prop_assert!(z1.gram(&z2).max_abs_diff(&Matrix2::zero()) < 1e-13);
            let p1 = z1.projector();
            prop_assert!((p1 + z2.projector()).max_abs_diff(&Matrix4::identity()) < 1e-13);
            prop_assert!((p1 * p1).max_abs_diff(&p1) < 1e-13);
            prop_assert!((p1.trace() - 2.0).norm() < 1e-13);
        }
    }
}

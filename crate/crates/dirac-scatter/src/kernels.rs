//! Free-particle kernels: the Helmholtz-type scalar `J₊`, the static Dirac kernel
//! `Q`, the outgoing Green's kernel `B₊`, and an FFT-convolution reference for `B₊`.
//!
//! With `G₀ = (2π)^{-3/2}`, the operator `(𝓛₀ - λ - i0)⁻¹` has kernel `G₀·B₊(r - s, λ)`,
//! and `B₊` splits as `Q + c_QJ·λ²·(Q ∗ J₊) + c_J·λ·J₊` with the constants below.
//! The closed form used everywhere else is
//!
//! `B₊(r) = √(π/2) · e^{s|r|}/|r| · [λ + mβ + i(1/|r| - s) α·r̂]`, `s = i·sgn(λ)·κ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use serde::Serialize;

use crate::dirac_algebra::{alpha_dot, beta, norm3, normalized_spinor, scale3, Kinematics, Matrix4, Spinor4, Vec3};
use crate::error::{Error, Result};

/// `√(π/2)`.
pub const SQRT_HALF_PI: f64 = 1.253_314_137_315_500_3;

/// `(2π)^{-3/2}`, the normalization of the resolvent kernel.
pub fn green_prefactor() -> f64 {
    (2.0 * PI).powf(-1.5)
}

/// Coefficient of `λ²·(Q ∗ J₊)` in the convolution split of `B₊`.
pub fn conv_coefficient() -> f64 {
    -green_prefactor()
}

/// Coefficient of `λ·J₊` in the convolution split of `B₊`.
pub const J_COEFFICIENT: f64 = -1.0;

/// Outgoing exponent `s` with `e^{s|r|}`: `+iκ` above the gap, `-iκ` below.
pub fn outgoing_exponent(kin: &Kinematics) -> Complex64 {
    Complex64::new(0.0, kin.sign() * kin.kappa)
}

pub fn j_plus(r: &Vec3, kin: &Kinematics) -> Result<Complex64> {
    let d = norm3(r);
    if d == 0.0 {
        return Err(Error::SingularPoint);
    }
    Ok(-(outgoing_exponent(kin) * d).exp() * (SQRT_HALF_PI / d))
}

pub fn q_kernel(r: &Vec3, m: f64) -> Result<Matrix4> {
    let d = norm3(r);
    if d == 0.0 {
        return Err(Error::SingularPoint);
    }
    let pre = SQRT_HALF_PI * (-m * d).exp() / d;
    let dir = alpha_dot(&scale3(r, 1.0 / d));
    Ok((beta().scale_re(m) + dir.scale(Complex64::new(0.0, m + 1.0 / d))).scale_re(pre))
}

/// Closed-form outgoing Green's kernel.
pub fn b_plus(r: &Vec3, kin: &Kinematics) -> Result<Matrix4> {
    let d = norm3(r);
    if d == 0.0 {
        return Err(Error::SingularPoint);
    }
    Ok(b_plus_unchecked(r, d, kin))
}

#[inline]
pub(crate) fn b_plus_unchecked(r: &Vec3, d: f64, kin: &Kinematics) -> Matrix4 {
    let s = outgoing_exponent(kin);
    let ph = (s * d).exp() * (SQRT_HALF_PI / d);
    let even = ph * kin.lambda;
    let mb = ph * kin.m;
    let c = ph * Complex64::i() * (Complex64::from(1.0 / d) - s) / d;
    let (x, y, z) = (c * r[0], c * r[1], c * r[2]);
    let p = x - Complex64::i() * y;
    let q = x + Complex64::i() * y;
    let zero = Complex64::from(0.0);
    Matrix4([
        [even + mb, zero, z, p],
        [zero, even + mb, q, -z],
        [z, p, even - mb, zero],
        [q, -z, zero, even - mb],
    ])
}

/// `∫_{|x|<ρ} B₊(x) dx`; the odd `α·r̂` part integrates to zero.
pub fn b_plus_ball_integral(rho: f64, kin: &Kinematics) -> Matrix4 {
    let radial = ball_integral_exp_over_r(outgoing_exponent(kin), rho);
    (Matrix4::identity().scale_re(kin.lambda) + beta().scale_re(kin.m)).scale(radial * SQRT_HALF_PI)
}

/// `∫_{|x|<ρ} e^{s|x|}/|x| dx = 4π[e^{sρ}(ρ/s - 1/s²) + 1/s²]`.
pub fn ball_integral_exp_over_r(s: Complex64, rho: f64) -> Complex64 {
    if s.norm() * rho < 1e-4 {
        // series: 4π(ρ²/2 + sρ³/3 + s²ρ⁴/8)
        return 4.0 * PI * (rho * rho / 2.0 + s * rho.powi(3) / 3.0 + s * s * rho.powi(4) / 8.0);
    }
    4.0 * PI * ((s * rho).exp() * (rho / s - 1.0 / (s * s)) + 1.0 / (s * s))
}

/// Incident plane wave `e^{ik·r} ĝ_n(k)`.
pub fn plane_wave(r: &Vec3, k: &Vec3, n: usize, m: f64) -> Result<Spinor4> {
    let g = normalized_spinor(n, k, m)?;
    let ph = k[0] * r[0] + k[1] * r[1] + k[2] * r[2];
    Ok(g.scale(Complex64::from_polar(1.0, ph)))
}

/// Central-difference residual `(mβ - iα·∇ - λ)F` of a matrix field at `r` (columnwise).
pub fn free_residual<F>(f: F, r: &Vec3, m: f64, lambda: f64, h: f64) -> Matrix4
where
    F: Fn(&Vec3) -> Matrix4,
{
    let mut grad = [Matrix4::zero(); 3];
    for (a, g) in grad.iter_mut().enumerate() {
        let mut p = *r;
        let mut q = *r;
        p[a] += h;
        q[a] -= h;
        *g = (f(&p) - f(&q)).scale_re(0.5 / h);
    }
    let mut apply = Matrix4::zero();
    for (a, g) in grad.iter().enumerate() {
        let mut e = [0.0; 3];
        e[a] = 1.0;
        apply = apply + alpha_dot(&e) * *g;
    }
    let center = f(r);
    (beta().scale_re(m) - Matrix4::identity().scale_re(lambda)) * center + apply.scale(-Complex64::i())
}

/// Components of `Q ∗ J₊` on a periodized cube, via FFT.
///
/// `Q = q_s β + Σ_j q_j α_j`; each component is convolved with `J₊` separately.
pub struct ConvolutionReference {
    kin: Kinematics,
    half_width: f64,
    n: usize,
    h: f64,
    /// `[q_s ∗ J, q_1 ∗ J, q_2 ∗ J, q_3 ∗ J]` in wrapped (origin-first) layout.
    conv: [Vec<Complex64>; 4],
}

impl ConvolutionReference {
    pub fn new(kin: Kinematics, half_width: f64, n: usize) -> Result<Self> {
        if !n.is_power_of_two() || n < 8 {
            return Err(Error::Invalid(format!("points per axis must be a power of two >= 8, got {n}")));
        }
        if !(half_width > 0.0) {
            return Err(Error::Invalid("box half-width must be positive".into()));
        }
        let h = 2.0 * half_width / n as f64;
        let m = kin.m;
        let s = outgoing_exponent(&kin);
        let cell = h * h * h;
        let rho = (3.0 / (4.0 * PI)).powf(1.0 / 3.0) * h;
        let total = n * n * n;
        let coord = |i: usize| if i < n / 2 { i as f64 * h } else { (i as f64 - n as f64) * h };

        let mut jf = vec![Complex64::from(0.0); total];
        let mut qf: [Vec<Complex64>; 4] = std::array::from_fn(|_| vec![Complex64::from(0.0); total]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let idx = (i * n + j) * n + k;
                    let r = [coord(i), coord(j), coord(k)];
                    let d = norm3(&r);
                    if d == 0.0 {
                        // cell averages of the integrable singularities
                        jf[idx] = -SQRT_HALF_PI * ball_integral_exp_over_r(s, rho) / cell;
                        let qs_ball = 4.0 * PI * (1.0 - (1.0 + m * rho) * (-m * rho).exp()) / (m * m);
                        qf[0][idx] = Complex64::from(SQRT_HALF_PI * m * qs_ball / cell);
                        continue;
                    }
                    jf[idx] = -(s * d).exp() * (SQRT_HALF_PI / d);
                    let e = SQRT_HALF_PI * (-m * d).exp() / d;
                    qf[0][idx] = Complex64::from(m * e);
                    let qv = Complex64::new(0.0, (m + 1.0 / d) * e / d);
                    for a in 0..3 {
                        qf[a + 1][idx] = qv * r[a];
                    }
                }
            }
        }
        let mut planner = FftPlanner::new();
        let fwd = planner.plan_fft_forward(n);
        let inv = planner.plan_fft_inverse(n);
        fft3(&mut jf, n, fwd.as_ref());
        let scale = cell / total as f64;
        for q in qf.iter_mut() {
            fft3(q, n, fwd.as_ref());
            q.iter_mut().zip(&jf).for_each(|(a, b)| *a *= b * scale);
            fft3(q, n, inv.as_ref());
        }
        Ok(ConvolutionReference { kin, half_width, n, h, conv: qf })
    }

    pub fn kinematics(&self) -> &Kinematics {
        &self.kin
    }

    fn wrapped(&self, ic: [usize; 3]) -> usize {
        let n = self.n;
        let w = |c: usize| (c + n / 2) % n;
        (w(ic[0]) * n + w(ic[1])) * n + w(ic[2])
    }

    /// Value of `(Q ∗ J₊)(x)` at a grid node given in centered indices (`x = -L + i·h`).
    pub fn conv_at_node(&self, ic: [usize; 3]) -> Matrix4 {
        let idx = self.wrapped(ic);
        self.assemble(std::array::from_fn(|c| self.conv[c][idx]))
    }

    pub fn node_position(&self, ic: [usize; 3]) -> Vec3 {
        ic.map(|i| -self.half_width + i as f64 * self.h)
    }

    fn assemble(&self, c: [Complex64; 4]) -> Matrix4 {
        beta().scale(c[0])
            + alpha_dot(&[1.0, 0.0, 0.0]).scale(c[1])
            + alpha_dot(&[0.0, 1.0, 0.0]).scale(c[2])
            + alpha_dot(&[0.0, 0.0, 1.0]).scale(c[3])
    }

    /// `(Q ∗ J₊)(r)` by tricubic Lagrange interpolation.
    pub fn conv_at(&self, r: &Vec3) -> Result<Matrix4> {
        let l = self.half_width;
        if r.iter().any(|x| x.abs() >= l / 2.0) {
            return Err(Error::Invalid(format!("point {r:?} outside the reliable box |x_i| < {}", l / 2.0)));
        }
        let mut base = [0usize; 3];
        let mut wts = [[0.0; 4]; 3];
        for a in 0..3 {
            let t = (r[a] + l) / self.h;
            let i0 = t.floor() as usize;
            let f = t - i0 as f64;
            base[a] = i0 - 1;
            // Lagrange weights on nodes -1, 0, 1, 2
            wts[a] = [
                -f * (f - 1.0) * (f - 2.0) / 6.0,
                (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0,
                -(f + 1.0) * f * (f - 2.0) / 2.0,
                (f + 1.0) * f * (f - 1.0) / 6.0,
            ];
        }
        let mut acc = [Complex64::from(0.0); 4];
        for (i, wi) in wts[0].iter().enumerate() {
            for (j, wj) in wts[1].iter().enumerate() {
                for (k, wk) in wts[2].iter().enumerate() {
                    let idx = self.wrapped([base[0] + i, base[1] + j, base[2] + k]);
                    let w = wi * wj * wk;
                    for (c, a) in acc.iter_mut().enumerate() {
                        *a += self.conv[c][idx] * w;
                    }
                }
            }
        }
        Ok(self.assemble(acc))
    }

    /// `Q + c_QJ λ² (Q ∗ J₊) + c_J λ J₊` at `r`, with `Q` and `J₊` exact.
    pub fn evaluate(&self, r: &Vec3) -> Result<Matrix4> {
        let lam = self.kin.lambda;
        let q = q_kernel(r, self.kin.m)?;
        let j = j_plus(r, &self.kin)?;
        let c = self.conv_at(r)?;
        Ok(q + c.scale_re(conv_coefficient() * lam * lam) + Matrix4::identity().scale(j * (J_COEFFICIENT * lam)))
    }
}

/// One-shot convolution reference at a point; box half-width `R`, `n` points per axis.
pub fn b_plus_convolution_reference(r: &Vec3, kin: &Kinematics, half_width: f64, n: usize) -> Result<Matrix4> {
    ConvolutionReference::new(*kin, half_width, n)?.evaluate(r)
}

/// Compares the reference on boxes `R` and `2R` (same `n`); errors when they disagree by > 10%.
pub fn convolution_aliasing_check(r: &Vec3, kin: &Kinematics, half_width: f64, n: usize) -> Result<f64> {
    let a = b_plus_convolution_reference(r, kin, half_width, n)?;
    let b = b_plus_convolution_reference(r, kin, 2.0 * half_width, n)?;
    let rel = (a - b).norm_fro() / b.norm_fro();
    if rel > 0.1 {
        return Err(Error::Numerical(format!("convolution box too small: doubling R changes B by {rel:.3}")));
    }
    Ok(rel)
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelSampleRow {
    pub r: Vec3,
    pub closed_form_norm: f64,
    pub relative_difference: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualRow {
    pub h: f64,
    /// Largest `‖(mβ - iα·∇ - λ)B₊‖ / ‖B₊‖` over the sample points.
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelCheckReport {
    pub rows: Vec<KernelSampleRow>,
    pub max_relative_difference: f64,
    pub residuals: Vec<ResidualRow>,
    /// Smallest observed convergence order over consecutive steps.
    pub residual_order: f64,
}

/// Closed-form `B₊` against the FFT reference at `points`, and the central-difference
/// free residual of `B₊` for each step in `steps` (successive halvings).
pub fn kernel_two_route_check(kin: &Kinematics, half_width: f64, n: usize, points: &[Vec3], steps: &[f64]) -> Result<KernelCheckReport> {
    if points.is_empty() || steps.len() < 2 {
        return Err(Error::Invalid("need sample points and at least two finite-difference steps".into()));
    }
    let reference = ConvolutionReference::new(*kin, half_width, n)?;
    let mut rows = Vec::with_capacity(points.len());
    for r in points {
        let b = b_plus(r, kin)?;
        let a = reference.evaluate(r)?;
        rows.push(KernelSampleRow { r: *r, closed_form_norm: b.norm_fro(), relative_difference: (a - b).norm_fro() / b.norm_fro() });
    }
    let h_max = steps.iter().cloned().fold(0.0, f64::max);
    if points.iter().any(|r| norm3(r) <= 2.0 * h_max) {
        return Err(Error::Invalid("finite-difference stencil reaches the singular point".into()));
    }
    let mut residuals = Vec::with_capacity(steps.len());
    for &h in steps {
        let mut worst: f64 = 0.0;
        for r in points {
            let res = free_residual(|x| b_plus_unchecked(x, norm3(x), kin), r, kin.m, kin.lambda, h);
            worst = worst.max(res.norm_fro() / b_plus(r, kin)?.norm_fro());
        }
        residuals.push(ResidualRow { h, residual: worst });
    }
    let residual_order = residuals
        .windows(2)
        .map(|w| (w[0].residual / w[1].residual).ln() / (w[0].h / w[1].h).ln())
        .fold(f64::INFINITY, f64::min);
    let max_relative_difference = rows.iter().map(|r| r.relative_difference).fold(0.0, f64::max);
    Ok(KernelCheckReport { rows, max_relative_difference, residuals, residual_order })
}

fn fft3(data: &mut [Complex64], n: usize, fft: &dyn Fft<f64>) {
    // contiguous last axis
    for line in data.chunks_exact_mut(n) {
        fft.process(line);
    }
    let mut buf = vec![Complex64::from(0.0); n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                buf[j] = data[(i * n + j) * n + k];
            }
            fft.process(&mut buf);
            for j in 0..n {
                data[(i * n + j) * n + k] = buf[j];
            }
        }
    }
    for j in 0..n {
        for k in 0..n {
            for i in 0..n {
                buf[i] = data[(i * n + j) * n + k];
            }
            fft.process(&mut buf);
            for i in 0..n {
                data[(i * n + j) * n + k] = buf[i];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac_algebra::dirac_symbol;
    use proptest::prelude::*;

    fn kin(m: f64, lambda: f64) -> Kinematics {
        Kinematics::new(m, lambda).unwrap()
    }

    #[test]
    fn j_plus_examples() {
        // κ = π
        let k = kin(1.0, (PI * PI + 1.0).sqrt());
        let a = j_plus(&[1.0, 0.0, 0.0], &k).unwrap();
        assert!((a - SQRT_HALF_PI).norm() < 1e-14);
        let b = j_plus(&[0.0, 2.0, 0.0], &k).unwrap();
        assert!((b + SQRT_HALF_PI / 2.0).norm() < 1e-14);
        assert!(j_plus(&[0.0; 3], &k).is_err());
    }

    #[test]
    fn q_kernel_structure() {
        let (m, t) = (1.3, 0.7);
        let q = q_kernel(&[0.0, 0.0, t], m).unwrap();
        let e = SQRT_HALF_PI * (-m * t).exp() / t;
        let want = (beta().scale_re(m) + alpha_dot(&[0.0, 0.0, 1.0]).scale(Complex64::new(0.0, m + 1.0 / t))).scale_re(e);
        assert!(q.max_abs_diff(&want) < 1e-14);
        assert!(q.trace().norm() < 1e-14);
        let r5 = q_kernel(&[5.0, 0.0, 0.0], 1.0).unwrap().norm_fro();
        let r10 = q_kernel(&[10.0, 0.0, 0.0], 1.0).unwrap().norm_fro();
        let shape = |t: f64| (-t).exp() / t * (1.0 + (1.0 + 1.0 / t).powi(2)).sqrt();
        assert!((r5 / r10 - shape(5.0) / shape(10.0)).abs() < 1e-10 * r5 / r10);
        assert!(q_kernel(&[0.0; 3], 1.0).is_err());
    }

    #[test]
    fn b_plus_far_field_decay() {
        let k = kin(1.0, 1.5);
        let a = b_plus(&[0.0, 20.0, 0.0], &k).unwrap().norm_fro();
        let b = b_plus(&[0.0, 40.0, 0.0], &k).unwrap().norm_fro();
        assert!((a / b / 2.0 - 1.0).abs() < 0.05);
    }

    #[test]
    fn b_plus_solves_free_equation_away_from_origin() {
        let k = kin(1.0, 1.7);
        let r = [0.6, -0.5, 0.7];
        let f = |x: &Vec3| b_plus(x, &k).unwrap();
        let e1 = free_residual(f, &r, k.m, k.lambda, 1e-2).norm_fro();
        let e2 = free_residual(f, &r, k.m, k.lambda, 5e-3).norm_fro();
        let order = (e1 / e2).log2();
        assert!(order > 1.8, "order {order}");
    }

    #[test]
    fn b_plus_lower_branch_solves_free_equation() {
        let k = kin(1.0, -1.7);
        let r = [0.4, 0.3, -0.9];
        let f = |x: &Vec3| b_plus(x, &k).unwrap();
        let e1 = free_residual(f, &r, k.m, k.lambda, 1e-2).norm_fro();
        let e2 = free_residual(f, &r, k.m, k.lambda, 5e-3).norm_fro();
        assert!((e1 / e2).log2() > 1.8);
    }

    #[test]
    fn branches_are_conjugate() {
        let up = kin(1.0, 2.0);
        let down = kin(1.0, -2.0);
        let r = [0.3, 1.1, -0.2];
        assert!((j_plus(&r, &up).unwrap().conj() - j_plus(&r, &down).unwrap()).norm() < 1e-15);
    }

    #[test]
    fn ball_integral_matches_quadrature() {
        let s = Complex64::new(0.0, 1.3);
        let rho = 0.37;
        let (x, w) = crate::discretization::gauss_legendre(40);
        let num: Complex64 = x
            .iter()
            .zip(&w)
            .map(|(t, w)| {
                let r = 0.5 * (t + 1.0) * rho;
                (s * r).exp() * r * 4.0 * PI * w * 0.5 * rho
            })
            .sum();
        assert!((num - ball_integral_exp_over_r(s, rho)).norm() < 1e-13);
        let tiny = ball_integral_exp_over_r(s, 1e-6);
        assert!((tiny - 4.0 * PI * 0.5e-12).norm() < 1e-5 * 4.0 * PI * 0.5e-12);
    }

    #[test]
    fn plane_wave_examples() {
        let k = [0.3, -0.4, 1.0];
        for n in 1..=4 {
            let g = normalized_spinor(n, &k, 1.0).unwrap();
            assert_eq!(plane_wave(&[0.0; 3], &k, n, 1.0).unwrap(), g);
            assert!((plane_wave(&[1.0, 2.0, 3.0], &k, n, 1.0).unwrap().norm() - 1.0).abs() < 1e-14);
        }
        // (mβ - iα·∇) φ₀ = λ_n φ₀
        let m = 1.0;
        let h = 1e-3;
        let r = [0.2, 0.1, -0.3];
        let lam = crate::dirac_algebra::energy(3, &k, m).unwrap();
        let field = |x: &Vec3| {
            let p = plane_wave(x, &k, 3, m).unwrap();
            let mut out = Matrix4::zero();
            for i in 0..4 {
                out.0[i][0] = p.0[i];
            }
            out
        };
        let res = free_residual(field, &r, m, lam, h).norm_fro();
        let res2 = free_residual(field, &r, m, lam, h / 2.0).norm_fro();
        assert!(res < 1e-5 && (res / res2).log2() > 1.8);
        let _ = dirac_symbol(&k, m);
    }

    #[test]
    fn convolution_reference_term_identification() {
        let k = kin(1.0, 1.5);
        let reference = ConvolutionReference::new(k, 6.0, 32).unwrap();
        let ic = [16 + 3, 16 - 2, 16 + 1];
        let r = reference.node_position(ic);
        let conv = reference.conv_at_node(ic);
        let full = reference.evaluate(&r).unwrap();
        let lam = k.lambda;
        let rest = conv.scale_re(conv_coefficient() * lam * lam)
            + Matrix4::identity().scale(j_plus(&r, &k).unwrap() * (J_COEFFICIENT * lam));
        assert!((full - rest).max_abs_diff(&q_kernel(&r, k.m).unwrap()) < 1e-12);
        // interpolation is exact at nodes
        assert!(reference.conv_at(&r).unwrap().max_abs_diff(&conv) < 1e-12 * conv.norm_fro());
    }

    #[test]
    fn convolution_reference_agrees_with_closed_form() {
        let k = kin(1.0, 1.5);
        let reference = ConvolutionReference::new(k, 8.0, 64).unwrap();
        for r in [[0.9, 0.4, -0.3], [0.0, 1.7, 0.5], [-1.2, -1.1, 0.8]] {
            let a = reference.evaluate(&r).unwrap();
            let b = b_plus(&r, &k).unwrap();
            let rel = (a - b).norm_fro() / b.norm_fro();
            assert!(rel < 1e-2, "{r:?}: {rel}");
        }
        assert!(reference.conv_at(&[5.0, 0.0, 0.0]).is_err());
        assert!(ConvolutionReference::new(k, 8.0, 48).is_err());
    }

    #[test]
    fn two_route_check_reports_second_order_residual() {
        let k = kin(1.0, 1.5);
        let pts = [[0.9, 0.4, -0.3], [0.0, 1.7, 0.5], [-1.2, -1.1, 0.8], [2.0, -0.5, 1.0]];
        let rep = kernel_two_route_check(&k, 8.0, 64, &pts, &[0.04, 0.02, 0.01]).unwrap();
        assert!(rep.max_relative_difference < 1e-2, "{}", rep.max_relative_difference);
        assert!(rep.residual_order > 1.8 && rep.residual_order < 2.3, "{}", rep.residual_order);
        assert!(kernel_two_route_check(&k, 8.0, 64, &[[0.05, 0.0, 0.0]], &[0.04, 0.02]).is_err());
    }

    proptest! {
        #[test]
        fn b_plus_norm_depends_only_on_radius(th in 0.0f64..PI, ph in 0.0f64..(2.0 * PI), d in 0.2f64..5.0) {
            let k = kin(1.0, 1.8);
            let a = b_plus(&[0.0, 0.0, d], &k).unwrap().norm_fro();
            let r = [d * th.sin() * ph.cos(), d * th.sin() * ph.sin(), d * th.cos()];
            let b = b_plus(&r, &k).unwrap().norm_fro();
            prop_assert!((a - b).abs() < 1e-10 * a);
        }

        #[test]
        fn j_plus_branch_conjugation(x in -3.0f64..3.0, y in -3.0f64..3.0, z in 0.1f64..3.0, l in 1.01f64..4.0) {
            let r = [x, y, z];
            let a = j_plus(&r, &kin(1.0, l)).unwrap();
            let b = j_plus(&r, &kin(1.0, -l)).unwrap();
            prop_assert!((a.conj() - b).norm() < 1e-14 * a.norm().max(1.0));
        }
    }
}

//! Nyström discretization of the modified Lippmann–Schwinger equation
//! `(I + G₀B₊)ψ = e^{ik·r}V₁ĝ_n`, `G₀ = (2π)^{-3/2}`, with block
//! `(i, j) = w_j V₁(r_i) B₊(r_i - r_j) V₁(r_j) W₁(r_j)`.
//!
//! Self-cells are replaced by a ball of the same volume centred on the node, on
//! which `B₊` is integrated in closed form (the odd `α·r̂` part drops out).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::dirac_algebra::{energy, norm3, sub3, Kinematics, Matrix4, Spinor4, Vec3};
use crate::discretization::VolumeGrid;
use crate::error::{Error, Result};
use crate::kernels::{b_plus_ball_integral, b_plus_unchecked, green_prefactor, plane_wave};
use crate::linalg::{CMat, LuFactor};
use crate::potentials::{FactorizedPotential, PotentialSpec};

/// Condition estimate above which a solve is refused.
pub const NEAR_EXCEPTIONAL_CONDITION: f64 = 1e12;
/// Flag a scan minimum when `σ_min < EXCEPTIONAL_RATIO · median(σ_min)`.
pub const EXCEPTIONAL_RATIO: f64 = 1e-3;
/// Only local minima below this fraction of the median are refined.
pub const REFINE_RATIO: f64 = 0.25;

/// Radius of the ball with the volume of a quadrature cell of weight `w`.
pub fn cell_radius(w: f64) -> f64 {
    (3.0 * w / (4.0 * PI)).cbrt()
}

/// Left and right node factors of the discretized operator.
struct Factors {
    left: Vec<Matrix4>,
    right: Vec<Matrix4>,
    left_s: Vec<f64>,
    right_s: Vec<f64>,
    ball: Vec<Matrix4>,
    scalar: bool,
}

impl Factors {
    fn new(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Self> {
        if pot.v1.len() != grid.len() {
            return Err(Error::Invalid("potential was sampled on a different grid".into()));
        }
        let g0 = green_prefactor();
        let n = grid.len();
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        let mut left_s = Vec::with_capacity(n);
        let mut right_s = Vec::with_capacity(n);
        let mut ball = Vec::with_capacity(n);
        for i in 0..n {
            let w = grid.weights[i];
            let v1 = pot.v1[i];
            let vw = v1 * pot.w1[i];
            left.push(v1.scale_re(g0));
            right.push(vw.scale_re(w));
            left_s.push(g0 * v1.0[0][0].re);
            right_s.push(w * vw.0[0][0].re);
            let b = b_plus_ball_integral(cell_radius(w), kin);
            ball.push(left[i] * b * vw);
        }
        Ok(Factors { left, right, left_s, right_s, ball, scalar: pot.scalar })
    }

    /// `G₀ ×` block `(i, j)`.
    #[inline]
    fn block(&self, kin: &Kinematics, grid: &VolumeGrid, i: usize, j: usize) -> Matrix4 {
        if i == j {
            return self.ball[i];
        }
        if self.scalar {
            let c = self.left_s[i] * self.right_s[j];
            if c == 0.0 {
                return Matrix4::zero();
            }
            let d = sub3(&grid.nodes[i], &grid.nodes[j]);
            return b_plus_unchecked(&d, norm3(&d), kin).scale_re(c);
        }
        let d = sub3(&grid.nodes[i], &grid.nodes[j]);
        self.left[i] * b_plus_unchecked(&d, norm3(&d), kin) * self.right[j]
    }
}

fn guard(kin: &Kinematics, grid: &VolumeGrid) -> Result<()> {
    let kr = kin.kappa * grid.r_max;
    if kr > grid.n_r as f64 {
        return Err(Error::GridTooCoarse(format!(
            "kappa*r_max = {kr:.3} exceeds n_r = {}; refine the radial grid",
            grid.n_r
        )));
    }
    Ok(())
}

/// The system matrix `I + G₀B₊` (4N × 4N, node-major, spinor index fastest).
#[derive(Clone, Debug)]
pub struct DenseOperator {
    pub system: CMat,
    pub kin: Kinematics,
    pub fingerprint: String,
}

impl DenseOperator {
    pub fn nodes(&self) -> usize {
        self.system.nrows() / 4
    }

    /// Block `(i, j)` of `B₊` itself (without `G₀` and the identity).
    pub fn b_block(&self, i: usize, j: usize) -> Matrix4 {
        let mut out = Matrix4::zero();
        let g0 = green_prefactor();
        for a in 0..4 {
            for b in 0..4 {
                let id = if i == j && a == b { 1.0 } else { 0.0 };
                out.0[a][b] = (self.system[(4 * i + a, 4 * j + b)] - id) / g0;
            }
        }
        out
    }

    /// Frobenius (Hilbert–Schmidt) norm of the discretized `B₊`.
    pub fn b_hs_norm(&self) -> f64 {
        let n = self.system.nrows();
        let mut s = 0.0;
        for j in 0..n {
            for i in 0..n {
                let id = if i == j { 1.0 } else { 0.0 };
                s += (self.system[(i, j)] - id).norm_sqr();
            }
        }
        s.sqrt() / green_prefactor()
    }

    /// LU-factor the system in place; refuses near-exceptional energies.
    pub fn factor(self) -> Result<RlsSolver> {
        let kin = self.kin;
        let lu = LuFactor::new(self.system)?;
        let condition = lu.condition_estimate();
        if !(condition <= NEAR_EXCEPTIONAL_CONDITION) {
            return Err(Error::NearExceptional { lambda: kin.lambda, condition });
        }
        Ok(RlsSolver { lu, kin, condition, fingerprint: self.fingerprint })
    }
}

pub fn assemble(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<DenseOperator> {
    guard(kin, grid)?;
    let f = Factors::new(kin, pot, grid)?;
    let n = grid.len();
    let mut a = CMat::zeros(4 * n, 4 * n);
    for j in 0..n {
        for i in 0..n {
            let blk = f.block(kin, grid, i, j);
            for b in 0..4 {
                for r in 0..4 {
                    a[(4 * i + r, 4 * j + b)] = blk.0[r][b];
                }
            }
        }
    }
    for d in 0..4 * n {
        a[(d, d)] += Complex64::from(1.0);
    }
    Ok(DenseOperator { system: a, kin: *kin, fingerprint: grid.fingerprint() })
}

/// Matrix-free `G₀B₊x` with the same blocks as [`assemble`].
pub fn apply_operator(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid, x: &[Spinor4]) -> Result<Vec<Spinor4>> {
    guard(kin, grid)?;
    let f = Factors::new(kin, pot, grid)?;
    let n = grid.len();
    if x.len() != n {
        return Err(Error::Invalid("field length does not match the grid".into()));
    }
    let mut out = vec![Spinor4::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = Spinor4::zero();
        for (j, xj) in x.iter().enumerate() {
            acc = acc.add(&f.block(kin, grid, i, j).mul_vec(xj));
        }
        *o = acc;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldRole {
    Psi,
    Phi,
}

/// Four complex values per volume node.
#[derive(Clone, Debug)]
pub struct SpinorField {
    pub values: Vec<Spinor4>,
    pub role: FieldRole,
    pub n: usize,
    pub k: Vec3,
    pub kin: Kinematics,
}

impl SpinorField {
    pub fn norm(&self) -> f64 {
        self.values.iter().map(|s| s.norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &SpinorField) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.sub(b).norm())
            .fold(0.0, f64::max)
    }

    pub fn distance(&self, other: &SpinorField) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| a.sub(b).norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|s| s.0.iter().all(|c| c.is_finite()))
    }
}

/// `n` must belong to the energy block of `λ` and `k` must lie on the energy shell.
pub fn check_incidence(kin: &Kinematics, k: &Vec3, n: usize) -> Result<()> {
    let e = energy(n, k, kin.m)?;
    if (e - kin.lambda).abs() > 1e-9 * kin.lambda.abs() {
        return Err(Error::Invalid(format!(
            "channel {n} at |k| = {} has energy {e}, not lambda = {}",
            norm3(k),
            kin.lambda
        )));
    }
    Ok(())
}

/// `rhs_i = e^{ik·r_i} V₁(r_i) ĝ_n(k)`.
pub fn incident_rhs(kin: &Kinematics, k: &Vec3, n: usize, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Vec<Spinor4>> {
    check_incidence(kin, k, n)?;
    grid.nodes
        .iter()
        .zip(&pot.v1)
        .map(|(r, v1)| Ok(v1.mul_vec(&plane_wave(r, k, n, kin.m)?)))
        .collect()
}

/// A factored system, reusable across incident directions and channels.
pub struct RlsSolver {
    lu: LuFactor,
    pub kin: Kinematics,
    pub condition: f64,
    pub fingerprint: String,
}

impl RlsSolver {
    pub fn new(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Self> {
        assemble(kin, pot, grid)?.factor()
    }

    pub fn nodes(&self) -> usize {
        self.lu.dim() / 4
    }

    /// Overwrites the columns of `rhs` (4N × p) with solutions.
    pub fn solve_many(&self, rhs: &mut CMat) {
        self.lu.solve_in_place(rhs.as_mut());
    }

    pub fn solve_adjoint_many(&self, rhs: &mut CMat) {
        self.lu.solve_adjoint_in_place(rhs.as_mut());
    }

    pub fn sigma_min(&self) -> f64 {
        self.lu.sigma_min()
    }

    /// ψ for incidence `(k, n)`.
    pub fn solve(&self, k: &Vec3, n: usize, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<SpinorField> {
        let rhs = incident_rhs(&self.kin, k, n, pot, grid)?;
        let flat: Vec<Complex64> = rhs.iter().flat_map(|s| s.0).collect();
        let x = self.lu.solve_vec(&flat);
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Numerical("non-finite solution".into()));
        }
        Ok(SpinorField {
            values: x.chunks(4).map(|c| Spinor4([c[0], c[1], c[2], c[3]])).collect(),
            role: FieldRole::Psi,
            n,
            k: *k,
            kin: self.kin,
        })
    }
}

pub fn solve_modified_rls(
    kin: &Kinematics,
    k: &Vec3,
    n: usize,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
) -> Result<SpinorField> {
    check_incidence(kin, k, n)?;
    RlsSolver::new(kin, pot, grid)?.solve(k, n, pot, grid)
}

/// `‖(I + G₀B₊)ψ - rhs‖ / ‖rhs‖`, matrix-free.
pub fn relative_residual(psi: &SpinorField, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<f64> {
    let rhs = incident_rhs(&psi.kin, &psi.k, psi.n, pot, grid)?;
    let kx = apply_operator(&psi.kin, pot, grid, &psi.values)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..rhs.len() {
        num += psi.values[i].add(&kx[i]).sub(&rhs[i]).norm().powi(2);
        den += rhs[i].norm().powi(2);
    }
    Ok(if den == 0.0 { num.sqrt() } else { (num / den).sqrt() })
}

fn check_psi(psi: &SpinorField, grid: &VolumeGrid) -> Result<()> {
    if psi.role != FieldRole::Psi || psi.values.len() != grid.len() {
        return Err(Error::Invalid("expected a ψ-field on this grid".into()));
    }
    Ok(())
}

/// `φ(r) = e^{ik·r}ĝ_n - G₀ Σ_j w_j B₊(r - r_j) V₁W₁(r_j) ψ_j` at an arbitrary point.
///
/// Points closer to a node than its cell radius use that node's ball rule.
pub fn recover_phi_at(r: &Vec3, psi: &SpinorField, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Spinor4> {
    check_psi(psi, grid)?;
    let kin = &psi.kin;
    let g0 = green_prefactor();
    let mut acc = Spinor4::zero();
    for j in 0..grid.len() {
        let src = (pot.v1[j] * pot.w1[j]).mul_vec(&psi.values[j]);
        if src.norm() == 0.0 {
            continue;
        }
        let d = sub3(r, &grid.nodes[j]);
        let dist = norm3(&d);
        let rho = cell_radius(grid.weights[j]);
        let b = if dist < 1e-9 * rho.max(1e-300) {
            b_plus_ball_integral(rho, kin)
        } else {
            b_plus_unchecked(&d, dist, kin).scale_re(grid.weights[j])
        };
        acc = acc.add(&b.mul_vec(&src));
    }
    Ok(plane_wave(r, &psi.k, psi.n, kin.m)?.sub(&acc.scale(Complex64::from(g0))))
}

/// φ at every node (self-cells by the ball rule).
pub fn recover_phi(psi: &SpinorField, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<SpinorField> {
    check_psi(psi, grid)?;
    let values = grid.nodes.iter().map(|r| recover_phi_at(r, psi, pot, grid)).collect::<Result<Vec<_>>>()?;
    Ok(SpinorField { values, role: FieldRole::Phi, ..psi.clone() })
}

/// Spectral radius of `G₀B₊` by power iteration (norm growth over `iters` steps).
pub fn born_spectral_radius(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid, iters: usize) -> Result<f64> {
    let n = grid.len();
    let mut x: Vec<Spinor4> = (0..n)
        .map(|i| {
            let t = i as f64;
            Spinor4([
                Complex64::new(1.0 + (0.3 * t).sin(), 0.2),
                Complex64::new((0.7 * t).cos(), -0.1),
                Complex64::new(0.5, (1.1 * t).sin()),
                Complex64::new(-0.3, 0.4),
            ])
        })
        .collect();
    let norm = |v: &[Spinor4]| v.iter().map(|s| s.norm().powi(2)).sum::<f64>().sqrt();
    let mut log_growth = 0.0;
    let warm = iters / 2;
    for it in 0..iters {
        let nx = norm(&x);
        if nx == 0.0 {
            return Ok(0.0);
        }
        x.iter_mut().for_each(|s| *s = s.scale(Complex64::from(1.0 / nx)));
        x = apply_operator(kin, pot, grid, &x)?;
        if it >= warm {
            log_growth += norm(&x).max(f64::MIN_POSITIVE).ln();
        }
    }
    Ok((log_growth / (iters - warm) as f64).exp())
}

/// Truncated Neumann series for φ: order 0 is the plane wave, order `p` applies the
/// kernel `p` times. Fails when the terms grow.
pub fn born_series(
    kin: &Kinematics,
    k: &Vec3,
    n: usize,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
    order: usize,
) -> Result<SpinorField> {
    let rhs = incident_rhs(kin, k, n, pot, grid)?;
    let mut psi = rhs.clone();
    let mut term = rhs.clone();
    let mut prev_norm = f64::INFINITY;
    for p in 1..order {
        let next: Vec<Spinor4> = apply_operator(kin, pot, grid, &term)?.iter().map(|s| s.scale(-Complex64::from(1.0))).collect();
        let tn = next.iter().map(|s| s.norm().powi(2)).sum::<f64>().sqrt();
        if p > 1 && tn > prev_norm {
            return Err(Error::Numerical(format!("Born series diverges: term {p} grew from {prev_norm:e} to {tn:e}")));
        }
        prev_norm = tn;
        psi.iter_mut().zip(&next).for_each(|(a, b)| *a = a.add(b));
        term = next;
    }
    if order == 0 {
        let values = grid.nodes.iter().map(|r| plane_wave(r, k, n, kin.m)).collect::<Result<Vec<_>>>()?;
        return Ok(SpinorField { values, role: FieldRole::Phi, n, k: *k, kin: *kin });
    }
    let field = SpinorField { values: psi, role: FieldRole::Psi, n, k: *k, kin: *kin };
    recover_phi(&field, pot, grid)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanPoint {
    pub lambda: f64,
    pub sigma_min: f64,
    pub flagged: bool,
    /// Added by local refinement rather than taken from the requested list.
    pub refined: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalScanReport {
    pub points: Vec<ScanPoint>,
    pub median: f64,
    pub threshold: f64,
}

impl ExceptionalScanReport {
    pub fn flagged(&self) -> impl Iterator<Item = &ScanPoint> {
        self.points.iter().filter(|p| p.flagged)
    }

    pub fn min_point(&self) -> Option<&ScanPoint> {
        self.points.iter().min_by(|a, b| a.sigma_min.total_cmp(&b.sigma_min))
    }
}

/// Smallest singular value of `I + G₀B₊(λ)`.
pub fn sigma_min_at(m: f64, lambda: f64, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<f64> {
    let kin = Kinematics::new(m, lambda)?;
    if pot.is_zero() {
        return Ok(1.0);
    }
    let op = assemble(&kin, pot, grid)?;
    Ok(LuFactor::new(op.system)?.sigma_min())
}

fn median(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    match sorted.len() {
        0 => 0.0,
        n if n % 2 == 1 => sorted[n / 2],
        n => 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]),
    }
}

/// Median rule on a list of `(λ, σ_min)`; flags local minima below the threshold.
pub fn flag_minima(samples: &[(f64, f64)]) -> ExceptionalScanReport {
    let sigmas: Vec<f64> = samples.iter().map(|s| s.1).collect();
    flag_with_median(samples, &vec![false; samples.len()], median(&sigmas))
}

fn flag_with_median(samples: &[(f64, f64)], refined: &[bool], median: f64) -> ExceptionalScanReport {
    let threshold = EXCEPTIONAL_RATIO * median;
    let n = samples.len();
    let points = (0..n)
        .map(|i| {
            let s = samples[i].1;
            let left = i == 0 || samples[i - 1].1 >= s;
            let right = i + 1 == n || samples[i + 1].1 >= s;
            ScanPoint { lambda: samples[i].0, sigma_min: s, flagged: left && right && s < threshold, refined: refined[i] }
        })
        .collect();
    ExceptionalScanReport { points, median, threshold }
}

/// Minimizes `f` on the bracket `a < b < c` (`f(b)` below both ends) by successive
/// parabolic steps on `f²`, which is locally quadratic at a simple singular-value
/// dip, with golden-section fallback. Returns every evaluated `(x, f(x))`.
pub fn refine_minimum<F>(mut f: F, a: f64, b: f64, c: f64, fb: f64, iters: usize) -> Result<Vec<(f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    const GOLD: f64 = 0.381_966_011_250_105_1;
    let (mut a, mut b, mut c) = (a, b, c);
    let mut fb = fb;
    let mut fa = f(a)?;
    let mut fc = f(c)?;
    let mut out = Vec::new();
    for _ in 0..iters {
        let (qa, qb, qc) = (fa * fa, fb * fb, fc * fc);
        let num = (b - a).powi(2) * (qb - qc) - (b - c).powi(2) * (qb - qa);
        let den = (b - a) * (qb - qc) - (b - c) * (qb - qa);
        let mut x = if den != 0.0 { b - 0.5 * num / den } else { f64::NAN };
        let tiny = 1e-12 * b.abs();
        if !(x > a + tiny && x < c - tiny) || (x - b).abs() < tiny {
            x = if c - b > b - a { b + GOLD * (c - b) } else { b - GOLD * (b - a) };
        }
        let fx = f(x)?;
        out.push((x, fx));
        if fx < fb {
            if x > b {
                a = b;
                fa = fb;
            } else {
                c = b;
                fc = fb;
            }
            b = x;
            fb = fx;
        } else if x > b {
            c = x;
            fc = fx;
        } else {
            a = x;
            fa = fx;
        }
        if c - a < 1e-12 * b.abs() {
            break;
        }
    }
    Ok(out)
}

/// σ_min over `lambdas` (sorted ascending), with minima flagged by the median rule.
pub fn exceptional_scan(m: f64, lambdas: &[f64], spec: &PotentialSpec, grid: &VolumeGrid) -> Result<ExceptionalScanReport> {
    exceptional_scan_refined(m, lambdas, spec, grid, 0)
}

/// As [`exceptional_scan`], then refines every interior local minimum with
/// `refine` extra evaluations (only minima below `REFINE_RATIO · median`).
/// The median is taken over the requested points only.
pub fn exceptional_scan_refined(
    m: f64,
    lambdas: &[f64],
    spec: &PotentialSpec,
    grid: &VolumeGrid,
    refine: usize,
) -> Result<ExceptionalScanReport> {
    let pot = FactorizedPotential::new(spec, grid)?;
    let mut ls = lambdas.to_vec();
    ls.sort_by(f64::total_cmp);
    ls.dedup();
    let coarse = ls.iter().map(|&l| Ok((l, sigma_min_at(m, l, &pot, grid)?))).collect::<Result<Vec<_>>>()?;
    let med = median(&coarse.iter().map(|s| s.1).collect::<Vec<_>>());
    let mut samples: Vec<(f64, f64, bool)> = coarse.iter().map(|&(l, s)| (l, s, false)).collect();
    if refine > 0 {
        for i in 1..coarse.len().saturating_sub(1) {
            let (l, s) = coarse[i];
            if s <= coarse[i - 1].1 && s <= coarse[i + 1].1 && s < REFINE_RATIO * med {
                let extra = refine_minimum(|x| sigma_min_at(m, x, &pot, grid), coarse[i - 1].0, l, coarse[i + 1].0, s, refine)?;
                samples.extend(extra.into_iter().map(|(x, v)| (x, v, true)));
            }
        }
    }
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    samples.dedup_by(|a, b| a.0 == b.0);
    let pairs: Vec<(f64, f64)> = samples.iter().map(|s| (s.0, s.1)).collect();
    let refined: Vec<bool> = samples.iter().map(|s| s.2).collect();
    Ok(flag_with_median(&pairs, &refined, med))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac_algebra::normalized_spinor;
    use crate::discretization::{build_volume_grid, AngularRule};

    fn setup(g: f64, n_r: usize) -> (Kinematics, VolumeGrid, FactorizedPotential) {
        let kin = Kinematics::new(1.0, 1.5).unwrap();
        let grid = build_volume_grid(8.0, n_r, AngularRule::Lebedev(7)).unwrap();
        let spec = PotentialSpec::Yukawa { strength: g, range: 1.0, charge: 1.0 };
        let pot = FactorizedPotential::new(&spec, &grid).unwrap();
        (kin, grid, pot)
    }

    fn kz(kin: &Kinematics) -> Vec3 {
        kin.wavevector(&[0.0, 0.0, 1.0])
    }

    #[test]
    fn zero_potential_gives_identity_and_zero_psi() {
        let (kin, grid, _) = setup(0.0, 10);
        let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
        let op = assemble(&kin, &pot, &grid).unwrap();
        assert_eq!(op.b_hs_norm(), 0.0);
        let psi = solve_modified_rls(&kin, &kz(&kin), 3, &pot, &grid).unwrap();
        assert!(psi.values.iter().all(|s| *s == Spinor4::zero()));
        let phi = recover_phi(&psi, &pot, &grid).unwrap();
        for (r, v) in grid.nodes.iter().zip(&phi.values) {
            assert_eq!(*v, plane_wave(r, &kz(&kin), 3, 1.0).unwrap());
        }
        assert_eq!(sigma_min_at(1.0, 1.5, &pot, &grid).unwrap(), 1.0);
    }

    #[test]
    fn operator_scales_linearly_in_strength() {
        let (kin, grid, p1) = setup(0.2, 10);
        let (_, _, p2) = setup(0.4, 10);
        let a = assemble(&kin, &p1, &grid).unwrap();
        let b = assemble(&kin, &p2, &grid).unwrap();
        let mut err: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for i in [0, 7, 31, 100] {
            for j in [0, 5, 31, 99] {
                let d = b.b_block(i, j) - a.b_block(i, j).scale_re(2.0);
                err = err.max(d.norm_fro());
                scale = scale.max(b.b_block(i, j).norm_fro());
            }
        }
        assert!(err < 1e-10 * scale, "{err} {scale}");
    }

    #[test]
    fn residual_and_phi_consistency() {
        let (kin, grid, pot) = setup(0.5, 12);
        let psi = solve_modified_rls(&kin, &kz(&kin), 4, &pot, &grid).unwrap();
        assert!(psi.is_finite());
        assert!(relative_residual(&psi, &pot, &grid).unwrap() < 1e-10);
        let phi = recover_phi(&psi, &pot, &grid).unwrap();
        for i in (0..grid.len()).step_by(17) {
            let d = pot.v1[i].mul_vec(&phi.values[i]).sub(&psi.values[i]).norm();
            assert!(d < 1e-8, "node {i}: {d}");
        }
    }

    #[test]
    fn pivoting_order_does_not_change_solution() {
        let (kin, grid, pot) = setup(0.5, 10);
        let k = kz(&kin);
        let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        // reversed node order gives a different pivot sequence
        let n = grid.len();
        let op = assemble(&kin, &pot, &grid).unwrap();
        let perm = |x: usize| 4 * (n - 1 - x / 4) + x % 4;
        let rev = CMat::from_fn(4 * n, 4 * n, |i, j| op.system[(perm(i), perm(j))]);
        let rhs = incident_rhs(&kin, &k, 3, &pot, &grid).unwrap();
        let b: Vec<Complex64> = (0..4 * n).map(|i| rhs[perm(i) / 4].0[perm(i) % 4]).collect();
        let x = LuFactor::new(rev).unwrap().solve_vec(&b);
        let err = (0..4 * n).map(|i| (x[i] - psi.values[perm(i) / 4].0[perm(i) % 4]).norm()).fold(0.0, f64::max);
        assert!(err < 1e-9, "{err}");
    }

    #[test]
    fn weak_coupling_psi_tracks_rhs() {
        let mut rel = vec![];
        for g in [0.02, 0.01] {
            let (kin, grid, pot) = setup(g, 10);
            let k = kz(&kin);
            let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
            let rhs = incident_rhs(&kin, &k, 3, &pot, &grid).unwrap();
            let d: f64 = psi.values.iter().zip(&rhs).map(|(a, b)| a.sub(b).norm().powi(2)).sum::<f64>().sqrt();
            rel.push(d);
        }
        // ψ - rhs = O(g^{3/2})
        let ratio = rel[0] / rel[1];
        assert!((ratio - 2f64.powf(1.5)).abs() < 0.1, "{ratio}");
    }

    #[test]
    fn born_series_orders() {
        let (kin, grid, pot) = setup(0.1, 10);
        let k = kz(&kin);
        let b0 = born_series(&kin, &k, 3, &pot, &grid, 0).unwrap();
        let g = normalized_spinor(3, &k, 1.0).unwrap();
        assert!(b0.values[5].sub(&g.scale(Complex64::from_polar(1.0, grid.nodes[5][2] * kin.kappa))).norm() < 1e-14);
        let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        let phi = recover_phi(&psi, &pot, &grid).unwrap();
        let errs: Vec<f64> = (1..4).map(|p| born_series(&kin, &k, 3, &pot, &grid, p).unwrap().distance(&phi)).collect();
        assert!(errs[1] < errs[0] && errs[2] < errs[1], "{errs:?}");
        assert!(born_spectral_radius(&kin, &pot, &grid, 20).unwrap() < 1.0);
    }

    #[test]
    fn strong_well_born_series_diverges() {
        let (kin, grid, _) = setup(0.0, 10);
        let spec = PotentialSpec::Gaussian { strength: 6.0, range: 1.5, charge: 1.0 };
        let pot = FactorizedPotential::new(&spec, &grid).unwrap();
        let rho = born_spectral_radius(&kin, &pot, &grid, 20).unwrap();
        assert!(rho > 1.0, "{rho}");
        assert!(born_series(&kin, &kz(&kin), 3, &pot, &grid, 12).is_err());
    }

    #[test]
    fn solution_is_continuous_in_lambda() {
        let (_, grid, pot) = setup(0.4, 10);
        let dir = [0.0, 0.0, 1.0];
        let at = |l: f64| {
            let kin = Kinematics::new(1.0, l).unwrap();
            solve_modified_rls(&kin, &kin.wavevector(&dir), 3, &pot, &grid).unwrap()
        };
        let base = at(1.5);
        let d1 = at(1.5 + 1e-3).distance(&base);
        let d2 = at(1.5 + 1e-4).distance(&base);
        assert!(d2 < d1 && d2 < 1e-2 * base.norm());
    }

    #[test]
    fn channels_stay_orthogonal_at_zero_potential() {
        let (kin, grid, _) = setup(0.0, 10);
        let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
        let k = kz(&kin);
        let psi3 = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        let psi4 = solve_modified_rls(&kin, &k, 4, &pot, &grid).unwrap();
        let a = recover_phi(&psi3, &pot, &grid).unwrap();
        let b = recover_phi(&psi4, &pot, &grid).unwrap();
        for i in 0..grid.len() {
            assert!(a.values[i].inner(&b.values[i]).norm() < 1e-14);
        }
    }

    #[test]
    fn weak_potential_keeps_sigma_near_one() {
        let (kin, grid, pot) = setup(0.01, 10);
        let s = sigma_min_at(1.0, kin.lambda, &pot, &grid).unwrap();
        assert!(s < 1.0 + 1e-12 && s > 0.9, "{s}");
    }

    #[test]
    fn median_rule_flags_only_deep_local_minima() {
        let samples: Vec<(f64, f64)> =
            vec![(1.0, 0.5), (1.1, 0.4), (1.2, 1e-5), (1.3, 0.45), (1.4, 0.3), (1.5, 0.35), (1.6, 0.2)];
        let r = flag_minima(&samples);
        let flagged: Vec<f64> = r.flagged().map(|p| p.lambda).collect();
        assert_eq!(flagged, vec![1.2]);
        assert!((r.median - 0.35).abs() < 1e-15);
    }

    #[test]
    fn parabolic_refinement_finds_hyperbolic_dip() {
        let f = |x: f64| Ok(((x - 1.0123456).powi(2) * 0.36 + 1e-12).sqrt());
        let pts = refine_minimum(f, 1.0, 1.01, 1.02, f(1.01).unwrap(), 30).unwrap();
        let best = pts.iter().cloned().fold((0.0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
        assert!((best.0 - 1.0123456).abs() < 1e-8 && best.1 < 1e-5, "{best:?}");
    }

    #[test]
    fn coarse_grid_is_rejected() {
        let kin = Kinematics::new(1.0, 5.0).unwrap();
        let grid = build_volume_grid(20.0, 8, AngularRule::Lebedev(3)).unwrap();
        let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
        assert!(matches!(assemble(&kin, &pot, &grid), Err(Error::GridTooCoarse(_))));
    }
}

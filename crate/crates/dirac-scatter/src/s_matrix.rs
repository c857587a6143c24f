//! Energetic representation on the direction sphere.
//!
//! The on-shell T-kernel `T(q, k) = (2π)^{-3} Z*(q) Σ_j w_j e^{-iq·r_j} V₁W₁ψ_j(k)`
//! (2×2 in the channels of the energy block) becomes the operator
//! `(T h)(ω) = w ∫ T(κω, κω′) h(ω′) dΩ′` with shell weight `w = -2πκλ`, and
//! `S = I + iT` is unitary. Matrices act on `√v`-scaled samples, so the 𝓗 inner
//! product is the Euclidean one. Rows and columns are indexed `2a + s`.

use std::f64::consts::PI;

use faer::Mat;
use num_complex::Complex64;
use serde::Serialize;

use crate::amplitude::nu;
use crate::dirac_algebra::{dot3, frame, normalized_spinor, Frame, Kinematics, Matrix2, Spinor4, Vec3};
use crate::discretization::{SphereGrid, VolumeGrid};
use crate::error::{Error, Result};
use crate::linalg::{eigen, norm_fro, spectral_norm, unitarity_defect, CMat};
use crate::potentials::FactorizedPotential;
use crate::rls_solver::{RlsSolver, SpinorField};

/// Eigenvalues closer than this are orthonormalized together.
pub const CLUSTER_TOLERANCE: f64 = 1e-4;

/// `a(|k|) = π √(k² + m²) |k|`.
pub fn a_factor(kin: &Kinematics) -> f64 {
    PI * kin.lambda.abs() * kin.kappa
}

/// Weight of the on-shell integral in `T` and `S`: `-2πκλ`.
pub fn shell_weight(kin: &Kinematics) -> f64 {
    -2.0 * PI * kin.kappa * kin.lambda
}

/// `∫₀^∞ 2δ / (δ² + (√(q²+m²) - |λ|)²) dq` by composite Gauss–Legendre quadrature,
/// with the peak resolved through `λ(q) - |λ| = δ tan t`.
pub fn lorentzian_integral(kin: &Kinematics, delta: f64) -> f64 {
    let (m, e, kap) = (kin.m, kin.lambda.abs(), kin.kappa);
    let (x, w) = crate::discretization::gauss_legendre(24);
    let composite = |a: f64, b: f64, panels: usize, f: &dyn Fn(f64) -> f64| {
        let h = (b - a) / panels as f64;
        let mut s = 0.0;
        for p in 0..panels {
            let lo = a + p as f64 * h;
            for (t, wt) in x.iter().zip(&w) {
                s += wt * 0.5 * h * f(lo + 0.5 * h * (t + 1.0));
            }
        }
        s
    };
    let lor = |q: f64| {
        let d = (q * q + m * m).sqrt() - e;
        2.0 * delta / (delta * delta + d * d)
    };
    // q in [0, κ/2] directly; beyond, x = λ(q) - |λ| = δ tan t, dq = (|λ|+x)/q dx
    let q_split = 0.5 * kap;
    let near = composite(0.0, q_split, 64, &lor);
    let x0 = (q_split * q_split + m * m).sqrt() - e;
    let t0 = (x0 / delta).atan();
    let far = composite(t0, 0.5 * PI, 4000, &|t: f64| {
        let xx = delta * t.tan();
        let q = ((e + xx) * (e + xx) - m * m).sqrt();
        2.0 * (e + xx) / q
    });
    near + far
}

#[derive(Clone, Debug, Serialize)]
pub struct LorentzianRow {
    pub delta: f64,
    pub integral: f64,
    pub relative_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LorentzianReport {
    pub m: f64,
    pub k: f64,
    /// `π √(k²+m²) / |k|`.
    pub target: f64,
    pub rows: Vec<LorentzianRow>,
}

pub fn lorentzian_limit_check(kin: &Kinematics, deltas: &[f64]) -> LorentzianReport {
    let target = PI * kin.lambda.abs() / kin.kappa;
    let rows = deltas
        .iter()
        .map(|&d| {
            let integral = lorentzian_integral(kin, d);
            LorentzianRow { delta: d, integral, relative_error: (integral - target).abs() / target }
        })
        .collect();
    LorentzianReport { m: kin.m, k: kin.kappa, target, rows }
}

/// `(2M × 2M)` operator on `√v`-scaled two-component samples.
#[derive(Clone, Debug)]
pub struct SphereOperator {
    pub matrix: CMat,
    pub p: usize,
    pub kin: Kinematics,
    pub dirs: Vec<Vec3>,
    pub weights: Vec<f64>,
}

impl SphereOperator {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn identity_like(&self) -> SphereOperator {
        let n = self.dim();
        SphereOperator { matrix: CMat::identity(n, n), ..self.clone() }
    }

    /// Unweighted kernel entry `T_{s,n}(κω_a, κω_b)` (channel offsets `s, n ∈ {0, 1}`).
    pub fn kernel(&self, a: usize, s: usize, b: usize, n: usize) -> Complex64 {
        self.matrix[(2 * a + s, 2 * b + n)] / (shell_weight(&self.kin) * (self.weights[a] * self.weights[b]).sqrt())
    }

    /// `‖S*S - I‖₂`.
    pub fn unitarity_defect(&self) -> f64 {
        unitarity_defect(self.matrix.as_ref())
    }

    pub fn spectral_norm(&self) -> f64 {
        spectral_norm(self.matrix.as_ref())
    }
}

/// Channels of the block selected by the sign of λ.
pub fn block_channels(kin: &Kinematics) -> [usize; 2] {
    if kin.block() == 2 {
        [3, 4]
    } else {
        [1, 2]
    }
}

fn frames(kin: &Kinematics, sphere: &SphereGrid) -> Result<Vec<Frame>> {
    sphere.dirs.iter().map(|d| frame(kin.block(), &kin.wavevector(d), kin.m)).collect()
}

/// Columns `2b + n`: `e^{ik_b·r} V₁ ĝ_n(k_b)` stacked over nodes (4N × 2M).
fn incident_matrix(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid, frames: &[Frame], sphere: &SphereGrid) -> CMat {
    let nn = grid.len();
    let mut r = CMat::zeros(4 * nn, 2 * sphere.len());
    for (b, d) in sphere.dirs.iter().enumerate() {
        let k = kin.wavevector(d);
        for (c, g) in frames[b].cols.iter().enumerate() {
            for i in 0..nn {
                let v = pot.v1[i].mul_vec(g).scale(Complex64::from_polar(1.0, dot3(&k, &grid.nodes[i])));
                for s in 0..4 {
                    r[(4 * i + s, 2 * b + c)] = v.0[s];
                }
            }
        }
    }
    r
}

fn weighted(kin: &Kinematics, sphere: &SphereGrid, mut t: CMat) -> CMat {
    let w = shell_weight(kin);
    let sv: Vec<f64> = sphere.weights.iter().map(|v| v.sqrt()).collect();
    for j in 0..t.ncols() {
        for i in 0..t.nrows() {
            t[(i, j)] *= w * sv[i / 2] * sv[j / 2];
        }
    }
    t
}

fn check_sizes(solver: &RlsSolver, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<()> {
    if solver.nodes() != grid.len() || pot.v1.len() != grid.len() {
        return Err(Error::Invalid("solver, potential and grid sizes differ".into()));
    }
    Ok(())
}

/// `T_p` from per-direction solutions ψ(k_b, n) and the T-kernel quadrature.
pub fn assemble_t_operator_with(
    solver: &RlsSolver,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
    sphere: &SphereGrid,
) -> Result<SphereOperator> {
    check_sizes(solver, pot, grid)?;
    let kin = solver.kin;
    let fr = frames(&kin, sphere)?;
    let mut psi = incident_matrix(&kin, pot, grid, &fr, sphere);
    solver.solve_many(&mut psi);
    let (nn, mm) = (grid.len(), sphere.len());
    let cols = 2 * mm;
    // X'[i, c·2M + col] = w_i (V₁W₁ψ)_c at node i
    let mut x = CMat::zeros(nn, 4 * cols);
    for i in 0..nn {
        let vw = (pot.v1[i] * pot.w1[i]).scale_re(grid.weights[i]);
        for col in 0..cols {
            let s = Spinor4([psi[(4 * i, col)], psi[(4 * i + 1, col)], psi[(4 * i + 2, col)], psi[(4 * i + 3, col)]]);
            let v = vw.mul_vec(&s);
            for c in 0..4 {
                x[(i, c * cols + col)] = v.0[c];
            }
        }
    }
    drop(psi);
    let phases = Mat::from_fn(mm, nn, |a, i| Complex64::from_polar(1.0, -dot3(&kin.wavevector(&sphere.dirs[a]), &grid.nodes[i])));
    let y = &phases * &x;
    let pre = (2.0 * PI).powi(-3);
    let mut t = CMat::zeros(cols, cols);
    for a in 0..mm {
        for (s, g) in fr[a].cols.iter().enumerate() {
            for col in 0..cols {
                let mut acc = Complex64::from(0.0);
                for c in 0..4 {
                    acc += g.0[c].conj() * y[(a, c * cols + col)];
                }
                t[(2 * a + s, col)] = acc * pre;
            }
        }
    }
    Ok(SphereOperator { matrix: weighted(&kin, sphere, t), p: kin.block(), kin, dirs: sphere.dirs.clone(), weights: sphere.weights.clone() })
}

/// `T_p = 𝓕 W₁ (I + G₀B₊)^{-1} 𝓕*`, evaluated as `(A^{-*} W̃ R)* R` with one adjoint solve.
pub fn t_operator_factorized_with(
    solver: &RlsSolver,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
    sphere: &SphereGrid,
) -> Result<SphereOperator> {
    check_sizes(solver, pot, grid)?;
    let kin = solver.kin;
    let fr = frames(&kin, sphere)?;
    let r = incident_matrix(&kin, pot, grid, &fr, sphere);
    let mut y = CMat::zeros(r.nrows(), r.ncols());
    for i in 0..grid.len() {
        let wt = pot.w1[i].scale_re(grid.weights[i]);
        for col in 0..r.ncols() {
            for a in 0..4 {
                let mut acc = Complex64::from(0.0);
                for b in 0..4 {
                    acc += wt.0[a][b] * r[(4 * i + b, col)];
                }
                y[(4 * i + a, col)] = acc;
            }
        }
    }
    solver.solve_adjoint_many(&mut y);
    let t = faer::Scale(Complex64::from((2.0 * PI).powi(-3))) * (y.adjoint() * &r);
    Ok(SphereOperator { matrix: weighted(&kin, sphere, t), p: kin.block(), kin, dirs: sphere.dirs.clone(), weights: sphere.weights.clone() })
}

pub fn assemble_t_operator(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid, sphere: &SphereGrid) -> Result<SphereOperator> {
    let solver = RlsSolver::new(kin, pot, grid)?;
    assemble_t_operator_with(&solver, pot, grid, sphere)
}

pub fn t_operator_factorized(kin: &Kinematics, pot: &FactorizedPotential, grid: &VolumeGrid, sphere: &SphereGrid) -> Result<SphereOperator> {
    let solver = RlsSolver::new(kin, pot, grid)?;
    t_operator_factorized_with(&solver, pot, grid, sphere)
}

/// 2×2 on-shell kernel from the two solved ψ-fields of the block.
pub fn t_kernel(omega: &Vec3, psi: [&SpinorField; 2], pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Matrix2> {
    let kin = psi[0].kin;
    let ch = block_channels(&kin);
    if psi[0].n != ch[0] || psi[1].n != ch[1] || psi[0].k != psi[1].k {
        return Err(Error::Invalid(format!("t_kernel needs channels {ch:?} at one incident direction")));
    }
    let q = kin.wavevector(omega);
    let zq = frame(kin.block(), &q, kin.m)?;
    let pre = (2.0 * PI).powi(-3);
    let mut t = Matrix2::zero();
    for (n, field) in psi.iter().enumerate() {
        let mut acc = Spinor4::zero();
        for i in 0..grid.len() {
            let v = (pot.v1[i] * pot.w1[i]).mul_vec(&field.values[i]);
            acc = acc.add(&v.scale(Complex64::from_polar(grid.weights[i], -dot3(&q, &grid.nodes[i]))));
        }
        let c = zq.adjoint_apply(&acc);
        t.0[0][n] = c[0] * pre;
        t.0[1][n] = c[1] * pre;
    }
    Ok(t)
}

/// `S_p = I + iT_p`.
pub fn s_operator(t: &SphereOperator) -> SphereOperator {
    let n = t.dim();
    let m = CMat::identity(n, n) + faer::Scale(Complex64::i()) * &t.matrix;
    SphereOperator { matrix: m, ..t.clone() }
}

/// Frobenius norm in the `√v`-scaled representation.
pub fn hs_norm(t: &SphereOperator) -> f64 {
    norm_fro(t.matrix.as_ref())
}

#[derive(Clone, Debug)]
pub struct SpectralData {
    pub mu: Vec<Complex64>,
    /// Columns: orthonormalized eigenvectors in the `√v`-scaled representation.
    pub vectors: CMat,
    pub p: usize,
    pub kin: Kinematics,
    pub dirs: Vec<Vec3>,
    pub weights: Vec<f64>,
    /// `max |G*G - I|`.
    pub orthonormality_residual: f64,
    /// Per eigenpair `‖S G_j - μ_j G_j‖`.
    pub eigen_residuals: Vec<f64>,
}

impl SpectralData {
    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// `G_j^{(s)}(ω_a)`: unscaled sample of component `s ∈ {0, 1}`.
    pub fn sample(&self, j: usize, a: usize, s: usize) -> Complex64 {
        self.vectors[(2 * a + s, j)] / self.weights[a].sqrt()
    }
}

fn column_norm(m: &CMat, j: usize) -> f64 {
    (0..m.nrows()).map(|i| m[(i, j)].norm_sqr()).sum::<f64>().sqrt()
}

/// Eigen-decomposition of `S`, sorted by descending `|μ - 1|`, with clusters
/// orthonormalized and each vector's largest component made real positive.
pub fn spectrum(s: &SphereOperator) -> Result<SpectralData> {
    let n = s.dim();
    let (vals, vecs) = eigen(s.matrix.as_ref())?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| (vals[b] - 1.0).norm().total_cmp(&(vals[a] - 1.0).norm()).then(a.cmp(&b)));
    let mut mu: Vec<Complex64> = order.iter().map(|&j| vals[j]).collect();
    let mut g = CMat::from_fn(n, n, |i, j| vecs[(i, order[j])]);
    for j in 0..n {
        let nrm = column_norm(&g, j);
        for i in 0..n {
            g[(i, j)] /= nrm;
        }
    }
    // orthonormalize clusters and refresh their eigenvalues by Rayleigh quotients
    let mut done = vec![false; n];
    for j in 0..n {
        if done[j] {
            continue;
        }
        let members: Vec<usize> = (j..n).filter(|&i| !done[i] && (mu[i] - mu[j]).norm() < CLUSTER_TOLERANCE).collect();
        members.iter().for_each(|&i| done[i] = true);
        if members.len() < 2 {
            continue;
        }
        for (c, &a) in members.iter().enumerate() {
            for _ in 0..2 {
                for &b in &members[..c] {
                    let mut d = Complex64::from(0.0);
                    for i in 0..n {
                        d += g[(i, b)].conj() * g[(i, a)];
                    }
                    for i in 0..n {
                        let v = g[(i, b)];
                        g[(i, a)] -= d * v;
                    }
                }
                let nrm = column_norm(&g, a);
                for i in 0..n {
                    g[(i, a)] /= nrm;
                }
            }
        }
        for &a in &members {
            let col = g.col(a);
            let sg = &s.matrix * col;
            let mut rq = Complex64::from(0.0);
            for i in 0..n {
                rq += g[(i, a)].conj() * sg[i];
            }
            mu[a] = rq;
        }
    }
    for j in 0..n {
        let mut big = Complex64::from(0.0);
        for i in 0..n {
            if g[(i, j)].norm() > big.norm() * (1.0 + 1e-12) {
                big = g[(i, j)];
            }
        }
        if big.norm() > 0.0 {
            let ph = big.conj() / big.norm();
            for i in 0..n {
                g[(i, j)] *= ph;
            }
        }
    }
    let gram = g.adjoint() * &g;
    let mut orth: f64 = 0.0;
    for j in 0..n {
        for i in 0..n {
            let id = if i == j { 1.0 } else { 0.0 };
            orth = orth.max((gram[(i, j)] - id).norm());
        }
    }
    let sg = &s.matrix * &g;
    let eigen_residuals = (0..n)
        .map(|j| (0..n).map(|i| (sg[(i, j)] - mu[j] * g[(i, j)]).norm_sqr()).sum::<f64>().sqrt())
        .collect();
    Ok(SpectralData {
        mu,
        vectors: g,
        p: s.p,
        kin: s.kin,
        dirs: s.dirs.clone(),
        weights: s.weights.clone(),
        orthonormality_residual: orth,
        eigen_residuals,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ReconstructionResult {
    /// `f_{s,n}(ω_a, ω_b)` for the block channels `s, n ∈ {0, 1}`.
    pub values: [[Complex64; 2]; 2],
    pub rank: usize,
}

fn check_block(spectral: &SpectralData, kin: &Kinematics) -> Result<()> {
    if spectral.p != kin.block() || (spectral.kin.lambda - kin.lambda).abs() > 1e-12 * kin.lambda.abs() {
        return Err(Error::Invalid(format!(
            "spectral data of block {} at lambda {} cannot serve lambda {}",
            spectral.p, spectral.kin.lambda, kin.lambda
        )));
    }
    Ok(())
}

/// `f_{s,n}(ω_a, ω_b) = (ν / w) / i · Σ_{j<rank} (μ_j - 1) G_j^{(s)}(ω_a) conj(G_j^{(n)}(ω_b))`.
pub fn reconstruct(spectral: &SpectralData, kin: &Kinematics, a: usize, b: usize, rank: Option<usize>) -> Result<ReconstructionResult> {
    check_block(spectral, kin)?;
    let rank = rank.unwrap_or(spectral.len()).min(spectral.len());
    let c = nu(kin) / shell_weight(kin) * -Complex64::i();
    let mut values = [[Complex64::from(0.0); 2]; 2];
    for (s, row) in values.iter_mut().enumerate() {
        for (n, v) in row.iter_mut().enumerate() {
            let mut acc = Complex64::from(0.0);
            for j in 0..rank {
                acc += (spectral.mu[j] - 1.0) * spectral.sample(j, a, s) * spectral.sample(j, b, n).conj();
            }
            *v = c * acc;
        }
    }
    Ok(ReconstructionResult { values, rank })
}

/// Full on-block amplitude `Σ_s ĝ_s(κω_a) f_{s,n}` for incident channel offset `n`.
pub fn reconstruct_full(spectral: &SpectralData, kin: &Kinematics, a: usize, b: usize, n: usize, rank: Option<usize>) -> Result<Spinor4> {
    let rec = reconstruct(spectral, kin, a, b, rank)?;
    let q = kin.wavevector(&spectral.dirs[a]);
    let ch = block_channels(kin);
    let mut f = Spinor4::zero();
    for (s, &chan) in ch.iter().enumerate() {
        f = f.add(&normalized_spinor(chan, &q, kin.m)?.scale(rec.values[s][n]));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::{amplitude_components, scattering_amplitude_from_psi};
    use crate::discretization::{build_sphere_grid, build_volume_grid, AngularRule};
    use crate::potentials::PotentialSpec;

    fn setup(g: f64, order: usize) -> (Kinematics, VolumeGrid, FactorizedPotential, SphereGrid) {
        let kin = Kinematics::new(1.0, 1.5).unwrap();
        let grid = build_volume_grid(8.0, 12, AngularRule::Lebedev(11)).unwrap();
        let spec = PotentialSpec::Yukawa { strength: g, range: 1.0, charge: 1.0 };
        let pot = FactorizedPotential::new(&spec, &grid).unwrap();
        (kin, grid, pot, build_sphere_grid(order).unwrap())
    }

    #[test]
    fn a_factor_examples() {
        let kin = Kinematics::new(1.0, 2f64.sqrt()).unwrap();
        assert!((kin.kappa - 1.0).abs() < 1e-15);
        assert!((a_factor(&kin) - PI * 2f64.sqrt()).abs() < 1e-14);
        let rep = lorentzian_limit_check(&kin, &[1e-3]);
        assert!((rep.target - PI * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn lorentzian_quadrature_converges_to_its_limit() {
        // the integral tends to 2π|λ|/κ; check convergence and the quadrature itself
        for (m, k) in [(1.0, 1.0), (1.0, 2.0), (2.0, 1.0)] {
            let kin = Kinematics::new(m, (k * k + m * m as f64).sqrt()).unwrap();
            let lim = 2.0 * PI * kin.lambda / kin.kappa;
            let a = lorentzian_integral(&kin, 1e-3);
            let b = lorentzian_integral(&kin, 1e-4);
            assert!((b - lim).abs() < (a - lim).abs() && (b - lim).abs() < 1e-3 * lim, "{a} {b} {lim}");
        }
        // against a brute-force midpoint sum for a wide Lorentzian
        let kin = Kinematics::new(1.0, 2.0).unwrap();
        let d = 0.3;
        let h = 1e-4;
        let brute: f64 = (0..2_000_000)
            .map(|i| {
                let q = (i as f64 + 0.5) * h;
                let x = (q * q + 1.0).sqrt() - 2.0;
                2.0 * d / (d * d + x * x) * h
            })
            .sum();
        let tail = 2.0 * d; // ∫_{200}^{∞} 2δ/q² dq ≈ 2δ/200 · 200
        assert!((lorentzian_integral(&kin, d) - brute).abs() < 1e-4 * brute + tail / 200.0);
    }

    #[test]
    fn zero_potential_gives_identity() {
        let (kin, grid, _, sphere) = setup(0.0, 6);
        let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
        let t = assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap();
        assert_eq!(hs_norm(&t), 0.0);
        let s = s_operator(&t);
        assert_eq!(s.unitarity_defect(), 0.0);
        let sp = spectrum(&s).unwrap();
        assert!(sp.mu.iter().all(|m| (*m - 1.0).norm() < 1e-14));
        let r = reconstruct(&sp, &kin, 0, 3, None).unwrap();
        assert!(r.values.iter().flatten().all(|v| v.norm() < 1e-13));
        assert_eq!(hs_norm(&t_operator_factorized(&kin, &pot, &grid, &sphere).unwrap()), 0.0);
    }

    #[test]
    fn direct_and_factorized_routes_agree() {
        let (kin, grid, pot, sphere) = setup(0.25, 8);
        let solver = RlsSolver::new(&kin, &pot, &grid).unwrap();
        let a = assemble_t_operator_with(&solver, &pot, &grid, &sphere).unwrap();
        let b = t_operator_factorized_with(&solver, &pot, &grid, &sphere).unwrap();
        let d = norm_fro((&a.matrix - &b.matrix).as_ref());
        assert!(d < 1e-10 * hs_norm(&a), "{d}");
    }

    #[test]
    fn kernel_matches_amplitude_components() {
        let (kin, grid, pot, sphere) = setup(0.25, 8);
        let solver = RlsSolver::new(&kin, &pot, &grid).unwrap();
        let t = assemble_t_operator_with(&solver, &pot, &grid, &sphere).unwrap();
        let b = 5;
        let k = kin.wavevector(&sphere.dirs[b]);
        let psi3 = solver.solve(&k, 3, &pot, &grid).unwrap();
        let psi4 = solver.solve(&k, 4, &pot, &grid).unwrap();
        let mut ratios = vec![];
        for a in [0, 7, 20, 33] {
            let tk = t_kernel(&sphere.dirs[a], [&psi3, &psi4], &pot, &grid).unwrap();
            for n in 0..2 {
                let psi = if n == 0 { &psi3 } else { &psi4 };
                let amp = scattering_amplitude_from_psi(&sphere.dirs[a], psi, &pot, &grid).unwrap();
                let comps = amplitude_components(&amp, &kin).unwrap();
                for s in 0..2 {
                    assert!((tk.0[s][n] - t.kernel(a, s, b, n)).norm() < 1e-10 * tk.0[s][n].norm().max(1e-12));
                    ratios.push(comps[2 + s].value / tk.0[s][n]);
                }
            }
        }
        for r in &ratios {
            assert!((r - nu(&kin)).norm() < 1e-6 * nu(&kin), "{r}");
        }
    }

    #[test]
    fn s_is_nearly_unitary_and_spectrum_is_consistent() {
        let (kin, grid, pot, sphere) = setup(0.25, 10);
        let t = assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap();
        let s = s_operator(&t);
        let defect = s.unitarity_defect();
        assert!(defect < 5e-2, "{defect}");
        let sp = spectrum(&s).unwrap();
        assert!(sp.mu.iter().all(|m| (m.norm() - 1.0).abs() < 2.0 * defect + 1e-10));
        let hs2: f64 = sp.mu.iter().map(|m| (m - 1.0).norm_sqr()).sum();
        assert!((hs2.sqrt() - hs_norm(&t)).abs() < 10.0 * defect * hs_norm(&t).max(1.0), "{} {}", hs2.sqrt(), hs_norm(&t));
        let det: f64 = sp.mu.iter().map(|m| m.norm().ln()).sum();
        assert!(det.abs() < sp.len() as f64 * defect);
        for w in sp.mu.windows(2) {
            assert!((w[0] - 1.0).norm() >= (w[1] - 1.0).norm() - CLUSTER_TOLERANCE);
        }
    }

    #[test]
    fn weak_coupling_scaling() {
        let (kin, grid, p1, sphere) = setup(0.02, 6);
        let (_, _, p2, _) = setup(0.01, 6);
        let a = hs_norm(&assemble_t_operator(&kin, &p1, &grid, &sphere).unwrap());
        let b = hs_norm(&assemble_t_operator(&kin, &p2, &grid, &sphere).unwrap());
        assert!((a / b - 2.0).abs() < 0.05, "{}", a / b);
    }

    #[test]
    fn coincident_kernel_imaginary_part_is_second_order() {
        let mut re = vec![];
        let mut im = vec![];
        for g in [0.04, 0.02] {
            let (kin, grid, pot, sphere) = setup(g, 6);
            let t = assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap();
            let v = t.kernel(3, 0, 3, 0);
            re.push(v.re.abs());
            im.push(v.im.abs());
        }
        assert!((re[0] / re[1] - 2.0).abs() < 0.1, "{re:?}");
        assert!((im[0] / im[1] - 4.0).abs() < 0.4, "{im:?}");
    }

    #[test]
    fn reconstruction_matches_kernel() {
        let (kin, grid, pot, sphere) = setup(0.25, 10);
        let t = assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap();
        let sp = spectrum(&s_operator(&t)).unwrap();
        let mut err: f64 = 0.0;
        let mut scale: f64 = 0.0;
        for (a, b) in [(0, 0), (3, 17), (20, 5), (40, 41)] {
            let r = reconstruct(&sp, &kin, a, b, None).unwrap();
            for s in 0..2 {
                for n in 0..2 {
                    let direct = t.kernel(a, s, b, n) * nu(&kin);
                    err = err.max((r.values[s][n] - direct).norm());
                    scale = scale.max(direct.norm());
                }
            }
        }
        assert!(err < 0.05 * scale, "{err} {scale}");
        let other = Kinematics::new(1.0, -1.5).unwrap();
        assert!(reconstruct(&sp, &other, 0, 0, None).is_err());
    }

    #[test]
    fn sphere_projector_has_bessel_kernel() {
        // Σ_b v_b e^{ik_b·x} Z Z*(k_b) = 2π[j₀ + (m j₀ β + iκ j₁ α·x̂)/λ]
        let kin = Kinematics::new(1.0, 1.5).unwrap();
        let sphere = build_sphere_grid(26).unwrap();
        let fr = frames(&kin, &sphere).unwrap();
        let x = [0.4, -1.1, 0.7];
        let d = crate::dirac_algebra::norm3(&x);
        let kd = kin.kappa * d;
        let j0 = kd.sin() / kd;
        let j1 = kd.sin() / (kd * kd) - kd.cos() / kd;
        let xh = crate::dirac_algebra::scale3(&x, 1.0 / d);
        let want = (crate::dirac_algebra::Matrix4::identity().scale_re(j0)
            + crate::dirac_algebra::beta().scale_re(kin.m * j0 / kin.lambda)
            + crate::dirac_algebra::alpha_dot(&xh).scale(Complex64::new(0.0, kin.kappa * j1 / kin.lambda)))
        .scale_re(2.0 * PI);
        let mut got = crate::dirac_algebra::Matrix4::zero();
        for (b, dir) in sphere.dirs.iter().enumerate() {
            let k = kin.wavevector(dir);
            got = got + fr[b].projector().scale(Complex64::from_polar(sphere.weights[b], dot3(&k, &x)));
        }
        assert!(got.max_abs_diff(&want) < 1e-6, "{}", got.max_abs_diff(&want));
    }
}

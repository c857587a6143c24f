//! Radial potentials: Dirac phase shifts, Legendre-basis sphere eigenfunctions,
//! partial-wave amplitude series, and the comparison with the eigenvalues of `S₂`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::dirac_algebra::{spinor, Kinematics};
use crate::error::{Error, Result};
use crate::potentials::PotentialSpec;
use crate::s_matrix::SpectralData;

/// `P_ℓ(x)` by the three-term recurrence.
pub fn legendre(l: usize, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, x);
    if l == 0 {
        return p0;
    }
    for n in 2..=l {
        let p2 = ((2 * n - 1) as f64 * x * p1 - (n - 1) as f64 * p0) / n as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// `P_ℓ¹(x) = √(1-x²) P_ℓ'(x)`, without the Condon–Shortley phase. `P₀¹ = 0`.
pub fn legendre_assoc1(l: usize, x: f64) -> f64 {
    if l == 0 {
        return 0.0;
    }
    let s = (1.0 - x * x).max(0.0).sqrt();
    let (mut p0, mut p1) = (0.0, s);
    for n in 2..=l {
        let p2 = ((2 * n - 1) as f64 * x * p1 - n as f64 * p0) / (n - 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Spherical Bessel functions `(j_ℓ(x), y_ℓ(x))` for `x > 0`.
pub fn spherical_bessel(l: usize, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    let mut y0 = -c / x;
    let mut y1 = -c / (x * x) - s / x;
    let j0 = s / x;
    let y = if l == 0 {
        y0
    } else {
        for n in 1..l {
            let y2 = (2 * n + 1) as f64 / x * y1 - y0;
            y0 = y1;
            y1 = y2;
        }
        y1
    };
    let j = if l == 0 {
        j0
    } else if x > l as f64 {
        let (mut a, mut b) = (j0, s / (x * x) - c / x);
        for n in 1..l {
            let nb = (2 * n + 1) as f64 / x * b - a;
            a = b;
            b = nb;
        }
        b
    } else {
        // Miller's downward recurrence, normalized by j₀
        let start = l + 20 + x as usize + (10.0 * (l as f64).sqrt()) as usize;
        let (mut up, mut cur) = (0.0, 1e-300);
        let mut at_l = 0.0;
        for n in (1..=start).rev() {
            let down = (2 * n + 1) as f64 / x * cur - up;
            up = cur;
            cur = down;
            if n - 1 == l {
                at_l = cur;
            }
            if cur.abs() > 1e250 {
                up *= 1e-250;
                cur *= 1e-250;
                at_l *= 1e-250;
            }
        }
        at_l * j0 / cur
    };
    (j, y)
}

/// Half-integer channel index `ν = ℓ ± 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Nu {
    pub l: usize,
    pub plus: bool,
}

impl Nu {
    pub fn new(l: usize, plus: bool) -> Result<Nu> {
        if l == 0 && !plus {
            return Err(Error::Invalid("nu = l - 1/2 needs l >= 1".into()));
        }
        Ok(Nu { l, plus })
    }

    pub fn value(&self) -> f64 {
        self.l as f64 + if self.plus { 0.5 } else { -0.5 }
    }

    /// Relativistic quantum number of the radial channel whose phase factor is the
    /// `S₂` eigenvalue on the span of `G_ν`.
    pub fn kappa_d(&self) -> i32 {
        if self.plus {
            self.l as i32 + 1
        } else {
            -(self.l as i32)
        }
    }

    /// Channels `ν ≤ ℓ_max + 1/2`, ordered by ν then by ℓ.
    pub fn up_to(l_max: usize) -> Vec<Nu> {
        let mut v: Vec<Nu> = (0..=l_max).map(|l| Nu { l, plus: true }).chain((1..=l_max).map(|l| Nu { l, plus: false })).collect();
        v.sort_by(|a, b| a.value().total_cmp(&b.value()).then(a.l.cmp(&b.l)));
        v
    }
}

impl fmt::Display for Nu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", 2 * self.l + 1 - if self.plus { 0 } else { 2 })
    }
}

/// `G_ν(θ, φ)` as coefficients of `(α̂, β̂)`:
/// `G_{ℓ+1/2} = (4π)^{-1/2}[(ℓ+1)^{1/2} P_ℓ α̂ - (ℓ+1)^{-1/2} P_ℓ¹ e^{iφ} β̂]`,
/// `G_{ℓ-1/2} = -(4π)^{-1/2}[ℓ^{1/2} P_ℓ α̂ + ℓ^{-1/2} P_ℓ¹ e^{iφ} β̂]`.
pub fn spherical_eigenfunction(nu: Nu, theta: f64, phi: f64) -> [Complex64; 2] {
    let x = theta.cos();
    let c = (4.0 * PI).powf(-0.5);
    let (p, p1) = (legendre(nu.l, x), legendre_assoc1(nu.l, x));
    let e = Complex64::from_polar(1.0, phi);
    if nu.plus {
        let l1 = (nu.l + 1) as f64;
        [Complex64::from(c * l1.sqrt() * p), -e * (c * p1 / l1.sqrt())]
    } else {
        let l = nu.l as f64;
        [Complex64::from(-c * l.sqrt() * p), -e * (c * p1 / l.sqrt())]
    }
}

/// `G_ν` in the `(ĝ₃, ĝ₄)` channel order of the λ > m block: `β̂` pairs with
/// `ĝ₃` and `α̂` with `ĝ₄`.
pub fn eigenfunction_block(nu: Nu, theta: f64, phi: f64) -> [Complex64; 2] {
    let [a, b] = spherical_eigenfunction(nu, theta, phi);
    [b, a]
}

#[derive(Clone, Debug, Serialize)]
pub struct RadialChannel {
    pub nu: Nu,
    pub l: usize,
    pub kappa_d: i32,
    pub delta: f64,
    pub s_factor: Complex64,
    pub matching_radius: f64,
    /// Phase-shift change when matching a quarter wavelength further out.
    pub matching_drift: f64,
}

struct RadialProblem<'a> {
    spec: &'a PotentialSpec,
    e: f64,
    m: f64,
    k: f64,
}

impl RadialProblem<'_> {
    fn v(&self, r: f64) -> f64 {
        self.spec.radial_value(r).unwrap_or(0.0)
    }

    fn rhs(&self, kd: f64, r: f64, y: [f64; 2]) -> [f64; 2] {
        let v = self.v(r);
        [-kd / r * y[0] + (self.e - v + self.m) * y[1], kd / r * y[1] - (self.e - v - self.m) * y[0]]
    }

    fn rk4(&self, kd: f64, r: f64, h: f64, y: [f64; 2]) -> [f64; 2] {
        let ax = |y: [f64; 2], s: f64, d: [f64; 2]| [y[0] + s * d[0], y[1] + s * d[1]];
        let k1 = self.rhs(kd, r, y);
        let k2 = self.rhs(kd, r + 0.5 * h, ax(y, 0.5 * h, k1));
        let k3 = self.rhs(kd, r + 0.5 * h, ax(y, 0.5 * h, k2));
        let k4 = self.rhs(kd, r + h, ax(y, h, k3));
        [y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]), y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])]
    }

    /// Regular solution at small `r0`.
    fn origin(&self, kd: f64, r0: f64) -> Result<[f64; 2]> {
        let g = self.spec.origin_coulomb_strength();
        if g != 0.0 {
            let gam2 = kd * kd - g * g;
            if gam2 <= 0.0 {
                return Err(Error::Invalid(format!("Coulomb strength {g} too large for kappa_D = {kd}")));
            }
            let gam = gam2.sqrt();
            return Ok([r0.powf(gam), -g / (gam - kd) * r0.powf(gam)]);
        }
        let v0 = self.v(r0);
        let gam = kd.abs();
        Ok(if kd < 0.0 {
            [r0.powf(gam), -(self.e - v0 - self.m) * r0.powf(gam + 1.0) / (2.0 * gam + 1.0)]
        } else {
            [(self.e - v0 + self.m) * r0.powf(gam + 1.0) / (2.0 * kd + 1.0), r0.powf(gam)]
        })
    }

    fn integrate(&self, kd: f64, r_end: f64, h_max: f64) -> Result<[f64; 2]> {
        let r0 = 1e-6;
        let eta = 0.05 / (kd.abs() + 1.0 + self.spec.origin_coulomb_strength().abs());
        let mut y = self.origin(kd, r0)?;
        let mut r = r0;
        while r < r_end {
            let h = (eta * r).min(h_max).min(r_end - r);
            y = self.rk4(kd, r, h, y);
            r += h;
            let s = y[0].abs().max(y[1].abs());
            if s > 1e100 || (s < 1e-100 && s > 0.0) {
                y = [y[0] / s, y[1] / s];
            }
        }
        if !(y[0].is_finite() && y[1].is_finite()) {
            return Err(Error::Numerical(format!("radial integration diverged for kappa_D = {kd}")));
        }
        Ok(y)
    }

    fn delta_at(&self, kd: i32, r: f64, h_max: f64) -> Result<f64> {
        let y = self.integrate(kd as f64, r, h_max)?;
        let (l, lb) = if kd > 0 { (kd as usize, kd as usize - 1) } else { ((-kd - 1) as usize, (-kd) as usize) };
        let kr = self.k * r;
        let (jl, yl) = spherical_bessel(l, kr);
        let (jb, yb) = spherical_bessel(lb, kr);
        let rho = y[1] / y[0] * (self.e + self.m) / (self.k * kd.signum() as f64);
        Ok(((rho * jl - jb) / (rho * yl - yb)).atan())
    }
}

/// Smallest radius (in quarter-range steps) beyond which `|V| < 1e-10`.
pub fn matching_radius(spec: &PotentialSpec) -> Result<f64> {
    let step = 0.25 * spec.range();
    for i in 1..=800 {
        let r = i as f64 * step;
        if [1.0, 1.5, 2.0, 4.0].iter().all(|f| spec.radial_value(f * r).is_some_and(|v| v.abs() < 1e-10)) {
            return Ok(r);
        }
    }
    Err(Error::Invalid(format!("no matching radius with |V| < 1e-10 within {} for {}", 800.0 * step, spec.family())))
}

/// Phase shifts of all channels with `ν ≤ ℓ_max + 1/2` for λ > m.
pub fn radial_phase_shifts(spec: &PotentialSpec, kin: &Kinematics, l_max: usize) -> Result<Vec<RadialChannel>> {
    spec.validate()?;
    if !spec.is_radial() {
        return Err(Error::Invalid(format!("{} is not a radial scalar potential", spec.family())));
    }
    if matches!(spec, PotentialSpec::Coulomb { .. }) {
        return Err(Error::Invalid("long-range Coulomb tails have no short-range phase shifts".into()));
    }
    if kin.lambda <= kin.m {
        return Err(Error::Invalid(format!("radial phase shifts need lambda > m, got lambda = {}", kin.lambda)));
    }
    let r_match = if matches!(spec, PotentialSpec::Zero) { 10.0 / kin.kappa } else { matching_radius(spec)? };
    let prob = RadialProblem { spec, e: kin.lambda, m: kin.m, k: kin.kappa };
    let h_max = (0.02 / (kin.lambda + kin.m + kin.kappa)).min(0.01 * spec.range().max(1e-3));
    let shift = 0.5 * PI / kin.kappa;
    Nu::up_to(l_max)
        .into_par_iter()
        .map(|nu| {
            let kd = nu.kappa_d();
            let delta = prob.delta_at(kd, r_match, h_max)?;
            let further = prob.delta_at(kd, r_match + shift, h_max)?;
            let mut drift = (further - delta).abs();
            drift = drift.min((drift - PI).abs());
            Ok(RadialChannel {
                nu,
                l: nu.l,
                kappa_d: kd,
                delta,
                s_factor: Complex64::from_polar(1.0, 2.0 * delta),
                matching_radius: r_match,
                matching_drift: drift,
            })
        })
        .collect()
}

/// Incident normalization `N = ‖g₄‖` of the unnormalized spinor along `+z`.
pub fn flux_normalization(kin: &Kinematics) -> Result<f64> {
    Ok(spinor(4, &[0.0, 0.0, kin.kappa], kin.m)?.norm())
}

#[derive(Clone, Debug, Serialize)]
pub struct AngularAmplitudes {
    pub theta: f64,
    pub phi: f64,
    pub f: Complex64,
    pub g: Complex64,
    pub normalization: f64,
    /// Magnitude of the last series term relative to the partial sum.
    pub tail: f64,
    pub converged: bool,
}

/// `f = (1/2iκ) Σ_ℓ [(ℓ+1)(𝒮_{ℓ+1/2} - 1) + ℓ(𝒮_{ℓ-1/2} - 1)] P_ℓ(cos θ)`,
/// `g = (1/2iκ) Σ_{ℓ≥1} (𝒮_{ℓ-1/2} - 𝒮_{ℓ+1/2}) P_ℓ¹(cos θ) e^{iφ}`.
/// Channels absent from the list count as `𝒮 = 1`.
pub fn partial_wave_amplitudes(channels: &[(Nu, Complex64)], kin: &Kinematics, theta: f64, phi: f64) -> Result<AngularAmplitudes> {
    let s = |l: usize, plus: bool| channels.iter().find(|(n, _)| n.l == l && n.plus == plus).map_or(Complex64::from(1.0), |c| c.1);
    let l_max = channels.iter().map(|(n, _)| n.l).max().unwrap_or(0);
    let x = theta.cos();
    let pre = Complex64::new(0.0, 2.0 * kin.kappa).inv();
    let (mut f, mut g) = (Complex64::from(0.0), Complex64::from(0.0));
    let mut last = 0.0;
    for l in 0..=l_max {
        let lf = l as f64;
        let tf = ((s(l, true) - 1.0) * (lf + 1.0) + if l > 0 { (s(l, false) - 1.0) * lf } else { Complex64::from(0.0) }) * legendre(l, x) * pre;
        let tg = if l > 0 {
            (s(l, false) - s(l, true)) * legendre_assoc1(l, x) * Complex64::from_polar(1.0, phi) * pre
        } else {
            Complex64::from(0.0)
        };
        f += tf;
        g += tg;
        last = tf.norm() + tg.norm();
    }
    let total = f.norm() + g.norm();
    let tail = if total > 0.0 { last / total } else { 0.0 };
    Ok(AngularAmplitudes { theta, phi, f, g, normalization: flux_normalization(kin)?, tail, converged: tail <= 1e-8 })
}

#[derive(Clone, Debug, Serialize)]
pub struct ChannelComparison {
    pub nu: Nu,
    pub kappa_d: i32,
    pub s_factor: Complex64,
    pub mu: Complex64,
    pub difference: f64,
    /// Principal angle (degrees) between `G_ν` and the matched eigenspace.
    pub angle_deg: f64,
    pub eigenspace_dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MuEqualsSReport {
    pub rows: Vec<ChannelComparison>,
    pub max_difference: f64,
    pub max_angle_deg: f64,
}

/// Eigenvalues within this distance of the best-overlapping one form its eigenspace.
pub const MATCH_TOLERANCE: f64 = 2e-3;

/// Matches each `G_ν` to the eigenspace of `S₂` that best contains it and compares
/// the projection-weighted eigenvalue with `exp(2iδ_ν)`.
pub fn mu_equals_s_check(spec: &PotentialSpec, kin: &Kinematics, l_max: usize, spectral: &SpectralData) -> Result<MuEqualsSReport> {
    if spectral.p != 2 || kin.block() != 2 {
        return Err(Error::Invalid("the radial comparison uses the lambda > m block".into()));
    }
    if (spectral.kin.lambda - kin.lambda).abs() > 1e-12 * kin.lambda {
        return Err(Error::Invalid("spectral data computed at a different lambda".into()));
    }
    let channels = radial_phase_shifts(spec, kin, l_max)?;
    let (mm, nv) = (spectral.dirs.len(), spectral.len());
    let mut rows = Vec::with_capacity(channels.len());
    for ch in &channels {
        let mut g = vec![Complex64::from(0.0); 2 * mm];
        for (a, d) in spectral.dirs.iter().enumerate() {
            let theta = d[2].clamp(-1.0, 1.0).acos();
            let phi = d[1].atan2(d[0]);
            let v = eigenfunction_block(ch.nu, theta, phi);
            let sv = spectral.weights[a].sqrt();
            g[2 * a] = v[0] * sv;
            g[2 * a + 1] = v[1] * sv;
        }
        let gn = g.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let overlaps: Vec<f64> = (0..nv)
            .map(|j| {
                let mut acc = Complex64::from(0.0);
                for (i, gi) in g.iter().enumerate() {
                    acc += spectral.vectors[(i, j)].conj() * gi;
                }
                acc.norm_sqr() / (gn * gn)
            })
            .collect();
        let best = (0..nv).max_by(|&a, &b| overlaps[a].total_cmp(&overlaps[b])).ok_or_else(|| Error::Invalid("empty spectrum".into()))?;
        let members: Vec<usize> = (0..nv).filter(|&j| (spectral.mu[j] - spectral.mu[best]).norm() < MATCH_TOLERANCE).collect();
        let captured: f64 = members.iter().map(|&j| overlaps[j]).sum();
        let mu = members.iter().map(|&j| spectral.mu[j] * overlaps[j]).sum::<Complex64>() / captured;
        rows.push(ChannelComparison {
            nu: ch.nu,
            kappa_d: ch.kappa_d,
            s_factor: ch.s_factor,
            mu,
            difference: (mu - ch.s_factor).norm(),
            angle_deg: captured.min(1.0).sqrt().acos().to_degrees(),
            eigenspace_dim: members.len(),
        });
    }
    let max_difference = rows.iter().map(|r| r.difference).fold(0.0, f64::max);
    let max_angle_deg = rows.iter().map(|r| r.angle_deg).fold(0.0, f64::max);
    Ok(MuEqualsSReport { rows, max_difference, max_angle_deg })
}

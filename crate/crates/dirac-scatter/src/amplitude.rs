//! Scattering amplitudes from a solved field.
//!
//! `f(ω, ω′, n) = (λ/4π) Σ_j w_j e^{-iκω·r_j} V(r_j) φ(r_j)` is the integral
//! amplitude. The coefficient of the outgoing wave `e^{iκ|r|}/|r|` in φ is not `f`
//! itself but its projection `F = -2P(κω)f = -(λ + mβ + κα·ω) f / λ` onto the
//! incident energy shell; [`asymptotic_check`] compares against `F`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::dirac_algebra::{dirac_symbol, dot3, normalized_spinor, norm3, scale3, Kinematics, Matrix4, Spinor4, Vec3};
use crate::discretization::VolumeGrid;
use crate::error::{Error, Result};
use crate::kernels::{outgoing_exponent, plane_wave};
use crate::potentials::FactorizedPotential;
use crate::rls_solver::{check_incidence, recover_phi_at, FieldRole, SpinorField};

/// `ν = 2π²λ`.
pub fn nu(kin: &Kinematics) -> f64 {
    2.0 * PI * PI * kin.lambda
}

/// `ν₁ = ν / a(|k|) = 2π sgn(λ) / κ`.
pub fn nu1(kin: &Kinematics) -> f64 {
    2.0 * PI * kin.sign() / kin.kappa
}

#[derive(Clone, Debug, Serialize)]
pub struct Amplitude {
    pub omega: Vec3,
    pub omega_in: Vec3,
    pub n: usize,
    pub value: [Complex64; 4],
}

impl Amplitude {
    pub fn spinor(&self) -> Spinor4 {
        Spinor4(self.value)
    }
}

fn unit(v: &Vec3) -> Result<Vec3> {
    let n = norm3(v);
    if !(n > 0.0) || !n.is_finite() {
        return Err(Error::Invalid("direction must be a non-zero finite vector".into()));
    }
    Ok(scale3(v, 1.0 / n))
}

/// `Σ_j w_j e^{-iq·r_j} s_j`.
fn fourier_sum(q: &Vec3, sources: &[Spinor4], grid: &VolumeGrid) -> Spinor4 {
    let mut acc = Spinor4::zero();
    for ((r, w), s) in grid.nodes.iter().zip(&grid.weights).zip(sources) {
        acc = acc.add(&s.scale(Complex64::from_polar(*w, -dot3(q, r))));
    }
    acc
}

/// Integral amplitude from a φ-field at the volume nodes.
pub fn scattering_amplitude(omega: &Vec3, phi: &SpinorField, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Amplitude> {
    if phi.role != FieldRole::Phi || phi.values.len() != grid.len() {
        return Err(Error::Invalid("expected a φ-field on this grid".into()));
    }
    let om = unit(omega)?;
    let kin = &phi.kin;
    let sources: Vec<Spinor4> = (0..grid.len()).map(|i| pot.v(i).mul_vec(&phi.values[i])).collect();
    let f = fourier_sum(&kin.wavevector(&om), &sources, grid).scale(Complex64::from(kin.lambda / (4.0 * PI)));
    Ok(Amplitude { omega: om, omega_in: unit(&phi.k)?, n: phi.n, value: f.0 })
}

/// Same amplitude from ψ, using `Vφ = V₁W₁ψ` (no φ recovery needed).
pub fn scattering_amplitude_from_psi(omega: &Vec3, psi: &SpinorField, pot: &FactorizedPotential, grid: &VolumeGrid) -> Result<Amplitude> {
    if psi.role != FieldRole::Psi || psi.values.len() != grid.len() {
        return Err(Error::Invalid("expected a ψ-field on this grid".into()));
    }
    let om = unit(omega)?;
    let kin = &psi.kin;
    let sources: Vec<Spinor4> = (0..grid.len()).map(|i| (pot.v1[i] * pot.w1[i]).mul_vec(&psi.values[i])).collect();
    let f = fourier_sum(&kin.wavevector(&om), &sources, grid).scale(Complex64::from(kin.lambda / (4.0 * PI)));
    Ok(Amplitude { omega: om, omega_in: unit(&psi.k)?, n: psi.n, value: f.0 })
}

/// First Born amplitude `(λ/4π) Σ w e^{-iq·r} V e^{ik·r} ĝ_n`.
pub fn born_amplitude(
    omega: &Vec3,
    omega_in: &Vec3,
    n: usize,
    kin: &Kinematics,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
) -> Result<Amplitude> {
    let om = unit(omega)?;
    let oi = unit(omega_in)?;
    let k = kin.wavevector(&oi);
    check_incidence(kin, &k, n)?;
    let sources = (0..grid.len())
        .map(|i| Ok(pot.v(i).mul_vec(&plane_wave(&grid.nodes[i], &k, n, kin.m)?)))
        .collect::<Result<Vec<_>>>()?;
    let f = fourier_sum(&kin.wavevector(&om), &sources, grid).scale(Complex64::from(kin.lambda / (4.0 * PI)));
    Ok(Amplitude { omega: om, omega_in: oi, n, value: f.0 })
}

/// `F = -(λ + mβ + κα·ω) f / λ`, the outgoing-wave coefficient.
pub fn far_field_coefficient(amp: &Amplitude, kin: &Kinematics) -> Spinor4 {
    let q = kin.wavevector(&amp.omega);
    let p = Matrix4::identity().scale_re(kin.lambda) + dirac_symbol(&q, kin.m);
    p.mul_vec(&amp.spinor()).scale(Complex64::from(-1.0 / kin.lambda))
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticRow {
    pub radius: f64,
    /// `max_ω |r(φ - φ₀)e^{-sr} - F(ω)| / max_ω |F(ω)|`.
    pub deviation: f64,
    /// Radius lies inside the volume grid, where the expansion does not apply.
    pub inside_support: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticReport {
    pub rows: Vec<AsymptoticRow>,
    pub decreasing: bool,
    /// Deviation after removing the `1/r` correction by Richardson extrapolation
    /// over the last two radii.
    pub extrapolated_deviation: f64,
}

/// Fits `|r|(φ - plane wave)e^{-iκ|r|}` along each direction at the given radii.
pub fn asymptotic_check(
    psi: &SpinorField,
    pot: &FactorizedPotential,
    grid: &VolumeGrid,
    radii: &[f64],
    directions: &[Vec3],
) -> Result<AsymptoticReport> {
    let kin = psi.kin;
    let s = outgoing_exponent(&kin);
    let mut targets = Vec::with_capacity(directions.len());
    for d in directions {
        let amp = scattering_amplitude_from_psi(d, psi, pot, grid)?;
        targets.push((unit(d)?, far_field_coefficient(&amp, &kin)));
    }
    let scale = targets.iter().map(|t| t.1.norm()).fold(0.0, f64::max);
    let rel = |d: f64| if scale > 0.0 { d / scale } else { d };
    let mut rows = Vec::with_capacity(radii.len());
    let mut fits: Vec<Vec<Spinor4>> = Vec::with_capacity(radii.len());
    for &r in radii {
        let mut dev: f64 = 0.0;
        let mut at_r = Vec::with_capacity(targets.len());
        for (om, target) in &targets {
            let x = scale3(om, r);
            let phi = recover_phi_at(&x, psi, pot, grid)?;
            let scat = phi.sub(&plane_wave(&x, &psi.k, psi.n, kin.m)?);
            let fit = scat.scale((-s * r).exp() * r);
            dev = dev.max(fit.sub(target).norm());
            at_r.push(fit);
        }
        rows.push(AsymptoticRow { radius: r, deviation: rel(dev), inside_support: r < grid.r_max });
        fits.push(at_r);
    }
    let decreasing = rows.windows(2).all(|w| w[1].deviation <= w[0].deviation);
    let extrapolated_deviation = match radii.len() {
        0 => f64::NAN,
        1 => rows[0].deviation,
        n => {
            let (r1, r2) = (radii[n - 2], radii[n - 1]);
            let mut dev: f64 = 0.0;
            for (t, (a, b)) in targets.iter().zip(fits[n - 2].iter().zip(&fits[n - 1])) {
                // fit(r) = F + c/r
                let ext = b.scale(Complex64::from(r2 / (r2 - r1))).sub(&a.scale(Complex64::from(r1 / (r2 - r1))));
                dev = dev.max(ext.sub(&t.1).norm());
            }
            rel(dev)
        }
    };
    Ok(AsymptoticReport { rows, decreasing, extrapolated_deviation })
}

#[derive(Clone, Debug, Serialize)]
pub struct AmplitudeComponent {
    pub s: usize,
    pub n: usize,
    pub omega: Vec3,
    pub omega_in: Vec3,
    pub value: Complex64,
    /// `s` lies in the incident energy block.
    pub on_block: bool,
}

/// `f_{s,n} = ĝ_s*(κω) f` for s = 1..4.
pub fn amplitude_components(amp: &Amplitude, kin: &Kinematics) -> Result<Vec<AmplitudeComponent>> {
    let q = kin.wavevector(&amp.omega);
    let f = amp.spinor();
    let block = if kin.block() == 2 { [3, 4] } else { [1, 2] };
    (1..=4)
        .map(|s| {
            Ok(AmplitudeComponent {
                s,
                n: amp.n,
                omega: amp.omega,
                omega_in: amp.omega_in,
                value: normalized_spinor(s, &q, kin.m)?.inner(&f),
                on_block: block.contains(&s),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretization::{build_volume_grid, AngularRule};
    use crate::potentials::PotentialSpec;
    use crate::rls_solver::{recover_phi, solve_modified_rls};

    fn setup(g: f64) -> (Kinematics, VolumeGrid, FactorizedPotential) {
        let kin = Kinematics::new(1.0, 1.5).unwrap();
        let grid = build_volume_grid(8.0, 12, AngularRule::Lebedev(11)).unwrap();
        let spec = PotentialSpec::Yukawa { strength: g, range: 1.0, charge: 1.0 };
        let pot = FactorizedPotential::new(&spec, &grid).unwrap();
        (kin, grid, pot)
    }

    #[test]
    fn nu_examples() {
        let k2 = Kinematics::new(1.0, 2.0).unwrap();
        assert!((nu(&k2) - 4.0 * PI * PI).abs() < 1e-12);
        assert!((nu1(&k2) - 2.0 * PI / 3f64.sqrt()).abs() < 1e-12);
        let a = PI * k2.lambda * k2.kappa;
        assert!((nu(&k2) / a - nu1(&k2)).abs() < 1e-12);
    }

    #[test]
    fn zero_potential_has_zero_amplitude() {
        let (kin, grid, _) = setup(0.0);
        let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
        let k = kin.wavevector(&[0.0, 0.0, 1.0]);
        let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        let phi = recover_phi(&psi, &pot, &grid).unwrap();
        let f = scattering_amplitude(&[1.0, 0.0, 0.0], &phi, &pot, &grid).unwrap();
        assert!(f.value.iter().all(|c| *c == Complex64::from(0.0)));
        let rep = asymptotic_check(&psi, &pot, &grid, &[20.0, 40.0], &[[0.0, 1.0, 0.0]]).unwrap();
        assert!(rep.rows.iter().all(|r| r.deviation == 0.0));
    }

    #[test]
    fn phi_and_psi_routes_agree() {
        let (kin, grid, pot) = setup(0.3);
        let k = kin.wavevector(&[0.0, 0.0, 1.0]);
        let psi = solve_modified_rls(&kin, &k, 4, &pot, &grid).unwrap();
        let phi = recover_phi(&psi, &pot, &grid).unwrap();
        let om = [0.3, -0.4, 0.8];
        let a = scattering_amplitude(&om, &phi, &pot, &grid).unwrap().spinor();
        let b = scattering_amplitude_from_psi(&om, &psi, &pot, &grid).unwrap().spinor();
        assert!(a.sub(&b).norm() < 1e-7 * b.norm());
    }

    #[test]
    fn weak_coupling_approaches_born() {
        let om = [0.6, 0.0, 0.8];
        let oi = [0.0, 0.0, 1.0];
        let rel = |g: f64| {
            let (kin, grid, pot) = setup(g);
            let psi = solve_modified_rls(&kin, &kin.wavevector(&oi), 3, &pot, &grid).unwrap();
            let f = scattering_amplitude_from_psi(&om, &psi, &pot, &grid).unwrap().spinor();
            let b = born_amplitude(&om, &oi, 3, &kin, &pot, &grid).unwrap().spinor();
            f.sub(&b).norm() / b.norm()
        };
        let (r1, r2) = (rel(0.04), rel(0.02));
        assert!(r1 < 0.2 && (r1 / r2 - 2.0).abs() < 0.1, "{r1} {r2}");
    }

    #[test]
    fn born_amplitude_is_linear_in_strength() {
        let (kin, grid, p1) = setup(0.1);
        let (_, _, p2) = setup(0.3);
        let a = born_amplitude(&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], 4, &kin, &p1, &grid).unwrap().spinor();
        let b = born_amplitude(&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], 4, &kin, &p2, &grid).unwrap().spinor();
        assert!(b.sub(&a.scale(Complex64::from(3.0))).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn rotation_invariance_for_radial_potential() {
        let (kin, grid, pot) = setup(0.3);
        // block-summed |f|² for a pair and the same pair rotated by 90° about y
        let pairs = [([0.0, 0.0, 1.0], [0.6, 0.0, 0.8]), ([1.0, 0.0, 0.0], [0.8, 0.0, -0.6])];
        let mut sums = vec![];
        for (oi, om) in pairs {
            let mut s = 0.0;
            for n in [3, 4] {
                let psi = solve_modified_rls(&kin, &kin.wavevector(&oi), n, &pot, &grid).unwrap();
                s += scattering_amplitude_from_psi(&om, &psi, &pot, &grid).unwrap().spinor().norm().powi(2);
            }
            sums.push(s);
        }
        assert!((sums[0] / sums[1] - 1.0).abs() < 2e-2, "{sums:?}");
    }

    #[test]
    fn components_split_by_block() {
        let (kin, grid, pot) = setup(0.3);
        let k = kin.wavevector(&[0.0, 0.0, 1.0]);
        let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        let amp = scattering_amplitude_from_psi(&[0.0, 0.6, 0.8], &psi, &pot, &grid).unwrap();
        let comps = amplitude_components(&amp, &kin).unwrap();
        assert_eq!(comps.iter().filter(|c| c.on_block).map(|c| c.s).collect::<Vec<_>>(), vec![3, 4]);
        let total: f64 = comps.iter().map(|c| c.value.norm_sqr()).sum();
        assert!((total - amp.spinor().norm().powi(2)).abs() < 1e-10 * total);
    }

    #[test]
    fn far_field_matches_projected_amplitude() {
        let (kin, grid, pot) = setup(0.3);
        let k = kin.wavevector(&[0.0, 0.0, 1.0]);
        let psi = solve_modified_rls(&kin, &k, 3, &pot, &grid).unwrap();
        let radii: Vec<f64> = [10.0, 20.0, 40.0].iter().map(|x| x / kin.kappa).collect();
        let dirs = [[0.0, 0.0, 1.0], [0.6, 0.0, 0.8], [0.0, -0.8, 0.6], [1.0, 0.0, 0.0]];
        let rep = asymptotic_check(&psi, &pot, &grid, &radii, &dirs).unwrap();
        assert!(rep.decreasing, "{:?}", rep.rows);
        assert!(rep.rows[2].deviation < 0.1, "{:?}", rep.rows);
        assert!(rep.extrapolated_deviation < 0.05, "{}", rep.extrapolated_deviation);
    }
}

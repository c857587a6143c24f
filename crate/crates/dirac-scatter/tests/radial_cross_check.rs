use dirac_scatter::amplitude::{far_field_coefficient, scattering_amplitude_from_psi};
use dirac_scatter::dirac_algebra::Kinematics;
use dirac_scatter::discretization::{build_sphere_grid, build_volume_grid, AngularRule};
use dirac_scatter::partial_wave::{flux_normalization, mu_equals_s_check, partial_wave_amplitudes, radial_phase_shifts, Nu};
use dirac_scatter::potentials::{FactorizedPotential, PotentialSpec};
use dirac_scatter::rls_solver::RlsSolver;
use dirac_scatter::s_matrix::{assemble_t_operator, s_operator, spectrum};
use num_complex::Complex64;

fn yukawa(g: f64) -> PotentialSpec {
    PotentialSpec::Yukawa { strength: g, range: 1.0, charge: 1.0 }
}

#[test]
fn eigenvalues_match_radial_phase_factors() {
    let kin = Kinematics::new(1.0, 1.5).unwrap();
    let spec = yukawa(0.25);
    let grid = build_volume_grid(12.0, 24, AngularRule::Lebedev(11)).unwrap();
    let pot = FactorizedPotential::new(&spec, &grid).unwrap();
    let sphere = build_sphere_grid(14).unwrap();
    let sp = spectrum(&s_operator(&assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap())).unwrap();
    let rep = mu_equals_s_check(&spec, &kin, 3, &sp).unwrap();
    for row in &rep.rows {
        println!("nu {} kappa_D {:+} |mu - S| {:.2e} angle {:.3} deg dim {}", row.nu, row.kappa_d, row.difference, row.angle_deg, row.eigenspace_dim);
    }
    assert!(rep.max_difference < 0.05, "{}", rep.max_difference);
    assert!(rep.max_angle_deg < 5.0, "{}", rep.max_angle_deg);
}

#[test]
fn zero_potential_gives_unit_factors_on_both_sides() {
    let kin = Kinematics::new(1.0, 1.5).unwrap();
    let grid = build_volume_grid(6.0, 10, AngularRule::Lebedev(11)).unwrap();
    let pot = FactorizedPotential::new(&PotentialSpec::Zero, &grid).unwrap();
    let sphere = build_sphere_grid(8).unwrap();
    let sp = spectrum(&s_operator(&assemble_t_operator(&kin, &pot, &grid, &sphere).unwrap())).unwrap();
    let rep = mu_equals_s_check(&PotentialSpec::Zero, &kin, 3, &sp).unwrap();
    for row in &rep.rows {
        assert!((row.mu - 1.0).norm() < 1e-12 && (row.s_factor - 1.0).norm() < 1e-6);
    }
}

#[test]
fn series_amplitudes_match_volume_amplitudes() {
    let kin = Kinematics::new(1.0, 1.5).unwrap();
    let spec = yukawa(0.25);
    let grid = build_volume_grid(12.0, 24, AngularRule::Lebedev(11)).unwrap();
    let pot = FactorizedPotential::new(&spec, &grid).unwrap();
    let solver = RlsSolver::new(&kin, &pot, &grid).unwrap();
    let k = kin.wavevector(&[0.0, 0.0, 1.0]);
    let psi = solver.solve(&k, 4, &pot, &grid).unwrap();
    let chans: Vec<(Nu, Complex64)> = radial_phase_shifts(&spec, &kin, 10).unwrap().iter().map(|c| (c.nu, c.s_factor)).collect();
    let n = flux_normalization(&kin).unwrap();
    let (mut err, mut scale): (f64, f64) = (0.0, 0.0);
    for th in [0.1f64, 0.6, 1.1, 1.6, 2.1, 2.6, 3.0] {
        let om = [th.sin(), 0.0, th.cos()];
        let amp = scattering_amplitude_from_psi(&om, &psi, &pot, &grid).unwrap();
        let far = far_field_coefficient(&amp, &kin);
        let pw = partial_wave_amplitudes(&chans, &kin, th, 0.0).unwrap();
        err = err.max((far.0[2] * n - pw.f).norm()).max((far.0[3] * n - pw.g).norm());
        scale = scale.max(pw.f.norm());
    }
    assert!(err < 0.1 * scale, "{err} {scale}");
}

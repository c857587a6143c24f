use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::time::Instant;

use dirac_scatter::amplitude::{amplitude_components, asymptotic_check, nu, scattering_amplitude_from_psi};
use dirac_scatter::dirac_algebra::{Kinematics, Vec3};
use dirac_scatter::discretization::{build_sphere_grid, build_volume_grid, AngularRule, SphereGrid, VolumeGrid};
use dirac_scatter::kernels::kernel_two_route_check;
use dirac_scatter::linalg::norm_fro;
use dirac_scatter::partial_wave::{mu_equals_s_check, partial_wave_amplitudes, radial_phase_shifts, Nu};
use dirac_scatter::potentials::FactorizedPotential;
use dirac_scatter::rls_solver::{exceptional_scan_refined, recover_phi, relative_residual, RlsSolver, SpinorField};
use dirac_scatter::s_matrix::{assemble_t_operator_with, block_channels, hs_norm, reconstruct, s_operator, spectrum, t_operator_factorized_with};
use num_complex::Complex64;
use serde_json::Value;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::output::{num, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CommandKind {
    KernelCheck,
    Solve,
    Amplitude,
    Smatrix,
    Reconstruct,
    PartialWave,
    ExceptionalScan,
}

impl CommandKind {
    pub fn name(&self) -> &'static str {
        match self {
            CommandKind::KernelCheck => "kernel-check",
            CommandKind::Solve => "solve",
            CommandKind::Amplitude => "amplitude",
            CommandKind::Smatrix => "smatrix",
            CommandKind::Reconstruct => "reconstruct",
            CommandKind::PartialWave => "partial-wave",
            CommandKind::ExceptionalScan => "exceptional-scan",
        }
    }
}

/// Output of one command at one energy (or of a whole scan).
#[derive(Debug, Default)]
pub struct Run {
    pub lambda: Option<f64>,
    pub tables: Vec<(String, Table)>,
    pub diagnostics: BTreeMap<String, Value>,
    pub seconds: f64,
}

impl Run {
    fn diag(&mut self, key: &str, v: impl Into<Value>) {
        self.diagnostics.insert(key.to_string(), v.into());
    }
}

struct Setup {
    kin: Kinematics,
    grid: VolumeGrid,
    pot: FactorizedPotential,
}

fn volume_grid(cfg: &RunConfig) -> Result<VolumeGrid, CliError> {
    Ok(build_volume_grid(cfg.r_max(), cfg.grid.n_r, AngularRule::Lebedev(cfg.grid.volume_order))?)
}

fn setup(cfg: &RunConfig, lambda: f64) -> Result<Setup, CliError> {
    let kin = Kinematics::new(cfg.solver.m, lambda)?;
    let grid = volume_grid(cfg)?;
    let pot = FactorizedPotential::new(&cfg.potential, &grid)?;
    Ok(Setup { kin, grid, pot })
}

fn sphere(cfg: &RunConfig) -> Result<SphereGrid, CliError> {
    Ok(build_sphere_grid(cfg.grid.sphere_order)?)
}

fn incident(cfg: &RunConfig, kin: &Kinematics) -> (Vec3, usize) {
    let d = cfg.solver.direction;
    let n = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
    let k = [d[0] / n * kin.kappa, d[1] / n * kin.kappa, d[2] / n * kin.kappa];
    (k, cfg.solver.channel.unwrap_or(if kin.lambda > 0.0 { 4 } else { 2 }))
}

fn thetas(cfg: &RunConfig) -> Vec<f64> {
    let n = cfg.output.theta_points;
    (0..n).map(|i| PI * i as f64 / (n - 1) as f64).collect()
}

fn cplx_header(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).flat_map(|i| [format!("re_{prefix}{i}"), format!("im_{prefix}{i}")]).collect()
}

fn cplx(z: Complex64) -> [String; 2] {
    [num(z.re), num(z.im)]
}

/// Deterministic points on shells `0.6 ≤ |r| ≤ 2.4` along a Fibonacci spiral.
pub fn kernel_sample_points(count: usize) -> Vec<Vec3> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
            let s = (1.0 - z * z).sqrt();
            let r = 0.6 + 1.8 * ((i as f64 * 0.618_033_988_749_895) % 1.0);
            let a = golden * i as f64;
            [r * s * a.cos(), r * s * a.sin(), r * z]
        })
        .collect()
}

fn kernel_check(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let kin = Kinematics::new(cfg.solver.m, lambda)?;
    let pts = kernel_sample_points(cfg.solver.kernel_points);
    let rep = kernel_two_route_check(&kin, cfg.solver.kernel_box, cfg.solver.kernel_fft_n, &pts, &[0.04, 0.02, 0.01])?;
    let mut samples = Table::new(&["x", "y", "z", "closed_form_norm", "relative_difference"]);
    for r in &rep.rows {
        samples.push(vec![num(r.r[0]), num(r.r[1]), num(r.r[2]), num(r.closed_form_norm), num(r.relative_difference)]);
    }
    let mut res = Table::new(&["h", "residual"]);
    for r in &rep.residuals {
        res.push(vec![num(r.h), num(r.residual)]);
    }
    let mut run = Run { tables: vec![("kernel_samples".into(), samples), ("kernel_residual".into(), res)], ..Run::default() };
    run.diag("max_relative_difference", rep.max_relative_difference);
    run.diag("residual_order", rep.residual_order);
    Ok(run)
}

fn solve_psi(cfg: &RunConfig, s: &Setup) -> Result<(RlsSolver, SpinorField), CliError> {
    let (k, n) = incident(cfg, &s.kin);
    dirac_scatter::rls_solver::check_incidence(&s.kin, &k, n)?;
    let solver = RlsSolver::new(&s.kin, &s.pot, &s.grid)?;
    let psi = solver.solve(&k, n, &s.pot, &s.grid)?;
    Ok((solver, psi))
}

fn solve(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let s = setup(cfg, lambda)?;
    let (solver, psi) = solve_psi(cfg, &s)?;
    let residual = relative_residual(&psi, &s.pot, &s.grid)?;
    let phi = recover_phi(&psi, &s.pot, &s.grid)?;
    let mut header = vec!["x".to_string(), "y".into(), "z".into(), "weight".into()];
    header.extend(cplx_header("phi", 4));
    let mut t = Table { header, rows: vec![] };
    for (i, r) in s.grid.nodes.iter().enumerate() {
        let mut row = vec![num(r[0]), num(r[1]), num(r[2]), num(s.grid.weights[i])];
        row.extend(phi.values[i].0.iter().flat_map(|z| cplx(*z)));
        t.push(row);
    }
    let mut run = Run { tables: vec![("phi".into(), t)], ..Run::default() };
    run.diag("nodes", s.grid.len());
    run.diag("channel", psi.n);
    run.diag("condition_estimate", solver.condition);
    run.diag("relative_residual", residual);
    run.diag("psi_norm", psi.norm());
    Ok(run)
}

fn amplitude(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let s = setup(cfg, lambda)?;
    let (solver, psi) = solve_psi(cfg, &s)?;
    let mut header = vec!["theta".to_string()];
    header.extend(cplx_header("f", 4));
    header.extend(cplx_header("a", 4));
    let mut t = Table { header, rows: vec![] };
    for th in thetas(cfg) {
        let om = [th.sin(), 0.0, th.cos()];
        let amp = scattering_amplitude_from_psi(&om, &psi, &s.pot, &s.grid)?;
        let comps = amplitude_components(&amp, &s.kin)?;
        let mut row = vec![num(th)];
        row.extend(amp.value.iter().flat_map(|z| cplx(*z)));
        row.extend(comps.iter().flat_map(|c| cplx(c.value)));
        t.push(row);
    }
    let radii: Vec<f64> = cfg.solver.asymptotic_radii.iter().map(|r| r / s.kin.kappa).collect();
    let dirs = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [-1.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.6, 0.0, 0.8]];
    let asym = asymptotic_check(&psi, &s.pot, &s.grid, &radii, &dirs)?;
    let mut a = Table::new(&["radius", "deviation", "inside_support"]);
    for r in &asym.rows {
        a.push(vec![num(r.radius), num(r.deviation), r.inside_support.to_string()]);
    }
    let mut run = Run { tables: vec![("amplitude".into(), t), ("asymptotic".into(), a)], ..Run::default() };
    run.diag("condition_estimate", solver.condition);
    run.diag("asymptotic_decreasing", asym.decreasing);
    run.diag("asymptotic_extrapolated_deviation", asym.extrapolated_deviation);
    Ok(run)
}

fn smatrix(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let s = setup(cfg, lambda)?;
    let sph = sphere(cfg)?;
    let solver = RlsSolver::new(&s.kin, &s.pot, &s.grid)?;
    let t = assemble_t_operator_with(&solver, &s.pot, &s.grid, &sph)?;
    let mut run = Run::default();
    if cfg.solver.factorization_check {
        let f = t_operator_factorized_with(&solver, &s.pot, &s.grid, &sph)?;
        let d = norm_fro((&t.matrix - &f.matrix).as_ref());
        let scale = hs_norm(&t);
        run.diag("factorization_relative_difference", if scale > 0.0 { d / scale } else { d });
    }
    let sm = s_operator(&t);
    let sp = spectrum(&sm)?;
    let mut tab = Table::new(&["j", "re_mu", "im_mu", "abs_mu", "arg_mu", "eigen_residual"]);
    for (j, m) in sp.mu.iter().enumerate() {
        tab.push(vec![j.to_string(), num(m.re), num(m.im), num(m.norm()), num(m.arg()), num(sp.eigen_residuals[j])]);
    }
    run.tables.push(("spectrum".into(), tab));
    run.diag("block", t.p);
    run.diag("volume_nodes", s.grid.len());
    run.diag("sphere_nodes", sph.len());
    run.diag("condition_estimate", solver.condition);
    run.diag("unitarity_defect", sm.unitarity_defect());
    run.diag("hs_norm", hs_norm(&t));
    run.diag("orthonormality_residual", sp.orthonormality_residual);
    run.diag("max_abs_mu_minus_one", sp.mu.iter().map(|m| (m - 1.0).norm()).fold(0.0, f64::max));
    Ok(run)
}

/// Direction-index pairs spread over the sphere without a random generator.
pub fn sample_pairs(count: usize, m: usize) -> Vec<(usize, usize)> {
    (0..count).map(|i| ((i * 7919 + 3) % m, (i * 104_729 + 17) % m)).collect()
}

fn reconstruct_cmd(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let s = setup(cfg, lambda)?;
    let sph = sphere(cfg)?;
    let solver = RlsSolver::new(&s.kin, &s.pot, &s.grid)?;
    let t = assemble_t_operator_with(&solver, &s.pot, &s.grid, &sph)?;
    let sp = spectrum(&s_operator(&t))?;
    let ch = block_channels(&s.kin);
    let nuk = nu(&s.kin);
    let pairs = sample_pairs(cfg.solver.samples, sph.len());
    let mut psis: BTreeMap<usize, [SpinorField; 2]> = BTreeMap::new();
    for &(_, b) in &pairs {
        if !psis.contains_key(&b) {
            let k = s.kin.wavevector(&sph.dirs[b]);
            psis.insert(b, [solver.solve(&k, ch[0], &s.pot, &s.grid)?, solver.solve(&k, ch[1], &s.pot, &s.grid)?]);
        }
    }
    let mut tab = Table::new(&["a", "b", "s", "n", "re_reconstructed", "im_reconstructed", "re_direct", "im_direct", "re_amplitude", "im_amplitude"]);
    let (mut err_d, mut err_a, mut scale_d, mut scale_a): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for &(a, b) in &pairs {
        let rec = reconstruct(&sp, &s.kin, a, b, cfg.solver.rank)?;
        for (n, psi) in psis[&b].iter().enumerate() {
            let comps = amplitude_components(&scattering_amplitude_from_psi(&sph.dirs[a], psi, &s.pot, &s.grid)?, &s.kin)?;
            for (si, &chan) in ch.iter().enumerate() {
                let direct = t.kernel(a, si, b, n) * nuk;
                let amp = comps.iter().find(|c| c.s == chan).map(|c| c.value).unwrap_or_default();
                let r = rec.values[si][n];
                err_d = err_d.max((r - direct).norm());
                err_a = err_a.max((r - amp).norm());
                scale_d = scale_d.max(direct.norm());
                scale_a = scale_a.max(amp.norm());
                let mut row = vec![a.to_string(), b.to_string(), chan.to_string(), ch[n].to_string()];
                row.extend(cplx(r));
                row.extend(cplx(direct));
                row.extend(cplx(amp));
                tab.push(row);
            }
        }
    }
    let rel = |e: f64, s: f64| if s > 0.0 { e / s } else { e };
    let mut run = Run { tables: vec![("reconstruct".into(), tab)], ..Run::default() };
    run.diag("rank", cfg.solver.rank.unwrap_or(sp.len()).min(sp.len()));
    run.diag("samples", pairs.len());
    run.diag("max_relative_error", rel(err_d, scale_d));
    run.diag("max_relative_error_amplitude", rel(err_a, scale_a));
    run.diag("unitarity_defect", s_operator(&t).unitarity_defect());
    Ok(run)
}

fn partial_wave(cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let kin = Kinematics::new(cfg.solver.m, lambda)?;
    let chans = radial_phase_shifts(&cfg.potential, &kin, cfg.solver.l_max)?;
    let mut run = Run::default();
    let mut diffs: BTreeMap<Nu, f64> = BTreeMap::new();
    if cfg.solver.compare_spectrum {
        let s = setup(cfg, lambda)?;
        let sph = sphere(cfg)?;
        let solver = RlsSolver::new(&s.kin, &s.pot, &s.grid)?;
        let sp = spectrum(&s_operator(&assemble_t_operator_with(&solver, &s.pot, &s.grid, &sph)?))?;
        let rep = mu_equals_s_check(&cfg.potential, &kin, cfg.solver.l_max, &sp)?;
        for r in &rep.rows {
            diffs.insert(r.nu, r.difference);
        }
        run.diag("max_mu_s_difference", rep.max_difference);
        run.diag("max_angle_deg", rep.max_angle_deg);
    }
    let mut tab = Table::new(&["l", "nu", "kappa_d", "delta", "re_s", "im_s", "mu_s_difference", "matching_drift"]);
    for c in &chans {
        tab.push(vec![
            c.l.to_string(),
            num(c.nu.value()),
            c.kappa_d.to_string(),
            num(c.delta),
            num(c.s_factor.re),
            num(c.s_factor.im),
            diffs.get(&c.nu).map(|d| num(*d)).unwrap_or_default(),
            num(c.matching_drift),
        ]);
    }
    let pairs: Vec<(Nu, Complex64)> = chans.iter().map(|c| (c.nu, c.s_factor)).collect();
    let mut amps = Table::new(&["theta", "re_f", "im_f", "re_g", "im_g"]);
    let mut converged = true;
    for th in thetas(cfg) {
        let a = partial_wave_amplitudes(&pairs, &kin, th, 0.0)?;
        converged &= a.converged;
        let mut row = vec![num(th)];
        row.extend(cplx(a.f));
        row.extend(cplx(a.g));
        amps.push(row);
    }
    run.tables = vec![("channels".into(), tab), ("partial_wave_amplitudes".into(), amps)];
    run.diag("l_max", cfg.solver.l_max);
    run.diag("series_converged", converged);
    run.diag("max_matching_drift", chans.iter().map(|c| c.matching_drift).fold(0.0, f64::max));
    Ok(run)
}

fn exceptional_scan(cfg: &RunConfig, lambdas: &[f64]) -> Result<Run, CliError> {
    let grid = volume_grid(cfg)?;
    let rep = exceptional_scan_refined(cfg.solver.m, lambdas, &cfg.potential, &grid, cfg.solver.refine)?;
    let mut scan = Table::new(&["lambda", "sigma_min", "flagged"]);
    let mut refined = Table::new(&["lambda", "sigma_min", "flagged"]);
    let mut pts = rep.points.clone();
    pts.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    for p in &pts {
        let row = vec![num(p.lambda), num(p.sigma_min), p.flagged.to_string()];
        if p.refined {
            refined.push(row);
        } else {
            scan.push(row);
        }
    }
    let mut run = Run { tables: vec![("scan".into(), scan), ("scan_refined".into(), refined)], ..Run::default() };
    run.diag("median", rep.median);
    run.diag("threshold", rep.threshold);
    run.diag("flagged", rep.flagged().count());
    if let Some(p) = rep.min_point() {
        run.diag("min_lambda", p.lambda);
        run.diag("min_sigma", p.sigma_min);
    }
    Ok(run)
}

/// Runs a command at one energy.
pub fn run_at(kind: CommandKind, cfg: &RunConfig, lambda: f64) -> Result<Run, CliError> {
    let t0 = Instant::now();
    let mut run = match kind {
        CommandKind::KernelCheck => kernel_check(cfg, lambda),
        CommandKind::Solve => solve(cfg, lambda),
        CommandKind::Amplitude => amplitude(cfg, lambda),
        CommandKind::Smatrix => smatrix(cfg, lambda),
        CommandKind::Reconstruct => reconstruct_cmd(cfg, lambda),
        CommandKind::PartialWave => partial_wave(cfg, lambda),
        CommandKind::ExceptionalScan => exceptional_scan(cfg, &[lambda]),
    }?;
    run.lambda = Some(lambda);
    run.seconds = t0.elapsed().as_secs_f64();
    Ok(run)
}

/// Runs a whole λ-scan as one unit.
pub fn run_scan(cfg: &RunConfig, lambdas: &[f64]) -> Result<Run, CliError> {
    let t0 = Instant::now();
    let mut run = exceptional_scan(cfg, lambdas)?;
    run.seconds = t0.elapsed().as_secs_f64();
    Ok(run)
}

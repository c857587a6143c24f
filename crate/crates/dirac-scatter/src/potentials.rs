//! Potentials `V(r) = -e ν(r) I₄ + e α·A(r)` (or a tabulated Hermitian field) and
//! the factorization `V = V₁ W₁ V₁` with `V₁ = |V|^{1/2}`, `W₁ = sgn V`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dirac_algebra::{alpha_dot, norm3, Matrix4, Vec3};
use crate::discretization::{build_volume_grid, VolumeGrid};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigen, CMat};

fn unit_charge() -> f64 {
    1.0
}

/// Built-in potential families. Strengths are in units of energy times the
/// appropriate power of length; `range` is a length.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum PotentialSpec {
    Zero,
    /// `ν = g e^{-|r|/range} / |r|`.
    Yukawa {
        strength: f64,
        range: f64,
        #[serde(default = "unit_charge")]
        charge: f64,
    },
    /// `ν = g e^{-|r|²/range²}`.
    Gaussian {
        strength: f64,
        range: f64,
        #[serde(default = "unit_charge")]
        charge: f64,
    },
    /// `ν = g/|r|` inside `cutoff`, zero outside.
    CutoffCoulomb {
        strength: f64,
        cutoff: f64,
        #[serde(default = "unit_charge")]
        charge: f64,
    },
    /// Untruncated `ν = g/|r|`; long range, for diagnostics only.
    Coulomb {
        strength: f64,
        #[serde(default = "unit_charge")]
        charge: f64,
    },
    /// Constant vector potential `A` on the ball `|r| < radius`.
    UniformVector {
        a: [f64; 3],
        radius: f64,
        #[serde(default = "unit_charge")]
        charge: f64,
    },
    /// Radially tabulated Hermitian matrices, linearly interpolated in `|r|`,
    /// zero beyond the last radius. Entries are `[re, im]` pairs, row-major.
    MatrixTable { radii: Vec<f64>, matrices: Vec<[[[f64; 2]; 4]; 4]> },
}

impl PotentialSpec {
    pub fn family(&self) -> &'static str {
        match self {
            PotentialSpec::Zero => "zero",
            PotentialSpec::Yukawa { .. } => "yukawa",
            PotentialSpec::Gaussian { .. } => "gaussian",
            PotentialSpec::CutoffCoulomb { .. } => "cutoff-coulomb",
            PotentialSpec::Coulomb { .. } => "coulomb",
            PotentialSpec::UniformVector { .. } => "uniform-vector",
            PotentialSpec::MatrixTable { .. } => "matrix-table",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |name: &str, x: f64| {
            if x > 0.0 && x.is_finite() {
                Ok(())
            } else {
                Err(Error::Invalid(format!("potential {name} must be positive, got {x}")))
            }
        };
        let fin = |name: &str, x: f64| {
            if x.is_finite() {
                Ok(())
            } else {
                Err(Error::Invalid(format!("potential {name} must be finite")))
            }
        };
        match self {
            PotentialSpec::Zero => Ok(()),
            PotentialSpec::Yukawa { strength, range, charge } | PotentialSpec::Gaussian { strength, range, charge } => {
                fin("strength", *strength)?;
                fin("charge", *charge)?;
                pos("range", *range)
            }
            PotentialSpec::CutoffCoulomb { strength, cutoff, charge } => {
                fin("strength", *strength)?;
                fin("charge", *charge)?;
                pos("cutoff", *cutoff)
            }
            PotentialSpec::Coulomb { strength, charge } => {
                fin("strength", *strength)?;
                fin("charge", *charge)
            }
            PotentialSpec::UniformVector { a, radius, charge } => {
                a.iter().try_for_each(|x| fin("vector component", *x))?;
                fin("charge", *charge)?;
                pos("radius", *radius)
            }
            PotentialSpec::MatrixTable { radii, matrices } => {
                if radii.is_empty() || radii.len() != matrices.len() {
                    return Err(Error::Invalid("matrix table needs equally many radii and matrices".into()));
                }
                if radii.windows(2).any(|w| w[1] <= w[0]) || radii[0] < 0.0 {
                    return Err(Error::Invalid("matrix table radii must be increasing and non-negative".into()));
                }
                for m in matrices {
                    if !table_matrix(m).is_hermitian(1e-12) {
                        return Err(Error::Invalid("matrix table entries must be Hermitian".into()));
                    }
                }
                Ok(())
            }
        }
    }

    /// Spherically symmetric scalar potential (`V = v(|r|) I₄`).
    pub fn is_radial(&self) -> bool {
        matches!(
            self,
            PotentialSpec::Zero
                | PotentialSpec::Yukawa { .. }
                | PotentialSpec::Gaussian { .. }
                | PotentialSpec::CutoffCoulomb { .. }
                | PotentialSpec::Coulomb { .. }
        )
    }

    /// Characteristic length used for default grid extents.
    pub fn range(&self) -> f64 {
        match self {
            PotentialSpec::Zero | PotentialSpec::Coulomb { .. } => 1.0,
            PotentialSpec::Yukawa { range, .. } | PotentialSpec::Gaussian { range, .. } => *range,
            PotentialSpec::CutoffCoulomb { cutoff, .. } => *cutoff,
            PotentialSpec::UniformVector { radius, .. } => *radius,
            PotentialSpec::MatrixTable { radii, .. } => *radii.last().unwrap_or(&1.0),
        }
    }

    /// Same family with every strength multiplied by `g`.
    pub fn scaled(&self, g: f64) -> PotentialSpec {
        let mut out = self.clone();
        match &mut out {
            PotentialSpec::Zero => {}
            PotentialSpec::Yukawa { strength, .. }
            | PotentialSpec::Gaussian { strength, .. }
            | PotentialSpec::CutoffCoulomb { strength, .. }
            | PotentialSpec::Coulomb { strength, .. } => *strength *= g,
            PotentialSpec::UniformVector { a, .. } => a.iter_mut().for_each(|x| *x *= g),
            PotentialSpec::MatrixTable { matrices, .. } => {
                matrices.iter_mut().flatten().flatten().flatten().for_each(|x| *x *= g)
            }
        }
        out
    }

    /// Scalar `v(|r|)` with `V = v I₄`, for radial families.
    pub fn radial_value(&self, r: f64) -> Option<f64> {
        let v = match *self {
            PotentialSpec::Zero => 0.0,
            PotentialSpec::Yukawa { strength, range, charge } => -charge * strength * (-r / range).exp() / r,
            PotentialSpec::Gaussian { strength, range, charge } => -charge * strength * (-(r / range).powi(2)).exp(),
            PotentialSpec::CutoffCoulomb { strength, cutoff, charge } => {
                if r <= cutoff {
                    -charge * strength / r
                } else {
                    0.0
                }
            }
            PotentialSpec::Coulomb { strength, charge } => -charge * strength / r,
            _ => return None,
        };
        Some(v)
    }

    /// `-lim_{r→0} r·v(r)`: Coulomb-like strength at the origin of a radial potential.
    pub fn origin_coulomb_strength(&self) -> f64 {
        match *self {
            PotentialSpec::Yukawa { strength, charge, .. }
            | PotentialSpec::CutoffCoulomb { strength, charge, .. }
            | PotentialSpec::Coulomb { strength, charge } => charge * strength,
            _ => 0.0,
        }
    }
}

fn table_matrix(m: &[[[f64; 2]; 4]; 4]) -> Matrix4 {
    let mut out = Matrix4::zero();
    for i in 0..4 {
        for j in 0..4 {
            out.0[i][j] = Complex64::new(m[i][j][0], m[i][j][1]);
        }
    }
    out
}

pub fn potential_matrix(r: &Vec3, spec: &PotentialSpec) -> Matrix4 {
    let d = norm3(r);
    if let Some(v) = spec.radial_value(d) {
        return Matrix4::identity().scale_re(v);
    }
    match spec {
        PotentialSpec::UniformVector { a, radius, charge } => {
            if d < *radius {
                alpha_dot(a).scale_re(*charge)
            } else {
                Matrix4::zero()
            }
        }
        PotentialSpec::MatrixTable { radii, matrices } => {
            let last = radii.len() - 1;
            if d > radii[last] {
                return Matrix4::zero();
            }
            if d <= radii[0] {
                return table_matrix(&matrices[0]);
            }
            let j = radii.partition_point(|x| *x < d).min(last);
            let t = (d - radii[j - 1]) / (radii[j] - radii[j - 1]);
            table_matrix(&matrices[j - 1]).scale_re(1.0 - t) + table_matrix(&matrices[j]).scale_re(t)
        }
        _ => unreachable!("radial families handled above"),
    }
}

/// `(V₁, W₁)` with `V₁ = U |D|^{1/2} U*`, `W₁ = U sgn(D) U*`, `sgn(0) = 1`.
pub fn factorize(v: &Matrix4) -> Result<(Matrix4, Matrix4)> {
    let scale = v.norm_fro();
    if !v.is_hermitian(1e-12 * scale.max(1e-300)) {
        return Err(Error::Invalid("potential matrix is not Hermitian".into()));
    }
    if scale == 0.0 {
        return Ok((Matrix4::zero(), Matrix4::identity()));
    }
    // scalar multiples of the identity need no eigensolver
    let d0 = v.0[0][0].re;
    if v.max_abs_diff(&Matrix4::identity().scale_re(d0)) == 0.0 {
        let s = if d0 < 0.0 { -1.0 } else { 1.0 };
        return Ok((Matrix4::identity().scale_re(d0.abs().sqrt()), Matrix4::identity().scale_re(s)));
    }
    let a = CMat::from_fn(4, 4, |i, j| 0.5 * (v.0[i][j] + v.0[j][i].conj()));
    let (vals, u) = hermitian_eigen(a.as_ref())?;
    let tol = 1e-14 * scale;
    let mut v1 = Matrix4::zero();
    let mut w1 = Matrix4::zero();
    for (k, d) in vals.iter().enumerate() {
        // phase fix: largest-magnitude component real positive
        let col: Vec<Complex64> = (0..4).map(|i| u[(i, k)]).collect();
        let big = col.iter().fold(Complex64::from(0.0), |a, b| if b.norm() > a.norm() + 1e-14 { *b } else { a });
        let ph = if big.norm() > 0.0 { big.conj() / big.norm() } else { Complex64::from(1.0) };
        let col: Vec<Complex64> = col.iter().map(|c| c * ph).collect();
        let d = if d.abs() <= tol { 0.0 } else { *d };
        let root = d.abs().sqrt();
        let sgn = if d < 0.0 { -1.0 } else { 1.0 };
        for i in 0..4 {
            for j in 0..4 {
                let p = col[i] * col[j].conj();
                v1.0[i][j] += p * root;
                w1.0[i][j] += p * sgn;
            }
        }
    }
    Ok((v1, w1))
}

/// `V₁`, `W₁` sampled on a volume grid.
#[derive(Clone, Debug)]
pub struct FactorizedPotential {
    pub v1: Vec<Matrix4>,
    pub w1: Vec<Matrix4>,
    /// Every sample is a real multiple of the identity.
    pub scalar: bool,
}

impl FactorizedPotential {
    pub fn new(spec: &PotentialSpec, grid: &VolumeGrid) -> Result<Self> {
        spec.validate()?;
        let mut v1 = Vec::with_capacity(grid.len());
        let mut w1 = Vec::with_capacity(grid.len());
        for r in &grid.nodes {
            let (a, b) = factorize(&potential_matrix(r, spec))?;
            v1.push(a);
            w1.push(b);
        }
        let scalar = spec.is_radial();
        Ok(FactorizedPotential { v1, w1, scalar })
    }

    pub fn is_zero(&self) -> bool {
        self.v1.iter().all(|m| m.norm_fro() == 0.0)
    }

    /// `V(r_i) = V₁W₁V₁` at node `i`.
    pub fn v(&self, i: usize) -> Matrix4 {
        self.v1[i] * self.w1[i] * self.v1[i]
    }
}

/// `∬ ‖V(r)‖ ‖V(s)‖ / |r-s|² dr ds` on a volume grid (operator norms), with the
/// self-cell replaced by its ball integral `4πρ`.
pub fn rollnik_estimate(spec: &PotentialSpec, grid: &VolumeGrid) -> f64 {
    let nv: Vec<f64> = grid.nodes.iter().map(|r| potential_matrix(r, spec).op_norm()).collect();
    let n = grid.len();
    let mut total = 0.0;
    for i in 0..n {
        if nv[i] == 0.0 {
            continue;
        }
        let mut row = 0.0;
        for j in 0..n {
            if j == i || nv[j] == 0.0 {
                continue;
            }
            let d = crate::dirac_algebra::sub3(&grid.nodes[i], &grid.nodes[j]);
            row += grid.weights[j] * nv[j] / crate::dirac_algebra::dot3(&d, &d);
        }
        let rho = (3.0 * grid.weights[i] / (4.0 * PI)).cbrt();
        row += nv[i] * 4.0 * PI * rho;
        total += grid.weights[i] * nv[i] * row;
    }
    total
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RollnikReport {
    pub coarse: f64,
    pub refined: f64,
    pub divergent: bool,
}

/// Rollnik estimate on a grid and on the grid with doubled `n_r`; flags growth beyond 2×.
pub fn rollnik_check(spec: &PotentialSpec, grid: &VolumeGrid) -> Result<RollnikReport> {
    let coarse = rollnik_estimate(spec, grid);
    let fine = build_volume_grid(grid.r_max, 2 * grid.n_r, grid.angular)?;
    let refined = rollnik_estimate(spec, &fine);
    Ok(RollnikReport { coarse, refined, divergent: refined > 2.0 * coarse.max(f64::MIN_POSITIVE) })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayReport {
    /// `‖V₁(r)‖·|r|^{3/2}` stays bounded on `[10, 10³]`.
    pub v1_bounded: bool,
    /// `‖V(r)‖·|r|^{3.1}` stays bounded on `[10, 10³]`.
    pub v_bounded: bool,
    pub v1_max_ratio: f64,
    pub v_max_ratio: f64,
}

pub const DECAY_EXPONENT: f64 = 3.1;

/// Samples along several rays; "bounded" means the last decade never exceeds the first.
pub fn decay_check(spec: &PotentialSpec) -> DecayReport {
    let dirs: [Vec3; 4] = [[1.0, 0.0, 0.0], [0.0, 0.6, 0.8], [-0.48, 0.6, -0.64], [0.0, 0.0, -1.0]];
    let samples = 61;
    let mut v1s = Vec::with_capacity(samples);
    let mut vs = Vec::with_capacity(samples);
    for s in 0..samples {
        let r = 10f64.powf(1.0 + 2.0 * s as f64 / (samples - 1) as f64);
        let mut a: f64 = 0.0;
        let mut b: f64 = 0.0;
        for d in &dirs {
            let v = potential_matrix(&[d[0] * r, d[1] * r, d[2] * r], spec);
            let nv = v.op_norm();
            a = a.max(nv.sqrt() * r.powf(1.5));
            b = b.max(nv * r.powf(DECAY_EXPONENT));
        }
        v1s.push(a);
        vs.push(b);
    }
    let first = samples / 2;
    let bounded = |x: &[f64]| {
        let head = x[..=first].iter().cloned().fold(0.0, f64::max);
        let tail = x[first..].iter().cloned().fold(0.0, f64::max);
        tail <= head * (1.0 + 1e-12)
    };
    DecayReport {
        v1_bounded: bounded(&v1s),
        v_bounded: bounded(&vs),
        v1_max_ratio: v1s.iter().cloned().fold(0.0, f64::max),
        v_max_ratio: vs.iter().cloned().fold(0.0, f64::max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac_algebra::alpha;
    use crate::discretization::AngularRule;
    use proptest::prelude::*;

    fn c(x: f64) -> Complex64 {
        Complex64::from(x)
    }

    #[test]
    fn scalar_and_vector_examples() {
        let y = PotentialSpec::Yukawa { strength: 1.0, range: 1.0, charge: 1.0 };
        let r = [0.3, 0.4, 1.2];
        let d = norm3(&r);
        let v = potential_matrix(&r, &y);
        assert!(v.max_abs_diff(&Matrix4::identity().scale_re(-(-d).exp() / d)) < 1e-15);
        let a = 0.7;
        let u = PotentialSpec::UniformVector { a: [a, 0.0, 0.0], radius: 2.0, charge: 1.5 };
        let v = potential_matrix(&r, &u);
        assert!(v.max_abs_diff(&alpha(1).unwrap().scale_re(1.5 * a)) < 1e-15);
        let (vals, _) = hermitian_eigen(CMat::from_fn(4, 4, |i, j| v.0[i][j]).as_ref()).unwrap();
        for (k, want) in [-1.05, -1.05, 1.05, 1.05].iter().enumerate() {
            assert!((vals[k] - want).abs() < 1e-14);
        }
        assert_eq!(potential_matrix(&[3.0, 0.0, 0.0], &u), Matrix4::zero());
    }

    #[test]
    fn diagonal_factorization() {
        let v = Matrix4::diag([c(2.0), c(-3.0), c(0.0), c(1.0)]);
        let (v1, w1) = factorize(&v).unwrap();
        assert!(v1.max_abs_diff(&Matrix4::diag([c(2f64.sqrt()), c(3f64.sqrt()), c(0.0), c(1.0)])) < 1e-14);
        assert!(w1.max_abs_diff(&Matrix4::diag([c(1.0), c(-1.0), c(1.0), c(1.0)])) < 1e-14);
        assert!((v1.op_norm() - 3f64.sqrt()).abs() < 1e-12);
        assert!((v.op_norm() - 3.0).abs() < 1e-12);
        let mut bad = Matrix4::zero();
        bad.0[0][1] = c(1.0);
        assert!(factorize(&bad).is_err());
    }

    #[test]
    fn rollnik_examples() {
        let grid = build_volume_grid(10.0, 16, AngularRule::Lebedev(7)).unwrap();
        assert_eq!(rollnik_estimate(&PotentialSpec::Zero, &grid), 0.0);
        let y = PotentialSpec::Yukawa { strength: 0.3, range: 1.0, charge: 1.0 };
        let a = rollnik_estimate(&y, &grid);
        let b = rollnik_estimate(&y.scaled(2.0), &grid);
        assert!(a.is_finite() && a > 0.0);
        assert!((b / a - 4.0).abs() < 0.04);
        let box_v = PotentialSpec::CutoffCoulomb { strength: 1.0, cutoff: 2.0, charge: 1.0 };
        let rep = rollnik_check(&box_v, &grid).unwrap();
        assert!(rep.coarse.is_finite() && !rep.divergent);
    }

    #[test]
    fn decay_examples() {
        let g = decay_check(&PotentialSpec::Gaussian { strength: 1.0, range: 1.0, charge: 1.0 });
        assert!(g.v1_bounded && g.v_bounded);
        let y = decay_check(&PotentialSpec::Yukawa { strength: 1.0, range: 1.0, charge: 1.0 });
        assert!(y.v1_bounded && y.v_bounded);
        let c = decay_check(&PotentialSpec::Coulomb { strength: 1.0, charge: 1.0 });
        assert!(!c.v1_bounded && !c.v_bounded);
    }

    #[test]
    fn spec_round_trips_through_toml() {
        let y = PotentialSpec::Yukawa { strength: 0.25, range: 1.0, charge: 1.0 };
        let s = toml_like(&y);
        assert!(s.contains("yukawa"));
        let t = PotentialSpec::MatrixTable { radii: vec![0.0, 1.0], matrices: vec![[[[0.0; 2]; 4]; 4]; 2] };
        assert!(t.validate().is_ok());
        let bad = PotentialSpec::MatrixTable { radii: vec![1.0, 0.5], matrices: vec![[[[0.0; 2]; 4]; 4]; 2] };
        assert!(bad.validate().is_err());
    }

    fn toml_like(p: &PotentialSpec) -> String {
        format!("{:?}", p.family())
    }

    #[test]
    fn matrix_table_interpolates() {
        let mut m0 = [[[0.0; 2]; 4]; 4];
        let mut m1 = [[[0.0; 2]; 4]; 4];
        m0[0][1] = [1.0, 0.5];
        m0[1][0] = [1.0, -0.5];
        m1[2][2] = [-2.0, 0.0];
        let t = PotentialSpec::MatrixTable { radii: vec![0.0, 2.0], matrices: vec![m0, m1] };
        let v = potential_matrix(&[1.0, 0.0, 0.0], &t);
        assert!((v.0[0][1] - Complex64::new(0.5, 0.25)).norm() < 1e-15);
        assert!((v.0[2][2] + 1.0).norm() < 1e-15);
        assert!(v.is_hermitian(0.0));
        assert_eq!(potential_matrix(&[2.5, 0.0, 0.0], &t), Matrix4::zero());
    }

    fn hermitian() -> impl Strategy<Value = Matrix4> {
        prop::collection::vec(-2.0f64..2.0, 32).prop_map(|x| {
            let mut m = Matrix4::zero();
            let mut k = 0;
            for i in 0..4 {
                for j in i..4 {
                    let z = if i == j { Complex64::from(x[k]) } else { Complex64::new(x[k], x[k + 16]) };
                    m.0[i][j] = z;
                    m.0[j][i] = z.conj();
                    k += 1;
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(v in hermitian()) {
            let (v1, w1) = factorize(&v).unwrap();
            prop_assert!((v1 * w1 * v1).max_abs_diff(&v) < 1e-12 * v.norm_fro().max(1.0));
            prop_assert!((w1 * w1).max_abs_diff(&Matrix4::identity()) < 1e-12);
            prop_assert!(w1.is_hermitian(1e-13) && v1.is_hermitian(1e-13));
            prop_assert!((v1.op_norm().powi(2) - v.op_norm()).abs() < 1e-10 * v.op_norm().max(1.0));
            prop_assert!((w1.op_norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn potentials_are_hermitian(g in -3.0f64..3.0, x in -2.0f64..2.0, y in -2.0f64..2.0, z in 0.1f64..2.0, a in prop::array::uniform3(-1.0f64..1.0)) {
            let r = [x, y, z];
            for spec in [
                PotentialSpec::Yukawa { strength: g, range: 0.8, charge: 1.0 },
                PotentialSpec::Gaussian { strength: g, range: 1.3, charge: -1.0 },
                PotentialSpec::UniformVector { a, radius: 5.0, charge: g },
            ] {
                prop_assert!(potential_matrix(&r, &spec).is_hermitian(0.0));
            }
        }
    }
}

//! Quadrature on ℝ³ (radial Gauss–Legendre × sphere rule) and on S².

use std::f64::consts::PI;
use std::ops::Mul;

use crate::dirac_algebra::Vec3;
use crate::error::{Error, Result};
use crate::lebedev_data::RULES;

/// Gauss–Legendre nodes and weights on [-1, 1], ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Which rule discretizes the direction sphere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum AngularRule {
    /// Lebedev–Laikov rule of the given algebraic degree.
    Lebedev(usize),
    /// Gauss–Legendre in cos θ times uniform φ, exact through the given degree.
    Product(usize),
}

impl AngularRule {
    pub fn degree(&self) -> usize {
        match *self {
            AngularRule::Lebedev(d) | AngularRule::Product(d) => d,
        }
    }
}

pub fn lebedev_degrees() -> Vec<usize> {
    RULES.iter().map(|(d, _)| *d).collect()
}

#[derive(Clone, Debug)]
pub struct SphereGrid {
    pub dirs: Vec<Vec3>,
    pub weights: Vec<f64>,
    pub rule: AngularRule,
}

impl SphereGrid {
    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn order(&self) -> usize {
        self.rule.degree()
    }
}

/// Product rule exact for spherical harmonics through degree `order`.
pub fn build_sphere_grid(order: usize) -> Result<SphereGrid> {
    build_angular(AngularRule::Product(order))
}

pub fn build_angular(rule: AngularRule) -> Result<SphereGrid> {
    match rule {
        AngularRule::Product(order) => {
            if order == 0 || order > 400 {
                return Err(Error::Invalid(format!("unsupported sphere order {order}")));
            }
            let n_theta = (order + 2) / 2;
            let n_phi = order + 1;
            let (x, w) = gauss_legendre(n_theta);
            let mut dirs = Vec::with_capacity(n_theta * n_phi);
            let mut weights = Vec::with_capacity(n_theta * n_phi);
            for (xt, wt) in x.iter().zip(&w) {
                let st = (1.0 - xt * xt).sqrt();
                for j in 0..n_phi {
                    let ph = 2.0 * PI * j as f64 / n_phi as f64;
                    dirs.push([st * ph.cos(), st * ph.sin(), *xt]);
                    weights.push(wt * 2.0 * PI / n_phi as f64);
                }
            }
            Ok(SphereGrid { dirs, weights, rule })
        }
        AngularRule::Lebedev(deg) => {
            let table = RULES.iter().find(|(d, _)| *d == deg).map(|(_, t)| *t).ok_or_else(|| {
                Error::Invalid(format!("no Lebedev rule of degree {deg}; available {:?}", lebedev_degrees()))
            })?;
            Ok(SphereGrid {
                dirs: table.iter().map(|r| [r[0], r[1], r[2]]).collect(),
                weights: table.iter().map(|r| r[3]).collect(),
                rule,
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct VolumeGrid {
    pub nodes: Vec<Vec3>,
    pub weights: Vec<f64>,
    pub r_max: f64,
    pub n_r: usize,
    pub n_ang: usize,
    pub radii: Vec<f64>,
    pub angular: AngularRule,
}

impl VolumeGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Radius of node `i` (nodes are stored shell by shell).
    pub fn radius(&self, i: usize) -> f64 {
        self.radii[i / self.n_ang]
    }

    /// Fewer than about `4π` nodes per radial wavelength.
    pub fn oscillation_warning(&self, kappa: f64) -> Option<String> {
        let kr = kappa * self.r_max;
        (kr > self.n_r as f64 / 2.0)
            .then(|| format!("kappa*r_max = {kr:.3} exceeds n_r/2 = {}", self.n_r / 2))
    }

    /// Stable identifier of the grid parameters.
    pub fn fingerprint(&self) -> String {
        format!("vol:r{}:n{}:{:?}", self.r_max, self.n_r, self.angular)
    }
}

/// Affine Gauss–Legendre radial nodes on (0, r_max] times a sphere rule; weights include `r²`.
pub fn build_volume_grid(r_max: f64, n_r: usize, angular: AngularRule) -> Result<VolumeGrid> {
    if !(r_max > 0.0) || !r_max.is_finite() {
        return Err(Error::Invalid(format!("r_max must be positive, got {r_max}")));
    }
    if n_r < 8 {
        return Err(Error::Invalid(format!("n_r must be at least 8, got {n_r}")));
    }
    let sph = build_angular(angular)?;
    let (x, w) = gauss_legendre(n_r);
    let radii: Vec<f64> = x.iter().map(|t| 0.5 * (t + 1.0) * r_max).collect();
    let mut nodes = Vec::with_capacity(n_r * sph.len());
    let mut weights = Vec::with_capacity(n_r * sph.len());
    for (r, wr) in radii.iter().zip(&w) {
        let wr = wr * 0.5 * r_max * r * r;
        for (d, wa) in sph.dirs.iter().zip(&sph.weights) {
            nodes.push([r * d[0], r * d[1], r * d[2]]);
            weights.push(wr * wa);
        }
    }
    Ok(VolumeGrid { nodes, weights, r_max, n_r, n_ang: sph.len(), radii, angular })
}

pub fn integrate_volume<T, F>(f: F, grid: &VolumeGrid) -> T
where
    T: Mul<f64, Output = T> + std::iter::Sum,
    F: Fn(&Vec3) -> T,
{
    grid.nodes.iter().zip(&grid.weights).map(|(r, w)| f(r) * *w).sum()
}

pub fn integrate_sphere<T, F>(h: F, grid: &SphereGrid) -> T
where
    T: Mul<f64, Output = T> + std::iter::Sum,
    F: Fn(&Vec3) -> T,
{
    grid.dirs.iter().zip(&grid.weights).map(|(d, w)| h(d) * *w).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// Orthonormal spherical harmonic `Y_lm` from an associated-Legendre recurrence.
    fn ylm(l: usize, m: i64, d: &Vec3) -> Complex64 {
        let ma = m.unsigned_abs() as usize;
        let x = d[2];
        let s = (1.0 - x * x).max(0.0).sqrt();
        let mut pmm = 1.0;
        for i in 1..=ma {
            pmm *= -((2 * i - 1) as f64) * s;
        }
        let p = if l == ma {
            pmm
        } else {
            let mut p0 = pmm;
            let mut p1 = x * (2 * ma + 1) as f64 * pmm;
            for ll in (ma + 2)..=l {
                let p2 = ((2 * ll - 1) as f64 * x * p1 - (ll + ma - 1) as f64 * p0) / (ll - ma) as f64;
                p0 = p1;
                p1 = p2;
            }
            p1
        };
        let mut fact = 1.0;
        for i in (l - ma + 1)..=(l + ma) {
            fact *= i as f64;
        }
        let norm = ((2 * l + 1) as f64 / (4.0 * PI) / fact).sqrt();
        let phi = d[1].atan2(d[0]);
        let v = Complex64::from_polar(norm * p, ma as f64 * phi);
        if m < 0 {
            v.conj() * if ma % 2 == 1 { -1.0 } else { 1.0 }
        } else {
            v
        }
    }

    #[test]
    fn gauss_legendre_exactness() {
        for n in [1, 2, 5, 16, 48] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for deg in 0..2 * n {
                let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((q - exact).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn sphere_weights_sum_to_area() {
        for rule in [AngularRule::Product(14), AngularRule::Product(26), AngularRule::Lebedev(11), AngularRule::Lebedev(35)] {
            let g = build_angular(rule).unwrap();
            assert!((g.weights.iter().sum::<f64>() - 4.0 * PI).abs() < 1e-12);
            assert!(g.weights.iter().all(|w| *w > 0.0));
        }
        assert_eq!(build_sphere_grid(26).unwrap().len(), 378);
        assert!(build_angular(AngularRule::Lebedev(13)).is_err());
        assert!(build_sphere_grid(0).is_err());
    }

    #[test]
    fn harmonics_are_orthonormal() {
        for rule in [AngularRule::Product(12), AngularRule::Lebedev(15)] {
            let g = build_angular(rule).unwrap();
            let lmax = rule.degree() / 2;
            let y10: Complex64 = integrate_sphere(|d| ylm(1, 0, d), &g);
            assert!(y10.norm() < 1e-14);
            for l1 in 0..=lmax {
                for l2 in 0..=lmax {
                    for m in -(l1.min(l2) as i64)..=(l1.min(l2) as i64) {
                        let v: Complex64 = integrate_sphere(|d| ylm(l1, m, d).conj() * ylm(l2, m, d), &g);
                        let want = if l1 == l2 { 1.0 } else { 0.0 };
                        assert!((v - want).norm() < 1e-12, "{rule:?} l1={l1} l2={l2} m={m}: {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn exponential_volume_integral() {
        let f = |r: &Vec3| (-(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt()).exp();
        let g = build_volume_grid(30.0, 48, AngularRule::Product(26)).unwrap();
        let v: f64 = integrate_volume(f, &g);
        assert!((v / (8.0 * PI) - 1.0).abs() < 1e-8, "{v}");
        let coarse = build_volume_grid(30.0, 48, AngularRule::Lebedev(3)).unwrap();
        let vc: f64 = integrate_volume(f, &coarse);
        assert!((vc - v).abs() < 1e-12 * v);
        let e1 = (integrate_volume::<f64, _>(f, &build_volume_grid(30.0, 12, AngularRule::Lebedev(3)).unwrap()) - 8.0 * PI).abs();
        let e2 = (integrate_volume::<f64, _>(f, &build_volume_grid(30.0, 24, AngularRule::Lebedev(3)).unwrap()) - 8.0 * PI).abs();
        assert!(e2 < e1);
    }

    #[test]
    fn ball_volume_and_gaussian_moment() {
        let g = build_volume_grid(2.0, 16, AngularRule::Lebedev(7)).unwrap();
        let vol: f64 = integrate_volume(|_| 1.0, &g);
        assert!((vol - 4.0 / 3.0 * PI * 8.0).abs() < 1e-10);
        let g = build_volume_grid(9.0, 40, AngularRule::Lebedev(7)).unwrap();
        let m2: f64 = integrate_volume(|r| (r[2] * r[2]) * (-(r[0] * r[0] + r[1] * r[1] + r[2] * r[2])).exp(), &g);
        assert!((m2 - PI.powf(1.5) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn legendre_products_orthogonal_on_sphere() {
        let g = build_sphere_grid(20).unwrap();
        let w = [0.3f64, -0.5, 0.81];
        let n = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
        let w = [w[0] / n, w[1] / n, w[2] / n];
        let pl = |l: usize, x: f64| {
            let (mut p0, mut p1) = (1.0, x);
            if l == 0 {
                return 1.0;
            }
            for k in 2..=l {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            p1
        };
        for l1 in 0..=10 {
            for l2 in 0..=10 {
                let v: f64 = integrate_sphere(|d| pl(l1, d[0] * w[0] + d[1] * w[1] + d[2] * w[2]) * pl(l2, d[0] * w[0] + d[1] * w[1] + d[2] * w[2]), &g);
                let want = if l1 == l2 { 4.0 * PI / (2 * l1 + 1) as f64 } else { 0.0 };
                assert!((v - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn volume_grid_validation() {
        assert!(build_volume_grid(-1.0, 16, AngularRule::Lebedev(11)).is_err());
        assert!(build_volume_grid(1.0, 4, AngularRule::Lebedev(11)).is_err());
        let g = build_volume_grid(12.0, 16, AngularRule::Lebedev(11)).unwrap();
        assert!(g.nodes.iter().all(|r| r.iter().any(|x| *x != 0.0)));
        assert!(g.oscillation_warning(1.118).is_some());
        assert!(g.oscillation_warning(0.5).is_none());
        assert_eq!(g.len(), 800);
    }
}

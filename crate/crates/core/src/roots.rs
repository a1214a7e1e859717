//! Numerical roots of exact integer polynomials.
//!
//! The zero root is deflated exactly (its multiplicity is the lowest nonzero
//! exponent) and the remaining roots come from Aberth–Ehrlich simultaneous
//! iteration followed by per-root Newton polish. Every evaluation the
//! iteration sees runs in extended precision or in a structurally stable
//! form: the expanded coefficients of the families this crate studies cancel
//! catastrophically (plain f64 Horner at degree ~60 with coefficients near
//! 10^17 leaves pure noise at the root clusters), so
//!
//! * [`find_roots`] evaluates the exact coefficients with double-double
//!   Horner, which certifies everything up to condition numbers ~10^30;
//! * [`find_family_roots`] iterates directly on the exponential-sum form
//!   `Σ α_i λ_i^n`, whose term-by-term evaluation stays well conditioned at
//!   any family index, and uses the exact expanded coefficients only for the
//!   final residual certificate.

use num_complex::Complex64;
use thiserror::Error;

use crate::expsum::{ExpSumError, ExpSumFamily};
use crate::poly::dd::DdPoly;
use crate::poly::Polynomial;

/// Relative step-size convergence target.
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;

/// Acceptance bound on `|p(root)| / Σ|a_i||root|^i`.
pub const DEFAULT_RESIDUAL_BOUND: f64 = 1e-6;

/// A reported root is real when `|Im z| < REAL_IM_THRESHOLD_COEFF * (1 + |Re z|)`.
pub const REAL_IM_THRESHOLD_COEFF: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct RootFindConfig {
    pub tol: f64,
    pub max_iterations: usize,
    pub newton_steps: usize,
    pub residual_bound: f64,
    /// Seed for the deterministic angular perturbation of the start points.
    pub seed: u64,
}

impl Default for RootFindConfig {
    fn default() -> Self {
        RootFindConfig {
            tol: DEFAULT_ROOT_TOL,
            max_iterations: 400,
            newton_steps: 12,
            residual_bound: DEFAULT_RESIDUAL_BOUND,
            seed: 0,
        }
    }
}

/// All roots of a polynomial: the zero root by exact multiplicity, the
/// nonzero roots numerically with scaled residuals.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub zero_multiplicity: usize,
    pub nonzero_roots: Vec<Complex64>,
    /// `|p(z)| / Σ|a_i||z|^i` per nonzero root.
    pub residuals: Vec<f64>,
}

#[derive(Debug, Error)]
pub enum RootsError {
    #[error("cannot find roots of the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("{} root(s) failed to converge", failed.len())]
    NonConvergence {
        partial: RootSet,
        /// Indices into `partial.nonzero_roots`.
        failed: Vec<usize>,
    },
    #[error("family evaluation failed: {0}")]
    Family(#[from] ExpSumError),
}

/// Finds all roots with the default configuration and the given step
/// tolerance.
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<RootSet, RootsError> {
    find_roots_with(
        p,
        &RootFindConfig {
            tol,
            ..RootFindConfig::default()
        },
    )
}

pub fn find_roots_with(p: &Polynomial, config: &RootFindConfig) -> Result<RootSet, RootsError> {
    let prep = Prepared::new(p)?;
    let Some(deflated) = prep.deflated() else {
        return Ok(prep.into_rootset(Vec::new(), Vec::new()));
    };
    let exact = DdPoly::from_coeffs(deflated.coefficients());
    let exact_deriv = DdPoly::from_coeffs(deflated.derivative().coefficients());
    let newton = |z: Complex64| -> Option<Complex64> {
        let pv = exact.eval(z).to_c64();
        let dv = exact_deriv.eval(z).to_c64();
        if !pv.is_finite() || !dv.is_finite() || dv.norm() == 0.0 {
            return None;
        }
        Some(pv / dv)
    };
    prep.solve(&newton, config)
}

/// Roots of the family member `f_n`, iterating on the exponential-sum form.
pub fn find_family_roots(
    fam: &ExpSumFamily,
    n: usize,
    config: &RootFindConfig,
) -> Result<RootSet, RootsError> {
    let expanded = fam.instantiate(n)?;
    let prep = Prepared::new(&expanded)?;
    let Some(_) = prep.deflated() else {
        return Ok(prep.into_rootset(Vec::new(), Vec::new()));
    };
    let gamma = prep.gamma as f64;
    let newton = |z: Complex64| -> Option<Complex64> {
        // Newton ratio of the deflated q = f / z^gamma: q'/q = f'/f - gamma/z
        let (f, df) = fam.evaluate_with_derivative(n, z).ok()?;
        if !f.is_finite() || !df.is_finite() {
            return None;
        }
        if f.norm() == 0.0 {
            return Some(Complex64::new(0.0, 0.0));
        }
        let log_deriv = df / f - gamma * z.inv();
        if !log_deriv.is_finite() || log_deriv.norm() == 0.0 {
            return None;
        }
        let step = log_deriv.inv();
        step.is_finite().then_some(step)
    };
    prep.solve(&newton, config)
}

/// Deflation, start-circle, and residual bookkeeping shared by both sources.
struct Prepared {
    gamma: usize,
    deflated: Polynomial,
}

impl Prepared {
    fn new(p: &Polynomial) -> Result<Prepared, RootsError> {
        if p.is_zero() {
            return Err(RootsError::ZeroPolynomial);
        }
        if p.degree().unwrap() < 1 {
            return Err(RootsError::DegreeTooSmall);
        }
        let gamma = p.lowest_degree().unwrap();
        let deflated = p.div_xpow(gamma).expect("lowest coefficients are zero");
        Ok(Prepared { gamma, deflated })
    }

    fn deflated(&self) -> Option<&Polynomial> {
        (self.deflated.degree() != Some(0)).then_some(&self.deflated)
    }

    fn into_rootset(self, nonzero_roots: Vec<Complex64>, residuals: Vec<f64>) -> RootSet {
        RootSet {
            zero_multiplicity: self.gamma,
            nonzero_roots,
            residuals,
        }
    }

    fn solve(
        self,
        newton: &dyn Fn(Complex64) -> Option<Complex64>,
        config: &RootFindConfig,
    ) -> Result<RootSet, RootsError> {
        let d = self.deflated.degree().unwrap();
        let monic: Vec<f64> = {
            let raw = self.deflated.coefficients_f64();
            let lead = raw[d];
            raw.iter().map(|c| c / lead).collect()
        };
        let mut z = start_points(&monic, config.seed);
        let mut last_step = vec![f64::INFINITY; d];

        // Aberth-Ehrlich sweeps, Jacobi style: every estimate is updated
        // from the previous iterate, so a sweep could fan out in parallel
        // and is deterministic either way.
        for _ in 0..config.max_iterations {
            let prev = z.clone();
            let mut worst: f64 = 0.0;
            for k in 0..d {
                let zk = prev[k];
                let n_k = match newton(zk) {
                    Some(n) => n,
                    // overflowed far field: p behaves like z^d
                    None => zk / d as f64,
                };
                let mut repulsion = Complex64::new(0.0, 0.0);
                for (j, &zj) in prev.iter().enumerate() {
                    if j != k && zk != zj {
                        repulsion += (zk - zj).inv();
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - n_k * repulsion;
                let mut step = if denom.norm() > 1e-290 {
                    n_k / denom
                } else {
                    n_k
                };
                if !step.is_finite() {
                    step = zk / d as f64;
                }
                z[k] = zk - step;
                last_step[k] = step.norm();
                worst = worst.max(step.norm() / z[k].norm().max(1.0));
            }
            if worst < config.tol {
                break;
            }
        }

        // per-root Newton polish
        for k in 0..d {
            for _ in 0..config.newton_steps {
                let Some(step) = newton(z[k]) else { break };
                z[k] -= step;
                last_step[k] = step.norm();
                if step.norm() < 0.5 * config.tol * z[k].norm().max(1.0) {
                    break;
                }
            }
        }

        // residual certificate against the exact coefficients
        let exact = DdPoly::from_coeffs(self.deflated.coefficients());
        let abs_coeffs: Vec<f64> = self
            .deflated
            .coefficients_f64()
            .iter()
            .map(|c| c.abs())
            .collect();
        let residuals: Vec<f64> = z
            .iter()
            .map(|&zk| exact.eval(zk).to_c64().norm() / residual_scale(&abs_coeffs, zk.norm()))
            .collect();

        let tol = config.tol;
        let residual_bound = config.residual_bound;
        let failed: Vec<usize> = (0..d)
            .filter(|&k| {
                // NaN counts as failed on both criteria
                let step_converged = last_step[k] < tol * z[k].norm().max(1.0);
                let residual_certified = residuals[k] <= residual_bound;
                !step_converged || !residual_certified
            })
            .collect();

        let set = self.into_rootset(z, residuals);
        if failed.is_empty() {
            Ok(set)
        } else {
            Err(RootsError::NonConvergence {
                partial: set,
                failed,
            })
        }
    }
}

/// Real roots of `p`: the nonzero roots whose imaginary part is below the
/// documented threshold, plus the zero root by multiplicity.
#[derive(Debug, Clone)]
pub struct RealRootReport {
    pub zero_multiplicity: usize,
    /// Ascending real values among the nonzero roots.
    pub values: Vec<f64>,
    /// The `c` in the decision rule `|Im z| < c * (1 + |Re z|)`.
    pub im_threshold_coeff: f64,
}

pub fn real_roots(p: &Polynomial, tol: f64) -> Result<RealRootReport, RootsError> {
    let set = find_roots(p, tol)?;
    Ok(real_roots_of_set(&set))
}

pub fn real_roots_of_set(set: &RootSet) -> RealRootReport {
    let mut values: Vec<f64> = set
        .nonzero_roots
        .iter()
        .filter(|z| z.im.abs() < REAL_IM_THRESHOLD_COEFF * (1.0 + z.re.abs()))
        .map(|z| z.re)
        .collect();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    RealRootReport {
        zero_multiplicity: set.zero_multiplicity,
        values,
        im_threshold_coeff: REAL_IM_THRESHOLD_COEFF,
    }
}

/// `Σ|a_i| r^i`, the natural magnitude scale of a Horner evaluation.
fn residual_scale(abs_coeffs: &[f64], r: f64) -> f64 {
    let mut acc = 0.0;
    for c in abs_coeffs.iter().rev() {
        acc = acc * r + c;
    }
    acc.max(f64::MIN_POSITIVE)
}

/// Roots of unity scaled by a proven root bound, with a small deterministic
/// angular perturbation to break symmetry.
///
/// The radius is the smaller of the Cauchy bound `1 + max|a_i|` and the
/// Fujiwara bound `2 max_i |a_{d-i}|^(1/i)` (coefficients monic). Both
/// enclose every root; the Cauchy bound alone reaches ~10^17 for the family
/// polynomials this crate produces, which would overflow evaluation and
/// stall the far-field sweeps.
fn start_points(monic: &[f64], seed: u64) -> Vec<Complex64> {
    use rand::{Rng, SeedableRng};
    let d = monic.len() - 1;
    let cauchy = 1.0 + monic[..d].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let fujiwara = 2.0
        * (1..=d)
            .map(|i| monic[d - i].abs().powf(1.0 / i as f64))
            .fold(0.0f64, f64::max);
    let radius = cauchy.min(fujiwara).max(1e-3);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..d)
        .map(|k| {
            let jitter: f64 = rng.gen_range(-0.05..0.05) / d as f64;
            let theta = std::f64::consts::TAU * (k as f64 + 0.37) / d as f64 + jitter;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsum;
    use crate::families;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn linear_with_zero_root() {
        let set = find_roots(&p(&[0, 2, 1]), 1e-10).unwrap();
        assert_eq!(set.zero_multiplicity, 1);
        assert_eq!(set.nonzero_roots.len(), 1);
        assert!((set.nonzero_roots[0] - Complex64::new(-2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn c4_roots_are_minus_two_plus_minus_i_sqrt2() {
        let set = find_roots(&p(&[0, 0, 6, 4, 1]), 1e-10).unwrap();
        assert_eq!(set.zero_multiplicity, 2);
        let mut roots = set.nonzero_roots.clone();
        roots.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        let s = 2f64.sqrt();
        assert!((roots[0] - Complex64::new(-2.0, -s)).norm() < 1e-10);
        assert!((roots[1] - Complex64::new(-2.0, s)).norm() < 1e-10);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            find_roots(&Polynomial::zero(), 1e-10),
            Err(RootsError::ZeroPolynomial)
        ));
        assert!(matches!(
            find_roots(&Polynomial::one(), 1e-10),
            Err(RootsError::DegreeTooSmall)
        ));
        // pure power of x: no nonzero roots
        let set = find_roots(&p(&[0, 0, 0, 5]), 1e-10).unwrap();
        assert_eq!(set.zero_multiplicity, 3);
        assert!(set.nonzero_roots.is_empty());
    }

    #[test]
    fn residuals_and_counts_on_family_polynomials() {
        for (label, poly) in [
            ("book:12", families::dompoly_book(12)),
            ("flower4:8", families::dompoly_flower4(8)),
            ("friendship:9", families::dompoly_friendship(9)),
        ] {
            let set = find_roots(&poly, 1e-10).unwrap();
            assert_eq!(set.zero_multiplicity, poly.lowest_degree().unwrap());
            assert_eq!(
                set.nonzero_roots.len(),
                poly.degree().unwrap() - set.zero_multiplicity,
                "{label}"
            );
            assert!(
                set.residuals.iter().all(|&r| r <= DEFAULT_RESIDUAL_BOUND),
                "{label}: residuals {:?}",
                set.residuals
            );
        }
    }

    #[test]
    fn family_path_handles_large_members() {
        for (fam, n) in [
            (expsum::family_book(), 30),
            (expsum::family_gbook5(), 30),
            (expsum::family_flower4(), 25),
            (expsum::family_friendship(), 30),
        ] {
            let set = find_family_roots(&fam, n, &RootFindConfig::default())
                .unwrap_or_else(|e| panic!("{} n={n}: {e}", fam.label()));
            let expanded = fam.instantiate(n).unwrap();
            assert_eq!(
                set.nonzero_roots.len(),
                expanded.degree().unwrap() - set.zero_multiplicity
            );
            assert!(set.residuals.iter().all(|&r| r <= DEFAULT_RESIDUAL_BOUND));
        }
    }

    #[test]
    fn family_path_agrees_with_coefficient_path() {
        let fam = expsum::family_book();
        let expanded = fam.instantiate(10).unwrap();
        let a = find_family_roots(&fam, 10, &RootFindConfig::default()).unwrap();
        let b = find_roots(&expanded, 1e-10).unwrap();
        assert_eq!(a.zero_multiplicity, b.zero_multiplicity);
        for &z in &a.nonzero_roots {
            let best = b
                .nonzero_roots
                .iter()
                .map(|w| (w - z).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-8, "unmatched root {z}");
        }
    }

    #[test]
    fn product_and_sum_invariants() {
        use num_traits::ToPrimitive;
        for poly in [
            families::dompoly_book(15), // degree 32, nonzero part degree 30
            families::dompoly_friendship(12),
            families::dompoly_gbook5(14),
        ] {
            let set = find_roots(&poly, 1e-10).unwrap();
            let gamma = set.zero_multiplicity;
            let d = poly.degree().unwrap() - gamma;
            let lead = poly.coefficient(poly.degree().unwrap()).to_f64().unwrap();
            let low = poly.coefficient(gamma).to_f64().unwrap();
            let sub = poly
                .coefficient(poly.degree().unwrap() - 1)
                .to_f64()
                .unwrap();

            let prod: Complex64 = set.nonzero_roots.iter().product();
            let expected_prod = low / lead * if d.is_multiple_of(2) { 1.0 } else { -1.0 };
            assert!(
                (prod.re - expected_prod).abs() <= 1e-6 * expected_prod.abs()
                    && prod.im.abs() <= 1e-6 * expected_prod.abs(),
                "product {prod} vs {expected_prod}"
            );

            let sum: Complex64 = set.nonzero_roots.iter().sum();
            let expected_sum = -sub / lead;
            assert!(
                (sum.re - expected_sum).abs() <= 1e-6 * expected_sum.abs().max(1.0)
                    && sum.im.abs() <= 1e-6 * expected_sum.abs().max(1.0),
                "sum {sum} vs {expected_sum}"
            );
        }
    }

    #[test]
    fn conjugate_closure_within_pairing_tolerance() {
        let poly = families::dompoly_book(20);
        let set = find_roots(&poly, 1e-10).unwrap();
        for &z in &set.nonzero_roots {
            let best = set
                .nonzero_roots
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(best < 1e-9, "no conjugate partner for {z}");
        }
    }

    #[test]
    fn different_seed_same_multiset() {
        let poly = families::dompoly_gbook5(10);
        let a = find_roots_with(&poly, &RootFindConfig::default()).unwrap();
        let b = find_roots_with(
            &poly,
            &RootFindConfig {
                seed: 12345,
                ..RootFindConfig::default()
            },
        )
        .unwrap();
        let mut used = vec![false; b.nonzero_roots.len()];
        for &z in &a.nonzero_roots {
            let (j, dist) = b
                .nonzero_roots
                .iter()
                .enumerate()
                .filter(|(j, _)| !used[*j])
                .map(|(j, w)| (j, (w - z).norm()))
                .min_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
                .unwrap();
            assert!(dist < 10.0 * DEFAULT_ROOT_TOL, "unmatched root {z}");
            used[j] = true;
        }
    }

    #[test]
    fn real_root_extraction() {
        let report = real_roots(&p(&[0, 2, 1]), 1e-10).unwrap();
        assert_eq!(report.zero_multiplicity, 1);
        assert_eq!(report.values.len(), 1);
        assert!((report.values[0] + 2.0).abs() < 1e-12);
        // D(C_4) deflated has no real roots
        let report = real_roots(&p(&[0, 0, 6, 4, 1]), 1e-10).unwrap();
        assert_eq!(report.zero_multiplicity, 2);
        assert!(report.values.is_empty());
    }

    #[test]
    fn multiple_nonzero_root_is_flagged_not_faked() {
        // (x + 2)^4 x: the clustered quadruple root cannot be certified to
        // 1e-10 by this iteration, and must surface as NonConvergence with
        // the partial estimates still carrying small residuals.
        let quad = p(&[2, 1]).pow(4).mul_xpow(1);
        match find_roots(&quad, 1e-10) {
            Err(RootsError::NonConvergence { partial, failed }) => {
                assert!(!failed.is_empty());
                assert_eq!(partial.nonzero_roots.len(), 4);
                for &z in &partial.nonzero_roots {
                    assert!((z - Complex64::new(-2.0, 0.0)).norm() < 1e-3);
                }
            }
            Ok(set) => {
                // acceptable alternative: the cluster did converge
                for &z in &set.nonzero_roots {
                    assert!((z - Complex64::new(-2.0, 0.0)).norm() < 1e-6);
                }
            }
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}

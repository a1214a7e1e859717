//! Limits of roots of `f_n = Σ α_i λ_i^n` families.
//!
//! A point is a limit of roots exactly when (i) two or more of the `λ_i(z)`
//! tie for the strictly largest modulus, or (ii) a single `λ_j(z)` dominates
//! and `α_j(z) = 0`. Condition (i) is measure-zero, so point queries take a
//! relative tie tolerance that is always reported next to the verdict; the
//! α zero test is confirmed exactly in rational arithmetic whenever it fires
//! (every f64 point is a dyadic rational, so the exact test is always
//! available).
//!
//! The module also carries the analytic limit set of the book-graph family:
//! the arc of `|x+2| = 1` with `Re x >= -3/2 - √2/2`, the hyperbola
//! `(Re x + 1)^2 - (Im x)^2 = 1/2` outside `[(-3-√2)/2, (-2-√2)/2]`, the
//! curve `|x+1|^2 = |x|` with `Re x <= -3/2 - √2/2`, and the two isolated
//! points `0` and `-1/2` — with point-to-set distance queries used to measure
//! how fast computed root clouds approach the set.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::expsum::ExpSumFamily;
use crate::poly::PolyError;

/// Default relative tie tolerance for point queries.
pub const DEFAULT_TIE_TOL: f64 = 1e-6;

/// `|α(z)|` below `ALPHA_ZERO_TOL * (1 + coefficient scale)` counts as zero.
pub const ALPHA_ZERO_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BkwError {
    #[error("an alpha has a pole at ({re}, {im})")]
    AlphaPole { re: f64, im: f64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitVerdict {
    NotLimit,
    LimitByModulusTie,
    LimitByAlphaZero,
}

/// Verdict for one point, with the dominant term indices and the relative
/// modulus gap that drove the decision.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitClassification {
    pub verdict: LimitVerdict,
    /// Indices into the family's term list.
    pub dominant_indices: Vec<usize>,
    /// Relative gap between the dominant modulus tier and the next one
    /// (0 when every term is dominant).
    pub margin: f64,
    /// True when the α zero was confirmed in exact rational arithmetic.
    pub alpha_zero_exact: bool,
}

/// Exact rational real/imaginary parts of an f64 point.
pub fn exact_parts(z: Complex64) -> (BigRational, BigRational) {
    (
        BigRational::from_float(z.re).unwrap_or_else(BigRational::zero),
        BigRational::from_float(z.im).unwrap_or_else(BigRational::zero),
    )
}

/// Applies the two limit-of-roots conditions at `z`. Moduli within
/// `tie_tol * max` of the maximum count as tied.
pub fn classify_point(
    fam: &ExpSumFamily,
    z: Complex64,
    tie_tol: f64,
) -> Result<LimitClassification, BkwError> {
    let (re, im) = exact_parts(z);
    for t in fam.terms() {
        if t.alpha.denominator().degree() != Some(0) && t.alpha.has_pole_at_exact(&re, &im) {
            return Err(BkwError::AlphaPole { re: z.re, im: z.im });
        }
    }

    let moduli: Vec<f64> = fam
        .terms()
        .iter()
        .map(|t| t.lambda.evaluate_complex(z).map(|v| v.norm()))
        .collect::<Result<_, _>>()?;
    let m_max = moduli.iter().fold(0.0f64, |a, &b| a.max(b));
    if m_max == 0.0 {
        // every lambda vanishes: f_n(z) = 0 for all n >= 1
        return Ok(LimitClassification {
            verdict: LimitVerdict::LimitByModulusTie,
            dominant_indices: (0..moduli.len()).collect(),
            margin: 0.0,
            alpha_zero_exact: false,
        });
    }

    let dominant: Vec<usize> = (0..moduli.len())
        .filter(|&i| m_max - moduli[i] <= tie_tol * m_max)
        .collect();
    let next_tier = moduli
        .iter()
        .enumerate()
        .filter(|(i, _)| !dominant.contains(i))
        .map(|(_, &m)| m)
        .fold(0.0f64, f64::max);
    let margin = if dominant.len() == moduli.len() {
        0.0
    } else {
        (m_max - next_tier) / m_max
    };

    if dominant.len() >= 2 {
        return Ok(LimitClassification {
            verdict: LimitVerdict::LimitByModulusTie,
            dominant_indices: dominant,
            margin,
            alpha_zero_exact: false,
        });
    }

    let j = dominant[0];
    let alpha = &fam.terms()[j].alpha;
    let exact_zero = alpha
        .is_zero_at_exact(&re, &im)
        .expect("pole pre-check passed");
    let numeric_zero = {
        let value = alpha.evaluate_complex(z)?.norm();
        let num = alpha.numerator();
        let zmax = z.norm().max(1.0);
        let scale: f64 = num.coefficients_f64().iter().map(|c| c.abs()).sum::<f64>()
            * zmax.powi(num.degree().unwrap_or(0) as i32)
            / alpha.denominator().evaluate_complex(z)?.norm();
        value <= ALPHA_ZERO_TOL * (1.0 + scale)
    };
    if exact_zero || numeric_zero {
        Ok(LimitClassification {
            verdict: LimitVerdict::LimitByAlphaZero,
            dominant_indices: vec![j],
            margin,
            alpha_zero_exact: exact_zero,
        })
    } else {
        Ok(LimitClassification {
            verdict: LimitVerdict::NotLimit,
            dominant_indices: vec![j],
            margin,
            alpha_zero_exact: false,
        })
    }
}

/// Rectangular grid specification, endpoints inclusive.
#[derive(Debug, Clone, Copy)]
pub struct GridRegion {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    /// Node counts per axis, at least 2.
    pub nx: usize,
    pub ny: usize,
}

impl GridRegion {
    pub fn nodes(&self) -> Vec<Complex64> {
        assert!(
            self.nx >= 2 && self.ny >= 2,
            "resolution must be >= 2 per axis"
        );
        let dx = (self.x1 - self.x0) / (self.nx - 1) as f64;
        let dy = (self.y1 - self.y0) / (self.ny - 1) as f64;
        let mut out = Vec::with_capacity(self.nx * self.ny);
        for j in 0..self.ny {
            for i in 0..self.nx {
                out.push(Complex64::new(
                    self.x0 + i as f64 * dx,
                    self.y0 + j as f64 * dy,
                ));
            }
        }
        out
    }

    /// Largest node spacing, the natural scale for grid tie tolerances.
    pub fn pitch(&self) -> f64 {
        let dx = (self.x1 - self.x0).abs() / (self.nx - 1) as f64;
        let dy = (self.y1 - self.y0).abs() / (self.ny - 1) as f64;
        dx.max(dy)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridOutcome {
    Classified(LimitClassification),
    /// Node skipped: an α denominator vanishes there.
    Pole,
}

/// Classifies every grid node, row-major; pole nodes are reported, not fatal.
pub fn classify_grid(
    fam: &ExpSumFamily,
    region: &GridRegion,
    tie_tol: f64,
) -> Vec<(Complex64, GridOutcome)> {
    region
        .nodes()
        .into_par_iter()
        .map(|z| {
            let outcome = match classify_point(fam, z, tie_tol) {
                Ok(c) => GridOutcome::Classified(c),
                Err(BkwError::AlphaPole { .. }) => GridOutcome::Pole,
                Err(BkwError::Poly(_)) => GridOutcome::Pole,
            };
            (z, outcome)
        })
        .collect()
}

/// `-3/2 - √2/2`, the real-part cut shared by all three book limit curves.
pub fn book_re_cut() -> f64 {
    -1.5 - std::f64::consts::SQRT_2 / 2.0
}

/// `√(1 + 2√2) / 2`, the |Im| of the two triple intersection points.
pub fn book_triple_im() -> f64 {
    (1.0 + 2.0 * std::f64::consts::SQRT_2).sqrt() / 2.0
}

/// Names for the pieces of the book limit set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveId {
    Circle,
    Hyperbola,
    Cardioid,
    Point,
}

impl CurveId {
    pub fn name(&self) -> &'static str {
        match self {
            CurveId::Circle => "circle",
            CurveId::Hyperbola => "hyperbola",
            CurveId::Cardioid => "cardioid",
            CurveId::Point => "point",
        }
    }
}

/// The limit set of the book-graph domination roots, as a distance oracle.
#[derive(Debug, Clone, Copy, Default)]
pub struct BookLimitSet;

impl BookLimitSet {
    /// Euclidean distance from `z` to the set (curves restricted to their
    /// windows, plus the two isolated points).
    pub fn distance(&self, z: Complex64) -> f64 {
        self.curve_distance(z)
            .min(z.norm())
            .min((z + Complex64::new(0.5, 0.0)).norm())
    }

    /// Distance to the three curves only (no isolated points).
    pub fn curve_distance(&self, z: Complex64) -> f64 {
        circle_arc_distance(z)
            .min(hyperbola_distance(z))
            .min(cardioid_distance(z))
    }

    pub fn contains(&self, z: Complex64, band: f64) -> bool {
        self.distance(z) <= band
    }

    /// Sample points along each piece for plotting, tagged by curve.
    pub fn curve_samples(&self, per_curve: usize) -> Vec<(CurveId, Complex64)> {
        assert!(per_curve >= 2);
        let mut out = Vec::new();
        let cut = book_re_cut();
        // circle arc: |x+2| = 1 with Re >= cut
        let theta_max = (cut + 2.0).acos();
        for k in 0..per_curve {
            let theta = -theta_max + 2.0 * theta_max * k as f64 / (per_curve - 1) as f64;
            out.push((
                CurveId::Circle,
                Complex64::new(-2.0 + theta.cos(), theta.sin()),
            ));
        }
        // hyperbola right branch, then the two allowed left tails
        let t_max = 2.5f64;
        for k in 0..per_curve {
            let t = -t_max + 2.0 * t_max * k as f64 / (per_curve - 1) as f64;
            out.push((
                CurveId::Hyperbola,
                Complex64::new(-1.0 + (0.5 + t * t).sqrt(), t),
            ));
        }
        let s = book_triple_im();
        for sign in [-1.0, 1.0] {
            for k in 0..per_curve / 2 {
                let t = sign * (s + (t_max - s) * k as f64 / (per_curve / 2 - 1).max(1) as f64);
                out.push((
                    CurveId::Hyperbola,
                    Complex64::new(-1.0 - (0.5 + t * t).sqrt(), t),
                ));
            }
        }
        // cardioid-like cap: |x+1|^2 = |x| with Re <= cut
        let (r_lo, r_hi) = cardioid_window();
        for sign in [-1.0, 1.0] {
            for k in 0..per_curve {
                let r = r_lo + (r_hi - r_lo) * k as f64 / (per_curve - 1) as f64;
                let (a, b) = cardioid_point(r);
                out.push((CurveId::Cardioid, Complex64::new(a, sign * b)));
            }
        }
        out.push((CurveId::Point, Complex64::new(0.0, 0.0)));
        out.push((CurveId::Point, Complex64::new(-0.5, 0.0)));
        out
    }
}

/// Distance to the book limit set (curves plus isolated points).
pub fn distance_to_book_limit(z: Complex64) -> f64 {
    BookLimitSet.distance(z)
}

/// True iff `z` is within `band` of the book limit set.
pub fn book_limit_membership(z: Complex64, band: f64) -> bool {
    BookLimitSet.contains(z, band)
}

fn circle_arc_distance(z: Complex64) -> f64 {
    let w = z - Complex64::new(-2.0, 0.0);
    let r = w.norm();
    if r == 0.0 {
        return 1.0; // every arc point is at radius 1
    }
    let proj_re = -2.0 + w.re / r;
    if proj_re >= book_re_cut() {
        (r - 1.0).abs()
    } else {
        // projection fell on the excluded arc: clamp to the arc endpoints
        let e = Complex64::new(book_re_cut(), book_triple_im().copysign(z.im));
        (z - e).norm()
    }
}

/// 1D minimization: coarse scan then golden-section refinement around the
/// best bracket. Deterministic; accuracy of the minimum value is second
/// order in the bracket width.
fn scan_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, samples: usize) -> f64 {
    debug_assert!(hi >= lo);
    if hi == lo {
        return f(lo);
    }
    let step = (hi - lo) / samples as f64;
    let mut best_i = 0;
    let mut best = f64::INFINITY;
    for i in 0..=samples {
        let v = f(lo + i as f64 * step);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let a = lo + step * best_i.saturating_sub(1) as f64;
    let b = (lo + step * (best_i + 1) as f64).min(hi);
    golden_min(f, a, b).min(best)
}

fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..70 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.min(f2)
}

/// Distance to the windowed hyperbola `(Re+1)^2 - Im^2 = 1/2`.
fn hyperbola_distance(z: Complex64) -> f64 {
    let u = z.re;
    let v = z.im.abs(); // the curve is symmetric about the real axis
    let t_hi = v + (u + 1.0).abs() + 3.0;
    // right branch: unrestricted
    let right = |t: f64| {
        let a = -1.0 + (0.5 + t * t).sqrt();
        ((u - a).powi(2) + (v - t).powi(2)).sqrt()
    };
    let d_right = scan_min(right, 0.0, t_hi, 400);
    // left branch: |Im| >= triple-point height
    let s = book_triple_im();
    let left = |t: f64| {
        let a = -1.0 - (0.5 + t * t).sqrt();
        ((u - a).powi(2) + (v - t).powi(2)).sqrt()
    };
    let d_left = scan_min(left, s, t_hi.max(s + 1.0), 400);
    d_right.min(d_left)
}

/// Radius window of the cardioid-like cap `|x+1|^2 = |x|`, `Re <= cut`:
/// `r ∈ [1 + √2, (3 + √5)/2]` (in polar radius about the origin).
fn cardioid_window() -> (f64, f64) {
    (1.0 + std::f64::consts::SQRT_2, (3.0 + 5.0f64.sqrt()) / 2.0)
}

/// Point on `|x+1|^2 = |x|` at origin-radius `r`, upper half plane.
/// From `r^2 + 2 r cosθ + 1 = r`: the real part is `(r - r^2 - 1)/2`.
fn cardioid_point(r: f64) -> (f64, f64) {
    let a = (r - r * r - 1.0) / 2.0;
    let b = (r * r - a * a).max(0.0).sqrt();
    (a, b)
}

fn cardioid_distance(z: Complex64) -> f64 {
    let u = z.re;
    let v = z.im.abs();
    let (r_lo, r_hi) = cardioid_window();
    let f = |r: f64| {
        let (a, b) = cardioid_point(r);
        ((u - a).powi(2) + (v - b).powi(2)).sqrt()
    };
    scan_min(f, r_lo, r_hi, 400)
}

/// Least-squares fit of an axis-aligned hyperbola `(Re - h)^2 - Im^2 = c`
/// to a point cloud: regress `u^2 - v^2` on `u`. Returns `None` for fewer
/// than 3 points or a degenerate spread.
#[derive(Debug, Clone, Copy)]
pub struct HyperbolaFit {
    pub center: f64,
    pub constant: f64,
    pub rms: f64,
}

pub fn fit_axis_hyperbola(points: &[Complex64]) -> Option<HyperbolaFit> {
    let n = points.len();
    if n < 3 {
        return None;
    }
    let nf = n as f64;
    let mean_u = points.iter().map(|z| z.re).sum::<f64>() / nf;
    let mean_y = points
        .iter()
        .map(|z| z.re * z.re - z.im * z.im)
        .sum::<f64>()
        / nf;
    let var_u: f64 = points.iter().map(|z| (z.re - mean_u).powi(2)).sum();
    if var_u < 1e-12 {
        return None;
    }
    let cov: f64 = points
        .iter()
        .map(|z| (z.re - mean_u) * (z.re * z.re - z.im * z.im - mean_y))
        .sum();
    let slope = cov / var_u;
    let intercept = mean_y - slope * mean_u;
    let center = slope / 2.0;
    let constant = intercept + center * center;
    let rms = (points
        .iter()
        .map(|z| ((z.re - center).powi(2) - z.im * z.im - constant).powi(2))
        .sum::<f64>()
        / nf)
        .sqrt();
    Some(HyperbolaFit {
        center,
        constant,
        rms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expsum::{family_book, family_flower4, family_gbook5};
    use crate::poly::Polynomial;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn book_isolated_points_classify_exactly() {
        let fam = family_book();
        let at_zero = classify_point(&fam, c(0.0, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(at_zero.verdict, LimitVerdict::LimitByAlphaZero);
        assert!(at_zero.alpha_zero_exact);
        // the dominant term is the (x+1)^2 one with alpha x^2
        let j = at_zero.dominant_indices[0];
        assert_eq!(
            fam.terms()[j].lambda,
            Polynomial::from_i64_coeffs(&[1, 2, 1])
        );

        let at_half = classify_point(&fam, c(-0.5, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(at_half.verdict, LimitVerdict::LimitByAlphaZero);
        assert!(at_half.alpha_zero_exact);
        let j = at_half.dominant_indices[0];
        assert_eq!(
            fam.terms()[j].lambda,
            Polynomial::from_i64_coeffs(&[0, 2, 1])
        );
    }

    #[test]
    fn book_tie_and_notlimit_points() {
        let fam = family_book();
        // |λ(x^2+2x)| = |λ(x)| = √5 > |λ((x+1)^2)| = 2 at -2 + i
        let tie = classify_point(&fam, c(-2.0, 1.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(tie.verdict, LimitVerdict::LimitByModulusTie);
        assert_eq!(tie.dominant_indices.len(), 2);
        let lambdas: Vec<_> = tie
            .dominant_indices
            .iter()
            .map(|&i| fam.terms()[i].lambda.clone())
            .collect();
        assert!(lambdas.contains(&Polynomial::x()));
        assert!(lambdas.contains(&Polynomial::from_i64_coeffs(&[0, 2, 1])));
        let expected_margin = (5f64.sqrt() - 2.0) / 5f64.sqrt();
        assert!((tie.margin - expected_margin).abs() < 1e-12);

        // at -3: |λ((x+1)^2)| = 4 dominates and α = x^2 = 9 ≠ 0
        let not = classify_point(&fam, c(-3.0, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(not.verdict, LimitVerdict::NotLimit);
    }

    #[test]
    fn gbook5_keeps_zero_but_not_minus_half() {
        let fam = family_gbook5();
        // x = 0: dominant (x+1)^2 term has alpha x^2(x+1), which vanishes
        let at_zero = classify_point(&fam, c(0.0, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(at_zero.verdict, LimitVerdict::LimitByAlphaZero);
        assert!(at_zero.alpha_zero_exact);
        // x = -1/2: dominant (x^2+2x) term has alpha 2x^2+3x = -1 ≠ 0
        let at_half = classify_point(&fam, c(-0.5, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(at_half.verdict, LimitVerdict::NotLimit);
    }

    #[test]
    fn flower4_all_lambdas_vanish_at_zero() {
        let fam = family_flower4();
        let at_zero = classify_point(&fam, c(0.0, 0.0), DEFAULT_TIE_TOL).unwrap();
        assert_eq!(at_zero.verdict, LimitVerdict::LimitByModulusTie);
        assert_eq!(at_zero.dominant_indices.len(), fam.terms().len());
    }

    #[test]
    fn triple_point_satisfies_all_three_equations() {
        let z = c(book_re_cut(), book_triple_im());
        let circle = ((z + c(2.0, 0.0)).norm() - 1.0).abs();
        let hyper = ((z.re + 1.0).powi(2) - z.im * z.im - 0.5).abs();
        let card = ((z + c(1.0, 0.0)).norm_sqr() - z.norm()).abs();
        assert!(circle < 1e-12, "circle residual {circle}");
        assert!(hyper < 1e-12, "hyperbola residual {hyper}");
        assert!(card < 1e-12, "cardioid residual {card}");
        assert!(distance_to_book_limit(z) < 1e-9);
    }

    #[test]
    fn membership_examples() {
        // left hyperbola tail: Re = -2.5, Im solving (Re+1)^2 - Im^2 = 1/2
        let z = c(-2.5, 1.75f64.sqrt());
        assert!(book_limit_membership(z, 1e-9));
        assert!(book_limit_membership(c(-0.5, 0.0), 1e-12));
        assert!(book_limit_membership(c(0.0, 0.0), 1e-12));
        // cardioid cap crosses the real axis at -(3+√5)/2
        assert!(book_limit_membership(
            c(-(3.0 + 5f64.sqrt()) / 2.0, 0.0),
            1e-9
        ));
        // a point on the excluded part of the hyperbola's left branch
        let excluded = c(-2.0, ((-1.0f64).powi(2) - 0.5).sqrt());
        assert!(!book_limit_membership(excluded, 1e-3));
    }

    #[test]
    fn distance_examples() {
        assert!(distance_to_book_limit(c(0.0, 0.0)) < 1e-15);
        // from -2 the nearest set point is the cardioid tip -(3+√5)/2,
        // at distance (√5 - 1)/2; the circle arc is a full unit away
        let d = distance_to_book_limit(c(-2.0, 0.0));
        let expected = (5f64.sqrt() - 1.0) / 2.0;
        assert!((d - expected).abs() < 1e-9, "d = {d}, expected {expected}");
        assert!((circle_arc_distance(c(-2.0, 0.0)) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn distance_agrees_with_dense_curve_sampling() {
        // independent oracle: brute-force min distance over dense samples of
        // the three implicit curves with the windows applied
        let cut = book_re_cut();
        let mut samples: Vec<Complex64> = Vec::new();
        let n = 60_000;
        for k in 0..=n {
            // circle
            let theta = -std::f64::consts::PI + std::f64::consts::TAU * k as f64 / n as f64;
            let p = c(-2.0 + theta.cos(), theta.sin());
            if p.re >= cut {
                samples.push(p);
            }
            // hyperbola, |t| up to 6
            let t = -6.0 + 12.0 * k as f64 / n as f64;
            let w = (0.5 + t * t).sqrt();
            samples.push(c(-1.0 + w, t));
            let left = c(-1.0 - w, t);
            if left.re <= cut {
                samples.push(left);
            }
            // cardioid over its full radius range, windowed
            let (lo, hi) = ((3.0 - 5f64.sqrt()) / 2.0, (3.0 + 5f64.sqrt()) / 2.0);
            let r = lo + (hi - lo) * k as f64 / n as f64;
            let (a, b) = cardioid_point(r);
            if a <= cut {
                samples.push(c(a, b));
                samples.push(c(a, -b));
            }
        }
        samples.push(c(0.0, 0.0));
        samples.push(c(-0.5, 0.0));

        for z in [
            c(-2.0, 0.0),
            c(-2.0, 1.3),
            c(0.4, 0.2),
            c(-3.3, -1.1),
            c(-1.0, 0.0),
            c(-2.4, 0.9),
            c(-0.8, -2.2),
            c(0.9, 2.4),
        ] {
            let brute = samples
                .iter()
                .map(|s| (z - s).norm())
                .fold(f64::INFINITY, f64::min);
            let fast = distance_to_book_limit(z);
            assert!(
                (fast - brute).abs() < 2e-4,
                "z = {z}: fast {fast} vs brute {brute}"
            );
            assert!(fast <= brute + 1e-12, "distance must lower-bound samples");
        }
    }

    #[test]
    fn classification_margin_tracks_distance_near_curves() {
        // points ON a curve classify as ties even at tiny tolerance
        let fam = family_book();
        let on_circle = c(-2.0 + 0.6, 0.8);
        let v = classify_point(&fam, on_circle, 1e-9).unwrap();
        assert_eq!(v.verdict, LimitVerdict::LimitByModulusTie);
        // and slightly off, the margin grows with the offset
        let off = classify_point(&fam, c(-1.38, 0.8), 1e-9).unwrap();
        assert_eq!(off.verdict, LimitVerdict::NotLimit);
        assert!(off.margin > 1e-3);
    }

    #[test]
    fn grid_reports_poles() {
        use crate::expsum::{ExpSumFamily, ExpSumTerm};
        use crate::poly::RationalFunction;
        let fam = ExpSumFamily::new(
            "pole-grid",
            vec![
                ExpSumTerm::new(
                    RationalFunction::new(Polynomial::one(), Polynomial::x()).unwrap(),
                    Polynomial::from_i64_coeffs(&[1, 1]),
                ),
                ExpSumTerm::from_polys(Polynomial::one(), Polynomial::from_i64_coeffs(&[0, 2])),
            ],
        )
        .unwrap();
        let region = GridRegion {
            x0: -1.0,
            x1: 1.0,
            y0: -1.0,
            y1: 1.0,
            nx: 3,
            ny: 3,
        };
        let grid = classify_grid(&fam, &region, DEFAULT_TIE_TOL);
        assert_eq!(grid.len(), 9);
        let poles: Vec<_> = grid
            .iter()
            .filter(|(_, o)| *o == GridOutcome::Pole)
            .collect();
        assert_eq!(poles.len(), 1);
        assert_eq!(poles[0].0, c(0.0, 0.0));
    }

    #[test]
    fn hyperbola_fit_recovers_plane_curve() {
        // exact points on (u + 1.5)^2 - v^2 = 0.25
        let pts: Vec<Complex64> = (0..40)
            .map(|k| {
                let v = -2.0 + 4.0 * k as f64 / 39.0;
                c(-1.5 + (0.25 + v * v).sqrt(), v)
            })
            .collect();
        let fit = fit_axis_hyperbola(&pts).unwrap();
        assert!((fit.center + 1.5).abs() < 1e-9);
        assert!((fit.constant - 0.25).abs() < 1e-9);
        assert!(fit.rms < 1e-9);
        assert!(fit_axis_hyperbola(&pts[..2]).is_none());
    }
}

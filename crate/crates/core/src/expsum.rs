//! Families of polynomials of the shape `f_n(x) = Σ_i α_i(x) λ_i(x)^n`,
//! the input shape of the limit-of-roots machinery in [`crate::bkw`].
//!
//! The α may be rational functions: solving a first-order recurrence
//! `f_n = λ f_{n-1} + Σ c_i μ_i^{n-1}` produces coefficients
//! `c_i / (μ_i - λ)` that only clear to polynomials after combination.

use num_complex::Complex64;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{PolyError, Polynomial, RationalFunction};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExpSumError {
    #[error("family must have at least one term")]
    EmptyFamily,
    #[error("term {index}: alpha is identically zero")]
    ZeroAlpha { index: usize },
    #[error("term {index}: lambda is identically zero")]
    ZeroLambda { index: usize },
    #[error("lambda {i} and lambda {j} differ by a unit-modulus constant")]
    UnitModulusRatio { i: usize, j: usize },
    #[error("resonant recurrence: mu equals lambda")]
    ResonantRecurrence,
    #[error("instantiation did not clear to an integer polynomial")]
    DenominatorNotCleared,
    #[error("an alpha has a pole at ({re}, {im})")]
    PoleAt { re: f64, im: f64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One `α(x) λ(x)^n` term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpSumTerm {
    pub alpha: RationalFunction,
    pub lambda: Polynomial,
}

impl ExpSumTerm {
    pub fn new(alpha: RationalFunction, lambda: Polynomial) -> ExpSumTerm {
        ExpSumTerm { alpha, lambda }
    }

    pub fn from_polys(alpha: Polynomial, lambda: Polynomial) -> ExpSumTerm {
        ExpSumTerm {
            alpha: RationalFunction::from_poly(alpha),
            lambda,
        }
    }
}

/// `f_n(x) = Σ α_i(x) λ_i(x)^n` with the preconditions of the limit-of-roots
/// theorem checked at construction: every α and λ nonzero, and no two λ
/// related by a unit-modulus constant factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpSumFamily {
    label: String,
    terms: Vec<ExpSumTerm>,
}

impl ExpSumFamily {
    pub fn new(label: impl Into<String>, mut terms: Vec<ExpSumTerm>) -> Result<Self, ExpSumError> {
        if terms.is_empty() {
            return Err(ExpSumError::EmptyFamily);
        }
        for (index, t) in terms.iter().enumerate() {
            if t.alpha.is_zero() {
                return Err(ExpSumError::ZeroAlpha { index });
            }
            if t.lambda.is_zero() {
                return Err(ExpSumError::ZeroLambda { index });
            }
        }
        // canonical term order: (deg lambda, coefficients low-to-high)
        terms.sort_by(|a, b| {
            let ka = (a.lambda.degree(), a.lambda.coefficients().to_vec());
            let kb = (b.lambda.degree(), b.lambda.coefficients().to_vec());
            ka.cmp(&kb)
        });
        for i in 0..terms.len() {
            for j in i + 1..terms.len() {
                if unit_modulus_multiple(&terms[i].lambda, &terms[j].lambda) {
                    return Err(ExpSumError::UnitModulusRatio { i, j });
                }
            }
        }
        Ok(ExpSumFamily {
            label: label.into(),
            terms,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn terms(&self) -> &[ExpSumTerm] {
        &self.terms
    }

    /// The exact member polynomial `f_n`; fails if the rational combination
    /// does not clear to integer coefficients (a wrongly built family).
    pub fn instantiate(&self, n: usize) -> Result<Polynomial, ExpSumError> {
        assert!(n >= 1);
        let mut sum = RationalFunction::zero();
        for t in &self.terms {
            let pow = RationalFunction::from_poly(t.lambda.pow(n));
            sum = &sum + &(&t.alpha * &pow);
        }
        sum.into_polynomial()
            .map_err(|_| ExpSumError::DenominatorNotCleared)
    }

    /// `Σ α_i(z) λ_i(z)^n` in floating complex arithmetic; errors at a pole
    /// of any α. Powers go through polar form, which stays accurate for the
    /// large n where expanded coefficients would not.
    pub fn evaluate(&self, n: usize, z: Complex64) -> Result<Complex64, ExpSumError> {
        assert!(n >= 1);
        let mut sum = Complex64::zero();
        for t in &self.terms {
            let alpha = self.alpha_at(t, z)?;
            let lam = t.lambda.evaluate_complex(z)?;
            sum += alpha * complex_pow(lam, n);
        }
        if sum.re.is_finite() && sum.im.is_finite() {
            Ok(sum)
        } else {
            Err(PolyError::NonFiniteEvaluation.into())
        }
    }

    /// `(f_n(z), f_n'(z))` evaluated term by term in the structured form.
    ///
    /// Near root clusters the expanded coefficients of these families cancel
    /// catastrophically (condition numbers beyond 10^30 at n = 30), while
    /// the structured evaluation keeps a relative error of order `n·ε` —
    /// this is the evaluator the root finder must use for large members.
    pub fn evaluate_with_derivative(
        &self,
        n: usize,
        z: Complex64,
    ) -> Result<(Complex64, Complex64), ExpSumError> {
        assert!(n >= 1);
        let mut f = Complex64::zero();
        let mut df = Complex64::zero();
        for t in &self.terms {
            let alpha = self.alpha_at(t, z)?;
            let dalpha = self.alpha_derivative_at(t, z)?;
            let lam = t.lambda.evaluate_complex(z)?;
            let dlam = t.lambda.derivative().evaluate_complex(z)?;
            let lam_pow_nm1 = complex_pow(lam, n - 1);
            let lam_pow_n = lam_pow_nm1 * lam;
            f += alpha * lam_pow_n;
            df += dalpha * lam_pow_n + alpha * (n as f64) * lam_pow_nm1 * dlam;
        }
        Ok((f, df))
    }

    /// `α'(z)` for `α = p/q`: `(p'q - pq')/q^2`.
    fn alpha_derivative_at(&self, t: &ExpSumTerm, z: Complex64) -> Result<Complex64, ExpSumError> {
        let p = t.alpha.numerator();
        let q = t.alpha.denominator();
        let qv = q.evaluate_complex(z)?;
        let pv = p.evaluate_complex(z)?;
        let dpv = p.derivative().evaluate_complex(z)?;
        let dqv = q.derivative().evaluate_complex(z)?;
        Ok((dpv * qv - pv * dqv) / (qv * qv))
    }

    fn alpha_at(&self, t: &ExpSumTerm, z: Complex64) -> Result<Complex64, ExpSumError> {
        if t.alpha.denominator().degree() != Some(0) {
            // f64 components are exact dyadic rationals, so poles are decidable
            let (re, im) = super::bkw::exact_parts(z);
            if t.alpha.has_pole_at_exact(&re, &im) {
                return Err(ExpSumError::PoleAt { re: z.re, im: z.im });
            }
        }
        Ok(t.alpha.evaluate_complex(z)?)
    }

    /// JSON rendering: coefficient arrays of decimal strings per term.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "label": self.label,
            "terms": self.terms.iter().map(|t| serde_json::json!({
                "alpha_num": t.alpha.numerator().to_json_array(),
                "alpha_den": t.alpha.denominator().to_json_array(),
                "lambda": t.lambda.to_json_array(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `z^n` via polar decomposition; `z^0 = 1`.
fn complex_pow(z: Complex64, n: usize) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if z.is_zero() {
        return Complex64::zero();
    }
    let (r, theta) = z.to_polar();
    Complex64::from_polar(r.powi(n as i32), theta * n as f64)
}

/// True iff `a = ω b` for a constant ω with |ω| = 1. For integer polynomials
/// a constant ratio is rational, so |ω| = 1 forces ω = ±1.
fn unit_modulus_multiple(a: &Polynomial, b: &Polynomial) -> bool {
    a == b || *a == -b
}

/// The structured family a spec belongs to, when one of the built-in
/// exponential-sum representations covers it.
pub fn family_for_spec(spec: &crate::families::FamilySpec) -> Option<ExpSumFamily> {
    use crate::families::FamilySpec;
    match *spec {
        FamilySpec::Friendship { .. } | FamilySpec::Flower { q: 3, .. } => {
            Some(family_friendship())
        }
        FamilySpec::Flower { q: 4, .. } => Some(family_flower4()),
        FamilySpec::Book { .. } | FamilySpec::GeneralizedBook { m: 4, .. } => Some(family_book()),
        FamilySpec::GeneralizedBook { m: 5, .. } => Some(family_gbook5()),
        _ => None,
    }
}

/// The friendship family `(2x + x^2)^n + x · ((1+x)^2)^n`.
pub fn family_friendship() -> ExpSumFamily {
    ExpSumFamily::new(
        "friendship",
        vec![
            ExpSumTerm::from_polys(Polynomial::one(), Polynomial::from_i64_coeffs(&[0, 2, 1])),
            ExpSumTerm::from_polys(Polynomial::x(), Polynomial::from_i64_coeffs(&[1, 2, 1])),
        ],
    )
    .expect("fixed family data is valid")
}

/// The book family `(2x+1)(x^2+2x)^n + x^2((x+1)^2)^n - 2·x^n`.
pub fn family_book() -> ExpSumFamily {
    ExpSumFamily::new(
        "book",
        vec![
            ExpSumTerm::from_polys(
                Polynomial::from_i64_coeffs(&[1, 2]),
                Polynomial::from_i64_coeffs(&[0, 2, 1]),
            ),
            ExpSumTerm::from_polys(
                Polynomial::from_i64_coeffs(&[0, 0, 1]),
                Polynomial::from_i64_coeffs(&[1, 2, 1]),
            ),
            ExpSumTerm::from_polys(Polynomial::constant(-2), Polynomial::x()),
        ],
    )
    .expect("fixed family data is valid")
}

/// The generalized-book family
/// `x^2(x+1)·((x+1)^2)^n - 2x·x^n + (2x^2+3x)(x^2+2x)^n`.
pub fn family_gbook5() -> ExpSumFamily {
    ExpSumFamily::new(
        "gbook5",
        vec![
            ExpSumTerm::from_polys(
                Polynomial::from_i64_coeffs(&[0, 0, 1, 1]),
                Polynomial::from_i64_coeffs(&[1, 2, 1]),
            ),
            ExpSumTerm::from_polys(Polynomial::from_i64_coeffs(&[0, -2]), Polynomial::x()),
            ExpSumTerm::from_polys(
                Polynomial::from_i64_coeffs(&[0, 3, 2]),
                Polynomial::from_i64_coeffs(&[0, 2, 1]),
            ),
        ],
    )
    .expect("fixed family data is valid")
}

/// Solves `f_n = λ f_{n-1} + Σ_i c_i μ_i^{n-1}` with `f_1 = base` into the
/// closed form `f_n = A λ^n + Σ_i [c_i/(μ_i - λ)] μ_i^n`, where
/// `A = (f_1 - Σ_i c_i μ_i/(μ_i - λ)) / λ`. Zero coefficients are dropped.
/// The resonant case `μ_i = λ` is not supported.
pub fn solve_linear_recurrence(
    label: impl Into<String>,
    lambda: &Polynomial,
    inhomog: &[(Polynomial, Polynomial)],
    base: &Polynomial,
) -> Result<ExpSumFamily, ExpSumError> {
    if lambda.is_zero() {
        return Err(ExpSumError::ZeroLambda { index: 0 });
    }
    // merge duplicate mu before dividing
    let mut merged: Vec<(Polynomial, Polynomial)> = Vec::new();
    for (c, mu) in inhomog {
        if let Some((acc, _)) = merged.iter_mut().find(|(_, m)| m == mu) {
            *acc = &*acc + c;
        } else {
            merged.push((c.clone(), mu.clone()));
        }
    }

    let lambda_rf = RationalFunction::from_poly(lambda.clone());
    let mut terms = Vec::new();
    let mut base_correction = RationalFunction::from_poly(base.clone());
    for (c, mu) in &merged {
        if c.is_zero() {
            continue;
        }
        let diff = mu - lambda;
        if diff.is_zero() {
            return Err(ExpSumError::ResonantRecurrence);
        }
        let coeff = RationalFunction::new(c.clone(), diff)?;
        base_correction = &base_correction - &(&coeff * &RationalFunction::from_poly(mu.clone()));
        terms.push(ExpSumTerm::new(coeff, mu.clone()));
    }
    let a = base_correction.div(&lambda_rf)?;
    if !a.is_zero() {
        terms.push(ExpSumTerm::new(a, lambda.clone()));
    }
    ExpSumFamily::new(label, terms)
}

/// The flower family `F_{4,n}` in closed form, obtained by solving the
/// first-order recurrence its domination polynomial satisfies.
pub fn family_flower4() -> ExpSumFamily {
    let lambda = &Polynomial::from_i64_coeffs(&[1, 1]).pow(3) + &Polynomial::x();
    let inhomog = [
        (
            -Polynomial::from_i64_coeffs(&[1, 3]),
            Polynomial::from_i64_coeffs(&[0, 1, 3, 1]),
        ),
        (Polynomial::from_i64_coeffs(&[1, 1]).pow(3), Polynomial::x()),
        (
            -Polynomial::from_i64_coeffs(&[0, 1, 1]),
            Polynomial::from_i64_coeffs(&[0, 3, 3, 1]),
        ),
    ];
    let base = Polynomial::from_i64_coeffs(&[0, 0, 6, 4, 1]);
    solve_linear_recurrence("flower4", &lambda, &inhomog, &base)
        .expect("fixed recurrence data is non-resonant")
}

//! Rational functions (quotients of integer polynomials) kept in a canonical
//! reduced form, used to carry the coefficients that fall out of solving
//! linear recurrences.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Polynomial};

/// `numerator / denominator`, reduced by the polynomial GCD, jointly
/// content-normalized, denominator leading coefficient positive.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> RationalFunction {
        Self::from_poly(Polynomial::zero())
    }

    fn reduced(num: Polynomial, den: Polynomial) -> RationalFunction {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.divide_exact(&g).expect("gcd divides numerator");
        let mut den = den.divide_exact(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.divide_exact(&Polynomial::constant(c.clone())).unwrap();
            den = den.divide_exact(&Polynomial::constant(c)).unwrap();
        }
        if den.leading_coefficient().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the reduced denominator is the constant 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        (self.den == Polynomial::one()).then_some(&self.num)
    }

    /// Clears the denominator, which must be a constant dividing every
    /// numerator coefficient.
    pub fn into_polynomial(self) -> Result<Polynomial, PolyError> {
        if self.den.degree() != Some(0) {
            return Err(PolyError::NonDivisible {
                remainder: self.num,
            });
        }
        self.num.divide_exact(&self.den)
    }

    pub fn div(&self, rhs: &RationalFunction) -> Result<RationalFunction, PolyError> {
        if rhs.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        Ok(Self::reduced(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Floating evaluation `num(z)/den(z)`; a vanishing denominator is a pole.
    pub fn evaluate_complex(&self, z: Complex64) -> Result<Complex64, PolyError> {
        let d = self.den.evaluate_complex(z)?;
        if d.norm() == 0.0 {
            return Err(PolyError::NonFiniteEvaluation);
        }
        let n = self.num.evaluate_complex(z)?;
        let v = n / d;
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(PolyError::NonFiniteEvaluation)
        }
    }

    /// Exact test for a zero of the rational function at a complex rational
    /// point; `None` when the denominator vanishes there.
    pub fn is_zero_at_exact(&self, re: &BigRational, im: &BigRational) -> Option<bool> {
        let (dr, di) = self.den.evaluate_exact_complex(re, im);
        if dr.is_zero() && di.is_zero() {
            return None;
        }
        let (nr, ni) = self.num.evaluate_exact_complex(re, im);
        Some(nr.is_zero() && ni.is_zero())
    }

    /// Exact test for a pole at a complex rational point.
    pub fn has_pole_at_exact(&self, re: &BigRational, im: &BigRational) -> bool {
        let (dr, di) = self.den.evaluate_exact_complex(re, im);
        dr.is_zero() && di.is_zero()
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &-rhs
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

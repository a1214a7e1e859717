//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, exact arithmetic, and complex evaluation.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed;
//! the zero polynomial is the empty coefficient vector and its degree is
//! undefined (queries return `None` or an error rather than a sentinel).

pub(crate) mod dd;
mod rational;

pub use rational::RationalFunction;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use dd::DdPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("not exactly divisible; remainder {remainder}")]
    NonDivisible { remainder: Polynomial },
    #[error("degree/lowest-degree query on the zero polynomial")]
    ZeroPolynomialQuery,
    #[error("evaluation overflowed to a non-finite value")]
    NonFiniteEvaluation,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("invalid polynomial JSON: {0}")]
    InvalidJson(String),
}

/// Dense univariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigInt::one())
    }

    /// The monomial `x`.
    pub fn x() -> Polynomial {
        Polynomial::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        Polynomial::from_coeffs(vec![c.into()])
    }

    /// Builds from coefficients indexed by exponent, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient. For a domination
    /// polynomial this is the domination number.
    pub fn lowest_degree(&self) -> Result<usize, PolyError> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(PolyError::ZeroPolynomialQuery)
    }

    pub fn coefficient(&self, exponent: usize) -> BigInt {
        self.coeffs.get(exponent).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Divides by `x^k`; the k lowest coefficients must vanish.
    pub fn div_xpow(&self, k: usize) -> Result<Polynomial, PolyError> {
        if self.coeffs.len() < k || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonDivisible {
                remainder: self.clone(),
            });
        }
        Ok(Polynomial {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact k-th power by binary exponentiation; `pow(_, 0) = 1`.
    pub fn pow(&self, k: usize) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor`; reports the outstanding remainder if
    /// the division does not come out exactly over the integers.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let dn = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dn {
            return Err(PolyError::NonDivisible {
                remainder: self.clone(),
            });
        }
        let lead = divisor.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); rem.len() - dn + 1];
        for qi in (0..quot.len()).rev() {
            let top = rem[qi + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NonDivisible {
                    remainder: Polynomial::from_coeffs(rem),
                });
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + i] -= &q * dc;
            }
            quot[qi] = q;
        }
        let remainder = Polynomial::from_coeffs(rem);
        if remainder.is_zero() {
            Ok(Polynomial::from_coeffs(quot))
        } else {
            Err(PolyError::NonDivisible { remainder })
        }
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Evaluates at a complex point by a compensated (double-double) Horner
    /// loop. The result error is O(degree · 2^-105 · Σ|a_i||z|^i) plus the
    /// final rounding to f64.
    pub fn evaluate_complex(&self, z: Complex64) -> Result<Complex64, PolyError> {
        let v = DdPoly::from_coeffs(&self.coeffs).eval(z).to_c64();
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(PolyError::NonFiniteEvaluation)
        }
    }

    /// Exact evaluation at the complex rational `re + im·i`.
    pub fn evaluate_exact_complex(
        &self,
        re: &BigRational,
        im: &BigRational,
    ) -> (BigRational, BigRational) {
        let mut acc_re = BigRational::zero();
        let mut acc_im = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let new_re = &acc_re * re - &acc_im * im + BigRational::from_integer(c.clone());
            let new_im = &acc_re * im + &acc_im * re;
            acc_re = new_re;
            acc_im = new_im;
        }
        (acc_re, acc_im)
    }

    /// GCD of the coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive_part(&self) -> Polynomial {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Polynomial GCD over the integers, normalized to positive leading
    /// coefficient. Uses the primitive Euclidean algorithm with
    /// pseudo-remainders.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        if a.is_zero() {
            return b.sign_normalized();
        }
        if b.is_zero() {
            return a.sign_normalized();
        }
        let content_gcd = a.content().gcd(&b.content());
        let mut p = a.primitive_part();
        let mut q = b.primitive_part();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            let r = pseudo_rem(&p, &q);
            p = q;
            q = r.primitive_part();
        }
        p.sign_normalized().scale(&content_gcd)
    }

    fn sign_normalized(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Canonical text, lowest degree first: `6x^2 + 4x^3 + x^4`.
    pub fn to_canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push('x'),
                _ => {
                    out.push_str("x^");
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }

    /// JSON rendering: array of decimal strings indexed by exponent.
    pub fn to_json_array(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    pub fn from_json_array(value: &serde_json::Value) -> Result<Polynomial, PolyError> {
        let arr = value
            .as_array()
            .ok_or_else(|| PolyError::InvalidJson("expected an array".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for (i, v) in arr.iter().enumerate() {
            let s = v
                .as_str()
                .ok_or_else(|| PolyError::InvalidJson(format!("entry {i} is not a string")))?;
            let c: BigInt = s
                .parse()
                .map_err(|_| PolyError::InvalidJson(format!("entry {i}: bad integer `{s}`")))?;
            coeffs.push(c);
        }
        Ok(Polynomial::from_coeffs(coeffs))
    }

    /// Coefficients rounded to f64, indexed by exponent.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

/// `lc(q)^(deg p - deg q + 1) * p mod q`, computed with exact integer steps.
fn pseudo_rem(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let dp = p.degree().unwrap();
    let dq = q.degree().unwrap();
    debug_assert!(dp >= dq);
    let lead = q.coeffs.last().unwrap().clone();
    let mut rem = p.scale(&lead.pow((dp - dq + 1) as u32)).coeffs;
    for qi in (0..=dp - dq).rev() {
        let top = rem[qi + dq].clone();
        if top.is_zero() {
            continue;
        }
        let f = &top / &lead; // exact by the pre-scaling
        for (i, qc) in q.coeffs.iter().enumerate() {
            rem[qi + i] -= &f * qc;
        }
    }
    Polynomial::from_coeffs(rem)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(b) = rhs.coeffs.get(i) {
                c -= b;
            }
            coeffs.push(c);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.to_canonical_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64_coeffs(coeffs)
    }

    #[test]
    fn add_and_mul_small_cases() {
        assert_eq!(&Polynomial::x() + &Polynomial::x(), p(&[0, 2]));
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
        // (x^2 + 2x)(2x + 1) = 2x^3 + 5x^2 + 2x
        assert_eq!(&p(&[0, 2, 1]) * &p(&[1, 2]), p(&[0, 2, 5, 2]));
    }

    #[test]
    fn pow_small_cases() {
        let q = p(&[0, 2, 1]); // 2x + x^2
        assert_eq!(q.pow(1), q);
        assert_eq!(q.pow(2), p(&[0, 0, 4, 4, 1]));
        assert_eq!(p(&[1, 1]).pow(0), Polynomial::one());
    }

    #[test]
    fn divide_exact_cases() {
        let q = p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        let q = p(&[0, 2, 1]).divide_exact(&Polynomial::x()).unwrap();
        assert_eq!(q, p(&[2, 1]));
        match p(&[1, 0, 1]).divide_exact(&p(&[-1, 1])) {
            Err(PolyError::NonDivisible { remainder }) => {
                assert_eq!(remainder, p(&[2]));
            }
            other => panic!("expected NonDivisible, got {other:?}"),
        }
        assert_eq!(
            p(&[1, 1]).divide_exact(&Polynomial::zero()),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn lowest_degree_cases() {
        assert_eq!(p(&[0, 0, 6, 4, 1]).lowest_degree().unwrap(), 2);
        assert_eq!(Polynomial::x().lowest_degree().unwrap(), 1);
        assert_eq!(p(&[0, 3, 3, 1]).lowest_degree().unwrap(), 1);
        assert!(Polynomial::zero().lowest_degree().is_err());
    }

    #[test]
    fn evaluate_complex_cases() {
        let q = p(&[0, 2, 1]); // x^2 + 2x
        assert_eq!(
            q.evaluate_complex(Complex64::new(0.0, 0.0)).unwrap().re,
            0.0
        );
        let at_m2 = q.evaluate_complex(Complex64::new(-2.0, 0.0)).unwrap();
        assert_eq!(at_m2, Complex64::new(0.0, 0.0));
        let sq = p(&[1, 2, 1]); // (1+x)^2 at i -> 2i
        let v = sq.evaluate_complex(Complex64::new(0.0, 1.0)).unwrap();
        assert!((v - Complex64::new(0.0, 2.0)).norm() < 1e-15);
    }

    #[test]
    fn evaluate_exact_complex_matches_float() {
        let q = p(&[3, -7, 0, 2, 5]);
        let re = BigRational::new(BigInt::from(-3), BigInt::from(8));
        let im = BigRational::new(BigInt::from(5), BigInt::from(4));
        let (er, ei) = q.evaluate_exact_complex(&re, &im);
        let z = Complex64::new(-0.375, 1.25);
        let v = q.evaluate_complex(z).unwrap();
        assert!((er.to_f64().unwrap() - v.re).abs() < 1e-12);
        assert!((ei.to_f64().unwrap() - v.im).abs() < 1e-12);
    }

    #[test]
    fn gcd_pulls_out_common_factor() {
        let a = &p(&[-1, 1]) * &p(&[2, 3, 1]); // (x-1)(x^2+3x+2)
        let b = &p(&[-1, 1]) * &p(&[0, 7]); // (x-1)*7x
        let g = Polynomial::gcd(&a, &b);
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn canonical_text_rendering() {
        assert_eq!(p(&[0, 0, 6, 4, 1]).to_canonical_text(), "6x^2 + 4x^3 + x^4");
        assert_eq!(p(&[0, 1]).to_canonical_text(), "x");
        assert_eq!(p(&[-2, 0, 1]).to_canonical_text(), "-2 + x^2");
        assert_eq!(p(&[0, -1]).to_canonical_text(), "-x");
        assert_eq!(Polynomial::zero().to_canonical_text(), "0");
    }

    #[test]
    fn json_round_trip() {
        let q = p(&[0, -3, 0, 17]);
        let j = q.to_json_array();
        assert_eq!(Polynomial::from_json_array(&j).unwrap(), q);
        assert!(Polynomial::from_json_array(&serde_json::json!(["x"])).is_err());
    }
}

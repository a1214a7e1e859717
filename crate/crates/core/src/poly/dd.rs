//! Double-double (roughly 106-bit) arithmetic for evaluating exact integer
//! polynomials at complex points.
//!
//! A plain f64 Horner loop loses all significance near clustered roots of
//! degree ~60 polynomials whose coefficients reach 10^17; splitting each
//! integer coefficient into a hi/lo pair keeps the evaluation error near
//! `degree * 2^-105 * Σ|a_i||z|^i`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Splits a big integer into hi + lo. Exact whenever |x| < 2^106, which
    /// covers every coefficient this crate produces; larger values saturate
    /// gracefully (the low word just stops being exact).
    pub fn from_bigint(x: &BigInt) -> Dd {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        if !hi.is_finite() {
            return Dd { hi, lo: 0.0 };
        }
        // hi is integral: values below 2^53 convert exactly, larger ones
        // round to a spacing that is itself an integer.
        let hi_int = BigInt::from(hi as i128);
        let lo = (x - hi_int).to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn sub(self, b: Dd) -> Dd {
        self.add(b.neg())
    }

    #[inline]
    pub fn mul(self, b: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, b.hi);
        let p2 = p2 + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub fn from_c64(z: Complex64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn mul(self, b: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(b.re).sub(self.im.mul(b.im)),
            im: self.re.mul(b.im).add(self.im.mul(b.re)),
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// A polynomial with coefficients pre-split for repeated evaluation.
#[derive(Clone, Debug)]
pub(crate) struct DdPoly {
    coeffs: Vec<Dd>,
}

impl DdPoly {
    pub fn from_coeffs(coeffs: &[BigInt]) -> DdPoly {
        DdPoly {
            coeffs: coeffs.iter().map(Dd::from_bigint).collect(),
        }
    }

    /// Horner evaluation in double-double arithmetic.
    pub fn eval(&self, z: Complex64) -> DdComplex {
        let zd = DdComplex::from_c64(z);
        let mut acc = DdComplex::default();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(zd);
            acc.re = acc.re.add(*c);
        }
        acc
    }
}

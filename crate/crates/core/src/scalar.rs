//! Gaussian rational coefficients.
//!
//! The symbolic layer is exact by construction: every coefficient is a
//! complex number `a + b*i` with `a, b` arbitrary-precision rationals.
//! Floats never enter here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rational = BigRational;

/// Exact Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// Real rational `num/den`.
    pub fn rat(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::new(r, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = &self.re * &self.re + &self.im * &self.im;
        Scalar::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// Lossy conversion for the numeric layer.
    pub fn to_complex_f64(&self) -> num_complex::Complex<f64> {
        fn to_f64(r: &Rational) -> f64 {
            // Avoid overflow for large numerators by going through string only
            // when the direct conversion fails.
            let n = r.numer();
            let d = r.denom();
            let nf = to_f64_bigint(n);
            let df = to_f64_bigint(d);
            nf / df
        }
        fn to_f64_bigint(b: &BigInt) -> f64 {
            use num_traits::ToPrimitive;
            b.to_f64().unwrap_or(f64::NAN)
        }
        num_complex::Complex::new(to_f64(&self.re), to_f64(&self.im))
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    /// Canonical form `a/b+c/d*i` (or `a/b-c/d*i` for negative imaginary
    /// part); denominators always printed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.re, f)?;
        if self.im.is_negative() {
            write!(f, "-")?;
            fmt_rational(&(-self.im.clone()), f)?;
        } else {
            write!(f, "+")?;
            fmt_rational(&self.im, f)?;
        }
        write!(f, "*i")
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(self.re + &rhs.re, self.im + &rhs.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self * &rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_is_exact() {
        let a = Scalar::rat(1, 3);
        let b = Scalar::new(Rational::new(2.into(), 5.into()), Rational::one());
        let prod = &a * &b;
        let back = prod / a.clone();
        assert_eq!(back, b);
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn canonical_display() {
        assert_eq!(Scalar::rat(-1, 2).to_string(), "-1/2+0/1*i");
        let z = Scalar::new(Rational::zero(), Rational::new(3.into(), 4.into()));
        assert_eq!(z.to_string(), "0/1+3/4*i");
        let w = Scalar::new(Rational::one(), Rational::new((-3).into(), 4.into()));
        assert_eq!(w.to_string(), "1/1-3/4*i");
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = Scalar::new(Rational::one(), Rational::one());
        let inv = z.inv();
        assert_eq!(&z * &inv, Scalar::one());
    }
}

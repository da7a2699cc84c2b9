//! Exact rational scalars.
//!
//! Every coefficient in the library is a `Rational`: an arbitrary-precision
//! fraction kept in lowest terms with positive denominator. No floating
//! point arithmetic occurs anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact fraction `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Binomial coefficient as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Integer power with negative exponents allowed (base must be nonzero then).
pub fn pow_i64(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        base.pow(exp as i32)
    } else {
        base.pow(exp as i32)
    }
}

/// Canonical text form `p/q` (plain integer when `q == 1`).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `true` when the coefficient prints with a leading minus sign.
pub fn is_negative(r: &Rational) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), rat(6));
        assert_eq!(binomial(5, 0), rat(1));
        assert_eq!(binomial(3, 5), rat(0));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&ratio(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(-3)), "-3");
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
    }
}

//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number. Always stored in lowest terms with a
/// positive denominator; zero is `0/1`.
pub type Scalar = BigRational;

/// `n / 1`
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `p / q`, reduced. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parse a rational literal of the form `p`, `-p`, `p/q`. No decimal points.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid = |t: &str, allow_sign: bool| {
        let t = if allow_sign {
            t.strip_prefix(['-', '+']).unwrap_or(t)
        } else {
            t
        };
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    let d: BigInt = match den {
        Some(d) => {
            if !valid(d, false) {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

/// Render as `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub(crate) fn is_negative(x: &Scalar) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_round_trip() {
        for (text, value) in [
            ("3", int(3)),
            ("-1/2", rat(-1, 2)),
            ("4/8", rat(1, 2)),
            ("0", zero()),
        ] {
            assert_eq!(parse_scalar(text).unwrap(), value);
        }
        assert_eq!(format_scalar(&rat(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&zero()), "0");
    }

    #[test]
    fn rejects_floats_and_garbage() {
        for bad in ["1.5", "", "1/0", "a", "1/-2", "--1", "/3"] {
            assert!(parse_scalar(bad).is_none(), "{bad}");
        }
    }

    #[test]
    fn normal_form() {
        let x = rat(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }
}

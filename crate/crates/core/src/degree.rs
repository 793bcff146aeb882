//! Exact membership degrees.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational membership value in reduced form.
///
/// Range restrictions (`[0, 1]` for positive membership, `[-1, 0]` for
/// negative membership) are enforced by [`crate::BvfSubset`], not here.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(BigRational);

impl Degree {
    pub fn zero() -> Self {
        Degree(BigRational::zero())
    }

    pub fn one() -> Self {
        Degree(BigRational::one())
    }

    pub fn neg_one() -> Self {
        Degree(-BigRational::one())
    }

    /// `numer / denom`; panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Degree(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Degree(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive_role(&self) -> bool {
        !self.0.is_negative() && self.0 <= BigRational::one()
    }

    pub fn is_negative_role(&self) -> bool {
        !self.0.is_positive() && self.0 >= -BigRational::one()
    }

    /// Fixed-point rendering rounded half away from zero. This is an
    /// approximation and is never parsed back.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        let negative = rounded.is_negative();
        let digits = rounded.abs().to_string();
        let (int, frac) = if places == 0 {
            (digits, String::new())
        } else if digits.len() > places {
            let split = digits.len() - places;
            (digits[..split].to_string(), digits[split..].to_string())
        } else {
            ("0".to_string(), format!("{digits:0>places$}"))
        };
        let sign = if negative { "-" } else { "" };
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn degree_error(text: &str, reason: &str) -> Error {
    Error::Degree {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

fn parse_int(text: &str, digits: &str) -> Result<BigInt> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(degree_error(text, "expected decimal digits"));
    }
    digits
        .parse::<BigInt>()
        .map_err(|_| degree_error(text, "expected decimal digits"))
}

impl FromStr for Degree {
    type Err = Error;

    /// Accepts `p/q`, integers, and finite decimals such as `-0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let magnitude = if let Some((p, q)) = body.split_once('/') {
            let numer = parse_int(text, p)?;
            let denom = parse_int(text, q)?;
            if denom.is_zero() {
                return Err(degree_error(text, "zero denominator"));
            }
            BigRational::new(numer, denom)
        } else if let Some((int, frac)) = body.split_once('.') {
            if int.is_empty() && frac.is_empty() {
                return Err(degree_error(text, "expected decimal digits"));
            }
            let int = if int.is_empty() {
                BigInt::zero()
            } else {
                parse_int(text, int)?
            };
            let (frac_value, scale) = if frac.is_empty() {
                (BigInt::zero(), BigInt::one())
            } else {
                (
                    parse_int(text, frac)?,
                    BigInt::from(10u32).pow(frac.len() as u32),
                )
            };
            BigRational::new(int * &scale + frac_value, scale)
        } else {
            BigRational::from_integer(parse_int(text, body)?)
        };
        Ok(Degree(if negative { -magnitude } else { magnitude }))
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Degree {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn parses_all_accepted_forms() {
        assert_eq!(d("1/5"), Degree::new(1, 5));
        assert_eq!(d("2/10"), Degree::new(1, 5));
        assert_eq!(d("0.2"), Degree::new(1, 5));
        assert_eq!(d("-0.5"), Degree::new(-1, 2));
        assert_eq!(d("-4/5"), Degree::new(-4, 5));
        assert_eq!(d("1"), Degree::one());
        assert_eq!(d("-1"), Degree::neg_one());
        assert_eq!(d("0"), Degree::zero());
        assert_eq!(d(".75"), Degree::new(3, 4));
        assert_eq!(d("1."), Degree::one());
        assert_eq!(
            d("0.1000000000000000000000001").to_string(),
            "1000000000000000000000001/10000000000000000000000000"
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "-", "1/0", "a", "1/-2", "1.2.3", ".", "0x1", "1e3", "--1",
        ] {
            assert!(bad.parse::<Degree>().is_err(), "{bad}");
        }
    }

    #[test]
    fn displays_reduced_form() {
        assert_eq!(Degree::new(7, 10).to_string(), "7/10");
        assert_eq!(Degree::new(-8, 10).to_string(), "-4/5");
        assert_eq!(Degree::new(10, 10).to_string(), "1");
        assert_eq!(Degree::new(0, 3).to_string(), "0");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Degree::new(1, 3).to_decimal(4), "0.3333");
        assert_eq!(Degree::new(-2, 3).to_decimal(2), "-0.67");
        assert_eq!(Degree::new(-1, 200).to_decimal(2), "-0.01");
        assert_eq!(Degree::one().to_decimal(3), "1.000");
        assert_eq!(Degree::new(1, 2).to_decimal(0), "1");
    }

    #[test]
    fn role_ranges() {
        assert!(Degree::new(1, 2).is_positive_role());
        assert!(!Degree::new(3, 2).is_positive_role());
        assert!(Degree::new(-1, 2).is_negative_role());
        assert!(Degree::zero().is_negative_role() && Degree::zero().is_positive_role());
    }

    proptest! {
        #[test]
        fn text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
            let x = Degree::new(p, q);
            let back: Degree = x.to_string().parse().unwrap();
            prop_assert_eq!(&back, &x);
            let json = serde_json::to_string(&x).unwrap();
            let back: Degree = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn decimal_input_is_exact(int in 0u32..100, frac in 0u32..10_000) {
            let text = format!("{int}.{frac:04}");
            let x: Degree = text.parse().unwrap();
            prop_assert_eq!(x, Degree::new(i64::from(int) * 10_000 + i64::from(frac), 10_000));
        }
    }
}

//! Exact rational scalars.
//!
//! Every number in this library is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. There is no
//! floating-point fallback anywhere. Rationals print and parse as `"p/q"`
//! (or just `"n"` for integers), which is also their JSON form.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics on q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Renders in lowest terms, `"p/q"` or `"n"` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"n"`, accepting surrounding whitespace.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
    }
}

/// Integer binomial coefficient C(n, r) for arbitrary integer n and r >= 0,
/// as a rational: n(n-1)...(n-r+1)/r!.
pub fn binom_int(n: &Rat, r: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..r {
        acc *= n - rat_int(i as i64);
        acc /= rat_int(i as i64 + 1);
    }
    acc
}

/// (-1)^n.
pub fn sign_pow(n: u64) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// True iff the rational is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Floor of a rational as a BigInt.
pub fn rat_floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// Nearest integer to r (ties go up).
pub fn rat_round(r: &Rat) -> BigInt {
    rat_floor(&(r + rat(1, 2)))
}

/// |r|.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

pub mod serde_rat {
    //! serde adapter: a `Rat` field serializes as its `"p/q"` string.
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        rat_from_str(&s).map_err(de::Error::custom)
    }
}

pub mod serde_rat_vec {
    //! serde adapter for `Vec<Rat>` as a list of `"p/q"` strings.
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(rat_to_string).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<Rat>, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        strs.iter().map(|s| rat_from_str(s).map_err(de::Error::custom)).collect()
    }
}

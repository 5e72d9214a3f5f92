//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored low-degree-first with trailing zeros trimmed, so
//! the empty vector is the zero polynomial and `deg = len - 1` otherwise.
//! This representation serializes as a JSON array of rational strings,
//! e.g. `["0","-2/3","0","32/3"]`.
//!
//! Besides ring arithmetic the module provides the small polynomial toolkit
//! the rest of the library leans on: shifts `p(x+c)`, binomial polynomials
//! `C(x,r)`, monic gcd, squarefreeness via `gcd(p, p')`, and exact rational
//! roots via the rational-root theorem. No numerical root-finding anywhere.

use crate::error::{Error, Result};
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// From low-degree-first coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// p(x + c), computed exactly via Horner on (x + c).
    pub fn shift(&self, c: &Rat) -> Poly {
        let shift_base = Poly::from_coeffs(vec![c.clone(), Rat::one()]);
        self.compose(&shift_base)
    }

    /// p(q(x)).
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut n: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Leading coefficient scaled to 1. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    /// Panics if d is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let dlc = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coeff().unwrap() / &dlc;
            let k = rd - dd;
            q[k] = factor.clone();
            let mut new_coeffs = rem.coeffs.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                new_coeffs[i + k] -= c * &factor;
            }
            rem = Poly::from_coeffs(new_coeffs);
        }
        (Poly::from_coeffs(q), rem)
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// True iff d divides self with zero remainder.
    pub fn divisible_by(&self, d: &Poly) -> bool {
        self.div_rem(d).1.is_zero()
    }

    /// Newton forward-difference coefficients: the unique c_r with
    /// p(x) = sum_r c_r * C(x, r). Computed as iterated differences at 0.
    pub fn newton_coeffs(&self) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        let mut q = self.clone();
        while !q.is_zero() {
            out.push(q.coeff(0));
            q = &q.shift(&Rat::one()) - &q;
        }
        out
    }
}

/// The binomial polynomial C(x, r) = x(x-1)...(x-r+1)/r!, with C(x, 0) = 1.
pub fn binom_poly(r: usize) -> Poly {
    let mut p = Poly::one();
    for i in 0..r {
        let factor = Poly::from_coeffs(vec![rat_int(-(i as i64)), Rat::one()]);
        p = &p * &factor;
        p = p.scale(&rat_int(i as i64 + 1).recip());
    }
    p
}

/// q(x) = p(x + c). Free-function spelling of [`Poly::shift`].
pub fn poly_shift(p: &Poly, c: &Rat) -> Poly {
    p.shift(c)
}

/// Monic gcd over the rationals. gcd(p, 0) = monic(p); gcd(0, 0) is an error.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Result<Poly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdUndefined);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Multiplicity-one test over the complex numbers, decided rationally:
/// p is squarefree iff gcd(p, p') is constant.
pub fn is_squarefree(p: &Poly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(g.degree() == Some(0))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // positive divisors by trial division; inputs here are coefficient-sized
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            primes.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { BigInt::one() } else { BigInt::from(2) };
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let cur = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(cur.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

/// All rational roots with multiplicity, sorted ascending, via the
/// rational-root theorem after clearing denominators.
pub fn rational_roots(p: &Poly) -> Result<Vec<(Rat, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots: Vec<(Rat, usize)> = Vec::new();
    let mut q = p.clone();

    // x^v factor
    let v = q.coeffs.iter().take_while(|c| c.is_zero()).count();
    if v > 0 {
        roots.push((Rat::zero(), v));
        q = Poly::from_coeffs(q.coeffs[v..].to_vec());
    }
    if q.degree() == Some(0) {
        return Ok(roots);
    }

    // clear denominators and content: primitive integer coefficients
    let mut lcm = BigInt::one();
    for c in q.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = q.coeffs().iter().map(|c| c.numer() * &lcm / c.denom()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();

    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            if num.gcd(&den) != BigInt::one() {
                continue;
            }
            for cand in [Rat::new(num.clone(), den.clone()), Rat::new(-num.clone(), den.clone())] {
                if q.eval(&cand).is_zero() {
                    let lin = Poly::from_coeffs(vec![-cand.clone(), Rat::one()]);
                    let mut mult = 0usize;
                    while q.divisible_by(&lin) {
                        q = q.div_exact(&lin);
                        mult += 1;
                    }
                    if mult > 0 {
                        roots.push((cand, mult));
                    }
                }
            }
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = rat_to_string(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{cs}")?,
                _ => {
                    if c.abs().is_one() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{cs}*x")?;
                    }
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs
            .iter()
            .map(rat_to_string)
            .collect::<Vec<_>>()
            .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(de)?;
        let coeffs = strs
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Result<Vec<_>>>()
            .map_err(de::Error::custom)?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Parses a polynomial from its JSON form, a list of coefficients
/// low-degree-first. Accepts rational strings ("32/3") as well as bare
/// integers, so both `["0","-2/3","0","32/3"]` and `[0,2]` parse.
pub fn poly_from_json(s: &str) -> Result<Poly> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("polynomial JSON: {e}")))?;
    let coeffs = values
        .iter()
        .map(|v| match v {
            serde_json::Value::String(s) => rat_from_str(s),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(rat_int)
                .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
            other => Err(Error::Parse(format!("bad coefficient {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn binom_poly_small() {
        assert_eq!(binom_poly(0), Poly::one());
        assert_eq!(binom_poly(1), Poly::x());
        // C(x,2) = (x^2 - x)/2
        assert_eq!(binom_poly(2), Poly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat(1, 2)]));
    }

    #[test]
    fn binom_poly_matches_integer_binomial() {
        // C(5,3) = 10
        assert_eq!(binom_poly(3).eval(&rat_int(5)), rat_int(10));
        for n in 0..10i64 {
            for r in 0..10usize {
                let expect = crate::rat::binom_int(&rat_int(n), r);
                assert_eq!(binom_poly(r).eval(&rat_int(n)), expect);
            }
        }
    }

    #[test]
    fn shift_basic() {
        // (x+1)^2 = x^2 + 2x + 1
        let p = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(p.shift(&rat_int(1)), Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn shift_inverse() {
        let p = Poly::from_coeffs(vec![rat(1, 3), rat(-2, 7), rat_int(5), rat(9, 2)]);
        let c = rat(5, 3);
        assert_eq!(p.shift(&c).shift(&(-c.clone())), p);
    }

    #[test]
    fn shifted_sum_of_x_matches_h_for_linear_g() {
        // sum_{j=0..r} (x - j) done via shift equals the arithmetic series
        let x = Poly::x();
        for r in 0..8i64 {
            let mut s = Poly::zero();
            for j in 0..=r {
                s = &s + &x.shift(&rat_int(-j));
            }
            let expect = &x.scale(&rat_int(r + 1))
                - &Poly::constant(rat_int(r * (r + 1) / 2));
            assert_eq!(s, expect);
        }
    }

    #[test]
    fn div_rem_and_gcd() {
        // (x^2 - 1, x - 1) -> x - 1
        let p = Poly::from_ints(&[-1, 0, 1]);
        let d = Poly::from_ints(&[-1, 1]);
        assert_eq!(poly_gcd(&p, &d).unwrap(), d);
        // gcd with zero is monic(p)
        let q = Poly::from_ints(&[2, 0, 2]);
        assert_eq!(poly_gcd(&q, &Poly::zero()).unwrap(), Poly::from_coeffs(vec![Rat::one(), Rat::zero(), Rat::one()]));
        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Err(Error::GcdUndefined));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&Poly::from_ints(&[-1, 0, 1])).unwrap());
        // (x-1)^2
        assert!(!is_squarefree(&Poly::from_ints(&[1, -2, 1])).unwrap());
        assert!(is_squarefree(&Poly::zero()).is_err());
    }

    #[test]
    fn roots_of_g2() {
        // g_2 = (2/3)x(16x^2 - 1): roots 0, 1/4, -1/4
        let g2 = Poly::from_coeffs(vec![rat_int(0), rat(-2, 3), rat_int(0), rat(32, 3)]);
        let roots = rational_roots(&g2).unwrap();
        assert_eq!(
            roots,
            vec![(rat(-1, 4), 1), (rat_int(0), 1), (rat(1, 4), 1)]
        );
    }

    #[test]
    fn roots_none_and_multiplicity() {
        // x^2 + 1 has no rational roots
        assert!(rational_roots(&Poly::from_ints(&[1, 0, 1])).unwrap().is_empty());
        // x^2(x - 3/2)^2: 0 with mult 2, 3/2 with mult 2
        let lin = Poly::from_coeffs(vec![rat(-3, 2), Rat::one()]);
        let p = &Poly::from_ints(&[0, 0, 1]) * &(&lin * &lin);
        assert_eq!(rational_roots(&p).unwrap(), vec![(rat_int(0), 2), (rat(3, 2), 2)]);
    }

    #[test]
    fn newton_coeffs_reconstruct() {
        let p = Poly::from_coeffs(vec![rat(3, 2), rat(-1, 3), rat_int(2), rat(7, 5)]);
        let cs = p.newton_coeffs();
        let mut back = Poly::zero();
        for (r, c) in cs.iter().enumerate() {
            back = &back + &binom_poly(r).scale(c);
        }
        assert_eq!(back, p);
    }

    #[test]
    fn json_round_trip() {
        let g2 = Poly::from_coeffs(vec![rat_int(0), rat(-2, 3), rat_int(0), rat(32, 3)]);
        let s = serde_json::to_string(&g2).unwrap();
        assert_eq!(s, r#"["0","-2/3","0","32/3"]"#);
        assert_eq!(poly_from_json(&s).unwrap(), g2);
    }

    #[test]
    fn display() {
        let g2 = Poly::from_coeffs(vec![rat_int(0), rat(-2, 3), rat_int(0), rat(32, 3)]);
        assert_eq!(g2.to_string(), "32/3*x^3 - 2/3*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}

//! Exact coefficient rings.
//!
//! A ring is a small value object that owns its parameters (the modulus of a
//! prime field, say) and performs arithmetic on plain element values.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Eq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Short tag used in reports: `Z`, `Q`, `Fp:5`, `Z[x]`.
    fn descriptor(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn pow(&self, a: &Self::Elem, e: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Exact JSON rendering: a number when it fits in `i64`, else a string.
    fn to_json(&self, a: &Self::Elem) -> Value {
        let s = self.format(a);
        match s.parse::<i64>() {
            Ok(v) => Value::from(v),
            Err(_) => Value::String(s),
        }
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

/// Rings on which sparse elimination is supported: fields, and the integers
/// via fraction-free steps.
pub trait EliminationDomain: Ring {
    /// `(a, b)` with `a ≠ 0` and `a·target − b·pivot = 0`.
    fn cancel(&self, pivot: &Self::Elem, target: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Rescales a row by a unit of the fraction field to keep entries small.
    fn normalize(&self, row: &mut [Self::Elem]);

    /// Whether `a` is a unit of this ring's fraction field (nonzero).
    fn is_nonzero(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Integers;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

/// `GF(p)` with `p < 2^32`, elements stored as canonical residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// `Z[x]`, the ring of the generic loop parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct IntPolys;

/// Integer polynomial, coefficients in increasing degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigInt>);

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "Z".into()
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigInt> {
        s.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
    }
}

impl EliminationDomain for Integers {
    fn cancel(&self, pivot: &BigInt, target: &BigInt) -> (BigInt, BigInt) {
        let g = pivot.gcd(target);
        (pivot / &g, target / &g)
    }

    fn normalize(&self, row: &mut [BigInt]) {
        let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if !g.is_zero() && !g.is_one() {
            for v in row.iter_mut() {
                *v /= &g;
            }
        }
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "Q".into()
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl EliminationDomain for Rationals {
    fn cancel(&self, pivot: &BigRational, target: &BigRational) -> (BigRational, BigRational) {
        (BigRational::one(), target / pivot)
    }

    /// Scales the row to a primitive integer vector.
    fn normalize(&self, row: &mut [BigRational]) {
        let mut l = BigInt::one();
        for v in row.iter() {
            l = l.lcm(v.denom());
        }
        let mut g = BigInt::zero();
        for v in row.iter() {
            g = g.gcd(&(v.numer() * (&l / v.denom())));
        }
        if g.is_zero() {
            return;
        }
        let scale = BigRational::new(l, g);
        if !scale.is_one() {
            for v in row.iter_mut() {
                *v = &*v * &scale;
            }
        }
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_i128(v as i128)
    }
    fn from_bigint(&self, v: &BigInt) -> u64 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn descriptor(&self) -> String {
        format!("Fp:{}", self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let v: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))?;
        Ok(self.from_bigint(&v))
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (*a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        Some(acc)
    }
}

impl EliminationDomain for PrimeField {
    fn cancel(&self, pivot: &u64, target: &u64) -> (u64, u64) {
        (1, self.div(target, pivot).expect("pivot is nonzero"))
    }

    fn normalize(&self, _row: &mut [u64]) {}
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Evaluates into another ring, sending `x` to `at`.
    pub fn eval_in<R: Ring>(&self, ring: &R, at: &R::Elem) -> R::Elem {
        self.0.iter().rev().fold(ring.zero(), |acc, c| {
            ring.add(&ring.mul(&acc, at), &ring.from_bigint(c))
        })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", IntPolys.format(self))
    }
}

impl Ring for IntPolys {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly(Vec::new())
    }
    fn one(&self) -> Poly {
        Poly::constant(BigInt::one())
    }
    fn from_i64(&self, v: i64) -> Poly {
        Poly::constant(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> Poly {
        Poly::constant(v.clone())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.0.len().max(b.0.len());
        let z = BigInt::zero();
        Poly::new(
            (0..len)
                .map(|i| a.0.get(i).unwrap_or(&z) + b.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }
    fn neg(&self, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|c| -c).collect())
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        Poly::new(out)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.0.is_empty()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn descriptor(&self) -> String {
        "Z[x]".into()
    }
    fn format(&self, a: &Poly) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (deg, c) in a.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            let show_coeff = deg == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match deg {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{deg}")),
            }
        }
        out
    }

    /// Accepts sums of terms `c`, `cx`, `cx^k` with optional signs, e.g.
    /// `x`, `-3`, `2x^2-x+1`.
    fn parse(&self, s: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("not an integer polynomial: {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = self.zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, deg) = match body.find('x') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = &body[..pos];
                    let c = if c.is_empty() {
                        BigInt::one()
                    } else {
                        c.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(bad)?
                    };
                    (c, deg)
                }
            };
            let mut coeffs = vec![BigInt::zero(); deg + 1];
            coeffs[deg] = coeff * sign;
            acc = self.add(&acc, &Poly::new(coeffs));
        }
        Ok(acc)
    }

    fn to_json(&self, a: &Poly) -> Value {
        if a.0.len() <= 1 {
            let c = a.0.first().cloned().unwrap_or_default();
            if let Some(v) = c.to_i64() {
                return Value::from(v);
            }
        }
        Value::String(self.format(a))
    }
}

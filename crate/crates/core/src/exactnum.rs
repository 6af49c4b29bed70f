//! Exact rationals, residues mod n, Hirzebruch–Jung continued fractions and
//! the numbers h, e, B attached to a cyclic quotient singularity.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced rational number with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fraction(Ratio<i64>);

impl Fraction {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Fraction(Ratio::new(numer, denom)))
    }

    pub const fn from_integer(n: i64) -> Self {
        Fraction(Ratio::new_raw(n, 1))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn floor(&self) -> i64 {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> i64 {
        self.0.ceil().to_integer()
    }

    pub fn abs(&self) -> Self {
        Fraction(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Fraction(self.0.recip()))
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a fraction: {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let p: i64 = p.trim().parse().map_err(|_| bad())?;
                let q: i64 = q.trim().parse().map_err(|_| bad())?;
                Fraction::new(p, q)
            }
            None => Ok(Fraction::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction(self.0 $op rhs.0)
            }
        }
        impl $tr<i64> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: i64) -> Fraction {
                Fraction(self.0 $op Ratio::from_integer(rhs))
            }
        }
    };
}

forward_binop!(Add, add, +);
forward_binop!(Sub, sub, -);
forward_binop!(Mul, mul, *);
// Division by zero panics, as for the primitive integer types.
forward_binop!(Div, div, /);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl AddAssign for Fraction {
    fn add_assign(&mut self, rhs: Fraction) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Fraction {
    fn sub_assign(&mut self, rhs: Fraction) {
        self.0 -= rhs.0;
    }
}

impl Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, x| acc + x)
    }
}

impl Zero for Fraction {
    fn zero() -> Self {
        Fraction::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Fraction {
    fn one() -> Self {
        Fraction::one()
    }
}

/// Least non-negative residue of `a` modulo `n`.
pub fn residue(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

/// Inverse of `a` modulo `n`, or `None` when `a` is not a unit.
pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let g = a.extended_gcd(&n);
    // extended_gcd on a negative input may return -1 as the gcd
    if g.gcd.abs() != 1 {
        return None;
    }
    Some(residue(g.x * g.gcd, n))
}

pub fn is_unit(a: i64, n: i64) -> bool {
    a.gcd(&n) == 1
}

/// Expands `n/q` as the Hirzebruch–Jung continued fraction
/// `b_1 - 1/(b_2 - 1/(... - 1/b_k))` with every `b_i >= 2`.
pub fn hj_expand(n: i64, q: i64) -> Result<Vec<i64>> {
    if n < 2 || q <= 0 || q >= n {
        return Err(Error::Domain(format!("need 0 < q < n with n >= 2, got n={n}, q={q}")));
    }
    if n.gcd(&q) != 1 {
        return Err(Error::Domain(format!("gcd({n}, {q}) != 1")));
    }
    let (mut num, mut den) = (n, q);
    let mut out = Vec::new();
    while den > 0 {
        let b = Integer::div_ceil(&num, &den);
        out.push(b);
        (num, den) = (den, b * den - num);
    }
    Ok(out)
}

/// Evaluates a Hirzebruch–Jung string back to the reduced pair `(n, q)`.
pub fn hj_evaluate(string: &[i64]) -> Result<(i64, i64)> {
    if string.is_empty() {
        return Err(Error::Domain("empty continued fraction".into()));
    }
    if let Some(b) = string.iter().find(|&&b| b < 2) {
        return Err(Error::Domain(format!("entry {b} < 2 in continued fraction")));
    }
    // Fold from the tail: value = num/den, b - den/num = (b*num - den)/num.
    let (mut num, mut den) = (1i64, 0i64);
    for &b in string.iter().rev() {
        (num, den) = (b * num - den, num);
    }
    let g = num.gcd(&den);
    Ok((num / g, den / g))
}

/// The cyclic quotient singularity `1/n(1, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SingularityType {
    pub n: i64,
    pub q: i64,
}

impl SingularityType {
    pub fn new(n: i64, q: i64) -> Result<Self> {
        if n < 2 || q <= 0 || q >= n {
            return Err(Error::Domain(format!("1/{n}(1,{q}) needs n >= 2 and 0 < q < n")));
        }
        if !is_unit(q, n) {
            return Err(Error::Domain(format!("1/{n}(1,{q}) needs gcd(n, q) = 1")));
        }
        Ok(SingularityType { n, q })
    }

    /// `q'` with `q q' = 1 (mod n)`; `1/n(1,q)` and `1/n(1,q')` are isomorphic.
    pub fn dual_q(&self) -> i64 {
        mod_inverse(self.q, self.n).expect("q is a unit by construction")
    }

    pub fn dual(&self) -> SingularityType {
        SingularityType { n: self.n, q: self.dual_q() }
    }

    pub fn is_isomorphic(&self, other: &SingularityType) -> bool {
        self.n == other.n && (self.q == other.q || self.q == other.dual_q())
    }

    /// Rational double point of type `A_{n-1}`.
    pub fn is_rdp(&self) -> bool {
        self.q == self.n - 1
    }

    pub fn resolution(&self) -> HJResolution {
        let string = hj_expand(self.n, self.q).expect("validated singularity type");
        let (h, e, b) = invariants_from_string(self.n, self.q, self.dual_q(), &string);
        HJResolution { string, h, e, b }
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.n, self.q)
    }
}

/// Resolution data of a cyclic quotient singularity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HJResolution {
    /// Self-intersections `-b_i` of the exceptional chain.
    pub string: Vec<i64>,
    pub h: Fraction,
    pub e: Fraction,
    /// `B = 2e - h`.
    #[serde(rename = "B")]
    pub b: Fraction,
}

impl HJResolution {
    pub fn length(&self) -> usize {
        self.string.len()
    }
}

fn invariants_from_string(n: i64, q: i64, q_dual: i64, string: &[i64]) -> (Fraction, Fraction, Fraction) {
    let k = string.len() as i64;
    let excess: i64 = string.iter().map(|b| b - 2).sum();
    let h = Fraction::from(2) - Fraction(Ratio::new(2 + q + q_dual, n)) - excess;
    let e = Fraction::from(k + 1) - Fraction(Ratio::new(1, n));
    let b = e * 2 - h;
    (h, e, b)
}

/// `(h, e, B)` of a singularity type.
pub fn sing_invariants(t: SingularityType) -> (Fraction, Fraction, Fraction) {
    let r = t.resolution();
    (r.h, r.e, r.b)
}

/// The type of the quotient of the plane by `ζ·(x,y) = (ζ^a x, ζ^b y)`,
/// rescaled to `1/n(1, b·a⁻¹)`. The computed `q` is kept as is.
pub fn normalize_sing(n: i64, a: i64, b: i64) -> Result<SingularityType> {
    let a_inv = mod_inverse(a, n).ok_or_else(|| Error::Domain(format!("{a} is not a unit mod {n}")))?;
    if !is_unit(b, n) {
        return Err(Error::Domain(format!("{b} is not a unit mod {n}")));
    }
    SingularityType::new(n, residue(b * a_inv, n))
}

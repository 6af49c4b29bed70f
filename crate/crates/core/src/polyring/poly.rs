use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Fraction;

/// Exponent vector ordered by graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with rational coefficients over an explicit, ordered list of
/// indeterminates. Binary operations work over the union of the two lists
/// (left operand's variables first).
#[derive(Clone)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Fraction>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn constant(c: impl Into<Fraction>) -> Self {
        let c = c.into();
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(Vec::new()), c);
        }
        p
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Fraction::one());
        Poly { vars: vec![name.to_string()], terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs over `vars`.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Fraction, Vec<u32>)>) -> Result<Self> {
        let mut p = Poly { vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() };
        for (c, e) in terms {
            if e.len() != vars.len() {
                return Err(Error::Domain(format!(
                    "exponent vector of length {} over {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Fraction) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Fraction::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Terms in descending graded-lex order, with exponents over `vars()`.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Fraction)> {
        self.terms.iter().rev()
    }

    pub fn leading_coefficient(&self) -> Option<Fraction> {
        self.terms.iter().next_back().map(|(_, c)| *c)
    }

    /// Variables that actually occur with a nonzero exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Re-expresses the polynomial over `vars`, which must contain every
    /// variable that occurs.
    pub fn with_vars(&self, vars: &[String]) -> Result<Poly> {
        let mut index = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => index.push(Some(j)),
                None if self.terms.keys().all(|m| m.0[i] == 0) => index.push(None),
                None => return Err(Error::Domain(format!("variable {v} missing from target ring"))),
            }
        }
        let mut out = Poly { vars: vars.to_vec(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = index[i] {
                    e[j] = x;
                }
            }
            out.add_term(Monomial(e), *c);
        }
        Ok(out)
    }

    fn aligned(&self, other: &Poly) -> (Poly, Poly) {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        let a = self.with_vars(&vars).expect("union contains all variables");
        let b = other.with_vars(&vars).expect("union contains all variables");
        (a, b)
    }

    pub fn scale(&self, c: Fraction) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, x) in &self.terms {
            out.add_term(m.clone(), *x * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Partial derivative with respect to the named variable.
    pub fn partial(&self, var: &str) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return out;
        };
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.0.clone();
            m2[i] -= 1;
            out.add_term(Monomial(m2), *c * i64::from(e));
        }
        out
    }

    /// Value at a rational point; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &BTreeMap<String, Fraction>) -> Result<Fraction> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match point.get(v) {
                Some(x) => values.push(*x),
                None if self.terms.keys().all(|m| m.0[i] == 0) => values.push(Fraction::zero()),
                None => return Err(Error::Domain(format!("no value given for {v}"))),
            }
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(&values)
                    .fold(*c, |acc, (&e, &x)| (0..e).fold(acc, |a, _| a * x))
            })
            .sum())
    }

    /// Substitutes polynomials for variables.
    pub fn substitute(&self, assignments: &BTreeMap<String, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(*c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = assignments
                    .get(&self.vars[i])
                    .cloned()
                    .unwrap_or_else(|| Poly::var(&self.vars[i]));
                term = &term * &base.pow(e);
            }
            out = &out + &term;
        }
        out
    }

    /// Coefficient vector over an explicit list of monomials (same variable
    /// order as `vars`).
    pub fn coefficients(&self, vars: &[String], basis: &[Monomial]) -> Result<Vec<Fraction>> {
        let p = self.with_vars(vars)?;
        Ok(basis
            .iter()
            .map(|m| p.terms.get(m).copied().unwrap_or_else(Fraction::zero))
            .collect())
    }

    /// Renders over a fixed variable order, terms in descending graded-lex.
    pub fn render_with(&self, vars: &[String]) -> Result<String> {
        Ok(self.with_vars(vars)?.to_string())
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let negative = c.numer() < 0;
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == Fraction::one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (mut a, b) = self.aligned(rhs);
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        a
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(Fraction::from(-1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add
    fn mul(self, rhs: &Poly) -> Poly {
        let (a, b) = self.aligned(rhs);
        let mut out = Poly { vars: a.vars.clone(), terms: BTreeMap::new() };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                out.add_term(Monomial(e), *ca * *cb);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

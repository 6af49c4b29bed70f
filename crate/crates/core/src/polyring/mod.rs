//! Exact multivariate polynomials, 2×2 minors of polynomial matrices,
//! linear-span comparison of relation sets and Jacobian ranks.

mod parse;
mod poly;
pub mod smoothing;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Fraction;
use crate::linalg;

pub use parse::parse_poly;
pub use poly::{Monomial, Poly};
pub use smoothing::{smoothing_certificate, smoothing_matrix, SmoothingReport};

/// Rational point given by coordinate name.
pub type Point = BTreeMap<String, Fraction>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Poly>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Domain("matrix rows have different lengths".into()));
        }
        Ok(PolyMatrix { rows })
    }

    /// Parses each entry with [`parse_poly`].
    pub fn parse(rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(rows)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }
}

/// Orders variables by first appearance across `polys`.
pub fn common_vars<'a>(polys: impl IntoIterator<Item = &'a Poly>) -> Vec<String> {
    let mut vars: Vec<String> = Vec::new();
    for p in polys {
        for v in p.vars() {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
    }
    vars
}

/// Scales so the graded-lex leading coefficient is positive.
fn sign_normalized(p: Poly) -> Poly {
    match p.leading_coefficient() {
        Some(c) if c.numer() < 0 => -p,
        _ => p,
    }
}

/// All nonzero 2×2 minors, without repeats up to sign, in row-pair then
/// column-pair order.
pub fn minors2(m: &PolyMatrix) -> Result<Vec<Poly>> {
    if m.nrows() < 2 || m.ncols() < 2 {
        return Err(Error::Domain(format!(
            "need at least a 2x2 matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let mut out: Vec<Poly> = Vec::new();
    for i in 0..m.nrows() {
        for k in i + 1..m.nrows() {
            for j in 0..m.ncols() {
                for l in j + 1..m.ncols() {
                    let minor = &(m.entry(i, j) * m.entry(k, l)) - &(m.entry(i, l) * m.entry(k, j));
                    if minor.is_zero() {
                        continue;
                    }
                    let minor = sign_normalized(minor);
                    if !out.contains(&minor) {
                        out.push(minor);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Coefficients expressing each side in terms of the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanCertificate {
    /// Row `i` writes `a[i]` as a combination of the members of `b`.
    pub a_in_b: Vec<Vec<Fraction>>,
    pub b_in_a: Vec<Vec<Fraction>>,
}

fn coefficient_vectors(polys: &[Poly], vars: &[String], basis: &[Monomial]) -> Result<Vec<Vec<Fraction>>> {
    polys.iter().map(|p| p.coefficients(vars, basis)).collect()
}

/// Certificate that `a` and `b` span the same `ℚ`-vector space, or `None`.
pub fn span_certificate(a: &[Poly], b: &[Poly]) -> Result<Option<SpanCertificate>> {
    let vars = common_vars(a.iter().chain(b));
    let mut basis: BTreeSet<Monomial> = BTreeSet::new();
    for p in a.iter().chain(b) {
        for (m, _) in p.with_vars(&vars)?.terms() {
            basis.insert(m.clone());
        }
    }
    let basis: Vec<Monomial> = basis.into_iter().collect();
    let va = coefficient_vectors(a, &vars, &basis)?;
    let vb = coefficient_vectors(b, &vars, &basis)?;
    let into = |src: &[Vec<Fraction>], dst: &[Vec<Fraction>]| -> Option<Vec<Vec<Fraction>>> {
        src.iter().map(|v| linalg::express(dst, v)).collect()
    };
    Ok(match (into(&va, &vb), into(&vb, &va)) {
        (Some(a_in_b), Some(b_in_a)) => Some(SpanCertificate { a_in_b, b_in_a }),
        _ => None,
    })
}

pub fn span_equal(a: &[Poly], b: &[Poly]) -> bool {
    matches!(span_certificate(a, b), Ok(Some(_)))
}

/// Rank of the Jacobian matrix of `f` at a rational point of its zero locus.
pub fn jacobian_rank_at(f: &[Poly], point: &Point) -> Result<usize> {
    for p in f {
        let v = p.evaluate(point)?;
        if !v.is_zero() {
            return Err(Error::OffVariety(format!("{p} takes the value {v}")));
        }
    }
    let mut vars = common_vars(f);
    for k in point.keys() {
        if !vars.contains(k) {
            vars.push(k.clone());
        }
    }
    let jac = f
        .iter()
        .map(|p| vars.iter().map(|v| p.partial(v).evaluate(point)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::rank(&jac))
}

/// The point with every listed coordinate set to zero.
pub fn origin(vars: &[&str]) -> Point {
    vars.iter().map(|v| (v.to_string(), Fraction::zero())).collect()
}

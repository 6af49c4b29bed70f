//! Totally branched cyclic covers of the projective line and the character
//! decomposition of their spaces of k-differentials.
//!
//! A cover is modelled as `y^n = Π (x - p_j)^{m_j}` with the `p_j` distinct
//! finite points and every `m_j` a unit mod `n`. The generator acts by
//! `y ↦ ζ y`, so the form `h(x) dx^k / y^s` lies in the eigenspace indexed
//! by `s mod n`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{is_unit, mod_inverse, residue};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverSpec {
    n: i64,
    monodromy: Vec<i64>,
}

impl CoverSpec {
    /// Validates and reduces the monodromy residues into `[0, n)`.
    pub fn new(n: i64, monodromy: impl Into<Vec<i64>>) -> Result<Self> {
        let monodromy: Vec<i64> = monodromy.into();
        if n < 2 {
            return Err(Error::Domain(format!("cover degree must be >= 2, got {n}")));
        }
        if monodromy.is_empty() {
            return Err(Error::Domain("a cover needs at least one branch point".into()));
        }
        let monodromy: Vec<i64> = monodromy.into_iter().map(|m| residue(m, n)).collect();
        if let Some(m) = monodromy.iter().find(|&&m| !is_unit(m, n)) {
            return Err(Error::Domain(format!(
                "monodromy {m} is not a unit mod {n} (cover not totally branched)"
            )));
        }
        let total: i64 = monodromy.iter().sum();
        if total % n != 0 {
            return Err(Error::Domain(format!(
                "monodromy sums to {} mod {n}, expected 0",
                total % n
            )));
        }
        Ok(CoverSpec { n, monodromy })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn monodromy(&self) -> &[i64] {
        &self.monodromy
    }

    pub fn branch_points(&self) -> usize {
        self.monodromy.len()
    }
}

/// Riemann–Hurwitz for a totally branched degree-`n` cover of the line.
pub fn genus(c: &CoverSpec) -> i64 {
    let b = c.branch_points() as i64;
    // 2g - 2 = -2n + b(n - 1)
    (b * (c.n - 1) - 2 * c.n + 2) / 2
}

/// Exponents `r_j = m_j⁻¹ mod n`: the generator acts on a local coordinate at
/// the point over the j-th branch point by `ζ^{r_j}`.
pub fn rotation_numbers(c: &CoverSpec) -> Vec<i64> {
    c.monodromy
        .iter()
        .map(|&m| mod_inverse(m, c.n).expect("unit monodromy"))
        .collect()
}

/// Per-character dimensions of `H⁰(k·K_C)` for a fixed weight `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenDimTable {
    pub k: i64,
    pub dims: Vec<i64>,
}

impl EigenDimTable {
    pub fn total(&self) -> i64 {
        self.dims.iter().sum()
    }

    pub fn modulus(&self) -> i64 {
        self.dims.len() as i64
    }
}

// Dimension bound for forms h(x) dx^k / y^s: degree budget at infinity minus
// the vanishing conditions forced at the branch points (poles of h disallowed).
fn cap(c: &CoverSpec, k: i64, s: i64) -> i64 {
    let n = c.n;
    let total: i64 = c.monodromy.iter().sum();
    let forced: i64 = c
        .monodromy
        .iter()
        .map(|&m| Integer::div_ceil(&(s * m - k * (n - 1)), &n).max(0))
        .sum();
    s * total / n - 2 * k + 1 - forced
}

/// Dimension of the `χ_a`-eigenspace of `H⁰(k·K_C)`.
pub fn eigendims(c: &CoverSpec, k: i64, a: i64) -> Result<i64> {
    if k < 0 {
        return Err(Error::Domain(format!("differential weight must be >= 0, got {k}")));
    }
    let n = c.n;
    let a = residue(a, n);
    let bound = k * (n - 1) + n;
    let mut best = i64::MIN;
    let mut last = a;
    let mut s = a;
    while s <= bound {
        best = best.max(cap(c, k, s));
        last = s;
        s += n;
    }
    // Past the bound every vanishing condition is active and cap(s) is constant.
    assert_eq!(
        cap(c, k, last),
        cap(c, k, last + n),
        "eigendim search bound not stable for {c:?}, k={k}, a={a}"
    );
    Ok(best.max(0))
}

pub fn eigendim_table(c: &CoverSpec, k: i64) -> Result<EigenDimTable> {
    let dims = (0..c.n).map(|a| eigendims(c, k, a)).collect::<Result<Vec<_>>>()?;
    Ok(EigenDimTable { k, dims })
}

/// Sums a character table over the cosets of the subgroup of characters
/// trivial on the order-`d` subgroup: entry `c` collects all `a ≡ c (mod d)`.
pub fn restrict_to_subgroup(t: &EigenDimTable, d: i64) -> Result<Vec<i64>> {
    let n = t.modulus();
    if d < 1 || n % d != 0 {
        return Err(Error::Domain(format!("{d} does not divide {n}")));
    }
    let mut out = vec![0; d as usize];
    for (a, v) in t.dims.iter().enumerate() {
        out[a % d as usize] += v;
    }
    Ok(out)
}

/// Genus of the quotient of the cover by its subgroup of order `d`.
pub fn quotient_genus(c: &CoverSpec, d: i64) -> Result<i64> {
    let t = eigendim_table(c, 1)?;
    Ok(restrict_to_subgroup(&t, d)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover(n: i64, m: &[i64]) -> CoverSpec {
        CoverSpec::new(n, m.to_vec()).unwrap()
    }

    fn table(c: &CoverSpec, k: i64) -> Vec<i64> {
        eigendim_table(c, k).unwrap().dims
    }

    #[test]
    fn validation() {
        assert!(CoverSpec::new(4, vec![1, 1, 1, 2]).is_err());
        assert!(CoverSpec::new(4, vec![1, 1, 1]).is_err());
        assert!(CoverSpec::new(1, vec![1]).is_err());
        assert!(CoverSpec::new(4, vec![]).is_err());
        assert_eq!(cover(4, &[-3, 5, -1, 7]).monodromy(), &[1, 1, 3, 3]);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(genus(&cover(4, &[1, 1, 1, 1])), 3);
        assert_eq!(genus(&cover(4, &[1, 1, 3, 3])), 3);
        assert_eq!(genus(&cover(2, &[1, 1])), 0);
        assert_eq!(genus(&cover(2, &[1; 6])), 2);
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotation_numbers(&cover(4, &[1, 1, 1, 1])), vec![1, 1, 1, 1]);
        assert_eq!(rotation_numbers(&cover(4, &[1, 1, 3, 3])), vec![1, 1, 3, 3]);
        assert_eq!(rotation_numbers(&cover(5, &[2, 2, 2, 4])), vec![3, 3, 3, 4]);
    }

    #[test]
    fn simple_cover_tables() {
        let c = cover(4, &[1, 1, 1, 1]);
        assert_eq!(table(&c, 0), vec![1, 0, 0, 0]);
        assert_eq!(table(&c, 1), vec![0, 0, 1, 2]);
        assert_eq!(table(&c, 2), vec![1, 2, 3, 0]);
        assert_eq!(table(&cover(4, &[1, 1, 3, 3]), 1), vec![0, 1, 1, 1]);
        assert!(eigendims(&c, -1, 0).is_err());
    }

    #[test]
    fn restriction_examples() {
        let t1 = EigenDimTable { k: 1, dims: vec![0, 0, 1, 2] };
        let t2 = EigenDimTable { k: 2, dims: vec![1, 2, 3, 0] };
        assert_eq!(restrict_to_subgroup(&t1, 2).unwrap(), vec![1, 2]);
        assert_eq!(restrict_to_subgroup(&t2, 2).unwrap(), vec![4, 2]);
        assert_eq!(restrict_to_subgroup(&t2, 4).unwrap(), t2.dims);
        assert!(restrict_to_subgroup(&t2, 3).is_err());
    }

    #[test]
    fn quotient_genus_examples() {
        let c = cover(4, &[1, 1, 1, 1]);
        assert_eq!(quotient_genus(&c, 2).unwrap(), 1);
        assert_eq!(quotient_genus(&c, 4).unwrap(), 0);
        assert_eq!(quotient_genus(&c, 1).unwrap(), 3);
    }
}

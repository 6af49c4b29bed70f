//! Product-quotient surfaces `(C1 × C2)/H` where `C1`, `C2` are cyclic covers
//! of the line with the same group `Z_n`, the generator acts as
//! `(z1, z2) ↦ (g·z1, g^twist·z2)` and `H` is the subgroup of order `d`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::curvecover::{eigendim_table, genus, quotient_genus, rotation_numbers, CoverSpec, EigenDimTable};
use crate::error::{Error, Result};
use crate::exactnum::{is_unit, mod_inverse, normalize_sing, residue, Fraction, SingularityType};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PQSpec {
    cover1: CoverSpec,
    cover2: CoverSpec,
    twist: i64,
    d: i64,
}

impl PQSpec {
    pub fn new(cover1: CoverSpec, cover2: CoverSpec, twist: i64, d: i64) -> Result<Self> {
        let n = cover1.n();
        if cover2.n() != n {
            return Err(Error::Domain(format!(
                "covers have different degrees {} and {}",
                n,
                cover2.n()
            )));
        }
        let twist = residue(twist, n);
        if !is_unit(twist, n) {
            return Err(Error::Domain(format!("twist {twist} is not a unit mod {n}")));
        }
        if d < 1 || n % d != 0 {
            return Err(Error::Domain(format!("subgroup order {d} does not divide {n}")));
        }
        Ok(PQSpec { cover1, cover2, twist, d })
    }

    pub fn n(&self) -> i64 {
        self.cover1.n()
    }

    pub fn cover1(&self) -> &CoverSpec {
        &self.cover1
    }

    pub fn cover2(&self) -> &CoverSpec {
        &self.cover2
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn subgroup_order(&self) -> i64 {
        self.d
    }

    /// The same surface with the two factors exchanged.
    pub fn swapped(&self) -> PQSpec {
        let inv = mod_inverse(self.twist, self.n()).expect("twist is a unit");
        PQSpec {
            cover1: self.cover2.clone(),
            cover2: self.cover1.clone(),
            twist: inv,
            d: self.d,
        }
    }

    fn genus_term(&self) -> Fraction {
        let g1 = genus(&self.cover1);
        let g2 = genus(&self.cover2);
        Fraction::new((g1 - 1) * (g2 - 1), self.d).expect("d >= 1")
    }
}

/// Multiset of singular points of the quotient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SingularSet(BTreeMap<SingularityType, usize>);

impl SingularSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: SingularityType, count: usize) {
        if count > 0 {
            *self.0.entry(t).or_default() += count;
        }
    }

    pub fn count(&self, t: &SingularityType) -> usize {
        self.0.get(t).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SingularityType, &usize)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rdp_only(&self) -> bool {
        self.0.keys().all(SingularityType::is_rdp)
    }

    /// Identifies `1/n(1,q)` with `1/n(1,q')`, keeping the smaller of the two.
    pub fn up_to_isomorphism(&self) -> SingularSet {
        let mut out = SingularSet::new();
        for (t, &c) in &self.0 {
            let q = t.q.min(t.dual_q());
            out.insert(SingularityType { n: t.n, q }, c);
        }
        out
    }
}

/// Serialized as `{"1/n(1,q)": count}`.
impl Serialize for SingularSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().map(|(t, c)| (t.to_string(), c)))
    }
}

impl FromIterator<(SingularityType, usize)> for SingularSet {
    fn from_iter<I: IntoIterator<Item = (SingularityType, usize)>>(iter: I) -> Self {
        let mut out = SingularSet::new();
        for (t, c) in iter {
            out.insert(t, c);
        }
        out
    }
}

impl fmt::Display for SingularSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "smooth");
        }
        let parts: Vec<String> = self.0.iter().map(|(t, c)| format!("{c} x {t}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Enumerates the fixed points of the acting subgroup and their types.
pub fn singularities(s: &PQSpec) -> Result<SingularSet> {
    let d = s.d;
    let mut out = SingularSet::new();
    if d == 1 {
        return Ok(out);
    }
    let r1 = rotation_numbers(&s.cover1);
    let r2 = rotation_numbers(&s.cover2);
    for &a in &r1 {
        for &b in &r2 {
            let t = normalize_sing(d, residue(a, d), residue(s.twist * b, d))?;
            out.insert(t, 1);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    #[serde(rename = "K2")]
    pub k2: i64,
    pub e: i64,
    pub q: i64,
    pub chi: i64,
    #[serde(rename = "pg")]
    pub p_g: i64,
    #[serde(rename = "h0_2K")]
    pub h0_2k: Option<i64>,
    pub rdp_only: bool,
    pub minimal_certified: bool,
}

/// Sum of `t1[a]·t2[b]` over the pairs with `a + twist·b ≡ 0 (mod d)`,
/// i.e. the dimension of the invariant part of `V1 ⊗ V2`.
pub fn paired_sum(t1: &EigenDimTable, t2: &EigenDimTable, d: i64, twist: i64) -> Result<i64> {
    let n = t1.modulus();
    if t2.modulus() != n {
        return Err(Error::Domain(format!("tables of sizes {n} and {} do not match", t2.modulus())));
    }
    if d < 1 || n % d != 0 {
        return Err(Error::Domain(format!("{d} does not divide {n}")));
    }
    let mut total = 0;
    for (a, x) in t1.dims.iter().enumerate() {
        for (b, y) in t2.dims.iter().enumerate() {
            if residue(a as i64 + twist * b as i64, d) == 0 {
                total += x * y;
            }
        }
    }
    Ok(total)
}

fn integral(x: Fraction, what: &str) -> Result<i64> {
    x.to_integer()
        .ok_or_else(|| Error::Inconsistency(format!("{what} = {x} is not an integer")))
}

pub fn invariants(s: &PQSpec) -> Result<SurfaceInvariants> {
    let sing = singularities(s)?;
    let base = s.genus_term();
    let (mut sum_h, mut sum_e) = (Fraction::zero(), Fraction::zero());
    for (t, &c) in sing.iter() {
        let r = t.resolution();
        sum_h += r.h * c as i64;
        sum_e += r.e * c as i64;
    }
    let k2 = integral(base * 8 + sum_h, "K^2")?;
    let e = integral(base * 4 + sum_e, "e")?;
    let q = quotient_genus(&s.cover1, s.d)? + quotient_genus(&s.cover2, s.d)?;
    let w1 = eigendim_table(&s.cover1, 1)?;
    let w2 = eigendim_table(&s.cover2, 1)?;
    let p_g = paired_sum(&w1, &w2, s.d, s.twist)?;
    let chi = 1 - q + p_g;
    if 12 * chi != k2 + e {
        return Err(Error::Inconsistency(format!(
            "Noether fails: 12*{chi} != {k2} + {e}"
        )));
    }
    let rdp_only = sing.rdp_only();
    let h0_2k = if rdp_only {
        let q1 = eigendim_table(&s.cover1, 2)?;
        let q2 = eigendim_table(&s.cover2, 2)?;
        Some(paired_sum(&q1, &q2, s.d, s.twist)?)
    } else {
        None
    };
    let minimal_certified = rdp_only && h0_2k == Some(k2 + chi);
    Ok(SurfaceInvariants { k2, e, q, chi, p_g, h0_2k, rdp_only, minimal_certified })
}

/// `ℚ`-bidegree on `P¹ × P¹` of the canonical class of `(C1 × C2)/G`, via
/// Hurwitz for the full quotient map to the quadric.
pub fn canonical_cover_class(s: &PQSpec) -> Result<(Fraction, Fraction)> {
    if s.d != s.n() {
        return Err(Error::Precondition(format!(
            "canonical class on the quadric needs the full group (d = {} != n = {})",
            s.d,
            s.n()
        )));
    }
    let ramification = Fraction::one() - Fraction::new(1, s.n())?;
    let k = |b: usize| Fraction::from(-2) + ramification * b as i64;
    Ok((k(s.cover1.branch_points()), k(s.cover2.branch_points())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalData {
    pub components: i64,
    /// Total `dim T¹`, known only when every point is an `A_k`.
    pub tau_total: Option<i64>,
}

pub fn exceptional_data(s: &PQSpec) -> Result<ExceptionalData> {
    let sing = singularities(s)?;
    let mut components = 0;
    let mut tau = Some(0);
    for (t, &c) in sing.iter() {
        let len = t.resolution().length() as i64;
        components += len * c as i64;
        tau = match tau {
            Some(acc) if t.is_rdp() => Some(acc + len * c as i64),
            _ => None,
        };
    }
    Ok(ExceptionalData { components, tau_total: tau })
}

/// `K²` after smoothing the given `1/4(1,1)` points and minimally resolving
/// the rest.
pub fn partial_smoothing_k2(s: &PQSpec, smoothed: &SingularSet) -> Result<i64> {
    let sing = singularities(s)?;
    let t_point = SingularityType::new(4, 1)?;
    for (t, &c) in smoothed.iter() {
        if *t != t_point {
            return Err(Error::Domain(format!("{t} is not a smoothable 1/4(1,1) point")));
        }
        if c > sing.count(t) {
            return Err(Error::Domain(format!(
                "cannot smooth {c} points of type {t}: only {} present",
                sing.count(t)
            )));
        }
    }
    let mut k2 = s.genus_term() * 8;
    for (t, &c) in sing.iter() {
        let kept = c - smoothed.count(t);
        k2 += t.resolution().h * kept as i64;
    }
    integral(k2, "K^2")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple() -> CoverSpec {
        CoverSpec::new(4, vec![1, 1, 1, 1]).unwrap()
    }

    fn mixed() -> CoverSpec {
        CoverSpec::new(4, vec![1, 1, 3, 3]).unwrap()
    }

    fn sing(n: i64, q: i64) -> SingularityType {
        SingularityType::new(n, q).unwrap()
    }

    fn example1() -> PQSpec {
        PQSpec::new(simple(), simple(), 3, 4).unwrap()
    }
    fn example2() -> PQSpec {
        PQSpec::new(simple(), simple(), 1, 4).unwrap()
    }
    fn example3() -> PQSpec {
        PQSpec::new(simple(), mixed(), 1, 4).unwrap()
    }
    fn y() -> PQSpec {
        PQSpec::new(simple(), simple(), 3, 2).unwrap()
    }

    #[test]
    fn spec_validation() {
        let c2 = CoverSpec::new(2, vec![1, 1]).unwrap();
        assert!(PQSpec::new(simple(), c2, 1, 2).is_err());
        assert!(PQSpec::new(simple(), simple(), 2, 4).is_err());
        assert!(PQSpec::new(simple(), simple(), 1, 3).is_err());
    }

    #[test]
    fn singular_sets() {
        let one = |t, c| [(t, c)].into_iter().collect::<SingularSet>();
        assert_eq!(singularities(&example1()).unwrap(), one(sing(4, 3), 16));
        assert_eq!(singularities(&example2()).unwrap(), one(sing(4, 1), 16));
        assert_eq!(
            singularities(&example3()).unwrap(),
            [(sing(4, 1), 8), (sing(4, 3), 8)].into_iter().collect()
        );
        assert_eq!(singularities(&y()).unwrap(), one(sing(2, 1), 16));
        let y1 = PQSpec::new(simple(), simple(), 1, 2).unwrap();
        assert_eq!(singularities(&y1).unwrap(), one(sing(2, 1), 16));
    }

    #[test]
    fn invariants_of_the_four_scenarios() {
        let i = invariants(&example1()).unwrap();
        assert_eq!((i.k2, i.e, i.q, i.p_g, i.chi, i.h0_2k), (8, 64, 0, 5, 6, Some(14)));
        assert!(i.minimal_certified);
        let i = invariants(&example2()).unwrap();
        assert_eq!((i.k2, i.e, i.q, i.p_g, i.chi, i.h0_2k), (-8, 32, 0, 1, 2, None));
        assert!(!i.minimal_certified);
        let i = invariants(&example3()).unwrap();
        assert_eq!((i.k2, i.e, i.q, i.p_g, i.chi), (0, 48, 0, 3, 4));
        assert!(!i.minimal_certified);
        let i = invariants(&y()).unwrap();
        assert_eq!((i.k2, i.e, i.q, i.p_g, i.chi, i.h0_2k), (16, 32, 2, 5, 4, Some(20)));
        assert!(i.minimal_certified);
    }

    #[test]
    fn paired_sum_examples() {
        let w = EigenDimTable { k: 1, dims: vec![0, 0, 1, 2] };
        let q = EigenDimTable { k: 2, dims: vec![1, 2, 3, 0] };
        assert_eq!(paired_sum(&w, &w, 4, 3).unwrap(), 5);
        assert_eq!(paired_sum(&w, &w, 4, 1).unwrap(), 1);
        assert_eq!(paired_sum(&w, &w, 1, 1).unwrap(), 9);
        assert_eq!(paired_sum(&q, &q, 2, 1).unwrap(), 20);
        let short = EigenDimTable { k: 1, dims: vec![0, 1] };
        assert!(paired_sum(&w, &short, 2, 1).is_err());
    }

    #[test]
    fn canonical_class() {
        let one = Fraction::one();
        assert_eq!(canonical_cover_class(&example1()).unwrap(), (one, one));
        assert_eq!(canonical_cover_class(&example2()).unwrap(), (one, one));
        let c = CoverSpec::new(2, vec![1, 1]).unwrap();
        let s = PQSpec::new(c.clone(), c, 1, 2).unwrap();
        assert_eq!(canonical_cover_class(&s).unwrap(), (Fraction::from(-1), Fraction::from(-1)));
        assert!(matches!(canonical_cover_class(&y()), Err(Error::Precondition(_))));
    }

    #[test]
    fn exceptional() {
        assert_eq!(
            exceptional_data(&example1()).unwrap(),
            ExceptionalData { components: 48, tau_total: Some(48) }
        );
        assert_eq!(
            exceptional_data(&y()).unwrap(),
            ExceptionalData { components: 16, tau_total: Some(16) }
        );
        assert_eq!(
            exceptional_data(&example2()).unwrap(),
            ExceptionalData { components: 16, tau_total: None }
        );
    }

    #[test]
    fn partial_smoothing() {
        let t = sing(4, 1);
        let smooth = |c| [(t, c)].into_iter().collect::<SingularSet>();
        assert_eq!(partial_smoothing_k2(&example2(), &smooth(16)).unwrap(), 8);
        assert_eq!(partial_smoothing_k2(&example2(), &smooth(10)).unwrap(), 2);
        assert_eq!(partial_smoothing_k2(&example3(), &smooth(8)).unwrap(), 8);
        assert_eq!(partial_smoothing_k2(&example2(), &SingularSet::new()).unwrap(), -8);
        assert!(partial_smoothing_k2(&example2(), &smooth(17)).is_err());
        let wrong = [(sing(4, 3), 1)].into_iter().collect();
        assert!(partial_smoothing_k2(&example1(), &wrong).is_err());
    }
}

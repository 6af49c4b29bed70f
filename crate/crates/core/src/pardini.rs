//! Totally ramified cyclic covers of the quadric `Q = P¹ × P¹` described by
//! their building data: branch divisors `D_m` indexed by the unit residues
//! `m` and eigensheaves `L_a`, tied together by the carry table `ε`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{is_unit, residue};
use crate::polyring::Poly;

/// Bidegree `(a, b)` of a line bundle on the quadric.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct BiDegree {
    pub a: i64,
    pub b: i64,
}

impl BiDegree {
    pub const fn new(a: i64, b: i64) -> Self {
        BiDegree { a, b }
    }

    pub const ZERO: BiDegree = BiDegree::new(0, 0);
    pub const CANONICAL: BiDegree = BiDegree::new(-2, -2);

    pub fn h0(&self) -> i64 {
        if self.a >= 0 && self.b >= 0 {
            (self.a + 1) * (self.b + 1)
        } else {
            0
        }
    }

    /// Holomorphic Euler characteristic `(a+1)(b+1)`, valid for all bidegrees.
    pub fn euler_characteristic(&self) -> i64 {
        (self.a + 1) * (self.b + 1)
    }

    pub fn intersect(&self, other: &BiDegree) -> i64 {
        self.a * other.b + self.b * other.a
    }

    pub fn is_zero(&self) -> bool {
        *self == BiDegree::ZERO
    }
}

impl From<[i64; 2]> for BiDegree {
    fn from([a, b]: [i64; 2]) -> Self {
        BiDegree { a, b }
    }
}

impl From<BiDegree> for [i64; 2] {
    fn from(d: BiDegree) -> Self {
        [d.a, d.b]
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(-self.a, -self.b)
    }
}

impl Mul<BiDegree> for i64 {
    type Output = BiDegree;
    fn mul(self, d: BiDegree) -> BiDegree {
        BiDegree::new(self * d.a, self * d.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BuildingData {
    pub n: i64,
    /// Branch divisors `D_m`, keyed by unit residue; absent means zero.
    pub components: BTreeMap<i64, BiDegree>,
    /// `L_a` for `a = 1, …, n-1`.
    pub l: BTreeMap<i64, BiDegree>,
}

impl BuildingData {
    /// `L_a`, with `L_0 = O_Q`.
    pub fn l(&self, a: i64) -> BiDegree {
        self.l.get(&residue(a, self.n)).copied().unwrap_or(BiDegree::ZERO)
    }

    pub fn component(&self, m: i64) -> BiDegree {
        self.components.get(&residue(m, self.n)).copied().unwrap_or(BiDegree::ZERO)
    }
}

/// The carry `⌊(⟨am⟩ + ⟨bm⟩)/n⌋ ∈ {0, 1}`, where `⟨x⟩ = x mod n`.
pub fn epsilon(n: i64, m: i64, a: i64, b: i64) -> i64 {
    (residue(a * m, n) + residue(b * m, n)) / n
}

/// Solves `n·L_a = Σ_m ⟨a·m⟩·D_m` for every nontrivial character `a`.
pub fn solve_building_data(n: i64, components: &BTreeMap<i64, BiDegree>) -> Result<BuildingData> {
    if n < 2 {
        return Err(Error::Domain(format!("cover degree must be >= 2, got {n}")));
    }
    let mut reduced = BTreeMap::new();
    for (&m, &d) in components {
        let m = residue(m, n);
        if !is_unit(m, n) {
            return Err(Error::Domain(format!(
                "component index {m} is not a unit mod {n} (cover not totally ramified)"
            )));
        }
        if !d.is_zero() {
            let e = reduced.entry(m).or_insert(BiDegree::ZERO);
            *e = *e + d;
        }
    }
    let mut l = BTreeMap::new();
    for a in 1..n {
        let scaled = reduced
            .iter()
            .fold(BiDegree::ZERO, |acc, (&m, &d)| acc + residue(a * m, n) * d);
        if scaled.a % n != 0 || scaled.b % n != 0 {
            return Err(Error::Integrality(format!(
                "{n}·L_{a} = {scaled} is not divisible by {n}"
            )));
        }
        l.insert(a, BiDegree::new(scaled.a / n, scaled.b / n));
    }
    Ok(BuildingData { n, components: reduced, l })
}

/// Checks `L_a + L_b = L_{a+b} + Σ_m ε(m,a,b)·D_m` for all nonzero `a, b`.
pub fn verify_cover_relations(bd: &BuildingData) -> bool {
    verify_cover_relations_with(bd, epsilon)
}

/// [`verify_cover_relations`] with a caller-supplied carry function.
pub fn verify_cover_relations_with(bd: &BuildingData, eps: impl Fn(i64, i64, i64, i64) -> i64) -> bool {
    let n = bd.n;
    (1..n).all(|a| {
        (1..n).all(|b| {
            let carried = bd
                .components
                .iter()
                .fold(BiDegree::ZERO, |acc, (&m, &d)| acc + eps(n, m, a, b) * d);
            bd.l(a) + bd.l(b) == bd.l(a + b) + carried
        })
    })
}

/// Characters `χ` allowed in the natural deformation of the `ψ = χ_m`
/// branch section: everything except `ψ⁻¹`.
pub fn deformation_characters(n: i64, m: i64) -> Vec<i64> {
    let excluded = residue(-m, n);
    (0..n).filter(|&c| c != excluded).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NatDefTerm {
    pub psi: i64,
    pub chi: i64,
    pub bidegree: BiDegree,
    pub h0: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NatDefReport {
    pub terms: Vec<NatDefTerm>,
    pub total: i64,
}

/// Dimension of the space of natural deformations,
/// `⊕_ψ ⊕_{χ ∈ S_ψ} H⁰(D_ψ - L_χ)`.
pub fn natdef_dim(bd: &BuildingData) -> NatDefReport {
    let mut terms = Vec::new();
    for (&m, &d) in &bd.components {
        for chi in deformation_characters(bd.n, m) {
            let bidegree = d - bd.l(chi);
            terms.push(NatDefTerm { psi: m, chi, bidegree, h0: bidegree.h0() });
        }
    }
    let total = terms.iter().map(|t| t.h0).sum();
    NatDefReport { terms, total }
}

/// `w_a w_b = (Π_ψ τ_ψ^{ε}) w_{a+b}` for one pair of characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub a: i64,
    pub b: i64,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl Relation {
    /// `lhs - rhs`.
    pub fn poly(&self) -> Poly {
        &self.lhs - &self.rhs
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// Name of the fibre coordinate on `V(L_a⁻¹)`.
pub fn fibre_var(a: i64) -> String {
    format!("w{a}")
}

/// Deformation sections `h_{ψ,χ}`, keyed by `(ψ, χ)` residues.
pub type DeformationSymbols = BTreeMap<(i64, i64), String>;

/// The canonical symbols `σ_m` for the undeformed cover.
pub fn pure_cover_symbols(bd: &BuildingData, prefix: &str) -> DeformationSymbols {
    bd.components.keys().map(|&m| ((m, 0), format!("{prefix}{m}"))).collect()
}

/// Local equations of the natural deformation of the cover: one relation
/// per unordered pair of nontrivial characters, with `w_0 = 1` and
/// `τ_ψ = Σ_χ h_{ψ,χ} w_χ`. Components without a symbol contribute `τ = 0`.
pub fn generate_relations(bd: &BuildingData, deformation: &DeformationSymbols) -> Result<Vec<Relation>> {
    let n = bd.n;
    for &(psi, chi) in deformation.keys() {
        if !bd.components.contains_key(&psi) {
            return Err(Error::Domain(format!("no branch component for ψ = χ_{psi}")));
        }
        if !deformation_characters(n, psi).contains(&chi) {
            return Err(Error::Domain(format!(
                "χ_{chi} is not an admissible deformation character for ψ = χ_{psi}"
            )));
        }
    }
    let w = |a: i64| if a == 0 { Poly::one() } else { Poly::var(&fibre_var(a)) };
    let tau: BTreeMap<i64, Poly> = bd
        .components
        .keys()
        .map(|&psi| {
            let t = deformation
                .range((psi, 0)..(psi, n))
                .fold(Poly::zero(), |acc, (&(_, chi), sym)| &acc + &(&Poly::var(sym) * &w(chi)));
            (psi, t)
        })
        .collect();
    let mut ring: Vec<String> = (1..n).map(fibre_var).collect();
    for sym in deformation.values() {
        if !ring.contains(sym) {
            ring.push(sym.clone());
        }
    }
    let mut out = Vec::new();
    for a in 1..n {
        for b in a..n {
            let lhs = &w(a) * &w(b);
            let coeff = tau
                .iter()
                .fold(Poly::one(), |acc, (&psi, t)| &acc * &t.pow(epsilon(n, psi, a, b) as u32));
            let rhs = &coeff * &w(residue(a + b, n));
            out.push(Relation { a, b, lhs: lhs.with_vars(&ring)?, rhs: rhs.with_vars(&ring)? });
        }
    }
    Ok(out)
}

/// `h⁰(ω_Q ⊗ L_a)` per character; the total is `p_g` of the cover.
pub fn canonical_eigenpieces(bd: &BuildingData) -> Vec<i64> {
    (0..bd.n)
        .map(|a| if a == 0 { BiDegree::CANONICAL.h0() } else { (BiDegree::CANONICAL + bd.l(a)).h0() })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BidoubleInvariants {
    #[serde(rename = "K2")]
    pub k2: i64,
    pub chi: i64,
    #[serde(rename = "pg")]
    pub p_g: i64,
    pub q: i64,
}

/// Invariants of the `Z_2²`-cover of the quadric branched over three smooth,
/// pairwise transverse divisors `D_1, D_2, D_3`.
pub fn bidouble_invariants(d1: BiDegree, d2: BiDegree, d3: BiDegree) -> Result<BidoubleInvariants> {
    let half = |x: BiDegree, which: &str| -> Result<BiDegree> {
        if x.a % 2 != 0 || x.b % 2 != 0 {
            return Err(Error::Integrality(format!("{which} = {x} is not divisible by 2")));
        }
        Ok(BiDegree::new(x.a / 2, x.b / 2))
    };
    let ls = [half(d2 + d3, "D2 + D3")?, half(d1 + d3, "D1 + D3")?, half(d1 + d2, "D1 + D2")?];
    let total = d1 + d2 + d3;
    // 2K = f^*(2K_Q + D1 + D2 + D3) and f has degree 4, so K² = (2K_Q + D)².
    let twice = 2 * BiDegree::CANONICAL + total;
    let k2 = twice.intersect(&twice);
    let chi = BiDegree::ZERO.euler_characteristic() + ls.iter().map(|l| (-*l).euler_characteristic()).sum::<i64>();
    let p_g = ls.iter().map(|l| (BiDegree::CANONICAL + *l).h0()).sum::<i64>();
    Ok(BidoubleInvariants { k2, chi, p_g, q: p_g + 1 - chi })
}

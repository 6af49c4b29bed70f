//! Dimension counts for the tangent sheaf of the quotient and of its
//! resolution, the rank model of the obstruction map `T¹ → H²(Θ)` and the
//! expected dimensions of the comparison families.

use serde::Serialize;

use crate::curvecover::eigendim_table;
use crate::error::{Error, Result};
use crate::pqsurface::{exceptional_data, invariants, singularities, PQSpec, SurfaceInvariants};
use crate::exactnum::residue;

/// `h²(Θ_X)`, computed by Serre duality as the invariant part of
/// `H⁰(Ω¹_Z ⊗ ω_Z)`: pairs of a 1-form on one factor with a quadratic
/// differential on the other.
pub fn h2_theta(s: &PQSpec) -> Result<i64> {
    let w1 = eigendim_table(s.cover1(), 1)?;
    let w2 = eigendim_table(s.cover2(), 1)?;
    let q1 = eigendim_table(s.cover1(), 2)?;
    let q2 = eigendim_table(s.cover2(), 2)?;
    let d = s.subgroup_order();
    let mut total = 0;
    for a in 0..s.n() as usize {
        for b in 0..s.n() as usize {
            if residue(a as i64 + s.twist() * b as i64, d) == 0 {
                total += w1.dims[a] * q2.dims[b] + q1.dims[a] * w2.dims[b];
            }
        }
    }
    Ok(total)
}

/// `h¹(Θ) - h²(Θ) = 10χ - 2K²` for a smooth surface with `h⁰(Θ) = 0`.
pub fn rr_gap(inv: &SurfaceInvariants) -> i64 {
    10 * inv.chi - 2 * inv.k2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionLedger {
    pub h1_s: i64,
    pub h2_s: i64,
    pub h1_x: i64,
    pub h2_x: i64,
    pub components: i64,
}

/// Splits `h¹(Θ_S)` into the part coming from `X` and the local
/// contributions of the exceptional curves. Only valid when `X` has
/// rational double points only.
pub fn resolution_ledger(s: &PQSpec) -> Result<ResolutionLedger> {
    let sing = singularities(s)?;
    if !sing.rdp_only() {
        return Err(Error::Precondition(format!(
            "resolution ledger needs rational double points only, found {sing}"
        )));
    }
    let inv = invariants(s)?;
    let h2_x = h2_theta(s)?;
    let h2_s = h2_x;
    let h1_s = rr_gap(&inv) + h2_s;
    let components = exceptional_data(s)?.components;
    Ok(ResolutionLedger { h1_s, h2_s, h1_x: h1_s - components, h2_x, components })
}

/// Inputs of the obstruction-map model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObModel {
    /// Branch-point counts of the two factors.
    pub d1: i64,
    pub d2: i64,
    /// Kernels of the valuation maps: `h⁰(2K)` of each quotient curve.
    pub k1: i64,
    pub k2: i64,
    /// Total dimension of the summands on which the dual map vanishes.
    pub z: i64,
    pub tau_total: i64,
    pub h1_x: i64,
    pub h2_x: i64,
}

/// `h⁰(2K)` of a smooth curve of genus `g`.
pub fn bicanonical_h0(g: i64) -> i64 {
    match g {
        0 => 0,
        1 => 1,
        _ => 3 * g - 3,
    }
}

impl ObModel {
    /// Assembles the model from a surface spec, deriving everything except
    /// `z`. `k` overrides the valuation kernels when given.
    pub fn from_spec(s: &PQSpec, z: i64, k: Option<(i64, i64)>) -> Result<Self> {
        let ledger = resolution_ledger(s)?;
        let tau_total = exceptional_data(s)?
            .tau_total
            .ok_or_else(|| Error::Precondition("T¹ dimension needs A_k points only".into()))?;
        let (k1, k2) = match k {
            Some(k) => k,
            None => {
                let d = s.subgroup_order();
                let g1 = crate::curvecover::quotient_genus(s.cover1(), d)?;
                let g2 = crate::curvecover::quotient_genus(s.cover2(), d)?;
                (bicanonical_h0(g1), bicanonical_h0(g2))
            }
        };
        Ok(ObModel {
            d1: s.cover1().branch_points() as i64,
            d2: s.cover2().branch_points() as i64,
            k1,
            k2,
            z,
            tau_total,
            h1_x: ledger.h1_x,
            h2_x: ledger.h2_x,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ObLedger {
    pub ob_rank: i64,
    pub ker_ob: i64,
    pub coker_ob: i64,
    pub ext1: i64,
    pub surjective: bool,
}

/// Rank of `ob: T¹ → H²(Θ_X)` for branch points in general position, and
/// `dim Ext¹(Ω¹_X, O_X) = h¹(Θ_X) + dim ker ob`.
///
/// The valuation maps are surjective onto the trace-zero hyperplanes of the
/// branch-point coordinate spaces, which gives rank `(d1 - 1) + (d2 - 1)`;
/// the cokernel must then be accounted for by `k1 + k2 + z`.
pub fn ob_rank_and_ext1(m: &ObModel) -> Result<ObLedger> {
    let fields = [m.d1, m.d2, m.k1, m.k2, m.z, m.tau_total, m.h1_x, m.h2_x];
    if fields.iter().any(|&v| v < 0) {
        return Err(Error::Domain(format!("negative entry in {m:?}")));
    }
    if m.d1 < 1 || m.d2 < 1 {
        return Err(Error::Domain("each factor needs at least one branch point".into()));
    }
    if m.z > m.h2_x {
        return Err(Error::Domain(format!("z = {} exceeds h2 = {}", m.z, m.h2_x)));
    }
    let ob_rank = (m.d1 - 1) + (m.d2 - 1);
    if ob_rank > m.tau_total.min(m.h2_x) {
        return Err(Error::Inconsistency(format!(
            "rank {ob_rank} exceeds min(tau = {}, h2 = {})",
            m.tau_total, m.h2_x
        )));
    }
    let coker_ob = m.h2_x - ob_rank;
    if coker_ob != m.k1 + m.k2 + m.z {
        return Err(Error::Inconsistency(format!(
            "cokernel {coker_ob} != k1 + k2 + z = {}",
            m.k1 + m.k2 + m.z
        )));
    }
    let ker_ob = m.tau_total - ob_rank;
    Ok(ObLedger {
        ob_rank,
        ker_ob,
        coker_ob,
        ext1: m.h1_x + ker_ob,
        surjective: ob_rank == m.h2_x,
    })
}

/// Everything known about the tangent cohomology of one scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangentLedger {
    pub h1_x: i64,
    pub h2_x: i64,
    pub h1_s: i64,
    pub h2_s: i64,
    pub ob_rank: i64,
    pub ker_ob: i64,
    pub ext1: i64,
}

pub fn tangent_ledger(s: &PQSpec, z: i64, k: Option<(i64, i64)>) -> Result<TangentLedger> {
    let r = resolution_ledger(s)?;
    let ob = ob_rank_and_ext1(&ObModel::from_spec(s, z, k)?)?;
    Ok(TangentLedger {
        h1_x: r.h1_x,
        h2_x: r.h2_x,
        h1_s: r.h1_s,
        h2_s: r.h2_s,
        ob_rank: ob.ob_rank,
        ker_ob: ob.ker_ob,
        ext1: ob.ext1,
    })
}

/// Dimension of the family obtained by moving the branch points.
///
/// For the full quotient the points move on the line modulo its
/// automorphisms; for a proper subgroup they move on the fixed intermediate
/// curves with no such reduction.
pub fn esdef_dim(s: &PQSpec) -> i64 {
    esdef_count(
        s.cover1().branch_points() as i64,
        s.cover2().branch_points() as i64,
        s.subgroup_order() == s.n(),
    )
}

/// The branch-point count behind [`esdef_dim`].
pub fn esdef_count(b1: i64, b2: i64, full_quotient: bool) -> i64 {
    if full_quotient {
        (b1 - 3) + (b2 - 3)
    } else {
        b1 + b2
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `h⁰(O_S(k))` for a complete intersection of two hypersurfaces of the
/// given degrees in `P^ambient`, by the Koszul resolution.
pub fn ci_h0(ambient: i64, degrees: (i64, i64), k: i64) -> i64 {
    let (a, b) = degrees;
    let h = |t: i64| if t < 0 { 0 } else { binomial(t + ambient, ambient) };
    h(k) - h(k - a) - h(k - b) + h(k - a - b)
}

/// Moduli count of complete intersections: normal-bundle sections minus
/// `dim PGL(ambient + 1)`.
pub fn ci_def_dim(ambient: i64, degrees: (i64, i64)) -> i64 {
    let pgl = (ambient + 1) * (ambient + 1) - 1;
    ci_h0(ambient, degrees, degrees.0) + ci_h0(ambient, degrees, degrees.1) - pgl
}

/// `h⁰` of a polarization of type `(d1, d2)` on an abelian surface.
pub fn polarization_h0(d1: i64, d2: i64) -> i64 {
    d1 * d2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDims {
    pub polarization_h0: i64,
    /// Abelian surfaces (3) plus the linear system of a `(4,4)` polarization.
    pub def_y_expected: i64,
    /// Branch curves invariant under the involution, for a fixed Kummer.
    pub todorov_invariant_family: i64,
    pub todorov_total: i64,
}

pub fn family_dims() -> FamilyDims {
    let polarization = polarization_h0(4, 4);
    let todorov_invariant_family = polarization / 2 + 2 - 1;
    FamilyDims {
        polarization_h0: polarization,
        def_y_expected: 3 + polarization - 1,
        todorov_invariant_family,
        todorov_total: 3 + todorov_invariant_family,
    }
}

/// True when `h¹(Θ_S)` exceeds the dimension of `Def(X)`, so `Def(S)` is
/// singular and the exceptional curves cannot deform independently.
pub fn independence_check(h1_s: i64, def_dim: i64) -> bool {
    h1_s > def_dim
}

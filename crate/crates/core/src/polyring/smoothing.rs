//! Pointwise smoothness certificate for the one-parameter deformation of the
//! determinantal model of a `1/4(1,1)` point on the product-type cover.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Fraction;
use crate::pardini::{generate_relations, BuildingData, DeformationSymbols};

use super::{jacobian_rank_at, minors2, origin, span_certificate, Poly, PolyMatrix};

/// Local coordinates of the model: the two branch equations and the fibre
/// coordinates.
pub const LOCAL_COORDS: [&str; 5] = ["h1", "h3", "w1", "w2", "w3"];

/// Codimension of a surface in the five-dimensional local model.
pub const EXPECTED_RANK: usize = 3;

/// The symmetric matrix whose 2×2 minors cut out the cover, with the middle
/// entry shifted by `s`.
pub fn smoothing_matrix(s: Fraction) -> PolyMatrix {
    let v = Poly::var;
    PolyMatrix::new(vec![
        vec![v("h3"), v("w1"), v("w2")],
        vec![v("w1"), &v("w2") + &Poly::constant(s), v("w3")],
        vec![v("w2"), v("w3"), v("h1")],
    ])
    .expect("square matrix")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothingReport {
    pub s: Fraction,
    /// The undeformed minors span the natural-deformation relations.
    pub matches_cover: bool,
    pub on_variety: bool,
    pub rank: usize,
    pub rank_at_zero: usize,
    pub expected_rank: usize,
    pub minors: Vec<Poly>,
    pub passed: bool,
}

/// Certifies that the deformation with parameter `s` is smooth at the former
/// singular point while the `s = 0` fibre is singular there.
///
/// `bd` must be the product-type `Z_4` cover with components at `χ_1` and
/// `χ_3`; its natural-deformation relations (with `τ_1 = h1`, `τ_3 = h3`)
/// are checked against the minors of the undeformed matrix first.
pub fn smoothing_certificate(bd: &BuildingData, s: Fraction) -> Result<SmoothingReport> {
    if bd.n != 4 || bd.components.keys().copied().collect::<Vec<_>>() != [1, 3] {
        return Err(Error::Precondition(
            "the determinantal model needs a Z_4 cover branched on components χ_1 and χ_3".into(),
        ));
    }
    let syms: DeformationSymbols = [((1, 0), "h1".to_string()), ((3, 0), "h3".to_string())].into();
    let relations: Vec<Poly> = generate_relations(bd, &syms)?.iter().map(|r| r.poly()).collect();
    let undeformed = minors2(&smoothing_matrix(Fraction::zero()))?;
    let matches_cover = span_certificate(&relations, &undeformed)?.is_some();

    let point = origin(&LOCAL_COORDS);
    let minors = minors2(&smoothing_matrix(s))?;
    let (on_variety, rank) = match jacobian_rank_at(&minors, &point) {
        Ok(r) => (true, r),
        Err(Error::OffVariety(_)) => (false, 0),
        Err(e) => return Err(e),
    };
    let rank_at_zero = jacobian_rank_at(&undeformed, &point)?;
    let passed = matches_cover && on_variety && rank == EXPECTED_RANK && rank_at_zero == 0;
    Ok(SmoothingReport {
        s,
        matches_cover,
        on_variety,
        rank,
        rank_at_zero,
        expected_rank: EXPECTED_RANK,
        minors,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pardini::{solve_building_data, BiDegree};

    fn product_cover() -> BuildingData {
        let c = [(1, BiDegree::new(4, 0)), (3, BiDegree::new(0, 4))].into();
        solve_building_data(4, &c).unwrap()
    }

    #[test]
    fn certificate_passes_for_nonzero_parameters() {
        for s in [Fraction::one(), Fraction::new(1, 2).unwrap(), Fraction::from(-2)] {
            let r = smoothing_certificate(&product_cover(), s).unwrap();
            assert!(r.passed, "{r:?}");
            assert_eq!(r.rank, 3);
        }
    }

    #[test]
    fn certificate_detects_the_singular_fibre() {
        let r = smoothing_certificate(&product_cover(), Fraction::zero()).unwrap();
        assert!(!r.passed);
        assert!(r.on_variety);
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn wrong_cover_is_rejected() {
        let c = [(1, BiDegree::new(4, 4))].into();
        let bd = solve_building_data(4, &c).unwrap();
        assert!(smoothing_certificate(&bd, Fraction::one()).is_err());
        let c = [(1, BiDegree::new(2, 2)), (3, BiDegree::new(2, 2))].into();
        let bd = solve_building_data(4, &c).unwrap();
        let r = smoothing_certificate(&bd, Fraction::one()).unwrap();
        assert!(r.matches_cover);
    }
}

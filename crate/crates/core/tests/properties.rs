use proptest::prelude::*;

use pqsurf::curvecover::{eigendim_table, eigendims, genus, restrict_to_subgroup, CoverSpec};
use pqsurf::exactnum::{is_unit, residue};
use pqsurf::pqsurface::{invariants, paired_sum, singularities, PQSpec};

/// Unit residues mod n, with the last one chosen so the sum is 0 mod n.
/// Returns `None` when the closing residue is not a unit.
fn close_monodromy(n: i64, mut m: Vec<i64>) -> Option<Vec<i64>> {
    let last = residue(-m.iter().sum::<i64>(), n);
    if !is_unit(last, n) {
        return None;
    }
    m.push(last);
    Some(m)
}

fn cover_strategy(ns: &'static [i64], max_b: usize) -> impl Strategy<Value = CoverSpec> {
    prop::sample::select(ns)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec(1..n, 1..max_b)))
        .prop_filter_map("closing residue must be a unit", |(n, m)| {
            let m: Vec<i64> = m.into_iter().filter(|&x| is_unit(x, n)).collect();
            if m.is_empty() {
                return None;
            }
            CoverSpec::new(n, close_monodromy(n, m)?).ok()
        })
}

// Chevalley–Weil for 1-forms: dim = -1 + Σ_j ⟨a·m_j/n⟩ for a ≠ 0, and 0 for a = 0.
fn one_form_oracle(c: &CoverSpec, a: i64) -> i64 {
    let n = c.n();
    if a == 0 {
        return 0;
    }
    let total: i64 = c.monodromy().iter().map(|&m| residue(a * m, n)).sum();
    (total / n - 1).max(0)
}

// Same count for quadratic differentials, written through the residues
// r_j = a·m_j mod n: -3 + Σ r_j/n + #{j : r_j <= n - 2}.
fn quadratic_oracle(c: &CoverSpec, a: i64) -> i64 {
    let n = c.n();
    let r: Vec<i64> = c.monodromy().iter().map(|&m| residue(a * m, n)).collect();
    let sum: i64 = r.iter().sum();
    let low = r.iter().filter(|&&x| x <= n - 2).count() as i64;
    (sum / n - 3 + low).max(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eigendims_sum_to_genus(c in cover_strategy(&[2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12], 8)) {
        let g = genus(&c);
        let t1 = eigendim_table(&c, 1).unwrap();
        prop_assert_eq!(t1.total(), g);
        prop_assert_eq!(t1.dims[0], 0);
        let t0 = eigendim_table(&c, 0).unwrap();
        prop_assert_eq!(t0.total(), 1);
        prop_assert_eq!(t0.dims[0], 1);
        if g >= 2 {
            prop_assert_eq!(eigendim_table(&c, 2).unwrap().total(), 3 * g - 3);
        }
        for a in 0..c.n() {
            prop_assert_eq!(eigendims(&c, 1, a).unwrap(), one_form_oracle(&c, a));
            prop_assert_eq!(eigendims(&c, 2, a).unwrap(), quadratic_oracle(&c, a));
        }
    }

    #[test]
    fn eigendims_ignore_branch_order(c in cover_strategy(&[3, 4, 5, 6, 8], 7), rot in 0usize..8) {
        let mut m = c.monodromy().to_vec();
        m.reverse();
        let k = m.len();
        m.rotate_left(rot % k);
        let permuted = CoverSpec::new(c.n(), m).unwrap();
        for k in 0..3 {
            prop_assert_eq!(eigendim_table(&c, k).unwrap(), eigendim_table(&permuted, k).unwrap());
        }
    }

    #[test]
    fn restriction_preserves_totals(c in cover_strategy(&[4, 6, 8, 12], 7), k in 0i64..3) {
        let t = eigendim_table(&c, k).unwrap();
        for d in (1..=c.n()).filter(|d| c.n() % d == 0) {
            let r = restrict_to_subgroup(&t, d).unwrap();
            prop_assert_eq!(r.iter().sum::<i64>(), t.total());
        }
    }

    #[test]
    fn noether_and_chi(
        (c1, c2, twist, d) in prop::sample::select(&[2i64, 3, 4, 6][..])
            .prop_flat_map(|n| {
                let ns: &'static [i64] = match n { 2 => &[2], 3 => &[3], 4 => &[4], _ => &[6] };
                (cover_strategy(ns, 6), cover_strategy(ns, 6), 1..n, prop::sample::select(vec![1i64, 2, 3, 6]))
            })
    ) {
        let n = c1.n();
        prop_assume!(is_unit(twist, n));
        let d = if n % d == 0 { d } else { n };
        let s = PQSpec::new(c1.clone(), c2.clone(), twist, d).unwrap();
        let inv = invariants(&s).unwrap();
        prop_assert_eq!(12 * inv.chi, inv.k2 + inv.e);
        prop_assert_eq!(inv.chi, 1 - inv.q + inv.p_g);
        let sing = singularities(&s).unwrap();
        if d == n {
            prop_assert_eq!(sing.total(), c1.branch_points() * c2.branch_points());
        }
        let swapped = singularities(&s.swapped()).unwrap();
        prop_assert_eq!(sing.up_to_isomorphism(), swapped.up_to_isomorphism());
        prop_assert_eq!(invariants(&s.swapped()).unwrap(), inv);
    }

    #[test]
    fn paired_sum_trivial_group_is_product(c1 in cover_strategy(&[5], 6), c2 in cover_strategy(&[5], 6)) {
        let t1 = eigendim_table(&c1, 1).unwrap();
        let t2 = eigendim_table(&c2, 1).unwrap();
        prop_assert_eq!(paired_sum(&t1, &t2, 1, 2).unwrap(), genus(&c1) * genus(&c2));
    }
}

//! The eight acceptance criteria. Each one checks its values directly
//! against the library and also requires the matching `verify-paper` block
//! to pass. Prints one line per criterion; exits nonzero on any failure.

use pqsurf::curvecover::{eigendim_table, genus, CoverSpec};
use pqsurf::exactnum::{hj_evaluate, hj_expand, is_unit, Fraction, SingularityType};
use pqsurf::pardini::{
    bidouble_invariants, canonical_eigenpieces, epsilon, generate_relations, natdef_dim, verify_cover_relations,
    BiDegree, BuildingData, DeformationSymbols,
};
use pqsurf::polyring::{minors2, parse_poly, smoothing_certificate, span_equal, PolyMatrix};
use pqsurf::pqsurface::{invariants, partial_smoothing_k2, singularities, PQSpec, SingularSet};
use pqsurf::scenario::builtin;
use pqsurf::tangentcoh::{
    ci_def_dim, esdef_dim, family_dims, h2_theta, independence_check, ob_rank_and_ext1, resolution_ledger,
    ObLedger, ObModel,
};
use pqsurf::verify::{sample_covers, sample_pq_specs, verify_paper, Block, VerifyReport};

#[derive(Default)]
struct Checks(Vec<(String, bool)>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, got: T) {
        let ok = expected == got;
        let label = if ok { what.to_string() } else { format!("{what}: expected {expected:?}, got {got:?}") };
        self.0.push((label, ok));
    }
}

fn spec(name: &str) -> PQSpec {
    builtin(name).unwrap().spec().unwrap()
}

fn bd(name: &str) -> BuildingData {
    builtin(name).unwrap().building_data().unwrap().unwrap()
}

fn ob(name: &str) -> ObLedger {
    let sc = builtin(name).unwrap();
    let o = sc.ob_model.clone().unwrap();
    ob_rank_and_ext1(&ObModel::from_spec(&sc.spec().unwrap(), o.z, o.kernels()).unwrap()).unwrap()
}

fn t(n: i64, q: i64) -> SingularityType {
    SingularityType::new(n, q).unwrap()
}

fn hj(c: &mut Checks) {
    let r = t(4, 3).resolution();
    c.eq("1/4(1,3) string", vec![2, 2, 2], r.string);
    c.eq("1/4(1,3) h", Fraction::zero(), r.h);
    let r = t(4, 1).resolution();
    c.eq("1/4(1,1) string", vec![4], r.string);
    c.eq("1/4(1,1) h", Fraction::from(-1), r.h);
    c.eq("1/4(1,1) e", "7/4".parse().unwrap(), r.e);
    let r = t(2, 1).resolution();
    c.eq("1/2(1,1) string", vec![2], r.string);
    c.eq("1/2(1,1) h", Fraction::zero(), r.h);
    let mut bad = 0;
    for n in 2..=200 {
        for q in (1..n).filter(|&q| is_unit(q, n)) {
            bad += usize::from(hj_evaluate(&hj_expand(n, q).unwrap()).unwrap() != (n, q));
        }
    }
    c.eq("roundtrip n <= 200", 0, bad);
}

fn genus_block(c: &mut Checks) {
    let simple = CoverSpec::new(4, vec![1, 1, 1, 1]).unwrap();
    let mixed = CoverSpec::new(4, vec![1, 1, 3, 3]).unwrap();
    c.eq("genus simple", 3, genus(&simple));
    c.eq("genus mixed", 3, genus(&mixed));
    c.eq("k=1 table", vec![0, 0, 1, 2], eigendim_table(&simple, 1).unwrap().dims);
    c.eq("k=2 table", vec![1, 2, 3, 0], eigendim_table(&simple, 2).unwrap().dims);
    let covers = sample_covers(200);
    c.eq("200 sampled specs", 200, covers.len());
    let bad = covers
        .iter()
        .filter(|cov| {
            let g = genus(cov);
            eigendim_table(cov, 1).unwrap().total() != g
                || (g >= 2 && eigendim_table(cov, 2).unwrap().total() != 3 * g - 3)
        })
        .count();
    c.eq("sum identities", 0, bad);
}

fn invariants_block(c: &mut Checks) {
    let row = |name| {
        let i = invariants(&spec(name)).unwrap();
        (i.k2, i.e, i.q, i.p_g, i.chi)
    };
    c.eq("example1", (8, 64, 0, 5, 6), row("example1"));
    c.eq("example2", (-8, 32, 0, 1, 2), row("example2"));
    c.eq("example3", (0, 48, 0, 3, 4), row("example3"));
    c.eq("Y", (16, 32, 2, 5, 4), row("Y"));
    for (name, h0) in [("example1", 14), ("Y", 20)] {
        let i = invariants(&spec(name)).unwrap();
        c.eq(&format!("{name} h0(2K), minimal"), (Some(h0), true), (i.h0_2k, i.minimal_certified));
    }
    let bad = sample_pq_specs(300)
        .iter()
        .filter(|s| {
            let i = invariants(s).unwrap();
            12 * i.chi != i.k2 + i.e
        })
        .count();
    c.eq("Noether on sampled specs", 0, bad);
}

fn singularities_block(c: &mut Checks) {
    let set = |v: &[(i64, i64, usize)]| -> SingularSet { v.iter().map(|&(n, q, k)| (t(n, q), k)).collect() };
    c.eq("example1", set(&[(4, 3, 16)]), singularities(&spec("example1")).unwrap());
    c.eq("example2", set(&[(4, 1, 16)]), singularities(&spec("example2")).unwrap());
    c.eq("example3", set(&[(4, 1, 8), (4, 3, 8)]), singularities(&spec("example3")).unwrap());
    c.eq("Y", set(&[(2, 1, 16)]), singularities(&spec("Y")).unwrap());
}

fn tangent(c: &mut Checks) {
    c.eq("h2 example1", 6, h2_theta(&spec("example1")).unwrap());
    c.eq("h2 example2", 14, h2_theta(&spec("example2")).unwrap());
    c.eq("h2 Y", 16, h2_theta(&spec("Y")).unwrap());
    let l = resolution_ledger(&spec("example1")).unwrap();
    c.eq("example1 (h1 S, h1 X)", (50, 2), (l.h1_s, l.h1_x));
    let l = resolution_ledger(&spec("Y")).unwrap();
    c.eq("Y (h1 S, h1 Y)", (24, 8), (l.h1_s, l.h1_x));
    c.eq("example3 h2 > 0", true, h2_theta(&spec("example3")).unwrap() > 0);
}

fn obstruction(c: &mut Checks) {
    let y = ob("Y");
    c.eq("Y (rank, ker, coker, Ext1)", (6, 10, 10, 18), (y.ob_rank, y.ker_ob, y.coker_ob, y.ext1));
    let e1 = ob("example1");
    c.eq("example1 (surjective, Ext1)", (true, 44), (e1.surjective, e1.ext1));
    c.eq("Ext1 = ci_def_dim = 44", (44, 44), (e1.ext1, ci_def_dim(4, (2, 4))));
    c.eq("Ext1 = def_Y_expected = 18", (18, 18), (y.ext1, family_dims().def_y_expected));
    c.eq("ESDef dims", (2, 8), (esdef_dim(&spec("example1")), esdef_dim(&spec("Y"))));
    c.eq("independence (24,18)", true, independence_check(24, 18));
    c.eq("independence (50,44)", true, independence_check(50, 44));
}

fn pardini_block(c: &mut Checks) {
    let b = BiDegree::new;
    let ls = |name| {
        let bd = bd(name);
        (1..4).map(|a| bd.l(a)).collect::<Vec<_>>()
    };
    c.eq("L example1", vec![b(1, 1), b(2, 2), b(3, 3)], ls("example1"));
    c.eq("L example2", vec![b(1, 3), b(2, 2), b(3, 1)], ls("example2"));
    c.eq("L example3", vec![b(2, 2), b(2, 2), b(2, 2)], ls("example3"));
    // rows a = 0..3, columns b = 0..3, upper triangle
    let table: [(i64, [[i64; 4]; 4]); 2] = [
        (1, [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1]]),
        (3, [[0, 0, 0, 0], [0, 1, 1, 1], [0, 1, 1, 0], [0, 1, 0, 0]]),
    ];
    let mut entries = 0;
    for (m, rows) in table {
        for a in 0..4 {
            for bb in a..4 {
                entries += 1;
                c.eq(&format!("eps m={m} ({a},{bb})"), rows[a as usize][bb as usize], epsilon(4, m, a, bb));
            }
        }
    }
    c.eq("20 carry entries", 20, entries);
    for name in ["example1", "example2", "example3"] {
        c.eq(&format!("{name} relations"), true, verify_cover_relations(&bd(name)));
    }
    let totals: Vec<i64> = ["example1", "example2", "example3"].iter().map(|n| natdef_dim(&bd(n)).total).collect();
    c.eq("natdef totals", vec![50, 10, 22], totals);
    let pieces = canonical_eigenpieces(&bd("example1"));
    c.eq("eigenpieces", vec![0, 0, 1, 4], pieces.clone());
    c.eq("eigenpieces sum to pg", 5, pieces.iter().sum::<i64>());
}

fn relations(c: &mut Checks) {
    let syms = |v: &[((i64, i64), &str)]| -> DeformationSymbols { v.iter().map(|&(k, s)| (k, s.to_string())).collect() };
    let rendered = |name, s: DeformationSymbols| -> Vec<String> {
        generate_relations(&bd(name), &s).unwrap().iter().map(|r| r.to_string()).collect()
    };
    c.eq(
        "product-type relations verbatim",
        ["w1^2 = w2*h3", "w1*w2 = w3*h3", "w1*w3 = h1*h3", "w2^2 = h1*h3", "w2*w3 = w1*h1", "w3^2 = w2*h1"].map(String::from).to_vec(),
        rendered("example2", syms(&[((1, 0), "h1"), ((3, 0), "h3")])),
    );
    let pencil = generate_relations(
        &bd("example3"),
        &syms(&[((1, 0), "g1"), ((1, 1), "c1"), ((1, 2), "c2"), ((3, 0), "g3"), ((3, 2), "d2"), ((3, 3), "d3")]),
    )
    .unwrap();
    let pairs: Vec<(i64, i64)> = pencil.iter().map(|r| (r.a, r.b)).collect();
    c.eq("pencil relation order", vec![(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)], pairs);
    let t1 = "(g1 + c1*w1 + c2*w2)";
    let t3 = "(g3 + d2*w2 + d3*w3)";
    let expected = [
        format!("{t3}*w2"),
        format!("{t3}*w3"),
        format!("{t1}*{t3}"),
        format!("{t1}*{t3}"),
        format!("{t1}*w1"),
        format!("{t1}*w2"),
    ];
    for (r, e) in pencil.iter().zip(&expected) {
        c.eq(&format!("pencil w{}*w{}", r.a, r.b), parse_poly(e).unwrap(), r.rhs.clone());
    }

    let nat: Vec<_> = generate_relations(&bd("example2"), &syms(&[((1, 0), "h1"), ((3, 0), "h3")]))
        .unwrap()
        .iter()
        .map(|r| r.poly())
        .collect();
    let m = PolyMatrix::parse(&[&["h3", "w1", "w2"], &["w1", "w2", "w3"], &["w2", "w3", "h1"]]).unwrap();
    c.eq("minors span", true, span_equal(&minors2(&m).unwrap(), &nat));
    for s in ["1", "1/2", "-2"] {
        let r = smoothing_certificate(&bd("example2"), s.parse().unwrap()).unwrap();
        c.eq(&format!("smoothing s={s}"), (true, 3), (r.passed, r.rank));
    }
    let r = smoothing_certificate(&bd("example2"), Fraction::zero()).unwrap();
    c.eq("smoothing s=0", (false, 0), (r.passed, r.rank));

    let t41 = t(4, 1);
    let smoothed = |k: usize| -> SingularSet { [(t41, k)].into_iter().collect() };
    for k in 0..=6usize {
        c.eq(&format!("K2 = 8 - {k}"), 8 - k as i64, partial_smoothing_k2(&spec("example2"), &smoothed(16 - k)).unwrap());
    }
    for k in 2..=8usize {
        c.eq(&format!("K2 = {k}"), k as i64, partial_smoothing_k2(&spec("example3"), &smoothed(k)).unwrap());
    }
    let f = family_dims();
    c.eq("Todorov dims", (9, 12), (f.todorov_invariant_family, f.todorov_total));
    let d = BiDegree::new(2, 2);
    let bi = bidouble_invariants(d, d, d).unwrap();
    c.eq("bidouble", (8, 4, 3, 0), (bi.k2, bi.chi, bi.p_g, bi.q));
}

fn main() {
    let report: VerifyReport = verify_paper(None).expect("catalog runs");
    type Criterion = (Block, &'static str, fn(&mut Checks));
    let criteria: [Criterion; 8] = [
        (Block::Hj, "HJ/singularity block", hj),
        (Block::Genus, "genus block", genus_block),
        (Block::Invariants, "invariants block", invariants_block),
        (Block::Singularities, "singularity-set block", singularities_block),
        (Block::Tangent, "tangent block", tangent),
        (Block::Obstruction, "obstruction/Ext block", obstruction),
        (Block::Pardini, "Pardini block", pardini_block),
        (Block::Relations, "relations/smoothing block", relations),
    ];
    let mut failed = 0;
    for (block, title, run) in criteria {
        let mut c = Checks::default();
        run(&mut c);
        let catalog_ok = report.block_passed(block);
        let ok = catalog_ok && c.0.iter().all(|(_, ok)| *ok);
        println!(
            "[{}] {}. {title} ({} direct checks, {} catalog claims)",
            if ok { "PASS" } else { "FAIL" },
            block.index(),
            c.0.len(),
            report.block(block).count()
        );
        for (label, ok) in &c.0 {
            if !ok {
                println!("       {label}");
            }
        }
        if !catalog_ok {
            for cl in report.block(block).filter(|cl| !cl.pass) {
                println!("       catalog: {} ({}): expected {}, computed {}", cl.claim, cl.context, cl.expected, cl.computed);
            }
        }
        failed += usize::from(!ok);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Building data of Z_4-covers of P1 x P1: line bundles, the carry table and
//! natural deformations.
//!
//! ```bash
//! cargo run --example building_data
//! ```

use pqsurf::pardini::{
    bidouble_invariants, canonical_eigenpieces, epsilon, natdef_dim, verify_cover_relations, BiDegree,
};
use pqsurf::scenario::builtin;

fn main() -> pqsurf::Result<()> {
    for name in ["example1", "example2", "example3"] {
        let bd = builtin(name).unwrap().building_data()?.unwrap();
        let ls: Vec<String> = (1..bd.n).map(|a| bd.l(a).to_string()).collect();
        println!("{name}: L = {}", ls.join(" "));
        println!("  relations hold: {}", verify_cover_relations(&bd));
        println!("  natural deformations: {}", natdef_dim(&bd).total);
        println!("  canonical eigenpieces: {:?}", canonical_eigenpieces(&bd));
    }

    println!("carry table for Z_4:");
    for m in [1, 3] {
        for a in 0..4 {
            let row: Vec<String> = (0..4).map(|b| epsilon(4, m, a, b).to_string()).collect();
            println!("  m = {m}, a = {a}: {}", row.join(" "));
        }
    }

    let d = BiDegree::new(2, 2);
    let b = bidouble_invariants(d, d, d)?;
    println!("bidouble cover, three (2,2) curves: K2 = {} chi = {} pg = {} q = {}", b.k2, b.chi, b.p_g, b.q);
    Ok(())
}

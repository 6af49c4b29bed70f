//! Singular sets and invariants of the four built-in product-quotient
//! surfaces, plus one read from a JSON scenario file.
//!
//! ```bash
//! cargo run --example surface_invariants
//! ```

use pqsurf::pqsurface::{exceptional_data, invariants, singularities};
use pqsurf::scenario::{builtin, load_scenario, BUILTIN_NAMES};

fn main() -> pqsurf::Result<()> {
    let mut scenarios: Vec<_> = BUILTIN_NAMES.iter().map(|n| builtin(n).unwrap()).collect();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/scenarios/z3_product.json");
    scenarios.push(load_scenario(path)?);

    println!("{:<11} {:>4} {:>4} {:>3} {:>3} {:>4}  singularities", "surface", "K2", "e", "q", "pg", "chi");
    for sc in &scenarios {
        let spec = sc.spec()?;
        let inv = invariants(&spec)?;
        println!(
            "{:<11} {:>4} {:>4} {:>3} {:>3} {:>4}  {}",
            sc.name,
            inv.k2,
            inv.e,
            inv.q,
            inv.p_g,
            inv.chi,
            singularities(&spec)?
        );
        let ex = exceptional_data(&spec)?;
        if inv.minimal_certified {
            println!("{:<11} minimal, h0(2K) = {}", "", inv.h0_2k.unwrap());
        } else {
            println!("{:<11} {} exceptional curves", "", ex.components);
        }
    }
    Ok(())
}

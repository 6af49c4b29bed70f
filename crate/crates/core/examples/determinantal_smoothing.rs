//! Local equations of a Z_4 cover as 2x2 minors of a symmetric matrix, and
//! the one-parameter family that smooths the singular point.
//!
//! ```bash
//! cargo run --example determinantal_smoothing
//! ```

use pqsurf::pardini::{generate_relations, pure_cover_symbols};
use pqsurf::polyring::{minors2, smoothing_certificate, smoothing_matrix, span_equal};
use pqsurf::scenario::builtin;
use pqsurf::Fraction;

fn main() -> pqsurf::Result<()> {
    let bd = builtin("example2").unwrap().building_data()?.unwrap();
    let rels = generate_relations(&bd, &pure_cover_symbols(&bd, "h"))?;
    for r in &rels {
        println!("  {r}");
    }
    let polys: Vec<_> = rels.iter().map(|r| r.poly()).collect();
    let minors = minors2(&smoothing_matrix(Fraction::zero()))?;
    println!("same ideal generators as the minors: {}", span_equal(&minors, &polys));

    for s in ["1", "1/2", "-2", "0"] {
        let r = smoothing_certificate(&bd, s.parse()?)?;
        println!("s = {:<4} rank {}  {}", s, r.rank, if r.passed { "smooth" } else { "singular" });
    }
    Ok(())
}

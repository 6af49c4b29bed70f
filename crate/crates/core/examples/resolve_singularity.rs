//! Hirzebruch-Jung strings and the numbers h, e, B of a few cyclic quotient
//! singularities.
//!
//! ```bash
//! cargo run --example resolve_singularity
//! ```

use pqsurf::exactnum::{hj_evaluate, normalize_sing, SingularityType};

fn main() -> pqsurf::Result<()> {
    for (n, q) in [(2, 1), (4, 1), (4, 3), (7, 3), (9, 2), (25, 14)] {
        let t = SingularityType::new(n, q)?;
        let r = t.resolution();
        println!(
            "{t:<10} {:<14} h = {:<6} e = {:<6} B = {:<6} dual {}{}",
            format!("{:?}", r.string),
            r.h.to_string(),
            r.e.to_string(),
            r.b.to_string(),
            t.dual(),
            if t.is_rdp() { "  (RDP)" } else { "" }
        );
        assert_eq!(hj_evaluate(&r.string)?, (n, q));
    }

    // a fixed point where the generator acts with weights (1, 3)
    println!("weights (1,3) mod 4 -> {}", normalize_sing(4, 1, 3)?);
    Ok(())
}

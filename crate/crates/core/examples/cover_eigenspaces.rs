//! Eigenspace decomposition of 1-forms and quadratic differentials on cyclic
//! covers of the line.
//!
//! ```bash
//! cargo run --example cover_eigenspaces
//! ```

use pqsurf::curvecover::{eigendim_table, genus, quotient_genus, restrict_to_subgroup, rotation_numbers, CoverSpec};

fn main() -> pqsurf::Result<()> {
    let covers = [
        CoverSpec::new(4, vec![1, 1, 1, 1])?,
        CoverSpec::new(4, vec![1, 1, 3, 3])?,
        CoverSpec::new(6, vec![1, 1, 5, 5, 1, 5])?,
        CoverSpec::new(5, vec![1, 2, 3, 4])?,
    ];
    for c in &covers {
        let g = genus(c);
        println!("Z_{} monodromy {:?}: genus {g}, rotations {:?}", c.n(), c.monodromy(), rotation_numbers(c));
        for k in [1, 2] {
            let t = eigendim_table(c, k)?;
            println!("  k = {k}: {:?} (total {})", t.dims, t.total());
        }
        if c.n() % 2 == 0 {
            let t = eigendim_table(c, 1)?;
            println!(
                "  under the involution: {:?}, quotient genus {}",
                restrict_to_subgroup(&t, 2)?,
                quotient_genus(c, 2)?
            );
        }
    }
    Ok(())
}

//! Tangent-sheaf cohomology of the resolution, the obstruction map and the
//! dimension of the deformation space.
//!
//! ```bash
//! cargo run --example tangent_cohomology
//! ```

use pqsurf::scenario::builtin;
use pqsurf::tangentcoh::{ci_def_dim, esdef_dim, family_dims, independence_check, tangent_ledger};

fn main() -> pqsurf::Result<()> {
    for name in ["example1", "Y"] {
        let sc = builtin(name).unwrap();
        let ob = sc.ob_model.clone().unwrap();
        let spec = sc.spec()?;
        let l = tangent_ledger(&spec, ob.z, ob.kernels())?;
        println!("{name}");
        println!("  h1(Theta_S) = {}  h1(Theta_X) = {}  h2(Theta_X) = {}", l.h1_s, l.h1_x, l.h2_x);
        println!("  ob rank {}  kernel {}  Ext1 = {}", l.ob_rank, l.ker_ob, l.ext1);
        println!("  equisingular directions {}", esdef_dim(&spec));
        println!("  h1(Theta_S) exceeds Ext1: {}", independence_check(l.h1_s, l.ext1));
    }

    let fam = family_dims();
    println!("(2,4) complete intersections in P4: {} moduli", ci_def_dim(4, (2, 4)));
    println!("abelian surfaces with a (4,4) divisor: {} moduli", fam.def_y_expected);
    Ok(())
}

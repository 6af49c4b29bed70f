//! Runs the full claim catalog and prints the table. Pass a block name to
//! restrict it.
//!
//! ```bash
//! cargo run --example verify_all
//! cargo run --example verify_all -- pardini
//! ```

fn main() -> pqsurf::Result<()> {
    let filter = std::env::args().nth(1);
    let report = pqsurf::verify::verify_paper(filter.as_deref())?;
    print!("{}", report.render_table());
    if !report.all_passed {
        std::process::exit(1);
    }
    Ok(())
}

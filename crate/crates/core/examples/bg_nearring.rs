//! The near-ring of all binary operations on Z2, checked in full, and a
//! seeded sample on Z3.

use dirings::binop::{verify_bg_nearring, BgMode};
use dirings::{FiniteGroup, StandardGroup};

fn main() -> dirings::Result<()> {
    let z2 = FiniteGroup::standard(StandardGroup::Cyclic(2))?;
    let full = verify_bg_nearring(&z2, BgMode::Full)?;
    println!(
        "Z2: {} triples, passed {}",
        full.triples_checked,
        full.passed()
    );
    println!(
        "  read as (afb) g (afb): fails {:?}",
        full.literal_formula_failures
    );

    let z3 = FiniteGroup::standard(StandardGroup::Cyclic(3))?;
    let sample = verify_bg_nearring(
        &z3,
        BgMode::Sample {
            triples: 10_000,
            seed: 7,
        },
    )?;
    println!(
        "Z3: {} sampled triples, passed {}",
        sample.triples_checked,
        sample.passed()
    );
    Ok(())
}

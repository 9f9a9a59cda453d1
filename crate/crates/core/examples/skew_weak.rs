//! Skew rings and weak rings on Z3 are in bijection through
//! `a·b = -a + a∘b`; skew braces go to the weak rings with local right
//! identities.

use dirings::axioms::{classify, has_local_right_identities};
use dirings::diring::{brace_weakring_correspondence, roundtrip_check, skew_to_weak, Direction};
use dirings::search::{count_structures, StructureKind, DEFAULT_BUDGET};
use dirings::{FiniteGroup, StandardGroup};

fn main() -> dirings::Result<()> {
    let g = FiniteGroup::standard(StandardGroup::Cyclic(3))?;
    let (_, skew) = count_structures(&g, StructureKind::SkewRing, DEFAULT_BUDGET)?;
    for circ in &skew.tables {
        let dot = skew_to_weak(&g, circ)?;
        println!(
            "circ {:?}\n  dot {:?}  brace: {}  local right identities: {}  roundtrip: {}",
            circ.rows(),
            dot.rows(),
            classify(&g, circ).left_skew_brace,
            has_local_right_identities(&g, &dot),
            roundtrip_check(&g, circ, Direction::SkewToWeak)
        );
    }
    let report = brace_weakring_correspondence(&g, DEFAULT_BUDGET)?;
    println!("{report:?}");
    Ok(())
}

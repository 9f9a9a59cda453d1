//! Backtracking enumeration on the Klein four-group: near-rings, labeled
//! and up to automorphism, then the 0-symmetric dirings.

use dirings::search::{
    dedup_up_to_aut, enumerate_binops, enumerate_dirings, orbits, Constraint, SearchSpec,
    StructureKind, DEFAULT_BUDGET,
};
use dirings::{FiniteGroup, StandardGroup};

fn main() -> dirings::Result<()> {
    let g = FiniteGroup::standard(StandardGroup::Klein4)?;
    let spec = SearchSpec::new(g.clone(), StructureKind::NearRing.constraints()).workers(4);
    let labeled = enumerate_binops(&spec)?;
    println!(
        "near-rings on Klein4: {} labeled, {} nodes, complete {}",
        labeled.count(),
        labeled.nodes_explored,
        labeled.complete
    );
    let sizes: Vec<usize> = orbits(&g, &labeled.tables).iter().map(|o| o.size).collect();
    println!("orbit sizes under Aut: {sizes:?}");
    println!(
        "up to automorphism: {}",
        dedup_up_to_aut(&g, labeled).count()
    );

    let zsym = enumerate_dirings(&g, &[Constraint::ZeroSymmetric], DEFAULT_BUDGET, 1)?;
    for p in &zsym.tables {
        println!(
            "0-symmetric diring: circ {:?}, dot {:?}",
            p.circ.rows(),
            p.dot.rows()
        );
    }
    Ok(())
}

//! Ideals, congruences and idempotent endomorphisms of S3 with
//! conjugation as an extra operation.

use dirings::{BinOp, FiniteGroup, NamedOp, OmegaGroup, StandardGroup};

fn main() -> dirings::Result<()> {
    let g = FiniteGroup::standard(StandardGroup::Sym3)?;
    let a = OmegaGroup::from_binops(g.clone(), &[BinOp::named(&g, NamedOp::Conj)])?;

    for (c, zero) in a.congruence_ideal_bijection()? {
        println!(
            "classes {:?} <-> ideal {:?}",
            c.classes(),
            zero.iter().collect::<Vec<_>>()
        );
    }
    println!(
        "subalgebras: {:?}",
        a.subalgebras()?
            .iter()
            .map(|s| s.iter().collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );

    let report = a.endo_pair_bijection()?;
    println!(
        "{} algebra endomorphisms, {} idempotent, {} decomposition pairs, bijective: {}",
        report.all_algebra_endomorphisms,
        report.idempotent_endomorphisms.len(),
        report.pairs.len(),
        report.bijective
    );
    for e in &report.idempotent_endomorphisms {
        let (x, y) = a.check_idempotent_endo(e)?;
        println!(
            "  {:?}: kernel ideal and image subalgebra {x}, algebra endomorphism {y}",
            e.0
        );
    }
    Ok(())
}

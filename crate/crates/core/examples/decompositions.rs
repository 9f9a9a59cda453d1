//! Writing π₁ as `∘ - ·` in three ways, and the parts of the resulting
//! dirings. Ends with the weak ring `a·b = e(b)` of an idempotent
//! endomorphism of the Klein four-group.

use dirings::diring::{weakring_from_idempotent_endo, Diring};
use dirings::{BinOp, ElementSet, EndoMap, FiniteGroup, NamedOp, StandardGroup};

fn show(s: &ElementSet) -> String {
    format!("{:?}", s.iter().collect::<Vec<_>>())
}

fn main() -> dirings::Result<()> {
    for kind in [StandardGroup::Cyclic(4), StandardGroup::Sym3] {
        let g = FiniteGroup::standard(kind)?;
        println!("{kind:?}");
        for (circ, dot) in [
            (NamedOp::Pi1, NamedOp::Null),
            (NamedOp::Plus, NamedOp::Pi2),
            (NamedOp::PlusOp, NamedOp::Conj),
        ] {
            let d = Diring::new(g.clone(), BinOp::named(&g, circ), BinOp::named(&g, dot))?;
            let p = d.parts()?;
            println!(
                "  ({}, {}): pi1 = circ - dot: {}, G0 = {}, Gc = {}, semidirect: {}",
                circ.name(),
                dot.name(),
                d.difference_is_pi1(),
                show(&p.zero_symmetric),
                show(&p.constant),
                p.semidirect
            );
        }
    }

    let v4 = FiniteGroup::standard(StandardGroup::Klein4)?;
    let e = EndoMap(vec![0, 1, 0, 1]);
    let d = Diring::from_dot(v4.clone(), weakring_from_idempotent_endo(&v4, &e)?)?;
    let p = d.parts()?;
    println!(
        "Klein4, a·b = e(b): ker e = {}, im e = {}, G0 = {}, Gc = {}",
        show(&e.kernel()),
        show(&e.image()),
        show(&p.zero_symmetric),
        show(&p.constant)
    );
    Ok(())
}

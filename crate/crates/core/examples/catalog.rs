//! The six named operations on S3, with their axiom profiles and the
//! structures they define.

use dirings::axioms::{classify, profile};
use dirings::{BinOp, FiniteGroup, NamedOp, StandardGroup};

fn main() -> dirings::Result<()> {
    let g = FiniteGroup::standard(StandardGroup::Sym3)?;
    println!(
        "{:<8} assoc comm ldist rdist lskew wassoc | structures",
        "op"
    );
    for op in NamedOp::ALL {
        let f = BinOp::named(&g, op);
        let p = profile(&g, &f);
        let c = classify(&g, &f);
        let mut kinds = Vec::new();
        if c.left_near_ring {
            kinds.push("near-ring");
        }
        if c.left_skew_ring {
            kinds.push("skew ring");
        }
        if c.left_weak_ring {
            kinds.push("weak ring");
        }
        if c.left_skew_brace {
            kinds.push("skew brace");
        }
        let mark = |b: bool| if b { "T" } else { "." };
        println!(
            "{:<8} {:^5} {:^4} {:^5} {:^5} {:^5} {:^6} | {}",
            op.name(),
            mark(p.associative),
            mark(p.commutative),
            mark(p.left_distributive),
            mark(p.right_distributive),
            mark(p.left_skew_distributive),
            mark(p.weakly_associative),
            kinds.join(", ")
        );
        if let Some(w) = &p.witnesses.associative {
            println!("{:<8} associativity fails at {:?}", "", w.0);
        }
    }
    Ok(())
}

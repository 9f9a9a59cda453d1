//! Axiom predicates over one operation on a group, structure classifiers,
//! the λ/μ maps, zero-symmetric and constant parts, and the specialized
//! ideal definitions for near-rings and skew rings.
//!
//! Every predicate scans arguments in lexicographic `(a, b, c)` order and
//! reports the first counterexample it meets.

use serde::Serialize;

use crate::binop::BinOp;
use crate::error::{Error, Result};
use crate::group::{ElementSet, EndoMap, FiniteGroup};

/// Arguments at which a law fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Witness(pub Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// `a(bc) = (ab)c`
    Associative,
    /// `ab = ba`
    Commutative,
    /// `a(b + c) = ab + ac`
    LeftDistributive,
    /// `(a + b)c = ac + bc`
    RightDistributive,
    /// `a(b + c) = ab - a + ac`
    LeftSkewDistributive,
    /// `(a + ab)c = a(bc)`
    WeaklyAssociative,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Associative,
        Law::Commutative,
        Law::LeftDistributive,
        Law::RightDistributive,
        Law::LeftSkewDistributive,
        Law::WeaklyAssociative,
    ];
}

/// Panics when the table does not match the group; callers loading
/// untrusted input go through [`check_compatible`] first.
fn assert_sized(g: &FiniteGroup, f: &BinOp) {
    assert_eq!(
        g.order(),
        f.n(),
        "operation table does not match group order"
    );
}

pub fn check_compatible(g: &FiniteGroup, f: &BinOp) -> Result<()> {
    if g.order() != f.n() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: f.n(),
        });
    }
    Ok(())
}

/// First counterexample to `law`, or `None` if it holds.
pub fn counterexample(g: &FiniteGroup, f: &BinOp, law: Law) -> Option<Witness> {
    assert_sized(g, f);
    let n = g.order();
    if law == Law::Commutative {
        for a in 0..n {
            for b in 0..n {
                if f.get(a, b) != f.get(b, a) {
                    return Some(Witness(vec![a, b]));
                }
            }
        }
        return None;
    }
    let holds = |a: usize, b: usize, c: usize| match law {
        Law::Associative => f.get(f.get(a, b), c) == f.get(a, f.get(b, c)),
        Law::LeftDistributive => f.get(a, g.add(b, c)) == g.add(f.get(a, b), f.get(a, c)),
        Law::RightDistributive => f.get(g.add(a, b), c) == g.add(f.get(a, c), f.get(b, c)),
        Law::LeftSkewDistributive => {
            f.get(a, g.add(b, c)) == g.add(g.sub(f.get(a, b), a), f.get(a, c))
        }
        Law::WeaklyAssociative => f.get(g.add(a, f.get(a, b)), c) == f.get(a, f.get(b, c)),
        Law::Commutative => unreachable!(),
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some(Witness(vec![a, b, c]));
                }
            }
        }
    }
    None
}

pub fn holds(g: &FiniteGroup, f: &BinOp, law: Law) -> bool {
    counterexample(g, f, law).is_none()
}

pub fn is_associative(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::Associative)
}

pub fn is_commutative(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::Commutative)
}

pub fn is_left_distributive(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::LeftDistributive)
}

pub fn is_right_distributive(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::RightDistributive)
}

pub fn is_left_skew_distributive(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::LeftSkewDistributive)
}

pub fn is_weakly_associative(g: &FiniteGroup, f: &BinOp) -> bool {
    holds(g, f, Law::WeaklyAssociative)
}

/// Boolean fingerprint of one operation, with the first counterexample for
/// every law that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomProfile {
    pub associative: bool,
    pub commutative: bool,
    pub left_distributive: bool,
    pub right_distributive: bool,
    pub left_skew_distributive: bool,
    pub weakly_associative: bool,
    pub witnesses: ProfileWitnesses,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ProfileWitnesses {
    pub associative: Option<Witness>,
    pub commutative: Option<Witness>,
    pub left_distributive: Option<Witness>,
    pub right_distributive: Option<Witness>,
    pub left_skew_distributive: Option<Witness>,
    pub weakly_associative: Option<Witness>,
}

impl AxiomProfile {
    pub fn get(&self, law: Law) -> bool {
        match law {
            Law::Associative => self.associative,
            Law::Commutative => self.commutative,
            Law::LeftDistributive => self.left_distributive,
            Law::RightDistributive => self.right_distributive,
            Law::LeftSkewDistributive => self.left_skew_distributive,
            Law::WeaklyAssociative => self.weakly_associative,
        }
    }
}

pub fn profile(g: &FiniteGroup, f: &BinOp) -> AxiomProfile {
    let w = ProfileWitnesses {
        associative: counterexample(g, f, Law::Associative),
        commutative: counterexample(g, f, Law::Commutative),
        left_distributive: counterexample(g, f, Law::LeftDistributive),
        right_distributive: counterexample(g, f, Law::RightDistributive),
        left_skew_distributive: counterexample(g, f, Law::LeftSkewDistributive),
        weakly_associative: counterexample(g, f, Law::WeaklyAssociative),
    };
    AxiomProfile {
        associative: w.associative.is_none(),
        commutative: w.commutative.is_none(),
        left_distributive: w.left_distributive.is_none(),
        right_distributive: w.right_distributive.is_none(),
        left_skew_distributive: w.left_skew_distributive.is_none(),
        weakly_associative: w.weakly_associative.is_none(),
        witnesses: w,
    }
}

/// Which of the structures an operation makes of its group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructureClass {
    pub left_near_ring: bool,
    pub left_skew_ring: bool,
    pub left_weak_ring: bool,
    pub digroup: bool,
    pub left_skew_brace: bool,
    pub zero_symmetric: bool,
    /// `(G, ∘)` is a group, but its identity is not 0.
    pub group_with_shifted_identity: bool,
}

/// Whether `(G, f)` is a group whose identity is exactly 0.
pub fn is_group_with_zero_identity(g: &FiniteGroup, f: &BinOp) -> bool {
    group_identity(g, f) == Some(0)
}

/// The identity of `(G, f)` if it is a group.
pub fn group_identity(g: &FiniteGroup, f: &BinOp) -> Option<usize> {
    assert_sized(g, f);
    let n = g.order();
    if !is_associative(g, f) {
        return None;
    }
    let e = (0..n).find(|&e| (0..n).all(|a| f.get(e, a) == a && f.get(a, e) == a))?;
    (0..n)
        .all(|a| (0..n).any(|b| f.get(a, b) == e && f.get(b, a) == e))
        .then_some(e)
}

/// Classifies `(G, +, ∘)` reading `f` as the multiplication itself.
pub fn classify(g: &FiniteGroup, f: &BinOp) -> StructureClass {
    let assoc = is_associative(g, f);
    let ldist = is_left_distributive(g, f);
    let lskew = is_left_skew_distributive(g, f);
    let wassoc = is_weakly_associative(g, f);
    let identity = group_identity(g, f);
    let digroup = identity == Some(0);
    StructureClass {
        left_near_ring: assoc && ldist,
        left_skew_ring: assoc && lskew,
        left_weak_ring: wassoc && ldist,
        digroup,
        left_skew_brace: assoc && lskew && digroup,
        zero_symmetric: g.elements().all(|a| f.get(0, a) == 0),
        group_with_shifted_identity: matches!(identity, Some(e) if e != 0),
    }
}

/// Classifies an operation read as the `·` of a diring: near-ring and weak
/// ring flags come from `dot` itself, skew ring, digroup and skew brace
/// flags from its partner `a∘b = a + a·b`.
pub fn classify_dot(g: &FiniteGroup, dot: &BinOp) -> StructureClass {
    let own = classify(g, dot);
    let circ = BinOp::from_fn(g.order(), |a, b| g.add(a, dot.get(a, b)));
    let partner = classify(g, &circ);
    StructureClass {
        left_near_ring: own.left_near_ring,
        left_weak_ring: own.left_weak_ring,
        left_skew_ring: partner.left_skew_ring,
        digroup: partner.digroup,
        left_skew_brace: partner.left_skew_brace,
        zero_symmetric: own.zero_symmetric,
        group_with_shifted_identity: partner.group_with_shifted_identity,
    }
}

/// `λ_a(b) = -a + (a∘b)`, as a raw map.
pub fn lambda_map(g: &FiniteGroup, circ: &BinOp, a: usize) -> EndoMap {
    assert_sized(g, circ);
    EndoMap(
        g.elements()
            .map(|b| g.add(g.neg(a), circ.get(a, b)))
            .collect(),
    )
}

/// `μ_a(b) = a·b`, as a raw map.
pub fn mu_map(g: &FiniteGroup, dot: &BinOp, a: usize) -> EndoMap {
    assert_sized(g, dot);
    EndoMap(dot.row(a).to_vec())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaReport {
    /// `a∘0 = a` for all `a`.
    pub zero_right_identity: bool,
    /// Every `λ_a` is a group endomorphism.
    pub lambda_endomorphisms: bool,
    /// `λ_{a∘b} = λ_a ∘ λ_b` for all `a, b`.
    pub lambda_semigroup_morphism: bool,
}

impl LambdaReport {
    pub fn all(&self) -> bool {
        self.zero_right_identity && self.lambda_endomorphisms && self.lambda_semigroup_morphism
    }
}

/// Right identity, λ endomorphisms and λ multiplicativity for a skew ring.
pub fn check_lambda_maps(g: &FiniteGroup, circ: &BinOp) -> Result<LambdaReport> {
    check_compatible(g, circ)?;
    if !classify(g, circ).left_skew_ring {
        return Err(Error::PreconditionViolated("not a left skew ring".into()));
    }
    let lambdas: Vec<EndoMap> = g.elements().map(|a| lambda_map(g, circ, a)).collect();
    Ok(LambdaReport {
        zero_right_identity: g.elements().all(|a| circ.get(a, 0) == a),
        lambda_endomorphisms: lambdas.iter().all(|l| l.is_endomorphism(g)),
        lambda_semigroup_morphism: g.elements().all(|a| {
            g.elements()
                .all(|b| lambdas[circ.get(a, b)] == lambdas[a].compose(&lambdas[b]))
        }),
    })
}

/// The converse direction: if `(G, ∘)` is a semigroup and every `λ_a` is an
/// endomorphism, returns whether `classify` confirms a skew ring. `None`
/// when the hypotheses fail.
pub fn lambda_converse(g: &FiniteGroup, circ: &BinOp) -> Option<bool> {
    let hypotheses = is_associative(g, circ)
        && g.elements()
            .all(|a| lambda_map(g, circ, a).is_endomorphism(g));
    hypotheses.then(|| classify(g, circ).left_skew_ring)
}

/// `{a : 0 f a = 0}`.
pub fn zero_symmetric_part(g: &FiniteGroup, f: &BinOp) -> ElementSet {
    assert_sized(g, f);
    ElementSet::from_elements(g.order(), g.elements().filter(|&a| f.get(0, a) == 0))
}

/// `{a : 0 f a = a}`.
pub fn constant_part(g: &FiniteGroup, f: &BinOp) -> ElementSet {
    assert_sized(g, f);
    ElementSet::from_elements(g.order(), g.elements().filter(|&a| f.get(0, a) == a))
}

/// `{a : b f a = a for all b}`.
pub fn right_zeros(g: &FiniteGroup, f: &BinOp) -> ElementSet {
    assert_sized(g, f);
    ElementSet::from_elements(
        g.order(),
        g.elements()
            .filter(|&a| g.elements().all(|b| f.get(b, a) == a)),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parts {
    pub zero_symmetric: ElementSet,
    pub constant: ElementSet,
    /// Present when `a ↦ 0 f a` is an idempotent group endomorphism; then
    /// whether `G = zero_symmetric ⋊ constant`.
    pub semidirect: Option<bool>,
}

pub fn parts(g: &FiniteGroup, f: &BinOp) -> Parts {
    let section = EndoMap(f.row(0).to_vec());
    let zero_symmetric = zero_symmetric_part(g, f);
    let constant = constant_part(g, f);
    let semidirect = (section.is_endomorphism(g) && section.is_idempotent()).then(|| {
        g.is_semidirect_pair(&zero_symmetric, &constant)
            .unwrap_or(false)
    });
    Parts {
        zero_symmetric,
        constant,
        semidirect,
    }
}

/// For every `a` there is `e` with `a·e = a`.
pub fn has_local_right_identities(g: &FiniteGroup, dot: &BinOp) -> bool {
    assert_sized(g, dot);
    g.elements()
        .all(|a| g.elements().any(|e| dot.get(a, e) == a))
}

/// Near-ring ideal: normal subgroup `A` with `m·a ∈ A` and
/// `(a + m)·n - m·n ∈ A`. The `(m + a)·n` form is evaluated as well and
/// must agree.
pub fn nearring_ideal_check(g: &FiniteGroup, dot: &BinOp, set: &ElementSet) -> bool {
    assert_sized(g, dot);
    if !g.is_normal_subgroup(set) {
        return false;
    }
    let absorbs = set
        .iter()
        .all(|a| g.elements().all(|m| set.contains(dot.get(m, a))));
    let translate = |left: bool| {
        set.iter().all(|a| {
            g.elements().all(|m| {
                g.elements().all(|n| {
                    let shifted = if left { g.add(a, m) } else { g.add(m, a) };
                    set.contains(g.sub(dot.get(shifted, n), dot.get(m, n)))
                })
            })
        })
    };
    let (left, right) = (translate(true), translate(false));
    assert_eq!(left, right, "near-ring ideal forms disagree on {set:?}");
    absorbs && left
}

/// Skew-ring ideal: normal subgroup `I` with `r∘i - r ∈ I` and
/// `(i + r)∘s - r∘s ∈ I`. The `(r + i)∘s` form is evaluated as well and
/// must agree.
pub fn skewring_ideal_check(g: &FiniteGroup, circ: &BinOp, set: &ElementSet) -> bool {
    assert_sized(g, circ);
    if !g.is_normal_subgroup(set) {
        return false;
    }
    let absorbs = set
        .iter()
        .all(|i| g.elements().all(|r| set.contains(g.sub(circ.get(r, i), r))));
    let translate = |left: bool| {
        set.iter().all(|i| {
            g.elements().all(|r| {
                g.elements().all(|s| {
                    let shifted = if left { g.add(i, r) } else { g.add(r, i) };
                    set.contains(g.sub(circ.get(shifted, s), circ.get(r, s)))
                })
            })
        })
    };
    let (left, right) = (translate(true), translate(false));
    assert_eq!(left, right, "skew-ring ideal forms disagree on {set:?}");
    absorbs && left
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binop::NamedOp;
    use crate::group::StandardGroup;

    fn grp(kind: StandardGroup) -> FiniteGroup {
        FiniteGroup::standard(kind).unwrap()
    }

    fn fixtures() -> Vec<FiniteGroup> {
        vec![
            grp(StandardGroup::Cyclic(2)),
            grp(StandardGroup::Cyclic(3)),
            grp(StandardGroup::Cyclic(4)),
            grp(StandardGroup::Klein4),
            grp(StandardGroup::Sym3),
        ]
    }

    fn op(g: &FiniteGroup, name: NamedOp) -> BinOp {
        BinOp::named(g, name)
    }

    #[test]
    fn named_predicates() {
        for g in fixtures() {
            assert!(is_associative(&g, &op(&g, NamedOp::Pi1)));
            assert!(is_left_distributive(&g, &op(&g, NamedOp::Pi2)));
            assert!(!is_left_distributive(&g, &op(&g, NamedOp::Pi1)));
            assert!(is_left_skew_distributive(&g, &op(&g, NamedOp::Plus)));
            assert!(!is_left_skew_distributive(&g, &op(&g, NamedOp::Null)));
            assert!(is_left_skew_distributive(&g, &op(&g, NamedOp::Pi1)));
            assert!(is_weakly_associative(&g, &op(&g, NamedOp::Pi2)));
            assert!(!is_weakly_associative(&g, &op(&g, NamedOp::Plus)));
            assert!(is_right_distributive(&g, &op(&g, NamedOp::Pi1)));
            assert!(is_commutative(&g, &op(&g, NamedOp::Null)));
        }
        let s3 = grp(StandardGroup::Sym3);
        let conj = op(&s3, NamedOp::Conj);
        assert!(!is_associative(&s3, &conj));
        assert!(is_left_distributive(&s3, &conj));
        assert!(is_weakly_associative(&s3, &conj));
        assert!(!is_commutative(&s3, &op(&s3, NamedOp::Plus)));
    }

    #[test]
    fn witnesses_are_lexicographically_first() {
        let g = grp(StandardGroup::Cyclic(2));
        // π₁ fails left distributivity first at a=1, b=0, c=0: 1 ≠ 1+1.
        assert_eq!(
            counterexample(&g, &op(&g, NamedOp::Pi1), Law::LeftDistributive),
            Some(Witness(vec![1, 0, 0]))
        );
        let s3 = grp(StandardGroup::Sym3);
        assert_eq!(
            counterexample(&s3, &op(&s3, NamedOp::Plus), Law::Commutative),
            Some(Witness(vec![1, 2]))
        );
    }

    #[test]
    fn profiles_on_s3() {
        let g = grp(StandardGroup::Sym3);
        let p = profile(&g, &op(&g, NamedOp::Pi2));
        assert!(p.associative && p.weakly_associative && p.left_distributive);
        assert!(!p.left_skew_distributive && !p.right_distributive && !p.commutative);
        let p = profile(&g, &op(&g, NamedOp::Null));
        assert!(p.associative && p.weakly_associative && p.commutative);
        assert!(p.left_distributive && p.right_distributive && !p.left_skew_distributive);
        assert_eq!(
            p.witnesses.left_skew_distributive,
            Some(Witness(vec![1, 0, 0]))
        );

        let t = FiniteGroup::trivial();
        let p = profile(&t, &op(&t, NamedOp::Null));
        assert!(Law::ALL.iter().all(|&l| p.get(l)));
    }

    #[test]
    fn classification_of_catalog() {
        for g in fixtures() {
            let plus = classify(&g, &op(&g, NamedOp::Plus));
            assert!(plus.left_skew_ring && plus.digroup && plus.left_skew_brace);
            assert!(!plus.left_near_ring && !plus.left_weak_ring);
            let pi2 = classify(&g, &op(&g, NamedOp::Pi2));
            assert!(pi2.left_weak_ring && pi2.left_near_ring && !pi2.left_skew_ring);
            let pi1 = classify(&g, &op(&g, NamedOp::Pi1));
            assert!(pi1.left_skew_ring && !pi1.left_near_ring && !pi1.left_weak_ring);
            assert!(!pi1.digroup && !pi1.left_skew_brace);
            // as a dot, π₂ pairs with + and gives a skew brace
            let pi2_dot = classify_dot(&g, &op(&g, NamedOp::Pi2));
            assert!(pi2_dot.left_weak_ring && pi2_dot.left_skew_brace);
        }
        let t = FiniteGroup::trivial();
        let c = classify(&t, &op(&t, NamedOp::Null));
        assert!(c.left_near_ring && c.left_skew_ring && c.left_weak_ring && c.left_skew_brace);
    }

    #[test]
    fn shifted_identity_group_is_not_a_digroup() {
        let g = grp(StandardGroup::Cyclic(2));
        // xnor on {0,1}: a group with identity 1
        let xnor = BinOp::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let c = classify(&g, &xnor);
        assert!(c.group_with_shifted_identity && !c.digroup && !c.left_skew_brace);
    }

    #[test]
    fn lambda_and_mu_maps() {
        let g = grp(StandardGroup::Sym3);
        for a in g.elements() {
            assert_eq!(
                lambda_map(&g, &op(&g, NamedOp::Plus), a),
                EndoMap::identity(6)
            );
            assert_eq!(lambda_map(&g, &op(&g, NamedOp::Pi1), a), EndoMap::zero(6));
            let conj = EndoMap(g.elements().map(|b| g.conj(a, b)).collect());
            assert_eq!(lambda_map(&g, &op(&g, NamedOp::PlusOp), a), conj);
            assert_eq!(mu_map(&g, &op(&g, NamedOp::Pi2), a), EndoMap::identity(6));
            assert_eq!(mu_map(&g, &op(&g, NamedOp::Null), a), EndoMap::zero(6));
        }
    }

    #[test]
    fn lambda_maps_on_catalog() {
        for g in fixtures() {
            for name in [NamedOp::Plus, NamedOp::PlusOp, NamedOp::Pi1] {
                let r = check_lambda_maps(&g, &op(&g, name)).unwrap();
                assert!(r.all(), "{name} {r:?}");
                assert_eq!(lambda_converse(&g, &op(&g, name)), Some(true));
            }
            assert!(matches!(
                check_lambda_maps(&g, &op(&g, NamedOp::Pi2)),
                Err(Error::PreconditionViolated(_))
            ));
        }
        let z2 = grp(StandardGroup::Cyclic(2));
        let pi2 = op(&z2, NamedOp::Pi2);
        let lambdas: Vec<_> = (0..2).map(|a| lambda_map(&z2, &pi2, a)).collect();
        assert_eq!(lambdas[1], EndoMap(vec![1, 0]));
        assert_eq!(lambda_converse(&z2, &pi2), None);
    }

    #[test]
    fn parts_of_catalog() {
        for g in fixtures() {
            let n = g.order();
            let p = parts(&g, &op(&g, NamedOp::Pi1));
            assert_eq!(p.zero_symmetric, ElementSet::full(n));
            assert_eq!(p.constant, ElementSet::zero(n));
            assert_eq!(p.semidirect, Some(true));
            let p = parts(&g, &op(&g, NamedOp::Plus));
            assert_eq!(p.constant, ElementSet::full(n));
            assert_eq!(p.semidirect, Some(true));
            assert_eq!(right_zeros(&g, &op(&g, NamedOp::Pi2)), ElementSet::full(n));
        }
        let k4 = grp(StandardGroup::Klein4);
        let dot = BinOp::right_projection_through(&[0, 1, 0, 1]);
        let p = parts(&k4, &dot);
        assert_eq!(p.zero_symmetric, ElementSet::from_elements(4, [0, 2]));
        assert_eq!(p.constant, ElementSet::from_elements(4, [0, 1]));
        assert_eq!(p.semidirect, Some(true));
    }

    #[test]
    fn local_right_identities() {
        for g in fixtures() {
            assert!(has_local_right_identities(&g, &op(&g, NamedOp::Pi2)));
            assert!(has_local_right_identities(&g, &op(&g, NamedOp::Conj)));
            assert!(!has_local_right_identities(&g, &op(&g, NamedOp::Null)));
        }
    }

    #[test]
    fn specialized_ideals() {
        for g in fixtures() {
            let n = g.order();
            for s in [ElementSet::zero(n), ElementSet::full(n)] {
                for name in [NamedOp::Null, NamedOp::Pi2] {
                    assert!(nearring_ideal_check(&g, &op(&g, name), &s));
                }
                for name in [NamedOp::Pi1, NamedOp::Plus, NamedOp::PlusOp] {
                    assert!(skewring_ideal_check(&g, &op(&g, name), &s));
                }
            }
        }
        let z4 = grp(StandardGroup::Cyclic(4));
        let pi2 = op(&z4, NamedOp::Pi2);
        assert!(nearring_ideal_check(
            &z4,
            &pi2,
            &ElementSet::from_elements(4, [0, 2])
        ));
        assert!(!nearring_ideal_check(
            &z4,
            &pi2,
            &ElementSet::from_elements(4, [0, 1])
        ));
    }
}

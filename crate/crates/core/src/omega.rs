//! Pointed Ω-groups: a finite group with extra finitary operations that fix 0.
//!
//! Congruences are found by closing principal pairs and joining; ideals are
//! the normal subgroups whose cosets are compatible with every operation.
//! The two are matched through the zero class.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::binop::BinOp;
use crate::error::{Error, Result};
use crate::group::{semidirect_forms, ElementSet, EndoMap, FiniteGroup, ENDO_ORDER_BOUND};

pub const MAX_ARITY: usize = 3;

/// Largest carrier handled by the congruence and ideal enumerations.
pub const OMEGA_ORDER_BOUND: usize = 8;

/// A finitary operation stored flat, first argument most significant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Operation {
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Operation {
    pub fn unary(map: &[usize]) -> Self {
        Operation {
            arity: 1,
            table: map.to_vec(),
        }
    }

    fn eval(&self, n: usize, args: &[usize]) -> usize {
        let idx = args.iter().fold(0, |acc, &x| acc * n + x);
        self.table[idx]
    }
}

impl From<&BinOp> for Operation {
    fn from(op: &BinOp) -> Self {
        Operation {
            arity: 2,
            table: op.as_flat().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "OmegaRepr", into = "OmegaRepr")]
pub struct OmegaGroup {
    group: FiniteGroup,
    ops: Vec<Operation>,
}

#[derive(Serialize, Deserialize)]
struct OmegaRepr {
    group: FiniteGroup,
    #[serde(default)]
    ops: Vec<Operation>,
}

impl TryFrom<OmegaRepr> for OmegaGroup {
    type Error = Error;

    fn try_from(r: OmegaRepr) -> Result<Self> {
        OmegaGroup::new(r.group, r.ops)
    }
}

impl From<OmegaGroup> for OmegaRepr {
    fn from(a: OmegaGroup) -> Self {
        OmegaRepr {
            group: a.group,
            ops: a.ops,
        }
    }
}

impl OmegaGroup {
    pub fn new(group: FiniteGroup, ops: Vec<Operation>) -> Result<Self> {
        let n = group.order();
        for (index, op) in ops.iter().enumerate() {
            if op.arity == 0 || op.arity > MAX_ARITY {
                return Err(Error::ArityTooLarge {
                    index,
                    arity: op.arity,
                });
            }
            let expected = n.pow(op.arity as u32);
            if op.table.len() != expected {
                return Err(Error::SizeMismatch {
                    expected,
                    found: op.table.len(),
                });
            }
            if let Some(&value) = op.table.iter().find(|&&v| v >= n) {
                return Err(Error::EntryOutOfRange { value, order: n });
            }
            if op.table[0] != 0 {
                return Err(Error::NotPointed { index });
            }
        }
        Ok(OmegaGroup { group, ops })
    }

    pub fn from_binops(group: FiniteGroup, ops: &[BinOp]) -> Result<Self> {
        Self::new(group, ops.iter().map(Operation::from).collect())
    }

    pub fn plain(group: FiniteGroup) -> Self {
        OmegaGroup {
            group,
            ops: Vec::new(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    fn n(&self) -> usize {
        self.group.order()
    }

    fn check_bound(&self) -> Result<()> {
        if self.n() > OMEGA_ORDER_BOUND {
            return Err(Error::BudgetExceeded {
                budget: OMEGA_ORDER_BOUND as u64,
            });
        }
        Ok(())
    }

    /// Calls `visit(op, args)` for every argument tuple of every operation.
    fn for_each_tuple(&self, mut visit: impl FnMut(&Operation, &mut [usize]) -> bool) -> bool {
        let n = self.n();
        let mut args = [0usize; MAX_ARITY];
        for op in &self.ops {
            let k = op.arity;
            for t in 0..n.pow(k as u32) {
                let mut rest = t;
                for slot in args[..k].iter_mut().rev() {
                    *slot = rest % n;
                    rest /= n;
                }
                if !visit(op, &mut args[..k]) {
                    return false;
                }
            }
        }
        true
    }

    /// A normal subgroup `H` such that shifting
    /// any argument of any operation by `h ∈ H` moves the result within its
    /// coset of `H`.
    pub fn is_ideal(&self, h: &ElementSet) -> bool {
        let g = &self.group;
        if !g.is_normal_subgroup(h) {
            return false;
        }
        let n = self.n();
        self.for_each_tuple(|op, args| {
            let base = op.eval(n, args);
            (0..args.len()).all(|i| {
                let orig = args[i];
                let ok = h.iter().all(|x| {
                    args[i] = g.add(x, orig);
                    let moved = op.eval(n, args);
                    h.contains(g.sub(moved, base))
                });
                args[i] = orig;
                ok
            })
        })
    }

    /// All ideals in increasing bitmask order of their carriers.
    pub fn ideals(&self) -> Result<Vec<ElementSet>> {
        self.check_bound()?;
        self.group.filter_subsets(|s| self.is_ideal(s))
    }

    pub fn is_subalgebra(&self, s: &ElementSet) -> bool {
        let n = self.n();
        self.group.is_subgroup(s)
            && self.for_each_tuple(|op, args| {
                !args.iter().all(|&x| s.contains(x)) || s.contains(op.eval(n, args))
            })
    }

    pub fn subalgebras(&self) -> Result<Vec<ElementSet>> {
        self.check_bound()?;
        self.group.filter_subsets(|s| self.is_subalgebra(s))
    }

    pub fn is_algebra_endo(&self, e: &EndoMap) -> bool {
        let n = self.n();
        let mut image_args = [0usize; MAX_ARITY];
        e.is_endomorphism(&self.group)
            && self.for_each_tuple(|op, args| {
                for (slot, &x) in image_args.iter_mut().zip(args.iter()) {
                    *slot = e.apply(x);
                }
                op.eval(n, &image_args[..args.len()]) == e.apply(op.eval(n, args))
            })
    }

    pub fn algebra_endomorphisms(&self) -> Result<Vec<EndoMap>> {
        Ok(self
            .group
            .endomorphisms()?
            .into_iter()
            .filter(|e| self.is_algebra_endo(e))
            .collect())
    }

    /// Whether a partition is compatible with `+` and every operation.
    pub fn is_congruence(&self, c: &Congruence) -> bool {
        let g = &self.group;
        let n = self.n();
        let same = |x: usize, y: usize| c.classes[x] == c.classes[y];
        let add_ok = g.elements().all(|a| {
            g.elements().all(|b| {
                g.elements()
                    .filter(|&b2| same(b, b2))
                    .all(|b2| same(g.add(a, b), g.add(a, b2)) && same(g.add(b, a), g.add(b2, a)))
            })
        });
        add_ok
            && self.for_each_tuple(|op, args| {
                let base = op.eval(n, args);
                (0..args.len()).all(|i| {
                    let orig = args[i];
                    let ok = (0..n).filter(|&y| same(orig, y)).all(|y| {
                        args[i] = y;
                        same(op.eval(n, args), base)
                    });
                    args[i] = orig;
                    ok
                })
            })
    }

    /// Smallest congruence identifying every given pair.
    pub fn generated_congruence(&self, pairs: &[(usize, usize)]) -> Congruence {
        let g = &self.group;
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for &(a, b) in pairs {
            uf.union(a, b);
        }
        loop {
            let mut changed = false;
            for a in 0..n {
                for b in 0..n {
                    if a == b || uf.find(a) != uf.find(b) {
                        continue;
                    }
                    for x in 0..n {
                        changed |= uf.union(g.add(x, a), g.add(x, b));
                        changed |= uf.union(g.add(a, x), g.add(b, x));
                    }
                }
            }
            self.for_each_tuple(|op, args| {
                let base = op.eval(n, args);
                for i in 0..args.len() {
                    let orig = args[i];
                    for y in 0..n {
                        if y != orig && uf.find(y) == uf.find(orig) {
                            args[i] = y;
                            changed |= uf.union(op.eval(n, args), base);
                        }
                    }
                    args[i] = orig;
                }
                true
            });
            if !changed {
                return Congruence::from_labels(&(0..n).map(|x| uf.find(x)).collect::<Vec<_>>());
            }
        }
    }

    /// Every congruence, sorted by canonical class vector.
    pub fn all_congruences(&self) -> Result<Vec<Congruence>> {
        self.check_bound()?;
        let n = self.n();
        let mut found: BTreeSet<Congruence> = BTreeSet::new();
        found.insert(Congruence::identity(n));
        for a in 0..n {
            for b in a + 1..n {
                found.insert(self.generated_congruence(&[(a, b)]));
            }
        }
        // every congruence is a join of principal ones
        loop {
            let current: Vec<Congruence> = found.iter().cloned().collect();
            let before = found.len();
            for (i, x) in current.iter().enumerate() {
                for y in &current[i + 1..] {
                    let mut pairs = x.pairs();
                    pairs.extend(y.pairs());
                    found.insert(self.generated_congruence(&pairs));
                }
            }
            if found.len() == before {
                return Ok(found.into_iter().collect());
            }
        }
    }

    /// Pairs every congruence with its zero class and checks that this is a
    /// bijection onto the ideals, preserving and reflecting order.
    pub fn congruence_ideal_bijection(&self) -> Result<Vec<(Congruence, ElementSet)>> {
        let congruences = self.all_congruences()?;
        let ideals = self.ideals()?;
        let pairs: Vec<(Congruence, ElementSet)> = congruences
            .into_iter()
            .map(|c| {
                let z = c.zero_class();
                (c, z)
            })
            .collect();
        let zero_classes: BTreeSet<ElementSet> = pairs.iter().map(|(_, z)| z.clone()).collect();
        if zero_classes.len() != pairs.len() {
            return Err(Error::BijectionFailure(
                "zero-class map is not injective".into(),
            ));
        }
        if zero_classes != ideals.iter().cloned().collect() {
            return Err(Error::BijectionFailure(
                "zero classes differ from the ideals".into(),
            ));
        }
        for (c1, z1) in &pairs {
            for (c2, z2) in &pairs {
                if c1.refines(c2) != z1.is_subset(z2) {
                    return Err(Error::BijectionFailure(format!(
                        "order not preserved between {z1:?} and {z2:?}"
                    )));
                }
            }
        }
        Ok(pairs)
    }

    /// `H + K`, which is again an ideal and is the join of `H` and `K`.
    pub fn ideal_sum(&self, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
        self.require_ideals(h, k)?;
        let g = &self.group;
        let mut sum = ElementSet::empty(self.n());
        for a in h.iter() {
            for b in k.iter() {
                sum.insert(g.add(a, b));
            }
        }
        assert!(self.is_ideal(&sum), "sum of ideals is not an ideal");
        Ok(sum)
    }

    pub fn ideal_intersection(&self, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
        self.require_ideals(h, k)?;
        let meet = h.intersection(k);
        assert!(
            self.is_ideal(&meet),
            "intersection of ideals is not an ideal"
        );
        Ok(meet)
    }

    /// The smallest ideal containing both, read off the ideal lattice.
    pub fn ideal_join(&self, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
        self.require_ideals(h, k)?;
        let ideals = self.ideals()?;
        Ok(ideals
            .into_iter()
            .filter(|i| h.is_subset(i) && k.is_subset(i))
            .min_by_key(ElementSet::len_members)
            .expect("the whole carrier is an ideal"))
    }

    /// The largest ideal contained in both, read off the ideal lattice.
    pub fn ideal_meet(&self, h: &ElementSet, k: &ElementSet) -> Result<ElementSet> {
        self.require_ideals(h, k)?;
        let ideals = self.ideals()?;
        Ok(ideals
            .into_iter()
            .filter(|i| i.is_subset(h) && i.is_subset(k))
            .max_by_key(ElementSet::len_members)
            .expect("the zero ideal is an ideal"))
    }

    fn require_ideals(&self, h: &ElementSet, k: &ElementSet) -> Result<()> {
        if self.is_ideal(h) && self.is_ideal(k) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(
                "arguments must be ideals".into(),
            ))
        }
    }

    /// Both sides of the idempotent-endomorphism criterion: (kernel is an
    /// ideal and image a subalgebra, `e` is an algebra endomorphism).
    pub fn check_idempotent_endo(&self, e: &EndoMap) -> Result<(bool, bool)> {
        if !(e.is_endomorphism(&self.group) && e.is_idempotent()) {
            return Err(Error::PreconditionViolated(
                "not an idempotent group endomorphism".into(),
            ));
        }
        let (k, h) = e.kernel_image();
        let side_a = self.is_ideal(&k) && self.is_subalgebra(&h);
        let side_b = self.is_algebra_endo(e);
        Ok((side_a, side_b))
    }

    /// The five equivalent descriptions of an inner semidirect product of an
    /// ideal `k` and a subalgebra `h`, each evaluated on its own.
    pub fn check_inner_semidirect(&self, k: &ElementSet, h: &ElementSet) -> Result<[bool; 5]> {
        if !self.is_ideal(k) {
            return Err(Error::PreconditionViolated("K is not an ideal".into()));
        }
        if !self.is_subalgebra(h) {
            return Err(Error::PreconditionViolated("H is not a subalgebra".into()));
        }
        let [a, b, c] = semidirect_forms(&self.group, k, h);
        let endos = self.algebra_endomorphisms()?;
        let d = endos
            .iter()
            .any(|e| e.is_idempotent() && &e.kernel() == k && &e.image() == h);
        let e = endos
            .iter()
            .any(|e| &e.image() == h && h.iter().all(|x| e.apply(x) == x) && &e.kernel() == k);
        Ok([a, b, c, d, e])
    }

    /// Idempotent algebra endomorphisms against decomposition pairs.
    pub fn endo_pair_bijection(&self) -> Result<EndoPairReport> {
        if self.n() > ENDO_ORDER_BOUND {
            return Err(Error::BudgetExceeded {
                budget: ENDO_ORDER_BOUND as u64,
            });
        }
        let g = &self.group;
        let endos = self.algebra_endomorphisms()?;
        let idempotents: Vec<EndoMap> = endos
            .iter()
            .filter(|e| e.is_idempotent())
            .cloned()
            .collect();
        let ideals = self.ideals()?;
        let subalgebras = self.subalgebras()?;
        let mut pairs = Vec::new();
        for k in &ideals {
            for h in &subalgebras {
                let [covers_and_meets, _, _] = semidirect_forms(g, k, h);
                if covers_and_meets {
                    pairs.push((k.clone(), h.clone()));
                }
            }
        }
        let images: BTreeSet<(ElementSet, ElementSet)> =
            idempotents.iter().map(EndoMap::kernel_image).collect();
        let bijective = images.len() == idempotents.len()
            && images == pairs.iter().cloned().collect::<BTreeSet<_>>();
        Ok(EndoPairReport {
            all_algebra_endomorphisms: endos.len(),
            idempotent_endomorphisms: idempotents,
            pairs,
            bijective,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EndoPairReport {
    /// Raw count of all algebra endomorphisms, idempotent or not.
    pub all_algebra_endomorphisms: usize,
    pub idempotent_endomorphisms: Vec<EndoMap>,
    /// `(K, H)` with `K` an ideal, `H` a subalgebra, `K + H = G`, `K ∩ H = 0`.
    pub pairs: Vec<(ElementSet, ElementSet)>,
    /// `e ↦ (ker e, e(G))` is a bijection between the two lists.
    pub bijective: bool,
}

/// A partition of the carrier, stored as canonical class labels: the class
/// of `x` is numbered by first appearance scanning `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Congruence {
    classes: Vec<usize>,
}

impl Congruence {
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let classes = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { classes }
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            classes: (0..n).collect(),
        }
    }

    /// Cosets of a normal subgroup.
    pub fn from_normal_subgroup(g: &FiniteGroup, h: &ElementSet) -> Self {
        let labels: Vec<usize> = g
            .elements()
            .map(|x| {
                g.elements()
                    .find(|&y| h.contains(g.sub(x, y)))
                    .expect("x - x = 0 lies in every subgroup")
            })
            .collect();
        Self::from_labels(&labels)
    }

    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }

    pub fn zero_class(&self) -> ElementSet {
        let z = self.classes[0];
        ElementSet::from_elements(
            self.classes.len(),
            (0..self.classes.len()).filter(|&x| self.classes[x] == z),
        )
    }

    /// Every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.classes.len();
        (0..n).all(|x| {
            (0..n)
                .all(|y| self.classes[x] != self.classes[y] || other.classes[x] == other.classes[y])
        })
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.classes.len();
        (1..n)
            .filter_map(|x| {
                let first = (0..x).find(|&y| self.classes[y] == self.classes[x])?;
                Some((first, x))
            })
            .collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = x;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    /// Returns true if two classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        // keep the smaller root so labels stay stable
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binop::NamedOp;
    use crate::group::StandardGroup;

    fn grp(kind: StandardGroup) -> FiniteGroup {
        FiniteGroup::standard(kind).unwrap()
    }

    fn with_named(kind: StandardGroup, names: &[NamedOp]) -> OmegaGroup {
        let g = grp(kind);
        let ops: Vec<BinOp> = names.iter().map(|&n| BinOp::named(&g, n)).collect();
        OmegaGroup::from_binops(g, &ops).unwrap()
    }

    /// Every set partition of `0..n` as label vectors.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            let blocks = cur.iter().max().map_or(0, |m| m + 1);
            for b in 0..=blocks {
                cur.push(b);
                go(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn rejects_unpointed_and_oversized_ops() {
        let g = grp(StandardGroup::Cyclic(2));
        let pi = BinOp::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(
            OmegaGroup::from_binops(g.clone(), &[pi]),
            Err(Error::NotPointed { index: 0 })
        );
        let quad = Operation {
            arity: 4,
            table: vec![0; 16],
        };
        assert!(matches!(
            OmegaGroup::new(g, vec![quad]),
            Err(Error::ArityTooLarge { .. })
        ));
    }

    #[test]
    fn trivial_and_plain_congruences() {
        let t = OmegaGroup::plain(FiniteGroup::trivial());
        assert_eq!(t.all_congruences().unwrap(), vec![Congruence::identity(1)]);
        let z2 = OmegaGroup::plain(grp(StandardGroup::Cyclic(2)));
        let cs = z2.all_congruences().unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(z2.congruence_ideal_bijection().unwrap().len(), 2);
    }

    #[test]
    fn congruences_match_partition_oracle() {
        let cases = vec![
            with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi2]),
            with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi1]),
            with_named(StandardGroup::Klein4, &[NamedOp::Null]),
            with_named(StandardGroup::Cyclic(3), &[NamedOp::Plus]),
            with_named(StandardGroup::Sym3, &[NamedOp::Conj]),
            with_named(StandardGroup::Sym3, &[]),
        ];
        for a in cases {
            let n = a.group().order();
            let oracle: BTreeSet<Congruence> = all_partitions(n)
                .iter()
                .map(|p| Congruence::from_labels(p))
                .filter(|c| a.is_congruence(c))
                .collect();
            let found: BTreeSet<Congruence> = a.all_congruences().unwrap().into_iter().collect();
            assert_eq!(found, oracle);
            let pairs = a.congruence_ideal_bijection().unwrap();
            assert_eq!(pairs.len(), a.ideals().unwrap().len());
            for (c, z) in &pairs {
                assert_eq!(c, &Congruence::from_normal_subgroup(a.group(), z));
            }
        }
    }

    #[test]
    fn z4_with_pi2_has_three_congruences() {
        let a = with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi2]);
        let zero_classes: Vec<ElementSet> = a
            .all_congruences()
            .unwrap()
            .iter()
            .map(Congruence::zero_class)
            .collect();
        assert_eq!(zero_classes.len(), 3);
        for s in [vec![0], vec![0, 2], vec![0, 1, 2, 3]] {
            assert!(zero_classes.contains(&ElementSet::from_elements(4, s)));
        }
    }

    #[test]
    fn ideals_of_z2_with_pi1() {
        let a = with_named(StandardGroup::Cyclic(2), &[NamedOp::Pi1]);
        assert!(a.is_ideal(&ElementSet::zero(2)));
        assert!(a.is_ideal(&ElementSet::full(2)));
        assert_eq!(a.congruence_ideal_bijection().unwrap().len(), 2);
    }

    #[test]
    fn ideal_lattice_operations() {
        let k4 = OmegaGroup::plain(grp(StandardGroup::Klein4));
        let h = ElementSet::from_elements(4, [0, 1]);
        let k = ElementSet::from_elements(4, [0, 2]);
        assert_eq!(k4.ideal_sum(&h, &k).unwrap(), ElementSet::full(4));
        assert_eq!(k4.ideal_intersection(&h, &k).unwrap(), ElementSet::zero(4));
        assert_eq!(k4.ideal_intersection(&h, &h).unwrap(), h);
        assert_eq!(k4.ideal_sum(&ElementSet::zero(4), &k).unwrap(), k);

        for a in [
            with_named(StandardGroup::Sym3, &[NamedOp::Conj]),
            with_named(StandardGroup::Klein4, &[NamedOp::Pi2]),
            with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi1]),
        ] {
            let ideals = a.ideals().unwrap();
            for x in &ideals {
                for y in &ideals {
                    let sum = a.ideal_sum(x, y).unwrap();
                    let meet = a.ideal_intersection(x, y).unwrap();
                    assert!(a.is_ideal(&sum) && a.is_ideal(&meet));
                    assert_eq!(sum, a.ideal_join(x, y).unwrap());
                    assert_eq!(meet, a.ideal_meet(x, y).unwrap());
                }
            }
        }
        let not_normal = ElementSet::from_elements(6, [0, 1]);
        let s3 = OmegaGroup::plain(grp(StandardGroup::Sym3));
        assert!(s3.ideal_sum(&not_normal, &not_normal).is_err());
    }

    #[test]
    fn algebra_endomorphisms() {
        let a = with_named(StandardGroup::Cyclic(2), &[NamedOp::Pi2]);
        assert!(a.is_algebra_endo(&EndoMap::identity(2)));
        assert!(a.is_algebra_endo(&EndoMap::zero(2)));
        let b = with_named(StandardGroup::Cyclic(2), &[NamedOp::Plus]);
        assert!(!b.is_algebra_endo(&EndoMap(vec![1, 0])));
    }

    #[test]
    fn idempotent_endo_examples() {
        let a = with_named(StandardGroup::Cyclic(2), &[NamedOp::Pi2]);
        assert_eq!(
            a.check_idempotent_endo(&EndoMap::identity(2)).unwrap(),
            (true, true)
        );
        assert_eq!(
            a.check_idempotent_endo(&EndoMap::zero(2)).unwrap(),
            (true, true)
        );
        let b = with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi1]);
        assert!(matches!(
            b.check_idempotent_endo(&EndoMap(vec![0, 2, 0, 2])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn inner_semidirect_examples() {
        let s3 = OmegaGroup::plain(grp(StandardGroup::Sym3));
        let full = ElementSet::full(6);
        let zero = ElementSet::zero(6);
        assert_eq!(s3.check_inner_semidirect(&zero, &full).unwrap(), [true; 5]);
        assert_eq!(s3.check_inner_semidirect(&full, &zero).unwrap(), [true; 5]);
        let a3 = ElementSet::from_elements(6, [0, 3, 4]);
        let t = ElementSet::from_elements(6, [0, 1]);
        assert_eq!(s3.check_inner_semidirect(&a3, &t).unwrap(), [true; 5]);
        assert_eq!(s3.check_inner_semidirect(&a3, &full).unwrap(), [false; 5]);
    }

    #[test]
    fn endo_pair_counts() {
        let t = OmegaGroup::plain(FiniteGroup::trivial());
        let r = t.endo_pair_bijection().unwrap();
        assert_eq!((r.idempotent_endomorphisms.len(), r.pairs.len()), (1, 1));
        let z2 = OmegaGroup::plain(grp(StandardGroup::Cyclic(2)));
        let r = z2.endo_pair_bijection().unwrap();
        assert_eq!((r.idempotent_endomorphisms.len(), r.pairs.len()), (2, 2));
        assert!(r.bijective);
        let a = with_named(StandardGroup::Cyclic(4), &[NamedOp::Pi2]);
        let r = a.endo_pair_bijection().unwrap();
        assert!(r.bijective);
        assert_eq!(r.idempotent_endomorphisms.len(), r.pairs.len());
    }

    #[test]
    fn json_round_trip() {
        let a = with_named(StandardGroup::Cyclic(3), &[NamedOp::Pi2, NamedOp::Conj]);
        let text = serde_json::to_string(&a).unwrap();
        let back: OmegaGroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, a);
    }
}

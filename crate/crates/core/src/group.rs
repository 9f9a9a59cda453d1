//! Finite groups as Cayley tables with the identity fixed at element 0.
//!
//! Elements are the indices `0..n`. The addition table is stored flat in
//! row-major order, row index = left argument. Inverses are recomputed and
//! stored on validation so hot loops never search for them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order for which endomorphisms are enumerated exhaustively.
pub const ENDO_ORDER_BOUND: usize = 8;

/// Largest order for which subsets of the carrier are enumerated.
pub const SUBSET_ORDER_BOUND: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GroupRepr", into = "GroupRepr")]
pub struct FiniteGroup {
    order: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    order: usize,
    add: Vec<Vec<usize>>,
}

impl TryFrom<GroupRepr> for FiniteGroup {
    type Error = Error;

    fn try_from(repr: GroupRepr) -> Result<Self> {
        if repr.add.len() != repr.order {
            return Err(Error::SizeMismatch {
                expected: repr.order,
                found: repr.add.len(),
            });
        }
        FiniteGroup::from_rows(&repr.add)
    }
}

impl From<FiniteGroup> for GroupRepr {
    fn from(g: FiniteGroup) -> Self {
        GroupRepr {
            order: g.order,
            add: g.rows(),
        }
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("add", &self.rows())
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table given as rows. This is the only way to build
    /// a group, so every `FiniteGroup` value satisfies the group axioms.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::UnsupportedOrder(0));
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(n, flat)
    }

    pub fn from_flat(n: usize, add: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedOrder(0));
        }
        if add.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: add.len(),
            });
        }
        if let Some(&value) = add.iter().find(|&&v| v >= n) {
            return Err(Error::EntryOutOfRange { value, order: n });
        }
        let at = |a: usize, b: usize| add[a * n + b];
        for a in 0..n {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NoIdentityAtZero { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let neg = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| at(a, b) == 0 && at(b, a) == 0)
                    .ok_or(Error::NoInverse { a })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { order: n, add, neg })
    }

    pub fn standard(kind: StandardGroup) -> Result<Self> {
        match kind {
            StandardGroup::Cyclic(n) => {
                if n == 0 {
                    return Err(Error::UnsupportedOrder(0));
                }
                let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
                Self::from_flat(n, add)
            }
            StandardGroup::Klein4 => {
                let add = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
                Self::from_flat(4, add)
            }
            StandardGroup::Dihedral(m) => {
                if m == 0 {
                    return Err(Error::UnsupportedOrder(0));
                }
                // r^k s^j is encoded as k + m*j.
                let n = 2 * m;
                let mut add = Vec::with_capacity(n * n);
                for x in 0..n {
                    let (k1, j1) = (x % m, x / m);
                    for y in 0..n {
                        let (k2, j2) = (y % m, y / m);
                        let k = if j1 == 0 { k1 + k2 } else { k1 + m - k2 } % m;
                        add.push(k + m * ((j1 + j2) % 2));
                    }
                }
                Self::from_flat(n, add)
            }
            StandardGroup::Sym3 => {
                let perms = permutations3();
                let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
                let mut add = Vec::with_capacity(36);
                for a in &perms {
                    for b in &perms {
                        add.push(index([a[b[0]], a[b[1]], a[b[2]]]));
                    }
                }
                Self::from_flat(6, add)
            }
        }
    }

    pub fn trivial() -> Self {
        Self::standard(StandardGroup::Cyclic(1)).unwrap()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// `-g + h + g`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.add(self.add(self.neg[g], h), g)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.add(a, b) == self.add(b, a)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.len() == self.order
            && s.contains(0)
            && s.iter()
                .all(|a| s.iter().all(|b| s.contains(self.add(a, b))))
    }

    pub fn is_normal_subgroup(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s)
            && s.iter()
                .all(|h| self.elements().all(|g| s.contains(self.conj(g, h))))
    }

    /// The subgroup generated by a set.
    pub fn generated(&self, s: &ElementSet) -> ElementSet {
        let mut out = s.clone();
        out.insert(0);
        loop {
            let members: Vec<usize> = out.iter().collect();
            let mut grew = false;
            for &a in &members {
                for &b in &members {
                    grew |= out.insert(self.add(a, b));
                }
            }
            if !grew {
                return out;
            }
        }
    }

    /// All subgroups, in increasing bitmask order of their carriers.
    pub fn subgroups(&self) -> Result<Vec<ElementSet>> {
        self.filter_subsets(|s| self.is_subgroup(s))
    }

    pub fn normal_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.filter_subsets(|s| self.is_normal_subgroup(s))
    }

    pub(crate) fn filter_subsets(
        &self,
        mut keep: impl FnMut(&ElementSet) -> bool,
    ) -> Result<Vec<ElementSet>> {
        let n = self.order;
        if n > SUBSET_ORDER_BOUND {
            return Err(Error::UnsupportedOrder(n));
        }
        // Every subgroup contains 0, so only odd masks are candidates.
        Ok((0u64..1 << n)
            .filter(|m| m & 1 == 1)
            .map(|m| ElementSet::from_mask(n, m))
            .filter(|s| keep(s))
            .collect())
    }

    /// Every group endomorphism, in lexicographic order of image tables.
    pub fn endomorphisms(&self) -> Result<Vec<EndoMap>> {
        let n = self.order;
        if n > ENDO_ORDER_BOUND {
            return Err(Error::BudgetExceeded {
                budget: ENDO_ORDER_BOUND as u64,
            });
        }
        let mut out = Vec::new();
        let mut images = vec![0usize; n];
        self.extend_endo(&mut images, 1, &mut out);
        Ok(out)
    }

    fn extend_endo(&self, images: &mut [usize], next: usize, out: &mut Vec<EndoMap>) {
        let n = self.order;
        if next == n {
            out.push(EndoMap(images.to_vec()));
            return;
        }
        for v in 0..n {
            images[next] = v;
            // pairs whose arguments and sum are all assigned and involve `next`
            let consistent = (0..=next).all(|a| {
                (0..=next).all(|b| {
                    let s = self.add(a, b);
                    (a != next && b != next && s != next)
                        || s > next
                        || images[s] == self.add(images[a], images[b])
                })
            });
            if consistent {
                self.extend_endo(images, next + 1, out);
            }
        }
    }

    /// Whether every element has a unique decomposition through the normal
    /// subgroup `k` and the subgroup `h`. The three group-level formulations
    /// (sum and trivial intersection, unique `k + h`, unique `h + k'`) are
    /// evaluated separately and must agree.
    pub fn is_semidirect_pair(&self, k: &ElementSet, h: &ElementSet) -> Result<bool> {
        if !self.is_normal_subgroup(k) {
            return Err(Error::PreconditionViolated(
                "first argument is not a normal subgroup".into(),
            ));
        }
        if !self.is_subgroup(h) {
            return Err(Error::PreconditionViolated(
                "second argument is not a subgroup".into(),
            ));
        }
        let forms = semidirect_forms(self, k, h);
        assert!(
            forms[0] == forms[1] && forms[1] == forms[2],
            "semidirect formulations disagree: {forms:?}"
        );
        Ok(forms[0])
    }
}

/// The three formulations of an inner semidirect decomposition, computed
/// independently of each other.
pub(crate) fn semidirect_forms(g: &FiniteGroup, k: &ElementSet, h: &ElementSet) -> [bool; 3] {
    let mut sums = ElementSet::empty(g.order());
    for a in k.iter() {
        for b in h.iter() {
            sums.insert(g.add(a, b));
        }
    }
    let covers = sums.len_members() == g.order();
    let meets_trivially = k.intersection(h).len_members() == 1;

    let unique = |left_k: bool| {
        g.elements().all(|x| {
            k.iter()
                .flat_map(|a| h.iter().map(move |b| (a, b)))
                .filter(|&(a, b)| {
                    let s = if left_k { g.add(a, b) } else { g.add(b, a) };
                    s == x
                })
                .count()
                == 1
        })
    };
    [covers && meets_trivially, unique(true), unique(false)]
}

fn permutations3() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Fixture groups with a documented encoding.
///
/// * `Cyclic(n)`: `a + b = (a + b) mod n`.
/// * `Klein4`: bitwise xor on `0..4`; bit 0 is the first factor.
/// * `Dihedral(m)`: order `2m`, `r^k s^j` encoded as `k + m*j`.
/// * `Sym3`: one-line permutations of `{0,1,2}` in lexicographic order with
///   `(a + b)(x) = a(b(x))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGroup {
    Cyclic(usize),
    Klein4,
    Dihedral(usize),
    Sym3,
}

/// A raw map `G -> G`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EndoMap(pub Vec<usize>);

impl EndoMap {
    pub fn identity(n: usize) -> Self {
        EndoMap((0..n).collect())
    }

    pub fn zero(n: usize) -> Self {
        EndoMap(vec![0; n])
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.0[a]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_endomorphism(&self, g: &FiniteGroup) -> bool {
        self.len() == g.order()
            && g.elements().all(|a| {
                g.elements()
                    .all(|b| self.apply(g.add(a, b)) == g.add(self.apply(a), self.apply(b)))
            })
    }

    pub fn is_idempotent(&self) -> bool {
        // e(e(a)) = e(a) for all a, i.e. e fixes its image pointwise
        self.0.iter().all(|&v| self.0[v] == v)
    }

    pub fn kernel(&self) -> ElementSet {
        let mut k = ElementSet::empty(self.len());
        for (a, &v) in self.0.iter().enumerate() {
            if v == 0 {
                k.insert(a);
            }
        }
        k
    }

    pub fn image(&self) -> ElementSet {
        let mut h = ElementSet::empty(self.len());
        for &v in &self.0 {
            h.insert(v);
        }
        h
    }

    /// `(ker e, e(G))`.
    pub fn kernel_image(&self) -> (ElementSet, ElementSet) {
        (self.kernel(), self.image())
    }
}

/// A subset of the carrier `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    members: Vec<bool>,
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            members: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        ElementSet {
            members: vec![true; n],
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_elements(n, [0])
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for a in elements {
            s.insert(a);
        }
        s
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        ElementSet {
            members: (0..n).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.iter().fold(0, |m, i| m | 1 << i)
    }

    /// Size of the carrier this set lives in.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of members.
    pub fn len_members(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.members.get(a).copied().unwrap_or(false)
    }

    /// Returns true if `a` was newly added.
    pub fn insert(&mut self, a: usize) -> bool {
        !std::mem::replace(&mut self.members[a], true)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn is_zero(&self) -> bool {
        self.len_members() == 1 && self.contains(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::standard(StandardGroup::Cyclic(n)).unwrap()
    }

    #[test]
    fn validates_z2() {
        let g = FiniteGroup::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!((g.neg(0), g.neg(1)), (0, 1));
    }

    #[test]
    fn rejects_missing_inverse() {
        let err = FiniteGroup::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::NoInverse { a: 1 });
    }

    #[test]
    fn rejects_shifted_identity_and_ragged_rows() {
        let err = FiniteGroup::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::NoIdentityAtZero { a: 0 });
        let err = FiniteGroup::from_rows(&[vec![0, 1], vec![1]]).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { .. }));
        let err = FiniteGroup::from_rows(&[vec![0, 2], vec![1, 0]]).unwrap_err();
        assert_eq!(err, Error::EntryOutOfRange { value: 2, order: 2 });
    }

    #[test]
    fn rejects_nonassociative_loop() {
        // A loop of order 5 with identity 0 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_rows(&rows),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn standard_groups_validate() {
        for n in 1..=8 {
            assert_eq!(z(n).order(), n);
        }
        assert_eq!(z(4).add(3, 2), 1);
        assert!(FiniteGroup::standard(StandardGroup::Klein4)
            .unwrap()
            .is_abelian());
        for m in 1..=5 {
            let d = FiniteGroup::standard(StandardGroup::Dihedral(m)).unwrap();
            assert_eq!(d.order(), 2 * m);
            assert_eq!(d.is_abelian(), m <= 2);
        }
        let s3 = FiniteGroup::standard(StandardGroup::Sym3).unwrap();
        assert!(!s3.is_abelian());
        assert_eq!(
            FiniteGroup::standard(StandardGroup::Cyclic(0)),
            Err(Error::UnsupportedOrder(0))
        );
    }

    #[test]
    fn endomorphisms_of_small_cyclic_groups() {
        assert_eq!(
            FiniteGroup::trivial().endomorphisms().unwrap(),
            vec![EndoMap(vec![0])]
        );
        assert_eq!(
            z(2).endomorphisms().unwrap(),
            vec![EndoMap(vec![0, 0]), EndoMap(vec![0, 1])]
        );
        let expected: Vec<EndoMap> = (0..4)
            .map(|k| EndoMap((0..4).map(|a| a * k % 4).collect()))
            .collect();
        assert_eq!(z(4).endomorphisms().unwrap(), expected);
        assert!(matches!(
            z(9).endomorphisms(),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn idempotency_and_kernel_image() {
        let doubling = EndoMap(vec![0, 2, 0, 2]);
        assert!(doubling.is_endomorphism(&z(4)));
        assert!(!doubling.is_idempotent());
        assert!(EndoMap::identity(4).is_idempotent());
        assert!(EndoMap::zero(4).is_idempotent());

        let (k, h) = EndoMap::zero(2).kernel_image();
        assert_eq!((k, h), (ElementSet::full(2), ElementSet::zero(2)));
        let (k, h) = EndoMap::identity(2).kernel_image();
        assert_eq!((k, h), (ElementSet::zero(2), ElementSet::full(2)));

        // idempotent implies a decomposition; negation shows the converse fails
        for g in [z(4), FiniteGroup::standard(StandardGroup::Sym3).unwrap()] {
            for e in g
                .endomorphisms()
                .unwrap()
                .iter()
                .filter(|e| e.is_idempotent())
            {
                let (k, h) = e.kernel_image();
                assert!(g.is_semidirect_pair(&k, &h).unwrap(), "{e:?}");
            }
        }
        let negation = EndoMap(vec![0, 3, 2, 1]);
        assert!(!negation.is_idempotent());
        assert!(z(4)
            .is_semidirect_pair(&negation.kernel(), &negation.image())
            .unwrap());
    }

    #[test]
    fn semidirect_pairs() {
        let g = z(2);
        assert!(g
            .is_semidirect_pair(&ElementSet::full(2), &ElementSet::zero(2))
            .unwrap());
        let g = z(4);
        let two = ElementSet::from_elements(4, [0, 2]);
        assert!(!g.is_semidirect_pair(&two, &two).unwrap());
        let s3 = FiniteGroup::standard(StandardGroup::Sym3).unwrap();
        let a3 = ElementSet::from_elements(6, [0, 3, 4]);
        let t = ElementSet::from_elements(6, [0, 1]);
        assert!(s3.is_semidirect_pair(&a3, &t).unwrap());
        assert!(matches!(
            s3.is_semidirect_pair(&t, &a3),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn endomorphisms_form_a_monoid() {
        for g in [
            z(1),
            z(3),
            z(6),
            FiniteGroup::standard(StandardGroup::Klein4).unwrap(),
            FiniteGroup::standard(StandardGroup::Sym3).unwrap(),
        ] {
            let endos = g.endomorphisms().unwrap();
            assert!(endos.contains(&EndoMap::identity(g.order())));
            for e in &endos {
                assert!(e.is_endomorphism(&g));
                for f in &endos {
                    assert!(endos.binary_search(&e.compose(f)).is_ok());
                }
                if e.is_idempotent() {
                    let (k, h) = e.kernel_image();
                    assert!(g.is_semidirect_pair(&k, &h).unwrap());
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let s3 = FiniteGroup::standard(StandardGroup::Sym3).unwrap();
        let text = serde_json::to_string(&s3).unwrap();
        let back: FiniteGroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s3);
        let bad: std::result::Result<FiniteGroup, _> =
            serde_json::from_str(r#"{"order": 2, "add": [[0,1],[1,1]]}"#);
        assert!(bad.is_err());
    }
}

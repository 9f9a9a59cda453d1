//! Binary operations on a finite group and the left near-ring `B(G)` they form.
//!
//! `B(G)` is never materialized. Operations are values; sum, negation and
//! composition act pointwise on their tables.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// An `n × n` operation table, row = left argument.
///
/// Ordering is lexicographic on the flattened table for equal `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BinOpRepr", into = "BinOpRepr")]
pub struct BinOp {
    n: usize,
    table: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct BinOpRepr {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<BinOpRepr> for BinOp {
    type Error = Error;

    fn try_from(repr: BinOpRepr) -> Result<Self> {
        if repr.table.len() != repr.n {
            return Err(Error::SizeMismatch {
                expected: repr.n,
                found: repr.table.len(),
            });
        }
        BinOp::from_rows(&repr.table)
    }
}

impl From<BinOp> for BinOpRepr {
    fn from(op: BinOp) -> Self {
        BinOpRepr {
            n: op.n,
            table: op.rows(),
        }
    }
}

impl fmt::Debug for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinOp{:?}", self.rows())
    }
}

impl BinOp {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
        BinOp { n, table }
    }

    pub fn from_flat(n: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(&value) = table.iter().find(|&&v| v >= n) {
            return Err(Error::EntryOutOfRange { value, order: n });
        }
        Ok(BinOp { n, table })
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
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

    pub fn named(g: &FiniteGroup, name: NamedOp) -> Self {
        let n = g.order();
        match name {
            NamedOp::Pi1 => Self::from_fn(n, |a, _| a),
            NamedOp::Pi2 => Self::from_fn(n, |_, b| b),
            NamedOp::Null => Self::from_fn(n, |_, _| 0),
            NamedOp::Plus => Self::from_fn(n, |a, b| g.add(a, b)),
            NamedOp::PlusOp => Self::from_fn(n, |a, b| g.add(b, a)),
            NamedOp::Conj => Self::from_fn(n, |a, b| g.conj(a, b)),
        }
    }

    /// The operation `a·b = f(b)` for a map `f`.
    pub fn right_projection_through(map: &[usize]) -> Self {
        let n = map.len();
        Self::from_fn(n, |_, b| map[b])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn as_flat(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Row `a` as a map `b ↦ a·b`.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.n..(a + 1) * self.n]
    }

    fn check_size(&self, g: &FiniteGroup) -> Result<()> {
        if self.n != g.order() {
            return Err(Error::SizeMismatch {
                expected: g.order(),
                found: self.n,
            });
        }
        Ok(())
    }
}

/// The catalog of natural operations on a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedOp {
    /// `a ∘₀ b = 0`
    Null,
    /// `a π₁ b = a`
    Pi1,
    /// `a π₂ b = b`
    Pi2,
    /// `a + b`
    Plus,
    /// `b + a`
    PlusOp,
    /// `-a + b + a`
    Conj,
}

impl NamedOp {
    pub const ALL: [NamedOp; 6] = [
        NamedOp::Null,
        NamedOp::Pi1,
        NamedOp::Pi2,
        NamedOp::Plus,
        NamedOp::PlusOp,
        NamedOp::Conj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedOp::Null => "null",
            NamedOp::Pi1 => "pi1",
            NamedOp::Pi2 => "pi2",
            NamedOp::Plus => "plus",
            NamedOp::PlusOp => "plus_op",
            NamedOp::Conj => "conj",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|op| op.name() == s)
    }
}

impl fmt::Display for NamedOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_pair(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> Result<()> {
    f.check_size(g)?;
    h.check_size(g)
}

/// Pointwise sum: `a (f + g) b = (a f b) + (a g b)`.
pub fn op_add(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> Result<BinOp> {
    check_pair(g, f, h)?;
    Ok(add_unchecked(g, f, h))
}

/// Pointwise negation.
pub fn op_neg(g: &FiniteGroup, f: &BinOp) -> Result<BinOp> {
    f.check_size(g)?;
    Ok(neg_unchecked(g, f))
}

/// `f - h = f + (-h)`, i.e. `a (f - h) b = (a f b) - (a h b)`.
pub fn op_sub(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> Result<BinOp> {
    check_pair(g, f, h)?;
    Ok(BinOp::from_fn(g.order(), |a, b| {
        g.sub(f.get(a, b), h.get(a, b))
    }))
}

/// Near-ring product of `B(G)`: `a (f h) b = (a f b) h b`.
pub fn op_compose(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> Result<BinOp> {
    check_pair(g, f, h)?;
    Ok(compose_unchecked(f, h))
}

/// The product formula as literally printed, `a (f h) b = (a f b) h (a f b)`.
/// Kept to document which near-ring laws it breaks.
pub fn op_compose_literal(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> Result<BinOp> {
    check_pair(g, f, h)?;
    Ok(compose_literal_unchecked(f, h))
}

fn add_unchecked(g: &FiniteGroup, f: &BinOp, h: &BinOp) -> BinOp {
    BinOp::from_fn(g.order(), |a, b| g.add(f.get(a, b), h.get(a, b)))
}

fn neg_unchecked(g: &FiniteGroup, f: &BinOp) -> BinOp {
    BinOp::from_fn(g.order(), |a, b| g.neg(f.get(a, b)))
}

fn compose_unchecked(f: &BinOp, h: &BinOp) -> BinOp {
    BinOp::from_fn(f.n, |a, b| h.get(f.get(a, b), b))
}

fn compose_literal_unchecked(f: &BinOp, h: &BinOp) -> BinOp {
    BinOp::from_fn(f.n, |a, b| {
        let x = f.get(a, b);
        h.get(x, x)
    })
}

/// How much of `B(G)` to scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BgMode {
    /// Every triple of operations; needs `|G| ≤ 2`.
    Full,
    /// `triples` seeded random triples; needs `|G| ≤ 4`.
    Sample { triples: usize, seed: u64 },
}

/// A law of the near-ring `B(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BgLaw {
    AddAssociative,
    AddIdentity,
    AddInverse,
    ComposeAssociative,
    LeftDistributive,
    Pi1LeftIdentity,
    Pi1RightIdentity,
}

impl BgLaw {
    pub const ALL: [BgLaw; 7] = [
        BgLaw::AddAssociative,
        BgLaw::AddIdentity,
        BgLaw::AddInverse,
        BgLaw::ComposeAssociative,
        BgLaw::LeftDistributive,
        BgLaw::Pi1LeftIdentity,
        BgLaw::Pi1RightIdentity,
    ];
}

#[derive(Debug, Clone, Serialize)]
pub struct LawOutcome {
    pub law: BgLaw,
    /// First failing operations, in argument order.
    pub counterexample: Option<Vec<BinOp>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BgReport {
    pub order: usize,
    pub triples_checked: u64,
    pub laws: Vec<LawOutcome>,
    /// Laws that fail when the product is read as `(a f b) h (a f b)`.
    pub literal_formula_failures: Vec<BgLaw>,
}

impl BgReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(|l| l.counterexample.is_none())
    }
}

/// Checks that `B(G)` is a left near-ring with two-sided identity `π₁`.
pub fn verify_bg_nearring(g: &FiniteGroup, mode: BgMode) -> Result<BgReport> {
    let n = g.order();
    let triples: Box<dyn Iterator<Item = [BinOp; 3]>> = match mode {
        BgMode::Full => {
            if n > 2 {
                return Err(Error::BudgetExceeded { budget: 2 });
            }
            let all = all_binops(n);
            let m = all.len();
            Box::new((0..m * m * m).map(move |i| {
                [
                    all[i / (m * m)].clone(),
                    all[i / m % m].clone(),
                    all[i % m].clone(),
                ]
            }))
        }
        BgMode::Sample { triples, seed } => {
            if n > 4 {
                return Err(Error::BudgetExceeded { budget: 4 });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut random_op = move || BinOp::from_fn(n, |_, _| 0).randomized(&mut rng);
            let sampled: Vec<[BinOp; 3]> = (0..triples)
                .map(|_| [random_op(), random_op(), random_op()])
                .collect();
            Box::new(sampled.into_iter())
        }
    };

    let zero = BinOp::named(g, NamedOp::Null);
    let pi1 = BinOp::named(g, NamedOp::Pi1);
    let mut outcomes: Vec<LawOutcome> = BgLaw::ALL
        .iter()
        .map(|&law| LawOutcome {
            law,
            counterexample: None,
        })
        .collect();
    let mut literal_failed = [false; 7];
    let mut checked = 0u64;

    for [f, h, k] in triples {
        checked += 1;
        let record = |outcomes: &mut Vec<LawOutcome>, law: BgLaw, ok: bool, ops: &[&BinOp]| {
            let slot = &mut outcomes[law as usize];
            if !ok && slot.counterexample.is_none() {
                slot.counterexample = Some(ops.iter().map(|&o| o.clone()).collect());
            }
        };
        let assoc_add = add_unchecked(g, &add_unchecked(g, &f, &h), &k)
            == add_unchecked(g, &f, &add_unchecked(g, &h, &k));
        record(
            &mut outcomes,
            BgLaw::AddAssociative,
            assoc_add,
            &[&f, &h, &k],
        );
        let ident = add_unchecked(g, &f, &zero) == f && add_unchecked(g, &zero, &f) == f;
        record(&mut outcomes, BgLaw::AddIdentity, ident, &[&f]);
        let nf = neg_unchecked(g, &f);
        let inv = add_unchecked(g, &f, &nf) == zero && add_unchecked(g, &nf, &f) == zero;
        record(&mut outcomes, BgLaw::AddInverse, inv, &[&f]);

        for (literal, compose) in [
            (false, compose_unchecked as fn(&BinOp, &BinOp) -> BinOp),
            (true, compose_literal_unchecked),
        ] {
            let results = [
                (
                    BgLaw::ComposeAssociative,
                    compose(&compose(&f, &h), &k) == compose(&f, &compose(&h, &k)),
                ),
                (
                    BgLaw::LeftDistributive,
                    compose(&f, &add_unchecked(g, &h, &k))
                        == add_unchecked(g, &compose(&f, &h), &compose(&f, &k)),
                ),
                (BgLaw::Pi1LeftIdentity, compose(&pi1, &f) == f),
                (BgLaw::Pi1RightIdentity, compose(&f, &pi1) == f),
            ];
            for (law, ok) in results {
                if literal {
                    literal_failed[law as usize] |= !ok;
                } else {
                    let ops: &[&BinOp] = match law {
                        BgLaw::ComposeAssociative | BgLaw::LeftDistributive => &[&f, &h, &k],
                        _ => &[&f],
                    };
                    record(&mut outcomes, law, ok, ops);
                }
            }
        }
    }

    Ok(BgReport {
        order: n,
        triples_checked: checked,
        laws: outcomes,
        literal_formula_failures: BgLaw::ALL
            .into_iter()
            .filter(|&l| literal_failed[l as usize])
            .collect(),
    })
}

impl BinOp {
    fn randomized(mut self, rng: &mut impl Rng) -> Self {
        let n = self.n;
        for v in &mut self.table {
            *v = rng.gen_range(0..n);
        }
        self
    }
}

/// Every operation on `0..n`, in lexicographic order. `n^(n²)` entries.
pub fn all_binops(n: usize) -> Vec<BinOp> {
    let cells = n * n;
    let count = n.pow(cells as u32);
    (0..count)
        .map(|mut i| {
            let mut table = vec![0; cells];
            for slot in table.iter_mut().rev() {
                *slot = i % n;
                i /= n;
            }
            BinOp { n, table }
        })
        .collect()
}

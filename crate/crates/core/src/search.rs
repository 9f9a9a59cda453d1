//! Backtracking enumeration of operation tables on a small group.
//!
//! Cells are filled in row-major order. After each assignment, every
//! constraint instance whose cells are all assigned and which reads the new
//! cell is evaluated, cheapest constraints first. The budget counts
//! assignments, so node counts are reproducible across platforms.
//!
//! The first row is enumerated up front; each surviving prefix is an
//! independent job. Jobs are the same whether one worker or many run them,
//! so results and node counts never depend on the worker count.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::binop::BinOp;
use crate::diring::{skew_to_weak_unchecked, weak_to_skew_unchecked};
use crate::error::{Error, Result};
use crate::group::{EndoMap, FiniteGroup};

pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Largest order the enumerator accepts.
pub const MAX_SEARCH_ORDER: usize = 5;

const UNSET: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    Associative,
    LeftDistributive,
    LeftSkewDistributive,
    WeaklyAssociative,
    /// `(G, f)` is a group with identity 0.
    GroupWithZeroIdentity,
    /// `0 f b = 0` for all `b`.
    ZeroSymmetric,
    /// The searched table and `partner` satisfy `a + a·b = a∘b`; `role`
    /// says which of the two the searched table is.
    DiringPartner {
        partner: BinOp,
        role: Role,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Circ,
    Dot,
}

impl FromStr for Constraint {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "assoc" | "associative" => Constraint::Associative,
            "ldist" | "left_distributive" => Constraint::LeftDistributive,
            "lskew" | "left_skew_distributive" => Constraint::LeftSkewDistributive,
            "wassoc" | "weakly_associative" => Constraint::WeaklyAssociative,
            "group0" | "group_with_zero_identity" => Constraint::GroupWithZeroIdentity,
            "zsym" | "zero_symmetric" => Constraint::ZeroSymmetric,
            other => return Err(format!("unknown constraint `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedup {
    #[default]
    Labeled,
    UpToAut,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub group: FiniteGroup,
    pub constraints: Vec<Constraint>,
    pub budget: u64,
    pub dedup: Dedup,
    pub workers: usize,
}

impl SearchSpec {
    pub fn new(group: FiniteGroup, constraints: Vec<Constraint>) -> Self {
        SearchSpec {
            group,
            constraints,
            budget: DEFAULT_BUDGET,
            dedup: Dedup::Labeled,
            workers: 1,
        }
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn dedup(mut self, dedup: Dedup) -> Self {
        self.dedup = dedup;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult<T> {
    /// Sorted, duplicate-free.
    pub tables: Vec<T>,
    pub nodes_explored: u64,
    /// False when the budget ran out.
    pub complete: bool,
}

impl<T> SearchResult<T> {
    pub fn count(&self) -> usize {
        self.tables.len()
    }

    pub fn require_complete(self, budget: u64) -> Result<Self> {
        if self.complete {
            Ok(self)
        } else {
            Err(Error::BudgetExceeded { budget })
        }
    }

    fn map<U>(self, f: impl FnMut(T) -> U) -> SearchResult<U> {
        SearchResult {
            tables: self.tables.into_iter().map(f).collect(),
            nodes_explored: self.nodes_explored,
            complete: self.complete,
        }
    }
}

/// Constraint checks in propagation order.
#[derive(Debug, Clone)]
enum Check {
    Partner(BinOp, Role),
    ZeroSymmetric,
    GroupCell,
    LeftDistributive,
    LeftSkewDistributive,
    WeaklyAssociative,
    Associative,
}

impl Check {
    fn rank(&self) -> u8 {
        match self {
            Check::Partner(..) | Check::ZeroSymmetric | Check::GroupCell => 0,
            Check::LeftDistributive | Check::LeftSkewDistributive => 1,
            Check::WeaklyAssociative => 2,
            Check::Associative => 3,
        }
    }
}

fn compile(constraints: &[Constraint]) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut assoc = false;
    for c in constraints {
        match c {
            Constraint::Associative => assoc = true,
            Constraint::GroupWithZeroIdentity => {
                assoc = true;
                checks.push(Check::GroupCell);
            }
            Constraint::LeftDistributive => checks.push(Check::LeftDistributive),
            Constraint::LeftSkewDistributive => checks.push(Check::LeftSkewDistributive),
            Constraint::WeaklyAssociative => checks.push(Check::WeaklyAssociative),
            Constraint::ZeroSymmetric => checks.push(Check::ZeroSymmetric),
            Constraint::DiringPartner { partner, role } => {
                checks.push(Check::Partner(partner.clone(), *role))
            }
        }
    }
    if assoc {
        checks.push(Check::Associative);
    }
    checks.sort_by_key(Check::rank);
    checks
}

struct Searcher<'a> {
    g: &'a FiniteGroup,
    n: usize,
    checks: &'a [Check],
}

/// Partial-table lookup; `None` for cells not yet assigned.
struct Reader<'t> {
    table: &'t [usize],
    n: usize,
}

impl Reader<'_> {
    #[inline]
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.table[a * self.n + b];
        (v != UNSET).then_some(v)
    }
}

impl Searcher<'_> {
    /// Whether the assignment at `cell` keeps every constraint satisfiable.
    fn consistent(&self, table: &[usize], cell: usize) -> bool {
        let (g, n) = (self.g, self.n);
        let (r, c) = (cell / n, cell % n);
        let v = table[cell];
        for check in self.checks {
            let ok = match check {
                Check::Partner(p, Role::Dot) => g.add(r, v) == p.get(r, c),
                Check::Partner(p, Role::Circ) => v == g.add(r, p.get(r, c)),
                Check::ZeroSymmetric => r != 0 || v == 0,
                Check::GroupCell => {
                    (r != 0 || v == c)
                        && (c != 0 || v == r)
                        && (0..c).all(|y| table[r * n + y] != v)
                        && (0..r).all(|x| table[x * n + c] != v)
                }
                Check::LeftDistributive => self.scan_triples(table, Some(r), |rd, a, b, x| {
                    let lhs = rd.get(a, g.add(b, x))?;
                    let rhs = g.add(rd.get(a, b)?, rd.get(a, x)?);
                    Some(lhs == rhs)
                }),
                Check::LeftSkewDistributive => self.scan_triples(table, Some(r), |rd, a, b, x| {
                    let lhs = rd.get(a, g.add(b, x))?;
                    let rhs = g.add(g.sub(rd.get(a, b)?, a), rd.get(a, x)?);
                    Some(lhs == rhs)
                }),
                Check::WeaklyAssociative => self.scan_triples(table, None, |rd, a, b, x| {
                    let ab = rd.get(a, b)?;
                    let lhs = rd.get(g.add(a, ab), x)?;
                    let bx = rd.get(b, x)?;
                    let rhs = rd.get(a, bx)?;
                    Some(lhs == rhs)
                }),
                Check::Associative => self.scan_triples(table, None, |rd, a, b, x| {
                    let ab = rd.get(a, b)?;
                    let lhs = rd.get(ab, x)?;
                    let bx = rd.get(b, x)?;
                    let rhs = rd.get(a, bx)?;
                    Some(lhs == rhs)
                }),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Evaluates `law` on every triple whose cells are all assigned. Any
    /// failure must involve the newest cell, since the parent node passed.
    /// Row-local laws only need the row being filled.
    fn scan_triples(
        &self,
        table: &[usize],
        row: Option<usize>,
        law: impl Fn(&Reader<'_>, usize, usize, usize) -> Option<bool>,
    ) -> bool {
        let n = self.n;
        let rd = Reader { table, n };
        let rows = match row {
            Some(r) => r..r + 1,
            None => 0..n,
        };
        for a in rows {
            for b in 0..n {
                for x in 0..n {
                    if law(&rd, a, b, x) == Some(false) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Depth-first fill from `cell` onward. Returns false if `limit` ran out.
    fn dfs(
        &self,
        table: &mut Vec<usize>,
        cell: usize,
        stop: usize,
        nodes: &mut u64,
        limit: u64,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if cell == stop {
            out.push(table.clone());
            return true;
        }
        for v in 0..self.n {
            *nodes += 1;
            if *nodes > limit {
                table[cell] = UNSET;
                return false;
            }
            table[cell] = v;
            if self.consistent(table, cell) && !self.dfs(table, cell + 1, stop, nodes, limit, out) {
                table[cell] = UNSET;
                return false;
            }
        }
        table[cell] = UNSET;
        true
    }
}

fn check_order(g: &FiniteGroup, constraints: &[Constraint]) -> Result<()> {
    let n = g.order();
    let grouped = constraints.contains(&Constraint::GroupWithZeroIdentity) && constraints.len() > 1;
    if n > MAX_SEARCH_ORDER || (grouped && n > 4) {
        return Err(Error::UnsupportedOrder(n));
    }
    for c in constraints {
        if let Constraint::DiringPartner { partner, .. } = c {
            if partner.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: partner.n(),
                });
            }
        }
    }
    Ok(())
}

/// Every table on the group satisfying all constraints.
pub fn enumerate_binops(spec: &SearchSpec) -> Result<SearchResult<BinOp>> {
    if spec.budget == 0 {
        return Err(Error::PreconditionViolated(
            "budget must be positive".into(),
        ));
    }
    check_order(&spec.group, &spec.constraints)?;
    let checks = compile(&spec.constraints);
    let n = spec.group.order();
    let searcher = Searcher {
        g: &spec.group,
        n,
        checks: &checks,
    };
    let cells = n * n;

    let mut prefixes = Vec::new();
    let mut prefix_nodes = 0u64;
    let mut table = vec![UNSET; cells];
    let prefix_done = searcher.dfs(
        &mut table,
        0,
        n,
        &mut prefix_nodes,
        spec.budget,
        &mut prefixes,
    );
    if !prefix_done {
        return Ok(SearchResult {
            tables: Vec::new(),
            nodes_explored: prefix_nodes,
            complete: false,
        });
    }

    let limit = spec.budget - prefix_nodes;
    let outcomes = run_jobs(&prefixes, spec.workers, |prefix| {
        let mut table = prefix.clone();
        let mut nodes = 0u64;
        let mut found = Vec::new();
        searcher.dfs(&mut table, n, cells, &mut nodes, limit, &mut found);
        (nodes, found)
    });

    let mut nodes_explored = prefix_nodes;
    let mut tables = Vec::new();
    for (nodes, found) in outcomes {
        nodes_explored += nodes;
        tables.extend(
            found
                .into_iter()
                .map(|t| BinOp::from_flat(n, t).expect("in range")),
        );
    }
    tables.sort();
    tables.dedup();
    let result = SearchResult {
        tables,
        nodes_explored,
        complete: nodes_explored <= spec.budget,
    };
    Ok(match spec.dedup {
        Dedup::Labeled => result,
        Dedup::UpToAut => dedup_up_to_aut(&spec.group, result),
    })
}

/// Runs `job` on every input with `workers` threads; outputs keep input order.
fn run_jobs<I: Sync, O: Send>(
    inputs: &[I],
    workers: usize,
    job: impl Fn(&I) -> O + Sync,
) -> Vec<O> {
    if workers <= 1 || inputs.len() <= 1 {
        return inputs.iter().map(job).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<O>>> = inputs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..workers.min(inputs.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= inputs.len() {
                    break;
                }
                let out = job(&inputs[i]);
                *slots[i].lock().unwrap() = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().unwrap().expect("every job ran"))
        .collect()
}

/// A diring candidate: `a∘b = a + a·b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TablePair {
    pub circ: BinOp,
    pub dot: BinOp,
}

/// Pairs `(∘, ·)` with `·` left distributive and weakly associative, plus
/// any extra constraints on `·`; `∘` is recovered from the defining
/// identity. Equivalent to `∘` associative, `·` left distributive and
/// `π₁ = ∘ - ·`.
pub fn enumerate_dirings(
    g: &FiniteGroup,
    extra: &[Constraint],
    budget: u64,
    workers: usize,
) -> Result<SearchResult<TablePair>> {
    let mut constraints = vec![Constraint::LeftDistributive, Constraint::WeaklyAssociative];
    constraints.extend(extra.iter().cloned());
    let spec = SearchSpec::new(g.clone(), constraints)
        .budget(budget)
        .workers(workers);
    let mut result = enumerate_binops(&spec)?.map(|dot| TablePair {
        circ: weak_to_skew_unchecked(g, &dot),
        dot,
    });
    result.tables.sort();
    Ok(result)
}

/// The same pairs reached from the other side: `∘` associative and left
/// skew distributive, `·` recovered as `-a + a∘b`.
pub fn enumerate_skew_pairs(
    g: &FiniteGroup,
    budget: u64,
    workers: usize,
) -> Result<SearchResult<TablePair>> {
    let spec = SearchSpec::new(
        g.clone(),
        vec![Constraint::Associative, Constraint::LeftSkewDistributive],
    )
    .budget(budget)
    .workers(workers);
    let mut result = enumerate_binops(&spec)?.map(|circ| TablePair {
        dot: skew_to_weak_unchecked(g, &circ),
        circ,
    });
    result.tables.sort();
    Ok(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    NearRing,
    SkewRing,
    WeakRing,
    Digroup,
    SkewBrace,
}

impl StructureKind {
    pub fn constraints(self) -> Vec<Constraint> {
        use Constraint::*;
        match self {
            StructureKind::NearRing => vec![Associative, LeftDistributive],
            StructureKind::SkewRing => vec![Associative, LeftSkewDistributive],
            StructureKind::WeakRing => vec![LeftDistributive, WeaklyAssociative],
            StructureKind::Digroup => vec![GroupWithZeroIdentity],
            StructureKind::SkewBrace => vec![GroupWithZeroIdentity, LeftSkewDistributive],
        }
    }
}

/// Labeled count of the tables making `G` a structure of the given kind.
pub fn count_structures(
    g: &FiniteGroup,
    kind: StructureKind,
    budget: u64,
) -> Result<(usize, SearchResult<BinOp>)> {
    if g.order() > 4 {
        return Err(Error::UnsupportedOrder(g.order()));
    }
    let spec = SearchSpec::new(g.clone(), kind.constraints()).budget(budget);
    let result = enumerate_binops(&spec)?.require_complete(budget)?;
    Ok((result.count(), result))
}

/// Tables that can be transported along a relabeling of the group.
pub trait Relabel {
    /// `σ·f`, where `(σ·f)(a, b) = σ(f(σ⁻¹a, σ⁻¹b))`.
    fn relabel(&self, sigma: &EndoMap, inverse: &EndoMap) -> Self;
}

impl Relabel for BinOp {
    fn relabel(&self, sigma: &EndoMap, inverse: &EndoMap) -> Self {
        BinOp::from_fn(self.n(), |a, b| {
            sigma.apply(self.get(inverse.apply(a), inverse.apply(b)))
        })
    }
}

impl Relabel for TablePair {
    fn relabel(&self, sigma: &EndoMap, inverse: &EndoMap) -> Self {
        TablePair {
            circ: self.circ.relabel(sigma, inverse),
            dot: self.dot.relabel(sigma, inverse),
        }
    }
}

pub fn automorphisms(g: &FiniteGroup) -> Result<Vec<EndoMap>> {
    Ok(g.endomorphisms()?
        .into_iter()
        .filter(|e| e.image().is_full())
        .collect())
}

fn inverse_map(sigma: &EndoMap) -> EndoMap {
    let mut inv = vec![0; sigma.len()];
    for (a, &b) in sigma.0.iter().enumerate() {
        inv[b] = a;
    }
    EndoMap(inv)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Orbit<T> {
    /// Lexicographic minimum of the orbit.
    pub representative: T,
    pub size: usize,
}

/// Orbits of `Aut(G, +)` on a set of tables closed under the action.
pub fn orbits<T: Relabel + Ord + Clone>(g: &FiniteGroup, items: &[T]) -> Vec<Orbit<T>> {
    let auts: Vec<(EndoMap, EndoMap)> = automorphisms(g)
        .expect("search orders are within the endomorphism bound")
        .into_iter()
        .map(|s| {
            let inv = inverse_map(&s);
            (s, inv)
        })
        .collect();
    let mut orbits: Vec<Orbit<T>> = Vec::new();
    let mut seen: BTreeSet<T> = BTreeSet::new();
    for item in items {
        if seen.contains(item) {
            continue;
        }
        let orbit: BTreeSet<T> = auts.iter().map(|(s, inv)| item.relabel(s, inv)).collect();
        let representative = orbit
            .iter()
            .next()
            .expect("identity is an automorphism")
            .clone();
        orbits.push(Orbit {
            representative,
            size: orbit.len(),
        });
        seen.extend(orbit);
    }
    orbits.sort();
    orbits
}

/// Keeps one lexicographically minimal representative per orbit.
pub fn dedup_up_to_aut<T: Relabel + Ord + Clone>(
    g: &FiniteGroup,
    result: SearchResult<T>,
) -> SearchResult<T> {
    let reps = orbits(g, &result.tables)
        .into_iter()
        .map(|o| o.representative)
        .collect();
    SearchResult {
        tables: reps,
        nodes_explored: result.nodes_explored,
        complete: result.complete,
    }
}

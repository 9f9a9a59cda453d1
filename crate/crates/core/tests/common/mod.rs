//! Brute-force oracles that share nothing with the library beyond the group
//! tables themselves. Operations are flat row-major `Vec<usize>`.

#![allow(dead_code)]

use dirings::FiniteGroup;

pub type Table = Vec<usize>;

/// All `n^(n*n)` tables, first cell most significant, i.e. in
/// lexicographic order of the flattened table.
pub fn all_tables(n: usize) -> Vec<Table> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total)
        .map(|mut i| {
            let mut t = vec![0; cells];
            for c in (0..cells).rev() {
                t[c] = i % n;
                i /= n;
            }
            t
        })
        .collect()
}

pub fn at(t: &[usize], n: usize, a: usize, b: usize) -> usize {
    t[a * n + b]
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

pub fn assoc(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    triples(n).all(|(a, b, c)| at(t, n, at(t, n, a, b), c) == at(t, n, a, at(t, n, b, c)))
}

pub fn comm(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).all(|b| at(t, n, a, b) == at(t, n, b, a)))
}

pub fn ldist(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    triples(n).all(|(a, b, c)| at(t, n, a, g.add(b, c)) == g.add(at(t, n, a, b), at(t, n, a, c)))
}

pub fn rdist(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    triples(n).all(|(a, b, c)| at(t, n, g.add(a, b), c) == g.add(at(t, n, a, c), at(t, n, b, c)))
}

/// `a(b + c) = ab - a + ac`.
pub fn lskew(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    triples(n).all(|(a, b, c)| {
        at(t, n, a, g.add(b, c)) == g.add(g.add(at(t, n, a, b), g.neg(a)), at(t, n, a, c))
    })
}

/// `(a + ab)c = a(bc)`.
pub fn wassoc(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    triples(n).all(|(a, b, c)| at(t, n, g.add(a, at(t, n, a, b)), c) == at(t, n, a, at(t, n, b, c)))
}

/// `(G, t)` is a group with identity 0.
pub fn group0(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    assoc(g, t)
        && (0..n).all(|a| at(t, n, 0, a) == a && at(t, n, a, 0) == a)
        && (0..n).all(|a| (0..n).any(|b| at(t, n, a, b) == 0 && at(t, n, b, a) == 0))
}

pub fn zsym(g: &FiniteGroup, t: &[usize]) -> bool {
    (0..g.order()).all(|b| at(t, g.order(), 0, b) == 0)
}

pub fn skew_ring(g: &FiniteGroup, t: &[usize]) -> bool {
    assoc(g, t) && lskew(g, t)
}

pub fn weak_ring(g: &FiniteGroup, t: &[usize]) -> bool {
    ldist(g, t) && wassoc(g, t)
}

pub fn near_ring(g: &FiniteGroup, t: &[usize]) -> bool {
    assoc(g, t) && ldist(g, t)
}

pub fn local_right_identities(g: &FiniteGroup, t: &[usize]) -> bool {
    let n = g.order();
    (0..n).all(|a| (0..n).any(|e| at(t, n, a, e) == a))
}

/// `a·b = -a + a∘b`.
pub fn dot_of(g: &FiniteGroup, circ: &[usize]) -> Table {
    let n = g.order();
    (0..n * n).map(|i| g.add(g.neg(i / n), circ[i])).collect()
}

/// `a∘b = a + a·b`.
pub fn circ_of(g: &FiniteGroup, dot: &[usize]) -> Table {
    let n = g.order();
    (0..n * n).map(|i| g.add(i / n, dot[i])).collect()
}

/// Every map `G -> G` as an image vector.
pub fn all_maps(n: usize) -> Vec<Vec<usize>> {
    let total = n.pow(n as u32);
    (0..total)
        .map(|mut i| {
            let mut m = vec![0; n];
            for slot in m.iter_mut().rev() {
                *slot = i % n;
                i /= n;
            }
            m
        })
        .collect()
}

pub fn is_hom(g: &FiniteGroup, m: &[usize], ops: &[Table]) -> bool {
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            m[g.add(a, b)] == g.add(m[a], m[b])
                && ops
                    .iter()
                    .all(|t| m[at(t, n, a, b)] == at(t, n, m[a], m[b]))
        })
    })
}

pub fn idempotent(m: &[usize]) -> bool {
    m.iter().all(|&v| m[v] == v)
}

pub fn idempotent_endos(g: &FiniteGroup, ops: &[Table]) -> Vec<Vec<usize>> {
    all_maps(g.order())
        .into_iter()
        .filter(|m| idempotent(m) && is_hom(g, m, ops))
        .collect()
}

/// Set partitions of `0..n` as canonical labelings (restricted growth
/// strings).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for label in 0..=next {
            prefix.push(label);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Partitions compatible with `+`, negation and every operation.
pub fn congruences(g: &FiniteGroup, ops: &[Table]) -> Vec<Vec<usize>> {
    let n = g.order();
    partitions(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|a| {
                (0..n).all(|a2| {
                    p[a] != p[a2]
                        || (p[g.neg(a)] == p[g.neg(a2)]
                            && (0..n).all(|b| {
                                (0..n).all(|b2| {
                                    p[b] != p[b2]
                                        || (p[g.add(a, b)] == p[g.add(a2, b2)]
                                            && ops
                                                .iter()
                                                .all(|t| p[at(t, n, a, b)] == p[at(t, n, a2, b2)]))
                                })
                            }))
                })
            })
        })
        .collect()
}

pub fn zero_class(p: &[usize]) -> Vec<usize> {
    (0..p.len()).filter(|&a| p[a] == p[0]).collect()
}

/// Subsets containing 0 closed under `+`, negation and the operations.
pub fn subalgebras(g: &FiniteGroup, ops: &[Table]) -> Vec<Vec<usize>> {
    let n = g.order();
    (0u64..1 << n)
        .filter(|m| m & 1 == 1)
        .map(|m| (0..n).filter(|&a| m >> a & 1 == 1).collect::<Vec<_>>())
        .filter(|s| {
            s.iter().all(|&a| {
                s.contains(&g.neg(a))
                    && s.iter().all(|&b| {
                        s.contains(&g.add(a, b)) && ops.iter().all(|t| s.contains(&at(t, n, a, b)))
                    })
            })
        })
        .collect()
}

/// `K + H = G` and `K ∩ H = {0}`.
pub fn complements(g: &FiniteGroup, k: &[usize], h: &[usize]) -> bool {
    let n = g.order();
    let meet = k.iter().filter(|a| h.contains(a)).count() == 1;
    let mut sums = vec![false; n];
    for &a in k {
        for &b in h {
            sums[g.add(a, b)] = true;
        }
    }
    meet && sums.iter().all(|&x| x)
}

//! The full check suite, run group by group.
//!
//! Orders up to [`SEARCH_ORDER`] use exhaustive search for every family of
//! structures. Larger groups fall back to the named operations, which keeps
//! the suite total on `S3`.

use serde::Serialize;

use crate::axioms::{self, AxiomProfile};
use crate::binop::{verify_bg_nearring, BgMode, BinOp, NamedOp};
use crate::diring::{self, Direction, Diring};
use crate::error::Result;
use crate::group::{ElementSet, EndoMap, FiniteGroup};
use crate::omega::OmegaGroup;
use crate::search::{self, StructureKind, TablePair, DEFAULT_BUDGET};

/// Largest order on which structures are enumerated rather than taken from
/// the named catalog.
pub const SEARCH_ORDER: usize = 4;

/// Largest order on which both diring enumerations are compared.
pub const CROSS_CHECK_ORDER: usize = 3;

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub budget: u64,
    pub workers: usize,
    /// Seed of the sampled `B(G)` check on groups of order 3.
    pub bg_seed: u64,
    pub bg_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget: DEFAULT_BUDGET,
            workers: 1,
            bg_seed: 1,
            bg_samples: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub group: String,
    pub order: usize,
    pub rows: Vec<CheckRow>,
}

impl GroupReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.passed)
    }
}

/// Structures on one group, either enumerated or taken from the catalog.
#[derive(Debug, Clone)]
pub struct Census {
    pub exhaustive: bool,
    pub skew_rings: Vec<BinOp>,
    pub weak_rings: Vec<BinOp>,
    pub near_rings: Vec<BinOp>,
    /// Dirings with `∘` associative and `·` left distributive.
    pub dirings: Vec<TablePair>,
}

impl Census {
    pub fn collect(g: &FiniteGroup, cfg: &VerifyConfig) -> Result<Self> {
        if g.order() <= SEARCH_ORDER {
            let find = |kind: StructureKind| -> Result<Vec<BinOp>> {
                let spec = search::SearchSpec::new(g.clone(), kind.constraints())
                    .budget(cfg.budget)
                    .workers(cfg.workers);
                Ok(search::enumerate_binops(&spec)?
                    .require_complete(cfg.budget)?
                    .tables)
            };
            let dirings = search::enumerate_dirings(g, &[], cfg.budget, cfg.workers)?
                .require_complete(cfg.budget)?
                .tables;
            Ok(Census {
                exhaustive: true,
                skew_rings: find(StructureKind::SkewRing)?,
                weak_rings: find(StructureKind::WeakRing)?,
                near_rings: find(StructureKind::NearRing)?,
                dirings,
            })
        } else {
            let named: Vec<BinOp> = NamedOp::ALL.iter().map(|&op| BinOp::named(g, op)).collect();
            let pick = |keep: fn(&axioms::StructureClass) -> bool| {
                let mut v: Vec<BinOp> = named
                    .iter()
                    .filter(|f| keep(&axioms::classify(g, f)))
                    .cloned()
                    .collect();
                v.sort();
                v.dedup();
                v
            };
            let skew_rings = pick(|c| c.left_skew_ring);
            let mut dirings: Vec<TablePair> = skew_rings
                .iter()
                .map(|c| TablePair {
                    circ: c.clone(),
                    dot: diring::skew_to_weak_unchecked(g, c),
                })
                .collect();
            dirings.sort();
            Ok(Census {
                exhaustive: false,
                weak_rings: pick(|c| c.left_weak_ring),
                near_rings: pick(|c| c.left_near_ring),
                skew_rings,
                dirings,
            })
        }
    }

    fn source(&self) -> &'static str {
        if self.exhaustive {
            "enumerated"
        } else {
            "named"
        }
    }
}

/// Profile flags of a named operation on any group, in the order assoc,
/// comm, ldist, rdist, lskew, wassoc.
pub fn expected_profile(op: NamedOp, nontrivial: bool, abelian: bool) -> [bool; 6] {
    let nt = !nontrivial;
    match op {
        NamedOp::Null => [true, true, true, true, nt, true],
        NamedOp::Pi1 => [true, nt, nt, true, true, nt],
        NamedOp::Pi2 => [true, nt, true, nt, nt, true],
        NamedOp::Plus | NamedOp::PlusOp => [true, abelian, nt, nt, true, nt],
        // conj is π₂ on an abelian group
        NamedOp::Conj => [abelian, nt, true, nt, nt, true],
    }
}

pub fn profile_flags(p: &AxiomProfile) -> [bool; 6] {
    [
        p.associative,
        p.commutative,
        p.left_distributive,
        p.right_distributive,
        p.left_skew_distributive,
        p.weakly_associative,
    ]
}

type IdealCheck = fn(&FiniteGroup, &BinOp, &ElementSet) -> bool;

struct Suite {
    rows: Vec<CheckRow>,
}

impl Suite {
    fn row(&mut self, name: &str, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, e.to_string()));
        self.rows.push(CheckRow {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn idempotent_endos(g: &FiniteGroup) -> Result<Vec<EndoMap>> {
    Ok(g.endomorphisms()?
        .into_iter()
        .filter(EndoMap::is_idempotent)
        .collect())
}

/// Ω-groups used for the endomorphism checks: the bare group, the group
/// with each named pointed operation, and on order 2 every skew ring.
fn omega_fixtures(g: &FiniteGroup, census: &Census) -> Result<Vec<OmegaGroup>> {
    let mut ops: Vec<BinOp> = NamedOp::ALL
        .iter()
        .map(|&op| BinOp::named(g, op))
        .filter(|f| f.get(0, 0) == 0)
        .collect();
    if g.order() <= 2 {
        ops.extend(census.skew_rings.iter().cloned());
    }
    ops.sort();
    ops.dedup();
    let mut out = vec![OmegaGroup::plain(g.clone())];
    for op in ops {
        out.push(OmegaGroup::from_binops(g.clone(), &[op])?);
    }
    Ok(out)
}

/// Runs every check on `g`.
pub fn verify_group(label: &str, g: &FiniteGroup, cfg: &VerifyConfig) -> GroupReport {
    let mut suite = Suite { rows: Vec::new() };
    let n = g.order();
    let nontrivial = n > 1;

    suite.row("named operation profiles", {
        let mut bad = Vec::new();
        for op in NamedOp::ALL {
            let got = profile_flags(&axioms::profile(g, &BinOp::named(g, op)));
            let want = expected_profile(op, nontrivial, g.is_abelian());
            if got != want {
                bad.push(op.name());
            }
        }
        let classes = [
            (
                NamedOp::Plus,
                axioms::classify(g, &BinOp::named(g, NamedOp::Plus)).left_skew_brace,
            ),
            (NamedOp::Pi2, {
                let c = axioms::classify(g, &BinOp::named(g, NamedOp::Pi2));
                c.left_weak_ring && c.left_near_ring
            }),
            (
                NamedOp::Pi1,
                axioms::classify(g, &BinOp::named(g, NamedOp::Pi1)).left_skew_ring,
            ),
        ];
        bad.extend(
            classes
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(op, _)| op.name()),
        );
        Ok((
            bad.is_empty(),
            if bad.is_empty() {
                "six profiles match".into()
            } else {
                format!("mismatch: {}", bad.join(", "))
            },
        ))
    });

    let decompositions = [
        (
            "decomposition pi1 - null",
            NamedOp::Pi1,
            NamedOp::Null,
            true,
        ),
        (
            "decomposition plus - pi2",
            NamedOp::Plus,
            NamedOp::Pi2,
            false,
        ),
        (
            "decomposition plus_op - conj",
            NamedOp::PlusOp,
            NamedOp::Conj,
            false,
        ),
    ];
    for (name, circ, dot, zero_symmetric) in decompositions {
        suite.row(
            name,
            (|| {
                let d = Diring::new(g.clone(), BinOp::named(g, circ), BinOp::named(g, dot))?;
                let p = d.parts()?;
                let (full, zero) = (ElementSet::full(n), ElementSet::zero(n));
                let expected = if zero_symmetric {
                    (&full, &zero)
                } else {
                    (&zero, &full)
                };
                let ok = d.difference_is_pi1()
                    && (&p.zero_symmetric, &p.constant) == expected
                    && p.all_hold();
                Ok((
                    ok,
                    format!(
                        "({}, {}) with G0 of size {}",
                        circ.name(),
                        dot.name(),
                        p.zero_symmetric.len_members()
                    ),
                ))
            })(),
        );
    }

    let census = match Census::collect(g, cfg) {
        Ok(c) => c,
        Err(e) => {
            suite.row("census", Err(e));
            return GroupReport {
                group: label.to_string(),
                order: n,
                rows: suite.rows,
            };
        }
    };
    let src = census.source();

    suite.row("skew ring lambda maps", {
        let ok = census.skew_rings.iter().all(|c| {
            axioms::check_lambda_maps(g, c).is_ok_and(|r| r.all())
                && axioms::lambda_converse(g, c) == Some(true)
        });
        Ok((ok, format!("{} {src} skew rings", census.skew_rings.len())))
    });

    suite.row(
        "zero row transfer",
        (|| {
            let mut circs: Vec<BinOp> =
                NamedOp::ALL.iter().map(|&op| BinOp::named(g, op)).collect();
            circs.extend(census.skew_rings.iter().cloned());
            let mut ok = true;
            for c in &circs {
                let r = Diring::from_circ(g.clone(), c.clone())?.check_zero_row_transfer();
                ok &= r.zero_rows_agree && r.left_distributive_iff_skew;
            }
            Ok((ok, format!("{} dirings", circs.len())))
        })(),
    );

    suite.row(
        "left distributive dot",
        (|| {
            let mut dots: Vec<BinOp> = NamedOp::ALL
                .iter()
                .map(|&op| BinOp::named(g, op))
                .filter(|f| axioms::is_left_distributive(g, f))
                .collect();
            dots.extend(census.dirings.iter().map(|p| p.dot.clone()));
            let mut ok = true;
            for dot in &dots {
                ok &= Diring::from_dot(g.clone(), dot.clone())?
                    .check_distributive_consequences()?
                    .all();
            }
            Ok((
                ok,
                format!("{} dirings with left distributive dot", dots.len()),
            ))
        })(),
    );

    suite.row(
        "lambda composition laws",
        (|| {
            let mut ok = true;
            for p in &census.dirings {
                let r = Diring::from_pair(g.clone(), p)?.check_composition_laws()?;
                ok &= r.lambda_semigroup_morphism && r.lambda_zero_idempotent;
            }
            Ok((ok, format!("{} {src} dirings", census.dirings.len())))
        })(),
    );

    suite.row(
        "diring parts",
        (|| {
            let mut ok = true;
            for p in &census.dirings {
                ok &= Diring::from_pair(g.clone(), p)?.parts()?.all_hold();
            }
            Ok((ok, format!("{} {src} dirings", census.dirings.len())))
        })(),
    );

    if census.exhaustive && n <= CROSS_CHECK_ORDER {
        suite.row(
            "diring search both ways",
            (|| {
                let other = search::enumerate_skew_pairs(g, cfg.budget, cfg.workers)?
                    .require_complete(cfg.budget)?;
                Ok((
                    other.tables == census.dirings,
                    format!("{} pairs", census.dirings.len()),
                ))
            })(),
        );
    }

    let omegas = omega_fixtures(g, &census);

    suite.row(
        "idempotent algebra endomorphisms",
        (|| {
            let endos = idempotent_endos(g)?;
            let mut checked = 0;
            let mut ok = true;
            for a in omegas.as_ref().map_err(Clone::clone)? {
                for e in &endos {
                    let (x, y) = a.check_idempotent_endo(e)?;
                    ok &= x == y;
                    checked += 1;
                }
            }
            Ok((ok, format!("{checked} (algebra, idempotent) cases")))
        })(),
    );

    suite.row(
        "inner semidirect products",
        (|| {
            let mut checked = 0;
            let mut ok = true;
            for a in omegas.as_ref().map_err(Clone::clone)? {
                let subalgebras = a.subalgebras()?;
                for k in a.ideals()? {
                    for h in &subalgebras {
                        let five = a.check_inner_semidirect(&k, h)?;
                        ok &= five.iter().all(|&x| x == five[0]);
                        checked += 1;
                    }
                }
                ok &= a.endo_pair_bijection()?.bijective;
            }
            Ok((ok, format!("{checked} (ideal, subalgebra) pairs")))
        })(),
    );

    suite.row(
        "congruences and ideals",
        (|| {
            let mut ok = true;
            let mut checked = 0;
            let families: [(&Vec<BinOp>, IdealCheck); 2] = [
                (&census.skew_rings, axioms::skewring_ideal_check),
                (&census.near_rings, axioms::nearring_ideal_check),
            ];
            for (ops, specialized) in families {
                for op in ops {
                    let a = OmegaGroup::from_binops(g.clone(), std::slice::from_ref(op))?;
                    let pairs = a.congruence_ideal_bijection()?;
                    let special = g.filter_subsets(|s| specialized(g, op, s))?;
                    ok &= special == a.ideals()? && pairs.len() == special.len();
                    checked += 1;
                }
            }
            Ok((ok, format!("{checked} {src} skew rings and near-rings")))
        })(),
    );

    suite.row(
        "skew rings and weak rings",
        (|| {
            let mut images: Vec<BinOp> = Vec::new();
            for c in &census.skew_rings {
                images.push(diring::skew_to_weak(g, c)?);
            }
            images.sort();
            let mut ok = images == census.weak_rings
                && census
                    .skew_rings
                    .iter()
                    .all(|c| diring::roundtrip_check(g, c, Direction::SkewToWeak))
                && census
                    .weak_rings
                    .iter()
                    .all(|d| diring::roundtrip_check(g, d, Direction::WeakToSkew));
            let maps = g.endomorphisms()?;
            for c in &census.skew_rings {
                for f in &maps {
                    ok &= diring::morphism_transport_check(g, g, &f.0, c, c)?.agree();
                }
            }
            Ok((
                ok,
                format!(
                    "{} skew rings, {} weak rings, {} maps",
                    census.skew_rings.len(),
                    census.weak_rings.len(),
                    maps.len()
                ),
            ))
        })(),
    );

    suite.row(
        "skew braces and local right identities",
        (|| {
            if census.exhaustive {
                let r = diring::brace_weakring_correspondence(g, cfg.budget)?;
                Ok((
                    r.holds(),
                    format!(
                        "{} braces, {} with local right identities",
                        r.skew_braces, r.weak_rings_with_local_right_identities
                    ),
                ))
            } else {
                let ok = census.skew_rings.iter().all(|c| {
                    axioms::classify(g, c).left_skew_brace
                        == axioms::has_local_right_identities(
                            g,
                            &diring::skew_to_weak_unchecked(g, c),
                        )
                });
                Ok((ok, format!("{} named skew rings", census.skew_rings.len())))
            }
        })(),
    );

    suite.row(
        "unique 0-symmetric diring",
        (|| {
            if census.exhaustive {
                let r = diring::check_zero_symmetric_uniqueness(g, cfg.budget)?;
                Ok((
                    r.unique,
                    format!("{} zero-symmetric dirings", r.dirings.len()),
                ))
            } else {
                let zs: Vec<&TablePair> = census
                    .dirings
                    .iter()
                    .filter(|p| axioms::zero_symmetric_part(g, &p.dot).is_full())
                    .collect();
                let ok = zs.len() == 1 && zs[0].circ == BinOp::named(g, NamedOp::Pi1);
                Ok((
                    ok,
                    "among named dirings only; search needs order <= 4".into(),
                ))
            }
        })(),
    );

    suite.row(
        "constant monoid",
        (|| {
            let mut ok = true;
            let mut checked = 0;
            for p in &census.dirings {
                let d = Diring::from_pair(g.clone(), p)?;
                if axioms::constant_part(g, d.dot()).is_full() {
                    ok &= d.check_constant_monoid()?;
                    checked += 1;
                }
            }
            let a = Diring::from_circ(g.clone(), BinOp::named(g, NamedOp::Pi1))?;
            ok &= a.check_constant_monoid().is_err() == nontrivial;
            Ok((ok, format!("{checked} dirings with G = Gc")))
        })(),
    );

    suite.row(
        "weak rings of idempotent endomorphisms",
        (|| {
            let endos = idempotent_endos(g)?;
            let mut ok = true;
            for e in &endos {
                let dot = diring::weakring_from_idempotent_endo(g, e)?;
                let p = axioms::parts(g, &dot);
                ok &= axioms::classify_dot(g, &dot).left_weak_ring
                    && p.zero_symmetric == e.kernel()
                    && p.constant == e.image();
            }
            Ok((ok, format!("{} idempotent endomorphisms", endos.len())))
        })(),
    );

    suite.row(
        "near-ring of binary operations",
        (|| match n {
            0..=2 => {
                let r = verify_bg_nearring(g, BgMode::Full)?;
                Ok((r.passed(), format!("full, {} triples", r.triples_checked)))
            }
            3 => {
                let mode = BgMode::Sample {
                    triples: cfg.bg_samples,
                    seed: cfg.bg_seed,
                };
                let r = verify_bg_nearring(g, mode)?;
                Ok((
                    r.passed(),
                    format!(
                        "sampled, {} triples, seed {}",
                        r.triples_checked, cfg.bg_seed
                    ),
                ))
            }
            _ => Ok((true, "not run above order 3".into())),
        })(),
    );

    GroupReport {
        group: label.to_string(),
        order: n,
        rows: suite.rows,
    }
}

/// Aligned text rendering of one report.
pub fn render_table(report: &GroupReport) -> String {
    let width = report
        .rows
        .iter()
        .map(|r| r.name.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = format!("{} (order {})\n", report.group, report.order);
    for r in &report.rows {
        let pad = width - r.name.chars().count();
        out.push_str(&format!(
            "  {}{}  {}  {}\n",
            r.name,
            " ".repeat(pad),
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        ));
    }
    out
}

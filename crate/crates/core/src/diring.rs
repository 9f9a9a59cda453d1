//! Dirings `(G, +, ∘, ·)` tied together by `a + a·b = a∘b`, and the
//! conversion between left skew rings and left weak rings.
//!
//! Validation of a diring checks only the defining identity. Associativity
//! and distributivity are separate properties queried through [`axioms`].

use serde::Serialize;

use crate::axioms::{self, has_local_right_identities};
use crate::binop::{op_sub, BinOp, NamedOp};
use crate::error::{Error, Result};
use crate::group::{ElementSet, EndoMap, FiniteGroup};
use crate::search::{enumerate_dirings, Constraint, StructureKind, TablePair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diring {
    group: FiniteGroup,
    circ: BinOp,
    dot: BinOp,
}

impl Diring {
    /// Validates `a + a·b = a∘b` for every `a, b`.
    pub fn new(group: FiniteGroup, circ: BinOp, dot: BinOp) -> Result<Self> {
        axioms::check_compatible(&group, &circ)?;
        axioms::check_compatible(&group, &dot)?;
        for a in group.elements() {
            for b in group.elements() {
                if group.add(a, dot.get(a, b)) != circ.get(a, b) {
                    return Err(Error::DefiningIdentityFails { a, b });
                }
            }
        }
        Ok(Diring { group, circ, dot })
    }

    /// The diring whose `∘` is the given table.
    pub fn from_circ(group: FiniteGroup, circ: BinOp) -> Result<Self> {
        axioms::check_compatible(&group, &circ)?;
        let dot = skew_to_weak_unchecked(&group, &circ);
        Ok(Diring { group, circ, dot })
    }

    /// The diring whose `·` is the given table.
    pub fn from_dot(group: FiniteGroup, dot: BinOp) -> Result<Self> {
        axioms::check_compatible(&group, &dot)?;
        let circ = weak_to_skew_unchecked(&group, &dot);
        Ok(Diring { group, circ, dot })
    }

    pub fn from_pair(group: FiniteGroup, pair: &TablePair) -> Result<Self> {
        Self::new(group, pair.circ.clone(), pair.dot.clone())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn circ(&self) -> &BinOp {
        &self.circ
    }

    pub fn dot(&self) -> &BinOp {
        &self.dot
    }

    /// `∘ - · = π₁` in `B(G)`, computed through operation subtraction.
    pub fn difference_is_pi1(&self) -> bool {
        let diff = op_sub(&self.group, &self.circ, &self.dot).expect("sizes validated");
        diff == BinOp::named(&self.group, NamedOp::Pi1)
    }

    fn dot_left_distributive(&self) -> bool {
        axioms::is_left_distributive(&self.group, &self.dot)
    }

    fn circ_associative(&self) -> bool {
        axioms::is_associative(&self.group, &self.circ)
    }

    pub fn check_zero_row_transfer(&self) -> ZeroRowReport {
        let g = &self.group;
        ZeroRowReport {
            zero_rows_agree: g
                .elements()
                .all(|b| self.dot.get(0, b) == self.circ.get(0, b)),
            left_distributive_iff_skew: self.dot_left_distributive()
                == axioms::is_left_skew_distributive(g, &self.circ),
        }
    }

    /// Consequences of `·` being left distributive.
    pub fn check_distributive_consequences(&self) -> Result<DistributiveReport> {
        if !self.dot_left_distributive() {
            return Err(Error::PreconditionViolated(
                "· is not left distributive".into(),
            ));
        }
        let g = &self.group;
        Ok(DistributiveReport {
            lambda_endomorphisms: g
                .elements()
                .all(|a| axioms::mu_map(g, &self.dot, a).is_endomorphism(g)),
            dot_zero_right: g.elements().all(|a| self.dot.get(a, 0) == 0),
            dot_odd: g.elements().all(|a| {
                g.elements()
                    .all(|b| self.dot.get(a, g.neg(b)) == g.neg(self.dot.get(a, b)))
            }),
            circ_zero_right_identity: g.elements().all(|a| self.circ.get(a, 0) == a),
            associative_iff_weakly_associative: self.circ_associative()
                == axioms::is_weakly_associative(g, &self.dot),
        })
    }

    /// Consequences of `∘` associative and `·` left distributive.
    pub fn check_composition_laws(&self) -> Result<CompositionReport> {
        self.require_hypotheses()?;
        let g = &self.group;
        let lambda0 = EndoMap(self.dot.row(0).to_vec());
        Ok(CompositionReport {
            lambda_semigroup_morphism: g.elements().all(|a| {
                g.elements().all(|b| {
                    g.elements().all(|c| {
                        self.dot.get(self.circ.get(a, b), c) == self.dot.get(a, self.dot.get(b, c))
                    })
                })
            }),
            lambda_zero_idempotent: lambda0.is_endomorphism(g) && lambda0.is_idempotent(),
        })
    }

    fn require_hypotheses(&self) -> Result<()> {
        if !self.circ_associative() {
            return Err(Error::PreconditionViolated("∘ is not associative".into()));
        }
        if !self.dot_left_distributive() {
            return Err(Error::PreconditionViolated(
                "· is not left distributive".into(),
            ));
        }
        Ok(())
    }

    /// The 0-symmetric part `G₀` and constant part `G_c`, with the facts
    /// that hold about them.
    pub fn parts(&self) -> Result<DiringParts> {
        self.require_hypotheses()?;
        let g = &self.group;
        let zero_symmetric = axioms::zero_symmetric_part(g, &self.dot);
        let constant = axioms::constant_part(g, &self.dot);
        let semidirect = g.is_normal_subgroup(&zero_symmetric)
            && g.is_subgroup(&constant)
            && g.is_semidirect_pair(&zero_symmetric, &constant)?;
        let closed = |s: &ElementSet| {
            g.is_subgroup(s)
                && s.iter().all(|a| {
                    s.iter()
                        .all(|b| s.contains(self.circ.get(a, b)) && s.contains(self.dot.get(a, b)))
                })
        };
        let subdirings = closed(&zero_symmetric) && closed(&constant);
        let constant_circ_identity = constant
            .iter()
            .all(|a| self.circ.get(0, a) == a && self.circ.get(a, 0) == a);
        let zero_symmetric_dot_zero = zero_symmetric
            .iter()
            .all(|a| self.dot.get(0, a) == 0 && self.dot.get(a, 0) == 0);
        Ok(DiringParts {
            zero_symmetric,
            constant,
            semidirect,
            subdirings,
            constant_circ_identity,
            zero_symmetric_dot_zero,
        })
    }

    /// When `G = G_c`, whether 0 is a two-sided identity for `∘`.
    pub fn check_constant_monoid(&self) -> Result<bool> {
        self.require_hypotheses()?;
        if !axioms::constant_part(&self.group, &self.dot).is_full() {
            return Err(Error::PreconditionViolated("G_c is not all of G".into()));
        }
        Ok(self
            .group
            .elements()
            .all(|a| self.circ.get(0, a) == a && self.circ.get(a, 0) == a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroRowReport {
    /// `0·b = 0∘b`.
    pub zero_rows_agree: bool,
    /// `·` left distributive exactly when `∘` left skew distributive.
    pub left_distributive_iff_skew: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistributiveReport {
    pub lambda_endomorphisms: bool,
    /// `a·0 = 0`.
    pub dot_zero_right: bool,
    /// `a·(-b) = -(a·b)`.
    pub dot_odd: bool,
    /// `a∘0 = a`.
    pub circ_zero_right_identity: bool,
    pub associative_iff_weakly_associative: bool,
}

impl DistributiveReport {
    pub fn all(&self) -> bool {
        self.lambda_endomorphisms
            && self.dot_zero_right
            && self.dot_odd
            && self.circ_zero_right_identity
            && self.associative_iff_weakly_associative
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    /// `(a∘b)·c = a·(b·c)`.
    pub lambda_semigroup_morphism: bool,
    pub lambda_zero_idempotent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiringParts {
    pub zero_symmetric: ElementSet,
    pub constant: ElementSet,
    pub semidirect: bool,
    /// Both parts are subgroups closed under `∘` and `·`.
    pub subdirings: bool,
    /// 0 is a two-sided identity of `(G_c, ∘)`.
    pub constant_circ_identity: bool,
    /// 0 is a two-sided zero of `(G₀, ·)`.
    pub zero_symmetric_dot_zero: bool,
}

impl DiringParts {
    pub fn all_hold(&self) -> bool {
        self.semidirect
            && self.subdirings
            && self.constant_circ_identity
            && self.zero_symmetric_dot_zero
    }
}

/// `a·b = -a + a∘b` without checking that `∘` is a skew ring.
pub fn skew_to_weak_unchecked(g: &FiniteGroup, circ: &BinOp) -> BinOp {
    BinOp::from_fn(g.order(), |a, b| g.add(g.neg(a), circ.get(a, b)))
}

/// `a∘b = a + a·b` without checking that `·` is a weak ring.
pub fn weak_to_skew_unchecked(g: &FiniteGroup, dot: &BinOp) -> BinOp {
    BinOp::from_fn(g.order(), |a, b| g.add(a, dot.get(a, b)))
}

/// The weak ring of a left skew ring.
pub fn skew_to_weak(g: &FiniteGroup, circ: &BinOp) -> Result<BinOp> {
    axioms::check_compatible(g, circ)?;
    if !axioms::classify(g, circ).left_skew_ring {
        return Err(Error::NotSkewRing);
    }
    Ok(skew_to_weak_unchecked(g, circ))
}

/// The skew ring of a left weak ring.
pub fn weak_to_skew(g: &FiniteGroup, dot: &BinOp) -> Result<BinOp> {
    axioms::check_compatible(g, dot)?;
    if !axioms::classify(g, dot).left_weak_ring {
        return Err(Error::NotWeakRing);
    }
    Ok(weak_to_skew_unchecked(g, dot))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    SkewToWeak,
    WeakToSkew,
}

impl std::str::FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "skew-to-weak" => Ok(Direction::SkewToWeak),
            "weak-to-skew" => Ok(Direction::WeakToSkew),
            other => Err(format!("unknown direction `{other}`")),
        }
    }
}

pub fn convert(g: &FiniteGroup, op: &BinOp, direction: Direction) -> Result<BinOp> {
    match direction {
        Direction::SkewToWeak => skew_to_weak(g, op),
        Direction::WeakToSkew => weak_to_skew(g, op),
    }
}

/// Converting there and back returns the same table.
pub fn roundtrip_check(g: &FiniteGroup, op: &BinOp, direction: Direction) -> bool {
    let back = match direction {
        Direction::SkewToWeak => weak_to_skew_unchecked(g, &skew_to_weak_unchecked(g, op)),
        Direction::WeakToSkew => skew_to_weak_unchecked(g, &weak_to_skew_unchecked(g, op)),
    };
    &back == op
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransportCheck {
    pub respects_circ: bool,
    pub respects_dot: bool,
}

impl TransportCheck {
    pub fn agree(&self) -> bool {
        self.respects_circ == self.respects_dot
    }
}

/// Whether a map `f: G → H` respects `(+, ∘)` and, separately, `(+, ·)`
/// where `·` is derived from `∘` on each side.
pub fn morphism_transport_check(
    g: &FiniteGroup,
    h: &FiniteGroup,
    f: &[usize],
    circ_g: &BinOp,
    circ_h: &BinOp,
) -> Result<TransportCheck> {
    axioms::check_compatible(g, circ_g)?;
    axioms::check_compatible(h, circ_h)?;
    if f.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: f.len(),
        });
    }
    if let Some(&value) = f.iter().find(|&&v| v >= h.order()) {
        return Err(Error::EntryOutOfRange {
            value,
            order: h.order(),
        });
    }
    let respects = |op_g: &BinOp, op_h: &BinOp| {
        g.elements().all(|a| {
            g.elements().all(|b| {
                f[g.add(a, b)] == h.add(f[a], f[b]) && f[op_g.get(a, b)] == op_h.get(f[a], f[b])
            })
        })
    };
    let dot_g = skew_to_weak_unchecked(g, circ_g);
    let dot_h = skew_to_weak_unchecked(h, circ_h);
    Ok(TransportCheck {
        respects_circ: respects(circ_g, circ_h),
        respects_dot: respects(&dot_g, &dot_h),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraceReport {
    pub skew_rings: usize,
    pub skew_braces: usize,
    pub weak_rings: usize,
    pub weak_rings_with_local_right_identities: usize,
    /// `skew_to_weak` maps the braces onto the weak rings with local right
    /// identities, elementwise.
    pub bijection_verified: bool,
}

impl BraceReport {
    pub fn holds(&self) -> bool {
        self.skew_rings == self.weak_rings
            && self.skew_braces == self.weak_rings_with_local_right_identities
            && self.bijection_verified
    }
}

/// Skew braces against weak rings with local right identities.
pub fn brace_weakring_correspondence(g: &FiniteGroup, budget: u64) -> Result<BraceReport> {
    let skew = crate::search::enumerate_binops(
        &crate::search::SearchSpec::new(g.clone(), StructureKind::SkewRing.constraints())
            .budget(budget),
    )?
    .require_complete(budget)?;
    let weak = crate::search::enumerate_binops(
        &crate::search::SearchSpec::new(g.clone(), StructureKind::WeakRing.constraints())
            .budget(budget),
    )?
    .require_complete(budget)?;

    let braces: Vec<&BinOp> = skew
        .tables
        .iter()
        .filter(|c| axioms::classify(g, c).left_skew_brace)
        .collect();
    let local: Vec<&BinOp> = weak
        .tables
        .iter()
        .filter(|d| has_local_right_identities(g, d))
        .collect();
    let mut images: Vec<BinOp> = braces
        .iter()
        .map(|c| skew_to_weak_unchecked(g, c))
        .collect();
    images.sort();
    let bijection_verified =
        images.len() == local.len() && images.iter().zip(&local).all(|(a, b)| a == *b);
    Ok(BraceReport {
        skew_rings: skew.count(),
        skew_braces: braces.len(),
        weak_rings: weak.count(),
        weak_rings_with_local_right_identities: local.len(),
        bijection_verified,
    })
}

/// `a·b = e(b)` for an idempotent endomorphism `e`.
pub fn weakring_from_idempotent_endo(g: &FiniteGroup, e: &EndoMap) -> Result<BinOp> {
    if !(e.is_endomorphism(g) && e.is_idempotent()) {
        return Err(Error::NotIdempotent);
    }
    Ok(BinOp::right_projection_through(&e.0))
}

#[derive(Debug, Clone, Serialize)]
pub struct UniquenessReport {
    /// Every 0-symmetric diring with `∘` associative and `·` left distributive.
    pub dirings: Vec<TablePair>,
    /// The list is exactly `[(π₁, ∘₀)]`.
    pub unique: bool,
}

pub fn check_zero_symmetric_uniqueness(g: &FiniteGroup, budget: u64) -> Result<UniquenessReport> {
    let result =
        enumerate_dirings(g, &[Constraint::ZeroSymmetric], budget, 1)?.require_complete(budget)?;
    let expected = TablePair {
        circ: BinOp::named(g, NamedOp::Pi1),
        dot: BinOp::named(g, NamedOp::Null),
    };
    let unique = result.tables == [expected];
    Ok(UniquenessReport {
        dirings: result.tables,
        unique,
    })
}

//! Relation semantics: the base relation R, its strict part P, the
//! incomparability relation I, efficient-set computation, stability, and
//! the witness map guaranteed for finite sets under transitive relations.

use std::collections::BTreeMap;

use crate::audit::PropertyId;
use crate::error::{Error, Result};
use crate::group::{FiniteSet, GroupElement};

/// Outcome of comparing an ordered pair (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// x = y (and xRx by reflexivity).
    Equal,
    /// xRy and yRx with x != y; the witness of an antisymmetry failure.
    EquivalentDistinct,
    /// xPy: xRy holds, yRx does not.
    StrictForward,
    /// yPx.
    StrictBackward,
    /// Neither xRy nor yRx.
    Incomparable,
}

impl Comparison {
    /// The kind obtained by swapping the operands.
    pub fn mirror(self) -> Comparison {
        match self {
            Comparison::StrictForward => Comparison::StrictBackward,
            Comparison::StrictBackward => Comparison::StrictForward,
            other => other,
        }
    }
}

/// A reflexive binary relation over one of the built-in carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationOracle {
    /// Larger-is-better componentwise order on integer vectors.
    ProductOrder,
    /// On permutations: x R y iff x has at least as many fixed points as y.
    FixedPoints,
    /// x R y iff x = y.
    Equality,
    /// On finite sets: x R y iff y is a subset of x.
    Superset,
    /// Explicit |carrier| x |carrier| matrix over table indices; diagonal
    /// must be true.
    ExplicitMatrix(Vec<Vec<bool>>),
}

impl RelationOracle {
    pub fn explicit(matrix: Vec<Vec<bool>>) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::CarrierMismatch("relation matrix not square".into()));
            }
            if !row[i] {
                return Err(Error::CarrierMismatch(format!(
                    "relation matrix not reflexive at {i}"
                )));
            }
        }
        Ok(RelationOracle::ExplicitMatrix(matrix))
    }

    /// Whether x is at least as good as y.
    pub fn related(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        match self {
            RelationOracle::ProductOrder => match (x, y) {
                (GroupElement::IntVec(a), GroupElement::IntVec(b)) if a.len() == b.len() => {
                    Ok(a.iter().zip(b).all(|(u, v)| u >= v))
                }
                _ => Err(Error::CarrierMismatch(format!(
                    "product_order compares integer vectors of equal dimension, got {x} vs {y}"
                ))),
            },
            RelationOracle::FixedPoints => match (x, y) {
                (GroupElement::Perm(a), GroupElement::Perm(b)) if a.len() == b.len() => {
                    Ok(fixed_points(a) >= fixed_points(b))
                }
                _ => Err(Error::CarrierMismatch(format!(
                    "fixed_points compares permutations of equal degree, got {x} vs {y}"
                ))),
            },
            RelationOracle::Equality => Ok(x == y),
            RelationOracle::Superset => match (x, y) {
                (GroupElement::FinSet(a), GroupElement::FinSet(b)) => {
                    Ok(b.iter().all(|e| a.binary_search(e).is_ok()))
                }
                _ => Err(Error::CarrierMismatch(format!(
                    "superset compares finite sets, got {x} vs {y}"
                ))),
            },
            RelationOracle::ExplicitMatrix(m) => match (x, y) {
                (GroupElement::TableIdx(i), GroupElement::TableIdx(j))
                    if *i < m.len() && *j < m.len() =>
                {
                    Ok(m[*i][*j])
                }
                _ => Err(Error::CarrierMismatch(format!(
                    "{x} or {y} lies outside the explicit matrix carrier"
                ))),
            },
        }
    }

    /// xPy: strictly better.
    pub fn strictly(&self, x: &GroupElement, y: &GroupElement) -> Result<bool> {
        Ok(self.related(x, y)? && !self.related(y, x)?)
    }

    /// Properties asserted analytically true by this relation's construction.
    /// `b` is consulted for the repetition properties, which are relative to
    /// the summand set: the componentwise order satisfies them whenever B
    /// holds at most one element besides the identity.
    pub fn declared_properties(&self, b: Option<&FiniteSet>) -> Vec<PropertyId> {
        use PropertyId::*;
        let mut props = match self {
            RelationOracle::ProductOrder => vec![Refl, P1, P2, P3],
            RelationOracle::FixedPoints => vec![Refl, P1],
            RelationOracle::Equality => vec![Refl, P1, P2, P3],
            RelationOracle::Superset => vec![Refl, P1, P2],
            RelationOracle::ExplicitMatrix(_) => vec![Refl],
        };
        if let (RelationOracle::ProductOrder, Some(b)) = (self, b) {
            // p.b >= 0 componentwise forces b >= 0, so a single repeated
            // summand cannot mask a sign; with at most one nonidentity
            // element every combination is a multiple of it.
            let nonzero = b
                .iter()
                .filter(|e| !matches!(e, GroupElement::IntVec(v) if v.iter().all(|&c| c == 0)))
                .count();
            if nonzero <= 1 {
                props.extend([P4, P4Prime, P5, P5Prime]);
            } else {
                props.extend([P4Prime, P5Prime]);
            }
        }
        props
    }

    pub fn declares(&self, prop: PropertyId, b: Option<&FiniteSet>) -> bool {
        self.declared_properties(b).contains(&prop)
    }
}

fn fixed_points(img: &[usize]) -> usize {
    img.iter().enumerate().filter(|(i, &p)| p == i + 1).count()
}

/// Classifies an ordered pair into exactly one comparison kind.
pub fn compare(x: &GroupElement, y: &GroupElement, rel: &RelationOracle) -> Result<Comparison> {
    let fwd = rel.related(x, y)?;
    let bwd = rel.related(y, x)?;
    Ok(match (fwd, bwd) {
        (true, true) => {
            if x == y {
                Comparison::Equal
            } else {
                Comparison::EquivalentDistinct
            }
        }
        (true, false) => Comparison::StrictForward,
        (false, true) => Comparison::StrictBackward,
        (false, false) => Comparison::Incomparable,
    })
}

/// The efficient and dominated portions of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfficiencyPartition {
    pub efficient: FiniteSet,
    pub dominated: FiniteSet,
}

/// Splits S into {g : no g' in S with g'Pg} and the rest.
pub fn efficient_set(s: &FiniteSet, rel: &RelationOracle) -> Result<EfficiencyPartition> {
    let mut efficient = Vec::new();
    let mut dominated = Vec::new();
    for g in s {
        let mut dom = false;
        for g2 in s {
            if rel.strictly(g2, g)? {
                dom = true;
                break;
            }
        }
        if dom {
            dominated.push(g.clone());
        } else {
            efficient.push(g.clone());
        }
    }
    Ok(EfficiencyPartition {
        efficient: FiniteSet::from_vec(efficient),
        dominated: FiniteSet::from_vec(dominated),
    })
}

/// A set is stable when it equals its own efficient set.
pub fn is_stable(s: &FiniteSet, rel: &RelationOracle) -> Result<bool> {
    Ok(efficient_set(s, rel)?.dominated.is_empty())
}

/// Caller's evidence about transitivity of the relation on the probed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitivityClaim {
    /// Asserted analytically by the relation's constructor.
    Declared,
    /// A bounded or exhaustive audit found no violation.
    NoViolationFound,
    /// An audit produced a concrete intransitivity witness.
    Violated,
}

/// Maps every element of S to an efficient element at least as good as it.
///
/// Dominated elements are iteratively replaced by their canonical-least
/// strict dominator; a chain longer than |S| signals an intransitive strict
/// cycle and aborts with `ChainOverflow`.
pub fn white_witness(
    s: &FiniteSet,
    rel: &RelationOracle,
    transitivity: TransitivityClaim,
) -> Result<BTreeMap<GroupElement, GroupElement>> {
    if s.is_empty() {
        return Err(Error::EmptyOperand("white_witness input".into()));
    }
    if transitivity == TransitivityClaim::Violated {
        return Err(Error::NotApplicable(
            "relation is not transitive on this set".into(),
        ));
    }
    let mut map = BTreeMap::new();
    for a in s {
        let mut current = a.clone();
        let mut steps = 0usize;
        loop {
            // canonical-least strict dominator, if any
            let mut dominator = None;
            for g in s {
                if rel.strictly(g, &current)? {
                    dominator = Some(g.clone());
                    break; // s iterates in canonical order
                }
            }
            match dominator {
                None => break,
                Some(d) => {
                    current = d;
                    steps += 1;
                    if steps > s.len() {
                        return Err(Error::ChainOverflow(s.len()));
                    }
                }
            }
        }
        map.insert(a.clone(), current);
    }
    Ok(map)
}

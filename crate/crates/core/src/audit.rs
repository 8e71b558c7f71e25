//! Bounded verification of relation properties over a probe set derived
//! from the instance: reflexivity, transitivity, antisymmetry, isotonicity,
//! and the repetition-consistency properties together with their primed
//! single-element forms.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{FiniteSet, GroupContext, GroupElement};
use crate::relation::RelationOracle;

/// Stable identifiers for the audited properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyId {
    Refl,
    P1,
    P2,
    P3,
    P4,
    P4Prime,
    P5,
    P5Prime,
}

impl PropertyId {
    pub const ALL: [PropertyId; 8] = [
        PropertyId::Refl,
        PropertyId::P1,
        PropertyId::P2,
        PropertyId::P3,
        PropertyId::P4,
        PropertyId::P4Prime,
        PropertyId::P5,
        PropertyId::P5Prime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::Refl => "REFL",
            PropertyId::P1 => "P1",
            PropertyId::P2 => "P2",
            PropertyId::P3 => "P3",
            PropertyId::P4 => "P4",
            PropertyId::P4Prime => "P4p",
            PropertyId::P5 => "P5",
            PropertyId::P5Prime => "P5p",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A concrete counterexample that re-fails the property when replayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    /// Elements in the property's quantifier order (see `replay_violation`).
    pub elements: Vec<GroupElement>,
    /// Multiplicities, parallel to `elements`, for P4/P4'/P5/P5'.
    pub multiplicities: Vec<u64>,
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicities.is_empty() {
            let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
            write!(f, "({})", parts.join(", "))
        } else {
            let parts: Vec<String> = self
                .elements
                .iter()
                .zip(&self.multiplicities)
                .map(|(e, p)| format!("{p}x{e}"))
                .collect();
            write!(f, "({})", parts.join(" + "))
        }
    }
}

/// Outcome of one property audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertyStatus {
    Violated(ViolationWitness),
    NoViolationFound { probe_size: usize, depth: u32 },
    ProvenExhaustive,
    Declared,
}

impl PropertyStatus {
    /// Whether a theorem rule may rely on this status unconditionally.
    pub fn licenses_theorem(&self) -> bool {
        matches!(
            self,
            PropertyStatus::Declared | PropertyStatus::ProvenExhaustive
        )
    }
}

impl fmt::Display for PropertyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertyStatus::Violated(w) => write!(f, "Violated{w}"),
            PropertyStatus::NoViolationFound { probe_size, depth } => {
                write!(f, "NoViolationFound(probe={probe_size},depth={depth})")
            }
            PropertyStatus::ProvenExhaustive => f.write_str("ProvenExhaustive"),
            PropertyStatus::Declared => f.write_str("Declared"),
        }
    }
}

/// The finite closure of A, B, the identity and their inverses under
/// composition, truncated at a size cap.
#[derive(Debug, Clone)]
pub struct ProbeSet {
    pub elements: FiniteSet,
    pub depth: u32,
    pub truncated: bool,
}

/// Audit tuning knobs. `scan_limit` bounds the canonical prefix scanned by
/// the cubic transitivity/isotonicity loops.
#[derive(Debug, Clone)]
pub struct AuditConfig {
    pub depth: u32,
    pub cap: usize,
    pub max_multiplicity: u64,
    /// Bound on the combination length m in the repetition properties;
    /// defaults to |B|.
    pub max_combination: Option<usize>,
    pub scan_limit: usize,
    /// Cap on the number of multiset states explored per repetition
    /// property.
    pub repetition_budget: usize,
}

impl AuditConfig {
    pub fn defaults_for(a: &FiniteSet, b: &FiniteSet) -> Self {
        AuditConfig {
            depth: 2,
            cap: 10_000,
            max_multiplicity: 8.max((a.len() + b.len()) as u64),
            max_combination: None,
            scan_limit: 64,
            repetition_budget: 20_000,
        }
    }
}

/// Iterative closure under `combine` starting from A, B, the identity and
/// all inverses, truncated at `cap`.
pub fn probe_closure(
    a: &FiniteSet,
    b: &FiniteSet,
    g: &GroupContext,
    depth: u32,
    cap: usize,
) -> Result<ProbeSet> {
    if depth < 1 {
        return Err(Error::Precondition("probe depth must be >= 1".into()));
    }
    if cap < a.len() + b.len() + 1 {
        return Err(Error::Precondition(format!(
            "probe cap {cap} below |A|+|B|+1"
        )));
    }
    let mut base: Vec<GroupElement> = a.iter().chain(b.iter()).cloned().collect();
    base.push(g.identity());
    let with_inverses: Vec<GroupElement> = base
        .iter()
        .map(|e| g.inverse(e))
        .collect::<Result<Vec<_>>>()?;
    base.extend(with_inverses);
    let mut current = FiniteSet::from_vec(base);
    let mut truncated = false;
    for _ in 0..depth {
        if current.len() >= cap {
            truncated = true;
            break;
        }
        let mut next: Vec<GroupElement> = current.iter().cloned().collect();
        'outer: for x in &current {
            for y in &current {
                next.push(g.combine(x, y)?);
                if next.len() >= cap + current.len() {
                    truncated = true;
                    break 'outer;
                }
            }
        }
        let merged = FiniteSet::from_vec(next);
        if merged.len() > cap {
            let clipped: Vec<GroupElement> = merged.iter().take(cap).cloned().collect();
            current = FiniteSet::from_vec(clipped);
            truncated = true;
            break;
        }
        if merged.len() == current.len() {
            current = merged;
            break; // closed
        }
        current = merged;
    }
    Ok(ProbeSet {
        elements: current,
        depth,
        truncated,
    })
}

/// Result bundle consumed by the verdict engine.
#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub statuses: BTreeMap<PropertyId, PropertyStatus>,
}

impl PropertyReport {
    pub fn status(&self, prop: PropertyId) -> &PropertyStatus {
        &self.statuses[&prop]
    }

    /// Declared/ProvenExhaustive for every listed property.
    pub fn licensed(&self, props: &[PropertyId]) -> bool {
        props.iter().all(|p| self.status(*p).licenses_theorem())
    }

    /// None of the listed properties is Violated.
    pub fn none_violated(&self, props: &[PropertyId]) -> bool {
        props
            .iter()
            .all(|p| !matches!(self.status(*p), PropertyStatus::Violated(_)))
    }
}

/// Audits one property over the probe.
///
/// Declared properties are spot-checked on the probe and downgraded to
/// `Violated` if the spot-check finds a witness. Full enumeration of an
/// explicit-matrix carrier yields `ProvenExhaustive`.
pub fn audit_property(
    prop: PropertyId,
    rel: &RelationOracle,
    g: &GroupContext,
    probe: &ProbeSet,
    b: &FiniteSet,
    cfg: &AuditConfig,
) -> Result<PropertyStatus> {
    if probe.elements.is_empty() {
        return Err(Error::Precondition("probe must be nonempty".into()));
    }
    if cfg.max_multiplicity < 1 {
        return Err(Error::Precondition("max_multiplicity must be >= 1".into()));
    }
    let (witness, complete) = scan_property(prop, rel, g, probe, b, cfg)?;
    if let Some(w) = witness {
        return Ok(PropertyStatus::Violated(w));
    }
    if rel.declares(prop, Some(b)) {
        return Ok(PropertyStatus::Declared);
    }
    if complete && exhaustive_scope(prop, rel, g, probe, b, cfg) {
        return Ok(PropertyStatus::ProvenExhaustive);
    }
    Ok(PropertyStatus::NoViolationFound {
        probe_size: probe.elements.len(),
        depth: probe.depth,
    })
}

/// Runs all eight audits.
pub fn run_audits(
    rel: &RelationOracle,
    g: &GroupContext,
    a: &FiniteSet,
    b: &FiniteSet,
    cfg: &AuditConfig,
) -> Result<PropertyReport> {
    let probe = probe_closure(a, b, g, cfg.depth, cfg.cap)?;
    let mut statuses = BTreeMap::new();
    for prop in PropertyId::ALL {
        statuses.insert(prop, audit_property(prop, rel, g, &probe, b, cfg)?);
    }
    Ok(PropertyReport { statuses })
}

/// Whether the scan just performed covered the whole (finite) carrier.
fn exhaustive_scope(
    prop: PropertyId,
    rel: &RelationOracle,
    g: &GroupContext,
    probe: &ProbeSet,
    b: &FiniteSet,
    cfg: &AuditConfig,
) -> bool {
    let RelationOracle::ExplicitMatrix(m) = rel else {
        return false;
    };
    let n = m.len();
    let full_carrier = !probe.truncated
        && (0..n).all(|i| probe.elements.contains(&GroupElement::TableIdx(i)))
        && probe.elements.len() == n
        && cfg.scan_limit >= n;
    if !full_carrier {
        return false;
    }
    match prop {
        PropertyId::Refl | PropertyId::P1 | PropertyId::P2 => true,
        // group-dependent properties need the table carrier too
        PropertyId::P3 => matches!(g, GroupContext::Table(t) if t.order() == n),
        // the repetition scan walks the reachable sums to closure inside a
        // finite carrier, so it is complete there
        PropertyId::P4 | PropertyId::P4Prime | PropertyId::P5 | PropertyId::P5Prime => {
            matches!(g, GroupContext::Table(t) if t.order() == n)
                && b.len() <= cfg.max_combination.unwrap_or(b.len())
                && cfg.max_multiplicity >= n as u64
        }
    }
}

fn scan_property(
    prop: PropertyId,
    rel: &RelationOracle,
    g: &GroupContext,
    probe: &ProbeSet,
    b: &FiniteSet,
    cfg: &AuditConfig,
) -> Result<(Option<ViolationWitness>, bool)> {
    let elems: Vec<&GroupElement> = probe.elements.iter().collect();
    let scan: &[&GroupElement] = &elems[..elems.len().min(cfg.scan_limit)];
    // whether the prefix covered the probe (needed for exhaustive claims)
    let complete = scan.len() == elems.len() && !probe.truncated;
    match prop {
        PropertyId::Refl => {
            for x in scan {
                if !rel.related(x, x)? {
                    return Ok((Some(witness(&[x])), complete));
                }
            }
            Ok((None, complete))
        }
        PropertyId::P1 => {
            for x in scan {
                for y in scan {
                    if !rel.related(x, y)? {
                        continue;
                    }
                    for z in scan {
                        if rel.related(y, z)? && !rel.related(x, z)? {
                            return Ok((Some(witness(&[x, y, z])), complete));
                        }
                    }
                }
            }
            Ok((None, complete))
        }
        PropertyId::P2 => {
            for x in scan {
                for y in scan {
                    if x != y && rel.related(x, y)? && rel.related(y, x)? {
                        return Ok((Some(witness(&[x, y])), complete));
                    }
                }
            }
            Ok((None, complete))
        }
        PropertyId::P3 => {
            // two-sided, matching the definition for non-abelian carriers
            for x in scan {
                for y in scan {
                    if !rel.related(x, y)? {
                        continue;
                    }
                    for z in scan {
                        let left_ok =
                            rel.related(&g.combine(z, x)?, &g.combine(z, y)?)?;
                        let right_ok =
                            rel.related(&g.combine(x, z)?, &g.combine(y, z)?)?;
                        if !left_ok || !right_ok {
                            return Ok((Some(witness(&[x, y, z])), complete));
                        }
                    }
                }
            }
            Ok((None, complete))
        }
        PropertyId::P4 => scan_repetition(rel, g, b, cfg, false, Side::DominatesZero),
        PropertyId::P4Prime => scan_repetition(rel, g, b, cfg, true, Side::DominatesZero),
        PropertyId::P5 => scan_repetition(rel, g, b, cfg, false, Side::DominatedByZero),
        PropertyId::P5Prime => scan_repetition(rel, g, b, cfg, true, Side::DominatedByZero),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// (p1 b1 + ... + pm bm) R 0_G must force some b R 0_G.
    DominatesZero,
    /// 0_G R (p1 b1 + ... + pm bm) must force some 0_G R b.
    DominatedByZero,
}

fn side_holds(
    rel: &RelationOracle,
    g: &GroupContext,
    x: &GroupElement,
    side: Side,
) -> Result<bool> {
    let zero = g.identity();
    match side {
        Side::DominatesZero => rel.related(x, &zero),
        Side::DominatedByZero => rel.related(&zero, x),
    }
}

/// Searches multisets p1 b1 + ... + pm bm over B for a combination that
/// compares with the identity while none of its members does.
fn scan_repetition(
    rel: &RelationOracle,
    g: &GroupContext,
    b: &FiniteSet,
    cfg: &AuditConfig,
    single_only: bool,
    side: Side,
) -> Result<(Option<ViolationWitness>, bool)> {
    // Only elements that themselves fail the conclusion can witness a
    // violation; any combination containing a passing element satisfies
    // the implication trivially.
    let mut bad = Vec::new();
    for e in b {
        if !side_holds(rel, g, e, side)? {
            bad.push(e.clone());
        }
    }
    if bad.is_empty() {
        return Ok((None, true));
    }
    let max_m = if single_only {
        1
    } else {
        cfg.max_combination.unwrap_or(b.len()).max(1).min(bad.len())
    };
    // breadth-first over (support subset, multiplicity vector) by total
    // copies, so the minimal witness in scan order is found first
    let mut queue: VecDeque<(Vec<usize>, Vec<u64>, GroupElement)> = VecDeque::new();
    for (i, e) in bad.iter().enumerate() {
        queue.push_back((vec![i], vec![1], e.clone()));
    }
    let mut seen: std::collections::BTreeSet<(Vec<usize>, Vec<u64>)> =
        std::collections::BTreeSet::new();
    let mut explored = 0usize;
    let mut truncated = false;
    while let Some((support, mults, sum)) = queue.pop_front() {
        explored += 1;
        if explored > cfg.repetition_budget {
            truncated = true;
            break;
        }
        if side_holds(rel, g, &sum, side)? {
            return Ok((
                Some(ViolationWitness {
                    elements: support.iter().map(|&i| bad[i].clone()).collect(),
                    multiplicities: mults,
                }),
                true,
            ));
        }
        // extend: bump an existing multiplicity or append a fresh element
        for (pos, _) in support.iter().enumerate() {
            if mults[pos] < cfg.max_multiplicity {
                let mut m2 = mults.clone();
                m2[pos] += 1;
                if seen.insert((support.clone(), m2.clone())) {
                    let sum2 = g.combine(&sum, &bad[support[pos]])?;
                    queue.push_back((support.clone(), m2, sum2));
                }
            }
        }
        if support.len() < max_m {
            let last = *support.last().expect("nonempty support");
            for next in (last + 1)..bad.len() {
                let mut s2 = support.clone();
                s2.push(next);
                let mut m2 = mults.clone();
                m2.push(1);
                if seen.insert((s2.clone(), m2.clone())) {
                    let sum2 = g.combine(&sum, &bad[next])?;
                    queue.push_back((s2, m2, sum2));
                }
            }
        }
    }
    Ok((None, !truncated))
}

fn witness(elems: &[&&GroupElement]) -> ViolationWitness {
    ViolationWitness {
        elements: elems.iter().map(|e| (**e).clone()).collect(),
        multiplicities: Vec::new(),
    }
}

/// Feeds a witness back through the property's defining predicate; returns
/// true when the predicate evaluates false, i.e. the witness re-fails the
/// property.
pub fn replay_violation(
    prop: PropertyId,
    w: &ViolationWitness,
    rel: &RelationOracle,
    g: &GroupContext,
) -> Result<bool> {
    match prop {
        PropertyId::Refl => {
            let [x] = &w.elements[..] else {
                return Ok(false);
            };
            Ok(!rel.related(x, x)?)
        }
        PropertyId::P1 => {
            let [x, y, z] = &w.elements[..] else {
                return Ok(false);
            };
            Ok(rel.related(x, y)? && rel.related(y, z)? && !rel.related(x, z)?)
        }
        PropertyId::P2 => {
            let [x, y] = &w.elements[..] else {
                return Ok(false);
            };
            Ok(x != y && rel.related(x, y)? && rel.related(y, x)?)
        }
        PropertyId::P3 => {
            let [x, y, z] = &w.elements[..] else {
                return Ok(false);
            };
            if !rel.related(x, y)? {
                return Ok(false);
            }
            let left = rel.related(&g.combine(z, x)?, &g.combine(z, y)?)?;
            let right = rel.related(&g.combine(x, z)?, &g.combine(y, z)?)?;
            Ok(!left || !right)
        }
        PropertyId::P4 | PropertyId::P4Prime | PropertyId::P5 | PropertyId::P5Prime => {
            if w.elements.is_empty() || w.elements.len() != w.multiplicities.len() {
                return Ok(false);
            }
            let side = if matches!(prop, PropertyId::P4 | PropertyId::P4Prime) {
                Side::DominatesZero
            } else {
                Side::DominatedByZero
            };
            let mut sum = g.identity();
            for (e, &p) in w.elements.iter().zip(&w.multiplicities) {
                if p < 1 {
                    return Ok(false);
                }
                sum = g.combine(&sum, &g.repeat(p, e)?)?;
            }
            if !side_holds(rel, g, &sum, side)? {
                return Ok(false);
            }
            for e in &w.elements {
                if side_holds(rel, g, e, side)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(cs: &[i64]) -> GroupElement {
        GroupElement::IntVec(cs.to_vec())
    }

    fn cfg(a: &FiniteSet, b: &FiniteSet) -> AuditConfig {
        AuditConfig::defaults_for(a, b)
    }

    #[test]
    fn probe_closure_contains_base_and_inverses() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::singleton(iv(&[1, 0]));
        let b = FiniteSet::singleton(iv(&[0, 1]));
        let probe = probe_closure(&a, &b, &g, 1, 100).unwrap();
        for e in [
            iv(&[0, 0]),
            iv(&[1, 0]),
            iv(&[0, 1]),
            iv(&[-1, 0]),
            iv(&[0, -1]),
        ] {
            assert!(probe.elements.contains(&e), "missing {e}");
        }
        // independent depth-1 closure: base plus all pairwise sums
        let base = [
            iv(&[0, 0]),
            iv(&[1, 0]),
            iv(&[0, 1]),
            iv(&[-1, 0]),
            iv(&[0, -1]),
        ];
        let mut expected: Vec<GroupElement> = base.to_vec();
        for x in &base {
            for y in &base {
                expected.push(g.combine(x, y).unwrap());
            }
        }
        assert_eq!(probe.elements, FiniteSet::from_vec(expected));
    }

    #[test]
    fn probe_depth_zero_rejected() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::singleton(iv(&[1, 0]));
        assert!(probe_closure(&a, &a, &g, 0, 100).is_err());
    }

    #[test]
    fn probe_closure_of_finite_group_is_the_group() {
        let g = GroupContext::CycInt { modulus: 5 };
        let a = FiniteSet::from_vec((0..5).map(GroupElement::CycInt).collect());
        let b = FiniteSet::singleton(GroupElement::CycInt(1));
        let probe = probe_closure(&a, &b, &g, 3, 100).unwrap();
        assert_eq!(probe.elements, a);
    }

    #[test]
    fn p2_violated_for_fixed_points_on_s3() {
        let g = GroupContext::Perm { n: 3 };
        let a = FiniteSet::from_vec(vec![
            GroupElement::Perm(vec![2, 1, 3]), // (12)
            GroupElement::Perm(vec![3, 2, 1]), // (13)
        ]);
        let b = FiniteSet::singleton(GroupElement::Perm(vec![2, 3, 1]));
        let c = cfg(&a, &b);
        let probe = probe_closure(&a, &b, &g, c.depth, c.cap).unwrap();
        let rel = RelationOracle::FixedPoints;
        let status = audit_property(PropertyId::P2, &rel, &g, &probe, &b, &c).unwrap();
        let PropertyStatus::Violated(w) = &status else {
            panic!("expected P2 violation, got {status}");
        };
        assert!(replay_violation(PropertyId::P2, w, &rel, &g).unwrap());
    }

    #[test]
    fn p3_finding_for_fixed_points_is_recorded_not_assumed() {
        // the audit decides; composing with a 3-cycle reverses fixed-point
        // counts, so a violation is expected on any probe holding id and
        // the 3-cycles
        let g = GroupContext::Perm { n: 3 };
        let a = FiniteSet::from_vec(vec![
            GroupElement::Perm(vec![2, 1, 3]),
            GroupElement::Perm(vec![3, 2, 1]),
        ]);
        let b = FiniteSet::singleton(GroupElement::Perm(vec![2, 3, 1]));
        let c = cfg(&a, &b);
        let probe = probe_closure(&a, &b, &g, c.depth, c.cap).unwrap();
        let rel = RelationOracle::FixedPoints;
        let status = audit_property(PropertyId::P3, &rel, &g, &probe, &b, &c).unwrap();
        if let PropertyStatus::Violated(w) = &status {
            assert!(replay_violation(PropertyId::P3, w, &rel, &g).unwrap());
        }
        assert!(
            matches!(status, PropertyStatus::Violated(_)),
            "bounded audit found no isotonicity counterexample: {status}"
        );
    }

    #[test]
    fn p4_violated_for_equality_on_zmod5() {
        // 5b = [5] = [0]
        let g = GroupContext::CycInt { modulus: 5 };
        let a = FiniteSet::from_vec((0..5).map(GroupElement::CycInt).collect());
        let b = FiniteSet::singleton(GroupElement::CycInt(1));
        let c = cfg(&a, &b);
        assert!(c.max_multiplicity >= 5);
        let probe = probe_closure(&a, &b, &g, c.depth, c.cap).unwrap();
        let rel = RelationOracle::Equality;
        let status = audit_property(PropertyId::P4, &rel, &g, &probe, &b, &c).unwrap();
        let PropertyStatus::Violated(w) = &status else {
            panic!("expected P4 violation, got {status}");
        };
        assert_eq!(w.multiplicities, vec![5]);
        assert_eq!(w.elements, vec![GroupElement::CycInt(1)]);
        assert!(replay_violation(PropertyId::P4, w, &rel, &g).unwrap());
    }

    #[test]
    fn p5_violated_for_superset_on_finset() {
        // 2b = {} so 0_G R 2b holds while 0_G R b fails
        let g = GroupContext::FinSet;
        let a = FiniteSet::singleton(GroupElement::FinSet(vec![2]));
        let b = FiniteSet::singleton(GroupElement::FinSet(vec![0, 1]));
        let c = cfg(&a, &b);
        let probe = probe_closure(&a, &b, &g, c.depth, c.cap).unwrap();
        let rel = RelationOracle::Superset;
        let status = audit_property(PropertyId::P5, &rel, &g, &probe, &b, &c).unwrap();
        let PropertyStatus::Violated(w) = &status else {
            panic!("expected P5 violation, got {status}");
        };
        assert_eq!(w.multiplicities, vec![2]);
        assert!(replay_violation(PropertyId::P5, w, &rel, &g).unwrap());
    }

    #[test]
    fn product_order_declared_properties_pass_spot_checks() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        let b = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[-1, 0])]);
        let c = cfg(&a, &b);
        let report = run_audits(&RelationOracle::ProductOrder, &g, &a, &b, &c).unwrap();
        for p in [PropertyId::Refl, PropertyId::P1, PropertyId::P2, PropertyId::P3] {
            assert_eq!(report.status(p), &PropertyStatus::Declared, "{p}");
        }
    }

    #[test]
    fn explicit_matrix_full_carrier_proven_exhaustive() {
        // Z/3 table with the trivial (equality) matrix
        let t = crate::group::CayleyTable::new(vec![
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
        ])
        .unwrap();
        let g = GroupContext::Table(t);
        let m = vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ];
        let rel = RelationOracle::explicit(m).unwrap();
        let a = FiniteSet::from_vec((0..3).map(GroupElement::TableIdx).collect());
        let b = FiniteSet::singleton(GroupElement::TableIdx(0));
        let c = cfg(&a, &b);
        let report = run_audits(&rel, &g, &a, &b, &c).unwrap();
        for p in [PropertyId::P1, PropertyId::P2, PropertyId::P3] {
            assert_eq!(report.status(p), &PropertyStatus::ProvenExhaustive, "{p}");
        }
    }
}

//! Decides whether the efficient set survives translation by a summand
//! set: a trivial set-equality check, a fixed-precedence ladder of theorem
//! rules gated on audited properties, and a brute-force oracle, all
//! cross-checked.

use std::collections::BTreeMap;
use std::fmt;

use crate::audit::{PropertyId, PropertyReport, PropertyStatus};
use crate::error::{Error, Result};
use crate::group::{minkowski_sum, minkowski_sum_many, FiniteSet, GroupContext};
use crate::relation::{compare, efficient_set, is_stable, Comparison, RelationOracle};

/// Rule identifiers in the precedence ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TheoremRule {
    TrivialEqual,
    T1,
    T2,
    T3,
    T4,
    T5,
    T7,
    T8,
    T9,
    T10,
    None,
}

impl TheoremRule {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremRule::TrivialEqual => "TRIVIAL_EQUAL",
            TheoremRule::T1 => "T1",
            TheoremRule::T2 => "T2",
            TheoremRule::T3 => "T3",
            TheoremRule::T4 => "T4",
            TheoremRule::T5 => "T5",
            TheoremRule::T7 => "T7",
            TheoremRule::T8 => "T8",
            TheoremRule::T9 => "T9",
            TheoremRule::T10 => "T10",
            TheoremRule::None => "NONE",
        }
    }
}

impl fmt::Display for TheoremRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Holds,
    Fails,
    Inapplicable,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::Holds => "Holds",
            Direction::Fails => "Fails",
            Direction::Inapplicable => "Inapplicable",
        };
        f.write_str(s)
    }
}

/// One evaluated rule condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: String,
    pub passed: bool,
    pub evidence: String,
}

/// Outcome of the rule ladder.
#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub rule: TheoremRule,
    pub direction: Direction,
    /// True when a required property was only spot-checked
    /// (NoViolationFound): the rule's conclusion is reported but not
    /// licensed.
    pub conditional: bool,
    pub conditions_trace: Vec<ConditionCheck>,
    pub property_basis: BTreeMap<PropertyId, PropertyStatus>,
}

/// Brute-force computation of both efficient sets.
#[derive(Debug, Clone)]
pub struct OracleVerdict {
    pub efficient_a: FiniteSet,
    pub efficient_sum: FiniteSet,
    pub equality_holds: bool,
}

/// Theorem and oracle results side by side.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub theorem: TheoremVerdict,
    pub oracle: OracleVerdict,
    pub consistent: bool,
}

pub fn oracle_verdict(
    a: &FiniteSet,
    b: &FiniteSet,
    g: &GroupContext,
    rel: &RelationOracle,
) -> Result<OracleVerdict> {
    let sum = minkowski_sum(a, b, g)?;
    let efficient_a = efficient_set(a, rel)?.efficient;
    let efficient_sum = efficient_set(&sum, rel)?.efficient;
    let equality_holds = efficient_a == efficient_sum;
    Ok(OracleVerdict {
        efficient_a,
        efficient_sum,
        equality_holds,
    })
}

/// How a rule's property requirements fare under the audit report.
enum Gate {
    /// Every requirement Declared or ProvenExhaustive.
    Licensed,
    /// No violation, but some requirement only spot-checked.
    Conditional,
    /// Some requirement Violated; the rule may not fire.
    Blocked(PropertyId),
}

fn gate(report: &PropertyReport, props: &[PropertyId]) -> Gate {
    for &p in props {
        if matches!(report.status(p), PropertyStatus::Violated(_)) {
            return Gate::Blocked(p);
        }
    }
    if report.licensed(props) {
        Gate::Licensed
    } else {
        Gate::Conditional
    }
}

fn basis(report: &PropertyReport, props: &[PropertyId]) -> BTreeMap<PropertyId, PropertyStatus> {
    props
        .iter()
        .map(|&p| (p, report.status(p).clone()))
        .collect()
}

struct RuleAttempt {
    checks: Vec<ConditionCheck>,
    ok: bool,
}

impl RuleAttempt {
    fn new() -> Self {
        RuleAttempt {
            checks: Vec::new(),
            ok: true,
        }
    }

    fn check(&mut self, condition: &str, passed: bool, evidence: String) -> bool {
        self.checks.push(ConditionCheck {
            condition: condition.to_string(),
            passed,
            evidence,
        });
        self.ok &= passed;
        passed
    }
}

/// Evaluates the rules in fixed precedence: the trivial equality first,
/// then the sufficiency rules, then the failure rules (which all require
/// the sum to differ from the base set), and finally NONE.
pub fn theorem_verdict(
    a: &FiniteSet,
    b: &FiniteSet,
    g: &GroupContext,
    rel: &RelationOracle,
    report: &PropertyReport,
) -> Result<TheoremVerdict> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand("verdict operands".into()));
    }
    let zero = g.identity();
    let sum = minkowski_sum(a, b, g)?;
    let trivial = sum == *a;
    let mut skipped: Vec<ConditionCheck> = Vec::new();

    // TRIVIAL_EQUAL
    if trivial {
        return Ok(TheoremVerdict {
            rule: TheoremRule::TrivialEqual,
            direction: Direction::Holds,
            conditional: false,
            conditions_trace: vec![ConditionCheck {
                condition: "A+B = A".into(),
                passed: true,
                evidence: format!("both sides have {} elements", a.len()),
            }],
            property_basis: BTreeMap::new(),
        });
    }
    let mut skip = |rule: TheoremRule, why: String| {
        skipped.push(ConditionCheck {
            condition: format!("{rule} applies"),
            passed: false,
            evidence: why,
        });
    };

    // T2: identity in B and every summand weakly above it — holds
    {
        let props = [PropertyId::P1, PropertyId::P2, PropertyId::P3];
        let mut att = RuleAttempt::new();
        att.check(
            "0_G in B",
            b.contains(&zero),
            String::new(),
        );
        let mut all_weak = true;
        let mut bad = None;
        for x in b {
            if !rel.related(&zero, x)? {
                all_weak = false;
                bad = Some(x.clone());
                break;
            }
        }
        att.check(
            "0_G R b for every b in B",
            all_weak,
            bad.map(|x| format!("fails for {x}")).unwrap_or_default(),
        );
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule: TheoremRule::T2,
                    direction: Direction::Holds,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(TheoremRule::T2, format!("{p} violated")),
            (false, _) => skip(TheoremRule::T2, "conditions unmet".into()),
        }
    }

    let e_a = efficient_set(a, rel)?.efficient;

    // T1: empty efficient base set — holds
    {
        let props = [PropertyId::P3];
        let mut att = RuleAttempt::new();
        att.check(
            "E(A) is empty",
            e_a.is_empty(),
            format!("|E(A)| = {}", e_a.len()),
        );
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule: TheoremRule::T1,
                    direction: Direction::Holds,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(TheoremRule::T1, format!("{p} violated")),
            (false, _) => skip(TheoremRule::T1, "conditions unmet".into()),
        }
    }

    // T4: some summand strictly above the identity — fails
    {
        let props = [PropertyId::P3];
        let mut att = RuleAttempt::new();
        att.check("A+B differs from A", !trivial, String::new());
        att.check(
            "E(A) is nonempty",
            !e_a.is_empty(),
            format!("|E(A)| = {}", e_a.len()),
        );
        let mut witness = None;
        for x in b {
            if rel.strictly(x, &zero)? {
                witness = Some(x.clone());
                break;
            }
        }
        att.check(
            "some b in B with bP0_G",
            witness.is_some(),
            witness.map(|x| format!("witness {x}")).unwrap_or_default(),
        );
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule: TheoremRule::T4,
                    direction: Direction::Fails,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(TheoremRule::T4, format!("{p} violated")),
            (false, _) => skip(TheoremRule::T4, "conditions unmet".into()),
        }
    }

    // T3: identity strictly above every summand — fails
    {
        let props = [PropertyId::P3];
        let mut att = RuleAttempt::new();
        att.check("A+B differs from A", !trivial, String::new());
        let mut all_below = true;
        let mut bad = None;
        for x in b {
            if !rel.strictly(&zero, x)? {
                all_below = false;
                bad = Some(x.clone());
                break;
            }
        }
        att.check(
            "0_G P b for every b in B",
            all_below,
            bad.map(|x| format!("fails for {x}")).unwrap_or_default(),
        );
        if att.ok {
            let e_sum = efficient_set(&sum, rel)?.efficient;
            att.check(
                "E(A+B) is nonempty",
                !e_sum.is_empty(),
                format!("|E(A+B)| = {} by direct computation", e_sum.len()),
            );
        }
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule: TheoremRule::T3,
                    direction: Direction::Fails,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(TheoremRule::T3, format!("{p} violated")),
            (false, _) => skip(TheoremRule::T3, "conditions unmet".into()),
        }
    }

    let stable = is_stable(a, rel)?;

    // T5: stable base set, one summand — equality iff the sum is trivial,
    // so here (A+B differs) it fails
    {
        let props = [
            PropertyId::P2,
            PropertyId::P3,
            PropertyId::P4,
            PropertyId::P5,
        ];
        let mut att = RuleAttempt::new();
        att.check("A+B differs from A", !trivial, String::new());
        att.check("A is stable", stable, String::new());
        att.check("B is a singleton", b.len() == 1, format!("|B| = {}", b.len()));
        if att.ok {
            let only = b.iter().next().expect("nonempty");
            att.check(
                "the summand is not 0_G",
                *only != zero,
                format!("b = {only}"),
            );
        }
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule: TheoremRule::T5,
                    direction: Direction::Fails,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(TheoremRule::T5, format!("{p} violated")),
            (false, _) => skip(TheoremRule::T5, "conditions unmet".into()),
        }
    }

    // T7/T8: every summand incomparable with the identity — fails
    {
        let props = [PropertyId::P1, PropertyId::P3, PropertyId::P4];
        let mut att = RuleAttempt::new();
        att.check("A+B differs from A", !trivial, String::new());
        let mut all_inc = true;
        let mut bad = None;
        for x in b {
            if compare(x, &zero, rel)? != Comparison::Incomparable {
                all_inc = false;
                bad = Some(x.clone());
                break;
            }
        }
        att.check(
            "b I 0_G for every b in B",
            all_inc,
            bad.map(|x| format!("fails for {x}")).unwrap_or_default(),
        );
        let rule = if b.len() == 1 {
            TheoremRule::T7
        } else {
            TheoremRule::T8
        };
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule,
                    direction: Direction::Fails,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(rule, format!("{p} violated")),
            (false, _) => skip(rule, "conditions unmet".into()),
        }
    }

    // T9/T10: stable base set, identity plus incomparable summands — fails
    {
        let props = [PropertyId::P1, PropertyId::P3, PropertyId::P5];
        let mut att = RuleAttempt::new();
        att.check("A+B differs from A", !trivial, String::new());
        att.check("A is stable", stable, String::new());
        att.check("0_G in B", b.contains(&zero), String::new());
        att.check(
            "B contains a nonzero summand",
            b.len() >= 2,
            format!("|B| = {}", b.len()),
        );
        let mut all_inc = true;
        let mut bad = None;
        for x in b {
            if *x == zero {
                continue;
            }
            if compare(x, &zero, rel)? != Comparison::Incomparable {
                all_inc = false;
                bad = Some(x.clone());
                break;
            }
        }
        att.check(
            "b I 0_G for every nonzero b in B",
            all_inc,
            bad.map(|x| format!("fails for {x}")).unwrap_or_default(),
        );
        let rule = if b.len() == 2 {
            TheoremRule::T9
        } else {
            TheoremRule::T10
        };
        match (att.ok, gate(report, &props)) {
            (true, Gate::Licensed) | (true, Gate::Conditional) => {
                let conditional = !report.licensed(&props);
                return Ok(TheoremVerdict {
                    rule,
                    direction: Direction::Fails,
                    conditional,
                    conditions_trace: att.checks,
                    property_basis: basis(report, &props),
                });
            }
            (true, Gate::Blocked(p)) => skip(rule, format!("{p} violated")),
            (false, _) => skip(rule, "conditions unmet".into()),
        }
    }

    Ok(TheoremVerdict {
        rule: TheoremRule::None,
        direction: Direction::Inapplicable,
        conditional: false,
        conditions_trace: skipped,
        property_basis: BTreeMap::new(),
    })
}

fn assemble(theorem: TheoremVerdict, oracle: OracleVerdict) -> Verdict {
    let consistent = match theorem.direction {
        Direction::Inapplicable => true,
        Direction::Holds => oracle.equality_holds,
        Direction::Fails => !oracle.equality_holds,
    };
    Verdict {
        theorem,
        oracle,
        consistent,
    }
}

/// Runs audits, the rule ladder and the oracle on `A` and the combined
/// summand set (the composition of all sets in `b_list`). Disagreement is
/// reported in `consistent`, never raised as an error.
pub fn combined_verdict(
    a: &FiniteSet,
    b_list: &[FiniteSet],
    g: &GroupContext,
    rel: &RelationOracle,
    cfg: &crate::audit::AuditConfig,
) -> Result<(Verdict, PropertyReport)> {
    if b_list.is_empty() {
        return Err(Error::EmptyOperand("summand set list".into()));
    }
    let b = if b_list.len() == 1 {
        b_list[0].clone()
    } else {
        let combined = minkowski_sum_many(&b_list[0], &b_list[1..], g)?;
        let identity_only = FiniteSet::singleton(g.identity());
        minkowski_sum(&combined, &identity_only, g)?
    };
    let report = crate::audit::run_audits(rel, g, a, &b, cfg)?;
    let theorem = theorem_verdict(a, &b, g, rel, &report)?;
    let oracle = oracle_verdict(a, &b, g, rel)?;
    Ok((assemble(theorem, oracle), report))
}

/// Convenience wrapper around [`combined_verdict`] for a single summand
/// set.
pub fn verdict(
    a: &FiniteSet,
    b: &FiniteSet,
    g: &GroupContext,
    rel: &RelationOracle,
    cfg: &crate::audit::AuditConfig,
) -> Result<(Verdict, PropertyReport)> {
    combined_verdict(a, std::slice::from_ref(b), g, rel, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::audit::AuditConfig;
    use crate::group::GroupElement;

    fn iv(cs: &[i64]) -> GroupElement {
        GroupElement::IntVec(cs.to_vec())
    }

    fn run(
        a: &FiniteSet,
        b: &FiniteSet,
        g: &GroupContext,
        rel: &RelationOracle,
    ) -> (Verdict, PropertyReport) {
        let cfg = AuditConfig::defaults_for(a, b);
        verdict(a, b, g, rel, &cfg).unwrap()
    }

    #[test]
    fn orthant_corners_hold_by_sufficiency() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        let b = FiniteSet::from_vec(vec![
            iv(&[0, 0]),
            iv(&[-1, 0]),
            iv(&[0, -1]),
            iv(&[-1, -1]),
        ]);
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T2);
        assert_eq!(v.theorem.direction, Direction::Holds);
        assert!(!v.theorem.conditional);
        assert!(v.oracle.equality_holds);
        assert!(v.consistent);
        assert_eq!(
            v.oracle.efficient_a,
            FiniteSet::from_vec(vec![iv(&[1, 0]), iv(&[0, 1])])
        );
    }

    #[test]
    fn dominating_summand_fails() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::singleton(iv(&[0, 0]));
        let b = FiniteSet::singleton(iv(&[1, 1]));
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T4);
        assert_eq!(v.theorem.direction, Direction::Fails);
        assert!(v.consistent);
    }

    #[test]
    fn dominated_summand_fails() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::singleton(iv(&[0, 0]));
        let b = FiniteSet::singleton(iv(&[-1, -1]));
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T3);
        assert_eq!(v.theorem.direction, Direction::Fails);
        assert!(v.consistent);
    }

    #[test]
    fn stable_base_with_incomparable_pair_fails() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(vec![iv(&[-1, 0]), iv(&[0, -1])]);
        let b = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[-1, 1])]);
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T9);
        assert_eq!(v.theorem.direction, Direction::Fails);
        assert!(!v.oracle.equality_holds);
        assert!(v.oracle.efficient_sum.contains(&iv(&[-2, 1])));
        assert!(v.consistent);
    }

    #[test]
    fn singleton_incomparable_summand_fires_before_incomparable_rules() {
        // the stable-base singleton rule outranks the all-incomparable rule
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::singleton(iv(&[0, 0]));
        let b = FiniteSet::singleton(iv(&[2, -2]));
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T5);
        assert_eq!(v.theorem.direction, Direction::Fails);
        assert!(!v.theorem.conditional);
        assert!(v.consistent);
    }

    #[test]
    fn incomparable_multi_summand_is_conditional() {
        // two incomparable summands: the repetition property cannot be
        // declared, so the rule fires conditionally
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(
            (-3..=3).map(|x| iv(&[x, -2 * x])).collect(),
        );
        let b = FiniteSet::from_vec(vec![iv(&[-1, 2]), iv(&[-1, 1])]);
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::T8);
        assert_eq!(v.theorem.direction, Direction::Fails);
        assert!(v.theorem.conditional);
        assert!(!v.oracle.equality_holds);
        assert!(v.oracle.efficient_sum.contains(&iv(&[-4, 8])));
        assert!(v.consistent);
    }

    #[test]
    fn trivial_translation_masks_failure_rules() {
        let g = GroupContext::CycInt { modulus: 5 };
        let a = FiniteSet::from_vec((0..5).map(GroupElement::CycInt).collect());
        let b = FiniteSet::singleton(GroupElement::CycInt(1));
        let (v, report) = run(&a, &b, &g, &RelationOracle::Equality);
        assert_eq!(v.theorem.rule, TheoremRule::TrivialEqual);
        assert_eq!(v.theorem.direction, Direction::Holds);
        assert!(v.consistent);
        assert!(matches!(
            report.status(PropertyId::P4),
            PropertyStatus::Violated(_)
        ));
    }

    #[test]
    fn empty_efficient_base_holds() {
        // cyclic group of order six; the relation steps by two, so the
        // even residues form a strict three-cycle with no efficient point
        let order = 6usize;
        let table: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| (i + j) % order).collect())
            .collect();
        let g = GroupContext::Table(crate::group::CayleyTable::new(table).unwrap());
        let mut matrix = vec![vec![false; order]; order];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = true;
            row[(i + 2) % order] = true;
        }
        let rel = RelationOracle::explicit(matrix).unwrap();
        let a = FiniteSet::from_vec(
            [0, 2, 4].iter().map(|&i| GroupElement::TableIdx(i)).collect(),
        );
        let b = FiniteSet::singleton(GroupElement::TableIdx(1));
        let (v, report) = run(&a, &b, &g, &rel);
        assert_eq!(
            report.status(PropertyId::P3),
            &PropertyStatus::ProvenExhaustive
        );
        assert_eq!(v.theorem.rule, TheoremRule::T1);
        assert_eq!(v.theorem.direction, Direction::Holds);
        assert!(!v.theorem.conditional);
        assert!(v.oracle.efficient_a.is_empty());
        assert!(v.consistent);
    }

    #[test]
    fn no_rule_applies() {
        // summands on both sides of comparability with the identity,
        // without any strict dominator
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[3, -3])]);
        let b = FiniteSet::from_vec(vec![iv(&[-1, -1]), iv(&[-1, 1])]);
        let (v, _) = run(&a, &b, &g, &RelationOracle::ProductOrder);
        assert_eq!(v.theorem.rule, TheoremRule::None);
        assert_eq!(v.theorem.direction, Direction::Inapplicable);
        assert!(v.consistent);
        assert!(!v.theorem.conditions_trace.is_empty());
    }

    #[test]
    fn multi_summand_sufficiency() {
        let g = GroupContext::IntVec { dim: 2 };
        let a = FiniteSet::from_vec(vec![iv(&[1, 0]), iv(&[0, 1]), iv(&[-1, -1])]);
        let b1 = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[-1, 0])]);
        let b2 = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[0, -2])]);
        let b3 = FiniteSet::from_vec(vec![iv(&[0, 0]), iv(&[-2, -1])]);
        let cfg = AuditConfig::defaults_for(&a, &b1);
        let (v, _) = combined_verdict(
            &a,
            &[b1, b2, b3],
            &g,
            &RelationOracle::ProductOrder,
            &cfg,
        )
        .unwrap();
        assert_eq!(v.theorem.rule, TheoremRule::T2);
        assert_eq!(v.theorem.direction, Direction::Holds);
        assert!(v.oracle.equality_holds);
        assert!(v.consistent);
    }
}

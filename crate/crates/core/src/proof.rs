//! Mechanized inconsistency arguments for equation/comparison systems over
//! a group: pigeonhole index-cycle detection, elimination of equation-bound
//! points, and replayable derivation traces that collapse a cycle into a
//! statement about multiples of a summand, contradicting its assumed
//! incomparability with the identity.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{minkowski_sum, FiniteSet, GroupContext, GroupElement};
use crate::relation::{efficient_set, RelationOracle};

/// A total map on `{1..n}` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    images: Vec<usize>,
}

impl IndexMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::MalformedSystem("index map must be nonempty".into()));
        }
        for (i, &j) in images.iter().enumerate() {
            if j < 1 || j > n {
                return Err(Error::IndexOutOfRange(format!(
                    "image {j} of {} outside 1..={n}",
                    i + 1
                )));
            }
        }
        Ok(IndexMap { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `i` must lie in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }
}

/// A sequence of indices closed under the system's index map:
/// `map(l_t) = l_{t+1}` cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub indices: Vec<usize>,
    /// Accumulated multiplicities per summand, when attributed by a
    /// derivation; empty for a bare index cycle.
    pub b_counts: Vec<u64>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Checks the defining invariant against a map.
    pub fn is_consistent_with(&self, map: &IndexMap) -> bool {
        let r = self.indices.len();
        if r == 0 {
            return false;
        }
        (0..r).all(|t| {
            let cur = self.indices[t];
            let next = self.indices[(t + 1) % r];
            cur >= 1 && cur <= map.n() && map.apply(cur) == next
        })
    }
}

/// Iterates the map from `start` and returns the first repeated segment.
/// Always succeeds for a total map; deterministic for a fixed start.
pub fn find_index_cycle(map: &IndexMap, start: usize) -> Result<CycleWitness> {
    if start < 1 || start > map.n() {
        return Err(Error::IndexOutOfRange(format!(
            "start {start} outside 1..={}",
            map.n()
        )));
    }
    let mut seq = vec![start];
    let mut first_pos = vec![usize::MAX; map.n() + 1];
    first_pos[start] = 0;
    loop {
        let next = map.apply(*seq.last().expect("nonempty"));
        if first_pos[next] != usize::MAX {
            let indices = seq[first_pos[next]..].to_vec();
            return Ok(CycleWitness {
                indices,
                b_counts: Vec::new(),
            });
        }
        first_pos[next] = seq.len();
        seq.push(next);
    }
}

/// System shapes. `S0`/`S3` are pure equation systems; `S1`/`S2` mix
/// equations with dominator-side comparisons; `S4`/`S5`/`Mixed` are
/// dominated-side systems whose rows compare a point against a shifted
/// point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemKind {
    S0,
    S1,
    S2,
    S3,
    S4,
    S5,
    Mixed,
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SystemKind::S0 => "S0",
            SystemKind::S1 => "S1",
            SystemKind::S2 => "S2",
            SystemKind::S3 => "S3",
            SystemKind::S4 => "S4",
            SystemKind::S5 => "S5",
            SystemKind::Mixed => "MIXED",
        };
        f.write_str(s)
    }
}

/// Relation label on a dominated-side row: strict domination or equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowRel {
    Strict,
    Equal,
}

/// `a^left = a^right + bs[b]`; holds by group arithmetic (validated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationRow {
    pub left: usize,
    pub right: usize,
    pub b: usize,
}

/// `a^left P a^right`; a formal hypothesis, not checked against any oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub left: usize,
    pub right: usize,
}

/// `a^left REL (a^point + bs[b])`; strict rows are formal hypotheses,
/// equality rows hold by arithmetic (validated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatedRow {
    pub left: usize,
    pub point: usize,
    pub b: usize,
    pub rel: RowRel,
}

/// A system carrying concrete group elements, so that equation rows and
/// every derived equality can be checked by arithmetic replay.
#[derive(Debug, Clone)]
pub struct SystemInstance {
    pub kind: SystemKind,
    pub points: Vec<GroupElement>,
    pub bs: Vec<GroupElement>,
    /// Split index for S1/S2 (count of equation-bound points); 0 otherwise.
    pub k: usize,
    pub equations: Vec<EquationRow>,
    pub comparisons: Vec<ComparisonRow>,
    pub dominated: Vec<DominatedRow>,
}

impl SystemInstance {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn s0(
        g: &GroupContext,
        points: Vec<GroupElement>,
        b: GroupElement,
        j: Vec<usize>,
    ) -> Result<Self> {
        let equations = j
            .iter()
            .enumerate()
            .map(|(i, &r)| EquationRow {
                left: i + 1,
                right: r,
                b: 0,
            })
            .collect();
        let sys = SystemInstance {
            kind: SystemKind::S0,
            points,
            bs: vec![b],
            k: 0,
            equations,
            comparisons: Vec::new(),
            dominated: Vec::new(),
        };
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn s3(
        g: &GroupContext,
        points: Vec<GroupElement>,
        bs: Vec<GroupElement>,
        j: Vec<usize>,
        l: Vec<usize>,
    ) -> Result<Self> {
        if j.len() != l.len() {
            return Err(Error::MalformedSystem(
                "equation targets and summand selectors differ in length".into(),
            ));
        }
        for &sel in &l {
            if sel < 1 || sel > bs.len() {
                return Err(Error::IndexOutOfRange(format!(
                    "summand selector {sel} outside 1..={}",
                    bs.len()
                )));
            }
        }
        let equations = j
            .iter()
            .zip(&l)
            .enumerate()
            .map(|(i, (&r, &sel))| EquationRow {
                left: i + 1,
                right: r,
                b: sel - 1,
            })
            .collect();
        let sys = SystemInstance {
            kind: SystemKind::S3,
            points,
            bs,
            k: 0,
            equations,
            comparisons: Vec::new(),
            dominated: Vec::new(),
        };
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn s1(
        g: &GroupContext,
        points: Vec<GroupElement>,
        b: GroupElement,
        k: usize,
        j: Vec<usize>,
        i: Vec<usize>,
    ) -> Result<Self> {
        Self::s1_s2(g, points, vec![b], k, j, vec![1; k], i, SystemKind::S1)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn s2(
        g: &GroupContext,
        points: Vec<GroupElement>,
        bs: Vec<GroupElement>,
        k: usize,
        j: Vec<usize>,
        s: Vec<usize>,
        i: Vec<usize>,
    ) -> Result<Self> {
        Self::s1_s2(g, points, bs, k, j, s, i, SystemKind::S2)
    }

    #[allow(clippy::too_many_arguments)]
    fn s1_s2(
        g: &GroupContext,
        points: Vec<GroupElement>,
        bs: Vec<GroupElement>,
        k: usize,
        j: Vec<usize>,
        s: Vec<usize>,
        i: Vec<usize>,
        kind: SystemKind,
    ) -> Result<Self> {
        let n = points.len();
        if j.len() != k || s.len() != k || i.len() != n.saturating_sub(k) {
            return Err(Error::MalformedSystem(
                "row counts disagree with the split index".into(),
            ));
        }
        for &sel in &s {
            if sel < 1 || sel > bs.len() {
                return Err(Error::IndexOutOfRange(format!(
                    "summand selector {sel} outside 1..={}",
                    bs.len()
                )));
            }
        }
        let equations = j
            .iter()
            .zip(&s)
            .enumerate()
            .map(|(t, (&r, &sel))| EquationRow {
                left: t + 1,
                right: r,
                b: sel - 1,
            })
            .collect();
        let comparisons = i
            .iter()
            .enumerate()
            .map(|(t, &left)| ComparisonRow {
                left,
                right: k + 1 + t,
            })
            .collect();
        let sys = SystemInstance {
            kind,
            points,
            bs,
            k,
            equations,
            comparisons,
            dominated: Vec::new(),
        };
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn s4(
        g: &GroupContext,
        points: Vec<GroupElement>,
        b: GroupElement,
        i: Vec<usize>,
    ) -> Result<Self> {
        let dominated = i
            .iter()
            .enumerate()
            .map(|(j, &left)| DominatedRow {
                left,
                point: j + 1,
                b: 0,
                rel: RowRel::Strict,
            })
            .collect();
        let sys = SystemInstance {
            kind: SystemKind::S4,
            points,
            bs: vec![b],
            k: 0,
            equations: Vec::new(),
            comparisons: Vec::new(),
            dominated,
        };
        sys.validate(g)?;
        Ok(sys)
    }

    /// `i[k-1][j-1]` is the dominator index for the row pairing point `k`
    /// with summand `j`.
    pub fn s5(
        g: &GroupContext,
        points: Vec<GroupElement>,
        bs: Vec<GroupElement>,
        i: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let m = bs.len();
        let mut dominated = Vec::new();
        if i.len() != points.len() {
            return Err(Error::MalformedSystem(
                "dominator rows disagree with point count".into(),
            ));
        }
        for (kk, row) in i.iter().enumerate() {
            if row.len() != m {
                return Err(Error::MalformedSystem(
                    "dominator columns disagree with summand count".into(),
                ));
            }
            for (j, &left) in row.iter().enumerate() {
                dominated.push(DominatedRow {
                    left,
                    point: kk + 1,
                    b: j,
                    rel: RowRel::Strict,
                });
            }
        }
        let sys = SystemInstance {
            kind: SystemKind::S5,
            points,
            bs,
            k: 0,
            equations: Vec::new(),
            comparisons: Vec::new(),
            dominated,
        };
        sys.validate(g)?;
        Ok(sys)
    }

    /// Rows as `(left, point, rel)` with a shared single summand; each
    /// point appears exactly once.
    pub fn mixed(
        g: &GroupContext,
        points: Vec<GroupElement>,
        b: GroupElement,
        rows: Vec<(usize, usize, RowRel)>,
    ) -> Result<Self> {
        let dominated = rows
            .into_iter()
            .map(|(left, point, rel)| DominatedRow {
                left,
                point,
                b: 0,
                rel,
            })
            .collect();
        let sys = SystemInstance {
            kind: SystemKind::Mixed,
            points,
            bs: vec![b],
            k: 0,
            equations: Vec::new(),
            comparisons: Vec::new(),
            dominated,
        };
        sys.validate(g)?;
        Ok(sys)
    }

    pub fn validate(&self, g: &GroupContext) -> Result<()> {
        let n = self.points.len();
        if n == 0 {
            return Err(Error::MalformedSystem("no points".into()));
        }
        if self.bs.is_empty() {
            return Err(Error::MalformedSystem("no summands".into()));
        }
        for p in self.points.iter().chain(self.bs.iter()) {
            g.validate(p)?;
        }
        let distinct: BTreeSet<&GroupElement> = self.points.iter().collect();
        if distinct.len() != n {
            return Err(Error::MalformedSystem("points must be distinct".into()));
        }
        if matches!(
            self.kind,
            SystemKind::S0 | SystemKind::S1 | SystemKind::S4 | SystemKind::Mixed
        ) && self.bs.len() != 1
        {
            return Err(Error::MalformedSystem(
                "this system kind carries a single summand".into(),
            ));
        }
        match self.kind {
            SystemKind::S0 | SystemKind::S3 => {
                if self.equations.len() != n
                    || !self.comparisons.is_empty()
                    || !self.dominated.is_empty()
                {
                    return Err(Error::MalformedSystem(
                        "pure equation system must have one equation per point".into(),
                    ));
                }
            }
            SystemKind::S1 | SystemKind::S2 => {
                if self.k < 1 || self.k > n - 1 {
                    return Err(Error::MalformedSystem(format!(
                        "split index {} outside 1..={}",
                        self.k,
                        n - 1
                    )));
                }
                if self.equations.len() != self.k || self.comparisons.len() != n - self.k {
                    return Err(Error::MalformedSystem(
                        "row counts disagree with the split index".into(),
                    ));
                }
                for (t, c) in self.comparisons.iter().enumerate() {
                    if c.right != self.k + 1 + t {
                        return Err(Error::MalformedSystem(
                            "comparison rows must cover the unbound points in order".into(),
                        ));
                    }
                    if c.left < 1 || c.left > self.k {
                        return Err(Error::MalformedSystem(format!(
                            "comparison dominator {} outside 1..={}",
                            c.left, self.k
                        )));
                    }
                }
            }
            SystemKind::S4 | SystemKind::Mixed => {
                if self.dominated.len() != n || !self.equations.is_empty() {
                    return Err(Error::MalformedSystem(
                        "dominated-side system must have one row per point".into(),
                    ));
                }
                let mut seen = vec![false; n + 1];
                for row in &self.dominated {
                    if row.point < 1 || row.point > n || seen[row.point] {
                        return Err(Error::MalformedSystem(
                            "each point must appear exactly once on the right".into(),
                        ));
                    }
                    seen[row.point] = true;
                }
            }
            SystemKind::S5 => {
                if self.dominated.len() != n * self.bs.len() {
                    return Err(Error::MalformedSystem(
                        "dominated-side system needs one row per point/summand pair".into(),
                    ));
                }
            }
        }
        for eq in &self.equations {
            for idx in [eq.left, eq.right] {
                if idx < 1 || idx > n {
                    return Err(Error::IndexOutOfRange(format!("point index {idx}")));
                }
            }
            if eq.b >= self.bs.len() {
                return Err(Error::IndexOutOfRange(format!("summand index {}", eq.b)));
            }
            let rhs = g.combine(&self.points[eq.right - 1], &self.bs[eq.b])?;
            if self.points[eq.left - 1] != rhs {
                return Err(Error::MalformedSystem(format!(
                    "equation a^{} = a^{} + summand fails arithmetically",
                    eq.left, eq.right
                )));
            }
        }
        for c in &self.comparisons {
            for idx in [c.left, c.right] {
                if idx < 1 || idx > n {
                    return Err(Error::IndexOutOfRange(format!("point index {idx}")));
                }
            }
        }
        for row in &self.dominated {
            for idx in [row.left, row.point] {
                if idx < 1 || idx > n {
                    return Err(Error::IndexOutOfRange(format!("point index {idx}")));
                }
            }
            if row.b >= self.bs.len() {
                return Err(Error::IndexOutOfRange(format!("summand index {}", row.b)));
            }
            if row.left == row.point {
                return Err(Error::MalformedSystem(format!(
                    "dominator of point {} must differ from it",
                    row.point
                )));
            }
            if row.rel == RowRel::Equal {
                let rhs = g.combine(&self.points[row.point - 1], &self.bs[row.b])?;
                if self.points[row.left - 1] != rhs {
                    return Err(Error::MalformedSystem(format!(
                        "equality row a^{} = a^{} + summand fails arithmetically",
                        row.left, row.point
                    )));
                }
            }
        }
        Ok(())
    }

    fn dominated_row_for(&self, point: usize) -> &DominatedRow {
        self.dominated
            .iter()
            .find(|r| r.point == point)
            .expect("validated: one row per point")
    }
}

/// Symbolic operand `a^point + sum_l b_mults[l] * bs[l]` (point omitted for
/// a pure summand expression; everything omitted for the identity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub point: Option<usize>,
    pub b_mults: Vec<u64>,
}

impl Expr {
    pub fn zero(m: usize) -> Expr {
        Expr {
            point: None,
            b_mults: vec![0; m],
        }
    }

    pub fn of_point(i: usize, m: usize) -> Expr {
        Expr {
            point: Some(i),
            b_mults: vec![0; m],
        }
    }

    pub fn b_unit(l: usize, m: usize) -> Expr {
        let mut e = Expr::zero(m);
        e.b_mults[l] = 1;
        e
    }

    pub fn with_bs(mut self, counts: &[u64]) -> Expr {
        for (slot, &c) in self.b_mults.iter_mut().zip(counts) {
            *slot += c;
        }
        self
    }

    fn term_count(&self) -> usize {
        self.point.iter().count() + self.b_mults.iter().filter(|&&m| m > 0).count()
    }

    fn is_identity(&self) -> bool {
        self.term_count() == 0
    }

    fn total_b(&self) -> u64 {
        self.b_mults.iter().sum()
    }

    /// Concrete value under the system's points and summands; summand
    /// slots are applied in order after the base point.
    pub fn eval(&self, sys: &SystemInstance, g: &GroupContext) -> Result<GroupElement> {
        if self.b_mults.len() != sys.bs.len() {
            return Err(Error::MalformedSystem(
                "expression summand slots disagree with the system".into(),
            ));
        }
        let mut acc = match self.point {
            Some(i) => {
                if i < 1 || i > sys.n() {
                    return Err(Error::IndexOutOfRange(format!("point index {i}")));
                }
                sys.points[i - 1].clone()
            }
            None => g.identity(),
        };
        for (l, &m) in self.b_mults.iter().enumerate() {
            if m > 0 {
                acc = g.combine(&acc, &g.repeat(m, &sys.bs[l])?)?;
            }
        }
        Ok(acc)
    }

    fn render(&self, multi_b: bool) -> String {
        if self.is_identity() {
            return "0_G".to_string();
        }
        let mut terms = Vec::new();
        if let Some(i) = self.point {
            terms.push(format!("a^{i}"));
        }
        for (l, &m) in self.b_mults.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let name = if multi_b {
                format!("b^{}", l + 1)
            } else {
                "b".to_string()
            };
            if m == 1 {
                terms.push(name);
            } else {
                terms.push(format!("{m}{name}"));
            }
        }
        terms.join("+")
    }

    fn render_operand(&self, multi_b: bool) -> String {
        let compound = self.term_count() > 1 || self.b_mults.iter().any(|&m| m > 1);
        let body = self.render(multi_b);
        if compound {
            format!("({body})")
        } else {
            body
        }
    }
}

/// Relation symbol inside a trace statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactRel {
    Strict,
    Weak,
    Equal,
    Incomparable,
}

impl FactRel {
    fn symbol(self) -> &'static str {
        match self {
            FactRel::Strict => "P",
            FactRel::Weak => "R",
            FactRel::Equal => "=",
            FactRel::Incomparable => "I",
        }
    }
}

/// A statement inside a trace: an arithmetic identity between operands,
/// or a relational fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    ElementEq(Expr, Expr),
    Related(FactRel, Expr, Expr),
}

impl Fact {
    fn render(&self, multi_b: bool) -> String {
        match self {
            Fact::ElementEq(x, y) => format!(
                "{} = {}",
                x.render_operand(multi_b),
                y.render_operand(multi_b)
            ),
            Fact::Related(rel, x, y) => format!(
                "{}{}{}",
                x.render_operand(multi_b),
                rel.symbol(),
                y.render_operand(multi_b)
            ),
        }
    }
}

/// Rule labels cited by trace steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleId {
    P1,
    P3,
    P4,
    P5,
    Group,
}

impl RuleId {
    fn as_str(self) -> &'static str {
        match self {
            RuleId::P1 => "P1",
            RuleId::P3 => "P3",
            RuleId::P4 => "P4",
            RuleId::P5 => "P5",
            RuleId::Group => "GROUP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: RuleId,
    pub fact: Fact,
}

/// An ordered, replayable derivation ending in a fact that contradicts an
/// assumed incomparability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTrace {
    pub preamble: Vec<String>,
    pub hypotheses: Vec<Fact>,
    pub steps: Vec<TraceStep>,
    pub conclusion: Fact,
    pub multi_b: bool,
}

impl DerivationTrace {
    /// Line-oriented text form: comments, assumptions, one step per line
    /// as "RULE | statement", and a final contradiction line.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for line in &self.preamble {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        for h in &self.hypotheses {
            out.push_str("ASSUME | ");
            out.push_str(&h.render(self.multi_b));
            out.push('\n');
        }
        for s in &self.steps {
            out.push_str(s.rule.as_str());
            out.push_str(" | ");
            out.push_str(&s.fact.render(self.multi_b));
            out.push('\n');
        }
        let contra = self
            .contradicted_hypothesis()
            .map(|h| h.render(self.multi_b))
            .unwrap_or_else(|| "?".to_string());
        out.push_str("CONTRADICTION | ");
        out.push_str(&self.conclusion.render(self.multi_b));
        out.push_str(" contradicts ");
        out.push_str(&contra);
        out.push('\n');
        out
    }

    fn contradicted_hypothesis(&self) -> Option<&Fact> {
        let Fact::Related(rel, x, y) = &self.conclusion else {
            return None;
        };
        if *rel == FactRel::Incomparable {
            return None;
        }
        self.hypotheses.iter().find(|h| {
            matches!(h, Fact::Related(FactRel::Incomparable, hx, hy)
                if (hx == x && hy == y) || (hx == y && hy == x))
        })
    }

    /// Re-validates every step from the hypotheses using only group
    /// arithmetic and the cited rules, then checks that the conclusion
    /// contradicts an assumed incomparability. Relational hypotheses are
    /// formal; equalities are checked concretely against the system.
    pub fn replay(&self, sys: &SystemInstance, g: &GroupContext) -> Result<()> {
        let fail = |t: usize, why: &str| -> Error {
            Error::Precondition(format!("replay failed at step {t}: {why}"))
        };
        for (t, h) in self.hypotheses.iter().enumerate() {
            self.check_hypothesis(h, sys, g)
                .map_err(|e| fail(t, &format!("bad hypothesis: {e}")))?;
        }
        let mut known: Vec<Fact> = self.hypotheses.clone();
        for (t, step) in self.steps.iter().enumerate() {
            let ok = match step.rule {
                RuleId::Group => self.check_group(&step.fact, &known, sys, g)?,
                RuleId::P3 => self.check_p3(&step.fact, &known, sys, g)?,
                RuleId::P1 => self.check_p1(&step.fact, &known, sys, g)?,
                RuleId::P4 => self.check_p4(&step.fact, &known, false)?,
                RuleId::P5 => self.check_p4(&step.fact, &known, true)?,
            };
            if !ok {
                return Err(fail(t, "statement does not follow by the cited rule"));
            }
            known.push(step.fact.clone());
        }
        if !known.contains(&self.conclusion) {
            return Err(fail(self.steps.len(), "conclusion was never derived"));
        }
        if self.contradicted_hypothesis().is_none() {
            return Err(fail(
                self.steps.len(),
                "conclusion contradicts no incomparability hypothesis",
            ));
        }
        Ok(())
    }

    fn check_hypothesis(&self, h: &Fact, sys: &SystemInstance, g: &GroupContext) -> Result<()> {
        match h {
            Fact::ElementEq(x, y) => {
                if x.eval(sys, g)? != y.eval(sys, g)? {
                    return Err(Error::MalformedSystem(
                        "assumed equality fails arithmetically".into(),
                    ));
                }
                Ok(())
            }
            Fact::Related(FactRel::Incomparable, x, y) => {
                let unit = x.point.is_none() && x.total_b() == 1 && y.is_identity();
                if !unit {
                    return Err(Error::MalformedSystem(
                        "incomparability hypotheses must pit one summand against the identity"
                            .into(),
                    ));
                }
                Ok(())
            }
            Fact::Related(rel, x, y) => {
                // must match a system row
                let as_row = |row_ok: bool| {
                    if row_ok {
                        Ok(())
                    } else {
                        Err(Error::MalformedSystem(
                            "relational hypothesis matches no system row".into(),
                        ))
                    }
                };
                if let (Some(i), Some(j)) = (x.point, y.point) {
                    if *rel == FactRel::Strict && x.total_b() == 0 && y.total_b() == 0 {
                        let ok = sys
                            .comparisons
                            .iter()
                            .any(|c| c.left == i && c.right == j);
                        if ok {
                            return Ok(());
                        }
                    }
                    let want = match rel {
                        FactRel::Strict => RowRel::Strict,
                        FactRel::Equal => RowRel::Equal,
                        _ => return as_row(false),
                    };
                    let ok = sys.dominated.iter().any(|r| {
                        r.left == i
                            && r.point == j
                            && r.rel == want
                            && x.total_b() == 0
                            && y.b_mults.iter().enumerate().all(|(l, &m)| {
                                if l == r.b {
                                    m == 1
                                } else {
                                    m == 0
                                }
                            })
                    });
                    return as_row(ok);
                }
                as_row(false)
            }
        }
    }

    fn check_group(
        &self,
        fact: &Fact,
        known: &[Fact],
        sys: &SystemInstance,
        g: &GroupContext,
    ) -> Result<bool> {
        match fact {
            Fact::ElementEq(x, y) => Ok(x.eval(sys, g)? == y.eval(sys, g)?),
            Fact::Related(FactRel::Equal, x, y) => Ok(x.eval(sys, g)? == y.eval(sys, g)?),
            Fact::Related(rel, x, y) => {
                // rewriting an earlier fact through arithmetic identities
                let xv = x.eval(sys, g)?;
                let yv = y.eval(sys, g)?;
                for f in known {
                    if let Fact::Related(r0, x0, y0) = f {
                        if r0 == rel && x0.eval(sys, g)? == xv && y0.eval(sys, g)? == yv {
                            return Ok(true);
                        }
                    }
                }
                Ok(false)
            }
        }
    }

    fn check_p3(
        &self,
        fact: &Fact,
        known: &[Fact],
        sys: &SystemInstance,
        g: &GroupContext,
    ) -> Result<bool> {
        let Fact::Related(rel, x1, y1) = fact else {
            return Ok(false);
        };
        let x1v = x1.eval(sys, g)?;
        let y1v = y1.eval(sys, g)?;
        for f in known {
            let Fact::Related(r0, x0, y0) = f else {
                continue;
            };
            if r0 != rel || *r0 == FactRel::Incomparable {
                continue;
            }
            let x0v = x0.eval(sys, g)?;
            let y0v = y0.eval(sys, g)?;
            // right shift: x1 = x0 + z, y1 = y0 + z
            let zr = g.combine(&g.inverse(&x0v)?, &x1v)?;
            if g.combine(&x0v, &zr)? == x1v && g.combine(&y0v, &zr)? == y1v {
                return Ok(true);
            }
            // left shift: x1 = z + x0, y1 = z + y0
            let zl = g.combine(&x1v, &g.inverse(&x0v)?)?;
            if g.combine(&zl, &x0v)? == x1v && g.combine(&zl, &y0v)? == y1v {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check_p1(
        &self,
        fact: &Fact,
        known: &[Fact],
        sys: &SystemInstance,
        g: &GroupContext,
    ) -> Result<bool> {
        let Fact::Related(rel, x, z) = fact else {
            return Ok(false);
        };
        if !matches!(rel, FactRel::Strict | FactRel::Equal) {
            return Ok(false);
        }
        let xv = x.eval(sys, g)?;
        let zv = z.eval(sys, g)?;
        for f1 in known {
            let Fact::Related(r1, x1, y1) = f1 else {
                continue;
            };
            if !matches!(r1, FactRel::Strict | FactRel::Equal) || x1.eval(sys, g)? != xv {
                continue;
            }
            let mid = y1.eval(sys, g)?;
            for f2 in known {
                let Fact::Related(r2, x2, y2) = f2 else {
                    continue;
                };
                if !matches!(r2, FactRel::Strict | FactRel::Equal) {
                    continue;
                }
                if x2.eval(sys, g)? != mid || y2.eval(sys, g)? != zv {
                    continue;
                }
                let combined = if *r1 == FactRel::Strict || *r2 == FactRel::Strict {
                    FactRel::Strict
                } else {
                    FactRel::Equal
                };
                if combined == *rel {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Checks repetition-consistency steps. With `dominated_side` false the
    /// premise compares a summand combination against the identity and the
    /// conclusion extracts a single summand on the left; with it true the
    /// identity sits on the left.
    fn check_p4(&self, fact: &Fact, known: &[Fact], dominated_side: bool) -> Result<bool> {
        let Fact::Related(rc, cx, cy) = fact else {
            return Ok(false);
        };
        let (c_sum, c_zero) = if dominated_side { (cy, cx) } else { (cx, cy) };
        if !c_zero.is_identity() || c_sum.point.is_some() || c_sum.total_b() != 1 {
            return Ok(false);
        }
        let l = c_sum
            .b_mults
            .iter()
            .position(|&m| m == 1)
            .expect("total is one");
        for f in known {
            let Fact::Related(rp, px, py) = f else {
                continue;
            };
            let (p_sum, p_zero) = if dominated_side { (py, px) } else { (px, py) };
            if !matches!(rp, FactRel::Strict | FactRel::Equal | FactRel::Weak) {
                continue;
            }
            if !p_zero.is_identity() || p_sum.point.is_some() || p_sum.total_b() < 1 {
                continue;
            }
            if p_sum.b_mults[l] < 1 {
                continue;
            }
            if rc == rp || *rc == FactRel::Weak {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Result of trying to express every equation-bound point over the
/// unbound ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elimination {
    Representations(Vec<Representation>),
    Cycle(CycleWitness),
}

/// `a^left = a^target + sum_l b_counts[l] * bs[l]` with `target` unbound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub left: usize,
    pub target: usize,
    pub b_counts: Vec<u64>,
}

/// Follows the equation chain out of each bound point. Either every bound
/// point reaches an unbound one (representations, verified by arithmetic),
/// or the walk revisits a bound point (an equation cycle).
pub fn eliminate_representations(
    sys: &SystemInstance,
    g: &GroupContext,
) -> Result<Elimination> {
    if !matches!(sys.kind, SystemKind::S1 | SystemKind::S2) {
        return Err(Error::NotApplicable(
            "elimination applies to equation-plus-comparison systems".into(),
        ));
    }
    let m = sys.bs.len();
    let mut reps = Vec::new();
    for i in 1..=sys.k {
        let mut counts = vec![0u64; m];
        let mut path = vec![i];
        let mut cur = i;
        loop {
            let eq = &sys.equations[cur - 1];
            counts[eq.b] = counts[eq.b]
                .checked_add(1)
                .ok_or(Error::Overflow("representation multiplicity"))?;
            cur = eq.right;
            if cur > sys.k {
                break;
            }
            if let Some(pos) = path.iter().position(|&p| p == cur) {
                let indices = path[pos..].to_vec();
                let mut b_counts = vec![0u64; m];
                for &idx in &indices {
                    let e = &sys.equations[idx - 1];
                    b_counts[e.b] += 1;
                }
                return Ok(Elimination::Cycle(CycleWitness { indices, b_counts }));
            }
            path.push(cur);
        }
        let rep = Representation {
            left: i,
            target: cur,
            b_counts: counts,
        };
        let lhs = sys.points[rep.left - 1].clone();
        let rhs = Expr::of_point(rep.target, m)
            .with_bs(&rep.b_counts)
            .eval(sys, g)?;
        if lhs != rhs {
            return Err(Error::MalformedSystem(format!(
                "representation of a^{} fails arithmetically",
                rep.left
            )));
        }
        reps.push(rep);
    }
    Ok(Elimination::Representations(reps))
}

fn incomparability_hypotheses(m: usize) -> Vec<Fact> {
    (0..m)
        .map(|l| Fact::Related(FactRel::Incomparable, Expr::b_unit(l, m), Expr::zero(m)))
        .collect()
}

/// Final extraction step shared by the equation and dominator arguments:
/// from a comparison of a pure summand combination against the identity,
/// conclude a statement about one summand.
fn conclude_single_summand(
    steps: &mut Vec<TraceStep>,
    premise_rel: FactRel,
    counts: &[u64],
    m: usize,
) -> Fact {
    let l = counts.iter().position(|&c| c > 0).expect("nonempty cycle");
    // a single strictly-dominating summand keeps the strict symbol;
    // otherwise only the weak conclusion is licensed
    let rel = if m == 1 && premise_rel == FactRel::Strict {
        FactRel::Strict
    } else {
        FactRel::Weak
    };
    let fact = Fact::Related(rel, Expr::b_unit(l, m), Expr::zero(m));
    steps.push(TraceStep {
        rule: RuleId::P4,
        fact: fact.clone(),
    });
    fact
}

/// Collapses an equation cycle: the cycle's summand total equals the
/// identity, so repetition-consistency forces a summand comparable with it.
pub fn derive_equation_cycle(sys: &SystemInstance, g: &GroupContext) -> Result<DerivationTrace> {
    if !matches!(sys.kind, SystemKind::S0 | SystemKind::S3) {
        return Err(Error::NotApplicable(
            "equation-cycle derivation applies to pure equation systems".into(),
        ));
    }
    let map = IndexMap::new(sys.equations.iter().map(|e| e.right).collect())?;
    let cycle = find_index_cycle(&map, 1)?;
    equation_cycle_trace(sys, g, &cycle.indices, |i| &sys.equations[i - 1])
}

/// Builds the equation-cycle trace for the given cycle indices; `eq_of`
/// resolves the equation rooted at an index.
fn equation_cycle_trace<'a>(
    sys: &'a SystemInstance,
    g: &GroupContext,
    indices: &[usize],
    eq_of: impl Fn(usize) -> &'a EquationRow,
) -> Result<DerivationTrace> {
    let m = sys.bs.len();
    let mut counts = vec![0u64; m];
    let mut hypotheses = Vec::new();
    for &idx in indices {
        let eq = eq_of(idx);
        counts[eq.b] += 1;
        hypotheses.push(Fact::ElementEq(
            Expr::of_point(eq.left, m),
            Expr::of_point(eq.right, m).with_bs(&unit_counts(eq.b, m)),
        ));
    }
    hypotheses.extend(incomparability_hypotheses(m));
    let l0 = indices[0];
    let mut steps = Vec::new();
    // composing the cycle returns to its starting point with the
    // accumulated summands attached
    steps.push(TraceStep {
        rule: RuleId::Group,
        fact: Fact::ElementEq(
            Expr::of_point(l0, m),
            Expr::of_point(l0, m).with_bs(&counts),
        ),
    });
    let sum = Expr::zero(m).with_bs(&counts);
    steps.push(TraceStep {
        rule: RuleId::Group,
        fact: Fact::ElementEq(Expr::zero(m), sum.clone()),
    });
    steps.push(TraceStep {
        rule: RuleId::Group,
        fact: Fact::Related(FactRel::Equal, sum, Expr::zero(m)),
    });
    let conclusion = conclude_single_summand(&mut steps, FactRel::Equal, &counts, m);
    let trace = DerivationTrace {
        preamble: vec![format!(
            "equation cycle {:?} of length {} under the index map",
            indices,
            indices.len()
        )],
        hypotheses,
        steps,
        conclusion,
        multi_b: m > 1,
    };
    trace.replay(sys, g)?;
    Ok(trace)
}

fn unit_counts(l: usize, m: usize) -> Vec<u64> {
    let mut c = vec![0u64; m];
    c[l] = 1;
    c
}

/// Dominator-side argument: rewrite each comparison through the
/// representations, find the cycle among the rewritten dominators, chain
/// transitivity and isotonicity into a self-comparison, strip the base
/// point, and extract a summand comparable with the identity.
pub fn derive_dominator_cycle(sys: &SystemInstance, g: &GroupContext) -> Result<DerivationTrace> {
    let reps = match eliminate_representations(sys, g)? {
        Elimination::Cycle(cw) => {
            // the equation portion already collapses on its own
            let mut trace =
                equation_cycle_trace(sys, g, &cw.indices, |i| &sys.equations[i - 1])?;
            trace
                .preamble
                .insert(0, "equation portion contains a cycle".to_string());
            return Ok(trace);
        }
        Elimination::Representations(reps) => reps,
    };
    let m = sys.bs.len();
    let k = sys.k;
    // rewritten comparison for unbound point j: (a^{target} + counts)Pa^j
    let rewritten: Vec<(usize, Vec<u64>)> = sys
        .comparisons
        .iter()
        .map(|c| {
            let rep = &reps[c.left - 1];
            (rep.target, rep.b_counts.clone())
        })
        .collect();
    // cycle of the map j -> target_j over the unbound points
    let map = IndexMap::new(rewritten.iter().map(|(t, _)| t - k).collect())?;
    let cycle = find_index_cycle(&map, 1)?;
    let indices: Vec<usize> = cycle.indices.iter().map(|i| i + k).collect();
    let r = indices.len();

    let mut hypotheses = Vec::new();
    for c in &sys.comparisons {
        hypotheses.push(Fact::Related(
            FactRel::Strict,
            Expr::of_point(c.left, m),
            Expr::of_point(c.right, m),
        ));
    }
    for eq in &sys.equations {
        hypotheses.push(Fact::ElementEq(
            Expr::of_point(eq.left, m),
            Expr::of_point(eq.right, m).with_bs(&unit_counts(eq.b, m)),
        ));
    }
    hypotheses.extend(incomparability_hypotheses(m));

    let mut steps = Vec::new();
    let rw_fact = |j: usize| -> Fact {
        let (target, counts) = &rewritten[j - k - 1];
        Fact::Related(
            FactRel::Strict,
            Expr::of_point(*target, m).with_bs(counts),
            Expr::of_point(j, m),
        )
    };
    for &j in &indices {
        let rep = &reps[sys.comparisons[j - k - 1].left - 1];
        steps.push(TraceStep {
            rule: RuleId::Group,
            fact: Fact::ElementEq(
                Expr::of_point(rep.left, m),
                Expr::of_point(rep.target, m).with_bs(&rep.b_counts),
            ),
        });
        steps.push(TraceStep {
            rule: RuleId::Group,
            fact: rw_fact(j),
        });
    }
    // ascend from the bottom of the cycle
    let l0 = indices[0];
    let mut acc_counts = rewritten[indices[r - 1] - k - 1].1.clone();
    let mut acc = rw_fact(indices[r - 1]); // (a^{l0} + p)Pa^{l_{r-1}}
    for t in (0..r.saturating_sub(1)).rev() {
        let lt = indices[t];
        let lt1 = indices[(t + 1) % r];
        let (_, p_t) = &rewritten[lt - k - 1];
        // shift the accumulator by this row's multiplicities
        let shifted = Fact::Related(
            FactRel::Strict,
            Expr::of_point(l0, m).with_bs(&acc_counts).with_bs(p_t),
            Expr::of_point(lt1, m).with_bs(p_t),
        );
        steps.push(TraceStep {
            rule: RuleId::P3,
            fact: shifted,
        });
        for (slot, &c) in acc_counts.iter_mut().zip(p_t) {
            *slot = slot
                .checked_add(c)
                .ok_or(Error::Overflow("cycle multiplicity"))?;
        }
        acc = Fact::Related(
            FactRel::Strict,
            Expr::of_point(l0, m).with_bs(&acc_counts),
            Expr::of_point(lt, m),
        );
        steps.push(TraceStep {
            rule: RuleId::P1,
            fact: acc.clone(),
        });
    }
    debug_assert!(matches!(&acc, Fact::Related(_, _, y) if y.point == Some(l0)));
    // strip the base point
    let stripped = Fact::Related(
        FactRel::Strict,
        Expr::zero(m).with_bs(&acc_counts),
        Expr::zero(m),
    );
    steps.push(TraceStep {
        rule: RuleId::P3,
        fact: stripped,
    });
    let conclusion = conclude_single_summand(&mut steps, FactRel::Strict, &acc_counts, m);
    let trace = DerivationTrace {
        preamble: vec![format!(
            "comparison cycle {indices:?} among the rewritten dominators"
        )],
        hypotheses,
        steps,
        conclusion,
        multi_b: m > 1,
    };
    trace.replay(sys, g)?;
    Ok(trace)
}

/// Restricts a per-point/per-summand system to the rows of one summand,
/// yielding a single-summand dominated-side system.
pub fn project_s5(sys: &SystemInstance, l: usize) -> Result<SystemInstance> {
    if sys.kind != SystemKind::S5 {
        return Err(Error::NotApplicable(
            "projection applies to multi-summand dominated systems".into(),
        ));
    }
    if l < 1 || l > sys.bs.len() {
        return Err(Error::IndexOutOfRange(format!(
            "summand index {l} outside 1..={}",
            sys.bs.len()
        )));
    }
    let dominated = sys
        .dominated
        .iter()
        .filter(|r| r.b == l - 1)
        .map(|r| DominatedRow { b: 0, ..r.clone() })
        .collect();
    Ok(SystemInstance {
        kind: SystemKind::S4,
        points: sys.points.clone(),
        bs: vec![sys.bs[l - 1].clone()],
        k: 0,
        equations: Vec::new(),
        comparisons: Vec::new(),
        dominated,
    })
}

/// Dominated-side argument: chain the rows along a cycle of the dominator
/// map into a self-comparison `a^u X (a^u + q b)`, strip the base point,
/// and extract `0_G X b`.
pub fn derive_dominated_cycle(sys: &SystemInstance, g: &GroupContext) -> Result<DerivationTrace> {
    let (working, mut preamble) = match sys.kind {
        SystemKind::S4 | SystemKind::Mixed => (sys.clone(), Vec::new()),
        SystemKind::S5 => {
            let l = sys.bs.len();
            (
                project_s5(sys, l)?,
                vec![format!("restricted to the rows of summand {l}")],
            )
        }
        _ => {
            return Err(Error::NotApplicable(
                "dominated-cycle derivation applies to dominated-side systems".into(),
            ))
        }
    };
    let sys = &working;
    let n = sys.n();
    let m = sys.bs.len();
    let map = IndexMap::new((1..=n).map(|j| sys.dominated_row_for(j).left).collect())?;
    let cycle = find_index_cycle(&map, 1)?;
    let indices = cycle.indices;
    let r = indices.len();
    preamble.push(format!(
        "dominator cycle {indices:?} of length {r} among the shifted points"
    ));

    let row_fact = |point: usize| -> (FactRel, Fact) {
        let row = sys.dominated_row_for(point);
        let rel = match row.rel {
            RowRel::Strict => FactRel::Strict,
            RowRel::Equal => FactRel::Equal,
        };
        (
            rel,
            Fact::Related(
                rel,
                Expr::of_point(row.left, m),
                Expr::of_point(row.point, m).with_bs(&unit_counts(row.b, m)),
            ),
        )
    };
    let mut hypotheses: Vec<Fact> = indices.iter().map(|&p| row_fact(p).1).collect();
    hypotheses.extend(incomparability_hypotheses(m));

    let mut steps = Vec::new();
    let l0 = indices[0];
    let (mut acc_rel, acc0) = row_fact(indices[r - 1]); // a^{l0} X (a^{l_{r-1}} + b)
    let mut acc = acc0;
    let mut c: u64 = 1;
    for t in (0..r.saturating_sub(1)).rev() {
        let lt = indices[t];
        let lt1 = indices[(t + 1) % r];
        let (row_rel, _) = row_fact(lt);
        // shift this row by the accumulated summand count, then chain
        let shifted = Fact::Related(
            row_rel,
            Expr::of_point(lt1, m).with_bs(&[c]),
            Expr::of_point(lt, m).with_bs(&[c + 1]),
        );
        steps.push(TraceStep {
            rule: RuleId::P3,
            fact: shifted,
        });
        c = c.checked_add(1).ok_or(Error::Overflow("cycle multiplicity"))?;
        if row_rel == FactRel::Strict {
            acc_rel = FactRel::Strict;
        } else if acc_rel != FactRel::Strict {
            acc_rel = FactRel::Equal;
        }
        acc = Fact::Related(
            acc_rel,
            Expr::of_point(l0, m),
            Expr::of_point(lt, m).with_bs(&[c]),
        );
        steps.push(TraceStep {
            rule: RuleId::P1,
            fact: acc.clone(),
        });
    }
    debug_assert!(matches!(&acc, Fact::Related(_, x, _) if x.point == Some(l0)));
    // strip the base point
    let stripped = Fact::Related(acc_rel, Expr::zero(m), Expr::zero(m).with_bs(&[c]));
    steps.push(TraceStep {
        rule: RuleId::P3,
        fact: stripped,
    });
    let conclusion = Fact::Related(acc_rel, Expr::zero(m), Expr::b_unit(0, m));
    steps.push(TraceStep {
        rule: RuleId::P5,
        fact: conclusion.clone(),
    });
    let trace = DerivationTrace {
        preamble,
        hypotheses,
        steps,
        conclusion,
        multi_b: false,
    };
    trace.replay(sys, g)?;
    Ok(trace)
}

/// Builds the mixed dominated-side system induced by an instance with
/// summand set `{identity, b}`: for each point whose shift leaves `A`, a
/// strict dominator row; for the others, an equality row. Also returns the
/// indices whose shifts leave `A`.
pub fn mixed_from_instance(
    a: &FiniteSet,
    b: &GroupElement,
    g: &GroupContext,
    rel: &RelationOracle,
) -> Result<(SystemInstance, Vec<usize>)> {
    if a.is_empty() {
        return Err(Error::EmptyOperand("base set".into()));
    }
    let points: Vec<GroupElement> = a.iter().cloned().collect();
    let n = points.len();
    let mut rows = Vec::new();
    let mut leavers = Vec::new();
    for j in 1..=n {
        let shifted = g.combine(&points[j - 1], b)?;
        let stays = points.iter().position(|p| *p == shifted);
        match stays {
            Some(i0) => {
                let i = i0 + 1;
                if i == j {
                    return Err(Error::NotApplicable(
                        "a point is fixed by the shift; the summand composes to the identity"
                            .into(),
                    ));
                }
                rows.push((i, j, RowRel::Equal));
            }
            None => {
                leavers.push(j);
                let mut dominator = None;
                for (i0, p) in points.iter().enumerate() {
                    if i0 + 1 != j && rel.strictly(p, &shifted)? {
                        dominator = Some(i0 + 1);
                        break;
                    }
                }
                let Some(i) = dominator else {
                    return Err(Error::NotApplicable(format!(
                        "shifted point {shifted} is undominated within the base set"
                    )));
                };
                rows.push((i, j, RowRel::Strict));
            }
        }
    }
    let sys = SystemInstance::mixed(g, points, b.clone(), rows)?;
    Ok((sys, leavers))
}

/// Outcome of connecting an oracle-level failure to the proof machinery.
#[derive(Debug, Clone)]
pub enum BridgeOutcome {
    /// The efficient sets differ; the canonical least element of their
    /// symmetric difference certifies it.
    Witness(GroupElement),
    /// The efficient sets agree, so the induced mixed system is fully
    /// constructible and collapses to a contradiction with the assumed
    /// incomparability.
    Derivation(DerivationTrace),
}

/// For an instance with summand set `{identity, b}`: either exhibit an
/// element distinguishing the efficient sets, or derive the contradiction
/// showing the agreement is impossible under the audited properties.
pub fn bridge(
    a: &FiniteSet,
    b: &GroupElement,
    g: &GroupContext,
    rel: &RelationOracle,
) -> Result<BridgeOutcome> {
    let bset = FiniteSet::from_vec(vec![g.identity(), b.clone()]);
    let sum = minkowski_sum(a, &bset, g)?;
    let e_a = efficient_set(a, rel)?.efficient;
    let e_sum = efficient_set(&sum, rel)?.efficient;
    if e_a != e_sum {
        let witness = e_a
            .iter()
            .find(|x| !e_sum.contains(x))
            .or_else(|| e_sum.iter().find(|x| !e_a.contains(x)))
            .cloned()
            .expect("sets differ");
        return Ok(BridgeOutcome::Witness(witness));
    }
    let (sys, leavers) = mixed_from_instance(a, b, g, rel)?;
    let mut trace = derive_dominated_cycle(&sys, g)?;
    trace.preamble.insert(
        0,
        format!("points whose shift leaves the base set: {leavers:?}"),
    );
    Ok(BridgeOutcome::Derivation(trace))
}

//! Instance file parsing and validation. Files are JSON with a `format`
//! version, a group descriptor, a relation descriptor, the element lists
//! and optional audit/system sections; element encodings depend on the
//! group kind.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use effsum_core::{
    AuditConfig, CayleyTable, FiniteSet, GroupContext, GroupElement, RelationOracle, RowRel,
    SystemInstance,
};

/// Input-layer failures, split so the binary can map them to exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] effsum_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    IntVec { dim: usize },
    Perm { n: usize },
    CycInt { modulus: u64 },
    FinSet,
    Table { table: Vec<Vec<usize>> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelationSpec {
    ProductOrder,
    FixedPoints,
    Equality,
    Superset,
    ExplicitMatrix { matrix: Vec<Vec<bool>> },
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct AuditSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_multiplicity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_combination: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_limit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repetition_budget: Option<usize>,
}

/// Serialized equation/comparison system, decoded against the group kind.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemSpec {
    pub kind: String,
    pub points: Vec<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bs: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i_table: Option<Vec<Vec<usize>>>,
    /// Mixed rows as `[left, point, "P"|"="]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<(usize, usize, String)>>,
}

/// On-disk shape of an instance file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: GroupSpec,
    pub relation: RelationSpec,
    #[serde(rename = "A")]
    pub a: Vec<Value>,
    #[serde(rename = "B", default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<Value>,
    #[serde(rename = "B_list", default, skip_serializing_if = "Option::is_none")]
    pub b_list: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemSpec>,
}

/// A fully decoded and validated instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: Option<String>,
    pub group: GroupContext,
    pub relation: RelationOracle,
    pub a: FiniteSet,
    /// One or more summand sets; more than one means the effective B is
    /// their composition.
    pub b_list: Vec<FiniteSet>,
    pub audit: AuditSpec,
    pub system: Option<SystemInstance>,
    /// Non-fatal notes (e.g. duplicate elements that were collapsed).
    pub warnings: Vec<String>,
}

impl Instance {
    pub fn audit_config(&self) -> AuditConfig {
        let b = self.b_list.first().cloned().unwrap_or_else(FiniteSet::empty);
        let mut cfg = AuditConfig::defaults_for(&self.a, &b);
        if let Some(d) = self.audit.depth {
            cfg.depth = d;
        }
        if let Some(c) = self.audit.cap {
            cfg.cap = c;
        }
        if let Some(m) = self.audit.max_multiplicity {
            cfg.max_multiplicity = m;
        }
        if self.audit.max_combination.is_some() {
            cfg.max_combination = self.audit.max_combination;
        }
        if let Some(s) = self.audit.scan_limit {
            cfg.scan_limit = s;
        }
        if let Some(r) = self.audit.repetition_budget {
            cfg.repetition_budget = r;
        }
        cfg
    }
}

pub fn decode_group(spec: &GroupSpec) -> CliResult<GroupContext> {
    Ok(match spec {
        GroupSpec::IntVec { dim } => {
            if *dim == 0 {
                return Err(CliError::Validation("vector dimension must be >= 1".into()));
            }
            GroupContext::IntVec { dim: *dim }
        }
        GroupSpec::Perm { n } => {
            if *n == 0 {
                return Err(CliError::Validation("permutation degree must be >= 1".into()));
            }
            GroupContext::Perm { n: *n }
        }
        GroupSpec::CycInt { modulus } => {
            if *modulus == 0 {
                return Err(CliError::Validation("modulus must be >= 1".into()));
            }
            GroupContext::CycInt { modulus: *modulus }
        }
        GroupSpec::FinSet => GroupContext::FinSet,
        GroupSpec::Table { table } => GroupContext::Table(
            CayleyTable::new(table.clone())
                .map_err(|e| CliError::Validation(format!("bad composition table: {e}")))?,
        ),
    })
}

pub fn decode_relation(spec: &RelationSpec) -> CliResult<RelationOracle> {
    Ok(match spec {
        RelationSpec::ProductOrder => RelationOracle::ProductOrder,
        RelationSpec::FixedPoints => RelationOracle::FixedPoints,
        RelationSpec::Equality => RelationOracle::Equality,
        RelationSpec::Superset => RelationOracle::Superset,
        RelationSpec::ExplicitMatrix { matrix } => RelationOracle::explicit(matrix.clone())
            .map_err(|e| CliError::Validation(format!("bad relation matrix: {e}")))?,
    })
}

/// Decodes one element against the group kind; see the file-format notes
/// in the README for the encodings.
pub fn decode_element(v: &Value, g: &GroupContext) -> CliResult<GroupElement> {
    let bad = |what: &str| CliError::Parse(format!("expected {what}, got {v}"));
    let elem = match g {
        GroupContext::IntVec { .. } => {
            let arr = v.as_array().ok_or_else(|| bad("an integer array"))?;
            let mut coords = Vec::with_capacity(arr.len());
            for c in arr {
                coords.push(c.as_i64().ok_or_else(|| bad("an integer array"))?);
            }
            GroupElement::IntVec(coords)
        }
        GroupContext::Perm { .. } => {
            let arr = v.as_array().ok_or_else(|| bad("an image array"))?;
            let mut images = Vec::with_capacity(arr.len());
            for c in arr {
                let x = c.as_u64().ok_or_else(|| bad("an image array"))?;
                images.push(x as usize);
            }
            GroupElement::Perm(images)
        }
        GroupContext::CycInt { .. } => {
            GroupElement::CycInt(v.as_u64().ok_or_else(|| bad("a residue"))?)
        }
        GroupContext::FinSet => {
            let arr = v.as_array().ok_or_else(|| bad("a member array"))?;
            let mut members = Vec::with_capacity(arr.len());
            for c in arr {
                members.push(c.as_u64().ok_or_else(|| bad("a member array"))?);
            }
            GroupElement::FinSet(members)
        }
        GroupContext::Table(_) => {
            GroupElement::TableIdx(v.as_u64().ok_or_else(|| bad("a table index"))? as usize)
        }
    };
    g.validate(&elem)
        .map_err(|e| CliError::Validation(e.to_string()))?;
    Ok(elem)
}

/// Encodes an element back into its file representation.
pub fn encode_element(e: &GroupElement) -> Value {
    match e {
        GroupElement::IntVec(cs) => Value::from(cs.clone()),
        GroupElement::Perm(images) => Value::from(images.clone()),
        GroupElement::CycInt(r) => Value::from(*r),
        GroupElement::FinSet(ms) => Value::from(ms.clone()),
        GroupElement::TableIdx(i) => Value::from(*i as u64),
    }
}

fn decode_set(
    label: &str,
    vals: &[Value],
    g: &GroupContext,
    warnings: &mut Vec<String>,
) -> CliResult<FiniteSet> {
    if vals.is_empty() {
        return Err(CliError::Validation(format!("{label} must be nonempty")));
    }
    let mut elems = Vec::with_capacity(vals.len());
    for v in vals {
        elems.push(decode_element(v, g)?);
    }
    let raw = elems.len();
    let distinct: BTreeSet<&GroupElement> = elems.iter().collect();
    if distinct.len() != raw {
        warnings.push(format!(
            "{label} contains {} duplicate element(s); collapsed to a set",
            raw - distinct.len()
        ));
    }
    Ok(FiniteSet::from_vec(elems))
}

fn decode_system(spec: &SystemSpec, g: &GroupContext) -> CliResult<SystemInstance> {
    let need = |o: Option<&Vec<usize>>, f: &str| -> CliResult<Vec<usize>> {
        o.cloned()
            .ok_or_else(|| CliError::Parse(format!("system is missing field `{f}`")))
    };
    let points = spec
        .points
        .iter()
        .map(|v| decode_element(v, g))
        .collect::<CliResult<Vec<_>>>()?;
    let single_b = || -> CliResult<GroupElement> {
        let v = spec
            .b
            .as_ref()
            .ok_or_else(|| CliError::Parse("system is missing field `b`".into()))?;
        decode_element(v, g)
    };
    let multi_b = || -> CliResult<Vec<GroupElement>> {
        let vs = spec
            .bs
            .as_ref()
            .ok_or_else(|| CliError::Parse("system is missing field `bs`".into()))?;
        vs.iter().map(|v| decode_element(v, g)).collect()
    };
    let k = || -> CliResult<usize> {
        spec.k
            .ok_or_else(|| CliError::Parse("system is missing field `k`".into()))
    };
    let sys = match spec.kind.as_str() {
        "S0" => SystemInstance::s0(g, points, single_b()?, need(spec.j.as_ref(), "j")?),
        "S3" => SystemInstance::s3(
            g,
            points,
            multi_b()?,
            need(spec.j.as_ref(), "j")?,
            need(spec.l.as_ref(), "l")?,
        ),
        "S1" => SystemInstance::s1(
            g,
            points,
            single_b()?,
            k()?,
            need(spec.j.as_ref(), "j")?,
            need(spec.i.as_ref(), "i")?,
        ),
        "S2" => SystemInstance::s2(
            g,
            points,
            multi_b()?,
            k()?,
            need(spec.j.as_ref(), "j")?,
            need(spec.s.as_ref(), "s")?,
            need(spec.i.as_ref(), "i")?,
        ),
        "S4" => SystemInstance::s4(g, points, single_b()?, need(spec.i.as_ref(), "i")?),
        "S5" => {
            let tbl = spec
                .i_table
                .clone()
                .ok_or_else(|| CliError::Parse("system is missing field `i_table`".into()))?;
            SystemInstance::s5(g, points, multi_b()?, tbl)
        }
        "MIXED" => {
            let rows = spec
                .rows
                .clone()
                .ok_or_else(|| CliError::Parse("system is missing field `rows`".into()))?;
            let mut decoded = Vec::with_capacity(rows.len());
            for (left, point, rel) in rows {
                let rel = match rel.as_str() {
                    "P" => RowRel::Strict,
                    "=" => RowRel::Equal,
                    other => {
                        return Err(CliError::Parse(format!(
                            "row relation must be \"P\" or \"=\", got {other:?}"
                        )))
                    }
                };
                decoded.push((left, point, rel));
            }
            SystemInstance::mixed(g, points, single_b()?, decoded)
        }
        other => {
            return Err(CliError::Parse(format!("unknown system kind {other:?}")));
        }
    };
    sys.map_err(|e| CliError::Validation(format!("bad system: {e}")))
}

pub fn parse_instance_str(text: &str) -> CliResult<Instance> {
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if file.format != FORMAT_VERSION {
        return Err(CliError::Validation(format!(
            "unsupported format version {} (expected {FORMAT_VERSION})",
            file.format
        )));
    }
    let group = decode_group(&file.group)?;
    let relation = decode_relation(&file.relation)?;
    let mut warnings = Vec::new();
    let a = decode_set("A", &file.a, &group, &mut warnings)?;
    let b_list = match &file.b_list {
        Some(lists) => {
            if lists.is_empty() {
                return Err(CliError::Validation("B_list must be nonempty".into()));
            }
            lists
                .iter()
                .enumerate()
                .map(|(i, vals)| decode_set(&format!("B_list[{i}]"), vals, &group, &mut warnings))
                .collect::<CliResult<Vec<_>>>()?
        }
        None => vec![decode_set("B", &file.b, &group, &mut warnings)?],
    };
    // the relation must be able to compare elements of this carrier
    if let RelationOracle::ExplicitMatrix(m) = &relation {
        if let GroupContext::Table(t) = &group {
            if t.order() != m.len() {
                return Err(CliError::Validation(format!(
                    "relation matrix is {}x{} but the carrier has {} elements",
                    m.len(),
                    m.len(),
                    t.order()
                )));
            }
        } else {
            return Err(CliError::Validation(
                "an explicit relation matrix requires a composition-table group".into(),
            ));
        }
    }
    let system = file
        .system
        .as_ref()
        .map(|s| decode_system(s, &group))
        .transpose()?;
    Ok(Instance {
        name: file.name,
        group,
        relation,
        a,
        b_list,
        audit: file.audit.unwrap_or_default(),
        system,
        warnings,
    })
}

pub fn parse_instance(path: &Path) -> CliResult<Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance_str(&text)
}

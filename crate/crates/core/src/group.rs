//! Group arithmetic for the built-in carriers, plus Minkowski sums of finite sets.
//!
//! Carriers: integer vectors under componentwise addition, the symmetric
//! group S_n under composition, integers modulo n, finite subsets of the
//! naturals under symmetric difference, and arbitrary finite groups given
//! by an exhaustively validated Cayley table.

use std::fmt;

use crate::error::{Error, Result};

/// A group element in one of the built-in encodings.
///
/// The derived `Ord` is the canonical element ordering used everywhere for
/// deterministic output and tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElement {
    /// Integer vector, componentwise addition.
    IntVec(Vec<i64>),
    /// Permutation of {1..n} in one-line notation: `image[i]` is the image of `i+1`.
    Perm(Vec<usize>),
    /// Residue modulo the context's modulus.
    CycInt(u64),
    /// Strictly increasing list of nonnegative integers; symmetric difference.
    FinSet(Vec<u64>),
    /// Index into a Cayley table.
    TableIdx(usize),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::IntVec(v) => {
                write!(f, "(")?;
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            GroupElement::Perm(img) => {
                write!(f, "[")?;
                for (i, c) in img.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
            GroupElement::CycInt(r) => write!(f, "[{r}]"),
            GroupElement::FinSet(s) => {
                write!(f, "{{")?;
                for (i, c) in s.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}")
            }
            GroupElement::TableIdx(i) => write!(f, "#{i}"),
        }
    }
}

/// An exhaustively validated finite group presented by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table, checking closure, identity, inverses and associativity
    /// over the whole carrier.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::EmptyOperand("cayley table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::CarrierMismatch(
                    "cayley table is not square over its carrier".into(),
                ));
            }
        }
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|x| table[e][x] == x && table[x][e] == x) {
                identity = Some(e);
                break;
            }
        }
        let identity = identity
            .ok_or_else(|| Error::CarrierMismatch("cayley table has no identity".into()))?;
        let mut inverse = vec![usize::MAX; n];
        for x in 0..n {
            match (0..n).find(|&y| table[x][y] == identity && table[y][x] == identity) {
                Some(y) => inverse[x] = y,
                None => {
                    return Err(Error::CarrierMismatch(format!(
                        "element {x} has no inverse"
                    )))
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::CarrierMismatch(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable {
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }
}

/// The carrier a computation runs in. Immutable and shareable across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupContext {
    IntVec { dim: usize },
    Perm { n: usize },
    CycInt { modulus: u64 },
    FinSet,
    Table(CayleyTable),
}

impl GroupContext {
    pub fn identity(&self) -> GroupElement {
        match self {
            GroupContext::IntVec { dim } => GroupElement::IntVec(vec![0; *dim]),
            GroupContext::Perm { n } => GroupElement::Perm((1..=*n).collect()),
            GroupContext::CycInt { .. } => GroupElement::CycInt(0),
            GroupContext::FinSet => GroupElement::FinSet(Vec::new()),
            GroupContext::Table(t) => GroupElement::TableIdx(t.identity_index()),
        }
    }

    /// Checks that `x` is a well-formed element of this carrier.
    pub fn validate(&self, x: &GroupElement) -> Result<()> {
        match (self, x) {
            (GroupContext::IntVec { dim }, GroupElement::IntVec(v)) if v.len() == *dim => Ok(()),
            (GroupContext::Perm { n }, GroupElement::Perm(img)) => {
                if img.len() != *n {
                    return Err(Error::CarrierMismatch(format!(
                        "permutation on {} points, carrier is S_{n}",
                        img.len()
                    )));
                }
                let mut seen = vec![false; *n];
                for &i in img {
                    if i == 0 || i > *n || seen[i - 1] {
                        return Err(Error::CarrierMismatch(format!(
                            "{x} is not a bijection of {{1..{n}}}"
                        )));
                    }
                    seen[i - 1] = true;
                }
                Ok(())
            }
            (GroupContext::CycInt { modulus }, GroupElement::CycInt(r)) if r < modulus => Ok(()),
            (GroupContext::FinSet, GroupElement::FinSet(s)) => {
                if s.windows(2).all(|w| w[0] < w[1]) {
                    Ok(())
                } else {
                    Err(Error::CarrierMismatch(format!(
                        "{x} is not strictly increasing"
                    )))
                }
            }
            (GroupContext::Table(t), GroupElement::TableIdx(i)) if *i < t.order() => Ok(()),
            _ => Err(Error::CarrierMismatch(format!(
                "{x} does not belong to this carrier"
            ))),
        }
    }

    /// Group composition. For permutations the left operand acts first,
    /// so that (12)+(123) = (13).
    pub fn combine(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.validate(x)?;
        self.validate(y)?;
        match (self, x, y) {
            (GroupContext::IntVec { .. }, GroupElement::IntVec(a), GroupElement::IntVec(b)) => {
                let mut out = Vec::with_capacity(a.len());
                for (u, v) in a.iter().zip(b) {
                    out.push(u.checked_add(*v).ok_or(Error::Overflow("combine"))?);
                }
                Ok(GroupElement::IntVec(out))
            }
            (GroupContext::Perm { n }, GroupElement::Perm(a), GroupElement::Perm(b)) => {
                // apply a, then b
                let img = (0..*n).map(|i| b[a[i] - 1]).collect();
                Ok(GroupElement::Perm(img))
            }
            (GroupContext::CycInt { modulus }, GroupElement::CycInt(a), GroupElement::CycInt(b)) => {
                Ok(GroupElement::CycInt((a + b) % modulus))
            }
            (GroupContext::FinSet, GroupElement::FinSet(a), GroupElement::FinSet(b)) => {
                // symmetric difference of two sorted lists
                let mut out = Vec::new();
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    match (a.get(i), b.get(j)) {
                        (Some(&u), Some(&v)) if u == v => {
                            i += 1;
                            j += 1;
                        }
                        (Some(&u), Some(&v)) if u < v => {
                            out.push(u);
                            i += 1;
                        }
                        (Some(_), Some(&v)) => {
                            out.push(v);
                            j += 1;
                        }
                        (Some(&u), None) => {
                            out.push(u);
                            i += 1;
                        }
                        (None, Some(&v)) => {
                            out.push(v);
                            j += 1;
                        }
                        (None, None) => unreachable!(),
                    }
                }
                Ok(GroupElement::FinSet(out))
            }
            (GroupContext::Table(t), GroupElement::TableIdx(a), GroupElement::TableIdx(b)) => {
                Ok(GroupElement::TableIdx(t.table[*a][*b]))
            }
            _ => unreachable!("validated above"),
        }
    }

    pub fn inverse(&self, x: &GroupElement) -> Result<GroupElement> {
        self.validate(x)?;
        match (self, x) {
            (GroupContext::IntVec { .. }, GroupElement::IntVec(a)) => Ok(GroupElement::IntVec(
                a.iter().map(|c| -c).collect(),
            )),
            (GroupContext::Perm { n }, GroupElement::Perm(img)) => {
                let mut inv = vec![0; *n];
                for (i, &p) in img.iter().enumerate() {
                    inv[p - 1] = i + 1;
                }
                Ok(GroupElement::Perm(inv))
            }
            (GroupContext::CycInt { modulus }, GroupElement::CycInt(r)) => {
                Ok(GroupElement::CycInt((modulus - r) % modulus))
            }
            (GroupContext::FinSet, s @ GroupElement::FinSet(_)) => Ok(s.clone()),
            (GroupContext::Table(t), GroupElement::TableIdx(i)) => {
                Ok(GroupElement::TableIdx(t.inverse[*i]))
            }
            _ => unreachable!("validated above"),
        }
    }

    /// Sum of `p` copies of `x`; `repeat(0, x)` is the identity.
    pub fn repeat(&self, p: u64, x: &GroupElement) -> Result<GroupElement> {
        self.validate(x)?;
        let mut acc = self.identity();
        for _ in 0..p {
            acc = self.combine(&acc, x)?;
        }
        Ok(acc)
    }
}

/// A deduplicated, canonically ordered collection of group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSet {
    elems: Vec<GroupElement>,
}

impl FiniteSet {
    pub fn empty() -> Self {
        FiniteSet { elems: Vec::new() }
    }

    /// Sorts and deduplicates eagerly.
    pub fn from_vec(mut elems: Vec<GroupElement>) -> Self {
        elems.sort();
        elems.dedup();
        FiniteSet { elems }
    }

    pub fn singleton(x: GroupElement) -> Self {
        FiniteSet { elems: vec![x] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupElement> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[GroupElement] {
        &self.elems
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut v = self.elems.clone();
        v.extend(other.elems.iter().cloned());
        FiniteSet::from_vec(v)
    }
}

impl fmt::Display for FiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl<'a> IntoIterator for &'a FiniteSet {
    type Item = &'a GroupElement;
    type IntoIter = std::slice::Iter<'a, GroupElement>;
    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

/// The Minkowski sum A + B = {a + b : a in A, b in B}, deduplicated and
/// canonically ordered.
pub fn minkowski_sum(a: &FiniteSet, b: &FiniteSet, g: &GroupContext) -> Result<FiniteSet> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyOperand("minkowski_sum operand".into()));
    }
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(g.combine(x, y)?);
        }
    }
    Ok(FiniteSet::from_vec(out))
}

/// Left fold of `minkowski_sum` over several summands.
pub fn minkowski_sum_many(a: &FiniteSet, bs: &[FiniteSet], g: &GroupContext) -> Result<FiniteSet> {
    let mut acc = a.clone();
    for b in bs {
        acc = minkowski_sum(&acc, b, g)?;
    }
    Ok(acc)
}

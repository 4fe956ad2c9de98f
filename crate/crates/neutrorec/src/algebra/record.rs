use serde::{Deserialize, Serialize};

use super::triple::{ComplementForm, Family, OpKind, Triple};
use crate::error::{Error, Result};

/// An ordered collection of named linguistic labels, each with a [`Triple`].
///
/// Label names are unique and there is at least one label.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(String, Triple)>", into = "Vec<(String, Triple)>")]
pub struct LabeledNSet {
    entries: Vec<(String, Triple)>,
}

impl LabeledNSet {
    pub fn new(entries: Vec<(String, Triple)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a labeled set needs at least one label"));
        }
        for (k, (name, _)) in entries.iter().enumerate() {
            if entries[..k].iter().any(|(n, _)| n == name) {
                return Err(Error::domain(format!("duplicate label `{name}`")));
            }
        }
        Ok(LabeledNSet { entries })
    }

    /// Convenience constructor from `(name, (t, i, f))` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, (f64, f64, f64))>) -> Result<Self> {
        let entries = pairs
            .into_iter()
            .map(|(n, (t, i, f))| Ok((n.into(), Triple::new(t, i, f)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    /// Label count `r`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        self.entries.iter().map(|(_, t)| *t)
    }

    pub fn entries(&self) -> &[(String, Triple)] {
        &self.entries
    }

    pub fn get(&self, label: &str) -> Option<Triple> {
        self.entries.iter().find(|(n, _)| n == label).map(|(_, t)| *t)
    }

    pub fn triple_at(&self, index: usize) -> Triple {
        self.entries[index].1
    }

    /// True when both sets carry the same labels in the same order.
    pub fn same_schema(&self, other: &LabeledNSet) -> bool {
        self.len() == other.len() && self.labels().zip(other.labels()).all(|(a, b)| a == b)
    }

    /// Concatenates several sets into one, e.g. all attributes of one slot.
    pub fn concat(parts: &[LabeledNSet]) -> Result<Self> {
        Self::new(parts.iter().flat_map(|p| p.entries.iter().cloned()).collect())
    }

    /// Renames every label to `prefix:label`.
    pub fn prefixed(&self, prefix: &str) -> LabeledNSet {
        LabeledNSet {
            entries: self.entries.iter().map(|(n, t)| (format!("{prefix}:{n}"), *t)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(Triple) -> Triple) -> LabeledNSet {
        LabeledNSet {
            entries: self.entries.iter().map(|(n, t)| (n.clone(), f(*t))).collect(),
        }
    }
}

impl TryFrom<Vec<(String, Triple)>> for LabeledNSet {
    type Error = Error;

    fn try_from(v: Vec<(String, Triple)>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<LabeledNSet> for Vec<(String, Triple)> {
    fn from(s: LabeledNSet) -> Self {
        s.entries
    }
}

/// One patient row: features `x`, symptoms `y` and one rating set per disease.
///
/// Query records (ratings unknown) have an empty `d`; see [`NrsRecord::query`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NrsRecord {
    pub x: LabeledNSet,
    pub y: LabeledNSet,
    pub d: Vec<LabeledNSet>,
}

impl NrsRecord {
    pub fn new(x: LabeledNSet, y: LabeledNSet, d: Vec<LabeledNSet>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::alignment("d", "a rated record needs at least one disease"));
        }
        Ok(NrsRecord { x, y, d })
    }

    /// A record whose disease ratings are unknown.
    pub fn query(x: LabeledNSet, y: LabeledNSet) -> Self {
        NrsRecord { x, y, d: Vec::new() }
    }

    pub fn is_query(&self) -> bool {
        self.d.is_empty()
    }

    pub fn map(&self, f: impl Fn(Triple) -> Triple + Copy) -> NrsRecord {
        NrsRecord {
            x: self.x.map(f),
            y: self.y.map(f),
            d: self.d.iter().map(|s| s.map(f)).collect(),
        }
    }
}

/// Lifts a triple operation to two labeled sets, aligning labels by the
/// operation's [`Family`].
pub fn combine_sets(kind: OpKind, a: &LabeledNSet, b: &LabeledNSet, slot: &str) -> Result<LabeledNSet> {
    let mut out = Vec::new();
    match kind.family() {
        Family::Join => {
            for (n, ta) in a.entries() {
                let tb = b.get(n).unwrap_or(Triple::BOTTOM);
                out.push((n.clone(), kind.apply(*ta, tb)?));
            }
            for (n, tb) in b.entries() {
                if a.get(n).is_none() {
                    out.push((n.clone(), kind.apply(Triple::BOTTOM, *tb)?));
                }
            }
        }
        Family::Meet => {
            for (n, ta) in a.entries() {
                if let Some(tb) = b.get(n) {
                    out.push((n.clone(), kind.apply(*ta, tb)?));
                }
            }
        }
        Family::Minus => {
            for (n, ta) in a.entries() {
                let t = match b.get(n) {
                    Some(tb) => kind.apply(*ta, tb)?,
                    None => *ta,
                };
                out.push((n.clone(), t));
            }
        }
        Family::Product => {
            for (na, ta) in a.entries() {
                for (nb, tb) in b.entries() {
                    out.push((format!("{na}×{nb}"), kind.apply(*ta, *tb)?));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::alignment(slot, format!("{} leaves no labels", kind.name())));
    }
    LabeledNSet::new(out).map_err(|e| Error::alignment(slot, e.to_string()))
}

/// Applies `kind` slot by slot to two records.
pub fn nrs_combine(kind: OpKind, a: &NrsRecord, b: &NrsRecord) -> Result<NrsRecord> {
    if a.d.len() != b.d.len() {
        return Err(Error::alignment(
            "d",
            format!("disease counts differ ({} vs {})", a.d.len(), b.d.len()),
        ));
    }
    let x = combine_sets(kind, &a.x, &b.x, "x")?;
    let y = combine_sets(kind, &a.y, &b.y, "y")?;
    let d = a
        .d
        .iter()
        .zip(&b.d)
        .enumerate()
        .map(|(l, (da, db))| combine_sets(kind, da, db, &format!("d[{l}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(NrsRecord { x, y, d })
}

/// Result of complementing a record against a universe.
#[derive(Debug, Clone, PartialEq)]
pub struct Complemented {
    /// The record with every triple complemented; labels unchanged.
    pub record: NrsRecord,
    /// Universe feature labels absent from the record.
    pub x_crisp: Vec<String>,
    /// Universe symptom labels absent from the record.
    pub y_crisp: Vec<String>,
}

/// Labels of `universe` not present in `part`, in universe order.
pub fn crisp_complement(part: &[String], universe: &[String]) -> Vec<String> {
    universe.iter().filter(|u| !part.contains(u)).cloned().collect()
}

fn check_within(part: &LabeledNSet, universe: &LabeledNSet, slot: &str) -> Result<()> {
    match part.labels().find(|n| universe.get(n).is_none()) {
        Some(n) => Err(Error::domain(format!("label `{n}` in slot `{slot}` is not in the universe"))),
        None => Ok(()),
    }
}

/// Complements the crisp parts relative to `universe` and every triple of `a`.
pub fn nrs_complement(a: &NrsRecord, universe: &NrsRecord, form: ComplementForm) -> Result<Complemented> {
    check_within(&a.x, &universe.x, "x")?;
    check_within(&a.y, &universe.y, "y")?;
    let names = |s: &LabeledNSet| s.labels().map(str::to_owned).collect::<Vec<_>>();
    Ok(Complemented {
        record: a.map(|t| t.complement_with(form)),
        x_crisp: crisp_complement(&names(&a.x), &names(&universe.x)),
        y_crisp: crisp_complement(&names(&a.y), &names(&universe.y)),
    })
}

//! Verdict reports produced by every identity check.
//!
//! A [`CheckReport`] is a small tree: leaf reports correspond to one identity
//! scanned over all basis tuples, aggregate reports combine sub-checks and
//! pass iff every sub-check passes. A failing leaf carries a [`Witness`]: the
//! lexicographically first violating basis tuple together with both evaluated
//! sides of the identity.

use crate::graded::{LinearMap, SuperSpace, Tuples, Vector};
use crate::scalar::{format_scalar, Scalar};
use indexmap::IndexMap;
use num::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// Outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Counterexample attached to a failing leaf check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Labels of the basis elements in the violating tuple.
    pub tuple: Vec<String>,
    /// Basis indices of the violating tuple (0-based, per slot).
    pub indices: Vec<usize>,
    /// Coordinate labels of the two sides; empty when the sides are scalars.
    pub coordinates: Vec<String>,
    /// Left-hand side, one coefficient per coordinate (one value for scalars).
    pub lhs: Vec<Scalar>,
    /// Right-hand side, same layout as `lhs`.
    pub rhs: Vec<Scalar>,
}

impl Witness {
    /// Witness whose sides live in a graded space.
    pub fn vectors(
        tuple: Vec<String>,
        indices: Vec<usize>,
        space: &SuperSpace,
        lhs: &Vector,
        rhs: &Vector,
    ) -> Self {
        Witness {
            tuple,
            indices,
            coordinates: space.labels().to_vec(),
            lhs: lhs.coeffs().to_vec(),
            rhs: rhs.coeffs().to_vec(),
        }
    }

    /// Witness whose sides are scalars.
    pub fn scalars(tuple: Vec<String>, indices: Vec<usize>, lhs: Scalar, rhs: Scalar) -> Self {
        Witness {
            tuple,
            indices,
            coordinates: Vec::new(),
            lhs: vec![lhs],
            rhs: vec![rhs],
        }
    }

    /// Witness without evaluated sides (structural failures such as a
    /// non-homogeneous entry); both sides are recorded as given.
    pub fn at(tuple: Vec<String>, indices: Vec<usize>) -> Self {
        Witness {
            tuple,
            indices,
            coordinates: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Human-readable rendering of the left-hand side.
    pub fn lhs_text(&self) -> String {
        render_side(&self.coordinates, &self.lhs)
    }

    /// Human-readable rendering of the right-hand side.
    pub fn rhs_text(&self) -> String {
        render_side(&self.coordinates, &self.rhs)
    }

    /// One-line description `(e1, e2): lhs = …, rhs = …`.
    pub fn describe(&self) -> String {
        let tuple = format!("({})", self.tuple.join(", "));
        if self.lhs.is_empty() && self.rhs.is_empty() {
            tuple
        } else {
            format!("{tuple}: lhs = {}, rhs = {}", self.lhs_text(), self.rhs_text())
        }
    }

    fn side_map(&self, side: &[Scalar]) -> IndexMap<String, String> {
        if self.coordinates.is_empty() {
            return side
                .iter()
                .map(|v| ("value".to_string(), format_scalar(v)))
                .collect();
        }
        self.coordinates
            .iter()
            .zip(side)
            .filter(|(_, v)| !v.is_zero())
            .map(|(l, v)| (l.clone(), format_scalar(v)))
            .collect()
    }
}

fn render_side(coords: &[String], side: &[Scalar]) -> String {
    if coords.is_empty() {
        return side.first().map(format_scalar).unwrap_or_default();
    }
    let mut out = String::new();
    for (label, c) in coords.iter().zip(side) {
        if c.is_zero() {
            continue;
        }
        let magnitude = c.abs();
        let term = if magnitude.is_one() {
            label.clone()
        } else {
            format!("{}*{}", format_scalar(&magnitude), label)
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Witness", 3)?;
        st.serialize_field("tuple", &self.tuple)?;
        st.serialize_field("lhs", &self.side_map(&self.lhs))?;
        st.serialize_field("rhs", &self.side_map(&self.rhs))?;
        st.end()
    }
}

/// Result of a check: verdict, optional witness, optional note, sub-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(rename = "sub-checks", skip_serializing_if = "Vec::is_empty")]
    pub sub_checks: Vec<CheckReport>,
}

impl CheckReport {
    /// A passing leaf report.
    pub fn pass(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Pass,
            witness: None,
            note: None,
            sub_checks: Vec::new(),
        }
    }

    /// A failing leaf report with its witness.
    pub fn fail(check: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            note: None,
            sub_checks: Vec::new(),
        }
    }

    /// A failing report that has no witness tuple, only an explanation.
    pub fn fail_unwitnessed(check: impl Into<String>, note: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Fail,
            witness: None,
            note: Some(note.into()),
            sub_checks: Vec::new(),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(check: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(check),
            Some(w) => Self::fail(check, w),
        }
    }

    /// Aggregate report: passes iff every sub-check passes. The note names
    /// the first failing sub-check.
    pub fn aggregate(check: impl Into<String>, sub_checks: Vec<CheckReport>) -> Self {
        let first_failing = sub_checks.iter().find(|r| !r.passed()).map(|r| r.check.clone());
        CheckReport {
            check: check.into(),
            verdict: if first_failing.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            witness: None,
            note: first_failing.map(|name| format!("first failing sub-check: {name}")),
            sub_checks,
        }
    }

    /// Attaches an explanatory note.
    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// The first failing leaf in depth-first order (or `self` if it fails
    /// without failing sub-checks). `None` when the report passes.
    pub fn first_failure(&self) -> Option<&CheckReport> {
        if self.passed() {
            return None;
        }
        self.sub_checks
            .iter()
            .find_map(|r| r.first_failure())
            .or(Some(self))
    }

    /// Depth-first search for a (sub-)report by check name.
    pub fn find(&self, check: &str) -> Option<&CheckReport> {
        if self.check == check {
            return Some(self);
        }
        self.sub_checks.iter().find_map(|r| r.find(check))
    }

    /// Witness of the first failing leaf, if any.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.first_failure().and_then(|r| r.witness.as_ref())
    }

    /// Indented multi-line rendering of the report tree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{pad}{tag} {}", self.check));
        if let Some(w) = &self.witness {
            out.push_str(&format!(" at {}", w.describe()));
        }
        out.push('\n');
        if let Some(note) = &self.note {
            out.push_str(&format!("{pad}  note: {note}\n"));
        }
        for sub in &self.sub_checks {
            sub.render_into(out, depth + 1);
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render().trim_end())
    }
}

fn tuple_labels(slots: &[&SuperSpace], tuple: &[usize]) -> Vec<String> {
    slots
        .iter()
        .zip(tuple)
        .map(|(s, &i)| s.label(i).to_string())
        .collect()
}

/// Scans every basis tuple of `slots` in lexicographic order and compares the
/// two vector sides returned by `sides`; the first mismatch becomes the
/// witness.
pub(crate) fn scan_vectors<F>(
    check: &str,
    slots: &[&SuperSpace],
    codomain: &SuperSpace,
    mut sides: F,
) -> CheckReport
where
    F: FnMut(&[usize]) -> (Vector, Vector),
{
    let radices: Vec<usize> = slots.iter().map(|s| s.dim()).collect();
    for tuple in Tuples::new(radices) {
        let (lhs, rhs) = sides(&tuple);
        if lhs != rhs {
            let labels = tuple_labels(slots, &tuple);
            return CheckReport::fail(check, Witness::vectors(labels, tuple, codomain, &lhs, &rhs));
        }
    }
    CheckReport::pass(check)
}

/// Like [`scan_vectors`] for scalar-valued identities.
pub(crate) fn scan_scalars<F>(check: &str, slots: &[&SuperSpace], mut sides: F) -> CheckReport
where
    F: FnMut(&[usize]) -> (Scalar, Scalar),
{
    let radices: Vec<usize> = slots.iter().map(|s| s.dim()).collect();
    for tuple in Tuples::new(radices) {
        let (lhs, rhs) = sides(&tuple);
        if lhs != rhs {
            let labels = tuple_labels(slots, &tuple);
            return CheckReport::fail(check, Witness::scalars(labels, tuple, lhs, rhs));
        }
    }
    CheckReport::pass(check)
}

/// Scans operator identities: for each basis tuple of `slots`, `sides`
/// returns two endomorphisms of `module`; they are compared column by column
/// so that the witness tuple ends with the module basis vector on which the
/// operators differ.
pub(crate) fn scan_operators<F>(
    check: &str,
    slots: &[&SuperSpace],
    module: &SuperSpace,
    mut sides: F,
) -> CheckReport
where
    F: FnMut(&[usize]) -> (LinearMap, LinearMap),
{
    let radices: Vec<usize> = slots.iter().map(|s| s.dim()).collect();
    for tuple in Tuples::new(radices) {
        let (lhs, rhs) = sides(&tuple);
        if lhs == rhs {
            continue;
        }
        for v in 0..module.dim() {
            let (l, r) = (lhs.image(v), rhs.image(v));
            if l != r {
                let mut labels = tuple_labels(slots, &tuple);
                labels.push(module.label(v).to_string());
                let mut indices = tuple.clone();
                indices.push(v);
                return CheckReport::fail(check, Witness::vectors(labels, indices, module, &l, &r));
            }
        }
    }
    CheckReport::pass(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn side_rendering() {
        let coords = vec!["e1".to_string(), "e2".to_string()];
        assert_eq!(render_side(&coords, &[int(2), int(-1)]), "2*e1 - e2");
        assert_eq!(render_side(&coords, &[int(0), int(0)]), "0");
        assert_eq!(render_side(&coords, &[int(-1), int(0)]), "-e1");
        assert_eq!(render_side(&[], &[int(3)]), "3");
    }

    #[test]
    fn aggregate_names_first_failure() {
        let w = Witness::scalars(vec!["e1".into()], vec![0], int(1), int(2));
        let report = CheckReport::aggregate(
            "all",
            vec![
                CheckReport::pass("a"),
                CheckReport::fail("b", w.clone()),
                CheckReport::fail("c", w),
            ],
        );
        assert!(!report.passed());
        assert_eq!(report.first_failure().unwrap().check, "b");
        assert_eq!(report.note.as_deref(), Some("first failing sub-check: b"));
        assert!(report.find("c").is_some());
    }
}

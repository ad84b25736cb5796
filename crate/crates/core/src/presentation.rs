//! Relation datasets for the two presentations of `SB3` and a checker that
//! runs them through any of the equality deciders.
//!
//! The classical set uses `τ1, τ2`; `τ2` is replaced by
//! `σ1 σ2 τ1 σ2^{-1} σ1^{-1}` before storage, so every relation is a pair of
//! words over `σ1^{±1}, σ2^{±1}, τ1`. Relations that need four strands are
//! vacuous and absent.

use serde::Serialize;

use crate::solver::{decide, Method, SolverError};
use crate::words::{Mode, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationSetName {
    /// Artin relations plus the singular ones, with `τ2` eliminated.
    Classical,
    /// Four relations in `σ1, σ2, τ1`.
    Reduced,
}

impl RelationSetName {
    pub fn as_str(self) -> &'static str {
        match self {
            RelationSetName::Classical => "classical",
            RelationSetName::Reduced => "reduced",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub label: &'static str,
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug)]
pub struct RelationSet {
    pub name: RelationSetName,
    pub relations: Vec<Relation>,
}

const TAU2: &str = "s1 s2 t1 s2^-1 s1^-1";

fn rel(label: &'static str, lhs: &str, rhs: &str) -> Relation {
    let parse = |s: &str| Word::parse(&s.replace("t2", TAU2), Mode::Monoid).expect("static relation");
    Relation { label, lhs: parse(lhs), rhs: parse(rhs) }
}

pub fn relation_set(name: RelationSetName) -> RelationSet {
    let relations = match name {
        RelationSetName::Reduced => vec![
            rel("inverse s1", "s1 s1^-1", ""),
            rel("inverse s2", "s2 s2^-1", ""),
            rel("braid", "s1 s2 s1", "s2 s1 s2"),
            rel("tau commutes with full twist", "t1 s2 s1 s2 s1 s2 s1", "s2 s1 s2 s1 s2 s1 t1"),
            rel("tau commutes with s1", "s1 t1", "t1 s1"),
        ],
        RelationSetName::Classical => vec![
            rel("inverse s1", "s1 s1^-1", ""),
            rel("inverse s2", "s2 s2^-1", ""),
            rel("braid", "s1 s2 s1", "s2 s1 s2"),
            rel("t2 s1 s2 = s1 s2 t1", "t2 s1 s2", "s1 s2 t1"),
            rel("s2 s1 t2 = t1 s2 s1", "s2 s1 t2", "t1 s2 s1"),
            rel("s1 t1 = t1 s1", "s1 t1", "t1 s1"),
            rel("s2 t2 = t2 s2", "s2 t2", "t2 s2"),
        ],
    };
    RelationSet { name, relations }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationFailure {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub set: RelationSetName,
    pub method: Method,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_relations(name: RelationSetName, method: Method) -> RelationReport {
    let set = relation_set(name);
    let mut failures = Vec::new();
    for r in &set.relations {
        let outcome: Result<bool, SolverError> = decide(method, &r.lhs, &r.rhs).map(|v| v.equal);
        let error = match outcome {
            Ok(true) => continue,
            Ok(false) => None,
            Err(e) => Some(e.to_string()),
        };
        failures.push(RelationFailure {
            label: r.label.to_string(),
            lhs: r.lhs.to_string(),
            rhs: r.rhs.to_string(),
            error,
        });
    }
    RelationReport { set: name, method, checked: set.relations.len(), failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, Mode::Monoid).unwrap()
    }

    fn contains(set: &RelationSet, lhs: &str, rhs: &str) -> bool {
        set.relations.iter().any(|r| r.lhs == w(lhs) && r.rhs == w(rhs))
    }

    #[test]
    fn dataset_contents() {
        let reduced = relation_set(RelationSetName::Reduced);
        assert!(contains(&reduced, "s1 t1", "t1 s1"));
        assert_eq!(reduced.relations.len(), 5);

        let classical = relation_set(RelationSetName::Classical);
        assert!(contains(
            &classical,
            "s2 s1 s2 t1 s2^-1 s1^-1",
            "s1 s2 t1 s2^-1 s1^-1 s2"
        ));
        assert!(contains(&classical, "s2 s1 s1 s2 t1 s2^-1 s1^-1", "t1 s2 s1"));
        assert!(classical
            .relations
            .iter()
            .all(|r| r.lhs.mode() == Mode::Monoid && r.rhs.mode() == Mode::Monoid));
    }

    #[test]
    fn all_sets_pass_all_methods() {
        for name in [RelationSetName::Reduced, RelationSetName::Classical] {
            for method in [Method::Burau, Method::Recursion, Method::Pinch] {
                let report = verify_relations(name, method);
                assert!(report.passed(), "{name:?} {method:?}: {:?}", report.failures);
            }
        }
    }

    /// A wrong relation must be reported.
    #[test]
    fn tau_does_not_commute_with_s2() {
        for method in [Method::Burau, Method::Recursion, Method::Pinch] {
            assert!(!decide(method, &w("s2 t1"), &w("t1 s2")).unwrap().equal);
        }
    }
}

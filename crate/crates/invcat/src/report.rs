//! The machine-readable report and its text summary.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::job::JobFile;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSeries {
    pub source: String,
    pub target: String,
    /// Invariant dimension in each degree `0..=max_degree`.
    pub dims: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub path: Vec<String>,
    pub degree: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessJson {
    /// `"certified"` or `"truncated"`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    /// A degree beyond which no generator exists, when one is known.
    pub degree_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PsiFailureJson {
    pub path: Vec<String>,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMismatchJson {
    pub source: String,
    pub target: String,
    pub degree: usize,
    pub invariant_dim: u64,
    pub free_count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessJson {
    pub holds: bool,
    pub verify_depth: usize,
    pub paths_checked: usize,
    pub psi_failure: Option<PsiFailureJson>,
    pub series_mismatch: Option<SeriesMismatchJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub rep_type: String,
    pub components: Vec<String>,
    pub finite_implies_tame: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantClassificationJson {
    #[serde(flatten)]
    pub classification: ClassificationJson,
    pub certified: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceJson {
    pub path: Vec<String>,
    pub schurian: usize,
    pub general: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleavingJson {
    pub holds: bool,
    pub direct_sum: bool,
    pub pairs_composed: usize,
    pub closure_violation: Option<[Vec<String>; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurianJson {
    pub agrees: bool,
    pub first_difference: Option<DifferenceJson>,
    pub unique_factorization: bool,
    pub factorization_failure: Option<Vec<String>>,
    pub cleaving: CleavingJson,
}

impl SchurianJson {
    pub fn holds(&self) -> bool {
        self.agrees && self.unique_factorization && self.cleaving.holds
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub job: JobFile,
    pub group_order: usize,
    pub hom_series: Vec<HomSeries>,
    pub generators: Vec<GeneratorJson>,
    pub completeness: CompletenessJson,
    pub freeness: FreenessJson,
    pub input_classification: ClassificationJson,
    pub invariant_classification: InvariantClassificationJson,
    pub schurian: Option<SchurianJson>,
    pub timing_ms: u64,
}

impl Report {
    /// True when some checked property failed.
    pub fn falsified(&self) -> bool {
        !self.freeness.holds || self.schurian.as_ref().is_some_and(|s| !s.holds())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        let opts = &self.job.options;
        let _ = writeln!(o, "group order: {}", self.group_order);
        let _ = writeln!(o, "max degree: {}", opts.max_degree.unwrap_or_default());
        let _ = writeln!(o, "generators ({}):", self.generators.len());
        for g in &self.generators {
            let _ = writeln!(
                o,
                "  {} [deg {}, mult {}]",
                g.path.join(" → "),
                g.degree,
                g.multiplicity
            );
        }
        let c = &self.completeness;
        let _ = match (&c.reason, c.degree_bound) {
            (Some(r), _) => writeln!(o, "completeness: {} ({r})", c.status),
            (None, Some(b)) => writeln!(o, "completeness: {} (generators may reach degree {b})", c.status),
            (None, None) => writeln!(o, "completeness: {} (no degree bound known)", c.status),
        };
        let f = &self.freeness;
        let _ = writeln!(
            o,
            "freeness: {} ({} paths checked to degree {})",
            if f.holds { "holds" } else { "FAILS" },
            f.paths_checked,
            f.verify_depth
        );
        if let Some(p) = &f.psi_failure {
            let _ = writeln!(o, "  psi fails on {}: {}", p.path.join(" → "), p.witness);
        }
        if let Some(m) = &f.series_mismatch {
            let _ = writeln!(
                o,
                "  series mismatch {} -> {} in degree {}: invariants {}, free {}",
                m.source, m.target, m.degree, m.invariant_dim, m.free_count
            );
        }
        let ic = &self.input_classification;
        let _ = writeln!(o, "input: {} [{}]", ic.rep_type, ic.components.join(", "));
        let inv = &self.invariant_classification;
        let _ = writeln!(
            o,
            "invariants: {} [{}]{}",
            inv.classification.rep_type,
            inv.classification.components.join(", "),
            match &inv.note {
                Some(n) => format!(" ({n})"),
                None => " (certified)".into(),
            }
        );
        if let Some(s) = &self.schurian {
            let _ = writeln!(
                o,
                "schurian check: {}, factorization {}, cleaving {}",
                if s.agrees { "agrees" } else { "DISAGREES" },
                if s.unique_factorization { "unique" } else { "NOT UNIQUE" },
                if s.cleaving.holds { "holds" } else { "FAILS" }
            );
            if let Some(d) = &s.first_difference {
                let _ = writeln!(
                    o,
                    "  first difference at {}: schurian {}, general {}",
                    d.path.join(" → "),
                    d.schurian,
                    d.general
                );
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::{Job, Overrides};
    use crate::pipeline::compute;

    const SWAP: &str = r#"{"schema_version": 1, "field": {"kind": "prime", "p": 3},
        "quiver": {"vertices": ["x"], "arrows": [{"source": "x", "target": "x", "dim": 2}]},
        "action": {"generators": [{"name": "s", "matrices": {"x<-x": [["0","1"],["1","0"]]}}]},
        "options": {"max_degree": 4}}"#;

    fn swap_report() -> Report {
        compute(&Job::from_json(SWAP, &Overrides::default()).unwrap()).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let r = swap_report();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().ends_with("}\n"));
    }

    #[test]
    fn summary_lines() {
        let s = swap_report().summary();
        assert!(s.contains("group order: 2"), "{s}");
        assert!(s.contains("x → x → x [deg 2, mult 1]"), "{s}");
        assert!(s.contains("completeness: truncated (no degree bound known)"), "{s}");
        assert!(s.contains("(classification of the truncation only)"), "{s}");
    }

    #[test]
    fn falsified_tracks_failures() {
        let mut r = swap_report();
        assert!(!r.falsified());
        r.freeness.holds = false;
        assert!(r.falsified());
        r.freeness.holds = true;
        r.schurian = Some(SchurianJson {
            agrees: false,
            first_difference: None,
            unique_factorization: true,
            factorization_failure: None,
            cleaving: CleavingJson {
                holds: true,
                direct_sum: true,
                pairs_composed: 0,
                closure_violation: None,
            },
        });
        assert!(r.falsified());
    }
}

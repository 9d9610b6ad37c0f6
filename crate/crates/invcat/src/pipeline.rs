//! Runs a job through the core library over the job's field.

use std::collections::BTreeMap;
use std::time::Instant;

use invcat_core::action::{ActingGroup, ActionSpec, CharacterTable, GeneratorSpec};
use invcat_core::category::{
    build_invariant_quiver, verify_cleaving_schurian, verify_freeness, CertificateReason, Completeness, DegreeBound,
    InvariantQuiverReport,
};
use invcat_core::engine::{compute_profiles, schurian_generators, verify_unique_factorization, PsiWitness};
use invcat_core::field::{CyclotomicField, Field, FieldSpec, PrimeField, Rationals};
use invcat_core::linalg::Matrix;
use invcat_core::quiver::{Path, Quiver};
use invcat_core::reptype::{classify, classify_invariants, Classification};

use crate::job::{Job, SCHEMA_VERSION};
use crate::report::*;
use crate::InputError;

fn labels(quiver: &Quiver, path: &Path) -> Vec<String> {
    path.vertices().iter().map(|&v| quiver.label(v).to_string()).collect()
}

fn build_action<F: Field>(field: &F, job: &Job) -> ActionSpec<F::Elem> {
    let generators = job
        .generators
        .iter()
        .map(|g| GeneratorSpec {
            name: g.name.clone(),
            matrices: g
                .matrices
                .iter()
                .map(|(&key, rows)| {
                    let rows: Vec<Vec<F::Elem>> = rows
                        .iter()
                        .map(|r| r.iter().map(|x| field.parse(x).expect("validated entry")).collect())
                        .collect();
                    (key, Matrix::from_rows(rows.len(), rows).expect("validated shape"))
                })
                .collect(),
        })
        .collect();
    let mut spec = ActionSpec::new(generators);
    spec.group_cap = job.options.group_cap;
    spec
}

fn limit_error(e: invcat_core::Error) -> InputError {
    use invcat_core::action::ActionError;
    use invcat_core::quiver::QuiverError;
    use invcat_core::Error;
    let hint = match &e {
        Error::Action(ActionError::ClosureCapExceeded { .. }) => " (see --group-cap)",
        Error::Quiver(QuiverError::PathCapExceeded { .. }) => " (see --path-cap and --max-degree)",
        _ => "",
    };
    InputError::Computation(format!("{e}{hint}"))
}

fn classification_json(c: &Classification) -> ClassificationJson {
    ClassificationJson {
        rep_type: c.rep_type.to_string(),
        components: c.components.iter().map(ToString::to_string).collect(),
        finite_implies_tame: c.finite_implies_tame,
    }
}

pub fn classify_job(job: &Job) -> ClassificationJson {
    classification_json(&classify(&job.quiver))
}

fn reason_name(r: CertificateReason) -> &'static str {
    match r {
        CertificateReason::Acyclic => "acyclic",
        CertificateReason::CrownBound => "crown_bound",
        CertificateReason::CrownUniqueSource => "crown_unique_source",
    }
}

fn witness_text(w: &PsiWitness) -> String {
    match w {
        PsiWitness::DimensionMismatch { fixed, predicted } => {
            format!("dim F = {fixed}, compositions predict {predicted}")
        }
        PsiWitness::NotContained { composition } => format!("composition {composition} leaves F"),
        PsiWitness::NotDirect { composition } => format!("composition {composition} is not independent"),
        PsiWitness::SpanDeficit { fixed, spanned } => format!("span has dim {spanned} < dim F = {fixed}"),
    }
}

/// Compares the character fast path with the general engine's report and
/// checks factorization and cleaving.
fn schurian_section<F: Field>(
    quiver: &Quiver,
    chars: &CharacterTable<F>,
    report: &InvariantQuiverReport,
    path_cap: usize,
) -> Result<SchurianJson, InputError> {
    let d = report.max_degree;
    let fast: BTreeMap<Path, usize> = schurian_generators(quiver, chars, d, path_cap)
        .map_err(limit_error)?
        .into_values()
        .flatten()
        .map(|p| (p, 1))
        .collect();
    let general: BTreeMap<Path, usize> = report
        .generators
        .iter()
        .map(|g| (g.path.clone(), g.multiplicity))
        .collect();
    let mut keys: Vec<&Path> = fast.keys().chain(general.keys()).collect();
    keys.sort();
    keys.dedup();
    let first_difference = keys.into_iter().find_map(|p| {
        let a = fast.get(p).copied().unwrap_or(0);
        let b = general.get(p).copied().unwrap_or(0);
        (a != b).then(|| DifferenceJson {
            path: labels(quiver, p),
            schurian: a,
            general: b,
        })
    });
    let factorization_failure = verify_unique_factorization(quiver, chars, d, path_cap).map_err(limit_error)?;
    let cleaving = verify_cleaving_schurian(quiver, chars, d, path_cap).map_err(limit_error)?;
    Ok(SchurianJson {
        agrees: first_difference.is_none(),
        first_difference,
        unique_factorization: factorization_failure.is_none(),
        factorization_failure: factorization_failure.map(|p| labels(quiver, &p)),
        cleaving: CleavingJson {
            holds: cleaving.holds(),
            direct_sum: cleaving.direct_sum,
            pairs_composed: cleaving.pairs_composed,
            closure_violation: cleaving
                .closure_violation
                .map(|(a, b)| [labels(quiver, &a), labels(quiver, &b)]),
        },
    })
}

fn compute_in<F: Field>(field: &F, job: &Job) -> Result<Report, InputError> {
    let start = Instant::now();
    let quiver = &job.quiver;
    let opts = &job.options;
    let spec = build_action(field, job);
    let group = ActingGroup::close(field, quiver, &spec).map_err(|e| limit_error(e.into()))?;
    let table = compute_profiles(quiver, &group, opts.max_degree, opts.path_cap).map_err(limit_error)?;
    let iq = build_invariant_quiver(quiver, &group, &table);
    let freeness = verify_freeness(&table, &iq, opts.verify_depth).map_err(limit_error)?;

    let n = quiver.vertex_count();
    let mut hom_series = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let dims = table.invariant_series(x, y);
            if dims.iter().any(|&d| d > 0) {
                hom_series.push(HomSeries {
                    source: quiver.label(x).into(),
                    target: quiver.label(y).into(),
                    dims,
                });
            }
        }
    }
    let completeness = CompletenessJson {
        status: if iq.completeness.is_certified() {
            "certified"
        } else {
            "truncated"
        }
        .into(),
        reason: match iq.completeness {
            Completeness::Certified { reason } => Some(reason_name(reason).into()),
            Completeness::Truncated => None,
        },
        degree_bound: match iq.bound {
            DegreeBound::Certified { degree, .. } => Some(degree),
            DegreeBound::Unknown => None,
        },
    };
    let inv = classify_invariants(&iq);
    let schurian = match group.characters(quiver) {
        Ok(chars) => Some(schurian_section(quiver, &chars, &iq, opts.path_cap)?),
        Err(_) => None,
    };
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        job: job.to_file(),
        group_order: group.order(),
        hom_series,
        generators: iq
            .generators
            .iter()
            .map(|g| GeneratorJson {
                path: labels(quiver, &g.path),
                degree: g.degree(),
                multiplicity: g.multiplicity,
            })
            .collect(),
        completeness,
        freeness: FreenessJson {
            holds: freeness.holds(),
            verify_depth: freeness.verify_depth,
            paths_checked: freeness.paths_checked,
            psi_failure: freeness.psi_failure.as_ref().map(|(p, w)| PsiFailureJson {
                path: labels(quiver, p),
                witness: witness_text(w),
            }),
            series_mismatch: freeness.series_mismatch.as_ref().map(|m| SeriesMismatchJson {
                source: quiver.label(m.source).into(),
                target: quiver.label(m.target).into(),
                degree: m.degree,
                invariant_dim: m.invariant_dim,
                free_count: m.free_count.to_string(),
            }),
        },
        input_classification: classification_json(&classify(quiver)),
        invariant_classification: InvariantClassificationJson {
            classification: classification_json(&inv.classification),
            certified: inv.certified,
            note: (!inv.certified).then(|| "classification of the truncation only".into()),
        },
        schurian,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// The full pipeline: group closure, profiles, generator quiver, freeness,
/// classifications, and the Schurian cross-check when it applies.
pub fn compute(job: &Job) -> Result<Report, InputError> {
    match job.field {
        FieldSpec::Rationals => compute_in(&Rationals, job),
        FieldSpec::Cyclotomic { n } => compute_in(&CyclotomicField::new(n).expect("validated"), job),
        FieldSpec::Prime { p } => compute_in(&PrimeField::new(p).expect("validated"), job),
    }
}

fn schurian_in<F: Field>(field: &F, job: &Job) -> Result<SchurianJson, InputError> {
    let quiver = &job.quiver;
    let opts = &job.options;
    let group = ActingGroup::close(field, quiver, &build_action(field, job)).map_err(|e| limit_error(e.into()))?;
    let chars = group
        .characters(quiver)
        .map_err(|e| InputError::Computation(e.to_string()))?;
    let table = compute_profiles(quiver, &group, opts.max_degree, opts.path_cap).map_err(limit_error)?;
    let iq = build_invariant_quiver(quiver, &group, &table);
    schurian_section(quiver, &chars, &iq, opts.path_cap)
}

/// Character fast path against the general engine, without the rest of the
/// report. Fails on quivers with an arrow space of dimension above 1.
pub fn schurian_check(job: &Job) -> Result<SchurianJson, InputError> {
    match job.field {
        FieldSpec::Rationals => schurian_in(&Rationals, job),
        FieldSpec::Cyclotomic { n } => schurian_in(&CyclotomicField::new(n).expect("validated"), job),
        FieldSpec::Prime { p } => schurian_in(&PrimeField::new(p).expect("validated"), job),
    }
}

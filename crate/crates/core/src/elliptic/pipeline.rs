//! From multiples of a generator to integer solutions.
//!
//! For degree 4: `nP` on `Y^2 = X^3 - 36X` is mapped to `(u, t)`, both roots
//! `v` of the quadratic are tried, `w` is fixed by the cubic condition and the
//! eight terms are instantiated. For degree 5: `nP` on `Y^2 = X^3 - 21X - 20`
//! is mapped to `(u, v)` and the twelve terms are instantiated. Denominators
//! are cleared, results normalized, and trivial ones kept only as diagnostics.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::families::{k4_raw, k4_v_candidates, k4_w, k5_ec_raw, Candidate};
use crate::rational::Rational;
use crate::system::Solution;

use super::curve::RationalPoint;
use super::quartic::{point_to_uv, QuarticModel, QuarticParams};

/// What happened to one candidate parameter choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateOutcome {
    Nontrivial(Solution),
    Trivial(Solution),
    /// The instantiated terms do not satisfy every exponent; not expected
    /// for points on the quartic.
    Incomplete(Vec<u32>),
    /// The parameters hit an exceptional locus or a degenerate branch.
    Skipped(Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateDiagnostic {
    /// `v` for the degree-4 construction, absent for degree 5.
    pub v: Option<Rational>,
    pub outcome: CandidateOutcome,
}

/// Result of running a pipeline on `nP`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub model: QuarticModel,
    pub n: u64,
    pub point: RationalPoint,
    /// Quartic parameters of `nP`, absent on the exceptional locus.
    pub params: Option<QuarticParams>,
    /// Nontrivial normalized solutions, sorted and deduplicated.
    pub solutions: Vec<Solution>,
    pub diagnostics: Vec<CandidateDiagnostic>,
}

impl PipelineReport {
    pub fn all_trivial(&self) -> bool {
        self.solutions.is_empty()
    }
}

fn classify(candidate: Result<Candidate>) -> CandidateOutcome {
    let candidate = match candidate {
        Ok(c) => c,
        Err(e) => return CandidateOutcome::Skipped(e),
    };
    if !candidate.is_complete() {
        return CandidateOutcome::Incomplete(candidate.verified_r().to_vec());
    }
    match candidate.normalized() {
        Ok(s) if s.is_trivial() => CandidateOutcome::Trivial(s),
        Ok(s) => CandidateOutcome::Nontrivial(s),
        Err(e) => CandidateOutcome::Skipped(e),
    }
}

fn k4_candidates(params: &QuarticParams) -> Vec<CandidateDiagnostic> {
    let roots = match k4_v_candidates(params.u(), params.second()) {
        Ok(roots) => roots,
        Err(e) => {
            return vec![CandidateDiagnostic {
                v: None,
                outcome: CandidateOutcome::Skipped(e),
            }]
        }
    };
    roots
        .into_iter()
        .map(|v| {
            let outcome = classify(k4_w(params.u(), &v).and_then(|w| k4_raw(params.u(), &v, &w)));
            CandidateDiagnostic {
                v: Some(v),
                outcome,
            }
        })
        .collect()
}

fn k5_candidates(params: &QuarticParams) -> Vec<CandidateDiagnostic> {
    vec![CandidateDiagnostic {
        v: None,
        outcome: classify(k5_ec_raw(params.u(), params.second())),
    }]
}

/// Runs the construction for `model` on `n` times its generator.
pub fn solutions_from_point(model: QuarticModel, n: u64) -> Result<PipelineReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let point = model.curve().scalar_mul(n, &model.generator())?;
    let (params, diagnostics) = match point_to_uv(model, &point) {
        Ok(params) => {
            let diagnostics = match model {
                QuarticModel::K4 => k4_candidates(&params),
                QuarticModel::K5 => k5_candidates(&params),
            };
            (Some(params), diagnostics)
        }
        Err(e) => (
            None,
            vec![CandidateDiagnostic {
                v: None,
                outcome: CandidateOutcome::Skipped(e),
            }],
        ),
    };
    let solutions: BTreeSet<Solution> = diagnostics
        .iter()
        .filter_map(|d| match &d.outcome {
            CandidateOutcome::Nontrivial(s) => Some(s.clone()),
            _ => None,
        })
        .collect();
    Ok(PipelineReport {
        model,
        n,
        point,
        params,
        solutions: solutions.into_iter().collect(),
        diagnostics,
    })
}

/// Nontrivial degree-4 solutions (shape (3, 5)) from `nP` on `Y^2 = X^3 - 36X`.
pub fn k4_solution_from_point(n: u64) -> Result<Vec<Solution>> {
    Ok(solutions_from_point(QuarticModel::K4, n)?.solutions)
}

/// Nontrivial degree-5 solutions (shape (4, 6)) from `nP` on `Y^2 = X^3 - 21X - 20`.
pub fn k5_solution_from_point(n: u64) -> Result<Vec<Solution>> {
    Ok(solutions_from_point(QuarticModel::K5, n)?.solutions)
}

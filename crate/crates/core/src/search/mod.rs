//! Bounded exhaustive search for nontrivial solutions of a fixed shape.
//!
//! Every term is restricted to `[-height, height]`. Both sides are enumerated
//! as sorted multisets, so permutations of a side are never revisited, and
//! each hit is reduced to its normalized form before deduplication. Reports
//! are sorted and do not depend on the number of worker threads.
//!
//! Two strategies are available. [`Strategy::Plain`] walks left sides and,
//! for each, builds right sides term by term, pruning with the first two
//! power sums and fixing the last term from the linear equation.
//! [`Strategy::MeetInTheMiddle`] tabulates all left sides by their power-sum
//! vector and looks up every right side. On any spec where both finish they
//! return the same solutions.

mod enumerate;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::SolutionRecord;
use crate::system::{shape_lower_bounds, Solution, SystemShape};

use enumerate::{uses_table, Budget, LeftTable, Problem, Worker};

/// Default cap on visited enumeration nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

/// `Strategy::Auto` builds a left-side table only up to this many entries.
pub const AUTO_TABLE_LIMIT: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Plain,
    MeetInTheMiddle,
    /// Meet in the middle when the left-side table is small enough.
    #[default]
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub k: u32,
    pub s1: usize,
    pub s2: usize,
    /// Maximum absolute value of any term.
    pub height: u64,
    pub allow_zero_terms: bool,
    /// Stop after this many distinct solutions.
    pub limit: Option<usize>,
    pub strategy: Strategy,
    pub node_budget: u64,
    /// Worker threads; `None` uses the global pool. Not part of the report.
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl SearchSpec {
    /// A spec with zeros allowed, no limit, automatic strategy and the
    /// default budget.
    pub fn new(shape: SystemShape, height: u64) -> Self {
        SearchSpec {
            k: shape.k(),
            s1: shape.s1(),
            s2: shape.s2(),
            height,
            allow_zero_terms: true,
            limit: None,
            strategy: Strategy::Auto,
            node_budget: DEFAULT_NODE_BUDGET,
            threads: None,
        }
    }

    pub fn shape(&self) -> Result<SystemShape> {
        SystemShape::new(self.k, self.s1, self.s2)
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_zero_terms(mut self, allow: bool) -> Self {
        self.allow_zero_terms = allow;
        self
    }

    pub fn with_limit(mut self, limit: Option<usize>) -> Self {
        self.limit = limit;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_node_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    fn validate(&self) -> Result<SystemShape> {
        let shape = self.shape()?;
        if self.height == 0 {
            return Err(Error::Precondition("height must be at least 1".into()));
        }
        if self.limit == Some(0) {
            return Err(Error::Precondition("limit must be positive".into()));
        }
        // power sums of s2 terms up to height^k must fit comfortably in i128
        let bound = BigInt::from(shape.s2())
            * num_traits::pow(BigInt::from(self.height), shape.k() as usize);
        if bound.bits() > 120 || self.height > i64::MAX as u64 / 4 {
            return Err(Error::SearchTooLarge(format!(
                "{} terms of height {} at degree {}",
                shape.s2(),
                self.height,
                shape.k()
            )));
        }
        Ok(shape)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// True iff the whole box was covered: no budget or limit cut-off.
    pub exhaustive: bool,
    /// Enumeration nodes visited.
    pub nodes: u64,
    #[serde(with = "records")]
    pub solutions: Vec<Solution>,
}

mod records {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        sols: &[Solution],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(sols.iter().map(SolutionRecord::from))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Solution>, D::Error> {
        Vec::<SolutionRecord>::deserialize(d)?
            .iter()
            .map(|r| r.to_solution().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Finds every nontrivial solution of the spec's shape with all terms in
/// `[-height, height]`, up to the canonical form of [`Solution::normalize`].
///
/// Running out of node budget is not an error; the report then has
/// `exhaustive == false`.
pub fn exhaustive_search(spec: &SearchSpec) -> Result<SearchReport> {
    let shape = spec.validate()?;
    let problem = Problem::new(
        shape.k(),
        shape.s1(),
        shape.s2(),
        spec.height as i128,
        spec.allow_zero_terms,
        spec.limit,
    );
    let run = || run_search(spec, &problem);
    let (found, nodes, cut_off) = match spec.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let mut solutions: Vec<Solution> = found.into_iter().collect();
    let mut exhaustive = !cut_off;
    if let Some(limit) = spec.limit {
        if solutions.len() > limit {
            solutions.truncate(limit);
            exhaustive = false;
        }
    }
    Ok(SearchReport {
        spec: spec.clone(),
        exhaustive,
        nodes,
        solutions,
    })
}

fn run_search(spec: &SearchSpec, problem: &Problem) -> (BTreeSet<Solution>, u64, bool) {
    let budget = Budget::new(spec.node_budget);
    let firsts: Vec<usize> = (0..problem.values.len()).collect();
    let table = uses_table(spec.strategy, problem).then(|| LeftTable::build(problem));
    let table_nodes = table.as_ref().map_or(0, |t| t.size);
    budget
        .used
        .fetch_add(table_nodes, std::sync::atomic::Ordering::Relaxed);

    let partials: Vec<(BTreeSet<Solution>, u64, bool)> = firsts
        .par_iter()
        .map(|&first| {
            let mut worker = Worker::new(problem, &budget);
            match &table {
                Some(t) => worker.run_mitm(first, t),
                None => worker.run_plain(first),
            }
            worker.flush();
            (
                std::mem::take(&mut worker.found),
                worker.nodes,
                worker.hit_limit,
            )
        })
        .collect();

    let mut found = BTreeSet::new();
    let mut nodes = table_nodes;
    let mut hit_limit = false;
    for (part, n, hit) in partials {
        found.extend(part);
        nodes += n;
        hit_limit |= hit;
    }
    let exhausted = budget.exhausted.load(std::sync::atomic::Ordering::Relaxed);
    (found, nodes, exhausted || hit_limit)
}

/// `-(3 y1^2 + 2 y1 y2 + 3 y2^2) y1^2 y2^2` and whether it is a perfect square.
///
/// This is the discriminant of the quadratic in `y3` left after eliminating
/// `x1` and `y4` from the degree-3 system with one term on the left and four
/// on the right. The form in parentheses is positive definite, so the value
/// is a square only when `y1 y2 = 0`.
pub fn k3_discriminant(y1: impl Into<BigInt>, y2: impl Into<BigInt>) -> (BigInt, bool) {
    let (y1, y2) = (y1.into(), y2.into());
    let form =
        BigInt::from(3) * &y1 * &y1 + BigInt::from(2) * &y1 * &y2 + BigInt::from(3) * &y2 * &y2;
    let value = -(form * &y1 * &y1 * &y2 * &y2);
    let square = !value.is_negative() && {
        let root = value.sqrt();
        &root * &root == value
    };
    (value, square)
}

/// Both halves of the degree-3, shape (1, 4) impossibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Audit {
    /// Every `(y1, y2)` in the box with `y1 y2 != 0` has a non-square discriminant.
    pub discriminants_nonsquare: bool,
    /// The exhaustive search of shape (1, 4) at this height.
    pub search: SearchReport,
}

impl K3Audit {
    pub fn holds(&self) -> bool {
        self.discriminants_nonsquare && self.search.exhaustive && self.search.solutions.is_empty()
    }
}

pub fn k3_impossibility_report(height: u64) -> Result<K3Audit> {
    let h = height as i64;
    let discriminants_nonsquare = (-h..=h)
        .flat_map(|y1| (-h..=h).map(move |y2| (y1, y2)))
        .filter(|&(y1, y2)| y1 != 0 && y2 != 0)
        .all(|(y1, y2)| !k3_discriminant(y1, y2).1);
    let search = exhaustive_search(&SearchSpec::new(SystemShape::new(3, 1, 4)?, height))?;
    Ok(K3Audit {
        discriminants_nonsquare,
        search,
    })
}

/// True iff, at this height, no `(y1, y2)` with `y1 y2 != 0` gives a square
/// discriminant and the exhaustive (1, 4) search finds nothing.
pub fn k3_impossibility_audit(height: u64) -> Result<bool> {
    Ok(k3_impossibility_report(height)?.holds())
}

/// Shapes `(s1, s2)`, `s1 <= s2`, with the given total that meet the side
/// lower bounds for degree `k`.
pub fn feasible_shapes(k: u32, total: usize) -> Vec<SystemShape> {
    (1..=total / 2)
        .filter_map(|s1| SystemShape::new(k, s1, total - s1).ok())
        .filter(SystemShape::is_feasible)
        .collect()
}

/// Every shape `(s1, s2)`, `s1 <= s2`, whose total is below the lower bound
/// for degree `k`.
pub fn shapes_below_bound(k: u32) -> Vec<SystemShape> {
    let total_min = shape_lower_bounds(k).total_min;
    (2..total_min)
        .flat_map(|total| (1..=total / 2).map(move |s1| (s1, total - s1)))
        .filter_map(|(s1, s2)| SystemShape::new(k, s1, s2).ok())
        .collect()
}

/// Searches each feasible degree-4 shape with seven terms in total. The only
/// one is (2, 5).
pub fn beta4_window_search(height: u64) -> Result<SearchReport> {
    beta4_window_search_with(height, Strategy::Auto)
}

pub fn beta4_window_search_with(height: u64, strategy: Strategy) -> Result<SearchReport> {
    let shapes = feasible_shapes(4, 7);
    debug_assert_eq!(shapes, vec![SystemShape::new(4, 2, 5)?]);
    let shape = shapes
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidShape("no feasible shape".into()))?;
    exhaustive_search(&SearchSpec::new(shape, height).with_strategy(strategy))
}

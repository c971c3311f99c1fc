//! Enumeration kernels over machine integers.
//!
//! Both sides are enumerated as multisets, i.e. as non-decreasing index
//! sequences into the value list `height, height - 1, ..., -height`, so every
//! side comes out sorted in descending order and each unordered solution is
//! produced exactly once per orientation.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;

use crate::system::Solution;

use super::Strategy;

/// Flush the local node counter to the shared one this often.
const FLUSH_EVERY: u64 = 1 << 12;

pub(super) struct Problem {
    pub k: u32,
    pub s1: usize,
    pub s2: usize,
    pub height: i128,
    /// Allowed term values, descending.
    pub values: Vec<i128>,
    /// `powers[i][r - 1] = values[i]^r`.
    pub powers: Vec<Vec<i128>>,
    pub limit: Option<usize>,
}

impl Problem {
    pub fn new(
        k: u32,
        s1: usize,
        s2: usize,
        height: i128,
        allow_zero: bool,
        limit: Option<usize>,
    ) -> Self {
        let values: Vec<i128> = (-height..=height)
            .rev()
            .filter(|&v| allow_zero || v != 0)
            .collect();
        let powers = values
            .iter()
            .map(|&v| {
                let mut acc = 1i128;
                (0..k)
                    .map(|_| {
                        acc *= v;
                        acc
                    })
                    .collect()
            })
            .collect();
        Problem {
            k,
            s1,
            s2,
            height,
            values,
            powers,
            limit,
        }
    }

    fn index_of(&self, v: i128) -> Option<usize> {
        self.values.binary_search_by(|probe| v.cmp(probe)).ok()
    }

    fn sums(&self, idx: &[usize]) -> Vec<i128> {
        (0..self.k as usize)
            .map(|r| idx.iter().map(|&i| self.powers[i][r]).sum())
            .collect()
    }
}

/// Shared run state: node budget and early-stop flag.
pub(super) struct Budget {
    pub limit: u64,
    pub used: AtomicU64,
    pub exhausted: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }
}

/// Per-partition worker state.
pub(super) struct Worker<'a> {
    problem: &'a Problem,
    budget: &'a Budget,
    pending: u64,
    pub nodes: u64,
    pub found: BTreeSet<Solution>,
    pub hit_limit: bool,
    stopped: bool,
}

impl<'a> Worker<'a> {
    pub fn new(problem: &'a Problem, budget: &'a Budget) -> Self {
        Worker {
            problem,
            budget,
            pending: 0,
            nodes: 0,
            found: BTreeSet::new(),
            hit_limit: false,
            stopped: false,
        }
    }

    /// Counts one node; returns false once the search must stop.
    #[inline]
    fn visit(&mut self) -> bool {
        if self.stopped {
            return false;
        }
        self.nodes += 1;
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
        }
        !self.stopped
    }

    pub fn flush(&mut self) {
        let total = self.budget.used.fetch_add(self.pending, Ordering::Relaxed) + self.pending;
        self.pending = 0;
        if total > self.budget.limit {
            self.budget.exhausted.store(true, Ordering::Relaxed);
        }
        if self.budget.exhausted.load(Ordering::Relaxed) {
            self.stopped = true;
        }
    }

    fn record(&mut self, lhs: &[usize], rhs: &[usize]) {
        let p = self.problem;
        let side = |idx: &[usize]| -> Vec<BigInt> {
            idx.iter().map(|&i| BigInt::from(p.values[i])).collect()
        };
        let sol = Solution::new(p.k, side(lhs), side(rhs)).expect("sides are nonempty");
        debug_assert!(sol.verify());
        if sol.is_trivial() {
            return;
        }
        let canonical = sol
            .normalize()
            .expect("nontrivial solutions are not all zero");
        self.found.insert(canonical);
        if let Some(limit) = p.limit {
            if self.found.len() >= limit {
                self.hit_limit = true;
                self.stopped = true;
            }
        }
    }

    /// All solutions whose first (largest) left term is `values[first]`.
    pub fn run_plain(&mut self, first: usize) {
        let p = self.problem;
        let mut lhs = Vec::with_capacity(p.s1);
        lhs.push(first);
        self.plain_lhs(&mut lhs);
    }

    fn plain_lhs(&mut self, lhs: &mut Vec<usize>) {
        if !self.visit() {
            return;
        }
        let p = self.problem;
        if lhs.len() == p.s1 {
            let targets = p.sums(lhs);
            let mut rhs = Vec::with_capacity(p.s2);
            self.plain_rhs(
                lhs,
                &mut rhs,
                0,
                targets[0],
                targets.get(1).copied().unwrap_or(0),
                &targets,
            );
            return;
        }
        let start = *lhs.last().expect("lhs is seeded");
        for i in start..p.values.len() {
            lhs.push(i);
            self.plain_lhs(lhs);
            lhs.pop();
            if self.stopped {
                return;
            }
        }
    }

    /// Extends `rhs` (indices at least `start`) so that its first two power
    /// sums grow to `targets[0..2]`; `rest1`, `rest2` are what is still missing.
    fn plain_rhs(
        &mut self,
        lhs: &[usize],
        rhs: &mut Vec<usize>,
        start: usize,
        rest1: i128,
        rest2: i128,
        targets: &[i128],
    ) {
        if !self.visit() {
            return;
        }
        let p = self.problem;
        let remaining = (p.s2 - rhs.len()) as i128;
        if remaining == 1 {
            // the last term is forced by the linear equation
            let Some(i) = p.index_of(rest1) else { return };
            if i < start || (p.k >= 2 && rest1 * rest1 != rest2) {
                return;
            }
            rhs.push(i);
            if p.sums(rhs) == targets {
                self.record(lhs, rhs);
            }
            rhs.pop();
            return;
        }
        let h = p.height;
        let h2 = h * h;
        for i in start..p.values.len() {
            let v = p.values[i];
            // every remaining term is at most v
            if rest1 > remaining * v {
                break;
            }
            // and at least -h
            if rest1 < v - (remaining - 1) * h {
                continue;
            }
            let (r1, r2) = (rest1 - v, rest2 - v * v);
            if p.k >= 2 {
                let m = remaining - 1;
                if r2 < 0 || r2 > m * h2 || r1 * r1 > m * r2 {
                    continue;
                }
            }
            rhs.push(i);
            self.plain_rhs(lhs, rhs, i, r1, r2, targets);
            rhs.pop();
            if self.stopped {
                return;
            }
        }
    }

    /// All right sides whose first (largest) term is `values[first]`, matched
    /// against the table of left sides.
    pub fn run_mitm(&mut self, first: usize, table: &LeftTable) {
        let mut rhs = Vec::with_capacity(self.problem.s2);
        rhs.push(first);
        let v = self.problem.values[first];
        let partial2 = if self.problem.k >= 2 { v * v } else { 0 };
        self.mitm_rhs(&mut rhs, partial2, table);
    }

    fn mitm_rhs(&mut self, rhs: &mut Vec<usize>, partial2: i128, table: &LeftTable) {
        if !self.visit() {
            return;
        }
        let p = self.problem;
        if p.k >= 2 && partial2 > table.max_square_sum {
            return;
        }
        if rhs.len() == p.s2 {
            let key = p.sums(rhs);
            if let Some(lefts) = table.entries.get(&key) {
                for lhs in lefts {
                    self.record(lhs, rhs);
                }
            }
            return;
        }
        let start = *rhs.last().expect("rhs is seeded");
        for i in start..p.values.len() {
            let v = p.values[i];
            rhs.push(i);
            let next2 = if p.k >= 2 { partial2 + v * v } else { 0 };
            self.mitm_rhs(rhs, next2, table);
            rhs.pop();
            if self.stopped {
                return;
            }
        }
    }
}

/// Left sides keyed by their power-sum vector.
pub(super) struct LeftTable {
    entries: HashMap<Vec<i128>, Vec<Vec<usize>>>,
    max_square_sum: i128,
    pub size: u64,
}

impl LeftTable {
    pub fn build(p: &Problem) -> Self {
        let mut entries: HashMap<Vec<i128>, Vec<Vec<usize>>> = HashMap::new();
        let mut max_square_sum = 0;
        let mut size = 0;
        let mut idx = Vec::with_capacity(p.s1);
        fn rec(
            p: &Problem,
            idx: &mut Vec<usize>,
            start: usize,
            entries: &mut HashMap<Vec<i128>, Vec<Vec<usize>>>,
            max2: &mut i128,
            size: &mut u64,
        ) {
            if idx.len() == p.s1 {
                let key = p.sums(idx);
                if p.k >= 2 {
                    *max2 = (*max2).max(key[1]);
                }
                *size += 1;
                entries.entry(key).or_default().push(idx.clone());
                return;
            }
            for i in start..p.values.len() {
                idx.push(i);
                rec(p, idx, i, entries, max2, size);
                idx.pop();
            }
        }
        rec(p, &mut idx, 0, &mut entries, &mut max_square_sum, &mut size);
        LeftTable {
            entries,
            max_square_sum,
            size,
        }
    }
}

/// Number of multisets of size `k` from `n` values, saturating.
pub(super) fn multiset_count(n: u64, k: u64) -> u64 {
    // C(n + k - 1, k)
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 + i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

pub(super) fn uses_table(strategy: Strategy, p: &Problem) -> bool {
    match strategy {
        Strategy::Plain => false,
        Strategy::MeetInTheMiddle => true,
        Strategy::Auto => {
            multiset_count(p.values.len() as u64, p.s1 as u64) <= super::AUTO_TABLE_LIMIT
        }
    }
}

//! Exhaustive branch-and-prune enumeration of circulant Hadamard first rows.
//!
//! The search assigns row entries left to right and keeps, for every shift
//! up to n/2, a running partial autocorrelation over the pairs whose two
//! entries are both assigned. A partial sum that exceeds the number of
//! still-open pairs at its shift can never return to zero, so the subtree
//! is cut. The optional regularity filter adds order-level short-circuits
//! and running positive-count bounds; both rest on theorems about circulant
//! Hadamard matrices and never cut a genuine solution.
//!
//! Parallel runs split the tree at a fixed prefix depth that depends only
//! on the order, so tallies, solution sets, and emitted reports are
//! identical for any worker count.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::correlation::{gram_orthogonality_oracle, is_circulant_hadamard};
use crate::error::Error;
use crate::identities::{identity_report, order_filter, ExclusionReason, OrderAdmissibility};
use crate::row::SignRow;

/// Which row transformations are treated as producing the same solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Symmetry {
    /// Cyclic rotations of the row.
    pub rotation: bool,
    /// Global sign flip of the row.
    pub negation: bool,
}

impl Symmetry {
    pub const NONE: Symmetry = Symmetry {
        rotation: false,
        negation: false,
    };
    pub const ROTATION: Symmetry = Symmetry {
        rotation: true,
        negation: false,
    };
    pub const NEGATION: Symmetry = Symmetry {
        rotation: false,
        negation: true,
    };
    pub const FULL: Symmetry = Symmetry {
        rotation: true,
        negation: true,
    };
}

/// Every row equivalent to `row` under the enabled transformations,
/// deduplicated and sorted.
pub fn orbit(row: &SignRow, symmetry: Symmetry) -> Vec<SignRow> {
    let mut set = BTreeSet::new();
    let mut base = vec![row.clone()];
    if symmetry.negation {
        base.push(row.negated());
    }
    for b in base {
        if symmetry.rotation {
            for k in 0..b.len() {
                set.insert(b.rotate(k as i64));
            }
        } else {
            set.insert(b);
        }
    }
    set.into_iter().collect()
}

/// The lexicographically smallest member of the row's orbit, under the
/// entry order that puts +1 before -1. Idempotent and constant on orbits.
pub fn canonical_form(row: &SignRow, symmetry: Symmetry) -> SignRow {
    orbit(row, symmetry).swap_remove(0)
}

/// Parameters of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Row length to search.
    pub order: usize,
    /// Apply the order filter and the running positive-count bounds.
    pub use_regularity_filter: bool,
    /// Cut subtrees whose partial autocorrelations cannot reach zero.
    pub use_paf_pruning: bool,
    /// Solution-equivalence used for canonical output and (negation only)
    /// for halving the tree by pinning the first entry to +1.
    pub symmetry: Symmetry,
    /// Worker threads for the subtree phase. Never affects results.
    pub worker_count: usize,
    /// Optional node budget; when exhausted the run stops early and is
    /// marked incomplete. Bounded runs execute sequentially.
    pub node_limit: Option<u64>,
    /// Emit every raw solution instead of one representative per orbit.
    pub emit_all: bool,
}

impl SearchConfig {
    /// Defaults: all filters on, full symmetry, one worker, no limit,
    /// canonical output.
    pub fn new(order: usize) -> Self {
        SearchConfig {
            order,
            use_regularity_filter: true,
            use_paf_pruning: true,
            symmetry: Symmetry::FULL,
            worker_count: 1,
            node_limit: None,
            emit_all: false,
        }
    }
}

/// Subtrees cut by each prune rule. A cut is counted once at the node
/// where it happens, not once per skipped leaf.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneCounts {
    /// Partial autocorrelation bound violations.
    pub autocorrelation_bound: u64,
    /// Positive-count window violations (regularity filter only).
    pub positive_count_bound: u64,
}

/// Result of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub order: usize,
    pub symmetry: Symmetry,
    pub emit_all: bool,
    /// Sorted rows: every raw solution when `emit_all`, one canonical
    /// representative per orbit otherwise.
    pub solutions: Vec<SignRow>,
    /// Number of distinct solutions including all symmetry copies.
    pub raw_count: u64,
    /// Number of distinct orbits among the solutions.
    pub canonical_count: u64,
    /// Entry assignments performed.
    pub nodes_explored: u64,
    pub pruned: PruneCounts,
    /// Set when the order filter excluded the whole order up front.
    pub order_excluded: Option<ExclusionReason>,
    /// False only when a node limit stopped the run early.
    pub complete: bool,
    pub elapsed: Duration,
}

/// Incremental DFS state: the partial row plus one running correlation
/// accumulator per shift in 1..=n/2, each covering exactly the ordered
/// index pairs whose entries are both assigned.
#[derive(Clone)]
struct Walker {
    n: usize,
    shifts: usize,
    entries: Vec<i8>,
    assigned: usize,
    acc: Vec<i32>,
    positive: i64,
    /// Allowed final positive-count window, when the regularity filter
    /// applies at this order.
    count_window: Option<(i64, i64)>,
}

impl Walker {
    fn new(n: usize, count_window: Option<(i64, i64)>) -> Self {
        Walker {
            n,
            shifts: n / 2,
            entries: vec![0; n],
            assigned: 0,
            acc: vec![0; n / 2 + 1],
            positive: 0,
            count_window,
        }
    }

    fn assign(&mut self, sign: i8) {
        let p = self.assigned;
        self.entries[p] = sign;
        for s in 1..=self.shifts {
            let mut delta = 0i32;
            if p >= s {
                delta += i32::from(self.entries[p - s] * sign);
            }
            if p + s >= self.n {
                delta += i32::from(sign * self.entries[p + s - self.n]);
            }
            self.acc[s] += delta;
        }
        self.positive += i64::from(sign == 1);
        self.assigned += 1;
    }

    fn unassign(&mut self) {
        self.assigned -= 1;
        let p = self.assigned;
        let sign = self.entries[p];
        for s in 1..=self.shifts {
            let mut delta = 0i32;
            if p >= s {
                delta += i32::from(self.entries[p - s] * sign);
            }
            if p + s >= self.n {
                delta += i32::from(sign * self.entries[p + s - self.n]);
            }
            self.acc[s] -= delta;
        }
        self.positive -= i64::from(sign == 1);
    }

    /// Ordered pairs at shift `s` with at least one unassigned endpoint.
    fn open_pairs(&self, s: usize) -> i32 {
        let m = self.assigned as i32;
        let s = s as i32;
        let n = self.n as i32;
        n - (m - s).max(0) - (m + s - n).max(0)
    }

    /// True when some partial correlation can no longer reach zero: the
    /// remaining pairs contribute ±1 each, so |acc| must stay within the
    /// open-pair count.
    fn correlation_stuck(&self) -> bool {
        (1..=self.shifts).any(|s| self.acc[s].abs() > self.open_pairs(s))
    }

    /// True when the final positive count can no longer land in the
    /// admissible window.
    fn count_stuck(&self) -> bool {
        match self.count_window {
            Some((lo, hi)) => {
                let free = (self.n - self.assigned) as i64;
                self.positive > hi || self.positive + free < lo
            }
            None => false,
        }
    }

    fn is_flat(&self) -> bool {
        self.acc[1..=self.shifts].iter().all(|&a| a == 0)
    }

    fn row(&self) -> SignRow {
        SignRow::from_signs_unchecked(self.entries.clone())
    }
}

#[derive(Default)]
struct Tally {
    nodes: u64,
    pruned: PruneCounts,
    found: Vec<SignRow>,
    aborted: bool,
}

impl Tally {
    fn absorb(&mut self, other: Tally) {
        self.nodes += other.nodes;
        self.pruned.autocorrelation_bound += other.pruned.autocorrelation_bound;
        self.pruned.positive_count_bound += other.pruned.positive_count_bound;
        self.found.extend(other.found);
        self.aborted |= other.aborted;
    }
}

/// Branch signs in emission order; pinning restricts the first entry when
/// negation symmetry makes the other half of the tree redundant.
fn branch_signs(depth: usize, pin_first: bool) -> &'static [i8] {
    if depth == 0 && pin_first {
        &[1]
    } else {
        &[1, -1]
    }
}

fn search_subtree(w: &mut Walker, cfg: &SearchConfig, tally: &mut Tally, pin_first: bool) {
    if w.assigned == w.n {
        if w.is_flat() {
            tally.found.push(w.row());
        }
        return;
    }
    for &sign in branch_signs(w.assigned, pin_first) {
        if let Some(limit) = cfg.node_limit {
            if tally.nodes >= limit {
                tally.aborted = true;
                return;
            }
        }
        w.assign(sign);
        tally.nodes += 1;
        if cfg.use_paf_pruning && w.correlation_stuck() {
            tally.pruned.autocorrelation_bound += 1;
        } else if w.count_stuck() {
            tally.pruned.positive_count_bound += 1;
        } else {
            search_subtree(w, cfg, tally, pin_first);
        }
        w.unassign();
        if tally.aborted {
            return;
        }
    }
}

/// Collects the walkers of all surviving prefixes of length `depth`,
/// counting their nodes and prunes into `tally`.
fn collect_prefixes(
    w: &mut Walker,
    cfg: &SearchConfig,
    depth: usize,
    tally: &mut Tally,
    out: &mut Vec<Walker>,
    pin_first: bool,
) {
    if w.assigned == depth {
        out.push(w.clone());
        return;
    }
    for &sign in branch_signs(w.assigned, pin_first) {
        w.assign(sign);
        tally.nodes += 1;
        if cfg.use_paf_pruning && w.correlation_stuck() {
            tally.pruned.autocorrelation_bound += 1;
        } else if w.count_stuck() {
            tally.pruned.positive_count_bound += 1;
        } else {
            collect_prefixes(w, cfg, depth, tally, out, pin_first);
        }
        w.unassign();
    }
}

/// Depth of the parallel split, a function of the order alone so that the
/// work decomposition (and hence every tally) is identical across worker
/// counts.
fn prefix_depth(n: usize) -> usize {
    if n < 12 {
        0
    } else {
        (n - 8).min(10)
    }
}

fn count_window(cfg: &SearchConfig) -> Option<(i64, i64)> {
    if !cfg.use_regularity_filter || cfg.order == 1 {
        return None;
    }
    match order_filter(cfg.order) {
        OrderAdmissibility::Admissible { quarter_root } => {
            let r = quarter_root as i64;
            Some((2 * r * r - r, 2 * r * r + r))
        }
        OrderAdmissibility::Excluded { .. } => None,
    }
}

/// Runs the configured enumeration to completion (or to its node budget)
/// and assembles the outcome. With `complete` true the returned solutions
/// are exactly the circulant Hadamard first rows of the order, up to the
/// configured symmetry.
pub fn enumerate(cfg: &SearchConfig) -> Result<SearchOutcome, Error> {
    if cfg.order == 0 {
        return Err(Error::Config("order must be at least 1".to_string()));
    }
    if cfg.worker_count == 0 {
        return Err(Error::Config("worker count must be at least 1".to_string()));
    }
    let start = Instant::now();

    // Order 1 has solutions despite failing the order filter, which
    // describes the regular pattern of orders above 1; never short-circuit
    // the trivial order.
    if cfg.use_regularity_filter && cfg.order > 1 {
        if let OrderAdmissibility::Excluded { reason } = order_filter(cfg.order) {
            return Ok(SearchOutcome {
                order: cfg.order,
                symmetry: cfg.symmetry,
                emit_all: cfg.emit_all,
                solutions: Vec::new(),
                raw_count: 0,
                canonical_count: 0,
                nodes_explored: 0,
                pruned: PruneCounts::default(),
                order_excluded: Some(reason),
                complete: true,
                elapsed: start.elapsed(),
            });
        }
    }

    let pin_first = cfg.symmetry.negation;
    let window = count_window(cfg);
    let depth = prefix_depth(cfg.order);
    let mut tally = Tally::default();

    if cfg.node_limit.is_some() || depth == 0 {
        let mut w = Walker::new(cfg.order, window);
        search_subtree(&mut w, cfg, &mut tally, pin_first);
    } else {
        let mut prefixes = Vec::new();
        let mut w = Walker::new(cfg.order, window);
        collect_prefixes(&mut w, cfg, depth, &mut tally, &mut prefixes, pin_first);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.worker_count)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?;
        let subtree_tallies: Vec<Tally> = pool.install(|| {
            prefixes
                .into_par_iter()
                .map(|mut sub| {
                    let mut t = Tally::default();
                    search_subtree(&mut sub, cfg, &mut t, pin_first);
                    t
                })
                .collect()
        });
        for t in subtree_tallies {
            tally.absorb(t);
        }
    }

    let mut raw: BTreeSet<SignRow> = tally.found.iter().cloned().collect();
    if pin_first {
        for r in &tally.found {
            raw.insert(r.negated());
        }
    }
    for r in &raw {
        assert!(
            is_circulant_hadamard(r),
            "search produced a non-solution row {r}"
        );
    }
    let canonical: BTreeSet<SignRow> = raw
        .iter()
        .map(|r| canonical_form(r, cfg.symmetry))
        .collect();
    let raw_count = raw.len() as u64;
    let canonical_count = canonical.len() as u64;
    let solutions = if cfg.emit_all {
        raw.into_iter().collect()
    } else {
        canonical.into_iter().collect()
    };

    Ok(SearchOutcome {
        order: cfg.order,
        symmetry: cfg.symmetry,
        emit_all: cfg.emit_all,
        solutions,
        raw_count,
        canonical_count,
        nodes_explored: tally.nodes,
        pruned: tally.pruned,
        order_excluded: None,
        complete: !tally.aborted,
        elapsed: start.elapsed(),
    })
}

/// Independent post-check of an outcome: every emitted row must pass the
/// quadratic orthogonality oracle and, at even orders, the vanishing
/// cross-sum condition. Vacuously true for empty outcomes.
pub fn verify_solutions(outcome: &SearchOutcome) -> bool {
    outcome.solutions.iter().all(|r| {
        let sums_ok = if r.len() % 2 == 0 {
            identity_report(r).map(|rep| rep.cross_sums_vanish).unwrap_or(false)
        } else {
            true
        };
        gram_orthogonality_oracle(r) && sums_ok
    })
}

//! Exact solvers for domination number, partial domination, and packing.
//!
//! All three solvers are deterministic branch-and-bound searches over
//! [`VertexSet`]s:
//!
//! * `gamma_exact` — minimum dominating set by iterative-deepening search,
//!   branching on an undominated vertex with the fewest remaining dominator
//!   candidates and covering it with candidates ordered by marginal
//!   coverage (descending, ties to the lowest index).
//! * `pd_exact` — minimum set dominating at least `⌈p·n/q⌉` vertices, by
//!   include/exclude branching on the highest-marginal candidate with an
//!   admissible top-`budget` marginal-sum bound.
//! * `rho_exact` — maximum packing, solved as a maximum independent set of
//!   the square graph.
//!
//! Ties everywhere break to the lowest vertex index, so certificates are
//! reproducible across runs and platforms. Solvers are total; runtime grows
//! with order (practical range for exact domination is around `n ≤ 40` on
//! cubic inputs). Long solves can be cancelled through [`Interrupt`].

use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::graph::Graph;

/// Exact rational coverage threshold `α = p/q`, stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphaThreshold {
    p: u64,
    q: u64,
}

/// Validation errors for [`AlphaThreshold::new`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaError {
    ZeroNumerator,
    ZeroDenominator,
    /// Thresholds above 1 are meaningless for coverage fractions.
    AboveOne,
}

impl core::fmt::Display for AlphaError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AlphaError::ZeroNumerator => write!(f, "alpha numerator must be positive"),
            AlphaError::ZeroDenominator => write!(f, "alpha denominator must be positive"),
            AlphaError::AboveOne => write!(f, "alpha must satisfy p <= q"),
        }
    }
}

impl AlphaThreshold {
    /// Builds `p/q`, reducing by the greatest common divisor.
    pub fn new(p: u64, q: u64) -> Result<Self, AlphaError> {
        if p == 0 {
            return Err(AlphaError::ZeroNumerator);
        }
        if q == 0 {
            return Err(AlphaError::ZeroDenominator);
        }
        if p > q {
            return Err(AlphaError::AboveOne);
        }
        let g = gcd(p, q);
        Ok(AlphaThreshold { p: p / g, q: q / g })
    }

    #[must_use]
    pub fn numerator(&self) -> u64 {
        self.p
    }

    #[must_use]
    pub fn denominator(&self) -> u64 {
        self.q
    }

    /// Smallest integer coverage `c` with `c·q ≥ p·n`, i.e. `⌈p·n/q⌉`.
    #[must_use]
    pub fn required(&self, n: usize) -> usize {
        ((self.p as u128 * n as u128).div_ceil(self.q as u128)) as usize
    }
}

impl core::fmt::Display for AlphaThreshold {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// What a [`Certificate`] witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// Minimum dominating set.
    Gamma,
    /// Minimum set reaching the queried coverage threshold.
    PartialDom,
    /// Maximum packing (pairwise distance ≥ 3).
    Packing,
}

impl CertificateKind {
    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            CertificateKind::Gamma => "Gamma",
            CertificateKind::PartialDom => "PartialDom",
            CertificateKind::Packing => "Packing",
        }
    }
}

/// A witness set together with the verified quantity it attains. Every
/// certificate self-verifies: re-running [`Graph::cover`] on the witness
/// reproduces `coverage`, and a pairwise distance check validates packings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub witness: VertexSet,
    /// `|witness|`.
    pub value: usize,
    /// `|N[witness]|`; equals `n` for `Gamma` certificates.
    pub coverage: usize,
}

/// Cooperative cancellation for long solves. Implementations must be cheap;
/// the solvers poll every few thousand search nodes.
pub trait Interrupt {
    fn should_stop(&self) -> bool;
}

/// The no-op interrupt: never stops.
#[derive(Clone, Copy, Debug, Default)]
pub struct Never;

impl Interrupt for Never {
    #[inline]
    fn should_stop(&self) -> bool {
        false
    }
}

/// A solve was cancelled by its [`Interrupt`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveAborted;

impl core::fmt::Display for SolveAborted {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "solve cancelled by interrupt")
    }
}

/// Exact domination number with witness. Total function of the graph.
#[must_use]
pub fn gamma_exact(g: &Graph) -> Certificate {
    gamma_exact_with(g, &Never).expect("Never interrupt cannot abort")
}

/// [`gamma_exact`] with cooperative cancellation.
pub fn gamma_exact_with<I: Interrupt>(g: &Graph, stop: &I) -> Result<Certificate, SolveAborted> {
    let witness = minimum_dominating(g, stop)?;
    Ok(Certificate {
        kind: CertificateKind::Gamma,
        value: witness.count(),
        coverage: g.n(),
        witness,
    })
}

/// Exact partial domination: the minimum size of a set whose closed
/// neighborhood reaches `alpha.required(n)` vertices.
#[must_use]
pub fn pd_exact(g: &Graph, alpha: AlphaThreshold) -> Certificate {
    pd_exact_with(g, alpha, &Never).expect("Never interrupt cannot abort")
}

/// [`pd_exact`] with cooperative cancellation.
pub fn pd_exact_with<I: Interrupt>(
    g: &Graph,
    alpha: AlphaThreshold,
    stop: &I,
) -> Result<Certificate, SolveAborted> {
    let n = g.n();
    let required = alpha.required(n);
    let witness = if required == n {
        // Full coverage demanded: the dedicated domination search has much
        // stronger branching (undominated-vertex covering) than the generic
        // include/exclude search.
        minimum_dominating(g, stop)?
    } else {
        minimum_partial(g, required, stop)?
    };
    let coverage = g.cover(&witness).dom_count;
    debug_assert!(coverage >= required);
    Ok(Certificate {
        kind: CertificateKind::PartialDom,
        value: witness.count(),
        coverage,
        witness,
    })
}

/// Exact packing number: maximum set of vertices pairwise at distance ≥ 3,
/// computed as a maximum independent set of the square graph.
#[must_use]
pub fn rho_exact(g: &Graph) -> Certificate {
    rho_exact_with(g, &Never).expect("Never interrupt cannot abort")
}

/// [`rho_exact`] with cooperative cancellation.
pub fn rho_exact_with<I: Interrupt>(g: &Graph, stop: &I) -> Result<Certificate, SolveAborted> {
    let witness = maximum_square_independent(g, stop)?;
    Ok(Certificate {
        kind: CertificateKind::Packing,
        value: witness.count(),
        coverage: g.cover(&witness).dom_count,
        witness,
    })
}

// ---------------------------------------------------------------------------
// Shared greedy building blocks (also used by the constructive module).

/// Greedy dominating set: repeatedly take the lowest-index vertex of maximum
/// marginal coverage until everything is dominated.
#[must_use]
pub(crate) fn greedy_dominating(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut set = VertexSet::empty(n);
    let mut covered = VertexSet::empty(n);
    while covered.count() < n {
        let (v, _) = best_marginal(g, &covered, None).expect("uncovered vertices remain");
        set.insert(v);
        covered.union_with(g.closed_neighbors(v));
    }
    set
}

/// Lowest-index vertex maximizing `|N[v] \ covered|` (skipping `excluded`),
/// or `None` when every such marginal is zero.
pub(crate) fn best_marginal(
    g: &Graph,
    covered: &VertexSet,
    excluded: Option<&VertexSet>,
) -> Option<(u16, usize)> {
    let mut best: Option<(u16, usize)> = None;
    for v in 0..g.n() as u16 {
        if excluded.is_some_and(|e| e.contains(v)) {
            continue;
        }
        let m = g.closed_neighbors(v).difference(covered).count();
        if m > 0 && best.is_none_or(|(_, bm)| m > bm) {
            best = Some((v, m));
        }
    }
    best
}

/// Drops redundant vertices (ascending index, rescanning after each removal)
/// while the set still dominates everything.
#[must_use]
pub(crate) fn inclusion_minimalize(g: &Graph, mut set: VertexSet) -> VertexSet {
    let n = g.n();
    'scan: loop {
        let snapshot = set;
        for v in snapshot.iter() {
            let mut trial = set;
            trial.remove(v);
            if g.cover(&trial).dom_count == n {
                set = trial;
                continue 'scan;
            }
        }
        return set;
    }
}

// ---------------------------------------------------------------------------
// Minimum dominating set search.

// Poll the interrupt at the first node and every 1024 nodes after it.
const INTERRUPT_MASK: u64 = 0x3ff;
const INTERRUPT_PHASE: u64 = 1;

struct DomSearch<'a, I: Interrupt> {
    g: &'a Graph,
    n: usize,
    stop: &'a I,
    nodes: u64,
    aborted: bool,
    /// Closed neighborhoods in the square graph, for the packing bound.
    sq_closed: Vec<VertexSet>,
}

impl<'a, I: Interrupt> DomSearch<'a, I> {
    fn new(g: &'a Graph, stop: &'a I) -> Self {
        let sq = g.square();
        let sq_closed = (0..g.n() as u16)
            .map(|v| *sq.closed_neighbors(v))
            .collect();
        DomSearch {
            g,
            n: g.n(),
            stop,
            nodes: 0,
            aborted: false,
            sq_closed,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & INTERRUPT_MASK == INTERRUPT_PHASE && self.stop.should_stop() {
            self.aborted = true;
        }
        self.aborted
    }

    /// Greedy packing of the region `within`: a lower bound on how many
    /// more dominators any solution needs, because closed neighborhoods of
    /// pairwise distance-≥3 vertices are disjoint.
    fn packing_bound(&self, within: &VertexSet) -> usize {
        let mut blocked = VertexSet::empty(self.n);
        let mut count = 0;
        for u in within.iter() {
            if !blocked.contains(u) {
                count += 1;
                blocked.union_with(&self.sq_closed[u as usize]);
            }
        }
        count
    }

    /// True when no selection of `budget` non-excluded vertices can cover
    /// all of `undominated` (sum of the `budget` largest marginals).
    fn coverage_bound_fails(
        &self,
        covered: &VertexSet,
        excluded: &VertexSet,
        undominated_count: usize,
        budget: usize,
    ) -> bool {
        let mut marginals: Vec<usize> = Vec::with_capacity(self.n);
        for v in 0..self.n as u16 {
            if !excluded.contains(v) {
                let m = self.g.closed_neighbors(v).difference(covered).count();
                if m > 0 {
                    marginals.push(m);
                }
            }
        }
        marginals.sort_unstable_by(|a, b| b.cmp(a));
        let reachable: usize = marginals.iter().take(budget).sum();
        reachable < undominated_count
    }

    /// Depth-first search for a dominating extension of `chosen` using at
    /// most `budget` more vertices. On success, `chosen` holds the witness.
    fn dfs(
        &mut self,
        mut covered: VertexSet,
        mut excluded: VertexSet,
        chosen: &mut Vec<u16>,
        mut budget: usize,
    ) -> bool {
        if self.tick() {
            return false;
        }
        let mark = chosen.len();

        // Unit propagation: an undominated vertex with a single remaining
        // dominator candidate forces that candidate.
        let branch_vertex = loop {
            if covered.count() == self.n {
                return true;
            }
            if budget == 0 {
                chosen.truncate(mark);
                return false;
            }
            let undominated = covered.complement();
            let mut forced: Option<u16> = None;
            let mut branch: Option<(u16, usize)> = None;
            for u in undominated.iter() {
                let avail = self.g.closed_neighbors(u).difference(&excluded);
                match avail.count() {
                    0 => {
                        chosen.truncate(mark);
                        return false;
                    }
                    1 => {
                        forced = Some(avail.first().expect("count is 1"));
                        break;
                    }
                    c => {
                        if branch.is_none_or(|(_, bc)| c < bc) {
                            branch = Some((u, c));
                        }
                    }
                }
            }
            if let Some(f) = forced {
                chosen.push(f);
                covered.union_with(self.g.closed_neighbors(f));
                budget -= 1;
                continue;
            }
            break branch.expect("undominated vertices remain").0;
        };

        let undominated = covered.complement();
        let need = undominated.count();
        if self.packing_bound(&undominated) > budget
            || self.coverage_bound_fails(&covered, &excluded, need, budget)
        {
            chosen.truncate(mark);
            return false;
        }

        // Cover the branch vertex: one of its remaining candidates must be
        // in the solution. Candidates by marginal coverage descending,
        // index ascending; each branch excludes its predecessors.
        let mut candidates: Vec<(usize, u16)> = self
            .g
            .closed_neighbors(branch_vertex)
            .difference(&excluded)
            .iter()
            .map(|c| {
                (
                    self.g.closed_neighbors(c).difference(&covered).count(),
                    c,
                )
            })
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, c) in candidates {
            chosen.push(c);
            let next_covered = covered.union(self.g.closed_neighbors(c));
            if self.dfs(next_covered, excluded, chosen, budget - 1) {
                return true;
            }
            chosen.pop();
            if self.aborted {
                chosen.truncate(mark);
                return false;
            }
            excluded.insert(c);
        }
        chosen.truncate(mark);
        false
    }
}

fn minimum_dominating<I: Interrupt>(g: &Graph, stop: &I) -> Result<VertexSet, SolveAborted> {
    let n = g.n();
    let greedy = inclusion_minimalize(g, greedy_dominating(g));
    let max_closed = (0..n as u16).map(|v| g.degree(v) + 1).max().unwrap_or(1);
    let mut search = DomSearch::new(g, stop);
    let lower = search
        .packing_bound(&VertexSet::full(n))
        .max(n.div_ceil(max_closed));
    let upper = greedy.count();
    for budget in lower..upper {
        let mut chosen = Vec::with_capacity(budget);
        let found = search.dfs(
            VertexSet::empty(n),
            VertexSet::empty(n),
            &mut chosen,
            budget,
        );
        if search.aborted {
            return Err(SolveAborted);
        }
        if found {
            let witness = VertexSet::from_indices(n, chosen.iter().copied());
            debug_assert_eq!(g.cover(&witness).dom_count, n);
            return Ok(witness);
        }
    }
    Ok(greedy)
}

// ---------------------------------------------------------------------------
// Minimum partial domination search.

struct PartialSearch<'a, I: Interrupt> {
    g: &'a Graph,
    n: usize,
    required: usize,
    stop: &'a I,
    nodes: u64,
    aborted: bool,
}

impl<'a, I: Interrupt> PartialSearch<'a, I> {
    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & INTERRUPT_MASK == INTERRUPT_PHASE && self.stop.should_stop() {
            self.aborted = true;
        }
        self.aborted
    }

    fn dfs(
        &mut self,
        covered: VertexSet,
        mut excluded: VertexSet,
        chosen: &mut Vec<u16>,
        budget: usize,
    ) -> bool {
        if self.tick() {
            return false;
        }
        let have = covered.count();
        if have >= self.required {
            return true;
        }
        if budget == 0 {
            return false;
        }

        // Non-excluded candidates with positive marginal coverage, best
        // first (ties to the lowest index).
        let mut candidates: Vec<(usize, u16)> = Vec::new();
        for v in 0..self.n as u16 {
            if !excluded.contains(v) {
                let m = self.g.closed_neighbors(v).difference(&covered).count();
                if m > 0 {
                    candidates.push((m, v));
                }
            }
        }
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let reachable: usize = candidates.iter().take(budget).map(|&(m, _)| m).sum();
        if have + reachable < self.required {
            return false;
        }

        let (_, best) = candidates[0];
        // Include the best candidate…
        chosen.push(best);
        if self.dfs(
            covered.union(self.g.closed_neighbors(best)),
            excluded,
            chosen,
            budget - 1,
        ) {
            return true;
        }
        chosen.pop();
        if self.aborted {
            return false;
        }
        // …or commit to never using it.
        excluded.insert(best);
        self.dfs(covered, excluded, chosen, budget)
    }
}

/// Greedy partial cover reaching `required`, then pruned of redundancies.
fn greedy_partial_cover(g: &Graph, required: usize) -> VertexSet {
    let n = g.n();
    let mut set = VertexSet::empty(n);
    let mut covered = VertexSet::empty(n);
    while covered.count() < required {
        let (v, _) = best_marginal(g, &covered, None).expect("required ≤ n is reachable");
        set.insert(v);
        covered.union_with(g.closed_neighbors(v));
    }
    // Drop vertices whose removal keeps coverage at or above the threshold.
    'scan: loop {
        let snapshot = set;
        for v in snapshot.iter() {
            let mut trial = set;
            trial.remove(v);
            if g.cover(&trial).dom_count >= required {
                set = trial;
                continue 'scan;
            }
        }
        return set;
    }
}

fn minimum_partial<I: Interrupt>(
    g: &Graph,
    required: usize,
    stop: &I,
) -> Result<VertexSet, SolveAborted> {
    let n = g.n();
    debug_assert!(required < n);
    if required == 0 {
        return Ok(VertexSet::empty(n));
    }
    let greedy = greedy_partial_cover(g, required);
    let max_closed = (0..n as u16).map(|v| g.degree(v) + 1).max().unwrap_or(1);
    let lower = required.div_ceil(max_closed).max(1);
    let upper = greedy.count();
    let mut search = PartialSearch {
        g,
        n,
        required,
        stop,
        nodes: 0,
        aborted: false,
    };
    for budget in lower..upper {
        let mut chosen = Vec::with_capacity(budget);
        let found = search.dfs(
            VertexSet::empty(n),
            VertexSet::empty(n),
            &mut chosen,
            budget,
        );
        if search.aborted {
            return Err(SolveAborted);
        }
        if found {
            return Ok(VertexSet::from_indices(n, chosen.iter().copied()));
        }
    }
    Ok(greedy)
}

// ---------------------------------------------------------------------------
// Maximum packing search (independent set in the square graph).

fn maximum_square_independent<I: Interrupt>(
    g: &Graph,
    stop: &I,
) -> Result<VertexSet, SolveAborted> {
    let n = g.n();
    let sq = g.square();
    let sq_closed: Vec<VertexSet> = (0..n as u16).map(|v| *sq.closed_neighbors(v)).collect();

    // Greedy incumbent: repeatedly take the lowest-index remaining vertex.
    let mut best = VertexSet::empty(n);
    let mut pool = VertexSet::full(n);
    while let Some(v) = pool.first() {
        best.insert(v);
        pool.difference_with(&sq_closed[v as usize]);
    }

    struct Mis<'a, I: Interrupt> {
        sq: &'a Graph,
        sq_closed: &'a [VertexSet],
        best: VertexSet,
        best_size: usize,
        stop: &'a I,
        nodes: u64,
        aborted: bool,
    }
    impl<I: Interrupt> Mis<'_, I> {
        fn dfs(&mut self, pool: VertexSet, current: VertexSet, size: usize) {
            self.nodes += 1;
            if self.nodes & INTERRUPT_MASK == INTERRUPT_PHASE && self.stop.should_stop() {
                self.aborted = true;
            }
            if self.aborted {
                return;
            }
            if size + pool.count() <= self.best_size {
                return;
            }
            // Pivot: highest degree within the pool, ties to lowest index.
            let mut pivot: Option<(usize, u16)> = None;
            for v in pool.iter() {
                let d = self.sq.neighbors(v).intersection_count(&pool);
                if pivot.is_none_or(|(bd, _)| d > bd) {
                    pivot = Some((d, v));
                }
            }
            let Some((_, v)) = pivot else {
                // Pool empty: candidate complete.
                if size > self.best_size {
                    self.best = current;
                    self.best_size = size;
                }
                return;
            };
            let mut with = current;
            with.insert(v);
            self.dfs(pool.difference(&self.sq_closed[v as usize]), with, size + 1);
            let mut without = pool;
            without.remove(v);
            self.dfs(without, current, size);
        }
    }

    let mut mis = Mis {
        sq: &sq,
        sq_closed: &sq_closed,
        best_size: best.count(),
        best,
        stop,
        nodes: 0,
        aborted: false,
    };
    mis.dfs(VertexSet::full(n), VertexSet::empty(n), 0);
    if mis.aborted {
        return Err(SolveAborted);
    }
    Ok(mis.best)
}

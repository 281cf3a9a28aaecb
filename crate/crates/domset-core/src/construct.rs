//! Constructive partial-domination machinery for graphs of minimum degree
//! at least 3: greedy extension driven by an averaging lemma, the partition
//! of the vertex set induced by a normalized minimum dominating set, and
//! the one-third constructors that pick ⌊n/3⌋ part centers to reach a
//! regime-specific coverage fraction.

use alloc::vec::Vec;

use crate::bits::VertexSet;
use crate::graph::Graph;
use crate::private::{first_epn_empty, private_neighborhoods, BcError};
use crate::solve::{
    best_marginal, gamma_exact_with, greedy_dominating, inclusion_minimalize, pd_exact,
    pd_exact_with, AlphaThreshold, Certificate, CertificateKind, Interrupt, Never, SolveAborted,
};

/// The queried graph has a vertex of degree below 3, outside the scope of
/// the constructive guarantees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotSupercubic;

impl core::fmt::Display for NotSupercubic {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "graph has minimum degree below 3")
    }
}

/// Picks a vertex whose closed neighborhood meets the undominated region
/// `U_S = V \ N[S]` in at least `k + 1` vertices, if one exists.
///
/// Returns the lowest-index maximizer of `|N[c] ∩ U_S|` over candidates
/// `c ∉ s` (equivalently, over the boundary of `s` together with `U_S` —
/// vertices inside `s` have zero marginal), or `None` when even the
/// maximizer covers at most `k` undominated vertices. Whenever
/// `4·|U_S| > k·(n − |s|)` holds on a graph of minimum degree ≥ 3, an
/// averaging argument guarantees the returned vertex exists.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn lemma_extend(g: &Graph, s: &VertexSet, k: usize) -> Result<Option<u16>, NotSupercubic> {
    assert!(k > 0, "coverage demand must be positive");
    if !g.classify().is_supercubic {
        return Err(NotSupercubic);
    }
    let n = g.n();
    let undominated = g.cover(s).undominated;
    if undominated.is_empty() {
        return Ok(None);
    }
    let mut best: Option<(usize, u16)> = None;
    for c in 0..n as u16 {
        if !s.contains(c) {
            let m = g.closed_neighbors(c).intersection_count(&undominated);
            if best.is_none_or(|(bm, _)| m > bm) {
                best = Some((m, c));
            }
        }
    }
    let (m, c) = best.expect("an undominated vertex is itself a candidate");
    if 4 * undominated.count() > k * (n - s.count()) {
        debug_assert!(m >= k + 1, "averaging bound violated at minimum degree ≥ 3");
    }
    Ok((m >= k + 1).then_some(c))
}

/// Outcome of [`greedy_partial`]: the grown set, its closed-neighborhood
/// coverage, and whether the coverage target was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRun {
    pub witness: VertexSet,
    pub coverage: usize,
    pub achieved: bool,
}

/// Order bound for the exact fallback inside [`greedy_partial`].
const SMALL_ORDER: usize = 14;

/// Grows a set by repeatedly adding the lowest-index vertex of maximum
/// marginal coverage, until the budget is spent, the coverage target is
/// reached, or coverage saturates.
///
/// For orders ≤ 14 with `budget = ⌊n/3⌋` and `target = ⌈7n/8⌉` — the
/// parameters of the small-order coverage guarantee — a non-achieving
/// greedy run falls back to the exact partial-domination solver, which is
/// guaranteed to achieve the target within budget on graphs of minimum
/// degree ≥ 3.
pub fn greedy_partial(g: &Graph, budget: usize, target: usize) -> Result<PartialRun, NotSupercubic> {
    if !g.classify().is_supercubic {
        return Err(NotSupercubic);
    }
    let n = g.n();
    let mut witness = VertexSet::empty(n);
    let mut covered = VertexSet::empty(n);
    while witness.count() < budget && covered.count() < target {
        let Some((v, _)) = best_marginal(g, &covered, None) else {
            break; // coverage saturated below the target
        };
        witness.insert(v);
        covered.union_with(g.closed_neighbors(v));
    }
    let coverage = covered.count();
    let seven_eighths = AlphaThreshold::new(7, 8).expect("7/8 is a valid threshold");
    if coverage < target
        && n <= SMALL_ORDER
        && budget == n / 3
        && target == seven_eighths.required(n)
    {
        let cert = pd_exact(g, seven_eighths);
        debug_assert!(cert.value <= budget);
        return Ok(PartialRun {
            achieved: cert.coverage >= target,
            witness: cert.witness,
            coverage: cert.coverage,
        });
    }
    Ok(PartialRun {
        witness,
        coverage,
        achieved: coverage >= target,
    })
}

/// One block of a [`Partition`]: a dominating-set member and the vertices
/// assigned to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub center: u16,
    pub members: VertexSet,
}

/// A partition of the vertex set into blocks `V_i ⊆ N[v_i]`, one per
/// member `v_i` of a dominating set, ordered by size descending (ties by
/// center index ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<Part>,
}

impl Partition {
    #[must_use]
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part centers in part order (largest part first).
    pub fn centers(&self) -> impl Iterator<Item = u16> + '_ {
        self.parts.iter().map(|p| p.center)
    }
}

/// Why [`build_partition`] rejected its input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// The set does not dominate the graph, so some vertex has no block.
    NotDominating,
    /// A member (the lowest-index offender) has no external private
    /// neighbor; the partition's size guarantee needs one per member.
    EpnEmpty(u16),
}

impl core::fmt::Display for PartitionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PartitionError::NotDominating => write!(f, "set does not dominate the graph"),
            PartitionError::EpnEmpty(v) => {
                write!(f, "member {v} has no external private neighbor")
            }
        }
    }
}

/// Partitions the vertex set by a dominating set `d` in which every member
/// has an external private neighbor: each member anchors its own block,
/// and every other vertex joins the block of its lowest-index dominator.
/// External private neighbors of `v` land in `v`'s block automatically
/// (their only dominator is `v`), so each block has at least 2 vertices.
pub fn build_partition(g: &Graph, d: &VertexSet) -> Result<Partition, PartitionError> {
    let n = g.n();
    if g.cover(d).dom_count != n {
        return Err(PartitionError::NotDominating);
    }
    if let Some(view) = private_neighborhoods(g, d)
        .iter()
        .find(|view| view.epn.is_empty())
    {
        return Err(PartitionError::EpnEmpty(view.vertex));
    }
    let centers: Vec<u16> = d.iter().collect();
    let mut parts: Vec<Part> = centers
        .iter()
        .map(|&center| Part {
            center,
            members: VertexSet::from_indices(n, [center]),
        })
        .collect();
    for w in 0..n as u16 {
        if !d.contains(w) {
            let dominator = g
                .neighbors(w)
                .intersection(d)
                .first()
                .expect("d dominates w, and w ∉ d, so an adjacent member exists");
            let slot = centers
                .binary_search(&dominator)
                .expect("dominator is a member of d");
            parts[slot].members.insert(w);
        }
    }
    parts.sort_by(|a, b| {
        b.members
            .count()
            .cmp(&a.members.count())
            .then(a.center.cmp(&b.center))
    });
    Ok(Partition { parts })
}

/// The three guarantee regimes of the one-third constructors: each pairs a
/// coverage fraction with the graph class whose domination bound makes the
/// ⌊n/3⌋ budget sufficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructRegime {
    /// Coverage 7/8 on any graph of minimum degree ≥ 3.
    Generic78,
    /// Coverage 13/14 on connected cubic graphs of order ≥ 28.
    Cubic1314,
    /// Coverage 9/10 on graphs of minimum degree ≥ 3 and order ≥ 60.
    Super910,
}

impl ConstructRegime {
    pub const ALL: [ConstructRegime; 3] = [
        ConstructRegime::Generic78,
        ConstructRegime::Cubic1314,
        ConstructRegime::Super910,
    ];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            ConstructRegime::Generic78 => "generic78",
            ConstructRegime::Cubic1314 => "cubic1314",
            ConstructRegime::Super910 => "super910",
        }
    }

    /// Parses the CLI spelling of a regime (ASCII case-insensitive).
    #[must_use]
    pub fn parse(text: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|r| text.eq_ignore_ascii_case(r.name()))
    }

    /// The coverage fraction this regime guarantees.
    #[must_use]
    pub fn alpha(self) -> AlphaThreshold {
        let (p, q) = match self {
            ConstructRegime::Generic78 => (7, 8),
            ConstructRegime::Cubic1314 => (13, 14),
            ConstructRegime::Super910 => (9, 10),
        };
        AlphaThreshold::new(p, q).expect("regime fractions are valid")
    }

    /// Upper bound on the dominating-set size that the regime's guarantee
    /// chain relies on: ⌊5n/14⌋ for the connected-cubic regime, ⌊3n/8⌋
    /// otherwise.
    #[must_use]
    pub fn gamma_gate(self, n: usize) -> usize {
        match self {
            ConstructRegime::Cubic1314 => 5 * n / 14,
            ConstructRegime::Generic78 | ConstructRegime::Super910 => 3 * n / 8,
        }
    }

    /// Minimum order the regime's guarantee needs (1 = no constraint).
    #[must_use]
    fn min_order(self) -> usize {
        match self {
            ConstructRegime::Generic78 => 1,
            ConstructRegime::Cubic1314 => 28,
            ConstructRegime::Super910 => 60,
        }
    }

    fn check_applicable(self, g: &Graph) -> Result<(), ConstructError> {
        let class = g.classify();
        if !class.is_supercubic {
            return Err(ConstructError::NotSupercubic);
        }
        if self == ConstructRegime::Cubic1314 && !(class.is_cubic && class.is_connected) {
            return Err(ConstructError::NotConnectedCubic);
        }
        if usize::from(class.n) < self.min_order() {
            return Err(ConstructError::OrderBelowRegime {
                required: self.min_order(),
                got: usize::from(class.n),
            });
        }
        Ok(())
    }
}

impl core::fmt::Display for ConstructRegime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of [`one_third_construct`]: a certificate (witness of at most
/// ⌊n/3⌋ vertices with its re-counted coverage) plus the regime and a flag
/// recording that the size and coverage guarantees were re-verified
/// against an independent coverage count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub regime: ConstructRegime,
    pub certificate: Certificate,
    pub guarantee_chain_verified: bool,
}

/// Why [`one_third_construct`] refused or abandoned a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructError {
    /// Minimum degree below 3.
    NotSupercubic,
    /// The connected-cubic regime was asked for on a graph that is not
    /// connected and 3-regular.
    NotConnectedCubic,
    /// The graph is smaller than the regime's guarantee requires.
    OrderBelowRegime { required: usize, got: usize },
    /// The dominating set in hand exceeds the regime's bound, so the
    /// guarantee chain does not apply; reported rather than ignored.
    GammaGateExceeded { gate: usize, size: usize },
    /// The dominating set could not be normalized.
    Normalization(BcError),
    /// The underlying exact solve was cancelled.
    Aborted,
}

impl core::fmt::Display for ConstructError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConstructError::NotSupercubic => write!(f, "graph has minimum degree below 3"),
            ConstructError::NotConnectedCubic => {
                write!(f, "regime needs a connected cubic graph")
            }
            ConstructError::OrderBelowRegime { required, got } => {
                write!(f, "regime needs order ≥ {required}, graph has {got}")
            }
            ConstructError::GammaGateExceeded { gate, size } => write!(
                f,
                "dominating set of size {size} exceeds the regime's bound {gate}"
            ),
            ConstructError::Normalization(e) => write!(f, "normalization failed: {e}"),
            ConstructError::Aborted => write!(f, "construction cancelled by interrupt"),
        }
    }
}

impl From<SolveAborted> for ConstructError {
    fn from(_: SolveAborted) -> Self {
        ConstructError::Aborted
    }
}

/// Order bound below which the dominating set is found by exact search.
const EXACT_GAMMA_UP_TO: usize = 40;

/// Rewrites a dominating set so every member keeps an external private
/// neighbor, without assuming minimum cardinality.
///
/// The minimum-set swap argument ("epn-free forces pn = {v}") only needs
/// inclusion-minimality, but a swap can break that invariant, so it is
/// re-established after every step: an epn-free member of an
/// inclusion-minimal set is its own sole private neighbor, hence has no
/// neighbor inside the set, and trading it for its lowest-index neighbor
/// keeps the set dominating without shrinking it. The result never exceeds
/// the input size (re-minimalization may drop redundant members). The same
/// iteration cap as the minimum-set routine guards against cycling.
fn normalize_minimal(g: &Graph, d: VertexSet) -> Result<VertexSet, BcError> {
    let n = g.n();
    let mut current = inclusion_minimalize(g, d);
    for _ in 0..n * n {
        let Some(v) = first_epn_empty(g, &current) else {
            return Ok(current);
        };
        let u = g
            .neighbors(v)
            .first()
            .expect("minimum degree >= 3 leaves no isolated vertex");
        debug_assert!(
            !current.contains(u),
            "epn-free member of an inclusion-minimal set has no set neighbor"
        );
        current.remove(v);
        current.insert(u);
        debug_assert_eq!(g.cover(&current).dom_count, n, "swap keeps domination");
        current = inclusion_minimalize(g, current);
    }
    if first_epn_empty(g, &current).is_none() {
        return Ok(current);
    }
    Err(BcError::NormalizationFailed)
}

/// Builds a set of at most ⌊n/3⌋ vertices dominating at least the regime's
/// fraction of the graph.
///
/// Algorithm: orders ≤ 14 are solved exactly for the 7/8 threshold.
/// Larger orders compute a minimum dominating set `D` (exact search up to
/// order 40, greedy + inclusion-minimalization above), check it against
/// the regime's size gate, and normalize it so every member keeps an
/// external private neighbor. If `|D| ≤ ⌊n/3⌋` then `D` itself is the
/// witness (it covers everything); otherwise the vertex set is partitioned
/// by `D` and the centers of the ⌊n/3⌋ largest parts are returned — parts
/// of size ≥ 2 make those centers cover enough of the graph whenever the
/// size gate held.
pub fn one_third_construct(g: &Graph, regime: ConstructRegime) -> Result<Construction, ConstructError> {
    one_third_construct_with(g, regime, &Never)
}

/// [`one_third_construct`] with cooperative cancellation of the underlying
/// exact solves.
pub fn one_third_construct_with<I: Interrupt>(
    g: &Graph,
    regime: ConstructRegime,
    stop: &I,
) -> Result<Construction, ConstructError> {
    regime.check_applicable(g)?;
    let n = g.n();
    let alpha = regime.alpha();

    if n <= SMALL_ORDER {
        // Only the 7/8 regime admits orders this small; solve it exactly.
        let certificate = pd_exact_with(g, alpha, stop)?;
        return Ok(finish(g, regime, certificate));
    }

    let rough = if n <= EXACT_GAMMA_UP_TO {
        gamma_exact_with(g, stop)?.witness
    } else {
        inclusion_minimalize(g, greedy_dominating(g))
    };
    let gate = regime.gamma_gate(n);
    if rough.count() > gate {
        return Err(ConstructError::GammaGateExceeded {
            gate,
            size: rough.count(),
        });
    }
    let d = normalize_minimal(g, rough).map_err(ConstructError::Normalization)?;

    let k1 = n / 3;
    let witness = if d.count() <= k1 {
        d
    } else {
        let partition =
            build_partition(g, &d).expect("normalized dominating set satisfies the precondition");
        VertexSet::from_indices(n, partition.centers().take(k1))
    };
    let coverage = g.cover(&witness).dom_count;
    let certificate = Certificate {
        kind: CertificateKind::PartialDom,
        value: witness.count(),
        coverage,
        witness,
    };
    Ok(finish(g, regime, certificate))
}

/// Re-verifies the headline guarantees with an independent coverage count
/// and packages the result.
fn finish(g: &Graph, regime: ConstructRegime, certificate: Certificate) -> Construction {
    let n = g.n();
    let alpha = regime.alpha();
    let recount = g.cover(&certificate.witness).dom_count;
    let size_ok = certificate.value <= n / 3;
    let coverage_ok = alpha.denominator() as u128 * recount as u128
        >= alpha.numerator() as u128 * n as u128;
    Construction {
        regime,
        guarantee_chain_verified: size_ok && coverage_ok && recount == certificate.coverage,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{named_graph, NamedGraphId};
    use crate::gen::random_cubic;
    use crate::solve::gamma_exact;

    /// 4-regular circulant on `n` vertices: i ~ i±1, i±2 (mod n).
    fn circulant_two(n: u16) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n {
            edges.push((i, (i + 1) % n));
            edges.push((i, (i + 2) % n));
        }
        Graph::from_edges(n as usize, &edges).unwrap()
    }

    #[test]
    fn lemma_extend_from_empty_set() {
        // With S = ∅ every vertex is undominated and any closed
        // neighborhood covers ≥ 4 vertices, so k = 3 is always met.
        let g = circulant_two(11);
        let picked = lemma_extend(&g, &VertexSet::empty(11), 3).unwrap().unwrap();
        assert_eq!(picked, 0); // all marginals tie at 5, lowest index wins
        assert_eq!(g.closed_neighbors(0).count(), 5);
    }

    #[test]
    fn lemma_extend_on_cubic_order_eight() {
        // A2 with S = {5, 7}: N[S] covers 5 vertices, leaving U_S of size
        // 3, and 4·3 > 1·6, so some vertex must cover ≥ 2 of U_S.
        let g = named_graph(NamedGraphId::A2);
        let s = VertexSet::from_indices(8, [5, 7]);
        assert_eq!(g.cover(&s).dom_count, 5);
        let picked = lemma_extend(&g, &s, 1).unwrap().unwrap();
        assert_eq!(picked, 2); // N[2] = {1,2,3,6} covers all of U_S = {1,2,3}
        let undominated = g.cover(&s).undominated;
        assert!(g.closed_neighbors(picked).intersection_count(&undominated) >= 2);
    }

    #[test]
    fn lemma_extend_nothing_to_cover() {
        let g = named_graph(NamedGraphId::A1);
        let d = gamma_exact(&g).witness;
        assert_eq!(lemma_extend(&g, &d, 1), Ok(None));
    }

    #[test]
    fn lemma_extend_needs_min_degree_three() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(lemma_extend(&path, &VertexSet::empty(4), 1), Err(NotSupercubic));
    }

    #[test]
    fn greedy_partial_on_k4() {
        let g = named_graph(NamedGraphId::K4);
        let run = greedy_partial(&g, 1, 4).unwrap();
        assert!(run.achieved);
        assert_eq!(run.coverage, 4);
        assert_eq!(run.witness.count(), 1);
    }

    #[test]
    fn greedy_partial_stages_on_order_eleven() {
        // Greedy growth is a chain: the budget-b run extends the budget-(b−1)
        // run, with staged coverage at least 5, 8, 10.
        let g = circulant_two(11);
        let stages: Vec<PartialRun> = (1..=3)
            .map(|b| greedy_partial(&g, b, 10).unwrap())
            .collect();
        assert!(stages[0].coverage >= 5);
        assert!(stages[1].coverage >= 8);
        assert!(stages[2].coverage >= 10);
        assert!(stages[2].achieved);
        assert!(stages[0].witness.is_subset_of(&stages[1].witness));
    }

    #[test]
    fn greedy_partial_exact_fallback_on_cubic_fourteen() {
        // Budget ⌊14/3⌋ = 4 and target ⌈7·14/8⌉ = 13: achieved on every
        // connected cubic graph of order 14, by greedy or by the fallback.
        for seed in 0..6u64 {
            let g = random_cubic(14, seed, true).unwrap();
            let run = greedy_partial(&g, 4, 13).unwrap();
            assert!(run.achieved, "seed {seed}");
            assert!(run.witness.count() <= 4, "seed {seed}");
            assert_eq!(g.cover(&run.witness).dom_count, run.coverage, "seed {seed}");
        }
    }

    #[test]
    fn greedy_partial_saturates_below_unreachable_target() {
        let g = named_graph(NamedGraphId::K4);
        let run = greedy_partial(&g, 4, 100).unwrap();
        assert!(!run.achieved);
        assert_eq!(run.coverage, 4);
    }

    #[test]
    fn partition_of_single_dominator() {
        let g = named_graph(NamedGraphId::K4);
        let d = VertexSet::from_indices(4, [2]);
        let partition = build_partition(&g, &d).unwrap();
        assert_eq!(partition.len(), 1);
        assert_eq!(partition.parts()[0].center, 2);
        assert_eq!(partition.parts()[0].members, VertexSet::full(4));
    }

    #[test]
    fn partition_invariants_on_normalized_set() {
        use crate::private::bc_normalize;
        for id in [NamedGraphId::A1, NamedGraphId::G14_2, NamedGraphId::Petersen] {
            let g = named_graph(id);
            let n = g.n();
            let d = bc_normalize(&g, &gamma_exact(&g).witness).unwrap();
            let partition = build_partition(&g, &d).unwrap();
            assert_eq!(partition.len(), d.count(), "{id}");
            let mut seen = VertexSet::empty(n);
            let mut last_size = usize::MAX;
            for part in partition.parts() {
                assert!(d.contains(part.center), "{id}");
                assert!(part.members.contains(part.center), "{id}");
                assert!(
                    part.members.is_subset_of(g.closed_neighbors(part.center)),
                    "{id}"
                );
                assert!(part.members.count() >= 2, "{id}");
                assert!(part.members.count() <= last_size, "{id}: sorted descending");
                last_size = part.members.count();
                assert!(!seen.intersects(&part.members), "{id}: disjoint");
                seen.union_with(&part.members);
            }
            assert_eq!(seen.count(), n, "{id}: covers V");
            for view in private_neighborhoods(&g, &d) {
                let part = partition
                    .parts()
                    .iter()
                    .find(|p| p.center == view.vertex)
                    .unwrap();
                assert!(view.epn.is_subset_of(&part.members), "{id}: epn containment");
            }
        }
    }

    #[test]
    fn partition_rejects_bad_inputs() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            build_partition(&path, &VertexSet::from_indices(4, [0, 1])),
            Err(PartitionError::NotDominating)
        );
        // {0, 2} dominates the path but 0 keeps no external private
        // neighbor (vertex 1 is dominated twice).
        assert_eq!(
            build_partition(&path, &VertexSet::from_indices(4, [0, 2])),
            Err(PartitionError::EpnEmpty(0))
        );
    }

    #[test]
    fn regime_names_round_trip() {
        for regime in ConstructRegime::ALL {
            assert_eq!(ConstructRegime::parse(regime.name()), Some(regime));
        }
        assert_eq!(ConstructRegime::parse("GENERIC78"), Some(ConstructRegime::Generic78));
        assert_eq!(ConstructRegime::parse("unknown"), None);
    }

    #[test]
    fn construct_on_order_eight() {
        // ⌊8/3⌋ = 2 vertices covering ⌈7·8/8⌉ = 7 of the 8 vertices.
        let g = named_graph(NamedGraphId::A1);
        let c = one_third_construct(&g, ConstructRegime::Generic78).unwrap();
        assert_eq!(c.certificate.value, 2);
        assert_eq!(c.certificate.coverage, 7);
        assert!(c.guarantee_chain_verified);
        assert_eq!(c.regime, ConstructRegime::Generic78);
    }

    #[test]
    fn construct_matches_exact_on_small_orders() {
        use crate::solve::pd_exact;
        let alpha = ConstructRegime::Generic78.alpha();
        for id in [NamedGraphId::K4, NamedGraphId::A1, NamedGraphId::A2] {
            let g = named_graph(id);
            let c = one_third_construct(&g, ConstructRegime::Generic78).unwrap();
            let exact = pd_exact(&g, alpha);
            assert!(c.certificate.value >= exact.value, "{id}");
            assert!(c.certificate.value <= g.n() / 3, "{id}");
            assert!(exact.value <= g.n() / 3, "{id}");
        }
    }

    #[test]
    fn construct_applicability_errors() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            one_third_construct(&path, ConstructRegime::Generic78),
            Err(ConstructError::NotSupercubic)
        );
        let petersen = named_graph(NamedGraphId::Petersen);
        assert_eq!(
            one_third_construct(&petersen, ConstructRegime::Cubic1314),
            Err(ConstructError::OrderBelowRegime {
                required: 28,
                got: 10
            })
        );
        assert_eq!(
            one_third_construct(&petersen, ConstructRegime::Super910),
            Err(ConstructError::OrderBelowRegime {
                required: 60,
                got: 10
            })
        );
        // Two disjoint copies of a cubic graph of order 14: cubic, order
        // 28, but disconnected.
        let half = random_cubic(14, 5, true).unwrap();
        let mut edges: Vec<(u16, u16)> = half.edges().collect();
        edges.extend(half.edges().map(|(u, v)| (u + 14, v + 14)));
        let doubled = Graph::from_edges(28, &edges).unwrap();
        assert_eq!(
            one_third_construct(&doubled, ConstructRegime::Cubic1314),
            Err(ConstructError::NotConnectedCubic)
        );
        // The 7/8 regime accepts the disconnected graph fine.
        let c = one_third_construct(&doubled, ConstructRegime::Generic78).unwrap();
        assert!(c.certificate.value <= 28 / 3);
        assert!(8 * c.certificate.coverage >= 7 * 28);
    }

    #[test]
    fn construct_cubic_regime_on_order_thirty() {
        let g = random_cubic(30, 77, true).unwrap();
        let c = one_third_construct(&g, ConstructRegime::Cubic1314).unwrap();
        assert!(c.certificate.value <= 10);
        assert!(14 * c.certificate.coverage >= 13 * 30);
        assert!(c.guarantee_chain_verified);
        // Independent recount.
        assert_eq!(g.cover(&c.certificate.witness).dom_count, c.certificate.coverage);
    }

    #[test]
    fn construct_past_exact_range_uses_greedy_set() {
        let g = random_cubic(60, 3, true).unwrap();
        let c = one_third_construct(&g, ConstructRegime::Super910).unwrap();
        assert!(c.certificate.value <= 20);
        assert!(10 * c.certificate.coverage >= 9 * 60);
        assert!(c.guarantee_chain_verified);
    }

    #[test]
    fn construct_generic_on_mid_sizes() {
        for (n, seed) in [(16usize, 21u64), (22, 22), (40, 23)] {
            let g = random_cubic(n, seed, true).unwrap();
            let c = one_third_construct(&g, ConstructRegime::Generic78).unwrap();
            assert!(c.certificate.value <= n / 3, "n={n}");
            assert!(8 * c.certificate.coverage >= 7 * n, "n={n}");
            assert!(c.guarantee_chain_verified, "n={n}");
        }
    }
}

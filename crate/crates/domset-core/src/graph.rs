//! Immutable simple undirected graphs as adjacency bit-rows.

use alloc::vec::Vec;

use crate::bits::{VertexSet, MAX_ORDER};

/// Construction errors for [`Graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// Order outside `1..=1024`.
    OrderOutOfRange(usize),
    /// An edge endpoint is not below the order.
    VertexOutOfRange { vertex: u16, order: u16 },
    /// An edge joins a vertex to itself.
    LoopEdge(u16),
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::OrderOutOfRange(n) => {
                write!(f, "graph order {n} outside supported range 1..={MAX_ORDER}")
            }
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
        }
    }
}

/// An immutable simple undirected graph of order `1..=1024`.
///
/// Row `i` of the adjacency holds the open neighborhood `N(i)`; closed
/// neighborhoods `N[i]` are precomputed because every solver consumes them
/// in its inner loop. Symmetry and loop-freeness are enforced at
/// construction, so both are invariants of the type.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: u16,
    adj: Vec<VertexSet>,
    closed: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are idempotent;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(u16, u16)]) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let order = n as u16;
        let mut adj = alloc::vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        Ok(Self::from_rows_unchecked(adj))
    }

    /// Builds a graph from prevalidated adjacency rows (symmetric, loop-free,
    /// one row per vertex). Used by the codec and generators, which construct
    /// rows positionally.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len() as u16;
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        #[cfg(debug_assertions)]
        for (i, row) in adj.iter().enumerate() {
            for j in row.iter() {
                debug_assert!(adj[j as usize].contains(i as u16), "asymmetric edge {i}-{j}");
            }
        }
        let closed = adj
            .iter()
            .enumerate()
            .map(|(i, row)| {
                debug_assert!(!row.contains(i as u16), "loop at {i}");
                let mut c = *row;
                c.insert(i as u16);
                c
            })
            .collect();
        Graph { n, adj, closed }
    }

    /// Vertex count.
    #[inline]
    #[must_use]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    #[must_use]
    pub fn neighbors(&self, v: u16) -> &VertexSet {
        &self.adj[v as usize]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    #[must_use]
    pub fn closed_neighbors(&self, v: u16) -> &VertexSet {
        &self.closed[v as usize]
    }

    /// Degree of `v`.
    #[inline]
    #[must_use]
    pub fn degree(&self, v: u16) -> usize {
        self.adj[v as usize].count()
    }

    /// Edge test.
    #[inline]
    #[must_use]
    pub fn has_edge(&self, u: u16, v: u16) -> bool {
        self.adj[u as usize].contains(v)
    }

    /// Number of edges.
    #[must_use]
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    /// Iterates edges as `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u16, u16)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.adj[i as usize]
                .iter()
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Closed neighborhood of a set: `N[S] = ∪_{v∈S} N[v]`.
    #[must_use]
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n());
        for v in s.iter() {
            out.union_with(&self.closed[v as usize]);
        }
        out
    }

    /// Coverage of a set `S`: the dominated region `N[S]`, its boundary
    /// `N[S] \ S`, the undominated remainder, and `|N[S]|`.
    #[must_use]
    pub fn cover(&self, s: &VertexSet) -> CoverageView {
        let closed = self.closed_neighborhood_of(s);
        CoverageView {
            boundary: closed.difference(s),
            undominated: closed.complement(),
            dom_count: closed.count(),
            closed,
        }
    }

    /// True when the graph has a single connected component.
    #[must_use]
    pub fn is_connected(&self) -> bool {
        let mut visited = VertexSet::empty(self.n());
        let mut stack: Vec<u16> = alloc::vec![0];
        visited.insert(0);
        while let Some(u) = stack.pop() {
            for w in self.adj[u as usize].iter() {
                if !visited.contains(w) {
                    visited.insert(w);
                    stack.push(w);
                }
            }
        }
        visited.count() == self.n()
    }

    /// Degree-and-structure summary of the graph.
    #[must_use]
    pub fn classify(&self) -> GraphClass {
        let (mut min_d, mut max_d) = (usize::MAX, 0usize);
        for v in 0..self.n {
            let d = self.degree(v);
            min_d = min_d.min(d);
            max_d = max_d.max(d);
        }
        let is_cubic = min_d == 3 && max_d == 3;
        GraphClass {
            n: self.n,
            min_degree: min_d as u16,
            max_degree: max_d as u16,
            is_cubic,
            is_supercubic: min_d >= 3,
            is_connected: self.is_connected(),
            girth: self.girth(),
        }
    }

    /// Length of a shortest cycle, or `None` if the graph is acyclic.
    ///
    /// Breadth-first search from every vertex; a non-tree edge seen from the
    /// search rooted at a vertex on a shortest cycle reports that cycle's
    /// length exactly, so the minimum over all roots is the girth.
    #[must_use]
    pub fn girth(&self) -> Option<u32> {
        let n = self.n();
        let mut best: u32 = u32::MAX;
        let mut dist = alloc::vec![u16::MAX; n];
        let mut parent = alloc::vec![u16::MAX; n];
        let mut queue: Vec<u16> = Vec::with_capacity(n);
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = u16::MAX);
            queue.clear();
            dist[s as usize] = 0;
            parent[s as usize] = u16::MAX;
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                // Anything found at this depth can only close cycles at
                // least as long as the best already known.
                if (dist[u as usize] as u32) * 2 >= best {
                    break;
                }
                for w in self.adj[u as usize].iter() {
                    if dist[w as usize] == u16::MAX {
                        dist[w as usize] = dist[u as usize] + 1;
                        parent[w as usize] = u;
                        queue.push(w);
                    } else if parent[u as usize] != w {
                        let cycle = dist[u as usize] as u32 + dist[w as usize] as u32 + 1;
                        best = best.min(cycle);
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        (best != u32::MAX).then_some(best)
    }

    /// The square of the graph: same vertices, `i ~ j` iff `dist(i, j) ≤ 2`
    /// and `i ≠ j`. Independent sets of the square are exactly the packings
    /// (pairwise distance ≥ 3 sets) of the original graph.
    #[must_use]
    pub fn square(&self) -> Graph {
        let n = self.n();
        let adj: Vec<VertexSet> = (0..self.n)
            .map(|i| {
                let mut row = self.closed[i as usize];
                for j in self.adj[i as usize].iter() {
                    row.union_with(&self.closed[j as usize]);
                }
                row.remove(i);
                row
            })
            .collect();
        debug_assert_eq!(adj.len(), n);
        Graph::from_rows_unchecked(adj)
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// Result of [`Graph::cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageView {
    /// `N[S]`: every vertex in `S` or adjacent to it.
    pub closed: VertexSet,
    /// `∂(S) = N[S] \ S`.
    pub boundary: VertexSet,
    /// `V \ N[S]`.
    pub undominated: VertexSet,
    /// `|N[S]|`.
    pub dom_count: usize,
}

/// Summary facts produced by [`Graph::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub n: u16,
    pub min_degree: u16,
    pub max_degree: u16,
    /// 3-regular.
    pub is_cubic: bool,
    /// Minimum degree at least 3.
    pub is_supercubic: bool,
    pub is_connected: bool,
    /// Shortest cycle length; `None` means acyclic.
    pub girth: Option<u32>,
}

//! Small-graph isomorphism via canonical codes (orders up to 32).
//!
//! Canonical form by individualization–refinement backtracking: an ordered
//! partition of the vertices is refined to equitability (cells split by
//! neighbor counts into every cell, deterministically ordered); the first
//! non-singleton cell is branched on, one candidate at a time; completed
//! orderings yield an upper-triangle bit code, and the lexicographically
//! smallest code over the search is canonical. Interchangeable twin
//! candidates are pruned, which keeps dense symmetric graphs (complete,
//! complete bipartite) linear. The practical sweet spot is the intended
//! workload — order ≤ 14 corpus graphs — with headroom to 32.

use alloc::vec::Vec;

use crate::graph::Graph;

/// Maximum order supported by the canonical-labeling routine.
pub const MAX_ISO_ORDER: usize = 32;

/// Error for orders above [`MAX_ISO_ORDER`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderAboveIsoSupport(pub usize);

impl core::fmt::Display for OrderAboveIsoSupport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "isomorphism supports orders up to {MAX_ISO_ORDER}, got {}",
            self.0
        )
    }
}

/// Canonical code of a graph: a label-independent identity. Two graphs of
/// order ≤ 32 are isomorphic iff their codes are equal.
pub fn canonical_code(g: &Graph) -> Result<Vec<u32>, OrderAboveIsoSupport> {
    let n = g.n();
    if n > MAX_ISO_ORDER {
        return Err(OrderAboveIsoSupport(n));
    }
    let rows: Vec<u32> = (0..n as u16)
        .map(|v| {
            let mut mask = 0u32;
            for w in g.neighbors(v).iter() {
                mask |= 1 << w;
            }
            mask
        })
        .collect();

    // Initial partition: cells by degree, ascending.
    let mut by_degree: Vec<Vec<u16>> = alloc::vec![Vec::new(); n + 1];
    for v in 0..n as u16 {
        by_degree[rows[v as usize].count_ones() as usize].push(v);
    }
    let initial: Vec<Vec<u16>> = by_degree.into_iter().filter(|c| !c.is_empty()).collect();

    let mut search = Search {
        n,
        rows: &rows,
        best: None,
    };
    let refined = refine(&rows, initial);
    search.descend(refined);
    Ok(search.best.expect("search visits at least one leaf"))
}

/// True iff an edge-preserving bijection exists between the two graphs.
/// Both orders must be at most 32.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, OrderAboveIsoSupport> {
    for graph in [g, h] {
        if graph.n() > MAX_ISO_ORDER {
            return Err(OrderAboveIsoSupport(graph.n()));
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n() as u16).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n() as u16).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}

struct Search<'a> {
    n: usize,
    rows: &'a [u32],
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    fn descend(&mut self, partition: Vec<Vec<u16>>) {
        if let Some(target) = partition.iter().position(|c| c.len() > 1) {
            let mut kept: Vec<u16> = Vec::with_capacity(partition[target].len());
            for &v in &partition[target] {
                let twin = kept.iter().any(|&u| {
                    let others = !((1u32 << u) | (1u32 << v));
                    self.rows[u as usize] & others == self.rows[v as usize] & others
                });
                if !twin {
                    kept.push(v);
                }
            }
            for v in kept {
                let mut next: Vec<Vec<u16>> = Vec::with_capacity(partition.len() + 1);
                for (i, cell) in partition.iter().enumerate() {
                    if i == target {
                        next.push(alloc::vec![v]);
                        next.push(cell.iter().copied().filter(|&u| u != v).collect());
                    } else {
                        next.push(cell.clone());
                    }
                }
                self.descend(refine(self.rows, next));
            }
        } else {
            let perm: Vec<u16> = partition.iter().map(|c| c[0]).collect();
            let code = self.code_of(&perm);
            match &self.best {
                Some(best) if *best <= code => {}
                _ => self.best = Some(code),
            }
        }
    }

    fn code_of(&self, perm: &[u16]) -> Vec<u32> {
        debug_assert_eq!(perm.len(), self.n);
        (0..self.n)
            .map(|k| {
                let mut chunk = 0u32;
                for i in 0..k {
                    let bit = self.rows[perm[i] as usize] >> perm[k] & 1;
                    chunk = (chunk << 1) | bit;
                }
                chunk
            })
            .collect()
    }
}

/// Refines an ordered partition to equitability: repeatedly splits cells by
/// the vector of neighbor counts into every cell, ordering split groups by
/// signature. The result depends only on the isomorphism type and the
/// incoming cell order, never on vertex labels.
fn refine(rows: &[u32], mut partition: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    loop {
        let masks: Vec<u32> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u32, |m, &v| m | 1 << v))
            .collect();
        let mut next: Vec<Vec<u16>> = Vec::with_capacity(partition.len());
        let mut changed = false;
        for cell in &partition {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // Group the cell by signature: neighbor count into each cell.
            let mut groups: Vec<(Vec<u32>, Vec<u16>)> = Vec::new();
            for &v in cell {
                let sig: Vec<u32> = masks
                    .iter()
                    .map(|&m| (rows[v as usize] & m).count_ones())
                    .collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, members)) => members.push(v),
                    None => groups.push((sig, alloc::vec![v])),
                }
            }
            if groups.len() > 1 {
                changed = true;
                groups.sort_by(|a, b| a.0.cmp(&b.0));
            }
            next.extend(groups.into_iter().map(|(_, members)| members));
        }
        partition = next;
        if !changed {
            return partition;
        }
    }
}

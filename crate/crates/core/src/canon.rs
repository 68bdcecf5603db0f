//! Canonical labeling by individualization and refinement.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first non-singleton cell,
//! recurse. The canonical leaf is the one whose relabeled upper triangle is
//! largest. Automorphisms found at equal leaves prune children by orbits of the
//! prefix-fixing generators, and jump back to the first path when a whole
//! subtree is shown to be an image of an explored one.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 16;

/// Canonical byte string: the graph6 encoding of the canonically relabeled
/// graph. Equal iff the inputs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let lab = canonical_labeling(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(write_graph6(&g.relabel(&perm))?.into_bytes())
}

/// Canonical order of the vertices: `result[p]` is the vertex placed at
/// position `p`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Capacity {
            n,
            cap: CANON_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search {
        adj: g.adjacency_rows(),
        n,
        first: None,
        best: None,
        first_path: Vec::new(),
        generators: Vec::new(),
    };
    let mut cells = vec![g.vertices().bits()];
    refine(search.adj, &mut cells, vec![g.vertices().bits()]);
    search.visit(cells, &mut Vec::new());
    Ok(search.best.expect("search visits at least one leaf").0)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Splits cells by neighbor counts into each splitter until the partition is
/// equitable. Pieces keep ascending count order so the result is
/// label-invariant.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>, initial: Vec<u64>) {
    let mut queue: VecDeque<u64> = initial.into();
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(adj.len());
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() <= 1 {
                i += 1;
                continue;
            }
            counts.clear();
            counts.extend(
                VertexSet::from_bits(cell)
                    .iter()
                    .map(|v| ((adj[v] & splitter).count_ones(), v)),
            );
            let c0 = counts[0].0;
            if counts.iter().all(|&(c, _)| c == c0) {
                i += 1;
                continue;
            }
            counts.sort_unstable();
            let mut pieces: Vec<u64> = Vec::new();
            let mut prev = u32::MAX;
            for &(c, v) in counts.iter() {
                if c != prev {
                    pieces.push(0);
                    prev = c;
                }
                *pieces.last_mut().unwrap() |= 1 << v;
            }
            let k = pieces.len();
            queue.extend(pieces.iter().copied());
            cells.splice(i..=i, pieces);
            i += k;
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<(Vec<usize>, u128)>,
    best: Option<(Vec<usize>, u128)>,
    first_path: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, lab: &[usize]) -> u128 {
        let mut cert = 0u128;
        for q in 1..self.n {
            let row = self.adj[lab[q]];
            for &u in &lab[..q] {
                cert = cert << 1 | (row >> u & 1) as u128;
            }
        }
        cert
    }

    /// The automorphism sending `lab[p]` to `target[p]` for every position.
    fn automorphism(lab: &[usize], target: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; lab.len()];
        for (&from, &to) in lab.iter().zip(target) {
            gamma[from] = to;
        }
        gamma
    }

    /// Returns `Some(level)` to unwind to the node at `level` on the first path.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let level = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for w in VertexSet::from_bits(cells[target]) {
            if !explored.is_empty() && self.same_orbit_as_explored(prefix, &explored, w) {
                continue;
            }
            explored.push(w);
            let mut child = cells.clone();
            let single = 1u64 << w;
            child.splice(target..=target, [single, cells[target] & !single]);
            refine(self.adj, &mut child, vec![single]);
            prefix.push(w);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let cert = self.certificate(&lab);
        let Some((first_lab, first_cert)) = &self.first else {
            self.first = Some((lab.clone(), cert));
            self.best = Some((lab, cert));
            self.first_path = prefix.to_vec();
            return None;
        };
        if cert == *first_cert {
            let gamma = Self::automorphism(&lab, first_lab);
            let d0 = prefix
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            let fixes_common = self.first_path[..d0].iter().all(|&v| gamma[v] == v);
            let maps_branch = d0 < prefix.len()
                && d0 < self.first_path.len()
                && gamma[prefix[d0]] == self.first_path[d0];
            self.generators.push(gamma);
            if fixes_common && maps_branch {
                return Some(d0);
            }
            return None;
        }
        let (best_lab, best_cert) = self.best.as_ref().unwrap();
        if cert == *best_cert {
            let gamma = Self::automorphism(&lab, best_lab);
            self.generators.push(gamma);
        } else if cert > *best_cert {
            self.best = Some((lab, cert));
        }
        None
    }

    fn same_orbit_as_explored(&self, prefix: &[usize], explored: &[usize], w: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rw = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == rw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, complete_graph, cycle, path};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn path_and_its_complement_share_a_form() {
        let p4 = path(4);
        assert_eq!(
            canonical_form(&p4).unwrap(),
            canonical_form(&p4.complement()).unwrap()
        );
    }

    #[test]
    fn k4_differs_from_c4() {
        assert_ne!(
            canonical_form(&complete_graph(4)).unwrap(),
            canonical_form(&cycle(4)).unwrap()
        );
    }

    #[test]
    fn relabeling_invariance_on_random_graph() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut g = Graph::empty(8).unwrap();
        for u in 0..8 {
            for v in u + 1..8 {
                if rng.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        let form = canonical_form(&g).unwrap();
        let mut perm: Vec<usize> = (0..8).collect();
        for _ in 0..50 {
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabel(&perm)).unwrap(), form);
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            Graph::empty(16).unwrap(),
            complete_graph(16),
            complete_bipartite(8, 8),
            cycle(16),
        ] {
            let lab = canonical_labeling(&g).unwrap();
            assert_eq!(lab.len(), 16);
        }
    }

    #[test]
    fn capacity_error() {
        assert_eq!(
            canonical_form(&Graph::empty(17).unwrap()).unwrap_err(),
            Error::Capacity { n: 17, cap: 16 }
        );
    }
}

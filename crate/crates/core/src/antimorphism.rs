//! Antimorphisms (isomorphisms onto the complement), their cycle structure,
//! and the high/low degree split of a self-complementary graph.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::permutation::{CycleDecomposition, Permutation};

/// Whether `p` maps every edge of `g` to a non-edge and every non-edge to an
/// edge.
pub fn is_antimorphism(g: &Graph, p: &Permutation) -> bool {
    let n = g.order();
    if p.len() != n {
        return false;
    }
    (0..n).all(|u| {
        (u + 1..n).all(|v| g.has_edge(u, v) != g.has_edge(p.apply(u), p.apply(v)))
    })
}

/// Finds the antimorphism of `g` with the lexicographically least image
/// array, or `None` when `g` is not self-complementary.
pub fn find_antimorphism(g: &Graph) -> Option<Permutation> {
    let n = g.order();
    if n % 4 >= 2 || 4 * g.edge_count() != n * n.saturating_sub(1) {
        return None;
    }
    if n == 0 {
        return Some(Permutation::identity(0));
    }
    let co = g.complement();
    let (colors_g, colors_c) = joint_colors(g, &co);
    let mut hist_g = colors_g.clone();
    let mut hist_c = colors_c.clone();
    hist_g.sort_unstable();
    hist_c.sort_unstable();
    if hist_g != hist_c {
        return None;
    }

    let mut search = AntiSearch {
        g,
        co: &co,
        colors_g: &colors_g,
        colors_c: &colors_c,
        image: vec![usize::MAX; n],
        used: VertexSet::EMPTY,
    };
    if search.extend(0) {
        Some(Permutation::new(search.image).expect("search builds a bijection"))
    } else {
        None
    }
}

/// Color refinement run on `a` and `b` with a shared palette, so that any
/// isomorphism `a -> b` preserves colors.
fn joint_colors(a: &Graph, b: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = a.order();
    let mut ca: Vec<u32> = vec![0; n];
    let mut cb: Vec<u32> = vec![0; n];
    let mut classes = 1;
    loop {
        let sig = |g: &Graph, colors: &[u32], v: usize| {
            let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(b, &cb, v)).collect();
        let mut palette: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            palette.insert(s, 0);
        }
        for (i, id) in palette.values_mut().enumerate() {
            *id = i as u32;
        }
        let next_a: Vec<u32> = sa.iter().map(|s| palette[s]).collect();
        let next_b: Vec<u32> = sb.iter().map(|s| palette[s]).collect();
        let count = palette.len();
        ca = next_a;
        cb = next_b;
        if count == classes {
            return (ca, cb);
        }
        classes = count;
    }
}

struct AntiSearch<'a> {
    g: &'a Graph,
    co: &'a Graph,
    colors_g: &'a [u32],
    colors_c: &'a [u32],
    image: Vec<usize>,
    used: VertexSet,
}

impl AntiSearch<'_> {
    fn extend(&mut self, v: usize) -> bool {
        let n = self.g.order();
        if v == n {
            return true;
        }
        for u in 0..n {
            if self.used.contains(u) || self.colors_c[u] != self.colors_g[v] {
                continue;
            }
            if !self.consistent(v, u) {
                continue;
            }
            self.image[v] = u;
            self.used.insert(u);
            if self.extend(v + 1) {
                return true;
            }
            self.used.remove(u);
            self.image[v] = usize::MAX;
        }
        false
    }

    /// Adjacency of `v` to every assigned vertex must match the complement
    /// adjacency of `u` to the assigned images.
    fn consistent(&self, v: usize, u: usize) -> bool {
        (0..v).all(|x| self.g.has_edge(v, x) == self.co.has_edge(u, self.image[x]))
    }
}

/// Why a cycle decomposition fails the structure every antimorphism must have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SachsViolation {
    /// `n ≡ 2, 3 (mod 4)`: no self-complementary graph exists.
    Order { n: usize },
    FixedPoints { n: usize, expected: usize, found: usize },
    CycleLength { length: usize },
}

impl fmt::Display for SachsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SachsViolation::Order { n } => {
                write!(f, "order {n} is not congruent to 0 or 1 mod 4")
            }
            SachsViolation::FixedPoints { n, expected, found } => {
                write!(f, "expected {expected} fixed point(s) for n = {n}, found {found}")
            }
            SachsViolation::CycleLength { length } => {
                write!(f, "cycle length {length} not divisible by 4")
            }
        }
    }
}

/// Checks the cycle structure every antimorphism on `n` vertices has: no fixed
/// point when `n ≡ 0 (mod 4)`, exactly one when `n ≡ 1 (mod 4)`, and every
/// nontrivial cycle of length divisible by 4.
pub fn check_sachs(d: &CycleDecomposition, n: usize) -> Result<(), SachsViolation> {
    let expected = match n % 4 {
        0 => 0,
        1 => 1,
        _ => return Err(SachsViolation::Order { n }),
    };
    if let Some(c) = d.cycles.iter().find(|c| c.len() % 4 != 0) {
        return Err(SachsViolation::CycleLength { length: c.len() });
    }
    if d.fixed_points.len() != expected {
        return Err(SachsViolation::FixedPoints {
            n,
            expected,
            found: d.fixed_points.len(),
        });
    }
    Ok(())
}

/// High-degree side, low-degree side and the bipartite graph of edges between
/// them, for a self-complementary graph on `4k` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SidePartition {
    /// Vertices of degree at least `2k`.
    pub high: VertexSet,
    /// Vertices of degree at most `2k - 1`.
    pub low: VertexSet,
    /// Spanning subgraph holding exactly the edges between `high` and `low`.
    pub cross: Graph,
}

fn require_antimorphism(g: &Graph, rho: &Permutation) -> Result<()> {
    if is_antimorphism(g, rho) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{rho} is not an antimorphism of the graph")))
    }
}

pub fn side_partition(g: &Graph, rho: &Permutation) -> Result<SidePartition> {
    if !g.order().is_multiple_of(4) {
        return Err(Error::Domain(format!(
            "side partition needs an order divisible by 4, got {}",
            g.order()
        )));
    }
    require_antimorphism(g, rho)?;
    Ok(split_by_degree(g, g.vertices()))
}

/// The side partition of the graph with the fixed point of `rho` removed
/// (when `n ≡ 1 mod 4`), kept in the original labels. For `n ≡ 0 mod 4` this
/// equals [`side_partition`].
pub fn side_partition_without_fixed(g: &Graph, rho: &Permutation) -> Result<SidePartition> {
    require_antimorphism(g, rho)?;
    let d = rho.cycle_decomposition();
    check_sachs(&d, g.order()).map_err(|e| Error::Domain(e.to_string()))?;
    let mut core = g.vertices();
    for &f in &d.fixed_points {
        core.remove(f);
    }
    Ok(split_by_degree(g, core))
}

fn split_by_degree(g: &Graph, core: VertexSet) -> SidePartition {
    let half = core.len() / 2;
    let mut high = VertexSet::EMPTY;
    for v in core {
        if g.neighbors(v).intersection(core).len() >= half {
            high.insert(v);
        }
    }
    let low = core.difference(high);
    let mut cross = Graph::empty(g.order()).expect("same order as host");
    for u in high {
        for v in g.neighbors(u).intersection(low) {
            cross.add_edge(u, v);
        }
    }
    SidePartition { high, low, cross }
}

/// How one antimorphism cycle splits across the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSideCounts {
    pub in_high: usize,
    pub in_low: usize,
    /// `(vertex, number of cycle vertices on the other side adjacent to it)`,
    /// in cycle order.
    pub cross_degrees: Vec<(usize, usize)>,
}

pub fn cycle_side_counts(g: &Graph, rho: &Permutation, cycle: &[usize]) -> Result<CycleSideCounts> {
    if cycle.is_empty() || !cycle.len().is_multiple_of(4) {
        return Err(Error::Domain(format!(
            "expected a cycle of length divisible by 4, got length {}",
            cycle.len()
        )));
    }
    for v in cycle {
        g.check_vertex(*v)?;
    }
    for (i, &v) in cycle.iter().enumerate() {
        if rho.apply(v) != cycle[(i + 1) % cycle.len()] {
            return Err(Error::Domain(format!("cycle is not closed under rho at {v}")));
        }
    }
    let sides = side_partition_without_fixed(g, rho)?;
    let members: VertexSet = cycle.iter().copied().collect();
    let in_high = members.intersection(sides.high).len();
    let cross_degrees = cycle
        .iter()
        .map(|&v| (v, sides.cross.neighbors(v).intersection(members).len()))
        .collect();
    Ok(CycleSideCounts {
        in_high,
        in_low: cycle.len() - in_high,
        cross_degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, cycle, path};
    use crate::permutation::cycle_decomposition;

    #[test]
    fn p4_antimorphism() {
        let rho = find_antimorphism(&path(4)).unwrap();
        assert_eq!(rho, Permutation::from_cycles(4, &[vec![0, 1, 3, 2]]).unwrap());
        assert!(is_antimorphism(&path(4), &rho));
    }

    #[test]
    fn c5_antimorphism_is_doubling() {
        let rho = find_antimorphism(&cycle(5)).unwrap();
        assert_eq!(rho.image(), &[0, 2, 4, 1, 3]);
        assert_eq!(rho.to_string(), "(0)(1 2 4 3)");
    }

    #[test]
    fn non_sc_graphs_are_rejected() {
        assert!(find_antimorphism(&complete_graph(4)).is_none());
        for n in [2, 3, 6, 7, 10, 11] {
            assert!(find_antimorphism(&path(n)).is_none());
        }
        // right edge count, not self-complementary: K3 plus an isolated vertex
        // has 3 edges on 4 vertices
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(find_antimorphism(&g).is_none());
    }

    #[test]
    fn sachs_examples() {
        let p4 = cycle_decomposition(&find_antimorphism(&path(4)).unwrap());
        assert_eq!(check_sachs(&p4, 4), Ok(()));
        let c5 = cycle_decomposition(&find_antimorphism(&cycle(5)).unwrap());
        assert_eq!(check_sachs(&c5, 5), Ok(()));
        let two = cycle_decomposition(&Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap());
        let err = check_sachs(&two, 4).unwrap_err();
        assert_eq!(err.to_string(), "cycle length 2 not divisible by 4");
        assert!(check_sachs(&cycle_decomposition(&Permutation::identity(5)), 5).is_err());
    }

    #[test]
    fn p4_side_partition() {
        let g = path(4);
        let rho = find_antimorphism(&g).unwrap();
        let s = side_partition(&g, &rho).unwrap();
        assert_eq!(s.high.to_vec(), vec![1, 2]);
        assert_eq!(s.low.to_vec(), vec![0, 3]);
        assert_eq!(s.cross.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn side_partition_domain_errors() {
        let g = cycle(5);
        let rho = find_antimorphism(&g).unwrap();
        assert!(matches!(side_partition(&g, &rho), Err(Error::Domain(_))));
        let p4 = path(4);
        assert!(matches!(
            side_partition(&p4, &Permutation::identity(4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cycle_counts_examples() {
        let g = path(4);
        let rho = find_antimorphism(&g).unwrap();
        let c = cycle_side_counts(&g, &rho, &[0, 1, 3, 2]).unwrap();
        assert_eq!((c.in_high, c.in_low), (2, 2));
        assert!(c.cross_degrees.iter().all(|&(_, d)| d == 1));

        let g = cycle(5);
        let rho = find_antimorphism(&g).unwrap();
        let c = cycle_side_counts(&g, &rho, &[1, 2, 4, 3]).unwrap();
        assert_eq!((c.in_high, c.in_low), (2, 2));
        assert!(c.cross_degrees.iter().all(|&(_, d)| d == 1));

        assert!(matches!(
            cycle_side_counts(&g, &rho, &[1, 4, 2, 3]),
            Err(Error::Domain(_))
        ));
    }
}

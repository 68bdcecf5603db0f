//! Standard small graphs, the extremal self-complementary families, and
//! self-complementary graphs generated from a prescribed antimorphism.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::antimorphism::check_sachs;
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::Permutation;

pub fn complete_graph(k: usize) -> Graph {
    let mut g = Graph::empty(k).expect("order within capacity");
    for u in 0..k {
        for v in u + 1..k {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{p,q}` with sides `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut g = Graph::empty(p + q).expect("order within capacity");
    for u in 0..p {
        for v in p..p + q {
            g.add_edge(u, v);
        }
    }
    g
}

/// Path `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Graph {
    let mut g = Graph::empty(k).expect("order within capacity");
    for v in 1..k {
        g.add_edge(v - 1, v);
    }
    g
}

/// Cycle `0 - 1 - ... - (k-1) - 0`; for `k < 3` this is the path.
pub fn cycle(k: usize) -> Graph {
    let mut g = path(k);
    if k >= 3 {
        g.add_edge(k - 1, 0);
    }
    g
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, edges).expect("valid edges")
}

/// Self-complementary graph on `4n` vertices with no `K_{2n+1}` minor: a clique
/// on `0..2n`, an independent set on `2n..4n`, and complete bipartite blocks
/// `{0..n} x {2n..3n}` and `{n..2n} x {3n..4n}`.
pub fn sharp_4n(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Domain("sharp_4n needs n >= 1".into()));
    }
    let mut g = Graph::empty(4 * n)?;
    for u in 0..2 * n {
        for v in u + 1..2 * n {
            g.add_edge(u, v);
        }
    }
    for i in 0..n {
        for j in 0..n {
            g.add_edge(i, 2 * n + j);
            g.add_edge(n + i, 3 * n + j);
        }
    }
    Ok(g)
}

/// [`sharp_4n`] plus vertex `4n` adjacent to the clique `0..2n`; no `K_{2n+2}`
/// minor. `n = 0` gives `K_1`.
pub fn sharp_4n_plus_1(n: usize) -> Result<Graph> {
    let base = if n == 0 {
        Graph::empty(0)?
    } else {
        sharp_4n(n)?
    };
    let mut g = Graph::from_edges(4 * n + 1, base.edges())?;
    for v in 0..2 * n {
        g.add_edge(4 * n, v);
    }
    Ok(g)
}

fn pair(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Orbits of `sigma` on unordered pairs. Each orbit starts at its
/// lexicographically least pair and follows `sigma`; orbits are sorted by that
/// pair. Fails if an orbit has odd length, since edge status could then not
/// alternate around it.
pub fn pair_orbits(sigma: &Permutation) -> Result<Vec<Vec<(usize, usize)>>> {
    let n = sigma.len();
    let mut seen = vec![false; n * n];
    let mut orbits = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if seen[u * n + v] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut p = (u, v);
            loop {
                seen[p.0 * n + p.1] = true;
                orbit.push(p);
                p = pair(sigma.apply(p.0), sigma.apply(p.1));
                if p == (u, v) {
                    break;
                }
            }
            if orbit.len() % 2 == 1 {
                return Err(Error::Domain(format!(
                    "pair orbit of ({u}, {v}) has odd length {}",
                    orbit.len()
                )));
            }
            orbits.push(orbit);
        }
    }
    Ok(orbits)
}

/// A candidate antimorphism plus one edge/non-edge bit per pair orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitAssignment {
    pub sigma: Permutation,
    /// Least pair of each orbit, in the order of [`pair_orbits`].
    pub orbit_reps: Vec<(usize, usize)>,
    /// Whether each representative is an edge.
    pub choices: Vec<bool>,
}

impl OrbitAssignment {
    pub fn new(sigma: Permutation, choices: Vec<bool>) -> Result<Self> {
        let orbits = pair_orbits(&sigma)?;
        if orbits.len() != choices.len() {
            return Err(Error::Domain(format!(
                "{} orbits but {} choice bits",
                orbits.len(),
                choices.len()
            )));
        }
        Ok(OrbitAssignment {
            sigma,
            orbit_reps: orbits.iter().map(|o| o[0]).collect(),
            choices,
        })
    }

    /// Choice bits read off a binary counter: orbit `j` takes bit `j`.
    pub fn from_counter(sigma: Permutation, counter: u64) -> Result<Self> {
        let m = pair_orbits(&sigma)?.len();
        let choices = (0..m).map(|j| counter >> j & 1 == 1).collect();
        OrbitAssignment::new(sigma, choices)
    }
}

/// The graph in which edge status alternates along each orbit, starting from
/// the chosen status of the representative. `sigma` is an antimorphism of it.
pub fn sc_from_assignment(a: &OrbitAssignment) -> Result<Graph> {
    let n = a.sigma.len();
    check_sachs(&a.sigma.cycle_decomposition(), n).map_err(|e| Error::Domain(e.to_string()))?;
    let orbits = pair_orbits(&a.sigma)?;
    if orbits.len() != a.choices.len() {
        return Err(Error::Domain("choice bits do not match the orbits".into()));
    }
    build_from_orbits(n, &orbits, |j| a.choices[j])
}

fn build_from_orbits(
    n: usize,
    orbits: &[Vec<(usize, usize)>],
    choice: impl Fn(usize) -> bool,
) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for (j, orbit) in orbits.iter().enumerate() {
        let start = choice(j);
        for (i, &(u, v)) in orbit.iter().enumerate() {
            if start ^ (i % 2 == 1) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Cycle types allowed for an antimorphism on `n` vertices: partitions of
/// `n - (n mod 4)` into multiples of 4, in decreasing lexicographic order.
pub fn sachs_cycle_types(n: usize) -> Result<Vec<Vec<usize>>> {
    if n % 4 >= 2 {
        return Err(Error::Domain(format!("no self-complementary graph on {n} vertices")));
    }
    fn parts(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut len = max.min(rest);
        while len >= 4 {
            cur.push(len);
            parts(rest - len, len, cur, out);
            cur.pop();
            len -= 4;
        }
    }
    let mut out = Vec::new();
    let core = n - n % 4;
    parts(core, core, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Permutation with the given cycle lengths on consecutive labels; the fixed
/// point, if any, is `n - 1`.
pub fn representative_sigma(n: usize, cycle_type: &[usize]) -> Result<Permutation> {
    let mut start = 0;
    let mut cycles = Vec::new();
    for &len in cycle_type {
        cycles.push((start..start + len).collect::<Vec<_>>());
        start += len;
    }
    if start > n {
        return Err(Error::Domain("cycle type exceeds the order".into()));
    }
    Permutation::from_cycles(n, &cycles)
}

/// Orders that [`enumerate_sc`] accepts; the last two need `allow_large`.
pub const ENUMERABLE_ORDERS: [usize; 7] = [1, 4, 5, 8, 9, 12, 13];

/// One graph per isomorphism class of self-complementary graphs on `n`
/// vertices, in first-seen order over cycle types and choice counters.
pub fn enumerate_sc(n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    if !ENUMERABLE_ORDERS.contains(&n) {
        return Err(Error::Domain(format!(
            "enumeration supports n in {ENUMERABLE_ORDERS:?}, got {n}"
        )));
    }
    if n >= 12 && !allow_large {
        return Err(Error::Domain(format!(
            "enumeration at n = {n} is a large run; enable it explicitly"
        )));
    }
    const CHUNK: u64 = 1 << 14;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for cycle_type in sachs_cycle_types(n)? {
        let sigma = representative_sigma(n, &cycle_type)?;
        let orbits = pair_orbits(&sigma)?;
        let total = 1u64 << orbits.len();
        let mut lo = 0;
        while lo < total {
            let hi = (lo + CHUNK).min(total);
            let batch: Vec<(Graph, Vec<u8>)> = (lo..hi)
                .into_par_iter()
                .map(|counter| {
                    let g = build_from_orbits(n, &orbits, |j| counter >> j & 1 == 1)?;
                    let form = canonical_form(&g)?;
                    Ok((g, form))
                })
                .collect::<Result<_>>()?;
            for (g, form) in batch {
                if seen.insert(form) {
                    out.push(g);
                }
            }
            lo = hi;
        }
    }
    Ok(out)
}

/// Random self-complementary graph together with an antimorphism of it.
/// The cycle type is uniform over the allowed types, the orbit bits are
/// uniform, and the labels are shuffled uniformly.
pub fn random_sc_with_sigma(n: usize, seed: u64) -> Result<(Graph, Permutation)> {
    let types = sachs_cycle_types(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cycle_type = &types[rng.gen_range(0..types.len())];
    let sigma = representative_sigma(n, cycle_type)?;
    let orbits = pair_orbits(&sigma)?;
    let choices: Vec<bool> = (0..orbits.len()).map(|_| rng.gen()).collect();
    let g = build_from_orbits(n, &orbits, |j| choices[j])?;
    let mut shuffle: Vec<usize> = (0..n).collect();
    shuffle.shuffle(&mut rng);
    let pi = Permutation::new(shuffle)?;
    Ok((g.relabel(pi.image()), sigma.conjugate_by(&pi)))
}

pub fn random_sc(n: usize, seed: u64) -> Result<Graph> {
    random_sc_with_sigma(n, seed).map(|(g, _)| g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::antimorphism::{find_antimorphism, is_antimorphism};
    use crate::canon::are_isomorphic;

    #[test]
    fn standard_graphs() {
        assert_eq!(complete_graph(4).edge_count(), 6);
        let k23 = complete_bipartite(2, 3);
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
        assert_eq!(path(4).edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cycle(5).edge_count(), 5);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn sharp_families() {
        let g1 = sharp_4n(1).unwrap();
        assert_eq!(g1.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(are_isomorphic(&g1, &path(4)).unwrap());
        assert_eq!(sharp_4n(2).unwrap().edge_count(), 14);
        for n in 1..=3 {
            let g = sharp_4n(n).unwrap();
            assert!(find_antimorphism(&g).is_some(), "sharp_4n({n})");
            let g = sharp_4n_plus_1(n).unwrap();
            assert!(find_antimorphism(&g).is_some(), "sharp_4n_plus_1({n})");
        }
        assert_eq!(sharp_4n_plus_1(0).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(sharp_4n_plus_1(1).unwrap().edge_count(), 5);
        assert!(sharp_4n(0).is_err());
    }

    #[test]
    fn four_cycle_assignments() {
        let sigma = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let orbits = pair_orbits(&sigma).unwrap();
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0], vec![(0, 1), (1, 2), (2, 3), (0, 3)]);
        assert_eq!(orbits[1], vec![(0, 2), (1, 3)]);

        let a = OrbitAssignment::new(sigma.clone(), vec![true, false]).unwrap();
        let g = sc_from_assignment(&a).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 3), (2, 3)]);
        assert!(are_isomorphic(&g, &path(4)).unwrap());

        let mut forms = HashSet::new();
        for counter in 0..4 {
            let a = OrbitAssignment::from_counter(sigma.clone(), counter).unwrap();
            let g = sc_from_assignment(&a).unwrap();
            assert!(is_antimorphism(&g, &sigma));
            forms.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn flipping_all_bits_gives_the_complement() {
        let sigma = representative_sigma(9, &[4, 4]).unwrap();
        let m = pair_orbits(&sigma).unwrap().len();
        for counter in [0u64, 5, 77, 1000] {
            let a = OrbitAssignment::from_counter(sigma.clone(), counter).unwrap();
            let flipped = OrbitAssignment::new(sigma.clone(), a.choices.iter().map(|b| !b).collect()).unwrap();
            assert_eq!(m, a.choices.len());
            assert_eq!(
                sc_from_assignment(&flipped).unwrap(),
                sc_from_assignment(&a).unwrap().complement()
            );
        }
    }

    #[test]
    fn assignment_rejects_non_sachs_sigma() {
        let sigma = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(pair_orbits(&sigma).is_err());
        let sigma = Permutation::from_cycles(5, &[vec![0, 1, 2, 3]]).unwrap();
        let a = OrbitAssignment::from_counter(sigma, 0);
        // the fixed point 4 makes orbits of length 4, but n = 5 with one fixed
        // point is fine; a second fixed point is not
        assert!(a.is_ok());
        let sigma = Permutation::identity(4);
        assert!(OrbitAssignment::from_counter(sigma, 0).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(sachs_cycle_types(1).unwrap(), vec![Vec::<usize>::new()]);
        assert_eq!(sachs_cycle_types(8).unwrap(), vec![vec![8], vec![4, 4]]);
        assert_eq!(
            sachs_cycle_types(13).unwrap(),
            vec![vec![12], vec![8, 4], vec![4, 4, 4]]
        );
        assert!(sachs_cycle_types(6).is_err());
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_sc(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_sc(4, false).unwrap().len(), 1);
        assert_eq!(enumerate_sc(5, false).unwrap().len(), 2);
        assert!(enumerate_sc(6, false).is_err());
        assert!(enumerate_sc(12, false).is_err());
    }

    #[test]
    fn random_graphs_are_self_complementary() {
        for seed in 0..100 {
            let (g, sigma) = random_sc_with_sigma(12, seed).unwrap();
            assert!(is_antimorphism(&g, &sigma));
            assert_eq!(g.edge_count(), 33);
        }
        for seed in 0..20 {
            let (g, sigma) = random_sc_with_sigma(13, seed).unwrap();
            assert!(is_antimorphism(&g, &sigma));
            assert_eq!(sigma.cycle_decomposition().fixed_points.len(), 1);
        }
        assert_eq!(random_sc(12, 3).unwrap(), random_sc(12, 3).unwrap());
        assert!(random_sc(6, 0).is_err());
    }
}

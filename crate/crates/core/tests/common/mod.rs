//! Brute-force reference implementations used as independent oracles. None of
//! these call into the library beyond `Graph` construction.

#![allow(dead_code)]

use scminor_core::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// Every labeled graph on `n` vertices, indexed by edge mask over `pairs(n)`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len()).map(move |mask| {
        let edges = ps.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edge_mask(g: &Graph, perm: &[usize], ps: &[(usize, usize)]) -> u64 {
    let mut mask = 0u64;
    for (i, &(u, v)) in ps.iter().enumerate() {
        if g.has_edge(perm[u], perm[v]) {
            mask |= 1 << i;
        }
    }
    mask
}

/// Least edge mask over all relabelings.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let ps = pairs(g.order());
    perms.iter().map(|p| edge_mask(g, p, &ps)).min().unwrap_or(0)
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ps = pairs(a.order());
    let target = edge_mask(b, &(0..b.order()).collect::<Vec<_>>(), &ps);
    permutations(a.order()).iter().any(|p| edge_mask(a, p, &ps) == target)
}

/// Number of isomorphism classes of SC graphs on `n` vertices, by filtering
/// all labeled graphs.
pub fn brute_sc_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let mut classes = std::collections::HashSet::new();
    for g in labeled_graphs(n) {
        if 4 * g.edge_count() != n * n.saturating_sub(1) {
            continue;
        }
        let form = brute_canonical(&g, &perms);
        if form == brute_canonical(&g.complement(), &perms) {
            classes.insert(form);
        }
    }
    classes.len()
}

fn connected(g: &Graph, set: &[usize]) -> bool {
    let Some(&start) = set.first() else { return false };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let u = seen[i];
        for &v in set {
            if !seen.contains(&v) && g.has_edge(u, v) {
                seen.push(v);
            }
        }
        i += 1;
    }
    seen.len() == set.len()
}

/// Whether some assignment of vertices to `{unused, 1..k}` is a `K_k` model.
pub fn brute_has_clique_minor(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![Vec::new(); k];
        for v in 0..n {
            if label[v] > 0 {
                sets[label[v] - 1].push(v);
            }
        }
        let ok = sets.iter().all(|s| connected(g, s))
            && (0..k).all(|i| {
                (i + 1..k).all(|j| sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v))))
            });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_hadwiger(g: &Graph) -> usize {
    (0..=g.order()).rev().find(|&k| brute_has_clique_minor(g, k)).unwrap()
}

/// Kuratowski test by brute force: a `K_5` or `K_{3,3}` minor.
pub fn brute_planar(g: &Graph) -> bool {
    !brute_has_clique_minor(g, 5) && !brute_has_k33_minor(g)
}

fn brute_has_k33_minor(g: &Graph) -> bool {
    let n = g.order();
    if n < 6 {
        return false;
    }
    let mut label = vec![0usize; n];
    loop {
        let mut sets = vec![Vec::new(); 6];
        for v in 0..n {
            if label[v] > 0 {
                sets[label[v] - 1].push(v);
            }
        }
        let ok = sets.iter().all(|s| connected(g, s))
            && (0..3).all(|i| {
                (3..6).all(|j| sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v))))
            });
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= 6 {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// Edge status is flipped by `rho` on every pair.
pub fn flips_every_pair(g: &Graph, rho: &[usize]) -> bool {
    pairs(g.order())
        .into_iter()
        .all(|(u, v)| g.has_edge(u, v) != g.has_edge(rho[u], rho[v]))
}

/// Disjoint, nonempty, connected sets, pairwise joined by an edge.
pub fn is_clique_model(g: &Graph, sets: &[Vec<usize>]) -> bool {
    let mut used = vec![false; g.order()];
    for s in sets {
        for &v in s {
            if v >= g.order() || used[v] {
                return false;
            }
            used[v] = true;
        }
    }
    sets.iter().all(|s| connected(g, s))
        && (0..sets.len()).all(|i| {
            (i + 1..sets.len()).all(|j| sets[i].iter().any(|&u| sets[j].iter().any(|&v| g.has_edge(u, v))))
        })
}

//! Planarity testing.
//!
//! The graph is split into biconnected blocks and each block is embedded by
//! the Demoucron–Malgrange–Pertuiset path-addition method: start from a cycle,
//! repeatedly pick a fragment (bridge) of the unembedded part, and route a path
//! of it through a face containing all of its attachment vertices. A fragment
//! with no such face proves non-planarity; forced fragments (one admissible
//! face) go first.

use crate::graph::{Graph, VertexSet};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g)
        .into_iter()
        .filter(|b| b.len() >= 5)
        .all(|b| {
            let (block, _) = g.induced_subgraph(b).expect("block vertices are in range");
            block_is_planar(&block)
        })
}

/// Vertex sets of the biconnected blocks with at least one edge.
pub fn biconnected_blocks(g: &Graph) -> Vec<VertexSet> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }
    let n = g.order();
    let mut dfs = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    dfs.blocks
}

/// Some cycle of a graph that has one, as a vertex sequence.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    stack.push(v);
                } else if v != parent[u] && parent[v] != u {
                    // u and v are in the same tree: join both root paths.
                    let (mut a, mut b) = (u, v);
                    let mut left = vec![a];
                    let mut right = vec![b];
                    while a != b {
                        if depth[a] >= depth[b] {
                            a = parent[a];
                            left.push(a);
                        } else {
                            b = parent[b];
                            right.push(b);
                        }
                    }
                    right.pop();
                    right.reverse();
                    left.extend(right);
                    return Some(left);
                }
            }
        }
    }
    None
}

/// Path-addition embedding of a biconnected graph.
fn block_is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(g).expect("a biconnected block with 5+ vertices has a cycle");
    let mut embedded_vertices: VertexSet = cycle.iter().copied().collect();
    let mut embedded = vec![VertexSet::EMPTY; n];
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[u].insert(v);
        embedded[v].insert(u);
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    loop {
        let fragments = fragments(g, embedded_vertices, &embedded);
        if fragments.is_empty() {
            return true;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| {
                    let fs: VertexSet = face.iter().copied().collect();
                    frag.attachments.is_subset(fs)
                })
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment");
        let path = fragment_path(g, &fragments[fi]);
        for w in path.windows(2) {
            embedded[w[0]].insert(w[1]);
            embedded[w[1]].insert(w[0]);
        }
        for &v in &path {
            embedded_vertices.insert(v);
        }
        let face = faces.swap_remove(face_index);
        let (a, b) = (path[0], *path.last().unwrap());
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        let mut first = Vec::new();
        let mut k = i;
        loop {
            first.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % len;
        }
        first.extend(interior.iter().rev());
        let mut second = Vec::new();
        let mut k = j;
        loop {
            second.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % len;
        }
        second.extend(interior.iter());
        faces.push(first);
        faces.push(second);
    }
}

struct Fragment {
    /// Unembedded vertices of the fragment (empty for a single chord edge).
    inner: VertexSet,
    attachments: VertexSet,
}

fn fragments(g: &Graph, embedded_vertices: VertexSet, embedded: &[VertexSet]) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in embedded_vertices {
        let chords = g
            .neighbors(u)
            .intersection(embedded_vertices)
            .difference(embedded[u])
            .difference(VertexSet::full(u + 1));
        for v in chords {
            out.push(Fragment {
                inner: VertexSet::EMPTY,
                attachments: [u, v].into_iter().collect(),
            });
        }
    }
    let mut rest = g.vertices().difference(embedded_vertices);
    while let Some(start) = rest.first() {
        let comp = g.reach_within(start, rest);
        rest = rest.difference(comp);
        out.push(Fragment {
            inner: comp,
            attachments: g.neighborhood(comp).intersection(embedded_vertices),
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &Graph, frag: &Fragment) -> Vec<usize> {
    let a = frag.attachments.first().expect("fragment has attachments");
    if frag.inner.is_empty() {
        let b = frag.attachments.difference(VertexSet::singleton(a)).first().unwrap();
        return vec![a, b];
    }
    let others = frag.attachments.difference(VertexSet::singleton(a));
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let mut seen = VertexSet::EMPTY;
    for v in g.neighbors(a).intersection(frag.inner) {
        parent[v] = a;
        seen.insert(v);
        queue.push_back(v);
    }
    while let Some(x) = queue.pop_front() {
        if let Some(b) = g.neighbors(x).intersection(others).first() {
            let mut path = vec![b, x];
            let mut y = x;
            while parent[y] != a {
                y = parent[y];
                path.push(y);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for v in g.neighbors(x).intersection(frag.inner).difference(seen) {
            parent[v] = x;
            seen.insert(v);
            queue.push_back(v);
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments joined through them")
}

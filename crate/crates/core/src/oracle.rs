//! Exact minor containment and Hadwiger numbers by exhaustive search.
//!
//! Branch sets are built one at a time. The lowest undecided vertex either
//! starts a new branch set or is discarded; a growing set then decides, for its
//! lowest undecided neighbor, whether to exclude it or absorb it. When no
//! neighbor is left the set is finalized. Each family of disjoint connected
//! branch sets is reached exactly once, and blocks appear in order of their
//! least vertex.

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minor::{verify_minor_model, MinorModel};

/// Default cap on search expansions.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct MinorQuery<'a> {
    pub host: &'a Graph,
    pub target: &'a Graph,
    pub budget: u64,
}

impl<'a> MinorQuery<'a> {
    pub fn new(host: &'a Graph, target: &'a Graph, budget: u64) -> Result<Self> {
        if budget == 0 {
            return Err(Error::Domain("budget must be positive".into()));
        }
        Ok(MinorQuery { host, target, budget })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Counting, edge and clique bounds. Turning this off leaves the plain
    /// enumeration, for cross-checking.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorAnswer {
    Yes(MinorModel),
    No,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorOutcome {
    pub answer: MinorAnswer,
    pub expansions: u64,
}

impl MinorOutcome {
    pub fn witness(&self) -> Option<&MinorModel> {
        match &self.answer {
            MinorAnswer::Yes(m) => Some(m),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        let (answer, witness) = match &self.answer {
            MinorAnswer::Yes(m) => ("yes", serde_json::to_value(m).expect("model serializes")),
            MinorAnswer::No => ("no", serde_json::Value::Null),
            MinorAnswer::BudgetExceeded => ("budget_exceeded", serde_json::Value::Null),
        };
        json!({ "answer": answer, "witness": witness, "expansions": self.expansions }).to_string()
    }
}

pub fn has_minor(q: &MinorQuery) -> MinorOutcome {
    has_minor_with(q, SearchOptions::default())
}

pub fn has_minor_with(q: &MinorQuery, opts: SearchOptions) -> MinorOutcome {
    let outcome = search(q.host, q.target, q.budget, opts);
    if let MinorAnswer::Yes(m) = &outcome.answer {
        debug_assert_eq!(verify_minor_model(q.host, m, q.target), Ok(()));
        assert!(
            verify_minor_model(q.host, m, q.target).is_ok(),
            "oracle produced an invalid witness"
        );
    }
    outcome
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

fn search(host: &Graph, target: &Graph, budget: u64, opts: SearchOptions) -> MinorOutcome {
    let k = target.order();
    let n = host.order();
    let done = |answer| MinorOutcome {
        answer,
        expansions: 0,
    };
    if k == 0 {
        return done(MinorAnswer::Yes(MinorModel::new(Vec::new())));
    }
    if k > n {
        return done(MinorAnswer::No);
    }
    let clique = is_complete(target);
    if opts.prune {
        if host.edge_count() < target.edge_count() {
            return done(MinorAnswer::No);
        }
        if clique {
            if let Some(c) = find_clique(host, k) {
                let sets = c.iter().copied().map(VertexSet::singleton).collect();
                return done(MinorAnswer::Yes(MinorModel::new(sets)));
            }
        }
    }

    let mut degrees = target.degrees();
    degrees.sort_unstable();
    let mut s = Search {
        host,
        target,
        k,
        clique,
        target_edges: target.edge_count(),
        min_target_degree: degrees.first().copied().unwrap_or(0),
        prune: opts.prune,
        budget,
        expansions: 0,
        fin: Vec::with_capacity(k),
        witness: None,
    };
    let found = s.dfs(VertexSet::EMPTY, VertexSet::EMPTY, host.vertices());
    let answer = match found {
        Ok(true) => MinorAnswer::Yes(s.witness.take().expect("witness recorded")),
        Ok(false) => MinorAnswer::No,
        Err(OutOfBudget) => MinorAnswer::BudgetExceeded,
    };
    MinorOutcome {
        answer,
        expansions: s.expansions,
    }
}

struct OutOfBudget;

struct Search<'a> {
    host: &'a Graph,
    target: &'a Graph,
    k: usize,
    clique: bool,
    target_edges: usize,
    min_target_degree: usize,
    prune: bool,
    budget: u64,
    expansions: u64,
    fin: Vec<(VertexSet, VertexSet)>,
    witness: Option<MinorModel>,
}

impl Search<'_> {
    /// `cur` is the growing branch set (possibly empty), `excluded` the
    /// undecided vertices it may no longer absorb.
    fn dfs(
        &mut self,
        cur: VertexSet,
        excluded: VertexSet,
        undecided: VertexSet,
    ) -> Result<bool, OutOfBudget> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(OutOfBudget);
        }
        if self.prune && !self.feasible(cur, excluded, undecided) {
            return Ok(false);
        }

        if cur.is_empty() {
            if self.fin.len() == self.k {
                return Ok(self.accept());
            }
            let Some(v) = undecided.first() else {
                return Ok(false);
            };
            let rest = undecided.difference(VertexSet::singleton(v));
            if self.dfs(VertexSet::singleton(v), VertexSet::EMPTY, rest)? {
                return Ok(true);
            }
            return self.dfs(VertexSet::EMPTY, VertexSet::EMPTY, rest);
        }

        let nbhd = self.host.neighborhood(cur);
        let candidates = nbhd.intersection(undecided).difference(excluded);
        match candidates.first() {
            None => {
                if self.prune && self.clique && !self.fin.iter().all(|&(_, fn_)| !fn_.is_disjoint(cur)) {
                    return Ok(false);
                }
                self.fin.push((cur, nbhd));
                let r = self.dfs(VertexSet::EMPTY, VertexSet::EMPTY, undecided);
                self.fin.pop();
                r
            }
            Some(u) => {
                let single = VertexSet::singleton(u);
                if self.dfs(cur, excluded.union(single), undecided)? {
                    return Ok(true);
                }
                self.dfs(cur.union(single), excluded, undecided.difference(single))
            }
        }
    }

    fn feasible(&self, cur: VertexSet, excluded: VertexSet, undecided: VertexSet) -> bool {
        let f = self.fin.len();
        let c = usize::from(!cur.is_empty());
        if f + c > self.k {
            return false;
        }
        let needed_new = self.k - f - c;
        if undecided.len() < needed_new {
            return false;
        }
        let cur_nbhd = self.host.neighborhood(cur);

        // Edges of the quotient with every undecided vertex kept as a singleton;
        // merging and discarding only lose edges.
        let mut edges = 0;
        for (i, &(_, ni)) in self.fin.iter().enumerate() {
            for &(fj, _) in &self.fin[i + 1..] {
                edges += usize::from(!ni.is_disjoint(fj));
            }
            edges += usize::from(!ni.is_disjoint(cur));
            edges += ni.intersection(undecided).len();
        }
        edges += cur_nbhd.intersection(undecided).len();
        edges += undecided
            .iter()
            .map(|v| self.host.neighbors(v).intersection(undecided).len())
            .sum::<usize>()
            / 2;
        if edges < self.target_edges {
            return false;
        }

        if self.clique {
            let reach = if cur.is_empty() {
                VertexSet::EMPTY
            } else {
                let room = cur.union(undecided.difference(excluded));
                let start = cur.first().expect("nonempty");
                self.host.reach_within(start, room)
            };
            for &(_, fn_) in &self.fin {
                let touches_cur = !fn_.is_disjoint(cur);
                let future = usize::from(touches_cur) + fn_.intersection(undecided).len();
                if future < self.k - f {
                    return false;
                }
                if c == 1 && !touches_cur && fn_.is_disjoint(reach) {
                    return false;
                }
            }
        } else if self.min_target_degree > 0 {
            for (i, &(_, ni)) in self.fin.iter().enumerate() {
                let mut deg = usize::from(!ni.is_disjoint(cur)) + ni.intersection(undecided).len();
                for (j, &(fj, _)) in self.fin.iter().enumerate() {
                    if i != j && !ni.is_disjoint(fj) {
                        deg += 1;
                    }
                }
                if deg < self.min_target_degree {
                    return false;
                }
            }
        }
        true
    }

    /// All `k` branch sets are fixed; look for a placement of the target.
    fn accept(&mut self) -> bool {
        let k = self.k;
        let mut quotient = vec![0u64; k];
        for (i, row) in quotient.iter_mut().enumerate() {
            for j in 0..k {
                if i != j && !self.fin[i].1.is_disjoint(self.fin[j].0) {
                    *row |= 1 << j;
                }
            }
        }
        let Some(placement) = embed(self.target, &quotient) else {
            return false;
        };
        let sets = placement.iter().map(|&b| self.fin[b].0).collect();
        self.witness = Some(MinorModel::new(sets));
        true
    }
}

/// Injective map from target vertices to quotient vertices preserving
/// adjacency (as a subgraph). The quotient has exactly as many vertices as the
/// target, so this is a bijection.
fn embed(target: &Graph, quotient: &[u64]) -> Option<Vec<usize>> {
    let k = target.order();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(target.degree(v)));
    let mut map = vec![usize::MAX; k];
    fn go(
        target: &Graph,
        quotient: &[u64],
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: u64,
    ) -> bool {
        let Some(&t) = order.get(depth) else {
            return true;
        };
        for b in 0..quotient.len() {
            if used >> b & 1 == 1 || (quotient[b].count_ones() as usize) < target.degree(t) {
                continue;
            }
            let ok = order[..depth]
                .iter()
                .all(|&s| !target.has_edge(s, t) || quotient[b] >> map[s] & 1 == 1);
            if ok {
                map[t] = b;
                if go(target, quotient, order, depth + 1, map, used | 1 << b) {
                    return true;
                }
            }
        }
        map[t] = usize::MAX;
        false
    }
    go(target, quotient, &order, 0, &mut map, 0).then_some(map)
}

/// Some `k`-clique of `g`, least-label first by lexicographic search.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, k: usize, cand: VertexSet, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        if chosen.len() + cand.len() < k {
            return false;
        }
        for v in cand {
            chosen.push(v);
            let rest = cand.intersection(g.neighbors(v)).difference(VertexSet::full(v + 1));
            if go(g, k, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(g, k, g.vertices(), &mut chosen).then_some(chosen)
}

/// Largest `k` with a `K_k` minor, with its witness. When the budget runs out
/// the value is a lower bound and `upper` bounds it from above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadwigerResult {
    pub value: usize,
    pub upper: usize,
    pub exact: bool,
    pub witness: MinorModel,
    pub expansions: u64,
}

impl HadwigerResult {
    pub fn to_json(&self) -> String {
        json!({
            "hadwiger": self.value,
            "upper": self.upper,
            "exact": self.exact,
            "witness": self.witness,
            "expansions": self.expansions,
        })
        .to_string()
    }
}

/// Trivial upper bound: `n`, and `k(k-1)/2 <= |E|`.
fn hadwiger_upper_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    let mut k = 0;
    while k < g.order() && (k + 1) * k / 2 <= m {
        k += 1;
    }
    k
}

pub fn hadwiger(g: &Graph, budget: u64) -> HadwigerResult {
    hadwiger_with(g, budget, SearchOptions::default())
}

/// Counts every expansion against one shared `budget`.
pub fn hadwiger_with(g: &Graph, budget: u64, opts: SearchOptions) -> HadwigerResult {
    let n = g.order();
    let upper = hadwiger_upper_bound(g);
    let mut best = MinorModel::new(Vec::new());
    let mut expansions = 0;
    let mut k = 1;
    if opts.prune {
        if let Some(c) = largest_clique(g) {
            k = c.len() + 1;
            best = MinorModel::new(c.into_iter().map(VertexSet::singleton).collect());
        }
    }
    while k <= n {
        if opts.prune && k > upper {
            break;
        }
        let remaining = budget.saturating_sub(expansions).max(1);
        let target = crate::generators::complete_graph(k);
        let out = search(g, &target, remaining, opts);
        expansions += out.expansions;
        match out.answer {
            MinorAnswer::Yes(m) => {
                best = m;
                k += 1;
            }
            MinorAnswer::No => break,
            MinorAnswer::BudgetExceeded => {
                return HadwigerResult {
                    value: best.len(),
                    upper,
                    exact: false,
                    witness: best,
                    expansions,
                };
            }
        }
    }
    HadwigerResult {
        value: best.len(),
        upper: best.len(),
        exact: true,
        witness: best,
        expansions,
    }
}

fn largest_clique(g: &Graph) -> Option<Vec<usize>> {
    let mut best = None;
    let mut k = 1;
    while let Some(c) = find_clique(g, k) {
        best = Some(c);
        k += 1;
    }
    best
}

//! Constructive clique minors of self-complementary graphs.
//!
//! Every nontrivial cycle of an antimorphism `rho` has length `4k`. Starting
//! from a vertex `a` with `a ~ rho(a)`, the pairs `{rho^(2i)(a), rho^(2i+1)(a)}`
//! are edges (since `rho^2` is an automorphism) and any two such pairs, from the
//! same cycle or from different cycles, are joined by an edge: if the even
//! members are not adjacent, applying `rho` makes the odd members adjacent.
//! Contracting all pairs therefore gives `K_(n/2)` on `4k` vertices. A fixed
//! point is adjacent to exactly one member of each pair, which adds one more
//! clique vertex when `n = 4k + 1`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::antimorphism::{check_sachs, find_antimorphism, is_antimorphism};
use crate::error::{Error, Result};
use crate::generators::complete_graph;
use crate::graph::{Graph, VertexSet};
use crate::minor::{verify_minor_model, MinorModel};
use crate::permutation::{CycleDecomposition, Permutation};

/// Matching built on one antimorphism cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleMatching {
    pub cycle: Vec<usize>,
    pub generator: usize,
    /// Odd offset along the cycle between the two ends of each edge.
    pub shift: usize,
    /// `(rho^(2i)(a), rho^(2i+shift)(a))` for `i` in `0..len/2`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractionPlan {
    pub per_cycle: Vec<CycleMatching>,
    pub fixed_vertex: Option<usize>,
}

impl ContractionPlan {
    pub fn matching(&self) -> Vec<(usize, usize)> {
        self.per_cycle
            .iter()
            .flat_map(|c| c.edges.iter().copied())
            .collect()
    }
}

fn check_cycle(rho: &Permutation, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 4 || !cycle.len().is_multiple_of(4) {
        return Err(Error::Domain(format!(
            "cycle length {} is not a positive multiple of 4",
            cycle.len()
        )));
    }
    for (i, &v) in cycle.iter().enumerate() {
        if v >= rho.len() || rho.apply(v) != cycle[(i + 1) % cycle.len()] {
            return Err(Error::Domain(format!("cycle is not closed under rho at {v}")));
        }
    }
    Ok(())
}

/// Least vertex `a` on the cycle with `a ~ rho(a)`. Every vertex is adjacent
/// to exactly one of `rho(a)` and `rho^-1(a)`, so one exists for any
/// antimorphism.
pub fn choose_generator(g: &Graph, rho: &Permutation, cycle: &[usize]) -> Result<usize> {
    check_cycle(rho, cycle)?;
    cycle
        .iter()
        .copied()
        .filter(|&a| g.has_edge(a, rho.apply(a)))
        .min()
        .ok_or_else(|| {
            Error::InternalConsistency(format!(
                "no vertex a on cycle {cycle:?} has a ~ rho(a); rho is not an antimorphism"
            ))
        })
}

fn shifted_matching(
    g: &Graph,
    rho: &Permutation,
    a: usize,
    len: usize,
    shift: usize,
) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::with_capacity(len / 2);
    let mut even = a;
    for _ in 0..len / 2 {
        let odd = rho.apply_pow(even, shift);
        if !g.has_edge(even, odd) {
            return Err(Error::InternalConsistency(format!(
                "claimed matching edge ({even}, {odd}) is absent"
            )));
        }
        edges.push((even, odd));
        even = rho.apply_pow(even, 2);
    }
    Ok(edges)
}

/// The shift-1 matching `{rho^(2i)(a), rho^(2i+1)(a)}` on one cycle, with `a`
/// from [`choose_generator`].
pub fn cycle_matching(g: &Graph, rho: &Permutation, cycle: &[usize]) -> Result<Vec<(usize, usize)>> {
    let a = choose_generator(g, rho, cycle)?;
    shifted_matching(g, rho, a, cycle.len(), 1)
}

fn single_cycle(g: &Graph, rho: &Permutation) -> Result<Vec<usize>> {
    if !is_antimorphism(g, rho) {
        return Err(Error::Domain(format!("{rho} is not an antimorphism of the graph")));
    }
    let d = rho.cycle_decomposition();
    match (d.cycles.as_slice(), d.fixed_points.is_empty()) {
        ([c], true) => Ok(c.clone()),
        _ => Err(Error::Domain(format!("{rho} is not a single cycle"))),
    }
}

/// Odd shifts `t` with `a ~ rho^t(a)` for the generator `a` of a single-cycle
/// antimorphism. There are exactly `n/4` of them.
pub fn valid_shifts(g: &Graph, rho: &Permutation) -> Result<Vec<usize>> {
    let cycle = single_cycle(g, rho)?;
    let a = choose_generator(g, rho, &cycle)?;
    Ok((1..cycle.len())
        .step_by(2)
        .filter(|&t| g.has_edge(a, rho.apply_pow(a, t)))
        .collect())
}

/// Perfect matching `{rho^(2i)(a), rho^(2i+t)(a)}` for a single-cycle
/// antimorphism and an odd shift `t` with `a ~ rho^t(a)`.
pub fn odd_shift_matching(g: &Graph, rho: &Permutation, t: usize) -> Result<Vec<(usize, usize)>> {
    let cycle = single_cycle(g, rho)?;
    let a = choose_generator(g, rho, &cycle)?;
    let valid = valid_shifts(g, rho)?;
    if !valid.contains(&t) {
        return Err(Error::InvalidShift { shift: t, valid });
    }
    shifted_matching(g, rho, a, cycle.len(), t)
}

/// One shift-1 matching per nontrivial cycle, in decomposition order, plus the
/// fixed point when `n ≡ 1 (mod 4)`.
pub fn build_plan(g: &Graph, rho: &Permutation) -> Result<ContractionPlan> {
    if !is_antimorphism(g, rho) {
        return Err(Error::Domain(format!("{rho} is not an antimorphism of the graph")));
    }
    let d = rho.cycle_decomposition();
    check_sachs(&d, g.order()).map_err(|e| Error::Domain(e.to_string()))?;
    let per_cycle = d
        .cycles
        .iter()
        .map(|cycle| {
            let generator = choose_generator(g, rho, cycle)?;
            let edges = shifted_matching(g, rho, generator, cycle.len(), 1)?;
            Ok(CycleMatching {
                cycle: cycle.clone(),
                generator,
                shift: 1,
                edges,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContractionPlan {
        per_cycle,
        fixed_vertex: d.fixed_points.first().copied(),
    })
}

/// Branch sets from a plan: each matched pair, then the fixed vertex. Verified
/// as a clique model before returning.
pub fn realize_minor(g: &Graph, plan: &ContractionPlan) -> Result<MinorModel> {
    let mut sets: Vec<VertexSet> = plan
        .matching()
        .into_iter()
        .map(|(u, v)| [u, v].into_iter().collect())
        .collect();
    if let Some(f) = plan.fixed_vertex {
        sets.push(VertexSet::singleton(f));
    }
    let model = MinorModel::new(sets);
    verify_minor_model(g, &model, &complete_graph(model.len()))
        .map_err(|e| Error::TheoremViolation(e.to_string()))?;
    let expected = g.order().div_ceil(2);
    if model.len() != expected {
        return Err(Error::TheoremViolation(format!(
            "expected {expected} branch sets, built {}",
            model.len()
        )));
    }
    Ok(model)
}

/// Everything the constructive proof produces for one graph.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremWitness {
    #[serde(serialize_with = "serialize_display")]
    pub rho: Permutation,
    pub decomposition: CycleDecomposition,
    pub plan: ContractionPlan,
    pub model: MinorModel,
}

fn serialize_display<S: serde::Serializer>(p: &Permutation, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

impl TheoremWitness {
    /// Human-readable account of the contraction.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "rho = {}", self.rho);
        for c in &self.plan.per_cycle {
            let edges: Vec<String> = c.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = writeln!(
                out,
                "cycle of length {} from generator {}: contract {}",
                c.cycle.len(),
                c.generator,
                edges.join(" ")
            );
        }
        if let Some(f) = self.plan.fixed_vertex {
            let _ = writeln!(out, "fixed vertex {f} joins every contracted pair");
        }
        let _ = write!(out, "result: K{} minor", self.model.len());
        out
    }
}

/// Runs the full construction: antimorphism, plan, verified model. `None` when
/// `g` is not self-complementary.
pub fn prove(g: &Graph) -> Result<Option<TheoremWitness>> {
    let Some(rho) = find_antimorphism(g) else {
        return Ok(None);
    };
    let plan = build_plan(g, &rho)?;
    let model = realize_minor(g, &plan)?;
    Ok(Some(TheoremWitness {
        decomposition: rho.cycle_decomposition(),
        rho,
        plan,
        model,
    }))
}

/// A verified `K_⌊(n+1)/2⌋` model, or `None` when `g` is not
/// self-complementary.
pub fn theorem_minor(g: &Graph) -> Result<Option<MinorModel>> {
    Ok(prove(g)?.map(|w| w.model))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, sharp_4n};

    #[test]
    fn p4_plan_and_model() {
        let g = path(4);
        let rho = find_antimorphism(&g).unwrap();
        assert_eq!(choose_generator(&g, &rho, &[0, 1, 3, 2]).unwrap(), 0);
        assert_eq!(cycle_matching(&g, &rho, &[0, 1, 3, 2]).unwrap(), vec![(0, 1), (3, 2)]);
        let plan = build_plan(&g, &rho).unwrap();
        assert_eq!(plan.per_cycle.len(), 1);
        assert_eq!(plan.fixed_vertex, None);
        let m = realize_minor(&g, &plan).unwrap();
        assert_eq!(m.to_json(), r#"{"k":2,"branch_sets":[[0,1],[2,3]]}"#);
    }

    #[test]
    fn c5_plan_and_model() {
        let g = cycle(5);
        let rho = find_antimorphism(&g).unwrap();
        assert_eq!(choose_generator(&g, &rho, &[1, 2, 4, 3]).unwrap(), 1);
        assert_eq!(cycle_matching(&g, &rho, &[1, 2, 4, 3]).unwrap(), vec![(1, 2), (4, 3)]);
        let plan = build_plan(&g, &rho).unwrap();
        assert_eq!(plan.fixed_vertex, Some(0));
        let m = theorem_minor(&g).unwrap().unwrap();
        assert_eq!(m.to_json(), r#"{"k":3,"branch_sets":[[1,2],[3,4],[0]]}"#);
    }

    #[test]
    fn k1_has_empty_plan() {
        let g = Graph::empty(1).unwrap();
        let w = prove(&g).unwrap().unwrap();
        assert!(w.plan.per_cycle.is_empty());
        assert_eq!(w.plan.fixed_vertex, Some(0));
        assert_eq!(w.model.len(), 1);
    }

    #[test]
    fn generator_skips_least_vertex_when_needed() {
        // P4 relabeled so that the least vertex 0 is not adjacent to rho(0).
        let g = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3)]).unwrap();
        let rho = find_antimorphism(&g).unwrap();
        let cycle = &rho.cycle_decomposition().cycles[0];
        let a = choose_generator(&g, &rho, cycle).unwrap();
        assert!(g.has_edge(a, rho.apply(a)));
        if !g.has_edge(0, rho.apply(0)) {
            assert_ne!(a, 0);
        }
    }

    #[test]
    fn p4_shifts() {
        let g = path(4);
        let rho = find_antimorphism(&g).unwrap();
        assert_eq!(valid_shifts(&g, &rho).unwrap(), vec![1]);
        assert_eq!(odd_shift_matching(&g, &rho, 1).unwrap(), vec![(0, 1), (3, 2)]);
        assert_eq!(
            odd_shift_matching(&g, &rho, 3).unwrap_err(),
            Error::InvalidShift { shift: 3, valid: vec![1] }
        );
    }

    #[test]
    fn sharp_4n_2_gives_k4() {
        let g = sharp_4n(2).unwrap();
        let m = theorem_minor(&g).unwrap().unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(verify_minor_model(&g, &m, &complete_graph(4)), Ok(()));
    }

    #[test]
    fn non_sc_is_none() {
        assert_eq!(theorem_minor(&complete_graph(4)).unwrap(), None);
    }

    #[test]
    fn invalid_rho_is_a_domain_error() {
        let g = path(4);
        assert!(matches!(
            build_plan(&g, &Permutation::identity(4)),
            Err(Error::Domain(_))
        ));
    }
}

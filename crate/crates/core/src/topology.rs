//! Outerplanarity, planarity, apex numbers, and clique-minor certificates for
//! intrinsic linking (`K_6`) and knotting (`K_7`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::construction::theorem_minor;
use crate::error::{Error, Result};
use crate::generators::{complete_bipartite, complete_graph};
use crate::graph::{Graph, VertexSet};
use crate::minor::MinorModel;
use crate::oracle::{has_minor, MinorAnswer, MinorQuery};
use crate::planarity;

pub use crate::planarity::is_planar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    K4,
    K23,
    K5,
    K33,
}

impl Obstruction {
    pub fn graph(self) -> Graph {
        match self {
            Obstruction::K4 => complete_graph(4),
            Obstruction::K23 => complete_bipartite(2, 3),
            Obstruction::K5 => complete_graph(5),
            Obstruction::K33 => complete_bipartite(3, 3),
        }
    }
}

/// A forbidden minor together with its model in the host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcludedMinor {
    pub kind: Obstruction,
    pub model: MinorModel,
}

/// Outerplanar iff adding a vertex adjacent to everything keeps it planar.
pub fn is_outerplanar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 2 && g.edge_count() > 2 * n - 3 {
        return false;
    }
    match g.join(&complete_graph(1)) {
        Ok(apexed) => is_planar(&apexed),
        // No room for the extra vertex at full capacity; use the definition.
        Err(_) => matches!(
            first_minor(g, &[Obstruction::K4, Obstruction::K23], u64::MAX),
            Ok(None)
        ),
    }
}

fn first_minor(g: &Graph, kinds: &[Obstruction], budget: u64) -> Result<Option<ExcludedMinor>> {
    let mut spent = 0;
    for &kind in kinds {
        let target = kind.graph();
        let q = MinorQuery::new(g, &target, budget.saturating_sub(spent).max(1))?;
        let out = has_minor(&q);
        spent += out.expansions;
        match out.answer {
            MinorAnswer::Yes(model) => return Ok(Some(ExcludedMinor { kind, model })),
            MinorAnswer::No => {}
            MinorAnswer::BudgetExceeded => return Err(Error::BudgetExceeded { expansions: spent }),
        }
    }
    Ok(None)
}

/// `None` when `g` is outerplanar, otherwise a `K_4` or `K_{2,3}` model.
pub fn outerplanarity_witness(g: &Graph, budget: u64) -> Result<Option<ExcludedMinor>> {
    if is_outerplanar(g) {
        return Ok(None);
    }
    first_minor(g, &[Obstruction::K4, Obstruction::K23], budget)?
        .map(Some)
        .ok_or_else(|| Error::InternalConsistency("non-outerplanar graph without K4 or K2,3 minor".into()))
}

/// `None` when `g` is planar, otherwise a `K_5` or `K_{3,3}` model.
pub fn planarity_witness(g: &Graph, budget: u64) -> Result<Option<ExcludedMinor>> {
    if is_planar(g) {
        return Ok(None);
    }
    first_minor(g, &[Obstruction::K5, Obstruction::K33], budget)?
        .map(Some)
        .ok_or_else(|| Error::InternalConsistency("non-planar graph without K5 or K3,3 minor".into()))
}

/// A clique-minor certificate. It is only ever a sufficient condition:
/// `NotFound` means no such clique minor exists, which says nothing about
/// linking or knotting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "model", rename_all = "snake_case")]
pub enum Certificate {
    Present(MinorModel),
    NotFound,
    Indeterminate,
}

impl Certificate {
    pub fn model(&self) -> Option<&MinorModel> {
        match self {
            Certificate::Present(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_present(&self) -> bool {
        matches!(self, Certificate::Present(_))
    }
}

/// A verified `K_k` model: from the self-complementary construction when it is
/// large enough, otherwise from the exact search.
pub fn clique_certificate(g: &Graph, k: usize, budget: u64) -> Result<Certificate> {
    if let Some(model) = theorem_minor(g)? {
        if model.len() >= k {
            return Ok(Certificate::Present(model.truncated(k)));
        }
    }
    let target = complete_graph(k);
    let out = has_minor(&MinorQuery::new(g, &target, budget)?);
    Ok(match out.answer {
        MinorAnswer::Yes(m) => Certificate::Present(m),
        MinorAnswer::No => Certificate::NotFound,
        MinorAnswer::BudgetExceeded => Certificate::Indeterminate,
    })
}

/// `K_6` minor: sufficient for every spatial embedding to contain a pair of
/// linked cycles.
pub fn il_certificate(g: &Graph, budget: u64) -> Result<Certificate> {
    clique_certificate(g, 6, budget)
}

/// `K_7` minor: sufficient for every spatial embedding to contain a knotted
/// cycle.
pub fn ik_certificate(g: &Graph, budget: u64) -> Result<Certificate> {
    clique_certificate(g, 7, budget)
}

/// Least set of at most `j` vertices (by size, then lexicographically) whose
/// deletion leaves a planar graph.
pub fn is_n_apex(g: &Graph, j: usize) -> Option<VertexSet> {
    let n = g.order();
    for size in 0..=j.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s: VertexSet = combo.iter().copied().collect();
            if planarity::is_planar(&g.delete_vertices(s)) {
                return Some(s);
            }
            let Some(i) = (0..size).rev().find(|&i| combo[i] < n - size + i) else {
                break;
            };
            combo[i] += 1;
            for t in i + 1..size {
                combo[t] = combo[t - 1] + 1;
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub n: usize,
    pub outerplanar: bool,
    pub planar: bool,
    pub il_certificate: Certificate,
    pub ik_certificate: Certificate,
    /// For each requested `j`: the least deletion set making `g` planar, or
    /// `None` if `g` is not `j`-apex.
    pub apex: BTreeMap<usize, Option<Vec<usize>>>,
}

impl TopologyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Whether any certificate search ran out of budget.
    pub fn indeterminate(&self) -> bool {
        self.il_certificate == Certificate::Indeterminate
            || self.ik_certificate == Certificate::Indeterminate
    }
}

pub fn report(g: &Graph, apex_range: impl IntoIterator<Item = usize>, budget: u64) -> Result<TopologyReport> {
    let planar = is_planar(g);
    let outerplanar = planar && is_outerplanar(g);
    let ik = ik_certificate(g, budget)?;
    let il = match &ik {
        Certificate::Present(m) => Certificate::Present(m.truncated(6)),
        _ => il_certificate(g, budget)?,
    };
    let apex = apex_range
        .into_iter()
        .map(|j| (j, is_n_apex(g, j).map(VertexSet::to_vec)))
        .collect();
    Ok(TopologyReport {
        n: g.order(),
        outerplanar,
        planar,
        il_certificate: il,
        ik_certificate: ik,
        apex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, petersen, sharp_4n};
    use crate::minor::verify_minor_model;
    use crate::oracle::DEFAULT_BUDGET;

    #[test]
    fn outerplanar_examples() {
        assert!(is_outerplanar(&cycle(5)));
        assert!(!is_outerplanar(&complete_graph(4)));
        let w = outerplanarity_witness(&complete_graph(4), DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(w.kind, Obstruction::K4);
        assert_eq!(w.model.len(), 4);
        let k23 = complete_bipartite(2, 3);
        assert!(!is_outerplanar(&k23));
        let w = outerplanarity_witness(&k23, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(w.kind, Obstruction::K23);
        assert_eq!(outerplanarity_witness(&cycle(6), DEFAULT_BUDGET).unwrap(), None);
    }

    #[test]
    fn planarity_witnesses() {
        let w = planarity_witness(&complete_graph(5), DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(w.kind, Obstruction::K5);
        let p = petersen();
        let w = planarity_witness(&p, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(verify_minor_model(&p, &w.model, &w.kind.graph()), Ok(()));
    }

    #[test]
    fn apex_examples() {
        assert_eq!(is_n_apex(&complete_graph(5), 1), Some(VertexSet::singleton(0)));
        assert_eq!(is_n_apex(&complete_graph(7), 1), None);
        assert_eq!(is_n_apex(&complete_graph(7), 3).map(|s| s.len()), Some(3));
        assert_eq!(is_n_apex(&cycle(4), 0), Some(VertexSet::EMPTY));
        assert_eq!(is_n_apex(&complete_graph(6), 0), None);
        assert_eq!(
            is_n_apex(&complete_graph(6), 2),
            Some([0, 1].into_iter().collect())
        );
    }

    #[test]
    fn certificates_on_small_graphs() {
        assert_eq!(il_certificate(&path(4), DEFAULT_BUDGET).unwrap(), Certificate::NotFound);
        assert_eq!(ik_certificate(&path(4), DEFAULT_BUDGET).unwrap(), Certificate::NotFound);
        let k7 = complete_graph(7);
        assert!(ik_certificate(&k7, DEFAULT_BUDGET).unwrap().is_present());
    }

    #[test]
    fn report_examples() {
        let r = report(&cycle(5), 0..=1, DEFAULT_BUDGET).unwrap();
        assert!(r.outerplanar && r.planar);
        assert_eq!(r.il_certificate, Certificate::NotFound);
        assert_eq!(r.apex[&0], Some(vec![]));
        let r = report(&sharp_4n(2).unwrap(), 0..=1, DEFAULT_BUDGET).unwrap();
        assert!(!r.outerplanar);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["il_certificate"]["status"], "not_found");
    }
}

//! Minor models: disjoint connected branch sets that witness a minor.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Branch sets in the host graph; set `i` stands for vertex `i` of the target.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "ModelJson", from = "ModelJson")]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

#[derive(Serialize, Deserialize)]
struct ModelJson {
    k: usize,
    branch_sets: Vec<Vec<usize>>,
}

impl From<MinorModel> for ModelJson {
    fn from(m: MinorModel) -> Self {
        ModelJson {
            k: m.branch_sets.len(),
            branch_sets: m.branch_sets.iter().map(|s| s.to_vec()).collect(),
        }
    }
}

impl From<ModelJson> for MinorModel {
    fn from(j: ModelJson) -> Self {
        MinorModel {
            branch_sets: j
                .branch_sets
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        }
    }
}

impl MinorModel {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorModel { branch_sets }
    }

    pub fn len(&self) -> usize {
        self.branch_sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.branch_sets.is_empty()
    }

    /// Single-line JSON `{"k": .., "branch_sets": [[..], ..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("model serializes")
    }

    /// The first `k` branch sets. A prefix of a clique model is again a clique
    /// model.
    pub fn truncated(&self, k: usize) -> MinorModel {
        MinorModel {
            branch_sets: self.branch_sets.iter().take(k).copied().collect(),
        }
    }

    pub fn covered(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .fold(VertexSet::EMPTY, |acc, s| acc.union(*s))
    }
}

/// First reason a model fails to witness `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    WrongCount { expected: usize, found: usize },
    Empty { set: usize },
    OutOfRange { set: usize, vertex: usize },
    Overlap { first: usize, second: usize },
    Disconnected { set: usize },
    MissingEdge { first: usize, second: usize },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::WrongCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            ModelViolation::Empty { set } => write!(f, "branch set {set} is empty"),
            ModelViolation::OutOfRange { set, vertex } => {
                write!(f, "branch set {set} contains out-of-range vertex {vertex}")
            }
            ModelViolation::Overlap { first, second } => {
                write!(f, "branch sets {first} and {second} overlap")
            }
            ModelViolation::Disconnected { set } => {
                write!(f, "branch set {set} is not connected")
            }
            ModelViolation::MissingEdge { first, second } => {
                write!(f, "no host edge between branch sets {first} and {second}")
            }
        }
    }
}

/// Checks that `model` witnesses `target` as a minor of `host`: one nonempty
/// connected branch set per target vertex, pairwise disjoint, and a host edge
/// between the sets of every target edge.
pub fn verify_minor_model(
    host: &Graph,
    model: &MinorModel,
    target: &Graph,
) -> Result<(), ModelViolation> {
    let sets = &model.branch_sets;
    if sets.len() != target.order() {
        return Err(ModelViolation::WrongCount {
            expected: target.order(),
            found: sets.len(),
        });
    }
    let all = host.vertices();
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(ModelViolation::Empty { set: i });
        }
        if let Some(v) = s.difference(all).first() {
            return Err(ModelViolation::OutOfRange { set: i, vertex: v });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(sets[j]) {
                return Err(ModelViolation::Overlap { first: i, second: j });
            }
        }
    }
    for (i, s) in sets.iter().enumerate() {
        if !host.is_connected_within(*s) {
            return Err(ModelViolation::Disconnected { set: i });
        }
    }
    for (i, j) in target.edges() {
        if host.neighborhood(sets[i]).is_disjoint(sets[j]) {
            return Err(ModelViolation::MissingEdge { first: i, second: j });
        }
    }
    Ok(())
}

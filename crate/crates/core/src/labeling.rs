//! Bijective vertex labelings and their differential value.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {found} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has label {label}, outside 1..={n}")]
    OutOfRange { vertex: Vertex, label: usize, n: usize },
    #[error("label {label} used by vertices {first} and {second}")]
    Duplicate { label: usize, first: Vertex, second: Vertex },
}

/// A bijection from vertices `0..n` onto labels `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<usize>,
}

impl Labeling {
    pub fn new(labels: Vec<usize>) -> Result<Self, LabelingError> {
        check_bijection(labels.len(), &labels)?;
        Ok(Labeling { labels })
    }

    pub fn identity(n: usize) -> Self {
        Labeling { labels: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> usize {
        self.labels[v]
    }

    pub fn into_labels(self) -> Vec<usize> {
        self.labels
    }

    /// `x -> n + 1 - x` for every label.
    pub fn complement(&self) -> Labeling {
        let n = self.n();
        Labeling { labels: self.labels.iter().map(|&x| n + 1 - x).collect() }
    }

    /// The labeling carried along the vertex renaming `v -> perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Labeling {
        let mut labels = vec![0; self.n()];
        for (v, &x) in self.labels.iter().enumerate() {
            labels[perm[v]] = x;
        }
        Labeling { labels }
    }
}

fn check_bijection(n: usize, labels: &[usize]) -> Result<(), LabelingError> {
    if labels.len() != n {
        return Err(LabelingError::LengthMismatch { expected: n, found: labels.len() });
    }
    let mut owner: Vec<Option<Vertex>> = vec![None; n + 1];
    for (vertex, &label) in labels.iter().enumerate() {
        if label == 0 || label > n {
            return Err(LabelingError::OutOfRange { vertex, label, n });
        }
        if let Some(first) = owner[label] {
            return Err(LabelingError::Duplicate { label, first, second: vertex });
        }
        owner[label] = Some(vertex);
    }
    Ok(())
}

/// `Ok` when `labels` is a bijection onto `1..=g.n()`, else the first violation.
pub fn is_valid_labeling(g: &Graph, labels: &[usize]) -> Result<(), LabelingError> {
    check_bijection(g.n(), labels)
}

/// Minimum of `|c(u) - c(v)|` over the edges; `n` for an edgeless graph.
pub fn differential_value(g: &Graph, labels: &[usize]) -> Result<usize, LabelingError> {
    is_valid_labeling(g, labels)?;
    Ok(min_edge_gap(g, labels))
}

pub(crate) fn min_edge_gap(g: &Graph, labels: &[usize]) -> usize {
    g.edges().iter().map(|&(u, v)| labels[u].abs_diff(labels[v])).min().unwrap_or(g.n())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedLabeling {
    pub labeling: Labeling,
    pub value: usize,
}

impl EvaluatedLabeling {
    pub fn evaluate(g: &Graph, labeling: Labeling) -> Result<Self, LabelingError> {
        let value = differential_value(g, labeling.labels())?;
        Ok(EvaluatedLabeling { labeling, value })
    }

    pub fn record(&self) -> LabelingRecord {
        LabelingRecord { n: self.labeling.n(), labels: self.labeling.labels().to_vec(), value: Some(self.value) }
    }
}

/// JSON form of a labeling: `{"n": .., "labels": [..], "value": ..}`.
///
/// `value` may be omitted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingRecord {
    pub n: usize,
    pub labels: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
}

impl LabelingRecord {
    pub fn into_labeling(self) -> Result<Labeling, LabelingError> {
        if self.labels.len() != self.n {
            return Err(LabelingError::LengthMismatch { expected: self.n, found: self.labels.len() });
        }
        Labeling::new(self.labels)
    }
}

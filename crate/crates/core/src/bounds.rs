//! Upper bounds on the differential chromatic number.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::shape::{recognize_caterpillar, recognize_spider};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bounds need a connected graph")]
    Disconnected,
    #[error("bounds need at least 2 vertices, got {0}")]
    TooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// `⌊n/2⌋`, any connected graph.
    #[serde(rename = "thm1")]
    Connected,
    /// `⌈(n-Δ)/2⌉` for an odd spine, `⌊n/2⌋` for an even one.
    #[serde(rename = "thm2")]
    RegularCaterpillar,
    /// `N_e + 1`.
    #[serde(rename = "thm3")]
    Spider,
}

impl BoundKind {
    /// Key used in JSON output.
    pub fn key(self) -> &'static str {
        match self {
            BoundKind::Connected => "thm1",
            BoundKind::RegularCaterpillar => "thm2",
            BoundKind::Spider => "thm3",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub entries: Vec<(BoundKind, usize)>,
    pub best: usize,
}

impl BoundReport {
    pub fn get(&self, kind: BoundKind) -> Option<usize> {
        self.entries.iter().find(|(k, _)| *k == kind).map(|&(_, v)| v)
    }
}

/// The general bound plus every class bound whose class the recognizers confirm.
pub fn upper_bound_report(g: &Graph) -> Result<BoundReport, BoundError> {
    let n = g.n();
    if n < 2 {
        return Err(BoundError::TooSmall(n));
    }
    if !g.is_connected() {
        return Err(BoundError::Disconnected);
    }
    let mut entries = vec![(BoundKind::Connected, n / 2)];
    if g.is_tree() {
        let caterpillar = recognize_caterpillar(g).expect("tree checked");
        if let Some(delta) = caterpillar.as_ref().and_then(|c| c.regular_legs()) {
            let s = caterpillar.as_ref().map_or(0, |c| c.spine_len());
            let value = if s % 2 == 1 { (n - delta).div_ceil(2) } else { n / 2 };
            entries.push((BoundKind::RegularCaterpillar, value));
        }
        if let Some(spider) = recognize_spider(g).expect("tree checked") {
            entries.push((BoundKind::Spider, spider.even_level_count() + 1));
        }
    }
    let best = entries.iter().map(|&(_, v)| v).min().expect("general bound always present");
    Ok(BoundReport { entries, best })
}

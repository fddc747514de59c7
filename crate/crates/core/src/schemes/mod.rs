//! Constructive labeling schemes and the Miller-Pritikin reference value.
//!
//! Every scheme builds a complete labeling, evaluates it on the tree implied
//! by the shape and refuses to return a result whose value falls below the
//! scheme's guarantee.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{bipartition_sizes, Graph, GraphError};
use crate::labeling::{EvaluatedLabeling, Labeling, LabelingError};
use crate::shape::{recognize_caterpillar, recognize_spider};

mod caterpillar;
mod general;
mod spider;

pub use caterpillar::label_regular_caterpillar;
pub use general::{label_general_caterpillar, mark_caterpillar, Mark, MarkingState};
pub use spider::{label_spider_all_even, label_spider_all_odd};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("caterpillar is not regular (leg counts {0:?})")]
    NotRegular(Vec<usize>),
    #[error("regular caterpillar needs at least one leg per spine vertex")]
    NoLegs,
    #[error("spider paths must all have {expected} length, got {lengths:?}")]
    WrongParity { expected: &'static str, lengths: Vec<usize> },
    #[error("scheme needs at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("caterpillar shape has a legless spine endpoint")]
    NotCanonical,
    #[error("balance condition never held during the spine scan")]
    BalanceNeverHeld,
    #[error("marking invariant violated: {0}")]
    Marking(String),
    #[error("scheme produced an invalid labeling: {0}")]
    NotBijective(#[source] LabelingError),
    #[error("scheme value {value} is below its guarantee {guarantee}")]
    BelowGuarantee { value: usize, guarantee: i64 },
    #[error("no labeling scheme applies to this graph")]
    NoScheme,
    #[error("graph is not a {0}")]
    WrongClass(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    RegularCaterpillar,
    SpiderEven,
    SpiderOdd,
    GeneralCaterpillar,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::RegularCaterpillar => "regular-cat",
            Scheme::SpiderEven => "spider-even",
            Scheme::SpiderOdd => "spider-odd",
            Scheme::GeneralCaterpillar => "general-cat",
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Scheme::RegularCaterpillar, Scheme::SpiderEven, Scheme::SpiderOdd, Scheme::GeneralCaterpillar]
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| format!("unknown scheme {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimality {
    ProvedOptimal,
    NotProved,
    Unknown,
}

impl Optimality {
    /// `"proved"` or `"unknown"`, as written in JSON output.
    pub fn as_str(self) -> &'static str {
        match self {
            Optimality::ProvedOptimal => "proved",
            Optimality::NotProved | Optimality::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeResult {
    pub scheme: Scheme,
    pub labeling: EvaluatedLabeling,
    /// Proven lower bound for this instance; may be non-positive.
    pub guarantee: i64,
    pub optimal: Optimality,
}

impl SchemeResult {
    pub fn value(&self) -> usize {
        self.labeling.value
    }

    pub fn labels(&self) -> &[usize] {
        self.labeling.labeling.labels()
    }
}

pub(crate) fn finish(
    scheme: Scheme,
    g: &Graph,
    labels: Vec<usize>,
    guarantee: i64,
    optimal: Optimality,
) -> Result<SchemeResult, SchemeError> {
    let labeling = Labeling::new(labels).map_err(SchemeError::NotBijective)?;
    let labeling = EvaluatedLabeling::evaluate(g, labeling).map_err(SchemeError::NotBijective)?;
    if (labeling.value as i64) < guarantee {
        return Err(SchemeError::BelowGuarantee { value: labeling.value, guarantee });
    }
    Ok(SchemeResult { scheme, labeling, guarantee, optimal })
}

/// Runs `scheme` on a tree, recognizing the required class first.
pub fn label_with(g: &Graph, scheme: Scheme) -> Result<SchemeResult, SchemeError> {
    match scheme {
        Scheme::RegularCaterpillar | Scheme::GeneralCaterpillar => {
            let shape = recognize_caterpillar(g)?.ok_or(SchemeError::WrongClass("caterpillar"))?;
            if scheme == Scheme::RegularCaterpillar {
                label_regular_caterpillar(&shape)
            } else {
                label_general_caterpillar(&shape)
            }
        }
        Scheme::SpiderEven | Scheme::SpiderOdd => {
            let shape = recognize_spider(g)?.ok_or(SchemeError::WrongClass("spider"))?;
            if scheme == Scheme::SpiderEven {
                label_spider_all_even(&shape)
            } else {
                label_spider_all_odd(&shape)
            }
        }
    }
}

/// Picks the most specific scheme: regular caterpillar, then parity-uniform
/// spider, then general caterpillar.
pub fn label_auto(g: &Graph) -> Result<SchemeResult, SchemeError> {
    let caterpillar = recognize_caterpillar(g)?;
    if let Some(shape) = &caterpillar {
        if shape.regular_legs().is_some() {
            return label_regular_caterpillar(shape);
        }
    }
    if let Some(shape) = recognize_spider(g)? {
        if shape.all_even() {
            return label_spider_all_even(&shape);
        }
        if shape.all_odd() {
            return label_spider_all_odd(&shape);
        }
    }
    match caterpillar {
        Some(shape) if shape.n() >= 2 => label_general_caterpillar(&shape),
        _ => Err(SchemeError::NoScheme),
    }
}

/// `min(|U|, |V|)` of the forest's bipartition: the value the Miller-Pritikin
/// scheme achieves. No labeling is built.
pub fn mp_value(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_forest() {
        return Err(GraphError::NotForest);
    }
    Ok(bipartition_sizes(g)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn mp_value_examples() {
        assert_eq!(mp_value(&Graph::path(5)).unwrap(), 2);
        let (g, _) = generate::regular_caterpillar(3, 2).unwrap();
        assert_eq!(mp_value(&g).unwrap(), 4);
        let (g, _) = generate::spider(&[3, 3]).unwrap();
        assert_eq!(mp_value(&g).unwrap(), 3);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(mp_value(&c4), Err(GraphError::NotForest));
    }

    #[test]
    fn alternating_family_mp_value() {
        for k in 1..8 {
            for delta in 1..8 {
                let (g, _) = generate::alternating_caterpillar(k, delta).unwrap();
                let expected = (2 * k + 1).min(k + 1 + k * delta);
                assert_eq!(mp_value(&g).unwrap(), expected);
            }
        }
    }

    #[test]
    fn scheme_names_round_trip() {
        for s in [Scheme::RegularCaterpillar, Scheme::SpiderEven, Scheme::SpiderOdd, Scheme::GeneralCaterpillar] {
            assert_eq!(s.name().parse::<Scheme>().unwrap(), s);
        }
        assert!("auto".parse::<Scheme>().is_err());
    }

    #[test]
    fn auto_prefers_specific_schemes() {
        let (g, _) = generate::regular_caterpillar(3, 2).unwrap();
        let r = label_auto(&g).unwrap();
        assert_eq!(r.scheme, Scheme::RegularCaterpillar);
        assert_eq!(r.optimal, Optimality::ProvedOptimal);

        let (g, _) = generate::spider(&[3, 1, 1]).unwrap();
        assert_eq!(label_auto(&g).unwrap().scheme, Scheme::SpiderOdd);
        let (g, _) = generate::spider(&[4, 2, 2]).unwrap();
        assert_eq!(label_auto(&g).unwrap().scheme, Scheme::SpiderEven);
        let (g, _) = generate::caterpillar(&[2, 0, 3, 1]).unwrap();
        assert_eq!(label_auto(&g).unwrap().scheme, Scheme::GeneralCaterpillar);
        // mixed-parity spider that is not a caterpillar
        let (g, _) = generate::spider(&[2, 2, 3]).unwrap();
        assert_eq!(label_auto(&g).unwrap_err(), SchemeError::NoScheme);
        assert_eq!(label_auto(&Graph::path(1)).unwrap_err(), SchemeError::NoScheme);
    }

    #[test]
    fn label_with_checks_class() {
        let (g, _) = generate::spider(&[2, 2, 2]).unwrap();
        assert_eq!(label_with(&g, Scheme::GeneralCaterpillar).unwrap_err(), SchemeError::WrongClass("caterpillar"));
        assert_eq!(label_with(&g, Scheme::SpiderEven).unwrap().value(), 3);
        let (g, _) = generate::caterpillar(&[2, 2]).unwrap();
        assert_eq!(label_with(&g, Scheme::SpiderOdd).unwrap_err(), SchemeError::WrongClass("spider"));
    }
}

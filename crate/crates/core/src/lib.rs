//! Maximum differential coloring of caterpillars and spiders.
//!
//! A labeling of an `n`-vertex graph is a bijection onto `1..=n`; its value
//! is the smallest label difference across an edge. This crate provides
//! graph parsing and recognition, constructive labeling schemes with proven
//! value guarantees, upper bounds, and an exact search oracle for small
//! instances.

pub mod bounds;
pub mod dot;
pub mod generate;
pub mod graph;
pub mod labeling;
pub mod oracle;
pub mod schemes;
pub mod shape;

pub use bounds::{upper_bound_report, BoundError, BoundKind, BoundReport};
pub use graph::{bipartition_sizes, parse_graph, Graph, GraphError, Vertex};
pub use labeling::{differential_value, is_valid_labeling, EvaluatedLabeling, Labeling, LabelingError, LabelingRecord};
pub use oracle::{decision_dc_at_least, exact_dc, ExactResult, Oracle, OracleConfig, OracleError, SearchStats};
pub use schemes::{label_auto, label_with, mp_value, Optimality, Scheme, SchemeError, SchemeResult};
pub use shape::{recognize_caterpillar, recognize_spider, CaterpillarShape, ShapeError, SpiderShape};

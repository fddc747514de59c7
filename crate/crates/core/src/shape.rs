//! Caterpillar and spider decompositions of trees.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("argument `{0}` must be positive")]
    Zero(&'static str),
    #[error("empty input")]
    Empty,
    #[error("spine endpoint {index} has no legs")]
    LeglessEndpoint { index: usize },
    #[error("path {index} has length zero")]
    ZeroLength { index: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A caterpillar: a spine path with leaves ("legs") hanging off it.
///
/// All ids refer to the source tree. `leg_vertices[i]` are the legs of
/// `spine_vertices[i]`, and `leg_counts[i] == leg_vertices[i].len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarShape {
    leg_counts: Vec<usize>,
    spine_vertices: Vec<Vertex>,
    leg_vertices: Vec<Vec<Vertex>>,
}

impl CaterpillarShape {
    pub(crate) fn from_parts(spine_vertices: Vec<Vertex>, leg_vertices: Vec<Vec<Vertex>>) -> Self {
        debug_assert_eq!(spine_vertices.len(), leg_vertices.len());
        let leg_counts = leg_vertices.iter().map(Vec::len).collect();
        CaterpillarShape { leg_counts, spine_vertices, leg_vertices }
    }

    pub fn leg_counts(&self) -> &[usize] {
        &self.leg_counts
    }

    pub fn spine_vertices(&self) -> &[Vertex] {
        &self.spine_vertices
    }

    pub fn leg_vertices(&self) -> &[Vec<Vertex>] {
        &self.leg_vertices
    }

    pub fn spine_len(&self) -> usize {
        self.leg_counts.len()
    }

    pub fn n(&self) -> usize {
        self.spine_len() + self.leg_counts.iter().sum::<usize>()
    }

    /// Δ: the largest number of legs on one spine vertex.
    pub fn max_legs(&self) -> usize {
        self.leg_counts.iter().copied().max().unwrap_or(0)
    }

    /// `Some(Δ)` when every spine vertex has the same number `Δ ≥ 1` of legs.
    pub fn regular_legs(&self) -> Option<usize> {
        let first = *self.leg_counts.first()?;
        (first >= 1 && self.leg_counts.iter().all(|&c| c == first)).then_some(first)
    }

    /// The tree this shape describes, on the shape's own vertex ids.
    pub fn to_graph(&self) -> Graph {
        let spine = self.spine_vertices.windows(2).map(|w| (w[0], w[1]));
        let legs =
            self.spine_vertices.iter().zip(&self.leg_vertices).flat_map(|(&v, legs)| legs.iter().map(move |&l| (v, l)));
        Graph::new(self.n(), spine.chain(legs).collect::<Vec<_>>()).expect("shape ids cover 0..n")
    }

    /// Both spine endpoints carry legs (always true for n ≥ 2 recognized shapes).
    pub fn is_canonical(&self) -> bool {
        match self.leg_counts.as_slice() {
            [] => false,
            [_] => true,
            [first, .., last] => *first >= 1 && *last >= 1,
        }
    }
}

/// A spider: a center joined to disjoint paths.
///
/// `path_vertices[i]` lists the vertices of path `i` at levels `1..=path_lengths[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiderShape {
    path_lengths: Vec<usize>,
    center: Vertex,
    path_vertices: Vec<Vec<Vertex>>,
}

impl SpiderShape {
    pub(crate) fn from_parts(center: Vertex, path_vertices: Vec<Vec<Vertex>>) -> Self {
        let path_lengths = path_vertices.iter().map(Vec::len).collect();
        SpiderShape { path_lengths, center, path_vertices }
    }

    pub fn path_lengths(&self) -> &[usize] {
        &self.path_lengths
    }

    pub fn center(&self) -> Vertex {
        self.center
    }

    pub fn path_vertices(&self) -> &[Vec<Vertex>] {
        &self.path_vertices
    }

    /// Number of paths, p.
    pub fn paths(&self) -> usize {
        self.path_lengths.len()
    }

    pub fn n(&self) -> usize {
        1 + self.path_lengths.iter().sum::<usize>()
    }

    /// `counts[l]` is the number of vertices at distance `l` from the center;
    /// `counts[0] == 1`.
    pub fn level_counts(&self) -> Vec<usize> {
        let depth = self.path_lengths.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0; depth + 1];
        counts[0] = 1;
        for &len in &self.path_lengths {
            for c in &mut counts[1..=len] {
                *c += 1;
            }
        }
        counts
    }

    /// N_e: vertices at even levels ≥ 2.
    pub fn even_level_count(&self) -> usize {
        self.level_counts().iter().skip(2).step_by(2).sum()
    }

    /// N_o: vertices at odd levels.
    pub fn odd_level_count(&self) -> usize {
        self.level_counts().iter().skip(1).step_by(2).sum()
    }

    pub fn to_graph(&self) -> Graph {
        let edges = self
            .path_vertices
            .iter()
            .flat_map(|path| std::iter::once((self.center, path[0])).chain(path.windows(2).map(|w| (w[0], w[1]))));
        Graph::new(self.n(), edges.collect::<Vec<_>>()).expect("shape ids cover 0..n")
    }

    pub fn all_even(&self) -> bool {
        self.path_lengths.iter().all(|l| l % 2 == 0)
    }

    pub fn all_odd(&self) -> bool {
        self.path_lengths.iter().all(|l| l % 2 == 1)
    }
}

/// Leaf removal. Returns `None` when the leafless remainder is not a path.
///
/// The spine starts at the endpoint with the smaller id. For `n == 2` the
/// smaller id is the spine vertex.
pub fn recognize_caterpillar(g: &Graph) -> Result<Option<CaterpillarShape>, GraphError> {
    g.require_tree()?;
    let n = g.n();
    match n {
        1 => return Ok(Some(CaterpillarShape::from_parts(vec![0], vec![vec![]]))),
        2 => return Ok(Some(CaterpillarShape::from_parts(vec![0], vec![vec![1]]))),
        _ => {}
    }

    let is_spine: Vec<bool> = (0..n).map(|v| g.degree(v) >= 2).collect();
    let inner = |v: Vertex| g.neighbors(v).iter().filter(|&&w| is_spine[w]).count();
    let spine: Vec<Vertex> = (0..n).filter(|&v| is_spine[v]).collect();
    if spine.iter().any(|&v| inner(v) > 2) {
        return Ok(None);
    }
    let start = *spine.iter().find(|&&v| inner(v) <= 1).expect("a finite tree's spine has an endpoint");

    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| is_spine[w] && w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    let legs = order.iter().map(|&v| g.neighbors(v).iter().copied().filter(|&w| !is_spine[w]).collect()).collect();
    Ok(Some(CaterpillarShape::from_parts(order, legs)))
}

/// Centers the spider at the unique vertex of degree ≥ 3.
///
/// A path on `n ≥ 3` vertices is read as a two-legged spider centered at its
/// most balanced interior vertex (smaller id on ties). `K_1` and `K_2` are
/// rejected. Paths are listed in increasing order of the center's neighbor ids.
pub fn recognize_spider(g: &Graph) -> Result<Option<SpiderShape>, GraphError> {
    g.require_tree()?;
    let n = g.n();
    if n <= 2 {
        return Ok(None);
    }
    let hubs: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let center = match hubs.as_slice() {
        [c] => *c,
        [] => balanced_path_center(g),
        _ => return Ok(None),
    };
    let paths = g.neighbors(center).iter().map(|&first| walk_away(g, center, first)).collect();
    Ok(Some(SpiderShape::from_parts(center, paths)))
}

fn balanced_path_center(g: &Graph) -> Vertex {
    let end = (0..g.n()).find(|&v| g.degree(v) == 1).expect("a path has endpoints");
    let order = walk_away(g, usize::MAX, end);
    let n = order.len();
    (1..n - 1).map(|i| (i.max(n - 1 - i), order[i])).min().map(|(_, v)| v).expect("n >= 3 has an interior vertex")
}

/// Follows a chain of degree-≤2 vertices starting at `first`, never stepping back to `from`.
fn walk_away(g: &Graph, from: Vertex, first: Vertex) -> Vec<Vertex> {
    let mut out = vec![first];
    let (mut prev, mut cur) = (from, first);
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

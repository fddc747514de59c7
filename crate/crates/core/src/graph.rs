//! Simple undirected graphs on vertices `0..n`, with the line-oriented
//! graph file format used by the CLI.
//!
//! The file format is DIMACS-like: optional `c ...` comment lines, one
//! `p <n> <m>` header and `m` lines `e <u> <v>` with 1-based endpoints.
//! Tokens are separated by single spaces.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed line: {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: missing `p <n> <m>` header before edges")]
    MissingHeader { line: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: endpoint {endpoint} out of range 1..={n}")]
    OutOfRange { line: usize, endpoint: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: header declares {declared} edges, found {found}")]
    EdgeCountMismatch { line: usize, declared: usize, found: usize },
    #[error("empty input: no `p` header")]
    Empty,
    #[error("edge ({0}, {1}) invalid for a graph on {2} vertices")]
    InvalidEdge(Vertex, Vertex, usize),
    #[error("graph is not a connected tree ({n} vertices, {m} edges)")]
    NotTree { n: usize, m: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph has an odd cycle through vertex {0}")]
    OddCycle(Vertex),
}

/// An undirected simple graph. Vertices are `0..n`.
///
/// Edges are stored in insertion order with the adjacency lists kept in
/// increasing neighbor order so that every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut adj = vec![Vec::new(); n];
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n || u == v || !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::InvalidEdge(u, v, n));
            }
            adj[u].push(v);
            adj[v].push(u);
            list.push((u, v));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    pub fn require_tree(&self) -> Result<(), GraphError> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(GraphError::NotTree { n: self.n, m: self.edges.len() })
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("a permutation preserves simplicity")
    }
}

/// Parses the graph file format. Every error carries its 1-based line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let malformed = || GraphError::Malformed { line, text: raw.to_string() };
        if raw == "c" || raw.starts_with("c ") {
            continue;
        }
        let tokens: Vec<&str> = raw.split(' ').collect();
        if tokens.iter().any(|t| t.is_empty()) {
            return Err(malformed());
        }
        let nums = |toks: &[&str]| -> Result<Vec<usize>, GraphError> {
            toks.iter().map(|t| t.parse::<usize>().map_err(|_| malformed())).collect()
        };
        match tokens[0] {
            "p" if tokens.len() == 3 => {
                if header.is_some() {
                    return Err(GraphError::DuplicateHeader { line });
                }
                let v = nums(&tokens[1..])?;
                header = Some((v[0], v[1]));
            }
            "e" if tokens.len() == 3 => {
                let (n, _) = header.ok_or(GraphError::MissingHeader { line })?;
                let v = nums(&tokens[1..])?;
                for &endpoint in &v {
                    if endpoint == 0 || endpoint > n {
                        return Err(GraphError::OutOfRange { line, endpoint, n });
                    }
                }
                let (u, w) = (v[0], v[1]);
                if u == w {
                    return Err(GraphError::SelfLoop { line, vertex: u });
                }
                if !seen.insert((u.min(w), u.max(w))) {
                    return Err(GraphError::DuplicateEdge { line, u, v: w });
                }
                edges.push((u - 1, w - 1));
            }
            _ => return Err(malformed()),
        }
    }

    let (n, m) = header.ok_or(GraphError::Empty)?;
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { line: last_line, declared: m, found: edges.len() });
    }
    Graph::new(n, edges)
}

/// Writes the graph file format; the exact inverse of [`parse_graph`] up to comments.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p {} {}", self.n, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(f, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// Sizes of the two color classes of a bipartite graph, larger first.
///
/// Each component is 2-colored from its smallest vertex.
pub fn bipartition_sizes(g: &Graph) -> Result<(usize, usize), GraphError> {
    let mut color: Vec<Option<bool>> = vec![None; g.n()];
    let mut counts = [0usize; 2];
    for comp in g.components() {
        let root = comp[0];
        color[root] = Some(false);
        counts[0] += 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        counts[usize::from(!cu)] += 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Err(GraphError::OddCycle(w)),
                    Some(_) => {}
                }
            }
        }
    }
    Ok((counts[0].max(counts[1]), counts[0].min(counts[1])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_graph("p 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parses_p3_with_comments() {
        let g = parse_graph("c a path\nc\np 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse_graph("p 2 2\ne 1 2\ne 1 2").unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { line: 3, u: 1, v: 2 });
        // the reversed pair is the same undirected edge
        assert!(matches!(parse_graph("p 2 2\ne 1 2\ne 2 1").unwrap_err(), GraphError::DuplicateEdge { line: 3, .. }));
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_graph("p 3 1\ne 1 4\n").unwrap_err(), GraphError::OutOfRange { line: 2, endpoint: 4, n: 3 });
        assert_eq!(parse_graph("p 3 1\ne 0 1\n").unwrap_err(), GraphError::OutOfRange { line: 2, endpoint: 0, n: 3 });
        assert!(matches!(parse_graph("p 3 1\ne  1 2\n"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("p 3 1\nx 1 2\n"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("p 3 1\ne 1 b\n"), Err(GraphError::Malformed { line: 2, .. })));
        assert_eq!(parse_graph("e 1 2\n").unwrap_err(), GraphError::MissingHeader { line: 1 });
        assert_eq!(parse_graph("p 2 1\np 2 1\n").unwrap_err(), GraphError::DuplicateHeader { line: 2 });
        assert_eq!(parse_graph("p 2 1\ne 1 1\n").unwrap_err(), GraphError::SelfLoop { line: 2, vertex: 1 });
        assert_eq!(
            parse_graph("p 3 2\ne 1 2\n").unwrap_err(),
            GraphError::EdgeCountMismatch { line: 2, declared: 2, found: 1 }
        );
        assert_eq!(parse_graph("c nothing\n").unwrap_err(), GraphError::Empty);
    }

    #[test]
    fn writes_bit_exact() {
        let g = Graph::path(3);
        assert_eq!(g.to_string(), "p 3 2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn tree_predicates() {
        assert!(Graph::path(1).is_tree());
        assert!(Graph::path(5).is_tree());
        assert!(!Graph::empty(2).is_tree());
        assert!(Graph::empty(2).is_forest());
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_tree());
        assert!(!c4.is_forest());
        assert!(c4.is_connected());
    }

    #[test]
    fn invalid_edges_rejected_by_constructor() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn bipartition_of_path() {
        assert_eq!(bipartition_sizes(&Graph::path(5)).unwrap(), (3, 2));
        assert_eq!(bipartition_sizes(&Graph::path(1)).unwrap(), (1, 0));
        assert_eq!(bipartition_sizes(&Graph::empty(3)).unwrap(), (3, 0));
    }

    #[test]
    fn bipartition_rejects_odd_cycle() {
        let c3 = Graph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(bipartition_sizes(&c3), Err(GraphError::OddCycle(_))));
    }
}

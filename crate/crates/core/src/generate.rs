//! Generators for the tree families used by the schemes, the CLI and the tests.

use std::collections::BTreeSet;

use rand::Rng;

use crate::graph::{Graph, Vertex};
use crate::shape::{CaterpillarShape, ShapeError, SpiderShape};

/// Caterpillar with the given per-spine leg counts.
///
/// Spine vertices get ids `0..s`; legs follow in spine order.
pub fn caterpillar(leg_counts: &[usize]) -> Result<(Graph, CaterpillarShape), ShapeError> {
    let s = leg_counts.len();
    if s == 0 {
        return Err(ShapeError::Empty);
    }
    if s >= 2 {
        if leg_counts[0] == 0 {
            return Err(ShapeError::LeglessEndpoint { index: 0 });
        }
        if leg_counts[s - 1] == 0 {
            return Err(ShapeError::LeglessEndpoint { index: s - 1 });
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = (1..s).map(|i| (i - 1, i)).collect();
    let mut next = s;
    let mut legs = Vec::with_capacity(s);
    for (i, &count) in leg_counts.iter().enumerate() {
        let ids: Vec<Vertex> = (next..next + count).collect();
        edges.extend(ids.iter().map(|&l| (i, l)));
        next += count;
        legs.push(ids);
    }
    let g = Graph::new(next, edges)?;
    Ok((g, CaterpillarShape::from_parts((0..s).collect(), legs)))
}

pub fn regular_caterpillar(spine: usize, legs: usize) -> Result<(Graph, CaterpillarShape), ShapeError> {
    if spine == 0 {
        return Err(ShapeError::Zero("spine"));
    }
    if legs == 0 {
        return Err(ShapeError::Zero("legs"));
    }
    caterpillar(&vec![legs; spine])
}

/// The comparison family: `2k+1` spine vertices, one leg on odd positions and
/// `delta` legs on even positions (1-based).
pub fn alternating_caterpillar(k: usize, delta: usize) -> Result<(Graph, CaterpillarShape), ShapeError> {
    let legs: Vec<usize> = (0..2 * k + 1).map(|i| if i % 2 == 0 { 1 } else { delta }).collect();
    caterpillar(&legs)
}

/// Spider with the given path lengths. The center is vertex 0 and each path
/// is numbered outward from the center.
pub fn spider(path_lengths: &[usize]) -> Result<(Graph, SpiderShape), ShapeError> {
    if path_lengths.is_empty() {
        return Err(ShapeError::Empty);
    }
    if let Some(index) = path_lengths.iter().position(|&l| l == 0) {
        return Err(ShapeError::ZeroLength { index });
    }
    let mut edges = Vec::new();
    let mut paths = Vec::with_capacity(path_lengths.len());
    let mut next = 1;
    for &len in path_lengths {
        let ids: Vec<Vertex> = (next..next + len).collect();
        edges.push((0, ids[0]));
        edges.extend(ids.windows(2).map(|w| (w[0], w[1])));
        next += len;
        paths.push(ids);
    }
    let g = Graph::new(next, edges)?;
    Ok((g, SpiderShape::from_parts(0, paths)))
}

/// Radius-`k` star: `p` paths of length `k`.
pub fn radius_star(k: usize, p: usize) -> Result<(Graph, SpiderShape), ShapeError> {
    if p == 0 {
        return Err(ShapeError::Zero("paths"));
    }
    spider(&vec![k; p])
}

/// Random canonical caterpillar with `1..=max_spine` spine vertices and at
/// most `max_legs` legs per spine vertex; endpoints get at least one leg.
pub fn random_leg_counts<R: Rng + ?Sized>(rng: &mut R, max_spine: usize, max_legs: usize) -> Vec<usize> {
    assert!(max_spine >= 1 && max_legs >= 1);
    let s = rng.gen_range(1..=max_spine);
    (0..s)
        .map(|i| {
            let low = usize::from(i == 0 || i == s - 1);
            rng.gen_range(low..=max_legs)
        })
        .collect()
}

pub fn random_caterpillar<R: Rng + ?Sized>(
    rng: &mut R,
    max_spine: usize,
    max_legs: usize,
) -> (Graph, CaterpillarShape) {
    caterpillar(&random_leg_counts(rng, max_spine, max_legs)).expect("random leg counts are canonical")
}

/// All multisets of positive integers, as non-increasing sequences, with at
/// most `max_parts` parts each `≤ max_part` and total `≤ max_total`.
pub fn length_multisets(max_total: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, remaining: usize, parts_left: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if parts_left == 0 {
            return;
        }
        for part in (1..=cap.min(remaining)).rev() {
            prefix.push(part);
            extend(prefix, remaining - part, parts_left - 1, part, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), max_total, max_parts, max_part, &mut out);
    out
}

/// One representative of every isomorphism class of trees on `n` vertices.
///
/// Enumerates Prüfer sequences, so this is only meant for small `n`.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::path(1)],
        2 => return vec![Graph::path(2)],
        _ => {}
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let g = from_pruefer(n, &seq);
        if seen.insert(tree_canonical_form(&g)) {
            out.push(g);
        }
        // odometer increment
        let mut i = 0;
        while i < seq.len() {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            break;
        }
    }
    out
}

fn from_pruefer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a tree")
}

/// Isomorphism-invariant encoding of a tree (AHU encoding rooted at the center).
pub fn tree_canonical_form(g: &Graph) -> String {
    fn encode(g: &Graph, v: Vertex, parent: Option<Vertex>) -> String {
        let mut kids: Vec<String> =
            g.neighbors(v).iter().filter(|&&w| Some(w) != parent).map(|&w| encode(g, w, Some(v))).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    centers(g).into_iter().map(|c| encode(g, c, None)).min().unwrap_or_default()
}

fn centers(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in g.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{recognize_caterpillar, recognize_spider};

    #[test]
    fn regular_caterpillar_examples() {
        let (g, c) = regular_caterpillar(2, 2).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(c.leg_counts(), &[2, 2]);
        let (g, c) = regular_caterpillar(1, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 3));
        assert_eq!(g.degree(0), 3);
        assert_eq!(c.leg_counts(), &[3]);
        let (g, c) = regular_caterpillar(3, 1).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(c.leg_counts(), &[1, 1, 1]);
        assert!(regular_caterpillar(0, 1).is_err());
        assert!(regular_caterpillar(1, 0).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        let (g, c) = caterpillar(&[1, 0, 1]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(recognize_spider(&g).unwrap().unwrap().path_lengths(), &[2, 2]);
        assert_eq!(c.n(), 5);
        let (g, _) = caterpillar(&[1, 3, 1]).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(caterpillar(&[0, 1]).unwrap_err(), ShapeError::LeglessEndpoint { index: 0 });
        assert_eq!(caterpillar(&[1, 0]).unwrap_err(), ShapeError::LeglessEndpoint { index: 1 });
        assert_eq!(caterpillar(&[]).unwrap_err(), ShapeError::Empty);
        assert!(caterpillar(&[0]).is_ok());
    }

    #[test]
    fn alternating_family_shape() {
        let (g, c) = alternating_caterpillar(1, 3).unwrap();
        assert_eq!(c.leg_counts(), &[1, 3, 1]);
        assert_eq!(g.n(), 8);
        let (g, _) = alternating_caterpillar(10, 10).unwrap();
        assert_eq!(g.n(), 132);
    }

    #[test]
    fn spider_examples() {
        let (g, s) = spider(&[1, 1, 1]).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(0), 3);
        assert_eq!(s.center(), 0);
        let (g, _) = radius_star(2, 3).unwrap();
        assert_eq!(g.n(), 7);
        let (g, s) = spider(&[3, 3]).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!((s.even_level_count(), s.odd_level_count()), (2, 4));
        assert_eq!(spider(&[]).unwrap_err(), ShapeError::Empty);
        assert_eq!(spider(&[2, 0]).unwrap_err(), ShapeError::ZeroLength { index: 1 });
    }

    #[test]
    fn tree_counts_match_known_sequence() {
        // OEIS A000055
        let counts: Vec<usize> = (1..=8).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        for g in nonisomorphic_trees(6) {
            assert!(g.is_tree());
        }
    }

    #[test]
    fn canonical_form_ignores_ids() {
        let (g, _) = caterpillar(&[2, 0, 1]).unwrap();
        let perm: Vec<usize> = (0..g.n()).rev().collect();
        assert_eq!(tree_canonical_form(&g), tree_canonical_form(&g.permuted(&perm)));
        assert_ne!(tree_canonical_form(&g), tree_canonical_form(&Graph::path(g.n())));
    }

    #[test]
    fn multisets_enumeration() {
        let all = length_multisets(4, 4, 4);
        // partitions of 1..=4: 1 + 2 + 3 + 5
        assert_eq!(all.len(), 11);
        assert!(all.iter().all(|m| m.windows(2).all(|w| w[0] >= w[1])));
        assert_eq!(length_multisets(6, 2, 2), vec![vec![2], vec![2, 2], vec![2, 1], vec![1], vec![1, 1]]);
    }

    #[test]
    fn random_caterpillars_are_canonical() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (g, c) = random_caterpillar(&mut rng, 12, 4);
            assert!(c.is_canonical());
            assert!(c.spine_len() <= 12 && c.max_legs() <= 4);
            let again = recognize_caterpillar(&g).unwrap().unwrap();
            assert_eq!(again.leg_counts(), c.leg_counts());
        }
    }
}

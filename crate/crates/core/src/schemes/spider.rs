use super::{finish, Optimality, Scheme, SchemeError, SchemeResult};
use crate::shape::SpiderShape;

/// Path indices sorted by non-increasing length, stable on ties.
fn by_decreasing_length(shape: &SpiderShape) -> Vec<usize> {
    let mut order: Vec<usize> = (0..shape.paths()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(shape.path_lengths()[i]));
    order
}

/// `sums[i] = f(counts[first]) + f(counts[first + 2]) + ...` over the first
/// `i` levels of the given parity, so `sums[0] == 0`.
fn parity_prefix(counts: &[usize], first: usize, f: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut sums = vec![0];
    let mut acc = 0;
    let mut level = first;
    while level < counts.len() {
        acc += f(counts[level]);
        sums.push(acc);
        level += 2;
    }
    sums
}

/// All paths of even length: the center gets 1, even levels the block
/// `[2, N_e + 1]` and odd levels the block `[N_e + 2, n]`, each level by level
/// with longer paths first. Value `N_e`, which equals `⌊n/2⌋`.
pub fn label_spider_all_even(shape: &SpiderShape) -> Result<SchemeResult, SchemeError> {
    if !shape.all_even() {
        return Err(SchemeError::WrongParity { expected: "even", lengths: shape.path_lengths().to_vec() });
    }
    let n = shape.n();
    let counts = shape.level_counts();
    let n_even = shape.even_level_count();
    // even[i] = N_2 + ... + N_2i, odd[i] = N_1 + ... + N_(2i-1)
    let even = parity_prefix(&counts, 2, |c| c);
    let odd = parity_prefix(&counts, 1, |c| c);

    let mut labels = vec![0; n];
    labels[shape.center()] = 1;
    for (q0, &path) in by_decreasing_length(shape).iter().enumerate() {
        let q = q0 + 1;
        for (level0, &v) in shape.path_vertices()[path].iter().enumerate() {
            let level = level0 + 1;
            labels[v] = if level % 2 == 0 {
                let i = level / 2;
                1 + even[i - 1] + q
            } else {
                let i = level / 2;
                n_even + 1 + odd[i] + q
            };
        }
    }
    finish(Scheme::SpiderEven, &shape.to_graph(), labels, n_even as i64, Optimality::ProvedOptimal)
}

/// All paths of odd length: the center gets `⌈n/2⌉`. Paths are sorted by
/// non-increasing length; odd sorted positions form the "outer" group, whose
/// odd levels take the top labels and even levels the labels just below the
/// center, and even positions form the "inner" group, whose odd levels take
/// the bottom labels and even levels the labels just above the center.
/// Value `N_e + 1 = ⌈(n-p)/2⌉`.
pub fn label_spider_all_odd(shape: &SpiderShape) -> Result<SchemeResult, SchemeError> {
    if !shape.all_odd() {
        return Err(SchemeError::WrongParity { expected: "odd", lengths: shape.path_lengths().to_vec() });
    }
    let n = shape.n() as i64;
    let center = (n + 1) / 2;
    let counts = shape.level_counts();
    let floor_odd = parity_prefix(&counts, 1, |c| c / 2);
    let ceil_odd = parity_prefix(&counts, 1, |c| c.div_ceil(2));
    let floor_even = parity_prefix(&counts, 2, |c| c / 2);
    let ceil_even = parity_prefix(&counts, 2, |c| c.div_ceil(2));

    let mut labels = vec![0i64; shape.n()];
    labels[shape.center()] = center;
    for (pos, &path) in by_decreasing_length(shape).iter().enumerate() {
        // pos is 0-based: even pos = 1-based odd position = outer group
        let outer = pos % 2 == 0;
        let q = (pos / 2 + 1) as i64;
        for (level0, &v) in shape.path_vertices()[path].iter().enumerate() {
            let level = level0 + 1;
            let i = level.div_ceil(2);
            labels[v] = match (level % 2 == 1, outer) {
                (true, false) => floor_odd[i - 1] as i64 + q,
                (true, true) => n - ceil_odd[i] as i64 + q,
                (false, false) => center + floor_even[i - 1] as i64 + q,
                (false, true) => center - ceil_even[i] as i64 + q - 1,
            };
        }
    }
    let labels = labels.into_iter().map(|x| usize::try_from(x).unwrap_or(0)).collect();
    let guarantee = shape.even_level_count() as i64 + 1;
    finish(Scheme::SpiderOdd, &shape.to_graph(), labels, guarantee, Optimality::ProvedOptimal)
}

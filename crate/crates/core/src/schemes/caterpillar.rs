use super::{finish, Optimality, Scheme, SchemeError, SchemeResult};
use crate::shape::CaterpillarShape;

/// Optimal labeling of a regular caterpillar.
///
/// Spine vertices alternate between the lowest `⌈s/2⌉` and the highest
/// `⌊s/2⌋` labels, starting low. The legs of the i-th low spine vertex take
/// the i-th block of Δ labels above the low/high split point; the legs of
/// the i-th high spine vertex take the i-th block of Δ labels right after
/// the low spine labels.
///
/// Even spine: value `n/2`. Odd spine: value `⌈(n-Δ)/2⌉`.
pub fn label_regular_caterpillar(shape: &CaterpillarShape) -> Result<SchemeResult, SchemeError> {
    let delta = match shape.regular_legs() {
        Some(d) => d,
        None if shape.leg_counts().iter().all(|&c| c == 0) => return Err(SchemeError::NoLegs),
        None => return Err(SchemeError::NotRegular(shape.leg_counts().to_vec())),
    };
    let s = shape.spine_len();
    let n = shape.n();
    let k = s / 2;
    let (split, high_leg_base, guarantee) = if s.is_multiple_of(2) {
        (n / 2, k, n / 2)
    } else {
        let split = (n - delta).div_ceil(2);
        (split, k + 1, split)
    };

    let mut labels = vec![0; n];
    for (pos, (&v, legs)) in shape.spine_vertices().iter().zip(shape.leg_vertices()).enumerate() {
        let i = pos / 2 + 1;
        let (spine_label, leg_base) =
            if pos % 2 == 0 { (i, split + (i - 1) * delta) } else { (n - k + i, high_leg_base + (i - 1) * delta) };
        labels[v] = spine_label;
        for (j, &leg) in legs.iter().enumerate() {
            labels[leg] = leg_base + j + 1;
        }
    }
    finish(Scheme::RegularCaterpillar, &shape.to_graph(), labels, guarantee as i64, Optimality::ProvedOptimal)
}

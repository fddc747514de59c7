//! Labeling for arbitrary caterpillars.
//!
//! Two phases. Marking sorts every vertex into one of seven classes: low or
//! high spine vertices, the single middle spine vertex `v_m`, low or high
//! legs, and the low or high legs of `v_m`. Labeling then hands out ranges:
//! `v_m` gets `⌈n/2⌉`, its legs the extremes `1..` and `..n`, the low and high
//! spine vertices the ranges just inside those, and the legs the two ranges
//! flanking `⌈n/2⌉`.
//!
//! Spine vertices without legs are handled as "pseudo-legs" of their right
//! neighbor. The achieved value is at least `⌈n/2⌉ - Δ - 2`.

use std::cmp::Reverse;

use super::{finish, Optimality, Scheme, SchemeError, SchemeResult};
use crate::shape::CaterpillarShape;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    LowSpine,
    HighSpine,
    Middle,
    LowLeg,
    HighLeg,
    MiddleLowLeg,
    MiddleHighLeg,
}

impl Mark {
    /// +1 for the low side, -1 for the high side, 0 for the middle group.
    fn side(self) -> i8 {
        match self {
            Mark::LowSpine | Mark::LowLeg => 1,
            Mark::HighSpine | Mark::HighLeg => -1,
            Mark::Middle | Mark::MiddleLowLeg | Mark::MiddleHighLeg => 0,
        }
    }

    fn flipped(self) -> Mark {
        match self {
            Mark::LowSpine => Mark::HighSpine,
            Mark::HighSpine => Mark::LowSpine,
            Mark::LowLeg => Mark::HighLeg,
            Mark::HighLeg => Mark::LowLeg,
            other => other,
        }
    }
}

/// Result of the marking phase, indexed by spine position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkingState {
    n: usize,
    spine: Vec<Mark>,
    legs: Vec<Vec<Mark>>,
    /// `pseudo_owner[i] = Some(j)`: spine vertex `i` is a pseudo-leg of spine vertex `j`.
    pseudo_owner: Vec<Option<usize>>,
    middle: usize,
}

impl MarkingState {
    pub fn middle(&self) -> usize {
        self.middle
    }

    pub fn spine_marks(&self) -> &[Mark] {
        &self.spine
    }

    pub fn leg_marks(&self) -> &[Vec<Mark>] {
        &self.legs
    }

    pub fn pseudo_owner(&self, spine_index: usize) -> Option<usize> {
        self.pseudo_owner[spine_index]
    }

    /// Number of vertices (spine or leg) carrying `mark`.
    pub fn count(&self, mark: Mark) -> usize {
        self.spine.iter().chain(self.legs.iter().flatten()).filter(|&&m| m == mark).count()
    }

    fn side_total(&self, side: i8) -> usize {
        self.spine.iter().chain(self.legs.iter().flatten()).filter(|m| m.side() == side).count()
    }

    /// `|L_s| + |L_l|`.
    pub fn low_total(&self) -> usize {
        self.side_total(1)
    }

    /// `|H_s| + |H_l|`.
    pub fn high_total(&self) -> usize {
        self.side_total(-1)
    }

    /// Checks the partition, balance and total-count invariants.
    pub fn check(&self) -> Result<(), SchemeError> {
        let n = self.n;
        let err = |msg: String| Err(SchemeError::Marking(msg));
        let total = self.spine.len() + self.legs.iter().map(Vec::len).sum::<usize>();
        if total != n {
            return err(format!("marks cover {total} of {n} vertices"));
        }
        if self.count(Mark::Middle) != 1 || self.spine[self.middle] != Mark::Middle {
            return err("exactly one middle spine vertex required".into());
        }
        let (low, high) = (self.low_total(), self.high_total());
        if 2 * low >= n || 2 * high > n {
            return err(format!("balance fails: low {low}, high {high}, n {n}"));
        }
        let low_with_middle = low + self.count(Mark::MiddleLowLeg) + 1;
        let high_with_middle = high + self.count(Mark::MiddleHighLeg);
        if low_with_middle != n.div_ceil(2) || high_with_middle != n / 2 {
            return err(format!("totals {low_with_middle}/{high_with_middle} for n {n}"));
        }
        Ok(())
    }
}

/// Marking phase. Positions are 0-based, so "odd-numbered" spine vertices
/// are the even indices.
pub fn mark_caterpillar(shape: &CaterpillarShape) -> Result<MarkingState, SchemeError> {
    let n = shape.n();
    if n < 2 {
        return Err(SchemeError::TooSmall { n, min: 2 });
    }
    if !shape.is_canonical() {
        return Err(SchemeError::NotCanonical);
    }
    let counts = shape.leg_counts();
    let s = counts.len();

    let mut spine: Vec<Mark> = (0..s).map(|i| if i % 2 == 0 { Mark::LowSpine } else { Mark::HighSpine }).collect();
    let mut legs: Vec<Vec<Mark>> =
        (0..s).map(|i| vec![if i % 2 == 0 { Mark::HighLeg } else { Mark::LowLeg }; counts[i]]).collect();

    // running |L_s|+|L_l| and |H_s|+|H_l|
    let mut low: usize = spine.iter().chain(legs.iter().flatten()).filter(|m| m.side() == 1).count();
    let mut high = n - low;

    let mut middle = None;
    for i in (0..s).rev() {
        let (own_low, own_high) = if spine[i] == Mark::LowSpine { (1, counts[i]) } else { (counts[i], 1) };
        let (rest_low, rest_high) = (low - own_low, high - own_high);
        if 2 * rest_low < n && 2 * rest_high <= n {
            middle = Some(i);
            break;
        }
        spine[i] = spine[i].flipped();
        for m in &mut legs[i] {
            *m = m.flipped();
        }
        (low, high) = (rest_low + own_high, rest_high + own_low);
    }
    let middle = middle.ok_or(SchemeError::BalanceNeverHeld)?;
    spine[middle] = Mark::Middle;
    for m in &mut legs[middle] {
        *m = Mark::MiddleHighLeg;
    }

    // pseudo-leg pass, left to right
    let mut pseudo_owner = vec![None; s];
    for i in 0..s {
        let has_pseudo = i > 0 && pseudo_owner[i - 1] == Some(i);
        if i == middle || counts[i] > 0 || has_pseudo {
            continue;
        }
        let owner = i + 1;
        if owner >= s {
            return Err(SchemeError::NotCanonical);
        }
        pseudo_owner[i] = Some(owner);
        spine[i] = match spine[owner] {
            Mark::LowSpine => Mark::HighLeg,
            Mark::HighSpine => Mark::LowLeg,
            _ => spine[i],
        };
    }

    // the right spine neighbor of v_m becomes v_m's pseudo-leg, kept on the spine
    if middle + 1 < s {
        let right = middle + 1;
        if pseudo_owner[right].is_some() {
            pseudo_owner[right] = Some(middle);
            spine[right] = match spine[right] {
                Mark::LowLeg => Mark::LowSpine,
                Mark::HighLeg => Mark::HighSpine,
                other => other,
            };
        }
        if middle > 0 && spine[middle - 1] == spine[right] {
            spine[right] = spine[right].flipped();
        }
    }

    // split the real legs of v_m so the low and high totals come out to ⌈n/2⌉ and ⌊n/2⌋
    let mut state = MarkingState { n, spine, legs, pseudo_owner, middle };
    let low = state.low_total();
    let low_legs = n
        .div_ceil(2)
        .checked_sub(low + 1)
        .ok_or_else(|| SchemeError::Marking(format!("low side holds {low} vertices, more than ⌈n/2⌉ - 1")))?;
    if low_legs > counts[middle] {
        return Err(SchemeError::Marking(format!("{low_legs} low legs needed at v_m, which has {}", counts[middle])));
    }
    for m in &mut state.legs[middle][..low_legs] {
        *m = Mark::MiddleLowLeg;
    }
    state.check()?;
    Ok(state)
}

pub fn label_general_caterpillar(shape: &CaterpillarShape) -> Result<SchemeResult, SchemeError> {
    let state = mark_caterpillar(shape)?;
    let n = shape.n();
    let s = shape.spine_len();
    let m = state.middle;
    let half = n.div_ceil(2);
    let low_mid = state.count(Mark::MiddleLowLeg);
    let high_mid = state.count(Mark::MiddleHighLeg);
    let low_spine = state.count(Mark::LowSpine);
    let high_spine = state.count(Mark::HighSpine);

    // labels by spine index and by (spine index, leg index)
    let mut spine_label = vec![0usize; s];
    let mut leg_label: Vec<Vec<usize>> = shape.leg_counts().iter().map(|&c| vec![0; c]).collect();

    spine_label[m] = half;
    let mut next_low = 1;
    let mut next_high = n - high_mid + 1;
    for (j, mark) in state.legs[m].iter().enumerate() {
        leg_label[m][j] = if *mark == Mark::MiddleLowLeg {
            next_low += 1;
            next_low - 1
        } else {
            next_high += 1;
            next_high - 1
        };
    }

    // spine neighbors of v_m take the inner ends of the spine ranges
    let mut low_neighbor = None;
    let mut high_neighbor = None;
    for nb in [m.checked_sub(1), (m + 1 < s).then_some(m + 1)].into_iter().flatten() {
        match state.spine[nb] {
            Mark::LowSpine if low_neighbor.is_none() => low_neighbor = Some(nb),
            Mark::HighSpine if high_neighbor.is_none() => high_neighbor = Some(nb),
            other => {
                return Err(SchemeError::Marking(format!("spine neighbor {nb} of v_m marked {other:?}")));
            }
        }
    }
    // Remaining spine values increase along a cyclic walk that starts next to
    // v_m and ends on its other side. The walk runs leftward when v_m's low
    // neighbor sits on its left or its high neighbor on its right, rightward
    // otherwise, so the low neighbor comes first and the high neighbor last.
    let leftward = low_neighbor.is_none_or(|v| v < m) && high_neighbor.is_none_or(|v| v > m);
    let cyclic: Vec<usize> =
        if leftward { (0..m).rev().chain((m + 1..s).rev()).collect() } else { (m + 1..s).chain(0..m).collect() };
    let mut low_values = low_mid + 1..=low_mid + low_spine;
    let mut high_values = n - high_mid - high_spine + 1..=n - high_mid;
    for &i in &cyclic {
        match state.spine[i] {
            Mark::LowSpine => spine_label[i] = low_values.next().expect("I(L_s) sized to L_s"),
            Mark::HighSpine => spine_label[i] = high_values.next().expect("I(H_s) sized to H_s"),
            _ => {}
        }
    }
    if low_neighbor.is_some_and(|v| spine_label[v] != low_mid + 1)
        || high_neighbor.is_some_and(|v| spine_label[v] != n - high_mid)
    {
        return Err(SchemeError::Marking("spine neighbors of v_m off the range ends".into()));
    }

    // legs and pseudo-legs grouped by owning spine vertex
    let owned = |owner: usize, leg_mark: Mark| -> Vec<Target> {
        let real =
            state.legs[owner].iter().enumerate().filter(|(_, &mk)| mk == leg_mark).map(|(j, _)| Target::Leg(owner, j));
        let pseudo =
            (0..s).filter(|&i| state.pseudo_owner[i] == Some(owner) && state.spine[i] == leg_mark).map(Target::Spine);
        real.chain(pseudo).collect()
    };

    let mut low_owners: Vec<usize> = (0..s).filter(|&i| state.spine[i] == Mark::LowSpine).collect();
    low_owners.sort_by_key(|&i| spine_label[i]);
    let mut value = half + 1;
    for owner in low_owners {
        for target in owned(owner, Mark::HighLeg) {
            target.assign(&mut spine_label, &mut leg_label, value);
            value += 1;
        }
    }
    if value != half + 1 + state.count(Mark::HighLeg) {
        return Err(SchemeError::Marking("high legs without a low spine owner".into()));
    }

    let mut high_owners: Vec<usize> = (0..s).filter(|&i| state.spine[i] == Mark::HighSpine).collect();
    high_owners.sort_by_key(|&i| Reverse(spine_label[i]));
    let mut value = half - 1;
    let mut assigned = 0;
    for owner in high_owners {
        for target in owned(owner, Mark::LowLeg) {
            target.assign(&mut spine_label, &mut leg_label, value);
            value = value.wrapping_sub(1);
            assigned += 1;
        }
    }
    if assigned != state.count(Mark::LowLeg) {
        return Err(SchemeError::Marking("low legs without a high spine owner".into()));
    }

    let mut labels = vec![0; n];
    for (i, &v) in shape.spine_vertices().iter().enumerate() {
        labels[v] = spine_label[i];
        for (j, &leg) in shape.leg_vertices()[i].iter().enumerate() {
            labels[leg] = leg_label[i][j];
        }
    }
    let guarantee = half as i64 - shape.max_legs() as i64 - 2;
    finish(Scheme::GeneralCaterpillar, &shape.to_graph(), labels, guarantee, Optimality::NotProved)
}

#[derive(Clone, Copy)]
enum Target {
    Leg(usize, usize),
    Spine(usize),
}

impl Target {
    fn assign(self, spine: &mut [usize], legs: &mut [Vec<usize>], value: usize) {
        match self {
            Target::Leg(i, j) => legs[i][j] = value,
            Target::Spine(i) => spine[i] = value,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::labeling::differential_value;

    fn shape(legs: &[usize]) -> CaterpillarShape {
        generate::caterpillar(legs).unwrap().1
    }

    #[test]
    fn four_spine_one_leg_each() {
        // ids: spine 0..4, legs 4..8
        let r = label_general_caterpillar(&shape(&[1, 1, 1, 1])).unwrap();
        assert_eq!(&r.labels()[..4], &[2, 7, 1, 4]);
        assert_eq!(&r.labels()[4..], &[6, 3, 5, 8]);
        assert_eq!(r.value(), 3);
        assert_eq!(r.guarantee, 1);
        assert_eq!(r.optimal, Optimality::NotProved);
    }

    #[test]
    fn p5_uses_a_pseudo_leg() {
        // ids: spine v1=0, v2=1, v3=2; a=3 (leg of v1), b=4 (leg of v3)
        let st = mark_caterpillar(&shape(&[1, 0, 1])).unwrap();
        assert_eq!(st.middle(), 2);
        assert_eq!(st.pseudo_owner(1), Some(2));
        let r = label_general_caterpillar(&shape(&[1, 0, 1])).unwrap();
        assert_eq!(r.labels(), &[2, 5, 3, 4, 1]);
        assert_eq!(r.value(), 2);
    }

    #[test]
    fn two_spine_uneven_legs() {
        // ids: v1=0, v2=1, legs of v1 = 2,3, leg of v2 = 4
        let r = label_general_caterpillar(&shape(&[2, 1])).unwrap();
        assert_eq!(r.labels(), &[2, 3, 4, 5, 1]);
        assert_eq!(r.value(), 1);
        assert_eq!(r.guarantee, -1);
    }

    #[test]
    fn marking_invariants_hold() {
        for legs in [vec![1, 1, 1, 1], vec![3, 0, 0, 2], vec![1, 0, 1, 0, 1], vec![5], vec![1], vec![4, 0, 0, 0, 1]] {
            let st = mark_caterpillar(&shape(&legs)).unwrap();
            st.check().unwrap();
            let n: usize = legs.len() + legs.iter().sum::<usize>();
            let partition: usize = [
                Mark::LowSpine,
                Mark::HighSpine,
                Mark::Middle,
                Mark::LowLeg,
                Mark::HighLeg,
                Mark::MiddleLowLeg,
                Mark::MiddleHighLeg,
            ]
            .iter()
            .map(|&m| st.count(m))
            .sum();
            assert_eq!(partition, n, "{legs:?}");
        }
    }

    #[test]
    fn middle_neighbors_straddle_the_split() {
        let st = mark_caterpillar(&shape(&[1, 0, 0, 3, 0, 0, 1])).unwrap();
        let m = st.middle();
        if m > 0 && m + 1 < st.spine_marks().len() {
            let pair = [st.spine_marks()[m - 1], st.spine_marks()[m + 1]];
            assert!(pair.contains(&Mark::LowSpine) && pair.contains(&Mark::HighSpine), "{pair:?}");
        }
    }

    #[test]
    fn tiny_inputs() {
        assert_eq!(label_general_caterpillar(&shape(&[0])).unwrap_err(), SchemeError::TooSmall { n: 1, min: 2 });
        let r = label_general_caterpillar(&shape(&[1])).unwrap();
        assert_eq!(r.labels(), &[1, 2]);
        let r = label_general_caterpillar(&shape(&[6])).unwrap();
        assert_eq!(r.value(), 1);
    }

    #[test]
    fn exhaustive_small_caterpillars_meet_guarantee() {
        fn all(prefix: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
            if !prefix.is_empty() && (prefix.len() == 1 || *prefix.last().unwrap() > 0) {
                out.push(prefix.clone());
            }
            if left == 0 {
                return;
            }
            for c in 0..=4 {
                if prefix.is_empty() && c == 0 {
                    continue;
                }
                prefix.push(c);
                all(prefix, left - 1, out);
                prefix.pop();
            }
        }
        let mut cases = Vec::new();
        all(&mut Vec::new(), 7, &mut cases);
        assert!(cases.len() > 10_000);
        for legs in cases {
            let sh = shape(&legs);
            let r = label_general_caterpillar(&sh).unwrap_or_else(|e| panic!("{legs:?}: {e}"));
            assert_eq!(differential_value(&sh.to_graph(), r.labels()).unwrap(), r.value());
            assert!(r.value() as i64 >= r.guarantee);
        }
    }
}

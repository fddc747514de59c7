use diffcolor::generate;
use diffcolor::{differential_value, is_valid_labeling, Graph, Labeling, LabelingError};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree_and_labels() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    (any::<u64>(), 1usize..12, 1usize..5).prop_map(|(seed, spine, legs)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (g, _) = generate::random_caterpillar(&mut rng, spine, legs);
        let n = g.n();
        let mut labels: Vec<usize> = (1..=n).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        use rand::seq::SliceRandom;
        labels.shuffle(&mut rng);
        perm.shuffle(&mut rng);
        (g, labels, perm)
    })
}

proptest! {
    #[test]
    fn complement_keeps_value((g, labels, _) in tree_and_labels()) {
        let l = Labeling::new(labels).unwrap();
        let c = l.complement();
        prop_assert_eq!(
            differential_value(&g, l.labels()).unwrap(),
            differential_value(&g, c.labels()).unwrap()
        );
    }

    #[test]
    fn relabeling_vertices_keeps_value((g, labels, perm) in tree_and_labels()) {
        let l = Labeling::new(labels).unwrap();
        let h = g.permuted(&perm);
        let moved = l.permuted(&perm);
        prop_assert_eq!(
            differential_value(&g, l.labels()).unwrap(),
            differential_value(&h, moved.labels()).unwrap()
        );
    }

    #[test]
    fn value_never_exceeds_half((g, labels, _) in tree_and_labels()) {
        prop_assume!(g.n() >= 2);
        prop_assert!(differential_value(&g, &labels).unwrap() <= g.n() / 2);
    }

    #[test]
    fn duplicated_label_is_rejected((g, mut labels, _) in tree_and_labels()) {
        prop_assume!(g.n() >= 2);
        labels[1] = labels[0];
        let rejected = matches!(is_valid_labeling(&g, &labels), Err(LabelingError::Duplicate { .. }));
        prop_assert!(rejected);
    }
}

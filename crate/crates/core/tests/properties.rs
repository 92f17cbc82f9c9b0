//! Randomized cross-module invariants.

use proptest::prelude::*;
use quiver_comb::{
    color_counts, decompose, dim_quiver_variety, from_maya, reconstruct, tangent_character,
    to_maya, ColorSpec, Partition,
};

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..10, 0..10).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&x| x > 0);
        Partition::new(parts).unwrap()
    })
}

proptest! {
    #[test]
    fn maya_roundtrip(y in arb_partition()) {
        let (back, charge) = from_maya(&to_maya(&y));
        prop_assert_eq!(back, y);
        prop_assert_eq!(charge, 0);
    }

    #[test]
    fn decompose_reconstruct_roundtrip(y in arb_partition(), l in 2u32..6) {
        let cq = decompose(&y, l)?;
        prop_assert_eq!(reconstruct(&cq.core, &cq.quotient, l)?, y.clone());
        prop_assert_eq!(y.weight(), cq.core.weight() + l as u64 * cq.quotient_weight());
        prop_assert_eq!(cq.k.iter().sum::<i64>(), 0);
    }

    #[test]
    fn divisible_hooks_count_quotient_boxes(y in arb_partition(), l in 2u32..6) {
        let cq = decompose(&y, l)?;
        let divisible = y
            .cells()
            .filter(|&s| y.hook_length(s).unwrap() % l as u64 == 0)
            .count() as u64;
        prop_assert_eq!(divisible, cq.quotient_weight());
    }

    #[test]
    fn character_length_is_dimension(
        y1 in arb_partition(),
        y2 in arb_partition(),
        l in 2u32..4,
        g1 in 0u32..4,
        g2 in 0u32..4,
    ) {
        let (g1, g2) = (g1 % l, g2 % l);
        let spec = ColorSpec::new(l, vec![g1.min(g2), g1.max(g2)])?;
        let ys = vec![y1, y2];
        let v = color_counts(&ys, &spec)?;
        let d = dim_quiver_variety(&spec.w_vector(), &v)?;
        let c = tangent_character(&ys, &spec)?;
        prop_assert_eq!(c.len() as u64, d);
    }

    #[test]
    fn conjugation_preserves_core_property(y in arb_partition(), l in 2u32..6) {
        // hooks are permuted by conjugation, so core/quotient weights agree
        let a = decompose(&y, l)?;
        let b = decompose(&y.conjugate(), l)?;
        prop_assert_eq!(a.core.weight(), b.core.weight());
        prop_assert_eq!(a.quotient_weight(), b.quotient_weight());
    }
}

use proptest::prelude::*;
use wreath_eulerian::wreath::{
    cycle_structure, dex_set, group_order, reverse_negative_blocks, statistics, type_b_stats,
    ColoredLetter, ColoredPermutation, Enumeration,
};

fn colored_perm(max_n: usize, colors: u32) -> impl Strategy<Value = ColoredPermutation> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let values: Vec<u32> = (1..=n as u32).collect();
            (
                Just(values).prop_shuffle(),
                prop::collection::vec(0..colors, n),
            )
        })
        .prop_map(move |(vals, cols)| {
            let letters = vals
                .into_iter()
                .zip(cols)
                .map(|(v, c)| ColoredLetter::new(v, c))
                .collect();
            ColoredPermutation::new(letters, colors).unwrap()
        })
}

fn any_colored_perm() -> impl Strategy<Value = ColoredPermutation> {
    (1u32..5).prop_flat_map(|n| colored_perm(9, n))
}

proptest! {
    #[test]
    fn statistic_consistency(pi in any_colored_perm()) {
        let s = statistics(&pi);
        prop_assert_eq!(s.des, s.des_set.len());
        prop_assert_eq!(s.maj, s.des_set.iter().sum::<usize>());
        prop_assert_eq!(s.exc, s.exc_set.len());
        prop_assert_eq!(s.fix.len(), pi.colors() as usize);
        prop_assert_eq!(s.col_total(), pi.letters().iter().filter(|l| l.color > 0).count());
        prop_assert!(s.fix_total() + s.exc <= pi.len());
        prop_assert_eq!(s.dex_set.clone(), dex_set(&pi));
    }

    #[test]
    fn dex_set_sum_and_size(pi in any_colored_perm()) {
        let s = statistics(&pi);
        prop_assert_eq!(s.dex_set.iter().sum::<usize>(), s.maj - s.exc);
        let first_is_one = pi.at(1) == ColoredLetter::new(1, 0);
        prop_assert_eq!(s.dex_set.len() + usize::from(!first_is_one), s.des_star);
    }

    #[test]
    fn cycles_partition_the_positions(pi in any_colored_perm()) {
        let cs = cycle_structure(&pi);
        let mut seen: Vec<u32> = cs.cycles.iter().flatten().map(|l| l.value).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (1..=pi.len() as u32).collect::<Vec<_>>());
        prop_assert_eq!(cs.cv_type.size(), pi.len());
        let total: Vec<usize> = cs.cv_type.color_vector(pi.colors());
        prop_assert_eq!(&total[..], &statistics(&pi).col[..]);
    }

    #[test]
    fn block_reversal_is_an_involution(pi in colored_perm(9, 2)) {
        let image = reverse_negative_blocks(&pi).unwrap();
        prop_assert_eq!(reverse_negative_blocks(&image).unwrap(), pi.clone());
        prop_assert_eq!(type_b_stats(&pi).unwrap().des_b, statistics(&image).des_star);
    }

    #[test]
    fn text_roundtrip(pi in any_colored_perm()) {
        prop_assert_eq!(ColoredPermutation::parse(&pi.to_string(), pi.colors()).unwrap(), pi);
    }
}

#[test]
fn worked_block_reversal_example() {
    let pi = ColoredPermutation::parse("2^0,1^1,5^1,3^0,8^0,7^1,4^1,6^1", 2).unwrap();
    let image = reverse_negative_blocks(&pi).unwrap();
    assert_eq!(
        image,
        ColoredPermutation::parse("2^0,5^1,1^1,3^0,8^0,6^1,4^1,7^1", 2).unwrap()
    );
    assert_eq!(
        type_b_stats(&pi).unwrap().des_b,
        statistics(&image).des_star
    );
}

#[test]
fn enumeration_counts() {
    for (n, colors) in [(0, 3), (1, 1), (3, 2), (4, 3)] {
        let en = Enumeration::new(n, colors).unwrap();
        assert_eq!(en.len() as u128, group_order(n, colors));
        assert_eq!(en.iter().count() as u128, group_order(n, colors));
    }
    assert_eq!(group_order(4, 3), 24 * 81);
}

#[test]
fn invalid_permutations_are_rejected() {
    assert!(ColoredPermutation::parse("1,1", 2).is_err());
    assert!(ColoredPermutation::parse("1^2,2", 2).is_err());
    assert!(ColoredPermutation::parse("1,3", 1).is_err());
    assert!(ColoredPermutation::parse("1,x", 1).is_err());
    assert!(type_b_stats(&ColoredPermutation::parse("1^0,2^0", 3).unwrap()).is_err());
}

//! Proptest strategies for degrees and small random frameworks.

use faf_core::{Degree, Faf};
use proptest::collection::vec;
use proptest::prelude::*;

/// Rationals in [0, 1] with small denominators, endpoints included.
pub fn unit_degree() -> impl Strategy<Value = Degree> {
    (1i64..=12).prop_flat_map(|den| (0..=den).prop_map(move |num| Degree::ratio(num, den).unwrap()))
}

/// Frameworks with 1 ..= `max_args` arguments, at most `max_attacks` distinct
/// attacks, and all degrees in the tenths 0.1 ..= 0.9.
pub fn small_faf(max_args: usize, max_attacks: usize) -> impl Strategy<Value = Faf> {
    (1..=max_args).prop_flat_map(move |n| {
        (
            vec(1i64..=9, n..=n),
            vec((0..n, 0..n, 1i64..=9), 0..=max_attacks),
        )
            .prop_map(move |(degrees, attacks)| build_faf(&degrees, &attacks))
    })
}

/// A [`small_faf`] plus two rows of seed words, one word per potential
/// argument, for deriving fuzzy subsets with [`crate::pick_subset`].
pub fn faf_with_two_seed_rows(
    max_args: usize,
    max_attacks: usize,
) -> impl Strategy<Value = (Faf, Vec<u32>, Vec<u32>)> {
    (
        small_faf(max_args, max_attacks),
        vec(any::<u32>(), max_args..=max_args),
        vec(any::<u32>(), max_args..=max_args),
    )
}

fn build_faf(degrees: &[i64], attacks: &[(usize, usize, i64)]) -> Faf {
    let tenths = |d: i64| Degree::ratio(d, 10).unwrap();
    let mut seen = std::collections::BTreeSet::new();
    Faf::new(
        degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| (format!("a{i}"), tenths(d))),
        attacks
            .iter()
            .filter(|&&(from, to, _)| seen.insert((from, to)))
            .map(|&(from, to, d)| (format!("a{from}"), format!("a{to}"), tenths(d))),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    proptest! {
        #[test]
        fn generated_frameworks_are_valid(faf in small_faf(5, 8)) {
            prop_assert!(faf.arg_count() >= 1 && faf.arg_count() <= 5);
            prop_assert!(faf.attacks().len() <= 8);
        }

        #[test]
        fn seed_rows_cover_every_argument((faf, row_a, row_b) in faf_with_two_seed_rows(5, 8)) {
            prop_assert!(row_a.len() >= faf.arg_count());
            prop_assert!(row_b.len() >= faf.arg_count());
        }
    }
}

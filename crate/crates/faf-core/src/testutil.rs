//! In-crate fixtures and strategies for the unit tests.
//!
//! The `faf-testkit` crate exposes the same fixtures to integration tests
//! and other crates, but unit tests cannot link against it: a dev-dependency
//! that itself depends on this crate sees a separately compiled copy whose
//! types do not unify with `crate::*`. Hence this small mirror.

use proptest::collection::vec;
use proptest::prelude::*;

use crate::degree::Degree;
use crate::framework::Faf;
use crate::fuzzyset::FuzzySet;
use crate::lattice::DegreeLattice;

fn tenths(n: i64) -> Degree {
    Degree::ratio(n, 10).unwrap()
}

fn build(args: &[(&str, i64)], attacks: &[(&str, &str, i64)]) -> Faf {
    Faf::new(
        args.iter().map(|&(id, d)| (id.to_string(), tenths(d))),
        attacks
            .iter()
            .map(|&(f, t, d)| (f.to_string(), t.to_string(), tenths(d))),
    )
    .unwrap()
}

/// Six arguments in three strongly connected components chained together:
/// a lone unattacked argument, a mutual pair, and a directed triangle.
pub(crate) fn three_component_faf() -> Faf {
    build(
        &[("A", 8), ("B", 7), ("C", 6), ("D", 8), ("E", 6), ("F", 7)],
        &[
            ("A", "B", 8),
            ("B", "C", 9),
            ("C", "B", 9),
            ("C", "D", 8),
            ("D", "E", 7),
            ("E", "F", 8),
            ("F", "D", 9),
        ],
    )
}

/// Nine arguments in three strongly connected components with branching
/// preferred extensions.
pub(crate) fn nine_argument_faf() -> Faf {
    build(
        &[
            ("A", 8),
            ("B", 8),
            ("C", 9),
            ("D", 8),
            ("E", 8),
            ("F", 9),
            ("G", 8),
            ("H", 5),
            ("I", 7),
        ],
        &[
            ("A", "B", 8),
            ("B", "A", 9),
            ("B", "C", 9),
            ("C", "D", 8),
            ("D", "E", 9),
            ("E", "F", 8),
            ("F", "C", 8),
            ("E", "C", 9),
            ("E", "G", 8),
            ("G", "H", 9),
            ("H", "I", 7),
            ("G", "I", 8),
            ("I", "G", 8),
        ],
    )
}

/// Two arguments attacking each other, a single strongly connected component.
pub(crate) fn mutual_pair_faf() -> Faf {
    build(&[("A", 8), ("B", 8)], &[("A", "B", 8), ("B", "A", 9)])
}

/// A three-cycle with every degree at one.
pub(crate) fn crisp_triangle() -> Faf {
    build(
        &[("X", 10), ("Y", 10), ("Z", 10)],
        &[("X", "Y", 10), ("Y", "Z", 10), ("Z", "X", 10)],
    )
}

/// Rationals in [0, 1] with small denominators, endpoints included.
pub(crate) fn unit_degree() -> impl Strategy<Value = Degree> {
    (1i64..=12).prop_flat_map(|den| (0..=den).prop_map(move |num| Degree::ratio(num, den).unwrap()))
}

/// Frameworks with 1 ..= `max_args` arguments, at most `max_attacks` distinct
/// attacks, and all degrees in the tenths 0.1 ..= 0.9.
pub(crate) fn small_faf(max_args: usize, max_attacks: usize) -> impl Strategy<Value = Faf> {
    (1..=max_args).prop_flat_map(move |n| {
        (
            vec(1i64..=9, n..=n),
            vec((0..n, 0..n, 1i64..=9), 0..=max_attacks),
        )
            .prop_map(move |(degrees, attacks)| build_faf(&degrees, &attacks))
    })
}

/// A [`small_faf`] plus two rows of seed words, one word per potential
/// argument, for deriving fuzzy subsets with [`pick_subset`].
pub(crate) fn faf_with_two_seed_rows(
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

/// Maps one seed word per argument to a fuzzy subset of the framework: each
/// argument gets a lattice value at most its own degree, chosen by the seed.
pub(crate) fn pick_subset(faf: &Faf, lattice: &DegreeLattice, seeds: &[u32]) -> FuzzySet {
    pick_capped(faf, lattice, seeds, |_, cap| cap)
}

/// As [`pick_subset`], additionally capped pointwise by `cap`.
pub(crate) fn pick_subset_within(
    faf: &Faf,
    lattice: &DegreeLattice,
    cap: &FuzzySet,
    seeds: &[u32],
) -> FuzzySet {
    pick_capped(faf, lattice, seeds, |id, arg_cap| {
        arg_cap.min(cap.degree(id))
    })
}

fn pick_capped(
    faf: &Faf,
    lattice: &DegreeLattice,
    seeds: &[u32],
    cap: impl Fn(&str, Degree) -> Degree,
) -> FuzzySet {
    (0..faf.arg_count())
        .map(|i| {
            let id = faf.arg_id(i);
            let allowed = lattice.values_up_to(cap(id, faf.arg_degree(i)));
            let seed = seeds.get(i).copied().unwrap_or(0) as usize;
            (id.to_string(), allowed[seed % allowed.len()])
        })
        .collect()
}

/// Strongly connected components by brute-force pairwise reachability,
/// sorted by smallest member.
pub(crate) fn naive_scc_partition(faf: &Faf) -> Vec<Vec<usize>> {
    let n = faf.arg_count();
    let mut reach = vec![vec![false; n]; n];
    for attack in faf.attacks() {
        reach[attack.from][attack.to] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
            }
        }
    }
    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if component_of[i] != usize::MAX {
            continue;
        }
        let mut members = vec![i];
        component_of[i] = components.len();
        for j in i + 1..n {
            if component_of[j] == usize::MAX && reach[i][j] && reach[j][i] {
                component_of[j] = components.len();
                members.push(j);
            }
        }
        components.push(members);
    }
    components
}

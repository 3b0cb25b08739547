//! Test support for the fuzzy argumentation workspace.
//!
//! Everything here exists to exercise the production crates from the
//! outside: hand-built fixture frameworks with independently worked-out
//! expected values, seeded random corpora for differential runs, proptest
//! strategies, and deliberately naive oracle implementations (reachability
//! based SCCs, bitmask classical semantics) that share no code with the
//! algorithms under test.

pub mod classical;
pub mod strategies;

use faf_core::{Degree, DegreeLattice, Faf, FuzzySet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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

/// Six arguments whose attack graph fragments into three strongly connected
/// components in a chain: a lone unattacked argument, a mutual pair, and a
/// directed triangle.  Small enough to work every expected value by hand,
/// rich enough to exercise the decomposition end to end.
pub fn three_component_faf() -> Faf {
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

/// Nine arguments in three strongly connected components: a mutual pair, a
/// four-cycle with a chord, and a three-cycle with an extra attack.  Its
/// preferred extensions are not unique, which makes it the fixture of choice
/// for branching recursion tests.
pub fn nine_argument_faf() -> Faf {
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

/// Two arguments attacking each other with asymmetric strengths.  A single
/// strongly connected component, so recursive solvers hit their base case.
pub fn mutual_pair_faf() -> Faf {
    build(&[("A", 8), ("B", 8)], &[("A", "B", 8), ("B", "A", 9)])
}

/// A three-cycle with every degree at one, i.e. a classical odd attack cycle.
pub fn crisp_triangle() -> Faf {
    build(
        &[("X", 10), ("Y", 10), ("Z", 10)],
        &[("X", "Y", 10), ("Y", "Z", 10), ("Z", "X", 10)],
    )
}

/// Deterministic generator stream for corpus tests.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random framework with up to `max_args` arguments and `max_attacks`
/// distinct attacks, all degrees drawn from the tenths 0.1 ..= 0.9.
pub fn random_faf(rng: &mut ChaCha8Rng, max_args: usize, max_attacks: usize) -> Faf {
    let n = rng.gen_range(1..=max_args);
    let args: Vec<(String, Degree)> = (0..n)
        .map(|i| (format!("a{i}"), tenths(rng.gen_range(1..=9))))
        .collect();
    let wanted = rng.gen_range(0..=max_attacks);
    let mut pairs = std::collections::BTreeSet::new();
    let mut attacks = Vec::new();
    for _ in 0..wanted {
        let from = rng.gen_range(0..n);
        let to = rng.gen_range(0..n);
        if pairs.insert((from, to)) {
            attacks.push((
                format!("a{from}"),
                format!("a{to}"),
                tenths(rng.gen_range(1..=9)),
            ));
        }
    }
    Faf::new(args, attacks).unwrap()
}

/// Random framework with every degree at one.  Each ordered pair (self
/// attacks included) carries an attack with probability one third.
pub fn random_crisp_faf(rng: &mut ChaCha8Rng, max_args: usize) -> Faf {
    let n = rng.gen_range(1..=max_args);
    let args: Vec<(String, Degree)> = (0..n).map(|i| (format!("a{i}"), Degree::one())).collect();
    let mut attacks = Vec::new();
    for from in 0..n {
        for to in 0..n {
            if rng.gen_range(0..3) == 0 {
                attacks.push((format!("a{from}"), format!("a{to}"), Degree::one()));
            }
        }
    }
    Faf::new(args, attacks).unwrap()
}

/// One random seed word per argument, for the subset pickers below.
pub fn random_seeds(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
    (0..n).map(|_| rng.gen()).collect()
}

/// A rational in [0, 1] with a small denominator, endpoints included.
pub fn random_degree(rng: &mut ChaCha8Rng) -> Degree {
    let den = rng.gen_range(1..=12i64);
    Degree::ratio(rng.gen_range(0..=den), den).unwrap()
}

/// Maps one seed word per argument to a fuzzy subset of the framework: each
/// argument gets a lattice value at most its own degree, chosen by the seed.
pub fn pick_subset(faf: &Faf, lattice: &DegreeLattice, seeds: &[u32]) -> FuzzySet {
    pick_capped(faf, lattice, seeds, |_, cap| cap)
}

/// As [`pick_subset`], additionally capped pointwise by `cap`.
pub fn pick_subset_within(
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

/// Strongly connected components by brute-force pairwise reachability.
/// Components are sorted by smallest member, members ascending, matching the
/// production partition order.
pub fn naive_scc_partition(faf: &Faf) -> Vec<Vec<usize>> {
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

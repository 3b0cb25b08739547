//! The semantic primitives: attack classification, weakening, defence, the
//! characteristic function, and neighborhood queries.
//!
//! An attack `(A,a) -> (B,b)` with strength `rho` is tolerable when
//! `min(a, rho) + b <= 1`: both fuzzy points can stand together. Otherwise
//! it is sufficient. Weakening lowers the target until the attack just
//! becomes tolerable; everything else here is built from those two moves.

use crate::degree::{complement, sum_at_most_one, tnorm, Degree};
use crate::framework::{Faf, FafError};
use crate::fuzzyset::FuzzySet;

/// Classification of a single attack between two fuzzy points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AttackStatus {
    Tolerable,
    Sufficient,
}

impl std::fmt::Display for AttackStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AttackStatus::Tolerable => "tolerable",
            AttackStatus::Sufficient => "sufficient",
        })
    }
}

/// Tolerable iff `min(a, rho) + b <= 1`.
pub fn attack_status(a: Degree, rho: Degree, b: Degree) -> AttackStatus {
    if sum_at_most_one(tnorm(a, rho), b) {
        AttackStatus::Tolerable
    } else {
        AttackStatus::Sufficient
    }
}

/// The degree the attacker `(A,a)` with strength `rho` weakens `(B,b)` to:
/// `min(1 - min(a, rho), b)`. Never raises `b`.
pub fn weaken(a: Degree, rho: Degree, b: Degree) -> Degree {
    tnorm(complement(tnorm(a, rho)), b)
}

/// Clips a fuzzy set to the framework: unknown arguments are ignored and
/// degrees are capped at the argument degree.
pub(crate) fn dense_clipped(faf: &Faf, s: &FuzzySet) -> Vec<Degree> {
    let mut dense = vec![Degree::zero(); faf.arg_count()];
    for (id, d) in s.iter() {
        if let Some(i) = faf.index_of(id) {
            dense[i] = d.min(faf.arg_degree(i));
        }
    }
    dense
}

/// For every argument `b`, the lowest degree any single member of `s` can
/// weaken `(b, A(b))` to; `A(b)` itself when no member attacks `b`.
pub(crate) fn weakened_dense(faf: &Faf, s: &[Degree]) -> Vec<Degree> {
    (0..faf.arg_count())
        .map(|b| {
            let mut best = faf.arg_degree(b);
            for &(a, rho) in faf.attackers(b) {
                if !s[a].is_zero() {
                    best = best.min(complement(tnorm(s[a], rho)));
                }
            }
            best
        })
        .collect()
}

/// The best weakening of `(b_arg, A(b_arg))` by single members of `s`.
pub fn best_weakening(faf: &Faf, s: &FuzzySet, b_arg: &str) -> Result<Degree, FafError> {
    let b = faf.index_of(b_arg).ok_or_else(|| FafError::UnknownArgument(b_arg.to_string()))?;
    let dense = dense_clipped(faf, s);
    Ok(weakened_dense(faf, &dense)[b])
}

/// Whether every attack on `(c_arg, c)` can be weakened to tolerable by a
/// single member of `s`.
///
/// With `s` empty this asks that every attack on `c_arg` is already
/// tolerable at the attacker's full degree, which is what makes fixpoint
/// iteration from the empty set meaningful.
pub fn defends(faf: &Faf, s: &FuzzySet, c_arg: &str, c: Degree) -> Result<bool, FafError> {
    let x = faf.index_of(c_arg).ok_or_else(|| FafError::UnknownArgument(c_arg.to_string()))?;
    if c > faf.arg_degree(x) {
        return Err(FafError::NotASubset(format!("{c_arg}:{c}")));
    }
    let dense = dense_clipped(faf, s);
    let weakened = weakened_dense(faf, &dense);
    Ok(defends_dense(faf, &weakened, x, c))
}

/// Defence check against precomputed weakened attacker degrees.
pub(crate) fn defends_dense(faf: &Faf, weakened: &[Degree], x: usize, c: Degree) -> bool {
    faf.attackers(x).iter().all(|&(b, rho)| sum_at_most_one(tnorm(weakened[b], rho), c))
}

/// Dense characteristic function: for each argument the largest degree
/// defended by `s`, capped by `c`.
pub(crate) fn characteristic_dense(faf: &Faf, c: &[Degree], s: &[Degree]) -> Vec<Degree> {
    let weakened = weakened_dense(faf, s);
    (0..faf.arg_count())
        .map(|x| {
            let mut out = c[x];
            for &(b, rho) in faf.attackers(x) {
                out = out.min(complement(tnorm(weakened[b], rho)));
            }
            out
        })
        .collect()
}

/// The characteristic function of the framework in `c`: maps `s` to the
/// fuzzy set of everything `s` defends, capped pointwise by `c`. Entries
/// outside the framework are ignored; degrees are clipped to the argument
/// degrees.
pub fn characteristic(faf: &Faf, c: &FuzzySet, s: &FuzzySet) -> FuzzySet {
    let c = dense_clipped(faf, c);
    let s = dense_clipped(faf, s);
    FuzzySet::from_dense(faf, &characteristic_dense(faf, &c, &s))
}

/// The arguments outside the support of `s` that attack into it, at their
/// full degrees.
pub fn outparents(faf: &Faf, s: &FuzzySet) -> FuzzySet {
    let dense = dense_clipped(faf, s);
    let mut out = FuzzySet::new();
    for b in 0..faf.arg_count() {
        if !dense[b].is_zero() {
            continue;
        }
        if faf.targets(b).iter().any(|&(t, _)| !dense[t].is_zero()) {
            out.set(faf.arg_id(b).to_string(), faf.arg_degree(b));
        }
    }
    out
}

/// Whether `s` sufficiently attacks the fuzzy point `(target_arg, t)`:
/// some attacker `b` has `min(s(b), rho) > 1 - t` (strictly).
pub fn set_sufficiently_attacks(
    faf: &Faf,
    s: &FuzzySet,
    target_arg: &str,
    t: Degree,
) -> Result<bool, FafError> {
    let x = faf
        .index_of(target_arg)
        .ok_or_else(|| FafError::UnknownArgument(target_arg.to_string()))?;
    let dense = dense_clipped(faf, s);
    Ok(faf
        .attackers(x)
        .iter()
        .any(|&(b, rho)| !sum_at_most_one(tnorm(dense[b], rho), t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzyset::fuzzy_subset;
    use crate::lattice::breakpoint_lattice;
    use proptest::prelude::*;

    fn deg(s: &str) -> Degree {
        s.parse().unwrap()
    }

    #[test]
    fn attack_status_boundary() {
        assert_eq!(attack_status(deg("0.4"), deg("0.7"), deg("0.6")), AttackStatus::Tolerable);
        assert_eq!(attack_status(deg("0.6"), deg("0.8"), deg("0.7")), AttackStatus::Sufficient);
        assert_eq!(attack_status(deg("0.9"), deg("0.9"), Degree::zero()), AttackStatus::Tolerable);
    }

    #[test]
    fn weaken_examples() {
        assert_eq!(weaken(deg("0.8"), deg("0.8"), deg("0.7")), deg("0.2"));
        assert_eq!(weaken(deg("0.6"), deg("0.8"), deg("0.8")), deg("0.4"));
        assert_eq!(weaken(deg("0.5"), deg("0.9"), Degree::zero()), Degree::zero());
    }

    fn mutual_pair() -> Faf {
        // A and B attack each other; A also unchallenged from outside
        Faf::new(
            [("A".to_string(), deg("0.8")), ("B".to_string(), deg("0.7"))],
            [
                ("A".to_string(), "B".to_string(), deg("0.8")),
                ("B".to_string(), "A".to_string(), deg("0.9")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn best_weakening_conventions() {
        let faf = mutual_pair();
        let s = FuzzySet::from_pairs([("A", deg("0.8"))]);
        assert_eq!(best_weakening(&faf, &s, "B").unwrap(), deg("0.2"));
        assert_eq!(best_weakening(&faf, &FuzzySet::new(), "B").unwrap(), deg("0.7"));
        assert!(best_weakening(&faf, &s, "Z").is_err());
    }

    #[test]
    fn defends_rejects_degrees_above_the_argument() {
        let faf = mutual_pair();
        assert!(defends(&faf, &FuzzySet::new(), "A", deg("0.9")).is_err());
        assert!(defends(&faf, &FuzzySet::new(), "A", Degree::zero()).unwrap());
    }

    #[test]
    fn characteristic_of_the_empty_set_on_the_three_component_chain() {
        let faf = crate::testutil::three_component_faf();
        let chi = characteristic(&faf, &faf.arguments(), &FuzzySet::new());
        let expected = FuzzySet::from_pairs([
            ("A", deg("0.8")),
            ("B", deg("0.2")),
            ("C", deg("0.3")),
            ("D", deg("0.3")),
            ("E", deg("0.3")),
            ("F", deg("0.4")),
        ]);
        assert_eq!(chi, expected);
    }

    #[test]
    fn best_weakening_on_the_three_component_chain() {
        let faf = crate::testutil::three_component_faf();
        let s = FuzzySet::from_pairs([("A", deg("0.8"))]);
        assert_eq!(best_weakening(&faf, &s, "B").unwrap(), deg("0.2"));
        let s = FuzzySet::from_pairs([("F", deg("0.4"))]);
        assert_eq!(best_weakening(&faf, &s, "D").unwrap(), deg("0.6"));
    }

    #[test]
    fn outparents_examples() {
        let faf = crate::gen::chain(2);
        let pair2: FuzzySet =
            faf.args().filter(|(id, _)| id.ends_with('2')).map(|(id, d)| (id.to_string(), d)).collect();
        let out = outparents(&faf, &pair2);
        assert_eq!(out.support().collect::<Vec<_>>(), vec!["y1"]);
        assert!(outparents(&faf, &faf.arguments()).is_empty());
        assert!(outparents(&faf, &FuzzySet::new()).is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn weaken_bounds_and_monotonicity(
            a in crate::testutil::unit_degree(),
            a2 in crate::testutil::unit_degree(),
            rho in crate::testutil::unit_degree(),
            rho2 in crate::testutil::unit_degree(),
            b in crate::testutil::unit_degree(),
            b2 in crate::testutil::unit_degree(),
        ) {
            prop_assert!(weaken(a, rho, b) <= b);
            let (alo, ahi) = if a <= a2 { (a, a2) } else { (a2, a) };
            prop_assert!(weaken(ahi, rho, b) <= weaken(alo, rho, b));
            let (rlo, rhi) = if rho <= rho2 { (rho, rho2) } else { (rho2, rho) };
            prop_assert!(weaken(a, rhi, b) <= weaken(a, rlo, b));
            let (blo, bhi) = if b <= b2 { (b, b2) } else { (b2, b) };
            prop_assert!(weaken(a, rho, blo) <= weaken(a, rho, bhi));
        }

        #[test]
        fn weakening_makes_the_attack_tolerable(
            a in crate::testutil::unit_degree(),
            rho in crate::testutil::unit_degree(),
            b in crate::testutil::unit_degree(),
        ) {
            let weakened = weaken(a, rho, b);
            if weakened < b {
                prop_assert_eq!(attack_status(a, rho, weakened), AttackStatus::Tolerable);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn characteristic_is_monotone_and_capped(
            (faf, seeds1, seeds2) in crate::testutil::faf_with_two_seed_rows(5, 8),
        ) {
            let lattice = breakpoint_lattice(&faf);
            let s2 = crate::testutil::pick_subset(&faf, &lattice, &seeds2);
            let s1 = crate::testutil::pick_subset_within(&faf, &lattice, &s2, &seeds1);
            prop_assert!(fuzzy_subset(&s1, &s2));
            let all = faf.arguments();
            let c1 = characteristic(&faf, &all, &s1);
            let c2 = characteristic(&faf, &all, &s2);
            prop_assert!(fuzzy_subset(&c1, &c2), "characteristic not monotone: {c1} vs {c2}");

            let cap = crate::testutil::pick_subset(&faf, &lattice, &seeds1);
            prop_assert!(fuzzy_subset(&characteristic(&faf, &cap, &s2), &cap));
        }

        #[test]
        fn defends_matches_characteristic_and_is_downward_closed(
            (faf, seeds1, seeds2) in crate::testutil::faf_with_two_seed_rows(5, 8),
        ) {
            let lattice = breakpoint_lattice(&faf);
            let s = crate::testutil::pick_subset(&faf, &lattice, &seeds1);
            let all = faf.arguments();
            let chi = characteristic(&faf, &all, &s);
            for (x, seed) in (0..faf.arg_count()).zip(seeds2.iter()) {
                let id = faf.arg_id(x);
                let allowed = lattice.values_up_to(faf.arg_degree(x));
                let c = allowed[(*seed as usize) % allowed.len()];
                let held = defends(&faf, &s, id, c).unwrap();
                prop_assert_eq!(held, c <= chi.degree(id), "defends({},{}) vs chi {}", id, c, chi);
                if held {
                    for lower in lattice.values_up_to(c) {
                        prop_assert!(defends(&faf, &s, id, *lower).unwrap());
                    }
                }
            }
        }
    }
}

//! Cross-semantics properties on random frameworks: containment between the
//! semantics, maximality of preferred extensions, and agreement with naive
//! classical semantics on frameworks whose degrees are all one.

use faf_core::{
    breakpoint_lattice, enumerate_extensions, fuzzy_subset, grounded, ExtensionSet, FuzzySet,
    SemanticsKind, DEFAULT_BUDGET,
};
use faf_testkit as tk;
use faf_testkit::classical::Dung;

fn enumerate(faf: &faf_core::Faf, kind: SemanticsKind) -> ExtensionSet {
    let lattice = breakpoint_lattice(faf);
    enumerate_extensions(faf, &faf.arguments(), kind, &lattice, DEFAULT_BUDGET).unwrap()
}

#[test]
fn grounded_is_contained_in_every_complete_extension() {
    let mut rng = tk::seeded_rng(0x9d0c_0001);
    for case in 0..80 {
        let faf = tk::random_faf(&mut rng, 5, 8);
        let g = grounded(&faf, &faf.arguments());
        let complete = enumerate(&faf, SemanticsKind::Complete);
        assert!(
            complete.contains(&g),
            "case {case}: grounded {g} missing from complete enumeration of {faf:?}",
        );
        for e in complete.iter() {
            assert!(
                fuzzy_subset(&g, e),
                "case {case}: grounded {g} not below complete {e} in {faf:?}",
            );
        }
    }
}

#[test]
fn preferred_extensions_are_exactly_the_maximal_complete_ones() {
    let mut rng = tk::seeded_rng(0x9d0c_0002);
    for case in 0..60 {
        let faf = tk::random_faf(&mut rng, 5, 8);
        let complete = enumerate(&faf, SemanticsKind::Complete);
        let preferred = enumerate(&faf, SemanticsKind::Preferred);
        for p in preferred.iter() {
            assert!(complete.contains(p), "case {case}: preferred {p} not complete");
            for e in complete.iter() {
                assert!(
                    !fuzzy_subset(p, e) || p == e,
                    "case {case}: preferred {p} strictly below complete {e}",
                );
            }
        }
        for e in complete.iter() {
            assert!(
                preferred.iter().any(|p| fuzzy_subset(e, p)),
                "case {case}: complete {e} not below any preferred extension",
            );
        }
    }
}

#[test]
fn stable_extensions_are_preferred() {
    let mut rng = tk::seeded_rng(0x9d0c_0003);
    for case in 0..60 {
        let faf = tk::random_faf(&mut rng, 5, 8);
        let stable = enumerate(&faf, SemanticsKind::Stable);
        let preferred = enumerate(&faf, SemanticsKind::Preferred);
        for s in stable.iter() {
            assert!(
                preferred.contains(s),
                "case {case}: stable {s} is not preferred in {faf:?}",
            );
        }
    }
}

#[test]
fn admissible_enumeration_contains_the_empty_set() {
    let mut rng = tk::seeded_rng(0x9d0c_0004);
    for _ in 0..40 {
        let faf = tk::random_faf(&mut rng, 5, 8);
        let admissible = enumerate(&faf, SemanticsKind::Admissible);
        assert!(admissible.contains(&FuzzySet::new()));
    }
}

/// On a framework with every degree at one, the solver's crisp outputs and
/// the bitmask oracle must tell the same story: grounded coincides, the
/// extensions with all memberships at one are exactly the classical ones,
/// and crisp maximality matches classical preferredness.
#[test]
fn crisp_frameworks_agree_with_classical_semantics() {
    let mut rng = tk::seeded_rng(0x9d0c_0005);
    for case in 0..40 {
        let faf = tk::random_crisp_faf(&mut rng, 5);
        let dung = Dung::from_crisp(&faf);

        let g = grounded(&faf, &faf.arguments());
        assert_eq!(
            g,
            dung.mask_to_set(dung.grounded_mask()),
            "case {case}: grounded disagrees on {faf:?}",
        );

        for kind in [
            SemanticsKind::Complete,
            SemanticsKind::Stable,
            SemanticsKind::Admissible,
        ] {
            let fuzzy = enumerate(&faf, kind);
            let crisp: Vec<&FuzzySet> = fuzzy
                .iter()
                .filter(|e| e.iter().all(|(_, d)| d.is_one()))
                .collect();
            let classical: Vec<FuzzySet> = dung
                .extensions(kind)
                .into_iter()
                .map(|m| dung.mask_to_set(m))
                .collect();
            assert_eq!(
                crisp.len(),
                classical.len(),
                "case {case}: {kind} count disagrees on {faf:?}",
            );
            for c in &classical {
                assert!(
                    crisp.contains(&c),
                    "case {case}: classical {kind} {c} missing",
                );
            }
        }

        // preferred: crisp maximality among the {0,1}-valued admissible sets
        let admissible = enumerate(&faf, SemanticsKind::Admissible);
        let crisp_adm: Vec<&FuzzySet> = admissible
            .iter()
            .filter(|e| e.iter().all(|(_, d)| d.is_one()))
            .collect();
        let crisp_preferred: Vec<&FuzzySet> = crisp_adm
            .iter()
            .copied()
            .filter(|e| {
                !crisp_adm
                    .iter()
                    .any(|other| *other != *e && fuzzy_subset(e, other))
            })
            .collect();
        let classical_preferred: Vec<FuzzySet> = dung
            .extensions(SemanticsKind::Preferred)
            .into_iter()
            .map(|m| dung.mask_to_set(m))
            .collect();
        assert_eq!(crisp_preferred.len(), classical_preferred.len(), "case {case}");
        for c in &classical_preferred {
            assert!(crisp_preferred.contains(&c), "case {case}");
        }

        // every fuzzy preferred extension that happens to be crisp is
        // classically preferred
        let preferred = enumerate(&faf, SemanticsKind::Preferred);
        for p in preferred.iter() {
            if p.iter().all(|(_, d)| d.is_one()) {
                assert!(
                    classical_preferred.contains(p),
                    "case {case}: crisp preferred {p} unknown to the oracle",
                );
            }
        }
    }
}

//! Naive classical (two-valued) argumentation semantics over bitmask
//! subsets.  This is the reference the fuzzy machinery is compared against
//! on frameworks whose degrees are all one, so it deliberately shares no
//! code with the production crates: a boolean attack matrix, exhaustive
//! subset scans, and set-inclusion maximality checks.

use faf_core::{Degree, Faf, FuzzySet, SemanticsKind};

/// A classical abstract argumentation framework with at most 63 arguments.
pub struct Dung {
    ids: Vec<String>,
    att: Vec<Vec<bool>>,
}

impl Dung {
    /// Reads off the attack relation of a framework whose degrees are all
    /// one.  Panics otherwise: the comparison is only meaningful for crisp
    /// inputs.
    pub fn from_crisp(faf: &Faf) -> Dung {
        assert!(
            faf.degrees().iter().all(|d| d.is_one()),
            "classical oracle needs every argument degree at one",
        );
        let n = faf.arg_count();
        let mut att = vec![vec![false; n]; n];
        for attack in faf.attacks() {
            assert!(
                attack.degree.is_one(),
                "classical oracle needs every attack degree at one",
            );
            att[attack.from][attack.to] = true;
        }
        let ids = (0..n).map(|i| faf.arg_id(i).to_string()).collect();
        Dung { ids, att }
    }

    pub fn arg_count(&self) -> usize {
        self.ids.len()
    }

    fn contains(mask: u64, x: usize) -> bool {
        mask & (1 << x) != 0
    }

    fn conflict_free(&self, mask: u64) -> bool {
        let n = self.arg_count();
        for a in 0..n {
            for b in 0..n {
                if Self::contains(mask, a) && Self::contains(mask, b) && self.att[a][b] {
                    return false;
                }
            }
        }
        true
    }

    fn attacks_into(&self, mask: u64, x: usize) -> bool {
        (0..self.arg_count()).any(|a| Self::contains(mask, a) && self.att[a][x])
    }

    fn defended(&self, mask: u64, x: usize) -> bool {
        (0..self.arg_count()).all(|b| !self.att[b][x] || self.attacks_into(mask, b))
    }

    fn admissible(&self, mask: u64) -> bool {
        self.conflict_free(mask)
            && (0..self.arg_count()).all(|x| !Self::contains(mask, x) || self.defended(mask, x))
    }

    fn complete(&self, mask: u64) -> bool {
        self.admissible(mask)
            && (0..self.arg_count()).all(|x| !self.defended(mask, x) || Self::contains(mask, x))
    }

    fn stable(&self, mask: u64) -> bool {
        self.conflict_free(mask)
            && (0..self.arg_count()).all(|x| Self::contains(mask, x) || self.attacks_into(mask, x))
    }

    /// Least fixpoint of the defense operator, starting from the empty set.
    pub fn grounded_mask(&self) -> u64 {
        let mut mask = 0u64;
        loop {
            let next = (0..self.arg_count())
                .filter(|&x| self.defended(mask, x))
                .fold(0u64, |acc, x| acc | (1 << x));
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// All extensions of the given semantics, as ascending bitmasks.
    pub fn extensions(&self, kind: SemanticsKind) -> Vec<u64> {
        let n = self.arg_count();
        assert!(n < 64, "bitmask oracle is limited to small frameworks");
        let all = 0..(1u64 << n);
        match kind {
            SemanticsKind::ConflictFree => all.filter(|&m| self.conflict_free(m)).collect(),
            SemanticsKind::Admissible => all.filter(|&m| self.admissible(m)).collect(),
            SemanticsKind::Complete => all.filter(|&m| self.complete(m)).collect(),
            SemanticsKind::Stable => all.filter(|&m| self.stable(m)).collect(),
            SemanticsKind::Grounded => vec![self.grounded_mask()],
            SemanticsKind::Preferred => {
                let adm: Vec<u64> = all.filter(|&m| self.admissible(m)).collect();
                adm.iter()
                    .copied()
                    .filter(|&m| {
                        !adm.iter()
                            .any(|&other| other != m && other & m == m)
                    })
                    .collect()
            }
        }
    }

    /// The members of a bitmask as a fuzzy set at degree one, for direct
    /// comparison with crisp outputs of the fuzzy solvers.
    pub fn mask_to_set(&self, mask: u64) -> FuzzySet {
        (0..self.arg_count())
            .filter(|&x| Self::contains(mask, x))
            .map(|x| (self.ids[x].clone(), Degree::one()))
            .collect()
    }
}

//! Finite degree lattices that make extension enumeration possible.
//!
//! Families like the preferred extensions are infinite over the continuum;
//! enumeration runs over a finite complement-closed set of degrees instead.
//! The default is the breakpoint lattice of the framework: every boundary
//! the semantics can compare against is a min of input degrees or a
//! complement of one, so candidate extensions built from these values cover
//! every distinction the framework can express.

use crate::degree::Degree;
use crate::framework::Faf;

/// A sorted, deduplicated, complement-closed set of degrees containing
/// 0, 1/2 and 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeLattice {
    values: Vec<Degree>,
}

/// Lattice construction failures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("grid step must be at least 2, got {0}")]
    GridTooCoarse(usize),
    #[error("degree lattice must contain 0, 1/2 and 1")]
    MissingAnchor,
    #[error("degree lattice is not closed under x -> 1-x")]
    NotComplementClosed,
}

impl DegreeLattice {
    /// Normalizes (sort, dedup, adjoin complements and anchors) and wraps.
    pub fn closure<I: IntoIterator<Item = Degree>>(values: I) -> DegreeLattice {
        let mut all: Vec<Degree> = vec![Degree::zero(), Degree::half(), Degree::one()];
        for v in values {
            all.push(v);
            all.push(v.complement());
        }
        all.sort();
        all.dedup();
        DegreeLattice { values: all }
    }

    /// Wraps an explicit value list, validating the lattice invariants.
    pub fn from_values(mut values: Vec<Degree>) -> Result<DegreeLattice, LatticeError> {
        values.sort();
        values.dedup();
        for anchor in [Degree::zero(), Degree::half(), Degree::one()] {
            if values.binary_search(&anchor).is_err() {
                return Err(LatticeError::MissingAnchor);
            }
        }
        for v in &values {
            if values.binary_search(&v.complement()).is_err() {
                return Err(LatticeError::NotComplementClosed);
            }
        }
        Ok(DegreeLattice { values })
    }

    /// The uniform grid `{0, 1/k, 2/k, ..., 1}` plus `1/2`.
    pub fn grid(k: usize) -> Result<DegreeLattice, LatticeError> {
        if k < 2 {
            return Err(LatticeError::GridTooCoarse(k));
        }
        Ok(DegreeLattice::closure(
            (1..k).map(|i| Degree::ratio(i as i64, k as i64).expect("grid step in range")),
        ))
    }

    pub fn values(&self) -> &[Degree] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, d: Degree) -> bool {
        self.values.binary_search(&d).is_ok()
    }

    /// The lattice values `<= cap`, ascending. Never empty: 0 is always there.
    pub fn values_up_to(&self, cap: Degree) -> &[Degree] {
        let end = self.values.partition_point(|v| *v <= cap);
        &self.values[..end]
    }
}

/// The breakpoint lattice of a framework: `{0, 1/2, 1}`, every argument and
/// attack degree, and all their complements.
pub fn breakpoint_lattice(faf: &Faf) -> DegreeLattice {
    DegreeLattice::closure(
        faf.degrees()
            .iter()
            .copied()
            .chain(faf.attacks().iter().map(|a| a.degree)),
    )
}

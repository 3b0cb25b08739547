//! Solving strategies behind a common trait, registered by name and
//! selected at runtime.
//!
//! `direct` enumerates the full lattice candidate space and serves as the
//! oracle. `scc` decomposes along strongly connected components and is
//! the engine the decomposition exists for. Both must produce identical
//! extension sets wherever their supported semantics overlap.

use crate::framework::Faf;
use crate::fuzzyset::FuzzySet;
use crate::lattice::DegreeLattice;
use crate::recursive::{
    gf_check, gf_enumerate_traced, grounded_scc_traced, prune_tolerable_attacks, TraceRecord,
};
use crate::semantics::{
    enumerate_extensions, grounded, is_admissible, is_complete, is_conflict_free, is_preferred,
    is_stable, ExtensionSet, SemanticsKind, SolveError, DEFAULT_BUDGET,
};

/// Knobs shared by all engines. `budget` caps the candidate space of any
/// single enumeration; `prune` drops always-tolerable attacks before
/// solving (and from every recursive restriction); `trace` asks the scc
/// engine to report its recursion steps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SolveOptions {
    pub budget: u64,
    pub prune: bool,
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget: DEFAULT_BUDGET, prune: true, trace: false }
    }
}

/// Extensions plus the recursion trace (empty unless requested and the
/// engine traces).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Solution {
    pub extensions: ExtensionSet,
    pub trace: Vec<TraceRecord>,
}

/// A solving strategy. Membership checks ignore `prune` and `trace`;
/// they are cheap enough to run on the framework as given.
pub trait Engine: Sync {
    fn name(&self) -> &'static str;

    fn enumerate(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        opts: &SolveOptions,
    ) -> Result<Solution, SolveError>;

    fn check(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        e: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        opts: &SolveOptions,
    ) -> Result<bool, SolveError>;
}

/// Brute-force lattice enumeration and the plain membership checkers.
pub struct DirectEngine;

impl Engine for DirectEngine {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn enumerate(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        opts: &SolveOptions,
    ) -> Result<Solution, SolveError> {
        let pruned;
        let faf = if opts.prune {
            pruned = prune_tolerable_attacks(faf);
            &pruned
        } else {
            faf
        };
        let extensions = enumerate_extensions(faf, c, kind, lattice, opts.budget)?;
        Ok(Solution { extensions, trace: Vec::new() })
    }

    fn check(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        e: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        _opts: &SolveOptions,
    ) -> Result<bool, SolveError> {
        let held = match kind {
            SemanticsKind::ConflictFree => is_conflict_free(faf, e)?,
            SemanticsKind::Admissible => is_admissible(faf, c, e)?,
            SemanticsKind::Complete => is_complete(faf, c, e)?,
            SemanticsKind::Grounded => *e == grounded(faf, c),
            SemanticsKind::Preferred => is_preferred(faf, c, e, lattice)?,
            SemanticsKind::Stable => is_stable(faf, e)?,
        };
        Ok(held)
    }
}

/// SCC-recursive enumeration and membership.
pub struct SccEngine;

impl Engine for SccEngine {
    fn name(&self) -> &'static str {
        "scc"
    }

    fn enumerate(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        opts: &SolveOptions,
    ) -> Result<Solution, SolveError> {
        if kind == SemanticsKind::Grounded {
            let (g, trace) = grounded_scc_traced(faf, c);
            return Ok(Solution {
                extensions: ExtensionSet::from_vec(vec![g]),
                trace: if opts.trace { trace } else { Vec::new() },
            });
        }
        let (extensions, trace) =
            gf_enumerate_traced(faf, c, kind, lattice, opts.budget, opts.prune)?;
        Ok(Solution { extensions, trace: if opts.trace { trace } else { Vec::new() } })
    }

    fn check(
        &self,
        faf: &Faf,
        c: &FuzzySet,
        e: &FuzzySet,
        kind: SemanticsKind,
        lattice: &DegreeLattice,
        _opts: &SolveOptions,
    ) -> Result<bool, SolveError> {
        gf_check(faf, c, e, kind, lattice)
    }
}

pub static ENGINES: [&dyn Engine; 2] = [&DirectEngine, &SccEngine];

/// Looks an engine up by its registered name.
pub fn engine(name: &str) -> Option<&'static dyn Engine> {
    ENGINES.iter().copied().find(|e| e.name() == name)
}

/// Names of all registered engines, in registry order.
pub fn engine_names() -> Vec<&'static str> {
    ENGINES.iter().map(|e| e.name()).collect()
}

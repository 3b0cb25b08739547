//! Solver library for fuzzy argumentation frameworks under Gödel (min)
//! semantics.
//!
//! A fuzzy argumentation framework assigns degrees in (0,1] to arguments
//! and to the attacks between them. An attack is *tolerable* when
//! attacker degree (capped by attack strength) and target degree sum to
//! at most 1, and *sufficient* otherwise; members of a set defend a
//! target by weakening its attackers until every attack is tolerable.
//! From those two moves the classical semantics zoo is rebuilt degree by
//! degree: conflict-free, admissible, complete, grounded, preferred, and
//! stable extensions, all as fuzzy sets.
//!
//! All arithmetic is exact rational, because the semantics hinge on
//! boundary comparisons like 0.4 + 0.6 ≤ 1 that floats get wrong.
//! Extension families can be uncountable, so enumeration draws candidate
//! degrees from a finite [`DegreeLattice`], by default the breakpoint
//! closure of the input degrees.
//!
//! Two interchangeable engines do the solving. The `direct` engine walks
//! the whole candidate lattice and is the oracle; the `scc` engine
//! decomposes the attack graph into strongly connected components,
//! solves them in topological order under the caps induced by ancestor
//! choices, and recurses as resolved conflicts split components further.
//! Both are registered in [`engine::ENGINES`] behind the
//! [`engine::Engine`] trait and are selected by name.
//!
//! ```
//! use faf_core::{breakpoint_lattice, parse_faf, FafFormat, SemanticsKind};
//! use faf_core::engine::{engine, SolveOptions};
//!
//! let faf = parse_faf("arg(A,0.8). arg(B,0.6). att(A,B,0.9).", FafFormat::Fapx).unwrap();
//! let lattice = breakpoint_lattice(&faf);
//! let solution = engine("scc").unwrap()
//!     .enumerate(&faf, &faf.arguments(), SemanticsKind::Grounded, &lattice, &SolveOptions::default())
//!     .unwrap();
//! assert_eq!(solution.extensions.len(), 1);
//! ```

pub mod attacks;
pub mod degree;
pub mod engine;
pub mod framework;
pub mod fuzzyset;
pub mod gen;
pub mod lattice;
pub mod parse;
pub mod recursive;
pub mod scc;
pub mod semantics;
#[cfg(test)]
mod testutil;

pub use attacks::{
    attack_status, best_weakening, characteristic, defends, outparents, set_sufficiently_attacks,
    weaken, AttackStatus,
};
pub use degree::{complement, tnorm, Degree, DegreeError};
pub use engine::{engine, engine_names, DirectEngine, Engine, SccEngine, Solution, SolveOptions, ENGINES};
pub use framework::{restrict, Attack, Faf, FafError};
pub use fuzzyset::{fuzzy_subset, FuzzySet};
pub use lattice::{breakpoint_lattice, DegreeLattice, LatticeError};
pub use parse::{
    parse_faf, parse_fuzzy_set, serialize_fapx, serialize_structured, FafFormat, ParseError,
    StructuredFaf,
};
pub use recursive::{
    defended_part, gf_check, gf_enumerate, gf_enumerate_traced, grounded_scc, grounded_scc_traced,
    limited_part, prune_tolerable_attacks, residual_part, scc_context, SccContext, TraceRecord,
};
pub use scc::{compute_sccs, condensation, is_single_scc, Condensation, SccPartition};
pub use semantics::{
    enumerate_extensions, grounded, is_admissible, is_complete, is_conflict_free, is_preferred,
    is_stable, ExtensionSet, SemanticsKind, SolveError, DEFAULT_BUDGET,
};

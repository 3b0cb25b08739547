//! Direct semantics: membership checkers for the six extension notions,
//! the grounded least fixpoint, and the brute-force lattice enumerator.
//!
//! Checkers are generalized relative to a cap `C` where the notion calls
//! for it (admissible, complete, preferred, grounded). Enumeration is
//! finite because candidate degrees are drawn from a [`DegreeLattice`];
//! preferred maximality is judged against all lattice-valued admissible
//! candidates, so it is maximality at lattice granularity.

use crate::attacks::{characteristic_dense, defends_dense, dense_clipped, weakened_dense};
use crate::degree::{sum_at_least_one, sum_at_most_one, tnorm, Degree};
use crate::framework::{Faf, FafError};
use crate::fuzzyset::FuzzySet;
use crate::lattice::DegreeLattice;
use num::rational::Rational64;

/// Default cap on the number of candidates enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// The six extension notions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SemanticsKind {
    ConflictFree,
    Admissible,
    Complete,
    Grounded,
    Preferred,
    Stable,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 6] = [
        SemanticsKind::ConflictFree,
        SemanticsKind::Admissible,
        SemanticsKind::Complete,
        SemanticsKind::Grounded,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::ConflictFree => "conflict-free",
            SemanticsKind::Admissible => "admissible",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Grounded => "grounded",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::Stable => "stable",
        }
    }
}

impl std::fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SemanticsKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "conflict-free" | "conflict_free" => Ok(SemanticsKind::ConflictFree),
            "admissible" => Ok(SemanticsKind::Admissible),
            "complete" => Ok(SemanticsKind::Complete),
            "grounded" => Ok(SemanticsKind::Grounded),
            "preferred" => Ok(SemanticsKind::Preferred),
            "stable" => Ok(SemanticsKind::Stable),
            other => Err(format!("unknown semantics `{other}`")),
        }
    }
}

/// A deduplicated, deterministically ordered collection of extensions.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExtensionSet {
    extensions: Vec<FuzzySet>,
}

impl ExtensionSet {
    pub fn from_vec(mut extensions: Vec<FuzzySet>) -> Self {
        extensions.sort();
        extensions.dedup();
        ExtensionSet { extensions }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn contains(&self, e: &FuzzySet) -> bool {
        self.extensions.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &FuzzySet> {
        self.extensions.iter()
    }

    pub fn as_slice(&self) -> &[FuzzySet] {
        &self.extensions
    }

    pub fn into_vec(self) -> Vec<FuzzySet> {
        self.extensions
    }
}

impl FromIterator<FuzzySet> for ExtensionSet {
    fn from_iter<I: IntoIterator<Item = FuzzySet>>(iter: I) -> Self {
        ExtensionSet::from_vec(iter.into_iter().collect())
    }
}

/// Failure modes of the solving entry points.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum SolveError {
    #[error("candidate space of {candidates} exceeds the budget of {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("{kind} semantics is not supported by the {engine} engine")]
    Unsupported { kind: SemanticsKind, engine: &'static str },
    #[error(transparent)]
    Framework(#[from] FafError),
}

/// Converts to dense form, rejecting unknown ids and degrees above the
/// argument degree. The strict counterpart of clipping.
pub(crate) fn dense_checked(faf: &Faf, e: &FuzzySet) -> Result<Vec<Degree>, FafError> {
    let mut dense = vec![Degree::zero(); faf.arg_count()];
    for (id, d) in e.iter() {
        let i = faf
            .index_of(id)
            .ok_or_else(|| FafError::UnknownArgument(id.to_string()))?;
        if d > faf.arg_degree(i) {
            return Err(FafError::NotASubset(format!("{id} at {d} exceeds {}", faf.arg_degree(i))));
        }
        dense[i] = d;
    }
    Ok(dense)
}

pub(crate) fn pointwise_le(a: &[Degree], b: &[Degree]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn conflict_free_dense(faf: &Faf, e: &[Degree]) -> bool {
    faf.attacks()
        .iter()
        .all(|at| sum_at_most_one(tnorm(e[at.from], at.degree), e[at.to]))
}

/// Conflict-free and every supported member defended at its own degree.
/// The cap plays no role here; admissibility relative to C adds only the
/// requirement E ⊆ C, which callers check separately.
pub(crate) fn admissible_dense(faf: &Faf, e: &[Degree]) -> bool {
    if !conflict_free_dense(faf, e) {
        return false;
    }
    let weakened = weakened_dense(faf, e);
    (0..faf.arg_count()).all(|x| e[x].is_zero() || defends_dense(faf, &weakened, x, e[x]))
}

pub(crate) fn complete_dense(faf: &Faf, c: &[Degree], e: &[Degree]) -> bool {
    admissible_dense(faf, e) && pointwise_le(&characteristic_dense(faf, c, e), e)
}

pub(crate) fn stable_dense(faf: &Faf, e: &[Degree]) -> bool {
    if !conflict_free_dense(faf, e) {
        return false;
    }
    (0..faf.arg_count()).all(|x| {
        e[x] == faf.arg_degree(x)
            || faf
                .attackers(x)
                .iter()
                .any(|&(b, rho)| sum_at_least_one(tnorm(e[b], rho), e[x]))
    })
}

/// True iff every attack with both endpoints in the support of `e` is
/// tolerable at the degrees `e` assigns.
pub fn is_conflict_free(faf: &Faf, e: &FuzzySet) -> Result<bool, FafError> {
    let e = dense_checked(faf, e)?;
    Ok(conflict_free_dense(faf, &e))
}

/// True iff `e ⊆ c`, `e` is conflict-free, and every supported member is
/// defended at its own degree.
pub fn is_admissible(faf: &Faf, c: &FuzzySet, e: &FuzzySet) -> Result<bool, FafError> {
    let cd = dense_checked(faf, c)?;
    let ed = dense_checked(faf, e)?;
    Ok(pointwise_le(&ed, &cd) && admissible_dense(faf, &ed))
}

/// True iff `e` is admissible in `c` and contains everything it defends
/// (capped by `c`); with admissibility this forces the characteristic
/// function to fix `e`.
pub fn is_complete(faf: &Faf, c: &FuzzySet, e: &FuzzySet) -> Result<bool, FafError> {
    let cd = dense_checked(faf, c)?;
    let ed = dense_checked(faf, e)?;
    Ok(pointwise_le(&ed, &cd) && complete_dense(faf, &cd, &ed))
}

/// True iff `e` is conflict-free and every argument held below its full
/// degree is attacked by `e` at least up to the complement of its degree.
pub fn is_stable(faf: &Faf, e: &FuzzySet) -> Result<bool, FafError> {
    let ed = dense_checked(faf, e)?;
    Ok(stable_dense(faf, &ed))
}

pub(crate) fn grounded_dense(faf: &Faf, c: &[Degree]) -> Vec<Degree> {
    let mut s = vec![Degree::zero(); faf.arg_count()];
    loop {
        let next = characteristic_dense(faf, c, &s);
        if next == s {
            return s;
        }
        s = next;
    }
}

/// The least fixed point of the characteristic function in `c`, computed
/// by iteration from the empty set. Exact; no lattice involved.
pub fn grounded(faf: &Faf, c: &FuzzySet) -> FuzzySet {
    let c = dense_clipped(faf, c);
    FuzzySet::from_dense(faf, &grounded_dense(faf, &c))
}

/// Keeps the candidates that are not strictly below any other candidate.
/// Strict fuzzy inclusion implies a strictly smaller degree sum, so after
/// the descending sort a candidate can only be dominated by one already
/// kept.
pub(crate) fn maximal_elements(mut candidates: Vec<Vec<Degree>>) -> Vec<Vec<Degree>> {
    let sum = |v: &[Degree]| -> Rational64 { v.iter().map(|d| d.as_ratio()).sum() };
    candidates.sort_by_key(|v| std::cmp::Reverse(sum(v)));
    let mut kept: Vec<Vec<Degree>> = Vec::new();
    for cand in candidates {
        if !kept.iter().any(|k| pointwise_le(&cand, k)) {
            kept.push(cand);
        }
    }
    kept
}

struct Odometer<'a> {
    allowed: Vec<&'a [Degree]>,
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Odometer<'a> {
    fn new(allowed: Vec<&'a [Degree]>) -> Self {
        let idx = vec![0; allowed.len()];
        Odometer { allowed, idx, done: false }
    }

    fn candidates(&self) -> u128 {
        self.allowed.iter().map(|a| a.len() as u128).product()
    }
}

impl Iterator for Odometer<'_> {
    type Item = Vec<Degree>;

    fn next(&mut self) -> Option<Vec<Degree>> {
        if self.done {
            return None;
        }
        let cand = self.idx.iter().zip(&self.allowed).map(|(&i, a)| a[i]).collect();
        let mut k = 0;
        loop {
            if k == self.idx.len() {
                self.done = true;
                break;
            }
            self.idx[k] += 1;
            if self.idx[k] < self.allowed[k].len() {
                break;
            }
            self.idx[k] = 0;
            k += 1;
        }
        Some(cand)
    }
}

/// Enumerates all lattice-valued extensions of the given kind.
///
/// Candidate degrees for each argument are the lattice values up to the
/// argument degree, further capped by `c` for the notions whose membership
/// is relative to `c`. Conflict-free and stable membership do not mention
/// a cap, so their candidates range over the full argument degrees.
///
/// Grounded needs no search and returns a singleton. The candidate count
/// is checked against `budget` before any work.
pub fn enumerate_extensions(
    faf: &Faf,
    c: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
    budget: u64,
) -> Result<ExtensionSet, SolveError> {
    let cd = dense_clipped(faf, c);
    if kind == SemanticsKind::Grounded {
        let g = grounded_dense(faf, &cd);
        return Ok(ExtensionSet::from_vec(vec![FuzzySet::from_dense(faf, &g)]));
    }

    let capped = matches!(
        kind,
        SemanticsKind::Admissible | SemanticsKind::Complete | SemanticsKind::Preferred
    );
    let allowed: Vec<&[Degree]> = (0..faf.arg_count())
        .map(|x| {
            let cap = if capped { faf.arg_degree(x).min(cd[x]) } else { faf.arg_degree(x) };
            lattice.values_up_to(cap)
        })
        .collect();

    let odo = Odometer::new(allowed);
    let candidates = odo.candidates();
    if candidates > budget as u128 {
        return Err(SolveError::BudgetExceeded { candidates, budget });
    }

    let mut found: Vec<Vec<Degree>> = Vec::new();
    for cand in odo {
        let keep = match kind {
            SemanticsKind::ConflictFree => conflict_free_dense(faf, &cand),
            SemanticsKind::Admissible | SemanticsKind::Preferred => admissible_dense(faf, &cand),
            SemanticsKind::Complete => complete_dense(faf, &cd, &cand),
            SemanticsKind::Stable => stable_dense(faf, &cand),
            SemanticsKind::Grounded => unreachable!(),
        };
        if keep {
            found.push(cand);
        }
    }
    if kind == SemanticsKind::Preferred {
        found = maximal_elements(found);
    }
    Ok(found.iter().map(|d| FuzzySet::from_dense(faf, d)).collect())
}

/// True iff `e` is admissible in `c` and no lattice-valued admissible set
/// within `c` strictly contains it. The search space above `e` is usually
/// a thin slice of the full lattice, so no budget applies.
pub fn is_preferred(
    faf: &Faf,
    c: &FuzzySet,
    e: &FuzzySet,
    lattice: &DegreeLattice,
) -> Result<bool, FafError> {
    let cd = dense_checked(faf, c)?;
    let ed = dense_checked(faf, e)?;
    if !pointwise_le(&ed, &cd) || !admissible_dense(faf, &ed) {
        return Ok(false);
    }
    let allowed: Vec<&[Degree]> = (0..faf.arg_count())
        .map(|x| {
            let vals = lattice.values_up_to(faf.arg_degree(x).min(cd[x]));
            &vals[vals.partition_point(|v| *v < ed[x])..]
        })
        .collect();
    for cand in Odometer::new(allowed) {
        if cand != ed && admissible_dense(faf, &cand) {
            return Ok(false);
        }
    }
    Ok(true)
}

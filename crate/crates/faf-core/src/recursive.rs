//! SCC-recursive solving. Ancestor components fix, for each component,
//! how far its arguments are forced down (the limited part), what degrees
//! remain (the residual part), and which degrees are shielded from every
//! outside sufficient attacker (the defended part). Solving then recurses
//! on the framework restricted to the residual with the cap tightened to
//! the defended part, bottoming out in the direct base functions on
//! single-component frameworks.

use crate::attacks::{dense_clipped, weakened_dense};
use crate::degree::{complement, sum_at_most_one, tnorm, Degree};
use crate::framework::{restrict, Faf, FafError};
use crate::fuzzyset::FuzzySet;
use crate::lattice::DegreeLattice;
use crate::parse::serialize_fapx;
use crate::scc::{compute_sccs, condensation, SccPartition};
use crate::semantics::{
    dense_checked, enumerate_extensions, grounded, is_admissible, is_complete, is_preferred,
    ExtensionSet, SemanticsKind, SolveError,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::HashMap;

/// Everything the recursion derives about one component under a fixed
/// choice on its ancestors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SccContext {
    /// The component at full argument degrees.
    pub scc: FuzzySet,
    /// Attack pressure already exerted by the chosen ancestors.
    pub limited: FuzzySet,
    /// Degrees surviving that pressure.
    pub residual: FuzzySet,
    /// Degrees additionally shielded from every outside sufficient attacker.
    pub defended: FuzzySet,
    /// The framework restricted to the residual.
    pub restricted_faf: Faf,
}

pub(crate) struct Parts {
    pub limited: Vec<Degree>,
    pub residual: Vec<Degree>,
    pub defended: Vec<Degree>,
}

/// Dense L/R/D over the whole framework; entries outside the component
/// are zero. `e` matters only on arguments outside the component, so the
/// result depends on `e` restricted to ancestor components alone.
pub(crate) fn parts_dense(faf: &Faf, in_comp: &[bool], e: &[Degree]) -> Parts {
    let bw = weakened_dense(faf, e);
    let n = faf.arg_count();
    let mut limited = vec![Degree::zero(); n];
    let mut residual = vec![Degree::zero(); n];
    let mut defended = vec![Degree::zero(); n];
    for x in 0..n {
        if !in_comp[x] {
            continue;
        }
        let mut l = Degree::zero();
        let mut shield = Degree::one();
        for &(b, rho) in faf.attackers(x) {
            if in_comp[b] {
                continue;
            }
            l = l.max(tnorm(e[b], rho));
            shield = shield.min(complement(tnorm(bw[b], rho)));
        }
        limited[x] = l;
        residual[x] = faf.arg_degree(x).min(complement(l));
        defended[x] = residual[x].min(shield);
    }
    Parts { limited, residual, defended }
}

fn mask_of(n: usize, members: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &i in members {
        mask[i] = true;
    }
    mask
}

/// Checks that `scc` is exactly one strongly connected component at full
/// degrees and returns its membership mask.
fn component_mask(faf: &Faf, scc: &FuzzySet) -> Result<Vec<bool>, FafError> {
    let mut members = Vec::new();
    for (id, d) in scc.iter() {
        let i = faf
            .index_of(id)
            .ok_or_else(|| FafError::NotAComponent(format!("unknown argument {id}")))?;
        if d != faf.arg_degree(i) {
            return Err(FafError::NotAComponent(format!(
                "{id} at {d} differs from its full degree {}",
                faf.arg_degree(i)
            )));
        }
        members.push(i);
    }
    let Some(&first) = members.first() else {
        return Err(FafError::NotAComponent("empty set".to_string()));
    };
    let p = compute_sccs(faf);
    if p.members(p.component_of(first)) != members {
        return Err(FafError::NotAComponent(format!("{scc} is not a component")));
    }
    Ok(mask_of(faf.arg_count(), &members))
}

/// The attack pressure `e` exerts on the component from outside: for each
/// member, the strongest attack any outside member of `e` lands on it.
pub fn limited_part(faf: &Faf, scc: &FuzzySet, e: &FuzzySet) -> Result<FuzzySet, FafError> {
    let mask = component_mask(faf, scc)?;
    let ed = dense_clipped(faf, e);
    Ok(FuzzySet::from_dense(faf, &parts_dense(faf, &mask, &ed).limited))
}

/// What remains of each member under that pressure:
/// `min(full degree, 1 - limited)`.
pub fn residual_part(faf: &Faf, scc: &FuzzySet, e: &FuzzySet) -> Result<FuzzySet, FafError> {
    let mask = component_mask(faf, scc)?;
    let ed = dense_clipped(faf, e);
    Ok(FuzzySet::from_dense(faf, &parts_dense(faf, &mask, &ed).residual))
}

/// The residual further capped so that every outside attacker, after its
/// best weakening by `e`, attacks only tolerably.
pub fn defended_part(faf: &Faf, scc: &FuzzySet, e: &FuzzySet) -> Result<FuzzySet, FafError> {
    let mask = component_mask(faf, scc)?;
    let ed = dense_clipped(faf, e);
    Ok(FuzzySet::from_dense(faf, &parts_dense(faf, &mask, &ed).defended))
}

/// Bundles L/R/D and the restricted framework for one component.
pub fn scc_context(faf: &Faf, scc: &FuzzySet, e: &FuzzySet) -> Result<SccContext, FafError> {
    let mask = component_mask(faf, scc)?;
    let ed = dense_clipped(faf, e);
    let parts = parts_dense(faf, &mask, &ed);
    let residual = FuzzySet::from_dense(faf, &parts.residual);
    let restricted_faf = restrict(faf, &residual).expect("residual is a fuzzy subset");
    Ok(SccContext {
        scc: scc.clone(),
        limited: FuzzySet::from_dense(faf, &parts.limited),
        defended: FuzzySet::from_dense(faf, &parts.defended),
        residual,
        restricted_faf,
    })
}

/// Drops every attack that is tolerable even at the (current) full
/// degrees of its endpoints. Such attacks can never become sufficient, so
/// every semantics is unchanged while cycles may fall apart, which is what
/// lets the recursion split components further.
pub fn prune_tolerable_attacks(faf: &Faf) -> Faf {
    let args: Vec<(String, Degree)> = faf.args().map(|(id, d)| (id.to_string(), d)).collect();
    let attacks: Vec<(String, String, Degree)> = faf
        .attacks()
        .iter()
        .filter(|a| !sum_at_most_one(tnorm(faf.arg_degree(a.from), a.degree), faf.arg_degree(a.to)))
        .map(|a| (faf.arg_id(a.from).to_string(), faf.arg_id(a.to).to_string(), a.degree))
        .collect();
    Faf::new(args, attacks).expect("pruning cannot invalidate a framework")
}

/// One record per recursive step, serialized as a JSON line by the CLI.
/// Component records carry L/R/D and the number of per-component choices;
/// base records carry the semantics applied and the extension count.
/// Records appear in completion order, and a subproblem served from the
/// memo is traced only the first time it is actually solved.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TraceRecord {
    pub depth: usize,
    pub component: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limited: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defended: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    pub extensions: usize,
}

fn supported(kind: SemanticsKind) -> Result<(), SolveError> {
    match kind {
        SemanticsKind::Admissible
        | SemanticsKind::Complete
        | SemanticsKind::Preferred
        | SemanticsKind::Grounded => Ok(()),
        other => Err(SolveError::Unsupported { kind: other, engine: "scc" }),
    }
}

/// Recursive membership test: on a single component, delegate to the
/// direct checker for the kind; otherwise require, for every component,
/// that `e` restricted to it is a member for the framework restricted to
/// the residual under the cap tightened to the defended part.
///
/// This is the literal recursion, with no pruning, so it exercises the
/// decomposition on exactly the structure the direct checkers see.
pub fn gf_check(
    faf: &Faf,
    c: &FuzzySet,
    e: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
) -> Result<bool, SolveError> {
    supported(kind)?;
    dense_checked(faf, c)?;
    dense_checked(faf, e)?;
    gf_check_rec(faf, c, e, kind, lattice)
}

fn gf_check_rec(
    faf: &Faf,
    c: &FuzzySet,
    e: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
) -> Result<bool, SolveError> {
    // e exceeding the (restricted) argument degrees falsifies membership
    let Ok(ed) = dense_checked(faf, e) else {
        return Ok(false);
    };
    let p = compute_sccs(faf);
    if p.count() <= 1 {
        return base_check(faf, c, e, kind, lattice);
    }
    for ord in 0..p.count() {
        let mask = mask_of(faf.arg_count(), p.members(ord));
        let parts = parts_dense(faf, &mask, &ed);
        let residual = FuzzySet::from_dense(faf, &parts.residual);
        let sub = restrict(faf, &residual)?;
        let c_prime = FuzzySet::from_dense(faf, &parts.defended).intersect_min(c);
        let e_comp: FuzzySet = p
            .members(ord)
            .iter()
            .map(|&i| (faf.arg_id(i).to_string(), ed[i]))
            .collect();
        if !gf_check_rec(&sub, &c_prime, &e_comp, kind, lattice)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn base_check(
    faf: &Faf,
    c: &FuzzySet,
    e: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
) -> Result<bool, SolveError> {
    let held = match kind {
        SemanticsKind::Admissible => is_admissible(faf, c, e)?,
        SemanticsKind::Complete => is_complete(faf, c, e)?,
        SemanticsKind::Preferred => is_preferred(faf, c, e, lattice)?,
        SemanticsKind::Grounded => *e == grounded(faf, c),
        _ => unreachable!("kind was validated"),
    };
    Ok(held)
}

struct Solver<'a> {
    kind: SemanticsKind,
    lattice: &'a DegreeLattice,
    budget: u64,
    prune: bool,
    memo: HashMap<(String, FuzzySet), ExtensionSet>,
    trace: Vec<TraceRecord>,
}

impl Solver<'_> {
    fn solve(&mut self, faf: &Faf, c: &FuzzySet, depth: usize) -> Result<ExtensionSet, SolveError> {
        // the serialized framework is a canonical key: ids, degrees, and
        // attacks determine the subproblem once kind and lattice are fixed
        let key = (serialize_fapx(faf), c.clone());
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let out = self.solve_uncached(faf, c, depth)?;
        self.memo.insert(key, out.clone());
        Ok(out)
    }

    fn solve_uncached(
        &mut self,
        faf: &Faf,
        c: &FuzzySet,
        depth: usize,
    ) -> Result<ExtensionSet, SolveError> {
        let p = compute_sccs(faf);
        if p.count() <= 1 {
            let exts = enumerate_extensions(faf, c, self.kind, self.lattice, self.budget)?;
            self.trace.push(TraceRecord {
                depth,
                component: faf.args().map(|(id, _)| id.to_string()).collect(),
                limited: None,
                residual: None,
                defended: None,
                base: Some(self.kind.name().to_string()),
                extensions: exts.len(),
            });
            return Ok(exts);
        }

        let cond = condensation(faf, &p);
        let mut partials = vec![FuzzySet::new()];
        for &ord in cond.topo_order() {
            let mask = mask_of(faf.arg_count(), p.members(ord));
            let mut next = Vec::with_capacity(partials.len());
            for partial in &partials {
                let ed = dense_clipped(faf, partial);
                let parts = parts_dense(faf, &mask, &ed);
                let residual = FuzzySet::from_dense(faf, &parts.residual);
                let defended = FuzzySet::from_dense(faf, &parts.defended);
                let sub = restrict(faf, &residual)?;
                let sub = if self.prune { prune_tolerable_attacks(&sub) } else { sub };
                let c_prime = defended.intersect_min(c);
                let choices = self.solve(&sub, &c_prime, depth + 1)?;
                self.trace.push(TraceRecord {
                    depth,
                    component: component_ids(faf, &p, ord),
                    limited: Some(FuzzySet::from_dense(faf, &parts.limited).to_string_map()),
                    residual: Some(residual.to_string_map()),
                    defended: Some(defended.to_string_map()),
                    base: None,
                    extensions: choices.len(),
                });
                for choice in choices.iter() {
                    next.push(partial.union_max(choice));
                }
            }
            partials = next;
        }
        Ok(ExtensionSet::from_vec(partials))
    }
}

fn component_ids(faf: &Faf, p: &SccPartition, ord: usize) -> Vec<String> {
    p.members(ord).iter().map(|&i| faf.arg_id(i).to_string()).collect()
}

/// Recursive enumeration. Components are processed in topological order;
/// each partial choice on the ancestors induces a restricted subproblem
/// whose solutions multiply into the partials. Restrictions are pruned
/// (when `prune` is set) so that resolved conflicts stop holding
/// components together, and identical subproblems are solved once.
pub fn gf_enumerate_traced(
    faf: &Faf,
    c: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
    budget: u64,
    prune: bool,
) -> Result<(ExtensionSet, Vec<TraceRecord>), SolveError> {
    supported(kind)?;
    if kind == SemanticsKind::Grounded {
        let (g, trace) = grounded_scc_traced(faf, c);
        return Ok((ExtensionSet::from_vec(vec![g]), trace));
    }
    let mut solver =
        Solver { kind, lattice, budget, prune, memo: HashMap::new(), trace: Vec::new() };
    let extensions = solver.solve(faf, c, 0)?;
    Ok((extensions, solver.trace))
}

/// [`gf_enumerate_traced`] with pruning on and the trace discarded.
pub fn gf_enumerate(
    faf: &Faf,
    c: &FuzzySet,
    kind: SemanticsKind,
    lattice: &DegreeLattice,
    budget: u64,
) -> Result<ExtensionSet, SolveError> {
    gf_enumerate_traced(faf, c, kind, lattice, budget, true).map(|(exts, _)| exts)
}

/// Deterministic per-component grounded computation: one topological
/// pass, taking for each component the grounded extension of its
/// restriction under the tightened cap. No lattice, no search.
pub fn grounded_scc_traced(faf: &Faf, c: &FuzzySet) -> (FuzzySet, Vec<TraceRecord>) {
    let p = compute_sccs(faf);
    let cond = condensation(faf, &p);
    let mut acc = FuzzySet::new();
    let mut trace = Vec::new();
    for &ord in cond.topo_order() {
        let mask = mask_of(faf.arg_count(), p.members(ord));
        let ed = dense_clipped(faf, &acc);
        let parts = parts_dense(faf, &mask, &ed);
        let residual = FuzzySet::from_dense(faf, &parts.residual);
        let defended = FuzzySet::from_dense(faf, &parts.defended);
        let sub = restrict(faf, &residual).expect("residual is a fuzzy subset");
        let c_prime = defended.intersect_min(c);
        let g = grounded(&sub, &c_prime);
        trace.push(TraceRecord {
            depth: 0,
            component: component_ids(faf, &p, ord),
            limited: Some(FuzzySet::from_dense(faf, &parts.limited).to_string_map()),
            residual: Some(residual.to_string_map()),
            defended: Some(defended.to_string_map()),
            base: Some(SemanticsKind::Grounded.name().to_string()),
            extensions: 1,
        });
        acc = acc.union_max(&g);
    }
    (acc, trace)
}

/// [`grounded_scc_traced`] without the trace.
pub fn grounded_scc(faf: &Faf, c: &FuzzySet) -> FuzzySet {
    grounded_scc_traced(faf, c).0
}

//! The framework type: a fuzzy set of arguments and a fuzzy attack relation.

use std::collections::BTreeMap;

use crate::degree::Degree;
use crate::fuzzyset::FuzzySet;

/// One attack, by argument index into the owning framework.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Attack {
    pub from: usize,
    pub to: usize,
    pub degree: Degree,
}

/// A fuzzy argumentation framework.
///
/// Arguments are kept sorted by id and attacks by `(from, to)`, so two
/// frameworks with the same content compare equal and serialize identically.
/// Argument and attack degrees are in `(0, 1]`; a pair without a stored
/// attack has attack degree zero. Self-attacks are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Faf {
    ids: Vec<String>,
    degrees: Vec<Degree>,
    attacks: Vec<Attack>,
    incoming: Vec<Vec<(usize, Degree)>>,
    outgoing: Vec<Vec<(usize, Degree)>>,
}

/// Validation failures when assembling a framework.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FafError {
    #[error("duplicate argument `{0}`")]
    DuplicateArgument(String),
    #[error("attack endpoint `{0}` is not a declared argument")]
    UndeclaredEndpoint(String),
    #[error("duplicate attack `{0}` -> `{1}`")]
    DuplicateAttack(String, String),
    #[error("argument `{0}` has degree {1}, expected (0, 1]")]
    ArgumentDegree(String, String),
    #[error("attack `{0}` -> `{1}` has degree {2}, expected (0, 1]")]
    AttackDegree(String, String, String),
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("{0} is not a fuzzy subset of the framework's arguments")]
    NotASubset(String),
    #[error("not a strongly connected component: {0}")]
    NotAComponent(String),
}

impl Faf {
    /// Builds a framework from argument and attack lists.
    pub fn new<I, J>(args: I, attacks: J) -> Result<Faf, FafError>
    where
        I: IntoIterator<Item = (String, Degree)>,
        J: IntoIterator<Item = (String, String, Degree)>,
    {
        let mut by_id: BTreeMap<String, Degree> = BTreeMap::new();
        for (id, d) in args {
            if d.is_zero() {
                return Err(FafError::ArgumentDegree(id, d.to_string()));
            }
            if by_id.insert(id.clone(), d).is_some() {
                return Err(FafError::DuplicateArgument(id));
            }
        }
        let ids: Vec<String> = by_id.keys().cloned().collect();
        let degrees: Vec<Degree> = by_id.values().copied().collect();
        let index: BTreeMap<&str, usize> =
            ids.iter().enumerate().map(|(i, id)| (id.as_str(), i)).collect();

        let mut resolved: Vec<Attack> = Vec::new();
        for (from, to, d) in attacks {
            let fi = *index.get(from.as_str()).ok_or(FafError::UndeclaredEndpoint(from.clone()))?;
            let ti = *index.get(to.as_str()).ok_or(FafError::UndeclaredEndpoint(to.clone()))?;
            if d.is_zero() {
                return Err(FafError::AttackDegree(from, to, d.to_string()));
            }
            resolved.push(Attack { from: fi, to: ti, degree: d });
        }
        resolved.sort_by_key(|a| (a.from, a.to));
        if let Some(w) = resolved.windows(2).find(|w| (w[0].from, w[0].to) == (w[1].from, w[1].to)) {
            return Err(FafError::DuplicateAttack(
                ids[w[0].from].clone(),
                ids[w[0].to].clone(),
            ));
        }

        let mut incoming = vec![Vec::new(); ids.len()];
        let mut outgoing = vec![Vec::new(); ids.len()];
        for a in &resolved {
            incoming[a.to].push((a.from, a.degree));
            outgoing[a.from].push((a.to, a.degree));
        }
        Ok(Faf { ids, degrees, attacks: resolved, incoming, outgoing })
    }

    pub fn arg_count(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn arg_id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn arg_degree(&self, i: usize) -> Degree {
        self.degrees[i]
    }

    /// All argument degrees, aligned with indices.
    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|probe| probe.as_str().cmp(id)).ok()
    }

    pub fn attacks(&self) -> &[Attack] {
        &self.attacks
    }

    /// Attackers of `i` as `(attacker, rho)` pairs.
    pub fn attackers(&self, i: usize) -> &[(usize, Degree)] {
        &self.incoming[i]
    }

    /// Attack targets of `i` as `(target, rho)` pairs.
    pub fn targets(&self, i: usize) -> &[(usize, Degree)] {
        &self.outgoing[i]
    }

    /// Attack degree `rho(from, to)`; zero when the pair is not an attack.
    pub fn attack_degree(&self, from: usize, to: usize) -> Degree {
        self.incoming[to]
            .iter()
            .find(|(b, _)| *b == from)
            .map(|(_, d)| *d)
            .unwrap_or(Degree::zero())
    }

    /// The arguments as a fuzzy set at their full degrees.
    pub fn arguments(&self) -> FuzzySet {
        FuzzySet::from_pairs(
            self.ids.iter().cloned().zip(self.degrees.iter().copied()),
        )
    }

    /// Iterate `(id, degree)` over all arguments in id order.
    pub fn args(&self) -> impl Iterator<Item = (&str, Degree)> {
        self.ids.iter().map(String::as_str).zip(self.degrees.iter().copied())
    }
}

/// The restriction of a framework to a fuzzy subset `s` of its arguments:
/// argument degrees become `s`'s degrees, attacks keep only pairs with both
/// endpoints in the support of `s`.
pub fn restrict(faf: &Faf, s: &FuzzySet) -> Result<Faf, FafError> {
    for (id, d) in s.iter() {
        match faf.index_of(id) {
            None => return Err(FafError::UnknownArgument(id.to_string())),
            Some(i) if d > faf.arg_degree(i) => {
                return Err(FafError::NotASubset(format!("{id}:{d}")))
            }
            _ => {}
        }
    }
    let args = s.iter().map(|(id, d)| (id.to_string(), d));
    let attacks = faf.attacks().iter().filter_map(|a| {
        let from = faf.arg_id(a.from);
        let to = faf.arg_id(a.to);
        if s.degree(from).is_zero() || s.degree(to).is_zero() {
            None
        } else {
            Some((from.to_string(), to.to_string(), a.degree))
        }
    });
    // both endpoint checks passed, so reassembly cannot fail
    Ok(Faf::new(args, attacks.collect::<Vec<_>>()).expect("restriction of a valid framework"))
}

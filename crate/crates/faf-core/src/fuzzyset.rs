//! Fuzzy sets of arguments: canonical maps from argument id to degree.

use std::collections::BTreeMap;
use std::fmt;

use crate::degree::Degree;
use crate::framework::Faf;

/// A fuzzy set of arguments. Entries with degree zero are never stored, so
/// map equality is extensional equality; absent arguments have degree zero.
///
/// The derived ordering (lexicographic over `(id, degree)` pairs) is the
/// deterministic order extension lists are reported in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FuzzySet {
    entries: BTreeMap<String, Degree>,
}

impl FuzzySet {
    pub fn new() -> FuzzySet {
        FuzzySet::default()
    }

    /// Builds a set from pairs, dropping zero entries. Later duplicates win.
    pub fn from_pairs<I, S>(pairs: I) -> FuzzySet
    where
        I: IntoIterator<Item = (S, Degree)>,
        S: Into<String>,
    {
        let mut set = FuzzySet::new();
        for (id, d) in pairs {
            set.set(id.into(), d);
        }
        set
    }

    /// Sets one membership degree; zero removes the entry.
    pub fn set(&mut self, id: String, d: Degree) {
        if d.is_zero() {
            self.entries.remove(&id);
        } else {
            self.entries.insert(id, d);
        }
    }

    /// Membership degree of `id`, zero when absent.
    pub fn degree(&self, id: &str) -> Degree {
        self.entries.get(id).copied().unwrap_or(Degree::zero())
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Degree)> {
        self.entries.iter().map(|(id, d)| (id.as_str(), *d))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Pointwise `<=` against `other`.
    pub fn is_subset_of(&self, other: &FuzzySet) -> bool {
        self.iter().all(|(id, d)| d <= other.degree(id))
    }

    /// Pointwise minimum (fuzzy intersection under Godel semantics).
    pub fn intersect_min(&self, other: &FuzzySet) -> FuzzySet {
        let mut out = FuzzySet::new();
        for (id, d) in self.iter() {
            out.set(id.to_string(), d.min(other.degree(id)));
        }
        out
    }

    /// Pointwise maximum (fuzzy union).
    pub fn union_max(&self, other: &FuzzySet) -> FuzzySet {
        let mut out = self.clone();
        for (id, d) in other.iter() {
            if d > out.degree(id) {
                out.set(id.to_string(), d);
            }
        }
        out
    }

    /// Dense degree vector aligned with `faf`'s argument order; `None` if the
    /// set mentions an argument the framework does not have.
    pub fn to_dense(&self, faf: &Faf) -> Option<Vec<Degree>> {
        let mut dense = vec![Degree::zero(); faf.arg_count()];
        for (id, d) in self.iter() {
            let i = faf.index_of(id)?;
            dense[i] = d;
        }
        Some(dense)
    }

    pub fn from_dense(faf: &Faf, dense: &[Degree]) -> FuzzySet {
        debug_assert_eq!(dense.len(), faf.arg_count());
        let mut set = FuzzySet::new();
        for (i, d) in dense.iter().enumerate() {
            if !d.is_zero() {
                set.set(faf.arg_id(i).to_string(), *d);
            }
        }
        set
    }

    /// Degrees rendered as display strings, for structured output.
    pub fn to_string_map(&self) -> BTreeMap<String, String> {
        self.iter().map(|(id, d)| (id.to_string(), d.to_string())).collect()
    }
}

/// Pointwise `S1(x) <= S2(x)` for every argument.
pub fn fuzzy_subset(s1: &FuzzySet, s2: &FuzzySet) -> bool {
    s1.is_subset_of(s2)
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (id, d)) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}:{d}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<S: Into<String>> FromIterator<(S, Degree)> for FuzzySet {
    fn from_iter<I: IntoIterator<Item = (S, Degree)>>(iter: I) -> FuzzySet {
        FuzzySet::from_pairs(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(s: &str) -> Degree {
        s.parse().unwrap()
    }

    fn set(pairs: &[(&str, &str)]) -> FuzzySet {
        pairs.iter().map(|(id, d)| (id.to_string(), deg(d))).collect()
    }

    #[test]
    fn zero_entries_are_dropped() {
        let mut s = set(&[("A", "0.4")]);
        s.set("A".to_string(), Degree::zero());
        assert!(s.is_empty());
        assert_eq!(set(&[("A", "0.4")]), FuzzySet::from_pairs([("A", deg("0.4")), ("B", Degree::zero())]));
    }

    #[test]
    fn subset_examples() {
        assert!(fuzzy_subset(&FuzzySet::new(), &set(&[("A", "0.1")])));
        assert!(fuzzy_subset(&set(&[("A", "0.2")]), &set(&[("A", "0.8"), ("B", "0.1")])));
        assert!(!fuzzy_subset(&set(&[("A", "0.9")]), &set(&[("A", "0.8")])));
    }

    #[test]
    fn ordering_is_lexicographic_then_by_degree() {
        let a = set(&[("A", "0.2"), ("B", "0.8")]);
        let b = set(&[("A", "0.2"), ("C", "0.1")]);
        let c = set(&[("A", "0.3")]);
        assert!(a < b);
        assert!(a < c);
        assert!(set(&[("A", "0.2")]) < a);
    }

    #[test]
    fn pointwise_operations() {
        let a = set(&[("A", "0.6"), ("B", "0.2")]);
        let b = set(&[("A", "0.4"), ("C", "0.9")]);
        assert_eq!(a.intersect_min(&b), set(&[("A", "0.4")]));
        assert_eq!(a.union_max(&b), set(&[("A", "0.6"), ("B", "0.2"), ("C", "0.9")]));
    }
}

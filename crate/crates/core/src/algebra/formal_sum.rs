use std::collections::btree_map::{BTreeMap, Entry};

/// Integer formal sum over canonical keys, e.g. an element of a group ring.
///
/// Zero coefficients are never stored, so two sums are equal exactly when
/// their maps are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K, coeff: i64) -> Self {
        let mut s = Self::new();
        s.add_term(key, coeff);
        s
    }

    pub fn add_term(&mut self, key: K, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self + sign * other`.
    pub fn combine(&self, other: &Self, sign: i64) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), sign * c);
        }
        out
    }

    pub fn coefficient(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, c)| (k, *c))
    }

    /// Push every key through `f`, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> FormalSum<L> {
        let mut out = FormalSum::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), *c);
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let x: FormalSum<&str> = [("a", 2), ("b", -1)].into_iter().collect();
        assert!(x.combine(&x, -1).is_empty());
    }

    #[test]
    fn key_merge() {
        let x = FormalSum::singleton("K", 2);
        let y = FormalSum::singleton("K", 3);
        assert_eq!(x.combine(&y, 1), FormalSum::singleton("K", 5));
    }

    #[test]
    fn insertion_order_is_irrelevant() {
        let a: FormalSum<&str> = [("p", 1), ("q", 2), ("r", -1), ("q", 1)].into_iter().collect();
        let b: FormalSum<&str> = [("q", 3), ("r", -1), ("p", 1)].into_iter().collect();
        assert_eq!(a, b);
        assert_eq!(a.coefficient(&"q"), 3);
        assert_eq!(a.coefficient(&"z"), 0);
    }

    #[test]
    fn map_keys_merges() {
        let a: FormalSum<i32> = [(1, 1), (-1, 1), (2, -1)].into_iter().collect();
        let b = a.map_keys(|k| k.abs());
        assert_eq!(b.coefficient(&1), 2);
        assert_eq!(b.coefficient(&2), -1);
    }
}

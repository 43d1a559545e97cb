//! Ground sets and bitset subsets over them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

/// Characters that never appear in user-supplied labels. Merged elements are
/// named `(u+v)`, so keeping these out of input labels keeps every label in a
/// contraction trace unambiguous.
const RESERVED: [char; 3] = ['(', ')', '+'];

/// An ordered, finite ground set with distinct labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    /// Builds a ground set from user-facing labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for label in &labels {
            if label.is_empty()
                || label
                    .chars()
                    .any(|c| c.is_whitespace() || RESERVED.contains(&c))
            {
                return Err(Error::InvalidLabel(label.clone()));
            }
        }
        Self::from_labels_unchecked(labels)
    }

    /// Labels `e0, e1, …, e{n-1}`.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| format!("e{i}")))
    }

    /// Accepts any distinct, non-empty labels, including merged ones.
    pub(crate) fn from_labels_unchecked(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Subset containing the elements with the given labels.
    pub fn subset_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut x = Subset::empty(self.len());
        for label in labels {
            x.insert(self.index_of(label.as_ref())?);
        }
        Ok(x)
    }

    /// Labels of the members of `x`, in index order.
    pub fn labels_of(&self, x: &Subset) -> Vec<&str> {
        x.iter().map(|i| self.label(i)).collect()
    }

    pub fn format_subset(&self, x: &Subset) -> String {
        format!("{{{}}}", self.labels_of(x).join(", "))
    }
}

/// A subset of `{0, …, n-1}` stored as a bitset.
///
/// Subsets compare as unsigned integers formed by their bits (element `i`
/// contributes `2^i`), so the `Ord` order is the bitmask enumeration order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: usize,
    words: Vec<u64>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(WORD_BITS)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut x = Self::empty(n);
        for w in &mut x.words {
            *w = u64::MAX;
        }
        x.trim();
        x
    }

    pub fn singleton(n: usize, element: usize) -> Self {
        let mut x = Self::empty(n);
        x.insert(element);
        x
    }

    /// Subset whose bit `j` is bit `j` of `mask`. Requires `n <= 64`; bits at
    /// positions `>= n` are discarded.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD_BITS, "from_mask requires n <= 64, got {n}");
        let mut x = Self::empty(n);
        if n > 0 {
            x.words[0] = mask;
            x.trim();
        }
        x
    }

    /// The bitmask of this subset when `n <= 64`.
    pub fn mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Self {
        let mut x = Self::empty(n);
        for i in indices {
            x.insert(i);
        }
        x
    }

    /// Size of the ground set this subset lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n, "element {i} out of range for n = {}", self.n);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.n {
            self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
        }
    }

    /// Copy of `self` with `i` added.
    pub fn with(&self, i: usize) -> Self {
        let mut x = self.clone();
        x.insert(i);
        x
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> Self {
        let mut x = Self {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        x.trim();
        x
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD_BITS + bit)
            })
        })
    }

    /// Number of elements of `pair` that lie in `self`.
    pub fn count_of(&self, pair: (usize, usize)) -> usize {
        usize::from(self.contains(pair.0)) + usize::from(self.contains(pair.1))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "subsets over different ground sets");
        Self {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let rem = self.n % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates over every subset of an `n`-element ground set in bitmask order,
/// `n <= 63`.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> {
    assert!(n < WORD_BITS, "exhaustive enumeration requires n < 64");
    (0..1u64 << n).map(move |mask| Subset::from_mask(n, mask))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ground_set_rejects_bad_labels() {
        assert_eq!(
            GroundSet::new(Vec::<String>::new()),
            Err(Error::EmptyGroundSet)
        );
        assert_eq!(
            GroundSet::new(["a", "b", "a"]),
            Err(Error::DuplicateLabel("a".into()))
        );
        assert_eq!(
            GroundSet::new(["a+b"]),
            Err(Error::InvalidLabel("a+b".into()))
        );
        assert_eq!(
            GroundSet::new(["x y"]),
            Err(Error::InvalidLabel("x y".into()))
        );
        assert_eq!(GroundSet::new([""]), Err(Error::InvalidLabel("".into())));
    }

    #[test]
    fn indexed_labels() {
        let g = GroundSet::indexed(3).unwrap();
        assert_eq!(g.labels(), ["e0", "e1", "e2"]);
        assert_eq!(g.index_of("e2"), Ok(2));
        assert_eq!(g.index_of("e3"), Err(Error::UnknownLabel("e3".into())));
        let x = g.subset_of(&["e0", "e2"]).unwrap();
        assert_eq!(x.mask(), Some(0b101));
        assert_eq!(g.format_subset(&x), "{e0, e2}");
    }

    #[test]
    fn wide_subsets_span_words() {
        let mut x = Subset::empty(130);
        x.insert(0);
        x.insert(64);
        x.insert(129);
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(x.complement().len(), 127);
        assert!(!x.complement().contains(129));
        assert_eq!(x.mask(), None);
        assert_eq!(Subset::full(130).len(), 130);
    }

    #[test]
    fn order_is_bitmask_order() {
        let a = Subset::from_indices(70, [2]);
        let b = Subset::from_indices(70, [0, 1]);
        assert!(b < a);
        let mut c = Subset::empty(70);
        c.insert(65);
        assert!(a < c);
    }

    #[test]
    fn all_subsets_enumerates_in_mask_order() {
        let masks: Vec<u64> = all_subsets(3).map(|x| x.mask().unwrap()).collect();
        assert_eq!(masks, (0..8).collect::<Vec<_>>());
    }

    proptest! {
        #[test]
        fn complement_is_involutive(n in 1usize..150, seed in any::<u64>()) {
            let x = Subset::from_indices(n, (0..n).filter(|i| (seed.rotate_left(*i as u32 % 64) ^ *i as u64) & 1 == 1));
            prop_assert_eq!(x.complement().complement(), x.clone());
            prop_assert_eq!(x.len() + x.complement().len(), n);
            prop_assert!(x.intersection(&x.complement()).is_empty());
            prop_assert_eq!(x.union(&x.complement()), Subset::full(n));
        }
    }
}

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the simple generators, stored as a bitmask (bit `i` is the
/// 0-based generator `i`). Displayed and serialized with 1-based indices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetJ(pub u32);

impl SubsetJ {
    pub const EMPTY: SubsetJ = SubsetJ(0);

    pub fn full(rank: usize) -> Self {
        SubsetJ(if rank >= 32 { u32::MAX } else { (1u32 << rank) - 1 })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SubsetJ(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    /// From 1-based generator numbers.
    pub fn from_labels<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self::from_indices(it.into_iter().map(|i| i - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
    pub fn with(self, i: usize) -> Self {
        SubsetJ(self.0 | 1 << i)
    }
    pub fn without(self, i: usize) -> Self {
        SubsetJ(self.0 & !(1 << i))
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn is_subset(self, other: SubsetJ) -> bool {
        self.0 & !other.0 == 0
    }
    pub fn union(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 | other.0)
    }
    pub fn intersection(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 & other.0)
    }
    pub fn difference(self, other: SubsetJ) -> Self {
        SubsetJ(self.0 & !other.0)
    }
    pub fn complement(self, rank: usize) -> Self {
        SubsetJ(!self.0 & Self::full(rank).0)
    }

    /// 0-based members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// All subsets of `self`, in increasing size and then increasing mask.
    pub fn subsets_by_size(self) -> Vec<SubsetJ> {
        let mut subs = Vec::with_capacity(1 << self.len());
        let mut sub = self.0;
        loop {
            subs.push(SubsetJ(sub));
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.0;
        }
        subs.sort_by_key(|s| (s.len(), s.0));
        subs
    }

    /// 1-based labels.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for SubsetJ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for SubsetJ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubsetJ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<usize>::deserialize(d)?;
        if labels.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("generator labels are 1-based and at most 32"));
        }
        Ok(SubsetJ::from_labels(labels))
    }
}

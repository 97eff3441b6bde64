use std::cmp::Ordering;
use std::fmt;

use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A subset of the ambient vertex set `{1..n}`, stored as a bitmask with bit
/// `i-1` standing for vertex `i`.
///
/// The same value plays three roles: a square-free monomial (the set is its
/// support), a face of a simplicial complex, and a vertex cover. The subset
/// itself does not know `n`; the ideal or complex holding it does.
///
/// Ordering is by cardinality first, then by numeric bitmask value. Sorting
/// with this order is the canonical order used everywhere for deterministic
/// output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSubset(u32);

/// Widest vertex index a `VertexSubset` can hold.
pub(crate) const MAX_VERTEX: u32 = 32;

impl VertexSubset {
    pub const EMPTY: VertexSubset = VertexSubset(0);

    /// The full set `{1..n}`.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_VERTEX);
        if n == 0 {
            VertexSubset(0)
        } else {
            VertexSubset(u32::MAX >> (MAX_VERTEX - n))
        }
    }

    pub fn singleton(v: u32) -> Self {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex index out of range");
        VertexSubset(1 << (v - 1))
    }

    /// Build from 1-based vertex indices. Indices must lie in `1..=32`;
    /// ambient-range checks belong to the surrounding ideal or complex.
    pub fn from_indices<I: IntoIterator<Item = u32>>(indices: I) -> Self {
        let mut bits = 0u32;
        for v in indices {
            assert!((1..=MAX_VERTEX).contains(&v), "vertex index out of range");
            bits |= 1 << (v - 1);
        }
        VertexSubset(bits)
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        VertexSubset(bits)
    }

    pub(crate) fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn cardinality(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTEX).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn with(self, v: u32) -> Self {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex index out of range");
        VertexSubset(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: u32) -> Self {
        assert!((1..=MAX_VERTEX).contains(&v), "vertex index out of range");
        VertexSubset(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSubset(self.0 | other.0)
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement within the ambient set `{1..n}`.
    pub fn complement_in(self, n: u32) -> Self {
        VertexSubset(Self::full(n).0 & !self.0)
    }

    /// 1-based vertex indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Largest vertex index present, or 0 for the empty set.
    pub fn max_index(self) -> u32 {
        if self.0 == 0 {
            0
        } else {
            MAX_VERTEX - self.0.leading_zeros()
        }
    }

    /// Render as a monomial, e.g. `x1*x3`.
    pub fn monomial_string(self) -> String {
        let parts: Vec<String> = self.indices().map(|v| format!("x{v}")).collect();
        parts.join("*")
    }
}

impl Ord for VertexSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cardinality()
            .cmp(&other.cardinality())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for VertexSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.indices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.cardinality() as usize))?;
        for v in self.indices() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexSubset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IndexSeq;

        impl<'de> Visitor<'de> for IndexSeq {
            type Value = VertexSubset;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of vertex indices in 1..=32")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut bits = 0u32;
                while let Some(v) = seq.next_element::<u64>()? {
                    if !(1..=MAX_VERTEX as u64).contains(&v) {
                        return Err(serde::de::Error::custom(format!(
                            "vertex index {v} outside 1..=32"
                        )));
                    }
                    let bit = 1u32 << (v - 1);
                    if bits & bit != 0 {
                        return Err(serde::de::Error::custom(format!(
                            "repeated vertex index {v}"
                        )));
                    }
                    bits |= bit;
                }
                Ok(VertexSubset(bits))
            }
        }

        deserializer.deserialize_seq(IndexSeq)
    }
}

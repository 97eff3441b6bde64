//! Simplicial complexes given by their facets, f-vectors, and the two
//! ideal/complex correspondences: facet complex and non-face
//! (Stanley-Reisner) complex, with their inverse ideals.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::covers::minimal_transversals;
use crate::error::Error;
use crate::ideal::{Ideal, DEFAULT_AMBIENT_LIMIT, MAX_AMBIENT};
use crate::subset::VertexSubset;

/// A simplicial complex on the ambient vertex set `{1..n}`, stored by its
/// facets (the inclusion-maximal faces), canonically sorted.
///
/// The degenerate complex whose only face is the empty set is represented by
/// the facet list `[{}]`; the facet list itself is never empty. Ambient
/// vertices may be absent from every facet: such vertices are not faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    facets: Vec<VertexSubset>,
}

/// The face-count vector `(f_0, ..., f_d)` of a complex of dimension `d`;
/// empty for the degenerate complex of dimension -1.
///
/// Comparison is strict sequence equality: `(4,3)` and `(4,3,1)` differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn empty() -> Self {
        FVector(Vec::new())
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// `f_i`, reading entries beyond the dimension as 0.
    pub fn count(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    /// Total number of nonempty faces.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl From<Vec<u64>> for FVector {
    fn from(counts: Vec<u64>) -> Self {
        FVector(counts)
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Keep the inclusion-maximal subsets, deduplicated and canonically sorted.
fn maximalize(subsets: &[VertexSubset]) -> Vec<VertexSubset> {
    let mut sorted = subsets.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.dedup();
    // descending by cardinality, so any proper superset of `s` is already placed
    let mut kept: Vec<VertexSubset> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !kept.iter().any(|k| s.is_subset_of(*k)) {
            kept.push(s);
        }
    }
    kept.reverse();
    kept
}

impl SimplicialComplex {
    /// Build from a facet candidate list under the default ambient limit.
    /// Non-maximal entries are dropped, duplicates removed, order made
    /// canonical.
    pub fn new(n: u32, facets: Vec<VertexSubset>) -> Result<Self, Error> {
        Self::with_limit(n, facets, DEFAULT_AMBIENT_LIMIT)
    }

    /// Build with an explicit ambient limit (capped at [`MAX_AMBIENT`]).
    pub fn with_limit(n: u32, facets: Vec<VertexSubset>, limit: u32) -> Result<Self, Error> {
        let limit = limit.min(MAX_AMBIENT);
        if n == 0 || n > limit {
            return Err(Error::AmbientTooLarge { n, limit });
        }
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        for s in &facets {
            if s.max_index() > n {
                return Err(Error::IndexOutOfRange {
                    index: s.max_index() as u64,
                    n,
                    at: None,
                });
            }
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(&facets),
        })
    }

    /// Construct from facets known to be a canonically sorted antichain.
    pub(crate) fn from_canonical(n: u32, facets: Vec<VertexSubset>) -> Self {
        debug_assert!(!facets.is_empty());
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(facets
            .iter()
            .all(|g| !facets.iter().any(|h| h != g && h.is_subset_of(*g))));
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn facets(&self) -> &[VertexSubset] {
        &self.facets
    }

    /// True for the complex whose only face is the empty set.
    pub fn is_degenerate(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Max facet cardinality minus one; -1 for the degenerate complex.
    pub fn dimension(&self) -> i32 {
        // canonical order puts the largest facet last
        self.facets.last().expect("facet list is never empty").cardinality() as i32 - 1
    }

    /// Exact face counts by dimension. The empty face (dimension -1) is not
    /// counted, and ambient vertices outside every facet contribute nothing.
    pub fn f_vector(&self) -> FVector {
        let dim = self.dimension();
        if dim < 0 {
            return FVector::empty();
        }
        let mut counts = vec![0u64; (dim + 1) as usize];
        let support = self
            .facets
            .iter()
            .fold(VertexSubset::EMPTY, |acc, f| acc.union(*f))
            .bits();
        // sweep the submasks of the facet union; a subset is a face iff it
        // lies inside some facet
        let mut s = support;
        loop {
            if s != 0 && self.facets.iter().any(|f| s & !f.bits() == 0) {
                counts[(s.count_ones() - 1) as usize] += 1;
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & support;
        }
        FVector(counts)
    }

    /// The ideal generated by the facet monomials. Inverse of
    /// [`Ideal::facet_complex`].
    pub fn facet_ideal(&self) -> Result<Ideal, Error> {
        if self.is_degenerate() {
            return Err(Error::DegenerateComplex);
        }
        Ok(Ideal::from_canonical(self.n, self.facets.clone()))
    }

    /// The Stanley-Reisner ideal: generated by the minimal non-faces.
    /// Inverse of [`Ideal::nonface_complex`].
    ///
    /// A subset is a non-face exactly when it meets the complement of every
    /// facet, so the minimal non-faces are the minimal transversals of the
    /// facet complements. Errors with `EmptyIdeal` on the full simplex,
    /// which has no non-face.
    pub fn nonface_ideal(&self) -> Result<Ideal, Error> {
        let complements: Vec<VertexSubset> = self
            .facets
            .iter()
            .map(|f| f.complement_in(self.n))
            .collect();
        let gens = minimal_transversals(&complements);
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Ok(Ideal::from_canonical(self.n, gens))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, ">")
    }
}

impl Serialize for SimplicialComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SimplicialComplex", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("facets", &self.facets)?;
        s.end()
    }
}

impl Ideal {
    /// The complex whose facets are exactly the generator supports.
    pub fn facet_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_canonical(self.n(), self.generators().to_vec())
    }

    /// The complex on `{1..n}` whose faces are exactly the square-free
    /// monomials outside the ideal. Its facets are the complements of the
    /// minimal vertex covers of the generator hypergraph.
    pub fn nonface_complex(&self) -> SimplicialComplex {
        let covers = minimal_transversals(self.generators());
        SimplicialComplex::from_cover_complements(self.n(), &covers)
    }
}

impl SimplicialComplex {
    /// Facets as complements of an antichain of covers; complements of an
    /// antichain form an antichain, so only the order needs fixing.
    pub(crate) fn from_cover_complements(n: u32, covers: &[VertexSubset]) -> SimplicialComplex {
        debug_assert!(!covers.is_empty());
        let mut facets: Vec<VertexSubset> =
            covers.iter().map(|c| c.complement_in(n)).collect();
        facets.sort_unstable();
        SimplicialComplex::from_canonical(n, facets)
    }
}

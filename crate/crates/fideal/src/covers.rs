//! Minimal vertex covers of the generator hypergraph. The covers are the
//! minimal primes of the ideal, so height and unmixedness live here.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::ideal::Ideal;
use crate::subset::VertexSubset;

/// The minimal vertex covers of an ideal's generator hypergraph, together
/// with the two invariants they carry: the height (minimum cover size) and
/// whether all covers share one size (unmixed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeDecomposition {
    covers: Vec<VertexSubset>,
    height: u32,
    unmixed: bool,
}

impl PrimeDecomposition {
    /// Canonically sorted minimal covers. Never empty for a valid ideal.
    pub fn covers(&self) -> &[VertexSubset] {
        &self.covers
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn unmixed(&self) -> bool {
        self.unmixed
    }
}

impl Serialize for PrimeDecomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PrimeDecomposition", 3)?;
        s.serialize_field("covers", &self.covers)?;
        s.serialize_field("height", &self.height)?;
        s.serialize_field("unmixed", &self.unmixed)?;
        s.end()
    }
}

/// All inclusion-minimal transversals of `edges`, canonically sorted.
///
/// Branches on the first uncovered edge. A chosen vertex needs an edge it
/// covers alone (a private edge); extending the chosen set never creates new
/// private edges for old vertices, so branches where one is lost get pruned,
/// and every surviving leaf is a minimal transversal.
///
/// Returns an empty list when some edge is empty (nothing can cover it), and
/// `[{}]` when there are no edges at all.
pub(crate) fn minimal_transversals(edges: &[VertexSubset]) -> Vec<VertexSubset> {
    if edges.iter().any(|e| e.is_empty()) {
        return Vec::new();
    }
    let mut found: BTreeSet<VertexSubset> = BTreeSet::new();
    branch(edges, VertexSubset::EMPTY, &mut found);
    found.into_iter().collect()
}

fn branch(edges: &[VertexSubset], chosen: VertexSubset, found: &mut BTreeSet<VertexSubset>) {
    match edges.iter().find(|e| !e.intersects(chosen)) {
        None => {
            found.insert(chosen);
        }
        Some(edge) => {
            for v in edge.indices() {
                let next = chosen.with(v);
                if is_irredundant(edges, next) {
                    branch(edges, next, found);
                }
            }
        }
    }
}

/// Every chosen vertex covers some edge alone.
fn is_irredundant(edges: &[VertexSubset], chosen: VertexSubset) -> bool {
    chosen.indices().all(|v| {
        let others = chosen.without(v);
        edges.iter().any(|e| e.contains(v) && !e.intersects(others))
    })
}

impl Ideal {
    /// Enumerate all minimal vertex covers and derive height and
    /// unmixedness.
    pub fn minimal_vertex_covers(&self) -> PrimeDecomposition {
        let covers = minimal_transversals(self.generators());
        // canonical order puts a minimum-cardinality cover first and a
        // maximum-cardinality one last
        let height = covers.first().expect("a valid ideal has a cover").cardinality();
        let unmixed = covers.last().expect("nonempty").cardinality() == height;
        PrimeDecomposition {
            covers,
            height,
            unmixed,
        }
    }

    /// Minimum cardinality of a vertex cover of the generators.
    pub fn height(&self) -> u32 {
        self.minimal_vertex_covers().height
    }
}

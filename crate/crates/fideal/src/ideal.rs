use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::subset::VertexSubset;

/// Default cap on the ambient vertex count. Full 2^n face sweeps stay
/// tractable below it; raise it explicitly when you know what you are doing.
pub const DEFAULT_AMBIENT_LIMIT: u32 = 24;

/// Hard cap on the ambient vertex count, regardless of the configured limit.
pub const MAX_AMBIENT: u32 = 30;

/// A square-free monomial ideal, kept as its ambient vertex count `n` and a
/// minimal generating set of nonempty supports.
///
/// `n` is stored explicitly because the non-face complex depends on it beyond
/// the union of the generators: `(x2x3, x2x4, x3x4)` means different things
/// in 3 and in 4 variables. Generators are always an inclusion antichain,
/// sorted ascending by (cardinality, bitmask value), so equality of ideals is
/// plain structural equality and serialization is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    n: u32,
    generators: Vec<VertexSubset>,
}

/// Basic numeric invariants of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealStats {
    /// Number of minimal generators.
    pub m: usize,
    /// Largest generator cardinality.
    pub degree: u32,
    /// Union of the generator supports.
    pub support: VertexSubset,
    /// `Some(d)` exactly when every generator has cardinality `d` and the
    /// support is the whole ambient set.
    pub pure_of_degree: Option<u32>,
}

/// Keep the inclusion-minimal subsets, deduplicated and canonically sorted.
///
/// The result generates the same monomial ideal as the input. Idempotent.
pub fn minimalize(subsets: &[VertexSubset]) -> Result<Vec<VertexSubset>, Error> {
    if subsets.iter().any(|s| s.is_empty()) {
        return Err(Error::EmptyGenerator);
    }
    let mut sorted = subsets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    // ascending by cardinality, so any proper subset of `s` is already placed
    let mut kept: Vec<VertexSubset> = Vec::with_capacity(sorted.len());
    for s in sorted {
        if !kept.iter().any(|k| k.is_subset_of(s)) {
            kept.push(s);
        }
    }
    Ok(kept)
}

impl Ideal {
    /// Build an ideal under the default ambient limit. The generator list is
    /// minimalized and canonically sorted.
    pub fn new(n: u32, generators: Vec<VertexSubset>) -> Result<Self, Error> {
        Self::with_limit(n, generators, DEFAULT_AMBIENT_LIMIT)
    }

    /// Build an ideal with an explicit ambient limit (capped at
    /// [`MAX_AMBIENT`]).
    pub fn with_limit(n: u32, generators: Vec<VertexSubset>, limit: u32) -> Result<Self, Error> {
        let limit = limit.min(MAX_AMBIENT);
        if n == 0 || n > limit {
            return Err(Error::AmbientTooLarge { n, limit });
        }
        if generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &generators {
            if g.max_index() > n {
                return Err(Error::IndexOutOfRange {
                    index: g.max_index() as u64,
                    n,
                    at: None,
                });
            }
        }
        let generators = minimalize(&generators)?;
        Ok(Ideal { n, generators })
    }

    /// Construct from generators already known to be a canonically sorted
    /// antichain of nonempty in-range subsets.
    pub(crate) fn from_canonical(n: u32, generators: Vec<VertexSubset>) -> Self {
        debug_assert!(!generators.is_empty());
        debug_assert!(generators.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(generators
            .iter()
            .all(|g| !g.is_empty() && g.max_index() <= n));
        debug_assert!(generators
            .iter()
            .all(|g| !generators.iter().any(|h| h != g && h.is_subset_of(*g))));
        Ideal { n, generators }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generators(&self) -> &[VertexSubset] {
        &self.generators
    }

    pub fn stats(&self) -> IdealStats {
        let m = self.generators.len();
        let degree = self
            .generators
            .iter()
            .map(|g| g.cardinality())
            .max()
            .expect("ideal has at least one generator");
        let support = self
            .generators
            .iter()
            .fold(VertexSubset::EMPTY, |acc, g| acc.union(*g));
        let equigenerated = self.generators.iter().all(|g| g.cardinality() == degree);
        let pure_of_degree = (equigenerated && support == VertexSubset::full(self.n))
            .then_some(degree);
        IdealStats {
            m,
            degree,
            support,
            pure_of_degree,
        }
    }

    /// Membership of the square-free monomial with support `s`: true iff some
    /// generator divides it, i.e. is a subset of `s`.
    pub fn contains_monomial(&self, s: VertexSubset) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(s))
    }

    /// Canonical text form, e.g. `n=3; x1*x2, x2*x3`. Parses back to the
    /// same ideal.
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.monomial_string())
            .collect();
        format!("n={}; {}", self.n, gens.join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for Ideal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Ideal", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("generators", &self.generators)?;
        s.end()
    }
}

/// Unvalidated JSON shape of an ideal; promoted to [`Ideal`] after range and
/// emptiness checks.
#[derive(Deserialize)]
pub(crate) struct RawIdeal {
    pub n: u32,
    pub generators: Vec<Vec<u64>>,
}

impl RawIdeal {
    pub(crate) fn validate(self, limit: u32) -> Result<Ideal, Error> {
        let limit = limit.min(MAX_AMBIENT);
        if self.n == 0 || self.n > limit {
            return Err(Error::AmbientTooLarge { n: self.n, limit });
        }
        if self.generators.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for raw in &self.generators {
            if raw.is_empty() {
                return Err(Error::EmptyGenerator);
            }
            let mut g = VertexSubset::EMPTY;
            for &v in raw {
                if v == 0 || v > self.n as u64 {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        n: self.n,
                        at: None,
                    });
                }
                if g.contains(v as u32) {
                    return Err(Error::parse_at(
                        0,
                        0,
                        format!("repeated variable x{v} in a generator"),
                    ));
                }
                g = g.with(v as u32);
            }
            gens.push(g);
        }
        Ideal::with_limit(self.n, gens, limit)
    }
}

impl<'de> Deserialize<'de> for Ideal {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawIdeal::deserialize(deserializer)?;
        raw.validate(DEFAULT_AMBIENT_LIMIT)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(vs: &[u32]) -> VertexSubset {
        VertexSubset::from_indices(vs.iter().copied())
    }

    #[test]
    fn minimalize_removes_supersets() {
        let out = minimalize(&[sub(&[1, 2]), sub(&[1, 2, 3]), sub(&[2, 3])]).unwrap();
        assert_eq!(out, vec![sub(&[1, 2]), sub(&[2, 3])]);
    }

    #[test]
    fn minimalize_is_identity_on_antichains() {
        let input = vec![sub(&[1, 2]), sub(&[2, 3])];
        assert_eq!(minimalize(&input).unwrap(), input);
    }

    #[test]
    fn minimalize_drops_triangle_superset() {
        let out =
            minimalize(&[sub(&[2, 3]), sub(&[2, 4]), sub(&[3, 4]), sub(&[2, 3, 4])]).unwrap();
        assert_eq!(out, vec![sub(&[2, 3]), sub(&[2, 4]), sub(&[3, 4])]);
    }

    #[test]
    fn minimalize_rejects_empty_subset() {
        assert!(matches!(
            minimalize(&[sub(&[1]), VertexSubset::EMPTY]),
            Err(Error::EmptyGenerator)
        ));
    }

    #[test]
    fn stats_of_two_edge_path() {
        let ideal = Ideal::new(3, vec![sub(&[1, 2]), sub(&[2, 3])]).unwrap();
        let stats = ideal.stats();
        assert_eq!(stats.m, 2);
        assert_eq!(stats.degree, 2);
        assert_eq!(stats.support, sub(&[1, 2, 3]));
        assert_eq!(stats.pure_of_degree, Some(2));
    }

    #[test]
    fn stats_support_deficient_triangle() {
        let ideal = Ideal::new(4, vec![sub(&[2, 3]), sub(&[2, 4]), sub(&[3, 4])]).unwrap();
        let stats = ideal.stats();
        assert_eq!(stats.m, 3);
        assert_eq!(stats.degree, 2);
        assert_eq!(stats.support, sub(&[2, 3, 4]));
        assert_eq!(stats.pure_of_degree, None);
    }

    #[test]
    fn stats_mixed_degrees() {
        let ideal = Ideal::new(4, vec![sub(&[1]), sub(&[2, 3, 4])]).unwrap();
        let stats = ideal.stats();
        assert_eq!(stats.m, 2);
        assert_eq!(stats.degree, 3);
        assert_eq!(stats.support, sub(&[1, 2, 3, 4]));
        assert_eq!(stats.pure_of_degree, None);
    }

    #[test]
    fn contains_monomial_cases() {
        let ideal = Ideal::new(3, vec![sub(&[1, 2]), sub(&[2, 3])]).unwrap();
        assert!(ideal.contains_monomial(sub(&[1, 2, 3])));
        assert!(!ideal.contains_monomial(sub(&[1, 3])));
        assert!(!ideal.contains_monomial(VertexSubset::EMPTY));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Ideal::new(3, vec![]), Err(Error::EmptyIdeal)));
        assert!(matches!(
            Ideal::new(3, vec![VertexSubset::EMPTY]),
            Err(Error::EmptyGenerator)
        ));
        assert!(matches!(
            Ideal::new(3, vec![sub(&[4])]),
            Err(Error::IndexOutOfRange { index: 4, n: 3, .. })
        ));
        assert!(matches!(
            Ideal::new(25, vec![sub(&[1])]),
            Err(Error::AmbientTooLarge { n: 25, limit: 24 })
        ));
        assert!(matches!(
            Ideal::new(0, vec![sub(&[1])]),
            Err(Error::AmbientTooLarge { n: 0, .. })
        ));
        assert!(Ideal::with_limit(25, vec![sub(&[1])], 30).is_ok());
        assert!(matches!(
            Ideal::with_limit(31, vec![sub(&[1])], 40),
            Err(Error::AmbientTooLarge { n: 31, limit: 30 })
        ));
    }

    #[test]
    fn generators_are_canonical() {
        let a = Ideal::new(4, vec![sub(&[3, 4]), sub(&[1, 2]), sub(&[1, 2, 3])]).unwrap();
        let b = Ideal::new(4, vec![sub(&[1, 2]), sub(&[3, 4])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.generators(), &[sub(&[1, 2]), sub(&[3, 4])]);
    }

    #[test]
    fn text_and_json_forms() {
        let ideal = Ideal::new(4, vec![sub(&[1, 2]), sub(&[2, 3]), sub(&[3, 4])]).unwrap();
        assert_eq!(ideal.to_text(), "n=4; x1*x2, x2*x3, x3*x4");
        assert_eq!(
            serde_json::to_string(&ideal).unwrap(),
            r#"{"n":4,"generators":[[1,2],[2,3],[3,4]]}"#
        );
        let back: Ideal = serde_json::from_str(&serde_json::to_string(&ideal).unwrap()).unwrap();
        assert_eq!(back, ideal);
    }
}

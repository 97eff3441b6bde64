//! The f-ideal verdict, the two supporting identities, and the
//! three-condition classifier for pure degree-2 ideals.
//!
//! A square-free monomial ideal is an f-ideal when its facet complex and its
//! non-face complex have the same f-vector. For pure ideals of degree 2 this
//! is equivalent to the conjunction of three checks: unmixed of height n-2,
//! C(n,2) even, and exactly C(n,2)/2 generators.

use serde::Serialize;

use crate::complex::FVector;
use crate::error::Error;
use crate::ideal::Ideal;

/// Exact binomial coefficient; saturating for arguments far beyond the
/// ambient sizes handled here.
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}

/// The two f-vectors of an ideal, facet complex first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVectorPair {
    pub facet: FVector,
    pub nonface: FVector,
}

impl FVectorPair {
    pub fn equal(&self) -> bool {
        self.facet == self.nonface
    }
}

/// Everything the degree-2 classification produces for one ideal: the
/// definitional verdict with both f-vectors, the three conditions (absent
/// unless the ideal is pure of degree 2), and the cover invariants.
///
/// For a pure degree-2 ideal the conjunction of the three conditions always
/// equals the definitional verdict; a disagreement would falsify either the
/// implementation or the classification itself and is treated as an
/// internal invariant violation by the callers that sweep many ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    /// All generators of degree 2 and full support.
    pub pure_degree2: bool,
    /// Unmixed with height exactly n-2.
    pub cond_i: Option<bool>,
    /// C(n,2) is even.
    pub cond_ii: Option<bool>,
    /// Generator count m equals C(n,2)/2.
    pub cond_iii: Option<bool>,
    /// The definitional verdict: both complexes share one f-vector.
    pub f_ideal: bool,
    pub f_facet: FVector,
    pub f_nonface: FVector,
    pub height: u32,
    pub unmixed: bool,
}

impl TheoremReport {
    /// Conjunction of the three conditions; `None` when they do not apply.
    pub fn conditions_hold(&self) -> Option<bool> {
        Some(self.cond_i? && self.cond_ii? && self.cond_iii?)
    }

    /// True when the conditions apply and their conjunction disagrees with
    /// the definitional verdict.
    pub fn is_mismatch(&self) -> bool {
        self.conditions_hold()
            .is_some_and(|conj| conj != self.f_ideal)
    }
}

impl Ideal {
    /// Both f-vectors, facet complex first.
    pub fn f_vectors(&self) -> FVectorPair {
        FVectorPair {
            facet: self.facet_complex().f_vector(),
            nonface: self.nonface_complex().f_vector(),
        }
    }

    /// The definitional f-ideal test: strict equality of the two f-vectors.
    pub fn is_f_ideal(&self) -> bool {
        self.f_vectors().equal()
    }

    /// For a pure ideal of degree d, check the face-count identity
    /// `C(n,d) = f_{d-1}(facet complex) + f_{d-1}(non-face complex)`,
    /// reading a missing entry as 0. Errors with `NotPure` otherwise.
    ///
    /// This holds for every pure ideal; a `false` is a bug witness.
    pub fn check_lemma_binomial(&self) -> Result<bool, Error> {
        let d = self.stats().pure_of_degree.ok_or(Error::NotPure)?;
        let pair = self.f_vectors();
        let i = (d - 1) as usize;
        Ok(binomial(self.n(), d) == pair.facet.count(i) + pair.nonface.count(i))
    }

    /// Check the biconditional `dim(facet complex) = dim(non-face complex)
    /// iff height + degree = n` by evaluating both sides independently.
    ///
    /// This holds for every square-free monomial ideal; a `false` is a bug
    /// witness.
    pub fn check_lemma_dimension(&self) -> bool {
        let dims_equal = self.facet_complex().dimension() == self.nonface_complex().dimension();
        let sum_is_n = self.height() + self.stats().degree == self.n();
        dims_equal == sum_is_n
    }

    /// Run the full degree-2 classification. The three conditions are
    /// evaluated only for pure degree-2 ideals; the definitional verdict,
    /// f-vectors, height, and unmixedness are reported for any ideal.
    pub fn theorem_classify(&self) -> TheoremReport {
        let stats = self.stats();
        let decomposition = self.minimal_vertex_covers();
        let f_facet = self.facet_complex().f_vector();
        let f_nonface =
            crate::complex::SimplicialComplex::from_cover_complements(self.n(), decomposition.covers())
                .f_vector();
        let pure_degree2 = stats.pure_of_degree == Some(2);
        let (cond_i, cond_ii, cond_iii) = if pure_degree2 {
            let pairs = binomial(self.n(), 2);
            (
                Some(decomposition.unmixed() && decomposition.height() + 2 == self.n()),
                Some(pairs.is_multiple_of(2)),
                Some(2 * stats.m as u64 == pairs),
            )
        } else {
            (None, None, None)
        };
        TheoremReport {
            pure_degree2,
            cond_i,
            cond_ii,
            cond_iii,
            f_ideal: f_facet == f_nonface,
            f_facet,
            f_nonface,
            height: decomposition.height(),
            unmixed: decomposition.unmixed(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(7, 2), 21);
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(30, 15), 155117520);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(5, 0), 1);
    }

    #[test]
    fn lemma_binomial_on_small_ideals() {
        assert!(parse_ideal("n=3; x1*x2, x2*x3")
            .unwrap()
            .check_lemma_binomial()
            .unwrap());
        assert!(parse_ideal("n=4; x1*x2, x2*x3, x3*x4")
            .unwrap()
            .check_lemma_binomial()
            .unwrap());
        // full-simplex generator: C(3,3) = 1 + 0
        assert!(parse_ideal("n=3; x1*x2*x3")
            .unwrap()
            .check_lemma_binomial()
            .unwrap());
    }

    #[test]
    fn lemma_binomial_requires_purity() {
        assert!(matches!(
            parse_ideal("n=4; x2*x3, x2*x4, x3*x4")
                .unwrap()
                .check_lemma_binomial(),
            Err(Error::NotPure)
        ));
        assert!(matches!(
            parse_ideal("n=4; x1, x2*x3*x4").unwrap().check_lemma_binomial(),
            Err(Error::NotPure)
        ));
    }

    #[test]
    fn lemma_dimension_on_examples() {
        // both sides true: dims 1 = 1 and 1 + 2 = 3
        assert!(parse_ideal("n=3; x1*x2, x2*x3")
            .unwrap()
            .check_lemma_dimension());
        // both sides false: dims 1 vs 2 and 1 + 2 != 4
        let star = parse_ideal("n=4; x1*x2, x1*x3, x1*x4").unwrap();
        assert_eq!(star.facet_complex().dimension(), 1);
        assert_eq!(star.nonface_complex().dimension(), 2);
        assert!(star.check_lemma_dimension());
    }

    #[test]
    fn f_ideal_verdicts_on_small_graphs() {
        let path = parse_ideal("n=4; x1*x2, x2*x3, x3*x4").unwrap();
        let pair = path.f_vectors();
        assert!(pair.equal());
        assert_eq!(pair.facet.counts(), &[4, 3]);
        assert_eq!(pair.nonface.counts(), &[4, 3]);

        let two_path = parse_ideal("n=3; x1*x2, x2*x3").unwrap();
        let pair = two_path.f_vectors();
        assert!(!pair.equal());
        assert_eq!(pair.facet.counts(), &[3, 2]);
        assert_eq!(pair.nonface.counts(), &[3, 1]);

        let hollow = parse_ideal("n=4; x2*x3, x2*x4, x3*x4").unwrap();
        let pair = hollow.f_vectors();
        assert!(!pair.equal());
        assert_eq!(pair.facet.counts(), &[3, 3]);
        assert_eq!(pair.nonface.counts(), &[4, 3]);
    }

    #[test]
    fn classify_path_p4() {
        let report = parse_ideal("n=4; x1*x2, x2*x3, x3*x4")
            .unwrap()
            .theorem_classify();
        assert!(report.pure_degree2);
        assert_eq!(report.cond_i, Some(true));
        assert_eq!(report.cond_ii, Some(true));
        assert_eq!(report.cond_iii, Some(true));
        assert!(report.f_ideal);
        assert_eq!(report.height, 2);
        assert!(report.unmixed);
        assert_eq!(report.conditions_hold(), Some(true));
        assert!(!report.is_mismatch());
    }

    #[test]
    fn classify_star() {
        let report = parse_ideal("n=4; x1*x2, x1*x3, x1*x4")
            .unwrap()
            .theorem_classify();
        assert!(report.pure_degree2);
        assert_eq!(report.cond_i, Some(false));
        assert!(!report.f_ideal);
        assert_eq!(report.f_facet.counts(), &[4, 3]);
        assert_eq!(report.f_nonface.counts(), &[4, 3, 1]);
        assert!(!report.is_mismatch());
    }

    #[test]
    fn classify_five_cycle() {
        let report = parse_ideal("n=5; x1*x2, x2*x3, x3*x4, x4*x5, x1*x5")
            .unwrap()
            .theorem_classify();
        assert!(report.pure_degree2);
        assert_eq!(report.cond_i, Some(true));
        assert_eq!(report.cond_ii, Some(true));
        assert_eq!(report.cond_iii, Some(true));
        assert_eq!(report.height, 3);
        assert!(report.unmixed);
        assert!(report.f_ideal);
        assert_eq!(report.f_facet.counts(), &[5, 5]);
        assert_eq!(report.f_nonface.counts(), &[5, 5]);
    }

    #[test]
    fn classify_non_pure_input_still_reports() {
        let report = parse_ideal("n=4; x2*x3, x2*x4, x3*x4")
            .unwrap()
            .theorem_classify();
        assert!(!report.pure_degree2);
        assert_eq!(report.cond_i, None);
        assert_eq!(report.conditions_hold(), None);
        assert!(!report.f_ideal);
        assert!(!report.is_mismatch());
        assert_eq!(report.height, 2);
        assert!(report.unmixed);
    }

    #[test]
    fn report_serializes_with_stable_fields() {
        let report = parse_ideal("n=4; x1*x2, x2*x3, x3*x4")
            .unwrap()
            .theorem_classify();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            r#"{"pure_degree2":true,"cond_i":true,"cond_ii":true,"cond_iii":true,"f_ideal":true,"f_facet":[4,3],"f_nonface":[4,3],"height":2,"unmixed":true}"#
        );
        let non_pure = parse_ideal("n=4; x2*x3, x2*x4, x3*x4")
            .unwrap()
            .theorem_classify();
        assert_eq!(
            serde_json::to_string(&non_pure).unwrap(),
            r#"{"pure_degree2":false,"cond_i":null,"cond_ii":null,"cond_iii":null,"f_ideal":false,"f_facet":[3,3],"f_nonface":[4,3],"height":2,"unmixed":true}"#
        );
    }
}

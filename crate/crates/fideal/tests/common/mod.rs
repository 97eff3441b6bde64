//! Brute-force oracles shared by the integration suites. Everything here
//! works on raw `u32` subset masks and stays deliberately independent of the
//! library's transversal branching and cover-complement construction.
#![allow(dead_code)]

use fideal::{binomial, Ideal, VertexSubset};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn mask_of(s: VertexSubset) -> u32 {
    s.indices().fold(0u32, |m, v| m | 1 << (v - 1))
}

pub fn subset_of(mask: u32) -> VertexSubset {
    VertexSubset::from_indices((0..32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1))
}

pub fn gen_masks(ideal: &Ideal) -> Vec<u32> {
    ideal.generators().iter().map(|g| mask_of(*g)).collect()
}

fn meets_all(t: u32, edges: &[u32]) -> bool {
    edges.iter().all(|e| e & t != 0)
}

/// All minimal transversals by definition: sweep every subset of `{1..n}`,
/// keep those that meet every edge and stop doing so when any one element is
/// removed. Sorted by (cardinality, mask).
pub fn minimal_transversals_sweep(n: u32, edges: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for t in 0..1u32 << n {
        if !meets_all(t, edges) {
            continue;
        }
        let minimal = (0..n).all(|i| t & (1 << i) == 0 || !meets_all(t & !(1 << i), edges));
        if minimal {
            out.push(t);
        }
    }
    out.sort_by_key(|t| (t.count_ones(), *t));
    out
}

pub fn height_sweep(n: u32, edges: &[u32]) -> u32 {
    (0..1u32 << n)
        .filter(|t| meets_all(*t, edges))
        .map(u32::count_ones)
        .min()
        .expect("the full set is always a transversal of nonempty edges")
}

/// A subset is a face of the non-face complex iff it contains no generator.
pub fn is_face(s: u32, gens: &[u32]) -> bool {
    gens.iter().all(|g| g & s != *g)
}

/// Maximal non-faces by definition: faces that stay faces under no one-vertex
/// extension. Sorted by (cardinality, mask).
pub fn maximal_faces_sweep(n: u32, gens: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    for s in 0..1u32 << n {
        if !is_face(s, gens) {
            continue;
        }
        let maximal = (0..n).all(|i| s & (1 << i) != 0 || !is_face(s | (1 << i), gens));
        if maximal {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.count_ones(), *s));
    out
}

/// f-vector of the complex generated by `facets`, by sweeping every subset.
pub fn f_vector_sweep(n: u32, facets: &[u32]) -> Vec<u64> {
    let dim = facets.iter().map(|f| f.count_ones()).max().unwrap_or(0);
    if dim == 0 {
        return Vec::new();
    }
    let mut counts = vec![0u64; dim as usize];
    for s in 1..1u32 << n {
        if facets.iter().any(|f| s & !f == 0) {
            counts[(s.count_ones() - 1) as usize] += 1;
        }
    }
    counts
}

/// Labeled graphs on `{1..n}` with no isolated vertex, by inclusion-exclusion
/// over the forbidden isolated vertices.
pub fn labeled_graph_count(n: u32) -> i64 {
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            sign * binomial(n, k) as i64 * 2i64.pow(binomial(n - k, 2) as u32)
        })
        .sum()
}

/// A random square-free ideal: up to `max_gens` random nonempty subsets of
/// `{1..n}`, minimalized by construction.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: u32, max_gens: usize) -> Ideal {
    let count = rng.random_range(1..=max_gens);
    let gens: Vec<VertexSubset> = (0..count)
        .map(|_| subset_of(rng.random_range(1..1u32 << n)))
        .collect();
    Ideal::with_limit(n, gens, 30).expect("nonempty in-range generators")
}

/// A random pure ideal of the given degree: a fair coin per d-subset,
/// rejecting selections that are empty or miss a vertex.
pub fn random_pure_ideal(rng: &mut ChaCha8Rng, n: u32, degree: u32) -> Ideal {
    let candidates = k_subset_masks(n, degree);
    let full = (1u32 << n) - 1;
    loop {
        let mut gens = Vec::new();
        let mut union = 0u32;
        for &c in &candidates {
            if rng.random::<bool>() {
                gens.push(subset_of(c));
                union |= c;
            }
        }
        if !gens.is_empty() && union == full {
            return Ideal::with_limit(n, gens, 30).expect("valid pure generators");
        }
    }
}

/// All k-subsets of `{1..n}` as masks, ascending.
pub fn k_subset_masks(n: u32, k: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for s in 0..1u32 << n {
        if s.count_ones() == k {
            out.push(s);
        }
    }
    out
}

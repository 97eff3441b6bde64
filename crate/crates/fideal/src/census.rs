//! Exhaustive and seeded-random generation of pure square-free ideals, bulk
//! classification against the degree-2 conditions, and catalog output.
//!
//! Enumeration is over labeled structures: for degree 2 the candidates are
//! every labeled graph on `{1..n}` with no isolated vertex, each visited
//! exactly once in a fixed order. No isomorphism reduction is applied.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::ideal::{Ideal, DEFAULT_AMBIENT_LIMIT};
use crate::subset::VertexSubset;
use crate::theorem::{binomial, TheoremReport};

/// Exhaustive runs are allowed while the candidate pool (the d-subsets of
/// `{1..n}`) has at most this many members, i.e. at most 2^21 selections.
/// For degree 2 that means n <= 7; beyond it, sample with a seed.
pub const EXHAUSTIVE_POOL_LIMIT: u32 = 21;

/// Batch size for parallel classification; results are merged back in
/// enumeration order, so the worker count never shows in the output.
const BATCH: usize = 1 << 14;

/// Seeded random draw parameters. Draws are uniform over the valid ideals,
/// with replacement, and reproduce element-for-element for a fixed seed.
#[derive(Debug, Clone, Copy)]
pub struct Sampling {
    pub count: u64,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct CensusParams {
    pub n: u32,
    pub degree: u32,
    /// `None` enumerates exhaustively; `Some` draws seeded samples.
    pub sample: Option<Sampling>,
    /// Keep only ideals with exactly this many generators.
    pub generator_count: Option<usize>,
}

impl CensusParams {
    pub fn exhaustive(n: u32, degree: u32) -> Self {
        CensusParams {
            n,
            degree,
            sample: None,
            generator_count: None,
        }
    }

    pub fn sampled(n: u32, degree: u32, count: u64, seed: u64) -> Self {
        CensusParams {
            n,
            degree,
            sample: Some(Sampling { count, seed }),
            generator_count: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CensusMode {
    Exhaustive,
    Sample,
}

/// Aggregate result of one census run. All figures are computed by this
/// artifact's own enumeration, not taken from elsewhere; `mode`, `sample`,
/// and `seed` record how.
#[derive(Debug, Clone, Serialize)]
pub struct CensusRow {
    pub n: u32,
    pub degree: u32,
    pub mode: CensusMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Ideals examined.
    pub total_pure: u64,
    /// Ideals whose two f-vectors agree.
    pub f_ideal_count: u64,
    /// Degree-2 ideals where the three-condition conjunction matches the
    /// definitional verdict. Always equals `total_pure` for degree 2 unless
    /// something is broken; 0 for other degrees (no cross-check exists).
    pub theorem_agreements: u64,
    /// Ideals where conjunction and definition disagree, in full, so a
    /// counterexample to either the implementation or the classification
    /// can be inspected. Expected empty.
    pub mismatches: Vec<Ideal>,
}

#[derive(Serialize)]
struct CatalogLine<'a> {
    ideal: &'a Ideal,
    report: &'a TheoremReport,
}

/// All d-subsets of `{1..n}` ascending by bitmask value.
fn candidate_pool(n: u32, degree: u32) -> Result<Vec<VertexSubset>, Error> {
    if degree < 2 || degree >= n {
        return Err(Error::InvalidDegree { degree, n });
    }
    if n > DEFAULT_AMBIENT_LIMIT {
        return Err(Error::AmbientTooLarge {
            n,
            limit: DEFAULT_AMBIENT_LIMIT,
        });
    }
    let full: u32 = (1 << n) - 1;
    let mut out = Vec::with_capacity(binomial(n, degree) as usize);
    // Gosper's hack walks equal-popcount masks in ascending order
    let mut v: u32 = (1 << degree) - 1;
    while v <= full {
        out.push(VertexSubset::from_bits(v));
        let low = v & v.wrapping_neg();
        let ripple = v + low;
        v = ripple | (((v ^ ripple) / low) >> 2);
    }
    Ok(out)
}

/// Largest ambient size whose candidate pool still permits an exhaustive
/// run at this degree.
fn max_exhaustive_n(degree: u32) -> u32 {
    let mut n = degree + 1;
    while binomial(n + 1, degree) <= EXHAUSTIVE_POOL_LIMIT as u64 {
        n += 1;
    }
    n
}

/// Every pure square-free ideal of the given degree on `{1..n}`, i.e. every
/// nonempty set of d-subsets whose union is the whole vertex set, each
/// exactly once, in a deterministic order (ascending selection mask over the
/// candidate pool).
pub fn enumerate_pure(n: u32, degree: u32) -> Result<PureIdeals, Error> {
    let candidates = candidate_pool(n, degree)?;
    if candidates.len() as u64 > EXHAUSTIVE_POOL_LIMIT as u64 {
        return Err(Error::AmbientTooLarge {
            n,
            limit: max_exhaustive_n(degree),
        });
    }
    Ok(PureIdeals {
        n,
        full: VertexSubset::full(n),
        candidates,
        next: 1,
    })
}

/// Iterator over all pure ideals of one degree; see [`enumerate_pure`].
pub struct PureIdeals {
    n: u32,
    full: VertexSubset,
    candidates: Vec<VertexSubset>,
    next: u64,
}

impl Iterator for PureIdeals {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        let end = 1u64 << self.candidates.len();
        while self.next < end {
            let mask = self.next;
            self.next += 1;
            if let Some(ideal) = build_from_mask(self.n, &self.candidates, self.full, mask) {
                return Some(ideal);
            }
        }
        None
    }
}

/// Run a census without writing a catalog.
pub fn run_census(params: &CensusParams) -> Result<CensusRow, Error> {
    census_engine(params, None)
}

/// Run a census and stream the JSONL catalog (one `{"ideal":…,"report":…}`
/// line per classified ideal, in enumeration order) into `sink`.
pub fn run_census_to<W: Write>(params: &CensusParams, sink: &mut W) -> Result<CensusRow, Error> {
    census_engine(params, Some(sink))
}

/// Run a census and write the catalog to `path`. The file contents are
/// byte-identical across runs regardless of thread count.
pub fn write_catalog(params: &CensusParams, path: &Path) -> Result<CensusRow, Error> {
    let file = File::create(path).map_err(|e| Error::Io {
        path: Some(path.to_path_buf()),
        source: e,
    })?;
    let mut writer = BufWriter::new(file);
    let row = census_engine(params, Some(&mut writer)).map_err(|e| e.with_path(path))?;
    writer.flush().map_err(|e| Error::Io {
        path: Some(path.to_path_buf()),
        source: e,
    })?;
    Ok(row)
}

fn census_engine(params: &CensusParams, mut sink: Option<&mut dyn Write>) -> Result<CensusRow, Error> {
    let candidates = candidate_pool(params.n, params.degree)?;
    let q = candidates.len();
    let full = VertexSubset::full(params.n);
    let mut row = CensusRow {
        n: params.n,
        degree: params.degree,
        mode: if params.sample.is_some() {
            CensusMode::Sample
        } else {
            CensusMode::Exhaustive
        },
        sample: params.sample.map(|s| s.count),
        seed: params.sample.map(|s| s.seed),
        total_pure: 0,
        f_ideal_count: 0,
        theorem_agreements: 0,
        mismatches: Vec::new(),
    };

    match params.sample {
        None => {
            if q as u64 > EXHAUSTIVE_POOL_LIMIT as u64 {
                return Err(Error::AmbientTooLarge {
                    n: params.n,
                    limit: max_exhaustive_n(params.degree),
                });
            }
            let end = 1u64 << q;
            let mut start = 1u64;
            while start < end {
                let stop = (start + BATCH as u64).min(end);
                let batch: Vec<Ideal> = (start..stop)
                    .filter_map(|mask| build_from_mask(params.n, &candidates, full, mask))
                    .filter(|i| keep(params, i))
                    .collect();
                process_batch(&batch, &mut row, &mut sink)?;
                start = stop;
            }
        }
        Some(Sampling { count, seed }) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut remaining = count;
            while remaining > 0 {
                let take = remaining.min(BATCH as u64);
                let batch: Vec<Ideal> = (0..take)
                    .map(|_| draw_ideal(&mut rng, params.n, &candidates, full))
                    .filter(|i| keep(params, i))
                    .collect();
                process_batch(&batch, &mut row, &mut sink)?;
                remaining -= take;
            }
        }
    }
    Ok(row)
}

fn keep(params: &CensusParams, ideal: &Ideal) -> bool {
    params
        .generator_count
        .is_none_or(|m| ideal.generators().len() == m)
}

fn build_from_mask(
    n: u32,
    candidates: &[VertexSubset],
    full: VertexSubset,
    mask: u64,
) -> Option<Ideal> {
    let mut gens = Vec::with_capacity(mask.count_ones() as usize);
    let mut union = VertexSubset::EMPTY;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        gens.push(candidates[i]);
        union = union.union(candidates[i]);
        bits &= bits - 1;
    }
    (union == full).then(|| Ideal::from_canonical(n, gens))
}

/// One uniform draw over the valid ideals: a fair coin per candidate,
/// rejecting selections that are empty or miss a vertex.
fn draw_ideal(
    rng: &mut ChaCha8Rng,
    n: u32,
    candidates: &[VertexSubset],
    full: VertexSubset,
) -> Ideal {
    loop {
        let mut gens = Vec::new();
        let mut union = VertexSubset::EMPTY;
        for &c in candidates {
            if rng.random::<bool>() {
                gens.push(c);
                union = union.union(c);
            }
        }
        if !gens.is_empty() && union == full {
            return Ideal::from_canonical(n, gens);
        }
    }
}

fn process_batch(
    batch: &[Ideal],
    row: &mut CensusRow,
    sink: &mut Option<&mut dyn Write>,
) -> Result<(), Error> {
    let reports: Vec<TheoremReport> = batch.par_iter().map(Ideal::theorem_classify).collect();
    for (ideal, report) in batch.iter().zip(&reports) {
        row.total_pure += 1;
        if report.f_ideal {
            row.f_ideal_count += 1;
        }
        if row.degree == 2 {
            match report.conditions_hold() {
                Some(conj) if conj == report.f_ideal => row.theorem_agreements += 1,
                _ => row.mismatches.push(ideal.clone()),
            }
        }
        if let Some(w) = sink.as_deref_mut() {
            let line = serde_json::to_string(&CatalogLine { ideal, report })?;
            w.write_all(line.as_bytes())?;
            w.write_all(b"\n")?;
        }
    }
    Ok(())
}

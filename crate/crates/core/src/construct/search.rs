//! Search for valid `B` matrices and complete specs of each kind.
//!
//! Exhaustive scans walk candidates in lexicographic order (entry (0,0) most
//! significant). Random scans draw candidates from a ChaCha8 stream seeded
//! by the caller. Either way candidates are evaluated in parallel batches
//! and collected in candidate order, so results do not depend on the number
//! of worker threads.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use super::spec::{check_b, MAX_QUBITS};
use super::symmetrizer::{counter_to_upper, find_a, find_symmetrizer, symmetrizer_candidates};
use super::{SetKind, StabilizerSpec};
use crate::gf2::{BitMatrix, BitVec};

/// Largest `m` scanned exhaustively.
pub const EXHAUSTIVE_LIMIT: usize = 6;

/// Random candidates tried per requested hit before giving up.
pub const RANDOM_ATTEMPTS_PER_HIT: usize = 4096;

const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("qubit count m = {0} outside 1..={MAX_QUBITS}")]
    QubitCount(usize),
    #[error("exhaustive search is limited to m <= {EXHAUSTIVE_LIMIT}; use a random seed for m = {0}")]
    ExhaustiveTooLarge(usize),
}

/// Specs found by [`search_specs`], plus a warning when none exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub specs: Vec<StabilizerSpec>,
    pub warning: Option<String>,
}

fn check_mode(m: usize, mode: SearchMode, candidate_bits: usize) -> Result<(), SearchError> {
    if m == 0 || m > MAX_QUBITS {
        return Err(SearchError::QubitCount(m));
    }
    if mode == SearchMode::Exhaustive && (m > EXHAUSTIVE_LIMIT || candidate_bits > 63) {
        return Err(SearchError::ExhaustiveTooLarge(m));
    }
    Ok(())
}

/// Matrix for a counter over the row-major entries, (0,0) most significant.
fn counter_to_general(m: usize, counter: u64) -> BitMatrix {
    let n = m * m;
    let mut out = BitMatrix::zeros(m, m);
    for t in 0..n {
        if counter >> (n - 1 - t) & 1 == 1 {
            out.set(t / m, t % m, true);
        }
    }
    out
}

fn random_symmetric(m: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    let n = m * (m + 1) / 2;
    BitMatrix::symmetric_from_upper(m, &BitVec::from_bits((0..n).map(|_| rng.gen::<bool>())))
}

fn random_general(m: usize, rng: &mut ChaCha8Rng) -> BitMatrix {
    let mut out = BitMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            out.set(i, j, rng.gen::<bool>());
        }
    }
    out
}

/// Evaluates `0..total` in parallel batches and keeps the first `count`
/// hits in counter order.
fn scan_exhaustive<T, F>(total: u64, count: usize, eval: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync,
{
    let mut out = Vec::new();
    let step = (BATCH * rayon::current_num_threads().max(1)) as u64;
    let mut start = 0u64;
    while start < total && out.len() < count {
        let end = start.saturating_add(step).min(total);
        out.extend((start..end).into_par_iter().filter_map(&eval).collect::<Vec<T>>());
        start = end;
    }
    out.truncate(count);
    out
}

/// Draws candidates from the seeded stream, evaluates them in parallel
/// batches, and keeps the first `count` distinct hits in draw order.
fn scan_random<T, F, G>(seed: u64, count: usize, mut draw: G, eval: F) -> Vec<T>
where
    T: Send + Eq + std::hash::Hash + Clone,
    F: Fn(&BitMatrix) -> Option<T> + Sync,
    G: FnMut(&mut ChaCha8Rng) -> BitMatrix,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = count.saturating_mul(RANDOM_ATTEMPTS_PER_HIT);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut drawn = 0usize;
    while drawn < budget && out.len() < count {
        let n = BATCH.min(budget - drawn);
        let batch: Vec<BitMatrix> = (0..n).map(|_| draw(&mut rng)).collect();
        drawn += n;
        let hits: Vec<T> = batch.par_iter().filter_map(&eval).collect();
        for h in hits {
            if out.len() < count && seen.insert(h.clone()) {
                out.push(h);
            }
        }
    }
    out
}

fn valid_b(b: &BitMatrix) -> bool {
    check_b(b).is_ok()
}

/// Symmetric, invertible `B` whose characteristic polynomial is irreducible
/// with Fibonacci index `2^m + 1`; up to `count` of them.
pub fn search_b(m: usize, mode: SearchMode, count: usize) -> Result<Vec<BitMatrix>, SearchError> {
    let n = m * (m + 1) / 2;
    check_mode(m, mode, n)?;
    let eval = |b: &BitMatrix| valid_b(b).then(|| b.clone());
    Ok(match mode {
        SearchMode::Exhaustive => scan_exhaustive(1u64 << n, count, |c| {
            eval(&BitMatrix::symmetric_from_upper(m, &counter_to_upper(n, c)))
        }),
        SearchMode::Random { seed } => scan_random(seed, count, |rng| random_symmetric(m, rng), eval),
    })
}

/// Like [`search_b`] but over all `m × m` matrices, symmetric or not.
pub fn search_b_general(m: usize, mode: SearchMode, count: usize) -> Result<Vec<BitMatrix>, SearchError> {
    check_mode(m, mode, m * m)?;
    let eval = |b: &BitMatrix| valid_b(b).then(|| b.clone());
    Ok(match mode {
        SearchMode::Exhaustive => scan_exhaustive(1u64 << (m * m), count, |c| eval(&counter_to_general(m, c))),
        SearchMode::Random { seed } => scan_random(seed, count, |rng| random_general(m, rng), eval),
    })
}

/// Group spec for `b` with a symmetrizer that is not a polynomial in `b`.
pub fn group_spec_for(b: &BitMatrix) -> Option<StabilizerSpec> {
    if !valid_b(b) {
        return None;
    }
    let r = find_symmetrizer(b, true)?;
    StabilizerSpec::group(b.clone(), r).ok()
}

/// Semigroup spec for `b` admitting exactly one factorizable basis.
///
/// Symmetrizers are tried in [`symmetrizer_candidates`] order
/// (non-polynomial first); the first one with an admissible `A` wins.
pub fn semigroup_spec_for(b: &BitMatrix) -> Option<StabilizerSpec> {
    if !valid_b(b) {
        return None;
    }
    symmetrizer_candidates(b).into_iter().find_map(|r| {
        let a = find_a(b, &r)?;
        StabilizerSpec::semigroup(b.clone(), r, a).ok()
    })
}

/// Up to `count` complete specs of `kind` on `m` qubits.
///
/// Field specs come from symmetric `B`. Group and semigroup specs scan all
/// matrices: a symmetric `B` only has polynomial symmetrizers, so the group
/// family needs non-symmetric `B`.
pub fn search_specs(kind: SetKind, m: usize, mode: SearchMode, count: usize) -> Result<SearchOutcome, SearchError> {
    let specs = match kind {
        SetKind::Field => search_b(m, mode, count)?
            .into_iter()
            .map(|b| StabilizerSpec::field(b).expect("search only returns valid B"))
            .collect(),
        SetKind::Group | SetKind::Semigroup => {
            check_mode(m, mode, m * m)?;
            let per_b = |b: &BitMatrix| match kind {
                SetKind::Group => group_spec_for(b),
                _ => semigroup_spec_for(b),
            };
            match mode {
                SearchMode::Exhaustive => {
                    scan_exhaustive(1u64 << (m * m), count, |c| per_b(&counter_to_general(m, c)))
                }
                SearchMode::Random { seed } => scan_random(seed, count, |rng| random_general(m, rng), per_b),
            }
        }
    };
    let warning = specs.is_empty().then(|| match kind {
        SetKind::Field => format!("no valid B found for m = {m}"),
        SetKind::Group => format!(
            "no non-polynomial symmetrizer found for m = {m}: every invertible symmetrizer of every valid B is a polynomial in B"
        ),
        SetKind::Semigroup => format!("no admissible A found for m = {m}: every symmetric A is excluded"),
    });
    Ok(SearchOutcome { specs, warning })
}

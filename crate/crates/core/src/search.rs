//! Deterministic sweeps over tuple index spaces.
//!
//! Every law check in this crate reduces to "find the first index in
//! `0..len` whose tuple violates a predicate". The sweep runs on rayon when
//! the `parallel` feature is on and [`Exec::Parallel`] is selected; the
//! reported counterexample is always the one with the lowest index, so the
//! two executors produce identical reports.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2014;
pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Exhaustive sweeps are used while `|carrier|^arity <= budget`.
    pub budget: u64,
    pub seed: u64,
    pub samples: u64,
    pub exec: Exec,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            exec: Exec::default(),
        }
    }
}

impl CheckOptions {
    pub fn sequential(mut self) -> Self {
        self.exec = Exec::Sequential;
        self
    }

    pub fn with_samples(mut self, seed: u64, samples: u64) -> Self {
        self.seed = seed;
        self.samples = samples;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, count: u64 },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => write!(f, "exhaustive"),
            Mode::Sampled { seed, count } => write!(f, "sampled(seed={seed}, count={count})"),
        }
    }
}

/// Outcome of a law check. `counterexample` is present iff the verdict is
/// [`Verdict::Fails`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport<W> {
    pub verdict: Verdict,
    pub mode: Mode,
    pub evaluations: u64,
    pub counterexample: Option<W>,
}

impl<W> CheckReport<W> {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn map<V, F: FnOnce(W) -> V>(self, f: F) -> CheckReport<V> {
        CheckReport {
            verdict: self.verdict,
            mode: self.mode,
            evaluations: self.evaluations,
            counterexample: self.counterexample.map(f),
        }
    }

    fn from_hit(mode: Mode, total: u64, hit: Option<(u64, W)>) -> Self {
        match hit {
            Some((i, w)) => CheckReport {
                verdict: Verdict::Fails,
                mode,
                evaluations: i + 1,
                counterexample: Some(w),
            },
            None => CheckReport {
                verdict: Verdict::Holds,
                mode,
                evaluations: total,
                counterexample: None,
            },
        }
    }
}

/// Combines reports of sub-checks into one: fails at the first failing
/// part, evaluations are summed.
pub fn merge_reports<W>(parts: Vec<CheckReport<W>>) -> CheckReport<W> {
    let mut evaluations = 0;
    let mut mode = Mode::Exhaustive;
    for part in parts {
        evaluations += part.evaluations;
        if let Mode::Sampled { .. } = part.mode {
            mode = part.mode;
        }
        if !part.holds() {
            return CheckReport {
                evaluations,
                mode: part.mode,
                ..part
            };
        }
    }
    CheckReport {
        verdict: Verdict::Holds,
        mode,
        evaluations,
        counterexample: None,
    }
}

/// An indexable family of elements: either an explicit list or a generator
/// such as an integer window.
#[derive(Clone)]
pub struct Carrier<E> {
    len: u64,
    nth: Arc<dyn Fn(u64) -> E + Send + Sync>,
}

impl<E: 'static> Carrier<E> {
    pub fn listed(items: Vec<E>) -> Self
    where
        E: Clone + Send + Sync,
    {
        let len = items.len() as u64;
        let items = Arc::new(items);
        Carrier {
            len,
            nth: Arc::new(move |i| items[i as usize].clone()),
        }
    }

    pub fn from_fn<F>(len: u64, f: F) -> Self
    where
        F: Fn(u64) -> E + Send + Sync + 'static,
    {
        Carrier {
            len,
            nth: Arc::new(f),
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: u64) -> E {
        (self.nth)(i)
    }

    pub fn to_vec(&self) -> Vec<E> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl Carrier<u64> {
    /// The integers `lo..=hi`.
    pub fn window(lo: u64, hi: u64) -> Self {
        Carrier::from_fn(hi.saturating_sub(lo) + 1, move |i| lo + i)
    }
}

impl Carrier<i64> {
    pub fn window_signed(lo: i64, hi: i64) -> Self {
        Carrier::from_fn((hi - lo) as u64 + 1, move |i| lo + i as i64)
    }
}

impl<E> fmt::Debug for Carrier<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Carrier(len={})", self.len)
    }
}

/// Lowest index in `0..len` for which `probe` yields a hit or an error.
pub fn first_hit<W, F>(len: u64, exec: Exec, probe: F) -> Result<Option<(u64, W)>>
where
    W: Send,
    F: Fn(u64) -> Result<Option<W>> + Sync,
{
    match exec {
        Exec::Sequential => first_hit_seq(len, probe),
        Exec::Parallel => first_hit_par(len, probe),
    }
}

pub fn first_hit_seq<W, F>(len: u64, probe: F) -> Result<Option<(u64, W)>>
where
    F: Fn(u64) -> Result<Option<W>>,
{
    for i in 0..len {
        if let Some(w) = probe(i)? {
            return Ok(Some((i, w)));
        }
    }
    Ok(None)
}

#[cfg(feature = "parallel")]
pub fn first_hit_par<W, F>(len: u64, probe: F) -> Result<Option<(u64, W)>>
where
    W: Send,
    F: Fn(u64) -> Result<Option<W>> + Sync,
{
    use rayon::prelude::*;

    let hit = (0..len as usize)
        .into_par_iter()
        .with_min_len(1024)
        .find_map_first(|i| match probe(i as u64) {
            Ok(None) => None,
            Ok(Some(w)) => Some(Ok((i as u64, w))),
            Err(e) => Some(Err(e)),
        });
    hit.transpose()
}

#[cfg(not(feature = "parallel"))]
pub fn first_hit_par<W, F>(len: u64, probe: F) -> Result<Option<(u64, W)>>
where
    W: Send,
    F: Fn(u64) -> Result<Option<W>> + Sync,
{
    first_hit_seq(len, probe)
}

/// Decodes `index` into `K` carrier positions, most significant first.
#[inline]
pub fn decode<const K: usize>(mut index: u64, base: u64) -> [u64; K] {
    let mut out = [0u64; K];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

fn tuple_count(base: u64, arity: u32) -> Option<u64> {
    base.checked_pow(arity)
}

/// Checks `test` on every `K`-tuple over `carrier`, lexicographic order.
pub fn exhaustive<const K: usize, E, W, F>(
    carrier: &Carrier<E>,
    exec: Exec,
    test: F,
) -> Result<CheckReport<W>>
where
    E: 'static,
    W: Send,
    F: Fn([E; K]) -> Result<Option<W>> + Sync,
{
    let base = carrier.len();
    let total = tuple_count(base, K as u32).ok_or(Error::BudgetExceeded {
        needed: u64::MAX,
        budget: u64::MAX,
    })?;
    let hit = first_hit(total, exec, |i| {
        let idx = decode::<K>(i, base);
        test(idx.map(|j| carrier.get(j)))
    })?;
    Ok(CheckReport::from_hit(Mode::Exhaustive, total, hit))
}

/// Checks `test` on `count` tuples drawn uniformly (with replacement) from
/// `carrier` by a ChaCha8 stream seeded with `seed`.
pub fn sampled<const K: usize, E, W, F>(
    carrier: &Carrier<E>,
    seed: u64,
    count: u64,
    exec: Exec,
    test: F,
) -> Result<CheckReport<W>>
where
    E: 'static,
    W: Send,
    F: Fn([E; K]) -> Result<Option<W>> + Sync,
{
    if carrier.is_empty() {
        return Err(Error::Precondition("cannot sample from an empty carrier".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks: Vec<[u64; K]> = (0..count)
        .map(|_| std::array::from_fn(|_| rng.gen_range(0..carrier.len())))
        .collect();
    let hit = first_hit(count, exec, |i| {
        test(picks[i as usize].map(|j| carrier.get(j)))
    })?;
    Ok(CheckReport::from_hit(Mode::Sampled { seed, count }, count, hit))
}

/// Exhaustive when `|carrier|^K` fits the budget, otherwise sampled.
pub fn sweep<const K: usize, E, W, F>(
    carrier: &Carrier<E>,
    opts: &CheckOptions,
    test: F,
) -> Result<CheckReport<W>>
where
    E: 'static,
    W: Send,
    F: Fn([E; K]) -> Result<Option<W>> + Sync,
{
    match tuple_count(carrier.len(), K as u32) {
        Some(n) if n <= opts.budget => exhaustive(carrier, opts.exec, test),
        _ => sampled(carrier, opts.seed, opts.samples, opts.exec, test),
    }
}

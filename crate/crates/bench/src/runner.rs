//! Timed runs over the corpus.

use std::time::Duration;

use primebasis::{
    run, AlgebraError, CoeffBackend, CorpusError, EngineOptions, MonomialOrder, PolySystem,
    Representation, RunConfig, VerifyReport,
};
use thiserror::Error;

use crate::record::{BenchRecord, Outcome};
use crate::reference::reduction;

/// The two implementations being compared.
pub const ORDERINGS: [MonomialOrder; 2] = [MonomialOrder::TotalDegree, MonomialOrder::PrimeBased];

#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Timed repeats; the record keeps the median.
    pub repeats: u32,
    /// Limit for a single run.
    pub timeout: Duration,
    /// One untimed run before the repeats.
    pub warmup: bool,
    /// Check the basis of the first completed run.
    pub verify: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            repeats: 5,
            timeout: Duration::from_secs(600),
            warmup: true,
            verify: false,
        }
    }
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    /// An engine failure that is neither a capacity limit nor a timeout.
    #[error("engine failure: {0}")]
    Engine(#[from] AlgebraError),
    #[error("{system} has {vars} variables; at most {MAX_PERMUTED_VARS} can be permuted")]
    TooManyVariables { system: String, vars: usize },
}

/// A record plus what the single verification pass found.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub record: BenchRecord,
    pub verification: Option<VerifyReport>,
}

fn median(mut values: Vec<f64>) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// Runs one cell of the matrix. `permutation` re-declares the variable order
/// first. Capacity failures and timeouts become outcomes; any other engine
/// error is returned.
pub fn run_case(
    system: &PolySystem,
    ordering: MonomialOrder,
    backend: CoeffBackend,
    permutation: Option<&str>,
    config: &BenchConfig,
) -> Result<CaseResult, BenchError> {
    run_case_with(
        system,
        ordering,
        ordering.native_representation(),
        backend,
        permutation,
        config,
    )
}

pub fn run_case_with(
    system: &PolySystem,
    ordering: MonomialOrder,
    representation: Representation,
    backend: CoeffBackend,
    permutation: Option<&str>,
    config: &BenchConfig,
) -> Result<CaseResult, BenchError> {
    let permuted;
    let system = match permutation {
        Some(order) => {
            permuted = system.permute_vars(order)?;
            &permuted
        }
        None => system,
    };
    let mut record = BenchRecord {
        system: system.name().to_string(),
        ordering: ordering.as_str().to_string(),
        backend: backend.as_str().to_string(),
        permutation: system.vars().order_string(),
        outcome: Outcome::Ok,
        basis_size: None,
        duration_ms: None,
        repeats: config.repeats,
    };
    let attempt = |check: bool| {
        let options = EngineOptions::default().with_timeout(config.timeout);
        let rc = RunConfig::new(ordering, backend)
            .with_representation(representation)
            .with_options(options);
        run(system, &rc, check)
    };
    let fail = |mut record: BenchRecord, err: AlgebraError| match Outcome::from_error(&err) {
        Some(outcome) => {
            record.outcome = outcome;
            Ok(CaseResult {
                record,
                verification: None,
            })
        }
        None => Err(BenchError::Engine(err)),
    };

    let first = match attempt(config.verify) {
        Ok(out) => out,
        Err(err) => return fail(record, err),
    };
    record.basis_size = Some(first.basis.len());
    let verification = first.verification;
    let mut times = Vec::with_capacity(config.repeats as usize);
    if !config.warmup {
        times.push(first.duration.as_secs_f64() * 1e3);
    }
    while times.len() < config.repeats.max(1) as usize {
        match attempt(false) {
            Ok(out) => times.push(out.duration.as_secs_f64() * 1e3),
            Err(err) => return fail(record, err),
        }
    }
    record.duration_ms = Some(median(times));
    Ok(CaseResult {
        record,
        verification,
    })
}

/// Both orderings under both backends for each system, in that order.
pub fn run_corpus(
    systems: &[PolySystem],
    config: &BenchConfig,
) -> Result<Vec<CaseResult>, BenchError> {
    let mut out = Vec::new();
    for system in systems {
        for backend in CoeffBackend::ALL {
            for ordering in ORDERINGS {
                out.push(run_case(system, ordering, backend, None, config)?);
            }
        }
    }
    Ok(out)
}

/// Measured reduction for one system and backend, when both runs completed.
pub fn measured_reduction(
    records: &[BenchRecord],
    system: &str,
    backend: CoeffBackend,
) -> Option<f64> {
    let find = |ordering: MonomialOrder| {
        records.iter().find(|r| {
            r.system == system
                && r.backend == backend.as_str()
                && r.ordering == ordering.as_str()
                && r.is_ok()
        })
    };
    let total = find(MonomialOrder::TotalDegree)?.duration_ms?;
    let prime = find(MonomialOrder::PrimeBased)?.duration_ms?;
    reduction(total, prime)
}

pub const MAX_PERMUTED_VARS: usize = 6;

pub fn permutations(names: &[char]) -> Vec<String> {
    let mut items = names.to_vec();
    let mut out = Vec::new();
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<char>, k: usize, out: &mut Vec<String>) {
    if k == items.len() {
        out.push(items.iter().collect());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[derive(Debug, Clone)]
pub struct PermutationSummary {
    pub ordering: String,
    pub backend: String,
    /// Slowest over fastest among completed runs.
    pub max_min_ratio: Option<f64>,
    pub fastest: Option<String>,
}

/// Runs every variable order of `system` through the matrix.
pub fn run_permutations(
    system: &PolySystem,
    backends: &[CoeffBackend],
    config: &BenchConfig,
) -> Result<Vec<BenchRecord>, BenchError> {
    let vars = system.vars().len();
    if vars > MAX_PERMUTED_VARS {
        return Err(BenchError::TooManyVariables {
            system: system.name().to_string(),
            vars,
        });
    }
    let mut out = Vec::new();
    for order in permutations(system.vars().names()) {
        for &backend in backends {
            for ordering in ORDERINGS {
                out.push(run_case(system, ordering, backend, Some(&order), config)?.record);
            }
        }
    }
    Ok(out)
}

pub fn summarize_permutations(records: &[BenchRecord]) -> Vec<PermutationSummary> {
    let mut out = Vec::new();
    for backend in CoeffBackend::ALL {
        for ordering in ORDERINGS {
            let done: Vec<&BenchRecord> = records
                .iter()
                .filter(|r| {
                    r.backend == backend.as_str() && r.ordering == ordering.as_str() && r.is_ok()
                })
                .collect();
            if records.iter().all(|r| r.backend != backend.as_str()) {
                continue;
            }
            let ms = |r: &&BenchRecord| r.duration_ms.unwrap_or(f64::NAN);
            let fastest = done.iter().min_by(|a, b| ms(a).total_cmp(&ms(b)));
            let slowest = done.iter().max_by(|a, b| ms(a).total_cmp(&ms(b)));
            out.push(PermutationSummary {
                ordering: ordering.as_str().to_string(),
                backend: backend.as_str().to_string(),
                max_min_ratio: fastest.zip(slowest).map(|(f, s)| ms(s) / ms(f)),
                fastest: fastest.map(|r| r.permutation.clone()),
            });
        }
    }
    out
}

//! Benchmark harness comparing prime-based and total-degree power products
//! over the built-in corpus.

pub mod record;
pub mod reference;
pub mod runner;

pub use record::{markdown, read_csv, write_csv, BenchRecord, Outcome};
pub use reference::{
    reduction, reference_row, RefCell, RefRow, CORPUS_REFERENCE, GERDT1_LEX_SIZE,
    PERMUTATION_REFERENCE,
};
pub use runner::{
    measured_reduction, permutations, run_case, run_case_with, run_corpus, run_permutations,
    summarize_permutations, BenchConfig, BenchError, CaseResult, PermutationSummary, ORDERINGS,
};

//! Whole-engine checks: reference bases computed independently (see
//! fixtures/generate.py), determinism, criteria soundness, agreement across
//! representations and backends, and the pair update after inter-reduction.

use std::collections::BTreeSet;
use std::time::Duration;

use primebasis::{
    builtin, parse_system_file, run, BigRat, CoeffBackend, EngineOptions, ExponentVector,
    MonomialOrder, PolySystem, Polynomial, Representation, RunConfig, RunOutput,
};

const FIXTURES: [&str; 7] = [
    "example-1",
    "example-2",
    "example-3",
    "cyclic-4",
    "gerdt-2",
    "parametric-curve",
    "katsura-4",
];

const FAST: [&str; 5] = [
    "example-2",
    "example-3",
    "cyclic-4",
    "gerdt-2",
    "parametric-curve",
];

const ORDERS: [MonomialOrder; 2] = [MonomialOrder::PrimeBased, MonomialOrder::TotalDegree];

fn compute(sys: &PolySystem, config: RunConfig) -> RunOutput {
    run(sys, &config, false).unwrap_or_else(|e| panic!("{}: {e}", sys.name()))
}

fn big(order: MonomialOrder) -> RunConfig {
    RunConfig::new(order, CoeffBackend::ArbitraryPrecision)
}

/// Monic forms of the polynomials, rendered, as a set.
fn monic_set(sys: &PolySystem, order: MonomialOrder) -> BTreeSet<String> {
    sys.to_polynomials::<ExponentVector, BigRat>(order)
        .unwrap()
        .iter()
        .map(|p: &Polynomial<ExponentVector, BigRat>| p.make_monic().unwrap().display(sys.vars()))
        .collect()
}

#[test]
fn matches_reference_bases() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures");
    for key in FIXTURES {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let text =
                std::fs::read_to_string(format!("{dir}/{key}.{}.txt", order.as_str())).unwrap();
            let expected = parse_system_file(&text, key, None).unwrap();
            assert_eq!(expected.vars().order_string(), sys.vars().order_string());
            let out = compute(&sys, big(order));
            let got: BTreeSet<String> = out.rendered.iter().cloned().collect();
            assert_eq!(got.len(), out.rendered.len());
            assert_eq!(got, monic_set(&expected, order), "{key} {order}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    for key in FAST {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let a = compute(&sys, big(order));
            let b = compute(&sys, big(order));
            assert_eq!(a.rendered.join("\n"), b.rendered.join("\n"), "{key}");
            assert_eq!(a.stats, b.stats, "{key}");
        }
    }
}

#[test]
fn criteria_do_not_change_the_basis() {
    for key in FAST {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let reference = compute(&sys, big(order)).rendered;
            for (coprime, chain) in [(false, true), (true, false), (false, false)] {
                let options = EngineOptions {
                    coprime_criterion: coprime,
                    chain_criterion: chain,
                    ..EngineOptions::default()
                };
                let out = compute(&sys, big(order).with_options(options));
                assert_eq!(
                    out.rendered, reference,
                    "{key} {order} coprime={coprime} chain={chain}"
                );
                if !coprime {
                    assert_eq!(out.stats.skipped_coprime, 0);
                }
                if !chain {
                    assert_eq!(out.stats.skipped_chain, 0);
                }
            }
        }
    }
}

#[test]
fn representations_agree() {
    let reprs = [
        Representation::ExpandedString,
        Representation::ExponentVector,
        Representation::PrimeImage,
    ];
    for key in FAST {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let outputs: Vec<RunOutput> = reprs
                .iter()
                .map(|&r| compute(&sys, big(order).with_representation(r)))
                .collect();
            for out in &outputs[1..] {
                assert_eq!(out.basis, outputs[0].basis, "{key} {order}");
                assert_eq!(out.stats, outputs[0].stats, "{key} {order}");
            }
        }
    }
}

#[test]
fn backends_agree_when_fixed64_completes() {
    for key in FAST {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let exact = compute(&sys, big(order));
            match run(&sys, &RunConfig::new(order, CoeffBackend::Fixed64), false) {
                Ok(out) => assert_eq!(out.basis, exact.basis, "{key} {order}"),
                Err(e) => assert!(e.is_capacity(), "{key} {order}: {e}"),
            }
        }
    }
}

#[test]
fn verification_passes_on_corpus_bases() {
    for key in FIXTURES {
        let sys = builtin(key).unwrap();
        for order in ORDERS {
            let out = run(&sys, &big(order), true).unwrap();
            let report = out.verification.unwrap();
            assert!(report.passed(), "{key} {order}\n{report}");
        }
    }
}

#[test]
fn dropping_the_pair_update_breaks_the_basis() {
    let sys = builtin("cyclic-5").unwrap();
    let order = MonomialOrder::TotalDegree;
    let good = run(&sys, &big(order), true).unwrap();
    assert!(good.verification.unwrap().passed());
    assert_eq!(good.stats.stale_pairs_dropped, 0);

    let options = EngineOptions {
        newbasis_pair_update: false,
        ..EngineOptions::default()
    }
    .with_timeout(Duration::from_secs(120));
    let bad = run(&sys, &big(order).with_options(options), true).unwrap();
    assert!(bad.stats.stale_pairs_dropped > 0);
    let report = bad.verification.unwrap();
    assert!(!report.groebner_ok, "{report}");
    assert_ne!(bad.basis.len(), good.basis.len());
}

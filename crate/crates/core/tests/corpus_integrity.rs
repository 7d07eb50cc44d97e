//! The built-in systems against independently counted term tallies, and the
//! corpus files against their checksum manifest.

use primebasis::{builtin, BUILTINS};
use sha2::{Digest, Sha256};

/// Terms per polynomial, counted by hand from the source listing. Zero terms
/// are not counted (Gerdt 1's second polynomial is written with a `0tw`).
const TERM_COUNTS: [(&str, &[usize]); 13] = [
    ("example-1", &[5, 6, 3, 12, 4]),
    ("example-2", &[5, 6, 3, 12]),
    ("example-3", &[5, 3, 12, 4]),
    ("cyclic-4", &[4, 4, 4, 2]),
    ("cyclic-5", &[5, 5, 5, 5, 2]),
    ("gerdt-1", &[3, 5, 6, 7, 5, 18, 13, 7, 5, 9, 10, 7, 8, 3]),
    ("gerdt-2", &[8, 9]),
    ("gerdt-3", &[8, 16, 14, 10]),
    ("arnborg-lazard", &[7, 7, 7]),
    ("parametric-curve", &[4, 2, 2]),
    ("katsura-4", &[6, 5, 5, 4, 6]),
    ("arnold-1", &[4, 4, 4, 3]),
    ("arnold-2", &[6, 6, 6, 8]),
];

#[test]
fn polynomial_and_term_counts() {
    assert_eq!(BUILTINS.len(), TERM_COUNTS.len());
    for (key, counts) in TERM_COUNTS {
        let sys = builtin(key).unwrap();
        let got: Vec<usize> = sys.polynomials().iter().map(|p| p.terms().len()).collect();
        assert_eq!(got, counts, "{key}");
    }
}

#[test]
fn variable_counts() {
    let vars = |key: &str| builtin(key).unwrap().vars().len();
    assert_eq!(vars("example-2"), 3);
    assert_eq!(vars("cyclic-5"), 5);
    assert_eq!(vars("gerdt-1"), 7);
    assert_eq!(vars("gerdt-2"), 5);
    assert_eq!(vars("parametric-curve"), 4);
    assert_eq!(vars("katsura-4"), 5);
}

#[test]
fn manifest_matches_files() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus");
    let manifest = std::fs::read_to_string(format!("{dir}/MANIFEST.sha256")).unwrap();
    let mut listed = 0;
    for line in manifest.lines().filter(|l| !l.trim().is_empty()) {
        let (digest, file) = line.split_once("  ").expect("sha256sum format");
        let bytes = std::fs::read(format!("{dir}/{file}")).unwrap();
        let actual: String = Sha256::digest(&bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        assert_eq!(actual, digest, "{file}");
        let key = file.trim_end_matches(".txt");
        let builtin = BUILTINS
            .iter()
            .find(|b| b.key == key)
            .expect("listed file is built in");
        assert_eq!(builtin.source.as_bytes(), bytes.as_slice(), "{file}");
        listed += 1;
    }
    assert_eq!(listed, BUILTINS.len());
}

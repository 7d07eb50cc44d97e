//! Benchmark records and their CSV / markdown forms.

use std::fmt;
use std::io;
use std::str::FromStr;

use primebasis::AlgebraError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Ok,
    CoefficientOverflow,
    ImageOverflow,
    Timeout,
}

impl Outcome {
    /// Maps an engine failure to an outcome. Anything other than a capacity
    /// failure or a timeout is a defect and stays an error.
    pub fn from_error(err: &AlgebraError) -> Option<Outcome> {
        match err {
            AlgebraError::CoefficientOverflow(_) => Some(Outcome::CoefficientOverflow),
            AlgebraError::ImageOverflow(_) => Some(Outcome::ImageOverflow),
            AlgebraError::Timeout => Some(Outcome::Timeout),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::CoefficientOverflow => "coefficient-overflow",
            Outcome::ImageOverflow => "image-overflow",
            Outcome::Timeout => "timeout",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ok" => Ok(Outcome::Ok),
            "coefficient-overflow" => Ok(Outcome::CoefficientOverflow),
            "image-overflow" => Ok(Outcome::ImageOverflow),
            "timeout" => Ok(Outcome::Timeout),
            other => Err(format!("unknown outcome `{other}`")),
        }
    }
}

/// One (system, ordering, backend, permutation) measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub system: String,
    pub ordering: String,
    pub backend: String,
    /// Variable order the run used.
    pub permutation: String,
    #[serde(with = "outcome_text")]
    pub outcome: Outcome,
    pub basis_size: Option<usize>,
    /// Median over the repeats; absent unless the outcome is `Ok`.
    pub duration_ms: Option<f64>,
    pub repeats: u32,
}

impl BenchRecord {
    pub fn is_ok(&self) -> bool {
        self.outcome == Outcome::Ok
    }

    /// "12.34 ms / 6" for completed runs, the outcome otherwise.
    pub fn cell(&self) -> String {
        match (self.outcome, self.duration_ms, self.basis_size) {
            (Outcome::Ok, Some(ms), Some(n)) => format!("{ms:.2} ms / {n}"),
            (outcome, ..) => outcome.to_string(),
        }
    }
}

mod outcome_text {
    use super::Outcome;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(outcome: &Outcome, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(outcome.as_str())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Outcome, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn write_csv<W: io::Write>(out: W, records: &[BenchRecord]) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for r in records {
        writer.serialize(r)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn read_csv<R: io::Read>(input: R) -> csv::Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// Plain markdown table with one row per record.
pub fn markdown(records: &[BenchRecord]) -> String {
    let mut out = String::from(
        "| system | ordering | backend | permutation | outcome | basis | ms | repeats |\n\
         |---|---|---|---|---|---|---|---|\n",
    );
    for r in records {
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            r.system,
            r.ordering,
            r.backend,
            r.permutation,
            r.outcome,
            r.basis_size
                .map_or_else(|| "-".to_string(), |n| n.to_string()),
            r.duration_ms
                .map_or_else(|| "-".to_string(), |ms| format!("{ms:.3}")),
            r.repeats,
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<BenchRecord> {
        vec![
            BenchRecord {
                system: "Example 2".into(),
                ordering: "prime".into(),
                backend: "i64".into(),
                permutation: "bca".into(),
                outcome: Outcome::Ok,
                basis_size: Some(6),
                duration_ms: Some(1.25),
                repeats: 5,
            },
            BenchRecord {
                system: "Katsura 4".into(),
                ordering: "total-degree".into(),
                backend: "i64".into(),
                permutation: "xyztu".into(),
                outcome: Outcome::CoefficientOverflow,
                basis_size: None,
                duration_ms: None,
                repeats: 5,
            },
        ]
    }

    #[test]
    fn csv_round_trip() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &sample()).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            "system,ordering,backend,permutation,outcome,basis_size,duration_ms,repeats"
        );
        assert!(text.contains("Katsura 4,total-degree,i64,xyztu,coefficient-overflow,,,5"));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), sample());
    }

    #[test]
    fn outcome_mapping() {
        assert_eq!(
            Outcome::from_error(&AlgebraError::CoefficientOverflow("add")),
            Some(Outcome::CoefficientOverflow)
        );
        assert_eq!(
            Outcome::from_error(&AlgebraError::Timeout),
            Some(Outcome::Timeout)
        );
        assert_eq!(Outcome::from_error(&AlgebraError::ZeroPolynomial), None);
        for o in [
            Outcome::Ok,
            Outcome::CoefficientOverflow,
            Outcome::ImageOverflow,
            Outcome::Timeout,
        ] {
            assert_eq!(o.as_str().parse::<Outcome>().unwrap(), o);
        }
    }

    #[test]
    fn markdown_rows() {
        let md = markdown(&sample());
        assert_eq!(md.lines().count(), 4);
        assert!(md.contains("| Example 2 | prime | i64 | bca | ok | 6 | 1.250 | 5 |"));
        assert_eq!(sample()[1].cell(), "coefficient-overflow");
        assert_eq!(sample()[0].cell(), "1.25 ms / 6");
    }
}

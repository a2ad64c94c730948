//! Finite discrete-time trajectories over named channels.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of per-timestep sample vectors, one value per channel.
///
/// A trajectory of length `L` holds `L + 1` samples indexed `t = 0..=L`;
/// timestamps are the integer indices. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    schema: Vec<String>,
    samples: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn new<S: Into<String>>(schema: Vec<S>, samples: Vec<Vec<f64>>) -> Result<Self> {
        let schema: Vec<String> = schema.into_iter().map(Into::into).collect();
        if samples.len() < 2 {
            return Err(Error::TrajectoryTooShort(samples.len()));
        }
        for (index, sample) in samples.iter().enumerate() {
            if sample.len() != schema.len() {
                return Err(Error::SampleWidth {
                    index,
                    got: sample.len(),
                    expected: schema.len(),
                });
            }
        }
        Ok(Trajectory { schema, samples })
    }

    /// Trajectory length `L` (number of steps; samples run `0..=L`).
    pub fn len(&self) -> usize {
        self.samples.len() - 1
    }

    /// Index of the final sample, equal to `len()`.
    pub fn max_t(&self) -> usize {
        self.samples.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn schema(&self) -> &[String] {
        &self.schema
    }

    pub fn samples(&self) -> &[Vec<f64>] {
        &self.samples
    }

    pub fn channel_index(&self, name: &str) -> Result<usize> {
        self.schema
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| Error::UnknownChannel(name.to_string()))
    }

    /// Value of channel `index` at time `t`.
    pub fn value(&self, index: usize, t: usize) -> f64 {
        self.samples[t][index]
    }
}

#[derive(Serialize, Deserialize)]
struct TrajectoryRecord {
    schema: Vec<String>,
    samples: Vec<Vec<f64>>,
}

/// Serializes trajectories as JSON Lines: one `{"schema": [...], "samples": [[...]]}`
/// object per line.
pub fn write_jsonl<W: Write>(mut out: W, trajectories: &[Trajectory]) -> Result<()> {
    for tau in trajectories {
        let record = TrajectoryRecord {
            schema: tau.schema.clone(),
            samples: tau.samples.clone(),
        };
        serde_json::to_writer(&mut out, &record)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Reads a JSON Lines trajectory stream; blank lines are skipped.
pub fn read_jsonl<R: BufRead>(input: R) -> Result<Vec<Trajectory>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record: TrajectoryRecord = serde_json::from_str(&line)?;
        out.push(Trajectory::new(record.schema, record.samples)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Trajectory {
        Trajectory::new(
            vec!["x", "y"],
            vec![vec![1.0, -1.0], vec![3.0, 2.0], vec![2.0, 3.0]],
        )
        .unwrap()
    }

    #[test]
    fn length_counts_steps_not_samples() {
        let tau = xy();
        assert_eq!(tau.len(), 2);
        assert_eq!(tau.max_t(), 2);
    }

    #[test]
    fn rejects_single_sample() {
        let err = Trajectory::new(vec!["x"], vec![vec![1.0]]).unwrap_err();
        assert!(matches!(err, Error::TrajectoryTooShort(1)));
    }

    #[test]
    fn rejects_ragged_samples() {
        let err = Trajectory::new(vec!["x", "y"], vec![vec![1.0, 2.0], vec![1.0]]).unwrap_err();
        assert!(matches!(err, Error::SampleWidth { index: 1, .. }));
    }

    #[test]
    fn unknown_channel_is_an_error() {
        let tau = xy();
        assert!(matches!(
            tau.channel_index("z"),
            Err(Error::UnknownChannel(_))
        ));
    }

    #[test]
    fn jsonl_round_trip() {
        let original = vec![xy()];
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &original).unwrap();
        let parsed = read_jsonl(buf.as_slice()).unwrap();
        assert_eq!(parsed, original);
    }
}

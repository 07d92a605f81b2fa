use super::{perron_root, AlphaMatrix, PowerOptions, SpectralResult};
use crate::error::{Error, Result};

const EQUITABLE_TOL: f64 = 1e-12;

/// Quotient of a matrix under an equitable vertex partition: entry `(i, j)`
/// is the common row sum of block `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientMatrix {
    pub t: usize,
    pub entries: Vec<f64>,
    pub partition: Vec<Vec<usize>>,
}

impl QuotientMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.t + j]
    }

    pub fn spectral_radius(&self, opts: &PowerOptions) -> Result<SpectralResult> {
        perron_root(self.t, &self.entries, None, opts)
    }
}

pub fn quotient_matrix(m: &AlphaMatrix, partition: &[Vec<usize>]) -> Result<QuotientMatrix> {
    let n = m.dim();
    let mut owner = vec![usize::MAX; n];
    for (p, part) in partition.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::InvalidPartition(format!("part {p} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} outside 0..{n}")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            owner[v] = p;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
    }

    let t = partition.len();
    let mut entries = vec![0.0; t * t];
    let mut worst: Option<(usize, usize, f64)> = None;
    for (i, rows) in partition.iter().enumerate() {
        for (j, cols) in partition.iter().enumerate() {
            let sums: Vec<f64> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m.get(r, c)).sum())
                .collect();
            let mean = sums.iter().sum::<f64>() / sums.len() as f64;
            let dev = sums.iter().map(|s| (s - mean).abs()).fold(0.0, f64::max);
            if dev > EQUITABLE_TOL && worst.map_or(true, |(_, _, d)| dev > d) {
                worst = Some((i, j, dev));
            }
            entries[i * t + j] = mean;
        }
    }
    if let Some((row_part, col_part, deviation)) = worst {
        return Err(Error::NotEquitable {
            row_part,
            col_part,
            deviation,
        });
    }
    Ok(QuotientMatrix {
        t,
        entries,
        partition: partition.to_vec(),
    })
}

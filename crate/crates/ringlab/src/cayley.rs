//! Cayley-table JSON persistence: { label, size, zero, one, add, mul } with
//! n x n nested arrays. Negation is derived on load; validation always runs
//! on load since external tables are untrusted.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Result, RingError};
use crate::ring::FiniteRing;

#[derive(Debug, Serialize, Deserialize)]
pub struct CayleyJson {
    pub label: String,
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl CayleyJson {
    pub fn from_ring(ring: &FiniteRing) -> Result<CayleyJson> {
        if !ring.is_materialized() {
            return Err(RingError::Capacity {
                label: ring.label().to_string(),
                required: ring.size() as u128,
                cap: crate::ring::DEFAULT_MATERIALIZE_BOUND,
            });
        }
        let n = ring.size();
        let rows = |f: &dyn Fn(usize, usize) -> usize| {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        Ok(CayleyJson {
            label: ring.label().to_string(),
            size: n,
            zero: ring.zero(),
            one: ring.one(),
            add: rows(&|a, b| ring.add(a, b)),
            mul: rows(&|a, b| ring.mul(a, b)),
        })
    }

    pub fn into_ring(self, validate_bound: usize, seed: u64) -> Result<Arc<FiniteRing>> {
        if self.add.len() != self.size
            || self.mul.len() != self.size
            || self.add.iter().chain(&self.mul).any(|row| row.len() != self.size)
        {
            return Err(RingError::input(format!(
                "Cayley table for {} is not {n}x{n}",
                self.label,
                n = self.size
            )));
        }
        let ring = FiniteRing::from_tables(
            self.label,
            self.size,
            self.zero,
            self.one,
            self.add.into_iter().flatten().collect(),
            self.mul.into_iter().flatten().collect(),
        )?;
        let report = ring.validate(validate_bound, seed);
        if let Some(v) = report.violation {
            return Err(RingError::Validation {
                label: ring.label().to_string(),
                law: v.law,
                witness: v.witness,
            });
        }
        Ok(Arc::new(ring))
    }
}

pub fn save(ring: &FiniteRing, path: &Path) -> Result<()> {
    let json = CayleyJson::from_ring(ring)?;
    let file = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(file, &json)?;
    Ok(())
}

pub fn load(path: &Path, validate_bound: usize, seed: u64) -> Result<Arc<FiniteRing>> {
    let file = BufReader::new(File::open(path)?);
    let json: CayleyJson = serde_json::from_reader(file)?;
    json.into_ring(validate_bound, seed)
}

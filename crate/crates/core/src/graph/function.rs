use std::ops::Index;

use serde::Serialize;

use crate::error::{Error, Result};

use super::VertexId;

/// An integer per vertex (degree budgets f, h and similar).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexFunction(Vec<i64>);

impl VertexFunction {
    pub fn new(values: Vec<i64>) -> Self {
        Self(values)
    }

    pub fn constant(n: usize, value: i64) -> Self {
        Self(vec![value; n])
    }

    pub fn from_fn(n: usize, f: impl FnMut(VertexId) -> i64) -> Self {
        Self((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn set(&mut self, v: VertexId, value: i64) {
        self.0[v] = value;
    }

    pub(crate) fn check_total(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::Input(format!(
                "vertex function has {} values for {n} vertices",
                self.0.len()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_positive_on(&self, domain: &[VertexId]) -> Result<()> {
        match domain.iter().find(|&&v| self.0[v] < 1) {
            Some(v) => Err(Error::Input(format!(
                "f({v}) = {} is not positive",
                self.0[*v]
            ))),
            None => Ok(()),
        }
    }

    /// Parses either a single integer (uniform) or a `v:int,v:int,...` list;
    /// vertices missing from a list take `default`.
    pub fn parse(spec: &str, n: usize, default: i64) -> Result<Self> {
        let spec = spec.trim();
        if let Ok(c) = spec.parse::<i64>() {
            return Ok(Self::constant(n, c));
        }
        let mut values = vec![default; n];
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (v, x) = item
                .split_once(':')
                .ok_or_else(|| Error::Input(format!("bad function entry `{item}`")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad vertex in `{item}`")))?;
            let x: i64 = x
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad value in `{item}`")))?;
            if v >= n {
                return Err(Error::Input(format!("vertex {v} out of range")));
            }
            values[v] = x;
        }
        Ok(Self(values))
    }
}

impl Index<VertexId> for VertexFunction {
    type Output = i64;

    fn index(&self, v: VertexId) -> &i64 {
        &self.0[v]
    }
}

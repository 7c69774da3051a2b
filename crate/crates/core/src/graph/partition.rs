use serde::Serialize;

use crate::error::{Error, Result};

use super::VertexId;

/// Disjoint nonempty vertex sets. Parts are stored sorted, ordered by their
/// smallest member, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexPartition {
    parts: Vec<Vec<VertexId>>,
}

impl VertexPartition {
    pub fn new(parts: Vec<Vec<VertexId>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for p in &parts {
            if p.is_empty() {
                return Err(Error::Input("partition has an empty part".into()));
            }
            for &v in p {
                if !seen.insert(v) {
                    return Err(Error::Input(format!("vertex {v} appears in two parts")));
                }
            }
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<Vec<VertexId>>) -> Self {
        for p in parts.iter_mut() {
            p.sort_unstable();
        }
        parts.sort_by_key(|p| p[0]);
        Self { parts }
    }

    pub fn singletons(n: usize) -> Self {
        Self {
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when the parts cover exactly `0..n`.
    pub fn is_partition_of(&self, n: usize) -> bool {
        let mut hit = vec![false; n];
        for p in &self.parts {
            for &v in p {
                if v >= n || hit[v] {
                    return false;
                }
                hit[v] = true;
            }
        }
        hit.into_iter().all(|b| b)
    }

    /// `part[v]` = index of the part holding `v`, `usize::MAX` if uncovered.
    pub fn part_index(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                if v < n {
                    idx[v] = i;
                }
            }
        }
        idx
    }

    pub fn part_of(&self, v: VertexId) -> Option<&[VertexId]> {
        self.parts
            .iter()
            .find(|p| p.binary_search(&v).is_ok())
            .map(|p| p.as_slice())
    }
}

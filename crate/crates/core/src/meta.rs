//! Generative provenance of an instance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How an instance came to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    /// Weighted Erdős–Rényi graph: every pair independently `-n` w.p. `p`.
    Er,
    /// Random Turán graph: equal color classes, within-class pairs `-n`.
    Turan,
    /// Random balanced multipartite graph with given class sizes.
    Balanced,
    /// Hand-written instance.
    Manual,
    /// Output of the clique-to-game reduction.
    Reduced,
}

/// Model kind, parameters and seed that produced an instance.
///
/// `class_sizes` is present for multipartite kinds; agents are assigned to
/// classes contiguously (class 0 holds agents `0..class_sizes[0]`, and so
/// on). `unit` is a global denominator for integer weights: the stored
/// integer divided by `unit` is the actual valuation. It is 1 everywhere
/// except after exact symmetrization of an odd-sum asymmetric game.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub kind: ModelKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default = "default_unit", skip_serializing_if = "is_default_unit")]
    pub unit: u64,
}

fn default_unit() -> u64 {
    1
}

fn is_default_unit(u: &u64) -> bool {
    *u == 1
}

impl InstanceMeta {
    pub fn manual(n: usize) -> Self {
        Self {
            kind: ModelKind::Manual,
            n,
            p: None,
            k: None,
            q: None,
            class_sizes: None,
            seed: None,
            unit: 1,
        }
    }

    pub fn er(n: usize, p: f64, seed: u64) -> Self {
        Self {
            p: Some(p),
            seed: Some(seed),
            ..Self::manual(n)
        }
        .with_kind(ModelKind::Er)
    }

    pub fn turan(n: usize, k: usize, p: f64, seed: u64) -> Self {
        Self {
            p: Some(p),
            k: Some(k),
            class_sizes: Some(vec![n / k; k]),
            seed: Some(seed),
            ..Self::manual(n)
        }
        .with_kind(ModelKind::Turan)
    }

    pub fn balanced(class_sizes: Vec<usize>, p: f64, q: f64, seed: u64) -> Self {
        let n = class_sizes.iter().sum();
        Self {
            p: Some(p),
            k: Some(class_sizes.len()),
            q: Some(q),
            class_sizes: Some(class_sizes),
            seed: Some(seed),
            ..Self::manual(n)
        }
        .with_kind(ModelKind::Balanced)
    }

    pub fn reduced(n: usize) -> Self {
        Self {
            kind: ModelKind::Reduced,
            ..Self::manual(n)
        }
    }

    fn with_kind(mut self, kind: ModelKind) -> Self {
        self.kind = kind;
        self
    }

    /// True for the multipartite kinds that carry color classes.
    pub fn is_multipartite(&self) -> bool {
        matches!(self.kind, ModelKind::Turan | ModelKind::Balanced)
    }

    /// Contiguous index ranges of the color classes.
    pub fn class_ranges(&self) -> Result<Vec<std::ops::Range<usize>>> {
        let sizes = self
            .class_sizes
            .as_ref()
            .ok_or_else(|| Error::Mode("instance has no color classes".into()))?;
        let mut ranges = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            ranges.push(start..start + s);
            start += s;
        }
        if start != self.n {
            return Err(Error::Consistency(format!(
                "class sizes sum to {start}, expected n = {}",
                self.n
            )));
        }
        Ok(ranges)
    }

    /// Color class of an agent, when classes are present.
    pub fn class_of(&self, agent: usize) -> Option<usize> {
        let sizes = self.class_sizes.as_ref()?;
        let mut start = 0;
        for (c, &s) in sizes.iter().enumerate() {
            if agent < start + s {
                return Some(c);
            }
            start += s;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_ranges_are_contiguous() {
        let m = InstanceMeta::balanced(vec![3, 3, 2], 0.0, 2.0 / 3.0, 1);
        let r = m.class_ranges().unwrap();
        assert_eq!(r, vec![0..3, 3..6, 6..8]);
        assert_eq!(m.class_of(0), Some(0));
        assert_eq!(m.class_of(5), Some(1));
        assert_eq!(m.class_of(7), Some(2));
        assert_eq!(m.class_of(8), None);
    }

    #[test]
    fn turan_meta_has_equal_classes() {
        let m = InstanceMeta::turan(8, 4, 0.25, 9);
        assert_eq!(m.class_sizes, Some(vec![2, 2, 2, 2]));
        assert_eq!(m.k, Some(4));
    }

    #[test]
    fn unit_is_skipped_when_one() {
        let m = InstanceMeta::manual(2);
        let s = serde_json::to_string(&m).unwrap();
        assert!(!s.contains("unit"));
        let back: InstanceMeta = serde_json::from_str(&s).unwrap();
        assert_eq!(back.unit, 1);
    }
}

//! Partitions of the agent set into coalitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of agents `0..n` into nonempty blocks, always held in
/// canonical form: block labels are `0, 1, 2, ...` in order of first
/// appearance over the agent index. Two partitions are equal iff their
/// canonical assignments are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    assignment: Vec<u32>,
    blocks: Vec<Vec<u32>>,
}

impl Partition {
    /// Builds a partition from arbitrary block labels, relabeling them by
    /// first appearance. Idempotent on canonical input.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Dimension("empty assignment".into()));
        }
        let mut map: Vec<(usize, u32)> = Vec::new();
        let mut assignment = Vec::with_capacity(labels.len());
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for (agent, &raw) in labels.iter().enumerate() {
            let canon = match map.iter().find(|(r, _)| *r == raw) {
                Some(&(_, c)) => c,
                None => {
                    let c = blocks.len() as u32;
                    map.push((raw, c));
                    blocks.push(Vec::new());
                    c
                }
            };
            assignment.push(canon);
            blocks[canon as usize].push(agent as u32);
        }
        Ok(Self { assignment, blocks })
    }

    /// Builds a partition of `0..n` from explicit blocks. The blocks must be
    /// disjoint, nonempty and cover all agents; their order does not matter
    /// (the result is canonicalized).
    pub fn from_blocks(n: usize, blocks: &[Vec<u32>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Dimension("empty block".into()));
            }
            for &agent in block {
                let a = agent as usize;
                if a >= n {
                    return Err(Error::Dimension(format!("agent {a} out of range 0..{n}")));
                }
                if labels[a] != usize::MAX {
                    return Err(Error::Dimension(format!("agent {a} appears twice")));
                }
                labels[a] = b;
            }
        }
        if let Some(missing) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Dimension(format!("agent {missing} is not covered")));
        }
        Self::from_labels(&labels)
    }

    /// Every agent in its own coalition.
    pub fn singletons(n: usize) -> Self {
        let labels: Vec<usize> = (0..n).collect();
        Self::from_labels(&labels).expect("n > 0")
    }

    /// All agents in one coalition.
    pub fn grand(n: usize) -> Self {
        Self::from_labels(&vec![0; n]).expect("n > 0")
    }

    pub fn num_agents(&self) -> usize {
        self.assignment.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Canonical block label per agent.
    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    /// Blocks in label order; agents within each block are ascending.
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_of(&self, agent: usize) -> u32 {
        self.assignment[agent]
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.assignment.len()
    }

    /// Serializes to the `part-v1` JSON format (byte-stable).
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&PartitionJson {
            format: "part-v1",
            assignment: &self.assignment,
        })
        .expect("partition serialization cannot fail")
    }

    /// Parses the `part-v1` JSON format; non-canonical labels are accepted
    /// and normalized.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: PartitionJsonOwned =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("partition JSON: {e}")))?;
        if raw.format != "part-v1" {
            return Err(Error::Parse(format!(
                "unsupported partition format {:?}",
                raw.format
            )));
        }
        Self::from_labels(&raw.assignment)
    }
}

#[derive(Serialize)]
struct PartitionJson<'a> {
    format: &'static str,
    assignment: &'a [u32],
}

#[derive(Deserialize)]
struct PartitionJsonOwned {
    format: String,
    assignment: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabels_by_first_appearance() {
        let p = Partition::from_labels(&[2, 2, 5]).unwrap();
        assert_eq!(p.assignment(), &[0, 0, 1]);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
    }

    #[test]
    fn canonical_input_is_fixed_point() {
        let p = Partition::from_labels(&[0, 1, 0]).unwrap();
        assert_eq!(p.assignment(), &[0, 1, 0]);
        let again = Partition::from_labels(&[0, 1, 0]).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn single_agent() {
        let p = Partition::from_labels(&[9]).unwrap();
        assert_eq!(p.assignment(), &[0]);
    }

    #[test]
    fn empty_assignment_is_rejected() {
        assert!(matches!(
            Partition::from_labels(&[]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn blocks_roundtrip() {
        let p = Partition::from_blocks(4, &[vec![2, 3], vec![0], vec![1]]).unwrap();
        // Canonical order is by first appearance over agent index: agent 0
        // first, then agent 1, then {2,3}.
        assert_eq!(p.assignment(), &[0, 1, 2, 2]);
    }

    #[test]
    fn from_blocks_rejects_bad_covers() {
        assert!(Partition::from_blocks(3, &[vec![0, 1]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::from_blocks(3, &[vec![0, 1, 2, 3]]).is_err());
    }

    #[test]
    fn json_roundtrip_normalizes() {
        let p = Partition::from_labels(&[7, 7, 1, 7]).unwrap();
        let s = p.to_json_string();
        assert_eq!(s, r#"{"format":"part-v1","assignment":[0,0,1,0]}"#);
        assert_eq!(Partition::from_json_str(&s).unwrap(), p);
        let messy = r#"{"format":"part-v1","assignment":[5,5,0,5]}"#;
        assert_eq!(Partition::from_json_str(messy).unwrap(), p);
    }
}

//! Welfare functionals: social welfare, correlation welfare, total value.
//!
//! Social welfare of a partition is the sum of `v_i(j)` over *ordered* pairs
//! `i != j` in a common coalition, so each unordered pair inside a coalition
//! contributes `v_i(j) + v_j(i)` (twice the symmetric weight). Correlation
//! welfare is half the sum, over agents, of within-coalition valuations
//! minus across-coalition valuations. Total value is the sum of all ordered
//! valuations and does not depend on the partition.
//!
//! In exact arithmetic the three are tied together by
//! `2*SW(pi) = 2*CW(pi) + TV` for every partition; integer mode carries
//! correlation welfare as the exact doubled value so the identity holds
//! bit-for-bit.

use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{scalar_at, ValuationMatrix, WeightStore};
use crate::partition::Partition;

/// A welfare value in the instance's arithmetic mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Welfare {
    Int(i64),
    Real(f64),
}

impl Welfare {
    pub fn as_f64(self) -> f64 {
        match self {
            Welfare::Int(x) => x as f64,
            Welfare::Real(x) => x,
        }
    }

    pub fn as_int(self) -> Option<i64> {
        match self {
            Welfare::Int(x) => Some(x),
            Welfare::Real(_) => None,
        }
    }

    /// Exact integer value; panics on real-mode welfare.
    pub fn expect_int(self) -> i64 {
        self.as_int().expect("welfare value is not integer-mode")
    }

    pub fn is_nonnegative(self) -> bool {
        match self {
            Welfare::Int(x) => x >= 0,
            // Real-mode comparisons use the crate-wide 1e-9 tolerance.
            Welfare::Real(x) => x >= -1e-9,
        }
    }
}

impl Serialize for Welfare {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Welfare::Int(x) => s.serialize_i64(*x),
            Welfare::Real(x) => s.serialize_f64(*x),
        }
    }
}

/// Scalar arithmetic shared by the integer and real paths.
pub(crate) trait Scalar:
    Copy
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + 'static
{
    const ZERO: Self;
    fn double(self) -> Self;
    fn wrap(self) -> Welfare;
}

impl Scalar for i64 {
    const ZERO: Self = 0;
    fn double(self) -> Self {
        self * 2
    }
    fn wrap(self) -> Welfare {
        Welfare::Int(self)
    }
}

impl Scalar for f64 {
    const ZERO: Self = 0.0;
    fn double(self) -> Self {
        self * 2.0
    }
    fn wrap(self) -> Welfare {
        Welfare::Real(self)
    }
}

fn check_dims(game: &ValuationMatrix, pi: &Partition) -> Result<()> {
    if pi.num_agents() != game.n() {
        return Err(Error::Dimension(format!(
            "partition covers {} agents, game has {}",
            pi.num_agents(),
            game.n()
        )));
    }
    Ok(())
}

fn sw_generic<T: Scalar>(n: usize, symmetric: bool, w: &[T], pi: &Partition) -> T {
    let mut total = T::ZERO;
    for block in pi.blocks() {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                let (i, j) = (i as usize, j as usize);
                total += scalar_at(w, n, symmetric, i, j);
                total += scalar_at(w, n, symmetric, j, i);
            }
        }
    }
    total
}

fn cw_twice_generic<T: Scalar>(n: usize, symmetric: bool, w: &[T], pi: &Partition) -> T {
    // 2*CW = sum_i (within_i - across_i) = sum_i (2*within_i - row_i)
    let mut total = T::ZERO;
    for i in 0..n {
        let bi = pi.block_of(i);
        let mut within = T::ZERO;
        let mut row = T::ZERO;
        for j in 0..n {
            if j == i {
                continue;
            }
            let v = scalar_at(w, n, symmetric, i, j);
            row += v;
            if pi.block_of(j) == bi {
                within += v;
            }
        }
        total += within.double() - row;
    }
    total
}

fn tv_generic<T: Scalar>(n: usize, symmetric: bool, w: &[T]) -> T {
    let mut total = T::ZERO;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                total += scalar_at(w, n, symmetric, i, j);
            }
        }
    }
    total
}

fn utilities_generic<T: Scalar>(n: usize, symmetric: bool, w: &[T], pi: &Partition) -> Vec<T> {
    let mut out = vec![T::ZERO; n];
    for block in pi.blocks() {
        for &i in block {
            let i = i as usize;
            let mut u = T::ZERO;
            for &j in block {
                let j = j as usize;
                if j != i {
                    u += scalar_at(w, n, symmetric, i, j);
                }
            }
            out[i] = u;
        }
    }
    out
}

macro_rules! dispatch {
    ($game:expr, $w:ident => $body:expr) => {
        match $game.store() {
            WeightStore::Int($w) => $body.wrap(),
            WeightStore::Real($w) => $body.wrap(),
        }
    };
}

/// Social welfare of a partition: ordered within-coalition valuations.
pub fn social_welfare(game: &ValuationMatrix, pi: &Partition) -> Result<Welfare> {
    check_dims(game, pi)?;
    Ok(dispatch!(game, w => sw_generic(game.n(), game.is_symmetric(), w, pi)))
}

/// Twice the correlation welfare of a partition (exact in integer mode; the
/// true value is half of this and may be a half-integer).
pub fn correlation_welfare_twice(game: &ValuationMatrix, pi: &Partition) -> Result<Welfare> {
    check_dims(game, pi)?;
    Ok(dispatch!(game, w => cw_twice_generic(game.n(), game.is_symmetric(), w, pi)))
}

/// Total value of the game: the sum of all ordered valuations.
pub fn total_value(game: &ValuationMatrix) -> Welfare {
    dispatch!(game, w => tv_generic(game.n(), game.is_symmetric(), w))
}

/// Utility of each agent under the partition (sum of valuations of its
/// coalition mates).
pub fn per_agent_utilities(game: &ValuationMatrix, pi: &Partition) -> Result<Vec<Welfare>> {
    check_dims(game, pi)?;
    Ok(match game.store() {
        WeightStore::Int(w) => utilities_generic(game.n(), game.is_symmetric(), w, pi)
            .into_iter()
            .map(Welfare::Int)
            .collect(),
        WeightStore::Real(w) => utilities_generic(game.n(), game.is_symmetric(), w, pi)
            .into_iter()
            .map(Welfare::Real)
            .collect(),
    })
}

/// All welfare quantities of a `(game, partition)` pair.
#[derive(Clone, Debug, Serialize)]
pub struct WelfareReport {
    pub sw: Welfare,
    /// Twice the correlation welfare (exact in integer mode).
    pub cw2: Welfare,
    pub tv: Welfare,
    #[serde(serialize_with = "serialize_welfare_seq")]
    pub per_agent_utility: Vec<Welfare>,
}

fn serialize_welfare_seq<S: Serializer>(
    v: &[Welfare],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(x)?;
    }
    seq.end()
}

impl WelfareReport {
    /// Correlation welfare as a double (maybe a half-integer).
    pub fn cw(&self) -> f64 {
        self.cw2.as_f64() / 2.0
    }
}

pub fn welfare_report(game: &ValuationMatrix, pi: &Partition) -> Result<WelfareReport> {
    Ok(WelfareReport {
        sw: social_welfare(game, pi)?,
        cw2: correlation_welfare_twice(game, pi)?,
        tv: total_value(game),
        per_agent_utility: per_agent_utilities(game, pi)?,
    })
}

/// First within-coalition pair with a negative valuation in either
/// direction, if any. On aversion games this is the "enemies share a
/// coalition" detector.
pub fn negative_pair_within(
    game: &ValuationMatrix,
    pi: &Partition,
) -> Result<Option<(u32, u32)>> {
    check_dims(game, pi)?;
    for block in pi.blocks() {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                let fwd = game.weight(i as usize, j as usize).as_f64();
                let back = game.weight(j as usize, i as usize).as_f64();
                if fwd < 0.0 || back < 0.0 {
                    return Ok(Some((i, j)));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meta::InstanceMeta;

    /// The running 3-agent example: v(0,1) = 1, v(0,2) = -x, v(1,2) = 0.
    pub(crate) fn example_game(x: i64) -> ValuationMatrix {
        ValuationMatrix::symmetric_int(3, vec![1, -x, 0], InstanceMeta::manual(3)).unwrap()
    }

    #[test]
    fn example_social_welfare() {
        let g = example_game(2);
        let best = Partition::from_labels(&[0, 0, 1]).unwrap();
        assert_eq!(social_welfare(&g, &best).unwrap(), Welfare::Int(2));
        assert_eq!(
            social_welfare(&g, &Partition::singletons(3)).unwrap(),
            Welfare::Int(0)
        );
    }

    #[test]
    fn triangle_grand_coalition() {
        let g = ValuationMatrix::symmetric_int(3, vec![1, 1, 1], InstanceMeta::manual(3)).unwrap();
        assert_eq!(
            social_welfare(&g, &Partition::grand(3)).unwrap(),
            Welfare::Int(6)
        );
    }

    #[test]
    fn example_correlation_welfare() {
        let g = example_game(2);
        // CW(singletons) = x - 1 = 1, CW({01|2}) = 1 + x = 3.
        assert_eq!(
            correlation_welfare_twice(&g, &Partition::singletons(3)).unwrap(),
            Welfare::Int(2)
        );
        let best = Partition::from_labels(&[0, 0, 1]).unwrap();
        assert_eq!(
            correlation_welfare_twice(&g, &best).unwrap(),
            Welfare::Int(6)
        );
    }

    #[test]
    fn grand_coalition_cw_is_half_tv() {
        let g = example_game(2);
        let grand = Partition::grand(3);
        assert_eq!(
            correlation_welfare_twice(&g, &grand).unwrap(),
            total_value(&g)
        );
        // and the singleton partition mirrors it
        let minus_tv = match total_value(&g) {
            Welfare::Int(x) => Welfare::Int(-x),
            Welfare::Real(x) => Welfare::Real(-x),
        };
        assert_eq!(
            correlation_welfare_twice(&g, &Partition::singletons(3)).unwrap(),
            minus_tv
        );
    }

    #[test]
    fn example_total_value() {
        assert_eq!(total_value(&example_game(2)), Welfare::Int(-2));
        let zero =
            ValuationMatrix::symmetric_int(3, vec![0, 0, 0], InstanceMeta::manual(3)).unwrap();
        assert_eq!(total_value(&zero), Welfare::Int(0));
        let ones =
            ValuationMatrix::symmetric_int(3, vec![1, 1, 1], InstanceMeta::manual(3)).unwrap();
        assert_eq!(total_value(&ones), Welfare::Int(6));
    }

    #[test]
    fn identity_holds_on_the_example() {
        let g = example_game(2);
        for labels in [[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]] {
            let pi = Partition::from_labels(&labels).unwrap();
            let sw = social_welfare(&g, &pi).unwrap().expect_int();
            let cw2 = correlation_welfare_twice(&g, &pi).unwrap().expect_int();
            let tv = total_value(&g).expect_int();
            assert_eq!(2 * sw, cw2 + tv, "partition {labels:?}");
        }
    }

    #[test]
    fn utilities_sum_to_social_welfare() {
        let g = example_game(3);
        let pi = Partition::from_labels(&[0, 0, 0]).unwrap();
        let us = per_agent_utilities(&g, &pi).unwrap();
        let sum: i64 = us.iter().map(|u| u.expect_int()).sum();
        assert_eq!(sum, social_welfare(&g, &pi).unwrap().expect_int());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = example_game(1);
        let pi = Partition::singletons(4);
        assert!(matches!(
            social_welfare(&g, &pi),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn negative_pair_detector() {
        let g = example_game(2);
        let grand = Partition::grand(3);
        assert_eq!(negative_pair_within(&g, &grand).unwrap(), Some((0, 2)));
        let split = Partition::from_labels(&[0, 0, 1]).unwrap();
        assert_eq!(negative_pair_within(&g, &split).unwrap(), None);
    }

    #[test]
    fn asymmetric_social_welfare_counts_ordered_pairs() {
        let g = ValuationMatrix::asymmetric_int(
            3,
            vec![1, 2, 3, 4, 5, 6],
            InstanceMeta::manual(3),
        )
        .unwrap();
        let pi = Partition::from_labels(&[0, 0, 1]).unwrap();
        // within block {0,1}: v_0(1) + v_1(0) = 1 + 3
        assert_eq!(social_welfare(&g, &pi).unwrap(), Welfare::Int(4));
    }

    #[test]
    fn report_is_consistent() {
        let g = example_game(2);
        let pi = Partition::from_labels(&[0, 0, 1]).unwrap();
        let r = welfare_report(&g, &pi).unwrap();
        assert_eq!(r.sw, Welfare::Int(2));
        assert_eq!(r.cw2, Welfare::Int(6));
        assert_eq!(r.cw(), 3.0);
        assert_eq!(r.tv, Welfare::Int(-2));
    }
}

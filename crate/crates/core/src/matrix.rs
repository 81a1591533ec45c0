//! Dense storage of pairwise valuations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::meta::{InstanceMeta, ModelKind};
use crate::welfare::Welfare;

/// Arithmetic mode of an instance.
///
/// Integer mode keeps all welfare sums exact (no overflow for `n <= 10^4`
/// and `|weight| <= n`: sums are bounded by `n^3 < 2^63`). Real mode uses
/// doubles; comparisons downstream use a `1e-9` tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Int,
    Real,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Int => "int",
            Mode::Real => "real",
        }
    }
}

/// Weights in the instance-wide mode.
#[derive(Clone, Debug, PartialEq)]
pub enum WeightStore {
    Int(Vec<i64>),
    Real(Vec<f64>),
}

impl WeightStore {
    fn len(&self) -> usize {
        match self {
            WeightStore::Int(w) => w.len(),
            WeightStore::Real(w) => w.len(),
        }
    }
}

/// Pairwise valuations of an `n`-agent game.
///
/// Self-valuations are implicitly 0. Symmetric games store the upper
/// triangle in row-major order (`n(n-1)/2` entries); asymmetric games store
/// all ordered off-diagonal entries row-major (`n(n-1)` entries).
#[derive(Clone, Debug, PartialEq)]
pub struct ValuationMatrix {
    n: usize,
    symmetric: bool,
    store: WeightStore,
    meta: InstanceMeta,
}

/// Position of the unordered pair `(i, j)`, `i < j`, in the upper triangle.
#[inline]
pub(crate) fn sym_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Position of the ordered pair `(i, j)`, `i != j`, in the off-diagonal grid.
#[inline]
pub(crate) fn asym_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < n && j < n);
    i * (n - 1) + if j < i { j } else { j - 1 }
}

/// Valuation of `i` for `j` in a raw weight slice.
#[inline]
pub(crate) fn scalar_at<T: Copy>(w: &[T], n: usize, symmetric: bool, i: usize, j: usize) -> T {
    if symmetric {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        w[sym_index(n, a, b)]
    } else {
        w[asym_index(n, i, j)]
    }
}

impl ValuationMatrix {
    fn checked(
        n: usize,
        symmetric: bool,
        store: WeightStore,
        meta: InstanceMeta,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("game must have at least one agent".into()));
        }
        let expect = if symmetric { n * (n - 1) / 2 } else { n * (n - 1) };
        if store.len() != expect {
            return Err(Error::Dimension(format!(
                "weight array has {} entries, expected {expect} for n = {n}",
                store.len()
            )));
        }
        if meta.n != n {
            return Err(Error::Consistency(format!(
                "meta.n = {} does not match n = {n}",
                meta.n
            )));
        }
        Ok(Self {
            n,
            symmetric,
            store,
            meta,
        })
    }

    /// Symmetric integer game from upper-triangle weights.
    pub fn symmetric_int(n: usize, weights: Vec<i64>, meta: InstanceMeta) -> Result<Self> {
        Self::checked(n, true, WeightStore::Int(weights), meta)
    }

    /// Symmetric real game from upper-triangle weights.
    pub fn symmetric_real(n: usize, weights: Vec<f64>, meta: InstanceMeta) -> Result<Self> {
        Self::checked(n, true, WeightStore::Real(weights), meta)
    }

    /// Asymmetric integer game from ordered off-diagonal weights.
    pub fn asymmetric_int(n: usize, weights: Vec<i64>, meta: InstanceMeta) -> Result<Self> {
        Self::checked(n, false, WeightStore::Int(weights), meta)
    }

    /// Asymmetric real game from ordered off-diagonal weights.
    pub fn asymmetric_real(n: usize, weights: Vec<f64>, meta: InstanceMeta) -> Result<Self> {
        Self::checked(n, false, WeightStore::Real(weights), meta)
    }

    /// Symmetric integer game with weights given by a function of `i < j`.
    pub fn build_symmetric_int(
        n: usize,
        meta: InstanceMeta,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Result<Self> {
        let mut w = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                w.push(f(i, j));
            }
        }
        Self::symmetric_int(n, w, meta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        match self.store {
            WeightStore::Int(_) => Mode::Int,
            WeightStore::Real(_) => Mode::Real,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn meta(&self) -> &InstanceMeta {
        &self.meta
    }

    pub fn meta_mut(&mut self) -> &mut InstanceMeta {
        &mut self.meta
    }

    pub fn store(&self) -> &WeightStore {
        &self.store
    }

    pub(crate) fn int_slice(&self) -> Option<&[i64]> {
        match &self.store {
            WeightStore::Int(w) => Some(w),
            WeightStore::Real(_) => None,
        }
    }

    /// Valuation of agent `i` for agent `j` (`v_i(j)`); 0 when `i == j`.
    pub fn weight(&self, i: usize, j: usize) -> Welfare {
        assert!(i < self.n && j < self.n);
        if i == j {
            return match self.store {
                WeightStore::Int(_) => Welfare::Int(0),
                WeightStore::Real(_) => Welfare::Real(0.0),
            };
        }
        match &self.store {
            WeightStore::Int(w) => Welfare::Int(scalar_at(w, self.n, self.symmetric, i, j)),
            WeightStore::Real(w) => Welfare::Real(scalar_at(w, self.n, self.symmetric, i, j)),
        }
    }

    /// Integer valuation of `i` for `j`; panics on real-mode games.
    pub fn int_weight(&self, i: usize, j: usize) -> i64 {
        if i == j {
            return 0;
        }
        match &self.store {
            WeightStore::Int(w) => scalar_at(w, self.n, self.symmetric, i, j),
            WeightStore::Real(_) => panic!("int_weight on a real-mode game"),
        }
    }

    /// Symmetrizes valuations: `v(i,j) = (v_i(j) + v_j(i)) / 2`.
    ///
    /// Every partition keeps its social welfare. In integer mode the result
    /// stays exact: if some pair sum is odd, the sums themselves are stored
    /// and the meta `unit` doubles; otherwise the halves are stored and the
    /// unit is unchanged. Symmetric input is returned as-is.
    pub fn symmetrize(&self) -> ValuationMatrix {
        if self.symmetric {
            return self.clone();
        }
        let n = self.n;
        let mut meta = self.meta.clone();
        let store = match &self.store {
            WeightStore::Int(w) => {
                let mut sums = Vec::with_capacity(n * (n - 1) / 2);
                for i in 0..n {
                    for j in i + 1..n {
                        sums.push(w[asym_index(n, i, j)] + w[asym_index(n, j, i)]);
                    }
                }
                if sums.iter().all(|s| s % 2 == 0) {
                    for s in &mut sums {
                        *s /= 2;
                    }
                } else {
                    meta.unit *= 2;
                }
                WeightStore::Int(sums)
            }
            WeightStore::Real(w) => {
                let mut avg = Vec::with_capacity(n * (n - 1) / 2);
                for i in 0..n {
                    for j in i + 1..n {
                        avg.push((w[asym_index(n, i, j)] + w[asym_index(n, j, i)]) / 2.0);
                    }
                }
                WeightStore::Real(avg)
            }
        };
        ValuationMatrix {
            n,
            symmetric: true,
            store,
            meta,
        }
    }

    /// The incompatibility weight of an aversion game on `n` agents.
    pub fn aversion_negative(&self) -> i64 {
        -(self.n as i64)
    }

    /// True when every weight is `1` or at most `-n`: the two-valued
    /// friends/enemies regime all stochastic-model algorithms assume.
    /// Induced subgames of larger aversion games qualify (their negative
    /// weights are `-n_original <= -n`).
    pub fn is_aversion(&self) -> bool {
        if !self.symmetric {
            return false;
        }
        let neg = self.aversion_negative();
        match &self.store {
            WeightStore::Int(w) => w.iter().all(|&x| x == 1 || x <= neg),
            WeightStore::Real(_) => false,
        }
    }

    /// Serializes to the `ashg-v1` JSON format (byte-stable: fixed key
    /// order, integer weights rendered without a decimal point).
    pub fn to_json_string(&self) -> String {
        let out = match &self.store {
            WeightStore::Int(w) => serde_json::to_string(&GameJsonOut {
                format: "ashg-v1",
                n: self.n,
                mode: "int",
                symmetric: self.symmetric,
                weights: w,
                meta: &self.meta,
            }),
            WeightStore::Real(w) => serde_json::to_string(&GameJsonOut {
                format: "ashg-v1",
                n: self.n,
                mode: "real",
                symmetric: self.symmetric,
                weights: w,
                meta: &self.meta,
            }),
        };
        out.expect("game serialization cannot fail")
    }

    /// Parses the `ashg-v1` JSON format.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GameJsonIn =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("game JSON: {e}")))?;
        if raw.format != "ashg-v1" {
            return Err(Error::Parse(format!(
                "unsupported game format {:?}",
                raw.format
            )));
        }
        let store = match raw.mode.as_str() {
            "int" => {
                let mut w = Vec::with_capacity(raw.weights.len());
                for (idx, v) in raw.weights.iter().enumerate() {
                    let x = v.as_i64().ok_or_else(|| {
                        Error::Parse(format!("weight #{idx} is not a 64-bit integer: {v}"))
                    })?;
                    w.push(x);
                }
                WeightStore::Int(w)
            }
            "real" => {
                let mut w = Vec::with_capacity(raw.weights.len());
                for (idx, v) in raw.weights.iter().enumerate() {
                    let x = v
                        .as_f64()
                        .ok_or_else(|| Error::Parse(format!("weight #{idx} is not a number")))?;
                    w.push(x);
                }
                WeightStore::Real(w)
            }
            other => return Err(Error::Parse(format!("unknown mode {other:?}"))),
        };
        Self::checked(raw.n, raw.symmetric, store, raw.meta)
    }
}

#[derive(Serialize)]
struct GameJsonOut<'a, T> {
    format: &'static str,
    n: usize,
    mode: &'static str,
    symmetric: bool,
    weights: &'a [T],
    meta: &'a InstanceMeta,
}

#[derive(Deserialize)]
struct GameJsonIn {
    format: String,
    n: usize,
    mode: String,
    symmetric: bool,
    weights: Vec<serde_json::Number>,
    meta: InstanceMeta,
}

/// Accepts kinds whose weights are hand-written rather than sampled.
pub fn manual_like(kind: ModelKind) -> bool {
    matches!(kind, ModelKind::Manual | ModelKind::Reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn game3(w01: i64, w02: i64, w12: i64) -> ValuationMatrix {
        ValuationMatrix::symmetric_int(3, vec![w01, w02, w12], InstanceMeta::manual(3)).unwrap()
    }

    #[test]
    fn triangle_indexing() {
        let g = game3(1, -2, 0);
        assert_eq!(g.int_weight(0, 1), 1);
        assert_eq!(g.int_weight(1, 0), 1);
        assert_eq!(g.int_weight(0, 2), -2);
        assert_eq!(g.int_weight(1, 2), 0);
        assert_eq!(g.int_weight(2, 2), 0);
    }

    #[test]
    fn asymmetric_indexing() {
        // ordered pairs row-major: (0,1) (0,2) (1,0) (1,2) (2,0) (2,1)
        let g = ValuationMatrix::asymmetric_int(
            3,
            vec![1, 2, 3, 4, 5, 6],
            InstanceMeta::manual(3),
        )
        .unwrap();
        assert_eq!(g.int_weight(0, 1), 1);
        assert_eq!(g.int_weight(0, 2), 2);
        assert_eq!(g.int_weight(1, 0), 3);
        assert_eq!(g.int_weight(1, 2), 4);
        assert_eq!(g.int_weight(2, 0), 5);
        assert_eq!(g.int_weight(2, 1), 6);
    }

    #[test]
    fn wrong_length_is_rejected() {
        assert!(ValuationMatrix::symmetric_int(3, vec![1, 2], InstanceMeta::manual(3)).is_err());
    }

    #[test]
    fn symmetrize_cancels_opposite_pair() {
        // v_0(1) = 1, v_1(0) = -1 -> v(0,1) = 0
        let g =
            ValuationMatrix::asymmetric_int(2, vec![1, -1], InstanceMeta::manual(2)).unwrap();
        let s = g.symmetrize();
        assert!(s.is_symmetric());
        assert_eq!(s.int_weight(0, 1), 0);
        assert_eq!(s.meta().unit, 1);
    }

    #[test]
    fn symmetrize_averages_even_sums_exactly() {
        // v_0(1) = 3, v_1(0) = 1 -> v(0,1) = 2
        let g = ValuationMatrix::asymmetric_int(2, vec![3, 1], InstanceMeta::manual(2)).unwrap();
        let s = g.symmetrize();
        assert_eq!(s.int_weight(0, 1), 2);
        assert_eq!(s.meta().unit, 1);
    }

    #[test]
    fn symmetrize_doubles_unit_on_odd_sum() {
        let g = ValuationMatrix::asymmetric_int(2, vec![1, 0], InstanceMeta::manual(2)).unwrap();
        let s = g.symmetrize();
        assert_eq!(s.int_weight(0, 1), 1); // stored sum, unit 2 => value 1/2
        assert_eq!(s.meta().unit, 2);
    }

    #[test]
    fn symmetrize_is_identity_on_symmetric_input() {
        let g = game3(1, -2, 0);
        assert_eq!(g.symmetrize(), g);
    }

    #[test]
    fn aversion_detection() {
        let n = 3;
        let g = ValuationMatrix::symmetric_int(
            n,
            vec![1, -(n as i64), 1],
            InstanceMeta::manual(n),
        )
        .unwrap();
        assert!(g.is_aversion());
        assert!(!game3(1, -2, 0).is_aversion());
        // Weights more negative than -n also qualify (induced subgames).
        let h = ValuationMatrix::symmetric_int(n, vec![1, -8, 1], InstanceMeta::manual(n)).unwrap();
        assert!(h.is_aversion());
    }

    #[test]
    fn json_roundtrip_is_byte_stable() {
        let g = game3(1, -2, 0);
        let s = g.to_json_string();
        assert_eq!(
            s,
            r#"{"format":"ashg-v1","n":3,"mode":"int","symmetric":true,"weights":[1,-2,0],"meta":{"kind":"manual","n":3}}"#
        );
        let back = ValuationMatrix::from_json_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), s);
    }

    #[test]
    fn real_mode_json_roundtrip() {
        let g = ValuationMatrix::symmetric_real(
            3,
            vec![1.0, -0.5, 0.0],
            InstanceMeta::manual(3),
        )
        .unwrap();
        let s = g.to_json_string();
        let back = ValuationMatrix::from_json_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json_string(), s);
    }

    #[test]
    fn int_file_rejects_fractional_weights() {
        let s = r#"{"format":"ashg-v1","n":2,"mode":"int","symmetric":true,"weights":[0.5],"meta":{"kind":"manual","n":2}}"#;
        assert!(matches!(
            ValuationMatrix::from_json_str(s),
            Err(Error::Parse(_))
        ));
    }
}

//! Seeded random instance models.
//!
//! All three models produce symmetric aversion games: every pair of agents
//! is either compatible (weight 1) or incompatible (weight `-n`).
//! Sampling order is pinned: unordered pairs `(i, j)`, `i < j`, row-major,
//! one generator draw per pair regardless of the model, so an instance is a
//! pure function of `(kind, parameters, seed)`.

use crate::error::{Error, Result};
use crate::matrix::ValuationMatrix;
use crate::meta::InstanceMeta;
use crate::rng::SplitMix64;

/// Weighted Erdős–Rényi game: each pair independently takes weight `-n`
/// with probability `p` and weight `1` otherwise.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<ValuationMatrix> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter(format!(
            "edge probability p = {p} must lie strictly inside (0, 1)"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    sample_aversion(n, InstanceMeta::er(n, p, seed), |_, _| p, &mut || {
        rng.next_f64()
    })
}

/// Random Turán game: `k` equal color classes (`k` must divide `n`);
/// within-class pairs are incompatible with probability 1, cross-class
/// pairs with probability `p`. The endpoints `p = 0` and `p = 1` are
/// accepted as deterministic sanity cases.
pub fn gen_turan(n: usize, k: usize, p: f64, seed: u64) -> Result<ValuationMatrix> {
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k} must be at least 2")));
    }
    if n == 0 || n % k != 0 {
        return Err(Error::Parameter(format!("k = {k} must divide n = {n}")));
    }
    check_probability(p)?;
    let class_size = n / k;
    let mut rng = SplitMix64::new(seed);
    sample_aversion(
        n,
        InstanceMeta::turan(n, k, p, seed),
        |i, j| {
            if i / class_size == j / class_size {
                1.0
            } else {
                p
            }
        },
        &mut || rng.next_f64(),
    )
}

/// Random balanced multipartite game with explicit class sizes
/// (nonincreasing; the smallest must be at least `q` times the largest).
pub fn gen_balanced(class_sizes: &[usize], p: f64, q: f64, seed: u64) -> Result<ValuationMatrix> {
    let k = class_sizes.len();
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k} must be at least 2")));
    }
    if class_sizes.iter().any(|&s| s == 0) {
        return Err(Error::Parameter("empty color class".into()));
    }
    if class_sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parameter(
            "class sizes must be nonincreasing".into(),
        ));
    }
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::Parameter(format!(
            "balance ratio q = {q} must lie in (0, 1]"
        )));
    }
    let first = class_sizes[0] as f64;
    let last = *class_sizes.last().unwrap() as f64;
    if last < q * first - 1e-9 {
        return Err(Error::Parameter(format!(
            "smallest class {last} violates the balance bound q*|V_1| = {}",
            q * first
        )));
    }
    check_probability(p)?;
    let n: usize = class_sizes.iter().sum();
    let meta = InstanceMeta::balanced(class_sizes.to_vec(), p, q, seed);
    let class_of = {
        let mut map = vec![0usize; n];
        let mut start = 0;
        for (c, &s) in class_sizes.iter().enumerate() {
            for slot in &mut map[start..start + s] {
                *slot = c;
            }
            start += s;
        }
        map
    };
    let mut rng = SplitMix64::new(seed);
    sample_aversion(
        n,
        meta,
        |i, j| if class_of[i] == class_of[j] { 1.0 } else { p },
        &mut || rng.next_f64(),
    )
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!(
            "perturbation probability p = {p} must lie in [0, 1]"
        )));
    }
    Ok(())
}

/// One draw per unordered pair in row-major order; a pair gets weight `-n`
/// when its draw falls below the pair's incompatibility threshold. The draw
/// source is injectable so tests can force all-compatible or
/// all-incompatible streams.
fn sample_aversion(
    n: usize,
    meta: InstanceMeta,
    threshold: impl Fn(usize, usize) -> f64,
    draw: &mut impl FnMut() -> f64,
) -> Result<ValuationMatrix> {
    if n == 0 {
        return Err(Error::Parameter("n must be at least 1".into()));
    }
    let neg = -(n as i64);
    let mut weights = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let u = draw();
            weights.push(if u < threshold(i, j) { neg } else { 1 });
        }
    }
    ValuationMatrix::symmetric_int(n, weights, meta)
}

//! Two-block correlation-welfare maximization and the social-welfare
//! approximation it yields on games with nonnegative total value.
//!
//! Over two-block partitions, social welfare and correlation welfare rank
//! partitions identically (they differ by the constant `TV/2`), so a
//! two-block CW maximizer is also a two-block SW maximizer. For games whose
//! total value is nonnegative, the best of {that partition, the singleton
//! partition} approximates the unrestricted social-welfare optimum: a
//! uniform random assignment of optimal coalitions to two sides shows the
//! two-sided space loses at most a factor of 2.
//!
//! The published randomized rounding machinery behind the logarithmic CW
//! guarantee is deliberately not reimplemented here; the maximizer is a
//! pluggable backend with an exact small-instance realization and a
//! restarted single-swap local search.

use crate::error::{Error, Result};
use crate::exact::{max_cw_exact_two, EnumerationBudget};
use crate::matrix::{scalar_at, ValuationMatrix, WeightStore};
use crate::partition::Partition;
use crate::rng::{substream_seed, SplitMix64};
use crate::welfare::{social_welfare, total_value, Scalar, Welfare};

/// Strategy for maximizing correlation welfare over two-block partitions.
#[derive(Clone, Copy, Debug)]
pub enum TwoPartitionBackend {
    /// Exhaustive enumeration (refuses instances above budget).
    Exact { budget: EnumerationBudget },
    /// Best-improvement single-agent swaps with seeded restarts. Always
    /// terminates: every move strictly increases CW and states are finite.
    LocalSearch {
        max_iters: usize,
        restarts: usize,
        seed: u64,
    },
}

impl TwoPartitionBackend {
    pub fn exact() -> Self {
        Self::Exact {
            budget: EnumerationBudget::default(),
        }
    }

    pub fn local_search(restarts: usize, seed: u64) -> Self {
        Self::LocalSearch {
            max_iters: 10_000,
            restarts,
            seed,
        }
    }
}

/// Maximizes correlation welfare over partitions with at most two blocks.
///
/// Returns the partition and twice its correlation welfare (exact in
/// integer mode). The exact backend searches the `2^(n-1) - 1` genuine
/// bipartitions; local search may empty one side, in which case the result
/// is the grand coalition (one block).
pub fn maximize_cw_two(
    game: &ValuationMatrix,
    backend: &TwoPartitionBackend,
) -> Result<(Partition, Welfare)> {
    if !game.is_symmetric() {
        return Err(Error::Mode(
            "two-block maximization requires a symmetric game".into(),
        ));
    }
    match backend {
        TwoPartitionBackend::Exact { budget } => max_cw_exact_two(game, budget),
        TwoPartitionBackend::LocalSearch {
            max_iters,
            restarts,
            seed,
        } => match game.store() {
            WeightStore::Int(w) => local_search_generic(game.n(), w, *max_iters, *restarts, *seed)
                .map(|(p, v)| (p, v.wrap())),
            WeightStore::Real(w) => local_search_generic(game.n(), w, *max_iters, *restarts, *seed)
                .map(|(p, v)| (p, v.wrap())),
        },
    }
}

fn local_search_generic<T: Scalar>(
    n: usize,
    w: &[T],
    max_iters: usize,
    restarts: usize,
    seed: u64,
) -> Result<(Partition, T)> {
    // For a symmetric game and sides s_i in {-1, +1}:
    //   2*CW = 2 * sum_{i<j} v(i,j) * s_i * s_j.
    // Track g[i] = sum_j v(i,j) * s_j; flipping i changes 2*CW by
    // -4 * s_i * g[i] and each g[j] by -2 * s_i * v(i,j).
    let restarts = restarts.max(1);
    let mut best: Option<(T, Vec<bool>)> = None;
    for r in 0..restarts {
        let mut rng = SplitMix64::new(substream_seed(seed, r as u64));
        let mut side: Vec<bool> = (0..n).map(|_| rng.next_bool()).collect();
        let mut gain: Vec<T> = (0..n)
            .map(|i| {
                let mut s = T::ZERO;
                for j in 0..n {
                    if j != i {
                        let v = scalar_at(w, n, true, i, j);
                        s += if side[j] { -v } else { v };
                    }
                }
                s
            })
            .collect();
        let mut cw2 = {
            let mut s = T::ZERO;
            for i in 0..n {
                for j in i + 1..n {
                    let v = scalar_at(w, n, true, i, j);
                    let prod = if side[i] == side[j] { v } else { -v };
                    s += prod;
                }
            }
            s.double()
        };
        for _ in 0..max_iters {
            // Best single-agent move: flipping i adds -2 * s_i * g[i] to CW,
            // i.e. -4 * s_i * g[i] to 2*CW. Ties go to the lowest index.
            let mut chosen: Option<(usize, T)> = None;
            for i in 0..n {
                let delta = {
                    let d = gain[i].double().double();
                    if side[i] {
                        d
                    } else {
                        -d
                    }
                };
                if delta > T::ZERO && chosen.as_ref().map_or(true, |(_, b)| delta > *b) {
                    chosen = Some((i, delta));
                }
            }
            let Some((i, delta)) = chosen else { break };
            cw2 += delta;
            let s_old_positive = !side[i];
            for j in 0..n {
                if j == i {
                    continue;
                }
                let v = scalar_at(w, n, true, i, j);
                if s_old_positive {
                    gain[j] -= v.double();
                } else {
                    gain[j] += v.double();
                }
            }
            // gain[i] itself sums over the *other* agents' sides, so the
            // flip of i leaves it unchanged.
            side[i] = !side[i];
        }
        if best.as_ref().map_or(true, |(b, _)| cw2 > *b) {
            best = Some((cw2, side));
        }
    }
    let (cw2, side) = best.expect("at least one restart");
    let labels: Vec<usize> = side.iter().map(|&s| s as usize).collect();
    Ok((Partition::from_labels(&labels)?, cw2))
}

/// Outcome of the nonnegative-total-value approximation.
#[derive(Clone, Debug)]
pub struct NonNegTvOutcome {
    pub partition: Partition,
    /// False when the precondition `TV >= 0` did not hold; the returned
    /// partition is still valid but carries no approximation guarantee.
    pub tv_nonnegative: bool,
}

/// Social-welfare approximation for games with nonnegative total value:
/// the better (by social welfare) of the two-block CW maximizer and the
/// singleton partition. Never returns negative welfare.
pub fn approx_sw_nonneg_tv(
    game: &ValuationMatrix,
    backend: &TwoPartitionBackend,
) -> Result<NonNegTvOutcome> {
    let tv_nonnegative = total_value(game).is_nonnegative();
    let candidate = if game.n() >= 2 {
        Some(maximize_cw_two(game, backend)?.0)
    } else {
        None
    };
    let singles = Partition::singletons(game.n());
    let partition = match candidate {
        Some(two) => {
            let sw_two = social_welfare(game, &two)?;
            if sw_two.as_f64() > 0.0 {
                two
            } else {
                singles
            }
        }
        None => singles,
    };
    Ok(NonNegTvOutcome {
        partition,
        tv_nonnegative,
    })
}

/// Monte Carlo versus closed-form check of the random two-coloring bound.
#[derive(Clone, Debug)]
pub struct TwoColoringStat {
    pub trials: u64,
    /// Mean social welfare of the sampled two-sided partitions.
    pub empirical_mean: f64,
    /// Standard error of the mean.
    pub std_error: f64,
    /// Twice the closed form `W + A/2`, i.e. exactly `SW(pi*) + TV` in
    /// integer mode.
    pub closed_form_twice: Welfare,
}

impl TwoColoringStat {
    pub fn closed_form(&self) -> f64 {
        self.closed_form_twice.as_f64() / 2.0
    }
}

/// Assigns each coalition of `pi_star` to one of two sides uniformly at
/// random, `trials` times, and compares the mean social welfare of the
/// resulting partitions with the closed form `W + A/2` (within coalitions
/// plus half the across value).
pub fn random_two_coloring_bound(
    game: &ValuationMatrix,
    pi_star: &Partition,
    trials: u64,
    seed: u64,
) -> Result<TwoColoringStat> {
    if trials == 0 {
        return Err(Error::Parameter("trials must be positive".into()));
    }
    let sw_star = social_welfare(game, pi_star)?;
    let tv = total_value(game);
    let closed_form_twice = match (sw_star, tv) {
        (Welfare::Int(a), Welfare::Int(b)) => Welfare::Int(a + b),
        (a, b) => Welfare::Real(a.as_f64() + b.as_f64()),
    };

    // Pairwise block interactions: within[b] is the ordered within-block
    // sum, cross[b][c] the ordered sum between blocks b and c.
    let m = pi_star.num_blocks();
    let blocks = pi_star.blocks();
    let mut within_total = 0.0;
    let mut cross = vec![0.0; m * m];
    for b in 0..m {
        for (x, &i) in blocks[b].iter().enumerate() {
            for &j in &blocks[b][x + 1..] {
                within_total += game.weight(i as usize, j as usize).as_f64()
                    + game.weight(j as usize, i as usize).as_f64();
            }
        }
        for c in b + 1..m {
            let mut s = 0.0;
            for &i in &blocks[b] {
                for &j in &blocks[c] {
                    s += game.weight(i as usize, j as usize).as_f64()
                        + game.weight(j as usize, i as usize).as_f64();
                }
            }
            cross[b * m + c] = s;
        }
    }

    let mut rng = SplitMix64::new(seed);
    let mut sides = vec![false; m];
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    for _ in 0..trials {
        for s in sides.iter_mut() {
            *s = rng.next_bool();
        }
        let mut sw = within_total;
        for b in 0..m {
            for c in b + 1..m {
                if sides[b] == sides[c] {
                    sw += cross[b * m + c];
                }
            }
        }
        sum += sw;
        sum_sq += sw * sw;
    }
    let mean = sum / trials as f64;
    let var = (sum_sq / trials as f64 - mean * mean).max(0.0);
    let std_error = (var / trials as f64).sqrt();
    Ok(TwoColoringStat {
        trials,
        empirical_mean: mean,
        std_error,
        closed_form_twice,
    })
}

//! Greedy clique-formation solvers for the stochastic aversion models.
//!
//! All of them grow maximal cliques in the positive subgraph G' and commit
//! a clique as a coalition only when it reaches a size threshold; the first
//! short clique stops the run and everything still unassigned becomes a
//! singleton. They differ in the threshold and in which agents they run on:
//!
//! - [`greedy_clique_formation_er`]: threshold `ceil(log_{1/p}(n) / 2)` on
//!   the whole agent set of an Erdős–Rényi instance.
//! - [`alg1_greedy_coalitions`]: threshold `ceil(k' * sqrt(1 - eps))` on
//!   the agents of a chosen subset of `k'` color classes.
//! - [`alg2_subdivide`]: splits the `k` classes of a Turán instance into
//!   `ceil(p*k)` contiguous groups and runs the class-subset greedy per
//!   group.
//! - [`alg4_balanced_low`] / [`alg5_balanced_high`]: trim a balanced
//!   instance to equal class sizes ([`alg3_reduce_to_turan`]), run the
//!   Turán solver, and leave the trimmed agents as singletons.

use crate::error::{Error, Result};
use crate::exact::PosGraph;
use crate::matrix::ValuationMatrix;
use crate::meta::{InstanceMeta, ModelKind};
use crate::partition::Partition;
use crate::rng::{substream_seed, SplitMix64};

/// How the seed vertex of each clique is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexPick {
    /// Uniform among the remaining agents, from the config seed.
    SeededRandom,
    /// Smallest remaining agent index (fully deterministic golden runs).
    LowestIndex,
}

/// Shared knobs of the greedy solvers. Candidate scanning is always in
/// ascending agent index; only the seed-vertex choice is configurable.
#[derive(Clone, Copy, Debug)]
pub struct GreedyConfig {
    /// Accuracy parameter in (0, 1); lower values demand larger cliques.
    pub epsilon: f64,
    pub vertex_pick: VertexPick,
    pub seed: u64,
}

impl GreedyConfig {
    pub fn new(epsilon: f64, seed: u64) -> Self {
        Self {
            epsilon,
            vertex_pick: VertexPick::SeededRandom,
            seed,
        }
    }
}

impl Default for GreedyConfig {
    fn default() -> Self {
        Self::new(0.19, 0)
    }
}

/// Ceiling that forgives floating-point noise within 1e-9 below an integer,
/// so thresholds like `4 * sqrt(0.81) = 3.6 -> 4` and `2/0.5 = 4 -> 4` are
/// stable across platforms.
pub(crate) fn ceil_eps(x: f64) -> usize {
    let c = (x - 1e-9).ceil();
    if c <= 0.0 {
        0
    } else {
        c as usize
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::Parameter(format!(
            "epsilon = {epsilon} must lie strictly inside (0, 1)"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Core greedy loop
// ---------------------------------------------------------------------------

struct Pool {
    words: Vec<u64>,
    count: usize,
}

impl Pool {
    fn from_agents(words: usize, agents: impl IntoIterator<Item = u32>) -> Self {
        let mut p = Pool {
            words: vec![0; words],
            count: 0,
        };
        for a in agents {
            let a = a as usize;
            if p.words[a / 64] >> (a % 64) & 1 == 0 {
                p.words[a / 64] |= 1 << (a % 64);
                p.count += 1;
            }
        }
        p
    }

    fn remove(&mut self, v: u32) {
        let v = v as usize;
        debug_assert!(self.words[v / 64] >> (v % 64) & 1 == 1);
        self.words[v / 64] &= !(1 << (v % 64));
        self.count -= 1;
    }

    /// The `k`-th remaining agent in ascending order.
    fn nth(&self, mut k: usize) -> u32 {
        for (wi, &w) in self.words.iter().enumerate() {
            let ones = w.count_ones() as usize;
            if k < ones {
                let mut w = w;
                for _ in 0..k {
                    w &= w - 1;
                }
                return (wi * 64 + w.trailing_zeros() as usize) as u32;
            }
            k -= ones;
        }
        unreachable!("index out of pool");
    }

    fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some((wi * 64 + b) as u32)
                }
            })
        })
    }
}

/// Grows a maximal clique inside the pool starting from `start`, adding the
/// lowest-index compatible agent each round.
fn grow_maximal_clique(g: &PosGraph, pool: &Pool, start: u32) -> Vec<u32> {
    let mut clique = vec![start];
    let mut cand: Vec<u64> = pool
        .words
        .iter()
        .zip(g.row(start as usize))
        .map(|(p, r)| p & r)
        .collect();
    loop {
        let Some(w) = lowest_bit(&cand) else { break };
        clique.push(w);
        for (c, r) in cand.iter_mut().zip(g.row(w as usize)) {
            *c &= r;
        }
    }
    clique
}

fn lowest_bit(words: &[u64]) -> Option<u32> {
    for (wi, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some((wi * 64 + w.trailing_zeros() as usize) as u32);
        }
    }
    None
}

/// The shared greedy loop: repeatedly grow a maximal clique from a picked
/// seed vertex; commit it when it reaches `threshold`, otherwise stop and
/// dissolve everything remaining (including that clique) into singletons.
fn greedy_clique_blocks(
    g: &PosGraph,
    agents: impl IntoIterator<Item = u32>,
    threshold: usize,
    pick: VertexPick,
    rng: &mut SplitMix64,
) -> Vec<Vec<u32>> {
    let mut pool = Pool::from_agents(g.words(), agents);
    let mut blocks = Vec::new();
    while pool.count > 0 {
        let v = match pick {
            VertexPick::SeededRandom => pool.nth(rng.next_below(pool.count as u64) as usize),
            VertexPick::LowestIndex => pool.nth(0),
        };
        let clique = grow_maximal_clique(g, &pool, v);
        if clique.len() >= threshold {
            for &w in &clique {
                pool.remove(w);
            }
            blocks.push(clique);
        } else {
            blocks.extend(pool.iter_ones().map(|v| vec![v]));
            break;
        }
    }
    blocks
}

// ---------------------------------------------------------------------------
// Erdős–Rényi greedy
// ---------------------------------------------------------------------------

/// Greedy clique formation on an Erdős–Rényi aversion instance with size
/// threshold `ceil(log_{1/p}(n) / 2)`. `p` is read from the instance meta
/// and may be overridden for hand-written games; it must lie strictly
/// inside (0, 1).
pub fn greedy_clique_formation_er(
    game: &ValuationMatrix,
    config: &GreedyConfig,
    p_override: Option<f64>,
) -> Result<Partition> {
    let p = p_override
        .or(game.meta().p)
        .ok_or_else(|| Error::Parameter("no edge probability p available".into()))?;
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Parameter(format!(
            "edge probability p = {p} must lie strictly inside (0, 1)"
        )));
    }
    let g = PosGraph::from_game(game)?;
    let n = game.n();
    let threshold = ceil_eps((n as f64).ln() / (1.0 / p).ln() / 2.0);
    let mut rng = SplitMix64::new(config.seed);
    let blocks = greedy_clique_blocks(
        &g,
        0..n as u32,
        threshold,
        config.vertex_pick,
        &mut rng,
    );
    Partition::from_blocks(n, &blocks)
}

// ---------------------------------------------------------------------------
// Multipartite greedy family
// ---------------------------------------------------------------------------

fn multipartite_ranges(game: &ValuationMatrix) -> Result<Vec<std::ops::Range<usize>>> {
    if !game.meta().is_multipartite() {
        return Err(Error::Mode(
            "operation requires a multipartite (turan/balanced) instance".into(),
        ));
    }
    game.meta().class_ranges()
}

/// Greedy coalition formation on the agents of the color classes in `s`
/// (indices into the instance's classes). Commits maximal cliques of size
/// at least `ceil(k' * sqrt(1 - eps))` where `k' = |s|`; returns blocks
/// covering exactly the agents of the chosen classes.
pub fn alg1_greedy_coalitions(
    game: &ValuationMatrix,
    s: &[usize],
    config: &GreedyConfig,
) -> Result<Vec<Vec<u32>>> {
    let ranges = multipartite_ranges(game)?;
    check_epsilon(config.epsilon)?;
    if s.is_empty() {
        return Err(Error::Parameter("class subset must be nonempty".into()));
    }
    let mut seen = vec![false; ranges.len()];
    for &c in s {
        if c >= ranges.len() {
            return Err(Error::Parameter(format!(
                "class index {c} out of range 0..{}",
                ranges.len()
            )));
        }
        if std::mem::replace(&mut seen[c], true) {
            return Err(Error::Parameter(format!("class index {c} repeated")));
        }
    }
    let g = PosGraph::from_game(game)?;
    let k_prime = s.len();
    let threshold = ceil_eps(k_prime as f64 * (1.0 - config.epsilon).sqrt());
    let agents = s
        .iter()
        .flat_map(|&c| ranges[c].clone())
        .map(|a| a as u32)
        .collect::<Vec<_>>();
    let mut rng = SplitMix64::new(config.seed);
    Ok(greedy_clique_blocks(
        &g,
        agents,
        threshold,
        config.vertex_pick,
        &mut rng,
    ))
}

/// Contiguous split of `k` classes into `groups` parts whose sizes differ
/// by at most one, larger parts first.
pub(crate) fn split_classes(k: usize, groups: usize) -> Vec<std::ops::Range<usize>> {
    let base = k / groups;
    let rem = k % groups;
    let mut out = Vec::with_capacity(groups);
    let mut start = 0;
    for i in 0..groups {
        let len = base + usize::from(i < rem);
        out.push(start..start + len);
        start += len;
    }
    out
}

/// Divide-and-conquer solver for Turán instances with constant perturbation
/// `p`: splits the classes into `ceil(p*k)` contiguous groups, runs
/// [`alg1_greedy_coalitions`] per group on an independent substream, and
/// unions the results.
pub fn alg2_subdivide(game: &ValuationMatrix, config: &GreedyConfig) -> Result<Partition> {
    if game.meta().kind != ModelKind::Turan {
        return Err(Error::Mode("subdivision requires a turan instance".into()));
    }
    check_epsilon(config.epsilon)?;
    let k = game
        .meta()
        .k
        .ok_or_else(|| Error::Consistency("turan meta without k".into()))?;
    let p = game
        .meta()
        .p
        .ok_or_else(|| Error::Parameter("instance has no perturbation probability".into()))?;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("p = {p} outside [0, 1]")));
    }
    let groups = ceil_eps(p * k as f64);
    if groups < 1 {
        return Err(Error::Parameter(format!(
            "ceil(p*k) = {groups} with p = {p}, k = {k}: no groups to form"
        )));
    }
    let mut blocks = Vec::new();
    for (i, classes) in split_classes(k, groups).into_iter().enumerate() {
        let sub = GreedyConfig {
            seed: substream_seed(config.seed, i as u64),
            ..*config
        };
        let s: Vec<usize> = classes.collect();
        blocks.extend(alg1_greedy_coalitions(game, &s, &sub)?);
    }
    Partition::from_blocks(game.n(), &blocks)
}

/// Trims every color class of a balanced instance to the size of the
/// smallest one (keeping the lowest-indexed agents), producing a Turán
/// instance with copied weights plus the map from reduced to original
/// agent indices.
pub fn alg3_reduce_to_turan(game: &ValuationMatrix) -> Result<(ValuationMatrix, Vec<u32>)> {
    let ranges = multipartite_ranges(game)?;
    let sizes: Vec<usize> = ranges.iter().map(|r| r.len()).collect();
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Consistency(
            "class sizes must be nonincreasing".into(),
        ));
    }
    let keep = *sizes.last().expect("k >= 1 classes");
    let k = sizes.len();
    let map: Vec<u32> = ranges
        .iter()
        .flat_map(|r| r.start..r.start + keep)
        .map(|a| a as u32)
        .collect();
    let n_prime = k * keep;
    debug_assert_eq!(map.len(), n_prime);
    let meta = InstanceMeta {
        kind: ModelKind::Turan,
        n: n_prime,
        p: game.meta().p,
        k: Some(k),
        q: None,
        class_sizes: Some(vec![keep; k]),
        seed: game.meta().seed,
        unit: game.meta().unit,
    };
    let reduced = ValuationMatrix::build_symmetric_int(n_prime, meta, |a, b| {
        game.int_weight(map[a] as usize, map[b] as usize)
    })?;
    Ok((reduced, map))
}

fn lift_blocks(
    n: usize,
    reduced_blocks: &[Vec<u32>],
    map: &[u32],
) -> Result<Partition> {
    let mut blocks: Vec<Vec<u32>> = reduced_blocks
        .iter()
        .map(|b| b.iter().map(|&a| map[a as usize]).collect())
        .collect();
    let mut kept = vec![false; n];
    for &orig in map {
        kept[orig as usize] = true;
    }
    for (agent, &k) in kept.iter().enumerate() {
        if !k {
            blocks.push(vec![agent as u32]);
        }
    }
    Partition::from_blocks(n, &blocks)
}

/// Balanced-instance solver for the low-perturbation regime (`p` of order
/// `1/k`): reduce to a Turán instance, run the class-subset greedy over all
/// classes, and leave the trimmed agents as singletons.
pub fn alg4_balanced_low(game: &ValuationMatrix, config: &GreedyConfig) -> Result<Partition> {
    let (reduced, map) = alg3_reduce_to_turan(game)?;
    let k = reduced.meta().k.expect("reduction emits k");
    let all: Vec<usize> = (0..k).collect();
    let blocks = alg1_greedy_coalitions(&reduced, &all, config)?;
    lift_blocks(game.n(), &blocks, &map)
}

/// Balanced-instance solver for the constant-perturbation regime: reduce
/// to a Turán instance, subdivide, and leave the trimmed agents as
/// singletons.
pub fn alg5_balanced_high(game: &ValuationMatrix, config: &GreedyConfig) -> Result<Partition> {
    let (reduced, map) = alg3_reduce_to_turan(game)?;
    let pi = alg2_subdivide(&reduced, config)?;
    lift_blocks(game.n(), pi.blocks(), &map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_balanced, gen_er, gen_turan};
    use crate::matrix::ValuationMatrix;
    use crate::welfare::{negative_pair_within, social_welfare, Welfare};

    fn cfg(epsilon: f64, seed: u64) -> GreedyConfig {
        GreedyConfig::new(epsilon, seed)
    }

    #[test]
    fn ceil_eps_is_stable_near_integers() {
        assert_eq!(ceil_eps(3.6), 4);
        assert_eq!(ceil_eps(4.0), 4);
        assert_eq!(ceil_eps(4.0 + 1e-12), 4);
        assert_eq!(ceil_eps(4.0 - 1e-12), 4);
        assert_eq!(ceil_eps(4.1), 5);
        assert_eq!(ceil_eps(0.5), 1);
        assert_eq!(ceil_eps(0.0), 0);
    }

    #[test]
    fn er_all_positive_forms_one_coalition() {
        let g = ValuationMatrix::symmetric_int(
            16,
            vec![1; 16 * 15 / 2],
            InstanceMeta::manual(16),
        )
        .unwrap();
        let pi = greedy_clique_formation_er(&g, &cfg(0.19, 5), Some(0.5)).unwrap();
        assert_eq!(pi.num_blocks(), 1);
        assert_eq!(social_welfare(&g, &pi).unwrap(), Welfare::Int(240));
    }

    #[test]
    fn er_without_positive_edges_returns_singletons() {
        let g = ValuationMatrix::symmetric_int(
            16,
            vec![-16; 16 * 15 / 2],
            InstanceMeta::manual(16),
        )
        .unwrap();
        let pi = greedy_clique_formation_er(&g, &cfg(0.19, 5), Some(0.5)).unwrap();
        assert!(pi.is_singletons());
        assert_eq!(social_welfare(&g, &pi).unwrap(), Welfare::Int(0));
    }

    #[test]
    fn er_blocks_are_cliques_above_threshold() {
        let game = gen_er(500, 0.5, 3).unwrap();
        let pi = greedy_clique_formation_er(&game, &cfg(0.19, 3), None).unwrap();
        assert_eq!(pi.num_agents(), 500);
        assert_eq!(negative_pair_within(&game, &pi).unwrap(), None);
        // threshold = ceil(log2(500) / 2) = 5
        for block in pi.blocks() {
            assert!(block.len() == 1 || block.len() >= 5, "block {block:?}");
        }
        assert!(social_welfare(&game, &pi).unwrap().expect_int() >= 0);
    }

    #[test]
    fn er_requires_p() {
        let g = ValuationMatrix::symmetric_int(
            4,
            vec![1; 6],
            InstanceMeta::manual(4),
        )
        .unwrap();
        assert!(greedy_clique_formation_er(&g, &cfg(0.19, 1), None).is_err());
        assert!(greedy_clique_formation_er(&g, &cfg(0.19, 1), Some(1.0)).is_err());
        assert!(greedy_clique_formation_er(&g, &cfg(0.19, 1), Some(0.5)).is_ok());
    }

    #[test]
    fn er_is_deterministic_per_seed() {
        let game = gen_er(200, 0.4, 11).unwrap();
        let a = greedy_clique_formation_er(&game, &cfg(0.19, 21), None).unwrap();
        let b = greedy_clique_formation_er(&game, &cfg(0.19, 21), None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn alg1_unperturbed_turan_is_exact() {
        let game = gen_turan(20, 4, 0.0, 7).unwrap();
        let blocks = alg1_greedy_coalitions(&game, &[0, 1, 2, 3], &cfg(0.19, 7)).unwrap();
        assert_eq!(blocks.len(), 5);
        assert!(blocks.iter().all(|b| b.len() == 4));
        let pi = Partition::from_blocks(20, &blocks).unwrap();
        assert_eq!(social_welfare(&game, &pi).unwrap(), Welfare::Int(60));
    }

    #[test]
    fn alg1_fully_perturbed_turan_is_singletons() {
        let game = gen_turan(12, 3, 1.0, 7).unwrap();
        let blocks = alg1_greedy_coalitions(&game, &[0, 1, 2], &cfg(0.19, 7)).unwrap();
        assert!(blocks.iter().all(|b| b.len() == 1));
        assert_eq!(blocks.len(), 12);
    }

    #[test]
    fn alg1_covers_exactly_the_chosen_classes() {
        let game = gen_turan(20, 4, 0.3, 7).unwrap();
        let blocks = alg1_greedy_coalitions(&game, &[0, 2], &cfg(0.19, 7)).unwrap();
        let mut agents: Vec<u32> = blocks.iter().flatten().copied().collect();
        agents.sort_unstable();
        let expected: Vec<u32> = (0..5).chain(10..15).collect();
        assert_eq!(agents, expected);
        // no committed block contains an incompatible pair
        for b in &blocks {
            for (x, &i) in b.iter().enumerate() {
                for &j in &b[x + 1..] {
                    assert_eq!(game.int_weight(i as usize, j as usize), 1);
                }
            }
        }
    }

    #[test]
    fn alg1_validates_inputs() {
        let game = gen_turan(8, 4, 0.5, 1).unwrap();
        assert!(alg1_greedy_coalitions(&game, &[], &cfg(0.19, 1)).is_err());
        assert!(alg1_greedy_coalitions(&game, &[4], &cfg(0.19, 1)).is_err());
        assert!(alg1_greedy_coalitions(&game, &[1, 1], &cfg(0.19, 1)).is_err());
        assert!(alg1_greedy_coalitions(&game, &[0], &cfg(1.0, 1)).is_err());
        let er = gen_er(8, 0.5, 1).unwrap();
        assert!(matches!(
            alg1_greedy_coalitions(&er, &[0], &cfg(0.19, 1)),
            Err(Error::Mode(_))
        ));
    }

    #[test]
    fn class_splitting_matches_the_reference_grouping() {
        assert_eq!(split_classes(11, 4), vec![0..3, 3..6, 6..9, 9..11]);
        assert_eq!(split_classes(4, 2), vec![0..2, 2..4]);
        assert_eq!(split_classes(5, 5), vec![0..1, 1..2, 2..3, 3..4, 4..5]);
    }

    #[test]
    fn alg2_blocks_stay_within_groups() {
        // k = 4, p = 0.5 -> 2 groups of 2 classes; blocks are cliques within
        // a 2-class group, so no block exceeds 2 agents.
        let game = gen_turan(16, 4, 0.5, 9).unwrap();
        let pi = alg2_subdivide(&game, &cfg(0.19, 9)).unwrap();
        assert!(pi.blocks().iter().all(|b| b.len() <= 2));
        assert_eq!(pi.num_agents(), 16);
    }

    #[test]
    fn alg2_produces_valid_nonnegative_partitions() {
        let game = gen_turan(200, 10, 0.5, 123).unwrap();
        let pi = alg2_subdivide(&game, &cfg(0.19, 123)).unwrap();
        assert_eq!(pi.num_agents(), 200);
        assert_eq!(negative_pair_within(&game, &pi).unwrap(), None);
        assert!(social_welfare(&game, &pi).unwrap().expect_int() >= 0);
    }

    #[test]
    fn alg2_rejects_p_zero() {
        let game = gen_turan(8, 4, 0.0, 1).unwrap();
        assert!(matches!(
            alg2_subdivide(&game, &cfg(0.19, 1)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn alg3_keeps_the_first_agents_of_each_class() {
        let game = gen_balanced(&[3, 3, 2], 0.4, 0.5, 5).unwrap();
        let (reduced, map) = alg3_reduce_to_turan(&game).unwrap();
        assert_eq!(reduced.n(), 6);
        assert_eq!(map, vec![0, 1, 3, 4, 6, 7]);
        for a in 0..6 {
            for b in a + 1..6 {
                assert_eq!(
                    reduced.int_weight(a, b),
                    game.int_weight(map[a] as usize, map[b] as usize)
                );
            }
        }
        // n' >= q * n
        assert!(reduced.n() as f64 >= 0.5 * game.n() as f64);
    }

    #[test]
    fn alg3_is_identity_on_turan_instances() {
        let game = gen_turan(12, 3, 0.4, 6).unwrap();
        let (reduced, map) = alg3_reduce_to_turan(&game).unwrap();
        assert_eq!(reduced, game);
        assert_eq!(map, (0..12).collect::<Vec<u32>>());
    }

    #[test]
    fn alg4_equals_alg1_on_turan_input() {
        let game = gen_turan(20, 4, 0.2, 17).unwrap();
        let via_alg4 = alg4_balanced_low(&game, &cfg(0.19, 33)).unwrap();
        let blocks = alg1_greedy_coalitions(&game, &[0, 1, 2, 3], &cfg(0.19, 33)).unwrap();
        let via_alg1 = Partition::from_blocks(20, &blocks).unwrap();
        assert_eq!(via_alg4, via_alg1);
    }

    #[test]
    fn alg4_on_the_small_balanced_example() {
        let game = gen_balanced(&[3, 3, 2], 0.0, 2.0 / 3.0, 5).unwrap();
        let pi = alg4_balanced_low(&game, &cfg(0.19, 5)).unwrap();
        assert_eq!(pi.num_agents(), 8);
        assert_eq!(social_welfare(&game, &pi).unwrap(), Welfare::Int(12));
    }

    #[test]
    fn alg5_equals_alg2_on_turan_input() {
        let game = gen_turan(40, 8, 0.5, 2).unwrap();
        let a = alg5_balanced_high(&game, &cfg(0.19, 4)).unwrap();
        let b = alg2_subdivide(&game, &cfg(0.19, 4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn alg5_fully_perturbed_is_singletons() {
        let game = gen_balanced(&[3, 3, 2], 1.0, 0.5, 5).unwrap();
        let pi = alg5_balanced_high(&game, &cfg(0.19, 5)).unwrap();
        assert!(pi.is_singletons());
        assert_eq!(social_welfare(&game, &pi).unwrap(), Welfare::Int(0));
    }

    #[test]
    fn alg5_on_a_larger_balanced_instance() {
        let game = gen_balanced(&[30, 30, 30, 24], 0.5, 0.8, 14).unwrap();
        let pi = alg5_balanced_high(&game, &cfg(0.19, 14)).unwrap();
        assert_eq!(pi.num_agents(), 114);
        assert_eq!(negative_pair_within(&game, &pi).unwrap(), None);
        assert!(social_welfare(&game, &pi).unwrap().expect_int() >= 0);
    }

    #[test]
    fn lowest_index_pick_is_seed_independent() {
        let game = gen_er(60, 0.4, 1).unwrap();
        let mut c1 = cfg(0.19, 100);
        c1.vertex_pick = VertexPick::LowestIndex;
        let mut c2 = cfg(0.19, 999);
        c2.vertex_pick = VertexPick::LowestIndex;
        let a = greedy_clique_formation_er(&game, &c1, None).unwrap();
        let b = greedy_clique_formation_er(&game, &c2, None).unwrap();
        assert_eq!(a, b);
    }
}

//! Brute-force oracles: welfare maxima over all partitions and over
//! two-block partitions, plus an exact maximum-clique solver. These are the
//! ground truth every approximation in the crate is measured against.

use crate::error::{Error, Result};
use crate::matrix::{scalar_at, ValuationMatrix, WeightStore};
use crate::partition::Partition;
use crate::welfare::{Scalar, Welfare};

/// Hard caps on exhaustive enumeration. Oracles refuse inputs above budget
/// instead of running unbounded; the defaults keep the full test suite in
/// the minutes range on one core.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget {
    pub max_n_all_partitions: usize,
    pub max_n_two_partitions: usize,
    pub max_clique_n: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_n_all_partitions: 13,
            max_n_two_partitions: 24,
            max_clique_n: 2000,
        }
    }
}

/// Which partition space an exact search ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    /// Every partition of the agents.
    All,
    /// Partitions with exactly two nonempty coalitions.
    Two,
}

/// Visits every set partition of `0..n` as canonical labels, in restricted
/// growth string order (lexicographic over the label sequence).
pub fn for_each_partition(
    n: usize,
    budget: &EnumerationBudget,
    mut f: impl FnMut(&[usize]),
) -> Result<()> {
    if n == 0 {
        return Err(Error::Dimension("no agents".into()));
    }
    if n > budget.max_n_all_partitions {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the all-partitions budget {}",
            budget.max_n_all_partitions
        )));
    }
    let mut labels = vec![0usize; n];
    rec_partitions(1, 0, &mut labels, &mut f);
    Ok(())
}

fn rec_partitions(i: usize, max_label: usize, labels: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let n = labels.len();
    if i == n {
        f(labels);
        return;
    }
    for b in 0..=max_label + 1 {
        labels[i] = b;
        rec_partitions(i + 1, max_label.max(b), labels, f);
    }
}

/// Maximizer of social welfare over the chosen space, with its value.
/// Ties break toward the lexicographically smallest canonical assignment.
pub fn max_welfare_exact(
    game: &ValuationMatrix,
    space: SearchSpace,
    budget: &EnumerationBudget,
) -> Result<(Partition, Welfare)> {
    match space {
        SearchSpace::All => match game.store() {
            WeightStore::Int(w) => max_all_generic(game.n(), game.is_symmetric(), w, budget)
                .map(|(p, v)| (p, v.wrap())),
            WeightStore::Real(w) => max_all_generic(game.n(), game.is_symmetric(), w, budget)
                .map(|(p, v)| (p, v.wrap())),
        },
        SearchSpace::Two => match game.store() {
            WeightStore::Int(w) => {
                max_two_generic(game.n(), game.is_symmetric(), w, budget, Objective::Welfare)
                    .map(|(p, v)| (p, v.wrap()))
            }
            WeightStore::Real(w) => {
                max_two_generic(game.n(), game.is_symmetric(), w, budget, Objective::Welfare)
                    .map(|(p, v)| (p, v.wrap()))
            }
        },
    }
}

/// Maximizer of correlation welfare over two-block partitions; the returned
/// value is twice the correlation welfare (exact in integer mode). By the
/// welfare identity it is also the two-block social-welfare maximizer.
pub fn max_cw_exact_two(
    game: &ValuationMatrix,
    budget: &EnumerationBudget,
) -> Result<(Partition, Welfare)> {
    match game.store() {
        WeightStore::Int(w) => {
            max_two_generic(game.n(), game.is_symmetric(), w, budget, Objective::Correlation)
                .map(|(p, v)| (p, v.wrap()))
        }
        WeightStore::Real(w) => {
            max_two_generic(game.n(), game.is_symmetric(), w, budget, Objective::Correlation)
                .map(|(p, v)| (p, v.wrap()))
        }
    }
}

fn max_all_generic<T: Scalar>(
    n: usize,
    symmetric: bool,
    w: &[T],
    budget: &EnumerationBudget,
) -> Result<(Partition, T)> {
    if n == 0 {
        return Err(Error::Dimension("no agents".into()));
    }
    if n > budget.max_n_all_partitions {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the all-partitions budget {}",
            budget.max_n_all_partitions
        )));
    }
    // Pair sums v_i(j) + v_j(i), indexed [i][j].
    let sym: Vec<T> = pair_sums(n, symmetric, w);
    let mut blocks: Vec<Vec<usize>> = vec![vec![0]];
    let mut labels = vec![0usize; n];
    // Recursion explores labels in lexicographic order, so the first strict
    // maximum seen is the lexicographically smallest maximizer.
    let mut best: Option<(T, Vec<usize>)> = None;
    rec_max_all(1, n, &sym, &mut blocks, &mut labels, T::ZERO, &mut best);
    let (value, labels) = best.expect("at least one partition exists");
    Ok((Partition::from_labels(&labels)?, value))
}

fn rec_max_all<T: Scalar>(
    i: usize,
    n: usize,
    sym: &[T],
    blocks: &mut Vec<Vec<usize>>,
    labels: &mut Vec<usize>,
    sw: T,
    best: &mut Option<(T, Vec<usize>)>,
) {
    if i == n {
        if best.as_ref().map_or(true, |(b, _)| sw > *b) {
            *best = Some((sw, labels.clone()));
        }
        return;
    }
    for b in 0..=blocks.len() {
        let is_new = b == blocks.len();
        let mut delta = T::ZERO;
        if is_new {
            blocks.push(vec![i]);
        } else {
            for &j in &blocks[b] {
                delta += sym[i * n + j];
            }
            blocks[b].push(i);
        }
        labels[i] = b;
        rec_max_all(i + 1, n, sym, blocks, labels, sw + delta, best);
        if is_new {
            blocks.pop();
        } else {
            blocks[b].pop();
        }
    }
}

fn pair_sums<T: Scalar>(n: usize, symmetric: bool, w: &[T]) -> Vec<T> {
    let mut sym = vec![T::ZERO; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sym[i * n + j] =
                    scalar_at(w, n, symmetric, i, j) + scalar_at(w, n, symmetric, j, i);
            }
        }
    }
    sym
}

enum Objective {
    Welfare,
    Correlation,
}

/// Enumerates the `2^(n-1) - 1` two-block partitions by a Gray code over
/// the sides of agents `1..n` (agent 0 stays on side 0), maintaining the
/// objective incrementally.
fn max_two_generic<T: Scalar>(
    n: usize,
    symmetric: bool,
    w: &[T],
    budget: &EnumerationBudget,
    objective: Objective,
) -> Result<(Partition, T)> {
    if n < 2 {
        return Err(Error::Parameter(
            "two-block partitions require at least two agents".into(),
        ));
    }
    if n > budget.max_n_two_partitions {
        return Err(Error::Capacity(format!(
            "n = {n} exceeds the two-partitions budget {}",
            budget.max_n_two_partitions
        )));
    }
    let sym = pair_sums(n, symmetric, w);
    let row_sum = |i: usize| {
        let mut s = T::ZERO;
        for j in 0..n {
            s += sym[i * n + j];
        }
        s
    };
    let tot: Vec<T> = (0..n).map(row_sum).collect();

    let mut side = vec![false; n];
    // Welfare objective state: value = sum of sym over same-side unordered
    // pairs; aux[x] = sum of sym(x, j) over same-side j.
    // Correlation objective state: value = sum of sym(i,j) * s_i * s_j over
    // unordered pairs (twice the correlation welfare); aux[x] = sum of
    // sym(x, j) * s_j.
    let mut value = {
        let mut s = T::ZERO;
        for i in 0..n {
            for j in i + 1..n {
                s += sym[i * n + j];
            }
        }
        s
    };
    let mut aux = tot.clone();

    let mut best: Option<(T, Vec<bool>)> = None;
    for mask in 1u64..(1u64 << (n - 1)) {
        let t = mask.trailing_zeros() as usize + 1; // agent flipped by the Gray step
        match objective {
            Objective::Welfare => {
                value += tot[t] - aux[t].double();
                let new_same = tot[t] - aux[t];
                for j in 0..n {
                    if j == t {
                        continue;
                    }
                    if side[j] == side[t] {
                        aux[j] -= sym[j * n + t];
                    } else {
                        aux[j] += sym[j * n + t];
                    }
                }
                aux[t] = new_same;
            }
            Objective::Correlation => {
                if side[t] {
                    value += aux[t].double();
                } else {
                    value -= aux[t].double();
                }
                for j in 0..n {
                    if j == t {
                        continue;
                    }
                    if side[t] {
                        aux[j] += sym[j * n + t].double();
                    } else {
                        aux[j] -= sym[j * n + t].double();
                    }
                }
                // aux[t] flips sign relative to every other agent staying put:
                // recompute from scratch is O(n); instead note s_j unchanged,
                // so aux[t] is unchanged.
            }
        }
        side[t] = !side[t];
        let better = match &best {
            None => true,
            Some((b, assign)) => value > *b || (value == *b && lex_less(&side, assign)),
        };
        if better {
            best = Some((value, side.clone()));
        }
    }
    let (value, sides) = best.expect("n >= 2 yields at least one bipartition");
    let labels: Vec<usize> = sides.iter().map(|&s| s as usize).collect();
    Ok((Partition::from_labels(&labels)?, value))
}

fn lex_less(a: &[bool], b: &[bool]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return !*x;
        }
    }
    false
}

// ---------------------------------------------------------------------------
// Exact maximum clique
// ---------------------------------------------------------------------------

/// Adjacency bitsets of the positive subgraph G' (weight-1 edges of an
/// aversion game), or of any simple graph.
#[derive(Clone, Debug)]
pub struct PosGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl PosGraph {
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut g = Self {
            n,
            words,
            rows: vec![0; n * words],
        };
        for (u, v) in edges {
            g.add_edge(u as usize, v as usize);
        }
        g
    }

    /// Positive subgraph of an aversion game.
    pub fn from_game(game: &ValuationMatrix) -> Result<Self> {
        if !game.is_aversion() {
            return Err(Error::Mode(
                "positive subgraph requires an aversion game (weights in {-n, 1})".into(),
            ));
        }
        let n = game.n();
        let mut g = Self::from_edges(n, std::iter::empty());
        let w = game.int_slice().expect("aversion games are integer games");
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[idx] == 1 {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

/// Exact maximum clique by branch and bound with a greedy-coloring upper
/// bound. Fully deterministic: the returned vertex set is the first best
/// clique found under the fixed degree-descending root order.
pub fn max_clique(g: &PosGraph) -> Vec<u32> {
    if g.n == 0 {
        return Vec::new();
    }
    let mut order: Vec<u32> = (0..g.n as u32).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v as usize)));

    let mut cand = vec![0u64; g.words];
    for v in 0..g.n {
        cand[v / 64] |= 1 << (v % 64);
    }
    let mut best = vec![order[0]];
    let mut current = Vec::new();
    expand(g, &order, &cand, &mut current, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &PosGraph, order: &[u32], cand: &[u64], current: &mut Vec<u32>, best: &mut Vec<u32>) {
    // Greedy coloring of the candidates in root order; `colored[c]` holds the
    // vertices of color class c. A vertex of color c (1-based) caps any
    // clique inside the candidates processed so far at c.
    let mut classes: Vec<(Vec<u64>, Vec<u32>)> = Vec::new();
    let mut sorted: Vec<(u32, usize)> = Vec::new();
    for &v in order {
        let vi = v as usize;
        if cand[vi / 64] >> (vi % 64) & 1 == 0 {
            continue;
        }
        let mut placed = false;
        for (c, (mask, members)) in classes.iter_mut().enumerate() {
            if mask[vi / 64] >> (vi % 64) & 1 == 0 {
                for (w, m) in mask.iter_mut().zip(g.row(vi)) {
                    *w |= m;
                }
                members.push(v);
                sorted.push((v, c + 1));
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push((g.row(vi).to_vec(), vec![v]));
            sorted.push((v, classes.len()));
        }
    }
    // sorted currently groups by insertion; re-sort ascending by color so
    // high-color vertices are processed first from the back.
    sorted.sort_by_key(|&(_, c)| c);

    let mut live = cand.to_vec();
    for idx in (0..sorted.len()).rev() {
        let (v, c) = sorted[idx];
        if current.len() + c <= best.len() {
            return;
        }
        let vi = v as usize;
        live[vi / 64] &= !(1 << (vi % 64));
        current.push(v);
        let mut next: Vec<u64> = live.clone();
        for (w, m) in next.iter_mut().zip(g.row(vi)) {
            *w &= m;
        }
        if next.iter().all(|&w| w == 0) {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, order, &next, current, best);
        }
        current.pop();
    }
}

/// Exact maximum clique of the positive subgraph of an aversion game.
pub fn max_clique_exact(
    game: &ValuationMatrix,
    budget: &EnumerationBudget,
) -> Result<(Vec<u32>, usize)> {
    if game.n() > budget.max_clique_n {
        return Err(Error::Capacity(format!(
            "n = {} exceeds the clique budget {}",
            game.n(),
            budget.max_clique_n
        )));
    }
    let g = PosGraph::from_game(game)?;
    let clique = max_clique(&g);
    let size = clique.len();
    Ok((clique, size))
}

/// Which bound produced a welfare upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// `n * (omega(G') - 1)` from the exact maximum clique.
    MaxClique,
    /// `n * (k - 1)` from the number of color classes.
    KPartite,
}

impl BoundSource {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundSource::MaxClique => "max-clique",
            BoundSource::KPartite => "n(k-1)",
        }
    }
}

/// Upper bound on the maximum social welfare of an aversion game: the
/// smaller of `n*(omega(G')-1)` (when the clique budget allows) and
/// `n*(k-1)` (when color classes are known). Errors when neither bound is
/// computable.
pub fn welfare_upper_bound_detail(
    game: &ValuationMatrix,
    budget: &EnumerationBudget,
) -> Result<(i64, BoundSource)> {
    if !game.is_aversion() {
        return Err(Error::Mode(
            "welfare upper bounds apply to aversion games only".into(),
        ));
    }
    let n = game.n() as i64;
    let clique_bound = if game.n() <= budget.max_clique_n {
        let (_, omega) = max_clique_exact(game, budget)?;
        Some(n * (omega as i64 - 1))
    } else {
        None
    };
    let k_bound = if game.meta().is_multipartite() {
        game.meta().k.map(|k| n * (k as i64 - 1))
    } else {
        None
    };
    match (clique_bound, k_bound) {
        (Some(c), Some(k)) => {
            if c < k {
                Ok((c, BoundSource::MaxClique))
            } else {
                Ok((k, BoundSource::KPartite))
            }
        }
        (Some(c), None) => Ok((c, BoundSource::MaxClique)),
        (None, Some(k)) => Ok((k, BoundSource::KPartite)),
        (None, None) => Err(Error::Capacity(
            "no welfare bound computable: clique budget exceeded and no color classes".into(),
        )),
    }
}

/// See [`welfare_upper_bound_detail`].
pub fn welfare_upper_bound(game: &ValuationMatrix, budget: &EnumerationBudget) -> Result<Welfare> {
    welfare_upper_bound_detail(game, budget).map(|(b, _)| Welfare::Int(b))
}

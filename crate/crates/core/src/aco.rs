//! Binary-chromosome ant colony search for a start-to-goal route.
//!
//! Each ant carries one bit per graph node saying whether the node is on the
//! route; the first and last nodes (start and goal) are always included and
//! the route visits included nodes in ascending index order. A generation
//! runs the six steps of the colony loop:
//!
//! 1. initialise `ants` random chromosomes and their costs;
//! 2. set the pheromone of each ant to `max(cost) - cost`;
//! 3. for every ant compute the transition probability
//!    `(T_best - T_ant) / T_best`; below the global transfer factor the ant
//!    does a small local search (flip a few free bits, fewer as the step
//!    size `1 / generation` shrinks), otherwise it redraws all free bits;
//!    a move is kept only if it lowers the ant's cost;
//! 4. evaporate and re-deposit pheromone,
//!    `T <- (1 - P) T + (max(cost) - cost)`, and record the curves;
//! 5. repeat from step 3 until the generation budget is spent;
//! 6. report the best ant.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

/// Node-inclusion bits, one per graph node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chromosome(Vec<bool>);

impl Chromosome {
    /// Requires at least two bits with the first and last set.
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.len() < 2 {
            return Err(Error::InvalidChromosome("needs at least two bits".into()));
        }
        if !bits[0] || !bits[bits.len() - 1] {
            return Err(Error::InvalidChromosome(
                "start and goal bits must be set".into(),
            ));
        }
        Ok(Self(bits))
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Included node indices in ascending order.
    pub fn nodes(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    fn random(len: usize, rng: &mut impl Rng) -> Self {
        let mut bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
        bits[0] = true;
        bits[len - 1] = true;
        Self(bits)
    }
}

impl fmt::Display for Chromosome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Chromosome {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidChromosome(format!(
                    "unexpected character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

/// Route for a chromosome and its cost. Missing edges add the graph's
/// sentinel weight.
pub fn decode_and_cost(c: &Chromosome, g: &WeightedGraph) -> (Vec<usize>, f64) {
    let nodes = c.nodes();
    let cost = nodes.windows(2).map(|w| g.weight(w[0], w[1])).sum();
    (nodes, cost)
}

/// Initial pheromone `max(cost) - cost` per ant.
pub fn pheromone_init(costs: &[f64]) -> Vec<f64> {
    let max = costs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    costs.iter().map(|c| max - c).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AcoParams {
    pub ants: usize,
    pub generations: usize,
    /// Global transfer factor: transition probabilities below it trigger a
    /// local search.
    pub global_transfer: f64,
    /// Fraction of pheromone evaporated each generation.
    pub evaporation: f64,
    pub seed: u64,
}

impl Default for AcoParams {
    fn default() -> Self {
        Self {
            ants: 50,
            generations: 100,
            global_transfer: 0.2,
            evaporation: 0.8,
            seed: 1,
        }
    }
}

impl AcoParams {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    fn check(&self) -> Result<()> {
        let unit = |x: f64| x > 0.0 && x < 1.0;
        if self.ants == 0 || !unit(self.global_transfer) || !unit(self.evaporation) {
            return Err(Error::InvalidRequest(format!(
                "bad colony parameters {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AcoResult {
    #[serde(serialize_with = "ser_display")]
    pub best: Chromosome,
    pub nodes: Vec<usize>,
    pub best_cost: f64,
    /// Best cost after each generation; index 0 is the initial colony.
    pub best_curve: Vec<f64>,
    pub mean_curve: Vec<f64>,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn ser_display<S: serde::Serializer>(c: &Chromosome, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(c)
}

impl AcoResult {
    /// Two-column-plus text: generation, best cost, mean cost.
    pub fn curve_table(&self) -> String {
        let mut out = String::from("# generation best_cost mean_cost\n");
        for (g, (b, m)) in self.best_curve.iter().zip(&self.mean_curve).enumerate() {
            out.push_str(&format!("{g} {b} {m}\n"));
        }
        out
    }

    /// Same outcome, ignoring wall time.
    pub fn same_outcome(&self, other: &AcoResult) -> bool {
        self.best == other.best
            && self.nodes == other.nodes
            && self.best_cost.to_bits() == other.best_cost.to_bits()
            && bits_eq(&self.best_curve, &other.best_curve)
            && bits_eq(&self.mean_curve, &other.mean_curve)
    }
}

fn bits_eq(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.to_bits() == y.to_bits())
}

/// Transition probability of an ant relative to the richest one.
fn transition_probability(best: f64, own: f64) -> f64 {
    if best > 0.0 {
        (best - own) / best
    } else {
        1.0
    }
}

pub fn aco_run(g: &WeightedGraph, params: &AcoParams) -> Result<AcoResult> {
    params.check()?;
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidGraph("need at least start and goal".into()));
    }
    let timer = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let free = n - 2;

    // Step 1: random colony.
    let mut colony: Vec<Chromosome> = (0..params.ants)
        .map(|_| Chromosome::random(n, &mut rng))
        .collect();
    let mut costs: Vec<f64> = colony.iter().map(|c| decode_and_cost(c, g).1).collect();
    // Step 2: pheromone from relative cost.
    let mut pheromone = pheromone_init(&costs);

    let mean = |c: &[f64]| c.iter().sum::<f64>() / c.len() as f64;
    let min = |c: &[f64]| c.iter().copied().fold(f64::INFINITY, f64::min);
    let mut best_curve = vec![min(&costs)];
    let mut mean_curve = vec![mean(&costs)];

    for generation in 1..=params.generations {
        let step = 1.0 / generation as f64;
        let t_best = pheromone.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        // Step 3: local or global move per ant, improvement-only.
        for ant in 0..params.ants {
            if free == 0 {
                break;
            }
            let mut bits = colony[ant].0.clone();
            if transition_probability(t_best, pheromone[ant]) < params.global_transfer {
                let flips = ((step * free as f64).round() as usize).clamp(1, free);
                for k in sample(&mut rng, free, flips) {
                    bits[k + 1] = !bits[k + 1];
                }
            } else {
                for b in &mut bits[1..n - 1] {
                    *b = rng.gen();
                }
            }
            let candidate = Chromosome(bits);
            let cost = decode_and_cost(&candidate, g).1;
            if cost < costs[ant] {
                colony[ant] = candidate;
                costs[ant] = cost;
            }
        }
        // Step 4: evaporate and re-deposit.
        let max_cost = costs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        for (t, c) in pheromone.iter_mut().zip(&costs) {
            *t = (1.0 - params.evaporation) * *t + (max_cost - c);
        }
        best_curve.push(min(&costs).min(*best_curve.last().expect("seeded")));
        mean_curve.push(mean(&costs));
    }

    // Step 6: lowest cost, earliest ant on ties.
    let best_ant = (0..params.ants)
        .min_by(|&a, &b| costs[a].total_cmp(&costs[b]).then(a.cmp(&b)))
        .expect("non-empty colony");
    let best = colony[best_ant].clone();
    let (nodes, best_cost) = decode_and_cost(&best, g);
    Ok(AcoResult {
        best,
        nodes,
        best_cost,
        best_curve,
        mean_curve,
        elapsed: timer.elapsed(),
    })
}

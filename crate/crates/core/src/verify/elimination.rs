use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::lr::product_expansion;
use crate::partition::{ComplementaryPair, Partition, Rectangle};
use crate::serde_util::JsonCoefficient;
use crate::verify::{build_product_matrix, ProductMatrix};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminatedProduct {
    pub pair: ComplementaryPair,
    pub witness: Partition,
    pub coefficient: BigUint,
}

impl Serialize for EliminatedProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("EliminatedProduct", 4)?;
        s.serialize_field("lambda", &self.pair.lambda)?;
        s.serialize_field("lambda_c", &self.pair.lambda_c)?;
        s.serialize_field("witness", &self.witness)?;
        s.serialize_field("coeff", &JsonCoefficient::from(&self.coefficient))?;
        s.end()
    }
}

/// The products `W_i` removed in round `i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EliminationRound {
    pub i: usize,
    pub eliminated: Vec<EliminatedProduct>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EliminationStatus {
    Empty,
    Stuck,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EliminationTrace {
    pub rect: Rectangle,
    pub require_unit_coefficient: bool,
    pub rounds: Vec<EliminationRound>,
    pub leftover: Vec<ComplementaryPair>,
}

impl EliminationTrace {
    pub fn status(&self) -> EliminationStatus {
        if self.leftover.is_empty() {
            EliminationStatus::Empty
        } else {
            EliminationStatus::Stuck
        }
    }

    pub fn round_sizes(&self) -> Vec<usize> {
        self.rounds.iter().map(|r| r.eliminated.len()).collect()
    }
}

#[derive(Serialize)]
struct PairJson<'a> {
    lambda: &'a Partition,
    lambda_c: &'a Partition,
}

impl Serialize for EliminationTrace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let leftover: Vec<PairJson> = self
            .leftover
            .iter()
            .map(|q| PairJson {
                lambda: &q.lambda,
                lambda_c: &q.lambda_c,
            })
            .collect();
        let mut s = serializer.serialize_struct("EliminationTrace", 4)?;
        s.serialize_field("rect", &self.rect)?;
        s.serialize_field("rounds", &self.rounds)?;
        s.serialize_field("leftover", &leftover)?;
        s.serialize_field("status", &self.status())?;
        s.end()
    }
}

pub fn eliminate(rect: &Rectangle, require_unit_coefficient: bool) -> EliminationTrace {
    eliminate_matrix(&build_product_matrix(rect), require_unit_coefficient)
}

/// Runs `P_0 = all products`, `P_{i+1} = P_i \ W_i` until `W_i` is empty,
/// where `W_i` holds the products owning a column that no other product in
/// `P_i` touches. Each product records its graded-lex smallest such column.
/// The column index keeps only occupancy counts: a product containing a
/// column of count one is necessarily its sole owner.
pub fn eliminate_matrix(m: &ProductMatrix, require_unit_coefficient: bool) -> EliminationTrace {
    let mut occupancy = vec![0u32; m.column_count()];
    for i in 0..m.row_count() {
        for (j, _) in m.row(i) {
            occupancy[*j] += 1;
        }
    }
    let mut remaining: Vec<usize> = (0..m.row_count()).collect();
    let mut rounds = Vec::new();
    loop {
        let found: Vec<(usize, usize, BigUint)> = remaining
            .par_iter()
            .filter_map(|&i| {
                m.row(i)
                    .iter()
                    .find(|(j, c)| occupancy[*j] == 1 && (!require_unit_coefficient || c.is_one()))
                    .map(|(j, c)| (i, *j, c.clone()))
            })
            .collect();
        if found.is_empty() {
            break;
        }
        let removed: HashSet<usize> = found.iter().map(|(i, _, _)| *i).collect();
        for &i in &removed {
            for (j, _) in m.row(i) {
                occupancy[*j] -= 1;
            }
        }
        remaining.retain(|i| !removed.contains(i));
        rounds.push(EliminationRound {
            i: rounds.len(),
            eliminated: found
                .into_iter()
                .map(|(i, j, coefficient)| EliminatedProduct {
                    pair: m.rows()[i].clone(),
                    witness: m.columns()[j].clone(),
                    coefficient,
                })
                .collect(),
        });
    }
    EliminationTrace {
        rect: *m.rect(),
        require_unit_coefficient,
        rounds,
        leftover: remaining.into_iter().map(|i| m.rows()[i].clone()).collect(),
    }
}

/// True iff round 0 removed exactly the (almost) self-complementary pairs.
pub fn check_w0_characterization(trace: &EliminationTrace, rect: &Rectangle) -> bool {
    let w0: BTreeSet<&ComplementaryPair> = trace
        .rounds
        .first()
        .map(|r| r.eliminated.iter().map(|e| &e.pair).collect())
        .unwrap_or_default();
    let theorem = rect.theorem_pairs();
    w0 == theorem.iter().collect()
}

/// Replays a trace against freshly computed expansions: each recorded
/// witness must occur with the recorded coefficient in its own product and
/// in no other product still present at that round, the rounds must be
/// disjoint, and the leftover must be what remains.
pub fn replay_trace(trace: &EliminationTrace, rect: &Rectangle) -> Result<(), String> {
    if trace.rect != *rect {
        return Err(format!("trace is for {}, not {rect}", trace.rect));
    }
    let pairs = rect.complementary_pairs();
    let expansions: Vec<_> = pairs
        .par_iter()
        .map(|q| product_expansion(&q.lambda, &q.lambda_c))
        .collect();
    let mut remaining: BTreeSet<usize> = (0..pairs.len()).collect();
    for round in &trace.rounds {
        let mut this_round = Vec::new();
        for e in &round.eliminated {
            let Ok(idx) = pairs.binary_search(&e.pair) else {
                return Err(format!("round {}: {} is not a pair of {rect}", round.i, e.pair));
            };
            if !remaining.contains(&idx) {
                return Err(format!("round {}: {} was already eliminated", round.i, e.pair));
            }
            let c = expansions[idx].coefficient(&e.witness);
            if c.is_zero() || c != e.coefficient {
                return Err(format!(
                    "round {}: {} has coefficient {c} in {}, trace says {}",
                    round.i, e.witness, e.pair, e.coefficient
                ));
            }
            if trace.require_unit_coefficient && !c.is_one() {
                return Err(format!("round {}: witness {} has coefficient {c}", round.i, e.witness));
            }
            if let Some(other) = remaining
                .iter()
                .find(|&&k| k != idx && expansions[k].contains(&e.witness))
            {
                return Err(format!(
                    "round {}: witness {} for {} also occurs in {}",
                    round.i, e.witness, e.pair, pairs[*other]
                ));
            }
            this_round.push(idx);
        }
        for idx in this_round {
            remaining.remove(&idx);
        }
    }
    let leftover: Vec<&ComplementaryPair> = remaining.iter().map(|&k| &pairs[k]).collect();
    if leftover != trace.leftover.iter().collect::<Vec<_>>() {
        return Err("leftover does not match the replay".into());
    }
    Ok(())
}

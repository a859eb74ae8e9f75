//! Seeded instance generators.

use crate::net::EqualityNetwork;
use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Errors from generator parameter validation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("{0}")]
    InvalidParameters(String),
    #[error("block spec invalid: {0}")]
    InvalidBlockSpec(String),
}

/// One block of a [`gen_blocks`] specification: `count` buyers with the
/// uniform budget `budget` that should end up with surplus `surplus`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpecEntry {
    pub count: usize,
    pub budget: Rational,
    pub surplus: Rational,
}

/// Uniform random instance: `buyers` x `goods` with `edges` edges, integer
/// budgets and prices drawn from the inclusive ranges. Every buyer and
/// every good is covered by a spanning assignment before extra edges are
/// added; deterministic for a fixed seed.
pub fn gen_random(
    buyers: usize,
    goods: usize,
    edges: usize,
    seed: u64,
    budget_range: (u64, u64),
    price_range: (u64, u64),
) -> Result<EqualityNetwork, GenError> {
    if buyers == 0 || goods == 0 {
        return Err(GenError::InvalidParameters("need at least one buyer and one good".into()));
    }
    if edges < buyers.max(goods) {
        return Err(GenError::InvalidParameters(format!(
            "too few edges: {} < max(buyers, goods) = {}",
            edges,
            buyers.max(goods)
        )));
    }
    if edges > buyers * goods {
        return Err(GenError::InvalidParameters(format!(
            "too many edges: {} > {}",
            edges,
            buyers * goods
        )));
    }
    for (label, (lo, hi)) in [("budget", budget_range), ("price", price_range)] {
        if lo < 1 || lo > hi {
            return Err(GenError::InvalidParameters(format!(
                "{label} range [{lo}, {hi}] must satisfy 1 <= lo <= hi"
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budgets: Vec<Rational> = (0..buyers)
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(budget_range.0..=budget_range.1))))
        .collect();
    let prices: Vec<Rational> = (0..goods)
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(price_range.0..=price_range.1))))
        .collect();

    // Spanning assignment: walk shuffled buyer and good orders in parallel
    // so that max(buyers, goods) edges cover both sides.
    let mut buyer_order: Vec<usize> = (0..buyers).collect();
    let mut good_order: Vec<usize> = (0..goods).collect();
    buyer_order.shuffle(&mut rng);
    good_order.shuffle(&mut rng);
    let mut edge_set: Vec<(usize, usize)> = Vec::with_capacity(edges);
    for k in 0..buyers.max(goods) {
        edge_set.push((buyer_order[k % buyers], good_order[k % goods]));
    }
    edge_set.sort_unstable();
    edge_set.dedup();

    while edge_set.len() < edges {
        let candidate = (rng.gen_range(0..buyers), rng.gen_range(0..goods));
        if let Err(pos) = edge_set.binary_search(&candidate) {
            edge_set.insert(pos, candidate);
        }
    }

    EqualityNetwork::new(budgets, prices, edge_set)
        .map_err(|e| GenError::InvalidParameters(e.to_string()))
}

/// Block-structured instance: each block of `k` buyers with budget `e` and
/// target surplus `r` gets `k` goods priced `e - r`, completely connected
/// within the block. Optional extra edges run only from later
/// (lower-surplus) blocks' buyers to earlier blocks' goods, which leaves
/// the balanced surpluses unchanged. The balanced flow of the result has
/// exactly the specified surpluses.
pub fn gen_blocks(
    spec: &[BlockSpecEntry],
    seed: u64,
    cross_edges: usize,
) -> Result<EqualityNetwork, GenError> {
    if spec.is_empty() {
        return Err(GenError::InvalidBlockSpec("empty spec".into()));
    }
    for entry in spec {
        if entry.count == 0 {
            return Err(GenError::InvalidBlockSpec("block with zero buyers".into()));
        }
        if entry.surplus.is_negative() {
            return Err(GenError::InvalidBlockSpec("negative surplus".into()));
        }
        if entry.surplus >= entry.budget {
            return Err(GenError::InvalidBlockSpec(format!(
                "surplus {} must be below the budget {}",
                entry.surplus, entry.budget
            )));
        }
    }
    for pair in spec.windows(2) {
        if pair[0].surplus <= pair[1].surplus {
            return Err(GenError::InvalidBlockSpec(
                "surpluses must be strictly decreasing".into(),
            ));
        }
    }

    let mut budgets = Vec::new();
    let mut prices = Vec::new();
    let mut edges = Vec::new();
    let mut block_buyers: Vec<Vec<usize>> = Vec::new();
    let mut block_goods: Vec<Vec<usize>> = Vec::new();
    for entry in spec {
        let buyer_base = budgets.len();
        let good_base = prices.len();
        let price = &entry.budget - &entry.surplus;
        for _ in 0..entry.count {
            budgets.push(entry.budget.clone());
            prices.push(price.clone());
        }
        for i in 0..entry.count {
            for j in 0..entry.count {
                edges.push((buyer_base + i, good_base + j));
            }
        }
        block_buyers.push((buyer_base..buyer_base + entry.count).collect());
        block_goods.push((good_base..good_base + entry.count).collect());
    }

    if cross_edges > 0 {
        // Candidates: buyer in a later block, good in an earlier block.
        let mut candidates = Vec::new();
        for later in 1..spec.len() {
            for &b in &block_buyers[later] {
                for earlier in 0..later {
                    for &g in &block_goods[earlier] {
                        candidates.push((b, g));
                    }
                }
            }
        }
        if cross_edges > candidates.len() {
            return Err(GenError::InvalidBlockSpec(format!(
                "only {} cross edges available, {} requested",
                candidates.len(),
                cross_edges
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        candidates.shuffle(&mut rng);
        edges.extend(candidates.into_iter().take(cross_edges));
    }

    EqualityNetwork::new(budgets, prices, edges).map_err(|e| GenError::InvalidBlockSpec(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{parse_eqnet, serialize_eqnet};
    use crate::rational::rat;

    #[test]
    fn gen_random_is_deterministic() {
        let a = gen_random(2, 2, 3, 7, (1, 12), (1, 12)).unwrap();
        let b = gen_random(2, 2, 3, 7, (1, 12), (1, 12)).unwrap();
        assert_eq!(serialize_eqnet(&a), serialize_eqnet(&b));
        let c = gen_random(2, 2, 3, 8, (1, 12), (1, 12)).unwrap();
        assert!(a == c || serialize_eqnet(&a) != serialize_eqnet(&c));
    }

    #[test]
    fn gen_random_rejects_too_few_edges() {
        assert!(matches!(
            gen_random(3, 3, 2, 1, (1, 12), (1, 12)),
            Err(GenError::InvalidParameters(_))
        ));
    }

    #[test]
    fn gen_random_round_trips() {
        let net = gen_random(5, 5, 10, 1, (1, 12), (1, 12)).unwrap();
        assert_eq!(parse_eqnet(&serialize_eqnet(&net)).unwrap(), net);
    }

    #[test]
    fn gen_blocks_prices_follow_the_spec() {
        let spec = vec![
            BlockSpecEntry { count: 2, budget: rat(4), surplus: rat(1) },
            BlockSpecEntry { count: 1, budget: rat(2), surplus: rat(0) },
        ];
        let net = gen_blocks(&spec, 1, 0).unwrap();
        assert_eq!(net.buyer_count(), 3);
        assert_eq!(net.good_count(), 3);
        assert_eq!(net.prices(), &[rat(3), rat(3), rat(2)]);
        assert_eq!(net.budgets(), &[rat(4), rat(4), rat(2)]);
    }

    #[test]
    fn gen_blocks_rejects_bad_specs() {
        let equal = vec![
            BlockSpecEntry { count: 1, budget: rat(4), surplus: rat(2) },
            BlockSpecEntry { count: 1, budget: rat(4), surplus: rat(2) },
        ];
        assert!(matches!(gen_blocks(&equal, 1, 0), Err(GenError::InvalidBlockSpec(_))));
        let high = vec![BlockSpecEntry { count: 1, budget: rat(2), surplus: rat(2) }];
        assert!(matches!(gen_blocks(&high, 1, 0), Err(GenError::InvalidBlockSpec(_))));
    }

    #[test]
    fn gen_blocks_balanced_surpluses_match_the_spec() {
        let spec = vec![
            BlockSpecEntry { count: 2, budget: rat(4), surplus: rat(1) },
            BlockSpecEntry { count: 1, budget: rat(2), surplus: rat(0) },
        ];
        for cross in [0, 2] {
            let net = gen_blocks(&spec, 5, cross).unwrap();
            let result = crate::balanced::balanced_flow(&net).unwrap();
            assert_eq!(result.surpluses, vec![rat(1), rat(1), rat(0)], "cross={cross}");
            assert!(crate::balanced::verify_balanced(&net, &result.flow).is_balanced);
        }
    }

    #[test]
    fn gen_blocks_cross_edges_point_backwards() {
        let spec = vec![
            BlockSpecEntry { count: 2, budget: rat(8), surplus: rat(3) },
            BlockSpecEntry { count: 2, budget: rat(5), surplus: rat(1) },
        ];
        let net = gen_blocks(&spec, 9, 3).unwrap();
        assert_eq!(net.edges().len(), 4 + 4 + 3);
        for &(b, g) in net.edges() {
            // Within-block edges pair equal indices ranges; cross edges go
            // from the second block's buyers (2, 3) to the first block's
            // goods (0, 1).
            if b >= 2 {
                assert!(g <= 1 || (2..4).contains(&g));
            } else {
                assert!(g <= 1);
            }
        }
    }
}

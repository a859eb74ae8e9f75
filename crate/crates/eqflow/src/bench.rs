//! Benchmark harness: the parametric sweep against a repeated-max-flow
//! baseline (one bisection per buyer, the same machinery as the breakpoint
//! oracle). Reports exact max-flow call counts and wall time.

use crate::balanced::balanced_flow;
use crate::gen::gen_random;
use crate::parametric::{bisect_moves, make_parametric};
use crate::rational::Rational;
use serde::{Deserialize, Serialize};
use std::time::Instant;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchRow {
    pub size: usize,
    pub edges: usize,
    pub seed: u64,
    pub parametric_calls: usize,
    pub parametric_millis: u128,
    pub baseline_calls: usize,
    pub baseline_millis: u128,
    /// parametric calls / baseline calls.
    pub call_ratio: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchTable {
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:>8} {:>8} {:>10} {:>16} {:>17} {:>15} {:>16} {:>11}\n",
            "size", "edges", "seed", "parametric calls", "parametric ms", "baseline calls", "baseline ms", "call ratio"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:>8} {:>8} {:>10} {:>16} {:>17} {:>15} {:>16} {:>11.4}\n",
                r.size,
                r.edges,
                r.seed,
                r.parametric_calls,
                r.parametric_millis,
                r.baseline_calls,
                r.baseline_millis,
                r.call_ratio
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench table serializes")
    }
}

/// Runs one instance of each size `repeats` times with consecutive seeds.
/// Instances use `size` buyers and goods, `8 * size` edges (capped by the
/// complete bipartite count) and integer data below `2^bits`.
pub fn run_bench(sizes: &[usize], seed: u64, repeats: usize, bits: u32) -> BenchTable {
    let mut rows = Vec::new();
    for &size in sizes {
        for rep in 0..repeats.max(1) {
            let instance_seed = seed.wrapping_add(rep as u64);
            rows.push(bench_one(size, instance_seed, bits));
        }
    }
    BenchTable { rows }
}

/// Benchmarks a single generated instance.
pub fn bench_one(size: usize, seed: u64, bits: u32) -> BenchRow {
    assert!((1..=32).contains(&bits), "bits must be in 1..=32");
    let edges = (8 * size).min(size * size);
    let max_value = (1u64 << bits) - 1;
    let net = gen_random(size, size, edges, seed, (1, max_value), (1, max_value))
        .expect("bench parameters are valid");

    let start = Instant::now();
    let result = balanced_flow(&net).expect("balanced flow succeeds");
    let parametric_millis = start.elapsed().as_millis();
    let parametric_calls = result.maxflow_calls;

    // Baseline: an independent bisection per buyer, plus the final solve on
    // the reduced network.
    let pn = make_parametric(net.clone());
    let buyers: Vec<usize> = (0..net.buyer_count()).map(|i| net.buyer_id(i)).collect();
    let start = Instant::now();
    let mut baseline_calls = 0usize;
    let moves = bisect_moves(&pn, &buyers, &mut baseline_calls).expect("integer bench instances");
    let buyer_moves: Vec<Rational> =
        (0..net.buyer_count()).map(|i| moves[net.buyer_id(i)].clone()).collect();
    let reduced = crate::balanced::reduced_network(&net, &buyer_moves).expect("moves in range");
    let _ = crate::maxflow::max_flow(&reduced);
    baseline_calls += 1;
    let baseline_millis = start.elapsed().as_millis();

    debug_assert_eq!(buyer_moves, result.surpluses);

    BenchRow {
        size,
        edges,
        seed,
        parametric_calls,
        parametric_millis,
        baseline_calls,
        baseline_millis,
        call_ratio: parametric_calls as f64 / baseline_calls as f64,
    }
}

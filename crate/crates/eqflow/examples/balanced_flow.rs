//! End-to-end balanced flow on a small market: three buyers competing for
//! three goods, one buyer priced out of most of them.
//!
//! ```bash
//! cargo run --example balanced_flow
//! ```

use eqflow::balanced::balanced_flow;
use eqflow::rational::{format_rational, rat};
use eqflow::report::flow_entries;
use eqflow::EqualityNetwork;

fn main() {
    let net = EqualityNetwork::new(
        vec![rat(9), rat(6), rat(2)],
        vec![rat(3), rat(4), rat(2)],
        vec![(0, 0), (0, 1), (1, 1), (1, 2), (2, 2)],
    )
    .expect("valid network");

    let result = balanced_flow(&net).expect("balanced flow");

    println!("max-flow value: {}", format_rational(&result.value));
    println!(
        "surpluses:      {}",
        result.surpluses.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    );
    println!(
        "breakpoints:    {}",
        result.profile.breakpoints.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    );
    for block in &result.blocks.blocks {
        println!(
            "block r={}: buyers {:?} goods {:?}",
            format_rational(&block.surplus),
            block.buyers.iter().map(|i| i + 1).collect::<Vec<_>>(),
            block.goods.iter().map(|j| j + 1).collect::<Vec<_>>(),
        );
    }
    println!("money flow:");
    for entry in flow_entries(&net, &result.flow) {
        println!("  buyer {} -> good {}: {}", entry.buyer, entry.good, entry.amount);
    }
    println!("max-flow calls spent: {}", result.maxflow_calls);
}

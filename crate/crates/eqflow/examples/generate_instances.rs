//! Seeded generators: uniform random instances and block-structured ones
//! whose balanced surpluses are known by construction.
//!
//! ```bash
//! cargo run --example generate_instances
//! ```

use eqflow::balanced::balanced_flow;
use eqflow::gen::{gen_blocks, gen_random, BlockSpecEntry};
use eqflow::net::{parse_eqnet, serialize_eqnet};
use eqflow::rational::{format_rational, rat};

fn main() {
    let random = gen_random(4, 4, 9, 42, (1, 12), (1, 12)).expect("valid parameters");
    println!("random 4x4 instance (seed 42):\n{}", serialize_eqnet(&random));
    let reparsed = parse_eqnet(&serialize_eqnet(&random)).expect("round trip");
    assert_eq!(reparsed, random);

    // Two blocks with surpluses 3 and 1, plus a zero block; the block
    // structure pins the balanced surpluses exactly.
    let spec = vec![
        BlockSpecEntry { count: 2, budget: rat(9), surplus: rat(3) },
        BlockSpecEntry { count: 2, budget: rat(6), surplus: rat(1) },
        BlockSpecEntry { count: 1, budget: rat(4), surplus: rat(0) },
    ];
    let blocks = gen_blocks(&spec, 7, 2).expect("valid spec");
    println!("block-structured instance (two cross edges):\n{}", serialize_eqnet(&blocks));

    let result = balanced_flow(&blocks).expect("balanced flow");
    println!(
        "balanced surpluses: {}",
        result.surpluses.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    );
    println!(
        "breakpoints:        {}",
        result.profile.breakpoints.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    );
}

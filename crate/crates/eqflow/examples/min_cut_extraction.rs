//! Exact max flow plus the canonical minimum cut, cross-checked against
//! the exhaustive cut oracle.
//!
//! ```bash
//! cargo run --example min_cut_extraction
//! ```

use eqflow::maxflow::{check_flow, enumerate_min_cuts, max_flow, min_source_side_cut};
use eqflow::net::fixtures::fix_a;
use eqflow::rational::format_rational;

fn main() {
    // FIX-A is fully saturated, so {s} and {s, b1, c1} are both minimum
    // cuts; the canonical choice is the smallest source side.
    let net = fix_a();
    let fnet = net.to_flow_network();

    let result = max_flow(&fnet);
    println!("max-flow value: {}", format_rational(&result.value));

    let report = check_flow(&fnet, &result.flow);
    println!(
        "feasible: {}, duality gap: {}",
        report.feasible,
        format_rational(&report.duality_gap)
    );

    let cut = min_source_side_cut(&fnet, &result).expect("maximum flow certifies itself");
    let side: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
    println!("canonical min cut source side: {{{}}} capacity {}", side.join(", "), cut.capacity());

    let all = enumerate_min_cuts(&fnet).expect("instance is oracle-sized");
    println!("all minimum cuts ({}):", all.len());
    for cut in &all {
        let side: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
        println!("  {{{}}} capacity {}", side.join(", "), cut.capacity());
    }
}

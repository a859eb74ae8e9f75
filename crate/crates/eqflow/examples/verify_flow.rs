//! Balancedness certificates: a balanced flow passes every check, a
//! lopsided maximum flow of the same network does not.
//!
//! ```bash
//! cargo run --example verify_flow
//! ```

use eqflow::balanced::{balanced_flow, verify_balanced};
use eqflow::net::fixtures::fix_b;
use eqflow::net::parse_flow_file;

fn main() {
    let net = fix_b();

    let balanced = balanced_flow(&net).expect("balanced flow");
    println!("balanced flow of FIX-B:");
    for check in verify_balanced(&net, &balanced.flow).checks {
        println!("  {}: {} ({})", check.name, if check.passed { "ok" } else { "FAILED" }, check.detail);
    }

    // Same value (4), different routing: buyer 2 grabs good 1 and leaves
    // buyer 1 with surplus 2. Maximal, but not balanced.
    let lopsided = parse_flow_file(&net, "flow 1 1 1\nflow 2 1 1\nflow 2 2 2\n").expect("flow file");
    println!("\nlopsided maximum flow of FIX-B:");
    let certificate = verify_balanced(&net, &lopsided);
    for check in &certificate.checks {
        println!("  {}: {} ({})", check.name, if check.passed { "ok" } else { "FAILED" }, check.detail);
    }
    println!("balanced: {}", certificate.is_balanced);
}

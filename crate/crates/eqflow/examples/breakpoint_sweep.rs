//! The parametric view: min-cut capacity samples, per-vertex move values,
//! and the nested cuts between breakpoints.
//!
//! ```bash
//! cargo run --example breakpoint_sweep
//! ```

use eqflow::net::fixtures::fix_c;
use eqflow::parametric::{make_parametric, vertex_move_breakpoints};
use eqflow::rational::{format_rational, rat, ratio};

fn main() {
    // FIX-C: budgets (5, 1), prices (2, 2), edges (1,1) and (2,2). Its
    // min-cut capacity has a kink at lambda = 1 where no vertex moves.
    let pn = make_parametric(fix_c());

    println!("kappa samples:");
    for lambda in [rat(0), ratio(1, 2), rat(1), rat(2), rat(3), rat(4), rat(5)] {
        let kappa = pn.kappa(&lambda).expect("nonnegative lambda");
        println!("  kappa({}) = {}", format_rational(&lambda), format_rational(&kappa));
    }

    let profile = vertex_move_breakpoints(&pn);
    println!("\nmove values (lambda at which the vertex leaves the source side):");
    for (i, m) in profile.buyer_moves.iter().enumerate() {
        println!("  b{}: {}", i + 1, format_rational(m));
    }
    for (j, m) in profile.good_moves.iter().enumerate() {
        println!("  c{}: {}", j + 1, format_rational(m));
    }
    println!(
        "breakpoints: [{}]",
        profile.breakpoints.iter().map(format_rational).collect::<Vec<_>>().join(", ")
    );

    let fnet = pn.base().to_flow_network();
    println!("\ncut evolution (source side per interval):");
    for (k, interval) in profile.intervals.iter().enumerate() {
        let upper = profile
            .intervals
            .get(k + 1)
            .map(|next| format_rational(&next.lo))
            .unwrap_or_else(|| "inf".into());
        let side: Vec<String> =
            interval.cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
        println!(
            "  [{}, {}): {{{}}}",
            format_rational(&interval.lo),
            upper,
            side.join(", ")
        );
    }
    println!("\nmax-flow calls spent: {}", profile.maxflow_calls);
}

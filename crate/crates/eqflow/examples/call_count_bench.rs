//! Max-flow call counts: one parametric sweep against one bisection per
//! buyer, on small instances.
//!
//! ```bash
//! cargo run --release --example call_count_bench
//! ```

use eqflow::bench::run_bench;

fn main() {
    let table = run_bench(&[20, 40, 80], 11, 1, 10);
    print!("{}", table.to_text());
    println!(
        "\nThe sweep spends about one max-flow per distinct budget value;\n\
         the baseline pays a full bisection (tens of max-flows) per buyer."
    );
}

//! `eqflow`: balanced flows, breakpoints, max flows, verification,
//! generators and benchmarks over eqnet files.

use clap::{Args, Parser, Subcommand};
use eqflow::balanced::{balanced_flow, verify_balanced};
use eqflow::bench::run_bench;
use eqflow::gen::{gen_blocks, gen_random, BlockSpecEntry};
use eqflow::maxflow::{max_flow, min_source_side_cut};
use eqflow::net::{parse_eqnet, parse_flow_file, serialize_eqnet, EqualityNetwork};
use eqflow::parametric::make_parametric;
use eqflow::rational::{format_rational, parse_rational, Rational};
use eqflow::report::{rationals, RunReport};
use num_traits::Signed;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "eqflow", version, about = "Balanced flows in equality networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a balanced flow: value, surpluses, blocks, breakpoints.
    Balanced {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Verify the result and reflect the outcome in the exit code.
        #[arg(long)]
        verify: bool,
    },
    /// Per-vertex move values and the sorted breakpoints.
    Breakpoints {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Max-flow value and canonical min cut, optionally at a parameter value.
    Maxflow {
        file: PathBuf,
        /// Evaluate the parametric network at this value of lambda.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Check a flow file for balancedness. Exit 0 iff balanced.
    Verify {
        file: PathBuf,
        #[arg(long)]
        flow: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate an instance and write it as an eqnet file.
    Gen(GenArgs),
    /// Compare the parametric sweep against the per-buyer bisection baseline.
    Bench {
        /// Comma-separated instance sizes (buyers = goods).
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        /// Bit width of the integer budgets and prices.
        #[arg(long, default_value_t = 16)]
        bits: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GenArgs {
    /// Random instance: <buyers> <goods> <edges>.
    #[arg(long, num_args = 3, value_names = ["BUYERS", "GOODS", "EDGES"], conflicts_with = "blocks")]
    random: Option<Vec<usize>>,
    /// Block-structured instance: comma-separated count:budget:surplus
    /// triples with strictly decreasing surpluses, e.g. "2:4:1,1:2:0".
    #[arg(long)]
    blocks: Option<String>,
    /// Extra edges from later blocks' buyers to earlier blocks' goods.
    #[arg(long, default_value_t = 0)]
    cross: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Budget range lo:hi for --random.
    #[arg(long, default_value = "1:12")]
    budgets: String,
    /// Price range lo:hi for --random.
    #[arg(long, default_value = "1:12")]
    prices: String,
    #[arg(short, long)]
    output: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Balanced { file, json, verify } => cmd_balanced(&file, json, verify),
        Command::Breakpoints { file, json } => cmd_breakpoints(&file, json),
        Command::Maxflow { file, lambda, json } => cmd_maxflow(&file, lambda.as_deref(), json),
        Command::Verify { file, flow, json } => cmd_verify(&file, &flow, json),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench { sizes, seed, repeats, bits, json } => {
            cmd_bench(&sizes, seed, repeats, bits, json)
        }
    }
}

fn load_network(path: &Path) -> Result<EqualityNetwork, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_eqnet(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_balanced(path: &Path, json: bool, verify: bool) -> Result<ExitCode, String> {
    let net = load_network(path)?;
    let start = Instant::now();
    let result = balanced_flow(&net).map_err(|e| e.to_string())?;
    let millis = start.elapsed().as_millis();

    let mut report = RunReport::new(&net).with_balanced_result(&net, &result);
    report.millis = Some(millis);
    let mut exit = ExitCode::SUCCESS;
    if verify {
        let certificate = verify_balanced(&net, &result.flow);
        if !certificate.is_balanced {
            exit = ExitCode::from(1);
        }
        report = report.with_verification(&certificate);
    }

    if json {
        println!("{}", report.to_json());
    } else {
        println!("value: {}", format_rational(&result.value));
        println!("surpluses: {}", rationals(&result.surpluses).join(" "));
        println!("breakpoints: {}", rationals(&result.profile.breakpoints).join(" "));
        for block in &result.blocks.blocks {
            println!(
                "block r={}: buyers [{}] goods [{}]",
                format_rational(&block.surplus),
                block.buyers.iter().map(|i| format!("b{}", i + 1)).collect::<Vec<_>>().join(" "),
                block.goods.iter().map(|j| format!("c{}", j + 1)).collect::<Vec<_>>().join(" "),
            );
        }
        println!("max-flow calls: {}", result.maxflow_calls);
        if let Some(v) = &report.verification {
            for check in &v.checks {
                println!(
                    "check {}: {} ({})",
                    check.name,
                    if check.passed { "ok" } else { "FAILED" },
                    check.detail
                );
            }
            println!("balanced: {}", v.balanced);
        }
    }
    Ok(exit)
}

fn cmd_breakpoints(path: &Path, json: bool) -> Result<ExitCode, String> {
    let net = load_network(path)?;
    let pn = make_parametric(net.clone());
    let start = Instant::now();
    let profile = eqflow::parametric::vertex_move_breakpoints(&pn);
    let millis = start.elapsed().as_millis();
    let mut report = RunReport::new(&net).with_profile(&profile);
    report.millis = Some(millis);
    if json {
        println!("{}", report.to_json());
    } else {
        for (name, value) in report.move_lambda.as_ref().unwrap() {
            println!("{name}: {value}");
        }
        println!("breakpoints: {}", rationals(&profile.breakpoints).join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_maxflow(path: &Path, lambda: Option<&str>, json: bool) -> Result<ExitCode, String> {
    let net = load_network(path)?;
    let fnet = match lambda {
        None => net.to_flow_network(),
        Some(text) => {
            let value: Rational = parse_rational(text).map_err(|e| e.to_string())?;
            if value.is_negative() {
                return Err(format!("negative lambda {text}"));
            }
            make_parametric(net.clone()).instantiate(&value).map_err(|e| e.to_string())?
        }
    };
    let result = max_flow(&fnet);
    let cut = min_source_side_cut(&fnet, &result).map_err(|e| e.to_string())?;
    let side: Vec<String> = cut.source_vertices(&fnet).iter().map(ToString::to_string).collect();
    if json {
        let mut report = RunReport::new(&net);
        report.value = Some(format_rational(&result.value));
        report.cut_source_side = Some(side);
        println!("{}", report.to_json());
    } else {
        println!("value: {}", format_rational(&result.value));
        println!("min cut source side: [{}]", side.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(path: &Path, flow_path: &Path, json: bool) -> Result<ExitCode, String> {
    let net = load_network(path)?;
    let text = std::fs::read_to_string(flow_path)
        .map_err(|e| format!("cannot read {}: {e}", flow_path.display()))?;
    let flow = parse_flow_file(&net, &text).map_err(|e| format!("{}: {e}", flow_path.display()))?;
    let certificate = verify_balanced(&net, &flow);
    if json {
        let report = RunReport::new(&net).with_verification(&certificate);
        println!("{}", report.to_json());
    } else {
        for check in &certificate.checks {
            println!(
                "check {}: {} ({})",
                check.name,
                if check.passed { "ok" } else { "FAILED" },
                check.detail
            );
        }
        println!("balanced: {}", certificate.is_balanced);
    }
    Ok(if certificate.is_balanced { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = text
        .split_once(':')
        .ok_or_else(|| format!("range `{text}` must look like lo:hi"))?;
    let lo = lo.parse().map_err(|_| format!("bad range bound `{lo}`"))?;
    let hi = hi.parse().map_err(|_| format!("bad range bound `{hi}`"))?;
    Ok((lo, hi))
}

fn parse_block_spec(text: &str) -> Result<Vec<BlockSpecEntry>, String> {
    text.split(',')
        .map(|entry| {
            let parts: Vec<&str> = entry.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("block entry `{entry}` must be count:budget:surplus"));
            }
            let count: usize =
                parts[0].parse().map_err(|_| format!("bad buyer count `{}`", parts[0]))?;
            let budget = parse_rational(parts[1]).map_err(|e| e.to_string())?;
            let surplus = parse_rational(parts[2]).map_err(|e| e.to_string())?;
            Ok(BlockSpecEntry { count, budget, surplus })
        })
        .collect()
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, String> {
    let net = match (&args.random, &args.blocks) {
        (Some(dims), None) => {
            let budgets = parse_range(&args.budgets)?;
            let prices = parse_range(&args.prices)?;
            gen_random(dims[0], dims[1], dims[2], args.seed, budgets, prices)
                .map_err(|e| e.to_string())?
        }
        (None, Some(spec)) => {
            let spec = parse_block_spec(spec)?;
            gen_blocks(&spec, args.seed, args.cross).map_err(|e| e.to_string())?
        }
        _ => return Err("pass exactly one of --random or --blocks".into()),
    };
    std::fs::write(&args.output, serialize_eqnet(&net))
        .map_err(|e| format!("cannot write {}: {e}", args.output.display()))?;
    println!(
        "wrote {} ({} buyers, {} goods, {} edges)",
        args.output.display(),
        net.buyer_count(),
        net.good_count(),
        net.edges().len()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    sizes: &[usize],
    seed: u64,
    repeats: usize,
    bits: u32,
    json: bool,
) -> Result<ExitCode, String> {
    if bits == 0 || bits > 32 {
        return Err("bits must be between 1 and 32".into());
    }
    let table = run_bench(sizes, seed, repeats, bits);
    if json {
        println!("{}", table.to_json());
    } else {
        print!("{}", table.to_text());
    }
    Ok(ExitCode::SUCCESS)
}

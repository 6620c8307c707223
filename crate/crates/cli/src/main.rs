use std::process::ExitCode;

use clap::Parser;
use kclique_cli::{bench, run, stats, Cli, Command};

/// Candidate checks allowed when searching for the clique number.
const OMEGA_BUDGET: u64 = 50_000_000;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Some(Command::Bench(args)) => {
            if args.generators.is_empty() && args.inputs.is_empty() {
                Err("bench needs at least one --gen or --input".to_string())
            } else {
                let rows = bench::bench_rows(args);
                bench::write_csv(&rows, std::io::stdout().lock()).map_err(|e| e.to_string())
            }
        }
        None if cli.run.stats => stats(&cli.run, OMEGA_BUDGET)
            .map(|s| {
                println!("{}", kclique::stats::GraphStats::CSV_HEADER);
                println!("{}", s.csv_row());
            })
            .map_err(|e| e.to_string()),
        None => run(&cli.run)
            .map(|r| println!("{}", r.to_json()))
            .map_err(|e| e.to_string()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("kclique: {msg}");
            ExitCode::FAILURE
        }
    }
}

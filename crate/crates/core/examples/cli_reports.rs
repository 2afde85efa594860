//! Running command-line subcommands in process and reading their reports.

use acp_core::cli::{run, Cli};
use clap::Parser;

fn main() -> acp_core::Result<()> {
    for args in [
        vec!["acp", "factor", "p=3", "n=10"],
        vec!["acp", "--verify", "count-acp", "p=2", "m=2", "n=3"],
        vec!["acp", "cosets", "N=15", "b=2"],
    ] {
        let cli = Cli::parse_from(&args);
        let out = run(&cli)?;
        println!("$ {} (exit {})", args[1..].join(" "), out.exit);
        println!("{}", serde_json::to_string_pretty(&out.report.result).unwrap());
    }
    Ok(())
}

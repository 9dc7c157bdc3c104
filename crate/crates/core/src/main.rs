use clap::Parser;
use superleib::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (report, code) = run(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    std::process::exit(code);
}

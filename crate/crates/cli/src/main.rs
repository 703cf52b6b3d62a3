use clap::Parser;
use du2_cli::args::Args;

fn main() {
    std::process::exit(du2_cli::run(Args::parse()));
}

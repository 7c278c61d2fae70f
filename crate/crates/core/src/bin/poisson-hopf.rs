use clap::Parser;
use poisson_hopf::cli::{main_with, Cli};

fn main() {
    std::process::exit(main_with(Cli::parse()));
}

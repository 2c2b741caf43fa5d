use clap::Parser;

fn main() {
    let cli = crlie::cli::Cli::parse();
    std::process::exit(crlie::cli::main_with(cli));
}

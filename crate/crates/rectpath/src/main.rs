use clap::Parser;

fn main() {
    let cli = rectpath::cli::Cli::parse();
    std::process::exit(rectpath::cli::run(cli));
}

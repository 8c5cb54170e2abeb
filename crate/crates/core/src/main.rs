use clap::Parser;

fn main() {
    let cli = flatlab::cli::Cli::parse();
    let code = flatlab::cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}

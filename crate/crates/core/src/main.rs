use clap::Parser;

fn main() {
    let cli = ckform::cli::Cli::parse();
    let code = ckform::cli::run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}

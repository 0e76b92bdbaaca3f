use clap::Parser;

fn main() {
    let cli = germinv_cli::Cli::parse();
    let code = germinv_cli::run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}

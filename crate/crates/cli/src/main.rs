use clap::Parser;

fn main() {
    let cli = slnweb_cli::Cli::parse();
    let code = slnweb_cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}

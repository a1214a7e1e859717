use clap::Parser;

fn main() {
    let cli = dompoly_cli::Cli::parse();
    match dompoly_cli::run(&cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}

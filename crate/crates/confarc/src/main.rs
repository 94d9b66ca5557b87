use clap::Parser;

fn main() {
    let cli = confarc::cli::Cli::parse();
    match confarc::cli::run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}

use clap::Parser;

fn main() {
    let cli = plait_cli::Cli::parse();
    match plait_cli::run(&cli) {
        Ok((out, code)) => {
            println!("{out}");
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = floorcount_cli::Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = floorcount_cli::run(cli, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code)
}

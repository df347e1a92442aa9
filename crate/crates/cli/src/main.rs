use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use demazure_cli::{run_command, Cache, Cli, CommandRequest};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = CommandRequest::from_cli(&cli).and_then(|req| {
        let cache = if cli.no_cache { None } else { Cache::locate(cli.cache_dir.as_deref()) };
        run_command(&req, cache.as_ref())
    });
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("demazure: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

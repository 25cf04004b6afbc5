use std::io::{stderr, stdout, Write};
use std::process::ExitCode;

use orient::cli::{self, exit_code, Parsed};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let env_budget = std::env::var("ORIENT_BUDGET").ok();

    let code = match cli::parse_args(&args, env_budget.as_deref()) {
        Ok(Parsed::Help) => {
            let _ = writeln!(stdout(), "{}", cli::USAGE);
            exit_code::OK
        }
        Ok(Parsed::Run(config)) => cli::run(&config, &mut stdout(), &mut stderr()),
        Err(e) => {
            let mut err = stderr();
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "run `orient --help` for usage");
            exit_code::USAGE
        }
    };
    ExitCode::from(code as u8)
}

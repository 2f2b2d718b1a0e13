use std::process::ExitCode;

fn main() -> ExitCode {
    horodisk_cli::run()
}

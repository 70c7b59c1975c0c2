use std::process::ExitCode;

fn main() -> ExitCode {
    nilpex::cli::main_entry()
}

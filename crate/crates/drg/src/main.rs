use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let bits = std::env::var(drg::cli::PRECISION_VAR).ok();
    let code = drg::run(
        std::env::args_os(),
        bits.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}

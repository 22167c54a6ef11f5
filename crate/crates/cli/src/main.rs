use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let res = ngon_cli::dispatch(std::env::args_os());
    print!("{}", res.stdout);
    eprint!("{}", res.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(res.code as u8)
}

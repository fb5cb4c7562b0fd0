use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (out, err) = kupershmidt_cli::app::run(std::env::args_os());
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    if let Some(msg) = err {
        eprintln!("{}", msg.trim_end());
    }
    ExitCode::from(out.code)
}

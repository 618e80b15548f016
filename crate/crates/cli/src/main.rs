use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match curvelattice::run(std::env::args_os()) {
        Ok(out) => {
            let stream = if out.code == 1 {
                None
            } else {
                Some(std::io::stdout())
            };
            match stream {
                Some(mut s) => {
                    let _ = s.write_all(out.text.as_bytes());
                }
                None => eprint!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

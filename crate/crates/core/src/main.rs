use std::io::Write;
use std::time::Instant;

fn main() {
    let started = Instant::now();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = frobsim::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = stdout.lock().flush();
    eprintln!("elapsed {:.3}s", started.elapsed().as_secs_f64());
    std::process::exit(code);
}

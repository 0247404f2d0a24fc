use std::io::Write;

fn main() {
    let out = corolla::cli::run(std::env::args());
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stderr.write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}

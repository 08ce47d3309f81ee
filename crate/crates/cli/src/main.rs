use std::io::Write;

fn main() {
    let (code, out, err) = nccr_cli::run(std::env::args().skip(1));
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}

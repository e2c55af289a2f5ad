use std::io::Write;

fn main() {
    let out = rigged_cli::run(std::env::args_os());
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("stdout");
    std::process::exit(out.code);
}

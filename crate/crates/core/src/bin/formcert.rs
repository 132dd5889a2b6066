use formcert::cli::{run, EXIT_NOT_NONNEGATIVE, EXIT_OK, EXIT_UNKNOWN};

fn main() {
    let (code, out) = run(std::env::args_os());
    if [EXIT_OK, EXIT_NOT_NONNEGATIVE, EXIT_UNKNOWN].contains(&code) {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    std::process::exit(code);
}

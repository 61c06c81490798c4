//! Drive the command-line interface in-process.
use tiltkit::cli::run_command;

fn main() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/b_a3.alg");
    let argv: Vec<String> = ["tiltkit", "tilted", "certify", fixture].map(String::from).to_vec();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_command(&argv, &mut out, &mut err);
    println!("exit {code}");
    print!("{}", String::from_utf8_lossy(&out));
}

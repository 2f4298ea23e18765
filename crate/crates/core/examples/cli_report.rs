//! Drives the command-line front end in-process.
//!
//! ```bash
//! cargo run --example cli_report -- crossed-pointed --group S3 --format table
//! ```

fn main() {
    let mut argv = vec!["gcrossed".to_string()];
    argv.extend(std::env::args().skip(1));
    if argv.len() == 1 {
        argv.extend(["gradings-rep", "--group", "Q8", "--format", "table"].map(String::from));
    }
    let (code, out) = gcrossed::cli::run(argv);
    print!("{out}");
    std::process::exit(code);
}

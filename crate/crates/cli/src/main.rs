use std::io;

use clap::Parser;
use mpgen::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let code = run(&cli, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}

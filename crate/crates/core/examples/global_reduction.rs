//! A global order over three components permuted by S_3, reduced to the
//! stabilizer of the first component.
use std::path::Path;

use crossed_order::ramification::Choices;
use crossed_order::shell::cmd_reduce;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/global_k3_s3.json");
    let out = cmd_reduce(&path, false, &Choices::default(), None);
    print!("{}{}", out.stdout, out.stderr);
    std::process::exit(out.code);
}

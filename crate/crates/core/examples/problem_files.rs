//! Problem files in, structured reports out, and witness replay on a
//! report read back from text.

use toric_whitney::cli::problem::parse_problem_str;
use toric_whitney::cli::report::{render_text, Report};
use toric_whitney::cli::{run, verify_report, Command, RunOptions};

const PROBLEM: &str = r#"{
  "variety": { "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 1]] },
  "polynomial": "z1^2*z3^2 - z2^3*z3^2 + z3^3",
  "options": { "seed": 11 }
}"#;

fn main() {
    let p = parse_problem_str(PROBLEM).unwrap();
    let r = run(Command::Analyze, &p, &RunOptions { oracle: true, ..Default::default() }).unwrap();
    print!("{}", render_text(&r));
    let json = r.to_json();
    println!("structured report: {} bytes, exit code {}", json.len(), r.exit_code());
    assert_eq!(Report::from_json(&json).unwrap(), r);
    let (n, failures) = verify_report(&json).unwrap();
    println!("{n} witnesses replayed, {} failures", failures.len());
}

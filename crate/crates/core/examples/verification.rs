// Running the verification suites from code.

use coxkit::verify::{self, Suite};
use coxkit::CoxeterSystem;

pub fn run_example() -> coxkit::Result<()> {
    let b2 = CoxeterSystem::b(2);
    let report = verify::run(&b2, &Suite::ALL)?;
    print!("{}", report.to_text());
    assert!(report.all_passed());

    let d4 = CoxeterSystem::d(4);
    let report = verify::run(&d4, &[Suite::Diagrams, Suite::WorkedExamples])?;
    println!("{d4}: {} checks passed", report.passed);
    assert!(report.all_passed());
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}

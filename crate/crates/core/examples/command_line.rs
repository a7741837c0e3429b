// The command line driven in-process, as the binary does.

use coxkit::cli;

pub fn run_example() -> coxkit::Result<()> {
    let calls: [&[&str]; 4] = [
        &["product", "--family", "shuffleA", "--left", "2,1", "--right", "1,2"],
        &["element", "--type", "B", "--rank", "2", "--op", "length", "-2,1"],
        &["series", "--kind", "sB", "--key", "(0,2)", "--window", "3", "--format", "json"],
        &["hecke", "--type", "B", "--rank", "3", "--op", "induce", "--subset", "1,2", "--module", "C:0"],
    ];
    for args in calls {
        let out = cli::run(std::iter::once("coxkit").chain(args.iter().copied()));
        println!("$ coxkit {}\n{}", args.join(" "), out.stdout);
        assert_eq!(out.code, 0, "{}", out.stderr);
    }
    let capped = cli::run(["coxkit", "verify", "--suite", "hecke", "--type", "B", "--rank", "5"]);
    println!("hecke suite on B_5 exits {}: {}", capped.code, capped.stderr.trim());
    assert_eq!(capped.code, 3);
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}

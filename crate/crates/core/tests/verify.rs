use coxkit::verify::{self, Suite};
use coxkit::CoxeterSystem;

#[test]
fn every_suite_passes_on_small_systems() {
    for sys in [CoxeterSystem::a(3), CoxeterSystem::a(4), CoxeterSystem::b(2), CoxeterSystem::b(3), CoxeterSystem::d(3)]
    {
        let report = verify::run(&sys, &Suite::ALL).unwrap();
        let failed: Vec<_> =
            report.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        assert!(report.all_passed(), "{sys}: {failed:?}");
        assert!(report.checks.iter().all(|c| c.evaluations > 0), "{sys}");
    }
}

#[test]
fn report_json_is_consistent() {
    let report = verify::run(&CoxeterSystem::b(2), &[Suite::Shuffles]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(v["passed"].as_u64().unwrap() as usize, report.checks.len());
    assert_eq!(v["failed"], 0);
    assert!(report.checks.windows(2).all(|w| w[0].name < w[1].name));
}

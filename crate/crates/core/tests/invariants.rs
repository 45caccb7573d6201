use proptest::prelude::*;
use qsg_core::element::shared;
use qsg_core::expr::Scope;
use qsg_core::{critical_pairs, Coefficient, Element, GenId, Generator, GeneratorTable, RuleSet, RuleSetBuilder, Scalar, SharedTable, Word};

fn table() -> SharedTable {
    shared(
        GeneratorTable::from_generators([
            Generator::even("x"),
            Generator::odd("theta"),
            Generator::even("y"),
            Generator::odd("eta"),
        ])
        .unwrap(),
    )
}

/// Two graded-commuting copies of the `h`-superplane.
fn planes(t: &SharedTable) -> RuleSet {
    let s = Scope::new(t);
    let mut b = RuleSetBuilder::new("planes", t);
    for (l, r) in [
        ("x*theta", "theta*x + h*x^2"),
        ("theta^2", "-h*x*theta"),
        ("y*eta", "eta*y + h*y^2"),
        ("eta^2", "-h*y*eta"),
        ("y*x", "x*y"),
        ("y*theta", "theta*y"),
        ("eta*x", "x*eta"),
        ("eta*theta", "-theta*eta"),
    ] {
        b.relation(&s.parse_eval(l).unwrap(), &s.parse_eval(r).unwrap()).unwrap();
    }
    b.build().unwrap()
}

#[test]
fn planes_are_confluent() {
    let t = table();
    assert!(critical_pairs(&planes(&t), 3).unwrap().iter().all(|p| p.resolved));
}

fn term(t: &SharedTable) -> impl Strategy<Value = (Word, Scalar)> {
    let n = t.len() as u16;
    (any::<bool>(), prop::collection::vec(0..n, 0..4), -3i64..=3, 0u8..2).prop_map(|(h, ls, c, qp)| {
        let k = Scalar::from_int(c) * if qp == 1 { Scalar::q() } else { Scalar::from_int(1) };
        (Word::new(h as u8, ls.into_iter().map(GenId)), k)
    })
}

fn element() -> impl Strategy<Value = Element> {
    let t = table();
    prop::collection::vec(term(&t), 0..4).prop_map(move |ts| Element::from_iter_terms(&t, ts))
}

fn word() -> impl Strategy<Value = (bool, Vec<u16>)> {
    (any::<bool>(), prop::collection::vec(0u16..4, 0..5))
}

fn word_elem(t: &SharedTable, (h, ls): &(bool, Vec<u16>)) -> Element {
    Element::term(t, Word::new(*h as u8, ls.iter().copied().map(GenId)), Scalar::from_int(1))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn free_product_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn product_distributes(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn h_supercommutes_with_words(w in word()) {
        let t = table();
        let u = word_elem(&t, &(false, w.1.clone()));
        let h = Element::h(&t);
        let sign = if u.homogeneous_parity().unwrap().is_odd() { -1 } else { 1 };
        prop_assert_eq!(&u * &h, (&h * &u).scale_int(sign));
    }

    #[test]
    fn h_squared_kills_everything(u in word(), v in word()) {
        let t = table();
        let hu = &Element::h(&t) * &word_elem(&t, &u);
        let hv = &Element::h(&t) * &word_elem(&t, &v);
        prop_assert!((&hu * &hv).is_zero());
    }

    #[test]
    fn parity_is_additive(u in word(), v in word()) {
        prop_assume!(!(u.0 && v.0));
        let t = table();
        let (x, y) = (word_elem(&t, &u), word_elem(&t, &v));
        let p = x.homogeneous_parity().unwrap() + y.homogeneous_parity().unwrap();
        prop_assert_eq!((&x * &y).homogeneous_parity(), Some(p));
    }

    #[test]
    fn normal_forms_are_idempotent(x in element()) {
        let t = table();
        let rs = planes(&t);
        let n = rs.normalize(&x).unwrap();
        prop_assert_eq!(rs.normalize(&n).unwrap(), n);
    }

    #[test]
    fn normalization_respects_products(x in element(), y in element(), z in element()) {
        let t = table();
        let rs = planes(&t);
        let nx = rs.normalize(&x).unwrap();
        let ny = rs.normalize(&y).unwrap();
        let nz = rs.normalize(&z).unwrap();
        let left = rs.normalize(&(&rs.normalize(&(&nx * &ny)).unwrap() * &nz)).unwrap();
        let right = rs.normalize(&(&nx * &rs.normalize(&(&ny * &nz)).unwrap())).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(left, rs.normalize(&(&(&x * &y) * &z)).unwrap());
    }

    #[test]
    fn normalization_is_linear(x in element(), y in element()) {
        let t = table();
        let rs = planes(&t);
        let sum = rs.normalize(&(&x + &y)).unwrap();
        prop_assert_eq!(sum, &rs.normalize(&x).unwrap() + &rs.normalize(&y).unwrap());
    }
}

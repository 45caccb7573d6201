use qsg_core::{Coefficient, Element, Scalar, TensorElement};
use qsg_supergroup::calculus::{act, exterior, oneform_parities};
use qsg_supergroup::contraction::DIFFERENTIAL_IMAGES;
use qsg_supergroup::presentations::{catalog, Presentation};
use qsg_supergroup::suites::Context;
use qsg_supergroup::Library;

fn zero(p: &Presentation, src: &str) -> bool {
    p.verify_zero(&p.parse(src).unwrap()).unwrap().is_none()
}

fn same(p: &Presentation, x: &str, y: &str) {
    let d = &p.parse(x).unwrap() - &p.parse(y).unwrap();
    assert!(p.normalize(&d).unwrap().is_zero(), "{x} != {y}: {}", p.normalize(&d).unwrap());
}

fn pure(p: &Presentation, parts: &[&str]) -> TensorElement {
    let es: Vec<Element> = parts.iter().map(|s| p.parse(s).unwrap()).collect();
    TensorElement::pure(&es.iter().collect::<Vec<_>>()).unwrap()
}

fn tensor_eq(p: &Presentation, x: &TensorElement, y: &TensorElement) {
    let d = x.try_sub(y).unwrap().normalize(p.rules()).unwrap();
    assert!(d.is_zero(), "{d}");
}

#[test]
fn graded_products() {
    let lib = Library::new();
    let p = lib.get("glh").unwrap();
    assert_eq!(p.parse("beta*(h*a)").unwrap(), p.parse("-h*beta*a").unwrap());
    assert!(p.parse("(h*beta)*(h*gamma)").unwrap().is_zero());
    let alpha_beta = lib.get("gamma").unwrap().parse("alpha*beta").unwrap();
    assert!(!alpha_beta.homogeneous_parity().unwrap().is_odd());
    assert!(p.parse("h*a").unwrap().homogeneous_parity().unwrap().is_odd());
    assert!(p.parse("a + beta").unwrap().homogeneous_parity().is_none());
}

#[test]
fn scalars() {
    let q = Scalar::q();
    let one = Scalar::from_int(1);
    let lhs = q.clone() - q.try_inv().unwrap();
    let rhs = (q.clone() * q.clone() - one.clone()) * q.try_inv().unwrap();
    assert_eq!(lhs, rhs);
    let k = q.clone() - one.clone();
    assert_eq!(k.try_inv().unwrap() * k.clone(), one);
    assert_eq!((q.clone() * Scalar::from_int(2) - Scalar::from_int(2)) * Scalar::from_ratio(1, 2).unwrap(), k);
}

#[test]
fn glh_rules_and_localization() {
    let lib = Library::new();
    let p = lib.get("glh").unwrap();
    same(p, "beta*a", "a*beta");
    same(p, "beta*beta", "0");
    assert!(zero(p, "gamma*beta + beta*gamma - h*beta*d*(1 - D_h)"));
    assert!(zero(p, "a*gamma - gamma*a - h*a^2*(1 - D_h_inv)"));
    assert!(zero(p, "gamma^2 - h*gamma*d*(1 - D_h)"));
    same(p, "beta*d_inv", "d_inv*beta");
    same(p, "d*d_inv", "1");
    let w = p.verify_zero(&p.parse("a*beta - beta*a + beta").unwrap()).unwrap();
    assert_eq!(w.unwrap().render(true), "beta");
    let glq = lib.get("glq").unwrap();
    same(glq, "betap*ap_inv", "q*ap_inv*betap");
    assert!(zero(glq, "ap*betap - q*betap*ap"));
    assert!(zero(glq, "ap*dp - dp*ap - (q - 1/q)*gammap*betap"));
}

#[test]
fn determinant_inverse() {
    let lib = Library::new();
    let p = lib.get("glh").unwrap();
    same(p, "D_h_inv", "d*a_inv + d*a_inv*(beta*d_inv*gamma*d_inv)*d*a_inv");
    same(p, "D_h*D_h_inv", "1");
    same(p, "D_h_inv*D_h", "1");
    same(p, "D_h", "a*d_inv - beta*d_inv*gamma*d_inv");
    same(p, "B", "-a_inv*beta*d_inv");
}

#[test]
fn differential_relations() {
    let lib = Library::new();
    let g = lib.get("gamma").unwrap();
    assert!(zero(g, "a*b - b*a + h*b*beta"));
    assert!(zero(g, "alpha*alpha - h*alpha*b"));
    assert!(zero(g, "gamma*b - b*gamma - h*b*(a + d)"));
    assert!(zero(g, "b*c - c*b - h*(delta + alpha)*b"));
    assert!(zero(g, "alpha*h + h*alpha"));
    let o = lib.get("oneforms").unwrap();
    assert!(zero(o, "a*u - u*a"));
    assert!(zero(o, "u*alpha - alpha*u"));
    assert!(zero(o, "w2^2"));
    assert!(zero(o, "gamma*u - u*gamma - 2*h*u*a"));
    assert!(zero(o, "w1*u - u*w1 + 2*h*u^2"));
    assert!(zero(o, "x*theta - theta*x - h*x^2"));
    assert!(zero(o, "theta^2 + h*x*theta"));
    assert!(zero(g, "a*C - C*a - h*(1 - D_h)"));
    assert!(zero(g, "w1*a + u*gamma - alpha"));
}

#[test]
fn weyl_and_vector_fields() {
    let lib = Library::new();
    let w = lib.get("weyl").unwrap();
    assert!(zero(w, "Da*a - 1 - a*Da + h*(beta*Da + a*Dgamma)"));
    assert!(zero(w, "Dgamma^2"));
    assert!(zero(w, "Da*Dgamma - Dgamma*Da"));
    same(w, "nablaM", "a*Dgamma + beta*Dd");
    assert!(zero(w, "nablaM*nablaM"));
    assert!(zero(w, "T1*nablaM - nablaM*T1 - nablaM"));
    assert!(zero(w, "nablaM*a - a*nablaM"));
    let on = |op: &str, f: &str| act(w, &w.parse(op).unwrap(), &w.parse(f).unwrap()).unwrap();
    assert_eq!(on("nablaM", "gamma"), w.gen("a"));
    assert_eq!(on("T1", "a"), w.gen("a"));
    assert_eq!(on("1", "gamma*d"), w.normalize(&w.parse("gamma*d").unwrap()).unwrap());
}

#[test]
fn catalogs() {
    let (glh, _) = catalog("glh").unwrap();
    assert_eq!(glh.len(), 8);
    assert!(catalog("superalgebra").unwrap().0.iter().any(|l| l.text == "nablaM^2 = 0"));
    assert!(catalog("vector-on-params").unwrap().0.iter().any(|l| l.text == "nablaM*a = a*nablaM"));
}

#[test]
fn tensor_signs() {
    let lib = Library::new();
    let p = lib.get("glh").unwrap();
    let x = pure(p, &["beta", "gamma"]).try_mul(&pure(p, &["a", "a"])).unwrap();
    tensor_eq(p, &x, &pure(p, &["beta*a", "gamma*a"]));
    let y = pure(p, &["a", "beta"]).try_mul(&pure(p, &["beta", "a"])).unwrap();
    tensor_eq(p, &y, &pure(p, &["a*beta", "beta*a"]).neg());
    let h = pure(p, &["h", "1"]).try_mul(&pure(p, &["beta", "1"])).unwrap();
    tensor_eq(p, &h, &pure(p, &["h*beta", "1"]));
    tensor_eq(p, &h, &pure(p, &["beta*h", "1"]).neg());
}

#[test]
fn hopf_maps_on_generators() {
    let ctx = Context::new();
    let p = ctx.get("glh").unwrap();
    let hopf = ctx.matrix_hopf().unwrap();
    let da = hopf.delta.apply(&p.gen("a")).unwrap();
    tensor_eq(p, &da, &pure(p, &["a", "a"]).try_add(&pure(p, &["beta", "gamma"])).unwrap());
    assert!(hopf.eps.apply(&p.gen("beta")).unwrap().is_zero());
    assert_eq!(hopf.eps.apply(&p.gen("a")).unwrap(), Element::one(p.table()));
    let s = |x: &str| hopf.s.apply(&p.gen(x)).unwrap();
    assert!(p.normalize(&(&(&s("a") * &p.gen("a")) + &(&s("beta") * &p.gen("gamma")))).unwrap() == Element::one(p.table()));

    let g = ctx.get("gamma").unwrap();
    let dh = ctx.differential_hopf().unwrap();
    let right = dh.right.apply(&g.gen("alpha")).unwrap();
    tensor_eq(g, &right, &pure(g, &["alpha", "a"]).try_add(&pure(g, &["b", "gamma"])).unwrap());
    let left = dh.left.apply(&g.gen("alpha")).unwrap();
    tensor_eq(g, &left, &pure(g, &["a", "alpha"]).try_add(&pure(g, &["beta", "c"]).neg()).unwrap());
    assert!(dh.eps_hat.apply(&g.gen("b")).unwrap().is_zero());
}

#[test]
fn exterior_derivative() {
    let lib = Library::new();
    let g = lib.get("gamma").unwrap();
    let d = exterior(g.rules()).unwrap();
    let on = |s: &str| d.apply(&g.parse(s).unwrap()).unwrap();
    assert_eq!(on("a"), g.gen("alpha"));
    assert_eq!(on("a*beta"), g.normalize(&g.parse("alpha*beta + a*b").unwrap()).unwrap());
    assert_eq!(on("h*a"), g.parse("-h*alpha").unwrap());
    assert!(on("a*beta - beta*a").is_zero());
    assert!(on("gamma*b - b*gamma - h*b*(a + d)").is_zero());
    assert!(d.apply(&on("gamma*beta")).unwrap().is_zero());
    assert!(on("1").is_zero());
}

#[test]
fn oneform_parities_are_computed() {
    let lib = Library::new();
    let got = oneform_parities(lib.get("gamma").unwrap()).unwrap();
    let want = [("w1", "odd"), ("u", "even"), ("v", "even"), ("w2", "odd")];
    for (name, parity) in want {
        assert!(got.iter().any(|(n, p)| n == name && p == parity), "{name}: {got:?}");
    }
}

#[test]
fn contraction_images() {
    let ctx = Context::new();
    let (c, _) = ctx.contraction().unwrap();
    let glq = ctx.get("glq").unwrap();
    assert_eq!(c.image("beta").unwrap(), glq.gen("betap"));
    same(glq, &c.image("a").unwrap().render(true), "ap - h/(q - 1)*betap");
    let d_inv = c.image("d_inv").unwrap();
    same(glq, &d_inv.render(true), "dp_inv + dp_inv*(h/(q - 1))*betap*dp_inv");
    assert_eq!(DIFFERENTIAL_IMAGES[0], ("alpha", "alphap + lambda*bp"));
    assert_eq!(DIFFERENTIAL_IMAGES[1], ("b", "bp"));
}

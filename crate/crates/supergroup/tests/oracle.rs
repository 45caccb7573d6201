use qsg_supergroup::calculus::{d_relation, exterior};
use qsg_supergroup::contraction::check_lines;
use qsg_supergroup::hopf::coassociativity;
use qsg_supergroup::presentations::{FORMS_FROM_ONEFORMS, GLH_RELATIONS};
use qsg_supergroup::rmatrix::{passing_conventions, rtt_mutation, Convention};
use qsg_supergroup::suites::Context;
use qsg_supergroup::Library;

fn nf(lib: &Library, pres: &str, src: &str) -> String {
    let p = lib.get(pres).unwrap();
    p.normalize(&p.parse(src).unwrap()).unwrap().render(true)
}

#[test]
fn glh_normal_forms() {
    let lib = Library::new();
    assert_eq!(nf(&lib, "glh", "beta^2"), "0");
    assert_eq!(nf(&lib, "glh", "d*d_inv"), "1");
    assert_eq!(nf(&lib, "glh", "a_inv*a"), "1");
    assert_eq!(nf(&lib, "glh", "gamma*beta"), "-beta*gamma - h*a*beta + h*beta*d");
    assert_eq!(nf(&lib, "glh", "h*h*a"), "0");
}

#[test]
fn glh_coproduct_is_coassociative_on_gamma() {
    let ctx = Context::new();
    let hopf = ctx.matrix_hopf().unwrap();
    let glh = ctx.get("glh").unwrap();
    assert_eq!(coassociativity(&hopf.delta, &glh.gen("gamma")).unwrap(), None);
}

// d(aγ) − d(γa + h a²(1 − D_h⁻¹)) worked out by hand leaves 4h·aα.
#[test]
fn exterior_d_breaks_the_a_gamma_relation() {
    let lib = Library::new();
    let p = lib.get("gamma").unwrap();
    let d = exterior(p.rules()).unwrap();
    let w = d_relation(p, &d, GLH_RELATIONS[1].text).unwrap();
    assert_eq!(w.as_deref(), Some("4*h*a*alpha"));
    assert_eq!(d_relation(p, &d, GLH_RELATIONS[0].text).unwrap(), None);
}

// The composite one-forms reproduce c and δ with the two swapped.
#[test]
fn oneform_expansion_swaps_c_and_delta() {
    let lib = Library::new();
    let p = lib.get("gamma").unwrap();
    let r = p.normalize(&p.relation(FORMS_FROM_ONEFORMS[2].text).unwrap()).unwrap();
    assert_eq!(r.render(true), "c - delta");
    let swapped = p.normalize(&p.parse("w2*d + v*beta - delta").unwrap()).unwrap();
    assert!(swapped.is_zero());
}

#[test]
fn index_right_is_the_only_rtt_convention() {
    let lib = Library::new();
    assert_eq!(passing_conventions(&lib).unwrap(), vec![Convention::IndexRight]);
}

#[test]
fn mutated_r_matrix_fails_rtt() {
    let lib = Library::new();
    let w = rtt_mutation(lib.get("glh").unwrap(), Convention::IndexRight).unwrap();
    assert!(w.is_some());
}

#[test]
fn contraction_holds_at_q_one_but_not_symbolically() {
    let ctx = Context::new();
    let (c, u) = ctx.contraction().unwrap();
    let lines = check_lines(c, u).unwrap();
    assert_eq!(lines.len(), 8);
    assert!(lines.iter().all(|l| l.limit == Ok(None)));
    assert_eq!(lines[0].exact.as_deref(), Some("((q - 1)/q)*ap*betap"));
    assert!(!lines[0].q_free);
}

use qsg_supergroup::file::{export, from_toml, load, to_toml};
use qsg_supergroup::presentations::{build, BUILT_INS};

const PLANE: &str = r#"
format_version = 1
name = "plane"
description = "h-superplane"

[[generators]]
name = "x"
parity = "even"

[[generators]]
name = "theta"
label = "θ"
parity = "odd"

[[rules]]
lhs = "theta*x"
rhs = "x*theta - h*x^2"

[[rules]]
lhs = "theta*theta"
rhs = "-h*x*theta"
"#;

fn err(src: &str) -> String {
    match from_toml(src) {
        Ok(_) => panic!("accepted:\n{src}"),
        Err(e) => e.to_string(),
    }
}

#[test]
fn builtins_round_trip() {
    for name in BUILT_INS {
        let p = build(name).unwrap();
        let q = from_toml(&to_toml(&p)).unwrap();
        assert_eq!(q.name(), p.name());
        assert_eq!(q.description(), p.description());
        assert_eq!(**q.table(), **p.table(), "{name}");
        assert!(q.rules() == p.rules(), "{name}: rules differ");
        assert_eq!(export(&q), export(&p), "{name}");
        for c in p.composite_names().iter().filter(|c| c.as_str() != "q") {
            assert_eq!(q.composite(c).unwrap(), p.composite(c).unwrap(), "{name}: {c}");
        }
    }
}

#[test]
fn loaded_file_reduces() {
    let p = from_toml(PLANE).unwrap();
    let e = p.normalize(&p.parse("theta*x*theta").unwrap()).unwrap();
    assert_eq!(e.render(true), "-2*h*x*x*theta");
    assert_eq!(p.table().get(p.table().id("theta").unwrap()).label, "θ");
}

#[test]
fn rejects_invertible_odd_generator() {
    let src = PLANE.replace("label = \"θ\"", "invertible = true");
    assert!(err(&src).contains("theta"));
}

#[test]
fn rejects_non_decreasing_rule() {
    let src = PLANE.replace("rhs = \"x*theta - h*x^2\"", "rhs = \"theta*x*x\"");
    assert!(err(&src).contains("decreas"));
}

#[test]
fn rejects_unknown_symbol_with_suggestion() {
    let src = PLANE.replace("rhs = \"-h*x*theta\"", "rhs = \"-h*x*thet\"");
    let e = err(&src);
    assert!(e.contains("thet") && e.contains("did you mean `theta`"), "{e}");
}

#[test]
fn rejects_parity_mismatch() {
    let src = PLANE.replace("rhs = \"x*theta - h*x^2\"", "rhs = \"x*x\"");
    assert!(err(&src).contains("parity"));
}

#[test]
fn rejects_ordered_left_side() {
    let src = PLANE.replace("lhs = \"theta*x\"", "lhs = \"x*theta\"");
    assert!(err(&src).contains("normal order"));
}

#[test]
fn rejects_unknown_fields_and_versions() {
    assert!(err(&PLANE.replace("format_version = 1", "format_version = 2")).contains("format_version"));
    assert!(err(&PLANE.replace("parity = \"even\"", "parity = \"even\"\ncolour = 1")).contains("colour"));
}

#[test]
fn export_is_a_file_model() {
    let f = export(&from_toml(PLANE).unwrap());
    assert_eq!(f.generators.len(), 2);
    assert_eq!(f.rules.len(), 2);
    assert_eq!(load(&f).unwrap().rules().len(), 2);
}

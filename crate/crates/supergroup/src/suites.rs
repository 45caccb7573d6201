//! The verification suites: named checks grouped by topic, run against a
//! shared, lazily built context.

use std::sync::OnceLock;

use qsg_core::{critical_pairs, Coefficient, Element, GenId, RuleSet, Scalar, TensorElement, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{act, d_expansions, d_relation, d_squared, maurer_matrix, parameter_words, supercommutator};
use crate::contraction::{at_q_one, Contraction, Uncontract};
use crate::error::Error;
use crate::hopf::{
    antipode_law, coassociativity, compose, counit_law, d_tensor, first_unpreserved, partial_coproduct,
    relation_image, DerivativeHopf, DifferentialHopf, MatrixHopf, DIFFERENTIALS, ENTRIES, PARTIALS,
};
use crate::maps::{witness, GenMap};
use crate::presentations::*;
use crate::report::Check;
use crate::rmatrix::{self, Convention, Identity};

/// Suites in the order `all` runs them.
pub const SUITES: [&str; 11] = [
    "relations",
    "confluence",
    "hopf",
    "coactions",
    "calculus",
    "maurer",
    "rmatrix",
    "superalgebra",
    "derivatives",
    "contraction",
    "superplane",
];

/// The leg-sign convention the matrix identities are stated in.
pub const CONVENTION: Convention = Convention::IndexRight;

/// Seed of the random words compared against the classical limit.
pub const RANDOM_SEED: u64 = 0x5eed_0001;
pub const RANDOM_WORDS: usize = 200;
pub const RANDOM_MAX_LEN: usize = 5;

type Lazy<T> = OnceLock<Result<T, Error>>;

fn lazy<T>(cell: &Lazy<T>, f: impl FnOnce() -> Result<T, Error>) -> Result<&T, Error> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

/// Presentations and co-structures shared by all checks of a run.
#[derive(Default)]
pub struct Context {
    lib: Library,
    matrix_hopf: Lazy<MatrixHopf>,
    differential_hopf: Lazy<DifferentialHopf>,
    derivative_hopf: Lazy<DerivativeHopf>,
    mixed_coproduct: Lazy<GenMap<TensorElement>>,
    contraction: Lazy<(Contraction, Uncontract)>,
    identities: [Lazy<Vec<Option<String>>>; 6],
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn library(&self) -> &Library {
        &self.lib
    }

    pub fn get(&self, name: &str) -> Result<&Presentation, Error> {
        self.lib.get(name)
    }

    pub fn matrix_hopf(&self) -> Result<&MatrixHopf, Error> {
        lazy(&self.matrix_hopf, || MatrixHopf::new(self.get("glh")?))
    }

    pub fn differential_hopf(&self) -> Result<&DifferentialHopf, Error> {
        lazy(&self.differential_hopf, || DifferentialHopf::new(self.get("gamma")?))
    }

    pub fn derivative_hopf(&self) -> Result<&DerivativeHopf, Error> {
        lazy(&self.derivative_hopf, || DerivativeHopf::new(self.get("derivatives")?))
    }

    /// The coproduct on the matrix entries and the partial derivatives
    /// together, over `weyl`.
    pub fn mixed_coproduct(&self) -> Result<&GenMap<TensorElement>, Error> {
        lazy(&self.mixed_coproduct, || partial_coproduct(self.get("weyl")?.rules()))
    }

    pub fn contraction(&self) -> Result<&(Contraction, Uncontract), Error> {
        lazy(&self.contraction, || {
            Ok((Contraction::new(self.get("glq")?)?, Uncontract::new(self.get("glh")?)?))
        })
    }

    /// Residual entries of a matrix identity under [`CONVENTION`].
    pub fn identity(&self, id: Identity) -> Result<&Vec<Option<String>>, Error> {
        let k = Identity::ALL.iter().position(|x| *x == id).expect("listed");
        lazy(&self.identities[k], || {
            rmatrix::check_identity(self.get(id.presentation())?, id, CONVENTION)
        })
    }
}

fn zero_in(p: &Presentation, e: &Element) -> Result<Option<String>, Error> {
    Ok(p.verify_zero(e)?.map(|n| n.render(true)))
}

fn relation_check(name: String, line: RelationLine, pres: &'static str) -> Check {
    Check::new(name, line.family, line.text, move |ctx| {
        let p = ctx.get(pres)?;
        zero_in(p, &p.relation(line.text)?)
    })
}

/// Checks of one suite, or of every suite for `all`.
pub fn checks(suite: &str) -> Result<Vec<Check>, Error> {
    if suite == "all" {
        let mut out = Vec::new();
        for s in SUITES {
            out.extend(checks(s)?);
        }
        return Ok(out);
    }
    Ok(match suite {
        "relations" => relations(),
        "confluence" => confluence(),
        "hopf" => hopf(),
        "coactions" => coactions(),
        "calculus" => calculus(),
        "maurer" => maurer(),
        "rmatrix" => rmatrix_suite(),
        "superalgebra" => superalgebra(),
        "derivatives" => derivatives_suite(),
        "contraction" => contraction(),
        "superplane" => superplane(),
        _ => return Err(Error::Other(format!("unknown suite `{suite}`; expected one of {} or all", SUITES.join(", ")))),
    })
}

fn relations() -> Vec<Check> {
    let cats = [
        "glq",
        "glh",
        "mixed",
        "forms",
        "inverse-entries",
        "oneform-params",
        "inverse-forms",
        "oneform-forms",
        "oneform-algebra",
        "weyl",
        "derivatives",
    ];
    let mut out = Vec::new();
    for cat in cats {
        let (lines, pres) = catalog(cat).expect("known catalog");
        for (i, line) in lines.iter().enumerate() {
            out.push(relation_check(format!("relations/{cat}/{:02}", i + 1), *line, pres));
        }
    }
    out
}

fn unresolved(rules: &RuleSet) -> Result<Option<String>, Error> {
    let pairs = critical_pairs(rules, 3)?;
    let bad: Vec<_> = pairs.iter().filter(|p| !p.resolved).collect();
    Ok(bad.first().map(|p| {
        format!(
            "{} of {} overlaps unresolved; first {}: {}",
            bad.len(),
            pairs.len(),
            p.render_word(true),
            p.difference().render(true)
        )
    }))
}

/// Whether every `h`-free rule is a signed swap, an odd square going to
/// zero, or a cancellation against an inverse.
fn supercommutative(rules: &RuleSet) -> Option<String> {
    let t = rules.table();
    for r in rules.rules() {
        let (x, y) = r.lhs;
        let rhs = r.rhs.drop_h();
        let expected = if t.inverse(x) == Some(y) || t.inverse(y) == Some(x) {
            Element::one(t)
        } else if x == y && t.parity(x).is_odd() {
            Element::zero(t)
        } else {
            let sign = if t.parity(x).is_odd() && t.parity(y).is_odd() { -1 } else { 1 };
            Element::term(t, Word::new(0, [y, x]), Scalar::from_int(sign))
        };
        if rhs != expected {
            return Some(format!("{} -> {}", r.render_lhs(true), rhs.render(true)));
        }
    }
    None
}

/// Random `h`-free words of length `1..=max_len` over every generator.
pub fn random_words(p: &Presentation, count: usize, max_len: usize, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<GenId> = p.table().ids().collect();
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let letters: Vec<GenId> = (0..len).map(|_| gens[rng.gen_range(0..gens.len())]).collect();
            Element::term(p.table(), Word::new(0, letters), Scalar::from_int(1))
        })
        .collect()
}

/// `drop_h(normalize(w)) = normalize_classical(w)` on random words.
fn h_deletion(p: &Presentation) -> Result<Option<String>, Error> {
    let classical = p.rules().classical_limit();
    for w in random_words(p, RANDOM_WORDS, RANDOM_MAX_LEN, RANDOM_SEED) {
        let full = p.normalize(&w)?.drop_h();
        let cl = classical.normalize(&w)?;
        if full != cl {
            return Ok(Some(format!("{}: {} vs {}", w.render(true), full.render(true), cl.render(true))));
        }
    }
    Ok(None)
}

fn confluence() -> Vec<Check> {
    let mut out = Vec::new();
    for name in BUILT_INS {
        out.push(Check::new(format!("confluence/{name}"), "confluence", "all length-3 overlaps resolve", move |ctx| {
            unresolved(ctx.get(name)?.rules())
        }));
    }
    for name in ["glh", "gamma"] {
        out.push(Check::new(
            format!("confluence/classical-{name}"),
            "classical-limit",
            "h-deleted rules are confluent",
            move |ctx| unresolved(&ctx.get(name)?.rules().classical_limit()),
        ));
        out.push(Check::new(
            format!("confluence/classical-{name}-supercommutative"),
            "classical-limit",
            "h-deleted rules are graded swaps",
            move |ctx| Ok(supercommutative(&ctx.get(name)?.rules().classical_limit())),
        ));
        out.push(Check::new(
            format!("confluence/h-deletion-{name}"),
            "classical-limit",
            format!("normalize commutes with deleting h on {RANDOM_WORDS} random words"),
            move |ctx| h_deletion(ctx.get(name)?),
        ));
    }
    out
}

fn hopf() -> Vec<Check> {
    let mut out = Vec::new();
    for x in ENTRIES.iter().chain(&["a_inv", "d_inv"]) {
        let x = *x;
        out.push(Check::new(format!("hopf/coassociativity/{x}"), "hopf-axioms", format!("(Δ⊗id)Δ({x}) = (id⊗Δ)Δ({x})"), move |ctx| {
            coassociativity(&ctx.matrix_hopf()?.delta, &ctx.get("glh")?.gen(x))
        }));
        for (side, left) in [("left", true), ("right", false)] {
            out.push(Check::new(format!("hopf/counit-{side}/{x}"), "hopf-axioms", format!("{side} counit law on {x}"), move |ctx| {
                let h = ctx.matrix_hopf()?;
                counit_law(&h.delta, &h.eps, &ctx.get("glh")?.gen(x), left)
            }));
            out.push(Check::new(format!("hopf/antipode-{side}/{x}"), "hopf-axioms", format!("{side} antipode law on {x}"), move |ctx| {
                let h = ctx.matrix_hopf()?;
                antipode_law(&h.delta, &h.eps, &h.s, &ctx.get("glh")?.gen(x), left)
            }));
        }
    }
    out.push(
        Check::new(
            "hopf/derivative-comaps-break-weyl",
            "weyl",
            "the derivative coproduct leaves some parameter-derivative relation unpreserved",
            |ctx| first_unpreserved(ctx.get("weyl")?, ctx.mixed_coproduct()?, WEYL_RELATIONS),
        )
        .expect_nonzero(),
    );
    for (i, line) in GLH_RELATIONS.iter().enumerate() {
        let text = line.text;
        out.push(Check::new(format!("hopf/coproduct-preserves/{:02}", i + 1), "glh", text, move |ctx| {
            relation_image(ctx.get("glh")?, &ctx.matrix_hopf()?.delta, text)
        }));
        out.push(Check::new(format!("hopf/counit-preserves/{:02}", i + 1), "glh", text, move |ctx| {
            relation_image(ctx.get("glh")?, &ctx.matrix_hopf()?.eps, text)
        }));
        out.push(Check::new(format!("hopf/antipode-preserves/{:02}", i + 1), "glh", text, move |ctx| {
            relation_image(ctx.get("glh")?, &ctx.matrix_hopf()?.s, text)
        }));
    }
    out
}

fn diff_tensor(ctx: &Context, f: impl Fn(&DifferentialHopf, &Element) -> Result<TensorElement, Error>, g: impl Fn(&DifferentialHopf, &Element) -> Result<TensorElement, Error>, x: &str) -> Result<Option<String>, Error> {
    let h = ctx.differential_hopf()?;
    let p = ctx.get("gamma")?;
    let e = p.gen(x);
    Ok(witness(&f(h, &e)?.try_sub(&g(h, &e)?)?.normalize(p.rules())?))
}

fn coactions() -> Vec<Check> {
    let mut out = Vec::new();
    for dx in DIFFERENTIALS {
        out.push(Check::new(format!("coactions/right-coassociativity/{dx}"), "right-coaction", "(Δ_R⊗id)Δ_R = (id⊗Δ)Δ_R", move |ctx| {
            diff_tensor(ctx, |h, e| compose(&h.right, 0, &h.right, e), |h, e| compose(&h.delta, 1, &h.right, e), dx)
        }));
        out.push(Check::new(format!("coactions/right-counit/{dx}"), "right-coaction", "(id⊗ε)Δ_R = id", move |ctx| {
            let h = ctx.differential_hopf()?;
            counit_law(&h.right, &h.eps_hat, &ctx.get("gamma")?.gen(dx), false)
        }));
        out.push(Check::new(format!("coactions/left-coassociativity/{dx}"), "left-coaction", "(id⊗Δ_L)Δ_L = (Δ⊗id)Δ_L", move |ctx| {
            diff_tensor(ctx, |h, e| compose(&h.left, 1, &h.left, e), |h, e| compose(&h.delta, 0, &h.left, e), dx)
        }));
        out.push(Check::new(format!("coactions/left-counit/{dx}"), "left-coaction", "(ε⊗id)Δ_L = id", move |ctx| {
            let h = ctx.differential_hopf()?;
            counit_law(&h.left, &h.eps_hat, &ctx.get("gamma")?.gen(dx), true)
        }));
        out.push(Check::new(format!("coactions/bicomodule/{dx}"), "bicovariance", "(Δ_L⊗id)Δ_R = (id⊗Δ_R)Δ_L", move |ctx| {
            diff_tensor(ctx, |h, e| compose(&h.left, 0, &h.right, e), |h, e| compose(&h.right, 1, &h.left, e), dx)
        }));
        out.push(Check::new(format!("coactions/hat-is-sum/{dx}"), "differential-hopf", "Δ̂ = Δ_R + Δ_L", move |ctx| {
            diff_tensor(ctx, |h, e| h.delta_hat.apply(e), |h, e| Ok(h.right.apply(e)?.try_add(&h.left.apply(e)?)?), dx)
        }));
        out.push(Check::new(format!("coactions/hat-coassociativity/{dx}"), "differential-hopf", "(Δ̂⊗id)Δ̂ = (id⊗Δ̂)Δ̂", move |ctx| {
            let h = ctx.differential_hopf()?;
            coassociativity(&h.delta_hat, &ctx.get("gamma")?.gen(dx))
        }));
        out.push(Check::new(format!("coactions/hat-counit-zero/{dx}"), "differential-hopf", "ε̂(dT) = 0", move |ctx| {
            let h = ctx.differential_hopf()?;
            Ok(witness(&h.eps_hat.apply(&ctx.get("gamma")?.gen(dx))?))
        }));
        for (side, left) in [("left", true), ("right", false)] {
            out.push(Check::new(format!("coactions/hat-counit-{side}/{dx}"), "differential-hopf", format!("{side} counit law for Δ̂, ε̂"), move |ctx| {
                let h = ctx.differential_hopf()?;
                counit_law(&h.delta_hat, &h.eps_hat, &ctx.get("gamma")?.gen(dx), left)
            }));
            out.push(Check::new(format!("coactions/hat-antipode-{side}/{dx}"), "differential-hopf", format!("{side} antipode law for Ŝ"), move |ctx| {
                let h = ctx.differential_hopf()?;
                antipode_law(&h.delta_hat, &h.eps_hat, &h.s_hat, &ctx.get("gamma")?.gen(dx), left)
            }));
        }
    }
    for (n, w) in short_words(2).into_iter().enumerate() {
        let label = w.join("*");
        let l2 = label.clone();
        out.push(Check::new(format!("coactions/d-right-comodule/{:02}", n + 1), "comodule-map", format!("Δ_R(d u) = (d⊗id)Δ(u), u = {label}"), move |ctx| {
            let h = ctx.differential_hopf()?;
            let p = ctx.get("gamma")?;
            let u = p.parse(&l2)?;
            let lhs = h.right.apply(&h.d.apply(&u)?)?;
            let rhs = d_tensor(&h.d, &h.delta.apply(&u)?, 0)?;
            Ok(witness(&lhs.try_sub(&rhs)?.normalize(p.rules())?))
        }));
        let l3 = label.clone();
        out.push(Check::new(format!("coactions/d-left-comodule/{:02}", n + 1), "comodule-map", format!("Δ_L(d u) = (τ⊗d)Δ(u), u = {label}"), move |ctx| {
            let h = ctx.differential_hopf()?;
            let p = ctx.get("gamma")?;
            let u = p.parse(&l3)?;
            let lhs = h.left.apply(&h.d.apply(&u)?)?;
            let rhs = d_tensor(&h.d, &h.delta.apply(&u)?, 1)?;
            Ok(witness(&lhs.try_sub(&rhs)?.normalize(p.rules())?))
        }));
    }
    for map in ["hat-coproduct", "hat-counit", "hat-antipode", "right-coaction", "left-coaction"] {
        for (cat, lines) in [("mixed", MIXED_RELATIONS), ("forms", FORM_RELATIONS)] {
            for (i, line) in lines.iter().enumerate() {
                let text = line.text;
                out.push(Check::new(format!("coactions/{map}-preserves-{cat}/{:02}", i + 1), line.family, text, move |ctx| {
                    let h = ctx.differential_hopf()?;
                    let p = ctx.get("gamma")?;
                    match map {
                        "hat-coproduct" => relation_image(p, &h.delta_hat, text),
                        "hat-counit" => relation_image(p, &h.eps_hat, text),
                        "hat-antipode" => relation_image(p, &h.s_hat, text),
                        "right-coaction" => relation_image(p, &h.right, text),
                        _ => relation_image(p, &h.left, text),
                    }
                }));
            }
        }
    }
    out
}

/// Words of length `1..=n` in the matrix entries, as names.
fn short_words(n: usize) -> Vec<Vec<&'static str>> {
    let mut out: Vec<Vec<&'static str>> = Vec::new();
    let mut layer: Vec<Vec<&'static str>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for g in ENTRIES {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn calculus() -> Vec<Check> {
    let mut out = Vec::new();
    let mut words = vec![vec![]];
    words.extend(short_words(3));
    for (n, w) in words.into_iter().enumerate() {
        let src = if w.is_empty() { "1".to_string() } else { w.join("*") };
        let s2 = src.clone();
        out.push(Check::new(format!("calculus/d-squared/{:02}", n + 1), "nilpotency", format!("d(d({src})) = 0"), move |ctx| {
            let p = ctx.get("gamma")?;
            d_squared(&ctx.differential_hopf()?.d, &p.parse(&s2)?)
        }));
    }
    for (cat, lines) in [("glh", GLH_RELATIONS), ("mixed", MIXED_RELATIONS)] {
        for (i, line) in lines.iter().enumerate() {
            let text = line.text;
            out.push(Check::new(format!("calculus/d-of-{cat}/{:02}", i + 1), line.family, format!("d({text})"), move |ctx| {
                d_relation(ctx.get("gamma")?, &ctx.differential_hopf()?.d, text)
            }));
        }
    }
    let targets = ["a", "beta", "gamma", "d", "alpha", "b", "c", "delta", "w1", "u", "v", "w2"];
    for c in ["D_h", "Dhat"] {
        for x in targets {
            out.push(Check::new(format!("calculus/central/{c}/{x}"), "centrality", format!("[{c}, {x}] = 0"), move |ctx| {
                let p = ctx.get("gamma")?;
                supercommutator(p, &p.composite(c)?, &p.parse(x)?)
            }));
        }
    }
    for (side, src) in [("left", "D_h*D_h_inv - 1"), ("right", "D_h_inv*D_h - 1")] {
        out.push(Check::new(format!("calculus/det-inverse-{side}"), "centrality", src, move |ctx| {
            let p = ctx.get("gamma")?;
            zero_in(p, &p.parse(src)?)
        }));
    }
    out.push(Check::new("calculus/d-squared-classical", "nilpotency", "d(d(w)) has no h-free part on words of length ≤ 3", |ctx| {
        let p = ctx.get("gamma")?;
        let d = &ctx.differential_hopf()?.d;
        for w in parameter_words(p, 3) {
            let dd = d.apply(&d.apply(&w)?)?.drop_h();
            if !dd.is_zero() {
                return Ok(Some(format!("{}: {}", w.render(true), dd.render(true))));
            }
        }
        Ok(None)
    }));
    out
}

/// `d` of each one-form against its two-form.
pub const MAURER_LINES: [(&str, &str); 4] = [
    ("w1", "w1^2 - u*v"),
    ("u", "w1*u - u*w2"),
    ("w2", "w2^2 - v*u"),
    ("v", "w2*v - v*w1"),
];

fn maurer() -> Vec<Check> {
    let mut out = Vec::new();
    for (i, line) in FORMS_FROM_ONEFORMS.iter().enumerate() {
        out.push(relation_check(format!("maurer/forms-from-oneforms/{:02}", i + 1), *line, "gamma"));
    }
    for (i, (i0, j0)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        out.push(Check::new(format!("maurer/dT-equals-omega-T/{:02}", i + 1), "maurer", format!("(dT − ΩT) entry ({}, {})", i0 + 1, j0 + 1), move |ctx| {
            let p = ctx.get("gamma")?;
            let om = rmatrix::omega(p)?;
            let t = rmatrix::t_matrix(p)?;
            let diff = rmatrix::t_hat(p)?.sub(&om.mul(&t)?)?;
            zero_in(p, diff.get(i0, j0))
        }));
        out.push(Check::new(format!("maurer/matrix/{:02}", i + 1), "maurer", format!("(dΩ − σ₃Ωσ₃Ω) entry ({}, {})", i0 + 1, j0 + 1), move |ctx| {
            let p = ctx.get("gamma")?;
            Ok(maurer_matrix(p, &ctx.differential_hopf()?.d)?[i].clone())
        }));
    }
    for (i, (form, rhs)) in MAURER_LINES.into_iter().enumerate() {
        out.push(Check::new(format!("maurer/two-forms/{:02}", i + 1), "maurer", format!("d {form} = {rhs}"), move |ctx| {
            let p = ctx.get("gamma")?;
            let d = &ctx.differential_hopf()?.d;
            let lhs = d.apply(&p.composite(form)?)?;
            zero_in(p, &(&lhs - &p.parse(rhs)?))
        }));
    }
    for (form, odd) in [("w1", true), ("u", false), ("v", false), ("w2", true)] {
        out.push(Check::new(format!("maurer/parity/{form}"), "maurer", format!("{form} is {}", if odd { "odd" } else { "even" }), move |ctx| {
            let p = ctx.get("gamma")?;
            let e = p.composite(form)?;
            Ok(match e.homogeneous_parity() {
                Some(par) if par.is_odd() == odd => None,
                _ => Some(format!("{form} = {}", e.render(true))),
            })
        }));
    }
    out
}

fn superplane() -> Vec<Check> {
    let mut out = Vec::new();
    for (i, line) in SUPERPLANE_RELATIONS.iter().enumerate() {
        out.push(relation_check(format!("superplane/{:02}", i + 1), *line, "oneforms"));
    }
    for (name, odd) in [("x", false), ("theta", true)] {
        out.push(Check::new(format!("superplane/parity/{name}"), "superplane", format!("{name} is {}", if odd { "odd" } else { "even" }), move |ctx| {
            let e = ctx.get("oneforms")?.composite(name)?;
            Ok(match e.homogeneous_parity() {
                Some(par) if par.is_odd() == odd => None,
                _ => Some(e.render(true)),
            })
        }));
    }
    out
}

fn rmatrix_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for id in Identity::ALL {
        for k in 0..16 {
            out.push(Check::new(
                format!("rmatrix/{}/e{}{}", id.name(), k / 4 + 1, k % 4 + 1),
                "matrix-identity",
                format!("{} entry ({}, {}) under {}", id.formula(), k / 4 + 1, k % 4 + 1, CONVENTION.name()),
                move |ctx| Ok(ctx.identity(id)?[k].clone()),
            ));
        }
    }
    out.push(
        Check::new("rmatrix/rtt-mutation", "matrix-identity", "RTT with R(4,2) set to 0 must fail", |ctx| {
            rmatrix::rtt_mutation(ctx.get("glh")?, CONVENTION)
        })
        .expect_nonzero(),
    );
    out.push(Check::new("rmatrix/r-nilpotent", "r-matrix", "(R − I)² = 0", |ctx| {
        Ok(rmatrix::r_nilpotent(ctx.get("glh")?.table())?.into_iter().flatten().next())
    }));
    out.push(Check::new("rmatrix/r-inverse", "r-matrix", "R(2I − R) = (2I − R)R = I", |ctx| {
        Ok(rmatrix::r_inverse_check(ctx.get("glh")?.table())?.into_iter().flatten().next())
    }));
    out.push(Check::new("rmatrix/r-graded", "r-matrix", "entry (i, j) of R has parity p(i) + p(j)", |ctx| {
        let r = rmatrix::r_matrix(ctx.get("glh")?.table());
        Ok((!r.graded(false)).then(|| "R is not graded".to_string()))
    }));
    out.push(Check::new("rmatrix/yang-baxter", "r-matrix", "R12 R13 R23 = R23 R13 R12 (supplementary)", |ctx| {
        Ok(rmatrix::yang_baxter(ctx.get("glh")?.table())?.into_iter().flatten().next())
    }));
    out.push(Check::new(
        "rmatrix/convention-unique",
        "matrix-identity",
        format!("exactly one leg-sign convention passes every identity, namely {}", CONVENTION.name()),
        |ctx| {
            let pass = rmatrix::passing_conventions(ctx.library())?;
            Ok((pass != [CONVENTION]).then(|| {
                let names: Vec<_> = pass.iter().map(|c| c.name()).collect();
                format!("passing conventions: [{}]", names.join(", "))
            }))
        },
    ));
    out
}

fn superalgebra() -> Vec<Check> {
    let mut out = Vec::new();
    for (cat, lines) in [("superalgebra", SUPERALGEBRA_RELATIONS), ("vector-on-params", VECTOR_ON_PARAM_RELATIONS)] {
        for (i, line) in lines.iter().enumerate() {
            out.push(relation_check(format!("superalgebra/{cat}/{:02}", i + 1), *line, "weyl"));
        }
    }
    for (i, line) in SUPERALGEBRA_RELATIONS.iter().enumerate() {
        for g in ["1", "a", "beta", "gamma", "d"] {
            let text = line.text;
            out.push(Check::new(format!("superalgebra/act-superalgebra/{:02}/{g}", i + 1), "act", format!("({text}) acting on {g}"), move |ctx| {
                let p = ctx.get("weyl")?;
                Ok(witness(&act(p, &p.relation(text)?, &p.parse(g)?)?))
            }));
        }
    }
    for (i, line) in VECTOR_ON_PARAM_RELATIONS.iter().enumerate() {
        let text = line.text;
        out.push(Check::new(format!("superalgebra/act-vector-on-params/{:02}", i + 1), "act", format!("({text}) acting on 1"), move |ctx| {
            let p = ctx.get("weyl")?;
            Ok(witness(&act(p, &p.relation(text)?, &Element::one(p.table()))?))
        }));
    }
    out
}

fn derivatives_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for x in PARTIALS.iter().chain(&["Da_inv", "Dd_inv"]) {
        let x = *x;
        out.push(Check::new(format!("derivatives/coassociativity/{x}"), "derivative-hopf", format!("(Δ⊗id)Δ({x}) = (id⊗Δ)Δ({x})"), move |ctx| {
            coassociativity(&ctx.derivative_hopf()?.delta, &ctx.get("derivatives")?.gen(x))
        }));
        for (side, left) in [("left", true), ("right", false)] {
            out.push(Check::new(format!("derivatives/counit-{side}/{x}"), "derivative-hopf", format!("{side} counit law on {x}"), move |ctx| {
                let h = ctx.derivative_hopf()?;
                counit_law(&h.delta, &h.eps, &ctx.get("derivatives")?.gen(x), left)
            }));
            out.push(Check::new(format!("derivatives/antipode-{side}/{x}"), "derivative-hopf", format!("{side} antipode law on {x}"), move |ctx| {
                let h = ctx.derivative_hopf()?;
                antipode_law(&h.delta, &h.eps, &h.s, &ctx.get("derivatives")?.gen(x), left)
            }));
        }
    }
    for (i, line) in DERIVATIVE_RELATIONS.iter().enumerate() {
        let text = line.text;
        out.push(Check::new(format!("derivatives/coproduct-preserves/{:02}", i + 1), "derivatives", text, move |ctx| {
            relation_image(ctx.get("derivatives")?, &ctx.derivative_hopf()?.delta, text)
        }));
        out.push(Check::new(format!("derivatives/counit-preserves/{:02}", i + 1), "derivatives", text, move |ctx| {
            relation_image(ctx.get("derivatives")?, &ctx.derivative_hopf()?.eps, text)
        }));
        out.push(Check::new(format!("derivatives/antipode-preserves/{:02}", i + 1), "derivatives", text, move |ctx| {
            relation_image(ctx.get("derivatives")?, &ctx.derivative_hopf()?.s, text)
        }));
    }
    let mut words = vec![vec![]];
    words.extend(short_words(2));
    for (n, w) in words.into_iter().enumerate() {
        let src = if w.is_empty() { "1".to_string() } else { w.join("*") };
        let (s1, s2) = (src.clone(), src.clone());
        out.push(Check::new(format!("derivatives/d-by-partials/{:02}", n + 1), "d-expansion", format!("d f = Σ dx·∂_x f, f = {src}"), move |ctx| {
            let g = ctx.get("gamma")?;
            Ok(d_expansions(g, ctx.get("weyl")?, &ctx.differential_hopf()?.d, &g.parse(&s1)?)?.0)
        }));
        out.push(Check::new(format!("derivatives/d-by-vector-fields/{:02}", n + 1), "d-expansion", format!("d f = Σ ω·X f, f = {src}"), move |ctx| {
            let g = ctx.get("gamma")?;
            Ok(d_expansions(g, ctx.get("weyl")?, &ctx.differential_hopf()?.d, &g.parse(&s2)?)?.1)
        }));
    }
    out
}

fn contraction() -> Vec<Check> {
    let mut out = Vec::new();
    for (i, line) in GLH_RELATIONS.iter().enumerate() {
        let text = line.text;
        out.push(Check::new(format!("contraction/exact/{:02}", i + 1), "contraction", format!("{text} for g⁻¹T′g at symbolic q"), move |ctx| {
            let r = ctx.contraction()?.0.residual(text)?;
            Ok(match (witness(&r), r.is_q_free()) {
                (None, _) => None,
                (Some(w), true) => Some(w),
                (Some(w), false) => Some(format!("{w} (depends on q)")),
            })
        }));
        out.push(Check::new(format!("contraction/limit/{:02}", i + 1), "contraction", format!("{text} for g⁻¹T′g as q → 1"), move |ctx| {
            let (c, u) = ctx.contraction()?;
            let r = u.apply(&c.residual(text)?)?;
            match at_q_one(&r) {
                Ok(e) => Ok(witness(&e)),
                Err(pole) => Ok(Some(pole)),
            }
        }));
    }
    out.push(Check::new("contraction/superdeterminant", "contraction", "D_h of the conjugated entries equals the q-superdeterminant of T′", |ctx| {
        ctx.contraction()?.0.determinant_residual()
    }));
    out.push(Check::new("contraction/parity", "contraction", "conjugated entries keep the parity of a, β, γ, d", |ctx| {
        let c = &ctx.contraction()?.0;
        for (x, odd) in [("a", false), ("beta", true), ("gamma", true), ("d", false)] {
            let e = c.image(x)?;
            if e.homogeneous_parity().map(|p| p.is_odd()) != Some(odd) {
                return Ok(Some(format!("{x} ↦ {}", e.render(true))));
            }
        }
        Ok(None)
    }));
    out.push(Check::new("contraction/trivial-at-h-zero", "contraction", "g⁻¹T′g = T′ when h is deleted", |ctx| {
        let c = &ctx.contraction()?.0;
        for (x, xp) in [("a", "ap"), ("beta", "betap"), ("gamma", "gammap"), ("d", "dp")] {
            let e = c.image(x)?.drop_h();
            let p = ctx.get("glq")?;
            if e != p.gen(xp) {
                return Ok(Some(format!("{x} ↦ {}", e.render(true))));
            }
        }
        Ok(None)
    }));
    out
}


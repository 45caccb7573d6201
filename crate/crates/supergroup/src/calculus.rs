//! The exterior differential, Cartan-Maurer forms, and the realization of
//! the vector fields by partial derivatives.

use qsg_core::{Coefficient, Element, RuleSet, Scalar, Word};

use crate::error::Error;
use crate::maps::{witness, Derivation};
use crate::presentations::Presentation;
use crate::rmatrix::{omega, Matrix};

/// `d` on a table containing the matrix entries and their differentials:
/// `a ↦ α, β ↦ b, γ ↦ c, d ↦ δ`, differentials are closed, and
/// `d(x⁻¹) = −x⁻¹·dx·x⁻¹`.
pub fn exterior(rules: &RuleSet) -> Result<Derivation, Error> {
    let t = rules.table();
    let mut d = Derivation::new("exterior differential", rules);
    for (x, dx) in [("a", "alpha"), ("beta", "b"), ("gamma", "c"), ("d", "delta")] {
        d.set(x, rules.gen(dx)?)?;
    }
    for dx in ["alpha", "b", "c", "delta", "c_inv"] {
        if t.lookup(dx).is_some() {
            d.set(dx, Element::zero(t))?;
        }
    }
    for (x, dx) in [("a", "alpha"), ("d", "delta")] {
        let inv = rules.gen(&format!("{x}_inv"))?;
        let img = -&(&(&inv * &rules.gen(dx)?) * &inv);
        d.set(&format!("{x}_inv"), img)?;
    }
    Ok(d)
}

/// `d` of the relation `lhs = rhs`.
pub fn d_relation(p: &Presentation, d: &Derivation, text: &str) -> Result<Option<String>, Error> {
    Ok(witness(&d.apply(&p.relation(text)?)?))
}

/// `d(d(x))`
pub fn d_squared(d: &Derivation, x: &Element) -> Result<Option<String>, Error> {
    let once = d.apply(x)?;
    Ok(witness(&d.apply(&once)?))
}

/// Graded commutator `xy − (−1)^{p(x)p(y)} yx`, normalized.
pub fn supercommutator(p: &Presentation, x: &Element, y: &Element) -> Result<Option<String>, Error> {
    let odd = |e: &Element| e.homogeneous_parity().map(|q| q.is_odd()).unwrap_or(false);
    let yx = y * x;
    let diff = if odd(x) && odd(y) { &(x * y) + &yx } else { &(x * y) - &yx };
    Ok(witness(&p.normalize(&diff)?))
}

/// `dΩ − σ₃Ωσ₃Ω` entrywise, with `d` applied to the composite one-forms.
pub fn maurer_matrix(p: &Presentation, d: &Derivation) -> Result<Vec<Option<String>>, Error> {
    let om = omega(p)?;
    let sigma = Matrix::diagonal(p.table(), &[1, -1]);
    let rhs = sigma.mul(&om)?.mul(&sigma)?.mul(&om)?;
    let dom = om.map(|e| d.apply(e))?;
    let diff = dom.sub(&rhs)?.normalize(p.rules())?;
    Ok(diff.entries().iter().map(witness).collect())
}

/// The one-forms named in `p` have the computed parities `(odd, even, even,
/// odd)`.
pub fn oneform_parities(p: &Presentation) -> Result<Vec<(String, String)>, Error> {
    let mut out = Vec::new();
    for name in ["w1", "u", "v", "w2"] {
        let e = p.composite(name).or_else(|_| p.parse(name))?;
        let par = match e.homogeneous_parity() {
            Some(q) if q.is_odd() => "odd",
            Some(_) => "even",
            None => "mixed",
        };
        out.push((name.to_string(), par.to_string()));
    }
    Ok(out)
}

/// `op` applied to `f`: normal-order `op·f` and keep the words free of
/// partial derivatives, since every derivative annihilates `1`.
pub fn act(weyl: &Presentation, op: &Element, f: &Element) -> Result<Element, Error> {
    let nf = weyl.normalize(&(op * f))?;
    let t = weyl.table();
    let is_partial = |g: &qsg_core::GenId| t.get(*g).name.starts_with('D');
    let mut out = Element::zero(t);
    for (w, k) in nf.terms() {
        if !w.letters().iter().any(is_partial) {
            out.add_term(w.clone(), k.clone());
        }
    }
    Ok(out)
}

/// All words of length at most `n` in the matrix entries, as elements of
/// `p`.
pub fn parameter_words(p: &Presentation, n: usize) -> Vec<Element> {
    let gens: Vec<_> = ["a", "beta", "gamma", "d"].iter().map(|g| p.table().id(g).expect("entry")).collect();
    let mut words: Vec<Vec<qsg_core::GenId>> = vec![vec![]];
    let mut layer = words.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                let mut v = w.clone();
                v.push(*g);
                next.push(v);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
        .into_iter()
        .map(|w| Element::term(p.table(), Word::new(0, w), Scalar::from_int(1)))
        .collect()
}

/// `d f` against `Σ dx·(∂_x f)` and against `Σ ω·(X f)`, both in `gamma`.
/// Returns the two residuals.
pub fn d_expansions(
    gamma: &Presentation,
    weyl: &Presentation,
    d: &Derivation,
    f: &Element,
) -> Result<(Option<String>, Option<String>), Error> {
    let fw = f.embed(weyl.table())?;
    let df = d.apply(f)?;
    let mut partials = Element::zero(gamma.table());
    for (dx, part) in [("alpha", "Da"), ("b", "Dbeta"), ("c", "Dgamma"), ("delta", "Dd")] {
        let v = act(weyl, &weyl.gen(part), &fw)?.embed(gamma.table())?;
        partials = &partials + &(&gamma.gen(dx) * &v);
    }
    let mut fields = Element::zero(gamma.table());
    for (form, field) in [("w1", "T1"), ("u", "nablaP"), ("v", "nablaM"), ("w2", "T2")] {
        let v = act(weyl, &weyl.composite(field)?, &fw)?.embed(gamma.table())?;
        fields = &fields + &(&gamma.composite(form)? * &v);
    }
    let r1 = gamma.normalize(&(&df - &partials))?;
    let r2 = gamma.normalize(&(&df - &fields))?;
    Ok((witness(&r1), witness(&r2)))
}

//! Coproducts, counits, antipodes and coactions on the matrix supergroup,
//! its differential algebra, and the partial derivatives.

use qsg_core::{invert_perturbed, Coefficient, Element, RuleSet, Scalar, TensorAlgebra, TensorElement};

use crate::calculus::exterior;
use crate::error::Error;
use crate::maps::{map_slots, tau, witness, Derivation, GenMap, Mode};
use crate::presentations::{split_relation, Presentation};

/// Matrix entries in the row-major order `a, β, γ, d`.
pub const ENTRIES: [&str; 4] = ["a", "beta", "gamma", "d"];
/// Their differentials in the same order.
pub const DIFFERENTIALS: [&str; 4] = ["alpha", "b", "c", "delta"];
/// Entries of the inverse matrix.
pub const INVERSE: [&str; 4] = ["A", "B", "C", "D"];
pub const PARTIALS: [&str; 4] = ["Da", "Dbeta", "Dgamma", "Dd"];

fn odd_index(i: usize) -> bool {
    i == 1
}

/// Parity of the `(i, j)` entry of a matrix whose entries are even on the
/// diagonal.
fn entry_odd(i: usize, j: usize) -> bool {
    odd_index(i) != odd_index(j)
}

pub(crate) fn tensor_of(rules: &RuleSet, parts: &[&str]) -> Result<TensorElement, Error> {
    let elems = parts.iter().map(|n| rules.gen(n)).collect::<Result<Vec<_>, _>>()?;
    let refs: Vec<&Element> = elems.iter().collect();
    Ok(TensorElement::pure(&refs)?)
}

/// `Σₖ X^i_k ⊗ Y^k_j` for 2×2 matrices of generator names.
fn matrix_coproduct(rules: &RuleSet, x: &[&str; 4], y: &[&str; 4], i: usize, j: usize) -> Result<TensorElement, Error> {
    let first = tensor_of(rules, &[x[2 * i], y[j]])?;
    Ok(first.try_add(&tensor_of(rules, &[x[2 * i + 1], y[2 + j]])?)?)
}

/// `Δ(T^i_j) = T^i_k ⊗ T^k_j`, with the inverses of `a` and `d` when the
/// table has them.
pub fn coproduct(rules: &RuleSet) -> Result<GenMap<TensorElement>, Error> {
    let mut delta = GenMap::new("coproduct", rules, 2, Mode::Hom);
    for (n, name) in ENTRIES.iter().enumerate() {
        delta.set(name, matrix_coproduct(rules, &ENTRIES, &ENTRIES, n / 2, n % 2)?)?;
    }
    let alg = TensorAlgebra { rules, slots: 2 };
    for (x, odd) in [("a", ["beta", "gamma"]), ("d", ["gamma", "beta"])] {
        let inv = format!("{x}_inv");
        if rules.table().lookup(&inv).is_none() {
            continue;
        }
        let main = tensor_of(rules, &[x, x])?;
        let main_inv = tensor_of(rules, &[&inv, &inv])?;
        let n = tensor_of(rules, &odd)?;
        let image = invert_perturbed(&alg, &main, &main_inv, &n)?;
        delta.set(&inv, image)?;
    }
    Ok(delta)
}

pub fn counit(rules: &RuleSet) -> Result<GenMap<Element>, Error> {
    let mut eps = GenMap::new("counit", rules, 1, Mode::Hom);
    let t = rules.table();
    for (name, v) in [("a", 1), ("beta", 0), ("gamma", 0), ("d", 1), ("a_inv", 1), ("d_inv", 1)] {
        if t.lookup(name).is_some() {
            eps.set(name, Element::scalar(t, Scalar::from_int(v)))?;
        }
    }
    Ok(eps)
}

/// `S(T) = T⁻¹`, extended as a graded antihomomorphism. Needs the inverse
/// entries `A, B, C, D` bound in `p`.
pub fn antipode(p: &Presentation) -> Result<GenMap<Element>, Error> {
    let rules = p.rules();
    let mut s = GenMap::new("antipode", rules, 1, Mode::AntiHom);
    for (g, c) in ENTRIES.iter().zip(INVERSE) {
        s.set(g, p.composite(c)?)?;
    }
    for (x, c) in [("a", "A"), ("d", "D")] {
        let inv = format!("{x}_inv");
        let img = p.composite(c)?;
        let base = p.gen(&inv);
        let n = &img - &base;
        s.set(&inv, invert_perturbed(rules, &base, &p.gen(x), &n)?)?;
    }
    Ok(s)
}

/// Co-structures of the matrix supergroup.
pub struct MatrixHopf {
    pub delta: GenMap<TensorElement>,
    pub eps: GenMap<Element>,
    pub s: GenMap<Element>,
}

impl MatrixHopf {
    pub fn new(p: &Presentation) -> Result<Self, Error> {
        Ok(MatrixHopf {
            delta: coproduct(p.rules())?,
            eps: counit(p.rules())?,
            s: antipode(p)?,
        })
    }
}

/// `(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x)`
pub fn coassociativity(delta: &GenMap<TensorElement>, x: &Element) -> Result<Option<String>, Error> {
    let d = delta.apply(x)?;
    let left = map_slots(&d, |i, e| if i == 0 { delta.apply(e) } else { Ok(TensorElement::from_element(e)) })?;
    let right = map_slots(&d, |i, e| if i == 1 { delta.apply(e) } else { Ok(TensorElement::from_element(e)) })?;
    Ok(witness(&left.try_sub(&right)?.normalize(delta.rules())?))
}

/// `μ(ε⊗id)Δ(x) − x` when `left`, else `μ′(id⊗ε)Δ(x) − x`.
pub fn counit_law(
    delta: &GenMap<TensorElement>,
    eps: &GenMap<Element>,
    x: &Element,
    left: bool,
) -> Result<Option<String>, Error> {
    let d = delta.apply(x)?;
    let table = delta.table();
    let mut out = -x;
    for (w, k) in d.terms() {
        let (kill, keep) = if left { (0, 1) } else { (1, 0) };
        let word = |idx: usize| Element::term(table, qsg_core::Word::new(0, w.slots()[idx].iter().copied()), Scalar::from_int(1));
        let value = eps.apply(&word(kill))?;
        let mut term = &value * &word(keep);
        if w.hdeg() == 1 {
            term = &Element::h(table) * &term;
        }
        out = &out + &term.scale(k);
    }
    Ok(witness(&delta.rules().normalize(&out)?))
}

/// `m(S⊗id)Δ(x) − ε(x)` when `left`, else `m(id⊗S)Δ(x) − ε(x)`.
pub fn antipode_law(
    delta: &GenMap<TensorElement>,
    eps: &GenMap<Element>,
    s: &GenMap<Element>,
    x: &Element,
    left: bool,
) -> Result<Option<String>, Error> {
    let d = delta.apply(x)?;
    let target = if left { 0 } else { 1 };
    let applied = map_slots(&d, |i, e| {
        Ok(TensorElement::from_element(&if i == target { s.apply(e)? } else { e.clone() }))
    })?;
    let lhs = applied.contract();
    let diff = &lhs - &eps.apply(x)?;
    Ok(witness(&delta.rules().normalize(&diff)?))
}

/// Image of the relation `lhs = rhs` (parsed in `p`) under a map.
pub fn relation_image<T: crate::maps::Target>(
    p: &Presentation,
    map: &GenMap<T>,
    text: &str,
) -> Result<Option<String>, Error> {
    let rel = p.relation(text)?;
    Ok(witness(&map.apply(&rel)?))
}

/// Co-structures of the differential algebra and the two coactions.
pub struct DifferentialHopf {
    pub d: Derivation,
    pub delta: GenMap<TensorElement>,
    pub right: GenMap<TensorElement>,
    pub left: GenMap<TensorElement>,
    pub delta_hat: GenMap<TensorElement>,
    pub eps_hat: GenMap<Element>,
    pub s_hat: GenMap<Element>,
}

impl DifferentialHopf {
    pub fn new(p: &Presentation) -> Result<Self, Error> {
        let rules = p.rules();
        let d = exterior(rules)?;
        let delta = coproduct(rules)?;
        let mut right = delta.clone();
        let mut left = delta.clone();
        let mut delta_hat = delta.clone();
        let mut eps_hat = counit(rules)?;
        let mut s_hat = antipode(p)?;
        for (n, (x, dx)) in ENTRIES.iter().zip(DIFFERENTIALS).enumerate() {
            let dx_elem = p.gen(x);
            let cop = delta.apply(&dx_elem)?;
            right.set(dx, d_tensor(&d, &cop, 0)?)?;
            left.set(dx, d_tensor(&d, &cop, 1)?)?;
            let (i, j) = (n / 2, n % 2);
            delta_hat.set(dx, hat_coproduct(rules, i, j)?)?;
            eps_hat.set(dx, Element::zero(rules.table()))?;
            s_hat.set(dx, hat_antipode(p, i, j)?)?;
        }
        Ok(DifferentialHopf {
            d,
            delta,
            right,
            left,
            delta_hat,
            eps_hat,
            s_hat,
        })
    }
}

/// `(d⊗id)` on slot 0 or `(τ⊗d)` on slot 1.
pub fn d_tensor(d: &Derivation, x: &TensorElement, slot: usize) -> Result<TensorElement, Error> {
    map_slots(x, |i, e| {
        let img = match (slot, i) {
            (0, 0) => d.apply(e)?,
            (1, 0) => tau(e),
            (1, 1) => d.apply(e)?,
            _ => e.clone(),
        };
        Ok(TensorElement::from_element(&img))
    })?
    .normalize(d.rules())
    .map_err(Error::from)
}

/// `Δ̂(dT^i_j) = dT^i_k ⊗ T^k_j + (−1)^{p(T^i_k)} T^i_k ⊗ dT^k_j`
fn hat_coproduct(rules: &RuleSet, i: usize, j: usize) -> Result<TensorElement, Error> {
    let mut out = TensorElement::zero(rules.table(), 2);
    for k in 0..2 {
        out = out.try_add(&tensor_of(rules, &[DIFFERENTIALS[2 * i + k], ENTRIES[2 * k + j]])?)?;
        let t = tensor_of(rules, &[ENTRIES[2 * i + k], DIFFERENTIALS[2 * k + j]])?;
        out = out.try_add(&if entry_odd(i, k) { t.neg() } else { t })?;
    }
    Ok(out)
}

/// `Ŝ(dT^i_j) = −(−1)^{p[(T⁻¹)^i_k]} (T⁻¹)^i_k dT^k_l (T⁻¹)^l_j`
fn hat_antipode(p: &Presentation, i: usize, j: usize) -> Result<Element, Error> {
    let mut out = Element::zero(p.table());
    for k in 0..2 {
        for l in 0..2 {
            let term = &(&p.composite(INVERSE[2 * i + k])? * &p.gen(DIFFERENTIALS[2 * k + l]))
                * &p.composite(INVERSE[2 * l + j])?;
            out = if entry_odd(i, k) { &out + &term } else { &out - &term };
        }
    }
    Ok(out)
}

/// Apply `outer` to the slot `slot` of `inner(x)`, the rest by identity.
pub fn compose(
    outer: &GenMap<TensorElement>,
    slot: usize,
    inner: &GenMap<TensorElement>,
    x: &Element,
) -> Result<TensorElement, Error> {
    let t = inner.apply(x)?;
    map_slots(&t, |i, e| if i == slot { outer.apply(e) } else { Ok(TensorElement::from_element(e)) })?
        .normalize(inner.rules())
        .map_err(Error::from)
}

/// Co-structures of the partial derivatives.
pub struct DerivativeHopf {
    pub delta: GenMap<TensorElement>,
    pub eps: GenMap<Element>,
    pub s: GenMap<Element>,
}

/// `Δ(∂)` displayed for the partial derivatives.
const PARTIAL_COPRODUCT: [(&str, [[&str; 2]; 2]); 4] = [
    ("Da", [["Da", "Da"], ["Dbeta", "Dgamma"]]),
    ("Dbeta", [["Da", "Dbeta"], ["Dbeta", "Dd"]]),
    ("Dgamma", [["Dgamma", "Da"], ["Dd", "Dgamma"]]),
    ("Dd", [["Dd", "Dd"], ["Dgamma", "Dbeta"]]),
];

const PARTIAL_ANTIPODE: [(&str, &str); 4] = [
    ("Da", "Da_inv + Da_inv*Dbeta*Dd_inv*Dgamma*Da_inv"),
    ("Dbeta", "-Da_inv*Dbeta*Dd_inv"),
    ("Dgamma", "-Dd_inv*Dgamma*Da_inv"),
    ("Dd", "Dd_inv + Dd_inv*Dgamma*Da_inv*Dbeta*Dd_inv"),
];

/// Coproduct of the partial derivatives, and of the matrix entries when the
/// table has them too.
pub fn partial_coproduct(rules: &RuleSet) -> Result<GenMap<TensorElement>, Error> {
    let t = rules.table();
    let mut delta = if t.lookup("a").is_some() {
        coproduct(rules)?
    } else {
        GenMap::new("coproduct", rules, 2, Mode::Hom)
    };
    for (g, [x, y]) in PARTIAL_COPRODUCT {
        delta.set(g, tensor_of(rules, &x)?.try_add(&tensor_of(rules, &y)?)?)?;
    }
    if t.lookup("Da_inv").is_some() {
        let alg = TensorAlgebra { rules, slots: 2 };
        for (x, odd) in [("Da", ["Dbeta", "Dgamma"]), ("Dd", ["Dgamma", "Dbeta"])] {
            let inv = format!("{x}_inv");
            let main = tensor_of(rules, &[x, x])?;
            let main_inv = tensor_of(rules, &[&inv, &inv])?;
            let n = tensor_of(rules, &odd)?;
            delta.set(&inv, invert_perturbed(&alg, &main, &main_inv, &n)?)?;
        }
    }
    Ok(delta)
}

impl DerivativeHopf {
    /// Needs a presentation with `∂a` and `∂d` invertible.
    pub fn new(p: &Presentation) -> Result<Self, Error> {
        let rules = p.rules();
        let t = p.table();
        let delta = partial_coproduct(rules)?;
        let mut eps = GenMap::new("counit", rules, 1, Mode::Hom);
        for (name, v) in [("Da", 1), ("Dbeta", 0), ("Dgamma", 0), ("Dd", 1), ("Da_inv", 1), ("Dd_inv", 1)] {
            eps.set(name, Element::scalar(t, Scalar::from_int(v)))?;
        }
        let mut s = GenMap::new("antipode", rules, 1, Mode::AntiHom);
        for (g, src) in PARTIAL_ANTIPODE {
            s.set(g, p.parse(src)?)?;
        }
        for x in ["Da", "Dd"] {
            let inv = format!("{x}_inv");
            let img = s.image(x)?.clone();
            let base = p.gen(&inv);
            let n = &img - &base;
            s.set(&inv, invert_perturbed(rules, &base, &p.gen(x), &n)?)?;
        }
        Ok(DerivativeHopf { delta, eps, s })
    }
}

/// Images of the relation lines under the coproduct that mixes the matrix
/// entries with the partial derivatives; the first nonzero one is returned.
pub fn first_unpreserved(
    p: &Presentation,
    delta: &GenMap<TensorElement>,
    lines: &[crate::presentations::RelationLine],
) -> Result<Option<String>, Error> {
    for line in lines {
        split_relation(line.text)?;
        if let Some(w) = relation_image(p, delta, line.text)? {
            return Ok(Some(format!("{}: {}", line.text, w)));
        }
    }
    Ok(None)
}

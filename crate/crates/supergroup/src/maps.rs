//! Maps defined on generators and extended to words: homomorphisms,
//! graded antihomomorphisms, and odd derivations, into plain or tensor
//! targets.

use std::collections::HashMap;

use qsg_core::{Coefficient, Element, GenId, RuleSet, Scalar, SharedTable, TensorElement, Word};

use crate::error::Error;

/// What a generator map can land in.
pub trait Target: Clone {
    fn one(table: &SharedTable, slots: usize) -> Self;
    fn zero(table: &SharedTable, slots: usize) -> Self;
    fn h(table: &SharedTable, slots: usize) -> Self;
    fn plus(&self, other: &Self) -> Result<Self, Error>;
    fn times(&self, other: &Self) -> Result<Self, Error>;
    fn scaled(&self, k: &Scalar) -> Self;
    fn reduce(&self, rules: &RuleSet) -> Result<Self, Error>;
    fn vanishes(&self) -> bool;
    fn show(&self) -> String;
}

impl Target for Element {
    fn one(table: &SharedTable, _: usize) -> Self {
        Element::one(table)
    }

    fn zero(table: &SharedTable, _: usize) -> Self {
        Element::zero(table)
    }

    fn h(table: &SharedTable, _: usize) -> Self {
        Element::h(table)
    }

    fn plus(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.try_add(other)?)
    }

    fn times(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.try_mul(other)?)
    }

    fn scaled(&self, k: &Scalar) -> Self {
        self.scale(k)
    }

    fn reduce(&self, rules: &RuleSet) -> Result<Self, Error> {
        Ok(rules.normalize(self)?)
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn show(&self) -> String {
        self.render(true)
    }
}

impl Target for TensorElement {
    fn one(table: &SharedTable, slots: usize) -> Self {
        TensorElement::one(table, slots)
    }

    fn zero(table: &SharedTable, slots: usize) -> Self {
        TensorElement::zero(table, slots)
    }

    fn h(table: &SharedTable, slots: usize) -> Self {
        let mut parts = vec![Element::h(table)];
        parts.extend((1..slots).map(|_| Element::one(table)));
        let refs: Vec<&Element> = parts.iter().collect();
        TensorElement::pure(&refs).expect("same table")
    }

    fn plus(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.try_add(other)?)
    }

    fn times(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.try_mul(other)?)
    }

    fn scaled(&self, k: &Scalar) -> Self {
        self.scale(k)
    }

    fn reduce(&self, rules: &RuleSet) -> Result<Self, Error> {
        Ok(self.normalize(rules)?)
    }

    fn vanishes(&self) -> bool {
        self.is_zero()
    }

    fn show(&self) -> String {
        self.render(true)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// `f(xy) = f(x) f(y)`
    Hom,
    /// `f(xy) = (−1)^{p(x)p(y)} f(y) f(x)`
    AntiHom,
}

/// A map given on generators, extended multiplicatively. The parameter `h`
/// is fixed: `f(h·w) = h·f(w)`.
#[derive(Clone)]
pub struct GenMap<T: Target> {
    name: &'static str,
    rules: RuleSet,
    slots: usize,
    mode: Mode,
    images: HashMap<GenId, T>,
}

impl<T: Target> GenMap<T> {
    pub fn new(name: &'static str, rules: &RuleSet, slots: usize, mode: Mode) -> Self {
        GenMap {
            name,
            rules: rules.clone(),
            slots,
            mode,
            images: HashMap::new(),
        }
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn table(&self) -> &SharedTable {
        self.rules.table()
    }

    pub fn set(&mut self, gen: &str, image: T) -> Result<&mut Self, Error> {
        let id = self.table().id(gen)?;
        self.images.insert(id, image.reduce(&self.rules)?);
        Ok(self)
    }

    pub fn image(&self, gen: &str) -> Result<&T, Error> {
        let id = self.table().id(gen)?;
        self.images.get(&id).ok_or_else(|| Error::NoImage(gen.to_string(), self.name))
    }

    pub fn has(&self, gen: &str) -> bool {
        self.table().id(gen).map(|id| self.images.contains_key(&id)).unwrap_or(false)
    }

    /// Image of `x`, normalized.
    pub fn apply(&self, x: &Element) -> Result<T, Error> {
        let table = self.table();
        let mut out = T::zero(table, self.slots);
        let mut cache: HashMap<Vec<GenId>, T> = HashMap::new();
        for (w, k) in x.terms() {
            let letters = w.letters();
            let mut img = match cache.get(letters) {
                Some(v) => v.clone(),
                None => {
                    let v = self.word(letters)?;
                    cache.insert(letters.to_vec(), v.clone());
                    v
                }
            };
            if w.has_h() {
                img = T::h(table, self.slots).times(&img)?;
            }
            out = out.plus(&img.scaled(k))?;
        }
        out.reduce(&self.rules)
    }

    fn word(&self, letters: &[GenId]) -> Result<T, Error> {
        let table = self.table();
        let mut acc = T::one(table, self.slots);
        let order: Vec<GenId> = match self.mode {
            Mode::Hom => letters.to_vec(),
            Mode::AntiHom => letters.iter().rev().copied().collect(),
        };
        for g in order {
            let img = self
                .images
                .get(&g)
                .ok_or_else(|| Error::NoImage(table.get(g).name.clone(), self.name))?;
            acc = acc.times(img)?.reduce(&self.rules)?;
        }
        if self.mode == Mode::AntiHom {
            let odd = letters.iter().filter(|g| table.parity(**g).is_odd()).count();
            if (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
                acc = acc.scaled(&-Scalar::from_int(1));
            }
        }
        Ok(acc)
    }
}

/// An odd derivation fixed by its values on generators:
/// `D(xy) = D(x) y + (−1)^{p(x)} x D(y)` and `D(h·w) = −h·D(w)`.
#[derive(Clone)]
pub struct Derivation {
    name: &'static str,
    rules: RuleSet,
    images: HashMap<GenId, Element>,
}

impl Derivation {
    pub fn new(name: &'static str, rules: &RuleSet) -> Self {
        Derivation {
            name,
            rules: rules.clone(),
            images: HashMap::new(),
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn table(&self) -> &SharedTable {
        self.rules.table()
    }

    pub fn set(&mut self, gen: &str, image: Element) -> Result<&mut Self, Error> {
        let id = self.table().id(gen)?;
        self.images.insert(id, self.rules.normalize(&image)?);
        Ok(self)
    }

    pub fn image(&self, gen: &str) -> Result<&Element, Error> {
        let id = self.table().id(gen)?;
        self.images.get(&id).ok_or_else(|| Error::NoImage(gen.to_string(), self.name))
    }

    /// Unnormalized Leibniz expansion.
    pub fn expand(&self, x: &Element) -> Result<Element, Error> {
        let table = self.table();
        let mut out = Element::zero(table);
        for (w, k) in x.terms() {
            let letters = w.letters();
            let mut sign = 1i64;
            for (i, g) in letters.iter().enumerate() {
                let img = self
                    .images
                    .get(g)
                    .ok_or_else(|| Error::NoImage(table.get(*g).name.clone(), self.name))?;
                let left = Element::term(table, Word::new(0, letters[..i].iter().copied()), Scalar::from_int(sign));
                let right = Element::term(table, Word::new(0, letters[i + 1..].iter().copied()), Scalar::from_int(1));
                let mut piece = &(&left * img) * &right;
                if w.has_h() {
                    piece = -&(&Element::h(table) * &piece);
                }
                out = &out + &piece.scale(k);
                if table.parity(*g).is_odd() {
                    sign = -sign;
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Element) -> Result<Element, Error> {
        Ok(self.rules.normalize(&self.expand(x)?)?)
    }
}

/// `(f₀ ⊗ f₁ ⊗ …)(x)` with one map per slot. The shared `h` goes to the map
/// of the first slot; no Koszul signs are inserted, so maps that need them
/// (like `τ`) carry them explicitly.
pub fn map_slots<F>(x: &TensorElement, mut f: F) -> Result<TensorElement, Error>
where
    F: FnMut(usize, &Element) -> Result<TensorElement, Error>,
{
    let table = x.table();
    let mut out: Option<TensorElement> = None;
    for (w, k) in x.terms() {
        let mut acc: Option<TensorElement> = None;
        for (i, s) in w.slots().iter().enumerate() {
            let hdeg = if i == 0 { w.hdeg() } else { 0 };
            let arg = Element::term(table, Word::new(hdeg, s.iter().copied()), Scalar::from_int(1));
            let img = f(i, &arg)?;
            acc = Some(match acc {
                None => img,
                Some(prev) => prev.tensor(&img)?,
            });
        }
        let img = acc.expect("at least one slot").scale(k);
        out = Some(match out {
            None => img,
            Some(prev) => prev.try_add(&img)?,
        });
    }
    Ok(out.unwrap_or_else(|| TensorElement::zero(table, x.slots())))
}

/// `τ(u) = (−1)^{p(u)} u` on a homogeneous word.
pub fn tau(x: &Element) -> Element {
    let mut out = Element::zero(x.table());
    for (w, k) in x.terms() {
        let odd = w.parity(x.table()).is_odd();
        out.add_term(w.clone(), if odd { -k.clone() } else { k.clone() });
    }
    out
}

/// The residual as a witness: `None` when it vanishes.
pub fn witness<T: Target>(x: &T) -> Option<String> {
    if x.vanishes() {
        None
    } else {
        Some(x.show())
    }
}

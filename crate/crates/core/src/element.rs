//! Elements of the graded free algebra with `h² = 0`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;


use crate::coeff::Coefficient;
use crate::error::AlgebraError;
use crate::generator::{GenId, GeneratorTable, Parity, SharedTable};
use crate::word::Word;
use crate::Scalar;

pub(crate) type Terms<K> = BTreeMap<Word, K>;

pub(crate) fn add_term<K: Coefficient>(terms: &mut Terms<K>, word: Word, coeff: K) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(word) {
        Entry::Vacant(v) => {
            v.insert(coeff);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn same_table(a: &SharedTable, b: &SharedTable) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Parity of an element: homogeneous, or a mix of both degrees.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementParity {
    Homogeneous(Parity),
    Mixed,
}

/// A finite linear combination of words in canonical form: no duplicate
/// words, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Element<K = Scalar> {
    table: SharedTable,
    terms: Terms<K>,
}

impl<K: Coefficient> PartialEq for Element<K> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl<K: Coefficient> Element<K> {
    pub fn zero(table: &SharedTable) -> Self {
        Element {
            table: table.clone(),
            terms: Terms::new(),
        }
    }

    pub fn one(table: &SharedTable) -> Self {
        Self::scalar(table, K::one())
    }

    pub fn scalar(table: &SharedTable, k: K) -> Self {
        Self::term(table, Word::one(), k)
    }

    /// `h · 1`
    pub fn h(table: &SharedTable) -> Self {
        Self::term(table, Word::h(), K::one())
    }

    pub fn gen(table: &SharedTable, id: GenId) -> Self {
        Self::term(table, Word::gen(id), K::one())
    }

    /// The generator called `name`.
    pub fn named(table: &SharedTable, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::gen(table, table.id(name)?))
    }

    pub fn term(table: &SharedTable, word: Word, k: K) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, word, k);
        Element {
            table: table.clone(),
            terms,
        }
    }

    pub(crate) fn from_terms(table: &SharedTable, terms: Terms<K>) -> Self {
        Element {
            table: table.clone(),
            terms,
        }
    }

    pub fn from_iter_terms(table: &SharedTable, it: impl IntoIterator<Item = (Word, K)>) -> Self {
        let mut terms = Terms::new();
        for (w, k) in it {
            add_term(&mut terms, w, k);
        }
        Self::from_terms(table, terms)
    }

    pub fn table(&self) -> &SharedTable {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &K)> {
        self.terms.iter()
    }

    pub(crate) fn terms_map(&self) -> &Terms<K> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> K {
        self.terms.get(w).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient if the element is a scalar multiple of `1`.
    pub fn as_scalar(&self) -> Option<K> {
        match self.terms.len() {
            0 => Some(K::zero()),
            1 => {
                let (w, k) = self.terms.iter().next().unwrap();
                (w.is_empty() && !w.has_h()).then(|| k.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, word: Word, k: K) {
        add_term(&mut self.terms, word, k);
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.clone() * k.clone()))
            .collect();
        Self::from_terms(&self.table, terms)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&K::from_int(n))
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(AlgebraError::TableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (w, k) in &other.terms {
            add_term(&mut terms, w.clone(), k.clone());
        }
        Ok(Self::from_terms(&self.table, terms))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&-other)
    }

    /// Free product with `h` moved to the front and `h²` truncated.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut terms = Terms::new();
        for (wa, ka) in &self.terms {
            for (wb, kb) in &other.terms {
                if let Some((sign, w)) = wa.mul(wb, &self.table) {
                    let mut k = ka.clone() * kb.clone();
                    if sign < 0 {
                        k = -k;
                    }
                    add_term(&mut terms, w, k);
                }
            }
        }
        Ok(Self::from_terms(&self.table, terms))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn parity(&self) -> ElementParity {
        let mut seen: Option<Parity> = None;
        for w in self.terms.keys() {
            let p = w.parity(&self.table);
            match seen {
                None => seen = Some(p),
                Some(s) if s != p => return ElementParity::Mixed,
                _ => {}
            }
        }
        ElementParity::Homogeneous(seen.unwrap_or(Parity::Even))
    }

    /// Parity when homogeneous.
    pub fn homogeneous_parity(&self) -> Option<Parity> {
        match self.parity() {
            ElementParity::Homogeneous(p) => Some(p),
            ElementParity::Mixed => None,
        }
    }

    /// The `h⁰` part (the classical shadow).
    pub fn drop_h(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| !w.has_h())
            .map(|(w, k)| (w.clone(), k.clone()))
            .collect();
        Self::from_terms(&self.table, terms)
    }

    /// The `h¹` part.
    pub fn h_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.has_h())
            .map(|(w, k)| (w.clone(), k.clone()))
            .collect();
        Self::from_terms(&self.table, terms)
    }

    pub fn is_q_free(&self) -> bool {
        self.terms.values().all(|k| k.is_q_free())
    }

    /// Generators occurring anywhere in the element.
    pub fn support(&self) -> Vec<GenId> {
        let mut ids: Vec<GenId> = self
            .terms
            .keys()
            .flat_map(|w| w.letters().iter().copied())
            .collect();
        ids.sort();
        ids.dedup();
        ids
    }

    pub fn map_coeffs<K2: Coefficient>(&self, mut f: impl FnMut(&K) -> K2) -> Element<K2> {
        let mut terms = Terms::new();
        for (w, k) in &self.terms {
            add_term(&mut terms, w.clone(), f(k));
        }
        Element::from_terms(&self.table, terms)
    }

    /// Re-expresses the element over another table, matching generators by name.
    pub fn embed(&self, table: &SharedTable) -> Result<Self, AlgebraError> {
        if same_table(&self.table, table) {
            return Ok(Self::from_terms(table, self.terms.clone()));
        }
        let mut terms = Terms::new();
        for (w, k) in &self.terms {
            let letters = w
                .letters()
                .iter()
                .map(|g| table.id(&self.table.get(*g).name))
                .collect::<Result<Vec<_>, _>>()?;
            add_term(&mut terms, Word::new(w.hdeg(), letters), k.clone());
        }
        Ok(Self::from_terms(table, terms))
    }

    /// Canonical text form. Terms print in a fixed order (h-free first, then
    /// by length, then by rank).
    pub fn render(&self, ascii: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, k)) in self.terms.iter().enumerate() {
            let neg = k.looks_negative();
            let mag = if neg { -k.clone() } else { k.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = w.render(&self.table, ascii);
            let mul = if ascii { "*" } else { "·" };
            if mag.is_one() {
                out.push_str(&word);
            } else {
                let c = if mag.is_atomic() {
                    mag.to_string()
                } else {
                    format!("({mag})")
                };
                out.push_str(&c);
                if !(w.is_empty() && !w.has_h()) {
                    out.push_str(mul);
                    out.push_str(&word);
                }
            }
        }
        out
    }
}

impl<K: Coefficient> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

// Operator forms panic on a table mismatch; use the `try_*` methods where the
// operands may come from different presentations.

impl<K: Coefficient> Add for &Element<K> {
    type Output = Element<K>;
    fn add(self, rhs: &Element<K>) -> Element<K> {
        self.try_add(rhs).expect("table mismatch in add")
    }
}

impl<K: Coefficient> Sub for &Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: &Element<K>) -> Element<K> {
        self.try_sub(rhs).expect("table mismatch in sub")
    }
}

impl<K: Coefficient> Mul for &Element<K> {
    type Output = Element<K>;
    fn mul(self, rhs: &Element<K>) -> Element<K> {
        self.try_mul(rhs).expect("table mismatch in mul")
    }
}

impl<K: Coefficient> Neg for &Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        let terms = self
            .terms
            .iter()
            .map(|(w, k)| (w.clone(), -k.clone()))
            .collect();
        Element::from_terms(&self.table, terms)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<K: Coefficient> $tr for Element<K> {
            type Output = Element<K>;
            fn $m(self, rhs: Element<K>) -> Element<K> {
                (&self).$m(&rhs)
            }
        }
        impl<K: Coefficient> $tr<&Element<K>> for Element<K> {
            type Output = Element<K>;
            fn $m(self, rhs: &Element<K>) -> Element<K> {
                (&self).$m(rhs)
            }
        }
        impl<K: Coefficient> $tr<Element<K>> for &Element<K> {
            type Output = Element<K>;
            fn $m(self, rhs: Element<K>) -> Element<K> {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<K: Coefficient> Neg for Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        -&self
    }
}

/// Products of generator names, e.g. `monomial(&t, &["a", "beta"])`.
pub fn monomial<K: Coefficient>(table: &SharedTable, names: &[&str]) -> Result<Element<K>, AlgebraError> {
    let letters = names
        .iter()
        .map(|n| table.id(n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Element::term(table, Word::new(0, letters), K::one()))
}

pub fn shared(table: GeneratorTable) -> SharedTable {
    Arc::new(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::generator::Generator;
    use crate::Scalar;

    fn table() -> SharedTable {
        shared(
            GeneratorTable::from_generators([
                Generator::even("a"),
                Generator::odd("beta"),
                Generator::odd("gamma"),
            ])
            .unwrap(),
        )
    }

    type E = Element<Scalar>;

    #[test]
    fn mul_moves_h_past_odd_letter() {
        let t = table();
        let beta = E::named(&t, "beta").unwrap();
        let ha = &E::h(&t) * &E::named(&t, "a").unwrap();
        let got = &beta * &ha;
        let expect = -E::term(&t, Word::new(1, [GenId(1), GenId(0)]), Scalar::one());
        assert_eq!(got, expect);
        assert_eq!(got.render(true), "-h*beta*a");
    }

    #[test]
    fn h_squared_vanishes() {
        let t = table();
        let hb = &E::h(&t) * &E::named(&t, "beta").unwrap();
        let hg = &E::h(&t) * &E::named(&t, "gamma").unwrap();
        assert!((&hb * &hg).is_zero());
    }

    #[test]
    fn parity_classes() {
        let t = table();
        let a = E::named(&t, "a").unwrap();
        let beta = E::named(&t, "beta").unwrap();
        let gamma = E::named(&t, "gamma").unwrap();
        assert_eq!((&beta * &gamma).parity(), ElementParity::Homogeneous(Parity::Even));
        assert_eq!((&E::h(&t) * &a).parity(), ElementParity::Homogeneous(Parity::Odd));
        assert_eq!((&a + &beta).parity(), ElementParity::Mixed);
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let t1 = table();
        let t2 = shared(GeneratorTable::from_generators([Generator::even("x")]).unwrap());
        let a = E::named(&t1, "a").unwrap();
        let x = E::named(&t2, "x").unwrap();
        assert_eq!(a.try_mul(&x), Err(AlgebraError::TableMismatch));
    }
}

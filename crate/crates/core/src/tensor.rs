//! Graded tensor powers of an algebra, with a single shared `h` flag.

use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::coeff::Coefficient;
use crate::element::{same_table, Element};
use crate::error::{AlgebraError, RewriteError};
use crate::generator::{Parity, SharedTable};
use crate::rewrite::{Algebra, RuleSet};
use crate::word::{letters_parity, Letters, Word};
use crate::Scalar;

/// `h^hdeg · (w₁ ⊗ … ⊗ wₙ)`
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TensorWord {
    hdeg: u8,
    slots: SmallVec<[Letters; 3]>,
}

impl TensorWord {
    pub fn hdeg(&self) -> u8 {
        self.hdeg
    }

    pub fn slots(&self) -> &[Letters] {
        &self.slots
    }
}

/// Element of `A ⊗ … ⊗ A` with the sign rule
/// `(A ⊗ B)(C ⊗ D) = (−1)^{p(B)p(C)} AC ⊗ BD`.
#[derive(Clone, Debug)]
pub struct TensorElement<K = Scalar> {
    table: SharedTable,
    slots: usize,
    terms: BTreeMap<TensorWord, K>,
}

impl<K: Coefficient> PartialEq for TensorElement<K> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.slots == other.slots && self.terms == other.terms
    }
}

fn add_tterm<K: Coefficient>(terms: &mut BTreeMap<TensorWord, K>, w: TensorWord, k: K) {
    use std::collections::btree_map::Entry;
    if k.is_zero() {
        return;
    }
    match terms.entry(w) {
        Entry::Vacant(v) => {
            v.insert(k);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().clone() + k;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl<K: Coefficient> TensorElement<K> {
    pub fn zero(table: &SharedTable, slots: usize) -> Self {
        TensorElement {
            table: table.clone(),
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &SharedTable, slots: usize) -> Self {
        let mut t = Self::zero(table, slots);
        t.terms.insert(
            TensorWord {
                hdeg: 0,
                slots: (0..slots).map(|_| Letters::new()).collect(),
            },
            K::one(),
        );
        t
    }

    /// A one-slot tensor from a plain element.
    pub fn from_element(x: &Element<K>) -> Self {
        let mut t = Self::zero(x.table(), 1);
        for (w, k) in x.terms() {
            add_tterm(
                &mut t.terms,
                TensorWord {
                    hdeg: w.hdeg(),
                    slots: SmallVec::from_elem(w.letters().into(), 1),
                },
                k.clone(),
            );
        }
        t
    }

    /// `x₁ ⊗ x₂ ⊗ …`
    pub fn pure(parts: &[&Element<K>]) -> Result<Self, AlgebraError> {
        let first = parts.first().expect("at least one factor");
        let mut acc = Self::from_element(first);
        for p in &parts[1..] {
            acc = acc.tensor(&Self::from_element(p))?;
        }
        Ok(acc)
    }

    pub fn table(&self) -> &SharedTable {
        &self.table
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &K)> {
        self.terms.iter()
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if !same_table(&self.table, &other.table) {
            return Err(AlgebraError::TableMismatch);
        }
        if self.slots != other.slots {
            return Err(AlgebraError::SlotMismatch(self.slots, other.slots));
        }
        Ok(())
    }

    fn slots_parity(&self, w: &TensorWord) -> Parity {
        w.slots
            .iter()
            .fold(Parity::Even, |p, s| p + letters_parity(s, &self.table))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, k) in &other.terms {
            add_tterm(&mut out.terms, w.clone(), k.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.table, self.slots);
        for (w, k) in &self.terms {
            out.terms.insert(w.clone(), -k.clone());
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero(&self.table, self.slots);
        for (w, k) in &self.terms {
            add_tterm(&mut out.terms, w.clone(), k.clone() * c.clone());
        }
        out
    }

    /// Graded product, slot by slot.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let t = &self.table;
        let mut out = Self::zero(t, self.slots);
        for (a, ka) in &self.terms {
            let pa: Vec<Parity> = a.slots.iter().map(|s| letters_parity(s, t)).collect();
            let total_a = pa.iter().fold(Parity::Even, |x, y| x + *y);
            for (b, kb) in &other.terms {
                let hdeg = a.hdeg + b.hdeg;
                if hdeg > 1 {
                    continue;
                }
                let mut odd = b.hdeg == 1 && total_a.is_odd();
                // B_j passes A_i for every i > j
                for (j, bs) in b.slots.iter().enumerate() {
                    if letters_parity(bs, t).is_odd() {
                        let later = pa[j + 1..].iter().filter(|p| p.is_odd()).count();
                        odd ^= later % 2 == 1;
                    }
                }
                let slots = a
                    .slots
                    .iter()
                    .zip(&b.slots)
                    .map(|(x, y)| {
                        let mut l = x.clone();
                        l.extend_from_slice(y);
                        l
                    })
                    .collect();
                let mut k = ka.clone() * kb.clone();
                if odd {
                    k = -k;
                }
                add_tterm(&mut out.terms, TensorWord { hdeg, slots }, k);
            }
        }
        Ok(out)
    }

    /// Outer tensor product `self ⊗ other`; an `h` on the right factor moves
    /// to the front past everything in `self`.
    pub fn tensor(&self, other: &Self) -> Result<Self, AlgebraError> {
        if !same_table(&self.table, &other.table) {
            return Err(AlgebraError::TableMismatch);
        }
        let mut out = Self::zero(&self.table, self.slots + other.slots);
        for (a, ka) in &self.terms {
            let pa = self.slots_parity(a);
            for (b, kb) in &other.terms {
                let hdeg = a.hdeg + b.hdeg;
                if hdeg > 1 {
                    continue;
                }
                let mut k = ka.clone() * kb.clone();
                if b.hdeg == 1 && pa.is_odd() {
                    k = -k;
                }
                let mut slots = a.slots.clone();
                slots.extend(b.slots.iter().cloned());
                add_tterm(&mut out.terms, TensorWord { hdeg, slots }, k);
            }
        }
        Ok(out)
    }

    /// Applies one map per slot: `(f₁ ⊗ f₂ ⊗ …)(x)`. The shared `h` is handed
    /// to the first slot's map as part of its argument, so odd maps there see
    /// it; later slots receive `h`-free words. No Koszul signs are inserted.
    pub fn map_slots<F>(&self, mut f: F) -> Result<Self, RewriteError>
    where
        F: FnMut(usize, &Element<K>) -> Result<TensorElement<K>, RewriteError>,
    {
        let t = &self.table;
        let mut out: Option<Self> = None;
        for (w, k) in &self.terms {
            let mut acc: Option<Self> = None;
            for (i, s) in w.slots.iter().enumerate() {
                let hdeg = if i == 0 { w.hdeg } else { 0 };
                let arg = Element::term(t, Word::new(hdeg, s.iter().copied()), K::one());
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
        Ok(out.unwrap_or_else(|| Self::zero(t, 0)))
    }

    /// Multiplies the slots together: `m(x₁ ⊗ … ⊗ xₙ) = x₁⋯xₙ`.
    pub fn contract(&self) -> Element<K> {
        let mut out = Element::zero(&self.table);
        for (w, k) in &self.terms {
            let letters: Vec<_> = w.slots.iter().flat_map(|s| s.iter().copied()).collect();
            out.add_term(Word::new(w.hdeg, letters), k.clone());
        }
        out
    }

    /// Slot-wise normal form; `h`-corrections produced inside a slot move to
    /// the front.
    pub fn normalize(&self, rs: &RuleSet<K>) -> Result<Self, RewriteError> {
        if !same_table(&self.table, rs.table()) {
            return Err(AlgebraError::TableMismatch.into());
        }
        let mut red = rs.reducer();
        let mut out = Self::zero(&self.table, self.slots);
        for (w, k) in &self.terms {
            let mut acc: Option<Self> = None;
            for (i, s) in w.slots.iter().enumerate() {
                let hdeg = if i == 0 { w.hdeg } else { 0 };
                let e = Element::term(&self.table, Word::new(hdeg, s.iter().copied()), K::one());
                let nf = Self::from_element(&red.normalize(&e)?);
                acc = Some(match acc {
                    None => nf,
                    Some(prev) => prev.tensor(&nf)?,
                });
            }
            for (tw, tk) in acc.expect("slots").terms {
                add_tterm(&mut out.terms, tw, tk * k.clone());
            }
        }
        Ok(out)
    }

    pub fn render(&self, ascii: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let sep = if ascii { " (x) " } else { " ⊗ " };
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
            if !mag.is_one() {
                if mag.is_atomic() {
                    out.push_str(&format!("{mag}*"));
                } else {
                    out.push_str(&format!("({mag})*"));
                }
            }
            if w.hdeg == 1 {
                out.push_str("h*");
            }
            let parts: Vec<String> = w
                .slots
                .iter()
                .map(|s| Word::new(0, s.iter().copied()).render(&self.table, ascii))
                .collect();
            out.push('(');
            out.push_str(&parts.join(sep));
            out.push(')');
        }
        out
    }
}

impl<K: Coefficient> fmt::Display for TensorElement<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

/// `A^{⊗n}` with every slot normalized by the same rule set.
pub struct TensorAlgebra<'a, K: Coefficient> {
    pub rules: &'a RuleSet<K>,
    pub slots: usize,
}

impl<K: Coefficient> Algebra for TensorAlgebra<'_, K> {
    type Elem = TensorElement<K>;

    fn one(&self) -> TensorElement<K> {
        TensorElement::one(self.rules.table(), self.slots)
    }

    fn add(&self, a: &TensorElement<K>, b: &TensorElement<K>) -> Result<TensorElement<K>, RewriteError> {
        Ok(a.try_add(b)?)
    }

    fn neg(&self, a: &TensorElement<K>) -> TensorElement<K> {
        a.neg()
    }

    fn mul(&self, a: &TensorElement<K>, b: &TensorElement<K>) -> Result<TensorElement<K>, RewriteError> {
        Ok(a.try_mul(b)?)
    }

    fn normalize(&self, a: &TensorElement<K>) -> Result<TensorElement<K>, RewriteError> {
        a.normalize(self.rules)
    }

    fn is_zero(&self, a: &TensorElement<K>) -> bool {
        a.is_zero()
    }

    fn render(&self, a: &TensorElement<K>) -> String {
        a.render(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::shared;
    use crate::generator::{Generator, GeneratorTable};

    type E = Element<Scalar>;
    type T = TensorElement<Scalar>;

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

    #[test]
    fn even_crossing_has_no_sign() {
        let t = table();
        let (a, b, g) = (E::named(&t, "a").unwrap(), E::named(&t, "beta").unwrap(), E::named(&t, "gamma").unwrap());
        let x = T::pure(&[&b, &g]).unwrap();
        let y = T::pure(&[&a, &a]).unwrap();
        let got = x.try_mul(&y).unwrap();
        assert_eq!(got, T::pure(&[&(&b * &a), &(&g * &a)]).unwrap());
    }

    #[test]
    fn odd_crossing_flips_sign() {
        let t = table();
        let (a, b) = (E::named(&t, "a").unwrap(), E::named(&t, "beta").unwrap());
        let x = T::pure(&[&a, &b]).unwrap();
        let y = T::pure(&[&b, &a]).unwrap();
        let got = x.try_mul(&y).unwrap();
        assert_eq!(got, T::pure(&[&(&a * &b), &(&b * &a)]).unwrap().neg());
    }

    #[test]
    fn h_is_graded_central() {
        let t = table();
        let b = E::named(&t, "beta").unwrap();
        let one = E::one(&t);
        let h11 = T::pure(&[&E::h(&t), &one]).unwrap();
        let b1 = T::pure(&[&b, &one]).unwrap();
        // h(1⊗1)·(β⊗1) = h(β⊗1), (β⊗1)·h(1⊗1) = −h(β⊗1)
        let left = h11.try_mul(&b1).unwrap();
        let right = b1.try_mul(&h11).unwrap();
        assert_eq!(left, right.neg());
        assert_eq!(left, T::pure(&[&(&E::h(&t) * &b), &one]).unwrap());
    }

    #[test]
    fn h_in_second_factor_moves_front() {
        let t = table();
        let b = E::named(&t, "beta").unwrap();
        let a = E::named(&t, "a").unwrap();
        let ha = &E::h(&t) * &a;
        let x = T::pure(&[&b, &ha]).unwrap();
        assert_eq!(x.render(true), "-h*(beta (x) a)");
    }
}

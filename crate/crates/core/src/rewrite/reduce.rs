use std::collections::HashMap;
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::element::{add_term, same_table, Element, Terms};
use crate::error::{AlgebraError, RewriteError};
use crate::generator::GenId;
use crate::word::{letters_parity, Letters, Word};

use super::RuleSet;

// Nested rewrites deeper than this only happen for a nonterminating system.
const MAX_DEPTH: u32 = 4_000;

type Memo<K> = HashMap<Letters, Arc<Terms<K>>>;

/// Normalizer with memoized normal forms of `h`-free words.
///
/// Two memo tables are kept: full normal forms, and classical normal forms
/// (reduction by the `h`-free parts of the rules only) which is all an
/// `h`-carrying word ever needs.
pub struct Reducer<'a, K: Coefficient> {
    rules: &'a RuleSet<K>,
    full: Memo<K>,
    classical: Memo<K>,
    steps: u64,
    depth: u32,
    root: String,
}

impl<'a, K: Coefficient> Reducer<'a, K> {
    pub fn new(rules: &'a RuleSet<K>) -> Self {
        Reducer {
            rules,
            full: HashMap::new(),
            classical: HashMap::new(),
            steps: 0,
            depth: 0,
            root: String::new(),
        }
    }

    pub fn rules(&self) -> &'a RuleSet<K> {
        self.rules
    }

    /// Rule applications performed so far (memo hits are free).
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn normalize(&mut self, x: &Element<K>) -> Result<Element<K>, RewriteError> {
        if !same_table(x.table(), self.rules.table()) {
            return Err(AlgebraError::TableMismatch.into());
        }
        self.steps = 0;
        self.depth = 0;
        let mut out = Terms::new();
        for (w, k) in x.terms() {
            self.root = w.render(x.table(), true);
            if w.has_h() {
                let sub = self.nf(w.letters(), true)?;
                for (sw, sk) in sub.iter() {
                    add_term(&mut out, sw.with_hdeg(1), k.clone() * sk.clone());
                }
            } else {
                let sub = self.nf(w.letters(), false)?;
                for (sw, sk) in sub.iter() {
                    add_term(&mut out, sw.clone(), k.clone() * sk.clone());
                }
            }
        }
        Ok(Element::from_terms(self.rules.table(), out))
    }

    /// Normal form of the word given by `names`.
    pub fn normalize_word(&mut self, letters: &[GenId]) -> Result<Element<K>, RewriteError> {
        let w = Element::term(self.rules.table(), Word::new(0, letters.iter().copied()), K::one());
        self.normalize(&w)
    }

    fn nf(&mut self, w: &[GenId], classical: bool) -> Result<Arc<Terms<K>>, RewriteError> {
        let memo = if classical { &self.classical } else { &self.full };
        if let Some(hit) = memo.get(w) {
            return Ok(hit.clone());
        }
        let rules = self.rules;
        let redex = (0..w.len().saturating_sub(1)).find_map(|i| rules.rule_index(w[i], w[i + 1]).map(|r| (i, r)));
        let result = match redex {
            None => {
                let mut t = Terms::new();
                t.insert(Word::from_letters(w.into()), K::one());
                t
            }
            Some((i, r)) => {
                self.steps += 1;
                if self.steps > rules.step_budget() || self.depth > MAX_DEPTH {
                    return Err(RewriteError::StepBudget {
                        budget: rules.step_budget(),
                        word: self.root.clone(),
                    });
                }
                let rhs = rules.rhs_at(r, classical);
                let table = rules.table();
                let prefix_sign = letters_parity(&w[..i], table).sign();
                let mut acc = Terms::new();
                self.depth += 1;
                for (rw, c) in rhs.terms_map() {
                    let mut nw: Letters = Letters::with_capacity(w.len() + rw.len());
                    nw.extend_from_slice(&w[..i]);
                    nw.extend_from_slice(rw.letters());
                    nw.extend_from_slice(&w[i + 2..]);
                    if rw.has_h() {
                        let sub = self.nf(&nw, true)?;
                        let c = if prefix_sign < 0 { -c.clone() } else { c.clone() };
                        for (sw, sk) in sub.iter() {
                            add_term(&mut acc, sw.with_hdeg(1), c.clone() * sk.clone());
                        }
                    } else {
                        let sub = self.nf(&nw, classical)?;
                        for (sw, sk) in sub.iter() {
                            add_term(&mut acc, sw.clone(), c.clone() * sk.clone());
                        }
                    }
                }
                self.depth -= 1;
                acc
            }
        };
        let arc = Arc::new(result);
        let memo = if classical { &mut self.classical } else { &mut self.full };
        memo.insert(w.into(), arc.clone());
        Ok(arc)
    }
}

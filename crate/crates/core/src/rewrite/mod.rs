//! Quadratic rewriting systems on words and their normal forms.
//!
//! Every rule rewrites a length-two word `xy` (an out-of-order pair, an odd
//! square, or `x·x⁻¹` / `x⁻¹·x`) into an element whose `h`-free part is
//! smaller in [`word_less`]. Terms carrying `h` may be arbitrarily long:
//! since `h² = 0`, they are only ever reduced by the `h`-free parts of the
//! rules.

mod critical;
mod invert;
mod localize;
mod reduce;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};


pub use critical::{critical_pairs, CriticalPairReport};
pub use invert::{invert_perturbed, Algebra};
pub use localize::localize;
pub use reduce::Reducer;

use crate::coeff::Coefficient;
use crate::element::{same_table, Element};
use crate::error::{AlgebraError, RewriteError};
use crate::generator::{GenId, SharedTable};
use crate::word::Word;
use crate::Scalar;

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

static STEP_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_STEP_BUDGET);

/// Process-wide default for the number of rule applications one
/// normalization may perform.
pub fn default_step_budget() -> u64 {
    STEP_BUDGET.load(Ordering::Relaxed)
}

pub fn set_default_step_budget(budget: u64) {
    STEP_BUDGET.store(budget.max(1), Ordering::Relaxed);
}

#[derive(Clone, Debug)]
pub struct RewriteRule<K = Scalar> {
    pub lhs: (GenId, GenId),
    pub rhs: Element<K>,
}

impl<K: Coefficient> PartialEq for RewriteRule<K> {
    fn eq(&self, other: &Self) -> bool {
        self.lhs == other.lhs && self.rhs == other.rhs
    }
}

impl<K: Coefficient> RewriteRule<K> {
    pub fn lhs_word(&self) -> Word {
        Word::new(0, [self.lhs.0, self.lhs.1])
    }

    pub fn render_lhs(&self, ascii: bool) -> String {
        self.lhs_word().render(self.rhs.table(), ascii)
    }
}

/// An immutable rewriting system over one generator table.
#[derive(Clone, Debug)]
pub struct RuleSet<K = Scalar> {
    name: String,
    table: SharedTable,
    rules: Vec<RewriteRule<K>>,
    // dense n×n lookup into `rules`
    index: Vec<Option<u32>>,
    classical: Vec<Element<K>>,
    step_budget: u64,
}

impl<K: Coefficient> PartialEq for RuleSet<K> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.rules == other.rules
    }
}

impl<K: Coefficient> RuleSet<K> {
    /// Assembles a rule set from explicit rules without touching their right
    /// hand sides.
    pub fn from_rules(
        name: impl Into<String>,
        table: &SharedTable,
        rules: impl IntoIterator<Item = RewriteRule<K>>,
    ) -> Result<Self, RewriteError> {
        let n = table.len();
        let mut map: BTreeMap<(GenId, GenId), Element<K>> = BTreeMap::new();
        for r in rules {
            if !same_table(r.rhs.table(), table) {
                return Err(AlgebraError::TableMismatch.into());
            }
            if map.insert(r.lhs, r.rhs).is_some() {
                let w = Word::new(0, [r.lhs.0, r.lhs.1]).render(table, true);
                return Err(RewriteError::DuplicateRule(w));
            }
        }
        let mut index = vec![None; n * n];
        let mut list = Vec::with_capacity(map.len());
        let mut classical = Vec::with_capacity(map.len());
        for (i, (lhs, rhs)) in map.into_iter().enumerate() {
            index[lhs.0.index() * n + lhs.1.index()] = Some(i as u32);
            classical.push(rhs.drop_h());
            list.push(RewriteRule { lhs, rhs });
        }
        Ok(RuleSet {
            name: name.into(),
            table: table.clone(),
            rules: list,
            index,
            classical,
            step_budget: default_step_budget(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_step_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget.max(1);
        self
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn table(&self) -> &SharedTable {
        &self.table
    }

    pub fn rules(&self) -> &[RewriteRule<K>] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rule(&self, x: GenId, y: GenId) -> Option<&RewriteRule<K>> {
        let n = self.table.len();
        self.index[x.index() * n + y.index()].map(|i| &self.rules[i as usize])
    }

    pub(crate) fn rule_index(&self, x: GenId, y: GenId) -> Option<usize> {
        let n = self.table.len();
        self.index[x.index() * n + y.index()].map(|i| i as usize)
    }

    pub(crate) fn rhs_at(&self, i: usize, classical: bool) -> &Element<K> {
        if classical {
            &self.classical[i]
        } else {
            &self.rules[i].rhs
        }
    }

    /// Element over this rule set's table.
    pub fn gen(&self, name: &str) -> Result<Element<K>, AlgebraError> {
        Element::named(&self.table, name)
    }

    pub fn reducer(&self) -> Reducer<'_, K> {
        Reducer::new(self)
    }

    /// Normal form under leftmost rewriting.
    pub fn normalize(&self, x: &Element<K>) -> Result<Element<K>, RewriteError> {
        self.reducer().normalize(x)
    }

    /// `Ok(None)` when `x` reduces to zero, otherwise the nonzero normal form.
    pub fn verify_zero(&self, x: &Element<K>) -> Result<Option<Element<K>>, RewriteError> {
        let nf = self.normalize(x)?;
        Ok((!nf.is_zero()).then_some(nf))
    }

    /// The rule set with every `h`-correction deleted.
    pub fn classical_limit(&self) -> Self {
        let rules = self.rules.iter().map(|r| RewriteRule {
            lhs: r.lhs,
            rhs: r.rhs.drop_h(),
        });
        RuleSet::from_rules(format!("{}|h=0", self.name), &self.table, rules)
            .expect("same lhs set")
            .with_step_budget(self.step_budget)
    }

    /// Pairs that should carry a rule but do not: out-of-order pairs, odd
    /// squares, and generator/inverse pairs.
    pub fn missing_rules(&self) -> Vec<(GenId, GenId)> {
        let mut out = Vec::new();
        for x in self.table.ids() {
            for y in self.table.ids() {
                if needs_rule(&self.table, x, y) && self.rule(x, y).is_none() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Checks that the `h`-free part of every rule decreases the word order.
    ///
    /// A term with more odd letters than the left hand side is also accepted:
    /// such terms lie deeper in the nilpotent ideal the odd generators span,
    /// which is what happens when a correction like `γβ` is conjugated by an
    /// inverse. Termination is then no longer implied by the order alone, and
    /// the step budget is what catches a divergent system.
    pub fn check_decreasing(&self) -> Result<(), RewriteError> {
        for r in &self.rules {
            check_rule_decreasing(r)?;
        }
        Ok(())
    }

    /// Normalizes every right hand side with the rules themselves.
    pub(crate) fn with_normalized_rhs(self) -> Result<Self, RewriteError> {
        let normalized: Vec<RewriteRule<K>> = {
            let mut red = self.reducer();
            self.rules
                .iter()
                .map(|r| {
                    Ok(RewriteRule {
                        lhs: r.lhs,
                        rhs: red.normalize(&r.rhs)?,
                    })
                })
                .collect::<Result<_, RewriteError>>()?
        };
        let budget = self.step_budget;
        Ok(RuleSet::from_rules(self.name, &self.table, normalized)?.with_step_budget(budget))
    }
}

/// Whether the pair `xy` is the left hand side of a rule in a complete system.
pub fn needs_rule(table: &crate::generator::GeneratorTable, x: GenId, y: GenId) -> bool {
    if x > y {
        return true;
    }
    if x == y {
        return table.parity(x).is_odd();
    }
    table.inverse(x) == Some(y)
}

fn check_rule_decreasing<K: Coefficient>(r: &RewriteRule<K>) -> Result<(), RewriteError> {
    let table = r.rhs.table();
    let lhs = [r.lhs.0, r.lhs.1];
    let lhs_parity = r.lhs_word().parity(table);
    for (w, _) in r.rhs.terms() {
        if w.parity(table) != lhs_parity {
            return Err(RewriteError::RuleParity {
                lhs: r.render_lhs(true),
            });
        }
        if w.has_h() {
            continue;
        }
        if !word_less(w.letters(), &lhs) && odd_count(w.letters(), table) <= odd_count(&lhs, table) {
            return Err(RewriteError::NotDecreasing {
                lhs: r.render_lhs(true),
                term: w.render(table, true),
            });
        }
    }
    Ok(())
}

/// The reduction order: the multiset extension of the rank order first, then
/// lexicographic on words with the same letters.
pub fn word_less(x: &[GenId], y: &[GenId]) -> bool {
    let desc = |w: &[GenId]| {
        let mut v = w.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    };
    let (dx, dy) = (desc(x), desc(y));
    match dx.cmp(&dy) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => x < y,
    }
}

fn odd_count(w: &[GenId], table: &crate::generator::GeneratorTable) -> usize {
    w.iter().filter(|g| table.parity(**g).is_odd()).count()
}

/// Turns a relation `R = 0` into a rule by solving for its leading term: the
/// greatest `h`-free length-two word that has rule shape.
pub fn orient<K: Coefficient>(relation: &Element<K>) -> Result<RewriteRule<K>, RewriteError> {
    let table = relation.table();
    let lead = relation
        .terms()
        .filter(|(w, _)| !w.has_h() && w.len() == 2)
        .filter(|(w, _)| needs_rule(table, w.letters()[0], w.letters()[1]))
        .map(|(w, k)| (w.clone(), k.clone()))
        .max_by(|a, b| a.0.letters().cmp(b.0.letters()));
    let (lead, c) = lead.ok_or_else(|| RewriteError::NoLeadingTerm(relation.render(true)))?;
    let inv = c.try_inv().ok_or(AlgebraError::DivisionByZero)?;
    let mut rest = relation.clone();
    rest.add_term(lead.clone(), -c);
    let rhs = rest.scale(&(-inv));
    if relation.homogeneous_parity().is_none() {
        return Err(RewriteError::RuleParity {
            lhs: lead.render(table, true),
        });
    }
    debug_assert!(rhs.coeff(&lead).is_zero());
    Ok(RewriteRule {
        lhs: (lead.letters()[0], lead.letters()[1]),
        rhs,
    })
}

/// Collects relations and explicit rules, derives localized rules, and
/// produces a rule set with normalized right hand sides.
pub struct RuleSetBuilder<K = Scalar> {
    name: String,
    table: SharedTable,
    rules: BTreeMap<(GenId, GenId), Element<K>>,
}

impl<K: Coefficient> RuleSetBuilder<K> {
    pub fn new(name: impl Into<String>, table: &SharedTable) -> Self {
        RuleSetBuilder {
            name: name.into(),
            table: table.clone(),
            rules: BTreeMap::new(),
        }
    }

    pub fn table(&self) -> &SharedTable {
        &self.table
    }

    /// Adds the relation `lhs = rhs`.
    pub fn relation(&mut self, lhs: &Element<K>, rhs: &Element<K>) -> Result<&mut Self, RewriteError> {
        let rel = lhs.try_sub(rhs)?;
        self.relation_zero(&rel)
    }

    /// Adds the relation `rel = 0`.
    pub fn relation_zero(&mut self, rel: &Element<K>) -> Result<&mut Self, RewriteError> {
        if !same_table(rel.table(), &self.table) {
            return Err(AlgebraError::TableMismatch.into());
        }
        let rule = orient(rel)?;
        self.insert(rule)?;
        Ok(self)
    }

    pub fn insert(&mut self, rule: RewriteRule<K>) -> Result<(), RewriteError> {
        if self.rules.contains_key(&rule.lhs) {
            return Err(RewriteError::DuplicateRule(rule.render_lhs(true)));
        }
        self.rules.insert(rule.lhs, rule.rhs);
        Ok(())
    }

    pub fn has_rule(&self, x: GenId, y: GenId) -> bool {
        self.rules.contains_key(&(x, y))
    }

    /// Derives the rules of every formal inverse in the table, in rank order.
    pub fn localize_all(&mut self) -> Result<&mut Self, RewriteError> {
        let bases: Vec<GenId> = self
            .table
            .ids()
            .filter(|g| self.table.inverse(*g).is_some())
            .collect();
        for g in bases {
            localize::derive_inverse_rules(&self.table, &mut self.rules, g)?;
        }
        Ok(self)
    }

    pub fn build(self) -> Result<RuleSet<K>, RewriteError> {
        let rules = self
            .rules
            .into_iter()
            .map(|(lhs, rhs)| RewriteRule { lhs, rhs });
        let rs = RuleSet::from_rules(self.name, &self.table, rules)?;
        rs.check_decreasing()?;
        rs.with_normalized_rhs()
    }
}

impl<K: Coefficient> RuleSet<K> {
    /// Rules as a builder, for extension.
    pub fn to_builder(&self) -> RuleSetBuilder<K> {
        RuleSetBuilder {
            name: self.name.clone(),
            table: self.table.clone(),
            rules: self.rules.iter().map(|r| (r.lhs, r.rhs.clone())).collect(),
        }
    }
}

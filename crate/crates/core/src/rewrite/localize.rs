use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeff::Coefficient;
use crate::element::Element;
use crate::error::RewriteError;
use crate::generator::{GenId, GeneratorTable, SharedTable};
use crate::word::{letters_parity, Word};

use super::{RewriteRule, RuleSet};

/// Adjoins the inverse of the even invertible generator `name`.
///
/// For every other generator `y` the commutation rule of `g` with `y` is
/// conjugated by `g⁻¹`: from `g·y = s·y·g + P` follows
/// `g⁻¹·y = s⁻¹·y·g⁻¹ − s⁻¹·g⁻¹·P·g⁻¹`, and symmetrically when `y` ranks
/// below `g`. Pairs with a formal inverse whose own rules have not been
/// derived yet are skipped; they are produced when that inverse is localized.
pub fn localize<K: Coefficient>(rs: &RuleSet<K>, name: &str) -> Result<RuleSet<K>, RewriteError> {
    let table = rs.table();
    let g = table.id(name)?;
    let gen = table.get(g);
    if gen.parity.is_odd() {
        return Err(RewriteError::Localize(name.into(), "generator is odd".into()));
    }
    if !gen.invertible {
        return Err(RewriteError::Localize(name.into(), "generator is not invertible".into()));
    }
    let (new_table, _) = table.with_inverse(g)?;
    let new_table: SharedTable = Arc::new(new_table);
    let mut rules = BTreeMap::new();
    for r in rs.rules() {
        let rhs = r.rhs.embed(&new_table)?;
        let x = new_table.id(&table.get(r.lhs.0).name)?;
        let y = new_table.id(&table.get(r.lhs.1).name)?;
        rules.insert((x, y), rhs);
    }
    let g = new_table.id(name)?;
    derive_inverse_rules(&new_table, &mut rules, g)?;
    let list = rules.into_iter().map(|(lhs, rhs)| RewriteRule { lhs, rhs });
    let out = RuleSet::from_rules(rs.name(), &new_table, list)?.with_step_budget(rs.step_budget());
    out.check_decreasing()?;
    out.with_normalized_rhs()
}

pub(crate) fn derive_inverse_rules<K: Coefficient>(
    table: &SharedTable,
    rules: &mut BTreeMap<(GenId, GenId), Element<K>>,
    g: GenId,
) -> Result<(), RewriteError> {
    let name = table.get(g).name.clone();
    let ginv = table
        .inverse(g)
        .ok_or_else(|| RewriteError::Localize(name.clone(), "no inverse in table".into()))?;
    let g_inv_elem = Element::<K>::gen(table, ginv);
    let one = Element::<K>::one(table);
    rules.entry((g, ginv)).or_insert_with(|| one.clone());
    rules.entry((ginv, g)).or_insert_with(|| one.clone());

    let mut order: Vec<GenId> = table.ids().collect();
    order.sort_by_key(|y| table.get(*y).inverse_of.is_some());
    for y in order {
        if y == g || y == ginv {
            continue;
        }
        let (target, source) = if y < g {
            ((ginv, y), (g, y))
        } else {
            ((y, ginv), (y, g))
        };
        if rules.contains_key(&target) {
            continue;
        }
        let Some(src) = rules.get(&source) else {
            if is_pending_inverse(table, rules, y) {
                continue;
            }
            return Err(RewriteError::MissingRule(name.clone(), table.get(y).name.clone()));
        };
        // src: lhs = (g y) with rhs = s·(y g) + P, or lhs = (y g) with rhs = s·(g y) + P
        let swapped = Word::new(0, [source.1, source.0]);
        let s = src.coeff(&swapped);
        let s_inv = s.try_inv().ok_or_else(|| {
            RewriteError::Localize(
                name.clone(),
                format!(
                    "rule for `{}` has no invertible coefficient on the swapped word",
                    Word::new(0, [source.0, source.1]).render(table, true)
                ),
            )
        })?;
        let mut p = src.clone();
        p.add_term(swapped, -s.clone());
        let conj = &(&g_inv_elem * &p) * &g_inv_elem;
        let y_elem = Element::<K>::gen(table, y);
        let lead = if y < g {
            &y_elem * &g_inv_elem
        } else {
            &g_inv_elem * &y_elem
        };
        let rhs = (&lead - &conj).scale(&s_inv);
        let rhs = resolve_self_reference(table, rules, target, rhs)?;
        rules.insert(target, rhs);
    }
    Ok(())
}

// `y` is a formal inverse whose own rules have not been derived yet.
fn is_pending_inverse<K: Coefficient>(
    table: &GeneratorTable,
    rules: &BTreeMap<(GenId, GenId), Element<K>>,
    y: GenId,
) -> bool {
    match table.get(y).inverse_of {
        Some(base) => !rules.contains_key(&(base, y)),
        None => false,
    }
}

// Conjugating a correction that already contains `y` can reproduce the target
// word `L` inside its own right hand side, as `L = A + L·M` (or `A + M·L`).
// When `M·M` reduces to zero the fixed point is `L = A·(1 + M)` (or
// `(1 + M)·A`). The check uses `L → A` provisionally; the critical pairs of
// the finished rule set are what certify the result.
fn resolve_self_reference<K: Coefficient>(
    table: &SharedTable,
    rules: &BTreeMap<(GenId, GenId), Element<K>>,
    target: (GenId, GenId),
    rhs: Element<K>,
) -> Result<Element<K>, RewriteError> {
    let lw = [target.0, target.1];
    let l_odd = letters_parity(&lw, table).is_odd();
    let mut a = Element::zero(table);
    let mut left = Element::zero(table);
    let mut right = Element::zero(table);
    for (w, k) in rhs.terms() {
        let ls = w.letters();
        if ls.len() > 2 && ls[..2] == lw {
            let k = if w.has_h() && l_odd { -k.clone() } else { k.clone() };
            right.add_term(Word::new(w.hdeg(), ls[2..].iter().copied()), k);
        } else if ls.len() > 2 && ls[ls.len() - 2..] == lw {
            left.add_term(Word::new(w.hdeg(), ls[..ls.len() - 2].iter().copied()), k.clone());
        } else {
            a.add_term(w.clone(), k.clone());
        }
    }
    if left.is_zero() && right.is_zero() {
        return Ok(rhs);
    }
    let render = || Word::new(0, lw).render(table, true);
    if !left.is_zero() && !right.is_zero() {
        return Err(RewriteError::Localize(render(), "rule refers to itself on both sides".into()));
    }
    let provisional = std::iter::once(RewriteRule { lhs: target, rhs: a.clone() });
    let partial = RuleSet::from_rules(
        "partial",
        table,
        rules
            .iter()
            .map(|(lhs, rhs)| RewriteRule { lhs: *lhs, rhs: rhs.clone() })
            .chain(provisional),
    )?;
    let m = if right.is_zero() { left } else { right.clone() };
    if !partial.normalize(&(&m * &m))?.is_zero() {
        return Err(RewriteError::Localize(render(), "self-referential correction is not nilpotent".into()));
    }
    Ok(if right.is_zero() { &a + &(&m * &a) } else { &a + &(&a * &m) })
}

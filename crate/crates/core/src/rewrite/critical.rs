use crate::coeff::Coefficient;
use crate::element::Element;
use crate::error::RewriteError;
use crate::generator::GenId;
use crate::word::Word;
use crate::Scalar;

use super::RuleSet;

/// Outcome of one overlap `xyz` where both `xy` and `yz` are rule heads.
#[derive(Clone, Debug)]
pub struct CriticalPairReport<K = Scalar> {
    pub word: [GenId; 3],
    /// Normal form after reducing `xy` first.
    pub left: Element<K>,
    /// Normal form after reducing `yz` first.
    pub right: Element<K>,
    pub resolved: bool,
}

impl<K: Coefficient> CriticalPairReport<K> {
    pub fn render_word(&self, ascii: bool) -> String {
        Word::new(0, self.word).render(self.left.table(), ascii)
    }

    /// `left − right`, zero iff resolved.
    pub fn difference(&self) -> Element<K> {
        &self.left - &self.right
    }
}

/// All overlap ambiguities of length `scope` (only 3 is meaningful for
/// quadratic rules), each reduced both ways.
pub fn critical_pairs<K: Coefficient>(
    rs: &RuleSet<K>,
    scope: usize,
) -> Result<Vec<CriticalPairReport<K>>, RewriteError> {
    if scope != 3 {
        return Ok(Vec::new());
    }
    let table = rs.table();
    let mut red = rs.reducer();
    let mut out = Vec::new();
    for first in rs.rules() {
        let (x, y) = first.lhs;
        for z in table.ids() {
            let Some(second) = rs.rule(y, z) else { continue };
            let ex = Element::<K>::gen(table, x);
            let ez = Element::<K>::gen(table, z);
            let left = red.normalize(&(&first.rhs * &ez))?;
            let right = red.normalize(&(&ex * &second.rhs))?;
            let resolved = left == right;
            out.push(CriticalPairReport {
                word: [x, y, z],
                left,
                right,
                resolved,
            });
        }
    }
    Ok(out)
}

//! Words: generator sequences with the odd parameter `h` kept at the front.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::generator::{GenId, GeneratorTable, Parity};

pub type Letters = SmallVec<[GenId; 8]>;

/// `h^hdeg · x₁x₂…xₙ` with `hdeg ∈ {0, 1}` (`h² = 0`).
///
/// Ordering is by `hdeg`, then length, then lexicographic rank; it only
/// determines the printing order of terms inside an element.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    hdeg: u8,
    letters: Letters,
}

impl Word {
    pub fn one() -> Self {
        Word {
            hdeg: 0,
            letters: Letters::new(),
        }
    }

    /// The bare parameter `h`.
    pub fn h() -> Self {
        Word {
            hdeg: 1,
            letters: Letters::new(),
        }
    }

    /// Panics if `hdeg > 1`.
    pub fn new(hdeg: u8, letters: impl IntoIterator<Item = GenId>) -> Self {
        assert!(hdeg <= 1, "h^2 = 0: a word carries at most one h");
        Word {
            hdeg,
            letters: letters.into_iter().collect(),
        }
    }

    pub fn from_letters(letters: Letters) -> Self {
        Word { hdeg: 0, letters }
    }

    pub fn gen(id: GenId) -> Self {
        Word::new(0, [id])
    }

    pub fn hdeg(&self) -> u8 {
        self.hdeg
    }

    pub fn has_h(&self) -> bool {
        self.hdeg == 1
    }

    pub fn letters(&self) -> &[GenId] {
        &self.letters
    }

    pub fn into_letters(self) -> Letters {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn with_hdeg(&self, hdeg: u8) -> Self {
        Word::new(hdeg, self.letters.iter().copied())
    }

    /// Parity of the letters alone.
    pub fn letter_parity(&self, table: &GeneratorTable) -> Parity {
        letters_parity(&self.letters, table)
    }

    /// Parity including `h` (which is odd).
    pub fn parity(&self, table: &GeneratorTable) -> Parity {
        self.letter_parity(table) + Parity::from_bit(self.hdeg == 1)
    }

    /// Product `self · rhs` as `(sign, word)`, or `None` when `h²` appears.
    ///
    /// An `h` on the right word moves to the front past the letters of the
    /// left word, picking up `(-1)^{p(left letters)}`.
    pub fn mul(&self, rhs: &Word, table: &GeneratorTable) -> Option<(i64, Word)> {
        let hdeg = self.hdeg + rhs.hdeg;
        if hdeg > 1 {
            return None;
        }
        let sign = if rhs.hdeg == 1 {
            self.letter_parity(table).sign()
        } else {
            1
        };
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Some((sign, Word { hdeg, letters }))
    }

    pub fn render(&self, table: &GeneratorTable, ascii: bool) -> String {
        let mut parts: Vec<&str> = Vec::with_capacity(self.letters.len() + 1);
        if self.hdeg == 1 {
            parts.push("h");
        }
        for g in &self.letters {
            let gen = table.get(*g);
            parts.push(if ascii { &gen.name } else { &gen.label });
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(if ascii { "*" } else { "·" })
        }
    }
}

pub fn letters_parity(letters: &[GenId], table: &GeneratorTable) -> Parity {
    Parity::from_bit(
        letters
            .iter()
            .filter(|g| table.parity(**g).is_odd())
            .count()
            % 2
            == 1,
    )
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.hdeg
            .cmp(&other.hdeg)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator;

    fn table() -> GeneratorTable {
        GeneratorTable::from_generators([Generator::even("a"), Generator::odd("beta")]).unwrap()
    }

    #[test]
    fn h_crosses_odd_letters_with_sign() {
        let t = table();
        let beta = Word::gen(GenId(1));
        let ha = Word::new(1, [GenId(0)]);
        let (sign, w) = beta.mul(&ha, &t).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(w, Word::new(1, [GenId(1), GenId(0)]));
        assert!(Word::h().mul(&Word::h(), &t).is_none());
    }

    #[test]
    fn parity_counts_h() {
        let t = table();
        assert_eq!(Word::new(1, [GenId(0)]).parity(&t), Parity::Odd);
        assert_eq!(Word::new(0, [GenId(1), GenId(1)]).parity(&t), Parity::Even);
    }
}

//! Generators, their Z2 grading, and the ordered generator table.

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use crate::error::AlgebraError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^p`
    pub fn sign(self) -> i64 {
        if self.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.is_odd() ^ rhs.is_odd())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Index of a generator in its table. The index doubles as the rank in the
/// normal order: smaller ids sort to the left.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GenId(pub u16);

impl GenId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    /// ASCII name used by the parser and the presentation files.
    pub name: String,
    /// Display label (may be non-ASCII, e.g. `β` or `∂_a`).
    pub label: String,
    pub parity: Parity,
    pub invertible: bool,
    /// Set on a formal inverse `x⁻¹`: the generator it inverts.
    pub inverse_of: Option<GenId>,
}

impl Generator {
    pub fn new(name: impl Into<String>, parity: Parity) -> Self {
        let name = name.into();
        Generator {
            label: name.clone(),
            name,
            parity,
            invertible: false,
            inverse_of: None,
        }
    }

    pub fn even(name: impl Into<String>) -> Self {
        Self::new(name, Parity::Even)
    }

    pub fn odd(name: impl Into<String>) -> Self {
        Self::new(name, Parity::Odd)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn invertible(mut self) -> Self {
        self.invertible = true;
        self
    }
}

/// The ordered generator set of a presentation.
///
/// Insertion order is the normal order. A formal inverse, when present, sits
/// immediately after the generator it inverts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GeneratorTable {
    gens: Vec<Generator>,
    by_name: HashMap<String, GenId>,
    inverse: Vec<Option<GenId>>,
}

impl GeneratorTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from generators in rank order.
    pub fn from_generators(gens: impl IntoIterator<Item = Generator>) -> Result<Self, AlgebraError> {
        let mut t = Self::new();
        for g in gens {
            t.push(g)?;
        }
        Ok(t)
    }

    pub fn push(&mut self, g: Generator) -> Result<GenId, AlgebraError> {
        if self.by_name.contains_key(&g.name) {
            return Err(AlgebraError::DuplicateGenerator(g.name));
        }
        if g.invertible && g.parity.is_odd() {
            return Err(AlgebraError::OddInvertible(g.name));
        }
        if self.gens.len() >= u16::MAX as usize {
            return Err(AlgebraError::TableFull);
        }
        let id = GenId(self.gens.len() as u16);
        if let Some(base) = g.inverse_of {
            let b = self
                .gens
                .get(base.index())
                .ok_or_else(|| AlgebraError::UnknownGenerator(format!("#{}", base.0)))?;
            if !b.invertible {
                return Err(AlgebraError::NotInvertible(b.name.clone()));
            }
            if g.parity != b.parity {
                return Err(AlgebraError::ParityMismatch(g.name.clone()));
            }
            self.inverse[base.index()] = Some(id);
        }
        self.by_name.insert(g.name.clone(), id);
        self.gens.push(g);
        self.inverse.push(None);
        Ok(id)
    }

    /// Adds `g` together with its formal inverse `g_inv` right after it.
    pub fn push_invertible(&mut self, g: Generator) -> Result<(GenId, GenId), AlgebraError> {
        let g = g.invertible();
        let inv = inverse_generator(&g, GenId(self.gens.len() as u16));
        let id = self.push(g)?;
        let inv_id = self.push(inv)?;
        Ok((id, inv_id))
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, id: GenId) -> &Generator {
        &self.gens[id.index()]
    }

    pub fn parity(&self, id: GenId) -> Parity {
        self.gens[id.index()].parity
    }

    pub fn lookup(&self, name: &str) -> Option<GenId> {
        self.by_name.get(name).copied()
    }

    pub fn id(&self, name: &str) -> Result<GenId, AlgebraError> {
        self.lookup(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    /// The formal inverse of `id`, if the table contains one.
    pub fn inverse(&self, id: GenId) -> Option<GenId> {
        self.inverse[id.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> + '_ {
        (0..self.gens.len() as u16).map(GenId)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.gens.iter().map(|g| g.name.as_str())
    }

    /// A copy of the table with the inverse of `base` inserted right after it.
    /// Returns the new table and the map from old ids to new ids.
    pub fn with_inverse(&self, base: GenId) -> Result<(GeneratorTable, Vec<GenId>), AlgebraError> {
        let g = self.get(base);
        if g.parity.is_odd() {
            return Err(AlgebraError::OddInvertible(g.name.clone()));
        }
        if !g.invertible {
            return Err(AlgebraError::NotInvertible(g.name.clone()));
        }
        if self.inverse(base).is_some() {
            return Ok((self.clone(), self.ids().collect()));
        }
        let mut out = GeneratorTable::new();
        let mut remap = Vec::with_capacity(self.len());
        for old in self.ids() {
            let mut gen = self.get(old).clone();
            if let Some(b) = gen.inverse_of {
                gen.inverse_of = Some(remap[b.index()]);
            }
            remap.push(out.push(gen)?);
            if old == base {
                let inv = inverse_generator(self.get(old), remap[old.index()]);
                out.push(inv)?;
            }
        }
        Ok((out, remap))
    }
}

fn inverse_generator(g: &Generator, base: GenId) -> Generator {
    Generator {
        name: format!("{}_inv", g.name),
        label: format!("{}⁻¹", g.label),
        parity: g.parity,
        invertible: true,
        inverse_of: Some(base),
    }
}

pub type SharedTable = Arc<GeneratorTable>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_is_z2() {
        use Parity::*;
        assert_eq!(Even + Even, Even);
        assert_eq!(Even + Odd, Odd);
        assert_eq!(Odd + Odd, Even);
    }

    #[test]
    fn odd_generators_cannot_be_invertible() {
        let mut t = GeneratorTable::new();
        assert!(matches!(
            t.push(Generator::odd("beta").invertible()),
            Err(AlgebraError::OddInvertible(_))
        ));
    }

    #[test]
    fn inverse_is_ranked_after_base() {
        let mut t = GeneratorTable::new();
        let (a, ainv) = t.push_invertible(Generator::even("a")).unwrap();
        t.push(Generator::odd("beta")).unwrap();
        assert_eq!(ainv.0, a.0 + 1);
        assert_eq!(t.inverse(a), Some(ainv));
        assert_eq!(t.get(ainv).name, "a_inv");

        let mut t2 = GeneratorTable::new();
        t2.push(Generator::even("d").invertible()).unwrap();
        t2.push(Generator::odd("beta")).unwrap();
        let (t3, remap) = t2.with_inverse(t2.id("d").unwrap()).unwrap();
        assert_eq!(t3.names().collect::<Vec<_>>(), vec!["d", "d_inv", "beta"]);
        assert_eq!(remap[1], GenId(2));
    }

    #[test]
    fn duplicate_names_rejected() {
        let mut t = GeneratorTable::new();
        t.push(Generator::even("a")).unwrap();
        assert!(t.push(Generator::odd("a")).is_err());
    }
}

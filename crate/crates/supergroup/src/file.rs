//! The declarative presentation file (TOML, UTF-8).
//!
//! ```toml
//! format_version = 1
//! name = "example"
//! description = "two anticommuting odd generators"
//!
//! [[generators]]
//! name = "x"
//! parity = "odd"
//!
//! [[generators]]
//! name = "y"
//! parity = "odd"
//!
//! [[rules]]
//! lhs = "y*x"
//! rhs = "-x*y"
//! ```
//!
//! Invertible generators get a formal inverse named `<name>_inv` directly
//! after them; inverses are never listed. Rule right hand sides and
//! composite values are expressions over the generators, `h`, `q` and the
//! composites defined before them.

use qsg_core::expr::Scope;
use qsg_core::{Element, GenId, Generator, GeneratorTable, Parity, RewriteRule, RuleSet, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::presentations::Presentation;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub format_version: u32,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub rules: Vec<RuleEntry>,
    #[serde(default)]
    pub composites: Vec<CompositeEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityName {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub parity: ParityName,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub invertible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleEntry {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeEntry {
    pub name: String,
    pub value: String,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Other(msg.into())
}

/// The file form of `p`: generators in table order, rules in table order,
/// composites as their normal forms.
pub fn export(p: &Presentation) -> PresentationFile {
    let t = p.table();
    let generators = t
        .generators()
        .iter()
        .filter(|g| g.inverse_of.is_none())
        .map(|g| GeneratorEntry {
            name: g.name.clone(),
            label: (g.label != g.name).then(|| g.label.clone()),
            parity: if g.parity.is_odd() { ParityName::Odd } else { ParityName::Even },
            invertible: g.invertible,
        })
        .collect();
    let rules = p
        .rules()
        .rules()
        .iter()
        .map(|r| RuleEntry {
            lhs: r.render_lhs(true),
            rhs: r.rhs.render(true),
        })
        .collect();
    let composites = p
        .composite_names()
        .iter()
        .filter(|n| n.as_str() != "q")
        .map(|n| CompositeEntry {
            name: n.clone(),
            value: p.composite(n).expect("listed").render(true),
        })
        .collect();
    PresentationFile {
        format_version: FORMAT_VERSION,
        name: p.name().to_string(),
        description: p.description().to_string(),
        generators,
        rules,
        composites,
    }
}

pub fn to_toml(p: &Presentation) -> String {
    toml::to_string(&export(p)).expect("presentation files always serialize")
}

/// Parses and validates a presentation file.
pub fn from_toml(src: &str) -> Result<Presentation, Error> {
    let file: PresentationFile = toml::from_str(src).map_err(|e| invalid(format!("presentation file: {e}")))?;
    load(&file)
}

/// Builds the presentation a file describes. Rejects invertible odd
/// generators, rules whose left side is not an out-of-order pair, odd square
/// or inverse pair, rules that change parity or fail to decrease the word
/// order, and unknown symbols.
pub fn load(file: &PresentationFile) -> Result<Presentation, Error> {
    if file.format_version != FORMAT_VERSION {
        return Err(invalid(format!(
            "unsupported format_version {} (expected {FORMAT_VERSION})",
            file.format_version
        )));
    }
    let mut t = GeneratorTable::new();
    for g in &file.generators {
        let parity = match g.parity {
            ParityName::Even => Parity::Even,
            ParityName::Odd => Parity::Odd,
        };
        let mut gen = Generator::new(&g.name, parity);
        if let Some(l) = &g.label {
            gen = gen.with_label(l);
        }
        if g.invertible {
            t.push_invertible(gen)?;
        } else {
            t.push(gen)?;
        }
    }
    let table = std::sync::Arc::new(t);
    let mut scope = Scope::new(&table);
    scope.bind("q", Element::scalar(&table, Scalar::q()));

    let mut rules = Vec::new();
    for r in &file.rules {
        let lhs = parse_pair(&table, &r.lhs)?;
        if !qsg_core::rewrite::needs_rule(&table, lhs.0, lhs.1) {
            return Err(invalid(format!("rule `{}`: left side is already in normal order", r.lhs)));
        }
        let rhs = scope.parse_eval(&r.rhs).map_err(|e| invalid(format!("rule `{}`: {e}", r.lhs)))?;
        let lp = table.parity(lhs.0).is_odd() ^ table.parity(lhs.1).is_odd();
        match rhs.homogeneous_parity() {
            Some(p) if p.is_odd() != lp => {
                return Err(invalid(format!("rule `{}`: parity mismatch between sides", r.lhs)))
            }
            None if !rhs.is_zero() => {
                return Err(invalid(format!("rule `{}`: right side is not parity-homogeneous", r.lhs)))
            }
            _ => {}
        }
        rules.push(RewriteRule { lhs, rhs });
    }
    let rs = RuleSet::from_rules(file.name.clone(), &table, rules)?;
    rs.check_decreasing()?;

    let mut composites = Vec::new();
    for c in &file.composites {
        let v = scope
            .parse_eval(&c.value)
            .map_err(|e| invalid(format!("composite `{}`: {e}", c.name)))?;
        scope.bind(c.name.clone(), rs.normalize(&v)?);
        composites.push(c.name.clone());
    }
    Ok(Presentation::from_parts(
        file.name.clone(),
        file.description.clone(),
        rs,
        scope,
        composites,
    ))
}

fn parse_pair(table: &GeneratorTable, src: &str) -> Result<(GenId, GenId), Error> {
    let parts: Vec<&str> = src.split('*').map(str::trim).collect();
    let [x, y] = parts.as_slice() else {
        return Err(invalid(format!("rule left side `{src}` must be a product of two generators")));
    };
    let id = |n: &str| table.id(n).map_err(|_| invalid(format!("rule `{src}`: unknown generator `{n}`")));
    Ok((id(x)?, id(y)?))
}

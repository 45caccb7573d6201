//! Built-in presentations: generator tables, rule sets, relation catalogs and
//! named composite elements.

use std::sync::OnceLock;

use qsg_core::expr::Scope;
use qsg_core::{
    invert_perturbed, Element, Generator, GeneratorTable, Parity, RuleSet, RuleSetBuilder, Scalar,
    SharedTable,
};

use crate::error::Error;

/// Generator entry: ASCII name, display label, parity, invertible.
type GenSpec = (&'static str, &'static str, Parity, bool);

const E: Parity = Parity::Even;
const O: Parity = Parity::Odd;

const MATRIX: [GenSpec; 4] = [
    ("a", "a", E, true),
    ("beta", "β", O, false),
    ("gamma", "γ", O, false),
    ("d", "d", E, true),
];

const DIFFERENTIALS: [GenSpec; 4] = [
    ("alpha", "α", O, false),
    ("b", "b", E, false),
    ("c", "c", E, true),
    ("delta", "δ", O, false),
];

const ONE_FORMS: [GenSpec; 4] = [
    ("w1", "w₁", O, false),
    ("u", "u", E, false),
    ("v", "v", E, false),
    ("w2", "w₂", O, false),
];

const PARTIALS: [GenSpec; 4] = [
    ("Da", "∂a", E, false),
    ("Dbeta", "∂β", O, false),
    ("Dgamma", "∂γ", O, false),
    ("Dd", "∂d", E, false),
];

const PARTIALS_INVERTIBLE: [GenSpec; 4] = [
    ("Da", "∂a", E, true),
    ("Dbeta", "∂β", O, false),
    ("Dgamma", "∂γ", O, false),
    ("Dd", "∂d", E, true),
];

const PRIMED: [GenSpec; 4] = [
    ("ap", "a′", E, true),
    ("betap", "β′", O, false),
    ("gammap", "γ′", O, false),
    ("dp", "d′", E, true),
];

/// Builds a table from groups of generators; every invertible generator gets
/// its formal inverse right after it.
pub fn build_table(groups: &[&[GenSpec]]) -> Result<SharedTable, Error> {
    let mut t = GeneratorTable::new();
    for group in groups {
        for &(name, label, parity, inv) in group.iter() {
            let g = Generator::new(name, parity).with_label(label);
            if inv {
                t.push_invertible(g)?;
            } else {
                t.push(g)?;
            }
        }
    }
    Ok(std::sync::Arc::new(t))
}

/// One displayed relation `lhs = rhs`.
#[derive(Clone, Copy, Debug)]
pub struct RelationLine {
    pub family: &'static str,
    pub text: &'static str,
}

const fn rel(family: &'static str, text: &'static str) -> RelationLine {
    RelationLine { family, text }
}

pub const GLQ_RELATIONS: &[RelationLine] = &[
    rel("glq", "ap*betap = q*betap*ap"),
    rel("glq", "dp*betap = q*betap*dp"),
    rel("glq", "ap*gammap = q*gammap*ap"),
    rel("glq", "dp*gammap = q*gammap*dp"),
    rel("glq", "betap*gammap + gammap*betap = 0"),
    rel("glq", "betap^2 = 0"),
    rel("glq", "gammap^2 = 0"),
    rel("glq", "ap*dp = dp*ap + (q - 1/q)*gammap*betap"),
];

pub const GLH_RELATIONS: &[RelationLine] = &[
    rel("glh", "a*beta = beta*a"),
    rel("glh", "a*gamma = gamma*a + h*a^2*(1 - D_h_inv)"),
    rel("glh", "d*beta = beta*d"),
    rel("glh", "d*gamma = gamma*d + h*d^2*(D_h - 1)"),
    rel("glh", "beta^2 = 0"),
    rel("glh", "gamma^2 = h*gamma*d*(1 - D_h)"),
    rel("glh", "beta*gamma = -gamma*beta + h*beta*d*(1 - D_h)"),
    rel("glh", "a*d = d*a + h*beta*d*(D_h - 1)"),
];

pub const MIXED_RELATIONS: &[RelationLine] = &[
    rel("mixed", "a*alpha = alpha*a + h*(alpha*beta - b*a)"),
    rel("mixed", "a*b = b*a - h*b*beta"),
    rel("mixed", "a*c = c*a + h*(alpha*a - c*beta + delta*a)"),
    rel("mixed", "a*delta = delta*a + h*(b*a + delta*beta)"),
    rel("mixed", "beta*alpha = -alpha*beta + h*b*beta"),
    rel("mixed", "beta*b = b*beta"),
    rel("mixed", "beta*c = c*beta + h*(alpha + delta)*beta"),
    rel("mixed", "beta*delta = -delta*beta - h*b*beta"),
    rel("mixed", "gamma*alpha = -alpha*gamma + h*(alpha*a + alpha*d + b*gamma)"),
    rel("mixed", "gamma*b = b*gamma + h*b*(a + d)"),
    rel("mixed", "gamma*c = c*gamma + h*(alpha*gamma + c*a + c*d + delta*gamma)"),
    rel("mixed", "gamma*delta = -delta*gamma + h*(delta*a + delta*d - b*gamma)"),
    rel("mixed", "d*alpha = alpha*d - h*(alpha*beta + b*d)"),
    rel("mixed", "d*b = b*d + h*b*beta"),
    rel("mixed", "d*c = c*d + h*(alpha*d + c*beta + delta*d)"),
    rel("mixed", "d*delta = delta*d + h*(b*d - delta*beta)"),
];

pub const FORM_RELATIONS: &[RelationLine] = &[
    rel("forms", "alpha*b = b*alpha + h*b^2"),
    rel("forms", "alpha*c = c*alpha + h*(c*b + delta*alpha)"),
    rel("forms", "delta*b = b*delta - h*b^2"),
    rel("forms", "delta*c = c*delta - h*(c*b - alpha*delta)"),
    rel("forms", "alpha^2 = h*alpha*b"),
    rel("forms", "alpha*delta = -delta*alpha + h*(delta - alpha)*b"),
    rel("forms", "delta^2 = -h*delta*b"),
    rel("forms", "b*c = c*b + h*(delta + alpha)*b"),
];

pub const INVERSE_ENTRY_RELATIONS: &[RelationLine] = &[
    rel("inverse-entries", "a*A = A*a + h*(A - D)*beta"),
    rel("inverse-entries", "a*B = B*a"),
    rel("inverse-entries", "a*C = C*a + h*(1 - D_h)"),
    rel("inverse-entries", "a*D = D*a"),
    rel("inverse-entries", "beta*A = A*beta"),
    rel("inverse-entries", "beta*B = -B*beta"),
    rel("inverse-entries", "beta*C = -C*beta + h*(D - A)*beta"),
    rel("inverse-entries", "beta*D = D*beta"),
    rel("inverse-entries", "gamma*A = A*gamma + h*(1 - D_h_inv)"),
    rel("inverse-entries", "gamma*B = -B*gamma + h*(A - D)*beta"),
    rel("inverse-entries", "gamma*C = -C*gamma"),
    rel("inverse-entries", "gamma*D = D*gamma + h*(D_h - 1)"),
    rel("inverse-entries", "d*A = A*d"),
    rel("inverse-entries", "d*C = C*d + h*(D_h_inv - 1)"),
    rel("inverse-entries", "d*B = B*d"),
    rel("inverse-entries", "d*D = D*d + h*(D - A)*beta"),
];

pub const ONEFORM_PARAM_RELATIONS: &[RelationLine] = &[
    rel("oneform-params", "a*w1 = w1*a - h*u*a"),
    rel("oneform-params", "a*u = u*a"),
    rel("oneform-params", "a*v = v*a + h*(w1 + w2)*a"),
    rel("oneform-params", "a*w2 = w2*a + h*u*a"),
    rel("oneform-params", "beta*w1 = -w1*beta + h*u*beta"),
    rel("oneform-params", "beta*u = u*beta"),
    rel("oneform-params", "beta*v = v*beta + h*(w1 + w2)*beta"),
    rel("oneform-params", "beta*w2 = -w2*beta - h*u*beta"),
    rel("oneform-params", "gamma*w1 = -w1*gamma + h*(2*w1*a + u*gamma)"),
    rel("oneform-params", "gamma*u = u*gamma + 2*h*u*a"),
    rel("oneform-params", "gamma*v = v*gamma + h*(w1*gamma + 2*v*a + w2*gamma)"),
    rel("oneform-params", "gamma*w2 = -w2*gamma + h*(2*w2*a - u*gamma)"),
    rel("oneform-params", "d*w1 = w1*d - h*(2*w1*beta + u*d)"),
    rel("oneform-params", "d*u = u*d + 2*h*u*beta"),
    rel("oneform-params", "d*v = v*d + h*(w1*d + 2*v*beta + w2*d)"),
    rel("oneform-params", "d*w2 = w2*d + h*(u*d - 2*w2*beta)"),
];

pub const INVERSE_FORM_RELATIONS: &[RelationLine] = &[
    rel("inverse-forms", "A*alpha = alpha*A + h*(b*A - alpha*B)"),
    rel("inverse-forms", "A*b = b*A + h*b*B"),
    rel("inverse-forms", "A*c = c*A - h*(alpha*A + delta*A - c*B)"),
    rel("inverse-forms", "A*delta = delta*A - h*(b*A + delta*B)"),
    rel("inverse-forms", "B*alpha = -alpha*B - h*b*B"),
    rel("inverse-forms", "B*b = b*B"),
    rel("inverse-forms", "B*c = c*B - h*(alpha + delta)*B"),
    rel("inverse-forms", "B*delta = -delta*B + h*b*B"),
    rel("inverse-forms", "C*alpha = -alpha*C - h*(alpha*A + alpha*D + b*C)"),
    rel("inverse-forms", "C*b = b*C - h*b*(A + D)"),
    rel("inverse-forms", "C*c = c*C - h*(alpha*C + c*A + c*D + delta*C)"),
    rel("inverse-forms", "C*delta = -delta*C + h*(b*C - delta*A - delta*D)"),
    rel("inverse-forms", "D*alpha = alpha*D + h*(alpha*B + b*D)"),
    rel("inverse-forms", "D*b = b*D - h*b*B"),
    rel("inverse-forms", "D*c = c*D - h*(alpha*D + c*B + delta*D)"),
    rel("inverse-forms", "D*delta = delta*D + h*(delta*B - b*D)"),
];

pub const ONEFORM_FORM_RELATIONS: &[RelationLine] = &[
    rel("oneform-forms", "w1*alpha = -alpha*w1 - h*alpha*u"),
    rel("oneform-forms", "w1*b = b*w1 - h*b*u"),
    rel("oneform-forms", "w1*c = c*w1 - h*c*u"),
    rel("oneform-forms", "w1*delta = -delta*w1 - h*delta*u"),
    rel("oneform-forms", "u*alpha = alpha*u"),
    rel("oneform-forms", "u*b = b*u"),
    rel("oneform-forms", "u*c = c*u"),
    rel("oneform-forms", "u*delta = delta*u"),
    rel("oneform-forms", "v*alpha = alpha*v + h*alpha*(w1 - w2)"),
    rel("oneform-forms", "v*b = b*v - h*b*(w1 - w2)"),
    rel("oneform-forms", "v*c = c*v - h*c*(w1 - w2)"),
    rel("oneform-forms", "v*delta = delta*v + h*delta*(w1 - w2)"),
    rel("oneform-forms", "w2*alpha = -alpha*w2 - h*alpha*u"),
    rel("oneform-forms", "w2*b = b*w2 - h*b*u"),
    rel("oneform-forms", "w2*c = c*w2 - h*c*u"),
    rel("oneform-forms", "w2*delta = -delta*w2 - h*delta*u"),
];

pub const ONEFORM_ALGEBRA_RELATIONS: &[RelationLine] = &[
    rel("oneform-algebra", "w1*u = u*w1 - 2*h*u^2"),
    rel("oneform-algebra", "w2*u = u*w2"),
    rel("oneform-algebra", "w1*v = v*w1 + 2*h*(w1*w2 - u*v)"),
    rel("oneform-algebra", "w2*v = v*w2"),
    rel("oneform-algebra", "w1*w2 = -w2*w1 - 2*h*u*w2"),
    rel("oneform-algebra", "w1^2 = -2*h*u*w1"),
    rel("oneform-algebra", "w2^2 = 0"),
    rel("oneform-algebra", "u*v = v*u - 2*h*u*w2"),
];

pub const SUPERALGEBRA_RELATIONS: &[RelationLine] = &[
    rel("superalgebra", "T1*T2 - T2*T1 = 2*h*nablaM*T1"),
    rel("superalgebra", "T1*nablaP - nablaP*T1 = -nablaP + 2*h*(T1^2 - T1)"),
    rel("superalgebra", "T2*nablaP - nablaP*T2 = nablaP - 2*h*(T2*T1 + T2 - nablaP*nablaM)"),
    rel("superalgebra", "T1*nablaM - nablaM*T1 = nablaM"),
    rel("superalgebra", "T2*nablaM - nablaM*T2 = -nablaM"),
    rel("superalgebra", "nablaP^2 = -2*h*T1*nablaP"),
    rel("superalgebra", "nablaM^2 = 0"),
    rel("superalgebra", "nablaM*nablaP + nablaP*nablaM = T1 + T2 - 2*h*nablaM*T1"),
];

pub const VECTOR_ON_PARAM_RELATIONS: &[RelationLine] = &[
    rel("vector-on-params", "T1*a = a + a*T1 - h*a*nablaM"),
    rel("vector-on-params", "T1*beta = beta + beta*T1 + h*beta*nablaM"),
    rel("vector-on-params", "T1*gamma = gamma*T1 + h*(2*a*T1 + gamma*nablaM)"),
    rel("vector-on-params", "T1*d = d*T1 + h*(2*beta*T1 - d*nablaM)"),
    rel("vector-on-params", "T2*a = a*T2 - h*a*nablaM"),
    rel("vector-on-params", "T2*beta = beta*T2 + h*beta*nablaM"),
    rel("vector-on-params", "T2*gamma = gamma + gamma*T2 + h*(2*a*T2 + gamma*nablaM)"),
    rel("vector-on-params", "T2*d = d + d*T2 + h*(2*beta*T2 - d*nablaM)"),
    rel("vector-on-params", "nablaP*a = gamma + a*nablaP - h*a*(T1 - T2)"),
    rel("vector-on-params", "nablaP*beta = d - beta*nablaP - h*beta*(T1 - T2)"),
    rel("vector-on-params", "nablaP*gamma = -gamma*nablaP - h*(2*a*nablaM + gamma*T1 - gamma*T2)"),
    rel("vector-on-params", "nablaP*d = d*nablaP + h*(2*beta*nablaP - d*T1 + d*T2)"),
    rel("vector-on-params", "nablaM*a = a*nablaM"),
    rel("vector-on-params", "nablaM*beta = -beta*nablaM"),
    rel("vector-on-params", "nablaM*gamma = a - gamma*nablaM - 2*h*a*nablaM"),
    rel("vector-on-params", "nablaM*d = beta + d*nablaM + 2*h*beta*nablaM"),
];

pub const WEYL_RELATIONS: &[RelationLine] = &[
    rel("weyl", "Da*a = 1 + a*Da - h*(beta*Da + a*Dgamma)"),
    rel("weyl", "Da*beta = beta*Da + h*beta*Dgamma"),
    rel("weyl", "Da*gamma = gamma*Da + h*(a*Da + d*Da + gamma*Dgamma)"),
    rel("weyl", "Da*d = d*Da + h*(beta*Da - d*Dgamma)"),
    rel("weyl", "Dbeta*a = a*Dbeta - h*(a*Da - a*Dd + beta*Dbeta)"),
    rel("weyl", "Dbeta*beta = 1 - beta*Dbeta - h*beta*(Da - Dd)"),
    rel("weyl", "Dbeta*gamma = -gamma*Dbeta - h*(a*Dbeta + gamma*Da - gamma*Dd + d*Dbeta)"),
    rel("weyl", "Dbeta*d = d*Dbeta + h*(beta*Dbeta - d*Da + d*Dd)"),
    rel("weyl", "Dgamma*a = a*Dgamma - h*beta*Dgamma"),
    rel("weyl", "Dgamma*beta = -beta*Dgamma"),
    rel("weyl", "Dgamma*gamma = 1 - gamma*Dgamma - h*(a*Dgamma + d*Dgamma)"),
    rel("weyl", "Dgamma*d = d*Dgamma + h*beta*Dgamma"),
    rel("weyl", "Dd*a = a*Dd - h*(a*Dgamma + beta*Dd)"),
    rel("weyl", "Dd*beta = beta*Dd + h*beta*Dgamma"),
    rel("weyl", "Dd*gamma = gamma*Dd + h*(a*Dd + gamma*Dgamma + d*Dd)"),
    rel("weyl", "Dd*d = 1 + d*Dd + h*(beta*Dd - d*Dgamma)"),
];

pub const DERIVATIVE_RELATIONS: &[RelationLine] = &[
    rel("derivatives", "Da*Dbeta = Dbeta*Da + h*(Dd*Da - Dbeta*Dgamma - Da^2)"),
    rel("derivatives", "Dd*Dbeta = Dbeta*Dd - h*(Da*Dd + Dbeta*Dgamma - Dd^2)"),
    rel("derivatives", "Da*Dgamma = Dgamma*Da"),
    rel("derivatives", "Dd*Dgamma = Dgamma*Dd"),
    rel("derivatives", "Dbeta*Dgamma = -Dgamma*Dbeta + h*Dgamma*(Da - Dd)"),
    rel("derivatives", "Dbeta^2 = h*Dbeta*(Da - Dd)"),
    rel("derivatives", "Dgamma^2 = 0"),
    rel("derivatives", "Da*Dd = Dd*Da + h*Dgamma*(Dd - Da)"),
];

/// Differentials recovered from the one-forms.
pub const FORMS_FROM_ONEFORMS: &[RelationLine] = &[
    rel("forms-from-oneforms", "alpha = w1*a + u*gamma"),
    rel("forms-from-oneforms", "b = w1*beta + u*d"),
    rel("forms-from-oneforms", "c = w2*d + v*beta"),
    rel("forms-from-oneforms", "delta = w2*gamma + v*a"),
];

pub const SUPERPLANE_RELATIONS: &[RelationLine] = &[
    rel("superplane", "x*theta = theta*x + h*x^2"),
    rel("superplane", "theta^2 = -h*x*theta"),
];

/// Composite definitions, in dependency order.
const DET: (&str, &str) = ("D_h", "a*d_inv - beta*d_inv*gamma*d_inv");
const INVERSE_ENTRIES: [(&str, &str); 4] = [
    ("A", "a_inv + a_inv*beta*d_inv*gamma*a_inv"),
    ("B", "-a_inv*beta*d_inv"),
    ("C", "-d_inv*gamma*a_inv"),
    ("D", "d_inv + d_inv*gamma*a_inv*beta*d_inv"),
];
const DHAT: (&str, &str) = ("Dhat", "b*c_inv - alpha*c_inv*delta*c_inv");
const MAURER: [(&str, &str); 4] = [
    ("w1", "alpha*A + b*C"),
    ("u", "alpha*B + b*D"),
    ("v", "c*A + delta*C"),
    ("w2", "delta*D + c*B"),
];
const VECTOR_FIELDS: [(&str, &str); 4] = [
    ("T1", "a*Da + beta*Dbeta"),
    ("nablaP", "gamma*Da + d*Dbeta"),
    ("T2", "d*Dd + gamma*Dgamma"),
    ("nablaM", "a*Dgamma + beta*Dd"),
];
const SUPERPLANE: [(&str, &str); 2] = [("x", "2*u"), ("theta", "w1")];

/// A rule set together with the names an expression over it may use.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    description: String,
    rules: RuleSet,
    scope: Scope<Scalar>,
    composites: Vec<String>,
}

impl Presentation {
    /// Assembles a presentation from parts already checked by the caller.
    pub fn from_parts(
        name: impl Into<String>,
        description: impl Into<String>,
        rules: RuleSet,
        scope: Scope<Scalar>,
        composites: Vec<String>,
    ) -> Self {
        Presentation {
            name: name.into(),
            description: description.into(),
            rules,
            scope,
            composites,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn table(&self) -> &SharedTable {
        self.rules.table()
    }

    pub fn scope(&self) -> &Scope<Scalar> {
        &self.scope
    }

    /// Names of the composites bound in this presentation, in definition
    /// order.
    pub fn composite_names(&self) -> &[String] {
        &self.composites
    }

    pub fn gen(&self, name: &str) -> Element {
        self.rules
            .gen(name)
            .unwrap_or_else(|_| panic!("`{name}` is not a generator of {}", self.name))
    }

    pub fn composite(&self, name: &str) -> Result<Element, Error> {
        if !self.composites.iter().any(|c| c == name) {
            return Err(Error::UnknownComposite(name.to_string(), self.name.to_string()));
        }
        Ok(self.scope.lookup(name).expect("bound composite"))
    }

    pub fn parse(&self, src: &str) -> Result<Element, Error> {
        Ok(self.scope.parse_eval(src)?)
    }

    /// `lhs − rhs` for the text `lhs = rhs`.
    pub fn relation(&self, text: &str) -> Result<Element, Error> {
        let (lhs, rhs) = split_relation(text)?;
        Ok(&self.parse(lhs)? - &self.parse(rhs)?)
    }

    pub fn normalize(&self, x: &Element) -> Result<Element, Error> {
        Ok(self.rules.normalize(x)?)
    }

    /// `None` when `x` reduces to zero, else the nonzero normal form.
    pub fn verify_zero(&self, x: &Element) -> Result<Option<Element>, Error> {
        Ok(self.rules.verify_zero(x)?)
    }
}

pub fn split_relation(text: &str) -> Result<(&str, &str), Error> {
    let mut parts = text.split('=');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(l), Some(r), None) => Ok((l.trim(), r.trim())),
        _ => Err(Error::BadRelation(text.to_string())),
    }
}

struct Stage {
    name: &'static str,
    description: &'static str,
    table: SharedTable,
    scope: Scope<Scalar>,
    composites: Vec<String>,
}

impl Stage {
    fn new(name: &'static str, description: &'static str, table: SharedTable) -> Self {
        Stage {
            name,
            description,
            scope: Scope::new(&table),
            table,
            composites: Vec::new(),
        }
    }

    fn bind(&mut self, name: &str, value: Element) {
        self.scope.bind(name, value);
        if !self.composites.iter().any(|c| c == name) {
            self.composites.push(name.to_string());
        }
    }

    fn bind_raw(&mut self, defs: &[(&str, &str)]) -> Result<(), Error> {
        for (name, src) in defs {
            let v = self.scope.parse_eval(src)?;
            self.bind(name, v);
        }
        Ok(())
    }

    /// Orients every relation line, derives the inverse rules, and builds.
    fn rules(&self, lines: &[&[RelationLine]]) -> Result<RuleSet, Error> {
        let mut b = RuleSetBuilder::new(self.name, &self.table);
        for group in lines {
            for line in group.iter() {
                let (l, r) = split_relation(line.text)?;
                let lhs = self.scope.parse_eval(l)?;
                let rhs = self.scope.parse_eval(r)?;
                b.relation(&lhs, &rhs)
                    .map_err(|e| Error::Relation(line.text.to_string(), e.to_string()))?;
            }
        }
        b.localize_all()?;
        Ok(b.build()?)
    }

    /// Re-binds every composite as its normal form under `rules`.
    fn finish(mut self, rules: RuleSet) -> Result<Presentation, Error> {
        let mut scope = Scope::new(rules.table());
        for name in &self.composites {
            let raw = self.scope.lookup(name).expect("bound");
            scope.bind(name.clone(), rules.normalize(&raw)?);
        }
        self.scope = scope;
        Ok(Presentation {
            name: self.name.to_string(),
            description: self.description.to_string(),
            rules,
            scope: self.scope,
            composites: self.composites,
        })
    }
}

/// Binds `D_h` and a provisional `D_h_inv` that is exact modulo `h` (enough
/// for rule right hand sides, where it only ever multiplies `h`).
fn bind_det_raw(st: &mut Stage) -> Result<(), Error> {
    st.bind_raw(&[DET])?;
    st.bind_raw(&[("D_h_inv", "d*a_inv + d*a_inv*beta*d_inv*gamma*d_inv*d*a_inv")])?;
    Ok(())
}

/// Replaces the provisional `D_h_inv` by the verified two-sided inverse.
fn bind_det_inverse(p: &mut Presentation) -> Result<(), Error> {
    let x = p.parse("a*d_inv")?;
    let x_inv = p.parse("d*a_inv")?;
    let n = p.parse("-beta*d_inv*gamma*d_inv")?;
    let inv = invert_perturbed(&p.rules, &x, &x_inv, &n)?;
    p.scope.bind("D_h_inv", inv);
    Ok(())
}

pub fn glq() -> Result<Presentation, Error> {
    let table = build_table(&[&PRIMED])?;
    let mut st = Stage::new("glq", "q-deformed matrix supergroup, symbolic q", table.clone());
    st.bind("q", Element::scalar(&table, Scalar::q()));
    let rules = st.rules(&[GLQ_RELATIONS])?;
    st.finish(rules)
}

pub fn glh() -> Result<Presentation, Error> {
    let table = build_table(&[&MATRIX])?;
    let mut st = Stage::new("glh", "h-deformed matrix supergroup, localized at a and d", table);
    bind_det_raw(&mut st)?;
    let rules = st.rules(&[GLH_RELATIONS])?;
    st.bind_raw(&INVERSE_ENTRIES)?;
    let mut p = st.finish(rules)?;
    bind_det_inverse(&mut p)?;
    Ok(p)
}

fn gamma_stage(name: &'static str, description: &'static str, extra: &[&[GenSpec]]) -> Result<Stage, Error> {
    let mut groups: Vec<&[GenSpec]> = vec![&MATRIX, &DIFFERENTIALS];
    groups.extend_from_slice(extra);
    let table = build_table(&groups)?;
    let mut st = Stage::new(name, description, table);
    bind_det_raw(&mut st)?;
    Ok(st)
}

pub fn gamma() -> Result<Presentation, Error> {
    let mut st = gamma_stage(
        "gamma",
        "differential algebra: matrix entries and their differentials, localized at a, d, c",
        &[],
    )?;
    let rules = st.rules(&[GLH_RELATIONS, MIXED_RELATIONS, FORM_RELATIONS])?;
    st.bind_raw(&INVERSE_ENTRIES)?;
    st.bind_raw(&[DHAT])?;
    st.bind_raw(&MAURER)?;
    let mut p = st.finish(rules)?;
    bind_det_inverse(&mut p)?;
    Ok(p)
}

pub fn oneforms() -> Result<Presentation, Error> {
    let mut st = gamma_stage(
        "oneforms",
        "differential algebra extended by the right-invariant one-forms as generators",
        &[&ONE_FORMS],
    )?;
    let rules = st.rules(&[
        GLH_RELATIONS,
        MIXED_RELATIONS,
        FORM_RELATIONS,
        ONEFORM_PARAM_RELATIONS,
        ONEFORM_FORM_RELATIONS,
        ONEFORM_ALGEBRA_RELATIONS,
    ])?;
    st.bind_raw(&INVERSE_ENTRIES)?;
    st.bind_raw(&[DHAT])?;
    st.bind_raw(&SUPERPLANE)?;
    let mut p = st.finish(rules)?;
    bind_det_inverse(&mut p)?;
    Ok(p)
}

pub fn weyl() -> Result<Presentation, Error> {
    let table = build_table(&[&MATRIX, &PARTIALS])?;
    let mut st = Stage::new(
        "weyl",
        "matrix entries and partial derivatives, localized at a and d",
        table,
    );
    bind_det_raw(&mut st)?;
    let rules = st.rules(&[GLH_RELATIONS, WEYL_RELATIONS, DERIVATIVE_RELATIONS])?;
    st.bind_raw(&INVERSE_ENTRIES)?;
    st.bind_raw(&VECTOR_FIELDS)?;
    let mut p = st.finish(rules)?;
    bind_det_inverse(&mut p)?;
    Ok(p)
}

pub fn derivatives() -> Result<Presentation, Error> {
    let table = build_table(&[&PARTIALS_INVERTIBLE])?;
    let st = Stage::new(
        "derivatives",
        "partial derivatives alone, localized at the even derivatives",
        table,
    );
    let rules = st.rules(&[DERIVATIVE_RELATIONS])?;
    st.finish(rules)
}

/// Names of the built-in presentations.
pub const BUILT_INS: [&str; 6] = ["glq", "glh", "gamma", "oneforms", "weyl", "derivatives"];

pub fn build(name: &str) -> Result<Presentation, Error> {
    match name {
        "glq" => glq(),
        "glh" => glh(),
        "gamma" => gamma(),
        "oneforms" => oneforms(),
        "weyl" => weyl(),
        "derivatives" => derivatives(),
        _ => Err(Error::UnknownPresentation(name.to_string())),
    }
}

/// Every relation catalog by name, with the presentation it is checked in.
pub fn catalog(name: &str) -> Option<(&'static [RelationLine], &'static str)> {
    Some(match name {
        "glq" => (GLQ_RELATIONS, "glq"),
        "glh" => (GLH_RELATIONS, "glh"),
        "mixed" => (MIXED_RELATIONS, "gamma"),
        "forms" => (FORM_RELATIONS, "gamma"),
        "inverse-entries" => (INVERSE_ENTRY_RELATIONS, "gamma"),
        "oneform-params" => (ONEFORM_PARAM_RELATIONS, "gamma"),
        "inverse-forms" => (INVERSE_FORM_RELATIONS, "gamma"),
        "oneform-forms" => (ONEFORM_FORM_RELATIONS, "gamma"),
        "oneform-algebra" => (ONEFORM_ALGEBRA_RELATIONS, "gamma"),
        "forms-from-oneforms" => (FORMS_FROM_ONEFORMS, "gamma"),
        "superalgebra" => (SUPERALGEBRA_RELATIONS, "weyl"),
        "vector-on-params" => (VECTOR_ON_PARAM_RELATIONS, "weyl"),
        "weyl" => (WEYL_RELATIONS, "weyl"),
        "derivatives" => (DERIVATIVE_RELATIONS, "weyl"),
        "superplane" => (SUPERPLANE_RELATIONS, "oneforms"),
        _ => return None,
    })
}

pub const CATALOGS: [&str; 15] = [
    "glq",
    "glh",
    "mixed",
    "forms",
    "inverse-entries",
    "oneform-params",
    "inverse-forms",
    "oneform-forms",
    "oneform-algebra",
    "forms-from-oneforms",
    "superalgebra",
    "vector-on-params",
    "weyl",
    "derivatives",
    "superplane",
];

/// Lazily built presentations shared between checks.
#[derive(Default)]
pub struct Library {
    glq: OnceLock<Result<Presentation, Error>>,
    glh: OnceLock<Result<Presentation, Error>>,
    gamma: OnceLock<Result<Presentation, Error>>,
    oneforms: OnceLock<Result<Presentation, Error>>,
    weyl: OnceLock<Result<Presentation, Error>>,
    derivatives: OnceLock<Result<Presentation, Error>>,
}

impl Library {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Result<&Presentation, Error> {
        let cell = match name {
            "glq" => &self.glq,
            "glh" => &self.glh,
            "gamma" => &self.gamma,
            "oneforms" => &self.oneforms,
            "weyl" => &self.weyl,
            "derivatives" => &self.derivatives,
            _ => return Err(Error::UnknownPresentation(name.to_string())),
        };
        cell.get_or_init(|| build(name)).as_ref().map_err(Clone::clone)
    }
}

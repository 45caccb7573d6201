//! The contraction `T = g⁻¹T′g` from the q-deformed supergroup, with
//! `g = (1 0; λ 1)` and `λ = h/(q − 1)`.

use qsg_core::expr::Scope;
use qsg_core::{invert_perturbed, Coefficient, Element, Rational, RuleSet, Scalar};

use crate::error::Error;
use crate::maps::witness;
use crate::presentations::{Presentation, GLH_RELATIONS};
use crate::rmatrix::Matrix;

/// Unprimed differentials in terms of primed ones, read off from
/// `dT′ = (α − λb, b; c + λ(δ − α), δ − λb)`.
pub const DIFFERENTIAL_IMAGES: [(&str, &str); 4] = [
    ("alpha", "alphap + lambda*bp"),
    ("b", "bp"),
    ("c", "cp - lambda*(deltap - alphap)"),
    ("delta", "deltap + lambda*bp"),
];

/// The conjugated entries and the names the h-relations use, bound over
/// the q-presentation.
pub struct Contraction {
    scope: Scope<Scalar>,
    presentation: Presentation,
}

impl Contraction {
    pub fn new(glq: &Presentation) -> Result<Self, Error> {
        let t = glq.table();
        let lambda = glq.parse("h/(q - 1)")?;
        let one = Element::one(t);
        let zero = Element::zero(t);
        let g = Matrix::new(2, vec![one.clone(), zero.clone(), lambda.clone(), one.clone()]);
        let g_inv = Matrix::new(2, vec![one.clone(), zero, -&lambda, one]);
        let tp = Matrix::from_names(glq, 2, &["ap", "betap", "gammap", "dp"])?;
        let conj = g_inv.mul(&tp)?.mul(&g)?.normalize(glq.rules())?;
        let rules = glq.rules();
        let mut scope = glq.scope().clone();
        scope.bind("lambda", lambda);
        for (name, e) in ["a", "beta", "gamma", "d"].iter().zip(conj.entries()) {
            scope.bind(*name, e.clone());
        }
        for (x, xp) in [("a", "ap"), ("d", "dp")] {
            let img = scope.lookup(x).expect("bound");
            let base = glq.gen(xp);
            let inv = invert_perturbed(rules, &base, &glq.gen(&format!("{xp}_inv")), &(&img - &base))?;
            scope.bind(format!("{x}_inv"), inv);
        }
        let det = rules.normalize(&scope.parse_eval("a*d_inv - beta*d_inv*gamma*d_inv")?)?;
        let x = rules.normalize(&scope.parse_eval("a*d_inv")?)?;
        let x_inv = rules.normalize(&scope.parse_eval("d*a_inv")?)?;
        let det_inv = invert_perturbed(rules, &x, &x_inv, &(&det - &x))?;
        scope.bind("D_h", det);
        scope.bind("D_h_inv", det_inv);
        Ok(Contraction {
            scope,
            presentation: glq.clone(),
        })
    }

    /// Image of `a`, `beta`, `gamma`, `d`, their inverses, `D_h` or
    /// `D_h_inv`.
    pub fn image(&self, name: &str) -> Result<Element, Error> {
        self.scope
            .lookup(name)
            .ok_or_else(|| Error::Other(format!("`{name}` has no contraction image")))
    }

    /// Normal form of `lhs − rhs` with the unprimed names replaced by their
    /// images.
    pub fn residual(&self, text: &str) -> Result<Element, Error> {
        let (l, r) = crate::presentations::split_relation(text)?;
        let e = &self.scope.parse_eval(l)? - &self.scope.parse_eval(r)?;
        self.presentation.normalize(&e)
    }

    /// `D_h` of the images against the q-superdeterminant of `T′`.
    pub fn determinant_residual(&self) -> Result<Option<String>, Error> {
        let dq = self.presentation.parse("ap*dp_inv - betap*dp_inv*gammap*dp_inv")?;
        let diff = &self.image("D_h")? - &dq;
        Ok(witness(&self.presentation.normalize(&diff)?))
    }
}

/// Primed generators written in the unprimed ones, `T′ = g T g⁻¹`, over
/// the table of `glh`.
pub struct Uncontract {
    images: Vec<(String, Element)>,
    classical: RuleSet,
}

impl Uncontract {
    pub fn new(glh: &Presentation) -> Result<Self, Error> {
        let t = glh.table();
        let k = Scalar::q() - Scalar::from_int(1);
        let lambda = Element::h(t).scale(&k.try_inv().expect("q - 1 is a unit"));
        let one = Element::one(t);
        let zero = Element::zero(t);
        let g = Matrix::new(2, vec![one.clone(), zero.clone(), lambda.clone(), one.clone()]);
        let g_inv = Matrix::new(2, vec![one.clone(), zero, -&lambda, one]);
        let tm = Matrix::from_names(glh, 2, &["a", "beta", "gamma", "d"])?;
        let classical = glh.rules().classical_limit();
        let primed = g.mul(&tm)?.mul(&g_inv)?.normalize(&classical)?;
        let mut images = Vec::new();
        for (name, e) in ["ap", "betap", "gammap", "dp"].iter().zip(primed.entries()) {
            images.push((name.to_string(), e.clone()));
        }
        for (xp, x) in [("ap", "a"), ("dp", "d")] {
            let img = images.iter().find(|(n, _)| n == xp).expect("entry").1.clone();
            let base = glh.gen(x);
            let inv = invert_perturbed(&classical, &base, &glh.gen(&format!("{x}_inv")), &(&img - &base))?;
            images.push((format!("{xp}_inv"), inv));
        }
        Ok(Uncontract { images, classical })
    }

    pub fn image(&self, primed: &str) -> Option<&Element> {
        self.images.iter().find(|(n, _)| n == primed).map(|(_, e)| e)
    }

    /// `x` (over `glq`) in unprimed coordinates, ordered by the `h`-free
    /// rules; coefficients stay rational in `q`.
    pub fn apply(&self, x: &Element) -> Result<Element, Error> {
        let t = self.classical.table();
        let mut out = Element::zero(t);
        for (w, k) in x.terms() {
            let mut acc = Element::one(t);
            for g in w.letters() {
                let name = &x.table().get(*g).name;
                let img = self
                    .image(name)
                    .ok_or_else(|| Error::NoImage(name.clone(), "the inverse contraction"))?;
                acc = &acc * img;
            }
            if w.has_h() {
                acc = &Element::h(t) * &acc;
            }
            out = &out + &acc.scale(k);
        }
        Ok(self.classical.normalize(&out)?)
    }
}

/// Outcome of one relation line under the contraction.
#[derive(Clone, Debug)]
pub struct LineCheck {
    pub text: &'static str,
    /// Residual at symbolic `q`, `None` when exactly zero.
    pub exact: Option<String>,
    pub q_free: bool,
    /// Residual in unprimed coordinates at `q = 1`, `None` when it
    /// vanishes; an error string when some coefficient has a pole.
    pub limit: Result<Option<String>, String>,
}

/// Every coefficient evaluated at `q = 1`.
pub fn at_q_one(x: &Element) -> Result<Element, String> {
    let one = Rational::from_int(1);
    let mut out = Element::zero(x.table());
    for (w, k) in x.terms() {
        let v = k.eval(&one).ok_or_else(|| format!("pole at q = 1 in the coefficient {k}"))?;
        out.add_term(w.clone(), Scalar::constant(v));
    }
    Ok(out)
}

pub fn check_lines(c: &Contraction, u: &Uncontract) -> Result<Vec<LineCheck>, Error> {
    GLH_RELATIONS
        .iter()
        .map(|line| {
            let r = c.residual(line.text)?;
            Ok(LineCheck {
                text: line.text,
                exact: witness(&r),
                q_free: r.is_q_free(),
                limit: at_q_one(&u.apply(&r)?).map(|e| witness(&e)),
            })
        })
        .collect()
}

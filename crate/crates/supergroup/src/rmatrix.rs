//! Square matrices over the algebra, graded leg embeddings, the R-matrix,
//! and the matrix forms of the commutation relations.

use qsg_core::{Coefficient, Element, Parity, RuleSet, Scalar, SharedTable};

use crate::error::Error;
use crate::maps::{witness, Derivation};
use crate::presentations::{Library, Presentation};

/// A square matrix of elements. Index `i` of a `(1|1)` space is odd for
/// `i = 1`; the four-dimensional tensor space uses `2i + j`.
#[derive(Clone, Debug)]
pub struct Matrix {
    n: usize,
    entries: Vec<Element>,
}

/// Parity of a basis index of the `n`-dimensional space.
pub fn index_odd(n: usize, i: usize) -> bool {
    match n {
        2 => i == 1,
        _ => (i / 2 == 1) != (i % 2 == 1),
    }
}

fn entry_parity(e: &Element) -> bool {
    e.homogeneous_parity().map(Parity::is_odd).unwrap_or(false)
}

impl Matrix {
    pub fn new(n: usize, entries: Vec<Element>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix shape");
        Matrix { n, entries }
    }

    pub fn from_names(p: &Presentation, n: usize, names: &[&str]) -> Result<Matrix, Error> {
        let entries = names
            .iter()
            .map(|s| p.composite(s).or_else(|_| p.parse(s)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::new(n, entries))
    }

    pub fn from_scalars(table: &SharedTable, n: usize, rows: &[i64], h_rows: &[i64]) -> Matrix {
        let entries = rows
            .iter()
            .zip(h_rows)
            .map(|(&k, &hk)| {
                &Element::scalar(table, Scalar::from_int(k)) + &Element::h(table).scale_int(hk)
            })
            .collect();
        Matrix::new(n, entries)
    }

    pub fn identity(table: &SharedTable, n: usize) -> Matrix {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { Element::one(table) } else { Element::zero(table) })
            .collect();
        Matrix::new(n, entries)
    }

    pub fn diagonal(table: &SharedTable, diag: &[i64]) -> Matrix {
        let n = diag.len();
        let entries = (0..n * n)
            .map(|k| {
                if k / n == k % n {
                    Element::scalar(table, Scalar::from_int(diag[k / n]))
                } else {
                    Element::zero(table)
                }
            })
            .collect();
        Matrix::new(n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: Element) {
        self.entries[i * self.n + j] = e;
    }

    fn table(&self) -> &SharedTable {
        self.entries[0].table()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.n != other.n {
            return Err(Error::Other(format!("cannot multiply {0}×{0} by {1}×{1}", self.n, other.n)));
        }
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Element::zero(self.table());
                for k in 0..n {
                    acc = acc.try_add(&self.get(i, k).try_mul(other.get(k, j))?)?;
                }
                out.push(acc);
            }
        }
        Ok(Matrix::new(n, out))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip(other, |x, y| Ok(x.try_add(y)?))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, Error> {
        self.zip(other, |x, y| Ok(x.try_sub(y)?))
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(self.n, self.entries.iter().map(|e| -e).collect())
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Element, &Element) -> Result<Element, Error>) -> Result<Matrix, Error> {
        if self.n != other.n {
            return Err(Error::Other("matrix shapes differ".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(x, y)| f(x, y))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::new(self.n, entries))
    }

    pub fn map(&self, f: impl Fn(&Element) -> Result<Element, Error>) -> Result<Matrix, Error> {
        Ok(Matrix::new(self.n, self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?))
    }

    pub fn normalize(&self, rules: &RuleSet) -> Result<Matrix, Error> {
        self.map(|e| Ok(rules.normalize(e)?))
    }

    /// Re-expresses every entry over another table.
    pub fn embed(&self, table: &SharedTable) -> Result<Matrix, Error> {
        self.map(|e| Ok(e.embed(table)?))
    }

    /// `X′`: every entry times `(−1)^{p(entry)}`.
    pub fn prime(&self) -> Matrix {
        Matrix::new(
            self.n,
            self.entries
                .iter()
                .map(|e| if entry_parity(e) { -e } else { e.clone() })
                .collect(),
        )
    }

    /// Whether entry `(i, j)` has parity `p(i) + p(j) + shift` (zero entries
    /// are ignored).
    pub fn graded(&self, shift: bool) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                e.is_zero()
                    || e.homogeneous_parity().map(Parity::is_odd)
                        == Some(index_odd(self.n, i) ^ index_odd(self.n, j) ^ shift)
            })
        })
    }

    /// Residual entries, `None` where they vanish.
    pub fn witnesses(&self) -> Vec<Option<String>> {
        self.entries.iter().map(witness).collect()
    }
}

/// Which factor of `V ⊗ V` a 2×2 matrix acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    First,
    Second,
}

/// Sign rules for `(A ⊗ B)_{(ij),(kl)} = ± A_ik B_jl`, with `A = X, B = I`
/// on the first leg and `A = I, B = X` on the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// No signs.
    Plain,
    /// `(−1)^{(p_i + p_k) p_j}`
    IndexLeft,
    /// `(−1)^{p_i (p_j + p_l)}`
    IndexRight,
    /// `(−1)^{p(A_ik) p_j}`
    EntryLeft,
    /// `(−1)^{p_i p(B_jl)}`
    EntryRight,
    /// `(−1)^{p(B_jl)(p_i + p_k) + p(A_ik) p_j}`
    Koszul,
}

impl Convention {
    pub const ALL: [Convention; 6] = [
        Convention::Plain,
        Convention::IndexLeft,
        Convention::IndexRight,
        Convention::EntryLeft,
        Convention::EntryRight,
        Convention::Koszul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Plain => "plain",
            Convention::IndexLeft => "index-left",
            Convention::IndexRight => "index-right",
            Convention::EntryLeft => "entry-left",
            Convention::EntryRight => "entry-right",
            Convention::Koszul => "koszul",
        }
    }

    fn negates(self, idx: [bool; 4], pa: bool, pb: bool) -> bool {
        let [pi, pj, pk, pl] = idx;
        match self {
            Convention::Plain => false,
            Convention::IndexLeft => (pi ^ pk) & pj,
            Convention::IndexRight => pi & (pj ^ pl),
            Convention::EntryLeft => pa & pj,
            Convention::EntryRight => pi & pb,
            Convention::Koszul => (pb & (pi ^ pk)) ^ (pa & pj),
        }
    }
}

/// `X₁ = X ⊗ I` or `X₂ = I ⊗ X` under `conv`.
pub fn leg(x: &Matrix, which: Leg, conv: Convention) -> Matrix {
    assert_eq!(x.n, 2, "legs embed 2×2 matrices");
    let table = x.table().clone();
    let mut out = Matrix::identity(&table, 4);
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let (entry, pa, pb) = match which {
                        Leg::First if j == l => (x.get(i, k), entry_parity(x.get(i, k)), false),
                        Leg::Second if i == k => (x.get(j, l), false, entry_parity(x.get(j, l))),
                        _ => {
                            out.set(2 * i + j, 2 * k + l, Element::zero(&table));
                            continue;
                        }
                    };
                    let idx = [i == 1, j == 1, k == 1, l == 1];
                    let e = if conv.negates(idx, pa, pb) { -entry } else { entry.clone() };
                    out.set(2 * i + j, 2 * k + l, e);
                }
            }
        }
    }
    out
}

/// `R` with rows `(1 0 0 0; −h 1 0 0; h 0 1 0; 0 h h 1)`.
pub fn r_matrix(table: &SharedTable) -> Matrix {
    Matrix::from_scalars(
        table,
        4,
        &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0],
    )
}

/// `2I − R`
pub fn r_inverse(table: &SharedTable) -> Result<Matrix, Error> {
    let two = Matrix::diagonal(table, &[2, 2, 2, 2]);
    two.sub(&r_matrix(table))
}

/// `(R − I)²`, entrywise.
pub fn r_nilpotent(table: &SharedTable) -> Result<Vec<Option<String>>, Error> {
    let n = r_matrix(table).sub(&Matrix::identity(table, 4))?;
    Ok(n.mul(&n)?.witnesses())
}

/// `R·(2I − R) − I` and `(2I − R)·R − I`, entrywise.
pub fn r_inverse_check(table: &SharedTable) -> Result<Vec<Option<String>>, Error> {
    let r = r_matrix(table);
    let ri = r_inverse(table)?;
    let id = Matrix::identity(table, 4);
    let mut out = r.mul(&ri)?.sub(&id)?.witnesses();
    out.extend(ri.mul(&r)?.sub(&id)?.witnesses());
    Ok(out)
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` on `V⊗V⊗V`, plain embeddings.
pub fn yang_baxter(table: &SharedTable) -> Result<Vec<Option<String>>, Error> {
    let r = r_matrix(table);
    let embed = |a: usize, b: usize| {
        let mut m = Matrix::identity(table, 8);
        for row in 0..8usize {
            for col in 0..8usize {
                let bit = |x: usize, s: usize| (x >> (2 - s)) & 1;
                let other = (0..3).find(|s| *s != a && *s != b).expect("three factors");
                if bit(row, other) != bit(col, other) {
                    m.set(row, col, Element::zero(table));
                    continue;
                }
                let ri = 2 * bit(row, a) + bit(row, b);
                let ci = 2 * bit(col, a) + bit(col, b);
                m.set(row, col, r.get(ri, ci).clone());
            }
        }
        m
    };
    let (r12, r13, r23) = (embed(0, 1), embed(0, 2), embed(1, 2));
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    Ok(lhs.sub(&rhs)?.witnesses())
}

/// The matrix `T` of generators.
pub fn t_matrix(p: &Presentation) -> Result<Matrix, Error> {
    Matrix::from_names(p, 2, &["a", "beta", "gamma", "d"])
}

/// `T̂ = dT`
pub fn t_hat(p: &Presentation) -> Result<Matrix, Error> {
    Matrix::from_names(p, 2, &["alpha", "b", "c", "delta"])
}

/// `Ω`, taken from generators or composites of `p`.
pub fn omega(p: &Presentation) -> Result<Matrix, Error> {
    Matrix::from_names(p, 2, &["w1", "u", "v", "w2"])
}

/// The matrix identities checked entrywise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `R T₁ T₂ = T₂ T₁ R`
    Rtt,
    /// `T′₁ T̂₂ = R⁻¹ T̂₂ T₁ R`
    ParamForm,
    /// `(T̂₁)′ T̂₂ = R T̂′₂ T̂₁ R`
    FormForm,
    /// `T′₁ Ω₂ = R⁻¹ Ω₂ R T₁`
    ParamOneform,
    /// `T̂′₁ Ω₂ = R Ω′₂ R T̂₁`
    FormOneform,
    /// `Ω′₁ R⁻¹ Ω₂ R = −R Ω′₂ R Ω₁`
    OneformOneform,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Rtt,
        Identity::ParamForm,
        Identity::FormForm,
        Identity::ParamOneform,
        Identity::FormOneform,
        Identity::OneformOneform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Rtt => "rtt",
            Identity::ParamForm => "param-form",
            Identity::FormForm => "form-form",
            Identity::ParamOneform => "param-oneform",
            Identity::FormOneform => "form-oneform",
            Identity::OneformOneform => "oneform-oneform",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Identity::Rtt => "R T1 T2 = T2 T1 R",
            Identity::ParamForm => "T1' dT2 = R^-1 dT2 T1 R",
            Identity::FormForm => "(dT1)' dT2 = R dT2' dT1 R",
            Identity::ParamOneform => "T1' W2 = R^-1 W2 R T1",
            Identity::FormOneform => "dT1' W2 = R W2' R dT1",
            Identity::OneformOneform => "W1' R^-1 W2 R = -R W2' R W1",
        }
    }

    /// The presentation the identity is reduced in.
    pub fn presentation(self) -> &'static str {
        match self {
            Identity::Rtt => "glh",
            Identity::ParamForm | Identity::FormForm => "gamma",
            _ => "oneforms",
        }
    }
}

/// `lhs − rhs` of an identity under a convention, with `R` replaced by
/// `r` (for mutation checks). Not normalized.
pub fn identity_residual(p: &Presentation, id: Identity, conv: Convention, r: &Matrix) -> Result<Matrix, Error> {
    let table = p.table();
    let ri = Matrix::diagonal(table, &[2, 2, 2, 2]).sub(r)?;
    let t = t_matrix(p)?;
    let l1 = |m: &Matrix| leg(m, Leg::First, conv);
    let l2 = |m: &Matrix| leg(m, Leg::Second, conv);
    let (lhs, rhs) = match id {
        Identity::Rtt => (r.mul(&l1(&t))?.mul(&l2(&t))?, l2(&t).mul(&l1(&t))?.mul(r)?),
        Identity::ParamForm => {
            let th = t_hat(p)?;
            (l1(&t).prime().mul(&l2(&th))?, ri.mul(&l2(&th))?.mul(&l1(&t))?.mul(r)?)
        }
        Identity::FormForm => {
            let d = exterior_for(p)?;
            let th = t_hat(p)?;
            let dt1p = l1(&t).prime().map(|e| d.expand(e))?;
            (dt1p.mul(&l2(&th))?, r.mul(&l2(&th).prime())?.mul(&l1(&th))?.mul(r)?)
        }
        Identity::ParamOneform => {
            let om = omega(p)?;
            (l1(&t).prime().mul(&l2(&om))?, ri.mul(&l2(&om))?.mul(r)?.mul(&l1(&t))?)
        }
        Identity::FormOneform => {
            let d = exterior_for(p)?;
            let om = omega(p)?;
            let th = t_hat(p)?;
            let dt1p = l1(&t).prime().map(|e| d.expand(e))?;
            (dt1p.mul(&l2(&om))?, r.mul(&l2(&om).prime())?.mul(r)?.mul(&l1(&th))?)
        }
        Identity::OneformOneform => {
            let om = omega(p)?;
            (
                l1(&om).prime().mul(&ri)?.mul(&l2(&om))?.mul(r)?,
                r.mul(&l2(&om).prime())?.mul(r)?.mul(&l1(&om))?.neg(),
            )
        }
    };
    lhs.sub(&rhs)
}

fn exterior_for(p: &Presentation) -> Result<Derivation, Error> {
    crate::calculus::exterior(p.rules())
}

/// Normalized residual entries of an identity under a convention.
pub fn check_identity(p: &Presentation, id: Identity, conv: Convention) -> Result<Vec<Option<String>>, Error> {
    let r = r_matrix(p.table());
    Ok(identity_residual(p, id, conv, &r)?.normalize(p.rules())?.witnesses())
}

/// RTT with the `(4, 2)` entry of `R` zeroed; some entry must survive.
pub fn rtt_mutation(glh: &Presentation, conv: Convention) -> Result<Option<String>, Error> {
    let mut r = r_matrix(glh.table());
    r.set(3, 1, Element::zero(glh.table()));
    let res = identity_residual(glh, Identity::Rtt, conv, &r)?.normalize(glh.rules())?;
    Ok(res.witnesses().into_iter().flatten().next())
}

/// Every convention under which all six identities vanish entrywise.
pub fn passing_conventions(lib: &Library) -> Result<Vec<Convention>, Error> {
    let mut out = Vec::new();
    'conv: for conv in Convention::ALL {
        for id in Identity::ALL {
            let p = lib.get(id.presentation())?;
            if check_identity(p, id, conv)?.iter().any(Option::is_some) {
                continue 'conv;
            }
        }
        out.push(conv);
    }
    Ok(out)
}

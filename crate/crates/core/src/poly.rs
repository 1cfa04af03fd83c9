//! Sparse multivariate polynomials over the exact scalar field.
//!
//! Terms are stored with no zero coefficients, sorted in descending grevlex
//! order so that iteration, equality and printing are deterministic
//! regardless of how a polynomial was assembled. Family polynomials over
//! k[t][x_0..x_r] are represented in n+1 variables with t as the last
//! variable (x-degree ignores it); `omega_homogenize` produces that shape.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, WeightVector};
use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::UniPoly;
use std::collections::HashMap;
use std::fmt;

/// Canonical storage comparison: plain lex on exponent vectors. Terms are
/// kept descending under this, which is also the display order.
fn storage_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.exps().cmp(b.exps())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    field: FieldSpec,
    /// (monomial, coefficient), descending grevlex, no zero coefficients.
    terms: Vec<(Monomial, Scalar)>,
}

impl Poly {
    pub fn zero(nvars: usize, field: FieldSpec) -> Poly {
        Poly {
            nvars,
            field,
            terms: vec![],
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Poly {
        let field = c.field();
        if c.is_zero() {
            return Poly::zero(nvars, field);
        }
        Poly {
            nvars,
            field,
            terms: vec![(Monomial::one(nvars), c)],
        }
    }

    pub fn var(nvars: usize, field: FieldSpec, i: usize) -> Poly {
        Poly {
            nvars,
            field,
            terms: vec![(Monomial::var(nvars, i), field.one())],
        }
    }

    pub fn monomial(nvars: usize, c: Scalar, m: Monomial) -> Poly {
        assert_eq!(m.nvars(), nvars);
        let field = c.field();
        if c.is_zero() {
            return Poly::zero(nvars, field);
        }
        Poly {
            nvars,
            field,
            terms: vec![(m, c)],
        }
    }

    pub fn from_terms(
        nvars: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Poly {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            let e = acc.entry(m).or_insert_with(|| field.zero());
            *e = e.add(&c);
        }
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| storage_cmp(&b.0, &a.0));
        Poly {
            nvars,
            field,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        Poly::from_terms(
            self.nvars,
            self.field,
            self.terms.iter().cloned().chain(other.terms.iter().cloned()),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                let e = acc.entry(m).or_insert_with(|| self.field.zero());
                *e = e.add(&c);
            }
        }
        Poly::from_terms(self.nvars, self.field, acc)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars, self.field);
        }
        let mut terms: Vec<(Monomial, Scalar)> = self
            .terms
            .iter()
            .map(|(mm, a)| (mm.mul(m), a.mul(c)))
            .collect();
        terms.sort_by(|a, b| storage_cmp(&b.0, &a.0));
        Poly {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    /// Leading term under an order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_unchecked(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(mm, _)| mm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.field.zero())
    }

    /// True when all terms share one total degree; zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.total_degree();
                self.terms.iter().all(|(m, _)| m.total_degree() == d)
            }
        }
    }

    /// Homogeneity in the x-block only (variables 0..nx), for family rings.
    pub fn is_x_homogeneous(&self, nx: usize) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree_upto(nx);
                self.terms.iter().all(|(m, _)| m.degree_upto(nx) == d)
            }
        }
    }

    pub fn x_degree(&self, nx: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree_upto(nx)).max()
    }

    /// Maximal omega-degree over the terms.
    pub fn omega_degree(&self, omega: &WeightVector) -> Result<Option<i64>> {
        let mut best = None;
        for (m, _) in &self.terms {
            let d = omega.degree(m)?;
            best = Some(best.map_or(d, |b: i64| b.max(d)));
        }
        Ok(best)
    }

    /// Sum of the terms of maximal omega-degree; in_omega(fg) =
    /// in_omega(f) in_omega(g), and in_omega(0) = 0.
    pub fn omega_initial(&self, omega: &WeightVector) -> Result<Poly> {
        let Some(dmax) = self.omega_degree(omega)? else {
            return Ok(self.clone());
        };
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if omega.degree(m)? == dmax {
                terms.push((m.clone(), c.clone()));
            }
        }
        Ok(Poly {
            nvars: self.nvars,
            field: self.field,
            terms,
        })
    }

    /// The omega-homogenization in k[t][x]: every term picks up
    /// t^(deg_omega(f) - deg_omega(term)). Output lives in nvars+1 variables
    /// with t last; setting t = 1 recovers f and t = 0 recovers
    /// omega_initial(f).
    pub fn omega_homogenize(&self, omega: &WeightVector) -> Result<Poly> {
        let n = self.nvars;
        let Some(dmax) = self.omega_degree(omega)? else {
            return Ok(Poly::zero(n + 1, self.field));
        };
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let gap = dmax - omega.degree(m)?;
            let mut exps = m.exps().to_vec();
            exps.push(u32::try_from(gap).expect("omega gap overflow"));
            terms.push((Monomial::from_exps(exps), c.clone()));
        }
        Ok(Poly::from_terms(n + 1, self.field, terms))
    }

    /// Substitute the last variable by a scalar (t = alpha for families),
    /// dropping to nvars-1 variables.
    pub fn substitute_last(&self, alpha: &Scalar) -> Poly {
        let n = self.nvars;
        assert!(n >= 1);
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(n - 1);
            let mut factor = c.clone();
            for _ in 0..e {
                factor = factor.mul(alpha);
            }
            let exps = m.exps()[..n - 1].to_vec();
            terms.push((Monomial::from_exps(exps), factor));
        }
        Poly::from_terms(n - 1, self.field, terms)
    }

    /// View a family polynomial as a map x-monomial -> UniPoly coefficient
    /// in t (t is the last variable).
    pub fn t_coefficients(&self) -> Vec<(Monomial, UniPoly)> {
        let n = self.nvars;
        assert!(n >= 1);
        let mut acc: HashMap<Monomial, Vec<Scalar>> = HashMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(n - 1) as usize;
            let xm = Monomial::from_exps(m.exps()[..n - 1].to_vec());
            let v = acc.entry(xm).or_default();
            if v.len() <= e {
                v.resize(e + 1, self.field.zero());
            }
            v[e] = v[e].add(c);
        }
        let mut out: Vec<(Monomial, UniPoly)> = acc
            .into_iter()
            .map(|(m, cs)| (m, UniPoly::from_coeffs(self.field, cs)))
            .filter(|(_, u)| !u.is_zero())
            .collect();
        out.sort_by(|a, b| storage_cmp(&b.0, &a.0));
        out
    }

    /// Append fresh variables (exponent zero) at the end.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.exps().to_vec();
                    exps.extend(std::iter::repeat(0).take(extra));
                    (Monomial::from_exps(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Apply a variable permutation: new variable j is old variable perm[j].
    pub fn permute_vars(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars);
        Poly::from_terms(
            self.nvars,
            self.field,
            self.terms.iter().map(|(m, c)| {
                let exps: Vec<u32> = perm.iter().map(|&old| m.exp(old)).collect();
                (Monomial::from_exps(exps), c.clone())
            }),
        )
    }

    /// Drop trailing variables, which must not occur.
    pub fn shrink_vars(&self, new_n: usize) -> Poly {
        assert!(new_n <= self.nvars);
        Poly {
            nvars: new_n,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    assert!(
                        m.exps()[new_n..].iter().all(|&e| e == 0),
                        "variable in dropped range"
                    );
                    (Monomial::from_exps(m.exps()[..new_n].to_vec()), c.clone())
                })
                .collect(),
        }
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(i) > 0)
    }

    /// Exact division by another polynomial (remainder must vanish).
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = MonomialOrder::GrevLex;
        let (dm, dc) = d.leading_term(&order).unwrap();
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quo = Poly::zero(self.nvars, self.field);
        while let Some((rm, rc)) = rem.leading_term(&order) {
            if !dm.divides(rm) {
                return Err(Error::Internal(format!(
                    "inexact polynomial division: {self} by {d}"
                )));
            }
            let m = dm.quotient(rm);
            let c = rc.div(&dc);
            let t = Poly::monomial(self.nvars, c, m);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Ok(quo)
    }

    /// Canonical display; `tvar` renames the last variable to t.
    pub fn display(&self, tvar: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(s) => (true, s.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&m.display(tvar));
            } else {
                out.push_str(&format!("{}*{}", mag, m.display(tvar)));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(false))
    }
}

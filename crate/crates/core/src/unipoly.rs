//! Univariate polynomials in the parameter t over the active field.
//!
//! Coefficients are stored densely by degree with a trimmed (nonzero) leading
//! coefficient; the zero polynomial has an empty coefficient vector and its
//! degree is `None`.

use crate::scalar::{FieldSpec, Scalar};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero(field: FieldSpec) -> UniPoly {
        UniPoly {
            field,
            coeffs: vec![],
        }
    }

    pub fn constant(c: Scalar) -> UniPoly {
        let field = c.field();
        let mut p = UniPoly {
            field,
            coeffs: vec![c],
        };
        p.trim();
        p
    }

    pub fn one(field: FieldSpec) -> UniPoly {
        UniPoly::constant(field.one())
    }

    /// t^k
    pub fn t_power(field: FieldSpec, k: usize) -> UniPoly {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = field.one();
        UniPoly { field, coeffs }
    }

    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> UniPoly {
        let mut p = UniPoly { field, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Units of k[t] are the nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// t-adic valuation: index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.field, other.field);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        assert_eq!(self.field, other.field);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(
            self.field,
            self.coeffs.iter().map(|a| a.mul(c)).collect(),
        )
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { field: self.field, coeffs }
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let field = self.field;
        let mut r = self.clone();
        let dd = d.degree().unwrap();
        let lc_inv = d.leading_coeff().unwrap().inv();
        let mut q = vec![field.zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.coeffs[rd].mul(&lc_inv);
            q[rd - dd] = c.clone();
            // r -= c * t^(rd-dd) * d
            for (i, dc) in d.coeffs.iter().enumerate() {
                let idx = rd - dd + i;
                r.coeffs[idx] = r.coeffs[idx].sub(&c.mul(dc));
            }
            r.trim();
        }
        (UniPoly::from_coeffs(field, q), r)
    }

    pub fn divides(&self, other: &UniPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Exact quotient; panics if the division is not exact.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Monic gcd; gcd(0, f) is the monic normalization of f.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&self.field.from_i64(i as i64)))
            .collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }

    /// Monic product of the distinct irreducible factors (f / gcd(f, f')).
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).monic()
    }

    /// Truncate modulo t^q.
    pub fn truncated(&self, q: usize) -> UniPoly {
        UniPoly::from_coeffs(
            self.field,
            self.coeffs.iter().take(q).cloned().collect(),
        )
    }

    /// Inverse modulo t^q; requires the constant term to be nonzero.
    pub fn inv_mod_tq(&self, q: usize) -> UniPoly {
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "non-unit in k[t]/(t^q)");
        let mut inv = UniPoly::constant(c0.inv());
        // Newton iteration: inv <- inv * (2 - self * inv), doubling precision.
        let mut prec = 1;
        while prec < q {
            prec = (2 * prec).min(q);
            let two = UniPoly::constant(self.field.from_i64(2));
            let t = two.sub(&self.truncated(prec).mul(&inv).truncated(prec));
            inv = inv.mul(&t).truncated(prec);
        }
        inv.truncated(q)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn upoly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(q(), coeffs.iter().map(|&c| q().from_i64(c)).collect())
    }

    #[test]
    fn gcd_examples() {
        // gcd(t^2 - 1, t - 1) = t - 1
        let a = upoly(&[-1, 0, 1]);
        let b = upoly(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // gcd(0, f) is the monic normalization of f
        let f = upoly(&[2, 4]);
        assert_eq!(UniPoly::zero(q()).gcd(&f), upoly(&[1, 2]).scale(&q().from_ratio(1, 2).unwrap()));
        assert_eq!(UniPoly::zero(q()).gcd(&f).to_string(), "t+1/2");
        // gcd(t^2 + t, t^3) = t
        let a = upoly(&[0, 1, 1]);
        let b = upoly(&[0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), upoly(&[0, 1]));
    }

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(UniPoly::zero(q()).degree(), None);
        assert_eq!(upoly(&[5]).degree(), Some(0));
        assert_eq!(upoly(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn divrem_roundtrip() {
        let a = upoly(&[1, 2, 0, 5, 7]);
        let d = upoly(&[3, 0, 1]);
        let (quo, rem) = a.divrem(&d);
        assert_eq!(quo.mul(&d).add(&rem), a);
        assert!(rem.degree().unwrap_or(0) < d.degree().unwrap());
    }

    #[test]
    fn inverse_mod_tq() {
        let f = upoly(&[1, 1]); // 1 + t
        let inv = f.inv_mod_tq(4);
        assert_eq!(f.mul(&inv).truncated(4), upoly(&[1]));
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        // t^3 - t^2 = t^2 (t - 1) -> squarefree part t(t-1) = t^2 - t
        let f = upoly(&[0, 0, -1, 1]);
        assert_eq!(f.squarefree_part(), upoly(&[0, -1, 1]));
    }

    #[test]
    fn valuation() {
        assert_eq!(upoly(&[0, 0, 2, 1]).valuation(), Some(2));
        assert_eq!(UniPoly::zero(q()).valuation(), None);
    }
}

//! Monomials in x_0..x_{n-1} and monomial orders (lex, grevlex, weight
//! orders with tie-break, and a block order used for elimination).

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// Exponent vector of a monomial; the variable count is fixed by the ring
/// context it lives in.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree of the x-block `0..nx` (families grade by x only).
    pub fn degree_upto(&self, nx: usize) -> u32 {
        self.exps[..nx].iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Product; exponent overflow is a hard error, never wrapped.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Print with variable names x0..x{n-1}; `tvar` renames the last variable
    /// to t (family rings).
    pub fn display(&self, tvar: bool) -> String {
        let n = self.exps.len();
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = if tvar && i == n - 1 {
                "t".to_string()
            } else {
                format!("x{i}")
            };
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(false))
    }
}

/// Strictly positive integer weights, one per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct WeightVector {
    weights: Vec<i64>,
}

impl WeightVector {
    pub fn new(weights: Vec<i64>) -> Result<WeightVector> {
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidInput(
                "weight vectors must have strictly positive entries".into(),
            ));
        }
        Ok(WeightVector { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.weights
    }

    /// The omega-degree of a monomial: exponent vector dotted with omega.
    pub fn degree(&self, m: &Monomial) -> Result<i64> {
        if self.weights.len() != m.nvars() {
            return Err(Error::VarMismatch(self.weights.len(), m.nvars()));
        }
        Ok(m.exps()
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum())
    }
}

/// Total multiplicative monomial orders with 1 minimal.
///
/// `Block { split }` compares the leading block x_0..x_{split-1} by grevlex
/// first and breaks ties on the trailing block; any monomial using a leading
/// variable beats any monomial that avoids them, which is the elimination
/// property.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Weight {
        weights: WeightVector,
        tiebreak: Box<MonomialOrder>,
    },
    Block {
        split: usize,
    },
}

impl MonomialOrder {
    pub fn weight(w: WeightVector) -> MonomialOrder {
        MonomialOrder::Weight {
            weights: w,
            tiebreak: Box::new(MonomialOrder::GrevLex),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::VarMismatch(a.nvars(), b.nvars()));
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::GrevLex => grevlex_slice(a.exps(), b.exps()),
            MonomialOrder::Weight { weights, tiebreak } => {
                let wa = weights.degree(a).expect("weight length mismatch");
                let wb = weights.degree(b).expect("weight length mismatch");
                wa.cmp(&wb).then_with(|| tiebreak.cmp_unchecked(a, b))
            }
            MonomialOrder::Block { split } => {
                grevlex_slice(&a.exps()[..*split], &b.exps()[..*split])
                    .then_with(|| grevlex_slice(&a.exps()[*split..], &b.exps()[*split..]))
            }
        }
    }
}

fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            match a[i].cmp(&b[i]) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => {}
            }
        }
        Ordering::Equal
    })
}

/// All monomials of the given total degree, in descending grevlex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exps(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::from_exps(vec![]));
        }
        return out;
    }
    rec(0, degree, &mut cur, &mut out);
    out.sort_by(|a, b| MonomialOrder::GrevLex.cmp_unchecked(b, a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_first_exponent_dominates() {
        // x0 x2 vs x1^2 in lex(x0 > x1 > x2 > x3): greater
        let a = m(&[1, 0, 1, 0]);
        let b = m(&[0, 2, 0, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn grevlex_rule() {
        // equal degree, rightmost nonzero entry of a-b positive => a smaller
        let a = m(&[1, 0, 1, 0]); // x0 x2
        let b = m(&[0, 2, 0, 0]); // x1^2
        assert_eq!(
            MonomialOrder::GrevLex.compare(&a, &b).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn reflexive_equal() {
        let a = m(&[2, 1, 0, 3]);
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            assert_eq!(o.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn weight_degree_examples() {
        let w = WeightVector::new(vec![1, 2, 3, 4]).unwrap();
        assert_eq!(w.degree(&m(&[1, 0, 0, 1])).unwrap(), 5);
        let uniform = WeightVector::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(uniform.degree(&m(&[1, 2, 0, 1])).unwrap(), 4);
        let w2 = WeightVector::new(vec![8, 4, 2, 1]).unwrap();
        assert_eq!(w2.degree(&m(&[0, 2, 0, 0])).unwrap(), 8);
    }

    #[test]
    fn weight_rejects_nonpositive() {
        assert!(WeightVector::new(vec![1, 0, 2]).is_err());
        assert!(WeightVector::new(vec![-1, 2]).is_err());
    }

    #[test]
    fn mismatch_reported() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(MonomialOrder::Lex.compare(&a, &b).is_err());
    }

    #[test]
    fn orders_total_multiplicative_exhaustive() {
        // all pairs up to degree 4 in 3 variables, sample multipliers
        let mut monos = Vec::new();
        for d in 0..=4 {
            monos.extend(monomials_of_degree(3, d));
        }
        let w = WeightVector::new(vec![3, 1, 2]).unwrap();
        let orders = [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::weight(w),
            MonomialOrder::Block { split: 1 },
        ];
        let mults = [m(&[0, 0, 0]), m(&[1, 0, 0]), m(&[0, 1, 1]), m(&[2, 0, 1])];
        let one = Monomial::one(3);
        for o in &orders {
            for a in &monos {
                // 1 is minimal
                if !a.is_one() {
                    assert_eq!(o.cmp_unchecked(a, &one), Ordering::Greater);
                }
                for b in &monos {
                    let c = o.cmp_unchecked(a, b);
                    // totality / antisymmetry
                    assert_eq!(c, o.cmp_unchecked(b, a).reverse());
                    if a != b {
                        assert_ne!(c, Ordering::Equal);
                    }
                    // multiplicative
                    for t in &mults {
                        assert_eq!(o.cmp_unchecked(&a.mul(t), &b.mul(t)), c);
                    }
                }
            }
        }
    }

    #[test]
    fn block_order_eliminates() {
        // any monomial touching the leading block beats any that avoids it
        let o = MonomialOrder::Block { split: 2 };
        let lead = m(&[0, 1, 0, 0]);
        let tail = m(&[0, 0, 7, 5]);
        assert_eq!(o.cmp_unchecked(&lead, &tail), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration_count() {
        // dim of degree-d part of k[x0..x3] is C(d+3, 3)
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
    }
}

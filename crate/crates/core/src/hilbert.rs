//! Hilbert functions, series and polynomials of graded quotients, integer
//! partitions and their Hilbert polynomials, and integer-valued polynomials
//! in the binomial basis.

use crate::error::{Error, Result};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::monomial::{Monomial, MonomialOrder};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;

/// Combinatorial binomial coefficient: zero unless 0 <= k <= n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j);
        acc = acc / BigInt::from(j + 1);
    }
    acc
}

// ---------------------------------------------------------------------------
// numerical polynomials
// ---------------------------------------------------------------------------

/// An integer-valued polynomial stored in the binomial basis
/// {C(m+i, i)}_{i>=0} with integer coefficients, so integrality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumericalPolynomial {
    /// coeffs[i] multiplies C(m+i, i); trailing zeros trimmed.
    coeffs: Vec<BigInt>,
}

impl NumericalPolynomial {
    pub fn zero() -> NumericalPolynomial {
        NumericalPolynomial { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> NumericalPolynomial {
        let mut p = NumericalPolynomial { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn from_binomial_coeffs(coeffs: Vec<BigInt>) -> NumericalPolynomial {
        let mut p = NumericalPolynomial { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation: C(m+i, i) is a product of i consecutive integers
    /// over i!, an integer for every integer m.
    pub fn eval(&self, m: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += c * binomial_poly_value(m, i);
        }
        acc
    }

    pub fn add(&self, other: &NumericalPolynomial) -> NumericalPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        NumericalPolynomial::from_binomial_coeffs(coeffs)
    }

    pub fn sub(&self, other: &NumericalPolynomial) -> NumericalPolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NumericalPolynomial {
        NumericalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Rational coefficients in the monomial basis, ascending powers of m.
    pub fn monomial_coeffs(&self) -> Vec<BigRational> {
        let mut acc = vec![BigRational::zero(); self.coeffs.len().max(1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            let b = binomial_basis_rational(i);
            for (k, v) in b.iter().enumerate() {
                acc[k] += BigRational::from_integer(c.clone()) * v;
            }
        }
        while acc.len() > 1 && acc.last().unwrap().is_zero() {
            acc.pop();
        }
        acc
    }

    /// Build from rational monomial-basis coefficients; fails when the
    /// polynomial is not integer-valued.
    pub fn from_monomial_coeffs(mut coeffs: Vec<BigRational>) -> Result<NumericalPolynomial> {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Ok(NumericalPolynomial::zero());
        }
        let deg = coeffs.len() - 1;
        let mut rem = coeffs;
        let mut bin = vec![BigInt::zero(); deg + 1];
        for i in (0..=deg).rev() {
            let lead = rem.get(i).cloned().unwrap_or_else(BigRational::zero);
            if lead.is_zero() {
                continue;
            }
            // leading coefficient of C(m+i, i) is 1/i!
            let fact = factorial(i);
            let c = lead * BigRational::from_integer(fact);
            if !c.denom().is_one() {
                return Err(Error::Internal(format!(
                    "polynomial is not integer-valued (binomial coefficient {c} at index {i})"
                )));
            }
            let ci = c.numer().clone();
            let basis = binomial_basis_rational(i);
            for (k, v) in basis.iter().enumerate() {
                rem[k] -= BigRational::from_integer(ci.clone()) * v;
            }
            bin[i] = ci;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::Internal(
                "binomial expansion did not terminate".into(),
            ));
        }
        Ok(NumericalPolynomial::from_binomial_coeffs(bin))
    }

    /// Substitute m -> a*m + b (integer affine change); integer-valuedness is
    /// preserved for a = +-1, which is all the engine uses.
    pub fn compose_affine(&self, a: i64, b: i64) -> NumericalPolynomial {
        let mono = self.monomial_coeffs();
        let mut acc = vec![BigRational::zero(); mono.len()];
        let ar = BigRational::from_integer(BigInt::from(a));
        let br = BigRational::from_integer(BigInt::from(b));
        for (k, c) in mono.iter().enumerate() {
            for j in 0..=k {
                let coef = BigRational::from_integer(binomial(k as i64, j as i64))
                    * pow_rational(&ar, j)
                    * pow_rational(&br, k - j);
                acc[j] += c * coef;
            }
        }
        NumericalPolynomial::from_monomial_coeffs(acc)
            .expect("affine substitution with unit slope stays integer-valued")
    }

    /// Fit a polynomial of degree <= max_degree to consecutive integer values
    /// f(start), f(start+1), ... by Newton forward differences. Returns None
    /// when no such polynomial matches the whole window.
    pub fn fit_window(
        start: i64,
        values: &[BigInt],
        max_degree: usize,
    ) -> Option<NumericalPolynomial> {
        if values.is_empty() {
            return None;
        }
        let mut rows: Vec<Vec<BigInt>> = vec![values.to_vec()];
        let mut degree = None;
        for d in 0..values.len() {
            let last = rows.last().unwrap();
            if last.iter().all(|v| v.is_zero()) {
                degree = Some(d.saturating_sub(1));
                break;
            }
            if last.len() < 2 || d > max_degree {
                break;
            }
            let next: Vec<BigInt> = last.windows(2).map(|w| &w[1] - &w[0]).collect();
            rows.push(next);
        }
        let degree = degree?;
        if values.len() < degree + 2 {
            return None;
        }
        // P(m) = sum_k Delta^k f(start) * C(m - start, k)
        let mut acc = vec![BigRational::zero(); degree + 2];
        for (k, row) in rows.iter().enumerate().take(degree + 1) {
            let delta = row[0].clone();
            if delta.is_zero() {
                continue;
            }
            let basis = falling_binomial_rational(k, start);
            for (j, v) in basis.iter().enumerate() {
                if acc.len() <= j {
                    acc.resize(j + 1, BigRational::zero());
                }
                acc[j] += BigRational::from_integer(delta.clone()) * v;
            }
        }
        let p = NumericalPolynomial::from_monomial_coeffs(acc).ok()?;
        for (i, v) in values.iter().enumerate() {
            if &p.eval(start + i as i64) != v {
                return None;
            }
        }
        Some(p)
    }

    /// Canonical compact string in the given variable, e.g. `3*m+1`.
    pub fn display(&self, var: &str) -> String {
        let coeffs = self.monomial_coeffs();
        if coeffs.iter().all(|c| c.is_zero()) {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag_str = if mag.denom().is_one() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            if k == 0 {
                out.push_str(&mag_str);
            } else {
                let vpart = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if mag.is_one() {
                    out.push_str(&vpart);
                } else {
                    out.push_str(&format!("{mag_str}*{vpart}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("m"))
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n as i64).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn pow_rational(x: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Value of C(m+i, i) at an integer m (polynomial extension, exact).
fn binomial_poly_value(m: i64, i: usize) -> BigInt {
    let mut num = BigInt::one();
    for j in 1..=i as i64 {
        num *= BigInt::from(m + j);
    }
    num / factorial(i)
}

/// C(m+i, i) as rational monomial coefficients (ascending).
fn binomial_basis_rational(i: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 1..=i as i64 {
        poly = poly_mul_linear(&poly, &BigRational::from_integer(BigInt::from(j)));
    }
    let f = BigRational::from_integer(factorial(i));
    poly.into_iter().map(|c| c / f.clone()).collect()
}

/// C(m - start, k) as rational monomial coefficients (ascending).
fn falling_binomial_rational(k: usize, start: i64) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 0..k as i64 {
        poly = poly_mul_linear(&poly, &BigRational::from_integer(BigInt::from(-start - j)));
    }
    let f = BigRational::from_integer(factorial(k));
    poly.into_iter().map(|c| c / f.clone()).collect()
}

/// Multiply an ascending-coefficient polynomial by (m + c).
fn poly_mul_linear(p: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, a) in p.iter().enumerate() {
        out[i + 1] += a;
        out[i] += a * c;
    }
    out
}

// ---------------------------------------------------------------------------
// Hilbert series of monomial quotients
// ---------------------------------------------------------------------------

/// Numerator N(T) of HS(S/I) = N(T)/(1-T)^n for a monomial ideal, by the
/// pivot-variable recursion N(S/I) = N(S/(I+x)) + T*N(S/(I:x)) with
/// memoization; pairwise-coprime generators close the recursion with a
/// Koszul product.
pub fn hilbert_numerator(mi: &MonomialIdeal) -> Vec<BigInt> {
    let mut memo: HashMap<Vec<Vec<u32>>, Vec<BigInt>> = HashMap::new();
    numerator_rec(mi, &mut memo)
}

fn numerator_rec(
    mi: &MonomialIdeal,
    memo: &mut HashMap<Vec<Vec<u32>>, Vec<BigInt>>,
) -> Vec<BigInt> {
    let key: Vec<Vec<u32>> = mi.gens().iter().map(|m| m.exps().to_vec()).collect();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let n = mi.nvars();
    let result = (|| {
        if mi.is_zero_ideal() {
            return vec![BigInt::one()];
        }
        if mi.gens().iter().any(|m| m.is_one()) {
            return vec![];
        }
        let gens = mi.gens();
        let coprime = gens
            .iter()
            .enumerate()
            .all(|(i, a)| gens.iter().skip(i + 1).all(|b| a.coprime(b)));
        if coprime {
            let mut acc = vec![BigInt::one()];
            for g in gens {
                let d = g.total_degree() as usize;
                let mut f = vec![BigInt::zero(); d + 1];
                f[0] = BigInt::one();
                f[d] = -BigInt::one();
                acc = poly_mul_int(&acc, &f);
            }
            return acc;
        }
        // pivot: a shared or repeated variable, preferring high exponents
        let mut pivot = None;
        let mut best = 0u32;
        for g in gens {
            for i in 0..n {
                let e = g.exp(i);
                if e > 0 {
                    let shared = gens.iter().filter(|h| h.exp(i) > 0).count();
                    let score = e * 100 + shared as u32;
                    if (e >= 2 || shared >= 2) && score > best {
                        best = score;
                        pivot = Some(i);
                    }
                }
            }
        }
        let x = pivot.expect("non-coprime generators share a variable");
        let mut plus: Vec<Monomial> = vec![Monomial::var(n, x)];
        plus.extend(gens.iter().filter(|m| m.exp(x) == 0).cloned());
        let plus_mi = MonomialIdeal::new(n, plus);
        let colon: Vec<Monomial> = gens
            .iter()
            .map(|m| {
                let mut e = m.exps().to_vec();
                if e[x] > 0 {
                    e[x] -= 1;
                }
                Monomial::from_exps(e)
            })
            .collect();
        let colon_mi = MonomialIdeal::new(n, colon);
        let a = numerator_rec(&plus_mi, memo);
        let b = numerator_rec(&colon_mi, memo);
        let mut shifted = vec![BigInt::zero()];
        shifted.extend(b);
        poly_add_int(&a, &shifted)
    })();
    memo.insert(key, result.clone());
    result
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_int(out)
}

fn poly_add_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim_int(out)
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while matches!(v.last(), Some(c) if c.is_zero()) {
        v.pop();
    }
    v
}

/// Divide by (1 - T) once, assuming exactness (numerator vanishes at T = 1).
fn divide_one_minus_t(num: &[BigInt]) -> Vec<BigInt> {
    let mut q = vec![BigInt::zero(); num.len().saturating_sub(1)];
    let mut carry = BigInt::zero();
    for (j, c) in num.iter().enumerate().take(num.len().saturating_sub(1)) {
        carry = carry + c;
        q[j] = carry.clone();
    }
    trim_int(q)
}

/// dim_k [S/I]_nu for a monomial ideal (0 for negative degrees).
pub fn hilbert_function_monomial(mi: &MonomialIdeal, nu: i64) -> BigInt {
    let n = mi.nvars() as i64;
    let num = hilbert_numerator(mi);
    let mut acc = BigInt::zero();
    for (j, c) in num.iter().enumerate() {
        acc += c * binomial(nu - j as i64 + n - 1, n - 1);
    }
    acc
}

/// dim_k [S/I]_nu through the initial ideal (Macaulay's theorem).
pub fn hilbert_function(ideal: &Ideal, nu: i64) -> BigInt {
    hilbert_function_monomial(&ideal.initial_ideal(&MonomialOrder::GrevLex), nu)
}

/// Hilbert polynomial of S/I for a monomial ideal: cancel (1-T) factors from
/// N/(1-T)^n and expand the remaining binomial series.
pub fn hilbert_polynomial_monomial(mi: &MonomialIdeal) -> NumericalPolynomial {
    let n = mi.nvars();
    let mut num = hilbert_numerator(mi);
    let mut d = n as i64;
    loop {
        if num.is_empty() {
            return NumericalPolynomial::zero();
        }
        if d == 0 {
            break;
        }
        let at_one: BigInt = num.iter().sum();
        if !at_one.is_zero() {
            break;
        }
        num = divide_one_minus_t(&num);
        d -= 1;
    }
    if d == 0 {
        return NumericalPolynomial::zero();
    }
    // HP(m) = sum_j num_j * C(m - j + d - 1, d - 1) as a polynomial in m
    let mut acc = vec![BigRational::zero(); d as usize];
    for (j, c) in num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let basis = shifted_binomial_rational((d - 1) as usize, d - 1 - j as i64);
        for (k, v) in basis.iter().enumerate() {
            acc[k] += BigRational::from_integer(c.clone()) * v;
        }
    }
    NumericalPolynomial::from_monomial_coeffs(acc).expect("Hilbert polynomials are integer-valued")
}

/// C(m + c, k) as rational monomial coefficients (ascending).
fn shifted_binomial_rational(k: usize, c: i64) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for j in 0..k as i64 {
        poly = poly_mul_linear(&poly, &BigRational::from_integer(BigInt::from(c - j)));
    }
    let f = BigRational::from_integer(factorial(k));
    poly.into_iter().map(|x| x / f.clone()).collect()
}

/// The displayed binomial C(m + c, k) as a numerical polynomial in m.
pub fn binomial_polynomial(c: i64, k: usize) -> NumericalPolynomial {
    NumericalPolynomial::from_monomial_coeffs(shifted_binomial_rational(k, c))
        .expect("binomial polynomials are integer-valued")
}

/// Hilbert polynomial of S/I via the initial ideal.
pub fn hilbert_polynomial(ideal: &Ideal) -> NumericalPolynomial {
    hilbert_polynomial_monomial(&ideal.initial_ideal(&MonomialOrder::GrevLex))
}

/// Krull dimension of S/I for a monomial ideal: the pole order of the
/// Hilbert series at T = 1.
pub fn krull_dim_monomial(mi: &MonomialIdeal) -> usize {
    let n = mi.nvars();
    let mut num = hilbert_numerator(mi);
    let mut d = n;
    loop {
        if num.is_empty() || d == 0 {
            return 0;
        }
        let at_one: BigInt = num.iter().sum();
        if !at_one.is_zero() {
            return d;
        }
        num = divide_one_minus_t(&num);
        d -= 1;
    }
}

pub fn krull_dim_quotient(ideal: &Ideal) -> usize {
    krull_dim_monomial(&ideal.initial_ideal(&MonomialOrder::GrevLex))
}

// ---------------------------------------------------------------------------
// integer partitions
// ---------------------------------------------------------------------------

/// A weakly decreasing partition of positive integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerPartition {
    parts: Vec<u32>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<u32>) -> Result<IntegerPartition> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(
                "partition parts must be positive and weakly decreasing".into(),
            ));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts[0]
    }

    /// Multiplicity vector a_1..a_r with a_j = #{i : lambda_i = j}.
    pub fn multiplicities(&self, r: usize) -> Vec<usize> {
        let mut a = vec![0usize; r + 1];
        for &p in &self.parts {
            if (p as usize) <= r {
                a[p as usize] += 1;
            }
        }
        a[1..].to_vec()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The Hilbert polynomial attached to a partition:
/// sum_i C(m + lambda_i - i, lambda_i - 1); degree is lambda_1 - 1.
pub fn partition_polynomial(lambda: &IntegerPartition) -> NumericalPolynomial {
    let mut acc = NumericalPolynomial::zero();
    for (idx, &part) in lambda.parts().iter().enumerate() {
        let i = (idx + 1) as i64;
        let k = (part - 1) as usize;
        acc = acc.add(&binomial_polynomial(part as i64 - i, k));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_from;
    use crate::monomial::monomials_of_degree;

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    fn skew_lines() -> MonomialIdeal {
        MonomialIdeal::new(
            4,
            vec![
                mono(&[1, 0, 1, 0]),
                mono(&[1, 0, 0, 1]),
                mono(&[0, 1, 1, 0]),
                mono(&[0, 1, 0, 1]),
            ],
        )
    }

    /// Brute-force standard monomial count (test oracle).
    fn count_standard(mi: &MonomialIdeal, nu: i64) -> BigInt {
        if nu < 0 {
            return BigInt::zero();
        }
        let mut c = 0u64;
        for m in monomials_of_degree(mi.nvars(), nu as u32) {
            if !mi.contains(&m) {
                c += 1;
            }
        }
        BigInt::from(c)
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(1, 2), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(3, 0), BigInt::one());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn skew_lines_hilbert_function() {
        let mi = skew_lines();
        assert_eq!(hilbert_function_monomial(&mi, 2), BigInt::from(6));
        for nu in 0..=8 {
            assert_eq!(
                hilbert_function_monomial(&mi, nu),
                count_standard(&mi, nu),
                "mismatch at degree {nu}"
            );
        }
        assert_eq!(hilbert_function_monomial(&mi, -1), BigInt::zero());
    }

    #[test]
    fn whole_ring_hilbert_function() {
        let zero = MonomialIdeal::zero(4);
        for nu in 0..6 {
            assert_eq!(hilbert_function_monomial(&zero, nu), binomial(nu + 3, 3));
        }
    }

    #[test]
    fn irrelevant_ideal_hilbert_function() {
        let m = MonomialIdeal::new(3, (0..3).map(|i| Monomial::var(3, i)).collect());
        assert_eq!(hilbert_function_monomial(&m, 0), BigInt::one());
        for nu in 1..5 {
            assert_eq!(hilbert_function_monomial(&m, nu), BigInt::zero());
        }
    }

    #[test]
    fn pivot_recursion_matches_bruteforce() {
        let mi = MonomialIdeal::new(
            3,
            vec![mono(&[2, 1, 0]), mono(&[0, 3, 0]), mono(&[1, 0, 2])],
        );
        for nu in 0..=8 {
            assert_eq!(hilbert_function_monomial(&mi, nu), count_standard(&mi, nu));
        }
    }

    #[test]
    fn twisted_cubic_hilbert_polynomial() {
        let i = ideal_from("field Q\nring x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n");
        let hp = hilbert_polynomial(&i);
        assert_eq!(hp.display("m"), "3*m+1");
        for nu in 1..8 {
            assert_eq!(hp.eval(nu), hilbert_function(&i, nu));
        }
    }

    #[test]
    fn skew_lines_hilbert_polynomial() {
        let hp = hilbert_polynomial_monomial(&skew_lines());
        assert_eq!(hp.display("m"), "2*m+2");
    }

    #[test]
    fn hypersurface_hilbert_polynomial() {
        // degree-d hypersurface in P^3: C(m+3,3) - C(m-d+3,3)
        for d in 1..4i64 {
            let mi = MonomialIdeal::new(4, vec![mono(&[d as u32, 0, 0, 0])]);
            let hp = hilbert_polynomial_monomial(&mi);
            for m in d..10 {
                let expect = binomial(m + 3, 3) - binomial(m - d + 3, 3);
                assert_eq!(hp.eval(m), expect);
            }
        }
    }

    #[test]
    fn macaulay_consistency_across_orders() {
        let i = ideal_from("field Q\nring x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n");
        let w = crate::monomial::WeightVector::new(vec![8, 4, 2, 1]).unwrap();
        for o in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::weight(w),
        ] {
            let init = i.initial_ideal(&o);
            for nu in 0..=6 {
                assert_eq!(
                    hilbert_function_monomial(&init, nu),
                    hilbert_function(&i, nu),
                    "order {o:?} degree {nu}"
                );
            }
        }
    }

    #[test]
    fn partition_polynomials() {
        let l = IntegerPartition::new(vec![2, 2, 2, 1]).unwrap();
        assert_eq!(partition_polynomial(&l).display("m"), "3*m+1");
        let single = IntegerPartition::new(vec![1]).unwrap();
        assert_eq!(partition_polynomial(&single).display("m"), "1");
        let l21 = IntegerPartition::new(vec![2, 1]).unwrap();
        assert_eq!(partition_polynomial(&l21).display("m"), "m+2");
    }

    #[test]
    fn partition_polynomial_degrees() {
        fn partitions(total: u32, max: u32) -> Vec<Vec<u32>> {
            if total == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in (1..=max.min(total)).rev() {
                for mut rest in partitions(total - first, first) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }
        for total in 1..=6 {
            for parts in partitions(total, total) {
                let l = IntegerPartition::new(parts.clone()).unwrap();
                let p = partition_polynomial(&l);
                assert_eq!(
                    p.degree(),
                    Some((parts[0] - 1) as usize),
                    "partition {parts:?}"
                );
            }
        }
    }

    #[test]
    fn partition_validation() {
        assert!(IntegerPartition::new(vec![]).is_err());
        assert!(IntegerPartition::new(vec![2, 3]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn numerical_polynomial_integrality() {
        let l = IntegerPartition::new(vec![3, 1]).unwrap();
        let p = partition_polynomial(&l);
        let d = p.degree().unwrap() as i64;
        for m in -d - 2..=d + 2 {
            let _ = p.eval(m);
        }
        let bad = NumericalPolynomial::from_monomial_coeffs(vec![
            BigRational::new(BigInt::one(), BigInt::from(3)),
            BigRational::one(),
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn fit_window_recovers_polynomials() {
        let l = IntegerPartition::new(vec![2, 2, 1]).unwrap();
        let p = partition_polynomial(&l);
        let values: Vec<BigInt> = (-3..=5).map(|m| p.eval(m)).collect();
        let fitted = NumericalPolynomial::fit_window(-3, &values, 4).unwrap();
        assert_eq!(fitted, p);
        let mut bad = values.clone();
        bad[4] += 1;
        assert!(NumericalPolynomial::fit_window(-3, &bad, 4).is_none());
    }

    #[test]
    fn compose_affine_flip() {
        let l = IntegerPartition::new(vec![3, 2]).unwrap();
        let p = partition_polynomial(&l);
        let flipped = p.compose_affine(-1, -4);
        for m in -6..6 {
            assert_eq!(flipped.eval(m), p.eval(-m - 4));
        }
        assert_eq!(flipped.compose_affine(-1, -4), p);
    }

    #[test]
    fn krull_dimensions() {
        assert_eq!(krull_dim_monomial(&skew_lines()), 2);
        assert_eq!(krull_dim_monomial(&MonomialIdeal::zero(4)), 4);
        let point = MonomialIdeal::new(
            4,
            vec![mono(&[1, 0, 0, 0]), mono(&[0, 1, 0, 0]), mono(&[0, 0, 1, 0])],
        );
        assert_eq!(krull_dim_monomial(&point), 1);
    }
}

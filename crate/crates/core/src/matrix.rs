//! Exact dense matrices and normal forms: reduced row echelon form over a
//! field, Smith normal form over k[t], and Howell form over k[t]/(t^q).
//!
//! Conventions: matrices act on column vectors by left multiplication, so the
//! "right kernel" of an a x b matrix lives in the source B^b. Howell-form
//! routines work row-wise and transpose as needed.

use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::UniPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, v: T) -> Matrix<T> {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

// ---------------------------------------------------------------------------
// rref over a field
// ---------------------------------------------------------------------------

pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub mat: Matrix<Scalar>,
}

/// Reduced row echelon form by Gauss-Jordan elimination; exact arithmetic.
pub fn rref(m: &Matrix<Scalar>) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(pi) = (r..a.rows).find(|&i| !a.at(i, j).is_zero()) else {
            continue;
        };
        a.swap_rows(r, pi);
        let inv = a.at(r, j).inv();
        for jj in j..a.cols {
            let v = a.at(r, jj).mul(&inv);
            a.set(r, jj, v);
        }
        for i in 0..a.rows {
            if i != r && !a.at(i, j).is_zero() {
                let c = a.at(i, j).clone();
                for jj in j..a.cols {
                    let v = a.at(i, jj).sub(&c.mul(a.at(r, jj)));
                    a.set(i, jj, v);
                }
            }
        }
        pivots.push(j);
        r += 1;
    }
    Rref {
        rank: r,
        pivots,
        mat: a,
    }
}

pub fn rank(m: &Matrix<Scalar>) -> usize {
    rref(m).rank
}

/// Basis of the right kernel {v : Mv = 0}, one column vector per non-pivot
/// column.
pub fn right_kernel(m: &Matrix<Scalar>) -> Vec<Vec<Scalar>> {
    let field = if m.rows * m.cols > 0 {
        m.at(0, 0).field()
    } else {
        FieldSpec::Q
    };
    let r = rref(m);
    let pivot_set: std::collections::BTreeSet<usize> = r.pivots.iter().cloned().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); m.cols];
        v[free] = field.one();
        for (pr, &pc) in r.pivots.iter().enumerate() {
            v[pc] = r.mat.at(pr, free).neg();
        }
        basis.push(v);
    }
    basis
}

// ---------------------------------------------------------------------------
// Smith normal form over k[t]
// ---------------------------------------------------------------------------

pub struct Smith {
    /// Monic nonzero invariant factors d_1 | d_2 | ... | d_s.
    pub factors: Vec<UniPoly>,
    /// Left transform U with U * M * V = D, if requested.
    pub left: Option<Matrix<UniPoly>>,
    /// Right transform V, if requested.
    pub right: Option<Matrix<UniPoly>>,
}

/// Smith normal form over the PID k[t] by gcd-driven row/column elimination
/// with minimal-degree pivot selection. Transforms are tracked only when
/// `with_transforms` is set.
pub fn smith_normal_form(m: &Matrix<UniPoly>, with_transforms: bool) -> Smith {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let field = entry_field(m);
    let mut left = with_transforms.then(|| identity_poly(rows, field));
    let mut right = with_transforms.then(|| identity_poly(cols, field));

    let n = rows.min(cols);
    for k in 0..n {
        'pivot: loop {
            // minimal-degree nonzero pivot in the trailing submatrix
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..rows {
                for j in k..cols {
                    if let Some(d) = a.at(i, j).degree() {
                        if best.map_or(true, |(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                break 'pivot;
            };
            a.swap_rows(k, pi);
            if let Some(u) = &mut left {
                u.swap_rows(k, pi);
            }
            a.swap_cols(k, pj);
            if let Some(v) = &mut right {
                v.swap_cols(k, pj);
            }

            let mut dirty = false;
            // clear column k below the pivot by Euclidean steps
            for i in k + 1..rows {
                if !a.at(i, k).is_zero() {
                    let q = a.at(i, k).divrem(a.at(k, k)).0;
                    row_sub(&mut a, i, k, &q, k);
                    if let Some(u) = &mut left {
                        row_sub(u, i, k, &q, 0);
                    }
                    if !a.at(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear row k right of the pivot
            for j in k + 1..cols {
                if !a.at(k, j).is_zero() {
                    let q = a.at(k, j).divrem(a.at(k, k)).0;
                    col_sub(&mut a, j, k, &q, k);
                    if let Some(v) = &mut right {
                        col_sub(v, j, k, &q, 0);
                    }
                    if !a.at(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // divisibility repair: pivot must divide the rest of the block
            let mut bad = None;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !a.at(k, k).divides(a.at(i, j)) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            if let Some(i) = bad {
                // fold row i into row k and re-eliminate
                for j in 0..cols {
                    let v = a.at(k, j).add(a.at(i, j));
                    a.set(k, j, v);
                }
                if let Some(u) = &mut left {
                    for j in 0..rows {
                        let v = u.at(k, j).add(u.at(i, j));
                        u.set(k, j, v);
                    }
                }
                continue 'pivot;
            }
            break 'pivot;
        }
    }

    // normalize diagonal monic
    let mut factors = Vec::new();
    for k in 0..n {
        let d = a.at(k, k).clone();
        if d.is_zero() {
            continue;
        }
        let lc = d.leading_coeff().unwrap().clone();
        if !lc.is_one() {
            let inv = lc.inv();
            for j in 0..cols {
                let v = a.at(k, j).scale(&inv);
                a.set(k, j, v);
            }
            if let Some(u) = &mut left {
                for j in 0..rows {
                    let v = u.at(k, j).scale(&inv);
                    u.set(k, j, v);
                }
            }
        }
        factors.push(a.at(k, k).clone());
    }
    Smith {
        factors,
        left,
        right,
    }
}

fn entry_field(m: &Matrix<UniPoly>) -> FieldSpec {
    if m.rows * m.cols > 0 {
        m.at(0, 0).field()
    } else {
        FieldSpec::Q
    }
}

fn identity_poly(n: usize, field: FieldSpec) -> Matrix<UniPoly> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            UniPoly::one(field)
        } else {
            UniPoly::zero(field)
        }
    })
}

/// row_i -= q * row_k, starting at column `from`.
fn row_sub(a: &mut Matrix<UniPoly>, i: usize, k: usize, q: &UniPoly, from: usize) {
    for j in from..a.cols {
        let v = a.at(i, j).sub(&q.mul(a.at(k, j)));
        a.set(i, j, v);
    }
}

/// col_j -= q * col_k, starting at row `from`.
fn col_sub(a: &mut Matrix<UniPoly>, j: usize, k: usize, q: &UniPoly, from: usize) {
    for i in from..a.rows {
        let v = a.at(i, j).sub(&q.mul(a.at(i, k)));
        a.set(i, j, v);
    }
}

/// Evaluate a k[t]-matrix at t = alpha.
pub fn eval_matrix(m: &Matrix<UniPoly>, alpha: &Scalar) -> Matrix<Scalar> {
    Matrix::from_fn(m.rows, m.cols, |i, j| m.at(i, j).eval(alpha))
}

/// Solve M x = b over k[t] via Smith transforms. Returns None when the system
/// has no solution over k[t].
pub fn solve_poly(m: &Matrix<UniPoly>, b: &[UniPoly]) -> Option<Vec<UniPoly>> {
    assert_eq!(m.rows, b.len());
    let field = entry_field(m);
    let s = smith_normal_form(m, true);
    let u = s.left.as_ref().unwrap();
    let v = s.right.as_ref().unwrap();
    // D y = U b
    let ub: Vec<UniPoly> = (0..m.rows)
        .map(|i| {
            (0..m.rows).fold(UniPoly::zero(field), |acc, j| {
                acc.add(&u.at(i, j).mul(&b[j]))
            })
        })
        .collect();
    let mut y = vec![UniPoly::zero(field); m.cols];
    for (i, ubi) in ub.iter().enumerate() {
        if i < s.factors.len() {
            let (q, r) = ubi.divrem(&s.factors[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ubi.is_zero() {
            return None;
        }
    }
    // x = V y
    Some(
        (0..m.cols)
            .map(|i| {
                (0..m.cols).fold(UniPoly::zero(field), |acc, j| {
                    acc.add(&v.at(i, j).mul(&y[j]))
                })
            })
            .collect(),
    )
}

/// Basis of the right kernel of a k[t]-matrix (a free module), as column
/// vectors.
pub fn right_kernel_poly(m: &Matrix<UniPoly>) -> Vec<Vec<UniPoly>> {
    let s = smith_normal_form(m, true);
    let v = s.right.as_ref().unwrap();
    (s.factors.len()..m.cols).map(|j| v.col(j)).collect()
}

// ---------------------------------------------------------------------------
// Howell form over k[t]/(t^q)
// ---------------------------------------------------------------------------

/// Entries of matrices over k[t]/(t^q) are UniPoly values of degree < q; `q`
/// rides along as an explicit parameter. The valuation of zero is q.
fn val_q(f: &UniPoly, q: usize) -> usize {
    f.valuation().map_or(q, |v| v.min(q))
}

fn red_q(f: &UniPoly, q: usize) -> UniPoly {
    f.truncated(q)
}

/// Canonical Howell form of the row module of `m` over k[t]/(t^q).
///
/// Rows are sorted by pivot column; every pivot entry is a pure power t^v;
/// entries above a pivot have degree < v. The row module is preserved, the
/// form is idempotent under re-reduction, and for every element x of the row
/// module whose first nonzero coordinate is at column j, x lies in the span
/// of the rows with pivot column >= j.
pub fn howell_form(m: &Matrix<UniPoly>, q: usize) -> Matrix<UniPoly> {
    assert!(q >= 1);
    let field = entry_field(m);
    let mut work: Vec<Vec<UniPoly>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| red_q(m.at(i, j), q)).collect())
        .filter(|r: &Vec<UniPoly>| r.iter().any(|e| !e.is_zero()))
        .collect();
    let mut result: Vec<Vec<UniPoly>> = Vec::new();

    for j in 0..m.cols {
        // rows in `work` have zero entries in all columns < j
        let Some(best) = (0..work.len())
            .filter(|&i| !work[i][j].is_zero())
            .min_by_key(|&i| val_q(&work[i][j], q))
        else {
            continue;
        };
        let mut pivot = work.swap_remove(best);
        let v = val_q(&pivot[j], q);
        // normalize pivot entry to exactly t^v
        let unit = pivot[j].div_exact(&UniPoly::t_power(field, v));
        let uinv = unit.inv_mod_tq(q - v);
        for e in pivot.iter_mut() {
            *e = red_q(&e.mul(&uinv), q);
        }
        // eliminate column j from the remaining rows
        for row in work.iter_mut() {
            if !row[j].is_zero() {
                let w = val_q(&row[j], q);
                debug_assert!(w >= v);
                let c = row[j].div_exact(&UniPoly::t_power(field, v));
                for (e, p) in row.iter_mut().zip(pivot.iter()) {
                    *e = red_q(&e.sub(&c.mul(p)), q);
                }
            }
        }
        // annihilator multiple keeps the Howell spanning property
        if v > 0 {
            let ann: Vec<UniPoly> = pivot
                .iter()
                .map(|e| red_q(&e.shift(q - v), q))
                .collect();
            if ann.iter().any(|e| !e.is_zero()) {
                work.push(ann);
            }
        }
        result.push(pivot);
        work.retain(|r| r.iter().any(|e| !e.is_zero()));
    }

    // reduce entries above each pivot
    let pivcol: Vec<usize> = result
        .iter()
        .map(|r| r.iter().position(|e| !e.is_zero()).unwrap())
        .collect();
    for k in (0..result.len()).rev() {
        let j = pivcol[k];
        let v = val_q(&result[k][j], q);
        for i in 0..k {
            let e = &result[i][j];
            if e.is_zero() {
                continue;
            }
            // subtract a multiple of row k to reduce entry (i, j) modulo t^v
            let (c, _r) = e.divrem(&UniPoly::t_power(field, v));
            if c.is_zero() {
                continue;
            }
            let rowk = result[k].clone();
            for (ei, pk) in result[i].iter_mut().zip(rowk.iter()) {
                *ei = red_q(&ei.sub(&c.mul(pk)), q);
            }
        }
    }

    Matrix::from_fn(result.len(), m.cols, |i, j| result[i][j].clone())
}

/// Right-kernel spanning set over k[t]/(t^q): columns v with M v = 0 mod t^q.
pub fn right_kernel_mod_tq(m: &Matrix<UniPoly>, q: usize) -> Vec<Vec<UniPoly>> {
    // row kernel of the transpose, via the Howell form of [M^T | I]
    let mt = m.transpose();
    let field = entry_field(m);
    let aug = Matrix::from_fn(mt.rows, mt.cols + mt.rows, |i, j| {
        if j < mt.cols {
            mt.at(i, j).clone()
        } else if j == mt.cols + i {
            UniPoly::one(field)
        } else {
            UniPoly::zero(field)
        }
    });
    let h = howell_form(&aug, q);
    let mut gens = Vec::new();
    for i in 0..h.rows {
        if (0..mt.cols).all(|j| h.at(i, j).is_zero()) {
            let v: Vec<UniPoly> = (mt.cols..aug.cols).map(|j| h.at(i, j).clone()).collect();
            if v.iter().any(|e| !e.is_zero()) {
                gens.push(v);
            }
        }
    }
    gens
}

/// Solve K y = c over k[t]/(t^q), where the columns of K span a module
/// containing c. Returns None if no solution exists.
pub fn solve_mod_tq(k: &Matrix<UniPoly>, c: &[UniPoly], q: usize) -> Option<Vec<UniPoly>> {
    let field = entry_field(k);
    // work row-wise: find y (row) with y * K^T = c
    let kt = k.transpose();
    let aug = Matrix::from_fn(kt.rows, kt.cols + kt.rows, |i, j| {
        if j < kt.cols {
            kt.at(i, j).clone()
        } else if j == kt.cols + i {
            UniPoly::one(field)
        } else {
            UniPoly::zero(field)
        }
    });
    let h = howell_form(&aug, q);
    // reduce c against the left block, carrying the transform in the right block
    let mut r: Vec<UniPoly> = c.iter().map(|e| red_q(e, q)).collect();
    let mut y = vec![UniPoly::zero(field); kt.rows];
    for i in 0..h.rows {
        let Some(j) = (0..kt.cols).position(|c2| !h.at(i, c2).is_zero()) else {
            continue; // row supported only in the transform block
        };
        if r[j].is_zero() {
            continue;
        }
        let v = val_q(h.at(i, j), q);
        if val_q(&r[j], q) < v {
            return None;
        }
        let coef = r[j].div_exact(&UniPoly::t_power(field, v));
        for (e, hk) in r.iter_mut().zip((0..kt.cols).map(|c2| h.at(i, c2))) {
            *e = red_q(&e.sub(&coef.mul(hk)), q);
        }
        for (yi, hk) in y
            .iter_mut()
            .zip((kt.cols..aug.cols).map(|c2| h.at(i, c2)))
        {
            *yi = red_q(&yi.add(&coef.mul(hk)), q);
        }
    }
    if r.iter().all(|e| e.is_zero()) {
        Some(y)
    } else {
        None
    }
}

/// Diagonalize a matrix over k[t]/(t^q) by two-sided elimination; returns the
/// multiset of pivot valuations {a : a diagonal entry is t^a (unit)}, with
/// zero entries contributing nothing. Row/column operations preserve the
/// cokernel, so coker = B^{rows - #returned} + sum of B/(t^a).
pub fn diagonal_valuations_mod_tq(m: &Matrix<UniPoly>, q: usize) -> Vec<usize> {
    let field = entry_field(m);
    let mut a: Vec<Vec<UniPoly>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| red_q(m.at(i, j), q)).collect())
        .collect();
    let (rows, cols) = (m.rows, m.cols);
    let mut vals = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if !a[i][j].is_zero() {
                    let v = val_q(&a[i][j], q);
                    if best.map_or(true, |(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        // normalize pivot to t^v
        let unit = a[k][k].div_exact(&UniPoly::t_power(field, v));
        let uinv = unit.inv_mod_tq(q - v);
        for j in k..cols {
            a[k][j] = red_q(&a[k][j].mul(&uinv), q);
        }
        // clear column and row (all other entries have valuation >= v)
        for i in k + 1..rows {
            if !a[i][k].is_zero() {
                let c = a[i][k].div_exact(&UniPoly::t_power(field, v));
                for j in k..cols {
                    let sub = c.mul(&a[k][j]);
                    a[i][j] = red_q(&a[i][j].sub(&sub), q);
                }
            }
        }
        for j in k + 1..cols {
            if !a[k][j].is_zero() {
                let c = a[k][j].div_exact(&UniPoly::t_power(field, v));
                for i in k..rows {
                    let sub = c.mul(&a[i][k]);
                    a[i][j] = red_q(&a[i][j].sub(&sub), q);
                }
            }
        }
        vals.push(v);
        k += 1;
    }
    vals
}

/// Structure of coker(M : B^cols -> B^rows) over B = k[t]/(t^q), as the list
/// of exponents a_i with coker = sum of B/(t^{a_i}); a_i = q denotes a free
/// summand. Zero exponents (unit pivots) are dropped.
pub fn cokernel_exponents_mod_tq(m: &Matrix<UniPoly>, q: usize) -> Vec<usize> {
    let vals = diagonal_valuations_mod_tq(m, q);
    let used = vals.len();
    let mut out: Vec<usize> = vals.into_iter().filter(|&v| v > 0).collect();
    out.extend(std::iter::repeat(q).take(m.rows - used));
    out.sort_unstable();
    out
}

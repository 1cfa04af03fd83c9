//! Graded free resolutions by Schreyer's method, minimization, Betti tables,
//! Castelnuovo-Mumford regularity, dualized complexes, and cohomology of
//! bounded complexes of graded free modules computed degreewise by
//! rank-nullity.
//!
//! Resolutions are built over the plain polynomial ring or over k[t][x]
//! (family rings, t last with x-degree zero); `nx` is the number of graded
//! variables in either case.

use crate::error::{Error, Result};
use crate::groebner::{divide, module_buchberger, s_poly, ModOrder, ModPoly, Ideal};
use crate::matrix::{rank, Matrix};
use crate::monomial::{monomials_of_degree, Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use crate::unipoly::UniPoly;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// A graded free resolution F_0 <- F_1 <- ... <- F_L with degree-0
/// differentials. `twists[i]` lists the generator degrees of F_i; `diffs[i]`
/// is the matrix of F_{i+1} -> F_i acting on column vectors.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub nvars: usize,
    pub nx: usize,
    pub field: FieldSpec,
    /// True when F_0 = S resolves a cyclic quotient S/I.
    pub cyclic: bool,
    pub twists: Vec<Vec<i64>>,
    pub diffs: Vec<Matrix<Poly>>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.twists.len() - 1
    }

    pub fn rank_at(&self, i: usize) -> usize {
        self.twists.get(i).map_or(0, |t| t.len())
    }

    /// Composition of consecutive differentials must vanish exactly.
    pub fn verify_complex(&self) -> Result<()> {
        for i in 0..self.diffs.len().saturating_sub(1) {
            let prod = poly_mat_mul(&self.diffs[i], &self.diffs[i + 1], self.nvars, self.field);
            for r in 0..prod.rows {
                for c in 0..prod.cols {
                    if !prod.at(r, c).is_zero() {
                        return Err(Error::Internal(format!(
                            "d_{} o d_{} != 0 at ({r}, {c})",
                            i + 1,
                            i + 2
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The dualized complex Hom(F_., S): twists negated, maps transposed.
    pub fn dual(&self) -> FreeComplex {
        let terms: Vec<Vec<i64>> = self
            .twists
            .iter()
            .map(|t| t.iter().map(|d| -d).collect())
            .collect();
        let maps: Vec<Matrix<Poly>> = self.diffs.iter().map(|m| m.transpose()).collect();
        FreeComplex {
            nvars: self.nvars,
            nx: self.nx,
            field: self.field,
            terms,
            maps,
        }
    }
}

/// A bounded cochain complex K^0 -> K^1 -> ... of graded free modules;
/// `terms[i]` lists generator degrees, `maps[i]` sends K^i to K^{i+1}.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    pub nvars: usize,
    pub nx: usize,
    pub field: FieldSpec,
    pub terms: Vec<Vec<i64>>,
    pub maps: Vec<Matrix<Poly>>,
}

impl FreeComplex {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn verify_complex(&self) -> Result<()> {
        for i in 0..self.maps.len().saturating_sub(1) {
            let prod = poly_mat_mul(&self.maps[i + 1], &self.maps[i], self.nvars, self.field);
            for r in 0..prod.rows {
                for c in 0..prod.cols {
                    if !prod.at(r, c).is_zero() {
                        return Err(Error::Internal(format!(
                            "complex maps do not compose to zero at step {i}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn poly_mat_mul(
    a: &Matrix<Poly>,
    b: &Matrix<Poly>,
    nvars: usize,
    field: FieldSpec,
) -> Matrix<Poly> {
    assert_eq!(a.cols, b.rows);
    Matrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = Poly::zero(nvars, field);
        for k in 0..a.cols {
            acc = acc.add(&a.at(i, k).mul(b.at(k, j)));
        }
        acc
    })
}

// ---------------------------------------------------------------------------
// Schreyer resolution
// ---------------------------------------------------------------------------

/// Graded free resolution of S/I from the reduced Groebner basis under the
/// given order, by iterated Schreyer syzygies with per-level autoreduction.
pub fn free_resolution_with_order(ideal: &Ideal, order: &MonomialOrder) -> Result<FreeResolution> {
    let n = ideal.nvars();
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let gb = ideal.reduced_groebner(order);
    let ord0 = ModOrder::Top(order.clone());
    let level1: Vec<ModPoly> = gb
        .iter()
        .map(|g| ModPoly::from_poly(g, 0, &ord0))
        .collect();
    build_resolution(n, n, ideal.field(), vec![0], level1, ord0, true)
}

/// Resolution of S/I under grevlex.
pub fn free_resolution(ideal: &Ideal) -> Result<FreeResolution> {
    free_resolution_with_order(ideal, &MonomialOrder::GrevLex)
}

/// Resolution of an x-homogeneous quotient of k[t][x] (t is the last of
/// `nvars` variables and carries x-degree zero).
pub fn free_resolution_family(
    nvars: usize,
    field: FieldSpec,
    gens: &[Poly],
) -> Result<FreeResolution> {
    let nx = nvars - 1;
    for g in gens {
        if !g.is_x_homogeneous(nx) {
            return Err(Error::NotHomogeneous);
        }
    }
    let order = MonomialOrder::GrevLex;
    let ord0 = ModOrder::Top(order);
    let start: Vec<ModPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ModPoly::from_poly(g, 0, &ord0))
        .collect();
    let gb = module_buchberger(start, &ord0, None);
    build_resolution(nvars, nx, field, vec![0], gb, ord0, true)
}

/// Resolution of coker(relations) for a module presented by generator
/// degrees and relation columns (each column one relation).
pub fn free_resolution_module(
    nvars: usize,
    nx: usize,
    field: FieldSpec,
    gen_degrees: Vec<i64>,
    relations: &[Vec<Poly>],
) -> Result<FreeResolution> {
    let order = MonomialOrder::GrevLex;
    let ord0 = ModOrder::Top(order);
    let mut cols = Vec::new();
    for rel in relations {
        assert_eq!(rel.len(), gen_degrees.len());
        let mut terms = Vec::new();
        for (pos, f) in rel.iter().enumerate() {
            for (m, c) in f.terms() {
                terms.push((m.clone(), pos, c.clone()));
            }
        }
        let mp = ModPoly::from_terms(terms, &ord0);
        if !mp.is_zero() {
            cols.push(mp);
        }
    }
    let gb = module_buchberger(cols, &ord0, None);
    build_resolution(nvars, nx, field, gen_degrees, gb, ord0, false)
}

/// x-degree of a module element relative to generator degrees.
fn element_degree(el: &ModPoly, nx: usize, gen_degrees: &[i64]) -> Result<i64> {
    let mut deg: Option<i64> = None;
    for (m, p, _) in &el.terms {
        let d = m.degree_upto(nx) as i64 + gen_degrees[*p];
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            Some(_) => {
                return Err(Error::NotHomogeneous);
            }
        }
    }
    deg.ok_or_else(|| Error::Internal("degree of zero element".into()))
}

fn build_resolution(
    nvars: usize,
    nx: usize,
    field: FieldSpec,
    f0_degrees: Vec<i64>,
    level1: Vec<ModPoly>,
    ord0: ModOrder,
    cyclic: bool,
) -> Result<FreeResolution> {
    let mut twists: Vec<Vec<i64>> = vec![f0_degrees.clone()];
    let mut diffs: Vec<Matrix<Poly>> = Vec::new();

    if level1.is_empty() {
        return Ok(FreeResolution {
            nvars,
            nx,
            field,
            cyclic,
            twists,
            diffs,
        });
    }

    let mut basis = level1;
    let mut ord = ord0;
    let mut prev_degrees = f0_degrees;
    // Schreyer iteration; the sort below makes syzygy lead multipliers avoid
    // one more variable per level, so length <= number of variables.
    let cap = nvars + 2;
    for _level in 0..cap {
        // sort: lead position ascending, lead monomial lex-descending
        basis.sort_by(|a, b| {
            let (ma, pa, _) = a.lead().unwrap();
            let (mb, pb, _) = b.lead().unwrap();
            pa.cmp(pb).then_with(|| mb.exps().cmp(ma.exps()))
        });
        // record this level: twists and differential columns
        let degrees: Result<Vec<i64>> = basis
            .iter()
            .map(|g| element_degree(g, nx, &prev_degrees))
            .collect();
        let degrees = degrees?;
        let mat = Matrix::from_fn(prev_degrees.len(), basis.len(), |i, j| {
            basis[j].component(i, nvars, field)
        });
        twists.push(degrees.clone());
        diffs.push(mat);

        // syzygies of this level's basis through all same-position S-pairs
        let leads: Vec<(Monomial, usize)> = basis
            .iter()
            .map(|g| {
                let (m, p, _) = g.lead().unwrap();
                (m.clone(), *p)
            })
            .collect();
        let next_ord = ModOrder::Schreyer {
            leads: leads.clone(),
            prev: Box::new(ord.clone()),
        };
        let mut syzygies: Vec<ModPoly> = Vec::new();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                if leads[i].1 != leads[j].1 {
                    continue;
                }
                let lcm = leads[i].0.lcm(&leads[j].0);
                let sp = s_poly(&basis[i], &basis[j], &lcm, &ord);
                let mut quots = vec![vec![]; basis.len()];
                let rem = divide(&sp, &basis, &ord, Some(&mut quots));
                if !rem.is_zero() {
                    return Err(Error::Internal(
                        "S-pair of a Groebner basis did not reduce to zero".into(),
                    ));
                }
                let mut terms = Vec::new();
                let ci = basis[i].lead().unwrap().2.clone();
                let cj = basis[j].lead().unwrap().2.clone();
                terms.push((leads[i].0.quotient(&lcm), i, ci.inv()));
                terms.push((leads[j].0.quotient(&lcm), j, cj.inv().neg()));
                for (k, qs) in quots.into_iter().enumerate() {
                    for (m, c) in qs {
                        terms.push((m, k, c.neg()));
                    }
                }
                let tau = ModPoly::from_terms(terms, &next_ord);
                debug_assert_eq!(tau.lead().unwrap().1, i);
                syzygies.push(tau);
            }
        }
        if syzygies.is_empty() {
            let res = FreeResolution {
                nvars,
                nx,
                field,
                cyclic,
                twists,
                diffs,
            };
            res.verify_complex()?;
            return Ok(res);
        }
        // autoreduce the syzygy basis; Schreyer's theorem makes it a Groebner
        // basis of the syzygy module, so reduction keeps it one
        let reduced = crate::groebner::reduce_basis(syzygies, &next_ord);
        prev_degrees = degrees;
        basis = reduced;
        ord = next_ord;
    }
    Err(Error::Internal(
        "resolution exceeded the syzygy-theorem length bound".into(),
    ))
}

// ---------------------------------------------------------------------------
// minimization and Betti tables
// ---------------------------------------------------------------------------

/// Minimal Betti numbers beta_{i,j}. For cyclic quotients S/I the indices
/// follow the resolution of the ideal I itself: beta_{0,j} counts minimal
/// generators of I in degree j.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BettiTable {
    pub entries: BTreeMap<usize, BTreeMap<i64, usize>>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries
            .get(&i)
            .and_then(|row| row.get(&j))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Castelnuovo-Mumford regularity of the quotient S/I: the table stores
    /// the ideal resolution, so reg(S/I) = max(j - i) - 1; the zero ideal
    /// yields 0.
    pub fn regularity_quotient(&self) -> i64 {
        self.entries
            .iter()
            .flat_map(|(i, row)| row.keys().map(move |j| j - *i as i64))
            .max()
            .map_or(0, |m| m - 1)
    }

    /// Homological length of the stored table.
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().max().map_or(0, |i| i + 1)
    }

    /// Rank of the last module (Cohen-Macaulay type for CM quotients).
    pub fn last_rank(&self) -> usize {
        self.entries
            .keys()
            .max()
            .map_or(1, |i| self.entries[i].values().sum())
    }

    /// Aligned text rendering: rows are internal degrees, columns homological
    /// indices.
    pub fn display_text(&self) -> String {
        if self.entries.is_empty() {
            return "empty Betti table (zero ideal)".to_string();
        }
        let imax = *self.entries.keys().max().unwrap();
        let jmin = self
            .entries
            .values()
            .flat_map(|r| r.keys())
            .min()
            .copied()
            .unwrap();
        let jmax = self
            .entries
            .values()
            .flat_map(|r| r.keys())
            .max()
            .copied()
            .unwrap();
        let mut out = String::new();
        out.push_str("      ");
        for i in 0..=imax {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for j in jmin..=jmax {
            out.push_str(&format!("{j:>5}:"));
            for i in 0..=imax {
                let v = self.get(i, j);
                if v == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{v:>6}"));
                }
            }
            out.push('\n');
        }
        out
    }

    /// JSON value in the fixed schema {"betti": {"i": {"j": count}}}.
    pub fn to_json(&self) -> serde_json::Value {
        let mut outer = serde_json::Map::new();
        for (i, row) in &self.entries {
            let mut inner = serde_json::Map::new();
            for (j, v) in row {
                inner.insert(j.to_string(), serde_json::json!(v));
            }
            outer.insert(i.to_string(), serde_json::Value::Object(inner));
        }
        serde_json::json!({ "betti": serde_json::Value::Object(outer) })
    }
}

/// Cancel unit entries from the differentials until none remain; returns the
/// minimal resolution and its Betti table (ideal convention for cyclic
/// quotients, module convention otherwise).
pub fn minimize(res: &FreeResolution) -> (FreeResolution, BettiTable) {
    let mut twists = res.twists.clone();
    let mut diffs = res.diffs.clone();
    let nvars = res.nvars;
    let field = res.field;

    'scan: loop {
        for i in 0..diffs.len() {
            let m = &diffs[i];
            for a in 0..m.rows {
                for b in 0..m.cols {
                    let e = m.at(a, b);
                    if !e.is_zero() && e.is_constant() {
                        cancel_unit(&mut twists, &mut diffs, nvars, field, i, a, b);
                        continue 'scan;
                    }
                }
            }
        }
        break;
    }
    // drop trailing zero modules
    while twists.len() > 1 && twists.last().unwrap().is_empty() {
        twists.pop();
        diffs.pop();
    }
    let min = FreeResolution {
        nvars,
        nx: res.nx,
        field,
        cyclic: res.cyclic,
        twists,
        diffs,
    };
    let betti = betti_of_minimal(&min);
    (min, betti)
}

fn betti_of_minimal(res: &FreeResolution) -> BettiTable {
    let mut entries: BTreeMap<usize, BTreeMap<i64, usize>> = BTreeMap::new();
    let skip = if res.cyclic { 1 } else { 0 };
    for (level, tw) in res.twists.iter().enumerate().skip(skip) {
        if tw.is_empty() {
            continue;
        }
        let row = entries.entry(level - skip).or_default();
        for &j in tw {
            *row.entry(j).or_insert(0) += 1;
        }
    }
    BettiTable { entries }
}

/// Remove the summand pinned by a unit entry at (a, b) of diffs[i], with the
/// Schur-complement update on diffs[i], row-deletion on diffs[i+1] and
/// column-deletion on diffs[i-1].
fn cancel_unit(
    twists: &mut [Vec<i64>],
    diffs: &mut [Matrix<Poly>],
    nvars: usize,
    field: FieldSpec,
    i: usize,
    a: usize,
    b: usize,
) {
    let m = &diffs[i];
    let u = m.at(a, b).clone();
    let uinv_scalar = u.terms()[0].1.inv();
    let new_m = Matrix::from_fn(m.rows - 1, m.cols - 1, |r, c| {
        let rr = if r < a { r } else { r + 1 };
        let cc = if c < b { c } else { c + 1 };
        let correction = m
            .at(rr, b)
            .mul(m.at(a, cc))
            .scale(&uinv_scalar);
        m.at(rr, cc).sub(&correction)
    });
    diffs[i] = new_m;
    twists[i].remove(a);
    twists[i + 1].remove(b);
    if i + 1 < diffs.len() {
        let p = &diffs[i + 1];
        diffs[i + 1] = Matrix::from_fn(p.rows - 1, p.cols, |r, c| {
            let rr = if r < b { r } else { r + 1 };
            p.at(rr, c).clone()
        });
    }
    if i > 0 {
        let p = &diffs[i - 1];
        diffs[i - 1] = Matrix::from_fn(p.rows, p.cols - 1, |r, c| {
            let cc = if c < a { c } else { c + 1 };
            p.at(r, cc).clone()
        });
    }
    let _ = (nvars, field);
}

// ---------------------------------------------------------------------------
// graded strands
// ---------------------------------------------------------------------------

/// Basis of the degree-nu strand of a free module with the given generator
/// degrees: pairs (generator index, x-monomial).
pub fn strand_basis(nx: usize, gen_degrees: &[i64], nu: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (j, &d) in gen_degrees.iter().enumerate() {
        let need = nu - d;
        if need < 0 {
            continue;
        }
        for m in monomials_of_degree(nx, need as u32) {
            out.push((j, m));
        }
    }
    out
}

pub fn strand_dim(nx: usize, gen_degrees: &[i64], nu: i64) -> usize {
    gen_degrees
        .iter()
        .map(|&d| {
            let need = nu - d;
            if need < 0 {
                0
            } else {
                monomial_count(nx, need as u32)
            }
        })
        .sum()
}

fn monomial_count(nx: usize, d: u32) -> usize {
    // C(d + nx - 1, nx - 1)
    if nx == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut acc: u128 = 1;
    for j in 1..=(nx as u128 - 1) {
        acc = acc * (d as u128 + j) / j;
    }
    acc as usize
}

/// Scalar matrix of a graded map between free modules at degree nu, over a
/// plain ring (nx == nvars). Rows index the target strand basis, columns the
/// source strand basis.
pub fn strand_matrix(
    map: &Matrix<Poly>,
    target_degrees: &[i64],
    source_degrees: &[i64],
    nu: i64,
    nx: usize,
    field: FieldSpec,
) -> Matrix<Scalar> {
    let tgt = strand_basis(nx, target_degrees, nu);
    let src = strand_basis(nx, source_degrees, nu);
    let index: BTreeMap<(usize, Vec<u32>), usize> = tgt
        .iter()
        .enumerate()
        .map(|(row, (j, m))| ((*j, m.exps().to_vec()), row))
        .collect();
    let mut out = Matrix::filled(tgt.len(), src.len(), field.zero());
    for (col, (k, beta)) in src.iter().enumerate() {
        for j in 0..map.rows {
            let f = map.at(j, *k);
            for (m, c) in f.terms() {
                let prod = m.mul(beta);
                let row = index[&(j, prod.exps().to_vec())];
                let cur = out.at(row, col).add(c);
                out.set(row, col, cur);
            }
        }
    }
    out
}

/// k[t]-matrix of a graded map between free k[t][x]-modules at x-degree nu.
/// The strand bases consist of x-monomials; entries collect t-coefficients.
pub fn strand_matrix_family(
    map: &Matrix<Poly>,
    target_degrees: &[i64],
    source_degrees: &[i64],
    nu: i64,
    nx: usize,
    field: FieldSpec,
) -> Matrix<UniPoly> {
    let tgt = strand_basis(nx, target_degrees, nu);
    let src = strand_basis(nx, source_degrees, nu);
    let index: BTreeMap<(usize, Vec<u32>), usize> = tgt
        .iter()
        .enumerate()
        .map(|(row, (j, m))| ((*j, m.exps().to_vec()), row))
        .collect();
    let mut out = Matrix::filled(tgt.len(), src.len(), UniPoly::zero(field));
    for (col, (k, beta)) in src.iter().enumerate() {
        for j in 0..map.rows {
            let f = map.at(j, *k);
            for (xm, u) in f.t_coefficients() {
                let prod = xm.mul(beta);
                let row = index[&(j, prod.exps().to_vec())];
                let cur = out.at(row, col).add(&u);
                out.set(row, col, cur);
            }
        }
    }
    out
}

/// Dimensions of H^i(K)_nu for every i, by rank-nullity on the degree-nu
/// strand: dim ker(d^i) - rank(d^{i-1}).
pub fn complex_cohomology_dims(k: &FreeComplex, nu: i64) -> Vec<usize> {
    let p = k.terms.len();
    let dims: Vec<usize> = k
        .terms
        .iter()
        .map(|t| strand_dim(k.nx, t, nu))
        .collect();
    let ranks: Vec<usize> = (0..k.maps.len())
        .map(|i| {
            let m = strand_matrix(&k.maps[i], &k.terms[i + 1], &k.terms[i], nu, k.nx, k.field);
            rank(&m)
        })
        .collect();
    (0..p)
        .map(|i| {
            let out_rank = if i < ranks.len() { ranks[i] } else { 0 };
            let in_rank = if i > 0 { ranks[i - 1] } else { 0 };
            dims[i] - out_rank - in_rank
        })
        .collect()
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_from;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn twisted_cubic() -> Ideal {
        ideal_from("field Q\nring x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n")
    }

    fn shape(res: &FreeResolution) -> Vec<Vec<i64>> {
        res.twists.clone()
    }

    #[test]
    fn twisted_cubic_minimal_shape() {
        let res = free_resolution(&twisted_cubic()).unwrap();
        res.verify_complex().unwrap();
        let (min, betti) = minimize(&res);
        min.verify_complex().unwrap();
        assert_eq!(shape(&min), vec![vec![0], vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(betti.get(0, 2), 3);
        assert_eq!(betti.get(1, 3), 2);
        assert_eq!(
            betti.entries.values().flat_map(|r| r.values()).sum::<usize>(),
            5
        );
    }

    #[test]
    fn koszul_two_variables() {
        let i = ideal_from("field Q\nring x0..x1\nx0\nx1\n");
        let res = free_resolution(&i).unwrap();
        let (min, betti) = minimize(&res);
        assert_eq!(shape(&min), vec![vec![0], vec![1, 1], vec![2]]);
        assert_eq!(betti.regularity_quotient(), 0);
    }

    #[test]
    fn complete_intersection_quadrics() {
        let i = ideal_from("field Q\nring x0..x3\nx0^2\nx1^2\n");
        let res = free_resolution(&i).unwrap();
        let (min, betti) = minimize(&res);
        assert_eq!(shape(&min), vec![vec![0], vec![2, 2], vec![4]]);
        assert_eq!(betti.regularity_quotient(), 2);
        assert_eq!(betti.last_rank(), 1);
    }

    #[test]
    fn twisted_cubic_regularity() {
        let res = free_resolution(&twisted_cubic()).unwrap();
        let (_, betti) = minimize(&res);
        assert_eq!(betti.regularity_quotient(), 1);
    }

    #[test]
    fn zero_ideal_resolution() {
        let i = Ideal::zero(3, q());
        let res = free_resolution(&i).unwrap();
        assert_eq!(res.length(), 0);
        let (_, betti) = minimize(&res);
        assert!(betti.is_empty());
        assert_eq!(betti.regularity_quotient(), 0);
    }

    #[test]
    fn padded_trivial_summand_cancels() {
        // take the Koszul resolution of (x0, x1) and pad F_1 with a unit
        // S <- S(-1)^2 + S <- ... identity block
        let i = ideal_from("field Q\nring x0..x1\nx0\nx1\n");
        let res = free_resolution(&i).unwrap();
        let (min, _) = minimize(&res);
        let mut twists = min.twists.clone();
        let mut diffs = min.diffs.clone();
        twists[0].push(5);
        twists[1].push(5);
        let d0 = &diffs[0];
        let padded = Matrix::from_fn(d0.rows + 1, d0.cols + 1, |r, c| {
            if r < d0.rows && c < d0.cols {
                d0.at(r, c).clone()
            } else if r == d0.rows && c == d0.cols {
                Poly::constant(2, q().one())
            } else {
                Poly::zero(2, q())
            }
        });
        diffs[0] = padded;
        let d1 = &diffs[1];
        diffs[1] = Matrix::from_fn(d1.rows + 1, d1.cols, |r, c| {
            if r < d1.rows {
                d1.at(r, c).clone()
            } else {
                Poly::zero(2, q())
            }
        });
        let padded_res = FreeResolution {
            nvars: 2,
            nx: 2,
            field: q(),
            cyclic: true,
            twists,
            diffs,
        };
        padded_res.verify_complex().unwrap();
        let (re_min, betti) = minimize(&padded_res);
        assert_eq!(shape(&re_min), vec![vec![0], vec![1, 1], vec![2]]);
        assert_eq!(betti.get(0, 1), 2);
        assert_eq!(betti.get(1, 2), 1);
    }

    #[test]
    fn betti_invariant_under_generator_order() {
        let a = twisted_cubic();
        let mut gens = a.gens().to_vec();
        gens.reverse();
        let extra = gens[0].mul(&Poly::var(4, q(), 0)); // redundant generator
        gens.push(extra);
        let b = Ideal::new(4, q(), gens);
        let (_, ba) = minimize(&free_resolution(&a).unwrap());
        let (_, bb) = minimize(&free_resolution(&b).unwrap());
        assert_eq!(ba, bb);
        // and under a different monomial order
        let (_, bl) = minimize(&free_resolution_with_order(&a, &MonomialOrder::Lex).unwrap());
        assert_eq!(ba, bl);
    }

    #[test]
    fn degreewise_exactness() {
        // strand of the resolution at nu <= reg + 2 is exact except at 0
        for src in [
            "field Q\nring x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n",
            "field Q\nring x0..x3\nx0*x2\nx0*x3\nx1*x2\nx1*x3\n",
            "field Q\nring x0..x3\nx0^2\nx1^2\n",
        ] {
            let i = ideal_from(src);
            let res = free_resolution(&i).unwrap();
            let (min, betti) = minimize(&res);
            let reg = betti.regularity_quotient();
            for nu in 0..=reg + 2 {
                // complex ... -> F_1 -> F_0 (-> S/I): homology at position l>0
                // is ker(d_l) / im(d_{l+1})
                let dims: Vec<usize> = min
                    .twists
                    .iter()
                    .map(|t| strand_dim(min.nx, t, nu))
                    .collect();
                let ranks: Vec<usize> = (0..min.diffs.len())
                    .map(|l| {
                        let m = strand_matrix(
                            &min.diffs[l],
                            &min.twists[l],
                            &min.twists[l + 1],
                            nu,
                            min.nx,
                            min.field,
                        );
                        rank(&m)
                    })
                    .collect();
                for l in 1..min.twists.len() {
                    let out_rank = ranks[l - 1]; // d_l
                    let in_rank = if l < ranks.len() { ranks[l] } else { 0 };
                    let homology = dims[l] - out_rank - in_rank;
                    assert_eq!(homology, 0, "homology at level {l}, degree {nu}");
                }
            }
        }
    }

    #[test]
    fn alternating_rank_sum_matches_hilbert_numerator() {
        let i = twisted_cubic();
        let (min, betti) = minimize(&free_resolution(&i).unwrap());
        // numerator(S/I) = sum_i (-1)^i sum_j beta^{S/I}_{i,j} T^j, with
        // beta^{S/I}_{0,0} = 1 and beta^{S/I}_{i,j} = betti(i-1, j)
        let num = crate::hilbert::hilbert_numerator(&i.initial_ideal(&MonomialOrder::GrevLex));
        let mut expect: Vec<i64> = vec![0; 8];
        expect[0] = 1;
        for (i_idx, row) in &betti.entries {
            for (j, v) in row {
                let sign = if (i_idx + 1) % 2 == 0 { 1 } else { -1 };
                expect[*j as usize] += sign * *v as i64;
            }
        }
        for (j, c) in num.iter().enumerate() {
            assert_eq!(c, &num::BigInt::from(expect[j]), "numerator degree {j}");
        }
        for (j, e) in expect.iter().enumerate() {
            if j >= num.len() {
                assert_eq!(*e, 0);
            }
        }
        let _ = min;
    }

    #[test]
    fn dual_koszul_self_dual() {
        let i = ideal_from("field Q\nring x0..x1\nx0\nx1\n");
        let (min, _) = minimize(&free_resolution(&i).unwrap());
        let dual = min.dual();
        dual.verify_complex().unwrap();
        // Koszul on 2 variables: dual twists are the originals shifted by -2
        assert_eq!(dual.terms, vec![vec![0], vec![-1, -1], vec![-2]]);
        // cohomology of the dual: Ext^2(S/m, S) = k in degree -2, others 0
        for nu in -4..2 {
            let dims = complex_cohomology_dims(&dual, nu);
            assert_eq!(dims[0], 0);
            assert_eq!(dims[1], 0);
            assert_eq!(dims[2], usize::from(nu == -2));
        }
    }

    #[test]
    fn twisted_cubic_dual_strands() {
        let (min, _) = minimize(&free_resolution(&twisted_cubic()).unwrap());
        let dual = min.dual();
        // codimension 2: only Ext^2 is nonzero; dims recorded as regression
        // constants computed by rank-nullity
        let expected_ext2 = |mu: i64| -> usize {
            // dual to h^1 of the cubic curve: 3*(-mu-4) ... check below against
            // the established values 2 at mu = -3, 5 at mu = -2, 8 at mu = -1
            match mu {
                -4 => 0,
                -3 => 2,
                -2 => 5,
                -1 => 8,
                _ => 0,
            }
        };
        for mu in [-4i64, -3, -2] {
            let dims = complex_cohomology_dims(&dual, mu);
            assert_eq!(dims[0], 0, "Ext^0 at {mu}");
            assert_eq!(dims[1], 0, "Ext^1 at {mu}");
            assert_eq!(dims[2], expected_ext2(mu), "Ext^2 at {mu}");
        }
    }

    #[test]
    fn dual_of_zero_ideal() {
        let res = free_resolution(&Ideal::zero(3, q())).unwrap();
        let dual = res.dual();
        assert_eq!(dual.terms, vec![vec![0]]);
        for nu in 0..3 {
            let dims = complex_cohomology_dims(&dual, nu);
            assert_eq!(dims[0], strand_dim(3, &[0], nu));
        }
    }

    #[test]
    fn cohomology_relation_two_routes() {
        // h_{C^i} = dim K^i - rank(d^{i-1}) must equal the telescoping sum
        // over j >= i of (-1)^{j-i} (h_{H^j} + dim K^{j+1})
        let (min, _) = minimize(&free_resolution(&twisted_cubic()).unwrap());
        let dual = min.dual();
        let p = dual.terms.len();
        for nu in -6..3 {
            let h = complex_cohomology_dims(&dual, nu);
            let dims: Vec<i64> = dual
                .terms
                .iter()
                .map(|t| strand_dim(dual.nx, t, nu) as i64)
                .collect();
            let ranks: Vec<i64> = (0..dual.maps.len())
                .map(|i| {
                    strand_matrix(&dual.maps[i], &dual.terms[i + 1], &dual.terms[i], nu, dual.nx, dual.field)
                })
                .map(|m| rank(&m) as i64)
                .collect();
            for i in 0..p {
                let direct = dims[i] - if i > 0 { ranks[i - 1] } else { 0 };
                let mut telescoped = 0i64;
                for j in i..p {
                    let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                    let next_dim = if j + 1 < p { dims[j + 1] } else { 0 };
                    telescoped += sign * (h[j] as i64 + next_dim);
                }
                assert_eq!(direct, telescoped, "strand {nu}, position {i}");
            }
        }
    }

    #[test]
    fn exact_strand_has_no_cohomology() {
        // Koszul complex of (x0, x1) dualized and shifted is exact away from
        // the ends; check a middle strand of the resolution itself
        let i = ideal_from("field Q\nring x0..x1\nx0\nx1\n");
        let (min, _) = minimize(&free_resolution(&i).unwrap());
        // resolution strand at nu = 3 away from position 0:
        let dims: Vec<usize> = min
            .twists
            .iter()
            .map(|t| strand_dim(2, t, 3))
            .collect();
        let r0 = rank(&strand_matrix(&min.diffs[0], &min.twists[0], &min.twists[1], 3, 2, q()));
        let r1 = rank(&strand_matrix(&min.diffs[1], &min.twists[1], &min.twists[2], 3, 2, q()));
        assert_eq!(dims[1] - r0 - r1, 0);
        assert_eq!(dims[2] - r1, 0);
    }

    #[test]
    fn module_presentation_resolution() {
        // coker of [x0 x1; x1 x0] over k[x0, x1] with generator degrees [0, 0]
        let x0 = Poly::var(2, q(), 0);
        let x1 = Poly::var(2, q(), 1);
        let relations = vec![vec![x0.clone(), x1.clone()], vec![x1.clone(), x0.clone()]];
        let res = free_resolution_module(2, 2, q(), vec![0, 0], &relations).unwrap();
        res.verify_complex().unwrap();
        let (min, betti) = minimize(&res);
        assert_eq!(min.twists[0], vec![0, 0]);
        assert!(betti.get(0, 0) == 2);
    }
}

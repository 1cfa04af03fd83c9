//! Buchberger engine over free modules and the ideal-theoretic toolkit:
//! reduced Groebner bases, normal forms, initial ideals, elimination,
//! intersection, colon ideals, and saturation by the irrelevant ideal.
//!
//! The engine works with elements of a free module over the polynomial ring
//! (ideals are the rank-one case) so the resolution code can reuse division
//! and S-pair machinery with Schreyer's induced orders.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::scalar::{FieldSpec, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

// ---------------------------------------------------------------------------
// module elements and orders
// ---------------------------------------------------------------------------

/// A term of a free-module element: coefficient * monomial * e_pos.
pub(crate) type MTerm = (Monomial, usize, Scalar);

/// Orders on a free module over the ring order.
#[derive(Clone, Debug)]
pub(crate) enum ModOrder {
    /// Position-over-term: e_0 > e_1 > ..., ring order inside a position.
    Top(MonomialOrder),
    /// Schreyer order induced by the leads of the previous level's basis:
    /// compare m1 * lead(i) against m2 * lead(j) in the previous order and
    /// break ties toward the smaller position.
    Schreyer {
        leads: Vec<(Monomial, usize)>,
        prev: Box<ModOrder>,
    },
}

impl ModOrder {
    pub(crate) fn cmp(&self, a: (&Monomial, usize), b: (&Monomial, usize)) -> Ordering {
        match self {
            ModOrder::Top(o) => b.1.cmp(&a.1).then_with(|| o.cmp_unchecked(a.0, b.0)),
            ModOrder::Schreyer { leads, prev } => {
                let (la, pa) = &leads[a.1];
                let (lb, pb) = &leads[b.1];
                prev.cmp((&a.0.mul(la), *pa), (&b.0.mul(lb), *pb))
                    .then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}

/// Free-module element with terms sorted descending under the ambient order.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct ModPoly {
    pub terms: Vec<MTerm>,
}

impl ModPoly {
    pub fn zero() -> ModPoly {
        ModPoly { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    pub fn from_terms(terms: Vec<MTerm>, ord: &ModOrder) -> ModPoly {
        let mut map: BTreeMap<(usize, Vec<u32>), Scalar> = BTreeMap::new();
        for (m, p, c) in terms {
            let key = (p, m.exps().to_vec());
            match map.get_mut(&key) {
                Some(e) => *e = e.add(&c),
                None => {
                    map.insert(key, c);
                }
            }
        }
        let mut v: Vec<MTerm> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((p, e), c)| (Monomial::from_exps(e), p, c))
            .collect();
        v.sort_by(|x, y| ord.cmp((&y.0, y.1), (&x.0, x.1)));
        ModPoly { terms: v }
    }

    /// Multiply by a single ring term; sortedness is preserved because the
    /// order is multiplicative.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, p, cc)| (mm.mul(m), *p, cc.mul(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, p, cc)| (m.clone(), *p, cc.mul(c)))
                .collect(),
        }
    }

    /// Merge-subtract of two elements sorted under `ord`.
    pub fn sub(&self, other: &ModPoly, ord: &ModOrder) -> ModPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            if i == self.terms.len() {
                let (m, p, c) = &other.terms[j];
                out.push((m.clone(), *p, c.neg()));
                j += 1;
            } else if j == other.terms.len() {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                let a = &self.terms[i];
                let b = &other.terms[j];
                match ord.cmp((&a.0, a.1), (&b.0, b.1)) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push((b.0.clone(), b.1, b.2.neg()));
                        j += 1;
                    }
                    Ordering::Equal => {
                        let c = a.2.sub(&b.2);
                        if !c.is_zero() {
                            out.push((a.0.clone(), a.1, c));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        ModPoly { terms: out }
    }

    pub fn monic(&self) -> ModPoly {
        match self.lead() {
            None => self.clone(),
            Some((_, _, c)) => self.scale(&c.inv()),
        }
    }

    /// Some(pos) when every term sits in the same position.
    pub fn single_position(&self) -> Option<usize> {
        let p = self.terms.first()?.1;
        self.terms.iter().all(|t| t.1 == p).then_some(p)
    }

    pub fn from_poly(f: &Poly, pos: usize, ord: &ModOrder) -> ModPoly {
        ModPoly::from_terms(
            f.terms()
                .iter()
                .map(|(m, c)| (m.clone(), pos, c.clone()))
                .collect(),
            ord,
        )
    }

    pub fn to_poly(&self, nvars: usize, field: FieldSpec) -> Poly {
        debug_assert!(self.terms.iter().all(|t| t.1 == 0));
        Poly::from_terms(
            nvars,
            field,
            self.terms.iter().map(|(m, _, c)| (m.clone(), c.clone())),
        )
    }

    /// Component in position `pos` as a ring polynomial.
    pub fn component(&self, pos: usize, nvars: usize, field: FieldSpec) -> Poly {
        Poly::from_terms(
            nvars,
            field,
            self.terms
                .iter()
                .filter(|t| t.1 == pos)
                .map(|(m, _, c)| (m.clone(), c.clone())),
        )
    }
}

// ---------------------------------------------------------------------------
// division and Buchberger
// ---------------------------------------------------------------------------

/// Full division: every term of the remainder is irreducible against the
/// basis leads. Records per-basis quotients when `quots` is provided, so that
/// f = sum quots[k] * basis[k] + remainder.
pub(crate) fn divide(
    f: &ModPoly,
    basis: &[ModPoly],
    ord: &ModOrder,
    mut quots: Option<&mut Vec<Vec<(Monomial, Scalar)>>>,
) -> ModPoly {
    let mut rem: Vec<MTerm> = Vec::new();
    let mut work = f.clone();
    'outer: while let Some((m, p, c)) = work.lead().cloned() {
        for (k, g) in basis.iter().enumerate() {
            let Some((gm, gp, gc)) = g.lead() else {
                continue;
            };
            if *gp == p && gm.divides(&m) {
                let mult = gm.quotient(&m);
                let coef = c.div(gc);
                work = work.sub(&g.mul_term(&coef, &mult), ord);
                if let Some(qs) = quots.as_deref_mut() {
                    qs[k].push((mult, coef));
                }
                continue 'outer;
            }
        }
        rem.push((m, p, c));
        work.terms.remove(0);
    }
    ModPoly { terms: rem }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn make_pair(basis: &[ModPoly], i: usize, j: usize) -> Pair {
    let (mi, _, _) = basis[i].lead().unwrap();
    let (mj, _, _) = basis[j].lead().unwrap();
    Pair {
        i,
        j,
        lcm: mi.lcm(mj),
    }
}

/// Gebauer-Moller pair update on appending basis element `s`.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[ModPoly], s: usize) {
    let (ms, ps, _) = basis[s].lead().unwrap().clone();
    let mut cand: Vec<Pair> = (0..s)
        .filter(|&i| basis[i].lead().map(|t| t.1) == Some(ps))
        .map(|i| make_pair(basis, i, s))
        .collect();
    // M criterion: drop candidates whose lcm is strictly divisible by
    // another candidate's lcm
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        for b in 0..cand.len() {
            if a != b
                && keep[a]
                && keep[b]
                && cand[b].lcm.divides(&cand[a].lcm)
                && cand[b].lcm != cand[a].lcm
            {
                keep[a] = false;
            }
        }
    }
    // the product criterion is only sound for ring elements: both members
    // supported in a single (equal) position
    let coprime_ok = |pr: &Pair| -> bool {
        let gi = &basis[pr.i];
        let gj = &basis[pr.j];
        gi.single_position().is_some()
            && gj.single_position().is_some()
            && gi.lead().unwrap().0.coprime(&gj.lead().unwrap().0)
    };
    // F criterion: among equal lcms keep exactly one, preferring a pair the
    // product criterion discards
    let mut cand2: Vec<Pair> = cand
        .drain(..)
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(p, _)| p)
        .collect();
    cand2.sort_by(|a, b| {
        a.lcm
            .exps()
            .cmp(b.lcm.exps())
            .then_with(|| coprime_ok(b).cmp(&coprime_ok(a)))
    });
    let mut kept: Vec<Pair> = Vec::new();
    let mut last_lcm: Option<Monomial> = None;
    for pr in cand2 {
        if last_lcm.as_ref() == Some(&pr.lcm) {
            continue;
        }
        last_lcm = Some(pr.lcm.clone());
        if !coprime_ok(&pr) {
            kept.push(pr);
        }
    }
    // B criterion on old pairs
    pairs.retain(|pr| {
        let pi = basis[pr.i].lead().unwrap().1;
        if pi != ps || !ms.divides(&pr.lcm) {
            return true;
        }
        let lcm_is = basis[pr.i].lead().unwrap().0.lcm(&ms);
        let lcm_js = basis[pr.j].lead().unwrap().0.lcm(&ms);
        lcm_is == pr.lcm || lcm_js == pr.lcm
    });
    pairs.extend(kept);
}

/// Buchberger's algorithm with Gebauer-Moller pair elimination and
/// normal-strategy selection (smallest lcm degree first). An optional degree
/// bound truncates the run; the result then covers the module only up to
/// that degree.
pub(crate) fn module_buchberger(
    gens: Vec<ModPoly>,
    ord: &ModOrder,
    degree_bound: Option<u32>,
) -> Vec<ModPoly> {
    let mut basis: Vec<ModPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let r = divide(&g, &basis, ord, None);
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        update_pairs(&mut pairs, &basis, basis.len() - 1);
    }
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .total_degree()
                    .cmp(&b.lcm.total_degree())
                    .then_with(|| a.lcm.exps().cmp(b.lcm.exps()))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)
            .unwrap();
        let pr = pairs.swap_remove(best);
        if let Some(bound) = degree_bound {
            if pr.lcm.total_degree() > bound {
                continue;
            }
        }
        let sp = s_poly(&basis[pr.i], &basis[pr.j], &pr.lcm, ord);
        let r = divide(&sp, &basis, ord, None);
        if !r.is_zero() {
            basis.push(r.monic());
            update_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }
    reduce_basis(basis, ord)
}

pub(crate) fn s_poly(g1: &ModPoly, g2: &ModPoly, lcm: &Monomial, ord: &ModOrder) -> ModPoly {
    let (m1, _, c1) = g1.lead().unwrap();
    let (m2, _, c2) = g2.lead().unwrap();
    let a = g1.mul_term(&c1.inv(), &m1.quotient(lcm));
    let b = g2.mul_term(&c2.inv(), &m2.quotient(lcm));
    a.sub(&b, ord)
}

/// Autoreduce: leads pairwise indivisible, tails fully reduced, all elements
/// monic, deterministically sorted by (position, degree, order).
pub(crate) fn reduce_basis(mut basis: Vec<ModPoly>, ord: &ModOrder) -> Vec<ModPoly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let f = basis[i].clone();
            let others: Vec<ModPoly> = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let r = divide(&f, &others, ord, None);
            if r.is_zero() {
                basis.remove(i);
                changed = true;
            } else {
                let rm = r.monic();
                if rm != f {
                    changed = true;
                }
                basis[i] = rm;
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        let (ma, pa, _) = a.lead().unwrap();
        let (mb, pb, _) = b.lead().unwrap();
        pa.cmp(pb)
            .then_with(|| ma.total_degree().cmp(&mb.total_degree()))
            .then_with(|| ord.cmp((mb, *pb), (ma, *pa)))
    });
    basis
}

// ---------------------------------------------------------------------------
// ideals
// ---------------------------------------------------------------------------

/// A polynomial ideal with cached reduced Groebner bases per monomial order.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    field: FieldSpec,
    gens: Vec<Poly>,
    cache: Mutex<BTreeMap<MonomialOrder, Arc<Vec<Poly>>>>,
    saturated: Mutex<Option<bool>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        Ideal {
            nvars: self.nvars,
            field: self.field,
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
            saturated: Mutex::new(*self.saturated.lock().unwrap()),
        }
    }
}

impl Ideal {
    pub fn new(nvars: usize, field: FieldSpec, gens: Vec<Poly>) -> Ideal {
        let gens: Vec<Poly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator in wrong ring");
            assert_eq!(g.field(), field, "generator over wrong field");
        }
        Ideal {
            nvars,
            field,
            gens,
            cache: Mutex::new(BTreeMap::new()),
            saturated: Mutex::new(None),
        }
    }

    pub fn zero(nvars: usize, field: FieldSpec) -> Ideal {
        Ideal::new(nvars, field, vec![])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whole-ring test: 1 lies in the ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.reduced_groebner(&MonomialOrder::GrevLex)
            .iter()
            .any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Groebner basis: monic leads, no lead divides another lead,
    /// tails fully reduced, sorted by (degree, order). Cached per order.
    pub fn reduced_groebner(&self, order: &MonomialOrder) -> Arc<Vec<Poly>> {
        if let Some(hit) = self.cache.lock().unwrap().get(order) {
            return hit.clone();
        }
        let ord = ModOrder::Top(order.clone());
        let gens: Vec<ModPoly> = self
            .gens
            .iter()
            .map(|g| ModPoly::from_poly(g, 0, &ord))
            .collect();
        let gb = module_buchberger(gens, &ord, None);
        let polys: Vec<Poly> = gb
            .into_iter()
            .map(|g| g.to_poly(self.nvars, self.field))
            .collect();
        let arc = Arc::new(polys);
        self.cache
            .lock()
            .unwrap()
            .insert(order.clone(), arc.clone());
        arc
    }

    /// Degree-truncated basis for family windows.
    pub fn groebner_up_to_degree(&self, order: &MonomialOrder, bound: u32) -> Vec<Poly> {
        let ord = ModOrder::Top(order.clone());
        let gens: Vec<ModPoly> = self
            .gens
            .iter()
            .map(|g| ModPoly::from_poly(g, 0, &ord))
            .collect();
        module_buchberger(gens, &ord, Some(bound))
            .into_iter()
            .map(|g| g.to_poly(self.nvars, self.field))
            .collect()
    }

    /// Remainder of f on full division by the reduced basis; linear over the
    /// field, zero iff f lies in the ideal.
    pub fn normal_form(&self, f: &Poly, order: &MonomialOrder) -> Poly {
        assert_eq!(f.nvars(), self.nvars);
        let gb = self.reduced_groebner(order);
        let ord = ModOrder::Top(order.clone());
        let basis: Vec<ModPoly> = gb.iter().map(|g| ModPoly::from_poly(g, 0, &ord)).collect();
        divide(&ModPoly::from_poly(f, 0, &ord), &basis, &ord, None)
            .to_poly(self.nvars, self.field)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f, &MonomialOrder::GrevLex).is_zero()
    }

    /// Equality as ideals, via reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars
            && self.field == other.field
            && *self.reduced_groebner(&MonomialOrder::GrevLex)
                == *other.reduced_groebner(&MonomialOrder::GrevLex)
    }

    /// Minimal monomial generators of in_>(I): the leads of the reduced basis.
    pub fn initial_ideal(&self, order: &MonomialOrder) -> MonomialIdeal {
        let gb = self.reduced_groebner(order);
        MonomialIdeal::new(
            self.nvars,
            gb.iter()
                .filter_map(|g| g.leading_term(order).map(|(m, _)| m.clone()))
                .collect(),
        )
    }

    /// Some(monomial ideal) when the reduced basis consists of single terms.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        let gb = self.reduced_groebner(&MonomialOrder::GrevLex);
        if gb.iter().all(|g| g.is_monomial_term()) {
            Some(MonomialIdeal::new(
                self.nvars,
                gb.iter().map(|g| g.terms()[0].0.clone()).collect(),
            ))
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, self.field, gens)
    }

    /// Intersection via the auxiliary-parameter trick: eliminate y from
    /// y*I + (1-y)*J.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.nvars, other.nvars);
        assert_eq!(self.field, other.field);
        let n = self.nvars;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ideal::zero(n, self.field);
        }
        let y = Poly::var(n + 1, self.field, n);
        let one = Poly::constant(n + 1, self.field.one());
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.extend_vars(1).mul(&y));
        }
        for g in &other.gens {
            gens.push(g.extend_vars(1).mul(&one.sub(&y)));
        }
        let aux = Ideal::new(n + 1, self.field, gens);
        let elim = aux.eliminate(&[n]);
        Ideal::new(
            n,
            self.field,
            elim.gens().iter().map(|g| g.shrink_vars(n)).collect(),
        )
    }

    /// Colon ideal (I : f) = (I cap (f)) / f.
    pub fn colon_poly(&self, f: &Poly) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        let pf = Ideal::new(self.nvars, self.field, vec![f.clone()]);
        let inter = self.intersect(&pf);
        let gens: Result<Vec<Poly>> = inter.gens().iter().map(|g| g.div_exact(f)).collect();
        Ok(Ideal::new(self.nvars, self.field, gens?))
    }

    /// I cap k[variables not listed], via a block elimination order after
    /// permuting the eliminated variables to the front. The result lives in
    /// the same ring but its generators avoid the listed variables.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal {
        let n = self.nvars;
        let elim: Vec<usize> = {
            let mut v = vars.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let rest: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
        let perm: Vec<usize> = elim.iter().chain(rest.iter()).cloned().collect();
        let mut inv = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let moved = Ideal::new(
            n,
            self.field,
            self.gens.iter().map(|g| g.permute_vars(&perm)).collect(),
        );
        let order = MonomialOrder::Block { split: elim.len() };
        let gb = moved.reduced_groebner(&order);
        let kept: Vec<Poly> = gb
            .iter()
            .filter(|g| (0..elim.len()).all(|i| !g.uses_var(i)))
            .map(|g| g.permute_vars(&inv))
            .collect();
        Ideal::new(n, self.field, kept)
    }

    /// Saturation by the irrelevant maximal ideal (x_0..x_{n-1}): the
    /// intersection over i of the stabilized colon by x_i. Monomial ideals
    /// take a direct combinatorial route.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let flag = { *self.saturated.lock().unwrap() };
        if flag == Some(true) {
            return Ok(self.clone());
        }
        if let Some(mi) = self.as_monomial_ideal() {
            let sat = mi.saturate_irrelevant().to_ideal(self.field);
            *sat.saturated.lock().unwrap() = Some(true);
            if sat.equals(self) {
                *self.saturated.lock().unwrap() = Some(true);
            } else {
                *self.saturated.lock().unwrap() = Some(false);
            }
            return Ok(sat);
        }
        let mut parts: Vec<Ideal> = Vec::new();
        for i in 0..self.nvars {
            let xi = Poly::var(self.nvars, self.field, i);
            let mut cur = self.clone();
            loop {
                let next = cur.colon_poly(&xi)?;
                if next.equals(&cur) {
                    break;
                }
                cur = next;
            }
            parts.push(cur);
        }
        let mut acc = parts.pop().unwrap();
        for p in parts {
            acc = acc.intersect(&p);
        }
        *acc.saturated.lock().unwrap() = Some(true);
        if acc.equals(self) {
            *self.saturated.lock().unwrap() = Some(true);
        } else {
            *self.saturated.lock().unwrap() = Some(false);
        }
        Ok(acc)
    }

    /// Cached saturation flag (yes / no / unknown).
    pub fn saturated_flag(&self) -> Option<bool> {
        *self.saturated.lock().unwrap()
    }
}

// ---------------------------------------------------------------------------
// monomial ideals
// ---------------------------------------------------------------------------

/// A monomial ideal held by its minimal generators (no generator divides
/// another), sorted for determinism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut minimal: Vec<Monomial> = Vec::new();
        let mut sorted = gens;
        sorted.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| b.exps().cmp(a.exps()))
        });
        for g in sorted {
            assert_eq!(g.nvars(), nvars);
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal {
            nvars,
            gens: minimal,
        }
    }

    pub fn zero(nvars: usize) -> MonomialIdeal {
        MonomialIdeal {
            nvars,
            gens: vec![],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True iff every minimal generator is squarefree; vacuously true for (0).
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.nvars, other.nvars);
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, gens)
    }

    /// (I : x_i^infinity): strip all x_i powers from each generator.
    fn saturate_var(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens
                .iter()
                .map(|g| {
                    let mut e = g.exps().to_vec();
                    e[i] = 0;
                    Monomial::from_exps(e)
                })
                .collect(),
        )
    }

    /// Saturation by (x_0..x_{n-1}).
    pub fn saturate_irrelevant(&self) -> MonomialIdeal {
        let mut acc: Option<MonomialIdeal> = None;
        for i in 0..self.nvars {
            let s = self.saturate_var(i);
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s),
            });
        }
        acc.unwrap_or_else(|| self.clone())
    }

    pub fn to_ideal(&self, field: FieldSpec) -> Ideal {
        Ideal::new(
            self.nvars,
            field,
            self.gens
                .iter()
                .map(|m| Poly::monomial(self.nvars, field.one(), m.clone()))
                .collect(),
        )
    }
}

#[cfg(test)]
pub(crate) fn ideal_from(text: &str) -> Ideal {
    let f = crate::parse::parse_input(text).unwrap();
    let n = if f.family { f.nx + 1 } else { f.nx };
    Ideal::new(n, f.field, f.gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_input;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn twisted_cubic() -> Ideal {
        ideal_from("field Q\nring x0..x3\nx0*x2 - x1^2\nx0*x3 - x1*x2\nx1*x3 - x2^2\n")
    }

    /// Independent check that a set is a reduced Groebner basis: S-polynomials
    /// reduce to zero under naive division, leads are monic and pairwise
    /// indivisible, tails irreducible.
    fn assert_reduced_gb(gens: &[Poly], order: &MonomialOrder) {
        let ord = ModOrder::Top(order.clone());
        let basis: Vec<ModPoly> = gens
            .iter()
            .map(|g| ModPoly::from_poly(g, 0, &ord))
            .collect();
        for (i, gi) in basis.iter().enumerate() {
            let (mi, _, ci) = gi.lead().unwrap();
            assert!(ci.is_one(), "lead not monic");
            for (j, gj) in basis.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (mj, _, _) = gj.lead().unwrap();
                assert!(!mj.divides(mi), "lead divides another lead");
                let lcm = mi.lcm(mj);
                let sp = s_poly(gi, gj, &lcm, &ord);
                assert!(
                    divide(&sp, &basis, &ord, None).is_zero(),
                    "S-polynomial does not reduce to zero"
                );
            }
            for (m, _, _) in gi.terms.iter().skip(1) {
                for g in &basis {
                    assert!(!g.lead().unwrap().0.divides(m), "tail term reducible");
                }
            }
        }
    }

    #[test]
    fn twisted_cubic_lex_is_its_own_gb() {
        let i = twisted_cubic();
        let gb = i.reduced_groebner(&MonomialOrder::Lex);
        assert_eq!(gb.len(), 3);
        assert_reduced_gb(&gb, &MonomialOrder::Lex);
        let printed: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        assert!(printed.contains(&"x0*x2 - x1^2".to_string()));
        assert!(printed.contains(&"x0*x3 - x1*x2".to_string()));
        assert!(printed.contains(&"x1*x3 - x2^2".to_string()));
    }

    #[test]
    fn linear_span_reduction() {
        let i = ideal_from("field Q\nring x0..x1\nx0\nx0 - x1\n");
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let gb = i.reduced_groebner(&o);
            let printed: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
            assert_eq!(printed, vec!["x0", "x1"]);
        }
    }

    #[test]
    fn zero_ideal_gb_empty() {
        let i = Ideal::zero(3, q());
        assert!(i.reduced_groebner(&MonomialOrder::GrevLex).is_empty());
    }

    #[test]
    fn normal_forms_twisted_cubic() {
        let i = twisted_cubic();
        let lex = MonomialOrder::Lex;
        let f = parse_input("field Q\nring x0..x3\nx0*x2\n").unwrap().gens[0].clone();
        assert_eq!(i.normal_form(&f, &lex).to_string(), "x1^2");
        for g in i.gens() {
            assert!(i.normal_form(g, &lex).is_zero());
        }
        let x1sq = parse_input("field Q\nring x0..x3\nx1^2\n").unwrap().gens[0].clone();
        assert_eq!(i.normal_form(&x1sq, &lex), x1sq);
    }

    #[test]
    fn initial_ideals_of_twisted_cubic() {
        let i = twisted_cubic();
        let lex_in = i.initial_ideal(&MonomialOrder::Lex);
        let lex_gens: Vec<String> = lex_in.gens().iter().map(|m| m.to_string()).collect();
        assert_eq!(lex_gens, vec!["x0*x2", "x0*x3", "x1*x3"]);
        assert!(lex_in.is_squarefree());

        let gr_in = i.initial_ideal(&MonomialOrder::GrevLex);
        let gr_gens: Vec<String> = gr_in.gens().iter().map(|m| m.to_string()).collect();
        assert_eq!(gr_gens, vec!["x1^2", "x1*x2", "x2^2"]);
        assert!(!gr_in.is_squarefree());
        assert_reduced_gb(
            &i.reduced_groebner(&MonomialOrder::GrevLex),
            &MonomialOrder::GrevLex,
        );
    }

    #[test]
    fn initial_ideal_of_monomial_ideal_is_itself() {
        let i = ideal_from("field Q\nring x0..x3\nx0*x2\nx1^3\n");
        let init = i.initial_ideal(&MonomialOrder::Lex);
        let gens: Vec<String> = init.gens().iter().map(|m| m.to_string()).collect();
        assert_eq!(gens, vec!["x0*x2", "x1^3"]);
    }

    #[test]
    fn initial_ideal_presentation_independent() {
        let a = twisted_cubic();
        let mut gens = a.gens().to_vec();
        let extra = gens[0].mul(&gens[1]).add(&gens[2]);
        gens.push(extra);
        gens.swap(0, 2);
        let b = Ideal::new(4, q(), gens);
        for o in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            assert_eq!(a.initial_ideal(&o), b.initial_ideal(&o));
        }
    }

    #[test]
    fn skew_lines_intersection() {
        let a = ideal_from("field Q\nring x0..x3\nx0\nx1\n");
        let b = ideal_from("field Q\nring x0..x3\nx2\nx3\n");
        let inter = a.intersect(&b);
        let gb = inter.reduced_groebner(&MonomialOrder::GrevLex);
        let mut printed: Vec<String> = gb.iter().map(|g| g.to_string()).collect();
        printed.sort();
        assert_eq!(printed, vec!["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
    }

    #[test]
    fn colon_examples() {
        let i = ideal_from("field Q\nring x0..x1\nx0^2\n");
        let x0 = Poly::var(2, q(), 0);
        let c = i.colon_poly(&x0).unwrap();
        let printed: Vec<String> = c
            .reduced_groebner(&MonomialOrder::GrevLex)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(printed, vec!["x0"]);
        assert!(matches!(
            i.colon_poly(&Poly::zero(2, q())),
            Err(Error::ColonByZero)
        ));
    }

    #[test]
    fn eliminate_t_from_family_line() {
        let f = parse_input("field Q\nring x0..x1\nt*x0 - x1\n").unwrap();
        let i = Ideal::new(3, q(), f.gens);
        let e = i.eliminate(&[2]);
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn saturation_strips_primary_component() {
        let i = ideal_from("field Q\nring x0..x3\nx0^2\nx0*x1\nx0*x2\nx0*x3\n");
        let s = i.saturate_irrelevant().unwrap();
        let printed: Vec<String> = s
            .reduced_groebner(&MonomialOrder::GrevLex)
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(printed, vec!["x0"]);
        let s2 = s.saturate_irrelevant().unwrap();
        assert!(s2.equals(&s));
        for g in i.gens() {
            assert!(s.contains(g));
        }
    }

    #[test]
    fn saturation_nonmonomial_path() {
        // (x0, x1)^2 cap m^3 saturates back to (x0, x1)^2; disguise the
        // generators so the general (non-monomial) route runs
        let base = ideal_from("field Q\nring x0..x2\nx0^2\nx0*x1\nx1^2\n");
        let m = ideal_from("field Q\nring x0..x2\nx0\nx1\nx2\n");
        let mut cubes = Vec::new();
        for a in m.gens() {
            for b in m.gens() {
                for c in m.gens() {
                    cubes.push(a.mul(b).mul(c));
                }
            }
        }
        let m3 = Ideal::new(3, q(), cubes);
        let cut = base.intersect(&m3);
        let mut gens = cut.gens().to_vec();
        let extra = gens[0].add(&gens[1]);
        gens[0] = extra;
        let cut2 = Ideal::new(3, q(), gens);
        assert!(cut2.equals(&cut));
        let sat = cut2.saturate_irrelevant().unwrap();
        assert!(sat.equals(&base));
    }

    #[test]
    fn saturated_input_unchanged() {
        let i = twisted_cubic();
        let s = i.saturate_irrelevant().unwrap();
        assert!(s.equals(&i));
    }

    #[test]
    fn saturation_rejects_inhomogeneous() {
        let i = ideal_from("field Q\nring x0..x1\nx0^2 - x1\n");
        assert!(matches!(
            i.saturate_irrelevant(),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn squarefree_predicate() {
        let a = MonomialIdeal::new(
            4,
            vec![
                Monomial::from_exps(vec![1, 0, 1, 0]),
                Monomial::from_exps(vec![1, 0, 0, 1]),
                Monomial::from_exps(vec![0, 1, 0, 1]),
            ],
        );
        assert!(a.is_squarefree());
        let b = MonomialIdeal::new(
            4,
            vec![
                Monomial::from_exps(vec![0, 2, 0, 0]),
                Monomial::from_exps(vec![0, 1, 1, 0]),
                Monomial::from_exps(vec![0, 0, 2, 0]),
            ],
        );
        assert!(!b.is_squarefree());
        assert!(MonomialIdeal::zero(4).is_squarefree());
    }

    #[test]
    fn membership_cross_check() {
        let i = twisted_cubic();
        let f = i.gens()[0]
            .mul(&Poly::var(4, q(), 3))
            .add(&i.gens()[2].mul(&i.gens()[1]));
        assert!(i.contains(&f));
        let g = Poly::var(4, q(), 0);
        assert!(!i.contains(&g));
    }

    #[test]
    fn monomial_ideal_minimalization() {
        let mi = MonomialIdeal::new(
            2,
            vec![
                Monomial::from_exps(vec![1, 0]),
                Monomial::from_exps(vec![1, 1]),
                Monomial::from_exps(vec![0, 2]),
            ],
        );
        assert_eq!(mi.gens().len(), 2);
    }
}

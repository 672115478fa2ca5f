//! Homogeneous Buchberger engine for submodules of graded free modules.
//!
//! Vectors may carry a tag block after the main components. Tag terms are
//! smaller than every main term, so the engine computes a Gröbner basis of the
//! main projections while the tags record how each element was obtained.
//! Reducing S-pairs whose main part vanishes produces syzygies.

use super::module::{FreeModule, FreeModuleElement};
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct Key {
    main: u8,
    deg: i64,
    mono: u128,
    comp_rev: u32,
}

#[derive(Clone, Debug)]
pub(crate) struct Term {
    key: Key,
    pub mono: Monomial,
    pub comp: u32,
    pub coef: Scalar,
}

/// Sparse vector, terms in strictly descending key order.
#[derive(Clone, Debug, Default)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

impl SVec {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }
}

/// Layout of a (main ⊕ tag) free module.
#[derive(Clone, Debug)]
pub(crate) struct Space {
    pub nvars: usize,
    pub shifts: Vec<i64>,
    pub nmain: usize,
}

impl Space {
    pub fn new(nvars: usize, main: &[i64], tags: &[i64]) -> Self {
        let mut shifts = main.to_vec();
        shifts.extend_from_slice(tags);
        Space {
            nvars,
            shifts,
            nmain: main.len(),
        }
    }

    #[inline]
    fn key(&self, mono: &Monomial, comp: u32) -> Key {
        Key {
            main: u8::from((comp as usize) < self.nmain),
            deg: mono.degree() as i64 + self.shifts[comp as usize],
            mono: mono.grevlex_key(),
            comp_rev: u32::MAX - comp,
        }
    }

    #[inline]
    pub fn is_main(&self, comp: u32) -> bool {
        (comp as usize) < self.nmain
    }

    /// Embed `v` at component offset `offset`.
    pub fn embed(&self, v: &FreeModuleElement, offset: usize) -> SVec {
        let mut terms = Vec::new();
        for (i, c) in v.components().iter().enumerate() {
            let comp = (offset + i) as u32;
            for (m, a) in c.terms() {
                terms.push(Term {
                    key: self.key(m, comp),
                    mono: *m,
                    comp,
                    coef: a.clone(),
                });
            }
        }
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        SVec { terms }
    }

    /// Concatenate main and tag parts.
    pub fn embed_pair(&self, main: &FreeModuleElement, tag: Option<&FreeModuleElement>) -> SVec {
        let mut v = self.embed(main, 0);
        if let Some(t) = tag {
            let w = self.embed(t, self.nmain);
            v.terms.extend(w.terms);
            v.terms.sort_by(|a, b| b.key.cmp(&a.key));
        }
        v
    }

    /// Components `offset..offset+rank` as an element.
    pub fn extract(&self, v: &SVec, offset: usize, rank: usize) -> FreeModuleElement {
        let mut comps: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &v.terms {
            let c = t.comp as usize;
            if c >= offset && c < offset + rank {
                comps[c - offset].push((t.mono, t.coef.clone()));
            }
        }
        FreeModuleElement::from_components(
            self.nvars,
            comps
                .into_iter()
                .map(|ts| Polynomial::from_terms(self.nvars, ts))
                .collect(),
        )
    }

    pub fn main_part(&self, v: &SVec) -> FreeModuleElement {
        self.extract(v, 0, self.nmain)
    }

    pub fn tag_part(&self, v: &SVec) -> FreeModuleElement {
        self.extract(v, self.nmain, self.shifts.len() - self.nmain)
    }

    /// `a - c * m * b`
    fn sub_scaled(&self, a: &[Term], b: &[Term], m: &Monomial, c: &Scalar) -> Vec<Term> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let shifted: Vec<(Key, Monomial)> = b
            .iter()
            .map(|t| {
                let mono = t.mono.mul(m);
                (self.key(&mono, t.comp), mono)
            })
            .collect();
        let mut i = 0;
        let mut j = 0;
        while i < a.len() && j < b.len() {
            match a[i].key.cmp(&shifted[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        key: shifted[j].0,
                        mono: shifted[j].1,
                        comp: b[j].comp,
                        coef: -(&b[j].coef * c),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].coef - &(&b[j].coef * c);
                    if !s.is_zero() {
                        out.push(Term {
                            key: a[i].key,
                            mono: a[i].mono,
                            comp: a[i].comp,
                            coef: s,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        while j < b.len() {
            out.push(Term {
                key: shifted[j].0,
                mono: shifted[j].1,
                comp: b[j].comp,
                coef: -(&b[j].coef * c),
            });
            j += 1;
        }
        out
    }

    fn scale(&self, v: &mut SVec, c: &Scalar) {
        for t in &mut v.terms {
            t.coef = &t.coef * c;
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    deg: i64,
}

/// Incremental homogeneous Buchberger with Gebauer–Möller pair management.
pub(crate) struct Engine {
    pub space: Space,
    /// Basis elements, monic, with main-block leading terms.
    pub basis: Vec<SVec>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    inputs: BTreeMap<i64, Vec<SVec>>,
    collect_syzygies: bool,
    /// Tag-only vectors found while reducing, with their degrees.
    pub syzygies: Vec<(i64, SVec)>,
    completed_through: Option<i64>,
}

impl Engine {
    pub fn new(space: Space, collect_syzygies: bool) -> Self {
        let nmain = space.nmain;
        Engine {
            space,
            basis: Vec::new(),
            by_comp: vec![Vec::new(); nmain],
            pairs: Vec::new(),
            inputs: BTreeMap::new(),
            collect_syzygies,
            syzygies: Vec::new(),
            completed_through: None,
        }
    }

    /// Queue a homogeneous vector; it enters the basis when its degree is processed.
    pub fn push_input(&mut self, v: SVec) {
        if let Some(t) = v.lead() {
            let d = t.key.deg;
            self.inputs.entry(d).or_default().push(v);
        }
    }

    fn find_reducer(&self, t: &Term) -> Option<usize> {
        if !self.space.is_main(t.comp) {
            return None;
        }
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&g| self.basis[g].terms[0].mono.divides(&t.mono))
    }

    /// Reduce the main part completely (or just the leading terms when `full` is false).
    pub fn reduce(&self, v: SVec, full: bool) -> SVec {
        let mut done: Vec<Term> = Vec::new();
        let mut work = v.terms;
        let mut start = 0;
        while start < work.len() {
            let t = &work[start];
            if !self.space.is_main(t.comp) {
                break;
            }
            if let Some(g) = self.find_reducer(t) {
                let gt = &self.basis[g].terms;
                let q = gt[0].mono.quotient_of(&t.mono);
                let c = t.coef.clone();
                work = self.space.sub_scaled(&work[start + 1..], &gt[1..], &q, &c);
                start = 0;
            } else if full {
                done.push(work[start].clone());
                start += 1;
            } else {
                break;
            }
        }
        done.extend(work.drain(start..));
        SVec { terms: done }
    }

    fn add_basis_element(&mut self, mut h: SVec) {
        let lc = h.terms[0].coef.clone();
        if !lc.is_one() {
            self.space.scale(&mut h, &lc.inv());
        }
        let idx = self.basis.len();
        let comp = h.terms[0].comp;
        let mh = h.terms[0].mono;
        let shift = self.space.shifts[comp as usize];
        self.basis.push(h);

        // B criterion on existing pairs
        let basis = &self.basis;
        self.pairs.retain(|p| {
            if basis[p.i].terms[0].comp != comp || !mh.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].terms[0].mono.lcm(&mh);
            let lj = basis[p.j].terms[0].mono.lcm(&mh);
            li == p.lcm || lj == p.lcm
        });

        // new pairs, then M and F criteria among them
        let mut cand: Vec<Pair> = self.by_comp[comp as usize]
            .iter()
            .map(|&i| {
                let lcm = self.basis[i].terms[0].mono.lcm(&mh);
                Pair {
                    i,
                    j: idx,
                    lcm,
                    deg: lcm.degree() as i64 + shift,
                }
            })
            .collect();
        cand.sort_by(|a, b| a.lcm.grevlex_cmp(&b.lcm).then(a.i.cmp(&b.i)));
        let mut kept: Vec<Pair> = Vec::new();
        for p in cand {
            let redundant = kept
                .iter()
                .any(|q| q.lcm.divides(&p.lcm));
            if !redundant {
                kept.push(p);
            }
        }
        self.pairs.extend(kept);
        self.by_comp[comp as usize].push(idx);
    }

    fn absorb(&mut self, h: SVec, deg: i64) {
        let Some(t) = h.lead() else { return };
        if self.space.is_main(t.comp) {
            self.add_basis_element(h);
        } else if self.collect_syzygies {
            self.syzygies.push((deg, h));
        }
    }

    fn spoly(&self, p: &Pair) -> SVec {
        let gi = &self.basis[p.i].terms;
        let gj = &self.basis[p.j].terms;
        let qi = gi[0].mono.quotient_of(&p.lcm);
        let qj = gj[0].mono.quotient_of(&p.lcm);
        // qi*gi - qj*gj, leading terms cancel
        let a: Vec<Term> = gi[1..]
            .iter()
            .map(|t| {
                let mono = t.mono.mul(&qi);
                Term {
                    key: self.space.key(&mono, t.comp),
                    mono,
                    comp: t.comp,
                    coef: t.coef.clone(),
                }
            })
            .collect();
        SVec {
            terms: self.space.sub_scaled(&a, &gj[1..], &qj, &Scalar::one()),
        }
    }

    fn next_degree(&self) -> Option<i64> {
        let a = self.pairs.iter().map(|p| p.deg).min();
        let b = self.inputs.keys().next().copied();
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Process all pairs and inputs of degree at most `dmax` (everything when `None`).
    pub fn complete_through(&mut self, dmax: Option<i64>) {
        while let Some(d) = self.next_degree() {
            if let Some(m) = dmax {
                if d > m {
                    break;
                }
            }
            self.process_degree(d);
        }
        if let Some(m) = dmax {
            self.completed_through = Some(self.completed_through.map_or(m, |c| c.max(m)));
        }
    }

    fn process_degree(&mut self, d: i64) {
        loop {
            if let Some(ins) = self.inputs.remove(&d) {
                for v in ins {
                    let r = self.reduce(v, true);
                    self.absorb(r, d);
                }
                continue;
            }
            let mut batch = Vec::new();
            let mut rest = Vec::new();
            for p in self.pairs.drain(..) {
                if p.deg == d {
                    batch.push(p);
                } else {
                    rest.push(p);
                }
            }
            self.pairs = rest;
            if batch.is_empty() {
                break;
            }
            batch.sort_by(|a, b| a.lcm.grevlex_cmp(&b.lcm).then(a.j.cmp(&b.j)).then(a.i.cmp(&b.i)));
            for p in batch {
                let s = self.spoly(&p);
                let r = self.reduce(s, true);
                self.absorb(r, d);
            }
        }
    }

    /// Tail-reduce every basis element against the others (valid once complete).
    pub fn interreduce(&mut self) {
        for k in 0..self.basis.len() {
            let v = std::mem::take(&mut self.basis[k]);
            let lead = v.terms[0].clone();
            let tail = SVec {
                terms: v.terms[1..].to_vec(),
            };
            let r = self.reduce_excluding(tail, k);
            let mut terms = vec![lead];
            terms.extend(r.terms);
            self.basis[k] = SVec { terms };
        }
    }

    fn reduce_excluding(&self, v: SVec, skip: usize) -> SVec {
        let mut done: Vec<Term> = Vec::new();
        let mut work = v.terms;
        let mut start = 0;
        while start < work.len() {
            let t = &work[start];
            if !self.space.is_main(t.comp) {
                break;
            }
            let g = self.by_comp[t.comp as usize]
                .iter()
                .copied()
                .find(|&g| g != skip && self.basis[g].terms[0].mono.divides(&t.mono));
            if let Some(g) = g {
                let gt = &self.basis[g].terms;
                let q = gt[0].mono.quotient_of(&t.mono);
                let c = t.coef.clone();
                work = self.space.sub_scaled(&work[start + 1..], &gt[1..], &q, &c);
                start = 0;
            } else {
                done.push(work[start].clone());
                start += 1;
            }
        }
        done.extend(work.drain(start..));
        SVec { terms: done }
    }
}

/// A reduced Gröbner basis of a graded submodule.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ambient: FreeModule,
    engine_basis: Vec<SVec>,
    space: Space,
    by_comp: Vec<Vec<usize>>,
}

impl GroebnerBasis {
    pub(crate) fn from_engine(ambient: FreeModule, mut engine: Engine) -> Self {
        engine.interreduce();
        let by_comp = engine.by_comp.clone();
        GroebnerBasis {
            ambient,
            engine_basis: engine.basis,
            space: engine.space,
            by_comp,
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.engine_basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.engine_basis.is_empty()
    }

    pub fn elements(&self) -> Vec<FreeModuleElement> {
        self.engine_basis
            .iter()
            .map(|v| self.space.main_part(v))
            .collect()
    }

    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.engine_basis
            .iter()
            .map(|g| (g.terms[0].comp as usize, g.terms[0].mono))
            .collect()
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> FreeModuleElement {
        let sv = self.space.embed(v, 0);
        let r = self.reduce(sv);
        self.space.main_part(&r)
    }

    pub fn reduces_to_zero(&self, v: &FreeModuleElement) -> bool {
        let sv = self.space.embed(v, 0);
        self.reduce(sv).is_zero()
    }

    fn reduce(&self, v: SVec) -> SVec {
        let mut done: Vec<Term> = Vec::new();
        let mut work = v.terms;
        let mut start = 0;
        while start < work.len() {
            let t = &work[start];
            let g = self.by_comp[t.comp as usize]
                .iter()
                .copied()
                .find(|&g| self.engine_basis[g].terms[0].mono.divides(&t.mono));
            if let Some(g) = g {
                let gt = &self.engine_basis[g].terms;
                let q = gt[0].mono.quotient_of(&t.mono);
                let c = t.coef.clone();
                work = self.space.sub_scaled(&work[start + 1..], &gt[1..], &q, &c);
                start = 0;
            } else {
                done.push(work[start].clone());
                start += 1;
            }
        }
        SVec { terms: done }
    }

    /// Dimension of the degree-`d` piece of the quotient `ambient / M`.
    pub fn quotient_hilbert(&self, d: i64) -> u64 {
        let n = self.ambient.nvars();
        let mut count = 0u64;
        for (c, &s) in self.ambient.shifts().iter().enumerate() {
            let e = d - s;
            if e < 0 {
                continue;
            }
            let leads: Vec<Monomial> = self.by_comp[c]
                .iter()
                .map(|&g| self.engine_basis[g].terms[0].mono)
                .collect();
            if leads.is_empty() {
                count += super::monomial::monomial_count(n, e);
                continue;
            }
            if leads.iter().any(|m| m.is_one()) {
                continue;
            }
            count += super::hilbert::count_standard(n, e as u32, &leads);
        }
        count
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn buchberger(ambient: &FreeModule, gens: &[FreeModuleElement]) -> crate::error::Result<GroebnerBasis> {
    let space = Space::new(ambient.nvars(), ambient.shifts(), &[]);
    let mut engine = Engine::new(space, false);
    for g in gens {
        ambient.check_element(g)?;
        if g.is_zero() {
            continue;
        }
        if !ambient.is_homogeneous(g) {
            return Err(crate::error::Error::Input(format!("inhomogeneous generator {g}")));
        }
        let v = engine.space.embed(g, 0);
        engine.push_input(v);
    }
    engine.complete_through(None);
    Ok(GroebnerBasis::from_engine(ambient.clone(), engine))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            n,
            terms
                .iter()
                .map(|(e, c)| (Monomial::from_exponents(e), Scalar::from_int(*c)))
                .collect(),
        )
    }

    fn ideal(gens: Vec<Polynomial>) -> (FreeModule, Vec<FreeModuleElement>) {
        let n = gens[0].nvars();
        let f = FreeModule::uniform(n, 1, 0);
        let gens = gens
            .into_iter()
            .map(|g| FreeModuleElement::from_components(n, vec![g]))
            .collect();
        (f, gens)
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let (f, g) = ideal(vec![p(2, &[(&[2, 0], 1)]), p(2, &[(&[1, 1], 1)])]);
        let gb = buchberger(&f, &g).unwrap();
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn linear_change_gives_variables() {
        let (f, g) = ideal(vec![
            p(2, &[(&[1, 0], 1), (&[0, 1], 1)]),
            p(2, &[(&[1, 0], 1), (&[0, 1], -1)]),
        ]);
        let gb = buchberger(&f, &g).unwrap();
        let mut leads = gb.leading_terms();
        leads.sort_by_key(|(_, m)| m.grevlex_key());
        assert_eq!(leads, vec![(0, Monomial::var(1)), (0, Monomial::var(0))]);
    }

    #[test]
    fn normal_forms() {
        let (f, g) = ideal(vec![p(1, &[(&[1], 1)])]);
        let gb = buchberger(&f, &g).unwrap();
        let x2 = FreeModuleElement::from_components(1, vec![p(1, &[(&[2], 1)])]);
        assert!(gb.normal_form(&x2).is_zero());
        let (f2, g2) = ideal(vec![p(2, &[(&[1, 0], 1)])]);
        let gb2 = buchberger(&f2, &g2).unwrap();
        let y = FreeModuleElement::from_components(2, vec![p(2, &[(&[0, 1], 1)])]);
        assert_eq!(gb2.normal_form(&y), y);
    }

    #[test]
    fn twisted_cubic_style_ideal() {
        // 2x2 minors of [[x,y,z],[y,z,w]]
        let n = 4;
        let m = |a: &[u32]| Monomial::from_exponents(a);
        let q = |t: Vec<(Monomial, i64)>| {
            Polynomial::from_terms(n, t.into_iter().map(|(a, c)| (a, Scalar::from_int(c))).collect())
        };
        let g1 = q(vec![(m(&[1, 0, 1, 0]), 1), (m(&[0, 2, 0, 0]), -1)]);
        let g2 = q(vec![(m(&[1, 0, 0, 1]), 1), (m(&[0, 1, 1, 0]), -1)]);
        let g3 = q(vec![(m(&[0, 1, 0, 1]), 1), (m(&[0, 0, 2, 0]), -1)]);
        let (f, g) = ideal(vec![g1, g2, g3]);
        let gb = buchberger(&f, &g).unwrap();
        // Hilbert function of the twisted cubic is 3d+1
        for d in 0..6 {
            assert_eq!(gb.quotient_hilbert(d), 3 * d as u64 + 1);
        }
    }
}

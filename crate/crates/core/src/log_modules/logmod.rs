use super::exterior::{insert_sorted, subset_index, subsets};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::monomial::monomials_of_degree;
use crate::exact_algebra::{
    kernel_into_quotient, FreeModule, FreeModuleElement, GradedSubmodule, Matrix, Polynomial, Scalar,
};
use std::collections::HashMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum LogKind {
    Derivation,
    Form,
}

/// `Σ_c terms[c]·F_c ≡ 0 (mod modulus)`.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub terms: Vec<(usize, Scalar)>,
    pub modulus: Polynomial,
}

impl Congruence {
    pub fn holds(&self, v: &FreeModuleElement) -> bool {
        let n = v.nvars();
        let mut s = Polynomial::zero(n);
        for (c, a) in &self.terms {
            s = s.add(&v.component(*c).scale(a));
        }
        s.divisible_by(&self.modulus)
    }
}

fn pivot(normal: &[i64]) -> usize {
    normal.iter().position(|&a| a != 0).expect("nonzero normal")
}

/// Conditions `θ(α_H, x_{j_2}, …, x_{j_p}) ∈ α_H^{m(H)} S` with `j`'s avoiding a pivot of `α_H`.
pub fn derivation_conditions(a: &Arrangement, m: &Multiplicity, p: usize) -> Vec<Congruence> {
    let l = a.dim();
    let comps = subsets(l, p);
    let mut out = Vec::new();
    if p == 0 {
        return out;
    }
    for (h, hyp) in a.hyperplanes().iter().enumerate() {
        let k = m.get(h);
        if k <= 0 {
            continue;
        }
        let normal = hyp.normal();
        let pv = pivot(normal);
        let modulus = hyp.linear_form().pow(k as u32);
        let others: Vec<usize> = (0..l).filter(|&i| i != pv).collect();
        for jsel in subsets(others.len(), p - 1) {
            let j: Vec<usize> = jsel.iter().map(|&t| others[t]).collect();
            let mut terms = Vec::new();
            for i in 0..l {
                if j.contains(&i) || normal[i] == 0 {
                    continue;
                }
                let (set, pos) = insert_sorted(&j, i);
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                terms.push((subset_index(&comps, &set), Scalar::from_int(sign * normal[i])));
            }
            out.push(Congruence {
                terms,
                modulus: modulus.clone(),
            });
        }
    }
    out
}

/// Conditions `F ∧ dα_H ≡ 0 (mod α_H^{m(H)})` on the cleared numerator `F` of a `p`-form,
/// for the components of `Ω^{p+1}` that involve a pivot of `α_H`.
pub fn form_conditions(a: &Arrangement, m: &Multiplicity, p: usize) -> Vec<Congruence> {
    let l = a.dim();
    let comps = subsets(l, p);
    let mut out = Vec::new();
    for (h, hyp) in a.hyperplanes().iter().enumerate() {
        let k = m.get(h);
        if k <= 0 {
            continue;
        }
        let normal = hyp.normal();
        let pv = pivot(normal);
        let modulus = hyp.linear_form().pow(k as u32);
        for kset in subsets(l, p + 1) {
            if !kset.contains(&pv) {
                continue;
            }
            let mut terms = Vec::new();
            for (pos, &i) in kset.iter().enumerate() {
                if normal[i] == 0 {
                    continue;
                }
                let rest: Vec<usize> = kset.iter().copied().filter(|&t| t != i).collect();
                // dx_rest ∧ dx_i = ± dx_K, with one transposition per later element
                let later = kset.len() - 1 - pos;
                let sign = if later % 2 == 0 { 1 } else { -1 };
                terms.push((subset_index(&comps, &rest), Scalar::from_int(sign * normal[i])));
            }
            out.push(Congruence {
                terms,
                modulus: modulus.clone(),
            });
        }
    }
    out
}

/// Kernel of `S^rank → ⊕_k S/(modulus_k)` given by the congruences.
pub fn module_from_conditions(n: usize, rank: usize, shift: i64, conds: &[Congruence]) -> Result<GradedSubmodule> {
    let source = FreeModule::uniform(n, rank, shift);
    if conds.is_empty() {
        return Ok(GradedSubmodule::full(source));
    }
    let target = FreeModule::uniform(n, conds.len(), shift);
    let mut images = vec![FreeModuleElement::zero(n, conds.len()); rank];
    for (k, c) in conds.iter().enumerate() {
        for (comp, s) in &c.terms {
            let cur = images[*comp].component(k).clone();
            images[*comp].set_component(k, cur.add(&Polynomial::constant(n, s.clone())));
        }
    }
    let rels: Vec<FreeModuleElement> = conds
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let mut r = FreeModuleElement::zero(n, conds.len());
            r.set_component(k, c.modulus.clone());
            r
        })
        .collect();
    kernel_into_quotient(&source, &images, &target, &rels)
}

/// `D^p(A,m)` or the cleared `Q(A,m)·Ω^p(A,m)`, as a submodule of `S^{C(ℓ,p)}`.
#[derive(Clone, Debug)]
pub struct LogModule {
    pub kind: LogKind,
    pub p: usize,
    pub arrangement: Arrangement,
    pub multiplicity: Multiplicity,
    /// Stored numerators; the logarithmic objects are `numerator / denominator`.
    pub module: GradedSubmodule,
    pub denominator: Polynomial,
}

impl LogModule {
    pub fn nvars(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn rank(&self) -> usize {
        self.module.ambient().rank()
    }

    /// Degree shift of the stored numerators (`-deg` of the denominator).
    pub fn shift(&self) -> i64 {
        -(self.denominator.degree().unwrap_or(0) as i64)
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        self.module.generators()
    }

    pub fn generator_degrees(&self) -> Vec<i64> {
        let mut d = self.module.generator_degrees();
        d.sort_unstable();
        d
    }

    pub fn hilbert(&self, d: i64) -> u64 {
        self.module.hilbert(d)
    }

    pub fn conditions(&self) -> Vec<Congruence> {
        match self.kind {
            LogKind::Derivation if self.denominator.is_constant() => {
                derivation_conditions(&self.arrangement, &self.multiplicity, self.p)
            }
            LogKind::Derivation => {
                form_conditions(&self.arrangement, &self.multiplicity.negated(), self.p)
            }
            LogKind::Form => form_conditions(&self.arrangement, &self.multiplicity, self.p),
        }
    }

    /// Whether a numerator satisfies the defining congruences.
    pub fn satisfies(&self, v: &FreeModuleElement) -> bool {
        self.conditions().iter().all(|c| c.holds(v))
    }

    pub fn contains(&self, v: &FreeModuleElement) -> bool {
        self.module.contains(v)
    }

    fn verify(self) -> Result<Self> {
        let conds = self.conditions();
        for g in self.module.generators() {
            if !conds.iter().all(|c| c.holds(g)) {
                return Err(Error::Internal(format!(
                    "generator {g} violates the defining congruences"
                )));
            }
        }
        Ok(self)
    }

    pub fn describe(&self) -> String {
        let name = match (self.kind, self.denominator.is_constant()) {
            (LogKind::Derivation, _) => "D",
            (LogKind::Form, _) => "Omega",
        };
        format!("{name}^{}(A, {})", self.p, self.multiplicity)
    }
}

fn check_p(a: &Arrangement, p: usize) -> Result<()> {
    if p > a.dim() {
        return Err(Error::Input(format!(
            "exterior degree {p} exceeds the ambient dimension {}",
            a.dim()
        )));
    }
    Ok(())
}

fn check_mult(a: &Arrangement, m: &Multiplicity) -> Result<()> {
    if m.len() != a.len() {
        return Err(Error::Input(format!(
            "{} multiplicities for {} hyperplanes",
            m.len(),
            a.len()
        )));
    }
    if !m.is_nonnegative() {
        return Err(Error::Input("classical multiplicities must be nonnegative".into()));
    }
    Ok(())
}

pub fn derivation_module(a: &Arrangement, m: &Multiplicity, p: usize) -> Result<LogModule> {
    check_p(a, p)?;
    check_mult(a, m)?;
    let l = a.dim();
    let conds = derivation_conditions(a, m, p);
    let module = module_from_conditions(l, subsets(l, p).len(), 0, &conds)?
        .with_label(format!("D^{p}(A,{m})"));
    LogModule {
        kind: LogKind::Derivation,
        p,
        arrangement: a.clone(),
        multiplicity: m.clone(),
        module,
        denominator: Polynomial::one(l),
    }
    .verify()
}

pub fn form_module(a: &Arrangement, m: &Multiplicity, p: usize) -> Result<LogModule> {
    check_p(a, p)?;
    check_mult(a, m)?;
    let l = a.dim();
    let conds = form_conditions(a, m, p);
    let q = a.defining_poly(m);
    let shift = -(m.total());
    let module = module_from_conditions(l, subsets(l, p).len(), shift, &conds)?
        .with_label(format!("Q*Omega^{p}(A,{m})"));
    LogModule {
        kind: LogKind::Form,
        p,
        arrangement: a.clone(),
        multiplicity: m.clone(),
        module,
        denominator: q,
    }
    .verify()
}

/// Basis of the degree-`deg` piece (polynomial degree of the components) of the
/// solution space of the congruences, by dense linear algebra.
pub fn dense_piece(n: usize, rank: usize, conds: &[Congruence], deg: i64) -> Vec<FreeModuleElement> {
    if deg < 0 {
        return Vec::new();
    }
    let monos = monomials_of_degree(n, deg as u32);
    let nm = monos.len();
    let unknowns = rank * nm;
    // column j = (component j / nm, monomial j % nm)
    let mut rows: HashMap<(usize, u128), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (k, c) in conds.iter().enumerate() {
        for (comp, s) in &c.terms {
            for (mi, mono) in monos.iter().enumerate() {
                let f = Polynomial::monomial(n, *mono, s.clone());
                let (_, r) = f.div_rem(&c.modulus);
                for (rm, rc) in r.terms() {
                    let next = rows.len();
                    let row = *rows.entry((k, rm.grevlex_key())).or_insert(next);
                    entries.push((row, comp * nm + mi, rc.clone()));
                }
            }
        }
    }
    let mut mat = Matrix::zeros(rows.len(), unknowns);
    for (r, c, v) in entries {
        let cur = mat.data[r][c].clone();
        mat.data[r][c] = &cur + &v;
    }
    let null = if rows.is_empty() {
        (0..unknowns)
            .map(|j| (0..unknowns).map(|i| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect()
    } else {
        mat.nullspace()
    };
    null.into_iter()
        .map(|v| {
            let comps = (0..rank)
                .map(|c| {
                    Polynomial::from_terms(
                        n,
                        (0..nm)
                            .filter(|&i| !v[c * nm + i].is_zero())
                            .map(|i| (monos[i], v[c * nm + i].clone()))
                            .collect(),
                    )
                })
                .collect();
            FreeModuleElement::from_components(n, comps)
        })
        .collect()
}

/// Dense degree-`d` piece of `D^p(A,m)`.
#[derive(Clone, Debug)]
pub struct DensePiece {
    pub dimension: usize,
    pub basis: Vec<FreeModuleElement>,
}

fn oracle_guard(a: &Arrangement, d: i64) -> Result<()> {
    if a.dim() > 4 || d > 8 {
        return Err(Error::Input(format!(
            "dense oracle limited to dimension <= 4 and degree <= 8 (got {} and {d})",
            a.dim()
        )));
    }
    Ok(())
}

/// Degree-`d` piece of `D^p(A,m)` by dense linear algebra, independent of Gröbner bases.
pub fn brute_force_degree(a: &Arrangement, m: &Multiplicity, p: usize, d: i64) -> Result<DensePiece> {
    oracle_guard(a, d)?;
    check_p(a, p)?;
    check_mult(a, m)?;
    let conds = derivation_conditions(a, m, p);
    let basis = dense_piece(a.dim(), subsets(a.dim(), p).len(), &conds, d);
    Ok(DensePiece {
        dimension: basis.len(),
        basis,
    })
}

/// Degree-`d` piece of `Ω^p(A,m)` (true degree; numerators have degree `d + |m|`).
pub fn brute_force_form_degree(a: &Arrangement, m: &Multiplicity, p: usize, d: i64) -> Result<DensePiece> {
    let k = d + m.total();
    oracle_guard(a, k)?;
    check_p(a, p)?;
    check_mult(a, m)?;
    let conds = form_conditions(a, m, p);
    let basis = dense_piece(a.dim(), subsets(a.dim(), p).len(), &conds, k);
    Ok(DensePiece {
        dimension: basis.len(),
        basis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    fn g3() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn b2_derivations() {
        let m = Multiplicity::new(vec![2, 1]).unwrap();
        let d = derivation_module(&b2(), &m, 1).unwrap();
        assert_eq!(d.generator_degrees(), vec![1, 2]);
        let x2 = FreeModuleElement::from_components(2, vec![Polynomial::var(2, 0).pow(2), Polynomial::zero(2)]);
        assert!(d.contains(&x2));
        assert_eq!(brute_force_degree(&b2(), &m, 1, 1).unwrap().dimension, 1);
        assert_eq!(brute_force_degree(&b2(), &m, 1, 2).unwrap().dimension, 3);
        let one = Multiplicity::ones(2);
        let d = derivation_module(&b2(), &one, 1).unwrap();
        for k in 1..5 {
            assert_eq!(d.hilbert(k), 2 * k as u64);
        }
    }

    #[test]
    fn g3_matches_oracle() {
        let one = Multiplicity::ones(3);
        let d = derivation_module(&g3(), &one, 1).unwrap();
        assert_eq!(d.generator_degrees(), vec![1, 2]);
        for k in 0..=6 {
            assert_eq!(d.hilbert(k), brute_force_degree(&g3(), &one, 1, k).unwrap().dimension as u64);
        }
        assert_eq!(brute_force_degree(&g3(), &one, 1, 1).unwrap().dimension, 1);
        let euler = FreeModuleElement::from_components(2, vec![Polynomial::var(2, 0), Polynomial::var(2, 1)]);
        assert!(d.contains(&euler));
    }

    #[test]
    fn b2_forms() {
        let one = Multiplicity::ones(2);
        let w = form_module(&b2(), &one, 1).unwrap();
        assert_eq!(w.generator_degrees(), vec![-1, -1]);
        let y0 = FreeModuleElement::from_components(2, vec![Polynomial::var(2, 1), Polynomial::zero(2)]);
        assert!(w.contains(&y0));
        for d in -2..4 {
            assert_eq!(
                w.hilbert(d),
                brute_force_form_degree(&b2(), &one, 1, d).unwrap().dimension as u64
            );
        }
    }

    #[test]
    fn oracle_guard_rails() {
        let a = Arrangement::from_normals(5, &[vec![1, 0, 0, 0, 0]]).unwrap();
        assert!(brute_force_degree(&a, &Multiplicity::ones(1), 1, 1).is_err());
        assert!(brute_force_degree(&b2(), &Multiplicity::ones(2), 1, 9).is_err());
    }
}

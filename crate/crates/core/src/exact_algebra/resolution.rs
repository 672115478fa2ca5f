//! Graded presentations and minimal free resolutions.

use super::module::{FreeModule, FreeModuleElement};
use super::polynomial::Polynomial;
use super::submodule::{kernel_into_quotient, GradedSubmodule};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// The cokernel of `relations` inside the free module on `generators`.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    generators: FreeModule,
    relations: Vec<FreeModuleElement>,
}

impl GradedPresentation {
    pub fn new(generators: FreeModule, relations: Vec<FreeModuleElement>) -> Result<Self> {
        let mut rels = Vec::new();
        for r in relations {
            generators.check_element(&r)?;
            if r.is_zero() {
                continue;
            }
            if !generators.is_homogeneous(&r) {
                return Err(Error::Input(format!("inhomogeneous relation {r}")));
            }
            rels.push(r);
        }
        Ok(GradedPresentation {
            generators,
            relations: rels,
        })
    }

    /// The free module `F` itself.
    pub fn free(generators: FreeModule) -> Self {
        GradedPresentation {
            generators,
            relations: Vec::new(),
        }
    }

    /// The submodule regarded as an abstract module (minimal generators modulo their syzygies).
    pub fn of_submodule(m: &GradedSubmodule) -> Self {
        let min = m.minimalize();
        let syz = min.syzygies();
        let gens = FreeModule::new(m.nvars(), min.generator_degrees());
        GradedPresentation {
            generators: gens,
            relations: syz.generators().to_vec(),
        }
    }

    /// `F / N` for a submodule `N ⊂ F`.
    pub fn of_quotient(n: &GradedSubmodule) -> Self {
        GradedPresentation {
            generators: n.ambient().clone(),
            relations: n.generators().to_vec(),
        }
    }

    pub fn generators(&self) -> &FreeModule {
        &self.generators
    }

    pub fn generator_degrees(&self) -> &[i64] {
        self.generators.shifts()
    }

    pub fn relations(&self) -> &[FreeModuleElement] {
        &self.relations
    }

    pub fn nvars(&self) -> usize {
        self.generators.nvars()
    }

    pub fn relation_module(&self) -> GradedSubmodule {
        GradedSubmodule::new(self.generators.clone(), self.relations.clone()).unwrap()
    }

    pub fn hilbert(&self, d: i64) -> u64 {
        if self.relations.is_empty() {
            return self.generators.hilbert(d);
        }
        self.relation_module().quotient_hilbert(d)
    }

    pub fn hilbert_series_prefix(&self, dmin: i64, dmax: i64) -> Vec<u64> {
        let rel = self.relation_module();
        (dmin..=dmax).map(|d| rel.quotient_hilbert(d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        let rel = self.relation_module();
        (0..self.generators.rank()).all(|i| rel.contains(&self.generators.basis_vector(i)))
    }

    /// No relation has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.components().iter().all(|c| c.constant_term().is_zero()))
    }

    /// Eliminate generators killed by unit relation entries, then minimalize the relations.
    pub fn prune(&self) -> GradedPresentation {
        let n = self.nvars();
        let mut shifts = self.generators.shifts().to_vec();
        let mut rels = self.relations.clone();
        loop {
            let mut hit = None;
            'search: for (ri, r) in rels.iter().enumerate() {
                for (k, c) in r.components().iter().enumerate() {
                    let ct = c.constant_term();
                    if !ct.is_zero() {
                        hit = Some((ri, k, ct));
                        break 'search;
                    }
                }
            }
            let Some((ri, k, ct)) = hit else { break };
            let pivot = rels.swap_remove(ri);
            let inv = ct.inv();
            // e_k = -(1/ct) * sum_{i≠k} pivot_i e_i
            let mut next = Vec::with_capacity(rels.len());
            for r in rels {
                let rk = r.component(k).clone();
                let reduced = if rk.is_zero() {
                    r
                } else {
                    r.sub(&pivot.mul_poly(&rk.scale(&inv)))
                };
                let mut comps = reduced.into_components();
                comps.remove(k);
                let v = FreeModuleElement::from_components(n, comps);
                if !v.is_zero() {
                    next.push(v);
                }
            }
            shifts.remove(k);
            rels = next;
        }
        let gens = FreeModule::new(n, shifts);
        let rel = GradedSubmodule::new(gens.clone(), rels).unwrap().minimalize();
        GradedPresentation {
            generators: gens,
            relations: rel.generators().to_vec(),
        }
    }

    /// Presentation over a ring with one more variable at position `var`, with that
    /// variable acting by zero.
    pub fn lift_with_zero_variable(&self, var: usize) -> GradedPresentation {
        let n = self.nvars() + 1;
        let gens = FreeModule::new(n, self.generators.shifts().to_vec());
        let mut rels: Vec<FreeModuleElement> = self
            .relations
            .iter()
            .map(|r| r.map_components(|c| c.insert_var(var)))
            .collect();
        for j in 0..gens.rank() {
            let mut r = FreeModuleElement::zero(n, gens.rank());
            r.set_component(j, Polynomial::var(n, var));
            rels.push(r);
        }
        GradedPresentation {
            generators: gens,
            relations: rels,
        }
    }
}

/// A graded free resolution `0 <- F_0 <- F_1 <- ... <- F_n <- 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    /// `modules[i]` is `F_i`.
    pub modules: Vec<FreeModule>,
    /// `maps[i]` has one column (an element of `F_i`) per basis vector of `F_{i+1}`.
    pub maps: Vec<Vec<FreeModuleElement>>,
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// For each homological position, the multiset of basis degrees as (degree, count).
    pub fn graded_betti(&self) -> Vec<BTreeMap<i64, usize>> {
        self.modules
            .iter()
            .map(|m| {
                let mut b = BTreeMap::new();
                for &s in m.shifts() {
                    *b.entry(s).or_insert(0) += 1;
                }
                b
            })
            .collect()
    }

    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .all(|cols| cols.iter().all(|c| c.components().iter().all(|p| p.constant_term().is_zero())))
    }

    /// Composition of consecutive maps vanishes.
    pub fn composites_vanish(&self) -> bool {
        for i in 1..self.maps.len() {
            let n = self.modules[i - 1].nvars();
            let rank = self.modules[i - 1].rank();
            for col in &self.maps[i] {
                let v = FreeModuleElement::combination(n, rank, col.components(), &self.maps[i - 1]);
                if !v.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Alternating sum of free-module Hilbert functions at degree `d`.
    pub fn euler_characteristic(&self, d: i64) -> i64 {
        self.modules
            .iter()
            .enumerate()
            .map(|(i, m)| {
                let h = m.hilbert(d) as i64;
                if i % 2 == 0 {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }

    /// Transposed matrix of `maps[i]`: rows become columns, as a map `F_i^* -> F_{i+1}^*`.
    pub fn dual_map(&self, i: usize) -> Vec<FreeModuleElement> {
        let src = &self.modules[i];
        let n = src.nvars();
        let cols = &self.maps[i];
        (0..src.rank())
            .map(|k| {
                FreeModuleElement::from_components(n, cols.iter().map(|c| c.component(k).clone()).collect())
            })
            .collect()
    }
}

/// Free resolution of the module presented by `p`, minimal when requested.
pub fn free_resolution(p: &GradedPresentation, minimal: bool) -> Result<FreeResolution> {
    let p = if minimal { p.prune() } else { p.clone() };
    let n = p.nvars();
    let mut modules = vec![p.generators().clone()];
    let mut maps: Vec<Vec<FreeModuleElement>> = Vec::new();
    let mut cols: Vec<FreeModuleElement> = p.relations().to_vec();
    while !cols.is_empty() {
        let target = modules.last().unwrap().clone();
        let degs: Vec<i64> = cols.iter().map(|c| target.degree_of(c).unwrap()).collect();
        let source = FreeModule::new(n, degs);
        let kernel = kernel_into_quotient(&source, &cols, &target, &[])?;
        modules.push(source);
        maps.push(cols);
        cols = kernel.generators().to_vec();
        if maps.len() > n + 1 {
            return Err(Error::Internal("resolution longer than the number of variables".into()));
        }
    }
    let res = FreeResolution { modules, maps };
    if !res.composites_vanish() {
        return Err(Error::Internal("consecutive resolution maps do not compose to zero".into()));
    }
    Ok(res)
}

/// Numerical check that the resolution is exact: the alternating sum of free ranks
/// reproduces the module's Hilbert function in degrees `dmin..=dmax`.
pub fn check_resolution_hilbert(p: &GradedPresentation, res: &FreeResolution, dmin: i64, dmax: i64) -> bool {
    let rel = p.relation_module();
    (dmin..=dmax).all(|d| res.euler_characteristic(d) == rel.quotient_hilbert(d) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::Scalar;

    fn unit(n: usize) -> Polynomial {
        Polynomial::constant(n, Scalar::one())
    }

    fn ideal_resolution(n: usize, k: usize) -> FreeResolution {
        let s = FreeModule::uniform(n, 1, 0);
        let gens: Vec<FreeModuleElement> = (0..k)
            .map(|i| FreeModuleElement::from_components(n, vec![Polynomial::var(n, i)]))
            .collect();
        let m = GradedSubmodule::new(s, gens).unwrap();
        free_resolution(&GradedPresentation::of_submodule(&m), true).unwrap()
    }

    #[test]
    fn koszul_two() {
        let r = ideal_resolution(2, 2);
        assert_eq!(r.ranks(), vec![2, 1]);
        assert_eq!(r.modules[1].shifts(), &[2]);
        assert!(r.is_minimal());
    }

    #[test]
    fn koszul_three() {
        let r = ideal_resolution(3, 3);
        assert_eq!(r.ranks(), vec![3, 3, 1]);
        assert!(r.composites_vanish());
    }

    #[test]
    fn free_module_has_length_zero() {
        let r = free_resolution(&GradedPresentation::free(FreeModule::uniform(2, 3, 1)), true).unwrap();
        assert_eq!(r.length(), 0);
    }

    #[test]
    fn prune_removes_units() {
        // S^2 / ((1, x)) ≅ S
        let f = FreeModule::uniform(2, 2, 0);
        let r = FreeModuleElement::from_components(2, vec![unit(2), Polynomial::zero(2)]);
        let p = GradedPresentation::new(f, vec![r]).unwrap().prune();
        assert_eq!(p.generators().rank(), 1);
        assert!(p.relations().is_empty());
    }
}

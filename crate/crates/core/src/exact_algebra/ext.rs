//! Ext modules into the base ring, annihilators and supports.

use super::hilbert::monomial_ideal_dimension;
use super::module::{FreeModule, FreeModuleElement};
use super::polynomial::Polynomial;
use super::resolution::{free_resolution, FreeResolution, GradedPresentation};
use super::scalar::Scalar;
use super::submodule::{kernel_into_quotient, GradedSubmodule};
use crate::error::{Error, Result};

/// `Ext^p(M, R)` as kernel modulo image in the dualized resolution, together with
/// the kernel and image submodules of `F_p^*`.
#[derive(Clone, Debug)]
pub struct ExtData {
    pub kernel: GradedSubmodule,
    pub image: GradedSubmodule,
}

impl ExtData {
    pub fn hilbert(&self, d: i64) -> u64 {
        self.kernel.hilbert(d) - self.image.hilbert(d)
    }

    pub fn is_zero(&self) -> bool {
        self.image.contains_module(&self.kernel)
    }

    /// Presentation of `kernel / image` on minimal generators of the kernel.
    pub fn presentation(&self) -> Result<GradedPresentation> {
        let ker = &self.kernel;
        let source = FreeModule::new(ker.nvars(), ker.generator_degrees());
        let rel = kernel_into_quotient(&source, ker.generators(), ker.ambient(), self.image.generators())?;
        Ok(GradedPresentation::new(source, rel.generators().to_vec())?.prune())
    }
}

/// Ext data at position `p` of a resolution.
pub fn ext_from_resolution(res: &FreeResolution, p: usize) -> Result<ExtData> {
    let n = res.modules[0].nvars();
    if p >= res.modules.len() {
        let z = FreeModule::new(n, Vec::new());
        return Ok(ExtData {
            kernel: GradedSubmodule::zero(z.clone()),
            image: GradedSubmodule::zero(z),
        });
    }
    let fp = res.modules[p].dual();
    let kernel = if p < res.maps.len() {
        let target = res.modules[p + 1].dual();
        kernel_into_quotient(&fp, &res.dual_map(p), &target, &[])?
    } else {
        GradedSubmodule::full(fp.clone())
    };
    let image = if p == 0 {
        GradedSubmodule::zero(fp)
    } else {
        GradedSubmodule::new(fp, res.dual_map(p - 1))?
    };
    Ok(ExtData { kernel, image })
}

/// `Ext^p_R(M, R)` for the module presented by `m`, where `R` is the polynomial ring of `m`.
pub fn ext_module(m: &GradedPresentation, p: i64) -> Result<ExtData> {
    if p < 0 {
        return Err(Error::Input(format!("Ext index {p} is negative")));
    }
    let res = free_resolution(m, true)?;
    ext_from_resolution(&res, p as usize)
}

/// Annihilator ideal of the presented module, as a submodule of `S` in degree 0.
pub fn annihilator(m: &GradedPresentation) -> Result<GradedSubmodule> {
    let n = m.nvars();
    let ring = FreeModule::uniform(n, 1, 0);
    let gens = m.generators();
    let mut ann: Option<GradedSubmodule> = None;
    for j in 0..gens.rank() {
        let source = FreeModule::new(n, vec![gens.shift(j)]);
        let colon = kernel_into_quotient(&source, &[gens.basis_vector(j)], gens, m.relations())?;
        let colon_ideal = GradedSubmodule::new(
            ring.clone(),
            colon
                .generators()
                .iter()
                .map(|g| FreeModuleElement::from_components(n, vec![g.component(0).clone()]))
                .collect(),
        )?;
        ann = Some(match ann {
            None => colon_ideal,
            Some(a) => intersect_ideals(&a, &colon_ideal)?,
        });
    }
    Ok(ann.unwrap_or_else(|| GradedSubmodule::full(ring)))
}

/// `I ∩ J` for homogeneous ideals.
pub fn intersect_ideals(i: &GradedSubmodule, j: &GradedSubmodule) -> Result<GradedSubmodule> {
    let n = i.nvars();
    let ring = FreeModule::uniform(n, 1, 0);
    let target = FreeModule::uniform(n, 2, 0);
    let mut rels = Vec::new();
    for g in i.generators() {
        rels.push(FreeModuleElement::from_components(n, vec![g.component(0).clone(), Polynomial::zero(n)]));
    }
    for g in j.generators() {
        rels.push(FreeModuleElement::from_components(n, vec![Polynomial::zero(n), g.component(0).clone()]));
    }
    let one = FreeModuleElement::from_components(n, vec![Polynomial::one(n), Polynomial::one(n)]);
    kernel_into_quotient(&ring, &[one], &target, &rels)
}

/// Krull dimension of the support; `-1` for the zero module.
pub fn support_dimension(m: &GradedPresentation) -> Result<i64> {
    let ann = annihilator(m)?;
    let leads: Vec<_> = ann.groebner().leading_terms().into_iter().map(|(_, t)| t).collect();
    Ok(monomial_ideal_dimension(m.nvars(), &leads))
}

/// Whether the linear subspace spanned by `basis` (vectors in coordinates) lies in the support.
pub fn flat_in_support(ann: &GradedSubmodule, basis: &[Vec<Scalar>]) -> bool {
    let n = ann.nvars();
    let k = basis.len();
    // x_i = sum_t basis[t][i] * u_t
    let rows: Vec<Vec<Scalar>> = (0..n)
        .map(|i| (0..k).map(|t| basis[t][i].clone()).collect())
        .collect();
    ann.generators().iter().all(|g| {
        if k == 0 {
            g.component(0).constant_term().is_zero()
        } else {
            g.component(0).linear_substitute(&rows).is_zero()
        }
    })
}

/// Zeroth Fitting ideal from maximal minors, when the presentation is small enough.
pub fn fitting_ideal(m: &GradedPresentation, max_minors: usize) -> Option<GradedSubmodule> {
    let n = m.nvars();
    let r = m.generators().rank();
    let rels = m.relations();
    let ring = FreeModule::uniform(n, 1, 0);
    if r == 0 {
        return Some(GradedSubmodule::full(ring));
    }
    if rels.len() < r {
        return Some(GradedSubmodule::zero(ring));
    }
    let count = binomial(rels.len(), r);
    if count > max_minors {
        return None;
    }
    let mut gens = Vec::new();
    for cols in combinations(rels.len(), r) {
        let mat: Vec<Vec<Polynomial>> = (0..r)
            .map(|i| cols.iter().map(|&c| rels[c].component(i).clone()).collect())
            .collect();
        let d = super::linalg::poly_determinant(&mat);
        if !d.is_zero() && d.is_homogeneous() {
            gens.push(FreeModuleElement::from_components(n, vec![d]));
        }
    }
    GradedSubmodule::new(ring, gens).ok()
}

fn binomial(n: usize, k: usize) -> usize {
    super::monomial::binomial(n as u64, k as u64) as usize
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient_xy() -> GradedPresentation {
        let s = FreeModule::uniform(2, 1, 0);
        let rels = vec![
            FreeModuleElement::from_components(2, vec![Polynomial::var(2, 0)]),
            FreeModuleElement::from_components(2, vec![Polynomial::var(2, 1)]),
        ];
        GradedPresentation::new(s, rels).unwrap()
    }

    #[test]
    fn ext_of_free_vanishes() {
        let p = GradedPresentation::free(FreeModule::new(2, vec![0, 1]));
        assert!(ext_module(&p, 1).unwrap().is_zero());
        let e0 = ext_module(&p, 0).unwrap();
        assert_eq!(e0.hilbert(-1), 1);
        assert_eq!(e0.hilbert(0), 3);
    }

    #[test]
    fn koszul_self_duality() {
        let p = quotient_xy();
        let e2 = ext_module(&p, 2).unwrap();
        for d in -4..4 {
            assert_eq!(e2.hilbert(d), p.hilbert(d + 2), "degree {d}");
        }
        assert!(ext_module(&p, 1).unwrap().is_zero());
    }

    #[test]
    fn supports() {
        assert_eq!(support_dimension(&quotient_xy()).unwrap(), 0);
        let free = GradedPresentation::free(FreeModule::uniform(2, 2, 0));
        assert_eq!(support_dimension(&free).unwrap(), 2);
        let zero = GradedPresentation::new(
            FreeModule::uniform(2, 1, 0),
            vec![FreeModuleElement::from_components(2, vec![Polynomial::one(2)])],
        )
        .unwrap();
        assert_eq!(support_dimension(&zero).unwrap(), -1);
    }

    #[test]
    fn fitting_matches_annihilator_radical_on_cyclic() {
        let f = fitting_ideal(&quotient_xy(), 10).unwrap();
        let a = annihilator(&quotient_xy()).unwrap();
        assert!(f.same_module(&a));
    }
}

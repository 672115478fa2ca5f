use super::exterior::{complement, shuffle_sign, subset_index, subsets};
use super::logmod::{derivation_module, form_module, LogModule};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::{FreeModuleElement, Polynomial};

/// `Σ F_I dx_I ↦ Σ ε(I) F_I ∂_{I^c}` on numerators, `p`-forms to `(ℓ-p)`-vectors.
pub fn forms_to_derivations(l: usize, p: usize, v: &FreeModuleElement) -> FreeModuleElement {
    let src = subsets(l, p);
    let dst = subsets(l, l - p);
    let n = v.nvars();
    let mut comps = vec![Polynomial::zero(n); dst.len()];
    for (k, i) in src.iter().enumerate() {
        let c = complement(l, i);
        let f = v.component(k);
        comps[subset_index(&dst, &c)] = if shuffle_sign(i) > 0 { f.clone() } else { f.neg() };
    }
    FreeModuleElement::from_components(n, comps)
}

/// Inverse of [`forms_to_derivations`].
pub fn derivations_to_forms(l: usize, p: usize, v: &FreeModuleElement) -> FreeModuleElement {
    let src = subsets(l, l - p);
    let dst = subsets(l, p);
    let n = v.nvars();
    let mut comps = vec![Polynomial::zero(n); dst.len()];
    for (k, i) in dst.iter().enumerate() {
        let c = complement(l, i);
        let f = v.component(subset_index(&src, &c));
        comps[k] = if shuffle_sign(i) > 0 { f.clone() } else { f.neg() };
    }
    FreeModuleElement::from_components(n, comps)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct DualityReport {
    pub p: usize,
    pub forms_into_derivations: bool,
    pub derivations_into_forms: bool,
    pub hilbert_agree: bool,
    pub degrees_checked: (i64, i64),
}

impl DualityReport {
    pub fn passes(&self) -> bool {
        self.forms_into_derivations && self.derivations_into_forms && self.hilbert_agree
    }
}

/// Checks that the complement map identifies `Q·Ω^p(A,m)` with `D^{ℓ-p}(A,m)`:
/// generators map into the other module in both directions and Hilbert functions
/// agree after the shift by `|m|`, for degrees up to `dmax`.
pub fn duality_check(a: &Arrangement, m: &Multiplicity, p: usize, dmax: i64) -> Result<DualityReport> {
    let l = a.dim();
    if p > l {
        return Err(Error::Input(format!("exterior degree {p} exceeds {l}")));
    }
    let w = form_module(a, m, p)?;
    let d = derivation_module(a, m, l - p)?;
    duality_between(&w, &d, dmax)
}

pub fn duality_between(w: &LogModule, d: &LogModule, dmax: i64) -> Result<DualityReport> {
    let l = w.nvars();
    let p = w.p;
    let shift = w.multiplicity.total();
    let fwd = w
        .generators()
        .iter()
        .all(|g| d.satisfies(&forms_to_derivations(l, p, g)));
    let back = d
        .generators()
        .iter()
        .all(|g| w.satisfies(&derivations_to_forms(l, p, g)));
    let lo = -shift - 1;
    let hilbert_agree = (lo..=dmax - shift).all(|k| w.hilbert(k) == d.hilbert(k + shift));
    Ok(DualityReport {
        p,
        forms_into_derivations: fwd,
        derivations_into_forms: back,
        hilbert_agree,
        degrees_checked: (lo + shift, dmax),
    })
}

/// The verified correspondence; an internal error signals a sign-convention bug.
pub fn duality_iso(a: &Arrangement, m: &Multiplicity, p: usize) -> Result<DualityReport> {
    let r = duality_check(a, m, p, m.total() + 3)?;
    if !r.passes() {
        return Err(Error::Internal(format!("duality check failed: {r:?}")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_sign() {
        let n = 3;
        let v = FreeModuleElement::from_components(
            n,
            vec![Polynomial::var(n, 0), Polynomial::var(n, 1), Polynomial::var(n, 2)],
        );
        for p in 0..=1 {
            let rank = subsets(3, p).len();
            let v = FreeModuleElement::from_components(n, v.components()[..rank].to_vec());
            let there = forms_to_derivations(3, p, &v);
            assert_eq!(derivations_to_forms(3, p, &there), v);
        }
    }

    #[test]
    fn small_dualities() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        for p in 0..=2 {
            duality_iso(&b2, &Multiplicity::ones(2), p).unwrap();
            duality_iso(&g3, &Multiplicity::ones(3), p).unwrap();
            duality_iso(&g3, &Multiplicity::new(vec![2, 1, 3]).unwrap(), p).unwrap();
        }
    }
}

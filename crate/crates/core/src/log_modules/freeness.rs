use super::logmod::{derivation_module, LogKind, LogModule};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::linalg::poly_determinant;
use crate::exact_algebra::{FreeModuleElement, Polynomial, Scalar};

#[derive(Clone, Debug)]
pub struct SaitoResult {
    pub passes: bool,
    /// `det = c·Q` when `passes`.
    pub constant: Option<Scalar>,
    pub determinant: Polynomial,
}

/// Determinant test on `ℓ` elements of a rank-`ℓ` logarithmic module of 1-vectors.
///
/// For derivations the determinant of a basis is `c·Q(A,m)`; for cleared forms it is
/// `c·Q^{ℓ-1}`.
pub fn saito_for(module: &LogModule, candidates: &[FreeModuleElement]) -> Result<SaitoResult> {
    let l = module.nvars();
    if module.p != 1 {
        return Err(Error::Input("determinant test needs exterior degree 1".into()));
    }
    if candidates.len() != l {
        return Err(Error::Input(format!("{} candidates for rank {l}", candidates.len())));
    }
    for c in candidates {
        if !module.satisfies(c) {
            return Err(Error::Input(format!("candidate {c} is not in {}", module.describe())));
        }
    }
    let mat: Vec<Vec<Polynomial>> = (0..l)
        .map(|i| candidates.iter().map(|c| c.component(i).clone()).collect())
        .collect();
    let det = poly_determinant(&mat);
    let target = match module.kind {
        LogKind::Form => module.denominator.pow(l as u32 - 1),
        LogKind::Derivation if !module.denominator.is_constant() => module.denominator.pow(l as u32 - 1),
        LogKind::Derivation => module.arrangement.defining_poly(&module.multiplicity),
    };
    if det.is_zero() {
        return Ok(SaitoResult {
            passes: false,
            constant: None,
            determinant: det,
        });
    }
    let constant = det.exact_div(&target).filter(|q| q.is_constant()).map(|q| q.constant_term());
    Ok(SaitoResult {
        passes: constant.is_some(),
        constant,
        determinant: det,
    })
}

/// Saito's criterion for `ℓ` elements of `D(A,m)`.
pub fn saito_check(a: &Arrangement, m: &Multiplicity, candidates: &[FreeModuleElement]) -> Result<SaitoResult> {
    let module = derivation_module(a, m, 1)?;
    saito_for(&module, candidates)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FreenessVerdict {
    pub free: bool,
    pub generator_degrees: Vec<i64>,
    pub exponents: Option<Vec<i64>>,
    pub saito_constant: Option<String>,
}

/// Freeness of a rank-`ℓ` module of 1-vectors, cross-checked between the syzygy
/// count of the minimal generators and the determinant test.
pub fn module_freeness(module: &LogModule) -> Result<FreenessVerdict> {
    let l = module.nvars();
    let min = module.module.minimalize();
    let gens = min.generators().to_vec();
    let mut degs = min.generator_degrees();
    degs.sort_unstable();
    let syz_free = gens.len() == l && min.syzygies().is_zero();
    let saito = if gens.len() == l {
        Some(saito_for(module, &gens)?)
    } else {
        None
    };
    let saito_free = saito.as_ref().is_some_and(|s| s.passes);
    if syz_free != saito_free {
        return Err(Error::Internal(format!(
            "freeness criteria disagree on {}: resolution says {syz_free}, determinant says {saito_free}",
            module.describe()
        )));
    }
    Ok(FreenessVerdict {
        free: syz_free,
        exponents: syz_free.then(|| match module.kind {
            LogKind::Form => {
                let mut e: Vec<i64> = degs.iter().map(|d| -d).collect();
                e.sort_unstable();
                e
            }
            LogKind::Derivation => degs.clone(),
        }),
        generator_degrees: degs,
        saito_constant: saito.and_then(|s| s.constant).map(|c| c.to_string()),
    })
}

pub fn freeness(a: &Arrangement, m: &Multiplicity) -> Result<FreenessVerdict> {
    module_freeness(&derivation_module(a, m, 1)?)
}

pub fn is_free(a: &Arrangement, m: &Multiplicity) -> Result<bool> {
    Ok(freeness(a, m)?.free)
}

/// Exponents of a free multiarrangement; input error when it is not free.
pub fn exponents(a: &Arrangement, m: &Multiplicity) -> Result<Vec<i64>> {
    let v = freeness(a, m)?;
    v.exponents
        .ok_or_else(|| Error::Input(format!("(A, {m}) is not free; generator degrees {:?}", v.generator_degrees)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn saito_examples() {
        let m = Multiplicity::new(vec![2, 1]).unwrap();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let z = Polynomial::zero(2);
        let c = vec![
            FreeModuleElement::from_components(2, vec![x.pow(2), z.clone()]),
            FreeModuleElement::from_components(2, vec![z.clone(), y.clone()]),
        ];
        let r = saito_check(&b2(), &m, &c).unwrap();
        assert!(r.passes);
        assert_eq!(format!("{}", r.determinant), "x^2y");
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let e = FreeModuleElement::from_components(2, vec![x.clone(), y.clone()]);
        let r = saito_check(&g3, &Multiplicity::ones(3), &[e.clone(), e]).unwrap();
        assert!(!r.passes);
        let bad = FreeModuleElement::from_components(2, vec![y, z]);
        assert!(saito_check(&b2(), &m, &[bad.clone(), bad]).is_err());
    }

    #[test]
    fn rank_two_is_free() {
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(exponents(&g3, &Multiplicity::ones(3)).unwrap(), vec![1, 2]);
        assert_eq!(exponents(&g3, &Multiplicity::new(vec![2, 1, 1]).unwrap()).unwrap(), vec![2, 2]);
    }
}

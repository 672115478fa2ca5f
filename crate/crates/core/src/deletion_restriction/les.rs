use super::sequence::{euler_image, Side};
use super::triple::EulerTriple;
use crate::error::Result;
use crate::exact_algebra::{ext_module, GradedPresentation};
use crate::log_modules::{derivation_module, form_module, is_free, LogModule};
use serde::Serialize;

/// Hilbert values of the restriction cokernel on `lo..=hi`.
pub fn cokernel_series(t: &EulerTriple, side: Side, lo: i64, hi: i64) -> Result<Vec<u64>> {
    let e = euler_image(t, side, 1)?;
    Ok((lo..=hi).map(|d| e.target.hilbert(d) - e.image.hilbert(d)).collect())
}

/// Hilbert values of `Ext^p(M, R)` on `lo..=hi`.
pub fn ext_series(pres: &GradedPresentation, p: i64, lo: i64, hi: i64) -> Result<Vec<u64>> {
    let e = ext_module(pres, p)?;
    Ok((lo..=hi).map(|d| e.hilbert(d)).collect())
}

fn presentation(m: &LogModule) -> GradedPresentation {
    GradedPresentation::of_submodule(&m.module)
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseChange {
    pub module: String,
    pub p: i64,
    /// `HF(Ext^p_{S̄}(M, S̄), d+1) = HF(Ext^{p+1}_S(M, S), d)` on the checked range.
    pub agree: bool,
    pub nonzero: bool,
}

/// Base change from `S̄ = S/(α_H)` to `S` for a module over `S̄`.
pub fn base_change_check(name: &str, m: &GradedPresentation, p: i64, lo: i64, hi: i64) -> Result<BaseChange> {
    let over_bar = ext_series(m, p, lo + 1, hi + 1)?;
    let over_s = ext_series(&m.lift_with_zero_variable(0), p + 1, lo, hi)?;
    Ok(BaseChange {
        module: name.to_string(),
        p,
        agree: over_bar == over_s,
        nonzero: over_s.iter().any(|&h| h != 0),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtPair {
    pub left: Vec<u64>,
    pub right: Vec<u64>,
    pub agree: bool,
    pub left_nonzero: bool,
    pub right_nonzero: bool,
}

impl ExtPair {
    fn new(left: Vec<u64>, right: Vec<u64>) -> Self {
        ExtPair {
            agree: left == right,
            left_nonzero: left.iter().any(|&h| h != 0),
            right_nonzero: right.iter().any(|&h| h != 0),
            left,
            right,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LesReport {
    pub triple: String,
    pub degrees: (i64, i64),
    /// `coker ρ^H ↪ Ext¹_S(Ω¹(A,m'),S)[-1]`, degreewise.
    pub derivation_bound: bool,
    /// Equality when `Ext¹_S(Ω¹(A,m),S) = 0`.
    pub derivation_equality: Option<bool>,
    /// `coker i_H^* ↪ Ext¹_S(D(A,m),S)[-1]`, degreewise.
    pub form_bound: bool,
    /// The four-term sequence: equality when `(A,m')` is free.
    pub four_term: Option<bool>,
    /// The same comparison without the twist by `-1`.
    pub four_term_untwisted: Option<bool>,
    pub ext1_forms_deletion_zero: bool,
    /// `(A,m)` free: `Ext¹_{S̄}(Ω¹(A^H,m*))[1]` against `Ext²_S(Ω¹(A,m'))`.
    pub ext2_comparison: Option<ExtPair>,
    pub base_change: Vec<BaseChange>,
    pub violations: Vec<String>,
}

fn bounded_by(small: &[u64], big: &[u64]) -> bool {
    small.iter().zip(big).all(|(a, b)| a <= b)
}

/// Hilbert-function consistency of the long exact sequences on degrees `-dmax..=dmax`.
pub fn les_consistency(t: &EulerTriple, dmax: i64) -> Result<LesReport> {
    let a = &t.arrangement;
    let (lo, hi) = (-dmax, dmax);
    let name = t.describe();
    let mut violations = Vec::new();

    let w = presentation(&form_module(a, &t.multiplicity, 1)?);
    let wp = presentation(&form_module(a, &t.mprime, 1)?);
    let d = presentation(&derivation_module(a, &t.multiplicity, 1)?);

    // twisted series: entry d holds HF(Ext, d - 1)
    let e1_wp = ext_series(&wp, 1, lo - 1, hi - 1)?;
    let e1_d = ext_series(&d, 1, lo - 1, hi - 1)?;
    let e1_d_flat = ext_series(&d, 1, lo, hi)?;
    let coker_d = cokernel_series(t, Side::Derivation, lo, hi)?;
    let coker_w = cokernel_series(t, Side::Form, lo, hi)?;

    let derivation_bound = bounded_by(&coker_d, &e1_wp);
    if !derivation_bound {
        violations.push(format!("{name}: coker rho exceeds Ext^1(Omega^1(A, m'))[-1]"));
    }
    let derivation_equality = if ext_module(&w, 1)?.is_zero() {
        let eq = coker_d == e1_wp;
        if !eq {
            violations.push(format!("{name}: coker rho differs from Ext^1(Omega^1(A, m'))[-1]"));
        }
        Some(eq)
    } else {
        None
    };
    let form_bound = bounded_by(&coker_w, &e1_d);
    if !form_bound {
        violations.push(format!("{name}: coker i* exceeds Ext^1(D(A, m))[-1]"));
    }
    let mprime_free = is_free(a, &t.mprime)?;
    let (four_term, four_term_untwisted) = if mprime_free {
        let eq = coker_w == e1_d;
        if !eq {
            violations.push(format!("{name}: four-term sequence fails"));
        }
        (Some(eq), Some(coker_w == e1_d_flat))
    } else {
        (None, None)
    };

    let ext1_forms_deletion_zero = ext_module(&wp, 1)?.is_zero();
    let target_w = presentation(&form_module(t.restricted(), t.m_star(), 1)?);
    let target_d = presentation(&derivation_module(t.restricted(), t.m_star(), 1)?);
    let ext2_comparison = if is_free(a, &t.multiplicity)? {
        let pair = ExtPair::new(ext_series(&target_w, 1, lo + 1, hi + 1)?, ext_series(&wp, 2, lo, hi)?);
        if !pair.agree {
            violations.push(format!(
                "{name}: Ext^1 of Omega^1(A^H) does not match Ext^2 of Omega^1(A, m')"
            ));
        }
        Some(pair)
    } else {
        None
    };

    let mut base_change = Vec::new();
    for (label, m) in [("D(A^H, m*)", &target_d), ("Omega^1(A^H, m*)", &target_w)] {
        for p in 0..=1 {
            let b = base_change_check(label, m, p, lo, hi)?;
            if !b.agree {
                violations.push(format!("{name}: base change fails for Ext^{p} of {label}"));
            }
            base_change.push(b);
        }
    }

    Ok(LesReport {
        triple: name,
        degrees: (lo, hi),
        derivation_bound,
        derivation_equality,
        form_bound,
        four_term,
        four_term_untwisted,
        ext1_forms_deletion_zero,
        ext2_comparison,
        base_change,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{Arrangement, Multiplicity};

    #[test]
    fn generic_four_planes() {
        let a = Arrangement::from_normals(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        let t = EulerTriple::new(&a, &Multiplicity::ones(4), 3).unwrap();
        let r = les_consistency(&t, 6).unwrap();
        assert!(r.violations.is_empty(), "{r:?}");
        assert_eq!(r.four_term, Some(true));
        assert_eq!(r.four_term_untwisted, Some(false));
    }

    #[test]
    fn boolean_plane() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let t = EulerTriple::new(&b2, &Multiplicity::new(vec![2, 1]).unwrap(), 0).unwrap();
        let r = les_consistency(&t, 6).unwrap();
        assert!(r.violations.is_empty(), "{r:?}");
        assert_eq!(r.four_term, Some(true));
    }
}

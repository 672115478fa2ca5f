use super::numbering;
use super::triple::{form_unchecked, rho_unchecked, EulerTriple};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::{FreeModuleElement, GradedSubmodule};
use crate::log_modules::{
    derivation_module, form_module, generalized_log_module, is_free, module_freeness, LogModule,
};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Derivation,
    Form,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Derivation => "derivation",
            Side::Form => "form",
        })
    }
}

/// The three modules of an Euler sequence, the restriction image and its generators.
pub struct EulerImage {
    pub first: LogModule,
    pub middle: LogModule,
    pub target: LogModule,
    pub image: GradedSubmodule,
}

fn restrict(t: &EulerTriple, side: Side, p: usize, v: &FreeModuleElement) -> Result<FreeModuleElement> {
    match side {
        Side::Derivation => Ok(rho_unchecked(t, p, v)),
        Side::Form => form_unchecked(t, p, v),
    }
}

/// `0 → first → middle → target` for the chosen side: derivations
/// `D^p(A,m') → D^p(A,m) → D^p(A^H,m*)`, forms `Ω^p(A,m) → Ω^p(A,m') → Ω^p(A^H,m*)`.
pub fn euler_image(t: &EulerTriple, side: Side, p: usize) -> Result<EulerImage> {
    if p >= t.dim() {
        return Err(Error::Input(format!("exterior degree {p} must be below {}", t.dim())));
    }
    let a = &t.arrangement;
    let (first, middle, target) = match side {
        Side::Derivation => (
            derivation_module(a, &t.mprime, p)?,
            derivation_module(a, &t.multiplicity, p)?,
            derivation_module(t.restricted(), t.m_star(), p)?,
        ),
        Side::Form => (
            form_module(a, &t.multiplicity, p)?,
            form_module(a, &t.mprime, p)?,
            form_module(t.restricted(), t.m_star(), p)?,
        ),
    };
    let images = middle
        .generators()
        .iter()
        .map(|g| restrict(t, side, p, g))
        .collect::<Result<Vec<_>>>()?;
    let image = GradedSubmodule::new(target.module.ambient().clone(), images)?;
    Ok(EulerImage {
        first,
        middle,
        target,
        image,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub triple: String,
    pub side: Side,
    pub p: usize,
    pub injective: bool,
    pub composite_zero: bool,
    pub middle_exact: bool,
    pub image_in_target: bool,
    pub degrees: (i64, i64),
    /// `(d, dim coker_d)` for the nonzero cokernel degrees.
    pub cokernel_hilbert: Vec<(i64, u64)>,
    pub surjective: bool,
    pub violations: Vec<String>,
}

impl SequenceReport {
    pub fn healthy(&self) -> bool {
        self.violations.is_empty()
    }
}

fn generators_in(target: &GradedSubmodule, image: &GradedSubmodule) -> bool {
    target.minimalize().generators().iter().all(|g| image.contains(g))
}

/// Degreewise check of the Euler sequence on `d ≤ dmax`.
pub fn euler_sequence(t: &EulerTriple, side: Side, p: usize, dmax: i64) -> Result<SequenceReport> {
    let e = euler_image(t, side, p)?;
    let alpha = t.alpha();
    let lifted: Vec<FreeModuleElement> = e
        .first
        .generators()
        .iter()
        .map(|g| match side {
            Side::Derivation => g.mul_poly(&alpha),
            // cleared numerators are unchanged by ·α_H
            Side::Form => g.clone(),
        })
        .collect();
    let injective = lifted.iter().all(|g| !g.is_zero() && e.middle.satisfies(g));
    let mut composite_zero = true;
    for g in &lifted {
        if !restrict(t, side, p, g)?.is_zero() {
            composite_zero = false;
        }
    }
    let image_in_target = e.image.generators().iter().all(|g| e.target.satisfies(g));
    let lo = match side {
        Side::Derivation => 0,
        Side::Form => -t.total() - 1,
    };
    let mut violations = Vec::new();
    let mut failures = Vec::new();
    let mut cokernel = Vec::new();
    for d in lo..=dmax {
        let hm = e.middle.hilbert(d);
        let hc = e.image.hilbert(d);
        if hm < hc || hm - hc != e.first.hilbert(d - 1) {
            failures.push(d);
        }
        if image_in_target {
            let c = e.target.hilbert(d) - hc;
            if c != 0 {
                cokernel.push((d, c));
            }
        }
    }
    let middle_exact = failures.is_empty();
    let name = format!("{side} sequence of {} at p = {p}", t.describe());
    if !injective {
        violations.push(format!("{name}: multiplication by alpha_H leaves the middle module"));
    }
    if !composite_zero {
        violations.push(format!("{name}: composite is nonzero"));
    }
    if !middle_exact {
        violations.push(format!("{name}: not exact in the middle in degrees {failures:?}"));
    }
    if !image_in_target {
        violations.push(format!("{name}: restriction leaves the target module"));
    }
    let surjective = image_in_target && cokernel.is_empty() && generators_in(&e.target.module, &e.image);
    Ok(SequenceReport {
        triple: t.describe(),
        side,
        p,
        injective,
        composite_zero,
        middle_exact,
        image_in_target,
        degrees: (lo, dmax),
        cokernel_hilbert: cokernel,
        surjective,
        violations,
    })
}

/// Every minimal generator of the target lies in the restriction image.
pub fn is_surjective(t: &EulerTriple, side: Side, p: usize) -> Result<bool> {
    let e = euler_image(t, side, p)?;
    Ok(generators_in(&e.target.module, &e.image))
}

/// Exterior degrees covered by the surjection checks.
pub fn checked_degrees(l: usize) -> Vec<usize> {
    if l <= 3 {
        (0..l).collect()
    } else {
        let mut v = vec![1, l - 1];
        v.dedup();
        v
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct FstReport {
    pub checked: usize,
    pub skipped: Vec<String>,
    pub violations: Vec<String>,
}

impl FstReport {
    pub fn merge(&mut self, other: FstReport) {
        self.checked += other.checked;
        self.skipped.extend(other.skipped);
        self.violations.extend(other.violations);
    }
}

/// Surjectivity of `ρ^H` when `(A,m')` is free and of `i_H^*` when `(A,m)` is free.
pub fn fst_verify_one(t: &EulerTriple) -> Result<FstReport> {
    let mut r = FstReport::default();
    let a = &t.arrangement;
    for (side, hyp) in [
        (Side::Derivation, is_free(a, &t.mprime)?),
        (Side::Form, is_free(a, &t.multiplicity)?),
    ] {
        if !hyp {
            r.skipped.push(format!("{side} side of {}: hypothesis fails", t.describe()));
            continue;
        }
        for p in checked_degrees(t.dim()) {
            r.checked += 1;
            if !is_surjective(t, side, p)? {
                r.violations.push(format!(
                    "{side} restriction of {} at p = {p} is not surjective",
                    t.describe()
                ));
            }
        }
    }
    Ok(r)
}

pub fn fst_verify(triples: &[EulerTriple]) -> Result<FstReport> {
    let mut r = FstReport::default();
    for t in triples {
        r.merge(fst_verify_one(t)?);
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneralizedEulerReport {
    pub multiplicity: Vec<i64>,
    #[serde(serialize_with = "numbering::one")]
    pub hyperplane: usize,
    pub side: Side,
    /// `(A, gm - δ_H)` free in the generalized sense.
    pub hypothesis: bool,
    pub right_exact: bool,
    pub sequence: SequenceReport,
    pub violations: Vec<String>,
}

/// `D(A, gm-δ_H) → D(A, gm) → D(A^H, ·)` for a sign-uniform `gm`. Nonpositive
/// multiplicities, including zero, are handled through the form sequence of
/// `M = -gm + δ_H`.
pub fn generalized_euler(a: &Arrangement, gm: &Multiplicity, h: usize, dmax: i64) -> Result<GeneralizedEulerReport> {
    a.check_index(h)?;
    if gm.len() != a.len() {
        return Err(Error::Input(format!("{} multiplicities for {} hyperplanes", gm.len(), a.len())));
    }
    let (side, t, hypothesis) = if gm.is_nonpositive() {
        let big = gm.negated().shifted(h, 1)?;
        let t = EulerTriple::new(a, &big, h)?;
        let hyp = module_freeness(&generalized_log_module(a, &big.negated())?)?.free;
        (Side::Form, t, hyp)
    } else if gm.is_nonnegative() {
        if gm.get(h) < 1 {
            return Err(Error::Input(format!("hyperplane {} needs positive multiplicity", h + 1)));
        }
        let t = EulerTriple::new(a, gm, h)?;
        let hyp = is_free(a, &t.mprime)?;
        (Side::Derivation, t, hyp)
    } else {
        return Err(Error::Input(format!("multiplicity {gm} mixes signs")));
    };
    let sequence = euler_sequence(&t, side, 1, dmax)?;
    let mut violations = sequence.violations.clone();
    if hypothesis && !sequence.surjective {
        violations.push(format!(
            "generalized sequence for {gm} at H{} is not right exact although the deletion is free",
            h + 1
        ));
    }
    Ok(GeneralizedEulerReport {
        multiplicity: gm.values().to_vec(),
        hyperplane: h,
        side,
        hypothesis,
        right_exact: sequence.surjective,
        sequence,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn boolean_plane_sequences() {
        let t = EulerTriple::new(&b2(), &Multiplicity::new(vec![2, 1]).unwrap(), 0).unwrap();
        for side in [Side::Derivation, Side::Form] {
            let r = euler_sequence(&t, side, 1, 6).unwrap();
            assert!(r.healthy(), "{r:?}");
            assert!(r.surjective, "{r:?}");
        }
        assert!(fst_verify_one(&t).unwrap().violations.is_empty());
    }

    #[test]
    fn generalized_routes() {
        let r = generalized_euler(&b2(), &Multiplicity::ones(2), 0, 5).unwrap();
        assert_eq!(r.side, Side::Derivation);
        assert!(r.right_exact && r.violations.is_empty());
        let r = generalized_euler(&b2(), &Multiplicity::new(vec![0, 0]).unwrap(), 0, 5).unwrap();
        assert_eq!(r.side, Side::Form);
        assert!(r.hypothesis && r.right_exact && r.violations.is_empty());
        let r = generalized_euler(&b2(), &Multiplicity::new(vec![-1, -2]).unwrap(), 1, 5).unwrap();
        assert!(r.violations.is_empty(), "{r:?}");
    }
}

use super::triple::EulerTriple;
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::Result;
use crate::exact_algebra::{free_resolution, GradedPresentation};
use crate::log_modules::{derivation_module, exponents, form_module, freeness, LogKind, LogModule};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Free,
    #[serde(rename = "SPOG")]
    Spog,
    #[serde(rename = "DualSPOG")]
    DualSpog,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpogClassification {
    pub verdict: Verdict,
    /// Degrees of the minimal generators, in generator order.
    pub generator_degrees: Vec<i64>,
    /// Exponents of a free module (negated degrees for forms).
    pub exponents: Option<Vec<i64>>,
    pub po_exp: Option<Vec<i64>>,
    pub level: Option<i64>,
    pub level_index: Option<usize>,
    /// All generator positions where the relation has a nonzero linear coefficient.
    pub admissible_levels: Vec<usize>,
    /// Graded Betti numbers as `(degree, count)` per homological position.
    pub betti: Vec<Vec<(i64, usize)>>,
}

impl SpogClassification {
    /// `(level, other degrees sorted)` for an admissible level position.
    pub fn split_at(&self, k: usize) -> (i64, Vec<i64>) {
        let mut rest: Vec<i64> = self
            .generator_degrees
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &d)| d)
            .collect();
        rest.sort_unstable();
        (self.generator_degrees[k], rest)
    }

    pub fn is_spog(&self) -> bool {
        matches!(self.verdict, Verdict::Spog | Verdict::DualSpog)
    }
}

/// Shape of the minimal free resolution of a rank-`ℓ` module of 1-vectors.
pub fn spog_classify(m: &LogModule) -> Result<SpogClassification> {
    let l = m.nvars();
    let pres = GradedPresentation::of_submodule(&m.module);
    let res = free_resolution(&pres, true)?;
    let degs = res.modules[0].shifts().to_vec();
    let betti = res
        .graded_betti()
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    let mut out = SpogClassification {
        verdict: Verdict::Other,
        generator_degrees: degs.clone(),
        exponents: None,
        po_exp: None,
        level: None,
        level_index: None,
        admissible_levels: Vec::new(),
        betti,
    };
    if degs.len() == l && res.length() == 0 {
        out.verdict = Verdict::Free;
        let mut e: Vec<i64> = match m.kind {
            LogKind::Form => degs.iter().map(|d| -d).collect(),
            LogKind::Derivation => degs.clone(),
        };
        e.sort_unstable();
        out.exponents = Some(e);
        return Ok(out);
    }
    if degs.len() == l + 1 && res.length() == 1 && res.maps[0].len() == 1 {
        let rel = &res.maps[0][0];
        out.admissible_levels = (0..=l)
            .filter(|&k| {
                let c = rel.component(k);
                !c.is_zero() && c.degree() == Some(1)
            })
            .collect();
        if let Some(&k) = out.admissible_levels.iter().max_by_key(|&&k| (degs[k], k)) {
            let (level, rest) = out.split_at(k);
            out.verdict = match m.kind {
                LogKind::Form => Verdict::DualSpog,
                LogKind::Derivation => Verdict::Spog,
            };
            out.level = Some(level);
            out.level_index = Some(k);
            out.po_exp = Some(rest);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletionPart {
    pub applies: bool,
    pub classification: Option<SpogClassification>,
    pub expected_degrees: Option<Vec<i64>>,
    pub expected_level: Option<i64>,
    pub passes: bool,
}

impl DeletionPart {
    fn skipped() -> Self {
        DeletionPart {
            applies: false,
            classification: None,
            expected_degrees: None,
            expected_level: None,
            passes: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeletionTheoremReport {
    pub triple: String,
    pub m_star_total: i64,
    /// `(A,m)` free: `D(A,m')` is free or SPOG.
    pub derivations: DeletionPart,
    /// `(A,m')` free: `Ω¹(A,m)` is free or dual SPOG.
    pub forms: DeletionPart,
    pub violations: Vec<String>,
}

fn some_split_matches(c: &SpogClassification, level: i64, rest: &[i64]) -> bool {
    c.admissible_levels.iter().any(|&k| {
        let (lv, r) = c.split_at(k);
        lv == level && r == rest
    })
}

/// Both halves of the free-deletion classification for one triple, checked exactly.
pub fn deletion_theorem_verify(t: &EulerTriple) -> Result<DeletionTheoremReport> {
    let a = &t.arrangement;
    let total = t.total();
    let mstar = t.m_star().total();
    let mut violations = Vec::new();

    let fm = freeness(a, &t.multiplicity)?;
    let derivations = if let Some(exp) = fm.exponents {
        let c = spog_classify(&derivation_module(a, &t.mprime, 1)?)?;
        let level = total - 1 - mstar;
        let passes = match c.verdict {
            Verdict::Free => true,
            Verdict::Spog => some_split_matches(&c, level, &exp),
            _ => false,
        };
        if !passes {
            violations.push(format!(
                "D(A, m') for {} is {:?} with degrees {:?}; expected free or SPOG with POexp {exp:?} and level {level}",
                t.describe(),
                c.verdict,
                c.generator_degrees
            ));
        }
        DeletionPart {
            applies: true,
            classification: Some(c),
            expected_degrees: Some(exp),
            expected_level: Some(level),
            passes,
        }
    } else {
        DeletionPart::skipped()
    };

    let fmp = freeness(a, &t.mprime)?;
    let forms = if let Some(exp) = fmp.exponents {
        let c = spog_classify(&form_module(a, &t.multiplicity, 1)?)?;
        let level = -total + mstar;
        let mut rest: Vec<i64> = exp.iter().map(|e| -e).collect();
        rest.sort_unstable();
        let passes = match c.verdict {
            Verdict::Free => true,
            Verdict::DualSpog => some_split_matches(&c, level, &rest),
            _ => false,
        };
        if !passes {
            violations.push(format!(
                "Omega^1(A, m) for {} is {:?} with degrees {:?}; expected free or dual SPOG with degrees {rest:?} and level {level}",
                t.describe(),
                c.verdict,
                c.generator_degrees
            ));
        }
        DeletionPart {
            applies: true,
            classification: Some(c),
            expected_degrees: Some(rest),
            expected_level: Some(level),
            passes,
        }
    } else {
        DeletionPart::skipped()
    };

    Ok(DeletionTheoremReport {
        triple: t.describe(),
        m_star_total: mstar,
        derivations,
        forms,
        violations,
    })
}

/// `Σ_X d_1^X d_2^X` over rank-2 flats, with the exponents of the rank-2 localizations.
pub fn b2_multi(a: &Arrangement, m: &Multiplicity) -> Result<i64> {
    let lat = a.lattice();
    let mut b2 = 0;
    for (_, x) in lat.of_rank(2) {
        let e = a.essentialize(&x.members);
        let mx = m.restrict_to(&x.members);
        let exp = exponents(&e.arrangement, &mx)?;
        b2 += exp[0] * exp[1];
    }
    Ok(b2)
}

#[derive(Clone, Debug, Serialize)]
pub struct B2Report {
    pub verdict: Verdict,
    pub d: Vec<i64>,
    pub level: i64,
    pub total: i64,
    pub b2: i64,
    pub expected_total: i64,
    pub expected_b2: i64,
    pub passes: bool,
}

/// Degree identities of a SPOG module `D(A,m)` or a dual SPOG `Ω¹(A,m)`;
/// `total = |m|` and `b2 = b₂(A,m)` of the multiarrangement the module belongs to.
pub fn b2_identity_check(c: &SpogClassification, total: i64, b2: i64) -> Option<B2Report> {
    let (level, po) = (c.level?, c.po_exp.clone()?);
    let (d, level) = match c.verdict {
        Verdict::Spog => (po, level),
        Verdict::DualSpog => {
            let mut d: Vec<i64> = po.iter().map(|x| -x).collect();
            d.sort_unstable();
            (d, -level)
        }
        _ => return None,
    };
    let s: i64 = d.iter().sum();
    let mut pairs = 0;
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            pairs += d[i] * d[j];
        }
    }
    let (expected_total, expected_b2) = match c.verdict {
        Verdict::Spog => (s - 1, pairs - s + level + 1),
        _ => (1 + s, pairs + s - level + 2),
    };
    Some(B2Report {
        verdict: c.verdict,
        d,
        level,
        total,
        b2,
        expected_total,
        expected_b2,
        passes: expected_total == total && expected_b2 == b2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_b2() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(b2_multi(&b2, &Multiplicity::ones(2)).unwrap(), 1);
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(b2_multi(&g3, &Multiplicity::ones(3)).unwrap(), 2);
    }

    #[test]
    fn boolean_deletion() {
        let a = Arrangement::from_normals(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = EulerTriple::new(&a, &Multiplicity::new(vec![2, 1, 1]).unwrap(), 0).unwrap();
        let r = deletion_theorem_verify(&t).unwrap();
        assert!(r.violations.is_empty());
        let d = r.derivations.classification.unwrap();
        assert_eq!(d.verdict, Verdict::Free);
        assert_eq!(d.exponents, Some(vec![1, 1, 1]));
        let w = r.forms.classification.unwrap();
        assert_eq!(w.verdict, Verdict::Free);
        assert_eq!(w.exponents, Some(vec![1, 1, 2]));
    }
}

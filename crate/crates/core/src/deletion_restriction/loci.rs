use super::numbering;
use super::sequence::{is_surjective, Side};
use super::triple::EulerTriple;
use crate::arrangement::{Arrangement, Flat, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::{annihilator, ext_module, flat_in_support, GradedPresentation};
use crate::log_modules::{derivation_module, form_module, is_free};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatRecord {
    #[serde(serialize_with = "numbering::all")]
    pub members: Vec<usize>,
    pub rank: usize,
    pub dim: usize,
}

impl FlatRecord {
    fn of(f: &Flat) -> Self {
        FlatRecord {
            members: f.members.clone(),
            rank: f.rank,
            dim: f.dim(),
        }
    }

    /// Subspace inclusion `self ⊆ other` for flats of one arrangement.
    pub fn inside(&self, other: &FlatRecord) -> bool {
        other.members.iter().all(|h| self.members.binary_search(h).is_ok())
    }
}

/// `∅`, `{0}` or `k-dimensional`, from the largest flat of the set.
pub fn locus_descriptor(flats: &[FlatRecord]) -> String {
    match flats.iter().map(|f| f.dim).max() {
        None => "∅".into(),
        Some(0) => "{0}".into(),
        Some(k) => format!("{k}-dimensional"),
    }
}

/// Flats of rank at least 3 whose localization is not free.
pub fn nonfree_locus(a: &Arrangement, m: &Multiplicity) -> Result<Vec<FlatRecord>> {
    if m.len() != a.len() {
        return Err(Error::Input(format!("{} multiplicities for {} hyperplanes", m.len(), a.len())));
    }
    let lat = a.lattice();
    let mut out: Vec<FlatRecord> = Vec::new();
    for f in lat.flats.iter().filter(|f| f.rank >= 3) {
        let rec = FlatRecord::of(f);
        // localizations of free arrangements are free
        let below = out.iter().any(|g| rec.inside(g));
        if below || !local_free(a, m, f)? {
            out.push(rec);
        }
    }
    Ok(out)
}

fn local_free(a: &Arrangement, m: &Multiplicity, f: &Flat) -> Result<bool> {
    let e = a.essentialize(&f.members);
    is_free(&e.arrangement, &m.restrict_to(&f.members))
}

/// The localized triple `(A_X, m_X, H)` in essential coordinates.
pub fn local_triple(t: &EulerTriple, f: &Flat) -> Result<EulerTriple> {
    let e = t.arrangement.essentialize(&f.members);
    let pos = e
        .position(t.hyperplane)
        .ok_or_else(|| Error::Input("flat does not lie in H".into()))?;
    EulerTriple::new(&e.arrangement, &t.multiplicity.restrict_to(&f.members), pos)
}

/// Flats `X ⊆ H` of rank at least 2, the candidates for the exceptional sets.
pub fn flats_in(t: &EulerTriple) -> Vec<Flat> {
    t.arrangement
        .lattice()
        .flats
        .into_iter()
        .filter(|f| f.rank >= 2 && f.contains_hyperplane(t.hyperplane))
        .collect()
}

fn exceptional(t: &EulerTriple, side: Side) -> Result<Vec<FlatRecord>> {
    let mut out = Vec::new();
    for f in flats_in(t) {
        if !is_surjective(&local_triple(t, &f)?, side, 1)? {
            out.push(FlatRecord::of(&f));
        }
    }
    Ok(out)
}

/// `ND(A,m,H)`: flats of `H` where the localized derivation restriction is not onto.
pub fn nd_set(t: &EulerTriple) -> Result<Vec<FlatRecord>> {
    exceptional(t, Side::Derivation)
}

/// `NΩ(A,m,H)`, the same for forms.
pub fn nomega_set(t: &EulerTriple) -> Result<Vec<FlatRecord>> {
    exceptional(t, Side::Form)
}

/// Codimension inside `H`; `None` stands for the empty set.
pub fn codim_in_h(flats: &[FlatRecord]) -> Option<usize> {
    flats.iter().map(|f| f.rank - 1).min()
}

#[derive(Clone, Debug, Serialize)]
pub struct ExceptionalReport {
    #[serde(serialize_with = "numbering::one")]
    pub hyperplane: usize,
    pub nf: Vec<FlatRecord>,
    pub nf_deletion: Vec<FlatRecord>,
    pub nd: Vec<FlatRecord>,
    pub nomega: Vec<FlatRecord>,
    pub c_d: Option<usize>,
    pub c_omega: Option<usize>,
}

pub fn exceptional_report(t: &EulerTriple) -> Result<ExceptionalReport> {
    let nd = nd_set(t)?;
    let nomega = nomega_set(t)?;
    Ok(ExceptionalReport {
        hyperplane: t.hyperplane,
        nf: nonfree_locus(&t.arrangement, &t.multiplicity)?,
        nf_deletion: nonfree_locus(&t.arrangement, &t.mprime)?,
        c_d: codim_in_h(&nd),
        c_omega: codim_in_h(&nomega),
        nd,
        nomega,
    })
}

fn ext1_support_flats(flats: &[Flat], pres: &GradedPresentation) -> Result<Vec<FlatRecord>> {
    let ext = ext_module(pres, 1)?;
    let ann = annihilator(&ext.presentation()?)?;
    Ok(flats
        .iter()
        .filter(|f| flat_in_support(&ann, &f.basis_scalars()))
        .map(FlatRecord::of)
        .collect())
}

fn upward_closed(set: &[FlatRecord], candidates: &[Flat]) -> bool {
    candidates.iter().all(|f| {
        let r = FlatRecord::of(f);
        !set.iter().any(|g| r.inside(g)) || set.contains(&r)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ContainmentReport {
    pub exceptional: ExceptionalReport,
    pub nd_in_nf_deletion: bool,
    pub nomega_in_nf: bool,
    pub codimension_at_least_two: bool,
    /// `Some` when `(A,m)` is free: ND equals the flats in `supp Ext¹(Ω¹(A,m'),S)`.
    pub nd_equals_ext_support: Option<bool>,
    /// `Some` when `(A,m')` is free: NΩ equals the flats in `supp Ext¹(D(A,m),S)`.
    pub nomega_equals_ext_support: Option<bool>,
    /// Empirical only.
    pub nd_upward_closed: bool,
    pub nomega_upward_closed: bool,
    pub violations: Vec<String>,
}

pub fn containment_check(t: &EulerTriple) -> Result<ContainmentReport> {
    let ex = exceptional_report(t)?;
    let a = &t.arrangement;
    let covered = |set: &[FlatRecord], nf: &[FlatRecord]| set.iter().all(|x| nf.iter().any(|z| x.inside(z)));
    let nd_in = covered(&ex.nd, &ex.nf_deletion);
    let nomega_in = covered(&ex.nomega, &ex.nf);
    let codim_ok = ex.nd.iter().chain(&ex.nomega).all(|f| f.rank >= 3);
    let cands = flats_in(t);
    let nd_eq = if is_free(a, &t.multiplicity)? {
        let pres = GradedPresentation::of_submodule(&form_module(a, &t.mprime, 1)?.module);
        Some(ext1_support_flats(&cands, &pres)? == ex.nd)
    } else {
        None
    };
    let nomega_eq = if is_free(a, &t.mprime)? {
        let pres = GradedPresentation::of_submodule(&derivation_module(a, &t.multiplicity, 1)?.module);
        Some(ext1_support_flats(&cands, &pres)? == ex.nomega)
    } else {
        None
    };
    let mut violations = Vec::new();
    let name = t.describe();
    if !nd_in {
        violations.push(format!("ND of {name} is not inside NF(A, m')"));
    }
    if !nomega_in {
        violations.push(format!("NOmega of {name} is not inside NF(A, m)"));
    }
    if !codim_ok {
        violations.push(format!("an exceptional flat of {name} has codimension below 2 in H"));
    }
    if nd_eq == Some(false) {
        violations.push(format!("ND of {name} differs from the support of Ext^1(Omega^1(A, m'))"));
    }
    if nomega_eq == Some(false) {
        violations.push(format!("NOmega of {name} differs from the support of Ext^1(D(A, m))"));
    }
    Ok(ContainmentReport {
        nd_upward_closed: upward_closed(&ex.nd, &cands),
        nomega_upward_closed: upward_closed(&ex.nomega, &cands),
        exceptional: ex,
        nd_in_nf_deletion: nd_in,
        nomega_in_nf: nomega_in,
        codimension_at_least_two: codim_ok,
        nd_equals_ext_support: nd_eq,
        nomega_equals_ext_support: nomega_eq,
        violations,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FreeDeletion {
    #[serde(serialize_with = "numbering::one")]
    pub hyperplane: usize,
    pub nomega: Vec<FlatRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NomegaAgreement {
    /// Hyperplanes whose deletion is free, with their Ω-exceptional sets.
    pub free_deletions: Vec<FreeDeletion>,
    pub agree: bool,
}

/// All free deletions of `(A,m)` yield the same Ω-exceptional set.
pub fn nomega_agreement(a: &Arrangement, m: &Multiplicity) -> Result<NomegaAgreement> {
    let mut free_deletions = Vec::new();
    for h in 0..a.len() {
        if m.get(h) < 1 || !is_free(a, &m.minus_delta(h)?)? {
            continue;
        }
        let t = EulerTriple::new(a, m, h)?;
        free_deletions.push(FreeDeletion {
            hyperplane: h,
            nomega: nomega_set(&t)?,
        });
    }
    let agree = free_deletions.windows(2).all(|w| w[0].nomega == w[1].nomega);
    Ok(NomegaAgreement { free_deletions, agree })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert_eq!(locus_descriptor(&[]), "∅");
        let z = FlatRecord { members: vec![0, 1, 2], rank: 3, dim: 0 };
        assert_eq!(locus_descriptor(&[z.clone()]), "{0}");
        let l = FlatRecord { members: vec![0, 1], rank: 3, dim: 1 };
        assert_eq!(locus_descriptor(&[z.clone(), l.clone()]), "1-dimensional");
        assert!(z.inside(&l));
        assert!(!l.inside(&z));
    }

    #[test]
    fn boolean_loci_are_empty() {
        let a = Arrangement::from_normals(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = EulerTriple::new(&a, &Multiplicity::new(vec![2, 1, 3]).unwrap(), 2).unwrap();
        let r = containment_check(&t).unwrap();
        assert!(r.violations.is_empty(), "{r:?}");
        assert!(r.exceptional.nd.is_empty() && r.exceptional.nomega.is_empty());
        assert_eq!(r.exceptional.c_d, None);
    }
}

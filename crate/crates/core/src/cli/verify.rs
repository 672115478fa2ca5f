use super::corpus::{b2, bool3, g3, CorpusItem};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::deletion_restriction::{
    addition_equiv_check, b2_identity_check, b2_multi, checked_degrees, containment_check, deletion_theorem_verify,
    euler_sequence, fst_verify_one, generalized_euler, nomega_agreement, B2Report, EulerTriple, Side,
    SpogClassification, Verdict,
};
use crate::error::Result;
use crate::log_modules::{
    brute_force_degree, derivation_module, duality_check, freeness, generalized_log_module, log_contains,
};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub checked: usize,
    pub skipped: usize,
    pub violations: Vec<String>,
    /// Free-form counters worth reporting next to the verdict.
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn passes(&self) -> bool {
        self.violations.is_empty() && self.checked > 0
    }

    pub fn merge(&mut self, other: Outcome) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        self.notes.extend(other.notes);
    }

    fn error(&mut self, context: &str, e: crate::Error) {
        self.violations.push(format!("{context}: {e}"));
    }
}

fn gather<T: Sync>(items: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) -> Outcome {
    let parts: Vec<Outcome> = items.par_iter().map(f).collect();
    let mut out = Outcome::default();
    for p in parts {
        out.merge(p);
    }
    out
}

/// Triples `(A, m, H)` with `m(H) ≥ 1` of an item.
pub fn triples(item: &CorpusItem) -> Vec<EulerTriple> {
    if item.arrangement.dim() < 2 {
        return Vec::new();
    }
    (0..item.arrangement.len())
        .filter(|&h| item.multiplicity.get(h) >= 1)
        .filter_map(|h| EulerTriple::new(&item.arrangement, &item.multiplicity, h).ok())
        .collect()
}

fn dmax_for(m: &Multiplicity) -> i64 {
    m.total() + 3
}

/// `m ≡ 1` restricts to `m* ≡ 1`.
pub fn euler_ones(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        if !item.is_simple() {
            return o;
        }
        for t in triples(item) {
            o.checked += 1;
            if t.m_star().values().iter().any(|&v| v != 1) {
                o.violations
                    .push(format!("{} {}: m* = {}", item.name, t.describe(), t.m_star()));
            }
        }
        o
    })
}

pub fn free_surjection(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        for t in triples(item) {
            match fst_verify_one(&t) {
                Ok(r) => {
                    o.checked += r.checked;
                    o.skipped += r.skipped.len();
                    o.violations
                        .extend(r.violations.into_iter().map(|v| format!("{}: {v}", item.name)));
                }
                Err(e) => o.error(&format!("{} {}", item.name, t.describe()), e),
            }
        }
        o
    })
}

/// A SPOG or dual SPOG module found while checking the deletion theorem.
#[derive(Clone, Debug, Serialize)]
pub struct SpogInstance {
    pub context: String,
    pub classification: SpogClassification,
    pub total: i64,
    pub b2: i64,
}

pub fn deletion_theorem(items: &[CorpusItem]) -> (Outcome, Vec<SpogInstance>) {
    let parts: Vec<(Outcome, Vec<SpogInstance>)> = items
        .par_iter()
        .map(|item| {
            let mut o = Outcome::default();
            let mut found = Vec::new();
            for t in triples(item) {
                let ctx = format!("{} {}", item.name, t.describe());
                let r = match deletion_theorem_verify(&t) {
                    Ok(r) => r,
                    Err(e) => {
                        o.error(&ctx, e);
                        continue;
                    }
                };
                for (part, label, m) in [
                    (&r.derivations, "D(A, m')", &t.mprime),
                    (&r.forms, "Omega^1(A, m)", &t.multiplicity),
                ] {
                    if !part.applies {
                        o.skipped += 1;
                        continue;
                    }
                    o.checked += 1;
                    let Some(c) = &part.classification else { continue };
                    if c.is_spog() {
                        match b2_multi(&t.arrangement, m) {
                            Ok(b2) => found.push(SpogInstance {
                                context: format!("{label} of {ctx}"),
                                classification: c.clone(),
                                total: m.total(),
                                b2,
                            }),
                            Err(e) => o.error(&ctx, e),
                        }
                    }
                }
                o.violations
                    .extend(r.violations.into_iter().map(|v| format!("{}: {v}", item.name)));
            }
            (o, found)
        })
        .collect();
    let mut out = Outcome::default();
    let mut all = Vec::new();
    for (o, f) in parts {
        out.merge(o);
        all.extend(f);
    }
    let spog = all.iter().filter(|s| s.classification.verdict == Verdict::Spog).count();
    out.notes.push(format!("{spog} SPOG and {} dual SPOG instances", all.len() - spog));
    (out, all)
}

pub fn b2_identities(instances: &[SpogInstance]) -> (Outcome, Vec<B2Report>) {
    let mut o = Outcome::default();
    let mut reports = Vec::new();
    let mut failed = [0usize; 2];
    for s in instances {
        let Some(r) = b2_identity_check(&s.classification, s.total, s.b2) else {
            o.violations
                .push(format!("{}: no level data for the identity check", s.context));
            continue;
        };
        o.checked += 1;
        if !r.passes {
            failed[usize::from(r.verdict == Verdict::DualSpog)] += 1;
            o.violations.push(format!(
                "{}: {:?} with d = {:?}, level {}: |m| = {} (expected {}), b2 = {} (expected {})",
                s.context, r.verdict, r.d, r.level, r.total, r.expected_total, r.b2, r.expected_b2
            ));
        }
        reports.push(r);
    }
    o.notes.push(format!(
        "identity failures: {} SPOG, {} dual SPOG",
        failed[0], failed[1]
    ));
    (o, reports)
}

pub fn addition(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        if !item.is_simple() || item.arrangement.dim() < 2 {
            return o;
        }
        for h in 0..item.arrangement.len() {
            match addition_equiv_check(&item.arrangement, h) {
                Ok(r) if r.skipped.is_some() => o.skipped += 1,
                Ok(r) => {
                    o.checked += 1;
                    if !r.passes {
                        o.violations.push(format!(
                            "{} H{}: predicate {:?} but free {:?}",
                            item.name,
                            h + 1,
                            r.predicate,
                            r.free
                        ));
                    }
                }
                Err(e) => o.error(&format!("{} H{}", item.name, h + 1), e),
            }
        }
        o
    })
}

/// Exterior degrees compared under duality: all for `ℓ ≤ 3`, `{1, 3}` for `ℓ = 4`.
pub fn duality_degrees(l: usize) -> Vec<usize> {
    match l {
        0..=3 => (0..=l).collect(),
        4 => vec![1, 3],
        _ => Vec::new(),
    }
}

pub fn duality(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        let (a, m) = (&item.arrangement, &item.multiplicity);
        for p in duality_degrees(a.dim()) {
            match duality_check(a, m, p, dmax_for(m)) {
                Ok(r) => {
                    o.checked += 1;
                    if !r.passes() {
                        o.violations.push(format!("{}: duality fails at p = {p}: {r:?}", item.name));
                    }
                }
                Err(e) => o.error(&format!("{} p = {p}", item.name), e),
            }
        }
        o
    })
}

pub fn exactness(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        for t in triples(item) {
            for side in [Side::Derivation, Side::Form] {
                for p in checked_degrees(t.dim()) {
                    match euler_sequence(&t, side, p, dmax_for(&t.multiplicity)) {
                        Ok(r) => {
                            o.checked += 1;
                            o.violations
                                .extend(r.violations.into_iter().map(|v| format!("{}: {v}", item.name)));
                        }
                        Err(e) => o.error(&format!("{} {} {side} p = {p}", item.name, t.describe()), e),
                    }
                }
            }
        }
        o
    })
}

pub fn loci(items: &[CorpusItem]) -> Outcome {
    let mut out = gather(items, |item| {
        let mut o = Outcome::default();
        if item.arrangement.dim() < 3 {
            return o;
        }
        for t in triples(item) {
            match containment_check(&t) {
                Ok(r) => {
                    o.checked += 1;
                    o.violations
                        .extend(r.violations.into_iter().map(|v| format!("{}: {v}", item.name)));
                }
                Err(e) => o.error(&format!("{} {}", item.name, t.describe()), e),
            }
        }
        o
    });
    for item in items.iter().filter(|i| i.name == "EX10") {
        match nomega_agreement(&item.arrangement, &item.multiplicity) {
            Ok(r) => {
                out.checked += 1;
                out.notes.push(format!(
                    "EX10: {} free deletions share one NOmega set: {}",
                    r.free_deletions.len(),
                    r.agree
                ));
                if !r.agree {
                    out.violations.push("EX10: free deletions give different NOmega sets".into());
                }
            }
            Err(e) => out.error("EX10 NOmega agreement", e),
        }
    }
    out
}

/// Gröbner Hilbert functions against dense linear algebra, and the two freeness tests.
pub fn oracle(items: &[CorpusItem]) -> Outcome {
    gather(items, |item| {
        let mut o = Outcome::default();
        let (a, m) = (&item.arrangement, &item.multiplicity);
        // disagreement between resolution length and the determinant is an error here
        match freeness(a, m) {
            Ok(_) => o.checked += 1,
            Err(e) => o.error(&item.name, e),
        }
        if a.dim() > 3 {
            return o;
        }
        let module = match derivation_module(a, m, 1) {
            Ok(x) => x,
            Err(e) => {
                o.error(&item.name, e);
                return o;
            }
        };
        for d in 0..=6 {
            match brute_force_degree(a, m, 1, d) {
                Ok(piece) => {
                    o.checked += 1;
                    let h = module.hilbert(d);
                    if h != piece.dimension as u64 {
                        o.violations.push(format!(
                            "{}: HF(D, {d}) = {h} but the dense count is {}",
                            item.name, piece.dimension
                        ));
                    }
                }
                Err(e) => o.error(&format!("{} d = {d}", item.name), e),
            }
        }
        o
    })
}

/// Sign-uniform multiplicities with entries in `-2..=2`.
fn sign_uniform(n: usize) -> Vec<Multiplicity> {
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let mut v = vec![0i64; n];
        loop {
            if sign == 1 || v.iter().any(|&x| x != 0) {
                out.push(Multiplicity::new(v.iter().map(|x| sign * x).collect()).unwrap());
            }
            let mut k = 0;
            while k < n && v[k] == 2 {
                v[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            v[k] += 1;
        }
    }
    out
}

pub fn generalized() -> Outcome {
    let mut o = Outcome::default();
    let plane = b2();
    let ladder: Vec<Multiplicity> = [[-1, 0], [0, 0], [1, 0]]
        .iter()
        .map(|v| Multiplicity::new(v.to_vec()).unwrap())
        .collect();
    for w in ladder.windows(2) {
        let r = generalized_log_module(&plane, &w[0])
            .and_then(|big| Ok((big, generalized_log_module(&plane, &w[1])?)))
            .and_then(|(big, small)| log_contains(&big, &small));
        match r {
            Ok(true) => o.checked += 1,
            Ok(false) => o.violations.push(format!("B2: module({}) does not contain module({})", w[0], w[1])),
            Err(e) => o.error("B2 ladder", e),
        }
    }
    let cases: Vec<(&str, Arrangement)> = vec![("B2", b2()), ("G3", g3()), ("BOOL3", bool3())];
    let jobs: Vec<(&str, Arrangement, Multiplicity, usize)> = cases
        .iter()
        .flat_map(|(name, a)| {
            sign_uniform(a.len()).into_iter().flat_map(move |gm| {
                (0..a.len())
                    .filter(|&h| !gm.is_nonnegative() || gm.is_nonpositive() || gm.get(h) >= 1)
                    .map(|h| (*name, a.clone(), gm.clone(), h))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let mut hyp = 0;
    let parts: Vec<_> = jobs
        .par_iter()
        .map(|(name, a, gm, h)| (name, gm, h, generalized_euler(a, gm, *h, gm.total().abs() + 3)))
        .collect();
    for (name, gm, h, r) in parts {
        match r {
            Ok(r) => {
                o.checked += 1;
                hyp += usize::from(r.hypothesis);
                o.violations
                    .extend(r.violations.into_iter().map(|v| format!("{name}: {v}")));
            }
            Err(e) => o.error(&format!("{name} gm = {gm} H{}", h + 1), e),
        }
    }
    o.notes.push(format!("{hyp} sequences with a free deletion"));
    o
}

/// Every verifier that applies to the items, keyed by name.
pub fn verify_all(items: &[CorpusItem]) -> Result<Vec<(&'static str, Outcome)>> {
    let (deletion, instances) = deletion_theorem(items);
    let (b2, _) = b2_identities(&instances);
    Ok(vec![
        ("euler_multiplicity", euler_ones(items)),
        ("free_surjection", free_surjection(items)),
        ("deletion_theorem", deletion),
        ("b2_identities", b2),
        ("addition", addition(items)),
        ("duality", duality(items)),
        ("exactness", exactness(items)),
        ("loci", loci(items)),
        ("oracle", oracle(items)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_uniform_count() {
        // 27 nonnegative vectors plus 26 nonzero nonpositive ones
        assert_eq!(sign_uniform(3).len(), 53);
    }

    #[test]
    fn small_items_pass() {
        let items = vec![
            CorpusItem::new("G3", g3(), Multiplicity::new(vec![2, 1, 1]).unwrap()),
            CorpusItem::simple("BOOL3", bool3()),
        ];
        for (name, o) in verify_all(&items).unwrap() {
            assert!(o.violations.is_empty(), "{name}: {o:?}");
        }
    }
}

use super::corpus::ex10;
use crate::arrangement::Multiplicity;
use crate::deletion_restriction::{
    is_surjective, les_consistency, locus_descriptor, nd_set, nomega_set, nonfree_locus, EulerTriple, ExtPair, Side,
};
use crate::error::Result;
use crate::log_modules::freeness;
use serde::Serialize;

/// The printed table: `(NF(A - H_i), ND(A, 1, H_i))` for `i = 1..=10`.
pub const EXPECTED: [(&str, &str); 10] = [
    ("1-dimensional", "{0}"),
    ("1-dimensional", "{0}"),
    ("1-dimensional", "{0}"),
    ("∅", "∅"),
    ("∅", "∅"),
    ("∅", "∅"),
    ("1-dimensional", "{0}"),
    ("1-dimensional", "{0}"),
    ("1-dimensional", "{0}"),
    ("{0}", "∅"),
];

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub hyperplane: usize,
    pub nf_deletion: String,
    pub nd: String,
    pub nomega: String,
    pub expected_nf_deletion: String,
    pub expected_nd: String,
}

impl Row {
    pub fn matches(&self) -> bool {
        self.nf_deletion == self.expected_nf_deletion && self.nd == self.expected_nd
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Example5Report {
    pub rows: Vec<Row>,
    pub free: bool,
    pub exponents: Option<Vec<i64>>,
    pub nomega_empty: bool,
    pub rho_h10_surjective: bool,
    pub ext1_forms_deletion_zero: bool,
    /// `HF(Ext¹_{S̄}(Ω¹(A^{H10})), d+1)` against `HF(Ext²_S(Ω¹(A')), d)` for `|d| ≤ 13`.
    pub ext_comparison: Option<ExtPair>,
    pub diff: Vec<String>,
}

impl Example5Report {
    pub fn passes(&self) -> bool {
        self.diff.is_empty()
    }

    pub fn table(&self) -> String {
        let mut s = String::new();
        s.push_str(" i | NF(A - H_i)   | ND(A,1,H_i)   | NOmega | expected\n");
        s.push_str("---+---------------+---------------+--------+---------------------------\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{:>2} | {:<13} | {:<13} | {:<6} | {} / {}{}\n",
                r.hyperplane,
                r.nf_deletion,
                r.nd,
                r.nomega,
                r.expected_nf_deletion,
                r.expected_nd,
                if r.matches() { "" } else { "   MISMATCH" }
            ));
        }
        s.push_str(&format!("free: {} with exponents {:?}\n", self.free, self.exponents));
        s.push_str(&format!("NOmega empty for all H: {}\n", self.nomega_empty));
        s.push_str(&format!("rho at H10 surjective: {}\n", self.rho_h10_surjective));
        s.push_str(&format!("Ext^1(Omega^1(A - H10)) = 0: {}\n", self.ext1_forms_deletion_zero));
        if let Some(e) = &self.ext_comparison {
            s.push_str(&format!(
                "Ext^1 over S/(x10) shifted vs Ext^2 over S: agree {} (nonzero {} / {})\n",
                e.agree, e.left_nonzero, e.right_nonzero
            ));
        }
        for d in &self.diff {
            s.push_str(&format!("diff: {d}\n"));
        }
        s
    }
}

pub fn report_example5() -> Result<Example5Report> {
    let a = ex10();
    let one = Multiplicity::ones(a.len());
    let mut diff = Vec::new();
    let mut rows = Vec::new();
    let mut nomega_empty = true;
    for (h, (nf, nd)) in EXPECTED.iter().enumerate() {
        let t = EulerTriple::new(&a, &one, h)?;
        let nomega = nomega_set(&t)?;
        nomega_empty &= nomega.is_empty();
        let row = Row {
            hyperplane: h + 1,
            nf_deletion: locus_descriptor(&nonfree_locus(&a.delete(h)?, &Multiplicity::ones(a.len() - 1))?),
            nd: locus_descriptor(&nd_set(&t)?),
            nomega: locus_descriptor(&nomega),
            expected_nf_deletion: nf.to_string(),
            expected_nd: nd.to_string(),
        };
        if row.nf_deletion != row.expected_nf_deletion {
            diff.push(format!("row {}: NF is {}, table says {}", h + 1, row.nf_deletion, nf));
        }
        if row.nd != row.expected_nd {
            diff.push(format!("row {}: ND is {}, table says {}", h + 1, row.nd, nd));
        }
        rows.push(row);
    }
    let fr = freeness(&a, &one)?;
    if !fr.free {
        diff.push("the arrangement is not free".into());
    }
    if !nomega_empty {
        diff.push("some NOmega set is not empty".into());
    }
    let t10 = EulerTriple::new(&a, &one, 9)?;
    let rho = is_surjective(&t10, Side::Derivation, 1)?;
    if !rho {
        diff.push("rho at H10 is not surjective".into());
    }
    let les = les_consistency(&t10, 13)?;
    if !les.ext1_forms_deletion_zero {
        diff.push("Ext^1(Omega^1(A - H10)) is not zero".into());
    }
    match &les.ext2_comparison {
        Some(e) if e.agree && e.left_nonzero && e.right_nonzero => {}
        Some(e) => diff.push(format!("Ext comparison at H10: {e:?}")),
        None => diff.push("Ext comparison at H10 not applicable".into()),
    }
    Ok(Example5Report {
        rows,
        free: fr.free,
        exponents: fr.exponents,
        nomega_empty,
        rho_h10_surjective: rho,
        ext1_forms_deletion_zero: les.ext1_forms_deletion_zero,
        ext_comparison: les.ext2_comparison,
        diff,
    })
}

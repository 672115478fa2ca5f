use super::corpus::{builtin_corpus, corpus, CorpusItem};
use super::example5::report_example5;
use super::spec::ArrangementSpec;
use super::verify::verify_all;
use crate::arrangement::{format_int_poly, Arrangement, Multiplicity};
use crate::deletion_restriction::{
    addition_equiv_check, addition_predicate, containment_check, deletion_theorem_verify, euler_sequence,
    exceptional_report, generalized_euler, les_consistency, locus_descriptor, nonfree_locus, spog_classify,
    EulerTriple, Side,
};
use crate::error::{Error, Result};
use crate::log_modules::{derivation_module, euler_restriction, exponents, form_module, freeness, LogModule};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Lattice,
    Charpoly,
    Dmod,
    Omega,
    Free,
    Exponents,
    Eulermult,
    Restrict,
    EulerSeq,
    Spog,
    AddDel,
    Loci,
    Les,
    GenEuler,
    VerifyAll,
    Example5,
    Corpus,
}

impl Command {
    fn label(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

impl std::str::FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Command as ValueEnum>::from_str(s, true).map_err(|_| Error::Input(format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    D,
    Omega,
}

impl std::str::FromStr for SideArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <SideArg as ValueEnum>::from_str(s, true).map_err(|_| Error::Input(format!("unknown side `{s}`, expected d or omega")))
    }
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::D => Side::Derivation,
            SideArg::Omega => Side::Form,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Flags {
    pub hyperplane: Option<usize>,
    pub delete: Option<usize>,
    pub p: Option<usize>,
    pub side: Side,
    pub dmax: Option<i64>,
    pub seed: u64,
    pub name: Option<String>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            hyperplane: None,
            delete: None,
            p: None,
            side: Side::Derivation,
            dmax: None,
            seed: 0,
            name: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ArrangementSpec>,
    pub result: Value,
    pub violations: Vec<String>,
    pub elapsed_ms: u128,
    /// Rendering for `--table`, when the command has one.
    #[serde(skip)]
    pub table: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            3
        }
    }

    pub fn table(&self) -> String {
        if let Some(t) = &self.table {
            return t.clone();
        }
        let mut s = format!("command: {}\n", self.command);
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                s.push_str(&format!("{k}: {v}\n"));
            }
        } else {
            s.push_str(&format!("{}\n", self.result));
        }
        for v in &self.violations {
            s.push_str(&format!("violation: {v}\n"));
        }
        s
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("result serializes")
}

fn index(a: &Arrangement, k: Option<usize>, flag: &str) -> Result<usize> {
    let k = k.ok_or_else(|| Error::Input(format!("this command needs --{flag} <k>")))?;
    if k == 0 || k > a.len() {
        return Err(Error::Input(format!(
            "--{flag} {k} is out of range; hyperplanes are numbered 1..={}",
            a.len()
        )));
    }
    Ok(k - 1)
}

fn module_value(m: &LogModule, dmax: i64) -> Value {
    let gens = m.module.minimalize();
    let lo = m.shift().min(0);
    json!({
        "module": m.describe(),
        "denominator": m.denominator.to_string(),
        "generators": gens.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "generator_degrees": gens.generator_degrees(),
        "hilbert": (lo..=dmax).map(|d| json!([d, m.hilbert(d)])).collect::<Vec<_>>(),
    })
}

fn flat_list(a: &Arrangement) -> Value {
    let lat = a.lattice();
    let mut per_rank = vec![0usize; a.dim() + 1];
    let flats: Vec<Value> = lat
        .flats
        .iter()
        .zip(&lat.mobius)
        .map(|(f, mu)| {
            per_rank[f.rank] += 1;
            json!({
                "members": f.members.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "rank": f.rank,
                "dim": f.dim(),
                "mobius": mu,
            })
        })
        .collect();
    json!({ "flats": flats, "count_by_rank": per_rank })
}

fn needs(spec: Option<&ArrangementSpec>) -> Result<(Arrangement, Multiplicity)> {
    spec.ok_or_else(|| Error::Input("this command needs --file <spec.json> or --name <corpus name>".into()))?
        .parsed()
}

fn classical(m: &Multiplicity) -> Result<()> {
    if m.is_nonnegative() {
        Ok(())
    } else {
        Err(Error::Input(format!(
            "multiplicity {m} is negative; only gen-euler accepts generalized multiplicities"
        )))
    }
}

/// Run one command and build its report.
pub fn run(command: Command, spec: Option<&ArrangementSpec>, flags: &Flags) -> Result<Report> {
    let start = Instant::now();
    let mut violations = Vec::new();
    let mut table = None;
    let input = spec.map(|s| s.canonical()).transpose()?;
    let result = match command {
        Command::Example5 => {
            let r = report_example5()?;
            violations = r.diff.clone();
            table = Some(r.table());
            to_value(&r)
        }
        Command::Corpus => {
            let name = flags.name.as_deref().unwrap_or("builtin");
            let items = if name == "builtin" {
                builtin_corpus()
            } else {
                corpus(name, flags.seed)?
            };
            to_value(&items)
        }
        Command::VerifyAll => {
            let items = match spec {
                Some(s) => {
                    let (a, m) = s.parsed()?;
                    classical(&m)?;
                    vec![CorpusItem::new(flags.name.clone().unwrap_or_else(|| "input".into()), a, m)]
                }
                None => builtin_corpus(),
            };
            let outcomes = verify_all(&items)?;
            let mut map = serde_json::Map::new();
            for (k, o) in outcomes {
                violations.extend(o.violations.iter().cloned());
                map.insert(k.to_string(), to_value(&o));
            }
            map.insert("items".into(), json!(items.len()));
            Value::Object(map)
        }
        _ => {
            let (a, m) = needs(spec)?;
            let dmax = flags.dmax.unwrap_or(m.total().abs() + 3);
            if command != Command::GenEuler {
                classical(&m)?;
            }
            match command {
                Command::Lattice => flat_list(&a),
                Command::Charpoly => {
                    let chi = a.char_poly();
                    json!({
                        "coefficients": chi,
                        "polynomial": format_int_poly(&chi),
                        "reduced": format_int_poly(&a.reduced_char_poly()?),
                    })
                }
                Command::Dmod => module_value(&derivation_module(&a, &m, flags.p.unwrap_or(1))?, dmax),
                Command::Omega => module_value(&form_module(&a, &m, flags.p.unwrap_or(1))?, dmax),
                Command::Free => to_value(&freeness(&a, &m)?),
                Command::Exponents => json!({ "exponents": exponents(&a, &m)? }),
                Command::Eulermult | Command::Restrict => {
                    let h = index(&a, flags.hyperplane, "hyperplane")?;
                    let e = euler_restriction(&a, &m, h)?;
                    let r = &e.restriction;
                    json!({
                        "hyperplane": h + 1,
                        "restriction": r.arrangement.hyperplanes().iter().map(|x| x.normal().to_vec()).collect::<Vec<_>>(),
                        "trace": r.trace.iter().map(|t| t.map(|x| x + 1)).collect::<Vec<_>>(),
                        "m_star": e.m_star.values(),
                        "flats": e.flats.iter().map(|f| f.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    })
                }
                Command::EulerSeq => {
                    let h = index(&a, flags.hyperplane, "hyperplane")?;
                    let t = EulerTriple::new(&a, &m, h)?;
                    let r = euler_sequence(&t, flags.side, flags.p.unwrap_or(1), dmax)?;
                    violations = r.violations.clone();
                    to_value(&r)
                }
                Command::Spog => match flags.delete.or(flags.hyperplane) {
                    Some(k) => {
                        let h = index(&a, Some(k), "delete")?;
                        let t = EulerTriple::new(&a, &m, h)?;
                        let module = match flags.side {
                            Side::Derivation => derivation_module(&a, &t.mprime, 1)?,
                            Side::Form => form_module(&a, &m, 1)?,
                        };
                        let theorem = deletion_theorem_verify(&t)?;
                        violations = theorem.violations.clone();
                        json!({
                            "module": module.describe(),
                            "classification": to_value(&spog_classify(&module)?),
                            "theorem": to_value(&theorem),
                        })
                    }
                    None => {
                        let module = match flags.side {
                            Side::Derivation => derivation_module(&a, &m, 1)?,
                            Side::Form => form_module(&a, &m, 1)?,
                        };
                        json!({
                            "module": module.describe(),
                            "classification": to_value(&spog_classify(&module)?),
                        })
                    }
                },
                Command::AddDel => {
                    let hs = match flags.hyperplane {
                        Some(k) => vec![index(&a, Some(k), "hyperplane")?],
                        None => (0..a.len()).collect(),
                    };
                    let mut out = Vec::new();
                    for h in hs {
                        let r = addition_equiv_check(&a, h)?;
                        if !r.passes {
                            violations.push(format!("H{}: predicate and freeness disagree", h + 1));
                        }
                        out.push(json!({
                            "predicate": to_value(&addition_predicate(&a, h)?),
                            "check": to_value(&r),
                        }));
                    }
                    Value::Array(out)
                }
                Command::Loci => match flags.hyperplane {
                    Some(k) => {
                        let t = EulerTriple::new(&a, &m, index(&a, Some(k), "hyperplane")?)?;
                        let r = containment_check(&t)?;
                        violations = r.violations.clone();
                        to_value(&r)
                    }
                    None => {
                        let nf = nonfree_locus(&a, &m)?;
                        let mut per = Vec::new();
                        for h in (0..a.len()).filter(|&h| m.get(h) >= 1 && a.dim() >= 2) {
                            let ex = exceptional_report(&EulerTriple::new(&a, &m, h)?)?;
                            per.push(json!({
                                "hyperplane": h + 1,
                                "nf_deletion": locus_descriptor(&ex.nf_deletion),
                                "nd": locus_descriptor(&ex.nd),
                                "nomega": locus_descriptor(&ex.nomega),
                                "detail": to_value(&ex),
                            }));
                        }
                        json!({ "nonfree_locus": locus_descriptor(&nf), "flats": to_value(&nf), "hyperplanes": per })
                    }
                },
                Command::Les => {
                    let t = EulerTriple::new(&a, &m, index(&a, flags.hyperplane, "hyperplane")?)?;
                    let r = les_consistency(&t, dmax)?;
                    violations = r.violations.clone();
                    to_value(&r)
                }
                Command::GenEuler => {
                    let h = index(&a, flags.hyperplane, "hyperplane")?;
                    let r = generalized_euler(&a, &m, h, dmax)?;
                    violations = r.violations.clone();
                    to_value(&r)
                }
                Command::Example5 | Command::Corpus | Command::VerifyAll => unreachable!(),
            }
        }
    };
    Ok(Report {
        command: command.label(),
        input,
        result,
        violations,
        elapsed_ms: start.elapsed().as_millis(),
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse;

    #[test]
    fn charpoly_of_the_plane() {
        let s = parse(r#"{"dim": 2, "hyperplanes": [[1,0],[0,1]]}"#).unwrap();
        let r = run(Command::Charpoly, Some(&s), &Flags::default()).unwrap();
        assert_eq!(r.result["polynomial"], "(t-1)^2");
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn flag_errors() {
        let s = parse(r#"{"dim": 2, "hyperplanes": [[1,0],[0,1]]}"#).unwrap();
        let e = run(Command::EulerSeq, Some(&s), &Flags::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let flags = Flags {
            hyperplane: Some(3),
            ..Flags::default()
        };
        assert_eq!(run(Command::Les, Some(&s), &flags).unwrap_err().exit_code(), 2);
        assert_eq!(run(Command::Free, None, &Flags::default()).unwrap_err().exit_code(), 2);
    }
}

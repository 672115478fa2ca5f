use super::spec::ArrangementSpec;
use crate::arrangement::{canonicalize, Arrangement, Multiplicity};
use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CorpusItem {
    pub name: String,
    #[serde(skip)]
    pub arrangement: Arrangement,
    #[serde(skip)]
    pub multiplicity: Multiplicity,
    pub spec: ArrangementSpec,
}

impl CorpusItem {
    pub fn new(name: impl Into<String>, arrangement: Arrangement, multiplicity: Multiplicity) -> Self {
        let spec = ArrangementSpec::new(&arrangement, &multiplicity);
        CorpusItem {
            name: name.into(),
            arrangement,
            multiplicity,
            spec,
        }
    }

    pub fn simple(name: impl Into<String>, arrangement: Arrangement) -> Self {
        let m = Multiplicity::ones(arrangement.len());
        CorpusItem::new(name, arrangement, m)
    }

    pub fn is_simple(&self) -> bool {
        self.multiplicity.values().iter().all(|&v| v == 1)
    }
}

fn arr(dim: usize, normals: &[Vec<i64>]) -> Arrangement {
    Arrangement::from_normals(dim, normals).expect("built-in arrangement")
}

pub fn b2() -> Arrangement {
    arr(2, &[vec![1, 0], vec![0, 1]])
}

pub fn g3() -> Arrangement {
    arr(2, &[vec![1, 0], vec![0, 1], vec![1, 1]])
}

pub fn bool3() -> Arrangement {
    arr(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]])
}

/// `x_i - x_j` on four coordinates.
pub fn braid4() -> Arrangement {
    let mut normals = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = vec![0; 4];
            v[i] = 1;
            v[j] = -1;
            normals.push(v);
        }
    }
    arr(4, &normals)
}

/// `n - 1` planes through a line plus one plane in general position, in dimension 3.
pub fn near_pencil(n: usize) -> Result<Arrangement> {
    if !(3..=12).contains(&n) {
        return Err(Error::Input(format!("NP(n) needs 3 <= n <= 12, got {n}")));
    }
    let mut normals: Vec<Vec<i64>> = (0..n as i64 - 1).map(|k| vec![1, k, 0]).collect();
    normals[0] = vec![0, 1, 0];
    normals.push(vec![0, 0, 1]);
    Arrangement::from_normals(3, &normals)
}

/// The rank-4 arrangement with ten hyperplanes from the worked example, columns in order.
pub fn ex10() -> Arrangement {
    arr(
        4,
        &[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 0, 0, 1],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1],
            vec![1, 1, 0, 1],
            vec![1, 0, 1, 1],
            vec![0, 1, 1, 1],
            vec![1, 1, 1, 1],
        ],
    )
}

/// An essential arrangement of `n` distinct hyperplanes with entries in `-2..=2`.
pub fn random_arrangement(dim: usize, n: usize, seed: u64) -> Result<Arrangement> {
    if !(2..=3).contains(&dim) || n < dim || n > 6 {
        return Err(Error::Input(format!(
            "RAND needs 2 <= dim <= 3 and dim <= n <= 6, got ({dim}, {n})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut hs = Vec::new();
        while hs.len() < n {
            let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
            if let Ok(h) = canonicalize(&v) {
                if !hs.contains(&h) {
                    hs.push(h);
                }
            }
        }
        let a = Arrangement::new(dim, hs)?;
        if a.is_essential() {
            return Ok(a);
        }
    }
}

/// Seeded multiplicities in `1..=3`.
pub fn decorate(n: usize, seed: u64) -> Multiplicity {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d75_6c74);
    Multiplicity::new((0..n).map(|_| rng.gen_range(1..=3)).collect()).expect("positive")
}

fn args(s: &str, name: &str) -> Result<Vec<u64>> {
    s.strip_prefix(name)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Input(format!("cannot parse corpus name `{s}`")))?
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad argument `{t}` in `{s}`")))
        })
        .collect()
}

/// Named arrangement, optionally with seeded multiplicities (`name*m`).
pub fn corpus(name: &str, seed: u64) -> Result<Vec<CorpusItem>> {
    let (base, decorated) = match name.strip_suffix("*m") {
        Some(b) => (b.trim(), true),
        None => (name.trim(), false),
    };
    let a = match base {
        "B2" => b2(),
        "G3" => g3(),
        "BOOL3" => bool3(),
        "BR4" => braid4(),
        "EX10" => ex10(),
        s if s.starts_with("NP") => match args(s, "NP")?[..] {
            [n] => near_pencil(n as usize)?,
            _ => return Err(Error::Input(format!("NP takes one argument: `{s}`"))),
        },
        s if s.starts_with("RAND") => match args(s, "RAND")?[..] {
            [l, n] => random_arrangement(l as usize, n as usize, seed)?,
            [l, n, sd] => random_arrangement(l as usize, n as usize, sd)?,
            _ => return Err(Error::Input(format!("RAND takes (dim, n) or (dim, n, seed): `{s}`"))),
        },
        s => return Err(Error::Input(format!("unknown corpus name `{s}`"))),
    };
    let m = if decorated {
        decorate(a.len(), seed)
    } else {
        Multiplicity::ones(a.len())
    };
    Ok(vec![CorpusItem::new(name.trim(), a, m)])
}

fn all_multiplicities(n: usize, max: i64) -> Vec<Multiplicity> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (1..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Multiplicity::new(v).unwrap()).collect()
}

/// The built-in corpus used by `verify-all` and the acceptance run.
pub fn builtin_corpus() -> Vec<CorpusItem> {
    let mut out = Vec::new();
    for (name, a) in [("B2", b2()), ("G3", g3()), ("BOOL3", bool3())] {
        for m in all_multiplicities(a.len(), 3) {
            out.push(CorpusItem::new(format!("{name} m={m}"), a.clone(), m));
        }
    }
    for n in 3..=5 {
        out.push(CorpusItem::simple(format!("NP({n})"), near_pencil(n).unwrap()));
    }
    out.push(CorpusItem::simple("BR4", braid4()));
    out.push(CorpusItem::simple("EX10", ex10()));
    for seed in 1..=12 {
        for n in 4..=6 {
            let a = random_arrangement(3, n, seed).unwrap();
            out.push(CorpusItem::simple(format!("RAND(3,{n},{seed})"), a.clone()));
            if seed <= 3 && n <= 5 {
                let m = decorate(n, seed);
                out.push(CorpusItem::new(format!("RAND(3,{n},{seed}) m={m}"), a, m));
            }
        }
    }
    for seed in 1..=4 {
        for n in 3..=5 {
            let a = random_arrangement(2, n, seed).unwrap();
            let m = decorate(n, seed);
            out.push(CorpusItem::simple(format!("RAND(2,{n},{seed})"), a.clone()));
            out.push(CorpusItem::new(format!("RAND(2,{n},{seed}) m={m}"), a, m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(corpus("EX10", 0).unwrap()[0].arrangement.len(), 10);
        assert_eq!(corpus("BOOL3", 0).unwrap()[0].arrangement, bool3());
        assert_eq!(braid4().len(), 6);
        assert_eq!(near_pencil(4).unwrap().len(), 4);
        assert!(corpus("NOPE", 0).is_err());
        assert!(corpus("RAND(4,5)", 0).is_err());
    }

    #[test]
    fn seeded() {
        let a = corpus("RAND(3,5)", 7).unwrap();
        let b = corpus("RAND(3,5)", 7).unwrap();
        assert_eq!(a[0].spec, b[0].spec);
        let c = corpus("G3*m", 2).unwrap();
        assert!(c[0].multiplicity.values().iter().all(|v| (1..=3).contains(v)));
        assert_eq!(c[0].spec, corpus("G3*m", 2).unwrap()[0].spec);
    }
}

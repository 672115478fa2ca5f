use super::coordinates::AdaptedCoordinates;
use super::hyperplane::{canonicalize, canonicalize_rational, Hyperplane};
use crate::error::{Error, Result};
use crate::exact_algebra::{Matrix, Polynomial, Scalar};
use std::collections::HashMap;
use std::fmt;

/// A central arrangement: distinct hyperplanes in a fixed ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

/// Per-hyperplane multiplicities, all of one sign.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Multiplicity {
    values: Vec<i64>,
}

impl Multiplicity {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        let pos = values.iter().any(|&v| v > 0);
        let neg = values.iter().any(|&v| v < 0);
        if pos && neg {
            return Err(Error::Input(format!(
                "multiplicities {values:?} mix signs; they must be all nonnegative or all nonpositive"
            )));
        }
        Ok(Multiplicity { values })
    }

    pub fn ones(n: usize) -> Self {
        Multiplicity { values: vec![1; n] }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        Multiplicity { values: vec![c; n] }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, i: usize) -> i64 {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `|m|`
    pub fn total(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0)
    }

    pub fn is_nonpositive(&self) -> bool {
        self.values.iter().all(|&v| v <= 0)
    }

    /// `m - δ_H`, for a classical multiplicity with `m(H) ≥ 1`.
    pub fn minus_delta(&self, h: usize) -> Result<Multiplicity> {
        if self.values[h] < 1 {
            return Err(Error::Input(format!(
                "cannot lower multiplicity of hyperplane {} below zero",
                h + 1
            )));
        }
        let mut v = self.values.clone();
        v[h] -= 1;
        Ok(Multiplicity { values: v })
    }

    /// `m - δ_H` without sign restrictions, for generalized multiplicities.
    pub fn shifted(&self, h: usize, delta: i64) -> Result<Multiplicity> {
        let mut v = self.values.clone();
        v[h] += delta;
        Multiplicity::new(v)
    }

    pub fn negated(&self) -> Multiplicity {
        Multiplicity {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Restriction to the listed hyperplanes.
    pub fn restrict_to(&self, members: &[usize]) -> Multiplicity {
        Multiplicity {
            values: members.iter().map(|&i| self.values[i]).collect(),
        }
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Multiplicity) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.values)
    }
}

/// An element of the intersection lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat {
    /// Indices of the hyperplanes containing the flat, sorted.
    pub members: Vec<usize>,
    /// Codimension.
    pub rank: usize,
    /// Basis of the subspace, as integer vectors.
    pub basis: Vec<Vec<i64>>,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains_hyperplane(&self, h: usize) -> bool {
        self.members.binary_search(&h).is_ok()
    }

    pub fn basis_scalars(&self) -> Vec<Vec<Scalar>> {
        self.basis
            .iter()
            .map(|v| v.iter().map(|&a| Scalar::from_int(a)).collect())
            .collect()
    }
}

/// The intersection lattice with its Möbius function.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub flats: Vec<Flat>,
    pub mobius: Vec<i64>,
    index: HashMap<Vec<usize>, usize>,
}

impl Lattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn find(&self, members: &[usize]) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn of_rank(&self, r: usize) -> impl Iterator<Item = (usize, &Flat)> {
        self.flats.iter().enumerate().filter(move |(_, f)| f.rank == r)
    }

    pub fn mobius_of(&self, members: &[usize]) -> Option<i64> {
        self.find(members).map(|i| self.mobius[i])
    }

    /// Coefficients of `χ(A, t)`, lowest degree first.
    pub fn char_poly(&self, ambient_dim: usize) -> Vec<i64> {
        let mut c = vec![0i64; ambient_dim + 1];
        for (f, mu) in self.flats.iter().zip(&self.mobius) {
            c[ambient_dim - f.rank] += mu;
        }
        c
    }
}

/// The restriction `A^H` together with the coordinates used on `H`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub hyperplane: usize,
    pub arrangement: Arrangement,
    pub coords: AdaptedCoordinates,
    /// For each hyperplane of `A`, its trace in `A^H` (`None` for `H`).
    pub trace: Vec<Option<usize>>,
}

impl Restriction {
    /// Hyperplanes of `A` (other than `H`) with the given trace.
    pub fn fiber(&self, x: usize) -> Vec<usize> {
        self.trace
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == Some(x))
            .map(|(i, _)| i)
            .collect()
    }
}

/// Coordinates on `V / X` in which the members of a flat form an essential arrangement.
#[derive(Clone, Debug)]
pub struct Essentialization {
    pub arrangement: Arrangement,
    /// `members[k]` is the hyperplane of the original arrangement giving hyperplane `k`.
    pub members: Vec<usize>,
    /// Rows of the linear forms used as new coordinates.
    pub coordinates: Vec<Vec<i64>>,
}

impl Essentialization {
    pub fn position(&self, original: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == original)
    }
}

fn scalar_rows(rows: &[&[i64]]) -> Matrix {
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&a| Scalar::from_int(a)).collect())
            .collect(),
        cols,
    )
}

fn integer_vector(v: &[Scalar]) -> Vec<i64> {
    let (_, l) = crate::exact_algebra::scalar::content_and_denominator(v);
    let l = Scalar::from_bigint(l);
    let raw: Vec<i64> = v.iter().map(|a| (a * &l).to_i64().unwrap()).collect();
    let g = raw.iter().fold(0i64, |g, &a| num_integer::Integer::gcd(&g, &a)).max(1);
    raw.iter().map(|a| a / g).collect()
}

impl Arrangement {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen: HashMap<&Hyperplane, usize> = HashMap::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return Err(Error::Input(format!(
                    "hyperplane {} has {} coordinates, expected {dim}",
                    i + 1,
                    h.dim()
                )));
            }
            if let Some(j) = seen.insert(h, i) {
                return Err(Error::Input(format!(
                    "hyperplanes {} and {} coincide after canonicalization ({:?})",
                    j + 1,
                    i + 1,
                    h.normal()
                )));
            }
        }
        Ok(Arrangement { dim, hyperplanes })
    }

    pub fn from_normals(dim: usize, normals: &[Vec<i64>]) -> Result<Self> {
        let hs = normals
            .iter()
            .enumerate()
            .map(|(i, n)| {
                canonicalize(n).map_err(|_| Error::Input(format!("hyperplane {} has a zero normal", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(dim, hs)
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement {
            dim,
            hyperplanes: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn hyperplane(&self, i: usize) -> &Hyperplane {
        &self.hyperplanes[i]
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::Input(format!(
                "hyperplane index {} out of range 1..={}",
                i + 1,
                self.len()
            )));
        }
        Ok(())
    }

    fn rank_of(&self, members: &[usize]) -> usize {
        if members.is_empty() {
            return 0;
        }
        let rows: Vec<&[i64]> = members.iter().map(|&i| self.hyperplanes[i].normal()).collect();
        scalar_rows(&rows).rank()
    }

    pub fn rank(&self) -> usize {
        self.rank_of(&(0..self.len()).collect::<Vec<_>>())
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    /// Smallest flat containing the intersection of the given hyperplanes.
    pub fn closure(&self, gens: &[usize]) -> Flat {
        let r = self.rank_of(gens);
        let mut members: Vec<usize> = (0..self.len())
            .filter(|&h| {
                if gens.contains(&h) {
                    return true;
                }
                let mut with = gens.to_vec();
                with.push(h);
                self.rank_of(&with) == r
            })
            .collect();
        members.sort_unstable();
        let basis = if members.is_empty() {
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| i64::from(i == j)).collect())
                .collect()
        } else {
            let rows: Vec<&[i64]> = members.iter().map(|&i| self.hyperplanes[i].normal()).collect();
            scalar_rows(&rows)
                .nullspace()
                .iter()
                .map(|v| integer_vector(v))
                .collect()
        };
        Flat {
            members,
            rank: r,
            basis,
        }
    }

    pub fn lattice(&self) -> Lattice {
        let mut flats = vec![self.closure(&[])];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(flats[0].members.clone(), 0);
        let mut k = 0;
        while k < flats.len() {
            let current = flats[k].members.clone();
            for h in 0..self.len() {
                if current.binary_search(&h).is_ok() {
                    continue;
                }
                let mut g = current.clone();
                g.push(h);
                let f = self.closure(&g);
                if !index.contains_key(&f.members) {
                    index.insert(f.members.clone(), flats.len());
                    flats.push(f);
                }
            }
            k += 1;
        }
        let mut order: Vec<usize> = (0..flats.len()).collect();
        order.sort_by(|&a, &b| {
            flats[a]
                .rank
                .cmp(&flats[b].rank)
                .then_with(|| flats[a].members.cmp(&flats[b].members))
        });
        let flats: Vec<Flat> = order.into_iter().map(|i| flats[i].clone()).collect();
        let index: HashMap<Vec<usize>, usize> = flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.members.clone(), i))
            .collect();
        let mut mobius = vec![0i64; flats.len()];
        for x in 0..flats.len() {
            if x == 0 {
                mobius[0] = 1;
                continue;
            }
            let mx = &flats[x].members;
            let s: i64 = (0..x)
                .filter(|&y| flats[y].rank < flats[x].rank && flats[y].members.iter().all(|h| mx.binary_search(h).is_ok()))
                .map(|y| mobius[y])
                .sum();
            mobius[x] = -s;
        }
        Lattice {
            flats,
            mobius,
            index,
        }
    }

    /// Coefficients of `χ(A, t)`, lowest degree first.
    pub fn char_poly(&self) -> Vec<i64> {
        self.lattice().char_poly(self.dim)
    }

    /// `χ(A,t) / (t - 1)` for nonempty `A`.
    pub fn reduced_char_poly(&self) -> Result<Vec<i64>> {
        if self.is_empty() {
            return Err(Error::Input("reduced characteristic polynomial of the empty arrangement".into()));
        }
        divide_by_t_minus_one(&self.char_poly())
    }

    /// `A - {H}`
    pub fn delete(&self, h: usize) -> Result<Arrangement> {
        self.check_index(h)?;
        let mut hs = self.hyperplanes.clone();
        hs.remove(h);
        Ok(Arrangement {
            dim: self.dim,
            hyperplanes: hs,
        })
    }

    pub fn subarrangement(&self, members: &[usize]) -> Arrangement {
        Arrangement {
            dim: self.dim,
            hyperplanes: members.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
        }
    }

    /// `A^H` in the coordinates `y_2, …, y_ℓ` of `H`.
    pub fn restrict(&self, h: usize) -> Result<Restriction> {
        self.check_index(h)?;
        let coords = AdaptedCoordinates::for_normal(self.hyperplanes[h].normal());
        let mut out: Vec<Hyperplane> = Vec::new();
        let mut pos: HashMap<Hyperplane, usize> = HashMap::new();
        let mut trace = Vec::with_capacity(self.len());
        for (j, l) in self.hyperplanes.iter().enumerate() {
            if j == h {
                trace.push(None);
                continue;
            }
            let ny = coords.normal_in_y(l.normal());
            let restricted = canonicalize(&ny[1..]).map_err(|_| {
                Error::Internal(format!("hyperplane {} restricts to all of H", j + 1))
            })?;
            let k = *pos.entry(restricted.clone()).or_insert_with(|| {
                out.push(restricted);
                out.len() - 1
            });
            trace.push(Some(k));
        }
        Ok(Restriction {
            hyperplane: h,
            arrangement: Arrangement {
                dim: self.dim - 1,
                hyperplanes: out,
            },
            coords,
            trace,
        })
    }

    /// `A_X`: the members of a flat, as an arrangement in the same space.
    pub fn localize(&self, flat: &Flat) -> Result<Arrangement> {
        let f = self.closure(&flat.members);
        if f.members != flat.members {
            return Err(Error::Input("the given hyperplanes do not form a flat".into()));
        }
        Ok(self.subarrangement(&flat.members))
    }

    /// The members of a flat written in coordinates on `V / X`.
    pub fn essentialize(&self, members: &[usize]) -> Essentialization {
        let mut basis: Vec<usize> = Vec::new();
        for &h in members {
            let mut with = basis.clone();
            with.push(h);
            if self.rank_of(&with) > basis.len() {
                basis.push(h);
            }
        }
        let r = basis.len();
        let b_rows: Vec<&[i64]> = basis.iter().map(|&i| self.hyperplanes[i].normal()).collect();
        // solve c · B = normal for each member
        let bt = {
            let m = scalar_rows(&b_rows);
            let mut t = Matrix::zeros(self.dim, r);
            for i in 0..r {
                for j in 0..self.dim {
                    t.data[j][i] = m.data[i][j].clone();
                }
            }
            t
        };
        let mut hs = Vec::with_capacity(members.len());
        for &h in members {
            let mut aug = Matrix::zeros(self.dim, r + 1);
            for i in 0..self.dim {
                for j in 0..r {
                    aug.data[i][j] = bt.data[i][j].clone();
                }
                aug.data[i][r] = Scalar::from_int(self.hyperplanes[h].normal()[i]);
            }
            aug.rref();
            let c: Vec<Scalar> = (0..r).map(|i| aug.data[i][r].clone()).collect();
            hs.push(canonicalize_rational(&c).expect("member normal is nonzero"));
        }
        Essentialization {
            arrangement: Arrangement { dim: r, hyperplanes: hs },
            members: members.to_vec(),
            coordinates: basis.iter().map(|&i| self.hyperplanes[i].normal().to_vec()).collect(),
        }
    }

    /// Rank-2 essentialization; errors when the members do not have rank 2.
    pub fn essentialize_rank2(&self, members: &[usize]) -> Result<Essentialization> {
        let e = self.essentialize(members);
        if e.arrangement.dim != 2 {
            return Err(Error::Input(format!(
                "flat has rank {}, expected 2",
                e.arrangement.dim
            )));
        }
        Ok(e)
    }

    /// `Q(A, m)`; hyperplanes of multiplicity zero contribute nothing.
    pub fn defining_poly(&self, m: &Multiplicity) -> Polynomial {
        let mut q = Polynomial::one(self.dim);
        for (h, &k) in self.hyperplanes.iter().zip(m.values()) {
            if k != 0 {
                q = q.mul(&h.linear_form().pow(k.unsigned_abs() as u32));
            }
        }
        q
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Arrangement(dim={}, {:?})", self.dim, self.hyperplanes)
    }
}

/// Synthetic division of a polynomial (lowest degree first) by `t - 1`.
pub fn divide_by_t_minus_one(c: &[i64]) -> Result<Vec<i64>> {
    if c.is_empty() {
        return Err(Error::Internal("division of the zero polynomial".into()));
    }
    let n = c.len() - 1;
    let mut q = vec![0i64; n.max(1)];
    let mut carry = 0i64;
    for k in (1..=n).rev() {
        carry += c[k];
        q[k - 1] = carry;
    }
    if carry + c[0] != 0 {
        return Err(Error::Internal("characteristic polynomial is not divisible by t - 1".into()));
    }
    Ok(q)
}

/// Evaluate a polynomial given by coefficients (lowest first).
pub fn eval_int_poly(c: &[i64], t: i64) -> i64 {
    c.iter().rev().fold(0i64, |acc, &a| acc * t + a)
}

/// Factor into `(t - r)` factors over the integers when possible, otherwise print expanded.
pub fn format_int_poly(c: &[i64]) -> String {
    let deg = c.iter().rposition(|&a| a != 0);
    let Some(deg) = deg else { return "0".into() };
    let mut rest: Vec<i64> = c[..=deg].to_vec();
    let mut roots: Vec<i64> = Vec::new();
    'outer: while rest.len() > 1 {
        let bound = rest.iter().map(|a| a.abs()).max().unwrap_or(0);
        for r in -bound..=bound {
            if eval_int_poly(&rest, r) == 0 {
                // divide by (t - r)
                let n = rest.len() - 1;
                let mut q = vec![0i64; n];
                let mut carry = 0;
                for k in (1..=n).rev() {
                    carry = carry * r + rest[k];
                    q[k - 1] = carry;
                }
                roots.push(r);
                rest = q;
                continue 'outer;
            }
        }
        break;
    }
    let factored = rest.len() == 1 && rest[0] == 1;
    if factored {
        if roots.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        roots.sort_unstable();
        while i < roots.len() {
            let r = roots[i];
            let mut k = 1;
            while i + k < roots.len() && roots[i + k] == r {
                k += 1;
            }
            let f = match r.cmp(&0) {
                std::cmp::Ordering::Equal => "t".to_string(),
                std::cmp::Ordering::Greater => format!("(t-{r})"),
                std::cmp::Ordering::Less => format!("(t+{})", -r),
            };
            out.push_str(&f);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
            i += k;
        }
        return out;
    }
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let a = c[k];
        if a == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if a > 0 { " + " } else { " - " });
        } else if a < 0 {
            out.push('-');
        }
        let abs = a.abs();
        let coef = if abs == 1 && k > 0 { String::new() } else { abs.to_string() };
        let mono = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        out.push_str(&coef);
        out.push_str(&mono);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    fn g3() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn lattices() {
        let l = b2().lattice();
        assert_eq!(l.len(), 4);
        assert_eq!(l.mobius_of(&[0, 1]), Some(1));
        let l = g3().lattice();
        assert_eq!(l.len(), 5);
        assert_eq!(l.mobius_of(&[0, 1, 2]), Some(2));
        assert_eq!(Arrangement::empty(3).lattice().len(), 1);
    }

    #[test]
    fn characteristic_polynomials() {
        assert_eq!(b2().char_poly(), vec![1, -2, 1]);
        assert_eq!(b2().reduced_char_poly().unwrap(), vec![-1, 1]);
        assert_eq!(g3().char_poly(), vec![2, -3, 1]);
        assert_eq!(g3().reduced_char_poly().unwrap(), vec![-2, 1]);
        assert_eq!(Arrangement::empty(3).char_poly(), vec![0, 0, 0, 1]);
        assert_eq!(format_int_poly(&b2().char_poly()), "(t-1)^2");
        assert_eq!(format_int_poly(&g3().char_poly()), "(t-1)(t-2)");
    }

    #[test]
    fn deletion_and_restriction() {
        assert_eq!(g3().delete(2).unwrap(), b2());
        let r = b2().restrict(0).unwrap();
        assert_eq!(r.arrangement.len(), 1);
        assert_eq!(r.arrangement.dim(), 1);
    }

    #[test]
    fn duplicates_are_rejected() {
        let e = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![-2, 0]]).unwrap_err();
        assert!(e.to_string().contains("1 and 3"));
    }

    #[test]
    fn rank2_essentialization() {
        let a = Arrangement::from_normals(4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![1, 1, 0, 0]]).unwrap();
        let e = a.essentialize_rank2(&[0, 1, 2]).unwrap();
        assert_eq!(e.arrangement, g3());
        assert!(a.essentialize_rank2(&[0]).is_err());
    }

    #[test]
    fn defining_polynomial() {
        let m = Multiplicity::new(vec![2, 1]).unwrap();
        let q = b2().defining_poly(&m);
        assert_eq!(format!("{q}"), "x^2y");
        assert!(Multiplicity::new(vec![1, -1]).is_err());
    }
}

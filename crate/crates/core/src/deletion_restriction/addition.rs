use super::numbering;
use crate::arrangement::{divide_by_t_minus_one, eval_int_poly, Arrangement, Multiplicity};
use crate::error::Result;
use crate::log_modules::is_free;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct AdditionFlat {
    #[serde(serialize_with = "numbering::all")]
    pub members: Vec<usize>,
    pub rank: usize,
    /// `|A'_X| - |A^H_X|`
    pub difference: i64,
    /// Coefficients of `χ₀(A'_X; t)`, lowest degree first.
    pub chi0: Vec<i64>,
    pub root: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdditionPredicate {
    #[serde(serialize_with = "numbering::one")]
    pub hyperplane: usize,
    pub holds: bool,
    pub flats: Vec<AdditionFlat>,
}

/// For each flat `X ⊊ H` of `A` containing `H`: `|A'_X| - |A^H_X|` must be a root of
/// `χ₀(A'_X; t)`, with `A'_X` taken in `V / X`.
pub fn addition_predicate(a: &Arrangement, h: usize) -> Result<AdditionPredicate> {
    a.check_index(h)?;
    let res = a.restrict(h)?;
    let lat = a.lattice();
    let mut flats = Vec::new();
    for f in &lat.flats {
        if f.rank < 2 || !f.contains_hyperplane(h) {
            continue;
        }
        let others: Vec<usize> = f.members.iter().copied().filter(|&j| j != h).collect();
        let mut traces: Vec<usize> = others.iter().filter_map(|&j| res.trace[j]).collect();
        traces.sort_unstable();
        traces.dedup();
        let difference = (others.len() - traces.len()) as i64;
        // χ(A'_X in V) = t^{dim X} χ(A'_X in V/X)
        let chi = a.subarrangement(&others).char_poly();
        let k = a.dim() - f.rank;
        debug_assert!(chi[..k].iter().all(|&c| c == 0));
        let chi0 = divide_by_t_minus_one(&chi[k..])?;
        let root = eval_int_poly(&chi0, difference) == 0;
        flats.push(AdditionFlat {
            members: f.members.clone(),
            rank: f.rank,
            difference,
            chi0,
            root,
        });
    }
    Ok(AdditionPredicate {
        hyperplane: h,
        holds: flats.iter().all(|f| f.root),
        flats,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AdditionReport {
    #[serde(serialize_with = "numbering::one")]
    pub hyperplane: usize,
    pub deletion_free: bool,
    pub predicate: Option<bool>,
    pub free: Option<bool>,
    pub passes: bool,
    pub skipped: Option<String>,
}

/// With `A - {H}` free, the predicate holds exactly when `A` is free.
pub fn addition_equiv_check(a: &Arrangement, h: usize) -> Result<AdditionReport> {
    a.check_index(h)?;
    let del = a.delete(h)?;
    let deletion_free = is_free(&del, &Multiplicity::ones(del.len()))?;
    if !deletion_free {
        return Ok(AdditionReport {
            hyperplane: h,
            deletion_free,
            predicate: None,
            free: None,
            passes: true,
            skipped: Some(format!("deletion of H{} is not free", h + 1)),
        });
    }
    let pred = addition_predicate(a, h)?.holds;
    let free = is_free(a, &Multiplicity::ones(a.len()))?;
    Ok(AdditionReport {
        hyperplane: h,
        deletion_free,
        predicate: Some(pred),
        free: Some(free),
        passes: pred == free,
        skipped: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_lines() {
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let p = addition_predicate(&g3, 2).unwrap();
        assert_eq!(p.flats.len(), 1);
        assert_eq!(p.flats[0].difference, 1);
        assert_eq!(p.flats[0].chi0, vec![-1, 1]);
        assert!(p.holds);
        let r = addition_equiv_check(&g3, 2).unwrap();
        assert!(r.passes && r.free == Some(true));
    }
}

use super::logmod::{derivation_module, form_module};
use super::rank2::euler_restriction;
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::Result;
use crate::exact_algebra::{gcd_poly, Polynomial, Scalar};

#[derive(Clone, Debug, serde::Serialize)]
pub struct PropBReport {
    pub hyperplane: usize,
    pub bound: i64,
    /// Degree of the gcd of the `θ(α_H) mod α_H`; `None` when all of them vanish.
    pub gcd_degree: Option<i64>,
    pub passes: bool,
}

/// `θ(α_H) mod α_H` over minimal generators of `D(A, m - δ_H)` must share a factor of
/// degree at least `|m| - 1 - |m*|`.
pub fn prop_b_check(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<PropBReport> {
    let er = euler_restriction(a, m, h)?;
    let mprime = m.minus_delta(h)?;
    let d = derivation_module(a, &mprime, 1)?;
    let coords = &er.restriction.coords;
    let normal = a.hyperplane(h).normal_scalars();
    let mut g = Polynomial::zero(a.dim() - 1);
    for theta in d.module.minimalize().generators() {
        let mut v = Polynomial::zero(a.dim());
        for (i, c) in normal.iter().enumerate() {
            v = v.add(&theta.component(i).scale(c));
        }
        let bar = coords.to_y(&v).restrict_var_zero(0);
        g = gcd_poly(&g, &bar);
    }
    let bound = m.total() - 1 - er.m_star.total();
    let gcd_degree = if g.is_zero() { None } else { Some(g.degree().unwrap() as i64) };
    Ok(PropBReport {
        hyperplane: h,
        bound,
        gcd_degree,
        passes: gcd_degree.is_none_or(|k| k >= bound),
    })
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct LemmaReport {
    pub hyperplane: usize,
    pub e: Vec<i64>,
    pub m_star: Vec<i64>,
    pub sum_matches: bool,
    pub membership: bool,
    pub passes: bool,
}

/// The `dy_1` coefficient of each minimal generator of `Q·Ω¹(A,m)` lies in
/// `(α_H, ∏ α_{X̂}^{e_X})`, and `Σ e_X = |m*|`.
pub fn lemma_tlemma_check(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<LemmaReport> {
    let er = euler_restriction(a, m, h)?;
    let coords = &er.restriction.coords;
    let n = a.dim();
    let e: Vec<i64> = er.local.iter().map(|r| r.e).collect();
    let sum_matches = e.iter().sum::<i64>() == er.m_star.total();
    // B restricted to H, with a lift taken from each fiber
    let mut b = Polynomial::one(n - 1);
    for (x, ex) in e.iter().enumerate() {
        let lift = er.restriction.fiber(x)[0];
        let f = coords.to_y(&a.hyperplane(lift).linear_form()).restrict_var_zero(0);
        b = b.mul(&f.pow(*ex as u32));
    }
    let w = form_module(a, m, 1)?;
    let mut membership = true;
    for g in w.module.minimalize().generators() {
        // coefficient of dy_1 is Σ_i V_{i1} F_i(Vy)
        let mut f1 = Polynomial::zero(n);
        for i in 0..n {
            let c = Scalar::from_int(coords.v[i][0]);
            if !c.is_zero() {
                f1 = f1.add(&g.component(i).scale(&c));
            }
        }
        let bar = coords.to_y(&f1).restrict_var_zero(0);
        if !bar.divisible_by(&b) {
            membership = false;
        }
    }
    Ok(LemmaReport {
        hyperplane: h,
        e,
        m_star: er.m_star.values().to_vec(),
        sum_matches,
        membership,
        passes: sum_matches && membership,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_certificates() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let r = prop_b_check(&b2, &Multiplicity::new(vec![2, 1]).unwrap(), 0).unwrap();
        assert!(r.passes);
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        for h in 0..3 {
            let r = prop_b_check(&g3, &Multiplicity::ones(3), h).unwrap();
            assert_eq!(r.bound, 1);
            assert!(r.passes, "{r:?}");
            let t = lemma_tlemma_check(&g3, &Multiplicity::ones(3), h).unwrap();
            assert!(t.passes, "{t:?}");
        }
        let t = lemma_tlemma_check(&b2, &Multiplicity::ones(2), 0).unwrap();
        assert_eq!(t.e, vec![1]);
        assert!(t.passes);
    }
}

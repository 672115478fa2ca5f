use crate::arrangement::{Arrangement, Multiplicity, Restriction};
use crate::error::{Error, Result};
use crate::exact_algebra::{FreeModuleElement, Polynomial, Scalar};
use crate::log_modules::exterior::{minor, subset_index, subsets};
use crate::log_modules::{
    derivation_conditions, euler_restriction, form_conditions, Congruence, EulerRestriction,
};

/// `(A, m, H)` with the deletion multiplicity, the restriction in adapted coordinates
/// and the Euler multiplicity on `A^H`.
#[derive(Clone, Debug)]
pub struct EulerTriple {
    pub arrangement: Arrangement,
    pub multiplicity: Multiplicity,
    pub hyperplane: usize,
    pub mprime: Multiplicity,
    pub euler: EulerRestriction,
}

impl EulerTriple {
    pub fn new(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<Self> {
        if a.dim() < 2 {
            return Err(Error::Input("restriction needs at least two variables".into()));
        }
        if m.len() != a.len() {
            return Err(Error::Input(format!("{} multiplicities for {} hyperplanes", m.len(), a.len())));
        }
        let euler = euler_restriction(a, m, h)?;
        Ok(EulerTriple {
            arrangement: a.clone(),
            multiplicity: m.clone(),
            hyperplane: h,
            mprime: m.minus_delta(h)?,
            euler,
        })
    }

    pub fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn restriction(&self) -> &Restriction {
        &self.euler.restriction
    }

    pub fn restricted(&self) -> &Arrangement {
        &self.euler.restriction.arrangement
    }

    pub fn m_star(&self) -> &Multiplicity {
        &self.euler.m_star
    }

    /// `α_H` in the original coordinates.
    pub fn alpha(&self) -> Polynomial {
        self.arrangement.hyperplane(self.hyperplane).linear_form()
    }

    /// Total multiplicity `|m|`.
    pub fn total(&self) -> i64 {
        self.multiplicity.total()
    }

    pub fn describe(&self) -> String {
        format!("(A, {}, H{})", self.multiplicity, self.hyperplane + 1)
    }
}

/// Positions of the `p`-subsets of `1..ℓ` and their reindexing onto `p`-subsets of `0..ℓ-1`.
fn surviving_subsets(l: usize, p: usize) -> Vec<(usize, usize)> {
    let all = subsets(l, p);
    let low = subsets(l - 1, p);
    all.iter()
        .enumerate()
        .filter(|(_, k)| !k.contains(&0))
        .map(|(i, k)| {
            let shifted: Vec<usize> = k.iter().map(|&j| j - 1).collect();
            (i, subset_index(&low, &shifted))
        })
        .collect()
}

fn check_p(t: &EulerTriple, p: usize) -> Result<()> {
    if p >= t.dim() {
        return Err(Error::Input(format!(
            "restriction maps are taken in exterior degree below {}",
            t.dim()
        )));
    }
    Ok(())
}

fn all_hold(conds: &[Congruence], v: &FreeModuleElement) -> bool {
    conds.iter().all(|c| c.holds(v))
}

/// The `p`-vector `θ` in the `y` coordinates: `g_K = Σ_I det U[K,I] f_I(Vy)`.
pub fn derivation_in_y(t: &EulerTriple, p: usize, theta: &FreeModuleElement) -> FreeModuleElement {
    let l = t.dim();
    let coords = &t.restriction().coords;
    let sets = subsets(l, p);
    let subs: Vec<Polynomial> = theta.components().iter().map(|f| coords.to_y(f)).collect();
    let comps = sets
        .iter()
        .map(|k| {
            let mut g = Polynomial::zero(l);
            for (j, i) in sets.iter().enumerate() {
                if subs[j].is_zero() {
                    continue;
                }
                let c = minor(&coords.u, k, i);
                if !c.is_zero() {
                    g = g.add(&subs[j].scale(&c));
                }
            }
            g
        })
        .collect();
    FreeModuleElement::from_components(l, comps)
}

/// The numerator `Σ F_I dx_I` in the `y` coordinates: `G_K = Σ_I det V[I,K] F_I(Vy)`.
pub fn form_in_y(t: &EulerTriple, p: usize, omega: &FreeModuleElement) -> FreeModuleElement {
    let l = t.dim();
    let coords = &t.restriction().coords;
    let sets = subsets(l, p);
    let subs: Vec<Polynomial> = omega.components().iter().map(|f| coords.to_y(f)).collect();
    let comps = sets
        .iter()
        .map(|k| {
            let mut g = Polynomial::zero(l);
            for (j, i) in sets.iter().enumerate() {
                if subs[j].is_zero() {
                    continue;
                }
                let c = minor(&coords.v, i, k);
                if !c.is_zero() {
                    g = g.add(&subs[j].scale(&c));
                }
            }
            g
        })
        .collect();
    FreeModuleElement::from_components(l, comps)
}

/// `ρ^H`: `D^p(A,m) → D^p(A^H,m*)`.
pub fn rho_restrict(t: &EulerTriple, p: usize, theta: &FreeModuleElement) -> Result<FreeModuleElement> {
    check_p(t, p)?;
    let conds = derivation_conditions(&t.arrangement, &t.multiplicity, p);
    if theta.rank() != subsets(t.dim(), p).len() || !all_hold(&conds, theta) {
        return Err(Error::Input(format!("{theta} is not in D^{p}{}", t.describe())));
    }
    let out = rho_unchecked(t, p, theta);
    let target = derivation_conditions(t.restricted(), t.m_star(), p);
    if !all_hold(&target, &out) {
        return Err(Error::Internal(format!("restriction of {theta} leaves D^{p}(A^H, m*)")));
    }
    Ok(out)
}

pub(crate) fn rho_unchecked(t: &EulerTriple, p: usize, theta: &FreeModuleElement) -> FreeModuleElement {
    let l = t.dim();
    let y = derivation_in_y(t, p, theta);
    let surv = surviving_subsets(l, p);
    let mut comps = vec![Polynomial::zero(l - 1); subsets(l - 1, p).len()];
    for (i, j) in surv {
        comps[j] = y.component(i).restrict_var_zero(0);
    }
    FreeModuleElement::from_components(l - 1, comps)
}

/// `i_H^*`: `Ω^p(A, m-δ_H) → Ω^p(A^H, m*)` on cleared numerators.
pub fn form_restrict(t: &EulerTriple, p: usize, omega: &FreeModuleElement) -> Result<FreeModuleElement> {
    check_p(t, p)?;
    let conds = form_conditions(&t.arrangement, &t.mprime, p);
    if omega.rank() != subsets(t.dim(), p).len() || !all_hold(&conds, omega) {
        return Err(Error::Input(format!("{omega} is not in Q*Omega^{p}(A, m')")));
    }
    let out = form_unchecked(t, p, omega)?;
    let target = form_conditions(t.restricted(), t.m_star(), p);
    if !all_hold(&target, &out) {
        return Err(Error::Internal(format!("restriction of {omega} leaves Omega^{p}(A^H, m*)")));
    }
    Ok(out)
}

pub(crate) fn form_unchecked(t: &EulerTriple, p: usize, omega: &FreeModuleElement) -> Result<FreeModuleElement> {
    let l = t.dim();
    let h = t.hyperplane;
    let a = &t.arrangement;
    let coords = &t.restriction().coords;
    let y = form_in_y(t, p, omega);
    let k = t.mprime.get(h) as u32;
    // remaining poles on H: the traces of the other hyperplanes
    let mut poles = Polynomial::one(l - 1);
    for (j, hyp) in a.hyperplanes().iter().enumerate() {
        let mj = t.mprime.get(j);
        if j == h || mj == 0 {
            continue;
        }
        let ny = coords.normal_in_y(hyp.normal());
        let bar: Vec<Scalar> = ny[1..].iter().map(|&c| Scalar::from_int(c)).collect();
        poles = poles.mul(&Polynomial::linear_form(&bar).pow(mj as u32));
    }
    let qstar = t.restricted().defining_poly(t.m_star());
    let surv = surviving_subsets(l, p);
    let mut comps = vec![Polynomial::zero(l - 1); subsets(l - 1, p).len()];
    for (i, j) in surv {
        let g = y.component(i);
        if g.is_zero() {
            continue;
        }
        if g.var_valuation(0) < k {
            return Err(Error::Internal(format!(
                "component {i} of {omega} is not divisible by alpha_H^{k}"
            )));
        }
        let n = g.div_var_pow(0, k).restrict_var_zero(0);
        comps[j] = n.mul(&qstar).exact_div(&poles).ok_or_else(|| {
            Error::Internal(format!("poles of the restriction of {omega} do not cancel"))
        })?;
    }
    Ok(FreeModuleElement::from_components(l - 1, comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::log_modules::LogModule;

    fn b2() -> Arrangement {
        Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn boolean_plane_examples() {
        let t = EulerTriple::new(&b2(), &Multiplicity::ones(2), 0).unwrap();
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let z = Polynomial::zero(2);
        let theta = FreeModuleElement::from_components(2, vec![z.clone(), y.clone()]);
        let r = rho_restrict(&t, 1, &theta).unwrap();
        assert_eq!(r, FreeModuleElement::from_components(1, vec![Polynomial::var(1, 0)]));
        let xtheta = FreeModuleElement::from_components(2, vec![x.mul(&x), z.clone()]);
        assert!(rho_restrict(&t, 1, &xtheta).unwrap().is_zero());
        // dy/y has cleared numerator x dy over Q(A, m') = y
        let omega = FreeModuleElement::from_components(2, vec![z.clone(), Polynomial::one(2)]);
        let r = form_restrict(&t, 1, &omega).unwrap();
        assert_eq!(r, FreeModuleElement::from_components(1, vec![Polynomial::one(1)]));
        // α_H·η for η = dx/(xy), with numerator y dx over Q(m)=xy, so numerator y dx over y
        let eta = FreeModuleElement::from_components(2, vec![y.clone(), z]);
        assert!(form_restrict(&t, 1, &eta).unwrap().is_zero());
    }

    #[test]
    fn restrictions_land_in_targets() {
        let a = Arrangement::from_normals(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        let m = Multiplicity::new(vec![2, 1, 1, 2]).unwrap();
        for h in 0..4 {
            let t = EulerTriple::new(&a, &m, h).unwrap();
            for p in 0..3 {
                let d: LogModule = crate::log_modules::derivation_module(&a, &m, p).unwrap();
                for g in d.generators() {
                    rho_restrict(&t, p, g).unwrap();
                }
                let w = crate::log_modules::form_module(&a, &t.mprime, p).unwrap();
                for g in w.generators() {
                    form_restrict(&t, p, g).unwrap();
                }
            }
        }
    }
}

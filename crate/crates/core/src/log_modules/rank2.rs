use super::logmod::{dense_piece, derivation_conditions, form_conditions};
use crate::arrangement::{Arrangement, Multiplicity, Restriction};
use crate::error::{Error, Result};
use crate::exact_algebra::linalg::poly_determinant;
use crate::exact_algebra::{FreeModuleElement, Polynomial};

/// Adapted bases of a rank-2 multiarrangement relative to one of its lines `H`.
#[derive(Clone, Debug)]
pub struct Rank2Data {
    /// `θ_X` with `α_H ∤ θ_X`.
    pub theta: FreeModuleElement,
    /// `φ_X` with `α_H | φ_X`.
    pub phi: FreeModuleElement,
    /// Cleared numerator of `η_X ∈ Ω¹(A_X, m_X - δ_H)`.
    pub eta: FreeModuleElement,
    /// Cleared numerator of `ω_X`.
    pub omega: FreeModuleElement,
    /// `m*(X) = deg θ_X`
    pub m_star: i64,
    pub phi_degree: i64,
    /// `e_X = -deg η_X`
    pub e: i64,
    /// `d_X = -deg ω_X`
    pub d: i64,
    pub total: i64,
}

fn divisible(v: &FreeModuleElement, f: &Polynomial) -> bool {
    v.components().iter().all(|c| c.divisible_by(f))
}

fn det2(a: &FreeModuleElement, b: &FreeModuleElement) -> Polynomial {
    poly_determinant(&[
        vec![a.component(0).clone(), b.component(0).clone()],
        vec![a.component(1).clone(), b.component(1).clone()],
    ])
}

/// Degreewise search for the adapted bases on a 2-dimensional essential multiarrangement.
pub fn rank2_basis_adapted(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<Rank2Data> {
    if a.dim() != 2 || a.rank() != 2 {
        return Err(Error::Input("adapted rank-2 bases need an essential arrangement in two variables".into()));
    }
    a.check_index(h)?;
    if m.get(h) < 1 {
        return Err(Error::Input("the distinguished line needs multiplicity at least 1".into()));
    }
    let alpha = a.hyperplane(h).linear_form();
    let total = m.total();
    let q = a.defining_poly(m);
    let mprime = m.minus_delta(h)?;

    let dcond = derivation_conditions(a, m, 1);
    let dcond_prime = derivation_conditions(a, &mprime, 1);
    let mut derivation = None;
    'outer: for deg in 0..=total {
        let k = dense_piece(2, 2, &dcond, deg);
        let cands: Vec<_> = k.into_iter().filter(|v| !divisible(v, &alpha)).collect();
        if cands.is_empty() {
            continue;
        }
        let w: Vec<FreeModuleElement> = dense_piece(2, 2, &dcond_prime, total - deg - 1)
            .into_iter()
            .map(|v| v.mul_poly(&alpha))
            .collect();
        for theta in &cands {
            for phi in &w {
                let det = det2(theta, phi);
                if !det.is_zero() {
                    derivation = Some((theta.clone(), phi.clone(), deg, det));
                    break 'outer;
                }
            }
        }
    }
    let (theta, phi, m_star, det) =
        derivation.ok_or_else(|| Error::Internal(format!("no adapted derivation basis up to degree {total}")))?;
    if !det.exact_div(&q).is_some_and(|c| c.is_constant()) {
        return Err(Error::Internal("adapted derivation basis fails the determinant test".into()));
    }

    let fcond = form_conditions(a, m, 1);
    let fcond_prime = form_conditions(a, &mprime, 1);
    let mut forms = None;
    'forms: for k in 0..=total {
        // η has numerator degree k over Q(A_X, m_X)
        let cands: Vec<FreeModuleElement> = dense_piece(2, 2, &fcond_prime, k - 1)
            .into_iter()
            .map(|v| v.mul_poly(&alpha))
            .collect();
        if cands.is_empty() {
            continue;
        }
        let w = dense_piece(2, 2, &fcond, total - k);
        for eta in &cands {
            for omega in &w {
                let det = det2(eta, omega);
                if !det.is_zero() {
                    forms = Some((eta.clone(), omega.clone(), k, det));
                    break 'forms;
                }
            }
        }
    }
    let (eta, omega, k, det) =
        forms.ok_or_else(|| Error::Internal(format!("no adapted form basis up to degree {total}")))?;
    if !det.exact_div(&q).is_some_and(|c| c.is_constant()) {
        return Err(Error::Internal("adapted form basis fails the determinant test".into()));
    }
    Ok(Rank2Data {
        theta,
        phi,
        eta,
        omega,
        m_star,
        phi_degree: total - m_star,
        e: total - k,
        d: k,
        total,
    })
}

/// Per-hyperplane data of the Euler restriction onto `H`.
#[derive(Clone, Debug)]
pub struct EulerRestriction {
    pub restriction: Restriction,
    pub m_star: Multiplicity,
    /// For each hyperplane of `A^H`: the members of the rank-2 flat of `A` it comes from.
    pub flats: Vec<Vec<usize>>,
    pub local: Vec<Rank2Data>,
}

/// `m*` on `A^H`, one rank-2 computation per hyperplane of the restriction.
pub fn euler_restriction(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<EulerRestriction> {
    a.check_index(h)?;
    if m.get(h) < 1 {
        return Err(Error::Input(format!("hyperplane {} has multiplicity 0", h + 1)));
    }
    let restriction = a.restrict(h)?;
    let mut flats = Vec::new();
    let mut local = Vec::new();
    for x in 0..restriction.arrangement.len() {
        let mut members = restriction.fiber(x);
        members.push(h);
        members.sort_unstable();
        let e = a.essentialize_rank2(&members)?;
        let mx = m.restrict_to(&members);
        let pos = e.position(h).expect("H is a member");
        local.push(rank2_basis_adapted(&e.arrangement, &mx, pos)?);
        flats.push(members);
    }
    let m_star = Multiplicity::new(local.iter().map(|d| d.m_star).collect())?;
    if m_star.total() > m.total() - 1 {
        return Err(Error::Internal(format!(
            "|m*| = {} exceeds |m| - 1 = {}",
            m_star.total(),
            m.total() - 1
        )));
    }
    Ok(EulerRestriction {
        restriction,
        m_star,
        flats,
        local,
    })
}

pub fn euler_multiplicity(a: &Arrangement, m: &Multiplicity, h: usize) -> Result<Multiplicity> {
    Ok(euler_restriction(a, m, h)?.m_star)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinate_lines() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        for (ma, mb) in [(1, 1), (2, 1), (1, 3), (3, 2)] {
            let m = Multiplicity::new(vec![ma, mb]).unwrap();
            let r = rank2_basis_adapted(&b2, &m, 0).unwrap();
            assert_eq!(r.m_star, mb);
            assert_eq!(r.m_star + r.phi_degree, ma + mb);
            assert_eq!(r.e + r.d, ma + mb);
            assert_eq!(r.e, r.m_star);
        }
    }

    #[test]
    fn simple_rank_two_gives_one() {
        let g3 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        for h in 0..3 {
            assert_eq!(rank2_basis_adapted(&g3, &Multiplicity::ones(3), h).unwrap().m_star, 1);
        }
        let r = rank2_basis_adapted(&g3, &Multiplicity::new(vec![2, 1, 1]).unwrap(), 0).unwrap();
        assert_eq!(r.m_star + r.phi_degree, 4);
    }

    #[test]
    fn boolean_restriction() {
        let a = Arrangement::from_normals(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]).unwrap();
        let er = euler_restriction(&a, &Multiplicity::ones(4), 3).unwrap();
        assert_eq!(er.m_star, Multiplicity::ones(2));
    }
}

use super::logmod::{derivation_module, form_module, LogKind, LogModule};
use crate::arrangement::{Arrangement, Multiplicity};
use crate::error::{Error, Result};
use crate::exact_algebra::{FreeModule, GradedSubmodule, Polynomial};

/// `D(A, gm)`: the classical module for `gm ≥ 0`, and `I(Ω¹(A, -gm))` for `gm ≤ 0`,
/// with `I` sending `dx_i` to `∂_i`. The zero multiplicity goes through the form side.
pub fn generalized_log_module(a: &Arrangement, gm: &Multiplicity) -> Result<LogModule> {
    if gm.len() != a.len() {
        return Err(Error::Input(format!(
            "{} multiplicities for {} hyperplanes",
            gm.len(),
            a.len()
        )));
    }
    if gm.is_nonpositive() {
        let pos = gm.negated();
        let w = form_module(a, &pos, 1)?;
        return Ok(LogModule {
            kind: LogKind::Derivation,
            p: 1,
            arrangement: a.clone(),
            multiplicity: gm.clone(),
            module: w.module.with_label(format!("D(A,{gm})")),
            denominator: w.denominator,
        });
    }
    derivation_module(a, gm, 1)
}

/// `big ⊇ small` as modules of rational vector fields.
pub fn log_contains(big: &LogModule, small: &LogModule) -> Result<bool> {
    let n = big.nvars();
    let l = lcm_of_products(&big.arrangement, &big.multiplicity, &small.multiplicity);
    let lift = |m: &LogModule| -> Result<GradedSubmodule> {
        let f = l
            .exact_div(&m.denominator)
            .ok_or_else(|| Error::Internal("denominator does not divide the common multiple".into()))?;
        let shift = -(l.degree().unwrap_or(0) as i64);
        let amb = FreeModule::uniform(n, m.rank(), shift);
        GradedSubmodule::new(amb, m.generators().iter().map(|g| g.mul_poly(&f)).collect())
    };
    let b = lift(big)?;
    let s = lift(small)?;
    Ok(b.contains_module(&s))
}

fn lcm_of_products(a: &Arrangement, m1: &Multiplicity, m2: &Multiplicity) -> Polynomial {
    let mut q = Polynomial::one(a.dim());
    for (h, hyp) in a.hyperplanes().iter().enumerate() {
        let k = m1.get(h).min(0).abs().max(m2.get(h).min(0).abs());
        if k > 0 {
            q = q.mul(&hyp.linear_form().pow(k as u32));
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b2_ladder() {
        let b2 = Arrangement::from_normals(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let zero = generalized_log_module(&b2, &Multiplicity::new(vec![0, 0]).unwrap()).unwrap();
        assert_eq!(zero.generator_degrees(), vec![0, 0]);
        let neg = generalized_log_module(&b2, &Multiplicity::new(vec![-1, -1]).unwrap()).unwrap();
        assert_eq!(neg.generator_degrees(), vec![-1, -1]);
        let ladder: Vec<LogModule> = [vec![-1, 0], vec![0, 0], vec![1, 0]]
            .into_iter()
            .map(|v| generalized_log_module(&b2, &Multiplicity::new(v).unwrap()).unwrap())
            .collect();
        assert!(log_contains(&ladder[0], &ladder[1]).unwrap());
        assert!(log_contains(&ladder[1], &ladder[2]).unwrap());
        assert!(log_contains(&ladder[0], &ladder[2]).unwrap());
        assert!(!log_contains(&ladder[2], &ladder[0]).unwrap());
    }
}

//! Graded submodules of free modules: bases, membership, kernels, minimal generators.

use super::groebner::{Engine, GroebnerBasis, SVec, Space};
use super::module::{FreeModule, FreeModuleElement};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use std::sync::{Mutex, OnceLock};

/// A submodule given by homogeneous generators, with a lazily computed Gröbner basis.
pub struct GradedSubmodule {
    ambient: FreeModule,
    gens: Vec<FreeModuleElement>,
    gb: OnceLock<GroebnerBasis>,
    // partially completed engine left over from minimalization
    seed: Mutex<Option<Engine>>,
    label: Option<String>,
}

impl Clone for GradedSubmodule {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        GradedSubmodule {
            ambient: self.ambient.clone(),
            gens: self.gens.clone(),
            gb,
            seed: Mutex::new(None),
            label: self.label.clone(),
        }
    }
}

impl std::fmt::Debug for GradedSubmodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GradedSubmodule")
            .field("ambient", &self.ambient)
            .field("gens", &self.gens)
            .field("label", &self.label)
            .finish()
    }
}

impl GradedSubmodule {
    /// Zero generators are dropped; all others must be homogeneous elements of `ambient`.
    pub fn new(ambient: FreeModule, gens: Vec<FreeModuleElement>) -> Result<Self> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            ambient.check_element(&g)?;
            if g.is_zero() {
                continue;
            }
            if !ambient.is_homogeneous(&g) {
                return Err(Error::Input(format!("inhomogeneous generator {g}")));
            }
            kept.push(g);
        }
        Ok(GradedSubmodule {
            ambient,
            gens: kept,
            gb: OnceLock::new(),
            seed: Mutex::new(None),
            label: None,
        })
    }

    pub fn zero(ambient: FreeModule) -> Self {
        GradedSubmodule::new(ambient, Vec::new()).unwrap()
    }

    /// The whole ambient module.
    pub fn full(ambient: FreeModule) -> Self {
        let gens = (0..ambient.rank()).map(|i| ambient.basis_vector(i)).collect();
        GradedSubmodule::new(ambient, gens).unwrap()
    }

    fn with_seed(ambient: FreeModule, gens: Vec<FreeModuleElement>, engine: Engine) -> Self {
        GradedSubmodule {
            ambient,
            gens,
            gb: OnceLock::new(),
            seed: Mutex::new(Some(engine)),
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator_degrees(&self) -> Vec<i64> {
        self.gens
            .iter()
            .map(|g| self.ambient.degree_of(g).unwrap())
            .collect()
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            let seeded = self.seed.lock().unwrap().take();
            let engine = match seeded {
                Some(mut e) => {
                    e.complete_through(None);
                    e
                }
                None => {
                    let space = Space::new(self.ambient.nvars(), self.ambient.shifts(), &[]);
                    let mut e = Engine::new(space, false);
                    for g in &self.gens {
                        let v = e.space.embed(g, 0);
                        e.push_input(v);
                    }
                    e.complete_through(None);
                    e
                }
            };
            GroebnerBasis::from_engine(self.ambient.clone(), engine)
        })
    }

    pub fn normal_form(&self, v: &FreeModuleElement) -> Result<FreeModuleElement> {
        self.ambient.check_element(v)?;
        Ok(self.groebner().normal_form(v))
    }

    pub fn contains(&self, v: &FreeModuleElement) -> bool {
        self.groebner().reduces_to_zero(v)
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_module(&self, other: &GradedSubmodule) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_module(&self, other: &GradedSubmodule) -> bool {
        self.contains_module(other) && other.contains_module(self)
    }

    /// Coefficients `c` with `v = sum c_i gens_i`, or `None` if `v` is not a member.
    pub fn membership(&self, v: &FreeModuleElement) -> Result<Option<Vec<Polynomial>>> {
        self.ambient.check_element(v)?;
        if v.is_zero() {
            return Ok(Some(vec![Polynomial::zero(self.nvars()); self.gens.len()]));
        }
        let Some(dv) = self.ambient.degree_of(v) else {
            return Err(Error::Input("membership of an inhomogeneous element".into()));
        };
        let tags: Vec<i64> = self.generator_degrees();
        let space = Space::new(self.nvars(), self.ambient.shifts(), &tags);
        let mut e = Engine::new(space, false);
        for (i, g) in self.gens.iter().enumerate() {
            let t = FreeModuleElement::basis(self.nvars(), self.gens.len(), i);
            let sv = e.space.embed_pair(g, Some(&t));
            e.push_input(sv);
        }
        e.complete_through(Some(dv));
        let r = e.reduce(e.space.embed(v, 0), true);
        if !e.space.main_part(&r).is_zero() {
            return Ok(None);
        }
        let cert = e.space.tag_part(&r).neg().into_components();
        debug_assert_eq!(
            FreeModuleElement::combination(self.nvars(), self.ambient.rank(), &cert, &self.gens),
            *v
        );
        Ok(Some(cert))
    }

    /// Dimension of the degree-`d` piece.
    pub fn hilbert(&self, d: i64) -> u64 {
        self.ambient.hilbert(d) - self.groebner().quotient_hilbert(d)
    }

    /// Dimension of the degree-`d` piece of `ambient / self`.
    pub fn quotient_hilbert(&self, d: i64) -> u64 {
        self.groebner().quotient_hilbert(d)
    }

    /// The same submodule with a minimal homogeneous generating set.
    pub fn minimalize(&self) -> GradedSubmodule {
        let (gens, engine) = minimalize_with_engine(&self.ambient, &self.gens);
        let mut m = GradedSubmodule::with_seed(self.ambient.clone(), gens, engine);
        m.label = self.label.clone();
        if let Some(g) = self.gb.get() {
            let _ = m.gb.set(g.clone());
            *m.seed.lock().unwrap() = None;
        }
        m
    }

    /// First syzygies of the generators, in the free module with basis degrees equal to the generator degrees.
    pub fn syzygies(&self) -> GradedSubmodule {
        let source = FreeModule::new(self.nvars(), self.generator_degrees());
        kernel_into_quotient(&source, &self.gens, &self.ambient, &[]).unwrap()
    }

    /// Image of `self` under a coordinate map of components, keeping `rank` coordinates.
    pub fn map_elements(
        &self,
        ambient: FreeModule,
        f: impl Fn(&FreeModuleElement) -> FreeModuleElement,
    ) -> Result<GradedSubmodule> {
        GradedSubmodule::new(ambient, self.gens.iter().map(f).collect())
    }

    /// Sum of two submodules of the same ambient.
    pub fn sum(&self, other: &GradedSubmodule) -> GradedSubmodule {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GradedSubmodule::new(self.ambient.clone(), gens).unwrap()
    }
}

/// Minimal generators of the span of `gens` by graded Nakayama, degree by degree.
pub fn minimalize(ambient: &FreeModule, gens: &[FreeModuleElement]) -> Vec<FreeModuleElement> {
    minimalize_with_engine(ambient, gens).0
}

fn minimalize_with_engine(ambient: &FreeModule, gens: &[FreeModuleElement]) -> (Vec<FreeModuleElement>, Engine) {
    let mut items: Vec<(i64, &FreeModuleElement)> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (ambient.degree_of(g).expect("homogeneous generator"), g))
        .collect();
    items.sort_by_key(|(d, _)| *d);
    let space = Space::new(ambient.nvars(), ambient.shifts(), &[]);
    let mut engine = Engine::new(space, false);
    let mut out = Vec::new();
    for (d, g) in items {
        engine.complete_through(Some(d));
        let r = engine.reduce(engine.space.embed(g, 0), false);
        if !r.is_zero() {
            engine.push_input(r);
            engine.complete_through(Some(d));
            out.push(g.clone());
        }
    }
    (out, engine)
}

/// Kernel of `S^a -> target / <relations>`, `e_i ↦ images[i]`, as a minimally generated submodule of `source`.
pub fn kernel_into_quotient(
    source: &FreeModule,
    images: &[FreeModuleElement],
    target: &FreeModule,
    relations: &[FreeModuleElement],
) -> Result<GradedSubmodule> {
    if images.len() != source.rank() {
        return Err(Error::Input(format!(
            "{} images for a source of rank {}",
            images.len(),
            source.rank()
        )));
    }
    let n = source.nvars();
    if target.nvars() != n {
        return Err(Error::Input("source and target over different rings".into()));
    }
    let space = Space::new(n, target.shifts(), source.shifts());
    let mut engine = Engine::new(space, true);
    for (i, img) in images.iter().enumerate() {
        target.check_element(img)?;
        if !img.is_zero() && target.degree_of(img) != Some(source.shift(i)) {
            return Err(Error::Input(format!(
                "image {i} is not homogeneous of degree {}",
                source.shift(i)
            )));
        }
        let t = source.basis_vector(i);
        let sv = engine.space.embed_pair(img, Some(&t));
        engine.push_input(sv);
    }
    for r in relations {
        target.check_element(r)?;
        if r.is_zero() {
            continue;
        }
        if !target.is_homogeneous(r) {
            return Err(Error::Input(format!("inhomogeneous relation {r}")));
        }
        let sv = engine.space.embed(r, 0);
        engine.push_input(sv);
    }
    engine.complete_through(None);
    let space = engine.space.clone();
    let kernel: Vec<FreeModuleElement> = engine
        .syzygies
        .iter()
        .map(|(_, v): &(i64, SVec)| space.tag_part(v))
        .collect();
    let m = GradedSubmodule::new(source.clone(), kernel)?;
    Ok(m.minimalize())
}

/// Kernel of a graded map `S^a -> ⊕_j S/(q_j) ⊕ S^b`; moduli beyond `moduli.len()` are free.
pub fn kernel_of_map(
    source: &FreeModule,
    images: &[FreeModuleElement],
    target: &FreeModule,
    moduli: &[Polynomial],
) -> Result<GradedSubmodule> {
    let n = source.nvars();
    let mut rels = Vec::new();
    for (j, q) in moduli.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let mut r = FreeModuleElement::zero(n, target.rank());
        r.set_component(j, q.clone());
        rels.push(r);
    }
    kernel_into_quotient(source, images, target, &rels)
}

/// Syzygies of `gens` (which must be nonzero and homogeneous).
pub fn syzygy_basis(ambient: &FreeModule, gens: &[FreeModuleElement]) -> Result<GradedSubmodule> {
    let mut degs = Vec::with_capacity(gens.len());
    for g in gens {
        ambient.check_element(g)?;
        match ambient.degree_of(g) {
            Some(d) => degs.push(d),
            None if g.is_zero() => return Err(Error::Input("zero generator in syzygy request".into())),
            None => return Err(Error::Input(format!("inhomogeneous generator {g}"))),
        }
    }
    let source = FreeModule::new(ambient.nvars(), degs);
    kernel_into_quotient(&source, gens, ambient, &[])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::scalar::Scalar;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn col(n: usize, c: Vec<Polynomial>) -> FreeModuleElement {
        FreeModuleElement::from_components(n, c)
    }

    #[test]
    fn koszul_syzygy() {
        let s = FreeModule::uniform(2, 1, 0);
        let syz = syzygy_basis(&s, &[col(2, vec![x(2, 0)]), col(2, vec![x(2, 1)])]).unwrap();
        assert_eq!(syz.generators().len(), 1);
        let g = syz.generators()[0].primitive();
        assert_eq!(g, col(2, vec![x(2, 1), x(2, 0).neg()]));
    }

    #[test]
    fn syzygy_of_x2_and_x() {
        let s = FreeModule::uniform(2, 1, 0);
        let syz = syzygy_basis(&s, &[col(2, vec![x(2, 0).pow(2)]), col(2, vec![x(2, 0)])]).unwrap();
        assert_eq!(syz.generators().len(), 1);
        let g = syz.generators()[0].primitive();
        assert_eq!(g, col(2, vec![Polynomial::one(2), x(2, 0).neg()]));
        let single = syzygy_basis(&s, &[col(2, vec![x(2, 0)])]).unwrap();
        assert!(single.is_zero());
    }

    #[test]
    fn kernels() {
        let src = FreeModule::uniform(2, 2, 0);
        let k = kernel_of_map(
            &FreeModule::uniform(2, 2, 1),
            &[col(2, vec![x(2, 0)]), col(2, vec![x(2, 1)])],
            &FreeModule::uniform(2, 1, 0),
            &[],
        )
        .unwrap();
        assert_eq!(k.generators().len(), 1);
        let id = kernel_of_map(&src, &[src.basis_vector(0), src.basis_vector(1)], &src, &[]).unwrap();
        assert!(id.is_zero());
        // (f, g) ↦ f + g in S/(x)
        let t = FreeModule::uniform(2, 1, 0);
        let one = col(2, vec![Polynomial::one(2)]);
        let k = kernel_of_map(&src, &[one.clone(), one], &t, &[x(2, 0)]).unwrap();
        let expected = GradedSubmodule::new(
            src.clone(),
            vec![
                col(2, vec![Polynomial::one(2), Polynomial::one(2).neg()]),
                col(2, vec![x(2, 0), Polynomial::zero(2)]),
            ],
        )
        .unwrap();
        assert!(k.same_module(&expected));
        assert_eq!(k.generators().len(), 2);
    }

    #[test]
    fn membership_certificates() {
        let s = FreeModule::uniform(2, 1, 0);
        let m = GradedSubmodule::new(
            s.clone(),
            vec![col(2, vec![x(2, 0).add(&x(2, 1))]), col(2, vec![x(2, 0).sub(&x(2, 1))])],
        )
        .unwrap();
        let cert = m.membership(&col(2, vec![x(2, 0)])).unwrap().unwrap();
        let half = Polynomial::constant(2, Scalar::new(1, 2));
        assert_eq!(cert, vec![half.clone(), half]);
        let xy = GradedSubmodule::new(s.clone(), vec![col(2, vec![x(2, 0)]), col(2, vec![x(2, 1)])]).unwrap();
        assert!(!xy.contains(&col(2, vec![Polynomial::one(2)])));
    }

    #[test]
    fn minimalize_drops_redundant() {
        let s = FreeModule::uniform(2, 1, 0);
        let gens = vec![col(2, vec![x(2, 0)]), col(2, vec![x(2, 0).pow(2)]), col(2, vec![x(2, 1)])];
        let m = minimalize(&s, &gens);
        assert_eq!(m, vec![col(2, vec![x(2, 0)]), col(2, vec![x(2, 1)])]);
        let f = FreeModule::uniform(2, 2, 0);
        let xdx = col(2, vec![x(2, 0), Polynomial::zero(2)]);
        let ydy = col(2, vec![Polynomial::zero(2), x(2, 1)]);
        let e = xdx.add(&ydy);
        assert_eq!(minimalize(&f, &[xdx, ydy, e]).len(), 2);
    }

    #[test]
    fn hilbert_values() {
        let s = GradedSubmodule::full(FreeModule::uniform(2, 1, 0));
        assert_eq!(s.hilbert(4), 5);
        let xi = GradedSubmodule::new(FreeModule::uniform(2, 1, 0), vec![col(2, vec![x(2, 0)])]).unwrap();
        assert_eq!(xi.hilbert(1), 1);
    }
}

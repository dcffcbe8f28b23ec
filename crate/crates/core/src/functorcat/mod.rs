//! Functors, natural transformations and the constructions built from them.

mod catcat;
mod comma;
mod enumerate;
mod exponential;
mod functor_category;
mod properties;
mod yoneda;

pub use catcat::{cat_of, CatOf};
pub use comma::{comma_category, CommaCategory, CommaMorphism, CommaObject};
pub use enumerate::{enumerate_functors, enumerate_nat_trans, FunctorSearch};
pub use exponential::{curry, pair_law, ExponentialIso, ProductIso};
pub use functor_category::{functor_cat_op_iso, functor_category, FunctorCategory, OpIso};
pub use properties::{
    check_essentially_surjective, check_faithful, check_full, find_isomorphism,
    is_essentially_surjective, is_faithful, is_full, FaithfulnessWitness, FullnessWitness,
};
pub use yoneda::{
    count_representable_nat_trans, hom_functor, yoneda, Profunctor, YonedaEmbedding,
};

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A map of finite categories given by its object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functor {
    source: FinCategory,
    target: FinCategory,
    ob_map: Vec<ObId>,
    mor_map: Vec<MorId>,
}

impl Functor {
    /// Range-checks the tables; the functor laws are left to
    /// [`Functor::validate`].
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        ob_map: Vec<ObId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        if ob_map.len() != source.n_ob() {
            return Err(Error::Malformed(format!(
                "object map has {} entries for {} objects",
                ob_map.len(),
                source.n_ob()
            )));
        }
        if mor_map.len() != source.n_mor() {
            return Err(Error::Malformed(format!(
                "morphism map has {} entries for {} morphisms",
                mor_map.len(),
                source.n_mor()
            )));
        }
        if let Some(o) = ob_map.iter().find(|o| o.0 >= target.n_ob()) {
            return Err(Error::range("object", o.0, target.n_ob()));
        }
        if let Some(m) = mor_map.iter().find(|m| m.0 >= target.n_mor()) {
            return Err(Error::range("morphism", m.0, target.n_mor()));
        }
        Ok(Functor {
            source,
            target,
            ob_map,
            mor_map,
        })
    }

    /// Like [`Functor::new`] but also requires the functor laws.
    pub fn checked(
        source: FinCategory,
        target: FinCategory,
        ob_map: Vec<ObId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self> {
        let f = Self::new(source, target, ob_map, mor_map)?;
        f.validate().into_result("functor")?;
        Ok(f)
    }

    pub(crate) fn from_tables_unchecked(
        source: FinCategory,
        target: FinCategory,
        ob_map: Vec<ObId>,
        mor_map: Vec<MorId>,
    ) -> Self {
        debug_assert_eq!(ob_map.len(), source.n_ob());
        debug_assert_eq!(mor_map.len(), source.n_mor());
        Functor {
            source,
            target,
            ob_map,
            mor_map,
        }
    }

    pub fn identity(c: &FinCategory) -> Self {
        Functor {
            source: c.clone(),
            target: c.clone(),
            ob_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The functor sending everything to `object` and its identity.
    pub fn constant(source: &FinCategory, target: &FinCategory, object: ObId) -> Result<Self> {
        if object.0 >= target.n_ob() {
            return Err(Error::range("object", object.0, target.n_ob()));
        }
        let id = target.identity(object);
        Ok(Functor {
            source: source.clone(),
            target: target.clone(),
            ob_map: vec![object; source.n_ob()],
            mor_map: vec![id; source.n_mor()],
        })
    }

    /// A functor between thin categories, determined by its object map.
    pub fn between_preorders(
        source: &FinCategory,
        target: &FinCategory,
        ob_map: Vec<ObId>,
    ) -> Result<Self> {
        if ob_map.len() != source.n_ob() {
            return Err(Error::Malformed("object map length".into()));
        }
        let mut mor_map = Vec::with_capacity(source.n_mor());
        for f in source.morphisms() {
            let (s, t) = source.ends(f);
            let hom = target.hom(ob_map[s.0], ob_map[t.0]);
            match hom {
                [m] => mor_map.push(*m),
                [] => {
                    return Err(Error::shape(format!(
                        "object map is not monotone at {f}: no morphism {} → {}",
                        ob_map[s.0], ob_map[t.0]
                    )))
                }
                _ => return Err(Error::shape("target is not thin")),
            }
        }
        Functor::checked(source.clone(), target.clone(), ob_map, mor_map)
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    #[inline]
    pub fn ob(&self, x: ObId) -> ObId {
        self.ob_map[x.0]
    }

    #[inline]
    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    pub fn ob_map(&self) -> &[ObId] {
        &self.ob_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    pub fn validate(&self) -> ValidationReport {
        let (c, d) = (&self.source, &self.target);
        let mut r = ValidationReport::new();
        for f in c.morphisms() {
            let (s, t) = c.ends(f);
            let expected = (self.ob(s), self.ob(t));
            if d.ends(self.mor(f)) != expected {
                r.push(
                    "functor-endpoints",
                    vec![f.0],
                    format!(
                        "{f} ↦ {} with endpoints {:?}, expected {:?}",
                        self.mor(f),
                        d.ends(self.mor(f)),
                        expected
                    ),
                );
            }
        }
        for x in c.objects() {
            if self.mor(c.identity(x)) != d.identity(self.ob(x)) {
                r.push(
                    "functor-identity",
                    vec![x.0],
                    format!("identity of {x} is not sent to an identity"),
                );
            }
        }
        if r.has("functor-endpoints") {
            return r;
        }
        for f in c.morphisms() {
            for &g in c.out_of(c.tgt(f)) {
                let Some(gf) = c.compose(g, f) else { continue };
                let lhs = self.mor(gf);
                let rhs = d.compose(self.mor(g), self.mor(f));
                if rhs != Some(lhs) {
                    r.push(
                        "functor-composition",
                        vec![g.0, f.0],
                        format!("F({g} ∘ {f}) = {lhs} but F({g}) ∘ F({f}) = {rhs:?}"),
                    );
                }
            }
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The same tables read as a functor between the opposite categories.
    pub fn op(&self) -> Functor {
        Functor {
            source: self.source.op(),
            target: self.target.op(),
            ob_map: self.ob_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }
}

/// `op_functor(F): op(C) → op(D)`; the only dualisation needed since `op`
/// is an exact involution.
pub fn op_functor(f: &Functor) -> Functor {
    f.op()
}

/// `g ∘ f`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if f.target != g.source {
        return Err(Error::shape(format!(
            "cannot compose: target {:?} of the first functor differs from source {:?} of the second",
            f.target.name(),
            g.source.name()
        )));
    }
    Ok(Functor {
        source: f.source.clone(),
        target: g.target.clone(),
        ob_map: f.ob_map.iter().map(|&x| g.ob(x)).collect(),
        mor_map: f.mor_map.iter().map(|&m| g.mor(m)).collect(),
    })
}

/// A natural transformation between two functors with common source and
/// target, given by one component per source object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    source: Functor,
    target: Functor,
    components: Vec<MorId>,
}

impl NatTrans {
    /// Checks shapes and ranges; naturality is left to [`NatTrans::validate`].
    pub fn new(source: Functor, target: Functor, components: Vec<MorId>) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(Error::shape(
                "natural transformation between functors with different source or target",
            ));
        }
        if components.len() != source.source.n_ob() {
            return Err(Error::Malformed(format!(
                "{} components for {} objects",
                components.len(),
                source.source.n_ob()
            )));
        }
        let m = source.target.n_mor();
        if let Some(c) = components.iter().find(|c| c.0 >= m) {
            return Err(Error::range("morphism", c.0, m));
        }
        Ok(NatTrans {
            source,
            target,
            components,
        })
    }

    pub fn checked(source: Functor, target: Functor, components: Vec<MorId>) -> Result<Self> {
        let t = Self::new(source, target, components)?;
        t.validate().into_result("natural transformation")?;
        Ok(t)
    }

    pub fn identity(f: &Functor) -> Self {
        NatTrans {
            source: f.clone(),
            target: f.clone(),
            components: f.source.objects().map(|x| f.target.identity(f.ob(x))).collect(),
        }
    }

    pub fn source(&self) -> &Functor {
        &self.source
    }

    pub fn target(&self) -> &Functor {
        &self.target
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    #[inline]
    pub fn at(&self, x: ObId) -> MorId {
        self.components[x.0]
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.extend_from("source functor", self.source.validate());
        r.extend_from("target functor", self.target.validate());
        if !r.is_valid() {
            return r;
        }
        let (c, d) = (&self.source.source, &self.source.target);
        for x in c.objects() {
            let expected = (self.source.ob(x), self.target.ob(x));
            if d.ends(self.at(x)) != expected {
                r.push(
                    "component-endpoints",
                    vec![x.0],
                    format!("component at {x} has endpoints {:?}, expected {:?}", d.ends(self.at(x)), expected),
                );
            }
        }
        if !r.is_valid() {
            return r;
        }
        for f in c.morphisms() {
            let (s, t) = c.ends(f);
            let lhs = d.comp(self.target.mor(f), self.at(s));
            let rhs = d.comp(self.at(t), self.source.mor(f));
            if lhs != rhs {
                r.push(
                    "naturality",
                    vec![f.0],
                    format!("square for {f} does not commute: {lhs} ≠ {rhs}"),
                );
            }
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// `op_nat_trans(η: F ⇒ G): op(G) ⇒ op(F)` with the same components.
    pub fn op(&self) -> NatTrans {
        NatTrans {
            source: self.target.op(),
            target: self.source.op(),
            components: self.components.clone(),
        }
    }
}

pub fn op_nat_trans(t: &NatTrans) -> NatTrans {
    t.op()
}

/// `η` then `θ`: for `η: F ⇒ G` and `θ: G ⇒ H`, the transformation
/// `F ⇒ H` with components `θ_x ∘ η_x`.
pub fn vertical_compose(eta: &NatTrans, theta: &NatTrans) -> Result<NatTrans> {
    if eta.target != theta.source {
        return Err(Error::shape("vertical composition: middle functors differ"));
    }
    let d = &eta.source.target;
    let mut comps = Vec::with_capacity(eta.components.len());
    for (x, (&a, &b)) in eta.components.iter().zip(&theta.components).enumerate() {
        comps.push(d.compose(b, a).ok_or_else(|| {
            Error::shape(format!("components at o{x} are not composable"))
        })?);
    }
    NatTrans::new(eta.source.clone(), theta.target.clone(), comps)
}

/// `F η`: for `F: D → E` and `η: G ⇒ H` between functors into `D`, the
/// transformation `F ∘ G ⇒ F ∘ H` with components `F(η_x)`.
pub fn whisker_left(f: &Functor, eta: &NatTrans) -> Result<NatTrans> {
    let source = compose_functors(f, &eta.source)?;
    let target = compose_functors(f, &eta.target)?;
    let comps = eta.components.iter().map(|&m| f.mor(m)).collect();
    NatTrans::new(source, target, comps)
}

/// `η F`: for `η: G ⇒ H` and `F` into the source of `G`, the transformation
/// `G ∘ F ⇒ H ∘ F` with components `η_{F x}`.
pub fn whisker_right(eta: &NatTrans, f: &Functor) -> Result<NatTrans> {
    let source = compose_functors(&eta.source, f)?;
    let target = compose_functors(&eta.target, f)?;
    let comps = f.ob_map.iter().map(|&x| eta.at(x)).collect();
    NatTrans::new(source, target, comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, terminal_category, walking_arrow};

    #[test]
    fn identity_and_constant_functors_validate() {
        for c in [chain(3), discrete_category(2), walking_arrow()] {
            assert!(Functor::identity(&c).is_valid());
            assert!(Functor::constant(&c, &terminal_category(), ObId(0)).unwrap().is_valid());
        }
    }

    #[test]
    fn endpoint_violation() {
        let two = walking_arrow();
        // a ↦ id0 while objects are fixed
        let f = Functor::new(
            two.clone(),
            two.clone(),
            vec![ObId(0), ObId(1)],
            vec![MorId(0), MorId(1), MorId(0)],
        )
        .unwrap();
        let r = f.validate();
        assert!(r.has("functor-endpoints"));
        assert_eq!(r.violations[0].witness, vec![2]);
    }

    #[test]
    fn op_functor_is_involutive() {
        let two = walking_arrow();
        let f = Functor::between_preorders(&two, &chain(3), vec![ObId(0), ObId(2)]).unwrap();
        assert!(f.op().is_valid());
        assert_eq!(f.op().op(), f);
        assert_eq!(Functor::identity(&two).op(), Functor::identity(&two.op()));
        let k = Functor::constant(&two, &chain(3), ObId(1)).unwrap();
        assert_eq!(k.op(), Functor::constant(&two.op(), &chain(3).op(), ObId(1)).unwrap());
    }

    #[test]
    fn mismatched_functors_rejected() {
        let f = Functor::identity(&chain(2));
        let g = Functor::identity(&chain(3));
        assert!(matches!(NatTrans::new(f.clone(), g.clone(), vec![]), Err(Error::ShapeMismatch(_))));
        assert!(compose_functors(&g, &f).is_err());
    }

    #[test]
    fn whiskering_with_identity_functor() {
        let two = walking_arrow();
        let c0 = Functor::constant(&two, &two, ObId(0)).unwrap();
        let id = Functor::identity(&two);
        let eta = NatTrans::checked(c0, id.clone(), vec![MorId(0), MorId(2)]).unwrap();
        let left = whisker_left(&id, &eta).unwrap();
        assert_eq!(left.components(), eta.components());
        assert_eq!(left, eta);
        let right = whisker_right(&eta, &id).unwrap();
        assert_eq!(right, eta);
        let unit = NatTrans::identity(eta.target());
        assert_eq!(vertical_compose(&eta, &unit).unwrap(), eta);
        assert_eq!(eta.op().op(), eta);
        assert!(eta.op().is_valid());
    }
}

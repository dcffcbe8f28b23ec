use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Error, Result};

use super::enumerate::{nat_trans_components, FunctorSearch};
use super::{Functor, NatTrans};

/// The category of functors `source → target` and natural transformations,
/// together with the index relating its identifiers to the functors and
/// transformations they stand for.
///
/// Objects are functors in enumeration order. Morphisms are ordered by
/// (source functor, target functor, components).
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: FinCategory,
    source: FinCategory,
    target: FinCategory,
    functors: Vec<Functor>,
    transformations: Vec<(ObId, ObId, Vec<MorId>)>,
    functor_index: HashMap<(Vec<ObId>, Vec<MorId>), ObId>,
    trans_index: HashMap<(ObId, ObId, Vec<MorId>), MorId>,
}

impl FunctorCategory {
    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn functors(&self) -> &[Functor] {
        &self.functors
    }

    pub fn functor(&self, x: ObId) -> &Functor {
        &self.functors[x.0]
    }

    pub fn nat_trans(&self, m: MorId) -> NatTrans {
        let (s, t, comps) = &self.transformations[m.0];
        NatTrans::new(self.functors[s.0].clone(), self.functors[t.0].clone(), comps.clone())
            .expect("indexed transformation is well-formed")
    }

    pub fn components(&self, m: MorId) -> &[MorId] {
        &self.transformations[m.0].2
    }

    /// The object standing for `f`, matched by its tables.
    pub fn object_of(&self, f: &Functor) -> Option<ObId> {
        self.object_of_maps(f.ob_map(), f.mor_map())
    }

    pub fn object_of_maps(&self, ob: &[ObId], mor: &[MorId]) -> Option<ObId> {
        self.functor_index.get(&(ob.to_vec(), mor.to_vec())).copied()
    }

    pub fn morphism_of(&self, t: &NatTrans) -> Option<MorId> {
        let s = self.object_of(t.source())?;
        let e = self.object_of(t.target())?;
        self.morphism_between(s, e, t.components())
    }

    pub fn morphism_between(&self, from: ObId, to: ObId, components: &[MorId]) -> Option<MorId> {
        self.trans_index.get(&(from, to, components.to_vec())).copied()
    }
}

/// Builds the functor category `target^source`.
pub fn functor_category(
    source: &FinCategory,
    target: &FinCategory,
    cap: usize,
) -> Result<FunctorCategory> {
    let mut budget = Budget::new(cap);
    let functors = FunctorSearch::new(source, target).collect(&mut budget)?;
    build(source, target, functors, &mut budget)
}

pub(crate) fn build(
    source: &FinCategory,
    target: &FinCategory,
    functors: Vec<Functor>,
    budget: &mut Budget,
) -> Result<FunctorCategory> {
    let mut transformations = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            nat_trans_components(f, g, budget, &mut |comps| {
                transformations.push((ObId(i), ObId(j), comps.to_vec()));
                ControlFlow::Continue(())
            })?;
        }
    }
    let functor_index: HashMap<_, _> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.ob_map().to_vec(), f.mor_map().to_vec()), ObId(i)))
        .collect();
    let trans_index: HashMap<_, _> = transformations
        .iter()
        .enumerate()
        .map(|(k, t)| (t.clone(), MorId(k)))
        .collect();
    let ends = transformations.iter().map(|(s, t, _)| (*s, *t)).collect();
    let identity = functors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let comps: Vec<MorId> = source.objects().map(|x| target.identity(f.ob(x))).collect();
            trans_index[&(ObId(i), ObId(i), comps)]
        })
        .collect();
    budget.charge(transformations.len())?;
    let category = FinCategory::from_fn(
        format!("[{}, {}]", source.name(), target.name()),
        functors.len(),
        ends,
        identity,
        |g, f| {
            let (a, _, fc) = &transformations[f.0];
            let (_, c, gc) = &transformations[g.0];
            let comps: Vec<MorId> = fc.iter().zip(gc).map(|(&x, &y)| target.comp(y, x)).collect();
            trans_index[&(*a, *c, comps)]
        },
    )?;
    Ok(FunctorCategory {
        category,
        source: source.clone(),
        target: target.clone(),
        functors,
        transformations,
        functor_index,
        trans_index,
    })
}

/// An isomorphism `[op C, op D] ≅ op([C, D])` given by reading each functor
/// `op C → op D` as a functor `C → D` and each transformation as one in the
/// opposite direction.
#[derive(Clone, Debug)]
pub struct OpIso {
    pub dual: FunctorCategory,
    pub plain: FunctorCategory,
    /// `dual.category → op(plain.category)`
    pub forward: Functor,
    /// `op(plain.category) → dual.category`
    pub backward: Functor,
    /// Whether the two categories are structurally equal, not only isomorphic.
    pub structurally_equal: bool,
}

pub fn functor_cat_op_iso(c: &FinCategory, d: &FinCategory, cap: usize) -> Result<OpIso> {
    let dual = functor_category(&c.op(), &d.op(), cap)?;
    let plain = functor_category(c, d, cap)?;
    let flipped = plain.category.op();
    if dual.category.n_ob() != flipped.n_ob() || dual.category.n_mor() != flipped.n_mor() {
        return Err(Error::shape("functor categories have different sizes"));
    }
    let mut fwd_ob = Vec::with_capacity(dual.category.n_ob());
    for f in dual.functors() {
        fwd_ob.push(
            plain
                .object_of_maps(f.ob_map(), f.mor_map())
                .ok_or_else(|| Error::shape("dual functor has no plain counterpart"))?,
        );
    }
    let mut fwd_mor = Vec::with_capacity(dual.category.n_mor());
    for m in dual.category.morphisms() {
        let (s, t) = dual.category.ends(m);
        let image = plain
            .morphism_between(fwd_ob[t.0], fwd_ob[s.0], dual.components(m))
            .ok_or_else(|| Error::shape("dual transformation has no plain counterpart"))?;
        fwd_mor.push(image);
    }
    let mut bwd_ob = vec![ObId(0); fwd_ob.len()];
    for (i, &o) in fwd_ob.iter().enumerate() {
        bwd_ob[o.0] = ObId(i);
    }
    let mut bwd_mor = vec![MorId(0); fwd_mor.len()];
    for (i, &m) in fwd_mor.iter().enumerate() {
        bwd_mor[m.0] = MorId(i);
    }
    let forward = Functor::checked(dual.category.clone(), flipped.clone(), fwd_ob, fwd_mor)?;
    let backward = Functor::checked(flipped.clone(), dual.category.clone(), bwd_ob, bwd_mor)?;
    let structurally_equal = dual.category == flipped;
    Ok(OpIso {
        dual,
        plain,
        forward,
        backward,
        structurally_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, product_category, terminal_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::functorcat::{compose_functors, find_isomorphism, vertical_compose};

    #[test]
    fn walking_arrow_functor_category_is_chain_three() {
        let two = walking_arrow();
        let fc = functor_category(&two, &two, DEFAULT_CAP).unwrap();
        assert_eq!((fc.category.n_ob(), fc.category.n_mor()), (3, 6));
        assert!(fc.category.is_valid());
        assert!(find_isomorphism(&fc.category, &chain(3), DEFAULT_CAP).unwrap().is_some());
    }

    #[test]
    fn discrete_exponent_is_product() {
        let fc = functor_category(&discrete_category(2), &walking_arrow(), DEFAULT_CAP).unwrap();
        assert_eq!((fc.category.n_ob(), fc.category.n_mor()), (4, 9));
        let sq = product_category(&walking_arrow(), &walking_arrow());
        assert!(find_isomorphism(&fc.category, &sq, DEFAULT_CAP).unwrap().is_some());
    }

    #[test]
    fn into_terminal_is_terminal() {
        let fc = functor_category(&chain(3), &terminal_category(), DEFAULT_CAP).unwrap();
        assert_eq!((fc.category.n_ob(), fc.category.n_mor()), (1, 1));
    }

    #[test]
    fn the_two_non_identity_transformations_compose() {
        let two = walking_arrow();
        let fc = functor_category(&two, &two, DEFAULT_CAP).unwrap();
        // objects: const 0, identity, const 1
        let m01 = fc.category.hom(ObId(0), ObId(1))[0];
        let m12 = fc.category.hom(ObId(1), ObId(2))[0];
        let m02 = fc.category.hom(ObId(0), ObId(2))[0];
        let composite = vertical_compose(&fc.nat_trans(m01), &fc.nat_trans(m12)).unwrap();
        assert_eq!(composite, fc.nat_trans(m02));
        assert_eq!(fc.category.comp(m12, m01), m02);
    }

    #[test]
    fn op_iso_round_trips() {
        for (c, d) in [
            (walking_arrow(), walking_arrow()),
            (terminal_category(), chain(3)),
            (discrete_category(2), discrete_category(2)),
        ] {
            let iso = functor_cat_op_iso(&c, &d, DEFAULT_CAP).unwrap();
            let there_back = compose_functors(&iso.backward, &iso.forward).unwrap();
            assert_eq!(there_back, Functor::identity(&iso.dual.category));
            let back_there = compose_functors(&iso.forward, &iso.backward).unwrap();
            assert_eq!(back_there, Functor::identity(&iso.plain.category.op()));
        }
        let iso = functor_cat_op_iso(&walking_arrow(), &walking_arrow(), DEFAULT_CAP).unwrap();
        assert_eq!(iso.dual.category.n_ob(), 3);
        assert_eq!(iso.dual.category.n_mor(), 6);
    }
}

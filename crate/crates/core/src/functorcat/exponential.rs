use crate::category::{product_category, FinCategory, MorId, ObId};
use crate::error::{Error, Result};

use super::functor_category::{functor_category, FunctorCategory};
use super::{compose_functors, Functor};

/// `[D × E, C] ≅ [E, [D, C]]`.
#[derive(Clone, Debug)]
pub struct ExponentialIso {
    /// `[D × E, C]`
    pub uncurried: FunctorCategory,
    /// `[D, C]`
    pub inner: FunctorCategory,
    /// `[E, [D, C]]`
    pub curried: FunctorCategory,
    pub curry: Functor,
    pub uncurry: Functor,
}

impl ExponentialIso {
    /// Whether both composites are identity functors.
    pub fn round_trips(&self) -> bool {
        round_trips(&self.curry, &self.uncurry)
    }
}

fn round_trips(forward: &Functor, backward: &Functor) -> bool {
    let there = compose_functors(backward, forward);
    let back = compose_functors(forward, backward);
    there.is_ok_and(|f| f == Functor::identity(forward.source()))
        && back.is_ok_and(|f| f == Functor::identity(forward.target()))
}

fn missing(what: &str) -> Error {
    Error::Malformed(format!("{what} has no counterpart in the functor category"))
}

pub fn curry(c: &FinCategory, d: &FinCategory, e: &FinCategory, cap: usize) -> Result<ExponentialIso> {
    let de = product_category(d, e);
    let uncurried = functor_category(&de, c, cap)?;
    let inner = functor_category(d, c, cap)?;
    let curried = functor_category(e, &inner.category, cap)?;
    let (ne, me) = (e.n_ob(), e.n_mor());
    let pair_ob = |x: ObId, y: ObId| ObId(x.0 * ne + y.0);
    let pair_mor = |f: MorId, u: MorId| MorId(f.0 * me + u.0);

    // H(−, y) as an object of [D, C]
    let slice = |h: &Functor, y: ObId| -> Result<ObId> {
        let ob: Vec<ObId> = d.objects().map(|x| h.ob(pair_ob(x, y))).collect();
        let mor: Vec<MorId> = d.morphisms().map(|f| h.mor(pair_mor(f, e.identity(y)))).collect();
        inner.object_of_maps(&ob, &mor).ok_or_else(|| missing("a slice"))
    };

    let mut curry_ob = Vec::with_capacity(uncurried.functors().len());
    let mut slices = Vec::with_capacity(uncurried.functors().len());
    for h in uncurried.functors() {
        let ob: Vec<ObId> = e.objects().map(|y| slice(h, y)).collect::<Result<_>>()?;
        let mut mor = Vec::with_capacity(me);
        for u in e.morphisms() {
            let (y, y2) = e.ends(u);
            let comps: Vec<MorId> = d.objects().map(|x| h.mor(pair_mor(d.identity(x), u))).collect();
            mor.push(
                inner
                    .morphism_between(ob[y.0], ob[y2.0], &comps)
                    .ok_or_else(|| missing("a transformation between slices"))?,
            );
        }
        curry_ob.push(curried.object_of_maps(&ob, &mor).ok_or_else(|| missing("a curried functor"))?);
        slices.push(ob);
    }
    let mut curry_mor = Vec::with_capacity(uncurried.category.n_mor());
    for m in uncurried.category.morphisms() {
        let (s, t) = uncurried.category.ends(m);
        let alpha = uncurried.components(m);
        let comps: Vec<MorId> = e
            .objects()
            .map(|y| {
                let inner_comps: Vec<MorId> = d.objects().map(|x| alpha[pair_ob(x, y).0]).collect();
                inner
                    .morphism_between(slices[s.0][y.0], slices[t.0][y.0], &inner_comps)
                    .ok_or_else(|| missing("a sliced transformation"))
            })
            .collect::<Result<_>>()?;
        curry_mor.push(
            curried
                .morphism_between(curry_ob[s.0], curry_ob[t.0], &comps)
                .ok_or_else(|| missing("a curried transformation"))?,
        );
    }
    let curry_f = Functor::checked(uncurried.category.clone(), curried.category.clone(), curry_ob, curry_mor)?;

    let mut uncurry_ob = Vec::with_capacity(curried.functors().len());
    for g in curried.functors() {
        let ob: Vec<ObId> = de
            .objects()
            .map(|p| inner.functor(g.ob(ObId(p.0 % ne))).ob(ObId(p.0 / ne)))
            .collect();
        let mor: Vec<MorId> = de
            .morphisms()
            .map(|p| {
                let (f, u) = (MorId(p.0 / me), MorId(p.0 % me));
                let x = d.src(f);
                let y2 = e.tgt(u);
                // G(y')(f) ∘ G(u)_x
                let along = inner.components(g.mor(u))[x.0];
                c.comp(inner.functor(g.ob(y2)).mor(f), along)
            })
            .collect();
        uncurry_ob.push(uncurried.object_of_maps(&ob, &mor).ok_or_else(|| missing("an uncurried functor"))?);
    }
    let mut uncurry_mor = Vec::with_capacity(curried.category.n_mor());
    for m in curried.category.morphisms() {
        let (s, t) = curried.category.ends(m);
        let beta = curried.components(m);
        let comps: Vec<MorId> = de
            .objects()
            .map(|p| inner.components(beta[p.0 % ne])[p.0 / ne])
            .collect();
        uncurry_mor.push(
            uncurried
                .morphism_between(uncurry_ob[s.0], uncurry_ob[t.0], &comps)
                .ok_or_else(|| missing("an uncurried transformation"))?,
        );
    }
    let uncurry_f = Functor::checked(curried.category.clone(), uncurried.category.clone(), uncurry_ob, uncurry_mor)?;
    Ok(ExponentialIso {
        uncurried,
        inner,
        curried,
        curry: curry_f,
        uncurry: uncurry_f,
    })
}

/// `[E, C × D] ≅ [E, C] × [E, D]`.
#[derive(Clone, Debug)]
pub struct ProductIso {
    /// `[E, C × D]`
    pub paired: FunctorCategory,
    /// `[E, C]`
    pub left: FunctorCategory,
    /// `[E, D]`
    pub right: FunctorCategory,
    /// `[E, C] × [E, D]`
    pub product: FinCategory,
    pub split: Functor,
    pub pair: Functor,
}

impl ProductIso {
    pub fn round_trips(&self) -> bool {
        round_trips(&self.split, &self.pair)
    }
}

pub fn pair_law(c: &FinCategory, d: &FinCategory, e: &FinCategory, cap: usize) -> Result<ProductIso> {
    let cd = product_category(c, d);
    let paired = functor_category(e, &cd, cap)?;
    let left = functor_category(e, c, cap)?;
    let right = functor_category(e, d, cap)?;
    let product = product_category(&left.category, &right.category);
    let (nd, md) = (d.n_ob(), d.n_mor());
    let (nr, mr) = (right.category.n_ob(), right.category.n_mor());

    let mut split_ob = Vec::with_capacity(paired.functors().len());
    for h in paired.functors() {
        let l_ob: Vec<ObId> = h.ob_map().iter().map(|p| ObId(p.0 / nd)).collect();
        let l_mor: Vec<MorId> = h.mor_map().iter().map(|p| MorId(p.0 / md)).collect();
        let r_ob: Vec<ObId> = h.ob_map().iter().map(|p| ObId(p.0 % nd)).collect();
        let r_mor: Vec<MorId> = h.mor_map().iter().map(|p| MorId(p.0 % md)).collect();
        let l = left.object_of_maps(&l_ob, &l_mor).ok_or_else(|| missing("a left projection"))?;
        let r = right.object_of_maps(&r_ob, &r_mor).ok_or_else(|| missing("a right projection"))?;
        split_ob.push(ObId(l.0 * nr + r.0));
    }
    let mut split_mor = Vec::with_capacity(paired.category.n_mor());
    for m in paired.category.morphisms() {
        let (s, t) = paired.category.ends(m);
        let comps = paired.components(m);
        let (ls, rs) = (ObId(split_ob[s.0].0 / nr), ObId(split_ob[s.0].0 % nr));
        let (lt, rt) = (ObId(split_ob[t.0].0 / nr), ObId(split_ob[t.0].0 % nr));
        let l_comps: Vec<MorId> = comps.iter().map(|p| MorId(p.0 / md)).collect();
        let r_comps: Vec<MorId> = comps.iter().map(|p| MorId(p.0 % md)).collect();
        let l = left.morphism_between(ls, lt, &l_comps).ok_or_else(|| missing("a left transformation"))?;
        let r = right.morphism_between(rs, rt, &r_comps).ok_or_else(|| missing("a right transformation"))?;
        split_mor.push(MorId(l.0 * mr + r.0));
    }
    let split = Functor::checked(paired.category.clone(), product.clone(), split_ob, split_mor)?;

    let mut pair_ob = Vec::with_capacity(product.n_ob());
    for p in product.objects() {
        let (f, g) = (left.functor(ObId(p.0 / nr)), right.functor(ObId(p.0 % nr)));
        let ob: Vec<ObId> = e.objects().map(|x| ObId(f.ob(x).0 * nd + g.ob(x).0)).collect();
        let mor: Vec<MorId> = e.morphisms().map(|u| MorId(f.mor(u).0 * md + g.mor(u).0)).collect();
        pair_ob.push(paired.object_of_maps(&ob, &mor).ok_or_else(|| missing("a paired functor"))?);
    }
    let mut pair_mor = Vec::with_capacity(product.n_mor());
    for p in product.morphisms() {
        let (s, t) = product.ends(p);
        let (lm, rm) = (MorId(p.0 / mr), MorId(p.0 % mr));
        let comps: Vec<MorId> = left
            .components(lm)
            .iter()
            .zip(right.components(rm))
            .map(|(a, b)| MorId(a.0 * md + b.0))
            .collect();
        pair_mor.push(
            paired
                .morphism_between(pair_ob[s.0], pair_ob[t.0], &comps)
                .ok_or_else(|| missing("a paired transformation"))?,
        );
    }
    let pair = Functor::checked(product.clone(), paired.category.clone(), pair_ob, pair_mor)?;
    Ok(ProductIso {
        paired,
        left,
        right,
        product,
        split,
        pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete_category, terminal_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::functorcat::find_isomorphism;

    #[test]
    fn six_equals_six() {
        let two = walking_arrow();
        let iso = curry(&two, &two, &two, DEFAULT_CAP).unwrap();
        assert_eq!(iso.uncurried.category.n_ob(), 6);
        assert_eq!(iso.curried.category.n_ob(), 6);
        assert!(iso.round_trips());
    }

    #[test]
    fn terminal_exponent_collapses() {
        let (c, d) = (walking_arrow(), discrete_category(2));
        let iso = curry(&c, &d, &terminal_category(), DEFAULT_CAP).unwrap();
        assert!(iso.round_trips());
        assert!(find_isomorphism(&iso.curried.category, &iso.inner.category, DEFAULT_CAP)
            .unwrap()
            .is_some());
    }

    #[test]
    fn pairing_law() {
        let two = walking_arrow();
        let iso = pair_law(&two, &two, &two, DEFAULT_CAP).unwrap();
        assert!(iso.round_trips());
        assert_eq!(iso.paired.category.n_ob(), 9);
    }
}

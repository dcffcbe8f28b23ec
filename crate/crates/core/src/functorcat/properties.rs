use std::collections::HashSet;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Result};

use super::enumerate::FunctorSearch;
use super::Functor;

/// A morphism `F x → F y` that is not the image of any `x → y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FullnessWitness {
    pub x: ObId,
    pub y: ObId,
    pub missed: MorId,
}

/// Two distinct morphisms `x → y` with the same image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaithfulnessWitness {
    pub x: ObId,
    pub y: ObId,
    pub first: MorId,
    pub second: MorId,
}

pub fn check_full(f: &Functor) -> Result<(), FullnessWitness> {
    let (c, d) = (f.source(), f.target());
    for x in c.objects() {
        for y in c.objects() {
            let image: HashSet<MorId> = c.hom(x, y).iter().map(|&m| f.mor(m)).collect();
            if let Some(&missed) = d.hom(f.ob(x), f.ob(y)).iter().find(|m| !image.contains(m)) {
                return Err(FullnessWitness { x, y, missed });
            }
        }
    }
    Ok(())
}

pub fn check_faithful(f: &Functor) -> Result<(), FaithfulnessWitness> {
    let c = f.source();
    for x in c.objects() {
        for y in c.objects() {
            let hom = c.hom(x, y);
            for (i, &a) in hom.iter().enumerate() {
                if let Some(&b) = hom[i + 1..].iter().find(|&&b| f.mor(b) == f.mor(a)) {
                    return Err(FaithfulnessWitness {
                        x,
                        y,
                        first: a,
                        second: b,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Fails with the first target object not isomorphic to any image object.
pub fn check_essentially_surjective(f: &Functor, cap: usize) -> crate::Result<Result<(), ObId>> {
    let d = f.target();
    let mut budget = Budget::new(cap);
    let image: HashSet<ObId> = f.ob_map().iter().copied().collect();
    for y in d.objects() {
        let mut reached = false;
        for &x in &image {
            for &m in d.hom(x, y) {
                budget.tick()?;
                if d.is_iso(m) {
                    reached = true;
                    break;
                }
            }
            if reached {
                break;
            }
        }
        if !reached {
            return Ok(Err(y));
        }
    }
    Ok(Ok(()))
}

pub fn is_full(f: &Functor) -> bool {
    check_full(f).is_ok()
}

pub fn is_faithful(f: &Functor) -> bool {
    check_faithful(f).is_ok()
}

pub fn is_essentially_surjective(f: &Functor, cap: usize) -> crate::Result<bool> {
    Ok(check_essentially_surjective(f, cap)?.is_ok())
}

/// An isomorphism of categories `c ≅ d` and its inverse, if one exists.
pub fn find_isomorphism(
    c: &FinCategory,
    d: &FinCategory,
    cap: usize,
) -> crate::Result<Option<(Functor, Functor)>> {
    let mut budget = Budget::new(cap);
    let Some(f) = FunctorSearch::new(c, d).bijective().first(&mut budget)? else {
        return Ok(None);
    };
    let mut ob = vec![ObId(0); d.n_ob()];
    for (i, &o) in f.ob_map().iter().enumerate() {
        ob[o.0] = ObId(i);
    }
    let mut mor = vec![MorId(0); d.n_mor()];
    for (i, &m) in f.mor_map().iter().enumerate() {
        mor[m.0] = MorId(i);
    }
    let g = Functor::checked(d.clone(), c.clone(), ob, mor)?;
    Ok(Some((f, g)))
}

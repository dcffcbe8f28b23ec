use crate::category::{terminal_category, MorId, ObId};
use crate::error::Result;
use crate::functorcat::{comma_category, Functor};

use super::initial_objects;

/// An arrow `object → U(apex)` through which every arrow
/// `object → U(d')` factors uniquely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalMorphism {
    pub functor: Functor,
    pub object: ObId,
    pub apex: ObId,
    pub arrow: MorId,
}

impl UniversalMorphism {
    /// The first `h: apex → d` with `U(h) ∘ arrow = g`.
    pub fn factor(&self, d: ObId, g: MorId) -> Option<MorId> {
        let (u, c) = (&self.functor, self.functor.target());
        u.source()
            .hom(self.apex, d)
            .iter()
            .copied()
            .find(|&h| c.comp(u.mor(h), self.arrow) == g)
    }
}

/// The initial object of `(object ↓ U)`, or `None` if it has none.
pub fn universal_morphism_from(object: ObId, u: &Functor) -> Result<Option<UniversalMorphism>> {
    let c = u.target();
    let point = Functor::constant(&terminal_category(), c, object)?;
    let comma = comma_category(&point, u)?;
    Ok(initial_objects(&comma.category).first().map(|&x| {
        let o = comma.objects[x.0];
        UniversalMorphism {
            functor: u.clone(),
            object,
            apex: o.right,
            arrow: o.arrow,
        }
    }))
}

/// A universal morphism from `object` to `op(F)`; read in the original
/// categories its arrow is a terminal arrow `F(apex) → object`.
pub fn universal_morphism_to(f: &Functor, object: ObId) -> Result<Option<UniversalMorphism>> {
    universal_morphism_from(object, &f.op())
}

/// Checks the factorization property against every arrow
/// `object → U(d')`.
pub fn verify_universal(um: &UniversalMorphism) -> bool {
    let (u, c, d) = (&um.functor, um.functor.target(), um.functor.source());
    if c.ends(um.arrow) != (um.object, u.ob(um.apex)) {
        return false;
    }
    d.objects().all(|d2| {
        c.hom(um.object, u.ob(d2)).iter().all(|&g| {
            d.hom(um.apex, d2)
                .iter()
                .filter(|&&h| c.comp(u.mor(h), um.arrow) == g)
                .count()
                == 1
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, walking_arrow};

    #[test]
    fn galois_right_adjoint() {
        let (c2, c3) = (chain(2), chain(3));
        let g = Functor::between_preorders(&c3, &c2, vec![ObId(0), ObId(0), ObId(1)]).unwrap();
        let um = universal_morphism_from(ObId(1), &g).unwrap().unwrap();
        assert_eq!(um.apex, ObId(2));
        assert_eq!(um.arrow, c2.identity(ObId(1)));
        assert!(verify_universal(&um));
    }

    #[test]
    fn identity_functor() {
        let two = walking_arrow();
        for x in two.objects() {
            let um = universal_morphism_from(x, &Functor::identity(&two)).unwrap().unwrap();
            assert_eq!((um.apex, um.arrow), (x, two.identity(x)));
        }
    }

    #[test]
    fn absent_when_no_arrows() {
        let two = walking_arrow();
        let k = Functor::constant(&discrete_category(1), &two, ObId(0)).unwrap();
        assert!(universal_morphism_from(ObId(1), &k).unwrap().is_none());
    }

    #[test]
    fn dual_form() {
        let (c2, c3) = (chain(2), chain(3));
        let f = Functor::between_preorders(&c2, &c3, vec![ObId(0), ObId(2)]).unwrap();
        // the largest x with f(x) ≤ 1 is 0
        let um = universal_morphism_to(&f, ObId(1)).unwrap().unwrap();
        assert_eq!(um.apex, ObId(0));
        assert!(verify_universal(&um));
        assert_eq!(um.factor(ObId(0), um.arrow), Some(c2.identity(ObId(0))));
    }
}

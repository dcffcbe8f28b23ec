use std::collections::HashMap;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Error, Result};

use super::Functor;

/// An object `(c, d, h: F c → G d)` of a comma category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommaObject {
    pub left: ObId,
    pub right: ObId,
    pub arrow: MorId,
}

/// A commuting square `(f: c → c', g: d → d')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommaMorphism {
    pub source: ObId,
    pub target: ObId,
    pub left: MorId,
    pub right: MorId,
}

#[derive(Clone, Debug)]
pub struct CommaCategory {
    pub category: FinCategory,
    pub objects: Vec<CommaObject>,
    pub morphisms: Vec<CommaMorphism>,
    pub proj_left: Functor,
    pub proj_right: Functor,
}

/// The comma category `(F ↓ G)` for `F: C → E` and `G: D → E`.
///
/// Objects are ordered by `(c, d, h)` and morphisms by
/// `(source, target, f, g)`.
pub fn comma_category(f: &Functor, g: &Functor) -> Result<CommaCategory> {
    if f.target() != g.target() {
        return Err(Error::shape("comma category needs functors with a common target"));
    }
    let (c, d, e) = (f.source(), g.source(), f.target());
    let mut objects = Vec::new();
    for x in c.objects() {
        for y in d.objects() {
            for &h in e.hom(f.ob(x), g.ob(y)) {
                objects.push(CommaObject {
                    left: x,
                    right: y,
                    arrow: h,
                });
            }
        }
    }
    let mut morphisms = Vec::new();
    for (si, s) in objects.iter().enumerate() {
        for (ti, t) in objects.iter().enumerate() {
            for &u in c.hom(s.left, t.left) {
                for &v in d.hom(s.right, t.right) {
                    // G(v) ∘ h = h' ∘ F(u)
                    if e.comp(g.mor(v), s.arrow) == e.comp(t.arrow, f.mor(u)) {
                        morphisms.push(CommaMorphism {
                            source: ObId(si),
                            target: ObId(ti),
                            left: u,
                            right: v,
                        });
                    }
                }
            }
        }
    }
    let index: HashMap<CommaMorphism, MorId> = morphisms
        .iter()
        .enumerate()
        .map(|(k, m)| (*m, MorId(k)))
        .collect();
    let identity = objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            index[&CommaMorphism {
                source: ObId(i),
                target: ObId(i),
                left: c.identity(o.left),
                right: d.identity(o.right),
            }]
        })
        .collect();
    let category = FinCategory::from_fn(
        format!("({} ↓ {})", c.name(), d.name()),
        objects.len(),
        morphisms.iter().map(|m| (m.source, m.target)).collect(),
        identity,
        |second, first| {
            let (a, b) = (morphisms[first.0], morphisms[second.0]);
            index[&CommaMorphism {
                source: a.source,
                target: b.target,
                left: c.comp(b.left, a.left),
                right: d.comp(b.right, a.right),
            }]
        },
    )?;
    let proj_left = Functor::new(
        category.clone(),
        c.clone(),
        objects.iter().map(|o| o.left).collect(),
        morphisms.iter().map(|m| m.left).collect(),
    )?;
    let proj_right = Functor::new(
        category.clone(),
        d.clone(),
        objects.iter().map(|o| o.right).collect(),
        morphisms.iter().map(|m| m.right).collect(),
    )?;
    Ok(CommaCategory {
        category,
        objects,
        morphisms,
        proj_left,
        proj_right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, product_category, terminal_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::functorcat::find_isomorphism;

    #[test]
    fn arrow_category_of_walking_arrow() {
        let two = walking_arrow();
        let id = Functor::identity(&two);
        let comma = comma_category(&id, &id).unwrap();
        assert_eq!(comma.category.n_ob(), 3);
        assert_eq!(comma.category.n_mor(), 6);
        assert!(comma.category.is_valid());
        assert!(comma.proj_left.is_valid() && comma.proj_right.is_valid());
    }

    #[test]
    fn coslice_under_zero() {
        let two = walking_arrow();
        let k0 = Functor::constant(&terminal_category(), &two, ObId(0)).unwrap();
        let comma = comma_category(&k0, &Functor::identity(&two)).unwrap();
        assert_eq!(comma.category.n_ob(), 2);
        let arrows: Vec<_> = comma.objects.iter().map(|o| o.arrow).collect();
        assert_eq!(arrows, vec![MorId(0), MorId(2)]);
    }

    #[test]
    fn into_terminal_is_product() {
        let (c, d) = (walking_arrow(), chain(3));
        let t = terminal_category();
        let f = Functor::constant(&c, &t, ObId(0)).unwrap();
        let g = Functor::constant(&d, &t, ObId(0)).unwrap();
        let comma = comma_category(&f, &g).unwrap();
        let prod = product_category(&c, &d);
        assert!(find_isomorphism(&comma.category, &prod, DEFAULT_CAP).unwrap().is_some());
    }
}

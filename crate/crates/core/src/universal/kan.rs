use serde::{Deserialize, Serialize};

use crate::category::{terminal_category, MorId, ObId};
use crate::error::{Budget, Error, Result};
use crate::functorcat::{comma_category, compose_functors, enumerate_nat_trans, CommaObject, Functor, FunctorSearch, NatTrans};

use super::limits::{colimit, limit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KanDirection {
    Left,
    Right,
}

/// A pointwise Kan extension of `functor` along `along`.
///
/// For a left extension `unit: F ⇒ Lan ∘ K`; for a right extension
/// `unit` holds the counit `Ran ∘ K ⇒ F`.
#[derive(Clone, Debug)]
pub struct KanExtension {
    pub direction: KanDirection,
    pub along: Functor,
    pub functor: Functor,
    pub extension: Functor,
    pub unit: NatTrans,
}

struct Pointwise {
    /// `(c, h)` for each object of the comma category
    objects: Vec<(ObId, MorId)>,
    apex: ObId,
    legs: Vec<MorId>,
}

impl Pointwise {
    fn leg(&self, c: ObId, h: MorId) -> MorId {
        let i = self
            .objects
            .iter()
            .position(|&o| o == (c, h))
            .expect("comma object present");
        self.legs[i]
    }
}

/// `Lan_K F (d) = colim((K ↓ d) → C → E)` and dually
/// `Ran_K F (d) = lim((d ↓ K) → C → E)`. Errors with `MissingColimit` or
/// `MissingLimit` naming the first object where the (co)limit is absent.
pub fn kan_extension(direction: KanDirection, k: &Functor, f: &Functor, cap: usize) -> Result<KanExtension> {
    if k.source() != f.source() {
        return Err(Error::shape("the functor and the extension direction need a common source"));
    }
    let (c, c2, e) = (k.source(), k.target(), f.target());
    let point = terminal_category();
    let mut pointwise = Vec::with_capacity(c2.n_ob());
    for d in c2.objects() {
        let const_d = Functor::constant(&point, c2, d)?;
        let p = match direction {
            KanDirection::Left => {
                let comma = comma_category(k, &const_d)?;
                let diagram = compose_functors(f, &comma.proj_left)?;
                let cocone = colimit(&diagram, cap)?.ok_or_else(|| Error::MissingColimit {
                    diagram: format!("left extension at {d}"),
                })?;
                Pointwise {
                    objects: comma.objects.iter().map(|o: &CommaObject| (o.left, o.arrow)).collect(),
                    apex: cocone.nadir,
                    legs: cocone.legs,
                }
            }
            KanDirection::Right => {
                let comma = comma_category(&const_d, k)?;
                let diagram = compose_functors(f, &comma.proj_right)?;
                let cone = limit(&diagram, cap)?.ok_or_else(|| Error::MissingLimit {
                    diagram: format!("right extension at {d}"),
                })?;
                Pointwise {
                    objects: comma.objects.iter().map(|o: &CommaObject| (o.right, o.arrow)).collect(),
                    apex: cone.apex,
                    legs: cone.legs,
                }
            }
        };
        pointwise.push(p);
    }

    let ob_map: Vec<ObId> = pointwise.iter().map(|p| p.apex).collect();
    let mut mor_map = Vec::with_capacity(c2.n_mor());
    for v in c2.morphisms() {
        let (d, d2) = c2.ends(v);
        let (from, to) = (&pointwise[d.0], &pointwise[d2.0]);
        let u = e.hom(from.apex, to.apex).iter().copied().find(|&u| match direction {
            // (c, h) over d goes to (c, v ∘ h) over d'
            KanDirection::Left => from
                .objects
                .iter()
                .zip(&from.legs)
                .all(|(&(x, h), &leg)| e.comp(u, leg) == to.leg(x, c2.comp(v, h))),
            // (c, h') under d' comes from (c, h' ∘ v) under d
            KanDirection::Right => to
                .objects
                .iter()
                .zip(&to.legs)
                .all(|(&(x, h), &leg)| e.comp(leg, u) == from.leg(x, c2.comp(h, v))),
        });
        mor_map.push(u.ok_or_else(|| Error::Malformed(format!("no factorization along {v}")))?);
    }
    let extension = Functor::checked(c2.clone(), e.clone(), ob_map, mor_map)?;
    let through = compose_functors(&extension, k)?;
    let comps: Vec<MorId> = c
        .objects()
        .map(|x| pointwise[k.ob(x).0].leg(x, c2.identity(k.ob(x))))
        .collect();
    let unit = match direction {
        KanDirection::Left => NatTrans::checked(f.clone(), through, comps)?,
        KanDirection::Right => NatTrans::checked(through, f.clone(), comps)?,
    };
    Ok(KanExtension {
        direction,
        along: k.clone(),
        functor: f.clone(),
        extension,
        unit,
    })
}

/// Exhaustively checks the universal property against every functor
/// `C' → E` and every transformation into (or out of) its restriction.
pub fn verify_kan(ext: &KanExtension, cap: usize) -> Result<bool> {
    let (k, c) = (&ext.along, ext.along.source());
    let (c2, e) = (k.target(), ext.functor.target());
    let mut budget = Budget::new(cap);
    for g in FunctorSearch::new(c2, e).collect(&mut budget)? {
        let gk = compose_functors(&g, k)?;
        let (alphas, sigmas) = match ext.direction {
            KanDirection::Left => (
                enumerate_nat_trans(&ext.functor, &gk, &mut budget)?,
                enumerate_nat_trans(&ext.extension, &g, &mut budget)?,
            ),
            KanDirection::Right => (
                enumerate_nat_trans(&gk, &ext.functor, &mut budget)?,
                enumerate_nat_trans(&g, &ext.extension, &mut budget)?,
            ),
        };
        for alpha in &alphas {
            let matching = sigmas
                .iter()
                .filter(|sigma| {
                    c.objects().all(|x| {
                        let (s, u) = (sigma.at(k.ob(x)), ext.unit.at(x));
                        let composite = match ext.direction {
                            KanDirection::Left => e.comp(s, u),
                            KanDirection::Right => e.comp(u, s),
                        };
                        composite == alpha.at(x)
                    })
                })
                .count();
            budget.charge(sigmas.len())?;
            if matching != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::finset::{as_category, FinSetObj};

    #[test]
    fn extend_a_point_along_zero() {
        let s = as_category(&[FinSetObj::new(0), FinSetObj::new(1), FinSetObj::new(2)], DEFAULT_CAP).unwrap();
        let two = walking_arrow();
        let one = terminal_category();
        let k = Functor::constant(&one, &two, ObId(0)).unwrap();
        let f = Functor::constant(&one, &s.category, ObId(2)).unwrap();
        let lan = kan_extension(KanDirection::Left, &k, &f, DEFAULT_CAP).unwrap();
        assert_eq!(lan.extension.ob_map(), &[ObId(2), ObId(2)]);
        assert_eq!(lan.extension.mor(MorId(2)), s.category.identity(ObId(2)));
        assert!(verify_kan(&lan, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn along_identity_is_the_functor() {
        let c = chain(3);
        let f = Functor::between_preorders(&c, &walking_arrow(), vec![ObId(0), ObId(1), ObId(1)]).unwrap();
        for dir in [KanDirection::Left, KanDirection::Right] {
            let ext = kan_extension(dir, &Functor::identity(&c), &f, DEFAULT_CAP).unwrap();
            assert_eq!(ext.extension, f);
            assert!(verify_kan(&ext, DEFAULT_CAP).unwrap());
        }
    }

    #[test]
    fn right_extension_in_a_chain() {
        // K: 2 → 3 picking 0 ≤ 2, F = identity of 2 ; Ran(1) = F(the least c with 1 ≤ K c) = 1
        let (c2, c3) = (chain(2), chain(3));
        let k = Functor::between_preorders(&c2, &c3, vec![ObId(0), ObId(2)]).unwrap();
        let ran = kan_extension(KanDirection::Right, &k, &Functor::identity(&c2), DEFAULT_CAP).unwrap();
        assert_eq!(ran.extension.ob_map(), &[ObId(0), ObId(1), ObId(1)]);
        assert!(verify_kan(&ran, DEFAULT_CAP).unwrap());
        let lan = kan_extension(KanDirection::Left, &k, &Functor::identity(&c2), DEFAULT_CAP).unwrap();
        assert_eq!(lan.extension.ob_map(), &[ObId(0), ObId(0), ObId(1)]);
        assert!(verify_kan(&lan, DEFAULT_CAP).unwrap());
    }
}

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Error, Result};
use crate::functorcat::{functor_category, Functor, FunctorCategory, NatTrans};
use crate::report::ValidationReport;

use super::terminal_objects;

/// Legs `apex → D(j)` commuting with the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub diagram: Functor,
    pub apex: ObId,
    pub legs: Vec<MorId>,
}

/// Legs `D(j) → nadir` commuting with the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocone {
    pub diagram: Functor,
    pub nadir: ObId,
    pub legs: Vec<MorId>,
}

impl Cone {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let (j, c, d) = (self.diagram.source(), self.diagram.target(), &self.diagram);
        if self.legs.len() != j.n_ob() || self.apex.0 >= c.n_ob() {
            r.push("cone-shape", vec![], "cone does not match its diagram");
            return r;
        }
        for x in j.objects() {
            let leg = self.legs[x.0];
            if leg.0 >= c.n_mor() || c.ends(leg) != (self.apex, d.ob(x)) {
                r.push("cone-endpoints", vec![x.0], format!("leg at {x} is not {} → D({x})", self.apex));
            }
        }
        if !r.is_valid() {
            return r;
        }
        for m in j.morphisms() {
            let (s, t) = j.ends(m);
            if c.comp(d.mor(m), self.legs[s.0]) != self.legs[t.0] {
                r.push("cone-commutation", vec![m.0], format!("D({m}) ∘ leg({s}) ≠ leg({t})"));
            }
        }
        r
    }

    /// The same data read as a cocone over the opposite diagram.
    pub fn op(&self) -> Cocone {
        Cocone {
            diagram: self.diagram.op(),
            nadir: self.apex,
            legs: self.legs.clone(),
        }
    }
}

impl Cocone {
    pub fn validate(&self) -> ValidationReport {
        self.op().validate()
    }

    pub fn op(&self) -> Cone {
        Cone {
            diagram: self.diagram.op(),
            apex: self.nadir,
            legs: self.legs.clone(),
        }
    }
}

/// Visits every cone over `d` with the given apex, legs in lexicographic
/// order.
pub(crate) fn cones_with_apex(
    d: &Functor,
    apex: ObId,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
) -> Result<()> {
    let j = d.source();
    let mut checks = vec![Vec::new(); j.n_ob()];
    for m in j.morphisms() {
        let (s, t) = j.ends(m);
        checks[s.0.max(t.0)].push(m);
    }
    let mut legs = vec![MorId(usize::MAX); j.n_ob()];
    fn go(
        i: usize,
        d: &Functor,
        apex: ObId,
        checks: &[Vec<MorId>],
        legs: &mut [MorId],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let (j, c) = (d.source(), d.target());
        if i == j.n_ob() {
            return Ok(visit(legs));
        }
        for &leg in c.hom(apex, d.ob(ObId(i))) {
            budget.tick()?;
            legs[i] = leg;
            let ok = checks[i].iter().all(|&m| {
                let (s, t) = j.ends(m);
                c.comp(d.mor(m), legs[s.0]) == legs[t.0]
            });
            if ok && go(i + 1, d, apex, checks, legs, budget, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }
    go(0, d, apex, &checks, &mut legs, budget, visit).map(drop)
}

/// The category of cones over a diagram, i.e. the comma category
/// `(Δ ↓ D)`. Objects are ordered by (apex, legs); morphisms by
/// (source, target, underlying arrow).
#[derive(Clone, Debug)]
pub struct ConeCategory {
    pub category: FinCategory,
    pub diagram: Functor,
    pub apexes: Vec<ObId>,
    pub legs: Vec<Vec<MorId>>,
    /// The arrow between apexes underlying each morphism.
    pub arrows: Vec<MorId>,
}

impl ConeCategory {
    pub fn cone(&self, x: ObId) -> Cone {
        Cone {
            diagram: self.diagram.clone(),
            apex: self.apexes[x.0],
            legs: self.legs[x.0].clone(),
        }
    }
}

pub fn cone_category(d: &Functor, cap: usize) -> Result<ConeCategory> {
    let c = d.target();
    let mut budget = Budget::new(cap);
    let mut apexes = Vec::new();
    let mut legs: Vec<Vec<MorId>> = Vec::new();
    for apex in c.objects() {
        cones_with_apex(d, apex, &mut budget, &mut |l| {
            apexes.push(apex);
            legs.push(l.to_vec());
            ControlFlow::Continue(())
        })?;
    }
    let index: HashMap<(ObId, &[MorId]), ObId> = apexes
        .iter()
        .zip(&legs)
        .enumerate()
        .map(|(i, (&a, l))| ((a, l.as_slice()), ObId(i)))
        .collect();
    // a cone t and an arrow u into its apex determine the source cone
    let mut triples = Vec::new();
    for (t, legs_t) in legs.iter().enumerate() {
        for &u in c.into_obj(apexes[t]) {
            budget.tick()?;
            let pulled: Vec<MorId> = legs_t.iter().map(|&l| c.comp(l, u)).collect();
            if let Some(&s) = index.get(&(c.src(u), pulled.as_slice())) {
                triples.push((s, ObId(t), u));
            }
        }
    }
    triples.sort_unstable();
    let mor_index: HashMap<(ObId, ObId, MorId), MorId> =
        triples.iter().enumerate().map(|(k, &t)| (t, MorId(k))).collect();
    let identity = apexes
        .iter()
        .enumerate()
        .map(|(i, &a)| mor_index[&(ObId(i), ObId(i), c.identity(a))])
        .collect();
    let category = FinCategory::from_fn(
        format!("Cone({})", d.source().name()),
        apexes.len(),
        triples.iter().map(|&(s, t, _)| (s, t)).collect(),
        identity,
        |g, f| {
            let (s, _, u) = triples[f.0];
            let (_, t, v) = triples[g.0];
            mor_index[&(s, t, c.comp(v, u))]
        },
    )?;
    Ok(ConeCategory {
        category,
        diagram: d.clone(),
        apexes,
        legs,
        arrows: triples.into_iter().map(|(_, _, u)| u).collect(),
    })
}

/// The canonical terminal cone: among terminal objects of the cone
/// category, the one with smallest apex, then lexicographically smallest
/// legs. `None` when the diagram has no limit.
pub fn limit(d: &Functor, cap: usize) -> Result<Option<Cone>> {
    let cc = cone_category(d, cap)?;
    Ok(terminal_objects(&cc.category).first().map(|&x| cc.cone(x)))
}

/// The limit of the opposite diagram, read back as a cocone.
pub fn colimit(d: &Functor, cap: usize) -> Result<Option<Cocone>> {
    Ok(limit(&d.op(), cap)?.map(|cone| {
        let dual = cone.op();
        Cocone {
            diagram: d.clone(),
            nadir: dual.nadir,
            legs: dual.legs,
        }
    }))
}

/// Checks the universal property directly: the cone is valid and every cone
/// over the same diagram factors through it in exactly one way.
pub fn verify_limit(cone: &Cone, cap: usize) -> Result<bool> {
    if !cone.validate().is_valid() {
        return Ok(false);
    }
    let (d, c) = (&cone.diagram, cone.diagram.target());
    let mut budget = Budget::new(cap);
    let mut ok = true;
    for apex in c.objects() {
        let mut inner = Budget::new(cap);
        let mut failure = None;
        cones_with_apex(d, apex, &mut budget, &mut |other| {
            let mut count = 0;
            for &u in c.hom(apex, cone.apex) {
                if let Err(e) = inner.tick() {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
                if cone.legs.iter().zip(other).all(|(&l, &o)| c.comp(l, u) == o) {
                    count += 1;
                }
            }
            if count != 1 {
                ok = false;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_colimit(cocone: &Cocone, cap: usize) -> Result<bool> {
    verify_limit(&cocone.op(), cap)
}

/// `Δ: C → [J, C]`, sending each object to the constant diagram.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub functors: FunctorCategory,
    pub functor: Functor,
}

pub fn diagonal_functor(c: &FinCategory, j: &FinCategory, cap: usize) -> Result<Diagonal> {
    let functors = functor_category(j, c, cap)?;
    let functor = diagonal_into(c, &functors)?;
    Ok(Diagonal { functors, functor })
}

/// `Δ: C → [J, C]` into an already built functor category.
pub(crate) fn diagonal_into(c: &FinCategory, functors: &FunctorCategory) -> Result<Functor> {
    let j = functors.source();
    let ob_map: Vec<ObId> = c
        .objects()
        .map(|x| {
            let k = Functor::constant(j, c, x)?;
            functors.object_of(&k).ok_or_else(|| Error::Malformed("constant functor not enumerated".into()))
        })
        .collect::<Result<_>>()?;
    let mor_map = c
        .morphisms()
        .map(|u| {
            let (x, y) = c.ends(u);
            functors
                .morphism_between(ob_map[x.0], ob_map[y.0], &vec![u; j.n_ob()])
                .ok_or_else(|| Error::Malformed("constant transformation not enumerated".into()))
        })
        .collect::<Result<_>>()?;
    Functor::checked(c.clone(), functors.category.clone(), ob_map, mor_map)
}

fn describe(d: &Functor, index: ObId) -> String {
    let ob: Vec<usize> = d.ob_map().iter().map(|x| x.0).collect();
    format!("#{} ({} → {}, objects {:?})", index.0, d.source().name(), d.target().name(), ob)
}

/// `lim: [J, C] → C`, defined when every diagram has a limit.
#[derive(Clone, Debug)]
pub struct LimitFunctor {
    pub functors: FunctorCategory,
    pub functor: Functor,
    /// The canonical limit cone of each diagram, by object of `functors`.
    pub cones: Vec<Cone>,
}

pub fn limit_functor(j: &FinCategory, c: &FinCategory, cap: usize) -> Result<LimitFunctor> {
    let functors = functor_category(j, c, cap)?;
    let mut cones = Vec::with_capacity(functors.functors().len());
    for (i, d) in functors.functors().iter().enumerate() {
        let cone = limit(d, cap)?.ok_or_else(|| Error::MissingLimit {
            diagram: describe(d, ObId(i)),
        })?;
        cones.push(cone);
    }
    let ob_map = cones.iter().map(|k| k.apex).collect();
    let mut mor_map = Vec::with_capacity(functors.category.n_mor());
    for m in functors.category.morphisms() {
        let (s, t) = functors.category.ends(m);
        let alpha = functors.components(m);
        let (from, to) = (&cones[s.0], &cones[t.0]);
        let u = c
            .hom(from.apex, to.apex)
            .iter()
            .copied()
            .find(|&u| {
                j.objects()
                    .all(|x| c.comp(to.legs[x.0], u) == c.comp(alpha[x.0], from.legs[x.0]))
            })
            .ok_or_else(|| Error::MissingLimit {
                diagram: describe(functors.functor(t), t),
            })?;
        mor_map.push(u);
    }
    let functor = Functor::checked(functors.category.clone(), c.clone(), ob_map, mor_map)?;
    Ok(LimitFunctor { functors, functor, cones })
}

/// `colim: [J, C] → C`, defined when every diagram has a colimit.
#[derive(Clone, Debug)]
pub struct ColimitFunctor {
    pub functors: FunctorCategory,
    pub functor: Functor,
    pub cocones: Vec<Cocone>,
}

pub fn colimit_functor(j: &FinCategory, c: &FinCategory, cap: usize) -> Result<ColimitFunctor> {
    let functors = functor_category(j, c, cap)?;
    let mut cocones = Vec::with_capacity(functors.functors().len());
    for (i, d) in functors.functors().iter().enumerate() {
        let cocone = colimit(d, cap)?.ok_or_else(|| Error::MissingColimit {
            diagram: describe(d, ObId(i)),
        })?;
        cocones.push(cocone);
    }
    let ob_map = cocones.iter().map(|k| k.nadir).collect();
    let mut mor_map = Vec::with_capacity(functors.category.n_mor());
    for m in functors.category.morphisms() {
        let (s, t) = functors.category.ends(m);
        let alpha = functors.components(m);
        let (from, to) = (&cocones[s.0], &cocones[t.0]);
        let u = c
            .hom(from.nadir, to.nadir)
            .iter()
            .copied()
            .find(|&u| {
                j.objects()
                    .all(|x| c.comp(u, from.legs[x.0]) == c.comp(to.legs[x.0], alpha[x.0]))
            })
            .ok_or_else(|| Error::MissingColimit {
                diagram: describe(functors.functor(s), s),
            })?;
        mor_map.push(u);
    }
    let functor = Functor::checked(functors.category.clone(), c.clone(), ob_map, mor_map)?;
    Ok(ColimitFunctor {
        functors,
        functor,
        cocones,
    })
}

/// The transformation `Δ(lim D) ⇒ D` given by a cone.
pub fn cone_as_nat_trans(cone: &Cone) -> Result<NatTrans> {
    let (j, c) = (cone.diagram.source(), cone.diagram.target());
    NatTrans::checked(Functor::constant(j, c, cone.apex)?, cone.diagram.clone(), cone.legs.clone())
}

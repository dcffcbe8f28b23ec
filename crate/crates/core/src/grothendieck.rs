//! Strict category-valued functors and their total categories.

use std::collections::HashMap;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Error, Result};
use crate::functorcat::{compose_functors, Functor, FunctorSearch};
use crate::report::ValidationReport;

/// A strict functor `source → Cat`, given by its fibers and the functor
/// transporting along each morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatValuedFunctor {
    pub source: FinCategory,
    pub fibers: Vec<FinCategory>,
    pub transport: Vec<Functor>,
}

fn shape_report(f: &CatValuedFunctor) -> ValidationReport {
    let mut r = ValidationReport::new();
    let c = &f.source;
    if f.fibers.len() != c.n_ob() || f.transport.len() != c.n_mor() {
        r.push("cat-valued-shape", vec![], "one fiber per object and one transport per morphism are required");
        return r;
    }
    for (i, fiber) in f.fibers.iter().enumerate() {
        r.extend_from(&format!("fiber o{i}"), fiber.validate());
    }
    for m in c.morphisms() {
        let t = &f.transport[m.0];
        let (s, e) = c.ends(m);
        if t.source() != &f.fibers[s.0] || t.target() != &f.fibers[e.0] {
            r.push("transport-endpoints", vec![m.0], format!("transport along {m} is not fiber({s}) → fiber({e})"));
        } else {
            r.extend_from(&format!("transport {m}"), t.validate());
        }
    }
    r
}

/// Strict functoriality failures as `(g, f)` pairs; an identity failure at
/// `c` is reported as the pair `(1_c, 1_c)`.
fn strictness_failures(f: &CatValuedFunctor) -> Vec<(MorId, MorId)> {
    let c = &f.source;
    let mut out = Vec::new();
    for x in c.objects() {
        let id = c.identity(x);
        if f.transport[id.0] != Functor::identity(&f.fibers[x.0]) {
            out.push((id, id));
        }
    }
    for (g, m, gm) in c.compose_entries() {
        let expected = compose_functors(&f.transport[g.0], &f.transport[m.0]);
        if expected.as_ref().ok() != Some(&f.transport[gm.0]) {
            out.push((g, m));
        }
    }
    out
}

pub fn validate_cat_valued(f: &CatValuedFunctor) -> ValidationReport {
    let mut r = shape_report(f);
    if !r.is_valid() {
        return r;
    }
    for (g, m) in strictness_failures(f) {
        if g == m && f.source.is_identity(g) {
            r.push("transport-identity", vec![g.0], format!("transport along {g} is not the identity"));
        } else {
            r.push("transport-composition", vec![g.0, m.0], format!("T({g} ∘ {m}) ≠ T({g}) ∘ T({m})"));
        }
    }
    r
}

/// The total category `∫F` with its projection to the base.
///
/// Objects `(c, x)` are ordered lexicographically; morphisms
/// `(f: c → c', g: F(f)(x) → x')` by (source, target, f, g). Composition is
/// `(f', g') ∘ (f, g) = (f' ∘ f, g' ∘ F(f')(g))`.
#[derive(Clone, Debug)]
pub struct Grothendieck {
    pub category: FinCategory,
    pub projection: Functor,
    pub objects: Vec<(ObId, ObId)>,
    pub morphisms: Vec<(MorId, MorId)>,
}

impl Grothendieck {
    pub fn object(&self, c: ObId, x: ObId) -> Option<ObId> {
        self.objects.iter().position(|&o| o == (c, x)).map(ObId)
    }

    /// The subcategory over `b`: objects `(b, x)` and morphisms `(1_b, g)`.
    pub fn fiber_over(&self, b: ObId) -> Result<FinCategory> {
        let base = self.projection.target();
        let obs: Vec<ObId> = self.category.objects().filter(|&o| self.objects[o.0].0 == b).collect();
        let local = |o: ObId| ObId(obs.iter().position(|&p| p == o).expect("object over b"));
        let mors: Vec<MorId> = self
            .category
            .morphisms()
            .filter(|&m| self.morphisms[m.0].0 == base.identity(b) && self.objects[self.category.src(m).0].0 == b)
            .collect();
        let ends = mors
            .iter()
            .map(|&m| {
                let (s, t) = self.category.ends(m);
                (local(s), local(t))
            })
            .collect();
        let identity = obs
            .iter()
            .map(|&o| MorId(mors.iter().position(|&m| m == self.category.identity(o)).expect("identity")))
            .collect();
        FinCategory::from_fn(format!("fiber {b}"), obs.len(), ends, identity, |g, f| {
            let gf = self.category.comp(mors[g.0], mors[f.0]);
            MorId(mors.iter().position(|&m| m == gf).expect("closed under composition"))
        })
    }
}

pub fn grothendieck(f: &CatValuedFunctor) -> Result<Grothendieck> {
    shape_report(f).into_result("category-valued functor")?;
    if let Some(&(g, m)) = strictness_failures(f).first() {
        return Err(Error::StrictnessViolation { g, f: m });
    }
    let c = &f.source;
    let objects: Vec<(ObId, ObId)> = c
        .objects()
        .flat_map(|b| f.fibers[b.0].objects().map(move |x| (b, x)))
        .collect();
    let mut ends = Vec::new();
    let mut morphisms = Vec::new();
    for (si, &(b, x)) in objects.iter().enumerate() {
        for (ti, &(b2, x2)) in objects.iter().enumerate() {
            for &m in c.hom(b, b2) {
                let moved = f.transport[m.0].ob(x);
                for &g in f.fibers[b2.0].hom(moved, x2) {
                    ends.push((ObId(si), ObId(ti)));
                    morphisms.push((m, g));
                }
            }
        }
    }
    let mor_index: HashMap<(ObId, ObId, MorId, MorId), MorId> = morphisms
        .iter()
        .zip(&ends)
        .enumerate()
        .map(|(k, (&(m, g), &(s, t)))| ((s, t, m, g), MorId(k)))
        .collect();
    let identity = objects
        .iter()
        .enumerate()
        .map(|(i, &(b, x))| {
            mor_index[&(ObId(i), ObId(i), c.identity(b), f.fibers[b.0].identity(x))]
        })
        .collect();
    let category = FinCategory::from_fn(
        format!("∫({})", c.name()),
        objects.len(),
        ends.clone(),
        identity,
        |second, first| {
            let (m, g) = morphisms[first.0];
            let (m2, g2) = morphisms[second.0];
            let fiber = &f.fibers[c.tgt(m2).0];
            let gm = fiber.comp(g2, f.transport[m2.0].mor(g));
            mor_index[&(ends[first.0].0, ends[second.0].1, c.comp(m2, m), gm)]
        },
    )?;
    let projection = Functor::checked(
        category.clone(),
        c.clone(),
        objects.iter().map(|&(b, _)| b).collect(),
        morphisms.iter().map(|&(m, _)| m).collect(),
    )?;
    Ok(Grothendieck {
        category,
        projection,
        objects,
        morphisms,
    })
}

/// Every functor `s: source → ∫F` with `projection ∘ s = 1`, in canonical
/// order.
pub fn sections(f: &CatValuedFunctor, cap: usize) -> Result<Vec<Functor>> {
    let total = grothendieck(f)?;
    let mut search = FunctorSearch::new(&f.source, &total.category);
    for b in f.source.objects() {
        let over: Vec<ObId> = total
            .objects
            .iter()
            .enumerate()
            .filter(|(_, o)| o.0 == b)
            .map(|(i, _)| ObId(i))
            .collect();
        search = search.restrict_object(b, over);
    }
    let morphisms = total.morphisms.clone();
    let search = search.filter_morphisms(move |m, image| morphisms[image.0].0 == m);
    let mut budget = Budget::new(cap);
    search.collect(&mut budget)
}

/// The constant functor at `fiber`, transporting by identities.
pub fn constant_cat_valued(source: &FinCategory, fiber: &FinCategory) -> CatValuedFunctor {
    CatValuedFunctor {
        source: source.clone(),
        fibers: vec![fiber.clone(); source.n_ob()],
        transport: vec![Functor::identity(fiber); source.n_mor()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete_category, terminal_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::functorcat::find_isomorphism;

    /// Over `2`: fiber(0) = discrete(1), fiber(1) = discrete(2), `a` picks 0.
    fn worked_example() -> CatValuedFunctor {
        let two = walking_arrow();
        let (d1, d2) = (discrete_category(1), discrete_category(2));
        CatValuedFunctor {
            source: two,
            fibers: vec![d1.clone(), d2.clone()],
            transport: vec![
                Functor::identity(&d1),
                Functor::identity(&d2),
                Functor::constant(&d1, &d2, ObId(0)).unwrap(),
            ],
        }
    }

    #[test]
    fn worked_example_counts() {
        let f = worked_example();
        assert!(validate_cat_valued(&f).is_valid());
        let g = grothendieck(&f).unwrap();
        assert_eq!((g.category.n_ob(), g.category.n_mor()), (3, 4));
        assert!(g.category.is_valid());
        assert!(g.projection.is_valid());
        let s = sections(&f, DEFAULT_CAP).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].ob(ObId(1)), g.object(ObId(1), ObId(0)).unwrap());
        for b in f.source.objects() {
            assert_eq!(g.fiber_over(b).unwrap(), f.fibers[b.0]);
        }
    }

    #[test]
    fn terminal_fibers_recover_the_base() {
        let two = walking_arrow();
        let f = constant_cat_valued(&two, &terminal_category());
        let g = grothendieck(&f).unwrap();
        assert!(find_isomorphism(&g.category, &two, DEFAULT_CAP).unwrap().is_some());
        assert_eq!(sections(&f, DEFAULT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn over_a_point_is_the_fiber() {
        let d = walking_arrow();
        let f = constant_cat_valued(&terminal_category(), &d);
        let g = grothendieck(&f).unwrap();
        assert!(find_isomorphism(&g.category, &d, DEFAULT_CAP).unwrap().is_some());
    }

    #[test]
    fn strictness_violation_is_named() {
        let two = walking_arrow();
        let d2 = discrete_category(2);
        let swap = Functor::checked(d2.clone(), d2.clone(), vec![ObId(1), ObId(0)], vec![MorId(1), MorId(0)]).unwrap();
        let f = CatValuedFunctor {
            source: two,
            fibers: vec![d2.clone(), d2.clone()],
            transport: vec![swap, Functor::identity(&d2), Functor::identity(&d2)],
        };
        let r = validate_cat_valued(&f);
        assert!(r.has("transport-identity"));
        assert!(r.has("transport-composition"));
        assert_eq!(
            grothendieck(&f).unwrap_err(),
            Error::StrictnessViolation { g: MorId(0), f: MorId(0) }
        );
    }
}

//! Adjunctions `F ⊣ G` for `F: C → D`, `G: D → C`, in three presentations
//! (unit and counit, hom-set bijection, universal morphisms) with
//! conversions between them.

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Error, Result};
use crate::functorcat::{compose_functors, vertical_compose, whisker_left, whisker_right, Functor, NatTrans};
use crate::report::ValidationReport;
use crate::universal::{
    colimit_functor, diagonal_into, limit_functor, universal_morphism_from, verify_universal, UniversalMorphism,
};

/// `η: 1_C ⇒ G ∘ F` and `ε: F ∘ G ⇒ 1_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCounit {
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

/// Bijections `φ: Hom_D(F c, d) → Hom_C(c, G d)`. `phi[c * |D| + d][i]`
/// is the image of the `i`-th morphism `F c → d` in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomIso {
    pub left: Functor,
    pub right: Functor,
    pub phi: Vec<Vec<MorId>>,
}

/// For every object `c`, a universal morphism from `c` to `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalFamily {
    pub right: Functor,
    pub members: Vec<UniversalMorphism>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Adjunction {
    UnitCounit(UnitCounit),
    HomIso(HomIso),
    Universal(UniversalFamily),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AdjunctionForm {
    UnitCounit,
    Hom,
    Universal,
}

impl Adjunction {
    pub fn form(&self) -> AdjunctionForm {
        match self {
            Adjunction::UnitCounit(_) => AdjunctionForm::UnitCounit,
            Adjunction::HomIso(_) => AdjunctionForm::Hom,
            Adjunction::Universal(_) => AdjunctionForm::Universal,
        }
    }

    pub fn right(&self) -> &Functor {
        match self {
            Adjunction::UnitCounit(a) => &a.right,
            Adjunction::HomIso(a) => &a.right,
            Adjunction::Universal(a) => &a.right,
        }
    }

    pub fn convert(&self, form: AdjunctionForm) -> Result<Adjunction> {
        Ok(match form {
            AdjunctionForm::UnitCounit => Adjunction::UnitCounit(to_unit_counit(self)?),
            AdjunctionForm::Hom => Adjunction::HomIso(to_hom_iso(self)?),
            AdjunctionForm::Universal => Adjunction::Universal(to_universal(self)?),
        })
    }
}

fn check_pair(f: &Functor, g: &Functor) -> Result<()> {
    if f.source() != g.target() || f.target() != g.source() {
        return Err(Error::shape("adjoint functors must go in opposite directions between the same categories"));
    }
    Ok(())
}

impl UnitCounit {
    /// Checks shapes, then builds the adjunction without validating it.
    pub fn new(left: Functor, right: Functor, unit: NatTrans, counit: NatTrans) -> Result<Self> {
        check_pair(&left, &right)?;
        let (c, d) = (left.source(), left.target());
        if unit.source() != &Functor::identity(c) || unit.target() != &compose_functors(&right, &left)? {
            return Err(Error::shape("unit must go from the identity to G ∘ F"));
        }
        if counit.source() != &compose_functors(&left, &right)? || counit.target() != &Functor::identity(d) {
            return Err(Error::shape("counit must go from F ∘ G to the identity"));
        }
        Ok(UnitCounit {
            left,
            right,
            unit,
            counit,
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.extend_from("left adjoint", self.left.validate());
        r.extend_from("right adjoint", self.right.validate());
        r.extend_from("unit", self.unit.validate());
        r.extend_from("counit", self.counit.validate());
        if !r.is_valid() {
            return r;
        }
        let (f, g) = (&self.left, &self.right);
        // εF ∘ Fη = 1_F
        let first = whisker_left(f, &self.unit)
            .and_then(|a| vertical_compose(&a, &whisker_right(&self.counit, f)?));
        match first {
            Ok(t) => {
                for x in f.source().objects() {
                    if t.at(x) != f.target().identity(f.ob(x)) {
                        r.push("triangle-left", vec![x.0], format!("ε F ∘ F η is not the identity at {x}"));
                    }
                }
            }
            Err(e) => r.push("triangle-left", vec![], e.to_string()),
        }
        // Gε ∘ ηG = 1_G
        let second = whisker_right(&self.unit, g)
            .and_then(|a| vertical_compose(&a, &whisker_left(g, &self.counit)?));
        match second {
            Ok(t) => {
                for y in g.source().objects() {
                    if t.at(y) != g.target().identity(g.ob(y)) {
                        r.push("triangle-right", vec![y.0], format!("G ε ∘ η G is not the identity at {y}"));
                    }
                }
            }
            Err(e) => r.push("triangle-right", vec![], e.to_string()),
        }
        r
    }
}

impl HomIso {
    pub fn new(left: Functor, right: Functor, phi: Vec<Vec<MorId>>) -> Result<Self> {
        check_pair(&left, &right)?;
        let (c, d) = (left.source(), left.target());
        if phi.len() != c.n_ob() * d.n_ob() {
            return Err(Error::Malformed(format!(
                "{} hom bijections for {} object pairs",
                phi.len(),
                c.n_ob() * d.n_ob()
            )));
        }
        for (k, row) in phi.iter().enumerate() {
            let (x, y) = (ObId(k / d.n_ob()), ObId(k % d.n_ob()));
            if row.len() != d.hom(left.ob(x), y).len() {
                return Err(Error::Malformed(format!("bijection at ({x}, {y}) has the wrong length")));
            }
            if let Some(m) = row.iter().find(|m| m.0 >= c.n_mor()) {
                return Err(Error::range("morphism", m.0, c.n_mor()));
            }
        }
        Ok(HomIso { left, right, phi })
    }

    fn at(&self, x: ObId, y: ObId) -> &[MorId] {
        &self.phi[x.0 * self.left.target().n_ob() + y.0]
    }

    /// `φ(g)` for `g: F x → y`.
    pub fn apply(&self, x: ObId, y: ObId, g: MorId) -> MorId {
        let d = self.left.target();
        let i = d.hom(self.left.ob(x), y).binary_search(&g).expect("g: F x → y");
        self.at(x, y)[i]
    }

    /// `φ⁻¹(h)` for `h: x → G y`.
    pub fn unapply(&self, x: ObId, y: ObId, h: MorId) -> Option<MorId> {
        let d = self.left.target();
        let i = self.at(x, y).iter().position(|&m| m == h)?;
        Some(d.hom(self.left.ob(x), y)[i])
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.extend_from("left adjoint", self.left.validate());
        r.extend_from("right adjoint", self.right.validate());
        if !r.is_valid() {
            return r;
        }
        let (f, g) = (&self.left, &self.right);
        let (c, d) = (f.source(), f.target());
        for x in c.objects() {
            for y in d.objects() {
                let row = self.at(x, y);
                let target = c.hom(x, g.ob(y));
                if row.iter().any(|m| target.binary_search(m).is_err()) {
                    r.push("hom-iso-endpoints", vec![x.0, y.0], format!("φ at ({x}, {y}) leaves Hom({x}, G {y})"));
                    continue;
                }
                let mut seen = row.to_vec();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != row.len() || row.len() != target.len() {
                    r.push("hom-iso-bijective", vec![x.0, y.0], format!("φ at ({x}, {y}) is not a bijection"));
                }
            }
        }
        if !r.is_valid() {
            return r;
        }
        // φ(v ∘ g) = G(v) ∘ φ(g)
        for x in c.objects() {
            for y in d.objects() {
                for &gm in d.hom(f.ob(x), y) {
                    for &v in d.out_of(y) {
                        let lhs = self.apply(x, d.tgt(v), d.comp(v, gm));
                        let rhs = c.comp(g.mor(v), self.apply(x, y, gm));
                        if lhs != rhs {
                            r.push("hom-iso-natural-right", vec![x.0, y.0, gm.0, v.0], format!("φ({v} ∘ {gm}) ≠ G({v}) ∘ φ({gm})"));
                        }
                    }
                }
            }
        }
        // φ(g ∘ F u) = φ(g) ∘ u
        for x in c.objects() {
            for &u in c.into_obj(x) {
                let x0 = c.src(u);
                for y in d.objects() {
                    for &gm in d.hom(f.ob(x), y) {
                        let lhs = self.apply(x0, y, d.comp(gm, f.mor(u)));
                        let rhs = c.comp(self.apply(x, y, gm), u);
                        if lhs != rhs {
                            r.push("hom-iso-natural-left", vec![x.0, y.0, gm.0, u.0], format!("φ({gm} ∘ F {u}) ≠ φ({gm}) ∘ {u}"));
                        }
                    }
                }
            }
        }
        r
    }
}

impl UniversalFamily {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        r.extend_from("right adjoint", self.right.validate());
        let c = self.right.target();
        if self.members.len() != c.n_ob() {
            r.push("universal-family-size", vec![], format!("{} members for {} objects", self.members.len(), c.n_ob()));
            return r;
        }
        for (x, m) in self.members.iter().enumerate() {
            if m.object != ObId(x) || m.functor != self.right {
                r.push("universal-family-shape", vec![x], format!("member {x} is not a morphism from o{x} to G"));
            } else if !verify_universal(m) {
                r.push("universal-property", vec![x], format!("member at o{x} is not universal"));
            }
        }
        r
    }
}

pub fn validate_adjunction(a: &Adjunction) -> ValidationReport {
    match a {
        Adjunction::UnitCounit(a) => a.validate(),
        Adjunction::HomIso(a) => a.validate(),
        Adjunction::Universal(a) => a.validate(),
    }
}

/// Every object's universal morphism to `G`, failing at the first object
/// that has none.
pub fn universal_family(g: &Functor) -> Result<UniversalFamily> {
    let members = g
        .target()
        .objects()
        .map(|x| universal_morphism_from(x, g)?.ok_or(Error::NoUniversalMorphism { object: x }))
        .collect::<Result<_>>()?;
    Ok(UniversalFamily {
        right: g.clone(),
        members,
    })
}

/// The left adjoint determined by a universal family: `F c` is the apex at
/// `c`, and `F u` the unique factorization of `η_{c'} ∘ u`.
fn left_adjoint(fam: &UniversalFamily) -> Result<Functor> {
    let (g, c) = (&fam.right, fam.right.target());
    let ob_map = fam.members.iter().map(|m| m.apex).collect();
    let mor_map = c
        .morphisms()
        .map(|u| {
            let (x, y) = c.ends(u);
            let (mx, my) = (&fam.members[x.0], &fam.members[y.0]);
            mx.factor(my.apex, c.comp(my.arrow, u))
                .ok_or(Error::NoUniversalMorphism { object: x })
        })
        .collect::<Result<_>>()?;
    Functor::checked(c.clone(), g.source().clone(), ob_map, mor_map)
}

fn hom_iso_from_unit(left: &Functor, right: &Functor, unit: &[MorId]) -> HomIso {
    let (c, d) = (left.source(), left.target());
    let mut phi = Vec::with_capacity(c.n_ob() * d.n_ob());
    for x in c.objects() {
        for y in d.objects() {
            phi.push(
                d.hom(left.ob(x), y)
                    .iter()
                    .map(|&gm| c.comp(right.mor(gm), unit[x.0]))
                    .collect(),
            );
        }
    }
    HomIso {
        left: left.clone(),
        right: right.clone(),
        phi,
    }
}

fn unit_counit_from_hom(h: &HomIso) -> Result<UnitCounit> {
    let (f, g) = (&h.left, &h.right);
    let (c, d) = (f.source(), f.target());
    let unit = c
        .objects()
        .map(|x| h.apply(x, f.ob(x), d.identity(f.ob(x))))
        .collect();
    let counit = d
        .objects()
        .map(|y| {
            h.unapply(g.ob(y), y, c.identity(g.ob(y)))
                .ok_or_else(|| Error::Malformed(format!("φ misses the identity of G {y}")))
        })
        .collect::<Result<_>>()?;
    let unit = NatTrans::checked(Functor::identity(c), compose_functors(g, f)?, unit)?;
    let counit = NatTrans::checked(compose_functors(f, g)?, Functor::identity(d), counit)?;
    UnitCounit::new(f.clone(), g.clone(), unit, counit)
}

pub fn to_unit_counit(a: &Adjunction) -> Result<UnitCounit> {
    match a {
        Adjunction::UnitCounit(a) => Ok(a.clone()),
        Adjunction::HomIso(h) => unit_counit_from_hom(h),
        Adjunction::Universal(fam) => {
            let f = left_adjoint(fam)?;
            let unit: Vec<MorId> = fam.members.iter().map(|m| m.arrow).collect();
            unit_counit_from_hom(&hom_iso_from_unit(&f, &fam.right, &unit))
        }
    }
}

pub fn to_hom_iso(a: &Adjunction) -> Result<HomIso> {
    match a {
        Adjunction::HomIso(h) => Ok(h.clone()),
        Adjunction::UnitCounit(a) => Ok(hom_iso_from_unit(&a.left, &a.right, a.unit.components())),
        Adjunction::Universal(fam) => {
            let f = left_adjoint(fam)?;
            let unit: Vec<MorId> = fam.members.iter().map(|m| m.arrow).collect();
            Ok(hom_iso_from_unit(&f, &fam.right, &unit))
        }
    }
}

pub fn to_universal(a: &Adjunction) -> Result<UniversalFamily> {
    let uc = match a {
        Adjunction::Universal(fam) => return Ok(fam.clone()),
        Adjunction::UnitCounit(a) => a.clone(),
        Adjunction::HomIso(h) => unit_counit_from_hom(h)?,
    };
    let members = uc
        .left
        .source()
        .objects()
        .map(|x| UniversalMorphism {
            functor: uc.right.clone(),
            object: x,
            apex: uc.left.ob(x),
            arrow: uc.unit.at(x),
        })
        .collect();
    Ok(UniversalFamily {
        right: uc.right,
        members,
    })
}

/// `F' ∘ F ⊣ G ∘ G'` from `F ⊣ G` (between `C`, `D`) and `F' ⊣ G'`
/// (between `D`, `E`), with unit `G η' F ∘ η` and counit `ε' ∘ F' ε G'`.
pub fn compose_adjunctions(first: &UnitCounit, second: &UnitCounit) -> Result<UnitCounit> {
    if first.left.target() != second.left.source() {
        return Err(Error::shape("adjunctions do not share the middle category"));
    }
    let (f, g) = (&first.left, &first.right);
    let (f2, g2) = (&second.left, &second.right);
    let inner_unit = whisker_right(&whisker_left(g, &second.unit)?, f)?;
    let unit = vertical_compose(&first.unit, &inner_unit)?;
    let inner_counit = whisker_right(&whisker_left(f2, &first.counit)?, g2)?;
    let counit = vertical_compose(&inner_counit, &second.counit)?;
    let left = compose_functors(f2, f)?;
    let right = compose_functors(g, g2)?;
    // restate with the composite functors themselves as endpoints
    let unit = NatTrans::new(
        Functor::identity(left.source()),
        compose_functors(&right, &left)?,
        unit.components().to_vec(),
    )?;
    let counit = NatTrans::new(
        compose_functors(&left, &right)?,
        Functor::identity(left.target()),
        counit.components().to_vec(),
    )?;
    UnitCounit::new(left, right, unit, counit)
}

/// `G^op ⊣ F^op` with unit `op(ε)` and counit `op(η)`.
pub fn op_adjunction(a: &UnitCounit) -> UnitCounit {
    UnitCounit {
        left: a.right.op(),
        right: a.left.op(),
        unit: a.counit.op(),
        counit: a.unit.op(),
    }
}

pub fn identity_adjunction(c: &FinCategory) -> UnitCounit {
    let id = Functor::identity(c);
    let unit = NatTrans::identity(&id);
    UnitCounit {
        left: id.clone(),
        right: id,
        unit: unit.clone(),
        counit: unit,
    }
}

/// The adjunction between monotone maps of preorders, if `f(x) ≤ y ⇔ x ≤ g(y)`.
pub fn galois_adjunction(f: &Functor, g: &Functor) -> Result<UnitCounit> {
    check_pair(f, g)?;
    let (c, d) = (f.source(), f.target());
    let thin = |cat: &FinCategory, a: ObId, b: ObId| -> Result<MorId> {
        match cat.hom(a, b) {
            [m] => Ok(*m),
            [] => Err(Error::shape(format!("no morphism {a} → {b} in {}", cat.name()))),
            _ => Err(Error::shape(format!("{} is not thin", cat.name()))),
        }
    };
    let unit = c.objects().map(|x| thin(c, x, g.ob(f.ob(x)))).collect::<Result<_>>()?;
    let counit = d.objects().map(|y| thin(d, f.ob(g.ob(y)), y)).collect::<Result<_>>()?;
    let unit = NatTrans::checked(Functor::identity(c), compose_functors(g, f)?, unit)?;
    let counit = NatTrans::checked(compose_functors(f, g)?, Functor::identity(d), counit)?;
    UnitCounit::new(f.clone(), g.clone(), unit, counit)
}

/// `Δ ⊣ lim` for diagrams of shape `J` in `C`.
pub fn diagonal_limit_adjunction(j: &FinCategory, c: &FinCategory, cap: usize) -> Result<UnitCounit> {
    let lf = limit_functor(j, c, cap)?;
    let delta = diagonal_into(c, &lf.functors)?;
    let fc = &lf.functors.category;
    // η_x: x → lim Δx factors the cone of identities
    let unit = c
        .objects()
        .map(|x| {
            let cone = &lf.cones[delta.ob(x).0];
            c.hom(x, cone.apex)
                .iter()
                .copied()
                .find(|&u| cone.legs.iter().all(|&l| c.comp(l, u) == c.identity(x)))
                .ok_or_else(|| Error::Malformed(format!("constant cone at {x} does not factor")))
        })
        .collect::<Result<_>>()?;
    // ε_D: Δ(lim D) ⇒ D is the limit cone
    let counit = fc
        .objects()
        .map(|dd| {
            let cone = &lf.cones[dd.0];
            lf.functors
                .morphism_between(delta.ob(cone.apex), dd, &cone.legs)
                .ok_or_else(|| Error::Malformed("limit cone is not a transformation".into()))
        })
        .collect::<Result<_>>()?;
    let unit = NatTrans::checked(Functor::identity(c), compose_functors(&lf.functor, &delta)?, unit)?;
    let counit = NatTrans::checked(compose_functors(&delta, &lf.functor)?, Functor::identity(fc), counit)?;
    UnitCounit::new(delta, lf.functor, unit, counit)
}

/// `colim ⊣ Δ` for diagrams of shape `J` in `C`.
pub fn colimit_diagonal_adjunction(j: &FinCategory, c: &FinCategory, cap: usize) -> Result<UnitCounit> {
    let cf = colimit_functor(j, c, cap)?;
    let delta = diagonal_into(c, &cf.functors)?;
    let fc = &cf.functors.category;
    let unit = fc
        .objects()
        .map(|dd| {
            let cocone = &cf.cocones[dd.0];
            cf.functors
                .morphism_between(dd, delta.ob(cocone.nadir), &cocone.legs)
                .ok_or_else(|| Error::Malformed("colimit cocone is not a transformation".into()))
        })
        .collect::<Result<_>>()?;
    let counit = c
        .objects()
        .map(|x| {
            let cocone = &cf.cocones[delta.ob(x).0];
            c.hom(cocone.nadir, x)
                .iter()
                .copied()
                .find(|&u| cocone.legs.iter().all(|&l| c.comp(u, l) == c.identity(x)))
                .ok_or_else(|| Error::Malformed(format!("constant cocone at {x} does not factor")))
        })
        .collect::<Result<_>>()?;
    let unit = NatTrans::checked(Functor::identity(fc), compose_functors(&delta, &cf.functor)?, unit)?;
    let counit = NatTrans::checked(compose_functors(&cf.functor, &delta)?, Functor::identity(c), counit)?;
    UnitCounit::new(cf.functor, delta, unit, counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, initial_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::finset::{as_category, FinSetObj};

    fn galois() -> UnitCounit {
        let (c2, c3) = (chain(2), chain(3));
        let f = Functor::between_preorders(&c2, &c3, vec![ObId(0), ObId(2)]).unwrap();
        let g = Functor::between_preorders(&c3, &c2, vec![ObId(0), ObId(0), ObId(1)]).unwrap();
        galois_adjunction(&f, &g).unwrap()
    }

    fn all_forms(a: &UnitCounit) {
        let base = Adjunction::UnitCounit(a.clone());
        assert!(validate_adjunction(&base).is_valid());
        for form in [AdjunctionForm::UnitCounit, AdjunctionForm::Hom, AdjunctionForm::Universal] {
            let x = base.convert(form).unwrap();
            assert!(validate_adjunction(&x).is_valid(), "{form:?}");
            for back in [AdjunctionForm::UnitCounit, AdjunctionForm::Hom, AdjunctionForm::Universal] {
                let y = x.convert(back).unwrap();
                assert_eq!(y, base.convert(back).unwrap());
            }
        }
    }

    #[test]
    fn identity_and_galois_forms() {
        all_forms(&identity_adjunction(&walking_arrow()));
        all_forms(&galois());
    }

    #[test]
    fn galois_pair_property() {
        let a = galois();
        let (c2, c3) = (chain(2), chain(3));
        for x in c2.objects() {
            for y in c3.objects() {
                let lhs = !c3.hom(a.left.ob(x), y).is_empty();
                let rhs = !c2.hom(x, a.right.ob(y)).is_empty();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn wrong_unit_is_a_triangle_violation() {
        // one object with an idempotent e; replacing the identity unit by e
        // keeps it natural but breaks both triangles
        let m = FinCategory::from_fn("E", 1, vec![(ObId(0), ObId(0)); 2], vec![MorId(0)], |g, f| {
            MorId(g.0.max(f.0))
        })
        .unwrap();
        assert!(m.is_valid());
        let id = Functor::identity(&m);
        let good = identity_adjunction(&m);
        assert!(good.validate().is_valid());
        let e = NatTrans::checked(id.clone(), id.clone(), vec![MorId(1)]).unwrap();
        let bad = UnitCounit::new(id.clone(), id, e, good.counit.clone()).unwrap();
        let r = bad.validate();
        assert!(r.has("triangle-left") && r.has("triangle-right"));
        assert_eq!(r.violations[0].witness, vec![0]);
    }

    #[test]
    fn composition() {
        let (c2, c3, c4) = (chain(2), chain(3), chain(4));
        let first = galois();
        let f2 = Functor::between_preorders(&c3, &c4, vec![ObId(0), ObId(1), ObId(3)]).unwrap();
        let g2 = Functor::between_preorders(&c4, &c3, vec![ObId(0), ObId(1), ObId(1), ObId(2)]).unwrap();
        let second = galois_adjunction(&f2, &g2).unwrap();
        let composite = compose_adjunctions(&first, &second).unwrap();
        assert!(composite.validate().is_valid());
        assert_eq!(composite.left.source(), &c2);
        let with_id = compose_adjunctions(&first, &identity_adjunction(&c3)).unwrap();
        assert_eq!(with_id, first);
        let id_first = compose_adjunctions(&identity_adjunction(&c2), &first).unwrap();
        assert_eq!(id_first, first);
    }

    #[test]
    fn duality() {
        let a = galois();
        let d = op_adjunction(&a);
        assert!(d.validate().is_valid());
        assert_eq!(op_adjunction(&d), a);
        let id = identity_adjunction(&chain(3));
        assert_eq!(op_adjunction(&id), identity_adjunction(&chain(3).op()));
    }

    #[test]
    fn diagonal_and_limit() {
        let s = as_category(&[FinSetObj::new(0), FinSetObj::new(1)], DEFAULT_CAP).unwrap();
        for j in [initial_category(), discrete_category(1), discrete_category(2)] {
            let a = diagonal_limit_adjunction(&j, &s.category, DEFAULT_CAP).unwrap();
            all_forms(&a);
            let b = colimit_diagonal_adjunction(&j, &s.category, DEFAULT_CAP).unwrap();
            assert!(b.validate().is_valid());
        }
        // built from universal morphisms into the product functor
        let lf = crate::universal::limit_functor(&discrete_category(2), &s.category, DEFAULT_CAP).unwrap();
        let fam = universal_family(&lf.functor).unwrap();
        let uc = to_unit_counit(&Adjunction::Universal(fam)).unwrap();
        assert!(uc.validate().is_valid());
    }

    #[test]
    fn partial_family_is_rejected() {
        let two = walking_arrow();
        let k = Functor::constant(&discrete_category(1), &two, ObId(0)).unwrap();
        assert_eq!(universal_family(&k).unwrap_err(), Error::NoUniversalMorphism { object: ObId(1) });
    }
}

use crate::category::{product_category, FinCategory, MorId, ObId};
use crate::error::{Budget, Result};
use crate::finset::{as_category_skeletal, FinSetCategory};
use crate::report::ValidationReport;

use super::functor_category::{functor_category, FunctorCategory};
use super::Functor;

/// A functor `op(C) × D → FinSet`, with the finite-set fragment it lands in.
#[derive(Clone, Debug)]
pub struct Profunctor {
    pub functor: Functor,
    pub sets: FinSetCategory,
    left: usize,
}

impl Profunctor {
    pub fn validate(&self) -> ValidationReport {
        self.functor.validate()
    }

    /// The size of the set at `(a, b)`.
    pub fn size_at(&self, a: ObId, b: ObId) -> usize {
        let right = self.functor.source().n_ob() / self.left.max(1);
        self.sets.set(self.functor.ob(ObId(a.0 * right + b.0))).size
    }
}

/// `Hom: op(C) × C → FinSet`. The `i`-th element of `Hom(a, b)` is the
/// `i`-th morphism `a → b` in ascending order; a pair `(f, g)` acts by
/// `φ ↦ g ∘ φ ∘ f`. The target is the skeletal fragment on the hom sizes
/// that occur.
pub fn hom_functor(c: &FinCategory, cap: usize) -> Result<Profunctor> {
    let n = c.n_ob();
    let mut sizes: Vec<usize> = c
        .objects()
        .flat_map(|a| c.objects().map(move |b| (a, b)))
        .map(|(a, b)| c.hom(a, b).len())
        .collect();
    if sizes.is_empty() {
        sizes.push(0);
    }
    let sets = as_category_skeletal(&sizes, cap)?;
    let source = product_category(&c.op(), c);
    let ob_map = source
        .objects()
        .map(|p| {
            let (a, b) = (p.0 / n, p.0 % n);
            sets.object_of_size(c.hom(ObId(a), ObId(b)).len()).expect("size present")
        })
        .collect();
    let m = c.n_mor();
    let mut mor_map = Vec::with_capacity(source.n_mor());
    for p in source.morphisms() {
        let (f, g) = (MorId(p.0 / m), MorId(p.0 % m));
        // f: a' → a in C, g: b → b'
        let (a2, a) = c.ends(f);
        let (b, b2) = c.ends(g);
        let from = c.hom(a, b);
        let to = c.hom(a2, b2);
        let table: Vec<usize> = from
            .iter()
            .map(|&phi| {
                let image = c.comp(g, c.comp(phi, f));
                to.binary_search(&image).expect("composite lies in the hom-set")
            })
            .collect();
        let x = sets.object_of_size(from.len()).expect("size present");
        let y = sets.object_of_size(to.len()).expect("size present");
        mor_map.push(sets.morphism(x, y, &table)?);
    }
    let functor = Functor::new(source, sets.category.clone(), ob_map, mor_map)?;
    Ok(Profunctor {
        functor,
        sets,
        left: n,
    })
}

/// Counts natural transformations `Hom(−, a) ⇒ Hom(−, b)` by exhaustive
/// search over component functions, without using the Yoneda lemma.
pub fn count_representable_nat_trans(c: &FinCategory, a: ObId, b: ObId, cap: usize) -> Result<usize> {
    let mut budget = Budget::new(cap);
    // slots: every (x, φ: x → a), each assigned some ψ: x → b
    let slots: Vec<(ObId, MorId)> = c
        .objects()
        .flat_map(|x| c.hom(x, a).iter().map(move |&phi| (x, phi)))
        .collect();
    let slot_of = |phi: MorId| slots.iter().position(|&(_, p)| p == phi).expect("slot exists");
    // naturality: for u: x' → x, α(φ ∘ u) = α(φ) ∘ u, checked once the
    // later of the two slots is assigned
    let mut checks: Vec<Vec<(usize, usize, MorId)>> = vec![Vec::new(); slots.len()];
    for (i, &(x, phi)) in slots.iter().enumerate() {
        for &u in c.into_obj(x) {
            let j = slot_of(c.comp(phi, u));
            checks[i.max(j)].push((i, j, u));
        }
    }
    let mut assigned: Vec<MorId> = Vec::with_capacity(slots.len());
    let mut count = 0usize;
    fn go(
        c: &FinCategory,
        b: ObId,
        slots: &[(ObId, MorId)],
        checks: &[Vec<(usize, usize, MorId)>],
        assigned: &mut Vec<MorId>,
        budget: &mut Budget,
        count: &mut usize,
    ) -> Result<()> {
        let k = assigned.len();
        if k == slots.len() {
            *count += 1;
            return Ok(());
        }
        let x = slots[k].0;
        for &psi in c.hom(x, b) {
            budget.tick()?;
            assigned.push(psi);
            let ok = checks[k]
                .iter()
                .all(|&(i, j, u)| c.comp(assigned[i], u) == assigned[j]);
            if ok {
                go(c, b, slots, checks, assigned, budget, count)?;
            }
            assigned.pop();
        }
        Ok(())
    }
    go(c, b, &slots, &checks, &mut assigned, &mut budget, &mut count)?;
    Ok(count)
}

/// The Yoneda embedding `C → [op(C), S]`, where `S` is the skeletal
/// fragment of finite sets on the hom sizes of `C`.
#[derive(Clone, Debug)]
pub struct YonedaEmbedding {
    pub presheaves: FunctorCategory,
    pub fragment: FinSetCategory,
    pub embedding: Functor,
}

pub fn yoneda(c: &FinCategory, cap: usize) -> Result<YonedaEmbedding> {
    let mut sizes: Vec<usize> = c
        .objects()
        .flat_map(|a| c.objects().map(move |b| c.hom(a, b).len()))
        .collect();
    if sizes.is_empty() {
        sizes.push(0);
    }
    let fragment = as_category_skeletal(&sizes, cap)?;
    let opc = c.op();
    let presheaves = functor_category(&opc, &fragment.category, cap)?;
    let set_of = |x: ObId, y: ObId| fragment.object_of_size(c.hom(x, y).len()).expect("size present");

    let mut ob_map = Vec::with_capacity(c.n_ob());
    for y in c.objects() {
        let ob: Vec<ObId> = c.objects().map(|x| set_of(x, y)).collect();
        let mut mor = Vec::with_capacity(c.n_mor());
        for u in c.morphisms() {
            // u: x → x' acts Hom(x', y) → Hom(x, y) by precomposition
            let (x, x2) = c.ends(u);
            let to = c.hom(x, y);
            let table: Vec<usize> = c
                .hom(x2, y)
                .iter()
                .map(|&phi| to.binary_search(&c.comp(phi, u)).expect("in hom-set"))
                .collect();
            mor.push(fragment.morphism(set_of(x2, y), set_of(x, y), &table)?);
        }
        ob_map.push(presheaves.object_of_maps(&ob, &mor).ok_or_else(|| {
            crate::Error::Malformed(format!("representable presheaf at {y} is not a functor"))
        })?);
    }

    let mut mor_map = Vec::with_capacity(c.n_mor());
    for h in c.morphisms() {
        let (y, y2) = c.ends(h);
        let mut comps = Vec::with_capacity(c.n_ob());
        for x in c.objects() {
            let to = c.hom(x, y2);
            let table: Vec<usize> = c
                .hom(x, y)
                .iter()
                .map(|&phi| to.binary_search(&c.comp(h, phi)).expect("in hom-set"))
                .collect();
            comps.push(fragment.morphism(set_of(x, y), set_of(x, y2), &table)?);
        }
        mor_map.push(
            presheaves
                .morphism_between(ob_map[y.0], ob_map[y2.0], &comps)
                .ok_or_else(|| crate::Error::Malformed(format!("postcomposition with {h} is not natural")))?,
        );
    }
    let embedding = Functor::checked(c.clone(), presheaves.category.clone(), ob_map, mor_map)?;
    Ok(YonedaEmbedding {
        presheaves,
        fragment,
        embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete_category, indiscrete_category, terminal_category, walking_arrow};
    use crate::error::DEFAULT_CAP;
    use crate::functorcat::{is_faithful, is_full};

    #[test]
    fn hom_functor_on_walking_arrow() {
        let two = walking_arrow();
        let h = hom_functor(&two, DEFAULT_CAP).unwrap();
        assert!(h.validate().is_valid());
        assert_eq!(h.size_at(ObId(0), ObId(1)), 1);
        assert_eq!(h.size_at(ObId(1), ObId(0)), 0);
        assert_eq!(h.size_at(ObId(1), ObId(1)), 1);
    }

    #[test]
    fn hom_functor_on_terminal_is_constant_singleton() {
        let h = hom_functor(&terminal_category(), DEFAULT_CAP).unwrap();
        assert!(h.validate().is_valid());
        assert_eq!(h.size_at(ObId(0), ObId(0)), 1);
        assert_eq!(h.functor.target().n_ob(), 1);
    }

    #[test]
    fn representable_counts_match_hom_sizes() {
        for c in [walking_arrow(), discrete_category(2), indiscrete_category(3), terminal_category()] {
            for a in c.objects() {
                for b in c.objects() {
                    let n = count_representable_nat_trans(&c, a, b, DEFAULT_CAP).unwrap();
                    assert_eq!(n, c.hom(a, b).len(), "{} {a} {b}", c.name());
                }
            }
        }
    }

    #[test]
    fn yoneda_embedding_is_fully_faithful() {
        for c in [walking_arrow(), discrete_category(2), terminal_category()] {
            let y = yoneda(&c, DEFAULT_CAP).unwrap();
            assert!(y.presheaves.category.is_valid());
            assert!(is_full(&y.embedding), "{}", c.name());
            assert!(is_faithful(&y.embedding), "{}", c.name());
        }
        let y = yoneda(&walking_arrow(), DEFAULT_CAP).unwrap();
        let (y0, y1) = (y.embedding.ob(ObId(0)), y.embedding.ob(ObId(1)));
        assert_eq!(y.presheaves.category.hom(y0, y1).len(), 1);
        assert_eq!(y.presheaves.category.hom(y1, y0).len(), 0);
    }
}

//! The category of finite sets: explicit sets `{0, …, k-1}`, total
//! functions, finite limits and colimits, and full subcategories packaged as
//! [`FinCategory`] values.

use std::ops::ControlFlow;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Error, Result};
use crate::functorcat::Functor;
use crate::report::ValidationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinSetObj {
    pub size: usize,
}

impl FinSetObj {
    pub fn new(size: usize) -> Self {
        FinSetObj { size }
    }
}

/// A total function `{0..dom} → {0..cod}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinSetMor {
    pub dom: usize,
    pub cod: usize,
    pub table: Vec<usize>,
}

impl FinSetMor {
    pub fn new(dom: usize, cod: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom {
            return Err(Error::Malformed(format!(
                "function table has {} entries for a domain of size {dom}",
                table.len()
            )));
        }
        if let Some(&y) = table.iter().find(|&&y| y >= cod) {
            return Err(Error::range("element", y, cod));
        }
        Ok(FinSetMor { dom, cod, table })
    }

    pub fn identity(size: usize) -> Self {
        FinSetMor {
            dom: size,
            cod: size,
            table: (0..size).collect(),
        }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &FinSetMor) -> Result<FinSetMor> {
        if first.cod != self.dom {
            return Err(Error::shape("functions are not composable"));
        }
        Ok(FinSetMor {
            dom: first.dom,
            cod: self.cod,
            table: first.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &y in &self.table {
            seen[y] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// Every function `dom → cod`, tables in lexicographic order.
pub fn all_functions(dom: usize, cod: usize) -> impl Iterator<Item = FinSetMor> {
    let total = if dom == 0 { 1 } else { cod.checked_pow(dom as u32).unwrap_or(usize::MAX) };
    (0..total).map(move |mut code| {
        let mut table = vec![0; dom];
        for slot in table.iter_mut().rev() {
            *slot = code % cod.max(1);
            code /= cod.max(1);
        }
        FinSetMor { dom, cod, table }
    })
}

fn function_count(dom: usize, cod: usize) -> Option<usize> {
    if dom == 0 {
        Some(1)
    } else {
        cod.checked_pow(u32::try_from(dom).ok()?)
    }
}

/// Position of a table in the lexicographic order of [`all_functions`].
fn function_code(f: &FinSetMor) -> usize {
    f.table.iter().fold(0, |acc, &y| acc * f.cod + y)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub object: FinSetObj,
    pub left: FinSetMor,
    pub right: FinSetMor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coproduct {
    pub object: FinSetObj,
    pub left: FinSetMor,
    pub right: FinSetMor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equalizer {
    pub object: FinSetObj,
    pub inclusion: FinSetMor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coequalizer {
    pub object: FinSetObj,
    pub quotient: FinSetMor,
    /// Number of union operations that merged two distinct classes.
    pub merges: usize,
}

/// Ordered pairs, `(a, b)` numbered `a * |B| + b`.
pub fn product(a: FinSetObj, b: FinSetObj) -> Product {
    let n = a.size * b.size;
    Product {
        object: FinSetObj::new(n),
        left: FinSetMor {
            dom: n,
            cod: a.size,
            table: (0..n).map(|p| p / b.size).collect(),
        },
        right: FinSetMor {
            dom: n,
            cod: b.size,
            table: (0..n).map(|p| p % b.size).collect(),
        },
    }
}

/// Tagged disjoint union: the `A` block first, then the `B` block.
pub fn coproduct(a: FinSetObj, b: FinSetObj) -> Coproduct {
    let n = a.size + b.size;
    Coproduct {
        object: FinSetObj::new(n),
        left: FinSetMor {
            dom: a.size,
            cod: n,
            table: (0..a.size).collect(),
        },
        right: FinSetMor {
            dom: b.size,
            cod: n,
            table: (a.size..n).collect(),
        },
    }
}

/// `f × g`, acting componentwise on ordered pairs.
pub fn product_map(f: &FinSetMor, g: &FinSetMor) -> FinSetMor {
    let table = (0..f.dom * g.dom)
        .map(|p| f.apply(p / g.dom) * g.cod + g.apply(p % g.dom))
        .collect();
    FinSetMor {
        dom: f.dom * g.dom,
        cod: f.cod * g.cod,
        table,
    }
}

/// `f + g`, acting blockwise on the disjoint union.
pub fn coproduct_map(f: &FinSetMor, g: &FinSetMor) -> FinSetMor {
    let table = f
        .table
        .iter()
        .copied()
        .chain(g.table.iter().map(|&y| f.cod + y))
        .collect();
    FinSetMor {
        dom: f.dom + g.dom,
        cod: f.cod + g.cod,
        table,
    }
}

fn check_parallel(f: &FinSetMor, g: &FinSetMor) -> Result<()> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::shape(format!(
            "not a parallel pair: {}→{} and {}→{}",
            f.dom, f.cod, g.dom, g.cod
        )));
    }
    Ok(())
}

/// The subset where `f` and `g` agree, in ascending order.
pub fn equalizer(f: &FinSetMor, g: &FinSetMor) -> Result<Equalizer> {
    check_parallel(f, g)?;
    let table: Vec<usize> = (0..f.dom).filter(|&x| f.apply(x) == g.apply(x)).collect();
    Ok(Equalizer {
        object: FinSetObj::new(table.len()),
        inclusion: FinSetMor {
            dom: table.len(),
            cod: f.dom,
            table,
        },
    })
}

/// The quotient of the codomain by the equivalence generated by
/// `f(x) ~ g(x)`. Classes are numbered in order of their smallest element.
pub fn coequalizer(f: &FinSetMor, g: &FinSetMor) -> Result<Coequalizer> {
    check_parallel(f, g)?;
    let mut uf = UnionFind::<usize>::new(f.cod);
    let mut merges = 0;
    for x in 0..f.dom {
        if uf.union(f.apply(x), g.apply(x)) {
            merges += 1;
        }
    }
    let mut class_of_root = vec![usize::MAX; f.cod];
    let mut classes = 0;
    let mut table = Vec::with_capacity(f.cod);
    for y in 0..f.cod {
        let root = uf.find(y);
        if class_of_root[root] == usize::MAX {
            class_of_root[root] = classes;
            classes += 1;
        }
        table.push(class_of_root[root]);
    }
    Ok(Coequalizer {
        object: FinSetObj::new(classes),
        quotient: FinSetMor {
            dom: f.cod,
            cod: classes,
            table,
        },
        merges,
    })
}

/// n-ary product; tuples in lexicographic order, first factor most
/// significant. The empty product is a singleton.
pub fn product_many(sets: &[FinSetObj]) -> (FinSetObj, Vec<FinSetMor>) {
    let n: usize = sets.iter().map(|s| s.size).product();
    let mut projections = Vec::with_capacity(sets.len());
    let mut stride = n;
    for s in sets {
        stride = if s.size == 0 { 0 } else { stride / s.size };
        let table = (0..n).map(|p| (p / stride.max(1)) % s.size.max(1)).collect();
        projections.push(FinSetMor {
            dom: n,
            cod: s.size,
            table,
        });
    }
    (FinSetObj::new(n), projections)
}

/// n-ary coproduct, blocks in order.
pub fn coproduct_many(sets: &[FinSetObj]) -> (FinSetObj, Vec<FinSetMor>) {
    let n: usize = sets.iter().map(|s| s.size).sum();
    let mut offset = 0;
    let mut injections = Vec::with_capacity(sets.len());
    for s in sets {
        injections.push(FinSetMor {
            dom: s.size,
            cod: n,
            table: (offset..offset + s.size).collect(),
        });
        offset += s.size;
    }
    (FinSetObj::new(n), injections)
}

/// `(is_iso, is_injective, is_surjective)`, with `is_iso` decided by
/// searching for a two-sided inverse.
pub fn iso_iff_bijective(f: &FinSetMor) -> (bool, bool, bool) {
    let id_dom = FinSetMor::identity(f.dom);
    let id_cod = FinSetMor::identity(f.cod);
    let is_iso = all_functions(f.cod, f.dom).any(|g| {
        g.after(f).is_ok_and(|gf| gf == id_dom) && f.after(&g).is_ok_and(|fg| fg == id_cod)
    });
    (is_iso, f.is_injective(), f.is_surjective())
}

/// A functor from a finite category into finite sets.
#[derive(Debug, Clone, PartialEq)]
pub struct SetDiagram {
    pub shape: FinCategory,
    pub sets: Vec<FinSetObj>,
    pub maps: Vec<FinSetMor>,
}

impl SetDiagram {
    pub fn new(shape: FinCategory, sets: Vec<FinSetObj>, maps: Vec<FinSetMor>) -> Result<Self> {
        if sets.len() != shape.n_ob() || maps.len() != shape.n_mor() {
            return Err(Error::Malformed("diagram tables do not match its shape".into()));
        }
        let d = SetDiagram { shape, sets, maps };
        d.validate().into_result("set diagram")?;
        Ok(d)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let j = &self.shape;
        for f in j.morphisms() {
            let (s, t) = j.ends(f);
            let m = &self.maps[f.0];
            if m.dom != self.sets[s.0].size || m.cod != self.sets[t.0].size {
                r.push("functor-endpoints", vec![f.0], format!("map for {f} has the wrong domain or codomain"));
            }
        }
        if !r.is_valid() {
            return r;
        }
        for x in j.objects() {
            if self.maps[j.identity(x).0] != FinSetMor::identity(self.sets[x.0].size) {
                r.push("functor-identity", vec![x.0], format!("identity of {x} is not sent to an identity"));
            }
        }
        for f in j.morphisms() {
            for &g in j.out_of(j.tgt(f)) {
                let gf = j.comp(g, f);
                if self.maps[g.0].after(&self.maps[f.0]).ok().as_ref() != Some(&self.maps[gf.0]) {
                    r.push("functor-composition", vec![g.0, f.0], format!("D({g} ∘ {f}) ≠ D({g}) ∘ D({f})"));
                }
            }
        }
        r
    }

    /// The same diagram as a functor into the skeletal fragment on sizes
    /// `0..=max_size`.
    pub fn as_functor(&self, max_size: usize, cap: usize) -> Result<(FinSetCategory, Functor)> {
        if let Some(s) = self.sets.iter().find(|s| s.size > max_size) {
            return Err(Error::range("set size", s.size, max_size + 1));
        }
        let sizes: Vec<usize> = (0..=max_size).collect();
        let fragment = as_category_skeletal(&sizes, cap)?;
        let ob: Vec<ObId> = self.sets.iter().map(|s| ObId(s.size)).collect();
        let mor = self
            .shape
            .morphisms()
            .map(|f| {
                let (s, t) = self.shape.ends(f);
                fragment.morphism(ob[s.0], ob[t.0], &self.maps[f.0].table)
            })
            .collect::<Result<_>>()?;
        let functor = Functor::checked(self.shape.clone(), fragment.category.clone(), ob, mor)?;
        Ok((fragment, functor))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCone {
    pub apex: FinSetObj,
    pub legs: Vec<FinSetMor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCocone {
    pub nadir: FinSetObj,
    pub legs: Vec<FinSetMor>,
}

/// The limit as the equalizer of the two canonical maps
/// `∏_j D(j) ⇉ ∏_{f: j → k} D(k)`.
pub fn finite_limit(d: &SetDiagram) -> SetCone {
    let j = &d.shape;
    let (prod, proj) = product_many(&d.sets);
    let targets: Vec<FinSetObj> = j.morphisms().map(|f| d.sets[j.tgt(f).0]).collect();
    let (codomain, cod_proj) = product_many(&targets);
    // pair the per-morphism maps into the product of targets
    let tuple = |components: &dyn Fn(usize, MorId) -> usize| -> FinSetMor {
        let table = (0..prod.size)
            .map(|p| {
                let mut code = 0;
                for f in j.morphisms() {
                    code = code * cod_proj[f.0].cod + components(p, f);
                }
                code
            })
            .collect();
        FinSetMor {
            dom: prod.size,
            cod: codomain.size,
            table,
        }
    };
    let direct = tuple(&|p, f| proj[j.tgt(f).0].apply(p));
    let through = tuple(&|p, f| d.maps[f.0].apply(proj[j.src(f).0].apply(p)));
    let eq = equalizer(&direct, &through).expect("parallel by construction");
    let legs = proj
        .iter()
        .map(|pi| pi.after(&eq.inclusion).expect("composable"))
        .collect();
    SetCone {
        apex: eq.object,
        legs,
    }
}

/// The colimit as the coequalizer of the two canonical maps
/// `∐_{f: j → k} D(j) ⇉ ∐_j D(j)`.
pub fn finite_colimit(d: &SetDiagram) -> SetCocone {
    let j = &d.shape;
    let (sum, inj) = coproduct_many(&d.sets);
    let sources: Vec<FinSetObj> = j.morphisms().map(|f| d.sets[j.src(f).0]).collect();
    let (domain, _) = coproduct_many(&sources);
    let mut direct = Vec::with_capacity(domain.size);
    let mut through = Vec::with_capacity(domain.size);
    for f in j.morphisms() {
        let (s, t) = j.ends(f);
        for x in 0..d.sets[s.0].size {
            direct.push(inj[s.0].apply(x));
            through.push(inj[t.0].apply(d.maps[f.0].apply(x)));
        }
    }
    let direct = FinSetMor { dom: domain.size, cod: sum.size, table: direct };
    let through = FinSetMor { dom: domain.size, cod: sum.size, table: through };
    let coeq = coequalizer(&direct, &through).expect("parallel by construction");
    let legs = inj
        .iter()
        .map(|i| coeq.quotient.after(i).expect("composable"))
        .collect();
    SetCocone {
        nadir: coeq.object,
        legs,
    }
}

fn cones_from(
    d: &SetDiagram,
    apex: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[FinSetMor]) -> ControlFlow<()>,
) -> Result<()> {
    let mut legs: Vec<FinSetMor> = Vec::with_capacity(d.shape.n_ob());
    fn go(
        d: &SetDiagram,
        apex: usize,
        legs: &mut Vec<FinSetMor>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[FinSetMor]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let j = &d.shape;
        let i = legs.len();
        if i == j.n_ob() {
            return Ok(visit(legs));
        }
        for leg in all_functions(apex, d.sets[i].size) {
            budget.tick()?;
            legs.push(leg);
            let ok = j.morphisms().all(|f| {
                let (s, t) = j.ends(f);
                s.0.max(t.0) != i || d.maps[f.0].after(&legs[s.0]).ok().as_ref() == Some(&legs[t.0])
            });
            if ok && go(d, apex, legs, budget, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
            legs.pop();
        }
        Ok(ControlFlow::Continue(()))
    }
    go(d, apex, &mut legs, budget, visit).map(drop)
}

/// Checks that every cone with apex of size `0..=max_apex` factors through
/// `cone` in exactly one way.
pub fn verify_limit_universal(d: &SetDiagram, cone: &SetCone, max_apex: usize, cap: usize) -> Result<bool> {
    let mut budget = Budget::new(cap);
    for t in 0..=max_apex {
        let mut ok = true;
        let mut inner = Budget::new(cap);
        cones_from(d, t, &mut budget, &mut |legs| {
            let mut count = 0;
            for u in all_functions(t, cone.apex.size) {
                if inner.tick().is_err() {
                    ok = false;
                    return ControlFlow::Break(());
                }
                if cone.legs.iter().zip(legs).all(|(l, c)| l.after(&u).ok().as_ref() == Some(c)) {
                    count += 1;
                }
            }
            if count != 1 {
                ok = false;
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })?;
        inner.tick()?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that every cocone with nadir of size `0..=max_nadir` factors
/// through `cocone` in exactly one way.
pub fn verify_colimit_universal(
    d: &SetDiagram,
    cocone: &SetCocone,
    max_nadir: usize,
    cap: usize,
) -> Result<bool> {
    let mut budget = Budget::new(cap);
    for t in 0..=max_nadir {
        // enumerate cocones leg by leg
        let mut legs: Vec<FinSetMor> = Vec::new();
        let mut ok = true;
        fn go(
            d: &SetDiagram,
            t: usize,
            legs: &mut Vec<FinSetMor>,
            cocone: &SetCocone,
            budget: &mut Budget,
            ok: &mut bool,
        ) -> Result<()> {
            let j = &d.shape;
            let i = legs.len();
            if i == j.n_ob() {
                let mut count = 0;
                for u in all_functions(cocone.nadir.size, t) {
                    budget.tick()?;
                    if cocone.legs.iter().zip(legs.iter()).all(|(l, c)| u.after(l).ok().as_ref() == Some(c)) {
                        count += 1;
                    }
                }
                if count != 1 {
                    *ok = false;
                }
                return Ok(());
            }
            for leg in all_functions(d.sets[i].size, t) {
                budget.tick()?;
                legs.push(leg);
                let natural = j.morphisms().all(|f| {
                    let (s, tt) = j.ends(f);
                    s.0.max(tt.0) != i || legs[tt.0].after(&d.maps[f.0]).ok().as_ref() == Some(&legs[s.0])
                });
                if natural {
                    go(d, t, legs, cocone, budget, ok)?;
                }
                legs.pop();
                if !*ok {
                    return Ok(());
                }
            }
            Ok(())
        }
        go(d, t, &mut legs, cocone, &mut budget, &mut ok)?;
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A full subcategory of finite sets packaged as a [`FinCategory`], with the
/// function each morphism stands for.
///
/// Morphisms are ordered by (domain object, codomain object, table).
#[derive(Debug, Clone)]
pub struct FinSetCategory {
    pub category: FinCategory,
    pub sets: Vec<FinSetObj>,
    offsets: Vec<usize>,
    functions: Vec<FinSetMor>,
}

impl FinSetCategory {
    pub fn function(&self, m: MorId) -> &FinSetMor {
        &self.functions[m.0]
    }

    pub fn set(&self, x: ObId) -> FinSetObj {
        self.sets[x.0]
    }

    /// The morphism `a → b` whose table is `table`.
    pub fn morphism(&self, a: ObId, b: ObId, table: &[usize]) -> Result<MorId> {
        let n = self.sets.len();
        if a.0 >= n || b.0 >= n {
            return Err(Error::range("object", a.0.max(b.0), n));
        }
        let f = FinSetMor::new(self.sets[a.0].size, self.sets[b.0].size, table.to_vec())?;
        Ok(MorId(self.offsets[a.0 * n + b.0] + function_code(&f)))
    }

    /// The first object of the given size.
    pub fn object_of_size(&self, size: usize) -> Option<ObId> {
        self.sets.iter().position(|s| s.size == size).map(ObId)
    }
}

/// The full subcategory of finite sets on `sets` (duplicates allowed).
pub fn as_category(sets: &[FinSetObj], cap: usize) -> Result<FinSetCategory> {
    let n = sets.len();
    let mut budget = Budget::new(cap);
    let mut offsets = Vec::with_capacity(n * n);
    let mut total = 0usize;
    for a in sets {
        for b in sets {
            offsets.push(total);
            let count = function_count(a.size, b.size)
                .ok_or(Error::EnumerationCapExceeded { cap })?;
            budget.charge(count)?;
            total += count;
        }
    }
    let mut ends = Vec::with_capacity(total);
    let mut functions = Vec::with_capacity(total);
    for (i, a) in sets.iter().enumerate() {
        for (k, b) in sets.iter().enumerate() {
            for f in all_functions(a.size, b.size) {
                ends.push((ObId(i), ObId(k)));
                functions.push(f);
            }
        }
    }
    let identity = sets
        .iter()
        .enumerate()
        .map(|(i, a)| MorId(offsets[i * n + i] + function_code(&FinSetMor::identity(a.size))))
        .collect();
    let name = format!(
        "FinSet{:?}",
        sets.iter().map(|s| s.size).collect::<Vec<_>>()
    );
    let category = FinCategory::from_fn(name, n, ends.clone(), identity, |g, f| {
        let gf = functions[g.0].after(&functions[f.0]).expect("composable");
        MorId(offsets[ends[f.0].0 .0 * n + ends[g.0].1 .0] + function_code(&gf))
    })?;
    Ok(FinSetCategory {
        category,
        sets: sets.to_vec(),
        offsets,
        functions,
    })
}

/// Like [`as_category`] with one object per distinct size, ascending.
pub fn as_category_skeletal(sizes: &[usize], cap: usize) -> Result<FinSetCategory> {
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let sets: Vec<FinSetObj> = sizes.into_iter().map(FinSetObj::new).collect();
    as_category(&sets, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{discrete_category, initial_category, terminal_category, walking_arrow, Quiver};
    use crate::error::DEFAULT_CAP;

    fn f(dom: usize, cod: usize, table: &[usize]) -> FinSetMor {
        FinSetMor::new(dom, cod, table.to_vec()).unwrap()
    }

    #[test]
    fn product_and_equalizer_basics() {
        assert_eq!(product(FinSetObj::new(2), FinSetObj::new(3)).object.size, 6);
        let g = f(3, 2, &[0, 1, 1]);
        assert_eq!(equalizer(&g, &g).unwrap().object.size, 3);
        assert!(matches!(
            equalizer(&g, &f(2, 2, &[0, 1])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn coequalizer_merges_chain() {
        // f = (a, b), g = (b, c) on {a, b, c}
        let q = coequalizer(&f(2, 3, &[0, 1]), &f(2, 3, &[1, 2])).unwrap();
        assert_eq!(q.object.size, 1);
        assert_eq!(q.quotient.table, vec![0, 0, 0]);
        assert_eq!(q.object.size + q.merges, 3);
    }

    #[test]
    fn coequalizer_numbering_follows_smallest_member() {
        // merge 3 ~ 1 only: classes {0}, {1, 3}, {2}
        let q = coequalizer(&f(1, 4, &[3]), &f(1, 4, &[1])).unwrap();
        assert_eq!(q.quotient.table, vec![0, 1, 2, 1]);
    }

    #[test]
    fn pullback_size() {
        // x = 0, y = 1; f = (x, x, y), g = (x)
        let q = Quiver { vertices: 3, edges: vec![(0, 2), (1, 2)] };
        let cospan = crate::category::free_category_on_acyclic_quiver(&q).unwrap();
        let d = SetDiagram::new(
            cospan,
            vec![FinSetObj::new(3), FinSetObj::new(1), FinSetObj::new(2)],
            vec![
                FinSetMor::identity(3),
                FinSetMor::identity(1),
                FinSetMor::identity(2),
                f(3, 2, &[0, 0, 1]),
                f(1, 2, &[0]),
            ],
        )
        .unwrap();
        let lim = finite_limit(&d);
        assert_eq!(lim.apex.size, 2);
        assert!(verify_limit_universal(&d, &lim, 2, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn empty_diagram() {
        let d = SetDiagram::new(initial_category(), vec![], vec![]).unwrap();
        assert_eq!(finite_limit(&d).apex.size, 1);
        assert_eq!(finite_colimit(&d).nadir.size, 0);
    }

    #[test]
    fn colimit_of_span_is_pushout() {
        let q = Quiver { vertices: 3, edges: vec![(0, 1), (0, 2)] };
        let span = crate::category::free_category_on_acyclic_quiver(&q).unwrap();
        let d = SetDiagram::new(
            span,
            vec![FinSetObj::new(1), FinSetObj::new(2), FinSetObj::new(2)],
            vec![
                FinSetMor::identity(1),
                FinSetMor::identity(2),
                FinSetMor::identity(2),
                f(1, 2, &[0]),
                f(1, 2, &[1]),
            ],
        )
        .unwrap();
        let colim = finite_colimit(&d);
        assert_eq!(colim.nadir.size, 3);
        assert!(verify_colimit_universal(&d, &colim, 3, DEFAULT_CAP).unwrap());
        // a wrong cocone is rejected
        let bad = SetCocone { nadir: FinSetObj::new(4), legs: vec![f(1, 4, &[0]), f(2, 4, &[0, 1]), f(2, 4, &[2, 0])] };
        assert!(!verify_colimit_universal(&d, &bad, 2, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn iso_checks() {
        assert_eq!(iso_iff_bijective(&FinSetMor::identity(3)), (true, true, true));
        assert_eq!(iso_iff_bijective(&f(2, 2, &[0, 0])), (false, false, false));
        let isos = all_functions(2, 2).filter(|g| iso_iff_bijective(g).0).count();
        assert_eq!(isos, 2);
    }

    #[test]
    fn as_category_counts() {
        let one = as_category(&[FinSetObj::new(1)], DEFAULT_CAP).unwrap();
        assert_eq!(one.category, terminal_category());
        let c = as_category(&[FinSetObj::new(0), FinSetObj::new(1)], DEFAULT_CAP).unwrap();
        assert_eq!((c.category.n_ob(), c.category.n_mor()), (2, 3));
        assert!(c.category.is_valid());
        let c = as_category(&[FinSetObj::new(2), FinSetObj::new(2)], DEFAULT_CAP).unwrap();
        assert_eq!(c.category.n_mor(), 16);
        assert!(c.category.is_valid());
        let m = c.morphism(ObId(0), ObId(1), &[1, 0]).unwrap();
        assert_eq!(c.function(m).table, vec![1, 0]);
        assert_eq!(c.category.ends(m), (ObId(0), ObId(1)));
        assert!(as_category(&[FinSetObj::new(5); 3], 100).is_err());
        let _ = (discrete_category(0), walking_arrow());
    }
}

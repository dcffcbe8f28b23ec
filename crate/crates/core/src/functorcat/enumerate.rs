//! Exhaustive search for functors and natural transformations.
//!
//! Both searches assign values in ascending identifier order and try
//! candidates in ascending order, so results come out lexicographically
//! sorted (object map first, then morphism map). Every candidate tried is
//! charged to a [`Budget`].

use std::ops::ControlFlow;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Result};

use super::{Functor, NatTrans};

type MorFilter<'a> = Box<dyn Fn(MorId, MorId) -> bool + 'a>;

/// A configurable functor search. By default it finds every functor
/// `source → target`.
pub struct FunctorSearch<'a> {
    source: &'a FinCategory,
    target: &'a FinCategory,
    ob_candidates: Vec<Vec<ObId>>,
    mor_filter: Option<MorFilter<'a>>,
    bijective: bool,
}

impl<'a> FunctorSearch<'a> {
    pub fn new(source: &'a FinCategory, target: &'a FinCategory) -> Self {
        let all: Vec<ObId> = target.objects().collect();
        FunctorSearch {
            source,
            target,
            ob_candidates: vec![all; source.n_ob()],
            mor_filter: None,
            bijective: false,
        }
    }

    /// Restricts the images allowed for object `x`.
    pub fn restrict_object(mut self, x: ObId, allowed: Vec<ObId>) -> Self {
        self.ob_candidates[x.0] = allowed;
        self
    }

    /// Only allows `f ↦ m` when `allow(f, m)` holds.
    pub fn filter_morphisms(mut self, allow: impl Fn(MorId, MorId) -> bool + 'a) -> Self {
        self.mor_filter = Some(Box::new(allow));
        self
    }

    /// Only yields isomorphisms of categories.
    pub fn bijective(mut self) -> Self {
        self.bijective = true;
        self
    }

    /// Calls `visit` on every functor found, in canonical order, until it
    /// returns `ControlFlow::Break`.
    pub fn run(
        &self,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[ObId], &[MorId]) -> ControlFlow<()>,
    ) -> Result<()> {
        let (c, d) = (self.source, self.target);
        if self.bijective && (c.n_ob() != d.n_ob() || c.n_mor() != d.n_mor()) {
            return Ok(());
        }
        // morphisms whose endpoints are both assigned once object i is
        let mut arrows_at = vec![Vec::new(); c.n_ob()];
        for f in c.morphisms() {
            let (s, t) = c.ends(f);
            arrows_at[s.0.max(t.0)].push(f);
        }
        // composition constraints, checked when the largest index is assigned
        let mut checks_at: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); c.n_mor()];
        for f in c.morphisms() {
            for &g in c.out_of(c.tgt(f)) {
                let gf = c.comp(g, f);
                checks_at[g.0.max(f.0).max(gf.0)].push((g, f, gf));
            }
        }
        let mut st = State {
            ob: vec![ObId(usize::MAX); c.n_ob()],
            mor: vec![MorId(usize::MAX); c.n_mor()],
            ob_used: vec![false; d.n_ob()],
            mor_used: vec![false; d.n_mor()],
        };
        let ctx = Ctx {
            search: self,
            arrows_at,
            checks_at,
        };
        let _ = ctx.objects(0, &mut st, budget, visit)?;
        Ok(())
    }

    pub fn collect(&self, budget: &mut Budget) -> Result<Vec<Functor>> {
        let mut found = Vec::new();
        self.run(budget, &mut |ob, mor| {
            found.push(Functor::from_tables_unchecked(
                self.source.clone(),
                self.target.clone(),
                ob.to_vec(),
                mor.to_vec(),
            ));
            ControlFlow::Continue(())
        })?;
        Ok(found)
    }

    pub fn first(&self, budget: &mut Budget) -> Result<Option<Functor>> {
        let mut found = None;
        self.run(budget, &mut |ob, mor| {
            found = Some(Functor::from_tables_unchecked(
                self.source.clone(),
                self.target.clone(),
                ob.to_vec(),
                mor.to_vec(),
            ));
            ControlFlow::Break(())
        })?;
        Ok(found)
    }
}

struct State {
    ob: Vec<ObId>,
    mor: Vec<MorId>,
    ob_used: Vec<bool>,
    mor_used: Vec<bool>,
}

struct Ctx<'s, 'a> {
    search: &'s FunctorSearch<'a>,
    arrows_at: Vec<Vec<MorId>>,
    checks_at: Vec<Vec<(MorId, MorId, MorId)>>,
}

impl Ctx<'_, '_> {
    fn allowed(&self, f: MorId, m: MorId) -> bool {
        self.search.mor_filter.as_ref().is_none_or(|p| p(f, m))
    }

    fn objects(
        &self,
        i: usize,
        st: &mut State,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[ObId], &[MorId]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let (c, d) = (self.search.source, self.search.target);
        if i == c.n_ob() {
            return self.morphisms(0, st, budget, visit);
        }
        for &y in &self.search.ob_candidates[i] {
            budget.tick()?;
            if self.search.bijective && st.ob_used[y.0] {
                continue;
            }
            st.ob[i] = y;
            let feasible = self.arrows_at[i].iter().all(|&f| {
                let (s, t) = c.ends(f);
                let hom = d.hom(st.ob[s.0], st.ob[t.0]);
                if self.search.bijective && hom.len() != c.hom(s, t).len() {
                    return false;
                }
                hom.iter().any(|&m| self.allowed(f, m))
            });
            if !feasible {
                continue;
            }
            st.ob_used[y.0] = true;
            let flow = self.objects(i + 1, st, budget, visit)?;
            st.ob_used[y.0] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn morphisms(
        &self,
        k: usize,
        st: &mut State,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[ObId], &[MorId]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let (c, d) = (self.search.source, self.search.target);
        if k == c.n_mor() {
            return Ok(visit(&st.ob, &st.mor));
        }
        let f = MorId(k);
        let (s, t) = c.ends(f);
        let forced;
        let candidates: &[MorId] = if c.is_identity(f) {
            forced = [d.identity(st.ob[s.0])];
            &forced
        } else {
            d.hom(st.ob[s.0], st.ob[t.0])
        };
        for &m in candidates {
            budget.tick()?;
            if (self.search.bijective && st.mor_used[m.0]) || !self.allowed(f, m) {
                continue;
            }
            st.mor[k] = m;
            let ok = self.checks_at[k]
                .iter()
                .all(|&(g, f2, gf)| d.compose(st.mor[g.0], st.mor[f2.0]) == Some(st.mor[gf.0]));
            if !ok {
                continue;
            }
            st.mor_used[m.0] = true;
            let flow = self.morphisms(k + 1, st, budget, visit)?;
            st.mor_used[m.0] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// Every functor `c → d` in canonical order.
pub fn enumerate_functors(c: &FinCategory, d: &FinCategory, cap: usize) -> Result<Vec<Functor>> {
    FunctorSearch::new(c, d).collect(&mut Budget::new(cap))
}

/// Every natural transformation `f ⇒ g`, components in lexicographic order.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor, budget: &mut Budget) -> Result<Vec<NatTrans>> {
    let mut out = Vec::new();
    nat_trans_components(f, g, budget, &mut |comps| {
        out.push(comps.to_vec());
        ControlFlow::Continue(())
    })?;
    out.into_iter()
        .map(|comps| NatTrans::new(f.clone(), g.clone(), comps))
        .collect()
}

pub(crate) fn nat_trans_components(
    f: &Functor,
    g: &Functor,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
) -> Result<()> {
    let c = f.source();
    let mut arrows_at = vec![Vec::new(); c.n_ob()];
    for m in c.morphisms() {
        let (s, t) = c.ends(m);
        arrows_at[s.0.max(t.0)].push(m);
    }
    let mut comps = vec![MorId(usize::MAX); c.n_ob()];

    fn go(
        i: usize,
        f: &Functor,
        g: &Functor,
        arrows_at: &[Vec<MorId>],
        comps: &mut Vec<MorId>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[MorId]) -> ControlFlow<()>,
    ) -> Result<ControlFlow<()>> {
        let (c, d) = (f.source(), f.target());
        if i == c.n_ob() {
            return Ok(visit(comps));
        }
        let x = ObId(i);
        for &a in d.hom(f.ob(x), g.ob(x)) {
            budget.tick()?;
            comps[i] = a;
            let natural = arrows_at[i].iter().all(|&m| {
                let (s, t) = c.ends(m);
                d.comp(g.mor(m), comps[s.0]) == d.comp(comps[t.0], f.mor(m))
            });
            if natural {
                let flow = go(i + 1, f, g, arrows_at, comps, budget, visit)?;
                if flow.is_break() {
                    return Ok(flow);
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    go(0, f, g, &arrows_at, &mut comps, budget, visit).map(drop)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, discrete_category, terminal_category, walking_arrow};
    use crate::error::{Error, DEFAULT_CAP};

    /// Brute force over every pair of tables, independent of the pruned search.
    fn brute_force_functor_count(c: &FinCategory, d: &FinCategory) -> usize {
        let (n, m) = (c.n_ob(), c.n_mor());
        let (dn, dm) = (d.n_ob(), d.n_mor());
        let mut count = 0;
        let mut ob = vec![0usize; n];
        loop {
            let mut mor = vec![0usize; m];
            loop {
                let f = Functor::new(
                    c.clone(),
                    d.clone(),
                    ob.iter().map(|&x| ObId(x)).collect(),
                    mor.iter().map(|&x| MorId(x)).collect(),
                )
                .unwrap();
                if f.is_valid() {
                    count += 1;
                }
                if !odometer(&mut mor, dm) {
                    break;
                }
            }
            if !odometer(&mut ob, dn) {
                break;
            }
        }
        count
    }

    fn odometer(v: &mut [usize], base: usize) -> bool {
        for x in v.iter_mut().rev() {
            *x += 1;
            if *x < base {
                return true;
            }
            *x = 0;
        }
        false
    }

    #[test]
    fn counts_match_brute_force() {
        let cats = [terminal_category(), walking_arrow(), discrete_category(2), chain(3)];
        for c in &cats {
            for d in &cats {
                if c.n_mor() > 3 && d.n_mor() > 3 {
                    continue;
                }
                let found = enumerate_functors(c, d, DEFAULT_CAP).unwrap();
                assert_eq!(found.len(), brute_force_functor_count(c, d), "{c:?} → {d:?}");
                assert!(found.iter().all(Functor::is_valid));
            }
        }
    }

    #[test]
    fn walking_arrow_endofunctors() {
        let two = walking_arrow();
        let fs = enumerate_functors(&two, &two, DEFAULT_CAP).unwrap();
        assert_eq!(fs.len(), 3);
        let obs: Vec<_> = fs.iter().map(|f| f.ob_map().to_vec()).collect();
        assert_eq!(
            obs,
            vec![vec![ObId(0), ObId(0)], vec![ObId(0), ObId(1)], vec![ObId(1), ObId(1)]]
        );
        assert_eq!(enumerate_functors(&two, &terminal_category(), 10).unwrap().len(), 1);
        let d2 = discrete_category(2);
        assert_eq!(enumerate_functors(&d2, &d2, DEFAULT_CAP).unwrap().len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let e = enumerate_functors(&chain(3), &chain(3), 5);
        assert!(matches!(e, Err(Error::EnumerationCapExceeded { cap: 5 })));
    }

    #[test]
    fn nat_trans_on_walking_arrow() {
        let two = walking_arrow();
        let fs = enumerate_functors(&two, &two, DEFAULT_CAP).unwrap();
        let mut b = Budget::new(DEFAULT_CAP);
        let total: usize = fs
            .iter()
            .flat_map(|f| fs.iter().map(move |g| (f, g)))
            .map(|(f, g)| enumerate_nat_trans(f, g, &mut b).unwrap().len())
            .sum();
        assert_eq!(total, 6);
    }
}

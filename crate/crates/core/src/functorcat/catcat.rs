use std::collections::HashMap;

use crate::category::{FinCategory, MorId, ObId};
use crate::error::{Budget, Result};

use super::enumerate::FunctorSearch;
use super::Functor;

/// The category whose objects are the given categories and whose morphisms
/// are all functors between them.
#[derive(Clone, Debug)]
pub struct CatOf {
    pub category: FinCategory,
    pub members: Vec<FinCategory>,
    /// Indexed by morphism id.
    pub functors: Vec<Functor>,
}

/// Morphisms are ordered by (source, target, functor enumeration order).
/// Every member must be listed explicitly, so no category can contain itself.
pub fn cat_of(categories: &[FinCategory], cap: usize) -> Result<CatOf> {
    let mut budget = Budget::new(cap);
    let mut ends = Vec::new();
    let mut functors = Vec::new();
    for (i, c) in categories.iter().enumerate() {
        for (j, d) in categories.iter().enumerate() {
            for f in FunctorSearch::new(c, d).collect(&mut budget)? {
                ends.push((ObId(i), ObId(j)));
                functors.push(f);
            }
        }
    }
    let index: HashMap<(ObId, ObId, &[ObId], &[MorId]), MorId> = functors
        .iter()
        .zip(&ends)
        .enumerate()
        .map(|(k, (f, &(s, t)))| ((s, t, f.ob_map(), f.mor_map()), MorId(k)))
        .collect();
    let identity = categories
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let id = Functor::identity(c);
            index[&(ObId(i), ObId(i), id.ob_map(), id.mor_map())]
        })
        .collect();
    let category = FinCategory::from_fn(
        "Cat",
        categories.len(),
        ends.clone(),
        identity,
        |g, f| {
            let (s, _) = ends[f.0];
            let (_, t) = ends[g.0];
            let (fg, ff) = (&functors[g.0], &functors[f.0]);
            let ob: Vec<ObId> = ff.ob_map().iter().map(|&x| fg.ob(x)).collect();
            let mor: Vec<MorId> = ff.mor_map().iter().map(|&m| fg.mor(m)).collect();
            index[&(s, t, ob.as_slice(), mor.as_slice())]
        },
    )?;
    Ok(CatOf {
        category,
        members: categories.to_vec(),
        functors,
    })
}

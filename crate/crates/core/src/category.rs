//! Finite categories stored as composition tables.
//!
//! Objects and morphisms are dense integer identifiers. `compose(g, f)` is
//! `g ∘ f` ("g after f") and is defined exactly when `tgt(f) == src(g)`.
//! The laws are not stored anywhere: [`FinCategory::validate`] checks them by
//! exhaustion, which makes equality of morphisms a decidable comparison of
//! table entries.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use petgraph::algo::toposort;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorId(pub usize);

impl fmt::Display for ObId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// A finite category. Cloning is cheap; the tables are shared and immutable.
///
/// Equality is structural and ignores the name.
#[derive(Clone)]
pub struct FinCategory {
    inner: Arc<Tables>,
}

struct Tables {
    name: String,
    n_ob: usize,
    ends: Vec<(ObId, ObId)>,
    identity: Vec<MorId>,
    // morphisms out of each object, sorted by (tgt, id)
    out: Vec<Vec<MorId>>,
    // morphisms into each object, sorted by (src, id)
    inc: Vec<Vec<MorId>>,
    // position of each morphism within `out[src]`
    out_pos: Vec<usize>,
    // composites of f with every g in out[tgt f] live at table[row[f] + out_pos[g]]
    row: Vec<usize>,
    table: Vec<Option<MorId>>,
    // entries supplied for non-composable pairs; only malformed input has any
    stray: BTreeMap<(MorId, MorId), MorId>,
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.inner, &other.inner) {
            return true;
        }
        let (a, b) = (&*self.inner, &*other.inner);
        a.n_ob == b.n_ob
            && a.ends == b.ends
            && a.identity == b.identity
            && a.table == b.table
            && a.stray == b.stray
    }
}

impl Eq for FinCategory {}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCategory({:?}: {} objects, {} morphisms)",
            self.inner.name,
            self.n_ob(),
            self.n_mor()
        )
    }
}

/// Component-wise equality of every table, names excluded.
pub fn structural_eq(c: &FinCategory, d: &FinCategory) -> bool {
    c == d
}

impl FinCategory {
    /// Builds a category from raw tables, checking only that every index is
    /// in range and that no pair is composed twice. The laws are left to
    /// [`FinCategory::validate`].
    pub fn from_parts(
        name: impl Into<String>,
        n_ob: usize,
        ends: Vec<(ObId, ObId)>,
        identity: Vec<MorId>,
        compose: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        let m = ends.len();
        for &(s, t) in &ends {
            for o in [s, t] {
                if o.0 >= n_ob {
                    return Err(Error::range("object", o.0, n_ob));
                }
            }
        }
        if identity.len() != n_ob {
            return Err(Error::Malformed(format!(
                "identity table has {} entries for {} objects",
                identity.len(),
                n_ob
            )));
        }
        for &i in &identity {
            if i.0 >= m {
                return Err(Error::range("morphism", i.0, m));
            }
        }
        let mut entries: HashMap<(MorId, MorId), MorId> = HashMap::new();
        for (g, f, gf) in compose {
            for x in [g, f, gf] {
                if x.0 >= m {
                    return Err(Error::range("morphism", x.0, m));
                }
            }
            if entries.insert((g, f), gf).is_some() {
                return Err(Error::Malformed(format!("pair ({g}, {f}) composed twice")));
            }
        }
        let mut stray = BTreeMap::new();
        let ends_ref = &ends;
        let mut composable = Vec::new();
        for (&(g, f), &gf) in &entries {
            if ends_ref[g.0].0 == ends_ref[f.0].1 {
                composable.push(((g, f), gf));
            } else {
                stray.insert((g, f), gf);
            }
        }
        let lookup: HashMap<(MorId, MorId), MorId> = composable.into_iter().collect();
        Ok(Self::assemble(
            name.into(),
            n_ob,
            ends,
            identity,
            |g, f| lookup.get(&(g, f)).copied(),
            stray,
        ))
    }

    /// Builds a category whose composite on each composable pair is given by
    /// `compose(g, f)`. Indices are range-checked.
    pub fn from_fn(
        name: impl Into<String>,
        n_ob: usize,
        ends: Vec<(ObId, ObId)>,
        identity: Vec<MorId>,
        mut compose: impl FnMut(MorId, MorId) -> MorId,
    ) -> Result<Self> {
        let m = ends.len();
        for &(s, t) in &ends {
            for o in [s, t] {
                if o.0 >= n_ob {
                    return Err(Error::range("object", o.0, n_ob));
                }
            }
        }
        if identity.len() != n_ob {
            return Err(Error::Malformed(format!(
                "identity table has {} entries for {} objects",
                identity.len(),
                n_ob
            )));
        }
        if let Some(i) = identity.iter().find(|i| i.0 >= m) {
            return Err(Error::range("morphism", i.0, m));
        }
        let mut bad = None;
        let cat = Self::assemble(
            name.into(),
            n_ob,
            ends,
            identity,
            |g, f| {
                let h = compose(g, f);
                if h.0 >= m && bad.is_none() {
                    bad = Some(h.0);
                }
                Some(h)
            },
            BTreeMap::new(),
        );
        match bad {
            Some(i) => Err(Error::range("morphism", i, m)),
            None => Ok(cat),
        }
    }

    fn assemble(
        name: String,
        n_ob: usize,
        ends: Vec<(ObId, ObId)>,
        identity: Vec<MorId>,
        mut compose: impl FnMut(MorId, MorId) -> Option<MorId>,
        stray: BTreeMap<(MorId, MorId), MorId>,
    ) -> Self {
        let m = ends.len();
        let mut out = vec![Vec::new(); n_ob];
        let mut inc = vec![Vec::new(); n_ob];
        for (i, &(s, t)) in ends.iter().enumerate() {
            out[s.0].push(MorId(i));
            inc[t.0].push(MorId(i));
        }
        for list in &mut out {
            list.sort_by_key(|f| (ends[f.0].1, *f));
        }
        for list in &mut inc {
            list.sort_by_key(|f| (ends[f.0].0, *f));
        }
        let mut out_pos = vec![0; m];
        for list in &out {
            for (p, f) in list.iter().enumerate() {
                out_pos[f.0] = p;
            }
        }
        let mut row = Vec::with_capacity(m);
        let mut table = Vec::new();
        for f in 0..m {
            row.push(table.len());
            let t = ends[f].1;
            for &g in &out[t.0] {
                table.push(compose(g, MorId(f)));
            }
        }
        FinCategory {
            inner: Arc::new(Tables {
                name,
                n_ob,
                ends,
                identity,
                out,
                inc,
                out_pos,
                row,
                table,
                stray,
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// Same tables under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let t = &*self.inner;
        FinCategory {
            inner: Arc::new(Tables {
                name: name.into(),
                n_ob: t.n_ob,
                ends: t.ends.clone(),
                identity: t.identity.clone(),
                out: t.out.clone(),
                inc: t.inc.clone(),
                out_pos: t.out_pos.clone(),
                row: t.row.clone(),
                table: t.table.clone(),
                stray: t.stray.clone(),
            }),
        }
    }

    pub fn n_ob(&self) -> usize {
        self.inner.n_ob
    }

    pub fn n_mor(&self) -> usize {
        self.inner.ends.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObId> + '_ {
        (0..self.n_ob()).map(ObId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.n_mor()).map(MorId)
    }

    pub fn src(&self, f: MorId) -> ObId {
        self.inner.ends[f.0].0
    }

    pub fn tgt(&self, f: MorId) -> ObId {
        self.inner.ends[f.0].1
    }

    pub fn ends(&self, f: MorId) -> (ObId, ObId) {
        self.inner.ends[f.0]
    }

    pub fn identity(&self, x: ObId) -> MorId {
        self.inner.identity[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        let (s, t) = self.ends(f);
        s == t && self.identity(s) == f
    }

    /// `g ∘ f`, or `None` when the pair is not composable (or, for malformed
    /// input, when the table has no entry).
    #[inline]
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        let t = &*self.inner;
        if t.ends[g.0].0 != t.ends[f.0].1 {
            return None;
        }
        t.table[t.row[f.0] + t.out_pos[g.0]]
    }

    /// Composite of a composable pair in a category known to be valid.
    #[inline]
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose(g, f)
            .unwrap_or_else(|| panic!("{g} ∘ {f} is undefined in {:?}", self.name()))
    }

    /// Composes a path given in diagrammatic order (`first, then, ...`).
    pub fn comp_path(&self, path: &[MorId]) -> MorId {
        let mut it = path.iter();
        let mut acc = *it.next().expect("empty path");
        for &g in it {
            acc = self.comp(g, acc);
        }
        acc
    }

    pub fn hom(&self, a: ObId, b: ObId) -> &[MorId] {
        let t = &*self.inner;
        let list = &t.out[a.0];
        let lo = list.partition_point(|f| t.ends[f.0].1 < b);
        let hi = list.partition_point(|f| t.ends[f.0].1 <= b);
        &list[lo..hi]
    }

    pub fn out_of(&self, a: ObId) -> &[MorId] {
        &self.inner.out[a.0]
    }

    pub fn into_obj(&self, b: ObId) -> &[MorId] {
        &self.inner.inc[b.0]
    }

    /// Every table entry, composable pairs first in `(g, f)` order merged with
    /// stray entries, sorted by `(g, f)`.
    pub fn compose_entries(&self) -> Vec<(MorId, MorId, MorId)> {
        let mut entries: Vec<(MorId, MorId, MorId)> = Vec::new();
        for f in self.morphisms() {
            for &g in self.out_of(self.tgt(f)) {
                if let Some(gf) = self.compose(g, f) {
                    entries.push((g, f, gf));
                }
            }
        }
        entries.extend(self.inner.stray.iter().map(|(&(g, f), &gf)| (g, f, gf)));
        entries.sort();
        entries
    }

    /// Checks every category law by exhaustion.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let t = &*self.inner;

        for x in self.objects() {
            let i = self.identity(x);
            if self.ends(i) != (x, x) {
                r.push(
                    "identity-endpoints",
                    vec![x.0, i.0],
                    format!("identity {i} of {x} has endpoints {:?}", self.ends(i)),
                );
            }
        }

        for (&(g, f), &gf) in &t.stray {
            r.push(
                "spurious-composite",
                vec![g.0, f.0, gf.0],
                format!("{g} ∘ {f} = {gf} given for a non-composable pair"),
            );
        }

        for f in self.morphisms() {
            for &g in self.out_of(self.tgt(f)) {
                match self.compose(g, f) {
                    None => r.push(
                        "missing-composite",
                        vec![g.0, f.0],
                        format!("{g} ∘ {f} is composable but undefined"),
                    ),
                    Some(gf) => {
                        if self.ends(gf) != (self.src(f), self.tgt(g)) {
                            r.push(
                                "composite-endpoints",
                                vec![g.0, f.0, gf.0],
                                format!(
                                    "{g} ∘ {f} = {gf} has endpoints {:?}, expected {:?}",
                                    self.ends(gf),
                                    (self.src(f), self.tgt(g))
                                ),
                            );
                        }
                    }
                }
            }
        }
        if !r.is_valid() {
            // the remaining laws assume a total, well-typed table
            if r.has("identity-endpoints") || r.has("missing-composite") || r.has("composite-endpoints") {
                return r;
            }
        }

        for x in self.objects() {
            let i = self.identity(x);
            if self.compose(i, i) != Some(i) {
                r.push(
                    "identity-idempotent",
                    vec![x.0],
                    format!("id∘id ≠ id at {x}: {i} ∘ {i} = {:?}", self.compose(i, i)),
                );
            }
        }

        for f in self.morphisms() {
            let (s, e) = self.ends(f);
            let left = self.compose(self.identity(e), f);
            if left != Some(f) {
                r.push(
                    "left-identity",
                    vec![f.0],
                    format!("1 ∘ {f} = {left:?}"),
                );
            }
            let right = self.compose(f, self.identity(s));
            if right != Some(f) {
                r.push(
                    "right-identity",
                    vec![f.0],
                    format!("{f} ∘ 1 = {right:?}"),
                );
            }
        }

        // f ∘ (g ∘ h) = (f ∘ g) ∘ h, and separately the mirrored statement
        for h in self.morphisms() {
            for &g in self.out_of(self.tgt(h)) {
                let gh = self.comp(g, h);
                for &f in self.out_of(self.tgt(g)) {
                    let fg = self.comp(f, g);
                    let a = self.comp(f, gh);
                    let b = self.comp(fg, h);
                    if a != b {
                        r.push(
                            "associativity",
                            vec![f.0, g.0, h.0],
                            format!("{f} ∘ ({g} ∘ {h}) = {a} but ({f} ∘ {g}) ∘ {h} = {b}"),
                        );
                    }
                    if b != a {
                        r.push(
                            "associativity-mirrored",
                            vec![f.0, g.0, h.0],
                            format!("({f} ∘ {g}) ∘ {h} = {b} but {f} ∘ ({g} ∘ {h}) = {a}"),
                        );
                    }
                }
            }
        }
        r
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    /// The opposite category: same identifiers, endpoints swapped,
    /// `compose_op(g, f) = compose(f, g)`. Applying it twice gives back a
    /// structurally equal category.
    pub fn op(&self) -> FinCategory {
        let name = match self.name().strip_prefix("op(").and_then(|s| s.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => format!("op({})", self.name()),
        };
        let ends = self.inner.ends.iter().map(|&(s, t)| (t, s)).collect();
        let stray = self
            .inner
            .stray
            .iter()
            .map(|(&(g, f), &gf)| ((f, g), gf))
            .collect();
        Self::assemble(
            name,
            self.n_ob(),
            ends,
            self.inner.identity.clone(),
            |g, f| self.compose(f, g),
            stray,
        )
    }

    /// Inverse of `f`, if it has one.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (s, t) = self.ends(f);
        self.hom(t, s).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identity(s)) && self.compose(f, g) == Some(self.identity(t))
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }
}

/// The product category. Objects `(c, d)` are numbered `c * |D| + d` and
/// morphisms `(f, g)` are numbered `f * |Mor D| + g`.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let (nd, md) = (d.n_ob(), d.n_mor());
    let mut ends = Vec::with_capacity(c.n_mor() * md);
    for f in c.morphisms() {
        for g in d.morphisms() {
            ends.push((
                ObId(c.src(f).0 * nd + d.src(g).0),
                ObId(c.tgt(f).0 * nd + d.tgt(g).0),
            ));
        }
    }
    let mut identity = Vec::with_capacity(c.n_ob() * nd);
    for x in c.objects() {
        for y in d.objects() {
            identity.push(MorId(c.identity(x).0 * md + d.identity(y).0));
        }
    }
    FinCategory::from_fn(
        format!("{}×{}", c.name(), d.name()),
        c.n_ob() * nd,
        ends,
        identity,
        |g, f| {
            let (g1, g2) = (MorId(g.0 / md), MorId(g.0 % md));
            let (f1, f2) = (MorId(f.0 / md), MorId(f.0 % md));
            MorId(c.comp(g1, f1).0 * md + d.comp(g2, f2).0)
        },
    )
    .expect("product of valid categories is well-formed")
}

/// Splits a product object back into its components.
pub fn product_object(d: &FinCategory, x: ObId) -> (ObId, ObId) {
    (ObId(x.0 / d.n_ob()), ObId(x.0 % d.n_ob()))
}

pub fn product_morphism(d: &FinCategory, f: MorId) -> (MorId, MorId) {
    (MorId(f.0 / d.n_mor()), MorId(f.0 % d.n_mor()))
}

/// `n` objects and only identities; identity of object `i` is morphism `i`.
pub fn discrete_category(n: usize) -> FinCategory {
    FinCategory::from_fn(
        format!("discrete({n})"),
        n,
        (0..n).map(|i| (ObId(i), ObId(i))).collect(),
        (0..n).map(MorId).collect(),
        |g, _| g,
    )
    .expect("discrete category is well-formed")
}

/// Exactly one morphism between every ordered pair; morphism `(a, b)` is
/// numbered `a * n + b`.
pub fn indiscrete_category(n: usize) -> FinCategory {
    let mut ends = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            ends.push((ObId(a), ObId(b)));
        }
    }
    FinCategory::from_fn(
        format!("indiscrete({n})"),
        n,
        ends,
        (0..n).map(|i| MorId(i * n + i)).collect(),
        |g, f| MorId((f.0 / n) * n + g.0 % n),
    )
    .expect("indiscrete category is well-formed")
}

pub fn terminal_category() -> FinCategory {
    indiscrete_category(1).renamed("1")
}

pub fn initial_category() -> FinCategory {
    discrete_category(0).renamed("0")
}

/// A thin category on `0..n` with a morphism `a → b` iff `leq(a, b)`.
/// `leq` must be reflexive and transitive. Identities come first (identity of
/// `i` is morphism `i`), then the remaining pairs in lexicographic order.
pub fn preorder_category(
    name: impl Into<String>,
    n: usize,
    leq: impl Fn(usize, usize) -> bool,
) -> Result<FinCategory> {
    let mut ends: Vec<(ObId, ObId)> = (0..n).map(|i| (ObId(i), ObId(i))).collect();
    let mut index = HashMap::new();
    for i in 0..n {
        if !leq(i, i) {
            return Err(Error::Malformed(format!("relation is not reflexive at {i}")));
        }
        index.insert((i, i), MorId(i));
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(a, b) {
                index.insert((a, b), MorId(ends.len()));
                ends.push((ObId(a), ObId(b)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if leq(a, b) && leq(b, c) && !leq(a, c) {
                    return Err(Error::Malformed(format!(
                        "relation is not transitive at {a} ≤ {b} ≤ {c}"
                    )));
                }
            }
        }
    }
    let ends_copy = ends.clone();
    FinCategory::from_fn(name, n, ends, (0..n).map(MorId).collect(), |g, f| {
        index[&(ends_copy[f.0].0 .0, ends_copy[g.0].1 .0)]
    })
}

/// The chain poset `0 ≤ 1 ≤ … ≤ n-1`. `chain(2)` is the walking arrow.
pub fn chain(n: usize) -> FinCategory {
    preorder_category(format!("chain({n})"), n, |a, b| a <= b).expect("chain is a poset")
}

/// Objects `0, 1` and a single non-identity `a: 0 → 1` (morphism 2).
pub fn walking_arrow() -> FinCategory {
    chain(2).renamed("2")
}

/// A finite directed multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// The free category on an acyclic quiver: morphisms are paths, composition
/// is concatenation. Identities come first, then paths ordered by length and
/// then by their edge sequence.
pub fn free_category_on_acyclic_quiver(q: &Quiver) -> Result<FinCategory> {
    let n = q.vertices;
    let mut graph = DiGraph::<(), usize>::new();
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for (i, &(s, t)) in q.edges.iter().enumerate() {
        for v in [s, t] {
            if v >= n {
                return Err(Error::range("vertex", v, n));
            }
        }
        graph.add_edge(nodes[s], nodes[t], i);
    }
    if let Err(cycle) = toposort(&graph, None) {
        return Err(Error::CyclicQuiver {
            vertex: cycle.node_id().index(),
        });
    }

    let mut out_edges = vec![Vec::new(); n];
    for (i, &(s, _)) in q.edges.iter().enumerate() {
        out_edges[s].push(i);
    }
    let mut paths: Vec<Vec<usize>> = q.edges.iter().enumerate().map(|(i, _)| vec![i]).collect();
    let mut frontier = paths.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            let end = q.edges[*p.last().unwrap()].1;
            for &e in &out_edges[end] {
                let mut longer = p.clone();
                longer.push(e);
                next.push(longer);
            }
        }
        paths.extend(next.iter().cloned());
        frontier = next;
    }
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let mut ends: Vec<(ObId, ObId)> = (0..n).map(|i| (ObId(i), ObId(i))).collect();
    let mut index: HashMap<Vec<usize>, MorId> = HashMap::new();
    for p in &paths {
        index.insert(p.clone(), MorId(ends.len()));
        ends.push((ObId(q.edges[p[0]].0), ObId(q.edges[*p.last().unwrap()].1)));
    }
    let path_of = |m: MorId| -> &[usize] {
        if m.0 < n {
            &[]
        } else {
            &paths[m.0 - n]
        }
    };
    FinCategory::from_fn(
        format!("free({n}, {} edges)", q.edges.len()),
        n,
        ends,
        (0..n).map(MorId).collect(),
        |g, f| {
            let (pf, pg) = (path_of(f), path_of(g));
            if pf.is_empty() {
                return g;
            }
            if pg.is_empty() {
                return f;
            }
            let mut joined = pf.to_vec();
            joined.extend_from_slice(pg);
            index[&joined]
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_is_valid_and_self_dual() {
        let t = terminal_category();
        assert!(t.is_valid());
        assert_eq!(t.n_ob(), 1);
        assert_eq!(t.n_mor(), 1);
        assert!(structural_eq(&t.op(), &t));
    }

    #[test]
    fn walking_arrow_is_valid_and_op_reverses_a() {
        let two = walking_arrow();
        assert!(two.is_valid());
        assert_eq!(two.ends(MorId(2)), (ObId(0), ObId(1)));
        let op = two.op();
        assert!(op.is_valid());
        assert_eq!(op.ends(MorId(2)), (ObId(1), ObId(0)));
        assert_eq!(op.identity(ObId(0)), MorId(0));
        assert_eq!(op.identity(ObId(1)), MorId(1));
        assert!(!structural_eq(&two, &op));
        assert!(structural_eq(&op.op(), &two));
    }

    #[test]
    fn free_chain_matches_walking_arrow_layout() {
        let q = Quiver { vertices: 2, edges: vec![(0, 1)] };
        let free = free_category_on_acyclic_quiver(&q).unwrap();
        assert_eq!(free, walking_arrow());
    }

    #[test]
    fn id_id_violation_is_reported() {
        // one object, morphisms {id, e}, with id∘id = e
        let c = FinCategory::from_parts(
            "bad",
            1,
            vec![(ObId(0), ObId(0)); 2],
            vec![MorId(0)],
            vec![
                (MorId(0), MorId(0), MorId(1)),
                (MorId(0), MorId(1), MorId(1)),
                (MorId(1), MorId(0), MorId(1)),
                (MorId(1), MorId(1), MorId(1)),
            ],
        )
        .unwrap();
        let r = c.validate();
        assert!(r.has("identity-idempotent"), "{r}");
        let v = r.violations.iter().find(|v| v.law == "identity-idempotent").unwrap();
        assert_eq!(v.witness, vec![0]);
    }

    #[test]
    fn malformed_tables_are_range_errors_not_violations() {
        let e = FinCategory::from_parts("x", 1, vec![(ObId(0), ObId(3))], vec![MorId(0)], vec![]);
        assert!(matches!(e, Err(Error::IndexOutOfRange { what: "object", index: 3, .. })));
        let e = FinCategory::from_parts(
            "x",
            1,
            vec![(ObId(0), ObId(0))],
            vec![MorId(0)],
            vec![(MorId(0), MorId(0), MorId(7))],
        );
        assert!(matches!(e, Err(Error::IndexOutOfRange { what: "morphism", index: 7, .. })));
    }

    #[test]
    fn missing_and_spurious_composites() {
        // walking arrow with a:0→1 but a∘a supplied and id1∘a missing
        let c = FinCategory::from_parts(
            "x",
            2,
            vec![(ObId(0), ObId(0)), (ObId(1), ObId(1)), (ObId(0), ObId(1))],
            vec![MorId(0), MorId(1)],
            vec![
                (MorId(0), MorId(0), MorId(0)),
                (MorId(1), MorId(1), MorId(1)),
                (MorId(2), MorId(0), MorId(2)),
                (MorId(2), MorId(2), MorId(2)),
            ],
        )
        .unwrap();
        let r = c.validate();
        assert!(r.has("spurious-composite"));
        assert!(r.has("missing-composite"));
    }

    #[test]
    fn associativity_failure_reported_in_both_orientations() {
        // one object, morphisms {1, x, y}; x∘x = y, everything else absorbing into x
        // chosen so that (x∘x)∘y ≠ x∘(x∘y)
        let (i, x, y) = (MorId(0), MorId(1), MorId(2));
        let table = |g: MorId, f: MorId| -> MorId {
            if g == i {
                f
            } else if f == i {
                g
            } else if g == x && f == x {
                y
            } else {
                x
            }
        };
        let mut entries = Vec::new();
        for g in [i, x, y] {
            for f in [i, x, y] {
                entries.push((g, f, table(g, f)));
            }
        }
        let c = FinCategory::from_parts("m", 1, vec![(ObId(0), ObId(0)); 3], vec![i], entries).unwrap();
        let r = c.validate();
        assert!(r.has("associativity"));
        assert!(r.has("associativity-mirrored"));
    }

    #[test]
    fn small_counts() {
        assert_eq!(discrete_category(3).n_mor(), 3);
        let ind = indiscrete_category(2);
        assert_eq!((ind.n_ob(), ind.n_mor()), (2, 4));
        assert!(ind.is_valid());
        let q = Quiver { vertices: 3, edges: vec![(0, 1), (1, 2)] };
        let free = free_category_on_acyclic_quiver(&q).unwrap();
        assert_eq!(free.n_mor(), 6);
        assert!(free.is_valid());
        let sq = product_category(&walking_arrow(), &walking_arrow());
        assert_eq!((sq.n_ob(), sq.n_mor()), (4, 9));
        assert!(sq.is_valid());
    }

    #[test]
    fn cyclic_quiver_rejected() {
        let q = Quiver { vertices: 2, edges: vec![(0, 1), (1, 0)] };
        assert!(matches!(
            free_category_on_acyclic_quiver(&q),
            Err(Error::CyclicQuiver { .. })
        ));
        let loop_q = Quiver { vertices: 1, edges: vec![(0, 0)] };
        assert!(free_category_on_acyclic_quiver(&loop_q).is_err());
    }

    #[test]
    fn op_of_product_is_product_of_ops() {
        let (c, d) = (chain(3), indiscrete_category(2));
        assert_eq!(product_category(&c, &d).op(), product_category(&c.op(), &d.op()));
    }

    #[test]
    fn discrete_self_dual_indiscrete_not_structurally() {
        for n in 0..4 {
            assert_eq!(discrete_category(n).op(), discrete_category(n));
        }
        assert_eq!(indiscrete_category(1).op(), indiscrete_category(1));
        assert_ne!(indiscrete_category(2).op(), indiscrete_category(2));
    }

    #[test]
    fn empty_category_is_valid() {
        let e = initial_category();
        assert!(e.is_valid());
        assert_eq!(e.op(), e);
        assert_eq!(product_category(&e, &chain(3)).n_ob(), 0);
    }

    #[test]
    fn hom_lookup() {
        let c = chain(3);
        assert_eq!(c.hom(ObId(0), ObId(2)).len(), 1);
        assert!(c.hom(ObId(2), ObId(0)).is_empty());
        assert_eq!(c.hom(ObId(1), ObId(1)), &[MorId(1)]);
    }
}

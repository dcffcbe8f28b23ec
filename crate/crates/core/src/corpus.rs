//! Built-in and seeded random inputs used by property checks, the
//! acceptance suite and `corpus run`.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adjunction::{colimit_diagonal_adjunction, diagonal_limit_adjunction, galois_adjunction, identity_adjunction, UnitCounit};
use crate::category::{
    chain, discrete_category, free_category_on_acyclic_quiver, indiscrete_category, initial_category,
    preorder_category, product_category, terminal_category, walking_arrow, FinCategory, MorId, ObId, Quiver,
};
use crate::error::{Error, Result};
use crate::finset::{as_category_skeletal, FinSetMor, FinSetObj, SetDiagram};
use crate::functorcat::Functor;

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Number of generated categories in [`standard_corpus`].
pub const GENERATED: usize = 36;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub category: FinCategory,
}

fn entry(name: impl Into<String>, category: FinCategory) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        category,
    }
}

/// Path quiver `0 → 1 → … → n-1`.
pub fn free_chain(n: usize) -> FinCategory {
    let q = Quiver {
        vertices: n,
        edges: (1..n).map(|i| (i - 1, i)).collect(),
    };
    free_category_on_acyclic_quiver(&q)
        .expect("a path is acyclic")
        .renamed(format!("free-chain({n})"))
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let mut out = vec![entry("empty", initial_category()), entry("terminal", terminal_category())];
    for n in 1..=3 {
        out.push(entry(format!("discrete({n})"), discrete_category(n)));
    }
    for n in 1..=3 {
        out.push(entry(format!("indiscrete({n})"), indiscrete_category(n)));
    }
    out.push(entry("walking-arrow", walking_arrow()));
    for n in 2..=4 {
        out.push(entry(format!("free-chain({n})"), free_chain(n)));
    }
    for n in 2..=4 {
        out.push(entry(format!("chain({n})"), chain(n)));
    }
    out.push(entry("square", product_category(&walking_arrow(), &walking_arrow())));
    for sizes in [&[0, 1][..], &[1, 2], &[0, 1, 2], &[2, 3], &[0, 1, 2, 3]] {
        let c = as_category_skeletal(sizes, usize::MAX).expect("small fragment");
        out.push(entry(format!("finset{sizes:?}"), c.category));
    }
    out
}

/// A preorder on up to 5 points: a random relation, closed reflexively and
/// transitively.
pub fn random_preorder(rng: &mut impl Rng) -> FinCategory {
    let n = rng.random_range(1..=5);
    let mut leq = vec![vec![false; n]; n];
    for (a, row) in leq.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            *cell = a == b || rng.random_bool(0.3);
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a][k] && leq[k][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    preorder_category("preorder", n, |a, b| leq[a][b]).expect("closed relation")
}

/// The free category on a random acyclic quiver (edges go from lower to
/// higher vertices, parallel edges allowed).
pub fn random_free_category(rng: &mut impl Rng) -> FinCategory {
    let n = rng.random_range(1..=4);
    let edges = if n < 2 {
        Vec::new()
    } else {
        (0..rng.random_range(0..=4))
            .map(|_| {
                let a = rng.random_range(0..n - 1);
                (a, rng.random_range(a + 1..n))
            })
            .collect()
    };
    free_category_on_acyclic_quiver(&Quiver { vertices: n, edges }).expect("edges increase")
}

/// The one-object category of all composites of one or two random
/// self-maps of a set with at most 3 elements.
pub fn random_transformation_monoid(rng: &mut impl Rng) -> FinCategory {
    let k = rng.random_range(1..=3);
    let gens: Vec<Vec<usize>> = (0..rng.random_range(1..=2))
        .map(|_| (0..k).map(|_| rng.random_range(0..k)).collect())
        .collect();
    transformation_monoid(k, &gens)
}

/// Closure of `generators` (self-maps of `{0..k}`) and the identity under
/// composition; elements in lexicographic order of their tables.
pub fn transformation_monoid(k: usize, generators: &[Vec<usize>]) -> FinCategory {
    let id: Vec<usize> = (0..k).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id.clone()]);
    while let Some(f) = queue.pop_front() {
        for g in generators {
            let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
            if seen.insert(gf.clone()) {
                queue.push_back(gf);
            }
        }
    }
    let elems: Vec<Vec<usize>> = seen.into_iter().collect();
    let index = |t: &[usize]| MorId(elems.iter().position(|e| e == t).expect("closed"));
    FinCategory::from_fn(
        format!("monoid({k}, {} elements)", elems.len()),
        1,
        vec![(ObId(0), ObId(0)); elems.len()],
        vec![index(&id)],
        |g, f| index(&elems[f.0].iter().map(|&x| elems[g.0][x]).collect::<Vec<_>>()),
    )
    .expect("closed under composition")
}

/// `count` valid random categories, cycling through the three generators.
/// Anything failing validation is discarded and regenerated.
pub fn generated_corpus(seed: u64, count: usize) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let i = out.len();
        let (kind, c) = match i % 3 {
            0 => ("preorder", random_preorder(&mut rng)),
            1 => ("free", random_free_category(&mut rng)),
            _ => ("monoid", random_transformation_monoid(&mut rng)),
        };
        if c.is_valid() {
            let name = format!("{kind}#{i}");
            out.push(entry(name.clone(), c.renamed(name)));
        }
    }
    out
}

/// Built-ins followed by [`GENERATED`] seeded random categories.
pub fn standard_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out = builtin_corpus();
    out.extend(generated_corpus(seed, GENERATED));
    out
}

/// Every Galois pair between `chain(m)` and `chain(n)`: each monotone `f`
/// with `f(0) = 0` and its right adjoint `g(y) = max {x | f(x) ≤ y}`.
pub fn chain_galois_pairs(m: usize, n: usize) -> Result<Vec<UnitCounit>> {
    let (cm, cn) = (chain(m), chain(n));
    let mut out = Vec::new();
    let mut f = vec![0; m];
    loop {
        if f.first().is_none_or(|&x| x == 0) {
            let g: Option<Vec<usize>> = (0..n).map(|y| (0..m).rev().find(|&x| f[x] <= y)).collect();
            if let Some(g) = g {
                let ff = Functor::between_preorders(&cm, &cn, f.iter().copied().map(ObId).collect())?;
                let gg = Functor::between_preorders(&cn, &cm, g.into_iter().map(ObId).collect())?;
                out.push(galois_adjunction(&ff, &gg)?);
            }
        }
        // next monotone sequence in lexicographic order
        let Some(i) = (0..m).rev().find(|&i| f[i] + 1 < n) else { break };
        f[i] += 1;
        for j in i + 1..m {
            f[j] = f[i];
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct AdjunctionEntry {
    pub name: String,
    pub adjunction: UnitCounit,
}

/// Identities, Galois pairs between short chains, and `Δ ⊣ lim`,
/// `colim ⊣ Δ` for discrete shapes into the fragment of sets of size 0 and 1.
pub fn adjunction_corpus(cap: usize) -> Result<Vec<AdjunctionEntry>> {
    let mut out = Vec::new();
    let mut push = |name: String, adjunction| out.push(AdjunctionEntry { name, adjunction });
    for c in [terminal_category(), walking_arrow(), chain(3), discrete_category(2)] {
        push(format!("identity on {}", c.name()), identity_adjunction(&c));
    }
    for (m, n) in [(2, 3), (3, 2)] {
        for (i, a) in chain_galois_pairs(m, n)?.into_iter().enumerate() {
            push(format!("galois {m}→{n} #{i}"), a);
        }
    }
    let fragment = as_category_skeletal(&[0, 1], cap)?.category;
    for n in 0..=2 {
        let j = discrete_category(n);
        push(format!("Δ ⊣ lim, J = discrete({n})"), diagonal_limit_adjunction(&j, &fragment, cap)?);
        push(format!("colim ⊣ Δ, J = discrete({n})"), colimit_diagonal_adjunction(&j, &fragment, cap)?);
    }
    Ok(out)
}

/// Small set diagrams over assorted shapes (discrete pair, arrow, parallel
/// pair, span, cospan) with sets of size at most 2.
pub fn random_set_diagrams(seed: u64, count: usize) -> Vec<SetDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let quiver = |vertices, edges: &[(usize, usize)]| {
        free_category_on_acyclic_quiver(&Quiver {
            vertices,
            edges: edges.to_vec(),
        })
        .expect("acyclic")
    };
    let shapes = [
        discrete_category(2),
        walking_arrow(),
        quiver(2, &[(0, 1), (0, 1)]),
        quiver(3, &[(0, 1), (0, 2)]),
        quiver(3, &[(0, 2), (1, 2)]),
    ];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let shape = shapes[out.len() % shapes.len()].clone();
        let sets: Vec<FinSetObj> = shape.objects().map(|_| FinSetObj::new(rng.random_range(0..=2))).collect();
        // a map into the empty set needs an empty domain
        if shape.morphisms().any(|f| sets[shape.src(f).0].size > 0 && sets[shape.tgt(f).0].size == 0) {
            continue;
        }
        // shapes here are free on their quivers; identities come first and
        // every other morphism is a single edge
        let maps: Vec<FinSetMor> = shape
            .morphisms()
            .map(|f| {
                let (s, t) = shape.ends(f);
                let (a, b) = (sets[s.0].size, sets[t.0].size);
                if shape.is_identity(f) {
                    FinSetMor::identity(a)
                } else {
                    FinSetMor {
                        dom: a,
                        cod: b,
                        table: (0..a).map(|_| rng.random_range(0..b)).collect(),
                    }
                }
            })
            .collect();
        if let Ok(d) = SetDiagram::new(shape, sets, maps) {
            out.push(d);
        }
    }
    out
}

/// Looks up a member by name.
pub fn find(corpus: &[CorpusEntry], name: &str) -> Result<FinCategory> {
    corpus
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.category.clone())
        .ok_or_else(|| Error::Malformed(format!("no corpus member named {name:?}")))
}

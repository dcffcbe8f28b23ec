//! JSON documents for categories, functors, transformations, adjunctions,
//! category-valued functors and Kan extension requests.
//!
//! Every document rejects unknown keys. Wherever a category or functor is
//! expected, a string may be given instead; it is read as a path relative to
//! the directory of the document that mentions it. Output is canonical:
//! arrays in ID order, composites sorted by `(g, f)`, compact formatting.

use std::fmt;
use std::marker::PhantomData;
use std::path::{Path, PathBuf};

use serde::de::{self, MapAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::adjunction::{HomIso, UnitCounit};
use crate::category::{FinCategory, MorId, ObId};
use crate::error::Error;
use crate::functorcat::{compose_functors, Functor, NatTrans};
use crate::grothendieck::CatValuedFunctor;
use crate::universal::KanDirection;

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Syntax errors, unknown or missing keys, wrong value types.
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
    /// Well-formed JSON describing something that cannot be built.
    #[error(transparent)]
    Build(#[from] Error),
}

/// An inline document or a path to a file holding one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ref<T> {
    Inline(Box<T>),
    File(String),
}

impl<T> Ref<T> {
    pub fn inline(doc: T) -> Self {
        Ref::Inline(Box::new(doc))
    }
}

impl<T: Serialize> Serialize for Ref<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Ref::Inline(doc) => doc.serialize(s),
            Ref::File(path) => s.serialize_str(path),
        }
    }
}

struct RefVisitor<T>(PhantomData<T>);

impl<'de, T: Deserialize<'de>> Visitor<'de> for RefVisitor<T> {
    type Value = Ref<T>;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an inline document or a file path")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
        Ok(Ref::File(v.to_owned()))
    }

    fn visit_map<A: MapAccess<'de>>(self, map: A) -> Result<Self::Value, A::Error> {
        T::deserialize(de::value::MapAccessDeserializer::new(map)).map(Ref::inline)
    }
}

impl<'de, T: Deserialize<'de>> Deserialize<'de> for Ref<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(RefVisitor(PhantomData))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: usize,
    pub morphisms: Vec<MorphismDoc>,
    pub identity: Vec<usize>,
    /// `[g, f, g ∘ f]` for every composable pair.
    pub compose: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: Ref<CategoryDoc>,
    pub target: Ref<CategoryDoc>,
    pub ob: Vec<usize>,
    pub mor: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDoc {
    #[serde(rename = "F")]
    pub source: Ref<FunctorDoc>,
    #[serde(rename = "G")]
    pub target: Ref<FunctorDoc>,
    pub components: Vec<usize>,
}

/// `left ⊣ right`, given either by unit and counit components or by the
/// hom bijections `phi` (see [`HomIso`] for the indexing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDoc {
    pub left: Ref<FunctorDoc>,
    pub right: Ref<FunctorDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatValuedDoc {
    pub source: Ref<CategoryDoc>,
    pub fibers: Vec<Ref<CategoryDoc>>,
    pub transport: Vec<Ref<FunctorDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KanDoc {
    pub direction: KanDirection,
    pub along: Ref<FunctorDoc>,
    pub functor: Ref<FunctorDoc>,
}

/// A parsed adjunction document.
#[derive(Clone, Debug)]
pub enum LoadedAdjunction {
    UnitCounit(UnitCounit),
    HomIso(HomIso),
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str, context: &str) -> Result<T, DocError> {
    serde_json::from_str(text).map_err(|e| DocError::Parse {
        context: context.to_owned(),
        message: e.to_string(),
    })
}

/// Reads `path`, or standard input for `-`.
pub fn read_input(path: &str) -> Result<String, DocError> {
    let io = |source| DocError::Io {
        path: path.to_owned(),
        source,
    };
    if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// Resolves file references relative to a base directory.
#[derive(Clone, Debug)]
pub struct Loader {
    base: PathBuf,
}

impl Loader {
    pub fn new(base: impl Into<PathBuf>) -> Self {
        Loader { base: base.into() }
    }

    /// A loader for references inside the document at `path` (`-` resolves
    /// against the working directory).
    pub fn for_document(path: &str) -> Self {
        let base = match Path::new(path).parent() {
            Some(p) if path != "-" => p.to_path_buf(),
            _ => PathBuf::from("."),
        };
        Loader::new(base)
    }

    fn resolve<T: for<'de> Deserialize<'de> + Clone>(&self, r: &Ref<T>) -> Result<(T, Loader), DocError> {
        match r {
            Ref::Inline(doc) => Ok(((**doc).clone(), self.clone())),
            Ref::File(rel) => {
                let path = self.base.join(rel);
                let shown = path.display().to_string();
                let text = std::fs::read_to_string(&path).map_err(|source| DocError::Io {
                    path: shown.clone(),
                    source,
                })?;
                let doc = parse(&text, &shown)?;
                let next = Loader::new(path.parent().map(Path::to_path_buf).unwrap_or_default());
                Ok((doc, next))
            }
        }
    }

    /// Builds the tables without checking the category laws.
    pub fn category(&self, r: &Ref<CategoryDoc>) -> Result<FinCategory, DocError> {
        let (doc, _) = self.resolve(r)?;
        Ok(category_from_doc(&doc)?)
    }

    /// Builds the functor without checking the functor laws.
    pub fn functor(&self, r: &Ref<FunctorDoc>) -> Result<Functor, DocError> {
        let (doc, inner) = self.resolve(r)?;
        let source = inner.category(&doc.source)?;
        let target = inner.category(&doc.target)?;
        Ok(Functor::new(
            source,
            target,
            doc.ob.iter().copied().map(ObId).collect(),
            doc.mor.iter().copied().map(MorId).collect(),
        )?)
    }

    pub fn nat_trans(&self, doc: &NatTransDoc) -> Result<NatTrans, DocError> {
        let f = self.functor(&doc.source)?;
        let g = self.functor(&doc.target)?;
        Ok(NatTrans::new(f, g, mor_ids(&doc.components))?)
    }

    pub fn adjunction(&self, doc: &AdjunctionDoc) -> Result<LoadedAdjunction, DocError> {
        let left = self.functor(&doc.left)?;
        let right = self.functor(&doc.right)?;
        let shape = |msg: &str| DocError::Build(Error::ShapeMismatch(msg.to_owned()));
        match (&doc.unit, &doc.counit, &doc.phi) {
            (Some(unit), Some(counit), None) => {
                let gf = compose_functors(&right, &left)?;
                let fg = compose_functors(&left, &right)?;
                let unit = NatTrans::new(Functor::identity(left.source()), gf, mor_ids(unit))?;
                let counit = NatTrans::new(fg, Functor::identity(left.target()), mor_ids(counit))?;
                Ok(LoadedAdjunction::UnitCounit(UnitCounit::new(left, right, unit, counit)?))
            }
            (None, None, Some(phi)) => {
                let phi = phi.iter().map(|row| mor_ids(row)).collect();
                Ok(LoadedAdjunction::HomIso(HomIso::new(left, right, phi)?))
            }
            _ => Err(shape("an adjunction needs either `unit` and `counit`, or `phi`")),
        }
    }

    pub fn cat_valued(&self, doc: &CatValuedDoc) -> Result<CatValuedFunctor, DocError> {
        Ok(CatValuedFunctor {
            source: self.category(&doc.source)?,
            fibers: doc.fibers.iter().map(|f| self.category(f)).collect::<Result<_, _>>()?,
            transport: doc.transport.iter().map(|t| self.functor(t)).collect::<Result<_, _>>()?,
        })
    }
}

fn mor_ids(v: &[usize]) -> Vec<MorId> {
    v.iter().copied().map(MorId).collect()
}

pub fn category_from_doc(doc: &CategoryDoc) -> Result<FinCategory, Error> {
    FinCategory::from_parts(
        "input",
        doc.objects,
        doc.morphisms.iter().map(|m| (ObId(m.src), ObId(m.tgt))).collect(),
        mor_ids(&doc.identity),
        doc.compose.iter().map(|&[g, f, gf]| (MorId(g), MorId(f), MorId(gf))),
    )
}

pub fn category_doc(c: &FinCategory) -> CategoryDoc {
    let mut compose: Vec<[usize; 3]> = c.compose_entries().into_iter().map(|(g, f, gf)| [g.0, f.0, gf.0]).collect();
    compose.sort_unstable();
    CategoryDoc {
        objects: c.n_ob(),
        morphisms: c
            .morphisms()
            .map(|m| {
                let (s, t) = c.ends(m);
                MorphismDoc { src: s.0, tgt: t.0 }
            })
            .collect(),
        identity: c.objects().map(|x| c.identity(x).0).collect(),
        compose,
    }
}

pub fn functor_doc(f: &Functor) -> FunctorDoc {
    FunctorDoc {
        source: Ref::inline(category_doc(f.source())),
        target: Ref::inline(category_doc(f.target())),
        ob: f.ob_map().iter().map(|o| o.0).collect(),
        mor: f.mor_map().iter().map(|m| m.0).collect(),
    }
}

pub fn nat_trans_doc(t: &NatTrans) -> NatTransDoc {
    NatTransDoc {
        source: Ref::inline(functor_doc(t.source())),
        target: Ref::inline(functor_doc(t.target())),
        components: t.components().iter().map(|m| m.0).collect(),
    }
}

pub fn unit_counit_doc(a: &UnitCounit) -> AdjunctionDoc {
    AdjunctionDoc {
        left: Ref::inline(functor_doc(&a.left)),
        right: Ref::inline(functor_doc(&a.right)),
        unit: Some(a.unit.components().iter().map(|m| m.0).collect()),
        counit: Some(a.counit.components().iter().map(|m| m.0).collect()),
        phi: None,
    }
}

pub fn hom_iso_doc(a: &HomIso) -> AdjunctionDoc {
    AdjunctionDoc {
        left: Ref::inline(functor_doc(&a.left)),
        right: Ref::inline(functor_doc(&a.right)),
        unit: None,
        counit: None,
        phi: Some(a.phi.iter().map(|row| row.iter().map(|m| m.0).collect()).collect()),
    }
}

pub fn cat_valued_doc(f: &CatValuedFunctor) -> CatValuedDoc {
    CatValuedDoc {
        source: Ref::inline(category_doc(&f.source)),
        fibers: f.fibers.iter().map(|c| Ref::inline(category_doc(c))).collect(),
        transport: f.transport.iter().map(|t| Ref::inline(functor_doc(t))).collect(),
    }
}

/// Compact JSON followed by a newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{chain, walking_arrow};

    #[test]
    fn category_round_trip() {
        let c = chain(3);
        let text = to_canonical_json(&category_doc(&c));
        let back = category_from_doc(&parse(&text, "test").unwrap()).unwrap();
        assert_eq!(back, c);
        let twice = to_canonical_json(&category_doc(&back.op().op()));
        assert_eq!(twice, text);
    }

    #[test]
    fn arrow_document() {
        let text = to_canonical_json(&category_doc(&walking_arrow()));
        assert_eq!(
            text,
            "{\"objects\":2,\"morphisms\":[{\"src\":0,\"tgt\":0},{\"src\":1,\"tgt\":1},{\"src\":0,\"tgt\":1}],\
             \"identity\":[0,1],\"compose\":[[0,0,0],[1,1,1],[1,2,2],[2,0,2]]}\n"
        );
    }

    #[test]
    fn unknown_key_reports_position() {
        let err = parse::<CategoryDoc>(
            "{\"objects\": 1,\n \"colour\": 3, \"morphisms\": [], \"identity\": [], \"compose\": []}",
            "input",
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("colour") && msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn nested_unknown_key_in_inline_reference() {
        let err = parse::<FunctorDoc>(
            "{\"source\": {\"objects\": 0, \"morphisms\": [], \"identity\": [], \"compose\": [], \"x\": 1},\
             \"target\": \"t.json\", \"ob\": [], \"mor\": []}",
            "input",
        )
        .unwrap_err();
        assert!(err.to_string().contains("unknown field `x`"));
    }

    #[test]
    fn file_references_resolve_relative_to_the_document() {
        let dir = std::env::temp_dir().join(format!("fincat-json-{}", std::process::id()));
        std::fs::create_dir_all(dir.join("sub")).unwrap();
        std::fs::write(dir.join("sub/c.json"), to_canonical_json(&category_doc(&walking_arrow()))).unwrap();
        let doc: FunctorDoc = parse("{\"source\": \"sub/c.json\", \"target\": \"sub/c.json\", \"ob\": [0, 1], \"mor\": [0, 1, 2]}", "f").unwrap();
        let f = Loader::new(&dir).functor(&Ref::inline(doc)).unwrap();
        assert!(f.is_valid());
        assert_eq!(f, Functor::identity(&walking_arrow()));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn functors_from_files() {
        let dir = std::env::temp_dir().join(format!("fincat-cycle-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("f.json"), "{\"source\": {\"objects\": 0, \"morphisms\": [], \"identity\": [], \"compose\": []}, \"target\": {\"objects\": 0, \"morphisms\": [], \"identity\": [], \"compose\": []}, \"ob\": [], \"mor\": []}").unwrap();
        // a transformation whose functors both live in files
        let doc: NatTransDoc = parse("{\"F\": \"f.json\", \"G\": \"f.json\", \"components\": []}", "t").unwrap();
        assert!(Loader::new(&dir).nat_trans(&doc).unwrap().is_valid());
        std::fs::remove_dir_all(&dir).unwrap();
    }
}

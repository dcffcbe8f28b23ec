//! A size model for type-theoretic encodings of categories: symbolic type
//! expressions, a token count, generators for the signatures and towers
//! being compared, and a CSV report.
//!
//! Token convention: every constant, variable occurrence and binder head
//! counts 1, and an arrow `A → B` is the application of the constant `→`,
//! so it counts 1 as well. Application nodes themselves count nothing.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeExpr {
    Const(String),
    Var(String),
    App(Box<TypeExpr>, Vec<TypeExpr>),
    /// `∀ (var : domain), body`
    Binder {
        var: String,
        domain: Box<TypeExpr>,
        body: Box<TypeExpr>,
    },
    /// `target.field`
    RecordProj { field: String, target: Box<TypeExpr> },
    /// The `index`-th projection out of a nested Σ-type, carrying the type
    /// it projects out of as an explicit argument.
    SigmaProj {
        index: usize,
        annotation: Option<Box<TypeExpr>>,
        target: Box<TypeExpr>,
    },
}

pub fn konst(name: &str) -> TypeExpr {
    TypeExpr::Const(name.to_owned())
}

pub fn var(name: &str) -> TypeExpr {
    TypeExpr::Var(name.to_owned())
}

pub fn app(head: TypeExpr, args: Vec<TypeExpr>) -> TypeExpr {
    TypeExpr::App(Box::new(head), args)
}

pub fn arrow(a: TypeExpr, b: TypeExpr) -> TypeExpr {
    app(konst("→"), vec![a, b])
}

pub fn forall(v: &str, domain: TypeExpr, body: TypeExpr) -> TypeExpr {
    TypeExpr::Binder {
        var: v.to_owned(),
        domain: Box::new(domain),
        body: Box::new(body),
    }
}

pub fn word_count(t: &TypeExpr) -> usize {
    match t {
        TypeExpr::Const(_) | TypeExpr::Var(_) => 1,
        TypeExpr::App(head, args) => word_count(head) + args.iter().map(word_count).sum::<usize>(),
        TypeExpr::Binder { domain, body, .. } => 1 + word_count(domain) + word_count(body),
        TypeExpr::RecordProj { target, .. } => 1 + word_count(target),
        TypeExpr::SigmaProj { annotation, target, .. } => {
            1 + annotation.as_deref().map_or(0, word_count) + word_count(target)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EncodingStyle {
    /// Categories are opaque records; a functor type mentions only them.
    Inside,
    /// Objects and hom-types are parameters repeated at every use.
    Outside,
}

impl EncodingStyle {
    pub fn label(self) -> &'static str {
        match self {
            EncodingStyle::Inside => "inside",
            EncodingStyle::Outside => "outside",
        }
    }
}

/// The type of `Functor`.
///
/// Inside: `Category → Category → Type`. Outside:
/// `∀ (obC : Type) (obD : Type) (homC : obC → obC → Type)
/// (homD : obD → obD → Type), Category obC homC → Category obD homD → Type`.
pub fn build_functor_signature(style: EncodingStyle) -> TypeExpr {
    match style {
        EncodingStyle::Inside => arrow(konst("Category"), arrow(konst("Category"), konst("Type"))),
        EncodingStyle::Outside => {
            let hom_ty = |ob: &str| arrow(var(ob), arrow(var(ob), konst("Type")));
            let body = arrow(
                app(konst("Category"), vec![var("obC"), var("homC")]),
                arrow(app(konst("Category"), vec![var("obD"), var("homD")]), konst("Type")),
            );
            forall(
                "obC",
                konst("Type"),
                forall(
                    "obD",
                    konst("Type"),
                    forall("homC", hom_ty("obC"), forall("homD", hom_ty("obD"), body)),
                ),
            )
        }
    }
}

/// The type of a natural transformation `F ⇒ G` between functors into the
/// `k`-fold iterated functor category `[C, [C, … [C, D]]]`, the type that
/// composing transformations `k` levels deep has to mention.
///
/// Inside, each level is `FunctorCategory C (level below)`. Outside, each
/// level is spelled out as its object type, hom type and category, and each
/// of those repeats all three components of the level below.
pub fn build_composition_tower(style: EncodingStyle, k: usize) -> TypeExpr {
    assert!(k >= 1, "tower depth starts at 1");
    match style {
        EncodingStyle::Inside => {
            let mut cat = var("D");
            for _ in 1..k {
                cat = app(konst("FunctorCategory"), vec![var("C"), cat]);
            }
            app(konst("NaturalTransformation"), vec![var("C"), cat, var("F"), var("G")])
        }
        EncodingStyle::Outside => {
            let (mut ob, mut hom, mut cat) = (var("obD"), var("homD"), var("D"));
            let level = |head: &str, ob: &TypeExpr, hom: &TypeExpr, cat: &TypeExpr| {
                app(
                    konst(head),
                    vec![var("obC"), ob.clone(), var("homC"), hom.clone(), var("C"), cat.clone()],
                )
            };
            for _ in 1..k {
                let next = (
                    level("Functor", &ob, &hom, &cat),
                    level("NaturalTransformation", &ob, &hom, &cat),
                    level("FunctorCategory", &ob, &hom, &cat),
                );
                (ob, hom, cat) = next;
            }
            app(
                konst("NaturalTransformation"),
                vec![var("obC"), ob, var("homC"), hom, var("C"), cat, var("F"), var("G")],
            )
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectionFlavor {
    NestedSigma,
    FlatRecord,
}

impl ProjectionFlavor {
    pub fn label(self) -> &'static str {
        match self {
            ProjectionFlavor::NestedSigma => "nested-sigma",
            ProjectionFlavor::FlatRecord => "flat-record",
        }
    }
}

/// `Σ (x_i : A_i), … , A_n` over fields `from..=n`.
fn sigma_tail(from: usize, n: usize) -> TypeExpr {
    let mut t = konst(&format!("A{n}"));
    for i in (from..n).rev() {
        t = app(konst("Σ"), vec![konst(&format!("A{i}")), t]);
    }
    t
}

/// The `n` projections of an `n`-field structure, fully applied to `x`.
pub fn projections(n: usize, flavor: ProjectionFlavor) -> Vec<TypeExpr> {
    (1..=n)
        .map(|i| match flavor {
            ProjectionFlavor::FlatRecord => TypeExpr::RecordProj {
                field: format!("f{i}"),
                target: Box::new(var("x")),
            },
            ProjectionFlavor::NestedSigma => TypeExpr::SigmaProj {
                index: i,
                annotation: (i < n).then(|| Box::new(sigma_tail(i + 1, n))),
                target: Box::new(var("x")),
            },
        })
        .collect()
}

/// Total word count of the `n` projections.
pub fn projection_cost(n: usize, flavor: ProjectionFlavor) -> usize {
    projections(n, flavor).iter().map(word_count).sum()
}

/// Least-squares coefficients `(a, b, c)` of `a x² + b x + c`.
pub fn fit_quadratic(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 3 {
        return Err(Error::Malformed("a quadratic fit needs at least three points".into()));
    }
    let design = DMatrix::from_fn(xs.len(), 3, |r, c| xs[r].powi(2 - c as i32));
    let y = DVector::from_column_slice(ys);
    let coef = design
        .svd(true, true)
        .solve(&y, 1e-12)
        .map_err(|e| Error::Malformed(format!("least squares failed: {e}")))?;
    Ok((coef[0], coef[1], coef[2]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub label: String,
    pub param: usize,
    pub style: String,
    pub word_count: usize,
}

pub const REPORT_FOOTER: &str =
    "# word counts of a symbolic term model; they are not measurements of any proof assistant";

/// Functor signatures, towers of depth `1..=max_depth`, and projections for
/// `1..=max_fields` fields, in that order.
pub fn encoding_rows(max_depth: usize, max_fields: usize) -> Vec<SizeRow> {
    let mut rows = Vec::new();
    let row = |label: &str, param, style: &str, t: usize| SizeRow {
        label: label.to_owned(),
        param,
        style: style.to_owned(),
        word_count: t,
    };
    if max_depth > 0 {
        for s in [EncodingStyle::Inside, EncodingStyle::Outside] {
            rows.push(row("functor-signature", 0, s.label(), word_count(&build_functor_signature(s))));
        }
    }
    for k in 1..=max_depth {
        for s in [EncodingStyle::Inside, EncodingStyle::Outside] {
            rows.push(row("composition-tower", k, s.label(), word_count(&build_composition_tower(s, k))));
        }
    }
    for n in 1..=max_fields {
        for f in [ProjectionFlavor::NestedSigma, ProjectionFlavor::FlatRecord] {
            rows.push(row("projection", n, f.label(), projection_cost(n, f)));
        }
    }
    rows
}

pub fn emit_report(rows: &[SizeRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(["label", "param", "style", "word_count"])
        .map_err(|e| Error::Malformed(e.to_string()))?;
    for r in rows {
        w.serialize(r).map_err(|e| Error::Malformed(e.to_string()))?;
    }
    let mut out = String::from_utf8(w.into_inner().map_err(|e| Error::Malformed(e.to_string()))?)
        .expect("csv output is UTF-8");
    out.push_str(REPORT_FOOTER);
    out.push('\n');
    Ok(out)
}

/// Reads a report back, skipping `#` comment lines.
pub fn parse_report(text: &str) -> Result<Vec<SizeRow>> {
    let mut r = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Malformed(e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(word_count(&konst("Type")), 1);
        assert_eq!(word_count(&app(konst("Hom"), vec![var("a"), var("b")])), 3);
        assert_eq!(word_count(&build_functor_signature(EncodingStyle::Inside)), 5);
        // binders 2 + 2 + 6 + 6, body 9
        assert_eq!(word_count(&build_functor_signature(EncodingStyle::Outside)), 25);
    }

    #[test]
    fn tower_sizes() {
        let size = |s, k| word_count(&build_composition_tower(s, k));
        for k in 1..=8 {
            assert_eq!(size(EncodingStyle::Inside, k), 2 * k + 3);
        }
        assert_eq!(size(EncodingStyle::Outside, 1), 9);
        assert_eq!(size(EncodingStyle::Outside, 2), 27);
        assert_eq!(size(EncodingStyle::Outside, 6), 2187);
    }

    #[test]
    fn projection_costs() {
        for n in 1..=12 {
            assert_eq!(projection_cost(n, ProjectionFlavor::NestedSigma), n * n + 1);
            assert_eq!(projection_cost(n, ProjectionFlavor::FlatRecord), 2 * n);
        }
    }

    #[test]
    fn quadratic_fit_recovers_coefficients() {
        let xs: Vec<f64> = (1..=10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x * x - 2.0 * x + 5.0).collect();
        let (a, b, c) = fit_quadratic(&xs, &ys).unwrap();
        assert!((a - 3.0).abs() < 1e-9 && (b + 2.0).abs() < 1e-9 && (c - 5.0).abs() < 1e-9);
    }

    #[test]
    fn report_round_trip() {
        let empty = emit_report(&[]).unwrap();
        assert!(empty.starts_with("label,param,style,word_count\n"));
        assert!(parse_report(&empty).unwrap().is_empty());
        let rows = encoding_rows(3, 4);
        let text = emit_report(&rows).unwrap();
        assert_eq!(parse_report(&text).unwrap(), rows);
        for line in text.lines().filter(|l| !l.starts_with('#')) {
            assert_eq!(line.split(',').count(), 4);
        }
    }
}

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use fincat::adjunction::{to_unit_counit, validate_adjunction, Adjunction, AdjunctionForm};
use fincat::category::product_category;
use fincat::corpus::{adjunction_corpus, builtin_corpus, find, generated_corpus, CorpusEntry};
use fincat::duality::duality_check as run_duality;
use fincat::encoding::{emit_report, encoding_rows, fit_quadratic, SizeRow};
use fincat::functorcat::{count_representable_nat_trans, enumerate_functors, enumerate_nat_trans};
use fincat::grothendieck::{grothendieck as total_category, sections, validate_cat_valued};
use fincat::json::{
    category_doc, functor_doc, hom_iso_doc, nat_trans_doc, parse, read_input, to_canonical_json, unit_counit_doc,
    AdjunctionDoc, CatValuedDoc, CategoryDoc, DocError, FunctorDoc, KanDoc, LoadedAdjunction, Loader, NatTransDoc,
    Ref,
};
use fincat::universal::{colimit, kan_extension, limit, verify_colimit, verify_kan, verify_limit};
use fincat::{Budget, Error, FinCategory, Functor, NatTrans, ValidationReport};

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable files, malformed JSON: exit 2.
    Usage(String),
    /// Input that breaks its laws or a failed property: exit 1.
    Invalid(String),
    /// A search ran past its cap: exit 3.
    Cap(String),
    /// A complete report on stdout whose verdict is failure: exit 1.
    Report { output: String, message: String },
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Invalid(_) | Failure::Report { .. } => 1,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Cap(m) => f.write_str(m),
            Failure::Report { message, .. } => f.write_str(message),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationCapExceeded { .. } => Failure::Cap(e.to_string()),
            e => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<DocError> for Failure {
    fn from(e: DocError) -> Self {
        match e {
            DocError::Build(e) => e.into(),
            e => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<String, Failure>;

fn load<T: for<'de> serde::Deserialize<'de>>(path: &str) -> Result<(T, Loader), Failure> {
    let text = read_input(path)?;
    Ok((parse(&text, path)?, Loader::for_document(path)))
}

fn require(report: ValidationReport, what: &str) -> Result<(), Failure> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!("invalid {what}: {report}")))
    }
}

fn category_report(c: &FinCategory) -> ValidationReport {
    c.validate()
}

fn functor_report(f: &Functor) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.extend_from("source", f.source().validate());
    r.extend_from("target", f.target().validate());
    if r.is_valid() {
        r.extend_from("functor", f.validate());
    }
    r
}

fn nat_trans_report(t: &NatTrans) -> ValidationReport {
    let mut r = ValidationReport::new();
    r.extend_from("F", functor_report(t.source()));
    r.extend_from("G", functor_report(t.target()));
    if r.is_valid() {
        r.extend_from("transformation", t.validate());
    }
    r
}

fn load_category(path: &str) -> Result<FinCategory, Failure> {
    let (doc, loader) = load::<CategoryDoc>(path)?;
    let c = loader.category(&Ref::inline(doc))?;
    require(category_report(&c), "category")?;
    Ok(c)
}

fn load_functor(path: &str) -> Result<Functor, Failure> {
    let (doc, loader) = load::<FunctorDoc>(path)?;
    let f = loader.functor(&Ref::inline(doc))?;
    require(functor_report(&f), "functor")?;
    Ok(f)
}

enum AnyDoc {
    Category(CategoryDoc),
    Functor(FunctorDoc),
    NatTrans(NatTransDoc),
    Adjunction(AdjunctionDoc),
    CatValued(CatValuedDoc),
}

/// Tells document kinds apart by a key only that kind has.
fn load_any(path: &str) -> Result<(AnyDoc, Loader), Failure> {
    let text = read_input(path)?;
    let value: Value = parse(&text, path)?;
    let Some(obj) = value.as_object() else {
        return Err(Failure::Usage(format!("{path}: expected a JSON object")));
    };
    let doc = if obj.contains_key("objects") {
        AnyDoc::Category(parse(&text, path)?)
    } else if obj.contains_key("ob") {
        AnyDoc::Functor(parse(&text, path)?)
    } else if obj.contains_key("F") {
        AnyDoc::NatTrans(parse(&text, path)?)
    } else if obj.contains_key("fibers") {
        AnyDoc::CatValued(parse(&text, path)?)
    } else if obj.contains_key("left") {
        AnyDoc::Adjunction(parse(&text, path)?)
    } else {
        return Err(Failure::Usage(format!("{path}: not a recognised document")));
    };
    Ok((doc, Loader::for_document(path)))
}

fn loaded_adjunction(a: LoadedAdjunction) -> Adjunction {
    match a {
        LoadedAdjunction::UnitCounit(a) => Adjunction::UnitCounit(a),
        LoadedAdjunction::HomIso(a) => Adjunction::HomIso(a),
    }
}

fn adjunction_report(a: &Adjunction) -> ValidationReport {
    let (left, right) = match a {
        Adjunction::UnitCounit(a) => (&a.left, &a.right),
        Adjunction::HomIso(a) => (&a.left, &a.right),
        Adjunction::Universal(_) => unreachable!("documents carry unit/counit or hom bijections"),
    };
    let mut r = ValidationReport::new();
    r.extend_from("left adjoint", functor_report(left));
    r.extend_from("right adjoint", functor_report(right));
    if r.is_valid() {
        r = validate_adjunction(a);
    }
    r
}

pub fn validate(path: &str) -> Out {
    let (doc, loader) = load_any(path)?;
    let (kind, report) = match doc {
        AnyDoc::Category(d) => ("category", category_report(&loader.category(&Ref::inline(d))?)),
        AnyDoc::Functor(d) => ("functor", functor_report(&loader.functor(&Ref::inline(d))?)),
        AnyDoc::NatTrans(d) => ("natural-transformation", nat_trans_report(&loader.nat_trans(&d)?)),
        AnyDoc::Adjunction(d) => ("adjunction", adjunction_report(&loaded_adjunction(loader.adjunction(&d)?))),
        AnyDoc::CatValued(d) => {
            let f = loader.cat_valued(&d)?;
            let mut r = category_report(&f.source);
            if r.is_valid() {
                r = validate_cat_valued(&f);
            }
            ("category-valued-functor", r)
        }
    };
    let output = to_canonical_json(&json!({
        "kind": kind,
        "valid": report.is_valid(),
        "violations": report.violations,
    }));
    if report.is_valid() {
        Ok(output)
    } else {
        Err(Failure::Report {
            output,
            message: format!("invalid {kind}: {report}"),
        })
    }
}

pub fn op(path: &str) -> Out {
    let (doc, loader) = load_any(path)?;
    Ok(match doc {
        AnyDoc::Category(d) => {
            let c = loader.category(&Ref::inline(d))?;
            require(category_report(&c), "category")?;
            to_canonical_json(&category_doc(&c.op()))
        }
        AnyDoc::Functor(d) => {
            let f = loader.functor(&Ref::inline(d))?;
            require(functor_report(&f), "functor")?;
            to_canonical_json(&functor_doc(&f.op()))
        }
        AnyDoc::NatTrans(d) => {
            let t = loader.nat_trans(&d)?;
            require(nat_trans_report(&t), "natural transformation")?;
            to_canonical_json(&nat_trans_doc(&t.op()))
        }
        _ => return Err(Failure::Usage(format!("{path}: op takes a category, functor or transformation"))),
    })
}

pub fn product(left: &str, right: &str) -> Out {
    let (c, d) = (load_category(left)?, load_category(right)?);
    Ok(to_canonical_json(&category_doc(&product_category(&c, &d))))
}

#[derive(Serialize)]
struct Maps {
    ob: Vec<usize>,
    mor: Vec<usize>,
}

fn maps(f: &Functor) -> Maps {
    Maps {
        ob: f.ob_map().iter().map(|o| o.0).collect(),
        mor: f.mor_map().iter().map(|m| m.0).collect(),
    }
}

pub fn functors(source: &str, target: &str, cap: usize) -> Out {
    let (c, d) = (load_category(source)?, load_category(target)?);
    let all = enumerate_functors(&c, &d, cap)?;
    Ok(to_canonical_json(&json!({
        "count": all.len(),
        "functors": all.iter().map(maps).collect::<Vec<_>>(),
    })))
}

pub fn nat_trans(from: &str, to: &str, cap: usize) -> Out {
    let (f, g) = (load_functor(from)?, load_functor(to)?);
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Failure::Invalid("the functors do not share source and target".into()));
    }
    let all = enumerate_nat_trans(&f, &g, &mut Budget::new(cap))?;
    let comps: Vec<Vec<usize>> = all.iter().map(|t| t.components().iter().map(|m| m.0).collect()).collect();
    Ok(to_canonical_json(&json!({ "count": all.len(), "transformations": comps })))
}

pub fn limits(path: &str, dual: bool, cap: usize) -> Out {
    let d = load_functor(path)?;
    let ids = |v: &[fincat::MorId]| v.iter().map(|m| m.0).collect::<Vec<_>>();
    let out = if dual {
        match colimit(&d, cap)? {
            Some(c) => json!({
                "exists": true,
                "nadir": c.nadir.0,
                "legs": ids(&c.legs),
                "universal": verify_colimit(&c, cap)?,
            }),
            None => json!({ "exists": false }),
        }
    } else {
        match limit(&d, cap)? {
            Some(c) => json!({
                "exists": true,
                "apex": c.apex.0,
                "legs": ids(&c.legs),
                "universal": verify_limit(&c, cap)?,
            }),
            None => json!({ "exists": false }),
        }
    };
    Ok(to_canonical_json(&out))
}

pub fn kan(path: &str, cap: usize) -> Out {
    let (doc, loader) = load::<KanDoc>(path)?;
    let k = loader.functor(&doc.along)?;
    let f = loader.functor(&doc.functor)?;
    require(functor_report(&k), "functor to extend along")?;
    require(functor_report(&f), "functor to extend")?;
    let ext = kan_extension(doc.direction, &k, &f, cap)?;
    let universal = verify_kan(&ext, cap)?;
    Ok(to_canonical_json(&json!({
        "direction": doc.direction,
        "extension": maps(&ext.extension),
        "unit": ext.unit.components().iter().map(|m| m.0).collect::<Vec<_>>(),
        "universal": universal,
    })))
}

fn form_name(f: AdjunctionForm) -> Value {
    serde_json::to_value(f).expect("forms serialize")
}

pub fn check_adjunction(path: &str, form: AdjunctionForm) -> Out {
    let (doc, loader) = load::<AdjunctionDoc>(path)?;
    let input = loaded_adjunction(loader.adjunction(&doc)?);
    let report = adjunction_report(&input);
    let mut out = json!({
        "input_form": form_name(input.form()),
        "form": form_name(form),
        "valid": report.is_valid(),
        "violations": report.violations,
    });
    if !report.is_valid() {
        return Err(Failure::Report {
            output: to_canonical_json(&out),
            message: format!("invalid adjunction: {report}"),
        });
    }
    let converted = input.convert(form)?;
    let converted_report = validate_adjunction(&converted);
    let round_trip = converted.convert(input.form())? == input;
    out["converted_valid"] = json!(converted_report.is_valid());
    out["round_trip"] = json!(round_trip);
    out["adjunction"] = match &converted {
        Adjunction::UnitCounit(a) => serde_json::to_value(unit_counit_doc(a)),
        Adjunction::HomIso(a) => serde_json::to_value(hom_iso_doc(a)),
        Adjunction::Universal(_) => serde_json::to_value(unit_counit_doc(&to_unit_counit(&converted)?)),
    }
    .expect("documents serialize");
    let output = to_canonical_json(&out);
    if converted_report.is_valid() && round_trip {
        Ok(output)
    } else {
        Err(Failure::Report {
            output,
            message: "conversion did not preserve the adjunction".into(),
        })
    }
}

pub fn grothendieck(path: &str, cap: usize) -> Out {
    let (doc, loader) = load::<CatValuedDoc>(path)?;
    let f = loader.cat_valued(&doc)?;
    require(category_report(&f.source), "base category")?;
    require(validate_cat_valued(&f), "category-valued functor")?;
    let g = total_category(&f)?;
    let secs = sections(&f, cap)?;
    Ok(to_canonical_json(&json!({
        "objects": g.objects.iter().map(|&(b, x)| [b.0, x.0]).collect::<Vec<_>>(),
        "morphisms": g.morphisms.iter().map(|&(m, h)| [m.0, h.0]).collect::<Vec<_>>(),
        "category": category_doc(&g.category),
        "projection": maps(&g.projection),
        "sections": secs.iter().map(maps).collect::<Vec<_>>(),
    })))
}

pub fn yoneda_check(path: &str, cap: usize) -> Out {
    let c = load_category(path)?;
    let mut pairs = Vec::new();
    let mut passed = true;
    for a in c.objects() {
        for b in c.objects() {
            let nat = count_representable_nat_trans(&c, a, b, cap)?;
            let hom = c.hom(a, b).len();
            passed &= nat == hom;
            pairs.push(json!({ "a": a.0, "b": b.0, "hom": hom, "nat": nat }));
        }
    }
    let output = to_canonical_json(&json!({ "passed": passed, "pairs": pairs }));
    if passed {
        Ok(output)
    } else {
        Err(Failure::Report {
            output,
            message: "transformation counts differ from hom-set sizes".into(),
        })
    }
}

pub fn duality_check(path: &str) -> Out {
    let c = load_category(path)?;
    let report = run_duality(&c);
    let output = to_canonical_json(&json!({ "passed": report.passed(), "report": report }));
    if report.passed() {
        Ok(output)
    } else {
        Err(Failure::Report {
            output,
            message: "duality checks failed".into(),
        })
    }
}

fn fit(rows: &[SizeRow], style: &str) -> Result<Option<[f64; 3]>, Failure> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = rows
        .iter()
        .filter(|r| r.label == "projection" && r.style == style)
        .map(|r| (r.param as f64, r.word_count as f64))
        .unzip();
    if xs.len() < 3 {
        return Ok(None);
    }
    let (a, b, c) = fit_quadratic(&xs, &ys)?;
    Ok(Some([a, b, c]))
}

pub fn bench_encoding(max_depth: usize, max_fields: usize, as_json: bool) -> Out {
    let rows = encoding_rows(max_depth, max_fields);
    if !as_json {
        return Ok(emit_report(&rows)?);
    }
    let size = |k: usize, style: &str| {
        rows.iter()
            .find(|r| r.label == "composition-tower" && r.param == k && r.style == style)
            .map_or(0.0, |r| r.word_count as f64)
    };
    let ratios: Vec<Value> = (1..=max_depth)
        .map(|k| json!({ "k": k, "ratio": size(k, "outside") / size(k, "inside") }))
        .collect();
    Ok(to_canonical_json(&json!({
        "rows": rows,
        "tower_ratios": ratios,
        "projection_fit": {
            "nested-sigma": fit(&rows, "nested-sigma")?,
            "flat-record": fit(&rows, "flat-record")?,
        },
    })))
}

fn corpus(seed: u64, generated: usize) -> Vec<CorpusEntry> {
    let mut members = builtin_corpus();
    members.extend(generated_corpus(seed, generated));
    members
}

pub fn corpus_list(seed: u64, generated: usize) -> Out {
    Ok(corpus(seed, generated).iter().map(|e| format!("{}\n", e.name)).collect())
}

pub fn corpus_show(seed: u64, generated: usize, name: &str) -> Out {
    let c = find(&corpus(seed, generated), name).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(to_canonical_json(&category_doc(&c)))
}

pub fn corpus_run(seed: u64, generated: usize, cap: usize) -> Out {
    let members = corpus(seed, generated);
    let mut checks = Vec::new();
    let mut failures = 0;
    for e in &members {
        let c = &e.category;
        let valid = c.is_valid();
        let duality = run_duality(c);
        let yoneda = if c.n_mor() <= 8 {
            let mut ok = true;
            for a in c.objects() {
                for b in c.objects() {
                    ok &= count_representable_nat_trans(c, a, b, cap)? == c.hom(a, b).len();
                }
            }
            Some(ok)
        } else {
            None
        };
        let ok = valid && duality.passed() && yoneda != Some(false);
        failures += usize::from(!ok);
        checks.push(json!({
            "name": e.name,
            "objects": c.n_ob(),
            "morphisms": c.n_mor(),
            "valid": valid,
            "duality": duality.passed(),
            "yoneda": yoneda,
        }));
    }
    let mut adjunctions = Vec::new();
    for e in adjunction_corpus(cap)? {
        let a = Adjunction::UnitCounit(e.adjunction);
        let forms = [AdjunctionForm::UnitCounit, AdjunctionForm::Hom, AdjunctionForm::Universal];
        let mut ok = validate_adjunction(&a).is_valid();
        for form in forms {
            let there = a.convert(form)?;
            ok &= validate_adjunction(&there).is_valid();
            for back in forms {
                ok &= there.convert(back)? == a.convert(back)?;
            }
        }
        failures += usize::from(!ok);
        adjunctions.push(json!({ "name": e.name, "passed": ok }));
    }
    let output = to_canonical_json(&json!({
        "seed": seed,
        "categories": checks,
        "adjunctions": adjunctions,
        "failures": failures,
    }));
    if failures == 0 {
        Ok(output)
    } else {
        Err(Failure::Report {
            output,
            message: format!("{failures} corpus checks failed"),
        })
    }
}

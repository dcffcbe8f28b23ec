use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use fincat::category::{chain, discrete_category, walking_arrow, FinCategory, ObId};
use fincat::corpus::chain_galois_pairs;
use fincat::finset::{as_category_skeletal, FinSetObj};
use fincat::json::{cat_valued_doc, category_doc, functor_doc, to_canonical_json, unit_counit_doc, KanDoc, Ref};
use fincat::universal::KanDirection;
use fincat::{CatValuedFunctor, Functor};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fincat"));
    c.env_remove("FINCAT_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_category(dir: &Path, name: &str, c: &FinCategory) -> String {
    write(dir, name, &to_canonical_json(&category_doc(c))).display().to_string()
}

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_category(dir.path(), "good.json", &chain(3));
    let o = run(&["validate", &good]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["valid"], true);

    // 1 ∘ a given as 1 instead of a
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"objects":2,"morphisms":[{"src":0,"tgt":0},{"src":1,"tgt":1},{"src":0,"tgt":1}],
            "identity":[0,1],"compose":[[0,0,0],[1,1,1],[1,2,1],[2,0,2]]}"#,
    );
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(json(&o)["valid"], false);
    // other commands refuse it without output
    let o = run(&["duality-check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(o.stdout.is_empty());
}

#[test]
fn op_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (i, c) in [walking_arrow(), chain(4), discrete_category(0)].iter().enumerate() {
        let path = write_category(dir.path(), &format!("c{i}.json"), c);
        let once = run(&["op", &path]);
        assert_eq!(code(&once), 0);
        let twice = run_stdin(&["op", "-"], &once.stdout);
        assert_eq!(code(&twice), 0);
        assert_eq!(twice.stdout, std::fs::read(&path).unwrap());
    }
}

#[test]
fn unknown_key_is_a_usage_error_with_position() {
    let o = run_stdin(
        &["validate", "-"],
        b"{\"objects\": 0,\n \"morphisms\": [],\n \"identity\": [], \"compose\": [], \"extra\": 1}",
    );
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("unknown field `extra`") && err.contains("line 3"), "{err}");
    assert!(o.stdout.is_empty());
    assert_eq!(code(&run(&["validate", "/no/such/file.json"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn product_and_functors() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_category(dir.path(), "a.json", &walking_arrow());
    let o = run(&["product", &a, &a]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["objects"], 4);
    let o = run(&["functors", &a, &a]);
    assert_eq!(json(&o)["count"], 3);
}

#[test]
fn cap_exceeded_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let s = write_category(dir.path(), "s.json", &as_category_skeletal(&[0, 1, 2], 1 << 20).unwrap().category);
    assert_eq!(code(&run(&["functors", &s, &s, "--cap", "5"])), 3);
    let o = bin().args(["functors", &s, &s]).env("FINCAT_CAP", "5").output().unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["functors", &s, &s])), 0);
}

#[test]
fn nat_trans_between_identities() {
    let dir = tempfile::tempdir().unwrap();
    let id = Functor::identity(&chain(3));
    let f = write(dir.path(), "id.json", &to_canonical_json(&functor_doc(&id)));
    let f = f.to_str().unwrap();
    let o = run(&["nat-trans", f, f]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["count"], 1);
}

#[test]
fn limits_and_colimits_of_a_pair() {
    let dir = tempfile::tempdir().unwrap();
    let s = as_category_skeletal(&[0, 1, 2, 3, 4], 1 << 20).unwrap();
    let two = s.object_of_size(2).unwrap();
    let d = Functor::constant(&discrete_category(2), &s.category, two).unwrap();
    let path = write(dir.path(), "d.json", &to_canonical_json(&functor_doc(&d)));
    let o = run(&["limits", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["exists"], true);
    assert_eq!(v["universal"], true);
    assert_eq!(s.set(ObId(v["apex"].as_u64().unwrap() as usize)), FinSetObj::new(4));
    let o = run(&["colimits", path.to_str().unwrap()]);
    let v = json(&o);
    assert_eq!(s.set(ObId(v["nadir"].as_u64().unwrap() as usize)), FinSetObj::new(4));
}

#[test]
fn adjunction_forms() {
    let dir = tempfile::tempdir().unwrap();
    let a = chain_galois_pairs(2, 3).unwrap().remove(2);
    let path = write(dir.path(), "adj.json", &to_canonical_json(&unit_counit_doc(&a)));
    let path = path.to_str().unwrap();
    for form in ["unit-counit", "hom", "universal"] {
        let o = run(&["check-adjunction", "--form", form, path]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let v = json(&o);
        assert_eq!(v["round_trip"], true);
        assert_eq!(v["converted_valid"], true);
    }
    // converting to hom form and feeding it back in
    let o = run(&["check-adjunction", "--form", "hom", path]);
    let hom = serde_json::to_string(&json(&o)["adjunction"]).unwrap();
    let hom_path = write(dir.path(), "hom.json", &hom);
    let o = run(&["check-adjunction", hom_path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["input_form"], "hom");

    // unit and counit exchanged
    let mut doc = unit_counit_doc(&a);
    std::mem::swap(&mut doc.unit, &mut doc.counit);
    let swapped = write(dir.path(), "swapped.json", &to_canonical_json(&doc));
    let o = run(&["check-adjunction", swapped.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
}

#[test]
fn grothendieck_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let (d1, d2) = (discrete_category(1), discrete_category(2));
    let f = CatValuedFunctor {
        source: walking_arrow(),
        fibers: vec![d1.clone(), d2.clone()],
        transport: vec![
            Functor::identity(&d1),
            Functor::identity(&d2),
            Functor::constant(&d1, &d2, ObId(0)).unwrap(),
        ],
    };
    let path = write(dir.path(), "g.json", &to_canonical_json(&cat_valued_doc(&f)));
    let o = run(&["grothendieck", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["category"]["objects"], 3);
    assert_eq!(v["category"]["morphisms"].as_array().unwrap().len(), 4);
    assert_eq!(v["sections"].as_array().unwrap().len(), 1);
}

#[test]
fn kan_extension_with_file_references() {
    let dir = tempfile::tempdir().unwrap();
    let (c2, c3) = (chain(2), chain(3));
    let k = Functor::between_preorders(&c2, &c3, vec![ObId(0), ObId(2)]).unwrap();
    std::fs::create_dir(dir.path().join("parts")).unwrap();
    write(dir.path(), "parts/k.json", &to_canonical_json(&functor_doc(&k)));
    write(dir.path(), "parts/f.json", &to_canonical_json(&functor_doc(&Functor::identity(&c2))));
    let doc = KanDoc {
        direction: KanDirection::Right,
        along: Ref::File("parts/k.json".into()),
        functor: Ref::File("parts/f.json".into()),
    };
    let path = write(dir.path(), "kan.json", &to_canonical_json(&doc));
    let o = run(&["kan", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["extension"]["ob"], serde_json::json!([0, 1, 1]));
    assert_eq!(v["universal"], true);
}

#[test]
fn yoneda_and_duality_on_a_square() {
    let dir = tempfile::tempdir().unwrap();
    let sq = fincat::category::product_category(&walking_arrow(), &walking_arrow());
    let p = write_category(dir.path(), "sq.json", &sq);
    let o = run(&["yoneda-check", &p]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["pairs"].as_array().unwrap().len(), 16);
    let o = run(&["duality-check", &p]);
    assert_eq!(json(&o)["report"]["terminal_objects"], serde_json::json!([3]));
}

#[test]
fn encoding_bench_output() {
    let o = run(&["bench", "encoding", "--max-depth", "6", "--max-fields", "5"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    assert!(text.starts_with("label,param,style,word_count\n"));
    assert!(text.lines().last().unwrap().starts_with('#'));
    assert_eq!(run(&["bench", "encoding", "--max-depth", "6", "--max-fields", "5"]).stdout, o.stdout);
    let o = run(&["bench", "encoding", "--format", "json"]);
    let v = json(&o);
    let ratio = v["tower_ratios"][5]["ratio"].as_f64().unwrap();
    assert!((ratio - 145.8).abs() < 1e-9);
    assert!(v["projection_fit"]["nested-sigma"][0].as_f64().unwrap() > 0.9);
}

#[test]
fn corpus_run_is_deterministic() {
    let a = run(&["corpus", "run", "--seed", "11"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let b = run(&["corpus", "run", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["categories"].as_array().unwrap().len() >= 50);
    assert!(v["adjunctions"].as_array().unwrap().len() >= 10);
    assert_eq!(v["failures"], 0);
    let shown = run(&["corpus", "show", "square"]);
    assert_eq!(code(&shown), 0);
    assert_eq!(code(&run(&["corpus", "show", "nothing"])), 2);
}

//! The `ppmod` binary on its documented invocations, and record round trips.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use ppmod::module::{are_isomorphic, enumerate_modules};
use ppmod::pp::phi_family;
use ppmod::serial::*;
use ppmod::{HomGroup, Ring};
use serde_json::{json, Value};

fn dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("ppmod-cli-{}-{tag}", std::process::id()));
    fs::create_dir_all(&d).unwrap();
    d
}

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_ppmod")).args(args).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn write(d: &Path, name: &str, v: &Value) -> String {
    let p = d.join(name);
    fs::write(&p, render(v)).unwrap();
    p.to_str().unwrap().to_string()
}

fn z2_into_z4() -> Value {
    json!({
        "source": { "ring": "z4", "orders": [2], "actions": [[[1]]] },
        "target": { "ring": "z4", "orders": [4], "actions": [[[1]]] },
        "matrix": [[2]],
    })
}

#[test]
fn classify_reports_the_divisibility_witness() {
    let d = dir("classify");
    let f = write(&d, "f.json", &z2_into_z4());
    let (code, v) = run(&["classify", "--hom", &f, "--mode", "pure"]);
    assert_eq!(code, 0);
    assert_eq!(v["embedding"], json!(true));
    assert_eq!(v["rd"], json!(false));
    assert_eq!(v["pure"], json!(false));
    assert_eq!(v["split"], json!(false));
    assert_eq!(v["witness"]["r"], json!(["2"]));
}

#[test]
fn pushout_along_identity_is_the_first_target() {
    let d = dir("pushout");
    let f1 = write(&d, "a.json", &z2_into_z4());
    let id = json!({
        "source": { "ring": "z4", "orders": [2], "actions": [[[1]]] },
        "target": { "ring": "z4", "orders": [2], "actions": [[[1]]] },
        "matrix": [[1]],
    });
    let f2 = write(&d, "b.json", &id);
    let (code, v) = run(&["pushout", "--f1", &f1, "--f2", &f2]);
    assert_eq!(code, 0);
    let apex = module_from_json(&v["apex"]).unwrap();
    let n1 = hom_from_json(&z2_into_z4()).unwrap().target().clone();
    assert!(are_isomorphic(&apex, &n1).unwrap().is_some());
}

#[test]
fn regular_module_is_injective_over_z4() {
    let d = dir("inj");
    let e = write(&d, "e.json", &json!({ "ring": "z4", "orders": [4], "actions": [[[1]]] }));
    let r = write(&d, "r.json", &ring_to_json(&Ring::zmod(4).unwrap()));
    let (code, v) = run(&["inj", "--subject", &e, "--ring", &r, "--mode", "emb", "--bound", "16"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], json!(true));
    assert_eq!(v["label"], json!("verdict-injective at bound 16"));
}

#[test]
fn suite_run_and_unknown_suite() {
    let (code, v) = run(&["suite", "run", "--name", "push-preservation", "--ring", "z4", "--bound", "12"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], json!(true));
    assert!(parse_int(&v["suites"][0]["counters"]["squares"]).unwrap() > 0);
    let (code, v) = run(&["suite", "run", "--name", "nosuch"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], json!("unknown-suite"));
}

#[test]
fn errors_and_caps() {
    let d = dir("errors");
    let broken = d.join("broken.json");
    fs::write(&broken, "{\"ring\": \"z4\",\n \"orders\": [4").unwrap();
    let (code, v) = run(&["module", "--input", broken.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(v["message"].as_str().unwrap().contains("broken.json:2:"));

    let ill = json!({
        "source": { "ring": "z4", "orders": [2], "actions": [[[1]]] },
        "target": { "ring": "z4", "orders": [4], "actions": [[[1]]] },
        "matrix": [[1]],
    });
    let f = write(&d, "ill.json", &ill);
    let (code, v) = run(&["hom", "--input", &f]);
    assert_eq!((code, v["error"].as_str()), (1, Some("ill-defined")));

    let e = write(&d, "e.json", &json!({ "ring": "z4", "orders": [4], "actions": [[[1]]] }));
    let (code, v) = run(&["sigma", "--subject", &e, "--ring", "z4", "--powers", "3", "--max-power-size", "16"]);
    assert_eq!((code, v["error"].as_str()), (2, Some("resource-cap")));
    let (code, _) = run(&["sigma", "--subject", &e, "--ring", "z4", "--powers", "2", "--max-power-size", "16"]);
    assert_eq!(code, 0);
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let args = ["noetherian", "--ring", "f2xy", "--mode", "rd", "--bound", "8"];
    let a = Command::new(env!("CARGO_BIN_EXE_ppmod")).args(args).output().unwrap().stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_ppmod")).args(args).output().unwrap().stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn records_round_trip() {
    for name in ["z2", "z9", "f2xy", "ut2"] {
        let r = Ring::preset(name).unwrap();
        assert_eq!(ring_from_json(&ring_to_json(&r)).unwrap(), r);
        let ms = enumerate_modules(&r, 9).unwrap();
        for m in &ms {
            let text = render(&module_to_json(m));
            let back = module_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(&back, m);
        }
        for a in ms.iter().take(4) {
            for b in ms.iter().take(4) {
                for h in HomGroup::new(a, b).unwrap().elements() {
                    assert_eq!(hom_from_json(&hom_to_json(&h)).unwrap(), h);
                }
            }
        }
        for phi in phi_family(&r, 1).unwrap().formulas.iter().take(50) {
            assert_eq!(&formula_from_json(&formula_to_json(phi)).unwrap(), phi);
        }
    }
}

//! JSON records. Field order is fixed and integers are written as decimal
//! strings; on input plain JSON integers are accepted as well.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::hom::Hom;
use crate::injectivity::{BaerReport, ClosureReport, InjectivityReport, NoetherianReport, SigmaReport};
use crate::module::{canonicalize, validate, Module, Submodule};
use crate::pp::{EmbeddingClass, PpFormula, Witness};
use crate::pushout::{Chain, IndependenceSquare, LegCheck, PushoutResult};
use crate::ring::Ring;
use crate::suite::{ring_by_name, SuiteReport};

pub fn int(x: i64) -> Value {
    Value::String(x.to_string())
}

pub fn ints(v: &[i64]) -> Value {
    Value::Array(v.iter().map(|&x| int(x)).collect())
}

fn rows(m: &Matrix<i64>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

fn vectors(v: &[Vec<i64>]) -> Value {
    Value::Array(v.iter().map(|x| ints(x)).collect())
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn bad(what: &str) -> Error {
    Error::Input(format!("expected {what}"))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Input(format!("missing field `{key}`")))
}

pub fn parse_int(v: &Value) -> Result<i64> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| Error::Input(format!("`{s}` is not an integer"))),
        Value::Number(n) => n.as_i64().ok_or_else(|| Error::Input(format!("{n} is not an integer"))),
        _ => Err(bad("an integer")),
    }
}

pub fn parse_ints(v: &Value) -> Result<Vec<i64>> {
    v.as_array().ok_or_else(|| bad("a list of integers"))?.iter().map(parse_int).collect()
}

fn parse_vectors(v: &Value) -> Result<Vec<Vec<i64>>> {
    v.as_array().ok_or_else(|| bad("a list of vectors"))?.iter().map(parse_ints).collect()
}

/// A `rows x cols` matrix; the shape is checked against the expectation.
fn parse_matrix(v: &Value, rows: usize, cols: usize) -> Result<Matrix<i64>> {
    let data = parse_vectors(v)?;
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("expected a {rows}x{cols} matrix")));
    }
    Ok(Matrix::from_fn(rows, cols, |i, j| data[i][j]))
}

pub fn ring_to_json(r: &Ring) -> Value {
    let mut m = Map::new();
    m.insert("orders".into(), ints(r.orders()));
    m.insert(
        "struct".into(),
        Value::Array(r.structure().iter().map(|row| vectors(row)).collect()),
    );
    m.insert("unit".into(), ints(r.unit()));
    if let Some(n) = r.name() {
        m.insert("name".into(), Value::String(n.into()));
    }
    Value::Object(m)
}

/// A ring record, or a string naming a built-in ring (`z4`, `f2xy`, ..).
pub fn ring_from_json(v: &Value) -> Result<Ring> {
    if let Value::String(name) = v {
        return ring_by_name(name).ok_or_else(|| Error::Input(format!("unknown ring `{name}`")));
    }
    let orders = parse_ints(field(v, "orders")?)?;
    let structure: Vec<Vec<Vec<i64>>> = field(v, "struct")?
        .as_array()
        .ok_or_else(|| bad("a table of structure constants"))?
        .iter()
        .map(parse_vectors)
        .collect::<Result<_>>()?;
    let unit = parse_ints(field(v, "unit")?)?;
    let ring = Ring::new(orders, structure, unit)?;
    Ok(match v.get("name").and_then(Value::as_str) {
        Some(n) => ring.named(n),
        None => ring,
    })
}

pub fn module_to_json(m: &Module) -> Value {
    json!({
        "ring": ring_to_json(m.ring()),
        "orders": ints(m.orders()),
        "actions": Value::Array(m.actions().iter().map(rows).collect()),
    })
}

/// A module presentation as given, before canonicalization.
struct Presentation {
    ring: Ring,
    orders: Vec<i64>,
    actions: Vec<Matrix<i64>>,
}

fn presentation(v: &Value) -> Result<Presentation> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let orders = parse_ints(field(v, "orders")?)?;
    let k = orders.len();
    let actions: Vec<Matrix<i64>> = field(v, "actions")?
        .as_array()
        .ok_or_else(|| bad("a list of action matrices"))?
        .iter()
        .map(|a| parse_matrix(a, k, k))
        .collect::<Result<_>>()?;
    validate(&ring, &orders, &actions)?;
    Ok(Presentation { ring, orders, actions })
}

/// Any cyclic decomposition is accepted; the result is in invariant-factor
/// form.
pub fn module_from_json(v: &Value) -> Result<Module> {
    let p = presentation(v)?;
    Ok(canonicalize(&p.ring, &p.orders, &p.actions).module)
}

pub fn hom_to_json(h: &Hom) -> Value {
    json!({
        "source": module_to_json(h.source()),
        "target": module_to_json(h.target()),
        "matrix": rows(h.matrix()),
    })
}

fn mul_mod(a: &Matrix<i64>, b: &Matrix<i64>, orders: &[i64]) -> Matrix<i64> {
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc: i128 = 0;
        for p in 0..a.cols() {
            acc += *a.at(i, p) as i128 * *b.at(p, j) as i128;
        }
        acc.rem_euclid(orders[i] as i128) as i64
    })
}

/// The matrix is read in the coordinates of the given presentations,
/// checked there, and carried over to invariant-factor form.
pub fn hom_from_json(v: &Value) -> Result<Hom> {
    let s = presentation(field(v, "source")?)?;
    let t = presentation(field(v, "target")?)?;
    if s.ring != t.ring {
        return Err(Error::RingMismatch);
    }
    let (ks, kt) = (s.orders.len(), t.orders.len());
    let m = parse_matrix(field(v, "matrix")?, kt, ks)?;
    for (j, &d) in s.orders.iter().enumerate() {
        for (i, &e) in t.orders.iter().enumerate() {
            if (d as i128 * *m.at(i, j) as i128) % e as i128 != 0 {
                return Err(Error::NotWellDefined(format!("generator {j} has order {d} but its image {:?} does not", m.col(j))));
            }
        }
    }
    for (b, (sa, ta)) in s.actions.iter().zip(&t.actions).enumerate() {
        let lhs = mul_mod(&m, sa, &t.orders);
        let rhs = mul_mod(ta, &m, &t.orders);
        if let Some(j) = (0..ks).find(|&j| lhs.col(j) != rhs.col(j)) {
            return Err(Error::NotEquivariant { basis: b, generator: j });
        }
    }
    let cs = canonicalize(&s.ring, &s.orders, &s.actions);
    let ct = canonicalize(&t.ring, &t.orders, &t.actions);
    let moved = mul_mod(&m, &cs.to_old, &t.orders);
    let new = mul_mod(&ct.to_new, &moved, ct.module.orders());
    Hom::new(&cs.module, &ct.module, new)
}

pub fn formula_to_json(phi: &PpFormula) -> Value {
    json!({ "ring": ring_to_json(phi.ring()), "formula": phi.to_string() })
}

pub fn formula_from_json(v: &Value) -> Result<PpFormula> {
    let ring = ring_from_json(field(v, "ring")?)?;
    let text = field(v, "formula")?.as_str().ok_or_else(|| bad("formula text"))?;
    PpFormula::parse(text, &ring)
}

pub fn submodule_to_json(s: &Submodule) -> Value {
    json!({ "ambient": module_to_json(s.ambient()), "generators": vectors(&s.generators()) })
}

pub fn submodule_from_json(v: &Value) -> Result<Submodule> {
    let ambient = module_from_json(field(v, "ambient")?)?;
    let gens = parse_vectors(field(v, "generators")?)?;
    for g in &gens {
        ambient.check_element(g)?;
    }
    Submodule::generate(&ambient, &gens)
}

pub fn witness_to_json(w: &Witness) -> Value {
    match w {
        Witness::Kernel { element } => json!({ "kind": "kernel", "element": ints(element) }),
        Witness::Divisibility { r, element } => json!({ "kind": "divisibility", "r": ints(r), "element": ints(element) }),
        Witness::Formula { formula, tuple } => {
            json!({ "kind": "formula", "formula": formula.to_string(), "tuple": vectors(tuple) })
        }
    }
}

pub fn classification_to_json(c: &EmbeddingClass) -> Value {
    json!({
        "kind": "classify",
        "embedding": c.is_embedding,
        "rd": c.is_rd,
        "pure": c.is_pure,
        "split": c.is_split,
        "witness": c.witness.as_ref().map(witness_to_json),
    })
}

pub fn pushout_to_json(p: &PushoutResult, legs: &LegCheck) -> Value {
    json!({
        "kind": "pushout",
        "apex": module_to_json(&p.apex),
        "leg1": hom_to_json(p.leg1()),
        "leg2": hom_to_json(p.leg2()),
        "mode": legs.mode.name(),
        "leg1_embedding": legs.leg1,
        "leg2_embedding": legs.leg2,
        "preserved": legs.preserved(),
    })
}

pub fn square_to_json(sq: &IndependenceSquare) -> Value {
    json!({
        "kind": "independence",
        "mode": sq.mode.name(),
        "verdict": sq.verdict,
        "maps_ok": sq.maps_ok.to_vec(),
        "corner_ok": sq.corner_ok,
        "corner": hom_to_json(&sq.corner),
    })
}

pub fn base_to_json(m0: &Submodule, m1: &Submodule) -> Value {
    json!({ "kind": "independence-base", "base": submodule_to_json(m0), "left": submodule_to_json(m1) })
}

pub fn chain_to_json(c: &Chain) -> Value {
    let subs = |v: &[Submodule]| Value::Array(v.iter().map(|s| vectors(&s.generators())).collect());
    json!({
        "kind": "chain",
        "mode": c.mode.name(),
        "length": int(c.len() as i64),
        "source": module_to_json(c.f.source()),
        "target": module_to_json(c.f.target()),
        "a": subs(&c.a),
        "b": subs(&c.b),
        "image": subs(&c.image),
    })
}

pub fn injectivity_to_json(r: &InjectivityReport) -> Value {
    json!({
        "kind": "injectivity",
        "label": format!("verdict-injective at bound {}", r.bound),
        "mode": r.mode.name(),
        "bound": int(r.bound as i64),
        "verdict": r.verdict,
        "checked": int(r.checked as i64),
        "counterexample": r.counterexample.as_ref().map(|c| json!({ "f": hom_to_json(&c.f), "g": hom_to_json(&c.g) })),
    })
}

pub fn baer_to_json(r: &BaerReport) -> Value {
    json!({
        "kind": "baer",
        "pass": r.pass,
        "ideals": int(r.ideals as i64),
        "ideal": r.ideal.as_ref().map(|i| vectors(&i.generators())),
        "g": r.g.as_ref().map(hom_to_json),
    })
}

pub fn sigma_to_json(r: &SigmaReport) -> Value {
    json!({
        "kind": "sigma",
        "powers": Value::Array(r.powers.iter().map(|(n, ok)| json!({ "n": int(*n as i64), "verdict": ok })).collect()),
        "first_failure": r.first_failure.map(|n| int(n as i64)),
    })
}

fn index_lists(v: &[Vec<usize>]) -> Value {
    Value::Array(v.iter().map(|t| Value::Array(t.iter().map(|&i| int(i as i64)).collect())).collect())
}

pub fn noetherian_to_json(r: &NoetherianReport) -> Value {
    json!({
        "kind": "noetherian",
        "closed": r.closed(),
        "injectives": Value::Array(r.injectives.iter().map(|&i| int(i as i64)).collect()),
        "sums_checked": int(r.sums_checked as i64),
        "sum_violations": index_lists(&r.sum_violations),
        "chains_checked": int(r.chains_checked as i64),
        "chain_violations": index_lists(&r.chain_violations),
        "csb_checked": int(r.csb_checked as i64),
        "csb_violations": index_lists(&r.csb_violations.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>()),
    })
}

pub fn audit_to_json(r: &ClosureReport) -> Value {
    json!({
        "kind": "audit",
        "closed": r.closed(),
        "members": int(r.members as i64),
        "checked": int(r.checked as i64),
        "violations": Value::Array(
            r.violations
                .iter()
                .map(|v| json!({
                    "operation": format!("{:?}", v.kind).to_lowercase(),
                    "from": Value::Array(v.from.iter().map(|&i| int(i as i64)).collect()),
                    "witness": module_to_json(&v.witness),
                }))
                .collect()
        ),
    })
}

pub fn suite_report_to_json(r: &SuiteReport) -> Value {
    let mut counters = Map::new();
    for (k, v) in &r.counters {
        counters.insert(k.clone(), int(*v as i64));
    }
    json!({
        "kind": "suite",
        "name": r.name,
        "pass": r.passed(),
        "rings": r.rings,
        "bound": r.bound.map(|b| int(b as i64)),
        "checks": int(r.checks as i64),
        "violations": int(r.violations as i64),
        "counters": Value::Object(counters),
        "first_counterexample": r.first_counterexample,
        "notes": r.notes,
    })
}

pub fn error_to_json(e: &Error) -> Value {
    json!({ "kind": "error", "error": e.kind(), "message": e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::enumerate_modules;

    #[test]
    fn integers_are_strings_and_numbers_are_accepted() {
        let r = Ring::zmod(4).unwrap();
        let v = ring_to_json(&r);
        assert_eq!(v["orders"], json!(["4"]));
        let plain = json!({ "orders": [4], "struct": [[[1]]], "unit": [1] });
        assert_eq!(ring_from_json(&plain).unwrap(), r);
    }

    #[test]
    fn field_order_is_fixed() {
        let m = Module::regular(&Ring::zmod(2).unwrap());
        let text = render(&module_to_json(&m));
        let (a, b, c) = (text.find("\"ring\"").unwrap(), text.find("\"orders\":").unwrap(), text.find("\"actions\"").unwrap());
        assert!(a < b && b < c);
    }

    #[test]
    fn noncanonical_presentations_are_normalized() {
        // Z/2 + Z/4 over Z/4 given with the generators swapped
        let z4 = json!({ "orders": [4], "struct": [[[1]]], "unit": [1] });
        let m = json!({ "ring": z4, "orders": [4, 2], "actions": [[[1, 0], [0, 1]]] });
        let m = module_from_json(&m).unwrap();
        assert_eq!(m.orders(), &[2, 4]);
        // the map Z/4 -> Z/4 + Z/2 sending 1 to (1, 1)
        let h = json!({
            "source": { "ring": z4, "orders": [4], "actions": [[[1]]] },
            "target": { "ring": z4, "orders": [4, 2], "actions": [[[1, 0], [0, 1]]] },
            "matrix": [[1], [1]],
        });
        let h = hom_from_json(&h).unwrap();
        assert!(h.is_injective());
        let onto = json!({
            "source": { "ring": z4, "orders": [4], "actions": [[[1]]] },
            "target": { "ring": z4, "orders": [2], "actions": [[[1]]] },
            "matrix": [[1]],
        });
        assert!(hom_from_json(&onto).unwrap().is_surjective());
        let ill = json!({
            "source": { "ring": z4, "orders": [2], "actions": [[[1]]] },
            "target": { "ring": z4, "orders": [4], "actions": [[[1]]] },
            "matrix": [[1]],
        });
        assert!(matches!(hom_from_json(&ill), Err(Error::NotWellDefined(_))));
    }

    #[test]
    fn round_trips() {
        for name in ["z4", "f2xy"] {
            let r = ring_by_name(name).unwrap();
            assert_eq!(ring_from_json(&ring_to_json(&r)).unwrap(), r);
            for m in enumerate_modules(&r, 8).unwrap() {
                let back = module_from_json(&module_to_json(&m)).unwrap();
                assert_eq!(back, m);
                for h in crate::hom::HomGroup::new(&m, &m).unwrap().elements() {
                    assert_eq!(hom_from_json(&hom_to_json(&h)).unwrap(), h);
                }
            }
        }
    }
}

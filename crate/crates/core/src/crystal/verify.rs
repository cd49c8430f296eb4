use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::weight::Weight;

use super::CrystalModel;

pub const DEFAULT_VIOLATION_LIMIT: usize = 100;

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Which property failed, e.g. `"i"`, `"ii"`, `"closure"`, `"intertwine-f"`.
    pub axiom: String,
    pub keys: Vec<String>,
    pub i: Option<usize>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of an axiom or isomorphism check; `pass` iff no violations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub pass: bool,
    /// Element-label pairs examined.
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Set when violations beyond the cap were dropped.
    pub truncated: bool,
    pub notes: Vec<String>,
}

pub type AxiomReport = Report;
pub type IsoReport = Report;

struct Collector {
    limit: usize,
    violations: Vec<Violation>,
    truncated: bool,
}

impl Collector {
    fn new(limit: usize) -> Self {
        Collector {
            limit,
            violations: Vec::new(),
            truncated: false,
        }
    }

    fn push(
        &mut self,
        axiom: &str,
        keys: Vec<String>,
        i: Option<usize>,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        if self.violations.len() >= self.limit {
            self.truncated = true;
            return;
        }
        self.violations.push(Violation {
            axiom: axiom.to_string(),
            keys,
            i,
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn check<T: PartialEq + std::fmt::Debug>(
        &mut self,
        axiom: &str,
        keys: &[&str],
        i: usize,
        expected: T,
        actual: T,
    ) {
        if expected != actual {
            self.push(
                axiom,
                keys.iter().map(|k| k.to_string()).collect(),
                Some(i),
                format!("{expected:?}"),
                format!("{actual:?}"),
            );
        }
    }

    fn finish(self, checked: usize, notes: Vec<String>) -> Report {
        Report {
            pass: self.violations.is_empty(),
            checked,
            violations: self.violations,
            truncated: self.truncated,
            notes,
        }
    }
}

/// Checks the crystal axioms on `elements` with the default violation cap.
pub fn verify_axioms<M: CrystalModel>(model: &M, elements: &[M::Element]) -> AxiomReport {
    verify_axioms_capped(model, elements, DEFAULT_VIOLATION_LIMIT)
}

/// For every element `b` and label `i`:
///
/// * `f_i(b)` stays in the set (`closure`) and `e_i(f_i(b)) = b`, with the
///   weight dropping by `alpha_i`, `epsilon_i` rising by one and `phi_i`
///   falling by one (`i`); likewise `f_i(e_i(b)) = b` (`i-converse`);
/// * `phi_i(b) = epsilon_i(b) + <wt(b), alpha_i^vee>` (`ii`);
/// * `f_i(b)` is zero exactly when `phi_i(b) = 0`, and `e_i(b)` exactly when
///   `epsilon_i(b) = 0` (`seminormal`).
///
/// All violations are collected up to `limit`.
pub fn verify_axioms_capped<M: CrystalModel>(
    model: &M,
    elements: &[M::Element],
    limit: usize,
) -> AxiomReport {
    let mut c = Collector::new(limit);
    let n = model.rank();
    let keys: HashSet<String> = elements.iter().map(|b| model.canonical_key(b)).collect();
    let mut checked = 0;
    for b in elements {
        let key = model.canonical_key(b);
        let wt = model.weight(b);
        if wt.rank() != n {
            c.push(
                "weight",
                vec![key.clone()],
                None,
                format!("rank {n}"),
                format!("rank {}", wt.rank()),
            );
        }
        for i in model.labels() {
            checked += 1;
            let (phi, eps) = match (model.phi(b, i), model.epsilon(b, i)) {
                (Ok(p), Ok(e)) => (p, e),
                (Err(err), _) | (_, Err(err)) => {
                    c.push("eval", vec![key.clone()], Some(i), "string lengths", err);
                    continue;
                }
            };
            match wt.coroot_pairing(i) {
                Ok(pairing) => c.check("ii", &[&key], i, phi, eps + pairing),
                Err(err) => c.push("ii", vec![key.clone()], Some(i), "pairing", err),
            }

            match model.lower(b, i) {
                Err(err) => c.push(
                    "closure",
                    vec![key.clone()],
                    Some(i),
                    "f_i(b) in the crystal",
                    err,
                ),
                Ok(None) => c.check("seminormal", &[&key], i, 0, phi),
                Ok(Some(lowered)) => {
                    let lkey = model.canonical_key(&lowered);
                    if phi == 0 {
                        c.push(
                            "seminormal",
                            vec![key.clone(), lkey.clone()],
                            Some(i),
                            "f_i(b) = 0",
                            "nonzero",
                        );
                    }
                    if !keys.contains(&lkey) {
                        c.push(
                            "closure",
                            vec![key.clone(), lkey.clone()],
                            Some(i),
                            "element of the set",
                            "escapes",
                        );
                    }
                    match model.raise(&lowered, i) {
                        Ok(back) => c.check(
                            "i",
                            &[&key, &lkey],
                            i,
                            Some(key.clone()),
                            back.map(|x| model.canonical_key(&x)),
                        ),
                        Err(err) => c.push(
                            "i",
                            vec![key.clone(), lkey.clone()],
                            Some(i),
                            "e_i(f_i(b)) = b",
                            err,
                        ),
                    }
                    match Weight::simple_root(n, i) {
                        Ok(root) => {
                            c.check("i", &[&key, &lkey], i, &wt - &root, model.weight(&lowered))
                        }
                        Err(err) => c.push("i", vec![key.clone()], Some(i), "simple root", err),
                    }
                    match (model.phi(&lowered, i), model.epsilon(&lowered, i)) {
                        (Ok(p2), Ok(e2)) => {
                            c.check("i", &[&key, &lkey], i, eps + 1, e2);
                            c.check("i", &[&key, &lkey], i, phi - 1, p2);
                        }
                        (Err(err), _) | (_, Err(err)) => {
                            c.push("eval", vec![lkey.clone()], Some(i), "string lengths", err)
                        }
                    }
                }
            }

            match model.raise(b, i) {
                Err(err) => c.push(
                    "closure",
                    vec![key.clone()],
                    Some(i),
                    "e_i(b) in the crystal",
                    err,
                ),
                Ok(None) => c.check("seminormal", &[&key], i, 0, eps),
                Ok(Some(raised)) => {
                    let rkey = model.canonical_key(&raised);
                    if eps == 0 {
                        c.push(
                            "seminormal",
                            vec![key.clone(), rkey.clone()],
                            Some(i),
                            "e_i(b) = 0",
                            "nonzero",
                        );
                    }
                    if !keys.contains(&rkey) {
                        c.push(
                            "closure",
                            vec![key.clone(), rkey.clone()],
                            Some(i),
                            "element of the set",
                            "escapes",
                        );
                    }
                    match model.lower(&raised, i) {
                        Ok(back) => c.check(
                            "i-converse",
                            &[&key, &rkey],
                            i,
                            Some(key.clone()),
                            back.map(|x| model.canonical_key(&x)),
                        ),
                        Err(err) => c.push(
                            "i-converse",
                            vec![key.clone(), rkey],
                            Some(i),
                            "f_i(e_i(b)) = b",
                            err,
                        ),
                    }
                }
            }
        }
    }
    let notes = vec!["axiom iii holds vacuously: string lengths are never -infinity".to_string()];
    c.finish(checked, notes)
}

/// Checks that `map` is a crystal isomorphism from `elements_a` onto
/// `elements_b`, with the default violation cap.
pub fn verify_isomorphism<A, B, F>(
    model_a: &A,
    elements_a: &[A::Element],
    model_b: &B,
    elements_b: &[B::Element],
    map: F,
) -> IsoReport
where
    A: CrystalModel,
    B: CrystalModel,
    F: Fn(&A::Element) -> Result<B::Element>,
{
    verify_isomorphism_capped(
        model_a,
        elements_a,
        model_b,
        elements_b,
        map,
        DEFAULT_VIOLATION_LIMIT,
    )
}

/// Bijectivity onto `elements_b`, preservation of weight, `phi_i` and
/// `epsilon_i`, and `map(f_i b) = f_i(map b)`, `map(e_i b) = e_i(map b)`
/// with zero matched to zero.
pub fn verify_isomorphism_capped<A, B, F>(
    model_a: &A,
    elements_a: &[A::Element],
    model_b: &B,
    elements_b: &[B::Element],
    map: F,
    limit: usize,
) -> IsoReport
where
    A: CrystalModel,
    B: CrystalModel,
    F: Fn(&A::Element) -> Result<B::Element>,
{
    let mut c = Collector::new(limit);
    if model_a.rank() != model_b.rank() {
        c.push("rank", vec![], None, model_a.rank(), model_b.rank());
        return c.finish(0, vec![]);
    }
    let b_keys: HashSet<String> = elements_b
        .iter()
        .map(|b| model_b.canonical_key(b))
        .collect();
    let mut image: HashMap<String, String> = HashMap::new();
    let mut checked = 0;

    let map_key = |x: &A::Element| -> std::result::Result<String, String> {
        map(x)
            .map(|y| model_b.canonical_key(&y))
            .map_err(|e| e.to_string())
    };

    for a in elements_a {
        let akey = model_a.canonical_key(a);
        let b = match map(a) {
            Ok(b) => b,
            Err(err) => {
                c.push("map", vec![akey], None, "image", err);
                continue;
            }
        };
        let bkey = model_b.canonical_key(&b);
        if !b_keys.contains(&bkey) {
            c.push(
                "onto",
                vec![akey.clone(), bkey.clone()],
                None,
                "image inside the target set",
                "outside",
            );
        }
        if let Some(prev) = image.insert(bkey.clone(), akey.clone()) {
            c.push(
                "injective",
                vec![prev, akey.clone()],
                None,
                "distinct images",
                bkey.clone(),
            );
        }
        let keys = [akey.as_str(), bkey.as_str()];
        if model_a.weight(a) != model_b.weight(&b) {
            c.push(
                "weight",
                vec![akey.clone(), bkey.clone()],
                None,
                model_a.weight(a),
                model_b.weight(&b),
            );
        }
        for i in model_a.labels() {
            checked += 1;
            c.check(
                "phi",
                &keys,
                i,
                model_a.phi(a, i).ok(),
                model_b.phi(&b, i).ok(),
            );
            c.check(
                "epsilon",
                &keys,
                i,
                model_a.epsilon(a, i).ok(),
                model_b.epsilon(&b, i).ok(),
            );

            let via_a = model_a
                .lower(a, i)
                .map_err(|e| e.to_string())
                .and_then(|x| x.as_ref().map(&map_key).transpose());
            let via_b = model_b
                .lower(&b, i)
                .map(|y| y.map(|y| model_b.canonical_key(&y)))
                .map_err(|e| e.to_string());
            c.check("intertwine-f", &keys, i, via_a, via_b);

            let via_a = model_a
                .raise(a, i)
                .map_err(|e| e.to_string())
                .and_then(|x| x.as_ref().map(&map_key).transpose());
            let via_b = model_b
                .raise(&b, i)
                .map(|y| y.map(|y| model_b.canonical_key(&y)))
                .map_err(|e| e.to_string());
            c.check("intertwine-e", &keys, i, via_a, via_b);
        }
    }
    if image.len() != b_keys.len() {
        c.push(
            "onto",
            vec![],
            None,
            format!("{} images", b_keys.len()),
            format!("{} images", image.len()),
        );
    }
    c.finish(checked, vec![])
}

/// Elements with `epsilon_i = 0` for every label, sorted by canonical key.
pub fn highest_weight_elements<M: CrystalModel>(
    model: &M,
    elements: &[M::Element],
) -> Result<Vec<M::Element>> {
    let mut out = Vec::new();
    for b in elements {
        let mut top = true;
        for i in model.labels() {
            if model.epsilon(b, i)? != 0 {
                top = false;
                break;
            }
        }
        if top {
            out.push(b.clone());
        }
    }
    out.sort_by_cached_key(|b| model.canonical_key(b));
    Ok(out)
}

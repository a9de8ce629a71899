//! Tate's algorithm against a battery of curves whose reduction data was
//! computed independently (PARI/GP `elllocalred`).

use minmodels::arith::int;
use minmodels::equations::{apply, GenusOneEquation};
use minmodels::fiberdata::fiber;
use minmodels::localred::{ord_p, tate};
use serde::Deserialize;

#[derive(Deserialize)]
struct Case {
    curve: [i64; 5],
    p: i64,
    kodaira: String,
    cp: u32,
    #[serde(rename = "vDeltaMin")]
    v_delta_min: u32,
}

fn battery() -> Vec<Case> {
    serde_json::from_str(include_str!("fixtures/kodaira_battery.json")).unwrap()
}

#[test]
fn matches_reference_reduction_data() {
    for c in battery() {
        let e = GenusOneEquation::from_ints(1, &c.curve).unwrap();
        let d = tate(&e, &int(c.p)).unwrap();
        let label = format!("{:?} at {}", c.curve, c.p);
        assert_eq!(d.kodaira.to_string(), c.kodaira, "{label}");
        assert_eq!(d.cp, c.cp, "{label}");
        assert_eq!(d.v_delta_min, c.v_delta_min, "{label}");
    }
}

#[test]
fn minimal_model_is_reached_by_to_minimal() {
    for c in battery() {
        let e = GenusOneEquation::from_ints(1, &c.curve).unwrap();
        let p = int(c.p);
        let d = tate(&e, &p).unwrap();
        assert_eq!(apply(&d.to_minimal, &e).unwrap(), d.minimal_model);
        assert!(d.minimal_model.is_integral());
        assert_eq!(ord_p(&d.minimal_model.invariants().delta, &p), d.v_delta_min as i64);
    }
}

#[test]
fn tame_valuations_and_tamagawa_numbers_agree_with_fibers() {
    let mut kinds = std::collections::HashSet::new();
    for c in battery().into_iter().filter(|c| c.p >= 5) {
        let e = GenusOneEquation::from_ints(1, &c.curve).unwrap();
        let d = tate(&e, &int(c.p)).unwrap();
        assert_eq!(d.v_delta_min, d.kodaira.tame_valuation(), "{:?}", c.curve);
        let f = fiber(d.kodaira, d.cp, false).unwrap();
        assert_eq!(f.fixed_simple_components(), d.cp as usize);
        kinds.insert(std::mem::discriminant(&d.kodaira));
    }
    assert_eq!(kinds.len(), 8);
}

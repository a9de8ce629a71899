//! The δ values stored in the fibre data against a hand-transcribed table.

use std::collections::BTreeMap;

use minmodels::fiberdata::{fiber, KodairaType, SpecialFiber};
use serde::Deserialize;

#[derive(Deserialize)]
struct Parity {
    odd_l: String,
    even_l: String,
}

#[derive(Deserialize)]
struct Istar {
    odd_n: Parity,
    even_n: Parity,
}

#[derive(Deserialize)]
struct Star {
    cp: u32,
    delta: BTreeMap<String, String>,
}

#[derive(Deserialize)]
struct Golden {
    istar: Istar,
    #[serde(rename = "IV*")]
    iv_star: Star,
    #[serde(rename = "III*")]
    iii_star: Star,
    #[serde(rename = "II*")]
    ii_star: Star,
}

fn golden() -> Golden {
    serde_json::from_str(include_str!("fixtures/delta_tables.json")).unwrap()
}

/// Every multiplicity-2+ component of `f`, as `id -> δ`.
fn higher(f: &SpecialFiber) -> BTreeMap<String, String> {
    f.components.iter().filter(|c| c.multiplicity >= 2).map(|c| (c.id.clone(), c.delta.to_string())).collect()
}

#[test]
fn istar_chain_matches_parity_table() {
    let g = golden();
    for n in 0..=12u32 {
        let row = if n % 2 == 1 { &g.istar.odd_n } else { &g.istar.even_n };
        let f = fiber(KodairaType::Istar(n), 4, false).unwrap();
        let got = higher(&f);
        assert_eq!(got.len(), n as usize + 1, "I{n}*");
        for l in -1..n as i64 {
            let want = if l.rem_euclid(2) == 1 { &row.odd_l } else { &row.even_l };
            assert_eq!(&got[&format!("V{l}")], want, "I{n}* V{l}");
        }
    }
}

#[test]
fn exceptional_types_match_table() {
    let g = golden();
    for (k, star) in [(KodairaType::IVstar, &g.iv_star), (KodairaType::IIIstar, &g.iii_star), (KodairaType::IIstar, &g.ii_star)] {
        let f = fiber(k, star.cp, false).unwrap();
        assert_eq!(higher(&f), star.delta, "{k}");
    }
}

#[test]
fn non_split_variants_keep_the_split_values() {
    let g = golden();
    assert_eq!(higher(&fiber(KodairaType::IVstar, 1, false).unwrap()), g.iv_star.delta);
    for n in 0..=6u32 {
        let split = higher(&fiber(KodairaType::Istar(n), 4, false).unwrap());
        assert_eq!(higher(&fiber(KodairaType::Istar(n), 2, false).unwrap()), split);
    }
}

//! Local counts of minimal degree-n models.
//!
//! Minimal degree-n models for `E -> P^{n-1}` given by `[(n-1).0_E + P]`
//! correspond to unordered tuples of components of the special fibre whose
//! multiplicities add up to `n`, whose δ values add up to `ψ_E(P)`, and which
//! Frobenius maps to themselves. [`enumerate`] counts these tuples directly;
//! [`table1`] evaluates the closed forms of the published table. The
//! enumerator is the reference.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::int;
use crate::equations::GenusOneEquation;
use crate::error::{Error, Result};
use crate::fiberdata::{fiber, SpecialFiber};
use crate::localred::{self, parse_point, KodairaType, PhiElement, PhiGroup, Point, ReductionData};

#[derive(Debug, Clone)]
pub struct CountingProblem {
    pub fiber: SpecialFiber,
    pub n: u8,
    pub psi: PhiElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountBreakdown {
    pub total: u64,
    #[serde(rename = "perShape")]
    pub per_shape: BTreeMap<String, u64>,
}

/// Partitions of `n` written with parts in decreasing order, e.g. `"2+1+1"`.
pub fn shapes(n: u8) -> Vec<String> {
    fn go(n: u8, max: u8, prefix: &mut Vec<u8>, out: &mut Vec<String>) {
        if n == 0 {
            out.push(prefix.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+"));
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn check_degree(n: u8) -> Result<()> {
    if (2..=4).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree(n))
    }
}

fn check_psi(f: &SpecialFiber, psi: PhiElement) -> Result<()> {
    if !f.phi.contains(psi) {
        return Err(Error::PsiNotInGroup(psi.to_string()));
    }
    if f.phi_action.apply(f.phi, psi) != psi {
        return Err(Error::PsiNotFixed(psi.to_string()));
    }
    Ok(())
}

fn empty_breakdown(n: u8) -> CountBreakdown {
    CountBreakdown { total: 0, per_shape: shapes(n).into_iter().map(|s| (s, 0)).collect() }
}

/// Counts of Frobenius-stable tuples for every value of `ψ` at once.
pub fn enumerate_by_psi(f: &SpecialFiber, n: u8) -> Result<BTreeMap<PhiElement, CountBreakdown>> {
    check_degree(n)?;
    let mut out: BTreeMap<PhiElement, CountBreakdown> =
        f.fixed_elements().into_iter().map(|e| (e, empty_breakdown(n))).collect();
    // Components sorted by index; tuples are non-decreasing index sequences.
    let usable: Vec<usize> = (0..f.components.len()).filter(|&i| f.components[i].multiplicity <= n as u32).collect();
    let mut tuple = Vec::with_capacity(n as usize);
    visit(f, &usable, 0, n as u32, &mut tuple, &mut out);
    Ok(out)
}

fn visit(
    f: &SpecialFiber,
    usable: &[usize],
    start: usize,
    remaining: u32,
    tuple: &mut Vec<usize>,
    out: &mut BTreeMap<PhiElement, CountBreakdown>,
) {
    if remaining == 0 {
        let mut image: Vec<usize> = tuple.iter().map(|&i| f.galois[i]).collect();
        image.sort_unstable();
        if image != *tuple {
            return;
        }
        let sum = tuple.iter().fold(f.phi.identity(), |acc, &i| f.phi.add(acc, f.components[i].delta));
        let mut parts: Vec<u32> = tuple.iter().map(|&i| f.components[i].multiplicity).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let shape = parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+");
        if let Some(b) = out.get_mut(&sum) {
            b.total += 1;
            *b.per_shape.get_mut(&shape).expect("shape of n") += 1;
        }
        return;
    }
    for k in start..usable.len() {
        let i = usable[k];
        let m = f.components[i].multiplicity;
        if m <= remaining {
            tuple.push(i);
            visit(f, usable, k, remaining - m, tuple, out);
            tuple.pop();
        }
    }
}

pub fn enumerate(problem: &CountingProblem) -> Result<CountBreakdown> {
    check_degree(problem.n)?;
    check_psi(&problem.fiber, problem.psi)?;
    let mut all = enumerate_by_psi(&problem.fiber, problem.n)?;
    Ok(all.remove(&problem.psi).expect("fixed element"))
}

/// A row of the published table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    /// `I_{2m}`, `c_p = 2`.
    I2mNonsplit,
    /// `I_{2m}`, `c_p = 2m`.
    I2mSplit,
    /// `I_{2m+1}`, `c_p = 1`.
    I2m1Nonsplit,
    /// `I_{2m+1}`, `c_p = 2m+1`.
    I2m1Split,
    II,
    III,
    IVc1,
    IVc3,
    I0starC1,
    /// `I_{2m}^*`, `c_p = 2`.
    Is2mC2,
    /// `I_{2m}^*`, `c_p = 4`.
    Is2mC4,
    /// `I_{2m+1}^*`, `c_p = 2`.
    Is2m1C2,
    /// `I_{2m+1}^*`, `c_p = 4`.
    Is2m1C4,
    IVstarC1,
    IVstarC3,
    IIIstar,
    IIstar,
}

impl Row {
    pub const ALL: [Row; 17] = [
        Row::I2mNonsplit,
        Row::I2mSplit,
        Row::I2m1Nonsplit,
        Row::I2m1Split,
        Row::II,
        Row::III,
        Row::IVc1,
        Row::IVc3,
        Row::I0starC1,
        Row::Is2mC2,
        Row::Is2mC4,
        Row::Is2m1C2,
        Row::Is2m1C4,
        Row::IVstarC1,
        Row::IVstarC3,
        Row::IIIstar,
        Row::IIstar,
    ];

    /// Whether the row depends on the parameter `m`.
    pub fn has_m(self) -> bool {
        matches!(
            self,
            Row::I2mNonsplit
                | Row::I2mSplit
                | Row::I2m1Nonsplit
                | Row::I2m1Split
                | Row::Is2mC2
                | Row::Is2mC4
                | Row::Is2m1C2
                | Row::Is2m1C4
        )
    }

    /// Type and `c_p` columns as printed.
    pub fn labels(self) -> (&'static str, &'static str) {
        match self {
            Row::I2mNonsplit => ("I2m", "2"),
            Row::I2mSplit => ("I2m", "2m"),
            Row::I2m1Nonsplit => ("I2m+1", "1"),
            Row::I2m1Split => ("I2m+1", "2m+1"),
            Row::II => ("II", "1"),
            Row::III => ("III", "1"),
            Row::IVc1 => ("IV", "1"),
            Row::IVc3 => ("IV", "3"),
            Row::I0starC1 => ("I0*", "1"),
            Row::Is2mC2 => ("I2m*", "2"),
            Row::Is2mC4 => ("I2m*", "4"),
            Row::Is2m1C2 => ("I2m+1*", "2"),
            Row::Is2m1C4 => ("I2m+1*", "4"),
            Row::IVstarC1 => ("IV*", "1"),
            Row::IVstarC3 => ("IV*", "3"),
            Row::IIIstar => ("III*", "2"),
            Row::IIstar => ("II*", "1"),
        }
    }

    /// The fibre the row describes at parameter `m`. At `m = 0` the `I_{2m}`
    /// rows describe good reduction.
    pub fn fiber(self, m: u32) -> SpecialFiber {
        let f = match self {
            Row::I2mNonsplit if m == 0 => fiber(KodairaType::I(0), 1, false),
            Row::I2mSplit if m == 0 => fiber(KodairaType::I(0), 1, false),
            Row::I2mNonsplit => fiber(KodairaType::I(2 * m), 2, false),
            Row::I2mSplit => fiber(KodairaType::I(2 * m), 2 * m, false),
            Row::I2m1Nonsplit => fiber(KodairaType::I(2 * m + 1), 1, false),
            Row::I2m1Split => fiber(KodairaType::I(2 * m + 1), 2 * m + 1, false),
            Row::II => fiber(KodairaType::II, 1, false),
            // The printed c_p = 1 cannot occur; the values match the trivial action.
            Row::III => fiber(KodairaType::III, 2, false),
            Row::IVc1 => fiber(KodairaType::IV, 1, false),
            Row::IVc3 => fiber(KodairaType::IV, 3, false),
            Row::I0starC1 => fiber(KodairaType::Istar(0), 1, false),
            Row::Is2mC2 => fiber(KodairaType::Istar(2 * m), 2, false),
            Row::Is2mC4 => fiber(KodairaType::Istar(2 * m), 4, false),
            Row::Is2m1C2 => fiber(KodairaType::Istar(2 * m + 1), 2, false),
            Row::Is2m1C4 => fiber(KodairaType::Istar(2 * m + 1), 4, false),
            Row::IVstarC1 => fiber(KodairaType::IVstar, 1, false),
            Row::IVstarC3 => fiber(KodairaType::IVstar, 3, false),
            Row::IIIstar => fiber(KodairaType::IIIstar, 2, false),
            Row::IIstar => fiber(KodairaType::IIstar, 1, false),
        };
        f.expect("every row has a fibre")
    }

    /// The closed form of the row for degree `n` and `ψ`.
    pub fn evaluate(self, m: u64, n: u8, psi: PhiElement) -> u64 {
        let cyc = match psi {
            PhiElement::Cyclic(i) => i as u64,
            PhiElement::Klein(..) => 0,
        };
        let zero = matches!(psi, PhiElement::Cyclic(0) | PhiElement::Klein(0, 0));
        let pick = |a: u64, b: u64, c: u64| match n {
            2 => a,
            3 => b,
            _ => c,
        };
        match self {
            Row::I2mNonsplit => match n {
                2 => if zero { m + 1 } else { 1 },
                3 => m + 1,
                _ => if zero { (m + 1) * (m + 2) / 2 } else { m + 1 },
            },
            Row::I2mSplit => match n {
                2 => if cyc % 2 == 0 { m + 1 } else { m },
                3 => {
                    if m % 3 != 0 {
                        (m + 1) * (2 * m + 1) / 3
                    } else if cyc % 3 == 0 {
                        m * (2 * m + 3) / 3 + 1
                    } else {
                        m * (2 * m + 3) / 3
                    }
                }
                _ => {
                    let base = m * (m + 1) * (m + 2) / 3;
                    if cyc % 4 == 0 {
                        base + 2
                    } else if cyc % 2 == 0 {
                        base + 1
                    } else {
                        base
                    }
                }
            },
            Row::I2m1Nonsplit => pick(m + 1, m + 1, (m + 1) * (m + 2) / 2),
            Row::I2m1Split => match n {
                2 => m + 1,
                3 => {
                    if (2 * m + 1) % 3 != 0 {
                        (m + 1) * (2 * m + 3) / 3
                    } else if cyc % 3 == 0 {
                        (m + 2) * (2 * m + 1) / 3 + 1
                    } else {
                        (m + 2) * (2 * m + 1) / 3
                    }
                }
                _ => (m + 1) * (m + 2) * (2 * m + 3) / 6,
            },
            Row::II => 1,
            Row::III => match n {
                2 => if zero { 2 } else { 1 },
                3 => 2,
                _ => if zero { 3 } else { 2 },
            },
            Row::IVc1 => pick(2, 2, 3),
            Row::IVc3 => pick(2, if zero { 4 } else { 3 }, 5),
            Row::I0starC1 => pick(2, 3, 4),
            Row::Is2mC2 => match n {
                2 => if zero { m + 3 } else { m + 2 },
                3 => 2 * m + 4,
                _ => if zero { (m + 2) * (m + 4) } else { (m + 2) * (m + 3) },
            },
            Row::Is2mC4 => {
                let near = psi == PhiElement::Klein(1, 1);
                match n {
                    2 => if zero { m + 5 } else if near { m + 2 } else { 2 },
                    3 => 2 * m + 6,
                    _ => if zero { (m + 4) * (m + 4) } else if near { (m + 2) * (m + 5) } else { 4 * m + 10 },
                }
            }
            Row::Is2m1C2 => match n {
                2 => if zero { m + 4 } else { m + 2 },
                3 => 2 * m + 5,
                _ => if zero { (m + 3) * (m + 4) } else { (m + 2) * (m + 4) },
            },
            // The n = 4 cell writes ψ = (0,0) for the identity of Z/4.
            Row::Is2m1C4 => match n {
                2 => if cyc % 2 == 0 { m + 4 } else { 2 },
                3 => 2 * m + 7,
                _ => if cyc == 0 { (m + 3) * (m + 6) } else if cyc == 2 { (m + 4) * (m + 4) } else { 4 * m + 12 },
            },
            Row::IVstarC1 => pick(3, 4, 8),
            Row::IVstarC3 => pick(3, if zero { 8 } else { 6 }, 14),
            Row::IIIstar => pick(if zero { 4 } else { 2 }, 6, if zero { 15 } else { 10 }),
            Row::IIstar => pick(3, 5, 10),
        }
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, c) = self.labels();
        write!(f, "{t} (c_p = {c})")
    }
}

/// The table row and parameter `m` for `(kodaira, c_p)`.
pub fn row_for(kodaira: KodairaType, cp: u32) -> Result<(Row, u32)> {
    let missing = || Error::NotTabulated { kodaira: kodaira.to_string(), cp };
    Ok(match kodaira {
        KodairaType::I(n) if n % 2 == 0 && n > 0 && cp == 2 => (Row::I2mNonsplit, n / 2),
        KodairaType::I(n) if n % 2 == 0 && n > 0 && cp == n => (Row::I2mSplit, n / 2),
        KodairaType::I(n) if n % 2 == 1 && cp == 1 => (Row::I2m1Nonsplit, n / 2),
        KodairaType::I(n) if n % 2 == 1 && cp == n => (Row::I2m1Split, n / 2),
        KodairaType::II if cp == 1 => (Row::II, 0),
        KodairaType::III if cp == 1 || cp == 2 => (Row::III, 0),
        KodairaType::IV if cp == 1 => (Row::IVc1, 0),
        KodairaType::IV if cp == 3 => (Row::IVc3, 0),
        KodairaType::Istar(0) if cp == 1 => (Row::I0starC1, 0),
        KodairaType::Istar(0) => return Err(missing()),
        KodairaType::Istar(n) if n % 2 == 0 && cp == 2 => (Row::Is2mC2, n / 2),
        KodairaType::Istar(n) if n % 2 == 0 && cp == 4 => (Row::Is2mC4, n / 2),
        KodairaType::Istar(n) if n % 2 == 1 && cp == 2 => (Row::Is2m1C2, n / 2),
        KodairaType::Istar(n) if n % 2 == 1 && cp == 4 => (Row::Is2m1C4, n / 2),
        KodairaType::IVstar if cp == 1 => (Row::IVstarC1, 0),
        KodairaType::IVstar if cp == 3 => (Row::IVstarC3, 0),
        KodairaType::IIIstar if cp == 2 => (Row::IIIstar, 0),
        KodairaType::IIstar if cp == 1 => (Row::IIstar, 0),
        _ => return Err(missing()),
    })
}

/// The published closed form for `(kodaira, c_p)`, degree `n` and `ψ`.
/// Good reduction always gives 1.
pub fn table1(kodaira: KodairaType, cp: u32, n: u8, psi: PhiElement) -> Result<u64> {
    check_degree(n)?;
    if kodaira == KodairaType::I(0) {
        if psi != PhiElement::Cyclic(0) {
            return Err(Error::PsiNotInGroup(psi.to_string()));
        }
        return Ok(1);
    }
    let (row, m) = row_for(kodaira, cp)?;
    check_psi(&row.fiber(m), psi)?;
    Ok(row.evaluate(m as u64, n, psi))
}

/// One cell of the comparison between the enumerator and the table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCell {
    pub row: Row,
    pub m: Option<u32>,
    pub n: u8,
    pub psi: PhiElement,
    pub enumerated: u64,
    pub tabulated: u64,
}

impl SweepCell {
    pub fn matches(&self) -> bool {
        self.enumerated == self.tabulated
    }

    pub fn csv(&self) -> String {
        let (t, c) = self.row.labels();
        let m = self.m.map_or("-".to_string(), |m| m.to_string());
        format!(
            "{t},{c},{},{m},\"{}\",{},{},{}",
            self.n,
            self.psi,
            self.enumerated,
            self.tabulated,
            self.matches()
        )
    }
}

pub const SWEEP_HEADER: &str = "type,cp,n,m,psi,enumerate,table1,match";

/// Every row, `m` in `0..=max_m` for the parametrised rows, `n` in 2..=4 and
/// every Frobenius-fixed `ψ`.
pub fn sweep(max_m: u32) -> Vec<SweepCell> {
    let mut out = Vec::new();
    for row in Row::ALL {
        let ms: Vec<Option<u32>> = if row.has_m() { (0..=max_m).map(Some).collect() } else { vec![None] };
        for m in ms {
            let f = row.fiber(m.unwrap_or(0));
            for n in 2..=4u8 {
                let counts = enumerate_by_psi(&f, n).expect("degree in range");
                for (psi, b) in counts {
                    out.push(SweepCell {
                        row,
                        m,
                        n,
                        psi,
                        enumerated: b.total,
                        tabulated: row.evaluate(m.unwrap_or(0) as u64, n, psi),
                    });
                }
            }
        }
    }
    out
}

/// How `ψ_E(P)` is supplied for a local count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PsiInput {
    /// `P = 0_E`, so `ψ = 0`.
    Identity,
    /// An element written as `"i"` or `"a,b"`.
    Text(String),
    Element(PhiElement),
    Point(Point),
}

impl PsiInput {
    /// Parses `"inf"` or `"x,y"` as a point.
    pub fn point(s: &str) -> Result<PsiInput> {
        Ok(PsiInput::Point(parse_point(s)?))
    }
}

fn resolve_psi(e: &GenusOneEquation, p: &BigInt, phi: PhiGroup, input: &PsiInput) -> Result<PhiElement> {
    match input {
        PsiInput::Identity => Ok(phi.identity()),
        PsiInput::Text(s) => phi.parse_element(s),
        PsiInput::Element(x) => {
            if phi.contains(*x) {
                Ok(*x)
            } else {
                Err(Error::PsiNotInGroup(x.to_string()))
            }
        }
        PsiInput::Point(pt) => localred::component_of_point(e, p, pt),
    }
}

/// Local data and count at one prime.
#[derive(Debug, Clone)]
pub struct LocalCount {
    pub reduction: ReductionData,
    pub psi: PhiElement,
    pub breakdown: CountBreakdown,
}

/// Runs Tate's algorithm, builds the fibre, resolves `ψ` and enumerates.
/// Additive reduction is only handled when the residue characteristic is not
/// 2 (and not 3 for n = 3, 4).
pub fn local_count_full(e: &GenusOneEquation, p: &BigInt, n: u8, psi: &PsiInput) -> Result<LocalCount> {
    check_degree(n)?;
    let reduction = localred::tate(e, p)?;
    if reduction.kodaira.is_additive() && (*p == int(2) || (*p == int(3) && n >= 3)) {
        return Err(Error::ResidueCharacteristic { p: p.clone(), n });
    }
    let psi = resolve_psi(e, p, reduction.phi, psi)?;
    let f = fiber(reduction.kodaira, reduction.cp, false)?;
    let breakdown = enumerate(&CountingProblem { fiber: f, n, psi })?;
    Ok(LocalCount { reduction, psi, breakdown })
}

pub fn local_count(e: &GenusOneEquation, p: &BigInt, n: u8, psi: &PsiInput) -> Result<CountBreakdown> {
    local_count_full(e, p, n, psi).map(|c| c.breakdown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{e1, e2};

    fn problem(k: KodairaType, cp: u32, n: u8, psi: PhiElement) -> CountingProblem {
        CountingProblem { fiber: fiber(k, cp, false).unwrap(), n, psi }
    }

    #[test]
    fn shapes_of_small_degrees() {
        assert_eq!(shapes(2), vec!["2", "1+1"]);
        assert_eq!(shapes(4), vec!["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
    }

    #[test]
    fn ii_star_degree_four() {
        let b = enumerate(&problem(KodairaType::IIstar, 1, 4, PhiElement::Cyclic(0))).unwrap();
        assert_eq!(b.total, 10);
        let want: BTreeMap<String, u64> =
            [("1+1+1+1", 1), ("2+1+1", 2), ("2+2", 3), ("3+1", 2), ("4", 2)].map(|(k, v)| (k.to_string(), v)).into();
        assert_eq!(b.per_shape, want);
    }

    #[test]
    fn good_reduction_and_i0_star() {
        let b = enumerate(&problem(KodairaType::I(0), 1, 3, PhiElement::Cyclic(0))).unwrap();
        assert_eq!(b.total, 1);
        let b = enumerate(&problem(KodairaType::Istar(0), 1, 3, PhiElement::Klein(0, 0))).unwrap();
        assert_eq!(b.total, 3);
    }

    #[test]
    fn table_examples() {
        assert_eq!(table1(KodairaType::IIIstar, 2, 3, PhiElement::Cyclic(1)).unwrap(), 6);
        assert_eq!(table1(KodairaType::I(2), 2, 3, PhiElement::Cyclic(1)).unwrap(), 2);
        assert_eq!(table1(KodairaType::I(4), 4, 2, PhiElement::Cyclic(1)).unwrap(), 2);
        assert!(matches!(
            table1(KodairaType::Istar(0), 4, 2, PhiElement::Klein(0, 0)),
            Err(Error::NotTabulated { .. })
        ));
    }

    #[test]
    fn unfixed_psi_is_rejected() {
        let err = enumerate(&problem(KodairaType::I(4), 2, 2, PhiElement::Cyclic(1))).unwrap_err();
        assert_eq!(err, Error::PsiNotFixed("1".into()));
    }

    #[test]
    fn worked_example_local_counts() {
        let b = local_count(&e1(), &int(5), 3, &PsiInput::Identity).unwrap();
        assert_eq!(b.total, 6);
        let b = local_count(&e1(), &int(19), 3, &PsiInput::Identity).unwrap();
        assert_eq!(b.total, 2);
        let b = local_count(&e2(), &int(5), 4, &PsiInput::Identity).unwrap();
        assert_eq!(b.total, 1);
    }

    #[test]
    fn additive_reduction_at_small_primes_is_refused() {
        // y^2 = x^3 + 2 has additive reduction at 2 and 3.
        let e = GenusOneEquation::from_ints(1, &[0, 0, 0, 0, 2]).unwrap();
        for (p, n) in [(2, 2), (3, 3), (3, 4)] {
            let r = local_count(&e, &int(p), n, &PsiInput::Identity);
            assert!(matches!(r, Err(Error::ResidueCharacteristic { .. })), "{p} {n}");
        }
        assert!(local_count(&e, &int(3), 2, &PsiInput::Identity).is_ok());
    }
}

//! Combinatorial models of the special fibre of the minimal proper regular
//! model: components with multiplicities, their δ values in the component
//! group, the intersection graph and the Frobenius action.
//!
//! Multiplicity-1 components carry `δ_1`, the group element they represent.
//! A component of multiplicity `m >= 2` carries `δ_m`, the class of the
//! Galois-orbit sum of a degree-m point reducing to it. The values are those
//! of the split case; non-split variants are obtained by letting Frobenius
//! act through a graph automorphism fixing the identity component.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
pub use crate::localred::{KodairaType, PhiElement, PhiGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub id: String,
    pub multiplicity: u32,
    pub delta: PhiElement,
}

/// The automorphism of `Φ` induced by Frobenius.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiAction {
    Identity,
    /// `x ↦ -x`.
    Negation,
    /// Swaps `(1,0)` and `(0,1)` in the Klein group.
    KleinSwap,
    /// `(1,1) ↦ (1,0) ↦ (0,1) ↦ (1,1)` in the Klein group.
    KleinCycle,
}

impl PhiAction {
    pub fn apply(self, phi: PhiGroup, e: PhiElement) -> PhiElement {
        match (self, e) {
            (PhiAction::Identity, _) => e,
            (PhiAction::Negation, _) => phi.neg(e),
            (PhiAction::KleinSwap, PhiElement::Klein(a, b)) => PhiElement::Klein(b, a),
            (PhiAction::KleinCycle, PhiElement::Klein(1, 1)) => PhiElement::Klein(1, 0),
            (PhiAction::KleinCycle, PhiElement::Klein(1, 0)) => PhiElement::Klein(0, 1),
            (PhiAction::KleinCycle, PhiElement::Klein(0, 1)) => PhiElement::Klein(1, 1),
            (PhiAction::KleinCycle, PhiElement::Klein(..)) => e,
            _ => panic!("{self:?} does not act on {phi:?}"),
        }
    }

    fn name(self) -> &'static str {
        match self {
            PhiAction::Identity => "identity",
            PhiAction::Negation => "negation",
            PhiAction::KleinSwap => "swap",
            PhiAction::KleinCycle => "cycle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialFiber {
    pub kodaira: KodairaType,
    pub cp: u32,
    pub phi: PhiGroup,
    pub components: Vec<Component>,
    /// Frobenius as a permutation of component indices.
    pub galois: Vec<usize>,
    pub phi_action: PhiAction,
    /// Intersection graph; a pair meeting with intersection number k is
    /// listed k times. Empty for the irreducible fibres.
    pub edges: Vec<(usize, usize)>,
}

impl Serialize for SpecialFiber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let ids = |i: usize| self.components[i].id.clone();
        let galois: Vec<(String, String)> = (0..self.components.len()).map(|i| (ids(i), ids(self.galois[i]))).collect();
        let edges: Vec<(String, String)> = self.edges.iter().map(|&(a, b)| (ids(a), ids(b))).collect();
        let mut st = s.serialize_struct("SpecialFiber", 7)?;
        st.serialize_field("kodaira", &self.kodaira)?;
        st.serialize_field("cp", &self.cp)?;
        st.serialize_field("phi", &self.phi)?;
        st.serialize_field("components", &self.components)?;
        st.serialize_field("galois", &galois)?;
        st.serialize_field("phiAction", self.phi_action.name())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl SpecialFiber {
    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    pub fn is_fixed(&self, i: usize) -> bool {
        self.galois[i] == i
    }

    /// Number of Frobenius-fixed multiplicity-1 components; equals `c_p`.
    pub fn fixed_simple_components(&self) -> usize {
        (0..self.components.len()).filter(|&i| self.components[i].multiplicity == 1 && self.is_fixed(i)).count()
    }

    /// Elements of `Φ` fixed by Frobenius.
    pub fn fixed_elements(&self) -> Vec<PhiElement> {
        self.phi.elements().into_iter().filter(|&e| self.phi_action.apply(self.phi, e) == e).collect()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.components.iter().map(|c| c.multiplicity).max().unwrap_or(1)
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m: Vec<u32> = self.components.iter().map(|c| c.multiplicity).collect();
        m.sort_unstable();
        m
    }

    /// Checks the defining invariants: δ_1 is a bijection onto Φ, Frobenius
    /// is a multiplicity-preserving involution-or-cycle that commutes with δ,
    /// the fixed simple components number c_p, and every component of a
    /// reducible fibre satisfies `Σ_neighbours m_j = 2 m_i`.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.components.len();
        let mut simple: Vec<PhiElement> =
            self.components.iter().filter(|c| c.multiplicity == 1).map(|c| c.delta).collect();
        simple.sort();
        let mut all = self.phi.elements();
        all.sort();
        if simple != all {
            return Err("δ_1 is not a bijection onto Φ".into());
        }
        if self.galois.len() != n || self.galois.iter().any(|&j| j >= n) {
            return Err("Frobenius is not a permutation".into());
        }
        let mut seen = vec![false; n];
        for &j in &self.galois {
            if seen[j] {
                return Err("Frobenius is not a permutation".into());
            }
            seen[j] = true;
        }
        for (i, c) in self.components.iter().enumerate() {
            let g = &self.components[self.galois[i]];
            if g.multiplicity != c.multiplicity {
                return Err(format!("Frobenius moves {} to a different multiplicity", c.id));
            }
            if g.delta != self.phi_action.apply(self.phi, c.delta) {
                return Err(format!("Frobenius does not commute with δ at {}", c.id));
            }
            if !self.is_fixed(i) && self.fixed_elements().contains(&c.delta) && c.multiplicity == 1 {
                return Err(format!("{} is moved but its δ is fixed", c.id));
            }
        }
        if self.fixed_simple_components() != self.cp as usize {
            return Err("fixed multiplicity-1 components do not number c_p".into());
        }
        if !self.edges.is_empty() {
            for (i, c) in self.components.iter().enumerate() {
                let around: u32 = self
                    .edges
                    .iter()
                    .filter_map(|&(a, b)| match (a == i, b == i) {
                        (true, false) => Some(self.components[b].multiplicity),
                        (false, true) => Some(self.components[a].multiplicity),
                        _ => None,
                    })
                    .sum();
                if around != 2 * c.multiplicity {
                    return Err(format!("{} is not balanced in the intersection graph", c.id));
                }
            }
        }
        Ok(())
    }

    /// Indices of the neighbours of component `i`.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == i { Some(b) } else if b == i { Some(a) } else { None })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

fn comp(id: impl Into<String>, multiplicity: u32, delta: PhiElement) -> Component {
    Component { id: id.into(), multiplicity, delta }
}

fn inconsistent(kodaira: KodairaType, cp: u32) -> Error {
    Error::InconsistentFiber { kodaira: kodaira.to_string(), cp }
}

/// The special fibre for `(kodaira, c_p)`. With `reversed` the n-gon of
/// `I_n` is numbered the other way round (`δ_1(C_i) = -i`); other types
/// ignore it.
pub fn fiber(kodaira: KodairaType, cp: u32, reversed: bool) -> Result<SpecialFiber> {
    let phi = kodaira.phi_group();
    let c = PhiElement::Cyclic;
    let trivial = |k: usize| (0..k).collect::<Vec<_>>();
    let (components, galois, phi_action, edges) = match kodaira {
        KodairaType::I(n) => {
            let order = n.max(1);
            let split = cp == order;
            let nonsplit = cp == if n % 2 == 0 { 2 } else { 1 } && n >= 1;
            if !split && !nonsplit {
                return Err(inconsistent(kodaira, cp));
            }
            let comps: Vec<Component> = (0..order)
                .map(|i| {
                    let d = if reversed { (order - i) % order } else { i };
                    comp(format!("C{i}"), 1, c(d))
                })
                .collect();
            let (galois, action) = if split {
                (trivial(order as usize), PhiAction::Identity)
            } else {
                ((0..order).map(|i| ((order - i) % order) as usize).collect(), PhiAction::Negation)
            };
            let edges = if n >= 2 {
                (0..n as usize).map(|i| (i, (i + 1) % n as usize)).collect()
            } else {
                Vec::new()
            };
            (comps, galois, action, edges)
        }
        KodairaType::Istar(n) => istar(n, cp)?,
        KodairaType::II => {
            if cp != 1 {
                return Err(inconsistent(kodaira, cp));
            }
            (vec![comp("Gamma0", 1, c(0))], vec![0], PhiAction::Identity, Vec::new())
        }
        KodairaType::III => {
            // Frobenius fixes the identity component, so it fixes the other
            // one too: c_p = 1 cannot occur.
            if cp != 2 {
                return Err(inconsistent(kodaira, cp));
            }
            let comps = vec![comp("Gamma0", 1, c(0)), comp("Gamma1", 1, c(1))];
            (comps, vec![0, 1], PhiAction::Identity, vec![(0, 1), (0, 1)])
        }
        KodairaType::IV => {
            let (galois, action) = match cp {
                3 => (vec![0, 1, 2], PhiAction::Identity),
                1 => (vec![0, 2, 1], PhiAction::Negation),
                _ => return Err(inconsistent(kodaira, cp)),
            };
            let comps = vec![comp("Gamma0", 1, c(0)), comp("Gamma1", 1, c(1)), comp("Gamma2", 1, c(2))];
            (comps, galois, action, vec![(0, 1), (0, 2), (1, 2)])
        }
        KodairaType::IVstar => {
            let (galois, action) = match cp {
                3 => (trivial(7), PhiAction::Identity),
                1 => (vec![0, 2, 1, 3, 5, 4, 6], PhiAction::Negation),
                _ => return Err(inconsistent(kodaira, cp)),
            };
            let comps = vec![
                comp("Gamma0", 1, c(0)),
                comp("Gamma1", 1, c(1)),
                comp("Gamma2", 1, c(2)),
                comp("Theta0", 2, c(0)),
                comp("Theta1", 2, c(2)),
                comp("Theta2", 2, c(1)),
                comp("Lambda0", 3, c(0)),
            ];
            let edges = vec![(0, 3), (1, 4), (2, 5), (3, 6), (4, 6), (5, 6)];
            (comps, galois, action, edges)
        }
        KodairaType::IIIstar => {
            if cp != 2 {
                return Err(inconsistent(kodaira, cp));
            }
            let comps = vec![
                comp("Gamma0", 1, c(0)),
                comp("Gamma1", 1, c(1)),
                comp("Theta0", 2, c(0)),
                comp("Theta1", 2, c(0)),
                comp("Theta2", 2, c(1)),
                comp("Lambda0", 3, c(0)),
                comp("Lambda1", 3, c(1)),
                comp("Psi", 4, c(0)),
            ];
            let edges = vec![(0, 2), (2, 5), (5, 7), (7, 6), (6, 3), (3, 1), (4, 7)];
            (comps, trivial(8), PhiAction::Identity, edges)
        }
        KodairaType::IIstar => {
            if cp != 1 {
                return Err(inconsistent(kodaira, cp));
            }
            let mults = [("Gamma0", 1), ("Xi2a", 2), ("Xi3a", 3), ("Xi4a", 4), ("Xi5", 5), ("Xi6", 6), ("Xi4b", 4), ("Xi2b", 2), ("Xi3b", 3)];
            let comps = mults.iter().map(|&(id, m)| comp(id, m, c(0))).collect();
            let edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)];
            (comps, trivial(9), PhiAction::Identity, edges)
        }
    };
    let fiber = SpecialFiber { kodaira, cp, phi, components, galois, phi_action, edges };
    debug_assert_eq!(fiber.validate(), Ok(()));
    Ok(fiber)
}

type Parts = (Vec<Component>, Vec<usize>, PhiAction, Vec<(usize, usize)>);

/// `I_n^*`: Gamma0 (identity) and Gamma1 (the near component `x_1 + a_{2,1} = 0`)
/// meet V-1; Gamma2, Gamma3 meet the far end V{n-1} of the chain V-1, ..., V{n-1}.
fn istar(n: u32, cp: u32) -> Result<Parts> {
    let kodaira = KodairaType::Istar(n);
    let odd = n % 2 == 1;
    let (zero, near, far_a, far_b, chain_odd, chain_even) = if odd {
        let c = PhiElement::Cyclic;
        (c(0), c(2), c(1), c(3), c(0), c(2))
    } else {
        let k = PhiElement::Klein;
        (k(0, 0), k(1, 1), k(1, 0), k(0, 1), k(0, 0), k(1, 1))
    };
    let mut comps = vec![
        comp("Gamma0", 1, zero),
        comp("Gamma1", 1, near),
        comp("Gamma2", 1, far_a),
        comp("Gamma3", 1, far_b),
    ];
    for l in -1..n as i64 {
        // l = 2u - 3 is odd, l = 2u - 2 is even.
        let d = if l.rem_euclid(2) == 1 { chain_odd } else { chain_even };
        comps.push(comp(format!("V{l}"), 2, d));
    }
    let mut galois: Vec<usize> = (0..comps.len()).collect();
    let action = match (cp, n, odd) {
        (4, _, _) => PhiAction::Identity,
        (2, _, true) => {
            galois.swap(2, 3);
            PhiAction::Negation
        }
        (2, _, false) => {
            galois.swap(2, 3);
            PhiAction::KleinSwap
        }
        (1, 0, _) => {
            galois[1] = 2;
            galois[2] = 3;
            galois[3] = 1;
            PhiAction::KleinCycle
        }
        _ => return Err(inconsistent(kodaira, cp)),
    };
    let v = |l: i64| (5 + l) as usize;
    let last = v(n as i64 - 1);
    let mut edges = vec![(0, v(-1)), (1, v(-1)), (2, last), (3, last)];
    for l in -1..n as i64 - 1 {
        edges.push((v(l), v(l + 1)));
    }
    Ok((comps, galois, action, edges))
}

/// Every `(type, c_p)` pair this module accepts for types with parameter up
/// to `max_n`.
pub fn all_fibers(max_n: u32) -> Vec<SpecialFiber> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for cp in 1..=n.max(4) {
            for k in [KodairaType::I(n), KodairaType::Istar(n)] {
                if let Ok(f) = fiber(k, cp, false) {
                    out.push(f);
                }
            }
        }
    }
    for k in [KodairaType::II, KodairaType::III, KodairaType::IV, KodairaType::IVstar, KodairaType::IIIstar, KodairaType::IIstar] {
        for cp in 1..=4 {
            if let Ok(f) = fiber(k, cp, false) {
                out.push(f);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ii_star_has_nine_components_with_zero_delta() {
        let f = fiber(KodairaType::IIstar, 1, false).unwrap();
        assert_eq!(f.components.len(), 9);
        assert!(f.components.iter().all(|c| c.delta == PhiElement::Cyclic(0)));
        assert_eq!(f.multiplicities(), vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn i1_star_split() {
        let f = fiber(KodairaType::Istar(1), 4, false).unwrap();
        assert_eq!(f.phi, PhiGroup::Cyclic(4));
        let v = |id: &str| f.components[f.index_of(id).unwrap()].delta;
        assert_eq!(v("V-1"), PhiElement::Cyclic(0));
        assert_eq!(v("V0"), PhiElement::Cyclic(2));
        assert_eq!(f.components.iter().filter(|c| c.multiplicity == 1).count(), 4);
        assert_eq!(f.fixed_simple_components(), 4);
    }

    #[test]
    fn nonsplit_i4_fixes_components_0_and_2() {
        let f = fiber(KodairaType::I(4), 2, false).unwrap();
        assert_eq!(f.phi_action, PhiAction::Negation);
        let fixed: Vec<usize> = (0..4).filter(|&i| f.is_fixed(i)).collect();
        assert_eq!(fixed, vec![0, 2]);
    }

    #[test]
    fn impossible_pairs_are_rejected() {
        for (k, cp) in [
            (KodairaType::III, 1),
            (KodairaType::IIIstar, 1),
            (KodairaType::IV, 2),
            (KodairaType::I(5), 2),
            (KodairaType::Istar(3), 1),
            (KodairaType::IIstar, 2),
        ] {
            assert!(matches!(fiber(k, cp, false), Err(Error::InconsistentFiber { .. })), "{k} {cp}");
        }
    }

    #[test]
    fn every_fiber_validates() {
        let fibers = all_fibers(12);
        assert!(fibers.len() > 40);
        for f in fibers {
            assert_eq!(f.validate(), Ok(()), "{} c_p={}", f.kodaira, f.cp);
        }
    }
}

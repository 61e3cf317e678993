//! Charge counting on `G×`.
//!
//! Every vertex starts with `d - 6`, every face with `2d - 6`, and a shared
//! pot with `0`; by Euler's formula a connected plane graph starts at `-12`
//! in total. The nine rules then move charge around without changing the
//! total, and [`audit`] reports what ends up negative.
//!
//! All arithmetic is exact ([`Q`]).

mod clusters;
mod rules;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::drawing::{validate_drawing, OnePlanarDrawing};
use crate::graph::ValidationReport;

pub use clusters::{
    decompose_clusters, gamma, max_slack_above_twelve, solve_cluster_program, Cluster, ClusterCounts,
    ClusterDecomposition, ClusterError, ClusterType, ProgramSolution,
};
pub use rules::transfer_is_justified;

pub type Q = Ratio<i64>;

pub(crate) fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChargeElement {
    Vertex(usize),
    /// Index into `OnePlanarDrawing::faces()`.
    Face(usize),
    Pot,
}

impl fmt::Display for ChargeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChargeElement::Vertex(v) => write!(f, "v{}", v + 1),
            ChargeElement::Face(i) => write!(f, "f{i}"),
            ChargeElement::Pot => write!(f, "pot"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    vertex: Vec<Q>,
    face: Vec<Q>,
    pot: Q,
}

impl ChargeLedger {
    pub fn get(&self, e: ChargeElement) -> Q {
        match e {
            ChargeElement::Vertex(v) => self.vertex[v],
            ChargeElement::Face(i) => self.face[i],
            ChargeElement::Pot => self.pot,
        }
    }

    fn slot(&mut self, e: ChargeElement) -> &mut Q {
        match e {
            ChargeElement::Vertex(v) => &mut self.vertex[v],
            ChargeElement::Face(i) => &mut self.face[i],
            ChargeElement::Pot => &mut self.pot,
        }
    }

    pub fn apply(&mut self, t: &Transfer) {
        *self.slot(t.from) -= t.amount;
        *self.slot(t.to) += t.amount;
    }

    pub fn total(&self) -> Q {
        self.vertex.iter().chain(&self.face).sum::<Q>() + self.pot
    }

    /// Vertices, then faces, then the pot.
    pub fn iter(&self) -> impl Iterator<Item = (ChargeElement, Q)> + '_ {
        let vs = self
            .vertex
            .iter()
            .enumerate()
            .map(|(i, &c)| (ChargeElement::Vertex(i), c));
        let fs = self
            .face
            .iter()
            .enumerate()
            .map(|(i, &c)| (ChargeElement::Face(i), c));
        vs.chain(fs)
            .chain(std::iter::once((ChargeElement::Pot, self.pot)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub rule: Rule,
    pub from: ChargeElement,
    pub to: ChargeElement,
    pub amount: Q,
    /// The crossing a "through w" transfer passes.
    pub via: Option<usize>,
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} -> {} {}", self.rule, self.from, self.to, self.amount)?;
        if let Some(w) = self.via {
            write!(f, " via v{}", w + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("r = {0} is below 13")]
    RadiusTooSmall(usize),
    #[error("invalid drawing:\n{0}")]
    InvalidDrawing(ValidationReport),
}

pub fn initial_charges(d: &OnePlanarDrawing) -> ChargeLedger {
    ChargeLedger {
        vertex: (0..d.num_vertices())
            .map(|v| Q::from(d.degree(v) as i64 - 6))
            .collect(),
        face: d
            .faces()
            .iter()
            .map(|f| Q::from(2 * f.degree() as i64 - 6))
            .collect(),
        pot: Q::from(0),
    }
}

/// Applies R1..R9 once each to every qualifying instance. Transfers come in
/// rule order, and within a rule by ascending element ids.
pub fn run_discharging(
    d: &OnePlanarDrawing,
    r: usize,
) -> Result<(Vec<Transfer>, ChargeLedger), DischargeError> {
    if r < 13 {
        return Err(DischargeError::RadiusTooSmall(r));
    }
    let rep = validate_drawing(d);
    if !rep.is_ok() {
        return Err(DischargeError::InvalidDrawing(rep));
    }
    let transfers = rules::all_transfers(d);
    let mut ledger = initial_charges(d);
    for t in &transfers {
        ledger.apply(t);
    }
    Ok((transfers, ledger))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub initial: ChargeLedger,
    pub final_charges: ChargeLedger,
    pub transfers: Vec<Transfer>,
    /// Elements whose final charge is below zero, in ledger order.
    pub negative: Vec<(ChargeElement, Q)>,
    /// Initial charge of each connected component of `G×`; `-12` apiece for
    /// plane components with at least one edge.
    pub component_sums: Vec<Q>,
    /// Final total (pot included) equals initial total.
    pub conserved: bool,
    pub pot_balance: Q,
    /// `|V_Δ| / 2 - |V_3|` when there are 3-vertices, else `0`.
    pub expected_pot: Q,
}

impl AuditReport {
    pub fn euler_holds(&self) -> bool {
        self.component_sums.iter().all(|&s| s == Q::from(-12))
    }

    /// Total sent by `v` across all rules.
    pub fn sent_by(&self, v: usize) -> Q {
        self.transfers
            .iter()
            .filter(|t| t.from == ChargeElement::Vertex(v))
            .map(|t| t.amount)
            .sum()
    }
}

pub fn audit(d: &OnePlanarDrawing, r: usize) -> Result<AuditReport, DischargeError> {
    let (transfers, final_charges) = run_discharging(d, r)?;
    let initial = initial_charges(d);
    let negative = final_charges.iter().filter(|(_, c)| *c < Q::from(0)).collect();

    let comps = d.components();
    let mut comp_of = vec![0; d.num_vertices()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut component_sums = vec![Q::from(0); comps.len()];
    for v in 0..d.num_vertices() {
        component_sums[comp_of[v]] += initial.get(ChargeElement::Vertex(v));
    }
    for (i, f) in d.faces().iter().enumerate() {
        component_sums[comp_of[f.walk[0]]] += initial.get(ChargeElement::Face(i));
    }

    let (v_delta, v_three) = rules::pot_members(d);
    let expected_pot = if v_three.is_empty() {
        Q::from(0)
    } else {
        q(v_delta.len() as i64, 2) - Q::from(v_three.len() as i64)
    };
    Ok(AuditReport {
        conserved: final_charges.total() == initial.total(),
        pot_balance: final_charges.get(ChargeElement::Pot),
        initial,
        final_charges,
        transfers,
        negative,
        component_sums,
        expected_pot,
    })
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "element initial final")?;
        for ((e, c0), (_, c1)) in self.initial.iter().zip(self.final_charges.iter()) {
            writeln!(f, "{e} {c0} {c1}")?;
        }
        writeln!(f, "negative: {}", self.negative.len())?;
        for (e, c) in &self.negative {
            writeln!(f, "  {e} {c}")?;
        }
        writeln!(
            f,
            "conservation: {} (initial {}, final {})",
            if self.conserved { "ok" } else { "FAILED" },
            self.initial.total(),
            self.final_charges.total()
        )?;
        writeln!(f, "pot: {} (expected {})", self.pot_balance, self.expected_pot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn initial_sums() {
        let d = fixtures::plane_k4();
        let c = initial_charges(&d);
        assert_eq!(c.total(), Q::from(-12));
        assert!(c
            .iter()
            .filter(|(e, _)| matches!(e, ChargeElement::Face(_)))
            .all(|(_, x)| x == Q::from(0)));

        let c = initial_charges(&fixtures::k4_crossing());
        assert_eq!(c.get(ChargeElement::Vertex(4)), Q::from(-2));
        assert_eq!(c.total(), Q::from(-12));

        let c = initial_charges(&fixtures::plane_cycle(5));
        assert_eq!(c.iter().filter(|&(_, x)| x == Q::from(4)).count(), 2);
        assert_eq!(c.total(), Q::from(-12));
    }

    #[test]
    fn k4_crossing_replay() {
        let d = fixtures::k4_crossing();
        let rep = audit(&d, 13).unwrap();
        assert!(rep.conserved && rep.euler_holds());
        let r1: Vec<_> = rep.transfers.iter().filter(|t| t.rule == Rule::R1).collect();
        assert_eq!(r1.len(), 4);
        assert!(r1.iter().all(|t| t.amount == q(1, 2)));
        assert_eq!(rep.pot_balance, Q::from(-2));
        assert_eq!(rep.expected_pot, Q::from(-2));
        assert!(!rep.negative.is_empty());
        for t in &rep.transfers {
            assert!(transfer_is_justified(&d, t), "{t}");
        }
    }

    #[test]
    fn rejects_small_r() {
        assert_eq!(
            run_discharging(&fixtures::plane_k4(), 12).unwrap_err(),
            DischargeError::RadiusTooSmall(12)
        );
    }
}

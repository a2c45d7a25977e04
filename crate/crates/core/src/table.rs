//! The bundled reference table of BCH permutation groups at prime length
//! and its recomputation.
//!
//! Each row lists a field size q, a prime length p and a designed distance
//! delta; the three group columns describe the narrow-sense code (b = 1)
//! and the b = 2, 3 variants. `run_table2` rebuilds every code with
//! [`CyclicCode::bch`], classifies it and compares against the reference.
//!
//! Five reference entries are known to disagree with direct computation
//! (see the row comments); the computation here is the honest one, and the
//! mismatches stay flagged.

use num_bigint::BigUint;
use serde::Serialize;

use crate::arithmetic::prime_power;
use crate::autgroup::{classify_code, factorial, pgammal_order, AutClassification, Evidence, GroupTag, M23_ORDER};
use crate::codes::CyclicCode;
use crate::error::Result;
use crate::field::field;

/// Expected group of one table cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefGroup {
    /// C_k x| C_p (k = 1 means the bare cycle C_p).
    Semidirect { k: u64 },
    Symmetric,
    M23,
    PGammaL { d: u32, t: u64 },
}

impl RefGroup {
    pub fn name(&self, p: u64) -> String {
        match self {
            RefGroup::Semidirect { k: 1 } => format!("C_{p}"),
            RefGroup::Semidirect { k } => format!("C_{k} x| C_{p}"),
            RefGroup::Symmetric => format!("S_{p}"),
            RefGroup::M23 => "M_23".into(),
            RefGroup::PGammaL { d, t } => format!("PGammaL({d},{t})"),
        }
    }

    pub fn order(&self, p: u64) -> BigUint {
        match self {
            RefGroup::Semidirect { k } => BigUint::from(p) * *k,
            RefGroup::Symmetric => factorial(p),
            RefGroup::M23 => BigUint::from(M23_ORDER),
            RefGroup::PGammaL { d, t } => pgammal_order(*d, *t).expect("valid parameters"),
        }
    }

    pub fn matches(&self, c: &AutClassification) -> bool {
        let order_ok = c.order.is_exact() && *c.order.value() == self.order(c.n);
        let tag_ok = match self {
            RefGroup::Semidirect { k } => {
                matches!(c.tag, GroupTag::AffineSubgroup | GroupTag::FullAffine)
                    && matches!(&c.evidence, Evidence::Multipliers { a, .. } if a.len() as u64 == *k)
            }
            RefGroup::Symmetric => c.tag == GroupTag::Symmetric,
            RefGroup::M23 => c.tag == GroupTag::GolayBinary,
            RefGroup::PGammaL { d, t } => {
                matches!(&c.evidence, Evidence::Projective { d: dd, t: tt, .. } if dd == d && tt == t)
            }
        };
        tag_ok && order_ok
    }
}

/// One (q, p, delta) row with expected groups for b = 1, 2, 3.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub q: u64,
    pub p: u64,
    pub delta: u64,
    pub expected: [RefGroup; 3],
}

fn semi(k: u64) -> RefGroup {
    RefGroup::Semidirect { k }
}

/// The 14 reference rows.
pub fn reference_table() -> Vec<TableRow> {
    use RefGroup::{M23, PGammaL, Symmetric};
    let row = |q, p, delta, e: [RefGroup; 3]| TableRow { q, p, delta, expected: e };
    vec![
        // Direct computation gives C_8 x| C_17 for all three b values of
        // this row (the b = 2, 3 defining sets close up to the same coset
        // as b = 1); the reference lists S_17 for b = 2, 3.
        row(2, 17, 2, [semi(8), Symmetric, Symmetric]),
        row(2, 23, 3, [M23, M23, M23]),
        row(2, 41, 2, [semi(20), semi(20), semi(20)]),
        row(2, 41, 3, [semi(20), Symmetric, Symmetric]),
        row(2, 43, 5, [semi(14), semi(14), semi(14)]),
        row(2, 43, 7, [semi(14), Symmetric, Symmetric]),
        row(3, 13, 2, [semi(3), semi(3), semi(3)]),
        row(3, 13, 4, [PGammaL { d: 3, t: 3 }, semi(3), semi(3)]),
        row(3, 13, 5, [semi(3), semi(3), semi(3)]),
        row(3, 23, 3, [semi(11), semi(11), semi(11)]),
        row(3, 41, 5, [semi(8), semi(8), semi(8)]),
        row(4, 43, 9, [semi(7), Symmetric, Symmetric]),
        // Direct computation gives the repetition code (hence S_11) for
        // every b: the delta = 5 defining sets cover all units mod 11; the
        // reference lists C_5 x| C_11.
        row(5, 11, 5, [semi(5), semi(5), semi(5)]),
        row(11, 5, 3, [semi(1), semi(2), semi(1)]),
    ]
}

/// Outcome of recomputing one cell.
#[derive(Debug, Clone, Serialize)]
pub struct CellOutcome {
    pub q: u64,
    pub p: u64,
    pub delta: u64,
    pub b: u64,
    pub computed: AutClassification,
    pub computed_name: String,
    pub expected_name: String,
    pub expected_order: String,
    pub matches: bool,
}

/// Recomputes every cell of the reference table.
pub fn run_table2() -> Result<Vec<CellOutcome>> {
    let mut out = vec![];
    for row in reference_table() {
        let (r, alpha) = prime_power(row.q).expect("table q is a prime power");
        let fs = field(r, alpha)?;
        for b in 1..=3u64 {
            let code = CyclicCode::bch(row.p, &fs, b, row.delta)?;
            let computed = classify_code(&code)?;
            let expected = &row.expected[(b - 1) as usize];
            let matches = expected.matches(&computed);
            out.push(CellOutcome {
                q: row.q,
                p: row.p,
                delta: row.delta,
                b,
                computed_name: computed.name(),
                expected_name: expected.name(row.p),
                expected_order: expected.order(row.p).to_string(),
                computed,
                matches,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recomputation_pins_known_outcomes() {
        let cells = run_table2().unwrap();
        assert_eq!(cells.len(), 42);
        let mismatched: Vec<(u64, u64, u64, u64)> = cells
            .iter()
            .filter(|c| !c.matches)
            .map(|c| (c.q, c.p, c.delta, c.b))
            .collect();
        // the five known discrepancies between the reference table and
        // direct computation, frozen as a regression
        assert_eq!(
            mismatched,
            vec![
                (2, 17, 2, 2),
                (2, 17, 2, 3),
                (5, 11, 5, 1),
                (5, 11, 5, 2),
                (5, 11, 5, 3),
            ]
        );
        // the computed values for those cells
        for c in &cells {
            match (c.q, c.p, c.b) {
                (2, 17, 2) | (2, 17, 3) => {
                    assert_eq!(c.computed_name, "C_8 x| C_17");
                }
                (5, 11, _) => {
                    assert_eq!(c.computed_name, "S_11");
                }
                _ => assert!(c.matches, "unexpected mismatch at {:?}", (c.q, c.p, c.delta, c.b)),
            }
        }
    }

    #[test]
    fn named_cells() {
        let cells = run_table2().unwrap();
        let cell = |q, p, delta, b| {
            cells
                .iter()
                .find(|c| (c.q, c.p, c.delta, c.b) == (q, p, delta, b))
                .unwrap()
        };
        assert_eq!(cell(2, 17, 2, 1).computed.order.value(), &BigUint::from(136u32));
        assert_eq!(cell(2, 23, 3, 1).computed_name, "M_23");
        assert_eq!(cell(3, 13, 4, 1).computed_name, "PGammaL(3,3)");
        assert_eq!(cell(3, 13, 4, 1).computed.order.value(), &BigUint::from(5616u32));
        assert_eq!(cell(11, 5, 3, 2).computed.order.value(), &BigUint::from(10u32));
    }
}

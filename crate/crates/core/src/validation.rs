//! Failure-collecting reports for axiom checks. A check never throws on a
//! broken identity; it records the axiom name, the basis tuple it failed on,
//! and both evaluated sides, so a failure is auditable without rerunning.

use crate::linalg::Vector;
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: String,
    /// Basis indices witnessing the failure (0-based).
    pub witness: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn record(&mut self, axiom: &str, witness: &[usize], lhs: Vector, rhs: Vector) {
        self.failures.push(AxiomFailure {
            axiom: axiom.to_string(),
            witness: witness.to_vec(),
            lhs,
            rhs,
        });
    }

    /// Records a failure iff the two sides differ.
    pub fn check(&mut self, axiom: &str, witness: &[usize], lhs: &Vector, rhs: &Vector) {
        if lhs != rhs {
            self.record(axiom, witness, lhs.clone(), rhs.clone());
        }
    }

    pub fn check_scalar(&mut self, axiom: &str, witness: &[usize], lhs: &Rational, rhs: &Rational) {
        if lhs != rhs {
            self.record(
                axiom,
                witness,
                Vector::from_entries(vec![lhs.clone()]),
                Vector::from_entries(vec![rhs.clone()]),
            );
        }
    }

    pub fn absorb(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }
}

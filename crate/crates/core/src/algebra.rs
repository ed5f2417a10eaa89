//! Finite-dimensional hom-Lie algebras presented by structure constants.
//!
//! The bracket is stored only on index pairs `i < j`; the swapped order and
//! the diagonal are derived, which makes antisymmetry unfalsifiable at the
//! data level. `validate` checks the remaining axioms (twist morphism and the
//! twisted Jacobi identity) on basis tuples, which suffices by multilinearity.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::validation::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieAlgebra {
    dim: usize,
    /// `bracket[(i, j)]` with `i < j` holds the coefficients of `[e_i, e_j]`.
    bracket: BTreeMap<(usize, usize), Vector>,
    /// The twist endomorphism, column action.
    twist: Matrix,
}

/// Structural classification flags plus a basis of the center.
#[derive(Clone, Debug)]
pub struct Classification {
    /// Twist invertible.
    pub regular: bool,
    /// Twist squares to the identity.
    pub involutive: bool,
    /// Dualizing the adjoint action again yields an action; equivalent to the
    /// two `(id - twist^2)` bracket conditions.
    pub admissible: bool,
    pub center: Vec<Vector>,
}

impl HomLieAlgebra {
    /// Builds an (unvalidated) algebra from sparse structure constants.
    /// Entries must have `i < j`; the twist must be `dim x dim`.
    pub fn new(
        dim: usize,
        entries: Vec<((usize, usize), Vector)>,
        twist: Matrix,
    ) -> Result<Self> {
        if twist.rows() != dim || twist.cols() != dim {
            return Err(Error::dim(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                twist.rows(),
                twist.cols()
            )));
        }
        let mut bracket = BTreeMap::new();
        for ((i, j), coeffs) in entries {
            if i >= j {
                return Err(Error::input(format!(
                    "bracket entry ({i}, {j}) must have i < j; the other order is derived"
                )));
            }
            if j >= dim {
                return Err(Error::input(format!(
                    "bracket entry ({i}, {j}) out of range for dim {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::dim(format!(
                    "bracket entry ({i}, {j}) has {} coefficients, expected {dim}",
                    coeffs.len()
                )));
            }
            if bracket.insert((i, j), coeffs).is_some() {
                return Err(Error::input(format!("duplicate bracket entry ({i}, {j})")));
            }
        }
        Ok(HomLieAlgebra {
            dim,
            bracket,
            twist,
        })
    }

    pub fn abelian(dim: usize, twist: Matrix) -> Result<Self> {
        Self::new(dim, Vec::new(), twist)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    /// Sparse structure constants, `i < j` only.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.bracket.iter()
    }

    /// `[e_i, e_j]` for any index order; antisymmetry is applied here.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vector::zeros(self.dim),
            std::cmp::Ordering::Less => self
                .bracket
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Vector::zeros(self.dim)),
            std::cmp::Ordering::Greater => self
                .bracket
                .get(&(j, i))
                .map(|v| -v)
                .unwrap_or_else(|| Vector::zeros(self.dim)),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_eval(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::dim(format!(
                "bracket arguments of length {} and {}, expected {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = Vector::zeros(self.dim);
        for ((i, j), coeffs) in &self.bracket {
            // x_i y_j - x_j y_i multiplies [e_i, e_j]
            let c = &(&x[*i] * &y[*j]) - &(&x[*j] * &y[*i]);
            if !c.is_zero() {
                out.add_scaled(coeffs, &c);
            }
        }
        Ok(out)
    }

    pub fn apply_twist(&self, x: &Vector) -> Vector {
        self.twist.mul_vec(x).expect("twist shape checked at construction")
    }

    /// Matrix of `ad(e_i) = [e_i, -]`, column action.
    pub fn ad_matrix(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(&cols).expect("columns of equal length")
    }

    /// Matrix of `ad(x)` for an arbitrary element.
    pub fn ad_of(&self, x: &Vector) -> Result<Matrix> {
        if x.len() != self.dim {
            return Err(Error::dim(format!(
                "ad argument of length {}, expected {}",
                x.len(),
                self.dim
            )));
        }
        let mut m = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            m = &m + &self.ad_matrix(i).scale(&x[i]);
        }
        Ok(m)
    }

    /// Coadjoint action matrix of `x` on dual coordinates: `-ad(x)^T`.
    pub fn coad_of(&self, x: &Vector) -> Result<Matrix> {
        Ok(-&self.ad_of(x)?.transpose())
    }

    /// Dual twist matrix acting on dual coordinates.
    pub fn dual_twist(&self) -> Matrix {
        self.twist.transpose()
    }

    /// Checks the twist-morphism axiom and the twisted Jacobi identity on
    /// basis tuples. Tuples with a repeated index cancel identically, so
    /// strictly increasing tuples are exhaustive.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = self.apply_twist(&self.bracket_basis(i, j));
                let rhs = self
                    .bracket_eval(&self.twist.column(i), &self.twist.column(j))
                    .expect("dimensions fixed");
                report.check("twist-morphism", &[i, j], &lhs, &rhs);
            }
        }
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                for k in (j + 1)..self.dim {
                    let sum = self.jacobi_sum(i, j, k);
                    report.check(
                        "hom-jacobi",
                        &[i, j, k],
                        &sum,
                        &Vector::zeros(self.dim),
                    );
                }
            }
        }
        report
    }

    /// `[t(e_i), [e_j, e_k]] + [t(e_j), [e_k, e_i]] + [t(e_k), [e_i, e_j]]`
    /// where `t` is the twist.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vector {
        let term = |a: usize, b: usize, c: usize| {
            self.bracket_eval(&self.twist.column(a), &self.bracket_basis(b, c))
                .expect("dimensions fixed")
        };
        &(&term(i, j, k) + &term(j, k, i)) + &term(k, i, j)
    }

    /// Structural predicates and the center. Expects a validated algebra.
    pub fn classify(&self) -> Result<Classification> {
        if !self.validate().passed() {
            return Err(Error::precondition(
                "classify requires a validated algebra".to_string(),
            ));
        }
        let regular = self.twist.invert()?.is_some();
        let involutive = self.twist.pow(2)?.is_identity();
        Ok(Classification {
            regular,
            involutive,
            admissible: self.is_admissible(),
            center: self.center(),
        })
    }

    /// The two bracket conditions on `id - twist^2` characterizing when the
    /// dual of the adjoint action is again an action.
    pub fn is_admissible(&self) -> bool {
        let defect = &Matrix::identity(self.dim) - &self.twist.pow(2).expect("square");
        let dx: Vec<Vector> = (0..self.dim).map(|i| defect.column(i)).collect();
        let tx: Vec<Vector> = (0..self.dim).map(|i| self.twist.column(i)).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self
                    .bracket_eval(&dx[i], &tx[j])
                    .expect("dims")
                    .is_zero()
                {
                    return false;
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let inner_j = self.bracket_basis_eval(&tx[j], k);
                    let inner_i = self.bracket_basis_eval(&tx[i], k);
                    let lhs = self.bracket_eval(&dx[i], &inner_j).expect("dims");
                    let rhs = self.bracket_eval(&dx[j], &inner_i).expect("dims");
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn bracket_basis_eval(&self, x: &Vector, k: usize) -> Vector {
        self.bracket_eval(x, &Vector::basis(self.dim, k))
            .expect("dims")
    }

    /// Basis of `{x : [x, y] = 0 for all y}`, via the kernel of the stacked
    /// adjoint matrices.
    pub fn center(&self) -> Vec<Vector> {
        let mut stacked = Matrix::zeros(self.dim * self.dim, self.dim);
        for j in 0..self.dim {
            // row block j: x maps to [x, e_j] = -ad(e_j) x
            let block = -&self.ad_matrix(j);
            for r in 0..self.dim {
                for c in 0..self.dim {
                    stacked.set(j * self.dim + r, c, block.get(r, c).clone());
                }
            }
        }
        stacked.kernel_basis()
    }

    /// True when the span is twist-stable and bracket-closed. Membership is
    /// decided by exact linear solves against the span.
    pub fn is_subalgebra(&self, span: &[Vector]) -> Result<bool> {
        if span.iter().any(|v| v.len() != self.dim) {
            return Err(Error::dim("span vector of wrong length".to_string()));
        }
        if !Matrix::independent(span) {
            return Err(Error::input("span vectors are dependent".to_string()));
        }
        if span.is_empty() {
            return Ok(true);
        }
        let m = Matrix::from_columns(span)?;
        let contains = |w: &Vector| -> Result<bool> { Ok(m.solve_linear(w)?.is_some()) };
        for v in span {
            if !contains(&self.apply_twist(v))? {
                return Ok(false);
            }
        }
        for (a, u) in span.iter().enumerate() {
            for v in &span[a..] {
                if !contains(&self.bracket_eval(u, v)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

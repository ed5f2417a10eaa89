//! Actions of a hom-Lie algebra on a twisted module: the two defining
//! axioms, dualization and admissibility, the adjoint/coadjoint pair, and
//! the semidirect product.

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::validation::ValidationReport;

#[derive(Clone, Debug)]
pub struct Representation {
    algebra: HomLieAlgebra,
    /// Twist on the module carrier (`A`), column action.
    twist_v: Matrix,
    /// One action matrix per basis element of the algebra.
    action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: HomLieAlgebra, twist_v: Matrix, action: Vec<Matrix>) -> Result<Self> {
        if !twist_v.is_square() {
            return Err(Error::NotSquare {
                rows: twist_v.rows(),
                cols: twist_v.cols(),
            });
        }
        let m = twist_v.rows();
        if action.len() != algebra.dim() {
            return Err(Error::dim(format!(
                "{} action matrices for an algebra of dim {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|a| a.rows() != m || a.cols() != m) {
            return Err(Error::dim(format!("action matrices must be {m}x{m}")));
        }
        Ok(Representation {
            algebra,
            twist_v,
            action,
        })
    }

    pub fn algebra(&self) -> &HomLieAlgebra {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.twist_v.rows()
    }

    pub fn twist_v(&self) -> &Matrix {
        &self.twist_v
    }

    pub fn action_matrix(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn action_matrices(&self) -> &[Matrix] {
        &self.action
    }

    /// Action of an arbitrary algebra element, by linearity.
    pub fn action_of(&self, x: &Vector) -> Result<Matrix> {
        if x.len() != self.algebra.dim() {
            return Err(Error::dim(format!(
                "element of length {}, algebra has dim {}",
                x.len(),
                self.algebra.dim()
            )));
        }
        let m = self.dim_v();
        let mut acc = Matrix::zeros(m, m);
        for (i, mat) in self.action.iter().enumerate() {
            if !x[i].is_zero() {
                acc = &acc + &mat.scale(&x[i]);
            }
        }
        Ok(acc)
    }

    /// The algebra acting on itself by the bracket, twisted by its own twist.
    pub fn adjoint(g: &HomLieAlgebra) -> Self {
        let action = (0..g.dim()).map(|i| g.ad_matrix(i)).collect();
        Representation {
            algebra: g.clone(),
            twist_v: g.twist().clone(),
            action,
        }
    }

    /// The dual of the adjoint action. Only defined when the algebra is
    /// admissible; otherwise the dualized action fails the axioms.
    pub fn coadjoint(g: &HomLieAlgebra) -> Result<Self> {
        if !g.validate().passed() {
            return Err(Error::precondition(
                "coadjoint action over a non-validated algebra".to_string(),
            ));
        }
        if !g.is_admissible() {
            return Err(Error::precondition(
                "coadjoint action requires an admissible algebra".to_string(),
            ));
        }
        Ok(Self::adjoint(g).dual())
    }

    pub fn trivial(g: &HomLieAlgebra, twist_v: Matrix) -> Result<Self> {
        let m = twist_v.rows();
        let action = vec![Matrix::zeros(m, m); g.dim()];
        Representation::new(g.clone(), twist_v, action)
    }

    /// The candidate dual action on the dual module: transposed twist,
    /// negated-transposed action. Not guaranteed to satisfy the axioms;
    /// callers decide with `check`.
    pub fn dual(&self) -> Representation {
        Representation {
            algebra: self.algebra.clone(),
            twist_v: self.twist_v.transpose(),
            action: self.action.iter().map(|a| -&a.transpose()).collect(),
        }
    }

    /// The two defining axioms, as exact matrix identities over basis
    /// elements (sufficient by linearity).
    pub fn check(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let g = &self.algebra;
        let n = g.dim();
        let a = &self.twist_v;
        for i in 0..n {
            let lhs = self
                .action_of(&g.twist().column(i))
                .expect("dims")
                .mul(a)
                .expect("dims");
            let rhs = a.mul(&self.action[i]).expect("dims");
            check_matrix(&mut report, "action-twist", &[i], &lhs, &rhs);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self
                    .action_of(&g.bracket_basis(i, j))
                    .expect("dims")
                    .mul(a)
                    .expect("dims");
                let ti = self.action_of(&g.twist().column(i)).expect("dims");
                let tj = self.action_of(&g.twist().column(j)).expect("dims");
                let rhs = &ti.mul(&self.action[j]).expect("dims")
                    - &tj.mul(&self.action[i]).expect("dims");
                check_matrix(&mut report, "action-bracket", &[i, j], &lhs, &rhs);
            }
        }
        report
    }

    /// The two conditions under which the dual candidate is again an action.
    pub fn is_admissible(&self) -> bool {
        let g = &self.algebra;
        let n = g.dim();
        let a = &self.twist_v;
        for i in 0..n {
            let lhs = a
                .mul(&self.action_of(&g.twist().column(i)).expect("dims"))
                .expect("dims");
            let rhs = self.action[i].mul(a).expect("dims");
            if lhs != rhs {
                return false;
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = a
                    .mul(&self.action_of(&g.bracket_basis(i, j)).expect("dims"))
                    .expect("dims");
                let ti = self.action_of(&g.twist().column(i)).expect("dims");
                let tj = self.action_of(&g.twist().column(j)).expect("dims");
                let rhs = &self.action[i].mul(&tj).expect("dims")
                    - &self.action[j].mul(&ti).expect("dims");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The algebra extended by the module: block bracket
    /// `[(x,u),(y,v)] = ([x,y], x.v - y.u)` with block-diagonal twist.
    /// Algebra block first, module block second.
    pub fn semidirect(&self) -> Result<HomLieAlgebra> {
        if !self.check().passed() {
            return Err(Error::precondition(
                "semidirect product requires a verified action".to_string(),
            ));
        }
        Ok(self.semidirect_unchecked())
    }

    /// Same assembly without the axiom gate; the result is a candidate.
    pub fn semidirect_unchecked(&self) -> HomLieAlgebra {
        let n = self.algebra.dim();
        let m = self.dim_v();
        let total = n + m;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let c = self.algebra.bracket_basis(i, j);
                if !c.is_zero() {
                    entries.push(((i, j), c.concat(&Vector::zeros(m))));
                }
            }
        }
        for i in 0..n {
            for b in 0..m {
                let c = self.action[i].column(b);
                if !c.is_zero() {
                    entries.push(((i, n + b), Vector::zeros(n).concat(&c)));
                }
            }
        }
        let twist = self.algebra.twist().direct_sum(&self.twist_v);
        HomLieAlgebra::new(total, entries, twist).expect("shapes consistent by construction")
    }
}

fn check_matrix(
    report: &mut ValidationReport,
    axiom: &str,
    witness: &[usize],
    lhs: &Matrix,
    rhs: &Matrix,
) {
    if lhs != rhs {
        // store the matrices column-stacked so the report stays vector-shaped
        let flatten = |m: &Matrix| {
            let mut v = Vector::zeros(0);
            for j in 0..m.cols() {
                v = v.concat(&m.column(j));
            }
            v
        };
        report.record(axiom, witness, flatten(lhs), flatten(rhs));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn aff1() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::identity(2),
        )
        .unwrap()
    }

    fn aff1_scaled() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap()
    }

    #[test]
    fn adjoint_passes_check() {
        assert!(Representation::adjoint(&aff1()).check().passed());
        assert!(Representation::adjoint(&aff1_scaled()).check().passed());
    }

    #[test]
    fn trivial_passes_check() {
        let a = Matrix::diagonal(&[Rational::int(5)]);
        let rep = Representation::trivial(&aff1(), a).unwrap();
        assert!(rep.check().passed());
        assert!(rep.is_admissible());
    }

    #[test]
    fn coadjoint_of_aff1() {
        let rep = Representation::coadjoint(&aff1()).unwrap();
        assert!(rep.check().passed());
        assert_eq!(
            *rep.action_matrix(0),
            Matrix::from_int_rows(&[&[0, 0], &[0, -1]])
        );
        assert_eq!(
            *rep.action_matrix(1),
            Matrix::from_int_rows(&[&[0, 1], &[0, 0]])
        );
    }

    #[test]
    fn coadjoint_rejects_non_admissible() {
        assert!(Representation::coadjoint(&aff1_scaled()).is_err());
    }

    #[test]
    fn dual_of_non_admissible_adjoint_fails_check() {
        let rep = Representation::adjoint(&aff1_scaled());
        assert!(rep.check().passed());
        assert!(!rep.is_admissible());
        assert!(!rep.dual().check().passed());
    }

    #[test]
    fn admissibility_matches_dual_check() {
        for g in [aff1(), aff1_scaled()] {
            let rep = Representation::adjoint(&g);
            assert_eq!(rep.is_admissible(), rep.dual().check().passed());
            assert_eq!(g.is_admissible(), rep.is_admissible());
        }
    }

    #[test]
    fn semidirect_with_trivial_module_is_abelian_extension() {
        let g = HomLieAlgebra::abelian(2, Matrix::identity(2)).unwrap();
        let rep = Representation::trivial(&g, Matrix::identity(1)).unwrap();
        let s = rep.semidirect().unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.validate().passed());
        assert!(s.entries().next().is_none());
    }

    #[test]
    fn semidirect_with_coadjoint_module() {
        let rep = Representation::coadjoint(&aff1()).unwrap();
        let s = rep.semidirect().unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.validate().passed());
        assert_eq!(s.bracket_basis(0, 1), Vector::from_ints(&[0, 1, 0, 0]));
        assert_eq!(s.bracket_basis(0, 3), Vector::from_ints(&[0, 0, 0, -1]));
        assert_eq!(s.bracket_basis(1, 3), Vector::from_ints(&[0, 0, 1, 0]));
        assert!(s.bracket_basis(0, 2).is_zero());
        assert!(s.bracket_basis(2, 3).is_zero());
    }

    #[test]
    fn semidirect_with_adjoint_module_validates() {
        let rep = Representation::adjoint(&aff1());
        let s = rep.semidirect().unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.validate().passed());
    }

    #[test]
    fn semidirect_requires_verified_action() {
        let broken = Representation::new(
            aff1(),
            Matrix::identity(2),
            vec![
                Matrix::from_int_rows(&[&[0, 1], &[1, 0]]),
                Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
            ],
        )
        .unwrap();
        assert!(!broken.check().passed());
        assert!(broken.semidirect().is_err());
    }
}

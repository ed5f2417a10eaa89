//! Operator forms that produce Yang-Baxter solutions: intertwining maps
//! from a module into the algebra, their characterization as block
//! square-zero deformation operators on the semidirect product, the
//! adjoint-module special case, left-symmetric structures with a twisted
//! associator, and the bivector each of these plants in the double.

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::exterior::{wedge, Multivector, Side};
use crate::linalg::{Matrix, Vector};
use crate::rep::Representation;
use crate::validation::ValidationReport;

/// A linear map from the module into the algebra, checked against the
/// intertwining and bracket-transport identities.
#[derive(Clone, Debug)]
pub struct OOperator {
    rep: Representation,
    /// Columns are images of module basis vectors in the algebra.
    map: Matrix,
}

impl OOperator {
    pub fn new(rep: Representation, map: Matrix) -> Result<Self> {
        if map.rows() != rep.algebra().dim() || map.cols() != rep.dim_v() {
            return Err(Error::dim(format!(
                "map is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                rep.algebra().dim(),
                rep.dim_v()
            )));
        }
        Ok(OOperator { rep, map })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    /// Both defining identities: the map intertwines the twists, and the
    /// bracket of two images is the image of the skewed module action.
    pub fn check(&self) -> Result<ValidationReport> {
        if !self.rep.check().passed() {
            return Err(Error::precondition(
                "operator check requires a verified action".to_string(),
            ));
        }
        let g = self.rep.algebra();
        let m = self.rep.dim_v();
        let mut report = ValidationReport::new();
        let lhs = self.map.mul(self.rep.twist_v())?;
        let rhs = g.twist().mul(&self.map)?;
        if lhs != rhs {
            report.record(
                "intertwines-twists",
                &[],
                flatten(&lhs),
                flatten(&rhs),
            );
        }
        for a in 0..m {
            for b in (a + 1)..m {
                let ta = self.map.column(a);
                let tb = self.map.column(b);
                let lhs = g.bracket_eval(&ta, &tb)?;
                let inner = &self.rep.action_of(&ta)?.mul_vec(&Vector::basis(m, b))?
                    - &self.rep.action_of(&tb)?.mul_vec(&Vector::basis(m, a))?;
                let rhs = self.map.mul_vec(&inner)?;
                report.check("operator-identity", &[a, b], &lhs, &rhs);
            }
        }
        Ok(report)
    }

    pub fn is_o_operator(&self) -> Result<bool> {
        Ok(self.check()?.passed())
    }

    /// Agreement between the operator identities and the block square-zero
    /// criterion on the semidirect product: the map, embedded as the
    /// upper-right block, is a deformation operator exactly when the
    /// operator identities hold. Returns whether the two tests agree.
    pub fn nijenhuis_embedding(&self) -> Result<bool> {
        let direct = self.is_o_operator()?;
        let s = self.rep.semidirect()?;
        let n = self.rep.algebra().dim();
        let m = self.rep.dim_v();
        let mut block = Matrix::zeros(n + m, n + m);
        for i in 0..n {
            for a in 0..m {
                block.set(i, n + a, self.map.get(i, a).clone());
            }
        }
        let embedded = is_hom_nijenhuis(&s, &block)?;
        Ok(direct == embedded)
    }
}

fn flatten(m: &Matrix) -> Vector {
    let mut v = Vector::zeros(0);
    for j in 0..m.cols() {
        v = v.concat(&m.column(j));
    }
    v
}

/// Twist-commuting map whose bracket deformation closes on itself.
pub fn is_hom_nijenhuis(g: &HomLieAlgebra, n: &Matrix) -> Result<bool> {
    let dim = g.dim();
    if n.rows() != dim || n.cols() != dim {
        return Err(Error::dim(format!(
            "operator is {}x{}, algebra has dim {dim}",
            n.rows(),
            n.cols()
        )));
    }
    if n.mul(g.twist())? != g.twist().mul(n)? {
        return Ok(false);
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let ni = n.column(i);
            let nj = n.column(j);
            let lhs = g.bracket_eval(&ni, &nj)?;
            let inner = &(&g.bracket_eval(&ni, &Vector::basis(dim, j))?
                + &g.bracket_eval(&Vector::basis(dim, i), &nj)?)
                - &n.mul_vec(&g.bracket_basis(i, j))?;
            let rhs = n.mul_vec(&inner)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Weight-zero Rota-Baxter property, computed directly and cross-checked as
/// the operator identities over the adjoint action. The two routes agree by
/// construction, so disagreement is an internal error.
pub fn is_rota_baxter(g: &HomLieAlgebra, r: &Matrix) -> Result<bool> {
    if !g.validate().passed() {
        return Err(Error::precondition(
            "Rota-Baxter check requires a validated algebra".to_string(),
        ));
    }
    let dim = g.dim();
    if r.rows() != dim || r.cols() != dim {
        return Err(Error::dim(format!(
            "operator is {}x{}, algebra has dim {dim}",
            r.rows(),
            r.cols()
        )));
    }
    let mut direct = r.mul(g.twist())? == g.twist().mul(r)?;
    if direct {
        'outer: for i in 0..dim {
            for j in (i + 1)..dim {
                let ri = r.column(i);
                let rj = r.column(j);
                let lhs = g.bracket_eval(&ri, &rj)?;
                let inner = &g.bracket_eval(&ri, &Vector::basis(dim, j))?
                    - &g.bracket_eval(&rj, &Vector::basis(dim, i))?;
                if lhs != r.mul_vec(&inner)? {
                    direct = false;
                    break 'outer;
                }
            }
        }
    }
    let via_operator = OOperator::new(Representation::adjoint(g), r.clone())?.is_o_operator()?;
    if direct != via_operator {
        return Err(Error::Internal(format!(
            "Rota-Baxter routes disagree: direct={direct}, operator={via_operator}"
        )));
    }
    Ok(direct)
}

/// Bilinear product whose twisted associator is symmetric in its first two
/// arguments, together with a product homomorphism as twist.
#[derive(Clone, Debug)]
pub struct HomLeftSymmetricAlgebra {
    dim: usize,
    /// `product[i][j]` holds the coefficients of `e_i * e_j`; no symmetry is
    /// imposed.
    product: Vec<Vec<Vector>>,
    psi: Matrix,
}

impl HomLeftSymmetricAlgebra {
    pub fn new(
        dim: usize,
        entries: Vec<((usize, usize), Vector)>,
        psi: Matrix,
    ) -> Result<Self> {
        if psi.rows() != dim || psi.cols() != dim {
            return Err(Error::dim(format!(
                "twist is {}x{}, expected {dim}x{dim}",
                psi.rows(),
                psi.cols()
            )));
        }
        let mut product = vec![vec![Vector::zeros(dim); dim]; dim];
        let mut seen = std::collections::BTreeSet::new();
        for ((i, j), coeffs) in entries {
            if i >= dim || j >= dim {
                return Err(Error::input(format!(
                    "product entry ({i}, {j}) out of range for dim {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::dim(format!(
                    "product entry ({i}, {j}) has {} coefficients, expected {dim}",
                    coeffs.len()
                )));
            }
            if !seen.insert((i, j)) {
                return Err(Error::input(format!("duplicate product entry ({i}, {j})")));
            }
            product[i][j] = coeffs;
        }
        Ok(HomLeftSymmetricAlgebra { dim, product, psi })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &Vector {
        &self.product[i][j]
    }

    pub fn product_eval(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::dim("product argument of wrong length".to_string()));
        }
        let mut out = Vector::zeros(self.dim);
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let c = &u[i] * &v[j];
                if !c.is_zero() {
                    out.add_scaled(&self.product[i][j], &c);
                }
            }
        }
        Ok(out)
    }

    /// Left multiplication matrix of `e_i`.
    pub fn left_mul_matrix(&self, i: usize) -> Matrix {
        Matrix::from_columns(&self.product[i]).expect("columns of equal length")
    }

    /// The twist is a product homomorphism and the twisted associator is
    /// symmetric in its first two arguments, on all basis tuples.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let n = self.dim;
        let psi_col = |i: usize| self.psi.column(i);
        for i in 0..n {
            for j in 0..n {
                let lhs = self
                    .psi
                    .mul_vec(&self.product[i][j])
                    .expect("dims");
                let rhs = self
                    .product_eval(&psi_col(i), &psi_col(j))
                    .expect("dims");
                report.check("twist-homomorphism", &[i, j], &lhs, &rhs);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let assoc = |a: usize, b: usize| -> Vector {
                        let left = self
                            .product_eval(&self.product[a][b], &psi_col(k))
                            .expect("dims");
                        let right = self
                            .product_eval(&psi_col(a), &self.product[b][k])
                            .expect("dims");
                        &left - &right
                    };
                    report.check("left-symmetry", &[i, j, k], &assoc(i, j), &assoc(j, i));
                }
            }
        }
        report
    }

    /// The commutator bracket with the same twist, plus left multiplication
    /// as an action on the underlying space. Both outputs are verified.
    pub fn commutator(&self) -> Result<(HomLieAlgebra, Representation)> {
        if !self.validate().passed() {
            return Err(Error::precondition(
                "commutator requires a valid left-symmetric structure".to_string(),
            ));
        }
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let c = &self.product[i][j] - &self.product[j][i];
                if !c.is_zero() {
                    entries.push(((i, j), c));
                }
            }
        }
        let algebra = HomLieAlgebra::new(n, entries, self.psi.clone())?;
        if !algebra.validate().passed() {
            return Err(Error::Internal(
                "commutator of a valid left-symmetric structure must validate".to_string(),
            ));
        }
        let action = (0..n).map(|i| self.left_mul_matrix(i)).collect();
        let rep = Representation::new(algebra.clone(), self.psi.clone(), action)?;
        if !rep.check().passed() {
            return Err(Error::Internal(
                "left multiplication must act on the commutator algebra".to_string(),
            ));
        }
        Ok((algebra, rep))
    }
}

/// The left-symmetric product `u * v = (T u) . v` induced by an operator,
/// with the module twist carried over.
pub fn induced_hlsa(op: &OOperator) -> Result<HomLeftSymmetricAlgebra> {
    if !op.is_o_operator()? {
        return Err(Error::precondition(
            "the induced product requires the operator identities".to_string(),
        ));
    }
    let rep = op.rep();
    let m = rep.dim_v();
    let mut entries = Vec::new();
    for a in 0..m {
        let act = rep.action_of(&op.map().column(a))?;
        for b in 0..m {
            let c = act.column(b);
            if !c.is_zero() {
                entries.push(((a, b), c));
            }
        }
    }
    let h = HomLeftSymmetricAlgebra::new(m, entries, rep.twist_v().clone())?;
    if !h.validate().passed() {
        return Err(Error::Internal(
            "the induced product of an operator must be left-symmetric".to_string(),
        ));
    }
    Ok(h)
}

/// Plants the operator's graph bivector in the double built on the dual
/// module: the double is the semidirect product along the dualized action,
/// and the bivector wedges each dual module basis covector with its image.
/// Its squared bracket vanishes exactly when the twist-composed map
/// satisfies the operator identities.
pub fn build_r_from_t(op: &OOperator) -> Result<(HomLieAlgebra, Multivector)> {
    let rep = op.rep();
    let g = rep.algebra();
    if !rep.is_admissible() {
        return Err(Error::precondition(
            "the double construction requires an admissible action".to_string(),
        ));
    }
    if op.map().mul(rep.twist_v())? != g.twist().mul(op.map())? {
        return Err(Error::precondition(
            "the map must intertwine the twists".to_string(),
        ));
    }
    let dual_rep = rep.dual();
    let double = dual_rep.semidirect()?;
    let n = g.dim();
    let m = rep.dim_v();
    let total = n + m;
    let mut r = Multivector::zero(total, 2, Side::Primal);
    for a in 0..m {
        let covector = Multivector::monomial(total, Side::Primal, &[n + a])?;
        let image = Multivector::from_vector(
            Side::Primal,
            &op.map().column(a).concat(&Vector::zeros(m)),
        );
        r = r.add(&wedge(&covector, &image)?)?;
    }
    Ok((double, r))
}

/// The two extra twist conditions a regular left-symmetric structure needs
/// for its inverse-twist bivector to solve the Yang-Baxter equation in the
/// double of its commutator algebra. They are exactly admissibility of the
/// left-multiplication action, which is cross-checked.
pub fn hlsa_r(h: &HomLeftSymmetricAlgebra) -> Result<(HomLieAlgebra, Multivector)> {
    let psi_inv = h
        .psi()
        .invert()?
        .ok_or_else(|| Error::precondition("twist is not invertible".to_string()))?;
    let n = h.dim();
    let psi2 = h.psi().pow(2)?;
    for a in 0..n {
        for b in 0..n {
            let lhs = h.product_eval(&Vector::basis(n, a), &h.psi().column(b))?;
            let rhs = h.product_eval(&psi2.column(a), &h.psi().column(b))?;
            if lhs != rhs {
                return Err(Error::precondition(format!(
                    "twist-power condition fails on pair ({a}, {b}): {lhs:?} != {rhs:?}"
                )));
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in 0..n {
                let skew = &*h.product_basis(a, b) - h.product_basis(b, a);
                let lhs = h.psi().mul_vec(&h.product_eval(&skew, &Vector::basis(n, c))?)?;
                let rhs = &h.product_eval(
                    &Vector::basis(n, a),
                    &h.product_eval(&h.psi().column(b), &Vector::basis(n, c))?,
                )? - &h.product_eval(
                    &Vector::basis(n, b),
                    &h.product_eval(&h.psi().column(a), &Vector::basis(n, c))?,
                )?;
                if lhs != rhs {
                    return Err(Error::precondition(format!(
                        "derivation condition fails on triple ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    if !h.validate().passed() {
        return Err(Error::precondition(
            "construction requires a valid left-symmetric structure".to_string(),
        ));
    }
    let (_, rep) = h.commutator()?;
    // the two conditions passed above say precisely that the dualized
    // left-multiplication action acts; disagreement is a bug
    if !rep.is_admissible() {
        return Err(Error::Internal(
            "twist-condition routes disagree: direct checks passed, dual action fails"
                .to_string(),
        ));
    }
    let op = OOperator::new(rep, psi_inv)?;
    let (double, r) = build_r_from_t(&op)?;
    if !crate::rmatrix::schouten_square(&double, &r)?.is_zero() {
        return Err(Error::Internal(
            "the planted bivector must square to zero".to_string(),
        ));
    }
    Ok((double, r))
}

/// Solves `B(x * y, z) = -B(inv-twist(y), [x, twist(z)])` for the product,
/// given a nondegenerate antisymmetric twist-symmetric cyclic form on a
/// regular admissible algebra. The commutator of the result recovers the
/// algebra's own bracket.
pub fn hlsa_from_2cocycle(g: &HomLieAlgebra, b: &Matrix) -> Result<HomLeftSymmetricAlgebra> {
    let n = g.dim();
    if !g.validate().passed() {
        return Err(Error::precondition("algebra does not validate".to_string()));
    }
    let twist_inv = g
        .twist()
        .invert()?
        .ok_or_else(|| Error::precondition("twist is not regular".to_string()))?;
    if !g.is_admissible() {
        return Err(Error::precondition("algebra is not admissible".to_string()));
    }
    if b.rows() != n || b.cols() != n {
        return Err(Error::dim(format!(
            "form is {}x{}, algebra has dim {n}",
            b.rows(),
            b.cols()
        )));
    }
    if !b.is_antisymmetric() {
        return Err(Error::input("form must be antisymmetric".to_string()));
    }
    let b_inv = b
        .invert()?
        .ok_or_else(|| Error::precondition("form is degenerate".to_string()))?;
    let _ = b_inv;
    if g.twist().transpose().mul(b)? != b.mul(g.twist())? {
        return Err(Error::precondition(
            "form does not commute with the twist".to_string(),
        ));
    }
    let bf = |x: &Vector, y: &Vector| x.dot(&b.mul_vec(y).expect("dims"));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (
                    Vector::basis(n, i),
                    Vector::basis(n, j),
                    Vector::basis(n, k),
                );
                let sum = &(&bf(&x, &g.apply_twist(&g.bracket_eval(&y, &z)?))
                    + &bf(&z, &g.apply_twist(&g.bracket_eval(&x, &y)?)))
                    + &bf(&y, &g.apply_twist(&g.bracket_eval(&z, &x)?));
                if !sum.is_zero() {
                    return Err(Error::precondition(format!(
                        "cyclic form condition fails on triple ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    let bt = b.transpose();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut rhs = Vector::zeros(n);
            let pre = twist_inv.column(j);
            for k in 0..n {
                let arg = g.bracket_eval(&Vector::basis(n, i), &g.twist().column(k))?;
                rhs.set(k, -&bf(&pre, &arg));
            }
            let w = bt
                .solve_linear(&rhs)?
                .ok_or_else(|| Error::Internal("nondegenerate form must solve".to_string()))?;
            if !w.is_zero() {
                entries.push(((i, j), w));
            }
        }
    }
    let h = HomLeftSymmetricAlgebra::new(n, entries, g.twist().clone())?;
    if !h.validate().passed() {
        return Err(Error::Internal(
            "the solved product must be left-symmetric".to_string(),
        ));
    }
    let (commutator, _) = h.commutator()?;
    if &commutator != g {
        return Err(Error::Internal(
            "the commutator must recover the source bracket".to_string(),
        ));
    }
    Ok(h)
}

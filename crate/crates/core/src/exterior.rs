//! Graded exterior powers of the algebra and its dual, the wedge product,
//! the bracket extended to multivectors, and the actions `ad` / `ad*` on
//! them.
//!
//! Coefficients are stored on strictly increasing index tuples only; any
//! other order is normalized by permutation sign on entry. The pairing
//! between a dual and a primal multivector of equal grade is the determinant
//! pairing without a `1/k!` factor, so paired basis monomials with equal
//! sorted index sets pair to one.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::HomLieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Elements of the algebra's exterior powers.
    Primal,
    /// Elements of the dual space's exterior powers.
    Dual,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Multivector {
    dim: usize,
    grade: usize,
    side: Side,
    coeffs: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts indices, counting transpositions. `None` on a repeated index.
fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut idx = indices.to_vec();
    let mut negative = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, negative))
}

impl Multivector {
    pub fn zero(dim: usize, grade: usize, side: Side) -> Self {
        Multivector {
            dim,
            grade,
            side,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, side: Side, value: Rational) -> Self {
        let mut mv = Self::zero(dim, 0, side);
        mv.insert(vec![], value);
        mv
    }

    /// Grade-1 element with the given coordinates.
    pub fn from_vector(side: Side, v: &Vector) -> Self {
        let mut mv = Self::zero(v.len(), 1, side);
        for i in 0..v.len() {
            mv.insert(vec![i], v[i].clone());
        }
        mv
    }

    /// Basis monomial `e_{i_1} ^ ... ^ e_{i_k}` (0-based indices, any order).
    pub fn monomial(dim: usize, side: Side, indices: &[usize]) -> Result<Self> {
        if indices.iter().any(|&i| i >= dim) {
            return Err(Error::input(format!(
                "monomial index out of range for dim {dim}: {indices:?}"
            )));
        }
        let mut mv = Self::zero(dim, indices.len(), side);
        if let Some((key, negative)) = sort_with_sign(indices) {
            let c = if negative {
                -Rational::one()
            } else {
                Rational::one()
            };
            mv.insert(key, c);
        }
        Ok(mv)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coeffs.iter()
    }

    /// Coefficient on a strictly increasing key.
    pub fn coeff(&self, key: &[usize]) -> Rational {
        self.coeffs.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    fn insert(&mut self, key: Vec<usize>, value: Rational) {
        if value.is_zero() {
            return;
        }
        debug_assert!(key.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(key.len(), self.grade);
        let entry = self.coeffs.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term(&mut self, indices: &[usize], value: &Rational) {
        if value.is_zero() {
            return;
        }
        if let Some((key, negative)) = sort_with_sign(indices) {
            let v = if negative { -value } else { value.clone() };
            self.insert(key, v);
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (key, value) in &other.coeffs {
            out.insert(key.clone(), value.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Multivector {
        let mut out = Multivector::zero(self.dim, self.grade, self.side);
        if c.is_zero() {
            return out;
        }
        for (key, value) in &self.coeffs {
            out.insert(key.clone(), value * c);
        }
        out
    }

    fn compatible(&self, other: &Multivector) -> Result<()> {
        if self.dim != other.dim || self.grade != other.grade || self.side != other.side {
            return Err(Error::dim(format!(
                "multivector mismatch: ({}, grade {}, {:?}) vs ({}, grade {}, {:?})",
                self.dim, self.grade, self.side, other.dim, other.grade, other.side
            )));
        }
        Ok(())
    }

    /// Coordinates of a grade-1 element.
    pub fn as_vector(&self) -> Result<Vector> {
        if self.grade != 1 {
            return Err(Error::input(format!(
                "expected grade 1, got grade {}",
                self.grade
            )));
        }
        let mut v = Vector::zeros(self.dim);
        for (key, value) in &self.coeffs {
            v.set(key[0], value.clone());
        }
        Ok(v)
    }

    /// Applies a linear map to every factor of every monomial; this is the
    /// action of `m` on each tensor slot restricted to the exterior power.
    pub fn map_factors(&self, m: &Matrix) -> Result<Multivector> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::dim(format!(
                "factor map is {}x{}, expected {dim}x{dim}",
                m.rows(),
                m.cols(),
                dim = self.dim
            )));
        }
        let mut out = Multivector::zero(self.dim, self.grade, self.side);
        for (key, value) in &self.coeffs {
            let factors: Vec<Vector> = key.iter().map(|&i| m.column(i)).collect();
            let w = wedge_vectors(self.dim, self.side, &factors);
            out = out.add(&w.scale(value))?;
        }
        Ok(out)
    }

    /// Reinterprets the coordinates on the other side. Used when an algebra
    /// structure on the dual space is handled as an algebra in its own right.
    pub fn cast_side(&self, side: Side) -> Multivector {
        let mut out = self.clone();
        out.side = side;
        out
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0[grade {}]", self.grade);
        }
        let mark = match self.side {
            Side::Primal => "e",
            Side::Dual => "E",
        };
        let mut first = true;
        for (key, value) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let ids: Vec<String> = key.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{value}*{mark}({})", ids.join(","))?;
        }
        Ok(())
    }
}

/// Exterior product. Grades add; result is zero past the dimension.
pub fn wedge(p: &Multivector, q: &Multivector) -> Result<Multivector> {
    if p.side != q.side || p.dim != q.dim {
        return Err(Error::input(
            "wedge requires the same side and dimension".to_string(),
        ));
    }
    let mut out = Multivector::zero(p.dim, p.grade + q.grade, p.side);
    for (kp, vp) in &p.coeffs {
        for (kq, vq) in &q.coeffs {
            let mut indices = kp.clone();
            indices.extend_from_slice(kq);
            out.add_term(&indices, &(vp * vq));
        }
    }
    Ok(out)
}

/// Wedge of grade-1 coordinate vectors, expanded multilinearly.
pub fn wedge_vectors(dim: usize, side: Side, factors: &[Vector]) -> Multivector {
    let mut out = Multivector::scalar(dim, side, Rational::one());
    for v in factors {
        debug_assert_eq!(v.len(), dim);
        let mut next = Multivector::zero(dim, out.grade + 1, side);
        for (key, value) in &out.coeffs {
            for i in 0..dim {
                if v[i].is_zero() {
                    continue;
                }
                let mut indices = key.clone();
                indices.push(i);
                next.add_term(&indices, &(value * &v[i]));
            }
        }
        out = next;
    }
    out
}

/// Determinant pairing of a dual multivector against a primal one of the
/// same grade: matching sorted basis monomials pair to one.
pub fn pair(dual: &Multivector, primal: &Multivector) -> Result<Rational> {
    if dual.side != Side::Dual || primal.side != Side::Primal {
        return Err(Error::input(
            "pairing takes a dual element first and a primal element second".to_string(),
        ));
    }
    if dual.dim != primal.dim || dual.grade != primal.grade {
        return Err(Error::dim(format!(
            "pairing mismatch: grade {} dim {} vs grade {} dim {}",
            dual.grade, dual.dim, primal.grade, primal.dim
        )));
    }
    let mut acc = Rational::zero();
    for (key, value) in &dual.coeffs {
        if let Some(other) = primal.coeffs.get(key) {
            acc += &(value * other);
        }
    }
    Ok(acc)
}

/// The bracket extended to multivectors: on monomials it brackets one factor
/// from each side and twists all the remaining factors, summed with
/// alternating signs over the choice of bracketed pair.
pub fn extended_bracket(
    g: &HomLieAlgebra,
    p: &Multivector,
    q: &Multivector,
) -> Result<Multivector> {
    for mv in [p, q] {
        if mv.side != Side::Primal {
            return Err(Error::input(
                "extended bracket is defined on primal multivectors".to_string(),
            ));
        }
        if mv.grade == 0 {
            return Err(Error::input(
                "extended bracket is not defined on grade 0".to_string(),
            ));
        }
        if mv.dim != g.dim() {
            return Err(Error::dim(format!(
                "multivector over dim {}, algebra has dim {}",
                mv.dim,
                g.dim()
            )));
        }
    }
    let dim = g.dim();
    let (m, n) = (p.grade, q.grade);
    let mut out = Multivector::zero(dim, m + n - 1, Side::Primal);
    let twisted: Vec<Vector> = (0..dim).map(|i| g.twist().column(i)).collect();
    for (kx, vx) in &p.coeffs {
        for (ky, vy) in &q.coeffs {
            let scale = vx * vy;
            for a in 0..m {
                for b in 0..n {
                    // positions are 1-based in the sign
                    let negative = (a + b) % 2 != 0;
                    let mut factors = Vec::with_capacity(m + n - 1);
                    factors.push(g.bracket_basis(kx[a], ky[b]));
                    for (r, &i) in kx.iter().enumerate() {
                        if r != a {
                            factors.push(twisted[i].clone());
                        }
                    }
                    for (s, &j) in ky.iter().enumerate() {
                        if s != b {
                            factors.push(twisted[j].clone());
                        }
                    }
                    let term = wedge_vectors(dim, Side::Primal, &factors);
                    let signed = if negative {
                        term.scale(&-&scale)
                    } else {
                        term.scale(&scale)
                    };
                    out = out.add(&signed)?;
                }
            }
        }
    }
    Ok(out)
}

/// `ad_x` on a primal multivector, i.e. the extended bracket with a grade-1
/// left argument. Preserves the grade.
pub fn ad_multi(g: &HomLieAlgebra, x: &Vector, p: &Multivector) -> Result<Multivector> {
    extended_bracket(g, &Multivector::from_vector(Side::Primal, x), p)
}

/// `ad*_x` on a dual multivector: one factor is hit by the grade-1 coadjoint
/// action, all others by the dual twist, summed over the choice of factor.
pub fn ad_star_multi(g: &HomLieAlgebra, x: &Vector, phi: &Multivector) -> Result<Multivector> {
    if phi.side != Side::Dual {
        return Err(Error::input(
            "ad* acts on dual multivectors".to_string(),
        ));
    }
    if phi.dim != g.dim() {
        return Err(Error::dim(format!(
            "multivector over dim {}, algebra has dim {}",
            phi.dim,
            g.dim()
        )));
    }
    let dim = g.dim();
    let coad = g.coad_of(x)?;
    let dual_twist = g.dual_twist();
    let mut out = Multivector::zero(dim, phi.grade, Side::Dual);
    for (key, value) in &phi.coeffs {
        for t in 0..key.len() {
            let factors: Vec<Vector> = key
                .iter()
                .enumerate()
                .map(|(s, &i)| {
                    let basis = Vector::basis(dim, i);
                    if s == t {
                        coad.mul_vec(&basis).expect("dims")
                    } else {
                        dual_twist.mul_vec(&basis).expect("dims")
                    }
                })
                .collect();
            let term = wedge_vectors(dim, Side::Dual, &factors);
            out = out.add(&term.scale(value))?;
        }
    }
    Ok(out)
}

/// Evaluates a grade-3 primal `w` against two covectors, producing the
/// element of the algebra paired by the third slot: the result `u` satisfies
/// `<gamma, u> = pair(xi ^ eta ^ gamma, w)` for every covector `gamma`.
pub fn trivector_contract(w: &Multivector, xi: &Vector, eta: &Vector) -> Result<Vector> {
    if w.side != Side::Primal || w.grade != 3 {
        return Err(Error::input(
            "contraction expects a primal grade-3 multivector".to_string(),
        ));
    }
    let dim = w.dim;
    let mut out = Vector::zeros(dim);
    for k in 0..dim {
        let probe = wedge_vectors(
            dim,
            Side::Dual,
            &[xi.clone(), eta.clone(), Vector::basis(dim, k)],
        );
        out.set(k, pair(&probe, w)?);
    }
    Ok(out)
}

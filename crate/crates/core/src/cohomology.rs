//! Twist-compatible cochains with module values, the coboundary operator,
//! its trivial-coefficient specialization, 2-cocycles, and the Maurer-Cartan
//! defect of a bivector over a bialgebra.

use std::collections::BTreeMap;

use crate::algebra::HomLieAlgebra;
use crate::bialgebra::HomLieBialgebra;
use crate::error::{Error, Result};
use crate::exterior::{extended_bracket, wedge_vectors, Multivector, Side};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;
use crate::rep::Representation;
use crate::validation::ValidationReport;

/// Alternating multilinear map from the algebra to a module, stored on
/// strictly increasing basis tuples. Grade 0 is a single module element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    grade: usize,
    dim_g: usize,
    dim_v: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl Cochain {
    pub fn new(
        grade: usize,
        dim_g: usize,
        dim_v: usize,
        entries: Vec<(Vec<usize>, Vector)>,
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (key, value) in entries {
            if key.len() != grade {
                return Err(Error::input(format!(
                    "key {key:?} has length {}, expected grade {grade}",
                    key.len()
                )));
            }
            if key.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::input(format!(
                    "key {key:?} must be strictly increasing"
                )));
            }
            if key.iter().any(|&i| i >= dim_g) {
                return Err(Error::input(format!(
                    "key {key:?} out of range for dim {dim_g}"
                )));
            }
            if value.len() != dim_v {
                return Err(Error::dim(format!(
                    "value for key {key:?} has length {}, expected {dim_v}",
                    value.len()
                )));
            }
            if value.is_zero() {
                continue;
            }
            if values.insert(key.clone(), value).is_some() {
                return Err(Error::input(format!("duplicate cochain key {key:?}")));
            }
        }
        Ok(Cochain {
            grade,
            dim_g,
            dim_v,
            values,
        })
    }

    pub fn zero(grade: usize, dim_g: usize, dim_v: usize) -> Self {
        Cochain {
            grade,
            dim_g,
            dim_v,
            values: BTreeMap::new(),
        }
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.values.iter()
    }

    /// Value on a strictly increasing key.
    pub fn value(&self, key: &[usize]) -> Vector {
        self.values
            .get(key)
            .cloned()
            .unwrap_or_else(|| Vector::zeros(self.dim_v))
    }

    /// Value on basis indices in any order, by the alternating extension.
    pub fn eval_basis(&self, indices: &[usize]) -> Vector {
        assert_eq!(indices.len(), self.grade);
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
            return Vector::zeros(self.dim_v);
        }
        let v = self.value(&idx);
        if negative {
            -&v
        } else {
            v
        }
    }

    /// Multilinear evaluation on arbitrary arguments.
    pub fn eval(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.grade {
            return Err(Error::dim(format!(
                "{} arguments for a grade-{} cochain",
                args.len(),
                self.grade
            )));
        }
        if args.iter().any(|v| v.len() != self.dim_g) {
            return Err(Error::dim("argument of wrong length".to_string()));
        }
        // expand the wedge of the arguments and read values off sorted keys
        let w = wedge_vectors(self.dim_g, Side::Primal, args);
        let mut out = Vector::zeros(self.dim_v);
        for (key, c) in w.entries() {
            out.add_scaled(&self.value(key), c);
        }
        Ok(out)
    }

    /// Twist compatibility: the module twist applied to every value agrees
    /// with precomposing every slot by the algebra twist.
    pub fn is_hom(&self, rep: &Representation) -> Result<bool> {
        self.shapes_match(rep)?;
        let g = rep.algebra();
        let a = rep.twist_v();
        for key in keys(self.dim_g, self.grade) {
            let lhs = a.mul_vec(&self.value(&key))?;
            let twisted: Vec<Vector> = key.iter().map(|&i| g.twist().column(i)).collect();
            let rhs = self.eval(&twisted)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn shapes_match(&self, rep: &Representation) -> Result<()> {
        if self.dim_g != rep.algebra().dim() || self.dim_v != rep.dim_v() {
            return Err(Error::dim(format!(
                "cochain over ({}, {}) against an action over ({}, {})",
                self.dim_g,
                self.dim_v,
                rep.algebra().dim(),
                rep.dim_v()
            )));
        }
        Ok(())
    }
}

/// Strictly increasing `k`-tuples from `0..n`.
pub(crate) fn keys(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // advance the combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
        }
        current[i] += 1;
        for j in (i + 1)..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// The coboundary operator with module coefficients: one sum acting by the
/// `grade`-fold twisted element on deleted slots, one sum bracketing a pair
/// of slots and twisting the rest. Defined on twist-compatible cochains and
/// landing in them; applying it twice gives zero.
pub fn coboundary(rep: &Representation, f: &Cochain) -> Result<Cochain> {
    if !f.is_hom(rep)? {
        return Err(Error::precondition(
            "coboundary is defined on twist-compatible cochains".to_string(),
        ));
    }
    let g = rep.algebra();
    let n = g.dim();
    let k = f.grade;
    let twist_pow = g.twist().pow(k)?;
    let mut entries = Vec::new();
    for key in keys(n, k + 1) {
        let mut acc = Vector::zeros(f.dim_v);
        for (pos, &t) in key.iter().enumerate() {
            let rest: Vec<usize> = key
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != pos)
                .map(|(_, &v)| v)
                .collect();
            let coeff_matrix = rep.action_of(&twist_pow.column(t))?;
            let term = coeff_matrix.mul_vec(&f.value(&rest))?;
            if pos % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        for a in 0..key.len() {
            for b in (a + 1)..key.len() {
                let mut args = Vec::with_capacity(k);
                args.push(g.bracket_basis(key[a], key[b]));
                for (q, &t) in key.iter().enumerate() {
                    if q != a && q != b {
                        args.push(g.twist().column(t));
                    }
                }
                let term = f.eval(&args)?;
                // 1-based positions sum to (a + b + 2), so parity flips on
                // odd (a + b)
                if (a + b) % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
        }
        if !acc.is_zero() {
            entries.push((key, acc));
        }
    }
    Cochain::new(k + 1, n, f.dim_v, entries)
}

/// The scalar-coefficient coboundary: only the bracketing sum survives.
/// Defined on cochains fixed by precomposition with the twist.
pub fn trivial_coboundary(g: &HomLieAlgebra, f: &Cochain) -> Result<Cochain> {
    if f.dim_v != 1 {
        return Err(Error::dim(
            "scalar coboundary expects one-dimensional values".to_string(),
        ));
    }
    if f.dim_g != g.dim() {
        return Err(Error::dim(format!(
            "cochain over dim {}, algebra has dim {}",
            f.dim_g,
            g.dim()
        )));
    }
    for key in keys(g.dim(), f.grade) {
        let twisted: Vec<Vector> = key.iter().map(|&i| g.twist().column(i)).collect();
        if f.eval(&twisted)? != f.value(&key) {
            return Err(Error::precondition(
                "cochain is not fixed by the twist".to_string(),
            ));
        }
    }
    let k = f.grade;
    let n = g.dim();
    let mut entries = Vec::new();
    for key in keys(n, k + 1) {
        let mut acc = Vector::zeros(1);
        for a in 0..key.len() {
            for b in (a + 1)..key.len() {
                let mut args = Vec::with_capacity(k);
                args.push(g.bracket_basis(key[a], key[b]));
                for (q, &t) in key.iter().enumerate() {
                    if q != a && q != b {
                        args.push(g.twist().column(t));
                    }
                }
                let term = f.eval(&args)?;
                if (a + b) % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
        }
        if !acc.is_zero() {
            entries.push((key, acc));
        }
    }
    Cochain::new(k + 1, n, 1, entries)
}

/// Cyclic cocycle condition for an antisymmetric bilinear form: the sum of
/// `B(t(x), [y, z])` over cyclic permutations vanishes on all basis triples.
/// The sum is alternating, so strictly increasing triples are exhaustive.
pub fn two_cocycle_report(g: &HomLieAlgebra, b: &Matrix) -> Result<ValidationReport> {
    let n = g.dim();
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
    let mut report = ValidationReport::new();
    let eval = |x: &Vector, y: &Vector| -> Rational { x.dot(&b.mul_vec(y).expect("dims")) };
    for key in keys(n, 3) {
        let (i, j, k) = (key[0], key[1], key[2]);
        let tx = |i: usize| g.twist().column(i);
        let sum = &(&eval(&tx(i), &g.bracket_basis(j, k)) + &eval(&tx(j), &g.bracket_basis(k, i)))
            + &eval(&tx(k), &g.bracket_basis(i, j));
        report.check_scalar("cyclic-cocycle", &key, &sum, &Rational::zero());
    }
    Ok(report)
}

pub fn is_two_cocycle(g: &HomLieAlgebra, b: &Matrix) -> Result<bool> {
    Ok(two_cocycle_report(g, b)?.passed())
}

/// Reads a primal bivector as a scalar 2-cochain on the dual algebra.
pub fn bivector_as_dual_cochain(r: &Multivector) -> Result<Cochain> {
    if r.side() != Side::Primal || r.grade() != 2 {
        return Err(Error::input("expected a primal bivector".to_string()));
    }
    let entries = r
        .entries()
        .map(|(key, c)| (key.clone(), Vector::from_entries(vec![c.clone()])))
        .collect();
    Cochain::new(2, r.dim(), 1, entries)
}

/// `d*_T R + (1/2) [R, R]` as a primal trivector: the scalar coboundary of
/// `R` over the dual algebra plus half the squared extended bracket. Zero
/// exactly when the graph of the induced map closes in the double.
pub fn maurer_cartan_defect(b: &HomLieBialgebra, r: &Multivector) -> Result<Multivector> {
    let g = b.algebra();
    if r.side() != Side::Primal || r.grade() != 2 || r.dim() != g.dim() {
        return Err(Error::input(
            "expected a primal bivector over the bialgebra's algebra".to_string(),
        ));
    }
    if r.map_factors(g.twist())? != *r {
        return Err(Error::precondition(
            "bivector is not twist-invariant".to_string(),
        ));
    }
    let dual = b.dual_algebra();
    let cochain = bivector_as_dual_cochain(r)?;
    let d = trivial_coboundary(&dual, &cochain)?;
    let mut defect = Multivector::zero(g.dim(), 3, Side::Primal);
    for (key, value) in d.entries() {
        let mono = Multivector::monomial(g.dim(), Side::Primal, key)?;
        defect = defect.add(&mono.scale(&value[0]))?;
    }
    let square = extended_bracket(g, r, r)?;
    defect.add(&square.scale(&Rational::new(1, 2)))
}

/// Basis of the space of twist-compatible cochains of a given grade, via the
/// kernel of the linear compatibility constraint.
pub fn hom_cochain_basis(rep: &Representation, grade: usize) -> Result<Vec<Cochain>> {
    let g = rep.algebra();
    let n = g.dim();
    let m = rep.dim_v();
    let a = rep.twist_v();
    let all_keys = keys(n, grade);
    let var = |key_idx: usize, coord: usize| key_idx * m + coord;
    let nvars = all_keys.len() * m;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (ki, key) in all_keys.iter().enumerate() {
        // minors of the twist give the coefficients of f on twisted slots
        let twisted: Vec<Vector> = key.iter().map(|&i| g.twist().column(i)).collect();
        let expansion = wedge_vectors(n, Side::Primal, &twisted);
        for coord in 0..m {
            let mut row = vec![Rational::zero(); nvars];
            for b_coord in 0..m {
                row[var(ki, b_coord)] = a.get(coord, b_coord).clone();
            }
            for (kj, other) in all_keys.iter().enumerate() {
                let c = expansion.coeff(other);
                if !c.is_zero() {
                    row[var(kj, coord)] = &row[var(kj, coord)] - &c;
                }
            }
            rows.push(row);
        }
    }
    let constraint = Matrix::from_rows(rows)?;
    let kernel = constraint.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.len());
    for solution in kernel {
        let mut entries = Vec::new();
        for (ki, key) in all_keys.iter().enumerate() {
            let value =
                Vector::from_entries((0..m).map(|c| solution[var(ki, c)].clone()).collect());
            if !value.is_zero() {
                entries.push((key.clone(), value));
            }
        }
        basis.push(Cochain::new(grade, n, m, entries)?);
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aff1() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::identity(2),
        )
        .unwrap()
    }

    fn heis3() -> HomLieAlgebra {
        HomLieAlgebra::new(
            3,
            vec![((0, 1), Vector::from_ints(&[0, 0, 1]))],
            Matrix::identity(3),
        )
        .unwrap()
    }

    #[test]
    fn keys_enumeration() {
        assert_eq!(keys(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(keys(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(keys(2, 3), Vec::<Vec<usize>>::new());
        assert_eq!(keys(4, 3).len(), 4);
    }

    #[test]
    fn eval_alternates() {
        let f = Cochain::new(
            2,
            3,
            1,
            vec![(vec![0, 1], Vector::from_ints(&[1]))],
        )
        .unwrap();
        assert_eq!(f.eval_basis(&[1, 0]), Vector::from_ints(&[-1]));
        assert!(f.eval_basis(&[1, 1]).is_zero());
    }

    #[test]
    fn every_cochain_is_hom_under_identity_twists() {
        let rep = Representation::adjoint(&aff1());
        let f = Cochain::new(
            1,
            2,
            2,
            vec![
                (vec![0], Vector::from_ints(&[3, 1])),
                (vec![1], Vector::from_ints(&[0, -2])),
            ],
        )
        .unwrap();
        assert!(f.is_hom(&rep).unwrap());
    }

    #[test]
    fn zero_cochain_is_always_hom() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        let rep = Representation::adjoint(&g);
        let f = Cochain::zero(1, 2, 2);
        assert!(f.is_hom(&rep).unwrap());
    }

    #[test]
    fn scalar_coboundary_of_degree_one() {
        // f = dual basis covector on the second slot; df(x, y) = -f([x, y])
        let g = aff1();
        let f = Cochain::new(1, 2, 1, vec![(vec![1], Vector::from_ints(&[1]))]).unwrap();
        let df = trivial_coboundary(&g, &f).unwrap();
        assert_eq!(df.value(&[0, 1]), Vector::from_ints(&[-1]));
    }

    #[test]
    fn scalar_coboundary_vanishes_on_heisenberg_top_form() {
        let g = heis3();
        let f = Cochain::new(2, 3, 1, vec![(vec![0, 1], Vector::from_ints(&[1]))]).unwrap();
        let df = trivial_coboundary(&g, &f).unwrap();
        assert!(df.is_zero());
    }

    #[test]
    fn scalar_coboundary_matches_module_coboundary_with_trivial_action() {
        let g = heis3();
        let rep = Representation::trivial(&g, Matrix::identity(1)).unwrap();
        for f in [
            Cochain::new(1, 3, 1, vec![(vec![2], Vector::from_ints(&[4]))]).unwrap(),
            Cochain::new(
                2,
                3,
                1,
                vec![
                    (vec![0, 1], Vector::from_ints(&[1])),
                    (vec![1, 2], Vector::from_ints(&[-3])),
                ],
            )
            .unwrap(),
        ] {
            assert_eq!(
                trivial_coboundary(&g, &f).unwrap(),
                coboundary(&rep, &f).unwrap()
            );
        }
    }

    #[test]
    fn coboundary_of_identity_cochain() {
        // with the adjoint action the identity cochain differentiates to the
        // bracket itself
        let g = aff1();
        let rep = Representation::adjoint(&g);
        let f = Cochain::new(
            1,
            2,
            2,
            vec![
                (vec![0], Vector::basis(2, 0)),
                (vec![1], Vector::basis(2, 1)),
            ],
        )
        .unwrap();
        let df = coboundary(&rep, &f).unwrap();
        assert_eq!(df.value(&[0, 1]), Vector::basis(2, 1));
    }

    #[test]
    fn coboundary_squares_to_zero_spot_check() {
        let g = heis3();
        let rep = Representation::adjoint(&g);
        let f = Cochain::new(
            1,
            3,
            3,
            vec![
                (vec![0], Vector::from_ints(&[0, 1, 0])),
                (vec![2], Vector::from_ints(&[2, 0, -1])),
            ],
        )
        .unwrap();
        let ddf = coboundary(&rep, &coboundary(&rep, &f).unwrap()).unwrap();
        assert!(ddf.is_zero());
    }

    #[test]
    fn coboundary_rejects_incompatible_cochain() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        let rep = Representation::adjoint(&g);
        let f = Cochain::new(1, 2, 2, vec![(vec![1], Vector::basis(2, 0))]).unwrap();
        assert!(!f.is_hom(&rep).unwrap());
        assert!(coboundary(&rep, &f).is_err());
    }

    #[test]
    fn two_cocycle_cases() {
        // no triples below dimension three
        assert!(is_two_cocycle(&aff1(), &Matrix::from_int_rows(&[&[0, 1], &[-1, 0]])).unwrap());
        let g = heis3();
        let b = Matrix::from_int_rows(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        assert!(is_two_cocycle(&g, &b).unwrap());
        let abelian = HomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap();
        assert!(is_two_cocycle(&abelian, &b).unwrap());
        // symmetric input is rejected
        assert!(is_two_cocycle(&g, &Matrix::identity(3)).is_err());
    }

    #[test]
    fn two_cocycle_can_fail() {
        // [e_0, e_1] = e_2, [e_0, e_2] = e_2: the cyclic sum on (0, 1, 2)
        // collapses to -B(e_1, e_2)
        let g = HomLieAlgebra::new(
            3,
            vec![
                ((0, 1), Vector::from_ints(&[0, 0, 1])),
                ((0, 2), Vector::from_ints(&[0, 0, 1])),
            ],
            Matrix::identity(3),
        )
        .unwrap();
        let b = Matrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]);
        assert!(!is_two_cocycle(&g, &b).unwrap());
    }

    #[test]
    fn defect_over_abelian_dual_is_half_the_square() {
        // zero dual bracket kills the scalar coboundary term entirely
        let b = HomLieBialgebra::new(heis3(), vec![]).unwrap();
        assert!(b.check().passed());
        let r = Multivector::monomial(3, Side::Primal, &[0, 1]).unwrap();
        let defect = maurer_cartan_defect(&b, &r).unwrap();
        let half_square =
            extended_bracket(&heis3(), &r, &r).unwrap().scale(&Rational::new(1, 2));
        assert_eq!(defect, half_square);
        assert_eq!(defect.coeff(&[0, 1, 2]), Rational::one());
        // and the zero bivector has no defect at all
        let zero = Multivector::zero(3, 2, Side::Primal);
        assert!(maurer_cartan_defect(&b, &zero).unwrap().is_zero());
    }

    #[test]
    fn defect_rejects_twist_variant_bivectors() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        let b = HomLieBialgebra::new(g, vec![]).unwrap();
        let r = Multivector::monomial(2, Side::Primal, &[0, 1]).unwrap();
        assert!(maurer_cartan_defect(&b, &r).is_err());
    }

    #[test]
    fn hom_cochain_space_shrinks_under_scaling_twists() {
        let free = Representation::adjoint(&aff1());
        assert_eq!(hom_cochain_basis(&free, 1).unwrap().len(), 4);
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        let rep = Representation::adjoint(&g);
        let basis = hom_cochain_basis(&rep, 1).unwrap();
        assert!(basis.len() < 4);
        for f in &basis {
            assert!(f.is_hom(&rep).unwrap());
        }
    }
}

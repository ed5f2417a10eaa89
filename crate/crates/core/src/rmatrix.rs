//! Bivectors as candidate solutions of the twisted classical Yang-Baxter
//! equation: the induced map, the 0-cochain condition, the squared bracket
//! and its invariance, the induced dual bracket, the coboundary-bialgebra
//! construction, and the cocycle-form equivalence for invertible bivectors.

use crate::algebra::HomLieAlgebra;
use crate::bialgebra::HomLieBialgebra;
use crate::error::{Error, Result};
use crate::exterior::{ad_multi, extended_bracket, trivector_contract, Multivector, Side};
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;

fn expect_bivector(g: &HomLieAlgebra, r: &Multivector) -> Result<()> {
    if r.side() != Side::Primal || r.grade() != 2 {
        return Err(Error::input("expected a primal bivector".to_string()));
    }
    if r.dim() != g.dim() {
        return Err(Error::dim(format!(
            "bivector over dim {}, algebra has dim {}",
            r.dim(),
            g.dim()
        )));
    }
    Ok(())
}

/// Matrix of the induced map from covectors to vectors: column `i` is the
/// image of the `i`-th dual basis covector, with `<image, e^k>` read off the
/// bivector's antisymmetric coefficient table.
pub fn r_sharp(g: &HomLieAlgebra, r: &Multivector) -> Result<Matrix> {
    expect_bivector(g, r)?;
    let n = g.dim();
    let mut m = Matrix::zeros(n, n);
    for (key, value) in r.entries() {
        let (i, k) = (key[0], key[1]);
        m.set(k, i, value.clone());
        m.set(i, k, -value);
    }
    Ok(m)
}

/// The 0-cochain condition in both of its forms: conjugating the induced
/// map by the twists returns it, and the factorwise twist fixes the
/// bivector. The two are equivalent, so disagreement is an internal error.
pub fn check_zero_cochain(g: &HomLieAlgebra, r: &Multivector) -> Result<bool> {
    expect_bivector(g, r)?;
    let rs = r_sharp(g, r)?;
    let via_map = g.twist().mul(&rs)?.mul(&g.dual_twist())? == rs;
    let via_factors = r.map_factors(g.twist())? == *r;
    if via_map != via_factors {
        return Err(Error::Internal(format!(
            "0-cochain formulations disagree: map={via_map}, factors={via_factors}"
        )));
    }
    Ok(via_map)
}

/// The squared extended bracket `[r, r]`; the twisted Yang-Baxter equation
/// holds exactly when this trivector vanishes.
pub fn schouten_square(g: &HomLieAlgebra, r: &Multivector) -> Result<Multivector> {
    expect_bivector(g, r)?;
    extended_bracket(g, r, r)
}

/// Invariance of the squared bracket: every basis element acts to zero on it.
pub fn check_invariance(g: &HomLieAlgebra, r: &Multivector) -> Result<bool> {
    let square = schouten_square(g, r)?;
    for i in 0..g.dim() {
        if !ad_multi(g, &Vector::basis(g.dim(), i), &square)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bracket induced on covectors by the bivector: each argument is
/// twisted, pushed through the induced map, and acts coadjointly on the
/// other. Requires a regular admissible algebra, where the formula applies
/// to every covector.
pub fn induced_dual_bracket(
    g: &HomLieAlgebra,
    r: &Multivector,
) -> Result<Vec<((usize, usize), Vector)>> {
    expect_bivector(g, r)?;
    if g.twist().invert()?.is_none() {
        return Err(Error::precondition(
            "the induced dual bracket requires a regular twist".to_string(),
        ));
    }
    if !g.is_admissible() {
        return Err(Error::precondition(
            "the induced dual bracket requires an admissible algebra".to_string(),
        ));
    }
    let n = g.dim();
    let push = r_sharp(g, r)?.mul(&g.dual_twist())?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let ui = push.column(i);
            let uj = push.column(j);
            let value = &g.coad_of(&ui)?.mul_vec(&Vector::basis(n, j))?
                - &g.coad_of(&uj)?.mul_vec(&Vector::basis(n, i))?;
            if !value.is_zero() {
                entries.push(((i, j), value));
            }
        }
    }
    Ok(entries)
}

/// Builds the bialgebra whose dual bracket is induced by the bivector.
/// Preconditions (regularity, admissibility, the 0-cochain condition, and
/// invariance of the squared bracket) are checked and named on failure.
pub fn build_coboundary_bialgebra(
    g: &HomLieAlgebra,
    r: &Multivector,
) -> Result<HomLieBialgebra> {
    expect_bivector(g, r)?;
    if !g.validate().passed() {
        return Err(Error::precondition("algebra does not validate".to_string()));
    }
    if g.twist().invert()?.is_none() {
        return Err(Error::precondition("twist is not regular".to_string()));
    }
    if !g.is_admissible() {
        return Err(Error::precondition("algebra is not admissible".to_string()));
    }
    if !check_zero_cochain(g, r)? {
        return Err(Error::precondition(
            "bivector fails the 0-cochain condition".to_string(),
        ));
    }
    if !check_invariance(g, r)? {
        return Err(Error::precondition(
            "squared bracket is not invariant".to_string(),
        ));
    }
    HomLieBialgebra::new(g.clone(), induced_dual_bracket(g, r)?)
}

/// The closed-form defect of the compatibility between the induced dual
/// bracket and the squared bracket: bracketing the pushed covectors, minus
/// the push of their dual bracket, minus half the squared bracket evaluated
/// against them. Identically zero under the stated preconditions.
pub fn lemma_defect(
    g: &HomLieAlgebra,
    r: &Multivector,
    xi: &Vector,
    eta: &Vector,
) -> Result<Vector> {
    expect_bivector(g, r)?;
    let n = g.dim();
    if xi.len() != n || eta.len() != n {
        return Err(Error::dim("covector of wrong length".to_string()));
    }
    if !check_zero_cochain(g, r)? {
        return Err(Error::precondition(
            "bivector fails the 0-cochain condition".to_string(),
        ));
    }
    let push = r_sharp(g, r)?.mul(&g.dual_twist())?;
    let dual = HomLieAlgebra::new(n, induced_dual_bracket(g, r)?, g.dual_twist())?;
    let term1 = g.bracket_eval(&push.mul_vec(xi)?, &push.mul_vec(eta)?)?;
    let term2 = push.mul_vec(&dual.bracket_eval(xi, eta)?)?;
    let half_square = schouten_square(g, r)?.scale(&Rational::new(1, 2));
    let term3 = trivector_contract(&half_square, xi, eta)?;
    Ok(&(&term1 - &term2) - &term3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormEquivalence {
    /// The squared bracket vanishes.
    pub chybe: bool,
    /// The cyclic identity of the inverse-induced form holds on all basis
    /// triples.
    pub cyclic_identity: bool,
}

/// For an invertible bivector over a regular admissible algebra, computes
/// both sides of the equivalence between the Yang-Baxter property and the
/// cyclic identity of the form `B(x, y) = <inverse(x), y>`.
pub fn bform_equivalence(g: &HomLieAlgebra, r: &Multivector) -> Result<FormEquivalence> {
    expect_bivector(g, r)?;
    if g.twist().invert()?.is_none() {
        return Err(Error::precondition("twist is not regular".to_string()));
    }
    if !g.is_admissible() {
        return Err(Error::precondition("algebra is not admissible".to_string()));
    }
    if !check_zero_cochain(g, r)? {
        return Err(Error::precondition(
            "bivector fails the 0-cochain condition".to_string(),
        ));
    }
    let inv = r_sharp(g, r)?
        .invert()?
        .ok_or_else(|| Error::precondition("bivector is not invertible".to_string()))?;
    let n = g.dim();
    // B(x, y) pairs the inverse image of x against y
    let b = |x: &Vector, y: &Vector| -> Rational { inv.mul_vec(x).expect("dims").dot(y) };
    let chybe = schouten_square(g, r)?.is_zero();
    let mut cyclic = true;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (
                    Vector::basis(n, i),
                    Vector::basis(n, j),
                    Vector::basis(n, k),
                );
                let sum = &(&b(&x, &g.apply_twist(&g.bracket_eval(&y, &z)?))
                    + &b(&z, &g.apply_twist(&g.bracket_eval(&x, &y)?)))
                    + &b(&y, &g.apply_twist(&g.bracket_eval(&z, &x)?));
                if !sum.is_zero() {
                    cyclic = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(FormEquivalence {
        chybe,
        cyclic_identity: cyclic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::pair;

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

    fn e12(dim: usize) -> Multivector {
        Multivector::monomial(dim, Side::Primal, &[0, 1]).unwrap()
    }

    #[test]
    fn r_sharp_of_plane_element() {
        let g = aff1();
        let m = r_sharp(&g, &e12(2)).unwrap();
        // first covector maps to e_1, second to -e_0
        assert_eq!(m.column(0), Vector::from_ints(&[0, 1]));
        assert_eq!(m.column(1), Vector::from_ints(&[-1, 0]));
        assert!(m.is_antisymmetric());
    }

    #[test]
    fn r_sharp_zero() {
        let g = aff1();
        let z = Multivector::zero(2, 2, Side::Primal);
        assert!(r_sharp(&g, &z).unwrap().is_zero());
    }

    #[test]
    fn r_sharp_block_of_sum() {
        let g = HomLieAlgebra::abelian(4, Matrix::identity(4)).unwrap();
        let r = e12(4)
            .add(&Multivector::monomial(4, Side::Primal, &[2, 3]).unwrap())
            .unwrap();
        let m = r_sharp(&g, &r).unwrap();
        assert_eq!(m.column(2), Vector::from_ints(&[0, 0, 0, 1]));
        assert_eq!(m.column(3), Vector::from_ints(&[0, 0, -1, 0]));
        assert_eq!(m.column(0), Vector::from_ints(&[0, 1, 0, 0]));
    }

    #[test]
    fn zero_cochain_under_identity_twist() {
        let g = aff1();
        assert!(check_zero_cochain(&g, &e12(2)).unwrap());
    }

    #[test]
    fn zero_cochain_fails_under_scaling() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        assert!(!check_zero_cochain(&g, &e12(2)).unwrap());
    }

    #[test]
    fn zero_cochain_survives_rotation() {
        let g = HomLieAlgebra::abelian(
            2,
            Matrix::from_int_rows(&[&[0, -1], &[1, 0]]),
        )
        .unwrap();
        assert!(check_zero_cochain(&g, &e12(2)).unwrap());
    }

    #[test]
    fn square_vanishes_in_dim_two() {
        let g = aff1();
        assert!(schouten_square(&g, &e12(2)).unwrap().is_zero());
    }

    #[test]
    fn square_on_heisenberg_plane() {
        // the plane bivector squares to twice the volume form here
        let g = heis3();
        let s = schouten_square(&g, &e12(3)).unwrap();
        assert_eq!(s.coeff(&[0, 1, 2]), Rational::int(2));
        // and that square is still invariant
        assert!(check_invariance(&g, &e12(3)).unwrap());
    }

    #[test]
    fn invariance_trivial_for_abelian() {
        let g = HomLieAlgebra::abelian(3, Matrix::identity(3)).unwrap();
        assert!(check_invariance(&g, &e12(3)).unwrap());
    }

    #[test]
    fn induced_bracket_on_aff1() {
        let g = aff1();
        let entries = induced_dual_bracket(&g, &e12(2)).unwrap();
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].0, (0, 1));
        assert_eq!(entries[0].1, Vector::from_ints(&[1, 0]));
    }

    #[test]
    fn induced_bracket_zero_cases() {
        let g = aff1();
        let z = Multivector::zero(2, 2, Side::Primal);
        assert!(induced_dual_bracket(&g, &z).unwrap().is_empty());
        let ab = HomLieAlgebra::abelian(2, Matrix::identity(2)).unwrap();
        assert!(induced_dual_bracket(&ab, &e12(2)).unwrap().is_empty());
    }

    #[test]
    fn induced_bracket_requires_regularity() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::zeros(2, 2),
        )
        .unwrap();
        assert!(induced_dual_bracket(&g, &e12(2)).is_err());
    }

    #[test]
    fn coboundary_bialgebra_on_aff1() {
        let g = aff1();
        let b = build_coboundary_bialgebra(&g, &e12(2)).unwrap();
        assert!(b.check().passed());
        // the cobracket is the bracket against the bivector
        for i in 0..2 {
            let x = Vector::basis(2, i);
            let delta = b.cobracket(&x).unwrap();
            let direct = ad_multi(&g, &x, &e12(2)).unwrap();
            assert_eq!(delta, direct);
        }
    }

    #[test]
    fn built_cobracket_intertwines_twists() {
        // the cobracket of the twisted element is the factorwise twist of
        // the cobracket
        for (g, r) in [(aff1(), e12(2)), (heis3(), e12(3))] {
            let b = build_coboundary_bialgebra(&g, &r).unwrap();
            for i in 0..g.dim() {
                let x = Vector::basis(g.dim(), i);
                let lhs = b.cobracket(&g.apply_twist(&x)).unwrap();
                let rhs = b
                    .cobracket(&x)
                    .unwrap()
                    .map_factors(g.twist())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn coboundary_bialgebra_rejects_non_admissible() {
        let g = HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap();
        assert!(build_coboundary_bialgebra(&g, &e12(2)).is_err());
    }

    #[test]
    fn coboundary_bialgebra_on_heisenberg() {
        // the squared bracket is nonzero but invariant, so the construction
        // still produces a compatible pair
        let g = heis3();
        let b = build_coboundary_bialgebra(&g, &e12(3)).unwrap();
        assert!(b.check().passed());
        let entries: Vec<_> = b.dual_entries().collect();
        assert_eq!(entries.len(), 2);
        assert_eq!(*entries[0].0, (0, 2));
        assert_eq!(*entries[0].1, Vector::from_ints(&[1, 0, 0]));
        assert_eq!(*entries[1].0, (1, 2));
        assert_eq!(*entries[1].1, Vector::from_ints(&[0, 1, 0]));
    }

    #[test]
    fn defect_vanishes_for_aff1() {
        let g = aff1();
        for i in 0..2 {
            for j in 0..2 {
                let d = lemma_defect(&g, &e12(2), &Vector::basis(2, i), &Vector::basis(2, j))
                    .unwrap();
                assert!(d.is_zero(), "defect at ({i}, {j}): {d:?}");
            }
        }
    }

    #[test]
    fn defect_vanishes_on_heisenberg_planes() {
        let g = heis3();
        for r in [
            e12(3),
            Multivector::monomial(3, Side::Primal, &[0, 2]).unwrap(),
            Multivector::monomial(3, Side::Primal, &[1, 2]).unwrap(),
        ] {
            for i in 0..3 {
                for j in 0..3 {
                    let d =
                        lemma_defect(&g, &r, &Vector::basis(3, i), &Vector::basis(3, j)).unwrap();
                    assert!(d.is_zero(), "defect at ({i}, {j}) for {r:?}");
                }
            }
        }
    }

    #[test]
    fn form_equivalence_in_dim_two() {
        let g = aff1();
        let eq = bform_equivalence(&g, &e12(2)).unwrap();
        assert!(eq.chybe && eq.cyclic_identity);
    }

    #[test]
    fn form_equivalence_rejects_odd_dimension() {
        // an antisymmetric map in odd dimension is always singular
        let g = heis3();
        assert!(bform_equivalence(&g, &e12(3)).is_err());
    }

    #[test]
    fn pushed_map_difference_lands_in_center() {
        // the twisted push and the pushed twist differ by central elements
        let g = HomLieAlgebra::abelian(
            2,
            Matrix::from_int_rows(&[&[0, -1], &[1, 0]]),
        )
        .unwrap();
        let r = e12(2);
        let rs = r_sharp(&g, &r).unwrap();
        let diff = &rs.mul(&g.dual_twist()).unwrap() - &g.twist().mul(&rs).unwrap();
        let center = g.center();
        let m = Matrix::from_columns(&center).unwrap();
        for i in 0..2 {
            assert!(m.solve_linear(&diff.column(i)).unwrap().is_some());
        }
    }

    #[test]
    fn square_pairs_like_the_contraction() {
        // the trivector contraction agrees with direct pairing
        let g = heis3();
        let s = schouten_square(&g, &e12(3)).unwrap();
        let xi = Vector::from_ints(&[1, 0, 2]);
        let eta = Vector::from_ints(&[0, 1, -1]);
        let u = trivector_contract(&s, &xi, &eta).unwrap();
        for k in 0..3 {
            let probe = crate::exterior::wedge_vectors(
                3,
                Side::Dual,
                &[xi.clone(), eta.clone(), Vector::basis(3, k)],
            );
            assert_eq!(u[k], pair(&probe, &s).unwrap());
        }
    }
}

//! Shared corpus: the library-built documents every integration suite
//! reads, and the pinned command invocations behind the golden reports.

#![allow(dead_code)]

use std::path::PathBuf;

use homlie_cli::commands::Command;
use homlie_cli::doc::{
    AlgebraDoc, BialgebraDoc, BivectorDoc, CochainDoc, Document, HlsaDoc, LinearMapDoc,
    ManinTripleDoc, RepresentationDoc,
};
use homlie_core::{
    Cochain, HomLeftSymmetricAlgebra, HomLieAlgebra, HomLieBialgebra, Matrix, Multivector,
    Rational, Representation, Side, Vector,
};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from("corpus")
}

pub mod build {
    use super::*;

    pub fn aff1() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::identity(2),
        )
        .unwrap()
    }

    pub fn aff1_scaled() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2)]),
        )
        .unwrap()
    }

    pub fn aff1_phizero() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::zeros(2, 2),
        )
        .unwrap()
    }

    pub fn aff1_flip() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
        )
        .unwrap()
    }

    pub fn abelian2_rot() -> HomLieAlgebra {
        HomLieAlgebra::abelian(2, Matrix::from_int_rows(&[&[0, -1], &[1, 0]])).unwrap()
    }

    pub fn heis3() -> HomLieAlgebra {
        HomLieAlgebra::new(
            3,
            vec![((0, 1), Vector::from_ints(&[0, 0, 1]))],
            Matrix::identity(3),
        )
        .unwrap()
    }

    pub fn heis3_scaled() -> HomLieAlgebra {
        HomLieAlgebra::new(
            3,
            vec![((0, 1), Vector::from_ints(&[0, 0, 1]))],
            Matrix::diagonal(&[Rational::int(1), Rational::int(2), Rational::int(2)]),
        )
        .unwrap()
    }

    pub fn solvable3() -> HomLieAlgebra {
        HomLieAlgebra::new(
            3,
            vec![
                ((0, 1), Vector::from_ints(&[0, 0, 1])),
                ((0, 2), Vector::from_ints(&[0, 0, 1])),
            ],
            Matrix::identity(3),
        )
        .unwrap()
    }

    pub fn aff2() -> HomLieAlgebra {
        HomLieAlgebra::new(
            4,
            vec![
                ((0, 1), Vector::from_ints(&[0, 1, 0, 0])),
                ((2, 3), Vector::from_ints(&[0, 0, 0, 1])),
            ],
            Matrix::identity(4),
        )
        .unwrap()
    }

    pub fn invalid_jacobi3() -> HomLieAlgebra {
        HomLieAlgebra::new(
            3,
            vec![
                ((0, 1), Vector::from_ints(&[0, 0, 1])),
                ((0, 2), Vector::from_ints(&[1, 0, 0])),
            ],
            Matrix::identity(3),
        )
        .unwrap()
    }

    pub fn invalid_morph2() -> HomLieAlgebra {
        HomLieAlgebra::new(
            2,
            vec![((0, 1), Vector::from_ints(&[0, 1]))],
            Matrix::from_int_rows(&[&[1, 1], &[0, 1]]),
        )
        .unwrap()
    }

    pub fn aff1_cb() -> HomLieBialgebra {
        HomLieBialgebra::new(aff1(), vec![((0, 1), Vector::from_ints(&[1, 0]))]).unwrap()
    }

    pub fn heis3_cb() -> HomLieBialgebra {
        HomLieBialgebra::new(
            heis3(),
            vec![
                ((0, 2), Vector::from_ints(&[1, 0, 0])),
                ((1, 2), Vector::from_ints(&[0, 1, 0])),
            ],
        )
        .unwrap()
    }

    pub fn nil2() -> HomLeftSymmetricAlgebra {
        HomLeftSymmetricAlgebra::new(
            2,
            vec![((0, 0), Vector::from_ints(&[0, -1]))],
            Matrix::identity(2),
        )
        .unwrap()
    }

    pub fn plane(dim: usize, i: usize, j: usize) -> Multivector {
        Multivector::monomial(dim, Side::Primal, &[i, j]).unwrap()
    }
}

/// Every corpus document, produced canonically from the library.
pub fn corpus_documents() -> Vec<(&'static str, Document)> {
    use build::*;
    let algebra = |g: &HomLieAlgebra| Document::HomLieAlgebra(AlgebraDoc::from_core(g));
    let rep = |r: &Representation| Document::Representation(RepresentationDoc::from_core(r));
    let bivector = |r: &Multivector| Document::Bivector(BivectorDoc::from_core(r));
    let bialgebra = |b: &HomLieBialgebra| Document::Bialgebra(BialgebraDoc::from_core(b));
    let map = |m: &Matrix| Document::LinearMap(LinearMapDoc::from_core(m));

    let mut docs: Vec<(&'static str, Document)> = Vec::new();

    // algebras: dims one through four, assorted twists, two invalid ones
    docs.push((
        "algebras/abelian1.json",
        algebra(&HomLieAlgebra::abelian(1, Matrix::identity(1)).unwrap()),
    ));
    docs.push((
        "algebras/dim1_phi2.json",
        algebra(&HomLieAlgebra::abelian(1, Matrix::diagonal(&[Rational::int(2)])).unwrap()),
    ));
    docs.push(("algebras/aff1.json", algebra(&aff1())));
    docs.push(("algebras/aff1_scaled.json", algebra(&aff1_scaled())));
    docs.push(("algebras/aff1_phizero.json", algebra(&aff1_phizero())));
    docs.push(("algebras/aff1_flip.json", algebra(&aff1_flip())));
    docs.push(("algebras/abelian2_rot.json", algebra(&abelian2_rot())));
    docs.push(("algebras/heis3.json", algebra(&heis3())));
    docs.push(("algebras/heis3_scaled.json", algebra(&heis3_scaled())));
    docs.push(("algebras/solvable3.json", algebra(&solvable3())));
    docs.push(("algebras/aff2.json", algebra(&aff2())));
    let (double_zero, _) = HomLieBialgebra::new(aff1(), vec![])
        .unwrap()
        .standard_double_unchecked();
    docs.push(("algebras/aff1_double.json", algebra(&double_zero)));
    let (double_cb, _) = aff1_cb().standard_double_unchecked();
    docs.push(("algebras/aff1_double_cb.json", algebra(&double_cb)));
    docs.push(("algebras/invalid_jacobi3.json", algebra(&invalid_jacobi3())));
    docs.push(("algebras/invalid_morph2.json", algebra(&invalid_morph2())));

    // representations: adjoints, coadjoints, trivial modules, left actions
    docs.push((
        "reps/aff1_adjoint.json",
        rep(&Representation::adjoint(&aff1())),
    ));
    docs.push((
        "reps/aff1_coadjoint.json",
        rep(&Representation::coadjoint(&aff1()).unwrap()),
    ));
    docs.push((
        "reps/aff1_trivial.json",
        rep(&Representation::trivial(&aff1(), Matrix::identity(1)).unwrap()),
    ));
    docs.push((
        "reps/aff1_trivial_scaled.json",
        rep(&Representation::trivial(&aff1(), Matrix::diagonal(&[Rational::int(5)])).unwrap()),
    ));
    docs.push((
        "reps/heis3_adjoint.json",
        rep(&Representation::adjoint(&heis3())),
    ));
    docs.push((
        "reps/heis3_coadjoint.json",
        rep(&Representation::coadjoint(&heis3()).unwrap()),
    ));
    docs.push((
        "reps/aff1_scaled_adjoint.json",
        rep(&Representation::adjoint(&aff1_scaled())),
    ));
    docs.push((
        "reps/aff1_flip_adjoint.json",
        rep(&Representation::adjoint(&aff1_flip())),
    ));
    docs.push((
        "reps/rot2_adjoint.json",
        rep(&Representation::adjoint(&abelian2_rot())),
    ));
    let (_, nil2_left) = nil2().commutator().unwrap();
    docs.push(("reps/nil2_left.json", rep(&nil2_left)));

    // bivectors over the corpus algebras
    docs.push(("bivectors/r12_dim2.json", bivector(&plane(2, 0, 1))));
    docs.push((
        "bivectors/zero_dim2.json",
        bivector(&Multivector::zero(2, 2, Side::Primal)),
    ));
    docs.push(("bivectors/r12_dim3.json", bivector(&plane(3, 0, 1))));
    docs.push(("bivectors/r13_dim3.json", bivector(&plane(3, 0, 2))));
    docs.push(("bivectors/r23_dim3.json", bivector(&plane(3, 1, 2))));
    docs.push((
        "bivectors/r12_neg2_dim3.json",
        bivector(&plane(3, 0, 1).scale(&Rational::int(-2))),
    ));
    docs.push((
        "bivectors/r_mixed_d4.json",
        bivector(&plane(4, 1, 2).scale(&Rational::int(-1))),
    ));
    docs.push((
        "bivectors/r_inv_d4.json",
        bivector(&plane(4, 0, 2).add(&plane(4, 1, 3)).unwrap()),
    ));
    docs.push((
        "bivectors/r_blocks_aff2.json",
        bivector(&plane(4, 0, 1).add(&plane(4, 2, 3)).unwrap()),
    ));
    docs.push((
        "bivectors/r_cross_aff2.json",
        bivector(&plane(4, 0, 2).add(&plane(4, 1, 3)).unwrap()),
    ));

    // cochains
    docs.push((
        "cochains/aff1_dual2_k1.json",
        Document::Cochain(CochainDoc::from_core(
            &Cochain::new(1, 2, 1, vec![(vec![1], Vector::from_ints(&[1]))]).unwrap(),
        )),
    ));
    docs.push((
        "cochains/aff1_id_k1.json",
        Document::Cochain(CochainDoc::from_core(
            &Cochain::new(
                1,
                2,
                2,
                vec![
                    (vec![0], Vector::from_ints(&[1, 0])),
                    (vec![1], Vector::from_ints(&[0, 1])),
                ],
            )
            .unwrap(),
        )),
    ));
    docs.push((
        "cochains/heis3_top12_k2.json",
        Document::Cochain(CochainDoc::from_core(
            &Cochain::new(2, 3, 1, vec![(vec![0, 1], Vector::from_ints(&[1]))]).unwrap(),
        )),
    ));

    // bracket pairs, positive and negative
    docs.push((
        "bialgebras/aff1_zero.json",
        bialgebra(&HomLieBialgebra::new(aff1(), vec![]).unwrap()),
    ));
    docs.push(("bialgebras/aff1_cb.json", bialgebra(&aff1_cb())));
    docs.push(("bialgebras/heis3_cb.json", bialgebra(&heis3_cb())));
    docs.push((
        "bialgebras/phizero_free.json",
        bialgebra(
            &HomLieBialgebra::new(
                aff1_phizero(),
                vec![((0, 1), Vector::from_ints(&[3, -2]))],
            )
            .unwrap(),
        ),
    ));
    docs.push((
        "bialgebras/abelian2_dual_aff.json",
        bialgebra(
            &HomLieBialgebra::new(
                HomLieAlgebra::abelian(2, Matrix::identity(2)).unwrap(),
                vec![((0, 1), Vector::from_ints(&[0, 1]))],
            )
            .unwrap(),
        ),
    ));
    docs.push((
        "bialgebras/heis3_self.json",
        bialgebra(
            &HomLieBialgebra::new(heis3(), vec![((0, 1), Vector::from_ints(&[0, 0, 1]))])
                .unwrap(),
        ),
    ));
    docs.push((
        "bialgebras/heis3_corrupt.json",
        bialgebra(
            &HomLieBialgebra::new(heis3(), vec![((0, 1), Vector::from_ints(&[1, 0, 0]))])
                .unwrap(),
        ),
    ));

    // Manin triples: the canonical doubles plus a non-isotropic split
    let cb = aff1_cb();
    let (double, form) = cb.standard_double_unchecked();
    let (first, second) = cb.standard_bases();
    docs.push((
        "triples/aff1_cb_triple.json",
        Document::ManinTriple(ManinTripleDoc::from_core(&double, &first, &second, &form)),
    ));
    let diagonal: Vec<Vector> = (0..2)
        .map(|i| &Vector::basis(4, i) + &Vector::basis(4, 2 + i))
        .collect();
    docs.push((
        "triples/aff1_cb_diag_bad.json",
        Document::ManinTriple(ManinTripleDoc::from_core(&double, &first, &diagonal, &form)),
    ));
    let zero = HomLieBialgebra::new(aff1(), vec![]).unwrap();
    let (dz, fz) = zero.standard_double_unchecked();
    let (zf, zs) = zero.standard_bases();
    docs.push((
        "triples/aff1_zero_triple.json",
        Document::ManinTriple(ManinTripleDoc::from_core(&dz, &zf, &zs, &fz)),
    ));

    // linear maps and forms
    docs.push((
        "maps/rb_aff1.json",
        map(&Matrix::from_int_rows(&[&[0, 0], &[1, 0]])),
    ));
    docs.push(("maps/id2.json", map(&Matrix::identity(2))));
    docs.push(("maps/zero22.json", map(&Matrix::zeros(2, 2))));
    docs.push((
        "maps/diag12.json",
        map(&Matrix::diagonal(&[Rational::int(1), Rational::int(2)])),
    ));
    docs.push((
        "maps/nij_bad_heis3.json",
        map(&Matrix::diagonal(&[
            Rational::int(1),
            Rational::int(1),
            Rational::int(0),
        ])),
    ));
    docs.push((
        "maps/b_sympl2.json",
        map(&Matrix::from_int_rows(&[&[0, 1], &[-1, 0]])),
    ));
    docs.push((
        "maps/b_heis3.json",
        map(&Matrix::from_int_rows(&[
            &[0, 1, 0],
            &[-1, 0, 0],
            &[0, 0, 0],
        ])),
    ));
    let mut cross = Matrix::zeros(4, 4);
    cross.set(0, 2, Rational::one());
    cross.set(2, 0, -Rational::one());
    cross.set(1, 3, Rational::one());
    cross.set(3, 1, -Rational::one());
    docs.push(("maps/b_cross_aff2.json", map(&cross)));

    // left-symmetric products
    docs.push(("hlsa/nil2.json", Document::Hlsa(HlsaDoc::from_core(&nil2()))));
    docs.push((
        "hlsa/nil2_bad.json",
        Document::Hlsa(HlsaDoc::from_core(
            &HomLeftSymmetricAlgebra::new(
                2,
                vec![
                    ((0, 0), Vector::from_ints(&[0, -1])),
                    ((0, 1), Vector::from_ints(&[1, 0])),
                ],
                Matrix::identity(2),
            )
            .unwrap(),
        )),
    ));
    docs.push((
        "hlsa/assoc2.json",
        Document::Hlsa(HlsaDoc::from_core(
            &HomLeftSymmetricAlgebra::new(
                2,
                vec![
                    ((0, 0), Vector::from_ints(&[1, 0])),
                    ((0, 1), Vector::from_ints(&[0, 1])),
                    ((1, 0), Vector::from_ints(&[0, 1])),
                ],
                Matrix::identity(2),
            )
            .unwrap(),
        )),
    ));

    docs
}

pub fn doc_path(path: &str) -> PathBuf {
    corpus_dir().join(path)
}

/// Every golden command invocation: name, command, expected exit code.
pub fn golden_cases() -> Vec<(&'static str, Command, i32)> {
    vec![
        (
            "validate_aff1",
            Command::Validate {
                algebra: doc_path("algebras/aff1.json"),
            },
            0,
        ),
        (
            "validate_invalid_jacobi3",
            Command::Validate {
                algebra: doc_path("algebras/invalid_jacobi3.json"),
            },
            1,
        ),
        (
            "validate_invalid_morph2",
            Command::Validate {
                algebra: doc_path("algebras/invalid_morph2.json"),
            },
            1,
        ),
        (
            "classify_aff1_scaled",
            Command::Classify {
                algebra: doc_path("algebras/aff1_scaled.json"),
            },
            0,
        ),
        (
            "rep_check_aff1_adjoint",
            Command::RepCheck {
                rep: doc_path("reps/aff1_adjoint.json"),
            },
            0,
        ),
        (
            "rep_dual_aff1_adjoint",
            Command::RepDual {
                rep: doc_path("reps/aff1_adjoint.json"),
            },
            0,
        ),
        (
            "rep_dual_aff1_scaled_adjoint",
            Command::RepDual {
                rep: doc_path("reps/aff1_scaled_adjoint.json"),
            },
            1,
        ),
        (
            "semidirect_aff1_coadjoint",
            Command::Semidirect {
                rep: doc_path("reps/aff1_coadjoint.json"),
            },
            0,
        ),
        (
            "cohom_d_aff1_identity",
            Command::CohomD {
                rep: doc_path("reps/aff1_adjoint.json"),
                cochain: doc_path("cochains/aff1_id_k1.json"),
            },
            0,
        ),
        (
            "cocycle2_heis3",
            Command::Cocycle2 {
                algebra: doc_path("algebras/heis3.json"),
                b: doc_path("maps/b_heis3.json"),
            },
            0,
        ),
        (
            "bialgebra_check_aff1_cb",
            Command::BialgebraCheck {
                bialgebra: doc_path("bialgebras/aff1_cb.json"),
            },
            0,
        ),
        (
            "bialgebra_check_heis3_self",
            Command::BialgebraCheck {
                bialgebra: doc_path("bialgebras/heis3_self.json"),
            },
            1,
        ),
        (
            "double_aff1_cb",
            Command::Double {
                bialgebra: doc_path("bialgebras/aff1_cb.json"),
            },
            0,
        ),
        (
            "manin_check_aff1_cb_triple",
            Command::ManinCheck {
                triple: doc_path("triples/aff1_cb_triple.json"),
            },
            0,
        ),
        (
            "manin_check_diag_bad",
            Command::ManinCheck {
                triple: doc_path("triples/aff1_cb_diag_bad.json"),
            },
            1,
        ),
        (
            "manin_normalize_aff1_cb_triple",
            Command::ManinNormalize {
                triple: doc_path("triples/aff1_cb_triple.json"),
            },
            0,
        ),
        (
            "r_check_aff1_r12",
            Command::RCheck {
                algebra: doc_path("algebras/aff1.json"),
                r: doc_path("bivectors/r12_dim2.json"),
            },
            0,
        ),
        (
            "r_check_heis3_r12",
            Command::RCheck {
                algebra: doc_path("algebras/heis3.json"),
                r: doc_path("bivectors/r12_dim3.json"),
            },
            1,
        ),
        (
            "r_dualize_aff1_r12",
            Command::RDualize {
                algebra: doc_path("algebras/aff1.json"),
                r: doc_path("bivectors/r12_dim2.json"),
            },
            0,
        ),
        (
            "lagrangian_check_aff1_cb_r12",
            Command::LagrangianCheck {
                bialgebra: doc_path("bialgebras/aff1_cb.json"),
                r: doc_path("bivectors/r12_dim2.json"),
            },
            0,
        ),
        (
            "lagrangian_check_heis3_cb_r12",
            Command::LagrangianCheck {
                bialgebra: doc_path("bialgebras/heis3_cb.json"),
                r: doc_path("bivectors/r12_dim3.json"),
            },
            1,
        ),
        (
            "o_check_aff1_rb",
            Command::OCheck {
                rep: doc_path("reps/aff1_adjoint.json"),
                t: doc_path("maps/rb_aff1.json"),
            },
            0,
        ),
        (
            "o_check_aff1_identity",
            Command::OCheck {
                rep: doc_path("reps/aff1_adjoint.json"),
                t: doc_path("maps/id2.json"),
            },
            1,
        ),
        (
            "nijenhuis_aff1_diag12",
            Command::Nijenhuis {
                algebra: doc_path("algebras/aff1.json"),
                n: doc_path("maps/diag12.json"),
            },
            0,
        ),
        (
            "nijenhuis_heis3_bad",
            Command::Nijenhuis {
                algebra: doc_path("algebras/heis3.json"),
                n: doc_path("maps/nij_bad_heis3.json"),
            },
            1,
        ),
        (
            "rota_baxter_aff1_rb",
            Command::RotaBaxter {
                algebra: doc_path("algebras/aff1.json"),
                r: doc_path("maps/rb_aff1.json"),
            },
            0,
        ),
        (
            "build_r_aff1_rb",
            Command::BuildR {
                rep: doc_path("reps/aff1_adjoint.json"),
                t: doc_path("maps/rb_aff1.json"),
                algebra_out: None,
            },
            0,
        ),
        (
            "build_r_aff1_id",
            Command::BuildR {
                rep: doc_path("reps/aff1_adjoint.json"),
                t: doc_path("maps/id2.json"),
                algebra_out: None,
            },
            1,
        ),
        (
            "hlsa_check_nil2",
            Command::HlsaCheck {
                hlsa: doc_path("hlsa/nil2.json"),
            },
            0,
        ),
        (
            "hlsa_check_nil2_bad",
            Command::HlsaCheck {
                hlsa: doc_path("hlsa/nil2_bad.json"),
            },
            1,
        ),
        (
            "hlsa_commutator_nil2",
            Command::HlsaCommutator {
                hlsa: doc_path("hlsa/nil2.json"),
            },
            0,
        ),
        (
            "hlsa_from_b_aff1",
            Command::HlsaFromB {
                algebra: doc_path("algebras/aff1.json"),
                b: doc_path("maps/b_sympl2.json"),
            },
            0,
        ),
    ]
}


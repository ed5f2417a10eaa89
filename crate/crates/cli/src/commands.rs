//! One function per subcommand, each delegating to the library and packing
//! the result into a report plus optional constructed documents.

use std::path::{Path, PathBuf};

use clap::Subcommand;
use homlie_core::bialgebra::{check_manin_triple, lagrangian_graph_check, normalize_manin_triple};
use homlie_core::cohomology::{coboundary, maurer_cartan_defect, two_cocycle_report};
use homlie_core::operators::{
    build_r_from_t, hlsa_from_2cocycle, is_hom_nijenhuis, is_rota_baxter, OOperator,
};
use homlie_core::rmatrix::{
    build_coboundary_bialgebra, check_invariance, check_zero_cochain, schouten_square,
};
use homlie_core::Error as CoreError;
use serde_json::json;

use crate::doc::{
    trivector_entries, AlgebraDoc, BialgebraDoc, BivectorDoc, CochainDoc, Document, HlsaDoc,
    LinearMapDoc, ManinTripleDoc, RepresentationDoc,
};
use crate::error::CliError;
use crate::report::{Check, Report, Witness};

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the twist-morphism and twisted Jacobi axioms of an algebra
    Validate { algebra: PathBuf },
    /// Report regularity, involutivity, admissibility, and the center
    Classify { algebra: PathBuf },
    /// Check the two action axioms of a representation document
    RepCheck { rep: PathBuf },
    /// Dualize a representation and check whether the dual is one again
    RepDual { rep: PathBuf },
    /// Build the semidirect-product algebra of a representation
    Semidirect { rep: PathBuf },
    /// Apply the coboundary operator of a representation to a cochain
    CohomD {
        rep: PathBuf,
        #[arg(long)]
        cochain: PathBuf,
    },
    /// Check the cyclic 2-cocycle condition of an antisymmetric form
    Cocycle2 {
        algebra: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Check the compatibility conditions of a bracket pair
    BialgebraCheck { bialgebra: PathBuf },
    /// Build the standard double of a bialgebra as a Manin-triple document
    Double { bialgebra: PathBuf },
    /// Verify invariance, isotropy, and closure of a Manin triple
    ManinCheck { triple: PathBuf },
    /// Transport a Manin triple onto the standard one and recover the pair
    ManinNormalize { triple: PathBuf },
    /// Check the 0-cochain condition, the Yang-Baxter square, and invariance
    RCheck {
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Build the coboundary bialgebra induced by a bivector
    RDualize {
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Check graph closure of a bivector in the double of a bialgebra
    LagrangianCheck {
        bialgebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Check the operator identities of a map from a module to the algebra
    OCheck {
        rep: PathBuf,
        #[arg(long)]
        t: PathBuf,
    },
    /// Check the square-zero deformation identity of an endomorphism
    Nijenhuis {
        algebra: PathBuf,
        #[arg(long)]
        n: PathBuf,
    },
    /// Check the weight-zero Rota-Baxter identity of an endomorphism
    RotaBaxter {
        algebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Plant the bivector of an intertwining map in the dual-module double
    BuildR {
        rep: PathBuf,
        #[arg(long)]
        t: PathBuf,
        /// also write the double algebra document here
        #[arg(long)]
        algebra_out: Option<PathBuf>,
    },
    /// Check the axioms of a left-symmetric product document
    HlsaCheck { hlsa: PathBuf },
    /// Build the commutator algebra and left-multiplication action
    HlsaCommutator { hlsa: PathBuf },
    /// Solve a left-symmetric product out of a nondegenerate cyclic form
    HlsaFromB {
        algebra: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

pub struct Outcome {
    pub report: Report,
    /// Document written to `-o`.
    pub primary: Option<Document>,
    /// Document written to `--algebra-out` (double constructions only).
    pub secondary: Option<Document>,
}

impl Outcome {
    fn plain(report: Report) -> Outcome {
        Outcome {
            report,
            primary: None,
            secondary: None,
        }
    }
}

struct Loader<'a> {
    report: &'a mut Report,
}

impl Loader<'_> {
    fn document(&mut self, role: &str, path: &Path) -> Result<Document, CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::io(path.to_path_buf(), e))?;
        self.report
            .record_input(role, &path.display().to_string(), text.as_bytes());
        Document::parse(&text)
    }

    fn algebra(&mut self, path: &Path) -> Result<AlgebraDoc, CliError> {
        match self.document("algebra", path)? {
            Document::HomLieAlgebra(doc) => Ok(doc),
            other => Err(wrong_kind("hom_lie_algebra", &other)),
        }
    }

    fn representation(&mut self, path: &Path) -> Result<RepresentationDoc, CliError> {
        match self.document("representation", path)? {
            Document::Representation(doc) => Ok(doc),
            other => Err(wrong_kind("representation", &other)),
        }
    }

    fn bivector(&mut self, path: &Path) -> Result<BivectorDoc, CliError> {
        match self.document("bivector", path)? {
            Document::Bivector(doc) => Ok(doc),
            other => Err(wrong_kind("bivector", &other)),
        }
    }

    fn cochain(&mut self, path: &Path) -> Result<CochainDoc, CliError> {
        match self.document("cochain", path)? {
            Document::Cochain(doc) => Ok(doc),
            other => Err(wrong_kind("cochain", &other)),
        }
    }

    fn bialgebra(&mut self, path: &Path) -> Result<BialgebraDoc, CliError> {
        match self.document("bialgebra", path)? {
            Document::Bialgebra(doc) => Ok(doc),
            other => Err(wrong_kind("bialgebra", &other)),
        }
    }

    fn triple(&mut self, path: &Path) -> Result<ManinTripleDoc, CliError> {
        match self.document("triple", path)? {
            Document::ManinTriple(doc) => Ok(doc),
            other => Err(wrong_kind("manin_triple", &other)),
        }
    }

    fn linear_map(&mut self, role: &str, path: &Path) -> Result<LinearMapDoc, CliError> {
        match self.document(role, path)? {
            Document::LinearMap(doc) => Ok(doc),
            other => Err(wrong_kind("linear_map", &other)),
        }
    }

    fn hlsa(&mut self, path: &Path) -> Result<HlsaDoc, CliError> {
        match self.document("hlsa", path)? {
            Document::Hlsa(doc) => Ok(doc),
            other => Err(wrong_kind("hlsa", &other)),
        }
    }
}

fn wrong_kind(expected: &str, got: &Document) -> CliError {
    CliError::Invalid(format!(
        "expected a {expected} document, found {}",
        got.kind()
    ))
}

fn doc_value(doc: &Document) -> serde_json::Value {
    serde_json::to_value(doc).expect("documents always serialize")
}

fn require(condition: bool, message: &str) -> Result<(), CliError> {
    if condition {
        Ok(())
    } else {
        Err(CliError::Core(CoreError::Precondition(message.to_string())))
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Validate { algebra } => {
            let mut report = Report::new("validate");
            let doc = Loader { report: &mut report }.algebra(algebra)?;
            let g = doc.to_core()?;
            report.absorb_validation(&["twist-morphism", "hom-jacobi"], &g.validate());
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::Classify { algebra } => {
            let mut report = Report::new("classify");
            let doc = Loader { report: &mut report }.algebra(algebra)?;
            let g = doc.to_core()?;
            let c = g.classify()?;
            report.insert_data("regular", json!(c.regular));
            report.insert_data("involutive", json!(c.involutive));
            report.insert_data("admissible", json!(c.admissible));
            let center: Vec<Vec<String>> = c
                .center
                .iter()
                .map(|v| v.iter().map(|x| x.to_string()).collect())
                .collect();
            report.insert_data("center", json!(center));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::RepCheck { rep } => {
            let mut report = Report::new("rep-check");
            let doc = Loader { report: &mut report }.representation(rep)?;
            let rep = doc.to_core()?;
            report.absorb_validation(&["action-twist", "action-bracket"], &rep.check());
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::RepDual { rep } => {
            let mut report = Report::new("rep-dual");
            let doc = Loader { report: &mut report }.representation(rep)?;
            let rep = doc.to_core()?;
            require(rep.check().passed(), "input must be a representation")?;
            let dual = rep.dual();
            let dual_report = dual.check();
            let admissible = rep.is_admissible();
            if admissible != dual_report.passed() {
                return Err(CliError::Core(CoreError::Internal(
                    "admissibility must match the dual action check".to_string(),
                )));
            }
            report.insert_data("admissible", json!(admissible));
            report.absorb_as_single_check("dual-action", &dual_report);
            let out = Document::Representation(RepresentationDoc::from_core(&dual));
            report.insert_output("representation", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::Semidirect { rep } => {
            let mut report = Report::new("semidirect");
            let doc = Loader { report: &mut report }.representation(rep)?;
            let rep = doc.to_core()?;
            let product = rep.semidirect()?;
            report.absorb_as_single_check("output-validates", &product.validate());
            let out = Document::HomLieAlgebra(AlgebraDoc::from_core(&product));
            report.insert_output("algebra", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::CohomD { rep, cochain } => {
            let mut report = Report::new("cohom-d");
            let mut loader = Loader { report: &mut report };
            let rep = loader.representation(rep)?.to_core()?;
            let f = loader.cochain(cochain)?.to_core()?;
            let df = coboundary(&rep, &f)?;
            report.push_check(Check::boolean("output-hom-cochain", df.is_hom(&rep)?));
            let ddf = coboundary(&rep, &df)?;
            report.push_check(Check::boolean("d-squared-zero", ddf.is_zero()));
            let out = Document::Cochain(CochainDoc::from_core(&df));
            report.insert_output("cochain", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::Cocycle2 { algebra, b } => {
            let mut report = Report::new("cocycle2");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let form = loader.linear_map("form", b)?.to_core()?;
            report.absorb_validation(&["cyclic-cocycle"], &two_cocycle_report(&g, &form)?);
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::BialgebraCheck { bialgebra } => {
            let mut report = Report::new("bialgebra-check");
            let doc = Loader { report: &mut report }.bialgebra(bialgebra)?;
            let b = doc.to_core()?;
            report.absorb_validation(
                &[
                    "admissible-algebra",
                    "admissible-dual",
                    "cobracket-compat",
                    "bracket-compat",
                ],
                &b.check(),
            );
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::Double { bialgebra } => {
            let mut report = Report::new("double");
            let doc = Loader { report: &mut report }.bialgebra(bialgebra)?;
            let b = doc.to_core()?;
            let (double, form) = b.standard_double()?;
            report.absorb_as_single_check("output-validates", &double.validate());
            let (first, second) = b.standard_bases();
            let out = Document::ManinTriple(ManinTripleDoc::from_core(
                &double, &first, &second, &form,
            ));
            report.insert_output("manin_triple", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::ManinCheck { triple } => {
            let mut report = Report::new("manin-check");
            let doc = Loader { report: &mut report }.triple(triple)?;
            let parts = doc.to_core()?;
            let result = check_manin_triple(
                &parts.algebra,
                &parts.basis_first,
                &parts.basis_second,
                &parts.form,
            )?;
            report.absorb_validation(
                &[
                    "form-bracket-invariance",
                    "form-twist-invariance",
                    "isotropic-first",
                    "isotropic-second",
                    "subalgebra-first",
                    "subalgebra-second",
                ],
                &result,
            );
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::ManinNormalize { triple } => {
            let mut report = Report::new("manin-normalize");
            let doc = Loader { report: &mut report }.triple(triple)?;
            let parts = doc.to_core()?;
            let b = normalize_manin_triple(
                &parts.algebra,
                &parts.basis_first,
                &parts.basis_second,
                &parts.form,
            )?;
            // the transport verifies the round trip internally
            report.push_check(Check::passing("round-trip"));
            let out = Document::Bialgebra(BialgebraDoc::from_core(&b));
            report.insert_output("bialgebra", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::RCheck { algebra, r } => {
            let mut report = Report::new("r-check");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let r = loader.bivector(r)?.to_core()?;
            report.push_check(Check::boolean("zero-cochain", check_zero_cochain(&g, &r)?));
            let square = schouten_square(&g, &r)?;
            report.push_check(Check::boolean("chybe", square.is_zero()));
            report.push_check(Check::boolean("invariance", check_invariance(&g, &r)?));
            report.insert_data("schouten_square", json!(trivector_entries(&square)));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::RDualize { algebra, r } => {
            let mut report = Report::new("r-dualize");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let r = loader.bivector(r)?.to_core()?;
            let b = build_coboundary_bialgebra(&g, &r)?;
            report.absorb_as_single_check("output-compatible", &b.check());
            let out = Document::Bialgebra(BialgebraDoc::from_core(&b));
            report.insert_output("bialgebra", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::LagrangianCheck { bialgebra, r } => {
            let mut report = Report::new("lagrangian-check");
            let mut loader = Loader { report: &mut report };
            let b = loader.bialgebra(bialgebra)?.to_core()?;
            let r = loader.bivector(r)?.to_core()?;
            let result = lagrangian_graph_check(&b, &r)?;
            report.push_check(Check::boolean("twist-compat", result.twist_compat));
            report.push_check(Check::boolean("mc-zero", result.mc_zero));
            let mut graph = Check::boolean("graph-closed", result.graph_closed);
            if let Some(f) = &result.witness {
                graph.witnesses.push(Witness {
                    tuple: f.witness.iter().map(|&i| i + 1).collect(),
                    lhs: f.lhs.iter().map(|x| x.to_string()).collect(),
                    rhs: f.rhs.iter().map(|x| x.to_string()).collect(),
                });
            }
            report.push_check(graph);
            let defect = maurer_cartan_defect(&b, &r)?;
            report.insert_data("mc_defect", json!(trivector_entries(&defect)));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::OCheck { rep, t } => {
            let mut report = Report::new("o-check");
            let mut loader = Loader { report: &mut report };
            let rep = loader.representation(rep)?.to_core()?;
            let map = loader.linear_map("map", t)?.to_core()?;
            let op = OOperator::new(rep, map)?;
            report.absorb_validation(&["intertwines-twists", "operator-identity"], &op.check()?);
            report.insert_data("nijenhuis-embedding-agrees", json!(op.nijenhuis_embedding()?));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::Nijenhuis { algebra, n } => {
            let mut report = Report::new("nijenhuis");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let map = loader.linear_map("map", n)?.to_core()?;
            report.push_check(Check::boolean("nijenhuis", is_hom_nijenhuis(&g, &map)?));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::RotaBaxter { algebra, r } => {
            let mut report = Report::new("rota-baxter");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let map = loader.linear_map("map", r)?.to_core()?;
            report.push_check(Check::boolean("rota-baxter", is_rota_baxter(&g, &map)?));
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::BuildR { rep, t, algebra_out: _ } => {
            let mut report = Report::new("build-r");
            let mut loader = Loader { report: &mut report };
            let rep = loader.representation(rep)?.to_core()?;
            let map = loader.linear_map("map", t)?.to_core()?;
            let op = OOperator::new(rep.clone(), map.clone())?;
            let (double, r) = build_r_from_t(&op)?;
            let square = schouten_square(&double, &r)?;
            let twisted = OOperator::new(rep.clone(), map.mul(rep.twist_v())?)?;
            let twisted_is_operator = twisted.is_o_operator()?;
            report.push_check(Check::boolean("squares-to-zero", square.is_zero()));
            report.push_check(Check::boolean(
                "chybe-iff-twisted-operator",
                square.is_zero() == twisted_is_operator,
            ));
            report.insert_data("twisted-map-is-operator", json!(twisted_is_operator));
            report.insert_data("schouten_square", json!(trivector_entries(&square)));
            let algebra_doc = Document::HomLieAlgebra(AlgebraDoc::from_core(&double));
            let r_doc = Document::Bivector(BivectorDoc::from_core(&r));
            report.insert_output("algebra", doc_value(&algebra_doc));
            report.insert_output("bivector", doc_value(&r_doc));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(r_doc),
                secondary: Some(algebra_doc),
            })
        }
        Command::HlsaCheck { hlsa } => {
            let mut report = Report::new("hlsa-check");
            let doc = Loader { report: &mut report }.hlsa(hlsa)?;
            let h = doc.to_core()?;
            report.absorb_validation(&["twist-homomorphism", "left-symmetry"], &h.validate());
            report.finalize();
            Ok(Outcome::plain(report))
        }
        Command::HlsaCommutator { hlsa } => {
            let mut report = Report::new("hlsa-commutator");
            let doc = Loader { report: &mut report }.hlsa(hlsa)?;
            let h = doc.to_core()?;
            let (algebra, rep) = h.commutator()?;
            report.absorb_as_single_check("output-validates", &algebra.validate());
            report.absorb_as_single_check("action-checks", &rep.check());
            let out = Document::HomLieAlgebra(AlgebraDoc::from_core(&algebra));
            report.insert_output("algebra", doc_value(&out));
            report.insert_output(
                "representation",
                doc_value(&Document::Representation(RepresentationDoc::from_core(&rep))),
            );
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
        Command::HlsaFromB { algebra, b } => {
            let mut report = Report::new("hlsa-from-b");
            let mut loader = Loader { report: &mut report };
            let g = loader.algebra(algebra)?.to_core()?;
            let form = loader.linear_map("form", b)?.to_core()?;
            let h = hlsa_from_2cocycle(&g, &form)?;
            report.absorb_as_single_check("left-symmetric", &h.validate());
            let (commutator, _) = h.commutator()?;
            report.push_check(Check::boolean("commutator-recovers", commutator == g));
            let out = Document::Hlsa(HlsaDoc::from_core(&h));
            report.insert_output("hlsa", doc_value(&out));
            report.finalize();
            Ok(Outcome {
                report,
                primary: Some(out),
                secondary: None,
            })
        }
    }
}


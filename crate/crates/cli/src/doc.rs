//! On-disk document formats. Every rational is a decimal string "p/q" (or
//! "p" when the denominator is one), indices are 1-based, unknown fields are
//! rejected, and serialization is canonical: sorted entry lists, reduced
//! rationals, two-space pretty JSON with a trailing newline.

use homlie_core::{
    Cochain, HomLeftSymmetricAlgebra, HomLieAlgebra, HomLieBialgebra, Matrix, Multivector,
    Rational, Representation, Side, Vector,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    HomLieAlgebra(AlgebraDoc),
    Representation(RepresentationDoc),
    Bivector(BivectorDoc),
    Cochain(CochainDoc),
    Bialgebra(BialgebraDoc),
    ManinTriple(ManinTripleDoc),
    LinearMap(LinearMapDoc),
    Hlsa(HlsaDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub bracket: Vec<PairEntry>,
    /// Twist matrix, row-major, column action.
    pub phi: Vec<Vec<String>>,
}

/// One structure constant vector attached to an ordered index pair.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDoc {
    pub algebra: AlgebraDoc,
    pub dim_v: usize,
    /// Module twist matrix.
    pub a: Vec<Vec<String>>,
    /// One action matrix per algebra basis element.
    pub rho: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BivectorDoc {
    pub dim: usize,
    pub entries: Vec<MultiEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MultiEntry {
    /// Strictly increasing 1-based indices.
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub k: usize,
    pub dim_g: usize,
    pub dim_v: usize,
    pub values: Vec<CochainEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub indices: Vec<usize>,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct BialgebraDoc {
    pub algebra: AlgebraDoc,
    /// Bracket of dual basis covectors; the dual twist is implied.
    pub dual_bracket: Vec<PairEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ManinTripleDoc {
    pub algebra: AlgebraDoc,
    pub basis_g: Vec<Vec<String>>,
    pub basis_g_prime: Vec<Vec<String>>,
    pub form: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LinearMapDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HlsaDoc {
    pub dim: usize,
    /// Product table entries; no index ordering is imposed.
    pub product: Vec<PairEntry>,
    pub psi: Vec<Vec<String>>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, CliError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| CliError::Schema(e.to_string()))?;
        Ok(doc)
    }

    /// Canonical serialization: two-space pretty JSON plus trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents always serialize");
        text.push('\n');
        text
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::HomLieAlgebra(_) => "hom_lie_algebra",
            Document::Representation(_) => "representation",
            Document::Bivector(_) => "bivector",
            Document::Cochain(_) => "cochain",
            Document::Bialgebra(_) => "bialgebra",
            Document::ManinTriple(_) => "manin_triple",
            Document::LinearMap(_) => "linear_map",
            Document::Hlsa(_) => "hlsa",
        }
    }
}

fn rational(s: &str) -> Result<Rational, CliError> {
    Rational::parse(s).map_err(CliError::Core)
}

fn vector(entries: &[String], expect_len: usize, what: &str) -> Result<Vector, CliError> {
    if entries.len() != expect_len {
        return Err(CliError::Invalid(format!(
            "{what}: expected {expect_len} coefficients, found {}",
            entries.len()
        )));
    }
    Ok(Vector::from_entries(
        entries
            .iter()
            .map(|s| rational(s))
            .collect::<Result<Vec<_>, _>>()?,
    ))
}

pub fn matrix(rows: &[Vec<String>], nrows: usize, ncols: usize, what: &str) -> Result<Matrix, CliError> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(CliError::Invalid(format!(
            "{what}: expected a {nrows}x{ncols} matrix"
        )));
    }
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| rational(s)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(CliError::Core)
}

fn matrix_doc(m: &Matrix) -> Vec<Vec<String>> {
    m.row_vecs()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.to_string()).collect())
        .collect()
}

fn vector_doc(v: &Vector) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Shifts a 1-based document pair to 0-based, demanding i < j.
fn pair_indices(entry: &PairEntry, dim: usize, what: &str) -> Result<(usize, usize), CliError> {
    let (i, j) = (entry.i, entry.j);
    if i == 0 || j == 0 || i > dim || j > dim {
        return Err(CliError::Invalid(format!(
            "{what}: indices ({i}, {j}) out of range 1..={dim}"
        )));
    }
    if i == j {
        return Err(CliError::Invalid(format!(
            "{what}: diagonal entry ({i}, {i}) is determined by antisymmetry and must be omitted"
        )));
    }
    if i > j {
        return Err(CliError::Invalid(format!(
            "{what}: entry ({i}, {j}) must be stored with i < j"
        )));
    }
    Ok((i - 1, j - 1))
}

impl AlgebraDoc {
    pub fn to_core(&self) -> Result<HomLieAlgebra, CliError> {
        let mut entries = Vec::with_capacity(self.bracket.len());
        for e in &self.bracket {
            let key = pair_indices(e, self.dim, "bracket")?;
            entries.push((key, vector(&e.coeffs, self.dim, "bracket entry")?));
        }
        let twist = matrix(&self.phi, self.dim, self.dim, "phi")?;
        HomLieAlgebra::new(self.dim, entries, twist).map_err(CliError::Core)
    }

    pub fn from_core(g: &HomLieAlgebra) -> AlgebraDoc {
        AlgebraDoc {
            dim: g.dim(),
            bracket: g
                .entries()
                .map(|(&(i, j), coeffs)| PairEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs: vector_doc(coeffs),
                })
                .collect(),
            phi: matrix_doc(g.twist()),
        }
    }
}

impl RepresentationDoc {
    pub fn to_core(&self) -> Result<Representation, CliError> {
        let g = self.algebra.to_core()?;
        let a = matrix(&self.a, self.dim_v, self.dim_v, "a")?;
        if self.rho.len() != g.dim() {
            return Err(CliError::Invalid(format!(
                "rho: expected {} action matrices, found {}",
                g.dim(),
                self.rho.len()
            )));
        }
        let action = self
            .rho
            .iter()
            .map(|m| matrix(m, self.dim_v, self.dim_v, "rho"))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(g, a, action).map_err(CliError::Core)
    }

    pub fn from_core(rep: &Representation) -> RepresentationDoc {
        RepresentationDoc {
            algebra: AlgebraDoc::from_core(rep.algebra()),
            dim_v: rep.dim_v(),
            a: matrix_doc(rep.twist_v()),
            rho: rep.action_matrices().iter().map(matrix_doc).collect(),
        }
    }
}

impl BivectorDoc {
    pub fn to_core(&self) -> Result<Multivector, CliError> {
        let mut out = Multivector::zero(self.dim, 2, Side::Primal);
        for e in &self.entries {
            if e.indices.len() != 2 {
                return Err(CliError::Invalid(format!(
                    "bivector entry has {} indices, expected 2",
                    e.indices.len()
                )));
            }
            let entry = PairEntry {
                i: e.indices[0],
                j: e.indices[1],
                coeffs: vec![],
            };
            let (i, j) = pair_indices(&entry, self.dim, "bivector")?;
            let mono = Multivector::monomial(self.dim, Side::Primal, &[i, j])
                .map_err(CliError::Core)?
                .scale(&rational(&e.coeff)?);
            out = out.add(&mono).map_err(CliError::Core)?;
        }
        Ok(out)
    }

    pub fn from_core(r: &Multivector) -> BivectorDoc {
        BivectorDoc {
            dim: r.dim(),
            entries: r
                .entries()
                .map(|(key, coeff)| MultiEntry {
                    indices: key.iter().map(|&i| i + 1).collect(),
                    coeff: coeff.to_string(),
                })
                .collect(),
        }
    }
}

impl CochainDoc {
    pub fn to_core(&self) -> Result<Cochain, CliError> {
        let mut entries = Vec::with_capacity(self.values.len());
        for e in &self.values {
            if e.indices.len() != self.k {
                return Err(CliError::Invalid(format!(
                    "cochain entry has {} indices, expected {}",
                    e.indices.len(),
                    self.k
                )));
            }
            if e.indices.iter().any(|&i| i == 0 || i > self.dim_g) {
                return Err(CliError::Invalid(format!(
                    "cochain indices {:?} out of range 1..={}",
                    e.indices, self.dim_g
                )));
            }
            let key: Vec<usize> = e.indices.iter().map(|&i| i - 1).collect();
            entries.push((key, vector(&e.coeffs, self.dim_v, "cochain value")?));
        }
        Cochain::new(self.k, self.dim_g, self.dim_v, entries).map_err(CliError::Core)
    }

    pub fn from_core(f: &Cochain) -> CochainDoc {
        CochainDoc {
            k: f.grade(),
            dim_g: f.dim_g(),
            dim_v: f.dim_v(),
            values: f
                .entries()
                .map(|(key, value)| CochainEntry {
                    indices: key.iter().map(|&i| i + 1).collect(),
                    coeffs: vector_doc(value),
                })
                .collect(),
        }
    }
}

impl BialgebraDoc {
    pub fn to_core(&self) -> Result<HomLieBialgebra, CliError> {
        let g = self.algebra.to_core()?;
        let mut entries = Vec::with_capacity(self.dual_bracket.len());
        for e in &self.dual_bracket {
            let key = pair_indices(e, self.algebra.dim, "dual_bracket")?;
            entries.push((key, vector(&e.coeffs, self.algebra.dim, "dual_bracket entry")?));
        }
        HomLieBialgebra::new(g, entries).map_err(CliError::Core)
    }

    pub fn from_core(b: &HomLieBialgebra) -> BialgebraDoc {
        BialgebraDoc {
            algebra: AlgebraDoc::from_core(b.algebra()),
            dual_bracket: b
                .dual_entries()
                .map(|(&(i, j), coeffs)| PairEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs: vector_doc(coeffs),
                })
                .collect(),
        }
    }
}

pub struct ManinTripleParts {
    pub algebra: HomLieAlgebra,
    pub basis_first: Vec<Vector>,
    pub basis_second: Vec<Vector>,
    pub form: Matrix,
}

impl ManinTripleDoc {
    pub fn to_core(&self) -> Result<ManinTripleParts, CliError> {
        let algebra = self.algebra.to_core()?;
        let dim = algebra.dim();
        let parse_basis = |rows: &[Vec<String>], what: &str| -> Result<Vec<Vector>, CliError> {
            rows.iter().map(|r| vector(r, dim, what)).collect()
        };
        Ok(ManinTripleParts {
            basis_first: parse_basis(&self.basis_g, "basis_g")?,
            basis_second: parse_basis(&self.basis_g_prime, "basis_g_prime")?,
            form: matrix(&self.form, dim, dim, "form")?,
            algebra,
        })
    }

    pub fn from_core(
        algebra: &HomLieAlgebra,
        basis_first: &[Vector],
        basis_second: &[Vector],
        form: &Matrix,
    ) -> ManinTripleDoc {
        ManinTripleDoc {
            algebra: AlgebraDoc::from_core(algebra),
            basis_g: basis_first.iter().map(vector_doc).collect(),
            basis_g_prime: basis_second.iter().map(vector_doc).collect(),
            form: matrix_doc(form),
        }
    }
}

impl LinearMapDoc {
    pub fn to_core(&self) -> Result<Matrix, CliError> {
        matrix(&self.entries, self.rows, self.cols, "linear map")
    }

    pub fn from_core(m: &Matrix) -> LinearMapDoc {
        LinearMapDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: matrix_doc(m),
        }
    }
}

impl HlsaDoc {
    pub fn to_core(&self) -> Result<HomLeftSymmetricAlgebra, CliError> {
        let mut entries = Vec::with_capacity(self.product.len());
        for e in &self.product {
            let (i, j) = (e.i, e.j);
            if i == 0 || j == 0 || i > self.dim || j > self.dim {
                return Err(CliError::Invalid(format!(
                    "product: indices ({i}, {j}) out of range 1..={}",
                    self.dim
                )));
            }
            entries.push(((i - 1, j - 1), vector(&e.coeffs, self.dim, "product entry")?));
        }
        let psi = matrix(&self.psi, self.dim, self.dim, "psi")?;
        HomLeftSymmetricAlgebra::new(self.dim, entries, psi).map_err(CliError::Core)
    }

    pub fn from_core(h: &HomLeftSymmetricAlgebra) -> HlsaDoc {
        let mut product = Vec::new();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let c = h.product_basis(i, j);
                if !c.is_zero() {
                    product.push(PairEntry {
                        i: i + 1,
                        j: j + 1,
                        coeffs: vector_doc(c),
                    });
                }
            }
        }
        HlsaDoc {
            dim: h.dim(),
            product,
            psi: matrix_doc(h.psi()),
        }
    }
}

/// Document form of a trivector, reused inside reports.
pub fn trivector_entries(w: &Multivector) -> Vec<MultiEntry> {
    w.entries()
        .map(|(key, coeff)| MultiEntry {
            indices: key.iter().map(|&i| i + 1).collect(),
            coeff: coeff.to_string(),
        })
        .collect()
}

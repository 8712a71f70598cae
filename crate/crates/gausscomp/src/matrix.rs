//! Dense self-adjoint and rectangular matrices over ℝ or ℂ.
//!
//! [`SymMatrix`] is exactly Hermitian by construction: constructors symmetrize
//! `(A + A*)/2`, zero the imaginary part of the diagonal, and reject inputs
//! whose asymmetry exceeds `1e-12` of the Frobenius norm. All types are
//! immutable after construction.

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Relative asymmetry allowed before an input is rejected outright.
pub const ASYMMETRY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

impl Field {
    pub fn join(self, other: Field) -> Field {
        if self == Field::Complex || other == Field::Complex {
            Field::Complex
        } else {
            Field::Real
        }
    }
}

/// Dense self-adjoint matrix; entries equal their conjugate transpose exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    field: Field,
    /// Row-major, length `dim * dim`.
    entries: Vec<Complex64>,
}

impl SymMatrix {
    /// Build from complex entries, enforcing self-adjointness.
    pub fn from_complex(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        Self::build(dim, Field::Complex, entries)
    }

    /// Build from real entries, enforcing symmetry.
    pub fn from_real(dim: usize, entries: Vec<f64>) -> Result<Self> {
        let entries = entries.into_iter().map(|x| Complex64::new(x, 0.0)).collect();
        Self::build(dim, Field::Real, entries)
    }

    fn build(dim: usize, field: Field, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dimension must be positive"));
        }
        if entries.len() != dim * dim {
            return Err(Error::dims(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("non-finite entry"));
        }
        let mut norm_sq = 0.0;
        let mut asym_sq = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let a = entries[i * dim + j];
                let b = entries[j * dim + i].conj();
                norm_sq += a.norm_sqr();
                asym_sq += (a - b).norm_sqr();
            }
        }
        let norm = norm_sq.sqrt();
        if asym_sq.sqrt() > ASYMMETRY_TOL * norm.max(1.0) {
            return Err(Error::invalid(format!(
                "asymmetry {:.3e} exceeds {:.1e} of the norm {:.3e}",
                asym_sq.sqrt(),
                ASYMMETRY_TOL,
                norm
            )));
        }
        let mut sym = vec![Complex64::ZERO; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let avg = (entries[i * dim + j] + entries[j * dim + i].conj()) * 0.5;
                sym[i * dim + j] = avg;
            }
            sym[i * dim + i].im = 0.0;
        }
        Ok(SymMatrix {
            dim,
            field,
            entries: sym,
        })
    }

    /// Internal constructor for data that is Hermitian by construction.
    pub(crate) fn from_parts_unchecked(dim: usize, field: Field, entries: Vec<Complex64>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        SymMatrix { dim, field, entries }
    }

    pub fn zeros(dim: usize, field: Field) -> Self {
        SymMatrix {
            dim,
            field,
            entries: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize, field: Field) -> Self {
        let mut m = Self::zeros(dim, field);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim, Field::Real);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_real(&self) -> bool {
        self.field == Field::Real
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.dim != other.dim {
            return Err(Error::dims(format!("{} vs {}", self.dim, other.dim)));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SymMatrix {
            dim: self.dim,
            field: self.field.join(other.field),
            entries,
        })
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        if self.dim != other.dim {
            return Err(Error::dims(format!("{} vs {}", self.dim, other.dim)));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(SymMatrix {
            dim: self.dim,
            field: self.field.join(other.field),
            entries,
        })
    }

    /// Scale by a real factor (self-adjointness is preserved).
    pub fn scale(&self, c: f64) -> SymMatrix {
        SymMatrix {
            dim: self.dim,
            field: self.field,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    /// In-place `self += c * other`, for accumulation loops.
    pub(crate) fn axpy(&mut self, c: f64, other: &SymMatrix) {
        debug_assert_eq!(self.dim, other.dim);
        self.field = self.field.join(other.field);
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a += b * c;
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i].re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Trace inner product ⟨A, B⟩ = Tr[AB]; real for self-adjoint operands.
    pub fn inner(&self, other: &SymMatrix) -> f64 {
        debug_assert_eq!(self.dim, other.dim);
        // Tr[AB] = Σ_ij A_ij conj(B_ij) since B = B*.
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a * b.conj()).re)
            .sum()
    }

    /// Matrix product of two self-adjoint matrices (not self-adjoint in general).
    pub(crate) fn matmul_entries(&self, other: &SymMatrix) -> Vec<Complex64> {
        let d = self.dim;
        let mut out = vec![Complex64::ZERO; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == Complex64::ZERO {
                    continue;
                }
                let row = &other.entries[k * d..(k + 1) * d];
                for (j, b) in row.iter().enumerate() {
                    out[i * d + j] += a * b;
                }
            }
        }
        out
    }

    /// Square of the matrix; self-adjoint (and psd).
    pub fn square(&self) -> SymMatrix {
        let entries = self.matmul_entries(self);
        let mut m = SymMatrix::from_parts_unchecked(self.dim, self.field, entries);
        // Clean up roundoff on the diagonal imaginary part.
        for i in 0..self.dim {
            m.entries[i * self.dim + i].im = 0.0;
        }
        m
    }

    /// y = A x.
    pub fn matvec(&self, x: &[Complex64], y: &mut [Complex64]) {
        let d = self.dim;
        debug_assert_eq!(x.len(), d);
        debug_assert_eq!(y.len(), d);
        for i in 0..d {
            let row = &self.entries[i * d..(i + 1) * d];
            let mut acc = Complex64::ZERO;
            for (a, b) in row.iter().zip(x) {
                acc += a * b;
            }
            y[i] = acc;
        }
    }

    /// Quadratic form u* A u (real for self-adjoint A).
    pub fn quad_form(&self, u: &[Complex64]) -> f64 {
        let d = self.dim;
        let mut acc = Complex64::ZERO;
        for i in 0..d {
            let row = &self.entries[i * d..(i + 1) * d];
            let mut inner = Complex64::ZERO;
            for (a, b) in row.iter().zip(u) {
                inner += a * b;
            }
            acc += u[i].conj() * inner;
        }
        acc.re
    }

    /// Direct sum [[A, 0], [0, B]].
    pub fn direct_sum(&self, other: &SymMatrix) -> SymMatrix {
        let d = self.dim + other.dim;
        let mut m = SymMatrix::zeros(d, self.field.join(other.field));
        for i in 0..self.dim {
            for j in 0..self.dim {
                m.entries[i * d + j] = self.entries[i * self.dim + j];
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                m.entries[(self.dim + i) * d + (self.dim + j)] = other.entries[i * other.dim + j];
            }
        }
        m
    }
}

/// Dense rectangular matrix; no structural invariant beyond its shape.
#[derive(Clone, Debug, PartialEq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    /// Row-major, length `rows * cols`.
    entries: Vec<Complex64>,
}

impl RectMatrix {
    pub fn from_complex(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::invalid("dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::dims(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::invalid("non-finite entry"));
        }
        Ok(RectMatrix {
            rows,
            cols,
            field: Field::Complex,
            entries,
        })
    }

    pub fn from_real(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        let mut m = Self::from_complex(
            rows,
            cols,
            entries.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
        )?;
        m.field = Field::Real;
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        RectMatrix {
            rows,
            cols,
            field,
            entries: vec![Complex64::ZERO; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> RectMatrix {
        let mut out = RectMatrix::zeros(self.cols, self.rows, self.field);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.entries[i * self.cols + j].conj();
            }
        }
        out
    }

    /// A* A, a `cols x cols` self-adjoint (psd) matrix.
    pub fn gram(&self) -> SymMatrix {
        let (r, c) = (self.rows, self.cols);
        let mut g = vec![Complex64::ZERO; c * c];
        for k in 0..r {
            let row = &self.entries[k * c..(k + 1) * c];
            for i in 0..c {
                let ai = row[i].conj();
                if ai == Complex64::ZERO {
                    continue;
                }
                for j in i..c {
                    g[i * c + j] += ai * row[j];
                }
            }
        }
        for i in 0..c {
            g[i * c + i].im = 0.0;
            for j in 0..i {
                g[i * c + j] = g[j * c + i].conj();
            }
        }
        SymMatrix::from_parts_unchecked(c, self.field, g)
    }
}

/// Self-adjoint dilation [[0, A], [A*, 0]]; its top eigenvalue equals ‖A‖ and
/// its spectrum is symmetric about zero.
pub fn dilate(a: &RectMatrix) -> SymMatrix {
    let d = a.rows + a.cols;
    let mut m = SymMatrix::zeros(d, a.field);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let v = a.entries[i * a.cols + j];
            m.entries[i * d + (a.rows + j)] = v;
            m.entries[(a.rows + j) * d + i] = v.conj();
        }
    }
    m
}

/// Spectral norm ‖A‖ = λ_max(dilate(A)), evaluated through the Gram matrix of
/// the smaller side.
pub fn spectral_norm(a: &RectMatrix) -> f64 {
    let g = if a.rows <= a.cols {
        a.adjoint().gram() // A A*
    } else {
        a.gram() // A* A
    };
    let (_, top) = crate::solver::eig_extremes(&g);
    top.max(0.0).sqrt()
}

/// Eigenvalues of a self-adjoint matrix, sorted descending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub(crate) fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap());
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// j-th largest eigenvalue, 1-indexed: `lambda(1)` is the largest.
    pub fn lambda(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    pub fn max(&self) -> f64 {
        self.values[0]
    }

    pub fn min(&self) -> f64 {
        *self.values.last().unwrap()
    }
}

// --- JSON: {dim | rows/cols, field, entries: row-major [re] or [re, im]} ---

fn entries_to_json(field: Field, entries: &[Complex64]) -> Vec<Vec<f64>> {
    match field {
        Field::Real => entries.iter().map(|z| vec![z.re]).collect(),
        Field::Complex => entries.iter().map(|z| vec![z.re, z.im]).collect(),
    }
}

fn entries_from_json(field: Field, raw: Vec<Vec<f64>>) -> std::result::Result<Vec<Complex64>, String> {
    raw.into_iter()
        .map(|pair| match (field, pair.as_slice()) {
            (Field::Real, [re]) => Ok(Complex64::new(*re, 0.0)),
            (Field::Complex, [re, im]) => Ok(Complex64::new(*re, *im)),
            (Field::Complex, [re]) => Ok(Complex64::new(*re, 0.0)),
            _ => Err("entry must be [re] (real) or [re, im] (complex)".to_string()),
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct SymMatrixRepr {
    dim: usize,
    field: Field,
    entries: Vec<Vec<f64>>,
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SymMatrixRepr {
            dim: self.dim,
            field: self.field,
            entries: entries_to_json(self.field, &self.entries),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SymMatrixRepr::deserialize(deserializer)?;
        let entries = entries_from_json(repr.field, repr.entries).map_err(D::Error::custom)?;
        SymMatrix::build(repr.dim, repr.field, entries).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct RectMatrixRepr {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Vec<f64>>,
}

impl Serialize for RectMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RectMatrixRepr {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            entries: entries_to_json(self.field, &self.entries),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RectMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = RectMatrixRepr::deserialize(deserializer)?;
        let entries = entries_from_json(repr.field, repr.entries).map_err(D::Error::custom)?;
        let mut m =
            RectMatrix::from_complex(repr.rows, repr.cols, entries).map_err(D::Error::custom)?;
        m.field = repr.field;
        Ok(m)
    }
}

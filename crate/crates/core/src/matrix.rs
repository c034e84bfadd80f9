//! Dense symmetric matrices and the kernels built on them: Cholesky
//! factorization, SPD inversion, eigendecomposition-based pseudo-inversion,
//! and the entrywise/induced norms used by the error analysis.
//!
//! Storage is a full row-major `p × p` buffer. Every constructor symmetrizes
//! its input as `(A + Aᵀ)/2`, so `get(i, j) == get(j, i)` holds bit-exactly
//! for every value of this type.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Sub};
use std::path::Path;

use crate::error::{check_dim, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from a row-major buffer, symmetrizing as `(A + Aᵀ)/2`.
    pub fn from_row_major(dim: usize, mut data: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyInput("matrix dimension"));
        }
        check_dim(dim * dim, data.len())?;
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        symmetrize_in_place(dim, &mut data);
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            check_dim(dim, row.len())?;
            data.extend_from_slice(row);
        }
        Self::from_row_major(dim, data)
    }

    /// Internal constructor for buffers that are already finite; still
    /// symmetrizes to remove rounding drift.
    pub(crate) fn from_raw(dim: usize, mut data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        symmetrize_in_place(dim, &mut data);
        Self { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_diag(&vec![1.0; dim])
    }

    pub fn from_diag(diag: &[f64]) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * dim + i] = d;
        }
        m
    }

    /// `v vᵀ`
    pub fn outer(v: &[f64]) -> Self {
        let dim = v.len();
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                data[i * dim + j] = v[i] * v[j];
            }
        }
        Self { dim, data }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// Diagonal part only, off-diagonals zeroed.
    pub fn diag_part(&self) -> Self {
        Self::from_diag(&self.diagonal())
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    /// `self * x`
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.dim, "vector length must match matrix dimension");
        (0..self.dim).map(|i| dot(self.row(i), x)).collect()
    }

    /// `xᵀ · self · y`
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        dot(x, &self.mul_vec(y))
    }

    /// General (not necessarily symmetric) product, row-major.
    pub fn matmul(&self, other: &SymMatrix) -> Vec<f64> {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        matmul_raw(self.dim, &self.data, &other.data)
    }

    /// `self · middle · self`, symmetrized.
    pub fn sandwich(&self, middle: &SymMatrix) -> Result<SymMatrix> {
        check_dim(self.dim, middle.dim)?;
        let left = matmul_raw(self.dim, &self.data, &middle.data);
        Ok(Self::from_raw(
            self.dim,
            matmul_raw(self.dim, &left, &self.data),
        ))
    }

    /// Rows and columns `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<SymMatrix> {
        if indices.is_empty() {
            return Err(Error::EmptyInput("submatrix index set"));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.dim) {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: bad + 1,
            });
        }
        let k = indices.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in indices {
            for &j in indices {
                data.push(self.get(i, j));
            }
        }
        Ok(SymMatrix { dim: k, data })
    }

    /// `dim × dim` matrix holding `sub` at rows/columns `indices`, zero elsewhere.
    pub fn embed(dim: usize, indices: &[usize], sub: &SymMatrix) -> SymMatrix {
        let mut data = vec![0.0; dim * dim];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                data[i * dim + j] = sub.get(a, b);
            }
        }
        SymMatrix { dim, data }
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `‖self − other‖_F / ‖other‖_F`
    pub fn relative_frobenius_error(&self, reference: &SymMatrix) -> f64 {
        let diff = self - reference;
        norms(&diff).frobenius / norms(reference).frobenius.max(f64::MIN_POSITIVE)
    }

    /// Number of off-diagonal entries (both triangles) with `|a_ij| > tol`.
    pub fn count_offdiag_nonzeros(&self, tol: f64) -> usize {
        let p = self.dim;
        let mut count = 0;
        for i in 0..p {
            for j in 0..p {
                if i != j && self.get(i, j).abs() > tol {
                    count += 1;
                }
            }
        }
        count
    }
}

fn symmetrize_in_place(dim: usize, data: &mut [f64]) {
    for i in 0..dim {
        for j in (i + 1)..dim {
            let v = 0.5 * (data[i * dim + j] + data[j * dim + i]);
            data[i * dim + j] = v;
            data[j * dim + i] = v;
        }
    }
}

pub(crate) fn matmul_raw(dim: usize, a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; dim * dim];
    for i in 0..dim {
        let out_row = &mut out[i * dim..(i + 1) * dim];
        for k in 0..dim {
            let aik = a[i * dim + k];
            if aik == 0.0 {
                continue;
            }
            let b_row = &b[k * dim..(k + 1) * dim];
            for (o, &bkj) in out_row.iter_mut().zip(b_row) {
                *o += aik * bkj;
            }
        }
    }
    out
}

#[inline]
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn euclidean_norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

pub fn vec_sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Add for &SymMatrix {
    type Output = SymMatrix;

    fn add(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &SymMatrix {
    type Output = SymMatrix;

    fn sub(self, rhs: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions must agree");
        SymMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<f64> for &SymMatrix {
    type Output = SymMatrix;

    fn mul(self, c: f64) -> SymMatrix {
        self.scaled(c)
    }
}

/// Lower-triangular `L` with `L Lᵀ = A`.
#[derive(Debug, Clone)]
pub struct CholeskyFactor {
    dim: usize,
    // row-major, upper triangle kept at zero
    data: Vec<f64>,
}

impl CholeskyFactor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    /// Row-major lower-triangular entries (upper triangle is zero).
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn log_det(&self) -> f64 {
        2.0 * (0..self.dim).map(|i| self.get(i, i).ln()).sum::<f64>()
    }

    /// `L x`
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| dot(&self.data[i * self.dim..i * self.dim + i + 1], &x[..=i]))
            .collect()
    }

    /// Solves `A x = b` by forward then backward substitution.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.dim;
        assert_eq!(b.len(), n, "right-hand side length must match");
        let mut y = b.to_vec();
        for i in 0..n {
            let row = &self.data[i * n..i * n + i];
            y[i] = (y[i] - dot(row, &y[..i])) / self.get(i, i);
        }
        for i in (0..n).rev() {
            let mut s = y[i];
            for k in (i + 1)..n {
                s -= self.get(k, i) * y[k];
            }
            y[i] = s / self.get(i, i);
        }
        y
    }

    /// `L Lᵀ`
    pub fn reconstruct(&self) -> SymMatrix {
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                let k_max = j + 1;
                let v = dot(
                    &self.data[i * n..i * n + k_max],
                    &self.data[j * n..j * n + k_max],
                );
                out[i * n + j] = v;
                out[j * n + i] = v;
            }
        }
        SymMatrix { dim: n, data: out }
    }

    /// `A⁻¹ = L⁻ᵀ L⁻¹`
    pub fn inverse(&self) -> SymMatrix {
        let n = self.dim;
        // Linv, lower triangular, by forward substitution on identity columns.
        let mut linv = vec![0.0; n * n];
        for col in 0..n {
            linv[col * n + col] = 1.0 / self.get(col, col);
            for i in (col + 1)..n {
                let mut s = 0.0;
                for k in col..i {
                    s -= self.get(i, k) * linv[k * n + col];
                }
                linv[i * n + col] = s / self.get(i, i);
            }
        }
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..=i {
                // (L⁻ᵀ L⁻¹)_ij = Σ_k Linv_ki Linv_kj, k ≥ max(i, j) = i
                let mut s = 0.0;
                for k in i..n {
                    s += linv[k * n + i] * linv[k * n + j];
                }
                out[i * n + j] = s;
                out[j * n + i] = s;
            }
        }
        SymMatrix { dim: n, data: out }
    }
}

/// Cholesky factorization. A pivot `≤ p · ε · max_i a_ii` is reported as
/// [`Error::NotPositiveDefinite`].
pub fn cholesky(a: &SymMatrix) -> Result<CholeskyFactor> {
    let n = a.dim;
    let max_diag = a.diagonal().into_iter().fold(f64::NEG_INFINITY, f64::max);
    if !(max_diag > 0.0) {
        return Err(Error::NotPositiveDefinite {
            index: 0,
            pivot: max_diag,
        });
    }
    let threshold = n as f64 * f64::EPSILON * max_diag;
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let row_j = &l[j * n..j * n + j];
        let pivot = a.get(j, j) - dot(row_j, row_j);
        if !(pivot > threshold) {
            return Err(Error::NotPositiveDefinite { index: j, pivot });
        }
        let ljj = pivot.sqrt();
        l[j * n + j] = ljj;
        for i in (j + 1)..n {
            let s = a.get(i, j) - dot(&l[i * n..i * n + j], &l[j * n..j * n + j]);
            l[i * n + j] = s / ljj;
        }
    }
    Ok(CholeskyFactor { dim: n, data: l })
}

pub fn invert_spd(a: &SymMatrix) -> Result<SymMatrix> {
    Ok(cholesky(a)?.inverse())
}

pub fn is_positive_definite(a: &SymMatrix) -> bool {
    cholesky(a).is_ok()
}

/// Eigenvalues in ascending order with matching unit eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    /// `vectors[k]` is the eigenvector for `values[k]`.
    pub vectors: Vec<Vec<f64>>,
}

impl SymmetricEigen {
    pub fn min_value(&self) -> f64 {
        self.values[0]
    }

    pub fn max_abs_value(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Symmetric eigendecomposition: Householder reduction to tridiagonal form
/// followed by the implicit QL iteration.
pub fn symmetric_eigen(a: &SymMatrix) -> SymmetricEigen {
    let n = a.dim;
    let mut v: Vec<Vec<f64>> = a.to_rows();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(&mut v, &mut d, &mut e);
    tridiagonal_ql(&mut v, &mut d, &mut e);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    SymmetricEigen {
        values: order.iter().map(|&k| d[k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|r| v[r][k]).collect())
            .collect(),
    }
}

fn tridiagonalize(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    d.copy_from_slice(&v[n - 1][..n]);
    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for dk in d[..i].iter_mut() {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e[..i].iter_mut() {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in (j + 1)..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n.saturating_sub(1) {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for row in v.iter_mut().take(i + 1) {
            row[i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

fn tridiagonal_ql(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d[(l + 2)..].iter_mut() {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut() {
                        h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

pub const DEFAULT_PINV_RTOL: f64 = 1e-10;

/// Moore–Penrose pseudo-inverse. Eigenvalues with `|λ| ≤ rtol · max|λ|`
/// are treated as zero.
pub fn pseudo_inverse(a: &SymMatrix, rtol: f64) -> Result<SymMatrix> {
    if !(rtol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "pseudo-inverse rtol must be positive, got {rtol}"
        )));
    }
    let eig = symmetric_eigen(a);
    let cutoff = rtol * eig.max_abs_value();
    let n = a.dim;
    let mut out = vec![0.0; n * n];
    for (lambda, vec) in eig.values.iter().zip(&eig.vectors) {
        if lambda.abs() <= cutoff {
            continue;
        }
        let inv = 1.0 / lambda;
        for i in 0..n {
            let vi = vec[i] * inv;
            if vi == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += vi * vec[j];
            }
        }
    }
    Ok(SymMatrix::from_raw(n, out))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixNorms {
    pub frobenius: f64,
    /// `Σ_ij |a_ij|`
    pub entrywise_l1: f64,
    /// `max_ij |a_ij|`
    pub entrywise_max: f64,
    /// `max_i Σ_j |a_ij|`
    pub induced_inf: f64,
}

pub fn norms(a: &SymMatrix) -> MatrixNorms {
    let mut sq = 0.0;
    let mut l1 = 0.0;
    let mut max: f64 = 0.0;
    let mut induced: f64 = 0.0;
    for i in 0..a.dim {
        let mut row_sum = 0.0;
        for &v in a.row(i) {
            let av = v.abs();
            sq += v * v;
            row_sum += av;
            max = max.max(av);
        }
        l1 += row_sum;
        induced = induced.max(row_sum);
    }
    MatrixNorms {
        frobenius: sq.sqrt(),
        entrywise_l1: l1,
        entrywise_max: max,
        induced_inf: induced,
    }
}

/// Text fixture format: first line `p`, then `p` whitespace-separated rows.
/// Values are written with 17 significant digits so they round-trip exactly.
pub fn to_text(a: &SymMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "{}", a.dim).unwrap();
    for i in 0..a.dim {
        let row: Vec<String> = a.row(i).iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn from_text(text: &str) -> Result<SymMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("matrix text is empty".into()))?;
    let dim: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid dimension line {header:?}")))?;
    let mut data = Vec::with_capacity(dim * dim);
    for (r, line) in lines.by_ref().take(dim).enumerate() {
        let before = data.len();
        for tok in line.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("row {r}: invalid number {tok:?}")))?;
            data.push(v);
        }
        if data.len() - before != dim {
            return Err(Error::Parse(format!(
                "row {r}: expected {dim} values, found {}",
                data.len() - before
            )));
        }
    }
    if data.len() != dim * dim {
        return Err(Error::Parse(format!(
            "expected {dim} rows, found {}",
            data.len() / dim.max(1)
        )));
    }
    if lines.next().is_some() {
        return Err(Error::Parse("trailing content after matrix rows".into()));
    }
    SymMatrix::from_row_major(dim, data)
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<SymMatrix> {
    from_text(&std::fs::read_to_string(path)?)
}

pub fn write_matrix(path: impl AsRef<Path>, a: &SymMatrix) -> Result<()> {
    std::fs::write(path, to_text(a))?;
    Ok(())
}

/// Vectors use the same layout: the length, then one value per line.
pub fn vector_to_text(v: &[f64]) -> String {
    let mut out = String::new();
    writeln!(out, "{}", v.len()).unwrap();
    for x in v {
        writeln!(out, "{x:.16e}").unwrap();
    }
    out
}

pub fn vector_from_text(text: &str) -> Result<Vec<f64>> {
    let mut tokens = text.split_whitespace();
    let header = tokens
        .next()
        .ok_or_else(|| Error::Parse("vector text is empty".into()))?;
    let len: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("invalid length line {header:?}")))?;
    let values = tokens
        .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("invalid number {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != len {
        return Err(Error::Parse(format!("expected {len} values, found {}", values.len())));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("vector text"));
    }
    Ok(values)
}

pub fn read_vector(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    vector_from_text(&std::fs::read_to_string(path)?)
}

pub fn write_vector(path: impl AsRef<Path>, v: &[f64]) -> Result<()> {
    std::fs::write(path, vector_to_text(v))?;
    Ok(())
}

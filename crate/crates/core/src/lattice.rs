//! Exact integer matrix arithmetic for model matrices.
//!
//! A [`ModelMatrix`] has one row per table cell and one column per model
//! parameter. Its kernel lattice `{u in Z^k : u^T A = 0}` is the set of
//! exponent differences of the binomials in the toric ideal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Identifier of the cell a matrix row stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CellLabel {
    /// Cell `(i, j)` of a two-way table, 1-based.
    Cell(usize, usize),
    /// Opaque 1-based index.
    Index(usize),
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Cell(i, j) => write!(f, "p_{{{i},{j}}}"),
            CellLabel::Index(i) => write!(f, "p_{i}"),
        }
    }
}

/// Non-negative integer model matrix with labelled rows (cells) and
/// columns (parameters).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModelMatrix {
    rows: Vec<Vec<u64>>,
    row_labels: Vec<CellLabel>,
    col_labels: Vec<String>,
}

impl ModelMatrix {
    pub fn new(
        rows: Vec<Vec<u64>>,
        row_labels: Vec<CellLabel>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if k == 0 || n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::RaggedRow {
                row,
                expected: n,
                found: r.len(),
            });
        }
        if row_labels.len() != k {
            return Err(Error::LabelCount {
                what: "row",
                expected: k,
                found: row_labels.len(),
            });
        }
        if col_labels.len() != n {
            return Err(Error::LabelCount {
                what: "column",
                expected: n,
                found: col_labels.len(),
            });
        }
        Ok(Self {
            rows,
            row_labels,
            col_labels,
        })
    }

    /// Matrix with opaque row labels `p_1..p_k` and column labels `a0..a_t`.
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let row_labels = (1..=k).map(CellLabel::Index).collect();
        let col_labels = (0..n).map(|j| format!("a{j}")).collect();
        Self::new(rows, row_labels, col_labels)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.rows[i][j]
    }

    pub fn row_labels(&self) -> &[CellLabel] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// True when some column is identically one. The toric ideal is then
    /// homogeneous in the standard grading.
    pub fn has_constant_column(&self) -> bool {
        (0..self.ncols()).any(|j| self.rows.iter().all(|r| r[j] == 1))
    }

    pub fn is_binary(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x <= 1)
    }

    /// Row sums; a positive grading of the kernel lattice when no row is zero.
    pub fn row_sums(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    fn check_column(&self, j: usize) -> Result<()> {
        if j >= self.ncols() {
            Err(Error::ColumnOutOfRange {
                index: j,
                cols: self.ncols(),
            })
        } else {
            Ok(())
        }
    }

    fn to_bigint_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

/// Independence model matrix `[1, r_1..r_I, c_1..c_J]` for an `I x J`
/// table, cells in row-major order.
pub fn build_independence_matrix(rows: usize, cols: usize) -> Result<ModelMatrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidTableSize { rows, cols });
    }
    let width = 1 + rows + cols;
    let mut entries = Vec::with_capacity(rows * cols);
    let mut row_labels = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut r = vec![0u64; width];
            r[0] = 1;
            r[1 + i] = 1;
            r[1 + rows + j] = 1;
            entries.push(r);
            row_labels.push(CellLabel::Cell(i + 1, j + 1));
        }
    }
    let mut col_labels = Vec::with_capacity(width);
    col_labels.push(String::from("const"));
    col_labels.extend((1..=rows).map(|i| format!("r{i}")));
    col_labels.extend((1..=cols).map(|j| format!("c{j}")));
    ModelMatrix::new(entries, row_labels, col_labels)
}

/// Replaces columns `a` and `b` by their sum, kept at the lower position.
pub fn merge_columns(m: &ModelMatrix, a: usize, b: usize) -> Result<ModelMatrix> {
    m.check_column(a)?;
    m.check_column(b)?;
    if a == b {
        return Err(Error::SameColumn(a));
    }
    if a == 0 || b == 0 {
        return Err(Error::ConstantColumn);
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let rows = m
        .rows
        .iter()
        .map(|r| {
            let mut out = r.clone();
            out[lo] += out[hi];
            out.remove(hi);
            out
        })
        .collect();
    let mut col_labels = m.col_labels.clone();
    col_labels[lo] = format!("{}+{}", m.col_labels[lo], m.col_labels[hi]);
    col_labels.remove(hi);
    ModelMatrix::new(rows, m.row_labels.clone(), col_labels)
}

/// Groups of identical rows. The reduced matrix keeps the first row of each
/// group; groups are listed by their first row, singletons included.
pub fn dedupe_rows(m: &ModelMatrix) -> (ModelMatrix, Vec<Vec<usize>>) {
    let mut index: BTreeMap<&[u64], usize> = BTreeMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, r) in m.rows.iter().enumerate() {
        match index.get(r.as_slice()) {
            Some(&g) => groups[g].push(i),
            None => {
                index.insert(r.as_slice(), groups.len());
                groups.push(vec![i]);
            }
        }
    }
    let keep: Vec<usize> = groups.iter().map(|g| g[0]).collect();
    let reduced = ModelMatrix {
        rows: keep.iter().map(|&i| m.rows[i].clone()).collect(),
        row_labels: keep.iter().map(|&i| m.row_labels[i]).collect(),
        col_labels: m.col_labels.clone(),
    };
    (reduced, groups)
}

/// Basis of an integer lattice in `Z^k`, kept in row Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    vectors: Vec<Vec<BigInt>>,
    ambient_dim: usize,
    grading: Option<Vec<u64>>,
}

impl LatticeBasis {
    /// Lattice spanned by `vectors`. Dependent generators are allowed; the
    /// stored basis is their Hermite normal form.
    pub fn new(vectors: Vec<Vec<BigInt>>, ambient_dim: usize) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        Ok(Self {
            vectors: hermite_rows(vectors),
            ambient_dim,
            grading: None,
        })
    }

    pub fn from_i64(vectors: &[Vec<i64>], ambient_dim: usize) -> Result<Self> {
        Self::new(
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            ambient_dim,
        )
    }

    /// Attaches a non-negative grading orthogonal to every lattice vector.
    pub fn with_grading(mut self, grading: Vec<u64>) -> Result<Self> {
        if grading.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: grading.len(),
            });
        }
        let orthogonal = self.vectors.iter().all(|v| {
            v.iter()
                .zip(&grading)
                .fold(BigInt::zero(), |acc, (x, &w)| acc + x * BigInt::from(w))
                .is_zero()
        });
        if !orthogonal {
            return Err(Error::BadGrading);
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn grading(&self) -> Option<&[u64]> {
        self.grading.as_deref()
    }

    /// Basis vectors as machine integers.
    pub fn vectors_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| i64::try_from(x).map_err(|_| Error::Overflow))
                    .collect()
            })
            .collect()
    }

    /// Exact membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let mut rest = v.to_vec();
        for b in &self.vectors {
            let Some(c) = b.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            let (q, r) = rest[c].div_rem(&b[c]);
            if !r.is_zero() {
                return false;
            }
            if !q.is_zero() {
                for (x, y) in rest.iter_mut().zip(b) {
                    *x -= &q * y;
                }
            }
        }
        rest.iter().all(Zero::is_zero)
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&v)
    }
}

/// Row echelon elimination by integer row operations, applied in lockstep to
/// `rows` and `companion`. Returns the number of pivot rows.
fn integer_echelon(rows: &mut [Vec<BigInt>], companion: &mut [Vec<BigInt>]) -> usize {
    let k = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot = 0;
    for c in 0..n {
        if pivot == k {
            break;
        }
        loop {
            let best = (pivot..k)
                .filter(|&r| !rows[r][c].is_zero())
                .min_by(|&x, &y| rows[x][c].magnitude().cmp(rows[y][c].magnitude()));
            let Some(best) = best else { break };
            rows.swap(pivot, best);
            companion.swap(pivot, best);
            let mut clean = true;
            for r in pivot + 1..k {
                if rows[r][c].is_zero() {
                    continue;
                }
                let q = &rows[r][c] / &rows[pivot][c];
                if !q.is_zero() {
                    let (head, tail) = rows.split_at_mut(r);
                    axpy(&mut tail[0], &q, &head[pivot]);
                    let (head, tail) = companion.split_at_mut(r);
                    axpy(&mut tail[0], &q, &head[pivot]);
                }
                if !rows[r][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                pivot += 1;
                break;
            }
        }
    }
    pivot
}

/// `dst -= q * src`
fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Row Hermite normal form of the lattice spanned by `vectors`; zero rows
/// are dropped.
fn hermite_rows(mut vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut none: Vec<Vec<BigInt>> = vec![Vec::new(); vectors.len()];
    let r = integer_echelon(&mut vectors, &mut none);
    vectors.truncate(r);
    for p in 0..vectors.len() {
        let c = vectors[p]
            .iter()
            .position(|x| !x.is_zero())
            .expect("echelon rows are nonzero");
        if vectors[p][c].is_negative() {
            for x in vectors[p].iter_mut() {
                *x = -core::mem::take(x);
            }
        }
        for above in 0..p {
            let q = vectors[above][c].div_floor(&vectors[p][c]);
            if !q.is_zero() {
                let (head, tail) = vectors.split_at_mut(p);
                axpy(&mut head[above], &q, &tail[0]);
            }
        }
    }
    vectors
}

/// Exact rank by integer elimination.
pub fn rank(m: &ModelMatrix) -> usize {
    let mut rows = m.to_bigint_rows();
    let mut none: Vec<Vec<BigInt>> = vec![Vec::new(); rows.len()];
    integer_echelon(&mut rows, &mut none)
}

/// Basis of `{u in Z^k : u^T A = 0}`, with the row sums of `A` attached as
/// grading.
///
/// The rows of `A` are reduced by unimodular row operations tracked in an
/// identity companion; companion rows whose image vanished form a basis of
/// the left kernel lattice.
pub fn integer_kernel(m: &ModelMatrix) -> LatticeBasis {
    let k = m.nrows();
    let mut rows = m.to_bigint_rows();
    let mut transform: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let r = integer_echelon(&mut rows, &mut transform);
    let kernel = transform.split_off(r);
    LatticeBasis {
        vectors: hermite_rows(kernel),
        ambient_dim: k,
        grading: Some(m.row_sums()),
    }
}

/// Whether the two matrices have the same kernel lattice.
pub fn kernels_equal(a: &ModelMatrix, b: &ModelMatrix) -> Result<bool> {
    if a.nrows() != b.nrows() {
        return Err(Error::RowCountMismatch(a.nrows(), b.nrows()));
    }
    let ka = integer_kernel(a);
    let kb = integer_kernel(b);
    Ok(ka.rank() == kb.rank()
        && ka.vectors().iter().all(|v| kb.contains(v))
        && kb.vectors().iter().all(|v| ka.contains(v)))
}

/// `k - rank(A)`.
pub fn degrees_of_freedom(m: &ModelMatrix) -> usize {
    m.nrows() - rank(m)
}

/// `u^T A` for an integer vector `u`.
pub fn left_multiply(u: &[i64], m: &ModelMatrix) -> Vec<i128> {
    let mut out = vec![0i128; m.ncols()];
    for (x, r) in u.iter().zip(m.rows()) {
        if *x != 0 {
            for (o, &a) in out.iter_mut().zip(r) {
                *o += i128::from(*x) * i128::from(a);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_by_three() -> ModelMatrix {
        build_independence_matrix(3, 3).unwrap()
    }

    #[test]
    fn independence_matrix_shapes() {
        let a = three_by_three();
        assert_eq!((a.nrows(), a.ncols()), (9, 7));
        assert_eq!(a.row(0), &[1, 1, 0, 0, 1, 0, 0]);
        assert_eq!(a.row(5), &[1, 0, 1, 0, 0, 0, 1]);
        assert_eq!(a.row(8), &[1, 0, 0, 1, 0, 0, 1]);

        let one = build_independence_matrix(1, 1).unwrap();
        assert_eq!(one.rows(), &[vec![1, 1, 1]]);

        let b = build_independence_matrix(2, 3).unwrap();
        assert_eq!((b.nrows(), b.ncols()), (6, 6));
        for r in b.rows() {
            assert_eq!(r.iter().sum::<u64>(), 3);
            assert_eq!(r.iter().filter(|&&x| x == 1).count(), 3);
        }
        assert!(build_independence_matrix(0, 2).is_err());
        assert!(build_independence_matrix(2, 0).is_err());
    }

    #[test]
    fn merge_last_two_column_indicators() {
        let m = merge_columns(&three_by_three(), 5, 6).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (9, 6));
        assert_eq!(m.col_labels()[5], "c2+c3");
        assert_eq!(m.row(1), m.row(2));
        assert_eq!(m.row(4), m.row(5));
        assert_eq!(m.row(7), m.row(8));
        let (reduced, _) = dedupe_rows(&m);
        assert_eq!(reduced.nrows(), 6);
    }

    #[test]
    fn merge_row_with_column_indicator() {
        let m = merge_columns(&three_by_three(), 3, 6).unwrap();
        let expected: Vec<Vec<u64>> = vec![
            vec![1, 1, 0, 0, 1, 0],
            vec![1, 1, 0, 0, 0, 1],
            vec![1, 1, 0, 1, 0, 0],
            vec![1, 0, 1, 0, 1, 0],
            vec![1, 0, 1, 0, 0, 1],
            vec![1, 0, 1, 1, 0, 0],
            vec![1, 0, 0, 1, 1, 0],
            vec![1, 0, 0, 1, 0, 1],
            vec![1, 0, 0, 2, 0, 0],
        ];
        assert_eq!(m.rows(), expected.as_slice());
        // argument order does not matter
        assert_eq!(
            merge_columns(&three_by_three(), 6, 3).unwrap().rows(),
            m.rows()
        );
    }

    #[test]
    fn merge_rejects_bad_indices() {
        let a = three_by_three();
        assert_eq!(merge_columns(&a, 2, 2), Err(Error::SameColumn(2)));
        assert_eq!(merge_columns(&a, 0, 2), Err(Error::ConstantColumn));
        assert!(matches!(
            merge_columns(&a, 1, 7),
            Err(Error::ColumnOutOfRange { index: 7, .. })
        ));
    }

    #[test]
    fn merge_into_zero_kernel_matrix() {
        let a = ModelMatrix::from_rows(vec![
            vec![1, 0, 1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 1],
        ])
        .unwrap();
        let m = merge_columns(&a, 3, 4).unwrap();
        let cols: Vec<Vec<u64>> = (0..4)
            .map(|j| m.rows().iter().map(|r| r[j]).collect())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec![1, 0, 1, 0],
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 1],
                vec![0, 1, 0, 1]
            ]
        );
        assert!(integer_kernel(&a).is_empty());
        let k = integer_kernel(&m);
        assert_eq!(k.vectors_i64().unwrap(), vec![vec![1, 1, -1, -1]]);
    }

    #[test]
    fn dedupe_cases() {
        let distinct = three_by_three();
        let (r, g) = dedupe_rows(&distinct);
        assert_eq!(r, distinct);
        assert!(g.iter().all(|g| g.len() == 1));

        let same = ModelMatrix::from_rows(vec![vec![1, 1]; 3]).unwrap();
        let (r, g) = dedupe_rows(&same);
        assert_eq!(r.nrows(), 1);
        assert_eq!(g, vec![vec![0, 1, 2]]);

        let merged = merge_columns(&three_by_three(), 5, 6).unwrap();
        let (_, g) = dedupe_rows(&merged);
        let pairs: Vec<_> = g.into_iter().filter(|g| g.len() > 1).collect();
        assert_eq!(pairs, vec![vec![1, 2], vec![4, 5], vec![7, 8]]);
    }

    #[test]
    fn kernel_and_rank() {
        let a = three_by_three();
        let k = integer_kernel(&a);
        assert_eq!(k.rank(), 4);
        assert_eq!(rank(&a), 5);
        assert_eq!(degrees_of_freedom(&a), 4);
        for v in k.vectors_i64().unwrap() {
            assert!(left_multiply(&v, &a).iter().all(|&x| x == 0));
        }
        let perm =
            ModelMatrix::from_rows(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).unwrap();
        assert_eq!(degrees_of_freedom(&perm), 0);
        assert_eq!(
            degrees_of_freedom(&build_independence_matrix(2, 2).unwrap()),
            1
        );
    }

    #[test]
    fn kernel_equality() {
        let a = three_by_three();
        let b = merge_columns(&a, 3, 6).unwrap();
        let c = merge_columns(&a, 5, 6).unwrap();
        assert!(kernels_equal(&a, &a).unwrap());
        assert!(kernels_equal(&a, &b).unwrap());
        assert!(!kernels_equal(&a, &c).unwrap());
        // the new vector e_(1,2) - e_(1,3) lies in the merged kernel only
        let mut v = vec![0i64; 9];
        v[1] = 1;
        v[2] = -1;
        assert!(integer_kernel(&c).contains_i64(&v));
        assert!(!integer_kernel(&a).contains_i64(&v));
        let small = build_independence_matrix(2, 2).unwrap();
        assert_eq!(
            kernels_equal(&a, &small),
            Err(Error::RowCountMismatch(9, 4))
        );
    }

    #[test]
    fn lattice_membership_needs_integrality() {
        let l = LatticeBasis::from_i64(&[vec![2, 0], vec![0, 3]], 2).unwrap();
        assert!(l.contains_i64(&[4, -3]));
        assert!(!l.contains_i64(&[1, 0]));
        assert!(!l.contains_i64(&[2, 1]));
    }

    #[test]
    fn validation() {
        assert_eq!(ModelMatrix::from_rows(vec![]), Err(Error::EmptyMatrix));
        assert!(matches!(
            ModelMatrix::from_rows(vec![vec![1, 2], vec![1]]),
            Err(Error::RaggedRow { row: 1, .. })
        ));
        let m = ModelMatrix::from_rows(vec![vec![1, 0]]).unwrap();
        assert!(!m.has_constant_column() || m.row(0)[0] == 1);
        assert!(three_by_three().has_constant_column());
    }
}

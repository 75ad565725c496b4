//! Toric models, and what merging two model parameters does to their ideal.
//!
//! Merging columns `a` and `b` of a model matrix `A` imposes equality of the
//! two parameters. The toric ideal of the merged matrix `Ã` always contains
//! `I(A)`; [`analyze_merge`] reports the binomials that have to be added.

use alloc::vec;
use alloc::vec::Vec;

use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, ideal_sum, IdealPresentation};
use crate::lattice::{dedupe_rows, integer_kernel, merge_columns, ModelMatrix};
use crate::oracle::{check_completeness, OracleConfig};
use crate::order::TermOrder;
use crate::saturation::lattice_to_toric;

/// The monomial parametrization `p_i -> prod_j zeta_j^{a_ij}` of a model
/// matrix. Its kernel is the toric ideal.
#[derive(Debug, Clone, Copy)]
pub struct MonomialMap<'a> {
    matrix: &'a ModelMatrix,
}

impl<'a> MonomialMap<'a> {
    pub fn new(matrix: &'a ModelMatrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &'a ModelMatrix {
        self.matrix
    }

    /// Exponent vector in the parameters of the image of `p^m`.
    pub fn image(&self, monomial: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.matrix.ncols()];
        for (&e, row) in monomial.iter().zip(self.matrix.rows()) {
            if e > 0 {
                for (o, &a) in out.iter_mut().zip(row) {
                    *o += e * a;
                }
            }
        }
        out
    }

    /// Whether the binomial maps to zero.
    pub fn annihilates(&self, b: &Binomial) -> bool {
        b.dim() == self.matrix.nrows() && self.image(b.plus()) == self.image(b.minus())
    }
}

fn check_order(m: &ModelMatrix, order: &TermOrder) -> Result<()> {
    if order.dim() == m.nrows() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: m.nrows(),
            found: order.dim(),
        })
    }
}

/// `I(A) = <p^a - p^b : A^T a = A^T b>`.
pub fn toric_ideal(m: &ModelMatrix, order: &TermOrder) -> Result<IdealPresentation> {
    check_order(m, order)?;
    lattice_to_toric(&integer_kernel(m), order)
}

/// The 2x2 minors `p_{i,j} p_{h,k} - p_{i,k} p_{h,j}`, `i < h`, `j < k`, of an
/// `rows x cols` table with row-major cells.
pub fn independence_minors(rows: usize, cols: usize) -> Vec<Binomial> {
    let dim = rows * cols;
    let cell = |i: usize, j: usize| i * cols + j;
    let mut out = Vec::new();
    for i in 0..rows {
        for h in i + 1..rows {
            for j in 0..cols {
                for k in j + 1..cols {
                    let mut plus = vec![0u64; dim];
                    let mut minus = vec![0u64; dim];
                    plus[cell(i, j)] = 1;
                    plus[cell(h, k)] = 1;
                    minus[cell(i, k)] = 1;
                    minus[cell(h, j)] = 1;
                    out.push(Binomial::from_parts(plus, minus));
                }
            }
        }
    }
    out
}

/// Splitting of `I(A)` along groups of repeated rows.
#[derive(Debug, Clone)]
pub struct RowDecomposition {
    /// `A` with every repeated row removed except its first occurrence.
    pub reduced_matrix: ModelMatrix,
    /// Groups of equal rows of `A`, singletons included.
    pub groups: Vec<Vec<usize>>,
    /// Ideal of the reduced matrix, written in the full set of variables
    /// via the group representatives.
    pub reduced_ideal: IdealPresentation,
    /// `p_first - p_other` for every repeated row.
    pub linear: Vec<Binomial>,
}

pub fn repeated_row_decomposition(m: &ModelMatrix, order: &TermOrder) -> Result<RowDecomposition> {
    check_order(m, order)?;
    let k = m.nrows();
    let (reduced, groups) = dedupe_rows(m);
    let small = toric_ideal(&reduced, &TermOrder::degrevlex(reduced.nrows()))?;
    let reps: Vec<usize> = groups.iter().map(|g| g[0]).collect();
    let lift = |v: &[u64]| {
        let mut out = vec![0u64; k];
        for (&e, &r) in v.iter().zip(&reps) {
            out[r] = e;
        }
        out
    };
    let lifted: Vec<Binomial> = small
        .groebner()
        .iter()
        .map(|g| Binomial::from_parts(lift(g.plus()), lift(g.minus())))
        .collect();
    let reduced_ideal = IdealPresentation::from_generators(lifted, order.clone())?;
    let linear = groups
        .iter()
        .flat_map(|g| g[1..].iter().map(move |&d| Binomial::linear(k, g[0], d)))
        .map(|b| b.normalized(order))
        .collect();
    Ok(RowDecomposition {
        reduced_matrix: reduced,
        groups,
        reduced_ideal,
        linear,
    })
}

/// What a column merge adds to the toric ideal.
#[derive(Debug, Clone)]
pub struct MergeReport {
    /// Merged columns, as positions in the source matrix.
    pub columns: (usize, usize),
    pub merged_matrix: ModelMatrix,
    /// `I(A)`.
    pub base: IdealPresentation,
    /// `I(Ã)`.
    pub merged: IdealPresentation,
    /// Linear elements of the merged basis not already in `I(A)`.
    pub added_linear: Vec<Binomial>,
    /// Remaining generators needed on top of `I(A) + <added_linear>`.
    pub added_higher: Vec<Binomial>,
    pub identical: bool,
    /// False when a row factor is merged with a column factor.
    pub interpretable: bool,
}

impl MergeReport {
    /// Everything that was added, linear part first.
    pub fn added(&self) -> Vec<Binomial> {
        let mut all = self.added_linear.clone();
        all.extend_from_slice(&self.added_higher);
        all
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FactorKind {
    Row,
    Column,
    Mixed,
    Other,
}

/// Classifies independence-style labels `r<i>`, `c<j>` and their `+` joins.
fn factor_kind(label: &str) -> FactorKind {
    let kind_of = |part: &str| {
        let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
        if part.strip_prefix('r').is_some_and(digits) {
            FactorKind::Row
        } else if part.strip_prefix('c').is_some_and(digits) {
            FactorKind::Column
        } else {
            FactorKind::Other
        }
    };
    let mut parts = label.split('+').map(kind_of);
    let first = parts.next().unwrap_or(FactorKind::Other);
    if parts.all(|k| k == first) {
        first
    } else {
        FactorKind::Mixed
    }
}

fn interpretable_merge(m: &ModelMatrix, a: usize, b: usize) -> bool {
    let (x, y) = (
        factor_kind(&m.col_labels()[a]),
        factor_kind(&m.col_labels()[b]),
    );
    !matches!(
        (x, y),
        (FactorKind::Mixed, _)
            | (_, FactorKind::Mixed)
            | (FactorKind::Row, FactorKind::Column)
            | (FactorKind::Column, FactorKind::Row)
    )
}

/// Computes `I(A)` and `I(Ã)` and splits the difference into linear and
/// higher-degree binomials.
pub fn analyze_merge(
    m: &ModelMatrix,
    a: usize,
    b: usize,
    order: &TermOrder,
) -> Result<MergeReport> {
    merge_columns(m, a, b)?;
    let base = toric_ideal(m, order)?;
    analyze_merge_from(base, m, a, b)
}

/// [`analyze_merge`] with `I(A)` already known.
pub fn analyze_merge_from(
    base: IdealPresentation,
    m: &ModelMatrix,
    a: usize,
    b: usize,
) -> Result<MergeReport> {
    let order = base.order().clone();
    check_order(m, &order)?;
    let merged_matrix = merge_columns(m, a, b)?;
    let merged = toric_ideal(&merged_matrix, &order)?;
    if !merged.contains_all(base.groebner())? {
        return Err(Error::Invariant(
            "merged ideal does not contain the base ideal",
        ));
    }

    let mut added_linear = Vec::new();
    for g in merged.linear_part() {
        if !base.contains(&g)? {
            added_linear.push(g);
        }
    }
    let mut running = ideal_sum(&base, &added_linear)?;
    let mut rest: Vec<&Binomial> = merged
        .groebner()
        .iter()
        .filter(|g| !g.is_linear())
        .collect();
    rest.sort_by(|x, y| {
        x.degree()
            .cmp(&y.degree())
            .then_with(|| order.cmp(x.plus(), y.plus()))
            .then_with(|| order.cmp(x.minus(), y.minus()))
    });
    let mut added_higher = Vec::new();
    for g in rest {
        if !running.contains(g)? {
            added_higher.push(g.clone());
            running = ideal_sum(&running, core::slice::from_ref(g))?;
        }
    }
    let identical = added_linear.is_empty() && added_higher.is_empty();
    Ok(MergeReport {
        columns: (a, b),
        interpretable: interpretable_merge(m, a, b),
        merged_matrix,
        base,
        merged,
        added_linear,
        added_higher,
        identical,
    })
}

fn check_row(m: &ModelMatrix, i: usize) -> Result<()> {
    if i < m.nrows() {
        Ok(())
    } else {
        Err(Error::RowOutOfRange {
            index: i,
            rows: m.nrows(),
        })
    }
}

fn agree_outside(m: &ModelMatrix, h: usize, k: usize, a: usize, b: usize) -> bool {
    let (rh, rk) = (m.row(h), m.row(k));
    (0..m.ncols()).all(|j| j == a || j == b || rh[j] == rk[j])
}

/// Row pairs `(h, k)`, `h < k`, for which `p_h - p_k` lies in the ideal of
/// the merged matrix: rows agree off `{a, b}` and have equal `a + b` sums.
pub fn linear_binomial_pairs(m: &ModelMatrix, a: usize, b: usize) -> Result<Vec<(usize, usize)>> {
    merge_columns(m, a, b)?;
    let mut out = Vec::new();
    for h in 0..m.nrows() {
        for k in h + 1..m.nrows() {
            let (rh, rk) = (m.row(h), m.row(k));
            if agree_outside(m, h, k, a, b) && rh[a] + rh[b] == rk[a] + rk[b] {
                out.push((h, k));
            }
        }
    }
    Ok(out)
}

/// The 2x2 subtables a pair of binary rows can show on the merged columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryConfig {
    /// `[[1,0],[0,1]]`: the merge creates `p_k - p_h`.
    A,
    /// Equal rows with a one in the merged columns: `p_k - p_h` already in
    /// `I(A)`.
    B,
    /// Different sums: no linear binomial.
    C,
    /// `[[0,0],[0,0]]`: `p_k - p_h` already in `I(A)`.
    D,
    /// The rows differ outside the merged columns.
    NotApplicable,
}

impl BinaryConfig {
    /// Whether `p_k - p_h` lies in the merged ideal.
    pub fn linear_in_merged(self) -> bool {
        matches!(self, Self::A | Self::B | Self::D)
    }

    /// Whether `p_k - p_h` was already in the ideal before the merge.
    pub fn linear_in_base(self) -> bool {
        matches!(self, Self::B | Self::D)
    }
}

pub fn classify_binary_merge(
    m: &ModelMatrix,
    h: usize,
    k: usize,
    a: usize,
    b: usize,
) -> Result<BinaryConfig> {
    if !m.is_binary() {
        return Err(Error::NotBinary);
    }
    merge_columns(m, a, b)?;
    check_row(m, h)?;
    check_row(m, k)?;
    if !agree_outside(m, h, k, a, b) {
        return Ok(BinaryConfig::NotApplicable);
    }
    let (x, y) = (
        (m.entry(h, a), m.entry(h, b)),
        (m.entry(k, a), m.entry(k, b)),
    );
    Ok(if x.0 + x.1 != y.0 + y.1 {
        BinaryConfig::C
    } else if x == (0, 0) {
        BinaryConfig::D
    } else if x == y {
        BinaryConfig::B
    } else {
        BinaryConfig::A
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Rows,
    Columns,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Rows => "rows",
            Axis::Columns => "columns",
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::Rows => Axis::Columns,
            Axis::Columns => Axis::Rows,
        }
    }
}

/// A same-axis merge in the independence model.
#[derive(Debug, Clone)]
pub struct IndependenceMerge {
    pub report: MergeReport,
    /// Shape of the table left after identifying the two rows or columns.
    pub reduced_table: (usize, usize),
    /// Independence ideal of the reduced table, in the full set of
    /// variables.
    pub reduced_ideal: IdealPresentation,
}

/// Merges rows (or columns) `a < b` (1-based) of an `rows x cols` table
/// under the independence model and checks that only the linear binomials
/// identifying the two rows (columns) are added.
pub fn independence_merge(
    rows: usize,
    cols: usize,
    axis: Axis,
    a: usize,
    b: usize,
    order: &TermOrder,
) -> Result<IndependenceMerge> {
    let max = match axis {
        Axis::Rows => rows,
        Axis::Columns => cols,
    };
    for idx in [a, b] {
        if idx == 0 || idx > max {
            return Err(Error::AxisIndex {
                axis: axis.name(),
                index: idx,
                max,
            });
        }
    }
    if a == b {
        return Err(Error::SameColumn(a));
    }
    let (a, b) = (a.min(b), a.max(b));
    let matrix = crate::lattice::build_independence_matrix(rows, cols)?;
    let (ca, cb) = match axis {
        Axis::Rows => (a, b),
        Axis::Columns => (rows + a, rows + b),
    };
    let report = analyze_merge(&matrix, ca, cb, order)?;

    let dim = rows * cols;
    let cell = |i: usize, j: usize| (i - 1) * cols + (j - 1);
    let mut expected: Vec<Binomial> = match axis {
        Axis::Rows => (1..=cols)
            .map(|j| Binomial::linear(dim, cell(a, j), cell(b, j)))
            .collect(),
        Axis::Columns => (1..=rows)
            .map(|i| Binomial::linear(dim, cell(i, a), cell(i, b)))
            .collect(),
    };
    expected.iter_mut().for_each(|g| *g = g.normalized(order));
    expected.sort();
    let mut got = report.added_linear.clone();
    got.sort();
    if got != expected {
        return Err(Error::Invariant(
            "same-axis merge added unexpected linear binomials",
        ));
    }
    if !report.added_higher.is_empty() {
        return Err(Error::Invariant(
            "same-axis merge added higher-degree binomials",
        ));
    }

    let reduced_table = match axis {
        Axis::Rows => (rows - 1, cols),
        Axis::Columns => (rows, cols - 1),
    };
    let reduced_ideal = repeated_row_decomposition(&report.merged_matrix, order)?.reduced_ideal;
    Ok(IndependenceMerge {
        report,
        reduced_table,
        reduced_ideal,
    })
}

/// Checks the two computable consequences of the merge theorem: `I(A)` is
/// contained in `I(Ã)`, and `I(Ã)` is the kernel of the merged
/// parametrization (every basis element is annihilated, and every bounded
/// kernel binomial reduces to zero).
pub fn verify_merge_theorem(
    m: &ModelMatrix,
    a: usize,
    b: usize,
    order: &TermOrder,
    config: &OracleConfig,
) -> Result<bool> {
    let merged_matrix = merge_columns(m, a, b)?;
    let base = toric_ideal(m, order)?;
    let merged = toric_ideal(&merged_matrix, order)?;
    if !merged.contains_all(base.groebner())? {
        return Ok(false);
    }
    let psi = MonomialMap::new(&merged_matrix);
    if !merged.groebner().iter().all(|g| psi.annihilates(g)) {
        return Ok(false);
    }
    check_completeness(&merged, &merged_matrix, config)
}

/// Reduced Gröbner basis of `gens` lifted along an index map into `dim`
/// variables; used to compare ideals living on different variable sets.
pub fn lift_to(
    gens: &[Binomial],
    positions: &[usize],
    dim: usize,
    order: &TermOrder,
) -> Result<Vec<Binomial>> {
    let lift = |v: &[u64]| {
        let mut out = vec![0u64; dim];
        for (&e, &p) in v.iter().zip(positions) {
            out[p] += e;
        }
        out
    };
    let lifted: Vec<Binomial> = gens
        .iter()
        .map(|g| Binomial::from_parts(lift(g.plus()), lift(g.minus())))
        .collect();
    buchberger(&lifted, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideals_equal;
    use crate::lattice::build_independence_matrix;

    fn cell3(i: usize, j: usize) -> usize {
        (i - 1) * 3 + (j - 1)
    }

    fn four_by_five() -> ModelMatrix {
        ModelMatrix::from_rows(vec![
            vec![1, 0, 1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![1, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 1],
        ])
        .unwrap()
    }

    #[test]
    fn independence_ideal_is_the_minors() {
        let a = build_independence_matrix(3, 3).unwrap();
        let o = TermOrder::degrevlex(9);
        let i = toric_ideal(&a, &o).unwrap();
        let minors = IdealPresentation::from_generators(independence_minors(3, 3), o).unwrap();
        assert!(ideals_equal(&i, &minors).unwrap());
        assert!(i.linear_part().is_empty());
        for g in i.groebner() {
            assert!(MonomialMap::new(&a).annihilates(g));
            assert!(g.is_homogeneous());
        }
    }

    #[test]
    fn minors_counts() {
        assert_eq!(independence_minors(3, 3).len(), 9);
        assert_eq!(independence_minors(4, 4).len(), 36);
        assert!(independence_minors(1, 5).is_empty());
        assert!(independence_minors(5, 1).is_empty());
    }

    #[test]
    fn column_merge_report() {
        let a = build_independence_matrix(3, 3).unwrap();
        let r = analyze_merge(&a, 5, 6, &TermOrder::degrevlex(9)).unwrap();
        let mut expected: Vec<Binomial> = (1..=3)
            .map(|i| Binomial::linear(9, cell3(i, 2), cell3(i, 3)))
            .collect();
        expected.sort();
        let mut got = r.added_linear.clone();
        got.sort();
        assert_eq!(got, expected);
        assert!(r.added_higher.is_empty());
        assert!(!r.identical);
        assert!(r.interpretable);
        assert_eq!(r.merged.groebner().len(), 6);
    }

    #[test]
    fn cross_axis_merge_is_identical_but_not_interpretable() {
        let a = build_independence_matrix(3, 3).unwrap();
        let r = analyze_merge(&a, 3, 6, &TermOrder::degrevlex(9)).unwrap();
        assert!(r.identical);
        assert!(!r.interpretable);
    }

    #[test]
    fn merge_adds_a_quadric() {
        let r = analyze_merge(&four_by_five(), 3, 4, &TermOrder::degrevlex(4)).unwrap();
        assert!(r.base.is_zero());
        assert!(r.added_linear.is_empty());
        assert_eq!(
            r.added_higher,
            vec![Binomial::from_difference(&[1, 1, -1, -1])]
        );
    }

    #[test]
    fn row_decomposition() {
        let merged = merge_columns(&build_independence_matrix(3, 3).unwrap(), 5, 6).unwrap();
        let o = TermOrder::degrevlex(9);
        let d = repeated_row_decomposition(&merged, &o).unwrap();
        assert_eq!(d.linear.len(), 3);
        assert_eq!(d.reduced_ideal.groebner().len(), 3);
        let sum = ideal_sum(&d.reduced_ideal, &d.linear).unwrap();
        assert!(ideals_equal(&sum, &toric_ideal(&merged, &o).unwrap()).unwrap());

        let equal = ModelMatrix::from_rows(vec![vec![1, 1]; 3]).unwrap();
        let d = repeated_row_decomposition(&equal, &TermOrder::degrevlex(3)).unwrap();
        assert!(d.reduced_ideal.is_zero());
        assert_eq!(
            d.linear,
            vec![Binomial::linear(3, 0, 1), Binomial::linear(3, 0, 2)]
        );

        let a = build_independence_matrix(2, 3).unwrap();
        let d = repeated_row_decomposition(&a, &TermOrder::degrevlex(6)).unwrap();
        assert!(d.linear.is_empty());
        assert!(ideals_equal(
            &d.reduced_ideal,
            &toric_ideal(&a, &TermOrder::degrevlex(6)).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn linear_pairs_closed_form() {
        let a = build_independence_matrix(3, 3).unwrap();
        let pairs = linear_binomial_pairs(&a, 5, 6).unwrap();
        assert_eq!(
            pairs,
            vec![
                (cell3(1, 2), cell3(1, 3)),
                (cell3(2, 2), cell3(2, 3)),
                (cell3(3, 2), cell3(3, 3))
            ]
        );
        assert!(linear_binomial_pairs(&a, 3, 6).unwrap().is_empty());
        let distinct =
            ModelMatrix::from_rows(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            linear_binomial_pairs(&distinct, 1, 2).unwrap(),
            vec![(1, 2)]
        );
    }

    #[test]
    fn binary_configurations() {
        let sub = |x: [u64; 2], y: [u64; 2]| {
            ModelMatrix::from_rows(vec![vec![1, x[0], x[1]], vec![1, y[0], y[1]]]).unwrap()
        };
        let c = |m: ModelMatrix| classify_binary_merge(&m, 0, 1, 1, 2).unwrap();
        assert_eq!(c(sub([1, 0], [0, 1])), BinaryConfig::A);
        assert_eq!(c(sub([1, 0], [1, 0])), BinaryConfig::B);
        assert_eq!(c(sub([1, 0], [0, 0])), BinaryConfig::C);
        assert_eq!(c(sub([0, 0], [0, 0])), BinaryConfig::D);
        assert_eq!(c(sub([1, 1], [1, 1])), BinaryConfig::B);
        let off = ModelMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            classify_binary_merge(&off, 0, 1, 1, 2).unwrap(),
            BinaryConfig::NotApplicable
        );
        let two = ModelMatrix::from_rows(vec![vec![1, 2, 0], vec![1, 0, 1]]).unwrap();
        assert_eq!(
            classify_binary_merge(&two, 0, 1, 1, 2),
            Err(Error::NotBinary)
        );
    }

    #[test]
    fn independence_merges() {
        let m = independence_merge(3, 3, Axis::Columns, 2, 3, &TermOrder::degrevlex(9)).unwrap();
        assert_eq!(m.report.added_linear.len(), 3);
        assert_eq!(m.reduced_table, (3, 2));
        // reduced model: 3x2 independence on the cells of the first two columns
        let positions: Vec<usize> = (1..=3).flat_map(|i| [cell3(i, 1), cell3(i, 2)]).collect();
        let expected = lift_to(
            &independence_minors(3, 2),
            &positions,
            9,
            &TermOrder::degrevlex(9),
        )
        .unwrap();
        assert_eq!(m.reduced_ideal.groebner(), expected.as_slice());

        let m = independence_merge(2, 2, Axis::Rows, 1, 2, &TermOrder::degrevlex(4)).unwrap();
        let mut got = m.report.added_linear.clone();
        got.sort();
        assert_eq!(
            got,
            vec![Binomial::linear(4, 1, 3), Binomial::linear(4, 0, 2)]
        );
        assert!(m.reduced_ideal.is_zero());

        let m = independence_merge(3, 1, Axis::Rows, 1, 3, &TermOrder::degrevlex(3)).unwrap();
        assert_eq!(m.report.added_linear, vec![Binomial::linear(3, 0, 2)]);

        assert!(independence_merge(3, 3, Axis::Rows, 2, 2, &TermOrder::degrevlex(9)).is_err());
        assert!(independence_merge(3, 3, Axis::Rows, 1, 4, &TermOrder::degrevlex(9)).is_err());
    }

    #[test]
    fn merge_theorem_cases() {
        let cfg = OracleConfig::with_bound(2);
        let a = build_independence_matrix(3, 3).unwrap();
        assert!(verify_merge_theorem(&a, 5, 6, &TermOrder::degrevlex(9), &cfg).unwrap());
        assert!(verify_merge_theorem(&a, 3, 6, &TermOrder::degrevlex(9), &cfg).unwrap());
        assert!(
            verify_merge_theorem(&four_by_five(), 3, 4, &TermOrder::degrevlex(4), &cfg).unwrap()
        );
    }

    #[test]
    fn factor_labels() {
        assert_eq!(factor_kind("r1"), FactorKind::Row);
        assert_eq!(factor_kind("c2+c3"), FactorKind::Column);
        assert_eq!(factor_kind("r3+c3"), FactorKind::Mixed);
        assert_eq!(factor_kind("const"), FactorKind::Other);
        assert_eq!(factor_kind("a4"), FactorKind::Other);
    }
}

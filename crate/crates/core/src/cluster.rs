//! Agglomerative clustering of the rows and columns of a contingency table,
//! tracking the toric model after each merge.
//!
//! Starting from the independence model and the discrete partition, each
//! step merges the two most similar clusters of the same axis and sums the
//! matching indicator columns of the current model matrix.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::lattice::{build_independence_matrix, ModelMatrix};
use crate::models::{analyze_merge_from, toric_ideal, MergeReport};
use crate::order::TermOrder;

pub use crate::models::Axis;

/// An `I x J` table of counts with row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    counts: Vec<Vec<u64>>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl ContingencyTable {
    pub fn new(
        counts: Vec<Vec<u64>>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
    ) -> Result<Self> {
        let rows = counts.len();
        let cols = counts.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidTableSize { rows, cols });
        }
        for (row, r) in counts.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedRow {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
        }
        if row_labels.len() != rows {
            return Err(Error::LabelCount {
                what: "row",
                expected: rows,
                found: row_labels.len(),
            });
        }
        if col_labels.len() != cols {
            return Err(Error::LabelCount {
                what: "column",
                expected: cols,
                found: col_labels.len(),
            });
        }
        if counts.iter().flatten().all(|&n| n == 0) {
            return Err(Error::EmptyTable);
        }
        Ok(Self {
            counts,
            row_labels,
            col_labels,
        })
    }

    /// Labels `R1..RI` and `C1..CJ`.
    pub fn from_counts(counts: Vec<Vec<u64>>) -> Result<Self> {
        let rows = counts.len();
        let cols = counts.first().map_or(0, Vec::len);
        let row_labels = (1..=rows).map(|i| format!("R{i}")).collect();
        let col_labels = (1..=cols).map(|j| format!("C{j}")).collect();
        Self::new(counts, row_labels, col_labels)
    }

    pub fn nrows(&self) -> usize {
        self.counts.len()
    }

    pub fn ncols(&self) -> usize {
        self.counts[0].len()
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    pub fn count(&self, i: usize, j: usize) -> u64 {
        self.counts[i][j]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn labels(&self, axis: Axis) -> &[String] {
        match axis {
            Axis::Rows => &self.row_labels,
            Axis::Columns => &self.col_labels,
        }
    }

    pub fn len(&self, axis: Axis) -> usize {
        self.labels(axis).len()
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().flatten().map(|&n| u128::from(n)).sum()
    }
}

/// A set of labels taken from one axis, as 0-based sorted indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cluster {
    pub axis: Axis,
    pub members: Vec<usize>,
}

impl Cluster {
    pub fn singleton(axis: Axis, i: usize) -> Self {
        Self {
            axis,
            members: vec![i],
        }
    }

    pub fn first(&self) -> usize {
        self.members[0]
    }

    pub fn labels<'a>(&self, table: &'a ContingencyTable) -> Vec<&'a str> {
        let names = table.labels(self.axis);
        self.members.iter().map(|&i| names[i].as_str()).collect()
    }

    /// Member labels joined with `+`.
    pub fn name(&self, table: &ContingencyTable) -> String {
        self.labels(table).join("+")
    }
}

/// Row clusters and column clusters, each list ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    rows: Vec<Cluster>,
    cols: Vec<Cluster>,
}

impl Partition {
    /// Every label in its own cluster.
    pub fn discrete(rows: usize, cols: usize) -> Self {
        Self {
            rows: (0..rows)
                .map(|i| Cluster::singleton(Axis::Rows, i))
                .collect(),
            cols: (0..cols)
                .map(|j| Cluster::singleton(Axis::Columns, j))
                .collect(),
        }
    }

    pub fn on_axis(&self, axis: Axis) -> &[Cluster] {
        match axis {
            Axis::Rows => &self.rows,
            Axis::Columns => &self.cols,
        }
    }

    /// Row clusters followed by column clusters.
    pub fn clusters(&self) -> impl Iterator<Item = &Cluster> {
        self.rows.iter().chain(&self.cols)
    }

    pub fn len(&self) -> usize {
        self.rows.len() + self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Column of the current model matrix holding the indicator of the
    /// `pos`-th cluster on `axis`.
    pub fn model_column(&self, axis: Axis, pos: usize) -> usize {
        match axis {
            Axis::Rows => 1 + pos,
            Axis::Columns => 1 + self.rows.len() + pos,
        }
    }

    /// Joins clusters `p < q` of `axis`; the result takes position `p`.
    pub fn merge(&self, axis: Axis, p: usize, q: usize) -> Result<Self> {
        let list = self.on_axis(axis);
        if p >= q || q >= list.len() {
            return Err(Error::NoMergeablePair);
        }
        let mut out = self.clone();
        let list = match axis {
            Axis::Rows => &mut out.rows,
            Axis::Columns => &mut out.cols,
        };
        let gone = list.remove(q);
        list[p].members.extend(gone.members);
        list[p].members.sort_unstable();
        Ok(out)
    }

    /// Count of the combined cell block of a row cluster and a column
    /// cluster.
    fn block(table: &ContingencyTable, r: &Cluster, c: &Cluster) -> u128 {
        r.members
            .iter()
            .flat_map(|&i| {
                c.members
                    .iter()
                    .map(move |&j| u128::from(table.count(i, j)))
            })
            .sum()
    }

    /// Aggregated counts of cluster `pos` of `axis` against every cluster of
    /// the opposite axis.
    pub fn profile(&self, table: &ContingencyTable, axis: Axis, pos: usize) -> Vec<u128> {
        let me = &self.on_axis(axis)[pos];
        self.on_axis(axis.other())
            .iter()
            .map(|other| match axis {
                Axis::Rows => Self::block(table, me, other),
                Axis::Columns => Self::block(table, other, me),
            })
            .collect()
    }
}

/// A dissimilarity between two clusters of the same axis.
pub trait Dissimilarity {
    fn distance(
        &self,
        table: &ContingencyTable,
        partition: &Partition,
        axis: Axis,
        p: usize,
        q: usize,
    ) -> Result<BigRational>;
}

/// The chi-squared distance between aggregated profiles.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChiSquared;

impl Dissimilarity for ChiSquared {
    fn distance(
        &self,
        table: &ContingencyTable,
        partition: &Partition,
        axis: Axis,
        p: usize,
        q: usize,
    ) -> Result<BigRational> {
        chi2_distance(table, partition, axis, p, q)
    }
}

fn rat(n: u128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `sum_m (x_pm / x_p. - x_qm / x_q.)^2 / w_m` with `w_m` the share of the
/// grand total in opposite-axis cluster `m`. Categories of zero mass are
/// skipped.
pub fn chi2_distance(
    table: &ContingencyTable,
    partition: &Partition,
    axis: Axis,
    p: usize,
    q: usize,
) -> Result<BigRational> {
    let n = partition.on_axis(axis).len();
    if p >= n || q >= n {
        return Err(Error::AxisIndex {
            axis: axis.name(),
            index: p.max(q),
            max: n,
        });
    }
    let x = partition.profile(table, axis, p);
    let y = partition.profile(table, axis, q);
    let (sx, sy): (u128, u128) = (x.iter().sum(), y.iter().sum());
    if sx == 0 || sy == 0 {
        return Err(Error::ZeroMargin);
    }
    let total = rat(table.total());
    let mut d = BigRational::zero();
    for m in 0..x.len() {
        let mass = partition.on_axis(axis.other())[m]
            .members
            .iter()
            .flat_map(|&c| (0..table.len(axis)).map(move |r| (r, c)))
            .map(|(r, c)| match axis {
                Axis::Rows => u128::from(table.count(r, c)),
                Axis::Columns => u128::from(table.count(c, r)),
            })
            .sum::<u128>();
        if mass == 0 {
            continue;
        }
        let diff = rat(x[m]) / rat(sx) - rat(y[m]) / rat(sy);
        d += &diff * &diff * &total / rat(mass);
    }
    Ok(d)
}

/// One agglomeration step.
#[derive(Debug, Clone)]
pub struct MergeStep {
    pub axis: Axis,
    /// The two clusters as they were before the merge.
    pub merged: (Cluster, Cluster),
    pub distance: BigRational,
    pub partition: Partition,
    pub report: MergeReport,
}

impl MergeStep {
    pub fn model(&self) -> &ModelMatrix {
        &self.report.merged_matrix
    }

    pub fn ideal(&self) -> &IdealPresentation {
        &self.report.merged
    }
}

/// Selects and performs the next merge.
pub fn agglomerate_step(
    table: &ContingencyTable,
    partition: &Partition,
    model: &ModelMatrix,
    order: &TermOrder,
) -> Result<MergeStep> {
    let base = toric_ideal(model, order)?;
    agglomerate_step_with(table, partition, model, base, &ChiSquared)
}

/// [`agglomerate_step`] with a known ideal of `model` and a chosen
/// dissimilarity. Ties go to rows before columns, then to the smallest
/// labels.
pub fn agglomerate_step_with(
    table: &ContingencyTable,
    partition: &Partition,
    model: &ModelMatrix,
    base: IdealPresentation,
    criterion: &dyn Dissimilarity,
) -> Result<MergeStep> {
    if model.ncols() != 1 + partition.len() {
        return Err(Error::DimensionMismatch {
            expected: 1 + partition.len(),
            found: model.ncols(),
        });
    }
    let mut best: Option<(BigRational, Axis, usize, usize)> = None;
    for axis in [Axis::Rows, Axis::Columns] {
        let n = partition.on_axis(axis).len();
        for p in 0..n {
            for q in p + 1..n {
                let d = criterion.distance(table, partition, axis, p, q)?;
                let better = match &best {
                    None => true,
                    Some((bd, ..)) => d.cmp(bd) == Ordering::Less,
                };
                if better {
                    best = Some((d, axis, p, q));
                }
            }
        }
    }
    let (distance, axis, p, q) = best.ok_or(Error::NoMergeablePair)?;
    let a = partition.model_column(axis, p);
    let b = partition.model_column(axis, q);
    let report = analyze_merge_from(base, model, a, b)?;
    let clusters = partition.on_axis(axis);
    Ok(MergeStep {
        axis,
        merged: (clusters[p].clone(), clusters[q].clone()),
        distance,
        partition: partition.merge(axis, p, q)?,
        report,
    })
}

/// The full agglomeration down to one row cluster and one column cluster.
#[derive(Debug, Clone)]
pub struct MergeTrace {
    pub initial_model: ModelMatrix,
    pub steps: Vec<MergeStep>,
    /// The last step joining the row and column clusters into a single
    /// cluster; no model matrix is attached.
    pub terminal: Vec<String>,
}

impl MergeTrace {
    pub fn final_partition(&self) -> Option<&Partition> {
        self.steps.last().map(|s| &s.partition)
    }
}

pub fn full_dendrogram(table: &ContingencyTable, order: &TermOrder) -> Result<MergeTrace> {
    dendrogram(table, order, &ChiSquared, None)
}

/// At most `limit` steps of the agglomeration (all when `None`).
pub fn dendrogram(
    table: &ContingencyTable,
    order: &TermOrder,
    criterion: &dyn Dissimilarity,
    limit: Option<usize>,
) -> Result<MergeTrace> {
    let (rows, cols) = (table.nrows(), table.ncols());
    let initial_model = build_independence_matrix(rows, cols)?;
    if order.dim() != rows * cols {
        return Err(Error::DimensionMismatch {
            expected: rows * cols,
            found: order.dim(),
        });
    }
    let mut partition = Partition::discrete(rows, cols);
    let mut model = initial_model.clone();
    let mut ideal = toric_ideal(&model, order)?;
    let mut steps = Vec::new();
    let total = rows + cols - 2;
    let wanted = limit.map_or(total, |l| l.min(total));
    while steps.len() < wanted {
        let step = agglomerate_step_with(table, &partition, &model, ideal, criterion)?;
        partition = step.partition.clone();
        model = step.report.merged_matrix.clone();
        ideal = step.report.merged.clone();
        steps.push(step);
    }
    let terminal = table
        .row_labels()
        .iter()
        .chain(table.col_labels())
        .map(ToString::to_string)
        .collect();
    Ok(MergeTrace {
        initial_model,
        steps,
        terminal,
    })
}

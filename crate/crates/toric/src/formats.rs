//! Text, JSON and CSV formats for matrices, ideals, tables and traces.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use toric_core::cluster::{ContingencyTable, MergeTrace};
use toric_core::{
    build_independence_matrix, Binomial, CellLabel, IdealPresentation, LatticeBasis, MergeReport,
    ModelMatrix, TermOrder,
};

/// Reads a model matrix from either the plain text format or JSON.
///
/// Text: a `k n` header, then `k` lines of `n` non-negative integers.
/// Lines starting with `#` are ignored.
pub fn parse_matrix(input: &str) -> Result<ModelMatrix> {
    if input.trim_start().starts_with('{') {
        parse_matrix_json(input)
    } else {
        parse_matrix_text(input)
    }
}

fn parse_matrix_text(input: &str) -> Result<ModelMatrix> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or_else(|| anyhow!("empty matrix file"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("line {line}: header must be `k n`"))?;
    let [k, n] = dims[..] else {
        bail!("line {line}: header must be `k n`");
    };
    let mut rows = Vec::with_capacity(k);
    for (line, text) in lines {
        let row: Vec<u64> = text
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .with_context(|| format!("line {line}: expected non-negative integers"))?;
        if row.len() != n {
            bail!("line {line}: expected {n} entries, found {}", row.len());
        }
        rows.push(row);
    }
    if rows.len() != k {
        bail!("expected {k} rows, found {}", rows.len());
    }
    let m = ModelMatrix::from_rows(rows)?;
    Ok(recognize_independence(&m).unwrap_or(m))
}

/// The labelled independence matrix equal to `m`, if there is one.
pub fn recognize_independence(m: &ModelMatrix) -> Option<ModelMatrix> {
    let k = m.nrows();
    (1..=k)
        .filter(|i| k.is_multiple_of(*i) && 1 + i + k / i == m.ncols())
        .filter_map(|i| build_independence_matrix(i, k / i).ok())
        .find(|a| a.rows() == m.rows())
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<Vec<u64>>,
    #[serde(default)]
    row_labels: Option<Vec<String>>,
    #[serde(default)]
    col_labels: Option<Vec<String>>,
}

/// Parses `p_{i,j}` or `p_i`.
pub fn parse_cell_label(s: &str) -> Result<CellLabel> {
    let body = s
        .strip_prefix("p_")
        .ok_or_else(|| anyhow!("bad variable name `{s}`"))?;
    if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
        if let Some((i, j)) = inner.split_once(',') {
            let i = i
                .trim()
                .parse()
                .with_context(|| format!("bad variable name `{s}`"))?;
            let j = j
                .trim()
                .parse()
                .with_context(|| format!("bad variable name `{s}`"))?;
            return Ok(CellLabel::Cell(i, j));
        }
        return Ok(CellLabel::Index(
            inner
                .parse()
                .with_context(|| format!("bad variable name `{s}`"))?,
        ));
    }
    Ok(CellLabel::Index(
        body.parse()
            .with_context(|| format!("bad variable name `{s}`"))?,
    ))
}

fn parse_matrix_json(input: &str) -> Result<ModelMatrix> {
    let raw: MatrixJson = serde_json::from_str(input).context("invalid matrix JSON")?;
    let plain = ModelMatrix::from_rows(raw.rows.clone())?;
    let row_labels = match raw.row_labels {
        Some(names) => names
            .iter()
            .map(|s| parse_cell_label(s))
            .collect::<Result<_>>()?,
        None => plain.row_labels().to_vec(),
    };
    let col_labels = raw
        .col_labels
        .unwrap_or_else(|| plain.col_labels().to_vec());
    Ok(ModelMatrix::new(raw.rows, row_labels, col_labels)?)
}

pub fn matrix_text(m: &ModelMatrix) -> String {
    let mut out = format!("{} {}\n", m.nrows(), m.ncols());
    for r in m.rows() {
        let line: Vec<String> = r.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn matrix_json(m: &ModelMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "row_labels": names(m.row_labels()),
        "col_labels": m.col_labels(),
    })
}

fn names(labels: &[CellLabel]) -> Vec<String> {
    labels.iter().map(ToString::to_string).collect()
}

fn monomial_json(m: &[u64], labels: &[CellLabel]) -> Value {
    let map: serde_json::Map<String, Value> = m
        .iter()
        .zip(labels)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, l)| (l.to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

pub fn binomial_json(b: &Binomial, labels: &[CellLabel]) -> Value {
    json!({
        "plus": monomial_json(b.plus(), labels),
        "minus": monomial_json(b.minus(), labels),
    })
}

pub fn binomials_json(bs: &[Binomial], labels: &[CellLabel]) -> Value {
    Value::Array(bs.iter().map(|b| binomial_json(b, labels)).collect())
}

pub fn ideal_json(ideal: &IdealPresentation, labels: &[CellLabel]) -> Value {
    json!({
        "order": ideal.order().name(),
        "variables": names(labels),
        "generators": binomials_json(ideal.generators(), labels),
        "groebner": binomials_json(ideal.groebner(), labels),
    })
}

/// One binomial per line, or `<zero ideal>`.
pub fn ideal_text(ideal: &IdealPresentation, labels: &[CellLabel]) -> String {
    if ideal.is_zero() {
        return "<zero ideal>\n".to_string();
    }
    let mut out = String::new();
    for g in ideal.groebner() {
        out.push_str(&g.display(labels).to_string());
        out.push('\n');
    }
    out
}

fn parse_monomial(v: &Value, index: &BTreeMap<String, usize>, dim: usize) -> Result<Vec<u64>> {
    let obj = v
        .as_object()
        .ok_or_else(|| anyhow!("monomial must be an object"))?;
    let mut m = vec![0u64; dim];
    for (name, e) in obj {
        let i = *index
            .get(name)
            .ok_or_else(|| anyhow!("unknown variable `{name}`"))?;
        m[i] += e
            .as_u64()
            .ok_or_else(|| anyhow!("exponent of `{name}` must be a non-negative integer"))?;
    }
    Ok(m)
}

fn parse_binomials(
    v: Option<&Value>,
    index: &BTreeMap<String, usize>,
    dim: usize,
) -> Result<Vec<Binomial>> {
    let Some(v) = v else { return Ok(Vec::new()) };
    let arr = v
        .as_array()
        .ok_or_else(|| anyhow!("binomial list must be an array"))?;
    arr.iter()
        .map(|b| {
            let plus = parse_monomial(
                b.get("plus")
                    .ok_or_else(|| anyhow!("binomial lacks `plus`"))?,
                index,
                dim,
            )?;
            let minus = parse_monomial(
                b.get("minus")
                    .ok_or_else(|| anyhow!("binomial lacks `minus`"))?,
                index,
                dim,
            )?;
            Ok(Binomial::new(plus, minus)?)
        })
        .collect()
}

/// Reads an ideal written by [`ideal_json`]. Without a `variables` list the
/// names of `labels` are used. The Gröbner basis is recomputed from the
/// generators (or from `groebner` when no generators are given).
pub fn parse_ideal(
    input: &str,
    labels: Option<&[CellLabel]>,
) -> Result<(IdealPresentation, Vec<CellLabel>)> {
    let v: Value = serde_json::from_str(input).context("invalid ideal JSON")?;
    let vars: Vec<CellLabel> = match (v.get("variables"), labels) {
        (Some(list), _) => list
            .as_array()
            .ok_or_else(|| anyhow!("`variables` must be an array"))?
            .iter()
            .map(|s| {
                parse_cell_label(
                    s.as_str()
                        .ok_or_else(|| anyhow!("variable names must be strings"))?,
                )
            })
            .collect::<Result<_>>()?,
        (None, Some(l)) => l.to_vec(),
        (None, None) => bail!("ideal JSON lacks `variables`"),
    };
    let dim = vars.len();
    let index: BTreeMap<String, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, l)| (l.to_string(), i))
        .collect();
    let order_name = v
        .get("order")
        .and_then(Value::as_str)
        .unwrap_or("degrevlex");
    let order = TermOrder::parse(order_name, dim)
        .ok_or_else(|| anyhow!("unknown term order `{order_name}`"))?;
    let mut gens = parse_binomials(v.get("generators"), &index, dim)?;
    if gens.is_empty() {
        gens = parse_binomials(v.get("groebner"), &index, dim)?;
    }
    Ok((IdealPresentation::from_generators(gens, order)?, vars))
}

pub fn kernel_json(lattice: &LatticeBasis, m: &ModelMatrix) -> Value {
    let vectors: Vec<Vec<String>> = lattice
        .vectors()
        .iter()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect();
    json!({
        "ambient_dim": lattice.ambient_dim(),
        "rank": lattice.rank(),
        "matrix_rank": toric_core::rank(m),
        "degrees_of_freedom": toric_core::degrees_of_freedom(m),
        "basis": vectors,
    })
}

pub fn report_json(r: &MergeReport) -> Value {
    let labels = r.merged_matrix.row_labels();
    json!({
        "columns": [r.columns.0 + 1, r.columns.1 + 1],
        "merged_label": r.merged_matrix.col_labels()[r.columns.0],
        "identical": r.identical,
        "added_linear": binomials_json(&r.added_linear, labels),
        "added_higher": binomials_json(&r.added_higher, labels),
        "base_gb_size": r.base.groebner().len(),
        "merged_gb_size": r.merged.groebner().len(),
        "interpretable": r.interpretable,
    })
}

pub fn report_text(r: &MergeReport) -> String {
    let labels = r.merged_matrix.row_labels();
    let mut out = format!(
        "merged columns {} and {} ({})\nidentical: {}\ninterpretable: {}\nbase basis size: {}\nmerged basis size: {}\n",
        r.columns.0 + 1,
        r.columns.1 + 1,
        r.merged_matrix.col_labels()[r.columns.0],
        r.identical,
        r.interpretable,
        r.base.groebner().len(),
        r.merged.groebner().len(),
    );
    for (title, list) in [
        ("added linear", &r.added_linear),
        ("added higher", &r.added_higher),
    ] {
        out.push_str(&format!("{title}: {}\n", list.len()));
        for b in list {
            out.push_str(&format!("  {}\n", b.display(labels)));
        }
    }
    out
}

/// CSV with a header of column labels; each row starts with its label.
pub fn parse_table(input: &str) -> Result<ContingencyTable> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(input.as_bytes());
    let header = reader.headers().context("invalid CSV header")?.clone();
    if header.len() < 2 {
        bail!("CSV header needs a corner field and at least one column label");
    }
    let col_labels: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    let mut row_labels = Vec::new();
    let mut counts = Vec::new();
    for (n, rec) in reader.records().enumerate() {
        let rec = rec.with_context(|| format!("CSV record {}", n + 1))?;
        let mut fields = rec.iter();
        row_labels.push(fields.next().unwrap_or_default().to_string());
        let row: Vec<u64> = fields
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .with_context(|| {
                format!("CSV record {}: counts must be non-negative integers", n + 1)
            })?;
        counts.push(row);
    }
    Ok(ContingencyTable::new(counts, row_labels, col_labels)?)
}

fn rational(q: &num_rational::BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// An array of steps followed by a terminal marker object.
pub fn trace_json(trace: &MergeTrace, table: &ContingencyTable) -> Value {
    let mut steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            let clusters: Vec<Vec<&str>> =
                s.partition.clusters().map(|c| c.labels(table)).collect();
            json!({
                "merged": [s.merged.0.name(table), s.merged.1.name(table)],
                "axis": s.axis.name(),
                "distance": rational(&s.distance),
                "clusters": clusters,
                "model_columns": s.model().col_labels(),
                "report": report_json(&s.report),
            })
        })
        .collect();
    steps.push(json!({
        "terminal": true,
        "clusters": [trace.terminal],
    }));
    Value::Array(steps)
}

pub fn trace_summary(trace: &MergeTrace, table: &ContingencyTable) -> String {
    let mut out = String::new();
    for (n, s) in trace.steps.iter().enumerate() {
        out.push_str(&format!(
            "step {}: {} + {} ({}) distance {}: {} linear, {} higher\n",
            n + 1,
            s.merged.0.name(table),
            s.merged.1.name(table),
            s.axis.name(),
            rational(&s.distance),
            s.report.added_linear.len(),
            s.report.added_higher.len(),
        ));
    }
    out.push_str(&format!(
        "final: all labels ({}) in one cluster\n",
        trace.terminal.join(", ")
    ));
    out
}

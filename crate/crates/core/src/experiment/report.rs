use serde_json::{json, Value};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::search::ApproxResult;

/// Rows of one run, kept in grid order. Every row exists both as CSV cells
/// and as a JSON object so the two formats carry the same data.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub objects: Vec<Value>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, cells: Vec<String>, object: Value) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
        self.objects.push(object);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `# config: <json>` followed by a header row and the data rows.
    pub fn to_csv(&self, config: &Value) -> Result<Vec<u8>> {
        let mut out = format!("# config: {config}\n").into_bytes();
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(csv_err)?;
        for r in &self.rows {
            w.write_record(r).map_err(csv_err)?;
        }
        out.extend(w.into_inner().map_err(|e| Error::Io(e.to_string()))?);
        Ok(out)
    }

    /// `{"config": ..., "results": [...]}`.
    pub fn to_json(&self, config: &Value) -> Result<Vec<u8>> {
        let doc = json!({ "config": config, "results": self.objects });
        let mut bytes = serde_json::to_vec_pretty(&doc).map_err(|e| Error::Io(e.to_string()))?;
        bytes.push(b'\n');
        Ok(bytes)
    }
}

pub(crate) fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(";")
}

pub(crate) fn float(x: f64) -> String {
    format!("{x}")
}

pub(crate) const RESULT_COLUMNS: &[&str] = &[
    "alpha",
    "q",
    "N",
    "n",
    "phi",
    "epsilon",
    "error_num",
    "error_den",
    "met_target",
    "branch",
    "wall_ms",
    "denominators",
    "numerators",
    "target_bound",
    "L",
    "error_approx_nonauthoritative",
];

/// Context of one approximation row; `phi`/`epsilon` are absent for the
/// oracle.
pub(crate) struct ResultContext<'a> {
    pub alpha: &'a Rational,
    pub q: u64,
    pub big_n: u64,
    pub n: u32,
    pub phi: Option<&'a Rational>,
    pub epsilon: Option<&'a Rational>,
    pub wall_ms: u64,
}

pub(crate) fn result_cells(ctx: &ResultContext<'_>, r: &ApproxResult) -> Vec<String> {
    let opt = |x: Option<&Rational>| x.map(Rational::to_string).unwrap_or_default();
    vec![
        ctx.alpha.to_string(),
        ctx.q.to_string(),
        ctx.big_n.to_string(),
        ctx.n.to_string(),
        opt(ctx.phi),
        opt(ctx.epsilon),
        r.error.numer().to_string(),
        r.error.denom().to_string(),
        r.met_target.to_string(),
        r.branch.to_string(),
        ctx.wall_ms.to_string(),
        join(&r.denominators),
        join(&r.numerators),
        r.target_bound.to_string(),
        r.big_l.to_string(),
        float(r.error.to_f64()),
    ]
}

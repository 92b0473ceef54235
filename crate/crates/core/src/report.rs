//! Report assembly and serialization.
//!
//! Reports are built as JSON values whose objects are ordered maps with
//! sorted keys, so the same input always serializes to the same bytes.
//! Timing lives in its own optional block; everything outside it is a pure
//! function of the input and configuration, which makes reports directly
//! diffable across runs and worker counts. The CSV form is a flattened
//! path/value encoding of the same tree and converts back losslessly.

use serde_json::{json, Map, Value};

use crate::correlation::{is_circulant_hadamard, PafSpectrum};
use crate::identities::{identity_report, regularity_stats, split_correlation_residual};
use crate::known::known_matrices;
use crate::row::SignRow;
use crate::search::{SearchConfig, SearchOutcome};
use crate::spectrum::{representer_spectrum, spectrum_modulus_check, wiener_khinchin_residual};

/// Full verification report for one row: Hadamard status, regularity
/// statistics, the identity chain (even lengths only), and the spectral
/// cross-checks at the given relative tolerance.
pub fn verify_report(input: &str, row: &SignRow, tolerance: f64) -> Value {
    let mut body = verify_body(row, tolerance);
    body.insert("input".to_string(), json!(input));
    Value::Object(body)
}

fn verify_body(row: &SignRow, tolerance: f64) -> Map<String, Value> {
    let n = row.len();
    let mut body = Map::new();
    body.insert("order".to_string(), json!(n));
    body.insert("hadamard".to_string(), json!(is_circulant_hadamard(row)));
    body.insert(
        "regularity".to_string(),
        serde_json::to_value(regularity_stats(row)).unwrap(),
    );
    let identities = if n.is_multiple_of(2) {
        let mut value = serde_json::to_value(identity_report(row).unwrap()).unwrap();
        let residuals: Vec<i64> = (2..=n / 2)
            .map(|j| split_correlation_residual(row, j).unwrap())
            .collect();
        value
            .as_object_mut()
            .unwrap()
            .insert("split_residuals".to_string(), json!(residuals));
        value
    } else {
        Value::Null
    };
    body.insert("identities".to_string(), identities);
    body.insert("spectrum".to_string(), spectrum_summary(row, tolerance));
    body
}

fn spectrum_summary(row: &SignRow, tolerance: f64) -> Value {
    json!({
        "max_power_deviation": representer_spectrum(row).max_power_deviation(),
        "modulus_check": spectrum_modulus_check(row, tolerance),
        "paf_values": PafSpectrum::of(row).values(),
        "tolerance": tolerance,
        "wiener_khinchin_residual": wiener_khinchin_residual(row),
    })
}

/// Spectrum-focused report: every eigenvalue with its squared modulus,
/// alongside the autocorrelation sequence and the cross-check residual.
pub fn spectrum_report(input: &str, row: &SignRow, tolerance: f64) -> Value {
    let spectrum = representer_spectrum(row);
    let values: Vec<Value> = spectrum
        .values()
        .iter()
        .map(|c| {
            json!({
                "im": c.im,
                "modulus_squared": c.norm_sqr(),
                "re": c.re,
            })
        })
        .collect();
    json!({
        "input": input,
        "order": row.len(),
        "spectrum": {
            "max_power_deviation": spectrum.max_power_deviation(),
            "modulus_check": spectrum_modulus_check(row, tolerance),
            "paf_values": PafSpectrum::of(row).values(),
            "row_sum": row.ones_eigenvalue(),
            "tolerance": tolerance,
            "values": values,
            "wiener_khinchin_residual": wiener_khinchin_residual(row),
        }
    })
}

/// Catalogue report: one verification body per known matrix.
pub fn known_report(tolerance: f64) -> Value {
    let records: Vec<Value> = known_matrices()
        .into_iter()
        .map(|k| {
            let mut body = verify_body(&k.first_row, tolerance);
            body.insert("name".to_string(), json!(k.name));
            body.insert("first_row".to_string(), json!(k.first_row));
            Value::Object(body)
        })
        .collect();
    json!({ "records": records })
}

/// Search report. With `include_timing` false the output is a pure
/// function of the configuration, independent of worker count and wall
/// time.
pub fn search_report(
    config: &SearchConfig,
    outcome: &SearchOutcome,
    verified: bool,
    include_timing: bool,
) -> Value {
    let mut search = Map::new();
    search.insert("canonical_count".to_string(), json!(outcome.canonical_count));
    search.insert("complete".to_string(), json!(outcome.complete));
    search.insert("emit_all".to_string(), json!(outcome.emit_all));
    search.insert(
        "filters".to_string(),
        json!({
            "paf_pruning": config.use_paf_pruning,
            "regularity_filter": config.use_regularity_filter,
        }),
    );
    search.insert("node_limit".to_string(), json!(config.node_limit));
    search.insert("nodes_explored".to_string(), json!(outcome.nodes_explored));
    search.insert(
        "order_excluded".to_string(),
        serde_json::to_value(outcome.order_excluded).unwrap(),
    );
    search.insert(
        "pruned".to_string(),
        serde_json::to_value(outcome.pruned).unwrap(),
    );
    search.insert("raw_count".to_string(), json!(outcome.raw_count));
    search.insert("solutions".to_string(), json!(outcome.solutions));
    search.insert(
        "symmetry".to_string(),
        serde_json::to_value(outcome.symmetry).unwrap(),
    );
    search.insert("verified".to_string(), json!(verified));

    let mut top = Map::new();
    top.insert("order".to_string(), json!(outcome.order));
    top.insert("search".to_string(), Value::Object(search));
    if include_timing {
        top.insert(
            "timing".to_string(),
            json!({
                "elapsed_seconds": outcome.elapsed.as_secs_f64(),
                "worker_count": config.worker_count,
            }),
        );
    }
    Value::Object(top)
}

/// Renders a report as JSON text with sorted keys and a trailing newline.
pub fn to_json(report: &Value) -> String {
    let mut s = serde_json::to_string_pretty(report).unwrap();
    s.push('\n');
    s
}

fn flatten_into(prefix: &str, value: &Value, out: &mut Vec<(String, Value)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten_into(&join(k), v, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                flatten_into(&join(&i.to_string()), v, out);
            }
        }
        // scalars, plus empty containers kept as their own rows so the
        // flattening stays invertible
        other => out.push((prefix.to_string(), other.clone())),
    }
}

fn flatten(report: &Value) -> Vec<(String, Value)> {
    let mut out = Vec::new();
    flatten_into("", report, &mut out);
    out
}

fn csv_field(raw: &str) -> String {
    if raw.contains(',') || raw.contains('"') || raw.contains('\n') {
        format!("\"{}\"", raw.replace('"', "\"\""))
    } else {
        raw.to_string()
    }
}

/// Flattens a report to `key,value` CSV. Keys are dotted paths with array
/// indices as numeric segments; values are JSON-encoded scalars (empty
/// containers appear literally as `[]` or `{}`).
pub fn to_csv(report: &Value) -> String {
    let mut out = String::from("key,value\n");
    for (path, value) in flatten(report) {
        out.push_str(&path);
        out.push(',');
        out.push_str(&csv_field(&value.to_string()));
        out.push('\n');
    }
    out
}

fn csv_unquote(field: &str) -> Result<String, String> {
    if !field.starts_with('"') {
        return Ok(field.to_string());
    }
    let inner = field
        .strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .ok_or_else(|| format!("unterminated quoted field: {field}"))?;
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '"' {
            match chars.next() {
                Some('"') => out.push('"'),
                _ => return Err(format!("stray quote in field: {field}")),
            }
        } else {
            out.push(c);
        }
    }
    Ok(out)
}

fn insert_path(node: &mut Value, segments: &[&str], scalar: Value) -> Result<(), String> {
    let seg = segments[0];
    if segments.len() == 1 {
        match node {
            Value::Object(map) => {
                if map.insert(seg.to_string(), scalar).is_some() {
                    return Err(format!("duplicate key {seg}"));
                }
            }
            Value::Array(items) => {
                let idx: usize = seg.parse().map_err(|_| format!("bad index {seg}"))?;
                if idx != items.len() {
                    return Err(format!("array index {idx} out of order"));
                }
                items.push(scalar);
            }
            _ => return Err(format!("cannot descend into scalar at {seg}")),
        }
        return Ok(());
    }
    let next_is_index = !segments[1].is_empty() && segments[1].bytes().all(|b| b.is_ascii_digit());
    let template = if next_is_index {
        Value::Array(Vec::new())
    } else {
        Value::Object(Map::new())
    };
    let child = match node {
        Value::Object(map) => map.entry(seg.to_string()).or_insert(template),
        Value::Array(items) => {
            let idx: usize = seg.parse().map_err(|_| format!("bad index {seg}"))?;
            if idx == items.len() {
                items.push(template);
            }
            items
                .get_mut(idx)
                .ok_or_else(|| format!("array index {idx} out of order"))?
        }
        _ => return Err(format!("cannot descend into scalar at {seg}")),
    };
    insert_path(child, &segments[1..], scalar)
}

/// Inverse of [`to_csv`]: rebuilds the report tree from its flattened
/// form. Round-trips every report this crate emits.
pub fn csv_to_value(csv: &str) -> Result<Value, String> {
    let mut lines = csv.lines();
    match lines.next() {
        Some("key,value") => {}
        other => return Err(format!("missing csv header, got {other:?}")),
    }
    let mut root = Value::Object(Map::new());
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let (path, field) = line
            .split_once(',')
            .ok_or_else(|| format!("malformed csv line: {line}"))?;
        let raw = csv_unquote(field)?;
        let scalar: Value =
            serde_json::from_str(&raw).map_err(|e| format!("bad value in line {line}: {e}"))?;
        let segments: Vec<&str> = path.split('.').collect();
        insert_path(&mut root, &segments, scalar)?;
    }
    Ok(root)
}

/// Renders a report as aligned `path = value` text lines.
pub fn to_text(report: &Value) -> String {
    let rows = flatten(report);
    let width = rows.iter().map(|(p, _)| p.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (path, value) in rows {
        let rendered = match &value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{path:<width$} = {rendered}\n"));
    }
    out
}

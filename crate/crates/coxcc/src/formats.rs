//! File formats: `.cox` text, `.cartan` JSON, representation JSON, and
//! tiling JSON-lines. Writers emit floats with 17 significant digits so
//! values round-trip exactly.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use coxcc_core::cartan::CartanMatrix;
use coxcc_core::coxeter::{parse_coxeter, to_cox_text, CoxeterMatrix, ParseError};
use coxcc_core::geometry::Tiling;
use coxcc_core::linalg::Mat;
use coxcc_core::reflection::ReflectionRep;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Cox {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{path}: {detail}")]
    Cartan { path: PathBuf, detail: String },
}

/// Read and parse a `.cox` file.
pub fn read_cox(path: &Path) -> Result<CoxeterMatrix, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.to_owned(), source })?;
    parse_coxeter(&text).map_err(|source| FormatError::Cox { path: path.to_owned(), source })
}

/// A float with 17 significant digits (round-trips exactly).
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 8);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn rows_json(m: &Mat) -> String {
    let mut s = String::from("[");
    for i in 0..m.rows() {
        if i > 0 {
            s.push(',');
        }
        s.push('[');
        for j in 0..m.cols() {
            if j > 0 {
                s.push(',');
            }
            s.push_str(&fmt_f64(m[(i, j)]));
        }
        s.push(']');
    }
    s.push(']');
    s
}

/// Serialize a Cartan matrix to the `.cartan` JSON format with the
/// Coxeter matrix inlined as a `.cox` payload.
pub fn cartan_to_json(a: &CartanMatrix) -> String {
    format!(
        "{{\n  \"n\": {},\n  \"coxeter\": \"{}\",\n  \"entries\": {}\n}}\n",
        a.size(),
        json_escape(&to_cox_text(a.coxeter())),
        rows_json(a.entries())
    )
}

pub fn write_cartan(path: &Path, a: &CartanMatrix) -> Result<(), FormatError> {
    fs::write(path, cartan_to_json(a))
        .map_err(|source| FormatError::Io { path: path.to_owned(), source })
}

#[derive(Deserialize)]
struct CartanFile {
    n: usize,
    coxeter: String,
    entries: Vec<Vec<f64>>,
}

/// Read a `.cartan` JSON file. The `coxeter` field is an inline `.cox`
/// payload when it contains a newline, otherwise a path relative to the
/// `.cartan` file.
pub fn read_cartan(path: &Path) -> Result<CartanMatrix, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.to_owned(), source })?;
    let parsed: CartanFile = serde_json::from_str(&text).map_err(|e| FormatError::Cartan {
        path: path.to_owned(),
        detail: e.to_string(),
    })?;
    let cox = if parsed.coxeter.contains('\n') {
        parse_coxeter(&parsed.coxeter)
            .map_err(|source| FormatError::Cox { path: path.to_owned(), source })?
    } else {
        let referenced = path.parent().unwrap_or(Path::new(".")).join(&parsed.coxeter);
        read_cox(&referenced)?
    };
    if parsed.entries.len() != parsed.n || parsed.entries.iter().any(|r| r.len() != parsed.n) {
        return Err(FormatError::Cartan {
            path: path.to_owned(),
            detail: format!("entries must be {0}×{0} row-major", parsed.n),
        });
    }
    let entries = Mat::from_rows(&parsed.entries);
    CartanMatrix::new(cox, entries).map_err(|e| FormatError::Cartan {
        path: path.to_owned(),
        detail: e.to_string(),
    })
}

/// Serialize a representation: `{"n", "alpha", "v", "generators"}` with
/// `alpha` as rows, `v` as columns listed per generator, and the
/// generator matrices row-major.
pub fn rep_to_json(rep: &ReflectionRep) -> String {
    let mut gens = String::from("[");
    for (k, g) in rep.generators().iter().enumerate() {
        if k > 0 {
            gens.push(',');
        }
        gens.push_str(&rows_json(g));
    }
    gens.push(']');
    let v_cols: Vec<Vec<f64>> =
        (0..rep.generator_count()).map(|j| rep.v_col(j)).collect();
    format!(
        "{{\n  \"n\": {},\n  \"alpha\": {},\n  \"v\": {},\n  \"generators\": {}\n}}\n",
        rep.dim(),
        rows_json(rep.alpha()),
        rows_json(&Mat::from_rows(&v_cols)),
        gens
    )
}

pub fn write_rep(path: &Path, rep: &ReflectionRep) -> Result<(), FormatError> {
    fs::write(path, rep_to_json(rep))
        .map_err(|source| FormatError::Io { path: path.to_owned(), source })
}

/// Dump a tiling as JSON lines: one `{"word": …, "matrix": […]}` per
/// element, in orbit order.
pub fn write_tiling_jsonl(path: &Path, tiling: &Tiling) -> Result<(), FormatError> {
    let mut out = fs::File::create(path)
        .map_err(|source| FormatError::Io { path: path.to_owned(), source })?;
    for element in &tiling.elements {
        let word = word_string(&element.word);
        writeln!(out, "{{\"word\":\"{}\",\"matrix\":{}}}", word, rows_json(&element.matrix))
            .map_err(|source| FormatError::Io { path: path.to_owned(), source })?;
    }
    Ok(())
}

/// Human name of a word: `e` or `s1*s2*s1`.
pub fn word_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join("*")
}

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{csv_string, rational_string, require_window, to_json, unsupported, Format, SCHEMA_VERSION};
use crate::error::{Error, Result};
use crate::linearize::{
    antisymmetrized_block, empty_stuff_type, identity_stuff_type, number_block, path_block, pointed_set_stuff_type,
    resolve_convention, stuff_type_gf, symmetrized_block, vacuum_moment, DimBlock, SymConvention,
};
use crate::young::{young_lattice, Partition};

/// A labelled matrix or sequence.
#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub schema_version: u32,
    pub kind: &'static str,
    pub params: Value,
    /// Empty for sequences.
    pub rows: Vec<Value>,
    pub cols: Vec<Value>,
    /// A list of rows, or a flat list for sequences.
    pub entries: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeTable {
    pub schema_version: u32,
    pub kind: &'static str,
    pub max: usize,
    pub nodes: Vec<Partition>,
    pub edges: Vec<(Partition, Partition)>,
}

/// Anything `hspan emit` can print.
#[derive(Clone, Debug)]
pub enum Emitted {
    Table(Table),
    Lattice(LatticeTable),
}

impl Emitted {
    pub fn render(&self, format: Format) -> Result<String> {
        match self {
            Emitted::Table(t) => t.render(format),
            Emitted::Lattice(l) => l.render(format),
        }
    }
}

fn label(v: &Value) -> String {
    match v {
        Value::Array(xs) => {
            let parts: Vec<String> = xs.iter().map(label).collect();
            format!("({})", parts.join(","))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn partition_name(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        p.to_string()
    }
}

impl Table {
    fn block(kind: &'static str, params: Value, b: &DimBlock) -> Self {
        Table {
            schema_version: SCHEMA_VERSION,
            kind,
            params,
            rows: b.rows.iter().map(|p| json!(p)).collect(),
            cols: b.cols.iter().map(|p| json!(p)).collect(),
            entries: json!(b.entries),
        }
    }

    fn sequence(kind: &'static str, params: Value, start: usize, values: Vec<String>) -> Self {
        Table {
            schema_version: SCHEMA_VERSION,
            kind,
            params,
            rows: Vec::new(),
            cols: (start..start + values.len()).map(|i| json!(i)).collect(),
            entries: json!(values),
        }
    }

    fn grid(&self) -> Vec<Vec<String>> {
        match &self.entries {
            Value::Array(rows) if !self.rows.is_empty() => rows
                .iter()
                .map(|r| r.as_array().map(|xs| xs.iter().map(label).collect()).unwrap_or_default())
                .collect(),
            Value::Array(xs) => vec![xs.iter().map(label).collect()],
            _ => Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let cols: Vec<String> = self.cols.iter().map(label).collect();
        let rows: Vec<String> = if self.rows.is_empty() {
            vec!["value".into()]
        } else {
            self.rows.iter().map(label).collect()
        };
        let grid = self.grid();
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let mut out = vec![vec![format!("schema_version={SCHEMA_VERSION}"), self.kind.to_string()]];
                out.push(std::iter::once(String::new()).chain(cols.iter().cloned()).collect());
                for (r, cells) in rows.iter().zip(&grid) {
                    out.push(std::iter::once(r.clone()).chain(cells.iter().cloned()).collect());
                }
                csv_string(&out)
            }
            Format::Text => {
                let width = rows.iter().map(|r| r.chars().count()).max().unwrap_or(0);
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(j, c)| {
                        grid.iter()
                            .filter_map(|row| row.get(j))
                            .map(|x| x.chars().count())
                            .chain([c.chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())));
                let mut s = format!("{} {} (schema {SCHEMA_VERSION})\n", self.kind, self.params);
                let header: Vec<String> = cols.iter().zip(&widths).map(|(c, w)| pad(c, *w)).collect();
                let _ = writeln!(s, "{} {}", pad("", width), header.join(" "));
                for (r, cells) in rows.iter().zip(&grid) {
                    let line: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| pad(c, *w)).collect();
                    let _ = writeln!(s, "{} {}", pad(r, width), line.join(" "));
                }
                Ok(s)
            }
            Format::Dot => Err(unsupported(format, self.kind)),
        }
    }
}

impl LatticeTable {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let mut rows = vec![vec![format!("schema_version={SCHEMA_VERSION}"), "lattice".into()]];
                rows.push(vec!["from".into(), "to".into()]);
                rows.extend(self.edges.iter().map(|(a, b)| vec![partition_name(a), partition_name(b)]));
                csv_string(&rows)
            }
            Format::Dot => {
                let index = |p: &Partition| self.nodes.iter().position(|q| q == p).unwrap_or(usize::MAX);
                let mut s = format!("// schema_version {SCHEMA_VERSION}\ndigraph young_lattice {{\n  rankdir=BT;\n");
                for (i, p) in self.nodes.iter().enumerate() {
                    let _ = writeln!(s, "  n{i} [label=\"{}\"];", partition_name(p));
                }
                for (a, b) in &self.edges {
                    let _ = writeln!(s, "  n{} -> n{};", index(a), index(b));
                }
                s.push_str("}\n");
                Ok(s)
            }
            Format::Text => {
                let mut s = format!("Young's lattice up to {} boxes (schema {SCHEMA_VERSION})\n", self.max);
                for p in &self.nodes {
                    let ups: Vec<String> = self.edges.iter().filter(|(a, _)| a == p).map(|(_, b)| partition_name(b)).collect();
                    let _ = writeln!(s, "{} -> {}", partition_name(p), ups.join(", "));
                }
                Ok(s)
            }
        }
    }
}

/// `M_{from,to}`.
pub fn emit_block(from: usize, to: usize, max_card: usize) -> Result<Emitted> {
    require_window(max_card, to)?;
    let b = path_block(from, to)?;
    Ok(Emitted::Table(Table::block("block", json!({ "from": from, "to": to }), &b)))
}

/// `N_n`.
pub fn emit_number_block(n: usize, max_card: usize) -> Result<Emitted> {
    require_window(max_card, n)?;
    Ok(Emitted::Table(Table::block("number-block", json!({ "n": n }), &number_block(n))))
}

/// The symmetrized (or antisymmetrized) block from stage `from` to
/// `from + k`, under `convention`, or the computed one when absent.
pub fn emit_sym_block(
    k: usize,
    from: usize,
    antisym: bool,
    convention: Option<SymConvention>,
    max_card: usize,
) -> Result<Emitted> {
    require_window(max_card, from + k)?;
    let convention = match convention {
        Some(c) => c,
        None => resolve_convention()?.convention,
    };
    let b = if antisym {
        antisymmetrized_block(k, from, convention)?
    } else {
        symmetrized_block(k, from, convention)?
    };
    let kind = if antisym { "antisym-block" } else { "sym-block" };
    Ok(Emitted::Table(Table::block(kind, json!({ "k": k, "from": from, "convention": convention }), &b)))
}

pub fn emit_lattice(max: usize) -> Result<Emitted> {
    let l = young_lattice(max);
    Ok(Emitted::Lattice(LatticeTable {
        schema_version: SCHEMA_VERSION,
        kind: "lattice",
        max,
        nodes: l.nodes,
        edges: l.edges,
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StuffKind {
    Identity,
    Pointed,
    Empty,
}

impl std::str::FromStr for StuffKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identity" => Ok(StuffKind::Identity),
            "pointed" => Ok(StuffKind::Pointed),
            "empty" => Ok(StuffKind::Empty),
            _ => Err(Error::InvalidParameter(format!("unknown stuff type {s:?}"))),
        }
    }
}

/// The first `terms` coefficients of a stuff type's generating function.
pub fn emit_gf(stuff: StuffKind, terms: usize, max_card: usize) -> Result<Emitted> {
    if terms == 0 {
        return Err(Error::InvalidParameter("terms must be positive".into()));
    }
    require_window(max_card, terms - 1)?;
    let psi = match stuff {
        StuffKind::Identity => identity_stuff_type(max_card),
        StuffKind::Pointed => pointed_set_stuff_type(max_card)?,
        StuffKind::Empty => empty_stuff_type(max_card),
    };
    let coeffs = stuff_type_gf(&psi, terms - 1)?;
    Ok(Emitted::Table(Table::sequence(
        "gf",
        json!({ "stuff": stuff, "terms": terms }),
        0,
        coeffs.iter().map(rational_string).collect(),
    )))
}

/// Vacuum moments `⟨0|(a + a†)^k|0⟩` for `k = 0..=max`.
pub fn emit_moments(max: usize, max_card: usize) -> Result<Emitted> {
    require_window(max_card, max)?;
    let values = (0..=max)
        .map(|k| vacuum_moment(k, max_card).map(|q| rational_string(&q)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Emitted::Table(Table::sequence("moments", json!({ "max": max }), 0, values)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_json() {
        let Emitted::Table(t) = emit_block(2, 4, 6).unwrap() else { panic!() };
        assert_eq!(t.entries, json!([[1, 2, 1, 1, 0], [0, 1, 1, 2, 1]]));
        assert_eq!(t.rows, vec![json!([2]), json!([1, 1])]);
        assert!(emit_block(4, 2, 6).is_err());
        assert!(emit_block(2, 7, 6).is_err());
        let text = t.render(Format::Text).unwrap();
        assert!(text.contains("(1,1)"));
    }

    #[test]
    fn gf_and_moments() {
        let Emitted::Table(t) = emit_gf(StuffKind::Identity, 5, 6).unwrap() else { panic!() };
        assert_eq!(t.entries, json!(["1", "1", "1/2", "1/6", "1/24"]));
        let Emitted::Table(m) = emit_moments(6, 6).unwrap() else { panic!() };
        assert_eq!(m.entries, json!(["1", "0", "1", "0", "3", "0", "15"]));
        assert!(m.render(Format::Csv).unwrap().contains("value,1,0,1,0,3,0,15"));
    }

    #[test]
    fn lattice_dot() {
        let dot = emit_lattice(4).unwrap().render(Format::Dot).unwrap();
        assert_eq!(dot.matches("[label=").count(), 12);
        assert_eq!(dot.matches("->").count(), 1 + 2 + 4 + 7);
        assert!(dot.contains("n0 -> n1;"));
    }

    #[test]
    fn sym_blocks() {
        let Emitted::Table(t) = emit_sym_block(2, 2, false, None, 6).unwrap() else { panic!() };
        assert_eq!(t.params["convention"], json!("skew-module"));
        assert_eq!(t.entries, json!([[1, 1, 1, 0, 0], [0, 1, 0, 1, 0]]));
    }
}

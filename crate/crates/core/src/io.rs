//! The `.plw` structure file format and DOT export.
//!
//! ```text
//! # the ex2.11 partial t-norm
//! structure ex2.11
//! elements: 0 1 2 3 4
//! order: 0<=1, 1<=2, 2<=4, 0<=3, 3<=4
//! op odot :
//!   0 : - - - - 0
//!   1 : - - 0 - 1
//!   2 : - 0 1 - 2
//!   3 : - - - 0 3
//!   4 : 0 1 2 3 4
//! claim: ptnorm(odot)
//! end
//! ```
//!
//! Rows may come in any order but every element needs exactly one. `order:`
//! may repeat; the pairs accumulate. A file may hold several structures.

use std::fmt::Write as _;

use thiserror::Error;

use crate::bundle::{BundleError, Claim, ClassTag, StructureBundle};
use crate::lattice::{Elem, Lattice, LatticeError};
use crate::partial::{PartialOp, UnaryOp};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("line {line}: unknown element `{label}`")]
    UnknownElement { line: usize, label: String },
    #[error("line {line}: table `{op}` is ragged: {msg}")]
    RaggedTable { line: usize, op: String, msg: String },
    #[error("line {line}: operation `{name}` is defined twice")]
    DuplicateOpName { line: usize, name: String },
    #[error("line {line}: {source}")]
    Lattice { line: usize, source: LatticeError },
    #[error("line {line}: {source}")]
    Bundle { line: usize, source: BundleError },
    #[error("expected exactly one structure, found {0}")]
    StructureCount(usize),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::SyntaxError { line, msg: msg.into() }
}

/// Parses a file holding exactly one structure.
pub fn parse_structure(text: &str) -> Result<StructureBundle, ParseError> {
    let mut all = parse_structures(text)?;
    if all.len() != 1 {
        return Err(ParseError::StructureCount(all.len()));
    }
    Ok(all.remove(0))
}

pub fn parse_structures(text: &str) -> Result<Vec<StructureBundle>, ParseError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (b, next) = parse_one(&lines, i)?;
        out.push(b);
        i = next;
    }
    Ok(out)
}

/// Everything between `structure` and `end`, before the lattice exists.
#[derive(Default)]
struct Draft<'t> {
    name: String,
    elements: Option<(usize, Vec<&'t str>)>,
    order: Vec<(usize, &'t str, &'t str)>,
    ops: Vec<(usize, &'t str, Vec<Row<'t>>)>,
    unaries: Vec<Row<'t>>,
    claims: Vec<(usize, ClassTag, Vec<&'t str>)>,
}

/// Line number, name, and the tokens that follow.
type Row<'t> = (usize, &'t str, Vec<&'t str>);

fn keyword<'t>(line: &'t str, kw: &str) -> Option<&'t str> {
    let rest = line.strip_prefix(kw)?;
    let rest = rest.trim_start();
    rest.strip_prefix(':').map(str::trim)
}

fn parse_one(lines: &[(usize, &str)], start: usize) -> Result<(StructureBundle, usize), ParseError> {
    let (first_line, first) = lines[start];
    let name = first
        .strip_prefix("structure")
        .filter(|r| r.starts_with(char::is_whitespace))
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .ok_or_else(|| syntax(first_line, "expected `structure <name>`"))?;
    let mut d = Draft {
        name: name.to_string(),
        ..Draft::default()
    };
    let mut i = start + 1;
    loop {
        let Some(&(ln, line)) = lines.get(i) else {
            return Err(syntax(lines.last().map_or(first_line, |l| l.0), "missing `end`"));
        };
        i += 1;
        if line == "end" {
            break;
        }
        if let Some(rest) = keyword(line, "elements") {
            if d.elements.is_some() {
                return Err(syntax(ln, "`elements:` given twice"));
            }
            d.elements = Some((ln, rest.split_whitespace().collect()));
        } else if let Some(rest) = keyword(line, "order") {
            for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let (a, b) = pair
                    .split_once("<=")
                    .ok_or_else(|| syntax(ln, format!("expected `a<=b`, got `{pair}`")))?;
                d.order.push((ln, a.trim(), b.trim()));
            }
        } else if let Some(rest) = keyword(line, "claim") {
            d.claims.push(parse_claim(ln, rest)?);
        } else if let Some(rest) = line.strip_prefix("unary ") {
            let (name, cells) = rest
                .split_once(':')
                .ok_or_else(|| syntax(ln, "expected `unary <name> : <cell> ...`"))?;
            d.unaries.push((ln, name.trim(), cells.split_whitespace().collect()));
        } else if let Some(rest) = line.strip_prefix("op ") {
            let name = rest
                .strip_suffix(':')
                .map(str::trim)
                .filter(|n| !n.is_empty() && !n.contains(char::is_whitespace))
                .ok_or_else(|| syntax(ln, "expected `op <name> :`"))?;
            let mut rows = Vec::new();
            while let Some(&(rl, row)) = lines.get(i) {
                let Some((label, cells)) = row.split_once(':') else { break };
                let label = label.trim();
                if label.is_empty() || label.contains(char::is_whitespace) || is_keyword(label) {
                    break;
                }
                rows.push((rl, label, cells.split_whitespace().collect()));
                i += 1;
            }
            d.ops.push((ln, name, rows));
        } else {
            return Err(syntax(ln, format!("unexpected `{line}`")));
        }
    }
    Ok((build(d, first_line)?, i))
}

fn is_keyword(s: &str) -> bool {
    matches!(s, "elements" | "order" | "claim") || s.starts_with("op ") || s.starts_with("unary ")
}

fn parse_claim(ln: usize, rest: &str) -> Result<(usize, ClassTag, Vec<&str>), ParseError> {
    let (tag, args) = rest
        .split_once('(')
        .ok_or_else(|| syntax(ln, "expected `claim: <class>(<op>, ...)`"))?;
    let args = args
        .trim_end()
        .strip_suffix(')')
        .ok_or_else(|| syntax(ln, "claim is missing `)`"))?;
    let class: ClassTag = tag.trim().parse().map_err(|e| syntax(ln, format!("{e}")))?;
    let args: Vec<&str> = args.split(',').map(str::trim).collect();
    if args.iter().any(|a| a.is_empty()) {
        return Err(syntax(ln, "empty operation name in claim"));
    }
    Ok((ln, class, args))
}

fn build(d: Draft<'_>, first_line: usize) -> Result<StructureBundle, ParseError> {
    let (eline, labels) = d.elements.ok_or_else(|| syntax(first_line, "missing `elements:`"))?;
    let lookup = |ln: usize, s: &str| -> Result<Elem, ParseError> {
        labels.iter().position(|&l| l == s).ok_or_else(|| ParseError::UnknownElement {
            line: ln,
            label: s.to_string(),
        })
    };
    let mut pairs = Vec::new();
    for &(ln, a, b) in &d.order {
        pairs.push((lookup(ln, a)?, lookup(ln, b)?));
    }
    let oline = d.order.first().map_or(eline, |o| o.0);
    let labels_owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let lattice = Lattice::from_pairs(labels_owned, &pairs).map_err(|source| ParseError::Lattice { line: oline, source })?;
    let n = lattice.len();
    let cell = |ln: usize, s: &str| -> Result<Option<Elem>, ParseError> {
        if s == "-" {
            Ok(None)
        } else {
            lookup(ln, s).map(Some)
        }
    };

    let mut b = StructureBundle::new(d.name, lattice);
    let mut seen: Vec<&str> = Vec::new();
    for (ln, name, rows) in d.ops {
        if seen.contains(&name) {
            return Err(ParseError::DuplicateOpName { line: ln, name: name.into() });
        }
        seen.push(name);
        let ragged = |line: usize, msg: String| ParseError::RaggedTable {
            line,
            op: name.to_string(),
            msg,
        };
        if rows.len() != n {
            return Err(ragged(ln, format!("{} rows for {n} elements", rows.len())));
        }
        let mut table = vec![None; n];
        for (rl, label, cells) in rows {
            let x = lookup(rl, label)?;
            if cells.len() != n {
                return Err(ragged(rl, format!("row `{label}` has {} cells, expected {n}", cells.len())));
            }
            if table[x].is_some() {
                return Err(ragged(rl, format!("row `{label}` given twice")));
            }
            table[x] = Some(cells.iter().map(|c| cell(rl, c)).collect::<Result<Vec<_>, _>>()?);
        }
        let rows: Vec<Vec<Option<Elem>>> = table.into_iter().map(|r| r.expect("all rows present")).collect();
        let op = PartialOp::from_rows(rows).map_err(|e| ragged(ln, e.to_string()))?;
        b.add_op(name, op).map_err(|source| ParseError::Bundle { line: ln, source })?;
    }
    for (ln, name, cells) in d.unaries {
        if seen.contains(&name) {
            return Err(ParseError::DuplicateOpName { line: ln, name: name.into() });
        }
        seen.push(name);
        if cells.len() != n {
            return Err(ParseError::RaggedTable {
                line: ln,
                op: name.to_string(),
                msg: format!("{} cells, expected {n}", cells.len()),
            });
        }
        let image = cells.iter().map(|c| lookup(ln, c)).collect::<Result<Vec<_>, _>>()?;
        let u = UnaryOp::new(image).map_err(|e| syntax(ln, e.to_string()))?;
        b.add_unary(name, u).map_err(|source| ParseError::Bundle { line: ln, source })?;
    }
    for (ln, class, args) in d.claims {
        let claim = Claim::new(class, &args);
        b.operands(&claim).map_err(|source| ParseError::Bundle { line: ln, source })?;
        b.claims.push(claim);
    }
    Ok(b)
}

/// Writes a bundle in the file format; [`parse_structure`] reads it back
/// to an equal bundle.
pub fn serialize_structure(b: &StructureBundle) -> String {
    let l = &b.lattice;
    let lab = |x: Elem| l.label(x);
    let cell = |v: Option<Elem>| v.map_or("-", lab);
    let mut s = String::new();
    writeln!(s, "structure {}", b.name).unwrap();
    writeln!(s, "elements: {}", l.labels().join(" ")).unwrap();
    let covers = l.covers();
    if !covers.is_empty() {
        let pairs: Vec<String> = covers.iter().map(|&(a, c)| format!("{}<={}", lab(a), lab(c))).collect();
        writeln!(s, "order: {}", pairs.join(", ")).unwrap();
    }
    let width = l.labels().iter().map(String::len).max().unwrap_or(1);
    for (name, op) in b.ops() {
        writeln!(s, "op {name} :").unwrap();
        for x in l.elements() {
            let cells: Vec<String> = l.elements().map(|y| format!("{:>width$}", cell(op.apply(x, y)))).collect();
            writeln!(s, "  {:>width$} : {}", lab(x), cells.join(" ")).unwrap();
        }
    }
    for (name, u) in b.unaries() {
        let cells: Vec<&str> = u.image().iter().map(|&y| lab(y)).collect();
        writeln!(s, "unary {name} : {}", cells.join(" ")).unwrap();
    }
    for c in &b.claims {
        writeln!(s, "claim: {}({})", c.class, c.args.join(", ")).unwrap();
    }
    s.push_str("end\n");
    s
}

/// Hasse diagram of `l` in DOT: one edge per covering pair, bottom first.
pub fn export_dot(name: &str, l: &Lattice) -> String {
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    writeln!(s, "  node [shape=circle];").unwrap();
    for x in l.elements() {
        writeln!(s, "  n{x} [label=\"{}\"];", l.label(x).replace('"', "\\\"")).unwrap();
    }
    for (a, b) in l.covers() {
        writeln!(s, "  n{a} -> n{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{all_fixed, builtin, fig1};

    #[test]
    fn round_trip_every_fixed_builtin() {
        for b in all_fixed() {
            let text = serialize_structure(&b);
            assert_eq!(parse_structure(&text).unwrap(), b, "{}", b.name);
        }
    }

    #[test]
    fn parametric_round_trip() {
        for id in ["goedel:3", "coresiduated:3", "grid:ex2.8:4", "grid:ex6.7:4:1/2"] {
            let b = builtin(id).unwrap();
            assert_eq!(parse_structure(&serialize_structure(&b)).unwrap(), b);
        }
    }

    #[test]
    fn ragged_row() {
        let text = "structure t\nelements: 0 1\norder: 0<=1\nop o :\n 0 : 0\n 1 : 0 1\nend\n";
        assert!(matches!(parse_structure(text), Err(ParseError::RaggedTable { line: 5, .. })));
    }

    #[test]
    fn one_element_without_order() {
        let b = parse_structure("structure one\nelements: e\nop o :\n e : e\nclaim: ptnorm(o)\nend").unwrap();
        assert_eq!(b.lattice.len(), 1);
        assert!(crate::checkers::check_bundle(&b, ClassTag::Ptnorm).unwrap().passed());
    }

    #[test]
    fn errors_carry_lines() {
        let unknown = "structure t\nelements: 0 1\norder: 0<=2\nend";
        assert!(matches!(
            parse_structure(unknown),
            Err(ParseError::UnknownElement { line: 3, .. })
        ));
        let dup = "structure t\nelements: 0\nop o :\n 0 : 0\nop o :\n 0 : 0\nend";
        assert!(matches!(parse_structure(dup), Err(ParseError::DuplicateOpName { line: 5, .. })));
        assert!(matches!(
            parse_structure("structure t\nelements: 0\nbogus\nend"),
            Err(ParseError::SyntaxError { line: 3, .. })
        ));
        assert!(matches!(
            parse_structure("structure t\nelements: 0"),
            Err(ParseError::SyntaxError { .. })
        ));
    }

    #[test]
    fn dot_edges_are_covers() {
        let dot = export_dot("fig1", &fig1());
        let edges = dot.lines().filter(|l| l.contains("->")).count();
        assert_eq!(edges, fig1().covers().len());
        let chain = export_dot("c", &Lattice::chain(2));
        assert_eq!(chain.lines().filter(|l| l.contains("->")).collect::<Vec<_>>(), ["  n0 -> n1;"]);
    }
}

//! Machine-readable report documents.
//!
//! Every document is a plain struct serialized by `serde_json`, so keys come
//! out in declaration order and the text is identical for identical input.
//! Elements are written as their labels.

use serde::Serialize;

use crate::axiom::AxiomEntry;
use crate::checkers::CheckReport;
use crate::derive::DerivationOutcome;
use crate::enumerate::Enumeration;
use crate::filters::{FilterSet, QuotientStructure, StrongVerdict};
use crate::io::serialize_structure;
use crate::lattice::{Elem, Lattice};
use crate::partial::PartialOp;
use crate::verify::{TheoremVerdict, TheoremWitness};

fn labels(l: &Lattice, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| l.label(x).to_string()).collect()
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

#[derive(Serialize)]
pub struct AxiomDoc {
    pub axiom: String,
    pub verdict: &'static str,
    pub witnesses: Vec<Vec<String>>,
}

impl AxiomDoc {
    pub fn new(l: &Lattice, e: &AxiomEntry) -> Self {
        AxiomDoc {
            axiom: e.axiom.to_string(),
            verdict: verdict(e.passed()),
            witnesses: e.witnesses.iter().map(|w| labels(l, &w.elements)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CheckDoc {
    pub structure: String,
    pub class: String,
    pub overall: &'static str,
    pub axioms: Vec<AxiomDoc>,
    pub notes: Vec<String>,
}

impl CheckDoc {
    pub fn new(structure: &str, l: &Lattice, r: &CheckReport) -> Self {
        CheckDoc {
            structure: structure.to_string(),
            class: r.class.to_string(),
            overall: verdict(r.passed()),
            axioms: r.entries.iter().map(|e| AxiomDoc::new(l, e)).collect(),
            notes: r.notes.clone(),
        }
    }
}

/// A table with `-` for undefined cells, one string per row.
pub fn table_rows(l: &Lattice, op: &PartialOp) -> Vec<Vec<String>> {
    l.elements()
        .map(|x| {
            l.elements()
                .map(|y| op.apply(x, y).map_or("-".to_string(), |v| l.label(v).to_string()))
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
pub struct CellNoteDoc {
    pub cell: [String; 2],
    pub note: &'static str,
}

#[derive(Serialize)]
pub struct DerivationDoc {
    pub structure: String,
    pub source: String,
    pub kind: &'static str,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    pub diagnostics: Vec<CellNoteDoc>,
}

impl DerivationDoc {
    pub fn new(structure: &str, source: &str, kind: &'static str, l: &Lattice, d: &DerivationOutcome) -> Self {
        DerivationDoc {
            structure: structure.to_string(),
            source: source.to_string(),
            kind,
            elements: l.labels().to_vec(),
            table: table_rows(l, &d.op),
            diagnostics: d
                .diagnostics
                .iter()
                .map(|c| CellNoteDoc {
                    cell: [l.label(c.x).to_string(), l.label(c.y).to_string()],
                    note: c.note.as_str(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct FilterDoc {
    pub members: Vec<String>,
    pub proper: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed: Vec<AxiomDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modus_ponens: Option<AxiomDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub currying: Option<AxiomDoc>,
}

impl FilterDoc {
    pub fn plain(l: &Lattice, f: &FilterSet) -> Self {
        FilterDoc {
            members: labels(l, &f.members),
            proper: f.proper,
            strong: None,
            failed: Vec::new(),
            modus_ponens: None,
            currying: None,
        }
    }

    pub fn strong(l: &Lattice, v: &StrongVerdict) -> Self {
        FilterDoc {
            strong: Some(v.strong),
            failed: v.entries.iter().filter(|e| !e.passed()).map(|e| AxiomDoc::new(l, e)).collect(),
            ..FilterDoc::plain(l, &v.filter)
        }
    }
}

#[derive(Serialize)]
pub struct FiltersDoc {
    pub structure: String,
    pub filters: Vec<FilterDoc>,
}

#[derive(Serialize)]
pub struct QuotientDoc {
    pub structure: String,
    pub filter: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub quotient: String,
    pub prl: CheckDoc,
}

impl QuotientDoc {
    pub fn new(structure: &str, l: &Lattice, q: &QuotientStructure, prl: &CheckReport) -> Self {
        QuotientDoc {
            structure: structure.to_string(),
            filter: labels(l, &q.filter),
            blocks: q.partition.blocks.iter().map(|b| labels(l, b)).collect(),
            quotient: serialize_structure(&q.bundle),
            prl: CheckDoc::new(&q.bundle.name, &q.bundle.lattice, prl),
        }
    }
}

#[derive(Serialize)]
pub struct EnumerationDoc {
    pub class: String,
    pub elements: Vec<String>,
    pub count: u64,
    pub listed: usize,
    pub cap: Option<usize>,
    pub cap_exceeded: bool,
    pub symmetry: bool,
}

impl EnumerationDoc {
    pub fn new(class: &str, l: &Lattice, e: &Enumeration, cap: Option<usize>, symmetry: bool) -> Self {
        EnumerationDoc {
            class: class.to_string(),
            elements: l.labels().to_vec(),
            count: e.count as u64,
            listed: e.structures.len(),
            cap,
            cap_exceeded: e.cap_exceeded,
            symmetry,
        }
    }
}

#[derive(Serialize)]
pub struct WitnessDoc {
    pub clause: String,
    pub elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<Vec<String>>,
}

impl WitnessDoc {
    fn new(l: &Lattice, w: &TheoremWitness) -> Self {
        WitnessDoc {
            clause: w.clause.clone(),
            elements: labels(l, &w.elements),
            filter: w.filter.as_ref().map(|f| labels(l, f)),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub theorem: String,
    pub scope: String,
    pub status: &'static str,
    pub witnesses: Vec<WitnessDoc>,
    pub observations: Vec<WitnessDoc>,
    pub notes: Vec<String>,
}

impl VerdictDoc {
    /// `l` is the lattice of the bundle the verdict is about.
    pub fn new(l: &Lattice, v: &TheoremVerdict) -> Self {
        VerdictDoc {
            theorem: v.theorem.clone(),
            scope: v.scope.clone(),
            status: v.status.as_str(),
            witnesses: v.witnesses.iter().map(|w| WitnessDoc::new(l, w)).collect(),
            observations: v.observations.iter().map(|w| WitnessDoc::new(l, w)).collect(),
            notes: v.notes.clone(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("report documents serialize");
    s.push('\n');
    s
}

//! The `plw` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! counterexample is found, 2 on input errors (bad files, unknown names,
//! hypotheses that a command needs but the input does not meet).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bundle::{ClassTag, StructureBundle};
use crate::checkers::{self, check_bundle, check_claim};
use crate::derive::{derive_prci, derive_pri, lea_prl, lea_tnorm, DeriveOptions, EmptySup, Lea};
use crate::enumerate::{enumerate_class, EnumerationTask};
use crate::families::{self, builtin, figure, registry};
use crate::filters::{
    build_quotient, enumerate_filters, mp_closed, mp_implies_currying, strong_verdicts, FilterError, Pair,
};
use crate::infer::infer_orders;
use crate::io::{export_dot, parse_structures, serialize_structure};
use crate::lattice::Lattice;
use crate::report::{
    to_json, AxiomDoc, CheckDoc, DerivationDoc, EnumerationDoc, FilterDoc, FiltersDoc, QuotientDoc, VerdictDoc,
};
use crate::verify::{verify_bundle, Status, THEOREM_IDS};

#[derive(Parser, Debug)]
#[command(name = "plw", version, about = "Finite lattices with partial operations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// A structure file or a builtin name.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Structure file in the `.plw` format.
    #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
    pub file: Option<PathBuf>,
    /// Builtin id, e.g. `ex4.22` or `goedel:4`.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum EmptySupArg {
    Undef,
    Bottom,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a structure against a class, or against all its claims.
    Check {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        class: Option<String>,
    },
    /// Derive the residuated implication of a partial t-norm.
    DeriveImp {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        op: String,
        #[arg(long, value_enum, default_value = "undef")]
        empty_sup: EmptySupArg,
        /// Derive even if the operation fails the partial t-norm check.
        #[arg(long)]
        unchecked: bool,
    },
    /// Derive the co-implication of a partial t-conorm.
    DeriveCoimp {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        op: String,
        #[arg(long)]
        unchecked: bool,
    },
    /// Build the PRL of a lattice effect algebra.
    Bridge {
        #[command(flatten)]
        src: Source,
    },
    /// List filters (or strong filters) of a wPRL.
    Filters {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        strong: bool,
        /// Also check modus ponens (and currying for strong filters).
        #[arg(long)]
        mp: bool,
    },
    /// Build the quotient by the relation of a filter.
    Quotient {
        #[command(flatten)]
        src: Source,
        /// Comma-separated element labels.
        #[arg(long, value_delimiter = ',', required = true)]
        filter: Vec<String>,
    },
    /// Enumerate all structures of a class on a lattice.
    Enumerate {
        /// Builtin whose lattice is used (a figure name such as `fig4` also works).
        #[arg(long, conflicts_with = "size", required_unless_present = "size")]
        builtin: Option<String>,
        /// Size of a chain.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        class: String,
        #[arg(long)]
        cap: Option<usize>,
        /// One structure per automorphism orbit.
        #[arg(long)]
        symmetry: bool,
    },
    /// Check theorems on structures.
    Verify {
        /// Structure file.
        #[arg(conflicts_with_all = ["builtin", "all"], required_unless_present_any = ["builtin", "all"])]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "all")]
        builtin: Option<String>,
        /// Every fixed builtin plus a sample of each parametric family.
        #[arg(long)]
        all: bool,
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorems: Vec<String>,
    },
    /// Find every lattice order under which the file's claims hold.
    InferOrder { file: PathBuf },
    /// Hasse diagram in DOT.
    ExportDot {
        #[arg(required_unless_present_any = ["builtin", "figure"])]
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "figure")]
        builtin: Option<String>,
        /// A frozen figure order, `fig1` to `fig9`.
        #[arg(long)]
        figure: Option<String>,
    },
    /// Print a builtin as a structure file, or list the builtins.
    Builtin {
        #[arg(long)]
        list: bool,
        #[arg(required_unless_present = "list")]
        name: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, pass: bool) -> Self {
        Outcome {
            code: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text, true)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

fn load(src: &Source) -> Result<Vec<StructureBundle>, String> {
    match (&src.file, &src.builtin) {
        (_, Some(id)) => builtin(id).map(|b| vec![b]).map_err(|e| e.to_string()),
        (Some(path), None) => load_file(path),
        (None, None) => Err("a FILE or --builtin is required".into()),
    }
}

fn load_file(path: &PathBuf) -> Result<Vec<StructureBundle>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let out = parse_structures(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if out.is_empty() {
        return Err(format!("{}: no structure", path.display()));
    }
    Ok(out)
}

fn class_arg(s: &str) -> Result<ClassTag, String> {
    s.parse().map_err(|e: crate::bundle::UnknownClass| e.to_string())
}

fn json_list<T: Serialize>(docs: Vec<T>) -> String {
    to_json(&docs)
}

macro_rules! tryo {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return Outcome::input_error(e),
        }
    };
}

fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Check { src, class } => {
            let bundles = tryo!(load(&src));
            let class = match class {
                Some(c) => Some(tryo!(class_arg(&c))),
                None => None,
            };
            let mut docs = Vec::new();
            let mut pass = true;
            for b in &bundles {
                let claims: Vec<_> = match class {
                    Some(c) => vec![tryo!(b.claim_of(c).ok_or_else(|| format!("{}: no {c} claim", b.name)))],
                    None => b.claims.iter().collect(),
                };
                for claim in claims {
                    let r = tryo!(check_claim(b, claim).map_err(|e| format!("{}: {e}", b.name)));
                    pass &= r.passed();
                    docs.push(CheckDoc::new(&b.name, &b.lattice, &r));
                }
            }
            Outcome::ok(json_list(docs), pass)
        }
        Command::DeriveImp {
            src,
            op,
            empty_sup,
            unchecked,
        } => {
            let bundles = tryo!(load(&src));
            let opts = DeriveOptions {
                empty_sup: match empty_sup {
                    EmptySupArg::Undef => EmptySup::Undefined,
                    EmptySupArg::Bottom => EmptySup::Bottom,
                },
                check_input: !unchecked,
            };
            let mut docs = Vec::new();
            for b in &bundles {
                let t = tryo!(b.op(&op));
                let d = tryo!(derive_pri(&b.lattice, t, opts).map_err(|e| format!("{}: {e}", b.name)));
                docs.push(DerivationDoc::new(&b.name, &op, "residuated-implication", &b.lattice, &d));
            }
            Outcome::ok(json_list(docs), true)
        }
        Command::DeriveCoimp { src, op, unchecked } => {
            let bundles = tryo!(load(&src));
            let opts = DeriveOptions {
                check_input: !unchecked,
                ..DeriveOptions::default()
            };
            let mut docs = Vec::new();
            for b in &bundles {
                let t = tryo!(b.op(&op));
                let d = tryo!(derive_prci(&b.lattice, t, opts).map_err(|e| format!("{}: {e}", b.name)));
                docs.push(DerivationDoc::new(&b.name, &op, "co-implication", &b.lattice, &d));
            }
            Outcome::ok(json_list(docs), true)
        }
        Command::Bridge { src } => {
            let bundles = tryo!(load(&src));
            let mut docs = Vec::new();
            let mut pass = true;
            for b in &bundles {
                let e = tryo!(Lea::from_bundle(b).map_err(|e| format!("{}: {e}", b.name)));
                let prl = lea_prl(e, &format!("{}-prl", b.name));
                let t = checkers::check_partial_tnorm(&b.lattice, &lea_tnorm(e));
                let r = check_bundle(&prl, ClassTag::Prl).expect("bridge bundles carry a prl claim");
                pass &= t.passed() && r.passed();
                docs.push(BridgeDoc {
                    structure: b.name.clone(),
                    prl: serialize_structure(&prl),
                    tnorm_check: CheckDoc::new(&b.name, &b.lattice, &t),
                    prl_check: CheckDoc::new(&prl.name, &prl.lattice, &r),
                });
            }
            Outcome::ok(json_list(docs), pass)
        }
        Command::Filters { src, strong, mp } => {
            let bundles = tryo!(load(&src));
            let mut docs = Vec::new();
            let mut pass = true;
            for b in &bundles {
                let p = tryo!(Pair::from_bundle_unchecked(b).map_err(|e| format!("{}: {e}", b.name)));
                let l = &b.lattice;
                let mut filters: Vec<FilterDoc> = Vec::new();
                if strong {
                    for v in strong_verdicts(p) {
                        let mut d = FilterDoc::strong(l, &v);
                        if mp {
                            let m = mp_closed(p, &v.filter.members);
                            pass &= m.passed();
                            d.modus_ponens = Some(AxiomDoc::new(l, &m));
                            if v.strong {
                                let c = mp_implies_currying(p, &v.filter.members);
                                pass &= c.passed();
                                d.currying = Some(AxiomDoc::new(l, &c));
                            }
                        }
                        filters.push(d);
                    }
                } else {
                    for f in enumerate_filters(p) {
                        let mut d = FilterDoc::plain(l, &f);
                        if mp {
                            let m = mp_closed(p, &f.members);
                            pass &= m.passed();
                            d.modus_ponens = Some(AxiomDoc::new(l, &m));
                        }
                        filters.push(d);
                    }
                }
                docs.push(FiltersDoc {
                    structure: b.name.clone(),
                    filters,
                });
            }
            Outcome::ok(json_list(docs), pass)
        }
        Command::Quotient { src, filter } => {
            let bundles = tryo!(load(&src));
            let b = tryo!(single(&bundles));
            let p = tryo!(Pair::from_bundle_unchecked(b));
            let mut set = Vec::new();
            for s in &filter {
                set.push(tryo!(b.lattice.index_of(s.trim()).ok_or_else(|| format!("unknown element `{s}`"))));
            }
            set.sort_unstable();
            set.dedup();
            match build_quotient(p, &set) {
                Ok(q) => {
                    let r = check_bundle(&q.bundle, ClassTag::Prl).expect("quotients carry a prl claim");
                    Outcome::ok(to_json(&QuotientDoc::new(&b.name, &b.lattice, &q, &r)), r.passed())
                }
                Err(e @ (FilterError::NotEquivalence(_) | FilterError::NotACongruence)) => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("{}: {e}\n", b.name),
                },
                Err(e) => Outcome::input_error(format!("{}: {e}", b.name)),
            }
        }
        Command::Enumerate {
            builtin: name,
            size,
            class,
            cap,
            symmetry,
        } => {
            let class = tryo!(class_arg(&class));
            let lattice = match (name, size) {
                (Some(id), _) => match figure(&id) {
                    Some(l) => l,
                    None => tryo!(builtin(&id).map_err(|e| e.to_string())).lattice,
                },
                (None, Some(n)) if n > 0 => Lattice::chain(n),
                _ => return Outcome::input_error("--size must be positive"),
            };
            let mut task = EnumerationTask::new(lattice.clone(), class).with_symmetry(symmetry);
            if let Some(k) = cap {
                task = tryo!(task.with_cap(k));
            }
            let e = tryo!(enumerate_class(&task));
            Outcome::ok(
                to_json(&EnumerationDoc::new(class.as_str(), &lattice, &e, cap, symmetry)),
                true,
            )
        }
        Command::Verify {
            file,
            builtin: name,
            all,
            theorems,
        } => {
            let bundles = if all {
                registry()
            } else if let Some(id) = name {
                vec![tryo!(builtin(&id).map_err(|e| e.to_string()))]
            } else {
                tryo!(load_file(file.as_ref().expect("clap requires a source")))
            };
            let ids: Vec<&str> = if theorems.iter().any(|t| t == "all") {
                THEOREM_IDS.to_vec()
            } else {
                theorems.iter().map(String::as_str).collect()
            };
            let mut docs = Vec::new();
            let mut pass = true;
            for b in &bundles {
                for id in &ids {
                    let v = tryo!(verify_bundle(b, id));
                    pass &= v.status != Status::Counterexample;
                    docs.push(VerdictDoc::new(&b.lattice, &v));
                }
            }
            Outcome::ok(json_list(docs), pass)
        }
        Command::InferOrder { file } => {
            let bundles = tryo!(load_file(&file));
            match infer_orders(&bundles) {
                Ok(orders) => {
                    let docs: Vec<OrderDoc> = orders.iter().map(OrderDoc::new).collect();
                    Outcome::ok(json_list(docs), true)
                }
                Err(crate::infer::InferError::NoConsistentOrder) => Outcome {
                    code: 1,
                    stdout: json_list(Vec::<OrderDoc>::new()),
                    stderr: "no bounded lattice order satisfies every claim\n".into(),
                },
                Err(e) => Outcome::input_error(e),
            }
        }
        Command::ExportDot {
            file,
            builtin: name,
            figure: fig,
        } => {
            let (title, l) = if let Some(f) = fig {
                let l = tryo!(figure(&f).ok_or_else(|| format!("unknown figure `{f}`")));
                (f, l)
            } else {
                let bundles = tryo!(load(&Source { file, builtin: name }));
                let b = tryo!(single(&bundles));
                (b.name.clone(), b.lattice.clone())
            };
            Outcome::ok(export_dot(&title, &l), true)
        }
        Command::Builtin { list, name } => {
            if list {
                let mut s = String::new();
                for id in families::FIXED_IDS.iter().chain(families::PARAMETRIC) {
                    s.push_str(id);
                    s.push('\n');
                }
                return Outcome::ok(s, true);
            }
            let id = name.expect("clap requires a name");
            let b = tryo!(builtin(&id).map_err(|e| e.to_string()));
            Outcome::ok(serialize_structure(&b), true)
        }
    }
}

fn single(bundles: &[StructureBundle]) -> Result<&StructureBundle, String> {
    match bundles {
        [b] => Ok(b),
        _ => Err(format!("expected one structure, found {}", bundles.len())),
    }
}

#[derive(Serialize)]
struct BridgeDoc {
    structure: String,
    prl: String,
    tnorm_check: CheckDoc,
    prl_check: CheckDoc,
}

#[derive(Serialize)]
struct OrderDoc {
    elements: Vec<String>,
    covers: Vec<[String; 2]>,
}

impl OrderDoc {
    fn new(l: &Lattice) -> Self {
        OrderDoc {
            elements: l.labels().to_vec(),
            covers: l
                .covers()
                .into_iter()
                .map(|(a, b)| [l.label(a).to_string(), l.label(b).to_string()])
                .collect(),
        }
    }
}

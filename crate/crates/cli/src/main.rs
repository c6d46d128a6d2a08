use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use nlie::catalog::{instantiate, list_cases, param_grid, param_representatives, validate, CaseId, Params};
use nlie::classify::{classify, ClassifyOutcome};
use nlie::field::hex;
use nlie::format::{emit_algebra, emit_matrix, parse_algebra, parse_matrix};
use nlie::invariants::{find_codim1_subalgebra, full_fingerprint, max_toral_dim, DEFAULT_SUBSPACE_BUDGET};
use nlie::iso::{are_isomorphic, IsoVerdict, NonIsoReason, DEFAULT_NODE_BUDGET};
use nlie::structmat::{change_basis, BasisChange};
use nlie::{Algebra, Field, Matrix};

const SCHEMA: &str = "nlie/1";

/// Writes to stdout; a closed pipe ends the process quietly.
fn write_stdout(args: std::fmt::Arguments) {
    use std::io::Write;
    if let Err(e) = std::io::stdout().write_fmt(args) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

macro_rules! out {
    ($($t:tt)*) => { write_stdout(format_args!($($t)*)) };
}

macro_rules! outln {
    ($($t:tt)*) => { write_stdout(format_args!("{}\n", format_args!($($t)*))) };
}

#[derive(Parser)]
#[command(name = "nlie", version, about = "n-Lie algebras over GF(2^m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity; exits 1 if it fails.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print basis-independent invariants.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Also search for a maximal toral subalgebra.
        #[arg(long)]
        toral: bool,
        #[arg(long, default_value_t = DEFAULT_SUBSPACE_BUDGET)]
        subspace_budget: u64,
    },
    /// Identify an algebra with a catalog entry.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two algebras are isomorphic.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// List catalog families, or emit instances.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
        /// Family name such as T32.c2.
        #[arg(long)]
        case: Option<CaseId>,
        /// Parameter as key=value, e.g. s=0x1 or r=4.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, default_value = "2^1")]
        field: Field,
        /// Write one file per family and parameter class into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Rewrite an algebra in a new basis given by the columns of a matrix.
    ChangeBasis {
        file: PathBuf,
        /// Matrix file, or rows inline separated by `;`.
        #[arg(long)]
        matrix: String,
    },
    /// A catalog instance in a seeded random basis.
    Random {
        #[arg(long)]
        case: CaseId,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "2^1")]
        field: Field,
        #[arg(long)]
        seed: u64,
        /// Parameters; when omitted for a parametrized family, the seed picks them.
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

enum Failure {
    Parse(String),
    Math(String),
    Inconclusive,
    /// The command ran but the answer is negative (Jacobi fails).
    Negative,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative => 1,
            Failure::Parse(_) => 2,
            Failure::Math(_) => 3,
            Failure::Inconclusive => 4,
        }
    }
}

fn math(e: nlie::Error) -> Failure {
    Failure::Math(e.to_string())
}

fn read_algebra(path: &Path) -> Result<Algebra, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    parse_algebra(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn parse_params(case: CaseId, raw: &[String], field: Field) -> Result<Params, Failure> {
    let mut p = Params::none();
    for kv in raw {
        let (k, v) = kv.split_once('=').ok_or_else(|| Failure::Parse(format!("expected key=value, got `{kv}`")))?;
        p.set(k.trim(), v.trim()).map_err(math)?;
    }
    validate(case, &p, field).map_err(math)
}

fn hex_rows(m: &Matrix) -> Value {
    m.row_vecs().iter().map(|r| r.iter().map(|&c| format!("{c:#x}")).collect::<Vec<_>>()).collect()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn print_json(v: Value) {
    outln!("{}", serde_json::to_string_pretty(&v).expect("json values serialize"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { file, json } => {
            let a = read_algebra(&file)?;
            let violations = a.jacobi_check();
            if json {
                let list: Vec<Value> = violations
                    .iter()
                    .map(|v| json!({"x": one_based(&v.x), "y": one_based(&v.y), "residual": nlie::algebra::format_vector(&v.residual)}))
                    .collect();
                print_json(json!({"schema": SCHEMA, "n_lie": violations.is_empty(), "violations": list}));
            } else if violations.is_empty() {
                outln!("ok: Jacobi identity holds");
            } else {
                outln!("{} Jacobi violations", violations.len());
                for v in &violations {
                    outln!(
                        "  X={:?} Y={:?} residual {}",
                        one_based(&v.x),
                        one_based(&v.y),
                        nlie::algebra::format_vector(&v.residual)
                    );
                }
            }
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
        Command::Invariants { file, json, toral, subspace_budget } => {
            let a = read_algebra(&file)?;
            let fp = full_fingerprint(&a, subspace_budget);
            let codim1 = find_codim1_subalgebra(&a).map(|s| s.basis_vectors());
            let toral = toral.then(|| max_toral_dim(&a, subspace_budget));
            if json {
                print_json(json!({
                    "schema": SCHEMA,
                    "fingerprint": fp,
                    "n_lie": a.is_n_lie(),
                    "codim1_subalgebra": codim1.map(|b| b.iter().map(|v| nlie::algebra::format_vector(v)).collect::<Vec<_>>()),
                    "max_toral": toral,
                }));
            } else {
                outln!("n_lie: {}", a.is_n_lie());
                outln!("arity: {}  dim: {}", fp.n, fp.d);
                outln!("dim derived: {}", fp.dim_derived);
                outln!("descending series: {:?}", fp.derived_series);
                outln!("dim center: {}", fp.dim_center);
                outln!("abelian: {}  nilpotent: {}", fp.is_abelian, fp.is_nilpotent);
                outln!("derived in center: {}", fp.derived_in_center);
                outln!("inner derivations: {}", fp.inner_deriv_dim);
                outln!("decomposable: {}", serde_json::to_value(fp.decomposable).unwrap().as_str().unwrap_or("?"));
                match &fp.derived_ad_spectrum {
                    Some(spectrum) => {
                        outln!("ad spectrum on A1 (charpoly coefficients, constant first: count):");
                        for (poly, count) in spectrum {
                            let cs: Vec<String> = poly.iter().map(|&c| hex(c)).collect();
                            outln!("  [{}]: {count}", cs.join(" "));
                        }
                    }
                    None => outln!("ad spectrum on A1: skipped (operator space too large)"),
                }
                match codim1 {
                    Some(b) => {
                        let vs: Vec<String> = b.iter().map(|v| nlie::algebra::format_vector(v)).collect();
                        outln!("codimension-1 subalgebra: span{{{}}}", vs.join(", "));
                    }
                    None => outln!("codimension-1 subalgebra: none"),
                }
                if let Some(t) = toral {
                    let kind = if t.exhaustive { "exact" } else { "lower bound" };
                    outln!("max toral dim: {} ({kind})", t.dim);
                }
            }
            Ok(())
        }
        Command::Classify { file, budget, json } => {
            let a = read_algebra(&file)?;
            let out = classify(&a, budget).map_err(math)?;
            let pair = |(c, p): &(CaseId, Params)| json!({"case": c, "params": p});
            match out {
                ClassifyOutcome::Match(m) => {
                    if json {
                        print_json(json!({
                            "schema": SCHEMA,
                            "result": "match",
                            "case": m.case,
                            "params": m.params,
                            "witness": hex_rows(m.witness.matrix()),
                            "collisions": m.collisions.iter().map(pair).collect::<Vec<_>>(),
                            "inconclusive": m.inconclusive.iter().map(pair).collect::<Vec<_>>(),
                        }));
                    } else {
                        outln!("case {}", m.case);
                        outln!("params {}", m.params);
                        outln!("witness");
                        out!("{}", emit_matrix(m.witness.matrix()));
                        for (c, p) in &m.collisions {
                            outln!("collision {c} {p}");
                        }
                        for (c, p) in &m.inconclusive {
                            outln!("inconclusive {c} {p}");
                        }
                    }
                    Ok(())
                }
                ClassifyOutcome::Unknown { inconclusive } => {
                    if json {
                        print_json(json!({
                            "schema": SCHEMA,
                            "result": "unknown",
                            "inconclusive": inconclusive.iter().map(pair).collect::<Vec<_>>(),
                        }));
                    } else {
                        outln!("unknown");
                        for (c, p) in &inconclusive {
                            outln!("inconclusive {c} {p}");
                        }
                    }
                    if inconclusive.is_empty() {
                        Ok(())
                    } else {
                        Err(Failure::Inconclusive)
                    }
                }
            }
        }
        Command::Iso { a, b, budget, json } => {
            let (a, b) = (read_algebra(&a)?, read_algebra(&b)?);
            let verdict = are_isomorphic(&a, &b, budget).map_err(math)?;
            let inconclusive = matches!(verdict, IsoVerdict::Inconclusive(_));
            if json {
                let body = match &verdict {
                    IsoVerdict::Isomorphic(t) => json!({"verdict": "isomorphic", "witness": hex_rows(t.matrix())}),
                    IsoVerdict::NotIsomorphic(r) => json!({"verdict": "not_isomorphic", "reason": r}),
                    IsoVerdict::Inconclusive(r) => json!({"verdict": "inconclusive", "report": r}),
                };
                let mut v = json!({"schema": SCHEMA});
                v.as_object_mut().unwrap().extend(body.as_object().unwrap().clone());
                print_json(v);
            } else {
                match &verdict {
                    IsoVerdict::Isomorphic(t) => {
                        outln!("isomorphic");
                        outln!("witness");
                        out!("{}", emit_matrix(t.matrix()));
                    }
                    IsoVerdict::NotIsomorphic(NonIsoReason::Fingerprint { fields }) => {
                        outln!("not isomorphic: invariants differ ({})", fields.join(", "));
                    }
                    IsoVerdict::NotIsomorphic(NonIsoReason::CharacteristicSubspaces) => {
                        outln!("not isomorphic: characteristic subspaces differ");
                    }
                    IsoVerdict::NotIsomorphic(NonIsoReason::ExhaustedSearch { nodes }) => {
                        outln!("not isomorphic: complete search over {nodes} nodes");
                    }
                    IsoVerdict::Inconclusive(r) => {
                        outln!("inconclusive: {} nodes of budget {}", r.nodes, r.budget);
                    }
                }
            }
            if inconclusive {
                Err(Failure::Inconclusive)
            } else {
                Ok(())
            }
        }
        Command::Catalog { n, dim, case, params, field, out_dir } => {
            if n < 3 || (dim != n + 1 && dim != n + 2) {
                return Err(Failure::Math(format!("dim must be n+1 or n+2 with n >= 3, got n={n}, dim={dim}")));
            }
            if let Some(case) = case {
                if case.dim(n) != dim {
                    return Err(Failure::Math(format!("{case} has dimension {}, not {dim}", case.dim(n))));
                }
                let p = parse_params(case, &params, field)?;
                let a = instantiate(n, case, &p, field).map_err(math)?;
                out!("{}", emit_algebra(&a));
                return Ok(());
            }
            let infos = list_cases(n, dim);
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir).map_err(|e| Failure::Parse(format!("{}: {e}", dir.display())))?;
                    for info in &infos {
                        for p in param_representatives(info.case, n, field) {
                            let Ok(a) = instantiate(n, info.case, &p, field) else { continue };
                            let name =
                                if p.is_empty() { info.case.name().to_string() } else { format!("{}_{p}", info.case) };
                            let path = dir.join(format!("{}.nla", name.replace([',', '='], "_")));
                            fs::write(&path, emit_algebra(&a))
                                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
                            outln!("{}", path.display());
                        }
                    }
                }
                None => {
                    for info in &infos {
                        outln!("{:<10} {}", info.case.name(), info.ranges);
                    }
                }
            }
            Ok(())
        }
        Command::ChangeBasis { file, matrix } => {
            let a = read_algebra(&file)?;
            let text = match fs::read_to_string(&matrix) {
                Ok(t) => t,
                Err(_) if !Path::new(&matrix).exists() => matrix.clone(),
                Err(e) => return Err(Failure::Parse(format!("{matrix}: {e}"))),
            };
            let m = parse_matrix(a.field(), &text).map_err(|e| Failure::Parse(format!("matrix: {e}")))?;
            let t = BasisChange::new(m).map_err(math)?;
            let b = change_basis(&a, &t).map_err(math)?;
            out!("{}", emit_algebra(&b));
            Ok(())
        }
        Command::Random { case, n, field, seed, params } => {
            let p = if params.is_empty() && case.signature() != nlie::catalog::Signature::None {
                let grid = param_grid(case, n, field);
                if grid.is_empty() {
                    return Err(Failure::Math(format!("{case} has no valid parameters for n={n} over {field:?}")));
                }
                grid[(seed % grid.len() as u64) as usize].clone()
            } else {
                parse_params(case, &params, field)?
            };
            let a = instantiate(n, case, &p, field).map_err(math)?;
            let t = BasisChange::seeded(field, a.dim(), seed);
            out!("{}", emit_algebra(&change_basis(&a, &t).map_err(math)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Parse(msg) => eprintln!("parse error: {msg}"),
                Failure::Math(msg) => eprintln!("error: {msg}"),
                Failure::Inconclusive | Failure::Negative => {}
            }
            ExitCode::from(f.code())
        }
    }
}

//! `mckay`: run the verification suites and emit McKay, character, spectral,
//! fusion and idempotent data for D_n.
//!
//! Exit status: 0 when everything requested holds, 1 when a check fails,
//! 2 on invalid input.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mckay::chebyshev::{cheb_poly, ChebKind};
use mckay::cycfield::embed::embed_vec;
use mckay::dnrep::{CharacterTable, Monomial};
use mckay::grring::{mckay_block_form, mckay_matrix_closed};
use mckay::spectral::{
    all_certificates, fusion_basis_labels, fusion_matrix_block_form, groth_structure_check, lambda_of, oracle,
    FusionCertificate, IdempotentFamily,
};
use mckay::verify::{self, ReportFormat, MAX_N_ENV};
use mckay::{make_context, CycNum, EigIndex, Error, GrothRing, RingMatrix, SimpleLabel, SparseIntMatrix};

#[derive(Parser)]
#[command(name = "mckay", version, about = "Exact McKay, Cartan and fusion data for the Drinfeld double D_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks exactly and against the floating-point oracle.
    Verify(VerifyArgs),
    /// Emit the McKay matrix M_V (or the projective Q_V) of a simple module.
    Mckay(MckayArgs),
    /// Emit character values of the simple modules.
    Chartable(ChartableArgs),
    /// Emit eigenvector certificates for M = M_{V(2,0)}.
    Spectrum(SpectrumArgs),
    /// Emit the fusion matrix N_V on the projective basis.
    Fusion(FusionArgs),
    /// Emit the idempotent decomposition of the complexified Grothendieck ring.
    Idempotents(OrderArgs),
    /// Emit coefficient tables of the Chebyshev families.
    Cheb(ChebArgs),
}

#[derive(Args)]
struct OrderArgs {
    /// Odd n ≥ 3 (the maximum is read from MCKAY_MAX_N, default 13).
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present_any = ["all_n", "list"], conflicts_with = "all_n")]
    n: Option<usize>,
    /// Run every odd order from 3 up to the configured maximum (13 unless
    /// MCKAY_MAX_N says otherwise).
    #[arg(long)]
    all_n: bool,
    /// Comma-separated check ids; all checks when omitted.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    /// Include per-check wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    /// List the available check ids and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct MckayArgs {
    #[command(flatten)]
    order: OrderArgs,
    /// The simple module V(ℓ, s), given as `ℓ,s`.
    #[arg(long, default_value = "2,0")]
    module: String,
    /// Emit Q_V = M_{V*}ᵀ instead of M_V.
    #[arg(long)]
    projective: bool,
    /// Build from the closed-form tensor rules instead of the Grothendieck ring.
    #[arg(long)]
    closed_form: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct ChartableArgs {
    #[command(flatten)]
    order: OrderArgs,
    /// A single PBW monomial b^i c^k d^t a^t, given as `i,k,t`; without it
    /// the full grouplike table is emitted.
    #[arg(long)]
    monomial: Option<String>,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    order: OrderArgs,
    /// Add the fusion-matrix eigenvector certificates.
    #[arg(long)]
    fusion: bool,
    /// Add the idempotent decomposition.
    #[arg(long)]
    idempotents: bool,
    #[arg(long, value_enum, default_value_t = JsonFormat::Json)]
    format: JsonFormat,
}

#[derive(Args)]
struct FusionArgs {
    #[command(flatten)]
    order: OrderArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct ChebArgs {
    /// One of U, W, V, L.
    #[arg(long, default_value = "U")]
    kind: String,
    /// Largest index k.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum JsonFormat {
    Json,
}

/// What a command found, mapped onto the exit status.
enum Verdict {
    Holds,
    Fails,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok((out, verdict)) => {
            print!("{out}");
            match verdict {
                Verdict::Holds => ExitCode::SUCCESS,
                Verdict::Fails => ExitCode::from(1),
            }
        }
        Err(e) => {
            eprintln!("mckay: {e}");
            ExitCode::from(match e {
                Error::Internal(_) => 1,
                _ => 2,
            })
        }
    }
}

type Output = mckay::Result<(String, Verdict)>;

fn run(command: Command) -> Output {
    match command {
        Command::Verify(a) => run_verify(a),
        Command::Mckay(a) => run_mckay(a),
        Command::Chartable(a) => run_chartable(a),
        Command::Spectrum(a) => run_spectrum(a),
        Command::Fusion(a) => run_fusion(a),
        Command::Idempotents(a) => run_idempotents(a),
        Command::Cheb(a) => run_cheb(a),
    }
}

fn checked_order(n: usize) -> mckay::Result<usize> {
    verify::validate_order(n, verify::max_n()).map_err(|e| match e {
        Error::OrderTooLarge { .. } => Error::InvalidArgument(format!("{e} (raise it with {MAX_N_ENV})")),
        e => e,
    })?;
    Ok(n)
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// `a,b` or `a,b,c` as signed integers.
fn parse_ints(s: &str, count: usize, what: &str) -> mckay::Result<Vec<i64>> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("{what} `{s}` is not a list of integers")))?;
    if parts.len() != count {
        return Err(Error::InvalidArgument(format!("{what} `{s}` needs {count} comma-separated integers")));
    }
    Ok(parts)
}

fn run_verify(a: VerifyArgs) -> Output {
    if a.list {
        let mut s = String::new();
        for c in verify::CHECKS {
            let _ = writeln!(s, "{:<28} {}", c.id, c.summary);
        }
        return Ok((s, Verdict::Holds));
    }
    let orders: Vec<usize> = match a.n {
        Some(n) => vec![n],
        None => (3..=verify::max_n()).step_by(2).collect(),
    };
    for &n in &orders {
        checked_order(n)?;
    }
    let reports = verify::run_suites(&orders, &a.suite)?;
    let format = match a.format {
        TextFormat::Json => ReportFormat::Json,
        TextFormat::Text => ReportFormat::Text,
    };
    let ok = reports.iter().all(|r| r.all_pass());
    Ok((verify::emit_report(&reports, format, a.timings), verdict(ok)))
}

fn integer_matrix(m: &RingMatrix<i64>, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut s = String::new();
            for i in 0..m.rows() {
                let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
                let _ = writeln!(s, "{}", row.join(","));
            }
            s
        }
        TableFormat::Json => {
            let rows: Vec<&[i64]> = (0..m.rows()).map(|i| m.row(i)).collect();
            pretty(&json!(rows))
        }
    }
}

fn run_mckay(a: MckayArgs) -> Output {
    let n = checked_order(a.order.n)?;
    let parts = parse_ints(&a.module, 2, "module")?;
    let label = SimpleLabel::new(n, parts[0].try_into().unwrap_or(0), parts[1])?;
    let source = if a.projective { mckay::dnrep::dual_label(n, label) } else { label };
    let m = if a.closed_form {
        mckay_matrix_closed(n, source)
    } else {
        GrothRing::new(n)?.mckay_matrix(source)
    };
    let m = if a.projective { m.transpose() } else { m };
    Ok((integer_matrix(&m, a.format), Verdict::Holds))
}

/// Power-basis coordinates joined by `|`, for one CSV cell.
fn csv_cell(x: &CycNum) -> String {
    x.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>().join("|")
}

fn run_chartable(a: ChartableArgs) -> Output {
    let n = checked_order(a.order.n)?;
    let ctx = make_context(n as i64)?;
    let table = CharacterTable::new(&ctx);
    let monomials: Vec<Monomial> = match &a.monomial {
        Some(s) => {
            let p = parse_ints(s, 3, "monomial")?;
            let t = usize::try_from(p[2]).map_err(|_| Error::InvalidArgument("t must be ≥ 0".into()))?;
            vec![Monomial::new(n, p[0], p[1], t)?]
        }
        None => (0..n as i64)
            .flat_map(|i| (0..n as i64).map(move |k| Monomial::grouplike(n, i, k)))
            .collect(),
    };
    let labels: Vec<SimpleLabel> = SimpleLabel::all(n).collect();
    let out = match a.format {
        TableFormat::Json => {
            let rows: Vec<Value> = monomials
                .iter()
                .map(|&m| json!({ "monomial": m, "values": table.trace_vector_s(m) }))
                .collect();
            pretty(&json!({ "n": n, "labels": labels, "rows": rows }))
        }
        TableFormat::Csv => {
            let mut s = String::from("i,k,t");
            for l in &labels {
                let _ = write!(s, ",V({};{})", l.ell, l.r);
            }
            s.push('\n');
            for &m in &monomials {
                let _ = write!(s, "{},{},{}", m.i, m.k, m.t);
                for v in table.trace_vector_s(m) {
                    let _ = write!(s, ",{}", csv_cell(&v));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((out, Verdict::Holds))
}

fn fusion_certificates(n: usize, ctx: &mckay::Ctx) -> mckay::Result<(Vec<Value>, bool)> {
    let nv = SparseIntMatrix::from_dense(&fusion_matrix_block_form(n));
    let mut all_ok = true;
    let mut out = Vec::new();
    for idx in EigIndex::all(n) {
        let cert = FusionCertificate::new(ctx, &nv, idx)?;
        let lam = lambda_of(ctx, idx).embed();
        let residual = oracle::residual(&nv, &embed_vec(&cert.right), lam, None, false)
            .max(oracle::residual(&nv, &embed_vec(&cert.left), lam, None, true));
        all_ok &= cert.holds() && residual < verify::ORACLE_TOLERANCE;
        let mut v = serde_json::to_value(&cert).expect("certificates serialize");
        v["oracle_residual"] = json!(residual);
        out.push(v);
    }
    Ok((out, all_ok))
}

fn idempotent_data(n: usize, ctx: &mckay::Ctx) -> mckay::Result<(Value, bool)> {
    let ring = GrothRing::new(n)?;
    let fam = IdempotentFamily::new(ctx)?;
    let m = SparseIntMatrix::from_dense(&mckay_block_form(n));
    let report = groth_structure_check(&ring, &fam, &m, n.min(3))?;
    let ok = report.holds(n);
    let entries: Vec<Value> = fam
        .entries
        .iter()
        .map(|e| {
            json!({
                "index": e.index,
                "lambda": e.lambda,
                "theta": e.theta,
                "nu": e.nu,
                "f": fam.coords(&ring, e.slice, &e.f),
                "idempotent": fam.coords(&ring, e.slice, &e.idempotent),
            })
        })
        .collect();
    Ok((json!({ "xi": fam.xi, "entries": entries, "structure": report }), ok))
}

fn run_spectrum(a: SpectrumArgs) -> Output {
    let JsonFormat::Json = a.format;
    let n = checked_order(a.order.n)?;
    let ctx = make_context(n as i64)?;
    let m = SparseIntMatrix::from_dense(&mckay_block_form(n));
    let mut ok = true;
    let certs: Vec<Value> = all_certificates(&ctx, &m)?
        .iter()
        .map(|c| {
            let residual = oracle::certificate_residual(&m, c);
            ok &= c.holds() && residual < verify::ORACLE_TOLERANCE;
            let mut v = serde_json::to_value(c).expect("certificates serialize");
            v["oracle_residual"] = json!(residual);
            v
        })
        .collect();
    let mut out = json!({ "n": n, "certificates": certs });
    if a.fusion {
        let (f, f_ok) = fusion_certificates(n, &ctx)?;
        ok &= f_ok;
        out["fusion"] = json!(f);
    }
    if a.idempotents {
        let (d, d_ok) = idempotent_data(n, &ctx)?;
        ok &= d_ok;
        out["idempotents"] = d;
    }
    Ok((pretty(&out), verdict(ok)))
}

fn run_fusion(a: FusionArgs) -> Output {
    let n = checked_order(a.order.n)?;
    let nv = fusion_matrix_block_form(n);
    let out = match a.format {
        TableFormat::Csv => integer_matrix(&nv, TableFormat::Csv),
        TableFormat::Json => {
            let rows: Vec<&[i64]> = (0..nv.rows()).map(|i| nv.row(i)).collect();
            pretty(&json!({ "n": n, "basis": fusion_basis_labels(n), "matrix": rows }))
        }
    };
    Ok((out, Verdict::Holds))
}

fn run_idempotents(a: OrderArgs) -> Output {
    let n = checked_order(a.n)?;
    let ctx = make_context(n as i64)?;
    let (mut d, ok) = idempotent_data(n, &ctx)?;
    d["n"] = json!(n);
    Ok((pretty(&d), verdict(ok)))
}

fn run_cheb(a: ChebArgs) -> Output {
    let kind: ChebKind = a.kind.parse()?;
    let rows: Vec<Vec<String>> =
        (0..=a.k).map(|k| cheb_poly(kind, k).coeffs().iter().map(ToString::to_string).collect()).collect();
    let out = match a.format {
        TextFormat::Json => pretty(&json!({ "kind": kind.name(), "coefficients": rows })),
        TextFormat::Text => {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut s = String::new();
            for (k, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(s, "{}_{k:<3} {}", kind.name(), cells.join(" "));
            }
            s
        }
    };
    Ok((out, Verdict::Holds))
}

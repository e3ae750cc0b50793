//! `qeuler`: compute, tabulate and verify q-Euler numbers and polynomials,
//! their character-twisted generalizations and the interpolating series.
//!
//! Exit status: 0 on success, 1 when a check or computation fails, 2 on a
//! usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

use qeuler::dirichlet::{dirichlet_char, enumerate_chars, DirichletChar};
use qeuler::exact::{Cyclotomic, Rational};
use qeuler::lfunc::{l_eval, verify_interpolation_in, LQuery};
use qeuler::qeuler::QEulerSession;
use qeuler::record::{
    character_json, format_complex, LValuePayload, NumberPayload, OutputRecord, Payload, PolyPayload, QValue,
    VerifyReport,
};
use qeuler::verify::{
    congruence_modulus, verify_distribution_at, verify_frobenius, verify_limit_in, verify_theorem1_sweep,
    verify_theorem2_in, DistributionMode, HypothesisMode,
};
use qeuler::Error;

const CHARACTER_ORDER: &str = "\
Characters mod D (D odd) are selected by --modulus D --char INDEX, with
INDEX in 0..phi(D). Write (Z/D)^x as the product of the cyclic groups
(Z/p^e)^x over the prime powers exactly dividing D, in increasing order of p,
each generated by its smallest primitive root. A character is the exponent
tuple (j_1, ..., j_t) with chi(g_i) = exp(2 pi i j_i / phi(p_i^e_i)). Indices
run through the tuples lexicographically with the smallest prime most
significant, so index 0 is the principal character. For D = 1 the only
character is identically 1.

Exit status: 0 on success, 1 when a check or computation fails, 2 on a usage
error. Checks marked expect-fail are reported but never change the status.";

#[derive(Parser)]
#[command(name = "qeuler", version, about = "Exact q-Euler numbers, polynomials and identity checks")]
#[command(after_long_help = CHARACTER_ORDER)]
struct Cli {
    /// Output format; defaults to csv for `table` and text otherwise.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Numeric tolerance for series comparisons.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Emit one record per n.
    Compute(ComputeArgs),
    /// Write a table of values for n in 0..=max-n.
    Table(ComputeArgs),
    /// Run a check and report PASS/FAIL per instance.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Sum the interpolating series at s.
    Lvalue(LValueArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// E_{n,q}
    Number,
    /// E_{n,q}(x)
    Poly,
    /// E_{n,chi,q}
    GenNumber,
    /// E_{n,chi,q}(x)
    GenPoly,
}

impl Kind {
    fn twisted(self) -> bool {
        matches!(self, Kind::GenNumber | Kind::GenPoly)
    }

    fn polynomial(self) -> bool {
        matches!(self, Kind::Poly | Kind::GenPoly)
    }

    fn name(self) -> &'static str {
        match self {
            Kind::Number => "number",
            Kind::Poly => "poly",
            Kind::GenNumber => "gen-number",
            Kind::GenPoly => "gen-poly",
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("range").required(true).args(["n", "max_n"])))]
struct ComputeArgs {
    #[arg(long, value_enum, default_value_t = Kind::Number)]
    kind: Kind,
    /// Odd modulus of the character (gen-* kinds only).
    #[arg(long)]
    modulus: Option<u64>,
    /// Character index (gen-* kinds only).
    #[arg(long = "char")]
    char_index: Option<usize>,
    /// A single index n.
    #[arg(long)]
    n: Option<usize>,
    /// Every index 0..=max-n.
    #[arg(long)]
    max_n: Option<usize>,
    /// Evaluate at q ("a/b", decimal, or "re+imi").
    #[arg(long, allow_hyphen_values = true)]
    q: Option<QValue>,
}

#[derive(Args)]
struct CharSelect {
    /// Odd modulus of the character.
    #[arg(long, default_value_t = 1)]
    modulus: u64,
    /// Character index; every character mod the modulus when omitted.
    #[arg(long = "char")]
    char_index: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DistMode {
    /// The relation as printed, without the [2]_q/[2]_{q^d} factor (expect-fail).
    Printed,
    /// The relation with the [2]_q/[2]_{q^d} factor.
    Corrected,
}

#[derive(Subcommand)]
enum Check {
    /// q^d E_{n,chi,q}(d) + E_{n,chi,q} = [2]_q sum_{k<d} chi(k) (-q)^k k^n, exactly.
    Theorem1 {
        #[command(flatten)]
        chars: CharSelect,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// The congruence mod d p^N at an integer q, coordinate-wise.
    Theorem2 {
        /// Odd modulus of the character.
        #[arg(long, default_value_t = 1)]
        d: u64,
        /// Character index; every character mod d when omitted.
        #[arg(long = "char")]
        char_index: Option<usize>,
        /// Odd prime p.
        #[arg(long)]
        p: u64,
        /// Exponent N >= 1.
        #[arg(long = "N", default_value_t = 1)]
        big_n: u32,
        /// Integer q; defaults to 1 + d p^N in q-equiv-1 mode.
        #[arg(long)]
        q_int: Option<i64>,
        /// Hypothesis: q = 1 mod d p^N, or gcd(q - 1, d p) = 1 (expect-fail).
        #[arg(long, default_value = "q-equiv-1", value_parser = ["q-equiv-1", "gcd-printed"])]
        mode: String,
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// The distribution relation against the defining series at q.
    Distribution {
        #[command(flatten)]
        chars: CharSelect,
        #[arg(long, value_enum, default_value_t = DistMode::Corrected)]
        mode: DistMode,
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value = "0.3", allow_hyphen_values = true)]
        q: QValue,
        /// Evaluation point x.
        #[arg(long, default_value = "0")]
        x: Rational,
    },
    /// E_{n,chi,q} at q = 1 against the generating function at q = 1.
    Limit {
        #[command(flatten)]
        chars: CharSelect,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// L(-k, chi | x) against E_{k,chi,q}(x) for k in 0..=max-n.
    Interpolation {
        #[command(flatten)]
        chars: CharSelect,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value = "1")]
        x: Rational,
        #[arg(long, default_value = "0.3", allow_hyphen_values = true)]
        q: QValue,
    },
    /// Frobenius-Euler numbers at u = -1/q against E_{n,q}.
    Frobenius {
        #[arg(long, default_value_t = 15)]
        max_n: usize,
    },
}

#[derive(Args)]
struct LValueArgs {
    /// Complex s ("re", "re+imi").
    #[arg(long, allow_hyphen_values = true)]
    s: QValue,
    /// Shift x > 0.
    #[arg(long, default_value = "1")]
    x: Rational,
    /// q with |q| < 1.
    #[arg(long, allow_hyphen_values = true)]
    q: QValue,
    #[arg(long, default_value_t = 1)]
    modulus: u64,
    #[arg(long = "char", default_value_t = 0)]
    char_index: usize,
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_) | Error::Parse(_) | Error::EvenModulus(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: format!("i/o error: {e}") }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure { code: 1, message: format!("i/o error: {e}") }
    }
}

fn select_chars(modulus: u64, index: Option<usize>) -> Result<Vec<DirichletChar>, Failure> {
    match index {
        Some(i) => Ok(vec![dirichlet_char(modulus, i)?]),
        None => Ok(enumerate_chars(modulus)?),
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn compute_records(args: &ComputeArgs, with_character: bool) -> Result<Vec<OutputRecord>, Failure> {
    if !args.kind.twisted() && (args.modulus.is_some() || args.char_index.is_some()) {
        return Err(usage(format!("--modulus and --char need a gen-* kind, not {}", args.kind.name())));
    }
    let chi = dirichlet_char(args.modulus.unwrap_or(1), args.char_index.unwrap_or(0))?;
    let mut session = if args.kind.twisted() { QEulerSession::new(chi.clone()) } else { QEulerSession::plain() };
    let range = match (args.n, args.max_n) {
        (Some(n), _) => n..=n,
        (None, Some(m)) => 0..=m,
        (None, None) => unreachable!("clap requires --n or --max-n"),
    };
    let mut base = params(&[("kind", json!(args.kind.name()))]);
    if args.kind.twisted() {
        base.insert("modulus".into(), json!(chi.modulus()));
        base.insert("char".into(), json!(chi.index()));
        if with_character {
            base.insert("character".into(), character_json(&chi));
        }
    }
    if let Some(q) = &args.q {
        base.insert("q".into(), json!(q.to_string()));
    }
    let q0 = args.q.as_ref().map(QValue::to_complex);
    let mut out = Vec::new();
    for n in range {
        let mut p = base.clone();
        p.insert("n".into(), json!(n));
        let payload = if args.kind.polynomial() {
            let poly = if args.kind.twisted() { session.gen_q_euler_poly(n) } else { session.q_euler_poly(n) };
            let numeric = match q0 {
                Some(q0) => Some(
                    poly.coeffs()
                        .iter()
                        .map(|c| c.eval_numeric(q0).map(Into::into))
                        .collect::<qeuler::Result<Vec<_>>>()?,
                ),
                None => None,
            };
            Payload::Poly(PolyPayload { n, exact: poly.to_string(), coeffs: poly.coeffs().to_vec(), numeric })
        } else {
            let value = if args.kind.twisted() { session.gen_q_euler_number(n) } else { session.q_euler_number(n) };
            let at_q = match args.q.as_ref().and_then(QValue::as_exact) {
                Some(r) => Some(value.eval(&Cyclotomic::from_rational(r.clone()))?.to_string()),
                None => None,
            };
            let numeric = match q0 {
                Some(q0) => Some(value.eval_numeric(q0)?.into()),
                None => None,
            };
            Payload::Number(NumberPayload { n, exact: value.to_string(), value, at_q, numeric })
        };
        out.push(OutputRecord::new(p, payload));
    }
    Ok(out)
}

fn report_record(report: VerifyReport) -> OutputRecord {
    OutputRecord::new(report.params.clone(), Payload::Verify(report))
}

fn gap_witness(value: Complex64, series: Complex64) -> String {
    format!(
        "gap {:e}: value {} vs series {}",
        (value - series).norm(),
        format_complex(value),
        format_complex(series)
    )
}

fn run_check(check: &Check, tol: f64) -> Result<Vec<OutputRecord>, Failure> {
    let mut out = Vec::new();
    match check {
        Check::Theorem1 { chars, max_n } => {
            let mut plain = QEulerSession::plain();
            for chi in select_chars(chars.modulus, chars.char_index)? {
                for r in verify_theorem1_sweep(&mut plain, &chi, *max_n) {
                    let p = params(&[("modulus", json!(chi.modulus())), ("char", json!(chi.index())), ("n", json!(r.n))]);
                    let mut report = VerifyReport::new("theorem1", p, r.pass);
                    report.witness = r.witness.map(|w| w.to_string());
                    out.push(report_record(report));
                }
            }
        }
        Check::Theorem2 { d, char_index, p, big_n, q_int, mode, n, max_n } => {
            let mode: HypothesisMode = mode.parse()?;
            let m = congruence_modulus(*d, *p, *big_n)?;
            let q = match (q_int, mode) {
                (Some(q), _) => *q,
                (None, HypothesisMode::QEquiv1) => 1 + m as i64,
                (None, HypothesisMode::GcdPrinted) => return Err(usage("--q-int is required with --mode gcd-printed")),
            };
            let range = match n {
                Some(n) => *n..=*n,
                None => 0..=*max_n,
            };
            for chi in select_chars(*d, *char_index)? {
                let mut session = QEulerSession::new(chi.clone());
                for n in range.clone() {
                    let par = params(&[
                        ("d", json!(chi.modulus())),
                        ("char", json!(chi.index())),
                        ("p", json!(p)),
                        ("N", json!(big_n)),
                        ("q_int", json!(q)),
                        ("mode", json!(mode.as_str())),
                        ("n", json!(n)),
                    ]);
                    let mut report = match verify_theorem2_in(&mut session, n, *p, *big_n, q, mode) {
                        Ok(r) => {
                            let mut report = VerifyReport::new("theorem2", par, r.holds);
                            if !r.holds {
                                report.witness = Some(format!("{} vs {} mod {}", r.lhs, r.rhs, r.modulus));
                            }
                            report
                        }
                        Err(e @ Error::InvalidArgument(_)) if mode == HypothesisMode::QEquiv1 => return Err(e.into()),
                        Err(e) => {
                            let mut report = VerifyReport::new("theorem2", par, false);
                            report.witness = Some(e.to_string());
                            report
                        }
                    };
                    report.expect_fail = mode == HypothesisMode::GcdPrinted;
                    out.push(report_record(report));
                }
            }
        }
        Check::Distribution { chars, mode, n, max_n, q, x } => {
            let q0 = q.to_complex();
            let range = match n {
                Some(n) => *n..=*n,
                None => 0..=*max_n,
            };
            let which = match mode {
                DistMode::Printed => DistributionMode::Printed,
                DistMode::Corrected => DistributionMode::Corrected,
            };
            let mut plain = QEulerSession::plain();
            for chi in select_chars(chars.modulus, chars.char_index)? {
                for n in range.clone() {
                    let par = params(&[
                        ("modulus", json!(chi.modulus())),
                        ("char", json!(chi.index())),
                        ("n", json!(n)),
                        ("q", json!(q.to_string())),
                        ("x", json!(x.to_string())),
                        ("mode", json!(which.as_str())),
                    ]);
                    let r = verify_distribution_at(&mut plain, &chi, n, x, q0, tol)?;
                    let mut report = VerifyReport::new("distribution", par, r.matches(which));
                    report.tail_bound = Some(r.series.tail_bound);
                    report.expect_fail = which == DistributionMode::Printed;
                    if !report.pass {
                        let value = match which {
                            DistributionMode::Printed => r.printed_value,
                            DistributionMode::Corrected => r.corrected_value,
                        };
                        report.witness = Some(gap_witness(value, r.series.value));
                    }
                    out.push(report_record(report));
                }
            }
        }
        Check::Limit { chars, max_n } => {
            for chi in select_chars(chars.modulus, chars.char_index)? {
                let mut session = QEulerSession::new(chi.clone());
                for n in 0..=*max_n {
                    let par = params(&[("modulus", json!(chi.modulus())), ("char", json!(chi.index())), ("n", json!(n))]);
                    let r = verify_limit_in(&mut session, n)?;
                    let mut report = VerifyReport::new("limit", par, r.pass);
                    if !r.pass {
                        report.witness = Some(format!("limit {} vs oracle {}", r.exact, r.oracle));
                    }
                    out.push(report_record(report));
                }
            }
        }
        Check::Interpolation { chars, max_n, x, q } => {
            let q0 = q.to_complex();
            for chi in select_chars(chars.modulus, chars.char_index)? {
                let mut session = QEulerSession::new(chi.clone());
                for k in 0..=*max_n {
                    let par = params(&[
                        ("modulus", json!(chi.modulus())),
                        ("char", json!(chi.index())),
                        ("k", json!(k)),
                        ("x", json!(x.to_string())),
                        ("q", json!(q.to_string())),
                    ]);
                    let r = verify_interpolation_in(&mut session, k, x, q0, tol)?;
                    let mut report = VerifyReport::new("interpolation", par, r.pass);
                    report.tail_bound = Some(r.series.tail_bound);
                    if !r.pass {
                        report.witness = Some(gap_witness(r.exact, r.series.value));
                    }
                    out.push(report_record(report));
                }
            }
        }
        Check::Frobenius { max_n } => {
            let outcome = verify_frobenius(*max_n);
            let mut report = VerifyReport::new("frobenius", params(&[("max_n", json!(max_n))]), outcome.is_ok());
            if let Err(n) = outcome {
                report.witness = Some(format!("first mismatch at n = {n}"));
            }
            out.push(report_record(report));
        }
    }
    Ok(out)
}

fn lvalue_record(args: &LValueArgs, tol: f64) -> Result<OutputRecord, Failure> {
    let chi = dirichlet_char(args.modulus, args.char_index)?;
    let query = LQuery::new(args.s.to_complex(), chi, args.x.clone(), args.q.to_complex(), tol)?;
    let est = l_eval(&query)?;
    let p = params(&[
        ("s", json!(args.s.to_string())),
        ("x", json!(args.x.to_string())),
        ("q", json!(args.q.to_string())),
        ("modulus", json!(args.modulus)),
        ("char", json!(args.char_index)),
        ("tol", json!(tol)),
    ]);
    Ok(OutputRecord::new(p, Payload::LValue(LValuePayload::new(&query, &est))))
}

fn param_text(p: &Map<String, Value>) -> String {
    p.iter()
        .filter(|(k, _)| k.as_str() != "character")
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn numeric_text(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format_complex(z)
    }
}

fn write_text(w: &mut dyn Write, records: &[OutputRecord]) -> io::Result<()> {
    for r in records {
        match &r.payload {
            Payload::Number(p) => {
                write!(w, "n={}: {}", p.n, p.exact)?;
                if let Some(q) = r.params.get("q").and_then(Value::as_str) {
                    match (&p.at_q, p.numeric) {
                        (Some(exact), Some(v)) => write!(w, "  [q={q}: {exact} ~ {}]", numeric_text(v.into()))?,
                        (None, Some(v)) => write!(w, "  [q={q}: {}]", numeric_text(v.into()))?,
                        _ => {}
                    }
                }
                writeln!(w)?;
            }
            Payload::Poly(p) => {
                write!(w, "n={}: {}", p.n, p.exact)?;
                if let (Some(q), Some(v)) = (r.params.get("q").and_then(Value::as_str), &p.numeric) {
                    let coeffs: Vec<String> = v.iter().map(|c| numeric_text((*c).into())).collect();
                    write!(w, "  [q={q}: coefficients {}]", coeffs.join(", "))?;
                }
                writeln!(w)?;
            }
            Payload::Verify(v) => {
                let status = match (v.pass, v.expect_fail) {
                    (true, _) => "PASS",
                    (false, true) => "FAIL (expected)",
                    (false, false) => "FAIL",
                };
                write!(w, "{} {}: {status}", v.check, param_text(&v.params))?;
                if let Some(wit) = &v.witness {
                    write!(w, " - {wit}")?;
                }
                writeln!(w)?;
            }
            Payload::LValue(l) => writeln!(
                w,
                "L(s={}) = {}  (tail <= {:e}, {} terms)",
                l.s,
                numeric_text(Complex64::new(l.value_re, l.value_im)),
                l.tail_bound,
                l.terms_used
            )?,
        }
    }
    Ok(())
}

fn opt_f64(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn write_csv(w: &mut dyn Write, records: &[OutputRecord]) -> Result<(), Failure> {
    let mut csv = csv::Writer::from_writer(w);
    let header: &[&str] = match records.first().map(|r| &r.payload) {
        None => return Ok(()),
        Some(Payload::Number(_)) => &["n", "exact", "at_q", "re", "im"],
        Some(Payload::Poly(_)) => &["n", "power", "exact", "re", "im"],
        Some(Payload::Verify(_)) => &["check", "params", "pass", "expect_fail", "witness", "tail_bound"],
        Some(Payload::LValue(_)) => &["s", "value_re", "value_im", "tail_bound", "terms_used"],
    };
    csv.write_record(header)?;
    for r in records {
        match &r.payload {
            Payload::Number(p) => {
                let (re, im) = (p.numeric.map(|v| v.re), p.numeric.map(|v| v.im));
                csv.write_record([
                    p.n.to_string(),
                    p.exact.clone(),
                    p.at_q.clone().unwrap_or_default(),
                    opt_f64(re),
                    opt_f64(im),
                ])?;
            }
            Payload::Poly(p) => {
                for (j, c) in p.coeffs.iter().enumerate() {
                    let v = p.numeric.as_ref().map(|v| v[j]);
                    csv.write_record([
                        p.n.to_string(),
                        j.to_string(),
                        c.to_string(),
                        opt_f64(v.map(|v| v.re)),
                        opt_f64(v.map(|v| v.im)),
                    ])?;
                }
            }
            Payload::Verify(v) => csv.write_record([
                v.check.clone(),
                Value::Object(v.params.clone()).to_string(),
                v.pass.to_string(),
                v.expect_fail.to_string(),
                v.witness.clone().unwrap_or_default(),
                opt_f64(v.tail_bound),
            ])?,
            Payload::LValue(l) => csv.write_record([
                l.s.clone(),
                l.value_re.to_string(),
                l.value_im.to_string(),
                l.tail_bound.to_string(),
                l.terms_used.to_string(),
            ])?,
        }
    }
    csv.flush()?;
    Ok(())
}

/// JSON is one record per line, except tables, which are a single array.
fn emit(records: &[OutputRecord], format: Format, out: Option<&PathBuf>, as_array: bool) -> Result<(), Failure> {
    let mut w: Box<dyn Write> = match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Failure { code: 1, message: format!("{}: {e}", path.display()) })?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Text => write_text(&mut w, records)?,
        Format::Csv => write_csv(&mut w, records)?,
        Format::Json if as_array => {
            serde_json::to_writer_pretty(&mut w, records).map_err(io::Error::from)?;
            writeln!(w)?;
        }
        Format::Json => {
            for r in records {
                writeln!(w, "{}", r.to_json())?;
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(usage(format!("--tol must be positive, got {}", cli.tol)));
    }
    let out = cli.out.as_ref();
    match &cli.command {
        Command::Compute(args) => {
            let records = compute_records(args, cli.format == Some(Format::Json))?;
            emit(&records, cli.format.unwrap_or(Format::Text), out, false)?;
            Ok(true)
        }
        Command::Table(args) => {
            let format = cli.format.unwrap_or(Format::Csv);
            let records = compute_records(args, format == Format::Json)?;
            emit(&records, format, out, true)?;
            Ok(true)
        }
        Command::Verify { check } => {
            let records = run_check(check, cli.tol)?;
            emit(&records, cli.format.unwrap_or(Format::Text), out, false)?;
            Ok(records.iter().all(|r| match &r.payload {
                Payload::Verify(v) => v.acceptable(),
                _ => true,
            }))
        }
        Command::Lvalue(args) => {
            let record = lvalue_record(args, cli.tol)?;
            emit(&[record], cli.format.unwrap_or(Format::Text), out, false)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(f) if f.code == 2 => Cli::command().error(ErrorKind::ValueValidation, f.message).exit(),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

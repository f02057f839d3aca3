//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a usage or input error, 2 when a
//! factorization ran out of effort (any partial output is flagged).

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::arith;
use crate::classify::{self, Classification, PrimeSupport, PrimitiveDivisor};
use crate::divset::{self, CertifyOutcome, Instance, KMax};
use crate::error::Error;
use crate::general;

#[derive(Debug, Parser)]
#[command(name = "powerdiv", version, about = "Decide, certify and enumerate n with n^j | a^n - b^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Whether n^j divides a^n - b^n.
    Member(Opts),
    /// Factorization-chain certificate for n (gcd(a, b) = 1).
    Certify(Opts),
    /// Prime powers p^k with n p^k still a member (gcd(a, b) = 1).
    Extensions(Opts),
    /// All members up to --bound.
    Enumerate(Opts),
    /// Element tree up to --bound as a DOT digraph (gcd(a, b) = 1).
    Tree(Opts),
    /// Finiteness classification; with --n also the least primitive prime
    /// divisor of a^n - b^n.
    Classify(Opts),
    /// Members of the plus-set { n : n^j | a^n + b^n } up to --bound.
    Plus(Opts),
    /// Members of R^(j)(a, 0) up to --bound.
    A0(Opts),
    /// Brute-force scan of every n up to --bound (cross-check).
    Oracle(OracleOpts),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Bfile,
    Dot,
}

#[derive(Debug, Args)]
struct Opts {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_big)]
    a: Option<BigInt>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_big)]
    b: Option<BigInt>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    j: u32,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    bound: Option<u64>,
    /// Largest prime scanned by `extensions` (default: bound / n, else 10000).
    #[arg(long)]
    prime_bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Pollard rho iterations per attempt before giving up on a factorization.
    #[arg(long)]
    effort: Option<u64>,
}

#[derive(Debug, Args)]
struct OracleOpts {
    #[command(flatten)]
    opts: Opts,
    /// Scan a^n + b^n instead of a^n - b^n.
    #[arg(long)]
    plus: bool,
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    s.parse().map_err(|_| format!("not an integer: {s}"))
}

enum Failure {
    Usage(String),
    Effort(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EffortExceeded(_) => Failure::Effort(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// What a command produced; `incomplete` turns a success into exit status 2.
struct Output {
    text: String,
    incomplete: Option<String>,
}

impl Output {
    fn done(text: String) -> Self {
        Self {
            text,
            incomplete: None,
        }
    }
}

/// Runs the CLI on `argv` (including the program name), writing to the
/// process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 { write!(out, "{rendered}") } else { write!(err, "{rendered}") };
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli.command, started) {
        Ok(output) => {
            let _ = write!(out, "{}", output.text);
            match output.incomplete {
                None => 0,
                Some(reason) => {
                    let _ = writeln!(err, "incomplete: {reason}");
                    2
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Effort(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::Usage(format!("missing required flag --{flag}")))
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn query(opts: &Opts) -> Value {
    let mut q = Map::new();
    if let Some(a) = &opts.a {
        q.insert("a".into(), int_json(a));
    }
    if let Some(b) = &opts.b {
        q.insert("b".into(), int_json(b));
    }
    q.insert("j".into(), json!(opts.j));
    if let Some(n) = opts.n {
        q.insert("n".into(), json!(n));
    }
    if let Some(bound) = opts.bound {
        q.insert("bound".into(), json!(bound));
    }
    Value::Object(q)
}

fn json_record(opts: &Opts, started: Instant, fields: Value) -> String {
    let mut record = Map::new();
    record.insert("query".into(), query(opts));
    if let Value::Object(fields) = fields {
        record.extend(fields);
    }
    record.insert("elapsed_ms".into(), json!(started.elapsed().as_secs_f64() * 1000.0));
    format!("{}\n", Value::Object(record))
}

fn list_text(members: &[u64]) -> String {
    let items: Vec<String> = members.iter().map(u64::to_string).collect();
    format!("{}\n", items.join(" "))
}

fn bfile(members: &[u64]) -> String {
    members
        .iter()
        .enumerate()
        .map(|(i, m)| format!("{} {m}\n", i + 1))
        .collect()
}

/// Renders a member list in the requested format.
fn list_output(
    opts: &Opts,
    started: Instant,
    members: &[u64],
    incomplete: Option<String>,
    extra: Value,
) -> Result<Output, Failure> {
    let text = match opts.format {
        Format::Text => list_text(members),
        Format::Bfile => bfile(members),
        Format::Json => {
            let mut fields = json!({
                "members": members,
                "complete": incomplete.is_none(),
                "incomplete_reason": incomplete,
            });
            if let (Value::Object(f), Value::Object(e)) = (&mut fields, extra) {
                f.extend(e);
            }
            json_record(opts, started, fields)
        }
        Format::Dot => return Err(Failure::Usage("dot output is only available for enumerate and tree".into())),
    };
    Ok(Output { text, incomplete })
}

fn instance(opts: &Opts) -> Result<Instance, Failure> {
    Ok(Instance::new(need(&opts.a, "a")?, need(&opts.b, "b")?, opts.j)?)
}

fn execute(command: &Command, started: Instant) -> Result<Output, Failure> {
    let opts = match command {
        Command::Oracle(o) => &o.opts,
        Command::Member(o)
        | Command::Certify(o)
        | Command::Extensions(o)
        | Command::Enumerate(o)
        | Command::Tree(o)
        | Command::Classify(o)
        | Command::Plus(o)
        | Command::A0(o) => o,
    };
    if let Some(effort) = opts.effort {
        arith::set_default_rho_iterations(effort);
    }
    match command {
        Command::Member(o) => member(o, started),
        Command::Certify(o) => certify(o, started),
        Command::Extensions(o) => extensions(o, started),
        Command::Enumerate(o) => enumerate(o, started),
        Command::Tree(o) => tree(o, started),
        Command::Classify(o) => classify(o, started),
        Command::Plus(o) => plus(o, started),
        Command::A0(o) => a0(o, started),
        Command::Oracle(o) => oracle(&o.opts, o.plus, started),
    }
}

fn certificate_json(outcome: &CertifyOutcome) -> Value {
    match outcome {
        CertifyOutcome::Member(c) => json!(c),
        CertifyOutcome::NonMember(step) => json!({ "failing_step": step }),
    }
}

fn member(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let n = need(&opts.n, "n")?;
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let is_member = general::member_general(&inst.a, &inst.b, inst.j, n)?;
    let text = match opts.format {
        Format::Text => format!("{is_member}\n"),
        Format::Json => {
            let certificate = if inst.gcd().is_one() && !inst.is_degenerate() {
                certificate_json(&divset::certify(&inst, n)?)
            } else {
                Value::Null
            };
            json_record(
                opts,
                started,
                json!({ "member": is_member, "complete": true, "certificate": certificate }),
            )
        }
        _ => return Err(Failure::Usage("member supports --format text or json".into())),
    };
    Ok(Output::done(text))
}

fn certify(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let n = need(&opts.n, "n")?;
    let outcome = divset::certify(&inst, n)?;
    let text = match opts.format {
        Format::Text => {
            let mut s = String::new();
            let steps = match &outcome {
                CertifyOutcome::Member(c) => {
                    s += &format!("member (certificate verified: {})\n", c.verify(&inst));
                    c.chain.clone()
                }
                CertifyOutcome::NonMember(step) => {
                    s += "non-member; first failing step:\n";
                    vec![step.clone()]
                }
            };
            for st in steps {
                s += &format!(
                    "p={} k={} n_i={} need p^{} witnessed p^{}\n",
                    st.p, st.k, st.n_i, st.required_exponent, st.witnessed_valuation
                );
            }
            s
        }
        Format::Json => {
            let (is_member, verified) = match &outcome {
                CertifyOutcome::Member(c) => (true, Some(c.verify(&inst))),
                CertifyOutcome::NonMember(_) => (false, None),
            };
            json_record(
                opts,
                started,
                json!({
                    "member": is_member,
                    "verified": verified,
                    "complete": true,
                    "certificate": certificate_json(&outcome),
                }),
            )
        }
        _ => return Err(Failure::Usage("certify supports --format text or json".into())),
    };
    Ok(Output::done(text))
}

fn extensions(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let n = need(&opts.n, "n")?;
    let prime_bound = opts
        .prime_bound
        .or(opts.bound.map(|b| b / n.max(1)))
        .unwrap_or(10_000);
    let set = divset::extensions(&inst, n, prime_bound)?;
    let text = match opts.format {
        Format::Text => set
            .entries
            .iter()
            .map(|e| match e.k_max {
                KMax::Bounded(k) => format!("p={} e_p={} k_max={k}\n", e.p, e.e_p),
                KMax::Unbounded => format!("p={} e_p={} k_max=unbounded\n", e.p, e.e_p),
            })
            .collect(),
        Format::Json => json_record(
            opts,
            started,
            json!({ "prime_bound": prime_bound, "extensions": set, "complete": true }),
        ),
        _ => return Err(Failure::Usage("extensions supports --format text or json".into())),
    };
    Ok(Output::done(text))
}

fn enumerate(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let bound = need(&opts.bound, "bound")?;
    if inst.a == inst.b {
        return Err(Error::EveryIntegerIsMember.into());
    }
    if opts.format == Format::Dot {
        return tree(opts, started);
    }
    let e = general::enumerate_general(&inst.a, &inst.b, inst.j, bound)?;
    list_output(opts, started, &e.members, e.incomplete_reason, json!({}))
}

fn tree(opts: &Opts, _started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let bound = need(&opts.bound, "bound")?;
    if !matches!(opts.format, Format::Dot | Format::Text) {
        return Err(Failure::Usage("tree always writes DOT".into()));
    }
    let e = divset::enumerate(&inst, bound)?;
    let title = format!("R^({}) for a = {}, b = {}, n <= {bound}", inst.j, inst.a, inst.b);
    Ok(Output {
        text: e.tree.to_dot(&title),
        incomplete: e.incomplete_reason,
    })
}

fn support_json(c: &Classification) -> Value {
    match &c.prime_support {
        None => Value::Null,
        Some(PrimeSupport::Infinite) => json!("infinite"),
        Some(PrimeSupport::Finite(ps)) => {
            json!(ps.iter().map(|p| p.to_string()).collect::<Vec<_>>())
        }
    }
}

fn classification_json(c: &Classification) -> Value {
    json!({
        "verdict": c.verdict,
        "clause": c.clause,
        "text": c.to_string(),
        "prime_support": support_json(c),
    })
}

fn classify(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let c = match opts.bound {
        Some(bound) => classify::classify_with_bound(&inst, bound)?,
        None => classify::classify(&inst)?,
    };
    let primitive = match opts.n {
        Some(n) => {
            let g = inst.gcd();
            let (a1, b1) = (&inst.a / &g, &inst.b / &g);
            Some(classify::primitive_divisor(&a1, &b1, n)?)
        }
        None => None,
    };
    let mut incomplete = None;
    let primitive_text = primitive.as_ref().map(|p| match p {
        PrimitiveDivisor::None => "none".to_string(),
        PrimitiveDivisor::Prime(p) => p.to_string(),
        PrimitiveDivisor::Unknown { cofactor } => {
            incomplete = Some(format!("least primitive divisor not isolated; cofactor {cofactor}"));
            format!("unknown (cofactor {cofactor})")
        }
    });
    if let classify::Verdict::ConjecturallyFinite { complete: false, .. } = c.verdict {
        incomplete.get_or_insert_with(|| "bounded enumeration incomplete".into());
    }
    let text = match opts.format {
        Format::Text => {
            let mut s = format!("{c}\n");
            if let Some(p) = &primitive_text {
                s += &format!("primitive divisor of a^{} - b^{}: {p}\n", opts.n.unwrap(), opts.n.unwrap());
            }
            s
        }
        Format::Json => {
            let mut fields = classification_json(&c);
            fields["complete"] = json!(incomplete.is_none());
            if let Some(p) = primitive_text {
                fields["primitive_divisor"] = json!(p);
            }
            json_record(opts, started, fields)
        }
        _ => return Err(Failure::Usage("classify supports --format text or json".into())),
    };
    Ok(Output { text, incomplete })
}

fn plus(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let bound = need(&opts.bound, "bound")?;
    let set = general::plus_set(&inst.a, &inst.b, inst.j, bound)?;
    let extra = json!({
        "classification": set.classification.as_ref().map(classification_json),
    });
    let mut out = list_output(opts, started, &set.members, set.incomplete_reason, extra)?;
    if opts.format == Format::Text {
        if let Some(c) = &set.classification {
            out.text += &format!("{c}\n");
        }
    }
    Ok(out)
}

fn a0(opts: &Opts, started: Instant) -> Result<Output, Failure> {
    let a = need(&opts.a, "a")?;
    let bound = need(&opts.bound, "bound")?;
    let a = a
        .magnitude()
        .to_u64()
        .filter(|&a| a >= 2)
        .ok_or_else(|| Failure::Usage("a0 needs 2 <= |a| < 2^64".into()))?;
    let members = general::enumerate_a0(a, opts.j, bound)?;
    let extra = json!({
        "exceptions": general::a0_exceptions(a, opts.j)?,
        "k_constant": if opts.j >= 3 { Some(general::k_constant(a, opts.j)?) } else { None },
    });
    list_output(opts, started, &members, None, extra)
}

fn oracle(opts: &Opts, plus: bool, started: Instant) -> Result<Output, Failure> {
    let inst = instance(opts)?;
    let bound = need(&opts.bound, "bound")?;
    if inst.a.is_zero() && inst.b.is_zero() {
        return Err(Error::EveryIntegerIsMember.into());
    }
    let members: Vec<u64> = if plus {
        (1..=bound)
            .filter(|&n| general::plus_member(&inst.a, &inst.b, inst.j, n).unwrap_or(false))
            .collect()
    } else {
        divset::brute_enumerate(&inst, bound)
    };
    list_output(opts, started, &members, None, json!({ "plus": plus }))
}

//! Command-line front end. Every subcommand prints JSON (or CSV for the
//! sweep) on stdout; errors print `{"error": ..., "where": ...}` and exit 1.

use std::collections::BTreeMap;
use std::path::Path;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::arith::{factor, fmt_rat, parse_int, parse_rat, val_rat, BigRat};
use crate::counting::{local_count_full, sweep, table1, PsiInput, SWEEP_HEADER};
use crate::equations::{apply, jacobian, GenusOneEquation, Transformation};
use crate::error::{Error, Result};
use crate::fixtures::{e1, e2, example1_transformations, phi3, phi4, quartic2};
use crate::global::{bad_primes, global_count, minimal_discriminant, verify_model_list};
use crate::localred::{is_minimal_at, tate, KodairaType};

const AFTER_HELP: &str = "\
Equations: `deg=3; coeffs=[c1,...,c10]` (5, 8, 10 or 20 rationals for degrees 1 to 4).
Transformations:
  degree 1: u=<rat>; r=<rat>; s=<rat>; t=<rat>
  degree 2: mu=<rat>; r=[r0,r1,r2]; M=[[a,b],[c,d]]
  degree 3: mu=<rat>; M=[[..],[..],[..]]
  degree 4: M=[[..],[..]]; N=[[..],[..],[..],[..]]
Component group elements: `i` for cyclic groups, `a,b` for the Klein group.
Points: `x,y` with rational coordinates, or `inf`.";

#[derive(Parser, Debug)]
#[command(name = "minmodels", version, about = "Count minimal models of genus one curves over Q", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
#[group(required = true, multiple = false)]
struct EqArg {
    /// Equation file, or the equation itself if no such file exists.
    #[arg(long, allow_hyphen_values = true)]
    eq: Option<String>,
    /// Equation given inline.
    #[arg(long = "eq-inline", allow_hyphen_values = true)]
    eq_inline: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// c4, c6 and the discriminant of an equation.
    Invariants {
        #[command(flatten)]
        eq: EqArg,
    },
    /// Tate's algorithm at one prime.
    Tate {
        /// a1,a2,a3,a4,a6
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        prime: String,
    },
    /// Number of minimal degree-n models at one prime.
    Localcount {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        prime: String,
        #[arg(long)]
        degree: u8,
        /// Component group element ψ.
        #[arg(long, conflicts_with = "point")]
        psi: Option<String>,
        /// A rational point P; ψ is the component it reduces to.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Number of minimal global degree-n models.
    Globalcount {
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        degree: u8,
        /// Per-prime ψ, e.g. `5=1,19=0` or `7=1,0`; unlisted primes use 0.
        #[arg(long)]
        psi: Option<String>,
    },
    /// Closed-form count for a Kodaira type.
    Table1 {
        /// A type such as `III*` or `I4`, or a row label such as `I2m*` with --m.
        #[arg(long = "type")]
        kodaira: String,
        #[arg(long)]
        cp: String,
        #[arg(long)]
        degree: u8,
        #[arg(long, default_value = "0")]
        psi: String,
        #[arg(long)]
        m: Option<u32>,
    },
    /// CSV comparison of the enumerator with the closed forms.
    #[command(name = "sweep-table1")]
    SweepTable1 {
        #[arg(long = "max-m", default_value_t = 10)]
        max_m: u32,
    },
    /// Apply a transformation to an equation.
    Transform {
        #[command(flatten)]
        eq: EqArg,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Whether an equation is minimal at each relevant prime.
    Minimal {
        #[command(flatten)]
        eq: EqArg,
        #[arg(long)]
        prime: Option<String>,
    },
    /// Report for the ternary cubic example.
    #[command(name = "verify-example1")]
    VerifyExample1,
    /// Report for the quadric intersection example.
    #[command(name = "verify-example2")]
    VerifyExample2,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn error_json(message: &str, origin: &str) -> String {
    json!({ "error": message, "where": origin }).to_string()
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string() };
            }
            let msg = e.kind().as_str().unwrap_or("invalid arguments").to_string();
            let detail = e.to_string().lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
            return Outcome { code: 1, stdout: error_json(if detail.is_empty() { &msg } else { &detail }, "cli") };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout },
        Err(e) => Outcome { code: 1, stdout: error_json(&e.to_string(), e.origin()) },
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))
}

fn read_eq(arg: &EqArg) -> Result<GenusOneEquation> {
    let text = match (&arg.eq, &arg.eq_inline) {
        (_, Some(s)) => s.clone(),
        (Some(s), None) if Path::new(s).is_file() => {
            std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?
        }
        (Some(s), None) => s.clone(),
        (None, None) => return Err(Error::Parse("no equation given".into())),
    };
    text.trim().parse()
}

fn parse_curve(s: &str) -> Result<GenusOneEquation> {
    let a = s.split(',').map(parse_rat).collect::<Result<Vec<BigRat>>>()?;
    if a.len() != 5 {
        return Err(Error::Parse(format!("a curve needs 5 coefficients, got {}", a.len())));
    }
    GenusOneEquation::new(1, a)
}

/// `5=1,19=0` or `7=1,0,11=2`: tokens without `=` continue the previous value.
fn parse_psi_map(s: &str) -> Result<BTreeMap<BigInt, PsiInput>> {
    let mut entries: Vec<(String, String)> = Vec::new();
    for tok in s.split(',') {
        match tok.split_once('=') {
            Some((p, v)) => entries.push((p.trim().to_string(), v.trim().to_string())),
            None => match entries.last_mut() {
                Some((_, v)) => {
                    v.push(',');
                    v.push_str(tok.trim());
                }
                None => return Err(Error::Parse(format!("bad --psi entry {tok:?}"))),
            },
        }
    }
    let mut out = BTreeMap::new();
    for (p, v) in entries {
        if out.insert(parse_int(&p)?, PsiInput::Text(v)).is_some() {
            return Err(Error::Parse(format!("prime {p} listed twice")));
        }
    }
    Ok(out)
}

/// Turns a row label with `m` into a concrete type: `I2m` and `m = 3` give `I6`.
fn resolve_type(label: &str, m: Option<u32>) -> Result<KodairaType> {
    let Some(m) = m else { return label.parse() };
    let concrete = match label {
        "I2m" => format!("I{}", 2 * m),
        "I2m+1" => format!("I{}", 2 * m + 1),
        "I2m*" => format!("I{}*", 2 * m),
        "I2m+1*" => format!("I{}*", 2 * m + 1),
        other => other.to_string(),
    };
    concrete.parse()
}

fn resolve_cp(cp: &str, m: Option<u32>) -> Result<u32> {
    let m = m.unwrap_or(0);
    match cp {
        "2m" => Ok(2 * m),
        "2m+1" => Ok(2 * m + 1),
        _ => cp.trim().parse().map_err(|_| Error::Parse(format!("bad c_p {cp:?}"))),
    }
}

fn invariants_json(e: &GenusOneEquation) -> Value {
    let inv = e.invariants();
    json!({
        "degree": e.degree(),
        "c4": fmt_rat(&inv.c4),
        "c6": fmt_rat(&inv.c6),
        "delta": fmt_rat(&inv.delta),
    })
}

fn valuation_map(q: &BigRat, ps: &[BigInt]) -> Value {
    let m: serde_json::Map<String, Value> =
        ps.iter().map(|p| (p.to_string(), serde_json::to_value(val_rat(q, p)).unwrap_or(Value::Null))).collect();
    Value::Object(m)
}

fn minimal_report(e: &GenusOneEquation, primes: &[BigInt]) -> Result<Value> {
    let mut out = Vec::new();
    for p in primes {
        let (integral, minimal) = match is_minimal_at(e, p) {
            Ok(b) => (true, b),
            Err(Error::NotIntegral(_)) => (false, false),
            Err(err) => return Err(err),
        };
        out.push(json!({ "p": prime_json(p), "integral": integral, "minimal": minimal }));
    }
    Ok(Value::Array(out))
}

fn relevant_primes(e: &GenusOneEquation) -> Result<Vec<BigInt>> {
    let delta = e.invariants().delta;
    if num_traits::Zero::is_zero(&delta) {
        return Err(Error::Singular);
    }
    let mut ps = std::collections::BTreeSet::new();
    for n in [delta.numer(), delta.denom()] {
        ps.extend(factor(n)?.into_iter().map(|(p, _)| p));
    }
    for c in e.coeffs() {
        ps.extend(factor(c.denom())?.into_iter().map(|(p, _)| p));
    }
    Ok(ps.into_iter().collect())
}

fn dispatch(cmd: Command) -> Result<String> {
    match cmd {
        Command::Invariants { eq } => pretty(&invariants_json(&read_eq(&eq)?)),
        Command::Tate { curve, prime } => pretty(&tate(&parse_curve(&curve)?, &parse_int(&prime)?)?),
        Command::Localcount { curve, prime, degree, psi, point } => {
            let input = match (psi, point) {
                (Some(s), _) => PsiInput::Text(s),
                (None, Some(pt)) => PsiInput::point(&pt)?,
                (None, None) => PsiInput::Identity,
            };
            let c = local_count_full(&parse_curve(&curve)?, &parse_int(&prime)?, degree, &input)?;
            pretty(&json!({
                "kodaira": c.reduction.kodaira,
                "cp": c.reduction.cp,
                "psi": c.psi,
                "total": c.breakdown.total,
                "perShape": c.breakdown.per_shape,
            }))
        }
        Command::Globalcount { curve, degree, psi } => {
            let map = psi.as_deref().map(parse_psi_map).transpose()?.unwrap_or_default();
            pretty(&global_count(&parse_curve(&curve)?, degree, &map)?)
        }
        Command::Table1 { kodaira, cp, degree, psi, m } => {
            let k = resolve_type(&kodaira, m)?;
            let c = resolve_cp(&cp, m)?;
            let e = k.phi_group().parse_element(&psi)?;
            Ok(table1(k, c, degree, e)?.to_string())
        }
        Command::SweepTable1 { max_m } => {
            let mut out = String::from(SWEEP_HEADER);
            for cell in sweep(max_m) {
                out.push('\n');
                out.push_str(&cell.csv());
            }
            Ok(out)
        }
        Command::Transform { eq, g } => {
            let g: Transformation = g.parse()?;
            let psi = apply(&g, &read_eq(&eq)?)?;
            pretty(&json!({ "equation": psi, "text": psi.to_string(), "integral": psi.is_integral() }))
        }
        Command::Minimal { eq, prime } => {
            let e = read_eq(&eq)?;
            let primes = match prime {
                Some(p) => vec![parse_int(&p)?],
                None => relevant_primes(&e)?,
            };
            pretty(&minimal_report(&e, &primes)?)
        }
        Command::VerifyExample1 => pretty(&example1_report()?),
        Command::VerifyExample2 => pretty(&example2_report()?),
    }
}

pub fn example1_report() -> Result<Value> {
    let e = e1();
    let primes = [BigInt::from(5), BigInt::from(19)];
    let mut local = Vec::new();
    for p in &primes {
        let c = local_count_full(&e, p, 3, &PsiInput::Identity)?;
        local.push(json!({
            "p": prime_json(p),
            "kodaira": c.reduction.kodaira,
            "cp": c.reduction.cp,
            "vDeltaMin": c.reduction.v_delta_min,
            "Np": c.breakdown.total,
        }));
    }
    let phi = phi3();
    let jac = jacobian(&phi)?;
    let list = verify_model_list(&phi, &example1_transformations())?;
    Ok(json!({
        "curve": e,
        "badPrimes": bad_primes(&e)?.iter().map(prime_json).collect::<Vec<_>>(),
        "local": local,
        "N": global_count(&e, 3, &BTreeMap::new())?.total,
        "cubic": {
            "integral": phi.is_integral(),
            "minimal": primes.iter().map(|p| is_minimal_at(&phi, p)).collect::<Result<Vec<_>>>()?,
            "deltaValuations": valuation_map(&phi.invariants().delta, &primes),
            "jacobianJ": fmt_rat(&j_invariant(&jac)),
            "curveJ": fmt_rat(&j_invariant(&e)),
        },
        "models": list,
    }))
}

pub fn example2_report() -> Result<Value> {
    let e = e2();
    let phi = phi4();
    let primes = [BigInt::from(5), BigInt::from(37)];
    let jac = jacobian(&phi)?;
    Ok(json!({
        "curve": e,
        "minimalDiscriminant": minimal_discriminant(&e)?.to_string(),
        "badPrimes": bad_primes(&e)?.iter().map(prime_json).collect::<Vec<_>>(),
        "N": global_count(&e, 4, &BTreeMap::new())?.total,
        "quadrics": {
            "integral": phi.is_integral(),
            "deltaValuations": valuation_map(&phi.invariants().delta, &primes),
            "jacobianJ": fmt_rat(&j_invariant(&jac)),
            "curveJ": fmt_rat(&j_invariant(&e)),
        },
        "quartic": {
            "integral": quartic2().is_integral(),
            "deltaValuations": valuation_map(&quartic2().invariants().delta, &primes),
        },
    }))
}

fn prime_json(p: &BigInt) -> Value {
    p.to_i64().map_or_else(|| Value::String(p.to_string()), Value::from)
}

fn j_invariant(e: &GenusOneEquation) -> BigRat {
    let inv = e.invariants();
    &inv.c4 * &inv.c4 * &inv.c4 / &inv.delta
}

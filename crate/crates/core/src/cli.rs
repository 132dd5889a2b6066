//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text to print, so the binary is a two-line wrapper.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use crate::certify::{certify_timed, CertifyOptions, SubspaceCheck, Timings, Verdict, VerdictKind};
use crate::charpoly::{char_poly_with, discriminant_robust, CharPolyOptions};
use crate::error::Error;
use crate::hankel::{definiteness_of, hankel_matrix};
use crate::poly::{space_dimension, HomogPoly};
use crate::rational::{parse_rational, Rational};
use crate::realroots::{
    is_nonneg_on_ray, is_positive_on_ray, ray_violation, squarefree_part, sturm_count, sylvester_root_counts, Bound,
};
use crate::resultant::discriminant_degree;
use crate::unipoly::UniPoly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_NONNEGATIVE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_CAPACITY: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Parser, Debug)]
#[command(name = "formcert", version, about = "Exact positivity certificates for real forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a form is positive, non-negative, or neither.
    Certify {
        #[command(flatten)]
        input: FormInput,
        /// Random sampler points.
        #[arg(long, default_value_t = crate::certify::DEFAULT_BUDGET)]
        budget: usize,
        /// Extra subspace for the necessary test, rows separated by `;`,
        /// entries by `,` (e.g. "1,1,0;0,0,1"). Repeatable.
        #[arg(long = "subspace", value_name = "ROWS")]
        subspaces: Vec<String>,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the normalized discriminant.
    Discriminant {
        #[command(flatten)]
        input: FormInput,
        #[arg(long)]
        json: bool,
    },
    /// Print the characteristic polynomial χ(F)(t).
    Charpoly {
        #[command(flatten)]
        input: FormInput,
        /// Restrict to these variables first (one-based, e.g. "1,3").
        #[arg(long)]
        subset: Option<String>,
        /// Write a two-column (t, χ(t)) table to this file.
        #[arg(long, value_name = "FILE")]
        table: Option<String>,
        /// Table range as "a:b".
        #[arg(long, default_value = "0:4")]
        range: String,
        #[arg(long, default_value_t = 81)]
        samples: usize,
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the catalecticant matrix and its definiteness.
    Hankel {
        #[command(flatten)]
        input: FormInput,
        #[arg(long)]
        json: bool,
    },
    /// Root counts and ray predicates of a polynomial in `t`.
    Roots {
        /// Polynomial in `t`, e.g. "t^2 - 5 t + 6".
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long)]
        file: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Restrict a form to a coordinate subspace.
    Restrict {
        #[command(flatten)]
        input: FormInput,
        /// Variables to keep (one-based, e.g. "1,3").
        #[arg(long)]
        subset: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct FormInput {
    /// Number of variables.
    #[arg(short = 'n', required = true)]
    n: usize,
    /// The form, e.g. "x1^4 + x2^4".
    #[arg(allow_hyphen_values = true)]
    poly: Option<String>,
    /// Read the form from a file instead.
    #[arg(long)]
    file: Option<String>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => EXIT_CAPACITY,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: format!("error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: format!("error: {}", message.into()),
    }
}

fn read_text(inline: &Option<String>, file: &Option<String>) -> Result<String, Failure> {
    match (inline, file) {
        (Some(t), None) => Ok(t.clone()),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}"))),
        (Some(_), Some(_)) => Err(usage("give the polynomial inline or with --file, not both")),
        (None, None) => Err(usage("no polynomial given")),
    }
}

impl FormInput {
    fn form(&self) -> Result<(String, HomogPoly), Failure> {
        let text = read_text(&self.poly, &self.file)?;
        let f = HomogPoly::parse(text.trim(), self.n)?;
        Ok((text.trim().to_string(), f))
    }
}

fn parse_subset(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| {
            let v: usize = s.trim().parse().map_err(|_| usage(format!("bad variable index `{s}`")))?;
            v.checked_sub(1).ok_or_else(|| usage("variable indices start at 1"))
        })
        .collect()
}

fn parse_rows(text: &str) -> Result<Vec<Vec<Rational>>, Failure> {
    text.split(';')
        .map(|row| row.split(',').map(|c| parse_rational(c).map_err(Failure::from)).collect())
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize") + "\n"
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(f) => (f.code, f.message + "\n"),
    }
}

fn dispatch(command: Command) -> Result<(i32, String), Failure> {
    match command {
        Command::Certify {
            input,
            budget,
            subspaces,
            parallel,
            json,
        } => {
            let (text, f) = input.form()?;
            let options = CertifyOptions {
                parallel,
                budget,
                subspaces: subspaces.iter().map(|s| parse_rows(s)).collect::<Result<_, _>>()?,
            };
            let (verdict, timings) = certify_timed(&f, &options)?;
            let code = match verdict.kind {
                VerdictKind::Positive | VerdictKind::Nonnegative => EXIT_OK,
                VerdictKind::NotNonnegative => EXIT_NOT_NONNEGATIVE,
                VerdictKind::Unknown => EXIT_UNKNOWN,
            };
            let out = if json {
                to_json(&certify_json(&text, &f, &verdict, &timings))
            } else {
                certify_summary(&f, &verdict, &timings)
            };
            Ok((code, out))
        }
        Command::Discriminant { input, json } => {
            let (text, f) = input.form()?;
            let value = discriminant_robust(&f)?;
            let out = if json {
                to_json(&json!({
                    "input": input_echo(&text, &f),
                    "discriminant": value.to_string(),
                }))
            } else {
                format!("{value}\n")
            };
            Ok((EXIT_OK, out))
        }
        Command::Charpoly {
            input,
            subset,
            table,
            range,
            samples,
            parallel,
            json,
        } => {
            let (text, mut f) = input.form()?;
            if let Some(s) = &subset {
                f = f.restrict(&parse_subset(s)?)?;
            }
            let chi = char_poly_with(&f, CharPolyOptions { parallel })?;
            if let Some(path) = &table {
                write_table(path, &chi, &range, samples)?;
            }
            let out = if json {
                to_json(&json!({
                    "input": input_echo(&text, &f),
                    "chi": chi,
                    "chi_text": chi.to_string(),
                }))
            } else {
                format!("{chi}\n")
            };
            Ok((EXIT_OK, out))
        }
        Command::Hankel { input, json } => {
            let (text, f) = input.form()?;
            let h = hankel_matrix(&f)?;
            let (kind, sig) = definiteness_of(h.matrix());
            let out = if json {
                to_json(&json!({
                    "input": input_echo(&text, &f),
                    "hankel": h,
                    "definiteness": kind,
                    "signature": sig,
                }))
            } else {
                let mut s = String::new();
                for row in h.matrix().rows() {
                    let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(s, "[{}]", cells.join(", "));
                }
                let _ = writeln!(
                    s,
                    "{} (rank {}, {} positive, {} negative)",
                    serde_json::to_value(kind).expect("enum").as_str().unwrap_or_default(),
                    sig.rank,
                    sig.positive,
                    sig.negative
                );
                s
            };
            Ok((EXIT_OK, out))
        }
        Command::Roots { poly, file, json } => {
            let text = read_text(&poly, &file)?;
            let p = UniPoly::parse(text.trim())?;
            if p.is_zero() {
                return Err(Error::ZeroPolynomial.into());
            }
            let real = sturm_count(&p, &Bound::NegInfinity, &Bound::PosInfinity)?;
            let positive = sturm_count(&p, &Bound::Finite(Rational::from_integer(0.into())), &Bound::PosInfinity)?;
            let sqf = squarefree_part(&p);
            let trace = match sylvester_root_counts(&sqf) {
                Ok(c) => Some(c),
                Err(Error::RootAtZero) => None,
                Err(e) => return Err(e.into()),
            };
            let nonneg = is_nonneg_on_ray(&p)?;
            let positive_ray = is_positive_on_ray(&p).unwrap_or(false);
            let witness = ray_violation(&p)?;
            let out = if json {
                to_json(&json!({
                    "input": text.trim(),
                    "poly": p,
                    "sturm": { "real_roots": real, "positive_real_roots": positive },
                    "trace_form": trace,
                    "nonnegative_on_ray": nonneg,
                    "positive_on_ray": positive_ray,
                    "ray_witness": witness,
                }))
            } else {
                let mut s = String::new();
                let _ = writeln!(s, "polynomial: {p}");
                let _ = writeln!(s, "distinct real roots (Sturm): {real}");
                let _ = writeln!(s, "distinct positive roots (Sturm): {positive}");
                match trace {
                    Some(c) => {
                        let _ = writeln!(
                            s,
                            "trace forms: {} real, {} positive",
                            c.real_roots, c.positive_real_roots
                        );
                    }
                    None => {
                        let _ = writeln!(s, "trace forms: skipped, 0 is a root");
                    }
                }
                let _ = writeln!(s, "nonnegative on t >= 0: {}", yes_no(nonneg));
                let _ = writeln!(s, "positive on t >= 0: {}", yes_no(positive_ray));
                if let Some(w) = witness {
                    let _ = writeln!(s, "negative at t = {}: {}", w.t, w.value);
                }
                s
            };
            Ok((EXIT_OK, out))
        }
        Command::Restrict { input, subset, json } => {
            let (text, f) = input.form()?;
            let g = f.restrict(&parse_subset(&subset)?)?;
            let out = if json {
                to_json(&json!({ "input": input_echo(&text, &f), "restricted": g }))
            } else {
                format!("{g}\n")
            };
            Ok((EXIT_OK, out))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn input_echo(text: &str, f: &HomogPoly) -> serde_json::Value {
    json!({ "text": text, "n": f.n(), "d": f.degree(), "parsed": f.to_string() })
}

fn write_table(path: &str, chi: &UniPoly, range: &str, samples: usize) -> Result<(), Failure> {
    let (a, b) = range
        .split_once(':')
        .ok_or_else(|| usage("range must look like a:b"))?;
    let (a, b) = (parse_rational(a)?, parse_rational(b)?);
    if samples < 2 || a >= b {
        return Err(usage("a table needs a < b and at least two samples"));
    }
    let step = (&b - &a) / Rational::from_integer((samples as i64 - 1).into());
    let mut out = String::from("# t chi(t)\n");
    for k in 0..samples {
        let t = &a + &step * Rational::from_integer((k as i64).into());
        let v = chi.eval(&t);
        let _ = writeln!(
            out,
            "{} {}",
            t.to_f64().unwrap_or(f64::NAN),
            v.to_f64().unwrap_or(f64::NAN)
        );
    }
    std::fs::write(path, out).map_err(|e| usage(format!("cannot write {path}: {e}")))
}

/// The JSON report of `certify`; everything except `timings` is
/// reproducible.
pub fn certify_json(text: &str, f: &HomogPoly, verdict: &Verdict, timings: &Timings) -> serde_json::Value {
    let (n, d) = (f.n(), f.degree());
    json!({
        "input": input_echo(text, f),
        "n": n,
        "d": d,
        "D": discriminant_degree(n, d),
        "N": space_dimension(n, d),
        "verdict": verdict.kind,
        "certificates": verdict.certificates,
        "witness": verdict.witness.as_ref().map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        "report": verdict.report,
        "timings": timings,
    })
}

fn describe_check(c: &SubspaceCheck) -> String {
    if let Some(why) = &c.skipped {
        return format!("skipped ({why})");
    }
    let disc = c.discriminant.as_ref().map_or("-".into(), |v| v.to_string());
    let ray = match c.chi_nonneg_on_ray {
        Some(true) => "yes".to_string(),
        Some(false) => match &c.ray_witness {
            Some(w) => format!("no, χ({}) = {}", w.t, w.value),
            None => "no".to_string(),
        },
        None => "-".to_string(),
    };
    format!("Δ = {disc}, χ ≥ 0 on t ≥ 0: {ray}")
}

fn certify_summary(f: &HomogPoly, verdict: &Verdict, timings: &Timings) -> String {
    let r = &verdict.report;
    let mut s = String::new();
    let _ = writeln!(s, "form: {f}");
    let _ = writeln!(s, "n = {}, d = {}, D = {}, N = {}", r.n, r.d, r.big_d, r.big_n);
    let _ = writeln!(s, "verdict: {}", verdict.kind);
    if !verdict.certificates.is_empty() {
        let kinds: Vec<&str> = verdict.certificates.iter().map(|c| c.kind()).collect();
        let _ = writeln!(s, "certificates: {}", kinds.join(", "));
    }
    if let Some(w) = &verdict.witness {
        let cells: Vec<String> = w.iter().map(|x| x.to_string()).collect();
        let value = f.evaluate(w).map(|v| v.to_string()).unwrap_or_default();
        let _ = writeln!(s, "witness: F({}) = {}", cells.join(", "), value);
    }
    let _ = writeln!(s, "tests:");
    if let Some(sy) = &r.sylvester {
        let lead: Vec<String> = sy.leading.iter().map(|m| m.value.to_string()).collect();
        let _ = writeln!(s, "  leading principal minors: {}", lead.join(", "));
        match &sy.first_negative {
            Some(m) => {
                let _ = writeln!(s, "  principal minor {:?} = {} < 0", m.rows, m.value);
            }
            None => {
                let _ = writeln!(s, "  all principal minors >= 0");
            }
        }
    }
    let h = &r.sufficient.hankel;
    let _ = writeln!(
        s,
        "  catalecticant: {} (rank {} of {})",
        serde_json::to_value(h.definiteness).expect("enum").as_str().unwrap_or_default(),
        h.signature.rank,
        h.hankel.matrix().dim()
    );
    match (&r.sufficient.chi, &r.sufficient.chi_skipped) {
        (Some(chi), _) => {
            let _ = writeln!(s, "  χ(t) = {chi}");
            let _ = writeln!(
                s,
                "  χ > 0 on t >= 0: {}",
                yes_no(r.sufficient.chi_positive_on_ray == Some(true))
            );
        }
        (None, Some(why)) => {
            let _ = writeln!(s, "  χ: skipped ({why})");
        }
        (None, None) => {}
    }
    for c in &r.necessary.checks {
        let _ = writeln!(s, "  subspace {}: {}", c.subspace, describe_check(c));
    }
    match &r.counterexample {
        Some(w) => {
            let cells: Vec<String> = w.point.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  sampler: F({}) = {}", cells.join(", "), w.value);
        }
        None => {
            let _ = writeln!(s, "  sampler: no negative point found");
        }
    }
    let total: f64 = timings.values().sum();
    let _ = writeln!(s, "time: {total:.3} s");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut v = vec!["formcert"];
        v.extend_from_slice(args);
        run(v)
    }

    #[test]
    fn documented_examples() {
        let (code, out) = call(&["certify", "-n", "2", "x1^4 + x2^4"]);
        assert_eq!(code, 0);
        assert!(out.contains("verdict: POSITIVE"));
        let (code, out) = call(&["discriminant", "-n", "2", "x1^4 + 2 x1^2 x2^2 + x2^4"]);
        assert_eq!((code, out.as_str()), (0, "0\n"));
        let (code, out) = call(&["charpoly", "-n", "2", "x1^2 + 2 x2^2"]);
        assert_eq!((code, out.as_str()), (0, "t^2 + 3 t + 2\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["certify", "-n", "2", "x1^4 - 3 x1^2 x2^2 + x2^4"]).0, 1);
        assert_eq!(call(&["certify", "-n", "2", "x1^2 x2^2"]).0, 2);
        assert_eq!(call(&["certify", "-n", "2", "x1^3 + x2^3"]).0, 64);
        assert_eq!(call(&["certify", "-n", "2", "x1^4 +"]).0, 64);
        assert_eq!(call(&["certify", "x1^4"]).0, 64);
        assert_eq!(call(&["bogus"]).0, 64);
        assert_eq!(call(&["discriminant", "-n", "5", "x1^2 + x5^2"]).0, 65);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn other_subcommands() {
        let (code, out) = call(&["restrict", "-n", "3", "x1^2 + x1 x2 + x3^2", "--subset", "1,3"]);
        assert_eq!((code, out.as_str()), (0, "x1^2 + x2^2\n"));
        let (_, out) = call(&["roots", "t^2 - 5 t + 6"]);
        assert!(out.contains("distinct positive roots (Sturm): 2"));
        assert!(out.contains("trace forms: 2 real, 2 positive"));
        assert!(out.contains("nonnegative on t >= 0: no"));
        let (_, out) = call(&["hankel", "-n", "2", "x1^2 x2^2"]);
        assert!(out.starts_with("[0, 0, 1/6]\n[0, 1/6, 0]\n[1/6, 0, 0]\n"));
        assert!(out.contains("INDEFINITE"));
    }

    #[test]
    fn json_is_exact() {
        let (_, out) = call(&["certify", "-n", "2", "--json", "x1^2 x2^2"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "UNKNOWN");
        assert_eq!(v["report"]["sufficient"]["hankel"]["hankel"]["matrix"][0][2], "1/6");
        assert_eq!(v["D"], 6);
        assert_eq!(v["N"], 5);
    }
}

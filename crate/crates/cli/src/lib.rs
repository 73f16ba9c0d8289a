//! Argument handling for the `hyperq` binary. [`run`] never exits the
//! process, so tests can drive it directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hyperq::fence::{fence, ideals, ideals_dot, rgf};
use hyperq::hyperbinary::{enumerate, h_count, h_q, h_rs, hasse_dot, hbar_st, records};
use hyperq::matrices::{m_of, m_prime_of};
use hyperq::qrational::{cw_index, qdeform, qdeform_via_graph};
use hyperq::stern::{cw, cw_q, fusc, fusc_q};
use hyperq::sweep::with_threads;
use hyperq::verify::{verify, verify_sequential, Theorem, VerifyReport};
use hyperq::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hyperq", version, about = "Stern sequences, hyperbinary lattices and q-deformed rationals")]
struct Cli {
    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stern's diatomic sequence.
    Fusc { n: u64 },
    /// q-Stern polynomial.
    Fuscq { n: u64 },
    /// Calkin-Wilf rational.
    Cw { n: u64 },
    /// q-Calkin-Wilf rational function.
    Cwq { n: u64 },
    /// q-deformed rational [r/s]_q.
    Qrat {
        rational: String,
        #[arg(long, value_enum, default_value_t = Via::Cf)]
        via: Via,
    },
    /// Position of r/s in the Calkin-Wilf sequence.
    Cwindex { rational: String },
    /// Hyperbinary expansions of n (lists them by default).
    #[command(group(ArgGroup::new("view").args(["list", "count", "genfunc", "stats", "dot"])))]
    Hyper {
        n: u64,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        genfunc: bool,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Fence poset of n (lists its covers by default).
    #[command(group(ArgGroup::new("view").args(["rgf", "dot"])))]
    Fence {
        n: u64,
        /// Diagram of the fence, or of its ideal lattice with --ideals.
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        ideals: bool,
        #[arg(long)]
        rgf: bool,
    },
    /// The matrix product M(n), or M'(n) with --prime.
    Matrix {
        n: u64,
        #[arg(long)]
        prime: bool,
    },
    /// Check an identity for every n up to --max.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        max: u64,
        /// Worker threads for the sweep.
        #[arg(long)]
        threads: Option<usize>,
        /// Run the sweep on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Cf,
    Graph,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

fn error_outcome(e: Error) -> Outcome {
    let code = match e {
        Error::UnsupportedDomain(_) => EXIT_UNSUPPORTED,
        _ => EXIT_USAGE,
    };
    Outcome::fail(code, format!("error: {e}"))
}

fn parse_rational(text: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::Parse(format!("expected a rational r/s with 64-bit parts, got {text:?}"));
    let part = |t: &str| {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<u64>().map_err(|_| bad())
    };
    let (r, s) = match text.split_once('/') {
        Some((r, s)) => (part(r)?, part(s)?),
        None => (part(text)?, 1),
    };
    if s == 0 {
        return Err(Error::ZeroRationalDenominator);
    }
    Ok((r, s))
}

/// Text and JSON renderings of one result.
struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

impl Rendered {
    fn new(text: impl Into<String>, json: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Self {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn render_reports(reports: &[VerifyReport]) -> Rendered {
    let mut text = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{status} {} n={}..={} checked={} failures={}",
            r.theorem,
            r.range.0,
            r.range.1,
            r.checked,
            r.failures.len()
        );
        for f in &r.failures {
            let _ = writeln!(text, "  at {}: expected {}, got {}", f.at, f.expected, f.actual);
        }
        for n in &r.notes {
            let _ = writeln!(text, "  note: {n}");
        }
    }
    let mut out = Rendered::new(text, json!(reports));
    if reports.iter().any(|r| !r.passed()) {
        out.code = EXIT_VERIFY_FAILED;
    }
    out
}

fn execute(command: Command) -> Result<Rendered, Error> {
    Ok(match command {
        Command::Fusc { n } => Rendered::new(fusc(n).to_string(), json!({ "n": n, "fusc": fusc(n) })),
        Command::Fuscq { n } => {
            let p = fusc_q(n).to_string();
            Rendered::new(p.clone(), json!({ "n": n, "fusc_q": p }))
        }
        Command::Cw { n } => {
            let c = cw(n);
            Rendered::new(c.to_string(), json!({ "n": n, "cw": c }))
        }
        Command::Cwq { n } => {
            let c = cw_q(n).to_string();
            Rendered::new(c.clone(), json!({ "n": n, "cw_q": c }))
        }
        Command::Qrat { rational, via } => {
            let (r, s) = parse_rational(&rational)?;
            let v = match via {
                Via::Cf => qdeform(r, s)?,
                Via::Graph => qdeform_via_graph(r, s)?,
            }
            .to_string();
            let via = if via == Via::Cf { "cf" } else { "graph" };
            Rendered::new(v.clone(), json!({ "rational": format!("{r}/{s}"), "via": via, "value": v }))
        }
        Command::Cwindex { rational } => {
            let (r, s) = parse_rational(&rational)?;
            let n = cw_index(r, s)?.to_string();
            Rendered::new(n.clone(), json!({ "rational": format!("{r}/{s}"), "index": n }))
        }
        Command::Hyper {
            n,
            count,
            genfunc,
            stats,
            dot,
            ..
        } => {
            if count {
                Rendered::new(h_count(n).to_string(), json!({ "n": n, "count": h_count(n) }))
            } else if genfunc {
                let (q, rs, st) = (
                    h_q(n as i64).to_string(),
                    h_rs(n as i64).display_with("r", "s").to_string(),
                    hbar_st(n as i64).display_with("s", "t").to_string(),
                );
                Rendered::new(
                    format!("h_q: {q}\nH_rs: {rs}\nhbar_st: {st}"),
                    json!({ "n": n, "h_q": q, "h_rs": rs, "hbar_st": st }),
                )
            } else if stats {
                let recs = records(n);
                let mut text = String::from("digits ell p1 p2 t z s\n");
                for r in &recs {
                    let s: Vec<String> = r.s_vector.iter().map(u64::to_string).collect();
                    let _ = writeln!(
                        text,
                        "{} {} {} {} {} {} ({})",
                        r.digits,
                        r.ell,
                        r.p1,
                        r.p2,
                        r.t,
                        r.z,
                        s.join(",")
                    );
                }
                Rendered::new(text, json!({ "n": n, "expansions": recs }))
            } else if dot {
                let d = hasse_dot(n);
                Rendered::new(d.clone(), json!({ "n": n, "dot": d }))
            } else {
                let all: Vec<String> = enumerate(n).iter().map(ToString::to_string).collect();
                Rendered::new(lines(all.clone()), json!({ "n": n, "expansions": all }))
            }
        }
        Command::Fence { n, dot, ideals: show_ideals, rgf: show_rgf } => {
            let f = fence(n);
            if dot {
                let d = if show_ideals { ideals_dot(n) } else { f.to_dot() };
                Rendered::new(d.clone(), json!({ "n": n, "dot": d }))
            } else if show_rgf {
                let g = rgf(n).to_string();
                Rendered::new(g.clone(), json!({ "n": n, "rgf": g }))
            } else if show_ideals {
                let all: Vec<String> = ideals(&f).iter().map(|i| i.indicator(f.size())).collect();
                Rendered::new(lines(all.clone()), json!({ "n": n, "size": f.size(), "ideals": all }))
            } else {
                let covers = f.covers();
                let mut text = format!("size {}\n", f.size());
                text.push_str(&lines(covers.iter().map(|(lo, hi)| format!("x{lo} < x{hi}"))));
                Rendered::new(text, json!({ "n": n, "size": f.size(), "covers": covers }))
            }
        }
        Command::Matrix { n, prime } => {
            let rows = if prime { m_prime_of(n)?.rows() } else { m_of(n)?.rows() };
            let text = lines(rows.iter().map(|[a, b]| format!("[{a}, {b}]")));
            Rendered::new(text, json!({ "n": n, "prime": prime, "rows": rows }))
        }
        Command::Verify {
            theorem,
            max,
            threads,
            sequential,
        } => {
            let reports = if sequential {
                verify_sequential(theorem, max)
            } else {
                match threads {
                    Some(t) => with_threads(t, || verify(theorem, max)),
                    None => verify(theorem, max),
                }
            };
            render_reports(&reports)
        }
    })
}

/// Parses `argv` (program name first) and runs the chosen command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    let rendered = match execute(cli.command) {
        Ok(r) => r,
        Err(e) => return error_outcome(e),
    };
    let body = if cli.json {
        let mut s = serde_json::to_string_pretty(&rendered.json).expect("values serialize");
        s.push('\n');
        s
    } else {
        rendered.text
    };
    let mut outcome = match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome::ok(String::new()),
            Err(e) => return Outcome::fail(EXIT_IO, format!("error: cannot write {}: {e}", path.display())),
        },
        None => Outcome::ok(body),
    };
    outcome.code = rendered.code;
    outcome
}

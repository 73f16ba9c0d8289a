//! Sweeps that compute both sides of each identity independently and
//! collect every disagreement.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Error;
use crate::fence::{iso_check, weighted_rgf};
use crate::hyperbinary::{
    h_q, h_q_enumerated, h_q_table, h_rs_enumerated, h_rs_table, hbar_form_report, hbar_st_enumerated,
    hbar_st_table,
};
use crate::matrices::{entries_formula, m_of, m_prime_of};
use crate::poly::LaurentPoly;
use crate::qrational::{cf_expand, qdeform, qdeform_via_graph};
use crate::stern::{cw, cw_q};
use crate::sweep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// `[CW(n)]_q = q·CW_q(n)`.
    Qrat,
    /// `𝓓(n) ≅ 𝓙(𝓕(n))` via `s̃`.
    Mainbij,
    /// `h_q(n) = q^{r+s}·rgf_n(q⁻¹)`.
    Weightbij,
    /// `M(n)` entrywise from `h_q`.
    Mnent,
    /// Row sums of `M(n)`.
    Mnthm,
    /// Row sums of `M′(n)`.
    Mprime,
    /// `h_q` and `H_rs`, enumeration against recurrence.
    Hrs,
    /// Closure-set model against the continued-fraction model of `[r/s]_q`.
    Gg,
    /// `h̄_st` recurrence and its `s → q, t → q²` specialization.
    Hbar,
    All,
}

impl Theorem {
    pub const EACH: [Theorem; 9] = [
        Theorem::Qrat,
        Theorem::Mainbij,
        Theorem::Weightbij,
        Theorem::Mnent,
        Theorem::Mnthm,
        Theorem::Mprime,
        Theorem::Hrs,
        Theorem::Gg,
        Theorem::Hbar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Qrat => "qrat",
            Theorem::Mainbij => "mainbij",
            Theorem::Weightbij => "weightbij",
            Theorem::Mnent => "mnent",
            Theorem::Mnthm => "mnthm",
            Theorem::Mprime => "mprime",
            Theorem::Hrs => "hrs",
            Theorem::Gg => "gg",
            Theorem::Hbar => "hbar",
            Theorem::All => "all",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Theorem::EACH
            .iter()
            .chain([Theorem::All].iter())
            .find(|t| t.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub at: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub theorem: Theorem,
    pub range: (u64, u64),
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Parallel,
    Sequential,
}

fn map<T, F>(mode: Mode, max: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match mode {
        Mode::Parallel => sweep::map_range(1..=max, f),
        Mode::Sequential => sweep::map_range_seq(1..=max, f),
    }
}

fn compare<T: PartialEq + fmt::Display>(at: impl fmt::Display, expected: T, actual: T) -> Option<Failure> {
    (expected != actual).then(|| Failure {
        at: at.to_string(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    })
}

fn collect(results: Vec<Vec<Failure>>) -> Vec<Failure> {
    results.into_iter().flatten().collect()
}

/// One identity over `1 ≤ n ≤ max`: the checked count, failures, notes.
fn run(theorem: Theorem, max: u64, mode: Mode) -> (u64, Vec<Failure>, Vec<String>) {
    let q = LaurentPoly::q();
    let mut notes = Vec::new();
    let mut checked = max;
    let failures = match theorem {
        Theorem::Qrat => collect(map(mode, max, |n| {
            let c = cw(n);
            let (r, s) = (to_u64(c.num()), to_u64(c.den()));
            let lhs = qdeform(r, s).expect("nonzero denominator");
            compare(n, cw_q(n).scale(&q), lhs).into_iter().collect()
        })),
        Theorem::Mainbij => collect(map(mode, max, |n| {
            let rep = iso_check(n);
            match rep.counterexample {
                Some(msg) => vec![Failure {
                    at: n.to_string(),
                    expected: "isomorphism".into(),
                    actual: msg,
                }],
                None => vec![],
            }
        })),
        Theorem::Weightbij => {
            let table = h_q_table(max);
            collect(map(mode, max, |n| {
                compare(n, table[n as usize].clone(), weighted_rgf(n)).into_iter().collect()
            }))
        }
        Theorem::Mnent => collect(map(mode, max, |n| {
            let (want, got) = (m_of(n).expect("n >= 1"), entries_formula(n).expect("n >= 1"));
            compare(n, want.to_string().replace('\n', " "), got.to_string().replace('\n', " "))
                .into_iter()
                .collect()
        })),
        Theorem::Mnthm => {
            let table = h_q_table(max);
            collect(map(mode, max, |n| {
                let k = 63 - n.leading_zeros() as i64;
                let (top, bottom) = m_of(n).expect("n >= 1").row_sums();
                let expected = (table[n as usize - 1].shift(-k), table[n as usize].shift(-k - 1));
                compare(n, pair(expected), pair((top, bottom))).into_iter().collect()
            }))
        }
        Theorem::Mprime => {
            let table = h_rs_table(max);
            collect(map(mode, max, |n| {
                let (top, bottom) = m_prime_of(n).expect("n >= 1").row_sums();
                let expected = (table[n as usize - 1].clone(), table[n as usize].clone());
                compare(n, pair(expected), pair((top, bottom))).into_iter().collect()
            }))
        }
        Theorem::Hrs => {
            let (hq, hrs) = (h_q_table(max), h_rs_table(max));
            checked = max + 1;
            let mut out = compare_at_zero(&hq[0], &h_q_enumerated(0));
            out.extend(collect(map(mode, max, |n| {
                let i = n as usize;
                let mut v: Vec<Failure> = compare(format!("h_q {n}"), hq[i].clone(), h_q_enumerated(n))
                    .into_iter()
                    .collect();
                v.extend(compare(format!("H_rs {n}"), hrs[i].clone(), h_rs_enumerated(n)));
                v
            })));
            out
        }
        Theorem::Gg => {
            let results = map(mode, max, |n| {
                let c = cw(n);
                let (r, s) = (to_u64(c.num()), to_u64(c.den()));
                if !cf_expand(r, s).expect("s > 0").exceeds_one() {
                    return None;
                }
                let expected = qdeform(r, s).expect("s > 0");
                let actual = qdeform_via_graph(r, s).expect("r/s > 1");
                Some(compare(format!("{r}/{s}"), expected, actual))
            });
            checked = results.iter().filter(|r| r.is_some()).count() as u64;
            notes.push(format!(
                "covers every r/s > 1 among CW(1..={max}), {checked} values"
            ));
            results.into_iter().flatten().flatten().collect()
        }
        Theorem::Hbar => {
            let table = hbar_st_table(max);
            let out = collect(map(mode, max, |n| {
                let i = n as usize;
                let enumerated = hbar_st_enumerated(n);
                let mut v: Vec<Failure> = compare(format!("recurrence {n}"), enumerated.display_with("s", "t").to_string(), table[i].display_with("s", "t").to_string())
                    .into_iter()
                    .collect();
                v.extend(compare(format!("s->q t->q^2 {n}"), h_q(n as i64), table[i].specialize(1, 2)));
                v
            }));
            for d in hbar_form_report(max) {
                notes.push(format!(
                    "{}: {} of {} doubling steps disagree with enumeration{}",
                    d.reading.formula(),
                    d.failures,
                    d.checked,
                    d.first_failure.map(|n| format!(", first at n = {n}")).unwrap_or_default()
                ));
            }
            out
        }
        Theorem::All => unreachable!("expanded by verify"),
    };
    (checked, failures, notes)
}

fn compare_at_zero(a: &LaurentPoly, b: &LaurentPoly) -> Vec<Failure> {
    compare("h_q 0", a.clone(), b.clone()).into_iter().collect()
}

fn pair<T: fmt::Display>((a, b): (T, T)) -> String {
    format!("({a}, {b})")
}

fn to_u64(x: &num_bigint::BigUint) -> u64 {
    x.to_u64_digits().first().copied().unwrap_or(0)
}

fn verify_with(theorem: Theorem, max: u64, mode: Mode) -> Vec<VerifyReport> {
    let targets: Vec<Theorem> = match theorem {
        Theorem::All => Theorem::EACH.to_vec(),
        t => vec![t],
    };
    targets
        .into_iter()
        .map(|t| {
            let start = Instant::now();
            let (checked, failures, notes) = run(t, max, mode);
            VerifyReport {
                theorem: t,
                range: (1, max),
                checked,
                failures,
                notes,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// Checks `theorem` for `1 ≤ n ≤ max` (one report per identity for
/// [`Theorem::All`]). Uses the parallel sweep when that feature is enabled.
pub fn verify(theorem: Theorem, max: u64) -> Vec<VerifyReport> {
    verify_with(theorem, max, Mode::Parallel)
}

pub fn verify_sequential(theorem: Theorem, max: u64) -> Vec<VerifyReport> {
    verify_with(theorem, max, Mode::Sequential)
}

//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code together with what should be written to
//! stdout and stderr, so it can be driven in-process by tests.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cycles::{self, Cycle};
use crate::error::{Error, Result};
use crate::forms::{Base, Epsilon, FormedSpace};
use crate::orbits::{self, AdmissibleTableau};
use crate::theta;
use crate::verify::{self, Suite};

#[derive(Debug, Parser)]
#[command(name = "theta", version, about = "Nilpotent orbits, descent and theta lifts for classical dual pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// emit JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the nilpotent orbits of a formed space
    Orbits {
        #[arg(long)]
        space: String,
        #[command(flatten)]
        out: Output,
    },
    /// Generalized descent of an orbit of g′ to g
    Descend {
        #[arg(long)]
        orbit_prime: String,
        #[arg(long)]
        target_space: String,
        /// real-form descent (base R on both sides)
        #[arg(long)]
        real: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Theta lift of an orbit of g to g′
    Lift {
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        target_space: String,
        #[command(flatten)]
        out: Output,
    },
    /// Stabilizer of an orbit
    Stabilizer {
        #[arg(long)]
        orbit: String,
        #[command(flatten)]
        out: Output,
    },
    /// Whittaker grading data of an orbit
    Whittaker {
        #[arg(long)]
        orbit: String,
        #[command(flatten)]
        out: Output,
    },
    /// Stabilizer factorization for a descent pair
    PairFactor {
        #[arg(long)]
        orbit_prime: String,
        #[arg(long)]
        target_space: String,
        #[command(flatten)]
        out: Output,
    },
    /// Transport a cycle to the real forms of a lifted orbit
    CycleLift {
        /// complex orbit of g′ lying over the cycle's orbit
        #[arg(long)]
        orbit_prime: String,
        #[arg(long)]
        cycle: String,
        /// real form of V′
        #[arg(long)]
        target_space: String,
        #[command(flatten)]
        out: Output,
    },
    /// Convergent-range test for a pair
    Range {
        #[arg(long)]
        space: String,
        #[arg(long)]
        target_space: String,
        /// rational parameter, e.g. 1 or 3/2
        #[arg(long, default_value = "1")]
        nu: String,
        #[command(flatten)]
        out: Output,
    },
    /// Run oracle verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// largest dim V and dim V′, as `a,b`
        #[arg(long, default_value = "4,6")]
        max_dims: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(Error),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e)
        } else {
            Failure::Domain(e)
        }
    }
}

/// Reads `"-"` from stdin at most once.
struct Inputs {
    stdin: Option<String>,
}

impl Inputs {
    fn text(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin.is_none() {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            self.stdin = Some(buf);
        }
        Ok(self.stdin.clone().unwrap_or_default())
    }

    fn json<T: DeserializeOwned>(&mut self, arg: &str, what: &str) -> Result<T> {
        let s = self.text(arg)?;
        from_json(serde_json::from_str(&s), what)
    }

    fn space(&mut self, arg: &str) -> Result<FormedSpace> {
        self.json(arg, "formed space")
    }

    /// A tableau, or `{"space": …, "partition": […]}` for a complex space.
    fn orbit(&mut self, arg: &str) -> Result<AdmissibleTableau> {
        #[derive(Deserialize)]
        struct PartitionInput {
            space: FormedSpace,
            partition: Vec<u32>,
        }
        let value: Value = self.json(arg, "orbit")?;
        let tab = if value.get("partition").is_some() {
            let PartitionInput { space, partition } = from_json(serde_json::from_value(value), "orbit")?;
            if space.base() != Base::C {
                return Err(Error::Parse("partition shorthand needs a complex space".into()));
            }
            let tab = orbits::complex_orbit(space.epsilon(), &partition)?;
            if tab.space != space {
                return Err(Error::Parse(format!("partition sums to {}, space has dimension {}", tab.space.dim(), space.dim())));
            }
            tab
        } else {
            from_json(serde_json::from_value(value), "orbit")?
        };
        orbits::validate(&tab)?;
        Ok(tab)
    }
}

/// Formed spaces validate while deserializing; keep their error code.
fn from_json<T>(r: serde_json::Result<T>, what: &str) -> Result<T> {
    r.map_err(|e| {
        let msg = e.to_string();
        match msg.strip_prefix("invalid formed space: ") {
            Some(rest) => Error::InvalidSpace(rest.to_string()),
            None => Error::Parse(format!("{what}: {msg}")),
        }
    })
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut inputs = Inputs { stdin: None };
    match dispatch(cli.command, &mut inputs) {
        Ok((code, out)) => Outcome { code, stdout: out, stderr: String::new() },
        Err(f) => {
            let (code, e) = match f {
                Failure::Input(e) => (1, e),
                Failure::Domain(e) => (2, e),
            };
            let obj = serde_json::to_string(&e.to_object()).expect("error object serializes");
            Outcome { code, stdout: String::new(), stderr: obj + "\n" }
        }
    }
}

fn emit<T: Serialize>(json_mode: bool, value: &T, text: impl FnOnce() -> String) -> String {
    if json_mode {
        serde_json::to_string_pretty(value).expect("model serializes") + "\n"
    } else {
        text()
    }
}

/// Parse inputs; anything wrong here is malformed input.
fn input<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn dispatch(cmd: Command, inp: &mut Inputs) -> std::result::Result<(i32, String), Failure> {
    Ok(match cmd {
        Command::Orbits { space, out } => {
            let v = input(inp.space(&space))?;
            let list = orbits::enumerate_orbits(&v)?;
            let text = || {
                let mut s = format!("{} orbits in {v}\n", list.len());
                for t in &list {
                    s.push_str(&format!("\n{t}\n{}", t.render_ascii()));
                }
                s
            };
            (0, emit(out.json, &list, text))
        }
        Command::Descend { orbit_prime, target_space, real, out } => {
            let op = input(inp.orbit(&orbit_prime))?;
            let v = input(inp.space(&target_space))?;
            if real {
                let o = theta::k_descent(&op, &v)?;
                let text = || match &o {
                    Some(t) => side_by_side(&op, t),
                    None => format!("{op} has no real descent to {v}\n"),
                };
                (0, emit(out.json, &json!({ "source": &op, "target": &o }), text))
            } else {
                let dr = theta::generalized_descent(&op, &v)?;
                let text = || {
                    format!(
                        "{}\na = {}, b = {}, s = {}, strict = {}\nU = {}, U1 = {}, Ker T = {}\n",
                        side_by_side(&dr.source, &dr.target),
                        dr.a,
                        dr.b,
                        dr.s,
                        dr.strict,
                        dr.u,
                        dr.u1,
                        dr.kernel()
                    )
                };
                (0, emit(out.json, &dr, text))
            }
        }
        Command::Lift { orbit, target_space, out } => {
            let o = input(inp.orbit(&orbit))?;
            let vp = input(inp.space(&target_space))?;
            let l = theta::theta_lift(&o, &vp)?;
            (0, emit(out.json, &l, || side_by_side(&o, &l)))
        }
        Command::Stabilizer { orbit, out } => {
            let o = input(inp.orbit(&orbit))?;
            let g = orbits::stabilizer(&o)?;
            let value = json!({ "orbit": &o, "stabilizer": &g, "lie_dim": g.lie_dim() });
            (0, emit(out.json, &value, || format!("{o}\nstabilizer: {g}\ndimension: {}\n", g.lie_dim())))
        }
        Command::Whittaker { orbit, out } => {
            let o = input(inp.orbit(&orbit))?;
            let w = orbits::whittaker_datum(&o)?;
            let text = || {
                let grading: Vec<String> = w.grading.iter().map(|(j, d)| format!("{j}:{d}")).collect();
                format!(
                    "{o}\ngrading: {}\ndim u = {}, dim n = {}, dim g_-1 = {}, heisenberg = {}\nstabilizer: {}\n",
                    grading.join(" "),
                    w.dim_u,
                    w.dim_n,
                    w.dim_g_minus1,
                    w.heisenberg_case,
                    w.stabilizer
                )
            };
            (0, emit(out.json, &w, text))
        }
        Command::PairFactor { orbit_prime, target_space, out } => {
            let op = input(inp.orbit(&orbit_prime))?;
            let v = input(inp.space(&target_space))?;
            let dr = theta::generalized_descent(&op, &v)?;
            let pf = theta::pair_factorization(&dr);
            let (w_gamma, w0) = theta::reduced_pair_dims(&dr)?;
            let value = json!({ "factorization": &pf, "W_gamma": w_gamma, "W0": w0 });
            let text = || {
                let alpha: Vec<String> = pf.alpha.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
                format!(
                    "{}\nM_XX' = {}\nL = {} on {}\nL' = {} on {}\nalpha: [{}]\ndim W_gamma = {w_gamma}, dim W0 = {w0}\n",
                    side_by_side(&dr.source, &dr.target),
                    pf.m_xxp,
                    pf.l,
                    pf.l_space,
                    pf.lp,
                    pf.lp_space,
                    alpha.join(", ")
                )
            };
            (0, emit(out.json, &value, text))
        }
        Command::CycleLift { orbit_prime, cycle, target_space, out } => {
            let op = input(inp.orbit(&orbit_prime))?;
            let c: Cycle = input(inp.json(&cycle, "cycle"))?;
            let vp = input(inp.space(&target_space))?;
            let l = cycles::dlift_cycle(&c.complex_orbit.clone(), &op, &c, &vp)?;
            (0, emit(out.json, &l, || render_cycle(&l)))
        }
        Command::Range { space, target_space, nu, out } => {
            let v = input(inp.space(&space))?;
            let vp = input(inp.space(&target_space))?;
            let nu = input(crate::rational::parse(&nu))?;
            let r = cycles::range_report(&nu, &v, &vp)?;
            let text = || {
                format!(
                    "dim°V = {}\nexponent = {}\nthreshold = {}\nnu = {}\nin range: {}\n",
                    crate::rational::to_string(&r.dim_circ_v),
                    crate::rational::to_string(&r.exponent),
                    crate::rational::to_string(&r.threshold),
                    crate::rational::to_string(&r.nu),
                    r.in_range
                )
            };
            (0, emit(out.json, &r, text))
        }
        Command::Verify { suite, max_dims, seed, out } => {
            let suite: Suite = input(suite.parse())?;
            let (max_v, max_vp) = input(parse_dims(&max_dims))?;
            let cfg = verify::Config { max_v, max_vp, seed, ..Default::default() };
            let reports = verify::run(suite, &cfg);
            let all_pass = reports.iter().all(|r| r.passed());
            let value = json!({ "seed": seed, "max_dims": [max_v, max_vp], "reports": &reports, "all_pass": all_pass });
            let text = || {
                let mut s = String::new();
                for r in &reports {
                    s.push_str(&format!(
                        "{:<13} checked {:>6}  skipped {:>4}  failures {:>3}  {:>6} ms\n",
                        r.suite,
                        r.checked,
                        r.skipped,
                        r.failures.len(),
                        r.millis
                    ));
                    for f in &r.failures {
                        s.push_str(&format!("  FAIL {f}\n"));
                    }
                }
                s.push_str(if all_pass { "all pairs pass\n" } else { "verification failed\n" });
                s
            };
            (if all_pass { 0 } else { 2 }, emit(out.json, &value, text))
        }
    })
}

fn parse_dims(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::Parse(format!("--max-dims expects a,b; got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

/// Two tableaux side by side, source on the left.
pub fn side_by_side(left: &AdmissibleTableau, right: &AdmissibleTableau) -> String {
    let (ls, rs) = (left.render_ascii(), right.render_ascii());
    let l: Vec<&str> = ls.lines().collect();
    let r: Vec<&str> = rs.lines().collect();
    let width = l.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = format!("{:<width$}      {}\n", left.diagram_string(), right.diagram_string());
    for i in 0..l.len().max(r.len()) {
        let a = l.get(i).copied().unwrap_or("");
        let b = r.get(i).copied().unwrap_or("");
        let arrow = if i == 0 { "  ->  " } else { "      " };
        out.push_str(format!("{:<width$}{arrow}{b}", a).trim_end());
        out.push('\n');
    }
    out
}

fn render_cycle(c: &Cycle) -> String {
    let mut s = format!("cycle over {} in {}\n", c.complex_orbit.diagram_string(), c.real_space);
    if c.is_zero() {
        s.push_str("  0\n");
    }
    for (o, m) in c.terms() {
        s.push_str(&format!("  {m} · {o}\n"));
    }
    s
}

/// The complex partition shorthand accepted for orbits, for documentation
/// and tests.
pub fn partition_orbit_json(epsilon: Epsilon, partition: &[u32]) -> Value {
    let n: u32 = partition.iter().sum();
    json!({
        "space": FormedSpace::complex(epsilon, n).ok(),
        "partition": partition,
    })
}

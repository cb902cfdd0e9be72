//! Argument parsing and command execution.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use monopole_obstruct_core::engine::{TheoremId, Verdict};
use monopole_obstruct_core::lattice::{dirac_index, IntersectionLattice};
use monopole_obstruct_core::scenarios::{
    scenario_branched_cover, scenario_nonspin_family, scenario_spin_family,
};
use serde_json::{json, Value};

use crate::catalog::{render_table, run_catalog, seed_from_env};
use crate::doc::{ActionDoc, BaseDoc, BaseKind, HplusDoc, HypothesisDoc, InvolutionKind, RepsDoc};
use crate::report::{report_json, scenario_json};
use crate::run::{run_check, scenario_doc};
use crate::{CliError, EXIT_INPUT, EXIT_MISMATCH, EXIT_OBSTRUCTED};

#[derive(Debug, Parser)]
#[command(
    name = "monopole-obstruct",
    version,
    about = "Smoothability obstructions from Seiberg-Witten index data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank, signature, b+, b-, parity and the Dirac index of a lattice.
    Invariants {
        #[arg(long)]
        lattice: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "spin")]
        c2: Option<i64>,
        #[arg(long)]
        spin: bool,
    },
    /// Run one obstruction checker.
    Check(Box<CheckArgs>),
    /// Build one of the worked constructions and check it.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
    /// Run every catalogued example and print a table of verdicts.
    Catalog {
        /// Print the rows as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// donaldson, furuta, family-euler, spin-family, z2, even-involution, zp,
    /// zp-spin or ten-eighths-equivariant. Taken from the file when a
    /// previous report is passed with --json.
    theorem: Option<String>,
    /// Hypothesis document, or a previous report whose inputs_echo is
    /// reused. `-` reads standard input. Flags override its fields.
    #[arg(long)]
    json: Option<String>,
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    c2: Option<i64>,
    #[arg(long)]
    spin: bool,
    /// Whether the family is fibrewise spin (defaults to --spin).
    #[arg(long)]
    spin_family: Option<bool>,
    /// point, torus:N or rp:N.
    #[arg(long, value_parser = parse_base)]
    base: Option<BaseDoc>,
    /// A line summand of H+ over a torus, as comma-separated 0-based
    /// generator indices; repeat for each summand.
    #[arg(long = "line", allow_hyphen_values = true)]
    lines: Vec<String>,
    /// Rank of the trivial summand of H+.
    #[arg(long)]
    trivial: Option<u64>,
    /// Trivial summand rank over RP^n.
    #[arg(long)]
    u: Option<u64>,
    /// Tautological summand rank over RP^n.
    #[arg(long)]
    v: Option<u64>,
    /// Order of the acting group.
    #[arg(short, long)]
    p: Option<u32>,
    /// Eigenspace indices d_0,...,d_{p-1}, or a single total index.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    d: Option<Vec<i64>>,
    /// Eigenspace dimensions h_0,...,h_{p-1} of H+ ⊗ C.
    #[arg(long, value_delimiter = ',')]
    h: Option<Vec<u64>>,
    #[arg(long)]
    inv_dim: Option<u64>,
    /// even or odd.
    #[arg(long = "type", value_parser = parse_kind)]
    kind: Option<InvolutionKind>,
    #[arg(long)]
    b_plus: Option<u64>,
    #[arg(long, allow_negative_numbers = true)]
    sigma: Option<i64>,
    /// Multiplicities of H+ ⊗ C in R[Z_p].
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    hplus_rep: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    v_rep: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    vp_rep: Option<Vec<i64>>,
}

#[derive(Debug, Subcommand)]
enum ScenarioCommand {
    /// Z_p action on #g(p-1)(S²×S²) # 2bp(-E8) from a branched cover.
    BranchedCover {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        g: u64,
        #[arg(short)]
        b: u64,
    },
    /// Spin family of #a(S²×S²) # 2b(-E8) over T^{a-2}.
    SpinFamily {
        #[arg(short)]
        a: u64,
        #[arg(short)]
        b: u64,
    },
    /// Family of #a(S²×S²) # b(-CP²) # (-E8) # (-fake CP²) over T^a.
    NonspinFamily {
        #[arg(short)]
        a: u64,
        #[arg(short)]
        b: u64,
        /// Replace H+ by a trivial bundle.
        #[arg(long)]
        trivial_hplus: bool,
    },
}

fn parse_base(s: &str) -> Result<BaseDoc, String> {
    let (kind, dim) = match s.split_once(':') {
        Some((k, d)) => (
            k,
            d.parse::<u32>()
                .map_err(|e| format!("bad dimension {d:?}: {e}"))?,
        ),
        None => (s, 0),
    };
    let kind = match kind {
        "point" => BaseKind::Point,
        "torus" => BaseKind::Torus,
        "rp" => BaseKind::Rp,
        other => return Err(format!("unknown base {other:?}; expected point, torus:N or rp:N")),
    };
    Ok(BaseDoc { kind, dim })
}

fn parse_kind(s: &str) -> Result<InvolutionKind, String> {
    match s {
        "even" => Ok(InvolutionKind::Even),
        "odd" => Ok(InvolutionKind::Odd),
        other => Err(format!("expected even or odd, got {other:?}")),
    }
}

fn parse_line(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Input(format!("bad generator index {t:?} in --line {s:?}")))
        })
        .collect()
}

fn read_source(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// A hypothesis document, or a report whose `inputs_echo` and `theorem`
/// are reused.
pub fn load_document(text: &str) -> Result<(HypothesisDoc, Option<TheoremId>), CliError> {
    let value: Value = serde_json::from_str(text)?;
    match value.get("inputs_echo") {
        Some(echo) => {
            let doc = serde_json::from_value(echo.clone())?;
            let theorem = value
                .get("theorem")
                .and_then(Value::as_str)
                .and_then(TheoremId::parse);
            Ok((doc, theorem))
        }
        None => Ok((serde_json::from_value(value)?, None)),
    }
}

impl CheckArgs {
    fn into_request(self) -> Result<(TheoremId, HypothesisDoc), CliError> {
        let (mut doc, file_theorem) = match &self.json {
            Some(path) => load_document(&read_source(path)?)?,
            None => (HypothesisDoc::default(), None),
        };
        let theorem = match (&self.theorem, file_theorem) {
            (Some(t), _) => TheoremId::parse(t).ok_or_else(|| {
                let known: Vec<_> = TheoremId::ALL.iter().map(|t| t.as_str()).collect();
                CliError::Input(format!(
                    "unknown theorem {t:?}; expected one of {}",
                    known.join(", ")
                ))
            })?,
            (None, Some(t)) => t,
            (None, None) => return Err(CliError::Input("missing theorem id".into())),
        };
        if self.lattice.is_some() {
            doc.lattice = self.lattice;
        }
        if self.c2.is_some() {
            doc.c2 = self.c2;
        }
        if self.spin {
            doc.spin = Some(true);
        }
        if self.spin_family.is_some() {
            doc.spin_family = self.spin_family;
        }
        if self.base.is_some() {
            doc.base = self.base;
        }
        if !self.lines.is_empty() || self.trivial.is_some() {
            let lines = self
                .lines
                .iter()
                .map(|l| parse_line(l))
                .collect::<Result<_, _>>()?;
            doc.hplus = Some(HplusDoc::lines(lines, self.trivial.unwrap_or(0)));
        }
        if self.u.is_some() || self.v.is_some() {
            doc.hplus = Some(HplusDoc::split(self.u.unwrap_or(0), self.v.unwrap_or(0)));
        }
        let rep_flags = self.hplus_rep.is_some() || self.v_rep.is_some() || self.vp_rep.is_some();
        let action_flags = (self.p.is_some() && !rep_flags)
            || self.d.is_some()
            || self.h.is_some()
            || self.inv_dim.is_some()
            || self.kind.is_some();
        if action_flags {
            let default_p = match theorem {
                TheoremId::Z2 | TheoremId::EvenInvolution => Some(2),
                _ => None,
            };
            let mut a = doc.action.take().unwrap_or(ActionDoc {
                p: 0,
                d: vec![],
                h: None,
                inv_dim: 0,
                kind: None,
            });
            if let Some(p) = self.p.or(default_p.filter(|_| a.p == 0)) {
                a.p = p;
            }
            if a.p == 0 {
                return Err(CliError::Input("missing input: -p".into()));
            }
            if let Some(d) = self.d {
                a.d = d;
            }
            if self.h.is_some() {
                a.h = self.h;
            }
            if let Some(i) = self.inv_dim {
                a.inv_dim = i;
            }
            if self.kind.is_some() {
                a.kind = self.kind;
            }
            doc.action = Some(a);
        }
        if let (Some(hplus), Some(v), Some(vp)) = (&self.hplus_rep, &self.v_rep, &self.vp_rep) {
            let p = self
                .p
                .ok_or_else(|| CliError::Input("missing input: -p for the representations".into()))?;
            doc.reps = Some(RepsDoc {
                p,
                hplus: hplus.clone(),
                v: v.clone(),
                vp: vp.clone(),
            });
        } else if rep_flags {
            return Err(CliError::Input(
                "--hplus-rep, --v-rep and --vp-rep go together".into(),
            ));
        }
        if self.b_plus.is_some() {
            doc.b_plus = self.b_plus;
        }
        if self.sigma.is_some() {
            doc.sigma = self.sigma;
        }
        Ok((theorem, doc))
    }
}

/// Exit status for a verdict.
pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Obstructed => EXIT_OBSTRUCTED,
        Verdict::Consistent | Verdict::NotApplicable => 0,
    }
}

/// Runs a check and renders it with the normalized inputs.
pub fn check_json(theorem: TheoremId, doc: &HypothesisDoc) -> Result<(Verdict, Value), CliError> {
    let echo = doc.normalized()?;
    let report = run_check(theorem, &echo)?;
    Ok((report.verdict, report_json(&report, &echo)))
}

fn invariants_json(lattice: &str, c2: Option<i64>, spin: bool) -> Result<Value, CliError> {
    let l: IntersectionLattice = lattice.parse()?;
    let inv = l.invariants();
    let mut out = json!({
        "lattice": l.to_string(),
        "rank": inv.rank,
        "signature": inv.signature,
        "b_plus": inv.b_plus,
        "b_minus": inv.b_minus,
        "parity": inv.parity.to_string(),
    });
    let doc = HypothesisDoc {
        lattice: Some(lattice.into()),
        c2,
        spin: spin.then_some(true),
        ..Default::default()
    };
    let explicit = c2.is_some() || spin;
    match doc.spinc(&l) {
        Ok(s) => {
            out["c2"] = json!(s.c_squared);
            out["spin"] = json!(s.is_spin);
            out["d"] = json!(dirac_index(&l, &s)?);
        }
        Err(e) if explicit => return Err(e),
        Err(_) => {}
    }
    Ok(out)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let print = |out: &mut dyn Write, v: &Value| -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(v)?;
        writeln!(out, "{text}").map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })
    };
    match command {
        Command::Invariants { lattice, c2, spin } => {
            print(out, &invariants_json(&lattice, c2, spin)?)?;
            Ok(0)
        }
        Command::Check(args) => {
            let (theorem, doc) = (*args).into_request()?;
            let (verdict, value) = check_json(theorem, &doc)?;
            print(out, &value)?;
            Ok(exit_code(verdict))
        }
        Command::Scenario(sc) => {
            let s = match sc {
                ScenarioCommand::BranchedCover { p, g, b } => scenario_branched_cover(p, g, b)?,
                ScenarioCommand::SpinFamily { a, b } => scenario_spin_family(a, b)?,
                ScenarioCommand::NonspinFamily { a, b, trivial_hplus } => {
                    scenario_nonspin_family(a, b, trivial_hplus)?
                }
            };
            print(out, &scenario_json(&s, &scenario_doc(&s)))?;
            Ok(exit_code(s.report.verdict))
        }
        Command::Catalog { json } => {
            let rows = run_catalog(seed_from_env()?)?;
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "criterion": r.criterion,
                            "id": r.id,
                            "expected": r.expected,
                            "actual": r.actual,
                            "ok": r.ok,
                        })
                    })
                    .collect();
                print(out, &Value::Array(v))?;
            } else {
                write!(out, "{}", render_table(&rows)).map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })?;
            }
            Ok(if rows.iter().all(|r| r.ok) {
                0
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INPUT,
            };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("monopole-obstruct").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn json_out(args: &[&str]) -> (i32, Value) {
        let (code, out, err) = call(args);
        assert!(err.is_empty(), "{err}");
        (code, serde_json::from_str(&out).unwrap())
    }

    #[test]
    fn furuta_remark_example() {
        let (code, v) = json_out(&["check", "furuta", "--lattice", "2H+2E8m", "--spin"]);
        assert_eq!(code, EXIT_OBSTRUCTED);
        assert_eq!(v["verdict"], "obstructed");
        assert_eq!(v["theorem"], "furuta");
        assert_eq!(v["inputs_echo"]["lattice"], "2H+2E8m");
    }

    #[test]
    fn invariants_example() {
        let (code, v) = json_out(&["invariants", "--lattice", "3H+2E8m"]);
        assert_eq!(code, 0);
        assert_eq!(v["signature"], -16);
        assert_eq!(v["b_plus"], 3);
        assert_eq!(v["d"], 2);
        let (code, v) = json_out(&["invariants", "--lattice", "8D1m"]);
        assert_eq!(code, 0);
        assert!(v.get("d").is_none());
        let (code, v) = json_out(&["invariants", "--lattice", "8D1m", "--c2", "-8"]);
        assert_eq!(code, 0);
        assert_eq!(v["d"], 0);
    }

    #[test]
    fn input_errors_exit_one_with_positions() {
        let (code, _, err) = call(&["invariants", "--lattice", "2H+E9m"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("position"), "{err}");
        let (code, _, err) = call(&["check", "donaldson", "--lattice", "D1m", "--c2", "-2"]);
        assert_eq!(code, EXIT_INPUT, "{err}");
        let (code, _, _) = call(&["check", "zp", "-p", "4", "--d", "1,0,0,0"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _, _) = call(&["check", "nonsense"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _, _) = call(&["frobnicate"]);
        assert_eq!(code, EXIT_INPUT);
        let (code, _, _) = call(&["scenario", "branched-cover", "-p", "2", "-g", "5", "-b", "1"]);
        assert_eq!(code, EXIT_INPUT);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("catalog"));
    }

    #[test]
    fn checker_flags() {
        let (code, v) = json_out(&["check", "z2", "--d", "1,-3", "--h", "0,2", "--inv-dim", "0"]);
        assert_eq!(code, EXIT_OBSTRUCTED);
        assert_eq!(v["witness"]["sign"], "+");
        let (code, _) = json_out(&["check", "zp", "-p", "3", "--d", "-1,0,0", "--inv-dim", "0"]);
        assert_eq!(code, 0);
        let (code, _) = json_out(&[
            "check",
            "even-involution",
            "--sigma",
            "-16",
            "--inv-dim",
            "2",
            "--type",
            "even",
        ]);
        assert_eq!(code, EXIT_OBSTRUCTED);
        let (code, v) = json_out(&[
            "check",
            "family-euler",
            "--lattice",
            "H+D1m+E8m",
            "--c2",
            "-1",
            "--base",
            "torus:1",
            "--line",
            "0",
        ]);
        assert_eq!(code, EXIT_OBSTRUCTED);
        assert_eq!(v["witness"]["class"], "t1");
        let (code, v) = json_out(&[
            "check",
            "spin-family",
            "--lattice",
            "3H+2E8m",
            "--spin",
            "--base",
            "rp:3",
            "--u",
            "2",
            "--v",
            "1",
        ]);
        assert_eq!(code, EXIT_OBSTRUCTED, "{v}");
        let (code, v) = json_out(&[
            "check",
            "ten-eighths-equivariant",
            "-p",
            "3",
            "--hplus-rep",
            "2,0,0",
            "--v-rep",
            "0,1,1",
            "--vp-rep",
            "0,0,0",
        ]);
        assert_eq!(code, EXIT_OBSTRUCTED, "{v}");
        assert_eq!(v["witness"]["character"], 0);
        assert!(v["inputs_echo"].get("action").is_none());
        let (code, _) = json_out(&["check", "zp-spin", "-p", "3", "--d", "2,0,0", "--inv-dim", "2"]);
        assert_eq!(code, EXIT_OBSTRUCTED);
    }

    #[test]
    fn scenario_flags() {
        let (code, v) = json_out(&["scenario", "branched-cover", "-p", "3", "-g", "5", "-b", "1"]);
        assert_eq!(code, EXIT_OBSTRUCTED);
        let flags = v["scenario"]["flags"].as_array().unwrap();
        assert_eq!(flags.len(), 4);
        assert!(flags.iter().all(|f| f["value"] == true));
        assert_eq!(v["inputs_echo"]["lattice"], "10H+6E8m");
    }
}

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use n2sl2::algebra::{check_structure, spectral_flow, Algebra, Centrals, Mode, ModePoly};
use n2sl2::characters::character;
use n2sl2::diagram::extremal_diagram;
use n2sl2::fock::{verify_decomposition, Theorem};
use n2sl2::module::{format_monomial, relaxed_extremal_norm, Bigrade, Module, ModuleSpec};
use n2sl2::scalar::parse_rational;
use n2sl2::singular::{charged_lambda, detect_singular, reports_json, topological_h, Sign};
use n2sl2::string::{
    closure_violations, d_diagram, d_state, dress, dressing_dimension, liouville_exponent, StringRep,
};
use n2sl2::{suite, Error, RatFun};

#[derive(Parser)]
#[command(name = "n2sl2", version, about = "Exact computations with N=2 and affine sl(2) Verma-type modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    params: Params,
}

/// Numeric flags take exact rationals `p/q`, or `symbolic` for the
/// indeterminate `t`. `--h` also takes `sym:h-minus:r:s` and
/// `sym:h-plus:r:s`; `--Lambda` takes `sym:lambda-ch:p`.
#[derive(Args)]
struct Params {
    #[arg(long, global = true, default_value = "symbolic")]
    t: String,
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    l: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    j: Option<String>,
    #[arg(long = "Lambda", global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    k: Option<String>,
    /// Matter dimension for the string realization and Virasoro modules.
    #[arg(long, global = true, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Zero-mode eigenvalue of a scalar Fock module.
    #[arg(long, global = true, allow_hyphen_values = true)]
    momentum: Option<String>,
    #[arg(long, global = true, default_value_t = 0, allow_hyphen_values = true)]
    theta: i64,
    #[arg(long, global = true, default_value_t = 3)]
    max_level: i64,
    #[arg(long, global = true, default_value_t = 2)]
    charge_window: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Sl2Verma,
    Relaxed,
    Topological,
    Massive,
    Fock,
    Ghost,
    Virasoro,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    N2,
    Sl2,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Verma,
    Relaxed,
}

#[derive(Subcommand)]
enum Command {
    /// Antisymmetry, Jacobi and spectral-flow laws on random samples.
    AlgebraCheck {
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// PBW basis of one bigrade component.
    Basis {
        #[arg(long, value_enum)]
        module: Variant,
        #[arg(long, allow_hyphen_values = true)]
        charge: i64,
        #[arg(long)]
        level: i64,
    },
    /// Contravariant form of an sl(2) module on one bigrade component.
    Gram {
        #[arg(long, value_enum)]
        module: Variant,
        #[arg(long, allow_hyphen_values = true)]
        charge: i64,
        #[arg(long)]
        level: i64,
    },
    /// Norm of the level-0 relaxed extremal state of charge `n`.
    Norms {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// Singular vectors up to `--max-level` within the charge window.
    Singular {
        #[arg(long, value_enum)]
        module: Variant,
    },
    /// Spectral flow of a product of modes.
    Flow {
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        /// Space-separated modes, e.g. "L-1 G0".
        #[arg(long, allow_hyphen_values = true)]
        mode: String,
    },
    /// Extremal diagram of a module, or of the dressed string states.
    Diagram {
        #[arg(long, value_enum)]
        module: Option<Variant>,
        /// Draw the ghost-picture diagram of the dressed state instead.
        #[arg(long)]
        pictures: bool,
    },
    /// Bigraded character table.
    Char {
        #[arg(long, value_enum)]
        module: Variant,
    },
    /// Truncated check of a decomposition theorem.
    Equiv {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
    },
    /// Closure, dressing and picture labels of the string realization.
    StringVerify,
    /// Every verification criterion, one line each.
    Suite {
        #[arg(long)]
        only: Option<u32>,
    },
}

type Out = Result<(String, bool), Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => {
            // a closed pipe (`| head`) is not an error worth reporting
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            if !text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

impl Params {
    fn t(&self) -> Result<RatFun, Error> {
        let t = value(&self.t)?;
        if t.is_zero() {
            return Err(Error::InvalidModule("t = 0 is excluded".into()));
        }
        Ok(t)
    }

    fn get(&self, name: &str, v: &Option<String>) -> Result<RatFun, Error> {
        let s = v.as_deref().ok_or_else(|| Error::Parse(format!("--{name} is required")))?;
        match s.strip_prefix("sym:") {
            Some(rest) => self.locus(rest),
            None => value(s),
        }
    }

    fn locus(&self, rest: &str) -> Result<RatFun, Error> {
        let parts: Vec<&str> = rest.split(':').collect();
        let int = |s: &str| s.parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{s}`")));
        match parts.as_slice() {
            ["h-minus", r, s] => Ok(topological_h(Sign::Minus, int(r)?, int(s)?, &self.t()?)),
            ["h-plus", r, s] => Ok(topological_h(Sign::Plus, int(r)?, int(s)?, &self.t()?)),
            ["lambda-ch", p] => Ok(charged_lambda(int(p)?, &self.get("j", &self.j)?)),
            _ => Err(Error::Parse(format!("unknown locus `sym:{rest}`"))),
        }
    }

    fn spec(&self, variant: Variant) -> Result<ModuleSpec, Error> {
        let theta = self.theta;
        Ok(match variant {
            Variant::Sl2Verma => ModuleSpec::Sl2Verma {
                j: self.get("j", &self.j)?,
                k: self.level_k()?,
                theta,
            },
            Variant::Relaxed => ModuleSpec::Relaxed {
                j: self.get("j", &self.j)?,
                lambda: self.get("Lambda", &self.lambda)?,
                k: self.level_k()?,
                theta,
            },
            Variant::Topological => ModuleSpec::Topological {
                h: self.get("h", &self.h)?,
                t: self.t()?,
                theta,
            },
            Variant::Massive => ModuleSpec::Massive {
                h: self.get("h", &self.h)?,
                l: self.get("l", &self.l)?,
                t: self.t()?,
            },
            Variant::Fock => ModuleSpec::FockScalar {
                metric: RatFun::from_int(-1),
                momentum: self.get("momentum", &self.momentum)?,
            },
            Variant::Ghost => ModuleSpec::GhostFock { theta },
            Variant::Virasoro => {
                let t = self.t()?;
                ModuleSpec::VirasoroVerma {
                    delta: self.get("delta", &self.delta)?,
                    c_vir: RatFun::from_int(13) - RatFun::from_int(6) / &t - RatFun::from_int(6) * &t,
                }
            }
        })
    }

    /// `--k`, or `t - 2` when only `--t` is given.
    fn level_k(&self) -> Result<RatFun, Error> {
        match &self.k {
            Some(_) => self.get("k", &self.k),
            None => Ok(self.t()? - RatFun::from_int(2)),
        }
    }

    fn window(&self) -> (i64, i64) {
        (-self.charge_window, self.charge_window)
    }
}

fn value(s: &str) -> Result<RatFun, Error> {
    match s {
        "symbolic" | "t" => Ok(RatFun::t()),
        _ => Ok(RatFun::from_rational(parse_rational(s)?)),
    }
}

fn json(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn unsupported(f: Format) -> Error {
    let name = match f {
        Format::Text => "text",
        Format::Json => "json",
        Format::Dot => "dot",
        Format::Csv => "csv",
    };
    Error::Parse(format!("format `{name}` is not available for this command"))
}

fn run(cli: &Cli) -> Out {
    let p = &cli.params;
    let f = p.format;
    match &cli.command {
        Command::AlgebraCheck { samples } => {
            let report = check_structure(*samples, p.seed, &Centrals::generic())?;
            let ok = report.pass();
            let text = match f {
                Format::Json => json(&serde_json::json!({
                    "schema": "n2sl2.algebra-check/1",
                    "seed": p.seed,
                    "algebras": report.algebras,
                    "pass": ok,
                })),
                Format::Text => {
                    let mut s = String::new();
                    for a in &report.algebras {
                        let _ = writeln!(s, "{:?}: {} checks, {} violations", a.algebra, a.checks, a.violations.len());
                        for v in &a.violations {
                            let _ = writeln!(s, "  {v}");
                        }
                    }
                    s
                }
                _ => return Err(unsupported(f)),
            };
            Ok((text, ok))
        }
        Command::Basis { module, charge, level } => {
            let v = Module::new(p.spec(*module)?)?;
            let g = Bigrade::new(*charge, *level);
            let basis = v.build_basis(g);
            let text = match f {
                Format::Json => json(&serde_json::json!({
                    "schema": "n2sl2.basis/1",
                    "module": v.spec().name(),
                    "charge": charge,
                    "level": level,
                    "basis": basis.iter().map(|m| format_monomial(m)).collect::<Vec<_>>(),
                })),
                Format::Text => basis.iter().map(|m| format_monomial(m) + "\n").collect(),
                _ => return Err(unsupported(f)),
            };
            Ok((text, true))
        }
        Command::Gram { module, charge, level } => {
            let v = Module::new(p.spec(*module)?)?;
            let g = v.gram_matrix(Bigrade::new(*charge, *level))?;
            let text = match f {
                Format::Json => json(&g.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    for (m, row) in g.basis.iter().zip(&g.entries) {
                        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(s, "{}: [{}]", format_monomial(m), cells.join(", "));
                    }
                    s
                }
                _ => return Err(unsupported(f)),
            };
            Ok((text, g.is_symmetric()))
        }
        Command::Norms { n } => {
            let j = p.get("j", &p.j)?;
            let lambda = p.get("Lambda", &p.lambda)?;
            let norm = relaxed_extremal_norm(&j, &lambda, *n);
            let text = match f {
                Format::Json => json(&serde_json::json!({
                    "schema": "n2sl2.norm/1",
                    "j": j.to_json(),
                    "Lambda": lambda.to_json(),
                    "n": n,
                    "norm": norm.to_json(),
                })),
                Format::Text => norm.to_string(),
                _ => return Err(unsupported(f)),
            };
            Ok((text, true))
        }
        Command::Singular { module } => {
            let v = Module::new(p.spec(*module)?)?;
            let reports = detect_singular(&v, p.max_level, p.window())?;
            let ok = reports.iter().all(|r| r.verified);
            let text = match f {
                Format::Json => json(&reports_json(&reports)),
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        let tag = match (r.sign, r.r, r.s, r.p) {
                            (Some(sign), Some(a), Some(b), _) => {
                                format!("{}({a},{b})", if sign == Sign::Plus { "+" } else { "-" })
                            }
                            (_, _, _, Some(q)) => format!("p = {q}"),
                            _ => String::new(),
                        };
                        let _ = writeln!(
                            s,
                            "{:?} {tag} at ({}, {}) {}: {} [{}]",
                            r.kind,
                            r.charge,
                            r.level,
                            r.conditions,
                            state_text(&r.state),
                            if r.verified { "verified" } else { "NOT verified" }
                        );
                    }
                    if reports.is_empty() {
                        s.push_str("no singular vectors\n");
                    }
                    s
                }
                _ => return Err(unsupported(f)),
            };
            Ok((text, ok))
        }
        Command::Flow { algebra, mode } => {
            let alg = match algebra {
                AlgebraArg::N2 => Algebra::N2,
                AlgebraArg::Sl2 => Algebra::Sl2,
            };
            let word: Vec<Mode> = mode.split_whitespace().map(Mode::parse).collect::<Result<_, _>>()?;
            let cen = Centrals::for_t(&p.t()?);
            let out = spectral_flow(alg, p.theta, &ModePoly::word(word), &cen)?;
            let text = match f {
                Format::Json => json(&serde_json::json!({
                    "schema": "n2sl2.flow/1",
                    "theta": p.theta,
                    "input": mode,
                    "output": out.to_string(),
                })),
                Format::Text => out.to_string(),
                _ => return Err(unsupported(f)),
            };
            Ok((text, true))
        }
        Command::Diagram { module, pictures } => {
            let graph = if *pictures {
                d_diagram(&p.get("h", &p.h)?, &p.t()?, p.theta, (p.theta - p.charge_window, p.theta + p.charge_window))?
            } else {
                let variant = module.ok_or_else(|| Error::Parse("--module or --pictures is required".into()))?;
                extremal_diagram(&Module::new(p.spec(variant)?)?, p.window(), p.max_level)?
            };
            let text = match f {
                Format::Json => json(&graph.to_json()),
                Format::Dot => graph.to_dot(),
                Format::Text => {
                    let mut s = String::new();
                    for n in &graph.nodes {
                        let _ = writeln!(
                            s,
                            "charge {:>3} level {:>3} dim {}{} {}",
                            n.charge,
                            n.level,
                            n.dim,
                            if n.cusp { " cusp" } else { "" },
                            n.conditions.join(" ")
                        );
                    }
                    s
                }
                Format::Csv => return Err(unsupported(f)),
            };
            Ok((text, true))
        }
        Command::Char { module } => {
            let ch = character(&p.spec(*module)?, p.window(), p.max_level);
            let text = match f {
                Format::Json => json(&ch.to_json()),
                Format::Csv => ch.to_csv(),
                Format::Text => {
                    let mut s = String::from("level\\charge");
                    for c in p.window().0..=p.window().1 {
                        let _ = write!(s, " {c:>5}");
                    }
                    s.push('\n');
                    for l in 0..=p.max_level {
                        let _ = write!(s, "{l:>12}");
                        for c in p.window().0..=p.window().1 {
                            let _ = write!(s, " {:>5}", ch.get(&[c, l]));
                        }
                        s.push('\n');
                    }
                    s
                }
                Format::Dot => return Err(unsupported(f)),
            };
            Ok((text, true))
        }
        Command::Equiv { theorem } => {
            let (which, l) = match theorem {
                TheoremArg::Verma => (Theorem::Verma, None),
                TheoremArg::Relaxed => (Theorem::Relaxed, Some(p.get("l", &p.l)?)),
            };
            let reach = p.charge_window.max(1);
            let report = verify_decomposition(which, &p.get("h", &p.h)?, l.as_ref(), &p.t()?, (-reach, reach), p.max_level, p.charge_window)?;
            let text = match f {
                Format::Json => json(&report.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    for hw in &report.hw_found {
                        let _ = writeln!(
                            s,
                            "theta {:>2}: {} {} (J0_0 = {})",
                            hw.theta,
                            hw.conditions,
                            if hw.holds { "holds" } else { "FAILS" },
                            hw.j0
                        );
                    }
                    let agree = report.dims.iter().filter(|d| d.lhs == d.rhs).count();
                    let _ = writeln!(s, "dimension rows agreeing: {agree}/{}", report.dims.len());
                    for fail in &report.failures {
                        let _ = writeln!(s, "failure: {fail}");
                    }
                    let _ = writeln!(s, "{}", if report.pass { "PASS" } else { "FAIL" });
                    s
                }
                _ => return Err(unsupported(f)),
            };
            Ok((text, report.pass))
        }
        Command::StringVerify => string_verify(p),
        Command::Suite { only } => {
            let outcomes = match only {
                Some(id) if (1..=11).contains(id) => vec![suite::run(*id, p.seed)],
                Some(id) => return Err(Error::Parse(format!("no criterion {id}"))),
                None => suite::run_all(p.seed),
            };
            let ok = outcomes.iter().all(|o| o.pass);
            let text = match f {
                Format::Json => json(&serde_json::json!({
                    "schema": "n2sl2.suite/1",
                    "seed": p.seed,
                    "criteria": outcomes,
                    "pass": ok,
                })),
                Format::Text => {
                    let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
                    let passed = outcomes.iter().filter(|o| o.pass).count();
                    let _ = writeln!(s, "{passed}/{} passed", outcomes.len());
                    s
                }
                _ => return Err(unsupported(f)),
            };
            Ok((text, ok))
        }
    }
}

fn state_text(s: &n2sl2::module::State) -> String {
    s.terms()
        .map(|(m, c)| format!("({c}) {}", format_monomial(m)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn string_verify(p: &Params) -> Out {
    let t = p.t()?;
    let h = p.get("h", &p.h)?;
    let delta = match &p.delta {
        Some(_) => p.get("delta", &p.delta)?,
        None => dressing_dimension(&h, &t),
    };
    let level = p.max_level.min(2);
    let rep = StringRep::new(&t, &liouville_exponent(&h, &t, p.theta), &delta)?;
    let states = rep.states_up_to(level, (-2, 2));
    let closure = closure_violations(&rep, &states, 2)?;
    let dressed = dress(&delta, &h, &t, p.theta)?;
    let window = (p.theta - p.charge_window, p.theta + p.charge_window);
    let labels: Vec<_> = (window.0..=window.1).map(|a| d_state(&h, &t, p.theta, a)).collect();
    let top_ok = delta != dressing_dimension(&h, &t) || dressed.topological;
    let ok = closure.is_empty() && dressed.massive && dressed.eigenvalues_match && top_ok;
    let text = match p.format {
        Format::Json => json(&serde_json::json!({
            "schema": "n2sl2.string/1",
            "closure": {"states": states.len(), "max_level": level, "violations": closure},
            "dressed": dressed.to_json(),
            "labels": labels.iter().map(|l| l.to_json(Some(l.theta))).collect::<Vec<_>>(),
            "pass": ok,
        })),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "closure on {} states up to level {level}: {} violations", states.len(), closure.len());
            for v in closure.iter().take(5) {
                let _ = writeln!(s, "  {v}");
            }
            let _ = writeln!(
                s,
                "dressed state: label ({}, {}, {}; {}), massive {}, topological {}, eigenvalues {}",
                dressed.label.h,
                dressed.label.l,
                dressed.label.t,
                dressed.label.theta,
                dressed.massive,
                dressed.topological,
                if dressed.eigenvalues_match { "match" } else { "DIFFER" }
            );
            for l in &labels {
                let _ = writeln!(s, "D(alpha = {}): ({}, {}, {}; {})", l.theta, l.h, l.l, l.t, l.theta);
            }
            let _ = writeln!(s, "{}", if ok { "PASS" } else { "FAIL" });
            s
        }
        _ => return Err(unsupported(p.format)),
    };
    Ok((text, ok))
}

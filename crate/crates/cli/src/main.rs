use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use tensorfield::dynamics::{noether_densities, PlaneWaveMode};
use tensorfield::limits::{massless_report, rest_limit_report, LimitClassification};
use tensorfield::polarization::{closed_form_u, polarization, NormScheme, PolarizationState};
use tensorfield::strengths::{closed_form_notoph, mode_strengths, notoph_ratio, notoph_tensor, EnergySign, Phases};
use tensorfield::suite::{run_suite, SuiteConfig};
use tensorfield::{Momentum, Status, DEFAULT_TOL};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tensorfield",
    version,
    about = "Spin-1 antisymmetric tensor field verification suite"
)]
struct Cli {
    /// Emit a single JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to a file instead of stdout
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check over seeded random momenta
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value = "unit")]
        norm: NormScheme,
        /// Conjugation phase applied to every mode
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phase: f64,
    },
    /// Polarization vector u(p, sigma) and its closed form
    Polarization(ModeArgs),
    /// Electric and magnetic amplitudes for both energy signs
    Strengths {
        #[command(flatten)]
        mode: ModeArgs,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phase: f64,
    },
    /// Antisymmetrized product of the transverse vectors
    Notoph(KinematicArgs),
    /// Massless-limit classification of u, E and B
    Limit {
        #[arg(long, value_parser = parse_three, allow_hyphen_values = true)]
        p: [f64; 3],
        #[arg(long, allow_hyphen_values = true)]
        sigma: PolarizationState,
        #[arg(long, default_value = "mass")]
        norm: NormScheme,
    },
    /// Noether densities, spin vector and helicity projection
    Spin(ModeArgs),
}

#[derive(Args)]
struct KinematicArgs {
    #[arg(long, value_parser = parse_three, allow_hyphen_values = true)]
    p: [f64; 3],
    #[arg(long, allow_hyphen_values = true)]
    m: f64,
    #[arg(long, default_value = "unit")]
    norm: NormScheme,
}

#[derive(Args)]
struct ModeArgs {
    #[command(flatten)]
    kin: KinematicArgs,
    #[arg(long, allow_hyphen_values = true)]
    sigma: PolarizationState,
}

fn parse_three(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got {s:?}"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part.parse().map_err(|_| format!("not a number: {part:?}"))?;
    }
    Ok(out)
}

enum Failure {
    Domain(tensorfield::Error),
    Io(std::io::Error),
}

impl From<tensorfield::Error> for Failure {
    fn from(e: tensorfield::Error) -> Self {
        Failure::Domain(e)
    }
}

struct Output {
    body: String,
    ok: bool,
}

fn cj(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn ct(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

fn vec_json(v: &[Complex64]) -> Value {
    Value::Array(v.iter().map(|z| cj(*z)).collect())
}

fn vec_text(v: &[Complex64]) -> String {
    format!("({})", v.iter().map(|z| ct(*z)).collect::<Vec<_>>().join(", "))
}

fn matrix_json(m: &[[Complex64; 4]; 4]) -> Value {
    Value::Array(m.iter().map(|row| vec_json(row)).collect())
}

fn matrix_text(m: &[[Complex64; 4]; 4]) -> String {
    m.iter().map(|row| format!("  {}\n", vec_text(row))).collect()
}

fn momentum_json(p: &Momentum) -> Value {
    json!({ "p": p.p(), "m": p.mass(), "energy": p.energy() })
}

fn header(p: &Momentum) -> String {
    let [a, b, c] = p.p();
    format!("p = ({a}, {b}, {c}), m = {}, E = {}\n", p.mass(), p.energy())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn verify(cfg: SuiteConfig, as_json: bool) -> Result<Output, Failure> {
    let report = run_suite(&cfg)?;
    let body = if as_json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for c in &report.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            if c.status == Status::Info {
                let _ = writeln!(s, "[{tag}] {}: {}", c.id, c.details);
            } else {
                let _ = writeln!(
                    s,
                    "[{tag}] {}: error {:e} (tol {:e})",
                    c.id, c.max_abs_error, c.tolerance
                );
            }
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} info",
            report.summary.pass, report.summary.fail, report.summary.info
        );
        s
    };
    Ok(Output {
        body,
        ok: report.all_passed(),
    })
}

fn polarization_cmd(a: &ModeArgs, as_json: bool) -> Result<Output, Failure> {
    let p = Momentum::new(a.kin.p, a.kin.m)?;
    let u = polarization(&p, a.sigma, a.kin.norm)?;
    let closed = closed_form_u(&p, a.sigma, a.kin.norm)?;
    let body = if as_json {
        pretty(&json!({
            "momentum": momentum_json(&p),
            "sigma": a.sigma,
            "norm": a.kin.norm,
            "u": vec_json(&u.0),
            "closed_form": vec_json(&closed.0),
            "max_abs_diff": u.max_abs_diff(&closed),
        }))
    } else {
        format!(
            "{}sigma = {}, N = {}\nu           = {}\nclosed form = {}\nmax |diff|  = {:e}\n",
            header(&p),
            a.sigma,
            a.kin.norm.label(),
            vec_text(&u.0),
            vec_text(&closed.0),
            u.max_abs_diff(&closed)
        )
    };
    Ok(Output { body, ok: true })
}

fn strengths_cmd(a: &ModeArgs, phase: f64, as_json: bool) -> Result<Output, Failure> {
    let p = Momentum::new(a.kin.p, a.kin.m)?;
    let phases = Phases::uniform(phase);
    let mut entries = Vec::new();
    let mut text = format!(
        "{}sigma = {}, N = {}, phase = {phase}\n",
        header(&p),
        a.sigma,
        a.kin.norm.label()
    );
    for sign in EnergySign::BOTH {
        let eb = mode_strengths(&p, a.sigma, a.kin.norm, sign, &phases)?;
        entries.push(json!({ "sign": sign.to_string(), "E": vec_json(&eb.e), "B": vec_json(&eb.b) }));
        let _ = writeln!(text, "E({sign}) = {}\nB({sign}) = {}", vec_text(&eb.e), vec_text(&eb.b));
    }
    let body = if as_json {
        pretty(&json!({
            "momentum": momentum_json(&p),
            "sigma": a.sigma,
            "norm": a.kin.norm,
            "phase": phase,
            "strengths": entries,
        }))
    } else {
        text
    };
    Ok(Output { body, ok: true })
}

fn notoph_cmd(a: &KinematicArgs, as_json: bool) -> Result<Output, Failure> {
    let p = Momentum::new(a.p, a.m)?;
    let built = notoph_tensor(&p, a.norm)?;
    let closed = closed_form_notoph(&p, a.norm)?;
    let (ratio, resid) = notoph_ratio(&p, a.norm)?;
    let body = if as_json {
        pretty(&json!({
            "momentum": momentum_json(&p),
            "norm": a.norm,
            "tensor": matrix_json(&built.components()),
            "closed_form": matrix_json(&closed.components()),
            "ratio": cj(ratio),
            "relative_residual": resid,
        }))
    } else {
        format!(
            "{}N = {}\nconstructed:\n{}closed form:\n{}constructed / closed form = {}\nrelative residual = {:e}\n",
            header(&p),
            a.norm.label(),
            matrix_text(&built.components()),
            matrix_text(&closed.components()),
            ct(ratio),
            resid
        )
    };
    Ok(Output { body, ok: true })
}

fn classification_json(c: &LimitClassification) -> Value {
    json!({ "verdict": c.verdict, "order": c.order, "value": cj(c.value) })
}

fn classification_text(name: &str, c: &LimitClassification) -> String {
    let order = c.order.map_or("-".to_string(), |o| format!("{o:.4}"));
    format!("{name:<6} {:<17} {order:>8}  {}\n", c.verdict.label(), ct(c.value))
}

fn limit_cmd(p: [f64; 3], sigma: PolarizationState, norm: NormScheme, as_json: bool) -> Result<Output, Failure> {
    let r = massless_report(p, sigma, norm)?;
    let is_z = p[0] == 0.0 && p[1] == 0.0;
    let rest = if is_z {
        Some(rest_limit_report(sigma, norm)?)
    } else {
        None
    };
    let names_u = ["u0", "u1", "u2", "u3"];
    let names_3 = ["1", "2", "3"];
    let body = if as_json {
        let rows = |prefix: &str, cs: &[LimitClassification], names: &[&str]| -> Value {
            Value::Object(
                cs.iter()
                    .zip(names)
                    .map(|(c, n)| (format!("{prefix}{n}"), classification_json(c)))
                    .collect(),
            )
        };
        pretty(&json!({
            "p": p,
            "sigma": sigma,
            "norm": norm,
            "u": rows("", &r.u, &names_u),
            "E": rows("E", &r.e, &names_3),
            "B": rows("B", &r.b, &names_3),
            "rest_limit": rest.as_ref().map(classification_json),
        }))
    } else {
        let mut s = format!(
            "m -> 0 at p = ({}, {}, {}), sigma = {sigma}, N = {}\n{:<6} {:<17} {:>8}  value at smallest m\n",
            p[0],
            p[1],
            p[2],
            norm.label(),
            "comp",
            "verdict",
            "order"
        );
        for (c, n) in r.u.iter().zip(names_u) {
            s.push_str(&classification_text(n, c));
        }
        for (c, n) in r.e.iter().zip(names_3) {
            s.push_str(&classification_text(&format!("E{n}"), c));
        }
        for (c, n) in r.b.iter().zip(names_3) {
            s.push_str(&classification_text(&format!("B{n}"), c));
        }
        if let Some(c) = rest {
            s.push_str("then p3 -> 0:\n");
            s.push_str(&classification_text("|u|", &c));
        }
        s
    };
    Ok(Output { body, ok: true })
}

fn spin_cmd(a: &ModeArgs, as_json: bool) -> Result<Output, Failure> {
    let p = Momentum::new(a.kin.p, a.kin.m)?;
    let mode = PlaneWaveMode::new(&p, a.sigma, a.kin.norm)?;
    let d = noether_densities(&mode);
    let body = if as_json {
        pretty(&json!({
            "momentum": momentum_json(&p),
            "sigma": a.sigma,
            "norm": a.kin.norm,
            "lagrangian": cj(d.lagrangian),
            "theta": matrix_json(&d.theta),
            "angular_momentum": matrix_json(&d.angular.lower),
            "pauli_lubanski": vec_json(&d.pauli_lubanski.0),
            "spin": vec_json(&d.spin),
            "helicity_projection": d.helicity.map(cj),
        }))
    } else {
        format!(
            "{}sigma = {}, N = {}\nL        = {}\nTheta^00 = {}\nJ_(kappa tau):\n{}W^mu     = {}\nspin     = {}\nW.n      = {}\n",
            header(&p),
            a.sigma,
            a.kin.norm.label(),
            ct(d.lagrangian),
            ct(d.theta[0][0]),
            matrix_text(&d.angular.lower),
            vec_text(&d.pauli_lubanski.0),
            vec_text(&d.spin),
            d.helicity.map_or("undefined at rest".to_string(), ct)
        )
    };
    Ok(Output { body, ok: true })
}

/// Writes through a sibling temporary file so readers never see a partial document.
fn write_atomic(path: &Path, body: &str) -> std::io::Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, body)?;
    std::fs::rename(&tmp, path)
}

fn emit(out: &Output, path: Option<&Path>) -> std::io::Result<()> {
    match path {
        Some(p) => write_atomic(p, &out.body),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(out.body.as_bytes())?;
            stdout.flush()
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Verify {
            seed,
            tol,
            samples,
            norm,
            phase,
        } => verify(
            SuiteConfig {
                seed: *seed,
                tol: *tol,
                samples: *samples,
                norm: *norm,
                phases: Phases::uniform(*phase),
            },
            cli.json,
        ),
        Command::Polarization(a) => polarization_cmd(a, cli.json),
        Command::Strengths { mode, phase } => strengths_cmd(mode, *phase, cli.json),
        Command::Notoph(a) => notoph_cmd(a, cli.json),
        Command::Limit { p, sigma, norm } => limit_cmd(*p, *sigma, *norm, cli.json),
        Command::Spin(a) => spin_cmd(a, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = run(&cli).and_then(|out| emit(&out, cli.output.as_deref()).map(|_| out).map_err(Failure::Io));
    match result {
        Ok(out) if out.ok => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Io(e)) => {
            eprintln!("I/O error: {e}");
            ExitCode::from(EXIT_IO)
        }
    }
}

//! Command-line front end. `main.rs` only parses arguments and calls [`execute`].

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{parse_ring_elem, Rational, Var};
use crate::gauss_manin::{
    build_a, build_b, group_act, rational_to_strings, tau_locus_constants, ConnectionMatrix,
    GroupElement, RatMat3, CURVATURE_SIGN,
};
use crate::jacobi_series::{
    eisenstein, j1_series, normalized_tuple, pinned_signs, QSeries, SeriesName, Signs,
};
use crate::vector_fields::{
    lie_bracket, serre_derivative, serre_jacobi, solve_modular, GradedPoly, QuasiModular,
};
use crate::verify::{run_verify, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "jacobi-gmd", version, about = "Gauss-Manin connection, modular vector fields and quasi Jacobi q-expansions")]
pub struct Cli {
    /// Truncation order N for q-expansions.
    #[arg(long, global = true, env = "JACOBI_GMD_ORDER", default_value_t = 20)]
    pub order: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Omega,
    Alpha,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesArg {
    #[value(name = "E2")]
    E2,
    #[value(name = "E4")]
    E4,
    #[value(name = "E6")]
    E6,
    #[value(name = "J1")]
    J1,
    #[value(name = "wp")]
    Wp,
    #[value(name = "wp_prime")]
    WpPrime,
    #[value(name = "tuple")]
    Tuple,
}

impl From<SeriesArg> for SeriesName {
    fn from(s: SeriesArg) -> SeriesName {
        match s {
            SeriesArg::E2 => SeriesName::E2,
            SeriesArg::E4 => SeriesName::E4,
            SeriesArg::E6 => SeriesName::E6,
            SeriesArg::J1 => SeriesName::J1,
            SeriesArg::Wp => SeriesName::Wp,
            SeriesArg::WpPrime => SeriesName::WpPrime,
            SeriesArg::Tuple => SeriesName::Tuple,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gauss-Manin connection matrix.
    Gm {
        #[arg(long, value_enum)]
        basis: Basis,
    },
    /// Solve for R_tau and R_z from the tau-locus constants.
    Fields,
    /// Lie bracket [R_tau, R_z].
    Bracket,
    /// q-expansion of a generator.
    Series {
        #[arg(value_enum)]
        name: SeriesArg,
    },
    /// Group action t.g on a point.
    Act {
        /// Comma-separated a,b,c,t1,t2; rationals such as 1/2 allowed.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        #[arg(long = "k-prime", default_value = "0", allow_hyphen_values = true)]
        k_prime: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        v: String,
    },
    /// Serre derivative (or Serre-Jacobi with --jacobi) of an expression.
    Serre {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        jacobi: bool,
    },
    /// Constant connection matrices along the tau-locus.
    TauLocus,
    /// Run every check; exit 1 on the first failure.
    Verify,
}

/// Rendered output and exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { output, code: EXIT_OK }
    }

    fn invalid(msg: impl std::fmt::Display) -> Outcome {
        Outcome { output: format!("error: {msg}\n"), code: EXIT_INVALID_INPUT }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    t.parse::<Rational>().map_err(|_| format!("not a rational number: {t:?}"))
}

pub fn execute(cli: &Cli) -> Outcome {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Gm { basis } => Outcome::ok(run_gm(*basis, json)),
        Command::Fields => run_fields(json),
        Command::Bracket => Outcome::ok(run_bracket(json)),
        Command::Series { name } => run_series((*name).into(), cli.order, json),
        Command::Act { point, k, k_prime, v } => run_act(point, k, k_prime, v, json),
        Command::Serre { expr, jacobi } => run_serre(expr, *jacobi, json),
        Command::TauLocus => Outcome::ok(run_tau_locus(json)),
        Command::Verify => match run_verify(cli.order) {
            Ok(report) => render_verify(&report, json),
            Err(e) => Outcome { output: format!("error: {e}\n"), code: EXIT_VERIFY_FAILED },
        },
    }
}

pub fn run_gm(basis: Basis, json: bool) -> String {
    let (label, m) = match basis {
        Basis::Omega => ("omega", build_b()),
        Basis::Alpha => ("alpha", build_a()),
    };
    if json {
        to_json(&m)
    } else {
        connection_text(label, &m)
    }
}

fn connection_text(label: &str, m: &ConnectionMatrix) -> String {
    let mut s = format!("Gauss-Manin matrix, {label} frame (flat with sign {CURVATURE_SIGN:+})\n");
    for v in Var::ALL {
        let c = m.coeff(v);
        if c.is_zero() {
            let _ = writeln!(s, "d{v}: 0");
        } else {
            let _ = write!(s, "d{v}:\n{c}");
        }
    }
    s
}

fn run_fields(json: bool) -> Outcome {
    let (ct, cz) = tau_locus_constants();
    let (rt, rz) = match (solve_modular(&ct), solve_modular(&cz)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome { output: format!("error: {e}\n"), code: EXIT_VERIFY_FAILED },
    };
    if json {
        Outcome::ok(to_json(&json!({ "R_tau": rt, "R_z": rz })))
    } else {
        Outcome::ok(format!("R_tau = {}\nR_z = {}\n", rt.to_text(), rz.to_text()))
    }
}

fn run_bracket(json: bool) -> String {
    let (ct, cz) = tau_locus_constants();
    let rt = solve_modular(&ct).expect("C_tau is solvable");
    let rz = solve_modular(&cz).expect("C_z is solvable");
    let b = lie_bracket(&rt, &rz);
    if json {
        to_json(&json!({ "bracket": b, "is_zero": b.is_zero() }))
    } else {
        format!("[R_tau, R_z] = {}\n", b.to_text())
    }
}

fn series_json(s: &QSeries) -> Value {
    json!({ "weight": s.weight(), "order": s.order(), "coeffs": s.coeffs() })
}

fn signs_json(s: &Signs) -> Value {
    serde_json::to_value(s).expect("serializable")
}

pub fn run_series(name: SeriesName, order: usize, json: bool) -> Outcome {
    let single = |s: QSeries, label: &str, signs: Option<Signs>| {
        if json {
            let mut v = series_json(&s);
            v["name"] = json!(label);
            if let Some(sg) = signs {
                v["signs"] = signs_json(&sg);
            }
            to_json(&v)
        } else {
            let head = signs.map(|sg| format!("{label} ({sg})\n")).unwrap_or(format!("{label}\n"));
            format!("{head}{s}")
        }
    };
    let e = |k| eisenstein(k, order).expect("supported weight");
    let out = match name {
        SeriesName::E2 => single(e(2), "E2", None),
        SeriesName::E4 => single(e(4), "E4", None),
        SeriesName::E6 => single(e(6), "E6", None),
        SeriesName::J1 => single(j1_series(order), "J1", None),
        SeriesName::Wp | SeriesName::WpPrime | SeriesName::Tuple => {
            let tup = match normalized_tuple(order) {
                Ok(t) => t,
                Err(e) => return Outcome { output: format!("error: {e}\n"), code: EXIT_VERIFY_FAILED },
            };
            let signs = pinned_signs().ok();
            match name {
                SeriesName::Wp => single(tup.a, "wp", signs),
                SeriesName::WpPrime => single(tup.b, "wp_prime", signs),
                _ if json => {
                    let mut v = json!({ "name": "tuple", "order": order, "signs": signs_json(&tup.signs) });
                    for (k, s) in [("a", &tup.a), ("b", &tup.b), ("c", &tup.c), ("t1", &tup.t1), ("t2", &tup.t2), ("t3", &tup.t3)] {
                        v[k] = series_json(s);
                    }
                    to_json(&v)
                }
                _ => {
                    let mut s = format!("normalized tuple ({})\n", tup.signs);
                    for (k, x) in [("a", &tup.a), ("b", &tup.b), ("c", &tup.c), ("t1", &tup.t1), ("t2", &tup.t2), ("t3", &tup.t3)] {
                        let _ = write!(s, "[{k}] {x}");
                    }
                    s
                }
            }
        }
    };
    Outcome::ok(out)
}

fn run_act(point: &str, k: &str, k_prime: &str, v: &str, json: bool) -> Outcome {
    let parts: Result<Vec<Rational>, String> = point.split(',').map(parse_rational).collect();
    let parts = match parts {
        Ok(p) if p.len() == 5 => p,
        Ok(p) => return Outcome::invalid(format!("expected 5 coordinates a,b,c,t1,t2, got {}", p.len())),
        Err(e) => return Outcome::invalid(e),
    };
    let t: [Rational; 5] = parts.try_into().expect("length checked");
    let g = match (parse_rational(k), parse_rational(k_prime), parse_rational(v)) {
        (Ok(k), Ok(kp), Ok(v)) => match GroupElement::new(k, kp, v) {
            Ok(g) => g,
            Err(e) => return Outcome::invalid(e),
        },
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return Outcome::invalid(e),
    };
    match group_act(&t, &g) {
        Ok(r) => {
            let strs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            if json {
                let input: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                Outcome::ok(to_json(&json!({ "point": input, "g": g, "result": strs })))
            } else {
                Outcome::ok(format!("(a, b, c, t1, t2) = ({})\n", strs.join(", ")))
            }
        }
        Err(e) => Outcome::invalid(e),
    }
}

fn run_serre(expr: &str, jacobi: bool, json: bool) -> Outcome {
    let value = match parse_ring_elem(expr) {
        Ok(v) => v,
        Err(e) => return Outcome::invalid(e),
    };
    let f = match GradedPoly::new(value) {
        Ok(f) => f,
        Err(e) => return Outcome::invalid(e),
    };
    let (kind, out) = if jacobi {
        ("serre_jacobi", serre_jacobi(&f))
    } else {
        match serre_derivative(&f) {
            Ok(g) => ("serre", g),
            Err(e) => return Outcome::invalid(e),
        }
    };
    if json {
        return Outcome::ok(to_json(&json!({ "kind": kind, "input": f, "output": out })));
    }
    let shown = if jacobi {
        out.value.to_string()
    } else {
        QuasiModular::from_ring_elem(&out.value).map_or(out.value.to_string(), |q| q.to_string())
    };
    Outcome::ok(format!("{shown}\nweight {} (t1-degree {}, c-degree {})\n", out.weight, out.t1_depth, out.c_depth))
}

fn run_tau_locus(json: bool) -> String {
    let (ct, cz) = tau_locus_constants();
    if json {
        return to_json(&json!({ "C_tau": rational_to_strings(&ct), "C_z": rational_to_strings(&cz) }));
    }
    let show = |m: &RatMat3| {
        m.iter()
            .map(|r| r.iter().map(|x| format!("{x:>3}")).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    format!("C_tau =\n{}\nC_z =\n{}\n", show(&ct), show(&cz))
}

pub fn render_verify(r: &VerifyReport, json: bool) -> Outcome {
    let code = if r.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    if json {
        let mut v = serde_json::to_value(r).expect("serializable");
        v["passed"] = json!(r.passed());
        v["first_failure"] = json!(r.first_failure());
        return Outcome { output: to_json(&v), code };
    }
    let mut s = format!("verify --order {}\nsigns: {}\n", r.order, r.series.signs);
    if r.series.sign_solutions.len() > 1 {
        let all: Vec<String> = r.series.sign_solutions.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "sign solutions: {}", all.join("; "));
    }
    for c in &r.checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{mark} {}{}", c.name, if c.detail.is_empty() { String::new() } else { format!(": {}", c.detail) });
    }
    for x in &r.series.residuals {
        match &x.first_nonzero {
            None => {
                let _ = writeln!(s, "PASS {}", x.name);
            }
            Some((n, c)) => {
                let _ = writeln!(s, "FAIL {} (q^{n}: {c})", x.name);
            }
        }
    }
    match r.first_failure() {
        None => s.push_str("all checks passed\n"),
        Some(name) => {
            let _ = writeln!(s, "first failure: {name}");
        }
    }
    Outcome { output: s, code }
}

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use gwa_core::calculus::{BarTarget, Calculus, OmegaElem};
use gwa_core::derivations::{sigma, Comp, DerivParams, Derivations};
use gwa_core::integral::{beta_table, divergence, Integral};
use gwa_core::spin::{idempotents, KoDimension, SpinGeometry, SpinParams};
use gwa_core::verify::{expect_eq, verify_all, Check, Report, VerifyConfig};
use gwa_core::{AlgebraCtx, Error, Scalar};

use crate::config::Settings;
use crate::parse::{self, ParseError};
use crate::report::{JsonCheck, JsonReport, JsonTerm, JsonWitness};

#[derive(Debug, Parser)]
#[command(
    name = "gwa",
    version,
    about = "Exact computations on the generalized Weyl algebras A(p;q) and B(p;q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// The polynomial p in z, e.g. "z^2-1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// Settings file with `key = value` lines; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Also write a JSON report to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    /// Algebra for nf and mul.
    #[arg(long, global = true, value_enum)]
    pub algebra: Option<AlgebraArg>,
    /// Word-length bound for spanning-set checks.
    #[arg(long, global = true)]
    pub bound: Option<u32>,
    /// Largest power of z in tables.
    #[arg(long, global = true)]
    pub kmax: Option<usize>,
    /// Random samples per sampled check.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(
        long = "alpha0",
        global = true,
        allow_hyphen_values = true,
        value_name = "SCALAR"
    )]
    pub alpha0: Option<String>,
    #[arg(
        long = "alpha+",
        global = true,
        allow_hyphen_values = true,
        value_name = "SCALAR"
    )]
    pub alpha_plus: Option<String>,
    #[arg(
        long = "alpha-",
        global = true,
        allow_hyphen_values = true,
        value_name = "SCALAR"
    )]
    pub alpha_minus: Option<String>,
    #[arg(
        long = "beta+",
        global = true,
        allow_hyphen_values = true,
        value_name = "SCALAR"
    )]
    pub beta_plus: Option<String>,
    #[arg(
        long = "beta-",
        global = true,
        allow_hyphen_values = true,
        value_name = "SCALAR"
    )]
    pub beta_minus: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "SCALAR")]
    pub nu: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    #[value(name = "d0")]
    D0,
    #[value(name = "d+")]
    DPlus,
    #[value(name = "d-")]
    DMinus,
    #[value(name = "sigma0")]
    Sigma0,
    #[value(name = "sigma+")]
    SigmaPlus,
    #[value(name = "sigma-")]
    SigmaMinus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    #[value(name = "w-")]
    Minus,
    #[value(name = "w0")]
    Zero,
    #[value(name = "w+")]
    Plus,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form of an expression.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two expressions.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Homogeneous components of an element of A.
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// A skew derivation or its twisting automorphism.
    Apply {
        #[arg(value_enum)]
        op: Op,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The differential as a combination of w-, w0, w+.
    D {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Express a basis form as a sum of a*d(b).
    DensityWitness {
        #[arg(value_enum)]
        target: FormArg,
    },
    /// Express a generator of the restricted calculus as a sum of u*d(g)*v over B.
    BarWitness { target: String },
    /// The integral of an element of A.
    Integral {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The integral of z^k for k up to kmax.
    IntegralTable,
    /// The recurrence coefficients for the integral of z^k.
    BetaTable,
    /// Divergence of a covector a*xi- + b*xi0 + c*xi+.
    Divergence {
        #[arg(allow_hyphen_values = true)]
        covector: String,
    },
    /// Dirac operator on a spinor a*s+ + b*s-.
    Dirac {
        #[arg(allow_hyphen_values = true)]
        spinor: String,
    },
    /// The two idempotents of the spinor bundle.
    Idempotents,
    /// The real-structure identities of the spectral triple.
    VerifyKo,
    /// Every identity check.
    VerifyAll,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Nf { .. } => "nf",
            Command::Mul { .. } => "mul",
            Command::Grade { .. } => "grade",
            Command::Apply { .. } => "apply",
            Command::D { .. } => "d",
            Command::DensityWitness { .. } => "density-witness",
            Command::BarWitness { .. } => "bar-witness",
            Command::Integral { .. } => "integral",
            Command::IntegralTable => "integral-table",
            Command::BetaTable => "beta-table",
            Command::Divergence { .. } => "divergence",
            Command::Dirac { .. } => "dirac",
            Command::Idempotents => "idempotents",
            Command::VerifyKo => "verify-ko",
            Command::VerifyAll => "verify-all",
        }
    }
}

/// Bad input: exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_err(what: &str, e: ParseError) -> UsageError {
    UsageError(format!("parse error in {what} at {e}"))
}

/// What a command printed and whether its checks passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

struct Env {
    ctx: Arc<AlgebraCtx>,
    algebra: AlgebraArg,
    bound: u32,
    kmax: usize,
    samples: usize,
    seed: u64,
    deriv: DerivParams,
    spin: SpinParams,
    warnings: Vec<String>,
}

fn scalar_setting(s: &Settings, key: &str, default: Scalar) -> Result<Scalar, UsageError> {
    match s.get(key) {
        None => Ok(default),
        Some(text) => parse::parse_scalar(text).map_err(|e| parse_err(&format!("--{key}"), e)),
    }
}

fn number<T: std::str::FromStr>(s: &Settings, key: &str) -> Result<Option<T>, UsageError> {
    s.number(key).map_err(UsageError)
}

fn resolve(cli: &Cli) -> Result<Env, UsageError> {
    let mut s = match &cli.config {
        Some(path) => Settings::load(path).map_err(UsageError)?,
        None => Settings::default(),
    };
    s.set("p", cli.p.as_ref());
    s.set(
        "algebra",
        cli.algebra
            .map(|a| if a == AlgebraArg::A { "A" } else { "B" }),
    );
    s.set("bound", cli.bound);
    s.set("kmax", cli.kmax);
    s.set("samples", cli.samples);
    s.set("seed", cli.seed);
    s.set("alpha0", cli.alpha0.as_ref());
    s.set("alpha+", cli.alpha_plus.as_ref());
    s.set("alpha-", cli.alpha_minus.as_ref());
    s.set("beta+", cli.beta_plus.as_ref());
    s.set("beta-", cli.beta_minus.as_ref());
    s.set("nu", cli.nu.as_ref());

    let p_text = s
        .get("p")
        .ok_or_else(|| UsageError("missing --p <polynomial in z>".into()))?
        .to_string();
    let p = parse::parse_poly(&p_text).map_err(|e| parse_err("--p", e))?;
    let ctx = AlgebraCtx::new(p)?;
    let algebra = match s.get("algebra") {
        None | Some("A" | "a") => AlgebraArg::A,
        Some("B" | "b") => AlgebraArg::B,
        Some(other) => {
            return Err(UsageError(format!(
                "algebra: expected A or B, got '{other}'"
            )))
        }
    };
    let defaults = VerifyConfig::default();
    let bound = number(&s, "bound")?.unwrap_or(defaults.bound);
    let kmax = number(&s, "kmax")?.unwrap_or(20);
    let samples = number(&s, "samples")?.unwrap_or(defaults.samples);
    let seed = number(&s, "seed")?.unwrap_or(defaults.seed);

    let d0 = DerivParams::default();
    let deriv = DerivParams::new(
        scalar_setting(&s, "alpha0", d0.alpha0().clone())?,
        scalar_setting(&s, "alpha+", d0.alpha_plus().clone())?,
        scalar_setting(&s, "alpha-", d0.alpha_minus().clone())?,
    )?;

    let s0 = SpinParams::default();
    let (bp, bm, nu) = (
        scalar_setting(&s, "beta+", s0.beta_plus.clone())?,
        scalar_setting(&s, "beta-", s0.beta_minus.clone())?,
        scalar_setting(&s, "nu", s0.nu.clone())?,
    );
    let mut warnings = Vec::new();
    let spin = match SpinParams::new(bp.clone(), bm.clone(), nu.clone()) {
        Ok(sp) => sp,
        Err(Error::RealStructureConstraint { sign }) => {
            let ko = if sign == "-" {
                KoDimension::Two
            } else {
                KoDimension::Six
            };
            warnings.push(format!(
                "{}; continuing with the given values",
                Error::RealStructureConstraint { sign }
            ));
            SpinParams::unchecked(bp, bm, nu, ko)
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Env {
        ctx,
        algebra,
        bound,
        kmax,
        samples,
        seed,
        deriv,
        spin,
        warnings,
    })
}

fn check_witness(name: &str, got: &OmegaElem, want: &OmegaElem) -> Check {
    Check::run(name, "witness evaluates to its target", || {
        expect_eq("witness value", got, want)
    })
}

/// Runs `cli`, returning what to print. `Err` means bad input.
pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    let env = resolve(cli)?;
    let ctx = &env.ctx;
    let mut out = String::new();
    let mut checks: Vec<Check> = Vec::new();
    let mut witness = None;
    let pa = |what: &str, text: &str| parse::parse_a(ctx, text).map_err(|e| parse_err(what, e));

    match &cli.command {
        Command::Nf { expr } => match env.algebra {
            AlgebraArg::A => writeln!(out, "{}", pa("expression", expr)?),
            AlgebraArg::B => writeln!(
                out,
                "{}",
                parse::parse_b(ctx, expr).map_err(|e| parse_err("expression", e))?
            ),
        }
        .unwrap(),
        Command::Mul { left, right } => match env.algebra {
            AlgebraArg::A => writeln!(
                out,
                "{}",
                pa("left factor", left)? * pa("right factor", right)?
            ),
            AlgebraArg::B => {
                let pb = |what: &str, text: &str| {
                    parse::parse_b(ctx, text).map_err(|e| parse_err(what, e))
                };
                writeln!(
                    out,
                    "{}",
                    pb("left factor", left)? * pb("right factor", right)?
                )
            }
        }
        .unwrap(),
        Command::Grade { expr } => {
            let a = pa("expression", expr)?;
            if a.is_zero() {
                writeln!(out, "0").unwrap();
            }
            for (deg, part) in a.grade_decompose() {
                writeln!(out, "{deg}: {part}").unwrap();
            }
        }
        Command::Apply { op, expr } => {
            let a = pa("expression", expr)?;
            let der = Derivations::new(ctx, env.deriv.clone());
            let r = match op {
                Op::D0 => der.apply(Comp::Zero, &a),
                Op::DPlus => der.apply(Comp::Plus, &a),
                Op::DMinus => der.apply(Comp::Minus, &a),
                Op::Sigma0 => sigma(Comp::Zero, &a),
                Op::SigmaPlus => sigma(Comp::Plus, &a),
                Op::SigmaMinus => sigma(Comp::Minus, &a),
            };
            writeln!(out, "{r}").unwrap();
        }
        Command::D { expr } => {
            let a = pa("expression", expr)?;
            writeln!(out, "{}", Calculus::new(ctx, env.deriv.clone()).d(&a)).unwrap();
        }
        Command::DensityWitness { target } => {
            let comp = match target {
                FormArg::Minus => Comp::Minus,
                FormArg::Zero => Comp::Zero,
                FormArg::Plus => Comp::Plus,
            };
            let calc = Calculus::new(ctx, env.deriv.clone());
            let w = calc.density_witness(comp)?;
            let value = calc.eval_pairs(&w.pairs);
            let want = OmegaElem::basis(ctx, comp);
            let name = format!("w{comp}");
            writeln!(out, "{name} =").unwrap();
            for (a, b) in &w.pairs {
                writeln!(out, "  + ({a})*d({b})").unwrap();
            }
            writeln!(out, "value: {value}").unwrap();
            checks.push(check_witness("witness.density", &value, &want));
            witness = Some(JsonWitness {
                target: name,
                terms: w
                    .pairs
                    .iter()
                    .map(|(a, b)| JsonTerm {
                        left: a.to_string(),
                        d: b.to_string(),
                        right: "1".into(),
                    })
                    .collect(),
                value: value.to_string(),
                linear_branch: w.linear_branch,
            });
        }
        Command::BarWitness { target } => {
            let t: BarTarget = target.parse().map_err(UsageError)?;
            let calc = Calculus::new(ctx, env.deriv.clone());
            let w = calc.bar_witness(t)?;
            let value = calc.eval_bar(&w.terms);
            writeln!(out, "{t} =").unwrap();
            for (u, g, v) in &w.terms {
                writeln!(out, "  + ({u})*d({g})*({v})").unwrap();
            }
            writeln!(out, "value: {value}").unwrap();
            checks.push(check_witness("witness.bar", &value, &t.form(ctx)));
            witness = Some(JsonWitness {
                target: t.to_string(),
                terms: w
                    .terms
                    .iter()
                    .map(|(u, g, v)| JsonTerm {
                        left: u.to_string(),
                        d: g.to_string(),
                        right: v.to_string(),
                    })
                    .collect(),
                value: value.to_string(),
                linear_branch: w.linear_branch,
            });
        }
        Command::Integral { expr } => {
            let a = pa("expression", expr)?;
            writeln!(out, "{}", Integral::new(ctx)?.integral(&a)).unwrap();
        }
        Command::IntegralTable => {
            let integral = Integral::new(ctx)?;
            let basis: Vec<String> = (0..integral.dim()).map(|i| format!("v{i}")).collect();
            writeln!(out, "# k\t[coefficients of {}]", basis.join(", ")).unwrap();
            for (k, v) in integral.z_powers(env.kmax).iter().enumerate() {
                writeln!(out, "{k}\t[{}]", join(&v.coeffs)).unwrap();
            }
        }
        Command::BetaTable => {
            let t = beta_table(ctx.p(), env.kmax)?;
            writeln!(out, "mu = [{}]", join(&t.mu)).unwrap();
            for (k, row) in t.beta.iter().enumerate() {
                writeln!(out, "{k}\t[{}]", join(row)).unwrap();
            }
        }
        Command::Divergence { covector } => {
            let xi = parse::parse_covector(ctx, covector).map_err(|e| parse_err("covector", e))?;
            writeln!(
                out,
                "{}",
                divergence(&Calculus::new(ctx, env.deriv.clone()), &xi)
            )
            .unwrap();
        }
        Command::Dirac { spinor } => {
            let s = parse::parse_spinor(ctx, spinor).map_err(|e| parse_err("spinor", e))?;
            let geo = SpinGeometry::new(ctx, env.deriv.clone(), env.spin.clone())?;
            writeln!(out, "{}", geo.dirac(&s)).unwrap();
        }
        Command::Idempotents => {
            let (e1, em1) = idempotents(ctx)?;
            writeln!(out, "e(1) = {e1}").unwrap();
            writeln!(out, "e(-1) = {em1}").unwrap();
            checks.push(Check::run("spin.idempotent_plus", "e(1)^2 = e(1)", || {
                expect_eq("e(1)^2", &e1.mul(&e1), &e1)
            }));
            checks.push(Check::run(
                "spin.idempotent_minus",
                "e(-1)^2 = e(-1)",
                || expect_eq("e(-1)^2", &em1.mul(&em1), &em1),
            ));
        }
        Command::VerifyKo => {
            let geo = SpinGeometry::new(ctx, env.deriv.clone(), env.spin.clone())?;
            writeln!(out, "KO-dimension {}", env.spin.ko.value()).unwrap();
            checks = geo.verify_ko_dimension(env.bound);
        }
        Command::VerifyAll => {
            let cfg = VerifyConfig {
                bound: env.bound,
                deriv: env.deriv.clone(),
                spin: env.spin.clone(),
                samples: env.samples,
                kmax: env.kmax,
                seed: env.seed,
            };
            checks = verify_all(ctx.p(), &cfg)?.checks;
        }
    }

    let report = Report::new(checks);
    let has_checks = !report.checks.is_empty();
    if has_checks {
        writeln!(out, "{report}").unwrap();
    }
    let passed = report.all_passed();

    if let Some(path) = &cli.json {
        let uses_bound = matches!(cli.command, Command::VerifyKo | Command::VerifyAll);
        let json = JsonReport {
            command: cli.command.name().to_string(),
            p: ctx.p().to_string(),
            bound: uses_bound.then_some(env.bound),
            passed,
            checks: report.checks.iter().map(JsonCheck::from).collect(),
            result: (!has_checks).then(|| out.trim_end().to_string()),
            witness,
        };
        let text = serde_json::to_string_pretty(&json).expect("report serializes");
        std::fs::write(path, text + "\n")
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome {
        stdout: out,
        warnings: env.warnings,
        passed,
    })
}

fn join(xs: &[Scalar]) -> String {
    xs.iter()
        .map(Scalar::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

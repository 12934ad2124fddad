//! Command-line driver: loads a session document, runs one command and
//! renders a canonical report.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value as Json};
use toml::Table;

use crate::envelope::{
    diamond_overlap_check, induced_module, ividealiii_check, module_annihilator_z, module_check, pbw_dimension_check,
    torsion_ideal, ugd_compare, Envelope,
};
use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::ideals::{poisson_closure, poisson_core_with, symplectic_core_with, CoreOptions};
use crate::order::{order_poisson_core_with, verify, OrderElement, OrderIdeal, PoissonOrder};
use crate::poisson::{LieAlgebra, PoissonAlgebra};
use crate::poly::{Ideal, MonomialOrder, Ring};
use crate::semiclassical::{centrality_check, ell_centre_bracket, QuantumAffineSpace};
use crate::session::{algebra_fields, module_fields, ModuleBase, Session};

#[derive(Parser, Debug)]
#[command(name = "poisson-order", version, about = "Exact computations with Poisson algebras and Poisson orders")]
pub struct Cli {
    /// Session document (TOML).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Monomial order used when printing ideals: degrevlex, lex or block:a,b.
    #[arg(long = "order", global = true, default_value = "degrevlex", value_name = "ORDER")]
    pub monomial_order: MonomialOrder,
    #[arg(long, global = true, default_value_t = 4)]
    pub degree_cap: u32,
    #[arg(long, global = true, default_value_t = 64)]
    pub round_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct IdealChoice {
    /// A declared ideal.
    #[arg(long, conflicts_with_all = ["point", "gens"])]
    pub ideal: Option<String>,
    /// The maximal ideal of a point, as comma-separated coordinates.
    #[arg(long, conflicts_with = "gens")]
    pub point: Option<String>,
    /// Generators, as comma-separated polynomials.
    #[arg(long)]
    pub gens: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceChoice {
    /// Number of generators of the quantum affine space.
    #[arg(long, conflicts_with = "space")]
    pub n: Option<usize>,
    /// A declared quantum space.
    #[arg(long)]
    pub space: Option<String>,
    /// Order of the root of unity.
    #[arg(long)]
    pub ell: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi identity.
    Jacobi { algebra: String },
    /// Evaluate {f, g}.
    Bracket { algebra: String, f: String, g: String },
    /// The Hamiltonian derivation {z, -} on generators.
    Hamiltonian { algebra: String, z: String },
    /// A basis of the Poisson centre up to the degree cap.
    Centre { algebra: String },
    /// The Poisson core of an ideal.
    Core {
        algebra: String,
        #[command(flatten)]
        ideal: IdealChoice,
    },
    /// The Poisson closure of an ideal.
    Closure {
        algebra: String,
        #[command(flatten)]
        ideal: IdealChoice,
    },
    /// The symplectic core ideal of a point.
    SymplecticCore {
        algebra: String,
        #[arg(long)]
        point: String,
    },
    /// Rank of the bracket matrix at a point.
    LeafRank {
        algebra: String,
        #[arg(long)]
        point: String,
    },
    /// Brackets of s^-1 with the generators in the localization at s.
    Localize {
        algebra: String,
        #[arg(long)]
        by: String,
    },
    /// Re-check every axiom of an order.
    OrderVerify { order: String },
    /// The Poisson core of a two-sided ideal of an order.
    OrderCore {
        order: String,
        #[command(flatten)]
        ideal: IdealChoice,
        /// Order elements as comma-separated coordinates; repeatable.
        #[arg(long)]
        element: Vec<String>,
    },
    /// Multiply two elements of the enveloping algebra.
    EnvMul { target: String, u: String, v: String },
    /// Compare PBW normal-monomial counts with the closed form.
    PbwCheck {
        target: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
    },
    /// Resolve every overlap of the rewriting system.
    OverlapCheck { target: String },
    /// Compare the envelope of a linear bracket with U(g_D).
    UgdCompare { algebra: String },
    /// Check the Poisson module axioms.
    ModuleCheck { module: String },
    /// The annihilator of a module in the base algebra.
    Annihilator { module: String },
    /// The torsion ideal of a module.
    Torsion { module: String },
    /// Compare the core of the torsion ideal with the annihilator.
    IvidealCheck { module: String },
    /// Induce a module from the base algebra to an order.
    Induce {
        module: String,
        #[arg(long)]
        into: String,
    },
    /// The semiclassical bracket on the l-centre of quantum affine space.
    QSpecialize {
        #[command(flatten)]
        space: SpaceChoice,
    },
    /// Check that l-th powers of the generators are central.
    Centrality {
        #[command(flatten)]
        space: SpaceChoice,
        /// Check over generic q instead of at the root of unity.
        #[arg(long)]
        generic: bool,
    },
    /// Print the session in canonical form.
    Normalize,
}

/// A command result: ordered fields plus an overall verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub fields: Vec<(String, Field)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Field {
    Text(String),
    List(Vec<String>),
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            ok: true,
            fields: Vec::new(),
        }
    }

    fn text(mut self, key: &str, value: impl ToString) -> Report {
        self.fields.push((key.into(), Field::Text(value.to_string())));
        self
    }

    fn list<T: ToString>(mut self, key: &str, values: impl IntoIterator<Item = T>) -> Report {
        self.fields
            .push((key.into(), Field::List(values.into_iter().map(|v| v.to_string()).collect())));
        self
    }

    fn verdict(mut self, ok: bool) -> Report {
        self.ok = ok;
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = String::new();
                writeln!(out, "command: {}", self.command).unwrap();
                writeln!(out, "status: {}", if self.ok { "ok" } else { "fail" }).unwrap();
                for (k, v) in &self.fields {
                    match v {
                        Field::Text(t) if t.contains('\n') => {
                            writeln!(out, "{k}:").unwrap();
                            for line in t.lines() {
                                writeln!(out, "  {line}").unwrap();
                            }
                        }
                        Field::Text(t) => writeln!(out, "{k}: {t}").unwrap(),
                        Field::List(items) => {
                            writeln!(out, "{k}: {}", items.len()).unwrap();
                            for item in items {
                                writeln!(out, "  - {item}").unwrap();
                            }
                        }
                    }
                }
                out
            }
            Format::Json => {
                let mut map = Map::new();
                map.insert("command".into(), Json::String(self.command.clone()));
                map.insert("status".into(), Json::String(if self.ok { "ok" } else { "fail" }.into()));
                for (k, v) in &self.fields {
                    let value = match v {
                        Field::Text(t) => Json::String(t.clone()),
                        Field::List(items) => Json::Array(items.iter().cloned().map(Json::String).collect()),
                    };
                    map.insert(k.clone(), value);
                }
                let mut s = serde_json::to_string_pretty(&Json::Object(map)).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses arguments and runs in-process.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    exit_code: 0,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    exit_code: 2,
                }
            };
        }
    };
    match run_cli(&cli) {
        Ok(rendered) => {
            let code = rendered.1;
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &rendered.0) {
                    return failure(&Error::input(format!("cannot write {}: {e}", path.display())), cli.format);
                }
            }
            Outcome {
                stdout: rendered.0,
                stderr: String::new(),
                exit_code: code,
            }
        }
        Err(e) => failure(&e, cli.format),
    }
}

fn failure(e: &Error, format: Format) -> Outcome {
    let stderr = match format {
        Format::Text => format!("error[{}]: {e}\n", e.code()),
        Format::Json => {
            let mut map = Map::new();
            map.insert("code".into(), Json::String(e.code().into()));
            map.insert("message".into(), Json::String(e.to_string()));
            format!("{}\n", Json::Object(map))
        }
    };
    Outcome {
        stdout: String::new(),
        stderr,
        exit_code: e.exit_code(),
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let out = execute(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.exit_code
}

fn load(cli: &Cli) -> Result<Session> {
    let Some(path) = &cli.input else {
        return Ok(Session::default());
    };
    let src = std::fs::read_to_string(path).map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    Session::parse(&src).map_err(|d| match d.error {
        Error::Parse { .. } => d.error,
        Error::Validation { axiom, detail } => Error::Validation {
            axiom,
            detail: format!("{detail} (line {}, column {})", d.line, d.column),
        },
        Error::Input(m) => Error::Input(format!("{m} (line {}, column {})", d.line, d.column)),
        other => other,
    })
}

fn run_cli(cli: &Cli) -> Result<(String, i32)> {
    let session = load(cli)?;
    if let Command::Normalize = cli.command {
        return Ok((session.to_toml(), 0));
    }
    let report = run(&cli.command, &session, &Settings::from(cli))?;
    let code = if report.ok { 0 } else { 1 };
    Ok((report.render(cli.format), code))
}

/// Options shared by all commands.
#[derive(Clone, Debug)]
pub struct Settings {
    pub order: MonomialOrder,
    pub core: CoreOptions,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            order: MonomialOrder::DegRevLex,
            core: CoreOptions::default(),
        }
    }
}

impl From<&Cli> for Settings {
    fn from(cli: &Cli) -> Self {
        Settings {
            order: cli.monomial_order.clone(),
            core: CoreOptions {
                degree_cap: cli.degree_cap,
                round_cap: cli.round_cap,
            },
        }
    }
}

fn show(ideal: &Ideal, settings: &Settings) -> Result<String> {
    Ok(ideal.with_order(settings.order.clone())?.to_string())
}

fn parse_point(ring: &Arc<Ring>, text: &str) -> Result<Vec<Coeff>> {
    let coords = text
        .split(',')
        .map(|c| {
            let p = ring.parse(c.trim())?;
            if !p.is_constant() {
                return Err(Error::input(format!("coordinate `{}` is not a constant", c.trim())));
            }
            Ok(p.constant_term())
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != ring.nvars() {
        return Err(Error::input(format!(
            "expected {} coordinates, got {}",
            ring.nvars(),
            coords.len()
        )));
    }
    Ok(coords)
}

fn choose_ideal(session: &Session, algebra: &str, p: &PoissonAlgebra, choice: &IdealChoice) -> Result<Ideal> {
    match (&choice.ideal, &choice.point, &choice.gens) {
        (Some(name), None, None) => {
            let (owner, ideal) = session.ideal(name)?;
            if owner != algebra {
                return Err(Error::input(format!("ideal `{name}` belongs to `{owner}`, not `{algebra}`")));
            }
            Ok(ideal)
        }
        (None, Some(pt), None) => Ideal::of_point(p.ring(), &parse_point(p.ring(), pt)?),
        (None, None, Some(g)) => {
            let gens: Vec<&str> = g.split(',').map(str::trim).collect();
            Ideal::parse(p.ring(), &gens)
        }
        _ => Err(Error::input("give exactly one of --ideal, --point or --gens")),
    }
}

fn base_name_of(session: &Session, target: &str) -> Option<String> {
    match session.get(target)? {
        crate::session::Object::Order { algebra, .. } => Some(algebra.clone()),
        crate::session::Object::Algebra { .. } => Some(target.to_string()),
        _ => None,
    }
}

/// Structure constants of a bracket that is linear in the generators.
pub fn lie_algebra_of(p: &PoissonAlgebra) -> Result<LieAlgebra> {
    let ring = p.ring();
    let n = ring.nvars();
    let mut constants = vec![vec![vec![Coeff::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for (m, c) in p.entry(i, j).terms() {
                if m.degree() != 1 {
                    return Err(Error::input(format!(
                        "{{{}, {}}} is not linear in the generators",
                        ring.variables()[i],
                        ring.variables()[j]
                    )));
                }
                let k = (0..n).find(|&k| m.exponent(k) == 1).expect("degree one");
                constants[i][j][k] = c.clone();
            }
        }
    }
    LieAlgebra::new(ring.variables(), ring.field(), constants)
}

fn space(session: &Session, choice: &SpaceChoice) -> Result<QuantumAffineSpace> {
    match (&choice.n, &choice.space) {
        (Some(n), None) => QuantumAffineSpace::new(*n),
        (None, Some(name)) => session.quantum(name),
        _ => Err(Error::input("give exactly one of --n or --space")),
    }
}

fn format_matrix_rows(m: &crate::poly::Matrix) -> String {
    (0..m.nrows())
        .map(|i| {
            let row: Vec<String> = m.row(i).iter().map(|c| c.to_string()).collect();
            format!("[{}]", row.join(", "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Runs one command against a loaded session.
pub fn run(command: &Command, session: &Session, settings: &Settings) -> Result<Report> {
    match command {
        Command::Jacobi { algebra } => {
            let p = session.algebra(algebra)?;
            let bad = p.jacobi_check();
            Ok(Report::new("jacobi")
                .text("algebra", algebra)
                .text("jacobi", if bad.is_empty() { "ok" } else { "fails" })
                .list("violations", &bad)
                .verdict(bad.is_empty()))
        }
        Command::Bracket { algebra, f, g } => {
            let p = session.algebra(algebra)?;
            let (f, g) = (p.ring().parse(f)?, p.ring().parse(g)?);
            Ok(Report::new("bracket")
                .text("algebra", algebra)
                .text("bracket", p.bracket(&f, &g)))
        }
        Command::Hamiltonian { algebra, z } => {
            let p = session.algebra(algebra)?;
            let z = p.ring().parse(z)?;
            let h = p.hamiltonian(&z);
            let vars = p.ring().variables();
            Ok(Report::new("hamiltonian").text("algebra", algebra).list(
                "components",
                h.components().iter().zip(vars).map(|(c, v)| format!("{{{z}, {v}}} = {c}")),
            ))
        }
        Command::Centre { algebra } => {
            let p = session.algebra(algebra)?;
            Ok(Report::new("centre")
                .text("algebra", algebra)
                .text("degree", settings.core.degree_cap)
                .list("basis", p.poisson_centre(settings.core.degree_cap)))
        }
        Command::Core { algebra, ideal } => {
            let p = session.algebra(algebra)?;
            let i = choose_ideal(session, algebra, &p, ideal)?;
            let r = poisson_core_with(&i, &p, &settings.core)?;
            Ok(Report::new("core")
                .text("algebra", algebra)
                .text("input", show(&i, settings)?)
                .text("core", show(&r.ideal, settings)?)
                .text("certificate", r.certificate.name()))
        }
        Command::Closure { algebra, ideal } => {
            let p = session.algebra(algebra)?;
            let i = choose_ideal(session, algebra, &p, ideal)?;
            let c = poisson_closure(&i, &p, settings.core.round_cap)?;
            Ok(Report::new("closure")
                .text("algebra", algebra)
                .text("input", show(&i, settings)?)
                .text("closure", show(&c, settings)?))
        }
        Command::SymplecticCore { algebra, point } => {
            let p = session.algebra(algebra)?;
            let pt = parse_point(p.ring(), point)?;
            let r = symplectic_core_with(&pt, &p, &settings.core)?;
            Ok(Report::new("symplectic-core")
                .text("algebra", algebra)
                .text("core", show(&r.ideal, settings)?)
                .text("certificate", r.certificate.name()))
        }
        Command::LeafRank { algebra, point } => {
            let p = session.algebra(algebra)?;
            let pt = parse_point(p.ring(), point)?;
            Ok(Report::new("leaf-rank")
                .text("algebra", algebra)
                .text("rank", p.leaf_rank(&pt)?))
        }
        Command::Localize { algebra, by } => {
            let p = session.algebra(algebra)?;
            let s = p.ring().parse(by)?;
            let loc = p.localize(&s)?;
            let inv = loc.element(&p.ring().one(), 1);
            let items: Vec<String> = p
                .ring()
                .vars()
                .iter()
                .zip(p.ring().variables())
                .map(|(x, name)| {
                    let b = loc.reduce(&loc.bracket(&inv, &loc.element(x, 0)));
                    format!("{{s^-1, {name}}} = {b}")
                })
                .collect();
            Ok(Report::new("localize")
                .text("algebra", algebra)
                .text("s", &s)
                .list("brackets", items))
        }
        Command::OrderVerify { order } => {
            let o = session.order(order)?;
            let result = verify(&o);
            let report = Report::new("order-verify")
                .text("order", order)
                .text("rank", o.rank())
                .list("basis", o.basis_names());
            Ok(match result {
                Ok(()) => report.text("axioms", "ok"),
                Err(Error::Validation { axiom, detail }) => report
                    .text("axioms", "fails")
                    .text("axiom", axiom)
                    .text("detail", detail)
                    .verdict(false),
                Err(e) => return Err(e),
            })
        }
        Command::OrderCore { order, ideal, element } => {
            let o = session.order(order)?;
            let base = base_name_of(session, order).expect("orders have a base");
            let oi = if element.is_empty() {
                let i = choose_ideal(session, &base, o.base(), ideal)?;
                OrderIdeal::extension(&o, &i)?
            } else {
                if ideal.ideal.is_some() || ideal.point.is_some() || ideal.gens.is_some() {
                    return Err(Error::input("--element cannot be combined with a base ideal"));
                }
                let gens = element
                    .iter()
                    .map(|e| parse_element(&o, e))
                    .collect::<Result<Vec<_>>>()?;
                OrderIdeal::new(&o, gens)?
            };
            let r = order_poisson_core_with(&oi, &settings.core)?;
            let gens: Vec<String> = r
                .ideal
                .module()
                .reduced()
                .generators()
                .iter()
                .map(|g| o.format_element(g))
                .collect();
            Ok(Report::new("order-core")
                .text("order", order)
                .list("core", gens)
                .text("contraction", show(&r.ideal.contraction()?, settings)?)
                .text("input contraction", show(&oi.contraction()?, settings)?)
                .text("certificate", r.certificate.name()))
        }
        Command::EnvMul { target, u, v } => {
            let o = session.order_or_algebra(target)?;
            let env = Envelope::new(&o);
            let (a, b) = (env.parse(u)?, env.parse(v)?);
            Ok(Report::new("env-mul")
                .text("target", target)
                .text("product", env.mul(&a, &b)?))
        }
        Command::PbwCheck { target, k, d } => {
            let o = session.order_or_algebra(target)?;
            let r = pbw_dimension_check(&Envelope::new(&o), *k, *d);
            Ok(Report::new("pbw-check")
                .text("target", target)
                .text("k", k)
                .text("d", d)
                .text("predicted", r.predicted)
                .text("actual", r.actual)
                .text("leading terms", if r.leading_terms_ok { "ok" } else { "fail" })
                .verdict(r.ok))
        }
        Command::OverlapCheck { target } => {
            let o = session.order_or_algebra(target)?;
            let bad = diamond_overlap_check(&o);
            Ok(Report::new("overlap-check")
                .text("target", target)
                .text("overlaps", if bad.is_empty() { "resolved" } else { "unresolved" })
                .list("failures", &bad)
                .verdict(bad.is_empty()))
        }
        Command::UgdCompare { algebra } => {
            let g = lie_algebra_of(&session.algebra(algebra)?)?;
            let bad = ugd_compare(&g)?;
            Ok(Report::new("ugd-compare")
                .text("algebra", algebra)
                .text("dimension", 2 * g.dim())
                .list("mismatches", &bad)
                .verdict(bad.is_empty()))
        }
        Command::ModuleCheck { module } => {
            let (over, m) = session.module(module)?;
            let o = session.module_context(&over)?;
            let bad = module_check(&m, &o);
            Ok(Report::new("module-check")
                .text("module", module)
                .text("dimension", m.dimension())
                .list("violations", &bad)
                .verdict(bad.is_empty()))
        }
        Command::Annihilator { module } => {
            let (over, m) = session.module(module)?;
            let o = session.module_context(&over)?;
            let a = module_annihilator_z(&m, o.base(), settings.core.degree_cap.max(m.dimension() as u32));
            Ok(Report::new("annihilator")
                .text("module", module)
                .text("annihilator", show(&a.ideal, settings)?)
                .text("complete", a.complete)
                .text("degree", a.degree))
        }
        Command::Torsion { module } => {
            let (over, m) = session.module(module)?;
            let o = session.module_context(&over)?;
            let t = torsion_ideal(&m, o.base());
            let witness: Vec<String> = t.witness.iter().map(|c| c.to_string()).collect();
            Ok(Report::new("torsion")
                .text("module", module)
                .text("torsion", show(&t.ideal, settings)?)
                .text("witness", format!("[{}]", witness.join(", ")))
                .text("complete", t.complete))
        }
        Command::IvidealCheck { module } => {
            let (over, m) = session.module(module)?;
            let o = session.module_context(&over)?;
            let r = ividealiii_check(&m, o.base(), &settings.core)?;
            Ok(Report::new("ivideal-check")
                .text("module", module)
                .text("torsion", show(&r.torsion, settings)?)
                .text("core of torsion", show(&r.core, settings)?)
                .text("annihilator", show(&r.annihilator, settings)?)
                .text("holds", r.holds)
                .verdict(r.holds))
        }
        Command::Induce { module, into } => {
            let (over, m) = session.module(module)?;
            let ModuleBase::Algebra(base) = &over else {
                return Err(Error::input(format!("`{module}` is not declared over an algebra")));
            };
            let o = session.order(into)?;
            if o.base() != &session.algebra(base)? {
                return Err(Error::input(format!("`{into}` is not an order over `{base}`")));
            }
            let induced = induced_module(&o, &m)?;
            let bad = module_check(&induced, &o);
            let mut t = Table::new();
            t.insert("order".into(), toml::Value::String(into.clone()));
            module_fields(&induced, true, &mut t);
            let actions: Vec<String> = induced.basis_action().iter().map(format_matrix_rows).collect();
            Ok(Report::new("induce")
                .text("module", module)
                .text("order", into)
                .text("dimension", induced.dimension())
                .list("basis action", actions)
                .text("declaration", toml::to_string(&t).expect("table"))
                .list("violations", &bad)
                .verdict(bad.is_empty()))
        }
        Command::QSpecialize { space: choice } => {
            let q = space(session, choice)?;
            let c = ell_centre_bracket(&q, choice.ell)?;
            let vars = c.algebra.ring().variables().to_vec();
            let bad = c.algebra.jacobi_check();
            let mut t = Table::new();
            t.insert("name".into(), toml::Value::String(format!("centre{}", choice.ell)));
            algebra_fields(&c.algebra, &mut t);
            let mut doc = Table::new();
            doc.insert(
                "poisson_algebra".into(),
                toml::Value::Array(vec![toml::Value::Table(t)]),
            );
            Ok(Report::new("q-specialize")
                .text("generators", q.ngens())
                .text("ell", choice.ell)
                .text("field", CoefficientField::cyclotomic(choice.ell)?)
                .list(
                    "scalars",
                    c.scalars
                        .iter()
                        .map(|((i, j), s)| format!("{{{0}, {1}}} = ({s})*{0}*{1}", vars[*i], vars[*j])),
                )
                .text("jacobi", if bad.is_empty() { "ok" } else { "fails" })
                .text("algebra", toml::to_string(&doc).expect("table"))
                .verdict(bad.is_empty()))
        }
        Command::Centrality { space: choice, generic } => {
            let q = space(session, choice)?;
            let central = centrality_check(&q, choice.ell, !generic)?;
            Ok(Report::new("centrality")
                .text("generators", q.ngens())
                .text("ell", choice.ell)
                .text("q", if *generic { "generic" } else { "root of unity" })
                .text("central", central)
                .verdict(central))
        }
        Command::Normalize => Ok(Report::new("normalize").text("session", session.to_toml())),
    }
}

fn parse_element(o: &PoissonOrder, text: &str) -> Result<OrderElement> {
    let coords = text
        .split(',')
        .map(|c| o.ring().parse(c.trim()))
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != o.rank() {
        return Err(Error::input(format!("expected {} coordinates, got {}", o.rank(), coords.len())));
    }
    Ok(coords)
}


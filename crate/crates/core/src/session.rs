//! Session documents: named algebras, ideals, orders, modules and quantum
//! spaces declared in TOML, validated on load and written back canonically.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use serde::Deserialize;
use toml::{Spanned, Table, Value};

use crate::envelope::PoissonModule;
use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::order::{make_order, matrix_over, opposite_order, rank_one_order, tensor_order, PoissonOrder};
use crate::poisson::{LieAlgebra, PoissonAlgebra};
use crate::poly::{Ideal, Matrix, Polynomial, Ring};
use crate::semiclassical::QuantumAffineSpace;

/// An error located in the source document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub error: Error,
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: [{}] {}", self.line, self.column, self.error.code(), self.error)
    }
}

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(before.len(), |p| before.len() - p - 1) + 1;
    (line, column)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    poisson_algebra: Vec<RawAlgebra>,
    #[serde(default)]
    ideal: Vec<RawIdeal>,
    #[serde(default)]
    poisson_order: Vec<RawOrder>,
    #[serde(default)]
    module: Vec<RawModule>,
    #[serde(default)]
    quantum_space: Vec<RawQuantum>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    name: Spanned<String>,
    field: Option<String>,
    lie: Option<String>,
    #[serde(default)]
    variables: Vec<String>,
    #[serde(default)]
    brackets: Vec<Spanned<Vec<String>>>,
    table: Option<Spanned<Vec<Vec<String>>>>,
    validate: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    name: Spanned<String>,
    algebra: Spanned<String>,
    generators: Option<Vec<String>>,
    point: Option<Vec<Entry>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrder {
    name: Spanned<String>,
    algebra: Spanned<String>,
    construction: Spanned<String>,
    size: Option<usize>,
    of: Option<Spanned<String>>,
    factors: Option<Spanned<Vec<String>>>,
    basis: Option<Vec<String>>,
    unit: Option<Vec<String>>,
    mult: Option<Vec<Vec<Vec<String>>>>,
    ham: Option<Vec<Vec<Vec<String>>>>,
    validate: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    name: Spanned<String>,
    algebra: Option<Spanned<String>>,
    order: Option<Spanned<String>>,
    point: Option<Vec<Entry>>,
    x: Option<Vec<Vec<Vec<Entry>>>>,
    d: Option<Vec<Vec<Vec<Entry>>>>,
    basis_action: Option<Vec<Vec<Vec<Entry>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuantum {
    name: Spanned<String>,
    generators: usize,
}

#[derive(Deserialize, Clone)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

/// How an order was declared, kept for canonical output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    RankOne,
    Matrix { size: usize, of: Option<String> },
    Opposite { of: String },
    Tensor { factors: [String; 2] },
    Explicit { validated: bool },
}

#[derive(Clone, Debug)]
pub enum Object {
    Algebra { algebra: PoissonAlgebra, validated: bool },
    Ideal { algebra: String, ideal: Ideal },
    Order { algebra: String, order: PoissonOrder, spec: OrderSpec },
    Module { over: ModuleBase, module: PoissonModule },
    Quantum(QuantumAffineSpace),
}

/// The algebra or order a module is declared over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleBase {
    Algebra(String),
    Order(String),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Algebra { .. } => "poisson_algebra",
            Object::Ideal { .. } => "ideal",
            Object::Order { .. } => "poisson_order",
            Object::Module { .. } => "module",
            Object::Quantum(_) => "quantum_space",
        }
    }
}

/// A validated document. Declarations keep their source order per kind.
#[derive(Clone, Debug, Default)]
pub struct Session {
    names: Vec<String>,
    objects: HashMap<String, Object>,
}

struct Loader<'a> {
    src: &'a str,
    session: Session,
}

impl Loader<'_> {
    fn at(&self, span: Range<usize>, error: Error) -> Diagnostic {
        let (line, column) = position(self.src, span.start);
        Diagnostic { error, line, column }
    }

    fn declare(&mut self, name: &Spanned<String>, object: Object) -> Result<(), Diagnostic> {
        let n = name.get_ref().clone();
        if self.session.objects.contains_key(&n) {
            return Err(self.at(name.span(), Error::input(format!("`{n}` is declared twice"))));
        }
        self.session.names.push(n.clone());
        self.session.objects.insert(n, object);
        Ok(())
    }

    fn algebra(&self, name: &Spanned<String>) -> Result<PoissonAlgebra, Diagnostic> {
        self.session.algebra(name.get_ref()).map_err(|e| self.at(name.span(), e))
    }
}

fn parse_coeff(ring: &Arc<Ring>, e: &Entry) -> Result<Coeff> {
    match e {
        Entry::Int(v) => Ok(Coeff::from_int(*v)),
        Entry::Text(t) => {
            let p = ring.parse(t)?;
            if !p.is_constant() {
                return Err(Error::input(format!("`{t}` is not a constant")));
            }
            Ok(p.constant_term())
        }
    }
}

fn parse_matrix(ring: &Arc<Ring>, rows: &[Vec<Entry>]) -> Result<Matrix> {
    let rows: Vec<Vec<Coeff>> = rows
        .iter()
        .map(|r| r.iter().map(|e| parse_coeff(ring, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::input("ragged matrix"));
    }
    Ok(Matrix::from_rows(rows))
}

fn parse_element(ring: &Arc<Ring>, coords: &[String]) -> Result<Vec<Polynomial>> {
    coords.iter().map(|c| ring.parse(c)).collect()
}

fn lie_preset(name: &str) -> Result<LieAlgebra> {
    match name {
        "sl2" => Ok(LieAlgebra::sl2()),
        "heisenberg" => Ok(LieAlgebra::heisenberg()),
        "solvable" => Ok(LieAlgebra::solvable()),
        other => Err(Error::input(format!(
            "unknown Lie algebra preset `{other}` (expected sl2, heisenberg or solvable)"
        ))),
    }
}

fn build_algebra(raw: &RawAlgebra) -> Result<PoissonAlgebra> {
    let validate = raw.validate.unwrap_or(true);
    if let Some(preset) = &raw.lie {
        if !raw.variables.is_empty() || !raw.brackets.is_empty() || raw.table.is_some() {
            return Err(Error::input("a Lie preset cannot be combined with variables or brackets"));
        }
        return Ok(lie_preset(preset)?.poisson_algebra());
    }
    let field: CoefficientField = match &raw.field {
        Some(f) => f.parse()?,
        None => CoefficientField::Rationals,
    };
    let ring = Ring::new(&raw.variables, field)?;
    let n = ring.nvars();
    let mut table = vec![vec![ring.zero(); n]; n];
    if let Some(t) = &raw.table {
        let rows = t.get_ref();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::input(format!("bracket table must be {n}x{n}")));
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                table[i][j] = ring.parse(text)?;
            }
        }
    }
    let mut seen = vec![vec![false; n]; n];
    for entry in &raw.brackets {
        let [a, b, text] = entry.get_ref().as_slice() else {
            return Err(Error::input("a bracket entry is [left, right, value]"));
        };
        let idx = |v: &str| ring.var_index(v).ok_or_else(|| Error::input(format!("unknown variable `{v}`")));
        let (i, j) = (idx(a)?, idx(b)?);
        let p = ring.parse(text)?;
        if i == j {
            return Err(Error::validation("antisymmetry", format!("{{{a}, {a}}} must be zero")));
        }
        if seen[i][j] && table[i][j] != p {
            return Err(Error::validation(
                "antisymmetry",
                format!("{{{a}, {b}}} = {p} contradicts the earlier value {}", table[i][j]),
            ));
        }
        seen[i][j] = true;
        seen[j][i] = true;
        table[j][i] = -&p;
        table[i][j] = p;
    }
    if validate {
        PoissonAlgebra::new(&ring, table)
    } else {
        PoissonAlgebra::skew(&ring, table)
    }
}

impl Session {
    pub fn parse(src: &str) -> Result<Session, Diagnostic> {
        let raw: RawDocument = toml::from_str(src).map_err(|e| {
            let (line, column) = e.span().map_or((1, 1), |s| position(src, s.start));
            Diagnostic {
                error: Error::Parse {
                    line,
                    column,
                    message: e.message().to_string(),
                },
                line,
                column,
            }
        })?;
        let mut l = Loader {
            src,
            session: Session::default(),
        };
        for a in &raw.poisson_algebra {
            let algebra = build_algebra(a).map_err(|e| l.at(a.name.span(), e))?;
            let validated = a.validate.unwrap_or(true);
            l.declare(&a.name, Object::Algebra { algebra, validated })?;
        }
        for i in &raw.ideal {
            let p = l.algebra(&i.algebra)?;
            let ideal = build_ideal(&p, i).map_err(|e| l.at(i.name.span(), e))?;
            l.declare(
                &i.name,
                Object::Ideal {
                    algebra: i.algebra.get_ref().clone(),
                    ideal,
                },
            )?;
        }
        let mut pending: Vec<&RawOrder> = raw.poisson_order.iter().collect();
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for o in pending {
                let deps: Vec<&Spanned<String>> = o.of.iter().collect();
                let factor_names: Vec<String> = o.factors.as_ref().map(|f| f.get_ref().clone()).unwrap_or_default();
                let waiting = deps.iter().any(|d| !l.session.objects.contains_key(d.get_ref()) && declared_order(&raw, d.get_ref()))
                    || factor_names
                        .iter()
                        .any(|d| !l.session.objects.contains_key(d) && declared_order(&raw, d));
                if waiting {
                    rest.push(o);
                    continue;
                }
                let p = l.algebra(&o.algebra)?;
                let (order, spec) = build_order(&l.session, &p, o).map_err(|e| l.at(o.name.span(), e))?;
                l.declare(
                    &o.name,
                    Object::Order {
                        algebra: o.algebra.get_ref().clone(),
                        order,
                        spec,
                    },
                )?;
            }
            if rest.len() == before {
                let o = rest[0];
                return Err(l.at(
                    o.name.span(),
                    Error::input(format!("cyclic order references through `{}`", o.name.get_ref())),
                ));
            }
            pending = rest;
        }
        for m in &raw.module {
            let (over, module) = build_module(&l.session, m).map_err(|e| {
                let span = m.name.span();
                l.at(span, e)
            })?;
            l.declare(&m.name, Object::Module { over, module })?;
        }
        for q in &raw.quantum_space {
            let space = QuantumAffineSpace::new(q.generators).map_err(|e| l.at(q.name.span(), e))?;
            l.declare(&q.name, Object::Quantum(space))?;
        }
        Ok(l.session)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    fn lookup(&self, name: &str, kind: &str) -> Result<&Object> {
        match self.objects.get(name) {
            Some(o) if o.kind() == kind => Ok(o),
            _ => Err(Error::Unresolved {
                kind: kind.into(),
                name: name.into(),
            }),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<PoissonAlgebra> {
        match self.lookup(name, "poisson_algebra")? {
            Object::Algebra { algebra, .. } => Ok(algebra.clone()),
            _ => unreachable!(),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<(String, Ideal)> {
        match self.lookup(name, "ideal")? {
            Object::Ideal { algebra, ideal } => Ok((algebra.clone(), ideal.clone())),
            _ => unreachable!(),
        }
    }

    pub fn order(&self, name: &str) -> Result<PoissonOrder> {
        match self.lookup(name, "poisson_order")? {
            Object::Order { order, .. } => Ok(order.clone()),
            _ => unreachable!(),
        }
    }

    /// An order by name, or an algebra as a rank-one order.
    pub fn order_or_algebra(&self, name: &str) -> Result<PoissonOrder> {
        match self.objects.get(name) {
            Some(Object::Order { order, .. }) => Ok(order.clone()),
            Some(Object::Algebra { algebra, .. }) => Ok(rank_one_order(algebra)),
            _ => Err(Error::Unresolved {
                kind: "poisson_algebra or poisson_order".into(),
                name: name.into(),
            }),
        }
    }

    pub fn module(&self, name: &str) -> Result<(ModuleBase, PoissonModule)> {
        match self.lookup(name, "module")? {
            Object::Module { over, module } => Ok((over.clone(), module.clone())),
            _ => unreachable!(),
        }
    }

    pub fn quantum(&self, name: &str) -> Result<QuantumAffineSpace> {
        match self.lookup(name, "quantum_space")? {
            Object::Quantum(q) => Ok(*q),
            _ => unreachable!(),
        }
    }

    /// The order a module acts through, and its base algebra.
    pub fn module_context(&self, over: &ModuleBase) -> Result<PoissonOrder> {
        match over {
            ModuleBase::Algebra(a) => Ok(rank_one_order(&self.algebra(a)?)),
            ModuleBase::Order(o) => self.order(o),
        }
    }

    /// Canonical TOML for the whole session.
    pub fn to_toml(&self) -> String {
        let mut doc = Table::new();
        let kinds = ["poisson_algebra", "ideal", "poisson_order", "module", "quantum_space"];
        for kind in kinds {
            let tables: Vec<Value> = self
                .names
                .iter()
                .filter(|n| self.objects[*n].kind() == kind)
                .map(|n| Value::Table(self.object_table(n)))
                .collect();
            if !tables.is_empty() {
                doc.insert(kind.into(), Value::Array(tables));
            }
        }
        toml::to_string(&doc).expect("tables serialize")
    }

    fn object_table(&self, name: &str) -> Table {
        let mut t = Table::new();
        t.insert("name".into(), Value::String(name.into()));
        match &self.objects[name] {
            Object::Algebra { algebra, validated } => {
                algebra_fields(algebra, &mut t);
                if !validated {
                    t.insert("validate".into(), Value::Boolean(false));
                }
            }
            Object::Ideal { algebra, ideal } => {
                t.insert("algebra".into(), Value::String(algebra.clone()));
                t.insert("generators".into(), strings(ideal.generators().iter().map(|g| g.to_string())));
            }
            Object::Order { algebra, order, spec } => {
                t.insert("algebra".into(), Value::String(algebra.clone()));
                match spec {
                    OrderSpec::RankOne => {
                        t.insert("construction".into(), "rank-one".into());
                    }
                    OrderSpec::Matrix { size, of } => {
                        t.insert("construction".into(), "matrix".into());
                        t.insert("size".into(), Value::Integer(*size as i64));
                        if let Some(o) = of {
                            t.insert("of".into(), Value::String(o.clone()));
                        }
                    }
                    OrderSpec::Opposite { of } => {
                        t.insert("construction".into(), "opposite".into());
                        t.insert("of".into(), Value::String(of.clone()));
                    }
                    OrderSpec::Tensor { factors } => {
                        t.insert("construction".into(), "tensor".into());
                        t.insert("factors".into(), strings(factors.iter().cloned()));
                    }
                    OrderSpec::Explicit { validated } => {
                        t.insert("construction".into(), "explicit".into());
                        order_tables(order, &mut t);
                        if !validated {
                            t.insert("validate".into(), Value::Boolean(false));
                        }
                    }
                }
            }
            Object::Module { over, module } => {
                match over {
                    ModuleBase::Algebra(a) => t.insert("algebra".into(), Value::String(a.clone())),
                    ModuleBase::Order(o) => t.insert("order".into(), Value::String(o.clone())),
                };
                module_fields(module, matches!(over, ModuleBase::Order(_)), &mut t);
            }
            Object::Quantum(q) => {
                t.insert("generators".into(), Value::Integer(q.ngens() as i64));
            }
        }
        t
    }
}

fn declared_order(raw: &RawDocument, name: &str) -> bool {
    raw.poisson_order.iter().any(|o| o.name.get_ref() == name)
}

fn build_ideal(p: &PoissonAlgebra, raw: &RawIdeal) -> Result<Ideal> {
    let ring = p.ring();
    match (&raw.generators, &raw.point) {
        (Some(g), None) => {
            let gens: Vec<&str> = g.iter().map(String::as_str).collect();
            Ideal::parse(ring, &gens)
        }
        (None, Some(pt)) => {
            let coords = pt.iter().map(|e| parse_coeff(ring, e)).collect::<Result<Vec<_>>>()?;
            let ideal = Ideal::of_point(ring, &coords)?;
            Ideal::new(ring, ideal.generators().to_vec())
        }
        _ => Err(Error::input("an ideal needs exactly one of `generators` or `point`")),
    }
}

fn build_order(session: &Session, p: &PoissonAlgebra, raw: &RawOrder) -> Result<(PoissonOrder, OrderSpec)> {
    let referenced = |name: &str| -> Result<PoissonOrder> {
        let o = session.order(name)?;
        if o.base() != p {
            return Err(Error::input(format!("order `{name}` lives over a different algebra")));
        }
        Ok(o)
    };
    match raw.construction.get_ref().as_str() {
        "rank-one" => Ok((rank_one_order(p), OrderSpec::RankOne)),
        "matrix" => {
            let size = raw.size.ok_or_else(|| Error::input("a matrix order needs `size`"))?;
            let inner = match &raw.of {
                Some(o) => referenced(o.get_ref())?,
                None => rank_one_order(p),
            };
            Ok((
                matrix_over(&inner, size)?,
                OrderSpec::Matrix {
                    size,
                    of: raw.of.as_ref().map(|o| o.get_ref().clone()),
                },
            ))
        }
        "opposite" => {
            let of = raw.of.as_ref().ok_or_else(|| Error::input("an opposite order needs `of`"))?;
            Ok((
                opposite_order(&referenced(of.get_ref())?)?,
                OrderSpec::Opposite { of: of.get_ref().clone() },
            ))
        }
        "tensor" => {
            let f = raw.factors.as_ref().ok_or_else(|| Error::input("a tensor order needs `factors`"))?;
            let [a, b] = f.get_ref().as_slice() else {
                return Err(Error::input("a tensor order needs exactly two factors"));
            };
            let oa = session.order(a)?;
            let ob = session.order(b)?;
            Ok((
                tensor_order(&oa, &ob)?,
                OrderSpec::Tensor {
                    factors: [a.clone(), b.clone()],
                },
            ))
        }
        "explicit" => {
            let ring = p.ring();
            let basis = raw.basis.clone().ok_or_else(|| Error::input("an explicit order needs `basis`"))?;
            let unit = parse_element(ring, raw.unit.as_deref().ok_or_else(|| Error::input("missing `unit`"))?)?;
            let mult = raw
                .mult
                .as_ref()
                .ok_or_else(|| Error::input("missing `mult`"))?
                .iter()
                .map(|row| row.iter().map(|v| parse_element(ring, v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let ham = raw
                .ham
                .as_ref()
                .ok_or_else(|| Error::input("missing `ham`"))?
                .iter()
                .map(|row| row.iter().map(|v| parse_element(ring, v)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let validated = raw.validate.unwrap_or(true);
            let order = if validated {
                make_order(p, basis, mult, unit, ham)?
            } else {
                crate::order::unchecked_order(p, basis, mult, unit, ham)?
            };
            Ok((order, OrderSpec::Explicit { validated }))
        }
        other => Err(Error::input(format!(
            "unknown construction `{other}` (expected rank-one, matrix, opposite, tensor or explicit)"
        ))),
    }
}

fn build_module(session: &Session, raw: &RawModule) -> Result<(ModuleBase, PoissonModule)> {
    let over = match (&raw.algebra, &raw.order) {
        (Some(a), None) => ModuleBase::Algebra(a.get_ref().clone()),
        (None, Some(o)) => ModuleBase::Order(o.get_ref().clone()),
        _ => return Err(Error::input("a module needs exactly one of `algebra` or `order`")),
    };
    let order = session.module_context(&over)?;
    let ring = order.ring().clone();
    let module = match (&raw.point, &raw.x, &raw.d) {
        (Some(pt), None, None) => {
            if raw.basis_action.is_some() || matches!(over, ModuleBase::Order(_)) {
                return Err(Error::input("point modules are declared over an algebra"));
            }
            let coords = pt.iter().map(|e| parse_coeff(&ring, e)).collect::<Result<Vec<_>>>()?;
            if coords.len() != ring.nvars() {
                return Err(Error::input(format!("point needs {} coordinates", ring.nvars())));
            }
            PoissonModule::point(&coords)
        }
        (None, Some(x), Some(d)) => {
            let x = x.iter().map(|m| parse_matrix(&ring, m)).collect::<Result<Vec<_>>>()?;
            let d = d.iter().map(|m| parse_matrix(&ring, m)).collect::<Result<Vec<_>>>()?;
            match &raw.basis_action {
                Some(a) => {
                    let a = a.iter().map(|m| parse_matrix(&ring, m)).collect::<Result<Vec<_>>>()?;
                    PoissonModule::with_basis_action(x, d, a)?
                }
                None if order.rank() == 1 => PoissonModule::new(x, d)?,
                None => return Err(Error::input("a module over an order needs `basis_action`")),
            }
        }
        _ => return Err(Error::input("a module needs either `point` or both `x` and `d`")),
    };
    let violations = crate::envelope::module_check(&module, &order);
    if let Some(v) = violations.first() {
        return Err(Error::validation(
            format!("module axiom {}", v.axiom),
            v.detail.clone(),
        ));
    }
    Ok((over, module))
}

fn strings(items: impl IntoIterator<Item = String>) -> Value {
    Value::Array(items.into_iter().map(Value::String).collect())
}

pub(crate) fn algebra_fields(p: &PoissonAlgebra, t: &mut Table) {
    let ring = p.ring();
    if ring.field() != CoefficientField::Rationals {
        t.insert("field".into(), Value::String(ring.field().to_string()));
    }
    t.insert("variables".into(), strings(ring.variables().iter().cloned()));
    let vars = ring.variables();
    let brackets: Vec<Value> = p
        .upper_entries()
        .into_iter()
        .map(|(i, j, b)| strings([vars[i].clone(), vars[j].clone(), b.to_string()]))
        .collect();
    t.insert("brackets".into(), Value::Array(brackets));
}

fn element_value(a: &[Polynomial]) -> Value {
    strings(a.iter().map(|p| p.to_string()))
}

fn order_tables(order: &PoissonOrder, t: &mut Table) {
    let m = order.rank();
    t.insert("basis".into(), strings(order.basis_names().iter().cloned()));
    t.insert("unit".into(), element_value(order.unit()));
    let mult = (0..m)
        .map(|j| Value::Array((0..m).map(|k| element_value(order.product_of_basis(j, k))).collect()))
        .collect();
    t.insert("mult".into(), Value::Array(mult));
    let ham = (0..order.base().nvars())
        .map(|i| Value::Array((0..m).map(|j| element_value(order.ham_entry(i, j))).collect()))
        .collect();
    t.insert("ham".into(), Value::Array(ham));
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| strings(m.row(i).iter().map(|c| c.to_string())))
            .collect(),
    )
}

pub(crate) fn module_fields(module: &PoissonModule, with_basis: bool, t: &mut Table) {
    t.insert("x".into(), Value::Array(module.generator_action().iter().map(matrix_value).collect()));
    t.insert("d".into(), Value::Array(module.connection().iter().map(matrix_value).collect()));
    if with_basis {
        t.insert(
            "basis_action".into(),
            Value::Array(module.basis_action().iter().map(matrix_value).collect()),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"
[[poisson_algebra]]
name = "sl2"
lie = "sl2"

[[ideal]]
name = "nil"
algebra = "sl2"
point = [0, 0, 1]

[[poisson_order]]
name = "M2"
algebra = "sl2"
construction = "matrix"
size = 2

[[module]]
name = "origin"
algebra = "sl2"
point = [0, 0, 0]
"#;

    #[test]
    fn loads_and_normalizes_idempotently() {
        let s = Session::parse(SL2).unwrap();
        assert_eq!(s.names(), ["sl2", "nil", "M2", "origin"]);
        let once = s.to_toml();
        let twice = Session::parse(&once).unwrap().to_toml();
        assert_eq!(once, twice);
    }

    #[test]
    fn antisymmetry_diagnostic() {
        let src = r#"
[[poisson_algebra]]
name = "bad"
variables = ["x", "y"]
table = [["0", "x"], ["x", "0"]]
"#;
        let d = Session::parse(src).unwrap_err();
        assert_eq!(d.error.code(), "E_VALIDATION");
        assert_eq!((d.line, d.column), (3, 8));
    }

    #[test]
    fn jacobi_failure_names_the_triple() {
        let src = r#"
[[poisson_algebra]]
name = "bad"
variables = ["x1", "x2", "x3"]
brackets = [["x1", "x2", "x3"], ["x2", "x3", "x1"], ["x1", "x3", "x1"]]
"#;
        let d = Session::parse(src).unwrap_err();
        match d.error {
            Error::Validation { axiom, detail } => {
                assert_eq!(axiom, "jacobi");
                assert!(detail.contains("(x1, x2, x3)"), "{detail}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dangling_reference() {
        let src = r#"
[[ideal]]
name = "m"
algebra = "nowhere"
generators = ["x"]
"#;
        let d = Session::parse(src).unwrap_err();
        assert_eq!(d.error.code(), "E_UNRESOLVED");
        assert_eq!(d.line, 4);
    }

    #[test]
    fn syntax_error_has_position() {
        let d = Session::parse("[[ideal]\nname = 1").unwrap_err();
        assert_eq!(d.error.code(), "E_PARSE");
        assert_eq!(d.line, 1);
    }
}

//! Evaluation of parsed expressions and the command drivers behind the
//! subcommands.
//!
//! An expression evaluates over one of three coefficient worlds: plain
//! rationals, rational functions in the declared parameters, or
//! y-polynomial coefficients when double bases are involved. Pure
//! single-basis sums stay in their basis; anything mixed is pushed through
//! the monomial expansion.

use std::rc::Rc;

use mbpoly::bases::{
    ambient_basis, groth_negative, groth_positive, key, key_hat, macdonald, monomial_basis,
    schubert,
};
use mbpoly::basis::{Basis, Expansion};
use mbpoly::coeff::Coefficient;
use mbpoly::degrees::proj_deg;
use mbpoly::double::{double_groth, double_schubert, YPolynomial};
use mbpoly::param::{ParamFraction, ParamRing};
use mbpoly::poly::Polynomial;
use mbpoly::schur::{determinant, schur_matrix};
use mbpoly::weyl::{divided_difference, hecke_t, isobaric, isobaric_hat};
use mbpoly::{Family, Rational};

use crate::expr::{parse, Expr, ParseError, Syntax};

/// Command failures split by exit code: usage problems (malformed input,
/// exit 2) versus engine rejections (exit 3).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Engine(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn engine(e: mbpoly::Error) -> CliError {
    CliError::Engine(e.to_string())
}

pub const BASIS_NAMES: &[&str] = &[
    "monomial",
    "ambient-A",
    "ambient-B",
    "ambient-C",
    "ambient-D",
    "schubert",
    "key-A",
    "key-B",
    "key-C",
    "key-D",
    "key-hat",
    "groth-pos",
    "groth-neg",
    "macdonald",
    "double-schubert",
    "double-groth",
];

const MACDONALD_PARAMS: [&str; 3] = ["t1", "t2", "q"];

/// The prefix table for a command: fixed defaults, with the shared `x`,
/// `K`, and `G` prefixes retargeted at whatever the command's flags name.
pub fn syntax_for(context: &[&str], params: &[String]) -> Result<Syntax, CliError> {
    let mut prefixes: Vec<(String, String)> = [
        ("m", "monomial"),
        ("x", "monomial"),
        ("Y", "schubert"),
        ("YY", "double-schubert"),
        ("GG", "double-groth"),
        ("K", "key-A"),
        ("^K", "key-hat"),
        ("G", "groth-neg"),
    ]
    .into_iter()
    .map(|(p, b)| (p.to_string(), b.to_string()))
    .collect();
    if MACDONALD_PARAMS.iter().all(|p| params.iter().any(|q| q == p)) {
        prefixes.push(("M".into(), "macdonald".into()));
    }
    let retarget = |prefixes: &mut Vec<(String, String)>, prefix: &str, basis: &str| {
        for (p, b) in prefixes.iter_mut() {
            if p == prefix {
                *b = basis.to_string();
            }
        }
    };
    for name in context {
        if !BASIS_NAMES.contains(name) {
            return Err(CliError::Usage(format!(
                "unknown basis `{name}` (expected one of {})",
                BASIS_NAMES.join(", ")
            )));
        }
        match *name {
            "ambient-A" | "ambient-B" | "ambient-C" | "ambient-D" => {
                retarget(&mut prefixes, "x", name)
            }
            "key-B" | "key-C" | "key-D" => retarget(&mut prefixes, "K", name),
            "groth-pos" => retarget(&mut prefixes, "G", name),
            _ => {}
        }
    }
    Ok(Syntax::new(prefixes, params.iter().cloned()))
}

// ---- coefficient worlds ----

pub struct World<C: Coefficient> {
    bases: Vec<(String, Rc<Basis<C>>)>,
    params: Vec<(String, C)>,
}

impl<C: Coefficient> World<C> {
    fn basis(&self, name: &str) -> Result<&Rc<Basis<C>>, CliError> {
        self.bases
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b)
            .ok_or_else(|| {
                CliError::Engine(format!(
                    "basis `{name}` is not available with this coefficient ring"
                ))
            })
    }

    fn param(&self, name: &str) -> Result<C, CliError> {
        self.params
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c.clone())
            .ok_or_else(|| CliError::Engine(format!("parameter `{name}` is not declared")))
    }

    fn param_names(&self) -> Vec<String> {
        self.params.iter().map(|(n, _)| n.clone()).collect()
    }
}

fn generic_bases<C: Coefficient>() -> Vec<(String, Rc<Basis<C>>)> {
    let mut out: Vec<(String, Rc<Basis<C>>)> = vec![("monomial".into(), monomial_basis())];
    for family in [Family::A, Family::B, Family::C, Family::D] {
        out.push((format!("ambient-{family}"), ambient_basis(family)));
        out.push((format!("key-{family}"), key(family)));
    }
    out.push(("schubert".into(), schubert()));
    out.push(("key-hat".into(), key_hat()));
    out.push(("groth-pos".into(), groth_positive()));
    out.push(("groth-neg".into(), groth_negative()));
    out
}

pub fn rational_world() -> World<Rational> {
    World {
        bases: generic_bases(),
        params: Vec::new(),
    }
}

pub fn param_world(names: &[String]) -> Result<World<ParamFraction>, CliError> {
    let ring = ParamRing::new(names.iter().cloned());
    let mut bases = generic_bases();
    if MACDONALD_PARAMS.iter().all(|p| names.iter().any(|q| q == p)) {
        bases.push(("macdonald".into(), macdonald(&ring).map_err(engine)?));
    }
    let params = names
        .iter()
        .map(|n| Ok((n.clone(), ParamFraction::parameter(&ring, n).map_err(engine)?)))
        .collect::<Result<_, CliError>>()?;
    Ok(World { bases, params })
}

pub fn double_world() -> World<YPolynomial> {
    let mut bases = generic_bases();
    bases.push(("double-schubert".into(), double_schubert()));
    bases.push(("double-groth".into(), double_groth()));
    World {
        bases,
        params: Vec::new(),
    }
}

// ---- evaluation ----

pub enum Value<C: Coefficient> {
    Scalar(C),
    Poly(Polynomial<C>),
    InBasis(Expansion<C>),
}

fn to_poly<C: Coefficient>(v: Value<C>) -> Result<Polynomial<C>, CliError> {
    match v {
        Value::Scalar(c) => Ok(Polynomial::constant(0, c)),
        Value::Poly(p) => Ok(p),
        Value::InBasis(e) => e.expand().map_err(engine),
    }
}

// Index vectors of differing lengths are padded to the longest.
fn lift_expansion<C: Coefficient>(e: &Expansion<C>, nvars: usize) -> Expansion<C> {
    if e.nvars() >= nvars {
        return e.clone();
    }
    Expansion::from_terms(
        e.basis(),
        nvars,
        e.iter().map(|(v, c)| {
            let mut w = v.clone();
            w.resize(nvars, 0);
            (w, c.clone())
        }),
    )
}

pub fn eval<C: Coefficient>(e: &Expr, w: &World<C>) -> Result<Value<C>, CliError> {
    match e {
        Expr::Rational(r) => Ok(Value::Scalar(C::from_rational(r))),
        Expr::Param(name) => w.param(name).map(Value::Scalar),
        Expr::Literal { basis, vector } => {
            let b = w.basis(basis)?;
            b.check_index(vector).map_err(engine)?;
            Ok(Value::InBasis(Expansion::element(b, vector)))
        }
        Expr::Neg(a) => Ok(match eval(a, w)? {
            Value::Scalar(c) => Value::Scalar(c.neg_ref()),
            Value::Poly(p) => Value::Poly(p.neg()),
            Value::InBasis(e) => Value::InBasis(e.scale(&C::one().neg_ref())),
        }),
        Expr::Add(a, b) => combine(eval(a, w)?, eval(b, w)?, false),
        Expr::Sub(a, b) => combine(eval(a, w)?, eval(b, w)?, true),
        Expr::Mul(a, b) => Ok(match (eval(a, w)?, eval(b, w)?) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.mul_ref(&y)),
            (Value::Scalar(s), Value::InBasis(p)) | (Value::InBasis(p), Value::Scalar(s)) => {
                Value::InBasis(p.scale(&s))
            }
            (Value::Scalar(s), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(s)) => {
                Value::Poly(p.scale(&s))
            }
            (x, y) => Value::Poly(to_poly(x)?.mul(&to_poly(y)?)),
        }),
        Expr::Pow(a, n) => {
            let v = eval(a, w)?;
            match (v, *n) {
                (_, 0) => Ok(Value::Scalar(C::one())),
                (v, 1) => Ok(v),
                (Value::Scalar(c), n) => {
                    let mut acc = c.clone();
                    for _ in 1..n {
                        acc = acc.mul_ref(&c);
                    }
                    Ok(Value::Scalar(acc))
                }
                (v, n) => Ok(Value::Poly(to_poly(v)?.pow(n))),
            }
        }
    }
}

fn combine<C: Coefficient>(a: Value<C>, b: Value<C>, sub: bool) -> Result<Value<C>, CliError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(if sub {
            x.sub_ref(&y)
        } else {
            x.add_ref(&y)
        })),
        (Value::InBasis(p), Value::InBasis(q)) if p.basis().name() == q.basis().name() => {
            let n = p.nvars().max(q.nvars());
            let p = lift_expansion(&p, n);
            let mut q = lift_expansion(&q, n);
            if sub {
                q = q.scale(&C::one().neg_ref());
            }
            p.add(&q).map(Value::InBasis).map_err(engine)
        }
        (x, y) => {
            let (x, y) = (to_poly(x)?, to_poly(y)?);
            Ok(Value::Poly(if sub { x.sub(&y) } else { x.add(&y) }))
        }
    }
}

// ---- command output ----

/// A rendered result: the text form plus the term records behind the
/// structured form.
#[derive(Debug)]
pub struct Output {
    pub basis: String,
    pub nvars: usize,
    pub params: Vec<String>,
    pub terms: Vec<(Vec<i64>, String)>,
    pub text: String,
}

impl Output {
    pub fn json(&self) -> String {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(v, c)| serde_json::json!({ "vector": v, "coeff": c }))
            .collect();
        serde_json::json!({
            "basis": self.basis,
            "nvars": self.nvars,
            "params": self.params,
            "terms": terms,
        })
        .to_string()
    }
}

fn sorted_terms<'a, C: Coefficient>(
    terms: impl Iterator<Item = (&'a Vec<i64>, &'a C)>,
) -> Vec<(Vec<i64>, String)> {
    let mut out: Vec<(Vec<i64>, String)> = terms
        .map(|(v, c)| (v.clone(), c.coeff_string()))
        .collect();
    out.sort_by(|(a, _), (b, _)| {
        let da: i64 = a.iter().sum();
        let db: i64 = b.iter().sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    });
    out
}

fn poly_output<C: Coefficient>(p: &Polynomial<C>, params: Vec<String>) -> Output {
    // a zero-variable constant still displays one slot
    let p = if p.nvars() == 0 {
        p.change_nb_variables(1).expect("growth cannot fail")
    } else {
        p.clone()
    };
    Output {
        basis: "monomial".into(),
        nvars: p.nvars(),
        params,
        terms: sorted_terms(p.iter()),
        text: p.to_string(),
    }
}

fn expansion_output<C: Coefficient>(e: &Expansion<C>, params: Vec<String>) -> Output {
    Output {
        basis: e.basis().name().to_string(),
        nvars: e.nvars(),
        params,
        terms: sorted_terms(e.iter()),
        text: e.render(true),
    }
}

// ---- command drivers ----

/// Shared command context: the optional working basis, the conversion
/// target, and the declared parameters.
#[derive(Debug, Clone, Default)]
pub struct Session {
    pub basis: Option<String>,
    pub to: Option<String>,
    pub params: Vec<String>,
}

enum Ring {
    Rationals,
    Params,
    Double,
}

impl Session {
    fn syntax(&self) -> Result<Syntax, CliError> {
        let context: Vec<&str> = self
            .basis
            .iter()
            .chain(self.to.iter())
            .map(|s| s.as_str())
            .collect();
        syntax_for(&context, &self.params)
    }

    fn ring(&self, ast: &Expr) -> Result<Ring, CliError> {
        let mut names = Vec::new();
        ast.literal_bases(&mut names);
        names.extend(self.basis.iter().cloned());
        names.extend(self.to.iter().cloned());
        let double = names.iter().any(|n| n.starts_with("double-"));
        if double && !self.params.is_empty() {
            return Err(CliError::Engine(
                "double bases use plain rational coefficients; --params cannot be combined with them"
                    .into(),
            ));
        }
        Ok(if double {
            Ring::Double
        } else if self.params.is_empty() {
            Ring::Rationals
        } else {
            Ring::Params
        })
    }
}

pub fn command_expand(src: &str, session: &Session) -> Result<Output, CliError> {
    let ast = parse(src, &session.syntax()?)?;
    match session.ring(&ast)? {
        Ring::Rationals => expand_in(&rational_world(), &ast),
        Ring::Params => expand_in(&param_world(&session.params)?, &ast),
        Ring::Double => expand_in(&double_world(), &ast),
    }
}

fn expand_in<C: Coefficient>(w: &World<C>, ast: &Expr) -> Result<Output, CliError> {
    let p = to_poly(eval(ast, w)?)?;
    Ok(poly_output(&p, w.param_names()))
}

pub fn command_convert(src: &str, to: &str, session: &Session) -> Result<Output, CliError> {
    let session = Session {
        to: Some(to.to_string()),
        ..session.clone()
    };
    let ast = parse(src, &session.syntax()?)?;
    match session.ring(&ast)? {
        Ring::Rationals => convert_in(&rational_world(), &ast, to),
        Ring::Params => convert_in(&param_world(&session.params)?, &ast, to),
        Ring::Double => convert_in(&double_world(), &ast, to),
    }
}

fn convert_in<C: Coefficient>(w: &World<C>, ast: &Expr, to: &str) -> Result<Output, CliError> {
    let target = w.basis(to)?.clone();
    let expansion = match eval(ast, w)? {
        Value::InBasis(e) if e.basis().name() == to => e,
        v => target.to_basis(&to_poly(v)?).map_err(engine)?,
    };
    Ok(expansion_output(&expansion, w.param_names()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Dd,
    Pi,
    Pihat,
    HeckeT,
}

pub fn command_op(
    src: &str,
    op: OpKind,
    i: usize,
    family: Family,
    session: &Session,
) -> Result<Output, CliError> {
    let ast = parse(src, &session.syntax()?)?;
    match session.ring(&ast)? {
        Ring::Rationals => op_in(&rational_world(), &ast, op, i, family),
        Ring::Params => op_in(&param_world(&session.params)?, &ast, op, i, family),
        Ring::Double => op_in(&double_world(), &ast, op, i, family),
    }
}

fn op_in<C: Coefficient>(
    w: &World<C>,
    ast: &Expr,
    op: OpKind,
    i: usize,
    family: Family,
) -> Result<Output, CliError> {
    let p = to_poly(eval(ast, w)?)?;
    let image = match op {
        OpKind::Dd => divided_difference(&p, family, i).map_err(engine)?,
        OpKind::Pi => isobaric(&p, family, i).map_err(engine)?,
        OpKind::Pihat => isobaric_hat(&p, family, i).map_err(engine)?,
        OpKind::HeckeT => {
            if family != Family::A {
                return Err(CliError::Engine(
                    "operator T is defined for type A only".into(),
                ));
            }
            let (t1, t2) = match (w.param("t1"), w.param("t2")) {
                (Ok(t1), Ok(t2)) => (t1, t2),
                _ => {
                    return Err(CliError::Engine(
                        "operator T requires --params including t1 and t2".into(),
                    ))
                }
            };
            hecke_t(&p, i, &t1, &t2).map_err(engine)?
        }
    };
    Ok(poly_output(&image, w.param_names()))
}

pub fn command_projdeg(perm_src: &str) -> Result<i64, CliError> {
    let perm = parse_permutation(perm_src)?;
    proj_deg(&perm).map_err(engine)
}

/// Accepts the compact digit form (`2143`) and the comma form (`2,1,4,3`);
/// only the comma form can name values past 9.
fn parse_permutation(src: &str) -> Result<Vec<usize>, CliError> {
    let bad = |what: &str| CliError::Usage(format!("invalid permutation `{src}`: {what}"));
    if src.contains(',') {
        src.split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad("entries must be positive integers")))
            .collect()
    } else {
        src.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as usize)
                    .ok_or_else(|| bad("expected digits 1-9 or a comma-separated list"))
            })
            .collect()
    }
}

pub fn command_schurdet(
    nvars: usize,
    alphabets_src: &str,
    indices_src: &str,
) -> Result<Output, CliError> {
    let alphabets: Vec<Vec<usize>> = split_rows(alphabets_src, "alphabets")?
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    usize::try_from(x)
                        .ok()
                        .filter(|&a| a >= 1 && a <= nvars)
                        .ok_or_else(|| {
                            CliError::Usage(format!(
                                "alphabet entries must name variables 1..={nvars}"
                            ))
                        })
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let indices = split_rows(indices_src, "indices")?;
    let matrix = schur_matrix(nvars, &alphabets, &indices).map_err(engine)?;
    let det = determinant(&matrix).map_err(engine)?;
    Ok(poly_output(&det, Vec::new()))
}

// rows separated by `;`, integer entries separated by `,`
fn split_rows(src: &str, what: &str) -> Result<Vec<Vec<i64>>, CliError> {
    src.split(';')
        .map(|row| {
            row.split(',')
                .map(|s| {
                    s.trim().parse::<i64>().map_err(|_| {
                        CliError::Usage(format!("malformed {what}: `{src}` (integers split by `,`, rows by `;`)"))
                    })
                })
                .collect()
        })
        .collect()
}

//! The `polya` command-line front end.

pub mod dialect;
pub mod parse;

use std::ffi::OsString;
use std::fs;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use polya_core::expmat::ExpMatrix;
use polya_core::perm::{orbit_count, sym_dimension, Perm, PermGroup};
use polya_core::qsym::{
    dihedral_normal_form, dihedral_star_elem, mqsym_star, msymweyl_multiproduct, msymweyl_multiproduct_iterated,
    qsym_star, symweyl_multiproduct, symweyl_multiproduct_iterated, wreath_zm_star_elem, QSymElement,
};
use polya_core::schur::{schur_classes, schur_compose, schur_identity, ElemTrans, SchurElement, SchurType, SuperSpace};
use polya_core::superalg::{clifford_product, ext_product, koszul_sign, odd_sym_mul, ExtMono, OddSymElement};
use polya_core::sympow::{
    boolean_product, check_family, classical_sym_product, monomial_canonical, oracle_product, polya_product,
    BasedAlgebra, Family, GroupAction, SymElement,
};
use polya_core::verify::{run_suite, SuiteOptions, VerifyReport, SUITES};
use polya_core::weyl::{
    coord_from_normal_form, mcoord_from_normal_form, mweyl_coords_closed, mweyl_coords_functions, mweyl_normal_order,
    normal_coords_closed, normal_coords_flows, normal_coords_pairings, normal_order, WeylKind, WeylNormalForm,
    DEFAULT_BUDGET,
};
use polya_core::{GaussRat, HPoly, Lin};
use serde_json::{json, Value};

use crate::dialect::*;
use crate::parse::{parse, Dialect, ParseError};

#[derive(Parser, Debug)]
#[command(name = "polya", version, about = "Exact products in coinvariant symmetric powers")]
pub struct Cli {
    /// Accepted for scripting; output is always JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Node budget for the enumerators.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// The Weyl algebra `yx − xy = ħ`.
    Weyl {
        #[command(subcommand)]
        op: WeylOp,
    },
    /// The M-Weyl algebra `yx − xy = ħx²`.
    Mweyl {
        #[command(subcommand)]
        op: WeylOp,
    },
    /// Polya products, Boolean classes and dimensions.
    Sympow {
        #[command(subcommand)]
        op: SympowOp,
    },
    /// Star products of quantum symmetric functions.
    Qsym {
        #[command(subcommand)]
        op: QsymOp,
    },
    /// Exterior and Clifford algebras and symmetric odd functions.
    Super {
        #[command(subcommand)]
        op: SuperOp,
    },
    /// Composition in the Schur category.
    Schur {
        #[command(subcommand)]
        op: SchurOp,
    },
    /// Formula-vs-oracle sweeps.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum WeylOp {
    /// Normal-ordered form of an element.
    NormalOrder { expr: String },
    /// Normal-ordered product of elements.
    Product {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Normal coordinates of a word by every available method.
    Coords {
        word: String,
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum SympowOp {
    /// Product of Boolean classes `[a][b]` in `Symⁿ` of the Boolean algebra.
    Boolean {
        #[arg(long)]
        n: u32,
        a: String,
        b: String,
    },
    /// Polya product of basis classes over a based algebra given as JSON.
    Product {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "Sn")]
        group: String,
        #[arg(long)]
        n: usize,
        /// Evaluate by group averaging instead of the closed formula.
        #[arg(long)]
        oracle: bool,
        /// Label tuples, comma separated, by index or name.
        #[arg(required = true)]
        tuples: Vec<String>,
    },
    /// `dim (A^{⊗n})_K` from the cycle index.
    Dim {
        #[arg(long)]
        dim: u64,
        #[arg(long, default_value = "Sn")]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// Classical product of monomial symmetric functions.
    Classical {
        #[arg(long = "type", default_value = "A")]
        ty: String,
        #[arg(long)]
        m: Option<usize>,
        x: String,
        y: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum QsymOp {
    /// Binary star product.
    Star {
        /// A, B, D, M (M-Weyl), zm:<m> or dihedral:<m>.
        #[arg(long = "type", default_value = "A")]
        ty: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        x: String,
        y: String,
    },
    /// Product of several classes in `Symⁿ(W)` or `Symⁿ(MW)`.
    Product {
        #[arg(long, default_value = "weyl")]
        kind: String,
        #[arg(long, default_value = "direct")]
        path: String,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Dihedral normal form of an element.
    NormalForm { expr: String },
}

#[derive(Subcommand, Debug)]
pub enum SuperOp {
    /// Product of classes of odd-function tuples.
    Odd { x: String, y: String },
    /// Product in the exterior algebra.
    Ext { x: String, y: String },
    /// Product in the Clifford algebra.
    Clifford { x: String, y: String },
    /// Koszul sign of interleaving two parity tuples under σ.
    Koszul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// σ in cycle notation, 1-based.
        #[arg(long, default_value = "()")]
        perm: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SchurOp {
    /// `F` then `G` for `F: V → W` and `G: W → Z`, given as JSON files.
    Compose {
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        n: usize,
        f: String,
        g: String,
    },
    /// The identity of `V`.
    Identity {
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        n: usize,
        /// Parities of the basis of V, comma separated.
        #[arg(long, value_delimiter = ',')]
        space: Vec<u8>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A suite name, or `all`.
    pub suite: String,
    /// Override the suite's size bound (factors, slots or tensor degree).
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Override the suite's exponent bound.
    #[arg(long)]
    pub emax: Option<u32>,
    /// Seed for the random instances.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of random instances where the suite draws any.
    #[arg(long)]
    pub random: Option<usize>,
}

/// Failures, each with a machine-readable kind and an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Domain(#[from] polya_core::Error),
    #[error("{0}")]
    Io(String),
    #[error("verification failed")]
    Failed(Value),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Domain(_) | CliError::Io(_) | CliError::Failed(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        use polya_core::Error as E;
        match self {
            CliError::Parse(_) => "parse",
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Io(_) => "io",
            CliError::Failed(_) => "verification",
            CliError::Domain(e) => match e {
                E::DivisionByZero => "division_by_zero",
                E::InvalidPermutation(_) => "invalid_permutation",
                E::DegreeMismatch { .. } => "degree_mismatch",
                E::DimensionMismatch(_) => "dimension_mismatch",
                E::BudgetExceeded(_) => "budget_exceeded",
                E::Parity(_) => "parity",
                E::Congruence(_) => "congruence",
                E::OutOfRange(_) => "out_of_range",
                E::Truncation(_) => "truncation",
                E::InvalidAlgebra(_) => "invalid_algebra",
                E::GroupTooLarge(_) => "group_too_large",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        if let CliError::Failed(report) = self {
            return report.clone();
        }
        let mut err = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Parse(p) = self {
            err["line"] = json!(p.pos.line);
            err["column"] = json!(p.pos.column);
        }
        json!({ "error": err })
    }
}

type CliResult = Result<Value, CliError>;

/// Runs one invocation and returns the JSON text and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            return (e.to_string().trim_end().to_string(), 0);
        }
        Err(e) => Err(CliError::Usage(e.to_string().trim_end().to_string())),
    };
    match outcome {
        Ok(v) => (v.to_string(), 0),
        Err(e) => (e.to_json().to_string(), e.exit_code()),
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.cmd {
        Cmd::Weyl { op } => weyl(op, WeylKind::Weyl, cli.budget),
        Cmd::Mweyl { op } => weyl(op, WeylKind::MWeyl, cli.budget),
        Cmd::Sympow { op } => sympow(op),
        Cmd::Qsym { op } => qsym(op),
        Cmd::Super { op } => superalg(op),
        Cmd::Schur { op } => schur(op),
        Cmd::Verify(args) => verify(args),
    }
}

fn hpoly_terms(c: &HPoly) -> impl Iterator<Item = (u32, String)> + '_ {
    c.terms().map(|(h, g)| (h, g.to_string()))
}

fn weyl_nf(e: &WeylElement, kind: WeylKind) -> WeylNormalForm {
    let mut out = WeylNormalForm::default();
    for (c, w) in e {
        let nf = match kind {
            WeylKind::Weyl => normal_order(w),
            WeylKind::MWeyl => mweyl_normal_order(w),
        };
        for (&(x, y, h), d) in &nf.terms {
            for (k, g) in c.terms() {
                out.add(x, y, h + k, &(d * g));
            }
        }
    }
    out
}

fn weyl_json(nf: &WeylNormalForm) -> Value {
    let terms: Vec<Value> = weyl_nf_terms(nf)
        .into_iter()
        .map(|(x, y, h, c)| json!({ "x": x, "y": y, "h": h, "coeff": c.to_string() }))
        .collect();
    json!({ "terms": terms, "expr": print_weyl_nf(nf) })
}

fn weyl(op: &WeylOp, kind: WeylKind, budget: u64) -> CliResult {
    match op {
        WeylOp::NormalOrder { expr } => Ok(weyl_json(&weyl_nf(&weyl_element(&parse(expr, Dialect::Weyl)?)?, kind))),
        WeylOp::Product { exprs } => {
            let mut acc: Option<WeylNormalForm> = None;
            for e in exprs {
                let nf = weyl_nf(&weyl_element(&parse(e, Dialect::Weyl)?)?, kind);
                acc = Some(match acc {
                    None => nf,
                    Some(a) => a.mul(&nf, kind),
                });
            }
            Ok(weyl_json(&acc.expect("at least one factor")))
        }
        WeylOp::Coords { word, k } => {
            let e = weyl_element(&parse(word, Dialect::Weyl)?)?;
            let w = match e.as_slice() {
                [(c, w)] if *c == HPoly::one() => w.clone(),
                _ => return Err(CliError::Input("coords takes a single word with unit coefficient".into())),
            };
            let kmax = match kind {
                WeylKind::Weyl => w.total_x().min(w.total_y()),
                WeylKind::MWeyl => w.total_y(),
            };
            let ks: Vec<u32> = match k {
                Some(k) => vec![*k],
                None => (0..=kmax).collect(),
            };
            let mut rows = Vec::new();
            match kind {
                WeylKind::Weyl => {
                    let nf = normal_order(&w);
                    for k in ks {
                        rows.push(json!({
                            "k": k,
                            "closed": normal_coords_closed(&w, k).to_string(),
                            "pairings": normal_coords_pairings(&w, k, budget)?.to_string(),
                            "flows": normal_coords_flows(&w, k, budget)?.to_string(),
                            "rewrite": coord_from_normal_form(&nf, &w, k).to_string(),
                        }));
                    }
                }
                WeylKind::MWeyl => {
                    let nf = mweyl_normal_order(&w);
                    for k in ks {
                        rows.push(json!({
                            "k": k,
                            "closed": mweyl_coords_closed(&w, k).to_string(),
                            "functions": mweyl_coords_functions(&w, k, budget)?.to_string(),
                            "rewrite": mcoord_from_normal_form(&nf, &w, k).to_string(),
                        }));
                    }
                }
            }
            let word: Vec<Value> = w.factors.iter().map(|&(a, b)| json!([a, b])).collect();
            Ok(json!({ "word": word, "coords": rows }))
        }
    }
}

fn read_json(path: &str) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))
}

fn boolean_arg(s: &str) -> Result<Lin<u32>, CliError> {
    if let Ok(a) = s.trim().parse::<u32>() {
        return Ok(Lin::basis(a));
    }
    Ok(boolean_element(&parse(s, Dialect::Boolean)?)?)
}

fn label_tuple(s: &str, alg: &BasedAlgebra) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|item| {
            let item = item.trim();
            if let Some(l) = alg.label(item) {
                return Ok(l);
            }
            match item.parse::<usize>() {
                Ok(l) if l < alg.dim() => Ok(l),
                Ok(l) => Err(CliError::Input(format!("label {l} outside 0..{}", alg.dim()))),
                Err(_) => Err(CliError::Input(format!("unknown label `{item}`"))),
            }
        })
        .collect()
}

fn family(s: &str) -> Result<Family, CliError> {
    match s {
        "A" => Ok(Family::A),
        "B" => Ok(Family::B),
        "D" => Ok(Family::D),
        _ => Err(CliError::Usage(format!("unknown family `{s}`; expected A, B or D"))),
    }
}

fn boolean_json(x: &Lin<u32>, n: u32) -> Value {
    let mut terms = Vec::new();
    for (k, c) in &x.terms {
        for (h, s) in hpoly_terms(c) {
            terms.push(if h == 0 {
                json!({ "class": k, "coeff": s })
            } else {
                json!({ "class": k, "hbar_deg": h, "coeff": s })
            });
        }
    }
    json!({ "n": n, "terms": terms, "expr": print_boolean(x) })
}

fn sympow(op: &SympowOp) -> CliResult {
    match op {
        SympowOp::Boolean { n, a, b } => {
            let (x, y) = (boolean_arg(a)?, boolean_arg(b)?);
            let mut out: Lin<u32> = Lin::zero();
            for (a, c) in &x.terms {
                for (b, d) in &y.terms {
                    for (k, q) in boolean_product(*a, *b, *n)? {
                        out.add_term(k, &(c * d).scale(&GaussRat::real(q)));
                    }
                }
            }
            Ok(boolean_json(&out, *n))
        }
        SympowOp::Product { algebra, group, n, oracle, tuples } => {
            let alg = BasedAlgebra::from_json(&read_json(algebra)?)?;
            let k = PermGroup::from_spec(group, *n)?;
            let factors: Vec<SymElement> =
                tuples.iter().map(|t| label_tuple(t, &alg).map(SymElement::basis)).collect::<Result<_, _>>()?;
            let p = if *oracle {
                let action = GroupAction::from_perm_group(&k);
                let canon = |t: &Vec<usize>| monomial_canonical(&action, &alg, t);
                oracle_product(&factors, &action, &alg, &canon)?
            } else {
                polya_product(&factors, &k, &alg)?
            };
            let mut terms = Vec::new();
            for (t, c) in &p.terms {
                let names: Vec<&str> = t.iter().map(|&l| alg.name(l)).collect();
                for (h, s) in hpoly_terms(c) {
                    terms.push(json!({ "tuple": t, "labels": names, "hbar_deg": h, "coeff": s }));
                }
            }
            Ok(json!({ "group_order": k.order(), "terms": terms }))
        }
        SympowOp::Dim { dim, group, n } => {
            let k = PermGroup::from_spec(group, *n)?;
            let d = sym_dimension(*dim, &k);
            let mut out = json!({ "dimension": d.to_string(), "group_order": k.order() });
            if BigInt::from(*dim).pow(*n as u32) <= BigInt::from(1_000_000) {
                out["orbits"] = json!(orbit_count(*dim as usize, &k));
            }
            Ok(out)
        }
        SympowOp::Classical { ty, m, x, y } => {
            let fam = family(ty)?;
            let (a, n, w) = qsym_element(&parse(x, Dialect::Qsym)?, *m)?;
            let (b, _, _) = qsym_element(&parse(y, Dialect::Qsym)?, Some(w))?;
            let mut out = QSymElement::zero();
            for (p, c) in &a.terms {
                for (q, d) in &b.terms {
                    check_family(q, fam)?;
                    out.add_assign(&classical_sym_product(p, q, fam)?.mul_hpoly(&(c * d)));
                }
            }
            Ok(qsym_json(&out, &format!("classical-{ty}"), n, w, false))
        }
    }
}

fn qsym_json(x: &QSymElement, ty: &str, n: usize, m: usize, complex: bool) -> Value {
    let mut terms = Vec::new();
    for (mat, c) in &x.terms {
        for (h, s) in hpoly_terms(c) {
            terms.push(json!({ "rows": mat.rows, "hbar_deg": h, "coeff": s }));
        }
    }
    json!({ "type": ty, "n": n, "m": m, "terms": terms, "expr": print_qsym(x, complex) })
}

enum StarType {
    A,
    Signed(Family),
    M,
    Zm(u32),
    Dihedral(u32),
}

fn star_type(s: &str) -> Result<StarType, CliError> {
    let cyc = |v: &str| {
        v.parse::<u32>().ok().filter(|&m| m >= 1).ok_or_else(|| CliError::Usage(format!("bad cyclic order in `{s}`")))
    };
    match s {
        "A" => Ok(StarType::A),
        "B" => Ok(StarType::Signed(Family::B)),
        "D" => Ok(StarType::Signed(Family::D)),
        "M" => Ok(StarType::M),
        _ => {
            if let Some(v) = s.strip_prefix("zm:") {
                Ok(StarType::Zm(cyc(v)?))
            } else if let Some(v) = s.strip_prefix("dihedral:") {
                Ok(StarType::Dihedral(cyc(v)?))
            } else {
                Err(CliError::Usage(format!("unknown type `{s}`; expected A, B, D, M, zm:<m> or dihedral:<m>")))
            }
        }
    }
}

fn qsym_arg(s: &str, n: Option<usize>, m: Option<usize>) -> Result<(QSymElement, usize, usize), CliError> {
    let (x, nn, mm) = qsym_element(&parse(s, Dialect::Qsym)?, m)?;
    if let Some(n) = n {
        if n != nn {
            return Err(CliError::Domain(polya_core::Error::DegreeMismatch { expected: n, found: nn }));
        }
    }
    Ok((x, nn, mm))
}

fn qsym(op: &QsymOp) -> CliResult {
    match op {
        QsymOp::Star { ty, n, m, x, y } => {
            let st = star_type(ty)?;
            let (a, nn, w1) = qsym_arg(x, *n, *m)?;
            let (b, _, w2) = qsym_arg(y, Some(nn), *m)?;
            let w = w1.max(w2);
            // re-read both at the common width
            let (a, b) = if w1 == w2 { (a, b) } else { (qsym_arg(x, *n, Some(w))?.0, qsym_arg(y, *n, Some(w))?.0) };
            let complex = matches!(st, StarType::Zm(_) | StarType::Dihedral(_));
            let p = match st {
                StarType::A => qsym_star(&a, &b)?,
                StarType::Signed(f) => {
                    for mat in a.terms.keys().chain(b.terms.keys()) {
                        check_family(mat, f)?;
                    }
                    qsym_star(&a, &b)?
                }
                StarType::M => mqsym_star(&a, &b)?,
                StarType::Zm(c) => wreath_zm_star_elem(&a, &b, c)?,
                StarType::Dihedral(c) => dihedral_star_elem(&dihedral_normal_form(&a), &dihedral_normal_form(&b), c)?,
            };
            Ok(qsym_json(&p, ty, nn, w, complex))
        }
        QsymOp::Product { kind, path, exprs } => {
            let mut factors: Vec<ExpMatrix> = Vec::new();
            let mut shape = None;
            for e in exprs {
                let (x, n, w) = qsym_arg(e, shape.map(|s: (usize, usize)| s.0), None)?;
                shape.get_or_insert((n, w));
                match x.terms.iter().next() {
                    Some((mat, c)) if x.len() == 1 && *c == HPoly::one() => factors.push(mat.clone()),
                    _ => return Err(CliError::Input("product takes single classes with unit coefficient".into())),
                }
            }
            let (n, w) = shape.expect("at least one factor");
            let p = match (kind.as_str(), path.as_str()) {
                ("weyl", "direct") => symweyl_multiproduct(&factors)?,
                ("weyl", "iterated") => symweyl_multiproduct_iterated(&factors)?,
                ("mweyl", "direct") => msymweyl_multiproduct(&factors)?,
                ("mweyl", "iterated") => msymweyl_multiproduct_iterated(&factors)?,
                _ => return Err(CliError::Usage("expected --kind weyl|mweyl and --path direct|iterated".into())),
            };
            Ok(qsym_json(&p, kind, n, w, false))
        }
        QsymOp::NormalForm { expr } => {
            let (x, n, w) = qsym_arg(expr, None, None)?;
            Ok(qsym_json(&dihedral_normal_form(&x), "dihedral", n, w, true))
        }
    }
}

fn odd_json(x: &OddSymElement, bracket: bool) -> Value {
    let mut terms = Vec::new();
    for (slots, c) in &x.terms {
        let s: Vec<Vec<u32>> = slots.iter().map(ExtMono::indices).collect();
        for (h, v) in hpoly_terms(c) {
            terms.push(json!({ "slots": s, "hbar_deg": h, "coeff": v }));
        }
    }
    json!({ "terms": terms, "expr": print_odd(x, bracket) })
}

fn parities(s: &str) -> Result<Vec<u8>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| match p.trim() {
            "0" => Ok(0),
            "1" => Ok(1),
            other => Err(CliError::Usage(format!("parity `{other}` is not 0 or 1"))),
        })
        .collect()
}

fn superalg(op: &SuperOp) -> CliResult {
    let single = |s: &str| -> Result<OddSymElement, CliError> {
        let (x, n) = odd_element(&parse(s, Dialect::Odd)?)?;
        if n != 1 {
            return Err(CliError::Input("expected a single exterior monomial per term".into()));
        }
        Ok(x)
    };
    match op {
        SuperOp::Odd { x, y } => {
            let (a, _) = odd_element(&parse(x, Dialect::Odd)?)?;
            let (b, _) = odd_element(&parse(y, Dialect::Odd)?)?;
            Ok(odd_json(&odd_sym_mul(&a, &b)?, true))
        }
        SuperOp::Ext { x, y } | SuperOp::Clifford { x, y } => {
            let clifford = matches!(op, SuperOp::Clifford { .. });
            let (a, b) = (single(x)?, single(y)?);
            let mut out = OddSymElement::zero();
            for (i, c) in &a.terms {
                for (j, d) in &b.terms {
                    let prod = if clifford { Some(clifford_product(i[0], j[0])) } else { ext_product(i[0], j[0]) };
                    if let Some((s, k)) = prod {
                        out.add_term(vec![k], &(c * d).scale(&GaussRat::from_int(s as i64)));
                    }
                }
            }
            Ok(odd_json(&out, false))
        }
        SuperOp::Koszul { a, b, perm } => {
            let (pa, pb) = (parities(a)?, parities(b)?);
            let sigma = Perm::parse_cycles(perm, pa.len())?;
            Ok(json!({ "sign": koszul_sign(&pa, &pb, &sigma)? }))
        }
    }
}

/// A Schur morphism file: `{source, target, terms: [{coeff, hbar_deg?, slots: [{r, s, t, u}]}]}`
/// with 1-based `r`, `t`; an `expr` string may replace `terms`.
struct SchurFile {
    source: SuperSpace,
    target: SuperSpace,
    element: SchurElement,
}

fn space_field(v: &Value, key: &str, path: &str) -> Result<SuperSpace, CliError> {
    let bad = || CliError::Input(format!("{path}: `{key}` must be a list of parities"));
    let list = v.get(key).and_then(Value::as_array).ok_or_else(bad)?;
    let p = list.iter().map(|x| x.as_u64().map(|x| x as u8).ok_or_else(bad)).collect::<Result<Vec<_>, _>>()?;
    Ok(SuperSpace::new(p)?)
}

fn read_schur(path: &str) -> Result<SchurFile, CliError> {
    let v = read_json(path)?;
    let source = space_field(&v, "source", path)?;
    let target = space_field(&v, "target", path)?;
    if let Some(e) = v.get("expr").and_then(Value::as_str) {
        return Ok(SchurFile { source, target, element: schur_element(&parse(e, Dialect::Schur)?)? });
    }
    let bad = |m: &str| CliError::Input(format!("{path}: {m}"));
    let mut element = SchurElement::zero();
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms` or `expr`"))? {
        let c: GaussRat = match t.get("coeff") {
            None => GaussRat::one(),
            Some(Value::String(s)) => s.parse().map_err(|e: String| bad(&e))?,
            Some(Value::Number(n)) => GaussRat::from_int(n.as_i64().ok_or_else(|| bad("integer coefficient expected"))?),
            Some(_) => return Err(bad("`coeff` must be a string or an integer")),
        };
        let h = t.get("hbar_deg").and_then(Value::as_u64).unwrap_or(0) as u32;
        let mut slots = Vec::new();
        for s in t.get("slots").and_then(Value::as_array).ok_or_else(|| bad("term without `slots`"))? {
            let idx = |k: &str| -> Result<usize, CliError> {
                match s.get(k).and_then(Value::as_u64) {
                    Some(i) if i >= 1 => Ok(i as usize - 1),
                    _ => Err(bad(&format!("`{k}` must be a basis index from 1"))),
                }
            };
            let multi = |k: &str| -> Result<Vec<u32>, CliError> {
                s.get(k)
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad(&format!("`{k}` must be a list")))?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad(&format!("`{k}` entries must be naturals"))))
                    .collect()
            };
            slots.push(ElemTrans::new(idx("r")?, multi("s")?, idx("t")?, multi("u")?));
        }
        element.add_term(slots, &HPoly::monomial(c, h));
    }
    Ok(SchurFile { source, target, element })
}

fn schur_json(x: &SchurElement, ty: &SchurType, v: &SuperSpace, w: &SuperSpace) -> Value {
    let mut terms = Vec::new();
    for (slots, c) in &x.terms {
        let s: Vec<Value> =
            slots.iter().map(|e| json!({ "r": e.r + 1, "s": e.s, "t": e.t + 1, "u": e.u })).collect();
        for (h, g) in c.terms() {
            terms.push(json!({ "slots": s, "hbar_deg": h, "coeff": g.to_string() }));
        }
    }
    json!({
        "m": ty.m,
        "n": ty.n,
        "source": v.parity,
        "target": w.parity,
        "terms": terms,
        "expr": print_schur(x),
    })
}

fn schur(op: &SchurOp) -> CliResult {
    match op {
        SchurOp::Compose { m, n, f, g } => {
            let ty = SchurType::new(m.clone(), *n)?;
            let (f, g) = (read_schur(f)?, read_schur(g)?);
            if f.target != g.source {
                return Err(CliError::Domain(polya_core::Error::DimensionMismatch(format!(
                    "F lands in {:?} but G starts from {:?}",
                    f.target.parity, g.source.parity
                ))));
            }
            let fe = schur_classes(&f.element, &ty, &f.source, &f.target);
            let ge = schur_classes(&g.element, &ty, &g.source, &g.target);
            let p = schur_compose(&fe, &ge, &ty, &f.source, &f.target, &g.target)?;
            Ok(schur_json(&p, &ty, &f.source, &g.target))
        }
        SchurOp::Identity { m, n, space } => {
            let ty = SchurType::new(m.clone(), *n)?;
            let v = SuperSpace::new(space.clone())?;
            Ok(schur_json(&schur_identity(&ty, &v), &ty, &v, &v))
        }
    }
}

fn report_json(r: &VerifyReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn verify(args: &VerifyArgs) -> CliResult {
    let opts = SuiteOptions { nmax: args.nmax, emax: args.emax, seed: args.seed, random: args.random };
    let (value, passed) = if args.suite == "all" {
        let reports = SUITES.iter().map(|s| run_suite(s, &opts)).collect::<Result<Vec<_>, _>>()?;
        let passed = reports.iter().all(VerifyReport::passed);
        (json!({ "suites": reports.iter().map(report_json).collect::<Vec<_>>() }), passed)
    } else {
        let r = run_suite(&args.suite, &opts)?;
        (report_json(&r), r.passed())
    };
    if passed {
        Ok(value)
    } else {
        Err(CliError::Failed(value))
    }
}

/// Re-parses the `expr` field of a command's output and rebuilds the output
/// from the parsed element. `family` is the top-level command (`weyl`,
/// `mweyl`, `qsym`, `odd`, `ext`, `boolean` or `schur`).
pub fn reencode(family: &str, out: &Value) -> Result<Value, CliError> {
    let expr = out
        .get("expr")
        .and_then(Value::as_str)
        .ok_or_else(|| CliError::Input("output has no `expr` field".into()))?;
    let nat = |k: &str| out.get(k).and_then(Value::as_u64).ok_or_else(|| CliError::Input(format!("output has no `{k}`")));
    let parities = |k: &str| -> Result<SuperSpace, CliError> {
        let p: Vec<u8> = serde_json::from_value(out[k].clone()).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(SuperSpace::new(p)?)
    };
    Ok(match family {
        "weyl" => weyl_json(&weyl_nf(&weyl_element(&parse(expr, Dialect::Weyl)?)?, WeylKind::Weyl)),
        "mweyl" => weyl_json(&weyl_nf(&weyl_element(&parse(expr, Dialect::Weyl)?)?, WeylKind::MWeyl)),
        "qsym" => {
            let ty = out.get("type").and_then(Value::as_str).unwrap_or("A");
            let complex = ty.starts_with("zm:") || ty.starts_with("dihedral");
            let (m, n) = (nat("m")? as usize, nat("n")? as usize);
            let x = if out["terms"].as_array().is_some_and(|t| t.is_empty()) {
                QSymElement::zero()
            } else {
                qsym_element(&parse(expr, Dialect::Qsym)?, Some(m))?.0
            };
            qsym_json(&x, ty, n, m, complex)
        }
        "odd" | "ext" => odd_json(&odd_element(&parse(expr, Dialect::Odd)?)?.0, family == "odd"),
        "boolean" => boolean_json(&boolean_element(&parse(expr, Dialect::Boolean)?)?, nat("n")? as u32),
        "schur" => {
            let m: Vec<u32> = serde_json::from_value(out["m"].clone()).map_err(|e| CliError::Input(e.to_string()))?;
            let ty = SchurType::new(m, nat("n")? as usize)?;
            let x = schur_element(&parse(expr, Dialect::Schur)?)?;
            schur_json(&x, &ty, &parities("source")?, &parities("target")?)
        }
        _ => return Err(CliError::Usage(format!("unknown family `{family}`"))),
    })
}

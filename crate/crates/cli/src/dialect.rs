//! Lowering of parsed expressions to the core types, and printing back to
//! expression syntax.

use num_rational::BigRational;
use num_traits::Zero;
use polya_core::expmat::ExpMatrix;
use polya_core::qsym::QSymElement;
use polya_core::schur::{ElemTrans, SchurElement};
use polya_core::superalg::{odd_canonicalize, ExtMono, OddSymElement};
use polya_core::weyl::{WeylNormalForm, WeylWord};
use polya_core::{GaussRat, HPoly, Lin};

use crate::parse::{split_var, Atom, Expr, ParseError, Pos, Term, Word};

fn fail<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

fn term_coeff(t: &Term) -> HPoly {
    HPoly::monomial(t.coeff.clone(), t.hbar)
}

/// A Weyl element as `Σ coeff · word`.
pub type WeylElement = Vec<(HPoly, WeylWord)>;

pub fn weyl_element(e: &Expr) -> Result<WeylElement, ParseError> {
    let mut out = Vec::new();
    for t in &e.terms {
        if t.slots.is_some() {
            return fail(t.pos, "slot lists are not part of the weyl dialect");
        }
        out.push((term_coeff(t), weyl_word(&t.word)));
    }
    Ok(out)
}

/// Juxtaposed `x^a y^b` share a block; `.` or an `x` after a `y` opens a new one.
fn weyl_word(w: &Word) -> WeylWord {
    let mut blocks: Vec<(u32, u32)> = Vec::new();
    let mut open = false;
    for a in w {
        match a {
            Atom::Break { .. } => open = false,
            Atom::Var { name, exp, .. } => {
                let is_x = name == "x";
                let extend = open && !(is_x && blocks.last().is_some_and(|b| b.1 > 0));
                if !extend {
                    blocks.push((0, 0));
                }
                let b = blocks.last_mut().expect("just pushed");
                if is_x {
                    b.0 += exp;
                } else {
                    b.1 += exp;
                }
                open = true;
            }
            Atom::Nat { .. } | Atom::Elem { .. } => unreachable!("the weyl dialect has no such atoms"),
        }
    }
    WeylWord::new(blocks)
}

/// Splits a coefficient into its real and imaginary parts, each printable
/// as a single rational or rational multiple of `i`.
fn coeff_parts(c: &GaussRat) -> Vec<GaussRat> {
    let mut out = Vec::new();
    if !c.re.is_zero() {
        out.push(GaussRat::real(c.re.clone()));
    }
    if !c.im.is_zero() {
        out.push(GaussRat::new(BigRational::zero(), c.im.clone()));
    }
    out
}

/// `coeff h^k monomial` with the unit coefficient elided.
fn term_string(c: &GaussRat, h: u32, mono: &str) -> String {
    let mut parts: Vec<String> = Vec::new();
    let bare = mono.is_empty() && h == 0;
    if bare || !(c.is_one() || (-c.clone()).is_one()) {
        parts.push(c.to_string());
    } else if !c.is_one() {
        parts.push("-".into());
    }
    if let Some(p) = power("h", h) {
        parts.push(p);
    }
    if !mono.is_empty() {
        parts.push(mono.to_string());
    }
    let mut out = String::new();
    for p in parts {
        if !out.is_empty() && out != "-" {
            out.push(' ');
        }
        out.push_str(&p);
    }
    out
}

/// Joins terms with `+` and `-`.
fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        if k == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest.trim_start());
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

fn push_terms(out: &mut Vec<String>, c: &HPoly, mono: &str) {
    for (h, g) in c.terms() {
        for part in coeff_parts(g) {
            out.push(term_string(&part, h, mono));
        }
    }
}

fn power(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn weyl_monomial(x: u32, y: u32) -> String {
    [power("x", x), power("y", y)].into_iter().flatten().collect::<Vec<_>>().join(" ")
}

/// Terms of a normal form in output order: descending total degree, then
/// descending `x`-degree, then ascending ħ-degree.
pub fn weyl_nf_terms(nf: &WeylNormalForm) -> Vec<(u32, u32, u32, GaussRat)> {
    let mut v: Vec<(u32, u32, u32, GaussRat)> =
        nf.terms.iter().map(|(&(x, y, h), c)| (x, y, h, c.clone())).collect();
    v.sort_by(|a, b| (b.0 + b.1, b.0, a.2).cmp(&(a.0 + a.1, a.0, b.2)));
    v
}

pub fn print_weyl_nf(nf: &WeylNormalForm) -> String {
    let mut out = Vec::new();
    for (x, y, h, c) in weyl_nf_terms(nf) {
        push_terms(&mut out, &HPoly::monomial(c, h), &weyl_monomial(x, y));
    }
    join_terms(out)
}

/// Variables of a qsym slot: `x`/`z` for the first half of a row, `y`/`zb`
/// for the second.
fn qsym_row(w: &Word, m: Option<usize>) -> Result<Vec<(usize, bool, u32)>, ParseError> {
    let mut out = Vec::new();
    for a in w {
        match a {
            Atom::Var { name, exp, pos } => {
                let (stem, idx) = split_var(name);
                let i = idx.unwrap_or(1) as usize;
                if i == 0 || m.is_some_and(|m| i > m) {
                    return fail(*pos, format!("unknown variable `{name}`: index outside 1..{}", m.unwrap_or(i.max(1))));
                }
                out.push((i - 1, matches!(stem, "y" | "zb"), *exp));
            }
            Atom::Nat { value: 1, .. } => {}
            Atom::Nat { pos, .. } => return fail(*pos, "only `1` may stand for an empty slot"),
            Atom::Break { pos } => return fail(*pos, "slots are monomial labels; drop the `.`"),
            Atom::Elem { pos, .. } => return fail(*pos, "matrix units are not part of the qsym dialect"),
        }
    }
    Ok(out)
}

/// A qsym element with its slot count `n` and variable count `m`.
pub fn qsym_element(e: &Expr, m: Option<usize>) -> Result<(QSymElement, usize, usize), ParseError> {
    let mut rows_by_term = Vec::new();
    let mut width = m.unwrap_or(0);
    for t in &e.terms {
        let words = t.slot_words();
        if words.is_empty() {
            return fail(t.pos, "a qsym term needs at least one slot");
        }
        let rows = words.iter().map(|w| qsym_row(w, m)).collect::<Result<Vec<_>, _>>()?;
        for r in &rows {
            for &(i, _, _) in r {
                width = width.max(i + 1);
            }
        }
        rows_by_term.push((t, rows));
    }
    let width = width.max(1);
    let n = rows_by_term[0].1.len();
    let mut out = QSymElement::zero();
    for (t, rows) in rows_by_term {
        if rows.len() != n {
            return fail(t.pos, format!("expected {n} slots, found {}", rows.len()));
        }
        let rows = rows
            .into_iter()
            .map(|r| {
                let mut row = vec![0u32; 2 * width];
                for (i, second, e) in r {
                    row[if second { width + i } else { i }] += e;
                }
                row
            })
            .collect();
        out.add_term(ExpMatrix { rows }.canonical(), &term_coeff(t));
    }
    Ok((out, n, width))
}

fn qsym_monomial(row: &[u32], complex: bool) -> String {
    let m = row.len() / 2;
    let (a, b) = if complex { ("z", "zb") } else { ("x", "y") };
    let name = |s: &str, i: usize| if m == 1 { s.to_string() } else { format!("{s}{}", i + 1) };
    let parts: Vec<String> = (0..m)
        .filter_map(|i| power(&name(a, i), row[i]))
        .chain((0..m).filter_map(|i| power(&name(b, i), row[m + i])))
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

pub fn print_qsym(x: &QSymElement, complex: bool) -> String {
    let mut out = Vec::new();
    for (mat, c) in &x.terms {
        let slots: Vec<String> = mat.rows.iter().map(|r| qsym_monomial(r, complex)).collect();
        push_terms(&mut out, c, &format!("[{}]", slots.join(" | ")));
    }
    join_terms(out)
}

/// `θ_{i_1}⋯θ_{i_k}` as a sorted monomial with its reordering sign; `None`
/// when an index repeats.
fn odd_slot(w: &Word) -> Result<Option<(i32, ExtMono)>, ParseError> {
    let mut idx: Vec<u32> = Vec::new();
    for a in w {
        match a {
            Atom::Var { name, exp, pos } => {
                let i = split_var(name).1.unwrap_or(0);
                if i > 32 {
                    return fail(*pos, format!("unknown variable `{name}`: index outside 1..32"));
                }
                for _ in 0..*exp {
                    idx.push(i);
                }
            }
            Atom::Nat { value: 1, .. } | Atom::Break { .. } => {}
            Atom::Nat { pos, .. } => return fail(*pos, "only `1` may stand for an empty slot"),
            Atom::Elem { pos, .. } => return fail(*pos, "matrix units are not part of the odd dialect"),
        }
    }
    let mut sign = 1;
    for x in 0..idx.len() {
        for y in x + 1..idx.len() {
            if idx[x] == idx[y] {
                return Ok(None);
            }
            if idx[x] > idx[y] {
                sign = -sign;
            }
        }
    }
    Ok(Some((sign, ExtMono::from_indices(&idx).expect("indices checked"))))
}

/// An odd element as classes of tuples of exterior monomials; a bare word is
/// a one-slot tuple.
pub fn odd_element(e: &Expr) -> Result<(OddSymElement, usize), ParseError> {
    let mut out = OddSymElement::zero();
    let mut n = None;
    for t in &e.terms {
        let words = t.slot_words();
        let words = if words.is_empty() { vec![&t.word] } else { words };
        let len = words.len();
        if *n.get_or_insert(len) != len {
            return fail(t.pos, format!("expected {} slots, found {len}", n.unwrap()));
        }
        let mut sign = 1;
        let mut slots = Vec::new();
        for w in words {
            match odd_slot(w)? {
                Some((s, m)) => {
                    sign *= s;
                    slots.push(m);
                }
                None => {
                    sign = 0;
                    break;
                }
            }
        }
        if sign == 0 {
            continue;
        }
        let (rep, s) = odd_canonicalize(&slots);
        if s != 0 {
            out.add_term(rep, &term_coeff(t).scale(&GaussRat::from_int((sign * s) as i64)));
        }
    }
    Ok((out, n.unwrap_or(1)))
}

pub fn print_odd(x: &OddSymElement, bracket: bool) -> String {
    let mut out = Vec::new();
    for (slots, c) in &x.terms {
        let s: Vec<String> = slots.iter().map(|m| m.to_string()).collect();
        let mono = if bracket { format!("[{}]", s.join(" | ")) } else { s.join(" ") };
        push_terms(&mut out, c, if mono == "1" { "" } else { &mono });
    }
    join_terms(out)
}

/// Boolean classes `[a]`.
pub fn boolean_element(e: &Expr) -> Result<Lin<u32>, ParseError> {
    let mut out = Lin::zero();
    for t in &e.terms {
        let words = t.slot_words();
        match words.as_slice() {
            [w] => match w.as_slice() {
                [Atom::Nat { value, pos }] => {
                    let a = u32::try_from(*value).map_err(|_| ParseError { pos: *pos, message: "class too large".into() })?;
                    out.add_term(a, &term_coeff(t));
                }
                _ => return fail(t.pos, "a boolean term is a class `[a]`"),
            },
            _ => return fail(t.pos, "a boolean term is a class `[a]`"),
        }
    }
    Ok(out)
}

pub fn print_boolean(x: &Lin<u32>) -> String {
    let mut out = Vec::new();
    for (a, c) in &x.terms {
        push_terms(&mut out, c, &format!("[{a}]"));
    }
    join_terms(out)
}

/// Tuples of elementary transformations, with 1-based vector indices.
pub fn schur_element(e: &Expr) -> Result<SchurElement, ParseError> {
    let mut out = SchurElement::zero();
    for t in &e.terms {
        let words = t.slot_words();
        if words.is_empty() {
            return fail(t.pos, "a schur term needs at least one slot");
        }
        let mut slots = Vec::new();
        for w in words {
            match w.as_slice() {
                [Atom::Elem { r, s, t: tt, u, pos }] => {
                    if *r == 0 || *tt == 0 {
                        return fail(*pos, "basis vectors are numbered from 1");
                    }
                    slots.push(ElemTrans::new(*r as usize - 1, s.clone(), *tt as usize - 1, u.clone()));
                }
                _ => return fail(t.pos, "each slot holds one `E[r;s -> t;u]`"),
            }
        }
        out.add_term(slots, &term_coeff(t));
    }
    Ok(out)
}

pub fn print_schur(x: &SchurElement) -> String {
    let mut out = Vec::new();
    for (slots, c) in &x.terms {
        let s: Vec<String> = slots.iter().map(ToString::to_string).collect();
        push_terms(&mut out, c, &format!("[{}]", s.join(" | ")));
    }
    join_terms(out)
}

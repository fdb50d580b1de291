//! Relation files: a preamble binding labels to elements, then one equation
//! per line. Equations are verified exactly, or up to a single nonzero
//! scalar per side, and a global rescaling of the bound generators is
//! solved for that makes every listed relation exact simultaneously.
//!
//! File grammar (one item per line, `#` comments):
//!
//! ```text
//! algebra s0 3 5 mod-open          # or: algebra s0 N R / algebra ds0 N R
//! let b1 = irr 1,1,3 -> 1,2,2      # canonical irreducible element
//! let g  = irr A -> B via C -> D   # realized at other placements
//! let k6 = k 1,2,2                 # diagonal idempotent
//! let a6 = o 1,2,2 @ 2+1           # block idempotent
//! let x  = e 2 0,0,2               # generator orbit with that column vector
//! let t  = move 1,2,0,2 -> 1,2,2,0 # transport between placements
//! let p  = proj 1,2,2              # complement cut k − x
//! let m  = mat 0,1;1,0             # explicit orbit
//! b4.b2.b1 = b5.b3.b1              # words multiply left to right
//! g1.gb1 = -1*bb3.b3
//! b1.bb1 = bb2.b2 + bb3.b3
//! bb1.b1 = 0
//! ```

use crate::algebra::{format_rational, AlgebraElement, ProductMode, SchurAlgebra};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::modules::{complement_cut, irr_map_element, irr_map_element_via, transport_element};
use crate::orbits::{generator_e, generator_f, idempotent_orbit, OrbitMatrix};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementExpr {
    K(Composition),
    O(Composition, crate::combinatorics::Decomposition),
    Gen(crate::orbits::GeneratorKind, usize, Composition),
    Mat(OrbitMatrix),
    Irr {
        src: Composition,
        dst: Composition,
        via: Option<(Composition, Composition)>,
    },
    Proj(Composition),
    Move(Composition, Composition),
    /// a sandwiched generator word: `(k_dst − x_dst) · word · (k_src − x_src)`;
    /// the sides control which complement cuts are applied
    Sand {
        src: Composition,
        dst: Composition,
        word: Vec<(crate::orbits::GeneratorKind, usize)>,
        left: bool,
        right: bool,
    },
}

impl ElementExpr {
    /// Labels bound to irreducible maps participate in the rescaling.
    pub fn is_scalable(&self) -> bool {
        matches!(self, ElementExpr::Irr { .. } | ElementExpr::Sand { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: Q,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub line: usize,
    pub text: String,
    /// two or more sides, compared pairwise left to right
    pub sides: Vec<Vec<Term>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraMode {
    Plain,
    ModOpen,
    Degenerate,
}

impl AlgebraMode {
    pub fn product_mode(self) -> ProductMode {
        match self {
            AlgebraMode::Plain => ProductMode::Plain,
            AlgebraMode::ModOpen => ProductMode::ModOpen,
            AlgebraMode::Degenerate => ProductMode::Degenerate,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RelationFile {
    pub n: usize,
    pub r: u32,
    pub mode: AlgebraMode,
    pub bindings: Vec<(String, ElementExpr)>,
    pub equations: Vec<Equation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Exact,
    Proportional(Q),
    Failed { lhs: String, rhs: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Failed { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Exact => write!(f, "exact"),
            Verdict::Proportional(t) => write!(f, "proportional({})", format_rational(t)),
            Verdict::Failed { lhs, rhs } => write!(f, "failed: lhs = {} ; rhs = {}", lhs, rhs),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EquationReport {
    pub line: usize,
    pub text: String,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug)]
pub struct RelationReport {
    pub equations: Vec<EquationReport>,
    pub all_hold: bool,
    /// scalars per scalable label making every relation exact, when found
    pub rescaling: Option<BTreeMap<String, Q>>,
    pub exact_after_rescaling: bool,
}

fn parse_err(line: usize, token: &str, message: &str) -> Error {
    Error::Parse {
        pos: line,
        token: token.to_string(),
        message: message.to_string(),
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    let q = if let Some((num, den)) = body.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| parse_err(0, s, "bad rational numerator"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| parse_err(0, s, "bad rational denominator"))?;
        if d.is_zero() {
            return Err(parse_err(0, s, "zero denominator"));
        }
        Q::new(n, d)
    } else {
        let n: BigInt = body
            .trim()
            .parse()
            .map_err(|_| parse_err(0, s, "bad integer"))?;
        Q::from_integer(n)
    };
    Ok(if sign < 0 { -q } else { q })
}

fn parse_arrow(line_no: usize, s: &str) -> Result<(Composition, Composition)> {
    let (a, b) = s
        .split_once("->")
        .ok_or_else(|| parse_err(line_no, s, "expected `src -> dst`"))?;
    Ok((
        a.trim().parse::<Composition>()?,
        b.trim().parse::<Composition>()?,
    ))
}

fn parse_expr(line_no: usize, s: &str) -> Result<ElementExpr> {
    let s = s.trim();
    let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
    let rest = rest.trim();
    match head {
        "k" => Ok(ElementExpr::K(rest.parse()?)),
        "o" => {
            let (lam, m) = rest
                .split_once('@')
                .ok_or_else(|| parse_err(line_no, rest, "expected `o λ @ m`"))?;
            Ok(ElementExpr::O(lam.trim().parse()?, m.trim().parse()?))
        }
        "e" | "f" => {
            let (idx, lam) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| parse_err(line_no, rest, "expected `e i λ`"))?;
            let i: usize = idx
                .trim()
                .parse()
                .map_err(|_| parse_err(line_no, idx, "bad generator index"))?;
            let kind = if head == "e" {
                crate::orbits::GeneratorKind::E
            } else {
                crate::orbits::GeneratorKind::F
            };
            Ok(ElementExpr::Gen(kind, i, lam.trim().parse()?))
        }
        "mat" => Ok(ElementExpr::Mat(rest.parse()?)),
        "irr" => {
            if let Some((direct, via)) = rest.split_once(" via ") {
                let (src, dst) = parse_arrow(line_no, direct)?;
                let (vsrc, vdst) = parse_arrow(line_no, via)?;
                Ok(ElementExpr::Irr {
                    src,
                    dst,
                    via: Some((vsrc, vdst)),
                })
            } else {
                let (src, dst) = parse_arrow(line_no, rest)?;
                Ok(ElementExpr::Irr {
                    src,
                    dst,
                    via: None,
                })
            }
        }
        "proj" => Ok(ElementExpr::Proj(rest.parse()?)),
        "move" => {
            let (a, b) = parse_arrow(line_no, rest)?;
            Ok(ElementExpr::Move(a, b))
        }
        "sand" | "sandl" | "sandr" | "raww" => {
            let (arrow, word_text) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, rest, "expected `sand src -> dst : word`"))?;
            let (src, dst) = parse_arrow(line_no, arrow)?;
            let mut word = Vec::new();
            for tok in word_text.trim().split('.') {
                let tok = tok.trim();
                let (kind, idx) = tok.split_at(1);
                let kind = match kind {
                    "e" => crate::orbits::GeneratorKind::E,
                    "f" => crate::orbits::GeneratorKind::F,
                    _ => return Err(parse_err(line_no, tok, "word steps look like e1 or f2")),
                };
                let i: usize = idx
                    .parse()
                    .map_err(|_| parse_err(line_no, tok, "bad step index"))?;
                word.push((kind, i));
            }
            Ok(ElementExpr::Sand {
                src,
                dst,
                word,
                left: head == "sand" || head == "sandl",
                right: head == "sand" || head == "sandr",
            })
        }
        other => Err(parse_err(line_no, other, "unknown element expression")),
    }
}

fn parse_side(line_no: usize, s: &str) -> Result<Vec<Term>> {
    let s = s.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    // split on top-level + and -, keeping the sign with the term
    let mut chunks: Vec<(i8, String)> = Vec::new();
    let mut sign = 1i8;
    let mut cur = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '+' if !cur.trim().is_empty() => {
                chunks.push((sign, cur.trim().to_string()));
                cur = String::new();
                sign = 1;
            }
            '-' if cur.trim().is_empty() && chars.peek().is_some_and(|d| d.is_ascii_digit()) => {
                // a leading minus belonging to a coefficient
                cur.push('-');
            }
            '-' if !cur.trim().is_empty() => {
                chunks.push((sign, cur.trim().to_string()));
                cur = String::new();
                sign = -1;
            }
            '-' => {
                // a leading minus on a label term
                sign = -1;
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        chunks.push((sign, cur.trim().to_string()));
    }
    for (sgn, chunk) in chunks {
        let (coef, labels_text) = match chunk.split_once('*') {
            Some((c, rest)) => (parse_rational(c)?, rest.trim().to_string()),
            None => (Q::one(), chunk.clone()),
        };
        let labels: Vec<String> = labels_text
            .split('.')
            .map(|t| t.trim().to_string())
            .collect();
        if labels.iter().any(|l| l.is_empty()) {
            return Err(parse_err(line_no, &chunk, "empty label in term"));
        }
        let coef = if sgn < 0 { -coef } else { coef };
        terms.push(Term { coef, labels });
    }
    Ok(terms)
}

pub fn parse_relation_file(text: &str) -> Result<RelationFile> {
    let mut header: Option<(usize, u32, AlgebraMode)> = None;
    let mut bindings = Vec::new();
    let mut equations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("algebra ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() < 3 {
                return Err(parse_err(
                    line_no,
                    rest,
                    "expected `algebra s0|ds0 n r [mod-open]`",
                ));
            }
            let n: usize = toks[1]
                .parse()
                .map_err(|_| parse_err(line_no, toks[1], "bad n"))?;
            let r: u32 = toks[2]
                .parse()
                .map_err(|_| parse_err(line_no, toks[2], "bad r"))?;
            let mode = match (toks[0], toks.get(3).copied()) {
                ("s0", None) => AlgebraMode::Plain,
                ("s0", Some("mod-open")) => AlgebraMode::ModOpen,
                ("ds0", None) => AlgebraMode::Degenerate,
                _ => return Err(parse_err(line_no, toks[0], "unknown algebra mode")),
            };
            header = Some((n, r, mode));
            continue;
        }
        if let Some(rest) = line.strip_prefix("let ") {
            let (name, expr) = rest
                .split_once('=')
                .ok_or_else(|| parse_err(line_no, rest, "expected `let name = expr`"))?;
            let name = name.trim().to_string();
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(parse_err(line_no, &name, "labels are alphanumeric"));
            }
            bindings.push((name, parse_expr(line_no, expr)?));
            continue;
        }
        // an equation: two or more sides
        let sides: Vec<&str> = line.split('=').collect();
        if sides.len() < 2 {
            return Err(parse_err(
                line_no,
                line,
                "expected an equation or a `let` binding",
            ));
        }
        let parsed: Result<Vec<Vec<Term>>> =
            sides.iter().map(|side| parse_side(line_no, side)).collect();
        equations.push(Equation {
            line: line_no,
            text: line.to_string(),
            sides: parsed?,
        });
    }
    let (n, r, mode) = header.ok_or_else(|| parse_err(0, "", "missing `algebra` header line"))?;
    Ok(RelationFile {
        n,
        r,
        mode,
        bindings,
        equations,
    })
}

fn bind(engine: &SchurAlgebra, mode: AlgebraMode, expr: &ElementExpr) -> Result<AlgebraElement> {
    let mut v = match expr {
        ElementExpr::K(lam) => AlgebraElement::from_orbit(OrbitMatrix::diagonal(lam)),
        ElementExpr::O(lam, m) => AlgebraElement::from_orbit(idempotent_orbit(lam, m)),
        ElementExpr::Gen(kind, i, lam) => {
            let orbit = match kind {
                crate::orbits::GeneratorKind::E => generator_e(*i, lam)?,
                crate::orbits::GeneratorKind::F => generator_f(*i, lam)?,
            };
            AlgebraElement::from_orbit(orbit)
        }
        ElementExpr::Mat(m) => AlgebraElement::from_orbit(m.clone()),
        ElementExpr::Irr { src, dst, via } => match via {
            None => irr_map_element(engine, src, dst)?,
            Some((vsrc, vdst)) => irr_map_element_via(engine, src, dst, vsrc, vdst)?,
        },
        ElementExpr::Proj(lam) => complement_cut(engine, lam)?,
        ElementExpr::Move(a, b) => transport_element(a, b)?,
        ElementExpr::Sand {
            src,
            dst,
            word,
            left,
            right,
        } => crate::modules::word_element_with_cuts(engine, src, dst, word, *left, *right)?,
    };
    if mode == AlgebraMode::ModOpen {
        v.retain_non_generic();
    }
    Ok(v)
}

struct Env {
    elements: BTreeMap<String, AlgebraElement>,
    scalable: BTreeMap<String, bool>,
}

fn eval_term(
    engine: &SchurAlgebra,
    mode: ProductMode,
    env: &Env,
    term: &Term,
    scales: Option<&BTreeMap<String, Q>>,
) -> Result<AlgebraElement> {
    let mut acc: Option<AlgebraElement> = None;
    let mut coef = term.coef.clone();
    for label in &term.labels {
        let elt = env
            .elements
            .get(label)
            .ok_or_else(|| Error::UnboundLabel(label.clone()))?;
        if let Some(scales) = scales {
            if let Some(s) = scales.get(label) {
                coef *= s;
            }
        }
        acc = Some(match acc {
            None => elt.clone(),
            Some(v) => engine.element_multiply_mode(mode, &v, elt),
        });
    }
    let v = acc.unwrap_or_else(AlgebraElement::zero);
    Ok(v.scale(&coef))
}

fn eval_side(
    engine: &SchurAlgebra,
    mode: ProductMode,
    env: &Env,
    side: &[Term],
    scales: Option<&BTreeMap<String, Q>>,
) -> Result<AlgebraElement> {
    let mut acc = AlgebraElement::zero();
    for term in side {
        acc = acc.add(&eval_term(engine, mode, env, term, scales)?);
    }
    Ok(acc)
}

fn verdict_for(lhs: &AlgebraElement, rhs: &AlgebraElement) -> Verdict {
    if lhs == rhs {
        return Verdict::Exact;
    }
    if lhs.is_zero() || rhs.is_zero() {
        return Verdict::Failed {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        };
    }
    match rhs.proportionality(lhs) {
        Some(t) => Verdict::Proportional(t),
        None => Verdict::Failed {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        },
    }
}

/// A multiplicative constraint `Π s_label^e = ratio` over the scalable labels.
struct ScaleConstraint {
    exponents: BTreeMap<String, i64>,
    ratio: Q,
}

fn term_monomial(env: &Env, term: &Term, into: &mut BTreeMap<String, i64>, sign: i64) {
    for label in &term.labels {
        if env.scalable.get(label).copied().unwrap_or(false) {
            *into.entry(label.clone()).or_insert(0) += sign;
        }
    }
}

/// Constraints forcing `lhs = rhs` after rescaling, given the unscaled side
/// values. Handles sides with at most one term against sides with at most
/// two terms; anything longer must already be exact.
fn pair_constraints(
    engine: &SchurAlgebra,
    mode: ProductMode,
    env: &Env,
    lhs: &[Term],
    rhs: &[Term],
    out: &mut Vec<ScaleConstraint>,
) -> Result<bool> {
    // orient so the single-term side is on the left
    let (single, multi, flipped) = match (lhs.len(), rhs.len()) {
        (0, 0) => return Ok(true),
        (1, _) => (&lhs[0], rhs, false),
        (_, 1) => (&rhs[0], lhs, true),
        _ => {
            let l = eval_side(engine, mode, env, lhs, None)?;
            let r = eval_side(engine, mode, env, rhs, None)?;
            return Ok(l == r);
        }
    };
    let _ = flipped;
    let v_single = eval_term(engine, mode, env, single, None)?;
    if multi.is_empty() {
        return Ok(v_single.is_zero());
    }
    let v_terms: Vec<AlgebraElement> = multi
        .iter()
        .map(|t| eval_term(engine, mode, env, t, None))
        .collect::<Result<_>>()?;
    if multi.len() == 1 {
        // c_s·M_s·t = c_m·M_m where v_single = t·v_m
        if v_single.is_zero() && v_terms[0].is_zero() {
            return Ok(true);
        }
        let Some(t) = v_terms[0].proportionality(&v_single) else {
            return Ok(false);
        };
        let mut exponents = BTreeMap::new();
        term_monomial(env, single, &mut exponents, 1);
        term_monomial(env, &multi[0], &mut exponents, -1);
        out.push(ScaleConstraint {
            exponents,
            ratio: Q::one() / t,
        });
        return Ok(true);
    }
    // v_single = t_1·v_1 + t_2·v_2 (+ …): solve for the t's on the support
    let mut support: Vec<OrbitMatrix> = v_single.iter().map(|(a, _)| a.clone()).collect();
    for v in &v_terms {
        support.extend(v.iter().map(|(a, _)| a.clone()));
    }
    support.sort();
    support.dedup();
    let rows: Vec<Vec<Q>> = support
        .iter()
        .map(|a| v_terms.iter().map(|v| v.coeff(a)).collect())
        .collect();
    let rhs_vec: Vec<Q> = support.iter().map(|a| v_single.coeff(a)).collect();
    let Some(ts) = linalg::solve(&rows, &rhs_vec) else {
        return Ok(false);
    };
    for (term, t) in multi.iter().zip(&ts) {
        if t.is_zero() {
            return Ok(false);
        }
        let mut exponents = BTreeMap::new();
        term_monomial(env, single, &mut exponents, 1);
        term_monomial(env, term, &mut exponents, -1);
        out.push(ScaleConstraint {
            exponents,
            ratio: Q::one() / t.clone(),
        });
    }
    Ok(true)
}

/// Solve the multiplicative system over ℚ^×: a sign system over GF(2) and
/// one integer system per prime. Free labels scale by 1.
fn solve_scales(labels: &[String], constraints: &[ScaleConstraint]) -> Option<BTreeMap<String, Q>> {
    use num_integer::Integer;
    let index: BTreeMap<&String, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let cols = labels.len();
    // collect the primes appearing in any ratio
    let mut primes: Vec<BigInt> = Vec::new();
    let factor = |mut v: BigInt, primes: &mut Vec<BigInt>| {
        let two = BigInt::from(2);
        let mut p = two.clone();
        v = v.abs();
        while v > BigInt::one() {
            if v.mod_floor(&p).is_zero() {
                if !primes.contains(&p) {
                    primes.push(p.clone());
                }
                v /= &p;
            } else {
                p += 1;
            }
        }
    };
    for c in constraints {
        factor(c.ratio.numer().clone(), &mut primes);
        factor(c.ratio.denom().clone(), &mut primes);
    }
    primes.sort();
    // exponent matrix shared by the sign system and every prime system
    let matrix: Vec<Vec<Q>> = constraints
        .iter()
        .map(|c| {
            let mut row = vec![Q::zero(); cols];
            for (label, &e) in &c.exponents {
                if let Some(&i) = index.get(label) {
                    row[i] = Q::from_integer(e.into());
                }
            }
            row
        })
        .collect();
    // per-prime integer exponents, solved over ℚ and checked integral
    let mut exp_solutions: Vec<Vec<i64>> = Vec::new();
    for p in &primes {
        let rhs: Vec<Q> = constraints
            .iter()
            .map(|c| {
                let vn = padic(c.ratio.numer(), p);
                let vd = padic(c.ratio.denom(), p);
                Q::from_integer((vn - vd).into())
            })
            .collect();
        let sol = linalg::solve(&matrix, &rhs)?;
        let mut ints = Vec::with_capacity(cols);
        for q in sol {
            if !q.is_integer() {
                return None;
            }
            ints.push(i64::try_from(q.to_integer()).ok()?);
        }
        exp_solutions.push(ints);
    }
    // sign system over GF(2)
    let sign_rhs: Vec<Q> = constraints
        .iter()
        .map(|c| {
            if c.ratio.is_negative() {
                Q::one()
            } else {
                Q::zero()
            }
        })
        .collect();
    let signs = solve_gf2(&matrix, &sign_rhs, cols)?;
    let mut out = BTreeMap::new();
    for (i, label) in labels.iter().enumerate() {
        let mut s = if signs[i] { -Q::one() } else { Q::one() };
        for (p, exps) in primes.iter().zip(&exp_solutions) {
            let e = exps[i];
            let pq = Q::from_integer(p.clone());
            if e > 0 {
                for _ in 0..e {
                    s *= &pq;
                }
            } else {
                for _ in 0..(-e) {
                    s /= &pq;
                }
            }
        }
        out.insert(label.clone(), s);
    }
    Some(out)
}

fn padic(v: &BigInt, p: &BigInt) -> i64 {
    use num_integer::Integer;
    let mut v = v.abs();
    let mut count = 0i64;
    while !v.is_zero() && v.mod_floor(p).is_zero() {
        v /= p;
        count += 1;
    }
    count
}

fn solve_gf2(matrix: &[Vec<Q>], rhs: &[Q], cols: usize) -> Option<Vec<bool>> {
    let mut rows: Vec<(Vec<bool>, bool)> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let bits: Vec<bool> = row.iter().map(|q| q.to_integer().bit(0)).collect();
            (bits, !b.is_zero())
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i].0[col]) else {
            continue;
        };
        rows.swap(rank, pr);
        for i in 0..rows.len() {
            if i != rank && rows[i].0[col] {
                let (head, tail) = rows.split_at_mut(rank.max(i));
                let (src, dst) = if rank < i {
                    (&head[rank], &mut tail[0])
                } else {
                    (&tail[0], &mut head[i])
                };
                let src = src.clone();
                for c in 0..cols {
                    dst.0[c] ^= src.0[c];
                }
                dst.1 ^= src.1;
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    // inconsistent when a zero row has rhs 1
    for (bits, b) in rows.iter().skip(rank) {
        if *b && bits.iter().all(|&x| !x) {
            return None;
        }
    }
    let mut x = vec![false; cols];
    for &(row, col) in &pivots {
        x[col] = rows[row].1;
    }
    Some(x)
}

/// Parse, bind and verify a relation file against a matching engine.
pub fn verify_file(engine: &SchurAlgebra, file: &RelationFile) -> Result<RelationReport> {
    assert_eq!(engine.n(), file.n, "engine size mismatch");
    assert_eq!(engine.r(), file.r, "engine rank mismatch");
    let mode = file.mode.product_mode();
    let mut env = Env {
        elements: BTreeMap::new(),
        scalable: BTreeMap::new(),
    };
    for (name, expr) in &file.bindings {
        let v = bind(engine, file.mode, expr)?;
        env.elements.insert(name.clone(), v);
        env.scalable.insert(name.clone(), expr.is_scalable());
    }
    let mut reports = Vec::new();
    let mut all_hold = true;
    for eq in &file.equations {
        let mut verdicts = Vec::new();
        for pair in eq.sides.windows(2) {
            let l = eval_side(engine, mode, &env, &pair[0], None)?;
            let r = eval_side(engine, mode, &env, &pair[1], None)?;
            let v = verdict_for(&l, &r);
            all_hold &= v.holds();
            verdicts.push(v);
        }
        reports.push(EquationReport {
            line: eq.line,
            text: eq.text.clone(),
            verdicts,
        });
    }
    // global rescaling of the irreducible generators
    let mut rescaling = None;
    let mut exact_after = false;
    if all_hold {
        let scalable: Vec<String> = env
            .scalable
            .iter()
            .filter(|(_, &s)| s)
            .map(|(l, _)| l.clone())
            .collect();
        let mut constraints = Vec::new();
        let mut feasible = true;
        for eq in &file.equations {
            for pair in eq.sides.windows(2) {
                feasible &=
                    pair_constraints(engine, mode, &env, &pair[0], &pair[1], &mut constraints)?;
            }
        }
        if feasible {
            if let Some(scales) = solve_scales(&scalable, &constraints) {
                // verify by substitution
                exact_after = true;
                'outer: for eq in &file.equations {
                    for pair in eq.sides.windows(2) {
                        let l = eval_side(engine, mode, &env, &pair[0], Some(&scales))?;
                        let r = eval_side(engine, mode, &env, &pair[1], Some(&scales))?;
                        if l != r {
                            exact_after = false;
                            break 'outer;
                        }
                    }
                }
                if exact_after {
                    rescaling = Some(scales);
                }
            }
        }
    }
    Ok(RelationReport {
        equations: reports,
        all_hold,
        rescaling,
        exact_after_rescaling: exact_after,
    })
}

/// Convenience entry point: parse and verify with a fresh engine.
pub fn run_relation_text(text: &str) -> Result<(RelationFile, RelationReport)> {
    let file = parse_relation_file(text)?;
    let engine = SchurAlgebra::new(file.n, file.r);
    let report = verify_file(&engine, &file)?;
    Ok((file, report))
}

impl FromStr for RelationFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_relation_file(s)
    }
}

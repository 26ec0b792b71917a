//! Genus functions, graph-class membership predicates (any-surface,
//! orientable, nonorientable, cycle-rank and excess families, with plain,
//! hereditary, certified-hereditary, minor and topological-minor closures),
//! the K5 certified-hereditary scan, extension counting, and the explicit
//! subdivision and block-path generators.

use crate::embedding::{self, EmbeddingScheme, PlanarityCache};
use crate::formulas::RatInterval;
use crate::graph::{Graph, Vertex, CANON_HARD_LIMIT, DEFAULT_MINOR_CEILING};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use std::collections::VecDeque;

// ---------------------------------------------------------------------------
// Genus functions
// ---------------------------------------------------------------------------

/// An arithmetic expression in n, used by the genus-function grammar.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    N,
    Const(BigRational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Ln(Box<Expr>),
}

impl Expr {
    fn contains_ln(&self) -> bool {
        match self {
            Expr::N | Expr::Const(_) => false,
            Expr::Neg(a) | Expr::Ln(a) => matches!(self, Expr::Ln(_)) || a.contains_ln(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.contains_ln() || b.contains_ln()
            }
        }
    }

    fn eval(&self, n: usize, terms: usize) -> Result<RatInterval> {
        Ok(match self {
            Expr::N => RatInterval::point(BigRational::from_integer(BigInt::from(n))),
            Expr::Const(c) => RatInterval::point(c.clone()),
            Expr::Neg(a) => a.eval(n, terms)?.neg(),
            Expr::Add(a, b) => a.eval(n, terms)?.add(&b.eval(n, terms)?),
            Expr::Sub(a, b) => a.eval(n, terms)?.add(&b.eval(n, terms)?.neg()),
            Expr::Mul(a, b) => a.eval(n, terms)?.mul(&b.eval(n, terms)?),
            Expr::Div(a, b) => a.eval(n, terms)?.div(&b.eval(n, terms)?)?,
            Expr::Ln(a) => {
                let inner = a.eval(n, terms)?;
                let lo = crate::formulas::ln_interval(&inner.lo, terms)?;
                let hi = crate::formulas::ln_interval(&inner.hi, terms)?;
                RatInterval { lo: lo.lo, hi: hi.hi }
            }
        })
    }
}

/// A genus function n -> g(n): a constant, an explicit table over n = 1..,
/// or the floor/ceiling of a closed-form expression (exact for polynomial
/// quotients; interval arithmetic with outward rounding where `ln` appears,
/// refusing to round when the interval straddles an integer).
#[derive(Debug, Clone, PartialEq)]
pub enum GenusFunction {
    Const(u64),
    Table(Vec<u64>),
    Floor(Expr),
    Ceil(Expr),
}

impl GenusFunction {
    pub fn parse(text: &str) -> Result<GenusFunction> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("const ") {
            let v = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad constant: {rest}")))?;
            return Ok(GenusFunction::Const(v));
        }
        if let Some(rest) = text.strip_prefix("table ") {
            let vals: std::result::Result<Vec<u64>, _> =
                rest.split(',').map(|t| t.trim().parse()).collect();
            let vals = vals.map_err(|_| Error::Parse(format!("bad table: {rest}")))?;
            if vals.is_empty() {
                return Err(Error::Parse("empty table".into()));
            }
            return Ok(GenusFunction::Table(vals));
        }
        if let Some(rest) = text.strip_prefix("floor ") {
            return Ok(GenusFunction::Floor(parse_expr(rest)?));
        }
        if let Some(rest) = text.strip_prefix("ceil ") {
            return Ok(GenusFunction::Ceil(parse_expr(rest)?));
        }
        Err(Error::Parse(format!(
            "expected \"const\", \"table\", \"floor\" or \"ceil\": {text}"
        )))
    }

    /// Evaluate at n >= 1. Negative closed-form values clamp to 0 (genus
    /// functions are nonnegative); a table is undefined past its length.
    pub fn eval(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::Precondition("genus functions start at n = 1".into()));
        }
        let clamp = |x: BigInt| -> u64 {
            if x.is_negative() {
                0
            } else {
                x.to_u64().unwrap_or(u64::MAX)
            }
        };
        match self {
            GenusFunction::Const(v) => Ok(*v),
            GenusFunction::Table(t) => t.get(n - 1).copied().ok_or_else(|| {
                Error::OutOfValidityRange {
                    name: "genus table".into(),
                    detail: format!("table has {} entries, asked for n = {n}", t.len()),
                }
            }),
            GenusFunction::Floor(e) | GenusFunction::Ceil(e) => {
                let take_ceil = matches!(self, GenusFunction::Ceil(_));
                let schedule: &[usize] =
                    if e.contains_ln() { &[16, 32, 64, 128] } else { &[4] };
                let mut last = None;
                for &terms in schedule {
                    let iv = e.eval(n, terms)?;
                    let rounded = if take_ceil { iv.ceil_exact() } else { iv.floor_exact() };
                    match rounded {
                        Ok(x) => return Ok(clamp(x)),
                        Err(err) => last = Some(err),
                    }
                }
                Err(last.expect("schedule is nonempty"))
            }
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let e = parse_sum(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("trailing input in expression: {text}")));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    N,
    Ln,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                i += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let whole: String = chars[start..i].iter().collect();
                let mut num = BigRational::from_integer(whole.parse::<BigInt>().unwrap());
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    let fstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == fstart {
                        return Err(Error::Parse(format!("bad decimal in: {text}")));
                    }
                    let frac: String = chars[fstart..i].iter().collect();
                    let den = BigInt::from(10u32).pow((i - fstart) as u32);
                    num += BigRational::new(frac.parse::<BigInt>().unwrap(), den);
                }
                toks.push(Tok::Num(num));
            }
            'n' => {
                toks.push(Tok::N);
                i += 1;
            }
            'l' if chars[i..].starts_with(&['l', 'n']) => {
                toks.push(Tok::Ln);
                i += 2;
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

fn parse_sum(toks: &[Tok], pos: &mut usize) -> Result<Expr> {
    let mut lhs = parse_product(toks, pos)?;
    while *pos < toks.len() {
        match toks[*pos] {
            Tok::Plus => {
                *pos += 1;
                lhs = Expr::Add(Box::new(lhs), Box::new(parse_product(toks, pos)?));
            }
            Tok::Minus => {
                *pos += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(parse_product(toks, pos)?));
            }
            _ => break,
        }
    }
    Ok(lhs)
}

fn parse_product(toks: &[Tok], pos: &mut usize) -> Result<Expr> {
    let mut lhs = parse_atom(toks, pos)?;
    while *pos < toks.len() {
        match toks[*pos] {
            Tok::Star => {
                *pos += 1;
                lhs = Expr::Mul(Box::new(lhs), Box::new(parse_atom(toks, pos)?));
            }
            Tok::Slash => {
                *pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(parse_atom(toks, pos)?));
            }
            _ => break,
        }
    }
    Ok(lhs)
}

fn parse_atom(toks: &[Tok], pos: &mut usize) -> Result<Expr> {
    if *pos >= toks.len() {
        return Err(Error::Parse("unexpected end of expression".into()));
    }
    let tok = toks[*pos].clone();
    *pos += 1;
    Ok(match tok {
        Tok::Num(v) => Expr::Const(v),
        Tok::N => Expr::N,
        Tok::Minus => Expr::Neg(Box::new(parse_atom(toks, pos)?)),
        Tok::Ln => Expr::Ln(Box::new(parse_atom(toks, pos)?)),
        Tok::LParen => {
            let inner = parse_sum(toks, pos)?;
            if *pos >= toks.len() || toks[*pos] != Tok::RParen {
                return Err(Error::Parse("missing closing parenthesis".into()));
            }
            *pos += 1;
            inner
        }
        other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
    })
}

// ---------------------------------------------------------------------------
// Class specifications and membership
// ---------------------------------------------------------------------------

/// The graph invariant a class bounds by its genus function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Minimum Euler genus over all surfaces.
    AnySurface,
    /// Minimum Euler genus over orientable surfaces.
    Orientable,
    /// Minimum Euler genus over nonorientable surfaces (0 for planar graphs
    /// by the sphere convention).
    Nonorientable,
    /// Both of the previous two at once.
    BothModes,
    /// Cycle rank.
    CycleRank,
    /// Excess (edges minus vertices, summed over non-tree components).
    Excess,
}

impl Family {
    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s {
            "E" => Family::AnySurface,
            "OE" => Family::Orientable,
            "NE" => Family::Nonorientable,
            "OE^NE" | "OE&NE" | "both" => Family::BothModes,
            "F" => Family::CycleRank,
            "XS" => Family::Excess,
            other => return Err(Error::Parse(format!("unknown family: {other}"))),
        })
    }
}

/// How the class is closed off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureMode {
    Plain,
    /// Every nonempty induced subgraph is in the plain class.
    Hereditary,
    /// Some single all-plus rotation system embeds every induced subgraph
    /// within the bound (orientable family only).
    CertifiedHereditary,
    /// Every minor is in the plain class.
    Minor,
    /// Every topological minor is in the plain class.
    TopologicalMinor,
}

impl ClosureMode {
    pub fn parse(s: &str) -> Result<ClosureMode> {
        Ok(match s {
            "plain" => ClosureMode::Plain,
            "hered" | "Hered" => ClosureMode::Hereditary,
            "chered" | "cHered" => ClosureMode::CertifiedHereditary,
            "minor" | "Minor" => ClosureMode::Minor,
            "tminor" | "tMinor" => ClosureMode::TopologicalMinor,
            other => return Err(Error::Parse(format!("unknown closure: {other}"))),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ClassSpec {
    pub family: Family,
    pub closure: ClosureMode,
    pub genus: GenusFunction,
}

/// The plain invariant of a family on a graph (exhaustive search for the
/// genus-valued families).
pub fn family_invariant(g: &Graph, family: Family, budget: u128) -> Result<usize> {
    match family {
        Family::CycleRank => Ok(g.cycle_rank()),
        Family::Excess => Ok(g.excess()),
        _ => {
            let p = embedding::genus_profile(g, budget)?;
            Ok(match family {
                Family::AnySurface => p.min_h,
                Family::Orientable => p.min_orientable_h,
                Family::Nonorientable => nonorientable_genus(&p),
                Family::BothModes => p.min_orientable_h.max(nonorientable_genus(&p)),
                _ => unreachable!(),
            })
        }
    }
}

/// Nonorientable genus with the sphere-counts-as-N0 convention: 0 for
/// planar graphs, otherwise the cheapest embedding with at least one
/// nonorientable component.
fn nonorientable_genus(p: &embedding::GenusProfile) -> usize {
    if p.min_orientable_h == 0 {
        0
    } else {
        p.min_nonorientable_h
            .expect("a nonplanar graph has a cycle, hence a nonorientable scheme")
    }
}

fn plain_member(g: &Graph, family: Family, genus: &GenusFunction, budget: u128) -> Result<bool> {
    if g.v() == 0 {
        return Ok(true);
    }
    Ok(family_invariant(g, family, budget)? as u64 <= genus.eval(g.v())?)
}

/// Exact class membership by exhaustive verification.
pub fn member(g: &Graph, spec: &ClassSpec, budget: u128) -> Result<bool> {
    match spec.closure {
        ClosureMode::Plain => plain_member(g, spec.family, &spec.genus, budget),
        ClosureMode::Hereditary => {
            if g.v() > 10 {
                return Err(Error::CeilingExceeded {
                    what: "hereditary subset exhaustion",
                    requested: g.v(),
                    limit: 10,
                });
            }
            for mask in 1u32..(1 << g.v()) {
                let w: Vec<Vertex> = (1..=g.v()).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                if !plain_member(&g.induced_subgraph(&w)?, spec.family, &spec.genus, budget)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ClosureMode::CertifiedHereditary => {
            if spec.family != Family::Orientable {
                return Err(Error::Precondition(
                    "certified-hereditary closure is defined for the orientable family only"
                        .into(),
                ));
            }
            certified_hereditary(g, &spec.genus, budget)
        }
        ClosureMode::Minor => {
            let minors = g.enumerate_minors(DEFAULT_MINOR_CEILING)?;
            for m in minors.values() {
                if !plain_member(m, spec.family, &spec.genus, budget)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ClosureMode::TopologicalMinor => {
            for m in enumerate_topological_minors(g, 18)?.values() {
                if !plain_member(m, spec.family, &spec.genus, budget)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Does some all-plus rotation system of G embed every nonempty induced
/// subgraph within the genus bound?
fn certified_hereditary(g: &Graph, genus: &GenusFunction, budget: u128) -> Result<bool> {
    let n = g.v();
    if n > 10 {
        return Err(Error::CeilingExceeded {
            what: "certified-hereditary subset exhaustion",
            requested: n,
            limit: 10,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    // Bounds per subset size, precomputed; an error (table too short) is a
    // genuine contract violation.
    let mut bound = vec![0u64; n + 1];
    for k in 1..=n {
        bound[k] = genus.eval(k)?;
    }
    let darts_at: Vec<Vec<usize>> = (1..=n).map(|v| g.darts_at(v)).collect();
    let radices: Vec<u64> = darts_at
        .iter()
        .map(|d| {
            (1..d.len().max(1) as u64).product::<u64>().max(1)
        })
        .collect();
    let total: u128 = radices.iter().map(|&r| r as u128).product();
    let estimated = total
        .saturating_mul(1 << n)
        .saturating_mul(4 * g.e().max(1) as u128);
    if estimated > budget {
        return Err(Error::BudgetExceeded { estimated, budget });
    }
    let found = (0..total as u64).into_par_iter().any(|mut idx| {
        let mut rotations = Vec::with_capacity(n);
        for (v, darts) in darts_at.iter().enumerate() {
            let local = idx % radices[v];
            idx /= radices[v];
            if darts.is_empty() {
                rotations.push(Vec::new());
                continue;
            }
            let mut rot = vec![darts[0]];
            rot.extend(unrank(local, &darts[1..]));
            rotations.push(rot);
        }
        let scheme = EmbeddingScheme::new(g.clone(), rotations, vec![1; g.e()])
            .expect("enumerated rotations are valid");
        (1u32..(1 << n)).all(|mask| {
            let w: Vec<Vertex> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
            let induced = scheme.induced(&w).expect("subset of vertices");
            induced.euler_genus() as u64 <= bound[w.len()]
        })
    });
    Ok(found)
}

fn unrank(mut idx: u64, items: &[usize]) -> Vec<usize> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    for i in (1..=pool.len()).rev() {
        let f: u64 = (1..i as u64).product::<u64>().max(1);
        let j = (idx / f) as usize;
        idx %= f;
        out.push(pool.remove(j));
    }
    out
}

/// All topological minors of a simple graph up to isomorphism: closure
/// under edge deletion, vertex deletion, and suppression of a degree-2
/// vertex whose neighbours are distinct and non-adjacent (simple-safe; a
/// bare cycle therefore bottoms out at the triangle).
pub fn enumerate_topological_minors(
    g: &Graph,
    edge_ceiling: usize,
) -> Result<std::collections::BTreeMap<u64, Graph>> {
    let g = g.simplify();
    if g.e() > edge_ceiling {
        return Err(Error::CeilingExceeded {
            what: "topological-minor enumeration",
            requested: g.e(),
            limit: edge_ceiling,
        });
    }
    let canon = |h: &Graph| -> Result<u64> {
        let key = h.canonical_form(CANON_HARD_LIMIT)?;
        Ok((h.v() as u64) << 56 | key)
    };
    let mut out = std::collections::BTreeMap::new();
    let mut queue = VecDeque::new();
    out.insert(canon(&g)?, g.clone());
    queue.push_back(g);
    while let Some(cur) = queue.pop_front() {
        let mut children = Vec::new();
        for e in 1..=cur.e() {
            children.push(cur.delete_edge(e)?);
        }
        if cur.v() >= 2 {
            for v in 1..=cur.v() {
                children.push(cur.delete_vertex(v));
            }
        }
        for v in 1..=cur.v() {
            if cur.degree(v) != 2 {
                continue;
            }
            let nb: Vec<Vertex> = cur
                .edges()
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .map(|&(a, b)| if a == v { b } else { a })
                .collect();
            let (a, b) = (nb[0], nb[1]);
            if a == b || a == v || b == v {
                continue;
            }
            if cur
                .edges()
                .iter()
                .any(|&(x, y)| (x.min(y), x.max(y)) == (a.min(b), a.max(b)))
            {
                continue;
            }
            let h = cur.delete_vertex(v);
            let fix = |x: Vertex| if x > v { x - 1 } else { x };
            let mut edges = h.edges().to_vec();
            edges.push((fix(a), fix(b)));
            children.push(Graph::new(h.v(), edges, true)?);
        }
        for h in children {
            if h.v() == 0 {
                continue;
            }
            let key = canon(&h)?;
            if !out.contains_key(&key) {
                out.insert(key, h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The K5 certified-hereditary scan
// ---------------------------------------------------------------------------

/// Result of scanning all 1296 rotation systems of K5 with the rotation at
/// vertex 1 pinned to (2 3 4 5).
#[derive(Debug, Clone)]
pub struct K5CheredReport {
    pub examined: usize,
    /// Schemes in which every one of the five 4-subsets embeds planarly;
    /// a certificate would live here, so this must stay 0.
    pub certifying: usize,
    /// Neighbour rotations (vertices 2..5) of the schemes whose four
    /// drop-one subsets {1..5}\{i}, i = 2..5, are all planar.
    pub forced: Vec<[Vec<Vertex>; 4]>,
    /// For each forced scheme, the walk lengths of the induced embedding on
    /// {2,3,4,5} (a length-4 facial walk certifies non-planarity, since a
    /// planar K4 embedding is a triangulation).
    pub forced_walk_lengths: Vec<Vec<usize>>,
}

pub fn check_k5_chered() -> K5CheredReport {
    let g = Graph::complete(5);
    let mut report = K5CheredReport {
        examined: 0,
        certifying: 0,
        forced: Vec::new(),
        forced_walk_lengths: Vec::new(),
    };
    // Rotations as neighbour orders; vertex 1 pinned, vertices 2..5 fix
    // neighbour 1 first and permute the remaining three (all 6 cyclic
    // orders each).
    let rest: Vec<Vec<Vertex>> = (2..=5)
        .map(|v| (2..=5).filter(|&u| u != v).collect())
        .collect();
    let perms3: Vec<Vec<usize>> = {
        let mut p = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        p.push(vec![a, b, c]);
                    }
                }
            }
        }
        p
    };
    for i2 in 0..6 {
        for i3 in 0..6 {
            for i4 in 0..6 {
                for i5 in 0..6 {
                    let picks = [i2, i3, i4, i5];
                    let mut orders: Vec<Vec<Vertex>> = vec![vec![2, 3, 4, 5]];
                    for (vi, &pi) in picks.iter().enumerate() {
                        let mut ord = vec![1];
                        for &k in &perms3[pi] {
                            ord.push(rest[vi][k]);
                        }
                        orders.push(ord);
                    }
                    let scheme =
                        EmbeddingScheme::from_neighbor_rotations(g.clone(), &orders)
                            .expect("valid K5 rotations");
                    report.examined += 1;
                    let planar_drop: Vec<bool> = (1..=5)
                        .map(|i| {
                            let w: Vec<Vertex> = (1..=5).filter(|&v| v != i).collect();
                            scheme.induced(&w).expect("4-subset").euler_genus() == 0
                        })
                        .collect();
                    if planar_drop.iter().all(|&p| p) {
                        report.certifying += 1;
                    }
                    if planar_drop[1..].iter().all(|&p| p) {
                        report.forced.push([
                            orders[1].clone(),
                            orders[2].clone(),
                            orders[3].clone(),
                            orders[4].clone(),
                        ]);
                        let induced = scheme.induced(&[2, 3, 4, 5]).expect("drop vertex 1");
                        let mut lens: Vec<usize> = induced
                            .face_trace()
                            .walks
                            .iter()
                            .map(|w| w.len())
                            .collect();
                        lens.sort_unstable();
                        report.forced_walk_lengths.push(lens);
                    }
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Complete-graph genus values and extension counting
// ---------------------------------------------------------------------------

/// Minimum Euler genus of the complete graph K_n: orientable
/// 2*ceil((n-3)(n-4)/12), nonorientable ceil((n-3)(n-4)/6) except that the
/// value is 3 at n = 7; both 0 below n = 3.
pub fn g_star(n: usize, orientable: bool) -> usize {
    if n < 3 {
        return 0;
    }
    let p = ((n as i64 - 3) * (n as i64 - 4)).max(0) as u64;
    if orientable {
        (2 * p.div_ceil(12)) as usize
    } else if n == 7 {
        3
    } else {
        p.div_ceil(6) as usize
    }
}

/// Which minimum genus an extension must respect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusMode {
    Any,
    Orientable,
    Nonorientable,
}

fn mode_genus(g: &Graph, mode: GenusMode, budget: u128) -> Result<usize> {
    let p = embedding::genus_profile(g, budget)?;
    Ok(match mode {
        GenusMode::Any => p.min_h,
        GenusMode::Orientable => p.min_orientable_h,
        GenusMode::Nonorientable => nonorientable_genus(&p),
    })
}

/// Number of graphs on [v(G)+1] that restrict to G on [v(G)] and have
/// minimum genus (in the given mode) at most h: one candidate per subset of
/// [v(G)] as the new vertex's neighbourhood.
pub fn ext_count(
    g: &Graph,
    h: usize,
    mode: GenusMode,
    budget: u128,
    cache: &mut PlanarityCache,
) -> Result<usize> {
    let n = g.v();
    let mut count = 0;
    for mask in 0u32..(1 << n) {
        let nb: Vec<Vertex> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let ext = g.extend_with_vertex(&nb)?;
        let ok = if h == 0 {
            // Genus 0 in every mode means planar (the sphere convention
            // covers the nonorientable mode).
            cache.is_planar(&ext, budget)?
        } else {
            mode_genus(&ext, mode, budget)? <= h
        };
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// Minimum of ext_count over all graphs on [n] whose minimum genus (in the
/// given mode) is at most h.
pub fn minext(n: usize, h: usize, mode: GenusMode, budget: u128) -> Result<usize> {
    if n == 0 || n > 5 {
        return Err(Error::CeilingExceeded { what: "minext enumeration", requested: n, limit: 5 });
    }
    let mut cache = PlanarityCache::new();
    let mut best: Option<usize> = None;
    for g in crate::graph::enumerate_graphs(n, 7, None)? {
        let in_class = if h == 0 {
            cache.is_planar(&g, budget)?
        } else {
            mode_genus(&g, mode, budget)? <= h
        };
        if !in_class {
            continue;
        }
        let c = ext_count(&g, h, mode, budget, &mut cache)?;
        best = Some(best.map_or(c, |b| b.min(c)));
    }
    best.ok_or_else(|| Error::Precondition(format!("no graph on [{n}] lies in the class")))
}

// ---------------------------------------------------------------------------
// Explicit generators
// ---------------------------------------------------------------------------

/// Subdivide each edge of a cubic graph H on [k] into a path: H's 3k/2
/// edges are taken in lexicographic order oriented from the smaller
/// endpoint; the first s labels of `order` (a permutation of k+1..n, with
/// s = floor(2(n-k)/(3k)) >= 1) subdivide the first edge, the next s the
/// second, and all remaining labels go into the last edge. The result has
/// excess k/2, and girth >= 3s+3 when the insertion is uniform.
pub fn generate_zk(n: usize, k: usize, h: &Graph, order: &[Vertex]) -> Result<Graph> {
    if k % 2 != 0 || k == 0 {
        return Err(Error::Precondition(format!("k = {k} must be a positive even integer")));
    }
    if h.v() != k || h.degrees().iter().any(|&d| d != 3) {
        return Err(Error::Precondition("H must be a cubic graph on [k]".into()));
    }
    let m = 3 * k / 2;
    if n <= k {
        return Err(Error::Precondition("need n > k labels to insert".into()));
    }
    let s = 2 * (n - k) / (3 * k);
    if s < 1 {
        return Err(Error::Precondition(format!(
            "s = floor(2(n-k)/(3k)) = {s} must be at least 1"
        )));
    }
    let mut expected: Vec<Vertex> = ((k + 1)..=n).collect();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != expected {
        return Err(Error::Precondition(
            "order must be a permutation of the labels k+1..n".into(),
        ));
    }
    expected.clear();
    let mut hedges: Vec<(Vertex, Vertex)> = h
        .edges()
        .iter()
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    hedges.sort_unstable();
    let mut edges = Vec::new();
    let mut pos = 0;
    for (i, &(u, v)) in hedges.iter().enumerate() {
        let take = if i + 1 == m { order.len() - pos } else { s };
        let block = &order[pos..pos + take];
        pos += take;
        let mut prev = u;
        for &lab in block {
            edges.push((prev, lab));
            prev = lab;
        }
        edges.push((prev, v));
    }
    let out = Graph::new(n, edges, true)?;
    debug_assert_eq!(out.excess(), k / 2);
    Ok(out)
}

/// Blocks of consecutive labels of size t (floor(n/t) of them, plus a
/// remainder block), an arbitrary connected graph on each, and the smallest
/// label of each block joined in a path following `order` (a permutation of
/// the block indices, 0-based).
pub fn generate_block_path(
    n: usize,
    t: usize,
    parts: &[Graph],
    order: &[usize],
) -> Result<Graph> {
    if t == 0 || t > n {
        return Err(Error::Precondition(format!("need 1 <= t <= n, got t = {t}, n = {n}")));
    }
    let q = n / t;
    let u = n - q * t;
    let p = q + usize::from(u > 0);
    if parts.len() != p {
        return Err(Error::Precondition(format!("expected {p} part graphs, got {}", parts.len())));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..p).collect::<Vec<_>>() {
        return Err(Error::Precondition("order must be a permutation of the part indices".into()));
    }
    let mut edges = Vec::new();
    for (i, part) in parts.iter().enumerate() {
        let size = if i < q { t } else { u };
        if part.v() != size {
            return Err(Error::Precondition(format!(
                "part {i} must have {size} vertices, has {}",
                part.v()
            )));
        }
        if !part.is_connected() {
            return Err(Error::Precondition(format!("part {i} must be connected")));
        }
        let base = i * t;
        for &(a, b) in part.edges() {
            edges.push((base + a, base + b));
        }
    }
    for w in order.windows(2) {
        edges.push((w[0] * t + 1, w[1] * t + 1));
    }
    Graph::new(n, edges, true)
}

/// Verify that every topological minor H of a subcubic graph satisfies the
/// certificate: planar when v(H) <= 5, excess(H) <= g(v(H)) otherwise.
pub fn subcubic_tminor_check(g: &Graph, genus: &GenusFunction, budget: u128) -> Result<bool> {
    if g.degrees().iter().any(|&d| d > 3) {
        return Err(Error::Precondition("graph must be subcubic".into()));
    }
    let minors = enumerate_topological_minors(g, 18)?;
    let mut cache = PlanarityCache::new();
    for m in minors.values() {
        let ok = if m.v() <= 5 {
            cache.is_planar(m, budget)?
        } else {
            m.excess() as u64 <= genus.eval(m.v())?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn table(vals: &[u64]) -> GenusFunction {
        GenusFunction::Table(vals.to_vec())
    }

    #[test]
    fn genus_function_grammar() {
        assert_eq!(GenusFunction::parse("const 2").unwrap().eval(9).unwrap(), 2);
        let t = GenusFunction::parse("table 0,0,0,0,2").unwrap();
        assert_eq!(t.eval(4).unwrap(), 0);
        assert_eq!(t.eval(5).unwrap(), 2);
        assert!(t.eval(6).is_err());
        let f = GenusFunction::parse("floor (n*(n-3))/6").unwrap();
        assert_eq!(f.eval(7).unwrap(), 4);
        assert_eq!(f.eval(3).unwrap(), 0);
        let c = GenusFunction::parse("ceil (n*n-7*n+12)/6").unwrap();
        // (n-3)(n-4)/6 rounded up: 2 at n = 7... the polynomial expands.
        assert_eq!(c.eval(7).unwrap(), 2);
        let l = GenusFunction::parse("floor 0.5*n/ln n").unwrap();
        // 0.5*100/ln 100 = 10.857..., floor 10.
        assert_eq!(l.eval(100).unwrap(), 10);
        assert_eq!(l.eval(3).unwrap(), 1);
    }

    #[test]
    fn plain_membership_examples() {
        let forests = ClassSpec {
            family: Family::CycleRank,
            closure: ClosureMode::Plain,
            genus: GenusFunction::Const(0),
        };
        assert!(member(&Graph::path(5), &forests, DEFAULT_BUDGET).unwrap());
        assert!(!member(&Graph::cycle(3), &forests, DEFAULT_BUDGET).unwrap());
        // K5 plus a pendant vertex: in the plain class with g = (0,0,0,0,0,2)
        // but not in its hereditary closure (the induced K5 fails at n = 5).
        let g = Graph::complete(5).extend_with_vertex(&[1]).unwrap();
        let spec = ClassSpec {
            family: Family::AnySurface,
            closure: ClosureMode::Plain,
            genus: table(&[0, 0, 0, 0, 0, 2]),
        };
        assert!(member(&g, &spec, DEFAULT_BUDGET).unwrap());
        let spec = ClassSpec { closure: ClosureMode::Hereditary, ..spec };
        assert!(!member(&g, &spec, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn k5_hereditary_but_not_certified() {
        let g = Graph::complete(5);
        let spec = ClassSpec {
            family: Family::Orientable,
            closure: ClosureMode::Hereditary,
            genus: table(&[0, 0, 0, 0, 2]),
        };
        assert!(member(&g, &spec, DEFAULT_BUDGET).unwrap());
        let spec = ClassSpec { closure: ClosureMode::CertifiedHereditary, ..spec };
        assert!(!member(&g, &spec, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn k5_minor_membership() {
        let spec = ClassSpec {
            family: Family::AnySurface,
            closure: ClosureMode::Minor,
            genus: table(&[0, 0, 0, 0, 1]),
        };
        assert!(member(&Graph::complete(5), &spec, DEFAULT_BUDGET).unwrap());
        let spec = ClassSpec { genus: table(&[0, 0, 0, 0, 0]), ..spec };
        assert!(!member(&Graph::complete(5), &spec, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn k5_chered_scan() {
        let report = check_k5_chered();
        assert_eq!(report.examined, 1296);
        assert_eq!(report.certifying, 0);
        // Exactly one scheme has all four drop-one
        // subsets (dropping 2..5) planar.
        assert_eq!(report.forced.len(), 1);
        assert_eq!(
            report.forced[0],
            [
                vec![1, 5, 4, 3],
                vec![1, 2, 5, 4],
                vec![1, 3, 2, 5],
                vec![1, 4, 3, 2],
            ]
        );
        // Its induced embedding on {2,3,4,5} has a facial walk of length 4.
        assert!(report.forced_walk_lengths[0].contains(&4));
    }

    #[test]
    fn complete_graph_genus_values() {
        assert_eq!(g_star(7, true), 2);
        assert_eq!(g_star(7, false), 3);
        assert_eq!(g_star(4, true), 0);
        assert_eq!(g_star(4, false), 0);
        assert_eq!(g_star(5, true), 2);
        assert_eq!(g_star(5, false), 1);
        assert_eq!(g_star(6, false), 1);
    }

    #[test]
    fn extension_counts() {
        let mut cache = PlanarityCache::new();
        assert_eq!(
            ext_count(&Graph::complete(3), 0, GenusMode::Any, DEFAULT_BUDGET, &mut cache)
                .unwrap(),
            8
        );
        assert_eq!(minext(4, 0, GenusMode::Any, DEFAULT_BUDGET).unwrap(), 15);
        assert!(minext(4, 0, GenusMode::Any, DEFAULT_BUDGET).unwrap() >= 8);
    }

    #[test]
    fn zk_generator() {
        let order: Vec<Vertex> = (5..=16).collect();
        let g = generate_zk(16, 4, &Graph::complete(4), &order).unwrap();
        assert_eq!(g.v(), 16);
        assert_eq!(g.excess(), 2);
        assert!(g.is_connected());
        // Uniform insertion (s = 2 everywhere): girth at least 3s+3 = 9.
        assert!(g.girth().unwrap() >= 9);
        // Injectivity in the order argument.
        let mut order2 = order.clone();
        order2.swap(0, 5);
        let g2 = generate_zk(16, 4, &Graph::complete(4), &order2).unwrap();
        assert_ne!(g.edges(), g2.edges());
    }

    #[test]
    fn block_path_generator() {
        let tri = Graph::cycle(3);
        let g = generate_block_path(6, 3, &[tri.clone(), tri.clone()], &[0, 1]).unwrap();
        assert_eq!(g.v(), 6);
        assert_eq!(g.e(), 7);
        assert!(g.is_connected());
        assert!(g.edges().contains(&(1, 4)));
        // Remainder block.
        let g = generate_block_path(7, 3, &[tri.clone(), tri, Graph::edgeless(1)], &[2, 0, 1])
            .unwrap();
        assert!(g.is_connected());
        assert_eq!(g.v(), 7);
    }

    #[test]
    fn subcubic_topological_minor_checks() {
        // The g of the subcubic fact: 0 up to n = 5, floor(n/2) beyond.
        let g10 = GenusFunction::Table(
            (1..=10).map(|n| if n <= 5 { 0 } else { n as u64 / 2 }).collect(),
        );
        assert!(subcubic_tminor_check(&Graph::complete(4), &g10, DEFAULT_BUDGET).unwrap());
        assert!(
            subcubic_tminor_check(&Graph::complete_bipartite(3, 3), &g10, DEFAULT_BUDGET)
                .unwrap()
        );
        assert!(subcubic_tminor_check(&Graph::petersen(), &g10, DEFAULT_BUDGET).unwrap());
        // With an all-zero bound, K3,3 itself fails (it is not planar).
        let zero = GenusFunction::Const(0);
        assert!(
            !subcubic_tminor_check(&Graph::complete_bipartite(3, 3), &zero, DEFAULT_BUDGET)
                .unwrap()
        );
    }

    #[test]
    fn minor_closure_equals_planarity_iff_zero_at_5_and_6() {
        // g(5) = g(6) = 0: Minor(E^g) membership coincides with planarity
        // for n <= 6 (checked here on a spot sample; exhaustively in the
        // integration tests).
        let zero6 = table(&[0, 0, 0, 0, 0, 0]);
        let spec = ClassSpec {
            family: Family::AnySurface,
            closure: ClosureMode::Minor,
            genus: zero6,
        };
        assert!(member(&Graph::complete(4), &spec, DEFAULT_BUDGET).unwrap());
        assert!(!member(&Graph::complete(5), &spec, DEFAULT_BUDGET).unwrap());
        assert!(!member(&Graph::complete_bipartite(3, 3), &spec, DEFAULT_BUDGET).unwrap());
    }
}

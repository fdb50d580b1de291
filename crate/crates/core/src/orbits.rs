//! The matrix encoding of orbits: an `n × n` matrix of non-negative integers
//! with entry sum `r` is a basis element `e_A` of the 0-Schur algebra
//! `S_0(n, r)`. This module holds the purely combinatorial layer: generator
//! matrices, open/closed orbits, block genericity, corner sums and the
//! degeneration order, and the block-diagonal idempotent family `o_{λ,m}`.

use crate::combinatorics::{binomial, Composition, Decomposition};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An `n × n` non-negative integer matrix, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl OrbitMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|row| row.len() != n) {
            return Err(Error::Invalid {
                what: "matrix",
                detail: format!("expected square rows, got {:?}", rows),
            });
        }
        Ok(OrbitMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(lambda: &Composition) -> Self {
        let n = lambda.n();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            entries[i * n + i] = lambda.part(i);
        }
        OrbitMatrix { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        OrbitMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.entries.iter().sum()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set_entry(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v;
    }

    /// Row-sum vector `ro(A)`.
    pub fn row_vector(&self) -> Composition {
        let parts = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).sum())
            .collect();
        Composition::new(parts)
    }

    /// Column-sum vector `co(A)`.
    pub fn col_vector(&self) -> Composition {
        let parts = (0..self.n)
            .map(|j| (0..self.n).map(|i| self.entry(i, j)).sum())
            .collect();
        Composition::new(parts)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entry(i, j) == 0))
    }

    pub fn transpose(&self) -> OrbitMatrix {
        let mut out = OrbitMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set_entry(j, i, self.entry(i, j));
            }
        }
        out
    }

    /// Embed as the top-left block of an `m × m` matrix, zeros elsewhere.
    pub fn zero_pad(&self, m: usize) -> OrbitMatrix {
        assert!(m >= self.n);
        let mut out = OrbitMatrix::zero(m);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set_entry(i, j, self.entry(i, j));
            }
        }
        out
    }

    /// Add the identity matrix (each diagonal entry +1).
    pub fn plus_identity(&self) -> OrbitMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            out.set_entry(i, i, out.entry(i, i) + 1);
        }
        out
    }

    /// Subtract the identity matrix; `None` if some diagonal entry is zero.
    pub fn minus_identity(&self) -> Option<OrbitMatrix> {
        let mut out = self.clone();
        for i in 0..self.n {
            let d = out.entry(i, i);
            if d == 0 {
                return None;
            }
            out.set_entry(i, i, d - 1);
        }
        Some(out)
    }

    pub fn has_zero_diagonal_entry(&self) -> bool {
        (0..self.n).any(|i| self.entry(i, i) == 0)
    }
}

impl fmt::Display for OrbitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrbitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl FromStr for OrbitMatrix {
    type Err = Error;

    /// Accepts `0,0,1;0,0,2;1,2,0` and the JSON form `[[0,0,1],[0,0,2],[1,2,0]]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            return parse_json_matrix(s);
        }
        let mut rows = Vec::new();
        for row in s.split(';') {
            let mut entries = Vec::new();
            for tok in row.split(',') {
                let tok = tok.trim();
                entries.push(tok.parse::<u32>().map_err(|_| Error::Parse {
                    pos: 0,
                    token: tok.to_string(),
                    message: "expected a non-negative integer entry".into(),
                })?);
            }
            rows.push(entries);
        }
        OrbitMatrix::from_rows(rows)
    }
}

fn parse_json_matrix(s: &str) -> Result<OrbitMatrix> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            token: s.chars().take(8).collect(),
            message: "unbalanced brackets in matrix".into(),
        })?;
    let mut rows = Vec::new();
    let mut depth = 0usize;
    let mut row_start = None;
    for (i, c) in inner.char_indices() {
        match c {
            '[' => {
                depth += 1;
                if depth == 1 {
                    row_start = Some(i + 1);
                }
            }
            ']' => {
                if depth == 0 {
                    return Err(Error::Parse {
                        pos: i,
                        token: "]".into(),
                        message: "unbalanced brackets in matrix".into(),
                    });
                }
                depth -= 1;
                if depth == 0 {
                    let body = &inner[row_start.unwrap()..i];
                    let mut entries = Vec::new();
                    for tok in body.split(',') {
                        let tok = tok.trim();
                        if tok.is_empty() {
                            continue;
                        }
                        entries.push(tok.parse::<u32>().map_err(|_| Error::Parse {
                            pos: i,
                            token: tok.to_string(),
                            message: "expected a non-negative integer entry".into(),
                        })?);
                    }
                    rows.push(entries);
                }
            }
            _ => {}
        }
    }
    OrbitMatrix::from_rows(rows)
}

/// One of the two non-diagonal generator families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GeneratorKind {
    E,
    F,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::E => write!(f, "e"),
            GeneratorKind::F => write!(f, "f"),
        }
    }
}

/// The orbit `e_{i,λ}`: column vector `λ`, single off-diagonal 1 at `(i, i+1)`
/// (1-based `i`), diagonal completing the column sums.
pub fn generator_e(i: usize, lambda: &Composition) -> Result<OrbitMatrix> {
    let n = lambda.n();
    assert!(i >= 1 && i < n, "generator index out of range");
    if lambda.part(i) == 0 {
        return Err(Error::InfeasibleGenerator {
            gen: format!("e{}", i),
            lambda: lambda.to_string(),
            column: i + 1,
        });
    }
    let mut a = OrbitMatrix::diagonal(lambda);
    a.set_entry(i - 1, i, 1);
    a.set_entry(i, i, lambda.part(i) - 1);
    Ok(a)
}

/// The orbit `f_{j,λ}`: column vector `λ`, single off-diagonal 1 at `(j+1, j)`.
pub fn generator_f(j: usize, lambda: &Composition) -> Result<OrbitMatrix> {
    let n = lambda.n();
    assert!(j >= 1 && j < n, "generator index out of range");
    if lambda.part(j - 1) == 0 {
        return Err(Error::InfeasibleGenerator {
            gen: format!("f{}", j),
            lambda: lambda.to_string(),
            column: j,
        });
    }
    let mut a = OrbitMatrix::diagonal(lambda);
    a.set_entry(j, j - 1, 1);
    a.set_entry(j - 1, j - 1, lambda.part(j - 1) - 1);
    Ok(a)
}

/// The diagonal idempotent orbit `k_λ`.
pub fn generator_k(lambda: &Composition) -> OrbitMatrix {
    OrbitMatrix::diagonal(lambda)
}

pub fn generator_orbit(kind: GeneratorKind, i: usize, lambda: &Composition) -> Result<OrbitMatrix> {
    match kind {
        GeneratorKind::E => generator_e(i, lambda),
        GeneratorKind::F => generator_f(i, lambda),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExtremeKind {
    Open,
    Closed,
}

/// The unique open (rows paired descending) or closed (rows paired ascending)
/// orbit with row vector `λ` and column vector `μ`: pair the multiset of row
/// labels against the ascending multiset of column labels and count pairs.
pub fn extreme_orbit(
    kind: ExtremeKind,
    lambda: &Composition,
    mu: &Composition,
) -> Result<OrbitMatrix> {
    if lambda.n() != mu.n() {
        return Err(Error::MismatchedN {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    if lambda.r() != mu.r() {
        return Err(Error::MismatchedR {
            left: lambda.r(),
            right: mu.r(),
        });
    }
    let n = lambda.n();
    let mut rows: Vec<usize> = Vec::with_capacity(lambda.r() as usize);
    for i in 0..n {
        for _ in 0..lambda.part(i) {
            rows.push(i);
        }
    }
    match kind {
        ExtremeKind::Open => rows.reverse(),
        ExtremeKind::Closed => {}
    }
    let mut cols: Vec<usize> = Vec::with_capacity(mu.r() as usize);
    for j in 0..n {
        for _ in 0..mu.part(j) {
            cols.push(j);
        }
    }
    let mut a = OrbitMatrix::zero(n);
    for (i, j) in rows.into_iter().zip(cols) {
        a.set_entry(i, j, a.entry(i, j) + 1);
    }
    Ok(a)
}

pub fn open_orbit(lambda: &Composition, mu: &Composition) -> Result<OrbitMatrix> {
    extreme_orbit(ExtremeKind::Open, lambda, mu)
}

pub fn closed_orbit(lambda: &Composition, mu: &Composition) -> Result<OrbitMatrix> {
    extreme_orbit(ExtremeKind::Closed, lambda, mu)
}

/// Generic: every 2×2 submatrix has at least one zero diagonal entry.
/// Characterizes open orbits.
pub fn is_generic(a: &OrbitMatrix) -> bool {
    submatrix_generic(a, 0, a.n(), 0, a.n())
}

/// Genericity of the submatrix on rows `[r0, r1)` × columns `[c0, c1)`.
pub fn submatrix_generic(a: &OrbitMatrix, r0: usize, r1: usize, c0: usize, c1: usize) -> bool {
    // scan NW entries against SE entries
    for i in r0..r1 {
        for s in c0..c1 {
            if a.entry(i, s) == 0 {
                continue;
            }
            for j in i + 1..r1 {
                for t in s + 1..c1 {
                    if a.entry(j, t) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Rows,
    Columns,
}

/// Block genericity with respect to a decomposition: each block of `m_i`
/// consecutive columns (or rows) must be generic as a full-height submatrix.
pub fn block_generic(a: &OrbitMatrix, axis: Axis, m: &Decomposition) -> bool {
    assert_eq!(a.n(), m.n(), "block_generic needs matching n");
    let n = a.n();
    m.blocks().into_iter().all(|range| match axis {
        Axis::Columns => submatrix_generic(a, 0, n, range.start, range.end),
        Axis::Rows => submatrix_generic(a, range.start, range.end, 0, n),
    })
}

/// Closed: every 2×2 submatrix has at least one zero anti-diagonal entry.
pub fn is_closed(a: &OrbitMatrix) -> bool {
    let n = a.n();
    for i in 0..n {
        for t in 0..n {
            if a.entry(i, t) == 0 {
                continue;
            }
            // an anti-diagonal partner needs j > i and s < t
            for j in i + 1..n {
                for s in 0..t {
                    if a.entry(j, s) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// North-east and south-west corner sums at the 1-based position `(s, t)`.
pub fn corner_sums(a: &OrbitMatrix, s: usize, t: usize) -> (u32, u32) {
    let n = a.n();
    assert!(s >= 1 && s <= n && t >= 1 && t <= n);
    let mut ne = 0u32;
    let mut sw = 0u32;
    for x in 1..=n {
        for y in 1..=n {
            if x <= s && y >= t {
                ne += a.entry(x - 1, y - 1);
            }
            if x >= s && y <= t {
                sw += a.entry(x - 1, y - 1);
            }
        }
    }
    (ne, sw)
}

/// Degeneration order `e_A ≤ e_B`: `e_B` lies in the closure of `e_A`.
/// Combinatorially, every corner sum of `B` is bounded by the one of `A`.
/// Mismatched margins yield `false` rather than an error, so poset queries
/// compose.
pub fn degenerates_to(a: &OrbitMatrix, b: &OrbitMatrix) -> bool {
    if a.n() != b.n() {
        return false;
    }
    if a.row_vector() != b.row_vector() || a.col_vector() != b.col_vector() {
        return false;
    }
    let n = a.n();
    for s in 1..=n {
        for t in 1..=n {
            let (a_ne, a_sw) = corner_sums(a, s, t);
            let (b_ne, b_sw) = corner_sums(b, s, t);
            if b_ne > a_ne || b_sw > a_sw {
                return false;
            }
        }
    }
    true
}

/// The block-diagonal idempotent orbit `o_{λ,m}`: block `i` is the open orbit
/// of the `i`-th block of `λ` against itself.
pub fn idempotent_orbit(lambda: &Composition, m: &Decomposition) -> OrbitMatrix {
    assert_eq!(lambda.n(), m.n(), "idempotent_orbit needs matching n");
    let mut a = OrbitMatrix::zero(lambda.n());
    for range in m.blocks() {
        let block_parts: Vec<u32> = lambda.parts()[range.clone()].to_vec();
        let block_lambda = Composition::new(block_parts);
        let block = open_orbit(&block_lambda, &block_lambda).expect("same margins");
        for i in 0..block.n() {
            for j in 0..block.n() {
                a.set_entry(range.start + i, range.start + j, block.entry(i, j));
            }
        }
    }
    a
}

/// Recognize an idempotent orbit. Returns `(λ, m)` with the coarsest valid
/// `m` (fewest blocks, greedy maximal blocks from the left) when
/// `A = o_{λ,m}`, `None` otherwise.
pub fn classify_idempotent(a: &OrbitMatrix) -> Option<(Composition, Decomposition)> {
    let lambda = a.row_vector();
    if lambda != a.col_vector() {
        return None;
    }
    let n = a.n();
    // cuts with no nonzero entry crossing them
    let valid_cut = |c: usize| -> bool {
        for i in 0..c {
            for j in c..n {
                if a.entry(i, j) != 0 || a.entry(j, i) != 0 {
                    return false;
                }
            }
        }
        true
    };
    let mut cuts = Vec::new();
    let mut start = 0usize;
    while start < n {
        // farthest end with a generic diagonal block and a valid cut (or n)
        let mut chosen = None;
        for end in (start + 1..=n).rev() {
            if (end == n || valid_cut(end)) && submatrix_generic(a, start, end, start, end) {
                chosen = Some(end);
                break;
            }
        }
        let end = chosen?;
        if end < n {
            cuts.push(end);
        }
        start = end;
    }
    let m = Decomposition::from_boundaries(n, &cuts);
    // greedy blocks are generic and block-diagonal, so this must hold
    debug_assert_eq!(idempotent_orbit(&lambda, &m), *a);
    Some((lambda, m))
}

/// Hasse diagram of the degeneration order restricted to the distinct
/// idempotent orbits `{o_{λ,m}}`. Edges are covering pairs `(lower, upper)`.
pub struct IdempotentHasse {
    pub vertices: Vec<(OrbitMatrix, Decomposition)>,
    pub edges: Vec<(usize, usize)>,
}

pub fn idempotent_hasse(lambda: &Composition) -> IdempotentHasse {
    let n = lambda.n();
    let mut vertices: Vec<(OrbitMatrix, Decomposition)> = Vec::new();
    for m in Decomposition::enumerate(n) {
        let a = idempotent_orbit(lambda, &m);
        if !vertices.iter().any(|(v, _)| *v == a) {
            let coarsest = classify_idempotent(&a).expect("idempotent orbit").1;
            vertices.push((a, coarsest));
        }
    }
    vertices.sort_by(|(a, _), (b, _)| a.cmp(b));
    let k = vertices.len();
    let le = |i: usize, j: usize| degenerates_to(&vertices[i].0, &vertices[j].0);
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || !le(i, j) {
                continue;
            }
            let covering = (0..k)
                .filter(|&t| t != i && t != j)
                .all(|t| !(le(i, t) && le(t, j)));
            if covering {
                edges.push((i, j));
            }
        }
    }
    IdempotentHasse { vertices, edges }
}

/// Right-factorization test through a generator at 1-based index `i`:
/// whether `e_A = x·e_i` (kind `E`) or `e_A = x·f_i` (kind `F`) for some `x`.
pub fn factor_test(a: &OrbitMatrix, kind: GeneratorKind, i: usize) -> bool {
    let n = a.n();
    assert!(i >= 1 && i < n);
    let col = i - 1;
    match kind {
        GeneratorKind::E => {
            // s minimal with a_{s,i} ≠ 0 (∞ if none), t minimal with a_{t,i+1} ≠ 0;
            // factorization iff column i+1 is nonzero and s ≥ t
            let t = match (0..n).find(|&x| a.entry(x, col + 1) != 0) {
                Some(t) => t,
                None => return false,
            };
            match (0..n).find(|&x| a.entry(x, col) != 0) {
                Some(s) => s >= t,
                None => true,
            }
        }
        GeneratorKind::F => {
            // x maximal with a_{x,i} ≠ 0, y maximal with a_{y,i+1} ≠ 0 (−∞ if none);
            // factorization iff column i is nonzero and x ≥ y
            let x = match (0..n).rev().find(|&v| a.entry(v, col) != 0) {
                Some(x) => x,
                None => return false,
            };
            match (0..n).rev().find(|&v| a.entry(v, col + 1) != 0) {
                Some(y) => x >= y,
                None => true,
            }
        }
    }
}

/// All matrices with the given column-sum vector, lexicographic.
pub fn orbits_with_col_sums(lambda: &Composition) -> Vec<OrbitMatrix> {
    let n = lambda.n();
    let mut columns: Vec<Vec<Vec<u32>>> = Vec::with_capacity(n);
    for j in 0..n {
        let col_comps = crate::combinatorics::enumerate_compositions(n, lambda.part(j));
        columns.push(col_comps.into_iter().map(|c| c.parts().to_vec()).collect());
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    'outer: loop {
        let mut a = OrbitMatrix::zero(n);
        for (j, &idx) in pick.iter().enumerate() {
            for i in 0..n {
                a.set_entry(i, j, columns[j][idx][i]);
            }
        }
        out.push(a);
        for j in (0..n).rev() {
            pick[j] += 1;
            if pick[j] < columns[j].len() {
                continue 'outer;
            }
            pick[j] = 0;
        }
        break;
    }
    out.sort();
    out
}

pub fn orbits_with_row_sums(lambda: &Composition) -> Vec<OrbitMatrix> {
    orbits_with_col_sums(lambda)
        .into_iter()
        .map(|a| a.transpose())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// All matrices with row sums `ro` and column sums `co`, lexicographic.
pub fn orbits_with_margins(ro: &Composition, co: &Composition) -> Vec<OrbitMatrix> {
    assert_eq!(ro.n(), co.n());
    let n = ro.n();
    let mut out = Vec::new();
    if ro.r() != co.r() {
        return out;
    }
    let mut a = OrbitMatrix::zero(n);
    let mut col_left: Vec<u32> = co.parts().to_vec();
    fill_margins(&mut a, 0, 0, ro.part(0), ro, &mut col_left, &mut out);
    out.sort();
    out
}

fn fill_margins(
    a: &mut OrbitMatrix,
    i: usize,
    j: usize,
    row_left: u32,
    ro: &Composition,
    col_left: &mut Vec<u32>,
    out: &mut Vec<OrbitMatrix>,
) {
    let n = a.n();
    if j == n {
        if row_left != 0 {
            return;
        }
        if i + 1 == n {
            if col_left.iter().all(|&c| c == 0) {
                out.push(a.clone());
            }
            return;
        }
        fill_margins(a, i + 1, 0, ro.part(i + 1), ro, col_left, out);
        return;
    }
    let max_here = row_left.min(col_left[j]);
    for v in 0..=max_here {
        a.set_entry(i, j, v);
        col_left[j] -= v;
        fill_margins(a, i, j + 1, row_left - v, ro, col_left, out);
        col_left[j] += v;
    }
    a.set_entry(i, j, 0);
}

/// All `n × n` matrices with entry sum `r`, lexicographic.
pub fn enumerate_orbits(n: usize, r: u32) -> Vec<OrbitMatrix> {
    let mut out = Vec::new();
    for lambda in crate::combinatorics::enumerate_compositions(n, r) {
        out.extend(orbits_with_col_sums(&lambda));
    }
    out.sort();
    out
}

/// `dim S_0(n, r) = C(n² + r − 1, r)` without enumeration.
pub fn count_orbits(n: usize, r: u32) -> u128 {
    binomial((n * n) as u128 + r as u128 - 1, r as i128)
}

/// Number of matrices with a prescribed column-sum vector.
pub fn count_orbits_with_col_sums(lambda: &Composition) -> u128 {
    let n = lambda.n() as u128;
    lambda
        .parts()
        .iter()
        .map(|&p| binomial(p as u128 + n - 1, p as i128))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_compositions;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn dec(parts: &[u32]) -> Decomposition {
        Decomposition::new(parts.to_vec()).unwrap()
    }

    fn mat(s: &str) -> OrbitMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(generator_e(1, &comp(&[1, 2])).unwrap(), mat("1,1;0,1"));
        assert_eq!(generator_f(1, &comp(&[1, 2])).unwrap(), mat("0,0;1,2"));
        assert_eq!(generator_k(&comp(&[2, 0, 3])), mat("2,0,0;0,0,0;0,0,3"));
        assert!(generator_e(1, &comp(&[2, 0])).is_err());
        assert!(generator_f(1, &comp(&[0, 2])).is_err());
    }

    #[test]
    fn extreme_orbit_examples() {
        // open and closed orbits for λ=(1,2,1), μ=(2,1,1)
        let lam = comp(&[1, 2, 1]);
        let mu = comp(&[2, 1, 1]);
        assert_eq!(open_orbit(&lam, &mu).unwrap(), mat("0,0,1;1,1,0;1,0,0"));
        assert_eq!(closed_orbit(&lam, &mu).unwrap(), mat("1,0,0;1,1,0;0,0,1"));
        // o_λ for λ=(1,2,3)
        let lam = comp(&[1, 2, 3]);
        assert_eq!(open_orbit(&lam, &lam).unwrap(), mat("0,0,1;0,0,2;1,2,0"));
    }

    #[test]
    fn extreme_orbits_satisfy_their_predicates_and_are_unique() {
        for r in 0..=4u32 {
            for lam in enumerate_compositions(3, r) {
                for mu in enumerate_compositions(3, r) {
                    let open = open_orbit(&lam, &mu).unwrap();
                    let closed = closed_orbit(&lam, &mu).unwrap();
                    assert!(is_generic(&open));
                    assert!(is_closed(&closed));
                    assert_eq!(open.row_vector(), lam);
                    assert_eq!(open.col_vector(), mu);
                    assert_eq!(closed.row_vector(), lam);
                    assert_eq!(closed.col_vector(), mu);
                    let slice = orbits_with_margins(&lam, &mu);
                    let opens: Vec<_> = slice.iter().filter(|a| is_generic(a)).collect();
                    let closeds: Vec<_> = slice.iter().filter(|a| is_closed(a)).collect();
                    assert_eq!(opens, vec![&open]);
                    assert_eq!(closeds, vec![&closed]);
                }
            }
        }
    }

    #[test]
    fn block_generic_examples() {
        let a = mat("0,1,0;1,1,0;0,0,3");
        assert!(block_generic(&a, Axis::Columns, &dec(&[2, 1])));
        assert!(block_generic(&a, Axis::Rows, &dec(&[2, 1])));
        assert!(!block_generic(&a, Axis::Columns, &dec(&[3])));

        let b = mat("1,0,0;1,1,0;0,0,1");
        assert!(block_generic(&b, Axis::Columns, &dec(&[1, 1, 1])));
        assert!(!block_generic(&b, Axis::Columns, &dec(&[2, 1])));
        assert!(!block_generic(&b, Axis::Columns, &dec(&[1, 2])));

        // diagonal matrices are block generic exactly when every block holds
        // at most one nonzero part
        let d = OrbitMatrix::diagonal(&comp(&[2, 0, 3]));
        for m in Decomposition::enumerate(3) {
            let expected = m
                .split(&comp(&[2, 0, 3]))
                .into_iter()
                .all(|block| block.iter().filter(|&&p| p > 0).count() <= 1);
            assert_eq!(block_generic(&d, Axis::Columns, &m), expected);
            assert_eq!(block_generic(&d, Axis::Rows, &m), expected);
        }
        assert!(block_generic(
            &d,
            Axis::Columns,
            &Decomposition::singletons(3)
        ));
    }

    #[test]
    fn closed_predicate_examples() {
        assert!(is_closed(&mat("1,0,0;1,1,0;0,0,1")));
        assert!(!is_closed(&mat("0,0,1;1,1,0;1,0,0")));
        assert!(is_closed(&OrbitMatrix::diagonal(&comp(&[1, 2, 3]))));
    }

    #[test]
    fn corner_sum_examples() {
        let a = mat("0,1,0;1,1,0;0,0,3");
        assert_eq!(corner_sums(&a, 2, 2).0, 2);
        assert_eq!(corner_sums(&a, 1, 2).1, 3);
        // whole-matrix sums sit at opposite corners
        assert_eq!(corner_sums(&a, 3, 1).0, a.r());
        assert_eq!(corner_sums(&a, 1, 3).1, a.r());
    }

    #[test]
    fn corner_identity_on_equal_margins() {
        // NE(s, s+1) = SW(s+1, s) whenever ro(A) = co(A)
        for n in 2..=4usize {
            for r in 0..=5u32 {
                for lam in enumerate_compositions(n, r) {
                    for a in orbits_with_margins(&lam, &lam) {
                        for s in 1..n {
                            assert_eq!(corner_sums(&a, s, s + 1).0, corner_sums(&a, s + 1, s).1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degeneration_examples() {
        let lam = comp(&[1, 2, 3]);
        let o = open_orbit(&lam, &lam).unwrap();
        let om = idempotent_orbit(&lam, &dec(&[2, 1]));
        let op = idempotent_orbit(&lam, &dec(&[1, 2]));
        assert_eq!(om, mat("0,1,0;1,1,0;0,0,3"));
        assert_eq!(op, mat("1,0,0;0,0,2;0,2,1"));
        assert!(degenerates_to(&o, &om));
        assert!(degenerates_to(&o, &op));
        assert!(!degenerates_to(&om, &op));
        assert!(!degenerates_to(&op, &om));
        assert!(degenerates_to(&o, &o));
    }

    #[test]
    fn diagonal_is_maximum_of_its_slice() {
        for lam in enumerate_compositions(3, 3) {
            let k = OrbitMatrix::diagonal(&lam);
            let o = open_orbit(&lam, &lam).unwrap();
            for a in orbits_with_margins(&lam, &lam) {
                assert!(degenerates_to(&a, &k));
                assert!(degenerates_to(&o, &a));
            }
        }
    }

    #[test]
    fn degeneration_is_partial_order_on_slices() {
        for lam in enumerate_compositions(3, 3) {
            for mu in enumerate_compositions(3, 3) {
                let slice = orbits_with_margins(&lam, &mu);
                for a in &slice {
                    assert!(degenerates_to(a, a));
                    for b in &slice {
                        if degenerates_to(a, b) && degenerates_to(b, a) {
                            assert_eq!(a, b);
                        }
                        for c in &slice {
                            if degenerates_to(a, b) && degenerates_to(b, c) {
                                assert!(degenerates_to(a, c));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn idempotent_orbit_examples() {
        let lam = comp(&[1, 2, 3]);
        assert_eq!(
            idempotent_orbit(&lam, &dec(&[2, 1])),
            mat("0,1,0;1,1,0;0,0,3")
        );
        assert_eq!(
            idempotent_orbit(&lam, &dec(&[1, 2])),
            mat("1,0,0;0,0,2;0,2,1")
        );
        assert_eq!(
            idempotent_orbit(&lam, &Decomposition::singletons(3)),
            OrbitMatrix::diagonal(&lam)
        );
    }

    #[test]
    fn classify_examples() {
        let d = OrbitMatrix::diagonal(&comp(&[2, 0, 3]));
        let (lam, m) = classify_idempotent(&d).unwrap();
        assert_eq!(lam, comp(&[2, 0, 3]));
        // coarsest label keeps zero parts merged
        assert_eq!(idempotent_orbit(&lam, &m), d);
        assert_eq!(m.num_blocks(), 2);

        let a = mat("1,0,0;0,0,2;0,2,1");
        let (lam, m) = classify_idempotent(&a).unwrap();
        assert_eq!(lam, comp(&[1, 2, 3]));
        assert_eq!(m, dec(&[1, 2]));

        assert!(classify_idempotent(&mat("1,1;0,1")).is_none());
    }

    #[test]
    fn classify_agrees_with_enumeration() {
        for r in 0..=4u32 {
            for lam in enumerate_compositions(3, r) {
                let images: std::collections::BTreeSet<OrbitMatrix> = Decomposition::enumerate(3)
                    .into_iter()
                    .map(|m| idempotent_orbit(&lam, &m))
                    .collect();
                for a in orbits_with_margins(&lam, &lam) {
                    let classified = classify_idempotent(&a);
                    assert_eq!(classified.is_some(), images.contains(&a));
                    if let Some((l, m)) = classified {
                        assert_eq!(l, lam);
                        assert_eq!(idempotent_orbit(&l, &m), a);
                        // coarsest: no label with fewer blocks gives the same matrix
                        for m2 in Decomposition::enumerate(3) {
                            if idempotent_orbit(&lam, &m2) == a {
                                assert!(m2.num_blocks() >= m.num_blocks());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hasse_shapes() {
        let h = idempotent_hasse(&comp(&[2, 0, 3, 2]));
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.edges.len(), 4); // diamond

        let h = idempotent_hasse(&comp(&[2, 1, 3, 1]));
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.edges.len(), 12); // Boolean lattice on 3 cuts

        let h = idempotent_hasse(&comp(&[0, 0, 5]));
        assert_eq!(h.vertices.len(), 1);
        assert!(h.edges.is_empty());
    }

    #[test]
    fn factor_test_examples() {
        assert!(factor_test(&mat("0,1;1,0"), GeneratorKind::E, 1));
        assert!(!factor_test(&mat("1,0;0,2"), GeneratorKind::E, 1));
        assert!(factor_test(&mat("0,0;1,2"), GeneratorKind::E, 1));
        // empty column i+1 admits no e_i factor
        assert!(!factor_test(&mat("2,0;1,0"), GeneratorKind::E, 1));
        // f-side mirror
        assert!(factor_test(&mat("1,0;1,1"), GeneratorKind::F, 1));
        assert!(!factor_test(&mat("0,1;0,2"), GeneratorKind::F, 1));
    }

    #[test]
    fn generic_with_equal_margins_is_symmetric() {
        for n in 2..=4usize {
            for r in 0..=4u32 {
                for lam in enumerate_compositions(n, r) {
                    for a in orbits_with_margins(&lam, &lam) {
                        if is_generic(&a) {
                            assert_eq!(a.transpose(), a);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_match_formulas() {
        for n in 1..=3usize {
            for r in 0..=4u32 {
                assert_eq!(enumerate_orbits(n, r).len() as u128, count_orbits(n, r));
            }
        }
        for lam in enumerate_compositions(3, 5) {
            assert_eq!(
                orbits_with_col_sums(&lam).len() as u128,
                count_orbits_with_col_sums(&lam)
            );
        }
        // the hom-space slice for ro=(1,2,2), co=(1,3,1) has 8 matrices
        assert_eq!(
            orbits_with_margins(&comp(&[1, 2, 2]), &comp(&[1, 3, 1])).len(),
            8
        );
    }

    #[test]
    fn matrix_text_round_trip() {
        let a = mat("0,0,1;0,0,2;1,2,0");
        assert_eq!(a.to_string(), "0,0,1;0,0,2;1,2,0");
        let b: OrbitMatrix = "[[0,0,1],[0,0,2],[1,2,0]]".parse().unwrap();
        assert_eq!(a, b);
        assert!("0,0;1".parse::<OrbitMatrix>().is_err());
    }
}

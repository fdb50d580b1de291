//! Compositions of `r` into `n` parts, decompositions of `n`, the refinement
//! lattice, equivalence classes of compositions modulo zero removal, and the
//! block-collapse map between them.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// A sequence of `n` non-negative integers with sum `r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition needs at least one part");
        Composition { parts }
    }

    pub fn zero(n: usize) -> Self {
        Composition { parts: vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn r(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 0-based position `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i]
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// True when every part is positive.
    pub fn is_interior(&self) -> bool {
        self.parts.iter().all(|&p| p > 0)
    }

    pub fn is_boundary(&self) -> bool {
        !self.is_interior()
    }

    /// Zero parts removed.
    pub fn reduced(&self) -> ProjectiveClass {
        ProjectiveClass {
            parts: self.parts.iter().copied().filter(|&p| p > 0).collect(),
        }
    }

    /// `self + α_from − α_to`, when the result stays non-negative.
    pub fn unit_move(&self, from: usize, to: usize) -> Option<Composition> {
        if self.parts[to] == 0 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[from] += 1;
        parts[to] -= 1;
        Some(Composition { parts })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_u32_list(s, ',')?;
        if parts.is_empty() {
            return Err(Error::Invalid {
                what: "composition",
                detail: "empty part list".into(),
            });
        }
        Ok(Composition { parts })
    }
}

/// A composition of `n` with all parts positive, indexing a block structure
/// on `{1, …, n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decomposition {
    parts: Vec<u32>,
}

impl Decomposition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invalid {
                what: "decomposition",
                detail: format!("parts must be positive, got {:?}", parts),
            });
        }
        Ok(Decomposition { parts })
    }

    /// The coarsest decomposition `(n)`.
    pub fn whole(n: usize) -> Self {
        Decomposition {
            parts: vec![n as u32],
        }
    }

    /// The finest decomposition `(1, …, 1)`.
    pub fn singletons(n: usize) -> Self {
        Decomposition { parts: vec![1; n] }
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn num_blocks(&self) -> usize {
        self.parts.len()
    }

    /// Interior cut positions, a subset of `{1, …, n−1}`.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut cuts = Vec::with_capacity(self.parts.len() - 1);
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p as usize;
            cuts.push(acc);
        }
        cuts
    }

    /// Rebuild a decomposition of `n` from a strictly increasing cut set.
    pub fn from_boundaries(n: usize, cuts: &[usize]) -> Self {
        let mut parts = Vec::with_capacity(cuts.len() + 1);
        let mut prev = 0usize;
        for &c in cuts {
            debug_assert!(prev < c && c < n);
            parts.push((c - prev) as u32);
            prev = c;
        }
        parts.push((n - prev) as u32);
        Decomposition { parts }
    }

    /// Half-open index ranges of the blocks (0-based).
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::with_capacity(self.parts.len());
        let mut start = 0usize;
        for &p in &self.parts {
            out.push(start..start + p as usize);
            start += p as usize;
        }
        out
    }

    /// Restriction of a composition to the blocks of `self`.
    pub fn split<'a>(&self, lambda: &'a Composition) -> Vec<&'a [u32]> {
        self.blocks()
            .into_iter()
            .map(|range| &lambda.parts()[range])
            .collect()
    }

    /// All `2^{n−1}` decompositions of `n`, ordered lexicographically by parts.
    pub fn enumerate(n: usize) -> Vec<Decomposition> {
        assert!(n >= 1);
        let mut out = Vec::with_capacity(1 << (n - 1));
        let mut mask = 0u64;
        loop {
            let cuts: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            out.push(Decomposition::from_boundaries(n, &cuts));
            mask += 1;
            if mask == 1 << (n - 1) {
                break;
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join("+"))
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Decomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_u32_list(s, '+')?;
        Decomposition::new(parts)
    }
}

/// `true` iff `m` refines `p`: every block of `p` is a union of consecutive
/// blocks of `m`. This is the order written `p ≤ m`; `(n)` is the minimum and
/// `(1, …, 1)` the maximum.
pub fn refinement_le(p: &Decomposition, m: &Decomposition) -> Result<bool> {
    if p.n() != m.n() {
        return Err(Error::MismatchedN {
            left: p.n(),
            right: m.n(),
        });
    }
    let pc = p.boundaries();
    let mc = m.boundaries();
    Ok(pc.iter().all(|c| mc.contains(c)))
}

/// Greatest lower bound in the refinement order; its cut set is the
/// intersection of the two cut sets.
pub fn meet(m: &Decomposition, p: &Decomposition) -> Result<Decomposition> {
    if p.n() != m.n() {
        return Err(Error::MismatchedN {
            left: m.n(),
            right: p.n(),
        });
    }
    let pc = p.boundaries();
    let cuts: Vec<usize> = m
        .boundaries()
        .into_iter()
        .filter(|c| pc.contains(c))
        .collect();
    Ok(Decomposition::from_boundaries(m.n(), &cuts))
}

/// An equivalence class of compositions modulo removal of zero parts:
/// a composition of `r` into positive parts, empty exactly when `r = 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectiveClass {
    parts: Vec<u32>,
}

impl ProjectiveClass {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid {
                what: "class",
                detail: format!("parts must be positive, got {:?}", parts),
            });
        }
        Ok(ProjectiveClass { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn r(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Canonical representative in `Λ(n, r)`: the parts followed by zeros.
    pub fn representative(&self, n: usize) -> Composition {
        assert!(self.parts.len() <= n);
        let mut parts = self.parts.clone();
        parts.resize(n, 0);
        Composition::new(parts)
    }

    /// Every composition in `Λ(n, r)` whose nonzero parts read `self`.
    pub fn placements(&self, n: usize) -> Vec<Composition> {
        let k = self.parts.len();
        assert!(k <= n);
        if k == 0 {
            return vec![Composition::zero(n)];
        }
        let mut out = Vec::new();
        let mut positions: Vec<usize> = (0..k).collect();
        loop {
            let mut parts = vec![0u32; n];
            for (slot, &pos) in positions.iter().enumerate() {
                parts[pos] = self.parts[slot];
            }
            out.push(Composition::new(parts));
            // advance to the next k-subset of {0..n-1}
            let mut i = k;
            loop {
                if i == 0 {
                    out.sort();
                    return out;
                }
                i -= 1;
                if positions[i] < n - (k - i) {
                    positions[i] += 1;
                    for j in i + 1..k {
                        positions[j] = positions[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

impl fmt::Display for ProjectiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for ProjectiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

/// All compositions of `r` into `n` parts, in lexicographic order.
pub fn enumerate_compositions(n: usize, r: u32) -> Vec<Composition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill_compositions(&mut current, 0, r, &mut out);
    out
}

fn fill_compositions(
    current: &mut Vec<u32>,
    idx: usize,
    remaining: u32,
    out: &mut Vec<Composition>,
) {
    if idx + 1 == current.len() {
        current[idx] = remaining;
        out.push(Composition::new(current.clone()));
        return;
    }
    for v in 0..=remaining {
        current[idx] = v;
        fill_compositions(current, idx + 1, remaining - v, out);
    }
}

/// Block sums of `lambda` along `m`, zeros dropped.
pub fn collapse(lambda: &Composition, m: &Decomposition) -> ProjectiveClass {
    assert_eq!(lambda.n(), m.n(), "collapse needs matching n");
    let parts: Vec<u32> = m
        .split(lambda)
        .into_iter()
        .map(|block| block.iter().sum::<u32>())
        .filter(|&s| s > 0)
        .collect();
    ProjectiveClass { parts }
}

/// All classes for `(n, r)`: compositions of `r` into at most `n` positive
/// parts, lexicographic; for `r = 0` the single empty class.
pub fn enumerate_classes(n: usize, r: u32) -> Vec<ProjectiveClass> {
    assert!(n >= 1);
    if r == 0 {
        return vec![ProjectiveClass { parts: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fill_classes(&mut current, r, n, &mut out);
    out.sort();
    out
}

fn fill_classes(
    current: &mut Vec<u32>,
    remaining: u32,
    max_parts: usize,
    out: &mut Vec<ProjectiveClass>,
) {
    if remaining == 0 {
        out.push(ProjectiveClass {
            parts: current.clone(),
        });
        return;
    }
    if current.len() == max_parts {
        return;
    }
    for v in 1..=remaining {
        current.push(v);
        fill_classes(current, remaining - v, max_parts, out);
        current.pop();
    }
}

/// Binomial coefficient as `u128`, 0 when `k` is out of range.
pub fn binomial(n: u128, k: i128) -> u128 {
    if k < 0 || k as u128 > n {
        return 0;
    }
    let k = (k as u128).min(n - k as u128);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn parse_u32_list(s: &str, sep: char) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut pos = 0usize;
    for piece in s.split(sep) {
        let trimmed = piece.trim();
        match trimmed.parse::<u32>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    pos,
                    token: trimmed.to_string(),
                    message: "expected a non-negative integer".into(),
                })
            }
        }
        pos += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn dec(parts: &[u32]) -> Decomposition {
        Decomposition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_composition_when_n_is_one() {
        assert_eq!(enumerate_compositions(1, 5), vec![comp(&[5])]);
    }

    #[test]
    fn six_compositions_of_two_into_three() {
        let cs = enumerate_compositions(3, 2);
        let expected: Vec<Composition> = [
            [0, 0, 2],
            [0, 1, 1],
            [0, 2, 0],
            [1, 0, 1],
            [1, 1, 0],
            [2, 0, 0],
        ]
        .iter()
        .map(|p| comp(p))
        .collect();
        assert_eq!(cs, expected);
    }

    #[test]
    fn composition_count_matches_binomial() {
        assert_eq!(enumerate_compositions(3, 5).len(), 21);
        assert_eq!(binomial(7, 5), 21);
        for n in 1..=4usize {
            for r in 0..=6u32 {
                let count = enumerate_compositions(n, r).len() as u128;
                assert_eq!(count, binomial((n as u128) + (r as u128) - 1, r as i128));
            }
        }
    }

    #[test]
    fn refinement_basics() {
        assert!(refinement_le(&dec(&[3]), &dec(&[2, 1])).unwrap());
        assert!(!refinement_le(&dec(&[2, 1]), &dec(&[1, 2])).unwrap());
        let fine = Decomposition::singletons(4);
        for m in Decomposition::enumerate(4) {
            if m != fine {
                assert!(!refinement_le(&fine, &m).unwrap());
            }
            assert!(refinement_le(&Decomposition::whole(4), &m).unwrap());
            assert!(refinement_le(&m, &fine).unwrap());
        }
    }

    #[test]
    fn refinement_is_a_partial_order() {
        for n in 1..=5usize {
            let all = Decomposition::enumerate(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for a in &all {
                assert!(refinement_le(a, a).unwrap());
                for b in &all {
                    if refinement_le(a, b).unwrap() && refinement_le(b, a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if refinement_le(a, b).unwrap() && refinement_le(b, c).unwrap() {
                            assert!(refinement_le(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&dec(&[2, 1]), &dec(&[1, 2])).unwrap(), dec(&[3]));
        assert_eq!(meet(&dec(&[1, 1, 2]), &dec(&[1, 3])).unwrap(), dec(&[1, 3]));
        for m in Decomposition::enumerate(4) {
            assert_eq!(meet(&m, &m).unwrap(), m);
        }
    }

    #[test]
    fn meet_is_greatest_lower_bound() {
        for n in 1..=5usize {
            let all = Decomposition::enumerate(n);
            for m in &all {
                for p in &all {
                    let g = meet(m, p).unwrap();
                    assert!(refinement_le(&g, m).unwrap());
                    assert!(refinement_le(&g, p).unwrap());
                    for q in &all {
                        if refinement_le(q, m).unwrap() && refinement_le(q, p).unwrap() {
                            assert!(refinement_le(q, &g).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn collapse_examples() {
        let lam = comp(&[0, 2, 0, 0, 1, 1]);
        let m = dec(&[1, 1, 2, 2]);
        assert_eq!(collapse(&lam, &m).parts(), &[2, 2]);

        let lam = comp(&[2, 0, 3, 2]);
        assert_eq!(collapse(&lam, &dec(&[3, 1])).parts(), &[5, 2]);

        // singleton blocks reduce to zero removal
        let lam = comp(&[1, 0, 4]);
        assert_eq!(collapse(&lam, &Decomposition::singletons(3)), lam.reduced());

        // one block gives (r) when r > 0
        assert_eq!(
            collapse(&comp(&[2, 3]), &Decomposition::whole(2)).parts(),
            &[5]
        );
    }

    #[test]
    fn collapse_depends_only_on_block_sums() {
        for n in 1..=4usize {
            for r in 0..=6u32 {
                let comps = enumerate_compositions(n, r);
                let decs = Decomposition::enumerate(n);
                let mut by_sums: std::collections::BTreeMap<Vec<u32>, ProjectiveClass> =
                    std::collections::BTreeMap::new();
                for lam in &comps {
                    for m in &decs {
                        let sums: Vec<u32> =
                            m.split(lam).into_iter().map(|b| b.iter().sum()).collect();
                        let class = collapse(lam, m);
                        if let Some(prev) = by_sums.insert(sums, class.clone()) {
                            assert_eq!(prev, class);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(enumerate_classes(3, 5).len(), 11);
        assert_eq!(enumerate_classes(4, 5).len(), 15);
        assert_eq!(enumerate_classes(1, 7).len(), 1);
        assert_eq!(enumerate_classes(3, 0).len(), 1);
        for n in 1..=5usize {
            for r in 1..=7u32 {
                let expected: u128 = (1..=(n.min(r as usize)))
                    .map(|k| binomial(r as u128 - 1, k as i128 - 1))
                    .sum();
                assert_eq!(enumerate_classes(n, r).len() as u128, expected);
            }
        }
    }

    #[test]
    fn placements_and_representative() {
        let c = ProjectiveClass::new(vec![2, 3]).unwrap();
        assert_eq!(c.representative(3), comp(&[2, 3, 0]));
        let placed = c.placements(3);
        assert_eq!(
            placed,
            vec![comp(&[0, 2, 3]), comp(&[2, 0, 3]), comp(&[2, 3, 0])]
        );
        for p in &placed {
            assert_eq!(p.reduced(), c);
        }
    }

    #[test]
    fn display_round_trips() {
        let lam: Composition = "2,0,3,2".parse().unwrap();
        assert_eq!(lam.to_string(), "2,0,3,2");
        let m: Decomposition = "3+1".parse().unwrap();
        assert_eq!(m.to_string(), "3+1");
        assert!("3+0".parse::<Decomposition>().is_err());
        assert!("a,b".parse::<Composition>().is_err());
    }
}

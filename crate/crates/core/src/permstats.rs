//! Permutation families and their statistics.
//!
//! A signed permutation is stored by its window `(σ_1, ..., σ_n)`; the values
//! on negative arguments follow from `σ(-i) = -σ(i)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{Monomial, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::InvalidPermutation(format!("entry {v} outside [±{n}]")));
            }
            if core::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidPermutation(format!("|{v}| repeated")));
            }
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// `σ_i` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    pub fn abs_window(&self) -> Vec<u32> {
        self.window.iter().map(|v| v.unsigned_abs()).collect()
    }

    pub fn neg(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn fixed_points(&self) -> usize {
        self.window
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v == i as i32 + 1)
            .count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPermutation(format!("`{s}` is not in window notation")))?;
        if inner.trim().is_empty() {
            return Ok(SignedPermutation { window: Vec::new() });
        }
        let window = inner
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad entry `{v}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

/// `A`: all of `𝔖_n`; `B`: signed permutations; `D`: even number of negative
/// entries. Starred families keep only the fixed-point-free members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    AStar,
    B,
    D,
    BStar,
    DStar,
}

impl Family {
    pub fn is_signed(self) -> bool {
        !matches!(self, Family::A | Family::AStar)
    }

    pub fn contains(self, sigma: &SignedPermutation) -> bool {
        let neg = sigma.neg();
        let derangement = sigma.fixed_points() == 0;
        match self {
            Family::A => neg == 0,
            Family::AStar => neg == 0 && derangement,
            Family::B => true,
            Family::D => neg.is_multiple_of(2),
            Family::BStar => derangement,
            Family::DStar => neg.is_multiple_of(2) && derangement,
        }
    }
}

/// All members of `family` of size `n`, each exactly once.
///
/// Order: absolute values in lexicographic order, then sign vectors counted
/// up in binary with position 1 as the most significant bit (all-positive
/// first).
pub fn generate(n: usize, family: Family) -> SignedPermutations {
    SignedPermutations {
        abs: (1..=n as i32).collect(),
        mask: 0,
        signed: family.is_signed(),
        family,
        done: false,
    }
}

pub struct SignedPermutations {
    abs: Vec<i32>,
    mask: u64,
    signed: bool,
    family: Family,
    done: bool,
}

impl SignedPermutations {
    fn current(&self) -> SignedPermutation {
        let n = self.abs.len();
        let window = self
            .abs
            .iter()
            .enumerate()
            .map(|(i, &v)| if self.mask >> (n - 1 - i) & 1 == 1 { -v } else { v })
            .collect();
        SignedPermutation { window }
    }

    fn advance(&mut self) {
        let n = self.abs.len();
        if self.signed && self.mask + 1 < 1u64 << n {
            self.mask += 1;
            return;
        }
        self.mask = 0;
        if !next_permutation(&mut self.abs) {
            self.done = true;
        }
    }
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        while !self.done {
            let sigma = self.current();
            self.advance();
            if self.family.contains(&sigma) {
                return Some(sigma);
            }
        }
        None
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct StatRecord {
    /// `#{i : σ_i >= i}`
    pub wex: usize,
    /// `#{i : σ_i > i}`
    pub exc: usize,
    pub neg: usize,
    /// `2 wex + neg`
    pub fwex: usize,
    pub cro_b: usize,
    /// Descents of `σ_0 σ_1 ... σ_n` with `σ_0 = 0`.
    pub des_b: usize,
    pub fixed_count: usize,
}

pub fn stats(sigma: &SignedPermutation) -> StatRecord {
    let w = sigma.window();
    let mut r = StatRecord::default();
    let mut prev = 0;
    for (idx, &v) in w.iter().enumerate() {
        let i = idx as i32 + 1;
        if v >= i {
            r.wex += 1;
        }
        if v > i {
            r.exc += 1;
        }
        if v == i {
            r.fixed_count += 1;
        }
        if v < 0 {
            r.neg += 1;
        }
        if prev > v {
            r.des_b += 1;
        }
        prev = v;
    }
    r.fwex = 2 * r.wex + r.neg;
    r.cro_b = crossings(sigma).len();
    r
}

/// Which of the three type-B crossing conditions a pair satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossingKind {
    /// `i < j <= σ_i < σ_j`
    Upper,
    /// `-i < j <= -σ_i < σ_j`
    Mirrored,
    /// `i > j > σ_i > σ_j`
    Lower,
}

pub fn crossing_conditions(sigma: &SignedPermutation, i: usize, j: usize) -> [bool; 3] {
    let (si, sj) = (sigma.at(i), sigma.at(j));
    let (i, j) = (i as i32, j as i32);
    [
        i < j && j <= si && si < sj,
        -i < j && j <= -si && -si < sj,
        i > j && j > si && si > sj,
    ]
}

/// All crossings `(i, j)` of `σ`, 1-based, in row-major order.
///
/// # Panics
///
/// If a pair satisfies more than one condition; the three conditions are
/// mutually exclusive for every signed permutation.
pub fn crossings(sigma: &SignedPermutation) -> Vec<(usize, usize, CrossingKind)> {
    let n = sigma.len();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let c = crossing_conditions(sigma, i, j);
            let hits = c.iter().filter(|&&b| b).count();
            assert!(hits <= 1, "pair ({i},{j}) of {sigma} meets {hits} crossing conditions");
            let kind = match c {
                [true, _, _] => CrossingKind::Upper,
                [_, true, _] => CrossingKind::Mirrored,
                [_, _, true] => CrossingKind::Lower,
                _ => continue,
            };
            out.push((i, j, kind));
        }
    }
    out
}

/// Crossings of an ordinary permutation: `i < j <= σ_i < σ_j` or
/// `σ_i < σ_j < i < j`.
pub fn cro_type_a(pi: &SignedPermutation) -> Result<usize> {
    if pi.neg() > 0 {
        return Err(Error::NegativeEntry);
    }
    let w = pi.window();
    let n = w.len();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            let (i, j) = (a as i32 + 1, b as i32 + 1);
            let (si, sj) = (w[a], w[b]);
            if (i < j && j <= si && si < sj) || (si < sj && sj < i && i < j) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Monomial attached to each permutation by [`signed_enumerator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignScheme {
    /// `(-1)^exc` over `A` or `A*`.
    EulerExc,
    /// `(-1)^wex q^cro` over `A` or `A*`.
    JvWexCro,
    /// `(-1/q)^wex q^cro` over `A` or `A*`.
    JvDerange,
    /// `(-1)^⌊fwex/2⌋ t^neg q^cro_B` over the signed families.
    FwexSign,
    /// `(-1/q)^⌊fwex/2⌋ t^neg q^cro_B` over the signed families.
    FwexSignQ,
    /// `y^fwex t^neg q^cro_B` over the signed families.
    FullYtq,
}

impl SignScheme {
    fn accepts(self, family: Family) -> bool {
        match self {
            SignScheme::EulerExc | SignScheme::JvWexCro | SignScheme::JvDerange => {
                !family.is_signed()
            }
            _ => family.is_signed(),
        }
    }

    fn weight(self, sigma: &SignedPermutation) -> (i64, Monomial) {
        let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
        match self {
            SignScheme::EulerExc => (sign(stats(sigma).exc), Monomial::ONE),
            SignScheme::JvWexCro | SignScheme::JvDerange => {
                let r = stats(sigma);
                let cro = cro_type_a(sigma).unwrap_or(0) as i32;
                let shift = if self == SignScheme::JvDerange { r.wex as i32 } else { 0 };
                (sign(r.wex), Monomial::q_pow(cro - shift))
            }
            SignScheme::FwexSign | SignScheme::FwexSignQ => {
                let r = stats(sigma);
                let half = r.fwex / 2;
                let shift = if self == SignScheme::FwexSignQ { half as i32 } else { 0 };
                (sign(half), Monomial::new(0, r.neg as u32, r.cro_b as i32 - shift))
            }
            SignScheme::FullYtq => {
                let r = stats(sigma);
                (1, Monomial::new(r.fwex as u32, r.neg as u32, r.cro_b as i32))
            }
        }
    }
}

/// Exact sum of the scheme's monomial over all members of `family` of size `n`.
pub fn signed_enumerator(n: usize, family: Family, scheme: SignScheme) -> Result<Polynomial> {
    if !scheme.accepts(family) {
        return Err(Error::IncompatibleScheme { scheme, family });
    }
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    for sigma in generate(n, family) {
        let (c, m) = scheme.weight(&sigma);
        *acc.entry(m).or_default() += c;
    }
    Ok(Polynomial::from_terms(acc.into_iter().map(|(m, c)| (c, m))))
}

/// `x^exc` distribution over `𝔖_n` (`derangements = false`) or `𝔖*_n`.
pub fn excedance_distribution(n: usize, derangements: bool) -> Vec<u64> {
    let family = if derangements { Family::AStar } else { Family::A };
    let mut out = vec![0u64; n + 1];
    for pi in generate(n, family) {
        out[stats(&pi).exc] += 1;
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// `γ_{n,i}` for `0 <= i <= ⌊(n-1)/2⌋`: permutations with `i` descents and
/// no double descents, reading `σ_0 = σ_{n+1} = +∞`. Empty for `n = 0`.
pub fn gamma_coeffs(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![0u64; (n - 1) / 2 + 1];
    for pi in generate(n, Family::A) {
        let w = pi.window();
        let at = |k: usize| if k == 0 || k == n + 1 { i32::MAX } else { w[k - 1] };
        let double_descent = (1..=n).any(|k| at(k - 1) > at(k) && at(k) > at(k + 1));
        if double_descent {
            continue;
        }
        let des = (1..n).filter(|&k| at(k) > at(k + 1)).count();
        out[des] += 1;
    }
    out
}

/// `ξ_{n,i}` for `0 <= i <= ⌊n/2⌋`: permutations whose maximal decreasing
/// factors number `i` and all have length at least two.
pub fn xi_coeffs(n: usize) -> Vec<u64> {
    let mut out = vec![0u64; n / 2 + 1];
    for pi in generate(n, Family::A) {
        let runs = decreasing_runs(pi.window());
        if runs.iter().all(|&len| len >= 2) {
            out[runs.len()] += 1;
        }
    }
    out
}

fn decreasing_runs(w: &[i32]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut len = 0;
    for (k, &v) in w.iter().enumerate() {
        if k > 0 && w[k - 1] > v {
            len += 1;
        } else {
            if len > 0 {
                runs.push(len);
            }
            len = 1;
        }
    }
    if len > 0 {
        runs.push(len);
    }
    runs
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::AStar => "A*",
            Family::B => "B",
            Family::D => "D",
            Family::BStar => "B*",
            Family::DStar => "D*",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Family::A,
            "A*" => Family::AStar,
            "B" => Family::B,
            "D" => Family::D,
            "B*" => Family::BStar,
            "D*" => Family::DStar,
            _ => return Err(Error::InvalidPermutation(format!("unknown family `{s}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn perm(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn set(n: usize, f: Family) -> BTreeSet<SignedPermutation> {
        generate(n, f).collect()
    }

    #[test]
    fn generate_examples() {
        assert_eq!(set(1, Family::B), [perm("(1)"), perm("(-1)")].into());
        assert_eq!(
            set(2, Family::D),
            [perm("(1,2)"), perm("(2,1)"), perm("(-1,-2)"), perm("(-2,-1)")].into()
        );
        assert_eq!(set(1, Family::BStar), [perm("(-1)")].into());
        assert_eq!(set(0, Family::D), [perm("()")].into());
    }

    #[test]
    fn family_sizes() {
        // 2^n n!, half of it, and the signed derangement counts
        let sizes: Vec<_> = (0..=5).map(|n| generate(n, Family::B).count()).collect();
        assert_eq!(sizes, [1, 2, 8, 48, 384, 3840]);
        let d: Vec<_> = (1..=5).map(|n| generate(n, Family::D).count()).collect();
        assert_eq!(d, [1, 4, 24, 192, 1920]);
        let bstar: Vec<_> = (0..=4).map(|n| generate(n, Family::BStar).count()).collect();
        assert_eq!(bstar, [1, 1, 5, 29, 233]);
        let astar: Vec<_> = (0..=5).map(|n| generate(n, Family::AStar).count()).collect();
        assert_eq!(astar, [1, 0, 1, 2, 9, 44]);
    }

    #[test]
    fn generation_order_is_lexicographic() {
        let all: Vec<_> = generate(2, Family::B).map(|s| s.to_string()).collect();
        assert_eq!(
            all,
            ["(1,2)", "(1,-2)", "(-1,2)", "(-1,-2)", "(2,1)", "(2,-1)", "(-2,1)", "(-2,-1)"]
        );
    }

    #[test]
    fn worked_crossing_example() {
        let s = perm("(3,-4,-2,5,1)");
        let pairs: BTreeSet<_> = crossings(&s).into_iter().collect();
        let expected: BTreeSet<_> = [
            (3, 1, CrossingKind::Mirrored),
            (2, 4, CrossingKind::Mirrored),
            (3, 2, CrossingKind::Lower),
            (5, 2, CrossingKind::Lower),
            (5, 3, CrossingKind::Lower),
        ]
        .into();
        assert_eq!(pairs, expected);
        let r = stats(&s);
        assert_eq!(r.cro_b, 5);
        assert_eq!((r.wex, r.neg, r.fwex), (2, 2, 6));
    }

    #[test]
    fn identity_stats() {
        for n in 0..6 {
            let r = stats(&SignedPermutation::identity(n));
            assert_eq!((r.wex, r.exc, r.cro_b, r.neg, r.fwex), (n, 0, 0, 0, 2 * n));
        }
    }

    #[test]
    fn type_a_crossings() {
        assert_eq!(cro_type_a(&SignedPermutation::identity(4)), Ok(0));
        assert_eq!(cro_type_a(&perm("(2,3,1)")), Ok(1));
        assert_eq!(cro_type_a(&perm("(2,1)")), Ok(0));
        assert_eq!(cro_type_a(&perm("(-1)")), Err(Error::NegativeEntry));
    }

    #[test]
    fn enumerator_examples() {
        let p = |s: &str| s.parse::<Polynomial>().unwrap();
        assert_eq!(signed_enumerator(1, Family::B, SignScheme::FwexSign).unwrap(), p("-1 + t"));
        assert_eq!(
            signed_enumerator(2, Family::B, SignScheme::FullYtq).unwrap(),
            p("y^4 + 2*y^3*t + y^3*t*q + y^2*t^2*q + y^2*t^2 + y^2 + y*t")
        );
        assert_eq!(
            signed_enumerator(2, Family::D, SignScheme::FwexSign).unwrap(),
            p("-t^2 - t^2*q")
        );
        assert_eq!(
            signed_enumerator(2, Family::A, SignScheme::FullYtq),
            Err(Error::IncompatibleScheme { scheme: SignScheme::FullYtq, family: Family::A })
        );
        assert!(signed_enumerator(2, Family::B, SignScheme::EulerExc).is_err());
    }

    #[test]
    fn gamma_and_xi_examples() {
        assert_eq!(gamma_coeffs(1), [1]);
        assert_eq!(gamma_coeffs(2), [1]);
        assert_eq!(gamma_coeffs(3), [1, 2]);
        assert_eq!(xi_coeffs(0), [1]);
        assert_eq!(xi_coeffs(1), [0]);
        assert_eq!(xi_coeffs(2), [0, 1]);
        assert_eq!(xi_coeffs(4), [0, 1, 5]);
    }

    #[test]
    fn derangement_stat_laws() {
        for n in 0..=5 {
            for s in generate(n, Family::B) {
                let r = stats(&s);
                assert_eq!(r.fwex, 2 * r.wex + r.neg);
                assert!(r.exc <= r.wex);
                if r.fixed_count == 0 {
                    assert_eq!(r.fwex, 2 * r.exc + r.neg);
                }
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("(1,1)".parse::<SignedPermutation>().is_err());
        assert!("(0)".parse::<SignedPermutation>().is_err());
        assert!("(3)".parse::<SignedPermutation>().is_err());
        assert!("1,2".parse::<SignedPermutation>().is_err());
    }
}

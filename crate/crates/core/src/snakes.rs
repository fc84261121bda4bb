//! Snakes, their sign-change and block statistics, and the bijections onto
//! the `T*` and `T` path families.
//!
//! A snake of size `n` is a signed permutation with `σ_1 > σ_2 < σ_3 > ...`.
//! Each variant fixes boundary entries `σ_0` and `σ_{n+1}`:
//!
//! | variant | extra condition          | `σ_0`    | `σ_{n+1}`      |
//! |---------|--------------------------|----------|----------------|
//! | `Full`  | none                     | `-(n+1)` | `(-1)^n (n+1)` |
//! | `S0`    | `σ_1 > 0`                | `0`      | `(-1)^n (n+1)` |
//! | `S00`   | `σ_1 > 0`, `(-1)^n σ_n < 0` | `0`   | `0`            |

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{Monomial, Polynomial};
use crate::motzkin::{check_membership, Scheme, Step, WeightedPath};
use crate::permstats::SignedPermutation;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Full,
    S0,
    S00,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "FULL",
            Variant::S0 => "S0",
            Variant::S00 => "S00",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "FULL" => Ok(Variant::Full),
            "S0" => Ok(Variant::S0),
            "S00" => Ok(Variant::S00),
            _ => Err(Error::InvalidPermutation(format!("unknown snake variant `{s}`"))),
        }
    }
}

impl Variant {
    fn boundary(self, n: usize) -> (i64, i64) {
        let n1 = n as i64 + 1;
        let right = if n.is_multiple_of(2) { n1 } else { -n1 };
        match self {
            Variant::Full => (-n1, right),
            Variant::S0 => (0, right),
            Variant::S00 => (0, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Snake {
    window: SignedPermutation,
    variant: Variant,
    /// `σ_0, σ_1, ..., σ_n, σ_{n+1}`
    extended: Vec<i64>,
}

impl Snake {
    pub fn new(window: SignedPermutation, variant: Variant) -> Result<Self> {
        let bad = |reason: String| Error::InvalidSnake { variant, reason };
        let w = window.window();
        let n = w.len();
        for i in 1..n {
            let ok = if i % 2 == 1 { w[i - 1] > w[i] } else { w[i - 1] < w[i] };
            if !ok {
                return Err(bad(format!("alternation fails between positions {i} and {}", i + 1)));
            }
        }
        if variant != Variant::Full && n > 0 && w[0] < 0 {
            return Err(bad("σ_1 must be positive".into()));
        }
        if variant == Variant::S00 && n > 0 {
            let last = i64::from(w[n - 1]);
            if (if n.is_multiple_of(2) { last } else { -last }) >= 0 {
                return Err(bad("(-1)^n σ_n must be negative".into()));
            }
        }
        let (left, right) = variant.boundary(n);
        let mut extended = Vec::with_capacity(n + 2);
        extended.push(left);
        extended.extend(w.iter().map(|&v| i64::from(v)));
        extended.push(right);
        Ok(Snake { window, variant, extended })
    }

    pub fn window(&self) -> &SignedPermutation {
        &self.window
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// `σ_i` for `0 <= i <= n+1`, boundary included.
    pub fn at(&self, i: usize) -> i64 {
        self.extended[i]
    }

    fn abs_at(&self, i: usize) -> u64 {
        self.extended[i].unsigned_abs()
    }

    /// `|σ|` with the variant's boundary.
    pub fn abs_bounded(&self) -> Result<BoundedPerm> {
        BoundedPerm::new(&self.window.abs_window(), self.variant)
    }

    /// Number of `0 <= i <= n` with `σ_i σ_{i+1} < 0`.
    pub fn cs(&self) -> usize {
        self.extended.windows(2).filter(|p| p[0] * p[1] < 0).count()
    }

    fn cs_at_position(&self, i: usize) -> Option<u8> {
        let (l, m, r) = (self.abs_at(i - 1), self.abs_at(i), self.abs_at(i + 1));
        match kind(l, m, r) {
            Kind::Valley => {
                let left = self.at(i - 1) * self.at(i) < 0;
                let right = self.at(i) * self.at(i + 1) < 0;
                match (left, right) {
                    (false, false) => Some(0),
                    (true, true) => Some(2),
                    _ => None,
                }
            }
            Kind::DoubleAscent | Kind::DoubleDescent => Some(1),
            Kind::Peak => Some(0),
        }
    }

    /// `cs(σ, j)` for `j = 1..=n`.
    pub fn cs_vector(&self) -> Vec<u8> {
        let mut v = vec![0u8; self.len()];
        for i in 1..=self.len() {
            v[self.abs_at(i) as usize - 1] = self
                .cs_at_position(i)
                .expect("a snake never has a valley with exactly one sign change");
        }
        v
    }
}

impl fmt::Display for Snake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.window, self.variant)
    }
}

impl FromStr for Snake {
    type Err = Error;

    /// `(5,-2,4) S0`; the variant tag defaults to `S0` when omitted.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (perm, tag) = match s.rfind(')') {
            Some(p) => (&s[..=p], s[p + 1..].trim()),
            None => (s, ""),
        };
        let variant = if tag.is_empty() { Variant::S0 } else { tag.parse()? };
        Snake::new(perm.parse()?, variant)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Valley,
    DoubleAscent,
    DoubleDescent,
    Peak,
}

fn kind(left: u64, mid: u64, right: u64) -> Kind {
    match (left > mid, mid < right) {
        (true, true) => Kind::Valley,
        (false, true) => Kind::DoubleAscent,
        (true, false) => Kind::DoubleDescent,
        (false, false) => Kind::Peak,
    }
}

/// All snakes of size `n` in `variant`, ordered lexicographically by
/// window with entries compared as signed integers.
pub fn generate_snakes(n: usize, variant: Variant) -> Snakes {
    let mut candidates: Vec<i32> = (1..=n as i32).map(|v| -v).collect();
    candidates.reverse();
    candidates.extend(1..=n as i32);
    Snakes {
        n,
        variant,
        candidates,
        stack: Vec::with_capacity(n),
        used: vec![false; n + 1],
        next_idx: 0,
        done: false,
    }
}

pub struct Snakes {
    n: usize,
    variant: Variant,
    candidates: Vec<i32>,
    stack: Vec<usize>,
    used: Vec<bool>,
    next_idx: usize,
    done: bool,
}

impl Snakes {
    fn fits(&self, c: i32) -> bool {
        if self.used[c.unsigned_abs() as usize] {
            return false;
        }
        let pos = self.stack.len() + 1;
        match self.stack.last() {
            None => self.variant == Variant::Full || c > 0,
            Some(&k) => {
                let prev = self.candidates[k];
                if pos.is_multiple_of(2) {
                    c < prev
                } else {
                    c > prev
                }
            }
        }
    }

    fn pop(&mut self) -> bool {
        match self.stack.pop() {
            Some(k) => {
                self.used[self.candidates[k].unsigned_abs() as usize] = false;
                self.next_idx = k + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for Snakes {
    type Item = Snake;

    fn next(&mut self) -> Option<Snake> {
        while !self.done {
            if self.stack.len() == self.n {
                let window: Vec<i32> = self.stack.iter().map(|&k| self.candidates[k]).collect();
                if !self.pop() {
                    self.done = true;
                }
                let perm = SignedPermutation::new(window).expect("distinct entries");
                if let Ok(s) = Snake::new(perm, self.variant) {
                    return Some(s);
                }
                continue;
            }
            let found = (self.next_idx..self.candidates.len()).find(|&k| self.fits(self.candidates[k]));
            match found {
                Some(k) => {
                    self.used[self.candidates[k].unsigned_abs() as usize] = true;
                    self.stack.push(k);
                    self.next_idx = 0;
                }
                None => {
                    if !self.pop() {
                        self.done = true;
                    }
                }
            }
        }
        None
    }
}

/// Recovers the snake with absolute values `abs` and cs-vector `v`.
///
/// Signs are fixed left to right: the sign change between positions `i-1`
/// and `i` is forced by a double ascent or descent, and read off the
/// cs-value of the valley otherwise.
pub fn recover_from_cs(abs: &[u32], variant: Variant, v: &[u8]) -> Result<Snake> {
    let n = abs.len();
    if v.len() != n || v.iter().any(|&c| c > 2) {
        return Err(Error::UnrealizableCsVector);
    }
    let window: Vec<i32> = abs.iter().map(|&a| a as i32).collect();
    SignedPermutation::new(window)?;
    if n == 0 {
        return Snake::new(SignedPermutation::new(Vec::new())?, variant);
    }
    let (left, right) = variant.boundary(n);
    let mut a = Vec::with_capacity(n + 2);
    a.push(left.unsigned_abs());
    a.extend(abs.iter().map(|&x| u64::from(x)));
    a.push(right.unsigned_abs());
    let cs_of = |value: u64| v[value as usize - 1];

    let first_signs: &[i32] = if variant == Variant::Full { &[1, -1] } else { &[1] };
    for &first in first_signs {
        let mut eps = vec![0i32; n + 1];
        eps[1] = first;
        for i in 2..=n {
            let flip = if a[i - 1] > a[i] {
                a[i] > a[i + 1] || cs_of(a[i]) == 2
            } else {
                a[i - 2] < a[i - 1] || cs_of(a[i - 1]) == 2
            };
            eps[i] = if flip { -eps[i - 1] } else { eps[i - 1] };
        }
        let window: Vec<i32> = (1..=n).map(|i| eps[i] * a[i] as i32).collect();
        let Ok(snake) = Snake::new(SignedPermutation::new(window)?, variant) else {
            continue;
        };
        if snake.cs_vector() == v {
            return Ok(snake);
        }
    }
    Err(Error::UnrealizableCsVector)
}

/// A permutation with the `S0` (`π_0 = 0`, `π_{n+1} = n+1`) or `S00`
/// (`π_0 = π_{n+1} = 0`) boundary installed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedPerm {
    seq: Vec<u32>,
    variant: Variant,
}

/// `alpha[k]` blocks in the restriction to `{0..k}`, `beta[k]` of them to
/// the right of the block holding `k`, for `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProfile {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl BoundedPerm {
    pub fn new(abs: &[u32], variant: Variant) -> Result<Self> {
        let n = abs.len();
        let right = match variant {
            Variant::S0 => n as u32 + 1,
            Variant::S00 => 0,
            Variant::Full => {
                return Err(Error::InvalidSnake {
                    variant,
                    reason: "block statistics need a zero boundary".into(),
                })
            }
        };
        SignedPermutation::new(abs.iter().map(|&a| a as i32).collect())?;
        let mut seq = Vec::with_capacity(n + 2);
        seq.push(0);
        seq.extend_from_slice(abs);
        seq.push(right);
        Ok(BoundedPerm { seq, variant })
    }

    pub fn len(&self) -> usize {
        self.seq.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `π_i` for `0 <= i <= n+1`.
    pub fn at(&self, i: usize) -> u32 {
        self.seq[i]
    }

    /// Position of element `k` in `1..=n`.
    pub fn position(&self, k: u32) -> usize {
        (1..=self.len()).find(|&i| self.seq[i] == k).expect("element in range")
    }

    /// Block boundaries (first and last position) of the restriction to `{0..k}`.
    fn blocks(&self, k: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = None;
        for (p, &v) in self.seq.iter().enumerate() {
            match (v <= k, start) {
                (true, None) => start = Some(p),
                (false, Some(s)) => {
                    out.push((s, p - 1));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            out.push((s, self.seq.len() - 1));
        }
        out
    }

    /// The profile for `k = 0..=n`. With two zeros (`S00`), `beta[0]` is
    /// taken relative to the leftmost one.
    pub fn block_profile(&self) -> BlockProfile {
        let n = self.len();
        let mut alpha = Vec::with_capacity(n + 1);
        let mut beta = Vec::with_capacity(n + 1);
        for k in 0..=n as u32 {
            let blocks = self.blocks(k);
            let pos = if k == 0 { 0 } else { self.position(k) };
            let idx = blocks.iter().position(|&(s, e)| s <= pos && pos <= e).expect("k is covered");
            alpha.push(blocks.len());
            beta.push(blocks.len() - 1 - idx);
        }
        BlockProfile { alpha, beta }
    }

    /// `13-2(π, i) = #{j : 0 <= j < i-1, π_j < π_i < π_{j+1}}`.
    pub fn thirteen_two_at(&self, i: usize) -> usize {
        let pi = self.seq[i];
        (0..i.saturating_sub(1))
            .filter(|&j| self.seq[j] < pi && pi < self.seq[j + 1])
            .count()
    }

    /// `2-31(π, i) = #{j : i < j <= n, π_j > π_i > π_{j+1}}`.
    pub fn two_thirty_one_at(&self, i: usize) -> usize {
        let pi = self.seq[i];
        (i + 1..=self.len())
            .filter(|&j| self.seq[j] > pi && pi > self.seq[j + 1])
            .count()
    }

    /// Both pattern counts at the position holding element `k >= 1`.
    pub fn pattern_counts(&self, k: u32) -> (usize, usize) {
        let i = self.position(k);
        (self.thirteen_two_at(i), self.two_thirty_one_at(i))
    }

    pub fn two_thirty_one(&self) -> usize {
        (1..=self.len()).map(|i| self.two_thirty_one_at(i)).sum()
    }

    /// Checks `beta(k) = 2-31(k)` and `alpha(k) = 13-2(k) + 2-31(k) + 1`.
    ///
    /// `k = 0` is included for `S0` only; under `S00` the element 0 sits at
    /// both ends.
    pub fn pattern_identity_holds(&self) -> bool {
        let prof = self.block_profile();
        let first = if self.variant == Variant::S0 { 0 } else { 1 };
        (first..=self.len()).all(|k| {
            let (a, b) = if k == 0 {
                (self.thirteen_two_at(0), self.two_thirty_one_at(0))
            } else {
                self.pattern_counts(k as u32)
            };
            prof.beta[k] == b && prof.alpha[k] == a + b + 1
        })
    }
}

/// Element classes used by the pattern statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Classes {
    /// Valleys with sign changes on both sides.
    pub x: Vec<u32>,
    /// Double ascents and double descents.
    pub y: Vec<u32>,
    /// Peaks.
    pub z: Vec<u32>,
}

pub fn classes(s: &Snake) -> Classes {
    let mut c = Classes::default();
    for i in 1..=s.len() {
        let j = s.abs_at(i) as u32;
        match kind(s.abs_at(i - 1), s.abs_at(i), s.abs_at(i + 1)) {
            Kind::Valley => {
                if s.cs_at_position(i) == Some(2) {
                    c.x.push(j);
                }
            }
            Kind::DoubleAscent | Kind::DoubleDescent => c.y.push(j),
            Kind::Peak => c.z.push(j),
        }
    }
    for v in [&mut c.x, &mut c.y, &mut c.z] {
        v.sort_unstable();
    }
    c
}

fn pattern_sum(bp: &BoundedPerm, elems: &[u32], f: impl Fn(usize) -> i64) -> i64 {
    elems
        .iter()
        .map(|&j| {
            let (a, b) = bp.pattern_counts(j);
            f(a + b)
        })
        .sum()
}

fn require(s: &Snake, variant: Variant) -> Result<()> {
    if s.variant() != variant {
        return Err(Error::InvalidSnake {
            variant: s.variant(),
            reason: format!("expected a {variant} snake"),
        });
    }
    Ok(())
}

/// `Σ_X [2(13-2 + 2-31) - 1] + Σ_Y (13-2 + 2-31)` over elements.
pub fn pat_q(s: &Snake) -> Result<i64> {
    require(s, Variant::S0)?;
    let bp = s.abs_bounded()?;
    let c = classes(s);
    Ok(pattern_sum(&bp, &c.x, |m| 2 * m as i64 - 1) + pattern_sum(&bp, &c.y, |m| m as i64))
}

/// `Σ_X 2(13-2 + 2-31 - 1) + Σ_Y (13-2 + 2-31) + #Z` over elements.
pub fn pat_r(s: &Snake) -> Result<i64> {
    require(s, Variant::S00)?;
    let bp = s.abs_bounded()?;
    let c = classes(s);
    Ok(pattern_sum(&bp, &c.x, |m| 2 * (m as i64 - 1))
        + pattern_sum(&bp, &c.y, |m| m as i64)
        + c.z.len() as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Enumerator {
    /// `Σ_{S0_n} t^cs q^{2-31 + pat_Q}`
    Q,
    /// `Σ_{S00_{n+1}} t^cs q^{2-31 + pat_R - n - 1}`
    R,
}

pub fn snake_enumerator(n: usize, which: Enumerator) -> Polynomial {
    let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
    match which {
        Enumerator::Q => {
            for s in generate_snakes(n, Variant::S0) {
                let bp = s.abs_bounded().expect("S0 boundary");
                let e = bp.two_thirty_one() as i64 + pat_q(&s).expect("S0 snake");
                *acc.entry(Monomial::new(0, s.cs() as u32, e as i32)).or_default() += 1;
            }
        }
        Enumerator::R => {
            for s in generate_snakes(n + 1, Variant::S00) {
                let bp = s.abs_bounded().expect("S00 boundary");
                let e = bp.two_thirty_one() as i64 + pat_r(&s).expect("S00 snake") - n as i64 - 1;
                *acc.entry(Monomial::new(0, s.cs() as u32, e as i32)).or_default() += 1;
            }
        }
    }
    Polynomial::from_terms(acc.into_iter().map(|(m, c)| (c, m)))
}

/// Shared encoder: `shift` is 1 for the `S0` map and 2 for the `S00` map.
fn encode(s: &Snake, steps: usize, shift: usize) -> Result<WeightedPath> {
    let bp = s.abs_bounded()?;
    let prof = bp.block_profile();
    let cs = s.cs_vector();
    let mut out = Vec::with_capacity(steps);
    let mut height: i64 = 0;
    for j in 1..=steps {
        let i = bp.position(j as u32);
        let (alpha, beta) = (prof.alpha[j] as i64, prof.beta[j] as i64);
        let (shift_i, h) = (shift as i64, height);
        if h != prof.alpha[j - 1] as i64 - shift_i {
            return Err(Error::Invariant(format!(
                "step {j} at height {h} but alpha({}) = {}",
                j - 1,
                prof.alpha[j - 1]
            )));
        }
        let k = kind(s.abs_at(i - 1), s.abs_at(i), s.abs_at(i + 1));
        let (step, m) = match k {
            Kind::Valley if cs[j - 1] == 0 => (Step::U, Monomial::q_pow((beta - shift_i + 1) as i32)),
            Kind::Valley => (Step::U, Monomial::new(0, 2, (beta + 2 * alpha - 1 - 2 * shift_i) as i32)),
            Kind::DoubleAscent => (Step::L, Monomial::new(0, 1, (beta + alpha - shift_i) as i32)),
            Kind::DoubleDescent => (Step::W, Monomial::new(0, 1, (beta + alpha - shift_i) as i32)),
            Kind::Peak => (Step::D, Monomial::q_pow(beta as i32)),
        };
        let range_ok = match (shift, step) {
            (1, Step::W | Step::D) => beta < h,
            (1, _) => beta <= h,
            (_, Step::D) => h >= 1 && beta <= h,
            (_, Step::W) => beta <= h,
            (_, _) => 1 <= beta && beta <= h + 1,
        };
        if !range_ok {
            return Err(Error::Invariant(format!(
                "step {j} = {} at height {h} has beta = {beta}",
                step.letter()
            )));
        }
        height += i64::from(step.delta());
        out.push((step, m));
    }
    WeightedPath::from_steps(out)
}

/// The map `S0_n → T*_n`.
pub fn lambda1(s: &Snake) -> Result<WeightedPath> {
    require(s, Variant::S0)?;
    let path = encode(s, s.len(), 1)?;
    check_membership(Scheme::TStar, &path).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(path)
}

/// The map `S00_{n+1} → T_n`; the element `n+1` gives no step.
pub fn lambda2(s: &Snake) -> Result<WeightedPath> {
    require(s, Variant::S00)?;
    if s.is_empty() {
        return Err(Error::InvalidSnake {
            variant: Variant::S00,
            reason: "size must be at least 1".into(),
        });
    }
    let path = encode(s, s.len() - 1, 2)?;
    check_membership(Scheme::T, &path).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(path)
}

/// Rebuilds the block words step by step. `blocks[0]` always starts with
/// the left boundary 0; with `two_zeros`, the last block always ends with
/// the right boundary 0.
fn decode_words(path: &WeightedPath, two_zeros: bool) -> Result<(Vec<Vec<u32>>, Vec<u8>)> {
    let mut blocks: Vec<Vec<u32>> = if two_zeros { vec![vec![0], vec![0]] } else { vec![vec![0]] };
    let lowest_right = usize::from(two_zeros);
    let mut cs = Vec::with_capacity(path.len());
    let heights = path.shape().heights();
    for (idx, (&step, w)) in path.steps().iter().zip(path.weights()).enumerate() {
        let j = idx as u32 + 1;
        let (c, d, h) = (w.t as i64, i64::from(w.q), heights[idx] as i64);
        let m = blocks.len() as i64;
        let malformed = |what: &str, ell: i64| {
            Error::MalformedPath(format!("step {j} ({}[{w}]): {what} with l = {ell}", step.letter()))
        };
        match step {
            Step::U => {
                let ell = match c {
                    0 => d + i64::from(two_zeros),
                    2 => d - 2 * h - 1,
                    _ => return Err(malformed("t-degree not 0 or 2", 0)),
                };
                if ell < lowest_right as i64 || ell > m - 1 {
                    return Err(malformed("new block out of range", ell));
                }
                blocks.insert((m - ell) as usize, vec![j]);
            }
            Step::L | Step::W => {
                let ell = d - h;
                let target = m - 1 - ell;
                let (lo, hi) = match step {
                    Step::L => (0, m - 1 - lowest_right as i64),
                    _ => (1, m - 1),
                };
                if target < lo || target > hi {
                    return Err(malformed("no such block", ell));
                }
                let b = &mut blocks[target as usize];
                if step == Step::L {
                    b.push(j);
                } else {
                    b.insert(0, j);
                }
            }
            Step::D => {
                let ell = d;
                let left = m - 2 - ell;
                if ell < 0 || left < 0 {
                    return Err(malformed("no blocks to join", ell));
                }
                let right = blocks.remove(left as usize + 1);
                let b = &mut blocks[left as usize];
                b.push(j);
                b.extend(right);
            }
        }
        cs.push(c as u8);
    }
    Ok((blocks, cs))
}

/// Inverse of [`lambda1`].
pub fn lambda1_inv(path: &WeightedPath) -> Result<Snake> {
    check_membership(Scheme::TStar, path)?;
    let (blocks, cs) = decode_words(path, false)?;
    let [block] = blocks.as_slice() else {
        return Err(Error::MalformedPath(format!("{} blocks remain", blocks.len())));
    };
    recover_from_cs(&block[1..], Variant::S0, &cs)
}

/// Inverse of [`lambda2`].
pub fn lambda2_inv(path: &WeightedPath) -> Result<Snake> {
    check_membership(Scheme::T, path)?;
    let (blocks, mut cs) = decode_words(path, true)?;
    let [first, second] = blocks.as_slice() else {
        return Err(Error::MalformedPath(format!("{} blocks remain", blocks.len())));
    };
    let top = path.len() as u32 + 1;
    let mut abs: Vec<u32> = first[1..].to_vec();
    abs.push(top);
    abs.extend_from_slice(&second[..second.len() - 1]);
    cs.push(0);
    recover_from_cs(&abs, Variant::S00, &cs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn snake(s: &str) -> Snake {
        s.parse().unwrap()
    }

    const EXAMPLE: &str = "(5,-2,4,-7,-1,-8,10,-9,6,3) S0";
    const EXAMPLE00: &str = "(5,-2,4,-7,-1,-8,11,-9,6,3,10) S00";

    #[test]
    fn generate_examples() {
        let names = |n, v| generate_snakes(n, v).map(|s| s.window().to_string()).collect::<BTreeSet<_>>();
        assert_eq!(
            names(2, Variant::S0),
            ["(1,-2)", "(2,1)", "(2,-1)"].map(String::from).into()
        );
        assert_eq!(
            names(2, Variant::Full),
            ["(1,-2)", "(2,1)", "(2,-1)", "(-1,-2)"].map(String::from).into()
        );
        assert_eq!(names(1, Variant::S00), ["(1)"].map(String::from).into());
        assert_eq!(generate_snakes(0, Variant::S0).count(), 1);
    }

    #[test]
    fn snake_counts() {
        // Springer numbers, and the counts of S00_{n+1} (2^n E_{n+1})
        let s0: Vec<_> = (0..=7).map(|n| generate_snakes(n, Variant::S0).count()).collect();
        assert_eq!(s0, [1, 1, 3, 11, 57, 361, 2763, 24611]);
        let s00: Vec<_> = (1..=6).map(|n| generate_snakes(n, Variant::S00).count()).collect();
        assert_eq!(s00, [1, 2, 8, 40, 256, 1952]);
    }

    #[test]
    fn example_cs_vector() {
        let s = snake(EXAMPLE);
        assert_eq!(s.cs_vector(), [0, 2, 0, 1, 0, 1, 0, 1, 1, 0]);
        assert_eq!(s.cs(), 6);
        let one = snake("(1) S0");
        assert_eq!(one.cs_vector(), [1]);
        assert_eq!(one.cs(), 1);
    }

    #[test]
    fn example_recovery() {
        let s = snake(EXAMPLE);
        let back = recover_from_cs(&[5, 2, 4, 7, 1, 8, 10, 9, 6, 3], Variant::S0, &[0, 2, 0, 1, 0, 1, 0, 1, 1, 0]);
        assert_eq!(back.unwrap(), s);
        assert_eq!(recover_from_cs(&[1], Variant::S0, &[1]).unwrap(), snake("(1) S0"));
        assert_eq!(recover_from_cs(&[1], Variant::S0, &[0]), Err(Error::UnrealizableCsVector));
    }

    #[test]
    fn recovery_round_trip() {
        for v in [Variant::S0, Variant::S00, Variant::Full] {
            for n in 0..=6 {
                for s in generate_snakes(n, v) {
                    let abs = s.window().abs_window();
                    assert_eq!(recover_from_cs(&abs, v, &s.cs_vector()).unwrap(), s);
                    if n > 0 || v != Variant::Full {
                        assert_eq!(s.cs_vector().iter().map(|&c| c as usize).sum::<usize>(), s.cs(), "{s}");
                    }
                }
            }
        }
    }

    #[test]
    fn table_rows() {
        let bp = BoundedPerm::new(&[5, 2, 4, 7, 1, 8, 10, 9, 6, 3], Variant::S0).unwrap();
        let prof = bp.block_profile();
        assert_eq!(prof.alpha, [1, 2, 3, 4, 4, 3, 3, 2, 2, 2, 1]);
        assert_eq!(prof.beta, [0, 0, 1, 0, 2, 2, 0, 1, 1, 0, 0]);

        let bp = snake(EXAMPLE00).abs_bounded().unwrap();
        let prof = bp.block_profile();
        assert_eq!(prof.alpha[..11], [2, 3, 4, 5, 5, 4, 4, 3, 3, 3, 2]);
        assert_eq!(prof.beta[1..11], [1, 2, 1, 3, 3, 1, 2, 2, 1, 0]);
        assert_eq!((prof.alpha[6], prof.beta[6]), (4, 1));

        let prof = BoundedPerm::new(&[1], Variant::S0).unwrap().block_profile();
        assert_eq!((prof.alpha[1], prof.beta[1]), (1, 0));
    }

    #[test]
    fn pattern_examples() {
        let bp = BoundedPerm::new(&[5, 2, 4, 7, 1, 8, 10, 9, 6, 3], Variant::S0).unwrap();
        assert_eq!(bp.pattern_counts(6), (2, 0));
        assert!(bp.pattern_identity_holds());
        let id = BoundedPerm::new(&[1, 2, 3, 4], Variant::S0).unwrap();
        assert!((1..=4).all(|k| id.pattern_counts(k) == (0, 0)));
        assert_eq!(id.two_thirty_one(), 0);
    }

    #[test]
    fn pattern_identity_on_all_snakes() {
        for v in [Variant::S0, Variant::S00] {
            for n in 0..=6 {
                for s in generate_snakes(n, v) {
                    assert!(s.abs_bounded().unwrap().pattern_identity_holds(), "{s}");
                }
            }
        }
    }

    #[test]
    fn lambda1_example_steps() {
        let path = lambda1(&snake(EXAMPLE)).unwrap();
        assert_eq!(path.steps()[0], Step::U);
        assert_eq!(path.weights()[0], Monomial::ONE);
        assert_eq!(path.steps()[1], Step::U);
        assert_eq!(path.weights()[1], Monomial::new(0, 2, 4));
        let mut labels: Vec<String> = path.weights().iter().map(|m| m.to_string()).collect();
        labels.sort();
        labels.dedup();
        let mut expected: Vec<String> =
            ["1", "t^2*q^4", "t*q^5", "q^2", "t*q^2", "q", "t*q"].map(String::from).to_vec();
        expected.sort();
        assert_eq!(labels, expected);
        assert_eq!(lambda1_inv(&path).unwrap(), snake(EXAMPLE));

        let one = lambda1(&snake("(1) S0")).unwrap();
        assert_eq!(one.to_string(), "L[t]");
    }

    #[test]
    fn lambda2_example_steps() {
        let path = lambda2(&snake(EXAMPLE00)).unwrap();
        assert_eq!(path.len(), 10);
        assert_eq!((path.steps()[0], path.weights()[0]), (Step::U, Monomial::ONE));
        assert_eq!((path.steps()[1], path.weights()[1]), (Step::U, Monomial::new(0, 2, 5)));
        let labels: BTreeSet<String> = path.weights().iter().map(|m| m.to_string()).collect();
        let expected: BTreeSet<String> =
            ["1", "t^2*q^5", "t*q^6", "q^3", "t*q^3", "q^2", "t*q^2"].map(String::from).into();
        assert_eq!(labels, expected);
        assert_eq!(lambda2_inv(&path).unwrap(), snake(EXAMPLE00));
        assert_eq!(lambda2(&snake("(1) S00")).unwrap(), WeightedPath::empty());
    }

    #[test]
    fn enumerator_examples() {
        let p = |s: &str| s.parse::<Polynomial>().unwrap();
        assert_eq!(snake_enumerator(0, Enumerator::Q), p("1"));
        assert_eq!(snake_enumerator(1, Enumerator::Q), p("t"));
        assert_eq!(snake_enumerator(2, Enumerator::Q), p("1 + t^2 + t^2*q"));
        assert_eq!(snake_enumerator(0, Enumerator::R), p("1"));
        assert_eq!(snake_enumerator(1, Enumerator::R), p("t + t*q"));
        assert_eq!(pat_q(&snake("(1) S0")), Ok(0));
        assert!(pat_r(&snake("(1) S0")).is_err());
    }

    #[test]
    fn inverse_rejects_foreign_paths() {
        let bad: WeightedPath = "W[t]".parse().unwrap();
        assert!(matches!(lambda1_inv(&bad), Err(Error::NotInScheme { .. })));
        assert!(lambda2_inv(&bad).is_ok());
    }

    #[test]
    fn snake_validation() {
        assert!("(1,2) S0".parse::<Snake>().is_err());
        assert!("(-2,-1) FULL".parse::<Snake>().is_err());
        assert!("(-1,-2) S0".parse::<Snake>().is_err());
        assert!("(2,1) S00".parse::<Snake>().is_err());
        assert!("(2,-1) S00".parse::<Snake>().is_ok());
    }
}

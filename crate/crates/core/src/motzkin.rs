//! Bicolored Motzkin paths and their weighting schemes.
//!
//! A step's height is the height of its starting point. A down step leaving
//! height `h` is written `D^{(h)}` here; menus for it are quoted in terms of
//! `h - 1` in the usual notation.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{Monomial, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    L,
    W,
    D,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::U, Step::L, Step::W, Step::D];

    pub fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::L | Step::W => 0,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::L => 'L',
            Step::W => 'W',
            Step::D => 'D',
        }
    }

    fn from_letter(c: char) -> Option<Step> {
        Some(match c {
            'U' => Step::U,
            'L' => Step::L,
            'W' => Step::W,
            'D' => Step::D,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathShape {
    steps: Vec<Step>,
}

impl PathShape {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h = 0i32;
        for (i, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::InvalidPath(format!("step {} goes below the axis", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath(format!("path ends at height {h}")));
        }
        Ok(PathShape { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Starting height of every step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0i32;
        self.steps
            .iter()
            .map(|s| {
                let start = h as usize;
                h += s.delta();
                start
            })
            .collect()
    }
}

impl fmt::Display for PathShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for PathShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| Step::from_letter(c).ok_or_else(|| Error::InvalidPath(format!("bad step `{c}`"))))
            .collect::<Result<Vec<_>>>()?;
        PathShape::new(steps)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedPath {
    shape: PathShape,
    weights: Vec<Monomial>,
}

impl WeightedPath {
    pub fn new(shape: PathShape, weights: Vec<Monomial>) -> Result<Self> {
        if shape.len() != weights.len() {
            return Err(Error::InvalidPath(format!(
                "{} steps but {} weights",
                shape.len(),
                weights.len()
            )));
        }
        Ok(WeightedPath { shape, weights })
    }

    /// Builds a path from `(step, weight)` pairs.
    pub fn from_steps(steps: impl IntoIterator<Item = (Step, Monomial)>) -> Result<Self> {
        let (s, w): (Vec<_>, Vec<_>) = steps.into_iter().unzip();
        WeightedPath::new(PathShape::new(s)?, w)
    }

    pub fn empty() -> Self {
        WeightedPath::default()
    }

    pub fn shape(&self) -> &PathShape {
        &self.shape
    }

    pub fn steps(&self) -> &[Step] {
        self.shape.steps()
    }

    pub fn weights(&self) -> &[Monomial] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }

    pub fn weight(&self) -> Monomial {
        self.weights.iter().fold(Monomial::ONE, |acc, &m| acc * m)
    }

    pub(crate) fn set_weight(&mut self, i: usize, m: Monomial) {
        self.weights[i] = m;
    }

    pub(crate) fn set_step(&mut self, i: usize, s: Step) {
        debug_assert_eq!(self.shape.steps[i].delta(), s.delta());
        self.shape.steps[i] = s;
    }
}

impl fmt::Display for WeightedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("(empty)");
        }
        for (i, (s, w)) in self.steps().iter().zip(&self.weights).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}[{}]", s.letter(), w)?;
        }
        Ok(())
    }
}

impl FromStr for WeightedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "(empty)" {
            return Ok(WeightedPath::empty());
        }
        let steps = s
            .split_whitespace()
            .map(|tok| {
                let mut chars = tok.chars();
                let step = chars
                    .next()
                    .and_then(Step::from_letter)
                    .ok_or_else(|| Error::InvalidPath(format!("bad token `{tok}`")))?;
                let w = chars
                    .as_str()
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::InvalidPath(format!("bad token `{tok}`")))?;
                Ok((step, w.parse::<Monomial>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightedPath::from_steps(steps)
    }
}

/// A weighted path family, identified by its per-step weight menus and
/// any global filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scheme {
    /// Signed permutations: `y^fwex t^neg q^cro_B`.
    M,
    /// `M` without straight level steps of weight `y²`.
    MStar,
    /// `M` with even `t`-degree.
    MPrime,
    /// `M*` with even `t`-degree.
    MStarPrime,
    /// Restructured `M`, one step shorter.
    H,
    /// `H` with odd `t`-degree.
    H1,
    /// `H` with even `t`-degree.
    H2,
    /// Fixed points of the first involution.
    F,
    /// Paths counted by `R_n(t,q)`.
    T,
    /// Paths counted by `Q_n(t,q)`.
    TStar,
    /// Fixed points of the second involution.
    G,
}

impl Scheme {
    pub const ALL: [Scheme; 11] = [
        Scheme::M,
        Scheme::MStar,
        Scheme::MPrime,
        Scheme::MStarPrime,
        Scheme::H,
        Scheme::H1,
        Scheme::H2,
        Scheme::F,
        Scheme::T,
        Scheme::TStar,
        Scheme::G,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::M => "M",
            Scheme::MStar => "M*",
            Scheme::MPrime => "M'",
            Scheme::MStarPrime => "M*'",
            Scheme::H => "H",
            Scheme::H1 => "H1",
            Scheme::H2 => "H2",
            Scheme::F => "F",
            Scheme::T => "T",
            Scheme::TStar => "T*",
            Scheme::G => "G",
        }
    }

    pub fn forbids_wavy_on_axis(self) -> bool {
        matches!(
            self,
            Scheme::M | Scheme::MStar | Scheme::MPrime | Scheme::MStarPrime | Scheme::TStar | Scheme::G
        )
    }

    fn t_parity(self) -> Option<u32> {
        match self {
            Scheme::MPrime | Scheme::MStarPrime | Scheme::H2 => Some(0),
            Scheme::H1 => Some(1),
            _ => None,
        }
    }

    /// For `F` and `G`: both weights of a matching pair must come from the
    /// same branch of their menus.
    fn pairs_constrained(self) -> bool {
        matches!(self, Scheme::F | Scheme::G)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        let found = Scheme::ALL.into_iter().find(|sc| {
            sc.name() == upper
                || format!("{sc:?}").to_ascii_uppercase() == upper
                || sc.name().replace('*', "STAR").replace('\'', "PRIME") == upper
        });
        found.ok_or_else(|| Error::InvalidPath(format!("unknown scheme `{s}`")))
    }
}

fn run(y: u32, t: u32, lo: i64, hi: i64) -> impl Iterator<Item = Monomial> {
    (lo..=hi).map(move |e| Monomial::new(y, t, e as i32))
}

/// Allowed weights of `step` leaving height `h` in `scheme`, in canonical
/// monomial order.
pub fn weight_menu(scheme: Scheme, step: Step, h: usize) -> Result<Vec<Monomial>> {
    if step == Step::D && h == 0 {
        return Err(Error::DownStepBelowAxis);
    }
    let h = h as i64;
    let k = h - 1;
    let mut menu: Vec<Monomial> = match (scheme, step) {
        (Scheme::T, Step::U) => run(0, 0, 0, h).chain(run(0, 2, 2 * h + 2, 3 * h + 2)).collect(),
        (Scheme::T, Step::L) => run(0, 1, h + 1, 2 * h + 1).collect(),
        (Scheme::T, Step::W) => run(0, 1, h, 2 * h).collect(),
        (Scheme::T, Step::D) => run(0, 0, 0, k + 1).collect(),

        (Scheme::TStar, Step::U) => run(0, 0, 0, h).chain(run(0, 2, 2 * h + 1, 3 * h + 1)).collect(),
        (Scheme::TStar, Step::L) => run(0, 1, h, 2 * h).collect(),
        (Scheme::TStar, Step::W) => run(0, 1, h, 2 * h - 1).collect(),
        (Scheme::TStar, Step::D) => run(0, 0, 0, k).collect(),

        (Scheme::G, Step::L) => run(1, 1, h, 2 * h).collect(),
        (Scheme::G, Step::W) => run(1, 1, h, 2 * h - 1).collect(),
        (Scheme::MStar | Scheme::MStarPrime, Step::L) => {
            run(2, 0, 1, h).chain(run(1, 1, h, 2 * h)).collect()
        }
        (Scheme::M | Scheme::MStar | Scheme::MPrime | Scheme::MStarPrime | Scheme::G, s) => match s {
            Step::U | Step::L => run(2, 0, 0, h).chain(run(1, 1, h, 2 * h)).collect(),
            Step::W => run(0, 0, 0, h - 1).chain(run(1, 1, h, 2 * h - 1)).collect(),
            Step::D => run(0, 0, 0, k).chain(run(1, 1, k + 1, 2 * k + 1)).collect(),
        },

        (Scheme::F, Step::L) => run(1, 1, h + 1, 2 * h + 1).collect(),
        (Scheme::F, Step::W) => run(1, 1, h, 2 * h).collect(),
        (Scheme::H | Scheme::H1 | Scheme::H2 | Scheme::F, s) => match s {
            Step::U => run(2, 0, 0, h + 1).chain(run(1, 1, h + 1, 2 * h + 2)).collect(),
            Step::L => run(0, 0, 0, h).chain(run(1, 1, h + 1, 2 * h + 1)).collect(),
            Step::W => run(2, 0, 0, h).chain(run(1, 1, h, 2 * h)).collect(),
            Step::D => run(0, 0, 0, k).chain(run(1, 1, k + 1, 2 * k + 1)).collect(),
        },
    };
    menu.sort();
    Ok(menu)
}

/// All Motzkin shapes of length `n`, in lexicographic order over
/// `U < L < W < D`.
pub fn gen_shapes(n: usize, forbid_wavy_on_axis: bool) -> Shapes {
    let mut it = Shapes {
        n,
        forbid: forbid_wavy_on_axis,
        steps: Vec::with_capacity(n),
        heights: Vec::with_capacity(n + 1),
        started: false,
        done: false,
    };
    it.heights.push(0);
    it
}

pub struct Shapes {
    n: usize,
    forbid: bool,
    steps: Vec<Step>,
    /// `heights[i]` is the height before step `i`.
    heights: Vec<i32>,
    started: bool,
    done: bool,
}

impl Shapes {
    fn allowed(&self, s: Step, pos: usize) -> bool {
        let h = self.heights[pos];
        let next = h + s.delta();
        let remaining = (self.n - pos - 1) as i32;
        next >= 0 && next <= remaining && !(self.forbid && s == Step::W && h == 0)
    }

    fn push(&mut self, s: Step) {
        let h = *self.heights.last().unwrap();
        self.steps.push(s);
        self.heights.push(h + s.delta());
    }

    fn fill(&mut self) -> bool {
        while self.steps.len() < self.n {
            let pos = self.steps.len();
            match Step::ALL.into_iter().find(|&s| self.allowed(s, pos)) {
                Some(s) => self.push(s),
                None => return false,
            }
        }
        true
    }
}

impl Iterator for Shapes {
    type Item = PathShape;

    fn next(&mut self) -> Option<PathShape> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill() {
                self.done = true;
                return None;
            }
            return Some(PathShape { steps: self.steps.clone() });
        }
        loop {
            let Some(last) = self.steps.pop() else {
                self.done = true;
                return None;
            };
            self.heights.pop();
            let pos = self.steps.len();
            let alt = Step::ALL
                .into_iter()
                .filter(|&s| s > last)
                .find(|&s| self.allowed(s, pos));
            if let Some(s) = alt {
                self.push(s);
                if self.fill() {
                    return Some(PathShape { steps: self.steps.clone() });
                }
            }
        }
    }
}

/// Stack-matched `(up, down)` step pairs, 1-based, ordered by up index.
pub fn matching_pairs(shape: &PathShape) -> Vec<(usize, usize)> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (i, s) in shape.steps().iter().enumerate() {
        match s {
            Step::U => stack.push(i + 1),
            Step::D => {
                if let Some(u) = stack.pop() {
                    pairs.push((u, i + 1));
                }
            }
            _ => {}
        }
    }
    pairs.sort_unstable();
    pairs
}

fn menus_for(scheme: Scheme, shape: &PathShape) -> Vec<Vec<Monomial>> {
    shape
        .steps()
        .iter()
        .zip(shape.heights())
        .map(|(&s, h)| weight_menu(scheme, s, h).expect("shape stays above the axis"))
        .collect()
}

fn passes_filters(scheme: Scheme, path: &WeightedPath, pairs: &[(usize, usize)]) -> bool {
    if let Some(parity) = scheme.t_parity() {
        if path.weight().t % 2 != parity {
            return false;
        }
    }
    if scheme.pairs_constrained() {
        let w = path.weights();
        return pairs.iter().all(|&(u, d)| {
            let (wu, wd) = (w[u - 1], w[d - 1]);
            (wu.y == 2 && wd.y == 0) || (wu.y == 1 && wd.y == 1)
        });
    }
    true
}

/// Checks that `path` belongs to `scheme`.
pub fn check_membership(scheme: Scheme, path: &WeightedPath) -> Result<()> {
    let not_in = |reason: String| Error::NotInScheme { scheme, reason };
    for (i, ((&s, h), w)) in path
        .steps()
        .iter()
        .zip(path.shape().heights())
        .zip(path.weights())
        .enumerate()
    {
        let menu = weight_menu(scheme, s, h)?;
        if menu.binary_search(w).is_err() {
            return Err(not_in(format!("step {} {}[{}] at height {h} is off-menu", i + 1, s.letter(), w)));
        }
    }
    if let Some(parity) = scheme.t_parity() {
        if path.weight().t % 2 != parity {
            return Err(not_in("wrong t-parity".to_string()));
        }
    }
    let pairs = matching_pairs(path.shape());
    if !passes_filters(scheme, path, &pairs) {
        return Err(not_in("matching pair mixes menu branches".to_string()));
    }
    Ok(())
}

pub fn is_member(scheme: Scheme, path: &WeightedPath) -> bool {
    check_membership(scheme, path).is_ok()
}

/// Every weighted path of length `n` in `scheme`.
///
/// Within a shape, weight choices advance like an odometer with the last
/// step fastest, each step running through its menu in canonical order.
pub fn gen_weighted(scheme: Scheme, n: usize) -> WeightedPaths {
    WeightedPaths {
        scheme,
        shapes: gen_shapes(n, scheme.forbids_wavy_on_axis()),
        current: None,
    }
}

pub struct WeightedPaths {
    scheme: Scheme,
    shapes: Shapes,
    current: Option<Odometer>,
}

struct Odometer {
    shape: PathShape,
    pairs: Vec<(usize, usize)>,
    menus: Vec<Vec<Monomial>>,
    idx: Vec<usize>,
    exhausted: bool,
}

impl Odometer {
    fn path(&self) -> WeightedPath {
        WeightedPath {
            shape: self.shape.clone(),
            weights: self.idx.iter().zip(&self.menus).map(|(&i, m)| m[i]).collect(),
        }
    }

    fn advance(&mut self) {
        for k in (0..self.idx.len()).rev() {
            self.idx[k] += 1;
            if self.idx[k] < self.menus[k].len() {
                return;
            }
            self.idx[k] = 0;
        }
        self.exhausted = true;
    }
}

impl Iterator for WeightedPaths {
    type Item = WeightedPath;

    fn next(&mut self) -> Option<WeightedPath> {
        loop {
            if let Some(od) = self.current.as_mut() {
                while !od.exhausted {
                    let path = od.path();
                    od.advance();
                    if passes_filters(self.scheme, &path, &od.pairs) {
                        return Some(path);
                    }
                }
            }
            let shape = self.shapes.next()?;
            let menus = menus_for(self.scheme, &shape);
            let exhausted = menus.iter().any(|m| m.is_empty());
            self.current = Some(Odometer {
                pairs: matching_pairs(&shape),
                idx: vec![0; menus.len()],
                menus,
                shape,
                exhausted,
            });
        }
    }
}

/// Total weight of all paths of length `n` in `scheme`.
pub fn rho(scheme: Scheme, n: usize) -> Polynomial {
    let mut acc = alloc::collections::BTreeMap::<Monomial, i64>::new();
    for p in gen_weighted(scheme, n) {
        *acc.entry(p.weight()).or_default() += 1;
    }
    Polynomial::from_terms(acc.into_iter().map(|(m, c)| (c, m)))
}

//! Sparse Laurent polynomials in `y`, `t`, `q` over the integers.
//!
//! `y` and `t` carry nonnegative exponents; only `q` may go negative. Terms
//! are kept in a `BTreeMap` keyed by [`Monomial`], whose derived ordering is
//! lexicographic on `(y, t, q)`, so iteration order is the canonical order
//! used by the text and JSON forms.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Y,
    T,
    Q,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::Y => 'y',
            Var::T => 't',
            Var::Q => 'q',
        }
    }
}

/// A power product `y^y t^t q^q` with unit coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub y: u32,
    pub t: u32,
    pub q: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { y: 0, t: 0, q: 0 };

    pub const fn new(y: u32, t: u32, q: i32) -> Self {
        Monomial { y, t, q }
    }

    pub const fn q_pow(e: i32) -> Self {
        Monomial { y: 0, t: 0, q: e }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Exponent differences `self / other` as signed triples.
    pub fn ratio(&self, other: &Monomial) -> (i64, i64, i64) {
        (
            i64::from(self.y) - i64::from(other.y),
            i64::from(self.t) - i64::from(other.t),
            i64::from(self.q) - i64::from(other.q),
        )
    }

    fn exponent(&self, var: Var) -> i64 {
        match var {
            Var::Y => i64::from(self.y),
            Var::T => i64::from(self.t),
            Var::Q => i64::from(self.q),
        }
    }

    fn without(mut self, var: Var) -> Self {
        match var {
            Var::Y => self.y = 0,
            Var::T => self.t = 0,
            Var::Q => self.q = 0,
        }
        self
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial {
            y: self.y + rhs.y,
            t: self.t + rhs.t,
            q: self.q + rhs.q,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (var, e) in [
            (Var::Y, i64::from(self.y)),
            (Var::T, i64::from(self.t)),
            (Var::Q, i64::from(self.q)),
        ] {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", var.name())?;
            } else {
                write!(f, "{}^{}", var.name(), e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Polynomial = s.parse()?;
        let mut terms = p.terms();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() => Ok(*m),
            _ => Err(Error::ParsePolynomial(format!("`{s}` is not a unit monomial"))),
        }
    }
}

/// Exact sparse Laurent polynomial; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), m);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(1, m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(match v {
            Var::Y => Monomial::new(1, 0, 0),
            Var::T => Monomial::new(0, 1, 0),
            Var::Q => Monomial::new(0, 0, 1),
        })
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(c.into(), m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(y, t, q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `y = t = q = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Keep only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn max_exponent(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Substitute `value` for `var`.
    ///
    /// Negative powers of `var` (only possible for `q`) need `value` to be a
    /// unit monomial `±q^e`; anything else has no inverse in this ring.
    pub fn subst(&self, var: Var, value: &Polynomial) -> Result<Polynomial> {
        let mut powers: BTreeMap<i64, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if let alloc::collections::btree_map::Entry::Vacant(slot) = powers.entry(e) {
                slot.insert(if e >= 0 {
                    value.pow(e as u32)
                } else {
                    value.unit_inverse()?.pow(e.unsigned_abs() as u32)
                });
            }
            let rest = Polynomial::term(c.clone(), m.without(var));
            out += &(&rest * &powers[&e]);
        }
        Ok(out)
    }

    fn unit_inverse(&self) -> Result<Polynomial> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some((m, c)), None) if c.abs().is_one() && m.y == 0 && m.t == 0 => {
                Ok(Polynomial::term(c.clone(), Monomial::q_pow(-m.q)))
            }
            _ => Err(Error::NonInvertibleSubstitution),
        }
    }

    /// Convenience for the common integer evaluation of `y`, `t`, `q`.
    pub fn eval(&self, y: i64, t: i64, q: i64) -> Result<BigInt> {
        let p = self
            .subst(Var::Y, &Polynomial::constant(y))?
            .subst(Var::T, &Polynomial::constant(t))?
            .subst(Var::Q, &Polynomial::constant(q))?;
        Ok(p.coefficient(&Monomial::ONE))
    }

    fn check_tq(&self) -> Result<()> {
        if self.terms.keys().any(|m| m.y > 0) {
            Err(Error::OperatorDomain)
        } else {
            Ok(())
        }
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer(n: u32) -> Polynomial {
    Polynomial::from_terms((0..n as i32).map(|e| (1, Monomial::q_pow(e))))
}

/// The `q`-derivative `D`, acting by `D(t^n) = [n]_q t^{n-1}`.
pub fn q_derivative(p: &Polynomial) -> Result<Polynomial> {
    p.check_tq()?;
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        if m.t == 0 {
            continue;
        }
        for e in 0..m.t as i32 {
            out.add_term(c.clone(), Monomial::new(0, m.t - 1, m.q + e));
        }
    }
    Ok(out)
}

/// The operator `U`: multiplication by `t`.
pub fn u_multiply(p: &Polynomial) -> Result<Polynomial> {
    p.check_tq()?;
    Ok(p.mul_monomial(Monomial::new(0, 1, 0)))
}

type Coefficients = Box<dyn Fn(usize) -> Polynomial + Send + Sync>;

/// Level weights `mu(h)` for `h >= 0` and fall weights `lambda(h)` for
/// `h >= 1` of a Jacobi-type continued fraction.
pub struct CoefficientSchedule {
    mu: Coefficients,
    lambda: Coefficients,
}

impl CoefficientSchedule {
    pub fn new(
        mu: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
        lambda: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
    ) -> Self {
        CoefficientSchedule {
            mu: Box::new(mu),
            lambda: Box::new(lambda),
        }
    }

    pub fn zero() -> Self {
        Self::new(|_| Polynomial::zero(), |_| Polynomial::zero())
    }

    /// `mu_h = t q^h ([h]_q + [h+1]_q)`, `lambda_h = (1 + t^2 q^{2h-1}) [h]_q^2`.
    pub fn q_polynomials() -> Self {
        Self::new(
            |h| {
                let h32 = h as u32;
                (&q_integer(h32) + &q_integer(h32 + 1)).mul_monomial(Monomial::new(0, 1, h as i32))
            },
            |h| {
                let qh = q_integer(h as u32);
                let head = Polynomial::one() + Polynomial::monomial(Monomial::new(0, 2, 2 * h as i32 - 1));
                &head * &(&qh * &qh)
            },
        )
    }

    /// `mu_h = t q^h (1+q) [h+1]_q`, `lambda_h = (1 + t^2 q^{2h}) [h]_q [h+1]_q`.
    pub fn r_polynomials() -> Self {
        Self::new(
            |h| {
                let h32 = h as u32;
                (&q_integer(2) * &q_integer(h32 + 1)).mul_monomial(Monomial::new(0, 1, h as i32))
            },
            |h| {
                let h32 = h as u32;
                let head = Polynomial::one() + Polynomial::monomial(Monomial::new(0, 2, 2 * h as i32));
                &head * &(&q_integer(h32) * &q_integer(h32 + 1))
            },
        )
    }

    /// Trivariate enumerator of signed permutations:
    /// `mu_h = y^2 [h+1]_q + [h]_q + y t q^h ([h]_q + [h+1]_q)`,
    /// `lambda_h = [h]_q^2 (y^2 + y t q^{h-1}) (1 + y t q^h)`.
    pub fn signed_permutations() -> Self {
        Self::new(
            |h| {
                let h32 = h as u32;
                let (qh, qh1) = (q_integer(h32), q_integer(h32 + 1));
                let mixed = (&qh + &qh1).mul_monomial(Monomial::new(1, 1, h as i32));
                &(&qh1.mul_monomial(Monomial::new(2, 0, 0)) + &qh) + &mixed
            },
            |h| {
                let qh = q_integer(h as u32);
                let rise = Polynomial::monomial(Monomial::new(2, 0, 0))
                    + Polynomial::monomial(Monomial::new(1, 1, h as i32 - 1));
                let fall = Polynomial::one() + Polynomial::monomial(Monomial::new(1, 1, h as i32));
                &(&qh * &qh) * &(&rise * &fall)
            },
        )
    }

    pub fn mu(&self, h: usize) -> Polynomial {
        (self.mu)(h)
    }

    pub fn lambda(&self, h: usize) -> Polynomial {
        (self.lambda)(h)
    }
}

/// Coefficients of `x^0..=x^n_max` in the expansion of the J-fraction
/// `1/(1 - mu_0 x - lambda_1 x^2/(1 - mu_1 x - ...))`.
///
/// Computed as the weighted count of Motzkin paths: level steps at height
/// `h` weigh `mu_h`, a down step from `h` to `h-1` weighs `lambda_h`.
pub fn jfraction_series(schedule: &CoefficientSchedule, n_max: usize) -> Vec<Polynomial> {
    let top = n_max / 2 + 1;
    let mu: Vec<Polynomial> = (0..=top).map(|h| schedule.mu(h)).collect();
    let lambda: Vec<Polynomial> = (0..=top + 1)
        .map(|h| if h == 0 { Polynomial::zero() } else { schedule.lambda(h) })
        .collect();

    // prefix[h] = weighted paths of the current length ending at height h
    let mut prefix = vec![Polynomial::one()];
    let mut out = vec![Polynomial::one()];
    for len in 1..=n_max {
        let reach = len.min(n_max - len);
        let mut next = vec![Polynomial::zero(); reach + 1];
        for (h, slot) in next.iter_mut().enumerate() {
            if let Some(p) = prefix.get(h) {
                *slot += &(p * &mu[h]);
            }
            if h >= 1 {
                if let Some(p) = prefix.get(h - 1) {
                    *slot += p;
                }
            }
            if let Some(p) = prefix.get(h + 1) {
                *slot += &(p * &lambda[h + 1]);
            }
        }
        out.push(next[0].clone());
        prefix = next;
    }
    out
}

/// Coefficients of `x^0..=x^n_max` in the Stieltjes-type fraction
/// `1/(1 - a_1 x/(1 - a_2 x/(1 - ...)))`.
///
/// Its `x^n` coefficient is the `x^{2n}` coefficient of the J-fraction with
/// zero level weights and `lambda_h = a_h`.
pub fn sfraction_series(
    a: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
    n_max: usize,
) -> Vec<Polynomial> {
    let schedule = CoefficientSchedule::new(|_| Polynomial::zero(), a);
    jfraction_series(&schedule, 2 * n_max)
        .into_iter()
        .step_by(2)
        .collect()
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), *m);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(-c, *m);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, *ma * *mb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                $tr::$f(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                $tr::$f(&self, rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

/// Canonical text form, e.g. `1 + t^2 + t^2*q` or `-t^2 - t^2*q`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums of products of integers and `y`, `t`, `q` powers, as
    /// written by the `Display` impl. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::ParsePolynomial("empty input".to_string()));
        }
        let bytes = compact.as_bytes();
        let mut out = Polynomial::zero();
        let mut start = 0;
        for i in 0..=bytes.len() {
            let split = i == bytes.len()
                || (i > start && (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^');
            if split {
                let (c, m) = parse_term(&compact[start..i])?;
                out.add_term(c, m);
                start = i;
            }
        }
        Ok(out)
    }
}

fn parse_term(raw: &str) -> Result<(BigInt, Monomial)> {
    let bad = || Error::ParsePolynomial(format!("bad term `{raw}`"));
    let (sign, body) = match raw.as_bytes().first() {
        Some(b'+') => (1, &raw[1..]),
        Some(b'-') => (-1, &raw[1..]),
        _ => (1, raw),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut coeff = BigInt::from(sign);
    let mut m = Monomial::ONE;
    for factor in body.split('*') {
        let mut chars = factor.chars();
        match chars.next() {
            Some(v @ ('y' | 't' | 'q')) => {
                let rest = chars.as_str();
                let e: i64 = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|d| d.parse().ok())
                        .ok_or_else(bad)?
                };
                match v {
                    'y' => m.y = add_nonneg(m.y, e).ok_or_else(bad)?,
                    't' => m.t = add_nonneg(m.t, e).ok_or_else(bad)?,
                    _ => m.q = i32::try_from(i64::from(m.q) + e).map_err(|_| bad())?,
                }
            }
            Some(d) if d.is_ascii_digit() => {
                let c: BigInt = factor.parse().map_err(|_| bad())?;
                coeff *= c;
            }
            _ => return Err(bad()),
        }
    }
    Ok((coeff, m))
}

fn add_nonneg(base: u32, e: i64) -> Option<u32> {
    u32::try_from(i64::from(base) + e).ok()
}

//! Catalog of runnable identity checks.
//!
//! Each check runs its identity for every `n` in range, smallest first, and
//! stops at the first failure with a replayable witness.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use snakelab_core::algebra::{jfraction_series, q_derivative, u_multiply, CoefficientSchedule};
use snakelab_core::bijections::{is_fixed_f, is_fixed_g, phi, phi_inverse, psi1, psi2, HeadWeight};
use snakelab_core::eulerians::q_euler;
use snakelab_core::motzkin::{gen_weighted, is_member, rho};
use snakelab_core::permstats::{
    excedance_distribution, gamma_coeffs, generate, signed_enumerator, stats, xi_coeffs,
};
use snakelab_core::snakes::{
    recover_from_cs, generate_snakes, lambda1, lambda1_inv, lambda2, lambda2_inv, snake_enumerator,
    BoundedPerm, Enumerator,
};
use snakelab_core::{
    Family, Monomial, Polynomial, Scheme, SignScheme, SignedPermutation, Snake, Var, Variant,
    WeightedPath,
};

use crate::cache;

type Verdict = Result<(), String>;

/// Which sizes a check covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    /// `min..=default`, with the ceiling overridable.
    Scaled { min: usize, default: usize },
    /// Always exactly these sizes.
    Fixed(usize, usize),
}

pub struct Check {
    pub id: &'static str,
    pub summary: &'static str,
    pub range: Range,
    run: fn(usize) -> Verdict,
    notes: Option<fn(usize, usize) -> Vec<String>>,
}

impl Check {
    /// Inclusive size range for an optional ceiling override.
    pub fn sizes(&self, n_max: Option<usize>) -> (usize, usize) {
        match self.range {
            Range::Scaled { min, default } => (min, n_max.unwrap_or(default)),
            Range::Fixed(lo, hi) => (lo, hi),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub n_range: (usize, usize),
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.n_range;
        write!(f, "{} {} n={lo}..={hi}", self.status, self.id)?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown check id `{0}`")]
pub struct UnknownCheck(pub String);

pub fn run_check(id: &str, n_max: Option<usize>) -> Result<CheckResult, UnknownCheck> {
    let check = catalog()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| UnknownCheck(id.to_string()))?;
    Ok(execute(check, n_max))
}

/// Every check, run in parallel and reported in catalog order.
pub fn run_all(n_max: Option<usize>) -> Vec<CheckResult> {
    catalog().par_iter().map(|c| execute(c, n_max)).collect()
}

fn execute(check: &Check, n_max: Option<usize>) -> CheckResult {
    let (lo, hi) = check.sizes(n_max);
    let mut result = CheckResult {
        id: check.id.to_string(),
        n_range: (lo, hi),
        status: Status::Skipped,
        witness: None,
        notes: Vec::new(),
    };
    if hi < lo {
        return result;
    }
    result.status = Status::Pass;
    for n in lo..=hi {
        if let Err(w) = (check.run)(n) {
            result.status = Status::Fail;
            result.witness = Some(w);
            break;
        }
    }
    if let Some(notes) = check.notes {
        result.notes = notes(lo, hi);
    }
    result
}

macro_rules! check {
    ($id:literal, $summary:literal, $range:expr, $run:expr) => {
        Check { id: $id, summary: $summary, range: $range, run: $run, notes: None }
    };
    ($id:literal, $summary:literal, $range:expr, $run:expr, $notes:expr) => {
        Check { id: $id, summary: $summary, range: $range, run: $run, notes: Some($notes) }
    };
}

const fn scaled(min: usize, default: usize) -> Range {
    Range::Scaled { min, default }
}

pub fn catalog() -> &'static [Check] {
    static CATALOG: &[Check] = &[
        check!("golden-polynomials", "Q_0..Q_3 and R_0..R_3 match the listed closed forms", Range::Fixed(0, 3), golden_polynomials),
        check!("q2-golden", "Q_2 = 1 + (1+q)t^2", Range::Fixed(2, 2), q2_golden),
        check!("qr-jfraction", "operator Q_n, R_n equal the J-fraction coefficients", scaled(0, 8), qr_jfraction),
        check!("commutation", "(DU - qUD) f = f on Q_n and R_n", scaled(0, 8), commutation),
        check!("qr-at-one", "Q_n(1,1) = S_n and R_n(1,1) = 2^n E_{n+1}", scaled(0, 7), qr_at_one),
        check!("q-euler-at-one", "E_n(1) = E_n", scaled(0, 9), q_euler_at_one),
        check!("q-even-at-t0", "Q_{2n}(0,q) = E_{2n}(q), Q_{2n+1}(0,q) = 0", scaled(0, 8), q_even_at_t0),
        check!("r-odd-at-t0", "R_{2n}(0,q) = E_{2n+1}(q), R_{2n+1}(0,q) = 0", scaled(0, 8), r_odd_at_t0, r_odd_notes),
        check!("euler-exc-signed", "sum over S_n of (-1)^exc", scaled(1, 8), euler_exc_signed),
        check!("euler-exc-derangements", "sum over derangements of (-1)^exc", scaled(1, 8), euler_exc_derangements),
        check!("jv-wex-cro", "sum over S_n of (-1)^wex q^cro", scaled(1, 7), jv_wex_cro),
        check!("jv-derangements", "sum over derangements of (-1/q)^wex q^cro", scaled(1, 7), jv_derangements),
        check!("gamma-expansion", "excedance polynomial from gamma coefficients", scaled(1, 7), gamma_expansion),
        check!("xi-expansion", "derangement excedance polynomial from xi coefficients", scaled(0, 7), xi_expansion),
        check!("t-weighting", "rho(T_n) = R_n", scaled(0, 5), t_weighting),
        check!("tstar-weighting", "rho(T*_n) = Q_n", scaled(0, 5), tstar_weighting),
        check!("b-enumerator-paths", "rho(M_n) = sum over B_n of y^fwex t^neg q^cro_B", scaled(0, 5), b_enumerator_paths),
        check!("b-enumerator-jfraction", "B_n(y,t,q) equals its J-fraction coefficient", scaled(0, 5), b_enumerator_jfraction),
        check!("signed-family-paths", "D_n, B*_n, D*_n enumerators equal rho(M'_n), rho(M*_n), rho(M*'_n)", scaled(0, 5), signed_family_paths),
        check!("restructure-cover", "two-to-one cover M_n -> H_{n-1} and rho(M_n) = (y^2+yt) rho(H_{n-1})", scaled(1, 5), restructure_cover),
        check!("psi1-involution", "involution on H_n with fixed set F_n and rho(F_n) = y^n R_n", scaled(0, 5), psi1_involution),
        check!("psi2-involution", "involution on M*_n with fixed set G_n and rho(G_n) = y^n Q_n", scaled(0, 5), psi2_involution),
        check!("sign-fwex-b", "signed fwex enumerator over B_n", scaled(1, 6), sign_fwex_b),
        check!("sign-fwex-d", "signed fwex enumerator over D_n", scaled(1, 6), sign_fwex_d),
        check!("sign-fwex-bstar", "(-1/q)-signed fwex enumerator over B*_n", scaled(1, 6), sign_fwex_bstar),
        check!("sign-fwex-dstar", "(-1/q)-signed fwex enumerator over D*_n", scaled(1, 6), sign_fwex_dstar),
        check!("eval-b", "sum over B_n of (-1)^floor(fwex/2)", scaled(1, 6), eval_b),
        check!("eval-d", "sum over D_n of (-1)^floor(fwex/2)", scaled(1, 6), eval_d),
        check!("eval-bstar", "sum over B*_n of (-1)^floor(fwex/2)", scaled(1, 6), eval_bstar),
        check!("eval-dstar", "sum over D*_n of (-1)^floor(fwex/2)", scaled(1, 6), eval_dstar),
        check!("desb-equidistribution", "des_B and floor(fwex/2) are equidistributed on B_n", scaled(0, 5), desb_equidistribution),
        check!("cs-recovery", "snakes are recovered from |window| and cs-vector", scaled(0, 6), recover_from_csy),
        check!("pattern-identity", "2-31 and 13-2 counts agree with the block profile", scaled(0, 6), pattern_identity),
        check!("lambda1-bijection", "S0_n -> T*_n is a bijection and Q_n enumerates S0_n", scaled(0, 6), lambda1_bijection),
        check!("lambda2-bijection", "S00_{n+1} -> T_n is a bijection and R_n enumerates S00_{n+1}", scaled(0, 6), lambda2_bijection),
        check!("worked-examples", "hand-computed statistics, tables and path labels", Range::Fixed(0, 0), worked_examples),
    ];
    CATALOG
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("literal polynomial")
}

fn mono(y: u32, t: u32, q: i32) -> Polynomial {
    Polynomial::monomial(Monomial::new(y, t, q))
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(-1/q)^k`
fn neg_inv_q(k: usize) -> Polynomial {
    Polynomial::term(sign(k), Monomial::q_pow(-(k as i32)))
}

fn expect_poly(n: usize, what: &str, got: &Polynomial, want: &Polynomial) -> Verdict {
    if got == want {
        return Ok(());
    }
    Err(format!("n={n}: {what}: got {got}; expected {want}; difference {}", got - want))
}

fn expect_int(n: usize, what: &str, got: &BigInt, want: &BigInt) -> Verdict {
    if got == want {
        return Ok(());
    }
    Err(format!("n={n}: {what}: got {got}; expected {want}"))
}

fn enumerator(n: usize, family: Family, scheme: SignScheme) -> Result<Polynomial, String> {
    signed_enumerator(n, family, scheme).map_err(|e| e.to_string())
}

fn at_t0(f: &Polynomial) -> Polynomial {
    f.subst(Var::T, &Polynomial::zero()).expect("polynomial substitution")
}

fn rho_sum<'a>(paths: impl IntoIterator<Item = &'a WeightedPath>) -> Polynomial {
    let mut acc = Polynomial::zero();
    for mu in paths {
        acc.add_term(1.into(), mu.weight());
    }
    acc
}

// Polynomial layer

const LISTED_Q: [&str; 4] = ["1", "t", "1 + t^2 + t^2*q", "2*t + 2*t*q + t*q^2 + t^3 + 2*t^3*q + 2*t^3*q^2 + t^3*q^3"];
const LISTED_R: [&str; 4] = [
    "1",
    "t + t*q",
    "1 + q + t^2 + 2*t^2*q + 2*t^2*q^2 + t^2*q^3",
    "2*t + 5*t*q + 5*t*q^2 + 3*t*q^3 + t*q^4 + t^3 + 3*t^3*q + 5*t^3*q^2 + 6*t^3*q^3 + 5*t^3*q^4 + 3*t^3*q^5 + t^3*q^6",
];

/// The listed closed forms, built from their factored coefficients.
fn listed(n: usize) -> (Polynomial, Polynomial) {
    let t = |k: u32| mono(0, k, 0);
    let q = [
        p("1"),
        t(1),
        &p("1") + &(&p("1 + q") * &t(2)),
        &(&p("2 + 2*q + q^2") * &t(1)) + &(&p("1 + 2*q + 2*q^2 + q^3") * &t(3)),
    ];
    let r = [
        p("1"),
        &p("1 + q") * &t(1),
        &p("1 + q") + &(&p("1 + 2*q + 2*q^2 + q^3") * &t(2)),
        &(&p("2 + 5*q + 5*q^2 + 3*q^3 + q^4") * &t(1))
            + &(&p("1 + 3*q + 5*q^2 + 6*q^3 + 5*q^4 + 3*q^5 + q^6") * &t(3)),
    ];
    (q[n].clone(), r[n].clone())
}

fn golden_polynomials(n: usize) -> Verdict {
    let (lq, lr) = listed(n);
    for (name, got, closed, text) in [("Q", cache::q(n), lq, LISTED_Q[n]), ("R", cache::r(n), lr, LISTED_R[n])] {
        let (got, closed) = (got.to_string(), closed.to_string());
        if got != text || closed != text {
            return Err(format!("n={n}: {name}_{n} renders as `{got}`; closed form `{closed}`; expected `{text}`"));
        }
    }
    Ok(())
}

fn q2_golden(n: usize) -> Verdict {
    let closed = &p("1") + &(&p("1 + q") * &mono(0, 2, 0));
    expect_poly(n, "Q_2", &cache::q(n), &closed)
}

fn qr_jfraction(n: usize) -> Verdict {
    let q = jfraction_series(&CoefficientSchedule::q_polynomials(), n);
    let r = jfraction_series(&CoefficientSchedule::r_polynomials(), n);
    expect_poly(n, "Q_n vs J-fraction", &cache::q(n), &q[n])?;
    expect_poly(n, "R_n vs J-fraction", &cache::r(n), &r[n])
}

fn commutation(n: usize) -> Verdict {
    for f in [cache::q(n), cache::r(n)] {
        let du = q_derivative(&u_multiply(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let ud = u_multiply(&q_derivative(&f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        expect_poly(n, "(DU - qUD) f", &(&du - &ud.mul_monomial(Monomial::q_pow(1))), &f)?;
    }
    Ok(())
}

fn qr_at_one(n: usize) -> Verdict {
    let eval = |f: Polynomial| f.eval(1, 1, 1).map_err(|e| e.to_string());
    expect_int(n, "Q_n(1,1) vs S_n", &eval(cache::q(n))?, &cache::springer(n))?;
    expect_int(n, "R_n(1,1) vs 2^n E_{n+1}", &eval(cache::r(n))?, &(cache::euler(n + 1) << n))
}

fn q_euler_at_one(n: usize) -> Verdict {
    let got = q_euler(n).eval(1, 1, 1).map_err(|e| e.to_string())?;
    expect_int(n, "E_n(1)", &got, &cache::euler(n))
}

fn q_even_at_t0(n: usize) -> Verdict {
    let want = if n.is_multiple_of(2) { q_euler(n) } else { Polynomial::zero() };
    expect_poly(n, "Q_n(0,q)", &at_t0(&cache::q(n)), &want)
}

fn r_odd_at_t0(n: usize) -> Verdict {
    let want = if n.is_multiple_of(2) { q_euler(n + 1) } else { Polynomial::zero() };
    expect_poly(n, "R_n(0,q)", &at_t0(&cache::r(n)), &want)
}

fn r_odd_notes(lo: usize, hi: usize) -> Vec<String> {
    let failure = (lo..=hi).filter(|n| n % 2 == 1).find_map(|n| {
        let (got, want) = (at_t0(&cache::r(n)), q_euler(n));
        (got != want).then(|| format!("n={n}: R_{n}(0,q) = {got} but E_{n}(q) = {want}"))
    });
    let mut notes = vec!["corrected statement: the literal form R_{2n+1}(0,q) = E_{2n+1}(q) is false; \
         R_{2n+1} has only odd powers of t, so R_{2n+1}(0,q) = 0, and the q-tangent numbers \
         appear one index lower as R_{2n}(0,q) = E_{2n+1}(q)"
        .to_string()];
    match failure {
        Some(w) => notes.push(format!("literal form refuted at {w}")),
        None => notes.push("range too small to refute the literal form".to_string()),
    }
    notes
}

// Classical layer

fn euler_exc_signed(n: usize) -> Verdict {
    let got = enumerator(n, Family::A, SignScheme::EulerExc)?;
    let want = if n.is_multiple_of(2) { BigInt::from(0) } else { sign((n - 1) / 2) * cache::euler(n) };
    expect_poly(n, "sum (-1)^exc over S_n", &got, &Polynomial::constant(want))
}

fn euler_exc_derangements(n: usize) -> Verdict {
    let got = enumerator(n, Family::AStar, SignScheme::EulerExc)?;
    let want = if n.is_multiple_of(2) { sign(n / 2) * cache::euler(n) } else { BigInt::from(0) };
    expect_poly(n, "sum (-1)^exc over S*_n", &got, &Polynomial::constant(want))
}

fn jv_wex_cro(n: usize) -> Verdict {
    let got = enumerator(n, Family::A, SignScheme::JvWexCro)?;
    let want = if n.is_multiple_of(2) { Polynomial::zero() } else { q_euler(n).scale(&sign(n.div_ceil(2)).into()) };
    expect_poly(n, "sum (-1)^wex q^cro over S_n", &got, &want)
}

fn jv_derangements(n: usize) -> Verdict {
    let got = enumerator(n, Family::AStar, SignScheme::JvDerange)?;
    let want = if n.is_multiple_of(2) { &neg_inv_q(n / 2) * &q_euler(n) } else { Polynomial::zero() };
    expect_poly(n, "sum (-1/q)^wex q^cro over S*_n", &got, &want)
}

/// `Σ_i c_i x^i (1+x)^{top - 2i}` with `x` carried by `q`.
fn gamma_form(coeffs: &[u64], top: usize) -> Polynomial {
    let one_plus_x = p("1 + q");
    let mut acc = Polynomial::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        let term = one_plus_x.pow((top - 2 * i) as u32).mul_monomial(Monomial::q_pow(i as i32));
        acc += &term.scale(&c.into());
    }
    acc
}

fn distribution(counts: &[u64]) -> Polynomial {
    Polynomial::from_terms(counts.iter().enumerate().map(|(k, &c)| (c, Monomial::q_pow(k as i32))))
}

fn gamma_expansion(n: usize) -> Verdict {
    let got = distribution(&excedance_distribution(n, false));
    expect_poly(n, "sum x^exc over S_n (x = q)", &got, &gamma_form(&gamma_coeffs(n), n - 1))
}

fn xi_expansion(n: usize) -> Verdict {
    let got = distribution(&excedance_distribution(n, true));
    expect_poly(n, "sum x^exc over S*_n (x = q)", &got, &gamma_form(&xi_coeffs(n), n))
}

// Path layer

fn t_weighting(n: usize) -> Verdict {
    expect_poly(n, "rho(T_n) vs R_n", &rho(Scheme::T, n), &cache::r(n))
}

fn tstar_weighting(n: usize) -> Verdict {
    expect_poly(n, "rho(T*_n) vs Q_n", &rho(Scheme::TStar, n), &cache::q(n))
}

fn b_enumerator_paths(n: usize) -> Verdict {
    let b = enumerator(n, Family::B, SignScheme::FullYtq)?;
    expect_poly(n, "rho(M_n) vs B_n(y,t,q)", &rho(Scheme::M, n), &b)
}

fn b_enumerator_jfraction(n: usize) -> Verdict {
    let b = enumerator(n, Family::B, SignScheme::FullYtq)?;
    let cf = jfraction_series(&CoefficientSchedule::signed_permutations(), n);
    expect_poly(n, "B_n(y,t,q) vs J-fraction", &b, &cf[n])
}

fn signed_family_paths(n: usize) -> Verdict {
    for (family, scheme) in [(Family::D, Scheme::MPrime), (Family::BStar, Scheme::MStar), (Family::DStar, Scheme::MStarPrime)] {
        let got = enumerator(n, family, SignScheme::FullYtq)?;
        expect_poly(n, &format!("{family} enumerator vs rho({})", scheme.name()), &got, &rho(scheme, n))?;
    }
    Ok(())
}

fn restructure_cover(n: usize) -> Verdict {
    let mut fibres: BTreeMap<WeightedPath, Vec<HeadWeight>> = BTreeMap::new();
    for mu in gen_weighted(Scheme::M, n) {
        let (head, nu) = phi(&mu).map_err(|e| format!("n={n}: {mu}: {e}"))?;
        if head.monomial() * nu.weight() != mu.weight() {
            return Err(format!("n={n}: weight not split by {mu} -> {nu}"));
        }
        if phi_inverse(head, &nu).map_err(|e| e.to_string())? != mu {
            return Err(format!("n={n}: inverse does not return {mu}"));
        }
        fibres.entry(nu).or_default().push(head);
    }
    let h = gen_weighted(Scheme::H, n - 1).collect::<BTreeSet<_>>();
    if let Some(nu) = h.iter().find(|nu| fibres.get(*nu).is_none_or(|f| f.len() != 2 || f[0] == f[1])) {
        return Err(format!("n={n}: fibre over {nu} is {:?}", fibres.get(nu)));
    }
    if fibres.len() != h.len() {
        return Err(format!("n={n}: image has {} paths, H_{} has {}", fibres.len(), n - 1, h.len()));
    }
    let lifted = &(&mono(2, 0, 0) + &mono(1, 1, 0)) * &rho_sum(&h);
    expect_poly(n, "rho(M_n) vs (y^2+yt) rho(H_{n-1})", &rho(Scheme::M, n), &lifted)
}

fn psi1_involution(n: usize) -> Verdict {
    let mut fixed = Polynomial::zero();
    for mu in gen_weighted(Scheme::H, n) {
        let image = psi1(&mu).map_err(|e| format!("n={n}: {mu}: {e}"))?;
        if psi1(&image).map_err(|e| e.to_string())? != mu {
            return Err(format!("n={n}: not an involution at {mu} -> {image}"));
        }
        if is_member(Scheme::H1, &image) != is_member(Scheme::H1, &mu) {
            return Err(format!("n={n}: parity slice not preserved at {mu} -> {image}"));
        }
        if image == mu {
            if !is_fixed_f(&mu) {
                return Err(format!("n={n}: fixed point outside F_n: {mu}"));
            }
            if mu.weight().t as usize % 2 != n % 2 {
                return Err(format!("n={n}: fixed point with t-degree of wrong parity: {mu}"));
            }
            fixed.add_term(1.into(), mu.weight());
        } else {
            if is_fixed_f(&mu) {
                return Err(format!("n={n}: member of F_n moved: {mu} -> {image}"));
            }
            let r = image.weight().ratio(&mu.weight());
            if r != (2, 0, 0) && r != (-2, 0, 0) {
                return Err(format!("n={n}: weight ratio {r:?} at {mu} -> {image}"));
            }
        }
    }
    let target = cache::r(n).mul_monomial(Monomial::new(n as u32, 0, 0));
    expect_poly(n, "fixed points of psi1 vs y^n R_n", &fixed, &target)?;
    expect_poly(n, "rho(F_n) vs y^n R_n", &rho(Scheme::F, n), &target)
}

fn psi2_involution(n: usize) -> Verdict {
    let mut fixed = Polynomial::zero();
    for mu in gen_weighted(Scheme::MStar, n) {
        let image = psi2(&mu).map_err(|e| format!("n={n}: {mu}: {e}"))?;
        if psi2(&image).map_err(|e| e.to_string())? != mu {
            return Err(format!("n={n}: not an involution at {mu} -> {image}"));
        }
        if image == mu {
            if !is_fixed_g(&mu) {
                return Err(format!("n={n}: fixed point outside G_n: {mu}"));
            }
            fixed.add_term(1.into(), mu.weight());
        } else {
            if is_fixed_g(&mu) {
                return Err(format!("n={n}: member of G_n moved: {mu} -> {image}"));
            }
            let r = image.weight().ratio(&mu.weight());
            if r != (2, 0, 1) && r != (-2, 0, -1) {
                return Err(format!("n={n}: weight ratio {r:?} at {mu} -> {image}"));
            }
        }
    }
    let target = cache::q(n).mul_monomial(Monomial::new(n as u32, 0, 0));
    expect_poly(n, "fixed points of psi2 vs y^n Q_n", &fixed, &target)?;
    expect_poly(n, "rho(G_n) vs y^n Q_n", &rho(Scheme::G, n), &target)
}

// Signed permutations

fn sign_fwex_b(n: usize) -> Verdict {
    let got = enumerator(n, Family::B, SignScheme::FwexSign)?;
    let factor = &Polynomial::constant(sign(n.div_ceil(2))) + &Polynomial::term(sign(n / 2), Monomial::new(0, 1, 0));
    expect_poly(n, "signed fwex sum over B_n", &got, &(&factor * &cache::r(n - 1)))
}

fn sign_fwex_d(n: usize) -> Verdict {
    let got = enumerator(n, Family::D, SignScheme::FwexSign)?;
    let want = if n.is_multiple_of(2) {
        cache::r(n - 1).mul_monomial(Monomial::new(0, 1, 0)).scale(&sign(n / 2).into())
    } else {
        cache::r(n - 1).scale(&sign(n.div_ceil(2)).into())
    };
    expect_poly(n, "signed fwex sum over D_n", &got, &want)
}

fn sign_fwex_bstar(n: usize) -> Verdict {
    let got = enumerator(n, Family::BStar, SignScheme::FwexSignQ)?;
    expect_poly(n, "(-1/q)-signed fwex sum over B*_n", &got, &(&neg_inv_q(n / 2) * &cache::q(n)))
}

fn sign_fwex_dstar(n: usize) -> Verdict {
    let got = enumerator(n, Family::DStar, SignScheme::FwexSignQ)?;
    let want = if n.is_multiple_of(2) { &neg_inv_q(n / 2) * &cache::q(n) } else { Polynomial::zero() };
    expect_poly(n, "(-1/q)-signed fwex sum over D*_n", &got, &want)
}

/// `Σ (-1)^⌊fwex/2⌋` straight from the statistics.
fn signed_count(n: usize, family: Family) -> BigInt {
    BigInt::from(generate(n, family).map(|s| sign(stats(&s).fwex / 2)).sum::<i64>())
}

fn eval_b(n: usize) -> Verdict {
    let want = if n.is_multiple_of(2) { sign(n / 2) * (cache::euler(n) << n) } else { BigInt::from(0) };
    expect_int(n, "signed count of B_n", &signed_count(n, Family::B), &want)
}

fn eval_d(n: usize) -> Verdict {
    let want = sign(n.div_ceil(2)) * (cache::euler(n) << (n - 1));
    expect_int(n, "signed count of D_n", &signed_count(n, Family::D), &want)
}

fn eval_bstar(n: usize) -> Verdict {
    let want = sign(n / 2) * cache::springer(n);
    expect_int(n, "signed count of B*_n", &signed_count(n, Family::BStar), &want)
}

fn eval_dstar(n: usize) -> Verdict {
    let want = if n.is_multiple_of(2) { sign(n / 2) * cache::springer(n) } else { BigInt::from(0) };
    expect_int(n, "signed count of D*_n", &signed_count(n, Family::DStar), &want)
}

fn desb_equidistribution(n: usize) -> Verdict {
    let mut des = vec![0u64; n + 1];
    let mut half = vec![0u64; n + 1];
    for s in generate(n, Family::B) {
        let r = stats(&s);
        des[r.des_b] += 1;
        half[r.fwex / 2] += 1;
    }
    if des != half {
        return Err(format!("n={n}: des_B distribution {des:?}; floor(fwex/2) distribution {half:?}"));
    }
    Ok(())
}

// Snakes

fn recover_from_csy(n: usize) -> Verdict {
    for v in [Variant::Full, Variant::S0, Variant::S00] {
        for s in generate_snakes(n, v) {
            let cs = s.cs_vector();
            let back = recover_from_cs(&s.window().abs_window(), v, &cs).map_err(|e| format!("n={n}: {s}: {e}"))?;
            if back != s {
                return Err(format!("n={n}: {s} recovered as {back}"));
            }
            // the empty full snake has a sign change between its two boundary entries only
            let total: usize = cs.iter().map(|&c| usize::from(c)).sum();
            if (n > 0 || v != Variant::Full) && total != s.cs() {
                return Err(format!("n={n}: {s}: cs-vector sums to {total}, cs = {}", s.cs()));
            }
        }
    }
    Ok(())
}

fn pattern_identity(n: usize) -> Verdict {
    for v in [Variant::S0, Variant::S00] {
        for s in generate_snakes(n, v) {
            let bp = s.abs_bounded().map_err(|e| format!("n={n}: {s}: {e}"))?;
            if !bp.pattern_identity_holds() {
                return Err(format!("n={n}: {s}"));
            }
        }
    }
    Ok(())
}

fn snake_bijection(
    n: usize,
    snakes: impl Iterator<Item = Snake>,
    forward: fn(&Snake) -> snakelab_core::Result<WeightedPath>,
    backward: fn(&WeightedPath) -> snakelab_core::Result<Snake>,
    scheme: Scheme,
) -> Verdict {
    let mut image = BTreeSet::new();
    for s in snakes {
        let path = forward(&s).map_err(|e| format!("n={n}: {s}: {e}"))?;
        if path.weight().t as usize != s.cs() {
            return Err(format!("n={n}: {s} has cs {} but maps to {path}", s.cs()));
        }
        let back = backward(&path).map_err(|e| format!("n={n}: {path}: {e}"))?;
        if back != s {
            return Err(format!("n={n}: {s} -> {path} -> {back}"));
        }
        if !image.insert(path.clone()) {
            return Err(format!("n={n}: two snakes map to {path}"));
        }
    }
    let target: BTreeSet<_> = gen_weighted(scheme, n).collect();
    if let Some(miss) = target.difference(&image).next() {
        return Err(format!("n={n}: {miss} has no preimage"));
    }
    if let Some(extra) = image.difference(&target).next() {
        return Err(format!("n={n}: {extra} lies outside {}", scheme.name()));
    }
    Ok(())
}

fn lambda1_bijection(n: usize) -> Verdict {
    snake_bijection(n, generate_snakes(n, Variant::S0), lambda1, lambda1_inv, Scheme::TStar)?;
    expect_poly(n, "snake enumerator vs Q_n", &snake_enumerator(n, Enumerator::Q), &cache::q(n))
}

fn lambda2_bijection(n: usize) -> Verdict {
    snake_bijection(n, generate_snakes(n + 1, Variant::S00), lambda2, lambda2_inv, Scheme::T)?;
    expect_poly(n, "snake enumerator vs R_n", &snake_enumerator(n, Enumerator::R), &cache::r(n))
}

// Hand-computed values

fn worked_examples(_: usize) -> Verdict {
    let fail = |what: &str, got: String, want: String| Err(format!("{what}: got {got}; expected {want}"));

    let sigma: SignedPermutation = "(3,-4,-2,5,1)".parse().map_err(|e: snakelab_core::Error| e.to_string())?;
    if stats(&sigma).cro_b != 5 {
        return fail("cro_B(3,-4,-2,5,1)", stats(&sigma).cro_b.to_string(), "5".into());
    }

    let s: Snake = "(5,-2,4,-7,-1,-8,10,-9,6,3) S0".parse().map_err(|e: snakelab_core::Error| e.to_string())?;
    let cs_vector = [0u8, 2, 0, 1, 0, 1, 0, 1, 1, 0];
    if s.cs_vector() != cs_vector || s.cs() != 6 {
        return fail("cs-vector of (5,-2,4,-7,-1,-8,10,-9,6,3)", format!("{:?} cs={}", s.cs_vector(), s.cs()), format!("{cs_vector:?} cs=6"));
    }

    let prof = BoundedPerm::new(&[5, 2, 4, 7, 1, 8, 10, 9, 6, 3], Variant::S0).map_err(|e| e.to_string())?.block_profile();
    let (alpha, beta) = ([1, 2, 3, 4, 4, 3, 3, 2, 2, 2, 1], [0, 0, 1, 0, 2, 2, 0, 1, 1, 0, 0]);
    if prof.alpha != alpha || prof.beta != beta {
        return fail("block profile of the S0 example", format!("{:?} {:?}", prof.alpha, prof.beta), format!("{alpha:?} {beta:?}"));
    }

    let s00: Snake = "(5,-2,4,-7,-1,-8,11,-9,6,3,10) S00".parse().map_err(|e: snakelab_core::Error| e.to_string())?;
    let prof = s00.abs_bounded().map_err(|e| e.to_string())?.block_profile();
    let (alpha, beta) = ([2, 3, 4, 5, 5, 4, 4, 3, 3, 3, 2], [1, 2, 1, 3, 3, 1, 2, 2, 1, 0]);
    if prof.alpha[..11] != alpha || prof.beta[1..11] != beta {
        return fail("block profile of the S00 example", format!("{:?} {:?}", prof.alpha, prof.beta), format!("{alpha:?} {beta:?}"));
    }

    let b1 = enumerator(1, Family::B, SignScheme::FullYtq)?;
    expect_poly(1, "B_1(y,t,q)", &b1, &p("y^2 + y*t"))?;
    let b2 = enumerator(2, Family::B, SignScheme::FullYtq)?;
    let listed = &(&(&mono(4, 0, 0) + &(&p("2*t + t*q") * &mono(3, 0, 0))) + &(&p("t^2*q + t^2 + 1") * &mono(2, 0, 0))) + &mono(1, 1, 0);
    expect_poly(2, "B_2(y,t,q)", &b2, &listed)?;

    let labels = |path: &WeightedPath| path.weights().iter().map(|m| m.to_string()).collect::<BTreeSet<_>>();
    let set = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<BTreeSet<_>>();

    let z = lambda1(&s).map_err(|e| e.to_string())?;
    let head = [z.weights()[0], z.weights()[1]];
    if head != [Monomial::ONE, Monomial::new(0, 2, 4)] {
        return fail("first two weights of the S0 example path", format!("{} {}", head[0], head[1]), "1 t^2*q^4".into());
    }
    let want = set(&["1", "t^2*q^4", "t*q^5", "q^2", "t*q^2", "q", "t*q"]);
    if labels(&z) != want {
        return fail("labels of the S0 example path", format!("{:?}", labels(&z)), format!("{want:?}"));
    }

    let z = lambda2(&s00).map_err(|e| e.to_string())?;
    let head = [z.weights()[0], z.weights()[1]];
    if head != [Monomial::ONE, Monomial::new(0, 2, 5)] {
        return fail("first two weights of the S00 example path", format!("{} {}", head[0], head[1]), "1 t^2*q^5".into());
    }
    let want = set(&["1", "t^2*q^5", "t*q^6", "q^3", "t*q^3", "q^2", "t*q^2"]);
    if labels(&z) != want {
        return fail("labels of the S00 example path", format!("{:?}", labels(&z)), format!("{want:?}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<_> = catalog().iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), catalog().len());
    }

    #[test]
    fn unknown_id() {
        assert_eq!(run_check("unknown", Some(3)), Err(UnknownCheck("unknown".into())));
    }

    #[test]
    fn q2_golden_passes() {
        let r = run_check("q2-golden", Some(0)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.n_range, (2, 2));
    }

    #[test]
    fn sizes_below_the_minimum_are_skipped() {
        assert_eq!(run_check("sign-fwex-b", Some(0)).unwrap().status, Status::Skipped);
    }

    #[test]
    fn failure_reports_smallest_witness() {
        let broken = Check { id: "broken", summary: "", range: scaled(0, 6), run: |n| if n >= 3 { Err(format!("n={n}")) } else { Ok(()) }, notes: None };
        let r = execute(&broken, None);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witness.as_deref(), Some("n=3"));
    }

    #[test]
    fn literal_form_is_flagged() {
        let r = run_check("r-odd-at-t0", Some(8)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.notes[0].starts_with("corrected statement"));
        assert!(r.notes[1].contains("R_1(0,q) = 0 but E_1(q) = 1"));
    }
}

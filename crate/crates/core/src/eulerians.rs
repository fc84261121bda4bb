//! Euler and Springer numbers and their polynomial refinements.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{q_derivative, q_integer, sfraction_series, u_multiply, Polynomial};
use crate::snakes::{generate_snakes, Variant};

/// Largest `n` for which [`euler_number`] counts permutations directly.
pub const COUNTING_LIMIT: usize = 9;

/// Number of `σ ∈ 𝔖_n` with `σ_1 > σ_2 < σ_3 > ...`, by backtracking.
pub fn euler_number_by_counting(n: usize) -> BigInt {
    fn extend(used: &mut [bool], last: usize, pos: usize, n: usize) -> u64 {
        if pos > n {
            return 1;
        }
        let mut total = 0;
        for v in 1..=n {
            if used[v] {
                continue;
            }
            // position pos-1 is a descent when odd
            let ok = pos == 1 || if (pos - 1) % 2 == 1 { v < last } else { v > last };
            if ok {
                used[v] = true;
                total += extend(used, v, pos + 1, n);
                used[v] = false;
            }
        }
        total
    }
    BigInt::from(extend(&mut vec![false; n + 1], 0, 1, n))
}

/// `E_n` from the boustrophedon (Seidel) triangle.
pub fn euler_number_by_seidel(n: usize) -> BigInt {
    euler_numbers_by_seidel(n).pop().expect("at least E_0")
}

/// `E_0, ..., E_n` from the boustrophedon triangle.
pub fn euler_numbers_by_seidel(n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::zero());
        for k in 0..row.len() {
            let v = &next[k] + &row[row.len() - 1 - k];
            next.push(v);
        }
        out.push(next.last().expect("nonempty").clone());
        row = next;
    }
    out
}

/// `E_n`: direct counting up to [`COUNTING_LIMIT`], the Seidel triangle above.
pub fn euler_number(n: usize) -> BigInt {
    if n <= COUNTING_LIMIT {
        euler_number_by_counting(n)
    } else {
        euler_number_by_seidel(n)
    }
}

/// `S_n`: the number of snakes of size `n` with `σ_1 > 0`.
pub fn springer_number(n: usize) -> BigInt {
    BigInt::from(generate_snakes(n, Variant::S0).count())
}

/// `E_n(q)` from its Stieltjes fraction: `a_h = [h]_q²` for even `n`,
/// `[h]_q [h+1]_q` for odd `n`.
pub fn q_euler(n: usize) -> Polynomial {
    q_euler_sequence(n).swap_remove(n)
}

/// `E_0(q), ..., E_n(q)`.
pub fn q_euler_sequence(n: usize) -> Vec<Polynomial> {
    let half = n / 2;
    let even = sfraction_series(
        |h| {
            let qh = q_integer(h as u32);
            &qh * &qh
        },
        half,
    );
    let odd = sfraction_series(|h| &q_integer(h as u32) * &q_integer(h as u32 + 1), half);
    (0..=n).map(|k| if k % 2 == 0 { even[k / 2].clone() } else { odd[k / 2].clone() }).collect()
}

fn d_plus(p: &Polynomial, tail: impl Fn(&Polynomial) -> Polynomial) -> Polynomial {
    &q_derivative(p).expect("t,q polynomial") + &tail(p)
}

fn d(p: &Polynomial) -> Polynomial {
    q_derivative(p).expect("t,q polynomial")
}

fn u(p: &Polynomial) -> Polynomial {
    u_multiply(p).expect("t,q polynomial")
}

/// `Q_0, ..., Q_n` with `Q_k = (D + UDU)^k 1`.
pub fn q_poly_sequence(n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    for _ in 0..n {
        let next = d_plus(out.last().expect("nonempty"), |p| u(&d(&u(p))));
        out.push(next);
    }
    out
}

/// `R_0, ..., R_n` with `R_k = (D + DUU)^k 1`.
pub fn r_poly_sequence(n: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one()];
    for _ in 0..n {
        let next = d_plus(out.last().expect("nonempty"), |p| d(&u(&u(p))));
        out.push(next);
    }
    out
}

pub fn q_poly(n: usize) -> Polynomial {
    q_poly_sequence(n).swap_remove(n)
}

pub fn r_poly(n: usize) -> Polynomial {
    r_poly_sequence(n).swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{jfraction_series, CoefficientSchedule, Monomial, Var};
    use proptest::prelude::*;
    use alloc::string::ToString;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn euler_examples() {
        let first: Vec<_> = (0..=9).map(euler_number_by_counting).collect();
        let expect: Vec<BigInt> = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936].map(BigInt::from).to_vec();
        assert_eq!(first, expect);
        assert_eq!(euler_numbers_by_seidel(9), expect);
        assert_eq!(euler_number(20), BigInt::from(370_371_188_237_525u64));
    }

    #[test]
    fn springer_examples() {
        let s: Vec<_> = (0..=5).map(springer_number).collect();
        assert_eq!(s, [1, 1, 3, 11, 57, 361].map(BigInt::from));
    }

    #[test]
    fn q_euler_examples() {
        assert_eq!(q_euler(0), p("1"));
        assert_eq!(q_euler(1), p("1"));
        assert_eq!(q_euler(2), p("1"));
        assert_eq!(q_euler(3), p("1 + q"));
        assert_eq!(q_euler(4), p("2 + 2*q + q^2"));
        for n in 0..=9 {
            assert_eq!(q_euler(n).eval(1, 1, 1).unwrap(), euler_number(n));
        }
    }

    #[test]
    fn listed_polynomials() {
        let q = q_poly_sequence(3);
        assert_eq!(q[0].to_string(), "1");
        assert_eq!(q[1], p("t"));
        assert_eq!(q[2], p("1 + t^2 + q*t^2"));
        assert_eq!(q[3], p("2*t + 2*q*t + q^2*t + t^3 + 2*q*t^3 + 2*q^2*t^3 + q^3*t^3"));
        let r = r_poly_sequence(3);
        assert_eq!(r[0], p("1"));
        assert_eq!(r[1], p("t + q*t"));
        assert_eq!(
            r[3],
            p("2*t + 5*q*t + 5*q^2*t + 3*q^3*t + q^4*t \
               + t^3 + 3*q*t^3 + 5*q^2*t^3 + 6*q^3*t^3 + 5*q^4*t^3 + 3*q^5*t^3 + q^6*t^3")
        );
    }

    #[test]
    fn operator_and_fraction_agree() {
        let qj = jfraction_series(&CoefficientSchedule::q_polynomials(), 8);
        let rj = jfraction_series(&CoefficientSchedule::r_polynomials(), 8);
        assert_eq!(q_poly_sequence(8), qj);
        assert_eq!(r_poly_sequence(8), rj);
    }

    #[test]
    fn evaluations_at_one() {
        let q = q_poly_sequence(7);
        let r = r_poly_sequence(7);
        for n in 0..=7 {
            assert_eq!(q[n].eval(1, 1, 1).unwrap(), springer_number(n));
            assert_eq!(r[n].eval(1, 1, 1).unwrap(), euler_number(n + 1) << n);
        }
    }

    #[test]
    fn constant_terms_in_t() {
        let q = q_poly_sequence(8);
        let r = r_poly_sequence(9);
        let zero = Polynomial::zero();
        for n in 0..=8 {
            let qt0 = q[n].subst(Var::T, &zero).unwrap();
            let rt0 = r[n].subst(Var::T, &zero).unwrap();
            if n % 2 == 0 {
                assert_eq!(qt0, q_euler(n));
                assert_eq!(rt0, q_euler(n + 1));
            } else {
                assert!(rt0.is_zero());
            }
        }
    }

    proptest! {
        #[test]
        fn t_parity_matches_index(n in 0usize..=10) {
            for poly in [q_poly(n), r_poly(n)] {
                for (m, _) in poly.terms() {
                    prop_assert_eq!(m.t as usize % 2, n % 2);
                    prop_assert_eq!(m.y, 0);
                    prop_assert!(*m != Monomial::ONE || n % 2 == 0);
                }
            }
        }
    }
}

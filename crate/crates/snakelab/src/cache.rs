//! Process-wide memo of the sequences most checks share.

use std::sync::Mutex;

use num_bigint::BigInt;
use snakelab_core::eulerians::{euler_number, q_poly_sequence, r_poly_sequence, springer_number};
use snakelab_core::Polynomial;

static Q: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());
static R: Mutex<Vec<Polynomial>> = Mutex::new(Vec::new());
static E: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());
static S: Mutex<Vec<BigInt>> = Mutex::new(Vec::new());

fn polys(cell: &Mutex<Vec<Polynomial>>, n: usize, build: fn(usize) -> Vec<Polynomial>) -> Polynomial {
    let mut seq = cell.lock().expect("cache poisoned");
    if seq.len() <= n {
        *seq = build(n);
    }
    seq[n].clone()
}

fn numbers(cell: &Mutex<Vec<BigInt>>, n: usize, build: fn(usize) -> BigInt) -> BigInt {
    let mut seq = cell.lock().expect("cache poisoned");
    while seq.len() <= n {
        let k = seq.len();
        seq.push(build(k));
    }
    seq[n].clone()
}

/// `Q_n(t,q)` from the operator recursion.
pub fn q(n: usize) -> Polynomial {
    polys(&Q, n, q_poly_sequence)
}

/// `R_n(t,q)` from the operator recursion.
pub fn r(n: usize) -> Polynomial {
    polys(&R, n, r_poly_sequence)
}

/// Euler number `E_n`.
pub fn euler(n: usize) -> BigInt {
    numbers(&E, n, euler_number)
}

/// Springer number `S_n`, by counting snakes.
pub fn springer(n: usize) -> BigInt {
    numbers(&S, n, springer_number)
}

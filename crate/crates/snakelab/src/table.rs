//! Deterministic rendering of the polynomial and integer sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use snakelab_core::algebra::{jfraction_series, CoefficientSchedule};
use snakelab_core::eulerians::q_euler_sequence;
use snakelab_core::Polynomial;

use crate::cache;

/// Largest `n` for which the `S` table counts snakes; above it `Q_n(1,1)` is used.
pub const SPRINGER_COUNTING_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Object {
    /// `Q_n(t,q)`
    #[value(name = "Q")]
    Q,
    /// `R_n(t,q)`
    #[value(name = "R")]
    R,
    /// `B_n(y,t,q)`, the signed permutation enumerator
    #[value(name = "B")]
    B,
    /// Euler numbers
    #[value(name = "E")]
    E,
    /// q-Euler numbers `E_n(q)`
    #[value(name = "Eq")]
    Eq,
    /// Springer numbers
    #[value(name = "S")]
    S,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl Object {
    fn label(self, n: usize) -> String {
        match self {
            Object::Q => format!("Q_{n}"),
            Object::R => format!("R_{n}"),
            Object::B => format!("B_{n}"),
            Object::E => format!("E_{n}"),
            Object::Eq => format!("E_{n}(q)"),
            Object::S => format!("S_{n}"),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Object::Q => "Q",
            Object::R => "R",
            Object::B => "B",
            Object::E => "E",
            Object::Eq => "Eq",
            Object::S => "S",
        })
    }
}

enum Rows {
    Polys(Vec<Polynomial>),
    Ints(Vec<BigInt>),
}

fn rows(object: Object, n_max: usize) -> Rows {
    match object {
        Object::Q => Rows::Polys((0..=n_max).map(cache::q).collect()),
        Object::R => Rows::Polys((0..=n_max).map(cache::r).collect()),
        Object::B => Rows::Polys(jfraction_series(&CoefficientSchedule::signed_permutations(), n_max)),
        Object::Eq => Rows::Polys(q_euler_sequence(n_max)),
        Object::E => Rows::Ints((0..=n_max).map(cache::euler).collect()),
        Object::S => Rows::Ints(
            (0..=n_max)
                .map(|n| {
                    if n <= SPRINGER_COUNTING_LIMIT {
                        cache::springer(n)
                    } else {
                        cache::q(n).eval(1, 1, 1).expect("t,q polynomial")
                    }
                })
                .collect(),
        ),
    }
}

fn number(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

/// Renders `object_0 ..= object_{n_max}`.
///
/// Text prints `label = value` lines. CSV prints `n,value` for integer
/// sequences and one `n,coef,y,t,q` row per term for polynomials. JSON
/// prints an array of `{n, value}` or `{n, terms: [[coef, y, t, q], ...]}`.
/// No trailing newline.
pub fn emit_table(object: Object, n_max: usize, format: Format) -> String {
    let rows = rows(object, n_max);
    match (format, rows) {
        (Format::Text, Rows::Polys(ps)) => ps
            .iter()
            .enumerate()
            .map(|(n, p)| format!("{} = {p}", object.label(n)))
            .collect::<Vec<_>>()
            .join("\n"),
        (Format::Text, Rows::Ints(vs)) => vs
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{} = {v}", object.label(n)))
            .collect::<Vec<_>>()
            .join("\n"),
        (Format::Csv, Rows::Polys(ps)) => ps
            .iter()
            .enumerate()
            .flat_map(|(n, p)| {
                p.terms()
                    .map(move |(m, c)| format!("{n},{c},{},{},{}", m.y, m.t, m.q))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .join("\n"),
        (Format::Csv, Rows::Ints(vs)) => vs
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n},{v}"))
            .collect::<Vec<_>>()
            .join("\n"),
        (Format::Json, Rows::Polys(ps)) => {
            let rows: Vec<Value> = ps
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let terms: Vec<Value> =
                        p.terms().map(|(m, c)| json!([number(c), m.y, m.t, m.q])).collect();
                    json!({ "n": n, "terms": terms })
                })
                .collect();
            Value::Array(rows).to_string()
        }
        (Format::Json, Rows::Ints(vs)) => {
            let rows: Vec<Value> =
                vs.iter().enumerate().map(|(n, v)| json!({ "n": n, "value": number(v) })).collect();
            Value::Array(rows).to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_tables() {
        assert_eq!(emit_table(Object::E, 5, Format::Csv), "0,1\n1,1\n2,1\n3,2\n4,5\n5,16");
        assert_eq!(emit_table(Object::S, 3, Format::Csv), "0,1\n1,1\n2,3\n3,11");
        assert_eq!(emit_table(Object::E, 2, Format::Text), "E_0 = 1\nE_1 = 1\nE_2 = 1");
        assert_eq!(
            emit_table(Object::E, 1, Format::Json),
            r#"[{"n":0,"value":1},{"n":1,"value":1}]"#
        );
    }

    #[test]
    fn springer_routes_agree_at_the_switch() {
        let n = SPRINGER_COUNTING_LIMIT;
        assert_eq!(cache::springer(n), cache::q(n).eval(1, 1, 1).unwrap());
    }

    #[test]
    fn polynomial_tables() {
        assert_eq!(emit_table(Object::Q, 1, Format::Text), "Q_0 = 1\nQ_1 = t");
        assert_eq!(emit_table(Object::R, 1, Format::Csv), "0,1,0,0,0\n1,1,0,1,0\n1,1,0,1,1");
        assert_eq!(emit_table(Object::B, 1, Format::Text), "B_0 = 1\nB_1 = y*t + y^2");
        assert_eq!(emit_table(Object::Eq, 3, Format::Text).lines().last(), Some("E_3(q) = 1 + q"));
        assert_eq!(
            emit_table(Object::Q, 1, Format::Json),
            r#"[{"n":0,"terms":[[1,0,0,0]]},{"n":1,"terms":[[1,0,1,0]]}]"#
        );
    }

    #[test]
    fn large_values_stay_exact() {
        // E_30 is past u64
        assert!(cache::euler(30) > BigInt::from(u64::MAX));
        let json = emit_table(Object::E, 30, Format::Json);
        let csv = emit_table(Object::E, 30, Format::Csv);
        let last = csv.lines().last().unwrap();
        assert_eq!(last, format!("30,{}", cache::euler(30)));
        assert!(json.contains(&format!(r#"{{"n":30,"value":{}}}"#, cache::euler(30))));
    }
}

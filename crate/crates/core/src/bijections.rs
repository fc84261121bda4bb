//! The two-to-one restructuring map `M_n → H_{n-1}` and the sign-reversing
//! involutions on `H_n` and `M*_n`.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::algebra::Monomial;
use crate::motzkin::{check_membership, is_member, matching_pairs, Scheme, Step, WeightedPath};
use crate::{Error, Result};

/// Weight of the first step of a path in `M_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeadWeight {
    YSquared,
    YT,
}

impl HeadWeight {
    pub fn monomial(self) -> Monomial {
        match self {
            HeadWeight::YSquared => Monomial::new(2, 0, 0),
            HeadWeight::YT => Monomial::new(1, 1, 0),
        }
    }

    pub fn from_monomial(m: Monomial) -> Option<Self> {
        [HeadWeight::YSquared, HeadWeight::YT].into_iter().find(|h| h.monomial() == m)
    }
}

fn halves(s: Step) -> (Step, Step) {
    match s {
        Step::U => (Step::U, Step::U),
        Step::L => (Step::U, Step::D),
        Step::W => (Step::D, Step::U),
        Step::D => (Step::D, Step::D),
    }
}

fn join(first: Step, second: Step) -> Step {
    match (first, second) {
        (Step::U, Step::U) => Step::U,
        (Step::U, Step::D) => Step::L,
        (Step::D, Step::U) => Step::W,
        _ => Step::D,
    }
}

fn postcondition(scheme: Scheme, path: WeightedPath) -> Result<WeightedPath> {
    check_membership(scheme, &path).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok(path)
}

/// Splits `μ ∈ M_n` into its head weight and a path in `H_{n-1}`.
///
/// Each step is doubled (`U → UU`, `L → UD`, `W → DU`, `D → DD`); dropping
/// the first and last letters and re-pairing gives the shorter path, whose
/// `j`-th step carries the weight of step `j+1` of `μ`.
pub fn phi(mu: &WeightedPath) -> Result<(HeadWeight, WeightedPath)> {
    check_membership(Scheme::M, mu)?;
    if mu.is_empty() {
        return Err(Error::InvalidPath("the empty path has no head".into()));
    }
    let head = HeadWeight::from_monomial(mu.weights()[0])
        .ok_or_else(|| Error::Invariant(format!("head weight {}", mu.weights()[0])))?;
    let steps = mu.steps();
    let out: Vec<_> = (1..steps.len())
        .map(|j| (join(halves(steps[j - 1]).1, halves(steps[j]).0), mu.weights()[j]))
        .collect();
    Ok((head, postcondition(Scheme::H, WeightedPath::from_steps(out)?)?))
}

pub fn phi_inverse(head: HeadWeight, nu: &WeightedPath) -> Result<WeightedPath> {
    check_membership(Scheme::H, nu)?;
    let mut letters = Vec::with_capacity(2 * nu.len() + 2);
    letters.push(Step::U);
    for &s in nu.steps() {
        let (a, b) = halves(s);
        letters.extend([a, b]);
    }
    letters.push(Step::D);
    let weights = core::iter::once(head.monomial()).chain(nu.weights().iter().copied());
    let steps = letters.chunks(2).map(|c| join(c[0], c[1]));
    postcondition(Scheme::M, WeightedPath::from_steps(steps.zip(weights))?)
}

/// The involution on `H_n` whose fixed points are `F_n`.
///
/// First toggles the earliest `L[q^a] ↔ W[y²q^a]`; failing that, swaps the
/// weights of the earliest matching pair `(y²q^a, ytq^{h+1+b}) ↔
/// (ytq^{h+1+a}, q^b)`, where `h` is the height the up step leaves.
pub fn psi1(mu: &WeightedPath) -> Result<WeightedPath> {
    check_membership(Scheme::H, mu)?;
    let mut out = mu.clone();
    for (i, (&s, w)) in mu.steps().iter().zip(mu.weights()).enumerate() {
        match (s, w.y) {
            (Step::L, 0) => {
                out.set_step(i, Step::W);
                out.set_weight(i, Monomial::new(2, 0, w.q));
                return postcondition(Scheme::H, out);
            }
            (Step::W, 2) => {
                out.set_step(i, Step::L);
                out.set_weight(i, Monomial::q_pow(w.q));
                return postcondition(Scheme::H, out);
            }
            _ => {}
        }
    }
    let heights = mu.shape().heights();
    for (u, d) in matching_pairs(mu.shape()) {
        let (wu, wd) = (mu.weights()[u - 1], mu.weights()[d - 1]);
        let h = heights[u - 1] as i32;
        let swapped = match (wu.y, wd.y) {
            (2, 1) => Some((Monomial::new(1, 1, h + 1 + wu.q), Monomial::q_pow(wd.q - h - 1))),
            (1, 0) => Some((Monomial::new(2, 0, wu.q - h - 1), Monomial::new(1, 1, h + 1 + wd.q))),
            _ => None,
        };
        if let Some((nu, nd)) = swapped {
            out.set_weight(u - 1, nu);
            out.set_weight(d - 1, nd);
            return postcondition(Scheme::H, out);
        }
    }
    Ok(out)
}

/// The involution on `M*_n` whose fixed points are `G_n`.
///
/// First toggles the earliest `L[y²q^a] ↔ W[q^{a-1}]`; failing that, swaps
/// the weights of the earliest matching pair `(y²q^a, ytq^{h+1+b}) ↔
/// (ytq^{h+a}, q^b)`.
pub fn psi2(mu: &WeightedPath) -> Result<WeightedPath> {
    check_membership(Scheme::MStar, mu)?;
    let mut out = mu.clone();
    for (i, (&s, w)) in mu.steps().iter().zip(mu.weights()).enumerate() {
        match (s, w.y) {
            (Step::L, 2) => {
                out.set_step(i, Step::W);
                out.set_weight(i, Monomial::q_pow(w.q - 1));
                return postcondition(Scheme::MStar, out);
            }
            (Step::W, 0) => {
                out.set_step(i, Step::L);
                out.set_weight(i, Monomial::new(2, 0, w.q + 1));
                return postcondition(Scheme::MStar, out);
            }
            _ => {}
        }
    }
    let heights = mu.shape().heights();
    for (u, d) in matching_pairs(mu.shape()) {
        let (wu, wd) = (mu.weights()[u - 1], mu.weights()[d - 1]);
        let h = heights[u - 1] as i32;
        let swapped = match (wu.y, wd.y) {
            (2, 1) => Some((Monomial::new(1, 1, h + wu.q), Monomial::q_pow(wd.q - h - 1))),
            (1, 0) => Some((Monomial::new(2, 0, wu.q - h), Monomial::new(1, 1, h + 1 + wd.q))),
            _ => None,
        };
        if let Some((nu, nd)) = swapped {
            out.set_weight(u - 1, nu);
            out.set_weight(d - 1, nd);
            return postcondition(Scheme::MStar, out);
        }
    }
    Ok(out)
}

/// Membership in `F_n` for a path of `H_n`.
pub fn is_fixed_f(mu: &WeightedPath) -> bool {
    is_member(Scheme::F, mu)
}

/// Membership in `G_n` for a path of `M*_n`.
pub fn is_fixed_g(mu: &WeightedPath) -> bool {
    is_member(Scheme::G, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motzkin::gen_weighted;
    use crate::Polynomial;
    use alloc::collections::BTreeMap;

    fn path(s: &str) -> WeightedPath {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&path("L[y^2] L[y*t]")).unwrap(), (HeadWeight::YSquared, path("W[y*t]")));
        assert_eq!(phi(&path("L[y*t] L[y^2]")).unwrap(), (HeadWeight::YT, path("W[y^2]")));
        assert_eq!(phi(&path("U[y*t] D[y*t*q]")).unwrap(), (HeadWeight::YT, path("L[y*t*q]")));
        assert!(phi(&WeightedPath::empty()).is_err());
        assert!(phi(&path("L[1]")).is_err());
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(HeadWeight::YSquared, &path("W[y*t]")).unwrap(), path("L[y^2] L[y*t]"));
        assert_eq!(phi_inverse(HeadWeight::YT, &WeightedPath::empty()).unwrap(), path("L[y*t]"));
        assert_eq!(phi_inverse(HeadWeight::YSquared, &WeightedPath::empty()).unwrap(), path("L[y^2]"));
    }

    #[test]
    fn psi1_examples() {
        assert_eq!(psi1(&path("L[1]")).unwrap(), path("W[y^2]"));
        assert_eq!(psi1(&path("W[y^2]")).unwrap(), path("L[1]"));
        assert_eq!(psi1(&path("L[y*t*q]")).unwrap(), path("L[y*t*q]"));
        assert!(is_fixed_f(&path("L[y*t*q]")));
        assert!(is_fixed_f(&path("W[y*t]")));
        assert!(!is_fixed_f(&path("L[1]")));
        assert_eq!(psi1(&path("U[y^2] D[y*t*q]")).unwrap(), path("U[y*t*q] D[1]"));
    }

    #[test]
    fn psi2_examples() {
        assert_eq!(psi2(&path("U[y^2] D[y*t*q]")).unwrap(), path("U[y*t] D[1]"));
        assert_eq!(psi2(&path("U[y*t] D[1]")).unwrap(), path("U[y^2] D[y*t*q]"));
        assert_eq!(psi2(&path("U[y^2] D[1]")).unwrap(), path("U[y^2] D[1]"));
        assert!(is_fixed_g(&path("L[y*t]")));
        assert!(!is_fixed_g(&path("U[y^2] D[y*t*q]")));
        assert!(is_fixed_g(&WeightedPath::empty()));
        assert!(psi2(&path("L[y^2]")).is_err());
    }

    #[test]
    fn phi_is_two_to_one() {
        for n in 1..=5 {
            let mut seen: BTreeMap<WeightedPath, Vec<HeadWeight>> = BTreeMap::new();
            for mu in gen_weighted(Scheme::M, n) {
                let (head, nu) = phi(&mu).unwrap();
                assert_eq!(head.monomial() * nu.weight(), mu.weight());
                assert_eq!(phi_inverse(head, &nu).unwrap(), mu);
                seen.entry(nu).or_default().push(head);
            }
            assert_eq!(seen.len(), gen_weighted(Scheme::H, n - 1).count());
            assert!(seen.values().all(|h| h.len() == 2 && h[0] != h[1]));
        }
    }

    #[test]
    fn psi1_laws() {
        for n in 0..=4 {
            let mut fixed = Polynomial::zero();
            for mu in gen_weighted(Scheme::H, n) {
                let image = psi1(&mu).unwrap();
                assert_eq!(psi1(&image).unwrap(), mu);
                if image == mu {
                    assert!(is_fixed_f(&mu));
                    assert_eq!(mu.weight().t as usize % 2, n % 2);
                    fixed.add_term(1.into(), mu.weight());
                } else {
                    assert!(!is_fixed_f(&mu));
                    let r = image.weight().ratio(&mu.weight());
                    assert!(r == (2, 0, 0) || r == (-2, 0, 0), "{mu} -> {image}");
                }
            }
            let rn = crate::eulerians::r_poly(n).mul_monomial(Monomial::new(n as u32, 0, 0));
            assert_eq!(fixed, rn);
        }
    }

    #[test]
    fn psi2_laws() {
        for n in 0..=4 {
            let mut fixed = Polynomial::zero();
            for mu in gen_weighted(Scheme::MStar, n) {
                let image = psi2(&mu).unwrap();
                assert_eq!(psi2(&image).unwrap(), mu);
                if image == mu {
                    assert!(is_fixed_g(&mu));
                    fixed.add_term(1.into(), mu.weight());
                } else {
                    let r = image.weight().ratio(&mu.weight());
                    assert!(r == (2, 0, 1) || r == (-2, 0, -1), "{mu} -> {image}");
                }
            }
            let qn = crate::eulerians::q_poly(n).mul_monomial(Monomial::new(n as u32, 0, 0));
            assert_eq!(fixed, qn);
        }
    }
}

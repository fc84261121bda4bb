use std::sync::OnceLock;

use proptest::prelude::*;

use snakelab_core::algebra::{q_derivative, u_multiply};
use snakelab_core::bijections::{phi, phi_inverse, psi1, psi2};
use snakelab_core::motzkin::{gen_weighted, is_member};
use snakelab_core::permstats::{crossing_conditions, stats};
use snakelab_core::snakes::{generate_snakes, lambda1, lambda1_inv, lambda2, lambda2_inv};
use snakelab_core::{Monomial, Polynomial, Scheme, SignedPermutation, Snake, Variant, Var};

fn poly(max_y: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, 0..=max_y, 0u32..=3, -3i32..=3), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(c, y, t, q)| (c, Monomial::new(y, t, q)))))
}

fn tq_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, 0u32..=4, 0i32..=4), 0..5)
        .prop_map(|terms| Polynomial::from_terms(terms.into_iter().map(|(c, t, q)| (c, Monomial::new(0, t, q)))))
}

fn signed_perm() -> impl Strategy<Value = SignedPermutation> {
    (0usize..=7)
        .prop_flat_map(|n| (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)))
        .prop_map(|(abs, signs)| {
            let w = abs.into_iter().zip(signs).map(|(a, neg)| if neg { -a } else { a }).collect();
            SignedPermutation::new(w).unwrap()
        })
}

const SNAKE_MAX: usize = 7;

fn nth_snake(n: usize, variant: Variant, seed: usize) -> Snake {
    static TABLES: OnceLock<Vec<Vec<Snake>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=SNAKE_MAX)
            .flat_map(|n| [generate_snakes(n, Variant::S0).collect(), generate_snakes(n, Variant::S00).collect()])
            .collect()
    });
    let all = &tables[2 * n + usize::from(variant == Variant::S00)];
    all[seed % all.len()].clone()
}

proptest! {
    #[test]
    fn ring_laws(a in poly(3), b in poly(3), c in poly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn text_round_trip(a in poly(3)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Polynomial>().unwrap(), a);
    }

    #[test]
    fn inverse_q_substitution_is_an_involution(a in poly(2)) {
        let inv = Polynomial::monomial(Monomial::q_pow(-1));
        let once = a.subst(Var::Q, &inv).unwrap();
        prop_assert_eq!(once.subst(Var::Q, &inv).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(2), b in poly(2), y in -3i64..=3, t in -3i64..=3) {
        let prod = (&a * &b).eval(y, t, 1).unwrap();
        prop_assert_eq!(prod, a.eval(y, t, 1).unwrap() * b.eval(y, t, 1).unwrap());
    }

    #[test]
    fn commutation_relation(f in tq_poly()) {
        let du = q_derivative(&u_multiply(&f).unwrap()).unwrap();
        let ud = u_multiply(&q_derivative(&f).unwrap()).unwrap().mul_monomial(Monomial::q_pow(1));
        prop_assert_eq!(&du - &ud, f);
    }

    #[test]
    fn statistic_laws(sigma in signed_perm()) {
        let r = stats(&sigma);
        prop_assert_eq!(r.fwex, 2 * r.wex + r.neg);
        prop_assert!(r.exc <= r.wex);
        if r.fixed_count == 0 {
            prop_assert_eq!(r.wex, r.exc);
        }
        let n = sigma.len();
        for i in 1..=n {
            for j in 1..=n {
                prop_assert!(crossing_conditions(&sigma, i, j).iter().filter(|&&b| b).count() <= 1);
            }
        }
        prop_assert_eq!(sigma.to_string().parse::<SignedPermutation>().unwrap(), sigma);
    }

    #[test]
    fn restructuring_round_trip(n in 1usize..=5, seed in any::<usize>()) {
        let count = gen_weighted(Scheme::M, n).count();
        let mu = gen_weighted(Scheme::M, n).nth(seed % count).unwrap();
        let (head, nu) = phi(&mu).unwrap();
        prop_assert!(is_member(Scheme::H, &nu));
        prop_assert_eq!(phi_inverse(head, &nu).unwrap(), mu);
    }

    #[test]
    fn involutions_square_to_identity(n in 0usize..=5, seed in any::<usize>()) {
        let count = gen_weighted(Scheme::H, n).count();
        let mu = gen_weighted(Scheme::H, n).nth(seed % count).unwrap();
        let image = psi1(&mu).unwrap();
        prop_assert_eq!(image.weight().t, mu.weight().t);
        prop_assert_eq!(psi1(&image).unwrap(), mu);

        let count = gen_weighted(Scheme::MStar, n).count();
        let mu = gen_weighted(Scheme::MStar, n).nth(seed % count).unwrap();
        let image = psi2(&mu).unwrap();
        prop_assert_eq!(image.weight().t, mu.weight().t);
        prop_assert_eq!(psi2(&image).unwrap(), mu);
    }

    #[test]
    fn snake_maps_round_trip(n in 0usize..SNAKE_MAX, seed in any::<usize>()) {
        let s = nth_snake(n, Variant::S0, seed);
        let path = lambda1(&s).unwrap();
        prop_assert_eq!(path.weight().t as usize, s.cs());
        prop_assert_eq!(lambda1_inv(&path).unwrap(), s);

        let s = nth_snake(n + 1, Variant::S00, seed);
        let path = lambda2(&s).unwrap();
        prop_assert_eq!(path.len(), n);
        prop_assert_eq!(lambda2_inv(&path).unwrap(), s);
    }

    #[test]
    fn pattern_identity(n in 1usize..=SNAKE_MAX, seed in any::<usize>()) {
        for v in [Variant::S0, Variant::S00] {
            let s = nth_snake(n, v, seed);
            prop_assert!(s.abs_bounded().unwrap().pattern_identity_holds());
        }
    }
}

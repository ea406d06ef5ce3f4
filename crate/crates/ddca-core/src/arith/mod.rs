//! Exact arithmetic substrate: rationals, sparse multivariate polynomials
//! over the named parameter symbols, rational functions, exact linear
//! algebra and polynomial interpolation.

pub mod fit;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod ratfunc;

pub use fit::{fit_polynomial, FitError};
pub use linalg::{
    det_poly, nullspace_poly, rank_by_minors, rank_poly, rank_rat, solve_rat, LinAlgError,
    RatSolveResult,
};
pub use poly::{Mono, ParamPoly, Sym, NSYM};
pub use rat::Rat;
pub use ratfunc::{poly_gcd, RatFunc};

#[cfg(test)]
mod ring_axiom_tests {
    use super::poly::{ParamPoly, Sym};
    use super::rat::Rat;
    use rand::{Rng, SeedableRng};

    fn random_poly(rng: &mut impl Rng) -> ParamPoly {
        let vars = [Sym::N, Sym::K, Sym::T];
        let mut p = ParamPoly::zero();
        let terms = rng.gen_range(0..=5);
        for _ in 0..terms {
            let mut t =
                ParamPoly::constant(Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=4)));
            for v in vars {
                let e = rng.gen_range(0..=2u16);
                if e > 0 {
                    t = &t * &ParamPoly::monomial(Rat::ONE, v, e);
                }
            }
            p = &p + &t;
        }
        p
    }

    #[test]
    fn ring_axioms_on_seeded_triples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x0a51);
        for _ in 0..1000 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            // associativity
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            // commutativity
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a + &b, &b + &a);
            // distributivity
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}

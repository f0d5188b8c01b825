//! Ring maps from `Z[p, p^-1, w]` onto a prime field, used for lower bounds on ranks.

use super::ratfunc::{inv_mod, mul_mod, pow_mod};
use super::value::{Cyclotomic, Scalar};

/// `p -> x` and `w -> ` a root of unity of the right order, modulo a prime `m`
/// with `12 | m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub modulus: u64,
    pub x: u64,
    root3: u64,
    root4: u64,
}

impl Specialization {
    pub fn new(modulus: u64, x: u64) -> Specialization {
        assert_eq!((modulus - 1) % 12, 0, "modulus must be 1 mod 12");
        let root = |order: u64| {
            (2..modulus)
                .map(|a| pow_mod(a, (modulus - 1) / order, modulus))
                .find(|&r| (1..order).all(|k| pow_mod(r, k, modulus) != 1))
                .expect("root of unity")
        };
        Specialization {
            modulus,
            x,
            root3: root(3),
            root4: root(4),
        }
    }

    /// Image of `s`, or `None` at a pole.
    pub fn eval(&self, s: &Scalar) -> Option<u64> {
        let root = match s.ext() {
            Cyclotomic::Rational => 0,
            Cyclotomic::Order3 => self.root3,
            Cyclotomic::Order4 => self.root4,
        };
        s.eval_mod(self.x, root, self.modulus)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.modulus)
    }

    pub fn inv(&self, a: u64) -> u64 {
        inv_mod(a, self.modulus)
    }
}

impl Default for Specialization {
    fn default() -> Self {
        Specialization::new(1_000_000_009, 982_451_653)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_and_homomorphism() {
        let s = Specialization::default();
        let m = s.modulus;
        assert_eq!(pow_mod(s.root3, 3, m), 1);
        assert_ne!(s.root3, 1);
        assert_eq!(pow_mod(s.root4, 2, m), m - 1);
        let w = Scalar::root_of_unity(Cyclotomic::Order3);
        let lhs = &(&w * &w) + &(&w + &Scalar::one());
        assert_eq!(s.eval(&lhs), Some(0));
        let a = &Scalar::p_pow(3) + &Scalar::from_i64(-2);
        let b = Scalar::p_pow(-1);
        assert_eq!(s.eval(&(&a * &b)), Some(s.mul(s.eval(&a).unwrap(), s.eval(&b).unwrap())));
    }
}

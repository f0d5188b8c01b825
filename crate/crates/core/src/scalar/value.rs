//! `Scalar`: the base field Q(p), optionally adjoined with a primitive
//! cube or fourth root of unity `w`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::int::Int;
use super::ratfunc::RatFunc;
use super::ScalarError;

/// Which root of unity `w` denotes, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cyclotomic {
    /// No extension; `im` is zero.
    Rational,
    /// `w^2 + w + 1 = 0`
    Order3,
    /// `w^2 + 1 = 0`
    Order4,
}

impl Cyclotomic {
    /// `(c1, c0)` with `w^2 = -c1*w - c0`.
    fn min_poly(self) -> (i64, i64) {
        match self {
            Cyclotomic::Rational => (0, 0),
            Cyclotomic::Order3 => (1, 1),
            Cyclotomic::Order4 => (0, 1),
        }
    }

    fn join(self, other: Cyclotomic) -> Cyclotomic {
        match (self, other) {
            (Cyclotomic::Rational, x) | (x, Cyclotomic::Rational) => x,
            (a, b) if a == b => a,
            _ => panic!("mixing incompatible cyclotomic extensions {self:?} and {other:?}"),
        }
    }
}

/// An element `re + im*w` of Q(p)(w).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: RatFunc,
    im: RatFunc,
    ext: Cyclotomic,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::from_ratfunc(RatFunc::zero())
    }

    pub fn one() -> Scalar {
        Scalar::from_ratfunc(RatFunc::one())
    }

    pub fn from_i64(c: i64) -> Scalar {
        Scalar::from_ratfunc(RatFunc::from_i64(c))
    }

    pub fn from_int(c: Int) -> Scalar {
        Scalar::from_ratfunc(RatFunc::from_int(c))
    }

    pub fn from_ratfunc(re: RatFunc) -> Scalar {
        Scalar {
            re,
            im: RatFunc::zero(),
            ext: Cyclotomic::Rational,
        }
    }

    pub fn p() -> Scalar {
        Scalar::from_ratfunc(RatFunc::p())
    }

    /// `p^k`
    pub fn p_pow(k: i32) -> Scalar {
        Scalar::from_ratfunc(RatFunc::p_pow(k))
    }

    /// The adjoined root of unity `w` of the given order.
    pub fn root_of_unity(ext: Cyclotomic) -> Scalar {
        Scalar::new(RatFunc::zero(), RatFunc::one(), ext)
    }

    pub fn new(re: RatFunc, im: RatFunc, ext: Cyclotomic) -> Scalar {
        if im.is_zero() {
            Scalar::from_ratfunc(re)
        } else {
            assert!(ext != Cyclotomic::Rational, "nonzero w-part without an extension");
            Scalar { re, im, ext }
        }
    }

    pub fn re(&self) -> &RatFunc {
        &self.re
    }

    pub fn im(&self) -> &RatFunc {
        &self.im
    }

    pub fn ext(&self) -> Cyclotomic {
        self.ext
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    /// Rational-function value if there is no `w` component.
    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        self.im.is_zero().then_some(&self.re)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::from_ratfunc(self.re.inv().unwrap()));
        }
        let (c1, c0) = self.ext.min_poly();
        let (a, b) = (&self.re, &self.im);
        // norm = a^2 - c1*a*b + c0*b^2, inverse = (a - c1*b - b*w) / norm
        let c1r = RatFunc::from_i64(c1);
        let c0r = RatFunc::from_i64(c0);
        let norm = a
            .mul(a)
            .sub(&c1r.mul(&a.mul(b)))
            .add(&c0r.mul(&b.mul(b)));
        let ninv = norm.inv().ok_or(ScalarError::DivisionByZero)?;
        let re = a.sub(&c1r.mul(b)).mul(&ninv);
        let im = b.neg().mul(&ninv);
        Ok(Scalar::new(re, im, self.ext))
    }

    pub fn pow(&self, e: i32) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// `self += a * b` without an intermediate allocation in the common case.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let t = a * b;
        *self = &*self + &t;
    }

    /// Value under `p -> x`, `w -> root` modulo the prime `m`.
    pub fn eval_mod(&self, x: u64, root: u64, m: u64) -> Option<u64> {
        let r = self.re.eval_mod(x, m)?;
        if self.im.is_zero() {
            return Some(r);
        }
        let i = self.im.eval_mod(x, m)?;
        Some((r + super::ratfunc::mul_mod(i, root, m)) % m)
    }

    pub fn weight(&self) -> usize {
        self.re.weight() + self.im.weight()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_ratfunc(self.re.add(&rhs.re));
        }
        let ext = self.ext.join(rhs.ext);
        Scalar::new(self.re.add(&rhs.re), self.im.add(&rhs.im), ext)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_ratfunc(self.re.mul(&rhs.re));
        }
        let ext = self.ext.join(rhs.ext);
        if rhs.im.is_zero() {
            return Scalar::new(self.re.mul(&rhs.re), self.im.mul(&rhs.re), ext);
        }
        if self.im.is_zero() {
            return Scalar::new(self.re.mul(&rhs.re), self.re.mul(&rhs.im), ext);
        }
        let (c1, c0) = ext.min_poly();
        let (a, b, c, d) = (&self.re, &self.im, &rhs.re, &rhs.im);
        let bd = b.mul(d);
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -c1 w - c0
        let re = a.mul(c).sub(&bd.mul(&RatFunc::from_i64(c0)));
        let im = a
            .mul(d)
            .add(&b.mul(c))
            .sub(&bd.mul(&RatFunc::from_i64(c1)));
        Scalar::new(re, im, ext)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: self.re.neg(),
            im: self.im.neg(),
            ext: self.ext,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let w = match self.ext {
            Cyclotomic::Order3 => "w",
            Cyclotomic::Order4 => "i",
            Cyclotomic::Rational => unreachable!(),
        };
        if self.re.is_zero() {
            write!(f, "({})*{w}", self.im)
        } else {
            write!(f, "({})+({})*{w}", self.re, self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_root_relations() {
        let w = Scalar::root_of_unity(Cyclotomic::Order3);
        let w2 = &w * &w;
        let s = &(&w2 + &w) + &Scalar::one();
        assert!(s.is_zero());
        assert!((&w2 * &w).is_one());
        assert_eq!(w.inv().unwrap(), w2);
    }

    #[test]
    fn fourth_root_relations() {
        let i = Scalar::root_of_unity(Cyclotomic::Order4);
        assert_eq!(&i * &i, Scalar::from_i64(-1));
        let x = &Scalar::p() + &i;
        assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }
}

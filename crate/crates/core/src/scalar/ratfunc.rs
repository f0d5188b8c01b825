//! The rational function field Q(p).

use std::cmp::Ordering;
use std::fmt;

use super::int::Int;
use super::poly::Poly;

/// `p^shift * num / den` in lowest terms.
///
/// Canonical form: `num` and `den` have nonzero constant terms (all powers
/// of `p` live in `shift`), `gcd(num, den) = 1` in Z[p] including integer
/// content, and `den` has a positive leading coefficient. Zero is
/// `shift = 0, num = 0, den = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    shift: i32,
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            shift: 0,
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_int(Int::ONE)
    }

    pub fn from_int(c: Int) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            shift: 0,
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_i64(c: i64) -> RatFunc {
        RatFunc::from_int(Int::from(c))
    }

    /// The generator `p`.
    pub fn p() -> RatFunc {
        RatFunc::p_pow(1)
    }

    /// `p^k` for any integer `k`.
    pub fn p_pow(k: i32) -> RatFunc {
        RatFunc {
            shift: k,
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// `c * p^k`
    pub fn monomial(c: i64, k: i32) -> RatFunc {
        if c == 0 {
            return RatFunc::zero();
        }
        RatFunc {
            shift: k,
            num: Poly::constant(Int::from(c)),
            den: Poly::one(),
        }
    }

    /// Builds `num/den` and brings it into canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        RatFunc::normalize(0, num, den)
    }

    pub fn from_laurent(shift: i32, num: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lz = num.low_zeros();
        RatFunc {
            shift: shift + lz as i32,
            num: num.shift_down(lz),
            den: Poly::one(),
        }
    }

    fn normalize(shift: i32, num: Poly, den: Poly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let nz = num.low_zeros();
        let dz = den.low_zeros();
        let shift = shift + nz as i32 - dz as i32;
        let mut num = num.shift_down(nz);
        let mut den = den.shift_down(dz);
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
            if den.leading().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        RatFunc { shift, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a power of `p`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn num_poly(&self) -> &Poly {
        &self.num
    }

    pub fn den_poly(&self) -> &Poly {
        &self.den
    }

    /// Numerator and denominator as honest polynomials in `p` (the shift
    /// folded into whichever side needs it).
    pub fn numer_denom(&self) -> (Poly, Poly) {
        if self.shift >= 0 {
            (self.num.shift_up(self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), self.den.shift_up((-self.shift) as usize))
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = other.num.shift_up((other.shift - s) as usize);
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_laurent(s, a.add(&b));
        }
        if self.den == other.den {
            return RatFunc::normalize(s, a.add(&b), self.den.clone());
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        let den = self.den.mul(&other.den);
        RatFunc::normalize(s, num, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            // product of polynomials with nonzero constant terms keeps one
            return RatFunc {
                shift,
                num: self.num.mul(&other.num),
                den: Poly::one(),
            };
        }
        // cross-cancel before multiplying to keep sizes down
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { shift, num, den }
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Some(RatFunc {
            shift: -self.shift,
            num,
            den,
        })
    }

    pub fn pow(&self, e: i32) -> RatFunc {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Substitutes `p -> p^k` for `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> RatFunc {
        let spread = |poly: &Poly| {
            let mut v = vec![Int::ZERO; poly.coeffs().len().saturating_sub(1) * k + 1];
            for (i, c) in poly.coeffs().iter().enumerate() {
                v[i * k] = c.clone();
            }
            Poly::from_coeffs(v)
        };
        if self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalize(self.shift * k as i32, spread(&self.num), spread(&self.den))
    }

    /// Value at `p = x` modulo the prime `m`, or `None` at a pole.
    pub fn eval_mod(&self, x: u64, m: u64) -> Option<u64> {
        let n = self.num.eval_mod(x, m);
        let d = self.den.eval_mod(x, m);
        if d == 0 || x.is_multiple_of(m) {
            return None;
        }
        let xs = if self.shift >= 0 {
            pow_mod(x, self.shift as u64, m)
        } else {
            inv_mod(pow_mod(x, (-self.shift) as u64, m), m)
        };
        Some(mul_mod(mul_mod(n, xs, m), inv_mod(d, m), m))
    }

    /// Total size in coefficients, used to order pivots by cost.
    pub fn weight(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }

    /// Degree span of the numerator when this is a Laurent polynomial.
    pub fn laurent_range(&self) -> Option<(i32, i32)> {
        if !self.den.is_one() || self.is_zero() {
            return None;
        }
        Some((self.shift, self.shift + self.num.degree().unwrap() as i32))
    }

    fn cmp_key(&self) -> (i32, &Poly, &Poly) {
        (self.shift, &self.num, &self.den)
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

impl PartialOrd for RatFunc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A structural total order (not a field order), used for deterministic sorting.
impl Ord for RatFunc {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.cmp_key(), other.cmp_key());
        a.0.cmp(&b.0)
            .then_with(|| a.1.coeffs().cmp(b.1.coeffs()))
            .then_with(|| a.2.coeffs().cmp(b.2.coeffs()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.numer_denom();
        let nterms = n.coeffs().iter().filter(|c| !c.is_zero()).count();
        let dterms = d.coeffs().iter().filter(|c| !c.is_zero()).count();
        if d.is_one() {
            return write!(f, "{n}");
        }
        let ns = if nterms > 1 { format!("({n})") } else { n.to_string() };
        let ds = if dterms > 1 || !d.coeffs().last().unwrap().is_one() && d.degree() > Some(0) {
            format!("({d})")
        } else {
            d.to_string()
        };
        write!(f, "{ns}/{ds}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> RatFunc {
        RatFunc::p()
    }

    #[test]
    fn laurent_arithmetic() {
        let q = p().pow(2);
        let s = q.add(&q.inv().unwrap());
        assert_eq!(s.to_string(), "(p^4+1)/p^2");
        assert!(s.is_laurent());
        assert_eq!(s.mul(&p().pow(-2)).sub(&p().pow(-4)), RatFunc::one());
    }

    #[test]
    fn general_fractions_cancel() {
        let one = RatFunc::one();
        let a = p().add(&one);
        let b = p().sub(&one);
        let x = a.mul(&b.inv().unwrap());
        let y = b.mul(&a.inv().unwrap());
        assert_eq!(x.mul(&y), one);
        assert_eq!(x.add(&y).to_string(), "(2*p^2+2)/(p^2-1)");
        // (p^2 - 1)/(p - 1) = p + 1
        let c = p().pow(2).sub(&one).mul(&b.inv().unwrap());
        assert_eq!(c, a);
        assert!(c.is_laurent());
    }

    #[test]
    fn denominator_sign_is_positive() {
        let x = RatFunc::from_polys(Poly::from_i64(&[1]), Poly::from_i64(&[1, -1]));
        assert!(!x.den_poly().leading().is_negative());
        assert_eq!(x.to_string(), "-1/(p-1)");
    }

    #[test]
    fn substitution_and_modular_eval() {
        let x = p().add(&RatFunc::one()).mul(&p().inv().unwrap());
        let y = x.substitute_power(3);
        assert_eq!(y.to_string(), "(p^3+1)/p^3");
        let m = 1_000_000_007;
        assert_eq!(y.eval_mod(2, m), Some(mul_mod(9, inv_mod(8, m), m)));
        assert_eq!(p().inv().unwrap().eval_mod(0, m), None);
    }
}

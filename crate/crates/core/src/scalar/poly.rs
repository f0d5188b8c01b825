//! Dense univariate polynomials over the integers.

use std::fmt;

use super::int::Int;

/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Int>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * p^k`
    pub fn monomial(c: Int, k: usize) -> Poly {
        let mut v = vec![Int::ZERO; k + 1];
        v[k] = c;
        Poly::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Int>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().unwrap_or(&Int::ZERO)
    }

    /// Number of trailing zero coefficients at the low end (the p-adic valuation).
    pub fn low_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(k <= self.low_zeros());
        Poly::from_coeffs(self.coeffs[k..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut v = vec![Int::ZERO; k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => v.push(a + b),
                (Some(a), None) => v.push(a.clone()),
                (None, Some(b)) => v.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        let mut v = vec![Int::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                v[i + j] = &v[i + j] + &t;
            }
        }
        Poly::from_coeffs(v)
    }

    pub fn scale(&self, c: &Int) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn div_exact_int(&self, c: &Int) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.div_exact(c)).collect(),
        }
    }

    /// gcd of the coefficients, always nonnegative.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -&c;
        }
        self.div_exact_int(&c)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Poly) -> Poly {
        let db = b.degree().expect("pseudo_rem by zero");
        let lb = b.leading().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().clone();
            let shift = dr - db;
            // r <- lb * r - lr * p^shift * b
            let t = b.shift_up(shift).scale(&lr);
            r = r.scale(&lb).sub(&t);
        }
        r
    }

    /// Exact division in Z[p]; returns `None` when `b` does not divide `self`.
    pub fn div_exact(&self, b: &Poly) -> Option<Poly> {
        let db = b.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if b.coeffs.len() == 1 {
            let c = &b.coeffs[0];
            if self.coeffs.iter().all(|a| c.divides(a)) {
                return Some(self.div_exact_int(c));
            }
            return None;
        }
        let lb = b.leading().clone();
        let mut r = self.clone();
        let da = r.degree()?;
        if da < db {
            return None;
        }
        let mut q = vec![Int::ZERO; da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let lr = r.leading();
            if !lb.divides(lr) {
                return None;
            }
            let c = lr.div_exact(&lb);
            let shift = dr - db;
            r = r.sub(&b.shift_up(shift).scale(&c));
            q[shift] = c;
        }
        Some(Poly::from_coeffs(q))
    }

    /// gcd in Z[p], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive_with_content();
        }
        if other.is_zero() {
            return self.primitive_with_content();
        }
        let cont = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::constant(cont);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.scale(&cont)
    }

    fn primitive_with_content(&self) -> Poly {
        if self.leading().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Evaluate at an integer point.
    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluate modulo a prime `m` at `x`.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        let mut acc: u128 = 0;
        for c in self.coeffs.iter().rev() {
            let cm = int_mod(c, m) as u128;
            acc = (acc * x as u128 + cm) % m as u128;
        }
        acc as u64
    }
}

pub(crate) fn int_mod(c: &Int, m: u64) -> u64 {
    match c {
        Int::Small(v) => v.rem_euclid(m as i64) as u64,
        Int::Big(b) => {
            use num_traits::ToPrimitive;
            let mb = num_bigint::BigInt::from(m);
            let r = ((&**b % &mb) + &mb) % &mb;
            r.to_u64().unwrap()
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "p")?;
                    } else {
                        write!(f, "p^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_products() {
        let a = Poly::from_i64(&[1, 1]); // p + 1
        let b = Poly::from_i64(&[-1, 1]); // p - 1
        let c = Poly::from_i64(&[2, 0, 3]); // 3p^2 + 2
        let x = a.mul(&c).scale(&Int::from(4));
        let y = b.mul(&c).scale(&Int::from(6));
        assert_eq!(x.gcd(&y), c.scale(&Int::from(2)));
        assert_eq!(a.gcd(&b), Poly::one());
    }

    #[test]
    fn exact_division() {
        let a = Poly::from_i64(&[1, 1]);
        let c = Poly::from_i64(&[2, 0, 3]);
        assert_eq!(a.mul(&c).div_exact(&c), Some(a.clone()));
        assert_eq!(c.div_exact(&a), None);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[1, 0, 0, 0, 1]).to_string(), "p^4+1");
        assert_eq!(Poly::from_i64(&[-1, 3, -2]).to_string(), "-2*p^2+3*p-1");
    }
}

//! Exact scalars: the field Q(p) of rational functions with integer
//! coefficients, q-integers, and the field configuration of a quantum group.

mod int;
mod modular;
mod poly;
mod ratfunc;
mod text;
mod value;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use int::Int;
pub use modular::Specialization;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use text::parse_scalar;
pub use value::{Cyclotomic, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid q-integer base {0}")]
    InvalidBase(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfig(String),
    #[error("character not admissible: {0}")]
    InvalidCharacter(String),
}

/// `[m]_base = (base^m - base^-m) / (base - base^-1)`
pub fn q_int(m: i32, base: &Scalar) -> Result<Scalar, ScalarError> {
    if base.is_zero() || base.is_one() || (-base).is_one() {
        return Err(ScalarError::InvalidBase(base.to_string()));
    }
    let num = &base.pow(m) - &base.pow(-m);
    let den = base - &base.pow(-1);
    num.div(&den)
}

pub fn q_factorial(m: i32, base: &Scalar) -> Result<Scalar, ScalarError> {
    if m < 0 {
        return Err(ScalarError::InvalidArgument(format!("negative factorial argument {m}")));
    }
    let mut acc = Scalar::one();
    for k in 1..=m {
        acc = &acc * &q_int(k, base)?;
    }
    Ok(acc)
}

pub fn q_binomial(m: i32, k: i32, base: &Scalar) -> Result<Scalar, ScalarError> {
    if m < 0 || k < 0 || k > m {
        return Err(ScalarError::InvalidArgument(format!("q_binomial({m}, {k})")));
    }
    let num = q_factorial(m, base)?;
    let den = &q_factorial(k, base)? * &q_factorial(m - k, base)?;
    num.div(&den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    /// SL_q(N)
    A,
    /// Sp_q(N), N = 2n
    C,
}

/// Which quantum group is being computed with, and how q and z embed in Q(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldConfig {
    pub series: Series,
    /// Matrix size of the fundamental corepresentation.
    pub n: usize,
    /// `q = p^root_exponent`.
    pub root_exponent: u32,
    /// Sign of `z` for the C series.
    pub z_choice: i64,
}

impl FieldConfig {
    /// SL_q(N): `q = p^N`, `z = p^-1`, so `z^N = q^-1` holds exactly.
    pub fn sl(n: usize) -> Result<FieldConfig, ScalarError> {
        if n < 2 {
            return Err(ScalarError::UnsupportedConfig(format!("SL_q({n}) needs N >= 2")));
        }
        Ok(FieldConfig {
            series: Series::A,
            n,
            root_exponent: n as u32,
            z_choice: 1,
        })
    }

    /// Sp_q(2*rank) with `q = p` and `z = z_choice`.
    pub fn sp(rank: usize, z_choice: i64) -> Result<FieldConfig, ScalarError> {
        if rank < 1 {
            return Err(ScalarError::UnsupportedConfig("Sp_q(2n) needs n >= 1".into()));
        }
        if z_choice != 1 && z_choice != -1 {
            return Err(ScalarError::UnsupportedConfig(format!("z must be +1 or -1, got {z_choice}")));
        }
        Ok(FieldConfig {
            series: Series::C,
            n: 2 * rank,
            root_exponent: 1,
            z_choice,
        })
    }

    /// Rank of the underlying simple Lie algebra.
    pub fn rank(&self) -> usize {
        match self.series {
            Series::A => self.n - 1,
            Series::C => self.n / 2,
        }
    }

    pub fn q(&self) -> Scalar {
        Scalar::p_pow(self.root_exponent as i32)
    }

    pub fn z(&self) -> Scalar {
        match self.series {
            Series::A => Scalar::p_pow(-1),
            Series::C => Scalar::from_i64(self.z_choice),
        }
    }

    /// Order that admissible characters must divide.
    pub fn character_order(&self) -> u32 {
        match self.series {
            Series::A => self.n as u32,
            Series::C => 2,
        }
    }

    /// All admissible roots of unity, in [`Zeta`] order.
    pub fn admissible(&self) -> Vec<Zeta> {
        let m = self.character_order();
        let mut out: Vec<Zeta> = (0..m).map(|k| Zeta::new(k, m)).collect();
        out.sort();
        out
    }

    pub fn label(&self) -> String {
        match self.series {
            Series::A => format!("SL_q({})", self.n),
            Series::C => format!("Sp_q({})", self.n),
        }
    }
}

/// The root of unity `exp(2 pi i k / order)`, kept in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zeta {
    k: u32,
    order: u32,
}

impl Zeta {
    pub const ONE: Zeta = Zeta { k: 0, order: 1 };

    pub fn new(k: u32, order: u32) -> Zeta {
        assert!(order > 0);
        let k = k % order;
        let g = gcd_u32(k, order);
        Zeta {
            k: k / g,
            order: order / g,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &Zeta) -> Zeta {
        let l = self.order / gcd_u32(self.order, other.order) * other.order;
        Zeta::new(self.k * (l / self.order) + other.k * (l / other.order), l)
    }

    pub fn inverse(&self) -> Zeta {
        Zeta::new(self.order - self.k, self.order)
    }

    pub fn is_admissible(&self, cfg: &FieldConfig) -> bool {
        cfg.character_order().is_multiple_of(self.order)
    }

    /// Exact value in Q(p)(w).
    pub fn value(&self) -> Result<Scalar, ScalarError> {
        let k = self.k as i32;
        match self.order {
            1 => Ok(Scalar::one()),
            2 => Ok(Scalar::from_i64(-1)),
            3 => Ok(Scalar::root_of_unity(Cyclotomic::Order3).pow(k)),
            4 => Ok(Scalar::root_of_unity(Cyclotomic::Order4).pow(k)),
            6 => {
                // primitive sixth root 1 + w = -w^2
                let w = Scalar::root_of_unity(Cyclotomic::Order3);
                Ok((&Scalar::one() + &w).pow(k))
            }
            o => Err(ScalarError::UnsupportedConfig(format!(
                "roots of unity of order {o} need a cyclotomic field of degree > 2"
            ))),
        }
    }

    /// Parses `1`, `-1`, `w`, `w^2`, `-w`, `-w^2`, `i`, `-i`, or `k/order`.
    pub fn parse(s: &str) -> Result<Zeta, ScalarError> {
        let t = s.trim();
        let z = match t {
            "1" => Zeta::ONE,
            "-1" => Zeta::new(1, 2),
            "w" => Zeta::new(1, 3),
            "w^2" | "w2" => Zeta::new(2, 3),
            "-w" => Zeta::new(5, 6),
            "-w^2" | "-w2" => Zeta::new(1, 6),
            "i" => Zeta::new(1, 4),
            "-i" => Zeta::new(3, 4),
            _ => {
                let (a, b) = t
                    .split_once('/')
                    .ok_or_else(|| ScalarError::Parse(format!("unknown root of unity '{t}'")))?;
                let k: u32 = a.trim().parse().map_err(|_| ScalarError::Parse(format!("bad root index '{a}'")))?;
                let o: u32 = b.trim().parse().map_err(|_| ScalarError::Parse(format!("bad root order '{b}'")))?;
                if o == 0 {
                    return Err(ScalarError::Parse("root order 0".into()));
                }
                Zeta::new(k, o)
            }
        };
        Ok(z)
    }

    /// Parses and checks admissibility for `cfg`.
    pub fn parse_admissible(s: &str, cfg: &FieldConfig) -> Result<Zeta, ScalarError> {
        let z = Zeta::parse(s)?;
        if !z.is_admissible(cfg) {
            return Err(ScalarError::InvalidCharacter(format!(
                "zeta = {z} has order {} but {} requires zeta^{} = 1",
                z.order,
                cfg.label(),
                cfg.character_order()
            )));
        }
        Ok(z)
    }
}

impl Ord for Zeta {
    /// By angle `k/order` in [0, 1).
    fn cmp(&self, other: &Self) -> Ordering {
        (self.k as u64 * other.order as u64).cmp(&(other.k as u64 * self.order as u64))
    }
}

impl PartialOrd for Zeta {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Zeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.k, self.order) {
            (0, 1) => "1".to_string(),
            (1, 2) => "-1".into(),
            (1, 3) => "w".into(),
            (2, 3) => "w^2".into(),
            (1, 4) => "i".into(),
            (3, 4) => "-i".into(),
            (1, 6) => "-w^2".into(),
            (5, 6) => "-w".into(),
            (k, o) => format!("{k}/{o}"),
        };
        write!(f, "{s}")
    }
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Scalar {
        Scalar::p()
    }

    #[test]
    fn arithmetic_examples() {
        let s = &q() + &q().inv().unwrap();
        assert_eq!(s, parse_scalar("(p^2+1)/p").unwrap());
        let d = &q() - &q().inv().unwrap();
        assert!((&d * &d.inv().unwrap()).is_one());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn q_integers() {
        assert!(q_int(1, &q()).unwrap().is_one());
        assert_eq!(q_int(2, &q()).unwrap(), &q() + &q().pow(-1));
        assert!(q_int(0, &q()).unwrap().is_zero());
        assert!(q_int(3, &Scalar::one()).is_err());
        assert!(q_int(3, &Scalar::from_i64(-1)).is_err());
        assert!(q_int(3, &Scalar::zero()).is_err());
    }

    #[test]
    fn q_binomials() {
        for m in 0..6 {
            assert!(q_binomial(m, 0, &q()).unwrap().is_one());
            for k in 0..=m {
                let b = q_binomial(m, k, &q()).unwrap();
                assert_eq!(b, q_binomial(m, m - k, &q()).unwrap());
                assert!(b.as_ratfunc().unwrap().is_laurent());
            }
        }
        assert_eq!(q_binomial(2, 1, &q()).unwrap(), &q() + &q().pow(-1));
        assert!(q_binomial(2, 3, &q()).is_err());
        assert!(q_binomial(-1, 0, &q()).is_err());
    }

    #[test]
    fn field_config_identities() {
        for n in 2..5 {
            let c = FieldConfig::sl(n).unwrap();
            assert_eq!(c.z().pow(n as i32), c.q().pow(-1));
        }
        for z in [1, -1] {
            let c = FieldConfig::sp(2, z).unwrap();
            assert!(c.z().pow(2).is_one());
        }
        assert!(FieldConfig::sl(1).is_err());
        assert!(FieldConfig::sp(1, 2).is_err());
    }

    #[test]
    fn admissible_characters() {
        let sl2 = FieldConfig::sl(2).unwrap();
        assert_eq!(sl2.admissible().len(), 2);
        assert!(Zeta::parse_admissible("i", &sl2).is_err());
        assert!(Zeta::parse_admissible("-1", &sl2).is_ok());
        let sl3 = FieldConfig::sl(3).unwrap();
        let chars = sl3.admissible();
        assert_eq!(chars.len(), 3);
        for z in &chars {
            assert!(z.value().unwrap().pow(3).is_one());
        }
        let w = Zeta::parse("w").unwrap();
        assert_eq!(w.mul(&w), Zeta::parse("w^2").unwrap());
        assert_eq!(w.mul(&w.inverse()), Zeta::ONE);
        let sp = FieldConfig::sp(1, 1).unwrap();
        assert_eq!(sp.admissible().len(), 2);
        assert!(Zeta::parse_admissible("w", &sp).is_err());
        let six = Zeta::parse("-w").unwrap().value().unwrap();
        assert!(six.pow(6).is_one() && !six.pow(3).is_one() && !six.pow(2).is_one());
    }
}

//! Dominant weights given by Young-frame column multiplicities.

use std::fmt;

use serde::Serialize;

use crate::scalar::{FieldConfig, Series};

/// `λ = Σ_j m_j ω_j`; `m[j-1]` is the number of columns of height `j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct YoungWeight {
    pub m: Vec<usize>,
}

impl YoungWeight {
    pub fn new(mut m: Vec<usize>) -> YoungWeight {
        while m.last() == Some(&0) {
            m.pop();
        }
        YoungWeight { m }
    }

    pub fn zero() -> YoungWeight {
        YoungWeight::default()
    }

    /// `ω_k`
    pub fn fundamental(k: usize) -> YoungWeight {
        let mut m = vec![0; k];
        m[k - 1] = 1;
        YoungWeight::new(m)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_empty()
    }

    /// Number of boxes, `Σ_j j·m_j`.
    pub fn size(&self) -> usize {
        self.m.iter().enumerate().map(|(j, &c)| (j + 1) * c).sum()
    }

    /// Row lengths of the frame, longest first.
    pub fn partition(&self) -> Vec<usize> {
        let h = self.m.len();
        (0..h).map(|i| self.m[i..].iter().sum()).collect()
    }

    /// All weights with `size() <= bound` whose columns are at most `max_height` tall.
    pub fn all_up_to(bound: usize, max_height: usize) -> Vec<YoungWeight> {
        fn rec(j: usize, left: usize, max_h: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungWeight>) {
            if j > max_h {
                out.push(YoungWeight::new(cur.clone()));
                return;
            }
            for c in 0..=left / j {
                cur.push(c);
                rec(j + 1, left - c * j, max_h, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, bound, max_height, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for YoungWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.partition().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", p.join(","))
    }
}

/// Classical Weyl dimension of the irreducible module of highest weight λ.
pub fn weyl_dim(weight: &YoungWeight, config: &FieldConfig) -> u64 {
    let rank = config.rank();
    let mut lam: Vec<i64> = vec![0; rank + 1];
    for (j, &c) in weight.m.iter().enumerate() {
        assert!(j < rank, "weight outside the weight lattice of rank {rank}");
        for x in lam.iter_mut().take(j + 1) {
            *x += c as i64;
        }
    }
    let (mut num, mut den) = (1i128, 1i128);
    match config.series {
        Series::A => {
            let n = rank + 1;
            for i in 0..n {
                for j in i + 1..n {
                    num *= (lam[i] - lam[j] + (j - i) as i64) as i128;
                    den *= (j - i) as i128;
                }
            }
        }
        Series::C => {
            let n = rank;
            let rho: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
            let lr: Vec<i64> = (0..n).map(|i| lam[i] + rho[i]).collect();
            for i in 0..n {
                for j in i + 1..n {
                    num *= ((lr[i] - lr[j]) * (lr[i] + lr[j])) as i128;
                    den *= ((rho[i] - rho[j]) * (rho[i] + rho[j])) as i128;
                }
                num *= lr[i] as i128;
                den *= rho[i] as i128;
            }
        }
    }
    (num / den) as u64
}

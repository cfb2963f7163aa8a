use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{CyclicFlatMatroid, ORACLE_LIMIT};
use crate::subset::Subset;

/// Tutte polynomial with exact coefficients, keyed by `(power of x, power of y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl TuttePolynomial {
    pub fn coeff(&self, i: usize, j: usize) -> BigUint {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn evaluate(&self, x: i64, y: i64) -> BigInt {
        self.terms()
            .map(|(i, j, c)| {
                BigInt::from(c.clone()) * BigInt::from(x).pow(i as u32) * BigInt::from(y).pow(j as u32)
            })
            .sum()
    }

    /// Number of bases, `T(1, 1)`.
    pub fn bases(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    pub fn to_json(&self) -> TutteJson {
        TutteJson {
            coeffs: self
                .terms()
                .map(|(i, j, c)| (i, j, c.to_string()))
                .collect(),
        }
    }

    pub fn from_json(json: &TutteJson) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (i, j, c) in &json.coeffs {
            let v: BigUint = c
                .parse()
                .map_err(|_| Error::Malformed(format!("coefficient {c:?} is not a decimal")))?;
            if !v.is_zero() {
                coeffs.insert((*i, *j), v);
            }
        }
        Ok(TuttePolynomial { coeffs })
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(i, j), c) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let p = |v: &str, e: usize| match e {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{e}"),
                    };
                    format!("{}{}", p("x", i), p("y", j))
                }
            };
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{c}{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteJson {
    pub coeffs: Vec<(usize, usize, String)>,
}

/// Corank-nullity expansion over all subsets.
pub fn tutte(m: &CyclicFlatMatroid) -> Result<TuttePolynomial> {
    let n = m.n();
    if n > ORACLE_LIMIT {
        return Err(Error::Budget(format!("Tutte subset sum needs n <= {ORACLE_LIMIT}")));
    }
    let rm = m.rank_of_matroid();
    let width = n + 1;
    // counts[corank * width + nullity]
    let counts: Vec<u64> = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; (rm + 1) * width],
            |mut acc, b| {
                let x = Subset::from_bits(b);
                let r = m.rank(x);
                acc[(rm - r) * width + (x.len() - r)] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; (rm + 1) * width],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let binom = binomials(rm.max(n));
    let mut coeffs = BTreeMap::new();
    for a in 0..=rm {
        for b in 0..=n {
            let mut total = BigInt::zero();
            for i in a..=rm {
                for j in b..=n {
                    let c = counts[i * width + j];
                    if c == 0 {
                        continue;
                    }
                    let mut term = BigInt::from(c) * &binom[i][a] * &binom[j][b];
                    if (i - a + j - b) % 2 == 1 {
                        term = -term;
                    }
                    total += term;
                }
            }
            if total.is_negative() {
                return Err(Error::Internal(format!(
                    "negative Tutte coefficient at x^{a} y^{b}"
                )));
            }
            if !total.is_zero() {
                coeffs.insert((a, b), total.magnitude().clone());
            }
        }
    }
    Ok(TuttePolynomial { coeffs })
}

fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + &t[i - 1][j];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_uniform_matroids() {
        let u12 = CyclicFlatMatroid::uniform(1, 2).unwrap();
        let t = tutte(&u12).unwrap();
        assert_eq!(t.to_string(), "x + y");
        let u24 = CyclicFlatMatroid::uniform(2, 4).unwrap();
        let t = tutte(&u24).unwrap();
        assert_eq!(t.to_string(), "x^2 + 2x + y^2 + 2y");
        assert_eq!(t.bases(), BigUint::from(6u32));
        assert_eq!(t.evaluate(2, 2), BigInt::from(16));
    }

    #[test]
    fn json_round_trip() {
        let t = tutte(&CyclicFlatMatroid::uniform(2, 5).unwrap()).unwrap();
        let json = t.to_json();
        assert_eq!(TuttePolynomial::from_json(&json).unwrap(), t);
    }
}

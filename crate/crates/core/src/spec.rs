//! Clique targets `(t_1, ..., t_k)`: color `ℓ` must avoid a monochromatic `K_{t_ℓ}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Most colors the engine accepts.
pub const MAX_COLORS: usize = 4;

/// The vector `(t_1, ..., t_k)`, kept in the order given so that color `ℓ`
/// (numbered from 1) always pairs with the `ℓ`-th entry.
///
/// The structural lemma checks assume the ascending convention
/// `t_1 <= ... <= t_k`; see [`CliqueVector::is_ascending`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CliqueVector(Vec<usize>);

impl CliqueVector {
    pub fn new(sizes: &[usize]) -> Result<Self, Error> {
        if sizes.is_empty() {
            return Err(Error::Spec("at least one color is required".into()));
        }
        if sizes.len() > MAX_COLORS {
            return Err(Error::Spec(format!(
                "{} colors requested, at most {MAX_COLORS} supported",
                sizes.len()
            )));
        }
        if let Some(t) = sizes.iter().find(|&&t| t < 2) {
            return Err(Error::Spec(format!("clique size {t} is below 2")));
        }
        if let Some(t) = sizes.iter().find(|&&t| t > 32) {
            return Err(Error::Spec(format!("clique size {t} exceeds 32")));
        }
        Ok(CliqueVector(sizes.to_vec()))
    }

    /// Number of colors `k`.
    #[inline]
    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Target for color `color` (1-based).
    #[inline]
    pub fn t(&self, color: usize) -> usize {
        self.0[color - 1]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn is_ascending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Same targets, sorted ascending.
    pub fn sorted(&self) -> CliqueVector {
        let mut s = self.0.clone();
        s.sort_unstable();
        CliqueVector(s)
    }

    /// Drops the first color: `(t_2, ..., t_k)`.
    pub fn without_first(&self) -> Result<CliqueVector, Error> {
        CliqueVector::new(&self.0[1..])
    }
}

impl fmt::Display for CliqueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for CliqueVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let sizes = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Spec(format!("cannot parse {p:?} as a clique size")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        CliqueVector::new(&sizes)
    }
}

impl TryFrom<Vec<usize>> for CliqueVector {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        CliqueVector::new(&v)
    }
}

impl From<CliqueVector> for Vec<usize> {
    fn from(c: CliqueVector) -> Vec<usize> {
        c.0
    }
}

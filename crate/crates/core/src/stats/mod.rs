//! Statistics on Gog, Magog and GOGAm triangles.

mod diamond;
mod poly;
mod standardization;

pub use diamond::{corner_pair, corner_triangle, diamond_set, in_diamond, witness};
pub use poly::{binomial, z_brute, z_cofactor, z_determinant, z_matrix, BivariatePolynomial};
pub use standardization::{
    left_standardization, projection, right_standardization, standardization_counts, StandardizationCounts,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classes::Family;
use crate::error::{Error, Result};
use crate::schutzenberger::schutzenberger;
use crate::triangle::GTTriangle;

/// Number of inversions, `X[i][j] = X[i+1][j]`.
pub fn mu(t: &GTTriangle) -> usize {
    let n = t.n();
    (1..n).map(|i| (1..=i).filter(|&j| t.get(i, j) == t.get(i + 1, j)).count()).sum()
}

/// Number of coinversions, `X[i][j] = X[i+1][j+1]`.
pub fn nu(t: &GTTriangle) -> usize {
    let n = t.n();
    (1..n).map(|i| (1..=i).filter(|&j| t.get(i, j) == t.get(i + 1, j + 1)).count()).sum()
}

fn require(family: Family, t: &GTTriangle) -> Result<()> {
    if family.contains(t) {
        Ok(())
    } else {
        Err(Error::NotInFamily(family.name()))
    }
}

fn ones_in_first_column(t: &GTTriangle) -> usize {
    (1..=t.n()).filter(|&k| t.get(k, 1) == 1).count()
}

fn alpha_gogam_unchecked(t: &GTTriangle) -> usize {
    let n = t.n();
    let l = ones_in_first_column(t);
    let lowered = (1..l).any(|k| {
        let (i, j) = (n - l + k, k + 1);
        j <= i && i < n && t.get(i, j) == t.get(i + 1, j)
    });
    if lowered {
        l - 1
    } else {
        l
    }
}

fn gamma_magog_unchecked(t: &GTTriangle) -> usize {
    let n = t.n();
    let k = (1..=n).rev().find(|&k| t.get(k, k) == k as i64).unwrap_or(1);
    let (mut i, mut j) = (k, k);
    while j > 1 {
        if t.get(i, j - 1) != t.get(i - 1, j - 1) {
            i -= 1;
        }
        j -= 1;
    }
    i
}

pub fn alpha(family: Family, t: &GTTriangle) -> Result<usize> {
    require(family, t)?;
    Ok(match family {
        Family::Gog => ones_in_first_column(t),
        Family::Gogam => alpha_gogam_unchecked(t),
        Family::Magog => alpha_gogam_unchecked(&schutzenberger(t)),
    })
}

pub fn beta(family: Family, t: &GTTriangle) -> Result<usize> {
    require(family, t)?;
    let n = t.n();
    Ok(match family {
        Family::Gog | Family::Gogam => t.get(1, 1) as usize,
        Family::Magog => {
            let top: i64 = t.row(n).iter().sum();
            let below: i64 = if n > 1 { t.row(n - 1).iter().sum() } else { 0 };
            (top - below) as usize
        }
    })
}

pub fn gamma(family: Family, t: &GTTriangle) -> Result<usize> {
    require(family, t)?;
    let n = t.n();
    Ok(match family {
        Family::Gog => (1..=n).filter(|&k| t.get(k, k) == n as i64).count(),
        Family::Magog => gamma_magog_unchecked(t),
        Family::Gogam => gamma_magog_unchecked(&schutzenberger(t)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatRecord {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub mu: usize,
    pub nu: usize,
}

pub fn stat_record(family: Family, t: &GTTriangle) -> Result<StatRecord> {
    Ok(StatRecord { alpha: alpha(family, t)?, beta: beta(family, t)?, gamma: gamma(family, t)?, mu: mu(t), nu: nu(t) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistic {
    Alpha,
    Beta,
    Gamma,
    Mu,
    Nu,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [Statistic::Alpha, Statistic::Beta, Statistic::Gamma, Statistic::Mu, Statistic::Nu];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Alpha => "alpha",
            Statistic::Beta => "beta",
            Statistic::Gamma => "gamma",
            Statistic::Mu => "mu",
            Statistic::Nu => "nu",
        }
    }

    pub fn of(self, r: &StatRecord) -> usize {
        match self {
            Statistic::Alpha => r.alpha,
            Statistic::Beta => r.beta,
            Statistic::Gamma => r.gamma,
            Statistic::Mu => r.mu,
            Statistic::Nu => r.nu,
        }
    }

    pub fn eval(self, family: Family, t: &GTTriangle) -> Result<usize> {
        match self {
            Statistic::Alpha => alpha(family, t),
            Statistic::Beta => beta(family, t),
            Statistic::Gamma => gamma(family, t),
            Statistic::Mu => Ok(mu(t)),
            Statistic::Nu => Ok(nu(t)),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown statistic {s:?}")))
    }
}

/// Value → number of objects.
pub type Distribution = BTreeMap<usize, u64>;

pub fn distribution<'a>(
    family: Family,
    statistic: Statistic,
    objects: impl IntoIterator<Item = &'a GTTriangle>,
) -> Result<Distribution> {
    let mut d = Distribution::new();
    for t in objects {
        *d.entry(statistic.eval(family, t)?).or_default() += 1;
    }
    Ok(d)
}

/// `(mu, nu)` → number of objects.
pub fn joint_mu_nu<'a>(objects: impl IntoIterator<Item = &'a GTTriangle>) -> BTreeMap<(usize, usize), u64> {
    let mut table = BTreeMap::new();
    for t in objects {
        *table.entry((mu(t), nu(t))).or_default() += 1;
    }
    table
}

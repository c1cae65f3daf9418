use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::classes::Family;
use crate::enumeration::par_map;
use crate::error::{Error, Result};
use crate::shapes::Region;
use crate::stats::{mu, nu, Distribution, Statistic};
use crate::triangle::GTTriangle;

use super::{Caps, Config};

/// A single statistic or the joint `(mu, nu)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatSelector {
    Single(Statistic),
    Joint,
}

impl StatSelector {
    pub fn name(self) -> &'static str {
        match self {
            StatSelector::Single(s) => s.name(),
            StatSelector::Joint => "mu,nu",
        }
    }
}

impl FromStr for StatSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mu,nu" | "mu-nu" | "joint" => Ok(StatSelector::Joint),
            other => other.parse().map(StatSelector::Single),
        }
    }
}

/// Exact counts keyed by statistic value (one coordinate, or `[mu, nu]`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub family: Family,
    pub n: usize,
    pub selector: StatSelector,
    pub counts: BTreeMap<Vec<usize>, u64>,
}

impl StatTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The joint table as `(mu, nu) -> count`; empty for single statistics.
    pub fn joint(&self) -> BTreeMap<(usize, usize), u64> {
        self.counts.iter().filter(|(k, _)| k.len() == 2).map(|(k, &c)| ((k[0], k[1]), c)).collect()
    }

    pub fn single(&self) -> Distribution {
        self.counts.iter().filter(|(k, _)| k.len() == 1).map(|(k, &c)| (k[0], c)).collect()
    }

    pub fn to_value(&self) -> Value {
        let counts: Vec<Value> = self.counts.iter().map(|(k, c)| json!({"value": k, "count": c})).collect();
        json!({
            "family": self.family,
            "n": self.n,
            "statistic": self.selector.name(),
            "total": self.total(),
            "counts": counts,
        })
    }

    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    /// Value/count lines, or for the joint table a grid with one row per
    /// `nu` and one column per `mu`; empty cells print as `.`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} n={} {}\n", self.family.name(), self.n, self.selector.name());
        match self.selector {
            StatSelector::Single(_) => {
                for (v, c) in self.single() {
                    let _ = writeln!(out, "{v:>4} {c:>8}");
                }
            }
            StatSelector::Joint => {
                let joint = self.joint();
                let top = self.n * self.n.saturating_sub(1) / 2;
                let width = joint.values().map(|c| c.to_string().len()).max().unwrap_or(1).max(2);
                let _ = write!(out, "nu\\mu");
                for m in 0..=top {
                    let _ = write!(out, " {m:>width$}");
                }
                out.push('\n');
                for v in 0..=top {
                    let _ = write!(out, "{v:>5}");
                    for m in 0..=top {
                        match joint.get(&(m, v)) {
                            Some(c) => {
                                let _ = write!(out, " {c:>width$}");
                            }
                            None => {
                                let _ = write!(out, " {:>width$}", ".");
                            }
                        }
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

fn count_by<F>(family: Family, n: usize, jobs: usize, key: F) -> Result<BTreeMap<Vec<usize>, u64>>
where
    F: Fn(&GTTriangle) -> Result<Vec<usize>> + Sync,
{
    let parts = par_map(family, Region::Triangle { n }, jobs, |st| {
        let mut m: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for v in st {
            let t = GTTriangle::from_flat_unchecked(n, v);
            *m.entry(key(&t)?).or_default() += 1;
        }
        Ok(m)
    })?;
    let mut merged = BTreeMap::new();
    for part in parts {
        for (k, c) in part? {
            *merged.entry(k).or_default() += c;
        }
    }
    Ok(merged)
}

pub fn stats_table(family: Family, n: usize, selector: StatSelector, cfg: &Config) -> Result<StatTable> {
    Caps::check(cfg.caps.triangles, n)?;
    let counts = match selector {
        StatSelector::Single(s) => count_by(family, n, cfg.jobs, |t| Ok(vec![s.eval(family, t)?]))?,
        StatSelector::Joint => count_by(family, n, cfg.jobs, |t| Ok(vec![mu(t), nu(t)]))?,
    };
    Ok(StatTable { family, n, selector, counts })
}

/// Frozen `(mu, nu) -> count` tables of Gog triangles of sizes 3 and 4.
pub fn reference_joint_table(n: usize) -> Option<BTreeMap<(usize, usize), u64>> {
    let cells: &[((usize, usize), u64)] = match n {
        3 => &[((3, 0), 1), ((1, 1), 1), ((2, 1), 2), ((1, 2), 2), ((0, 3), 1)],
        4 => &[
            ((6, 0), 1),
            ((3, 1), 1),
            ((4, 1), 2),
            ((5, 1), 3),
            ((3, 2), 6),
            ((4, 2), 5),
            ((1, 3), 1),
            ((2, 3), 6),
            ((3, 3), 6),
            ((1, 4), 2),
            ((2, 4), 5),
            ((1, 5), 3),
            ((0, 6), 1),
        ],
        _ => return None,
    };
    Some(cells.iter().copied().collect())
}

/// Distributions of `alpha`, `beta`, `gamma` on each of the three families.
pub fn alpha_beta_gamma_distributions(n: usize, cfg: &Config) -> Result<BTreeMap<(Family, Statistic), Distribution>> {
    Caps::check(cfg.caps.triangles, n)?;
    let mut out = BTreeMap::new();
    for family in Family::ALL {
        let keyed = count_by(family, n, cfg.jobs, |t| {
            Ok(vec![
                Statistic::Alpha.eval(family, t)?,
                Statistic::Beta.eval(family, t)?,
                Statistic::Gamma.eval(family, t)?,
            ])
        })?;
        for (idx, st) in [Statistic::Alpha, Statistic::Beta, Statistic::Gamma].into_iter().enumerate() {
            let mut d = Distribution::new();
            for (k, c) in &keyed {
                *d.entry(k[idx]).or_default() += c;
            }
            out.insert((family, st), d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config { caps: Caps::default(), jobs: 2 }
    }

    #[test]
    fn joint_tables_match_reference() {
        for n in [3, 4] {
            let t = stats_table(Family::Gog, n, StatSelector::Joint, &cfg()).unwrap();
            assert_eq!(t.joint(), reference_joint_table(n).unwrap());
        }
        assert!(reference_joint_table(5).is_none());
    }

    #[test]
    fn selector_parsing_and_caps() {
        assert_eq!("mu,nu".parse::<StatSelector>().unwrap(), StatSelector::Joint);
        assert_eq!("Beta".parse::<StatSelector>().unwrap(), StatSelector::Single(Statistic::Beta));
        assert!("x".parse::<StatSelector>().is_err());
        assert_eq!(stats_table(Family::Gog, 7, StatSelector::Joint, &cfg()), Err(Error::CapExceeded { n: 7, cap: 6 }));
    }

    #[test]
    fn text_and_json() {
        let t = stats_table(Family::Gog, 3, StatSelector::Joint, &cfg()).unwrap();
        let text = t.to_text();
        assert!(text.starts_with("Gog n=3 mu,nu\n"));
        assert!(text.contains("    1  .  1  2  .\n"));
        let single = stats_table(Family::Magog, 3, StatSelector::Single(Statistic::Beta), &cfg()).unwrap();
        assert_eq!(single.total(), 7);
        assert!(single.to_json().contains(r#""statistic":"beta""#));
    }

    #[test]
    fn alpha_beta_gamma_shape() {
        let d = alpha_beta_gamma_distributions(4, &cfg()).unwrap();
        assert_eq!(d.len(), 9);
        assert!(d.values().all(|x| x.values().sum::<u64>() == 42));
    }
}

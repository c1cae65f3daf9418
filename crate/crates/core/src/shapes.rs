//! Partial triangular arrays: left and right trapezoids and pentagons.
//!
//! Every shape is a subset of the cells `n >= i >= j >= 1` of a size-`n`
//! triangle. Rows are stored bottom-up and each row lists only its stored
//! cells, left to right.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triangle::{Cell, Entry, GTTriangle};

/// The index region a partial array occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    Triangle {
        n: usize,
    },
    /// The `k` leftmost NW-SE diagonals: cells with `j <= k`.
    Left {
        n: usize,
        k: usize,
    },
    /// The `k` rightmost SW-NE diagonals: cells with `i - j <= k - 1`.
    Right {
        n: usize,
        k: usize,
    },
    /// `j <= k`, `i - j <= l - 1`, `i <= m`.
    Pentagon {
        n: usize,
        k: usize,
        l: usize,
        m: usize,
    },
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        let (n, params): (usize, Vec<(&str, usize)>) = match *self {
            Region::Triangle { n } => (n, vec![]),
            Region::Left { n, k } | Region::Right { n, k } => (n, vec![("k", k)]),
            Region::Pentagon { n, k, l, m } => (n, vec![("k", k), ("l", l), ("m", m)]),
        };
        if n == 0 {
            return Err(Error::Shape("size must be positive".into()));
        }
        for (name, v) in params {
            if v == 0 || v > n {
                return Err(Error::Shape(format!("{name}={v} must lie in 1..={n}")));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        match *self {
            Region::Triangle { n } | Region::Left { n, .. } | Region::Right { n, .. } | Region::Pentagon { n, .. } => n,
        }
    }

    /// Number of stored rows (bottom-up).
    pub fn height(&self) -> usize {
        match *self {
            Region::Pentagon { m, .. } => m,
            other => other.n(),
        }
    }

    /// Column range `lo..=hi` stored on row `i`; empty when `lo > hi`.
    pub fn span(&self, i: usize) -> (usize, usize) {
        match *self {
            Region::Triangle { .. } => (1, i),
            Region::Left { k, .. } => (1, i.min(k)),
            Region::Right { k, .. } => ((i + 1).saturating_sub(k).max(1), i),
            Region::Pentagon { k, l, .. } => ((i + 1).saturating_sub(l).max(1), i.min(k)),
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        if i == 0 || i > self.height() {
            return false;
        }
        let (lo, hi) = self.span(i);
        lo <= j && j <= hi
    }

    /// Stored cells in bottom-up, left-to-right order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.height() {
            let (lo, hi) = self.span(i);
            out.extend((lo..=hi).map(|j| Cell::new(i, j)));
        }
        out
    }

    /// Restriction of a full triangle to this region.
    pub fn cut(&self, t: &GTTriangle) -> Vec<Vec<Entry>> {
        (1..=self.height())
            .map(|i| {
                let (lo, hi) = self.span(i);
                (lo..=hi).map(|j| t.get(i, j)).collect()
            })
            .collect()
    }

    fn check_rows(&self, rows: &[Vec<Entry>]) -> Result<()> {
        self.validate()?;
        if rows.len() != self.height() {
            return Err(Error::Shape(format!("expected {} rows, got {}", self.height(), rows.len())));
        }
        for (idx, row) in rows.iter().enumerate() {
            let (lo, hi) = self.span(idx + 1);
            let want = (hi + 1).saturating_sub(lo);
            if row.len() != want {
                return Err(Error::Shape(format!("row {} must have {want} entries, got {}", idx + 1, row.len())));
            }
        }
        Ok(())
    }
}

/// Common read access to the stored cells of a partial array.
pub trait PartialArray {
    fn region(&self) -> Region;
    fn rows(&self) -> &[Vec<Entry>];

    fn n(&self) -> usize {
        self.region().n()
    }

    /// `X[i][j]` if the cell is stored.
    fn get(&self, i: usize, j: usize) -> Option<Entry> {
        let region = self.region();
        if !region.contains(i, j) {
            return None;
        }
        let (lo, _) = region.span(i);
        Some(self.rows()[i - 1][j - lo])
    }

    /// Stored `(cell, value)` pairs in bottom-up order.
    fn assignments(&self) -> Vec<(Cell, Entry)> {
        let region = self.region();
        region.cells().into_iter().map(|c| (c, self.get(c.i, c.j).expect("region cell"))).collect()
    }

    /// Interlacing and positivity on the stored cells only.
    fn is_gt_consistent(&self) -> bool {
        let pairs = self.assignments();
        pairs.iter().all(|&(c, v)| {
            let below_ok = self.get(c.i + 1, c.j).is_none_or(|w| w <= v);
            let above_ok = self.get(c.i + 1, c.j + 1).is_none_or(|w| v <= w);
            v >= 1 && below_ok && above_ok
        })
    }
}

macro_rules! partial_array_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            region: Region,
            rows: Vec<Vec<Entry>>,
        }

        impl PartialArray for $name {
            fn region(&self) -> Region {
                self.region
            }
            fn rows(&self) -> &[Vec<Entry>] {
                &self.rows
            }
        }

        impl $name {
            pub fn into_rows(self) -> Vec<Vec<Entry>> {
                self.rows
            }

            /// Entries bottom-up, concatenated.
            pub fn flat(&self) -> Vec<Entry> {
                self.rows.iter().flatten().copied().collect()
            }

            pub(crate) fn from_flat_unchecked(region: Region, flat: &[Entry]) -> Self {
                let mut rows = Vec::with_capacity(region.height());
                let mut pos = 0;
                for i in 1..=region.height() {
                    let (lo, hi) = region.span(i);
                    let len = (hi + 1).saturating_sub(lo);
                    rows.push(flat[pos..pos + len].to_vec());
                    pos += len;
                }
                $name { region, rows }
            }
        }
    };
}

partial_array_type!(LeftTrapezoid, "An `(n,k)` left trapezoid: the cells with `j <= k`.");
partial_array_type!(RightTrapezoid, "An `(n,k)` right trapezoid: the cells with `i - j <= k - 1`.");
partial_array_type!(Pentagon, "An `(n,k,l,m)` pentagon.");

impl LeftTrapezoid {
    pub fn new(n: usize, k: usize, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let region = Region::Left { n, k };
        region.check_rows(&rows)?;
        Ok(LeftTrapezoid { region, rows })
    }

    pub fn k(&self) -> usize {
        match self.region {
            Region::Left { k, .. } => k,
            _ => unreachable!(),
        }
    }

    /// Column `j` as `(row, value)` from the bottom up.
    pub fn column(&self, j: usize) -> Vec<Entry> {
        (j..=self.n()).map(|i| self.rows[i - 1][j - 1]).collect()
    }
}

impl RightTrapezoid {
    pub fn new(n: usize, k: usize, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let region = Region::Right { n, k };
        region.check_rows(&rows)?;
        Ok(RightTrapezoid { region, rows })
    }

    pub fn k(&self) -> usize {
        match self.region {
            Region::Right { k, .. } => k,
            _ => unreachable!(),
        }
    }
}

impl Pentagon {
    pub fn new(n: usize, k: usize, l: usize, m: usize, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let region = Region::Pentagon { n, k, l, m };
        region.check_rows(&rows)?;
        Ok(Pentagon { region, rows })
    }

    pub fn params(&self) -> (usize, usize, usize, usize) {
        match self.region {
            Region::Pentagon { n, k, l, m } => (n, k, l, m),
            _ => unreachable!(),
        }
    }
}

pub fn cut_left(t: &GTTriangle, k: usize) -> Result<LeftTrapezoid> {
    let region = Region::Left { n: t.n(), k };
    region.validate()?;
    Ok(LeftTrapezoid { region, rows: region.cut(t) })
}

pub fn cut_right(t: &GTTriangle, k: usize) -> Result<RightTrapezoid> {
    let region = Region::Right { n: t.n(), k };
    region.validate()?;
    Ok(RightTrapezoid { region, rows: region.cut(t) })
}

pub fn cut_pentagon(t: &GTTriangle, k: usize, l: usize, m: usize) -> Result<Pentagon> {
    let region = Region::Pentagon { n: t.n(), k, l, m };
    region.validate()?;
    Ok(Pentagon { region, rows: region.cut(t) })
}

/// Which side a trapezoid is cut from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Serialize, Deserialize)]
struct TrapezoidRepr {
    n: usize,
    k: usize,
    side: Side,
    rows: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
struct PentagonRepr {
    n: usize,
    k: usize,
    l: usize,
    m: usize,
    rows: Vec<Vec<Entry>>,
}

fn parse<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

impl LeftTrapezoid {
    pub fn to_json(&self) -> String {
        let repr = TrapezoidRepr { n: self.n(), k: self.k(), side: Side::Left, rows: self.rows.clone() };
        serde_json::to_string(&repr).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: TrapezoidRepr = parse(s)?;
        if r.side != Side::Left {
            return Err(Error::Parse("expected side \"left\"".into()));
        }
        LeftTrapezoid::new(r.n, r.k, r.rows)
    }
}

impl RightTrapezoid {
    pub fn to_json(&self) -> String {
        let repr = TrapezoidRepr { n: self.n(), k: self.k(), side: Side::Right, rows: self.rows.clone() };
        serde_json::to_string(&repr).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: TrapezoidRepr = parse(s)?;
        if r.side != Side::Right {
            return Err(Error::Parse("expected side \"right\"".into()));
        }
        RightTrapezoid::new(r.n, r.k, r.rows)
    }
}

impl Pentagon {
    pub fn to_json(&self) -> String {
        let (n, k, l, m) = self.params();
        let repr = PentagonRepr { n, k, l, m, rows: self.rows.clone() };
        serde_json::to_string(&repr).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: PentagonRepr = parse(s)?;
        Pentagon::new(r.n, r.k, r.l, r.m, r.rows)
    }
}

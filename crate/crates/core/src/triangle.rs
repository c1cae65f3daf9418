//! Gelfand-Tsetlin triangles.
//!
//! A triangle of size `n` holds entries `X[i][j]` for `n >= i >= j >= 1`,
//! subject to the interlacing condition `X[i+1][j] <= X[i][j] <= X[i+1][j+1]`.
//! Rows are stored bottom-up: row 1 is the single bottom entry, row `n` is
//! the top row. All indices in the public API are 1-based.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Bound, Error, Result};

/// Value type of a triangle entry.
pub type Entry = i64;

/// A cell `(i, j)` of a triangular array, 1-based, `i >= j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub const fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Offset of cell `(i, j)` in the flat bottom-up storage.
#[inline]
pub(crate) const fn flat_index(i: usize, j: usize) -> usize {
    i * (i - 1) / 2 + j - 1
}

/// Number of cells in a triangle of size `n`.
#[inline]
pub(crate) const fn cell_count(n: usize) -> usize {
    n * (n + 1) / 2
}

/// A validated Gelfand-Tsetlin triangle.
///
/// Values are immutable once constructed. Ordering is lexicographic on the
/// concatenated rows (bottom-up), which is the enumeration order used
/// throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GTTriangle {
    n: usize,
    data: Vec<Entry>,
}

impl GTTriangle {
    /// Validates `rows` (bottom-up, row `i` holding `i` entries) as a
    /// Gelfand-Tsetlin triangle of size `n`.
    pub fn new(n: usize, rows: &[Vec<Entry>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("size must be positive".into()));
        }
        if rows.len() != n {
            return Err(Error::Shape(format!("expected {n} rows, got {}", rows.len())));
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != idx + 1 {
                return Err(Error::Shape(format!("row {} must have {} entries, got {}", idx + 1, idx + 1, row.len())));
            }
        }
        let data: Vec<Entry> = rows.iter().flatten().copied().collect();
        Self::from_flat(n, data)
    }

    /// Validates a flat bottom-up entry vector.
    pub fn from_flat(n: usize, data: Vec<Entry>) -> Result<Self> {
        if n == 0 || data.len() != cell_count(n) {
            return Err(Error::Shape(format!("size {n} needs {} entries, got {}", cell_count(n), data.len())));
        }
        let t = GTTriangle { n, data };
        t.check()?;
        Ok(t)
    }

    /// Builds a triangle from a cell function, validating the result.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Entry) -> Result<Self> {
        let mut data = Vec::with_capacity(cell_count(n));
        for i in 1..=n {
            for j in 1..=i {
                data.push(f(i, j));
            }
        }
        Self::from_flat(n, data)
    }

    /// Wraps a flat vector already known to be a valid triangle.
    pub(crate) fn from_flat_unchecked(n: usize, data: Vec<Entry>) -> Self {
        debug_assert_eq!(data.len(), cell_count(n));
        debug_assert!(check_flat(n, &data).is_ok(), "invalid triangle {data:?}");
        GTTriangle { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `X[i][j]`, or an index error outside `n >= i >= j >= 1`.
    pub fn entry(&self, i: usize, j: usize) -> Result<Entry> {
        if j == 0 || j > i || i > self.n {
            return Err(Error::Index { n: self.n, i, j });
        }
        Ok(self.data[flat_index(i, j)])
    }

    /// Unchecked 1-based access. Panics outside the triangle.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Entry {
        debug_assert!(j >= 1 && j <= i && i <= self.n);
        self.data[flat_index(i, j)]
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[Entry] {
        let start = flat_index(i, 1);
        &self.data[start..start + i]
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> impl Iterator<Item = &[Entry]> + '_ {
        (1..=self.n).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Entry>> {
        self.rows().map(<[Entry]>::to_vec).collect()
    }

    /// Entries in bottom-up, left-to-right order.
    pub fn as_flat(&self) -> &[Entry] {
        &self.data
    }

    pub(crate) fn into_flat(self) -> Vec<Entry> {
        self.data
    }

    /// Entrywise comparison `self <= other`.
    pub fn leq(&self, other: &GTTriangle) -> Result<bool> {
        self.same_size(other)?;
        Ok(self.data.iter().zip(&other.data).all(|(a, b)| a <= b))
    }

    /// Entrywise maximum, the lattice supremum.
    pub fn join(&self, other: &GTTriangle) -> Result<GTTriangle> {
        self.zip_with(other, Entry::max)
    }

    /// Entrywise minimum, the lattice infimum.
    pub fn meet(&self, other: &GTTriangle) -> Result<GTTriangle> {
        self.zip_with(other, Entry::min)
    }

    fn zip_with(&self, other: &GTTriangle, f: fn(Entry, Entry) -> Entry) -> Result<GTTriangle> {
        self.same_size(other)?;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect();
        GTTriangle::from_flat(self.n, data)
    }

    fn same_size(&self, other: &GTTriangle) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn check(&self) -> Result<()> {
        check_flat(self.n, &self.data)
    }

    /// Canonical JSON form: `{"n":..,"rows":[[..],..]}`, no whitespace.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangle serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Validates flat storage: domain first, then interlacing in increasing
/// `(i, j)` order, lower bound before upper bound.
pub(crate) fn check_flat(n: usize, data: &[Entry]) -> Result<()> {
    for i in 1..=n {
        for j in 1..=i {
            let v = data[flat_index(i, j)];
            if v < 1 {
                return Err(Error::Domain { i, j, value: v });
            }
        }
    }
    first_order_violation(n, data).map_or(Ok(()), Err)
}

pub(crate) fn first_order_violation(n: usize, data: &[Entry]) -> Option<Error> {
    for i in 1..n {
        for j in 1..=i {
            let v = data[flat_index(i, j)];
            if data[flat_index(i + 1, j)] > v {
                return Some(Error::Order { i, j, bound: Bound::Lower });
            }
            if v > data[flat_index(i + 1, j + 1)] {
                return Some(Error::Order { i, j, bound: Bound::Upper });
            }
        }
    }
    None
}

pub(crate) fn is_gt_flat(n: usize, data: &[Entry]) -> bool {
    data.iter().all(|&v| v >= 1) && first_order_violation(n, data).is_none()
}

/// Validating constructor.
pub fn make_triangle(n: usize, rows: &[Vec<Entry>]) -> Result<GTTriangle> {
    GTTriangle::new(n, rows)
}

impl PartialOrd for GTTriangle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GTTriangle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.data.cmp(&other.data))
    }
}

impl fmt::Debug for GTTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GTTriangle{:?}", self.to_rows())
    }
}

/// Prints the triangle top row first, centred like the usual picture.
impl fmt::Display for GTTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for i in (1..=self.n).rev() {
            let indent = (self.n - i) * (width + 1) / 2;
            write!(f, "{:indent$}", "")?;
            let row: Vec<String> = self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TriangleRepr {
    n: usize,
    rows: Vec<Vec<Entry>>,
}

impl Serialize for GTTriangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TriangleRepr { n: self.n, rows: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GTTriangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TriangleRepr::deserialize(d)?;
        GTTriangle::new(repr.n, &repr.rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_gog() -> GTTriangle {
        make_triangle(5, &[vec![3], vec![2, 4], vec![1, 4, 5], vec![1, 3, 4, 5], vec![1, 2, 3, 4, 5]]).unwrap()
    }

    #[test]
    fn single_entry() {
        let t = make_triangle(1, &[vec![3]]).unwrap();
        assert_eq!(t.get(1, 1), 3);
    }

    #[test]
    fn entries_of_example() {
        let t = sample_gog();
        assert_eq!(t.entry(1, 1).unwrap(), 3);
        assert_eq!(t.entry(5, 2).unwrap(), 2);
        assert_eq!(t.entry(0, 1), Err(Error::Index { n: 5, i: 0, j: 1 }));
        assert!(t.entry(3, 4).is_err());
        assert!(t.entry(6, 1).is_err());
    }

    #[test]
    fn order_error_names_first_violation() {
        let err = make_triangle(2, &[vec![3], vec![1, 2]]).unwrap_err();
        assert_eq!(err, Error::Order { i: 1, j: 1, bound: Bound::Upper });
        let err = make_triangle(2, &[vec![1], vec![2, 3]]).unwrap_err();
        assert_eq!(err, Error::Order { i: 1, j: 1, bound: Bound::Lower });
    }

    #[test]
    fn shape_and_domain_errors() {
        assert!(matches!(make_triangle(2, &[vec![1], vec![1]]), Err(Error::Shape(_))));
        assert!(matches!(make_triangle(2, &[vec![1]]), Err(Error::Shape(_))));
        assert!(matches!(make_triangle(0, &[]), Err(Error::Shape(_))));
        assert_eq!(make_triangle(2, &[vec![0], vec![0, 1]]).unwrap_err(), Error::Domain { i: 1, j: 1, value: 0 });
    }

    #[test]
    fn lattice_operations() {
        let a = make_triangle(3, &[vec![1], vec![1, 2], vec![1, 2, 3]]).unwrap();
        let b = make_triangle(3, &[vec![2], vec![1, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(a.join(&b).unwrap(), b);
        assert_eq!(a.join(&a).unwrap(), a);
        let m = a.meet(&b).unwrap();
        assert!(m.leq(&a).unwrap() && m.leq(&b).unwrap());

        let ones = GTTriangle::from_fn(3, |_, _| 1).unwrap();
        assert!(ones.leq(&b).unwrap());

        let sample = sample_gog();
        let shifted = GTTriangle::from_fn(5, |_, j| j as Entry).unwrap();
        assert!(!sample.leq(&shifted).unwrap());
        assert_eq!(sample.leq(&a), Err(Error::SizeMismatch { left: 5, right: 3 }));
    }

    #[test]
    fn canonical_json() {
        let t = sample_gog();
        let json = t.to_json();
        assert_eq!(json, r#"{"n":5,"rows":[[3],[2,4],[1,4,5],[1,3,4,5],[1,2,3,4,5]]}"#);
        assert_eq!(GTTriangle::from_json(&json).unwrap(), t);
        assert!(GTTriangle::from_json(r#"{"n":2,"rows":[[3],[1,2]]}"#).is_err());
    }
}

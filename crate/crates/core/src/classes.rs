//! Gog, Magog and GOGAm families: membership, reflection and canonical
//! (minimal) completions of trapezoids and pentagons.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schutzenberger::schutzenberger_in_place;
use crate::shapes::{LeftTrapezoid, PartialArray, Pentagon, RightTrapezoid};
use crate::triangle::{cell_count, check_flat, flat_index, Cell, Entry, GTTriangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gog,
    Magog,
    Gogam,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Gog, Family::Magog, Family::Gogam];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gog => "Gog",
            Family::Magog => "Magog",
            Family::Gogam => "GOGAm",
        }
    }

    pub fn contains(self, t: &GTTriangle) -> bool {
        match self {
            Family::Gog => is_gog(t),
            Family::Magog => is_magog(t),
            Family::Gogam => is_gogam(t),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gog" => Ok(Family::Gog),
            "magog" => Ok(Family::Magog),
            "gogam" => Ok(Family::Gogam),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Strictly increasing rows and top row `1, 2, ..., n`.
pub fn is_gog(t: &GTTriangle) -> bool {
    is_gog_flat(t.n(), t.as_flat())
}

pub(crate) fn is_gog_flat(n: usize, data: &[Entry]) -> bool {
    (1..=n).all(|j| data[flat_index(n, j)] == j as Entry)
        && (2..n).all(|i| (1..i).all(|j| data[flat_index(i, j)] < data[flat_index(i, j + 1)]))
}

/// Diagonal heads bounded: `X[j][j] <= j`.
pub fn is_magog(t: &GTTriangle) -> bool {
    is_magog_flat(t.n(), t.as_flat())
}

pub(crate) fn is_magog_flat(n: usize, data: &[Entry]) -> bool {
    (1..=n).all(|j| data[flat_index(j, j)] <= j as Entry)
}

/// GOGAm by definition: the Schützenberger image is Magog.
pub fn is_gogam(t: &GTTriangle) -> bool {
    let mut data = t.as_flat().to_vec();
    schutzenberger_in_place(t.n(), &mut data);
    is_magog_flat(t.n(), &data)
}

/// GOGAm by the explicit inequality family.
///
/// For every `k` and every `n = j_0 > j_1 > ... > j_{n-k} >= 1`:
/// `sum_{i < n-k} (X[j_i+i][j_i] - X[j_{i+1}+i][j_{i+1}]) + X[j_{n-k}+n-k][j_{n-k}] <= k`.
/// The empty sequence (`k = n`) is the bound `X[n][n] <= n`. Sequences are
/// enumerated as subsets of `{1, .., n-1}`, so the cost is `2^(n-1)` sums.
pub fn is_gogam_by_inequality(t: &GTTriangle) -> bool {
    first_gogam_violation(t).is_none()
}

/// The first violated sequence `(k, [j_0, .., j_{n-k}])`, if any.
pub fn first_gogam_violation(t: &GTTriangle) -> Option<(usize, Vec<usize>)> {
    first_gogam_violation_flat(t.n(), t.as_flat())
}

/// The inequality family on a bottom-up array that need not be a GT
/// triangle.
pub fn satisfies_gogam_inequalities(n: usize, data: &[Entry]) -> bool {
    data.len() == cell_count(n) && first_gogam_violation_flat(n, data).is_none()
}

fn first_gogam_violation_flat(n: usize, data: &[Entry]) -> Option<(usize, Vec<usize>)> {
    if n == 0 {
        return None;
    }
    let x = |i: usize, j: usize| data[flat_index(i, j)];
    let mut seq = Vec::with_capacity(n);
    for mask in 0u64..(1u64 << (n - 1)) {
        seq.clear();
        seq.push(n);
        seq.extend((1..n).rev().filter(|&j| mask & (1 << (j - 1)) != 0));
        let len = seq.len() - 1;
        let k = n - len;
        let mut sum: Entry = (0..len).map(|i| x(seq[i] + i, seq[i]) - x(seq[i + 1] + i, seq[i + 1])).sum();
        sum += x(seq[len] + len, seq[len]);
        if sum > k as Entry {
            return Some((k, seq.clone()));
        }
    }
    None
}

/// Vertical reflection of a Gog triangle: `X'[i][j] = n + 1 - X[i][i+1-j]`.
pub fn reflect(t: &GTTriangle) -> Result<GTTriangle> {
    if !is_gog(t) {
        return Err(Error::NotGog);
    }
    let n = t.n();
    let np1 = n as Entry + 1;
    let mut data = Vec::with_capacity(cell_count(n));
    for i in 1..=n {
        for j in 1..=i {
            data.push(np1 - t.get(i, i + 1 - j));
        }
    }
    Ok(GTTriangle::from_flat_unchecked(n, data))
}

/// Constraint set used by [`minimal_extension`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionRules {
    /// Plain Gelfand-Tsetlin triangles with positive entries.
    GelfandTsetlin,
    /// Gog triangles: strict rows and top row `1..n`.
    Gog,
}

/// The entrywise smallest triangle obeying `rules` that agrees with `fixed`.
///
/// All constraints are of the form `X[a] >= X[b] + c`, so the least solution
/// of the lower-bound system is computed by propagation; the instance is
/// feasible iff that solution respects the fixed values and upper bounds.
/// Dependencies strictly decrease `2j - i`, so propagation terminates.
pub fn minimal_extension(n: usize, fixed: &[(Cell, Entry)], rules: ExtensionRules) -> Result<GTTriangle> {
    let family = match rules {
        ExtensionRules::GelfandTsetlin => "Gelfand-Tsetlin",
        ExtensionRules::Gog => "Gog",
    };
    let fail = |reason: String| Error::NotExtensible { family, reason };
    let mut lower = vec![1 as Entry; cell_count(n)];
    let mut pinned: Vec<Option<Entry>> = vec![None; cell_count(n)];
    for &(c, v) in fixed {
        if c.j == 0 || c.j > c.i || c.i > n {
            return Err(Error::Index { n, i: c.i, j: c.j });
        }
        pinned[flat_index(c.i, c.j)] = Some(v);
    }
    if rules == ExtensionRules::Gog {
        for j in 1..=n {
            let idx = flat_index(n, j);
            match pinned[idx] {
                Some(v) if v != j as Entry => return Err(fail(format!("top-row cell ({n},{j}) is {v}, must be {j}"))),
                _ => pinned[idx] = Some(j as Entry),
            }
        }
        for i in 1..=n {
            for j in 1..=i {
                lower[flat_index(i, j)] = j as Entry;
            }
        }
    }
    for (idx, p) in pinned.iter().enumerate() {
        if let Some(v) = *p {
            lower[idx] = lower[idx].max(v);
        }
    }
    // One pass in increasing 2j - i reaches the fixpoint; loop for clarity.
    loop {
        let mut changed = false;
        for i in 1..=n {
            for j in 1..=i {
                let mut lb = lower[flat_index(i, j)];
                if i < n {
                    lb = lb.max(lower[flat_index(i + 1, j)]);
                }
                if i > 1 && j > 1 {
                    lb = lb.max(lower[flat_index(i - 1, j - 1)]);
                }
                if rules == ExtensionRules::Gog && j > 1 {
                    lb = lb.max(lower[flat_index(i, j - 1)] + 1);
                }
                if lb != lower[flat_index(i, j)] {
                    lower[flat_index(i, j)] = lb;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for i in 1..=n {
        for j in 1..=i {
            let idx = flat_index(i, j);
            if let Some(v) = pinned[idx] {
                if lower[idx] != v {
                    return Err(fail(format!("cell ({i},{j}) is {v} but is forced to be >= {}", lower[idx])));
                }
            }
            if rules == ExtensionRules::Gog && lower[idx] > (n - i + j) as Entry {
                return Err(fail(format!("cell ({i},{j}) is forced above its diagonal bound {}", n - i + j)));
            }
        }
    }
    check_flat(n, &lower).map_err(|e| fail(e.to_string()))?;
    Ok(GTTriangle::from_flat_unchecked(n, lower))
}

/// Left Gog membership checked directly on the stored cells: interlacing,
/// strictly increasing rows and `X[i][j] <= n - i + j`.
pub fn is_left_gog(tr: &LeftTrapezoid) -> bool {
    left_gog_violation(tr).is_none()
}

fn left_gog_violation(tr: &LeftTrapezoid) -> Option<String> {
    let n = tr.n();
    if !tr.is_gt_consistent() {
        return Some("stored cells are not interlacing".into());
    }
    for (c, v) in tr.assignments() {
        if let Some(left) = tr.get(c.i, c.j.wrapping_sub(1)) {
            if left >= v {
                return Some(format!("row {} is not strictly increasing at column {}", c.i, c.j));
            }
        }
        if v > (n - c.i + c.j) as Entry {
            return Some(format!("cell {c} exceeds its diagonal bound {}", n - c.i + c.j));
        }
    }
    None
}

fn filled(n: usize, mut cell: impl FnMut(usize, usize) -> Entry) -> Vec<Entry> {
    let mut data = Vec::with_capacity(cell_count(n));
    for i in 1..=n {
        for j in 1..=i {
            data.push(cell(i, j));
        }
    }
    data
}

fn finish(
    family: &'static str,
    n: usize,
    data: Vec<Entry>,
    member: fn(usize, &[Entry]) -> Option<String>,
) -> Result<GTTriangle> {
    let fail = |reason: String| Error::NotExtensible { family, reason };
    check_flat(n, &data).map_err(|e| fail(e.to_string()))?;
    if let Some(reason) = member(n, &data) {
        return Err(fail(reason));
    }
    Ok(GTTriangle::from_flat_unchecked(n, data))
}

fn gog_reason(n: usize, data: &[Entry]) -> Option<String> {
    for j in 1..=n {
        if data[flat_index(n, j)] != j as Entry {
            return Some(format!("top row differs from 1..{n} at column {j}"));
        }
    }
    for i in 2..n {
        for j in 1..i {
            if data[flat_index(i, j)] >= data[flat_index(i, j + 1)] {
                return Some(format!("row {i} is not strictly increasing at column {}", j + 1));
            }
        }
    }
    None
}

fn magog_reason(n: usize, data: &[Entry]) -> Option<String> {
    (1..=n).find(|&j| data[flat_index(j, j)] > j as Entry).map(|j| format!("diagonal head ({j},{j}) exceeds {j}"))
}

fn gogam_reason(n: usize, data: &[Entry]) -> Option<String> {
    let mut image = data.to_vec();
    schutzenberger_in_place(n, &mut image);
    magog_reason(n, &image).map(|r| format!("Schützenberger image is not Magog: {r}"))
}

/// Minimal Gog completion of a right trapezoid: `X[i][j] = j` for `i >= j + k`.
pub fn complete_gog_right(tr: &RightTrapezoid) -> Result<GTTriangle> {
    let n = tr.n();
    let data = filled(n, |i, j| tr.get(i, j).unwrap_or(j as Entry));
    finish("Gog", n, data, gog_reason)
}

/// Minimal Gog completion of a left trapezoid: for `j > k`,
/// `X[i][j] = max_{0 <= t <= j-k} (X[i-t][k] + j - k - t)`.
pub fn complete_gog_left(tr: &LeftTrapezoid) -> Result<GTTriangle> {
    if let Some(reason) = left_gog_violation(tr) {
        return Err(Error::NotExtensible { family: "Gog", reason });
    }
    let n = tr.n();
    let k = tr.k();
    let data = filled(n, |i, j| {
        tr.get(i, j).unwrap_or_else(|| {
            (0..=j - k)
                .map(|t| tr.get(i - t, k).expect("column k cell") + (j - k - t) as Entry)
                .max()
                .expect("non-empty range")
        })
    });
    finish("Gog", n, data, gog_reason)
}

/// Minimal Magog completion of a right trapezoid: 1s to the north-west.
pub fn complete_magog_right(tr: &RightTrapezoid) -> Result<GTTriangle> {
    let n = tr.n();
    let data = filled(n, |i, j| tr.get(i, j).unwrap_or(1));
    finish("Magog", n, data, magog_reason)
}

/// Minimal GOGAm completion of a right trapezoid: 1s for `i >= j + k`.
pub fn complete_gogam_right(tr: &RightTrapezoid) -> Result<GTTriangle> {
    let n = tr.n();
    let data = filled(n, |i, j| tr.get(i, j).unwrap_or(1));
    finish("GOGAm", n, data, gogam_reason)
}

/// Minimal GOGAm completion of a left trapezoid: added entries are constant
/// along SW-NE diagonals, `X[i][j] = X[i-j+k][k]`.
pub fn complete_gogam_left(tr: &LeftTrapezoid) -> Result<GTTriangle> {
    let n = tr.n();
    let k = tr.k();
    let data = filled(n, |i, j| tr.get(i, j).unwrap_or_else(|| tr.get(i - j + k, k).expect("column k cell")));
    finish("GOGAm", n, data, gogam_reason)
}

/// Minimal completion of a pentagon in the given family (Gog or GOGAm).
///
/// Gog pentagons take the least Gog triangle extending them. For GOGAm the
/// least Gelfand-Tsetlin extension is formed and must itself be GOGAm.
pub fn complete_pentagon(family: Family, p: &Pentagon) -> Result<GTTriangle> {
    let n = p.n();
    match family {
        Family::Gog => minimal_extension(n, &p.assignments(), ExtensionRules::Gog),
        Family::Gogam => {
            let t = minimal_extension(n, &p.assignments(), ExtensionRules::GelfandTsetlin)
                .map_err(|e| Error::NotExtensible { family: "GOGAm", reason: e.to_string() })?;
            finish("GOGAm", n, t.into_flat(), gogam_reason)
        }
        Family::Magog => {
            Err(Error::NotExtensible { family: "Magog", reason: "Magog pentagons are not defined".into() })
        }
    }
}

pub fn is_right_gog(tr: &RightTrapezoid) -> bool {
    complete_gog_right(tr).is_ok()
}

pub fn is_right_magog(tr: &RightTrapezoid) -> bool {
    complete_magog_right(tr).is_ok()
}

pub fn is_right_gogam(tr: &RightTrapezoid) -> bool {
    complete_gogam_right(tr).is_ok()
}

pub fn is_left_gogam(tr: &LeftTrapezoid) -> bool {
    complete_gogam_left(tr).is_ok()
}

pub fn is_pentagon_member(family: Family, p: &Pentagon) -> bool {
    complete_pentagon(family, p).is_ok()
}

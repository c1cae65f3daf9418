//! Achievable `(inversions, coinversions)` pairs of Gog triangles.

use std::collections::{BTreeSet, HashSet};

use crate::classes::is_gog_flat;
use crate::error::{Error, Result};
use crate::triangle::{cell_count, Entry, GTTriangle};

use super::{mu, nu};

fn tri(k: usize) -> usize {
    k * (k + 1) / 2
}

/// The corner `(k(k+1)/2, (n-k-1)(n-k)/2)` of the `k`-th piece.
pub fn corner_pair(n: usize, k: usize) -> (usize, usize) {
    (tri(k), tri(n - k - 1))
}

/// Union over `k` of `{(i,j) : i >= k(k+1)/2, j >= (n-k-1)(n-k)/2, i+j <= n(n-1)/2}`.
pub fn diamond_set(n: usize) -> BTreeSet<(usize, usize)> {
    let total = tri(n.saturating_sub(1));
    let mut out = BTreeSet::new();
    for k in 0..n {
        let (i0, j0) = corner_pair(n, k);
        for i in i0..=total {
            for j in j0..=total.saturating_sub(i) {
                out.insert((i, j));
            }
        }
    }
    out
}

pub fn in_diamond(n: usize, pair: (usize, usize)) -> bool {
    let total = tri(n.saturating_sub(1));
    pair.0 + pair.1 <= total
        && (0..n).any(|k| {
            let (i0, j0) = corner_pair(n, k);
            pair.0 >= i0 && pair.1 >= j0
        })
}

/// The unique Gog triangle at the `k`-th corner; its bottom entry is `n-k`.
pub fn corner_triangle(n: usize, k: usize) -> Result<GTTriangle> {
    if n == 0 || k >= n {
        return Err(Error::Range(format!("k={k} must lie in 0..{n}")));
    }
    let (n_, k_) = (n as Entry, k as Entry);
    GTTriangle::from_fn(n, |i, j| {
        let (i, j) = (i as Entry, j as Entry);
        if j <= i - n_ + k_ {
            j
        } else if j > k_ {
            n_ + j - i
        } else {
            n_ - k_ + 2 * j - i - 1
        }
    })
}

/// Best-effort construction of a Gog triangle with `target` as its
/// `(inversions, coinversions)` pair: a depth-first walk from a corner
/// triangle through single-entry `±1` changes that stay Gog and never move
/// either count past the target.
pub fn witness(n: usize, target: (usize, usize)) -> Option<GTTriangle> {
    if !in_diamond(n, target) {
        return None;
    }
    let k = (0..n).find(|&k| {
        let (i0, j0) = corner_pair(n, k);
        target.0 >= i0 && target.1 >= j0
    })?;
    let start = corner_triangle(n, k).ok()?;
    let mut seen: HashSet<Vec<Entry>> = HashSet::new();
    let mut stack = vec![start.as_flat().to_vec()];
    seen.insert(stack[0].clone());
    while let Some(cur) = stack.pop() {
        let t = GTTriangle::from_flat_unchecked(n, cur.clone());
        let here = (mu(&t), nu(&t));
        if here == target {
            return Some(t);
        }
        for idx in 0..cell_count(n) {
            for delta in [-1, 1] {
                let mut next = cur.clone();
                next[idx] += delta;
                if seen.contains(&next) || !crate::triangle::is_gt_flat(n, &next) || !is_gog_flat(n, &next) {
                    continue;
                }
                let cand = GTTriangle::from_flat_unchecked(n, next.clone());
                let pair = (mu(&cand), nu(&cand));
                if pair.0 <= target.0 && pair.1 <= target.1 {
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
    }
    None
}

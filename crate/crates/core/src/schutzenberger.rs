//! The Schützenberger involution on Gelfand-Tsetlin triangles.
//!
//! `s_k` reflects every entry of row `k` inside the interval cut out by its
//! (up to four) neighbours on rows `k+1` and `k-1`. Neighbours that do not
//! exist simply drop out of the `max`/`min`.
//!
//! Composition convention: `omega(j) = s_j ∘ ... ∘ s_1` (so `s_1` acts
//! first) and `S = omega(1) ∘ omega(2) ∘ ... ∘ omega(n-1)` (so `omega(n-1)`
//! acts first). This is the convention under which `S` is checked to be an
//! involution and to carry Magog triangles onto the GOGAm inequality set.

use crate::error::{Error, Result};
use crate::triangle::{flat_index, Entry, GTTriangle};

/// Applies `s_k` in place on flat bottom-up storage. Row `k` depends only on
/// rows `k±1`, so the update can be done entry by entry.
pub(crate) fn s_k_in_place(data: &mut [Entry], k: usize) {
    for j in 1..=k {
        let mut lo = data[flat_index(k + 1, j)];
        if k >= 2 && j >= 2 {
            lo = lo.max(data[flat_index(k - 1, j - 1)]);
        }
        let mut hi = data[flat_index(k + 1, j + 1)];
        if j < k {
            hi = hi.min(data[flat_index(k - 1, j)]);
        }
        let idx = flat_index(k, j);
        data[idx] = lo + hi - data[idx];
    }
}

fn check_k(t: &GTTriangle, k: usize) -> Result<()> {
    if k == 0 || k >= t.n() {
        return Err(Error::Index { n: t.n(), i: k, j: 1 });
    }
    Ok(())
}

/// The elementary involution `s_k`, `1 <= k <= n-1`.
pub fn s_k(t: &GTTriangle, k: usize) -> Result<GTTriangle> {
    check_k(t, k)?;
    let n = t.n();
    let mut data = t.clone().into_flat();
    s_k_in_place(&mut data, k);
    Ok(GTTriangle::from_flat_unchecked(n, data))
}

/// `omega_j = s_j s_{j-1} ... s_1`, with `s_1` applied first.
pub fn omega_j(t: &GTTriangle, j: usize) -> Result<GTTriangle> {
    check_k(t, j)?;
    let n = t.n();
    let mut data = t.clone().into_flat();
    for k in 1..=j {
        s_k_in_place(&mut data, k);
    }
    Ok(GTTriangle::from_flat_unchecked(n, data))
}

pub(crate) fn schutzenberger_in_place(n: usize, data: &mut [Entry]) {
    for j in (1..n).rev() {
        for k in 1..=j {
            s_k_in_place(data, k);
        }
    }
}

/// The Schützenberger involution `S = omega_1 omega_2 ... omega_{n-1}`.
pub fn schutzenberger(t: &GTTriangle) -> GTTriangle {
    let n = t.n();
    let mut data = t.clone().into_flat();
    schutzenberger_in_place(n, &mut data);
    GTTriangle::from_flat_unchecked(n, data)
}

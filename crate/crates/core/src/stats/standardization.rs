//! Projection and the left/right standardizations, which shrink a Gog
//! triangle by one while controlling its inversion and coinversion counts.

use serde::Serialize;

use crate::classes::is_gog;
use crate::error::{Error, Result};
use crate::triangle::{flat_index, GTTriangle};

use super::{mu, nu};

/// Drops the top row.
pub fn projection(t: &GTTriangle) -> Result<GTTriangle> {
    let n = t.n();
    if n < 2 {
        return Err(Error::Shape("projection needs size at least 2".into()));
    }
    let data = t.as_flat()[..flat_index(n, 1)].to_vec();
    Ok(GTTriangle::from_flat_unchecked(n - 1, data))
}

fn prepare(t: &GTTriangle) -> Result<(GTTriangle, usize)> {
    if !is_gog(t) {
        return Err(Error::NotGog);
    }
    let p = projection(t)?;
    let top = p.n();
    let k = (1..=top).take_while(|&j| p.get(top, j) == j as i64).count();
    Ok((p, k))
}

/// Number of fixed points `X[n-1][j] = j` of row `n-1`.
fn row_fixed_points(t: &GTTriangle) -> Result<usize> {
    prepare(t).map(|(_, k)| k)
}

/// For `j <= k`, the run of value `j` at the top of column `j` is kept;
/// every other entry of the projection drops by 1.
pub fn left_standardization(t: &GTTriangle) -> Result<GTTriangle> {
    let (p, k) = prepare(t)?;
    let top = p.n();
    let mut data = p.as_flat().to_vec();
    for j in 1..=top {
        let mut keep_from = top + 1;
        if j <= k {
            while keep_from > j && p.get(keep_from - 1, j) == j as i64 {
                keep_from -= 1;
            }
        }
        for i in j..keep_from {
            data[flat_index(i, j)] -= 1;
        }
    }
    Ok(GTTriangle::from_flat_unchecked(top, data))
}

/// For `j >= k+1`, the SW-NE run of value `j+1` ending at the top row in
/// column `j` drops by 1; the rest of the projection is kept.
pub fn right_standardization(t: &GTTriangle) -> Result<GTTriangle> {
    let (p, k) = prepare(t)?;
    let top = p.n();
    let mut data = p.as_flat().to_vec();
    for j in k + 1..=top {
        let mut l = 0;
        while l < j && p.get(top - l, j - l) == j as i64 + 1 {
            data[flat_index(top - l, j - l)] -= 1;
            l += 1;
        }
    }
    Ok(GTTriangle::from_flat_unchecked(top, data))
}

/// The quantities controlled by the standardizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StandardizationCounts {
    /// Fixed points of row `n-1`.
    pub k: usize,
    pub mu: usize,
    pub nu: usize,
    pub mu_left: usize,
    pub nu_left: usize,
    pub mu_right: usize,
    pub nu_right: usize,
}

impl StandardizationCounts {
    /// `nu(LX) = nu(X) - n + k + 1`.
    pub fn left_coinversions_exact(&self, n: usize) -> bool {
        self.nu_left + n == self.nu + self.k + 1
    }

    pub fn left_inversions_bounded(&self) -> bool {
        self.mu_left <= self.mu
    }

    /// `mu(RX) = mu(X) - k`.
    pub fn right_inversions_exact(&self) -> bool {
        self.mu_right + self.k == self.mu
    }

    pub fn right_coinversions_bounded(&self) -> bool {
        self.nu_right <= self.nu
    }

    pub fn all_hold(&self, n: usize) -> bool {
        self.left_coinversions_exact(n)
            && self.left_inversions_bounded()
            && self.right_inversions_exact()
            && self.right_coinversions_bounded()
    }
}

pub fn standardization_counts(t: &GTTriangle) -> Result<StandardizationCounts> {
    let k = row_fixed_points(t)?;
    let l = left_standardization(t)?;
    let r = right_standardization(t)?;
    Ok(StandardizationCounts {
        k,
        mu: mu(t),
        nu: nu(t),
        mu_left: mu(&l),
        nu_left: nu(&l),
        mu_right: mu(&r),
        nu_right: nu(&r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::reflect;
    use crate::enumeration::enumerate_gog;
    use crate::triangle::make_triangle;

    fn rows_top_down(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().rev().map(|r| r.to_vec()).collect()
    }

    fn figure() -> GTTriangle {
        let rows = rows_top_down(&[&[1, 2, 3, 4, 5, 6], &[1, 2, 3, 5, 6], &[1, 3, 5, 6], &[1, 4, 6], &[3, 5], &[4]]);
        make_triangle(6, &rows).unwrap()
    }

    #[test]
    fn projection_figure() {
        let t = make_triangle(4, &[vec![2], vec![2, 3], vec![1, 2, 3], vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(projection(&t).unwrap().to_rows(), vec![vec![2], vec![2, 3], vec![1, 2, 3]]);
        assert!(projection(&make_triangle(1, &[vec![1]]).unwrap()).is_err());
        let id = GTTriangle::from_fn(5, |_, j| j as i64).unwrap();
        assert_eq!(projection(&id).unwrap(), GTTriangle::from_fn(4, |_, j| j as i64).unwrap());
    }

    #[test]
    fn standardization_figures() {
        let x = figure();
        let l = rows_top_down(&[&[1, 2, 3, 4, 5], &[1, 2, 4, 5], &[1, 3, 5], &[2, 4], &[3]]);
        let r = rows_top_down(&[&[1, 2, 3, 4, 5], &[1, 3, 4, 5], &[1, 4, 5], &[3, 5], &[4]]);
        assert_eq!(left_standardization(&x).unwrap().to_rows(), l);
        assert_eq!(right_standardization(&x).unwrap().to_rows(), r);
        assert_eq!(standardization_counts(&x).unwrap().k, 3);
    }

    #[test]
    fn projection_top_row_has_one_gap() {
        for n in 2..=5 {
            for t in enumerate_gog(n) {
                let p = projection(&t).unwrap();
                let top: Vec<i64> = p.row(n - 1).to_vec();
                let k = top.iter().enumerate().take_while(|(j, &v)| v == *j as i64 + 1).count();
                let expect: Vec<i64> = (1..=k as i64).chain(k as i64 + 2..=n as i64).collect();
                assert_eq!(top, expect);
            }
        }
    }

    #[test]
    fn bounds_hold_and_outputs_are_gog() {
        for n in 2..=5 {
            for t in enumerate_gog(n) {
                let c = standardization_counts(&t).unwrap();
                assert!(c.left_inversions_bounded() && c.right_coinversions_bounded(), "{t:?} {c:?}");
                assert!(c.nu_left + n <= c.nu + c.k + 1 && c.mu_right + c.k <= c.mu, "{t:?} {c:?}");
                assert!(is_gog(&left_standardization(&t).unwrap()));
                assert!(is_gog(&right_standardization(&t).unwrap()));
            }
        }
    }

    #[test]
    fn projection_counts_are_exact() {
        for n in 2..=5 {
            for t in enumerate_gog(n) {
                let c = standardization_counts(&t).unwrap();
                let p = projection(&t).unwrap();
                assert_eq!(nu(&p) + n, c.nu + c.k + 1);
                assert_eq!(mu(&p) + c.k, c.mu);
            }
        }
    }

    #[test]
    fn left_standardization_can_drop_a_coinversion() {
        let t = make_triangle(3, &[vec![2], vec![1, 2], vec![1, 2, 3]]).unwrap();
        let c = standardization_counts(&t).unwrap();
        assert_eq!((c.k, c.nu, c.nu_left), (2, 1, 0));
        assert!(!c.left_coinversions_exact(3));
    }

    #[test]
    fn right_is_conjugate_of_left_by_reflection() {
        for n in 2..=5 {
            for t in enumerate_gog(n) {
                let via = reflect(&left_standardization(&reflect(&t).unwrap()).unwrap()).unwrap();
                assert_eq!(right_standardization(&t).unwrap(), via);
            }
        }
    }

    #[test]
    fn identity_triangle() {
        let n = 5;
        let id = GTTriangle::from_fn(n, |_, j| j as i64).unwrap();
        let c = standardization_counts(&id).unwrap();
        assert_eq!(c.k, n - 1);
        assert_eq!(c.mu_right, n * (n - 1) / 2 - (n - 1));
    }

    #[test]
    fn inversion_free_right_is_a_shifted_projection() {
        let n = 5;
        let top = GTTriangle::from_fn(n, |i, j| (n - i + j) as i64).unwrap();
        let r = right_standardization(&top).unwrap();
        assert_eq!(r, GTTriangle::from_fn(n - 1, |i, j| (n - 1 - i + j) as i64).unwrap());
        assert_eq!(standardization_counts(&top).unwrap().k, 0);
    }
}

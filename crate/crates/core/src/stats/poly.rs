//! Exact bivariate polynomials and the inversion/coinversion generating
//! polynomial `Z(n, x, y) = sum x^nu y^mu` over Gog triangles.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::enumeration::enumerate_gog;
use crate::error::{Error, Result};

use super::{mu, nu};

/// Integer polynomial in `x` and `y`; keys are `(deg_x, deg_y)`, no zero
/// coefficient is ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, dx: u32, dy: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(dx, dy, c.into());
        p
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn add_term(&mut self, dx: u32, dy: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((dx, dy)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    /// Terms with nonzero coefficients, keyed by `(deg_x, deg_y)`.
    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    /// `P(y, x)`.
    pub fn swap_variables(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(x.clone(), a as usize) * num_traits::pow(y.clone(), b as usize))
            .sum()
    }

    /// Terms in graded-lex order: total degree descending, then `x`-degree descending.
    pub fn graded_terms(&self) -> Vec<(u32, u32, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&(a, b), c)| (a, b, c.clone())).collect();
        v.sort_by_key(|p| std::cmp::Reverse((p.0 + p.1, p.0)));
        v
    }

    fn lex_leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&k, c)| (k, c))
    }

    /// Exact division; fails unless `divisor` divides `self` in `Z[x, y]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let ((lx, ly), lc) = divisor.lex_leading().ok_or_else(|| Error::Range("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some(((rx, ry), rc)) = rem.lex_leading() {
            if rx < lx || ry < ly || !(rc % lc).is_zero() {
                return Err(Error::Range("polynomial division is not exact".into()));
            }
            let q = Self::monomial(rc / lc, rx - lx, ry - ly);
            rem = &rem - &(&q * divisor);
            quotient = &quotient + &q;
        }
        Ok(quotient)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyRepr::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: PolyRepr = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut p = Self::zero();
        for t in r.terms {
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
            p.add_term(t.x, t.y, c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    x: u32,
    y: u32,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl From<&BivariatePolynomial> for PolyRepr {
    fn from(p: &BivariatePolynomial) -> Self {
        PolyRepr { terms: p.graded_terms().into_iter().map(|(x, y, c)| TermRepr { x, y, c: c.to_string() }).collect() }
    }
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr::from(self).serialize(s)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &rhs.terms {
                out.add_term(a + p, b + q, c * d);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (a, b, c)) in self.graded_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let mut body = String::new();
            for (var, deg) in [("x", a), ("y", b)] {
                match deg {
                    0 => {}
                    1 => body.push_str(var),
                    d => body.push_str(&format!("{var}^{d}")),
                }
            }
            if body.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{mag}{body}")?;
            }
        }
        Ok(())
    }
}

/// `C(m, r)`, zero outside `0 <= r <= m`, with `C(-1, 0) = 1`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    if m < 0 {
        return if r == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if r > m {
        return BigInt::zero();
    }
    let r = r.min(m - r);
    let mut acc = BigInt::one();
    for t in 0..r {
        acc = acc * (m - t) / (t + 1);
    }
    acc
}

/// Entry `(i, j)`, `0 <= i, j < n`:
/// `-y^i [i = j+1] + sum_{k=0}^{min(i, j+1)} C(i-1, i-k) C(j+1, k) x^k`.
pub fn z_matrix(n: usize) -> Vec<Vec<BivariatePolynomial>> {
    (0..n as i64)
        .map(|i| {
            (0..n as i64)
                .map(|j| {
                    let mut p = BivariatePolynomial::zero();
                    for k in 0..=i.min(j + 1) {
                        p.add_term(k as u32, 0, binomial(i - 1, i - k) * binomial(j + 1, k));
                    }
                    if i == j + 1 {
                        p.add_term(0, i as u32, -BigInt::one());
                    }
                    p
                })
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) elimination with exact polynomial division.
fn bareiss(mut m: Vec<Vec<BivariatePolynomial>>) -> BivariatePolynomial {
    let n = m.len();
    if n == 0 {
        return BivariatePolynomial::one();
    }
    let mut negate = false;
    let mut prev = BivariatePolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BivariatePolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Laplace expansion along the first row; exponential, for cross-checks.
fn cofactor(m: &[Vec<BivariatePolynomial>]) -> BivariatePolynomial {
    let n = m.len();
    if n == 0 {
        return BivariatePolynomial::one();
    }
    let mut acc = BivariatePolynomial::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BivariatePolynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &cofactor(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

pub fn z_determinant(n: usize) -> BivariatePolynomial {
    bareiss(z_matrix(n))
}

pub fn z_cofactor(n: usize) -> BivariatePolynomial {
    cofactor(&z_matrix(n))
}

/// `sum x^nu(X) y^mu(X)` over size-`n` Gog triangles, by enumeration.
pub fn z_brute(n: usize) -> BivariatePolynomial {
    let mut counts: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    for t in enumerate_gog(n) {
        *counts.entry((nu(&t) as u32, mu(&t) as u32)).or_default() += 1;
    }
    let mut p = BivariatePolynomial::zero();
    for ((a, b), c) in counts {
        p.add_term(a, b, BigInt::from(c));
    }
    p
}

//! Alternating sign matrices and their Gog triangles.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::classes::is_gog;
use crate::error::{Error, Result};
use crate::triangle::{cell_count, Entry, GTTriangle};

/// A square matrix over `{-1, 0, 1}` whose nonzero entries alternate in sign
/// along every row and column, starting and ending with `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Asm {
    n: usize,
    cells: Vec<Vec<i8>>,
}

fn alternates(line: impl Iterator<Item = i8>) -> bool {
    let mut expect = 1;
    for v in line.filter(|&v| v != 0) {
        if v != expect {
            return false;
        }
        expect = -expect;
    }
    expect == -1
}

impl Asm {
    /// Rows are given top row first.
    pub fn new(cells: Vec<Vec<i8>>) -> Result<Self> {
        let n = cells.len();
        if n == 0 {
            return Err(Error::Shape("matrix must be non-empty".into()));
        }
        if let Some(r) = cells.iter().position(|row| row.len() != n) {
            return Err(Error::Shape(format!("row {} has {} entries, expected {n}", r + 1, cells[r].len())));
        }
        for (r, row) in cells.iter().enumerate() {
            if !alternates(row.iter().copied()) {
                return Err(Error::Shape(format!("row {} does not alternate in sign", r + 1)));
            }
        }
        for c in 0..n {
            if !alternates(cells.iter().map(|row| row[c])) {
                return Err(Error::Shape(format!("column {} does not alternate in sign", c + 1)));
            }
        }
        Ok(Asm { n, cells })
    }

    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut cells = vec![vec![0; n]; n];
        for (r, &c) in perm.iter().enumerate() {
            if c >= n {
                return Err(Error::Range(format!("column {c} outside 0..{n}")));
            }
            cells[r][c] = 1;
        }
        Asm::new(cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Vec<i8>] {
        &self.cells
    }

    /// `M[r][c]` with 1-based indices, top row first.
    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.cells[r - 1][c - 1]
    }

    /// Reflection through the vertical axis.
    pub fn mirror(&self) -> Asm {
        let cells = self.cells.iter().map(|row| row.iter().rev().copied().collect()).collect();
        Asm { n: self.n, cells }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            cells: Vec<Vec<i8>>,
        }
        let r: Repr = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let m = Asm::new(r.cells)?;
        if m.n != r.n {
            return Err(Error::SizeMismatch { left: r.n, right: m.n });
        }
        Ok(m)
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.cells {
            let line: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Row `i` of the triangle lists the columns holding a 1 in row `n - i + 1`
/// of the matrix of partial column sums taken from the bottom.
pub fn asm_to_gog(m: &Asm) -> GTTriangle {
    let n = m.n;
    let mut summed = vec![vec![0i8; n]; n];
    for r in (0..n).rev() {
        let below = if r + 1 < n { summed[r + 1].clone() } else { vec![0; n] };
        for (c, s) in summed[r].iter_mut().enumerate() {
            *s = m.cells[r][c] + below[c];
        }
    }
    let mut data = Vec::with_capacity(cell_count(n));
    for i in 1..=n {
        let row = &summed[n - i];
        data.extend((0..n).filter(|&c| row[c] == 1).map(|c| c as Entry + 1));
    }
    GTTriangle::from_flat_unchecked(n, data)
}

pub fn gog_to_asm(t: &GTTriangle) -> Result<Asm> {
    if !is_gog(t) {
        return Err(Error::NotGog);
    }
    let n = t.n();
    let indicator = |r: usize| -> Vec<i8> {
        let mut v = vec![0i8; n];
        if r < n {
            for &x in t.row(n - r) {
                v[x as usize - 1] = 1;
            }
        }
        v
    };
    let cells = (0..n)
        .map(|r| {
            let (above, below) = (indicator(r), indicator(r + 1));
            above.iter().zip(&below).map(|(a, b)| a - b).collect()
        })
        .collect();
    Ok(Asm { n, cells })
}

/// Every ASM of size `n`, row by row: partial column sums stay in `{0, 1}`
/// and every row alternates. Rows are generated lexicographically.
pub fn enumerate_asms(n: usize) -> Vec<Asm> {
    fn rows(n: usize, sums: &[i8], c: usize, prefix: &mut Vec<i8>, running: i8, out: &mut Vec<Vec<i8>>) {
        if c == n {
            if running == 1 {
                out.push(prefix.clone());
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            let (r, s) = (running + v, sums[c] + v);
            if (0..=1).contains(&r) && (0..=1).contains(&s) {
                prefix.push(v);
                rows(n, sums, c + 1, prefix, r, out);
                prefix.pop();
            }
        }
    }
    fn build(n: usize, sums: &mut Vec<i8>, acc: &mut Vec<Vec<i8>>, out: &mut Vec<Asm>) {
        if acc.len() == n {
            if sums.iter().all(|&s| s == 1) {
                out.push(Asm { n, cells: acc.clone() });
            }
            return;
        }
        let mut candidates = Vec::new();
        rows(n, sums, 0, &mut Vec::with_capacity(n), 0, &mut candidates);
        for row in candidates {
            for (s, v) in sums.iter_mut().zip(&row) {
                *s += v;
            }
            acc.push(row);
            build(n, sums, acc, out);
            let row = acc.pop().expect("pushed above");
            for (s, v) in sums.iter_mut().zip(&row) {
                *s -= v;
            }
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        build(n, &mut vec![0; n], &mut Vec::new(), &mut out);
    }
    out
}

pub fn count_minus_ones(m: &Asm) -> usize {
    m.cells.iter().flatten().filter(|&&v| v == -1).count()
}

fn factorial(k: u64) -> BigUint {
    (2..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `prod_{j=0}^{n-1} (3j+1)! / (n+j)!`, the number of size-`n` ASMs.
pub fn a_n(n: usize) -> BigUint {
    let n = n as u64;
    let num = (0..n).fold(BigUint::one(), |acc, j| acc * factorial(3 * j + 1));
    let den = (0..n).fold(BigUint::one(), |acc, j| acc * factorial(n + j));
    let (q, r) = (&num / &den, &num % &den);
    debug_assert!(r.is_zero());
    q
}

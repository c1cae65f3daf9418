//! Inversions, the standard procedure, and the explicit Gog to GOGAm maps on
//! `(n,1)` and `(n,2)` left trapezoids and `(n,3,3,3)` pentagons.

use crate::classes::{is_gog, is_left_gog, is_left_gogam, satisfies_gogam_inequalities};
use crate::error::{Error, Result};
use crate::shapes::{LeftTrapezoid, PartialArray, Pentagon, Region};
use crate::triangle::{flat_index, is_gt_flat, Cell, Entry, GTTriangle};

/// Inversion cells `(i,j)`, `X[i][j] = X[i+1][j]`, in processing order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InversionList(Vec<Cell>);

impl InversionList {
    pub fn cells(&self) -> &[Cell] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.0.contains(&c)
    }
}

/// Processing order: NW-SE diagonals `j = n-1, ..., 1`, each from its NW
/// end (`i = n-1`) down to its SE end (`i = j`).
fn scan_order(n: usize) -> impl DoubleEndedIterator<Item = Cell> + Clone {
    (1..n).rev().flat_map(move |j| (j..n).rev().map(move |i| Cell::new(i, j)))
}

fn is_inversion(n: usize, data: &[Entry], c: Cell) -> bool {
    c.i < n && data[flat_index(c.i, c.j)] == data[flat_index(c.i + 1, c.j)]
}

pub fn inversions(t: &GTTriangle) -> InversionList {
    let n = t.n();
    InversionList(scan_order(n).filter(|&c| is_inversion(n, t.as_flat(), c)).collect())
}

/// Coinversion cells `(i,j)`, `X[i][j] = X[i+1][j+1]`, bottom-up.
pub fn coinversions(t: &GTTriangle) -> Vec<Cell> {
    let n = t.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |j| Cell::new(i, j)))
        .filter(|c| t.get(c.i, c.j) == t.get(c.i + 1, c.j + 1))
        .collect()
}

/// Cells `(k+p, l+p)`, `1 <= p <= n-k`, covered by the inversion `(k,l)`.
pub fn covered_cells(inv: Cell, n: usize) -> Result<Vec<Cell>> {
    if inv.j == 0 || inv.j > inv.i || inv.i >= n {
        return Err(Error::Index { n, i: inv.i, j: inv.j });
    }
    Ok((1..=n - inv.i).map(|p| Cell::new(inv.i + p, inv.j + p)).collect())
}

fn shift_covered(n: usize, data: &mut [Entry], inv: Cell, delta: Entry) {
    for p in 1..=n - inv.i {
        data[flat_index(inv.i + p, inv.j + p)] += delta;
    }
}

/// Result of the standard procedure. The entries always satisfy the GOGAm
/// inequalities but form a GT triangle only in some cases, always including
/// the admissible ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardOutput {
    n: usize,
    entries: Vec<Entry>,
    admissible: bool,
}

impl StandardOutput {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bottom-up flat entries.
    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn is_admissible(&self) -> bool {
        self.admissible
    }

    pub fn triangle(&self) -> Option<GTTriangle> {
        GTTriangle::from_flat(self.n, self.entries.clone()).ok()
    }

    pub fn satisfies_gogam_inequalities(&self) -> bool {
        satisfies_gogam_inequalities(self.n, &self.entries)
    }
}

/// Subtracts 1 from every cell covered by each inversion of `t`. The output
/// is admissible when every intermediate array is a GT triangle.
pub fn standard_procedure(t: &GTTriangle) -> Result<StandardOutput> {
    if !is_gog(t) {
        return Err(Error::NotGog);
    }
    let n = t.n();
    let mut entries = t.as_flat().to_vec();
    let mut admissible = true;
    for c in inversions(t).0 {
        shift_covered(n, &mut entries, c, -1);
        admissible &= is_gt_flat(n, &entries);
    }
    Ok(StandardOutput { n, entries, admissible })
}

/// Undoes the standard procedure: walking the processing order backwards,
/// each inversion found in the current array adds 1 to its covered cells.
pub fn standard_procedure_inverse(y: &GTTriangle) -> Result<GTTriangle> {
    let n = y.n();
    let mut data = y.as_flat().to_vec();
    for c in scan_order(n).rev() {
        if is_inversion(n, &data, c) {
            shift_covered(n, &mut data, c, 1);
            if !is_gt_flat(n, &data) {
                return Err(Error::NotInvertible(format!("adding back inversion {c} leaves the GT cone")));
            }
        }
    }
    let x = GTTriangle::from_flat_unchecked(n, data);
    if !is_gog(&x) {
        return Err(Error::NotInvertible("result is not a Gog triangle".into()));
    }
    Ok(x)
}

/// The `(n,1)` map is the identity.
pub fn left1_gog_to_gogam(tr: &LeftTrapezoid) -> Result<LeftTrapezoid> {
    if tr.k() != 1 || !is_left_gog(tr) {
        return Err(Error::NotLeftGog);
    }
    Ok(tr.clone())
}

pub fn left1_gogam_to_gog(tr: &LeftTrapezoid) -> Result<LeftTrapezoid> {
    if tr.k() != 1 || !is_left_gogam(tr) {
        return Err(Error::NotLeftGogam);
    }
    Ok(tr.clone())
}

/// Columns 1 and 2 of an `(n,2)` trapezoid, indexed by row (slot 0 unused,
/// and slot 1 unused in column 2).
struct Columns {
    n: usize,
    c1: Vec<Entry>,
    c2: Vec<Entry>,
}

impl Columns {
    fn of(tr: &LeftTrapezoid) -> Self {
        let n = tr.n();
        let mut c1 = vec![0; n + 1];
        let mut c2 = vec![0; n + 1];
        for i in 1..=n {
            c1[i] = tr.get(i, 1).expect("column 1");
            if i >= 2 {
                c2[i] = tr.get(i, 2).expect("column 2");
            }
        }
        Columns { n, c1, c2 }
    }

    fn column_one_inversions(&self) -> Vec<usize> {
        (1..self.n).rev().filter(|&i| self.c1[i] == self.c1[i + 1]).collect()
    }

    fn to_trapezoid(&self) -> LeftTrapezoid {
        let rows = (1..=self.n).map(|i| if i == 1 { vec![self.c1[1]] } else { vec![self.c1[i], self.c2[i]] }).collect();
        LeftTrapezoid::new(self.n, 2, rows).expect("two-column shape")
    }
}

/// Forward `(n,2)` iteration, returning every intermediate trapezoid.
///
/// For each column-1 inversion `i_l` of the input, from the top down: with
/// `m` the highest row whose column-2 value equals the one on row `i_l + 1`,
/// column 1 slides down by one on rows `i_l < i < m` and column 2 drops by 1
/// on rows `i_l < i <= m`.
pub fn left2_steps(tr: &LeftTrapezoid) -> Result<Vec<LeftTrapezoid>> {
    if tr.k() != 2 || !is_left_gog(tr) {
        return Err(Error::NotLeftGog);
    }
    let mut cols = Columns::of(tr);
    let n = cols.n;
    let mut steps = vec![tr.clone()];
    for il in cols.column_one_inversions() {
        let v = cols.c2[il + 1];
        let mut m = il + 1;
        while m < n && cols.c2[m + 1] == v {
            m += 1;
        }
        cols.c1.copy_within(il + 2..m + 1, il + 1);
        for i in il + 1..=m {
            cols.c2[i] -= 1;
        }
        steps.push(cols.to_trapezoid());
    }
    Ok(steps)
}

pub fn left2_gog_to_gogam(tr: &LeftTrapezoid) -> Result<LeftTrapezoid> {
    Ok(left2_steps(tr)?.pop().expect("at least the input"))
}

/// Inverse `(n,2)` iteration. Column-1 inversions `iota_1 > ... > iota_k` of
/// the input are undone from the bottom up: with `p` the lowest row (at
/// least 2) whose column-2 value equals the one on row `iota + 1`, column 1
/// slides up by one on rows `p <= i <= iota` and column 2 gains 1 on rows
/// `p <= i <= iota + 1`.
pub fn left2_gogam_to_gog(tr: &LeftTrapezoid) -> Result<LeftTrapezoid> {
    if tr.k() != 2 || !is_left_gogam(tr) {
        return Err(Error::NotLeftGogam);
    }
    let mut cols = Columns::of(tr);
    for iota in cols.column_one_inversions().into_iter().rev() {
        let v = cols.c2[iota + 1];
        let mut p = iota + 1;
        while p > 2 && cols.c2[p - 1] == v {
            p -= 1;
        }
        cols.c1.copy_within(p - 1..iota, p);
        for i in p..=iota + 1 {
            cols.c2[i] += 1;
        }
    }
    let out = cols.to_trapezoid();
    if !is_left_gog(&out) {
        return Err(Error::NotLeftGogam);
    }
    Ok(out)
}

/// Cells of the `(n,3,3,3)` pentagon, named as in the case table:
/// top row `a d f`, middle row `b e`, bottom cell `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    A,
    D,
    F,
    B,
    E,
    C,
}

impl Slot {
    const ALL: [Slot; 6] = [Slot::A, Slot::D, Slot::F, Slot::B, Slot::E, Slot::C];
}

/// The three possible inversions of the pentagon: `d = e`, `a = b`, `b = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InversionPattern {
    pub de: bool,
    pub ab: bool,
    pub bc: bool,
}

impl InversionPattern {
    pub fn of(v: &[Entry; 6]) -> Self {
        let [a, d, _, b, e, c] = *v;
        InversionPattern { de: d == e, ab: a == b, bc: b == c }
    }
}

/// One row of the case table: a Gog pattern and its affine image, each
/// image slot being `source + offset`.
#[derive(Debug, Clone, Copy)]
pub struct CaseRow {
    pub pattern: InversionPattern,
    pub image: [(Slot, Entry); 6],
    /// Whether the row agrees with the standard procedure.
    pub standard: bool,
}

const fn pat(de: bool, ab: bool, bc: bool) -> InversionPattern {
    InversionPattern { de, ab, bc }
}

use Slot::{A, B, C, D, E, F};

/// The case table in the order `(image of a, d, f, b, e, c)`.
pub const PENTAGON_333_TABLE: [CaseRow; 8] = [
    CaseRow {
        pattern: pat(false, false, false),
        image: [(A, 0), (D, 0), (F, 0), (B, 0), (E, 0), (C, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(true, false, false),
        image: [(A, 0), (D, 0), (F, -1), (B, 0), (D, 0), (C, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(false, true, false),
        image: [(A, 0), (D, -1), (F, 0), (A, 0), (E, 0), (C, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(false, false, true),
        image: [(A, 0), (D, 0), (F, -1), (B, 0), (E, -1), (B, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(true, false, true),
        image: [(A, 0), (D, -1), (F, -2), (A, 0), (D, -1), (B, 0)],
        standard: false,
    },
    CaseRow {
        pattern: pat(true, true, false),
        image: [(A, 0), (D, -1), (F, -1), (A, 0), (D, 0), (C, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(false, true, true),
        image: [(A, 0), (D, -1), (F, -1), (A, 0), (E, -1), (A, 0)],
        standard: true,
    },
    CaseRow {
        pattern: pat(true, true, true),
        image: [(A, 0), (D, -1), (F, -2), (A, 0), (D, -1), (A, 0)],
        standard: true,
    },
];

/// `(a, d, f, b, e, c)` from a pentagon's bottom-up storage `(c, b, e, a, d, f)`.
pub fn pentagon_slots(p: &Pentagon) -> [Entry; 6] {
    let f = p.flat();
    [f[3], f[4], f[5], f[1], f[2], f[0]]
}

fn pentagon_from_slots(n: usize, v: &[Entry; 6]) -> Pentagon {
    let [a, d, f, b, e, c] = *v;
    Pentagon::new(n, 3, 3, 3, vec![vec![c], vec![b, e], vec![a, d, f]]).expect("(n,3,3,3) shape")
}

fn gt6(v: &[Entry; 6]) -> bool {
    let [a, d, f, b, e, c] = *v;
    a >= 1 && a <= b && b <= d && d <= e && e <= f && b <= c && c <= e
}

/// Gog condition set: `a < d < f`, `b < e`, `f <= n`.
pub fn in_gog_333(n: usize, v: &[Entry; 6]) -> bool {
    let [a, d, f, b, e, _] = *v;
    gt6(v) && a < d && d < f && b < e && f <= n as Entry
}

/// GOGAm condition set: `f <= n`, `f-e+d <= n-1`, `f-c+b <= n-1`, `f-e+d-b+a <= n-2`.
pub fn in_gogam_333(n: usize, v: &[Entry; 6]) -> bool {
    let [a, d, f, b, e, c] = *v;
    let n = n as Entry;
    gt6(v) && f <= n && f - e + d < n && f - c + b < n && f - e + d - b + a <= n - 2
}

fn check_333(p: &Pentagon) -> Result<usize> {
    let (n, k, l, m) = p.params();
    if (k, l, m) != (3, 3, 3) {
        return Err(Error::Shape(format!("expected an (n,3,3,3) pentagon, got ({n},{k},{l},{m})")));
    }
    Ok(n)
}

fn apply_row(row: &CaseRow, v: &[Entry; 6]) -> [Entry; 6] {
    row.image.map(|(s, off)| v[s as usize] + off)
}

pub fn pentagon333_gog_to_gogam(p: &Pentagon) -> Result<Pentagon> {
    let n = check_333(p)?;
    let v = pentagon_slots(p);
    if !in_gog_333(n, &v) {
        return Err(Error::NotMember("Gog"));
    }
    let pattern = InversionPattern::of(&v);
    let row = PENTAGON_333_TABLE.iter().find(|r| r.pattern == pattern).expect("all eight patterns");
    Ok(pentagon_from_slots(n, &apply_row(row, &v)))
}

/// Solves a table row backwards: sources are read off the image, slots that
/// do not occur in the image are recovered from the row's equalities.
fn solve_row(row: &CaseRow, y: &[Entry; 6]) -> Option<[Entry; 6]> {
    let mut x: [Option<Entry>; 6] = [None; 6];
    for (t, &(s, off)) in row.image.iter().enumerate() {
        let val = y[t] - off;
        match x[s as usize] {
            Some(prev) if prev != val => return None,
            _ => x[s as usize] = Some(val),
        }
    }
    let eqs = [(row.pattern.de, D, E), (row.pattern.ab, A, B), (row.pattern.bc, B, C)];
    for _ in 0..3 {
        for &(on, u, w) in &eqs {
            if on {
                match (x[u as usize], x[w as usize]) {
                    (Some(p), None) => x[w as usize] = Some(p),
                    (None, Some(q)) => x[u as usize] = Some(q),
                    _ => {}
                }
            }
        }
    }
    let mut out = [0; 6];
    for s in Slot::ALL {
        out[s as usize] = x[s as usize]?;
    }
    Some(out)
}

pub fn pentagon333_gogam_to_gog(p: &Pentagon) -> Result<Pentagon> {
    let n = check_333(p)?;
    let y = pentagon_slots(p);
    if !in_gogam_333(n, &y) {
        return Err(Error::NotMember("GOGAm"));
    }
    let preimages: Vec<[Entry; 6]> = PENTAGON_333_TABLE
        .iter()
        .filter_map(|row| {
            let x = solve_row(row, &y)?;
            (in_gog_333(n, &x) && InversionPattern::of(&x) == row.pattern && apply_row(row, &x) == y).then_some(x)
        })
        .collect();
    match preimages.as_slice() {
        [x] => Ok(pentagon_from_slots(n, x)),
        _ => Err(Error::NotInvertible(format!("{} table rows match", preimages.len()))),
    }
}

/// All `(a,d,f,b,e,c)` in the Gog condition set, lexicographic.
pub fn gog_333_set(n: usize) -> Vec<[Entry; 6]> {
    condition_set(n, in_gog_333)
}

pub fn gogam_333_set(n: usize) -> Vec<[Entry; 6]> {
    condition_set(n, in_gogam_333)
}

fn condition_set(n: usize, keep: fn(usize, &[Entry; 6]) -> bool) -> Vec<[Entry; 6]> {
    let top = n as Entry;
    let mut out = Vec::new();
    for a in 1..=top {
        for d in a..=top {
            for f in d..=top {
                for b in a..=d {
                    for e in d..=f {
                        for c in b..=e {
                            let v = [a, d, f, b, e, c];
                            if keep(n, &v) {
                                out.push(v);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// The region of `(n,3,3,3)` pentagons.
pub fn pentagon_333_region(n: usize) -> Region {
    Region::Pentagon { n, k: 3, l: 3, m: 3 }
}

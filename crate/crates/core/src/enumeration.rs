//! Exhaustive generators for every family and shape.
//!
//! Most streams come from one backtracking search over the cells of a
//! [`Region`] in bottom-up, left-to-right order. Each cell's feasible interval
//! is computed from the already placed cells below it and to its left, so the
//! output is lexicographic in the concatenated rows. GOGAm triangles are the
//! Schützenberger images of Magog triangles; larger GOGAm trapezoids and
//! pentagons are distinct cuts of GOGAm triangles.

use std::collections::BTreeSet;
use std::thread;

use crate::classes::{
    complete_gog_right, complete_gogam_left, complete_gogam_right, complete_pentagon, minimal_extension,
    ExtensionRules, Family,
};
use crate::error::{Error, Result};
use crate::schutzenberger::schutzenberger_in_place;
use crate::shapes::{LeftTrapezoid, Pentagon, Region, RightTrapezoid};
use crate::triangle::{Cell, Entry, GTTriangle};

/// Regions with at most this many cells enumerate GOGAm objects by filtering
/// candidates through their minimal completion instead of cutting triangles.
const FILTER_CELL_LIMIT: usize = 12;

/// Selects one of `workers` disjoint slices of a stream.
///
/// Prefixes of length `depth` are numbered in the order the search reaches
/// them; worker `w` keeps the objects whose prefix number is `w` modulo
/// `workers`. The slices for `w = 0..workers` cover the stream exactly once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub depth: usize,
    pub worker: usize,
    pub workers: usize,
}

impl Partition {
    pub fn new(depth: usize, worker: usize, workers: usize) -> Result<Self> {
        if workers == 0 || worker >= workers {
            return Err(Error::Range(format!("worker {worker} of {workers}")));
        }
        Ok(Partition { depth, worker, workers })
    }
}

type Accept = Box<dyn Fn(&[Entry]) -> bool + Send>;

/// Depth-first search over a region with per-cell intervals.
pub struct Search {
    lo_static: Vec<Entry>,
    hi_static: Vec<Entry>,
    below_left: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    strict: bool,
    accept: Option<Accept>,
    partition: Option<Partition>,
    values: Vec<Entry>,
    hi: Vec<Entry>,
    prefixes: u64,
    started: bool,
    done: bool,
}

impl Search {
    fn new(region: Region, bounds: impl Fn(Cell) -> (Entry, Entry), strict: bool) -> Self {
        let cells = region.cells();
        let position = |i: usize, j: usize| cells.iter().position(|c| c.i == i && c.j == j);
        let mut below_left = Vec::with_capacity(cells.len());
        let mut below = Vec::with_capacity(cells.len());
        let mut left = Vec::with_capacity(cells.len());
        for c in &cells {
            below_left.push(if c.i > 1 && c.j > 1 { position(c.i - 1, c.j - 1) } else { None });
            below.push(if c.i > 1 && c.j < c.i { position(c.i - 1, c.j) } else { None });
            left.push(if c.j > 1 { position(c.i, c.j - 1) } else { None });
        }
        let (lo_static, hi_static) = cells.iter().map(|&c| bounds(c)).unzip();
        Search {
            lo_static,
            hi_static,
            below_left,
            below,
            left,
            strict,
            accept: None,
            partition: None,
            values: vec![0; cells.len()],
            hi: vec![0; cells.len()],
            prefixes: 0,
            started: false,
            done: false,
        }
    }

    fn with_accept(mut self, accept: Accept) -> Self {
        self.accept = Some(accept);
        self
    }

    fn with_partition(mut self, partition: Option<Partition>) -> Self {
        self.partition = partition;
        self
    }

    fn interval(&self, p: usize) -> (Entry, Entry) {
        let mut lo = self.lo_static[p];
        let mut hi = self.hi_static[p];
        if let Some(q) = self.below_left[p] {
            lo = lo.max(self.values[q]);
        }
        if let Some(q) = self.below[p] {
            hi = hi.min(self.values[q]);
        }
        if let Some(q) = self.left[p] {
            lo = lo.max(self.values[q] + self.strict as Entry);
        }
        (lo, hi)
    }

    fn accepts(&self) -> bool {
        self.accept.as_ref().is_none_or(|f| f(&self.values))
    }

    /// Whether the prefix ending at `p` belongs to this worker.
    fn owns_prefix(&mut self, p: usize) -> bool {
        match self.partition {
            None => true,
            Some(part) => {
                let depth = part.depth.min(self.values.len());
                if p + 1 != depth {
                    return true;
                }
                let mine = self.prefixes % part.workers as u64 == part.worker as u64;
                self.prefixes += 1;
                mine
            }
        }
    }
}

impl Iterator for Search {
    type Item = Vec<Entry>;

    fn next(&mut self) -> Option<Vec<Entry>> {
        if self.done {
            return None;
        }
        let m = self.values.len();
        if !self.started {
            self.started = true;
            if let Some(part) = self.partition {
                if (part.depth == 0 || m == 0) && part.worker != 0 {
                    self.done = true;
                    return None;
                }
            }
            if m == 0 {
                self.done = true;
                return self.accepts().then(Vec::new);
            }
        }
        // `fresh`: cell p is being entered and needs its interval.
        let (mut p, mut fresh) = if self.values[0] == 0 { (0, true) } else { (m - 1, false) };
        loop {
            if fresh {
                let (lo, hi) = self.interval(p);
                if lo > hi {
                    if p == 0 {
                        self.done = true;
                        return None;
                    }
                    p -= 1;
                    fresh = false;
                    continue;
                }
                self.values[p] = lo;
                self.hi[p] = hi;
            } else if self.values[p] < self.hi[p] {
                self.values[p] += 1;
            } else {
                if p == 0 {
                    self.done = true;
                    return None;
                }
                p -= 1;
                continue;
            }
            if !self.owns_prefix(p) {
                fresh = false;
                continue;
            }
            if p + 1 == m {
                if self.accepts() {
                    return Some(self.values.clone());
                }
                fresh = false;
                continue;
            }
            p += 1;
            fresh = true;
        }
    }
}

fn gt_search(region: Region, max: Entry) -> Search {
    Search::new(region, |_| (1, max), false)
}

fn gog_search(region: Region) -> Search {
    let n = region.n();
    Search::new(region, move |c| (c.j as Entry, (n - c.i + c.j) as Entry), true)
}

fn magog_search(region: Region) -> Search {
    let n = region.n() as Entry;
    Search::new(region, move |c| (1, if c.i == c.j { c.j as Entry } else { n }), false)
}

/// Every GT triangle of size `n` with entries in `1..=max`.
pub fn enumerate_gt(n: usize, max: Entry) -> impl Iterator<Item = GTTriangle> {
    gt_search(Region::Triangle { n }, max).map(move |v| GTTriangle::from_flat_unchecked(n, v))
}

pub fn enumerate_gog(n: usize) -> impl Iterator<Item = GTTriangle> {
    gog_search(Region::Triangle { n }).map(move |v| GTTriangle::from_flat_unchecked(n, v))
}

pub fn enumerate_magog(n: usize) -> impl Iterator<Item = GTTriangle> {
    magog_search(Region::Triangle { n }).map(move |v| GTTriangle::from_flat_unchecked(n, v))
}

/// GOGAm triangles as Schützenberger images of Magog triangles, sorted.
pub fn enumerate_gogam(n: usize) -> impl Iterator<Item = GTTriangle> {
    let mut all: Vec<Vec<Entry>> = gogam_images(n, None).collect();
    all.sort_unstable();
    all.into_iter().map(move |v| GTTriangle::from_flat_unchecked(n, v))
}

fn gogam_images(n: usize, partition: Option<Partition>) -> impl Iterator<Item = Vec<Entry>> {
    magog_search(Region::Triangle { n }).with_partition(partition).map(move |mut v| {
        schutzenberger_in_place(n, &mut v);
        v
    })
}

fn unsupported(family: Family, what: &str) -> Error {
    Error::Range(format!("{family} {what} are not defined"))
}

/// How a stream is produced; exposed so tests can cross-check strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Pick automatically.
    Auto,
    /// Backtrack over the region and keep candidates whose completion is a member.
    Filter,
    /// Distinct cuts of full triangles.
    Cut,
}

fn gogam_accept(region: Region) -> Accept {
    match region {
        Region::Triangle { n } => Box::new(move |v| {
            let mut image = v.to_vec();
            schutzenberger_in_place(n, &mut image);
            crate::classes::is_magog_flat(n, &image)
        }),
        Region::Left { .. } => {
            Box::new(move |v| complete_gogam_left(&LeftTrapezoid::from_flat_unchecked(region, v)).is_ok())
        }
        Region::Right { .. } => {
            Box::new(move |v| complete_gogam_right(&RightTrapezoid::from_flat_unchecked(region, v)).is_ok())
        }
        Region::Pentagon { .. } => {
            Box::new(move |v| complete_pentagon(Family::Gogam, &Pentagon::from_flat_unchecked(region, v)).is_ok())
        }
    }
}

fn cut_flat(region: Region, t: &[Entry]) -> Vec<Entry> {
    region.cells().iter().map(|c| t[crate::triangle::flat_index(c.i, c.j)]).collect()
}

/// Keeps the objects whose `depth`-prefix index (in stream order) belongs to the worker.
fn partition_sorted(items: Vec<Vec<Entry>>, partition: Option<Partition>) -> Vec<Vec<Entry>> {
    let Some(part) = partition else { return items };
    let mut out = Vec::new();
    let mut index = 0u64;
    let mut last: Option<Vec<Entry>> = None;
    for v in items {
        let prefix = v[..part.depth.min(v.len())].to_vec();
        if let Some(prev) = &last {
            if *prev != prefix {
                index += 1;
            }
        }
        last = Some(prefix);
        if part.depth == 0 && part.worker != 0 {
            continue;
        }
        if index % part.workers as u64 == part.worker as u64 {
            out.push(v);
        }
    }
    out
}

/// Flat entries (bottom-up over the region's cells) of every member of
/// `family` with the given shape, in lexicographic order.
pub fn stream(
    family: Family,
    region: Region,
    partition: Option<Partition>,
) -> Result<Box<dyn Iterator<Item = Vec<Entry>> + Send>> {
    stream_with(family, region, partition, Strategy::Auto)
}

pub fn stream_with(
    family: Family,
    region: Region,
    partition: Option<Partition>,
    strategy: Strategy,
) -> Result<Box<dyn Iterator<Item = Vec<Entry>> + Send>> {
    region.validate()?;
    let n = region.n();
    Ok(match (family, region) {
        (Family::Gog, Region::Triangle { .. } | Region::Left { .. }) => {
            Box::new(gog_search(region).with_partition(partition))
        }
        (Family::Gog, Region::Right { .. }) => {
            Box::new(gog_search(region).with_partition(partition).with_accept(Box::new(move |v| {
                complete_gog_right(&RightTrapezoid::from_flat_unchecked(region, v)).is_ok()
            })))
        }
        (Family::Gog, Region::Pentagon { .. }) => {
            Box::new(gog_search(region).with_partition(partition).with_accept(Box::new(move |v| {
                let fixed: Vec<(Cell, Entry)> = region.cells().into_iter().zip(v.iter().copied()).collect();
                minimal_extension(n, &fixed, ExtensionRules::Gog).is_ok()
            })))
        }
        (Family::Magog, Region::Triangle { .. } | Region::Right { .. }) => {
            Box::new(magog_search(region).with_partition(partition))
        }
        (Family::Magog, Region::Left { .. }) => return Err(unsupported(family, "left trapezoids")),
        (Family::Magog, Region::Pentagon { .. }) => return Err(unsupported(family, "pentagons")),
        (Family::Gogam, Region::Triangle { .. }) if strategy != Strategy::Filter => {
            let mut all: Vec<Vec<Entry>> = gogam_images(n, partition).collect();
            all.sort_unstable();
            Box::new(all.into_iter())
        }
        (Family::Gogam, _) => {
            let filter = match strategy {
                Strategy::Filter => true,
                Strategy::Cut => false,
                Strategy::Auto => region.cells().len() <= FILTER_CELL_LIMIT,
            };
            if filter {
                Box::new(gt_search(region, n as Entry).with_partition(partition).with_accept(gogam_accept(region)))
            } else {
                let cuts: BTreeSet<Vec<Entry>> = gogam_images(n, None).map(|t| cut_flat(region, &t)).collect();
                Box::new(partition_sorted(cuts.into_iter().collect(), partition).into_iter())
            }
        }
    })
}

pub fn enumerate_left_trapezoids(family: Family, n: usize, k: usize) -> Result<impl Iterator<Item = LeftTrapezoid>> {
    let region = Region::Left { n, k };
    Ok(stream(family, region, None)?.map(move |v| LeftTrapezoid::from_flat_unchecked(region, &v)))
}

pub fn enumerate_right_trapezoids(family: Family, n: usize, k: usize) -> Result<impl Iterator<Item = RightTrapezoid>> {
    let region = Region::Right { n, k };
    Ok(stream(family, region, None)?.map(move |v| RightTrapezoid::from_flat_unchecked(region, &v)))
}

pub fn enumerate_pentagons(
    family: Family,
    n: usize,
    k: usize,
    l: usize,
    m: usize,
) -> Result<impl Iterator<Item = Pentagon>> {
    let region = Region::Pentagon { n, k, l, m };
    Ok(stream(family, region, None)?.map(move |v| Pentagon::from_flat_unchecked(region, &v)))
}

/// Number of members of `family` with the given shape.
pub fn count(family: Family, region: Region) -> Result<u64> {
    Ok(stream(family, region, None)?.count() as u64)
}

/// Prefix length used to split searches across workers.
fn split_depth(region: Region) -> usize {
    region.cells().len().min(6)
}

/// Runs `f` on each of `jobs` disjoint slices of the stream concurrently and
/// returns the per-slice results in worker order.
pub fn par_map<T: Send>(
    family: Family,
    region: Region,
    jobs: usize,
    f: impl Fn(Box<dyn Iterator<Item = Vec<Entry>> + Send>) -> T + Sync,
) -> Result<Vec<T>> {
    let jobs = jobs.max(1);
    if jobs == 1 {
        return Ok(vec![f(stream(family, region, None)?)]);
    }
    let depth = split_depth(region);
    let streams =
        (0..jobs).map(|w| stream(family, region, Some(Partition::new(depth, w, jobs)?))).collect::<Result<Vec<_>>>()?;
    let f = &f;
    Ok(thread::scope(|s| {
        let handles: Vec<_> = streams.into_iter().map(|st| s.spawn(move || f(st))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    }))
}

pub fn count_parallel(family: Family, region: Region, jobs: usize) -> Result<u64> {
    Ok(par_map(family, region, jobs, |st| st.count() as u64)?.into_iter().sum())
}

/// Available hardware parallelism, at least 1.
pub fn default_jobs() -> usize {
    thread::available_parallelism().map_or(1, |n| n.get())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::a_n;
    use crate::classes::{is_gog, is_gogam_by_inequality, is_left_gog, is_magog, reflect};
    use crate::shapes::{cut_left, cut_pentagon, cut_right};
    use num_traits::ToPrimitive;

    fn catalan(n: u64) -> u64 {
        (0..n).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
    }

    fn check_sorted_distinct(items: &[Vec<Entry>]) {
        assert!(items.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_families() {
        assert_eq!(enumerate_gog(1).map(|t| t.to_rows()).collect::<Vec<_>>(), vec![vec![vec![1]]]);
        let magog2: Vec<_> = enumerate_magog(2).map(|t| t.to_rows()).collect();
        assert_eq!(magog2, vec![vec![vec![1], vec![1, 1]], vec![vec![1], vec![1, 2]]]);
        assert_eq!(enumerate_gog(3).count(), 7);
        assert_eq!(enumerate_gog(5).count(), 429);
        assert_eq!(enumerate_gogam(4).count(), 42);
    }

    #[test]
    fn counts_match_product_formula() {
        for n in 1..=6 {
            let a = a_n(n).to_u64().unwrap();
            assert_eq!(enumerate_gog(n).count() as u64, a);
            assert_eq!(enumerate_magog(n).count() as u64, a);
            assert_eq!(enumerate_gogam(n).count() as u64, a);
        }
    }

    #[test]
    fn streams_sorted_and_members() {
        for n in 1..=5 {
            let gog: Vec<_> = enumerate_gog(n).collect();
            assert!(gog.iter().all(is_gog));
            check_sorted_distinct(&gog.iter().map(|t| t.as_flat().to_vec()).collect::<Vec<_>>());
            let magog: Vec<_> = enumerate_magog(n).collect();
            assert!(magog.iter().all(is_magog));
            let gogam: Vec<Vec<Entry>> = enumerate_gogam(n).map(|t| t.as_flat().to_vec()).collect();
            check_sorted_distinct(&gogam);
            let audited: Vec<Vec<Entry>> =
                enumerate_gt(n, n as Entry).filter(is_gogam_by_inequality).map(|t| t.as_flat().to_vec()).collect();
            assert_eq!(gogam, audited);
        }
    }

    #[test]
    fn gt_enumeration_matches_brute_force() {
        // all arrays in [1,3]^6 filtered by the GT inequalities
        let n = 3;
        let mut brute = Vec::new();
        for code in 0..3usize.pow(6) {
            let flat: Vec<Entry> = (0..6).map(|p| (code / 3usize.pow(5 - p) % 3) as Entry + 1).collect();
            if GTTriangle::from_flat(n, flat.clone()).is_ok() {
                brute.push(flat);
            }
        }
        let fast: Vec<Vec<Entry>> = enumerate_gt(n, 3).map(|t| t.as_flat().to_vec()).collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn left_gog_column_is_catalan() {
        for n in 1..=6 {
            assert_eq!(count(Family::Gog, Region::Left { n, k: 1 }).unwrap(), catalan(n as u64));
        }
    }

    #[test]
    fn full_trapezoids_are_triangles() {
        for n in 1..=5 {
            let a = a_n(n).to_u64().unwrap();
            for fam in [Family::Gog, Family::Gogam] {
                assert_eq!(count(fam, Region::Left { n, k: n }).unwrap(), a);
            }
            for fam in Family::ALL {
                assert_eq!(count(fam, Region::Right { n, k: n }).unwrap(), a);
            }
        }
    }

    #[test]
    fn trapezoid_streams_equal_distinct_cuts() {
        for n in 1..=5 {
            let gog: Vec<_> = enumerate_gog(n).collect();
            let magog: Vec<_> = enumerate_magog(n).collect();
            let gogam: Vec<_> = enumerate_gogam(n).collect();
            for k in 1..=n {
                let l: Vec<Vec<Entry>> = stream(Family::Gog, Region::Left { n, k }, None).unwrap().collect();
                let cuts: BTreeSet<_> = gog.iter().map(|t| cut_left(t, k).unwrap().flat()).collect();
                assert_eq!(l, cuts.into_iter().collect::<Vec<_>>());
                let r: Vec<Vec<Entry>> = stream(Family::Gog, Region::Right { n, k }, None).unwrap().collect();
                let cuts: BTreeSet<_> = gog.iter().map(|t| cut_right(t, k).unwrap().flat()).collect();
                assert_eq!(r, cuts.into_iter().collect::<Vec<_>>());
                let r: Vec<Vec<Entry>> = stream(Family::Magog, Region::Right { n, k }, None).unwrap().collect();
                let cuts: BTreeSet<_> = magog.iter().map(|t| cut_right(t, k).unwrap().flat()).collect();
                assert_eq!(r, cuts.into_iter().collect::<Vec<_>>());
                for region in [Region::Left { n, k }, Region::Right { n, k }] {
                    let cuts: BTreeSet<Vec<Entry>> = gogam.iter().map(|t| cut_flat(region, t.as_flat())).collect();
                    let cuts: Vec<_> = cuts.into_iter().collect();
                    for strategy in [Strategy::Filter, Strategy::Cut] {
                        let got: Vec<_> = stream_with(Family::Gogam, region, None, strategy).unwrap().collect();
                        assert_eq!(got, cuts, "{region:?} {strategy:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn left_and_right_gog_equinumerous() {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    count(Family::Gog, Region::Left { n, k }).unwrap(),
                    count(Family::Gog, Region::Right { n, k }).unwrap()
                );
            }
        }
        // reflection realises it
        let (n, k) = (5, 3);
        let lefts: BTreeSet<Vec<Entry>> =
            enumerate_gog(n).map(|t| cut_left(&reflect(&t).unwrap(), k).unwrap().flat()).collect();
        assert_eq!(lefts.len() as u64, count(Family::Gog, Region::Right { n, k }).unwrap());
    }

    #[test]
    fn figure_trapezoid_is_enumerated() {
        let want = vec![4, 2, 4, 2, 3, 1, 3, 1, 2];
        let found = enumerate_left_trapezoids(Family::Gog, 5, 2).unwrap().any(|t| t.flat() == want);
        assert!(found);
        assert!(enumerate_left_trapezoids(Family::Gog, 5, 2).unwrap().all(|t| is_left_gog(&t)));
    }

    #[test]
    fn pentagon_streams() {
        for n in 1..=5 {
            let gog: Vec<_> = enumerate_gog(n).collect();
            let gogam: Vec<_> = enumerate_gogam(n).collect();
            for k in 1..=n {
                for l in 1..=n {
                    for m in 1..=n {
                        let region = Region::Pentagon { n, k, l, m };
                        let cuts: BTreeSet<_> = gog.iter().map(|t| cut_pentagon(t, k, l, m).unwrap().flat()).collect();
                        let got: Vec<_> = stream(Family::Gog, region, None).unwrap().collect();
                        assert_eq!(got, cuts.into_iter().collect::<Vec<_>>());
                        let cuts: BTreeSet<_> =
                            gogam.iter().map(|t| cut_pentagon(t, k, l, m).unwrap().flat()).collect();
                        let cuts: Vec<_> = cuts.into_iter().collect();
                        for strategy in [Strategy::Filter, Strategy::Cut] {
                            let got: Vec<_> = stream_with(Family::Gogam, region, None, strategy).unwrap().collect();
                            assert_eq!(got, cuts);
                        }
                        if m <= k.min(l) {
                            let expect: Vec<Vec<Entry>> = stream(Family::Gog, Region::Triangle { n }, None)
                                .unwrap()
                                .map(|t| t[..m * (m + 1) / 2].to_vec())
                                .collect::<BTreeSet<_>>()
                                .into_iter()
                                .collect();
                            let got: Vec<_> = stream(Family::Gog, region, None).unwrap().collect();
                            assert_eq!(got, expect);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn magog_left_shapes_are_rejected() {
        assert!(enumerate_left_trapezoids(Family::Magog, 3, 2).is_err());
        assert!(enumerate_pentagons(Family::Magog, 3, 2, 2, 2).is_err());
        assert!(count(Family::Gog, Region::Left { n: 3, k: 4 }).is_err());
    }

    #[test]
    fn partitions_cover_disjointly() {
        let regions = [
            (Family::Gog, Region::Triangle { n: 5 }),
            (Family::Magog, Region::Right { n: 5, k: 3 }),
            (Family::Gogam, Region::Triangle { n: 5 }),
            (Family::Gogam, Region::Left { n: 6, k: 4 }),
            (Family::Gog, Region::Pentagon { n: 5, k: 3, l: 3, m: 4 }),
        ];
        for (family, region) in regions {
            let full: Vec<Vec<Entry>> = stream(family, region, None).unwrap().collect();
            for depth in [0, 1, 3, 50] {
                for workers in [1, 2, 3, 7] {
                    let mut union = Vec::new();
                    for w in 0..workers {
                        let part = Partition::new(depth, w, workers).unwrap();
                        union.extend(stream(family, region, Some(part)).unwrap());
                    }
                    union.sort();
                    let mut sorted = full.clone();
                    sorted.sort();
                    assert_eq!(union, sorted, "{family} {region:?} depth {depth} workers {workers}");
                }
            }
        }
        assert!(Partition::new(1, 3, 3).is_err());
    }

    #[test]
    fn parallel_count_matches_serial() {
        for jobs in [1, 2, 4] {
            assert_eq!(count_parallel(Family::Gog, Region::Triangle { n: 6 }, jobs).unwrap(), 7436);
            assert_eq!(count_parallel(Family::Gogam, Region::Triangle { n: 5 }, jobs).unwrap(), 429);
        }
    }
}

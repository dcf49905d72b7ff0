//! Independent geometric oracle: enumerate every corona of a region by
//! backtracking exact cover.
//!
//! A corona is a set of pairwise disjoint lozenges, each lying outside the
//! region and touching its boundary (a shared vertex suffices), that
//! together cover every external ring triangle exactly once. The search
//! branches on the uncovered ring triangle with the fewest remaining
//! covering candidates; since each corona assigns every ring triangle to
//! exactly one lozenge, every corona is reached by exactly one branch
//! sequence and no deduplication is needed.
//!
//! With the `parallel` feature (default) the top-level branches are explored
//! on a rayon pool and merged in branch order, so the histogram and the
//! emission sequence are identical to the sequential run. The
//! `*_sequential` entry points always run single-threaded.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::lattice::{Lozenge, Region, TriangleId};
use crate::polyalg::Polynomial;

/// One corona: a canonically sorted list of lozenges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Corona {
    lozenges: Vec<Lozenge>,
}

impl Corona {
    /// Builds a corona from a lozenge set after checking every corona
    /// condition against the region.
    pub fn new(region: &Region, lozenges: Vec<Lozenge>) -> Result<Corona, CoronaViolation> {
        is_valid_corona(region, &lozenges)?;
        let mut lozenges = lozenges;
        lozenges.sort();
        Ok(Corona { lozenges })
    }

    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    /// Number of lozenges.
    pub fn size(&self) -> usize {
        self.lozenges.len()
    }
}

/// Corona counts keyed by lozenge count, with exact integer totals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoronaHistogram {
    by_size: BTreeMap<u64, BigUint>,
    total: BigUint,
}

impl CoronaHistogram {
    pub fn by_size(&self) -> &BTreeMap<u64, BigUint> {
        &self.by_size
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// The lozenge counts that occur, in increasing order.
    pub fn support(&self) -> Vec<u64> {
        self.by_size.keys().copied().collect()
    }

    /// The histogram read as a counting polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            self.by_size
                .iter()
                .map(|(&size, count)| (size, count.clone().into())),
        )
    }

    fn record(&mut self, size: u64) {
        *self.by_size.entry(size).or_insert_with(BigUint::zero) += 1u32;
        self.total += 1u32;
    }

    fn merge(&mut self, other: CoronaHistogram) {
        for (size, count) in other.by_size {
            *self.by_size.entry(size).or_insert_with(BigUint::zero) += count;
        }
        self.total += other.total;
    }
}

/// The first condition a lozenge set violates, if it is not a corona of the
/// region. Checks run per lozenge (inside region, then detached), then
/// pairwise (overlap), then coverage (uncovered ring triangle).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoronaViolation {
    #[error("lozenge inside region: {0:?} uses triangles of the region itself")]
    LozengeInsideRegion(Lozenge),
    #[error("detached lozenge: {0:?} has no vertex on the region boundary")]
    DetachedLozenge(Lozenge),
    #[error("overlap: {0:?} and {1:?} share a triangle")]
    Overlap(Lozenge, Lozenge),
    #[error("uncovered required triangle: {0:?} is not covered by any lozenge")]
    UncoveredRequiredTriangle(TriangleId),
}

/// Checks the corona conditions, reporting the first violation.
pub fn is_valid_corona(region: &Region, lozenges: &[Lozenge]) -> Result<(), CoronaViolation> {
    let boundary = region.boundary_vertex_set();
    for &loz in lozenges {
        if loz.triangles().iter().any(|t| region.contains(*t)) {
            return Err(CoronaViolation::LozengeInsideRegion(loz));
        }
        let touches = loz
            .triangles()
            .iter()
            .flat_map(|t| t.vertices())
            .any(|v| boundary.contains(&v));
        if !touches {
            return Err(CoronaViolation::DetachedLozenge(loz));
        }
    }

    let mut occupied: BTreeMap<TriangleId, Lozenge> = BTreeMap::new();
    for &loz in lozenges {
        for t in loz.triangles() {
            if let Some(&prev) = occupied.get(&t) {
                return Err(CoronaViolation::Overlap(prev, loz));
            }
            occupied.insert(t, loz);
        }
    }

    for t in region.external_ring_triangles() {
        if !occupied.contains_key(&t) {
            return Err(CoronaViolation::UncoveredRequiredTriangle(t));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Search problem assembly
// ---------------------------------------------------------------------------

/// Static description of one exact-cover instance. Cells index every
/// triangle any candidate can occupy; cells `0..ring_len` are the ring
/// triangles (canonical order), the rest are overhang triangles that may be
/// used at most once.
struct Problem {
    candidates: Vec<Lozenge>,
    /// Per candidate, the two cell indices it occupies.
    cand_cells: Vec<[u32; 2]>,
    /// Per ring cell, the candidates covering it (at most three; ascending).
    ring_covers: Vec<Vec<u32>>,
    ring_len: usize,
    cell_count: usize,
}

impl Problem {
    fn build(region: &Region) -> Problem {
        let ring: Vec<TriangleId> = region.external_ring_triangles().into_iter().collect();
        let candidates: Vec<Lozenge> = region.candidate_lozenges().into_iter().collect();

        let mut cell_index: BTreeMap<TriangleId, u32> = BTreeMap::new();
        for (i, &t) in ring.iter().enumerate() {
            cell_index.insert(t, i as u32);
        }
        let overhang: std::collections::BTreeSet<TriangleId> = candidates
            .iter()
            .flat_map(|l| l.triangles())
            .filter(|t| !cell_index.contains_key(t))
            .collect();
        for t in overhang {
            let next = cell_index.len() as u32;
            cell_index.insert(t, next);
        }

        let cand_cells: Vec<[u32; 2]> = candidates
            .iter()
            .map(|l| {
                let [a, b] = l.triangles();
                [cell_index[&a], cell_index[&b]]
            })
            .collect();

        let mut ring_covers = vec![Vec::new(); ring.len()];
        for (i, cells) in cand_cells.iter().enumerate() {
            for &cell in cells {
                if (cell as usize) < ring.len() {
                    ring_covers[cell as usize].push(i as u32);
                }
            }
        }

        Problem {
            candidates,
            cand_cells,
            ring_covers,
            ring_len: ring.len(),
            cell_count: cell_index.len(),
        }
    }

    fn corona_from(&self, selection: &[u32]) -> Corona {
        let mut lozenges: Vec<Lozenge> = selection
            .iter()
            .map(|&i| self.candidates[i as usize])
            .collect();
        lozenges.sort();
        Corona { lozenges }
    }
}

#[derive(Clone)]
struct SearchState {
    occupied: Vec<bool>,
    uncovered: usize,
    selection: Vec<u32>,
}

impl SearchState {
    fn root(problem: &Problem) -> SearchState {
        SearchState {
            occupied: vec![false; problem.cell_count],
            uncovered: problem.ring_len,
            selection: Vec::new(),
        }
    }

    fn available(&self, problem: &Problem, cand: u32) -> bool {
        problem.cand_cells[cand as usize]
            .iter()
            .all(|&c| !self.occupied[c as usize])
    }

    fn place(&mut self, problem: &Problem, cand: u32) {
        for &cell in &problem.cand_cells[cand as usize] {
            self.occupied[cell as usize] = true;
            if (cell as usize) < problem.ring_len {
                self.uncovered -= 1;
            }
        }
        self.selection.push(cand);
    }

    fn unplace(&mut self, problem: &Problem, cand: u32) {
        for &cell in &problem.cand_cells[cand as usize] {
            self.occupied[cell as usize] = false;
            if (cell as usize) < problem.ring_len {
                self.uncovered += 1;
            }
        }
        self.selection.pop();
    }

    /// Candidates covering the most constrained uncovered ring cell, in
    /// canonical order. Empty when the current branch is a dead end; `None`
    /// when every ring cell is covered (a corona is complete).
    fn best_branch(&self, problem: &Problem) -> Option<Vec<u32>> {
        if self.uncovered == 0 {
            return None;
        }
        let mut best: Option<Vec<u32>> = None;
        for cell in 0..problem.ring_len {
            if self.occupied[cell] {
                continue;
            }
            let avail: Vec<u32> = problem.ring_covers[cell]
                .iter()
                .copied()
                .filter(|&c| self.available(problem, c))
                .collect();
            if avail.is_empty() {
                return Some(avail);
            }
            if best.as_ref().is_none_or(|b| avail.len() < b.len()) {
                best = Some(avail);
            }
        }
        best
    }
}

fn search<F: FnMut(&Problem, &[u32])>(problem: &Problem, state: &mut SearchState, found: &mut F) {
    match state.best_branch(problem) {
        None => found(problem, &state.selection),
        Some(branches) => {
            for cand in branches {
                state.place(problem, cand);
                search(problem, state, found);
                state.unplace(problem, cand);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

/// Enumerates every corona of the region exactly once, in a deterministic
/// order, feeding each to `emit`; returns the histogram of corona sizes.
pub fn enumerate_coronas<F: FnMut(&Corona)>(region: &Region, emit: F) -> CoronaHistogram {
    #[cfg(feature = "parallel")]
    {
        enumerate_coronas_parallel(region, emit)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_coronas_sequential(region, emit)
    }
}

/// Like [`enumerate_coronas`] without materializing the coronas.
pub fn enumerate_count_only(region: &Region) -> CoronaHistogram {
    #[cfg(feature = "parallel")]
    {
        enumerate_count_only_parallel(region)
    }
    #[cfg(not(feature = "parallel"))]
    {
        enumerate_count_only_sequential(region)
    }
}

/// Single-threaded enumeration; the output is identical to
/// [`enumerate_coronas`].
pub fn enumerate_coronas_sequential<F: FnMut(&Corona)>(
    region: &Region,
    mut emit: F,
) -> CoronaHistogram {
    let problem = Problem::build(region);
    let mut histogram = CoronaHistogram::default();
    let mut state = SearchState::root(&problem);
    search(&problem, &mut state, &mut |problem, selection| {
        histogram.record(selection.len() as u64);
        emit(&problem.corona_from(selection));
    });
    histogram
}

/// Single-threaded count; the histogram is identical to
/// [`enumerate_count_only`].
pub fn enumerate_count_only_sequential(region: &Region) -> CoronaHistogram {
    let problem = Problem::build(region);
    let mut histogram = CoronaHistogram::default();
    let mut state = SearchState::root(&problem);
    search(&problem, &mut state, &mut |_, selection| {
        histogram.record(selection.len() as u64);
    });
    histogram
}

#[cfg(feature = "parallel")]
fn enumerate_coronas_parallel<F: FnMut(&Corona)>(region: &Region, mut emit: F) -> CoronaHistogram {
    let problem = Problem::build(region);
    let frontier = expand_frontier(&problem, 4 * rayon::current_num_threads());
    let results: Vec<(CoronaHistogram, Vec<Corona>)> = frontier
        .into_par_iter()
        .map(|mut state| {
            let mut histogram = CoronaHistogram::default();
            let mut coronas = Vec::new();
            search(&problem, &mut state, &mut |problem, selection| {
                histogram.record(selection.len() as u64);
                coronas.push(problem.corona_from(selection));
            });
            (histogram, coronas)
        })
        .collect();

    let mut histogram = CoronaHistogram::default();
    for (part, coronas) in results {
        histogram.merge(part);
        for corona in &coronas {
            emit(corona);
        }
    }
    histogram
}

#[cfg(feature = "parallel")]
fn enumerate_count_only_parallel(region: &Region) -> CoronaHistogram {
    let problem = Problem::build(region);
    let frontier = expand_frontier(&problem, 4 * rayon::current_num_threads());
    let results: Vec<CoronaHistogram> = frontier
        .into_par_iter()
        .map(|mut state| {
            let mut histogram = CoronaHistogram::default();
            search(&problem, &mut state, &mut |_, selection| {
                histogram.record(selection.len() as u64);
            });
            histogram
        })
        .collect();

    let mut histogram = CoronaHistogram::default();
    for part in results {
        histogram.merge(part);
    }
    histogram
}

/// Expands the search tree breadth-first in depth-first order until at
/// least `target` independent subtrees exist. Dead ends are dropped;
/// completed coronas stay in place so the merged output keeps the exact
/// sequential order.
#[cfg(feature = "parallel")]
fn expand_frontier(problem: &Problem, target: usize) -> Vec<SearchState> {
    let mut frontier = vec![SearchState::root(problem)];
    while frontier.len() < target {
        let Some(pos) = frontier.iter().position(|s| s.uncovered > 0) else {
            break;
        };
        let state = frontier.remove(pos);
        let branches = state
            .best_branch(problem)
            .expect("uncovered > 0 always yields a branch list");
        let children: Vec<SearchState> = branches
            .into_iter()
            .map(|cand| {
                let mut child = state.clone();
                child.place(problem, cand);
                child
            })
            .collect();
        frontier.splice(pos..pos, children);
        if frontier.is_empty() {
            break;
        }
    }
    frontier
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform;
    use crate::lattice::{build_region, Shape};
    use crate::lattice::{Lozenge, TriangleId};

    fn hist_pairs(h: &CoronaHistogram) -> Vec<(u64, u64)> {
        h.by_size()
            .iter()
            .map(|(&s, c)| (s, u64::try_from(c).unwrap()))
            .collect()
    }

    #[test]
    fn hexagon_side_one() {
        let region = build_region(Shape::Hexagon(1)).unwrap();
        let hist = enumerate_count_only(&region);
        assert_eq!(
            hist_pairs(&hist),
            vec![(9, 2), (10, 36), (11, 96), (12, 64)]
        );
        assert_eq!(hist.total(), &BigUint::from(198u32));
    }

    #[test]
    fn diamond_side_one() {
        let region = build_region(Shape::Diamond(1)).unwrap();
        let hist = enumerate_count_only(&region);
        assert_eq!(hist_pairs(&hist), vec![(7, 2), (8, 25), (9, 40), (10, 16)]);
        assert_eq!(hist.total(), &BigUint::from(83u32));
    }

    #[test]
    fn gen_diamond_one_two() {
        let region = build_region(Shape::GenDiamond(1, 2)).unwrap();
        let hist = enumerate_count_only(&region);
        assert_eq!(hist.total(), &BigUint::from(146u32));
        assert_eq!(
            hist.to_polynomial(),
            closedform::gen_diamond_counts(1, 2).to_polynomial()
        );
    }

    #[test]
    fn count_only_matches_full_enumeration() {
        let region = build_region(Shape::Hexagon(1)).unwrap();
        let mut emitted = 0usize;
        let full = enumerate_coronas(&region, |_| emitted += 1);
        let counted = enumerate_count_only(&region);
        assert_eq!(full, counted);
        assert_eq!(emitted, 198);
    }

    #[test]
    fn every_emitted_corona_is_valid_and_canonical() {
        let region = build_region(Shape::GenDiamond(1, 2)).unwrap();
        let candidates = region.candidate_lozenges();
        enumerate_coronas(&region, |corona| {
            is_valid_corona(&region, corona.lozenges()).unwrap();
            assert!(corona.lozenges().windows(2).all(|w| w[0] < w[1]));
            assert!(corona.lozenges().iter().all(|l| candidates.contains(l)));
        });
    }

    #[test]
    fn violations_are_reported_in_order() {
        let region = build_region(Shape::Hexagon(2)).unwrap();
        let mut first = None;
        enumerate_coronas(&region, |corona| {
            if first.is_none() {
                first = Some(corona.clone());
            }
        });
        let corona = first.unwrap();
        is_valid_corona(&region, corona.lozenges()).unwrap();

        // Dropping any lozenge leaves a required triangle uncovered.
        let mut missing = corona.lozenges().to_vec();
        let removed = missing.remove(0);
        let err = is_valid_corona(&region, &missing).unwrap_err();
        let ring = region.external_ring_triangles();
        match err {
            CoronaViolation::UncoveredRequiredTriangle(t) => {
                assert!(removed.contains(t) && ring.contains(&t));
            }
            other => panic!("expected uncovered triangle, got {other}"),
        }

        // A far-away lozenge is detached even though it is disjoint.
        let mut extra = corona.lozenges().to_vec();
        let detached = Lozenge::new(TriangleId::up(0, -3), TriangleId::down(0, -3)).unwrap();
        extra.push(detached);
        assert_eq!(
            is_valid_corona(&region, &extra),
            Err(CoronaViolation::DetachedLozenge(detached))
        );

        // Duplicating a lozenge is an overlap.
        let mut doubled = corona.lozenges().to_vec();
        doubled.push(corona.lozenges()[0]);
        assert!(matches!(
            is_valid_corona(&region, &doubled),
            Err(CoronaViolation::Overlap(_, _))
        ));

        // A lozenge using region triangles is rejected outright.
        let inner = region.triangles().iter().next().copied().unwrap();
        let mate = inner
            .adjacent()
            .into_iter()
            .find(|m| region.contains(*m))
            .unwrap();
        let inside = Lozenge::new(inner, mate).unwrap();
        assert_eq!(
            is_valid_corona(&region, &[inside]),
            Err(CoronaViolation::LozengeInsideRegion(inside))
        );
    }

    #[test]
    fn enumeration_is_deterministic() {
        let region = build_region(Shape::Diamond(1)).unwrap();
        let mut runs = Vec::new();
        for _ in 0..2 {
            let mut transcript = String::new();
            enumerate_coronas(&region, |c| transcript.push_str(&format!("{c:?}\n")));
            runs.push(transcript);
        }
        assert_eq!(runs[0].as_bytes(), runs[1].as_bytes());
        assert!(!runs[0].is_empty());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        for shape in [Shape::Hexagon(1), Shape::GenDiamond(2, 2)] {
            let region = build_region(shape).unwrap();
            let mut par = Vec::new();
            let hist_par = enumerate_coronas(&region, |c| par.push(c.clone()));
            let mut seq = Vec::new();
            let hist_seq = enumerate_coronas_sequential(&region, |c| seq.push(c.clone()));
            assert_eq!(hist_par, hist_seq);
            assert_eq!(par, seq);
            assert_eq!(
                enumerate_count_only(&region),
                enumerate_count_only_sequential(&region)
            );
        }
    }

    #[test]
    fn histogram_is_translation_invariant() {
        let region = build_region(Shape::GenDiamond(1, 2)).unwrap();
        let moved = region.translate(-4, 7);
        assert_eq!(enumerate_count_only(&region), enumerate_count_only(&moved));
    }

    #[test]
    fn histogram_is_invariant_under_side_cycling() {
        let a = enumerate_count_only(&build_region(Shape::GenHexagon(1, 2, 1)).unwrap());
        let b = enumerate_count_only(&build_region(Shape::GenHexagon(2, 1, 1)).unwrap());
        let c = enumerate_count_only(&build_region(Shape::GenHexagon(1, 1, 2)).unwrap());
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn support_is_four_consecutive_sizes() {
        for (shape, lo) in [
            (Shape::Hexagon(1), 9),
            (Shape::Diamond(2), 11),
            (Shape::GenDiamond(1, 2), 9),
        ] {
            let hist = enumerate_count_only(&build_region(shape).unwrap());
            assert_eq!(hist.support(), vec![lo, lo + 1, lo + 2, lo + 3]);
        }
    }
}

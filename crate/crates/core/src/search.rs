//! Exhaustive search for dominant coroot-lattice cocharacters whose induced
//! grading of a character satisfies the three Hodge-type properties:
//! symmetry (H1), gap-free support of the form {2i - l} (H2), and the outer
//! estimates dim V^{l-2} >= 2, dim V^l >= 3 (H3).
//!
//! Candidates are enumerated through d = C·a, the vector of pairings with
//! the simple roots: dominance becomes d >= 0, the pairing bound becomes one
//! linear inequality per dominant support weight, and membership in the
//! coroot lattice is the integrality of a = C^{-1}·d. The stream can be
//! partitioned by residue of d_1 for parallel runs; merging re-sorts rows
//! and witnesses so the outcome is independent of the partition.

use core::fmt;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::character::Character;
use crate::root_system::{Coweight, Label, RootSystem, Weight};
use crate::{Error, Result};

/// The grading induced on a character by a cocharacter: dimensions of the
/// pairing level spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    label: Label,
    levels: BTreeMap<i64, u64>,
}

impl Grading {
    pub fn label(&self) -> Label {
        self.label
    }

    /// Iterates (level, dimension) in increasing level order; absent levels
    /// have dimension zero.
    pub fn levels(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.levels.iter().map(|(&n, &d)| (n, d))
    }

    pub fn dimension_at(&self, level: i64) -> u64 {
        self.levels.get(&level).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.levels.values().sum()
    }

    /// The largest absolute value of a populated level, or None when empty.
    pub fn length(&self) -> Option<i64> {
        self.levels.keys().map(|&n| n.abs()).max()
    }
}

/// Grades a character by a cocharacter: each weight contributes its
/// multiplicity at its pairing value.
pub fn grading(rs: &RootSystem, character: &Character, cocharacter: &Coweight) -> Result<Grading> {
    if rs.label() != character.label() {
        return Err(Error::MixedRootSystems { left: rs.label(), right: character.label() });
    }
    let mut levels: BTreeMap<i64, u64> = BTreeMap::new();
    for (w, m) in character.weights() {
        *levels.entry(rs.pairing(w, cocharacter)?).or_insert(0) += m;
    }
    Ok(Grading { label: rs.label(), levels })
}

/// An admissible grading written as Hodge numbers h^0..h^l, where h^i is
/// the dimension of the level-(2i - l) space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct HodgeRow {
    h: Vec<u64>,
}

impl HodgeRow {
    /// Builds a row from its Hodge numbers; the length l is implied.
    pub fn new(h: Vec<u64>) -> Self {
        assert!(!h.is_empty());
        HodgeRow { h }
    }

    /// The length l of the row: top level, and number of entries minus one.
    pub fn ell(&self) -> i64 {
        self.h.len() as i64 - 1
    }

    pub fn hodge_numbers(&self) -> &[u64] {
        &self.h
    }

    pub fn dimension(&self) -> u64 {
        self.h.iter().sum()
    }

    /// h^0, which equals h^l by symmetry.
    pub fn end_dimension(&self) -> u64 {
        self.h[0]
    }
}

impl fmt::Display for HodgeRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.h.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

// Canonical row order: increasing length, then decreasing lexicographic on
// the Hodge numbers, so rows with larger outer dimensions come first.
impl Ord for HodgeRow {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.h.len().cmp(&other.h.len()).then_with(|| other.h.cmp(&self.h))
    }
}

impl PartialOrd for HodgeRow {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Checks properties H1, H2, H3 as stated, with the default end threshold 3.
pub fn check_hodge_properties(grading: &Grading) -> Option<HodgeRow> {
    check_hodge_properties_with_min_end(grading, 3)
}

/// Same checks with an explicit threshold for the end dimension h^l. The
/// verbatim H3 statement corresponds to `min_end = 3`; the published E7
/// table corresponds to `min_end = 4` (see the search parameter defaults).
pub fn check_hodge_properties_with_min_end(grading: &Grading, min_end: u64) -> Option<HodgeRow> {
    let ell = grading.length()?;
    let mut h = Vec::with_capacity(ell as usize + 1);
    for i in 0..=ell {
        let v = grading.dimension_at(2 * i - ell);
        if v == 0 {
            return None; // H2: a gap in the progression
        }
        h.push(v);
    }
    // H2: nothing outside the progression {2i - l}.
    if h.iter().sum::<u64>() != grading.dimension() {
        return None;
    }
    // H1: symmetric dimensions.
    let n = h.len();
    for i in 0..n / 2 {
        if h[i] != h[n - 1 - i] {
            return None;
        }
    }
    // H3: dim V^{l-2} >= 2 (zero when l = 0) and dim V^l >= min_end.
    let second = if ell >= 1 { h[ell as usize - 1] } else { 0 };
    if second < 2 || h[ell as usize] < min_end {
        return None;
    }
    Some(HodgeRow::new(h))
}

/// Length-parity filter for searches.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn matches(self, ell: i64) -> bool {
        match self {
            Parity::Odd => ell.rem_euclid(2) == 1,
            Parity::Even => ell.rem_euclid(2) == 0,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Search parameters: the pairing bound, an optional length-parity filter,
/// and the end-dimension threshold applied on top of H1-H3.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchParams {
    pub bound: i64,
    pub parity: Option<Parity>,
    pub min_end: u64,
}

impl SearchParams {
    pub fn new(bound: i64) -> Self {
        SearchParams { bound, parity: None, min_end: 3 }
    }

    pub fn with_parity(self, parity: Parity) -> Self {
        SearchParams { parity: Some(parity), ..self }
    }

    pub fn with_min_end(self, min_end: u64) -> Self {
        SearchParams { min_end, ..self }
    }
}

/// Streaming enumeration of the dominant coroot-lattice cocharacters whose
/// pairings with all weights of a character lie in [-bound, bound], in
/// increasing lexicographic order of d = C·a.
#[derive(Clone, Debug)]
pub struct CocharacterStream {
    rank: usize,
    det: i64,
    adjugate: Vec<Vec<i64>>,
    /// adjugate·m for each dominant representative m of a support orbit or a
    /// negated support orbit; entries are strictly positive, making the
    /// bound constraints monotone in d.
    prune: Vec<Vec<i64>>,
    /// det(C)·bound, the right side of every pruning inequality.
    limit: i64,
    d: Vec<i64>,
    start0: i64,
    stride0: i64,
    done: bool,
}

impl CocharacterStream {
    fn new_impl(
        rs: &RootSystem,
        character: &Character,
        bound: i64,
        start0: i64,
        stride0: i64,
    ) -> Result<Self> {
        if rs.label() != character.label() {
            return Err(Error::MixedRootSystems { left: rs.label(), right: character.label() });
        }
        if bound < 0 {
            return Err(Error::NegativeBound { bound });
        }
        let mut reps: BTreeSet<Weight> = BTreeSet::new();
        for (w, _) in character.weights() {
            reps.insert(rs.dominant_representative(w)?);
            reps.insert(rs.dominant_representative(&w.negated())?);
        }
        reps.remove(&Weight::zero(rs.rank()));
        if reps.is_empty() {
            return Err(Error::TrivialWeightSupport);
        }
        let adjugate = rs.adjugate().to_vec();
        let prune: Vec<Vec<i64>> = reps
            .iter()
            .map(|m| {
                (0..rs.rank())
                    .map(|i| (0..rs.rank()).map(|j| adjugate[i][j] * m.labels()[j]).sum())
                    .collect()
            })
            .collect();
        debug_assert!(prune.iter().all(|v| v.iter().all(|&x| x > 0)));
        let mut d = vec![0i64; rs.rank()];
        d[0] = start0;
        let mut stream = CocharacterStream {
            rank: rs.rank(),
            det: rs.det(),
            adjugate,
            prune,
            limit: rs.det() * bound,
            d,
            start0,
            stride0,
            done: false,
        };
        stream.done = !stream.feasible();
        Ok(stream)
    }

    fn feasible(&self) -> bool {
        self.prune
            .iter()
            .all(|v| v.iter().zip(&self.d).map(|(&a, &b)| a * b).sum::<i64>() <= self.limit)
    }

    /// Moves to the next feasible d in lexicographic order; false when the
    /// box is exhausted. Positions after the incremented one are already at
    /// their starts, and the constraints are monotone, so a failed increment
    /// at a position rules out its whole subtree.
    fn advance(&mut self) -> bool {
        let mut pos = self.rank - 1;
        loop {
            self.d[pos] += if pos == 0 { self.stride0 } else { 1 };
            if self.feasible() {
                return true;
            }
            self.d[pos] = if pos == 0 { self.start0 } else { 0 };
            if pos == 0 {
                return false;
            }
            pos -= 1;
        }
    }

    /// a = C^{-1}·d when integral: the candidate lies in the coroot lattice.
    fn integral_point(&self) -> Option<Coweight> {
        let mut coords = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let scaled: i64 = (0..self.rank).map(|j| self.adjugate[i][j] * self.d[j]).sum();
            if scaled % self.det != 0 {
                return None;
            }
            coords.push(scaled / self.det);
        }
        Some(Coweight::new(coords))
    }
}

impl Iterator for CocharacterStream {
    type Item = Coweight;

    fn next(&mut self) -> Option<Coweight> {
        while !self.done {
            let hit = self.integral_point();
            self.done = !self.advance();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Streams every dominant coroot-lattice cocharacter with all pairings
/// against the character's weights bounded by `bound` in absolute value.
/// Errors if all weights are zero, since nothing would bound the stream.
pub fn enumerate_dominant_cocharacters(
    rs: &RootSystem,
    character: &Character,
    bound: i64,
) -> Result<CocharacterStream> {
    CocharacterStream::new_impl(rs, character, bound, 0, 1)
}

/// The sub-stream of candidates with d_1 congruent to `chunk_index` modulo
/// `chunk_count`; the full stream is the disjoint union over all indices.
pub fn enumerate_dominant_cocharacters_chunk(
    rs: &RootSystem,
    character: &Character,
    bound: i64,
    chunk_index: u32,
    chunk_count: u32,
) -> Result<CocharacterStream> {
    assert!(chunk_count >= 1 && chunk_index < chunk_count);
    CocharacterStream::new_impl(rs, character, bound, chunk_index as i64, chunk_count as i64)
}

/// One admissible row with every dominant cocharacter that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchRow {
    pub row: HodgeRow,
    pub witnesses: Vec<Coweight>,
}

/// The outcome of an exhaustive search: all admissible rows in canonical
/// order with their witnesses, plus the scan size for reporting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchResult {
    label: Label,
    rep_dimension: u64,
    params: SearchParams,
    candidates: u64,
    rows: Vec<SearchRow>,
}

impl SearchResult {
    pub fn label(&self) -> Label {
        self.label
    }

    pub fn rep_dimension(&self) -> u64 {
        self.rep_dimension
    }

    pub fn params(&self) -> SearchParams {
        self.params
    }

    /// Number of coroot-lattice candidates scanned.
    pub fn candidates(&self) -> u64 {
        self.candidates
    }

    pub fn rows(&self) -> &[SearchRow] {
        &self.rows
    }

    /// Finds the row with the given Hodge numbers.
    pub fn find_row(&self, hodge_numbers: &[u64]) -> Result<&SearchRow> {
        self.rows
            .iter()
            .find(|r| r.row.hodge_numbers() == hodge_numbers)
            .ok_or(Error::RowNotFound)
    }
}

// The histogram fast path: levels in a flat buffer indexed by n + bound.
// Must stay equivalent to grading() + check_hodge_properties_with_min_end();
// the unit tests compare the two on full streams.
fn row_from_histogram(hist: &[u64], bound: i64, min_end: u64) -> Option<Vec<u64>> {
    let mut ell = -1i64;
    for (i, &v) in hist.iter().enumerate() {
        if v > 0 {
            ell = ell.max((i as i64 - bound).abs());
        }
    }
    if ell < 0 {
        return None;
    }
    let mut h = Vec::with_capacity(ell as usize + 1);
    let mut total = 0u64;
    for i in 0..=ell {
        let v = hist[(2 * i - ell + bound) as usize];
        if v == 0 {
            return None;
        }
        total += v;
        h.push(v);
    }
    if total != hist.iter().sum::<u64>() {
        return None;
    }
    let n = h.len();
    for i in 0..n / 2 {
        if h[i] != h[n - 1 - i] {
            return None;
        }
    }
    let second = if ell >= 1 { h[ell as usize - 1] } else { 0 };
    if second < 2 || h[ell as usize] < min_end {
        return None;
    }
    Some(h)
}

fn search_over(
    rs: &RootSystem,
    character: &Character,
    params: SearchParams,
    stream: CocharacterStream,
) -> SearchResult {
    let weights: Vec<(Vec<i64>, u64)> =
        character.weights().map(|(w, m)| (w.labels().to_vec(), m)).collect();
    let bound = params.bound;
    let mut hist = vec![0u64; (2 * bound + 1) as usize];
    let mut found: BTreeMap<HodgeRow, Vec<Coweight>> = BTreeMap::new();
    let mut candidates = 0u64;
    for cw in stream {
        candidates += 1;
        hist.fill(0);
        for (labels, m) in &weights {
            let n: i64 = labels.iter().zip(cw.coords()).map(|(&a, &b)| a * b).sum();
            hist[(n + bound) as usize] += m;
        }
        let Some(h) = row_from_histogram(&hist, bound, params.min_end) else { continue };
        if let Some(p) = params.parity {
            if !p.matches(h.len() as i64 - 1) {
                continue;
            }
        }
        found.entry(HodgeRow::new(h)).or_default().push(cw);
    }
    let rows = found
        .into_iter()
        .map(|(row, mut witnesses)| {
            witnesses.sort();
            SearchRow { row, witnesses }
        })
        .collect();
    SearchResult {
        label: rs.label(),
        rep_dimension: character.dimension(),
        params,
        candidates,
        rows,
    }
}

/// Runs the exhaustive search over the full candidate stream.
pub fn search_hodge_rows(
    rs: &RootSystem,
    character: &Character,
    params: SearchParams,
) -> Result<SearchResult> {
    let stream = enumerate_dominant_cocharacters(rs, character, params.bound)?;
    Ok(search_over(rs, character, params, stream))
}

/// Runs the search over one chunk of the candidate stream; combine chunks
/// with [`merge_search_results`].
pub fn search_hodge_rows_chunk(
    rs: &RootSystem,
    character: &Character,
    params: SearchParams,
    chunk_index: u32,
    chunk_count: u32,
) -> Result<SearchResult> {
    let stream =
        enumerate_dominant_cocharacters_chunk(rs, character, params.bound, chunk_index, chunk_count)?;
    Ok(search_over(rs, character, params, stream))
}

/// Merges partial results from a partition of the candidate space. Rows and
/// witnesses are re-sorted canonically, so the merge is independent of the
/// partition shape and order.
pub fn merge_search_results(parts: Vec<SearchResult>) -> Result<SearchResult> {
    let Some(first) = parts.first() else { return Err(Error::EmptyMerge) };
    let (label, rep_dimension, params) = (first.label, first.rep_dimension, first.params);
    let mut found: BTreeMap<HodgeRow, BTreeSet<Coweight>> = BTreeMap::new();
    let mut candidates = 0u64;
    for part in parts {
        if part.label != label || part.params != params || part.rep_dimension != rep_dimension {
            return Err(Error::MergeMismatch {
                detail: alloc::format!(
                    "{} at {:?} vs {} at {:?}",
                    part.label,
                    part.params,
                    label,
                    params
                ),
            });
        }
        candidates += part.candidates;
        for sr in part.rows {
            found.entry(sr.row).or_default().extend(sr.witnesses);
        }
    }
    let rows = found
        .into_iter()
        .map(|(row, witnesses)| SearchRow { row, witnesses: witnesses.into_iter().collect() })
        .collect();
    Ok(SearchResult { label, rep_dimension, params, candidates, rows })
}

/// Describes a dominant cocharacter as a sum of fundamental coweights
/// (from d = C·a), tagging multiples of the highest-root coroot; falls back
/// to raw coordinates when not dominant.
pub fn identify_cocharacter(rs: &RootSystem, cocharacter: &Coweight) -> Result<String> {
    use core::fmt::Write;

    let d = rs.simple_root_pairings(cocharacter)?;
    if cocharacter.is_zero() {
        return Ok(String::from("0"));
    }
    if d.iter().any(|&x| x < 0) {
        return Ok(alloc::format!("{cocharacter}"));
    }
    let mut out = String::new();
    for (j, &dj) in d.iter().enumerate() {
        if dj == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if dj == 1 {
            let _ = write!(out, "w{}^v", j + 1);
        } else {
            let _ = write!(out, "{}*w{}^v", dj, j + 1);
        }
    }
    let marks = rs.marks();
    let k = cocharacter.coords()[0] / marks[0];
    if k >= 1 && cocharacter.coords().iter().zip(marks).all(|(&a, &m)| a == k * m) {
        if k == 1 {
            out.push_str(" = theta^v");
        } else {
            let _ = write!(out, " = {k}*theta^v");
        }
    }
    Ok(out)
}

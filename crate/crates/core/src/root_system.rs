//! Root-system data for the supported simply-laced types: Cartan matrices,
//! positive roots, Weyl orbits, and exact inner products.
//!
//! Conventions: nodes are numbered 1..=rank (Bourbaki numbering for E6/E7),
//! weights are row vectors of Dynkin labels, cocharacters are coordinate
//! vectors in the simple-coroot basis, and the pairing of a weight with a
//! cocharacter is the plain dot product of the two coordinate vectors.
//! Roots are normalized to squared length 2, so the inner product of weights
//! m, n is m^T C^{-1} n. To stay in integers we work with the adjugate
//! matrix det(C)·C^{-1} and divide by det(C) only at the boundary.

use core::fmt;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::{Error, Rational, Result};

/// The supported root-system types.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    A1,
    A2,
    A3,
    D4,
    E6,
    E7,
}

impl Label {
    pub const ALL: [Label; 6] = [Label::A1, Label::A2, Label::A3, Label::D4, Label::E6, Label::E7];

    pub fn rank(self) -> usize {
        match self {
            Label::A1 => 1,
            Label::A2 => 2,
            Label::A3 => 3,
            Label::D4 => 4,
            Label::E6 => 6,
            Label::E7 => 7,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Label::A1 => "A1",
            Label::A2 => "A2",
            Label::A3 => "A3",
            Label::D4 => "D4",
            Label::E6 => "E6",
            Label::E7 => "E7",
        }
    }

    /// Dynkin diagram edges, 1-based.
    fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Label::A1 => &[],
            Label::A2 => &[(1, 2)],
            Label::A3 => &[(1, 2), (2, 3)],
            Label::D4 => &[(1, 2), (2, 3), (2, 4)],
            Label::E6 => &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)],
            Label::E7 => &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
        }
    }

    /// Nodes whose fundamental representation is minuscule (all weights in
    /// one Weyl orbit).
    pub fn minuscule_nodes(self) -> &'static [usize] {
        match self {
            Label::A1 => &[1],
            Label::A2 => &[1, 2],
            Label::A3 => &[1, 2, 3],
            Label::D4 => &[1, 3, 4],
            Label::E6 => &[1, 6],
            Label::E7 => &[7],
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A weight as a vector of Dynkin labels (pairings with the simple coroots).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn negated(&self) -> Self {
        Weight(self.0.iter().map(|&m| -m).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// A cocharacter as a coordinate vector in the simple-coroot basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

/// Determinant by minor expansion; ranks here are at most 7.
fn det_i64(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut acc = 0i64;
    for col in 0..n {
        if m[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        acc += sign * m[0][col] * det_i64(&minor);
    }
    acc
}

fn minor(m: &[Vec<i64>], drop_row: usize, drop_col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != drop_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != drop_col)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// A root system with everything the rest of the crate needs precomputed.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: Label,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// det(C)·C^{-1}; integral, symmetric, all entries positive.
    adjugate: Vec<Vec<i64>>,
    det: i64,
    positive_roots: Vec<Weight>,
    highest_root: Weight,
    /// Coordinates of the highest root in the simple-root basis. Since all
    /// roots here have the same length these are also the coordinates of its
    /// coroot in the simple-coroot basis.
    marks: Vec<i64>,
}

impl RootSystem {
    pub fn new(label: Label) -> Self {
        let rank = label.rank();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for &(a, b) in label.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
        }

        let det = det_i64(&cartan);
        let mut adjugate = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adjugate[i][j] = sign * det_i64(&minor(&cartan, j, i));
            }
        }
        debug_assert!((0..rank).all(|i| (0..rank).all(|j| {
            let prod: i64 = (0..rank).map(|k| cartan[i][k] * adjugate[k][j]).sum();
            prod == if i == j { det } else { 0 }
        })));
        debug_assert!(adjugate.iter().all(|row| row.iter().all(|&v| v > 0)));

        // Roots as label vectors: close {±simple roots} under simple
        // reflections, then keep the nonnegative half.
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        for i in 0..rank {
            roots.insert(cartan[i].clone());
            roots.insert(cartan[i].iter().map(|&v| -v).collect());
        }
        loop {
            let mut grew = false;
            for labels in roots.iter().cloned().collect::<Vec<_>>() {
                for k in 0..rank {
                    let mut r = labels.clone();
                    let m_k = r[k];
                    for (j, slot) in r.iter_mut().enumerate() {
                        *slot -= m_k * cartan[j][k];
                    }
                    grew |= roots.insert(r);
                }
            }
            if !grew {
                break;
            }
        }
        let positive_roots: Vec<Weight> = roots
            .into_iter()
            .filter(|labels| {
                // Positive iff all simple-root coordinates are >= 0; the
                // coordinates are adjugate·labels / det and det > 0, so the
                // sign test works on the scaled vector.
                (0..rank).all(|i| (0..rank).map(|j| adjugate[i][j] * labels[j]).sum::<i64>() >= 0)
            })
            .map(Weight::new)
            .collect();
        let expected = match label {
            Label::A1 => 1,
            Label::A2 => 3,
            Label::A3 => 6,
            Label::D4 => 12,
            Label::E6 => 36,
            Label::E7 => 63,
        };
        assert_eq!(positive_roots.len(), expected);

        let dominant: Vec<&Weight> = positive_roots
            .iter()
            .filter(|w| w.labels().iter().all(|&m| m >= 0))
            .collect();
        assert_eq!(dominant.len(), 1);
        let highest_root = dominant[0].clone();
        let marks: Vec<i64> = (0..rank)
            .map(|i| {
                let scaled: i64 =
                    (0..rank).map(|j| adjugate[i][j] * highest_root.labels()[j]).sum();
                assert_eq!(scaled % det, 0);
                scaled / det
            })
            .collect();

        RootSystem { label, rank, cartan, adjugate, det, positive_roots, highest_root, marks }
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix rows; symmetric for these types.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// det(C)·C^{-1}, integral with all entries positive.
    pub fn adjugate(&self) -> &[Vec<i64>] {
        &self.adjugate
    }

    pub fn det(&self) -> i64 {
        self.det
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    /// Simple-root coordinates of the highest root.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// The coroot of the highest root, in simple-coroot coordinates.
    pub fn coroot_of_highest_root(&self) -> Coweight {
        Coweight::new(self.marks.clone())
    }

    /// Half the sum of positive roots; all Dynkin labels are 1.
    pub fn weyl_vector(&self) -> Weight {
        Weight::new(vec![1; self.rank])
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found })
        }
    }

    fn check_node(&self, node: usize) -> Result<()> {
        if (1..=self.rank).contains(&node) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        }
    }

    /// The fundamental weight of a node (1-based).
    pub fn fundamental_weight(&self, node: usize) -> Result<Weight> {
        self.check_node(node)?;
        let mut labels = vec![0; self.rank];
        labels[node - 1] = 1;
        Ok(Weight::new(labels))
    }

    /// Reflection in the simple root of a node (1-based).
    pub fn simple_reflection(&self, w: &Weight, node: usize) -> Result<Weight> {
        self.check_rank(w.rank())?;
        self.check_node(node)?;
        let mut labels = w.labels().to_vec();
        self.reflect_in_place(&mut labels, node - 1);
        Ok(Weight::new(labels))
    }

    /// s_k(m) = m - m_k · (k-th column of C); columns equal rows here.
    fn reflect_in_place(&self, labels: &mut [i64], k: usize) {
        let m_k = labels[k];
        if m_k == 0 {
            return;
        }
        for (j, slot) in labels.iter_mut().enumerate() {
            *slot -= m_k * self.cartan[j][k];
        }
    }

    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        self.check_rank(w.rank())?;
        Ok(w.labels().iter().all(|&m| m >= 0))
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Result<Weight> {
        self.check_rank(w.rank())?;
        let mut labels = w.labels().to_vec();
        // Reflecting at a negative label strictly increases the height
        // 2·adjugate-weighted sum, so this terminates.
        'outer: loop {
            for k in 0..self.rank {
                if labels[k] < 0 {
                    self.reflect_in_place(&mut labels, k);
                    continue 'outer;
                }
            }
            return Ok(Weight::new(labels));
        }
    }

    /// The full Weyl orbit of `w`, sorted.
    pub fn orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        let top = self.dominant_representative(w)?;
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier = vec![top.labels().to_vec()];
        seen.insert(frontier[0].clone());
        while let Some(labels) = frontier.pop() {
            for k in 0..self.rank {
                let mut next = labels.clone();
                self.reflect_in_place(&mut next, k);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Ok(seen.into_iter().map(Weight::new).collect())
    }

    /// Pairing of a weight with a cocharacter: the dot product of Dynkin
    /// labels with simple-coroot coordinates.
    pub fn pairing(&self, w: &Weight, a: &Coweight) -> Result<i64> {
        self.check_rank(w.rank())?;
        self.check_rank(a.rank())?;
        Ok(w.labels().iter().zip(a.coords()).map(|(&m, &c)| m * c).sum())
    }

    /// Pairings of the simple roots with a cocharacter, i.e. C·a. The
    /// cocharacter is dominant iff all entries are >= 0.
    pub fn simple_root_pairings(&self, a: &Coweight) -> Result<Vec<i64>> {
        self.check_rank(a.rank())?;
        Ok((0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * a.coords()[j]).sum())
            .collect())
    }

    pub fn is_dominant_coweight(&self, a: &Coweight) -> Result<bool> {
        Ok(self.simple_root_pairings(a)?.iter().all(|&d| d >= 0))
    }

    /// det(C)·(m, n) for weights m, n; integral since (m, n) = m^T C^{-1} n.
    pub fn scaled_inner(&self, m: &Weight, n: &Weight) -> Result<i64> {
        self.check_rank(m.rank())?;
        self.check_rank(n.rank())?;
        let mut acc = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += m.labels()[i] * self.adjugate[i][j] * n.labels()[j];
            }
        }
        Ok(acc)
    }

    /// Inner product normalized so that every root has squared length 2.
    pub fn inner_product(&self, m: &Weight, n: &Weight) -> Result<Rational> {
        Ok(Rational::new(self.scaled_inner(m, n)?, self.det))
    }

    /// Dimension of the irreducible representation with highest weight
    /// `lambda`, by the Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        if !self.is_dominant(lambda)? {
            return Err(Error::NotDominant { weight: lambda.clone() });
        }
        let rho = self.weyl_vector();
        let shifted = Weight::new(
            lambda.labels().iter().zip(rho.labels()).map(|(&m, &r)| m + r).collect(),
        );
        // Each factor is det·(λ+ρ, α) / det·(ρ, α); the det powers cancel.
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= BigInt::from(self.scaled_inner(&shifted, alpha)?);
            den *= BigInt::from(self.scaled_inner(&rho, alpha)?);
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(num_traits::Zero::is_zero(&r));
        Ok(q.to_biguint().expect("dimension is positive"))
    }
}

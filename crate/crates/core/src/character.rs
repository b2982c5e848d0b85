//! Characters as exact weight-multiplicity maps: construction via the
//! Freudenthal recursion, tensor and square operations, decomposition into
//! irreducibles, and expansion in the Weyl-orbit basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::root_system::{Label, RootSystem, Weight};
use crate::{Error, Result};

/// A finite weight-multiplicity map over a fixed root system. Multiplicities
/// are strictly positive; absent weights have multiplicity zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    label: Label,
    mults: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new(label: Label) -> Self {
        Character { label, mults: BTreeMap::new() }
    }

    pub fn label(&self) -> Label {
        self.label
    }

    /// Adds `mult` copies of a weight, merging with any existing entry.
    pub fn add_weight(&mut self, weight: Weight, mult: u64) {
        if mult > 0 {
            *self.mults.entry(weight).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, weight: &Weight) -> u64 {
        self.mults.get(weight).copied().unwrap_or(0)
    }

    /// Total dimension: the sum of all multiplicities.
    pub fn dimension(&self) -> u64 {
        self.mults.values().sum()
    }

    /// Number of distinct weights.
    pub fn support_size(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Iterates weights with multiplicities in sorted order.
    pub fn weights(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    /// The character of the dual representation: every weight negated.
    pub fn dual(&self) -> Character {
        let mut out = Character::new(self.label);
        for (w, m) in self.weights() {
            out.add_weight(w.negated(), m);
        }
        out
    }

    fn check_same_system(&self, other: &Character) -> Result<()> {
        if self.label == other.label {
            Ok(())
        } else {
            Err(Error::MixedRootSystems { left: self.label, right: other.label })
        }
    }

    /// Pointwise convolution: the character of the tensor product.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        self.check_same_system(other)?;
        let mut out = Character::new(self.label);
        for (w, m) in self.weights() {
            for (v, n) in other.weights() {
                let sum =
                    Weight::new(w.labels().iter().zip(v.labels()).map(|(&a, &b)| a + b).collect());
                out.add_weight(sum, m * n);
            }
        }
        Ok(out)
    }

    /// The character of the symmetric square.
    pub fn sym_square(&self) -> Character {
        self.square(true)
    }

    /// The character of the alternating square.
    pub fn alt_square(&self) -> Character {
        self.square(false)
    }

    // Over distinct weights: a weight of multiplicity m contributes
    // m(m+1)/2 (sym) or m(m-1)/2 (alt) at its double, and each unordered
    // pair of distinct weights contributes the product of multiplicities at
    // the sum.
    fn square(&self, symmetric: bool) -> Character {
        let entries: Vec<(&Weight, u64)> = self.weights().collect();
        let mut out = Character::new(self.label);
        for (i, &(w, m)) in entries.iter().enumerate() {
            let diag = if symmetric { m * (m + 1) / 2 } else { m * (m - 1) / 2 };
            out.add_weight(Weight::new(w.labels().iter().map(|&a| 2 * a).collect()), diag);
            for &(v, n) in &entries[i + 1..] {
                let sum =
                    Weight::new(w.labels().iter().zip(v.labels()).map(|(&a, &b)| a + b).collect());
                out.add_weight(sum, m * n);
            }
        }
        out
    }
}

/// The one-dimensional trivial character.
pub fn trivial_character(rs: &RootSystem) -> Character {
    let mut out = Character::new(rs.label());
    out.add_weight(Weight::zero(rs.rank()), 1);
    out
}

/// The adjoint character: every root once plus the zero weight with
/// multiplicity equal to the rank.
pub fn adjoint_character(rs: &RootSystem) -> Character {
    let mut out = Character::new(rs.label());
    for alpha in rs.positive_roots() {
        out.add_weight(alpha.clone(), 1);
        out.add_weight(alpha.negated(), 1);
    }
    out.add_weight(Weight::zero(rs.rank()), rs.rank() as u64);
    out
}

/// The character of the minuscule fundamental representation at `node`:
/// a single Weyl orbit, all multiplicities 1.
pub fn minuscule_character(rs: &RootSystem, node: usize) -> Result<Character> {
    let fw = rs.fundamental_weight(node)?;
    if !rs.label().minuscule_nodes().contains(&node) {
        return Err(Error::NotMinuscule { label: rs.label(), node });
    }
    let orbit = rs.orbit(&fw)?;
    debug_assert_eq!(BigUint::from(orbit.len()), rs.weyl_dimension(&fw).unwrap());
    let mut out = Character::new(rs.label());
    for w in orbit {
        out.add_weight(w, 1);
    }
    Ok(out)
}

/// The highest weight of the dual of the irreducible with highest weight
/// `lambda`: the dominant representative of its negation.
pub fn dual_highest_weight(rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant { weight: lambda.clone() });
    }
    rs.dominant_representative(&lambda.negated())
}

/// Multiplicities of the dominant weights of the irreducible representation
/// with highest weight `lambda`, by the Freudenthal recursion.
///
/// All arithmetic is integral: both sides of the recursion are scaled by
/// det(C) and every division is asserted exact.
pub fn dominant_weight_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
) -> Result<BTreeMap<Weight, u64>> {
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant { weight: lambda.clone() });
    }
    let rank = rs.rank();
    let adj = rs.adjugate();
    let det = rs.det();
    let rho = rs.weyl_vector();
    let shift = |w: &Weight| -> Weight {
        Weight::new(w.labels().iter().zip(rho.labels()).map(|(&a, &b)| a + b).collect())
    };

    // Dominant weights of V(lambda) are the dominant mu with lambda - mu a
    // nonnegative integer combination of simple roots: mu = lambda - C·k
    // over the box 0 <= k_i <= (C^{-1}·lambda)_i.
    let box_max: Vec<i64> = (0..rank)
        .map(|i| {
            let scaled: i64 = (0..rank).map(|j| adj[i][j] * lambda.labels()[j]).sum();
            scaled / det
        })
        .collect();
    let mut candidates: Vec<(i64, Weight)> = Vec::new();
    let mut k = alloc::vec![0i64; rank];
    'box_walk: loop {
        let mu = Weight::new(
            (0..rank)
                .map(|i| {
                    lambda.labels()[i]
                        - (0..rank).map(|j| rs.cartan_matrix()[i][j] * k[j]).sum::<i64>()
                })
                .collect(),
        );
        if mu.labels().iter().all(|&m| m >= 0) {
            let shifted = shift(&mu);
            candidates.push((rs.scaled_inner(&shifted, &shifted)?, mu));
        }
        let mut pos = rank;
        while pos > 0 {
            pos -= 1;
            if k[pos] < box_max[pos] {
                k[pos] += 1;
                continue 'box_walk;
            }
            k[pos] = 0;
        }
        break;
    }

    // Recurse in decreasing order of |mu + rho|^2; every weight the right
    // side consults is strictly higher in that order.
    candidates.sort_by(|a, b| b.cmp(a));
    let lambda_norm = candidates[0].0;
    debug_assert_eq!(candidates[0].1, *lambda);

    let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
    for (norm, mu) in &candidates {
        if mu == lambda {
            mults.insert(mu.clone(), 1);
            continue;
        }
        // det-scaled denominator |lambda + rho|^2 - |mu + rho|^2 > 0.
        let denom = lambda_norm - norm;
        debug_assert!(denom > 0);
        let mut total: i64 = 0;
        for alpha in rs.positive_roots() {
            let mut step = 1i64;
            loop {
                let probe = Weight::new(
                    mu.labels()
                        .iter()
                        .zip(alpha.labels())
                        .map(|(&a, &b)| a + step * b)
                        .collect(),
                );
                let rep = rs.dominant_representative(&probe)?;
                let Some(&m) = mults.get(&rep) else { break };
                total += m as i64 * rs.scaled_inner(&probe, alpha)?;
                step += 1;
            }
        }
        let num = 2 * total;
        assert_eq!(num % denom, 0);
        let m = num / denom;
        assert!(m > 0);
        mults.insert(mu.clone(), m as u64);
    }
    Ok(mults)
}

/// The full character of the irreducible representation with highest weight
/// `lambda`: dominant multiplicities spread over their Weyl orbits.
pub fn freudenthal_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let mut out = Character::new(rs.label());
    for (mu, m) in dominant_weight_multiplicities(rs, lambda)? {
        for w in rs.orbit(&mu)? {
            out.add_weight(w, m);
        }
    }
    Ok(out)
}

/// A multiset of irreducible summands, keyed by highest weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    label: Label,
    summands: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn label(&self) -> Label {
        self.label
    }

    /// Iterates (highest weight, multiplicity) in sorted order.
    pub fn summands(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.summands.iter().map(|(w, &m)| (w, m))
    }

    pub fn multiplicity(&self, lambda: &Weight) -> u64 {
        self.summands.get(lambda).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Rebuilds the full character, summand by summand.
    pub fn expand(&self, rs: &RootSystem) -> Result<Character> {
        if rs.label() != self.label {
            return Err(Error::MixedRootSystems { left: rs.label(), right: self.label });
        }
        let mut out = Character::new(self.label);
        for (lambda, count) in self.summands() {
            let ch = freudenthal_character(rs, lambda)?;
            for (w, m) in ch.weights() {
                out.add_weight(w.clone(), m * count);
            }
        }
        Ok(out)
    }
}

/// Splits a character into irreducible summands by repeatedly peeling the
/// highest remaining weight.
///
/// Among the weights of maximal norm the dominant one is a highest weight of
/// some summand: reflections preserve the norm, and any dominant weight
/// strictly below another dominant weight has strictly smaller norm. A
/// negative multiplicity at any point proves the input was not a character
/// and is reported as an error.
pub fn decompose(rs: &RootSystem, character: &Character) -> Result<Decomposition> {
    if rs.label() != character.label() {
        return Err(Error::MixedRootSystems { left: rs.label(), right: character.label() });
    }
    let mut rem: BTreeMap<Weight, i64> = BTreeMap::new();
    for (w, m) in character.weights() {
        rem.insert(w.clone(), m as i64);
    }
    let mut summands: BTreeMap<Weight, u64> = BTreeMap::new();
    loop {
        rem.retain(|_, &mut m| m != 0);
        if rem.is_empty() {
            return Ok(Decomposition { label: character.label(), summands });
        }
        let mut max_norm = i64::MIN;
        for w in rem.keys() {
            max_norm = max_norm.max(rs.scaled_inner(w, w)?);
        }
        let mut top: Option<Weight> = None;
        for w in rem.keys() {
            if rs.scaled_inner(w, w)? == max_norm && w.labels().iter().all(|&m| m >= 0) {
                top = Some(w.clone());
            }
        }
        let Some(top) = top else {
            // A Weyl-invariant multiset always has a dominant weight in its
            // norm-maximal stratum; report one of the offenders.
            let witness = rem
                .keys()
                .find(|w| rs.scaled_inner(w, w).unwrap() == max_norm)
                .expect("stratum is nonempty")
                .clone();
            return Err(Error::NotACharacter { weight: witness });
        };
        let count = rem[&top];
        if count < 0 {
            return Err(Error::NotACharacter { weight: top });
        }
        let ch = freudenthal_character(rs, &top)?;
        for (w, m) in ch.weights() {
            let slot = rem.entry(w.clone()).or_insert(0);
            *slot -= count * m as i64;
            if *slot < 0 {
                return Err(Error::NotACharacter { weight: w.clone() });
            }
        }
        summands.insert(top, count as u64);
    }
}

/// A character written in the Weyl-orbit basis: integer coefficients on
/// orbit sums of dominant weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitCharacter {
    label: Label,
    coeffs: BTreeMap<Weight, i64>,
}

impl OrbitCharacter {
    pub fn label(&self) -> Label {
        self.label
    }

    /// Iterates (dominant weight, coefficient) in sorted order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, dominant: &Weight) -> i64 {
        self.coeffs.get(dominant).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rebuilds the weight-multiplicity map; errors if any coefficient is
    /// negative, since a character cannot have negative multiplicities.
    pub fn expand(&self, rs: &RootSystem) -> Result<Character> {
        if rs.label() != self.label {
            return Err(Error::MixedRootSystems { left: rs.label(), right: self.label });
        }
        let mut out = Character::new(self.label);
        for (w, c) in self.coefficients() {
            if c < 0 {
                return Err(Error::NotACharacter { weight: w.clone() });
            }
            for member in rs.orbit(w)? {
                out.add_weight(member, c as u64);
            }
        }
        Ok(out)
    }
}

/// Writes a Weyl-invariant character in the orbit basis. Orbits are
/// disjoint, so the coefficient of an orbit is the multiplicity at its
/// dominant representative; non-invariant input is an error.
pub fn orbit_character(rs: &RootSystem, character: &Character) -> Result<OrbitCharacter> {
    if rs.label() != character.label() {
        return Err(Error::MixedRootSystems { left: rs.label(), right: character.label() });
    }
    let mut coeffs: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut covered: u64 = 0;
    for (w, m) in character.weights() {
        let rep = rs.dominant_representative(w)?;
        if character.multiplicity(&rep) != m {
            return Err(Error::NotWeylInvariant { weight: w.clone() });
        }
        if rep == *w {
            covered += m * rs.orbit(&rep)?.len() as u64;
            coeffs.insert(rep, m as i64);
        }
    }
    // Equal multiplicity at each dominant representative is not enough if
    // some orbit member is missing entirely; the dimension count catches it.
    if covered != character.dimension() {
        let witness = character.weights().next().expect("nonempty by count mismatch").0.clone();
        return Err(Error::NotWeylInvariant { weight: witness });
    }
    Ok(OrbitCharacter { label: character.label(), coeffs })
}

/// The kind of invariant bilinear form on an irreducible representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FormType {
    /// Not self-dual: no invariant bilinear form.
    None,
    Orthogonal,
    Symplectic,
}

impl core::fmt::Display for FormType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            FormType::None => "none",
            FormType::Orthogonal => "orthogonal",
            FormType::Symplectic => "symplectic",
        })
    }
}

/// Determines the invariant bilinear form on the irreducible with highest
/// weight `lambda`: none unless self-dual, else symplectic exactly when the
/// trivial representation sits inside the alternating square.
pub fn invariant_form_type(rs: &RootSystem, lambda: &Weight) -> Result<FormType> {
    if dual_highest_weight(rs, lambda)? != *lambda {
        return Ok(FormType::None);
    }
    let alt = freudenthal_character(rs, lambda)?.alt_square();
    let dec = decompose(rs, &alt)?;
    if dec.multiplicity(&Weight::zero(rs.rank())) > 0 {
        Ok(FormType::Symplectic)
    } else {
        Ok(FormType::Orthogonal)
    }
}

/// Orbit-basis coefficients of V tensor V-dual for a minuscule node, with
/// and without the unit (trivial) summand.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSquareLedger {
    pub with_unit: OrbitCharacter,
    pub without_unit: OrbitCharacter,
}

/// Expands the tensor square V tensor V-dual of the minuscule
/// representation at `node` in the orbit basis, both with the unit summand
/// and with one copy of the unit removed.
pub fn tensor_square_orbit_ledger(rs: &RootSystem, node: usize) -> Result<TensorSquareLedger> {
    let v = minuscule_character(rs, node)?;
    let square = v.tensor(&v.dual())?;
    let with_unit = orbit_character(rs, &square)?;
    let mut coeffs: BTreeMap<Weight, i64> =
        with_unit.coefficients().map(|(w, c)| (w.clone(), c)).collect();
    let zero = Weight::zero(rs.rank());
    let at_zero = coeffs.get(&zero).copied().unwrap_or(0) - 1;
    if at_zero == 0 {
        coeffs.remove(&zero);
    } else {
        coeffs.insert(zero, at_zero);
    }
    let without_unit = OrbitCharacter { label: rs.label(), coeffs };
    Ok(TensorSquareLedger { with_unit, without_unit })
}

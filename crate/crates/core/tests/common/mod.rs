//! Helpers shared by the integration-test targets: the brute-force Kostant
//! oracle and the randomized decomposition round trip.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cochar_core::character::{
    decompose, dominant_weight_multiplicities, freudenthal_character, orbit_character, Character,
};
use cochar_core::root_system::{Label, RootSystem, Weight};

/// Weyl group elements as matrices acting on Dynkin labels, with signs.
fn weyl_group(rs: &RootSystem) -> Vec<(Vec<Vec<i64>>, i64)> {
    let rank = rs.rank();
    let cartan = rs.cartan_matrix();
    let mut gens: Vec<Vec<Vec<i64>>> = Vec::new();
    for k in 0..rank {
        let mut m = vec![vec![0i64; rank]; rank];
        for j in 0..rank {
            for i in 0..rank {
                let mut v = i64::from(i == j);
                if i == k {
                    v -= cartan[j][k];
                }
                m[j][i] = v;
            }
        }
        gens.push(m);
    }
    let id: Vec<Vec<i64>> =
        (0..rank).map(|j| (0..rank).map(|i| i64::from(i == j)).collect()).collect();
    let mut seen: BTreeMap<Vec<Vec<i64>>, i64> = BTreeMap::new();
    seen.insert(id.clone(), 1);
    let mut frontier = vec![(id, 1i64)];
    while let Some((m, sign)) = frontier.pop() {
        for g in &gens {
            let prod: Vec<Vec<i64>> = (0..rank)
                .map(|j| {
                    (0..rank).map(|i| (0..rank).map(|t| g[j][t] * m[t][i]).sum()).collect()
                })
                .collect();
            if !seen.contains_key(&prod) {
                seen.insert(prod.clone(), -sign);
                frontier.push((prod, -sign));
            }
        }
    }
    seen.into_iter().collect()
}

/// Number of ways to write `target` (simple-root coordinates) as a sum of
/// positive roots with nonnegative integer coefficients.
fn kostant_partitions(roots: &[Vec<i64>], idx: usize, target: &[i64]) -> u64 {
    if target.iter().all(|&v| v == 0) {
        return 1;
    }
    if idx == roots.len() {
        return 0;
    }
    let mut total = 0;
    let mut remaining = target.to_vec();
    loop {
        total += kostant_partitions(roots, idx + 1, &remaining);
        for (slot, &r) in remaining.iter_mut().zip(&roots[idx]) {
            *slot -= r;
        }
        if remaining.iter().any(|&v| v < 0) {
            return total;
        }
    }
}

/// Simple-root coordinates of a root-lattice weight.
fn root_coords(rs: &RootSystem, labels: &[i64]) -> Vec<i64> {
    let rank = rs.rank();
    let adj = rs.adjugate();
    (0..rank)
        .map(|i| {
            let scaled: i64 = (0..rank).map(|j| adj[i][j] * labels[j]).sum();
            assert_eq!(scaled % rs.det(), 0);
            scaled / rs.det()
        })
        .collect()
}

/// Weight multiplicity by the Weyl-alternated Kostant partition formula.
fn kostant_multiplicity(
    rs: &RootSystem,
    group: &[(Vec<Vec<i64>>, i64)],
    roots: &[Vec<i64>],
    lambda: &Weight,
    mu: &Weight,
) -> i64 {
    let rank = rs.rank();
    let shifted: Vec<i64> = lambda.labels().iter().map(|&v| v + 1).collect();
    let mu_shifted: Vec<i64> = mu.labels().iter().map(|&v| v + 1).collect();
    let mut total = 0i64;
    for (m, sign) in group {
        let moved: Vec<i64> = (0..rank)
            .map(|j| (0..rank).map(|i| m[j][i] * shifted[i]).sum::<i64>() - mu_shifted[j])
            .collect();
        let coords = root_coords(rs, &moved);
        if coords.iter().any(|&v| v < 0) {
            continue;
        }
        total += sign * kostant_partitions(roots, 0, &coords) as i64;
    }
    total
}

fn dominant_weights_with_sum_at_most(rank: usize, max_sum: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut labels = vec![0i64; rank];
    'walk: loop {
        out.push(Weight::new(labels.clone()));
        let mut pos = rank;
        while pos > 0 {
            pos -= 1;
            if labels.iter().sum::<i64>() < max_sum {
                labels[pos] += 1;
                continue 'walk;
            }
            labels[pos] = 0;
        }
        break;
    }
    out.sort();
    out.dedup();
    out
}

/// Asserts Freudenthal == Kostant on every dominant weight of every
/// irreducible with label sum at most `max_sum`.
pub fn check_label_against_kostant(label: Label, max_sum: i64) {
    let rs = RootSystem::new(label);
    let group = weyl_group(&rs);
    let expected_order = match label {
        Label::A1 => 2,
        Label::A2 => 6,
        Label::A3 => 24,
        Label::D4 => 192,
        _ => unreachable!("oracle is for small types"),
    };
    assert_eq!(group.len(), expected_order);
    let roots: Vec<Vec<i64>> =
        rs.positive_roots().iter().map(|a| root_coords(&rs, a.labels())).collect();
    for lambda in dominant_weights_with_sum_at_most(rs.rank(), max_sum) {
        let freudenthal = dominant_weight_multiplicities(&rs, &lambda).unwrap();
        for (mu, m) in &freudenthal {
            let oracle = kostant_multiplicity(&rs, &group, &roots, &lambda, mu);
            assert_eq!(oracle, *m as i64, "{label}: lambda {lambda}, mu {mu}");
        }
        // The oracle also vanishes off the support: 2*rho above the highest
        // weight stays in the root-lattice coset but is not a weight.
        let above = Weight::new(lambda.labels().iter().map(|&v| v + 2).collect());
        assert_eq!(kostant_multiplicity(&rs, &group, &roots, &lambda, &above), 0);
    }
}

/// Seeded random build-expand-decompose round trips over the small types;
/// asserts exact recovery of the chosen summands each time.
pub fn decomposition_round_trips(seed: u64, trials: usize) {
    let systems: Vec<RootSystem> =
        [Label::A1, Label::A2, Label::A3, Label::D4].iter().map(|&l| RootSystem::new(l)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let rs = &systems[trial % systems.len()];
        let mut chosen: BTreeMap<Weight, u64> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=3) {
            let lambda =
                Weight::new((0..rs.rank()).map(|_| rng.gen_range(0..=2i64)).collect());
            *chosen.entry(lambda).or_insert(0) += rng.gen_range(1..=3);
        }
        let mut character = Character::new(rs.label());
        for (lambda, count) in &chosen {
            for (w, m) in freudenthal_character(rs, lambda).unwrap().weights() {
                character.add_weight(w.clone(), m * count);
            }
        }

        let dec = decompose(rs, &character).unwrap();
        let got: BTreeMap<Weight, u64> = dec.summands().map(|(w, m)| (w.clone(), m)).collect();
        assert_eq!(got, chosen, "trial {trial} on {}", rs.label());
        assert_eq!(dec.expand(rs).unwrap(), character);

        let oc = orbit_character(rs, &character).unwrap();
        assert_eq!(oc.expand(rs).unwrap(), character);
    }
}

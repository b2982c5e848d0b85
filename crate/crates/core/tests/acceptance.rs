//! The acceptance gate: one test per primary criterion, each printing a
//! single verdict line. The two expensive searches run once per process and
//! are shared across criteria.

mod common;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use cochar_core::character::{
    adjoint_character, decompose, freudenthal_character, invariant_form_type,
    minuscule_character, orbit_character, tensor_square_orbit_ledger, FormType,
};
use cochar_core::constraints::{
    divisor_euler_exclusion, eulerian_number, factorial, fano_hilbert, feasibility_table,
    g_max_table, surface_ledger,
};
use cochar_core::root_system::{Coweight, Label, RootSystem, Weight};
use cochar_core::search::{
    grading, merge_search_results, search_hodge_rows, search_hodge_rows_chunk, Parity,
    SearchParams, SearchResult,
};

fn pass(criterion: u32, what: &str) {
    println!("ACCEPTANCE {criterion} PASS: {what}");
}

fn w(labels: &[i64]) -> Weight {
    Weight::new(labels.to_vec())
}

fn cw(coords: &[i64]) -> Coweight {
    Coweight::new(coords.to_vec())
}

/// E6 search over the 27-dimensional character at the completeness bound
/// dim V - 1 = 26, verbatim end threshold.
fn e6_search() -> &'static SearchResult {
    static CELL: OnceLock<SearchResult> = OnceLock::new();
    CELL.get_or_init(|| {
        let rs = RootSystem::new(Label::E6);
        let v = minuscule_character(&rs, 1).unwrap();
        search_hodge_rows(&rs, &v, SearchParams::new(26)).unwrap()
    })
}

/// E7 search over the 56-dimensional character at the completeness bound
/// 55, odd lengths, end threshold 4 (the published-table variant).
fn e7_search() -> &'static SearchResult {
    static CELL: OnceLock<SearchResult> = OnceLock::new();
    CELL.get_or_init(|| {
        let rs = RootSystem::new(Label::E7);
        let v = minuscule_character(&rs, 7).unwrap();
        let params = SearchParams::new(55).with_parity(Parity::Odd).with_min_end(4);
        search_hodge_rows(&rs, &v, params).unwrap()
    })
}

/// Same search with the verbatim end threshold 3.
fn e7_search_verbatim() -> &'static SearchResult {
    static CELL: OnceLock<SearchResult> = OnceLock::new();
    CELL.get_or_init(|| {
        let rs = RootSystem::new(Label::E7);
        let v = minuscule_character(&rs, 7).unwrap();
        let params = SearchParams::new(55).with_parity(Parity::Odd).with_min_end(3);
        search_hodge_rows(&rs, &v, params).unwrap()
    })
}

const E7_TABLE: [(&[u64], &[i64]); 10] = [
    (&[7, 21, 21, 7], &[4, 7, 8, 12, 9, 6, 3]),
    (&[6, 7, 15, 15, 7, 6], &[8, 11, 14, 20, 15, 10, 5]),
    (&[6, 6, 1, 15, 15, 1, 6, 6], &[12, 15, 20, 28, 21, 14, 7]),
    (&[5, 3, 10, 10, 10, 10, 3, 5], &[10, 15, 20, 28, 21, 14, 7]),
    (&[5, 2, 6, 5, 10, 10, 5, 6, 2, 5], &[14, 19, 26, 36, 27, 18, 9]),
    (&[4, 3, 3, 12, 6, 6, 12, 3, 3, 4], &[12, 19, 24, 36, 27, 18, 9]),
    (&[5, 2, 5, 1, 5, 10, 10, 5, 1, 5, 2, 5], &[18, 23, 32, 44, 33, 22, 11]),
    (&[4, 2, 3, 5, 8, 6, 6, 8, 5, 3, 2, 4], &[16, 23, 30, 44, 33, 22, 11]),
    (&[4, 2, 2, 5, 1, 8, 6, 6, 8, 1, 5, 2, 2, 4], &[20, 27, 36, 52, 39, 26, 13]),
    (&[4, 2, 2, 4, 1, 1, 8, 6, 6, 8, 1, 1, 4, 2, 2, 4], &[24, 31, 42, 60, 45, 30, 15]),
];

#[test]
fn criterion_1_e6_cocharacter_table() {
    let result = e6_search();
    let expected: Vec<(&[u64], Vec<Coweight>)> = vec![
        (&[6, 15, 6][..], vec![cw(&[2, 4, 4, 6, 4, 2])]),
        (&[3, 6, 9, 6, 3][..], vec![cw(&[4, 6, 8, 12, 8, 4])]),
        (&[3, 3, 3, 9, 3, 3, 3][..], vec![cw(&[6, 10, 12, 18, 12, 6])]),
    ];
    assert_eq!(result.rows().len(), 3);
    for (sr, (h, wits)) in result.rows().iter().zip(&expected) {
        assert_eq!(sr.row.hodge_numbers(), *h);
        assert_eq!(sr.row.dimension(), 27);
        assert_eq!(&sr.witnesses, wits);
    }
    assert_eq!(result.find_row(&[6, 15, 6]).unwrap().witnesses.len(), 1);
    pass(1, "E6 bound-26 search yields exactly the 3 rows, (6,15,6) with a unique witness");
}

#[test]
fn criterion_2_e7_cocharacter_table() {
    let result = e7_search();
    assert_eq!(result.rows().len(), 10);
    for (sr, (h, wit)) in result.rows().iter().zip(&E7_TABLE) {
        assert_eq!(sr.row.hodge_numbers(), *h);
        assert_eq!(sr.row.dimension(), 56);
        assert_eq!(sr.witnesses, vec![cw(wit)]);
    }
    // The end threshold 4 is what reproduces the published table; with the
    // verbatim threshold 3 the same scan admits further rows, every one of
    // them with end dimension exactly 3.
    let verbatim = e7_search_verbatim();
    assert!(verbatim.rows().len() > 10);
    let published: Vec<&[u64]> = E7_TABLE.iter().map(|&(h, _)| h).collect();
    for sr in verbatim.rows() {
        if !published.contains(&sr.row.hodge_numbers()) {
            assert_eq!(sr.row.end_dimension(), 3);
        } else {
            assert!(sr.row.end_dimension() >= 4);
        }
    }
    pass(2, "E7 bound-55 odd search yields exactly the 10 rows at end threshold 4");
}

#[test]
fn criterion_3_adjoint_grading() {
    let rs = RootSystem::new(Label::E6);
    let witness_row = e6_search().find_row(&[6, 15, 6]).unwrap();
    assert_eq!(witness_row.witnesses, vec![cw(&[2, 4, 4, 6, 4, 2])]);
    let g = grading(&rs, &adjoint_character(&rs), &witness_row.witnesses[0]).unwrap();
    let levels: Vec<(i64, u64)> = g.levels().collect();
    assert_eq!(levels, vec![(-4, 1), (-2, 20), (0, 36), (2, 20), (4, 1)]);
    pass(3, "the unique (6,15,6) witness grades the adjoint as (1,20,36,20,1)");
}

#[test]
fn criterion_4_tensor_square_decomposition() {
    let rs = RootSystem::new(Label::E6);
    let v = minuscule_character(&rs, 1).unwrap();
    let square = v.tensor(&v.dual()).unwrap();
    let dec = decompose(&rs, &square).unwrap();
    let zero = w(&[0, 0, 0, 0, 0, 0]);
    let alpha = w(&[0, 1, 0, 0, 0, 0]);
    let beta = w(&[1, 0, 0, 0, 0, 1]);
    let got: Vec<(Weight, u64)> = dec.summands().map(|(a, b)| (a.clone(), b)).collect();
    assert_eq!(got, vec![(zero.clone(), 1), (alpha.clone(), 1), (beta.clone(), 1)]);
    let dims: Vec<u64> = [&zero, &alpha, &beta]
        .iter()
        .map(|lam| freudenthal_character(&rs, lam).unwrap().dimension())
        .collect();
    assert_eq!(dims, vec![1, 78, 650]);

    let ledger_alpha = orbit_character(&rs, &freudenthal_character(&rs, &alpha).unwrap()).unwrap();
    let got: Vec<(Weight, i64)> =
        ledger_alpha.coefficients().map(|(a, c)| (a.clone(), c)).collect();
    assert_eq!(got, vec![(zero.clone(), 6), (alpha.clone(), 1)]);
    let ledger_beta = orbit_character(&rs, &freudenthal_character(&rs, &beta).unwrap()).unwrap();
    let got: Vec<(Weight, i64)> =
        ledger_beta.coefficients().map(|(a, c)| (a.clone(), c)).collect();
    assert_eq!(got, vec![(zero.clone(), 20), (alpha.clone(), 5), (beta.clone(), 1)]);

    let cc = tensor_square_orbit_ledger(&rs, 1).unwrap();
    let got: Vec<(Weight, i64)> =
        cc.without_unit.coefficients().map(|(a, c)| (a.clone(), c)).collect();
    assert_eq!(got, vec![(zero, 26), (alpha, 6), (beta, 1)]);
    pass(4, "27 (x) dual-27 = 1 + 78 + 650 with orbit ledgers (6,1), (20,5,1) and cycle ledger (26,6,1)");
}

#[test]
fn criterion_5_e7_alternating_square_and_form_types() {
    let e7 = RootSystem::new(Label::E7);
    let v56 = minuscule_character(&e7, 7).unwrap();
    let dec = decompose(&e7, &v56.alt_square()).unwrap();
    assert_eq!(dec.len(), 2);
    assert_eq!(dec.multiplicity(&w(&[0, 0, 0, 0, 0, 0, 0])), 1);
    let big = w(&[0, 0, 0, 0, 0, 1, 0]);
    assert_eq!(dec.multiplicity(&big), 1);
    assert_eq!(freudenthal_character(&e7, &big).unwrap().dimension(), 1539);
    assert_eq!(
        invariant_form_type(&e7, &w(&[0, 0, 0, 0, 0, 0, 1])).unwrap(),
        FormType::Symplectic
    );
    let e6 = RootSystem::new(Label::E6);
    assert_eq!(invariant_form_type(&e6, &w(&[1, 0, 0, 0, 0, 0])).unwrap(), FormType::None);
    pass(5, "Alt2(56) = 1 + 1539; the 56 is symplectic and the 27 has no invariant form");
}

#[test]
fn criterion_6_genus_constraint_tables() {
    let gmax_e6 = g_max_table(e6_search());
    assert_eq!(gmax_e6, [(2, 7), (4, 6), (6, 8)].into_iter().collect::<BTreeMap<_, _>>());
    let gmax_e7 = g_max_table(e7_search());
    assert_eq!(
        gmax_e7,
        [(3, 9), (5, 10), (7, 12), (9, 13), (11, 15), (13, 16), (15, 18)]
            .into_iter()
            .collect::<BTreeMap<_, _>>()
    );

    let feasible_e6 = feasibility_table(e6_search(), true);
    assert_eq!(feasible_e6.len(), 1);
    let entry = &feasible_e6[0];
    assert_eq!(
        (entry.d, entry.g_min, entry.g_max, entry.row.hodge_numbers(), entry.euler),
        (2, 5, 7, &[6, 15, 6][..], 27)
    );

    let feasible_e7 = feasibility_table(e7_search(), true);
    assert_eq!(feasible_e7.len(), 1);
    let entry = &feasible_e7[0];
    assert_eq!(
        (entry.d, entry.g_min, entry.g_max, entry.row.hodge_numbers(), entry.euler),
        (3, 7, 9, &[7, 21, 21, 7][..], -56)
    );
    pass(6, "g_max tables and the half-filtered feasibility entries match exactly");
}

#[test]
fn criterion_7_surface_ledger() {
    let ledger = surface_ledger(6, 27, 6).unwrap();
    assert_eq!(ledger.c1_sq, 45);
    assert_eq!(ledger.chi_omega1, -15);
    assert_eq!(ledger.c2_normal, 18);
    assert_eq!(ledger.deg_pi, vec![6, 9, 18]);
    assert_eq!(ledger.deg_gamma, vec![1, 3, 9]);
    let mut deg_y = ledger.deg_y.clone();
    deg_y.sort_unstable();
    assert_eq!(deg_y, vec![1, 2, 3]);
    let hilbert: Vec<i64> = (0..3).map(fano_hilbert).collect();
    assert_eq!(hilbert, vec![6, 6, 51]);
    pass(7, "surface ledger (45, -15, 18, {6,9,18}, {1,3,9}, {1,2,3}) and Hilbert values (6,6,51)");
}

#[test]
fn criterion_8_property_suite() {
    common::check_label_against_kostant(Label::A2, 4);
    common::check_label_against_kostant(Label::A3, 4);
    common::decomposition_round_trips(0xacce97, 50);
    for g in 1..=12u64 {
        let sum: num_bigint::BigUint =
            (0..g).map(|k| eulerian_number(g, k).unwrap()).sum();
        assert_eq!(sum, factorial(g), "row {g}");
    }
    for g in 4..=12 {
        assert!(divisor_euler_exclusion(27, g));
        assert!(divisor_euler_exclusion(56, g));
    }

    // Partition invariance at full scale for E6 and at a reduced bound for
    // E7; the merged chunked runs must equal the serial results exactly.
    let e6 = RootSystem::new(Label::E6);
    let v27 = minuscule_character(&e6, 1).unwrap();
    let parts: Vec<SearchResult> = (0..4)
        .map(|i| search_hodge_rows_chunk(&e6, &v27, SearchParams::new(26), i, 4).unwrap())
        .collect();
    assert_eq!(&merge_search_results(parts).unwrap(), e6_search());

    let e7 = RootSystem::new(Label::E7);
    let v56 = minuscule_character(&e7, 7).unwrap();
    let params = SearchParams::new(15).with_parity(Parity::Odd).with_min_end(4);
    let serial = search_hodge_rows(&e7, &v56, params).unwrap();
    let parts: Vec<SearchResult> = (0..3)
        .map(|i| search_hodge_rows_chunk(&e7, &v56, params, i, 3).unwrap())
        .collect();
    assert_eq!(merge_search_results(parts).unwrap(), serial);
    pass(8, "Kostant agreement, 50 round trips, Eulerian sums, exclusions, partition invariance");
}

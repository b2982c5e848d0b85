//! One function per subcommand. Each builds a `ReportDocument`; rendering
//! and exit codes live in `main`. Errors are returned as display strings and
//! map to exit code 1.

use std::fmt::Write as _;

use cochar_core::character::{
    adjoint_character, decompose, freudenthal_character, invariant_form_type, minuscule_character,
    orbit_character, tensor_square_orbit_ledger, Character, OrbitCharacter,
};
use cochar_core::constraints::{fano_hilbert, feasibility_table, g_max_table, surface_ledger};
use cochar_core::root_system::{Label, RootSystem, Weight};
use cochar_core::search::{
    check_hodge_properties_with_min_end, grading, identify_cocharacter, merge_search_results,
    search_hodge_rows, search_hodge_rows_chunk, Parity, SearchParams, SearchResult,
};

use crate::report::{Block, Cell, ReportDocument};

pub struct SearchOverrides {
    pub bound: Option<i64>,
    pub parity: Option<Parity>,
    pub min_outer: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Which {
    Full,
    Sym,
    Alt,
}

impl Which {
    fn key(self) -> &'static str {
        match self {
            Which::Full => "full",
            Which::Sym => "sym",
            Which::Alt => "alt",
        }
    }
}

type CmdResult = Result<ReportDocument, String>;

fn group_key(label: Label) -> &'static str {
    match label {
        Label::E6 => "e6",
        Label::E7 => "e7",
        _ => unreachable!("the CLI only exposes E6 and E7"),
    }
}

fn rep_node(label: Label) -> usize {
    match label {
        Label::E6 => 1,
        Label::E7 => 7,
        _ => unreachable!("the CLI only exposes E6 and E7"),
    }
}

/// Per-group search defaults: the completeness bound dim V - 1, and for E7
/// the odd-length restriction with end threshold 4 (the published variant;
/// threshold 3 admits extra rows with outer dimension exactly 3).
fn default_params(label: Label) -> SearchParams {
    match label {
        Label::E6 => SearchParams::new(26),
        Label::E7 => SearchParams::new(55).with_parity(Parity::Odd).with_min_end(4),
        _ => unreachable!("the CLI only exposes E6 and E7"),
    }
}

fn apply_overrides(mut params: SearchParams, over: &SearchOverrides) -> SearchParams {
    if let Some(bound) = over.bound {
        params.bound = bound;
    }
    if let Some(parity) = over.parity {
        params = params.with_parity(parity);
    }
    if let Some(min_end) = over.min_outer {
        params = params.with_min_end(min_end);
    }
    params
}

/// Splits the candidate space across `threads` workers and merges; the
/// merged result is identical to a serial scan for every thread count.
fn run_search(
    rs: &RootSystem,
    character: &Character,
    params: SearchParams,
    threads: u32,
) -> Result<SearchResult, String> {
    if threads <= 1 {
        return search_hodge_rows(rs, character, params).map_err(|e| e.to_string());
    }
    let parts: Result<Vec<SearchResult>, _> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|i| scope.spawn(move || search_hodge_rows_chunk(rs, character, params, i, threads)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
    });
    merge_search_results(parts.map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn search_params_into_doc(doc: &mut ReportDocument, label: Label, params: SearchParams) {
    doc.param("group", group_key(label));
    doc.param("bound", params.bound);
    doc.param("parity", params.parity.map_or("none".to_string(), |p| p.to_string()));
    doc.param("min_outer", params.min_end);
}

fn ints(values: &[u64]) -> Cell {
    Cell::Ints(values.iter().map(|&v| v as i64).collect())
}

/// Dominant weights written in the fundamental-weight basis: "0", "w2",
/// "2*w1 + w6".
fn weight_name(w: &Weight) -> String {
    let mut out = String::new();
    for (i, &m) in w.labels().iter().enumerate() {
        if m == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if m == 1 {
            let _ = write!(out, "w{}", i + 1);
        } else {
            let _ = write!(out, "{}*w{}", m, i + 1);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// "20[0] + 5[w2] + 1[w1 + w6]": orbit-sum coefficients by dominant weight.
fn ledger_text(oc: &OrbitCharacter) -> String {
    let mut out = String::new();
    for (w, c) in oc.coefficients() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let _ = write!(out, "{}[{}]", c, weight_name(w));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Re-derives each reported row from its witnesses; any mismatch means the
/// search and the grading pipeline disagree.
fn verify_search(
    rs: &RootSystem,
    character: &Character,
    result: &SearchResult,
) -> Result<(), String> {
    for sr in result.rows() {
        if sr.row.dimension() != result.rep_dimension() {
            return Err(format!("row {} does not sum to the representation dimension", sr.row));
        }
        if sr.witnesses.is_empty() {
            return Err(format!("row {} has no witness", sr.row));
        }
        for witness in &sr.witnesses {
            let g = grading(rs, character, witness).map_err(|e| e.to_string())?;
            match check_hodge_properties_with_min_end(&g, result.params().min_end) {
                Some(row) if row == sr.row => {}
                _ => {
                    return Err(format!(
                        "witness {witness} does not regenerate row {}",
                        sr.row
                    ))
                }
            }
        }
    }
    Ok(())
}

pub fn cmd_tables(
    label: Label,
    over: &SearchOverrides,
    threads: u32,
    verify: bool,
) -> CmdResult {
    let rs = RootSystem::new(label);
    let v = minuscule_character(&rs, rep_node(label)).map_err(|e| e.to_string())?;
    let params = apply_overrides(default_params(label), over);
    let result = run_search(&rs, &v, params, threads)?;
    if verify {
        verify_search(&rs, &v, &result)?;
    }

    let mut doc = ReportDocument::new("tables");
    search_params_into_doc(&mut doc, label, params);

    let anchor = format!("table.{}.cocharacters", group_key(label));
    let mut rows = Block::new(
        "admissible hodge rows",
        &anchor,
        &["ell", "hodge_numbers", "dimension", "witnesses", "witness"],
    );
    for sr in result.rows() {
        let name = identify_cocharacter(&rs, &sr.witnesses[0]).map_err(|e| e.to_string())?;
        rows.push(vec![
            Cell::Int(sr.row.ell()),
            ints(sr.row.hodge_numbers()),
            Cell::Int(sr.row.dimension() as i64),
            Cell::Int(sr.witnesses.len() as i64),
            Cell::text(name),
        ]);
    }
    doc.blocks.push(rows);

    let mut scan = Block::new(
        "scan summary",
        &format!("search.{}.scan", group_key(label)),
        &["candidates", "rows"],
    );
    scan.push(vec![Cell::Int(result.candidates() as i64), Cell::Int(result.rows().len() as i64)]);
    doc.blocks.push(scan);
    Ok(doc)
}

pub fn cmd_adjoint_grading(label: Label, threads: u32, verify: bool) -> CmdResult {
    let rs = RootSystem::new(label);
    let v = minuscule_character(&rs, rep_node(label)).map_err(|e| e.to_string())?;
    let result = run_search(&rs, &v, default_params(label), threads)?;
    // E6: the distinguished row with a unique witness. E7: the first row in
    // canonical order.
    let sr = match label {
        Label::E6 => result.find_row(&[6, 15, 6]).map_err(|e| e.to_string())?,
        _ => result.rows().first().ok_or("search found no rows")?,
    };
    let witness = &sr.witnesses[0];
    let adjoint = adjoint_character(&rs);
    let g = grading(&rs, &adjoint, witness).map_err(|e| e.to_string())?;
    if verify {
        if g.dimension() != adjoint.dimension() {
            return Err("grading loses adjoint dimensions".to_string());
        }
        if g.levels().any(|(n, d)| g.dimension_at(-n) != d) {
            return Err("adjoint grading is not symmetric".to_string());
        }
    }

    let mut doc = ReportDocument::new("adjoint-grading");
    doc.param("group", group_key(label));
    let row_flat: Vec<String> = sr.row.hodge_numbers().iter().map(|v| v.to_string()).collect();
    doc.param("row", row_flat.join(" "));
    doc.param("cocharacter", identify_cocharacter(&rs, witness).map_err(|e| e.to_string())?);

    let mut block = Block::new(
        "adjoint grading",
        &format!("grading.{}.adjoint", group_key(label)),
        &["level", "dimension"],
    );
    for (level, dim) in g.levels() {
        block.push(vec![Cell::Int(level), Cell::Int(dim as i64)]);
    }
    block.push(vec![Cell::text("total"), Cell::Int(g.dimension() as i64)]);
    doc.blocks.push(block);
    Ok(doc)
}

pub fn cmd_tensor_square(label: Label, which: Which, verify: bool) -> CmdResult {
    let rs = RootSystem::new(label);
    let node = rep_node(label);
    let v = minuscule_character(&rs, node).map_err(|e| e.to_string())?;
    let square = match which {
        Which::Full => v.tensor(&v.dual()).map_err(|e| e.to_string())?,
        Which::Sym => v.sym_square(),
        Which::Alt => v.alt_square(),
    };
    let dec = decompose(&rs, &square).map_err(|e| e.to_string())?;
    if verify {
        let back = dec.expand(&rs).map_err(|e| e.to_string())?;
        if back != square {
            return Err("decomposition does not expand back to the square".to_string());
        }
    }

    let mut doc = ReportDocument::new("tensor-square");
    doc.param("group", group_key(label));
    doc.param("which", which.key());

    let mut summands = Block::new(
        "irreducible summands",
        &format!("tensor.{}.{}", group_key(label), which.key()),
        &["highest_weight", "dimension", "multiplicity", "orbit_ledger"],
    );
    let mut total: u64 = 0;
    for (lambda, mult) in dec.summands() {
        let ch = freudenthal_character(&rs, lambda).map_err(|e| e.to_string())?;
        let oc = orbit_character(&rs, &ch).map_err(|e| e.to_string())?;
        if verify && oc.expand(&rs).map_err(|e| e.to_string())? != ch {
            return Err(format!("orbit ledger for {} does not expand back", weight_name(lambda)));
        }
        total += mult * ch.dimension();
        summands.push(vec![
            Cell::text(weight_name(lambda)),
            Cell::Int(ch.dimension() as i64),
            Cell::Int(mult as i64),
            Cell::text(ledger_text(&oc)),
        ]);
    }
    if total != square.dimension() {
        return Err("summand dimensions do not sum to the square".to_string());
    }
    doc.blocks.push(summands);

    if label == Label::E6 && which == Which::Full {
        let ledger = tensor_square_orbit_ledger(&rs, node).map_err(|e| e.to_string())?;
        let mut totals = Block::new(
            "orbit totals",
            "tensor.e6.orbit-totals",
            &["orbit", "without_unit", "with_unit"],
        );
        for (w, c) in ledger.with_unit.coefficients() {
            totals.push(vec![
                Cell::text(weight_name(w)),
                Cell::Int(ledger.without_unit.coefficient(w)),
                Cell::Int(c),
            ]);
        }
        doc.blocks.push(totals);
    }

    let fw = rs.fundamental_weight(node).map_err(|e| e.to_string())?;
    let form = invariant_form_type(&rs, &fw).map_err(|e| e.to_string())?;
    let mut form_block = Block::new(
        "invariant form",
        &format!("form.{}", group_key(label)),
        &["highest_weight", "form"],
    );
    form_block.push(vec![Cell::text(weight_name(&fw)), Cell::text(form.to_string())]);
    doc.blocks.push(form_block);
    Ok(doc)
}

pub fn cmd_constraints(label: Label, half: bool, threads: u32, verify: bool) -> CmdResult {
    let rs = RootSystem::new(label);
    let v = minuscule_character(&rs, rep_node(label)).map_err(|e| e.to_string())?;
    let params = default_params(label);
    let result = run_search(&rs, &v, params, threads)?;
    if verify {
        verify_search(&rs, &v, &result)?;
    }

    let mut doc = ReportDocument::new("constraints");
    search_params_into_doc(&mut doc, label, params);
    doc.param("half", half);

    let gmax = g_max_table(&result);
    let mut gmax_block = Block::new(
        "maximal genus by dimension",
        &format!("table.{}.gmax", group_key(label)),
        &["d", "g_max", "from_row"],
    );
    for (&d, &g) in &gmax {
        // Annotate with the generating row: the first row of length d whose
        // end dimension attains the maximum.
        let sr = result
            .rows()
            .iter()
            .find(|sr| sr.row.ell() == d && d - 1 + sr.row.end_dimension() as i64 == g)
            .ok_or("g_max entry has no generating row")?;
        gmax_block.push(vec![Cell::Int(d), Cell::Int(g), ints(sr.row.hodge_numbers())]);
    }
    doc.blocks.push(gmax_block);

    let feasible = feasibility_table(&result, half);
    if verify {
        for entry in &feasible {
            let expected = entry.d - 1 + entry.row.end_dimension() as i64;
            if entry.g_min > entry.g_max || entry.g_max != expected {
                return Err(format!("inconsistent feasibility range at d = {}", entry.d));
            }
        }
    }
    let mut feas_block = Block::new(
        "feasible genus ranges",
        &format!("table.{}.feasible", group_key(label)),
        &["d", "g_min", "g_max", "hodge_numbers", "euler"],
    );
    for entry in &feasible {
        feas_block.push(vec![
            Cell::Int(entry.d),
            Cell::Int(entry.g_min),
            Cell::Int(entry.g_max),
            ints(entry.row.hodge_numbers()),
            Cell::Int(entry.euler),
        ]);
    }
    doc.blocks.push(feas_block);
    Ok(doc)
}

pub fn cmd_surface_ledger(chi_o: i64, c2: i64, deg_min: i64, verify: bool) -> CmdResult {
    let ledger = surface_ledger(chi_o, c2, deg_min).map_err(|e| e.to_string())?;
    if verify {
        if 12 * ledger.chi_o != ledger.c1_sq + ledger.c2 {
            return Err("c1_sq violates the chi identity".to_string());
        }
        if 6 * ledger.chi_omega1 != ledger.c1_sq - 5 * ledger.c2 {
            return Err("chi_omega1 violates its defining identity".to_string());
        }
        for (p, y) in ledger.deg_pi.iter().zip(&ledger.deg_y) {
            if p * y != ledger.c2_normal {
                return Err("projection degrees do not factor c2_normal".to_string());
            }
        }
        if ledger.deg_gamma.iter().any(|g| ledger.c1_sq % g != 0) {
            return Err("gamma degree does not divide c1_sq".to_string());
        }
    }

    let mut doc = ReportDocument::new("surface-ledger");
    doc.param("chi_o", chi_o);
    doc.param("c2", c2);
    doc.param("deg_min", deg_min);

    let mut invariants =
        Block::new("surface invariants", "surface.invariants", &["quantity", "value"]);
    for (name, value) in [
        ("chi_O", ledger.chi_o),
        ("c2", ledger.c2),
        ("c1_sq", ledger.c1_sq),
        ("chi_omega1", ledger.chi_omega1),
        ("c2_normal", ledger.c2_normal),
    ] {
        invariants.push(vec![Cell::text(name), Cell::Int(value)]);
    }
    doc.blocks.push(invariants);

    let mut candidates =
        Block::new("projection candidates", "surface.candidates", &["deg_pi", "deg_y"]);
    for (&p, &y) in ledger.deg_pi.iter().zip(&ledger.deg_y) {
        candidates.push(vec![Cell::Int(p), Cell::Int(y)]);
    }
    doc.blocks.push(candidates);

    let mut gamma = Block::new("gamma degrees", "surface.gamma", &["deg_gamma"]);
    for &g in &ledger.deg_gamma {
        gamma.push(vec![Cell::Int(g)]);
    }
    doc.blocks.push(gamma);

    let mut notes = Block::new("notes", "surface.notes", &["note"]);
    notes.push(vec![Cell::text(
        "a nondegenerate surface of codimension c has degree at least c + 1",
    )]);
    doc.blocks.push(notes);

    let mut hilbert = Block::new("hilbert values", "fano.hilbert", &["i", "value"]);
    for i in 0..=4 {
        hilbert.push(vec![Cell::Int(i), Cell::Int(fano_hilbert(i))]);
    }
    doc.blocks.push(hilbert);
    Ok(doc)
}

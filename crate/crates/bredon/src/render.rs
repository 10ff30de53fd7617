//! Plain-text output.

use std::fmt::Write;

use bredon_core::gcw::GeneratorLabel;
use bredon_core::homology::{HomologyGroup, HomologyReport};
use bredon_core::intlinalg::{IntegerMatrix, SnfDecomposition};
use bredon_core::reference::CheckOutcome;
use num_bigint::BigInt;

fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == row.len() {
                line.push_str(cell);
            } else {
                let pad = widths[c] - cell.chars().count();
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', pad + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn basis(h: &HomologyGroup) -> String {
    let mut parts: Vec<String> =
        h.torsion_basis.iter().zip(&h.torsion).map(|(e, d)| format!("[{}] (order {d})", e.expression)).collect();
    parts.extend(h.basis.iter().map(|e| format!("[{}]", e.expression)));
    if parts.is_empty() {
        "-".to_owned()
    } else {
        parts.join(", ")
    }
}

/// One row per report: group, H2, H1, basis of H1, H0, basis of H0.
pub fn homology_table(reports: &[HomologyReport]) -> String {
    let mut rows = vec![["group", "H2", "H1", "basis H1", "H0", "basis H0"].map(String::from).to_vec()];
    for r in reports {
        rows.push(vec![
            r.group_name.clone(),
            r.h(2).to_string(),
            r.h(1).to_string(),
            basis(r.h(1)),
            r.h(0).to_string(),
            basis(r.h(0)),
        ]);
    }
    aligned(&rows)
}

fn labeled_matrix(m: &IntegerMatrix, rows: &[GeneratorLabel], cols: &[GeneratorLabel]) -> String {
    let mut table =
        vec![std::iter::once(String::new()).chain(cols.iter().map(|l| l.character_name.clone())).collect::<Vec<_>>()];
    for (i, label) in rows.iter().enumerate() {
        let mut row = vec![label.character_name.clone()];
        row.extend(m.row(i).iter().map(BigInt::to_string));
        table.push(row);
    }
    aligned(&table)
}

pub fn differentials(r: &HomologyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Phi_2 of {}:", r.group_name);
    out.push_str(&labeled_matrix(&r.phi2, &r.generators[1], &r.generators[2]));
    let _ = writeln!(out, "Phi_1 of {}:", r.group_name);
    out.push_str(&labeled_matrix(&r.phi1, &r.generators[0], &r.generators[1]));
    out
}

fn factors(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn invariant_factors(r: &HomologyReport) -> String {
    format!(
        "{}: chain ranks C2={} C1={} C0={}; invariant factors Phi_2 {} Phi_1 {}\n",
        r.group_name,
        r.chain_ranks[2],
        r.chain_ranks[1],
        r.chain_ranks[0],
        factors(&r.phi2_invariant_factors),
        factors(&r.phi1_invariant_factors),
    )
}

/// PASS/FAIL lines followed by a count.
pub fn outcomes(title: &str, items: &[CheckOutcome]) -> String {
    let mut out = String::new();
    for o in items {
        if o.pass {
            let _ = writeln!(out, "PASS  {}: {}", o.item, o.computed);
        } else {
            let _ = writeln!(out, "FAIL  {}: expected {}, computed {}", o.item, o.expected, o.computed);
        }
    }
    let passed = items.iter().filter(|o| o.pass).count();
    let verdict = if passed == items.len() { "PASS" } else { "FAIL" };
    let _ = writeln!(out, "{title}: {passed}/{} {verdict}", items.len());
    out
}

pub fn snf(s: &SnfDecomposition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "invariant factors: {}", factors(&s.invariant_factors));
    for (name, m) in [("D", &s.d), ("P", &s.p), ("Q", &s.q)] {
        let _ = writeln!(out, "{name} =");
        let _ = write!(out, "{m}");
        if !out.ends_with('\n') {
            out.push('\n');
        }
    }
    out
}

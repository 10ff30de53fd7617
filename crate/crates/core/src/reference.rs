//! Published reference values and the checks that compare them with what the
//! library computes.
//!
//! Generator names in the basis lists use this crate's labels. Two rows are
//! renumbered relative to their usual printed form: the edges of `p1` are
//! `beta_0, beta_1`, and the vertices of `pgg` are `alpha_0, alpha_1`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use serde::Serialize;

use crate::chartab::{build_table, embedding, induce, ChartabError, GroupId};
use crate::homology::{compute_homology, verify_basis_expressions, HomologyError, HomologyReport, Verdict};
use crate::wallpaper::{get_group, list_groups};

/// One line of the table of induced characters.
pub struct InducedRow {
    pub line: u32,
    /// Embeddings the line covers; line 1 stands for every cyclic group.
    pub embeddings: &'static [&'static str],
    /// 0-based index of the induced irreducible of the subgroup.
    pub irreducible: usize,
    /// `None` means the sum of all irreducibles of the target group.
    pub image: Option<&'static str>,
}

pub const INDUCED_CHARACTERS: [InducedRow; 17] = [
    row(1, &["C1->C2", "C1->C3", "C1->C4", "C1->C6"], 0, None),
    row(2, &["C1->D2"], 0, Some("chi1 + chi2 + chi3 + chi4")),
    row(3, &["C1->D3"], 0, Some("chi1 + chi2 + 2chi3")),
    row(4, &["C2->C2"], 0, Some("chi1")),
    row(5, &["C2->C2"], 1, Some("chi2")),
    row(6, &["C2->D2[s]"], 0, Some("chi1 + chi2")),
    row(7, &["C2->D2[s]"], 1, Some("chi3 + chi4")),
    row(8, &["C2->D3"], 0, Some("chi1 + chi3")),
    row(9, &["C2->D3"], 1, Some("chi2 + chi3")),
    row(10, &["C2->D4[r^2]"], 0, Some("chi1 + chi2 + chi3 + chi4")),
    row(11, &["C2->D4[r^2]"], 1, Some("2phi")),
    row(12, &["C2->D4[s]"], 0, Some("chi1 + chi3 + phi")),
    row(13, &["C2->D4[s]"], 1, Some("chi2 + chi4 + phi")),
    row(14, &["C2->D6[r^3]"], 0, Some("chi1 + chi2 + 2phi2")),
    row(15, &["C2->D6[r^3]"], 1, Some("chi3 + chi4 + 2phi1")),
    row(16, &["C2->D6[s]"], 0, Some("chi1 + chi3 + phi1 + phi2")),
    row(17, &["C2->D6[s]"], 1, Some("chi2 + chi4 + phi1 + phi2")),
];

const fn row(
    line: u32,
    embeddings: &'static [&'static str],
    irreducible: usize,
    image: Option<&'static str>,
) -> InducedRow {
    InducedRow { line, embeddings, irreducible, image }
}

/// Isomorphism type `Z^free + sum Z/t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupType {
    pub free_rank: usize,
    pub torsion: &'static [u32],
}

const fn z(free_rank: usize) -> GroupType {
    GroupType { free_rank, torsion: &[] }
}

pub struct HomologyRow {
    pub group: &'static str,
    pub h2: GroupType,
    pub h1: GroupType,
    pub h0: GroupType,
    pub basis_h1: &'static [&'static str],
    pub basis_h0: &'static [&'static str],
}

pub const BREDON_HOMOLOGY: [HomologyRow; 17] = [
    HomologyRow { group: "p1", h2: z(1), h1: z(2), h0: z(1), basis_h1: &["beta_0", "beta_1"], basis_h0: &["alpha"] },
    HomologyRow {
        group: "p2",
        h2: z(1),
        h1: z(0),
        h0: z(5),
        basis_h1: &[],
        basis_h0: &["alpha_0^1", "alpha_0^2", "alpha_1^2", "alpha_2^2", "alpha_3^2"],
    },
    HomologyRow {
        group: "pm",
        h2: z(0),
        h1: z(3),
        h0: z(3),
        basis_h1: &["beta_1^1", "beta_1^2", "beta_2^1"],
        basis_h0: &["alpha_0^2", "alpha_1^1", "alpha_1^2"],
    },
    HomologyRow {
        group: "pg",
        h2: z(0),
        h1: GroupType { free_rank: 1, torsion: &[2] },
        h0: z(1),
        basis_h1: &["beta_0", "beta_1"],
        basis_h0: &["alpha"],
    },
    HomologyRow {
        group: "cm",
        h2: z(0),
        h1: z(2),
        h0: z(2),
        basis_h1: &["beta_1^1", "beta_1^2"],
        basis_h0: &["alpha^1", "alpha^2"],
    },
    HomologyRow {
        group: "pmm",
        h2: z(0),
        h1: z(0),
        h0: z(9),
        basis_h1: &[],
        basis_h0: &[
            "alpha_0^3",
            "alpha_1^3",
            "alpha_1^4",
            "alpha_2^3",
            "alpha_2^4",
            "alpha_3^1",
            "alpha_3^2",
            "alpha_3^3",
            "alpha_3^4",
        ],
    },
    HomologyRow {
        group: "pmg",
        h2: z(0),
        h1: z(1),
        h0: z(4),
        basis_h1: &["beta_1^1 + beta_2^1"],
        basis_h0: &["alpha_1^2", "alpha_2^1", "alpha_2^2", "alpha_3^2"],
    },
    HomologyRow {
        group: "pgg",
        h2: z(0),
        h1: GroupType { free_rank: 0, torsion: &[2] },
        h0: z(3),
        basis_h1: &["beta_0"],
        basis_h0: &["alpha_0^2", "alpha_1^1", "alpha_1^2"],
    },
    HomologyRow {
        group: "cmm",
        h2: z(0),
        h1: z(0),
        h0: z(6),
        basis_h1: &[],
        basis_h0: &["alpha_0^1 + alpha_0^2", "alpha_0^3", "alpha_0^4", "alpha_1^1", "alpha_1^3", "alpha_2^2"],
    },
    HomologyRow {
        group: "p4",
        h2: z(1),
        h1: z(0),
        h0: z(8),
        basis_h1: &[],
        basis_h0: &[
            "alpha_0^1",
            "alpha_0^2",
            "alpha_0^3",
            "alpha_0^4",
            "alpha_1^2",
            "alpha_2^2",
            "alpha_2^3",
            "alpha_2^4",
        ],
    },
    HomologyRow {
        group: "p4m",
        h2: z(0),
        h1: z(0),
        h0: z(9),
        basis_h1: &[],
        basis_h0: &[
            "alpha_0^4",
            "alpha_0^5",
            "alpha_1^3",
            "alpha_1^4",
            "alpha_1^5",
            "alpha_2^1",
            "alpha_2^2",
            "alpha_2^3",
            "alpha_2^4",
        ],
    },
    HomologyRow {
        group: "p4g",
        h2: z(0),
        h1: z(0),
        h0: z(6),
        basis_h1: &[],
        basis_h0: &["alpha_0^1", "alpha_0^2", "alpha_0^4", "alpha_1^1", "alpha_1^2", "alpha_1^4"],
    },
    HomologyRow {
        group: "p3",
        h2: z(1),
        h1: z(0),
        h0: z(7),
        basis_h1: &[],
        basis_h0: &["alpha_0^2", "alpha_0^3", "alpha_1^1", "alpha_1^2", "alpha_1^3", "alpha_2^1", "alpha_2^2"],
    },
    HomologyRow {
        group: "p3m1",
        h2: z(0),
        h1: z(1),
        h0: z(5),
        basis_h1: &["beta_0^1 + beta_1^1 + beta_2^1"],
        basis_h0: &["alpha_0^3", "alpha_1^1", "alpha_1^2", "alpha_1^3", "alpha_2^3"],
    },
    HomologyRow {
        group: "p31m",
        h2: z(0),
        h1: z(1),
        h0: z(5),
        basis_h1: &["beta_1^1"],
        basis_h0: &["alpha_0^2", "alpha_0^3", "alpha_1^1", "alpha_1^2", "alpha_1^3"],
    },
    HomologyRow {
        group: "p6",
        h2: z(1),
        h1: z(0),
        h0: z(9),
        basis_h1: &[],
        basis_h0: &[
            "alpha_0^2",
            "alpha_0^3",
            "alpha_0^4",
            "alpha_0^5",
            "alpha_0^6",
            "alpha_1^2",
            "alpha_1^3",
            "alpha_2^1",
            "alpha_2^2",
        ],
    },
    HomologyRow {
        group: "p6m",
        h2: z(0),
        h1: z(0),
        h0: z(8),
        basis_h1: &[],
        basis_h0: &[
            "alpha_0^4",
            "alpha_0^5",
            "alpha_0^6",
            "alpha_1^1",
            "alpha_1^3",
            "alpha_2^1",
            "alpha_2^3",
            "alpha_2^4",
        ],
    },
];

/// Invariant factors of selected differentials: `(group, d, factors of Phi_d)`.
pub const INVARIANT_FACTORS: [(&str, usize, &[u32]); 4] =
    [("p2", 1, &[1, 1, 1]), ("pg", 2, &[2]), ("pmm", 1, &[1, 1, 1, 1, 1, 1, 1]), ("pgg", 2, &[2])];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub item: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn outcome(item: String, expected: String, computed: String) -> CheckOutcome {
    let pass = expected == computed;
    CheckOutcome { item, expected, computed, pass }
}

pub fn homology_row(group: &str) -> Option<&'static HomologyRow> {
    BREDON_HOMOLOGY.iter().find(|r| r.group == group)
}

fn render(t: GroupType) -> String {
    let mut parts: Vec<String> = Vec::new();
    match t.free_rank {
        0 => {}
        1 => parts.push("Z".to_owned()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(t.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".to_owned()
    } else {
        parts.join(" + ")
    }
}

fn all_images(sup: GroupId) -> String {
    let t = build_table(sup);
    t.irreducibles.iter().map(|c| c.name.as_str()).collect::<Vec<_>>().join(" + ")
}

/// Recomputes each line of the induced-character table.
pub fn check_induced_characters() -> Result<Vec<CheckOutcome>, ChartabError> {
    let mut out = Vec::new();
    for r in &INDUCED_CHARACTERS {
        let mut expected = Vec::new();
        let mut computed = Vec::new();
        for id in r.embeddings {
            let emb = embedding(id)?;
            let image = induce(&emb, r.irreducible)?;
            computed.push(image.display_with(&build_table(emb.sup)));
            expected.push(r.image.map_or_else(|| all_images(emb.sup), str::to_owned));
        }
        let name = if r.irreducible == 0 && r.embeddings[0].starts_with("C1") {
            "rho".to_owned()
        } else {
            format!("rho{}", r.irreducible + 1)
        };
        out.push(outcome(
            format!("line {:>2}: {name} along {}", r.line, r.embeddings.join(", ")),
            expected.join("; "),
            computed.join("; "),
        ));
    }
    Ok(out)
}

fn computed_types(report: &HomologyReport) -> String {
    [2, 1, 0].map(|d| report.h(d).to_string()).join(", ")
}

/// Compares `(H_2, H_1, H_0)` with the reference table for every group.
pub fn check_homology_types(reports: &[HomologyReport]) -> Vec<CheckOutcome> {
    BREDON_HOMOLOGY
        .iter()
        .map(|r| {
            let expected = [r.h2, r.h1, r.h0].map(render).join(", ");
            let computed = reports
                .iter()
                .find(|rep| rep.group_name == r.group)
                .map_or_else(|| "missing".to_owned(), computed_types);
            outcome(r.group.to_owned(), expected, computed)
        })
        .collect()
}

/// Runs `verify_basis` on every reference basis of `H_1` and `H_0`.
pub fn check_reference_bases(reports: &[HomologyReport]) -> Result<Vec<CheckOutcome>, HomologyError> {
    let mut out = Vec::new();
    for r in &BREDON_HOMOLOGY {
        let Some(report) = reports.iter().find(|rep| rep.group_name == r.group) else {
            out.push(outcome(r.group.to_owned(), "accept".to_owned(), "missing".to_owned()));
            continue;
        };
        for (degree, basis) in [(1, r.basis_h1), (0, r.basis_h0)] {
            if basis.is_empty() && report.h(degree).is_zero() {
                continue;
            }
            let verdict = verify_basis_expressions(report, degree, basis)?;
            let computed = match verdict {
                Verdict::Accept => "accept".to_owned(),
                Verdict::Reject(why) => format!("reject ({why})"),
            };
            out.push(outcome(format!("{} H{degree} ({})", r.group, basis.join(", ")), "accept".to_owned(), computed));
        }
    }
    Ok(out)
}

/// Compares the invariant factors of the selected differentials.
pub fn check_invariant_factors(reports: &[HomologyReport]) -> Vec<CheckOutcome> {
    INVARIANT_FACTORS
        .iter()
        .map(|&(group, d, factors)| {
            let show = |v: &[BigInt]| {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(","))
            };
            let expected: Vec<BigInt> = factors.iter().map(|&f| BigInt::from(f)).collect();
            let computed = reports.iter().find(|rep| rep.group_name == group).map_or_else(
                || "missing".to_owned(),
                |rep| match d {
                    1 => show(&rep.phi1_invariant_factors),
                    _ => show(&rep.phi2_invariant_factors),
                },
            );
            outcome(format!("{group} Phi_{d}"), show(&expected), computed)
        })
        .collect()
}

/// Reports for all 17 built-in groups, in the standard order.
pub fn builtin_reports() -> Result<Vec<HomologyReport>, HomologyError> {
    list_groups()
        .into_iter()
        .map(|name| {
            let (complex, _) = get_group(name).expect("built-in name");
            compute_homology(&complex)
        })
        .collect()
}

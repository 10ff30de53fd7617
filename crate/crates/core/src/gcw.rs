//! Equivariant cell structures of dimension at most two and their Bredon
//! differentials.
//!
//! A complex lists one representative per orbit of cells together with its
//! stabilizer, and the boundary of each representative as signed terms. A
//! term `e -> f` carries the inclusion of `stab(e)` into `stab(f)`, and the
//! block of `Phi_d` from `e` to `f` is the signed sum of the induction
//! matrices of its terms.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chartab::{build_table, embedding, induction_matrix, ChartabError, GroupId};
use crate::intlinalg::IntegerMatrix;
use crate::wallpaper::GroupRecord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GcwError {
    #[error("differential degree {0} is not 1 or 2")]
    Degree(usize),
    #[error("boundary term refers to unknown orbit {0:?}")]
    UnknownOrbit(String),
    #[error("boundary term {cell} -> {face}: {reason}")]
    BadTerm { cell: String, face: String, reason: String },
    #[error(transparent)]
    Chartab(#[from] ChartabError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellOrbit {
    pub orbit_id: String,
    pub dimension: u8,
    pub stabilizer: GroupId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryTerm {
    pub source: String,
    pub target: String,
    pub sign: Sign,
    pub embedding: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivariantComplex {
    pub group_name: String,
    pub orbits: Vec<CellOrbit>,
    pub boundary: Vec<BoundaryTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<GroupRecord>,
}

/// One basis element of a chain group: an irreducible character of the
/// stabilizer of an orbit representative.
///
/// `character_name` follows the alpha/beta/gamma convention: the letter
/// gives the dimension, the subscript the position of the orbit among the
/// orbits of that dimension, the superscript the 1-based index of the
/// irreducible. A subscript is dropped when the dimension has a single
/// orbit, a superscript when the stabilizer is trivial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorLabel {
    pub cell: String,
    pub character_name: String,
    pub irreducible: String,
}

fn letter(dimension: u8) -> &'static str {
    match dimension {
        0 => "alpha",
        1 => "beta",
        _ => "gamma",
    }
}

impl EquivariantComplex {
    pub fn orbit(&self, id: &str) -> Option<&CellOrbit> {
        self.orbits.iter().find(|o| o.orbit_id == id)
    }

    /// Orbits of dimension `d`, in declaration order.
    pub fn orbits_of_dimension(&self, d: usize) -> impl Iterator<Item = &CellOrbit> {
        self.orbits.iter().filter(move |o| usize::from(o.dimension) == d)
    }

    /// Offset of each `d`-orbit's block inside `C_d`.
    fn offsets(&self, d: usize) -> Vec<(&str, usize, GroupId)> {
        let mut at = 0;
        self.orbits_of_dimension(d)
            .map(|o| {
                let start = at;
                at += build_table(o.stabilizer).irreducibles.len();
                (o.orbit_id.as_str(), start, o.stabilizer)
            })
            .collect()
    }
}

/// Rank of `C_d` and its generators, in orbit order then irreducible order.
pub fn chain_rank(complex: &EquivariantComplex, d: usize) -> (usize, Vec<GeneratorLabel>) {
    let orbits: Vec<&CellOrbit> = complex.orbits_of_dimension(d).collect();
    let mut labels = Vec::new();
    for (position, orbit) in orbits.iter().enumerate() {
        let table = build_table(orbit.stabilizer);
        let several = table.irreducibles.len() > 1;
        for (k, chi) in table.irreducibles.iter().enumerate() {
            let mut name = letter(orbit.dimension).to_owned();
            if orbits.len() > 1 {
                name.push_str(&format!("_{position}"));
            }
            if several {
                name.push_str(&format!("^{}", k + 1));
            }
            labels.push(GeneratorLabel {
                cell: orbit.orbit_id.clone(),
                character_name: name,
                irreducible: chi.name.clone(),
            });
        }
    }
    (labels.len(), labels)
}

/// `Phi_d : C_d -> C_{d-1}` for `d` in {1, 2}.
pub fn assemble_differential(complex: &EquivariantComplex, d: usize) -> Result<IntegerMatrix, GcwError> {
    if !(1..=2).contains(&d) {
        return Err(GcwError::Degree(d));
    }
    let sources = complex.offsets(d);
    let targets = complex.offsets(d - 1);
    let (cols, _) = chain_rank(complex, d);
    let (rows, _) = chain_rank(complex, d - 1);
    let mut phi = IntegerMatrix::zeros(rows, cols);
    for term in &complex.boundary {
        let Some(&(_, col0, sub)) = sources.iter().find(|s| s.0 == term.source) else {
            if complex.orbit(&term.source).is_none() {
                return Err(GcwError::UnknownOrbit(term.source.clone()));
            }
            continue;
        };
        let &(_, row0, sup) =
            targets.iter().find(|t| t.0 == term.target).ok_or_else(|| match complex.orbit(&term.target) {
                None => GcwError::UnknownOrbit(term.target.clone()),
                Some(o) => GcwError::BadTerm {
                    cell: term.source.clone(),
                    face: term.target.clone(),
                    reason: format!("target has dimension {}, expected {}", o.dimension, d - 1),
                },
            })?;
        let emb = embedding(&term.embedding)?;
        if emb.sub != sub || emb.sup != sup {
            return Err(GcwError::BadTerm {
                cell: term.source.clone(),
                face: term.target.clone(),
                reason: format!(
                    "embedding {} is {} -> {}, stabilizers are {sub} -> {sup}",
                    emb.embedding_id, emb.sub, emb.sup
                ),
            });
        }
        let block = induction_matrix(&emb)?;
        let sign = BigInt::from(term.sign.value());
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                phi[(row0 + i, col0 + j)] += &sign * &block[(i, j)];
            }
        }
    }
    Ok(phi)
}

/// Human-readable violations; empty when the complex is sound.
pub fn validate(complex: &EquivariantComplex) -> Vec<String> {
    let mut problems = Vec::new();
    for (i, o) in complex.orbits.iter().enumerate() {
        if complex.orbits[..i].iter().any(|p| p.orbit_id == o.orbit_id) {
            problems.push(format!("orbit id {} is repeated", o.orbit_id));
        }
        if o.dimension > 2 {
            problems.push(format!("orbit {} has dimension {}", o.orbit_id, o.dimension));
        }
    }
    let top = complex.orbits_of_dimension(2).count();
    if top != 1 {
        problems.push(format!("expected exactly one orbit of 2-cells, found {top}"));
    }
    for t in &complex.boundary {
        let what = format!("term {} -> {}", t.source, t.target);
        let (Some(src), Some(dst)) = (complex.orbit(&t.source), complex.orbit(&t.target)) else {
            for id in [&t.source, &t.target] {
                if complex.orbit(id).is_none() {
                    problems.push(format!("{what}: unknown orbit {id}"));
                }
            }
            continue;
        };
        if src.dimension != dst.dimension + 1 {
            problems.push(format!("{what}: dimensions {} and {} are not consecutive", src.dimension, dst.dimension));
        }
        match embedding(&t.embedding) {
            Err(e) => problems.push(format!("{what}: {e}")),
            Ok(emb) => {
                if emb.sub != src.stabilizer {
                    problems.push(format!(
                        "{what}: embedding {} starts at {}, source stabilizer is {}",
                        emb.embedding_id, emb.sub, src.stabilizer
                    ));
                }
                if emb.sup != dst.stabilizer {
                    problems.push(format!(
                        "{what}: embedding {} ends at {}, target stabilizer is {}",
                        emb.embedding_id, emb.sup, dst.stabilizer
                    ));
                }
            }
        }
    }
    if problems.is_empty() {
        match (assemble_differential(complex, 1), assemble_differential(complex, 2)) {
            (Ok(phi1), Ok(phi2)) => {
                if !(&phi1 * &phi2).is_zero() {
                    problems.push("Phi_1 * Phi_2 is not zero".to_owned());
                }
            }
            (Err(e), _) | (_, Err(e)) => problems.push(format!("{e}")),
        }
    }
    problems
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn orbit(id: &str, dimension: u8, stabilizer: GroupId) -> CellOrbit {
        CellOrbit { orbit_id: id.to_string(), dimension, stabilizer }
    }

    fn term(source: &str, target: &str, sign: Sign, embedding: &str) -> BoundaryTerm {
        BoundaryTerm { source: source.to_string(), target: target.to_string(), sign, embedding: embedding.to_string() }
    }

    // a segment with reflection-fixed endpoints, filled by a free 2-cell
    fn interval() -> EquivariantComplex {
        EquivariantComplex {
            group_name: "interval".to_string(),
            orbits: vec![
                orbit("e2", 2, GroupId::C1),
                orbit("e1", 1, GroupId::C1),
                orbit("e0^0", 0, GroupId::C2),
                orbit("e0^1", 0, GroupId::C2),
            ],
            boundary: vec![term("e1", "e0^1", Sign::Plus, "C1->C2"), term("e1", "e0^0", Sign::Minus, "C1->C2")],
            metadata: None,
        }
    }

    #[test]
    fn labels_follow_dimension_and_orbit_position() {
        let c = interval();
        let (rank, labels) = chain_rank(&c, 0);
        assert_eq!(rank, 4);
        let names: Vec<&str> = labels.iter().map(|l| l.character_name.as_str()).collect();
        assert_eq!(names, ["alpha_0^1", "alpha_0^2", "alpha_1^1", "alpha_1^2"]);
        assert_eq!(chain_rank(&c, 1).1[0].character_name, "beta");
        assert_eq!(chain_rank(&c, 2).1[0].character_name, "gamma");
        assert_eq!(chain_rank(&c, 3).0, 0);
    }

    #[test]
    fn phi1_of_interval() {
        let phi = assemble_differential(&interval(), 1).unwrap();
        let expected = IntegerMatrix::from_rows(&[[-1], [-1], [1], [1]]).unwrap();
        assert_eq!(phi, expected);
        assert_eq!(assemble_differential(&interval(), 2).unwrap().shape(), (1, 1));
    }

    #[test]
    fn opposite_terms_cancel() {
        let mut c = interval();
        c.boundary.push(term("e2", "e1", Sign::Plus, "C1->C1"));
        c.boundary.push(term("e2", "e1", Sign::Minus, "C1->C1"));
        assert!(assemble_differential(&c, 2).unwrap().is_zero());
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(assemble_differential(&interval(), 3), Err(GcwError::Degree(3)));
        assert_eq!(assemble_differential(&interval(), 0), Err(GcwError::Degree(0)));
    }

    #[test]
    fn interval_is_valid() {
        assert!(validate(&interval()).is_empty());
    }

    #[test]
    fn wrong_sub_group_is_one_violation() {
        let mut c = interval();
        c.boundary[0].embedding = "C2->C2".to_string();
        let v = validate(&c);
        assert_eq!(v.len(), 1, "{v:?}");
        assert!(v[0].contains("source stabilizer"));
        assert!(matches!(assemble_differential(&c, 1), Err(GcwError::BadTerm { .. })));
    }

    #[test]
    fn structural_violations() {
        let mut c = interval();
        c.orbits.push(orbit("e1", 1, GroupId::C1));
        c.orbits.push(orbit("e2b", 2, GroupId::C1));
        c.boundary.push(term("e0^0", "e0^1", Sign::Plus, "C2->C2"));
        c.boundary.push(term("e1", "nowhere", Sign::Plus, "C1->C1"));
        let v = validate(&c);
        assert!(v.iter().any(|s| s.contains("repeated")));
        assert!(v.iter().any(|s| s.contains("exactly one orbit")));
        assert!(v.iter().any(|s| s.contains("not consecutive")));
        assert!(v.iter().any(|s| s.contains("unknown orbit nowhere")));
    }

    #[test]
    fn non_zero_composite_is_reported() {
        let mut c = interval();
        c.boundary.push(term("e2", "e1", Sign::Plus, "C1->C1"));
        let v = validate(&c);
        assert_eq!(v, vec!["Phi_1 * Phi_2 is not zero".to_string()]);
    }

    #[test]
    fn sign_rejects_other_values() {
        assert!(Sign::try_from(0).is_err());
        assert_eq!(Sign::try_from(-1), Ok(Sign::Minus));
    }
}

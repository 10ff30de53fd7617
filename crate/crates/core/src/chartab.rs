//! Character theory of the stabilizer groups.
//!
//! The nine groups below are all finite subgroups of `O(2)` that fix a cell of
//! a wallpaper group action. Their character tables are literal data checked
//! against row orthogonality; restriction is computed by pulling characters
//! back along a class map, and induction is its Frobenius-reciprocity adjoint.
//!
//! Class order inside each table is by element order, then by label:
//!
//! | group | classes |
//! |-------|---------|
//! | C1 | `1` |
//! | Cn | `1`, then the powers `g^j` by order (`g` < `g^5`) |
//! | D2 | `1`, `r`, `s`, `sr` |
//! | D3 | `1`, `s`, `r` |
//! | D4 | `1`, `r^2`, `s`, `sr`, `r` |
//! | D6 | `1`, `r^3`, `s`, `sr`, `r^2`, `r` |
//!
//! Here `r` generates the rotations and `s`, `sr` are representatives of the
//! reflection classes. In D4 and D6 the central involution (`r^2`, resp.
//! `r^3`) is the order-2 class with nontrivial roots; `s` and `sr` have none.

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::intlinalg::{bigint_json, IntegerMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartabError {
    #[error("unknown group {0:?}; expected one of C1 C2 C3 C4 C6 D2 D3 D4 D6")]
    UnknownGroup(String),
    #[error("unknown embedding {0:?}")]
    UnknownEmbedding(String),
    #[error("class function has {found} values but {group} has {expected} classes")]
    LengthMismatch { group: GroupId, expected: usize, found: usize },
    #[error("inner product {0} is not rational")]
    NonRational(String),
    #[error("embedding {embedding}: restriction of {character} has non-integral or negative multiplicities")]
    NonIntegral { embedding: String, character: String },
    #[error("embedding {embedding}: {reason}")]
    BadEmbedding { embedding: String, reason: String },
}

/// The stabilizer groups that occur for the 17 wallpaper groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupId {
    C1,
    C2,
    C3,
    C4,
    C6,
    D2,
    D3,
    D4,
    D6,
}

impl GroupId {
    pub const ALL: [GroupId; 9] = [
        GroupId::C1,
        GroupId::C2,
        GroupId::C3,
        GroupId::C4,
        GroupId::C6,
        GroupId::D2,
        GroupId::D3,
        GroupId::D4,
        GroupId::D6,
    ];

    pub fn order(self) -> u32 {
        match self {
            GroupId::C1 => 1,
            GroupId::C2 => 2,
            GroupId::C3 => 3,
            GroupId::C4 | GroupId::D2 => 4,
            GroupId::C6 | GroupId::D3 => 6,
            GroupId::D4 => 8,
            GroupId::D6 => 12,
        }
    }

    pub fn is_dihedral(self) -> bool {
        matches!(self, GroupId::D2 | GroupId::D3 | GroupId::D4 | GroupId::D6)
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupId::C1 => "C1",
            GroupId::C2 => "C2",
            GroupId::C3 => "C3",
            GroupId::C4 => "C4",
            GroupId::C6 => "C6",
            GroupId::D2 => "D2",
            GroupId::D3 => "D3",
            GroupId::D4 => "D4",
            GroupId::D6 => "D6",
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = ChartabError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupId::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| ChartabError::UnknownGroup(s.to_owned()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub label: String,
    pub size: u32,
    pub element_order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub name: String,
    /// One value per class, in the table's class order.
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self) -> Option<BigInt> {
        self.values.first().and_then(Cyclotomic::to_integer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroupTable {
    pub group_id: GroupId,
    pub order: u32,
    pub classes: Vec<ConjugacyClass>,
    pub irreducibles: Vec<Character>,
}

impl FiniteGroupTable {
    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    pub fn irreducible_index(&self, name: &str) -> Option<usize> {
        self.irreducibles.iter().position(|c| c.name == name)
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        self.irreducibles.iter().map(|c| c.degree().unwrap_or_default()).collect()
    }

    /// Checks the structural invariants of a character table; an empty list
    /// means the table is sound.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let g = self.group_id;
        if self.order != g.order() {
            problems.push(format!("{g}: order {} but the group has order {}", self.order, g.order()));
        }
        let total: u32 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            problems.push(format!("{g}: class sizes sum to {total}, not {}", self.order));
        }
        for c in &self.classes {
            if c.size == 0 || c.element_order == 0 || !self.order.is_multiple_of(c.element_order) {
                problems
                    .push(format!("{g}: class {} has size {} and element order {}", c.label, c.size, c.element_order));
            }
        }
        if self.classes.first().is_none_or(|c| c.element_order != 1 || c.size != 1) {
            problems.push(format!("{g}: first class is not the identity"));
        }
        if self.irreducibles.len() != self.classes.len() {
            problems.push(format!("{g}: {} irreducibles for {} classes", self.irreducibles.len(), self.classes.len()));
        }
        for chi in &self.irreducibles {
            if chi.values.len() != self.classes.len() {
                problems.push(format!("{g}: {} has {} values", chi.name, chi.values.len()));
            }
        }
        if !problems.is_empty() {
            return problems;
        }
        if let Some(first) = self.irreducibles.first() {
            if first.values.iter().any(|v| *v != Cyclotomic::one()) {
                problems.push(format!("{g}: first irreducible {} is not trivial", first.name));
            }
        }
        let mut square_sum = BigInt::zero();
        for chi in &self.irreducibles {
            match chi.degree() {
                Some(d) if d.is_positive() => square_sum += &d * &d,
                _ => problems.push(format!("{g}: {} has no positive integral degree", chi.name)),
            }
        }
        if square_sum != BigInt::from(self.order) {
            problems.push(format!("{g}: squared degrees sum to {square_sum}"));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate() {
                let expected = BigRational::from_integer(BigInt::from(u8::from(i == j)));
                match inner_product(&a.values, &b.values, self) {
                    Ok(v) if v == expected => {}
                    Ok(v) => problems.push(format!("{g}: <{}, {}> = {v}", a.name, b.name)),
                    Err(e) => problems.push(format!("{g}: {e}")),
                }
            }
        }
        problems
    }
}

/// A virtual character written in the basis of irreducibles of `group_id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrDecomposition {
    pub group_id: GroupId,
    #[serde(with = "bigint_json::vec")]
    pub coefficients: Vec<BigInt>,
}

impl IrrDecomposition {
    pub fn is_genuine(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }

    /// Renders as e.g. `chi1 + chi2 + 2phi2`.
    pub fn display_with(&self, table: &FiniteGroupTable) -> String {
        let mut out = String::new();
        for (c, chi) in self.coefficients.iter().zip(&table.irreducibles) {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&chi.name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// An inclusion `H -> K` recorded at the level of conjugacy classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupEmbedding {
    pub embedding_id: String,
    pub sub: GroupId,
    pub sup: GroupId,
    /// For each class of `sub`, the index of the class of `sup` containing it.
    pub class_map: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn index(&self) -> u32 {
        self.sup.order() / self.sub.order()
    }

    pub fn validate(&self) -> Result<(), ChartabError> {
        let bad = |reason: String| ChartabError::BadEmbedding { embedding: self.embedding_id.clone(), reason };
        if !self.sup.order().is_multiple_of(self.sub.order()) {
            return Err(bad(format!("|{}| does not divide |{}|", self.sub, self.sup)));
        }
        let h = build_table(self.sub);
        let k = build_table(self.sup);
        if self.class_map.len() != h.classes.len() {
            return Err(bad(format!("class map has {} entries for {} classes", self.class_map.len(), h.classes.len())));
        }
        for (c, &img) in h.classes.iter().zip(&self.class_map) {
            let Some(target) = k.classes.get(img) else {
                return Err(bad(format!("class {} maps to missing index {img}", c.label)));
            };
            if target.element_order != c.element_order {
                return Err(bad(format!(
                    "class {} (order {}) maps to {} (order {})",
                    c.label, c.element_order, target.label, target.element_order
                )));
            }
        }
        if self.class_map.first() != Some(&0) {
            return Err(bad("identity class is not sent to the identity class".to_owned()));
        }
        Ok(())
    }
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn class(label: &str, size: u32, element_order: u32) -> ConjugacyClass {
    ConjugacyClass { label: label.to_owned(), size, element_order }
}

fn integer_character(name: &str, values: &[i64]) -> Character {
    Character { name: name.to_owned(), values: values.iter().map(|&v| int(v)).collect() }
}

fn cyclic_table(group_id: GroupId) -> FiniteGroupTable {
    let n = group_id.order();
    let mut powers: Vec<(u32, String, u32)> = (0..n)
        .map(|j| {
            let label = match j {
                0 => "1".to_owned(),
                1 => "g".to_owned(),
                _ => format!("g^{j}"),
            };
            (n / n.gcd(&j), label, j)
        })
        .collect();
    powers.sort();
    let classes = powers.iter().map(|(ord, label, _)| class(label, 1, *ord)).collect();
    let irreducibles = (0..n)
        .map(|k| Character {
            name: format!("chi{}", k + 1),
            values: powers.iter().map(|&(_, _, j)| Cyclotomic::root_of_unity(n, i64::from(k * j))).collect(),
        })
        .collect();
    FiniteGroupTable { group_id, order: n, classes, irreducibles }
}

fn dihedral_table(group_id: GroupId) -> FiniteGroupTable {
    let (classes, irreducibles) = match group_id {
        GroupId::D2 => (
            vec![class("1", 1, 1), class("r", 1, 2), class("s", 1, 2), class("sr", 1, 2)],
            vec![
                integer_character("chi1", &[1, 1, 1, 1]),
                integer_character("chi2", &[1, -1, 1, -1]),
                integer_character("chi3", &[1, -1, -1, 1]),
                integer_character("chi4", &[1, 1, -1, -1]),
            ],
        ),
        GroupId::D3 => (
            vec![class("1", 1, 1), class("s", 3, 2), class("r", 2, 3)],
            vec![
                integer_character("chi1", &[1, 1, 1]),
                integer_character("chi2", &[1, -1, 1]),
                integer_character("chi3", &[2, 0, -1]),
            ],
        ),
        GroupId::D4 => (
            vec![class("1", 1, 1), class("r^2", 1, 2), class("s", 2, 2), class("sr", 2, 2), class("r", 2, 4)],
            vec![
                integer_character("chi1", &[1, 1, 1, 1, 1]),
                integer_character("chi2", &[1, 1, -1, -1, 1]),
                integer_character("chi3", &[1, 1, 1, -1, -1]),
                integer_character("chi4", &[1, 1, -1, 1, -1]),
                integer_character("phi", &[2, -2, 0, 0, 0]),
            ],
        ),
        GroupId::D6 => (
            vec![
                class("1", 1, 1),
                class("r^3", 1, 2),
                class("s", 3, 2),
                class("sr", 3, 2),
                class("r^2", 2, 3),
                class("r", 2, 6),
            ],
            vec![
                integer_character("chi1", &[1, 1, 1, 1, 1, 1]),
                integer_character("chi2", &[1, 1, -1, -1, 1, 1]),
                integer_character("chi3", &[1, -1, 1, -1, 1, -1]),
                integer_character("chi4", &[1, -1, -1, 1, 1, -1]),
                integer_character("phi1", &[2, -2, 0, 0, -1, 1]),
                integer_character("phi2", &[2, 2, 0, 0, -1, -1]),
            ],
        ),
        _ => unreachable!("{group_id} is not dihedral"),
    };
    FiniteGroupTable { group_id, order: group_id.order(), classes, irreducibles }
}

/// The character table of `group_id`, in the fixed class and character order.
pub fn build_table(group_id: GroupId) -> FiniteGroupTable {
    if group_id.is_dihedral() {
        dihedral_table(group_id)
    } else {
        cyclic_table(group_id)
    }
}

pub fn table_by_name(name: &str) -> Result<FiniteGroupTable, ChartabError> {
    Ok(build_table(name.parse()?))
}

/// `(1/|G|) sum_c |c| f(c) conj(g(c))`.
pub fn inner_product(
    f: &[Cyclotomic],
    g: &[Cyclotomic],
    table: &FiniteGroupTable,
) -> Result<BigRational, ChartabError> {
    for values in [f, g] {
        if values.len() != table.classes.len() {
            return Err(ChartabError::LengthMismatch {
                group: table.group_id,
                expected: table.classes.len(),
                found: values.len(),
            });
        }
    }
    let mut acc = Cyclotomic::zero();
    for ((c, a), b) in table.classes.iter().zip(f).zip(g) {
        let term = &(a * &b.conj()) * &int(i64::from(c.size));
        acc = &acc + &term;
    }
    let acc = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(table.order)));
    acc.to_rational().ok_or_else(|| ChartabError::NonRational(acc.to_string()))
}

/// Multiplicities of the irreducibles in a class function, when integral.
pub fn decompose(values: &[Cyclotomic], table: &FiniteGroupTable) -> Result<Option<IrrDecomposition>, ChartabError> {
    let mut coefficients = Vec::with_capacity(table.irreducibles.len());
    for chi in &table.irreducibles {
        let m = inner_product(values, &chi.values, table)?;
        if !m.is_integer() {
            return Ok(None);
        }
        coefficients.push(m.to_integer());
    }
    Ok(Some(IrrDecomposition { group_id: table.group_id, coefficients }))
}

/// Column `j` is the restriction of the `j`-th irreducible of `sup`,
/// written over the irreducibles of `sub`.
pub fn restriction_matrix(emb: &SubgroupEmbedding) -> Result<IntegerMatrix, ChartabError> {
    emb.validate()?;
    let h = build_table(emb.sub);
    let k = build_table(emb.sup);
    let mut columns = Vec::with_capacity(k.irreducibles.len());
    for psi in &k.irreducibles {
        let pulled: Vec<Cyclotomic> = emb.class_map.iter().map(|&c| psi.values[c].clone()).collect();
        let dec = decompose(&pulled, &h)?.filter(IrrDecomposition::is_genuine).ok_or_else(|| {
            ChartabError::NonIntegral { embedding: emb.embedding_id.clone(), character: psi.name.clone() }
        })?;
        columns.push(dec.coefficients);
    }
    Ok(IntegerMatrix::from_columns(h.irreducibles.len(), &columns))
}

/// Induction `R(sub) -> R(sup)` in the irreducible bases: entry `(j, i)` is
/// `<Ind chi_i, psi_j> = <chi_i, Res psi_j>`.
pub fn induction_matrix(emb: &SubgroupEmbedding) -> Result<IntegerMatrix, ChartabError> {
    Ok(restriction_matrix(emb)?.transpose())
}

/// Induces a single irreducible of `sub` (0-based index) to `sup`.
pub fn induce(emb: &SubgroupEmbedding, irreducible: usize) -> Result<IrrDecomposition, ChartabError> {
    let m = induction_matrix(emb)?;
    Ok(IrrDecomposition { group_id: emb.sup, coefficients: m.column(irreducible) })
}

// (id, sub, sup, image class label of each sub class)
const CATALOG: &[(&str, GroupId, GroupId, &[&str])] = {
    use GroupId::*;
    &[
        ("C1->C1", C1, C1, &["1"]),
        ("C2->C2", C2, C2, &["1", "g"]),
        ("C3->C3", C3, C3, &["1", "g", "g^2"]),
        ("C4->C4", C4, C4, &["1", "g^2", "g", "g^3"]),
        ("C6->C6", C6, C6, &["1", "g^3", "g^2", "g^4", "g", "g^5"]),
        ("D2->D2", D2, D2, &["1", "r", "s", "sr"]),
        ("D3->D3", D3, D3, &["1", "s", "r"]),
        ("D4->D4", D4, D4, &["1", "r^2", "s", "sr", "r"]),
        ("D6->D6", D6, D6, &["1", "r^3", "s", "sr", "r^2", "r"]),
        ("C1->C2", C1, C2, &["1"]),
        ("C1->C3", C1, C3, &["1"]),
        ("C1->C4", C1, C4, &["1"]),
        ("C1->C6", C1, C6, &["1"]),
        ("C1->D2", C1, D2, &["1"]),
        ("C1->D3", C1, D3, &["1"]),
        ("C1->D4", C1, D4, &["1"]),
        ("C1->D6", C1, D6, &["1"]),
        ("C2->D2[s]", C2, D2, &["1", "s"]),
        ("C2->D2[sr]", C2, D2, &["1", "sr"]),
        ("C2->D3", C2, D3, &["1", "s"]),
        ("C2->D4[r^2]", C2, D4, &["1", "r^2"]),
        ("C2->D4[s]", C2, D4, &["1", "s"]),
        ("C2->D4[sr]", C2, D4, &["1", "sr"]),
        ("C2->D6[r^3]", C2, D6, &["1", "r^3"]),
        ("C2->D6[s]", C2, D6, &["1", "s"]),
        ("C2->D6[sr]", C2, D6, &["1", "sr"]),
    ]
};

fn catalog_entry(&(id, sub, sup, images): &(&str, GroupId, GroupId, &[&str])) -> SubgroupEmbedding {
    let k = build_table(sup);
    let class_map = images
        .iter()
        .map(|label| k.class_index(label).unwrap_or_else(|| panic!("{id}: no class {label} in {sup}")))
        .collect();
    SubgroupEmbedding { embedding_id: id.to_owned(), sub, sup, class_map }
}

/// Every embedding the built-in complexes may refer to.
///
/// Besides the trivial and identity inclusions this holds one embedding of
/// C2 per conjugacy class of involutions in each dihedral group that has
/// reflections through a cell: D3 has one such class, D2 two reflection
/// classes (`s` and `sr`), D4 and D6 the central involution plus
/// the two reflection classes.
pub fn registered_embeddings() -> Vec<SubgroupEmbedding> {
    CATALOG.iter().map(catalog_entry).collect()
}

pub fn embedding(id: &str) -> Result<SubgroupEmbedding, ChartabError> {
    CATALOG.iter().find(|e| e.0 == id).map(catalog_entry).ok_or_else(|| ChartabError::UnknownEmbedding(id.to_owned()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    fn rational(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn c2_table_is_forced() {
        let t = build_table(GroupId::C2);
        let values: Vec<Vec<Cyclotomic>> = t.irreducibles.iter().map(|c| c.values.clone()).collect();
        assert_eq!(values, vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);
    }

    #[test]
    fn d3_degrees_and_names() {
        let t = build_table(GroupId::D3);
        assert_eq!(ints(&t.degrees()), vec![1, 1, 2]);
        let names: Vec<&str> = t.irreducibles.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["chi1", "chi2", "chi3"]);
    }

    #[test]
    fn d6_degrees() {
        let t = build_table(GroupId::D6);
        assert_eq!(ints(&t.degrees()), vec![1, 1, 1, 1, 2, 2]);
        assert_eq!(t.irreducibles[4].name, "phi1");
    }

    #[test]
    fn irreducible_counts() {
        let counts: Vec<usize> = GroupId::ALL.iter().map(|&g| build_table(g).irreducibles.len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 4, 6, 4, 3, 5, 6]);
    }

    #[test]
    fn every_table_validates() {
        for g in GroupId::ALL {
            assert_eq!(build_table(g).validate(), Vec::<String>::new(), "{g}");
        }
    }

    #[test]
    fn classes_sorted_by_order_then_label() {
        for g in GroupId::ALL {
            let t = build_table(g);
            let keys: Vec<(u32, &str)> = t.classes.iter().map(|c| (c.element_order, c.label.as_str())).collect();
            let mut sorted = keys.clone();
            sorted.sort();
            assert_eq!(keys, sorted, "{g}");
        }
    }

    #[test]
    fn trivial_inner_products() {
        for g in GroupId::ALL {
            let t = build_table(g);
            let chi1 = &t.irreducibles[0].values;
            assert_eq!(inner_product(chi1, chi1, &t).unwrap(), rational(1));
        }
        let t = build_table(GroupId::C2);
        assert_eq!(inner_product(&t.irreducibles[0].values, &t.irreducibles[1].values, &t).unwrap(), rational(0));
    }

    #[test]
    fn regular_character_of_d3_contains_standard_twice() {
        let t = build_table(GroupId::D3);
        let regular = vec![int(6), int(0), int(0)];
        assert_eq!(inner_product(&regular, &t.irreducibles[2].values, &t).unwrap(), rational(2));
    }

    #[test]
    fn length_mismatch_errors() {
        let t = build_table(GroupId::D3);
        let err = inner_product(&[int(1)], &t.irreducibles[0].values, &t).unwrap_err();
        assert!(matches!(err, ChartabError::LengthMismatch { expected: 3, found: 1, .. }));
    }

    #[test]
    fn non_rational_inner_product_errors() {
        let t = build_table(GroupId::C4);
        let f = vec![Cyclotomic::root_of_unity(4, 1), int(0), int(0), int(0)];
        let err = inner_product(&f, &t.irreducibles[0].values, &t).unwrap_err();
        assert!(matches!(err, ChartabError::NonRational(_)));
    }

    #[test]
    fn restriction_of_d2_trivial_to_c2() {
        let r = restriction_matrix(&embedding("C2->D2[s]").unwrap()).unwrap();
        assert_eq!(ints(&r.column(0)), vec![1, 0]);
    }

    #[test]
    fn restriction_of_phi_to_central_involution() {
        let r = restriction_matrix(&embedding("C2->D4[r^2]").unwrap()).unwrap();
        assert_eq!(ints(&r.column(4)), vec![0, 2]);
    }

    #[test]
    fn restriction_to_trivial_group_counts_dimension() {
        for g in GroupId::ALL {
            let emb = embedding(&format!("C1->{g}")).unwrap();
            let r = restriction_matrix(&emb).unwrap();
            assert_eq!(r.row(0), build_table(g).degrees().as_slice(), "{g}");
        }
    }

    #[test]
    fn degree_weighted_column_sums_reproduce_degrees() {
        for emb in registered_embeddings() {
            let r = restriction_matrix(&emb).unwrap();
            let hd = build_table(emb.sub).degrees();
            let kd = build_table(emb.sup).degrees();
            for (j, d) in kd.iter().enumerate() {
                let s: BigInt = r.column(j).iter().zip(&hd).map(|(a, b)| a * b).sum();
                assert_eq!(&s, d, "{}", emb.embedding_id);
            }
        }
    }

    #[test]
    fn induction_examples() {
        let ind = |id: &str, i: usize| ints(&induce(&embedding(id).unwrap(), i).unwrap().coefficients);
        assert_eq!(ind("C2->D2[s]", 0), vec![1, 1, 0, 0]);
        assert_eq!(ind("C1->D3", 0), vec![1, 1, 2]);
        assert_eq!(ind("C2->C2", 0), vec![1, 0]);
        assert_eq!(ind("C2->D4[r^2]", 1), vec![0, 0, 0, 0, 2]);
    }

    #[test]
    fn identity_embeddings_induce_identity() {
        for g in GroupId::ALL {
            let m = induction_matrix(&embedding(&format!("{g}->{g}")).unwrap()).unwrap();
            assert!(m.is_identity(), "{g}");
        }
    }

    #[test]
    fn catalog_is_well_formed() {
        let all = registered_embeddings();
        for e in &all {
            e.validate().unwrap();
            assert_eq!(e.sup.order() % e.sub.order(), 0);
        }
        let ids: Vec<&str> = all.iter().map(|e| e.embedding_id.as_str()).collect();
        let mut dedup = ids.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
    }

    #[test]
    fn c2_into_d4_has_central_and_two_reflection_classes() {
        let into_d4: Vec<String> = registered_embeddings()
            .into_iter()
            .filter(|e| e.sub == GroupId::C2 && e.sup == GroupId::D4)
            .map(|e| e.embedding_id)
            .collect();
        assert_eq!(into_d4, ["C2->D4[r^2]", "C2->D4[s]", "C2->D4[sr]"]);
        // the two reflection classes induce differently
        let s = induction_matrix(&embedding("C2->D4[s]").unwrap()).unwrap();
        let sr = induction_matrix(&embedding("C2->D4[sr]").unwrap()).unwrap();
        assert_ne!(s, sr);
    }

    #[test]
    fn order_breaking_embedding_is_rejected() {
        let bad = SubgroupEmbedding {
            embedding_id: "bad".to_owned(),
            sub: GroupId::C2,
            sup: GroupId::C4,
            class_map: vec![0, 2],
        };
        assert!(matches!(bad.validate(), Err(ChartabError::BadEmbedding { .. })));
        assert!(restriction_matrix(&bad).is_err());
    }

    #[test]
    fn unknown_names() {
        assert!(matches!("Q8".parse::<GroupId>(), Err(ChartabError::UnknownGroup(_))));
        assert!(matches!(embedding("C2->C5"), Err(ChartabError::UnknownEmbedding(_))));
    }

    #[test]
    fn display_decomposition() {
        let t = build_table(GroupId::D6);
        let d = induce(&embedding("C2->D6[r^3]").unwrap(), 0).unwrap();
        assert_eq!(d.display_with(&t), "chi1 + chi2 + 2phi2");
    }
}

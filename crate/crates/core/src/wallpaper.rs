//! The 17 wallpaper groups: classification data and equivariant cell
//! structures of the plane.
//!
//! Each complex has a single free orbit of 2-cells `e2`, orbits of edges
//! `e1^j` and orbits of vertices `e0^j` (`e0` when there is only one).
//! Boundaries are stored as signed terms with the stabilizer inclusion along
//! which each face is attached; `C1->X` attaches a free cell and `C2->D4[s]`
//! names the reflection class of the mirror through a vertex.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::chartab::GroupId;
use crate::gcw::{BoundaryTerm, CellOrbit, EquivariantComplex, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown wallpaper group {name:?}; expected one of {}", list_groups().join(", "))]
pub struct UnknownGroup {
    pub name: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Yes,
    No,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Split::Yes => "yes",
            Split::No => "no",
            Split::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub point_group: GroupId,
    pub split: Split,
    pub torsion_primes: Vec<u32>,
    pub has_reflections: bool,
    pub has_glide_reflections: bool,
    pub rotation_orders: Vec<u32>,
}

struct Definition {
    name: &'static str,
    point_group: GroupId,
    split: Split,
    torsion_primes: &'static [u32],
    rotation_orders: &'static [u32],
    reflections: bool,
    glides: bool,
    orbits: &'static [(&'static str, u8, GroupId)],
    // (source, target, sign, embedding)
    boundary: &'static [(&'static str, &'static str, i8, &'static str)],
}

use GroupId::{C1, C2, C3, C4, C6, D2, D3, D4, D6};
use Split::{No, NotApplicable, Yes};

const GROUPS: [Definition; 17] = [
    Definition {
        name: "p1",
        point_group: C1,
        split: NotApplicable,
        torsion_primes: &[],
        rotation_orders: &[],
        reflections: false,
        glides: false,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0", 0, C1)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e1^0", "e0", 1, "C1->C1"),
            ("e1^0", "e0", -1, "C1->C1"),
            ("e1^1", "e0", 1, "C1->C1"),
            ("e1^1", "e0", -1, "C1->C1"),
        ],
    },
    Definition {
        name: "p2",
        point_group: C2,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[2],
        reflections: false,
        glides: false,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C1),
            ("e1^1", 1, C1),
            ("e1^2", 1, C1),
            ("e0^0", 0, C2),
            ("e0^1", 0, C2),
            ("e0^2", 0, C2),
            ("e0^3", 0, C2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e2", "e1^2", 1, "C1->C1"),
            ("e2", "e1^2", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C1->C2"),
            ("e1^0", "e0^0", -1, "C1->C2"),
            ("e1^1", "e0^2", 1, "C1->C2"),
            ("e1^1", "e0^1", -1, "C1->C2"),
            ("e1^2", "e0^3", 1, "C1->C2"),
            ("e1^2", "e0^0", -1, "C1->C2"),
        ],
    },
    Definition {
        name: "pm",
        point_group: C2,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[],
        reflections: true,
        glides: false,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C2), ("e1^2", 1, C2), ("e0^0", 0, C2), ("e0^1", 0, C2)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C1->C2"),
            ("e1^0", "e0^0", -1, "C1->C2"),
            ("e1^1", "e0^1", 1, "C2->C2"),
            ("e1^1", "e0^1", -1, "C2->C2"),
            ("e1^2", "e0^0", 1, "C2->C2"),
            ("e1^2", "e0^0", -1, "C2->C2"),
        ],
    },
    Definition {
        name: "pg",
        point_group: C2,
        split: No,
        torsion_primes: &[],
        rotation_orders: &[],
        reflections: false,
        glides: true,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0", 0, C1)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e1^0", "e0", 1, "C1->C1"),
            ("e1^0", "e0", -1, "C1->C1"),
            ("e1^1", "e0", 1, "C1->C1"),
            ("e1^1", "e0", -1, "C1->C1"),
        ],
    },
    Definition {
        name: "cm",
        point_group: C2,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[],
        reflections: true,
        glides: true,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C2), ("e0", 0, C2)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e1^0", "e0", 1, "C1->C2"),
            ("e1^0", "e0", -1, "C1->C2"),
            ("e1^1", "e0", 1, "C2->C2"),
            ("e1^1", "e0", -1, "C2->C2"),
        ],
    },
    Definition {
        name: "pmm",
        point_group: D2,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[2],
        reflections: true,
        glides: false,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C2),
            ("e1^1", 1, C2),
            ("e1^2", 1, C2),
            ("e1^3", 1, C2),
            ("e0^0", 0, D2),
            ("e0^1", 0, D2),
            ("e0^2", 0, D2),
            ("e0^3", 0, D2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C2"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e2", "e1^3", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C2->D2[s]"),
            ("e1^0", "e0^0", -1, "C2->D2[s]"),
            ("e1^1", "e0^2", 1, "C2->D2[s]"),
            ("e1^1", "e0^1", -1, "C2->D2[sr]"),
            ("e1^2", "e0^3", 1, "C2->D2[s]"),
            ("e1^2", "e0^2", -1, "C2->D2[sr]"),
            ("e1^3", "e0^0", 1, "C2->D2[sr]"),
            ("e1^3", "e0^3", -1, "C2->D2[sr]"),
        ],
    },
    Definition {
        name: "pmg",
        point_group: D2,
        split: No,
        torsion_primes: &[2],
        rotation_orders: &[2],
        reflections: true,
        glides: true,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C1),
            ("e1^1", 1, C2),
            ("e1^2", 1, C2),
            ("e1^3", 1, C1),
            ("e0^0", 0, C2),
            ("e0^1", 0, C2),
            ("e0^2", 0, C2),
            ("e0^3", 0, C2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e2", "e1^3", 1, "C1->C1"),
            ("e2", "e1^3", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C1->C2"),
            ("e1^0", "e0^0", -1, "C1->C2"),
            ("e1^1", "e0^2", 1, "C2->C2"),
            ("e1^1", "e0^0", -1, "C2->C2"),
            ("e1^2", "e0^0", 1, "C2->C2"),
            ("e1^2", "e0^2", -1, "C2->C2"),
            ("e1^3", "e0^3", 1, "C1->C2"),
            ("e1^3", "e0^2", -1, "C1->C2"),
        ],
    },
    Definition {
        name: "pgg",
        point_group: D2,
        split: No,
        torsion_primes: &[2],
        rotation_orders: &[2],
        reflections: false,
        glides: true,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0^0", 0, C2), ("e0^1", 0, C2)],
        boundary: &[
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", 1, "C1->C1"),
            ("e1^0", "e0^0", 1, "C1->C2"),
            ("e1^0", "e0^0", -1, "C1->C2"),
            ("e1^1", "e0^1", 1, "C1->C2"),
            ("e1^1", "e0^0", -1, "C1->C2"),
        ],
    },
    Definition {
        name: "cmm",
        point_group: D2,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[2],
        reflections: true,
        glides: true,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C2),
            ("e1^1", 1, C2),
            ("e1^2", 1, C1),
            ("e0^0", 0, D2),
            ("e0^1", 0, D2),
            ("e0^2", 0, C2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C2"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C1"),
            ("e2", "e1^2", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C2->D2[s]"),
            ("e1^0", "e0^0", -1, "C2->D2[s]"),
            ("e1^1", "e0^0", 1, "C2->D2[sr]"),
            ("e1^1", "e0^1", -1, "C2->D2[sr]"),
            ("e1^2", "e0^2", 1, "C1->C2"),
            ("e1^2", "e0^0", -1, "C1->D2"),
        ],
    },
    Definition {
        name: "p4",
        point_group: C4,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[2, 4],
        reflections: false,
        glides: false,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0^0", 0, C4), ("e0^1", 0, C2), ("e0^2", 0, C4)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C1->C2"),
            ("e1^0", "e0^0", -1, "C1->C4"),
            ("e1^1", "e0^2", 1, "C1->C4"),
            ("e1^1", "e0^1", -1, "C1->C2"),
        ],
    },
    Definition {
        name: "p4m",
        point_group: D4,
        split: No,
        torsion_primes: &[2],
        rotation_orders: &[2, 4],
        reflections: true,
        glides: true,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C2),
            ("e1^1", 1, C2),
            ("e1^2", 1, C2),
            ("e0^0", 0, D4),
            ("e0^1", 0, D4),
            ("e0^2", 0, D2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C2"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C2->D4[s]"),
            ("e1^0", "e0^0", -1, "C2->D4[s]"),
            ("e1^1", "e0^2", 1, "C2->D2[s]"),
            ("e1^1", "e0^1", -1, "C2->D4[sr]"),
            ("e1^2", "e0^0", 1, "C2->D4[sr]"),
            ("e1^2", "e0^2", -1, "C2->D2[sr]"),
        ],
    },
    Definition {
        name: "p4g",
        point_group: D4,
        split: Yes,
        torsion_primes: &[2],
        rotation_orders: &[2, 4],
        reflections: true,
        glides: true,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C2), ("e0^0", 0, D2), ("e0^1", 0, C4)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C1->C4"),
            ("e1^0", "e0^0", -1, "C1->D2"),
            ("e1^1", "e0^0", 1, "C2->D2[s]"),
            ("e1^1", "e0^0", -1, "C2->D2[sr]"),
        ],
    },
    Definition {
        name: "p3",
        point_group: C3,
        split: Yes,
        torsion_primes: &[3],
        rotation_orders: &[3],
        reflections: false,
        glides: false,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0^0", 0, C3), ("e0^1", 0, C3), ("e0^2", 0, C3)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C1->C3"),
            ("e1^0", "e0^0", -1, "C1->C3"),
            ("e1^1", "e0^2", 1, "C1->C3"),
            ("e1^1", "e0^1", -1, "C1->C3"),
        ],
    },
    Definition {
        name: "p3m1",
        point_group: D3,
        split: Yes,
        torsion_primes: &[2, 3],
        rotation_orders: &[3],
        reflections: true,
        glides: true,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C2),
            ("e1^1", 1, C2),
            ("e1^2", 1, C2),
            ("e0^0", 0, D3),
            ("e0^1", 0, D3),
            ("e0^2", 0, D3),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C2"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C2->D3"),
            ("e1^0", "e0^0", -1, "C2->D3"),
            ("e1^1", "e0^2", 1, "C2->D3"),
            ("e1^1", "e0^1", -1, "C2->D3"),
            ("e1^2", "e0^0", 1, "C2->D3"),
            ("e1^2", "e0^2", -1, "C2->D3"),
        ],
    },
    Definition {
        name: "p31m",
        point_group: D3,
        split: Yes,
        torsion_primes: &[2, 3],
        rotation_orders: &[3],
        reflections: true,
        glides: true,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C2), ("e0^0", 0, D3), ("e0^1", 0, C3)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C1->C3"),
            ("e1^0", "e0^0", -1, "C1->D3"),
            ("e1^1", "e0^0", 1, "C2->D3"),
            ("e1^1", "e0^0", -1, "C2->D3"),
        ],
    },
    Definition {
        name: "p6",
        point_group: C6,
        split: Yes,
        torsion_primes: &[2, 3],
        rotation_orders: &[2, 3, 6],
        reflections: false,
        glides: false,
        orbits: &[("e2", 2, C1), ("e1^0", 1, C1), ("e1^1", 1, C1), ("e0^0", 0, C6), ("e0^1", 0, C3), ("e0^2", 0, C2)],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C1"),
            ("e2", "e1^0", -1, "C1->C1"),
            ("e2", "e1^1", 1, "C1->C1"),
            ("e2", "e1^1", -1, "C1->C1"),
            ("e1^0", "e0^1", 1, "C1->C3"),
            ("e1^0", "e0^0", -1, "C1->C6"),
            ("e1^1", "e0^2", 1, "C1->C2"),
            ("e1^1", "e0^0", -1, "C1->C6"),
        ],
    },
    Definition {
        name: "p6m",
        point_group: D6,
        split: Yes,
        torsion_primes: &[2, 3],
        rotation_orders: &[2, 3, 6],
        reflections: true,
        glides: true,
        orbits: &[
            ("e2", 2, C1),
            ("e1^0", 1, C2),
            ("e1^1", 1, C2),
            ("e1^2", 1, C2),
            ("e0^0", 0, D6),
            ("e0^1", 0, D3),
            ("e0^2", 0, D2),
        ],
        boundary: &[
            ("e2", "e1^0", 1, "C1->C2"),
            ("e2", "e1^1", 1, "C1->C2"),
            ("e2", "e1^2", 1, "C1->C2"),
            ("e1^0", "e0^1", 1, "C2->D3"),
            ("e1^0", "e0^0", -1, "C2->D6[s]"),
            ("e1^1", "e0^2", 1, "C2->D2[s]"),
            ("e1^1", "e0^1", -1, "C2->D3"),
            ("e1^2", "e0^0", 1, "C2->D6[sr]"),
            ("e1^2", "e0^2", -1, "C2->D2[sr]"),
        ],
    },
];

impl Definition {
    fn record(&self) -> GroupRecord {
        GroupRecord {
            name: self.name.to_owned(),
            point_group: self.point_group,
            split: self.split,
            torsion_primes: self.torsion_primes.to_vec(),
            has_reflections: self.reflections,
            has_glide_reflections: self.glides,
            rotation_orders: self.rotation_orders.to_vec(),
        }
    }

    fn complex(&self) -> EquivariantComplex {
        EquivariantComplex {
            group_name: self.name.to_owned(),
            orbits: self
                .orbits
                .iter()
                .map(|&(id, dimension, stabilizer)| CellOrbit { orbit_id: id.to_owned(), dimension, stabilizer })
                .collect(),
            boundary: self
                .boundary
                .iter()
                .map(|&(source, target, sign, emb)| BoundaryTerm {
                    source: source.to_owned(),
                    target: target.to_owned(),
                    sign: if sign > 0 { Sign::Plus } else { Sign::Minus },
                    embedding: emb.to_owned(),
                })
                .collect(),
            metadata: Some(self.record()),
        }
    }
}

/// The 17 names in the standard order, from `p1` to `p6m`.
pub fn list_groups() -> Vec<&'static str> {
    GROUPS.iter().map(|g| g.name).collect()
}

pub fn get_group(name: &str) -> Result<(EquivariantComplex, GroupRecord), UnknownGroup> {
    GROUPS
        .iter()
        .find(|g| g.name == name)
        .map(|g| (g.complex(), g.record()))
        .ok_or_else(|| UnknownGroup { name: name.to_owned() })
}

use bredon_core::gcw::{assemble_differential, chain_rank, validate, EquivariantComplex, Sign};
use bredon_core::homology::{compute_homology, verify_basis};
use bredon_core::intlinalg::{smith_normal_form, IntegerMatrix};
use bredon_core::wallpaper::{get_group, list_groups};
use num_bigint::BigInt;
use proptest::prelude::*;

fn complex(name: &str) -> EquivariantComplex {
    get_group(name).unwrap().0
}

fn column(phi: &IntegerMatrix, j: usize) -> Vec<i64> {
    phi.column(j).iter().map(|x| i64::try_from(x).unwrap()).collect()
}

fn phi(name: &str, d: usize) -> IntegerMatrix {
    assemble_differential(&complex(name), d).unwrap()
}

#[test]
fn glide_boundary_is_twice_an_edge() {
    assert_eq!(column(&phi("pg", 2), 0), [2, 0]);
}

#[test]
fn cm_top_boundary() {
    assert_eq!(column(&phi("cm", 2), 0), [2, 1, 1]);
}

#[test]
fn p2_top_boundary_vanishes() {
    assert!(phi("p2", 2).is_zero());
}

#[test]
fn p4g_mirror_edge() {
    // alpha_0^2 - alpha_0^3 in C_0 = Z^4 (D2) + Z^4 (C4)
    assert_eq!(column(&phi("p4g", 1), 1), [0, 1, -1, 0, 0, 0, 0, 0]);
}

#[test]
fn pmm_first_edge() {
    // ind of the trivial character of a C2 along a reflection class of D2
    let p = phi("pmm", 1);
    let mut expected = vec![0; 16];
    expected[0] = -1;
    expected[1] = -1;
    expected[4] = 1;
    expected[5] = 1;
    assert_eq!(column(&p, 0), expected);
}

#[test]
fn p6m_vertex_ranks() {
    assert_eq!(chain_rank(&complex("p6m"), 0).0, 13);
    assert_eq!(chain_rank(&complex("p2"), 0).0, 8);
    let (rank, labels) = chain_rank(&complex("p1"), 2);
    assert_eq!(rank, 1);
    assert_eq!(labels[0].character_name, "gamma");
}

#[test]
fn every_builtin_is_a_chain_complex() {
    for name in list_groups() {
        let c = complex(name);
        assert!(validate(&c).is_empty(), "{name}");
        assert!((&phi(name, 1) * &phi(name, 2)).is_zero(), "{name}");
    }
}

#[test]
fn flipped_sign_in_pmm_breaks_the_complex() {
    let mut c = complex("pmm");
    let t = c.boundary.iter_mut().find(|t| t.source == "e2").unwrap();
    t.sign = Sign::Minus;
    let v = validate(&c);
    assert_eq!(v.len(), 1);
    assert!(v[0].contains("Phi_1 * Phi_2"));
}

#[test]
fn wrong_sub_group_is_reported() {
    let mut c = complex("p4m");
    c.boundary.iter_mut().find(|t| t.source == "e1^0").unwrap().embedding = "C1->D4".into();
    assert_eq!(validate(&c).len(), 1);
}

#[test]
fn euler_identity_for_every_group() {
    for name in list_groups() {
        let r = compute_homology(&complex(name)).unwrap();
        assert_eq!(r.chain_euler_characteristic(), r.homology_euler_characteristic(), "{name}");
    }
}

#[test]
fn emitted_bases_are_cycles() {
    for name in list_groups() {
        let r = compute_homology(&complex(name)).unwrap();
        for (d, out) in [(1, &r.phi1), (2, &r.phi2)] {
            let h = r.h(d);
            for e in h.basis.iter().chain(&h.torsion_basis) {
                assert!(out.mul_vec(&e.coefficients).unwrap().iter().all(|x| x == &BigInt::from(0)), "{name} H{d}");
            }
        }
    }
}

#[test]
fn complex_survives_json() {
    let c = complex("p4g");
    let text = serde_json::to_string(&c).unwrap();
    assert_eq!(serde_json::from_str::<EquivariantComplex>(&text).unwrap(), c);
}

#[test]
fn invariant_factors_of_differentials() {
    let factors = |m: &IntegerMatrix| {
        smith_normal_form(m).invariant_factors.iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(factors(&phi("p2", 1)), [1, 1, 1]);
    assert_eq!(factors(&phi("pg", 2)), [2]);
    assert_eq!(factors(&phi("pmm", 1)), [1; 7]);
    assert_eq!(factors(&phi("pgg", 2)), [2]);
    assert_eq!(factors(&phi("cmm", 2)), [1]);
}

// elementary column operations on the candidate list
fn unimodular(n: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 0..12)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn acceptance_is_invariant_under_unimodular_change(
        group in prop::sample::select(vec!["p2", "pm", "cm", "pmg", "p4m", "p6", "p3m1"]),
        degree in 0usize..=1,
        ops in unimodular(9),
        negate in 0usize..9,
    ) {
        let r = compute_homology(&complex(group)).unwrap();
        let h = r.h(degree);
        prop_assume!(h.torsion.is_empty() && h.free_rank > 0);
        let mut basis: Vec<Vec<BigInt>> = h.basis.iter().map(|e| e.coefficients.clone()).collect();
        let k = basis.len();
        for (i, j, c) in ops {
            let (i, j) = (i % k, j % k);
            if i != j {
                let add: Vec<BigInt> = basis[j].iter().map(|x| x * c).collect();
                for (a, b) in basis[i].iter_mut().zip(add) {
                    *a += b;
                }
            }
        }
        for x in basis[negate % k].iter_mut() {
            *x = -x.clone();
        }
        prop_assert!(verify_basis(&r, degree, &basis).unwrap().is_accept());
    }
}

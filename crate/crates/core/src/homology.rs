//! Bredon homology groups with explicit, labeled bases.
//!
//! Every degree is handled the same way. With `K` a lattice basis of the
//! cycles `ker Phi_d` (all of `C_0` in degree 0), the boundaries are
//! rewritten in cycle coordinates as the integer solution `X` of
//! `K X = Phi_(d+1)`, and `H_d = coker X`. Generators are columns of the
//! Smith transform `P^-1` of `X`, pushed back into `C_d` through `K`.

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::gcw::{assemble_differential, chain_rank, validate, EquivariantComplex, GcwError, GeneratorLabel};
use crate::intlinalg::{
    bigint_json, kernel_basis, smith_normal_form, solve_with_snf, IntegerMatrix, LinalgError, SnfDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("invalid complex: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error(transparent)]
    Gcw(#[from] GcwError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("boundaries of degree {0} are not cycles")]
    Broken(usize),
    #[error("homology is computed in degrees 0, 1 and 2, not {0}")]
    Degree(usize),
    #[error("unknown generator {label:?} in degree {degree}")]
    UnknownLabel { label: String, degree: usize },
    #[error("cannot parse {expression:?}: {reason}")]
    Parse { expression: String, reason: String },
    #[error("vector has {found} coordinates, degree {degree} chains have {expected}")]
    Length { degree: usize, expected: usize, found: usize },
}

/// An integer chain together with its rendering over the generator labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainElement {
    #[serde(with = "bigint_json::vec")]
    pub coefficients: Vec<BigInt>,
    pub expression: String,
}

impl ChainElement {
    fn new(coefficients: Vec<BigInt>, labels: &[GeneratorLabel]) -> Self {
        let expression = format_combination(&coefficients, labels);
        ChainElement { coefficients, expression }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    #[serde(with = "bigint_json::vec")]
    pub torsion: Vec<BigInt>,
    pub basis: Vec<ChainElement>,
    pub torsion_basis: Vec<ChainElement>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// `Z^r + Z/d1 + ...`, or `0`.
impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub group_name: String,
    pub chain_ranks: [usize; 3],
    /// Generators of `C_0`, `C_1`, `C_2`.
    pub generators: [Vec<GeneratorLabel>; 3],
    /// `H_0`, `H_1`, `H_2`.
    pub homology: [HomologyGroup; 3],
    pub phi1: IntegerMatrix,
    pub phi2: IntegerMatrix,
    #[serde(with = "bigint_json::vec")]
    pub phi1_invariant_factors: Vec<BigInt>,
    #[serde(with = "bigint_json::vec")]
    pub phi2_invariant_factors: Vec<BigInt>,
}

impl HomologyReport {
    pub fn h(&self, degree: usize) -> &HomologyGroup {
        &self.homology[degree]
    }

    /// `rank C_0 - rank C_1 + rank C_2`.
    pub fn chain_euler_characteristic(&self) -> i64 {
        let [r0, r1, r2] = self.chain_ranks.map(|r| r as i64);
        r0 - r1 + r2
    }

    /// Alternating sum of the free ranks of `H_0`, `H_1`, `H_2`.
    pub fn homology_euler_characteristic(&self) -> i64 {
        let [h0, h1, h2] = [0, 1, 2].map(|d| self.homology[d].free_rank as i64);
        h0 - h1 + h2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "lowercase")]
pub enum Verdict {
    Accept,
    Reject(String),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Cycles and boundaries of one degree in the Smith coordinates of `X`.
struct Degree {
    phi_out: Option<IntegerMatrix>,
    kernel: IntegerMatrix,
    kernel_snf: SnfDecomposition,
    snf: SnfDecomposition,
}

struct Coordinates {
    /// One residue per invariant factor greater than one.
    torsion: Vec<BigInt>,
    free: Vec<BigInt>,
}

impl Degree {
    fn new(phi1: &IntegerMatrix, phi2: &IntegerMatrix, d: usize) -> Result<Self, HomologyError> {
        let (phi_out, incoming) = match d {
            0 => (None, phi1.clone()),
            1 => (Some(phi1.clone()), phi2.clone()),
            2 => (Some(phi2.clone()), IntegerMatrix::zeros(phi2.cols(), 0)),
            _ => return Err(HomologyError::Degree(d)),
        };
        let kernel = match &phi_out {
            None => IntegerMatrix::identity(incoming.rows()),
            Some(phi) => kernel_basis(phi),
        };
        let kernel_snf = smith_normal_form(&kernel);
        let x = solve_with_snf(&kernel_snf, &incoming).ok_or(HomologyError::Broken(d))?;
        Ok(Degree { phi_out, kernel, kernel_snf, snf: smith_normal_form(&x) })
    }

    fn chain_rank(&self) -> usize {
        self.kernel.rows()
    }

    fn torsion_positions(&self) -> Vec<usize> {
        (0..self.snf.rank()).filter(|&i| !self.snf.invariant_factors[i].is_one()).collect()
    }

    fn free_positions(&self) -> core::ops::Range<usize> {
        self.snf.rank()..self.kernel.cols()
    }

    fn is_cycle(&self, z: &[BigInt]) -> bool {
        match &self.phi_out {
            None => true,
            Some(phi) => phi.mul_vec(z).is_ok_and(|v| v.iter().all(Zero::is_zero)),
        }
    }

    fn coordinates(&self, z: &[BigInt]) -> Option<Coordinates> {
        let column = IntegerMatrix::from_columns(z.len(), &[z.to_vec()]);
        let y = solve_with_snf(&self.kernel_snf, &column)?;
        let w = &self.snf.p * &y;
        let torsion =
            self.torsion_positions().into_iter().map(|i| w[(i, 0)].mod_floor(&self.snf.invariant_factors[i])).collect();
        let free = self.free_positions().map(|i| w[(i, 0)].clone()).collect();
        Some(Coordinates { torsion, free })
    }

    fn generator(&self, position: usize) -> Vec<BigInt> {
        self.kernel.mul_vec(&self.snf.p_inv.column(position)).expect("kernel and transform shapes agree")
    }

    fn computed_basis(&self) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let torsion = self.torsion_positions().into_iter().map(|i| self.generator(i)).collect();
        let free = self.free_positions().map(|i| self.generator(i)).collect();
        (free, torsion)
    }

    fn check(&self, candidates: &[Vec<BigInt>], degree: usize) -> Result<Verdict, HomologyError> {
        let n = self.chain_rank();
        for z in candidates {
            if z.len() != n {
                return Err(HomologyError::Length { degree, expected: n, found: z.len() });
            }
        }
        for (j, z) in candidates.iter().enumerate() {
            if !self.is_cycle(z) {
                return Ok(Verdict::Reject(format!("candidate {} is not a cycle", j + 1)));
            }
        }
        let factors: Vec<BigInt> =
            self.torsion_positions().into_iter().map(|i| self.snf.invariant_factors[i].clone()).collect();
        let t = factors.len();
        let f = self.free_positions().len();
        let k = candidates.len();
        if k != f + t {
            return Ok(Verdict::Reject(format!("{k} candidates for a group needing {} generators", f + t)));
        }
        let coords: Vec<Coordinates> = candidates
            .iter()
            .map(|z| self.coordinates(z).ok_or(HomologyError::Broken(degree)))
            .collect::<Result<_, _>>()?;

        // [M | R]: candidate coordinates next to the torsion relations
        let mut a = IntegerMatrix::zeros(t + f, k + t);
        for (j, c) in coords.iter().enumerate() {
            for (i, v) in c.torsion.iter().chain(&c.free).enumerate() {
                a[(i, j)] = v.clone();
            }
        }
        for (i, d) in factors.iter().enumerate() {
            a[(i, k + i)] = d.clone();
        }
        let onto = smith_normal_form(&a);
        if onto.rank() != t + f || !onto.invariant_factors.iter().all(One::is_one) {
            return Ok(Verdict::Reject("candidates do not generate the homology group".into()));
        }

        let orders: Vec<BigInt> = coords
            .iter()
            .map(|c| {
                if c.free.iter().any(|v| !v.is_zero()) {
                    return BigInt::zero();
                }
                c.torsion.iter().zip(&factors).fold(BigInt::one(), |acc, (v, d)| acc.lcm(&(d / v.gcd(d))))
            })
            .collect();
        let relations = kernel_basis(&a);
        let lattice = IntegerMatrix::from_columns(
            k,
            &(0..relations.cols()).map(|j| relations.column(j)[..k].to_vec()).collect::<Vec<_>>(),
        );
        let lattice_snf = smith_normal_form(&lattice);
        let finite: Vec<&BigInt> = orders.iter().filter(|d| d.is_positive()).collect();
        let covolume: BigInt = lattice_snf.invariant_factors.iter().product();
        let expected: BigInt = finite.iter().copied().product();
        if lattice_snf.rank() != finite.len() || covolume != expected {
            return Ok(Verdict::Reject("candidates satisfy relations beyond their own orders".into()));
        }
        Ok(Verdict::Accept)
    }

    /// Prefers short combinations of generators; falls back to the Smith
    /// generators when no such basis is found.
    fn preferred_basis(&self, degree: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let computed = self.computed_basis();
        let f = self.free_positions().len();
        let factors: Vec<BigInt> =
            self.torsion_positions().into_iter().map(|i| self.snf.invariant_factors[i].clone()).collect();
        let candidates: Vec<(Vec<BigInt>, Coordinates)> = small_vectors(self.chain_rank())
            .into_iter()
            .filter(|z| self.is_cycle(z))
            .filter_map(|z| self.coordinates(&z).map(|c| (z, c)))
            .collect();

        let mut free: Vec<Vec<BigInt>> = Vec::new();
        let mut free_coords: Vec<Vec<BigInt>> = Vec::new();
        for (z, c) in &candidates {
            if free.len() == f {
                break;
            }
            if c.free.iter().all(Zero::is_zero) {
                continue;
            }
            free_coords.push(c.free.clone());
            let s = smith_normal_form(&IntegerMatrix::from_columns(f, &free_coords));
            if s.rank() == free_coords.len() && s.invariant_factors.iter().all(One::is_one) {
                free.push(z.clone());
            } else {
                free_coords.pop();
            }
        }
        if free.len() < f {
            free = computed.0.clone();
        }

        let torsion: Vec<Vec<BigInt>> =
            factors
                .iter()
                .enumerate()
                .map(|(i, d)| {
                    candidates
                        .iter()
                        .find(|(_, c)| {
                            c.free.iter().all(Zero::is_zero)
                                && c.torsion.iter().enumerate().all(|(j, v)| {
                                    if j == i {
                                        v.gcd(d).is_one()
                                    } else {
                                        v.is_zero()
                                    }
                                })
                        })
                        .map_or_else(|| computed.1[i].clone(), |(z, _)| z.clone())
                })
                .collect();

        let all: Vec<Vec<BigInt>> = torsion.iter().chain(&free).cloned().collect();
        match self.check(&all, degree) {
            Ok(Verdict::Accept) => (free, torsion),
            _ => computed,
        }
    }
}

// e_i, then e_i + e_j and e_i - e_j, then e_i + e_j + e_k
fn small_vectors(n: usize) -> Vec<Vec<BigInt>> {
    let unit = |idx: &[(usize, i64)]| {
        let mut v = vec![BigInt::zero(); n];
        for &(i, c) in idx {
            v[i] = BigInt::from(c);
        }
        v
    };
    let mut out = Vec::new();
    for i in 0..n {
        out.push(unit(&[(i, 1)]));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            out.push(unit(&[(i, 1), (j, 1)]));
            out.push(unit(&[(i, 1), (j, -1)]));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push(unit(&[(i, 1), (j, 1), (k, 1)]));
            }
        }
    }
    out
}

fn generators_of(complex: &EquivariantComplex) -> [Vec<GeneratorLabel>; 3] {
    [0, 1, 2].map(|d| chain_rank(complex, d).1)
}

/// `H_0`, `H_1`, `H_2` of a validated complex.
pub fn compute_homology(complex: &EquivariantComplex) -> Result<HomologyReport, HomologyError> {
    let problems = validate(complex);
    if !problems.is_empty() {
        return Err(HomologyError::Invalid(problems));
    }
    let generators = generators_of(complex);
    let phi1 = assemble_differential(complex, 1)?;
    let phi2 = assemble_differential(complex, 2)?;
    let mut groups = Vec::with_capacity(3);
    for (d, labels) in generators.iter().enumerate() {
        let data = Degree::new(&phi1, &phi2, d)?;
        let torsion = data.torsion_positions().into_iter().map(|i| data.snf.invariant_factors[i].clone()).collect();
        let (free, tors) = data.preferred_basis(d);
        groups.push(HomologyGroup {
            degree: d,
            free_rank: free.len(),
            torsion,
            basis: free.into_iter().map(|v| ChainElement::new(v, labels)).collect(),
            torsion_basis: tors.into_iter().map(|v| ChainElement::new(v, labels)).collect(),
        });
    }
    let homology: [HomologyGroup; 3] = groups.try_into().expect("three degrees");
    Ok(HomologyReport {
        group_name: complex.group_name.clone(),
        chain_ranks: generators.each_ref().map(Vec::len),
        phi1_invariant_factors: smith_normal_form(&phi1).invariant_factors,
        phi2_invariant_factors: smith_normal_form(&phi2).invariant_factors,
        generators,
        homology,
        phi1,
        phi2,
    })
}

/// Decides whether `candidates` (chains of degree `degree`) form a basis of
/// `H_degree` in invariant-factor form: every candidate is a cycle, their
/// classes generate, and the only relations among them are each class's own
/// order.
pub fn verify_basis(
    report: &HomologyReport,
    degree: usize,
    candidates: &[Vec<BigInt>],
) -> Result<Verdict, HomologyError> {
    if degree > 2 {
        return Err(HomologyError::Degree(degree));
    }
    Degree::new(&report.phi1, &report.phi2, degree)?.check(candidates, degree)
}

/// `verify_basis` on expressions such as `"alpha_0^1 + 2*alpha_1^2"`.
pub fn verify_basis_expressions(
    report: &HomologyReport,
    degree: usize,
    candidates: &[&str],
) -> Result<Verdict, HomologyError> {
    if degree > 2 {
        return Err(HomologyError::Degree(degree));
    }
    let labels = &report.generators[degree];
    let vectors = candidates.iter().map(|e| parse_combination(e, labels, degree)).collect::<Result<Vec<_>, _>>()?;
    verify_basis(report, degree, &vectors)
}

/// Renders a chain as `2*beta_0 - alpha^1`; the zero chain is `0`.
pub fn format_combination(coefficients: &[BigInt], labels: &[GeneratorLabel]) -> String {
    let mut out = String::new();
    for (c, label) in coefficients.iter().zip(labels) {
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
            out.push('*');
        }
        out.push_str(&label.character_name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses an integer combination of generator names, optionally wrapped in
/// square brackets. Coefficients may be written `2*beta_0` or `2beta_0`.
pub fn parse_combination(
    expression: &str,
    labels: &[GeneratorLabel],
    degree: usize,
) -> Result<Vec<BigInt>, HomologyError> {
    let fail = |reason: &str| HomologyError::Parse { expression: expression.to_owned(), reason: reason.to_owned() };
    let mut text = expression.trim();
    if let Some(inner) = text.strip_prefix('[') {
        text = inner.strip_suffix(']').ok_or_else(|| fail("unbalanced bracket"))?.trim();
    }
    let mut out = vec![BigInt::zero(); labels.len()];
    if text == "0" {
        return Ok(out);
    }
    let chars: Vec<char> = text.chars().collect();
    let skip_space = |mut i: usize| {
        while i < chars.len() && chars[i].is_whitespace() {
            i += 1;
        }
        i
    };
    let mut i = skip_space(0);
    if i == chars.len() {
        return Err(fail("empty expression"));
    }
    let mut first = true;
    while i < chars.len() {
        let mut sign = BigInt::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i = skip_space(i + 1);
        } else if !first {
            return Err(fail("expected + or -"));
        }
        first = false;
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coefficient = if i > start {
            let digits: String = chars[start..i].iter().collect();
            digits.parse::<BigInt>().map_err(|_| fail("bad coefficient"))?
        } else {
            BigInt::one()
        };
        i = skip_space(i);
        if i < chars.len() && chars[i] == '*' {
            i = skip_space(i + 1);
        }
        let start = i;
        while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '^') {
            i += 1;
        }
        if i == start {
            return Err(fail("expected a generator name"));
        }
        let name: String = chars[start..i].iter().collect();
        let slot = labels
            .iter()
            .position(|l| l.character_name == name)
            .ok_or(HomologyError::UnknownLabel { label: name, degree })?;
        out[slot] += sign * coefficient;
        i = skip_space(i);
    }
    Ok(out)
}

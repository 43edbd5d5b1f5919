//! Relation polynomials built from the block product `P = J1 * M * Y * N * J` and
//! the coefficient identities used to show they lie outside `I(Sp6)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    format_rat, rat, BigRat, MPoly, MonomialOrder, ParamFamily, ParamPoly, ParamSymbol, QPoly,
    VarIndex, XMonomial, NUM_PARAMS,
};
use crate::error::ForgeError;
use crate::groebner::{remainder, GroebnerBasis};
use crate::symplectic::{determinant, embed6, g_polynomial, permutation_pair, random_symplectic, RatMatrix};

/// 6x6 matrix of polynomials.
pub type PolyMatrix = Vec<Vec<MPoly>>;

fn param_entry(fam: ParamFamily, r: usize, c: usize) -> MPoly {
    MPoly::param(ParamSymbol::entry(fam, r, c))
}

fn zero_matrix(n: usize) -> PolyMatrix {
    vec![vec![MPoly::zero(); n]; n]
}

/// The two lower block-triangular matrices `M = [[A_s, 0], [B_s, C_s]]` and
/// `N = [[I_3, 0], [B0, C0]]`.
#[derive(Clone, Debug)]
pub struct BlockSpec {
    pub m: PolyMatrix,
    pub n: PolyMatrix,
}

impl BlockSpec {
    /// Fully symbolic blocks: `A_s = (d_ij)`, `B_s = (f_ij)`, `C_s = (e_ij)`,
    /// `B0 = (b_ij)`, `C0 = (c_ij)`.
    pub fn symbolic() -> Self {
        let mut m = zero_matrix(6);
        let mut n = zero_matrix(6);
        for r in 1..=3 {
            for c in 1..=3 {
                m[r - 1][c - 1] = param_entry(ParamFamily::D, r, c);
                m[r + 2][c - 1] = param_entry(ParamFamily::F, r, c);
                m[r + 2][c + 2] = param_entry(ParamFamily::E, r, c);
                n[r + 2][c - 1] = param_entry(ParamFamily::B, r, c);
                n[r + 2][c + 2] = param_entry(ParamFamily::C, r, c);
            }
            n[r - 1][r - 1] = MPoly::one();
        }
        Self { m, n }
    }

    /// Blocks from explicit matrices (used by tests for degenerate choices).
    pub fn from_matrices(m: PolyMatrix, n: PolyMatrix) -> Self {
        Self { m, n }
    }

    /// Both matrices are lower block-triangular and `N` has identity top-left block.
    pub fn is_well_formed(&self) -> bool {
        let upper_right_zero =
            |a: &PolyMatrix| (0..3).all(|r| (3..6).all(|c| a[r][c].is_zero()));
        let n_top_left_identity = (0..3).all(|r| {
            (0..3).all(|c| if r == c { self.n[r][c] == MPoly::one() } else { self.n[r][c].is_zero() })
        });
        upper_right_zero(&self.m) && upper_right_zero(&self.n) && n_top_left_identity
    }
}

fn matmul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let n = a.len();
    let mut out = zero_matrix(n);
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut acc = MPoly::zero();
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    acc = acc.add(&a[i][k].mul(&b[k][j]));
                }
            }
            *cell = acc;
        }
    }
    out
}

fn permutation(m: &[[u8; 6]; 6]) -> PolyMatrix {
    m.iter()
        .map(|r| r.iter().map(|&v| if v == 1 { MPoly::one() } else { MPoly::zero() }).collect())
        .collect()
}

/// The generic matrix `Y = (X_ij)`.
pub fn generic_matrix() -> PolyMatrix {
    (1..=6).map(|r| (1..=6).map(|c| MPoly::var(VarIndex::at(r, c))).collect()).collect()
}

/// `P = J1 * (((M * Y) * N) * J)`.
pub fn build_p_matrix(spec: &BlockSpec) -> PolyMatrix {
    let pp = permutation_pair();
    let f0 = matmul(&spec.m, &generic_matrix());
    let f1 = matmul(&f0, &spec.n);
    let f2 = matmul(&f1, &permutation(&pp.j));
    matmul(&permutation(&pp.j1), &f2)
}

/// 2x2 adjugate `[[f22, -f12], [-f21, f11]]`.
pub fn adjugate2(f: &[[MPoly; 2]; 2]) -> [[MPoly; 2]; 2] {
    [[f[1][1].clone(), f[0][1].neg()], [f[1][0].neg(), f[0][0].clone()]]
}

pub fn det2(f: &[[MPoly; 2]; 2]) -> MPoly {
    f[0][0].mul(&f[1][1]).sub(&f[0][1].mul(&f[1][0]))
}

pub fn mul2(a: &[[MPoly; 2]; 2], b: &[[MPoly; 2]; 2]) -> [[MPoly; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]))))
}

/// The 2x2 block `F_{bi,bj}` (1-based block indices) of a 6x6 matrix.
pub fn block2(p: &PolyMatrix, bi: usize, bj: usize) -> [[MPoly; 2]; 2] {
    let (r0, c0) = (2 * (bi - 1), 2 * (bj - 1));
    std::array::from_fn(|i| std::array::from_fn(|j| p[r0 + i][c0 + j].clone()))
}

/// Which relation polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// `det F11 - d1`.
    Arch,
    /// `det F21 - d2 det F11`.
    Ssing,
    /// Off-diagonal entry of `adj(F11) F21`.
    Ord,
    /// Top-left entry of `F11`.
    Linear,
}

impl RelationKind {
    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Arch => "arch",
            RelationKind::Ssing => "ssing",
            RelationKind::Ord => "ord",
            RelationKind::Linear => "s1",
        }
    }
}

/// The four relation polynomials.
#[derive(Clone, Debug)]
pub struct RelationCatalog {
    pub r_arch: MPoly,
    pub r_ssing: MPoly,
    pub r_ord1: MPoly,
    pub r_s1: MPoly,
}

impl RelationCatalog {
    pub fn get(&self, kind: RelationKind) -> &MPoly {
        match kind {
            RelationKind::Arch => &self.r_arch,
            RelationKind::Ssing => &self.r_ssing,
            RelationKind::Ord => &self.r_ord1,
            RelationKind::Linear => &self.r_s1,
        }
    }

    /// The catalog for fully symbolic blocks.
    pub fn symbolic() -> Self {
        build_relations(&build_p_matrix(&BlockSpec::symbolic()))
    }
}

pub fn build_relations(p: &PolyMatrix) -> RelationCatalog {
    let at = |r: usize, c: usize| &p[r - 1][c - 1];
    let minor = |a: (usize, usize), b: (usize, usize), c: (usize, usize), d: (usize, usize)| {
        at(a.0, a.1).mul(at(b.0, b.1)).sub(&at(c.0, c.1).mul(at(d.0, d.1)))
    };
    let det_f11 = minor((1, 1), (2, 2), (1, 2), (2, 1));
    let det_f21 = minor((3, 1), (4, 2), (3, 2), (4, 1));
    let d1 = MPoly::param(ParamSymbol::D1);
    let d2 = MPoly::param(ParamSymbol::D2);
    RelationCatalog {
        r_arch: det_f11.sub(&d1),
        r_ssing: det_f21.sub(&d2.mul(&det_f11)),
        r_ord1: minor((2, 2), (3, 2), (1, 2), (4, 2)),
        r_s1: at(1, 1).clone(),
    }
}

/// A coefficient the proofs read off a remainder: the remainder coefficient of
/// `monomial`, after setting the listed parameters to zero, must be a nonzero
/// rational multiple of `expected`.
#[derive(Clone, Debug)]
pub struct ExpectedIdentity {
    pub relation: RelationKind,
    pub monomial: XMonomial,
    pub expected: ParamPoly,
    /// Parameters assumed zero in the case analysis (empty for the headline identities).
    pub assume_zero: Vec<ParamSymbol>,
    pub anchor: &'static str,
}

fn quad(a: (usize, usize), b: (usize, usize)) -> XMonomial {
    XMonomial::from_vars(&[VarIndex::at(a.0, a.1), VarIndex::at(b.0, b.1)])
}

fn d(r: usize, c: usize) -> ParamSymbol {
    ParamSymbol::d(r, c)
}

fn e(r: usize, c: usize) -> ParamSymbol {
    ParamSymbol::e(r, c)
}

fn product(a: ParamSymbol, b: ParamSymbol) -> ParamPoly {
    ParamPoly::monomial(rat(1), &[a, b])
}

fn minor(a: ParamSymbol, b: ParamSymbol, c: ParamSymbol, dd: ParamSymbol) -> ParamPoly {
    let mut p = product(a, b);
    crate::algebra::Coeff::sub_assign_ref(&mut p, &product(c, dd));
    p
}

const ANCHOR_ARCH: &str = "prop-archimedean: c(X11X23), c(X11X33), c(X21X33)";
const ANCHOR_SSING: &str = "prop-supersingular: remainder coefficients";
const ANCHOR_SSING_CASES: &str = "prop-supersingular: case analysis";
const ANCHOR_ORD: &str = "prop-ordinary: c(X_k3 X_j3) triples";
const ANCHOR_ORD_OBSERVED: &str = "prop-ordinary: computed c(X_k3 X_j3) triples";

/// The headline identities of the three propositions, as printed.
pub fn expected_identities(kind: RelationKind) -> Vec<ExpectedIdentity> {
    let id = |relation, monomial, expected, anchor| ExpectedIdentity {
        relation,
        monomial,
        expected,
        assume_zero: Vec::new(),
        anchor,
    };
    match kind {
        RelationKind::Arch => vec![
            id(kind, quad((1, 1), (2, 3)), minor(d(1, 1), d(3, 2), d(1, 2), d(3, 1)), ANCHOR_ARCH),
            id(kind, quad((1, 1), (3, 3)), minor(d(1, 1), d(3, 3), d(1, 3), d(3, 1)), ANCHOR_ARCH),
            id(kind, quad((2, 1), (3, 3)), minor(d(1, 2), d(3, 3), d(1, 3), d(3, 2)), ANCHOR_ARCH),
        ],
        RelationKind::Ssing => vec![
            id(kind, quad((3, 3), (5, 1)), product(d(2, 3), e(2, 2)), ANCHOR_SSING),
            id(kind, quad((2, 3), (6, 1)), product(d(2, 2), e(2, 3)), ANCHOR_SSING),
            id(kind, quad((2, 1), (4, 3)), product(d(2, 2), e(2, 1)), ANCHOR_SSING),
            id(kind, quad((1, 1), (5, 3)), product(d(2, 1), e(2, 2)), ANCHOR_SSING),
            id(kind, quad((1, 1), (6, 3)), product(d(2, 1), e(2, 3)), ANCHOR_SSING),
        ],
        RelationKind::Ord => {
            // as printed: X_k3 * {X63, X43, X53} give d3k * {e21, e22, e33}
            let mut v = Vec::new();
            for k in 1..=3 {
                for ((r, c), (er, ec)) in [((6, 3), (2, 1)), ((4, 3), (2, 2)), ((5, 3), (3, 3))] {
                    v.push(id(kind, quad((k, 3), (r, c)), product(d(3, k), e(er, ec)), ANCHOR_ORD));
                }
            }
            v
        }
        RelationKind::Linear => Vec::new(),
    }
}

/// The ordinary-relation coefficients as they actually come out of the reduction:
/// `X_k3 * {X63, X43, X53}` carry `d3k * {e23, e21, e22}`. Reported next to the
/// printed table, which pairs the monomials with `{e21, e22, e33}`.
pub fn observed_ord_identities() -> Vec<ExpectedIdentity> {
    let mut v = Vec::new();
    for k in 1..=3 {
        for ((r, c), (er, ec)) in [((6, 3), (2, 3)), ((4, 3), (2, 1)), ((5, 3), (2, 2))] {
            v.push(ExpectedIdentity {
                relation: RelationKind::Ord,
                monomial: quad((k, 3), (r, c)),
                expected: product(d(3, k), e(er, ec)),
                assume_zero: Vec::new(),
                anchor: ANCHOR_ORD_OBSERVED,
            });
        }
    }
    v
}

/// Coefficients consulted inside the supersingular case analysis, each under the
/// parameter vanishing assumptions of its case.
pub fn case_analysis_identities() -> Vec<ExpectedIdentity> {
    let case = |monomial, expected, assume_zero: Vec<ParamSymbol>| ExpectedIdentity {
        relation: RelationKind::Ssing,
        monomial,
        expected,
        assume_zero,
        anchor: ANCHOR_SSING_CASES,
    };
    vec![
        case(quad((3, 3), (4, 1)), product(d(2, 3), e(2, 1)), vec![d(2, 1), d(2, 2), e(2, 2)]),
        case(quad((3, 3), (6, 1)), product(e(2, 3), d(2, 3)), vec![d(2, 1), d(2, 2), e(2, 2), e(2, 1)]),
        case(quad((2, 3), (5, 1)), product(e(2, 2), d(2, 2)), vec![d(2, 1), e(2, 1), e(2, 3), d(2, 3)]),
        case(quad((3, 1), (4, 3)), product(d(2, 3), e(2, 1)), vec![e(2, 2), e(2, 3), d(2, 2)]),
        case(quad((3, 3), (6, 1)), product(e(2, 1), d(2, 1)), vec![e(2, 2), e(2, 3), d(2, 2), d(2, 3)]),
    ]
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub relation: RelationKind,
    pub monomial: String,
    pub assume_zero: Vec<String>,
    pub expected: String,
    pub actual: String,
    /// `actual = scalar * expected`, when such a nonzero rational exists.
    pub scalar: Option<String>,
    pub pass: bool,
    pub paper_anchor: String,
}

/// Remainders of the relation polynomials and the identity checks against them.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
    pub remainder_terms: BTreeMap<String, usize>,
    /// Full coefficient listing of every remainder, `(monomial, coefficient)`.
    pub remainders: BTreeMap<String, Vec<(String, String)>>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// First failing check as an error.
    pub fn ensure_all_pass(&self) -> Result<(), ForgeError> {
        match self.checks.iter().find(|c| !c.pass) {
            None => Ok(()),
            Some(c) => Err(ForgeError::IdentityMismatch {
                monomial: c.monomial.clone(),
                expected: c.expected.clone(),
                actual: c.actual.clone(),
            }),
        }
    }
}

/// Check one identity against a computed remainder.
pub fn check_identity(rem: &MPoly, id: &ExpectedIdentity) -> IdentityCheck {
    let mut actual = rem.coefficient(&id.monomial).cloned().unwrap_or_default();
    for s in &id.assume_zero {
        actual = actual.substitute(*s, &BigRat::zero());
    }
    let scalar = actual.ratio_to(&id.expected);
    IdentityCheck {
        relation: id.relation,
        monomial: id.monomial.to_string(),
        assume_zero: id.assume_zero.iter().map(|s| s.to_string()).collect(),
        expected: id.expected.to_string(),
        actual: actual.to_string(),
        pass: scalar.is_some(),
        scalar: scalar.as_ref().map(format_rat),
        paper_anchor: id.anchor.to_string(),
    }
}

/// Reduce the requested relations modulo `gb` and check their identity tables.
/// Supersingular checks include the case-analysis coefficients.
pub fn verify_identities(cat: &RelationCatalog, gb: &GroebnerBasis, kinds: &[RelationKind]) -> IdentityReport {
    let results: Vec<(RelationKind, MPoly)> =
        kinds.par_iter().map(|&k| (k, remainder(cat.get(k), gb))).collect();
    let mut checks = Vec::new();
    let mut remainder_terms = BTreeMap::new();
    let mut remainders = BTreeMap::new();
    for (kind, rem) in results {
        let mut table = expected_identities(kind);
        if kind == RelationKind::Ssing {
            table.extend(case_analysis_identities());
        }
        checks.extend(table.iter().map(|id| check_identity(&rem, id)));
        remainder_terms.insert(kind.name().to_string(), rem.len());
        remainders.insert(
            kind.name().to_string(),
            rem.coefficient_rules(MonomialOrder::Degrevlex)
                .into_iter()
                .map(|(m, c)| (m.to_string(), c.to_string()))
                .collect(),
        );
    }
    IdentityReport { checks, remainder_terms, remainders }
}

/// Evaluation-based evidence that a polynomial is not in `I(Sp6)`.
#[derive(Clone, Debug, Serialize)]
pub struct EvidenceReport {
    pub relation: String,
    pub trials: usize,
    pub nonzero: usize,
    pub not_in_ideal: bool,
}

/// Random nonzero integer parameters with `A_s`, `C_s` and `C0` invertible.
pub fn random_parameters(rng: &mut ChaCha8Rng, bound: i64) -> [BigRat; NUM_PARAMS] {
    let block = |vals: &[BigRat; NUM_PARAMS], fam: ParamFamily| -> RatMatrix {
        (1..=3)
            .map(|r| (1..=3).map(|c| vals[ParamSymbol::entry(fam, r, c).index()].clone()).collect())
            .collect()
    };
    loop {
        let vals: [BigRat; NUM_PARAMS] = std::array::from_fn(|_| {
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-bound..=bound);
            }
            rat(v)
        });
        if [ParamFamily::D, ParamFamily::E, ParamFamily::C]
            .iter()
            .all(|&f| !determinant(&block(&vals, f)).is_zero())
        {
            return vals;
        }
    }
}

/// Evaluate `p` at `trials` random symplectic points; a fresh random parameter
/// assignment is drawn for each point.
pub fn nonmembership_evidence(name: &str, p: &MPoly, trials: usize, seed: u64) -> EvidenceReport {
    let nonzero = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9).wrapping_add(t as u64));
            let params = random_parameters(&mut rng, 5);
            let x = embed6(&random_symplectic(3, rng.gen(), 2).expect("g = 3"));
            !p.evaluate(&x, &params).is_zero()
        })
        .count();
    EvidenceReport { relation: name.to_string(), trials, nonzero, not_in_ideal: nonzero > 0 }
}

/// Same harness for a rational polynomial (the negative control `g(X) - 1`).
pub fn evaluation_count(name: &str, p: &QPoly, trials: usize, seed: u64) -> EvidenceReport {
    let nonzero = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let x = embed6(&random_symplectic(3, seed.wrapping_add(t as u64), 2).expect("g = 3"));
            !p.evaluate(&x).is_zero()
        })
        .count();
    EvidenceReport { relation: name.to_string(), trials, nonzero, not_in_ideal: nonzero > 0 }
}

/// `g(X) - 1`, a member of `I(Sp6)`.
pub fn trivial_relation() -> QPoly {
    g_polynomial().sub(&QPoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Coeff;

    fn x(r: usize, c: usize) -> MPoly {
        MPoly::var(VarIndex::at(r, c))
    }

    fn identity_blocks() -> BlockSpec {
        let mut m = zero_matrix(6);
        let mut n = zero_matrix(6);
        for i in 0..6 {
            m[i][i] = MPoly::one();
            n[i][i] = MPoly::one();
        }
        BlockSpec::from_matrices(m, n)
    }

    /// Direct oracle: (J1 Y J)[r][c] = sum_k,l J1[r][k] Y[k][l] J[l][c], with both
    /// permutations having a single 1 per row/column.
    #[test]
    fn p_matrix_with_identity_blocks_is_a_permutation_of_y() {
        let p = build_p_matrix(&identity_blocks());
        let pp = permutation_pair();
        for r in 0..6 {
            for c in 0..6 {
                let k = (0..6).find(|&k| pp.j1[r][k] == 1).unwrap();
                let l = (0..6).find(|&l| pp.j[l][c] == 1).unwrap();
                assert_eq!(p[r][c], x(k + 1, l + 1));
            }
        }
        assert_eq!(p[0][0], x(1, 1));
    }

    #[test]
    fn symbolic_p_matrix_is_linear_in_x() {
        let spec = BlockSpec::symbolic();
        assert!(spec.is_well_formed());
        let p = build_p_matrix(&spec);
        for row in &p {
            for e in row {
                assert!(!e.is_zero());
                assert!(e.is_homogeneous(1));
            }
        }
        // P11 = (M Y N J)[1][1]; J's first column is e1, so P11 = (M Y N)[1][1]
        // = sum_k d1k (Y N)[k][1] = sum_k d1k (X_k1 + sum_l X_k(l+3) b_l1)
        let d11 = ParamPoly::symbol(ParamSymbol::d(1, 1));
        assert_eq!(p[0][0].coefficient(&XMonomial::var(VarIndex::at(1, 1))), Some(&d11));
        let d11_b11 = ParamPoly::monomial(rat(1), &[ParamSymbol::d(1, 1), ParamSymbol::entry(ParamFamily::B, 1, 1)]);
        assert_eq!(p[0][0].coefficient(&XMonomial::var(VarIndex::at(1, 4))), Some(&d11_b11));
        assert_eq!(p[0][0].len(), 12);
    }

    #[test]
    fn relation_degrees() {
        let cat = RelationCatalog::symbolic();
        let quadratic_plus_param = |p: &MPoly| p.terms().iter().all(|(m, _)| m.degree() == 2 || m.is_one());
        assert!(quadratic_plus_param(&cat.r_arch));
        assert_eq!(cat.r_arch.degree(), Some(2));
        assert!(cat.r_ssing.is_homogeneous(2));
        assert!(cat.r_ord1.is_homogeneous(2));
        assert!(cat.r_s1.is_homogeneous(1));
        // the constant of R_arch is exactly -d1
        assert_eq!(
            cat.r_arch.coefficient(&XMonomial::one()),
            Some(&ParamPoly::symbol(ParamSymbol::D1).neg())
        );
    }

    #[test]
    fn ssing_with_d2_zero_is_the_f21_minor() {
        let cat = RelationCatalog::symbolic();
        let p = build_p_matrix(&BlockSpec::symbolic());
        let minor = p[2][0].mul(&p[3][1]).sub(&p[2][1].mul(&p[3][0]));
        assert_eq!(cat.r_ssing.substitute_param(ParamSymbol::D2, &rat(0)), minor);
    }

    #[test]
    fn adjugate_identities() {
        let one = MPoly::one();
        let id2 = [[one.clone(), MPoly::zero()], [MPoly::zero(), one.clone()]];
        assert_eq!(adjugate2(&id2), id2);
        let f = [[x(1, 1), x(1, 2)], [x(2, 1), x(2, 2)]];
        let prod = mul2(&f, &adjugate2(&f));
        let det = det2(&f);
        assert_eq!(prod, [[det.clone(), MPoly::zero()], [MPoly::zero(), det]]);

        let p = build_p_matrix(&BlockSpec::symbolic());
        let a = mul2(&adjugate2(&block2(&p, 1, 1)), &block2(&p, 2, 1));
        assert_eq!(a[0][1], RelationCatalog::symbolic().r_ord1);
    }

    #[test]
    fn identity_check_accepts_scalar_multiples_only() {
        let id = &expected_identities(RelationKind::Arch)[0];
        let rem = MPoly::term(id.monomial, id.expected.scale(&rat(-2)));
        let c = check_identity(&rem, id);
        assert!(c.pass);
        assert_eq!(c.scalar.as_deref(), Some("-2"));
        let c = check_identity(&MPoly::zero(), id);
        assert!(!c.pass);
        assert_eq!(c.actual, "0");
    }

    #[test]
    fn table_sizes() {
        assert_eq!(expected_identities(RelationKind::Arch).len(), 3);
        assert_eq!(expected_identities(RelationKind::Ssing).len(), 5);
        assert_eq!(expected_identities(RelationKind::Ord).len(), 9);
        assert_eq!(case_analysis_identities().len(), 5);
    }

    #[test]
    fn random_parameters_have_invertible_blocks() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let v = random_parameters(&mut rng, 2);
            assert!(v.iter().all(|q| !q.is_zero_elem()));
        }
    }
}

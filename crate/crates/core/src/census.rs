//! Supersingular prime census for elliptic curves over Q.
//!
//! Traces of Frobenius come from the character sum
//! `a_p = -sum_{x mod p} (x^3 + a x + b | p)`, which costs O(p) per prime. Primes
//! 2, 3 and the divisors of the discriminant are excluded throughout.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CensusError;

/// Short Weierstrass curve `y^2 = x^3 + a x + b` over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveQ {
    a: i64,
    b: i64,
    disc: i128,
}

impl CurveQ {
    pub fn new(a: i64, b: i64) -> Result<Self, CensusError> {
        let (a3, b2) = (a as i128 * a as i128 * a as i128, b as i128 * b as i128);
        let disc = -16 * (4 * a3 + 27 * b2);
        if disc == 0 {
            return Err(CensusError::Singular { a, b });
        }
        Ok(Self { a, b, disc })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `-16 (4 a^3 + 27 b^2)`.
    pub fn discriminant(&self) -> i128 {
        self.disc
    }

    /// Good reduction in the sense used by the census: `p >= 5` and `p` does not
    /// divide the discriminant.
    pub fn has_good_reduction(&self, p: u64) -> bool {
        p >= 5 && self.disc % p as i128 != 0
    }

    fn coeffs_mod(&self, p: u64) -> (u64, u64) {
        (self.a.rem_euclid(p as i64) as u64, self.b.rem_euclid(p as i64) as u64)
    }
}

impl std::str::FromStr for CurveQ {
    type Err = String;

    /// `a,b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
        let a: i64 = a.trim().parse().map_err(|e| format!("bad coefficient `{a}`: {e}"))?;
        let b: i64 = b.trim().parse().map_err(|e| format!("bad coefficient `{b}`: {e}"))?;
        CurveQ::new(a, b).map_err(|e| e.to_string())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes up to `n` (sieve of Eratosthenes).
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn check_prime(e: &CurveQ, p: u64) -> Result<(), CensusError> {
    if !is_prime(p) {
        return Err(CensusError::NotPrime(p));
    }
    if !e.has_good_reduction(p) {
        return Err(CensusError::BadReduction(p));
    }
    Ok(())
}

/// Table of quadratic residues: `table[v]` is true iff `v` is a nonzero square mod p.
fn residue_table(p: u64) -> Vec<bool> {
    let mut t = vec![false; p as usize];
    for y in 1..p {
        t[((y * y) % p) as usize] = true;
    }
    t
}

fn trace_unchecked(e: &CurveQ, p: u64, squares: &[bool]) -> i64 {
    let (a, b) = e.coeffs_mod(p);
    let mut sum = 0i64;
    for x in 0..p {
        let v = ((x * x % p * x) % p + a * x % p + b) % p;
        if v != 0 {
            sum += if squares[v as usize] { 1 } else { -1 };
        }
    }
    -sum
}

/// Trace of Frobenius `a_p = p + 1 - #E(F_p)`.
pub fn trace_ap(e: &CurveQ, p: u64) -> Result<i64, CensusError> {
    check_prime(e, p)?;
    Ok(trace_unchecked(e, p, &residue_table(p)))
}

/// Supersingular at `p >= 5` iff `p | a_p`, which with `|a_p| <= 2 sqrt(p) < p`
/// means `a_p = 0`.
pub fn is_supersingular(e: &CurveQ, p: u64) -> Result<bool, CensusError> {
    Ok(trace_ap(e, p)? == 0)
}

/// Hasse bound `|a_p| <= 2 sqrt(p)`, checked exactly as `a_p^2 <= 4p`.
pub fn within_hasse_bound(ap: i64, p: u64) -> bool {
    (ap as i128) * (ap as i128) <= 4 * p as i128
}

/// Per-prime record.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub p: u64,
    /// `None` at excluded primes.
    pub a_p: Option<i64>,
    pub supersingular: bool,
    pub good_reduction: bool,
}

/// Records for every prime `5 <= p <= x_max` (in increasing order), computed in parallel.
pub fn census_records(curves: &[CurveQ], x_max: u64) -> Vec<Vec<CensusRecord>> {
    let primes: Vec<u64> = primes_up_to(x_max).into_iter().filter(|&p| p >= 5).collect();
    let per_prime: Vec<Vec<CensusRecord>> = primes
        .par_iter()
        .map(|&p| {
            let squares = residue_table(p);
            curves
                .iter()
                .map(|e| {
                    let good = e.has_good_reduction(p);
                    let a_p = good.then(|| trace_unchecked(e, p, &squares));
                    CensusRecord { p, a_p, supersingular: a_p == Some(0), good_reduction: good }
                })
                .collect()
        })
        .collect();
    (0..curves.len()).map(|k| per_prime.iter().map(|r| r[k]).collect()).collect()
}

/// Supersingular good primes `p <= x_max`, sorted.
pub fn census_single(e: &CurveQ, x_max: u64) -> Result<Vec<u64>, CensusError> {
    if x_max < 5 {
        return Err(CensusError::Range(x_max));
    }
    Ok(census_records(std::slice::from_ref(e), x_max)
        .remove(0)
        .into_iter()
        .filter(|r| r.supersingular)
        .map(|r| r.p)
        .collect())
}

/// One checkpoint of a pair census.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckpointRow {
    pub x: u64,
    pub pi_e1: usize,
    pub pi_e2: usize,
    pub pi_pair: usize,
    pub loglog_x: f64,
    /// `pi_pair / log log x`; reported only, never compared to a constant.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusSummary {
    pub x_max: u64,
    pub curve1: CurveQ,
    pub curve2: CurveQ,
    pub rows: Vec<CheckpointRow>,
    pub pair_primes: Vec<u64>,
    pub single1: Vec<u64>,
    pub single2: Vec<u64>,
}

impl CensusSummary {
    /// Pair count never exceeds either single count and all counts are nondecreasing.
    pub fn invariants_hold(&self) -> bool {
        let bounded = self.rows.iter().all(|r| r.pi_pair <= r.pi_e1.min(r.pi_e2));
        let monotone = self.rows.windows(2).all(|w| {
            w[0].x < w[1].x
                && w[0].pi_e1 <= w[1].pi_e1
                && w[0].pi_e2 <= w[1].pi_e2
                && w[0].pi_pair <= w[1].pi_pair
        });
        bounded && monotone
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,pi_E1,pi_E2,pi_pair,loglog_x,ratio\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{:.6},{:.6}\n",
                r.x, r.pi_e1, r.pi_e2, r.pi_pair, r.loglog_x, r.ratio
            ));
        }
        out
    }
}

/// Logarithmically spaced checkpoints from 10 (or `x_max` if smaller) up to `x_max`.
pub fn checkpoints(x_max: u64, count: usize) -> Vec<u64> {
    let lo = 10u64.min(x_max);
    if count <= 1 || lo == x_max {
        return vec![x_max];
    }
    let (l0, l1) = ((lo as f64).ln(), (x_max as f64).ln());
    let mut xs: Vec<u64> = (0..count)
        .map(|k| (l0 + (l1 - l0) * k as f64 / (count - 1) as f64).exp().round() as u64)
        .map(|x| x.clamp(lo, x_max))
        .collect();
    xs.push(x_max);
    xs.sort_unstable();
    xs.dedup();
    xs
}

fn count_up_to(sorted: &[u64], x: u64) -> usize {
    sorted.partition_point(|&p| p <= x)
}

/// Simultaneous supersingular primes of two curves, sampled at `n_checkpoints`
/// logarithmically spaced bounds.
pub fn census_pair(
    e1: &CurveQ,
    e2: &CurveQ,
    x_max: u64,
    n_checkpoints: usize,
) -> Result<CensusSummary, CensusError> {
    if x_max < 5 {
        return Err(CensusError::Range(x_max));
    }
    let recs = census_records(&[*e1, *e2], x_max);
    let ss = |k: usize| -> Vec<u64> { recs[k].iter().filter(|r| r.supersingular).map(|r| r.p).collect() };
    let (single1, single2) = (ss(0), ss(1));
    // excluding p | disc1 * disc2 is automatic: a_p is undefined at either curve's bad primes
    let pair_primes: Vec<u64> = recs[0]
        .iter()
        .zip(&recs[1])
        .filter(|(a, b)| a.supersingular && b.supersingular)
        .map(|(a, _)| a.p)
        .collect();
    let rows = checkpoints(x_max, n_checkpoints)
        .into_iter()
        .map(|x| {
            let loglog_x = (x as f64).ln().ln();
            let pi_pair = count_up_to(&pair_primes, x);
            CheckpointRow {
                x,
                pi_e1: count_up_to(&single1, x),
                pi_e2: count_up_to(&single2, x),
                pi_pair,
                loglog_x,
                ratio: if loglog_x > 0.0 { pi_pair as f64 / loglog_x } else { f64::NAN },
            }
        })
        .collect();
    Ok(CensusSummary { x_max, curve1: *e1, curve2: *e2, rows, pair_primes, single1, single2 })
}

/// Digits of precision for the `f = 1` density.
pub const DENSITY_DIGITS: u32 = 15;

/// Naive supersingular density at a place of residue degree `f` over `p`, with the
/// curve constant set to 1: `1/sqrt(p)` for `f = 1` (rational approximation with
/// error below `10^-15 / p`) and exactly `1/p` for `f >= 2`.
pub fn heuristic_density(p: u64, f: u32) -> Result<BigRational, CensusError> {
    if !is_prime(p) {
        return Err(CensusError::NotPrime(p));
    }
    match f {
        0 => Err(CensusError::InvalidDegree),
        1 => {
            // 1/sqrt(p) = sqrt(p) / p ~ isqrt(p 10^(2k)) / (p 10^k)
            let scale = BigInt::from(10u32).pow(DENSITY_DIGITS);
            let root = (BigInt::from(p) * &scale * &scale).sqrt();
            Ok(BigRational::new(root, BigInt::from(p) * scale))
        }
        _ => Ok(BigRational::new(BigInt::one(), BigInt::from(p))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    /// Naive point count including the point at infinity.
    fn count_points(e: &CurveQ, p: u64) -> u64 {
        let (a, b) = e.coeffs_mod(p);
        let mut n = 1;
        for x in 0..p {
            for y in 0..p {
                if (y * y) % p == (x * x % p * x + a * x + b) % p {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn trace_examples() {
        let e = CurveQ::new(1, 0).unwrap();
        assert_eq!(count_points(&e, 5), 4);
        assert_eq!(trace_ap(&e, 5), Ok(2));
        assert_eq!(trace_ap(&e, 3), Err(CensusError::BadReduction(3)));
        assert_eq!(trace_ap(&e, 9), Err(CensusError::NotPrime(9)));
        // disc(y^2 = x^3 - x + 0) ... use y^2 = x^3 + 5x, disc = -16 * 500 = -8000
        let bad = CurveQ::new(5, 0).unwrap();
        assert_eq!(trace_ap(&bad, 5), Err(CensusError::BadReduction(5)));
        assert!(CurveQ::new(0, 0).is_err());
        assert!(CurveQ::new(-3, 2).is_err());
    }

    #[test]
    fn supersingular_examples() {
        let e = CurveQ::new(1, 0).unwrap();
        assert_eq!(is_supersingular(&e, 7), Ok(true));
        assert_eq!(is_supersingular(&e, 5), Ok(false));
        assert_eq!(count_points(&e, 7), 8);
        let f = CurveQ::new(0, 1).unwrap();
        assert_eq!(is_supersingular(&f, 5), Ok(true));
        assert_eq!(count_points(&f, 5), 6);
    }

    #[test]
    fn character_sum_matches_point_count() {
        let curves = [(1, 0), (0, 1), (2, 3), (-1, 1), (7, -5), (13, 11)];
        for (a, b) in curves {
            let e = CurveQ::new(a, b).unwrap();
            for p in primes_up_to(200).into_iter().filter(|&p| e.has_good_reduction(p)) {
                let ap = trace_ap(&e, p).unwrap();
                assert_eq!(ap, p as i64 + 1 - count_points(&e, p) as i64, "{a},{b} at {p}");
                assert!(within_hasse_bound(ap, p));
            }
        }
    }

    #[test]
    fn single_census_small() {
        let e = CurveQ::new(1, 0).unwrap();
        assert_eq!(
            census_single(&e, 100).unwrap(),
            vec![7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83]
        );
        assert!(census_single(&e, 6).unwrap().is_empty());
        assert_eq!(census_single(&e, 4), Err(CensusError::Range(4)));
    }

    #[test]
    fn pair_census_small() {
        let e1 = CurveQ::new(1, 0).unwrap();
        let e2 = CurveQ::new(0, 1).unwrap();
        let s = census_pair(&e1, &e2, 100, 5).unwrap();
        assert_eq!(s.pair_primes, vec![11, 23, 47, 59, 71, 83]);
        assert_eq!(s.rows.last().unwrap().pi_pair, 6);
        assert!(s.invariants_hold());
        let same = census_pair(&e1, &e1, 100, 5).unwrap();
        assert_eq!(same.pair_primes, same.single1);
    }

    #[test]
    fn checkpoint_spacing() {
        let xs = checkpoints(10_000, 5);
        assert_eq!(xs, vec![10, 56, 316, 1778, 10_000]);
        assert_eq!(checkpoints(7, 5), vec![7]);
        assert_eq!(checkpoints(100, 1), vec![100]);
    }

    #[test]
    fn densities() {
        assert_eq!(heuristic_density(7, 2).unwrap(), BigRational::new(1.into(), 7.into()));
        assert_eq!(heuristic_density(7, 3).unwrap(), BigRational::new(1.into(), 7.into()));
        assert_eq!(heuristic_density(4, 1), Err(CensusError::NotPrime(4)));
        assert_eq!(heuristic_density(5, 0), Err(CensusError::InvalidDegree));
        for p in [2u64, 5, 101, 9973] {
            let v = heuristic_density(p, 1).unwrap().to_f64().unwrap();
            assert!((v - 1.0 / (p as f64).sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_layout() {
        let s = census_pair(&CurveQ::new(1, 0).unwrap(), &CurveQ::new(0, 1).unwrap(), 100, 3).unwrap();
        let csv = s.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x,pi_E1,pi_E2,pi_pair,loglog_x,ratio"));
        assert_eq!(lines.count(), s.rows.len());
        assert!("1,0".parse::<CurveQ>().is_ok());
        assert!("0,0".parse::<CurveQ>().is_err());
        assert!("1;0".parse::<CurveQ>().is_err());
    }
}

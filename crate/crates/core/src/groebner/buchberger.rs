use std::time::Instant;

use num_traits::{Inv, One};

use super::basis::{lead_cmp, to_ascending, Ascending, GroebnerBasis};
use super::reduce::{reduce_terms, sub_scaled_shifted};
use crate::algebra::{BigRat, Coeff, MonomialOrder, Poly, QPoly, XMonomial};
use crate::error::{AlgebraError, GroebnerError};

/// S-polynomial `(L/LT(f)) f - (L/LT(g)) g` where `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial<C: Coeff>(
    f: &Poly<C>,
    g: &Poly<C>,
    ord: MonomialOrder,
) -> Result<Poly<C>, AlgebraError> {
    let (mf, cf) = f.leading_term(ord)?;
    let (mg, cg) = g.leading_term(ord)?;
    let lcm = mf.lcm(&mg);
    let tf = mf.quotient_of(&lcm).unwrap();
    let tg = mg.quotient_of(&lcm).unwrap();
    // cross-multiply by the leading coefficients so no division is needed
    Ok(f.mul_term(&tf, &cg).sub(&g.mul_term(&tg, &cf)))
}

/// Tuning switches for [`Buchberger`].
#[derive(Clone, Debug)]
pub struct BuchbergerOptions {
    /// Apply the coprime-leading-monomial and chain criteria (Gebauer–Möller).
    pub criteria: bool,
    pub deadline: Option<Instant>,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        Self { criteria: true, deadline: None }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: XMonomial,
    sugar: u32,
}

/// Run statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_considered: usize,
    pub pairs_skipped: usize,
    pub reductions_to_zero: usize,
    pub basis_additions: usize,
}

/// Buchberger's algorithm with normal pair selection and sugar tie-breaking.
///
/// The state can be inspected at any point; on budget exhaustion the current
/// (non-reduced) basis is still a generating set of the ideal and can seed a rerun.
pub struct Buchberger {
    ord: MonomialOrder,
    opts: BuchbergerOptions,
    polys: Vec<Ascending<BigRat>>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: BuchbergerStats,
}

pub enum Progress {
    Done,
    BudgetExceeded,
}

impl Buchberger {
    pub fn new(gens: &[QPoly], ord: MonomialOrder, opts: BuchbergerOptions) -> Result<Self, GroebnerError> {
        let mut me = Self {
            ord,
            opts,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            stats: BuchbergerStats::default(),
        };
        let mut inputs: Vec<Ascending<BigRat>> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| monic(to_ascending(g.terms(), ord)))
            .collect();
        if inputs.is_empty() {
            return Err(GroebnerError::EmptyInput);
        }
        // adding small leading monomials first keeps the interreduction cheap
        inputs.sort_by(|a, b| lead_cmp(a, b, ord));
        for p in inputs {
            let sugar = p.iter().map(|(m, _)| m.degree()).max().unwrap();
            let r = me.reduce(p);
            if !r.is_empty() {
                me.insert(monic(r), sugar);
            }
        }
        Ok(me)
    }

    pub fn stats(&self) -> &BuchbergerStats {
        &self.stats
    }

    pub fn pending_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// Current generating set (not necessarily a Gröbner basis).
    pub fn current_basis(&self) -> Vec<QPoly> {
        self.active.iter().map(|&k| Poly::from_terms(self.polys[k].iter().cloned())).collect()
    }

    fn reduce(&self, p: Ascending<BigRat>) -> Ascending<BigRat> {
        let divisors: Vec<&Ascending<BigRat>> = self.active.iter().map(|&k| &self.polys[k]).collect();
        reduce_terms(p, &divisors, self.ord, |_, _, _| {})
    }

    fn lead(&self, k: usize) -> &XMonomial {
        &self.polys[k].last().unwrap().0
    }

    /// Add a new monic element and update the pair set.
    fn insert(&mut self, h: Ascending<BigRat>, sugar: u32) {
        let hk = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.stats.basis_additions += 1;
        let lh = *self.lead(hk);

        let new_pairs: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.lead(g);
                let lcm = lg.lcm(&lh);
                let s = (self.sugar[g] + lcm.degree() - lg.degree())
                    .max(sugar + lcm.degree() - lh.degree());
                Pair { i: g, j: hk, lcm, sugar: s }
            })
            .collect();

        if !self.opts.criteria {
            self.pairs.extend(new_pairs);
            self.active.push(hk);
            return;
        }

        // Gebauer–Möller update
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in new_pairs.iter().enumerate() {
            let coprime = self.lead(p.i).is_coprime(&lh);
            let dominated = |q: &Pair| q.lcm.divides(&p.lcm);
            let dominated_later = new_pairs[idx + 1..].iter().any(dominated);
            let dominated_kept = kept.iter().any(dominated);
            if coprime || !(dominated_later || dominated_kept) {
                kept.push(p.clone());
            }
        }
        let before = kept.len();
        kept.retain(|p| !self.lead(p.i).is_coprime(&lh));
        self.stats.pairs_skipped += new_pairs.len() - before + (before - kept.len());

        let n_old = self.pairs.len();
        let mut old = std::mem::take(&mut self.pairs);
        old.retain(|p| {
            !(lh.divides(&p.lcm)
                && self.lead(p.i).lcm(&lh) != p.lcm
                && self.lead(p.j).lcm(&lh) != p.lcm)
        });
        self.stats.pairs_skipped += n_old - old.len();
        old.extend(kept);
        self.pairs = old;

        self.active.retain(|&g| !lh.divides(&self.polys[g].last().unwrap().0));
        self.active.push(hk);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then(a.sugar.cmp(&b.sugar))
                    .then(ord.cmp(&a.lcm, &b.lcm))
                    .then((a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Ascending<BigRat> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let tf = self.lead(p.i).quotient_of(&p.lcm).unwrap();
        let tg = self.lead(p.j).quotient_of(&p.lcm).unwrap();
        // both monic: tf*f - tg*g with the leading terms dropped
        let f_tail: Ascending<BigRat> = f[..f.len() - 1].iter().map(|(m, c)| (m.mul(&tf), c.clone())).collect();
        sub_scaled_shifted(&f_tail, &g[..g.len() - 1], &tg, &BigRat::one(), self.ord)
    }

    /// Process pairs until none remain or the deadline passes.
    pub fn run(&mut self) -> Progress {
        while let Some(pair) = self.select_pair() {
            if let Some(d) = self.opts.deadline {
                if Instant::now() >= d {
                    self.pairs.push(pair);
                    return Progress::BudgetExceeded;
                }
            }
            self.stats.pairs_considered += 1;
            let s = self.spoly(&pair);
            let r = self.reduce(s);
            if r.is_empty() {
                self.stats.reductions_to_zero += 1;
            } else {
                self.insert(monic(r), pair.sugar);
            }
        }
        Progress::Done
    }

    /// Interreduce the finished basis into the unique reduced Gröbner basis.
    pub fn into_reduced(self) -> Result<GroebnerBasis, GroebnerError> {
        let ord = self.ord;
        let mut elems: Vec<Ascending<BigRat>> = self.active.iter().map(|&k| self.polys[k].clone()).collect();
        elems.sort_by(|a, b| lead_cmp(a, b, ord));
        // minimal basis: drop elements whose leading monomial is divisible by another's
        let leads: Vec<XMonomial> = elems.iter().map(|e| e.last().unwrap().0).collect();
        let keep: Vec<bool> = (0..elems.len())
            .map(|i| !(0..elems.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i)))
            .collect();
        let minimal: Vec<Ascending<BigRat>> =
            elems.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
        let mut reduced = Vec::with_capacity(minimal.len());
        for (i, e) in minimal.iter().enumerate() {
            let others: Vec<&Ascending<BigRat>> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, o)| o).collect();
            let (lead, tail) = e.split_last().unwrap();
            let mut r = reduce_terms(tail.to_vec(), &others, ord, |_, _, _| {});
            r.push(lead.clone());
            reduced.push(monic(r));
        }
        let polys = reduced.into_iter().map(Poly::from_terms).collect();
        GroebnerBasis::from_elements(polys, ord, true)
    }
}

fn monic(mut p: Ascending<BigRat>) -> Ascending<BigRat> {
    if let Some((_, lc)) = p.last() {
        if !lc.is_one() {
            let inv = lc.clone().inv();
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
    p
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[QPoly], ord: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(gens, ord, BuchbergerOptions::default())
}

pub fn buchberger_with(
    gens: &[QPoly],
    ord: MonomialOrder,
    opts: BuchbergerOptions,
) -> Result<GroebnerBasis, GroebnerError> {
    let mut engine = Buchberger::new(gens, ord, opts)?;
    match engine.run() {
        Progress::Done => engine.into_reduced(),
        Progress::BudgetExceeded => Err(GroebnerError::BudgetExceeded {
            reductions: engine.stats.pairs_considered,
            pending: engine.pairs.len(),
        }),
    }
}

/// Buchberger's criterion: every S-polynomial of the listed index pairs reduces to zero.
/// Returns the offending pairs.
pub fn failing_s_pairs(gb: &GroebnerBasis, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    use rayon::prelude::*;
    let ord = gb.order();
    let divisors: Vec<&Ascending<BigRat>> = gb.sorted.iter().collect();
    pairs
        .par_iter()
        .filter(|&&(i, j)| {
            let s = s_polynomial(&gb.elements()[i], &gb.elements()[j], ord).expect("nonzero basis");
            let p = to_ascending(s.terms(), ord);
            !reduce_terms(p, &divisors, ord, |_, _, _| {}).is_empty()
        })
        .copied()
        .collect()
}

/// Exhaustive S-pair check over all pairs of the basis.
pub fn verify_s_pairs(gb: &GroebnerBasis) -> bool {
    let n = gb.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    failing_s_pairs(gb, &pairs).is_empty()
}

//! Leading-term ideals, Hilbert series of graded quotients, Krull
//! dimension, multiplicity, and lengths of zero-dimensional quotients.
//!
//! The series of a monomial quotient is computed by the standard pivot
//! recursion with memoization; the brute-force staircase counter next to it
//! is kept deliberately independent so the two can certify each other.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::ring::RingRc;

/// Integer-coefficient polynomial in one formal variable `t`.
/// Index `i` holds the coefficient of `t^i`; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly(Vec::new())
    }

    pub fn one() -> IntPoly {
        IntPoly(vec![1])
    }

    pub fn monomial(d: usize) -> IntPoly {
        let mut c = vec![0; d + 1];
        c[d] = 1;
        IntPoly(c)
    }

    pub fn from_coeffs(mut c: Vec<i64>) -> IntPoly {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        let mut c = vec![0i64; n];
        for (i, v) in self.0.iter().enumerate() {
            c[i] += v;
        }
        for (i, v) in o.0.iter().enumerate() {
            c[i] += v;
        }
        IntPoly::from_coeffs(c)
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly(self.0.iter().map(|v| -v).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }

    pub fn eval_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exact quotient by `1 - t`, when `1` is a root.
    pub fn try_div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() || self.eval_one() != 0 {
            return None;
        }
        // p = q - t q  =>  q_i = p_0 + ... + p_i
        let mut q = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut acc = 0i64;
        for i in 0..self.0.len() - 1 {
            acc += self.0[i];
            q.push(acc);
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Coefficients of `self / (1-t)^denom_exp` up to degree `upto`.
    pub fn expand_over_denominator(&self, denom_exp: usize, upto: usize) -> Vec<i64> {
        let mut c = vec![0i64; upto + 1];
        for (i, v) in self.0.iter().enumerate() {
            if i <= upto {
                c[i] = *v;
            }
        }
        for _ in 0..denom_exp {
            for i in 1..=upto {
                c[i] += c[i - 1];
            }
        }
        c
    }
}

/// Hilbert series `numerator / (1-t)^denom_exp`, with the cancelled form
/// alongside. For a nonzero quotient the reduced numerator is nonzero at 1
/// and the pole order equals the Krull dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denom_exp: usize,
    pub reduced_numerator: IntPoly,
    pub pole_order: usize,
}

impl HilbertSeries {
    pub fn new(numerator: IntPoly, denom_exp: usize) -> HilbertSeries {
        let mut red = numerator.clone();
        let mut pole = denom_exp;
        if red.is_zero() {
            pole = 0;
        } else {
            while pole > 0 {
                match red.try_div_one_minus_t() {
                    Some(q) => {
                        red = q;
                        pole -= 1;
                    }
                    None => break,
                }
            }
        }
        HilbertSeries { numerator, denom_exp, reduced_numerator: red, pole_order: pole }
    }

    /// Value of the reduced numerator at 1; the multiplicity for a nonzero
    /// quotient.
    pub fn multiplicity_value(&self) -> i64 {
        self.reduced_numerator.eval_one()
    }

    pub fn coefficients_up_to(&self, upto: usize) -> Vec<i64> {
        self.numerator.expand_over_denominator(self.denom_exp, upto)
    }

    /// Equality as rational functions.
    pub fn same_series(&self, o: &HilbertSeries) -> bool {
        self.reduced_numerator == o.reduced_numerator && self.pole_order == o.pole_order
    }
}

/// Monomial ideal kept as a minimal generating antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: RingRc,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: &RingRc, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut min = minimalize(gens);
        min.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
        MonomialIdeal { ring: ring.clone(), gens: min }
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains_one(&self) -> bool {
        self.gens.iter().any(|m| m.is_one())
    }

    pub fn divides_some(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Numerator of the Hilbert series of `ring / self` over `(1-t)^n`.
    pub fn series_numerator(&self) -> IntPoly {
        let mut memo = BTreeMap::new();
        numerator_rec(self.ring.nvars(), &self.gens, &mut memo)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries::new(self.series_numerator(), self.ring.nvars())
    }
}

fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

type Memo = BTreeMap<Vec<Vec<u32>>, IntPoly>;

fn numerator_rec(nvars: usize, gens: &[Monomial], memo: &mut Memo) -> IntPoly {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(|m| m.is_one()) {
        return IntPoly::zero();
    }
    // pure powers of distinct variables: product formula
    if gens.iter().all(|m| m.pure_var().is_some()) {
        let mut acc = IntPoly::one();
        for m in &gens {
            let (_, e) = m.pure_var().unwrap();
            acc = acc.mul(&IntPoly::one().sub(&IntPoly::monomial(e as usize)));
        }
        return acc;
    }
    let key: Vec<Vec<u32>> = gens.iter().map(|m| m.exps().to_vec()).collect();
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // pivot on the variable occurring most often among generators that are
    // not pure powers; both branches then strictly shrink the degree sum
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        if m.pure_var().is_some() {
            continue;
        }
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let mut pivot = 0;
    for (i, &c) in counts.iter().enumerate() {
        if c > counts[pivot] {
            pivot = i;
        }
    }
    debug_assert!(counts[pivot] > 0, "a mixed generator exists at this point");
    let pv = Monomial::var(pivot, nvars);

    // N(M) = N(M + (x)) + t * N(M : x)
    let mut plus = gens.clone();
    plus.push(pv.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| m.try_div(&pv).unwrap_or_else(|| m.clone()))
        .collect();
    let res = numerator_rec(nvars, &plus, memo)
        .add(&IntPoly::monomial(1).mul(&numerator_rec(nvars, &colon, memo)));
    memo.insert(key, res.clone());
    res
}

/// Leading-term ideal of the reduced basis, minimalized.
pub fn leading_ideal(ideal: &Ideal) -> MonomialIdeal {
    let gens = ideal
        .gb()
        .elements()
        .iter()
        .map(|g| g.leading_monomial().expect("basis elements nonzero").clone())
        .collect();
    MonomialIdeal::new(ideal.ring(), gens)
}

/// Brute-force staircase count per degree, independent of the series
/// recursion: number of monomials of each degree not divisible by any
/// generator.
pub fn standard_monomial_counts(m: &MonomialIdeal, max_deg: u32) -> Vec<u64> {
    let n = m.ring().nvars();
    (0..=max_deg)
        .map(|d| {
            monomials_of_degree(n, d)
                .into_iter()
                .filter(|mono| !m.divides_some(mono))
                .count() as u64
        })
        .collect()
}

/// All standard monomials, when there are finitely many. Errors when some
/// variable has no pure power among the generators (infinite staircase).
pub fn standard_monomials_all(m: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let n = m.ring().nvars();
    let mut bound = vec![None::<u32>; n];
    for g in m.generators() {
        if let Some((v, e)) = g.pure_var() {
            bound[v] = Some(bound[v].map_or(e, |b: u32| b.min(e)));
        }
    }
    if m.contains_one() {
        return Ok(Vec::new());
    }
    let mut bounds = Vec::with_capacity(n);
    for (v, b) in bound.iter().enumerate() {
        match b {
            Some(e) => bounds.push(*e),
            None => {
                return Err(Error::Precondition(format!(
                    "quotient is not finite: variable {} has no pure power among the leading terms",
                    m.ring().var_name(v)
                )))
            }
        }
    }
    let mut out = vec![Monomial::one(n)];
    for v in 0..n {
        let mut next = Vec::new();
        for mono in &out {
            for e in 0..bounds[v] {
                let mut exps = mono.exps().to_vec();
                exps[v] = e;
                next.push(Monomial::from_exps(exps));
            }
        }
        out = next;
    }
    out.retain(|mono| !m.divides_some(mono));
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    Ok(out)
}

/// A graded affine algebra `ring / defining_ideal`, the defining ideal
/// homogeneous.
#[derive(Debug, Clone)]
pub struct QuotientPresentation {
    ring: RingRc,
    pub ideal: Ideal,
}

impl QuotientPresentation {
    pub fn new(ring: &RingRc, gens: Vec<Polynomial>) -> Result<QuotientPresentation> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(Error::Input(format!(
                    "defining ideal generator `{g}` is not homogeneous"
                )));
            }
        }
        Ok(QuotientPresentation { ring: ring.clone(), ideal: Ideal::new(ring, gens)? })
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn is_zero_ring(&self) -> bool {
        self.ideal.is_whole_ring()
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        leading_ideal(&self.ideal)
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        self.leading_ideal().hilbert_series()
    }

    /// Krull dimension; `-1` for the zero ring, distinct from dimension 0.
    pub fn dimension(&self) -> i64 {
        if self.is_zero_ring() {
            return -1;
        }
        self.hilbert_series().pole_order as i64
    }

    /// Reduced series numerator at 1.
    pub fn multiplicity(&self) -> Result<u64> {
        if self.is_zero_ring() {
            return Err(Error::Input("multiplicity of the zero ring".to_string()));
        }
        let e = self.hilbert_series().multiplicity_value();
        debug_assert!(e > 0);
        Ok(e as u64)
    }

    /// Total count of standard monomials of an Artinian quotient.
    pub fn length_zero_dim(&self) -> Result<u64> {
        match self.dimension() {
            0 => {}
            d => {
                return Err(Error::Precondition(format!(
                    "length requires a zero-dimensional quotient, got dimension {d}"
                )))
            }
        }
        let s = self.hilbert_series();
        Ok(s.reduced_numerator.eval_one() as u64)
    }

    /// The quotient by `defining_ideal + extra`.
    pub fn quotient_by_extra(&self, extra: &[Polynomial]) -> Result<QuotientPresentation> {
        let mut gens = self.ideal.generators().to_vec();
        gens.extend_from_slice(extra);
        QuotientPresentation::new(&self.ring, gens)
    }

    /// dim A - dim A/a, for `a` proper and homogeneous.
    pub fn operational_height(&self, a_gens: &[Polynomial]) -> Result<u64> {
        if self.is_zero_ring() {
            return Err(Error::Precondition("ambient quotient is the zero ring".to_string()));
        }
        let qa = self.quotient_by_extra(a_gens)?;
        if qa.is_zero_ring() {
            return Err(Error::Input("test ideal is the whole ring".to_string()));
        }
        Ok((self.dimension() - qa.dimension()) as u64)
    }
}

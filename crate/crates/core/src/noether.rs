//! Algorithmic Noether normalization for homogeneous ideals: random linear
//! changes of variables make a generator monic in the first variable, the
//! variable is eliminated through a block order, and the recursion continues
//! in one fewer variable. The result is a certified record: base variables,
//! a staircase basis of fiber monomials generating the quotient over the
//! base, the count N, and a closure certificate verified by ideal
//! membership.
//!
//! The same machinery yields parameter-degree upper bounds (the Noether base
//! is always trial zero, so the bound never exceeds N), the chain
//! e <= paramdeg <= N, and the preimage module W of a test ideal together
//! with its length-one resolution data over the base ring.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, Ideal};
use crate::hilbert::{HilbertSeries, QuotientPresentation};
use crate::modules::{
    minimalize_module_generators, module_buchberger, submodule_series, GradedFreeModule, ModVec,
};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{is_monic_in, Polynomial, Substitution};
use crate::resolve::{
    cm_type, free_resolution_of_submodule, is_cohen_macaulay, mu_in_quotient, GradedResolution,
    ResolveConfig,
};
use crate::ring::RingRc;

const SUBSTITUTION_RETRIES: usize = 32;

/// Noether position before the module-generator step: the substitution
/// chain, the transformed ideal under the block order, and the fiber count.
#[derive(Debug, Clone)]
pub struct NoetherPosition {
    pub original_ring: RingRc,
    pub block_ring: RingRc,
    pub substitutions: Vec<Substitution>,
    pub transformed: Ideal,
    pub fiber_count: usize,
}

/// One closure fact: `x_v * basis[m]` expressed over the base ring.
#[derive(Debug, Clone)]
pub struct ClosureEntry {
    pub fiber_var: usize,
    pub basis_index: usize,
    pub coords: Vec<Polynomial>,
}

/// Certified normalization record.
#[derive(Debug, Clone)]
pub struct NoetherData {
    pub position: NoetherPosition,
    pub base_ring: RingRc,
    /// Fiber monomials (block-ring width) generating the quotient over the
    /// base ring; contains 1.
    pub basis: Vec<Monomial>,
    pub closure: Vec<ClosureEntry>,
}

impl NoetherData {
    pub fn n_gens(&self) -> usize {
        self.basis.len()
    }

    pub fn fiber_count(&self) -> usize {
        self.position.fiber_count
    }

    pub fn base_var_names(&self) -> Vec<String> {
        let r = &self.position.block_ring;
        (self.position.fiber_count..r.nvars())
            .map(|i| r.var_name(i).to_string())
            .collect()
    }

    pub fn fiber_var_names(&self) -> Vec<String> {
        let r = &self.position.block_ring;
        (0..self.position.fiber_count)
            .map(|i| r.var_name(i).to_string())
            .collect()
    }

    pub fn basis_degrees(&self) -> Vec<i64> {
        self.basis.iter().map(|m| m.degree() as i64).collect()
    }

    /// Composed linear substitution, when every step was linear.
    pub fn composed_linear(&self) -> Option<Substitution> {
        let ring = &self.position.original_ring;
        let mut acc = Substitution::identity(ring);
        for s in &self.position.substitutions {
            acc = acc.then(s, ring)?;
        }
        Some(acc)
    }

    /// Apply the recorded substitution chain to a polynomial of the original
    /// ring and land in the block ring.
    pub fn transform(&self, f: &Polynomial) -> Result<Polynomial> {
        let work = f.with_ring(&work_ring(&self.position.original_ring)?)?;
        let mut acc = work;
        for s in &self.position.substitutions {
            acc = s.apply(&acc);
        }
        acc.with_ring(&self.position.block_ring)
    }
}

fn work_ring(ring: &RingRc) -> Result<RingRc> {
    ring.with_order(MonomialOrder::DegRevLex)
}

fn field_check(field: &Field) -> Result<()> {
    if !field.has_at_least(101) {
        return Err(Error::Resource(
            "coefficient field too small for random linear substitutions; use F 32003 or Q"
                .to_string(),
        ));
    }
    Ok(())
}

/// Reach Noether position: after the recorded substitutions, each fiber
/// variable is integral over the later variables modulo the ideal, and the
/// final segment of variables is a Noether normalization base.
pub fn find_noether_position(ideal: &Ideal, seed: u64) -> Result<NoetherPosition> {
    let ring = ideal.ring().clone();
    field_check(&ring.field)?;
    if !ideal.all_homogeneous() {
        return Err(Error::Input("Noether position requires a homogeneous ideal".to_string()));
    }
    if ideal.is_whole_ring() {
        return Err(Error::Input("ideal is the whole ring".to_string()));
    }
    let q = QuotientPresentation::new(&ring, ideal.generators().to_vec())?;
    let dim = q.dimension();

    let wring = work_ring(&ring)?;
    let n = wring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_ring(&wring))
        .collect::<Result<_>>()?;
    let mut subs: Vec<Substitution> = Vec::new();
    let mut k = 0usize;

    while k < n {
        cur.retain(|g| !g.is_zero());
        if cur.is_empty() {
            break;
        }
        let monic_present = cur.iter().any(|g| is_monic_in(g, k).unwrap_or(false));
        if !monic_present {
            // make the lowest-degree generator monic in x_k by shearing the
            // later variables into x_k
            let cand = cur
                .iter()
                .enumerate()
                .min_by_key(|(i, g)| (g.degree().expect("nonzero"), *i))
                .map(|(i, _)| i)
                .expect("nonempty");
            let mut done = false;
            for _ in 0..SUBSTITUTION_RETRIES {
                let f = &wring.field;
                let mut mat: Vec<Vec<_>> = (0..n)
                    .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
                    .collect();
                for row in mat.iter_mut().take(n).skip(k + 1) {
                    row[k] = f.random(&mut rng);
                }
                let sigma = Substitution::linear(&wring, mat)?;
                if is_monic_in(&sigma.apply(&cur[cand]), k)? {
                    cur = cur.iter().map(|g| sigma.apply(g)).collect();
                    subs.push(sigma);
                    done = true;
                    break;
                }
            }
            if !done {
                return Err(Error::Resource(
                    "substitution retry budget exhausted; use a larger coefficient field (e.g. F 32003 or Q)"
                        .to_string(),
                ));
            }
        }
        // eliminate x_k through a block order and recurse on the rest
        let elim_ring = wring.with_order(MonomialOrder::Block(k + 1))?;
        let gens_e: Vec<Polynomial> = cur
            .iter()
            .map(|g| g.with_ring(&elim_ring))
            .collect::<Result<_>>()?;
        let gb = Ideal::new(&elim_ring, gens_e)?;
        cur = gb
            .gb()
            .elements()
            .iter()
            .filter(|g| g.support_in_range(k + 1, n))
            .map(|g| g.with_ring(&wring))
            .collect::<Result<_>>()?;
        k += 1;
    }

    if (n - k) as i64 != dim {
        return Err(Error::Internal(format!(
            "Noether recursion left {} base variables but the quotient has dimension {dim}",
            n - k
        )));
    }

    let block_ring = if k == 0 {
        wring.clone()
    } else {
        wring.with_order(MonomialOrder::Block(k))?
    };
    let mut tgens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.with_ring(&wring))
        .collect::<Result<_>>()?;
    for s in &subs {
        tgens = tgens.iter().map(|g| s.apply(g)).collect();
    }
    let tgens_block: Vec<Polynomial> = tgens
        .iter()
        .map(|g| g.with_ring(&block_ring))
        .collect::<Result<_>>()?;
    let transformed = Ideal::new(&block_ring, tgens_block)?;

    Ok(NoetherPosition {
        original_ring: ring,
        block_ring,
        substitutions: subs,
        transformed,
        fiber_count: k,
    })
}

/// Complete a position into a certified `NoetherData`: staircase basis,
/// count N, and the verified closure certificate.
pub fn module_generators(pos: NoetherPosition) -> Result<NoetherData> {
    let ring = &pos.block_ring;
    let n = ring.nvars();
    let k = pos.fiber_count;
    let gb = pos.transformed.gb().clone();

    let mut fiber_lms: Vec<Monomial> = Vec::new();
    let mut bound: Vec<Option<u32>> = vec![None; k];
    for g in gb.elements() {
        let lm = g.leading_monomial().expect("basis elements nonzero");
        if lm.support_in_range(0, k) {
            if let Some((v, e)) = lm.pure_var() {
                if v < k {
                    bound[v] = Some(bound[v].map_or(e, |b: u32| b.min(e)));
                }
            }
            fiber_lms.push(lm.clone());
        }
    }
    for (v, b) in bound.iter().enumerate() {
        if b.is_none() {
            return Err(Error::Internal(format!(
                "no pure power of fiber variable {} in the block-order basis; Noether position not reached",
                ring.var_name(v)
            )));
        }
    }

    // staircase: fiber monomials inside the pure-power box, not divisible by
    // any purely-fiber leading monomial
    let mut basis: Vec<Monomial> = vec![Monomial::one(n)];
    for v in 0..k {
        let b = bound[v].expect("checked");
        let mut next = Vec::with_capacity(basis.len() * b as usize);
        for m in &basis {
            for e in 0..b {
                let mut exps = m.exps().to_vec();
                exps[v] = e;
                next.push(Monomial::from_exps(exps));
            }
        }
        basis = next;
    }
    basis.retain(|m| !fiber_lms.iter().any(|g| g.divides(m)));
    basis.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())));
    if basis.first().map(|m| m.is_one()) != Some(true) {
        return Err(Error::Internal("staircase basis does not contain 1".to_string()));
    }

    let base_ring = ring.suffix_ring(k)?;
    let index: BTreeMap<Monomial, usize> =
        basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();

    let mut closure = Vec::new();
    let data_split = |nf: &Polynomial| -> Result<Vec<Polynomial>> {
        split_standard(nf, k, &index, &base_ring, &basis)
    };
    for v in 0..k {
        for (bi, m) in basis.iter().enumerate() {
            let prod = Polynomial::monomial(ring, m.mul(&Monomial::var(v, n)));
            let nf = gb.reduce(&prod);
            let coords = data_split(&nf)?;
            // membership re-check: v*m minus its reassembly lies in the ideal
            let back = reassemble_in_block(ring, k, &basis, &coords)?;
            if !gb.reduce(&prod.sub(&back)).is_zero() {
                return Err(Error::Internal(
                    "closure certificate failed the membership re-check".to_string(),
                ));
            }
            closure.push(ClosureEntry { fiber_var: v, basis_index: bi, coords });
        }
    }

    Ok(NoetherData { position: pos, base_ring, basis, closure })
}

/// `noether_position = find position + certify module generators`.
pub fn noether_position(ideal: &Ideal, seed: u64) -> Result<NoetherData> {
    module_generators(find_noether_position(ideal, seed)?)
}

fn split_standard(
    nf: &Polynomial,
    fiber_count: usize,
    index: &BTreeMap<Monomial, usize>,
    base_ring: &RingRc,
    basis: &[Monomial],
) -> Result<Vec<Polynomial>> {
    let n = nf.ring().nvars();
    let mut raw: Vec<Vec<(crate::field::Scalar, Monomial)>> = vec![Vec::new(); basis.len()];
    for (c, m) in nf.terms() {
        let fiber = m.restrict_range(0, fiber_count);
        let base = m.slice_range(fiber_count, n);
        let Some(&bi) = index.get(&fiber) else {
            return Err(Error::Internal(
                "normal form has a fiber part outside the staircase basis".to_string(),
            ));
        };
        raw[bi].push((c.clone(), base));
    }
    raw.into_iter()
        .map(|terms| Polynomial::from_terms(base_ring, terms))
        .collect()
}

fn reassemble_in_block(
    ring: &RingRc,
    fiber_count: usize,
    basis: &[Monomial],
    coords: &[Polynomial],
) -> Result<Polynomial> {
    let n = ring.nvars();
    let var_map: Vec<Option<usize>> = (0..n - fiber_count).map(|i| Some(i + fiber_count)).collect();
    let mut acc = Polynomial::zero(ring);
    for (m, c) in basis.iter().zip(coords) {
        let lifted = c.map_to_ring(ring, &var_map)?;
        acc = acc.add(&lifted.mul(&Polynomial::monomial(ring, m.clone())));
    }
    Ok(acc)
}

/// Coordinates of `f` over the staircase basis, as polynomials in the base
/// ring. Reassembling the vector reproduces `f` modulo the ideal.
pub fn express_in_basis(f: &Polynomial, nd: &NoetherData) -> Result<Vec<Polynomial>> {
    let ring = &nd.position.block_ring;
    let f = if f.ring() == ring { f.clone() } else { f.with_ring(ring)? };
    let gb = nd.position.transformed.gb();
    let nf = gb.reduce(&f);
    let index: BTreeMap<Monomial, usize> =
        nd.basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    split_standard(&nf, nd.position.fiber_count, &index, &nd.base_ring, &nd.basis)
}

/// Inverse of `express_in_basis` up to the ideal: the block-ring element
/// `sum coords[i] * basis[i]`.
pub fn reassemble(nd: &NoetherData, coords: &[Polynomial]) -> Result<Polynomial> {
    reassemble_in_block(&nd.position.block_ring, nd.position.fiber_count, &nd.basis, coords)
}

/// One accepted trial: `d` homogeneous linear forms with Artinian quotient,
/// and the resulting length.
#[derive(Debug, Clone)]
pub struct ParameterTrial {
    pub linear_forms: Vec<Polynomial>,
    pub length: u64,
    pub seed: u64,
}

/// Upper bound for the parameter degree: minimum length of the quotient by a
/// sampled linear system of parameters. Trial zero is the Noether base, so
/// the value never exceeds N.
pub fn parameter_degree_upper(
    q: &QuotientPresentation,
    trials: usize,
    seed: u64,
) -> Result<(u64, ParameterTrial)> {
    let nd = noether_position(&q.ideal, seed)?;
    parameter_degree_with(q, &nd, trials, seed)
}

pub fn parameter_degree_with(
    q: &QuotientPresentation,
    nd: &NoetherData,
    trials: usize,
    seed: u64,
) -> Result<(u64, ParameterTrial)> {
    if q.is_zero_ring() {
        return Err(Error::Input("parameter degree of the zero ring".to_string()));
    }
    let d = q.dimension();
    if d == 0 {
        let len = q.length_zero_dim()?;
        return Ok((len, ParameterTrial { linear_forms: vec![], length: len, seed }));
    }
    let d = d as usize;

    let block = &nd.position.block_ring;
    let k = nd.position.fiber_count;
    let base_forms: Vec<Polynomial> = (k..block.nvars()).map(|i| Polynomial::var(block, i)).collect();
    let q0 = QuotientPresentation::new(
        block,
        [nd.position.transformed.generators(), &base_forms].concat(),
    )?;
    if q0.dimension() != 0 {
        return Err(Error::Internal(
            "Noether base variables are not a system of parameters".to_string(),
        ));
    }
    let len0 = q0.length_zero_dim()?;
    let mut best = ParameterTrial { linear_forms: base_forms, length: len0, seed };

    let ring = q.ring();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15));
    for _ in 0..trials {
        let mut accepted = false;
        for _attempt in 0..SUBSTITUTION_RETRIES {
            let forms: Vec<Polynomial> = (0..d)
                .map(|_| {
                    let raw: Vec<(crate::field::Scalar, Monomial)> = (0..n)
                        .map(|i| (ring.field.random(&mut rng), Monomial::var(i, n)))
                        .collect();
                    Polynomial::from_terms(ring, raw)
                })
                .collect::<Result<_>>()?;
            if forms.iter().any(|f| f.is_zero()) {
                continue;
            }
            let qt = q.quotient_by_extra(&forms)?;
            if qt.is_zero_ring() || qt.dimension() != 0 {
                continue; // rejected trial, resample
            }
            let len = qt.length_zero_dim()?;
            if len < best.length {
                best = ParameterTrial { linear_forms: forms, length: len, seed };
            }
            accepted = true;
            break;
        }
        if !accepted {
            return Err(Error::Resource(
                "could not sample a linear system of parameters; field too small?".to_string(),
            ));
        }
    }
    Ok((best.length, best))
}

/// The chain e <= paramdeg <= N with the Cohen-Macaulay equality flag.
#[derive(Debug, Clone)]
pub struct InvariantChain {
    pub e: u64,
    pub paramdeg_upper: u64,
    pub n_gens: u64,
    pub cm: bool,
    pub chain_holds: bool,
    /// e == paramdeg_upper observed exactly on Cohen-Macaulay input.
    pub cm_equality: bool,
}

pub fn invariant_chain(
    q: &QuotientPresentation,
    trials: usize,
    seed: u64,
    cfg: &ResolveConfig,
) -> Result<InvariantChain> {
    let e = q.multiplicity()?;
    let nd = noether_position(&q.ideal, seed)?;
    let n_gens = nd.n_gens() as u64;
    let (paramdeg, _) = parameter_degree_with(q, &nd, trials, seed)?;
    let cm = is_cohen_macaulay(q, cfg)?;
    Ok(InvariantChain {
        e,
        paramdeg_upper: paramdeg,
        n_gens,
        cm,
        chain_holds: e <= paramdeg && paramdeg <= n_gens,
        cm_equality: e == paramdeg,
    })
}

/// The preimage module `W` of a test ideal under `S^N -> A`, with its
/// resolution data over the base ring.
#[derive(Debug, Clone)]
pub struct WData {
    /// Minimal generator count of W over the base ring.
    pub q: usize,
    /// First Betti number of W over the base ring (0 when W is free).
    pub p: usize,
    pub n_gens: usize,
    pub generators: Vec<ModVec>,
    pub resolution: GradedResolution,
    pub composition_zero: bool,
    /// `HS(S^N) - HS(W) = HS(A/a)` as exact rational functions.
    pub euler_identity: bool,
    pub height: u64,
    pub quotient_cm: bool,
    pub tau: Option<usize>,
    pub mu_a: usize,
    pub p_le_tau_n: Option<bool>,
    pub q_le_p_plus_n: bool,
}

/// Build `W = preimage of a` inside `S^N` for a Cohen-Macaulay ambient
/// algebra certified free over its Noether base (`N = e`), resolve it over
/// the base ring, and check the proof-shape inequalities.
pub fn build_w(
    q: &QuotientPresentation,
    a_gens: &[Polynomial],
    nd: &NoetherData,
    cfg: &ResolveConfig,
) -> Result<WData> {
    if !is_cohen_macaulay(q, cfg)? {
        return Err(Error::Precondition(
            "the ambient algebra must be Cohen-Macaulay to build W".to_string(),
        ));
    }
    let e = q.multiplicity()?;
    if nd.n_gens() as u64 != e {
        return Err(Error::Precondition(format!(
            "freeness certificate failed: N = {} but e = {e}",
            nd.n_gens()
        )));
    }

    let block = &nd.position.block_ring;
    let a_t: Vec<Polynomial> = a_gens.iter().map(|g| nd.transform(g)).collect::<Result<_>>()?;
    let qa_block = QuotientPresentation::new(
        block,
        [nd.position.transformed.generators(), a_t.as_slice()].concat(),
    )?;
    if qa_block.is_zero_ring() {
        return Err(Error::Input("test ideal is the whole ring".to_string()));
    }

    let sring = &nd.base_ring;
    let ambient = GradedFreeModule::new(nd.basis_degrees());
    let mut wgens: Vec<ModVec> = Vec::new();
    for g in &a_t {
        for m in &nd.basis {
            let prod = g.mul(&Polynomial::monomial(block, m.clone()));
            let coords = express_in_basis(&prod, nd)?;
            wgens.push(ModVec::new(sring, coords));
        }
    }
    let trimmed = minimalize_module_generators(sring, &ambient, &wgens)?;
    if trimmed.is_empty() {
        return Err(Error::Input("test ideal is zero in the quotient".to_string()));
    }
    let q_count = trimmed.len();

    let resolution = free_resolution_of_submodule(sring, &ambient, &trimmed, cfg)?;
    if resolution.length() > 1 {
        return Err(Error::Hypothesis(format!(
            "W has projective dimension {} over the base ring; the height-two mechanism needs <= 1",
            resolution.length()
        )));
    }
    let p = if resolution.length() == 0 { 0 } else { resolution.betti[1] };

    // composition S^p -> S^q -> W is zero: each relation column kills the
    // generators
    let mut composition_zero = true;
    if resolution.length() == 1 {
        let d1 = &resolution.maps[0];
        for c in 0..d1.cols() {
            let mut acc = ModVec::zero(sring, ambient.rank());
            for (j, w) in trimmed.iter().enumerate() {
                acc = acc.add(&w.mul_poly(d1.entry(j, c)));
            }
            if !acc.is_zero() {
                composition_zero = false;
            }
        }
    }

    // graded Euler identity for 0 -> W -> S^N -> A/a -> 0
    let gbw = module_buchberger(sring, ambient.rank(), &trimmed);
    let hs_w = submodule_series(sring, &ambient, &gbw);
    let hs_free = HilbertSeries::new(ambient.series_numerator(), sring.nvars());
    let lhs = HilbertSeries::new(
        hs_free.numerator.sub(&hs_w.numerator),
        sring.nvars(),
    );
    let euler_identity = lhs.same_series(&qa_block.hilbert_series());

    let height = q.operational_height(a_gens)?;
    let qa = q.quotient_by_extra(a_gens)?;
    let quotient_cm = is_cohen_macaulay(&qa, cfg)?;
    let tau = if quotient_cm { Some(cm_type(&qa, cfg)?) } else { None };
    let mu_a = mu_in_quotient(q, a_gens)?;
    let n_gens = nd.n_gens();

    Ok(WData {
        q: q_count,
        p,
        n_gens,
        generators: trimmed,
        resolution,
        composition_zero,
        euler_identity,
        height,
        quotient_cm,
        tau,
        mu_a,
        p_le_tau_n: tau.map(|t| p <= t * n_gens),
        q_le_p_plus_n: q_count <= p + n_gens,
    })
}

/// Make a polynomial monic in `var` over any field: try linear shears
/// first, then fall back to power substitutions `x_j -> x_j + x_var^(D^j)`,
/// which work over arbitrary (e.g. tiny) fields at the cost of breaking
/// homogeneity.
pub fn make_monic_any_field(
    f: &Polynomial,
    var: usize,
    seed: u64,
) -> Result<(Vec<Substitution>, Polynomial)> {
    if f.is_zero() {
        return Err(Error::Input("cannot make the zero polynomial monic".to_string()));
    }
    if is_monic_in(f, var)? {
        return Ok((vec![], f.clone()));
    }
    let ring = f.ring().clone();
    let n = ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if ring.field.has_at_least(101) {
        for _ in 0..SUBSTITUTION_RETRIES {
            let fl = &ring.field;
            let mut mat: Vec<Vec<_>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { fl.one() } else { fl.zero() }).collect())
                .collect();
            for (i, row) in mat.iter_mut().enumerate() {
                if i != var {
                    row[var] = fl.random(&mut rng);
                }
            }
            let sigma = Substitution::linear(&ring, mat)?;
            let img = sigma.apply(f);
            if is_monic_in(&img, var)? {
                return Ok((vec![sigma], img));
            }
        }
    }
    // power fallback: distinct shifted degrees make the top x_var power unique
    let deg = f.degree().expect("nonzero");
    let base = deg + 1;
    let mut subs = Vec::new();
    let mut img = f.clone();
    let mut exp = base;
    for j in 0..n {
        if j == var {
            continue;
        }
        if img.degree_in_var(j) > 0 {
            let s = Substitution::power(&ring, j, var, exp)?;
            img = s.apply(&img);
            subs.push(s);
        }
        exp = exp.saturating_mul(base).min(1 << 20);
    }
    if is_monic_in(&img, var)? {
        Ok((subs, img))
    } else {
        Err(Error::Internal("power substitution failed to reach a monic form".to_string()))
    }
}

/// Length of the quotient by the Noether base variables; always equals N.
pub fn base_section_length(nd: &NoetherData) -> Result<u64> {
    let block = &nd.position.block_ring;
    let k = nd.position.fiber_count;
    let forms: Vec<Polynomial> = (k..block.nvars()).map(|i| Polynomial::var(block, i)).collect();
    let q = QuotientPresentation::new(
        block,
        [nd.position.transformed.generators(), forms.as_slice()].concat(),
    )?;
    q.length_zero_dim()
}

/// Check the closure certificate from scratch by ideal membership; a failure
/// is an internal bug, never a data condition.
pub fn verify_closure(nd: &NoetherData) -> Result<()> {
    let ring = &nd.position.block_ring;
    let gens = nd.position.transformed.generators().to_vec();
    let ideal = Ideal::new(ring, gens)?;
    let gb_check = buchberger(ring, ideal.generators());
    for entry in &nd.closure {
        let prod = Polynomial::monomial(
            ring,
            nd.basis[entry.basis_index].mul(&Monomial::var(entry.fiber_var, ring.nvars())),
        );
        let back = reassemble(nd, &entry.coords)?;
        if !gb_check.reduce(&prod.sub(&back)).is_zero() {
            return Err(Error::Internal("closure certificate does not verify".to_string()));
        }
    }
    Ok(())
}

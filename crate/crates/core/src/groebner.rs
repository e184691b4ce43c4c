//! Buchberger's algorithm with the product and chain criteria, reduced
//! Groebner bases with tracked cofactors, normal forms, ideal membership,
//! and elimination ideals via block orders.
//!
//! Everything is deterministic: pair selection is by lowest lcm degree with
//! monomial-order and index tiebreaks, and the final basis is the reduced
//! basis, unique for (ideal, order).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingRc;

/// An ideal given by generators, with a lazily computed reduced basis.
#[derive(Debug)]
pub struct Ideal {
    ring: RingRc,
    gens: Vec<Polynomial>,
    cache: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Ideal {
        let cache = OnceLock::new();
        if let Some(gb) = self.cache.get() {
            let _ = cache.set(gb.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must share the ring.
    pub fn new(ring: &RingRc, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::Input("generator not in the stated ring".to_string()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: OnceLock::new() })
    }

    pub fn zero(ring: &RingRc) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new(), cache: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn all_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn gb(&self) -> &GroebnerBasis {
        self.cache.get_or_init(|| buchberger(&self.ring, &self.gens))
    }

    /// True when the reduced basis contains a unit, i.e. the ideal is (1).
    pub fn is_whole_ring(&self) -> bool {
        self.gb().elements().iter().any(|g| g.is_scalar())
    }
}

/// Reduced Groebner basis together with cofactors expressing every basis
/// element as a combination of the original generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: RingRc,
    elements: Vec<Polynomial>,
    cofactors: Vec<Vec<Polynomial>>,
    original: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Cofactors of basis element `i` over the original generators.
    pub fn cofactors(&self, i: usize) -> &[Polynomial] {
        &self.cofactors[i]
    }

    pub fn original_generators(&self) -> &[Polynomial] {
        &self.original
    }

    /// Full normal form: no term of the result is divisible by any leading
    /// monomial of the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.reduce_with_quotients(f).1
    }

    /// Division with quotients over the basis elements:
    /// `f = sum q_i * g_i + r`.
    pub fn reduce_with_quotients(&self, f: &Polynomial) -> (Vec<Polynomial>, Polynomial) {
        let ring = &self.ring;
        let field = &ring.field;
        let mut quots = vec![Polynomial::zero(ring); self.elements.len()];
        let mut work = f.clone();
        let mut rem = Polynomial::zero(ring);
        'outer: while let Some((lc, lm)) = work.leading().map(|(c, m)| (c.clone(), m.clone())) {
            for (gi, g) in self.elements.iter().enumerate() {
                let glm = g.leading_monomial().expect("basis elements nonzero");
                if let Some(q) = lm.try_div(glm) {
                    let c = field
                        .div(&lc, g.leading_coeff().expect("nonzero"))
                        .expect("leading coefficients invertible");
                    work = work.sub(&g.mul_term(&c, &q));
                    quots[gi] = quots[gi].add(&Polynomial::term(ring, c, q));
                    continue 'outer;
                }
            }
            let t = Polynomial::term(ring, lc, lm);
            rem = rem.add(&t);
            work = work.sub(&t);
        }
        (quots, rem)
    }

    /// Re-check the basis from scratch: every S-pair reduces to zero, every
    /// original generator reduces to zero, and every cofactor identity holds
    /// exactly. This is a post-hoc certificate, independent of the run that
    /// produced the basis.
    pub fn verify_certificates(&self) -> Result<()> {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.ring, &self.elements[i], &self.elements[j]);
                if !self.reduce(&s).is_zero() {
                    return Err(Error::Internal(format!(
                        "S-polynomial of basis elements {i}, {j} does not reduce to zero"
                    )));
                }
            }
        }
        for (k, g) in self.original.iter().enumerate() {
            if !self.reduce(g).is_zero() {
                return Err(Error::Internal(format!(
                    "original generator {k} does not reduce to zero"
                )));
            }
        }
        for (i, g) in self.elements.iter().enumerate() {
            let mut acc = Polynomial::zero(&self.ring);
            for (c, f) in self.cofactors[i].iter().zip(&self.original) {
                acc = acc.add(&c.mul(f));
            }
            if &acc != g {
                return Err(Error::Internal(format!(
                    "cofactor identity fails for basis element {i}"
                )));
            }
        }
        Ok(())
    }
}

struct Tracked {
    p: Polynomial,
    rep: Vec<Polynomial>,
}

fn rep_sub_mul(ring: &RingRc, rep: &mut [Polynomial], other: &[Polynomial], q: &Polynomial) {
    let _ = ring;
    for (r, o) in rep.iter_mut().zip(other) {
        *r = r.sub(&o.mul(q));
    }
}

fn reduce_tracked(ring: &RingRc, mut work: Polynomial, mut rep: Vec<Polynomial>, basis: &[Tracked], skip: Option<usize>) -> Tracked {
    let field = &ring.field;
    let mut rem = Polynomial::zero(ring);
    'outer: while let Some((lc, lm)) = work.leading().map(|(c, m)| (c.clone(), m.clone())) {
        for (gi, g) in basis.iter().enumerate() {
            if Some(gi) == skip || g.p.is_zero() {
                continue;
            }
            let glm = g.p.leading_monomial().expect("nonzero");
            if let Some(qm) = lm.try_div(glm) {
                let c = field
                    .div(&lc, g.p.leading_coeff().expect("nonzero"))
                    .expect("invertible");
                let q = Polynomial::term(ring, c, qm);
                work = work.sub(&g.p.mul(&q));
                rep_sub_mul(ring, &mut rep, &g.rep, &q);
                continue 'outer;
            }
        }
        let t = Polynomial::term(ring, lc, lm);
        rem = rem.add(&t);
        work = work.sub(&t);
    }
    Tracked { p: rem, rep }
}

pub fn s_polynomial(ring: &RingRc, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = &ring.field;
    let (fc, fm) = f.leading().expect("nonzero");
    let (gc, gm) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let fa = field.inv(fc).expect("invertible");
    let ga = field.inv(gc).expect("invertible");
    let fq = l.try_div(fm).expect("lcm divisible");
    let gq = l.try_div(gm).expect("lcm divisible");
    f.mul_term(&fa, &fq).sub(&g.mul_term(&ga, &gq))
}

fn s_pair_tracked(ring: &RingRc, a: &Tracked, b: &Tracked) -> (Polynomial, Vec<Polynomial>) {
    let field = &ring.field;
    let (fc, fm) = a.p.leading().expect("nonzero");
    let (gc, gm) = b.p.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let fa = field.inv(fc).expect("invertible");
    let ga = field.inv(gc).expect("invertible");
    let fq = l.try_div(fm).expect("divisible");
    let gq = l.try_div(gm).expect("divisible");
    let p = a.p.mul_term(&fa, &fq).sub(&b.p.mul_term(&ga, &gq));
    let rep = a
        .rep
        .iter()
        .zip(&b.rep)
        .map(|(ra, rb)| ra.mul_term(&fa, &fq).sub(&rb.mul_term(&ga, &gq)))
        .collect();
    (p, rep)
}

/// Buchberger with normal selection (lowest lcm degree first), the product
/// criterion, and the chain criterion. Returns the reduced basis.
pub fn buchberger(ring: &RingRc, gens: &[Polynomial]) -> GroebnerBasis {
    let original: Vec<Polynomial> = gens.to_vec();
    let ngens = original.len();
    let unit_rep = |k: usize| -> Vec<Polynomial> {
        (0..ngens)
            .map(|j| if j == k { Polynomial::one(ring) } else { Polynomial::zero(ring) })
            .collect()
    };

    let mut basis: Vec<Tracked> = Vec::new();
    for (k, g) in original.iter().enumerate() {
        if !g.is_zero() {
            basis.push(Tracked { p: g.clone(), rep: unit_rep(k) });
        }
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();

    while !pairs.is_empty() {
        // normal selection: min (lcm degree, lcm under order, i, j)
        let mut best = 0;
        let key = |&(i, j): &(usize, usize)| -> Monomial {
            basis[i]
                .p
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].p.leading_monomial().unwrap())
        };
        let mut best_lcm = key(&pairs[0]);
        for (idx, pr) in pairs.iter().enumerate().skip(1) {
            let l = key(pr);
            let better = match l.degree().cmp(&best_lcm.degree()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => match ring.cmp_mono(&l, &best_lcm) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => *pr < pairs[best],
                },
            };
            if better {
                best = idx;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));

        let li = basis[i].p.leading_monomial().unwrap().clone();
        let lj = basis[j].p.leading_monomial().unwrap().clone();
        let lcm = li.lcm(&lj);

        // product criterion
        if li.mul(&lj) == lcm {
            continue;
        }
        // chain criterion
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let lk = basis[k].p.leading_monomial().unwrap();
            if !lk.divides(&lcm) {
                return false;
            }
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            done.contains(&a) && done.contains(&b)
        });
        if chained {
            continue;
        }

        let (sp, srep) = s_pair_tracked(ring, &basis[i], &basis[j]);
        let red = reduce_tracked(ring, sp, srep, &basis, None);
        if !red.p.is_zero() {
            let newi = basis.len();
            basis.push(red);
            for k in 0..newi {
                pairs.push((k, newi));
            }
        }
    }

    // minimalize: keep an antichain of leading monomials
    let mut order_idx: Vec<usize> = (0..basis.len()).collect();
    order_idx.sort_by(|&a, &b| {
        ring.cmp_mono(
            basis[a].p.leading_monomial().unwrap(),
            basis[b].p.leading_monomial().unwrap(),
        )
        .then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order_idx {
        let lm = basis[i].p.leading_monomial().unwrap();
        if !kept
            .iter()
            .any(|&k| basis[k].p.leading_monomial().unwrap().divides(lm))
        {
            kept.push(i);
        }
    }

    // tail-reduce each kept element by the others and normalize to monic
    let mut reduced: Vec<Tracked> = kept
        .iter()
        .map(|&i| Tracked { p: basis[i].p.clone(), rep: basis[i].rep.clone() })
        .collect();
    for i in 0..reduced.len() {
        let me = Tracked { p: reduced[i].p.clone(), rep: reduced[i].rep.clone() };
        let slim = reduce_tracked(ring, me.p, me.rep, &reduced, Some(i));
        reduced[i] = slim;
        let lc = reduced[i].p.leading_coeff().expect("nonzero").clone();
        let inv = ring.field.inv(&lc).expect("invertible");
        reduced[i].p = reduced[i].p.scale(&inv);
        for r in reduced[i].rep.iter_mut() {
            *r = r.scale(&inv);
        }
    }
    reduced.sort_by(|a, b| {
        ring.cmp_mono(
            a.p.leading_monomial().unwrap(),
            b.p.leading_monomial().unwrap(),
        )
    });

    let elements = reduced.iter().map(|t| t.p.clone()).collect();
    let cofactors = reduced.into_iter().map(|t| t.rep).collect();
    GroebnerBasis { ring: ring.clone(), elements, cofactors, original }
}

/// Normal form of `f` modulo `gb`; zero iff `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != gb.ring() {
        return Err(Error::Input(
            "polynomial and basis live in different rings or orders".to_string(),
        ));
    }
    Ok(gb.reduce(f))
}

pub fn ideal_membership(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.ring() != ideal.ring() {
        return Err(Error::Input("polynomial not in the ideal's ring".to_string()));
    }
    Ok(ideal.gb().reduce(f).is_zero())
}

/// When `f` lies in the ideal, explicit cofactors over the *original*
/// generators, assembled from the division quotients and the basis
/// cofactors.
pub fn membership_cofactors(f: &Polynomial, ideal: &Ideal) -> Result<Option<Vec<Polynomial>>> {
    if f.ring() != ideal.ring() {
        return Err(Error::Input("polynomial not in the ideal's ring".to_string()));
    }
    let gb = ideal.gb();
    let (quots, rem) = gb.reduce_with_quotients(f);
    if !rem.is_zero() {
        return Ok(None);
    }
    let ring = ideal.ring();
    let n = ideal.generators().len();
    let mut out = vec![Polynomial::zero(ring); n];
    for (qi, q) in quots.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for (k, c) in gb.cofactors(qi).iter().enumerate() {
            out[k] = out[k].add(&q.mul(c));
        }
    }
    Ok(Some(out))
}

/// Intersection with the subring on the final `keep` variables, via a block
/// order. The result lives in the suffix ring.
pub fn eliminate(ideal: &Ideal, keep: usize) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if keep > n {
        return Err(Error::Input("cannot keep more variables than the ring has".to_string()));
    }
    let drop = n - keep;
    let block_ring = if drop == 0 {
        ring.with_order(MonomialOrder::DegRevLex)?
    } else {
        ring.with_order(MonomialOrder::Block(drop))?
    };
    let gens: Result<Vec<Polynomial>> = ideal
        .generators()
        .iter()
        .map(|g| g.with_ring(&block_ring))
        .collect();
    let block_ideal = Ideal::new(&block_ring, gens?)?;
    let small = ring.suffix_ring(drop)?;
    let var_map: Vec<Option<usize>> = (0..n)
        .map(|i| if i < drop { None } else { Some(i - drop) })
        .collect();
    let mut out = Vec::new();
    for g in block_ideal.gb().elements() {
        if g.support_in_range(drop, n) {
            out.push(g.map_to_ring(&small, &var_map)?);
        }
    }
    Ideal::new(&small, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::PolyRing;

    fn ring(vars: &[&str]) -> RingRc {
        PolyRing::named(Field::Rationals, vars, MonomialOrder::DegRevLex).unwrap()
    }

    fn ideal(r: &RingRc, gens: &[&str]) -> Ideal {
        let gs = gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect();
        Ideal::new(r, gs).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y", "z"]);
        // multiple of a generator reduces to zero
        let i = ideal(&r, &["x^2 - y*z"]);
        let f = parse_polynomial(&r, "x^3 - x*y*z").unwrap();
        assert!(i.gb().reduce(&f).is_zero());
        // no leading-term division leaves the input alone
        let j = ideal(&r, &["x"]);
        let y = parse_polynomial(&r, "y").unwrap();
        assert_eq!(normal_form(&y, j.gb()).unwrap(), y);
        // single reduction step: x^2 mod (x^2 - y z) = y z
        let nf = i.gb().reduce(&parse_polynomial(&r, "x^2").unwrap());
        assert_eq!(nf, parse_polynomial(&r, "y*z").unwrap());
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x", "y"]);
        let gb = ideal(&r, &["x"]).gb().clone();
        assert_eq!(gb.elements().len(), 1);
        assert_eq!(gb.elements()[0], parse_polynomial(&r, "x").unwrap());

        // (x^2, x y) is already a reduced basis
        let gb2 = ideal(&r, &["x^2", "x*y"]).gb().clone();
        let strs: Vec<String> = gb2.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, vec!["x*y", "x^2"]);
        gb2.verify_certificates().unwrap();
    }

    #[test]
    fn basis_is_certified_on_a_nontrivial_ideal() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y - z^2", "y^2 - z*x"]);
        let gb = i.gb();
        gb.verify_certificates().unwrap();
        for g in i.generators() {
            assert!(gb.reduce(g).is_zero());
        }
    }

    #[test]
    fn membership_with_cofactors() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y"]);
        let f = parse_polynomial(&r, "x^2*y").unwrap();
        assert!(ideal_membership(&f, &i).unwrap());
        let cof = membership_cofactors(&f, &i).unwrap().unwrap();
        let mut acc = Polynomial::zero(&r);
        for (c, g) in cof.iter().zip(i.generators()) {
            acc = acc.add(&c.mul(g));
        }
        assert_eq!(acc, f);
        // y is not in (x)
        let j = ideal(&r, &["x"]);
        assert!(!ideal_membership(&parse_polynomial(&r, "y").unwrap(), &j).unwrap());
        assert!(membership_cofactors(&parse_polynomial(&r, "y").unwrap(), &j)
            .unwrap()
            .is_none());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        // no pure-y element in (x^2, x y)
        let e = eliminate(&ideal(&r, &["x^2", "x*y"]), 1).unwrap();
        assert!(e.is_zero());
        // the graph ideal (x - y) has trivial intersection with k[y]
        let e2 = eliminate(&ideal(&r, &["x - y"]), 1).unwrap();
        assert!(e2.is_zero());

        // twisted-cubic-style affine elimination: x^2 - y, x^3 - z
        let r3 = ring(&["x", "y", "z"]);
        let i = ideal(&r3, &["x^2 - y", "x^3 - z"]);
        let e3 = eliminate(&i, 2).unwrap();
        let small = e3.ring().clone();
        let expected = parse_polynomial(&small, "y^3 - z^2").unwrap();
        assert!(ideal_membership(&expected, &e3).unwrap());
        // soundness both ways: every elimination generator lies in the big ideal
        for g in e3.generators() {
            let lifted = g
                .map_to_ring(&r3, &[Some(1), Some(2)])
                .unwrap();
            assert!(ideal_membership(&lifted, &i).unwrap());
        }
    }

    #[test]
    fn order_mismatch_rejected() {
        let r = ring(&["x", "y"]);
        let rl = r.with_order(MonomialOrder::Lex).unwrap();
        let i = ideal(&r, &["x^2"]);
        let f = parse_polynomial(&rl, "x").unwrap();
        assert!(normal_form(&f, i.gb()).is_err());
    }
}

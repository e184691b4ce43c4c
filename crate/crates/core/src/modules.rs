//! Graded free modules, vectors of polynomials, module Groebner bases under
//! a position-over-term order, syzygy computation, and minimal generating
//! sets of graded submodules.

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hilbert::{HilbertSeries, IntPoly, MonomialIdeal};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRc;

/// Free graded module, one degree shift per basis element.
/// Twist `d` means the basis element sits in degree `d` (the summand is
/// `S(-d)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> GradedFreeModule {
        GradedFreeModule { twists }
    }

    pub fn trivial(rank: usize) -> GradedFreeModule {
        GradedFreeModule { twists: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.twists[i]
    }

    /// Numerator of the Hilbert series over `(1-t)^n`: sum of `t^twist`.
    pub fn series_numerator(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for &t in &self.twists {
            assert!(t >= 0, "series numerator needs nonnegative twists");
            acc = acc.add(&IntPoly::monomial(t as usize));
        }
        acc
    }
}

/// Element of a free module: a vector of polynomials over one ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ModVec {
    ring: RingRc,
    comps: Vec<Polynomial>,
}

impl ModVec {
    pub fn new(ring: &RingRc, comps: Vec<Polynomial>) -> ModVec {
        for c in &comps {
            assert!(c.ring() == ring, "component in a different ring");
        }
        ModVec { ring: ring.clone(), comps }
    }

    pub fn zero(ring: &RingRc, rank: usize) -> ModVec {
        ModVec { ring: ring.clone(), comps: vec![Polynomial::zero(ring); rank] }
    }

    pub fn unit(ring: &RingRc, rank: usize, i: usize) -> ModVec {
        let mut v = ModVec::zero(ring, rank);
        v.comps[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comp(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn comps(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &ModVec) -> ModVec {
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect();
        ModVec { ring: self.ring.clone(), comps }
    }

    pub fn sub(&self, o: &ModVec) -> ModVec {
        let comps = self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(b)).collect();
        ModVec { ring: self.ring.clone(), comps }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> ModVec {
        let comps = self.comps.iter().map(|p| p.mul_term(c, m)).collect();
        ModVec { ring: self.ring.clone(), comps }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> ModVec {
        let comps = self.comps.iter().map(|q| q.mul(p)).collect();
        ModVec { ring: self.ring.clone(), comps }
    }

    /// Extend with extra zero components on the right.
    fn extend_to(&self, rank: usize) -> ModVec {
        let mut comps = self.comps.clone();
        while comps.len() < rank {
            comps.push(Polynomial::zero(&self.ring));
        }
        ModVec { ring: self.ring.clone(), comps }
    }

    fn slice(&self, lo: usize, hi: usize) -> ModVec {
        ModVec { ring: self.ring.clone(), comps: self.comps[lo..hi].to_vec() }
    }

    /// Position-over-term leading term: the leading term of the first
    /// nonzero component.
    pub fn leading(&self) -> Option<(usize, &Scalar, &Monomial)> {
        for (i, c) in self.comps.iter().enumerate() {
            if let Some((sc, m)) = c.leading() {
                return Some((i, sc, m));
            }
        }
        None
    }

    /// Degree of a homogeneous vector with respect to `twists`; `None` for
    /// the zero vector; error when components disagree.
    pub fn homogeneous_degree(&self, twists: &GradedFreeModule) -> Result<Option<i64>> {
        let mut deg: Option<i64> = None;
        for (i, c) in self.comps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return Err(Error::Input("vector component is not homogeneous".to_string()));
            }
            let d = c.degree().expect("nonzero") as i64 + twists.twist(i);
            match deg {
                None => deg = Some(d),
                Some(prev) if prev == d => {}
                Some(prev) => {
                    return Err(Error::Input(format!(
                        "vector is not homogeneous: degrees {prev} and {d}"
                    )))
                }
            }
        }
        Ok(deg)
    }
}

/// Reduced module Groebner basis under the position-over-term order.
#[derive(Debug, Clone)]
pub struct ModuleGb {
    ring: RingRc,
    rank: usize,
    elements: Vec<ModVec>,
}

impl ModuleGb {
    pub fn elements(&self) -> &[ModVec] {
        &self.elements
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Full normal form of `v`.
    pub fn reduce(&self, v: &ModVec) -> ModVec {
        module_reduce(&self.ring, v.clone(), &self.elements, None)
    }

    pub fn contains(&self, v: &ModVec) -> bool {
        self.reduce(v).is_zero()
    }
}

fn module_reduce(ring: &RingRc, mut work: ModVec, basis: &[ModVec], skip: Option<usize>) -> ModVec {
    let field = &ring.field;
    let rank = work.rank();
    let mut rem = ModVec::zero(ring, rank);
    'outer: while let Some((comp, lc, lm)) = work
        .leading()
        .map(|(i, c, m)| (i, c.clone(), m.clone()))
    {
        for (gi, g) in basis.iter().enumerate() {
            if Some(gi) == skip {
                continue;
            }
            let Some((gc_comp, gc, gm)) = g.leading() else { continue };
            if gc_comp != comp {
                continue;
            }
            if let Some(q) = lm.try_div(gm) {
                let c = field.div(&lc, gc).expect("invertible");
                work = work.sub(&g.mul_term(&c, &q));
                continue 'outer;
            }
        }
        // move the whole leading term of the leading component to the remainder
        let t = Polynomial::term(ring, lc, lm);
        let mut tv = ModVec::zero(ring, rank);
        tv.comps[comp] = t;
        rem = rem.add(&tv);
        work = work.sub(&tv);
    }
    rem
}

/// Buchberger for submodules of a free module, position-over-term order,
/// chain criterion only (the product criterion is not valid for modules).
pub fn module_buchberger(ring: &RingRc, rank: usize, gens: &[ModVec]) -> ModuleGb {
    let mut basis: Vec<ModVec> = gens.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].leading().unwrap().0 == basis[j].leading().unwrap().0 {
                pairs.push((i, j));
            }
        }
    }
    let mut done: std::collections::BTreeSet<(usize, usize)> = Default::default();

    while !pairs.is_empty() {
        let lcm_of = |&(i, j): &(usize, usize)| -> Monomial {
            let (_, _, mi) = basis[i].leading().unwrap();
            let (_, _, mj) = basis[j].leading().unwrap();
            mi.lcm(mj)
        };
        let mut best = 0;
        let mut best_l = lcm_of(&pairs[0]);
        for (idx, pr) in pairs.iter().enumerate().skip(1) {
            let l = lcm_of(pr);
            let better = match l.degree().cmp(&best_l.degree()) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => match ring.cmp_mono(&l, &best_l) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => *pr < pairs[best],
                },
            };
            if better {
                best = idx;
                best_l = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        done.insert((i, j));

        let (ci, sci, mi) = {
            let (a, b, c) = basis[i].leading().unwrap();
            (a, b.clone(), c.clone())
        };
        let (_cj, scj, mj) = {
            let (_, b, c) = basis[j].leading().unwrap();
            (0, b.clone(), c.clone())
        };
        let lcm = mi.lcm(&mj);

        // chain criterion within the shared component
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let Some((ck, _, mk)) = basis[k].leading() else { return false };
            if ck != ci || !mk.divides(&lcm) {
                return false;
            }
            done.contains(&(i.min(k), i.max(k))) && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let field = &ring.field;
        let ai = field.inv(&sci).expect("invertible");
        let aj = field.inv(&scj).expect("invertible");
        let qi = lcm.try_div(&mi).unwrap();
        let qj = lcm.try_div(&mj).unwrap();
        let sp = basis[i].mul_term(&ai, &qi).sub(&basis[j].mul_term(&aj, &qj));
        let red = module_reduce(ring, sp, &basis, None);
        if !red.is_zero() {
            let newi = basis.len();
            let newc = red.leading().unwrap().0;
            basis.push(red);
            for k in 0..newi {
                if basis[k].leading().unwrap().0 == newc {
                    pairs.push((k, newi));
                }
            }
        }
    }

    // minimalize leading terms (same-component divisibility antichain)
    let mut idxs: Vec<usize> = (0..basis.len()).collect();
    idxs.sort_by(|&a, &b| {
        let (ca, _, ma) = basis[a].leading().unwrap();
        let (cb, _, mb) = basis[b].leading().unwrap();
        ca.cmp(&cb).then_with(|| ring.cmp_mono(ma, mb)).then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = Vec::new();
    for &i in &idxs {
        let (ci, _, mi) = basis[i].leading().unwrap();
        let dominated = kept.iter().any(|&k| {
            let (ck, _, mk) = basis[k].leading().unwrap();
            ck == ci && mk.divides(mi)
        });
        if !dominated {
            kept.push(i);
        }
    }
    let mut reduced: Vec<ModVec> = kept.iter().map(|&i| basis[i].clone()).collect();
    for i in 0..reduced.len() {
        let v = reduced[i].clone();
        let slim = module_reduce(ring, v, &reduced, Some(i));
        let (_, lc, _) = slim.leading().expect("leading term survives tail reduction");
        let inv = ring.field.inv(lc).expect("invertible");
        reduced[i] = slim.mul_term(&inv, &Monomial::one(ring.nvars()));
    }
    reduced.sort_by(|a, b| {
        let (ca, _, ma) = a.leading().unwrap();
        let (cb, _, mb) = b.leading().unwrap();
        ca.cmp(&cb).then_with(|| ring.cmp_mono(ma, mb))
    });

    ModuleGb { ring: ring.clone(), rank, elements: reduced }
}

/// Generators (a Groebner basis) of the syzygy module of `cols`, vectors in
/// the rank-`ambient_rank` free module. Computed from a basis of the graph
/// module in `R^(ambient+s)` under an order that eliminates the ambient
/// components.
pub fn syzygy_generators(ring: &RingRc, ambient_rank: usize, cols: &[ModVec]) -> Vec<ModVec> {
    let s = cols.len();
    let total = ambient_rank + s;
    let aug: Vec<ModVec> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut v = c.extend_to(total);
            v.comps[ambient_rank + j] = Polynomial::one(ring);
            v
        })
        .collect();
    let gb = module_buchberger(ring, total, &aug);
    gb.elements()
        .iter()
        .filter(|v| v.slice(0, ambient_rank).is_zero())
        .map(|v| v.slice(ambient_rank, total))
        .collect()
}

/// Minimal homogeneous generating set of the submodule generated by `gens`,
/// by graded Nakayama: sort by degree and keep exactly the generators not in
/// the submodule generated by the generators already kept.
pub fn minimalize_module_generators(
    ring: &RingRc,
    ambient: &GradedFreeModule,
    gens: &[ModVec],
) -> Result<Vec<ModVec>> {
    let mut graded: Vec<(i64, usize)> = Vec::new();
    for (i, v) in gens.iter().enumerate() {
        match v.homogeneous_degree(ambient)? {
            None => continue, // zero vector
            Some(d) => graded.push((d, i)),
        }
    }
    graded.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut kept: Vec<ModVec> = Vec::new();
    let mut gb: Option<ModuleGb> = None;
    for (_, i) in graded {
        let member = match &gb {
            None => false,
            Some(g) => g.contains(&gens[i]),
        };
        if !member {
            kept.push(gens[i].clone());
            gb = Some(module_buchberger(ring, ambient.rank(), &kept));
        }
    }
    Ok(kept)
}

/// Hilbert series of the quotient `F / W` where `gb` is a module basis of
/// `W` inside the free module `F = ambient`: per-component staircases,
/// shifted by the twists.
pub fn module_quotient_series(
    ring: &RingRc,
    ambient: &GradedFreeModule,
    gb: &ModuleGb,
) -> HilbertSeries {
    let mut acc = IntPoly::zero();
    for i in 0..ambient.rank() {
        let comp_lms: Vec<Monomial> = gb
            .elements()
            .iter()
            .filter_map(|v| {
                let (c, _, m) = v.leading()?;
                if c == i {
                    Some(m.clone())
                } else {
                    None
                }
            })
            .collect();
        let mi = MonomialIdeal::new(ring, comp_lms);
        let tw = ambient.twist(i);
        assert!(tw >= 0);
        acc = acc.add(&IntPoly::monomial(tw as usize).mul(&mi.series_numerator()));
    }
    HilbertSeries::new(acc, ring.nvars())
}

/// Hilbert series of the submodule `W` itself: series of the ambient free
/// module minus the series of the quotient.
pub fn submodule_series(ring: &RingRc, ambient: &GradedFreeModule, gb: &ModuleGb) -> HilbertSeries {
    let quot = module_quotient_series(ring, ambient, gb);
    HilbertSeries::new(ambient.series_numerator().sub(&quot.numerator), ring.nvars())
}

/// Homogeneous matrix between graded free modules; entry `(i, j)` is zero or
/// homogeneous of degree `source.twist(j) - target.twist(i)`.
#[derive(Debug, Clone)]
pub struct HomogeneousMatrix {
    ring: RingRc,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    entries: Vec<Vec<Polynomial>>, // target.rank x source.rank
}

impl HomogeneousMatrix {
    pub fn new(
        ring: &RingRc,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<HomogeneousMatrix> {
        if entries.len() != target.rank() || entries.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Input("matrix shape does not match the stated modules".to_string()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !e.is_homogeneous() {
                    return Err(Error::Input(format!("entry ({i}, {j}) is not homogeneous")));
                }
                let want = source.twist(j) - target.twist(i);
                if e.degree().expect("nonzero") as i64 != want {
                    return Err(Error::Input(format!(
                        "entry ({i}, {j}) has degree {} but the twists require {want}",
                        e.degree().unwrap()
                    )));
                }
            }
        }
        Ok(HomogeneousMatrix { ring: ring.clone(), source, target, entries })
    }

    /// Build from homogeneous columns in the target module, deriving the
    /// source twists from the column degrees. Zero columns are rejected.
    pub fn from_columns(
        ring: &RingRc,
        target: &GradedFreeModule,
        cols: &[ModVec],
    ) -> Result<HomogeneousMatrix> {
        let mut twists = Vec::with_capacity(cols.len());
        for c in cols {
            match c.homogeneous_degree(target)? {
                Some(d) => twists.push(d),
                None => return Err(Error::Input("zero column in matrix".to_string())),
            }
        }
        let source = GradedFreeModule::new(twists);
        let entries: Vec<Vec<Polynomial>> = (0..target.rank())
            .map(|i| cols.iter().map(|c| c.comp(i).clone()).collect())
            .collect();
        HomogeneousMatrix::new(ring, source, target.clone(), entries)
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> ModVec {
        let comps = (0..self.rows()).map(|i| self.entries[i][j].clone()).collect();
        ModVec::new(&self.ring, comps)
    }

    pub fn columns(&self) -> Vec<ModVec> {
        (0..self.cols()).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    /// A nonzero scalar entry: exactly what minimality of a graded
    /// presentation rules out.
    pub fn has_unit_entry(&self) -> bool {
        self.entries.iter().any(|r| r.iter().any(|e| e.is_scalar()))
    }

    pub fn constant_matrix(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.constant_term()).collect())
            .collect()
    }

    /// Transpose, with dualized (negated, swapped) twists.
    pub fn transpose(&self) -> HomogeneousMatrix {
        let source = GradedFreeModule::new(self.target.twists().iter().map(|t| -t).collect());
        let target = GradedFreeModule::new(self.source.twists().iter().map(|t| -t).collect());
        let entries: Vec<Vec<Polynomial>> = (0..self.cols())
            .map(|j| (0..self.rows()).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        HomogeneousMatrix { ring: self.ring.clone(), source, target, entries }
    }

    /// Composition `self . right`.
    pub fn multiply(&self, right: &HomogeneousMatrix) -> Result<HomogeneousMatrix> {
        if self.source.rank() != right.target.rank() {
            return Err(Error::Input("matrix composition shape mismatch".to_string()));
        }
        let rows = self.rows();
        let cols = right.cols();
        let mut entries = vec![vec![Polynomial::zero(&self.ring); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols() {
                    acc = acc.add(&self.entries[i][k].mul(right.entry(k, j)));
                }
                entries[i][j] = acc;
            }
        }
        HomogeneousMatrix::new(&self.ring, right.source.clone(), self.target.clone(), entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::PolyRing;

    fn ring2() -> RingRc {
        PolyRing::named(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap()
    }

    fn vecp(r: &RingRc, comps: &[&str]) -> ModVec {
        ModVec::new(r, comps.iter().map(|s| parse_polynomial(r, s).unwrap()).collect())
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring2();
        let cols = vec![vecp(&r, &["x"]), vecp(&r, &["y"])];
        let syz = syzygy_generators(&r, 1, &cols);
        assert_eq!(syz.len(), 1);
        // the syzygy is a scalar multiple of (y, -x) (reduced form is monic)
        let s = &syz[0];
        let combo = cols[0].mul_poly(s.comp(0)).add(&cols[1].mul_poly(s.comp(1)));
        assert!(combo.is_zero());
    }

    #[test]
    fn identity_has_no_syzygies() {
        let r = ring2();
        let cols = vec![vecp(&r, &["1", "0"]), vecp(&r, &["0", "1"])];
        let syz = syzygy_generators(&r, 2, &cols);
        assert!(syz.is_empty());
    }

    #[test]
    fn trimming_removes_redundant_generators() {
        let r = ring2();
        let amb = GradedFreeModule::trivial(1);
        let gens = vec![vecp(&r, &["x"]), vecp(&r, &["y"]), vecp(&r, &["x + y"])];
        let min = minimalize_module_generators(&r, &amb, &gens).unwrap();
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn quotient_series_of_module() {
        let r = ring2();
        let amb = GradedFreeModule::trivial(1);
        let gens = vec![vecp(&r, &["x^2"]), vecp(&r, &["x*y"])];
        let gb = module_buchberger(&r, 1, &gens);
        let s = module_quotient_series(&r, &amb, &gb);
        assert_eq!(s.pole_order, 1);
        assert_eq!(s.multiplicity_value(), 1);
    }

    #[test]
    fn matrix_homogeneity_enforced() {
        let r = ring2();
        let bad = HomogeneousMatrix::new(
            &r,
            GradedFreeModule::new(vec![1]),
            GradedFreeModule::new(vec![0]),
            vec![vec![parse_polynomial(&r, "x^2").unwrap()]],
        );
        assert!(bad.is_err());
        let good = HomogeneousMatrix::new(
            &r,
            GradedFreeModule::new(vec![2]),
            GradedFreeModule::new(vec![0]),
            vec![vec![parse_polynomial(&r, "x^2").unwrap()]],
        );
        assert!(good.is_ok());
    }
}

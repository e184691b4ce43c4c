//! Multivariate polynomials with exact coefficients, and the variable
//! substitutions (linear changes of coordinates, power shifts) used to put
//! ideals into Noether position.
//!
//! A polynomial carries a reference to its ring; operations across distinct
//! rings are rejected, which keeps variable indices honest through
//! eliminations and recursions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg;
use crate::monomial::Monomial;
use crate::ring::RingRc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: RingRc,
    /// Nonzero terms, strictly decreasing under the ring's order.
    terms: Vec<(Scalar, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: &RingRc) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRc) -> Polynomial {
        Polynomial::term(ring, ring.field.one(), Monomial::one(ring.nvars()))
    }

    pub fn scalar(ring: &RingRc, c: Scalar) -> Polynomial {
        Polynomial::term(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn var(ring: &RingRc, i: usize) -> Polynomial {
        Polynomial::term(ring, ring.field.one(), Monomial::var(i, ring.nvars()))
    }

    pub fn monomial(ring: &RingRc, m: Monomial) -> Polynomial {
        Polynomial::term(ring, ring.field.one(), m)
    }

    pub fn term(ring: &RingRc, c: Scalar, m: Monomial) -> Polynomial {
        assert!(ring.field.owns(&c), "scalar does not belong to the ring's field");
        assert_eq!(m.nvars(), ring.nvars(), "monomial width mismatch");
        if ring.field.is_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(c, m)] }
    }

    /// Canonicalize a raw term list: merge like terms, drop zeros, sort
    /// descending under the ring's order.
    pub fn from_terms(ring: &RingRc, raw: Vec<(Scalar, Monomial)>) -> Result<Polynomial> {
        for (c, m) in &raw {
            if !ring.field.owns(c) {
                return Err(Error::Input(
                    "coefficient not representable in the ring's field".to_string(),
                ));
            }
            if m.nvars() != ring.nvars() {
                return Err(Error::Input("monomial has wrong number of variables".to_string()));
            }
        }
        Ok(Polynomial { ring: ring.clone(), terms: canonical(ring, raw) })
    }

    pub fn ring(&self) -> &RingRc {
        &self.ring
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Scalar, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    /// All terms share one total degree. The zero polynomial counts as
    /// homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m0)) => {
                let d = m0.degree();
                self.terms.iter().all(|(_, m)| m.degree() == d)
            }
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> Scalar {
        for (c, tm) in &self.terms {
            if tm == m {
                return c.clone();
            }
        }
        self.ring.field.zero()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff_of(&Monomial::one(self.ring.nvars()))
    }

    /// Nonzero and a single degree-zero term.
    pub fn is_scalar(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    fn assert_same_ring(&self, o: &Polynomial) {
        assert!(self.ring == o.ring, "cross-ring polynomial operation rejected");
    }

    pub fn add(&self, o: &Polynomial) -> Polynomial {
        self.assert_same_ring(o);
        let field = &self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < o.terms.len() {
            match self.ring.cmp_mono(&self.terms[i].1, &o.terms[j].1) {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&self.terms[i].0, &o.terms[j].0);
                    if !field.is_zero(&c) {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let field = &self.ring.field;
        let terms = self.terms.iter().map(|(c, m)| (field.neg(c), m.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, o: &Polynomial) -> Polynomial {
        self.add(&o.neg())
    }

    /// Multiply by the single term `c * m`. Multiplicativity of the order
    /// keeps the term list sorted.
    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        let field = &self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tc, tm)| (field.mul(tc, c), tm.mul(m)))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.nvars()))
    }

    pub fn mul(&self, o: &Polynomial) -> Polynomial {
        self.assert_same_ring(o);
        let field = &self.ring.field;
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ac, am) in &self.terms {
            for (bc, bm) in &o.terms {
                raw.push((field.mul(ac, bc), am.mul(bm)));
            }
        }
        Polynomial { ring: self.ring.clone(), terms: canonical(&self.ring, raw) }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `images[i]` for variable `i`. All images must live in one
    /// ring over the same field; the result lives in that ring.
    pub fn evaluate_at_vars(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = if images.is_empty() { self.ring.clone() } else { images[0].ring().clone() };
        let field = &target.field;
        let mut powers: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut acc = Polynomial::zero(&target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::scalar(&target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e))
                    .clone();
                t = t.mul(&p);
            }
            acc = acc.add(&t);
        }
        let _ = field;
        acc
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables
    /// (with the `v` exponent removed).
    pub fn coefficient_of_var_power(&self, v: usize, k: u32) -> Polynomial {
        let n = self.ring.nvars();
        let raw: Vec<(Scalar, Monomial)> = self
            .terms
            .iter()
            .filter(|(_, m)| m.exp(v) == k)
            .map(|(c, m)| {
                let mut exps = m.exps().to_vec();
                exps[v] = 0;
                (c.clone(), Monomial::from_exps(exps))
            })
            .collect();
        let _ = n;
        Polynomial { ring: self.ring.clone(), terms: canonical(&self.ring, raw) }
    }

    pub fn degree_in_var(&self, v: usize) -> u32 {
        self.terms.iter().map(|(_, m)| m.exp(v)).max().unwrap_or(0)
    }

    pub fn support_in_range(&self, lo: usize, hi: usize) -> bool {
        self.terms.iter().all(|(_, m)| m.support_in_range(lo, hi))
    }

    /// Move this polynomial into `target`, sending variable `i` to variable
    /// `var_map[i]`. Fails when a variable with positive exponent has no
    /// image or the fields differ.
    pub fn map_to_ring(&self, target: &RingRc, var_map: &[Option<usize>]) -> Result<Polynomial> {
        if target.field != self.ring.field {
            return Err(Error::Input("field mismatch in ring map".to_string()));
        }
        assert_eq!(var_map.len(), self.ring.nvars());
        let mut raw = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => exps[j] += e,
                    None => {
                        return Err(Error::Input(format!(
                            "variable `{}` has no image in the target ring",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            raw.push((c.clone(), Monomial::from_exps(exps)));
        }
        Ok(Polynomial { ring: target.clone(), terms: canonical(target, raw) })
    }

    /// Identity-on-names move into a ring with the same variables (e.g. a
    /// different order).
    pub fn with_ring(&self, target: &RingRc) -> Result<Polynomial> {
        if target.var_names() != self.ring.var_names() {
            return Err(Error::Input("variable lists differ".to_string()));
        }
        let map: Vec<Option<usize>> = (0..self.ring.nvars()).map(Some).collect();
        self.map_to_ring(target, &map)
    }
}

fn canonical(ring: &RingRc, mut raw: Vec<(Scalar, Monomial)>) -> Vec<(Scalar, Monomial)> {
    raw.sort_by(|a, b| ring.cmp_mono(&b.1, &a.1));
    let field = &ring.field;
    let mut out: Vec<(Scalar, Monomial)> = Vec::with_capacity(raw.len());
    for (c, m) in raw {
        if let Some(last) = out.last_mut() {
            if last.1 == m {
                last.0 = field.add(&last.0, &c);
                continue;
            }
        }
        out.push((c, m));
    }
    out.retain(|(c, _)| !field.is_zero(c));
    out
}

/// True when the coefficient of `v^deg(f)` in `f` is a nonzero scalar, i.e.
/// `f` viewed as a polynomial in `v` is monic of top total degree.
pub fn is_monic_in(f: &Polynomial, v: usize) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Input("zero polynomial has no monic variable".to_string()));
    }
    let d = f.degree().expect("nonzero");
    Ok(f.terms()
        .iter()
        .any(|(_, m)| m.exp(v) == d && m.degree() == d))
}

/// A ring automorphism of the polynomial ring: an invertible linear change
/// of variables, or the shear `v -> v + u^r` used over small fields.
#[derive(Debug, Clone)]
pub enum Substitution {
    Linear { matrix: Vec<Vec<Scalar>> },
    Power { target: usize, source: usize, exponent: u32 },
}

impl Substitution {
    pub fn identity(ring: &RingRc) -> Substitution {
        let n = ring.nvars();
        let f = &ring.field;
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        Substitution::Linear { matrix }
    }

    /// `matrix[i][j]` is the coefficient of variable `j` in the image of
    /// variable `i`. The matrix must be invertible over the field.
    pub fn linear(ring: &RingRc, matrix: Vec<Vec<Scalar>>) -> Result<Substitution> {
        let n = ring.nvars();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Input("substitution matrix has wrong shape".to_string()));
        }
        for row in &matrix {
            for c in row {
                if !ring.field.owns(c) {
                    return Err(Error::Input("matrix entry not in the ring's field".to_string()));
                }
            }
        }
        if !linalg::is_invertible(&ring.field, &matrix) {
            return Err(Error::Input("substitution matrix is not invertible".to_string()));
        }
        Ok(Substitution::Linear { matrix })
    }

    /// `target -> target + source^exponent`, all other variables fixed.
    pub fn power(ring: &RingRc, target: usize, source: usize, exponent: u32) -> Result<Substitution> {
        let n = ring.nvars();
        if target >= n || source >= n || target == source {
            return Err(Error::Input("bad variable indices in power substitution".to_string()));
        }
        if exponent < 2 {
            return Err(Error::Input("power substitution needs exponent >= 2".to_string()));
        }
        Ok(Substitution::Power { target, source, exponent })
    }

    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let ring = f.ring().clone();
        let n = ring.nvars();
        let images: Vec<Polynomial> = match self {
            Substitution::Linear { matrix } => (0..n)
                .map(|i| {
                    let raw: Vec<(Scalar, Monomial)> = (0..n)
                        .map(|j| (matrix[i][j].clone(), Monomial::var(j, n)))
                        .collect();
                    Polynomial::from_terms(&ring, raw).expect("valid linear image")
                })
                .collect(),
            Substitution::Power { target, source, exponent } => (0..n)
                .map(|i| {
                    if i == *target {
                        Polynomial::var(&ring, i).add(&Polynomial::monomial(
                            &ring,
                            Monomial::var_pow(*source, *exponent, n),
                        ))
                    } else {
                        Polynomial::var(&ring, i)
                    }
                })
                .collect(),
        };
        f.evaluate_at_vars(&images)
    }

    /// The single linear substitution equivalent to applying `self` first
    /// and `later` second, when both are linear.
    pub fn then(&self, later: &Substitution, ring: &RingRc) -> Option<Substitution> {
        let (a, b) = match (self, later) {
            (Substitution::Linear { matrix: a }, Substitution::Linear { matrix: b }) => (a, b),
            _ => return None,
        };
        let n = a.len();
        let f = &ring.field;
        let mut prod = vec![vec![f.zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                let mut acc = f.zero();
                for j in 0..n {
                    acc = f.add(&acc, &f.mul(&a[i][j], &b[j][k]));
                }
                prod[i][k] = acc;
            }
        }
        Some(Substitution::Linear { matrix: prod })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let field = &self.ring.field;
        for (idx, (c, m)) in self.terms.iter().enumerate() {
            let (neg, mag) = field.sign_split(c);
            if idx == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else if neg {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let mono = format_monomial(&self.ring, m);
            match (mag.as_str(), mono.as_deref()) {
                (_, None) => write!(out, "{mag}")?,
                ("1", Some(ms)) => write!(out, "{ms}")?,
                (_, Some(ms)) => write!(out, "{mag}*{ms}")?,
            }
        }
        Ok(())
    }
}

fn format_monomial(ring: &RingRc, m: &Monomial) -> Option<String> {
    if m.is_one() {
        return None;
    }
    let parts: Vec<String> = m
        .exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                ring.var_name(i).to_string()
            } else {
                format!("{}^{}", ring.var_name(i), e)
            }
        })
        .collect();
    Some(parts.join("*"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::ring::PolyRing;

    fn qxy() -> RingRc {
        PolyRing::named(Field::Rationals, &["x", "y"], MonomialOrder::DegRevLex).unwrap()
    }

    #[test]
    fn canonicalize_merges_and_sorts() {
        let r = qxy();
        let x = Monomial::var(0, 2);
        let f = Polynomial::from_terms(
            &r,
            vec![(r.field.one(), x.clone()), (r.field.one(), x.clone())],
        )
        .unwrap();
        assert_eq!(f.to_string(), "2*x");

        let g = Polynomial::from_terms(
            &r,
            vec![(r.field.one(), x.clone()), (r.field.from_i64(-1), x)],
        )
        .unwrap();
        assert!(g.is_zero());

        // x^2 + y sorts with x^2 leading under degrevlex
        let h = parse_polynomial(&r, "y + x^2").unwrap();
        assert_eq!(h.leading_monomial().unwrap(), &Monomial::var_pow(0, 2, 2));
        assert_eq!(h.to_string(), "x^2 + y");
    }

    #[test]
    fn substitution_examples() {
        let r = PolyRing::named(Field::Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let f = parse_polynomial(&r, "x^2 - y*z").unwrap();
        let id = Substitution::identity(&r);
        assert_eq!(id.apply(&f), f);

        // x -> x + y applied to x*y gives x*y + y^2
        let rxy = qxy();
        let xy = parse_polynomial(&rxy, "x*y").unwrap();
        let mut mat = vec![
            vec![rxy.field.one(), rxy.field.one()],
            vec![rxy.field.zero(), rxy.field.one()],
        ];
        mat[1][0] = rxy.field.zero();
        let s = Substitution::linear(&rxy, mat).unwrap();
        let img = s.apply(&xy);
        assert_eq!(img, parse_polynomial(&rxy, "x*y + y^2").unwrap());
        // and the image is monic in y
        assert!(is_monic_in(&img, 1).unwrap());
    }

    #[test]
    fn monic_detection() {
        let r = PolyRing::named(Field::Rationals, &["x", "y", "z"], MonomialOrder::DegRevLex).unwrap();
        let f = parse_polynomial(&r, "x^2 - y*z").unwrap();
        assert!(is_monic_in(&f, 0).unwrap());
        let g = parse_polynomial(&r, "x*y").unwrap();
        assert!(!is_monic_in(&g, 0).unwrap());
        let h = parse_polynomial(&r, "x*y + y^2").unwrap();
        assert!(is_monic_in(&h, 1).unwrap());
        assert!(is_monic_in(&Polynomial::zero(&r), 0).is_err());
    }

    #[test]
    fn singular_matrix_rejected() {
        let r = qxy();
        let mat = vec![
            vec![r.field.one(), r.field.one()],
            vec![r.field.one(), r.field.one()],
        ];
        assert!(Substitution::linear(&r, mat).is_err());
    }
}

//! Monomials as dense exponent vectors, and the monomial orders used by the
//! engine: lex, degrevlex, and block orders for elimination.

use std::cmp::Ordering;

/// Exponent vector with cached total degree.
///
/// The derived `Ord` is an arbitrary container order (exponents, then
/// degree); semantic comparisons go through [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(i: usize, nvars: usize) -> Monomial {
        Monomial::var_pow(i, 1, nvars)
    }

    pub fn var_pow(i: usize, e: u32, nvars: usize) -> Monomial {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn from_exps(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), o.nvars());
        let exps = self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + o.degree }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self.exps.iter().map(|a| a * e).collect();
        Monomial { exps, degree: self.degree * e }
    }

    /// True when `self` divides `o`.
    pub fn divides(&self, o: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), o.nvars());
        self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `self / o`, when `o` divides `self`.
    pub fn try_div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&o.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - o.degree })
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), o.nvars());
        let exps: Vec<u32> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps)
    }

    pub fn degree_in_range(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().sum()
    }

    /// True when every variable with positive exponent lies in `[lo, hi)`.
    pub fn support_in_range(&self, lo: usize, hi: usize) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || (lo <= i && i < hi))
    }

    /// Extract the exponents of `[lo, hi)` as a monomial in `hi - lo` variables.
    pub fn slice_range(&self, lo: usize, hi: usize) -> Monomial {
        Monomial::from_exps(self.exps[lo..hi].to_vec())
    }

    /// Place this monomial into a wider exponent vector at `offset`.
    pub fn embed(&self, offset: usize, width: usize) -> Monomial {
        assert!(offset + self.nvars() <= width);
        let mut exps = vec![0; width];
        exps[offset..offset + self.nvars()].copy_from_slice(&self.exps);
        Monomial { exps, degree: self.degree }
    }

    /// Zero out all exponents outside `[lo, hi)`, keeping the width.
    pub fn restrict_range(&self, lo: usize, hi: usize) -> Monomial {
        let mut exps = vec![0; self.nvars()];
        exps[lo..hi].copy_from_slice(&self.exps[lo..hi]);
        Monomial::from_exps(exps)
    }

    /// `Some((i, e))` when the monomial is a pure power `x_i^e`, `e > 0`.
    pub fn pure_var(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

/// Total multiplicative monomial order with 1 as minimum.
///
/// `Block(k)` compares the first `k` variables by degrevlex and breaks ties
/// by degrevlex on the remaining variables; it is an elimination order for
/// the first `k` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let n = a.nvars();
        match self {
            MonomialOrder::Lex => lex_range(a, b, 0, n),
            MonomialOrder::DegRevLex => degrevlex_range(a, b, 0, n),
            MonomialOrder::Block(k) => {
                degrevlex_range(a, b, 0, *k).then_with(|| degrevlex_range(a, b, *k, n))
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".to_string(),
            MonomialOrder::DegRevLex => "degrevlex".to_string(),
            MonomialOrder::Block(k) => format!("block {k}"),
        }
    }
}

fn lex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    for i in lo..hi {
        if a.exp(i) != b.exp(i) {
            return a.exp(i).cmp(&b.exp(i));
        }
    }
    Ordering::Equal
}

fn degrevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da = a.degree_in_range(lo, hi);
    let db = b.degree_in_range(lo, hi);
    if da != db {
        return da.cmp(&db);
    }
    // equal degree: greater = smaller exponent at the last differing variable
    for i in (lo..hi).rev() {
        if a.exp(i) != b.exp(i) {
            return b.exp(i).cmp(&a.exp(i));
        }
    }
    Ordering::Equal
}

/// All monomials of total degree `d` in `nvars` variables, in a fixed
/// deterministic order.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, i: usize, rem: u32) {
    let n = cur.len();
    if n == 0 {
        if rem == 0 {
            out.push(Monomial::one(0));
        }
        return;
    }
    if i == n - 1 {
        cur[i] = rem;
        out.push(Monomial::from_exps(cur.clone()));
        cur[i] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, rem - e);
    }
    cur[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_prefers_early_variables() {
        let o = MonomialOrder::DegRevLex;
        // x > y in k[x, y]
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        // x^2 > x y > y^2
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        // degree dominates
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
    }

    #[test]
    fn degrevlex_twisted_cubic_leading_terms() {
        // under degrevlex x>y>z>w: y^2 > xz, yz > xw, z^2 > yw
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[0, 2, 0, 0]), &m(&[1, 0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 1, 0]), &m(&[1, 0, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2, 0]), &m(&[0, 1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_prefix() {
        let o = MonomialOrder::Block(1);
        // any monomial containing x beats any x-free monomial of huge degree
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        // ties broken by degrevlex on the tail
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 0, 2])), Ordering::Greater);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 2).len(), 0);
    }
}

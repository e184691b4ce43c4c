//! Polynomial rings: a coefficient field, an ordered list of named
//! variables, and a monomial order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

pub type RingRc = Arc<PolyRing>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub field: Field,
    vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<RingRc> {
        let mut seen = BTreeSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::Input("empty variable name".to_string()));
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Input(format!("duplicate variable name `{v}`")));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k > vars.len() {
                return Err(Error::Input(format!(
                    "block size {k} exceeds variable count {}",
                    vars.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    /// Convenience constructor from string slices.
    pub fn named(field: Field, vars: &[&str], order: MonomialOrder) -> Result<RingRc> {
        PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect(), order)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Same ring with a different monomial order.
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Result<RingRc> {
        PolyRing::new(self.field.clone(), self.vars.clone(), order)
    }

    /// The ring on the final segment of variables starting at `start`,
    /// under degrevlex.
    pub fn suffix_ring(self: &Arc<Self>, start: usize) -> Result<RingRc> {
        if start > self.nvars() {
            return Err(Error::Input("suffix start past end of variable list".to_string()));
        }
        PolyRing::new(
            self.field.clone(),
            self.vars[start..].to_vec(),
            MonomialOrder::DegRevLex,
        )
    }
}

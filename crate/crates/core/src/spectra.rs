//! Element orders, the order spectrum, order-class sizes S_n, the same-order
//! type α(G), the exponent, and counts of solutions of x^n = 1.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::Result;
use crate::group::FiniteGroup;

/// Map from element order n to S_n, the number of elements of order n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderClassMap {
    entries: BTreeMap<u64, u64>,
}

impl OrderClassMap {
    pub fn entries(&self) -> &BTreeMap<u64, u64> {
        &self.entries
    }

    /// S_n; 0 when no element has order n.
    pub fn get(&self, n: u64) -> u64 {
        self.entries.get(&n).copied().unwrap_or(0)
    }

    /// The order spectrum π_e(G): orders that actually occur, ascending.
    pub fn spectrum(&self) -> Vec<u64> {
        self.entries.keys().copied().collect()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn alpha(&self) -> AlphaType {
        AlphaType {
            sizes: self.entries.values().copied().collect(),
        }
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        self.entries.keys().fold(1, |acc, &n| arith::lcm(acc, n))
    }

    /// #{x : x^n = 1} = Σ_{d | n} S_d.
    pub fn nth_roots_of_identity(&self, n: u64) -> u64 {
        arith::divisors(n).into_iter().map(|d| self.get(d)).sum()
    }
}

/// The same-order type α(G): the deduplicated set of order-class sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaType {
    sizes: BTreeSet<u64>,
}

impl AlphaType {
    pub fn sizes(&self) -> &BTreeSet<u64> {
        &self.sizes
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn from_sizes(sizes: impl IntoIterator<Item = u64>) -> Self {
        AlphaType {
            sizes: sizes.into_iter().collect(),
        }
    }
}

/// Least k >= 1 with x^k = identity, by iterated multiplication.
pub fn element_order(g: &FiniteGroup, i: usize) -> Result<u64> {
    g.check_index(i)?;
    let mut x = i;
    let mut k = 1u64;
    while x != FiniteGroup::IDENTITY {
        x = g.mul(x, i);
        k += 1;
    }
    Ok(k)
}

pub fn order_class_map(g: &FiniteGroup) -> OrderClassMap {
    let mut entries: BTreeMap<u64, u64> = BTreeMap::new();
    for i in 0..g.size() {
        let o = element_order(g, i).expect("index in range");
        *entries.entry(o).or_insert(0) += 1;
    }
    OrderClassMap { entries }
}

pub fn same_order_type(g: &FiniteGroup) -> AlphaType {
    order_class_map(g).alpha()
}

pub fn exponent(g: &FiniteGroup) -> u64 {
    order_class_map(g).exponent()
}

/// X_n: the set of element indices of order exactly n.
pub fn elements_of_order(g: &FiniteGroup, n: u64) -> Vec<usize> {
    (0..g.size())
        .filter(|&i| element_order(g, i).expect("index in range") == n)
        .collect()
}

pub fn count_nth_roots_of_identity(g: &FiniteGroup, n: u64) -> u64 {
    assert!(n >= 1);
    order_class_map(g).nth_roots_of_identity(n)
}

pub use crate::arith::totient;

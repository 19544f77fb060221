//! Finite groups as element-indexed multiplication tables.
//!
//! The table is the canonical representation; permutation generators, Cayley
//! tables, named families, products and quotients are all ingestion routes
//! that end up here. Index 0 is always the identity.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Resource limits for construction and lattice work.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Hard cap on group order for construction and spectra.
    pub max_elements: usize,
    /// Hard cap on group order for subgroup-lattice enumeration.
    pub max_lattice_order: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elements: 20_000,
            max_lattice_order: 2_000,
        }
    }
}

/// Orders up to this are validated with the exhaustive O(n^3) associativity
/// scan; above it we sample random triples.
const EXHAUSTIVE_ASSOC_BOUND: usize = 2_048;
const SAMPLED_ASSOC_TRIPLES: usize = 1_000_000;

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    size: usize,
    /// Row-major size x size table; entry (i, j) is the index of i·j.
    mul: Vec<u32>,
    inverse: Vec<u32>,
    element_labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn trivial() -> Self {
        FiniteGroup {
            size: 1,
            mul: vec![0],
            inverse: vec![0],
            element_labels: None,
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.size + j] as usize
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Conjugate x^g = g·x·g⁻¹.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// Commutator [x, y] = x⁻¹·y⁻¹·x·y.
    #[inline]
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.element_labels.as_ref().map(|l| l[i].as_str())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.size {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index: i,
                order: self.size,
            })
        }
    }

    /// Closure of `gens` under composition, breadth-first from the identity,
    /// generators applied in input order. Deterministic index assignment.
    pub fn from_permutations(
        degree: usize,
        gens: &[Permutation],
        bounds: &Bounds,
    ) -> Result<FiniteGroup> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::MalformedPermutation(format!(
                    "generator {g} has degree {} but expected {degree}",
                    g.degree()
                )));
            }
        }

        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);

        let mut next = 0;
        while next < elements.len() {
            let current = elements[next].clone();
            for g in gens {
                let product = current.compose(g);
                if !index.contains_key(&product) {
                    if elements.len() >= bounds.max_elements {
                        return Err(GroupError::BoundExceeded {
                            bound: bounds.max_elements,
                        });
                    }
                    index.insert(product.clone(), elements.len() as u32);
                    elements.push(product);
                }
            }
            next += 1;
        }

        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = index[&elements[i].compose(&elements[j])];
            }
        }
        let labels = elements.iter().map(|p| p.to_string()).collect();
        let mut group = FiniteGroup {
            size: n,
            mul,
            inverse: Vec::new(),
            element_labels: Some(labels),
        };
        group.inverse = group.derive_inverses()?;
        Ok(group)
    }

    /// Validate a raw Cayley table (0-based, identity at index 0) and wrap it.
    pub fn from_cayley_table(table: Vec<Vec<usize>>, bounds: &Bounds) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::AxiomViolation {
                law: "nonempty",
                i: 0,
                j: 0,
                k: 0,
            });
        }
        if n > bounds.max_elements {
            return Err(GroupError::BoundExceeded {
                bound: bounds.max_elements,
            });
        }
        let mut mul = vec![0u32; n * n];
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Parse {
                    line: i + 1,
                    message: format!("table row {i} has {} entries, expected {n}", row.len()),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::Parse {
                        line: i + 1,
                        message: format!("table entry ({i}, {j}) = {v} out of range 0..{n}"),
                    });
                }
                mul[i * n + j] = v as u32;
            }
        }
        let mut group = FiniteGroup {
            size: n,
            mul,
            inverse: Vec::new(),
            element_labels: None,
        };
        group.check_axioms_except_inverse()?;
        group.inverse = group.derive_inverses()?;
        Ok(group)
    }

    fn derive_inverses(&self) -> Result<Vec<u32>> {
        let n = self.size;
        let mut inv = vec![u32::MAX; n];
        for i in 0..n {
            for j in 0..n {
                if self.mul(i, j) == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
            if inv[i] == u32::MAX {
                return Err(GroupError::AxiomViolation {
                    law: "inverse",
                    i,
                    j: 0,
                    k: 0,
                });
            }
        }
        Ok(inv)
    }

    fn check_axioms_except_inverse(&self) -> Result<()> {
        let n = self.size;
        // identity law: row 0 and column 0
        for j in 0..n {
            if self.mul(0, j) != j {
                return Err(GroupError::AxiomViolation {
                    law: "identity",
                    i: 0,
                    j,
                    k: 0,
                });
            }
            if self.mul(j, 0) != j {
                return Err(GroupError::AxiomViolation {
                    law: "identity",
                    i: j,
                    j: 0,
                    k: 0,
                });
            }
        }
        // latin square: every row and column is a permutation
        let mut seen = vec![false; n];
        for i in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..n {
                let v = self.mul(i, j);
                if seen[v] {
                    return Err(GroupError::AxiomViolation {
                        law: "row-permutation",
                        i,
                        j,
                        k: 0,
                    });
                }
                seen[v] = true;
            }
        }
        for j in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..n {
                let v = self.mul(i, j);
                if seen[v] {
                    return Err(GroupError::AxiomViolation {
                        law: "column-permutation",
                        i,
                        j,
                        k: 0,
                    });
                }
                seen[v] = true;
            }
        }
        self.check_associativity()
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.size;
        if n <= EXHAUSTIVE_ASSOC_BOUND {
            for i in 0..n {
                for j in 0..n {
                    let ij = self.mul(i, j);
                    for k in 0..n {
                        if self.mul(ij, k) != self.mul(i, self.mul(j, k)) {
                            return Err(GroupError::AxiomViolation {
                                law: "associativity",
                                i,
                                j,
                                k,
                            });
                        }
                    }
                }
            }
        } else {
            // fixed seed keeps validation reproducible
            let mut rng = StdRng::seed_from_u64(0x5a3e_0ade);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                let k = rng.gen_range(0..n);
                if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                    return Err(GroupError::AxiomViolation {
                        law: "associativity",
                        i,
                        j,
                        k,
                    });
                }
            }
        }
        Ok(())
    }

    /// Full axiom validation (identity, latin square, associativity, inverses).
    pub fn check_axioms(&self) -> Result<()> {
        self.check_axioms_except_inverse()?;
        for i in 0..self.size {
            if self.mul(i, self.inv(i)) != 0 {
                return Err(GroupError::AxiomViolation {
                    law: "inverse",
                    i,
                    j: self.inv(i),
                    k: 0,
                });
            }
        }
        Ok(())
    }

    /// Internal constructor for tables known associative by construction
    /// (products, quotients, named families defined by formula).
    pub(crate) fn from_table_unchecked(
        mul: Vec<u32>,
        size: usize,
        element_labels: Option<Vec<String>>,
    ) -> Result<FiniteGroup> {
        debug_assert_eq!(mul.len(), size * size);
        let mut group = FiniteGroup {
            size,
            mul,
            inverse: Vec::new(),
            element_labels,
        };
        group.inverse = group.derive_inverses()?;
        Ok(group)
    }

    /// Componentwise direct product; index of (x, y) is x·|b| + y.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, bounds: &Bounds) -> Result<FiniteGroup> {
        let n = a.size.checked_mul(b.size).unwrap_or(usize::MAX);
        if n > bounds.max_elements {
            return Err(GroupError::BoundExceeded {
                bound: bounds.max_elements,
            });
        }
        let nb = b.size;
        let mut mul = vec![0u32; n * n];
        for x1 in 0..a.size {
            for y1 in 0..nb {
                let i = x1 * nb + y1;
                for x2 in 0..a.size {
                    for y2 in 0..nb {
                        let j = x2 * nb + y2;
                        mul[i * n + j] = (a.mul(x1, x2) * nb + b.mul(y1, y2)) as u32;
                    }
                }
            }
        }
        FiniteGroup::from_table_unchecked(mul, n, None)
    }

    /// Quotient by a verified-normal subgroup; coset of the identity is
    /// index 0, remaining cosets numbered by first appearance in element order.
    pub fn quotient(&self, n: &Subgroup) -> Result<FiniteGroup> {
        Ok(self.quotient_with_map(n)?.0)
    }

    /// Quotient plus the element → coset-index map.
    pub fn quotient_with_map(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        if !n.is_normal_in(self) {
            return Err(GroupError::NotNormal {
                subgroup: n.len(),
                order: self.size,
            });
        }
        let size = self.size / n.len();
        let mut coset_of = vec![usize::MAX; self.size];
        let mut reps = Vec::with_capacity(size);
        for x in 0..self.size {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &h in n.members() {
                coset_of[self.mul(x, h)] = c;
            }
        }
        debug_assert_eq!(reps.len(), size);
        let mut mul = vec![0u32; size * size];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                mul[i * size + j] = coset_of[self.mul(ri, rj)] as u32;
            }
        }
        Ok((
            FiniteGroup::from_table_unchecked(mul, size, None)?,
            coset_of,
        ))
    }
}

/// A subgroup as a sorted set of element indices of a parent group.
/// Always contains index 0 and is closed under the parent's product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            members: (0..g.size()).collect(),
        }
    }

    /// Wrap a member set after checking closure (a finite subset closed under
    /// the product is automatically a subgroup).
    pub fn from_members(g: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&0) {
            return Err(GroupError::NotASubgroup {
                size: members.len(),
            });
        }
        let sub = Subgroup { members };
        if !sub.is_closed(g) {
            return Err(GroupError::NotASubgroup { size: sub.len() });
        }
        Ok(sub)
    }

    /// Subgroup generated by `seed`: closure under the product.
    pub fn generated(g: &FiniteGroup, seed: &[usize]) -> Self {
        let mut member = vec![false; g.size()];
        let mut list = vec![0usize];
        member[0] = true;
        for &s in seed {
            if !member[s] {
                member[s] = true;
                list.push(s);
            }
        }
        let mut next = 0;
        while next < list.len() {
            let a = list[next];
            let mut j = 0;
            while j < list.len() {
                let b = list[j];
                for p in [g.mul(a, b), g.mul(b, a)] {
                    if !member[p] {
                        member[p] = true;
                        list.push(p);
                    }
                }
                j += 1;
            }
            next += 1;
        }
        list.sort_unstable();
        Subgroup { members: list }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains the identity
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_closed(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| self.contains(g.mul(a, b))))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        (0..g.size()).all(|x| self.members.iter().all(|&h| self.contains(g.conj(h, x))))
    }

    /// Conjugate subgroup x·H·x⁻¹ as a sorted member vector.
    pub fn conjugated_by(&self, g: &FiniteGroup, x: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.members.iter().map(|&h| g.conj(h, x)).collect();
        v.sort_unstable();
        v
    }

    /// Re-index the subgroup as a standalone group. Index 0 stays the
    /// identity; remaining members keep their parent-relative order, so the
    /// order-class map is preserved.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let n = self.members.len();
        let mut pos = vec![usize::MAX; g.size()];
        for (k, &m) in self.members.iter().enumerate() {
            pos[m] = k;
        }
        let mut mul = vec![0u32; n * n];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                mul[i * n + j] = pos[g.mul(a, b)] as u32;
            }
        }
        let labels = self
            .members
            .iter()
            .map(|&m| match g.label(m) {
                Some(l) => l.to_string(),
                None => m.to_string(),
            })
            .collect();
        FiniteGroup::from_table_unchecked(mul, n, Some(labels))
            .expect("closed member set always yields a group")
    }
}

//! Structural machinery: prime sets, centralizers, normality, Sylow
//! subgroups, nilpotency and solvability tests, and full subgroup-lattice
//! enumeration by fixpoint extension.

use std::collections::HashSet;

use crate::arith;
use crate::error::{GroupError, Result};
use crate::group::{Bounds, FiniteGroup, Subgroup};
use crate::spectra;

/// π(G): primes dividing |G|, ascending. Empty for the trivial group.
pub fn prime_divisors(g: &FiniteGroup) -> Vec<u64> {
    arith::prime_divisors_of(g.size() as u64)
}

/// Centralizer of the element at index i.
pub fn centralizer(g: &FiniteGroup, i: usize) -> Result<Subgroup> {
    g.check_index(i)?;
    let members: Vec<usize> = (0..g.size())
        .filter(|&x| g.mul(x, i) == g.mul(i, x))
        .collect();
    // the centralizer is closed, so from_members cannot fail
    Subgroup::from_members(g, members)
}

/// Normalizer N_G(H) = {x : x·H·x⁻¹ = H}.
pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.size())
        .filter(|&x| h.members().iter().all(|&m| h.contains(g.conj(m, x))))
        .collect();
    Subgroup::from_members(g, members).expect("normalizer is a subgroup")
}

pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    h.is_normal_in(g)
}

/// A Sylow p-subgroup, built by climbing: start from a p-element of maximal
/// order and repeatedly extend by a p-element of the current normalizer.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Result<Subgroup> {
    let n = g.size() as u64;
    if !arith::is_prime(p) || n % p != 0 {
        return Err(GroupError::NotAPrimeDivisor { p, order: g.size() });
    }
    let target = arith::p_part(n, p);

    let orders: Vec<u64> = (0..g.size())
        .map(|i| spectra::element_order(g, i).expect("index in range"))
        .collect();
    let is_p_power = |o: u64| arith::p_part(o, p) == o;

    // Cauchy guarantees a p-element exists
    let seed = (0..g.size())
        .filter(|&i| is_p_power(orders[i]) && orders[i] > 1)
        .max_by_key(|&i| orders[i])
        .expect("p divides |G|, so a p-element exists");
    let mut current = Subgroup::generated(g, &[seed]);

    while (current.len() as u64) < target {
        let norm = normalizer(g, &current);
        let ext = norm
            .members()
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && is_p_power(orders[x]))
            .expect("normalizer of a proper p-subgroup grows it");
        let mut seed: Vec<usize> = current.members().to_vec();
        seed.push(ext);
        current = Subgroup::generated(g, &seed);
    }
    debug_assert_eq!(current.len() as u64, target);
    Ok(current)
}

/// Nilpotency via closure of p-elements: G is nilpotent iff for every prime
/// p | |G| the set of p-power-order elements is closed under the product
/// (equivalently the Sylow p-subgroup is normal).
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    let orders: Vec<u64> = (0..g.size())
        .map(|i| spectra::element_order(g, i).expect("index in range"))
        .collect();
    for p in prime_divisors(g) {
        let set: Vec<usize> = (0..g.size())
            .filter(|&i| arith::p_part(orders[i], p) == orders[i])
            .collect();
        let mut member = vec![false; g.size()];
        for &i in &set {
            member[i] = true;
        }
        for &a in &set {
            for &b in &set {
                if !member[g.mul(a, b)] {
                    return false;
                }
            }
        }
    }
    true
}

/// Commutator subgroup of a subgroup: closure of all commutators [x, y] over
/// pairs of its members.
pub fn commutator_subgroup(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut comms = HashSet::new();
    for &x in h.members() {
        for &y in h.members() {
            comms.insert(g.commutator(x, y));
        }
    }
    let mut seed: Vec<usize> = comms.into_iter().collect();
    seed.sort_unstable();
    Subgroup::generated(g, &seed)
}

/// Solvability: the derived series reaches the trivial subgroup.
pub fn is_solvable(g: &FiniteGroup) -> bool {
    let mut current = Subgroup::whole(g);
    loop {
        let derived = commutator_subgroup(g, &current);
        if derived.len() == 1 {
            return true;
        }
        if derived.len() == current.len() {
            return false;
        }
        current = derived;
    }
}

/// The full subgroup lattice, deduplicated and sorted by (size, member set).
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    subgroups: Vec<Subgroup>,
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Proper nontrivial subgroups, ascending by size.
    pub fn proper_nontrivial<'a>(
        &'a self,
        g: &'a FiniteGroup,
    ) -> impl Iterator<Item = &'a Subgroup> {
        self.subgroups
            .iter()
            .filter(move |h| h.len() > 1 && h.len() < g.size())
    }

    /// All proper subgroups (including the trivial one).
    pub fn proper<'a>(&'a self, g: &'a FiniteGroup) -> impl Iterator<Item = &'a Subgroup> {
        self.subgroups.iter().filter(move |h| h.len() < g.size())
    }
}

/// Enumerate every subgroup by fixpoint extension: seed with all cyclic
/// subgroups, then repeatedly adjoin one element to each known subgroup and
/// close, until nothing new appears.
pub fn all_subgroups(g: &FiniteGroup, bounds: &Bounds) -> Result<SubgroupLattice> {
    if g.size() > bounds.max_lattice_order {
        return Err(GroupError::LatticeBoundExceeded {
            order: g.size(),
            bound: bounds.max_lattice_order,
        });
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut all: Vec<Subgroup> = Vec::new();
    let mut frontier: Vec<Subgroup> = Vec::new();

    let mut push = |sub: Subgroup, all: &mut Vec<Subgroup>, frontier: &mut Vec<Subgroup>| {
        if seen.insert(sub.members().to_vec()) {
            all.push(sub.clone());
            frontier.push(sub);
        }
    };

    push(Subgroup::trivial(), &mut all, &mut frontier);
    for x in 1..g.size() {
        push(Subgroup::generated(g, &[x]), &mut all, &mut frontier);
    }

    while let Some(sub) = frontier.pop() {
        if sub.len() == g.size() {
            continue;
        }
        for x in 1..g.size() {
            if sub.contains(x) {
                continue;
            }
            let mut seed: Vec<usize> = sub.members().to_vec();
            seed.push(x);
            push(Subgroup::generated(g, &seed), &mut all, &mut frontier);
        }
    }

    all.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    Ok(SubgroupLattice { subgroups: all })
}

/// Re-index a subgroup as a standalone group (see `Subgroup::as_group`).
pub fn subgroup_as_group(g: &FiniteGroup, h: &Subgroup) -> FiniteGroup {
    h.as_group(g)
}

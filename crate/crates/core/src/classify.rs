//! Classification predicates: Y_t membership, minimal non-Y_2, Schmidt
//! groups, Frobenius groups (via malnormal complements), and 2-Frobenius
//! groups.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::Result;
use crate::group::{Bounds, FiniteGroup, Subgroup};
use crate::spectra;
use crate::structure::{self, SubgroupLattice};

/// Witness that G is Frobenius: a malnormal complement H and the kernel K
/// rebuilt from scratch and re-verified as a normal subgroup.
#[derive(Debug, Clone)]
pub struct FrobeniusWitness {
    pub complement: Subgroup,
    pub kernel: Subgroup,
    pub verified_kernel_is_subgroup: bool,
}

/// Witness that G is 2-Frobenius: normal subgroups K < L with L Frobenius
/// with kernel K and G/K Frobenius with kernel L/K.
#[derive(Debug, Clone)]
pub struct TwoFrobeniusWitness {
    pub inner_kernel: Subgroup,
    pub middle: Subgroup,
}

/// Membership in Y_t: |α(G)| <= t.
pub fn in_y_t(g: &FiniteGroup, t: usize) -> bool {
    spectra::same_order_type(g).len() <= t
}

/// Minimal non-Y_2: |α(G)| > 2 while every proper subgroup H has |α(H)| <= 2.
pub fn is_minimal_non_y2(g: &FiniteGroup, bounds: &Bounds) -> Result<bool> {
    if spectra::same_order_type(g).len() <= 2 {
        return Ok(false);
    }
    let lattice = structure::all_subgroups(g, bounds)?;
    Ok(is_minimal_non_y2_with_lattice(g, &lattice))
}

pub fn is_minimal_non_y2_with_lattice(g: &FiniteGroup, lattice: &SubgroupLattice) -> bool {
    if spectra::same_order_type(g).len() <= 2 {
        return false;
    }
    // scan largest subgroups first: a big proper subgroup is the likeliest
    // to break the |alpha| <= 2 condition
    let mut proper: Vec<&Subgroup> = lattice.proper(g).collect();
    proper.sort_by_key(|h| std::cmp::Reverse(h.len()));
    proper
        .into_iter()
        .all(|h| spectra::same_order_type(&h.as_group(g)).len() <= 2)
}

/// Schmidt group: non-nilpotent with every proper subgroup nilpotent.
pub fn is_schmidt(g: &FiniteGroup, bounds: &Bounds) -> Result<bool> {
    if structure::is_nilpotent(g) {
        return Ok(false);
    }
    let lattice = structure::all_subgroups(g, bounds)?;
    let all_proper_nilpotent = lattice
        .proper(g)
        .all(|h| structure::is_nilpotent(&h.as_group(g)));
    Ok(all_proper_nilpotent)
}

/// Is H malnormal in G: H ∩ H^x = {1} for every x outside H.
fn is_malnormal(g: &FiniteGroup, h: &Subgroup) -> bool {
    for x in 0..g.size() {
        if h.contains(x) {
            continue;
        }
        let conj = h.conjugated_by(g, x);
        let shared = conj.iter().filter(|&&m| h.contains(m)).count();
        if shared > 1 {
            return false;
        }
    }
    true
}

/// Kernel candidate for complement H: the identity together with every
/// element lying in no conjugate of H.
fn kernel_candidate(g: &FiniteGroup, h: &Subgroup) -> Vec<usize> {
    let mut covered = vec![false; g.size()];
    for x in 0..g.size() {
        for m in h.conjugated_by(g, x) {
            if m != FiniteGroup::IDENTITY {
                covered[m] = true;
            }
        }
    }
    (0..g.size()).filter(|&i| !covered[i]).collect()
}

/// Search for a Frobenius witness, smallest complement first. The kernel is
/// re-verified (closed, normal, order [G:H], trivial intersection with H)
/// instead of assumed from Frobenius's theorem.
pub fn frobenius_witness(g: &FiniteGroup, bounds: &Bounds) -> Result<Option<FrobeniusWitness>> {
    let lattice = structure::all_subgroups(g, bounds)?;
    Ok(frobenius_witness_with_lattice(g, &lattice))
}

pub fn frobenius_witness_with_lattice(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
) -> Option<FrobeniusWitness> {
    for h in lattice.proper_nontrivial(g) {
        if !is_malnormal(g, h) {
            continue;
        }
        let members = kernel_candidate(g, h);
        let expected = g.size() / h.len();
        let kernel = match Subgroup::from_members(g, members.clone()) {
            Ok(k) => k,
            Err(_) => {
                return Some(FrobeniusWitness {
                    complement: h.clone(),
                    kernel: Subgroup::trivial(),
                    verified_kernel_is_subgroup: false,
                });
            }
        };
        let verified = kernel.len() == expected
            && kernel.is_normal_in(g)
            && kernel.members().iter().filter(|&&m| h.contains(m)).count() == 1;
        return Some(FrobeniusWitness {
            complement: h.clone(),
            kernel,
            verified_kernel_is_subgroup: verified,
        });
    }
    None
}

/// Does `group` admit a Frobenius structure whose kernel is exactly `kernel`?
fn is_frobenius_with_kernel(group: &FiniteGroup, kernel: &[usize], bounds: &Bounds) -> Result<bool> {
    let lattice = structure::all_subgroups(group, bounds)?;
    for h in lattice.proper_nontrivial(group) {
        if h.len() * kernel.len() != group.size() {
            continue;
        }
        if !is_malnormal(group, h) {
            continue;
        }
        if kernel_candidate(group, h) == kernel {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Search for a 2-Frobenius witness: normal K < L with L Frobenius with
/// kernel K and G/K Frobenius with kernel L/K. Deterministic scan order.
pub fn two_frobenius_witness(
    g: &FiniteGroup,
    bounds: &Bounds,
) -> Result<Option<TwoFrobeniusWitness>> {
    let lattice = structure::all_subgroups(g, bounds)?;
    two_frobenius_witness_with_lattice(g, &lattice, bounds)
}

pub fn two_frobenius_witness_with_lattice(
    g: &FiniteGroup,
    lattice: &SubgroupLattice,
    bounds: &Bounds,
) -> Result<Option<TwoFrobeniusWitness>> {
    let normals: Vec<&Subgroup> = lattice
        .proper_nontrivial(g)
        .filter(|h| h.is_normal_in(g))
        .collect();
    for k in &normals {
        for l in &normals {
            if l.len() <= k.len() || !k.members().iter().all(|&m| l.contains(m)) {
                continue;
            }
            // L as a group, with K mapped into its indexing
            let l_group = l.as_group(g);
            let mut pos = BTreeMap::new();
            for (idx, &m) in l.members().iter().enumerate() {
                pos.insert(m, idx);
            }
            let k_in_l: Vec<usize> = k.members().iter().map(|m| pos[m]).collect();
            if !is_frobenius_with_kernel(&l_group, &k_in_l, bounds)? {
                continue;
            }
            // G/K, with L/K as the target kernel
            let k_sub = (*k).clone();
            let (quot, coset_of) = g.quotient_with_map(&k_sub)?;
            let mut l_image: Vec<usize> = l.members().iter().map(|&m| coset_of[m]).collect();
            l_image.sort_unstable();
            l_image.dedup();
            if is_frobenius_with_kernel(&quot, &l_image, bounds)? {
                return Ok(Some(TwoFrobeniusWitness {
                    inner_kernel: (*k).clone(),
                    middle: (*l).clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Structural flags of a classification report. Lattice-dependent flags are
/// None when the lattice was not enumerated (order above the lattice bound).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationFlags {
    pub nilpotent: bool,
    pub solvable: bool,
    pub y1: bool,
    pub y2: bool,
    pub minimal_non_y2: Option<bool>,
    pub schmidt: Option<bool>,
    pub frobenius: Option<bool>,
    pub two_frobenius: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<FrobeniusWitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_frobenius: Option<TwoFrobeniusWitnessReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FrobeniusWitnessReport {
    pub complement: Vec<usize>,
    pub kernel: Vec<usize>,
    pub verified_kernel_is_subgroup: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TwoFrobeniusWitnessReport {
    pub inner_kernel: Vec<usize>,
    pub middle: Vec<usize>,
}

/// Per-group record emitted by sweeps and the `classify` command.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationReport {
    pub group_id: String,
    pub order: usize,
    pub pi: Vec<u64>,
    pub order_classes: BTreeMap<u64, u64>,
    pub alpha: Vec<u64>,
    pub flags: ClassificationFlags,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessReport>,
}

/// Classify a group. When `with_lattice` is set and the order is within the
/// lattice bound, the lattice-dependent flags and witnesses are filled in.
pub fn classify(
    g: &FiniteGroup,
    group_id: &str,
    bounds: &Bounds,
    with_lattice: bool,
) -> Result<ClassificationReport> {
    let ocm = spectra::order_class_map(g);
    let alpha = ocm.alpha();
    let mut flags = ClassificationFlags {
        nilpotent: structure::is_nilpotent(g),
        solvable: structure::is_solvable(g),
        y1: alpha.len() <= 1,
        y2: alpha.len() <= 2,
        minimal_non_y2: None,
        schmidt: None,
        frobenius: None,
        two_frobenius: None,
    };
    let mut witness = None;

    if with_lattice && g.size() <= bounds.max_lattice_order {
        if flags.nilpotent {
            // a nontrivial nilpotent group has a nontrivial center, which
            // rules out a malnormal complement, so neither Frobenius
            // structure can occur and no lattice scan is needed for them
            flags.schmidt = Some(false);
            flags.frobenius = Some(false);
            flags.two_frobenius = Some(false);
            flags.minimal_non_y2 = if alpha.len() <= 2 {
                Some(false)
            } else {
                let lattice = structure::all_subgroups(g, bounds)?;
                Some(is_minimal_non_y2_with_lattice(g, &lattice))
            };
        } else {
            let lattice = structure::all_subgroups(g, bounds)?;
            flags.minimal_non_y2 = Some(is_minimal_non_y2_with_lattice(g, &lattice));
            flags.schmidt = Some(
                lattice
                    .proper(g)
                    .all(|h| structure::is_nilpotent(&h.as_group(g))),
            );
            let frob = frobenius_witness_with_lattice(g, &lattice);
            flags.frobenius = Some(
                frob.as_ref()
                    .is_some_and(|w| w.verified_kernel_is_subgroup),
            );
            let two = two_frobenius_witness_with_lattice(g, &lattice, bounds)?;
            flags.two_frobenius = Some(two.is_some());
            if frob.is_some() || two.is_some() {
                witness = Some(WitnessReport {
                    frobenius: frob.map(|w| FrobeniusWitnessReport {
                        complement: w.complement.members().to_vec(),
                        kernel: w.kernel.members().to_vec(),
                        verified_kernel_is_subgroup: w.verified_kernel_is_subgroup,
                    }),
                    two_frobenius: two.map(|w| TwoFrobeniusWitnessReport {
                        inner_kernel: w.inner_kernel.members().to_vec(),
                        middle: w.middle.members().to_vec(),
                    }),
                });
            }
        }
    }

    Ok(ClassificationReport {
        group_id: group_id.to_string(),
        order: g.size(),
        pi: structure::prime_divisors(g),
        order_classes: ocm.entries().clone(),
        alpha: alpha.sizes().iter().copied().collect(),
        flags,
        witness,
    })
}

/// True when no element order is divisible by two distinct primes.
pub fn has_no_order_pq_element(ocm: &spectra::OrderClassMap) -> bool {
    ocm.spectrum().iter().all(|&n| arith::is_prime_power(n))
}

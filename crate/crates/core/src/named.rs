//! Named group families: cyclic, abelian products, dihedral, dicyclic and
//! generalized quaternion, symmetric, alternating, elementary abelian, and
//! the semidirect products Z_p ⋊ Z_q.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{GroupError, Result};
use crate::group::{Bounds, FiniteGroup};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Dicyclic,
    Quaternion,
    Symmetric,
    Alternating,
    ElementaryAbelian,
    Semidirect,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Abelian => "abelian",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Quaternion => "quaternion",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::ElementaryAbelian => "elementary-abelian",
            Family::Semidirect => "semidirect",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "cyclic" => Family::Cyclic,
            "abelian" => Family::Abelian,
            "dihedral" => Family::Dihedral,
            "dicyclic" => Family::Dicyclic,
            "quaternion" => Family::Quaternion,
            "symmetric" => Family::Symmetric,
            "alternating" => Family::Alternating,
            "elementary-abelian" => Family::ElementaryAbelian,
            "semidirect" => Family::Semidirect,
            other => return Err(GroupError::UnknownFamily(other.to_string())),
        })
    }
}

fn invalid(family: Family, reason: impl Into<String>) -> GroupError {
    GroupError::InvalidParams {
        family: family.name().to_string(),
        reason: reason.into(),
    }
}

/// Order of the group `named(family, params)` would build, without building it.
pub fn expected_order(family: Family, params: &[u64]) -> Result<u64> {
    match family {
        Family::Cyclic => one_param(family, params),
        Family::Abelian => {
            if params.is_empty() {
                return Err(invalid(family, "needs at least one factor order"));
            }
            Ok(params.iter().product())
        }
        Family::Dihedral => one_param(family, params).map(|n| 2 * n),
        Family::Dicyclic => one_param(family, params).map(|n| 4 * n),
        Family::Quaternion => one_param(family, params),
        Family::Symmetric => one_param(family, params).map(|n| (1..=n).product::<u64>().max(1)),
        Family::Alternating => {
            one_param(family, params).map(|n| ((1..=n).product::<u64>().max(1) / 2).max(1))
        }
        Family::ElementaryAbelian => {
            let (p, k) = two_params(family, params)?;
            Ok(p.pow(k as u32))
        }
        Family::Semidirect => {
            let (p, q) = two_params(family, params)?;
            Ok(p * q)
        }
    }
}

fn one_param(family: Family, params: &[u64]) -> Result<u64> {
    match params {
        [n] if *n >= 1 => Ok(*n),
        _ => Err(invalid(family, "needs exactly one positive parameter")),
    }
}

fn two_params(family: Family, params: &[u64]) -> Result<(u64, u64)> {
    match params {
        [a, b] if *a >= 1 && *b >= 1 => Ok((*a, *b)),
        _ => Err(invalid(family, "needs exactly two positive parameters")),
    }
}

pub fn named(family: Family, params: &[u64]) -> Result<FiniteGroup> {
    named_bounded(family, params, &Bounds::default())
}

pub fn named_bounded(family: Family, params: &[u64], bounds: &Bounds) -> Result<FiniteGroup> {
    let order = expected_order(family, params)?;
    if order as usize > bounds.max_elements {
        return Err(GroupError::BoundExceeded {
            bound: bounds.max_elements,
        });
    }
    match family {
        Family::Cyclic => cyclic(params[0] as usize),
        Family::Abelian => {
            let mut g = cyclic(params[0] as usize)?;
            for &n in &params[1..] {
                g = FiniteGroup::direct_product(&g, &cyclic(n as usize)?, bounds)?;
            }
            Ok(g)
        }
        Family::Dihedral => dihedral(params[0] as usize),
        Family::Dicyclic => dicyclic(params[0] as usize),
        Family::Quaternion => quaternion(params[0] as usize),
        Family::Symmetric => symmetric(params[0] as usize, bounds),
        Family::Alternating => alternating(params[0] as usize, bounds),
        Family::ElementaryAbelian => {
            let (p, k) = (params[0], params[1] as usize);
            if !arith::is_prime(p) {
                return Err(invalid(family, format!("{p} is not prime")));
            }
            let zp = cyclic(p as usize)?;
            let mut g = zp.clone();
            for _ in 1..k {
                g = FiniteGroup::direct_product(&g, &zp, bounds)?;
            }
            Ok(g)
        }
        Family::Semidirect => semidirect_pq(params[0], params[1]),
    }
}

/// Z_n with element i = g^i; mul is addition mod n.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid(Family::Cyclic, "n must be >= 1"));
    }
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u32;
        }
    }
    FiniteGroup::from_table_unchecked(mul, n, None)
}

/// Dihedral group of order 2n: elements r^i s^a, index i + a·n.
/// dihedral(1) = Z_2, dihedral(2) = Klein four.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid(Family::Dihedral, "n must be >= 1"));
    }
    let size = 2 * n;
    let mut mul = vec![0u32; size * size];
    for i in 0..n {
        for a in 0..2 {
            let x = i + a * n;
            for j in 0..n {
                for b in 0..2 {
                    let y = j + b * n;
                    // r^i s^a · r^j s^b = r^(i + (-1)^a j) s^(a xor b)
                    let rot = if a == 0 { (i + j) % n } else { (i + n - j) % n };
                    mul[x * size + y] = (rot + (a ^ b) * n) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(mul, size, None)
}

/// Dicyclic group of order 4n: ⟨a, b | a^(2n) = 1, b² = a^n, b a b⁻¹ = a⁻¹⟩,
/// element a^i b^j with i < 2n, j < 2, index i + j·2n. dicyclic(2) = Q_8.
pub fn dicyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(invalid(Family::Dicyclic, "n must be >= 1"));
    }
    let m = 2 * n;
    let size = 4 * n;
    let mut mul = vec![0u32; size * size];
    for i1 in 0..m {
        for j1 in 0..2 {
            let x = i1 + j1 * m;
            for i2 in 0..m {
                for j2 in 0..2 {
                    let y = i2 + j2 * m;
                    let (i, j) = if j1 == 0 {
                        ((i1 + i2) % m, j2)
                    } else if j2 == 0 {
                        ((i1 + m - i2) % m, 1)
                    } else {
                        ((i1 + m - i2 + n) % m, 0)
                    };
                    mul[x * size + y] = (i + j * m) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(mul, size, None)
}

/// Generalized quaternion group of the given order (a power of two >= 8);
/// quaternion(8) is Q_8.
pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    if order < 8 || !order.is_power_of_two() {
        return Err(invalid(
            Family::Quaternion,
            format!("order {order} must be a power of two >= 8"),
        ));
    }
    dicyclic(order / 4)
}

/// Symmetric group S_n via permutation closure of (1 2) and (1 2 ... n).
pub fn symmetric(n: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    if n <= 1 {
        return Ok(FiniteGroup::trivial());
    }
    let degree = n;
    let transposition = {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(0, 1);
        Permutation::from_images(v)?
    };
    let cycle = {
        let v: Vec<usize> = (1..n).chain(std::iter::once(0)).collect();
        Permutation::from_images(v)?
    };
    FiniteGroup::from_permutations(degree, &[transposition, cycle], bounds)
}

/// Alternating group A_n via closure of the consecutive 3-cycles.
pub fn alternating(n: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    if n <= 2 {
        return Ok(FiniteGroup::trivial());
    }
    let mut gens = Vec::new();
    for i in 0..n - 2 {
        let mut v: Vec<usize> = (0..n).collect();
        v[i] = i + 1;
        v[i + 1] = i + 2;
        v[i + 2] = i;
        gens.push(Permutation::from_images(v)?);
    }
    FiniteGroup::from_permutations(n, &gens, bounds)
}

/// Z_p ⋊ Z_q with p prime and q dividing p−1, acting faithfully: the
/// generator of Z_q acts on Z_p as multiplication by an element of
/// multiplicative order q mod p. Frobenius for q > 1.
pub fn semidirect_pq(p: u64, q: u64) -> Result<FiniteGroup> {
    if !arith::is_prime(p) {
        return Err(invalid(Family::Semidirect, format!("p = {p} is not prime")));
    }
    if q == 0 || (p - 1) % q != 0 {
        return Err(invalid(
            Family::Semidirect,
            format!("q = {q} must divide p - 1 = {}", p - 1),
        ));
    }
    // element of multiplicative order exactly q mod p
    let r = (1..p)
        .find(|&r| arith::multiplicative_order(r, p) == q)
        .expect("the multiplicative group mod p is cyclic of order p - 1");
    // powers of r, indexed by the Z_q exponent
    let mut rpow = vec![1u64; q as usize];
    for b in 1..q as usize {
        rpow[b] = rpow[b - 1] * r % p;
    }
    let (pu, qu) = (p as usize, q as usize);
    let size = pu * qu;
    let mut mul = vec![0u32; size * size];
    for a1 in 0..pu {
        for b1 in 0..qu {
            let x = a1 + b1 * pu;
            for a2 in 0..pu {
                for b2 in 0..qu {
                    let y = a2 + b2 * pu;
                    // (a1, b1)·(a2, b2) = (a1 + r^b1·a2 mod p, b1 + b2 mod q)
                    let a = (a1 as u64 + rpow[b1] * a2 as u64) % p;
                    let b = (b1 + b2) % qu;
                    mul[x * size + y] = (a as usize + b * pu) as u32;
                }
            }
        }
    }
    FiniteGroup::from_table_unchecked(mul, size, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra;

    #[test]
    fn quaternion_has_six_elements_of_order_four() {
        let q8 = quaternion(8).unwrap();
        assert_eq!(q8.size(), 8);
        q8.check_axioms().unwrap();
        assert_eq!(spectra::elements_of_order(&q8, 4).len(), 6);
    }

    #[test]
    fn cyclic_one_is_trivial() {
        assert_eq!(named(Family::Cyclic, &[1]).unwrap().size(), 1);
    }

    #[test]
    fn symmetric_three_has_size_six() {
        let s3 = named(Family::Symmetric, &[3]).unwrap();
        assert_eq!(s3.size(), 6);
        s3.check_axioms().unwrap();
    }

    #[test]
    fn family_orders_match_formulas() {
        let cases: Vec<(Family, Vec<u64>)> = vec![
            (Family::Cyclic, vec![12]),
            (Family::Abelian, vec![4, 6]),
            (Family::Dihedral, vec![5]),
            (Family::Dicyclic, vec![3]),
            (Family::Quaternion, vec![16]),
            (Family::Symmetric, vec![4]),
            (Family::Alternating, vec![4]),
            (Family::ElementaryAbelian, vec![3, 3]),
            (Family::Semidirect, vec![7, 3]),
        ];
        for (fam, params) in cases {
            let g = named(fam, &params).unwrap();
            assert_eq!(
                g.size() as u64,
                expected_order(fam, &params).unwrap(),
                "{fam} {params:?}"
            );
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn alternating_orders() {
        assert_eq!(named(Family::Alternating, &[3]).unwrap().size(), 3);
        assert_eq!(named(Family::Alternating, &[4]).unwrap().size(), 12);
        assert_eq!(named(Family::Alternating, &[5]).unwrap().size(), 60);
    }

    #[test]
    fn dihedral_edge_cases() {
        assert_eq!(dihedral(1).unwrap().size(), 2);
        let v4 = dihedral(2).unwrap();
        assert_eq!(spectra::exponent(&v4), 2);
        let d3 = dihedral(3).unwrap();
        let ocm = spectra::order_class_map(&d3);
        assert_eq!(ocm.get(2), 3);
        assert_eq!(ocm.get(3), 2);
    }

    #[test]
    fn semidirect_rejects_bad_params() {
        assert!(semidirect_pq(6, 2).is_err());
        assert!(semidirect_pq(7, 4).is_err());
        assert_eq!(semidirect_pq(7, 1).unwrap().size(), 7);
    }

    #[test]
    fn semidirect_f20_structure() {
        let f20 = semidirect_pq(5, 4).unwrap();
        assert_eq!(f20.size(), 20);
        f20.check_axioms().unwrap();
        // 4 elements of order 5, non-abelian
        assert_eq!(spectra::elements_of_order(&f20, 5).len(), 4);
        assert!((0..20).any(|i| (0..20).any(|j| f20.mul(i, j) != f20.mul(j, i))));
    }

    #[test]
    fn unknown_family_rejected() {
        assert!(matches!(
            "octonion".parse::<Family>(),
            Err(GroupError::UnknownFamily(_))
        ));
        assert!(named(Family::Quaternion, &[12]).is_err());
        assert!(named(Family::Cyclic, &[0]).is_err());
    }
}

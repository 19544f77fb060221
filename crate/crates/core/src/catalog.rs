//! Group catalogs: the built-in collection of small-group families and the
//! JSON manifest loader.
//!
//! Manifest format: a JSON array of entries
//!   {"id": "...", "constructor": "...", "params": [...],
//!    "expected_order": N, "tags": ["..."]}
//! where `constructor` is a named family (params are integers), `"file"`
//! (params is a single path to a `perm`/`table` definition file), or
//! `"product"` (params are `family:p1,p2` shorthand strings).

use std::collections::BTreeSet;
use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{GroupError, Result};
use crate::group::Bounds;
use crate::groupspec::{self, GroupSpec};
use crate::named::{self, Family};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub spec: GroupSpec,
    pub expected_order: usize,
    pub tags: BTreeSet<String>,
}

pub fn entry_named(id: &str, family: Family, params: &[u64], tags: &[&str]) -> Result<CatalogEntry> {
    Ok(CatalogEntry {
        id: id.to_string(),
        spec: GroupSpec::named(family, params),
        expected_order: named::expected_order(family, params)? as usize,
        tags: tags.iter().map(|t| t.to_string()).collect(),
    })
}

fn entry_product(id: &str, specs: &[GroupSpec], order: usize, tags: &[&str]) -> CatalogEntry {
    let spec = specs[1..]
        .iter()
        .cloned()
        .fold(specs[0].clone(), |acc, s| GroupSpec::product(acc, s));
    CatalogEntry {
        id: id.to_string(),
        spec,
        expected_order: order,
        tags: tags.iter().map(|t| t.to_string()).collect(),
    }
}

/// The built-in catalog: constructive coverage of small groups. Not a
/// complete list of all groups of each order; sweeps report the population
/// they actually ran over.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();

    // cyclic Z_n, n <= 200
    for n in 1..=200u64 {
        entries.push(entry_named(&format!("Z{n}"), Family::Cyclic, &[n], &["cyclic", "abelian", "nilpotent-family"]).unwrap());
    }

    // dihedral of order 2n <= 200 (n >= 3; smaller ones duplicate Z2, V4)
    for n in 3..=100u64 {
        let tags: &[&str] = if n.is_power_of_two() {
            &["dihedral", "nilpotent-family"]
        } else {
            &["dihedral"]
        };
        entries.push(entry_named(&format!("Dih{}", 2 * n), Family::Dihedral, &[n], tags).unwrap());
    }

    // dicyclic of order 4n <= 200; powers of two are the generalized
    // quaternion groups and get the Q ids
    for n in 2..=50u64 {
        let order = 4 * n;
        if order.is_power_of_two() {
            entries.push(
                entry_named(&format!("Q{order}"), Family::Quaternion, &[order], &["quaternion", "dicyclic", "nilpotent-family"]).unwrap(),
            );
        } else {
            entries.push(entry_named(&format!("Dic{order}"), Family::Dicyclic, &[n], &["dicyclic"]).unwrap());
        }
    }

    // symmetric and alternating, degree <= 6
    for n in 3..=6u64 {
        entries.push(entry_named(&format!("S{n}"), Family::Symmetric, &[n], &["symmetric"]).unwrap());
        entries.push(entry_named(&format!("A{n}"), Family::Alternating, &[n], &["alternating"]).unwrap());
    }

    // elementary abelian p^k <= 512, k >= 2 (k = 1 is cyclic)
    for p in [2u64, 3, 5, 7, 11, 13] {
        let mut k = 2u32;
        while p.pow(k) <= 512 {
            entries.push(
                entry_named(
                    &format!("E{p}^{k}"),
                    Family::ElementaryAbelian,
                    &[p, k as u64],
                    &["elementary-abelian", "abelian", "nilpotent-family"],
                )
                .unwrap(),
            );
            k += 1;
        }
    }

    // Frobenius families Z_p ⋊ Z_q, q >= 3 dividing p - 1 (q = 2 gives
    // dihedral groups already present)
    for p in (3..=200u64).filter(|&p| arith::is_prime(p)) {
        for q in arith::divisors(p - 1) {
            if q >= 3 && p * q <= 200 {
                entries.push(
                    entry_named(&format!("Z{p}:Z{q}"), Family::Semidirect, &[p, q], &["frobenius-family", "semidirect"]).unwrap(),
                );
            }
        }
    }

    // assorted abelian and nilpotent direct products (orders up to 512)
    let abelian_products: &[(&str, &[u64])] = &[
        ("Z2xZ4", &[2, 4]),
        ("Z4xZ4", &[4, 4]),
        ("Z2xZ8", &[2, 8]),
        ("Z4xZ8", &[4, 8]),
        ("Z8xZ8", &[8, 8]),
        ("Z3xZ9", &[3, 9]),
        ("Z9xZ9", &[9, 9]),
        ("Z4xZ9", &[4, 9]),
        ("Z8xZ9", &[8, 9]),
        ("Z8xZ27", &[8, 27]),
        ("Z16xZ27", &[16, 27]),
        ("Z9xZ49", &[9, 49]),
        ("Z4xZ25", &[4, 25]),
        ("Z2xZ9xZ25", &[2, 9, 25]),
        ("Z4xZ9xZ5", &[4, 9, 5]),
        ("Z2xZ4xZ8", &[2, 4, 8]),
        ("Z3xZ9xZ3", &[3, 9, 3]),
    ];
    for (id, params) in abelian_products {
        entries.push(
            entry_named(id, Family::Abelian, params, &["abelian", "product", "nilpotent-family"]).unwrap(),
        );
    }

    let q8 = GroupSpec::named(Family::Quaternion, &[8]);
    let q16 = GroupSpec::named(Family::Quaternion, &[16]);
    let d8 = GroupSpec::named(Family::Dihedral, &[4]);
    let z = |n: u64| GroupSpec::named(Family::Cyclic, &[n]);
    let nonabelian_products: Vec<(&str, Vec<GroupSpec>, usize)> = vec![
        ("Z2xQ8", vec![z(2), q8.clone()], 16),
        ("Z3xQ8", vec![z(3), q8.clone()], 24),
        ("Z9xQ8", vec![z(9), q8.clone()], 72),
        ("Z15xQ8", vec![z(15), q8.clone()], 120),
        ("Z15xQ16", vec![z(15), q16], 240),
        ("Z3xD8", vec![z(3), d8.clone()], 24),
        ("Z5xD8", vec![z(5), d8], 40),
        ("Z27xQ8", vec![z(27), q8.clone()], 216),
        ("Z35xQ8", vec![z(35), q8], 280),
    ];
    for (id, specs, order) in nonabelian_products {
        entries.push(entry_product(id, &specs, order, &["product", "nilpotent-family"]));
    }
    // non-nilpotent products for spectrum variety
    let s3_spec = GroupSpec::named(Family::Symmetric, &[3]);
    entries.push(entry_product("Z5xS3", &[z(5), s3_spec.clone()], 30, &["product"]));
    entries.push(entry_product("Z4xS3", &[z(4), s3_spec], 24, &["product"]));

    entries
}

#[derive(Debug, Deserialize)]
struct ManifestEntry {
    id: String,
    constructor: String,
    #[serde(default)]
    params: Vec<serde_json::Value>,
    expected_order: usize,
    #[serde(default)]
    tags: BTreeSet<String>,
}

fn manifest_int_params(entry: &ManifestEntry) -> Result<Vec<u64>> {
    entry
        .params
        .iter()
        .map(|v| {
            v.as_u64().ok_or_else(|| GroupError::Parse {
                line: 0,
                message: format!("entry {:?}: parameter {v} is not a non-negative integer", entry.id),
            })
        })
        .collect()
}

fn resolve_spec(entry: &ManifestEntry, base_dir: &Path) -> Result<GroupSpec> {
    match entry.constructor.as_str() {
        "file" => {
            let [path] = entry.params.as_slice() else {
                return Err(GroupError::Parse {
                    line: 0,
                    message: format!("entry {:?}: `file` takes exactly one path parameter", entry.id),
                });
            };
            let path = path.as_str().ok_or_else(|| GroupError::Parse {
                line: 0,
                message: format!("entry {:?}: file path must be a string", entry.id),
            })?;
            groupspec::parse_group_file(&base_dir.join(path))
        }
        "product" => {
            let mut specs = Vec::new();
            for v in &entry.params {
                let text = v.as_str().ok_or_else(|| GroupError::Parse {
                    line: 0,
                    message: format!("entry {:?}: product factors must be `family:params` strings", entry.id),
                })?;
                specs.push(GroupSpec::parse_shorthand(text)?);
            }
            if specs.is_empty() {
                return Err(GroupError::Parse {
                    line: 0,
                    message: format!("entry {:?}: product needs at least one factor", entry.id),
                });
            }
            Ok(specs[1..]
                .iter()
                .cloned()
                .fold(specs[0].clone(), GroupSpec::product))
        }
        family => {
            let family: Family = family.parse()?;
            Ok(GroupSpec::named(family, &manifest_int_params(entry)?))
        }
    }
}

/// Load and validate a catalog manifest: ids must be unique and each entry
/// must construct a group of exactly `expected_order`.
pub fn load_catalog(path: &Path, bounds: &Bounds) -> Result<Vec<CatalogEntry>> {
    let text = std::fs::read_to_string(path)?;
    let manifest: Vec<ManifestEntry> = serde_json::from_str(&text)?;
    let base_dir = path.parent().unwrap_or_else(|| Path::new("."));

    let mut ids = HashSet::new();
    let mut entries = Vec::with_capacity(manifest.len());
    for m in &manifest {
        if !ids.insert(m.id.clone()) {
            return Err(GroupError::DuplicateId(m.id.clone()));
        }
        let spec = resolve_spec(m, base_dir)?;
        let group = spec.build(bounds)?;
        if group.size() != m.expected_order {
            return Err(GroupError::OrderMismatch {
                id: m.id.clone(),
                actual: group.size(),
                expected: m.expected_order,
            });
        }
        entries.push(CatalogEntry {
            id: m.id.clone(),
            spec,
            expected_order: m.expected_order,
            tags: m.tags.clone(),
        });
    }
    Ok(entries)
}

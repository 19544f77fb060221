//! Group construction specs: the serializable recipe a catalog entry or a
//! definition file resolves to, and the text formats that produce them.
//!
//! Definition file format (UTF-8, `#` comments, blank lines ignored):
//!   - `perm <degree>` header, then one generator per line in 1-based cycle
//!     notation, e.g. `(1 2 3)(4 5)`.
//!   - `table <n>` header, then n lines of n space-separated 0-based indices;
//!     index 0 is the identity.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{Bounds, FiniteGroup, Subgroup};
use crate::named::{self, Family};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupSpec {
    PermGenerators {
        degree: usize,
        /// 1-based cycle notation, one string per generator.
        generators: Vec<String>,
    },
    CayleyTable {
        table: Vec<Vec<usize>>,
    },
    NamedFamily {
        family: Family,
        params: Vec<u64>,
    },
    Product {
        left: Box<GroupSpec>,
        right: Box<GroupSpec>,
    },
    Quotient {
        of: Box<GroupSpec>,
        /// Element indices generating the normal subgroup to factor out.
        normal_generators: Vec<usize>,
    },
}

impl GroupSpec {
    pub fn named(family: Family, params: &[u64]) -> GroupSpec {
        GroupSpec::NamedFamily {
            family,
            params: params.to_vec(),
        }
    }

    pub fn product(left: GroupSpec, right: GroupSpec) -> GroupSpec {
        GroupSpec::Product {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn build(&self, bounds: &Bounds) -> Result<FiniteGroup> {
        match self {
            GroupSpec::PermGenerators { degree, generators } => {
                let gens: Vec<Permutation> = generators
                    .iter()
                    .map(|s| Permutation::parse_cycles(s, *degree))
                    .collect::<Result<_>>()?;
                FiniteGroup::from_permutations(*degree, &gens, bounds)
            }
            GroupSpec::CayleyTable { table } => {
                FiniteGroup::from_cayley_table(table.clone(), bounds)
            }
            GroupSpec::NamedFamily { family, params } => {
                named::named_bounded(*family, params, bounds)
            }
            GroupSpec::Product { left, right } => {
                let a = left.build(bounds)?;
                let b = right.build(bounds)?;
                FiniteGroup::direct_product(&a, &b, bounds)
            }
            GroupSpec::Quotient {
                of,
                normal_generators,
            } => {
                let g = of.build(bounds)?;
                for &i in normal_generators {
                    g.check_index(i)?;
                }
                let n = Subgroup::generated(&g, normal_generators);
                g.quotient(&n)
            }
        }
    }

    /// Parse the CLI/manifest shorthand `family:p1,p2,...`, e.g.
    /// `quaternion:8` or `semidirect:5,4`.
    pub fn parse_shorthand(text: &str) -> Result<GroupSpec> {
        let (name, rest) = match text.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (text, None),
        };
        let family: Family = name.parse()?;
        let params: Vec<u64> = match rest {
            None | Some("") => Vec::new(),
            Some(r) => r
                .split(',')
                .map(|tok| {
                    tok.trim().parse::<u64>().map_err(|_| GroupError::InvalidParams {
                        family: family.name().to_string(),
                        reason: format!("bad parameter {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?,
        };
        Ok(GroupSpec::NamedFamily { family, params })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::PermGenerators { degree, generators } => {
                write!(f, "perm({degree}; {})", generators.join(" "))
            }
            GroupSpec::CayleyTable { table } => write!(f, "table({})", table.len()),
            GroupSpec::NamedFamily { family, params } => {
                let params: Vec<String> = params.iter().map(|p| p.to_string()).collect();
                write!(f, "{family}:{}", params.join(","))
            }
            GroupSpec::Product { left, right } => write!(f, "({left} x {right})"),
            GroupSpec::Quotient { of, .. } => write!(f, "({of} / N)"),
        }
    }
}

/// Parse a group definition file (see the module docs for the format).
pub fn parse_group_file(path: &Path) -> Result<GroupSpec> {
    let text = std::fs::read_to_string(path)?;
    parse_group_text(&text)
}

pub fn parse_group_text(text: &str) -> Result<GroupSpec> {
    // (line number, content) with comments and blanks stripped
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let (header_line, header) = lines.first().ok_or(GroupError::Parse {
        line: 1,
        message: "empty group definition file".to_string(),
    })?;
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let param: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or(GroupError::Parse {
            line: *header_line,
            message: format!("header {header:?} needs a positive integer parameter"),
        })?;
    if parts.next().is_some() {
        return Err(GroupError::Parse {
            line: *header_line,
            message: format!("trailing tokens after header {header:?}"),
        });
    }

    match kind {
        "perm" => {
            let mut generators = Vec::new();
            for (line, content) in &lines[1..] {
                Permutation::parse_cycles(content, param).map_err(|e| GroupError::Parse {
                    line: *line,
                    message: e.to_string(),
                })?;
                generators.push(content.to_string());
            }
            Ok(GroupSpec::PermGenerators {
                degree: param,
                generators,
            })
        }
        "table" => {
            let rows = &lines[1..];
            if rows.len() != param {
                return Err(GroupError::Parse {
                    line: *header_line,
                    message: format!("expected {param} table rows, found {}", rows.len()),
                });
            }
            let mut table = Vec::with_capacity(param);
            for (line, content) in rows {
                let row: Vec<usize> = content
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse().map_err(|_| GroupError::Parse {
                            line: *line,
                            message: format!("bad table entry {tok:?}"),
                        })
                    })
                    .collect::<Result<_>>()?;
                if row.len() != param {
                    return Err(GroupError::Parse {
                        line: *line,
                        message: format!("row has {} entries, expected {param}", row.len()),
                    });
                }
                table.push(row);
            }
            Ok(GroupSpec::CayleyTable { table })
        }
        other => Err(GroupError::Parse {
            line: *header_line,
            message: format!("unknown header {other:?}, expected `perm` or `table`"),
        }),
    }
}

//! Permutations on {1..degree} with 1-based cycle notation parsing.
//!
//! Internally points are 0-based; cycle notation at the text boundary is
//! 1-based, matching the group definition file format.

use std::fmt;

use crate::error::{GroupError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Build from 0-based images; rejects non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(GroupError::MalformedPermutation(format!(
                    "images {images:?} are not a bijection on 0..{n}"
                )));
            }
            seen[img] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Product self·other, acting as (self·other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img] = i;
        }
        Permutation { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Parse 1-based cycle notation, e.g. `(1 2 3)(4 5)`. Points may also be
    /// comma-separated. Fixed points are omitted; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let malformed = |msg: String| GroupError::MalformedPermutation(msg);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(malformed("empty permutation".into()));
        }
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| malformed(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| malformed(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();

            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let point: usize = tok
                    .parse()
                    .map_err(|_| malformed(format!("bad point {tok:?} in {text:?}")))?;
                if point == 0 || point > degree {
                    return Err(malformed(format!(
                        "point {point} out of range 1..={degree} in {text:?}"
                    )));
                }
                cycle.push(point - 1);
            }
            for &p in &cycle {
                if moved[p] {
                    return Err(malformed(format!("repeated point {} in {text:?}", p + 1)));
                }
                moved[p] = true;
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.images[p];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_basic_cycles() {
        let p = Permutation::parse_cycles("(1 2 3)", 3).unwrap();
        assert_eq!(p.images(), &[1, 2, 0]);
        let q = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
        assert_eq!(q.images(), &[1, 0, 3, 2]);
        let r = Permutation::parse_cycles("(1,2,3)(4 5)", 5).unwrap();
        assert_eq!(r.images(), &[1, 2, 0, 4, 3]);
    }

    #[test]
    fn parse_rejects_repeated_point() {
        assert!(Permutation::parse_cycles("(1 2 2)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2)(2 3)", 3).is_err());
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 2", 3).is_err());
    }

    #[test]
    fn display_roundtrip() {
        for text in ["(1 2 3)", "(1 2)(3 4)", "(2 5)(3 4)"] {
            let p = Permutation::parse_cycles(text, 5).unwrap();
            let q = Permutation::parse_cycles(&p.to_string(), 5).unwrap();
            assert_eq!(p, q);
        }
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((0..degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn compose_with_inverse_is_identity(p in arb_perm(8)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn composition_is_associative(
            a in arb_perm(6), b in arb_perm(6), c in arb_perm(6)
        ) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }
    }
}

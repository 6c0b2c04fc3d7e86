//! Named catalog of stock lattices.
//!
//! Grammar: `chain:n` (n ≥ 1), `bool:n` (n ≥ 0), `M3`, `N5`, `Mn:k` (k ≥ 3).
//! Canonical element orders:
//! - `chain:n`: labels "0".."n-1" bottom to top.
//! - `bool:n`: subsets of an n-set as decimal bitmask labels, sorted by
//!   (popcount, mask value). `bool:0` is the one-element lattice.
//! - `M3`: 0, p, q, r, 1. `Mn:k`: 0, a1..ak, 1.
//! - `N5`: 0, a, b, c, 1 with 0 < a < c < 1 and 0 < b < 1.

use crate::error::{Error, Result};
use crate::lattice::FinLattice;
use crate::poset::FinPoset;

/// Hard cap on catalog constructions, independent of any run guard: keeps
/// `bool:n` grids to a few MB.
const CATALOG_LIMIT: usize = 1 << 14;

/// Element count the named structure would have.
pub fn catalog_size(name: &str) -> Result<usize> {
    match parse(name)? {
        Shape::Chain(n) => Ok(n),
        Shape::Bool(n) => 1usize
            .checked_shl(n as u32)
            .filter(|&s| s <= CATALOG_LIMIT)
            .ok_or(Error::SizeGuardExceeded {
                reached: CATALOG_LIMIT + 1,
                limit: CATALOG_LIMIT,
            }),
        Shape::Mn(k) => Ok(k + 2),
        Shape::N5 => Ok(5),
    }
}

pub fn catalog(name: &str) -> Result<FinLattice> {
    let size = catalog_size(name)?;
    if size > CATALOG_LIMIT {
        return Err(Error::SizeGuardExceeded {
            reached: size,
            limit: CATALOG_LIMIT,
        });
    }
    let (labels, covers) = match parse(name)? {
        Shape::Chain(n) => {
            let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let covers = (1..n)
                .map(|i| ((i - 1).to_string(), i.to_string()))
                .collect();
            (labels, covers)
        }
        Shape::Bool(n) => {
            let count = 1usize << n;
            let labels: Vec<String> = (0..count).map(|m| m.to_string()).collect();
            let mut covers = Vec::new();
            for mask in 0..count {
                for bit in 0..n {
                    if mask & (1 << bit) == 0 {
                        covers.push((mask.to_string(), (mask | (1 << bit)).to_string()));
                    }
                }
            }
            (labels, covers)
        }
        Shape::Mn(k) => {
            let atom = |i: usize| {
                if name == "M3" {
                    ["p", "q", "r"][i].to_string()
                } else {
                    format!("a{}", i + 1)
                }
            };
            let mut labels = vec!["0".to_string()];
            let mut covers = Vec::new();
            for i in 0..k {
                labels.push(atom(i));
                covers.push(("0".to_string(), atom(i)));
                covers.push((atom(i), "1".to_string()));
            }
            labels.push("1".to_string());
            (labels, covers)
        }
        Shape::N5 => {
            let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
            let covers = [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")]
                .map(|(x, y)| (x.to_string(), y.to_string()))
                .to_vec();
            (labels, covers)
        }
    };
    let pairs: Vec<(String, String)> = covers;
    FinLattice::from_poset(FinPoset::from_covers(&labels, &pairs)?)
}

enum Shape {
    Chain(usize),
    Bool(usize),
    Mn(usize),
    N5,
}

fn parse(name: &str) -> Result<Shape> {
    let unknown = || Error::UnknownCatalogName(name.to_string());
    if name == "M3" {
        return Ok(Shape::Mn(3));
    }
    if name == "N5" {
        return Ok(Shape::N5);
    }
    if let Some(arg) = name.strip_prefix("chain:") {
        let n: usize = arg.parse().map_err(|_| unknown())?;
        if n == 0 {
            return Err(unknown());
        }
        return Ok(Shape::Chain(n));
    }
    if let Some(arg) = name.strip_prefix("bool:") {
        let n: usize = arg.parse().map_err(|_| unknown())?;
        return Ok(Shape::Bool(n));
    }
    if let Some(arg) = name.strip_prefix("Mn:") {
        let k: usize = arg.parse().map_err(|_| unknown())?;
        if k < 3 {
            return Err(unknown());
        }
        return Ok(Shape::Mn(k));
    }
    Err(unknown())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_shape() {
        let c = catalog("chain:3").unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.labels(), &["0", "1", "2"]);
        assert!(c.leq(0, 2));
        assert_eq!(c.join(1, 2), 2);
    }

    #[test]
    fn bool_two_is_diamond() {
        let b = catalog("bool:2").unwrap();
        assert_eq!(b.size(), 4);
        assert_eq!(b.labels(), &["0", "1", "2", "3"]);
        assert_eq!(b.atoms().len(), 2);
        assert!(b.is_distributive());
    }

    #[test]
    fn bool_zero_and_three() {
        assert_eq!(catalog("bool:0").unwrap().size(), 1);
        let b3 = catalog("bool:3").unwrap();
        assert_eq!(b3.size(), 8);
        // popcount-sorted: masks 3,5,6 sit between the atoms and 7.
        assert_eq!(b3.labels(), &["0", "1", "2", "4", "3", "5", "6", "7"]);
        assert_eq!(b3.atoms().len(), 3);
    }

    #[test]
    fn m3_and_mn() {
        let m3 = catalog("M3").unwrap();
        assert_eq!(m3.labels(), &["0", "p", "q", "r", "1"]);
        assert_eq!(m3.atoms().len(), 3);
        let m4 = catalog("Mn:4").unwrap();
        assert_eq!(m4.size(), 6);
        assert_eq!(m4.atoms().len(), 4);
        assert!(crate::iso::are_isomorphic(&m3, &catalog("Mn:3").unwrap()).is_some());
    }

    #[test]
    fn n5_shape() {
        let n5 = catalog("N5").unwrap();
        assert_eq!(n5.labels(), &["0", "a", "b", "c", "1"]);
        let (a, b, c) = (1, 2, 3);
        assert!(n5.leq(a, c));
        assert!(!n5.poset().comparable(a, b));
        assert_eq!(n5.join(a, b), 4);
        assert_eq!(n5.meet(c, b), 0);
    }

    #[test]
    fn rejects_bad_names() {
        for bad in ["chain:0", "Mn:2", "cube", "bool:x", "chain:", "m3"] {
            assert!(
                matches!(catalog(bad), Err(Error::UnknownCatalogName(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn bool_guard() {
        assert!(matches!(
            catalog("bool:30"),
            Err(Error::SizeGuardExceeded { .. })
        ));
    }
}

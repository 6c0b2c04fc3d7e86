//! Isomorphism testing for finite ordered algebras.
//!
//! Backtracking over a candidate assignment, pruned by invariant signatures
//! (height, lower cover count, upper cover count) and by incremental order
//! and operation consistency. Works for any structure exposing its order and
//! operation tables; lattices compare meet and join, semilattices join only.

use crate::grid::OpTable;
use crate::lattice::FinLattice;
use crate::semilattice::FinJoinSemilattice;

/// An isomorphism witness: `mapping[i]` is the image of element `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IsoWitness {
    pub mapping: Vec<usize>,
}

impl IsoWitness {
    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        IsoWitness { mapping: inv }
    }
}

/// Structures the search can compare: a finite order plus operation tables
/// that any isomorphism must transport.
pub trait FiniteAlgebra {
    fn size(&self) -> usize;
    fn leq(&self, a: usize, b: usize) -> bool;
    fn op_tables(&self) -> Vec<&OpTable>;
}

impl FiniteAlgebra for FinLattice {
    fn size(&self) -> usize {
        FinLattice::size(self)
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        FinLattice::leq(self, a, b)
    }
    fn op_tables(&self) -> Vec<&OpTable> {
        vec![self.meet_table(), self.join_table()]
    }
}

impl FiniteAlgebra for FinJoinSemilattice {
    fn size(&self) -> usize {
        FinJoinSemilattice::size(self)
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        FinJoinSemilattice::leq(self, a, b)
    }
    fn op_tables(&self) -> Vec<&OpTable> {
        vec![self.join_table()]
    }
}

pub fn are_isomorphic<T: FiniteAlgebra>(x: &T, y: &T) -> Option<IsoWitness> {
    let n = x.size();
    if n != y.size() {
        return None;
    }
    if n == 0 {
        return Some(IsoWitness { mapping: vec![] });
    }
    let sx = signatures(x);
    let sy = signatures(y);
    let mut sorted_x = sx.clone();
    let mut sorted_y = sy.clone();
    sorted_x.sort();
    sorted_y.sort();
    if sorted_x != sorted_y {
        return None;
    }
    // Process rarest signatures first; their candidate lists are shortest.
    let mut class_size = std::collections::HashMap::new();
    for s in &sx {
        *class_size.entry(*s).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (class_size[&sx[i]], i));
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| sy[j] == sx[i]).collect())
        .collect();

    let tables: Vec<(&OpTable, &OpTable)> = x.op_tables().into_iter().zip(y.op_tables()).collect();
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(
        x,
        y,
        &tables,
        &order,
        &candidates,
        0,
        &mut mapping,
        &mut used,
    ) {
        debug_assert!(verify_witness(
            x,
            y,
            &IsoWitness {
                mapping: mapping.clone()
            }
        ));
        Some(IsoWitness { mapping })
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign<T: FiniteAlgebra>(
    x: &T,
    y: &T,
    tables: &[(&OpTable, &OpTable)],
    order: &[usize],
    candidates: &[Vec<usize>],
    pos: usize,
    mapping: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return verify_witness(
            x,
            y,
            &IsoWitness {
                mapping: mapping.clone(),
            },
        );
    }
    let e = order[pos];
    'cand: for &c in &candidates[e] {
        if used[c] {
            continue;
        }
        for &e2 in &order[..pos] {
            let c2 = mapping[e2];
            if x.leq(e, e2) != y.leq(c, c2) || x.leq(e2, e) != y.leq(c2, c) {
                continue 'cand;
            }
            for (tx, ty) in tables {
                let r = mapping[tx.get(e, e2)];
                if r != usize::MAX && ty.get(c, c2) != r {
                    continue 'cand;
                }
            }
        }
        mapping[e] = c;
        used[c] = true;
        if assign(x, y, tables, order, candidates, pos + 1, mapping, used) {
            return true;
        }
        mapping[e] = usize::MAX;
        used[c] = false;
    }
    false
}

pub fn verify_witness<T: FiniteAlgebra>(x: &T, y: &T, w: &IsoWitness) -> bool {
    let n = x.size();
    if y.size() != n || w.mapping.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in &w.mapping {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    let m = &w.mapping;
    for a in 0..n {
        for b in 0..n {
            if x.leq(a, b) != y.leq(m[a], m[b]) {
                return false;
            }
            for (tx, ty) in x.op_tables().iter().zip(y.op_tables()) {
                if m[tx.get(a, b)] != ty.get(m[a], m[b]) {
                    return false;
                }
            }
        }
    }
    true
}

fn signatures<T: FiniteAlgebra>(x: &T) -> Vec<(usize, usize, usize)> {
    let n = x.size();
    let lt = |a: usize, b: usize| a != b && x.leq(a, b);
    let is_cover = |a: usize, b: usize| lt(a, b) && (0..n).all(|z| !(lt(a, z) && lt(z, b)));
    let mut heights = vec![usize::MAX; n];
    let mut order: Vec<usize> = (0..n).collect();
    let down: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| x.leq(j, i)).count())
        .collect();
    order.sort_by_key(|&i| down[i]);
    for &i in &order {
        heights[i] = (0..n)
            .filter(|&j| lt(j, i))
            .map(|j| heights[j] + 1)
            .max()
            .unwrap_or(0);
    }
    (0..n)
        .map(|i| {
            let lc = (0..n).filter(|&j| is_cover(j, i)).count();
            let uc = (0..n).filter(|&j| is_cover(i, j)).count();
            (heights[i], lc, uc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn chain_self_isomorphism() {
        let c = catalog("chain:3").unwrap();
        let w = are_isomorphic(&c, &c).unwrap();
        assert_eq!(w.mapping, vec![0, 1, 2]);
    }

    #[test]
    fn m3_vs_n5_differ() {
        let m3 = catalog("M3").unwrap();
        let n5 = catalog("N5").unwrap();
        assert!(are_isomorphic(&m3, &n5).is_none());
    }

    #[test]
    fn bool2_vs_chain4_differ() {
        let b = catalog("bool:2").unwrap();
        let c = catalog("chain:4").unwrap();
        assert!(are_isomorphic(&b, &c).is_none());
    }

    #[test]
    fn dual_of_n5_is_n5() {
        let n5 = catalog("N5").unwrap();
        let w = are_isomorphic(&n5.dual(), &n5).unwrap();
        assert!(verify_witness(&n5.dual(), &n5, &w));
        assert!(verify_witness(&n5, &n5.dual(), &w.inverse()));
    }

    #[test]
    fn relabeled_diamond_found() {
        let p = crate::poset::FinPoset::from_covers(
            &["bot", "x", "y", "top"],
            &[("bot", "x"), ("bot", "y"), ("x", "top"), ("y", "top")],
        )
        .unwrap();
        let l = crate::lattice::FinLattice::from_poset(p).unwrap();
        let b2 = catalog("bool:2").unwrap();
        assert!(are_isomorphic(&l, &b2).is_some());
    }

    #[test]
    fn agrees_with_permutation_oracle_on_small_pairs() {
        let names = [
            "chain:1", "chain:2", "chain:3", "chain:4", "bool:2", "M3", "N5", "Mn:4",
        ];
        for a in names {
            for b in names {
                let la = catalog(a).unwrap();
                let lb = catalog(b).unwrap();
                let fast = are_isomorphic(&la, &lb).is_some();
                let slow = crate::oracle::isomorphic_by_permutations(&la, &lb);
                assert_eq!(fast, slow, "{a} vs {b}");
            }
        }
    }
}

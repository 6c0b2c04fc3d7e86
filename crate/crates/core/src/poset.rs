//! Finite partial orders over labeled elements.
//!
//! Elements are referenced by index into a fixed ordering. Constructors that
//! take raw input (`from_covers`) canonicalize that ordering to a linear
//! extension of `leq`: a stable sort of the input order by height. Derived
//! posets (duals, induced subposets) keep the index scheme of their source,
//! so `dual` is an involution element by element.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::BitGrid;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinPoset {
    labels: Vec<String>,
    leq: BitGrid,
}

impl FinPoset {
    /// Builds a poset from labels and a cover list (child first, parent
    /// second). Extra non-cover edges are harmless; `leq` is the
    /// reflexive-transitive closure. Elements are renumbered canonically.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut leq = BitGrid::new(n, n);
        for i in 0..n {
            leq.set(i, i, true);
        }
        for (child, parent) in covers {
            let c = *index
                .get(child.as_ref())
                .ok_or_else(|| Error::UnknownLabel(child.as_ref().to_string()))?;
            let p = *index
                .get(parent.as_ref())
                .ok_or_else(|| Error::UnknownLabel(parent.as_ref().to_string()))?;
            leq.set(c, p, true);
        }
        transitive_close(&mut leq);
        for i in 0..n {
            for j in 0..n {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::CycleDetected {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
            }
        }
        let raw = FinPoset { labels, leq };
        Ok(raw.permuted(&canonical_order(&raw)))
    }

    /// Wraps an already validated reflexive-antisymmetric-transitive relation
    /// without renumbering. Callers own the element order.
    pub(crate) fn from_parts(labels: Vec<String>, leq: BitGrid) -> Result<Self> {
        let n = labels.len();
        if leq.rows() != n || leq.cols() != n {
            return Err(Error::DimensionMismatch);
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            if !leq.get(i, i) {
                return Err(Error::InvalidDocument(format!(
                    "relation not reflexive at {:?}",
                    labels[i]
                )));
            }
            for j in 0..n {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::CycleDetected {
                        a: labels[i].clone(),
                        b: labels[j].clone(),
                    });
                }
                for k in 0..n {
                    if leq.get(i, j) && leq.get(j, k) && !leq.get(i, k) {
                        return Err(Error::InvalidDocument(format!(
                            "relation not transitive at {:?} ≤ {:?} ≤ {:?}",
                            labels[i], labels[j], labels[k]
                        )));
                    }
                }
            }
        }
        Ok(FinPoset { labels, leq })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub(crate) fn leq_grid(&self) -> &BitGrid {
        &self.leq
    }

    /// Cover pairs (child, parent), sorted by (child, parent) index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && self.is_cover(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn is_cover(&self, a: usize, b: usize) -> bool {
        self.lt(a, b) && (0..self.size()).all(|z| !(self.lt(a, z) && self.lt(z, b)))
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| self.lt(a, i) && self.is_cover(a, i))
            .collect()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        (0..self.size())
            .filter(|&b| self.lt(i, b) && self.is_cover(i, b))
            .collect()
    }

    /// Length of the longest chain ending at each element (minimal elements
    /// have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let n = self.size();
        let mut h = vec![usize::MAX; n];
        // Elements sorted by down-set size give a linear extension to fill in.
        let mut order: Vec<usize> = (0..n).collect();
        let down_sizes: Vec<usize> = (0..n)
            .map(|i| (0..n).filter(|&j| self.leq(j, i)).count())
            .collect();
        order.sort_by_key(|&i| down_sizes[i]);
        for &i in &order {
            let mut best = 0;
            for j in 0..n {
                if self.lt(j, i) {
                    debug_assert!(h[j] != usize::MAX);
                    best = best.max(h[j] + 1);
                }
            }
            h[i] = best;
        }
        h
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| (0..self.size()).all(|j| !self.lt(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| (0..self.size()).all(|j| !self.lt(i, j)))
            .collect()
    }

    pub fn down_set(&self, i: usize) -> Vec<usize> {
        (0..self.size()).filter(|&j| self.leq(j, i)).collect()
    }

    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.size()).filter(|&j| self.leq(i, j)).collect()
    }

    /// Order-reversed poset on the same elements and indices.
    pub fn dual(&self) -> FinPoset {
        let n = self.size();
        let mut leq = BitGrid::new(n, n);
        for i in 0..n {
            for j in 0..n {
                leq.set(i, j, self.leq.get(j, i));
            }
        }
        FinPoset {
            labels: self.labels.clone(),
            leq,
        }
    }

    /// Subposet induced on `keep`, elements in the order given.
    pub fn induced(&self, keep: &[usize]) -> FinPoset {
        let k = keep.len();
        let mut leq = BitGrid::new(k, k);
        for (p, &i) in keep.iter().enumerate() {
            for (q, &j) in keep.iter().enumerate() {
                leq.set(p, q, self.leq(i, j));
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        FinPoset { labels, leq }
    }

    fn permuted(&self, order: &[usize]) -> FinPoset {
        let n = self.size();
        debug_assert_eq!(order.len(), n);
        let labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        let mut leq = BitGrid::new(n, n);
        for p in 0..n {
            for q in 0..n {
                leq.set(p, q, self.leq.get(order[p], order[q]));
            }
        }
        FinPoset { labels, leq }
    }
}

/// Canonical element order: stable sort of the current order by height.
pub(crate) fn canonical_order(p: &FinPoset) -> Vec<usize> {
    let h = p.heights();
    let mut order: Vec<usize> = (0..p.size()).collect();
    order.sort_by_key(|&i| h[i]);
    order
}

pub(crate) fn transitive_close(leq: &mut BitGrid) {
    let n = leq.rows();
    for k in 0..n {
        for i in 0..n {
            if leq.get(i, k) {
                for j in 0..n {
                    if leq.get(k, j) {
                        leq.set(i, j, true);
                    }
                }
            }
        }
    }
}

//! Finite lattices: a poset together with total meet and join tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{BitGrid, OpTable};
use crate::poset::FinPoset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinLattice {
    poset: FinPoset,
    zero: usize,
    one: usize,
    meet: OpTable,
    join: OpTable,
}

impl FinLattice {
    /// Interprets a poset as a lattice. Fails with a witness pair when some
    /// meet or join does not exist.
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        if poset.is_empty() {
            return Err(Error::EmptyStructure);
        }
        let n = poset.size();
        let meet = bound_table(&poset, true)?;
        let join = bound_table(&poset, false)?;
        let mut zero = 0;
        let mut one = 0;
        for i in 0..n {
            zero = meet.get(zero, i);
            one = join.get(one, i);
        }
        Ok(FinLattice {
            poset,
            zero,
            one,
            meet,
            join,
        })
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn labels(&self) -> &[String] {
        self.poset.labels()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join.get(a, b)
    }

    pub fn meet_table(&self) -> &OpTable {
        &self.meet
    }

    pub fn join_table(&self) -> &OpTable {
        &self.join
    }

    /// Order-reversed lattice on the same elements: meet and join swap, zero
    /// and one swap, indices stay put.
    pub fn dual(&self) -> FinLattice {
        FinLattice {
            poset: self.poset.dual(),
            zero: self.one,
            one: self.zero,
            meet: self.join.clone(),
            join: self.meet.clone(),
        }
    }

    /// Upper covers of zero.
    pub fn atoms(&self) -> Vec<usize> {
        self.poset.upper_covers(self.zero)
    }

    pub(crate) fn join_irreducible_indices(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| i != self.zero && self.poset.lower_covers(i).len() == 1)
            .collect()
    }

    /// Subposet of elements with exactly one lower cover (zero excluded).
    pub fn join_irreducibles(&self) -> FinPoset {
        self.poset.induced(&self.join_irreducible_indices())
    }

    /// First triple (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z), if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Full law scan: table values are least upper and greatest lower bounds,
    /// zero and one bound everything. Constructors establish this; the scan
    /// is for loaded or hand-built data and for tests.
    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let bad = |msg: String| Err(Error::InvalidDocument(msg));
        for a in 0..n {
            if !self.leq(self.zero, a) || !self.leq(a, self.one) {
                return bad(format!("{:?} not between zero and one", self.label(a)));
            }
            for b in 0..n {
                let m = self.meet(a, b);
                if !self.leq(m, a) || !self.leq(m, b) {
                    return bad(format!("meet not a lower bound at ({a},{b})"));
                }
                let j = self.join(a, b);
                if !self.leq(a, j) || !self.leq(b, j) {
                    return bad(format!("join not an upper bound at ({a},{b})"));
                }
                for z in 0..n {
                    if self.leq(z, a) && self.leq(z, b) && !self.leq(z, m) {
                        return bad(format!("meet not greatest at ({a},{b})"));
                    }
                    if self.leq(a, z) && self.leq(b, z) && !self.leq(j, z) {
                        return bad(format!("join not least at ({a},{b})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn bound_table(poset: &FinPoset, lower: bool) -> Result<OpTable> {
    let n = poset.size();
    let mut t = OpTable::square(n);
    for a in 0..n {
        for b in 0..n {
            let ok = |z: usize| {
                if lower {
                    poset.leq(z, a) && poset.leq(z, b)
                } else {
                    poset.leq(a, z) && poset.leq(b, z)
                }
            };
            // The bound, if it exists, is the unique candidate comparable to
            // all others from the right side.
            let mut best: Option<usize> = None;
            for z in 0..n {
                if !ok(z) {
                    continue;
                }
                best = match best {
                    None => Some(z),
                    Some(cur) => {
                        if lower {
                            if poset.leq(cur, z) {
                                Some(z)
                            } else if poset.leq(z, cur) {
                                Some(cur)
                            } else {
                                None
                            }
                        } else if poset.leq(z, cur) {
                            Some(z)
                        } else if poset.leq(cur, z) {
                            Some(cur)
                        } else {
                            None
                        }
                    }
                };
                if best.is_none() {
                    break;
                }
            }
            // Incomparable intermediate candidates can still resolve; redo as
            // an explicit scan when the greedy pass bailed.
            if best.is_none() {
                best = (0..n).find(|&z| {
                    ok(z)
                        && (0..n).all(|w| {
                            !ok(w)
                                || if lower {
                                    poset.leq(w, z)
                                } else {
                                    poset.leq(z, w)
                                }
                        })
                });
            }
            match best {
                Some(z)
                    if (0..n).all(|w| {
                        !ok(w)
                            || if lower {
                                poset.leq(w, z)
                            } else {
                                poset.leq(z, w)
                            }
                    }) =>
                {
                    t.set(a, b, z)
                }
                _ => {
                    return Err(Error::NotALattice {
                        a: poset.label(a).to_string(),
                        b: poset.label(b).to_string(),
                        missing: if lower { "meet" } else { "join" },
                    })
                }
            }
        }
    }
    Ok(t)
}

/// Lattice of monotone maps from `p` into `l`, ordered componentwise.
///
/// Elements are labeled "(v0,...,vk)" by their value tuple over `p` in index
/// order, and numbered by (height, then lexicographic tuple).
pub fn function_lattice(l: &FinLattice, p: &FinPoset, guard: usize) -> Result<FinLattice> {
    match (l.size() as u128).checked_pow(p.size() as u32) {
        Some(total) if total <= guard as u128 => {}
        _ => {
            return Err(Error::SizeGuardExceeded {
                reached: guard.saturating_add(1),
                limit: guard,
            })
        }
    }
    // Assign values along a linear extension of p so monotonicity prunes.
    let ext: Vec<usize> = {
        let h = p.heights();
        let mut o: Vec<usize> = (0..p.size()).collect();
        o.sort_by_key(|&i| h[i]);
        o
    };
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut current = vec![usize::MAX; p.size()];
    enumerate_monotone(l, p, &ext, 0, &mut current, &mut maps);

    let k = maps.len();
    let mut leq = BitGrid::new(k, k);
    for i in 0..k {
        for j in 0..k {
            let le = maps[i].iter().zip(&maps[j]).all(|(&a, &b)| l.leq(a, b));
            leq.set(i, j, le);
        }
    }
    let labels: Vec<String> = maps
        .iter()
        .map(|m| {
            let parts: Vec<&str> = m.iter().map(|&v| l.label(v)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let poset = FinPoset::from_parts(labels, leq)?;
    let order = crate::poset::canonical_order(&poset);
    let poset = poset.induced(&order);
    let sorted_maps: Vec<Vec<usize>> = order.iter().map(|&i| maps[i].clone()).collect();

    let index: HashMap<Vec<usize>, usize> = sorted_maps
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let lookup = |m: Vec<usize>| -> usize { index[&m] };
    let meet = OpTable::from_fn(k, k, |i, j| {
        lookup(
            sorted_maps[i]
                .iter()
                .zip(&sorted_maps[j])
                .map(|(&a, &b)| l.meet(a, b))
                .collect(),
        )
    });
    let join = OpTable::from_fn(k, k, |i, j| {
        lookup(
            sorted_maps[i]
                .iter()
                .zip(&sorted_maps[j])
                .map(|(&a, &b)| l.join(a, b))
                .collect(),
        )
    });
    let zero = lookup(vec![l.zero(); p.size()]);
    let one = lookup(vec![l.one(); p.size()]);
    Ok(FinLattice {
        poset,
        zero,
        one,
        meet,
        join,
    })
}

fn enumerate_monotone(
    l: &FinLattice,
    p: &FinPoset,
    ext: &[usize],
    pos: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == ext.len() {
        out.push(current.clone());
        return;
    }
    let e = ext[pos];
    for v in 0..l.size() {
        let ok = ext[..pos].iter().all(|&q| {
            (!p.leq(q, e) || l.leq(current[q], v)) && (!p.leq(e, q) || l.leq(v, current[q]))
        });
        if ok {
            current[e] = v;
            enumerate_monotone(l, p, ext, pos + 1, current, out);
            current[e] = usize::MAX;
        }
    }
}

/// L[D]: the lattice of monotone maps from the join-irreducibles of a
/// distributive bounded lattice `d` into `l`.
pub fn l_of_d(l: &FinLattice, d: &FinLattice, guard: usize) -> Result<FinLattice> {
    if !d.is_distributive() {
        return Err(Error::NotDistributive);
    }
    function_lattice(l, &d.join_irreducibles(), guard)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn diamond() -> FinLattice {
        let p = FinPoset::from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        FinLattice::from_poset(p).unwrap()
    }

    #[test]
    fn diamond_tables() {
        let l = diamond();
        let (a, b) = (1, 2);
        assert_eq!(l.meet(a, b), 0);
        assert_eq!(l.join(a, b), 3);
        assert_eq!(l.zero(), 0);
        assert_eq!(l.one(), 3);
        l.validate().unwrap();
    }

    #[test]
    fn antichain_with_bottom_is_not_a_lattice() {
        let p = FinPoset::from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap();
        let err = FinLattice::from_poset(p).unwrap_err();
        assert!(
            matches!(err, Error::NotALattice { ref a, ref b, missing } if a == "a" && b == "b" && missing == "join")
        );
    }

    #[test]
    fn empty_poset_rejected() {
        let p = FinPoset::from_covers::<&str>(&[], &[]).unwrap();
        assert!(matches!(
            FinLattice::from_poset(p),
            Err(Error::EmptyStructure)
        ));
    }

    #[test]
    fn dual_swaps_operations_and_bounds() {
        let l = catalog("N5").unwrap();
        let d = l.dual();
        assert_eq!(d.zero(), l.one());
        assert_eq!(d.one(), l.zero());
        for a in 0..l.size() {
            for b in 0..l.size() {
                assert_eq!(d.meet(a, b), l.join(a, b));
                assert_eq!(d.leq(a, b), l.leq(b, a));
            }
        }
        assert_eq!(d.dual(), l);
    }

    #[test]
    fn atoms_of_m3() {
        let l = catalog("M3").unwrap();
        let atom_labels: Vec<&str> = l.atoms().iter().map(|&i| l.label(i)).collect();
        assert_eq!(atom_labels, vec!["p", "q", "r"]);
    }

    #[test]
    fn join_irreducibles_of_chain_and_diamond() {
        let c4 = catalog("chain:4").unwrap();
        let j = c4.join_irreducibles();
        assert_eq!(j.size(), 3);
        assert_eq!(j.covers().len(), 2);
        let b2 = catalog("bool:2").unwrap();
        let j = b2.join_irreducibles();
        assert_eq!(j.size(), 2);
        assert!(j.covers().is_empty());
    }

    #[test]
    fn join_irreducibles_of_n5() {
        // Oracle value: scanning lower covers of the pentagon 0<a<c<1, 0<b<1
        // gives a, b, c. The top has two lower covers and is excluded.
        let n5 = catalog("N5").unwrap();
        let j = n5.join_irreducibles();
        let mut labels: Vec<&str> = j.labels().iter().map(|s| s.as_str()).collect();
        labels.sort();
        assert_eq!(labels, vec!["a", "b", "c"]);
    }

    #[test]
    fn distributivity() {
        assert!(diamond().is_distributive());
        let m3 = catalog("M3").unwrap();
        let w = m3.distributivity_witness().unwrap();
        let labels = [m3.label(w.0), m3.label(w.1), m3.label(w.2)];
        assert!(labels.iter().all(|l| ["p", "q", "r"].contains(l)));
        assert!(!catalog("N5").unwrap().is_distributive());
    }

    #[test]
    fn function_lattice_over_antichain_is_power() {
        let c2 = catalog("chain:2").unwrap();
        let p = FinPoset::from_covers(&["x", "y"], &[]).unwrap();
        let f = function_lattice(&c2, &p, 1000).unwrap();
        assert_eq!(f.size(), 4);
        f.validate().unwrap();
        assert!(crate::iso::are_isomorphic(&f, &catalog("bool:2").unwrap()).is_some());
    }

    #[test]
    fn function_lattice_over_point_is_base() {
        let m3 = catalog("M3").unwrap();
        let p = FinPoset::from_covers(&["x"], &[]).unwrap();
        let f = function_lattice(&m3, &p, 1000).unwrap();
        assert!(crate::iso::are_isomorphic(&f, &m3).is_some());
    }

    #[test]
    fn function_lattice_guard() {
        let m3 = catalog("M3").unwrap();
        let p = catalog("bool:2").unwrap().poset().clone();
        let err = function_lattice(&m3, &p, 10).unwrap_err();
        assert!(matches!(err, Error::SizeGuardExceeded { limit: 10, .. }));
    }

    #[test]
    fn l_of_d_requires_distributive_argument() {
        let c2 = catalog("chain:2").unwrap();
        let m3 = catalog("M3").unwrap();
        assert!(matches!(
            l_of_d(&c2, &m3, 1000),
            Err(Error::NotDistributive)
        ));
    }

    #[test]
    fn l_of_d_chain_exponent() {
        // J(chain:3) is a 2-chain, so M3[chain:3] is the interval lattice of
        // M3: pairs x ≤ y. M3 has 12 such pairs.
        let m3 = catalog("M3").unwrap();
        let c3 = catalog("chain:3").unwrap();
        let f = l_of_d(&m3, &c3, 1000).unwrap();
        assert_eq!(f.size(), 12);
        f.validate().unwrap();
    }
}

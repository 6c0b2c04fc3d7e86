//! Lattice congruences and the congruence lattice.
//!
//! A lattice congruence is a partition compatible with both meet and join.
//! Principal congruences are produced by a closure worklist; the whole
//! congruence lattice is the join closure of the principal congruences of
//! covering pairs, which generate because a collapsed interval always
//! collapses a cover inside it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::BitGrid;
use crate::lattice::FinLattice;
use crate::partition;
use crate::poset::FinPoset;
use crate::semilattice::{FinJoinSemilattice, JoinCongruence};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeCongruence {
    carrier: FinLattice,
    block_of: Vec<usize>,
}

impl LatticeCongruence {
    pub fn new(carrier: FinLattice, mut block_of: Vec<usize>) -> Result<Self> {
        if block_of.len() != carrier.size() {
            return Err(Error::DimensionMismatch);
        }
        partition::normalize(&mut block_of);
        let n = carrier.size();
        for x in 0..n {
            for y in x + 1..n {
                if block_of[x] != block_of[y] {
                    continue;
                }
                for z in 0..n {
                    if block_of[carrier.join(x, z)] != block_of[carrier.join(y, z)]
                        || block_of[carrier.meet(x, z)] != block_of[carrier.meet(y, z)]
                    {
                        return Err(Error::NotACongruence(format!(
                            "{:?} ≡ {:?} is not compatible with {:?}",
                            carrier.label(x),
                            carrier.label(y),
                            carrier.label(z),
                        )));
                    }
                }
            }
        }
        Ok(LatticeCongruence { carrier, block_of })
    }

    pub fn from_blocks<S: AsRef<str>>(carrier: FinLattice, blocks: &[Vec<S>]) -> Result<Self> {
        let mut block_of = vec![usize::MAX; carrier.size()];
        for (b, blk) in blocks.iter().enumerate() {
            for l in blk {
                let i = carrier
                    .index_of(l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().to_string()))?;
                if block_of[i] != usize::MAX {
                    return Err(Error::NotACongruence(format!(
                        "{:?} appears in two blocks",
                        l.as_ref()
                    )));
                }
                block_of[i] = b;
            }
        }
        if let Some(missing) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotACongruence(format!(
                "{:?} appears in no block",
                carrier.label(missing)
            )));
        }
        Self::new(carrier, block_of)
    }

    pub fn equality(carrier: FinLattice) -> Self {
        let n = carrier.size();
        LatticeCongruence {
            carrier,
            block_of: partition::finest(n),
        }
    }

    pub fn total(carrier: FinLattice) -> Self {
        let n = carrier.size();
        LatticeCongruence {
            carrier,
            block_of: partition::coarsest(n),
        }
    }

    /// The smallest congruence identifying `x` and `y`.
    ///
    /// Merges propagate through a worklist: whenever two elements become
    /// equal, their joins and meets with every third element are enqueued.
    /// Chains of merges transport along ∨ and ∧, so the result is
    /// substitution closed.
    pub fn principal(carrier: &FinLattice, x: usize, y: usize) -> Self {
        let n = carrier.size();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut work = vec![(x, y)];
        while let Some((u, v)) = work.pop() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                continue;
            }
            parent[ru] = rv;
            for z in 0..n {
                work.push((carrier.join(u, z), carrier.join(v, z)));
                work.push((carrier.meet(u, z), carrier.meet(v, z)));
            }
        }
        let mut block_of: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        partition::normalize(&mut block_of);
        debug_assert!(Self::new(carrier.clone(), block_of.clone()).is_ok());
        LatticeCongruence {
            carrier: carrier.clone(),
            block_of,
        }
    }

    pub fn carrier(&self) -> &FinLattice {
        &self.carrier
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn num_blocks(&self) -> usize {
        partition::num_blocks(&self.block_of)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        partition::blocks(&self.block_of)
    }

    pub fn is_finer_than(&self, other: &LatticeCongruence) -> Result<bool> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok(partition::is_finer(&self.block_of, &other.block_of))
    }

    pub fn join_with(&self, other: &LatticeCongruence) -> Result<LatticeCongruence> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        let block_of = partition::join(&self.block_of, &other.block_of);
        Ok(LatticeCongruence {
            carrier: self.carrier.clone(),
            block_of,
        })
    }

    pub fn meet_with(&self, other: &LatticeCongruence) -> Result<LatticeCongruence> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        let block_of = partition::meet(&self.block_of, &other.block_of);
        Ok(LatticeCongruence {
            carrier: self.carrier.clone(),
            block_of,
        })
    }

    /// The same partition viewed as a congruence of the {∨,0}-reduct.
    pub fn join_restriction(&self) -> JoinCongruence {
        JoinCongruence::new(
            FinJoinSemilattice::join_reduct(&self.carrier),
            self.block_of.clone(),
        )
        .expect("a lattice congruence respects joins")
    }

    /// The quotient lattice, with blocks ordered and labeled by their least
    /// members.
    pub fn quotient(&self) -> FinLattice {
        let blocks = self.blocks();
        let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
        let labels: Vec<String> = reps
            .iter()
            .map(|&r| self.carrier.label(r).to_string())
            .collect();
        let k = reps.len();
        let mut leq = BitGrid::new(k, k);
        for p in 0..k {
            for q in 0..k {
                leq.set(
                    p,
                    q,
                    self.block_of[self.carrier.join(reps[p], reps[q])] == q,
                );
            }
        }
        let poset = FinPoset::from_parts(labels, leq).expect("quotient blocks form a poset");
        FinLattice::from_poset(poset).expect("quotient of a lattice is a lattice")
    }
}

/// The congruence lattice of `l`, holding every congruence in a fixed
/// canonical order: finer congruences first (block count descending), ties
/// broken lexicographically. The first member is always equality and the
/// last is the total congruence.
#[derive(Clone, Debug)]
pub struct ConLattice {
    base: FinLattice,
    members: Vec<LatticeCongruence>,
    index: HashMap<Vec<usize>, usize>,
}

pub fn congruence_lattice(l: &FinLattice) -> ConLattice {
    let n = l.size();
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut push = |p: Vec<usize>, parts: &mut Vec<Vec<usize>>| {
        if !seen.contains_key(&p) {
            seen.insert(p.clone(), parts.len());
            parts.push(p);
        }
    };
    push(partition::finest(n), &mut parts);
    for (a, b) in l.poset().covers() {
        push(LatticeCongruence::principal(l, a, b).block_of, &mut parts);
    }
    let mut i = 0;
    while i < parts.len() {
        for j in 0..i {
            let joined = partition::join(&parts[i], &parts[j]);
            push(joined, &mut parts);
        }
        i += 1;
    }
    parts.sort_by(|p, q| {
        partition::num_blocks(q)
            .cmp(&partition::num_blocks(p))
            .then_with(|| p.cmp(q))
    });
    let index: HashMap<Vec<usize>, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let members = parts
        .into_iter()
        .map(|block_of| LatticeCongruence {
            carrier: l.clone(),
            block_of,
        })
        .collect();
    ConLattice {
        base: l.clone(),
        members,
        index,
    }
}

impl ConLattice {
    pub fn base(&self) -> &FinLattice {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[LatticeCongruence] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &LatticeCongruence {
        &self.members[i]
    }

    pub fn index_of(&self, c: &LatticeCongruence) -> Option<usize> {
        self.index.get(&c.block_of).copied()
    }

    pub fn index_of_partition(&self, block_of: &[usize]) -> Option<usize> {
        self.index.get(block_of).copied()
    }

    /// The congruence lattice as a lattice, elements labeled c0, c1, ...
    /// in member order.
    pub fn to_lattice(&self) -> FinLattice {
        let k = self.members.len();
        let labels: Vec<String> = (0..k).map(|i| format!("c{i}")).collect();
        let mut leq = BitGrid::new(k, k);
        for i in 0..k {
            for j in 0..k {
                leq.set(
                    i,
                    j,
                    partition::is_finer(&self.members[i].block_of, &self.members[j].block_of),
                );
            }
        }
        let poset = FinPoset::from_parts(labels, leq).expect("refinement orders congruences");
        FinLattice::from_poset(poset).expect("congruences form a lattice")
    }

    /// The congruence lattice as a join-semilattice with zero.
    pub fn join_semilattice(&self) -> FinJoinSemilattice {
        FinJoinSemilattice::join_reduct(&self.to_lattice())
    }
}

/// Whether `l` has exactly two congruences. Needs at least two elements.
///
/// It is enough to check that every covering pair generates the total
/// congruence, because every congruence is a join of such principals.
pub fn is_simple(l: &FinLattice) -> Result<bool> {
    if l.size() < 2 {
        return Err(Error::TrivialLattice);
    }
    Ok(l.poset()
        .covers()
        .into_iter()
        .all(|(a, b)| LatticeCongruence::principal(l, a, b).num_blocks() == 1))
}

/// Whether `l` has a least nontrivial congruence. Needs at least two
/// elements. The meet of all cover principals is that least candidate.
pub fn is_subdirectly_irreducible(l: &FinLattice) -> Result<bool> {
    if l.size() < 2 {
        return Err(Error::TrivialLattice);
    }
    let monolith = l
        .poset()
        .covers()
        .into_iter()
        .map(|(a, b)| LatticeCongruence::principal(l, a, b).block_of)
        .reduce(|p, q| partition::meet(&p, &q))
        .expect("a nontrivial lattice has covers");
    Ok(partition::num_blocks(&monolith) < l.size())
}

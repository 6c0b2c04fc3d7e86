//! Set partitions on index carriers, stored as a block id per element.
//!
//! The normalized form numbers blocks by first occurrence, so `block_of[0]`
//! is always 0 and equal partitions have equal vectors.

/// Renumbers block ids in order of first occurrence.
pub(crate) fn normalize(block_of: &mut [usize]) {
    let mut remap = vec![usize::MAX; block_of.len()];
    let mut next = 0;
    for b in block_of.iter_mut() {
        if remap[*b] == usize::MAX {
            remap[*b] = next;
            next += 1;
        }
        *b = remap[*b];
    }
}

pub(crate) fn num_blocks(block_of: &[usize]) -> usize {
    block_of.iter().copied().max().map_or(0, |m| m + 1)
}

/// Blocks as sorted index lists, ordered by least member.
pub(crate) fn blocks(block_of: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); num_blocks(block_of)];
    for (i, &b) in block_of.iter().enumerate() {
        out[b].push(i);
    }
    out.sort_by_key(|blk| blk[0]);
    out
}

/// True when every `a` block lies inside a single `b` block.
pub(crate) fn is_finer(a: &[usize], b: &[usize]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut seen = vec![usize::MAX; num_blocks(a)];
    for (i, &ba) in a.iter().enumerate() {
        if seen[ba] == usize::MAX {
            seen[ba] = b[i];
        } else if seen[ba] != b[i] {
            return false;
        }
    }
    true
}

/// Common refinement: x and y together iff together in both arguments.
pub(crate) fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    debug_assert_eq!(a.len(), b.len());
    let mut ids = std::collections::HashMap::new();
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        let next = ids.len();
        out.push(*ids.entry((a[i], b[i])).or_insert(next));
    }
    normalize(&mut out);
    out
}

/// Finest common coarsening, via union-find over the two block structures.
pub(crate) fn join(a: &[usize], b: &[usize]) -> Vec<usize> {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for part in [a, b] {
        let mut first = vec![usize::MAX; num_blocks(part)];
        for (i, &blk) in part.iter().enumerate() {
            if first[blk] == usize::MAX {
                first[blk] = i;
            } else {
                let (ra, rb) = (find(&mut parent, first[blk]), find(&mut parent, i));
                parent[ra] = rb;
            }
        }
    }
    let mut out: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    normalize(&mut out);
    out
}

/// The partition into singletons.
pub(crate) fn finest(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// The one-block partition.
pub(crate) fn coarsest(n: usize) -> Vec<usize> {
    vec![0; n]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_renumbers_by_first_occurrence() {
        let mut p = vec![2, 0, 2, 1];
        normalize(&mut p);
        assert_eq!(p, vec![0, 1, 0, 2]);
    }

    #[test]
    fn meet_and_join_bracket_the_arguments() {
        let a = vec![0, 0, 1, 1, 2];
        let b = vec![0, 1, 1, 0, 0];
        let m = meet(&a, &b);
        let j = join(&a, &b);
        assert!(is_finer(&m, &a) && is_finer(&m, &b));
        assert!(is_finer(&a, &j) && is_finer(&b, &j));
        assert_eq!(m, vec![0, 1, 2, 3, 4]);
        assert_eq!(j, coarsest(5));
    }

    #[test]
    fn join_with_finest_is_identity() {
        let a = vec![0, 1, 0, 2];
        assert_eq!(join(&a, &finest(4)), a);
        assert_eq!(meet(&a, &coarsest(4)), a);
    }

    #[test]
    fn blocks_ordered_by_least_member() {
        let p = vec![0, 1, 1, 0, 2];
        assert_eq!(blocks(&p), vec![vec![0, 3], vec![1, 2], vec![4]]);
    }
}

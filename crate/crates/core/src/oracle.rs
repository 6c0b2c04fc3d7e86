//! Brute-force reference implementations.
//!
//! Everything here computes straight from definitions, with no shortcuts, so
//! the optimized constructions elsewhere in the crate can be checked against
//! an independent answer on small instances. Sizes are expected to be tiny;
//! none of these functions tries to be fast.

use crate::grid::BitGrid;
use crate::iso::{verify_witness, FiniteAlgebra, IsoWitness};
use crate::lattice::FinLattice;
use crate::poset::FinPoset;
use crate::semilattice::FinJoinSemilattice;

/// Isomorphism by trying every bijection.
pub fn isomorphic_by_permutations<T: FiniteAlgebra>(x: &T, y: &T) -> bool {
    if x.size() != y.size() {
        return false;
    }
    let n = x.size();
    assert!(n <= 8, "permutation oracle is for small structures");
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if verify_witness(
            x,
            y,
            &IsoWitness {
                mapping: perm.clone(),
            },
        ) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// All partitions of {0..n} as normalized block vectors, by restricted
/// growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(pos: usize, max_used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max_used + 1 {
            cur[pos] = b;
            rec(pos + 1, max_used.max(b), cur, out);
        }
    }
    if n == 0 {
        return vec![vec![]];
    }
    cur[0] = 0;
    rec(1, 0, &mut cur, &mut out);
    out
}

fn respects_join(s: &FinJoinSemilattice, p: &[usize]) -> bool {
    let n = s.size();
    (0..n)
        .all(|x| (0..n).all(|y| p[x] != p[y] || (0..n).all(|z| p[s.join(x, z)] == p[s.join(y, z)])))
}

/// All join-congruences of `s`, filtered from all set partitions.
pub fn join_congruences(s: &FinJoinSemilattice) -> Vec<Vec<usize>> {
    set_partitions(s.size())
        .into_iter()
        .filter(|p| respects_join(s, p))
        .collect()
}

/// All lattice congruences of `l`: partitions compatible with ∨ and ∧.
pub fn lattice_congruences(l: &FinLattice) -> Vec<Vec<usize>> {
    let n = l.size();
    set_partitions(n)
        .into_iter()
        .filter(|p| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    p[x] != p[y]
                        || (0..n).all(|z| {
                            p[l.join(x, z)] == p[l.join(y, z)] && p[l.meet(x, z)] == p[l.meet(y, z)]
                        })
                })
            })
        })
        .collect()
}

/// The smallest lattice congruence of `l` identifying `x` and `y`.
pub fn principal_lattice_congruence_slow(l: &FinLattice, x: usize, y: usize) -> Vec<usize> {
    lattice_congruences(l)
        .into_iter()
        .filter(|p| p[x] == p[y])
        .reduce(|a, b| crate::partition::meet(&a, &b))
        .expect("the one-block partition identifies everything")
}

/// All bi-ideals of A x B, by filtering every subset of the grid.
///
/// A subset qualifies when it contains the two border rows through zero, is
/// closed downward in both coordinates, and is closed under joins in either
/// coordinate with the other fixed.
pub fn biideal_subsets(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> Vec<BitGrid> {
    let (na, nb) = (a.size(), b.size());
    let bits = na * nb;
    assert!(bits <= 20, "subset oracle is for small grids");
    let slot = |x: usize, y: usize| x * nb + y;
    let mut out = Vec::new();
    'subset: for mask in 0u32..1 << bits {
        let has = |x: usize, y: usize| mask >> slot(x, y) & 1 == 1;
        for x in 0..na {
            if !has(x, b.zero()) {
                continue 'subset;
            }
        }
        for y in 0..nb {
            if !has(a.zero(), y) {
                continue 'subset;
            }
        }
        for x in 0..na {
            for y in 0..nb {
                if !has(x, y) {
                    continue;
                }
                for u in 0..na {
                    for v in 0..nb {
                        if a.leq(u, x) && b.leq(v, y) && !has(u, v) {
                            continue 'subset;
                        }
                    }
                }
                for u in 0..na {
                    if has(u, y) && !has(a.join(x, u), y) {
                        continue 'subset;
                    }
                }
                for v in 0..nb {
                    if has(x, v) && !has(x, b.join(y, v)) {
                        continue 'subset;
                    }
                }
            }
        }
        let mut g = BitGrid::new(na, nb);
        for x in 0..na {
            for y in 0..nb {
                if has(x, y) {
                    g.set(x, y, true);
                }
            }
        }
        out.push(g);
    }
    out.sort_by(|p, q| p.canonical_cmp(q));
    out
}

/// All monotone maps between posets, as image vectors.
pub fn monotone_maps(p: &FinPoset, q: &FinPoset) -> Vec<Vec<usize>> {
    let (np, nq) = (p.size(), q.size());
    let mut out = Vec::new();
    let mut image = vec![0usize; np];
    loop {
        let ok = (0..np).all(|i| (0..np).all(|j| !p.leq(i, j) || q.leq(image[i], image[j])));
        if ok {
            out.push(image.clone());
        }
        let mut pos = 0;
        loop {
            if pos == np {
                return out;
            }
            image[pos] += 1;
            if image[pos] < nq {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

/// All {∨,0}-homomorphisms, by filtering every function.
pub fn join_homs_by_exhaustion(a: &FinJoinSemilattice, b: &FinJoinSemilattice) -> Vec<Vec<usize>> {
    let (na, nb) = (a.size(), b.size());
    let mut out = Vec::new();
    let mut image = vec![0usize; na];
    loop {
        let ok = image[a.zero()] == b.zero()
            && (0..na).all(|x| (0..na).all(|y| image[a.join(x, y)] == b.join(image[x], image[y])));
        if ok {
            out.push(image.clone());
        }
        let mut pos = 0;
        loop {
            if pos == na {
                out.sort();
                return out;
            }
            image[pos] += 1;
            if image[pos] < nb {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

/// All {∨,∧,0}-homomorphisms, by filtering every function.
pub fn lattice_homs_by_exhaustion(a: &FinLattice, b: &FinLattice) -> Vec<Vec<usize>> {
    let (na, nb) = (a.size(), b.size());
    let mut out = Vec::new();
    let mut image = vec![0usize; na];
    loop {
        let ok = image[a.zero()] == b.zero()
            && (0..na).all(|x| {
                (0..na).all(|y| {
                    image[a.join(x, y)] == b.join(image[x], image[y])
                        && image[a.meet(x, y)] == b.meet(image[x], image[y])
                })
            });
        if ok {
            out.push(image.clone());
        }
        let mut pos = 0;
        loop {
            if pos == na {
                out.sort();
                return out;
            }
            image[pos] += 1;
            if image[pos] < nb {
                break;
            }
            image[pos] = 0;
            pos += 1;
        }
    }
}

/// The product order on label pairs, row major.
pub fn product_poset(p: &FinPoset, q: &FinPoset) -> FinPoset {
    let (np, nq) = (p.size(), q.size());
    let mut labels = Vec::with_capacity(np * nq);
    for i in 0..np {
        for j in 0..nq {
            labels.push(format!("({},{})", p.label(i), q.label(j)));
        }
    }
    let mut leq = BitGrid::new(np * nq, np * nq);
    for i in 0..np * nq {
        for j in 0..np * nq {
            leq.set(i, j, p.leq(i / nq, j / nq) && q.leq(i % nq, j % nq));
        }
    }
    FinPoset::from_parts(labels, leq).expect("product of posets is a poset")
}

/// The lattice of down-sets of `p`, ordered by inclusion. Labels list the
/// maximal members of each down-set.
pub fn downset_lattice(p: &FinPoset) -> FinLattice {
    let n = p.size();
    assert!(n <= 16, "down-set oracle is for small posets");
    let mut down_of = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if p.leq(j, i) {
                down_of[i] |= 1 << j;
            }
        }
    }
    let mut sets: Vec<u32> = (0u32..1 << n)
        .filter(|&m| (0..n).all(|i| m >> i & 1 == 0 || m & down_of[i] == down_of[i]))
        .collect();
    sets.sort_by_key(|&m| (m.count_ones(), m));
    let labels: Vec<String> = sets
        .iter()
        .map(|&m| {
            let maxes: Vec<&str> = (0..n)
                .filter(|&i| {
                    m >> i & 1 == 1 && (0..n).all(|j| i == j || m >> j & 1 == 0 || !p.lt(i, j))
                })
                .map(|i| p.label(i))
                .collect();
            format!("{{{}}}", maxes.join(","))
        })
        .collect();
    let mut leq = BitGrid::new(sets.len(), sets.len());
    for (i, &s) in sets.iter().enumerate() {
        for (j, &t) in sets.iter().enumerate() {
            leq.set(i, j, s & !t == 0);
        }
    }
    let poset = FinPoset::from_parts(labels, leq).expect("down-sets form a poset");
    FinLattice::from_poset(poset).expect("down-sets form a lattice")
}

/// Every join-semilattice with zero of size at most `max`, one per
/// isomorphism class, smallest first. Elements are labeled e0, e1, ...
pub fn small_semilattices(max: usize) -> Vec<FinJoinSemilattice> {
    assert!(max <= 6, "semilattice census is for small sizes");
    let mut out: Vec<FinJoinSemilattice> = Vec::new();
    for n in 1..=max {
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let mut leq = BitGrid::new(n, n);
            for i in 0..n {
                leq.set(i, i, true);
            }
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    leq.set(i, j, true);
                }
            }
            let mut closed = leq.clone();
            crate::poset::transitive_close(&mut closed);
            if closed != leq {
                continue;
            }
            let poset = match FinPoset::from_parts(labels.clone(), leq) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let s = match FinJoinSemilattice::from_poset(poset) {
                Ok(s) => s,
                Err(_) => continue,
            };
            if out
                .iter()
                .all(|t| crate::iso::are_isomorphic(t, &s).is_none())
            {
                out.push(s);
            }
        }
    }
    out
}

/// The subsets of an n-by-n grid generated by the rectangles X x Y under set
/// union, as a join-semilattice with the empty set as zero. Cell (i, j) is
/// bit i*n + j; elements are ordered by (popcount, mask) and labeled by their
/// mask value.
pub fn rectangle_union_semilattice(n: usize) -> FinJoinSemilattice {
    assert!(n * n <= 16, "rectangle oracle is for small grids");
    let mut seen: Vec<u32> = vec![0];
    for xmask in 1u32..1 << n {
        for ymask in 1u32..1 << n {
            let mut rect = 0u32;
            for i in 0..n {
                for j in 0..n {
                    if xmask >> i & 1 == 1 && ymask >> j & 1 == 1 {
                        rect |= 1 << (i * n + j);
                    }
                }
            }
            if !seen.contains(&rect) {
                seen.push(rect);
            }
        }
    }
    let mut i = 0;
    while i < seen.len() {
        for j in 0..i {
            let u = seen[i] | seen[j];
            if !seen.contains(&u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.sort_by_key(|&m| (m.count_ones(), m));
    let pos = |m: u32| seen.iter().position(|&s| s == m).unwrap();
    let labels: Vec<String> = seen.iter().map(|&m| format!("m{m}")).collect();
    let join = crate::grid::OpTable::from_fn(seen.len(), seen.len(), |i, j| pos(seen[i] | seen[j]));
    FinJoinSemilattice::from_join_table(labels, join).expect("unions form a semilattice")
}

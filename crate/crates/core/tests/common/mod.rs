#![allow(dead_code)]

use loopwork::products::MultiPhiSystem;
use loopwork::search::random_reduced_loop;
use loopwork::set::ElementSet;
use loopwork::table::CayleyTable;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_perm<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

/// Random isotope of a random loop: rows and columns permuted independently.
pub fn random_quasigroup<R: Rng>(n: usize, rng: &mut R) -> CayleyTable {
    let base = random_reduced_loop(n, rng).unwrap();
    let r = random_perm(n, rng);
    let c = random_perm(n, rng);
    CayleyTable::from_fn(n, |a, b| base.product(r[a - 1], c[b - 1])).unwrap()
}

/// `x∘y = σ(x + y)` over Z_m: a commutative quasigroup.
pub fn random_commutative_quasigroup<R: Rng>(m: usize, rng: &mut R) -> CayleyTable {
    let s = random_perm(m, rng);
    CayleyTable::from_fn(m, |a, b| s[(a + b - 2) % m]).unwrap()
}

/// A random loop with a random relabeling, so the identity is rarely 1.
pub fn random_loop<R: Rng>(n: usize, rng: &mut R) -> CayleyTable {
    let t = random_reduced_loop(n, rng).unwrap();
    t.relabel(&random_perm(n, rng)).unwrap()
}

pub fn cyclic(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |a, b| (a + b - 2) % n + 1).unwrap()
}

/// Every closed nonempty subset, by scanning all 2^n masks.
pub fn brute_closed_subsets(t: &CayleyTable) -> Vec<ElementSet> {
    let n = t.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let s = ElementSet::from_bits(mask);
        let closed = s
            .iter()
            .all(|a| s.iter().all(|b| s.contains(t.product(a, b))));
        if closed {
            out.push(s);
        }
    }
    out.sort();
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(a: &CayleyTable, b: &CayleyTable) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        let ok = (1..=n)
            .all(|x| (1..=n).all(|y| p[a.product(x, y) - 1] == b.product(p[x - 1], p[y - 1])));
        if ok {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

/// Least flattened table over all relabelings fixing element 1.
pub fn brute_canonical(t: &CayleyTable) -> Vec<usize> {
    let n = t.order();
    let mut rest: Vec<usize> = (2..=n).collect();
    let mut best: Option<Vec<usize>> = None;
    loop {
        let mut perm = vec![1];
        perm.extend(&rest);
        let flat: Vec<usize> = t.relabel(&perm).unwrap().rows().concat();
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
        if !next_permutation(&mut rest) {
            return best.unwrap();
        }
    }
}

/// Random generating system with a loop `E` (identity 1) and `k²` loops with
/// common identity 1; symmetric when asked (`φ_pq = φ_qp`).
pub fn random_type_a<R: Rng>(k: usize, m: usize, symmetric: bool, rng: &mut R) -> MultiPhiSystem {
    let e = random_reduced_loop(k, rng).unwrap();
    let mut phi = vec![None; k * k];
    for p in 0..k {
        for q in 0..k {
            if phi[p * k + q].is_none() {
                let t = random_reduced_loop(m, rng).unwrap();
                if symmetric {
                    phi[q * k + p] = Some(t.clone());
                }
                phi[p * k + q] = Some(t);
            }
        }
    }
    MultiPhiSystem::new(e, phi.into_iter().map(Option::unwrap).collect()).unwrap()
}

pub fn random_quasigroup_system<R: Rng>(k: usize, m: usize, rng: &mut R) -> MultiPhiSystem {
    let e = random_quasigroup(k, rng);
    let phi = (0..k * k).map(|_| random_quasigroup(m, rng)).collect();
    MultiPhiSystem::new(e, phi).unwrap()
}

/// The E-partition cells `B_i = {m(i-1)+1, ..., mi}`.
pub fn e_partition(k: usize, m: usize) -> Vec<ElementSet> {
    (0..k)
        .map(|i| ElementSet::from_elements(i * m + 1..=(i + 1) * m))
        .collect()
}

/// `{(e_i, c)}` for a fixed `c`, as flattened indices.
pub fn c_slice(k: usize, m: usize, c: usize) -> ElementSet {
    ElementSet::from_elements((0..k).map(|i| i * m + c))
}

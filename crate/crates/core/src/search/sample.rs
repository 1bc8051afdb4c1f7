use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::set::MAX_ORDER;
use crate::table::CayleyTable;

/// A random loop of order `n` with identity 1, by randomized backtracking.
///
/// Not uniform over loops; meant for tests and fuzzing.
pub fn random_reduced_loop<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CayleyTable> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut cells = vec![u8::MAX; n * n];
    let mut row_used = vec![0u64; n];
    let mut col_used = vec![0u64; n];
    for j in 0..n {
        cells[j] = j as u8;
        cells[j * n] = j as u8;
        row_used[0] |= 1 << j;
        col_used[0] |= 1 << j;
        row_used[j] |= 1 << j;
        col_used[j] |= 1 << j;
    }
    let order: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let mut budget = 200_000usize;
    loop {
        if fill(
            &order,
            0,
            n,
            &mut cells,
            &mut row_used,
            &mut col_used,
            rng,
            &mut budget,
        ) {
            return Ok(CayleyTable::from_raw(n, cells));
        }
        // restart with a fresh budget after a dead end
        budget = 200_000;
    }
}

#[allow(clippy::too_many_arguments)]
fn fill<R: Rng + ?Sized>(
    order: &[(usize, usize)],
    depth: usize,
    n: usize,
    cells: &mut [u8],
    row_used: &mut [u64],
    col_used: &mut [u64],
    rng: &mut R,
    budget: &mut usize,
) -> bool {
    if depth == order.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let (i, j) = order[depth];
    let free = !(row_used[i] | col_used[j]);
    let mut values: Vec<usize> = (0..n).filter(|&v| free & (1 << v) != 0).collect();
    values.shuffle(rng);
    for v in values {
        cells[i * n + j] = v as u8;
        row_used[i] |= 1 << v;
        col_used[j] |= 1 << v;
        if fill(order, depth + 1, n, cells, row_used, col_used, rng, budget) {
            return true;
        }
        row_used[i] &= !(1 << v);
        col_used[j] &= !(1 << v);
        cells[i * n + j] = u8::MAX;
        if *budget == 0 {
            return false;
        }
    }
    false
}

//! Smith normal form invariants and prime-field rank.
//!
//! The integer path runs in two phases. A sparse phase repeatedly picks a
//! `±1` entry (preferring rows with few entries), clears its row with column
//! operations and drops its row and column, contributing one invariant factor
//! `1`. Boundary matrices of the complexes studied here collapse almost
//! entirely in this phase. Whatever survives is copied into a dense
//! arbitrary-precision matrix and diagonalised with minimal-absolute-value
//! pivoting; a final gcd/lcm pass turns the diagonal into a divisibility
//! chain. If an `i64` overflows in the sparse phase the whole matrix is
//! redone densely.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// Nonzero invariant factors `d_1 | d_2 | ...` (all positive). The length is
/// the rank.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let (units, rest) = match sparse_unit_phase(m) {
        Some(split) => split,
        None => (0, dense_from(m)),
    };
    let mut out: Vec<BigInt> = std::iter::repeat_n(BigInt::one(), units).collect();
    out.extend(dense_invariants(rest));
    out
}

/// Rank of `m` (number of nonzero invariant factors).
pub fn integer_rank(m: &IntegerMatrix) -> usize {
    smith_normal_form(m).len()
}

type Line = Vec<(usize, i64)>;

/// Returns the number of unit pivots and the remaining dense block, or `None`
/// on `i64` overflow.
fn sparse_unit_phase(m: &IntegerMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    // lines are the columns of m; positions are row indices
    let mut lines: Vec<Line> = (0..m.ncols()).map(|c| m.column(c).to_vec()).collect();
    let mut line_alive = vec![true; lines.len()];
    let mut pos_alive = vec![true; m.nrows()];
    let mut occupancy: Vec<Vec<usize>> = vec![Vec::new(); m.nrows()];
    for (l, line) in lines.iter().enumerate() {
        for &(pos, _) in line {
            occupancy[pos].push(l);
        }
    }

    let mut units = 0usize;
    let mut scratch: Line = Vec::new();
    loop {
        let mut progress = false;
        for l in 0..lines.len() {
            if !line_alive[l] {
                continue;
            }
            let pivot = lines[l]
                .iter()
                .filter(|&&(pos, v)| pos_alive[pos] && v.abs() == 1)
                .min_by_key(|&&(pos, _)| (occupancy[pos].len(), pos))
                .copied();
            let Some((x, u)) = pivot else { continue };
            let pivot_line = std::mem::take(&mut lines[l]);
            let others = std::mem::take(&mut occupancy[x]);
            for o in others {
                if o == l || !line_alive[o] {
                    continue;
                }
                let Ok(at) = lines[o].binary_search_by_key(&x, |e| e.0) else {
                    continue;
                };
                // u is its own inverse
                let factor = lines[o][at].1.checked_mul(u)?;
                subtract_scaled(
                    &lines[o],
                    factor,
                    &pivot_line,
                    &pos_alive,
                    &mut scratch,
                    |p| occupancy[p].push(o),
                )?;
                std::mem::swap(&mut lines[o], &mut scratch);
            }
            line_alive[l] = false;
            pos_alive[x] = false;
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let mut pos_index = vec![usize::MAX; m.nrows()];
    let mut nrows = 0;
    for (p, alive) in pos_alive.iter().enumerate() {
        if *alive {
            pos_index[p] = nrows;
            nrows += 1;
        }
    }
    let survivors: Vec<&Line> = lines
        .iter()
        .zip(&line_alive)
        .filter(|(line, alive)| **alive && line.iter().any(|&(p, _)| pos_alive[p]))
        .map(|(line, _)| line)
        .collect();
    let mut dense = vec![vec![BigInt::zero(); survivors.len()]; nrows];
    for (c, line) in survivors.iter().enumerate() {
        for &(p, v) in line.iter() {
            if pos_alive[p] {
                dense[pos_index[p]][c] = BigInt::from(v);
            }
        }
    }
    Some((units, dense))
}

/// `out = a - factor * b`, skipping dead positions. Calls `on_new` for each
/// position that is nonzero in `out` but absent from `a`.
fn subtract_scaled(
    a: &Line,
    factor: i64,
    b: &Line,
    alive: &[bool],
    out: &mut Line,
    mut on_new: impl FnMut(usize),
) -> Option<()> {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            if alive[a[i].0] {
                out.push(a[i]);
            }
            i += 1;
        } else if take_b {
            let (p, v) = b[j];
            if alive[p] {
                let nv = v.checked_mul(factor)?.checked_neg()?;
                if nv != 0 {
                    out.push((p, nv));
                    on_new(p);
                }
            }
            j += 1;
        } else {
            let p = a[i].0;
            if alive[p] {
                let nv = a[i].1.checked_sub(b[j].1.checked_mul(factor)?)?;
                if nv != 0 {
                    out.push((p, nv));
                }
            }
            i += 1;
            j += 1;
        }
    }
    Some(())
}

fn dense_from(m: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    m.to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect()
}

/// Diagonalises `a` by unimodular row and column operations and returns the
/// nonzero invariant factors in divisibility order.
fn dense_invariants(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // minimal |entry| over the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => a[i][j].abs() < a[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                    if a[i][j].abs().is_one() {
                        break;
                    }
                }
            }
            if best.is_some_and(|(bi, bj)| a[bi][bj].abs().is_one()) {
                break;
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[t];
                for j in t..cols {
                    if !pivot_row[j].is_zero() {
                        tail[0][j] -= &q * &pivot_row[j];
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    if !a[i][t].is_zero() {
                        let delta = &q * &a[i][t];
                        a[i][j] -= delta;
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remainder in row t / column t onto the pivot
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // gcd/lcm normalisation into a divisibility chain
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Rank over the prime field `F_p` by column reduction on lowest nonzero rows.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> Result<usize> {
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::Domain(format!(
            "modulus {p} is not a prime below 2^32"
        )));
    }
    let reduce = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivot_of_low: Vec<Option<usize>> = vec![None; m.nrows()];
    let mut basis: Vec<Vec<(usize, u64)>> = Vec::new();
    let mut scratch = Vec::new();
    for c in 0..m.ncols() {
        let mut v: Vec<(usize, u64)> = m
            .column(c)
            .iter()
            .map(|&(r, x)| (r, reduce(x)))
            .filter(|&(_, x)| x != 0)
            .collect();
        while let Some(&(low, lv)) = v.last() {
            let Some(j) = pivot_of_low[low] else {
                pivot_of_low[low] = Some(basis.len());
                basis.push(v);
                break;
            };
            let b = &basis[j];
            let inv = mod_pow(b.last().expect("nonzero pivot").1, p - 2, p);
            let factor = mul_mod(lv, inv, p);
            axpy_mod(&v, factor, b, p, &mut scratch);
            std::mem::swap(&mut v, &mut scratch);
        }
    }
    Ok(basis.len())
}

/// `out = a - factor * b` over `F_p`.
fn axpy_mod(
    a: &[(usize, u64)],
    factor: u64,
    b: &[(usize, u64)],
    p: u64,
    out: &mut Vec<(usize, u64)>,
) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = (p - mul_mod(b[j].1, factor, p)) % p;
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = (a[i].1 + p - mul_mod(b[j].1, factor, p)) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

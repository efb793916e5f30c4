//! Exact integer linear algebra: fraction-free rank, rank mod p, Smith invariants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

fn width(rows: &[Vec<i64>]) -> usize {
    let n = rows.first().map_or(0, |r| r.len());
    assert!(rows.iter().all(|r| r.len() == n), "ragged matrix");
    n
}

/// Eliminates pivots equal to ±1 with unimodular row operations.
///
/// Returns the number of pivots removed and the remaining block (pivot rows and
/// columns deleted), whose Smith form together with that many 1s is the Smith
/// form of `rows`. `None` if an entry overflows `i64`.
fn unit_pivot_reduce(rows: &[Vec<i64>]) -> Option<(usize, Vec<Vec<i64>>)> {
    let n = width(rows);
    let mut a = rows.to_vec();
    let mut row_alive = vec![true; a.len()];
    let mut col_alive = vec![true; n];
    let mut pivots = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for i in 0..a.len() {
            if !row_alive[i] {
                continue;
            }
            let Some(j) = (0..n).find(|&j| col_alive[j] && a[i][j].abs() == 1) else {
                continue;
            };
            let (s, pivot_row) = (a[i][j], a[i].clone());
            for (k, row) in a.iter_mut().enumerate() {
                if k == i || !row_alive[k] || row[j] == 0 {
                    continue;
                }
                let f = row[j] * s;
                for c in 0..n {
                    if col_alive[c] && pivot_row[c] != 0 {
                        row[c] = row[c].checked_sub(f.checked_mul(pivot_row[c])?)?;
                    }
                }
            }
            row_alive[i] = false;
            col_alive[j] = false;
            pivots += 1;
            progress = true;
        }
    }
    let rest = a
        .into_iter()
        .zip(&row_alive)
        .filter(|(_, alive)| **alive)
        .map(|(r, _)| r.into_iter().zip(&col_alive).filter(|(_, c)| **c).map(|(x, _)| x).collect::<Vec<_>>())
        .filter(|r: &Vec<i64>| r.iter().any(|&x| x != 0))
        .collect();
    Some((pivots, rest))
}

/// Rank over ℚ: unit pivots first, then Bareiss fraction-free elimination.
pub fn rank_over_z(rows: &[Vec<i64>]) -> usize {
    match unit_pivot_reduce(rows) {
        Some((k, rest)) if k > 0 => k + bareiss_rank(&rest),
        _ => bareiss_rank(rows),
    }
}

fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let n = width(rows);
    let mut a = to_big(rows);
    let m = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..n {
                let v = &row[j] * &pivot_row[c] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Rank over 𝔽_p, p prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let n = width(rows);
    let pi = p as i128;
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(pi) as u64).collect())
        .collect();
    let m = a.len();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(piv) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for j in c..n {
            a[r][j] = mul_mod(a[r][j], inv, p);
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
            }
        }
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p <= u32::MAX as u64 {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// The nonzero invariant factors of the Smith normal form, positive and in
/// divisibility order. Their count is the rank.
pub fn smith_invariants(rows: &[Vec<i64>]) -> Vec<BigInt> {
    match unit_pivot_reduce(rows) {
        Some((k, rest)) if k > 0 => {
            let mut out = vec![BigInt::one(); k];
            out.extend(dense_smith(&rest));
            out
        }
        _ => dense_smith(rows),
    }
}

fn dense_smith(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let n = width(rows);
    let mut a = to_big(rows);
    let m = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        // Pivot: smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = floor_div(&a[i][t], &a[t][t]);
                for j in t..n {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = floor_div(&a[t][j], &a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility of the remaining block.
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a / b;
    let r = a - &q * b;
    if !r.is_zero() && (r.is_negative() != b.is_negative()) {
        q - 1
    } else {
        q
    }
}

/// Whether `v` lies in the ℚ-span of `rows`.
pub fn in_span(rows: &[Vec<i64>], v: &[i64]) -> bool {
    let mut with = rows.to_vec();
    with.push(v.to_vec());
    if rows.is_empty() {
        return v.iter().all(|&x| x == 0);
    }
    rank_over_z(rows) == rank_over_z(&with)
}

/// Rows kept in echelon form over 𝔽_p, for greedy selection of independent rows.
///
/// Rows independent mod `p` are independent over ℚ, so a selection made here is
/// a valid lower bound for the rational rank.
#[derive(Clone, Debug)]
pub struct ModpEchelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModpEchelon {
    pub const LARGE_PRIME: u64 = 2_147_483_647;

    pub fn new(p: u64) -> ModpEchelon {
        ModpEchelon { p, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it was added.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        let p = self.p;
        let mut w: Vec<u64> = v.iter().map(|&x| (x as i128).rem_euclid(p as i128) as u64).collect();
        for (c, row) in &self.rows {
            let f = w[*c];
            if f != 0 {
                for (a, b) in w.iter_mut().zip(row) {
                    *a = (*a + mul_mod(p - f, *b, p)) % p;
                }
            }
        }
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = pow_mod(w[c], p - 2, p);
        for a in w.iter_mut() {
            *a = mul_mod(*a, inv, p);
        }
        self.rows.push((c, w));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_over_z(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_over_z(&m), 2);
        assert_eq!(rank_mod_p(&m, 2), 0);
        assert_eq!(rank_mod_p(&m, 3), 2);
        assert_eq!(rank_over_z(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_over_z(&[vec![0, 1], vec![0, 1], vec![1, 5]]), 2);
    }

    #[test]
    fn smith() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let d: Vec<i64> = smith_invariants(&m).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
        let m = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        assert_eq!(smith_invariants(&m).len(), 2);
        assert!(smith_invariants(&m).iter().all(|x| x.is_one()));
        let m = vec![vec![2, 1], vec![0, 0]];
        assert_eq!(smith_invariants(&m), vec![BigInt::one()]);
    }

    #[test]
    fn unit_pivots_preserve_invariants() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (m, n) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
            assert_eq!(smith_invariants(&rows), dense_smith(&rows), "{rows:?}");
            assert_eq!(rank_over_z(&rows), bareiss_rank(&rows));
        }
    }

    #[test]
    fn echelon_selection() {
        let mut e = ModpEchelon::new(ModpEchelon::LARGE_PRIME);
        assert!(e.insert(&[1, 2, 3]));
        assert!(!e.insert(&[2, 4, 6]));
        assert!(e.insert(&[0, 1, -1]));
        assert!(!e.insert(&[1, 3, 2]));
        assert!(!e.insert(&[0, 0, 0]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn span() {
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert!(in_span(&rows, &[1, 2, 1]));
        assert!(!in_span(&rows, &[1, 0, 0]));
        assert!(in_span(&[], &[0, 0]));
    }
}

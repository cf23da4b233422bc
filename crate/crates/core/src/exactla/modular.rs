//! Rank of integer matrices over `F_p`.
//!
//! For an integer matrix the rank modulo `p` never exceeds the rank over
//! `Q`, and equals it for all but finitely many `p`. On its own that is only
//! a bound; callers that need exact answers pair it with a certificate (see
//! the spectrum computation in `twocol`).

/// Primes just below `2^31`, so that products of residues fit in `u64`.
pub const PRIMES: [u64; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

fn reduce(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p` of the matrix with the given sparse integer rows.
/// Repeated column indices within a row are summed. `p` must be a prime
/// below `2^32`.
pub fn rank_mod_p(ncols: usize, rows: &[Vec<(usize, i64)>], p: u64) -> usize {
    let mut dense: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| {
            let mut d = vec![0u64; ncols];
            for &(c, v) in row {
                d[c] = (d[c] + reduce(v, p)) % p;
            }
            d
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..dense.len()).find(|&r| dense[r][col] != 0) else {
            continue;
        };
        dense.swap(rank, pivot);
        let inv = inverse(dense[rank][col], p);
        for v in &mut dense[rank][col..] {
            *v = *v * inv % p;
        }
        let (top, rest) = dense.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
        if rank == dense.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::sparse_rank;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primes_are_prime() {
        for p in PRIMES {
            let mut d = 2u64;
            while d * d <= p {
                assert_ne!(p % d, 0, "{p} divisible by {d}");
                d += 1;
            }
        }
    }

    #[test]
    fn inverses() {
        let p = PRIMES[1];
        for a in [1u64, 2, 3, 12345, p - 1] {
            assert_eq!(a * inverse(a, p) % p, 1);
        }
    }

    #[test]
    fn agrees_with_exact_rank_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let (r, c) = (rng.gen_range(0..9), rng.gen_range(1..9));
            let rows: Vec<Vec<(usize, i64)>> = (0..r)
                .map(|_| {
                    (0..c)
                        .filter_map(|j| rng.gen_bool(0.5).then(|| (j, rng.gen_range(-4..=4))))
                        .collect()
                })
                .collect();
            let exact = sparse_rank(c, &rows);
            for p in PRIMES {
                assert_eq!(rank_mod_p(c, &rows, p), exact);
            }
        }
    }

    #[test]
    fn small_prime_can_drop_rank() {
        let rows = vec![vec![(0, 2), (1, 0)], vec![(1, 3)]];
        assert_eq!(sparse_rank(2, &rows), 2);
        assert_eq!(rank_mod_p(2, &rows, 2), 1);
        assert_eq!(rank_mod_p(2, &rows, 3), 1);
        assert_eq!(rank_mod_p(2, &rows, 5), 2);
    }
}

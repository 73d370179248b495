//! The finite-field reduction of the Weil-index computation: the sum of a
//! nontrivial additive character over norms from a quadratic extension.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaussError {
    #[error("p = {0} is not an odd prime <= 101")]
    BadPrime(u64),
    #[error("character index {0} is divisible by p")]
    TrivialCharacter(u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Least quadratic non-residue mod an odd prime.
fn least_non_residue(p: u64) -> u64 {
    (2..p)
        .find(|&c| pow_mod(c, (p - 1) / 2, p) != 1)
        .expect("odd primes have non-residues")
}

/// `sum over k in F_{p^2} of psi(N(k))` where `N` is the norm to `F_p` and
/// `psi(x) = zeta_p^(j x)` for a nonzero index `j`. The model is
/// `F_{p^2} = F_p[x]/(x^2 - c)` with `c` the least non-residue, where
/// `N(a + b x) = a^2 - c b^2`.
///
/// The sum is a rational integer: the counts of each nonzero character
/// argument are equal (norm fibers have constant size), so the cyclotomic
/// relation `1 + zeta + ... + zeta^{p-1} = 0` collapses it to an integer.
/// The value is `-p` for every valid input.
pub fn gauss_sum_norm(p: u64, psi_index: u64) -> Result<i64, GaussError> {
    if !(3..=101).contains(&p) || !is_prime(p) {
        return Err(GaussError::BadPrime(p));
    }
    if psi_index.is_multiple_of(p) {
        return Err(GaussError::TrivialCharacter(psi_index));
    }
    let c = least_non_residue(p);
    let j = psi_index % p;
    let mut counts = vec![0i64; p as usize];
    for a in 0..p {
        for b in 0..p {
            let norm = (a * a % p + (p - c * (b * b % p) % p)) % p;
            counts[(j * norm % p) as usize] += 1;
        }
    }
    let equal = counts[1..].iter().all(|&n| n == counts[1]);
    assert!(equal, "norm fibers over F_p^x must have equal size");
    Ok(counts[0] - counts[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_give_minus_p() {
        assert_eq!(gauss_sum_norm(3, 1).unwrap(), -3);
        assert_eq!(gauss_sum_norm(5, 1).unwrap(), -5);
        for j in 1..7 {
            assert_eq!(gauss_sum_norm(7, j).unwrap(), -7);
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert_eq!(gauss_sum_norm(4, 1), Err(GaussError::BadPrime(4)));
        assert_eq!(gauss_sum_norm(2, 1), Err(GaussError::BadPrime(2)));
        assert_eq!(gauss_sum_norm(103, 1), Err(GaussError::BadPrime(103)));
        assert_eq!(gauss_sum_norm(5, 10), Err(GaussError::TrivialCharacter(10)));
    }
}

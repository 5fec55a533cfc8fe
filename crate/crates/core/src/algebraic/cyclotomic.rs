//! Cyclotomic polynomials and their real folds.

use super::poly::IntPolynomial;
use crate::error::{domain, Result};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> i32 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// The n-th cyclotomic polynomial `Φ_n = Π_{d|n} (x^d − 1)^{μ(n/d)}`.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return domain("cyclotomic index must be positive");
    }
    let mut num = IntPolynomial::one();
    let mut den = IntPolynomial::one();
    for d in divisors(n) {
        match mobius(n / d) {
            1 => num = num.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            -1 => den = den.mul(&IntPolynomial::x_pow_minus_one(d as usize)),
            _ => {}
        }
    }
    Ok(num.div_exact(&den).expect("Möbius quotient is exact"))
}

/// Minimal polynomial of `2cos(2π/n)`, obtained by folding `Φ_n` under
/// `y = z + 1/z`. Its roots are `2cos(2πk/n)` for `gcd(k, n) = 1`.
pub fn fold_cos(n: u64) -> Result<IntPolynomial> {
    match n {
        0 => domain("index must be positive"),
        1 => Ok(IntPolynomial::from_i64(&[-2, 1])),
        2 => Ok(IntPolynomial::from_i64(&[2, 1])),
        _ => {
            let phi = cyclotomic(n)?;
            let c = phi.coeffs();
            let h = (c.len() - 1) / 2;
            // z^-h Φ_n(z) = c_h + Σ_k c_{h+k} (z^k + z^-k), and
            // z^k + z^-k = D_k(y) with D_0 = 2, D_1 = y, D_{k+1} = y D_k − D_{k−1}.
            let y = IntPolynomial::from_i64(&[0, 1]);
            let mut prev = IntPolynomial::from_i64(&[2]);
            let mut cur = y.clone();
            let mut out = IntPolynomial::new(vec![c[h].clone()]);
            for k in 1..=h {
                out = out.add(&cur.scale(&c[h + k]));
                let next = y.mul(&cur).sub(&prev);
                prev = std::mem::replace(&mut cur, next);
            }
            Ok(out)
        }
    }
}

/// Irreducible factors of the folded relation `Π_{d|n} Ψ_d(y)`, whose roots
/// are all `2cos(2πk/n)`; one factor per divisor.
pub fn folded_factors(n: u64) -> Result<Vec<(u64, IntPolynomial)>> {
    divisors(n).into_iter().map(|d| Ok((d, fold_cos(d)?))).collect()
}

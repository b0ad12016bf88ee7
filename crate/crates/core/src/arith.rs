//! Arbitrary-precision integer utilities: p-parts, primality, factorization.
//!
//! All routines are deterministic. Primality uses Miller-Rabin with the
//! fixed base set {2,..,41}, which is a proven deterministic test below
//! 3.3 * 10^24; above that bound we extend the base set to the first 40
//! primes, which is far beyond any counterexample known and adequate for
//! the desk-scale inputs this crate handles. Factorization is trial
//! division followed by Brent's cycle-finding with fixed parameters.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("p = {0} is not prime")]
    NotPrime(BigInt),
    #[error("expected a positive integer, got {0}")]
    NotPositive(BigInt),
    #[error("factorization budget exceeded for {0}")]
    FactorBudget(BigInt),
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Largest power of `p` dividing `n` (as the power itself, not the exponent).
pub fn p_part(n: &BigInt, p: &BigInt) -> Result<BigInt, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    if n.sign() != num_bigint::Sign::Plus {
        return Err(ArithError::NotPositive(n.clone()));
    }
    let mut part = BigInt::one();
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(part);
        }
        part *= p;
        rest = q;
    }
}

/// `n` divided by its p-part.
pub fn p_prime_part(n: &BigInt, p: &BigInt) -> Result<BigInt, ArithError> {
    Ok(n / p_part(n, p)?)
}

/// Exponent of `p` in `n`.
pub fn p_valuation(n: &BigInt, p: &BigInt) -> Result<u64, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p.clone()));
    }
    if n.sign() != num_bigint::Sign::Plus {
        return Err(ArithError::NotPositive(n.clone()));
    }
    let mut e = 0u64;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        e += 1;
        rest = q;
    }
}

/// Exact test for `p^exp > bound` without materializing `p^exp`.
///
/// Works by computing the floor logarithm of `bound` in base `p`.
pub fn pow_exceeds(p: &BigInt, exp: &BigInt, bound: &BigInt) -> bool {
    assert!(p >= &big(2));
    if bound < &BigInt::one() {
        return true;
    }
    // find e with p^e <= bound < p^(e+1)
    let mut e = BigInt::zero();
    let mut power = BigInt::one();
    loop {
        let next = &power * p;
        if next > *bound {
            break;
        }
        power = next;
        e += 1;
        // p^exp > bound already guaranteed once exp > e is settled
        if &e >= exp {
            break;
        }
    }
    if &e >= exp {
        // p^exp <= p^e <= bound
        return false;
    }
    // exp >= e+1 so p^exp >= p^(e+1) > bound
    true
}

const MR_BASES_SMALL: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const MR_BASES_LARGE: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

/// Deterministic Miller-Rabin. Proven below 3.3e24 with the small base set.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &big(2) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let p = big(p as i64);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s with d odd
    let n_minus_1 = n - 1;
    let s = trailing_zeros(&n_minus_1);
    let d = &n_minus_1 >> s;
    let proven_bound: BigInt = "3317044064679887385961980".parse().unwrap();
    let bases: &[u64] = if *n < proven_bound {
        &MR_BASES_SMALL
    } else {
        &MR_BASES_LARGE
    };
    'base: for &a in bases {
        let a = big(a as i64);
        if (&a % n).is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = x.modpow(&big(2), n);
            if x == n_minus_1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

fn trailing_zeros(n: &BigInt) -> u64 {
    debug_assert!(!n.is_zero());
    n.trailing_zeros().unwrap_or(0)
}

/// Prime factorization `n = ∏ p_i^e_i` with p_i ascending.
///
/// Trial division up to `trial_bound`, then Brent rho on the cofactor with a
/// fixed iteration cap. Inputs beyond the cap yield `FactorBudget`.
pub fn factorize(n: &BigInt, trial_bound: u64) -> Result<Vec<(BigInt, u64)>, ArithError> {
    if n.sign() != num_bigint::Sign::Plus {
        return Err(ArithError::NotPositive(n.clone()));
    }
    let mut rest = n.clone();
    let mut out: Vec<(BigInt, u64)> = Vec::new();
    let push = |p: BigInt, e: u64, out: &mut Vec<(BigInt, u64)>| {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += e;
                return;
            }
        }
        out.push((p, e));
    };
    // trial division by 2, 3 and the 6k±1 wheel
    let mut d: u64 = 2;
    while d <= trial_bound {
        let db = big(d as i64);
        if &db * &db > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&db);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            push(db, e, &mut out);
        }
        d = match d {
            2 => 3,
            3 => 5,
            _ => {
                if d % 6 == 5 {
                    d + 2
                } else {
                    d + 4
                }
            }
        };
    }
    if rest.is_one() {
        return Ok(out);
    }
    // split what remains
    let mut stack = vec![rest];
    let mut large: Vec<BigInt> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            large.push(m);
            continue;
        }
        let f = brent_rho(&m)?;
        stack.push(&m / &f);
        stack.push(f);
    }
    large.sort();
    for p in large {
        let mut seen = false;
        for (q, e) in out.iter_mut() {
            if *q == p {
                *e += 1;
                seen = true;
                break;
            }
        }
        if !seen {
            push(p, 1, &mut out);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Brent's variant of Pollard rho with fixed polynomial offsets.
fn brent_rho(n: &BigInt) -> Result<BigInt, ArithError> {
    debug_assert!(!is_prime(n) && n > &big(3));
    if n.is_even() {
        return Ok(big(2));
    }
    // odd moduli below 2^127 take the Montgomery fast path
    if n.bits() <= 126 {
        let digits = n.to_u64_digits().1;
        let m = digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| (acc << 64) | d as u128);
        if let Some(f) = mont::brent_rho_u128(m) {
            return Ok(BigInt::from(f));
        }
        return Err(ArithError::FactorBudget(n.clone()));
    }
    const MAX_ITERS: u64 = 40_000_000;
    for c in 1i64..=8 {
        let c = big(c);
        let mut y = big(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut iters: u64 = 0;
        while g.is_one() && iters < MAX_ITERS {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let lim = 128.min(r - k);
                for _ in 0..lim {
                    y = (&y * &y + &c) % n;
                    q = (&q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += lim;
                iters += lim;
            }
            r *= 2;
        }
        if g == *n {
            // backtrack
            loop {
                ys = (&ys * &ys + &c) % n;
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Ok(g);
        }
    }
    Err(ArithError::FactorBudget(n.clone()))
}

/// Montgomery arithmetic over odd moduli below 2^127, backing the rho
/// fast path. Values live in the Montgomery domain x * 2^128 mod m; since
/// gcd(2^128, m) = 1, gcds against m can be taken on domain values
/// directly.
mod mont {
    /// Full 256-bit product of two u128s as (hi, lo).
    fn mul_wide(a: u128, b: u128) -> (u128, u128) {
        let a_lo = a as u64 as u128;
        let a_hi = a >> 64;
        let b_lo = b as u64 as u128;
        let b_hi = b >> 64;
        let ll = a_lo * b_lo;
        let lh = a_lo * b_hi;
        let hl = a_hi * b_lo;
        let hh = a_hi * b_hi;
        let (mid, mid_carry) = lh.overflowing_add(hl);
        let (lo, lo_carry) = ll.overflowing_add(mid << 64);
        let hi = hh
            + (mid >> 64)
            + if mid_carry { 1u128 << 64 } else { 0 }
            + lo_carry as u128;
        (hi, lo)
    }

    struct Mont {
        m: u128,
        /// -m^{-1} mod 2^128
        m_inv_neg: u128,
        /// 2^256 mod m, for conversion into the domain
        r2: u128,
    }

    impl Mont {
        fn new(m: u128) -> Mont {
            debug_assert!(m % 2 == 1 && m >> 126 == 0);
            // Newton iteration for m^{-1} mod 2^128
            let mut inv: u128 = 1;
            for _ in 0..7 {
                inv = inv.wrapping_mul(2u128.wrapping_sub(m.wrapping_mul(inv)));
            }
            debug_assert!(m.wrapping_mul(inv) == 1);
            let r1 = (u128::MAX % m + 1) % m; // 2^128 mod m
            let r2 = slow_mulmod(r1, r1, m);
            Mont {
                m,
                m_inv_neg: inv.wrapping_neg(),
                r2,
            }
        }

        /// REDC: given t = t_hi * 2^128 + t_lo < m * 2^128, return
        /// t * 2^{-128} mod m.
        fn redc(&self, t_hi: u128, t_lo: u128) -> u128 {
            let u = t_lo.wrapping_mul(self.m_inv_neg);
            let (p_hi, p_lo) = mul_wide(u, self.m);
            let (_, carry) = t_lo.overflowing_add(p_lo);
            let mut r = t_hi + p_hi + carry as u128;
            if r >= self.m {
                r -= self.m;
            }
            r
        }

        fn mul(&self, a: u128, b: u128) -> u128 {
            let (hi, lo) = mul_wide(a, b);
            self.redc(hi, lo)
        }

        fn to_domain(&self, x: u128) -> u128 {
            self.mul(x % self.m, self.r2)
        }

        fn add(&self, a: u128, b: u128) -> u128 {
            // a, b < m < 2^127 so the sum does not overflow
            let s = a + b;
            if s >= self.m {
                s - self.m
            } else {
                s
            }
        }
    }

    /// Double-and-add multiplication, used once per modulus to seed r2.
    fn slow_mulmod(mut a: u128, mut b: u128, m: u128) -> u128 {
        let mut acc: u128 = 0;
        a %= m;
        while b > 0 {
            if b & 1 == 1 {
                acc = (acc + a) % m;
            }
            a = (a + a) % m;
            b >>= 1;
        }
        acc
    }

    fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }

    /// Brent's cycle finding in the Montgomery domain; deterministic
    /// polynomial offsets, fixed iteration cap.
    pub(super) fn brent_rho_u128(n: u128) -> Option<u128> {
        debug_assert!(n % 2 == 1 && n > 3);
        let mont = Mont::new(n);
        const MAX_ITERS: u64 = 400_000_000;
        for c_plain in 1u128..=8 {
            let c = mont.to_domain(c_plain);
            let mut y = mont.to_domain(2);
            let mut r: u64 = 1;
            let mut q = mont.to_domain(1);
            let mut g: u128 = 1;
            let mut x = y;
            let mut ys = y;
            let mut iters: u64 = 0;
            while g == 1 && iters < MAX_ITERS {
                x = y;
                for _ in 0..r {
                    y = mont.add(mont.mul(y, y), c);
                }
                let mut k: u64 = 0;
                while k < r && g == 1 {
                    ys = y;
                    let lim = 256.min(r - k);
                    for _ in 0..lim {
                        y = mont.add(mont.mul(y, y), c);
                        let diff = x.abs_diff(y);
                        q = mont.mul(q, diff);
                    }
                    g = gcd_u128(q, n);
                    k += lim;
                    iters += lim;
                }
                r *= 2;
            }
            if g == n {
                loop {
                    ys = mont.add(mont.mul(ys, ys), c);
                    let diff = x.abs_diff(ys);
                    g = gcd_u128(diff, n);
                    if g > 1 {
                        break;
                    }
                }
            }
            if g > 1 && g < n {
                return Some(g);
            }
        }
        None
    }

}

/// Exponent of the prime `p` in `n!` (Legendre's formula).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut e = 0u64;
    let mut pk = p;
    while pk <= n {
        e += n / pk;
        match pk.checked_mul(p) {
            Some(next) => pk = next,
            None => break,
        }
    }
    e
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut out = BigInt::one();
    for k in 2..=n {
        out *= big(k as i64);
    }
    out
}

/// Floor square root with an exactness flag.
pub fn sqrt_exact(n: &BigInt) -> (BigInt, bool) {
    let r = n.sqrt();
    let exact = &r * &r == *n;
    (r, exact)
}

/// gcd convenience over i64-sized values.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

/// Ascending divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Is `q` a prime power p^a? Returns (p, a) if so.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    // smallest prime factor by trial division (desk-scale q)
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    let mut a = 0u32;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        a += 1;
    }
    if rest == 1 {
        Some((p, a))
    } else {
        None
    }
}

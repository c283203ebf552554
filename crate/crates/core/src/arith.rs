//! Small integer arithmetic used for group orders.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// ascending prime order. `factorize(1)` is empty.
pub fn factorize(mut m: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

pub fn is_prime(m: usize) -> bool {
    m >= 2 && factorize(m) == [(m, 1)]
}

/// `Some((p, k))` when `m = p^k` with `k >= 1`.
pub fn prime_power(m: usize) -> Option<(usize, u32)> {
    match factorize(m).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

pub fn is_power_of_two(m: usize) -> bool {
    m != 0 && m & (m - 1) == 0
}

/// Euler's totient via the factorization of `m`. `euler_phi(0)` is 0.
pub fn euler_phi(m: usize) -> usize {
    if m == 0 {
        return 0;
    }
    factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1))
}

/// Decomposes `m = p * q^n` with `p != q` prime and `n >= 1`. When both
/// exponents are 1 the smaller prime is returned as `p`.
pub fn split_pqn(m: usize) -> Option<(usize, usize, u32)> {
    match factorize(m).as_slice() {
        [(a, 1), (b, e)] => Some((*a, *b, *e)),
        [(a, e), (b, 1)] => Some((*b, *a, *e)),
        _ => None,
    }
}

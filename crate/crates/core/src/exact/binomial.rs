use num_bigint::BigInt;
use num_traits::One;

/// `C(n, k) mod 2` by Lucas: the binomial is odd iff the bits of `k` are a
/// subset of the bits of `n`.
#[inline]
pub fn binomial_mod2(n: u64, k: u64) -> bool {
    k & n == k
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

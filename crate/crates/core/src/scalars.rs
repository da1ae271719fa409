//! Exact scalar arithmetic shared by every other module: arbitrary-precision
//! rationals, residues mod an odd prime p >= 5, p-adic valuations, Bernoulli
//! numbers and divisor sums.
//!
//! No floating point anywhere; every operation is exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d` as a [`Rat`].
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A prime modulus p >= 5, validated at construction by a deterministic
/// Miller-Rabin test (the 12-base set is exact for all 64-bit inputs;
/// larger moduli are unrepresentable by design).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 5 {
            return Err(Error::PrimeTooSmall(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Residue mod a [`Prime`]. Arithmetic between residues of distinct moduli is
/// a programming error and panics; the expansion-level operations check the
/// ring marker first and report [`Error::RingMismatch`] instead.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Fp {
    res: u64,
    p: Prime,
}

impl Fp {
    pub fn new(value: i64, p: Prime) -> Self {
        let m = p.get() as i64;
        let r = value.rem_euclid(m) as u64;
        Fp { res: r, p }
    }

    pub fn from_residue(res: u64, p: Prime) -> Self {
        Fp { res: res % p.get(), p }
    }

    #[inline]
    pub fn residue(self) -> u64 {
        self.res
    }

    #[inline]
    pub fn modulus(self) -> Prime {
        self.p
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.p, other.p,
            "internal error: mixed moduli {} and {}",
            self.p, other.p
        );
    }

    pub fn add(self, other: Self) -> Self {
        self.check(other);
        let p = self.p.get();
        let mut r = self.res + other.res;
        if r >= p {
            r -= p;
        }
        Fp { res: r, p: self.p }
    }

    pub fn sub(self, other: Self) -> Self {
        self.check(other);
        let p = self.p.get();
        let r = if self.res >= other.res {
            self.res - other.res
        } else {
            self.res + p - other.res
        };
        Fp { res: r, p: self.p }
    }

    pub fn mul(self, other: Self) -> Self {
        self.check(other);
        Fp {
            res: mul_mod(self.res, other.res, self.p.get()),
            p: self.p,
        }
    }

    pub fn neg(self) -> Self {
        let p = self.p.get();
        Fp {
            res: if self.res == 0 { 0 } else { p - self.res },
            p: self.p,
        }
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self) -> Result<Self> {
        if self.res == 0 {
            return Err(Error::Hypothesis("inverse of zero residue".into()));
        }
        let p = self.p.get();
        Ok(Fp {
            res: pow_mod(self.res, p - 2, p),
            p: self.p,
        })
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.res == 0
    }

    /// Lift to the canonical representative in `[0, p)`.
    pub fn lift(self) -> Rat {
        Rat::from_integer(BigInt::from(self.res))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.res)
    }
}

fn bigint_mod_u64(x: &BigInt, p: u64) -> u64 {
    let m = x.mod_floor(&BigInt::from(p));
    m.to_u64().expect("mod_floor result fits in u64")
}

/// Reduce a rational mod p. Defined only for p-integral inputs; a denominator
/// divisible by p is a reported error, never a silent wrap.
pub fn reduce_rat(x: &Rat, p: Prime) -> Result<Fp> {
    let den_mod = bigint_mod_u64(x.denom(), p.get());
    if den_mod == 0 {
        return Err(Error::NotPIntegral {
            num: x.numer().clone(),
            den: x.denom().clone(),
            p: p.get(),
        });
    }
    let num_mod = bigint_mod_u64(x.numer(), p.get());
    let inv = Fp::from_residue(den_mod, p).inv()?;
    Ok(Fp::from_residue(num_mod, p).mul(inv))
}

/// Value of the normalized p-adic valuation: finite or +infinity (for 0).
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn min(self, other: Self) -> Self {
        match (self, other) {
            (Valuation::Infinite, v) | (v, Valuation::Infinite) => v,
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a.min(b)),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

fn vp_bigint(x: &BigInt, p: u64) -> i64 {
    debug_assert!(!x.is_zero());
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut cur = x.abs();
    loop {
        let (q, r) = cur.div_rem(&p);
        if r.is_zero() {
            v += 1;
            cur = q;
        } else {
            return v;
        }
    }
}

/// Normalized additive valuation v_p on Q, with v_p(p) = 1 and v_p(0) = +inf.
pub fn v_p(x: &Rat, p: Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let pn = p.get();
    Valuation::Finite(vp_bigint(x.numer(), pn) - vp_bigint(x.denom(), pn))
}

/// Exact k-th Bernoulli number (k even, k >= 2) via the defining recurrence
/// sum_{j=0}^{k} C(k+1, j) B_j = 0.
pub fn bernoulli(k: u32) -> Result<Rat> {
    if k == 0 || k % 2 != 0 {
        return Err(Error::BadArgument(k as i64, "bernoulli requires even k >= 2"));
    }
    let mut b: Vec<Rat> = Vec::with_capacity(k as usize + 1);
    b.push(Rat::one()); // B_0
    for n in 1..=k {
        // B_n = -1/(n+1) * sum_{j=0}^{n-1} C(n+1, j) B_j
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += Rat::from_integer(binomial(n as u64 + 1, j as u64)) * bj;
        }
        let bn = -acc / Rat::from_integer(BigInt::from(n + 1));
        b.push(bn);
    }
    Ok(b[k as usize].clone())
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Ascending list of the positive divisors of n >= 1.
pub fn divisors(n: i64) -> Result<Vec<i64>> {
    if n <= 0 {
        return Err(Error::BadArgument(n, "divisors requires n >= 1"));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Divisor power sum sigma_k(n) = sum_{d | n} d^k, exact.
pub fn sigma(k: u32, n: i64) -> BigInt {
    divisors(n)
        .expect("sigma requires n >= 1")
        .into_iter()
        .map(|d| BigInt::from(d).pow(k))
        .sum()
}

/// gcd of three nonnegative integers with gcd(0, 0, m) = m.
pub fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    a.abs().gcd(&b.abs()).gcd(&c.abs())
}

/// Minimal interface the expansion and slice containers need from their
/// coefficient ring. Implemented for exact rationals and for mod-p residues.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn is_zero_ref(&self) -> bool;
    /// Multiply by a plain integer (used by the determinant operator).
    fn scale_int(&self, n: i64) -> Self;
}

impl Coeff for Rat {
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn is_zero_ref(&self) -> bool {
        self.is_zero()
    }
    fn scale_int(&self, n: i64) -> Self {
        self * Rat::from_integer(BigInt::from(n))
    }
}

impl Coeff for Fp {
    fn add_ref(&self, other: &Self) -> Self {
        self.add(*other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(*other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn is_zero_ref(&self) -> bool {
        self.is_zero()
    }
    fn scale_int(&self, n: i64) -> Self {
        self.mul(Fp::new(n, self.p))
    }
}

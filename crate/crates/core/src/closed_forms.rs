//! Exact closed forms: Fibonacci numbers, the two-generator formulas, the
//! `F < 2m` binomial sum, the `𝒜_k` families behind the `t(g)` lower bound,
//! and the global bounds on `N(g)`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `k` accepted by [`enumerate_ak`]; the family has `3^⌊(k-1)/2⌋`
/// members, so this is already tens of millions.
pub const MAX_AK: u32 = 34;

pub fn fibonacci(n: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(F, g)` of `⟨a, b⟩`.
pub fn sylvester(a: u64, b: u64) -> Result<(i64, i64)> {
    if a < 2 || b <= a {
        return Err(Error::PreconditionViolated(format!("need 2 <= a < b, got a={a}, b={b}")));
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime(a, b));
    }
    let (a, b) = (a as i64, b as i64);
    Ok((a * b - a - b, (a - 1) * (b - 1) / 2))
}

/// `Σ_m C(m-1, g-(m-1))`: genus-`g` semigroups with `F < 2m`, which are
/// `{0, m} ∪ A ∪ [2m, ∞)` with `A ⊆ [m+1, 2m-1]` and `g = 2(m-1) - |A|`.
pub fn count_f_lt_2m(g: u32) -> BigUint {
    let g = i64::from(g);
    (2..=g + 1).map(|m| binomial(m - 1, g - (m - 1))).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AkMember {
    /// Bit `a` set iff `a ∈ A`.
    pub mask: u64,
    pub size: u32,
    /// `|(A + A) ∩ [0, k]|`
    pub sumset_size: u32,
}

impl AkMember {
    pub fn elements(&self) -> Vec<u32> {
        (0..64).filter(|&a| self.mask >> a & 1 == 1).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AkFamily {
    pub k: u32,
    pub members: Vec<AkMember>,
}

fn sumset_size_upto(mask: u64, k: u32) -> u32 {
    let wide = u128::from(mask);
    let mut acc = 0u128;
    for a in 0..64 {
        if mask >> a & 1 == 1 {
            acc |= wide << a;
        }
    }
    let keep = if k >= 127 { u128::MAX } else { (1u128 << (k + 1)) - 1 };
    (acc & keep).count_ones()
}

/// All `A ⊆ [0, k-1]` with `0 ∈ A` and `k ∉ A + A`, by backtracking over
/// `1..k` and skipping any element whose complement `k - a` is already in.
pub fn enumerate_ak(k: u32) -> Result<AkFamily> {
    if k == 0 || k > MAX_AK {
        return Err(Error::OutOfRange { what: "k", value: i64::from(k) });
    }
    fn rec(k: u32, next: u32, mask: u64, out: &mut Vec<AkMember>) {
        out.push(AkMember {
            mask,
            size: mask.count_ones(),
            sumset_size: sumset_size_upto(mask, k),
        });
        for a in next..k {
            if 2 * a == k || mask >> (k - a) & 1 == 1 {
                continue;
            }
            rec(k, a + 1, mask | 1 << a, out);
        }
    }
    let mut members = Vec::new();
    rec(k, 1, 1, &mut members);
    Ok(AkFamily { k, members })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZhaoBound {
    pub value: BigUint,
    /// Terms whose Fibonacci index came out negative and were taken as 0.
    pub clamped_terms: u64,
}

/// `F_{g+1} + Σ_{k=1}^{⌊g/3⌋} Σ_{A ∈ 𝒜_k} F_{g - |(A+A) ∩ [0,k]| + |A| - k - 1}`,
/// a lower bound for `t(g)`.
pub fn zhao_lower_bound(g: u32) -> Result<ZhaoBound> {
    if g == 0 {
        return Err(Error::OutOfRange { what: "genus", value: 0 });
    }
    let mut value = fibonacci(i64::from(g) + 1)?;
    let mut clamped_terms = 0;
    for k in 1..=g / 3 {
        for a in enumerate_ak(k)?.members {
            let index = i64::from(g) - i64::from(a.sumset_size) + i64::from(a.size) - i64::from(k) - 1;
            if index < 0 {
                clamped_terms += 1;
            } else {
                value += fibonacci(index)?;
            }
        }
    }
    Ok(ZhaoBound { value, clamped_terms })
}

/// `(2·F_g, 1 + 3·2^{g-3})`.
pub fn global_bounds(g: u32) -> Result<(BigUint, BigUint)> {
    if g < 3 {
        return Err(Error::OutOfRange { what: "genus", value: i64::from(g) });
    }
    let lower = fibonacci(i64::from(g))? * 2u32;
    let upper = BigUint::one() + (BigUint::from(3u32) << (g - 3) as usize);
    Ok((lower, upper))
}

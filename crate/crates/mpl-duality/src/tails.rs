//! Euler-Maclaurin tail expansions and exact coefficient tables.
//!
//! The nested-series evaluator needs, for integer `s >= 2`, the asymptotic
//! expansion of the zeta tail
//!
//! ```text
//! T(s; m) = sum_{n > m} n^(-s)
//!         = a^(1-s)/(s-1) + a^(-s)/2
//!           + sum_{v>=1} B_{2v}/(2v)! (s)_{2v-1} a^(-s-2v+1),   a = m+1,
//! ```
//!
//! re-anchored to powers of `1/m`, together with the power-sum constants
//!
//! ```text
//! Lambda_i(z) = sum_{g>=1} g^i z^g
//!             = sum_{j<=i} S(i,j) j! z^j / (1-z)^{j+1},
//! ```
//!
//! where `S` is the Stirling partition number. At `z = -1` the closed
//! form yields the Abel-summed value, which is exactly what the
//! alternating tail expansions require. All coefficients are exact
//! rationals; callers convert them to fixed-point reals at their working
//! precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Bernoulli numbers `B_0..=B_n` (convention `B_1 = -1/2`).
pub fn bernoulli_list(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(BigRational::one());
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from(binom(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / BigRational::from(BigInt::from(m as u64 + 1)));
    }
    b
}

/// Binomial coefficient as a big integer.
pub fn binom(n: u64, k: u64) -> BigInt {
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

/// Stirling partition numbers `S(i, j)` for `0 <= j <= i <= n`.
pub fn stirling2_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); n + 1]; n + 1];
    s[0][0] = BigInt::one();
    for i in 1..=n {
        for j in 1..=i {
            let a = &s[i - 1][j] * BigInt::from(j as u64);
            let b = s[i - 1][j - 1].clone();
            s[i][j] = a + b;
        }
    }
    s
}

/// Factorials `0!..=n!`.
pub fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = Vec::with_capacity(n + 1);
    f.push(BigInt::one());
    for i in 1..=n {
        let prev = f[i - 1].clone();
        f.push(prev * BigInt::from(i as u64));
    }
    f
}

/// `binom(-t, i) = (-1)^i C(t+i-1, i)` as a big integer.
pub fn binom_neg(t: u64, i: u64) -> BigInt {
    if i == 0 {
        return BigInt::one();
    }
    let c = binom(t + i - 1, i);
    if i % 2 == 0 {
        c
    } else {
        -c
    }
}

/// Safe rational-to-f64 conversion for magnitude estimates: scales both
/// parts down so neither overflows on its own.
pub fn rat_to_f64(q: &BigRational) -> f64 {
    let n = q.numer();
    let d = q.denom();
    if n.is_zero() {
        return 0.0;
    }
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let ns = (nb - 64).max(0);
    let ds = (db - 64).max(0);
    let nf = (n >> ns).to_f64().unwrap_or(0.0);
    let df = (d >> ds).to_f64().unwrap_or(1.0);
    (nf / df) * 2f64.powi((ns - ds) as i32)
}

/// Asymptotic expansion of the zeta tail `T(s; m)` in powers of `1/m`.
#[derive(Debug, Clone)]
pub struct ZetaTailExpansion {
    /// `coeffs[p]` multiplies `m^(-p)`; indices `0..=pmax`.
    pub coeffs: Vec<BigRational>,
    /// Magnitude terms `(c, pow)` whose sum `|c| m^(-pow)` estimates the
    /// truncation error of the expansion at `m`.
    pub err_terms: Vec<(BigRational, u32)>,
}

impl ZetaTailExpansion {
    /// Error estimate of the truncated expansion at anchor `m`.
    pub fn err_at(&self, m: f64) -> f64 {
        self.err_terms
            .iter()
            .map(|(c, p)| rat_to_f64(c).abs() * m.powi(-(*p as i32)))
            .sum::<f64>()
            * 4.0
    }
}

fn zeta_tail_expansion_impl(s: u32, pmax: usize) -> ZetaTailExpansion {
    assert!(s >= 2);
    let mut coeffs = vec![BigRational::zero(); pmax + 1];
    let mut err_terms: Vec<(BigRational, u32)> = Vec::new();

    // Euler-Maclaurin terms are prefactor * a^(-t) with a = m+1.
    // Collect (prefactor, t) pairs.
    let mut em_terms: Vec<(BigRational, u32)> = Vec::new();
    em_terms.push((
        BigRational::new(BigInt::one(), BigInt::from(s - 1)),
        s - 1,
    ));
    em_terms.push((BigRational::new(BigInt::one(), BigInt::from(2)), s));
    let vmax = if pmax as u32 + 1 >= s {
        ((pmax as u32 + 1 - s) / 2) + 1
    } else {
        0
    };
    let bern = bernoulli_list((2 * vmax + 2) as usize);
    let mut rising = BigInt::from(s); // (s)_1
    for v in 1..=vmax {
        // (s)_{2v-1}
        if v > 1 {
            rising *= BigInt::from(s + 2 * v - 3);
            rising *= BigInt::from(s + 2 * v - 2);
        }
        let mut fact = BigInt::one();
        for i in 1..=(2 * v) {
            fact *= BigInt::from(i);
        }
        let coef = &bern[(2 * v) as usize] * BigRational::new(rising.clone(), fact);
        em_terms.push((coef, s + 2 * v - 1));
    }
    // first omitted Euler-Maclaurin term, as an error magnitude
    {
        let v = vmax + 1;
        let mut rising_next = BigInt::one();
        for i in 0..(2 * v - 1) {
            rising_next *= BigInt::from(s + i);
        }
        let mut fact = BigInt::one();
        for i in 1..=(2 * v) {
            fact *= BigInt::from(i);
        }
        let coef = &bern[(2 * v) as usize] * BigRational::new(rising_next, fact);
        err_terms.push((coef, s + 2 * v - 1));
    }

    // Re-anchor every a^(-t) = (m+1)^(-t) into powers of 1/m.
    for (pref, t) in em_terms {
        if (t as usize) > pmax {
            err_terms.push((pref, t));
            continue;
        }
        let imax = pmax - t as usize;
        for i in 0..=imax {
            let b = binom_neg(t as u64, i as u64);
            coeffs[t as usize + i] += &pref * BigRational::from(b);
        }
        // first dropped binomial term
        let b = binom_neg(t as u64, imax as u64 + 1);
        err_terms.push((pref * BigRational::from(b), t + imax as u32 + 1));
    }

    ZetaTailExpansion { coeffs, err_terms }
}

type ZetaKey = (u32, usize);
static ZETA_CACHE: OnceLock<Mutex<HashMap<ZetaKey, Arc<ZetaTailExpansion>>>> = OnceLock::new();

/// Cached zeta-tail expansion for integer `s >= 2` to order `pmax`.
pub fn zeta_tail_expansion(s: u32, pmax: usize) -> Arc<ZetaTailExpansion> {
    let cache = ZETA_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry((s, pmax))
        .or_insert_with(|| Arc::new(zeta_tail_expansion_impl(s, pmax)))
        .clone()
}

/// Power-sum constants `Lambda_0..=Lambda_imax` at rational `z`
/// (`|z| < 1`, or `z = -1` for the Abel-summed values).
pub fn lambda_values(z: &BigRational, imax: usize) -> Vec<BigRational> {
    let one = BigRational::one();
    assert!(z.abs() < one || *z == -one.clone(), "lambda_values requires |z|<1 or z=-1");
    let s2 = stirling2_table(imax);
    let fact = factorials(imax);
    let base = &one - z; // 1 - z
    // powers of z and 1/(1-z)
    let mut zpow = vec![one.clone(); imax + 1];
    let mut bpow = vec![one.clone(); imax + 2];
    for j in 1..=imax {
        zpow[j] = &zpow[j - 1] * z;
    }
    for j in 1..=(imax + 1) {
        bpow[j] = &bpow[j - 1] / &base;
    }
    let mut out = Vec::with_capacity(imax + 1);
    for i in 0..=imax {
        if i == 0 {
            out.push(z / &base);
            continue;
        }
        let mut acc = BigRational::zero();
        for j in 1..=i {
            acc += BigRational::from(&s2[i][j] * &fact[j]) * &zpow[j] * &bpow[j + 1];
        }
        out.push(acc);
    }
    out
}

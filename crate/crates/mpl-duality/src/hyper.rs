//! Gauss and q-hypergeometric series, the connectors, and exact checks of
//! the contiguous relations.
//!
//! The connector of the connected sums is
//!
//! ```text
//! C(m,n;z) = m! n! / (m+n)! * F(m, n; m+n+1; z),
//! ```
//!
//! and its q-analogues are
//!
//! ```text
//! Cq1(m,n;z) = q^(mn) [m]![n]!/[m+n]! phi_q(q^m, q^n; q^(m+n+1); z),
//! Cq2(m,n;z) =        [m]![n]!/[m+n]! phi_q(q^m, q^n; q^(m+n+1); qz).
//! ```
//!
//! Gamma-type parameters of the form `q^c` are carried as integer
//! exponents so that `(q^c; q)_j` is computed by a stable product
//! recurrence without cancellation.
//!
//! The six contiguous relations are verified at the coefficient level in
//! exact rational arithmetic: for each power of `z` the difference of the
//! two sides must vanish identically.

use crate::error::{Error, Result};
use crate::precision::{EvalResult, PrecisionContext, QModel};
use crate::real::{Real, RealCtx};
use crate::tails::rat_to_f64;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)` in exact rationals.
pub fn rising_factorial(a: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += BigRational::one();
    }
    acc
}

/// q-integer `[m] = (1 - q^m)/(1 - q)` in exact rationals.
pub fn q_integer(m: u32, q: &BigRational) -> BigRational {
    let one = BigRational::one();
    let qm = pow_rat(q, m);
    (&one - qm) / (&one - q)
}

/// q-factorial `[m]! = [1] [2] ... [m]`.
pub fn q_factorial(m: u32, q: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for t in 1..=m {
        acc *= q_integer(t, q);
    }
    acc
}

/// q-shifted factorial `(a; q)_n = (1-a)(1-qa)...(1-q^(n-1)a)`.
pub fn q_pochhammer(a: &BigRational, q: &BigRational, n: u32) -> BigRational {
    let one = BigRational::one();
    let mut acc = BigRational::one();
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &one - &f;
        f *= q;
    }
    acc
}

pub fn pow_rat(q: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = q.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

/// Geometric tail threshold: once the term ratio stays below
/// `rho = max(z, 0.9 z + 0.1)`, the tail is bounded by `t * rho/(1-rho)`.
fn tail_rho(z_abs: f64) -> f64 {
    (0.9 * z_abs + 0.1).max(z_abs).min(0.995)
}

/// Gauss hypergeometric series `F(a, b; c; z)` for `|z| < 1`.
pub fn gauss_2f1(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    if z.abs() >= BigRational::one() {
        return Err(Error::DivergentSeries(format!("2F1 requires |z| < 1, got {z}")));
    }
    if !c.is_positive() && c.is_integer() {
        return Err(Error::InvalidArgument("gamma parameter must not be a non-positive integer".into()));
    }
    let rctx = ctx.real_ctx();
    let z_real = rctx.from_rational(z);
    let z_abs = rat_to_f64(z).abs();
    let rho = tail_rho(z_abs);

    let mut term = rctx.one();
    let mut sum = rctx.one();
    let mut fa = rctx.from_rational(a);
    let mut fb = rctx.from_rational(b);
    let mut fc = rctx.from_rational(c);
    let one = rctx.one();
    let mut prev_abs = 1f64;
    for j in 0..ctx.max_terms {
        let num = fa.mul(&fb);
        let den = fc.mul_i64(j as i64 + 1);
        term = term.mul(&num).div(&den).mul(&z_real);
        if term.is_zero() {
            return Ok(EvalResult {
                value: sum,
                error_estimate: 2f64.powi(-(ctx.precision_bits as i32)) * 8.0,
                terms_used: j + 1,
                converged: true,
            });
        }
        sum.add_assign(&term);
        fa.add_assign(&one);
        fb.add_assign(&one);
        fc.add_assign(&one);
        // once the measured ratio has settled under rho, bound the tail
        // geometrically
        let t_abs = term.to_f64().abs();
        let ratio = t_abs / prev_abs;
        prev_abs = t_abs;
        let bound = t_abs * rho / (1.0 - rho);
        if ratio <= rho && bound <= ctx.target_tol && j >= 2 {
            return Ok(EvalResult {
                value: sum,
                error_estimate: bound + 2f64.powi(-(ctx.precision_bits as i32)) * 8.0,
                terms_used: j + 1,
                converged: true,
            });
        }
    }
    Err(Error::NoConvergence {
        estimate: format!("{:.3e}", term.to_f64().abs()),
    })
}

/// Connector `C(m, n; z) = m! n!/(m+n)! F(m, n; m+n+1; z)`.
///
/// Exactly 1 when `m = 0` or `n = 0`; symmetric in `(m, n)`.
pub fn connector_c(m: u32, n: u32, z: &BigRational, ctx: &PrecisionContext) -> Result<EvalResult> {
    let rctx = ctx.real_ctx();
    if m == 0 || n == 0 {
        return Ok(EvalResult {
            value: rctx.one(),
            error_estimate: 0.0,
            terms_used: 0,
            converged: true,
        });
    }
    if z.is_negative() || z.abs() >= BigRational::one() {
        return Err(Error::DivergentSeries(format!("connector requires 0 <= z < 1, got {z}")));
    }
    let (m, n) = (m.min(n), m.max(n));
    let f = gauss_2f1(
        &BigRational::from(BigInt::from(m)),
        &BigRational::from(BigInt::from(n)),
        &BigRational::from(BigInt::from(m + n + 1)),
        z,
        ctx,
    )?;
    // m! n!/(m+n)! = 1 / C(m+n, n)
    let pref = rctx
        .one()
        .div(&rctx.from_bigint(&crate::tails::binom((m + n) as u64, n as u64)));
    Ok(EvalResult {
        value: f.value.mul(&pref),
        error_estimate: f.error_estimate,
        terms_used: f.terms_used,
        converged: f.converged,
    })
}

/// q-hypergeometric series `phi_q(a, b; c; z)` with general rational
/// parameters.
pub fn q_phi(
    a: &BigRational,
    b: &BigRational,
    c: &BigRational,
    z: &BigRational,
    q: &BigRational,
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    if z.abs() >= BigRational::one() {
        return Err(Error::DivergentSeries(format!("phi_q requires |z| < 1, got {z}")));
    }
    let rctx = ctx.real_ctx();
    let z_real = rctx.from_rational(z);
    let q_real = rctx.from_rational(q);
    let rho = tail_rho(rat_to_f64(z).abs());
    let one = rctx.one();

    let mut term = rctx.one();
    let mut sum = rctx.one();
    let mut aq = rctx.from_rational(a); // a q^j
    let mut bq = rctx.from_rational(b);
    let mut cq = rctx.from_rational(c);
    let mut qj = q_real.clone(); // q^(j+1)
    let mut prev_abs = 1f64;
    for j in 0..ctx.max_terms {
        let den_c = one.sub(&cq);
        if den_c.is_zero() {
            return Err(Error::InvalidArgument(
                "q-Pochhammer of the gamma parameter vanishes".into(),
            ));
        }
        let num = one.sub(&aq).mul(&one.sub(&bq));
        let den = den_c.mul(&one.sub(&qj));
        term = term.mul(&num).div(&den).mul(&z_real);
        if term.is_zero() {
            return Ok(EvalResult {
                value: sum,
                error_estimate: 2f64.powi(-(ctx.precision_bits as i32)) * 8.0,
                terms_used: j + 1,
                converged: true,
            });
        }
        sum.add_assign(&term);
        aq = aq.mul(&q_real);
        bq = bq.mul(&q_real);
        cq = cq.mul(&q_real);
        qj = qj.mul(&q_real);
        let t_abs = term.to_f64().abs();
        let ratio = t_abs / prev_abs;
        prev_abs = t_abs;
        let bound = t_abs * rho / (1.0 - rho);
        if ratio <= rho && bound <= ctx.target_tol && j >= 2 {
            return Ok(EvalResult {
                value: sum,
                error_estimate: bound + 2f64.powi(-(ctx.precision_bits as i32)) * 8.0,
                terms_used: j + 1,
                converged: true,
            });
        }
    }
    Err(Error::NoConvergence {
        estimate: format!("{:.3e}", term.to_f64().abs()),
    })
}

/// q-connector `Cq^(model)(m, n; z)`; gamma is carried as the exponent
/// `m + n + 1`. Exactly 1 when `m = 0` or `n = 0`.
pub fn connector_cq(
    model: QModel,
    m: u32,
    n: u32,
    z: &BigRational,
    q: &BigRational,
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    let rctx = ctx.real_ctx();
    if m == 0 || n == 0 {
        return Ok(EvalResult {
            value: rctx.one(),
            error_estimate: 0.0,
            terms_used: 0,
            converged: true,
        });
    }
    if z.is_negative() || z.abs() >= BigRational::one() {
        return Err(Error::DivergentSeries(format!("connector requires 0 <= z < 1, got {z}")));
    }
    let (m, n) = (m.min(n), m.max(n));
    let q_real = rctx.from_rational(q);
    let arg = match model {
        QModel::One => rctx.from_rational(z),
        QModel::Two => rctx.from_rational(z).mul(&q_real),
    };
    let rho = tail_rho(rat_to_f64(z).abs().max(1e-3));
    let one = rctx.one();

    // prefactor: [m]![n]!/[m+n]! = prod_{t=1..n} [t]/[m+t], and q^(mn) for model 1
    let mut pref = rctx.one();
    let mut qt = q_real.clone(); // q^t
    let mut qmt = q_real.powi(m + 1); // q^(m+t)
    for _ in 1..=n {
        pref = pref.mul(&one.sub(&qt)).div(&one.sub(&qmt));
        qt = qt.mul(&q_real);
        qmt = qmt.mul(&q_real);
    }
    if model == QModel::One {
        pref = pref.mul(&q_real.powi(m * n));
    }

    // phi_q(q^m, q^n; q^(m+n+1); arg) with exponent-tracked parameters
    let mut term = rctx.one();
    let mut sum = rctx.one();
    let mut qa = q_real.powi(m); // q^(m+j)
    let mut qb = q_real.powi(n);
    let mut qg = q_real.powi(m + n + 1);
    let mut qj = q_real.clone();
    let mut used = 0;
    let mut prev_abs = 1f64;
    for j in 0..ctx.max_terms {
        used = j + 1;
        let num = one.sub(&qa).mul(&one.sub(&qb));
        let den = one.sub(&qg).mul(&one.sub(&qj));
        term = term.mul(&num).div(&den).mul(&arg);
        if term.is_zero() {
            break;
        }
        sum.add_assign(&term);
        qa = qa.mul(&q_real);
        qb = qb.mul(&q_real);
        qg = qg.mul(&q_real);
        qj = qj.mul(&q_real);
        let t_abs = term.to_f64().abs();
        let ratio = t_abs / prev_abs;
        prev_abs = t_abs;
        let bound = t_abs * rho / (1.0 - rho);
        if ratio <= rho && bound <= ctx.target_tol && j >= 2 {
            break;
        }
    }
    Ok(EvalResult {
        value: sum.mul(&pref),
        error_estimate: term.to_f64().abs() * rho / (1.0 - rho)
            + 2f64.powi(-(ctx.precision_bits as i32)) * 8.0,
        terms_used: used,
        converged: true,
    })
}

/// Identifier of one contiguous relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    HG1,
    HG2,
    Q1HG1,
    Q1HG2,
    Q2HG1,
    Q2HG2,
}

impl Relation {
    pub fn is_q(&self) -> bool {
        !matches!(self, Relation::HG1 | Relation::HG2)
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "HG1" => Ok(Relation::HG1),
            "HG2" => Ok(Relation::HG2),
            "Q1HG1" => Ok(Relation::Q1HG1),
            "Q1HG2" => Ok(Relation::Q1HG2),
            "Q2HG1" => Ok(Relation::Q2HG1),
            "Q2HG2" => Ok(Relation::Q2HG2),
            other => Err(Error::Parse(format!("unknown relation `{other}`"))),
        }
    }
}

/// Parameters for a contiguous-relation check.
#[derive(Debug, Clone)]
pub enum ContiguousParams {
    /// Rational `(alpha, beta, gamma)` for the classical relations.
    Classical {
        alpha: BigRational,
        beta: BigRational,
        gamma: BigRational,
    },
    /// `(q^a, q^b, q^c)` with rational `q` for the q-relations.
    QPowers { q: BigRational, a: u32, b: u32, c: u32 },
}

/// Exact residual report of one relation over `n = 0..=n_max`.
#[derive(Debug, Clone)]
pub struct ContiguousReport {
    pub relation: Relation,
    pub params: String,
    pub residuals: Vec<BigRational>,
    pub all_zero: bool,
}

/// Classical series coefficient `(a)_n (b)_n / ((c)_n n!)`.
fn classical_coeff(a: &BigRational, b: &BigRational, c: &BigRational, n: u32) -> BigRational {
    let mut fact = BigRational::one();
    for j in 1..=n {
        fact *= BigRational::from(BigInt::from(j));
    }
    rising_factorial(a, n) * rising_factorial(b, n) / (rising_factorial(c, n) * fact)
}

/// q-series coefficient `(a;q)_n (b;q)_n / ((c;q)_n (q;q)_n)` with the
/// parameters given as exponents of `q`.
fn q_coeff(q: &BigRational, a: u32, b: u32, c: u32, n: u32) -> BigRational {
    let pa = q_pochhammer(&pow_rat(q, a), q, n);
    let pb = q_pochhammer(&pow_rat(q, b), q, n);
    let pc = q_pochhammer(&pow_rat(q, c), q, n);
    let pq = q_pochhammer(q, q, n);
    pa * pb / (pc * pq)
}

/// Check one contiguous relation exactly, coefficient by coefficient.
///
/// Nonzero residuals are reported, not raised as errors.
pub fn check_contiguous(
    relation: Relation,
    params: &ContiguousParams,
    n_max: u32,
) -> Result<ContiguousReport> {
    let one = BigRational::one();
    let mut residuals = Vec::with_capacity(n_max as usize + 1);
    match (relation, params) {
        (Relation::HG1, ContiguousParams::Classical { alpha, beta, gamma }) => {
            if gamma.is_zero() {
                return Err(Error::InvalidArgument("gamma must be nonzero".into()));
            }
            for n in 0..=n_max {
                let lhs = classical_coeff(alpha, beta, gamma, n);
                let mut rhs = classical_coeff(alpha, &(beta + &one), gamma, n);
                if n >= 1 {
                    rhs -= alpha / gamma
                        * classical_coeff(&(alpha + &one), &(beta + &one), &(gamma + &one), n - 1);
                }
                residuals.push(lhs - rhs);
            }
        }
        (Relation::HG2, ContiguousParams::Classical { alpha, beta, gamma }) => {
            for n in 0..=n_max {
                let lhs = (gamma - alpha) * classical_coeff(alpha, beta, &(gamma + &one), n);
                let rhs = gamma * classical_coeff(alpha, beta, gamma, n)
                    - alpha * classical_coeff(&(alpha + &one), beta, &(gamma + &one), n);
                residuals.push(lhs - rhs);
            }
        }
        (rel, ContiguousParams::QPowers { q, a, b, c }) if rel.is_q() => {
            let alpha = pow_rat(q, *a);
            let beta = pow_rat(q, *b);
            let gamma = pow_rat(q, *c);
            if gamma == one {
                return Err(Error::InvalidArgument("gamma = 1 is not allowed".into()));
            }
            for n in 0..=n_max {
                let res = match rel {
                    Relation::Q1HG1 => {
                        let lhs = q_coeff(q, *a, *b, *c, n);
                        let mut rhs = q_coeff(q, *a, *b + 1, *c, n);
                        if n >= 1 {
                            rhs -= (&one - &alpha) * &beta / (&one - &gamma)
                                * q_coeff(q, *a + 1, *b + 1, *c + 1, n - 1);
                        }
                        lhs - rhs
                    }
                    Relation::Q1HG2 => {
                        let lhs = (&alpha - &gamma) * q_coeff(q, *a, *b, *c + 1, n);
                        let rhs = (&one - &gamma) * &alpha * q_coeff(q, *a, *b, *c, n)
                            - (&one - &alpha) * &gamma * q_coeff(q, *a + 1, *b, *c + 1, n);
                        lhs - rhs
                    }
                    Relation::Q2HG1 => {
                        // the shifted argument q z contributes q^n on the left
                        let lhs = pow_rat(q, n) * q_coeff(q, *a, *b, *c, n);
                        let mut rhs = q_coeff(q, *a, *b + 1, *c, n);
                        if n >= 1 {
                            rhs -= (&one - &alpha) / (&one - &gamma)
                                * q_coeff(q, *a + 1, *b + 1, *c + 1, n - 1);
                        }
                        lhs - rhs
                    }
                    Relation::Q2HG2 => {
                        let lhs = (&alpha - &gamma) * pow_rat(q, n) * q_coeff(q, *a, *b, *c + 1, n);
                        let rhs = (&one - &gamma) * q_coeff(q, *a, *b, *c, n)
                            - (&one - &alpha) * q_coeff(q, *a + 1, *b, *c + 1, n);
                        lhs - rhs
                    }
                    _ => unreachable!(),
                };
                residuals.push(res);
            }
        }
        _ => {
            return Err(Error::InvalidArgument(
                "relation and parameter kinds do not match".into(),
            ))
        }
    }
    let all_zero = residuals.iter().all(|r| r.is_zero());
    Ok(ContiguousReport {
        relation,
        params: match params {
            ContiguousParams::Classical { alpha, beta, gamma } => {
                format!("alpha={alpha} beta={beta} gamma={gamma}")
            }
            ContiguousParams::QPowers { q, a, b, c } => format!("q={q} a={a} b={b} c={c}"),
        },
        residuals,
        all_zero,
    })
}

/// Connector prefactor `m! n!/(m+n)!` as an exact rational.
pub fn connector_prefactor(m: u32, n: u32) -> BigRational {
    BigRational::new(BigInt::one(), crate::tails::binom((m + n) as u64, n as u64))
}

/// Exact q-connector prefactor (model 1): `q^(mn) [m]![n]!/[m+n]!`.
pub fn connector_cq_prefactor(model: QModel, m: u32, n: u32, q: &BigRational) -> BigRational {
    let mut pref = q_factorial(m, q) * q_factorial(n, q) / q_factorial(m + n, q);
    if model == QModel::One {
        pref *= pow_rat(q, m * n);
    }
    pref
}

#[allow(unused)]
pub(crate) fn real_from_rat(rctx: &RealCtx, r: &BigRational) -> Real {
    rctx.from_rational(r)
}

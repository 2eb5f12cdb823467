//! High-precision evaluation of multiple polylogarithms, the augmented
//! series `Li~(k; z)`, and the linear map `L` on `A0`.
//!
//! # Algorithm
//!
//! Every series here is a nested sum over chains `0 = m_0 < m_1 < ... < m_r`
//! whose level-`i` factor has the shape
//!
//! ```text
//! (c1_i + cz_i * z_i^(m_i - m_{i-1})) / m_i^{k_i},
//! ```
//!
//! with `c1 in {0,1}`, `cz in {-1,0,1}`. The augmented series uses
//! `(c1, cz) = (mu, (-1)^mu)` with a common `z`; a plain multiple
//! polylogarithm argument `z_i` gives `(0, 1)`, and `z_i = 1` folds into
//! the constant part.
//!
//! Evaluation runs right to left over suffix tails
//!
//! ```text
//! U_j(m) = sum_{n > m} (c1_j + cz_j z_j^(n-m)) / n^{k_j} * U_{j+1}(n),
//! ```
//!
//! so the answer is `U_1(0)`. Splitting `U_j = c1_j V_j + cz_j W_j` gives
//! the stable downward recurrences
//!
//! ```text
//! V_j(m) = V_j(m+1) + U_{j+1}(m+1)/(m+1)^{k_j},
//! W_j(m) = z_j * (W_j(m+1) + U_{j+1}(m+1)/(m+1)^{k_j}),
//! ```
//!
//! which cost `O(r M)`. Plain truncation of the boundary values at `m = M`
//! would converge like `1/M` (far too slowly for 1e-12 tolerances), so the
//! boundary data is instead produced from asymptotic expansions of `U_j` in
//! powers of `1/m`: the constant part propagates through Euler-Maclaurin
//! zeta-tail expansions and the geometric part through the power-sum
//! constants `Lambda_i(z)` (see [`crate::tails`]). In this suffix form the
//! `z`-powers attach to gaps `n - m`, so every `U_j` admits a pure power
//! expansion; at `z = -1` the same formulas hold with Abel-summed
//! `Lambda_i`, covering the alternating (T-value) domain.

use crate::error::{Error, Result};
use crate::index::AugmentedIndex;
use crate::precision::{EvalResult, PrecisionContext};
use crate::real::{Real, RealCtx};
use crate::tails::{binom_neg, lambda_values, rat_to_f64, zeta_tail_expansion};
use crate::word::{expand_in_basis, index_of_word, is_in_a0, parse_blocks, InputPoly, InputWord};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Hard cap on table lengths, independent of `max_terms`.
const TABLE_CAP: u32 = 1 << 16;
/// Expansion order (powers of `1/m` kept in suffix expansions).
const EXPANSION_ORDER: usize = 36;

/// One level of a nested series: factor `(c1 + cz z^(d)) / m^k`.
#[derive(Debug, Clone)]
pub struct Level {
    pub k: u32,
    pub c1: i8,
    pub cz: i8,
    pub z: BigRational,
}

/// Levels of the augmented series `Li~(k; z)`.
pub fn levels_for_tilde(idx: &AugmentedIndex, z: &BigRational) -> Vec<Level> {
    idx.0
        .iter()
        .map(|c| Level {
            k: c.k,
            c1: c.mu as i8,
            cz: if c.mu == 0 { 1 } else { -1 },
            z: z.clone(),
        })
        .collect()
}

/// Levels of `Li_k(z_1, ..., z_r)`; arguments equal to 1 fold into the
/// constant part.
pub fn levels_for_mpl(ks: &[u32], zs: &[BigRational]) -> Result<Vec<Level>> {
    if ks.len() != zs.len() {
        return Err(Error::InvalidArgument(
            "index and argument lists must have equal length".into(),
        ));
    }
    let one = BigRational::one();
    let mut levels = Vec::with_capacity(ks.len());
    for (&k, z) in ks.iter().zip(zs) {
        if k == 0 {
            return Err(Error::InvalidArgument("exponents must be >= 1".into()));
        }
        if z.abs() > one {
            return Err(Error::DivergentSeries(format!("|z_i| > 1 for z_i = {z}")));
        }
        if *z == one {
            levels.push(Level { k, c1: 1, cz: 0, z: BigRational::zero() });
        } else {
            levels.push(Level { k, c1: 0, cz: 1, z: z.clone() });
        }
    }
    Ok(levels)
}

/// Convergence analysis: returns `Ok(true)` when the series is identically
/// zero, `Ok(false)` when it converges, and `DivergentSeries` otherwise.
///
/// Tracks the minimal power decay `pm` of the suffix tails: a constant part
/// at level `j` needs `k_j + pm >= 2`; it then decays one power slower than
/// the geometric part.
fn check_levels(levels: &[Level]) -> Result<bool> {
    for lv in levels {
        let effective_cz = lv.cz != 0 && !lv.z.is_zero();
        if lv.c1 == 0 && !effective_cz {
            return Ok(true);
        }
    }
    let mut pm: i64 = 0;
    for lv in levels.iter().rev() {
        let has_c1 = lv.c1 != 0;
        let has_cz = lv.cz != 0 && !lv.z.is_zero();
        if has_c1 && (lv.k as i64 + pm) < 2 {
            return Err(Error::DivergentSeries(
                "constant part with sub-harmonic suffix decay".into(),
            ));
        }
        let mut new_pm = i64::MAX;
        if has_c1 {
            new_pm = new_pm.min(lv.k as i64 + pm - 1);
        }
        if has_cz {
            new_pm = new_pm.min(lv.k as i64 + pm);
        }
        pm = new_pm;
    }
    Ok(false)
}

/// Shared expansion tables converted to fixed-point, cached per run.
struct ExpansionTables {
    rctx: RealCtx,
    pmax: usize,
    zeta: HashMap<u32, Vec<Real>>,
    zeta_err_at_m: HashMap<u32, f64>,
    lambda: HashMap<BigRational, Vec<Real>>,
    lambda_f64: HashMap<BigRational, Vec<f64>>,
    m_anchor: f64,
}

impl ExpansionTables {
    fn new(rctx: RealCtx, pmax: usize, m_anchor: f64) -> Self {
        ExpansionTables {
            rctx,
            pmax,
            zeta: HashMap::new(),
            zeta_err_at_m: HashMap::new(),
            lambda: HashMap::new(),
            lambda_f64: HashMap::new(),
            m_anchor,
        }
    }

    fn zeta_tail(&mut self, s: u32) -> (&[Real], f64) {
        if !self.zeta.contains_key(&s) {
            let exp = zeta_tail_expansion(s, self.pmax);
            let coeffs: Vec<Real> = exp.coeffs.iter().map(|c| self.rctx.from_rational(c)).collect();
            let err = exp.err_at(self.m_anchor);
            self.zeta.insert(s, coeffs);
            self.zeta_err_at_m.insert(s, err);
        }
        (
            self.zeta.get(&s).unwrap().as_slice(),
            *self.zeta_err_at_m.get(&s).unwrap(),
        )
    }

    fn lambdas(&mut self, z: &BigRational) -> (&[Real], &[f64]) {
        if !self.lambda.contains_key(z) {
            let vals = lambda_values(z, self.pmax + 2);
            let as_f64: Vec<f64> = vals.iter().map(rat_to_f64).collect();
            let as_real: Vec<Real> = vals.iter().map(|v| self.rctx.from_rational(v)).collect();
            self.lambda.insert(z.clone(), as_real);
            self.lambda_f64.insert(z.clone(), as_f64);
        }
        (
            self.lambda.get(z).unwrap().as_slice(),
            self.lambda_f64.get(z).unwrap().as_slice(),
        )
    }
}

fn eval_poly_inv(coeffs: &[Real], inv_m: &Real, rctx: &RealCtx) -> Real {
    let mut acc = rctx.zero();
    for c in coeffs.iter().rev() {
        acc = acc.mul(inv_m);
        acc.add_assign(c);
    }
    acc
}

/// One evaluation pass at truncation `m_cut` and fixed expansion order.
fn evaluate_once(levels: &[Level], rctx: &RealCtx, m_cut: u32) -> (Real, f64) {
    let pmax = EXPANSION_ORDER;
    let m_f = m_cut as f64;
    let mut tables = ExpansionTables::new(*rctx, pmax, m_f);

    // level r+1: U = 1
    let mut exp_next: Vec<Real> = vec![rctx.zero(); pmax + 1];
    exp_next[0] = rctx.one();
    let mut exp_err_next = 0f64;
    let mut table_next: Option<Vec<Real>> = None;
    let mut tab_err_next = 0f64;

    for lv in levels.iter().rev() {
        let k = lv.k;
        let has_c1 = lv.c1 != 0;
        let has_cz = lv.cz != 0 && !lv.z.is_zero();
        let z_real = rctx.from_rational(&lv.z);
        let z_abs = rat_to_f64(&lv.z).abs();

        let mut ev = vec![rctx.zero(); pmax + 1];
        let mut ew = vec![rctx.zero(); pmax + 1];
        let mut err_v = 0f64;
        let mut err_w = 0f64;

        if has_c1 {
            for p in 0..=pmax {
                if exp_next[p].is_zero() {
                    continue;
                }
                let s = k as usize + p;
                let beta_abs = exp_next[p].to_f64().abs();
                if s - 1 > pmax {
                    // contribution entirely below the kept orders
                    err_v += beta_abs * 2.0 * m_f.powi(-(s as i32 - 1)) / (s as f64 - 1.0);
                    continue;
                }
                let (coeffs, herr) = tables.zeta_tail(s as u32);
                let coeffs = coeffs.to_vec();
                for (p2, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        let term = exp_next[p].mul(c);
                        ev[p2].add_assign(&term);
                    }
                }
                err_v += beta_abs * herr;
            }
            err_v += exp_err_next * 2.0 * m_f.powi(1 - k as i32);
        }

        if has_cz {
            let (lam, lam_f64) = tables.lambdas(&lv.z);
            let lam = lam.to_vec();
            let lam_f64 = lam_f64.to_vec();
            for p in 0..=pmax {
                if exp_next[p].is_zero() {
                    continue;
                }
                let t = p + k as usize;
                let beta_abs = exp_next[p].to_f64().abs();
                if t > pmax {
                    err_w += beta_abs
                        * (z_abs / (1.0 - z_abs).max(1.0 / m_f)).min(m_f)
                        * m_f.powi(-(t as i32));
                    continue;
                }
                for i in 0..=(pmax - t) {
                    if lam[i].is_zero() {
                        continue;
                    }
                    let coef = lam[i].mul_bigint(&binom_neg(t as u64, i as u64));
                    let term = exp_next[p].mul(&coef);
                    ew[t + i].add_assign(&term);
                }
                // first dropped order of the i-sum
                let i_next = pmax - t + 1;
                let dropped = rat_to_f64(&BigRational::from(binom_neg(t as u64, i_next as u64)))
                    .abs()
                    * lam_f64[i_next].abs();
                err_w += beta_abs * dropped * m_f.powi(-((t + i_next) as i32)) * 2.0;
            }
            let zfac = if z_abs < 1.0 {
                (z_abs / (1.0 - z_abs)) * m_f.powi(-(k as i32))
            } else {
                2.0 * m_f.powi(1 - k as i32)
            };
            err_w += exp_err_next * 2.0 * zfac;
        }

        // combined expansion of U_j and its tail-truncation estimate
        let mut exp_cur = vec![rctx.zero(); pmax + 1];
        for p in 0..=pmax {
            let mut v = rctx.zero();
            if has_c1 {
                v.add_assign(&ev[p].mul_i64(lv.c1 as i64));
            }
            if has_cz {
                v.add_assign(&ew[p].mul_i64(lv.cz as i64));
            }
            exp_cur[p] = v;
        }
        let trunc = exp_cur[pmax].to_f64().abs() * m_f.powi(-(pmax as i32));
        let exp_err_cur = err_v + err_w + trunc;

        // boundary values at m = M from the split expansions
        let inv_m = rctx.one().div_i64(m_cut as i64);
        let mut v_run = eval_poly_inv(&ev, &inv_m, rctx);
        let mut w_run = eval_poly_inv(&ew, &inv_m, rctx);

        // downward tables
        let mut table_cur = vec![rctx.zero(); m_cut as usize + 1];
        let combine = |v: &Real, w: &Real| -> Real {
            let mut out = rctx.zero();
            if has_c1 {
                out.add_assign(&v.mul_i64(lv.c1 as i64));
            }
            if has_cz {
                out.add_assign(&w.mul_i64(lv.cz as i64));
            }
            out
        };
        table_cur[m_cut as usize] = combine(&v_run, &w_run);
        for m in (0..m_cut).rev() {
            let n = m + 1;
            let mut t = match &table_next {
                Some(tab) => tab[n as usize].clone(),
                None => rctx.one(),
            };
            for _ in 0..k {
                t = t.div_i64(n as i64);
            }
            if has_c1 {
                v_run.add_assign(&t);
            }
            if has_cz {
                w_run.add_assign(&t);
                w_run = z_real.mul(&w_run);
            }
            table_cur[m as usize] = combine(&v_run, &w_run);
        }

        let wsum_c1 = if k == 1 { m_f.ln() + 1.0 } else { 2.0 };
        let wsum_cz = if z_abs < 1.0 {
            (z_abs / (1.0 - z_abs)).min(m_f)
        } else {
            m_f
        };
        let tab_err_cur = exp_err_cur
            + tab_err_next * (if has_c1 { wsum_c1 } else { 0.0 } + if has_cz { wsum_cz } else { 0.0 });

        exp_next = exp_cur;
        exp_err_next = exp_err_cur;
        table_next = Some(table_cur);
        tab_err_next = tab_err_cur;
    }

    let value = table_next.expect("at least one level")[0].clone();
    (value, tab_err_next)
}

/// Initial truncation: the expansions need `m` comfortably past the
/// geometric range `1/(1-z)` before their terms decay.
fn initial_m(levels: &[Level]) -> u32 {
    let mut zeff = 0f64;
    let mut kmax = 1u32;
    for lv in levels {
        kmax = kmax.max(lv.k);
        if lv.cz != 0 && !lv.z.is_zero() {
            let a = rat_to_f64(&lv.z).abs();
            let a = if a >= 1.0 { 0.4 } else { a };
            zeff = zeff.max(a);
        }
    }
    let base = 3.2 * (EXPANSION_ORDER as f64 + kmax as f64) / (1.0 - zeff);
    (base.ceil() as u32).max(96).next_multiple_of(16)
}

/// Evaluate a nested series described by `levels`.
pub fn evaluate_levels(levels: &[Level], ctx: &PrecisionContext) -> Result<EvalResult> {
    let rctx = ctx.real_ctx();
    if levels.is_empty() {
        return Ok(EvalResult {
            value: rctx.one(),
            error_estimate: 0.0,
            terms_used: 0,
            converged: true,
        });
    }
    if check_levels(levels)? {
        return Ok(EvalResult {
            value: rctx.zero(),
            error_estimate: 0.0,
            terms_used: 0,
            converged: true,
        });
    }
    let rounding = 2f64.powi(-(ctx.precision_bits as i32)) * 16.0;
    let cap = ctx.max_terms.min(TABLE_CAP);
    let mut m_cut = initial_m(levels).min(cap);
    loop {
        let (value, err) = evaluate_once(levels, &rctx, m_cut);
        let err = err + rounding;
        if err <= ctx.target_tol {
            return Ok(EvalResult {
                value,
                error_estimate: err,
                terms_used: m_cut,
                converged: true,
            });
        }
        if !ctx.adaptive || m_cut >= cap {
            return Err(Error::NoConvergence {
                estimate: format!("{err:.3e}"),
            });
        }
        m_cut = (m_cut * 2).min(cap);
    }
}

/// The augmented one-variable series `Li~(k; z)`.
///
/// Domain: admissible `k`; real `|z| < 1`, or `z = -1` when the final
/// exponent is at least 2 (the T-value domain).
pub fn tilde_li(idx: &AugmentedIndex, z: &BigRational, ctx: &PrecisionContext) -> Result<EvalResult> {
    idx.ensure_admissible()?;
    check_tilde_domain(idx, z)?;
    evaluate_levels(&levels_for_tilde(idx, z), ctx)
}

fn check_tilde_domain(idx: &AugmentedIndex, z: &BigRational) -> Result<()> {
    let one = BigRational::one();
    if z.abs() < one {
        return Ok(());
    }
    if *z == -&one {
        if idx.is_empty() || idx.0.last().unwrap().k >= 2 {
            return Ok(());
        }
        return Err(Error::DivergentSeries(
            "z = -1 requires the final exponent to be >= 2".into(),
        ));
    }
    Err(Error::DivergentSeries(format!("z = {z} is outside the domain")))
}

/// Multiple polylogarithm `Li_k(z_1, ..., z_r)` with real arguments.
///
/// Convergence guard: if every `|z_i| = 1` the final exponent must be at
/// least 2; interleavings of unit and sub-unit arguments are accepted
/// whenever the suffix decay analysis shows convergence.
pub fn multiple_polylog(
    ks: &[u32],
    zs: &[BigRational],
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    let one = BigRational::one();
    if !ks.is_empty() {
        let all_unit = zs.iter().all(|z| z.abs() == one);
        if all_unit && ks[ks.len() - 1] < 2 {
            return Err(Error::DivergentSeries(
                "all |z_i| = 1 requires k_r >= 2".into(),
            ));
        }
    }
    let levels = levels_for_mpl(ks, zs)?;
    evaluate_levels(&levels, ctx)
}

/// One-variable multiple polylogarithm `Li^I_k(z)`: argument `z` at the
/// (1-based) positions in `I` and 1 elsewhere.
pub fn one_var_mpl(
    ks: &[u32],
    positions: &[usize],
    z: &BigRational,
    ctx: &PrecisionContext,
) -> Result<EvalResult> {
    let r = ks.len();
    for &i in positions {
        if i == 0 || i > r {
            return Err(Error::InvalidIndex(format!("position {i} out of range")));
        }
    }
    if r > 0 && ks[r - 1] == 1 && !positions.contains(&r) {
        return Err(Error::InvalidIndex(
            "requires k_r != 1 or r in I".into(),
        ));
    }
    if z.abs() >= BigRational::one() {
        return Err(Error::DivergentSeries(format!("requires |z| < 1, got {z}")));
    }
    let zs: Vec<BigRational> = (1..=r)
        .map(|i| if positions.contains(&i) { z.clone() } else { BigRational::one() })
        .collect();
    multiple_polylog(ks, &zs, ctx)
}

/// The linear map `L` on `A0`, through the basis expansion: `L(w(k)) = Li~(k; z)`
/// extended linearly.
pub fn l_map(p: &InputPoly, z: &BigRational, ctx: &PrecisionContext) -> Result<EvalResult> {
    if !is_in_a0(p) {
        return Err(Error::NotInA0);
    }
    let rctx = ctx.real_ctx();
    let expanded = expand_in_basis(p);
    let mut value = rctx.zero();
    let mut err = 0f64;
    let mut terms = 0u32;
    for (w, c) in expanded.terms() {
        let idx = index_of_word(w)?;
        let r = tilde_li(&idx, z, ctx)?;
        value.add_assign(&r.value.mul(&rctx.from_rational(c)));
        err += rat_to_f64(c).abs() * r.error_estimate;
        terms = terms.max(r.terms_used);
    }
    Ok(EvalResult {
        value,
        error_estimate: err,
        terms_used: terms,
        converged: true,
    })
}

/// `L` on a single monomial via its block decomposition:
/// `L(e_{z_1} e_0^{k_1-1} ... e_{z_r} e_0^{k_r-1}) = (-1)^r Li^I_k(z)`.
pub fn l_monomial(w: &InputWord, z: &BigRational, ctx: &PrecisionContext) -> Result<EvalResult> {
    if w.is_empty() {
        return Ok(EvalResult {
            value: ctx.real_ctx().one(),
            error_estimate: 0.0,
            terms_used: 0,
            converged: true,
        });
    }
    let (ks, positions) = parse_blocks(w)?;
    let r = ks.len();
    let mut res = one_var_mpl(&ks, &positions, z, ctx)?;
    if r % 2 == 1 {
        res.value = res.value.neg();
    }
    Ok(res)
}

/// Multiple zeta value `zeta(k)`, evaluated as `Li~` of the all-marker-1
/// index at `z = 0`.
pub fn mzv(ks: &[u32], ctx: &PrecisionContext) -> Result<EvalResult> {
    if ks.is_empty() || ks[ks.len() - 1] < 2 {
        return Err(Error::InvalidIndex("zeta requires k_r >= 2".into()));
    }
    let idx = AugmentedIndex::from_classical(ks);
    tilde_li(&idx, &BigRational::zero(), ctx)
}

/// Kaneko-Tsumura T-value, `Li~` of the all-marker-1 index at `z = -1`.
pub fn t_value(ks: &[u32], ctx: &PrecisionContext) -> Result<EvalResult> {
    if ks.is_empty() || ks[ks.len() - 1] < 2 {
        return Err(Error::InvalidIndex("T requires k_r >= 2".into()));
    }
    let idx = AugmentedIndex::from_classical(ks);
    tilde_li(&idx, &BigRational::from_integer((-1).into()), ctx)
}

/// Truncated sums of the same chains, organized by the final summation
/// variable: `F(m)` collects every chain with `m_r = m <= M`.
#[derive(Debug, Clone)]
pub struct EndWeightVector {
    pub values: Vec<Real>,
    pub truncation: u32,
}

impl EndWeightVector {
    /// `sum_m F(m)`, the truncated value of the underlying series.
    pub fn total(&self, rctx: &RealCtx) -> Real {
        let mut acc = rctx.zero();
        for v in &self.values {
            acc.add_assign(v);
        }
        acc
    }
}

/// Forward level-by-level recurrence: exact end weights up to `M`.
///
/// Each entry is the finite sum over chains with the given final variable,
/// so the entries themselves carry no truncation error.
pub fn end_weights(levels: &[Level], m_cut: u32, rctx: &RealCtx) -> EndWeightVector {
    let len = m_cut as usize + 1;
    let mut f_prev: Vec<Real> = vec![rctx.zero(); len];
    f_prev[0] = rctx.one();
    for lv in levels {
        let z_real = rctx.from_rational(&lv.z);
        let has_c1 = lv.c1 != 0;
        let has_cz = lv.cz != 0 && !lv.z.is_zero();
        let mut f_cur: Vec<Real> = vec![rctx.zero(); len];
        let mut pref = f_prev[0].clone();
        let mut rz = z_real.mul(&f_prev[0]);
        for m in 1..len {
            let mut val = rctx.zero();
            if has_c1 {
                val.add_assign(&pref.mul_i64(lv.c1 as i64));
            }
            if has_cz {
                val.add_assign(&rz.mul_i64(lv.cz as i64));
            }
            for _ in 0..lv.k {
                val = val.div_i64(m as i64);
            }
            f_cur[m] = val;
            pref.add_assign(&f_prev[m]);
            if has_cz {
                rz.add_assign(&f_prev[m]);
                rz = z_real.mul(&rz);
            }
        }
        f_prev = f_cur;
    }
    EndWeightVector {
        values: f_prev,
        truncation: m_cut,
    }
}

/// End weights of the augmented series `Li~(k; z)`.
pub fn tilde_li_end_weights(
    idx: &AugmentedIndex,
    z: &BigRational,
    m_cut: u32,
    ctx: &PrecisionContext,
) -> Result<EndWeightVector> {
    idx.ensure_admissible()?;
    check_tilde_domain(idx, z)?;
    Ok(end_weights(&levels_for_tilde(idx, z), m_cut, &ctx.real_ctx()))
}

/// Truncated partial sum of `Li~(k; z)` with all chain variables `<= M`.
pub fn tilde_li_partial_sum(
    idx: &AugmentedIndex,
    z: &BigRational,
    m_cut: u32,
    ctx: &PrecisionContext,
) -> Result<Real> {
    let rctx = ctx.real_ctx();
    Ok(tilde_li_end_weights(idx, z, m_cut, ctx)?.total(&rctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::parse_rational;
    use crate::word::dual_index;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn assert_close(r: &EvalResult, digits: &str, tol: f64) {
        let c = ctx().real_ctx();
        let expect = c.from_rational(&parse_rational(digits).unwrap());
        let diff = r.value.sub(&expect).abs().to_f64();
        assert!(
            diff < tol,
            "value {} differs from {} by {diff:.3e}",
            r.value.to_decimal(40),
            digits
        );
    }

    const ZETA2: &str = "1.644934066848226436472415166646025189218949901206";
    const ZETA3: &str = "1.202056903159594285399738161511449990764986292340";
    const ZETA4: &str = "1.082323233711138191516003696541167902774750951918";
    const LN2: &str = "0.693147180559945309417232121458176568075500134360";
    const LI2_HALF: &str = "0.582240526465012505902656320159680108744198474806";
    const T2: &str = "2.467401100272339654708622749969037783828424851810";

    #[test]
    fn single_zeta_values() {
        assert_close(&mzv(&[2], &ctx()).unwrap(), ZETA2, 1e-30);
        assert_close(&mzv(&[3], &ctx()).unwrap(), ZETA3, 1e-30);
        assert_close(&mzv(&[4], &ctx()).unwrap(), ZETA4, 1e-30);
    }

    #[test]
    fn depth_two_zeta_values() {
        // zeta(1,2) = zeta(3), zeta(1,3) = pi^4/360, zeta(2,2) = pi^4/120
        assert_close(&mzv(&[1, 2], &ctx()).unwrap(), ZETA3, 1e-28);
        assert_close(
            &mzv(&[1, 3], &ctx()).unwrap(),
            "0.270580808427784547879000924135291975693687737979",
            1e-28,
        );
        assert_close(
            &mzv(&[2, 2], &ctx()).unwrap(),
            "0.811742425283353643637002772405875927081063213939",
            1e-28,
        );
        assert_close(&mzv(&[1, 1, 2], &ctx()).unwrap(), ZETA4, 1e-28);
    }

    #[test]
    fn dilog_and_log() {
        let half = parse_rational("1/2").unwrap();
        let r = tilde_li(
            &AugmentedIndex::from_pairs(&[(2, 0)]),
            &half,
            &ctx(),
        )
        .unwrap();
        assert_close(&r, LI2_HALF, 1e-30);
        let r = tilde_li(&AugmentedIndex::from_pairs(&[(1, 0)]), &half, &ctx()).unwrap();
        assert_close(&r, LN2, 1e-30);
    }

    #[test]
    fn t_values_at_minus_one() {
        assert_close(&t_value(&[2], &ctx()).unwrap(), T2, 1e-28);
        let r = tilde_li(
            &AugmentedIndex::from_pairs(&[(2, 1)]),
            &parse_rational("-1").unwrap(),
            &ctx(),
        )
        .unwrap();
        assert_close(&r, T2, 1e-28);
    }

    #[test]
    fn z_zero_collapse() {
        let c = ctx();
        let z0 = BigRational::zero();
        let r = tilde_li(&AugmentedIndex::from_pairs(&[(2, 0)]), &z0, &c).unwrap();
        assert!(r.value.is_zero());
        let r = tilde_li(&AugmentedIndex::from_pairs(&[(2, 1), (1, 0)]), &z0, &c).unwrap();
        assert!(r.value.is_zero());
        let r = tilde_li(&AugmentedIndex::from_pairs(&[(2, 1)]), &z0, &c).unwrap();
        assert_close(&r, ZETA2, 1e-30);
    }

    #[test]
    fn empty_index_is_one() {
        let r = tilde_li(
            &AugmentedIndex::empty(),
            &parse_rational("0.9").unwrap(),
            &ctx(),
        )
        .unwrap();
        assert_eq!(r.value, ctx().real_ctx().one());
    }

    #[test]
    fn duality_weight_three() {
        let c = ctx();
        for z in ["0", "1/2", "9/10"] {
            let z = parse_rational(z).unwrap();
            for idx in crate::word::enumerate_admissible(3) {
                let dual = dual_index(&idx).unwrap();
                let a = tilde_li(&idx, &z, &c).unwrap();
                let b = tilde_li(&dual, &z, &c).unwrap();
                let diff = a.value.sub(&b.value).abs().to_f64();
                assert!(
                    diff <= 1e-13,
                    "duality failed for {idx} vs {dual} at z={z}: {diff:.3e}"
                );
            }
        }
    }

    #[test]
    fn one_var_mpl_examples() {
        let c = ctx();
        let half = parse_rational("1/2").unwrap();
        // I = {} gives the zeta value regardless of z
        let r = one_var_mpl(&[1, 2], &[], &half, &c).unwrap();
        assert_close(&r, ZETA3, 1e-28);
        // Li_2(1/2)
        let r = one_var_mpl(&[2], &[1], &half, &c).unwrap();
        assert_close(&r, LI2_HALF, 1e-30);
        // z = 0 with I = {1..r} vanishes
        let r = one_var_mpl(&[2, 1], &[1, 2], &BigRational::zero(), &c).unwrap();
        assert!(r.value.is_zero());
        // precondition: k_r = 1 needs r in I
        assert!(one_var_mpl(&[1], &[], &half, &c).is_err());
    }

    #[test]
    fn l_map_examples() {
        let c = ctx();
        let half = parse_rational("1/2").unwrap();
        // L(1) = 1
        let r = l_map(&InputPoly::one(), &half, &c).unwrap();
        assert_eq!(r.value, c.real_ctx().one());
        // L(e1 e0 e0) = -zeta(3)
        let p = InputPoly::from_word(InputWord::parse("100").unwrap());
        let r = l_map(&p, &half, &c).unwrap();
        let neg = r.value.neg();
        let e = EvalResult { value: neg, ..r };
        assert_close(&e, ZETA3, 1e-28);
        // L(ez) = ln(1 - z) = -ln 2 at z = 1/2
        let p = InputPoly::from_word(InputWord::parse("z").unwrap());
        let r = l_map(&p, &half, &c).unwrap();
        let e = EvalResult { value: r.value.neg(), ..r };
        assert_close(&e, LN2, 1e-30);
        // monomial route agrees with the basis route
        let p = InputPoly::from_word(InputWord::parse("z10").unwrap());
        let a = l_map(&p, &half, &c).unwrap();
        let b = l_monomial(&InputWord::parse("z10").unwrap(), &half, &c).unwrap();
        assert!(a.value.sub(&b.value).abs().to_f64() < 1e-25);
    }

    #[test]
    fn l_map_rejects_outside_a0() {
        let c = ctx();
        let half = parse_rational("1/2").unwrap();
        let p = InputPoly::from_word(InputWord::parse("0").unwrap());
        assert!(matches!(l_map(&p, &half, &c), Err(Error::NotInA0)));
    }

    #[test]
    fn end_weight_entries_match_formulas() {
        let c = ctx();
        let rctx = c.real_ctx();
        let half = parse_rational("1/2").unwrap();
        // (1,0): F(m) = z^m / m
        let f = tilde_li_end_weights(&AugmentedIndex::from_pairs(&[(1, 0)]), &half, 20, &c).unwrap();
        for m in 1..=20u32 {
            let expect = rctx
                .from_rational(&half)
                .powi(m)
                .div_i64(m as i64);
            assert!(f.values[m as usize].sub(&expect).abs().to_f64() < 1e-60);
        }
        // (2,1): F(m) = (1 - z^m) / m^2
        let f = tilde_li_end_weights(&AugmentedIndex::from_pairs(&[(2, 1)]), &half, 20, &c).unwrap();
        for m in 1..=20u32 {
            let expect = rctx
                .one()
                .sub(&rctx.from_rational(&half).powi(m))
                .div_i64((m * m) as i64);
            assert!(f.values[m as usize].sub(&expect).abs().to_f64() < 1e-60);
        }
        // empty index: F(0) = 1
        let f = tilde_li_end_weights(&AugmentedIndex::empty(), &half, 5, &c).unwrap();
        assert_eq!(f.values[0], rctx.one());
    }

    #[test]
    fn partial_sum_approaches_full_value() {
        let c = ctx();
        let half = parse_rational("1/2").unwrap();
        let idx = AugmentedIndex::from_pairs(&[(1, 1), (2, 1)]);
        let full = tilde_li(&idx, &half, &c).unwrap();
        let p200 = tilde_li_partial_sum(&idx, &half, 200, &c).unwrap();
        let p400 = tilde_li_partial_sum(&idx, &half, 400, &c).unwrap();
        let d200 = full.value.sub(&p200).abs().to_f64();
        let d400 = full.value.sub(&p400).abs().to_f64();
        assert!(d400 < d200, "partial sums should improve monotonically");
        assert!(d200 < 5e-2 && d200 > 0.0);
    }

    #[test]
    fn nine_term_relation_at_half() {
        // zeta(3) = Li_{1,1,1}(z,z,z) - Li_{1,1,1}(z,1,z) - Li_{1,1,1}(1,z,z)
        //         + Li_{1,1,1}(1,1,z) + Li_{1,2}(z,z) - Li_{1,2}(z,1)
        //         - Li_{1,2}(1,z) + zeta(1,2)          at z = 1/2
        let c = ctx();
        let rctx = c.real_ctx();
        let z = parse_rational("1/2").unwrap();
        let one = BigRational::one();
        let term = |ks: &[u32], zs: &[BigRational]| multiple_polylog(ks, zs, &c).unwrap().value;
        let mut acc = rctx.zero();
        acc.add_assign(&term(&[1, 1, 1], &[z.clone(), z.clone(), z.clone()]));
        acc.add_assign(&term(&[1, 1, 1], &[z.clone(), one.clone(), z.clone()]).neg());
        acc.add_assign(&term(&[1, 1, 1], &[one.clone(), z.clone(), z.clone()]).neg());
        acc.add_assign(&term(&[1, 1, 1], &[one.clone(), one.clone(), z.clone()]));
        acc.add_assign(&term(&[1, 2], &[z.clone(), z.clone()]));
        acc.add_assign(&term(&[1, 2], &[z.clone(), one.clone()]).neg());
        acc.add_assign(&term(&[1, 2], &[one.clone(), z.clone()]).neg());
        acc.add_assign(&mzv(&[1, 2], &c).unwrap().value);
        let zeta3 = mzv(&[3], &c).unwrap().value;
        assert!(acc.sub(&zeta3).abs().to_f64() < 1e-13);
    }

    #[test]
    fn divergent_cases_rejected() {
        let c = ctx();
        let one = BigRational::one();
        // zeta(1) diverges
        assert!(mzv(&[1], &c).is_err());
        // Li_{1,1}(z, 1) diverges: constant tail behind a harmonic level
        assert!(multiple_polylog(&[1, 1], &[parse_rational("1/2").unwrap(), one.clone()], &c).is_err());
        // z outside the domain
        assert!(tilde_li(
            &AugmentedIndex::from_pairs(&[(2, 1)]),
            &one,
            &c
        )
        .is_err());
        // inadmissible index
        assert!(tilde_li(
            &AugmentedIndex::from_pairs(&[(1, 1)]),
            &BigRational::zero(),
            &c
        )
        .is_err());
    }
}

//! Cycle indices of the shuffle models as truncated power series, with
//! cycle-type, fixed-point and RSK-shape probabilities read off them.
//!
//! Series variables: `u` is the series variable, marker `x_i` is polynomial
//! variable `i`, and the unimodal variable `t` is polynomial variable 0.

mod series;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::combinatorics::{f_lambda, kostka, skew_count, Partition};
use crate::error::{Error, Result};
use crate::poly::{unit, Monomial, RationalPoly};
use crate::rational::{self, from_biguint, int, Rational};
use crate::shuffles::{occupied_boxes_prob, ShuffleKind, ShuffleSpec};
use crate::symfun::{eval_extended_schur, eval_power_sum, eval_stembridge_s, extended_power_sum, ParamVector};

pub use series::{SeriesJson, SeriesTerm, TruncatedSeries};

/// Largest order accepted by [`cycle_index`].
pub const ORDER_LIMIT: usize = 12;
/// Largest order accepted by [`unimodal_gf`].
pub const UNIMODAL_LIMIT: usize = 10;

/// Polynomial variable holding `t`.
pub const T_VAR: usize = 0;

/// The Möbius function.
pub fn mobius(n: usize) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// `(1/i) Σ_{d|i} μ(d) base^{i/d}`: the number of primitive necklaces when
/// `base` is a positive integer.
pub fn necklace_exponent(i: usize, base: &Rational) -> Rational {
    let sum = divisors(i).into_iter().fold(Rational::zero(), |acc, d| acc + int(mobius(d)) * rational::pow(base, i / d));
    sum / int(i as i64)
}

fn check_order(order: usize, limit: usize) -> Result<()> {
    if order > limit {
        return Err(Error::GuardExceeded { order, limit });
    }
    Ok(())
}

/// `exp(Σ_{ij ≤ order} c(i,j) u^{ij} x_i^j)`. The `(i, j)` terms are built
/// in parallel and summed in a fixed order.
fn exp_product<F>(order: usize, weight: F) -> Result<TruncatedSeries>
where
    F: Fn(usize, usize) -> RationalPoly + Sync,
{
    let pairs: Vec<(usize, usize)> = (1..=order).flat_map(|i| (1..=order / i).map(move |j| (i, j))).collect();
    let terms: Vec<(usize, usize, RationalPoly)> = pairs.par_iter().map(|&(i, j)| (i, j, weight(i, j))).collect();
    let mut log = TruncatedSeries::zero(order);
    for (i, j, c) in terms {
        let marker: Monomial = unit(i, j as u32);
        let mut coeff = RationalPoly::zero();
        for (m, v) in c.terms() {
            let mut key = marker.clone();
            if key.len() < m.len() {
                key.resize(m.len(), 0);
            }
            for (k, e) in m.iter().enumerate() {
                key[k] += e;
            }
            coeff.add_term(key, v.clone());
        }
        log = &log + &TruncatedSeries::term(order, i * j, coeff);
    }
    log.exp()
}

fn sign(negative: bool, e: usize) -> Rational {
    if negative && e % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `Σ_{d|i} μ(d) (s·p_{jd})^{i/d}` over the divisors allowed by `odd_only`,
/// with `s = -1` when `reversed`.
fn mobius_power_sum(i: usize, j: usize, reversed: bool, odd_only: bool, power: &impl Fn(usize) -> Rational) -> Rational {
    divisors(i)
        .into_iter()
        .filter(|d| !odd_only || d % 2 == 1)
        .fold(Rational::zero(), |acc, d| {
            let e = i / d;
            acc + int(mobius(d)) * sign(reversed, e) * rational::pow(&power(j * d), e)
        })
}

/// The riffle-type index with power sums `power(m)`; reversal replaces
/// `u` by `-u` and each power sum by its negative.
fn riffle_type_index(order: usize, reversed: bool, power: impl Fn(usize) -> Rational + Sync) -> Result<TruncatedSeries> {
    exp_product(order, |i, j| {
        let c = sign(reversed, i * j) * mobius_power_sum(i, j, reversed, false, &power) / int((i * j) as i64);
        RationalPoly::constant(c)
    })
}

fn type_c_index(order: usize, y: &[Rational], reversed: bool) -> Result<TruncatedSeries> {
    let doubled = |m: usize| int(2) * eval_power_sum(m, y);
    exp_product(order, |i, j| {
        if j % 2 == 0 {
            return RationalPoly::zero();
        }
        let scale = sign(reversed, i * j) / (int((i * j) as i64) * rational::pow(&int(2), i * j));
        RationalPoly::constant(scale * mobius_power_sum(i, j, reversed, true, &doubled))
    })
}

/// `Σ_n u^n E_n[Π x_i^{N_i}]` to order `order`.
pub fn cycle_index(spec: &ShuffleSpec, order: usize) -> Result<TruncatedSeries> {
    check_order(order, ORDER_LIMIT)?;
    spec.validate()?;
    match &spec.kind {
        ShuffleKind::BiasedRiffle { q } => riffle_type_index(order, spec.reversed, |m| eval_power_sum(m, q)),
        ShuffleKind::Abg(p) => riffle_type_index(order, spec.reversed, |m| extended_power_sum(m, p)),
        ShuffleKind::TypeC { y } => type_c_index(order, y, spec.reversed),
        ShuffleKind::Mu { .. } | ShuffleKind::TopToRandom { .. } => Err(Error::UnsupportedSpec(spec.to_string())),
    }
}

/// Exponent vector `Π x_i^{m_i(λ)}`.
pub fn cycle_monomial(lambda: &Partition) -> Monomial {
    let mut m = vec![0u32; lambda.parts().first().map_or(0, |&p| p + 1)];
    for &p in lambda.parts() {
        m[p] += 1;
    }
    m
}

/// Probability that an `n`-card shuffle has cycle type `lambda`.
pub fn cycle_type_prob(spec: &ShuffleSpec, n: usize, lambda: &Partition) -> Result<Rational> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, got: lambda.size() });
    }
    Ok(cycle_index(spec, n)?.coefficient(n, &cycle_monomial(lambda)))
}

/// Expected number of fixed points from the closed forms: `Σ_{j≤n} p_j`
/// for riffles and `(α, β, γ)` shuffles (alternating when reversed), and
/// `Σ_{j≤n odd} p_j(y) / 2^{j-1}` for type C, which reversal leaves alone.
pub fn expected_fixed_points(spec: &ShuffleSpec, n: usize) -> Result<Rational> {
    spec.validate()?;
    let power: Box<dyn Fn(usize) -> Rational> = match &spec.kind {
        ShuffleKind::BiasedRiffle { q } => {
            let q = q.clone();
            Box::new(move |j| eval_power_sum(j, &q))
        }
        ShuffleKind::Abg(p) => {
            let p = p.clone();
            Box::new(move |j| extended_power_sum(j, &p))
        }
        ShuffleKind::TypeC { y } => {
            let total = (1..=n)
                .filter(|j| j % 2 == 1)
                .fold(Rational::zero(), |acc, j| acc + eval_power_sum(j, y) / rational::pow(&int(2), j - 1));
            return Ok(total);
        }
        ShuffleKind::Mu { .. } | ShuffleKind::TopToRandom { .. } => return Err(Error::UnsupportedSpec(spec.to_string())),
    };
    Ok((1..=n).fold(Rational::zero(), |acc, j| acc + sign(spec.reversed, j + 1) * power(j)))
}

/// `E_n[N_1]` as the `u^n` coefficient of `∂/∂x_1` of the index at `x = 1`.
pub fn fixed_points_from_series(series: &TruncatedSeries, n: usize) -> Rational {
    series.derivative(1).coeff(n).sum_of_coefficients()
}

/// `Σ_n u^n (1 + t) Σ_{w unimodal} t^{max(w) - 1} Π x_i^{N_i(w)}`.
pub fn unimodal_gf(order: usize) -> Result<TruncatedSeries> {
    check_order(order, UNIMODAL_LIMIT)?;
    exp_product(order, |i, j| {
        let mut total = RationalPoly::zero();
        for d in divisors(i) {
            let m = j * d;
            let mut base = RationalPoly::monomial(unit(T_VAR, m as u32), Rational::one());
            base.add_term(Vec::new(), -sign(true, m));
            total = &total + &base.pow((i / d) as u32).scale(&int(mobius(d)));
        }
        total.scale(&(Rational::one() / int((i * j) as i64)))
    })
}

/// `1 - u`.
fn one_minus_u(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    s.add_term(1, Vec::new(), -Rational::one());
    s
}

/// `(1 + a u^i x_i) / (1 + a u^i)` or `(1 - a u^i) / (1 - a u^i x_i)`.
fn ratio_factor(order: usize, i: usize, a: &Rational, binomial: bool) -> Result<TruncatedSeries> {
    let mut plain = TruncatedSeries::one(order);
    let mut marked = TruncatedSeries::one(order);
    let c = if binomial { a.clone() } else { -a.clone() };
    plain.add_term(i, Vec::new(), c.clone());
    marked.add_term(i, unit(i, 1), c);
    if binomial {
        Ok(&marked * &plain.inverse()?)
    } else {
        Ok(&plain * &marked.inverse()?)
    }
}

/// The deck-size mixture identity: `(1 - u)` times the cycle index equals a
/// product of binomial and geometric generating functions for the reversed
/// `k`-riffle, and of Poisson and geometric ones for `(α, .., α; ∅; γ)`.
pub fn deck_size_mixture_check(spec: &ShuffleSpec, order: usize) -> Result<bool> {
    let lhs = &one_minus_u(order) * &cycle_index(spec, order)?;
    let rhs = match (&spec.kind, spec.reversed) {
        (ShuffleKind::BiasedRiffle { q }, true) if q.iter().all(|x| x == &q[0]) => reversed_riffle_mixture(q.len(), order)?,
        (_, false) => match spec.param_vector() {
            Some(p) if p.beta.iter().all(Zero::is_zero) && p.alpha.windows(2).all(|w| w[0] == w[1]) => {
                equal_alpha_mixture(&p, order)?
            }
            _ => return Err(Error::UnsupportedSpec(spec.to_string())),
        },
        _ => return Err(Error::UnsupportedSpec(spec.to_string())),
    };
    Ok(lhs == rhs)
}

/// Odd `i`: binomial with `e_i(k)` trials and success `u^i / (k^i + u^i)`;
/// even `i`: `e_i(-k)` geometrics with parameter `u^i / k^i`.
fn reversed_riffle_mixture(k: usize, order: usize) -> Result<TruncatedSeries> {
    let k = int(k as i64);
    let mut out = TruncatedSeries::one(order);
    for i in 1..=order {
        let a = Rational::one() / rational::pow(&k, i);
        let (factor, e) = if i % 2 == 1 {
            (ratio_factor(order, i, &a, true)?, necklace_exponent(i, &k))
        } else {
            (ratio_factor(order, i, &a, false)?, necklace_exponent(i, &-k.clone()))
        };
        out = &out * &factor.pow_rational(&e)?;
    }
    Ok(out)
}

/// Poisson with mean `u^i (1 - (1-γ)^i) / i` convolved with `e_i(q)`
/// geometrics with parameter `(u (1-γ)/q)^i`.
fn equal_alpha_mixture(p: &ParamVector, order: usize) -> Result<TruncatedSeries> {
    let rest = Rational::one() - &p.gamma;
    let mut poisson = TruncatedSeries::zero(order);
    let mut out = TruncatedSeries::one(order);
    for i in 1..=order {
        let mean = (Rational::one() - rational::pow(&rest, i)) / int(i as i64);
        poisson.add_term(i, unit(i, 1), mean.clone());
        poisson.add_term(i, Vec::new(), -mean);
        if let Some(a) = p.alpha.first() {
            let e = necklace_exponent(i, &int(p.alpha.len() as i64));
            out = &out * &ratio_factor(order, i, &rational::pow(a, i), false)?.pow_rational(&e)?;
        }
    }
    Ok(&out * &poisson.exp()?)
}

/// Probability that the RSK shape of an `n`-card shuffle is `lambda`.
pub fn rsk_shape_prob(spec: &ShuffleSpec, n: usize, lambda: &Partition) -> Result<Rational> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch { expected: n, got: lambda.size() });
    }
    spec.validate()?;
    let conj;
    let shape = if spec.reversed {
        conj = lambda.conjugate();
        &conj
    } else {
        lambda
    };
    let f = from_biguint(&f_lambda(shape));
    let recording = match &spec.kind {
        ShuffleKind::BiasedRiffle { .. } | ShuffleKind::Abg(_) => {
            eval_extended_schur(shape, &spec.param_vector().expect("riffle-type"))
        }
        ShuffleKind::TypeC { y } => eval_stembridge_s(shape, y) / rational::pow(&int(2), n),
        ShuffleKind::Mu { mu } => {
            let total: usize = mu.iter().sum();
            if total != n {
                return Err(Error::SizeMismatch { expected: n, got: total });
            }
            from_biguint(&kostka(shape, mu)?) / from_biguint(&rational::multinomial(mu))
        }
        ShuffleKind::TopToRandom { k } => return top_to_random_shape_prob(*k, shape),
    };
    Ok(f * recording)
}

/// `(f_λ / n!) Σ_{a=0}^{n} P(a occupied) (n-a)! f_{λ/(n-a)}`.
fn top_to_random_shape_prob(k: usize, lambda: &Partition) -> Result<Rational> {
    let n = lambda.size();
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut total = Rational::zero();
    for a in 0..=n {
        let r = n - a;
        let skew = if r <= lambda[0] { skew_count(lambda, r)? } else { BigUint::zero() };
        total += occupied_boxes_prob(a, k, n) * from_biguint(&(rational::factorial(r) * skew));
    }
    Ok(from_biguint(&f_lambda(lambda)) * total / from_biguint(&rational::factorial(n)))
}

//! Power sums, Schur functions, Stembridge's `S_λ`, the extended
//! `h̃ / s̃ / p̃` family, and truncated checks of the Cauchy-type identities.
//!
//! Evaluations are generic over [`CommutativeRing`], so the same code
//! evaluates at rational points and expands in formal variables.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_ssyt, Partition};
use crate::error::{Error, Result};
use crate::poly::{determinant, CommutativeRing, RationalPoly};
use crate::rational::{self, from_biguint, int, Rational};

/// Parameters `(α; β; γ)` of the extended symmetric functions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ParamVector {
    #[serde(with = "rational::serde_rational_vec")]
    pub alpha: Vec<Rational>,
    #[serde(with = "rational::serde_rational_vec")]
    pub beta: Vec<Rational>,
    #[serde(with = "rational::serde_rational")]
    pub gamma: Rational,
}

impl ParamVector {
    pub fn new(alpha: Vec<Rational>, beta: Vec<Rational>, gamma: Rational) -> Self {
        ParamVector { alpha, beta, gamma }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.alpha.iter().chain(&self.beta).chain(std::iter::once(&self.gamma)).all(rational::is_nonnegative)
    }

    pub fn total(&self) -> Rational {
        self.alpha.iter().chain(&self.beta).fold(self.gamma.clone(), |acc, x| acc + x)
    }

    /// Nonnegative with `γ + Σα + Σβ = 1`.
    pub fn check_normalized(&self) -> Result<()> {
        if !self.is_nonnegative() {
            return Err(Error::Unnormalized(format!("negative parameter in {self}")));
        }
        if self.total() != Rational::one() {
            return Err(Error::Unnormalized(format!("{self} sums to {}", rational::format(&self.total()))));
        }
        Ok(())
    }

    /// `(β; α; γ)`.
    pub fn swapped(&self) -> Self {
        ParamVector { alpha: self.beta.clone(), beta: self.alpha.clone(), gamma: self.gamma.clone() }
    }

    /// `Σα_i² + Σβ_i²`.
    pub fn sum_of_squares(&self) -> Rational {
        self.alpha.iter().chain(&self.beta).fold(Rational::zero(), |acc, x| acc + x * x)
    }
}

impl fmt::Display for ParamVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>().join(",");
        write!(f, "({};{};{})", list(&self.alpha), list(&self.beta), rational::format(&self.gamma))
    }
}

impl FromStr for ParamVector {
    type Err = Error;

    /// `alpha;beta;gamma` with comma-separated lists, e.g. `1/2;;1/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let fields: Vec<&str> = s.split(';').collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("expected alpha;beta;gamma, got {s:?}")));
        }
        Ok(ParamVector {
            alpha: parse_list(fields[0])?,
            beta: parse_list(fields[1])?,
            gamma: if fields[2].trim().is_empty() { Rational::zero() } else { rational::parse(fields[2])? },
        })
    }
}

/// Comma-separated rationals; empty input is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(rational::parse).collect()
}

/// `p_r(x) = Σ x_i^r`.
pub fn eval_power_sum<R: CommutativeRing>(r: usize, x: &[R]) -> R {
    x.iter().fold(R::zero(), |acc, xi| acc + ring_pow(xi, r))
}

/// `p_λ(x) = Π p_{λ_j}(x)`.
pub fn eval_power_sum_partition<R: CommutativeRing>(lambda: &Partition, x: &[R]) -> R {
    lambda.parts().iter().fold(R::one(), |acc, &r| acc * eval_power_sum(r, x))
}

pub(crate) fn ring_pow<R: CommutativeRing>(x: &R, e: usize) -> R {
    (0..e).fold(R::one(), |acc, _| acc * x.clone())
}

/// `h_0 .. h_kmax` of the variables `x`.
pub fn complete_homogeneous<R: CommutativeRing>(kmax: usize, x: &[R]) -> Vec<R> {
    let mut h = vec![R::zero(); kmax + 1];
    h[0] = R::one();
    for xi in x {
        // multiply the generating function by 1/(1 - xi z)
        for k in 1..=kmax {
            let prev = h[k - 1].clone();
            h[k] = h[k].clone() + xi.clone() * prev;
        }
    }
    h
}

/// `e_0 .. e_kmax` of the variables `x`.
pub fn elementary<R: CommutativeRing>(kmax: usize, x: &[R]) -> Vec<R> {
    let mut e = vec![R::zero(); kmax + 1];
    e[0] = R::one();
    for xi in x {
        for k in (1..=kmax).rev() {
            let prev = e[k - 1].clone();
            e[k] = e[k].clone() + xi.clone() * prev;
        }
    }
    e
}

/// `det(seq[λ_i - i + j])` with `seq[k] = 0` for `k < 0`.
pub fn jacobi_trudi<R: CommutativeRing>(lambda: &Partition, seq: &[R]) -> R {
    let l = lambda.len();
    let matrix: Vec<Vec<R>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let idx = lambda[i] as isize - i as isize + j as isize;
                    if idx < 0 {
                        R::zero()
                    } else {
                        seq.get(idx as usize).cloned().expect("sequence too short for Jacobi-Trudi")
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

fn jt_len(lambda: &Partition) -> usize {
    lambda[0] + lambda.len()
}

/// `s_λ(x)` as a sum over semistandard tableaux with entries in `1..=|x|`.
pub fn eval_schur<R: CommutativeRing>(lambda: &Partition, x: &[R]) -> R {
    if lambda.len() > x.len() {
        return R::zero();
    }
    enumerate_ssyt(lambda, x.len()).iter().fold(R::zero(), |acc, t| {
        let weight = t.rows().iter().flatten().fold(R::one(), |w, &v| w * x[v as usize - 1].clone());
        acc + weight
    })
}

/// `s_λ(x)` by the Jacobi–Trudi determinant in `h_k(x)`.
pub fn eval_schur_jacobi_trudi<R: CommutativeRing>(lambda: &Partition, x: &[R]) -> R {
    let h = complete_homogeneous(jt_len(lambda), x);
    jacobi_trudi(lambda, &h)
}

/// `q_0 .. q_kmax` from `Σ q_n t^n = Π (1 + y_i t)/(1 - y_i t)`.
pub fn stembridge_q<R: CommutativeRing>(kmax: usize, y: &[R]) -> Vec<R> {
    let e = elementary(kmax, y);
    let h = complete_homogeneous(kmax, y);
    (0..=kmax)
        .map(|n| (0..=n).fold(R::zero(), |acc, a| acc + e[a].clone() * h[n - a].clone()))
        .collect()
}

/// `S_λ(y) = det(q_{λ_i - i + j})`.
pub fn eval_stembridge_s<R: CommutativeRing>(lambda: &Partition, y: &[R]) -> R {
    let q = stembridge_q(jt_len(lambda), y);
    jacobi_trudi(lambda, &q)
}

/// Taylor coefficients `h̃_0 .. h̃_kmax` of `e^{γz} Π (1 + β_i z)/(1 - α_i z)`.
pub fn extended_h(p: &ParamVector, kmax: usize) -> Vec<Rational> {
    let mut coeffs: Vec<Rational> = (0..=kmax)
        .map(|k| rational::pow(&p.gamma, k) / from_biguint(&rational::factorial(k)))
        .collect();
    for a in &p.alpha {
        for k in 1..=kmax {
            let prev = coeffs[k - 1].clone();
            coeffs[k] += a * prev;
        }
    }
    for b in &p.beta {
        for k in (1..=kmax).rev() {
            let prev = coeffs[k - 1].clone();
            coeffs[k] += b * prev;
        }
    }
    coeffs
}

/// `s̃_λ = det(h̃_{λ_i - i + j})`.
pub fn eval_extended_schur(lambda: &Partition, p: &ParamVector) -> Rational {
    let h = extended_h(p, jt_len(lambda));
    jacobi_trudi(lambda, &h)
}

/// `p̃_1 = Σα + Σβ + γ`; `p̃_n = Σα_i^n + (-1)^{n+1} Σβ_i^n` for `n >= 2`.
pub fn extended_power_sum(n: usize, p: &ParamVector) -> Rational {
    assert!(n >= 1, "extended power sums start at n = 1");
    if n == 1 {
        return p.total();
    }
    let a = eval_power_sum(n, &p.alpha);
    let b = eval_power_sum(n, &p.beta);
    if n % 2 == 1 {
        a + b
    } else {
        a - b
    }
}

pub fn extended_power_sum_partition(lambda: &Partition, p: &ParamVector) -> Rational {
    lambda.parts().iter().fold(Rational::one(), |acc, &r| acc * extended_power_sum(r, p))
}

/// The Cauchy-type identities checked by [`check_cauchy_identity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CauchyKind {
    /// `Σ s_λ(x) s_λ(y) = Σ p_λ(x) p_λ(y) / z_λ`
    Classic,
    /// `Σ s_λ'(x) s_λ(y) = Σ ε_λ p_λ(x) p_λ(y) / z_λ`
    Dual,
    /// `Σ s_λ(x) S_λ(y) = Σ_{odd parts} 2^{ℓ(λ)} p_λ(x) p_λ(y) / z_λ`
    Stembridge,
    /// `Σ s_λ'(x) S_λ(y) = Σ_{odd parts} 2^{ℓ(λ)} ε_λ p_λ(x) p_λ(y) / z_λ`
    DualStembridge,
    /// `Σ s_λ(x) s̃_λ(α,β,γ) = Σ p_λ(x) p̃_λ(α,β,γ) / z_λ`
    Extended,
}

impl CauchyKind {
    pub const ALL: [CauchyKind; 5] =
        [CauchyKind::Classic, CauchyKind::Dual, CauchyKind::Stembridge, CauchyKind::DualStembridge, CauchyKind::Extended];

    pub fn name(self) -> &'static str {
        match self {
            CauchyKind::Classic => "classic",
            CauchyKind::Dual => "dual",
            CauchyKind::Stembridge => "stembridge",
            CauchyKind::DualStembridge => "dual-stembridge",
            CauchyKind::Extended => "extended",
        }
    }
}

/// Both sides of a Cauchy-type identity, graded by `|λ|`.
#[derive(Clone, Debug)]
pub struct CauchyExpansion {
    pub kind: CauchyKind,
    /// `lhs[m]`, `rhs[m]`: the degree-`m` pieces (`|λ| = m`) in the formal variables.
    pub lhs: Vec<RationalPoly>,
    pub rhs: Vec<RationalPoly>,
}

impl CauchyExpansion {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Degrees at which the sides differ.
    pub fn mismatched_degrees(&self) -> Vec<usize> {
        (0..self.lhs.len()).filter(|&m| self.lhs[m] != self.rhs[m]).collect()
    }
}

/// Expands both sides over all `λ` with `|λ| <= degree`, using formal
/// variables `x_1..x_nx` (indices `0..nx`) and `y_1..y_ny` (indices
/// `nx..nx+ny`). The extended kind needs `params` and ignores `ny`.
pub fn cauchy_expansion(
    kind: CauchyKind,
    degree: usize,
    nx: usize,
    ny: usize,
    params: Option<&ParamVector>,
) -> Result<CauchyExpansion> {
    if degree > 10 {
        return Err(Error::GuardExceeded { order: degree, limit: 10 });
    }
    let x: Vec<RationalPoly> = (0..nx).map(RationalPoly::var).collect();
    let y: Vec<RationalPoly> = (nx..nx + ny).map(RationalPoly::var).collect();
    let params = match kind {
        CauchyKind::Extended => {
            Some(params.ok_or_else(|| Error::UnsupportedSpec("extended Cauchy identity without parameters".into()))?)
        }
        _ => None,
    };
    let mut lhs = Vec::with_capacity(degree + 1);
    let mut rhs = Vec::with_capacity(degree + 1);
    for m in 0..=degree {
        let mut left = RationalPoly::zero();
        let mut right = RationalPoly::zero();
        for lambda in Partition::all(m) {
            let conj = lambda.conjugate();
            let term = match kind {
                CauchyKind::Classic => eval_schur(&lambda, &x) * eval_schur(&lambda, &y),
                CauchyKind::Dual => eval_schur(&conj, &x) * eval_schur(&lambda, &y),
                CauchyKind::Stembridge => eval_schur(&lambda, &x) * eval_stembridge_s(&lambda, &y),
                CauchyKind::DualStembridge => eval_schur(&conj, &x) * eval_stembridge_s(&lambda, &y),
                CauchyKind::Extended => {
                    eval_schur(&lambda, &x).scale(&eval_extended_schur(&lambda, params.expect("checked above")))
                }
            };
            left += &term;

            let odd_only = matches!(kind, CauchyKind::Stembridge | CauchyKind::DualStembridge);
            if odd_only && !lambda.all_parts_odd() {
                continue;
            }
            let mut weight = Rational::one() / from_biguint(&lambda.z());
            if matches!(kind, CauchyKind::Dual | CauchyKind::DualStembridge) {
                weight *= int(lambda.epsilon() as i64);
            }
            if odd_only {
                weight *= rational::pow(&int(2), lambda.len());
            }
            let px = eval_power_sum_partition(&lambda, &x);
            let other = match kind {
                CauchyKind::Extended => {
                    RationalPoly::constant(extended_power_sum_partition(&lambda, params.expect("checked above")))
                }
                _ => eval_power_sum_partition(&lambda, &y),
            };
            right += &(px * other).scale(&weight);
        }
        lhs.push(left);
        rhs.push(right);
    }
    Ok(CauchyExpansion { kind, lhs, rhs })
}

/// Exact truncated check of a Cauchy-type identity.
pub fn check_cauchy_identity(
    kind: CauchyKind,
    degree: usize,
    nx: usize,
    ny: usize,
    params: Option<&ParamVector>,
) -> Result<bool> {
    Ok(cauchy_expansion(kind, degree, nx, ny, params)?.holds())
}

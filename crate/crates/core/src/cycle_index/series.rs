//! Power series in `u`, truncated at a fixed order, whose coefficients are
//! polynomials in marker variables.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, RationalPoly};
use crate::rational::{self, int, Rational};

/// `Σ_{n ≤ order} c_n u^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<RationalPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![RationalPoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::constant(order, RationalPoly::one())
    }

    pub fn constant(order: usize, c: RationalPoly) -> Self {
        TruncatedSeries::term(order, 0, c)
    }

    /// `c u^n`, or zero if `n` is beyond the order.
    pub fn term(order: usize, n: usize, c: RationalPoly) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<RationalPoly>) -> Self {
        coeffs.resize(order + 1, RationalPoly::zero());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalPoly] {
        &self.coeffs
    }

    /// The polynomial multiplying `u^n`.
    pub fn coeff(&self, n: usize) -> &RationalPoly {
        &self.coeffs[n]
    }

    /// Coefficient of `u^n` times the monomial with exponent vector `exponents`.
    pub fn coefficient(&self, n: usize, exponents: &[u32]) -> Rational {
        self.coeffs.get(n).map(|c| c.coefficient(exponents)).unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, n: usize, monomial: Monomial, c: Rational) {
        if n < self.coeffs.len() {
            self.coeffs[n].add_term(monomial, c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn scale_poly(&self, p: &RationalPoly) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c * p).collect() }
    }

    /// Substitutes `u ↦ c·u`.
    pub fn rescale_u(&self, c: &Rational) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(n, p)| p.scale(&rational::pow(c, n))).collect();
        TruncatedSeries { coeffs }
    }

    pub fn substitute(&self, var: usize, value: &Rational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|p| p.substitute(var, value)).collect() }
    }

    /// Sets each listed variable to 1.
    pub fn set_to_one(&self, vars: impl IntoIterator<Item = usize> + Clone) -> Self {
        let one = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|p| vars.clone().into_iter().fold(p.clone(), |acc, v| acc.substitute(v, &one)))
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn derivative(&self, var: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|p| p.derivative(var)).collect() }
    }

    /// Numeric coefficients with every variable set to 1.
    pub fn sum_of_coefficients(&self) -> Vec<Rational> {
        self.coeffs.iter().map(RationalPoly::sum_of_coefficients).collect()
    }

    fn check_same_order(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders differ");
    }

    /// `exp(s)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut g = vec![RationalPoly::zero(); order + 1];
        g[0] = RationalPoly::one();
        // n g_n = Σ_{k=1}^{n} k f_k g_{n-k}
        for n in 1..=order {
            let mut acc = RationalPoly::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() || g[n - k].is_zero() {
                    continue;
                }
                acc += &(&self.coeffs[k] * &g[n - k]).scale(&int(k as i64));
            }
            g[n] = acc.scale(&(Rational::one() / int(n as i64)));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `log(s)`; the constant term must be 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != RationalPoly::one() {
            return Err(Error::ConstantTerm(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut f = vec![RationalPoly::zero(); order + 1];
        // n f_n = n g_n - Σ_{k=1}^{n-1} k f_k g_{n-k}
        for n in 1..=order {
            let mut acc = self.coeffs[n].scale(&int(n as i64));
            for (k, fk) in f.iter().enumerate().take(n).skip(1) {
                if fk.is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = &acc - &(fk * &self.coeffs[n - k]).scale(&int(k as i64));
            }
            f[n] = acc.scale(&(Rational::one() / int(n as i64)));
        }
        Ok(TruncatedSeries { coeffs: f })
    }

    /// `1/s`; the constant term must be a nonzero number.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].as_constant().filter(|c| !c.is_zero()).ok_or_else(|| Error::ConstantTerm(self.coeffs[0].to_string()))?;
        let inv0 = Rational::one() / c0;
        let order = self.order();
        let mut g = vec![RationalPoly::zero(); order + 1];
        g[0] = RationalPoly::constant(inv0.clone());
        for n in 1..=order {
            let mut acc = RationalPoly::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &g[n - k]);
            }
            g[n] = acc.scale(&-inv0.clone());
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `s^e = exp(e log s)` for a series with constant term 1.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// The `u^n` coefficient with `t` and `x_i` named.
    pub fn display_coeff(&self, n: usize) -> String {
        let poly = &self.coeffs[n];
        if poly.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = poly
            .terms()
            .iter()
            .rev()
            .map(|(mono, c)| {
                let vars: Vec<String> = mono
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        let name = if i == 0 { "t".to_string() } else { format!("x{i}") };
                        if e == 1 { name } else { format!("{name}^{e}") }
                    })
                    .collect();
                match (vars.is_empty(), c.is_one()) {
                    (true, _) => rational::format(c),
                    (false, true) => vars.join(" "),
                    (false, false) => format!("{} {}", rational::format(c), vars.join(" ")),
                }
            })
            .collect();
        terms.join(" + ")
    }

    pub fn to_json(&self) -> SeriesJson {
        let mut terms = Vec::new();
        for (n, poly) in self.coeffs.iter().enumerate() {
            for (mono, c) in poly.terms() {
                let monomial = mono
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (if i == 0 { "t".to_string() } else { i.to_string() }, e))
                    .collect();
                terms.push(SeriesTerm { n, monomial, coeff: rational::format(c) });
            }
        }
        SeriesJson { order: self.order(), terms }
    }

    pub fn from_json(json: &SeriesJson) -> Result<Self> {
        let mut s = TruncatedSeries::zero(json.order);
        for term in &json.terms {
            if term.n > json.order {
                return Err(Error::Parse(format!("term of degree {} beyond order {}", term.n, json.order)));
            }
            let mut mono: Monomial = Vec::new();
            for (key, &e) in &term.monomial {
                let var = if key == "t" {
                    0
                } else {
                    key.parse::<usize>().map_err(|_| Error::Parse(format!("bad variable {key:?}")))?
                };
                if mono.len() <= var {
                    mono.resize(var + 1, 0);
                }
                mono[var] += e;
            }
            s.add_term(term.n, mono, rational::parse(&term.coeff)?);
        }
        Ok(s)
    }
}

/// Serialized form: `{order, terms: [{n, monomial: {i: exponent}, coeff}]}`;
/// marker `x_i` is key `"i"` and the unimodal variable is `"t"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub terms: Vec<SeriesTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesTerm {
    pub n: usize,
    pub monomial: BTreeMap<String, u32>,
    pub coeff: String,
}

impl Add<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_order(rhs);
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_order(rhs);
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul<&TruncatedSeries> for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_same_order(rhs);
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};

/// Exponent vector; entry `i` is the exponent of variable `i`. Trailing
/// zeros are always trimmed so every monomial has one representation.
pub type Monomial = Vec<u32>;

/// Commutative ring operations needed by the determinant and tableau sums,
/// shared by plain rationals and polynomials.
pub trait CommutativeRing:
    Clone + PartialEq + Zero + One + Sub<Output = Self> + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
}

impl CommutativeRing for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, e) in out.iter_mut().zip(short) {
        *o += e;
    }
    out
}

impl RationalPoly {
    pub fn constant(c: Rational) -> Self {
        let mut p = RationalPoly::default();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(unit(i, 1), Rational::one())
    }

    pub fn monomial(exponents: Monomial, coeff: Rational) -> Self {
        let mut p = RationalPoly::default();
        p.add_term(exponents, coeff);
        p
    }

    pub fn add_term(&mut self, exponents: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let key = trim(exponents);
        let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Rational {
        let key = trim(exponents.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalPoly::default();
        }
        RationalPoly { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RationalPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Terms of total degree at most `d`.
    pub fn truncate_degree(&self, d: u32) -> Self {
        RationalPoly {
            terms: self.terms.iter().filter(|(m, _)| m.iter().sum::<u32>() <= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = RationalPoly::default();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[var] -= 1;
            out.add_term(m2, c * rational::int(e as i64));
        }
        out
    }

    /// Replaces variable `var` by the constant `value`.
    pub fn substitute(&self, var: usize, value: &Rational) -> Self {
        let mut out = RationalPoly::default();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            if e == 0 {
                out.add_term(m.clone(), c.clone());
                continue;
            }
            let mut m2 = m.clone();
            m2[var] = 0;
            out.add_term(m2, c * rational::pow(value, e as usize));
        }
        out
    }

    /// Evaluates with `values[i]` for variable `i`; missing variables count as 1.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    if let Some(v) = values.get(i) {
                        term *= rational::pow(v, e as usize);
                    }
                }
            }
            total += term;
        }
        total
    }

    /// Every variable set to 1.
    pub fn sum_of_coefficients(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// Exponent vector with a single variable raised to `e`.
pub fn unit(var: usize, e: u32) -> Monomial {
    let mut m = vec![0; var + 1];
    m[var] = e;
    trim(m)
}

impl CommutativeRing for RationalPoly {
    fn from_rational(r: &Rational) -> Self {
        RationalPoly::constant(r.clone())
    }
}

impl Zero for RationalPoly {
    fn zero() -> Self {
        RationalPoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RationalPoly {
    fn one() -> Self {
        RationalPoly::constant(Rational::one())
    }
}

impl Add<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&RationalPoly> for RationalPoly {
    fn add_assign(&mut self, rhs: &RationalPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for RationalPoly {
    type Output = RationalPoly;

    fn add(mut self, rhs: RationalPoly) -> RationalPoly {
        self += &rhs;
        self
    }
}

impl Sub<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for RationalPoly {
    type Output = RationalPoly;

    fn sub(self, rhs: RationalPoly) -> RationalPoly {
        &self - &rhs
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        let mut out = RationalPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;

    fn mul(self, rhs: RationalPoly) -> RationalPoly {
        &self * &rhs
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;

    fn neg(self) -> RationalPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rational::format(c))?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*v{i}")?,
                    _ => write!(f, "*v{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Determinant over any commutative ring by expansion along rows, memoised
/// on the set of used columns. Exact and division-free; fine up to ~16×16.
pub fn determinant<R: CommutativeRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(n <= 20, "determinant size {n} too large for subset expansion");
    let full = (1usize << n) - 1;
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(R::one());
    for mask in 0..full {
        let Some(acc) = dp[mask].clone() else { continue };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for (col, entry) in m[row].iter().enumerate().take(n) {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            // sign from the used columns lying to the right of `col`
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = acc.clone() * entry.clone();
            if inversions % 2 == 1 {
                term = -term;
            }
            let next = mask | (1 << col);
            dp[next] = Some(match dp[next].take() {
                Some(v) => v + term,
                None => term,
            });
        }
    }
    dp[full].take().unwrap_or_else(R::zero)
}

//! Exact polynomial arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial in `q` over arbitrary-precision integers.
///
/// Coefficients are stored densely, index = exponent, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TermOrder {
    #[default]
    Descending,
    Ascending,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPoly {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// The variable `q`.
    pub fn q() -> IntPoly {
        IntPoly::monomial(1, 1)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    /// `q + 1`.
    pub fn q_plus_one() -> IntPoly {
        IntPoly::from_i64s(&[1, 1])
    }

    /// `q - 1`.
    pub fn q_minus_one() -> IntPoly {
        IntPoly::from_i64s(&[-1, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Ascending coefficients.
    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `[q^i] f`.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f * q^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect(),
        )
    }

    pub fn pow(&self, mut k: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(q + 1)` by Taylor shift.
    pub fn shift_plus_one(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = c[j + 1].clone();
                c[j] += next;
            }
        }
        IntPoly::from_coeffs(c)
    }

    /// `f(g(q))`.
    pub fn compose(&self, g: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| &(&acc * g) + &IntPoly::constant(c.clone()))
    }

    /// `|f| = f(1)`.
    pub fn size(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `‖f‖ = f'(1)`.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().enumerate().map(|(i, c)| c * BigInt::from(i)).sum()
    }

    /// `‖f‖ / |f|`, exact.
    pub fn average(&self) -> Result<BigRational> {
        let size = self.size();
        if size.is_zero() {
            return Err(Error::UndefinedAverage);
        }
        Ok(BigRational::new(self.total(), size))
    }

    pub fn monomialize(&self) -> RatMonomial {
        match self.average() {
            Ok(av) => RatMonomial::new(self.size(), av),
            Err(_) => RatMonomial::zero(),
        }
    }

    /// Coefficientwise `self ≤ other`.
    pub fn coeffwise_leq(&self, other: &IntPoly) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    pub fn render(&self, order: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(usize, &BigInt)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if order == TermOrder::Descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (k, (i, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            if var.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{mag}*{var}"));
            }
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TermOrder::Descending))
    }
}

/// Serialized as `{"coeffs": ["1", "-2", ...], "text": "..."}`, coefficients
/// ascending as decimal strings.
impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("IntPoly", 2)?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        -&self
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl<'a> Sum<&'a IntPoly> for IntPoly {
    fn sum<I: Iterator<Item = &'a IntPoly>>(iter: I) -> IntPoly {
        let mut acc = IntPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

impl Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        let mut acc = IntPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Monomial weight `size * q^exponent` with a rational exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMonomial {
    size: BigInt,
    exponent: BigRational,
}

impl RatMonomial {
    /// A zero size forces the zero monomial.
    pub fn new(size: BigInt, exponent: BigRational) -> RatMonomial {
        if size.is_zero() {
            RatMonomial::zero()
        } else {
            RatMonomial { size, exponent }
        }
    }

    pub fn zero() -> RatMonomial {
        RatMonomial { size: BigInt::zero(), exponent: BigRational::zero() }
    }

    pub fn one() -> RatMonomial {
        RatMonomial { size: BigInt::one(), exponent: BigRational::zero() }
    }

    pub fn from_ints(size: i64, num: i64, den: i64) -> RatMonomial {
        RatMonomial::new(BigInt::from(size), BigRational::new(num.into(), den.into()))
    }

    pub fn size(&self) -> &BigInt {
        &self.size
    }

    pub fn exponent(&self) -> &BigRational {
        &self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.size.is_zero()
    }

    /// Sum re-monomialized: sizes add, exponents average with size weights.
    pub fn add_monomialized(&self, other: &RatMonomial) -> RatMonomial {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let size = &self.size + &other.size;
        let total = BigRational::from(self.size.clone()) * &self.exponent
            + BigRational::from(other.size.clone()) * &other.exponent;
        let exponent = total / BigRational::from(size.clone());
        RatMonomial::new(size, exponent)
    }
}

impl Mul for &RatMonomial {
    type Output = RatMonomial;

    fn mul(self, rhs: &RatMonomial) -> RatMonomial {
        RatMonomial::new(&self.size * &rhs.size, &self.exponent + &rhs.exponent)
    }
}

impl Mul for RatMonomial {
    type Output = RatMonomial;

    fn mul(self, rhs: RatMonomial) -> RatMonomial {
        &self * &rhs
    }
}

impl fmt::Display for RatMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        write!(f, "{}*q^({})", self.size, self.exponent)
    }
}

/// Bivariate polynomial in `p` and `q`, sparse.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// Substitutions for a double polynomial `F(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// `F(q, q)`
    Diagonal,
    /// `F(q+1, q+1)`
    BothShifted,
    /// `F(1, q+1)`
    PAtOne,
    /// `F(0, q+1)`
    PAtZero,
}

impl Specialization {
    pub const ALL: [Specialization; 4] =
        [Specialization::Diagonal, Specialization::BothShifted, Specialization::PAtOne, Specialization::PAtZero];
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "(q,q)" => Ok(Specialization::Diagonal),
            "(q+1,q+1)" => Ok(Specialization::BothShifted),
            "(1,q+1)" => Ok(Specialization::PAtOne),
            "(0,q+1)" => Ok(Specialization::PAtZero),
            _ => Err(Error::UnknownMode(s.to_string())),
        }
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Specialization::Diagonal => "(q,q)",
            Specialization::BothShifted => "(q+1,q+1)",
            Specialization::PAtOne => "(1,q+1)",
            Specialization::PAtZero => "(0,q+1)",
        })
    }
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `p^i q^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Adds `p^i * f(q)`.
    pub fn add_p_power_times(&mut self, i: u32, f: &IntPoly) {
        for (j, c) in f.coeffs().iter().enumerate() {
            self.add_term(i, j as u32, c);
        }
    }

    /// `F(P(x), Q(x))` as a polynomial in `x`.
    pub fn substitute(&self, p: &IntPoly, q: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero();
        for (&(i, j), c) in &self.terms {
            out += &(&p.pow(i) * &q.pow(j)).scale(c);
        }
        out
    }

    pub fn specialize(&self, mode: Specialization) -> IntPoly {
        let x = IntPoly::q();
        let x1 = IntPoly::q_plus_one();
        match mode {
            Specialization::Diagonal => self.substitute(&x, &x),
            Specialization::BothShifted => self.substitute(&x1, &x1),
            Specialization::PAtOne => self.substitute(&IntPoly::one(), &x1),
            Specialization::PAtZero => self.substitute(&IntPoly::zero(), &x1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn derivative_of_poincare_of_3412() {
        let f = p(&[1, 3, 5, 4, 1]);
        assert_eq!(f.derivative().eval_i64(1), BigInt::from(29));
        assert_eq!(f.derivative().degree(), Some(3));
    }

    #[test]
    fn products() {
        let x1 = IntPoly::q_plus_one();
        assert_eq!(&(&x1 * &x1) * &x1, p(&[1, 3, 3, 1]));
        assert!((&x1 * &IntPoly::zero()).is_zero());
        assert_eq!(x1.pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(x1.pow(0), IntPoly::one());
    }

    #[test]
    fn shift_plus_one_examples() {
        let qm = IntPoly::q_minus_one();
        let q = IntPoly::q();
        // (q-1)^3 + q(q-1) -> q^3 + (q+1)q
        let f = &qm.pow(3) + &(&q * &qm);
        assert_eq!(f.shift_plus_one(), p(&[0, 1, 1, 1]));
        assert_eq!(IntPoly::one().shift_plus_one(), IntPoly::one());
        // (q-1)^5 + 2q(q-1)^3 -> q^5 + 2(q+1)q^3
        let g = &qm.pow(5) + &(&q * &qm.pow(3)).scale(&BigInt::from(2));
        let want = &q.pow(5) + &(&IntPoly::q_plus_one() * &q.pow(3)).scale(&BigInt::from(2));
        assert_eq!(g.shift_plus_one(), want);
        assert!(IntPoly::zero().shift_plus_one().is_zero());
    }

    #[test]
    fn size_total_average() {
        let f = p(&[0, 0, 0, 2, 2, 1]); // q^5 + 2(q+1)q^3
        assert_eq!(f.size(), BigInt::from(5));
        assert_eq!(f.total(), BigInt::from(19));
        assert_eq!(IntPoly::zero().size(), BigInt::zero());
        assert_eq!(IntPoly::zero().total(), BigInt::zero());
        assert_eq!(IntPoly::zero().average(), Err(Error::UndefinedAverage));
        for n in 1..8u32 {
            assert_eq!(
                IntPoly::q_plus_one().pow(n).average().unwrap(),
                BigRational::new(BigInt::from(n), BigInt::from(2))
            );
        }
    }

    #[test]
    fn monomialization() {
        assert_eq!(p(&[1, 4, 3, 1]).monomialize(), RatMonomial::from_ints(9, 13, 9));
        assert_eq!(p(&[1, 1, 2, 1]).monomialize(), RatMonomial::from_ints(5, 8, 5));
        assert_eq!(IntPoly::monomial(7, 4).monomialize(), RatMonomial::from_ints(7, 4, 1));
        assert!(IntPoly::zero().monomialize().is_zero());
    }

    #[test]
    fn monomial_products() {
        let half = RatMonomial::from_ints(2, 1, 2);
        let cube = &(&half * &half) * &half;
        assert_eq!(cube, RatMonomial::from_ints(8, 3, 2));
        let m = &cube * &RatMonomial::from_ints(5, 1, 1);
        assert_eq!(m, RatMonomial::from_ints(40, 100, 40));
        assert_eq!(&m * &RatMonomial::one(), m);
    }

    #[test]
    fn coefficientwise_order() {
        let f = p(&[1, 2]);
        assert!(f.coeffwise_leq(&f));
        assert!(!f.coeffwise_leq(&p(&[1, 1, 1])));
        assert!(IntPoly::monomial(1, 4).coeffwise_leq(&p(&[0, 0, 1, 0, 1])));
    }

    #[test]
    fn rendering() {
        let f = p(&[1, -5, 0, 2]);
        assert_eq!(f.render(TermOrder::Descending), "2*q^3 - 5*q + 1");
        assert_eq!(f.render(TermOrder::Ascending), "1 - 5*q + 2*q^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
    }

    #[test]
    fn bipoly_specializations() {
        let z = BiPoly::zero();
        for mode in Specialization::ALL {
            assert!(z.specialize(mode).is_zero());
        }
        // F = p (q-1)  ->  (q,q): q^2 - q
        let mut f = BiPoly::zero();
        f.add_p_power_times(1, &IntPoly::q_minus_one());
        assert_eq!(f.specialize(Specialization::Diagonal), p(&[0, -1, 1]));
        assert_eq!(f.specialize(Specialization::PAtZero), IntPoly::zero());
        assert_eq!(f.specialize(Specialization::PAtOne), IntPoly::q());
        assert_eq!("(1, q+1)".parse::<Specialization>().unwrap(), Specialization::PAtOne);
        assert!(matches!("(2,q)".parse::<Specialization>(), Err(Error::UnknownMode(_))));
    }

    #[test]
    fn compose_matches_shift() {
        let f = p(&[3, -1, 4, 1, -5]);
        assert_eq!(f.compose(&IntPoly::q_plus_one()), f.shift_plus_one());
    }
}

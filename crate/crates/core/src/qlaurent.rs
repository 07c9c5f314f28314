//! Exact Laurent-polynomial arithmetic in one variable `q` over the integers,
//! with quantum integers, factorials and binomials:
//!
//! - `[a] = (q^a - q^-a)/(q - q^-1) = q^(a-1) + q^(a-3) + ... + q^(-a+1)`
//! - `[a]! = [1][2]...[a]`
//! - `[a choose b] = [a]!/([a-b]![b]!)`
//!
//! Coefficients are a signed integer type (default `i64`); every operation
//! detects overflow and reports it as an error instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`Laurent`]: a signed integer with checked arithmetic.
pub trait Coeff:
    Signed + CheckedAdd + CheckedMul + CheckedNeg + Zero + One + Copy + Ord + fmt::Display + FromStr
{
}

impl<T> Coeff for T where
    T: Signed
        + CheckedAdd
        + CheckedMul
        + CheckedNeg
        + Zero
        + One
        + Copy
        + Ord
        + fmt::Display
        + FromStr
{
}

/// Sign factor used by [`Laurent::scale`] and the crossing expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Sign of `(-1)^k`.
    pub fn from_parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn combine(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// An integer Laurent polynomial in `q`.
///
/// Stored sparsely as exponent -> coefficient; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Laurent<C: Coeff = i64> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coeff> Laurent<C> {
    pub fn zero() -> Self {
        Laurent {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The monomial `q^exp`.
    pub fn monomial(exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(exp, C::one());
        Laurent { terms }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        Laurent { terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(iter: I) -> Result<Self> {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: i32, c: C) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.get(&exp).copied() {
            None => {
                self.terms.insert(exp, c);
            }
            Some(old) => {
                let sum = old.checked_add(&c).ok_or(Error::Overflow)?;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    self.terms.insert(exp, sum);
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).copied().unwrap_or_else(C::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, C)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.checked_neg().ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let e = e1.checked_add(e2).ok_or(Error::Overflow)?;
                let c = c1.checked_mul(&c2).ok_or(Error::Overflow)?;
                out.add_term(e, c)?;
            }
        }
        Ok(out)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            terms.insert(e, c.checked_neg().ok_or(Error::Overflow)?);
        }
        Ok(Laurent { terms })
    }

    /// Returns `sign * q^shift * self`.
    pub fn scale(&self, sign: Sign, shift: i32) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            let e = e.checked_add(shift).ok_or(Error::Overflow)?;
            let c = match sign {
                Sign::Plus => c,
                Sign::Minus => c.checked_neg().ok_or(Error::Overflow)?,
            };
            terms.insert(e, c);
        }
        Ok(Laurent { terms })
    }

    /// The bar involution `q -> q^-1` (exponent negation).
    pub fn bar(&self) -> Self {
        let terms = self.terms().map(|(e, c)| (-e, c)).collect();
        Laurent { terms }
    }

    /// Substitutes `q -> -q`: the coefficient of `q^e` picks up `(-1)^e`.
    pub fn at_neg_q(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, c) in self.terms() {
            let c = if e.rem_euclid(2) == 0 {
                c
            } else {
                c.checked_neg().ok_or(Error::Overflow)?
            };
            terms.insert(e, c);
        }
        Ok(Laurent { terms })
    }

    /// Exact division; fails with [`Error::InexactDivision`] on any remainder.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // normalize both sides to minimum exponent 0 and divide as ordinary
        // polynomials; the net monomial shift is restored at the end
        let shift = self.min_exp().unwrap() - rhs.min_exp().unwrap();
        let mut rem = self.scale(Sign::Plus, -self.min_exp().unwrap())?;
        let d = rhs.scale(Sign::Plus, -rhs.min_exp().unwrap())?;
        let d_max = d.max_exp().unwrap();
        let d_lead = d.coeff(d_max);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_max = rem.max_exp().unwrap();
            if r_max < d_max {
                return Err(Error::InexactDivision);
            }
            let r_lead = rem.coeff(r_max);
            if !(r_lead % d_lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = r_lead / d_lead;
            let e = r_max - d_max;
            let piece = Self::constant(c).scale(Sign::Plus, e)?;
            rem = rem.checked_sub(&piece.checked_mul(&d)?)?;
            quot.add_term(e, c)?;
        }
        quot.scale(Sign::Plus, shift)
    }

    /// The quantum integer `[a]`, with `[0] = 0` and `[-a] = -[a]`.
    pub fn qint(a: i32) -> Self {
        if a == 0 {
            return Self::zero();
        }
        if a < 0 {
            return Self::qint(-a).checked_neg().expect("unit coefficients");
        }
        let terms = (0..a).map(|k| (a - 1 - 2 * k, C::one())).collect();
        Laurent { terms }
    }

    /// The quantum factorial `[a]! = [1][2]...[a]` (empty product for `a = 0`).
    pub fn qfact(a: u32) -> Result<Self> {
        let mut p = Self::one();
        for k in 1..=a {
            p = p.checked_mul(&Self::qint(k as i32))?;
        }
        Ok(p)
    }

    /// The quantum binomial `[a choose b] = [a]!/([a-b]![b]!)`, zero for
    /// `b < 0` or `b > a >= 0`. Computed as an exact quotient.
    pub fn qbin(a: i32, b: i32) -> Result<Self> {
        if b < 0 || (a >= 0 && b > a) {
            return Ok(Self::zero());
        }
        let mut num = Self::one();
        for i in 1..=b {
            num = num.checked_mul(&Self::qint(a - b + i))?;
        }
        num.div_exact(&Self::qfact(b as u32)?)
    }
}

impl<C: Coeff> fmt::Display for Laurent<C> {
    /// Canonical text form: terms in strictly descending exponent order,
    /// joined by ` + ` / ` - `; `q^1` prints as `q`, exponent zero prints the
    /// bare coefficient, a unit coefficient is elided unless the exponent is
    /// zero. The zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let neg = c < C::zero();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> FromStr for Laurent<C> {
    type Err = Error;

    /// Parses the canonical text form produced by `Display`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        if t == "0" {
            return Ok(Self::zero());
        }
        let mut p = Self::zero();
        let mut rest = t;
        let mut pos = s.len() - s.trim_start().len();
        let mut sign = Sign::Plus;
        if let Some(r) = rest.strip_prefix('-') {
            sign = Sign::Minus;
            rest = r;
            pos += 1;
        }
        loop {
            let term_len = rest
                .find(" + ")
                .into_iter()
                .chain(rest.find(" - "))
                .min()
                .unwrap_or(rest.len());
            let term = &rest[..term_len];
            let (e, c) = parse_term::<C>(term, pos)?;
            let c = match sign {
                Sign::Plus => c,
                Sign::Minus => c.checked_neg().ok_or(Error::Overflow)?,
            };
            p.add_term(e, c)?;
            if term_len == rest.len() {
                break;
            }
            sign = match &rest[term_len..term_len + 3] {
                " + " => Sign::Plus,
                _ => Sign::Minus,
            };
            rest = &rest[term_len + 3..];
            pos += term_len + 3;
        }
        Ok(p)
    }
}

fn parse_term<C: Coeff>(term: &str, pos: usize) -> Result<(i32, C)> {
    let bad = |msg: &str| Error::parse(pos, format!("{msg} in term `{term}`"));
    if term.is_empty() {
        return Err(bad("empty term"));
    }
    if let Some(qpart) = term.find('q') {
        let coeff_str = &term[..qpart];
        let c: C = if coeff_str.is_empty() {
            C::one()
        } else {
            let cs = coeff_str
                .strip_suffix('*')
                .ok_or_else(|| bad("expected `*` between coefficient and q"))?;
            cs.parse().map_err(|_| bad("bad coefficient"))?
        };
        let exp_str = &term[qpart + 1..];
        let e: i32 = if exp_str.is_empty() {
            1
        } else {
            exp_str
                .strip_prefix('^')
                .ok_or_else(|| bad("expected `^` after q"))?
                .parse()
                .map_err(|_| bad("bad exponent"))?
        };
        Ok((e, c))
    } else {
        let c: C = term.parse().map_err(|_| bad("bad constant"))?;
        Ok((0, c))
    }
}

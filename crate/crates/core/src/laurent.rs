//! Sparse Laurent polynomials in `(z1, z2, q)` with big-integer
//! coefficients.
//!
//! The canonical text form lists terms in increasing lexicographic order
//! of the exponent triple, each printed as `c*z1^a*z2^b*q^d` with unit
//! coefficients, zero exponents and exponents equal to one omitted, joined
//! by ` + `. The zero polynomial prints as `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponents of `(z1, z2, q)`.
pub type Exponents = [i64; 3];

pub const DEFAULT_NAMES: [&str; 3] = ["z1", "z2", "q"];

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, [0, 0, 0])
    }

    pub fn monomial(coeff: impl Into<BigInt>, exps: Exponents) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exps, coeff.into());
        p
    }

    /// `Σ_d coeffs[d] q^d`.
    pub fn from_q_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = LaurentPoly::zero();
        for (d, c) in coeffs.iter().enumerate() {
            p.add_term([0, 0, d as i64], c.clone().into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: Exponents) -> BigInt {
        self.terms.get(&exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    /// Multiplies by `z1^a z2^b q^d`.
    pub fn shift(&self, by: Exponents) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    /// Value at `z1 = z2 = q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Ring homomorphism sending each variable to a monomial:
    /// `images[v]` is the exponent triple of the image of variable `v`.
    pub fn substitute_monomial(&self, images: [Exponents; 3]) -> Self {
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut img = [0i64; 3];
            for (v, &power) in e.iter().enumerate() {
                for (slot, x) in img.iter_mut().zip(images[v]) {
                    *slot += power * x;
                }
            }
            out.add_term(img, c.clone());
        }
        out
    }

    /// Whether only the `q` exponent is ever nonzero.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| e[0] == 0 && e[1] == 0)
    }

    /// Whether the exponent of variable `v` is zero in every term.
    pub fn is_free_of(&self, v: usize) -> bool {
        self.terms.keys().all(|e| e[v] == 0)
    }

    /// Exact quotient of two polynomials in `q` alone. Fails with
    /// [`Error::InexactDivision`] on a nonzero remainder.
    pub fn div_exact_q(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if !self.is_q_only() || !divisor.is_q_only() {
            return Err(Error::Precondition("division is only defined in q".into()));
        }
        if divisor.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let (num_lo, mut num) = dense_q(self);
        let (den_lo, den) = dense_q(divisor);
        let lead = den.last().unwrap().clone();
        let mut quot = vec![BigInt::zero(); num.len().saturating_sub(den.len()) + 1];
        while num.len() >= den.len() {
            let top = num.last().unwrap().clone();
            if !top.is_zero() {
                if !(&top % &lead).is_zero() {
                    return Err(Error::InexactDivision);
                }
                let f = &top / &lead;
                let shift = num.len() - den.len();
                for (i, d) in den.iter().enumerate() {
                    num[shift + i] -= &f * d;
                }
                quot[shift] = f;
            }
            num.pop();
        }
        if num.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        let mut out = LaurentPoly::zero();
        for (d, c) in quot.into_iter().enumerate() {
            out.add_term([0, 0, d as i64 + num_lo - den_lo], c);
        }
        Ok(out)
    }

    /// Canonical text with custom variable names.
    pub fn to_text_with(&self, names: [&str; 3]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let factors: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&x, _)| x != 0)
                .map(|(&x, name)| {
                    if x == 1 {
                        name.to_string()
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            let term = if factors.is_empty() {
                c.to_string()
            } else if c.is_one() {
                factors.join("*")
            } else if *c == -BigInt::one() {
                format!("-{}", factors.join("*"))
            } else {
                format!("{c}*{}", factors.join("*"))
            };
            parts.push(term);
        }
        parts.join(" + ")
    }

    /// Parses the canonical text form with custom variable names. Terms
    /// may appear in any order and repeated monomials are summed.
    pub fn parse_with(text: &str, names: [&str; 3]) -> Result<Self> {
        let text = text.trim();
        let mut out = LaurentPoly::zero();
        if text == "0" {
            return Ok(out);
        }
        for term in text.split(" + ") {
            let (coeff, exps) = parse_term(term.trim(), names)?;
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

fn parse_term(term: &str, names: [&str; 3]) -> Result<(BigInt, Exponents)> {
    let bad = || Error::Parse(format!("malformed term `{term}`"));
    if term.is_empty() {
        return Err(bad());
    }
    let mut coeff = BigInt::one();
    let mut exps = [0i64; 3];
    let mut body = term;
    if let Some(rest) = body.strip_prefix('-') {
        if rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            coeff = -coeff;
            body = rest;
        }
    }
    for (idx, factor) in body.split('*').enumerate() {
        if let Ok(c) = factor.parse::<BigInt>() {
            if idx != 0 {
                return Err(bad());
            }
            coeff *= c;
            continue;
        }
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => (n, p.parse::<i64>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        let v = names.iter().position(|&n| n == name).ok_or_else(bad)?;
        exps[v] += power;
    }
    Ok((coeff, exps))
}

/// Dense coefficients of a `q`-only polynomial, with the lowest exponent.
fn dense_q(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    let lo = p.terms.keys().map(|e| e[2]).min().unwrap();
    let hi = p.terms.keys().map(|e| e[2]).max().unwrap();
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in &p.terms {
        v[(e[2] - lo) as usize] = c.clone();
    }
    (lo, v)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text_with(DEFAULT_NAMES))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        LaurentPoly::parse_with(s, DEFAULT_NAMES)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

//! Integer-coefficient Laurent polynomials in one variable, exact.
//! Text form: terms `c*X^k` joined by `+`/`-` in descending `k`,
//! e.g. `-A^6 - A^4 + A^2 + 3 + A^-2 - A^-4 - A^-6`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: char,
    /// exponent -> nonzero coefficient
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: char) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn one(var: char) -> Self {
        LaurentPoly::monomial(var, 0, BigInt::one())
    }

    pub fn constant(var: char, c: i64) -> Self {
        LaurentPoly::monomial(var, 0, BigInt::from(c))
    }

    pub fn monomial(var: char, exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { var, coeffs }
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, other.var);
        let mut coeffs = self.coeffs.clone();
        for (&e, c) in &other.coeffs {
            let entry = coeffs.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(&e);
            }
        }
        LaurentPoly { var: self.var, coeffs }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert_eq!(self.var, other.var);
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                let entry = coeffs.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentPoly { var: self.var, coeffs }
    }

    /// Multiplies by `c · X^k`.
    pub fn scale(&self, exp: i64, coeff: impl Into<BigInt>) -> LaurentPoly {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return LaurentPoly::zero(self.var);
        }
        LaurentPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + exp, c * &coeff)).collect(),
        }
    }

    /// `(-X^3)^k`, the writhe-normalization unit.
    pub fn neg_cube_power(var: char, k: i64) -> LaurentPoly {
        let sign = if k.rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
        LaurentPoly::monomial(var, 3 * k, sign)
    }

    /// Unit normalization: lowest exponent shifted to 0 and the leading
    /// (highest-degree) coefficient made positive. Zero stays zero.
    pub fn normalized_unit(&self) -> LaurentPoly {
        let Some(min) = self.min_exp() else { return self.clone() };
        let mut out = self.scale(-min, 1);
        let lead = out.coeffs.values().next_back().unwrap();
        if lead.is_negative() {
            out = out.neg();
        }
        out
    }

    /// Evaluates at `x = a` modulo `m` (prime `m`; negative exponents go
    /// through the modular inverse).
    pub fn eval_mod(&self, a: i64, m: i64) -> i64 {
        assert!(m > 1 && a.rem_euclid(m) != 0);
        let a = a.rem_euclid(m);
        let inv = mod_pow(a, m - 2, m); // m prime
        let mut acc = 0i64;
        for (&e, c) in &self.coeffs {
            let base = if e >= 0 { mod_pow(a, e, m) } else { mod_pow(inv, -e, m) };
            let c_mod = (c % m + m) % m;
            let c_small: i64 = c_mod.try_into().unwrap();
            acc = (acc + c_small * base) % m;
        }
        acc
    }
}

fn mod_pow(mut b: i64, mut e: i64, m: i64) -> i64 {
    let mut acc = 1i64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (e, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{mag}*{}", self.var)?,
                (_, true) => write!(f, "{}^{}", self.var, e)?,
                (_, false) => write!(f, "{mag}*{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Σ coeffs[i] t^(mindeg + i)`. Trailing and leading zero coefficients are
/// always trimmed; the zero polynomial has no coefficients and `mindeg = 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawPoly")]
pub struct LaurentPoly {
    mindeg: i64,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawPoly {
    mindeg: i64,
    coeffs: Vec<i64>,
}

impl From<RawPoly> for LaurentPoly {
    fn from(raw: RawPoly) -> Self {
        LaurentPoly::new(raw.mindeg, raw.coeffs)
    }
}

impl LaurentPoly {
    pub fn new(mindeg: i64, coeffs: Vec<i64>) -> Self {
        let mut p = Self { mindeg, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(0, vec![c])
    }

    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(c: i64, deg: i64) -> Self {
        Self::new(deg, vec![c])
    }

    /// `t^n - 1` for `n >= 0`.
    pub fn t_pow_minus_one(n: u64) -> Self {
        let mut coeffs = vec![0; n as usize + 1];
        coeffs[0] -= 1;
        coeffs[n as usize] += 1;
        Self::new(0, coeffs)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.mindeg = 0;
            }
            Some(k) => {
                self.coeffs.drain(..k);
                self.mindeg += k as i64;
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mindeg(&self) -> i64 {
        self.mindeg
    }

    pub fn maxdeg(&self) -> i64 {
        self.mindeg + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Degree span `maxdeg - mindeg`; 0 for constants and the zero polynomial.
    pub fn span(&self) -> i64 {
        (self.coeffs.len() as i64 - 1).max(0)
    }

    pub fn coeff(&self, deg: i64) -> i64 {
        let i = deg - self.mindeg;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    pub fn value_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { mindeg: self.mindeg + k, coeffs: self.coeffs.clone() }
    }

    /// `f(t) -> f(t^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let k = k as usize;
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::new(self.mindeg * k as i64, coeffs)
    }

    /// `f(t) -> f(1/t)`.
    pub fn reciprocal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(-self.maxdeg(), coeffs)
    }

    /// Representative of the class `± t^k f`: lowest degree 0 and positive
    /// lowest coefficient.
    pub fn canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let sign = self.coeffs[0].signum();
        Self {
            mindeg: 0,
            coeffs: self.coeffs.iter().map(|&c| c * sign).collect(),
        }
    }

    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_palindromic_up_to_units(&self) -> bool {
        self.equal_up_to_units(&self.reciprocal())
    }

    /// Product, in canonical form.
    pub fn product(&self, other: &Self) -> Self {
        (self * other).canonical()
    }

    /// Exact division in `Z[t, 1/t]`; fails unless the remainder vanishes.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = *divisor.coeffs.last().unwrap();
        let dl = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dl {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        let mut quot = vec![0i64; rem.len() - dl + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dl - 1];
            if top % lead != 0 {
                return Err(Error::InexactDivision(format!("{self} by {divisor}")));
            }
            let q = top / lead;
            quot[i] = q;
            if q != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= q * d;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        Ok(Self::new(self.mindeg - divisor.mindeg, quot))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    /// Ascending powers, e.g. `1 - t + t^2` or `-2t^-1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let deg = self.mindeg + i as i64;
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}")?;
                    }
                    if deg == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.mindeg.min(rhs.mindeg);
        let hi = self.maxdeg().max(rhs.maxdeg());
        let coeffs = (lo..=hi).map(|d| self.coeff(d) + rhs.coeff(d)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            mindeg: self.mindeg,
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.mindeg + rhs.mindeg, coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;

            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Laurent polynomial in a single variable with integer coefficients.
///
/// The variable letter is part of the type, so a polynomial in `A` cannot be
/// accidentally mixed with one in `q`. Exponents may be negative. The term
/// map never stores zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<const V: char> {
    terms: BTreeMap<i64, i64>,
}

impl<const V: char> Laurent<V> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The single term `coef * V^exp`.
    pub fn monomial(coef: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exp, coef);
        }
        Self { terms }
    }

    pub fn from_terms(pairs: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(exp, coef) in pairs {
            p.add_term(exp, coef);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms as (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference of extreme exponents; `None` for the zero polynomial.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn add_term(&mut self, exp: i64, coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Multiply by `coef * V^exp` in place.
    pub fn mul_term(&mut self, exp: i64, coef: i64) {
        if coef == 0 {
            self.terms.clear();
            return;
        }
        let old = std::mem::take(&mut self.terms);
        for (e, c) in old {
            self.terms.insert(e + exp, c * coef);
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `V -> V^-1`.
    pub fn invert_var(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Relabel the variable and remap every exponent; fails if any term is
    /// rejected by the exponent map.
    pub fn reindex<const W: char>(
        &self,
        mut f: impl FnMut(i64) -> Option<i64>,
    ) -> Option<Laurent<W>> {
        let mut out = Laurent::<W>::zero();
        for (&e, &c) in &self.terms {
            out.add_term(f(e)?, c);
        }
        Some(out)
    }

    /// Exact division; `None` when the remainder is nonzero or a leading
    /// coefficient does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dexp, dcoef) = {
            let e = divisor.max_exp().unwrap();
            (e, divisor.coeff(e))
        };
        // Lowest terms of a product never cancel, so an exact quotient has
        // its minimum exponent pinned; going below it means inexact.
        let qmin = self.min_exp().unwrap() - divisor.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            if c % dcoef != 0 {
                return None;
            }
            let qe = e - dexp;
            if qe < qmin {
                return None;
            }
            let qc = c / dcoef;
            quot.add_term(qe, qc);
            let mut sub = divisor.clone();
            sub.mul_term(qe, qc);
            rem -= &sub;
            if let Some(new_max) = rem.max_exp() {
                if new_max >= e {
                    return None;
                }
            }
        }
        Some(quot)
    }

    /// Evaluate at an integer point. Negative exponents only make sense at
    /// x = 1 or x = -1; anywhere else they yield `None`, as does overflow.
    pub fn eval_i64(&self, x: i64) -> Option<i64> {
        let mut acc = 0i64;
        for (&e, &c) in &self.terms {
            if e < 0 && x != 1 && x != -1 {
                return None;
            }
            let mut p = 1i64;
            for _ in 0..e.unsigned_abs() {
                p = p.checked_mul(x)?;
            }
            acc = acc.checked_add(c.checked_mul(p)?)?;
        }
        Some(acc)
    }
}

impl<const V: char> AddAssign<&Laurent<V>> for Laurent<V> {
    fn add_assign(&mut self, rhs: &Laurent<V>) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl<const V: char> SubAssign<&Laurent<V>> for Laurent<V> {
    fn sub_assign(&mut self, rhs: &Laurent<V>) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl<const V: char> Add for &Laurent<V> {
    type Output = Laurent<V>;
    fn add(self, rhs: Self) -> Laurent<V> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const V: char> Sub for &Laurent<V> {
    type Output = Laurent<V>;
    fn sub(self, rhs: Self) -> Laurent<V> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<const V: char> Mul for &Laurent<V> {
    type Output = Laurent<V>;
    fn mul(self, rhs: Self) -> Laurent<V> {
        let mut out = Laurent::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const V: char> MulAssign<&Laurent<V>> for Laurent<V> {
    fn mul_assign(&mut self, rhs: &Laurent<V>) {
        *self = &*self * rhs;
    }
}

impl<const V: char> Neg for &Laurent<V> {
    type Output = Laurent<V>;
    fn neg(self) -> Laurent<V> {
        Laurent {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl<const V: char> fmt::Display for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}")?;
                }
                if e == 1 {
                    write!(f, "{V}")?;
                } else {
                    write!(f, "{V}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<const V: char> fmt::Debug for Laurent<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

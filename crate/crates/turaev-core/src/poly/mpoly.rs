use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use super::laurent::Laurent;

/// Polynomial in `N` commuting variables with integer coefficients.
///
/// Exponent vectors are stored densely; zero coefficients are never kept.
/// Graph polynomials only ever need nonnegative exponents, which
/// [`MPoly::eval_laurent`] relies on.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly<const N: usize> {
    terms: BTreeMap<[u32; N], i64>,
}

impl<const N: usize> MPoly<N> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(1, [0; N])
    }

    pub fn monomial(coef: i64, exps: [u32; N]) -> Self {
        let mut terms = BTreeMap::new();
        if coef != 0 {
            terms.insert(exps, coef);
        }
        Self { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut exps = [0; N];
        exps[i] = 1;
        Self::monomial(1, exps)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: [u32; N]) -> i64 {
        self.terms.get(&exps).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; N], i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exps: [u32; N], coef: i64) {
        if coef == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot += coef;
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    /// Largest exponent of variable `i` across all terms.
    pub fn max_degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute a Laurent polynomial for every variable.
    pub fn eval_laurent<const V: char>(&self, args: &[Laurent<V>; N]) -> Laurent<V> {
        let mut acc = Laurent::zero();
        for (&exps, &coef) in &self.terms {
            let mut term = Laurent::monomial(coef, 0);
            for i in 0..N {
                term *= &args[i].pow(exps[i]);
            }
            acc += &term;
        }
        acc
    }

    /// Evaluate at an integer point.
    pub fn eval_i64(&self, args: [i64; N]) -> Option<i64> {
        let mut acc = 0i64;
        for (&exps, &coef) in &self.terms {
            let mut term = coef;
            for i in 0..N {
                for _ in 0..exps[i] {
                    term = term.checked_mul(args[i])?;
                }
            }
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    /// Render with the given variable names, terms in decreasing total degree.
    pub fn to_string_with(&self, names: [&str; N]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut entries: Vec<([u32; N], i64)> = self.terms().collect();
        entries.sort_by_key(|(e, _)| {
            let total: u32 = e.iter().sum();
            (std::cmp::Reverse(total), std::cmp::Reverse(*e))
        });
        let mut out = String::new();
        for (idx, (exps, coef)) in entries.iter().enumerate() {
            let mag = coef.abs();
            if idx == 0 {
                if *coef < 0 {
                    out.push('-');
                }
            } else if *coef < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let has_vars = exps.iter().any(|&e| e > 0);
            if mag != 1 || !has_vars {
                let _ = write!(out, "{mag}");
            }
            for i in 0..N {
                match exps[i] {
                    0 => {}
                    1 => out.push_str(names[i]),
                    e => {
                        let _ = write!(out, "{}^{e}", names[i]);
                    }
                }
            }
        }
        out
    }
}

impl<const N: usize> AddAssign<&MPoly<N>> for MPoly<N> {
    fn add_assign(&mut self, rhs: &MPoly<N>) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl<const N: usize> Add for &MPoly<N> {
    type Output = MPoly<N>;
    fn add(self, rhs: Self) -> MPoly<N> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<const N: usize> Mul for &MPoly<N> {
    type Output = MPoly<N>;
    fn mul(self, rhs: Self) -> MPoly<N> {
        let mut out = MPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = e1[i] + e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl<const N: usize> MulAssign<&MPoly<N>> for MPoly<N> {
    fn mul_assign(&mut self, rhs: &MPoly<N>) {
        *self = &*self * rhs;
    }
}

impl<const N: usize> std::fmt::Debug for MPoly<N> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..N).map(|i| format!("x{i}")).collect();
        let mut arr = [""; N];
        for i in 0..N {
            arr[i] = &names[i];
        }
        write!(f, "{}", self.to_string_with(arr))
    }
}

//! Exact multivariate Laurent polynomials over the rationals.
//!
//! Exponents are half-integers: each slot stores twice the exponent, so the
//! denominator of every exponent divides 2. This is exactly enough for
//! square roots of determinant characters. Terms live in a `BTreeMap` keyed
//! by exponent vectors compared lexicographically in registry order, which
//! makes the representation canonical and the serialization bit-stable.

use crate::error::{Error, Result};
use crate::vars::Registry;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with half-integer entries; `half[i]` is twice the
/// exponent of variable `i`. The all-zero vector is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    half: Vec<i32>,
}

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector { half: vec![0; n] }
    }

    /// Build from integer exponents.
    pub fn from_ints(exps: &[i32]) -> Self {
        ExponentVector {
            half: exps.iter().map(|e| 2 * e).collect(),
        }
    }

    /// Build from doubled exponents (`half[i]` = 2 * exponent of variable i).
    pub fn from_halves(half: Vec<i32>) -> Self {
        ExponentVector { half }
    }

    pub fn len(&self) -> usize {
        self.half.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.half.iter().all(|&h| h == 0)
    }

    /// Twice the exponent of variable `i`.
    pub fn half(&self, i: usize) -> i32 {
        self.half[i]
    }

    pub fn halves(&self) -> &[i32] {
        &self.half
    }

    pub fn set_half(&mut self, i: usize, h: i32) {
        self.half[i] = h;
    }

    /// Exponent of variable `i` as an exact rational.
    pub fn exponent(&self, i: usize) -> BigRational {
        BigRational::new(BigInt::from(self.half[i]), BigInt::from(2))
    }

    /// True when every exponent is an integer.
    pub fn is_integral(&self) -> bool {
        self.half.iter().all(|h| h % 2 == 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            half: self
                .half
                .iter()
                .zip(&other.half)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            half: self
                .half
                .iter()
                .zip(&other.half)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> ExponentVector {
        ExponentVector {
            half: self.half.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: i32) -> ExponentVector {
        ExponentVector {
            half: self.half.iter().map(|a| a * k).collect(),
        }
    }

    /// Projection onto a sublist of variables, as exact rationals.
    pub fn project(&self, indices: &[usize]) -> Vec<BigRational> {
        indices.iter().map(|&i| self.exponent(i)).collect()
    }
}

/// A finite sum of monomials with nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentExpr {
    registry: Registry,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl LaurentExpr {
    pub fn zero(registry: &Registry) -> Self {
        LaurentExpr {
            registry: registry.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(registry: &Registry) -> Self {
        Self::constant(registry, BigRational::one())
    }

    pub fn constant(registry: &Registry, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::zero(registry.len()), c);
        }
        LaurentExpr {
            registry: registry.clone(),
            terms,
        }
    }

    pub fn from_i64(registry: &Registry, c: i64) -> Self {
        Self::constant(registry, BigRational::from(BigInt::from(c)))
    }

    pub fn monomial(registry: &Registry, exp: ExponentVector, coeff: BigRational) -> Self {
        assert_eq!(exp.len(), registry.len());
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentExpr {
            registry: registry.clone(),
            terms,
        }
    }

    /// The variable `idx` with exponent 1.
    pub fn var(registry: &Registry, idx: usize) -> Self {
        let mut exp = ExponentVector::zero(registry.len());
        exp.set_half(idx, 2);
        Self::monomial(registry, exp, BigRational::one())
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.is_zero() && c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    /// The unique term of a monomial, if this expression is one.
    pub fn as_monomial(&self) -> Option<(&ExponentVector, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when the expression is a sum of integer-exponent monomials.
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e.is_integral())
    }

    fn check_registry(&self, other: &LaurentExpr) -> Result<()> {
        if self.registry == other.registry {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    fn insert_term(terms: &mut BTreeMap<ExponentVector, BigRational>, e: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentExpr) -> Result<LaurentExpr> {
        self.check_registry(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentExpr {
            registry: self.registry.clone(),
            terms,
        })
    }

    pub fn sub(&self, other: &LaurentExpr) -> Result<LaurentExpr> {
        self.check_registry(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), -c.clone());
        }
        Ok(LaurentExpr {
            registry: self.registry.clone(),
            terms,
        })
    }

    pub fn neg(&self) -> LaurentExpr {
        LaurentExpr {
            registry: self.registry.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentExpr) -> Result<LaurentExpr> {
        self.check_registry(other)?;
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                Self::insert_term(&mut terms, e1.add(e2), c1 * c2);
            }
        }
        Ok(LaurentExpr {
            registry: self.registry.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &BigRational) -> LaurentExpr {
        if c.is_zero() {
            return Self::zero(&self.registry);
        }
        LaurentExpr {
            registry: self.registry.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), k * c))
                .collect(),
        }
    }

    /// Integer power. Negative powers are only defined for monomials.
    pub fn pow(&self, n: i32) -> Result<LaurentExpr> {
        if n < 0 {
            let (e, c) = self.as_monomial().ok_or(Error::NegativePowerOfNonMonomial)?;
            if c.is_zero() {
                return Err(Error::NegativePowerOfNonMonomial);
            }
            let inv = Self::monomial(&self.registry, e.neg(), c.recip());
            return inv.pow(-n);
        }
        let mut acc = Self::one(&self.registry);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Substitute variables by monomials (or constants). Targets must be
    /// single-term expressions; a half-integer exponent on the substituted
    /// variable requires the target coefficient to be 1 or the exponent of
    /// the target to stay exact, otherwise the square root would leave the
    /// coefficient field.
    pub fn substitute(&self, map: &BTreeMap<usize, LaurentExpr>) -> Result<LaurentExpr> {
        for target in map.values() {
            if target.terms.len() > 1 {
                return Err(Error::HalfExponentOnNonMonomial);
            }
        }
        let n = self.registry.len();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut new_half = vec![0i32; n];
            let mut coeff = c.clone();
            let mut zero_target = false;
            for i in 0..n {
                let h = e.half(i);
                if h == 0 {
                    continue;
                }
                match map.get(&i) {
                    None => new_half[i] += h,
                    Some(target) => match target.as_monomial() {
                        None => {
                            // target is the zero expression
                            zero_target = true;
                            break;
                        }
                        Some((te, tc)) => {
                            // exponentiate the target by h/2
                            if h % 2 != 0 {
                                // half exponent: need an exact square root
                                if !tc.is_one() {
                                    let sq = sqrt_rational(tc)
                                        .ok_or(Error::HalfExponentOnNonMonomial)?;
                                    coeff *= pow_rational(&sq, h);
                                }
                                for (j, th) in te.halves().iter().enumerate() {
                                    // (x^{th/2})^{h/2} has doubled exponent th*h/2;
                                    // requires th*h even to stay half-integral.
                                    let prod = th * h;
                                    if prod % 2 != 0 {
                                        return Err(Error::ExponentDenominator(format!(
                                            "substitution of variable {} produces denominator 4",
                                            self.registry.name(i)
                                        )));
                                    }
                                    new_half[j] += prod / 2;
                                }
                            } else {
                                let k = h / 2;
                                coeff *= pow_rational(tc, 2 * k);
                                for (j, th) in te.halves().iter().enumerate() {
                                    new_half[j] += th * k;
                                }
                            }
                        }
                    },
                }
            }
            if zero_target {
                continue;
            }
            Self::insert_term(&mut out, ExponentVector::from_halves(new_half), coeff);
        }
        Ok(LaurentExpr {
            registry: self.registry.clone(),
            terms: out,
        })
    }

    /// Relabel variables by the permutation `perm` (variable `i` becomes
    /// `perm[i]`). Used for Weyl group actions on gauge roots.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentExpr {
        let n = self.registry.len();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut half = vec![0i32; n];
            for i in 0..n {
                half[perm[i]] += e.half(i);
            }
            Self::insert_term(&mut out, ExponentVector::from_halves(half), c.clone());
        }
        LaurentExpr {
            registry: self.registry.clone(),
            terms: out,
        }
    }

    /// Leading term in the lexicographic order (largest exponent vector).
    pub fn leading(&self) -> Option<(&ExponentVector, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Exact division: returns `self / d` when the division is exact.
    pub fn div_exact(&self, d: &LaurentExpr) -> Option<LaurentExpr> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if let Some((de, dc)) = d.as_monomial() {
            let inv = LaurentExpr::monomial(&self.registry, de.neg(), dc.recip());
            return self.mul(&inv).ok();
        }
        let mut rem = self.clone();
        let mut quot = LaurentExpr::zero(&self.registry);
        let (dlead_e, dlead_c) = d.leading().unwrap();
        let mut steps = 0usize;
        let max_steps = 4 * (self.num_terms() + 1) * (d.num_terms() + 1) + 64;
        while !rem.is_zero() {
            steps += 1;
            if steps > max_steps {
                return None;
            }
            let (rlead_e, rlead_c) = rem.leading().unwrap();
            let qe = rlead_e.sub(dlead_e);
            let qc = rlead_c / dlead_c;
            let qmono = LaurentExpr::monomial(&self.registry, qe, qc);
            let prod = d.mul(&qmono).ok()?;
            rem = rem.sub(&prod).ok()?;
            quot = quot.add(&qmono).ok()?;
        }
        Some(quot)
    }

    /// Divide out the common monomial content: the termwise minimum
    /// exponent vector. Returns (content, primitive part).
    pub fn monomial_content(&self) -> (ExponentVector, LaurentExpr) {
        let n = self.registry.len();
        if self.is_zero() {
            return (ExponentVector::zero(n), self.clone());
        }
        let mut min = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                min[i] = min[i].min(e.half(i));
            }
        }
        let content = ExponentVector::from_halves(min);
        let stripped = LaurentExpr {
            registry: self.registry.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.sub(&content), c.clone()))
                .collect(),
        };
        (content, stripped)
    }

    /// Numeric evaluation: each variable `i` takes the positive real value
    /// `values[i]`. Half exponents are fine since values are positive.
    pub fn eval_f64(&self, values: &[f64]) -> f64 {
        let mut total = 0.0;
        for (e, c) in &self.terms {
            let mut m = rational_to_f64(c);
            for (i, &v) in values.iter().enumerate() {
                let h = e.half(i);
                if h != 0 {
                    m *= v.powf(h as f64 / 2.0);
                }
            }
            total += m;
        }
        total
    }

    /// Map to the "additive" form: each monomial `c * prod x_i^{e_i}` is
    /// interpreted as the character with weight vector `(e_i)` and replaced
    /// by the linear form `c * sum e_i * x_i`. Only meaningful for
    /// expressions that are single characters; exposed on the exponent level
    /// through [`crate::euler`].
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }
}

fn pow_rational(c: &BigRational, half_exp: i32) -> BigRational {
    // c^(half_exp/2) assuming half_exp even, or c is a perfect square handled upstream
    let k = half_exp / 2;
    let mut acc = BigRational::one();
    let base = if k >= 0 { c.clone() } else { c.recip() };
    for _ in 0..k.abs() {
        acc *= &base;
    }
    acc
}

fn sqrt_rational(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    // good enough for the numeric degeneration hook
    let n = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

/// Render a rational as "p" or "p/q".
pub fn rational_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn half_to_string(h: i32) -> String {
    if h % 2 == 0 {
        format!("{}", h / 2)
    } else {
        format!("{}/2", h)
    }
}

impl fmt::Display for LaurentExpr {
    fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

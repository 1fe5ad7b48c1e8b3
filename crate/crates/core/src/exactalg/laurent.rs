//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Every polynomial carries the [`Alphabet`] it lives over. Exponent vectors
//! are dense fixed-width arrays indexed by the alphabet position, so two
//! polynomials over the same alphabet with equal term maps are equal.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use super::AlgebraError;

pub const MAX_VARS: usize = 24;

/// Dense exponent vector; unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(pub [i32; MAX_VARS]);

impl Exponents {
    pub const ZERO: Exponents = Exponents([0; MAX_VARS]);

    pub fn get(&self, var: usize) -> i32 {
        self.0[var]
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn add(&self, other: &Exponents) -> Exponents {
        let mut out = self.0;
        for (o, e) in out.iter_mut().zip(other.0.iter()) {
            *o += e;
        }
        Exponents(out)
    }
}

impl fmt::Debug for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        f.debug_list().entries(&self.0[..last]).finish()
    }
}

/// A fixed, ordered list of variable names. Variables flagged `negative`
/// may carry negative exponents.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    label: String,
    names: Vec<String>,
    negative: Vec<bool>,
}

impl Alphabet {
    pub fn new(label: &str, vars: &[(&str, bool)]) -> Arc<Alphabet> {
        assert!(
            vars.len() <= MAX_VARS,
            "alphabet {label} exceeds {MAX_VARS} variables"
        );
        Arc::new(Alphabet {
            label: label.to_string(),
            names: vars.iter().map(|(n, _)| n.to_string()).collect(),
            negative: vars.iter().map(|&(_, neg)| neg).collect(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn allows_negative(&self, var: usize) -> bool {
        self.negative[var]
    }

    pub fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable {
                name: name.to_string(),
                alphabet: self.label.clone(),
            })
    }
}

fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Exponents, Rational>,
}

impl LaurentPoly {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        LaurentPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: Rational) -> Self {
        let mut p = Self::zero(alphabet);
        if !c.is_zero() {
            p.terms.insert(Exponents::ZERO, c);
        }
        p
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self, AlgebraError> {
        Self::monomial(alphabet, &[(name, 1)], Rational::one())
    }

    /// `coeff * Π name^exp`. Repeated names accumulate.
    pub fn monomial(
        alphabet: &Arc<Alphabet>,
        powers: &[(&str, i32)],
        coeff: Rational,
    ) -> Result<Self, AlgebraError> {
        let mut exps = Exponents::ZERO;
        for &(name, e) in powers {
            let v = alphabet.require(name)?;
            exps.0[v] += e;
        }
        Self::from_terms(alphabet, [(exps, coeff)])
    }

    /// Builds a polynomial from raw terms, merging duplicates and validating
    /// exponent signs.
    pub fn from_terms<I>(alphabet: &Arc<Alphabet>, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = Self::zero(alphabet);
        for (exps, c) in terms {
            check_exponents(alphabet, &exps)?;
            p.add_term(exps, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single term of a monomial.
    pub fn as_monomial(&self) -> Option<(&Exponents, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn coefficient_of(&self, exps: &Exponents) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient_of(&Exponents::ZERO)
    }

    /// Terms in graded-lexicographic order: ascending total degree, ties by
    /// descending exponent vector.
    pub fn sorted_terms(&self) -> Vec<(Exponents, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by(|(a, _), (b, _)| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then_with(|| b.cmp(a))
        });
        v
    }

    fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &LaurentPoly) -> Result<(), AlgebraError> {
        if same_alphabet(&self.alphabet, &other.alphabet) {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch {
                left: self.alphabet.label.clone(),
                right: other.alphabet.label.clone(),
            })
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
        self.check_same(other)?;
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.add(eb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut out = Self::zero(&self.alphabet);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    /// Product keeping only terms whose exponent of each capped variable is
    /// at most the cap. Exact whenever both factors have non-negative
    /// exponents in the capped variables.
    pub fn truncated_mul(
        &self,
        other: &LaurentPoly,
        caps: &[(usize, i32)],
    ) -> Result<LaurentPoly, AlgebraError> {
        self.check_same(other)?;
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        for (ea, ca) in &self.terms {
            if caps.iter().any(|&(v, cap)| ea.0[v] > cap) {
                continue;
            }
            for (eb, cb) in &other.terms {
                let e = ea.add(eb);
                if caps.iter().any(|&(v, cap)| e.0[v] > cap) {
                    continue;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut out = Self::zero(&self.alphabet);
        out.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `Π var^shift` without touching coefficients.
    pub fn shift(&self, shift: &Exponents) -> Result<LaurentPoly, AlgebraError> {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.add(shift), c.clone()))
            .collect();
        Self::from_terms(&self.alphabet, terms)
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut result = Self::one(&self.alphabet);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Inverse of a monomial with invertible variables.
    pub fn inverse(&self) -> Result<LaurentPoly, AlgebraError> {
        let (exps, c) = self
            .as_monomial()
            .ok_or_else(|| AlgebraError::NotInvertible {
                what: self.to_string(),
            })?;
        let mut inv = Exponents::ZERO;
        for (i, e) in exps.0.iter().enumerate().take(self.alphabet.len()) {
            if *e != 0 && !self.alphabet.allows_negative(i) {
                return Err(AlgebraError::NotInvertible {
                    what: self.to_string(),
                });
            }
            inv.0[i] = -e;
        }
        Self::from_terms(&self.alphabet, [(inv, c.recip())])
    }

    /// Integer power, negative powers through [`LaurentPoly::inverse`].
    pub fn powi(&self, n: i32) -> Result<LaurentPoly, AlgebraError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inverse()?.pow(n.unsigned_abs()))
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> LaurentPoly {
        let mut out = Self::zero(&self.alphabet);
        for (e, c) in &self.terms {
            let k = e.0[var];
            if k != 0 {
                let mut ne = *e;
                ne.0[var] -= 1;
                out.add_term(ne, c * Rational::from_integer(k.into()));
            }
        }
        out
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<LaurentPoly, AlgebraError> {
        Ok(self.derivative(self.alphabet.require(name)?))
    }

    /// Coefficient of `Π vars[i]^exponents[i]`, as a polynomial in the
    /// remaining variables (the listed variables have exponent zero in the
    /// result).
    pub fn laurent_coefficient(&self, vars: &[usize], exponents: &[i32]) -> LaurentPoly {
        assert_eq!(vars.len(), exponents.len());
        let mut out = Self::zero(&self.alphabet);
        for (e, c) in &self.terms {
            if vars.iter().zip(exponents).all(|(&v, &x)| e.0[v] == x) {
                let mut ne = *e;
                for &v in vars {
                    ne.0[v] = 0;
                }
                out.add_term(ne, c.clone());
            }
        }
        out
    }

    pub fn laurent_coefficient_by_name(
        &self,
        vars: &[&str],
        exponents: &[i32],
    ) -> Result<LaurentPoly, AlgebraError> {
        let idx = vars
            .iter()
            .map(|n| self.alphabet.require(n))
            .collect::<Result<Vec<_>, _>>()?;
        for (i, a) in idx.iter().enumerate() {
            if idx[..i].contains(a) {
                return Err(AlgebraError::DuplicateVariable(vars[i].to_string()));
            }
        }
        Ok(self.laurent_coefficient(&idx, exponents))
    }

    /// Rewrites the polynomial over `target`, matching variables by name.
    /// Variables absent from `target` must not occur.
    pub fn relabel(&self, target: &Arc<Alphabet>) -> Result<LaurentPoly, AlgebraError> {
        let map = self.name_map(target);
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = Exponents::ZERO;
            for (v, &k) in e.0.iter().enumerate().take(self.alphabet.len()) {
                if k == 0 {
                    continue;
                }
                let t = map[v].ok_or_else(|| AlgebraError::UnknownVariable {
                    name: self.alphabet.name(v).to_string(),
                    alphabet: target.label.clone(),
                })?;
                ne.0[t] = k;
            }
            check_exponents(target, &ne)?;
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    fn name_map(&self, target: &Alphabet) -> Vec<Option<usize>> {
        self.alphabet.names().map(|n| target.index_of(n)).collect()
    }

    /// Substitutes polynomials (over `target`) for variables by name.
    /// Unbound variables pass through to the same-named variable of `target`.
    /// A bound variable occurring with a negative exponent must be bound to
    /// an invertible monomial.
    pub fn substitute(
        &self,
        bindings: &Bindings,
        target: &Arc<Alphabet>,
    ) -> Result<LaurentPoly, AlgebraError> {
        enum Slot<'a> {
            Bound(&'a LaurentPoly),
            Pass(Option<usize>),
        }
        for (name, poly) in &bindings.map {
            self.alphabet.require(name)?;
            if !same_alphabet(&poly.alphabet, target) {
                return Err(AlgebraError::AlphabetMismatch {
                    left: poly.alphabet.label.clone(),
                    right: target.label.clone(),
                });
            }
        }
        let slots: Vec<Slot> = self
            .alphabet
            .names()
            .map(|n| match bindings.map.get(n) {
                Some(p) => Slot::Bound(p),
                None => Slot::Pass(target.index_of(n)),
            })
            .collect();

        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut pass = Exponents::ZERO;
            let mut factor = LaurentPoly::constant(target, c.clone());
            for (v, &k) in e.0.iter().enumerate().take(self.alphabet.len()) {
                if k == 0 {
                    continue;
                }
                match &slots[v] {
                    Slot::Pass(Some(t)) => pass.0[*t] += k,
                    Slot::Pass(None) => {
                        return Err(AlgebraError::UnknownVariable {
                            name: self.alphabet.name(v).to_string(),
                            alphabet: target.label.clone(),
                        })
                    }
                    Slot::Bound(p) => {
                        let pw = match powers.get(&(v, k)) {
                            Some(pw) => pw,
                            None => {
                                let pw = p.powi(k).map_err(|_| AlgebraError::NotInvertible {
                                    what: format!(
                                        "{} bound to {} under a negative exponent",
                                        self.alphabet.name(v),
                                        p
                                    ),
                                })?;
                                powers.entry((v, k)).or_insert(pw)
                            }
                        };
                        factor = &factor * pw;
                    }
                }
            }
            check_exponents(target, &pass)?;
            for (fe, fc) in factor.terms {
                out.add_term(fe.add(&pass), fc);
            }
        }
        // Passing variables can combine with bound images into invalid
        // exponents only if the target forbids them; re-validate.
        for e in out.terms.keys() {
            check_exponents(target, e)?;
        }
        Ok(out)
    }

    /// Largest and smallest exponent of `var` over all terms.
    pub fn exponent_range(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.0[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    pub fn format_exponents(alphabet: &Alphabet, e: &Exponents) -> String {
        let mut parts = Vec::new();
        for (v, &k) in e.0.iter().enumerate().take(alphabet.len()) {
            match k {
                0 => {}
                1 => parts.push(alphabet.name(v).to_string()),
                _ => parts.push(format!("{}^{}", alphabet.name(v), k)),
            }
        }
        parts.join("*")
    }
}

fn check_exponents(alphabet: &Alphabet, e: &Exponents) -> Result<(), AlgebraError> {
    for (v, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if v >= alphabet.len() {
            return Err(AlgebraError::UnknownVariable {
                name: format!("#{v}"),
                alphabet: alphabet.label.clone(),
            });
        }
        if k < 0 && !alphabet.allows_negative(v) {
            return Err(AlgebraError::NegativeExponent {
                name: alphabet.name(v).to_string(),
                exponent: k,
            });
        }
    }
    Ok(())
}

/// Variable-name to polynomial substitution map.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: BTreeMap<String, LaurentPoly>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, name: &str, value: LaurentPoly) -> &mut Self {
        self.map.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&LaurentPoly> {
        self.map.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &LaurentPoly)> {
        self.map.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.sorted_terms().iter().enumerate() {
            let mono = Self::format_exponents(&self.alphabet, e);
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{}", format_rational(&abs))?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{}*{}", format_rational(&abs), mono)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.alphabet.label, self)
    }
}

// Operator forms panic on alphabet mismatch; use the checked_* methods at API
// boundaries.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("alphabet mismatch in add")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("alphabet mismatch in sub")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("alphabet mismatch in mul")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{int, rat};

    fn alpha() -> Arc<Alphabet> {
        Alphabet::new(
            "test",
            &[("x", false), ("y", false), ("zeta1", true), ("zeta2", true)],
        )
    }

    fn v(a: &Arc<Alphabet>, n: &str) -> LaurentPoly {
        LaurentPoly::var(a, n).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = alpha();
        let x = v(&a, "x");
        let one = LaurentPoly::one(&a);
        let lhs = &(&x + &one) * &(&x - &one);
        let rhs = &x.pow(2) - &one;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let a = alpha();
        let p = &v(&a, "x") + &v(&a, "y").scale(&rat(3, 2));
        assert_eq!(&p + &LaurentPoly::zero(&a), p);
        assert!((&p + &(-&p)).is_zero());
        let z = v(&a, "zeta1");
        assert_eq!(&z.inverse().unwrap() * &z, LaurentPoly::one(&a));
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a = alpha();
        let b = Alphabet::new("other", &[("x", false)]);
        let err = v(&a, "x").checked_add(&v(&b, "x")).unwrap_err();
        assert!(matches!(err, AlgebraError::AlphabetMismatch { .. }));
        assert!(v(&a, "x").checked_mul(&v(&b, "x")).is_err());
    }

    #[test]
    fn negative_exponent_rejected_on_polynomial_variable() {
        let a = alpha();
        let err = LaurentPoly::monomial(&a, &[("x", -1)], int(1)).unwrap_err();
        assert!(matches!(err, AlgebraError::NegativeExponent { .. }));
        assert!(LaurentPoly::monomial(&a, &[("zeta1", -3)], int(1)).is_ok());
    }

    #[test]
    fn power_rule_derivatives() {
        let a = alpha();
        let zinv = LaurentPoly::monomial(&a, &[("zeta1", -1)], int(1)).unwrap();
        let expected = LaurentPoly::monomial(&a, &[("zeta1", -2)], int(-1)).unwrap();
        assert_eq!(zinv.derivative_by_name("zeta1").unwrap(), expected);
        let p = LaurentPoly::monomial(&a, &[("x", 2), ("y", 1)], int(1)).unwrap();
        let dp = LaurentPoly::monomial(&a, &[("x", 1), ("y", 1)], int(2)).unwrap();
        assert_eq!(p.derivative_by_name("x").unwrap(), dp);
        assert!(p.derivative_by_name("zeta2").unwrap().is_zero());
    }

    #[test]
    fn coefficient_extraction() {
        let a = alpha();
        let p = LaurentPoly::monomial(&a, &[("zeta1", -1), ("zeta2", -1)], int(1)).unwrap();
        let c = p
            .laurent_coefficient_by_name(&["zeta1", "zeta2"], &[-1, -1])
            .unwrap();
        assert_eq!(c, LaurentPoly::one(&a));
        let q = &v(&a, "x") + &(&v(&a, "zeta1") * &v(&a, "y"));
        assert_eq!(
            q.laurent_coefficient_by_name(&["zeta1"], &[0]).unwrap(),
            v(&a, "x")
        );
        let r = LaurentPoly::monomial(&a, &[("x", 1), ("zeta1", -2)], int(1)).unwrap();
        assert!(r
            .laurent_coefficient_by_name(&["zeta1", "zeta2"], &[-1, -1])
            .unwrap()
            .is_zero());
        assert!(p
            .laurent_coefficient_by_name(&["zeta1", "zeta1"], &[0, 0])
            .is_err());
    }

    #[test]
    fn substitution_basics() {
        let a = alpha();
        let p = &v(&a, "x").pow(2) + &v(&a, "zeta1").inverse().unwrap();
        assert_eq!(p.substitute(&Bindings::new(), &a).unwrap(), p);
        let mut b = Bindings::new();
        b.bind("zeta1", v(&a, "zeta1"));
        assert_eq!(p.substitute(&b, &a).unwrap(), p);

        let mut b = Bindings::new();
        b.bind("x", &v(&a, "y") + &LaurentPoly::one(&a));
        let expected = &(&v(&a, "y").pow(2) + &v(&a, "y").scale(&int(2))) + &LaurentPoly::one(&a);
        let expected = &expected + &v(&a, "zeta1").inverse().unwrap();
        assert_eq!(p.substitute(&b, &a).unwrap(), expected);
    }

    #[test]
    fn substitution_rejects_non_invertible_inverse() {
        let a = alpha();
        let p = v(&a, "zeta1").inverse().unwrap();
        let mut b = Bindings::new();
        b.bind("zeta1", &v(&a, "zeta1") + &v(&a, "zeta2"));
        assert!(matches!(
            p.substitute(&b, &a),
            Err(AlgebraError::NotInvertible { .. })
        ));
        let mut b = Bindings::new();
        b.bind("zeta1", v(&a, "x"));
        assert!(p.substitute(&b, &a).is_err());
    }

    #[test]
    fn display_is_graded_lex() {
        let a = alpha();
        let p = &(&v(&a, "x").pow(2) - &v(&a, "y")) + &LaurentPoly::constant(&a, rat(1, 2));
        assert_eq!(p.to_string(), "1/2 - y + x^2");
    }
}

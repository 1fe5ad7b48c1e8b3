//! Irreducible g₀-module bookkeeping: dimension formulas, the enumeration of
//! summands of the graded kernels, and reading labels off highest weight
//! vectors.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::cochain::{
    hwv_test, leading_section, weight_of_monomial, CochainError, CochainSection, MonomialParams,
};
use crate::exactalg::{int, rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepnError {
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("Weyl product {0} is not a positive integer")]
    NonIntegral(String),
    #[error("section is not a highest weight vector")]
    NotHighestWeight,
    #[error("leading term is not of the form z0^l (z11 z22 - z12 z21)^a z11^b / (zeta1 zeta2 zeta3): {0}")]
    BadLeadingTerm(String),
    #[error(transparent)]
    Cochain(#[from] CochainError),
}

/// `(a, b, l)`, labelling a summand of degree `2a + b + 2l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrrepLabel {
    pub a: u32,
    pub b: u32,
    pub l: u32,
}

impl IrrepLabel {
    pub fn new(a: u32, b: u32, l: u32) -> IrrepLabel {
        IrrepLabel { a, b, l }
    }

    pub fn degree(&self) -> u32 {
        2 * self.a + self.b + 2 * self.l
    }

    pub fn descriptor(&self) -> ModuleDescriptor {
        let (a, b, l) = (self.a as i64, self.b as i64, self.l as i64);
        let gl2 = [rat(5, 2) + int(l + a + b), rat(5, 2) + int(l + a)];
        let sl4 = [2 * a + b + 1, a + b, a, 0];
        let dimension = dim_gl2(&gl2).expect("dominant") * dim_sl4(&sl4).expect("dominant");
        ModuleDescriptor {
            gl2_weight: gl2,
            sl4_weight: sl4,
            dimension,
        }
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDescriptor {
    pub gl2_weight: [Rational; 2],
    pub sl4_weight: [i64; 4],
    pub dimension: u64,
}

pub fn dim_gl2(w: &[Rational; 2]) -> Result<u64, RepnError> {
    let d = &w[0] - &w[1];
    if d < int(0) || !d.is_integer() {
        return Err(RepnError::NotDominant(format!("({}, {})", w[0], w[1])));
    }
    Ok(d.to_integer()
        .try_into()
        .map(|x: u64| x + 1)
        .expect("small weight"))
}

/// Weyl dimension formula for sl(4).
pub fn dim_sl4(w: &[i64; 4]) -> Result<u64, RepnError> {
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(RepnError::NotDominant(format!("{w:?}")));
    }
    let mut prod = int(1);
    for i in 0..4 {
        for j in i + 1..4 {
            prod *= rat(w[i] - w[j] + (j - i) as i64, (j - i) as i64);
        }
    }
    if !prod.is_integer() || prod <= int(0) {
        return Err(RepnError::NonIntegral(prod.to_string()));
    }
    Ok(prod.to_integer().try_into().expect("fits in u64"))
}

/// Summands of the degree-`k` kernel, sorted by `(l, a, b)`.
pub fn decompose_mk(k: u32) -> Vec<(IrrepLabel, ModuleDescriptor)> {
    let mut out = Vec::new();
    for l in 0..=k / 2 {
        for a in 0..=(k - 2 * l) / 2 {
            let b = k - 2 * l - 2 * a;
            let label = IrrepLabel::new(a, b, l);
            out.push((label, label.descriptor()));
        }
    }
    out.sort_by_key(|(x, _)| (x.l, x.a, x.b));
    out
}

pub fn multiplicity_free_check(k_max: u32) -> bool {
    let mut seen = HashSet::new();
    (0..=k_max)
        .flat_map(decompose_mk)
        .all(|(_, d)| seen.insert((d.gl2_weight, d.sl4_weight)))
}

/// Reads `(a, b, l)` from the top power of `z0` in a highest weight vector.
pub fn label_of_hwv(f: &CochainSection) -> Result<IrrepLabel, RepnError> {
    if !hwv_test(f) {
        return Err(RepnError::NotHighestWeight);
    }
    let terms = f.monomials();
    let params: Vec<(MonomialParams, Rational)> = terms
        .iter()
        .map(|(m, c)| (m.params().expect("monomial"), c.clone()))
        .collect();
    let l = params
        .iter()
        .map(|(p, _)| p.s0)
        .max()
        .expect("nonzero section");
    let top: Vec<&(MonomialParams, Rational)> = params.iter().filter(|(p, _)| p.s0 == l).collect();
    let (lead, coeff) = top
        .iter()
        .max_by_key(|(p, _)| (p.s[0][0], p.s[1][1]))
        .map(|(p, c)| (*p, c.clone()))
        .expect("nonempty");
    let bad = || RepnError::BadLeadingTerm(f.to_string());
    let a = lead.s[1][1];
    let b = lead.s[0][0] - a;
    if l < 0 || a < 0 || b < 0 {
        return Err(bad());
    }
    let label = IrrepLabel::new(a as u32, b as u32, l as u32);
    let expected = leading_section(&label).scale(&coeff);
    let top_part = top
        .iter()
        .map(|(p, c)| CochainSection::from_params(p).expect("valid").scale(c))
        .fold(CochainSection::zero(), |acc, m| acc.add(&m));
    if top_part != expected {
        return Err(bad());
    }
    let w = weight_of_monomial(&CochainSection::from_params(&lead).expect("valid"))?;
    let d = label.descriptor();
    if w.gl2 != d.gl2_weight || w.sl4_normalized() != d.sl4_weight {
        return Err(bad());
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(dim_gl2(&[rat(5, 2), rat(5, 2)]).unwrap(), 1);
        assert_eq!(dim_gl2(&[rat(9, 2), rat(5, 2)]).unwrap(), 3);
        assert_eq!(dim_gl2(&[rat(7, 2), rat(5, 2)]).unwrap(), 2);
        assert!(dim_gl2(&[rat(5, 2), rat(7, 2)]).is_err());
        assert_eq!(dim_sl4(&[1, 0, 0, 0]).unwrap(), 4);
        assert_eq!(dim_sl4(&[3, 2, 0, 0]).unwrap(), 60);
        assert_eq!(dim_sl4(&[3, 1, 1, 0]).unwrap(), 36);
        assert!(dim_sl4(&[0, 1, 0, 0]).is_err());
    }

    #[test]
    fn low_degrees() {
        let d0 = decompose_mk(0);
        assert_eq!(d0.len(), 1);
        assert_eq!(d0[0].1.dimension, 4);
        let d1 = decompose_mk(1);
        assert_eq!(d1[0].0, IrrepLabel::new(0, 1, 0));
        assert_eq!(d1[0].1.dimension, 40);
        let d2: Vec<(IrrepLabel, u64)> = decompose_mk(2)
            .into_iter()
            .map(|(l, d)| (l, d.dimension))
            .collect();
        assert_eq!(
            d2,
            vec![
                (IrrepLabel::new(0, 2, 0), 180),
                (IrrepLabel::new(1, 0, 0), 36),
                (IrrepLabel::new(0, 0, 1), 4)
            ]
        );
    }

    #[test]
    fn multiplicity_free() {
        assert!(multiplicity_free_check(0));
        assert!(multiplicity_free_check(2));
        assert!(multiplicity_free_check(12));
    }
}

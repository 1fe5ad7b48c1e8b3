//! The explicit Penrose transform on the chart W₀.
//!
//! A cochain `f(z0, z_ij, ζ)` is pulled back along the correspondence
//! `z ↦ (B0, B1)(x, ζ)` and the four components of `(1, ζ1, ζ2, ζ3)·f` are
//! integrated over the torus `|ζ_k| = 1`. For a Laurent polynomial in ζ the
//! normalised torus integral of `g dζ1 dζ2 dζ3` is the coefficient of
//! `ζ1⁻¹ζ2⁻¹ζ3⁻¹` in `g`, so the transform is exact coefficient extraction.

use std::collections::BTreeMap;
use std::fmt;

use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::charts::{correspondence_substitution, BaseCoords};
use crate::cochain::CochainSection;
use crate::exactalg::{
    exact_nullspace, AlgebraError, Bindings, Exponents, LaurentPoly, RatMatrix, Rational,
};
use crate::vars;

/// A section of the spinor bundle over U: four polynomial components in the
/// base coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct SpinorField {
    components: [LaurentPoly; 4],
}

impl SpinorField {
    pub fn new(components: [LaurentPoly; 4]) -> Result<SpinorField, AlgebraError> {
        let components = components
            .into_iter()
            .map(|c| c.relabel(vars::spinor()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SpinorField {
            components: components.try_into().expect("four components"),
        })
    }

    pub fn zero() -> SpinorField {
        SpinorField {
            components: std::array::from_fn(|_| LaurentPoly::zero(vars::spinor())),
        }
    }

    pub fn components(&self) -> &[LaurentPoly; 4] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(LaurentPoly::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> SpinorField {
        SpinorField {
            components: self.components.clone().map(|p| p.scale(c)),
        }
    }

    pub fn add(&self, other: &SpinorField) -> SpinorField {
        SpinorField {
            components: std::array::from_fn(|m| &self.components[m] + &other.components[m]),
        }
    }

    pub fn sub(&self, other: &SpinorField) -> SpinorField {
        SpinorField {
            components: std::array::from_fn(|m| &self.components[m] - &other.components[m]),
        }
    }

    /// Set of weighted degrees present in the components
    /// (`deg x12 = 2`, every other coordinate has degree 1).
    pub fn degrees(&self) -> Vec<i64> {
        let mut d: Vec<i64> = self
            .components
            .iter()
            .flat_map(|c| c.terms().map(|(e, _)| weighted_degree(e)))
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

impl fmt::Display for SpinorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join("; "))
    }
}

impl fmt::Debug for SpinorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpinorField{self}")
    }
}

/// Weighted degree of a monomial in the spinor alphabet.
pub fn weighted_degree(e: &Exponents) -> i64 {
    // x12 sits at index 0 of the spinor alphabet
    e.total_degree() + e.get(0) as i64
}

struct Pullback {
    bindings: Bindings,
    zeta: [usize; 3],
}

static PULLBACK: Lazy<Pullback> = Lazy::new(|| {
    let corr =
        correspondence_substitution(&BaseCoords::symbolic()).expect("symbolic correspondence");
    let f = vars::fibre();
    Pullback {
        bindings: corr.bindings(),
        zeta: vars::ZETA.map(|n| f.index_of(n).expect("zeta in fibre")),
    }
});

/// Pulls `f` back to the fibre alphabet (`(x, ζ)` coordinates).
pub fn pull_back(f: &CochainSection) -> LaurentPoly {
    f.body()
        .substitute(&PULLBACK.bindings, vars::fibre())
        .expect("correspondence bindings are polynomial")
}

/// Transform of a single term `c · z-monomial · ζ^e`.
fn transform_term(exps: &Exponents, coeff: &Rational) -> [LaurentPoly; 4] {
    let sec = vars::section();
    let fib = vars::fibre();
    let p = &*PULLBACK;
    let zeta_sec: [usize; 3] = vars::ZETA.map(|n| sec.index_of(n).expect("zeta"));
    let e: [i32; 3] = zeta_sec.map(|v| exps.get(v));
    // numerator ζ-exponent needed for component m: −1 − e_k − [k = m]
    let base: [i32; 3] = e.map(|x| -1 - x);
    let zero = || std::array::from_fn(|_| LaurentPoly::zero(vars::spinor()));
    if base.iter().any(|&b| b < 0) {
        return zero();
    }
    let caps: Vec<(usize, i32)> = (0..3).map(|k| (p.zeta[k], base[k].max(0))).collect();
    let mut numer = LaurentPoly::constant(fib, coeff.clone());
    for (v, name) in sec.names().enumerate() {
        let k = exps.get(v);
        if k <= 0 || name.starts_with("zeta") {
            continue;
        }
        let image = p.bindings.get(name).expect("bound z variable");
        for _ in 0..k {
            numer = numer.truncated_mul(image, &caps).expect("fibre alphabet");
        }
    }
    std::array::from_fn(|m| {
        let mut want = base;
        if m > 0 {
            want[m - 1] -= 1;
        }
        if want.iter().any(|&w| w < 0) {
            return LaurentPoly::zero(vars::spinor());
        }
        numer
            .laurent_coefficient(&p.zeta, &want)
            .relabel(vars::spinor())
            .expect("ζ-free coefficient lives on U")
    })
}

/// The Penrose transform of a finite cochain representative.
pub fn penrose_transform(f: &CochainSection) -> SpinorField {
    let terms: Vec<(Exponents, Rational)> =
        f.body().terms().map(|(e, c)| (*e, c.clone())).collect();
    let parts: Vec<[LaurentPoly; 4]> = terms
        .par_iter()
        .map(|(e, c)| transform_term(e, c))
        .collect();
    let mut out = SpinorField::zero();
    for part in parts {
        for (m, p) in part.into_iter().enumerate() {
            if !p.is_zero() {
                out.components[m] = &out.components[m] + &p;
            }
        }
    }
    out
}

/// Reference route: full pull-back followed by residue extraction of
/// `(1, ζ1, ζ2, ζ3)·f`.
pub fn penrose_transform_by_residue(f: &CochainSection) -> SpinorField {
    let g = pull_back(f);
    let fib = vars::fibre();
    let zeta = PULLBACK.zeta;
    let weights: [LaurentPoly; 4] = [
        LaurentPoly::one(fib),
        vars::var(fib, "zeta1"),
        vars::var(fib, "zeta2"),
        vars::var(fib, "zeta3"),
    ];
    let components = weights.map(|w| {
        (&w * &g)
            .laurent_coefficient(&zeta, &[-1, -1, -1])
            .relabel(vars::spinor())
            .expect("ζ-free")
    });
    SpinorField { components }
}

/// Flattens spinor fields into coefficient columns over a shared monomial
/// index.
pub fn coefficient_matrix(images: &[SpinorField]) -> RatMatrix {
    let mut rows: BTreeMap<(usize, Exponents), usize> = BTreeMap::new();
    for s in images {
        for (m, c) in s.components.iter().enumerate() {
            for (e, _) in c.terms() {
                let n = rows.len();
                rows.entry((m, *e)).or_insert(n);
            }
        }
    }
    let mut mat = RatMatrix::zeros(rows.len(), images.len());
    for (j, s) in images.iter().enumerate() {
        for (m, c) in s.components.iter().enumerate() {
            for (e, v) in c.terms() {
                mat.set(rows[&(m, *e)], j, v.clone());
            }
        }
    }
    mat
}

/// True iff no non-trivial rational combination of `span` has zero
/// transform.
pub fn transform_is_injective_on(span: &[CochainSection]) -> bool {
    let images: Vec<SpinorField> = span.iter().map(penrose_transform).collect();
    exact_nullspace(&coefficient_matrix(&images)).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    fn sec(text: &[(&str, i32)]) -> CochainSection {
        CochainSection::monomial(text, int(1)).unwrap()
    }

    fn spin(name: &str) -> LaurentPoly {
        vars::var(vars::spinor(), name)
    }

    #[test]
    fn constant_spinor() {
        let f = sec(&[("zeta1", -1), ("zeta2", -1), ("zeta3", -1)]);
        let p = penrose_transform(&f);
        let one = LaurentPoly::one(vars::spinor());
        let zero = LaurentPoly::zero(vars::spinor());
        assert_eq!(
            p,
            SpinorField::new([one, zero.clone(), zero.clone(), zero]).unwrap()
        );
    }

    #[test]
    fn z11_images() {
        let f = sec(&[("z11", 2), ("zeta1", -1), ("zeta2", -1), ("zeta3", -1)]);
        let p = penrose_transform(&f);
        assert_eq!(p.components()[0], spin("x2_11").pow(2));
        assert!(p.components()[1..].iter().all(LaurentPoly::is_zero));
        let f = sec(&[("z11", 1), ("zeta1", -1), ("zeta2", -1), ("zeta3", -1)]);
        assert_eq!(penrose_transform(&f).components()[0], spin("x2_11"));
    }

    #[test]
    fn no_poles_means_zero() {
        let f = sec(&[("zeta1", 1), ("zeta2", 1), ("zeta3", 1)]);
        assert!(penrose_transform(&f).is_zero());
    }

    #[test]
    fn truncated_route_matches_full_residue() {
        let cases: [&[(&str, i32)]; 4] = [
            &[
                ("z0", 2),
                ("z11", 1),
                ("zeta1", -2),
                ("zeta2", -1),
                ("zeta3", -3),
            ],
            &[
                ("z21", 1),
                ("z32", 2),
                ("zeta1", -3),
                ("zeta2", -1),
                ("zeta3", -1),
            ],
            &[
                ("z0", 1),
                ("z12", 1),
                ("z31", 1),
                ("zeta1", -1),
                ("zeta2", -2),
                ("zeta3", -2),
            ],
            &[("z22", 3), ("zeta1", 1), ("zeta2", -2), ("zeta3", -4)],
        ];
        for c in cases {
            let f = sec(c);
            assert_eq!(
                penrose_transform(&f),
                penrose_transform_by_residue(&f),
                "{c:?}"
            );
        }
    }

    #[test]
    fn injectivity_examples() {
        let base = [("zeta1", -1), ("zeta2", -1), ("zeta3", -1)];
        let f = sec(&base);
        assert!(transform_is_injective_on(std::slice::from_ref(&f)));
        assert!(!transform_is_injective_on(&[f.clone(), f.scale(&int(2))]));
        let mut a = base.to_vec();
        a.push(("z11", 1));
        let mut b = base.to_vec();
        b.push(("z21", 1));
        assert!(transform_is_injective_on(&[sec(&a), sec(&b)]));
    }
}

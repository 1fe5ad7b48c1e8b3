//! Affine charts on the twistor space and on the family of α-planes, their
//! transition functions, and the incidence correspondence between the base
//! U and the chart W₀.
//!
//! Vectors of C¹⁰ are written in the ordered basis
//! `{e1, e2, e3, e4, e5, ē3, ē4, ē5, ē1, ē2}` with `h(e_i, ē_j) = δ_ij`.
//! The null directions of the complement x₀ᶜ are identified with Λ²C⁴ via
//! `e3, e4, e5, ē3, ē4, ē5 ↦ f0∧f1, f0∧f2, f0∧f3, f2∧f3, −f1∧f3, f1∧f2`.

use std::sync::Arc;

use crate::exactalg::{int, AlgebraError, Alphabet, Bindings, LaurentPoly, PolyMatrix, Rational};
use crate::vars::{self, var};

/// Position of each basis vector of C¹⁰ in the ordered basis.
pub mod basis {
    pub const E: [usize; 5] = [0, 1, 2, 3, 4];
    /// `ē_i` for i = 1..5 (index 0 is ē1).
    pub const EBAR: [usize; 5] = [8, 9, 5, 6, 7];
}

/// Index of a chart in the affine cover of W (and of CP³).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChartId(u8);

impl ChartId {
    pub fn new(index: u8) -> Result<ChartId, AlgebraError> {
        if index < 4 {
            Ok(ChartId(index))
        } else {
            Err(AlgebraError::Shape(format!(
                "chart index {index} outside 0..=3"
            )))
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The 10×10 Gram matrix of `h` in the ordered basis.
pub fn bilinear_form(alphabet: &Arc<Alphabet>) -> PolyMatrix {
    let mut h = PolyMatrix::zeros(alphabet, 10, 10);
    for i in 0..5 {
        let (a, b) = (basis::E[i], basis::EBAR[i]);
        h.set(a, b, LaurentPoly::one(alphabet));
        h.set(b, a, LaurentPoly::one(alphabet));
    }
    h
}

/// The antisymmetric 3×3 matrix built from (ζ1, ζ2, ζ3):
/// `[[0, −ζ3, ζ2], [ζ3, 0, −ζ1], [−ζ2, ζ1, 0]]`.
pub fn zeta_matrix(zeta: &[LaurentPoly; 3]) -> PolyMatrix {
    let a = zeta[0].alphabet().clone();
    let zero = LaurentPoly::zero(&a);
    let [z1, z2, z3] = zeta;
    let rows = [
        [zero.clone(), -z3, z2.clone()],
        [z3.clone(), zero.clone(), -z1],
        [-z2, z1.clone(), zero],
    ];
    PolyMatrix::from_fn(&a, 3, 3, |i, j| rows[i][j].clone()).expect("shared alphabet")
}

/// `[[0, t], [−t, 0]]`.
pub fn antisym2(t: &LaurentPoly) -> PolyMatrix {
    let a = t.alphabet().clone();
    let mut m = PolyMatrix::zeros(&a, 2, 2);
    m.set(0, 1, t.clone());
    m.set(1, 0, -t);
    m
}

/// Coordinates `(z0, z_ij, ζ_k)` of the chart W₀, given as arbitrary values
/// (symbols or numbers) over one alphabet.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistorCoords {
    pub z0: LaurentPoly,
    pub z: [[LaurentPoly; 2]; 3],
    pub zeta: [LaurentPoly; 3],
}

impl TwistorCoords {
    pub fn symbolic() -> TwistorCoords {
        let a = vars::section();
        TwistorCoords {
            z0: var(a, "z0"),
            z: vars::ZIJ.map(|row| row.map(|n| var(a, n))),
            zeta: vars::ZETA.map(|n| var(a, n)),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.z0.alphabet()
    }

    pub fn b0(&self) -> PolyMatrix {
        antisym2(&self.z0)
    }

    pub fn b1(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.alphabet(), 3, 2, |i, j| self.z[i][j].clone())
            .expect("shared alphabet")
    }

    pub fn b2(&self) -> PolyMatrix {
        zeta_matrix(&self.zeta)
    }

    /// The 10×5 basis matrix of the null 5-plane in block form
    /// `[[1₂, 0], [0, 1₃], [B1, B2], [B0, −B1ᵀ]]`.
    pub fn plane_matrix(&self) -> Result<PolyMatrix, AlgebraError> {
        chart_matrix(
            &self.b0(),
            &self.b1(),
            &self.b2(),
            &self.b1().transpose().neg(),
        )
    }
}

fn chart_matrix(
    b0: &PolyMatrix,
    b1: &PolyMatrix,
    b2: &PolyMatrix,
    bottom_right: &PolyMatrix,
) -> Result<PolyMatrix, AlgebraError> {
    let a = b1
        .alphabet()
        .cloned()
        .ok_or_else(|| AlgebraError::Shape("empty block".into()))?;
    let mut g = PolyMatrix::zeros(&a, 10, 5);
    g.set_block(0, 0, &PolyMatrix::identity(&a, 5));
    g.set_block(5, 0, b1);
    g.set_block(5, 2, b2);
    g.set_block(8, 0, b0);
    g.set_block(8, 2, bottom_right);
    Ok(g)
}

/// Coordinates `(X1, X2, x12)` on U; `X1`, `X2` are 3×2.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseCoords {
    pub x1: PolyMatrix,
    pub x2: PolyMatrix,
    pub x12: LaurentPoly,
}

impl BaseCoords {
    /// Symbolic coordinates over the `fibre` alphabet.
    pub fn symbolic() -> BaseCoords {
        let a = vars::fibre();
        BaseCoords {
            x1: PolyMatrix::from_fn(a, 3, 2, |i, j| var(a, vars::X1[i][j])).expect("fibre"),
            x2: PolyMatrix::from_fn(a, 3, 2, |i, j| var(a, vars::X2[i][j])).expect("fibre"),
            x12: var(a, vars::X12),
        }
    }

    /// The origin of U, over the `fibre` alphabet.
    pub fn origin() -> BaseCoords {
        let a = vars::fibre();
        BaseCoords {
            x1: PolyMatrix::zeros(a, 3, 2),
            x2: PolyMatrix::zeros(a, 3, 2),
            x12: LaurentPoly::zero(a),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        self.x12.alphabet()
    }

    pub fn x12_matrix(&self) -> PolyMatrix {
        antisym2(&self.x12)
    }

    /// The 10×2 basis matrix of the null 2-plane over a base point:
    /// `[1₂; X1; X2; X12 − ½(X1ᵀX2 + X2ᵀX1)]`.
    pub fn base_point_matrix(&self) -> Result<PolyMatrix, AlgebraError> {
        let a = self.alphabet().clone();
        let sym = self
            .x1
            .transpose()
            .mul(&self.x2)?
            .add(&self.x2.transpose().mul(&self.x1)?)?;
        let bottom = self
            .x12_matrix()
            .sub(&sym.scale(&Rational::new(1.into(), 2.into())))?;
        let mut m = PolyMatrix::zeros(&a, 10, 2);
        m.set_block(0, 0, &PolyMatrix::identity(&a, 2));
        m.set_block(2, 0, &self.x1);
        m.set_block(5, 0, &self.x2);
        m.set_block(8, 0, &bottom);
        Ok(m)
    }
}

/// Which quadratic term enters the `B0` block of the correspondence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum B0Convention {
    /// `X1ᵀ ζ X1`: antisymmetric, the convention used everywhere.
    Antisymmetric,
    /// `X1ᵀ ζ X2` in place of `X1ᵀ ζ X1`. Kept only to demonstrate that it
    /// breaks antisymmetry.
    MixedProduct,
}

/// Blocks of the twistor point incident to a base point for fibre
/// coordinate ζ.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub b0: PolyMatrix,
    pub b1: PolyMatrix,
    pub b2: PolyMatrix,
    pub bottom_right: PolyMatrix,
}

impl Correspondence {
    /// Bindings `z0 ↦ B0[0][1]`, `z_ij ↦ B1[i][j]`; ζ passes through.
    pub fn bindings(&self) -> Bindings {
        let mut b = Bindings::new();
        b.bind("z0", self.b0.get(0, 1).clone());
        for (i, row) in vars::ZIJ.iter().enumerate() {
            for (j, name) in row.iter().enumerate() {
                b.bind(name, self.b1.get(i, j).clone());
            }
        }
        b
    }

    pub fn plane_matrix(&self) -> Result<PolyMatrix, AlgebraError> {
        chart_matrix(&self.b0, &self.b1, &self.b2, &self.bottom_right)
    }
}

pub fn correspondence_with(
    x: &BaseCoords,
    convention: B0Convention,
) -> Result<Correspondence, AlgebraError> {
    let a = x.alphabet().clone();
    let zeta = vars::ZETA.map(|n| var(&a, n));
    let zm = zeta_matrix(&zeta);
    let b1 = x.x2.sub(&zm.mul(&x.x1)?)?;
    let half = Rational::new(1.into(), 2.into());
    let skew =
        x.x2.transpose()
            .mul(&x.x1)?
            .sub(&x.x1.transpose().mul(&x.x2)?)?
            .scale(&half);
    let quad = match convention {
        B0Convention::Antisymmetric => x.x1.transpose().mul(&zm)?.mul(&x.x1)?,
        B0Convention::MixedProduct => x.x1.transpose().mul(&zm)?.mul(&x.x2)?,
    };
    let b0 = x.x12_matrix().add(&skew)?.add(&quad)?;
    let bottom_right = x.x2.transpose().neg().sub(&x.x1.transpose().mul(&zm)?)?;
    Ok(Correspondence {
        b0,
        b1,
        b2: zm,
        bottom_right,
    })
}

/// The correspondence `x ↦ (B0, B1, B2)` with `B1 = X2 − ζX1` and
/// `B0 = X12 + ½(X2ᵀX1 − X1ᵀX2) + X1ᵀζX1`.
pub fn correspondence_substitution(x: &BaseCoords) -> Result<Correspondence, AlgebraError> {
    correspondence_with(x, B0Convention::Antisymmetric)
}

/// The α-plane basis (6×3, rows in the order e3, e4, e5, ē3, ē4, ē5) on the
/// CP³ chart `v_c ≠ 0`. With `w = v / v_c` carrying 1 in slot `c` and
/// `coords` in the other slots (increasing order), the columns are `w∧f_k`
/// for `k ≠ c` in increasing order. For charts 0 and 1 this is exactly
/// the pair of matrices in the usual presentation; charts 2 and 3 follow
/// the same rule.
pub fn alpha_plane_basis(
    chart: ChartId,
    coords: &[LaurentPoly; 3],
) -> Result<PolyMatrix, AlgebraError> {
    let a = coords[0].alphabet().clone();
    for c in coords.iter() {
        if c.alphabet() != &a && **c.alphabet() != *a {
            return Err(AlgebraError::AlphabetMismatch {
                left: c.alphabet().label().into(),
                right: a.label().into(),
            });
        }
    }
    let c = chart.index();
    let mut w: Vec<LaurentPoly> = Vec::with_capacity(4);
    let mut it = coords.iter();
    for slot in 0..4 {
        if slot == c {
            w.push(LaurentPoly::one(&a));
        } else {
            w.push(it.next().expect("three coordinates").clone());
        }
    }
    let ks: Vec<usize> = (0..4).filter(|&k| k != c).collect();
    let mut m = PolyMatrix::zeros(&a, 6, 3);
    for (col, &k) in ks.iter().enumerate() {
        // w ∧ f_k = Σ_i w_i f_i∧f_k
        for (i, wi) in w.iter().enumerate() {
            if i == k || wi.is_zero() {
                continue;
            }
            let (row, sign) = wedge_position(i, k);
            let cur = m.get(row, col).clone();
            m.set(row, col, &cur + &wi.scale(&int(sign)));
        }
    }
    Ok(m)
}

/// Row of `f_i∧f_j` in the x₀ᶜ basis together with the sign relating them.
pub fn wedge_position(i: usize, j: usize) -> (usize, i64) {
    // basis of Λ²: e3=f0f1, e4=f0f2, e5=f0f3, ē3=f2f3, ē4=−f1f3, ē5=f1f2
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    match (lo, hi) {
        (0, 1) => (0, s),
        (0, 2) => (1, s),
        (0, 3) => (2, s),
        (2, 3) => (3, s),
        (1, 3) => (4, -s),
        (1, 2) => (5, s),
        _ => unreachable!("f_i∧f_i"),
    }
}

/// Direction of a CP³ chart transition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cp3Direction {
    ZeroToOne,
    OneToZero,
}

/// `ρ1 = ζ1⁻¹, ρ2 = ζ2ζ1⁻¹, ρ3 = ζ3ζ1⁻¹`; the inverse map has the same form.
pub fn cp3_transition(
    _dir: Cp3Direction,
    values: &[LaurentPoly; 3],
) -> Result<[LaurentPoly; 3], AlgebraError> {
    let inv = values[0].inverse()?;
    Ok([
        inv.clone(),
        values[1].checked_mul(&inv)?,
        values[2].checked_mul(&inv)?,
    ])
}

/// Coordinates `(w0, w_ij, ρ_k)` on the chart W₁.
#[derive(Clone, Debug, PartialEq)]
pub struct ChartOneCoords {
    pub w0: LaurentPoly,
    pub w: [[LaurentPoly; 2]; 3],
    pub rho: [LaurentPoly; 3],
}

impl ChartOneCoords {
    pub fn symbolic() -> ChartOneCoords {
        let a = vars::chart1();
        ChartOneCoords {
            w0: var(a, "w0"),
            w: vars::WIJ.map(|row| row.map(|n| var(a, n))),
            rho: vars::RHO.map(|n| var(a, n)),
        }
    }
}

/// Change of coordinates W₀ → W₁ on the overlap (requires ζ1 invertible).
pub fn w01_transition(z: &TwistorCoords) -> Result<ChartOneCoords, AlgebraError> {
    let inv = z.zeta[0].inverse()?;
    let r2 = z.zeta[1].checked_mul(&inv)?;
    let r3 = z.zeta[2].checked_mul(&inv)?;
    let zz = |i: usize, j: usize| &z.z[i][j];
    let w0 = &z.z0 + &(&(&(zz(2, 1) * zz(1, 0)) - &(zz(1, 1) * zz(2, 0))) * &inv);
    let w1 = |j: usize| &(zz(0, j) + &(zz(2, j) * &r3)) + &(zz(1, j) * &r2);
    let w = [
        [w1(0), w1(1)],
        [zz(1, 0) * &inv, zz(1, 1) * &inv],
        [-&(zz(2, 0) * &inv), -&(zz(2, 1) * &inv)],
    ];
    Ok(ChartOneCoords {
        w0,
        w,
        rho: [inv.clone(), r2, r3],
    })
}

/// Change of coordinates W₁ → W₀, the inverse of [`w01_transition`].
pub fn w10_transition(w: &ChartOneCoords) -> Result<TwistorCoords, AlgebraError> {
    let inv = w.rho[0].inverse()?;
    let z2 = [&w.w[1][0] * &inv, &w.w[1][1] * &inv];
    let z3 = [-&(&w.w[2][0] * &inv), -&(&w.w[2][1] * &inv)];
    let z1 = |j: usize| {
        &(&w.w[0][j] + &(&(&w.w[2][j] * &w.rho[2]) * &inv)) - &(&(&w.w[1][j] * &w.rho[1]) * &inv)
    };
    let z0 = &(&w.w0 + &(&(&w.w[2][1] * &w.w[1][0]) * &inv)) - &(&(&w.w[1][1] * &w.w[2][0]) * &inv);
    Ok(TwistorCoords {
        z0,
        z: [[z1(0), z1(1)], z2, z3],
        zeta: [inv.clone(), &w.rho[1] * &inv, &w.rho[2] * &inv],
    })
}

/// Gram matrix `Gᵀ H G` of the columns of `g`.
pub fn gram(g: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
    let a = g
        .alphabet()
        .cloned()
        .ok_or_else(|| AlgebraError::Shape("empty".into()))?;
    g.transpose().mul(&bilinear_form(&a))?.mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn cp3_zeta() -> [LaurentPoly; 3] {
        vars::ZETA.map(|n| var(vars::cp3(), n))
    }

    fn cp3_rho() -> [LaurentPoly; 3] {
        vars::RHO.map(|n| var(vars::cp3(), n))
    }

    fn consts(vals: [i64; 3]) -> [LaurentPoly; 3] {
        vals.map(|v| LaurentPoly::constant(vars::cp3(), int(v)))
    }

    #[test]
    fn chart0_alpha_basis_at_origin_is_standard() {
        let m = alpha_plane_basis(ChartId::new(0).unwrap(), &consts([0, 0, 0])).unwrap();
        for i in 0..6 {
            for j in 0..3 {
                let expect = if i == j { int(1) } else { int(0) };
                assert_eq!(m.get(i, j).constant_term(), expect);
                assert!(m.get(i, j).num_terms() <= 1);
            }
        }
    }

    #[test]
    fn chart0_alpha_basis_matches_reference_pattern() {
        let z = cp3_zeta();
        let m = alpha_plane_basis(ChartId::new(0).unwrap(), &z).unwrap();
        // lower block is the ζ matrix
        assert_eq!(m.block(3, 0, 3, 3), zeta_matrix(&z));
        assert_eq!(m.block(0, 0, 3, 3), PolyMatrix::identity(vars::cp3(), 3));
        assert!(m.get(3, 0).is_zero());
        assert_eq!(m.get(3, 1), &-&z[2]);
        assert_eq!(m.get(3, 2), &z[1]);
    }

    #[test]
    fn chart1_alpha_basis_matches_reference_pattern() {
        let r = cp3_rho();
        let m = alpha_plane_basis(ChartId::new(1).unwrap(), &r).unwrap();
        let a = vars::cp3();
        let one = LaurentPoly::one(a);
        let zero = LaurentPoly::zero(a);
        let expected = [
            [-&one, zero.clone(), zero.clone()],
            [-&r[1], r[0].clone(), zero.clone()],
            [-&r[2], zero.clone(), r[0].clone()],
            [zero.clone(), -&r[2], r[1].clone()],
            [zero.clone(), zero.clone(), -&one],
            [zero.clone(), one.clone(), zero.clone()],
        ];
        for i in 0..6 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), &expected[i][j], "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn alpha_planes_are_totally_null_in_every_chart() {
        // Q restricted to x0^c: pairs e_k with ē_k
        let a = vars::cp3();
        let mut q = PolyMatrix::zeros(a, 6, 6);
        for k in 0..3 {
            q.set(k, k + 3, LaurentPoly::one(a));
            q.set(k + 3, k, LaurentPoly::one(a));
        }
        for c in 0..4 {
            let m = alpha_plane_basis(ChartId::new(c).unwrap(), &cp3_zeta()).unwrap();
            let g = m.transpose().mul(&q).unwrap().mul(&m).unwrap();
            assert!(g.is_zero(), "chart {c}");
        }
        assert!(ChartId::new(4).is_err());
    }

    #[test]
    fn cp3_transition_examples() {
        let fixed = cp3_transition(Cp3Direction::ZeroToOne, &consts([1, 0, 0])).unwrap();
        assert_eq!(fixed, consts([1, 0, 0]));
        let out = cp3_transition(Cp3Direction::ZeroToOne, &consts([2, 4, 6])).unwrap();
        let expect = [rat(1, 2), int(2), int(3)].map(|c| LaurentPoly::constant(vars::cp3(), c));
        assert_eq!(out, expect);
        let z = cp3_zeta();
        let there = cp3_transition(Cp3Direction::ZeroToOne, &z).unwrap();
        let back = cp3_transition(Cp3Direction::OneToZero, &there).unwrap();
        assert_eq!(back, z);
        assert!(cp3_transition(Cp3Direction::ZeroToOne, &consts([0, 1, 1])).is_err());
    }

    #[test]
    fn w01_examples() {
        let a = vars::section();
        let zero = LaurentPoly::zero(a);
        let one = LaurentPoly::one(a);
        let mut z = TwistorCoords {
            z0: zero.clone(),
            z: std::array::from_fn(|_| [zero.clone(), zero.clone()]),
            zeta: [one.clone(), zero.clone(), zero.clone()],
        };
        let w = w01_transition(&z).unwrap();
        assert!(w.w0.is_zero());
        assert!(w.w.iter().flatten().all(LaurentPoly::is_zero));
        assert_eq!(w.rho, [one.clone(), zero.clone(), zero.clone()]);

        z.z[2][1] = one.clone();
        z.z[1][0] = one.clone();
        assert_eq!(w01_transition(&z).unwrap().w0, one);

        let sym = TwistorCoords::symbolic();
        let w = w01_transition(&sym).unwrap();
        let inv = sym.zeta[0].inverse().unwrap();
        assert_eq!(w.w[1][0], -&-&(&sym.z[1][0] * &inv));
        assert_eq!(w.w[2][0], -&(&sym.z[2][0] * &inv));

        z.zeta[0] = zero;
        assert!(w01_transition(&z).is_err());
    }

    #[test]
    fn w_transitions_are_mutually_inverse() {
        let sym = TwistorCoords::symbolic();
        let w = w01_transition(&sym).unwrap();
        // w is expressed in section variables; map back
        assert_eq!(w10_transition(&w).unwrap(), sym);
        let w_sym = ChartOneCoords::symbolic();
        assert_eq!(
            w01_transition(&w10_transition(&w_sym).unwrap()).unwrap(),
            w_sym
        );
    }

    #[test]
    fn twistor_chart_is_totally_null() {
        let g = TwistorCoords::symbolic().plane_matrix().unwrap();
        assert!(gram(&g).unwrap().is_zero());
    }

    #[test]
    fn origin_maps_to_origin() {
        let c = correspondence_substitution(&BaseCoords::origin()).unwrap();
        assert!(c.b0.is_zero());
        assert!(c.b1.is_zero());
    }

    #[test]
    fn z11_binding() {
        let c = correspondence_substitution(&BaseCoords::symbolic()).unwrap();
        let a = vars::fibre();
        let expected = &(&var(a, "x2_11") + &(&var(a, "zeta3") * &var(a, "x1_21")))
            - &(&var(a, "zeta2") * &var(a, "x1_31"));
        assert_eq!(c.bindings().get("z11").unwrap(), &expected);
    }

    #[test]
    fn z0_binding_linear_and_quadratic_parts() {
        let c = correspondence_substitution(&BaseCoords::symbolic()).unwrap();
        let z0 = c.bindings().get("z0").unwrap().clone();
        let a = vars::fibre();
        // ζ-free part
        let flat = z0
            .laurent_coefficient_by_name(&["zeta1", "zeta2", "zeta3"], &[0, 0, 0])
            .unwrap();
        let mut expected = var(a, "x12");
        for i in 0..3 {
            let t = &(&var(a, vars::X2[i][0]) * &var(a, vars::X1[i][1]))
                - &(&var(a, vars::X1[i][0]) * &var(a, vars::X2[i][1]));
            expected = &expected + &t.scale(&rat(1, 2));
        }
        assert_eq!(flat, expected);
    }

    #[test]
    fn b0_is_antisymmetric_only_with_x1_zeta_x1() {
        let x = BaseCoords::symbolic();
        let good = correspondence_with(&x, B0Convention::Antisymmetric).unwrap();
        assert!(good.b0.add(&good.b0.transpose()).unwrap().is_zero());
        let bad = correspondence_with(&x, B0Convention::MixedProduct).unwrap();
        assert!(!bad.b0.add(&bad.b0.transpose()).unwrap().is_zero());
    }
}

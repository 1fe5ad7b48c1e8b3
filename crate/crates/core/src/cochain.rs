//! Čech 3-cochain representatives of O_λ on the chart W₀, their weights and
//! the g₀-action.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;
use rayon::prelude::*;
use thiserror::Error;

use crate::charts::{basis, TwistorCoords};
use crate::exactalg::{
    exact_nullspace, int, rat, AlgebraError, Exponents, LaurentPoly, RatMatrix, Rational,
};
use crate::repn::IrrepLabel;
use crate::transform::{penrose_transform, SpinorField};
use crate::vars::{self, var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CochainError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected a single monomial, got {0} terms")]
    NotMonomial(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("highest weight system for {label} is inconsistent: {diagnostic}")]
    Inconsistent { label: String, diagnostic: String },
    #[error("highest weight system for {label} has a {dim}-dimensional solution space")]
    NotUnique { label: String, dim: usize },
    #[error("unknown root {0}")]
    UnknownRoot(String),
}

/// A finite Laurent-polynomial section on the 4-fold intersection, in the
/// trivialisation of the chart W₀.
#[derive(Clone, PartialEq, Eq)]
pub struct CochainSection {
    body: LaurentPoly,
}

impl CochainSection {
    pub fn new(body: LaurentPoly) -> Result<CochainSection, AlgebraError> {
        Ok(CochainSection {
            body: body.relabel(vars::section())?,
        })
    }

    pub fn zero() -> CochainSection {
        CochainSection {
            body: LaurentPoly::zero(vars::section()),
        }
    }

    pub fn monomial(
        powers: &[(&str, i32)],
        coeff: Rational,
    ) -> Result<CochainSection, AlgebraError> {
        Ok(CochainSection {
            body: LaurentPoly::monomial(vars::section(), powers, coeff)?,
        })
    }

    /// `z0^s0 Π z_ij^s_ij / ζ^r` with coefficient 1.
    pub fn from_params(p: &MonomialParams) -> Result<CochainSection, AlgebraError> {
        let mut powers = vec![("z0", p.s0)];
        for i in 0..3 {
            for j in 0..2 {
                powers.push((vars::ZIJ[i][j], p.s[i][j]));
            }
        }
        for k in 0..3 {
            powers.push((vars::ZETA[k], -p.r[k]));
        }
        Self::monomial(&powers, int(1))
    }

    pub fn body(&self) -> &LaurentPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> CochainSection {
        CochainSection {
            body: self.body.scale(c),
        }
    }

    pub fn add(&self, other: &CochainSection) -> CochainSection {
        CochainSection {
            body: &self.body + &other.body,
        }
    }

    pub fn sub(&self, other: &CochainSection) -> CochainSection {
        CochainSection {
            body: &self.body - &other.body,
        }
    }

    pub fn mul(&self, other: &CochainSection) -> CochainSection {
        CochainSection {
            body: &self.body * &other.body,
        }
    }

    /// Splits into monomials with their coefficients.
    pub fn monomials(&self) -> Vec<(CochainSection, Rational)> {
        self.body
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let m =
                    LaurentPoly::from_terms(vars::section(), [(e, int(1))]).expect("valid term");
                (CochainSection { body: m }, c)
            })
            .collect()
    }

    /// Parameters of a monomial (coefficient ignored).
    pub fn params(&self) -> Result<MonomialParams, CochainError> {
        let (e, _) = self
            .body
            .as_monomial()
            .ok_or(CochainError::NotMonomial(self.body.num_terms()))?;
        Ok(MonomialParams::from_exponents(e))
    }
}

impl fmt::Display for CochainSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt(f)
    }
}

impl fmt::Debug for CochainSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CochainSection({})", self.body)
    }
}

/// `(s0, s_ij, r_k)` of `z0^s0 Π z_ij^s_ij ζ1^-r1 ζ2^-r2 ζ3^-r3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialParams {
    pub s0: i32,
    pub s: [[i32; 2]; 3],
    pub r: [i32; 3],
}

struct SectionIndex {
    z0: usize,
    z: [[usize; 2]; 3],
    zeta: [usize; 3],
}

static IDX: Lazy<SectionIndex> = Lazy::new(|| {
    let a = vars::section();
    SectionIndex {
        z0: a.index_of("z0").unwrap(),
        z: vars::ZIJ.map(|row| row.map(|n| a.index_of(n).unwrap())),
        zeta: vars::ZETA.map(|n| a.index_of(n).unwrap()),
    }
});

impl MonomialParams {
    pub fn from_exponents(e: &Exponents) -> MonomialParams {
        MonomialParams {
            s0: e.get(IDX.z0),
            s: IDX.z.map(|row| row.map(|v| e.get(v))),
            r: IDX.zeta.map(|v| -e.get(v)),
        }
    }

    /// Column sums `c_j`.
    pub fn c(&self) -> [i32; 2] {
        [0, 1].map(|j| (0..3).map(|i| self.s[i][j]).sum())
    }

    /// Row sums `s_i`.
    pub fn rows(&self) -> [i32; 3] {
        self.s.map(|row| row[0] + row[1])
    }

    pub fn s_total(&self) -> i32 {
        self.rows().iter().sum()
    }

    pub fn r_total(&self) -> i32 {
        self.r.iter().sum()
    }
}

/// A gl(2) ⊕ gl(4) weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub gl2: [Rational; 2],
    pub gl4: [i64; 4],
}

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.gl2[0] >= self.gl2[1] && self.gl4.windows(2).all(|w| w[0] >= w[1])
    }

    /// The sl(4) part normalised by subtracting the last entry.
    pub fn sl4_normalized(&self) -> [i64; 4] {
        self.gl4.map(|x| x - self.gl4[3])
    }

    /// Equality with gl4 taken modulo (1,1,1,1).
    pub fn equivalent(&self, other: &Weight) -> bool {
        self.gl2 == other.gl2 && self.sl4_normalized() == other.sl4_normalized()
    }

    /// Value on a Cartan element.
    pub fn eval(&self, h: &CartanElement) -> Rational {
        let a: Rational = self.gl2.iter().zip(&h.gl2).map(|(w, x)| w * x).sum();
        let b: Rational = self.gl4.iter().zip(&h.gl4).map(|(w, x)| int(*w) * x).sum();
        a + b
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) + ({}, {}, {}, {})",
            self.gl2[0], self.gl2[1], self.gl4[0], self.gl4[1], self.gl4[2], self.gl4[3]
        )
    }
}

pub fn weight_of_params(p: &MonomialParams) -> Weight {
    let c = p.c();
    let rows = p.rows();
    let half5 = rat(5, 2);
    Weight {
        gl2: c.map(|cj| int((cj + p.s0) as i64) + &half5),
        gl4: [
            (5 + p.s_total() - p.r_total()) as i64,
            (p.r[0] + rows[0]) as i64,
            (p.r[1] + rows[1]) as i64,
            (p.r[2] + rows[2]) as i64,
        ],
    }
}

pub fn weight_of_monomial(f: &CochainSection) -> Result<Weight, CochainError> {
    Ok(weight_of_params(&f.params()?))
}

/// Root vectors of g₀ = gl(2) ⊕ sl(4) acting on cochains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootLabel {
    A12,
    E12,
    E21,
    E23,
    E32,
    E34,
    E43,
}

impl RootLabel {
    pub const ALL: [RootLabel; 7] = [
        RootLabel::A12,
        RootLabel::E12,
        RootLabel::E21,
        RootLabel::E23,
        RootLabel::E32,
        RootLabel::E34,
        RootLabel::E43,
    ];

    pub const POSITIVE_SIMPLE: [RootLabel; 4] = [
        RootLabel::A12,
        RootLabel::E12,
        RootLabel::E23,
        RootLabel::E34,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RootLabel::A12 => "A12",
            RootLabel::E12 => "E12",
            RootLabel::E21 => "E21",
            RootLabel::E23 => "E23",
            RootLabel::E32 => "E32",
            RootLabel::E34 => "E34",
            RootLabel::E43 => "E43",
        }
    }

    /// Weight shift `(gl2 shift, gl4 shift)`; gl4 up to (1,1,1,1).
    pub fn root_vector(self) -> ([i64; 2], [i64; 4]) {
        match self {
            RootLabel::A12 => ([1, -1], [0; 4]),
            RootLabel::E12 => ([0, 0], [1, -1, 0, 0]),
            RootLabel::E21 => ([0, 0], [-1, 1, 0, 0]),
            RootLabel::E23 => ([0, 0], [0, 1, -1, 0]),
            RootLabel::E32 => ([0, 0], [0, -1, 1, 0]),
            RootLabel::E34 => ([0, 0], [0, 0, 1, -1]),
            RootLabel::E43 => ([0, 0], [0, 0, -1, 1]),
        }
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootLabel {
    type Err = CochainError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RootLabel::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| CochainError::UnknownRoot(s.to_string()))
    }
}

/// Image of a coordinate under a root vector; `None` means zero.
fn table_image(root: RootLabel, name: &str) -> Option<LaurentPoly> {
    let a = vars::section();
    let v = |n: &str| var(a, n);
    let col = |n: &str| n.as_bytes()[2] - b'1';
    let z = |i: usize, j: u8| v(vars::ZIJ[i][j as usize]);
    match (root, name) {
        (RootLabel::A12, "z12" | "z22" | "z32") => {
            let i = (name.as_bytes()[1] - b'1') as usize;
            Some(z(i, 0))
        }
        (RootLabel::E34, "zeta2") => Some(-v("zeta3")),
        (RootLabel::E34, "z31" | "z32") => Some(z(1, col(name))),
        (RootLabel::E23, "zeta1") => Some(-v("zeta2")),
        (RootLabel::E23, "z21" | "z22") => Some(z(0, col(name))),
        (RootLabel::E43, "zeta3") => Some(-v("zeta2")),
        (RootLabel::E43, "z21" | "z22") => Some(z(2, col(name))),
        (RootLabel::E32, "zeta2") => Some(-v("zeta1")),
        (RootLabel::E32, "z11" | "z12") => Some(z(1, col(name))),
        (RootLabel::E21, "zeta1") => Some(LaurentPoly::one(a)),
        (RootLabel::E12, "z11" | "z12") => {
            let j = col(name);
            Some(-(&v("zeta2") * &z(1, j)) - &v("zeta3") * &z(2, j))
        }
        (RootLabel::E12, "z0") => Some(&z(1, 1) * &z(2, 0) - &z(1, 0) * &z(2, 1)),
        // ζ1 follows the same projective rule as ζ2, ζ3
        (RootLabel::E12, "zeta1" | "zeta2" | "zeta3" | "z21" | "z22" | "z31" | "z32") => {
            Some(&v(name) * &v("zeta1"))
        }
        _ => None,
    }
}

/// The derivation of a root vector on a cochain, including the `5ζ1 f` term
/// for E12.
pub fn g0_action(root: RootLabel, f: &CochainSection) -> CochainSection {
    let a = vars::section();
    let mut out = LaurentPoly::zero(a);
    for (idx, name) in a.names().enumerate() {
        if let Some(image) = table_image(root, name) {
            let d = f.body.derivative(idx);
            if !d.is_zero() {
                out = &out + &(&image * &d);
            }
        }
    }
    if root == RootLabel::E12 {
        out = &out + &(&var(a, "zeta1") * &f.body).scale(&int(5));
    }
    CochainSection { body: out }
}

/// Applies `root` `times` times.
pub fn g0_power(root: RootLabel, times: u32, f: &CochainSection) -> CochainSection {
    (0..times).fold(f.clone(), |g, _| g0_action(root, &g))
}

/// A diagonal element of gl(2) ⊕ sl(4).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanElement {
    pub gl2: [Rational; 2],
    pub gl4: [Rational; 4],
}

impl CartanElement {
    pub fn new(gl2: [Rational; 2], gl4: [Rational; 4]) -> Result<CartanElement, CochainError> {
        let tr: Rational = gl4.iter().sum();
        if tr != Rational::from_integer(0.into()) {
            return Err(CochainError::Precondition(format!(
                "sl4 part has trace {tr}"
            )));
        }
        Ok(CartanElement { gl2, gl4 })
    }
}

/// Image of a 4×4 matrix under gl(4) → so(6) on `⟨e3, e4, e5, ē3, ē4, ē5⟩`.
pub fn sl4_to_so6(m: &[[Rational; 4]; 4]) -> [[Rational; 6]; 6] {
    let z = || Rational::from_integer(0.into());
    let mut o: [[Rational; 6]; 6] = std::array::from_fn(|_| std::array::from_fn(|_| z()));
    let a = |i: usize| m[i][i].clone();
    let e = |i: usize, j: usize| m[i][j].clone();
    for k in 0..3 {
        o[k][k] = a(0) + a(k + 1);
        o[k + 3][k + 3] = -(a(0) + a(k + 1));
    }
    o[0][1] = e(1, 2);
    o[1][0] = e(2, 1);
    o[1][2] = e(2, 3);
    o[2][1] = e(3, 2);
    o[1][5] = e(0, 1);
    o[2][4] = -e(0, 1);
    o[3][4] = -e(2, 1);
    o[4][2] = -e(1, 0);
    o[4][3] = -e(1, 2);
    o[4][5] = -e(3, 2);
    o[5][1] = e(1, 0);
    o[5][4] = -e(2, 3);
    o
}

/// Diagonal of a Cartan element acting on C¹⁰ in the ordered basis.
fn cartan_diagonal(h: &CartanElement) -> [Rational; 10] {
    let mut m: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| int(0)));
    for i in 0..4 {
        m[i][i] = h.gl4[i].clone();
    }
    let o = sl4_to_so6(&m);
    let mut d: [Rational; 10] = std::array::from_fn(|_| int(0));
    for i in 0..2 {
        d[basis::E[i]] = h.gl2[i].clone();
        d[basis::EBAR[i]] = -h.gl2[i].clone();
    }
    for k in 0..3 {
        d[basis::E[k + 2]] = o[k][k].clone();
        d[basis::EBAR[k + 2]] = o[k + 3][k + 3].clone();
    }
    d
}

/// For each chart coordinate, a `(row, col)` position where it sits in the
/// 10×5 chart matrix.
static POSITIONS: Lazy<Vec<(usize, usize, usize)>> = Lazy::new(|| {
    let g = TwistorCoords::symbolic()
        .plane_matrix()
        .expect("chart matrix");
    let a = vars::section();
    let mut out = Vec::new();
    for v in 0..a.len() {
        'search: for r in 5..10 {
            for c in 0..5 {
                if let Some((e, _)) = g.get(r, c).as_monomial() {
                    if e.total_degree() == 1 && e.get(v) == 1 {
                        out.push((v, r, c));
                        break 'search;
                    }
                }
            }
        }
    }
    out
});

/// Action of a Cartan element: each coordinate at `(row, col)` of the chart
/// matrix scales by `d_col − d_row`, and the character of C_λ contributes
/// `5/2` times the trace over `e1..e5`.
pub fn cartan_action(h: &CartanElement, f: &CochainSection) -> CochainSection {
    let d = cartan_diagonal(h);
    let constant: Rational = basis::E.iter().map(|&i| d[i].clone()).sum::<Rational>() * rat(5, 2);
    let weights: Vec<(usize, Rational)> = POSITIONS
        .iter()
        .map(|&(v, r, c)| (v, &d[c] - &d[r]))
        .collect();
    let terms = f.body.terms().map(|(e, c)| {
        let mut w = constant.clone();
        for (v, x) in &weights {
            w += x * int(e.get(*v) as i64);
        }
        (*e, c * w)
    });
    CochainSection {
        body: LaurentPoly::from_terms(vars::section(), terms.collect::<Vec<_>>())
            .expect("same support"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialityCertificate {
    TrivialNegativePole,
    TrivialExtends,
    Inconclusive,
}

/// The two syntactic vanishing conditions, applied literally. Advisory only:
/// `class_is_zero` is authoritative.
pub fn triviality_certificate(f: &CochainSection) -> Result<TrivialityCertificate, CochainError> {
    let p = f.params()?;
    if p.r.iter().any(|&r| r < 0) {
        Ok(TrivialityCertificate::TrivialNegativePole)
    } else if 5 + p.s0 + p.s_total() > p.r_total() {
        Ok(TrivialityCertificate::TrivialExtends)
    } else {
        Ok(TrivialityCertificate::Inconclusive)
    }
}

pub fn class_is_zero(f: &CochainSection) -> bool {
    penrose_transform(f).is_zero()
}

pub fn hwv_test(f: &CochainSection) -> bool {
    !class_is_zero(f)
        && RootLabel::POSITIVE_SIMPLE
            .par_iter()
            .all(|&e| class_is_zero(&g0_action(e, f)))
}

/// Leading term `z0^l (z11 z22 − z12 z21)^a z11^b / (ζ1ζ2ζ3)`.
pub fn leading_section(label: &IrrepLabel) -> CochainSection {
    let a = vars::section();
    let det = &var(a, "z11") * &var(a, "z22") - &var(a, "z12") * &var(a, "z21");
    let poles = LaurentPoly::monomial(a, &[("zeta1", -1), ("zeta2", -1), ("zeta3", -1)], int(1))
        .expect("section alphabet");
    let body = var(a, "z0").pow(label.l) * det.pow(label.a) * var(a, "z11").pow(label.b) * poles;
    CochainSection { body }
}

fn compositions3(n: i32) -> Vec<[i32; 3]> {
    let mut out = Vec::new();
    for x in (0..=n).rev() {
        for y in (0..=n - x).rev() {
            out.push([x, y, n - x - y]);
        }
    }
    out
}

/// Monomials with z0-degree below `l` whose weight agrees with `target`
/// (gl4 modulo (1,1,1,1)) and whose pole orders are all positive.
pub fn hwv_candidates(target: &Weight, l: i32) -> Vec<MonomialParams> {
    let k: [i64; 3] = [1, 2, 3].map(|i| target.gl4[i] - target.gl4[0]);
    let mut out = Vec::new();
    for t in (0..l).rev() {
        let c: Vec<Rational> = target
            .gl2
            .iter()
            .map(|w| w - rat(5, 2) - int(t as i64))
            .collect();
        if c.iter().any(|x| !x.is_integer() || x < &int(0)) {
            continue;
        }
        let c: Vec<i32> = c
            .iter()
            .map(|x| x.to_integer().try_into().expect("small"))
            .collect();
        for col0 in compositions3(c[0]) {
            for col1 in compositions3(c[1]) {
                let s = [[col0[0], col1[0]], [col0[1], col1[1]], [col0[2], col1[2]]];
                let stot: i64 = (c[0] + c[1]) as i64;
                let four_r = k.iter().sum::<i64>() + 2 * stot + 15;
                if four_r % 4 != 0 {
                    continue;
                }
                let r_tot = four_r / 4;
                let r: Vec<i64> = (0..3)
                    .map(|i| k[i] - (s[i][0] + s[i][1]) as i64 + 5 + stot - r_tot)
                    .collect();
                if r.iter().any(|&x| x < 1) {
                    continue;
                }
                let p = MonomialParams {
                    s0: t,
                    s,
                    r: [r[0] as i32, r[1] as i32, r[2] as i32],
                };
                debug_assert!(weight_of_params(&p).equivalent(target));
                out.push(p);
            }
        }
    }
    out
}

/// Stacks spinor fields (one block per entry) into columns of a matrix.
fn stacked_columns(columns: &[Vec<SpinorField>]) -> RatMatrix {
    let mut rows: BTreeMap<(usize, usize, Exponents), usize> = BTreeMap::new();
    for col in columns {
        for (b, s) in col.iter().enumerate() {
            for (m, c) in s.components().iter().enumerate() {
                for (e, _) in c.terms() {
                    let n = rows.len();
                    rows.entry((b, m, *e)).or_insert(n);
                }
            }
        }
    }
    let mut mat = RatMatrix::zeros(rows.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (b, s) in col.iter().enumerate() {
            for (m, c) in s.components().iter().enumerate() {
                for (e, v) in c.terms() {
                    mat.set(rows[&(b, m, *e)], j, v.clone());
                }
            }
        }
    }
    mat
}

/// The highest weight vector with leading term
/// `z0^l (z11 z22 − z12 z21)^a z11^b / (ζ1ζ2ζ3)`, completed by lower powers of
/// `z0` so that every positive simple root sends it to a trivial class.
///
/// Candidates whose transforms depend on earlier candidates are dropped, so
/// the returned representative is canonical for the fixed candidate order.
pub fn hwv_complete(label: &IrrepLabel) -> Result<CochainSection, CochainError> {
    let lead = leading_section(label);
    let target = weight_of_monomial(&lead.monomials()[0].0)?;
    let mut kept: Vec<(CochainSection, SpinorField)> = Vec::new();
    for p in hwv_candidates(&target, label.l as i32) {
        let m = CochainSection::from_params(&p)?;
        let image = penrose_transform(&m);
        if image.is_zero() {
            continue;
        }
        let mut cols: Vec<Vec<SpinorField>> = kept.iter().map(|(_, s)| vec![s.clone()]).collect();
        cols.push(vec![image.clone()]);
        if exact_nullspace(&stacked_columns(&cols)).is_empty() {
            kept.push((m, image));
        }
    }
    let raised = |f: &CochainSection| -> Vec<SpinorField> {
        RootLabel::POSITIVE_SIMPLE
            .iter()
            .map(|&e| penrose_transform(&g0_action(e, f)))
            .collect()
    };
    let mut columns: Vec<Vec<SpinorField>> = kept.par_iter().map(|(m, _)| raised(m)).collect();
    columns.push(raised(&lead));
    let n = kept.len();
    let null = exact_nullspace(&stacked_columns(&columns));
    let name = label.to_string();
    let particular =
        null.iter()
            .find(|v| v[n] != int(0))
            .ok_or_else(|| CochainError::Inconsistent {
                label: name.clone(),
                diagnostic: format!("{} candidates, leading term cannot be completed", n),
            })?;
    if null.len() > 1 {
        return Err(CochainError::NotUnique {
            label: name,
            dim: null.len() - 1,
        });
    }
    let mut f = lead;
    for ((m, _), c) in kept.iter().zip(particular) {
        if *c != int(0) {
            f = f.add(&m.scale(&(c / &particular[n])));
        }
    }
    if !hwv_test(&f) {
        return Err(CochainError::Inconsistent {
            label: name,
            diagnostic: "completed section fails the highest weight test".into(),
        });
    }
    Ok(f)
}

/// Coefficients of the leading monomials along the raising chain
/// `E12^(r−3) E23^(r2+r3−2) E34^(r3−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaisingChain {
    pub result: CochainSection,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

fn check_chain_input(f: &CochainSection) -> Result<MonomialParams, CochainError> {
    let p = f.params()?;
    if p.s0 != 0 {
        return Err(CochainError::Precondition(format!(
            "s0 = {} must be 0",
            p.s0
        )));
    }
    if p.r.iter().any(|&r| r < 1) {
        return Err(CochainError::Precondition(format!(
            "pole orders {:?} must be ≥ 1",
            p.r
        )));
    }
    let w = weight_of_params(&p);
    if !w.is_dominant() {
        return Err(CochainError::Precondition(format!(
            "weight {w} is not dominant"
        )));
    }
    Ok(p)
}

fn coefficient_at(f: &CochainSection, p: &MonomialParams) -> Rational {
    let m = CochainSection::from_params(p).expect("valid params");
    let (e, _) = m.body.as_monomial().expect("monomial");
    f.body.coefficient_of(e)
}

pub fn raising_chain(f: &CochainSection) -> Result<RaisingChain, CochainError> {
    let p = check_chain_input(f)?;
    let (_, c0) = f.body.as_monomial().expect("checked");
    let c0 = c0.clone();
    let [r1, r2, r3] = p.r;
    let g1 = g0_power(RootLabel::E34, (r3 - 1) as u32, f);
    let a = coefficient_at(
        &g1,
        &MonomialParams {
            r: [r1, r2 + r3 - 1, 1],
            ..p
        },
    ) / &c0;
    let g2 = g0_power(RootLabel::E23, (r2 + r3 - 2) as u32, &g1);
    let b = coefficient_at(
        &g2,
        &MonomialParams {
            r: [r1 + r2 + r3 - 2, 1, 1],
            ..p
        },
    ) / &c0;
    let g3 = g0_power(RootLabel::E12, (r1 + r2 + r3 - 3) as u32, &g2);
    let c = coefficient_at(&g3, &MonomialParams { r: [1, 1, 1], ..p }) / &c0;
    if c == int(0) {
        return Err(CochainError::Precondition(
            "chain coefficient C vanished".into(),
        ));
    }
    Ok(RaisingChain {
        result: g3,
        a,
        b,
        c,
    })
}

/// Rising product `x (x+1) … (y)`; empty (= 1) when `y < x`.
fn rising(x: i64, y: i64) -> Rational {
    (x..=y).fold(int(1), |acc, k| acc * int(k))
}

/// Closed forms for the leading coefficients of `raising_chain`:
/// `A = (−1)^(r3−1) r2…(r2+r3−2)`,
/// `B = (−1)^(r2+r3−2) r1…(r−3) A`,
/// `C = A B (s2+s3+5−r)…(s2+s3+1)`.
pub fn chain_closed_forms(p: &MonomialParams) -> (Rational, Rational, Rational) {
    let [r1, r2, r3] = p.r.map(|x| x as i64);
    let r = r1 + r2 + r3;
    let rows = p.rows();
    let s23 = (rows[1] + rows[2]) as i64;
    let sign = |k: i64| if k % 2 == 0 { int(1) } else { int(-1) };
    let a = sign(r3 - 1) * rising(r2, r2 + r3 - 2);
    let b = sign(r2 + r3 - 2) * rising(r1, r - 3) * &a;
    let c = &a * &b * rising(s23 + 5 - r, s23 + 1);
    (a, b, c)
}

//! The fixed variable alphabets used throughout the crate.
//!
//! * `section`: twistor chart coordinates on W₀ (`z0`, `zIJ`, `zetaK`).
//! * `spinor`: coordinates on the base U (`x12`, `x1_IJ`, `x2_IJ`).
//! * `fibre`: base coordinates plus the fibre coordinates `zetaK`; the
//!   correspondence substitution lands here.
//! * `chart1`: coordinates on W₁ (`w0`, `wIJ`, `rhoK`).
//! * `cp3`: affine coordinates of both CP³ charts (`zetaK`, `rhoK`).

use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::exactalg::{Alphabet, LaurentPoly};

pub const ZIJ: [[&str; 2]; 3] = [["z11", "z12"], ["z21", "z22"], ["z31", "z32"]];
pub const WIJ: [[&str; 2]; 3] = [["w11", "w12"], ["w21", "w22"], ["w31", "w32"]];
pub const ZETA: [&str; 3] = ["zeta1", "zeta2", "zeta3"];
pub const RHO: [&str; 3] = ["rho1", "rho2", "rho3"];
pub const X1: [[&str; 2]; 3] = [["x1_11", "x1_12"], ["x1_21", "x1_22"], ["x1_31", "x1_32"]];
pub const X2: [[&str; 2]; 3] = [["x2_11", "x2_12"], ["x2_21", "x2_22"], ["x2_31", "x2_32"]];
pub const X12: &str = "x12";

fn flat<'a>(grid: &'a [[&'static str; 2]; 3]) -> impl Iterator<Item = &'static str> + 'a {
    grid.iter().flat_map(|r| r.iter().copied())
}

static SECTION: Lazy<Arc<Alphabet>> = Lazy::new(|| {
    let mut v: Vec<(&str, bool)> = vec![("z0", false)];
    v.extend(flat(&ZIJ).map(|n| (n, false)));
    v.extend(ZETA.iter().map(|&n| (n, true)));
    Alphabet::new("section", &v)
});

fn spinor_vars() -> Vec<(&'static str, bool)> {
    let mut v: Vec<(&str, bool)> = vec![(X12, false)];
    v.extend(flat(&X1).map(|n| (n, false)));
    v.extend(flat(&X2).map(|n| (n, false)));
    v
}

static SPINOR: Lazy<Arc<Alphabet>> = Lazy::new(|| Alphabet::new("spinor", &spinor_vars()));

static FIBRE: Lazy<Arc<Alphabet>> = Lazy::new(|| {
    let mut v = spinor_vars();
    v.extend(ZETA.iter().map(|&n| (n, true)));
    Alphabet::new("fibre", &v)
});

static CHART1: Lazy<Arc<Alphabet>> = Lazy::new(|| {
    let mut v: Vec<(&str, bool)> = vec![("w0", false)];
    v.extend(flat(&WIJ).map(|n| (n, false)));
    v.extend(RHO.iter().map(|&n| (n, true)));
    Alphabet::new("chart1", &v)
});

static CP3: Lazy<Arc<Alphabet>> = Lazy::new(|| {
    let v: Vec<(&str, bool)> = ZETA.iter().chain(RHO.iter()).map(|&n| (n, true)).collect();
    Alphabet::new("cp3", &v)
});

pub fn section() -> &'static Arc<Alphabet> {
    &SECTION
}

pub fn spinor() -> &'static Arc<Alphabet> {
    &SPINOR
}

pub fn fibre() -> &'static Arc<Alphabet> {
    &FIBRE
}

pub fn chart1() -> &'static Arc<Alphabet> {
    &CHART1
}

pub fn cp3() -> &'static Arc<Alphabet> {
    &CP3
}

/// Shorthand for a variable that is known to exist.
pub fn var(alphabet: &Arc<Alphabet>, name: &str) -> LaurentPoly {
    LaurentPoly::var(alphabet, name).unwrap_or_else(|e| panic!("{e}"))
}

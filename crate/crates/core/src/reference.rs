//! Highest weight vectors of the three degree-two summands together with
//! their stated monogenic spinors, as fixed reference data.

use crate::cochain::CochainSection;
use crate::interface::{parse_poly, Context};
use crate::repn::IrrepLabel;
use crate::transform::SpinorField;

#[derive(Clone, Debug)]
pub struct Generator {
    pub label: IrrepLabel,
    pub dimension: u64,
    pub section: CochainSection,
    pub spinor: SpinorField,
}

fn section(text: &str) -> CochainSection {
    CochainSection::new(parse_poly(text, Context::Section).expect("reference section"))
        .expect("section")
}

fn spinor(parts: [&str; 4]) -> SpinorField {
    SpinorField::new(parts.map(|t| parse_poly(t, Context::Spinor).expect("reference spinor")))
        .expect("spinor")
}

pub const POLES: &str = "zeta1^-1*zeta2^-1*zeta3^-1";

pub fn degree_two_generators() -> Vec<Generator> {
    vec![
        Generator {
            label: IrrepLabel::new(0, 2, 0),
            dimension: 180,
            section: section(&format!("z11^2*{POLES}")),
            spinor: spinor(["x2_11^2", "0", "0", "0"]),
        },
        Generator {
            label: IrrepLabel::new(1, 0, 0),
            dimension: 36,
            section: section(&format!("z11*z22*{POLES} - z12*z21*{POLES}")),
            spinor: spinor(["x2_11*x2_22 - x2_21*x2_12", "0", "0", "0"]),
        },
        Generator {
            label: IrrepLabel::new(0, 0, 1),
            dimension: 4,
            section: section(
                "z0*zeta1^-1*zeta2^-1*zeta3^-1 \
                 - z22*z31*zeta1^-2*zeta2^-1*zeta3^-1 + z21*z32*zeta1^-2*zeta2^-1*zeta3^-1 \
                 - z11*z32*zeta1^-1*zeta2^-2*zeta3^-1 + z12*z31*zeta1^-1*zeta2^-2*zeta3^-1 \
                 - z12*z21*zeta1^-1*zeta2^-1*zeta3^-2 + z11*z22*zeta1^-1*zeta2^-1*zeta3^-2",
            ),
            spinor: spinor([
                "3*x12 + 1/2*x1_11*x2_12 - 1/2*x2_11*x1_12 + 1/2*x1_21*x2_22 - 1/2*x2_21*x1_22 \
                 + 1/2*x1_31*x2_32 - 1/2*x2_31*x1_32",
                "x2_21*x2_32 - x2_31*x2_22",
                "x2_31*x2_12 - x2_11*x2_32",
                "x2_11*x2_22 - x2_21*x2_12",
            ]),
        },
    ]
}

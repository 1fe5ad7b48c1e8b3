use std::time::Instant;

use penrose_core::dirac::{build_dirac, graded_kernel_dim, graded_monomials};
use penrose_core::exactalg::int;
use penrose_core::repn::decompose_mk;

#[test]
fn kernel_matches_weyl_total_through_degree_five() {
    let op = build_dirac(1, &int(1));
    for k in 0..=5 {
        let t = Instant::now();
        let dim = graded_kernel_dim(&op, k);
        let total: u64 = decompose_mk(k).iter().map(|(_, m)| m.dimension).sum();
        println!(
            "k={k}: {} monomials, kernel {dim}, Weyl {total}, {:.1?}",
            graded_monomials(k).len(),
            t.elapsed()
        );
        assert_eq!(dim as u64, total, "degree {k}");
    }
}

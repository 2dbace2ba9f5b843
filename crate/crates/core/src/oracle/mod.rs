//! Independent recomputation of Hom and Ext dimensions from explicit quiver
//! representations.
//!
//! Everything here works with matrices over the rationals: Hom spaces are
//! solution spaces of the intertwiner equations, syzygies are kernels of
//! projective covers, and Ext groups are cohomology of `Hom(P_•, M)` with ranks
//! from exact elimination. None of it reuses the closed-form counting in
//! [`crate::homext`], which is the point.

pub mod matrix;
pub mod rep;
pub mod resolution;

pub use matrix::{Matrix, Q};
pub use rep::{hom_basis, identify_uniserial, rep_of, LinearMap, MatrixRep};
pub use resolution::{cover, ProjectiveSum, Resolution};

use crate::kupisch::KupischSeries;
use crate::modrep::{Dimension, Indecomposable};

/// `dim Hom(N, M)` from the intertwiner equations.
pub fn hom_dim_oracle(a: &KupischSeries, n: Indecomposable, m: Indecomposable) -> usize {
    hom_basis(a, &rep_of(a, n), &rep_of(a, m)).len()
}

/// `dim Ext^l(N, M)` from an explicitly computed resolution.
pub fn ext_dim_oracle(a: &KupischSeries, n: Indecomposable, m: Indecomposable, l: usize) -> usize {
    ext_dims_oracle(a, n, m, l)[l]
}

/// `dim Ext^l(N, M)` for `0 <= l <= max_degree`.
pub fn ext_dims_oracle(
    a: &KupischSeries,
    n: Indecomposable,
    m: Indecomposable,
    max_degree: usize,
) -> Vec<usize> {
    let res = Resolution::compute(a, &rep_of(a, n), max_degree + 2);
    let target = rep_of(a, m);
    (0..=max_degree).map(|l| res.ext_dim(a, &target, l)).collect()
}

/// Syzygy computed as the kernel of a projective cover, identified back as a
/// uniserial module. `None` for projectives.
pub fn syzygy_oracle(a: &KupischSeries, m: Indecomposable) -> Option<Indecomposable> {
    let step = cover(a, &rep_of(a, m));
    if step.kernel.total_dim() == 0 {
        return None;
    }
    Some(identify_uniserial(a, &step.kernel).expect("syzygy of a uniserial is uniserial"))
}

/// Projective dimension by resolving up to `cap` terms; reports infinity if
/// the resolution is still going.
pub fn projective_dimension_oracle(a: &KupischSeries, x: &MatrixRep, cap: usize) -> Dimension {
    match Resolution::compute(a, x, cap).length {
        Some(j) => Dimension::Finite(j),
        None => Dimension::Infinite,
    }
}

/// Injective dimension through the transposed representation over the
/// opposite algebra.
pub fn injective_dimension_oracle(a: &KupischSeries, m: Indecomposable, cap: usize) -> Dimension {
    let dual = rep_of(a, m).dual(a);
    projective_dimension_oracle(&a.opposite(), &dual, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homext;
    use crate::kupisch::{enumerate, Kind};
    use crate::modrep::{self, indecomposables};

    fn cyc(c: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(c).unwrap()
    }

    fn m(i: usize, k: usize) -> Indecomposable {
        Indecomposable { i, k }
    }

    #[test]
    fn hom_oracle_examples() {
        assert_eq!(hom_dim_oracle(&cyc(&[3]), m(0, 2), m(0, 2)), 2);
        let a = cyc(&[3, 3, 3]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(hom_dim_oracle(&a, m(i, 1), m(j, 1)), usize::from(i == j));
            }
        }
    }

    #[test]
    fn ext_oracle_examples() {
        assert_eq!(ext_dim_oracle(&cyc(&[3]), m(0, 2), m(0, 2), 2), 1);
        let a = cyc(&[2, 3]);
        for x in indecomposables(&a) {
            assert_eq!(ext_dim_oracle(&a, m(1, 3), x, 1), 0);
        }
        assert_eq!(ext_dim_oracle(&a, m(1, 2), m(1, 2), 2), 0);
        assert_eq!(ext_dim_oracle(&a, m(0, 1), m(0, 1), 2), 1);
        assert_eq!(ext_dims_oracle(&cyc(&[3]), m(0, 1), m(0, 1), 6), vec![1; 7]);
    }

    #[test]
    fn syzygy_oracle_examples() {
        assert_eq!(syzygy_oracle(&cyc(&[2, 3]), m(1, 2)), Some(m(1, 1)));
        assert_eq!(syzygy_oracle(&cyc(&[3]), m(0, 2)), Some(m(0, 1)));
        assert_eq!(syzygy_oracle(&cyc(&[3]), m(0, 3)), None);
    }

    #[test]
    fn syzygy_formula_matches_kernels() {
        for a in (1..=3)
            .flat_map(|n| enumerate(Kind::Cyclic, n, 7, false))
            .chain((2..=5).flat_map(|n| enumerate(Kind::Linear, n, 5, false)))
        {
            for x in indecomposables(&a) {
                assert_eq!(syzygy_oracle(&a, x), modrep::syzygy(&a, x), "{a} {x}");
            }
        }
    }

    #[test]
    fn injective_coresolution_examples() {
        let a = cyc(&[2, 3]);
        assert_eq!(injective_dimension_oracle(&a, m(0, 1), 20), Dimension::Finite(2));
        for i in 0..2 {
            assert_eq!(
                injective_dimension_oracle(&a, Indecomposable::projective(&a, i), 20),
                modrep::injective_dimension(&a, Indecomposable::projective(&a, i))
            );
        }
        let a = cyc(&[2, 3, 3]);
        let worst = (0..3)
            .map(|i| injective_dimension_oracle(&a, Indecomposable::projective(&a, i), 40))
            .max();
        assert_eq!(worst, Some(Dimension::Infinite));
    }

    #[test]
    fn injective_dimension_matches_oracle() {
        for a in (1..=3)
            .flat_map(|n| enumerate(Kind::Cyclic, n, 5, false))
            .chain((2..=4).flat_map(|n| enumerate(Kind::Linear, n, 4, false)))
        {
            let cap = 2 * a.n() * a.loewy_length() + 2;
            for x in indecomposables(&a) {
                assert_eq!(
                    injective_dimension_oracle(&a, x, cap),
                    modrep::injective_dimension(&a, x),
                    "{a} {x}"
                );
            }
        }
    }

    #[test]
    fn hom_from_projectives_matches_cochain_terms() {
        for a in (1..=3).flat_map(|n| enumerate(Kind::Cyclic, n, 6, false)) {
            for n in indecomposables(&a) {
                for x in indecomposables(&a) {
                    let c = homext::cochains(&a, n, x, 6);
                    let orbit = modrep::SyzygyOrbit::compute(&a, n);
                    for (j, &d) in c.dims.iter().enumerate() {
                        let p = Indecomposable::projective(&a, orbit.state(j).unwrap().i);
                        assert_eq!(hom_dim_oracle(&a, p, x), d);
                    }
                }
            }
        }
    }

    #[test]
    fn hom_and_ext_match_on_small_sweep() {
        for a in (1..=2)
            .flat_map(|n| enumerate(Kind::Cyclic, n, 5, false))
            .chain((2..=4).flat_map(|n| enumerate(Kind::Linear, n, 4, false)))
        {
            for n in indecomposables(&a) {
                for x in indecomposables(&a) {
                    assert_eq!(hom_dim_oracle(&a, n, x), homext::hom_dim(&a, n, x));
                    let want = homext::ext_dims(&a, n, x, 5).dims;
                    assert_eq!(ext_dims_oracle(&a, n, x, 5), want, "{a} {n} {x}");
                }
            }
        }
    }
}

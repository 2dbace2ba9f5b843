//! Quiver representations of the bound quiver of a Nakayama algebra.

use num_traits::{One, Zero};

use super::matrix::{Matrix, Q};
use crate::kupisch::{Kind, KupischSeries};
use crate::modrep::Indecomposable;

/// A representation: a vector space per vertex and a matrix per arrow.
///
/// Arrow `v` goes from vertex `v` to vertex `v + 1` (mod `n` on a cycle); its
/// matrix has shape `dims[v + 1] x dims[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub dims: Vec<usize>,
    pub arrows: Vec<Matrix>,
}

/// Per-vertex matrices of a morphism of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub maps: Vec<Matrix>,
}

fn arrow_count(a: &KupischSeries) -> usize {
    match a.kind() {
        Kind::Cyclic => a.n(),
        Kind::Linear => a.n() - 1,
    }
}

/// Target of arrow `v`, if the arrow exists.
fn arrow_head(a: &KupischSeries, v: usize) -> Option<usize> {
    match a.kind() {
        Kind::Cyclic => Some((v + 1) % a.n()),
        Kind::Linear => (v + 1 < a.n()).then_some(v + 1),
    }
}

impl MatrixRep {
    pub fn zero(a: &KupischSeries) -> Self {
        Self {
            dims: vec![0; a.n()],
            arrows: (0..arrow_count(a))
                .map(|_| Matrix::zeros(0, 0))
                .collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Map along the path of length `len` starting at `v`, or `None` if the
    /// path leaves a linear quiver.
    pub fn path_map(&self, a: &KupischSeries, v: usize, len: usize) -> Option<Matrix> {
        let mut m = Matrix::identity(self.dims[v]);
        let mut cur = v;
        for _ in 0..len {
            let next = arrow_head(a, cur)?;
            m = &self.arrows[cur] * &m;
            cur = next;
        }
        Some(m)
    }

    /// Every path of length `c_i` starting at `i` acts as zero.
    pub fn satisfies_relations(&self, a: &KupischSeries) -> bool {
        (0..a.n()).all(|i| self.path_map(a, i, a.c(i)).map_or(true, |m| m.is_zero()))
    }

    /// Shapes of the arrow matrices agree with `dims`.
    pub fn is_well_formed(&self, a: &KupischSeries) -> bool {
        self.dims.len() == a.n()
            && self.arrows.len() == arrow_count(a)
            && self.arrows.iter().enumerate().all(|(v, m)| {
                let w = arrow_head(a, v).expect("arrow exists");
                m.rows() == self.dims[w] && m.cols() == self.dims[v]
            })
    }

    /// Dimension of the top `X_v / rad(X)_v` at every vertex.
    pub fn top_dims(&self, a: &KupischSeries) -> Vec<usize> {
        (0..a.n())
            .map(|w| self.dims[w] - self.radical_at(a, w).rank())
            .collect()
    }

    /// Columns spanning the image of the arrows into `w`.
    pub fn radical_at(&self, a: &KupischSeries, w: usize) -> Matrix {
        let incoming = (0..arrow_count(a)).find(|&v| arrow_head(a, v) == Some(w));
        match incoming {
            Some(v) => self.arrows[v].clone(),
            None => Matrix::zeros(self.dims[w], 0),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(a: &KupischSeries, parts: &[MatrixRep]) -> MatrixRep {
        let dims: Vec<usize> = (0..a.n())
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let arrows = (0..arrow_count(a))
            .map(|v| {
                let w = arrow_head(a, v).expect("arrow exists");
                let mut m = Matrix::zeros(dims[w], dims[v]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let blk = &p.arrows[v];
                    for i in 0..blk.rows() {
                        for j in 0..blk.cols() {
                            m[(r0 + i, c0 + j)] = blk[(i, j)];
                        }
                    }
                    r0 += p.dims[w];
                    c0 += p.dims[v];
                }
                m
            })
            .collect();
        MatrixRep { dims, arrows }
    }

    /// The dual representation `D(X)` over the opposite algebra, whose vertex
    /// `m` carries `X_{reflect(m)}^*`.
    pub fn dual(&self, a: &KupischSeries) -> MatrixRep {
        let dims = (0..a.n()).map(|m| self.dims[a.reflect(m)]).collect();
        // Arrow m -> m+1 of A^op reverses the arrow of A ending at reflect(m).
        let arrows = (0..arrow_count(a))
            .map(|m| {
                let w = arrow_head(a, m).expect("arrow exists");
                self.arrows[a.reflect(w)].transpose()
            })
            .collect();
        MatrixRep { dims, arrows }
    }
}

impl LinearMap {
    /// Commutes with every arrow.
    pub fn is_intertwiner(&self, a: &KupischSeries, src: &MatrixRep, dst: &MatrixRep) -> bool {
        (0..arrow_count(a)).all(|v| {
            let w = arrow_head(a, v).expect("arrow exists");
            &dst.arrows[v] * &self.maps[v] == &self.maps[w] * &src.arrows[v]
        })
    }
}

/// The uniserial module `M(i, k)` with basis the path lengths `0..k`, each at
/// vertex `i + l`, and arrows acting by the shift `l -> l + 1`.
pub fn rep_of(a: &KupischSeries, m: Indecomposable) -> MatrixRep {
    let mut dims = vec![0; a.n()];
    let mut local = Vec::with_capacity(m.k);
    for l in 0..m.k {
        let v = a.shift(m.i, l);
        local.push((v, dims[v]));
        dims[v] += 1;
    }
    let mut arrows: Vec<Matrix> = (0..arrow_count(a))
        .map(|v| Matrix::zeros(dims[arrow_head(a, v).expect("arrow exists")], dims[v]))
        .collect();
    for l in 0..m.k.saturating_sub(1) {
        let (v, from) = local[l];
        let (_, to) = local[l + 1];
        arrows[v][(to, from)] = Q::one();
    }
    let rep = MatrixRep { dims, arrows };
    debug_assert!(rep.satisfies_relations(a));
    rep
}

/// Basis of `Hom(src, dst)` as solutions of the intertwiner equations
/// `dst_arrow * f_v = f_w * src_arrow`.
pub fn hom_basis(a: &KupischSeries, src: &MatrixRep, dst: &MatrixRep) -> Vec<LinearMap> {
    // Unknown f_v[r][c] lives at offset[v] + r * src.dims[v] + c.
    let mut offset = Vec::with_capacity(a.n());
    let mut unknowns = 0;
    for v in 0..a.n() {
        offset.push(unknowns);
        unknowns += dst.dims[v] * src.dims[v];
    }
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for v in 0..arrow_count(a) {
        let w = arrow_head(a, v).expect("arrow exists");
        let (da, sa) = (&dst.arrows[v], &src.arrows[v]);
        for r in 0..dst.dims[w] {
            for c in 0..src.dims[v] {
                let mut row = vec![Q::zero(); unknowns];
                for p in 0..dst.dims[v] {
                    let x = da[(r, p)];
                    if !x.is_zero() {
                        row[offset[v] + p * src.dims[v] + c] += x;
                    }
                }
                for q in 0..src.dims[w] {
                    let x = sa[(q, c)];
                    if !x.is_zero() {
                        row[offset[w] + r * src.dims[w] + q] -= x;
                    }
                }
                eqs.push(row);
            }
        }
    }
    let system = if eqs.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        let mut m = Matrix::zeros(eqs.len(), unknowns);
        for (i, row) in eqs.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
    };
    let kernel = system.nullspace();
    (0..kernel.cols())
        .map(|b| LinearMap {
            maps: (0..a.n())
                .map(|v| {
                    let mut f = Matrix::zeros(dst.dims[v], src.dims[v]);
                    for r in 0..dst.dims[v] {
                        for c in 0..src.dims[v] {
                            f[(r, c)] = kernel[(offset[v] + r * src.dims[v] + c, b)];
                        }
                    }
                    f
                })
                .collect(),
        })
        .collect()
}

/// Recognizes a representation as a uniserial `M(i, k)`: the top must be a
/// single simple and the representation must be isomorphic to `rep_of(M(i, k))`.
pub fn identify_uniserial(a: &KupischSeries, x: &MatrixRep) -> Option<Indecomposable> {
    let tops = x.top_dims(a);
    let mut nonzero = tops.iter().enumerate().filter(|(_, &d)| d > 0);
    let (i, &d) = nonzero.next()?;
    if d != 1 || nonzero.next().is_some() {
        return None;
    }
    let m = Indecomposable::new(a, i, x.total_dim()).ok()?;
    // A top vector generates X, so X is a quotient of P_i of length k.
    let g = *x.radical_at(a, i).complement_basis().first()?;
    let mut gen = vec![Q::zero(); x.dims[i]];
    gen[g] = Q::one();
    let mut spans: Vec<Vec<Vec<Q>>> = vec![Vec::new(); a.n()];
    for l in 0..m.k {
        let path = x.path_map(a, i, l)?;
        spans[a.shift(i, l)].push(path.apply(&gen));
    }
    let generated = (0..a.n())
        .all(|v| Matrix::from_columns(x.dims[v], &spans[v]).rank() == x.dims[v]);
    generated.then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::enumerate;
    use crate::modrep::{dual, indecomposables};

    fn cyc(c: &[usize]) -> KupischSeries {
        KupischSeries::cyclic(c).unwrap()
    }

    #[test]
    fn rep_of_examples() {
        let a = cyc(&[3]);
        let r = rep_of(&a, Indecomposable { i: 0, k: 2 });
        assert_eq!(r.dims, vec![2]);
        assert_eq!(r.arrows[0], Matrix::from_rows(&[vec![0, 0], vec![1, 0]]));
        let a = cyc(&[2, 3]);
        assert_eq!(rep_of(&a, Indecomposable { i: 1, k: 2 }).dims, vec![1, 1]);
    }

    #[test]
    fn every_rep_is_well_formed_and_bound() {
        for n in 1..=3 {
            for a in enumerate(Kind::Cyclic, n, 6, false) {
                for x in indecomposables(&a) {
                    let r = rep_of(&a, x);
                    assert!(r.is_well_formed(&a));
                    assert!(r.satisfies_relations(&a));
                    assert_eq!(r.dims, crate::modrep::dimension_vector(&a, x));
                    assert_eq!(identify_uniserial(&a, &r), Some(x));
                }
            }
        }
    }

    #[test]
    fn dual_rep_is_module_over_opposite() {
        for a in (1..=3)
            .flat_map(|n| enumerate(Kind::Cyclic, n, 6, false))
            .chain((2..=4).flat_map(|n| enumerate(Kind::Linear, n, 5, false)))
        {
            let op = a.opposite();
            for x in indecomposables(&a) {
                let d = rep_of(&a, x).dual(&a);
                assert!(d.is_well_formed(&op), "{a} {x}");
                assert!(d.satisfies_relations(&op), "{a} {x}");
                assert_eq!(identify_uniserial(&op, &d), Some(dual(&a, x)), "{a} {x}");
            }
        }
    }

    #[test]
    fn hom_basis_consists_of_intertwiners() {
        let a = cyc(&[3, 4]);
        let src = rep_of(&a, Indecomposable { i: 0, k: 3 });
        let dst = rep_of(&a, Indecomposable { i: 1, k: 4 });
        let basis = hom_basis(&a, &src, &dst);
        assert!(!basis.is_empty());
        assert!(basis.iter().all(|f| f.is_intertwiner(&a, &src, &dst)));
    }

    #[test]
    fn decomposable_is_not_uniserial() {
        let a = cyc(&[2, 2]);
        let s = MatrixRep::direct_sum(
            &a,
            &[
                rep_of(&a, Indecomposable { i: 0, k: 1 }),
                rep_of(&a, Indecomposable { i: 1, k: 1 }),
            ],
        );
        assert_eq!(identify_uniserial(&a, &s), None);
    }
}

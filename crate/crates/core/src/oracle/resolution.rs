//! Minimal projective resolutions computed by linear algebra.
//!
//! Projective covers are read off the top of a representation and syzygies are
//! honest kernels, so nothing here relies on the closed-form syzygy formula.

use num_traits::{One, Zero};

use super::matrix::{Matrix, Q};
use super::rep::{rep_of, MatrixRep};
use crate::kupisch::{Kind, KupischSeries};
use crate::modrep::Indecomposable;

/// A direct sum of indecomposable projectives `⊕_r P_{vertices[r]}`.
#[derive(Debug, Clone)]
pub struct ProjectiveSum {
    pub vertices: Vec<usize>,
    pub rep: MatrixRep,
    /// For each vertex, the `(summand, path length)` label of each basis vector.
    pub labels: Vec<Vec<(usize, usize)>>,
}

impl ProjectiveSum {
    pub fn new(a: &KupischSeries, vertices: Vec<usize>) -> Self {
        let parts: Vec<MatrixRep> = vertices
            .iter()
            .map(|&v| rep_of(a, Indecomposable::projective(a, v)))
            .collect();
        let rep = MatrixRep::direct_sum(a, &parts);
        let mut labels = vec![Vec::new(); a.n()];
        for (r, &v) in vertices.iter().enumerate() {
            for l in 0..a.c(v) {
                labels[a.shift(v, l)].push((r, l));
            }
        }
        Self {
            vertices,
            rep,
            labels,
        }
    }

    /// Index, within its vertex, of the generator of summand `r`.
    fn generator_index(&self, r: usize) -> usize {
        let v = self.vertices[r];
        self.labels[v]
            .iter()
            .position(|&lab| lab == (r, 0))
            .expect("generator present")
    }
}

/// One step of a resolution: a projective cover `P -> X` and its kernel.
#[derive(Debug, Clone)]
pub struct CoverStep {
    pub cover: ProjectiveSum,
    /// Per-vertex matrices of `P -> X`.
    pub map: Vec<Matrix>,
    /// The kernel as a representation.
    pub kernel: MatrixRep,
    /// Per-vertex columns embedding the kernel into `P`.
    pub inclusion: Vec<Matrix>,
}

/// Projective cover of `x` and the kernel of the covering map.
pub fn cover(a: &KupischSeries, x: &MatrixRep) -> CoverStep {
    let mut vertices = Vec::new();
    let mut gens: Vec<Vec<Q>> = Vec::new();
    for w in 0..a.n() {
        for j in x.radical_at(a, w).complement_basis() {
            let mut g = vec![Q::zero(); x.dims[w]];
            g[j] = Q::one();
            vertices.push(w);
            gens.push(g);
        }
    }
    let cover = ProjectiveSum::new(a, vertices);
    let map: Vec<Matrix> = (0..a.n())
        .map(|v| {
            let cols: Vec<Vec<Q>> = cover.labels[v]
                .iter()
                .map(|&(r, l)| {
                    let w = cover.vertices[r];
                    let path = x.path_map(a, w, l).expect("path inside a projective");
                    path.apply(&gens[r])
                })
                .collect();
            Matrix::from_columns(x.dims[v], &cols)
        })
        .collect();
    for (v, m) in map.iter().enumerate() {
        assert_eq!(m.rank(), x.dims[v], "projective cover is not surjective at {v}");
    }
    let inclusion: Vec<Matrix> = map.iter().map(Matrix::nullspace).collect();
    let kernel_dims: Vec<usize> = inclusion.iter().map(Matrix::cols).collect();
    let arrows = (0..cover.rep.arrows.len())
        .map(|v| {
            let w = head(a, v);
            let mut m = Matrix::zeros(kernel_dims[w], kernel_dims[v]);
            for c in 0..kernel_dims[v] {
                let image = cover.rep.arrows[v].apply(&inclusion[v].column(c));
                let coords = inclusion[w]
                    .solve(&image)
                    .expect("kernel is a subrepresentation");
                for (r, y) in coords.into_iter().enumerate() {
                    m[(r, c)] = y;
                }
            }
            m
        })
        .collect();
    CoverStep {
        cover,
        map,
        kernel: MatrixRep {
            dims: kernel_dims,
            arrows,
        },
        inclusion,
    }
}

fn head(a: &KupischSeries, v: usize) -> usize {
    match a.kind() {
        Kind::Cyclic => (v + 1) % a.n(),
        Kind::Linear => v + 1,
    }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> X`, truncated at a
/// requested length.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub terms: Vec<ProjectiveSum>,
    /// `differentials[j]` is `P_{j+1} -> P_j`, per vertex.
    pub differentials: Vec<Vec<Matrix>>,
    /// `Some(j)` when `P_j` is the last nonzero term.
    pub length: Option<usize>,
}

impl Resolution {
    /// Resolves `x` through `P_{max_terms - 1}`, stopping early at a zero kernel.
    pub fn compute(a: &KupischSeries, x: &MatrixRep, max_terms: usize) -> Self {
        let mut terms = Vec::new();
        let mut differentials = Vec::new();
        let mut length = None;
        let mut current = x.clone();
        let mut prev_inclusion: Option<Vec<Matrix>> = None;
        for j in 0..max_terms {
            if current.total_dim() == 0 {
                length = j.checked_sub(1);
                break;
            }
            let step = cover(a, &current);
            if let Some(inc) = prev_inclusion.take() {
                differentials.push(
                    (0..a.n())
                        .map(|v| &inc[v] * &step.map[v])
                        .collect::<Vec<_>>(),
                );
            }
            terms.push(step.cover);
            if step.kernel.total_dim() == 0 {
                length = Some(j);
                break;
            }
            prev_inclusion = Some(step.inclusion);
            current = step.kernel;
        }
        Self {
            terms,
            differentials,
            length,
        }
    }

    /// Matrix of `Hom(P_j, M) -> Hom(P_{j+1}, M)`, with `Hom(P_v, M)`
    /// identified with `M_v` by evaluation at the generator.
    pub fn coboundary(&self, a: &KupischSeries, m: &MatrixRep, j: usize) -> Option<Matrix> {
        let src = &self.terms[j];
        let dst = self.terms.get(j + 1)?;
        let d = &self.differentials[j];
        let offsets = |p: &ProjectiveSum| {
            let mut acc = 0;
            p.vertices
                .iter()
                .map(|&v| {
                    let o = acc;
                    acc += m.dims[v];
                    o
                })
                .collect::<Vec<_>>()
        };
        let (src_off, dst_off) = (offsets(src), offsets(dst));
        let rows: usize = dst.vertices.iter().map(|&v| m.dims[v]).sum();
        let cols: usize = src.vertices.iter().map(|&v| m.dims[v]).sum();
        let mut out = Matrix::zeros(rows, cols);
        for (rp, &vp) in dst.vertices.iter().enumerate() {
            let image = d[vp].column(dst.generator_index(rp));
            for (idx, &(r, l)) in src.labels[vp].iter().enumerate() {
                let coeff = image[idx];
                if coeff.is_zero() {
                    continue;
                }
                let path = m
                    .path_map(a, src.vertices[r], l)
                    .expect("path inside a projective");
                for i in 0..path.rows() {
                    for k in 0..path.cols() {
                        let x = path[(i, k)];
                        if !x.is_zero() {
                            out[(dst_off[rp] + i, src_off[r] + k)] += coeff * x;
                        }
                    }
                }
            }
        }
        Some(out)
    }

    /// `dim Hom(P_j, M)`.
    pub fn cochain_dim(&self, m: &MatrixRep, j: usize) -> usize {
        self.terms
            .get(j)
            .map_or(0, |p| p.vertices.iter().map(|&v| m.dims[v]).sum())
    }

    /// `dim Ext^l(X, M)` for `l` below the number of computed terms.
    pub fn ext_dim(&self, a: &KupischSeries, m: &MatrixRep, l: usize) -> usize {
        if l >= self.terms.len() {
            assert!(self.length.is_some(), "resolution too short for degree {l}");
            return 0;
        }
        let rank = |j: usize| self.coboundary(a, m, j).map_or(0, |c| c.rank());
        let incoming = if l == 0 { 0 } else { rank(l - 1) };
        let outgoing = if self.length == Some(l) {
            0
        } else {
            assert!(l + 1 < self.terms.len(), "resolution too short for degree {l}");
            rank(l)
        };
        self.cochain_dim(m, l) - incoming - outgoing
    }
}

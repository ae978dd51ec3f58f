//! Gaussian elimination over ℚ(q) and a brute-force density search used to
//! cross-check the explicit witnesses.

use std::collections::BTreeMap;

use super::{Calculus, OmegaElem};
use crate::derivations::Comp;
use crate::gwa::{a_basis, AMonomial, AlgElem, Monomial};
use crate::scalars::Scalar;

/// Dense row-major matrix over ℚ(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).recip().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j) * &inv;
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.get(r, j).is_zero() {
                        continue;
                    }
                    let v = self.get(i, j) - &(&f * self.get(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.clone().rref().len()
}

/// A solution of `m·x = b` with free variables set to zero, if one exists.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(b.len(), m.rows);
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, bi.clone());
    }
    let pivots = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, m.cols).clone();
    }
    Some(x)
}

/// Searches for `ω_target = Σ c_{m,g} m·d(g)` with `m` ranging over basis
/// monomials of word length at most `bound` and `g` over the nonconstant
/// ones, restricted to the degrees that can contribute.
pub fn solve_density(calc: &Calculus, target: Comp, bound: u32) -> Option<Vec<(AlgElem, AlgElem)>> {
    let ctx = calc.ctx();
    let want = OmegaElem::basis(ctx, target);
    let need = -target.degree_shift();
    let mut unknowns = Vec::new();
    let mut images = Vec::new();
    let basis = a_basis(bound);
    for m in &basis {
        for g in basis.iter().filter(|g| g.word_len() > 0) {
            if m.degree() + g.degree() != need {
                continue;
            }
            let ge = AlgElem::monomial(ctx, *g, Scalar::one());
            let img = calc
                .d(&ge)
                .left_mul(&AlgElem::monomial(ctx, *m, Scalar::one()));
            unknowns.push((*m, ge));
            images.push(img);
        }
    }
    let mut index: BTreeMap<(usize, AMonomial), usize> = BTreeMap::new();
    let keys = |w: &OmegaElem, index: &mut BTreeMap<(usize, AMonomial), usize>| {
        for c in Comp::ALL {
            for m in w.comp(c).terms().keys() {
                let n = index.len();
                index.entry((c.index(), *m)).or_insert(n);
            }
        }
    };
    keys(&want, &mut index);
    for img in &images {
        keys(img, &mut index);
    }
    let column = |w: &OmegaElem| {
        let mut col = vec![Scalar::zero(); index.len()];
        for c in Comp::ALL {
            for (m, v) in w.comp(c).terms() {
                col[index[&(c.index(), *m)]] = v.clone();
            }
        }
        col
    };
    let cols: Vec<Vec<Scalar>> = images.iter().map(column).collect();
    let mat = Matrix::from_columns(index.len(), &cols);
    let x = solve(&mat, &column(&want))?;
    Some(
        unknowns
            .into_iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .map(|((m, g), c)| (AlgElem::monomial(ctx, m, c), g))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwa::AlgebraCtx;
    use crate::scalars::ZPoly;

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    #[test]
    fn small_system() {
        let q = Scalar::q();
        let m = Matrix::from_columns(2, &[vec![s(1), q.clone()], vec![s(2), s(1)]]);
        let b = vec![s(3), &q + &s(1)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(&x[0] + &(s(2) * &x[1]), s(3));
        assert_eq!(&(&q * &x[0]) + &x[1], &q + &s(1));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn inconsistent_and_rank_deficient() {
        let m = Matrix::from_columns(2, &[vec![s(1), s(2)], vec![s(2), s(4)]]);
        assert_eq!(rank(&m), 1);
        assert!(solve(&m, &[s(1), s(1)]).is_none());
        assert!(solve(&m, &[s(1), s(2)]).is_some());
    }

    #[test]
    fn brute_force_density() {
        let ctx = AlgebraCtx::new(ZPoly::from_ints(&[-1, 0, 1])).unwrap();
        let calc = Calculus::with_defaults(&ctx);
        let pairs = solve_density(&calc, Comp::Zero, 3).expect("solvable at word length 3");
        assert_eq!(calc.eval_pairs(&pairs), OmegaElem::basis(&ctx, Comp::Zero));
        assert!(solve_density(&calc, Comp::Zero, 0).is_none());
    }
}

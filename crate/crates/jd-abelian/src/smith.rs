//! Sparse Smith normal form over the integers.
//!
//! Pivoting always takes a nonzero entry of least absolute value, ties broken
//! by `(row, col)`, so transforms are reproducible run to run. The matrix is
//! first split into connected blocks of its row/column incidence graph; each
//! block is eliminated on its own and the invariant-factor chain is repaired
//! globally at the end.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::{IntMatrix, SparseVec};

/// Which transforms to record while eliminating.
#[derive(Clone, Copy, Debug, Default)]
pub struct SnfOptions {
    pub track_u: bool,
    pub track_u_inv: bool,
    pub track_v: bool,
}

impl SnfOptions {
    pub fn all() -> Self {
        SnfOptions { track_u: true, track_u_inv: true, track_v: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub row: usize,
    pub col: usize,
    pub d: BigInt,
}

/// Result of elimination: `U · M · V` has exactly the entries `d` at the
/// pivot positions and zeros elsewhere.
///
/// Pivots are ordered with all unit pivots first, then the nontrivial ones
/// along the divisibility chain.
#[derive(Clone, Debug)]
pub struct Smith {
    pub rows: usize,
    pub cols: usize,
    pub pivots: Vec<Pivot>,
    /// Rows of `U`, when tracked.
    pub u: Option<Vec<SparseVec>>,
    /// Columns of `U⁻¹`, when tracked.
    pub u_inv: Option<Vec<SparseVec>>,
    /// Columns of `V`, when tracked.
    pub v: Option<Vec<SparseVec>>,
}

impl Smith {
    /// Nontrivial invariant factors (all > 1), in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.pivots.iter().filter(|p| !p.d.is_one()).map(|p| p.d.clone()).collect()
    }

    pub fn matrix_rank(&self) -> usize {
        self.pivots.len()
    }

    /// Rows carrying no pivot, ascending: the free coordinates of the cokernel.
    pub fn free_rows(&self) -> Vec<usize> {
        let used: BTreeSet<usize> = self.pivots.iter().map(|p| p.row).collect();
        (0..self.rows).filter(|r| !used.contains(r)).collect()
    }

    /// Columns carrying no pivot, ascending: `V` restricted to these spans the kernel.
    pub fn free_cols(&self) -> Vec<usize> {
        let used: BTreeSet<usize> = self.pivots.iter().map(|p| p.col).collect();
        (0..self.cols).filter(|c| !used.contains(c)).collect()
    }
}

/// A conventional diagonal decomposition `U · M · V = D`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

/// Computes `(U, D, V)` with `D` diagonal, its diagonal satisfying the
/// divisibility chain, and `U`, `V` unimodular.
pub fn smith_decompose(m: &IntMatrix) -> SmithDecomposition {
    let s = smith(m, SnfOptions { track_u: true, track_u_inv: false, track_v: true });
    let u_rows = s.u.as_ref().expect("tracked");
    let v_cols = s.v.as_ref().expect("tracked");
    let mut row_order: Vec<usize> = s.pivots.iter().map(|p| p.row).collect();
    row_order.extend(s.free_rows());
    let mut col_order: Vec<usize> = s.pivots.iter().map(|p| p.col).collect();
    col_order.extend(s.free_cols());

    let u = IntMatrix::from_columns(m.rows(), row_order.iter().map(|&r| u_rows[r].clone())).transpose();
    let v = IntMatrix::from_columns(m.cols(), col_order.iter().map(|&c| v_cols[c].clone()));
    let mut d = IntMatrix::zeros(m.rows(), m.cols());
    for (k, p) in s.pivots.iter().enumerate() {
        d.set(k, k, p.d.clone());
    }
    SmithDecomposition { u, d, v }
}

/// Runs the sparse elimination.
pub fn smith(m: &IntMatrix, opts: SnfOptions) -> Smith {
    let (nr, nc) = (m.rows(), m.cols());

    // Connected blocks of the bipartite row/column graph.
    let mut uf = UnionFind::new(nr);
    for col in m.columns() {
        if let Some((first, _)) = col.first() {
            for (i, _) in col.iter().skip(1) {
                uf.union(*first, *i);
            }
        }
    }
    let mut block_rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for r in 0..nr {
        block_rows.entry(uf.find(r)).or_default().push(r);
    }
    let mut block_cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, col) in m.columns().iter().enumerate() {
        if let Some((first, _)) = col.first() {
            block_cols.entry(uf.find(*first)).or_default().push(j);
        }
    }

    let mut pivots = Vec::new();
    let mut u: Option<Vec<SparseVec>> = opts.track_u.then(|| vec![Vec::new(); nr]);
    let mut u_inv: Option<Vec<SparseVec>> = opts.track_u_inv.then(|| vec![Vec::new(); nr]);
    let mut v: Option<Vec<SparseVec>> = opts.track_v.then(|| (0..nc).map(|j| vec![(j, BigInt::one())]).collect());

    for (root, rows) in &block_rows {
        let cols = block_cols.get(root).cloned().unwrap_or_default();
        let mut row_local = BTreeMap::new();
        for (k, &r) in rows.iter().enumerate() {
            row_local.insert(r, k);
        }
        let mut w = Work::new(rows.len(), cols.len(), opts);
        for (lc, &j) in cols.iter().enumerate() {
            for (i, val) in m.column(j) {
                let lr = row_local[i];
                w.rows[lr].insert(lc, val.clone());
                w.colpat[lc].insert(lr);
            }
        }
        w.eliminate();
        for p in &w.pivots {
            pivots.push(Pivot { row: rows[p.row], col: cols[p.col], d: p.d.clone() });
        }
        let lift_rows = |v: &BTreeMap<usize, BigInt>| -> SparseVec {
            v.iter().map(|(k, x)| (rows[*k], x.clone())).collect()
        };
        if let (Some(u), Some(wu)) = (u.as_mut(), w.u.as_ref()) {
            for (k, &r) in rows.iter().enumerate() {
                u[r] = lift_rows(&wu[k]);
            }
        }
        if let (Some(ui), Some(wui)) = (u_inv.as_mut(), w.u_inv.as_ref()) {
            for (k, &r) in rows.iter().enumerate() {
                ui[r] = lift_rows(&wui[k]);
            }
        }
        if let (Some(v), Some(wv)) = (v.as_mut(), w.v.as_ref()) {
            for (k, &c) in cols.iter().enumerate() {
                v[c] = wv[k].iter().map(|(l, x)| (cols[*l], x.clone())).collect();
            }
        }
    }

    let mut s = Smith { rows: nr, cols: nc, pivots, u, u_inv, v };
    repair_chain(&mut s);
    s
}

/// Enforces `d₁ | d₂ | …` across all nontrivial pivots with 2×2 unimodular moves.
fn repair_chain(s: &mut Smith) {
    let (mut units, mut nontriv): (Vec<Pivot>, Vec<Pivot>) =
        s.pivots.drain(..).partition(|p| p.d.is_one());
    units.sort_by_key(|p| (p.row, p.col));
    nontriv.sort_by(|a, b| a.d.cmp(&b.d).then(a.row.cmp(&b.row)));
    let k = nontriv.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let a = nontriv[i].d.clone();
            let b = nontriv[j].d.clone();
            if b.is_multiple_of(&a) {
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (g, sx, tx) = (eg.gcd, eg.x, eg.y);
            let ag = &a / &g;
            let bg = &b / &g;
            let (ri, rj) = (nontriv[i].row, nontriv[j].row);
            let (ci, cj) = (nontriv[i].col, nontriv[j].col);
            if let Some(u) = s.u.as_mut() {
                let ni = lin2(&u[ri], &u[rj], &sx, &tx);
                let nj = lin2(&u[ri], &u[rj], &(-&bg), &ag);
                u[ri] = ni;
                u[rj] = nj;
            }
            if let Some(ui) = s.u_inv.as_mut() {
                let ni = lin2(&ui[ri], &ui[rj], &ag, &bg);
                let nj = lin2(&ui[ri], &ui[rj], &(-&tx), &sx);
                ui[ri] = ni;
                ui[rj] = nj;
            }
            if let Some(v) = s.v.as_mut() {
                let ni = lin2(&v[ci], &v[cj], &BigInt::one(), &BigInt::one());
                let nj = lin2(&v[ci], &v[cj], &(-(&tx * &bg)), &(&sx * &ag));
                v[ci] = ni;
                v[cj] = nj;
            }
            nontriv[i].d = g.clone();
            nontriv[j].d = &a * &bg;
        }
    }
    units.extend(nontriv);
    s.pivots = units;
}

fn lin2(x: &SparseVec, y: &SparseVec, a: &BigInt, b: &BigInt) -> SparseVec {
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    if !a.is_zero() {
        for (i, v) in x {
            *acc.entry(*i).or_default() += a * v;
        }
    }
    if !b.is_zero() {
        for (i, v) in y {
            *acc.entry(*i).or_default() += b * v;
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

type Row = BTreeMap<usize, BigInt>;

struct Work {
    rows: Vec<Row>,
    colpat: Vec<BTreeSet<usize>>,
    active_rows: BTreeSet<usize>,
    pivots: Vec<Pivot>,
    u: Option<Vec<Row>>,
    u_inv: Option<Vec<Row>>,
    v: Option<Vec<Row>>,
}

fn unit_row(i: usize) -> Row {
    let mut r = Row::new();
    r.insert(i, BigInt::one());
    r
}

fn axpy(target: &mut Row, source: &Row, q: &BigInt) {
    for (k, v) in source {
        let e = target.entry(*k).or_default();
        *e += q * v;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

impl Work {
    fn new(nr: usize, nc: usize, opts: SnfOptions) -> Self {
        Work {
            rows: vec![Row::new(); nr],
            colpat: vec![BTreeSet::new(); nc],
            active_rows: (0..nr).collect(),
            pivots: Vec::new(),
            u: opts.track_u.then(|| (0..nr).map(unit_row).collect()),
            u_inv: opts.track_u_inv.then(|| (0..nr).map(unit_row).collect()),
            v: opts.track_v.then(|| (0..nc).map(unit_row).collect()),
        }
    }

    /// row_i += q · row_r
    fn row_axpy(&mut self, i: usize, r: usize, q: &BigInt) {
        let src = self.rows[r].clone();
        for (k, v) in &src {
            let e = self.rows[i].entry(*k).or_default();
            *e += q * v;
            if e.is_zero() {
                self.rows[i].remove(k);
                self.colpat[*k].remove(&i);
            } else {
                self.colpat[*k].insert(i);
            }
        }
        if let Some(u) = self.u.as_mut() {
            let src = u[r].clone();
            axpy(&mut u[i], &src, q);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            // U ← (I + q e_i e_rᵀ) U  ⇒  U⁻¹ ← U⁻¹ (I − q e_i e_rᵀ): column r −= q · column i.
            let src = ui[i].clone();
            axpy(&mut ui[r], &src, &(-q));
        }
    }

    /// col_j += q · col_c
    fn col_axpy(&mut self, j: usize, c: usize, q: &BigInt) {
        let rows: Vec<usize> = self.colpat[c].iter().copied().collect();
        for k in rows {
            let add = q * &self.rows[k][&c];
            let e = self.rows[k].entry(j).or_default();
            *e += add;
            if e.is_zero() {
                self.rows[k].remove(&j);
                self.colpat[j].remove(&k);
            } else {
                self.colpat[j].insert(k);
            }
        }
        if let Some(v) = self.v.as_mut() {
            let src = v[c].clone();
            axpy(&mut v[j], &src, q);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for v in self.rows[r].values_mut() {
            *v = -&*v;
        }
        if let Some(u) = self.u.as_mut() {
            for v in u[r].values_mut() {
                *v = -&*v;
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for v in ui[r].values_mut() {
                *v = -&*v;
            }
        }
    }

    fn find_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for &r in &self.active_rows {
            for (c, v) in &self.rows[r] {
                let a = v.abs();
                if a.is_one() {
                    return Some((r, *c));
                }
                if best.as_ref().map_or(true, |b| a < b.0) {
                    best = Some((a, r, *c));
                }
            }
        }
        best.map(|(_, r, c)| (r, c))
    }

    fn eliminate(&mut self) {
        while let Some((mut r, mut c)) = self.find_pivot() {
            loop {
                let p = self.rows[r][&c].clone();
                // Clear column c below/above the pivot with row operations.
                let others: Vec<usize> = self.colpat[c].iter().copied().filter(|&i| i != r).collect();
                let mut rem: Option<(BigInt, usize)> = None;
                for i in others {
                    let q = &self.rows[i][&c] / &p;
                    if !q.is_zero() {
                        self.row_axpy(i, r, &(-q));
                    }
                    if let Some(x) = self.rows[i].get(&c) {
                        let a = x.abs();
                        if rem.as_ref().map_or(true, |b| a < b.0) {
                            rem = Some((a, i));
                        }
                    }
                }
                if let Some((_, i)) = rem {
                    r = i;
                    continue;
                }
                // Column c is clean; clear row r with column operations.
                let others: Vec<usize> = self.rows[r].keys().copied().filter(|&j| j != c).collect();
                let mut rem: Option<(BigInt, usize)> = None;
                for j in others {
                    let q = &self.rows[r][&j] / &p;
                    if !q.is_zero() {
                        self.col_axpy(j, c, &(-q));
                    }
                    if let Some(x) = self.rows[r].get(&j) {
                        let a = x.abs();
                        if rem.as_ref().map_or(true, |b| a < b.0) {
                            rem = Some((a, j));
                        }
                    }
                }
                if let Some((_, j)) = rem {
                    c = j;
                    continue;
                }
                break;
            }
            if self.rows[r][&c].is_negative() {
                self.negate_row(r);
            }
            let d = self.rows[r][&c].clone();
            self.pivots.push(Pivot { row: r, col: c, d });
            self.active_rows.remove(&r);
            self.colpat[c].clear();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(m: &IntMatrix) -> Vec<BigInt> {
        let s = smith(m, SnfOptions::default());
        s.pivots.iter().map(|p| p.d.clone()).collect()
    }

    #[test]
    fn diag_two_zero() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]);
        let s = smith(&m, SnfOptions::default());
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2)]);
        assert_eq!(s.free_rows(), vec![1]);
    }

    #[test]
    fn row_two_four_six() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 6]]);
        assert_eq!(diag_of(&m), vec![BigInt::from(2)]);
    }

    #[test]
    fn chain_across_blocks() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(diag_of(&m), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn decomposition_identity_holds() {
        let m = IntMatrix::from_rows(&[vec![4, 6, 2], vec![2, 8, 0], vec![6, 14, 2]]);
        let dec = smith_decompose(&m);
        assert_eq!(dec.u.mul(&m).mul(&dec.v), dec.d);
    }
}

//! Integer matrix routines: Smith normal form, kernel bases and quotient
//! presentations, used for per-slice homology over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

pub fn zeros(rows: usize, cols: usize) -> IMat {
    vec![vec![BigInt::zero(); cols]; rows]
}

fn identity(n: usize) -> IMat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigInt::one();
    }
    m
}

/// Smith normal form: returns (d, rank) where `d` are the nonzero diagonal
/// invariant factors of `a` (each dividing the next).
pub fn smith_invariants(a: &IMat) -> Vec<BigInt> {
    let (mut m, rows, cols) = (a.clone(), a.len(), a.first().map_or(0, Vec::len));
    let mut invariants = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // Find a nonzero pivot of minimal absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if !m[i][j].is_zero()
                    && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(top, pi);
        for row in m.iter_mut() {
            row.swap(left, pj);
        }
        // Reduce column and row against the pivot until it divides everything.
        loop {
            let mut done = true;
            for i in (top + 1)..rows {
                if !m[i][left].is_zero() {
                    let q = div_round(&m[i][left], &m[top][left]);
                    for j in left..cols {
                        let sub = &q * &m[top][j];
                        m[i][j] = &m[i][j] - sub;
                    }
                    if !m[i][left].is_zero() {
                        m.swap(top, i);
                        done = false;
                    }
                }
            }
            for j in (left + 1)..cols {
                if !m[top][j].is_zero() {
                    let q = div_round(&m[top][j], &m[top][left]);
                    for row in m.iter_mut().skip(top) {
                        let sub = &q * &row[left];
                        row[j] = &row[j] - sub;
                    }
                    if !m[top][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(left, j);
                        }
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        invariants.push(m[top][left].abs());
        top += 1;
        left += 1;
    }
    // Fix divisibility d1 | d2 | ... via pairwise gcd/lcm passes.
    let n = invariants.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (invariants[i].clone(), invariants[j].clone());
            let g = a.gcd(&b);
            if g.is_zero() {
                continue;
            }
            let l = (&a * &b) / &g;
            invariants[i] = g;
            invariants[j] = l;
        }
    }
    invariants
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round-to-nearest quotient keeps coefficients small.
    let (q, r) = a.div_rem(b);
    if (&r * 2i32).abs() > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// A basis of the integer kernel of `a` (as column vectors), computed from the
/// column Hermite-style reduction of `a` extended by an identity block.
pub fn kernel_basis(a: &IMat) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if cols == 0 {
        return Vec::new();
    }
    // Work columnwise: [a; I], integer column reduction to echelon form.
    let mut m = a.clone();
    let mut u = identity(cols);
    let mut lead_row = 0usize;
    let mut col = 0usize;
    while lead_row < rows && col < cols {
        // Clear row `lead_row` across columns col..cols by gcd column ops.
        loop {
            let mut best: Option<usize> = None;
            for j in col..cols {
                if !m[lead_row][j].is_zero()
                    && best.map_or(true, |b| m[lead_row][j].abs() < m[lead_row][b].abs())
                {
                    best = Some(j);
                }
            }
            let Some(bj) = best else {
                break;
            };
            swap_cols(&mut m, col, bj);
            swap_cols(&mut u, col, bj);
            let mut changed = false;
            for j in (col + 1)..cols {
                if !m[lead_row][j].is_zero() {
                    let q = div_round(&m[lead_row][j], &m[lead_row][col]);
                    if !q.is_zero() {
                        sub_col(&mut m, j, col, &q);
                        sub_col(&mut u, j, col, &q);
                    }
                    if !m[lead_row][j].is_zero() {
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if !m[lead_row][col].is_zero() {
            col += 1;
        }
        lead_row += 1;
    }
    // Columns of u whose image column is entirely zero form a kernel basis.
    let mut basis = Vec::new();
    for j in 0..cols {
        if (0..rows).all(|i| m[i][j].is_zero()) {
            basis.push((0..cols).map(|i| u[i][j].clone()).collect());
        }
    }
    basis
}

fn swap_cols(m: &mut IMat, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn sub_col(m: &mut IMat, j: usize, from: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let sub = q * &row[from];
        row[j] = &row[j] - sub;
    }
}

/// Solves `k · x = b` for integer x where the columns of `k` are a basis of a
/// saturated lattice containing b. Returns None if b is outside the span.
pub fn solve_in_lattice(k: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    // Rational Gaussian elimination on [k | b]; solution is integral because
    // the lattice is saturated, but we verify exactness anyway.
    use num_rational::BigRational;
    let rows = b.len();
    let cols = k.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| BigRational::from(k[j][i].clone()))
                .chain(std::iter::once(BigRational::from(b[i].clone())))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=cols {
                    let sub = &f * &m[r][j];
                    m[i][j] = &m[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Consistency: no pivot in the b column.
    for row in m.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); cols];
    for (rowi, &c) in pivots.iter().enumerate() {
        let v = &m[rowi][cols];
        if !v.denom().is_one() {
            return None;
        }
        x[c] = v.numer().clone();
    }
    Some(x)
}

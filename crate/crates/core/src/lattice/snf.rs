//! Smith normal form over the integers, with unimodular transforms.
//!
//! Desk-scale implementation (rank <= 4 Gram matrices): repeated pivoting
//! on the smallest nonzero entry, then a divisibility fix-up so the
//! diagonal forms a chain d_1 | d_2 | ... All arithmetic in i64; inputs
//! here are small Gram matrices, far from overflow.

/// U * mat * V = diag(d), with U, V unimodular and d_1 | d_2 | ... | d_n,
/// all d_i >= 0.
pub struct Snf {
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub diag: Vec<i64>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn swap_rows(m: &mut [Vec<i64>], a: usize, b: usize) {
    m.swap(a, b);
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// row[a] += c * row[b]
fn add_row(m: &mut [Vec<i64>], a: usize, b: usize, c: i64) {
    for j in 0..m[a].len() {
        m[a][j] += c * m[b][j];
    }
}

/// col[a] += c * col[b]
fn add_col(m: &mut [Vec<i64>], a: usize, b: usize, c: i64) {
    for row in m.iter_mut() {
        row[a] += c * row[b];
    }
}

fn negate_row(m: &mut [Vec<i64>], a: usize) {
    for x in m[a].iter_mut() {
        *x = -*x;
    }
}

pub fn smith_normal_form(mat: &[Vec<i64>]) -> Snf {
    let n = mat.len();
    let mut a: Vec<Vec<i64>> = mat.to_vec();
    let mut u = identity(n);
    let mut v = identity(n);

    for t in 0..n {
        loop {
            // smallest nonzero entry of the trailing submatrix
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j] != 0
                        && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            if pi != t {
                swap_rows(&mut a, t, pi);
                swap_rows(&mut u, t, pi);
            }
            if pj != t {
                swap_cols(&mut a, t, pj);
                swap_cols(&mut v, t, pj);
            }
            // clear row t and column t by Euclidean steps
            let mut clean = true;
            for i in t + 1..n {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    add_row(&mut a, i, t, -q);
                    add_row(&mut u, i, t, -q);
                    if a[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    add_col(&mut a, j, t, -q);
                    add_col(&mut v, j, t, -q);
                    if a[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the submatrix; if not, fold the
            // offending row in and restart this step
            let mut fixed = true;
            'search: for i in t + 1..n {
                for j in t + 1..n {
                    if a[i][j] % a[t][t] != 0 {
                        add_row(&mut a, t, i, 1);
                        add_row(&mut u, t, i, 1);
                        fixed = false;
                        break 'search;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[t][t] < 0 {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }

    Snf {
        u,
        v,
        diag: (0..n).map(|i| a[i][i]).collect(),
    }
}

//! Exact enumeration of short vectors in lattice cosets.
//!
//! The quadratic form is decomposed as Q(y) = sum_i d_i (y_i + sum_{j>i}
//! l_ij y_j)^2 by a rational LDL^T (Cholesky without square roots), and
//! vectors are enumerated recursively from the last coordinate, walking
//! each coordinate outward from its interval center until the partial norm
//! exceeds the budget. Everything is rational, so no bound is ever missed
//! or spuriously included.

use super::gram::{DualVec, GramLattice, LatticeVec};
use crate::error::{Error, Result};
use crate::rat::{rat_int, rat_round, Rat};
use num_traits::{Signed, Zero};

struct Ldl {
    d: Vec<Rat>,
    l: Vec<Vec<Rat>>,
}

fn ldl(lat: &GramLattice) -> Ldl {
    let n = lat.rank();
    let mut q: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| rat_int(lat.entry(i, j))).collect())
        .collect();
    let mut d = vec![Rat::zero(); n];
    let mut l = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        d[i] = q[i][i].clone();
        for j in i + 1..n {
            l[i][j] = &q[i][j] / &d[i];
        }
        for r in i + 1..n {
            for c in i + 1..n {
                let delta = &q[r][i] * &q[i][c] / &d[i];
                q[r][c] -= delta;
            }
        }
    }
    Ldl { d, l }
}

/// All vectors mu in rep + L with <mu, mu> <= bound, in lexicographic
/// coordinate order.
pub fn short_vectors(lat: &GramLattice, rep: &DualVec, bound: &Rat) -> Vec<DualVec> {
    let n = lat.rank();
    assert_eq!(rep.len(), n);
    let mut out: Vec<DualVec> = Vec::new();
    if bound.is_negative() {
        return out;
    }
    let dec = ldl(lat);
    let mut y = vec![Rat::zero(); n];
    walk(lat, &dec, rep, bound.clone(), n, &mut y, &mut out);
    out.sort();
    out
}

fn walk(
    lat: &GramLattice,
    dec: &Ldl,
    rep: &DualVec,
    budget: Rat,
    level: usize,
    y: &mut Vec<Rat>,
    out: &mut Vec<DualVec>,
) {
    if level == 0 {
        out.push(y.clone());
        return;
    }
    let i = level - 1;
    // center of the interval for y_i given the fixed tail
    let mut center = Rat::zero();
    for j in level..lat.rank() {
        center += &dec.l[i][j] * &y[j];
    }
    // y_i = rep_i + m, m integral; walk m outward from the rounded center.
    // The per-level term is a parabola in m, so once it exceeds the budget
    // on one side nothing further on that side qualifies.
    let target = -(&center) - &rep[i];
    let m0 = rat_round(&target);
    let try_m = |m: i64, y: &mut Vec<Rat>, out: &mut Vec<DualVec>| -> bool {
        let yi = &rep[i] + Rat::from_integer(&m0 + m);
        let s = &yi + &center;
        let term = &dec.d[i] * &s * &s;
        if term > budget {
            return false;
        }
        y[i] = yi;
        walk(lat, dec, rep, &budget - &term, level - 1, y, out);
        true
    };
    let mut down = 0i64;
    while try_m(down, y, out) {
        down -= 1;
    }
    let mut up = 1i64;
    while try_m(up, y, out) {
        up += 1;
    }
}

/// One coset of L in the dual, reduced to its minimal-norm layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetMin {
    /// The chosen representative (lexicographically first minimal vector);
    /// a member of S.
    pub rep: DualVec,
    pub min_norm: Rat,
    /// All minimal vectors of the coset; equals rep + Delta(rep).
    pub minimal_vectors: Vec<DualVec>,
}

/// For each coset of L in L°, the minimal-norm vectors. Ordering follows
/// `discriminant_group`.
pub fn min_coset_reps(lat: &GramLattice) -> Vec<CosetMin> {
    let (_, reps) = lat.discriminant_group();
    reps.iter()
        .map(|rep| {
            let n0 = lat.norm(rep);
            let candidates = short_vectors(lat, rep, &n0);
            let min_norm = candidates
                .iter()
                .map(|v| lat.norm(v))
                .min()
                .expect("coset enumeration cannot be empty");
            let minimal_vectors: Vec<DualVec> = candidates
                .into_iter()
                .filter(|v| lat.norm(v) == min_norm)
                .collect();
            CosetMin {
                rep: minimal_vectors[0].clone(),
                min_norm,
                minimal_vectors,
            }
        })
        .collect()
}

/// Delta(lambda) = {alpha in L : <lambda+alpha, lambda+alpha> =
/// <lambda, lambda>}, for lambda in S. Errors if lambda is not a dual
/// vector or not minimal in its coset.
pub fn delta_set(lat: &GramLattice, lambda: &DualVec) -> Result<Vec<LatticeVec>> {
    if !lat.is_dual_vector(lambda) {
        return Err(Error::NotInDualLattice);
    }
    let n0 = lat.norm(lambda);
    let layer = short_vectors(lat, lambda, &n0);
    if layer.iter().any(|v| lat.norm(v) < n0) {
        return Err(Error::NotInS);
    }
    let mut delta: Vec<LatticeVec> = layer
        .iter()
        .filter(|v| lat.norm(v) == n0)
        .map(|v| {
            (0..lat.rank())
                .map(|i| {
                    let diff = &v[i] - &lambda[i];
                    debug_assert!(diff.denom() == &num_bigint::BigInt::from(1));
                    i64::try_from(diff.to_integer()).expect("coordinate out of i64 range")
                })
                .collect()
        })
        .collect();
    delta.sort();
    Ok(delta)
}

/// All beta in L with <beta, beta> <= 4 * (max over cosets of the minimal
/// norm); outside this set every E_beta acts as zero on every module.
/// The bound comes from <beta,beta> = -2<mu,beta> <= 2|mu||beta| on any
/// action edge with |mu|^2 the relevant minimal norm.
pub fn support_set(lat: &GramLattice) -> Vec<LatticeVec> {
    let cosets = min_coset_reps(lat);
    let max_min: Rat = cosets
        .iter()
        .map(|c| c.min_norm.clone())
        .max()
        .expect("at least the zero coset exists");
    let bound = max_min * rat_int(4);
    let zero = vec![Rat::zero(); lat.rank()];
    short_vectors(lat, &zero, &bound)
        .into_iter()
        .map(|v| {
            (0..lat.rank())
                .map(|i| i64::try_from(v[i].to_integer()).expect("coordinate out of i64 range"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::gram::validate_gram;
    use crate::rat::rat;

    fn a1() -> GramLattice {
        validate_gram(vec![vec![2]]).unwrap()
    }

    fn a2() -> GramLattice {
        validate_gram(vec![vec![2, -1], vec![-1, 2]]).unwrap()
    }

    /// Brute-force box scan: all rep + x with |x_i| <= window.
    fn box_scan(lat: &GramLattice, rep: &DualVec, bound: &Rat, window: i64) -> Vec<DualVec> {
        let n = lat.rank();
        let mut out = Vec::new();
        let mut x = vec![-window; n];
        'outer: loop {
            let v: DualVec = (0..n).map(|i| &rep[i] + rat_int(x[i])).collect();
            if lat.norm(&v) <= *bound {
                out.push(v);
            }
            let mut i = n;
            while i > 0 {
                i -= 1;
                x[i] += 1;
                if x[i] <= window {
                    continue 'outer;
                }
                x[i] = -window;
            }
            break;
        }
        out.sort();
        out
    }

    #[test]
    fn a1_norm_two_layer() {
        let lat = a1();
        let vs = short_vectors(&lat, &vec![rat_int(0)], &rat_int(2));
        assert_eq!(
            vs,
            vec![vec![rat_int(-1)], vec![rat_int(0)], vec![rat_int(1)]]
        );
    }

    #[test]
    fn a1_half_coset() {
        let lat = a1();
        let vs = short_vectors(&lat, &vec![rat(1, 2)], &rat(1, 2));
        assert_eq!(vs, vec![vec![rat(-1, 2)], vec![rat(1, 2)]]);
    }

    #[test]
    fn a2_weight_coset() {
        let lat = a2();
        let l1 = vec![rat(2, 3), rat(1, 3)];
        let vs = short_vectors(&lat, &l1, &rat(2, 3));
        assert_eq!(vs.len(), 3, "weights of the 3-dimensional module: {vs:?}");
    }

    #[test]
    fn matches_box_scan_oracle() {
        for lat in [a1(), a2(), validate_gram(vec![vec![4]]).unwrap(), validate_gram(vec![vec![2, 0], vec![0, 4]]).unwrap()] {
            let (_, reps) = lat.discriminant_group();
            for rep in &reps {
                for bound in [rat_int(0), rat(1, 2), rat_int(2), rat_int(5)] {
                    let fast = short_vectors(&lat, rep, &bound);
                    let slow = box_scan(&lat, rep, &bound, 5);
                    assert_eq!(fast, slow, "rep {rep:?} bound {bound}");
                }
            }
        }
    }

    #[test]
    fn min_cosets_a1() {
        let lat = a1();
        let cosets = min_coset_reps(&lat);
        assert_eq!(cosets.len(), 2);
        assert_eq!(cosets[0].min_norm, rat_int(0));
        assert_eq!(cosets[0].minimal_vectors, vec![vec![rat_int(0)]]);
        assert_eq!(cosets[1].min_norm, rat(1, 2));
        assert_eq!(
            cosets[1].minimal_vectors,
            vec![vec![rat(-1, 2)], vec![rat(1, 2)]]
        );
    }

    #[test]
    fn min_cosets_z4() {
        let lat = validate_gram(vec![vec![4]]).unwrap();
        let cosets = min_coset_reps(&lat);
        let sizes: Vec<usize> = cosets.iter().map(|c| c.minimal_vectors.len()).collect();
        // cosets 0, 1/4, 1/2, 3/4: the half coset has two minimal vectors
        assert_eq!(sizes, vec![1, 1, 2, 1]);
        assert_eq!(cosets[1].min_norm, rat(1, 4));
        assert_eq!(cosets[2].min_norm, rat_int(1));
    }

    #[test]
    fn min_cosets_a2() {
        let lat = a2();
        let cosets = min_coset_reps(&lat);
        assert_eq!(cosets.len(), 3);
        for c in &cosets[1..] {
            assert_eq!(c.min_norm, rat(2, 3));
            assert_eq!(c.minimal_vectors.len(), 3);
        }
    }

    #[test]
    fn delta_sets() {
        let lat = a1();
        // Delta(0) = {0} by positive definiteness
        assert_eq!(delta_set(&lat, &vec![rat_int(0)]).unwrap(), vec![vec![0]]);
        // Delta(1/2 alpha) = {0, -alpha}
        assert_eq!(
            delta_set(&lat, &vec![rat(1, 2)]).unwrap(),
            vec![vec![-1], vec![0]]
        );
        // alpha itself is not minimal in the zero coset? alpha IS minimal
        // in its own coset only if no shorter vector exists; 3/2 alpha is not.
        assert_eq!(delta_set(&lat, &vec![rat(3, 2)]), Err(Error::NotInS));
        assert_eq!(
            delta_set(&lat, &vec![rat(1, 3)]),
            Err(Error::NotInDualLattice)
        );
    }

    #[test]
    fn delta_set_a2_weight() {
        let lat = a2();
        let l1 = vec![rat(2, 3), rat(1, 3)];
        let delta = delta_set(&lat, &l1).unwrap();
        assert_eq!(delta.len(), 3);
        assert!(delta.contains(&vec![0, 0]));
    }

    #[test]
    fn support_sets() {
        // A1: max min norm 1/2, bound 2: 0 and the two norm-2 roots
        let lat = a1();
        assert_eq!(support_set(&lat), vec![vec![-1], vec![0], vec![1]]);
        // A2: bound 8/3 covers 0 and the six roots
        let lat = a2();
        assert_eq!(support_set(&lat).len(), 7);
    }
}

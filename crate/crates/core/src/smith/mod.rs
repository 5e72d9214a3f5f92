//! The algebras R(g) for g in `Q[x]`: companion polynomial, central element,
//! Verma-derived finite-dimensional simple modules, classification of
//! simples by dimension, and the squarefree/coprime semisimplicity
//! criterion on the shifted sums h_j.

pub mod nc;

use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::poly::{binom_poly, is_squarefree, poly_gcd, rational_roots, Poly};
use crate::rat::{rat_int, rat_to_string, Rat};
use nc::{nc_mul, Gen, NcElement};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// R(g) together with its companion polynomial u, normalized by u(0) = 0,
/// satisfying g(x) = (u(x+1) - u(x))/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithAlgebra {
    g: Poly,
    u: Poly,
}

impl SmithAlgebra {
    /// Configures R(g). The companion polynomial is the discrete
    /// antiderivative of 2g in the binomial basis: writing
    /// 2g = sum_r c_r C(x, r) gives u = sum_r c_r C(x, r+1), since
    /// C(x+1, r+1) - C(x, r+1) = C(x, r) and C(0, r+1) = 0.
    pub fn new(g: Poly) -> Self {
        let two_g = g.scale(&rat_int(2));
        let mut u = Poly::zero();
        for (r, c) in two_g.newton_coeffs().iter().enumerate() {
            u = &u + &binom_poly(r + 1).scale(c);
        }
        debug_assert_eq!(&(&u.shift(&Rat::one()) - &u).scale(&crate::rat::rat(1, 2)), &g);
        debug_assert!(u.eval(&Rat::zero()).is_zero());
        SmithAlgebra { g, u }
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    /// h_j(x) = g(x) + g(x-1) + ... + g(x-j).
    pub fn h_sum(&self, j: usize) -> Poly {
        let mut acc = Poly::zero();
        for i in 0..=j {
            acc = &acc + &self.g.shift(&rat_int(-(i as i64)));
        }
        acc
    }

    /// The central element Omega = AB + BA + (u(H+1) + u(H))/2, in normal
    /// form.
    pub fn omega(&self) -> NcElement {
        let a = NcElement::gen(Gen::A);
        let b = NcElement::gen(Gen::B);
        let ab = nc_mul(self, &a, &b);
        let ba = nc_mul(self, &b, &a);
        let upoly = (&self.u.shift(&Rat::one()) + &self.u).scale(&crate::rat::rat(1, 2));
        ab.add(&ba).add(&NcElement::poly_in_h(&upoly))
    }

    /// True iff e commutes with A, B and H.
    pub fn is_central(&self, e: &NcElement) -> bool {
        [Gen::A, Gen::B, Gen::H].iter().all(|&g| {
            let x = NcElement::gen(g);
            nc_mul(self, e, &x) == nc_mul(self, &x, e)
        })
    }

    /// Checks 2^(r+1) A^(r+1) B^(r+1) = (Omega - u(H))(Omega - u(H-1)) ...
    /// (Omega - u(H-r)) as an exact identity of normal forms.
    pub fn casimir_factorization_check(&self, r: usize) -> bool {
        let p = r as u32 + 1;
        let apow = NcElement::monomial(nc::NcMonomial::new(0, 0, p), Rat::one());
        let bpow = NcElement::monomial(nc::NcMonomial::new(p, 0, 0), Rat::one());
        let mut lhs = nc_mul(self, &apow, &bpow);
        for _ in 0..p {
            lhs = lhs.scale(&rat_int(2));
        }
        let omega = self.omega();
        let mut rhs = NcElement::one();
        for i in 0..=r {
            let shift = self.u.shift(&rat_int(-(i as i64)));
            let factor = omega.sub(&NcElement::poly_in_h(&shift));
            rhs = nc_mul(self, &rhs, &factor);
        }
        lhs == rhs
    }

    /// The finite-dimensional simple module L(lambda), if one of dimension
    /// at most max_dim exists. The dimension is the minimal j >= 1 with
    /// h_(j-1)(lambda) = 0; that is exactly the condition making
    /// B^j v_lambda generate a proper submodule of the Verma module.
    pub fn simple_module(&self, lambda: &Rat, max_dim: usize) -> Result<SimpleModuleSpec> {
        assert!(max_dim >= 1);
        for j in 1..=max_dim {
            if self.h_sum(j - 1).eval(lambda).is_zero() {
                return Ok(self.build_simple(lambda, j));
            }
        }
        Err(Error::NoFiniteSimple { max_dim })
    }

    fn build_simple(&self, lambda: &Rat, dim: usize) -> SimpleModuleSpec {
        // basis v, Bv, ..., B^(dim-1) v
        let mut a = QMat::zeros(dim, dim);
        let mut b = QMat::zeros(dim, dim);
        let mut h = QMat::zeros(dim, dim);
        for i in 0..dim {
            h[(i, i)] = lambda - rat_int(i as i64);
            if i + 1 < dim {
                b[(i + 1, i)] = Rat::one();
            }
            if i >= 1 {
                a[(i - 1, i)] = self.h_sum(i - 1).eval(lambda);
            }
        }
        SimpleModuleSpec {
            lambda: lambda.clone(),
            dim,
            a,
            b,
            h,
        }
    }

    /// Classifies the simple modules of dimension exactly j: rational
    /// highest weights listed exactly, non-rational ones counted via
    /// squarefree degrees. Roots shared with any h_(i-1), i < j, are
    /// removed first since j would not be minimal there.
    pub fn classify_simples(&self, j: usize) -> Result<Classification> {
        assert!(j >= 1);
        if self.g.is_zero() {
            return Err(Error::NoSimplesToClassify);
        }
        let mut q = self.h_sum(j - 1);
        for i in 1..j {
            let earlier = self.h_sum(i - 1);
            loop {
                let d = poly_gcd(&q, &earlier)?;
                if d.degree() == Some(0) {
                    break;
                }
                q = q.div_exact(&d);
            }
        }
        if q.degree() == Some(0) {
            return Ok(Classification {
                dim: j,
                rational_weights: Vec::new(),
                nonrational_count: 0,
            });
        }
        let roots = rational_roots(&q)?;
        let mut q_nonrat = q;
        for (root, mult) in &roots {
            let lin = Poly::from_coeffs(vec![-root.clone(), Rat::one()]);
            for _ in 0..*mult {
                q_nonrat = q_nonrat.div_exact(&lin);
            }
        }
        let nonrational_count = match q_nonrat.degree() {
            Some(0) | None => 0,
            Some(_) => {
                let sf = q_nonrat.div_exact(&poly_gcd(&q_nonrat, &q_nonrat.derivative())?);
                sf.degree().unwrap_or(0)
            }
        };
        Ok(Classification {
            dim: j,
            rational_weights: roots.into_iter().map(|(r, _)| r).collect(),
            nonrational_count,
        })
    }

    /// For 0 <= j <= max_j checks squarefreeness of h_j, and for all pairs
    /// i < j checks that h_i and h_j are coprime. These are the hypotheses
    /// under which every module with locally nilpotent A and B is
    /// semisimple.
    pub fn semisimplicity_criterion(&self, max_j: usize) -> Result<SemisimplicityReport> {
        if self.g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let hs: Vec<Poly> = (0..=max_j).map(|j| self.h_sum(j)).collect();
        let squarefree: Vec<SquarefreeVerdict> = hs
            .iter()
            .enumerate()
            .map(|(j, h)| {
                Ok(SquarefreeVerdict {
                    j,
                    squarefree: is_squarefree(h)?,
                })
            })
            .collect::<Result<_>>()?;
        let mut coprime = Vec::new();
        for i in 0..=max_j {
            for j in (i + 1)..=max_j {
                let g = poly_gcd(&hs[i], &hs[j])?;
                coprime.push(CoprimeVerdict {
                    i,
                    j,
                    coprime: g.degree() == Some(0),
                });
            }
        }
        let all_pass = squarefree.iter().all(|v| v.squarefree)
            && coprime.iter().all(|v| v.coprime);
        Ok(SemisimplicityReport {
            max_j,
            squarefree,
            coprime,
            all_pass,
        })
    }
}

/// A finite-dimensional simple module: highest weight, dimension, and the
/// exact matrices of the three generators on the basis v, Bv, ...,
/// B^(dim-1) v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleModuleSpec {
    pub lambda: Rat,
    pub dim: usize,
    pub a: QMat,
    pub b: QMat,
    pub h: QMat,
}

impl SimpleModuleSpec {
    /// Exact matrix check of HA - AH = A, HB - BH = -B, AB - BA = g(H).
    pub fn satisfies_relations(&self, alg: &SmithAlgebra) -> bool {
        let ha = &self.h * &self.a;
        let ah = &self.a * &self.h;
        if &(&ha - &ah) - &self.a != QMat::zeros(self.dim, self.dim) {
            return false;
        }
        let hb = &self.h * &self.b;
        let bh = &self.b * &self.h;
        if &(&hb - &bh) + &self.b != QMat::zeros(self.dim, self.dim) {
            return false;
        }
        let ab = &self.a * &self.b;
        let ba = &self.b * &self.a;
        let g_of_h = self.h.map_diagonal(|x| alg.g().eval(x));
        &(&ab - &ba) - &g_of_h == QMat::zeros(self.dim, self.dim)
    }

    /// Evaluates (1 - 2H) A on the module.
    pub fn one_minus_two_h_times_a(&self) -> QMat {
        let factor = &QMat::identity(self.dim) - &self.h.scale(&rat_int(2));
        &factor * &self.a
    }
}

/// Simple modules of one fixed dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub dim: usize,
    #[serde(with = "crate::rat::serde_rat_vec")]
    pub rational_weights: Vec<Rat>,
    pub nonrational_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquarefreeVerdict {
    pub j: usize,
    pub squarefree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprimeVerdict {
    pub i: usize,
    pub j: usize,
    pub coprime: bool,
}

/// Outcome of the h_j squarefree/coprime checks up to max_j.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimplicityReport {
    pub max_j: usize,
    pub squarefree: Vec<SquarefreeVerdict>,
    pub coprime: Vec<CoprimeVerdict>,
    pub all_pass: bool,
}

impl SemisimplicityReport {
    pub fn failures(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        (
            self.squarefree
                .iter()
                .filter(|v| !v.squarefree)
                .map(|v| v.j)
                .collect(),
            self.coprime
                .iter()
                .filter(|v| !v.coprime)
                .map(|v| (v.i, v.j))
                .collect(),
        )
    }
}

/// Human-readable weight for reports.
pub fn weight_label(w: &Rat) -> String {
    rat_to_string(w)
}

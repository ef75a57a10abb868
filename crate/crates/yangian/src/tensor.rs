//! Operators on tensor powers of the defining vector space.
//!
//! A [`TensorSpace`] is (C^k)^(x m) with a fixed list of single-site labels;
//! basis vectors are label tuples.  [`TensorOp`] is a dense operator with
//! entries in any [`Ring`]; products skip zero entries, so operators which
//! act on a single site cost k * dim^2 rather than dim^3 to compose.
//!
//! Provided operators: site permutations P_ab, the rank-one projections
//! Q_ab in both the untwisted (sum e_ij (x) e_ij) and twisted
//! (sum theta_ij e_{-j,-i} (x) e_{ji}) forms, rational-argument R-matrices
//! R(u) = 1 - P/u and their partial transposes, the antisymmetrizer, and the
//! embedding of a one-site matrix at a chosen position.
//!
//! The antisymmetrizer on m = k sites factors as w w^T for the alternating
//! vector w, which turns traces against it into two cheap vector
//! contractions; [`tau_series`] uses that to evaluate the family of traces
//! tr A T_1(u) ... T_k(u-k+1) C ... C without ever forming a dim^2 product.

use num::rational::BigRational;
use num::Zero;

use crate::biseries::BiSeries;
use crate::matrix::{Mat, PairingCase};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::series::Series;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSpace {
    labels: Vec<i32>,
    m: usize,
}

impl TensorSpace {
    pub fn new(labels: Vec<i32>, m: usize) -> Self {
        assert!(!labels.is_empty() && m >= 1);
        TensorSpace { labels, m }
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn sites(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.k().pow(self.m as u32)
    }

    fn pos(&self, label: i32) -> usize {
        self.labels.iter().position(|&l| l == label).expect("unknown label")
    }

    /// Basis index of a label tuple (site 1 first).
    pub fn index(&self, tuple: &[i32]) -> usize {
        assert_eq!(tuple.len(), self.m);
        tuple.iter().fold(0, |acc, &l| acc * self.k() + self.pos(l))
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<i32> {
        let mut out = vec![0i32; self.m];
        for site in (0..self.m).rev() {
            out[site] = self.labels[idx % self.k()];
            idx /= self.k();
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct TensorOp<A: Ring> {
    space: TensorSpace,
    data: Vec<A>,
}

impl<A: Ring> PartialEq for TensorOp<A> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.data == other.data
    }
}

impl<A: Ring> TensorOp<A> {
    pub fn zero(space: &TensorSpace) -> Self {
        TensorOp { space: space.clone(), data: vec![A::zero(); space.dim() * space.dim()] }
    }

    pub fn identity(space: &TensorSpace) -> Self {
        let mut op = Self::zero(space);
        for i in 0..space.dim() {
            op.data[i * space.dim() + i] = A::one();
        }
        op
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn get(&self, row: usize, col: usize) -> &A {
        &self.data[row * self.space.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: A) {
        let d = self.space.dim();
        self.data[row * d + col] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.space, rhs.space);
        TensorOp {
            space: self.space.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TensorOp { space: self.space.clone(), data: self.data.iter().map(|a| a.neg()).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        TensorOp { space: self.space.clone(), data: self.data.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn scale_rat(&self, q: &BigRational) -> Self {
        self.scale(&Scalar::from_rational(q.clone()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.space, rhs.space);
        let d = self.space.dim();
        let mut out = Self::zero(&self.space);
        for r in 0..d {
            for t in 0..d {
                let a = &self.data[r * d + t];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &rhs.data[t * d + c];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.data[r * d + c];
                    *cell = cell.add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn map<B: Ring>(&self, f: &dyn Fn(&A) -> B) -> TensorOp<B> {
        TensorOp { space: self.space.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn apply(&self, v: &[A]) -> Vec<A> {
        let d = self.space.dim();
        assert_eq!(v.len(), d);
        let mut out = vec![A::zero(); d];
        for r in 0..d {
            for c in 0..d {
                let a = &self.data[r * d + c];
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(&v[c]));
            }
        }
        out
    }

    pub fn trace(&self) -> A {
        let d = self.space.dim();
        let mut out = A::zero();
        for i in 0..d {
            out = out.add(&self.data[i * d + i]);
        }
        out
    }

    /// Embed a one-site operator at `site` (1-based).
    pub fn at_site(space: &TensorSpace, site: usize, m: &Mat<A>) -> Self {
        assert!(site >= 1 && site <= space.sites());
        let mut op = Self::zero(space);
        let d = space.dim();
        for row in 0..d {
            let rt = space.tuple(row);
            for &cl in space.labels() {
                let entry = m.get(rt[site - 1], cl);
                if entry.is_zero() {
                    continue;
                }
                let mut ct = rt.clone();
                ct[site - 1] = cl;
                let col = space.index(&ct);
                op.data[row * d + col] = entry.clone();
            }
        }
        op
    }

    /// Permutation operator swapping sites a and b (1-based).
    pub fn permutation(space: &TensorSpace, a: usize, b: usize) -> Self {
        let mut op = Self::zero(space);
        let d = space.dim();
        for col in 0..d {
            let mut t = space.tuple(col);
            t.swap(a - 1, b - 1);
            let row = space.index(&t);
            op.data[row * d + col] = A::one();
        }
        op
    }

    /// Untwisted rank-one projection source: Q_ab = sum_ij e_ij^(a) e_ij^(b).
    pub fn q_untwisted(space: &TensorSpace, a: usize, b: usize) -> Self {
        let mut op = Self::zero(space);
        let d = space.dim();
        for col in 0..d {
            let t = space.tuple(col);
            if t[a - 1] != t[b - 1] {
                continue;
            }
            for &i in space.labels() {
                let mut s = t.clone();
                s[a - 1] = i;
                s[b - 1] = i;
                let row = space.index(&s);
                op.data[row * d + col] = op.data[row * d + col].add(&A::one());
            }
        }
        op
    }

    /// Twisted form: Q_ab = sum_ij theta_ij e_{-j,-i}^(a) (x) e_{ji}^(b);
    /// labels must be sign-symmetric.
    pub fn q_twisted(space: &TensorSpace, a: usize, b: usize, case: PairingCase) -> Self {
        let mut op = Self::zero(space);
        let d = space.dim();
        for col in 0..d {
            let t = space.tuple(col);
            // e_{ji} at site b needs t[b-1] = i; e_{-j,-i} at site a needs t[a-1] = -i.
            let i = t[b - 1];
            if t[a - 1] != -i {
                continue;
            }
            for &j in space.labels() {
                let mut s = t.clone();
                s[a - 1] = -j;
                s[b - 1] = j;
                let row = space.index(&s);
                let th = A::from_int(case.theta(i, j));
                op.data[row * d + col] = op.data[row * d + col].add(&th);
            }
        }
        op
    }

    /// R_ab(u) = 1 - P_ab / u at a rational argument.
    pub fn r_at(space: &TensorSpace, a: usize, b: usize, u: &BigRational) -> Self {
        assert!(!u.is_zero());
        let p = Self::permutation(space, a, b);
        Self::identity(space).sub(&p.scale_rat(&(BigRational::from_integer(1.into()) / u)))
    }

    /// Partially transposed R: 1 - Q_ab / u, untwisted form.
    pub fn rt_at(space: &TensorSpace, a: usize, b: usize, u: &BigRational) -> Self {
        assert!(!u.is_zero());
        let q = Self::q_untwisted(space, a, b);
        Self::identity(space).sub(&q.scale_rat(&(BigRational::from_integer(1.into()) / u)))
    }

    /// Antisymmetrizer: sum over permutations of sites with signs.
    pub fn antisymmetrizer(space: &TensorSpace) -> Self {
        let m = space.sites();
        let mut op = Self::zero(space);
        let d = space.dim();
        let perms = permutations(m);
        for (sigma, sign) in &perms {
            for col in 0..d {
                let t = space.tuple(col);
                let mut s = vec![0i32; m];
                for site in 0..m {
                    // P_sigma moves the content of site j to site sigma(j).
                    s[sigma[site]] = t[site];
                }
                let row = space.index(&s);
                let v = A::from_int(*sign);
                op.data[row * d + col] = op.data[row * d + col].add(&v);
            }
        }
        op
    }
}

/// All permutations of 0..m with signs.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == cur.len() {
            let mut sign = 1i64;
            for a in 0..cur.len() {
                for b in (a + 1)..cur.len() {
                    if cur[a] > cur[b] {
                        sign = -sign;
                    }
                }
            }
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, out);
            cur.swap(k, i);
        }
    }
    rec(&mut cur, 0, &mut out);
    out
}

/// The alternating vector w in (C^k)^(x k): component sgn(sigma) on tuples
/// that list every label once, 0 elsewhere.  The antisymmetrizer equals
/// w w^T, so contractions against it reduce to inner products with w.
pub fn alternating_vector<A: Ring>(space: &TensorSpace) -> Vec<A> {
    assert_eq!(space.sites(), space.k(), "alternating vector needs m = k");
    let mut v = vec![A::zero(); space.dim()];
    for (sigma, sign) in permutations(space.k()) {
        let tuple: Vec<i32> = sigma.iter().map(|&p| space.labels()[p]).collect();
        v[space.index(&tuple)] = A::from_int(sign);
    }
    v
}

/// Apply a one-site matrix at `site` to a tensor-space vector, in place.
pub fn apply_at_site<A: Ring>(space: &TensorSpace, site: usize, m: &Mat<A>, v: &[A]) -> Vec<A> {
    let d = space.dim();
    assert_eq!(v.len(), d);
    let mut out = vec![A::zero(); d];
    for col in 0..d {
        if v[col].is_zero() {
            continue;
        }
        let t = space.tuple(col);
        for &row_label in space.labels() {
            let entry = m.get(row_label, t[site - 1]);
            if entry.is_zero() {
                continue;
            }
            let mut s = t.clone();
            s[site - 1] = row_label;
            let row = space.index(&s);
            out[row] = out[row].add(&entry.mul(&v[col]));
        }
    }
    out
}

/// The trace tr A T_1(u) T_2(u-1) ... T_k(u-k+1) C_{k+1} ... C_n where A is
/// the antisymmetrizer on n = t.dim() sites and C is a fixed numeric matrix.
/// Computed as w^T X w using the rank-one factorization of A.
pub fn tau_series<A: Ring>(t: &Mat<Series<A>>, c: &Mat<Scalar>, k: usize) -> Series<A> {
    let labels = t.row_labels().to_vec();
    let n = labels.len();
    assert!(k <= n);
    let space = TensorSpace::new(labels, n);
    // Start from w, apply the rightmost factor first.
    let w: Vec<Series<A>> = alternating_vector(&space);
    let mut v = w.clone();
    let c_series: Mat<Series<A>> = c.map(|s: &Scalar| {
        if s.is_zero() {
            Series::exact_zero()
        } else {
            Series::term(0, A::from_scalar(s))
        }
    });
    for site in (k + 1..=n).rev() {
        v = apply_at_site(&space, site, &c_series, &v);
    }
    for site in (1..=k).rev() {
        let shifted = t.shift_arg(&Scalar::from_int(-(site as i64 - 1)), t.common_floor());
        v = apply_at_site(&space, site, &shifted, &v);
    }
    let mut out = Series::exact_zero();
    for (a, b) in w.iter().zip(&v) {
        out = out.add(&a.mul(b));
    }
    out
}

/// Scalar multiple of the identity operator.
pub fn diag_op<A: Ring>(space: &TensorSpace, elem: &A) -> TensorOp<A> {
    let mut op = TensorOp::zero(space);
    for i in 0..space.dim() {
        op.set(i, i, elem.clone());
    }
    op
}

/// The exchange relation in denominator-cleared form:
///
/// ```text
/// ((u - v) - P) T_1(u) T_2(v) = T_2(v) T_1(u) ((u - v) - P)
/// ```
///
/// checked as an identity of bivariate series down to (f_req_u, f_req_v).
pub fn rtt_check<A: Ring>(t: &Mat<Series<A>>, f_req_u: i64, f_req_v: i64) -> Result<(), String> {
    let labels = t.row_labels().to_vec();
    let space = TensorSpace::new(labels, 2);
    let tu: Mat<BiSeries<A>> = t.map(|s| BiSeries::from_u(s));
    let tv: Mat<BiSeries<A>> = t.map(|s| BiSeries::from_v(s));
    let t1 = TensorOp::at_site(&space, 1, &tu);
    let t2 = TensorOp::at_site(&space, 2, &tv);
    let p: TensorOp<BiSeries<A>> =
        TensorOp::<Scalar>::permutation(&space, 1, 2).map(&|s: &Scalar| {
            if s.is_zero() {
                BiSeries::zero()
            } else {
                BiSeries::from_scalar(s)
            }
        });
    let rpoly = diag_op(&space, &BiSeries::u_minus_v()).sub(&p);
    let lhs = rpoly.mul(&t1).mul(&t2);
    let rhs = t2.mul(&t1).mul(&rpoly);
    let diff = lhs.sub(&rhs);
    for r in 0..space.dim() {
        for c in 0..space.dim() {
            diff.get(r, c)
                .check_zero_to(f_req_u, f_req_v)
                .map_err(|e| format!("entry ({}, {}): {}", r, c, e))?;
        }
    }
    Ok(())
}

/// Yang-Baxter identity R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u) at
/// rational parameters.
pub fn ybe_check(labels: &[i32], u: &BigRational, v: &BigRational) -> Result<(), String> {
    let space = TensorSpace::new(labels.to_vec(), 3);
    let uv = u + v;
    let r12 = TensorOp::<Scalar>::r_at(&space, 1, 2, u);
    let r13 = TensorOp::<Scalar>::r_at(&space, 1, 3, &uv);
    let r23 = TensorOp::<Scalar>::r_at(&space, 2, 3, v);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    if lhs.sub(&rhs).is_zero() {
        Ok(())
    } else {
        Err(format!("Yang-Baxter identity fails at u={}, v={}", u, v))
    }
}

/// The two bracketed orderings of the fused R-matrix product at parameters
/// u_1, ..., u_m:
///
/// ordering 1: (R_{m-1,m}) (R_{m-2,m} R_{m-2,m-1}) ... (R_{1m} ... R_{12})
/// ordering 2: (R_{12} R_{13} ... R_{1m}) ... (R_{m-1,m})
///
/// with R_ij evaluated at u_i - u_j.
pub fn fused_r(space: &TensorSpace, us: &[BigRational], ordering: u8) -> TensorOp<Scalar> {
    let m = space.sites();
    assert_eq!(us.len(), m);
    let mut prod = TensorOp::identity(space);
    match ordering {
        1 => {
            for i in (1..m).rev() {
                for j in (i + 1..=m).rev() {
                    let arg = &us[i - 1] - &us[j - 1];
                    prod = prod.mul(&TensorOp::r_at(space, i, j, &arg));
                }
            }
        }
        2 => {
            for i in 1..m {
                for j in i + 1..=m {
                    let arg = &us[i - 1] - &us[j - 1];
                    prod = prod.mul(&TensorOp::r_at(space, i, j, &arg));
                }
            }
        }
        _ => panic!("ordering must be 1 or 2"),
    }
    prod
}

/// At consecutive parameters u_i - u_{i+1} = 1 the fused product equals the
/// antisymmetrizer, independently of the bracketing.
pub fn fused_equals_antisymmetrizer(labels: &[i32], m: usize) -> Result<(), String> {
    let space = TensorSpace::new(labels.to_vec(), m);
    let us: Vec<BigRational> = (0..m).map(|i| BigRational::from_integer((-(i as i64)).into())).collect();
    let a = TensorOp::<Scalar>::antisymmetrizer(&space);
    for ordering in [1u8, 2] {
        let f = fused_r(&space, &us, ordering);
        if !f.sub(&a).is_zero() {
            return Err(format!("fused product (ordering {}) differs from the antisymmetrizer", ordering));
        }
    }
    // A^2 = m! A
    let fact: i64 = (1..=m as i64).product();
    let sq = a.mul(&a);
    if !sq.sub(&a.scale(&Scalar::from_int(fact))).is_zero() {
        return Err("antisymmetrizer is not idempotent up to m!".into());
    }
    Ok(())
}

/// Generic-parameter equality of the two fused orderings.
pub fn fused_orderings_agree(labels: &[i32], m: usize, us: &[BigRational]) -> Result<(), String> {
    let space = TensorSpace::new(labels.to_vec(), m);
    let f1 = fused_r(&space, us, 1);
    let f2 = fused_r(&space, us, 2);
    if f1.sub(&f2).is_zero() {
        Ok(())
    } else {
        Err("fused R orderings disagree".into())
    }
}

/// A T_1(u) T_2(u-1) ... T_m(u-m+1) = T_m(u-m+1) ... T_1(u) A for the
/// antisymmetrizer A on m sites.
pub fn antisymmetrizer_transport_check<A: Ring>(
    t: &Mat<Series<A>>,
    m: usize,
    f_req: i64,
) -> Result<(), String> {
    let labels = t.row_labels().to_vec();
    let space = TensorSpace::new(labels, m);
    let anti: TensorOp<Series<A>> =
        TensorOp::<Scalar>::antisymmetrizer(&space).map(&|s: &Scalar| {
            if s.is_zero() {
                Series::exact_zero()
            } else {
                Series::term(0, A::from_scalar(s))
            }
        });
    let site_t: Vec<TensorOp<Series<A>>> = (1..=m)
        .map(|i| {
            let shifted = t.shift_arg(&Scalar::from_int(-(i as i64 - 1)), t.common_floor());
            TensorOp::at_site(&space, i, &shifted)
        })
        .collect();
    let mut fwd = anti.clone();
    for op in &site_t {
        fwd = fwd.mul(op);
    }
    let mut rev = TensorOp::identity(&space);
    for op in site_t.iter().rev() {
        rev = rev.mul(op);
    }
    rev = rev.mul(&anti);
    let diff = fwd.sub(&rev);
    for r in 0..space.dim() {
        for c in 0..space.dim() {
            diff.get(r, c)
                .check_zero_to(f_req)
                .map_err(|e| format!("entry ({}, {}): {}", r, c, e))?;
        }
    }
    Ok(())
}

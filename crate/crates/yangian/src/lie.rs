//! Classical Lie algebras and their universal enveloping algebras.
//!
//! A [`LieSpec`] carries a basis of the algebra given by explicit matrices in
//! the defining representation; structure constants are *derived* from matrix
//! commutators and then antisymmetry and the Jacobi identity are re-verified
//! on every triple at construction time.  Supported families:
//!
//! - `gl_n` with basis E_ij on labels `1..=n`;
//! - orthogonal/symplectic algebras in the signed-index realization on labels
//!   `-n..=n` (0 present only in odd orthogonal ranks), with generators
//!   F_ij = E_ij - theta_ij E_{-j,-i};
//! - orthogonal algebras in the skew-symmetric realization on labels
//!   `1..=N`, F_ij = E_ij - E_ji.
//!
//! [`EnvElement`] is a linear combination of PBW monomials over a fixed basis
//! order (lowering < Cartan < raising where a triangular decomposition
//! exists), with straightening memoized per spec.  That order makes the
//! Harish-Chandra projection a one-liner: drop every monomial containing a
//! non-Cartan factor, substitute lambda variables for the Cartan ones.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num::rational::BigRational;
use num::{One, Zero};

use crate::matrix::{Mat, PairingCase};
use crate::ring::Ring;
use crate::scalar::{big, frac, sym, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgKind {
    Gl,
    OEven,
    OOdd,
    Sp,
    OSkew,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Triangular {
    Lowering,
    Cartan,
    Raising,
    Unclassified,
}

struct BasisInfo {
    name: String,
    mat: Mat<Scalar>,
    class: Triangular,
    /// For Cartan elements: which lambda variable this generator evaluates to.
    lambda_slot: Option<usize>,
    /// Distinguished matrix position and value used to read off coordinates.
    pivot: (i32, i32),
    pivot_value: BigRational,
}

/// Sorted multiset of basis generators with positive exponents: one PBW
/// monomial.  Kept ascending in the basis order.
pub type EnvMono = Vec<(u16, u16)>;

type Terms = BTreeMap<EnvMono, Scalar>;

pub struct LieSpec {
    name: String,
    kind: AlgKind,
    n: usize,
    labels: Vec<i32>,
    basis: Vec<BasisInfo>,
    /// bracket[a][b] = coordinates of [b_a, b_b] in the basis.
    bracket: Vec<Vec<Vec<(u16, BigRational)>>>,
    memo: RwLock<HashMap<(EnvMono, u16), Arc<Terms>>>,
}

impl fmt::Debug for LieSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieSpec({})", self.name)
    }
}

fn elementary(labels: &[i32], i: i32, j: i32) -> Mat<Scalar> {
    Mat::from_fn(labels.to_vec(), labels.to_vec(), |r, c| {
        if r == i && c == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

impl LieSpec {
    pub fn gl(n: usize) -> Arc<LieSpec> {
        let labels: Vec<i32> = (1..=n as i32).collect();
        let mut basis = Vec::new();
        let push = |i: i32, j: i32, class: Triangular, slot: Option<usize>, basis: &mut Vec<BasisInfo>| {
            basis.push(BasisInfo {
                name: format!("E[{},{}]", i, j),
                mat: elementary(&labels, i, j),
                class,
                lambda_slot: slot,
                pivot: (i, j),
                pivot_value: BigRational::one(),
            });
        };
        for i in 1..=n as i32 {
            for j in 1..=n as i32 {
                if i > j {
                    push(i, j, Triangular::Lowering, None, &mut basis);
                }
            }
        }
        for i in 1..=n as i32 {
            push(i, i, Triangular::Cartan, Some(i as usize), &mut basis);
        }
        for i in 1..=n as i32 {
            for j in 1..=n as i32 {
                if i < j {
                    push(i, j, Triangular::Raising, None, &mut basis);
                }
            }
        }
        Arc::new(LieSpec::finish(format!("gl{}", n), AlgKind::Gl, n, labels, basis))
    }

    /// Signed-index orthogonal (o_{2n}, o_{2n+1}) or symplectic (sp_{2n})
    /// algebra.  `kind` must be one of OEven, OOdd, Sp.
    pub fn signed(kind: AlgKind, n: usize) -> Arc<LieSpec> {
        assert!(matches!(kind, AlgKind::OEven | AlgKind::OOdd | AlgKind::Sp));
        let mut labels: Vec<i32> = (-(n as i32)..=n as i32).collect();
        if kind != AlgKind::OOdd {
            labels.retain(|&l| l != 0);
        }
        let theta = |i: i32, j: i32| -> i64 {
            if kind == AlgKind::Sp {
                (i.signum() * j.signum()) as i64
            } else {
                1
            }
        };
        let f_mat = |i: i32, j: i32| -> Mat<Scalar> {
            let mut m = elementary(&labels, i, j);
            let partner = elementary(&labels, -j, -i).scale(&Scalar::from_int(theta(i, j)));
            m = m.sub(&partner);
            m
        };
        let mut basis = Vec::new();
        let add = |i: i32, j: i32, class: Triangular, slot: Option<usize>, basis: &mut Vec<BasisInfo>| {
            let mat = f_mat(i, j);
            let pivot_value = mat.get(i, j).try_rational().unwrap();
            assert!(!pivot_value.is_zero());
            basis.push(BasisInfo {
                name: format!("F[{},{}]", i, j),
                mat,
                class,
                lambda_slot: slot,
                pivot: (i, j),
                pivot_value,
            });
        };
        // Canonical representatives: (i,j) with i+j > 0, plus the pairs
        // (i,-i) in the symplectic case (orthogonal F_{i,-i} vanishes).
        let mut reps: Vec<(i32, i32)> = Vec::new();
        for &i in &labels {
            for &j in &labels {
                if i + j > 0 || (i + j == 0 && i != 0 && kind == AlgKind::Sp) {
                    reps.push((i, j));
                }
            }
        }
        for &(i, j) in reps.iter().filter(|&&(i, j)| i > j) {
            add(i, j, Triangular::Lowering, None, &mut basis);
        }
        for &(i, j) in reps.iter().filter(|&&(i, j)| i == j) {
            add(i, j, Triangular::Cartan, Some(i as usize), &mut basis);
        }
        for &(i, j) in reps.iter().filter(|&&(i, j)| i < j) {
            add(i, j, Triangular::Raising, None, &mut basis);
        }
        let cap_n = labels.len();
        let name = match kind {
            AlgKind::Sp => format!("sp{}", cap_n),
            _ => format!("o{}", cap_n),
        };
        Arc::new(LieSpec::finish(name, kind, n, labels, basis))
    }

    /// Orthogonal algebra in the skew-symmetric realization on labels 1..=N.
    pub fn o_skew(cap_n: usize) -> Arc<LieSpec> {
        let labels: Vec<i32> = (1..=cap_n as i32).collect();
        let mut basis = Vec::new();
        for i in 1..=cap_n as i32 {
            for j in (i + 1)..=cap_n as i32 {
                let mat = elementary(&labels, i, j).sub(&elementary(&labels, j, i));
                basis.push(BasisInfo {
                    name: format!("F[{},{}]", i, j),
                    mat,
                    class: Triangular::Unclassified,
                    lambda_slot: None,
                    pivot: (i, j),
                    pivot_value: BigRational::one(),
                });
            }
        }
        Arc::new(LieSpec::finish(
            format!("o{}-skew", cap_n),
            AlgKind::OSkew,
            cap_n,
            labels,
            basis,
        ))
    }

    fn finish(name: String, kind: AlgKind, n: usize, labels: Vec<i32>, basis: Vec<BasisInfo>) -> LieSpec {
        let dim = basis.len();
        let decompose = |m: &Mat<Scalar>| -> Vec<(u16, BigRational)> {
            let mut rest = m.clone();
            let mut coords = Vec::new();
            for (idx, b) in basis.iter().enumerate() {
                let c = rest
                    .get(b.pivot.0, b.pivot.1)
                    .try_rational()
                    .expect("non-rational entry in commutator");
                if c.is_zero() {
                    continue;
                }
                let coeff = c / b.pivot_value.clone();
                rest = rest.sub(&b.mat.scale(&Scalar::from_rational(coeff.clone())));
                coords.push((idx as u16, coeff));
            }
            assert!(
                rest.is_zero(),
                "commutator not in the span of the basis for {}: residue {:?}",
                name,
                rest.nonzero_witness()
            );
            coords
        };
        let mut bracket = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let comm = basis[a].mat.mul(&basis[b].mat).sub(&basis[b].mat.mul(&basis[a].mat));
                bracket[a][b] = decompose(&comm);
            }
        }
        // Antisymmetry.
        for a in 0..dim {
            for b in 0..dim {
                let mut sum: HashMap<u16, BigRational> = HashMap::new();
                for &(e, ref c) in &bracket[a][b] {
                    *sum.entry(e).or_insert_with(BigRational::zero) += c;
                }
                for &(e, ref c) in &bracket[b][a] {
                    *sum.entry(e).or_insert_with(BigRational::zero) += c;
                }
                assert!(
                    sum.values().all(|v| v.is_zero()),
                    "bracket antisymmetry failed for ({}, {})",
                    a,
                    b
                );
            }
        }
        let spec = LieSpec {
            name,
            kind,
            n,
            labels,
            basis,
            bracket,
            memo: RwLock::new(HashMap::new()),
        };
        spec.verify_jacobi();
        spec
    }

    fn verify_jacobi(&self) {
        let dim = self.basis.len();
        let ad = |a: usize, coords: &[(u16, BigRational)]| -> Vec<(u16, BigRational)> {
            let mut out: BTreeMap<u16, BigRational> = BTreeMap::new();
            for &(e, ref c) in coords {
                for &(f, ref d) in &self.bracket[a][e as usize] {
                    let v = out.entry(f).or_insert_with(BigRational::zero);
                    *v += c * d;
                }
            }
            out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
        };
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
                    let mut acc: BTreeMap<u16, BigRational> = BTreeMap::new();
                    for (src, x, y) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for &(e, ref q) in &ad(src, &self.bracket[x][y]) {
                            let v = acc.entry(e).or_insert_with(BigRational::zero);
                            *v += q;
                        }
                    }
                    assert!(
                        acc.values().all(|v| v.is_zero()),
                        "Jacobi identity failed on triple ({},{},{}) in {}",
                        a,
                        b,
                        c,
                        self.name
                    );
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> AlgKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Rank parameter: n for gl_n and the signed families, N for o_N-skew.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    pub fn basis_name(&self, idx: u16) -> &str {
        &self.basis[idx as usize].name
    }

    pub fn basis_class(&self, idx: u16) -> Triangular {
        self.basis[idx as usize].class
    }

    pub fn pairing(&self) -> PairingCase {
        match self.kind {
            AlgKind::Sp => PairingCase::Symplectic,
            _ => PairingCase::Orthogonal,
        }
    }

    pub fn theta(&self, i: i32, j: i32) -> i64 {
        self.pairing().theta(i, j)
    }

    /// Half-sum shift rho_i for i = 1..=rank; sign convention such that
    /// l_i = lambda_i + rho_i.
    pub fn rho(&self, i: usize) -> BigRational {
        let i = i as i64;
        match self.kind {
            AlgKind::Gl => big(1 - i),
            AlgKind::OEven => big(1 - i),
            AlgKind::OOdd => frac(1 - 2 * i, 2),
            AlgKind::Sp => big(-i),
            AlgKind::OSkew => panic!("no rho data in the skew realization"),
        }
    }

    /// rho extended to signed labels: rho_{-i} = -rho_i, rho_0 = 1/2.
    pub fn rho_label(&self, i: i32) -> BigRational {
        if i > 0 {
            self.rho(i as usize)
        } else if i < 0 {
            -self.rho((-i) as usize)
        } else {
            assert_eq!(self.kind, AlgKind::OOdd);
            frac(1, 2)
        }
    }

    pub fn lambda_var(&self, i: usize) -> Scalar {
        Scalar::var(&format!("lam{}", i))
    }

    pub fn l_var(&self, i: usize) -> Scalar {
        Scalar::var(&format!("l{}", i))
    }

    /// Rewrite a polynomial in lambda variables in terms of the shifted
    /// variables l_i = lambda_i + rho_i.
    pub fn lambda_to_l(&self, p: &Scalar) -> Scalar {
        let mut map = HashMap::new();
        for i in 1..=self.n {
            let li = self.l_var(i).sub(&Scalar::from_rational(self.rho(i)));
            map.insert(sym(&format!("lam{}", i)), li);
        }
        p.subst(&map)
    }
}

/// An element of the universal enveloping algebra, as a canonical linear
/// combination of PBW monomials.  `spec == None` only for scalars, which
/// belong to every enveloping algebra.
#[derive(Clone, Debug)]
pub struct EnvElement {
    spec: Option<Arc<LieSpec>>,
    terms: Terms,
}

impl PartialEq for EnvElement {
    fn eq(&self, other: &Self) -> bool {
        if self.terms != other.terms {
            return false;
        }
        match (&self.spec, &other.spec) {
            (Some(a), Some(b)) => a.name == b.name,
            _ => true,
        }
    }
}

impl Eq for EnvElement {}

fn unify_specs(a: &Option<Arc<LieSpec>>, b: &Option<Arc<LieSpec>>) -> Option<Arc<LieSpec>> {
    match (a, b) {
        (None, None) => None,
        (Some(s), None) | (None, Some(s)) => Some(s.clone()),
        (Some(s), Some(t)) => {
            assert!(
                Arc::ptr_eq(s, t) || s.name == t.name,
                "mixing elements of {} and {}",
                s.name,
                t.name
            );
            Some(s.clone())
        }
    }
}

impl EnvElement {
    pub fn zero() -> Self {
        EnvElement { spec: None, terms: BTreeMap::new() }
    }

    pub fn scalar(s: &Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(Vec::new(), s.clone());
        }
        EnvElement { spec: None, terms }
    }

    pub fn generator(spec: &Arc<LieSpec>, idx: u16) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(idx, 1)], Scalar::one());
        EnvElement { spec: Some(spec.clone()), terms }
    }

    pub fn spec(&self) -> Option<&Arc<LieSpec>> {
        self.spec.as_ref()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EnvMono, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn put(&mut self, m: EnvMono, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Is the element a polynomial in Cartan generators only?
    pub fn is_cartan_only(&self) -> bool {
        let spec = match &self.spec {
            Some(s) => s,
            None => return true,
        };
        self.terms.keys().all(|m| {
            m.iter()
                .all(|&(idx, _)| spec.basis_class(idx) == Triangular::Cartan)
        })
    }

    /// Harish-Chandra projection: drop monomials containing lowering or
    /// raising factors, substitute lambda variables for Cartan generators.
    /// The result is a polynomial in lam1..lam n.
    pub fn hc_image(&self) -> Scalar {
        let spec = match &self.spec {
            Some(s) => s.clone(),
            None => return self.terms.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero),
        };
        let mut out = Scalar::zero();
        'mono: for (m, c) in &self.terms {
            let mut factor = Scalar::one();
            for &(idx, e) in m {
                match spec.basis_class(idx) {
                    Triangular::Cartan => {
                        let slot = spec.basis[idx as usize]
                            .lambda_slot
                            .expect("Cartan generator without lambda slot");
                        factor = factor.mul(&spec.lambda_var(slot).pow(e as u32));
                    }
                    Triangular::Lowering | Triangular::Raising => continue 'mono,
                    Triangular::Unclassified => {
                        panic!("Harish-Chandra projection needs a triangular decomposition")
                    }
                }
            }
            out = out.add(&factor.mul(c));
        }
        out
    }

    /// Harish-Chandra image in the shifted variables l_i.
    pub fn hc_image_l(&self) -> Scalar {
        match &self.spec {
            Some(spec) => spec.clone().lambda_to_l(&self.hc_image()),
            None => self.hc_image(),
        }
    }

    /// Does the element commute with every generator?
    pub fn is_central(&self) -> Result<(), String> {
        let spec = match &self.spec {
            Some(s) => s.clone(),
            None => return Ok(()),
        };
        for idx in 0..spec.dim() as u16 {
            let g = EnvElement::generator(&spec, idx);
            let c = self.commutator(&g);
            if !c.is_zero() {
                return Err(format!(
                    "does not commute with {}: [x, g] has {} terms",
                    spec.basis_name(idx),
                    c.num_terms()
                ));
            }
        }
        Ok(())
    }
}

/// Straightening: multiply a normal monomial by a single generator on the
/// right, returning a normal-form combination.  Memoized per spec.
fn mono_times_gen(spec: &Arc<LieSpec>, m: &EnvMono, g: u16) -> Arc<Terms> {
    if let Some(hit) = spec.memo.read().unwrap().get(&(m.clone(), g)) {
        return hit.clone();
    }
    let result: Terms = (|| {
        if m.is_empty() || m.last().unwrap().0 <= g {
            let mut out = m.clone();
            if let Some(last) = out.last_mut() {
                if last.0 == g {
                    last.1 += 1;
                    return BTreeMap::from([(out, Scalar::one())]);
                }
            }
            out.push((g, 1));
            return BTreeMap::from([(out, Scalar::one())]);
        }
        // m = m' * h with h > g; m*g = m'*(g*h) + m'*[h,g]
        let mut mp = m.clone();
        let (h, eh) = *mp.last().unwrap();
        if eh == 1 {
            mp.pop();
        } else {
            mp.last_mut().unwrap().1 -= 1;
        }
        let mut acc: Terms = BTreeMap::new();
        // m' * g, then * h
        let first = mono_times_gen(spec, &mp, g);
        for (mm, cc) in first.iter() {
            let second = mono_times_gen(spec, mm, h);
            for (mmm, ccc) in second.iter() {
                add_term(&mut acc, mmm.clone(), cc.mul(ccc));
            }
        }
        // m' * [h, g]
        for &(e, ref q) in &spec.bracket[h as usize][g as usize] {
            let part = mono_times_gen(spec, &mp, e);
            for (mm, cc) in part.iter() {
                add_term(&mut acc, mm.clone(), cc.scale(q));
            }
        }
        acc
    })();
    let arc = Arc::new(result);
    spec.memo.write().unwrap().insert((m.clone(), g), arc.clone());
    arc
}

fn add_term(t: &mut Terms, m: EnvMono, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match t.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl Ring for EnvElement {
    fn zero() -> Self {
        EnvElement::zero()
    }

    fn one() -> Self {
        EnvElement::scalar(&Scalar::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let spec = unify_specs(&self.spec, &rhs.spec);
        let mut out = EnvElement { spec, terms: self.terms.clone() };
        for (m, c) in &rhs.terms {
            out.put(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self) -> Self {
        EnvElement {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let spec = unify_specs(&self.spec, &rhs.spec);
        let mut out = EnvElement { spec: spec.clone(), terms: BTreeMap::new() };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1.mul(c2);
                if m2.is_empty() {
                    out.put(m1.clone(), c);
                    continue;
                }
                let spec = spec.as_ref().expect("non-scalar monomials need a spec");
                // Multiply m1 by every generator of m2 in order.
                let mut cur: Terms = BTreeMap::from([(m1.clone(), c)]);
                for &(g, e) in m2 {
                    for _ in 0..e {
                        let mut next: Terms = BTreeMap::new();
                        for (mm, cc) in &cur {
                            let prod = mono_times_gen(spec, mm, g);
                            for (mmm, ccc) in prod.iter() {
                                add_term(&mut next, mmm.clone(), cc.mul(ccc));
                            }
                        }
                        cur = next;
                    }
                }
                for (mm, cc) in cur {
                    out.put(mm, cc);
                }
            }
        }
        out
    }

    fn from_scalar(s: &Scalar) -> Self {
        EnvElement::scalar(s)
    }

    fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return EnvElement { spec: self.spec.clone(), terms: BTreeMap::new() };
        }
        EnvElement {
            spec: self.spec.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect(),
        }
    }

    fn try_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Vec::new()) {
                return c.try_rational();
            }
        }
        None
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let spec = self.spec.as_ref();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if m.is_empty() {
                write!(f, "{}", c)?;
                continue;
            }
            write!(f, "({})", c)?;
            for &(b, e) in m {
                let name = spec.map(|s| s.basis_name(b).to_string()).unwrap_or_else(|| format!("b{}", b));
                write!(f, "*{}", name)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// The matrix of generators: entry (i, j) is E_ij (gl), F_ij (signed or
/// skew realizations) as an element of the enveloping algebra.
pub fn gen_matrix(spec: &Arc<LieSpec>) -> Mat<EnvElement> {
    Mat::from_fn(spec.labels().to_vec(), spec.labels().to_vec(), |i, j| gen_elem(spec, i, j))
}

/// Resolve the abstract generator with indices (i, j) to canonical form.
pub fn gen_elem(spec: &Arc<LieSpec>, i: i32, j: i32) -> EnvElement {
    match spec.kind {
        AlgKind::Gl => {
            let idx = spec
                .basis
                .iter()
                .position(|b| b.pivot == (i, j))
                .expect("gl generator out of range") as u16;
            EnvElement::generator(spec, idx)
        }
        AlgKind::OSkew => {
            if i == j {
                return EnvElement::zero();
            }
            let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            let idx = spec.basis.iter().position(|x| x.pivot == (a, b)).unwrap() as u16;
            let g = EnvElement::generator(spec, idx);
            if sign > 0 {
                g
            } else {
                g.neg()
            }
        }
        _ => {
            // Signed realization: F_{-j,-i} = -theta_ij F_ij.
            if let Some(pos) = spec.basis.iter().position(|b| b.pivot == (i, j)) {
                return EnvElement::generator(spec, pos as u16);
            }
            if let Some(pos) = spec.basis.iter().position(|b| b.pivot == (-j, -i)) {
                let g = EnvElement::generator(spec, pos as u16);
                return if spec.theta(i, j) > 0 { g.neg() } else { g };
            }
            // Remaining cases vanish identically (orthogonal F_{i,-i}, F_00).
            EnvElement::zero()
        }
    }
}

/// Entry (i, j) of the s-th power of the generator matrix.
pub fn matrix_power_entry(spec: &Arc<LieSpec>, s: u32, i: i32, j: i32) -> EnvElement {
    let mut m = Mat::identity(spec.labels().to_vec());
    let e = gen_matrix(spec);
    for _ in 0..s {
        m = m.mul(&e);
    }
    m.get(i, j).clone()
}

/// Gelfand invariant: the trace of the s-th power of the generator matrix.
pub fn gelfand_invariant(spec: &Arc<LieSpec>, s: u32) -> EnvElement {
    let mut m = Mat::identity(spec.labels().to_vec());
    let e = gen_matrix(spec);
    for _ in 0..s {
        m = m.mul(&e);
    }
    m.trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_the_classical_count() {
        assert_eq!(LieSpec::gl(2).dim(), 4);
        assert_eq!(LieSpec::gl(3).dim(), 9);
        assert_eq!(LieSpec::signed(AlgKind::Sp, 1).dim(), 3, "sp2");
        assert_eq!(LieSpec::signed(AlgKind::Sp, 2).dim(), 10, "sp4");
        assert_eq!(LieSpec::signed(AlgKind::OOdd, 1).dim(), 3, "o3");
        assert_eq!(LieSpec::signed(AlgKind::OEven, 2).dim(), 6, "o4");
        assert_eq!(LieSpec::signed(AlgKind::OOdd, 2).dim(), 10, "o5");
        assert_eq!(LieSpec::o_skew(4).dim(), 6, "o4 skew");
    }

    #[test]
    fn gl2_bracket_and_pbw_straightening() {
        let gl2 = LieSpec::gl(2);
        let e12 = gen_elem(&gl2, 1, 2);
        let e21 = gen_elem(&gl2, 2, 1);
        let e11 = gen_elem(&gl2, 1, 1);
        let e22 = gen_elem(&gl2, 2, 2);
        // [E12, E21] = E11 - E22
        let c = e12.commutator(&e21);
        assert_eq!(c, e11.sub(&e22), "[E12,E21] = E11 - E22");
        // E12*E21 in normal form = E21*E12 + E11 - E22 (lowering before raising)
        let lhs = e12.mul(&e21);
        let rhs = e21.mul(&e12).add(&e11).sub(&e22);
        assert_eq!(lhs, rhs, "straightening reorders E12 E21 into PBW form");
    }

    #[test]
    fn multiplication_is_associative_on_mixed_words() {
        let gl3 = LieSpec::gl(3);
        let a = gen_elem(&gl3, 1, 3).add(&gen_elem(&gl3, 2, 2));
        let b = gen_elem(&gl3, 3, 1).add(&gen_elem(&gl3, 1, 2).scale(&Scalar::from_int(2)));
        let c = gen_elem(&gl3, 2, 3).sub(&gen_elem(&gl3, 3, 3));
        let l = a.mul(&b).mul(&c);
        let r = a.mul(&b.mul(&c));
        assert_eq!(l, r, "(ab)c = a(bc) in U(gl3)");
    }

    #[test]
    fn trace_is_central_but_e11_is_not() {
        let gl2 = LieSpec::gl(2);
        let tr = gelfand_invariant(&gl2, 1);
        tr.is_central().expect("tr E is central in U(gl2)");
        let tr2 = gelfand_invariant(&gl2, 2);
        tr2.is_central().expect("tr E^2 is central in U(gl2)");
        assert!(gen_elem(&gl2, 1, 1).is_central().is_err(), "E11 must not be central");
    }

    #[test]
    fn harish_chandra_of_e12_e21() {
        let gl2 = LieSpec::gl(2);
        let x = gen_elem(&gl2, 1, 2).mul(&gen_elem(&gl2, 2, 1));
        // Normal form E21 E12 + E11 - E22: projection drops the first word.
        let chi = x.hc_image();
        let expect = gl2.lambda_var(1).sub(&gl2.lambda_var(2));
        assert_eq!(chi, expect, "chi(E12 E21) = lam1 - lam2");
    }

    #[test]
    fn shifted_variables_for_gl() {
        let gl2 = LieSpec::gl(2);
        // l_i = lambda_i - i + 1: lam2 -> l2 + 1
        let p = gl2.lambda_var(2);
        let q = gl2.lambda_to_l(&p);
        assert_eq!(q, gl2.l_var(2).add(&Scalar::one()));
    }

    #[test]
    fn sp2_triple_matches_hand_computation() {
        let sp2 = LieSpec::signed(AlgKind::Sp, 1);
        let e = gen_elem(&sp2, -1, 1); // 2 E_{-1,1}
        let f = gen_elem(&sp2, 1, -1); // 2 E_{1,-1}
        let h = gen_elem(&sp2, 1, 1); // E_11 - E_{-1,-1}
        // [2E_{-1,1}, 2E_{1,-1}] = 4(E_{-1,-1} - E_{11}) = -4 (E11 - E_{-1,-1})
        assert_eq!(e.commutator(&f), h.scale(&Scalar::from_int(-4)));
    }

    #[test]
    fn signed_generator_symmetry() {
        let o4 = LieSpec::signed(AlgKind::OEven, 2);
        // F_{-j,-i} = -theta_ij F_ij with theta = 1
        let a = gen_elem(&o4, -2, 1);
        let b = gen_elem(&o4, -1, 2);
        assert_eq!(a, b.neg(), "orthogonal symmetry F_{{-1,2}} = -F_{{-2,1}}");
        // Orthogonal F_{i,-i} vanishes
        assert!(gen_elem(&o4, 1, -1).is_zero());
        // Symplectic F_{i,-i} does not
        let sp2 = LieSpec::signed(AlgKind::Sp, 1);
        assert!(!gen_elem(&sp2, 1, -1).is_zero());
    }

    #[test]
    fn power_entries_compose() {
        let gl2 = LieSpec::gl(2);
        // (E^2)_{11} = E11^2 + E12 E21
        let direct = gen_elem(&gl2, 1, 1)
            .mul(&gen_elem(&gl2, 1, 1))
            .add(&gen_elem(&gl2, 1, 2).mul(&gen_elem(&gl2, 2, 1)));
        assert_eq!(matrix_power_entry(&gl2, 2, 1, 1), direct);
    }

    #[test]
    fn gelfand_invariants_are_central_in_gl3() {
        let gl3 = LieSpec::gl(3);
        for s in 1..=3 {
            gelfand_invariant(&gl3, s)
                .is_central()
                .unwrap_or_else(|e| panic!("tr E^{} not central: {}", s, e));
        }
    }

    #[test]
    fn skew_realization_brackets() {
        let o4 = LieSpec::o_skew(4);
        let a = gen_elem(&o4, 1, 2);
        let b = gen_elem(&o4, 2, 3);
        // [F12, F23] = F13 in the skew realization
        assert_eq!(a.commutator(&b), gen_elem(&o4, 1, 3));
        assert_eq!(gen_elem(&o4, 2, 1), gen_elem(&o4, 1, 2).neg());
    }
}

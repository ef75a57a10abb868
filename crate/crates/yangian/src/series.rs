//! Truncated Laurent series in a single variable `u`.
//!
//! A [`Series`] stores finitely many coefficients indexed by integer exponent
//! together with a *floor*: the lowest exponent whose coefficient is known.
//! `floor == None` means the series is exact — every unstored coefficient is
//! genuinely zero (finite Laurent polynomials such as Capelli determinants).
//! `floor == Some(f)` means the series is known modulo terms of exponent
//! `< f`; arithmetic propagates this honestly, so a verification that claims
//! agreement down to `u^f` really has computed everything down to `u^f`.
//!
//! Series here typically expand in powers of `u^{-1}` with leading term at
//! exponent 0, so "leading coefficient" means the *top* exponent.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};

use crate::ring::Ring;
use crate::scalar::{big, Scalar};

/// Generalized binomial coefficient C(e, k) for integer (possibly negative) e.
pub fn binom(e: i64, k: u32) -> BigRational {
    let mut num = BigRational::one();
    for t in 0..k as i64 {
        num *= big(e - t);
    }
    let mut den = BigRational::one();
    for t in 1..=k as i64 {
        den *= big(t);
    }
    num / den
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series<A: Ring> {
    terms: BTreeMap<i64, A>,
    floor: Option<i64>,
}

/// max of two floors where `None` stands for "exact" (-infinity).
pub fn join_floor(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some(x), Some(y)) => Some(x.max(y)),
    }
}

impl<A: Ring> Series<A> {
    pub fn exact_zero() -> Self {
        Series { terms: BTreeMap::new(), floor: None }
    }

    /// The zero series known only down to exponent `f`.
    pub fn zero_mod(f: i64) -> Self {
        Series { terms: BTreeMap::new(), floor: Some(f) }
    }

    pub fn one() -> Self {
        Series::term(0, A::one())
    }

    pub fn term(exp: i64, coeff: A) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Series { terms, floor: None }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, A)>, floor: Option<i64>) -> Self {
        let mut out = Series { terms: BTreeMap::new(), floor };
        for (e, c) in pairs {
            out.put(e, c);
        }
        out
    }

    fn put(&mut self, e: i64, c: A) {
        if c.is_zero() {
            return;
        }
        if let Some(f) = self.floor {
            if e < f {
                return;
            }
        }
        match self.terms.entry(e) {
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

    pub fn floor(&self) -> Option<i64> {
        self.floor
    }

    pub fn is_exact(&self) -> bool {
        self.floor.is_none()
    }

    /// Highest stored exponent.
    pub fn top(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &A)> {
        self.terms.iter()
    }

    /// Coefficient of u^e.  Panics when the coefficient is below the floor,
    /// i.e. genuinely unknown — asking for it is always a logic error.
    pub fn coeff(&self, e: i64) -> A {
        if let Some(f) = self.floor {
            assert!(e >= f, "coefficient of u^{} requested but series only known down to u^{}", e, f);
        }
        self.terms.get(&e).cloned().unwrap_or_else(A::zero)
    }

    /// Forget everything below exponent `f`.
    pub fn truncate_to(&self, f: i64) -> Self {
        let mut out = self.clone();
        out.floor = Some(match out.floor {
            Some(g) => g.max(f),
            None => f,
        });
        let fl = out.floor.unwrap();
        out.terms.retain(|&e, _| e >= fl);
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let floor = join_floor(self.floor, rhs.floor);
        let mut out = Series { terms: BTreeMap::new(), floor };
        for (e, c) in &self.terms {
            out.put(*e, c.clone());
        }
        for (e, c) in &rhs.terms {
            out.put(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
            floor: self.floor,
        }
    }

    /// Effective top for contamination analysis: highest exponent that might
    /// carry a nonzero coefficient.
    fn top_eff(&self) -> Option<i64> {
        match (self.top(), self.floor) {
            (Some(t), Some(f)) => Some(t.max(f - 1)),
            (Some(t), None) => Some(t),
            (None, Some(f)) => Some(f - 1),
            (None, None) => None, // exact zero
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // Exact zero annihilates regardless of the other side's floor.
        if (self.is_exact() && self.terms.is_empty()) || (rhs.is_exact() && rhs.terms.is_empty()) {
            return Series::exact_zero();
        }
        let mut floor = None;
        if let (Some(f), Some(t)) = (self.floor, rhs.top_eff()) {
            floor = join_floor(floor, Some(f + t));
        }
        if let (Some(f), Some(t)) = (rhs.floor, self.top_eff()) {
            floor = join_floor(floor, Some(f + t));
        }
        let mut out = Series { terms: BTreeMap::new(), floor };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                if let Some(f) = floor {
                    if e < f {
                        continue;
                    }
                }
                out.put(e, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Series { terms: BTreeMap::new(), floor: self.floor };
        }
        Series {
            terms: self.terms.iter().map(|(e, c)| (*e, c.scale(s))).collect(),
            floor: self.floor,
        }
    }

    pub fn scale_rat(&self, q: &BigRational) -> Self {
        self.scale(&Scalar::from_rational(q.clone()))
    }

    pub fn scale_elem(&self, a: &A, on_left: bool) -> Self {
        let mut out = Series { terms: BTreeMap::new(), floor: self.floor };
        for (e, c) in &self.terms {
            out.put(*e, if on_left { a.mul(c) } else { c.mul(a) });
        }
        out
    }

    /// Multiply by u^k.
    pub fn mul_upow(&self, k: i64) -> Self {
        Series {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
            floor: self.floor.map(|f| f + k),
        }
    }

    /// Substitute u -> -u.
    pub fn negate_arg(&self) -> Self {
        Series {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e.rem_euclid(2) == 0 { c.clone() } else { c.neg() }))
                .collect(),
            floor: self.floor,
        }
    }

    /// Substitute u -> u + a for a commutative shift a (rational or symbolic).
    ///
    /// For terms u^e with e < 0 the binomial expansion is infinite, so a
    /// target floor is required unless the input supplies one.
    pub fn shift_arg(&self, a: &Scalar, want: Option<i64>) -> Self {
        let floor = join_floor(self.floor, want);
        let has_negative = self.terms.keys().next().is_some_and(|&e| e < 0);
        assert!(
            floor.is_some() || !has_negative,
            "argument shift of a series with negative exponents needs a target floor"
        );
        let mut out = Series { terms: BTreeMap::new(), floor };
        let mut apow: Vec<Scalar> = vec![Scalar::one()];
        for (&e, c) in &self.terms {
            if e >= 0 {
                // (u+a)^e, finite
                for k in 0..=e {
                    let kk = (e - k) as u32;
                    while apow.len() <= kk as usize {
                        let next = apow.last().unwrap().mul(a);
                        apow.push(next);
                    }
                    let coeff = apow[kk as usize].scale(&binom(e, kk));
                    out.put(k, c.scale(&coeff));
                }
            } else {
                // (u+a)^e = sum_k C(e,k) a^k u^{e-k}, descending
                let f = floor.expect("checked above");
                let mut k: u32 = 0;
                while e - (k as i64) >= f {
                    while apow.len() <= k as usize {
                        let next = apow.last().unwrap().mul(a);
                        apow.push(next);
                    }
                    let coeff = apow[k as usize].scale(&binom(e, k));
                    out.put(e - k as i64, c.scale(&coeff));
                    k += 1;
                }
            }
        }
        out
    }

    /// Multiplicative inverse.  The top coefficient must be a nonzero
    /// rational multiple of 1.  `want` bounds how deep the expansion goes;
    /// it is mandatory for exact inputs (whose inverse is an infinite
    /// series) and is capped by what the input's floor supports otherwise.
    pub fn invert_to(&self, want: Option<i64>) -> Self {
        let d = self.top().expect("cannot invert the zero series");
        let lead = self
            .coeff(d)
            .try_rational()
            .expect("series inversion needs a rational leading coefficient");
        assert!(!lead.is_zero());
        // Natural attainable floor for truncated input: f - 2d.
        let natural = self.floor.map(|f| f - 2 * d);
        let floor = join_floor(natural, want);
        assert!(
            floor.is_some(),
            "inverting an exact series produces an infinite expansion; supply a target floor"
        );
        let f_out = floor.unwrap();
        // Z = self / (lead * u^d) - 1 has only negative exponents.
        let inv_lead = BigRational::one() / lead.clone();
        let rel_floor = f_out + d; // floor for the relative Neumann sum
        let z = self
            .scale_rat(&inv_lead)
            .mul_upow(-d)
            .sub(&Series::one())
            .truncate_to(rel_floor);
        let mut acc = Series::one().truncate_to(rel_floor);
        let mut pw = Series::one().truncate_to(rel_floor);
        let mut k = 0u32;
        loop {
            pw = pw.mul(&z).neg().truncate_to(rel_floor);
            k += 1;
            if pw.terms.is_empty() {
                break;
            }
            acc = acc.add(&pw);
            assert!(k < 10_000, "Neumann inversion failed to terminate");
        }
        acc.scale_rat(&inv_lead).mul_upow(-d).truncate_to(f_out)
    }

    /// log(self) for a series with top term 1*u^0.  Needs a floor for exact
    /// inputs, as with [`Series::invert_to`].
    pub fn log_to(&self, want: Option<i64>) -> Self {
        assert_eq!(self.top(), Some(0), "log expects leading term at u^0");
        assert_eq!(
            self.coeff(0).try_rational(),
            Some(BigRational::one()),
            "log expects leading coefficient 1"
        );
        let floor = join_floor(self.floor, want);
        let f_out = floor.expect("log of an exact series needs a target floor");
        let y = self.sub(&Series::one()).truncate_to(f_out);
        let mut acc = Series::zero_mod(f_out);
        let mut pw = Series::one().truncate_to(f_out);
        let mut k: i64 = 0;
        loop {
            pw = pw.mul(&y).truncate_to(f_out);
            k += 1;
            if pw.terms.is_empty() {
                break;
            }
            let sign = if k % 2 == 1 { BigRational::one() } else { -BigRational::one() };
            acc = acc.add(&pw.scale_rat(&(sign / big(k))));
            assert!(k < 10_000, "log expansion failed to terminate");
        }
        acc
    }

    /// Formal derivative with respect to t = u^{-1}: sum a_k t^k maps to
    /// sum k a_k t^{k-1}.  All exponents must be <= 0.
    pub fn t_derivative(&self) -> Self {
        assert!(
            self.terms.keys().all(|&e| e <= 0),
            "t-derivative is defined on series in u^{{-1}} only"
        );
        let mut out = Series {
            terms: BTreeMap::new(),
            floor: self.floor.map(|f| f + 1),
        };
        for (&e, c) in &self.terms {
            let k = -e; // exponent of t
            if k == 0 {
                continue;
            }
            out.put(e + 1, c.scale(&Scalar::from_int(k)));
        }
        out
    }

    /// Evaluate an exact Laurent polynomial at a nonzero rational point, or
    /// at zero when no negative exponents occur.
    pub fn eval_u(&self, q: &BigRational) -> A {
        assert!(self.is_exact(), "can only evaluate exact series");
        let mut out = A::zero();
        for (&e, c) in &self.terms {
            let factor = if e >= 0 {
                let mut p = BigRational::one();
                for _ in 0..e {
                    p *= q.clone();
                }
                p
            } else {
                assert!(!q.is_zero(), "pole at zero");
                let mut p = BigRational::one();
                for _ in 0..(-e) {
                    p /= q.clone();
                }
                p
            };
            out = out.add(&c.scale_rat(&factor));
        }
        out
    }

    /// Transport coefficients through a map (e.g. an algebra homomorphism).
    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> Series<B> {
        let mut out = Series { terms: BTreeMap::new(), floor: self.floor };
        for (&e, c) in &self.terms {
            out.put(e, f(c));
        }
        out
    }

    /// Ok(()) iff every known coefficient with exponent >= f_req vanishes AND
    /// the series is actually known down to f_req.  The error carries the
    /// first offending exponent and coefficient as a witness.
    pub fn check_zero_to(&self, f_req: i64) -> Result<(), String> {
        if let Some(f) = self.floor {
            if f > f_req {
                return Err(format!(
                    "series only known down to u^{} but zero-check requested to u^{}",
                    f, f_req
                ));
            }
        }
        for (&e, c) in self.terms.iter().rev() {
            if e < f_req {
                break;
            }
            if !c.is_zero() {
                return Err(format!("nonzero coefficient at u^{}: {:?}", e, c));
            }
        }
        Ok(())
    }

    pub fn eq_to(&self, rhs: &Self, f_req: i64) -> Result<(), String> {
        self.sub(rhs).check_zero_to(f_req)
    }
}

/// Expansion of num(u)/den(u) as a series over any carrier, where num and den
/// are rational Laurent polynomials and den has a rational leading term.
pub fn rational_fn<A: Ring>(
    num: &[(i64, BigRational)],
    den: &[(i64, BigRational)],
    floor: i64,
) -> Series<A> {
    let n: Series<A> =
        Series::from_terms(num.iter().map(|(e, q)| (*e, A::from_scalar(&Scalar::from_rational(q.clone())))), None);
    let d: Series<A> =
        Series::from_terms(den.iter().map(|(e, q)| (*e, A::from_scalar(&Scalar::from_rational(q.clone())))), None);
    // A positive numerator power raises the contamination boundary, so the
    // denominator must be inverted correspondingly deeper.
    let spare = n.top().unwrap_or(0).max(0);
    n.mul(&d.invert_to(Some(floor - spare)))
}

impl<A: Ring> Ring for Series<A> {
    fn zero() -> Self {
        Series::exact_zero()
    }
    fn one() -> Self {
        Series::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Series::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Series::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Series::mul(self, rhs)
    }
    fn from_scalar(s: &Scalar) -> Self {
        Series::term(0, A::from_scalar(s))
    }
    fn scale(&self, s: &Scalar) -> Self {
        Series::scale(self, s)
    }
    fn try_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&0) {
                return c.try_rational();
            }
        }
        None
    }
}

impl<A: Ring + fmt::Display> fmt::Display for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
                if idx > 0 {
                    write!(f, " + ")?;
                }
                if *e == 0 {
                    write!(f, "{}", c)?;
                } else {
                    write!(f, "({})*u^{}", c, e)?;
                }
            }
        }
        if let Some(fl) = self.floor {
            write!(f, " + O(u^{})", fl - 1)?;
        }
        Ok(())
    }
}

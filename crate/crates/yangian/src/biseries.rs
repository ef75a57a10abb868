//! Truncated Laurent series in two variables `u`, `v`.
//!
//! Two-variable relations (the defining commutation relation in its
//! generating-series form, reflection-equation checks, the second sl2
//! realization) are verified here after clearing denominators such as
//! `(u - v)^{-1}`, so every check is a polynomial-coefficient comparison.
//! Floors are tracked per variable exactly as in [`crate::series`]: the
//! known region is the rectangle `{e_u >= floor_u, e_v >= floor_v}`.

use std::collections::BTreeMap;

use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::series::{join_floor, Series};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiSeries<A: Ring> {
    terms: BTreeMap<(i64, i64), A>,
    floor_u: Option<i64>,
    floor_v: Option<i64>,
}

impl<A: Ring> BiSeries<A> {
    pub fn exact_zero() -> Self {
        BiSeries { terms: BTreeMap::new(), floor_u: None, floor_v: None }
    }

    pub fn one() -> Self {
        BiSeries::term(0, 0, A::one())
    }

    pub fn term(eu: i64, ev: i64, c: A) -> Self {
        let mut out = BiSeries::exact_zero();
        out.put(eu, ev, c);
        out
    }

    fn put(&mut self, eu: i64, ev: i64, c: A) {
        if c.is_zero() {
            return;
        }
        if let Some(f) = self.floor_u {
            if eu < f {
                return;
            }
        }
        if let Some(f) = self.floor_v {
            if ev < f {
                return;
            }
        }
        match self.terms.entry((eu, ev)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let s = slot.get().add(&c);
                if s.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
    }

    /// Inject a one-variable series as a series in u (resp. v).
    pub fn from_u(s: &Series<A>) -> Self {
        let mut out = BiSeries { terms: BTreeMap::new(), floor_u: s.floor(), floor_v: None };
        for (&e, c) in s.iter() {
            out.put(e, 0, c.clone());
        }
        out
    }

    pub fn from_v(s: &Series<A>) -> Self {
        let mut out = BiSeries { terms: BTreeMap::new(), floor_u: None, floor_v: s.floor() };
        for (&e, c) in s.iter() {
            out.put(0, e, c.clone());
        }
        out
    }

    pub fn coeff(&self, eu: i64, ev: i64) -> A {
        if let Some(f) = self.floor_u {
            assert!(eu >= f, "u-coefficient below floor");
        }
        if let Some(f) = self.floor_v {
            assert!(ev >= f, "v-coefficient below floor");
        }
        self.terms.get(&(eu, ev)).cloned().unwrap_or_else(A::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = BiSeries {
            terms: BTreeMap::new(),
            floor_u: join_floor(self.floor_u, rhs.floor_u),
            floor_v: join_floor(self.floor_v, rhs.floor_v),
        };
        for (&(eu, ev), c) in &self.terms {
            out.put(eu, ev, c.clone());
        }
        for (&(eu, ev), c) in &rhs.terms {
            out.put(eu, ev, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        BiSeries {
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
            floor_u: self.floor_u,
            floor_v: self.floor_v,
        }
    }

    fn tops(&self) -> Option<(i64, i64)> {
        if self.terms.is_empty() && self.floor_u.is_none() && self.floor_v.is_none() {
            return None; // exact zero
        }
        let mut tu = i64::MIN;
        let mut tv = i64::MIN;
        for &(eu, ev) in self.terms.keys() {
            tu = tu.max(eu);
            tv = tv.max(ev);
        }
        if let Some(f) = self.floor_u {
            tu = tu.max(f - 1);
        }
        if let Some(f) = self.floor_v {
            tv = tv.max(f - 1);
        }
        // A variable with neither terms nor a floor only occurs for series
        // embedded from the other variable, whose content sits at exponent 0.
        if tu == i64::MIN {
            tu = 0;
        }
        if tv == i64::MIN {
            tv = 0;
        }
        Some((tu, tv))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (ta, tb) = match (self.tops(), rhs.tops()) {
            (Some(a), Some(b)) => (a, b),
            _ => return BiSeries::exact_zero(),
        };
        let mut floor_u = None;
        let mut floor_v = None;
        if let Some(f) = self.floor_u {
            floor_u = join_floor(floor_u, Some(f + tb.0));
        }
        if let Some(f) = rhs.floor_u {
            floor_u = join_floor(floor_u, Some(f + ta.0));
        }
        if let Some(f) = self.floor_v {
            floor_v = join_floor(floor_v, Some(f + tb.1));
        }
        if let Some(f) = rhs.floor_v {
            floor_v = join_floor(floor_v, Some(f + ta.1));
        }
        let mut out = BiSeries { terms: BTreeMap::new(), floor_u, floor_v };
        for (&(u1, v1), c1) in &self.terms {
            for (&(u2, v2), c2) in &rhs.terms {
                out.put(u1 + u2, v1 + v2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return BiSeries { terms: BTreeMap::new(), floor_u: self.floor_u, floor_v: self.floor_v };
        }
        BiSeries {
            terms: self.terms.iter().map(|(&k, c)| (k, c.scale(s))).collect(),
            floor_u: self.floor_u,
            floor_v: self.floor_v,
        }
    }

    /// The exact polynomial u - v.
    pub fn u_minus_v() -> Self {
        BiSeries::term(1, 0, A::one()).add(&BiSeries::term(0, 1, A::one().neg()))
    }

    /// The exact polynomial u + v.
    pub fn u_plus_v() -> Self {
        BiSeries::term(1, 0, A::one()).add(&BiSeries::term(0, 1, A::one()))
    }

    pub fn check_zero_to(&self, fu: i64, fv: i64) -> Result<(), String> {
        if let Some(f) = self.floor_u {
            if f > fu {
                return Err(format!("u-floor {} too shallow for requested {}", f, fu));
            }
        }
        if let Some(f) = self.floor_v {
            if f > fv {
                return Err(format!("v-floor {} too shallow for requested {}", f, fv));
            }
        }
        for (&(eu, ev), c) in &self.terms {
            if eu >= fu && ev >= fv && !c.is_zero() {
                return Err(format!("nonzero coefficient at u^{} v^{}: {:?}", eu, ev, c));
            }
        }
        Ok(())
    }

    pub fn eq_to(&self, rhs: &Self, fu: i64, fv: i64) -> Result<(), String> {
        self.sub(rhs).check_zero_to(fu, fv)
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> BiSeries<B> {
        let mut out = BiSeries { terms: BTreeMap::new(), floor_u: self.floor_u, floor_v: self.floor_v };
        for (&(eu, ev), c) in &self.terms {
            out.put(eu, ev, f(c));
        }
        out
    }
}

impl<A: Ring> Ring for BiSeries<A> {
    fn zero() -> Self {
        BiSeries::exact_zero()
    }
    fn one() -> Self {
        BiSeries::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        BiSeries::add(self, rhs)
    }
    fn neg(&self) -> Self {
        BiSeries::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        BiSeries::mul(self, rhs)
    }
    fn from_scalar(s: &Scalar) -> Self {
        BiSeries::term(0, 0, A::from_scalar(s))
    }
    fn scale(&self, s: &Scalar) -> Self {
        BiSeries::scale(self, s)
    }
    fn try_rational(&self) -> Option<num::rational::BigRational> {
        if self.terms.is_empty() {
            return Some(num::rational::BigRational::from_integer(0.into()));
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&(0, 0)) {
                return c.try_rational();
            }
        }
        None
    }
}

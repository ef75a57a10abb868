//! Exact scalars: multivariate polynomials over the rationals.
//!
//! Every coefficient in the workspace bottoms out in a [`Scalar`]: a canonical
//! linear combination of monomials in interned commuting indeterminates with
//! `BigRational` coefficients.  Canonical form means the term map never stores
//! a zero coefficient, so equality of scalars is structural equality.
//!
//! Indeterminates are interned process-wide by name ("lam1", "f2", "a", ...),
//! which keeps monomials small (pairs of `u32`) and comparison cheap.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::RwLock;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use once_cell::sync::Lazy;
use smallvec::SmallVec;

static SYMBOLS: Lazy<RwLock<SymbolTable>> = Lazy::new(|| RwLock::new(SymbolTable::default()));

#[derive(Default)]
struct SymbolTable {
    names: Vec<String>,
    ids: std::collections::HashMap<String, u32>,
}

/// Intern a symbol name, returning its stable id.
pub fn sym(name: &str) -> u32 {
    if let Some(&id) = SYMBOLS.read().unwrap().ids.get(name) {
        return id;
    }
    let mut table = SYMBOLS.write().unwrap();
    if let Some(&id) = table.ids.get(name) {
        return id;
    }
    let id = table.names.len() as u32;
    table.names.push(name.to_string());
    table.ids.insert(name.to_string(), id);
    id
}

/// Name of an interned symbol.
pub fn sym_name(id: u32) -> String {
    SYMBOLS.read().unwrap().names[id as usize].clone()
}

/// A power product of interned symbols, kept sorted by symbol id with all
/// exponents positive.  The empty monomial is the multiplicative unit.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(SmallVec<[(u32, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(id: u32, pow: u32) -> Self {
        if pow == 0 {
            Monomial::one()
        } else {
            Monomial(SmallVec::from_slice(&[(id, pow)]))
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let mut out: SmallVec<[(u32, u32); 4]> = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < rhs.0.len() {
            match self.0[i].0.cmp(&rhs.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(rhs.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + rhs.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&rhs.0[j..]);
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic order: total degree first, then the factor list.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Canonical multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(big(n))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Monomial::one(), q);
        }
        Scalar { terms }
    }

    /// The polynomial consisting of the single indeterminate `name`.
    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(sym(name), 1), BigRational::one());
        Scalar { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = Scalar::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Some(q) iff the polynomial is the constant q (including zero).
    pub fn try_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Substitute polynomials for symbols; symbols absent from the map pass
    /// through untouched.
    pub fn subst(&self, map: &std::collections::HashMap<u32, Scalar>) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = Scalar::from_rational(c.clone());
            for &(id, e) in m.factors() {
                let factor = match map.get(&id) {
                    Some(s) => s.pow(e),
                    None => Scalar {
                        terms: BTreeMap::from([(Monomial::var(id, e), BigRational::one())]),
                    },
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let positive = c.is_positive();
            if idx == 0 {
                if !positive {
                    write!(f, "-")?;
                }
            } else if positive {
                write!(f, " + ")?;
            } else {
                write!(f, " - ")?;
            }
            let abs = c.abs();
            let show_coeff = !abs.is_one() || m.is_one();
            if show_coeff {
                write!(f, "{}", abs)?;
            }
            for (pos, &(id, e)) in m.factors().iter().enumerate() {
                if show_coeff || pos > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{}", sym_name(id))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

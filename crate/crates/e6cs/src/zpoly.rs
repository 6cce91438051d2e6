//! Sparse polynomials in the fundamental characters z1..z6 over k-rational
//! coefficients.
//!
//! Terms map an exponent vector ([`Weight`], entries >= 0) to a nonzero
//! [`KRat`]. The map is a `BTreeMap` in graded-lex order, so iteration order
//! is canonical; printing walks it in reverse (highest terms first).

use crate::kappa::{KPoly, KRat};
use crate::weight::{Weight, RANK};
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZPoly {
    terms: BTreeMap<Weight, KRat>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::monomial(Weight::ZERO, KRat::one())
    }

    pub fn constant(c: KRat) -> ZPoly {
        ZPoly::monomial(Weight::ZERO, c)
    }

    /// The variable z_i, 1-based.
    pub fn var(i: usize) -> ZPoly {
        ZPoly::monomial(Weight::fundamental(i), KRat::one())
    }

    pub fn monomial(exp: Weight, coeff: KRat) -> ZPoly {
        assert!(exp.is_dominant(), "negative exponent in z-monomial: {exp}");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        ZPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &KRat)> {
        self.terms.iter()
    }

    /// Terms from the canonically largest exponent down.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Weight, &KRat)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &Weight) -> KRat {
        self.terms.get(exp).cloned().unwrap_or_else(KRat::zero)
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, exp: Weight, coeff: &KRat) {
        assert!(exp.is_dominant(), "negative exponent in z-monomial: {exp}");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + coeff;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &KRat) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Formal partial derivative with respect to z_j, 1-based.
    pub fn partial(&self, j: usize) -> ZPoly {
        assert!((1..=RANK).contains(&j), "variable index {j} out of 1..=6");
        let mut out = ZPoly::zero();
        for (exp, c) in &self.terms {
            let e = exp.0[j - 1];
            if e == 0 {
                continue;
            }
            let mut dexp = *exp;
            dexp.0[j - 1] -= 1;
            out.add_term(dexp, &(c * &KRat::from_int(e as i64)));
        }
        out
    }

    /// Substitute an exact rational for k in every coefficient.
    /// A vanishing denominator reports the offending term.
    pub fn eval_kappa(&self, x: &BigRational) -> Result<ZPoly, PoleError> {
        let mut out = ZPoly::zero();
        for (exp, c) in &self.terms {
            match c.eval(x) {
                Some(v) => out.add_term(*exp, &KRat::from_rational(&v)),
                None => {
                    return Err(PoleError {
                        kappa: x.clone(),
                        exp: *exp,
                        den: c.den(),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Apply the diagram automorphism z1<->z6, z3<->z5 to the exponents.
    pub fn dual(&self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(e, c)| (e.dual(), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        let mut acc = ZPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// z^m for a dominant exponent vector m.
    pub fn from_exponent(m: &Weight) -> ZPoly {
        ZPoly::monomial(*m, KRat::one())
    }
}

/// Evaluation hit a root of a coefficient denominator.
#[derive(Debug, Clone)]
pub struct PoleError {
    pub kappa: BigRational,
    pub exp: Weight,
    pub den: KPoly,
}

impl fmt::Display for PoleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pole at k = {}: coefficient of z^{} has denominator {}",
            self.kappa,
            self.exp.label(),
            self.den
        )
    }
}

impl std::error::Error for PoleError {}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(*exp, c);
        }
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(*exp, &-c);
        }
        out
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, other: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Canonical text: terms in descending graded-lex order, coefficient and
/// monomial joined by `*`, unit coefficients elided.
impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms_desc() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_str(exp);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_str(exp: &Weight) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exp.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(format!("z{}", i + 1));
        } else {
            parts.push(format!("z{}^{}", i + 1, e));
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(m: [i32; 6]) -> Weight {
        Weight(m)
    }

    #[test]
    fn product_of_variables() {
        let p = &ZPoly::var(1) * &ZPoly::var(6);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&w([1, 0, 0, 0, 0, 1])), KRat::one());
    }

    #[test]
    fn cancellation_in_sum() {
        // (z1^2 - 2 z3) + 2 z3 = z1^2
        let z1sq = ZPoly::var(1).pow(2);
        let two_z3 = ZPoly::monomial(w([0, 0, 1, 0, 0, 0]), KRat::from_int(2));
        let p = &(&z1sq - &two_z3) + &two_z3;
        assert_eq!(p, z1sq);
    }

    #[test]
    fn multiplicative_identity() {
        let mut p = ZPoly::var(1);
        p = &p * &ZPoly::var(6);
        p.add_term(w([0, 1, 0, 0, 0, 0]), &KRat::from_int(-6));
        p.add_term(Weight::ZERO, &KRat::from_int(9));
        assert_eq!(&p * &ZPoly::one(), p);
    }

    #[test]
    fn partial_derivatives() {
        let z1sq = ZPoly::var(1).pow(2);
        let d = z1sq.partial(1);
        assert_eq!(d.coeff(&w([1, 0, 0, 0, 0, 0])), KRat::from_int(2));
        let z1z6 = &ZPoly::var(1) * &ZPoly::var(6);
        assert!(z1z6.partial(3).is_zero());
        assert_eq!(z1z6.partial(1).partial(6), ZPoly::one());
    }

    #[test]
    fn eval_pole_reports_term() {
        let c = KRat::new(KPoly::from_ints(&[1]), KPoly::from_ints(&[1, 1]));
        let p = ZPoly::monomial(w([0, 1, 0, 0, 0, 0]), c);
        let err = p.eval_kappa(&BigRational::from(BigInt::from(-1))).unwrap_err();
        assert_eq!(err.exp, w([0, 1, 0, 0, 0, 0]));
        assert_eq!(err.den.to_string(), "1 + k");
    }

    #[test]
    fn display_canonical_order() {
        let mut p = ZPoly::var(1).pow(2);
        p.add_term(w([0, 0, 1, 0, 0, 0]), &KRat::from_int(-2));
        assert_eq!(p.to_string(), "z1^2 - 2*z3");
        let mut q = ZPoly::zero();
        q.add_term(w([0, 1, 0, 0, 0, 0]), &KRat::from_int(-6));
        q.add_term(w([1, 0, 0, 0, 0, 1]), &KRat::one());
        q.add_term(Weight::ZERO, &KRat::from_int(9));
        assert_eq!(q.to_string(), "z1*z6 - 6*z2 + 9");
    }
}

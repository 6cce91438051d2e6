//! Exact univariate arithmetic in the coupling constant.
//!
//! [`KPoly`] is a dense integer-coefficient polynomial in k (trailing zeros
//! stripped, so the last stored coefficient is nonzero unless the polynomial
//! is zero). [`KRat`] is a quotient of integer polynomials kept reduced,
//! with the denominator stored factored: a positive integer content times
//! primitive factors with positive leading coefficients. Every denominator
//! this crate produces is a product of integer-linear factors (eigenvalue
//! differences are linear in k), which keeps sums and products cheap: no
//! polynomial gcd is ever taken, only divisibility tests against the stored
//! factors.
//!
//! Denominators arriving as expanded polynomials (the text parser, general
//! construction) are split by rational-root search; in the unexpected case
//! of a factor with no rational roots the remainder is kept as one opaque
//! factor, which stays correct and merely costs the structural-equality fast
//! path ([`PartialEq`] falls back to cross-multiplication).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

/// Integer-coefficient polynomial in k, lowest power first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KPoly {
    coeffs: Vec<BigInt>,
}

impl KPoly {
    pub fn zero() -> KPoly {
        KPoly { coeffs: vec![] }
    }

    pub fn one() -> KPoly {
        KPoly::constant(1)
    }

    /// The monomial c * k^pow.
    pub fn monomial(c: BigInt, pow: usize) -> KPoly {
        if c.is_zero() {
            return KPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); pow + 1];
        coeffs[pow] = c;
        KPoly { coeffs }
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> KPoly {
        KPoly::monomial(c.into(), 0)
    }

    /// The variable k itself.
    pub fn k() -> KPoly {
        KPoly::monomial(BigInt::one(), 1)
    }

    /// c0 + c1*k + c2*k^2 + ... from small integers.
    pub fn from_ints(cs: &[i64]) -> KPoly {
        KPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> KPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, pow: usize) -> BigInt {
        self.coeffs.get(pow).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and force a positive leading coefficient.
    pub fn primitive_part(&self) -> KPoly {
        if self.is_zero() {
            return KPoly::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_negative() {
            g = -g;
        }
        KPoly::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn mul_int(&self, c: &BigInt) -> KPoly {
        if c.is_zero() {
            return KPoly::zero();
        }
        KPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, mut e: u32) -> KPoly {
        let mut base = self.clone();
        let mut acc = KPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluate at an exact rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// s^deg * p(r/s) as an integer; zero exactly when r/s is a root.
    fn eval_scaled(&self, r: &BigInt, s: &BigInt) -> BigInt {
        let Some(d) = self.degree() else { return BigInt::zero() };
        let mut acc = BigInt::zero();
        let mut rp = BigInt::one();
        let mut spows = vec![BigInt::one()];
        for _ in 0..d {
            spows.push(spows.last().unwrap() * s);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &rp * &spows[d - i];
            }
            rp *= r;
        }
        acc
    }

    /// Quotient if `d` divides exactly over the integers, else None.
    pub fn try_exact_div(&self, d: &KPoly) -> Option<KPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(KPoly::zero());
        }
        let ds = self.degree().unwrap();
        let dd = d.degree().unwrap();
        if ds < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        let lc = d.leading_coeff();
        for i in (0..q.len()).rev() {
            let (qi, r) = rem[i + dd].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= c * &qi;
            }
            q[i] = qi;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(KPoly::from_coeffs(q))
        } else {
            None
        }
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &KPoly) -> KPoly {
        self.try_exact_div(d).expect("exact_div: nonzero remainder")
    }

    /// Pseudo-remainder of self by d: lc(d)^(deg s - deg d + 1) * s = q*d + r.
    fn pseudo_rem(&self, d: &KPoly) -> KPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading_coeff();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            let rl = r.leading_coeff();
            let mut coeffs = vec![BigInt::zero(); dr + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &lc;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                coeffs[i + shift] -= c * &rl;
            }
            r = KPoly::from_coeffs(coeffs);
        }
        r
    }

    /// Gcd with positive leading coefficient, via content extraction and a
    /// primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &KPoly) -> KPoly {
        if self.is_zero() {
            return other.primitive_part().mul_int(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().mul_int(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let mut r0 = self.primitive_part();
        let mut r1 = other.primitive_part();
        if r0.degree() < r1.degree() {
            std::mem::swap(&mut r0, &mut r1);
        }
        while !r1.is_zero() {
            let r = r0.pseudo_rem(&r1).primitive_part();
            r0 = r1;
            r1 = r;
        }
        r0.mul_int(&c)
    }
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        KPoly::from_coeffs(coeffs)
    }
}

impl Sub for &KPoly {
    type Output = KPoly;
    fn sub(self, other: &KPoly) -> KPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        KPoly::from_coeffs(coeffs)
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, other: &KPoly) -> KPoly {
        if self.is_zero() || other.is_zero() {
            return KPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        KPoly::from_coeffs(coeffs)
    }
}

impl Neg for &KPoly {
    type Output = KPoly;
    fn neg(self) -> KPoly {
        KPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Canonical textual form: lowest power first, zero terms skipped,
/// unit coefficients on k-powers elided. The zero polynomial prints "0".
impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (pow, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if pow == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", pow_str(pow))?;
            } else {
                write!(f, "{mag}*{}", pow_str(pow))?;
            }
        }
        Ok(())
    }
}

fn pow_str(pow: usize) -> String {
    if pow == 1 {
        "k".to_string()
    } else {
        format!("k^{pow}")
    }
}

/// All positive divisors, or None when the factoring effort cap is hit.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let cap = BigInt::from(1_000_000);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            primes.push((p.clone(), e));
        }
        p += 1;
        if p > cap {
            return None;
        }
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let base = divs.clone();
        let mut pe = BigInt::one();
        for _ in 0..e {
            pe *= &p;
            for d in &base {
                divs.push(d * &pe);
            }
        }
        if divs.len() > 4096 {
            return None;
        }
    }
    Some(divs)
}

/// Factor a positive-leading-coefficient polynomial into an integer content
/// and primitive factors: powers of k, linear factors found by rational-root
/// search, and at most one opaque remainder.
fn factor_positive(p: &KPoly) -> (BigInt, BTreeMap<KPoly, u32>) {
    debug_assert!(p.leading_coeff().is_positive());
    let den_int = p.content();
    let mut rem = p.primitive_part();
    let mut factors: BTreeMap<KPoly, u32> = BTreeMap::new();
    // powers of k
    while rem.degree().unwrap_or(0) >= 1 && rem.coeff(0).is_zero() {
        rem = rem.exact_div(&KPoly::k());
        *factors.entry(KPoly::k()).or_insert(0) += 1;
    }
    'outer: while let Some(d) = rem.degree() {
        if d == 0 {
            break; // primitive positive constant is 1
        }
        if d == 1 {
            *factors.entry(rem.clone()).or_insert(0) += 1;
            break;
        }
        let c0 = rem.coeff(0);
        let lc = rem.leading_coeff();
        let (Some(rs), Some(ss)) = (divisors(&c0), divisors(&lc)) else {
            *factors.entry(rem.clone()).or_insert(0) += 1;
            break;
        };
        for s in &ss {
            for r in &rs {
                for signed in [r.clone(), -r] {
                    if signed.gcd(s) != BigInt::one() {
                        continue;
                    }
                    if rem.eval_scaled(&signed, s).is_zero() {
                        // root signed/s, factor (s*k - signed)
                        let f = KPoly::from_coeffs(vec![-signed, s.clone()]);
                        rem = rem.exact_div(&f);
                        *factors.entry(f).or_insert(0) += 1;
                        continue 'outer;
                    }
                }
            }
        }
        // no rational root: keep the remainder opaque
        *factors.entry(rem.clone()).or_insert(0) += 1;
        break;
    }
    (den_int, factors)
}

/// Reduced quotient of integer polynomials, denominator stored factored.
#[derive(Clone, Eq, Debug)]
pub struct KRat {
    num: KPoly,
    den_int: BigInt,
    den_factors: BTreeMap<KPoly, u32>,
}

impl KRat {
    pub fn zero() -> KRat {
        KRat { num: KPoly::zero(), den_int: BigInt::one(), den_factors: BTreeMap::new() }
    }

    pub fn one() -> KRat {
        KRat { num: KPoly::one(), den_int: BigInt::one(), den_factors: BTreeMap::new() }
    }

    /// Build and canonicalize num/den. Panics on a zero denominator.
    pub fn new(num: KPoly, den: KPoly) -> KRat {
        assert!(!den.is_zero(), "KRat with zero denominator");
        let (num, den) = if den.leading_coeff().is_negative() {
            (-&num, -&den)
        } else {
            (num, den)
        };
        let (den_int, den_factors) = factor_positive(&den);
        let mut r = KRat { num, den_int, den_factors };
        r.reduce();
        r
    }

    pub fn from_poly(p: KPoly) -> KRat {
        KRat { num: p, den_int: BigInt::one(), den_factors: BTreeMap::new() }
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> KRat {
        KRat::from_poly(KPoly::constant(c))
    }

    pub fn from_frac<T: Into<BigInt>, U: Into<BigInt>>(p: T, q: U) -> KRat {
        KRat::new(KPoly::constant(p), KPoly::constant(q))
    }

    pub fn from_rational(r: &BigRational) -> KRat {
        KRat::new(
            KPoly::monomial(r.numer().clone(), 0),
            KPoly::monomial(r.denom().clone(), 0),
        )
    }

    pub fn num(&self) -> &KPoly {
        &self.num
    }

    /// Denominator as an expanded polynomial (positive leading coefficient).
    pub fn den(&self) -> KPoly {
        let mut d = KPoly::constant(self.den_int.clone());
        for (f, m) in &self.den_factors {
            d = &d * &f.pow(*m);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den_int.is_one() && self.den_factors.is_empty()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den_int = BigInt::one();
            self.den_factors.clear();
            return;
        }
        let mut keys: Vec<KPoly> = self.den_factors.keys().cloned().collect();
        for f in keys.drain(..) {
            while *self.den_factors.get(&f).unwrap_or(&0) > 0 {
                let divisible = if f.degree() == Some(1) {
                    // p divisible by (a + b k) iff p(-a/b) = 0
                    self.num.eval_scaled(&-f.coeff(0), &f.coeff(1)).is_zero()
                } else {
                    true // settled by the division attempt below
                };
                if !divisible {
                    break;
                }
                match self.num.try_exact_div(&f) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den_factors.get_mut(&f).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den_factors.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
        let g = self.num.content().gcd(&self.den_int);
        if !g.is_one() {
            self.num = KPoly::from_coeffs(self.num.coeffs.iter().map(|c| c / &g).collect());
            self.den_int /= &g;
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self) -> KRat {
        assert!(!self.is_zero(), "inverse of zero KRat");
        KRat::new(self.den(), self.num.clone())
    }

    /// True when the stored pair already satisfies the canonical-form
    /// invariants.
    pub fn is_canonical(&self) -> bool {
        let mut c = self.clone();
        c.reduce();
        c.num == self.num && c.den_int == self.den_int && c.den_factors == self.den_factors
    }

    /// Evaluate at an exact rational point; None if the denominator vanishes.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let mut d = BigRational::from(self.den_int.clone());
        for (f, m) in &self.den_factors {
            let v = f.eval(x);
            if v.is_zero() {
                return None;
            }
            for _ in 0..*m {
                d *= &v;
            }
        }
        Some(self.num.eval(x) / d)
    }

    /// Constant value if the fraction is k-free.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den_factors.is_empty() {
            Some(BigRational::new(self.num.coeff(0), self.den_int.clone()))
        } else {
            None
        }
    }

    /// Sign of the numerator's leading coefficient (denominator is positive).
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_negative()
    }

    pub fn abs(&self) -> KRat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialEq for KRat {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num
            && self.den_int == other.den_int
            && self.den_factors == other.den_factors
        {
            return true;
        }
        // differently-grouped opaque factors still compare by value
        &self.num * &other.den() == &other.num * &self.den()
    }
}

impl Add for &KRat {
    type Output = KRat;
    fn add(self, other: &KRat) -> KRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // common denominator: lcm of contents, max multiplicity per factor
        let g = self.den_int.gcd(&other.den_int);
        let lcm_int = &self.den_int / &g * &other.den_int;
        let mut factors: BTreeMap<KPoly, u32> = self.den_factors.clone();
        for (f, m) in &other.den_factors {
            let e = factors.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
        let scale = |num: &KPoly, den_int: &BigInt, dens: &BTreeMap<KPoly, u32>| -> KPoly {
            let mut p = num.mul_int(&(&lcm_int / den_int));
            for (f, m) in &factors {
                let have = dens.get(f).copied().unwrap_or(0);
                for _ in have..*m {
                    p = &p * f;
                }
            }
            p
        };
        let num = &scale(&self.num, &self.den_int, &self.den_factors)
            + &scale(&other.num, &other.den_int, &other.den_factors);
        let mut r = KRat { num, den_int: lcm_int, den_factors: factors };
        r.reduce();
        r
    }
}

impl Sub for &KRat {
    type Output = KRat;
    fn sub(self, other: &KRat) -> KRat {
        self + &(-other)
    }
}

impl Mul for &KRat {
    type Output = KRat;
    fn mul(self, other: &KRat) -> KRat {
        if self.is_zero() || other.is_zero() {
            return KRat::zero();
        }
        let mut factors = self.den_factors.clone();
        for (f, m) in &other.den_factors {
            *factors.entry(f.clone()).or_insert(0) += m;
        }
        let mut r = KRat {
            num: &self.num * &other.num,
            den_int: &self.den_int * &other.den_int,
            den_factors: factors,
        };
        r.reduce();
        r
    }
}

impl Div for &KRat {
    type Output = KRat;
    fn div(self, other: &KRat) -> KRat {
        self * &other.inv()
    }
}

impl Neg for &KRat {
    type Output = KRat;
    fn neg(self) -> KRat {
        KRat {
            num: -&self.num,
            den_int: self.den_int.clone(),
            den_factors: self.den_factors.clone(),
        }
    }
}

impl AddAssign<&KRat> for KRat {
    fn add_assign(&mut self, other: &KRat) {
        *self = &*self + other;
    }
}

/// Canonical form per the text grammar: bare numerator when the denominator
/// is one (parenthesized if it has several terms), otherwise `(num)/(den)`.
impl fmt::Display for KRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nterms = self.num.coeffs().iter().filter(|c| !c.is_zero()).count();
        if self.den_int.is_one() && self.den_factors.is_empty() {
            if nterms > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kr(num: &[i64], den: &[i64]) -> KRat {
        KRat::new(KPoly::from_ints(num), KPoly::from_ints(den))
    }

    #[test]
    fn common_denominator_sum() {
        // 1/(1+k) + k/(1+k) = 1
        let a = kr(&[1], &[1, 1]);
        let b = kr(&[0, 1], &[1, 1]);
        assert_eq!(&a + &b, KRat::one());
    }

    #[test]
    fn inverse_product() {
        // (1+k) * 1/(1+k) = 1
        let p = KRat::from_poly(KPoly::from_ints(&[1, 1]));
        assert_eq!(&p * &p.inv(), KRat::one());
    }

    #[test]
    fn cancellation() {
        // (6/(1+5k)) * ((1+5k)/(1+8k)) = 6/(1+8k)
        let a = kr(&[6], &[1, 5]);
        let b = kr(&[1, 5], &[1, 8]);
        assert_eq!(&a * &b, kr(&[6], &[1, 8]));
    }

    #[test]
    fn canonical_sign() {
        // 1/(-1-k) normalizes to (-1)/(1+k)
        let a = kr(&[1], &[-1, -1]);
        assert_eq!(a.den().leading_coeff(), BigInt::from(1));
        assert_eq!(a, kr(&[-1], &[1, 1]));
        assert!(a.is_canonical());
    }

    #[test]
    fn factored_reduction() {
        // (1+k)(1+2k) / (1+k)(1+3k) reduces
        let num = &KPoly::from_ints(&[1, 1]) * &KPoly::from_ints(&[1, 2]);
        let den = &KPoly::from_ints(&[1, 1]) * &KPoly::from_ints(&[1, 3]);
        assert_eq!(KRat::new(num, den), kr(&[1, 2], &[1, 3]));
        // powers and integer content: 6(1+2k)^2 / (2(1+2k)(2+4k)) = 3/2
        let num = KPoly::from_ints(&[1, 2]).pow(2).mul_int(&BigInt::from(6));
        let den = &KPoly::from_ints(&[2, 4]) * &KPoly::from_ints(&[2, 4]);
        assert_eq!(KRat::new(num, den), kr(&[3], &[2]));
    }

    #[test]
    fn eval_and_pole() {
        let a = kr(&[1], &[1, 1]); // 1/(1+k)
        let minus_one = BigRational::from(BigInt::from(-1));
        assert!(a.eval(&minus_one).is_none());
        let one = BigRational::from(BigInt::from(1));
        assert_eq!(a.eval(&one).unwrap(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(kr(&[-6], &[1]).to_string(), "-6");
        assert_eq!(kr(&[8, 96], &[3]).to_string(), "(8 + 96*k)/(3)");
        assert_eq!(kr(&[6], &[1, 5]).to_string(), "(6)/(1 + 5*k)");
        assert_eq!(KPoly::from_ints(&[0, -1, 0, 2]).to_string(), "-k + 2*k^3");
    }

    #[test]
    fn k_power_denominators() {
        // 6 k^2 (1+3k) / (4 k^3) = 3(1+3k)/(2k)
        let num = KPoly::from_coeffs(vec![0.into(), 0.into(), 6.into(), 18.into()]);
        let den = KPoly::monomial(BigInt::from(4), 3);
        let r = KRat::new(num, den);
        assert_eq!(r.to_string(), "(3 + 9*k)/(2*k)");
    }

    #[test]
    fn opaque_factor_fallback_compares_by_value() {
        // 1 + k + k^2 has no rational roots
        let q = KPoly::from_ints(&[1, 1, 1]);
        let a = KRat::new(KPoly::one(), q.clone());
        let b = KRat::new(KPoly::from_ints(&[2]), q.mul_int(&BigInt::from(2)));
        assert_eq!(a, b);
        assert_eq!(&a * &KRat::from_poly(q), KRat::one());
    }

    #[test]
    fn gcd_still_available() {
        let a = &KPoly::from_ints(&[1, 1]) * &KPoly::from_ints(&[1, 2]);
        let b = &KPoly::from_ints(&[1, 1]) * &KPoly::from_ints(&[1, 3]);
        assert_eq!(a.gcd(&b), KPoly::from_ints(&[1, 1]));
    }
}

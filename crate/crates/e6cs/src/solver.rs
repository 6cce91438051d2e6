//! Polynomial eigenfunctions of the operator, with symbolic-k coefficients.
//!
//! An eigenpolynomial with dominant label m has unit coefficient on z^m and
//! support {p >= 0 : m - p in the non-negative root lattice}. Two
//! independent routes are provided:
//!
//! - `solve_iterative`: build coefficients level by level in the height of
//!   the drop mu = m - p, via
//!   `c_mu = [sum_{beta != 0} k_{beta, m-(mu-beta)} c_{mu-beta}] / (eps_m - eps_{m-mu})`.
//!   The denominator is nonzero for mu != 0 because its linear-in-k part is
//!   4 ht(mu).
//! - `solve_projection`: apply `prod_{mu} (Delta - eps_mu)` over the dominant
//!   weights mu strictly below m to the monomial z^m, then normalize; each
//!   factor annihilates the corresponding eigenpolynomial in the expansion
//!   of z^m.

use crate::kappa::KRat;
use crate::operator::{epsilon, operator};
use crate::orbits::dominant_weights_below;
use crate::weight::{RootVec, Weight, RANK};
use crate::zpoly::ZPoly;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Iterative,
    Projection,
}

pub struct EigenPolynomial {
    pub label: Weight,
    pub poly: ZPoly,
    pub method: Method,
}

impl EigenPolynomial {
    /// Residual of the eigen-equation, identically zero in k and z.
    pub fn eigen_residual(&self) -> ZPoly {
        let img = operator().apply(&self.poly);
        &img - &self.poly.scale(&epsilon(&self.label))
    }

    /// Every exponent sits under the label in the root-lattice order.
    pub fn support_is_triangular(&self) -> bool {
        self.poly
            .exponents()
            .all(|p| crate::orbits::root_lattice_drop(&self.label, p).is_some())
    }
}

/// Height of the deepest possible drop below m: (m, rho).
pub fn full_depth(m: &Weight) -> i32 {
    const H: [i32; RANK] = [8, 11, 15, 21, 15, 8];
    (0..RANK).map(|i| m.0[i] * H[i]).sum()
}

/// Coefficients of the eigenpolynomial with drops of height <= cap, keyed by
/// exponent. With cap >= full_depth(m) this is the complete polynomial.
pub fn solve_truncated(m: &Weight, cap: i32) -> Result<BTreeMap<Weight, KRat>, String> {
    if !m.is_dominant() {
        return Err(format!("label {m} is not dominant"));
    }
    let op = operator();
    let cap = cap.min(full_depth(m));
    // enumerate the support by drop tuples beta with p = m - A beta >= 0
    let bounds = support_bounds(m);
    let mut levels: Vec<Vec<(Weight, RootVec)>> = vec![Vec::new(); cap as usize + 1];
    enumerate_drops(m, &bounds, cap, &mut levels);

    let eps_m = epsilon(m);
    let mut acc: HashMap<Weight, KRat> = HashMap::new();
    let mut coeffs: BTreeMap<Weight, KRat> = BTreeMap::new();
    for h in 0..=cap {
        // drain this level in a deterministic order
        for (p, _beta) in &levels[h as usize] {
            let c = if h == 0 {
                KRat::one()
            } else {
                let Some(num) = acc.remove(p) else { continue };
                if num.is_zero() {
                    continue;
                }
                let den = &eps_m - &epsilon(p);
                assert!(!den.is_zero(), "eigenvalue difference vanished identically at {p}");
                &num / &den
            };
            // push contributions of this finalized term through the operator
            op.push_drops(p, |drop, drop_w, k| {
                if h + drop.height() > cap {
                    return;
                }
                let p2 = p.sub(drop_w);
                if p2.is_dominant() {
                    let e = acc.entry(p2).or_insert_with(KRat::zero);
                    *e += &(&k * &c);
                }
            });
            coeffs.insert(*p, c);
        }
    }
    Ok(coeffs)
}

fn support_bounds(m: &Weight) -> [i32; RANK] {
    let c = crate::e6::cartan();
    std::array::from_fn(|i| {
        let mut s = BigRational::zero();
        for j in 0..RANK {
            if m.0[j] != 0 {
                s += BigRational::from(num_bigint::BigInt::from(m.0[j] as i64)) * &c.a_inv[i][j];
            }
        }
        i64::try_from(s.floor().to_integer()).expect("label too large") as i32
    })
}

fn enumerate_drops(
    m: &Weight,
    bounds: &[i32; RANK],
    cap: i32,
    levels: &mut [Vec<(Weight, RootVec)>],
) {
    let a = crate::e6::cartan().a;
    let mut beta = [0i32; RANK];
    fn rec(
        m: &Weight,
        a: &[[i64; RANK]; RANK],
        bounds: &[i32; RANK],
        cap: i32,
        beta: &mut [i32; RANK],
        idx: usize,
        used: i32,
        levels: &mut [Vec<(Weight, RootVec)>],
    ) {
        if idx == RANK {
            let mut p = m.0;
            for (j, pj) in p.iter_mut().enumerate() {
                for (l, bl) in beta.iter().enumerate() {
                    *pj -= (a[j][l] as i32) * bl;
                }
                if *pj < 0 {
                    return;
                }
            }
            levels[used as usize].push((Weight(p), RootVec(*beta)));
            return;
        }
        let max = bounds[idx].min(cap - used);
        for v in 0..=max {
            beta[idx] = v;
            rec(m, a, bounds, cap, beta, idx + 1, used + v, levels);
        }
        beta[idx] = 0;
    }
    rec(m, &a, bounds, cap, &mut beta, 0, 0, levels);
    for level in levels.iter_mut() {
        level.sort();
    }
}

pub fn solve_iterative(m: &Weight) -> Result<EigenPolynomial, String> {
    let coeffs = solve_truncated(m, full_depth(m))?;
    let mut poly = ZPoly::zero();
    for (p, c) in coeffs {
        poly.add_term(p, &c);
    }
    debug_assert!(poly.coeff(m).is_one());
    Ok(EigenPolynomial { label: *m, poly, method: Method::Iterative })
}

pub fn solve_projection(m: &Weight) -> Result<EigenPolynomial, String> {
    if !m.is_dominant() {
        return Err(format!("label {m} is not dominant"));
    }
    let op = operator();
    let eps_m = epsilon(m);
    let mut q = ZPoly::from_exponent(m);
    let mut diffs = Vec::new();
    for mu in dominant_weights_below(m).into_iter().skip(1) {
        let e = epsilon(&mu);
        q = &op.apply(&q) - &q.scale(&e);
        diffs.push(&eps_m - &e);
    }
    // normalize by the eigenvalue differences one factor at a time
    for d in &diffs {
        if d.is_zero() {
            return Err(format!("degenerate eigenvalue below {m}"));
        }
        q = q.scale(&d.inv());
    }
    if !q.coeff(m).is_one() {
        return Err(format!("projection leading coefficient mismatch for {m}"));
    }
    Ok(EigenPolynomial { label: *m, poly: q, method: Method::Projection })
}

/// Monomial symmetric function: the k = 0 specialization of the symbolic
/// eigenpolynomial. A pole at k = 0 (an eigenvalue degeneracy) is reported,
/// not guessed around.
pub fn monomial_function(m: &Weight) -> Result<ZPoly, String> {
    let p = solve_cached(m)?;
    p.eval_kappa(&BigRational::zero())
        .map_err(|e| format!("monomial function for label {}: {e}", m.label()))
}

/// Shared memo of full iterative solves; series computations reuse these
/// heavily. Results are immutable once stored.
pub fn solve_cached(m: &Weight) -> Result<ZPoly, String> {
    static CACHE: Mutex<BTreeMap<Weight, ZPoly>> = Mutex::new(BTreeMap::new());
    if let Some(p) = CACHE.lock().unwrap().get(m) {
        return Ok(p.clone());
    }
    let solved = solve_iterative(m)?.poly;
    CACHE.lock().unwrap().insert(*m, solved.clone());
    Ok(solved)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_zpoly;
    use num_bigint::BigInt;

    fn w(m: [i32; 6]) -> Weight {
        Weight(m)
    }

    fn expect(src: &str) -> ZPoly {
        parse_zpoly(src).unwrap()
    }

    #[test]
    fn fundamental_label_is_single_variable() {
        let p = solve_iterative(&Weight::fundamental(1)).unwrap();
        assert_eq!(p.poly, ZPoly::var(1));
        let q = solve_projection(&Weight::fundamental(6)).unwrap();
        assert_eq!(q.poly, ZPoly::var(6));
    }

    #[test]
    fn adjoint_pair_polynomial() {
        // P_100001 = z1 z6 - 6 z2/(1+5k) - 9(7k-1)/((1+5k)(1+8k))
        let p = solve_iterative(&w([1, 0, 0, 0, 0, 1])).unwrap();
        let want = expect("z1*z6 - 6/(1+5k)*z2 - 9*(-1+7k)/((1+5k)*(1+8k))");
        assert_eq!(p.poly, want);
    }

    #[test]
    fn twice_lambda1_polynomial() {
        // P_200000 = z1^2 - 2 z3/(1+k) - 10 k z6/((1+k)(1+4k))
        let p = solve_iterative(&w([2, 0, 0, 0, 0, 0])).unwrap();
        let want = expect("z1^2 - 2/(1+k)*z3 - 10*k/((1+k)*(1+4k))*z6");
        assert_eq!(p.poly, want);
    }

    #[test]
    fn methods_agree() {
        for m in [
            w([1, 1, 0, 0, 0, 0]),
            w([0, 2, 0, 0, 0, 0]),
            w([1, 0, 0, 0, 0, 1]),
            w([0, 0, 1, 0, 1, 0]),
        ] {
            let a = solve_iterative(&m).unwrap();
            let b = solve_projection(&m).unwrap();
            assert_eq!(a.poly, b.poly, "methods disagree for {m}");
        }
    }

    #[test]
    fn specializations_of_adjoint_pair() {
        let p = solve_cached(&w([1, 0, 0, 0, 0, 1])).unwrap();
        let at1 = p.eval_kappa(&BigRational::from(BigInt::from(1))).unwrap();
        assert_eq!(at1, expect("z1*z6 - z2 - 1"));
        let at0 = p.eval_kappa(&BigRational::zero()).unwrap();
        assert_eq!(at0, expect("z1*z6 - 6*z2 + 9"));
    }

    #[test]
    fn monomial_functions_match_listed() {
        assert_eq!(
            monomial_function(&w([1, 0, 1, 0, 0, 0])).unwrap(),
            expect("z1*z3 - 3*z4 - z1*z6 + 6*z2 - 9")
        );
        assert_eq!(
            monomial_function(&w([3, 0, 0, 0, 0, 0])).unwrap(),
            expect("z1^3 - 3*z1*z3 + 3*z4")
        );
        assert_eq!(monomial_function(&Weight::ZERO).unwrap(), ZPoly::one());
    }

    #[test]
    fn eigen_residual_and_triangularity() {
        for m in [w([1, 1, 0, 0, 0, 0]), w([0, 0, 0, 1, 0, 0]), w([2, 0, 0, 0, 0, 1])] {
            let p = solve_iterative(&m).unwrap();
            assert!(p.eigen_residual().is_zero(), "nonzero residual for {m}");
            assert!(p.support_is_triangular());
        }
    }

    #[test]
    fn duality_commutes_with_solving() {
        for m in [w([0, 0, 1, 0, 0, 0]), w([1, 0, 0, 1, 0, 0]), w([0, 1, 1, 0, 0, 0])] {
            let p = solve_cached(&m).unwrap();
            let q = solve_cached(&m.dual()).unwrap();
            assert_eq!(p.dual(), q, "duality failed for {m}");
        }
    }

    #[test]
    fn truncated_solve_prefix() {
        let m = w([0, 0, 0, 1, 0, 0]);
        let full = solve_cached(&m).unwrap();
        let part = solve_truncated(&m, 6).unwrap();
        for (p, c) in &part {
            assert_eq!(full.coeff(p), *c);
        }
        // everything at depth <= 6 is present
        for (p, c) in full.terms() {
            let d = crate::orbits::root_lattice_drop(&m, p).unwrap();
            if d.height() <= 6 {
                assert_eq!(part.get(p), Some(c));
            }
        }
    }

    #[test]
    fn non_dominant_label_errors() {
        assert!(solve_iterative(&w([-1, 0, 0, 0, 0, 0])).is_err());
        assert!(solve_projection(&w([0, -2, 0, 0, 0, 0])).is_err());
    }
}

//! Weight multiplicities and character expansions.
//!
//! The multiplicity of a dominant weight mu in the irreducible representation
//! with highest weight lambda comes from the Freudenthal recursion
//!
//! ```text
//! n_mu = [ sum_{a>0} sum_{j>=1} 2 n_{mu+j a} (mu+j a, a) ] / (lambda+mu+2 rho, lambda-mu)
//! ```
//!
//! evaluated top-down over the dominant weights below lambda. Both the
//! numerator and the denominator are plain integers here: (x, a) for a in the
//! root basis is an integer dot product, and lambda - mu lies in the root
//! lattice.

use crate::e6::{inner_root, inner_root_weight, positive_roots, root_to_weight, weyl_dimension};
use crate::kappa::KRat;
use crate::orbits::{dominant_representative, dominant_weights_below, orbit_size, root_lattice_drop};
use crate::weight::{Weight, RANK};
use crate::zpoly::ZPoly;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Expansion of a character into monomial symmetric functions: dominant
/// weight -> positive multiplicity.
pub struct CharacterExpansion {
    pub highest: Weight,
    pub terms: Vec<(Weight, BigInt)>,
}

/// Multiplicities of all dominant weights of R_lambda, keyed by weight.
pub fn weight_multiplicities(lambda: &Weight) -> BTreeMap<Weight, BigInt> {
    weight_multiplicities_impl(lambda, false)
}

/// Variant restricted to positive roots a with (mu, a) >= 0. Not valid in
/// general; kept to check the pruning argument on the small expansions.
pub fn weight_multiplicities_pruned(lambda: &Weight) -> BTreeMap<Weight, BigInt> {
    weight_multiplicities_impl(lambda, true)
}

fn weight_multiplicities_impl(lambda: &Weight, prune: bool) -> BTreeMap<Weight, BigInt> {
    assert!(lambda.is_dominant(), "multiplicities need a dominant highest weight");
    let below = dominant_weights_below(lambda); // decreasing (mu, rho)
    let mut table: BTreeMap<Weight, BigInt> = BTreeMap::new();
    table.insert(*lambda, BigInt::one());
    for mu in below.iter().skip(1) {
        let drop = root_lattice_drop(lambda, mu).expect("mu below lambda by construction");
        let hmax = drop.height();
        let mut num = BigInt::zero();
        for &(alpha, ha) in positive_roots() {
            if prune && inner_root_weight(&alpha, mu) < 0 {
                continue;
            }
            let aw = root_to_weight(&alpha);
            let mua = inner_root_weight(&alpha, mu);
            let aa = inner_root(&alpha, &alpha); // = 2
            let mut j = 1i64;
            while j * ha as i64 <= hmax as i64 {
                let mut w = *mu;
                for (idx, wi) in w.0.iter_mut().enumerate() {
                    *wi += (j as i32) * aw.0[idx];
                }
                let rep = dominant_representative(&w);
                if let Some(n) = table.get(&rep) {
                    // (mu + j a, a) = (mu, a) + j (a, a)
                    num += 2 * n * BigInt::from(mua + j * aa);
                }
                j += 1;
            }
        }
        // (lambda + mu + 2 rho, lambda - mu) as an integer dot product
        let mut sum = lambda.add(mu);
        for s in sum.0.iter_mut() {
            *s += 2;
        }
        let den = BigInt::from(inner_root_weight(&drop, &sum));
        assert!(!den.is_zero(), "Freudenthal denominator vanished at mu = {mu}");
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        assert!(r.is_zero(), "Freudenthal numerator not divisible at mu = {mu}");
        if !q.is_zero() {
            table.insert(*mu, q);
        }
    }
    table
}

/// Multiplicity of an arbitrary weight mu in R_lambda (0 when absent).
/// Non-dominant mu reduce to their dominant representative first.
pub fn freudenthal(lambda: &Weight, mu: &Weight) -> BigInt {
    let rep = dominant_representative(mu);
    weight_multiplicities(lambda)
        .get(&rep)
        .cloned()
        .unwrap_or_else(BigInt::zero)
}

/// Character as a sum of monomial symmetric functions, with the dimension
/// balance sum(mult * orbit size) = dim R_lambda asserted.
pub fn character_expansion(lambda: &Weight) -> CharacterExpansion {
    let table = weight_multiplicities(lambda);
    let mut terms: Vec<(Weight, BigInt)> = Vec::new();
    for mu in dominant_weights_below(lambda) {
        if let Some(n) = table.get(&mu) {
            terms.push((mu, n.clone()));
        }
    }
    assert!(terms.first().map(|(w, n)| *w == *lambda && n.is_one()).unwrap_or(false));
    let mut total = BigInt::zero();
    for (mu, n) in &terms {
        total += n * BigInt::from(orbit_size(mu));
    }
    assert_eq!(
        total,
        weyl_dimension(lambda).unwrap(),
        "dimension balance failed for {lambda}"
    );
    CharacterExpansion { highest: *lambda, terms }
}

/// Count of pairs (u, v) in orbit(x) x orbit(y) with u + v equal to the
/// given dominant weight. Constant on Weyl orbits of the target.
fn orbit_pair_count(x: &Weight, y: &Weight, target: &Weight) -> i64 {
    let ox = crate::orbits::orbit(x).members;
    let oy: std::collections::HashSet<Weight> =
        crate::orbits::orbit(y).members.into_iter().collect();
    let mut count = 0;
    for u in &ox {
        if oy.contains(&target.sub(u)) {
            count += 1;
        }
    }
    count
}

/// The six fundamental monomial symmetric functions expressed in the
/// z-variables, index 0 holding M_{l1}.
///
/// Derivation: each character z_i expands over monomial functions with
/// Freudenthal multiplicities, so M_{l_i} = z_i - sum mult * M_mu over the
/// lower dominant mu. The lower functions needed here (M_0, M_{l1}, M_{l6},
/// M_{l2}, M_{l1+l6}) come from the same inversion plus the orbit product
/// z1*z6 = M_{l1} M_{l6} expanded by pair counts.
pub fn fundamental_monomials() -> &'static [ZPoly; RANK] {
    static CACHE: std::sync::OnceLock<[ZPoly; RANK]> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| {
        let l = Weight::fundamental;
        let mut known: BTreeMap<Weight, ZPoly> = BTreeMap::new();
        known.insert(Weight::ZERO, ZPoly::one());

        // Single-orbit characters: z1 and z6 are already monomial functions.
        for i in [1usize, 6] {
            let exp = character_expansion(&l(i));
            assert_eq!(exp.terms.len(), 1);
            known.insert(l(i), ZPoly::var(i));
        }
        // z2, z3, z5 expand over already-known lower functions.
        for i in [2usize, 3, 5] {
            let m = invert_expansion(&character_expansion(&l(i)), ZPoly::var(i), &known);
            known.insert(l(i), m);
        }
        // M_{l1+l6} from the orbit product z1 z6 = sum counts * M_mu.
        let lam16 = Weight([1, 0, 0, 0, 0, 1]);
        let mut m16 = &ZPoly::var(1) * &ZPoly::var(6);
        for mu in dominant_weights_below(&lam16).into_iter().skip(1) {
            let c = orbit_pair_count(&l(1), &l(6), &mu);
            if c != 0 {
                let lower = known.get(&mu).expect("lower monomial known").clone();
                m16 = &m16 - &lower.scale(&KRat::from_int(c));
            }
        }
        known.insert(lam16, m16);
        // z4 reaches down to M_{l1+l6}.
        let m4 = invert_expansion(&character_expansion(&l(4)), ZPoly::var(4), &known);
        known.insert(l(4), m4);

        std::array::from_fn(|i| known.get(&l(i + 1)).unwrap().clone())
    })
}

fn invert_expansion(
    exp: &CharacterExpansion,
    character: ZPoly,
    known: &BTreeMap<Weight, ZPoly>,
) -> ZPoly {
    let mut m = character;
    for (mu, mult) in exp.terms.iter().skip(1) {
        let lower = known
            .get(mu)
            .unwrap_or_else(|| panic!("monomial function for {mu} not yet available"));
        let c = KRat::from_poly(crate::kappa::KPoly::from_coeffs(vec![mult.clone()]));
        m = &m - &lower.scale(&c);
    }
    m
}

/// Monomial symmetric function of any dominant weight as a ZPoly, routed
/// through the k = 0 specialization of the eigenpolynomial solver, with the
/// six fundamental cases served from the direct inversion.
pub fn monomial_to_z(lambda: &Weight) -> Result<ZPoly, String> {
    if let Some(i) = (1..=RANK).find(|&i| *lambda == Weight::fundamental(i)) {
        return Ok(fundamental_monomials()[i - 1].clone());
    }
    crate::solver::monomial_function(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: [i32; 6]) -> Weight {
        Weight(m)
    }

    #[test]
    fn freudenthal_small_cases() {
        let l4 = Weight::fundamental(4);
        assert_eq!(freudenthal(&l4, &w([1, 0, 0, 0, 0, 1])), BigInt::from(4));
        assert_eq!(freudenthal(&l4, &Weight::fundamental(2)), BigInt::from(15));
        assert_eq!(freudenthal(&l4, &Weight::ZERO), BigInt::from(45));
        assert_eq!(freudenthal(&l4, &l4), BigInt::one());
    }

    #[test]
    fn expansion_multiplicities() {
        // z2 = M_{010000} + 6
        let e2 = character_expansion(&Weight::fundamental(2));
        assert_eq!(e2.terms, vec![
            (Weight::fundamental(2), BigInt::one()),
            (Weight::ZERO, BigInt::from(6)),
        ]);
        // z3 = M_{001000} + 5 M_{000001}
        let e3 = character_expansion(&Weight::fundamental(3));
        assert_eq!(e3.terms, vec![
            (Weight::fundamental(3), BigInt::one()),
            (Weight::fundamental(6), BigInt::from(5)),
        ]);
        // chi_{100001}: f = 5, g = 20
        let e16 = character_expansion(&w([1, 0, 0, 0, 0, 1]));
        assert_eq!(e16.terms, vec![
            (w([1, 0, 0, 0, 0, 1]), BigInt::one()),
            (Weight::fundamental(2), BigInt::from(5)),
            (Weight::ZERO, BigInt::from(20)),
        ]);
    }

    #[test]
    fn multiplicity_is_orbit_invariant() {
        let l4 = Weight::fundamental(4);
        let mu = w([1, 0, 0, 0, 0, 1]);
        for member in crate::orbits::orbit(&mu).members.iter().take(12) {
            assert_eq!(freudenthal(&l4, member), BigInt::from(4));
        }
    }

    #[test]
    fn pruned_matches_unpruned_on_small_expansions() {
        for lambda in [
            Weight::fundamental(1),
            Weight::fundamental(2),
            Weight::fundamental(3),
            Weight::fundamental(4),
            Weight::fundamental(5),
            Weight::fundamental(6),
            w([1, 0, 0, 0, 0, 1]),
        ] {
            assert_eq!(
                weight_multiplicities(&lambda),
                weight_multiplicities_pruned(&lambda),
                "pruning changed multiplicities for {lambda}"
            );
        }
    }

    #[test]
    fn fundamental_monomials_match_solved_list() {
        let ms = fundamental_monomials();
        let want = [
            "z1",
            "z2 - 6",
            "z3 - 5*z6",
            "z4 - 4*z1*z6 + 9*z2 + 9",
            "z5 - 5*z1",
            "z6",
        ];
        for (m, w) in ms.iter().zip(want) {
            assert_eq!(*m, crate::text::parse_zpoly(w).unwrap());
        }
    }
}

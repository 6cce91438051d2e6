//! Weyl-group orbit machinery: simple reflections, orbit enumeration,
//! dominant representatives, and dominant weights below a highest weight.

use crate::e6::{cartan, inner_weight, weight_to_root, RHO};
use crate::weight::{RootVec, Weight, RANK};
use std::collections::HashSet;

/// Simple reflection s_i in weight coordinates: x - x_i * a_i.
pub fn reflect(i: usize, x: &Weight) -> Weight {
    assert!((1..=RANK).contains(&i), "reflection index {i} out of 1..=6");
    let xi = x.0[i - 1];
    if xi == 0 {
        return *x;
    }
    let a = cartan().a;
    let mut m = x.0;
    for (j, mj) in m.iter_mut().enumerate() {
        *mj -= xi * a[j][i - 1] as i32;
    }
    Weight(m)
}

/// Reflect negative entries until the weight is dominant.
pub fn dominant_representative(x: &Weight) -> Weight {
    let mut w = *x;
    loop {
        match (0..RANK).find(|&i| w.0[i] < 0) {
            Some(i) => w = reflect(i + 1, &w),
            None => return w,
        }
    }
}

/// A full Weyl orbit with its dominant representative.
pub struct Orbit {
    pub representative: Weight,
    pub members: Vec<Weight>,
}

/// Breadth-first closure of x under the six simple reflections.
/// Members come back sorted in the canonical weight order.
pub fn orbit(x: &Weight) -> Orbit {
    let rep = dominant_representative(x);
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = vec![rep];
    seen.insert(rep);
    while let Some(w) = queue.pop() {
        for i in 1..=RANK {
            let r = reflect(i, &w);
            if seen.insert(r) {
                queue.push(r);
            }
        }
    }
    let mut members: Vec<Weight> = seen.into_iter().collect();
    members.sort();
    Orbit { representative: rep, members }
}

pub fn orbit_size(x: &Weight) -> usize {
    orbit(x).members.len()
}

/// Order of the E6 Weyl group.
pub const WEYL_ORDER: usize = 51840;

/// All dominant mu with lambda - mu a non-negative integer combination of
/// simple roots, ordered by decreasing (mu, rho), ties broken canonically.
///
/// Enumerates root-lattice coefficient tuples n with n <= A^{-1} lambda
/// componentwise (valid since A^{-1} has positive entries, so dominant
/// weights have non-negative root coordinates), then filters dominance.
pub fn dominant_weights_below(lambda: &Weight) -> Vec<Weight> {
    assert!(lambda.is_dominant(), "dominant_weights_below needs a dominant weight");
    let bound = root_coord_bounds(lambda);
    let a = cartan().a;
    let mut out = Vec::new();
    let mut n = [0i32; RANK];
    enumerate(&mut n, 0, &bound, &mut |n| {
        // mu = lambda - A n
        let mut mu = lambda.0;
        let mut dominant = true;
        for j in 0..RANK {
            let mut s = 0i32;
            for (l, nl) in n.iter().enumerate() {
                s += a[j][l] as i32 * nl;
            }
            mu[j] -= s;
            if mu[j] < 0 {
                dominant = false;
                break;
            }
        }
        if dominant {
            out.push(Weight(mu));
        }
    });
    out.sort_by(|x, y| {
        let hx = inner_weight(x, &RHO);
        let hy = inner_weight(y, &RHO);
        hy.cmp(&hx).then_with(|| y.cmp(x))
    });
    out
}

/// Componentwise bounds floor(A^{-1} lambda) on root coordinates of
/// lambda - mu for dominant mu.
fn root_coord_bounds(lambda: &Weight) -> [i32; RANK] {
    let c = cartan();
    std::array::from_fn(|i| {
        let mut s = num_rational::BigRational::from(num_bigint::BigInt::from(0));
        for j in 0..RANK {
            if lambda.0[j] != 0 {
                s += num_rational::BigRational::from(num_bigint::BigInt::from(lambda.0[j] as i64))
                    * &c.a_inv[i][j];
            }
        }
        let f = s.floor().to_integer();
        i64::try_from(f).expect("weight too large") as i32
    })
}

fn enumerate<F: FnMut(&[i32; RANK])>(n: &mut [i32; RANK], idx: usize, bound: &[i32; RANK], f: &mut F) {
    if idx == RANK {
        f(n);
        return;
    }
    for v in 0..=bound[idx] {
        n[idx] = v;
        enumerate(n, idx + 1, bound, f);
    }
    n[idx] = 0;
}

/// lambda - mu as a non-negative root-lattice element, if it is one.
pub fn root_lattice_drop(lambda: &Weight, mu: &Weight) -> Option<RootVec> {
    let d = lambda.sub(mu);
    let r = weight_to_root(&d)?;
    if r.is_nonnegative() {
        Some(r)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::e6::inner_weight;

    #[test]
    fn reflection_examples() {
        // s_1(l1) = l1 - a1
        assert_eq!(reflect(1, &Weight::fundamental(1)), Weight([-1, 0, 1, 0, 0, 0]));
        // (l1, a2) = 0 so s_2 fixes l1
        assert_eq!(reflect(2, &Weight::fundamental(1)), Weight::fundamental(1));
        let x = Weight([3, -1, 4, 0, -2, 5]);
        for i in 1..=6 {
            assert_eq!(reflect(i, &reflect(i, &x)), x);
        }
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&Weight::fundamental(1)), 27);
        assert_eq!(orbit_size(&Weight::fundamental(2)), 72);
        assert_eq!(orbit_size(&Weight::fundamental(4)), 720);
        assert_eq!(orbit_size(&Weight([1, 0, 0, 0, 0, 1])), 270);
    }

    #[test]
    fn weyl_group_order() {
        let o = orbit(&RHO);
        assert_eq!(o.members.len(), WEYL_ORDER);
        assert_eq!(WEYL_ORDER % orbit_size(&Weight::fundamental(4)), 0);
    }

    #[test]
    fn orbit_members_share_norm() {
        let o = orbit(&Weight([1, 0, 0, 0, 0, 1]));
        let n0 = inner_weight(&o.representative, &o.representative);
        assert_eq!(o.members.len(), 270);
        for w in &o.members {
            assert_eq!(inner_weight(w, w), n0);
        }
        // exactly one dominant member
        assert_eq!(o.members.iter().filter(|w| w.is_dominant()).count(), 1);
    }

    #[test]
    fn dominant_below_examples() {
        let l = Weight::fundamental;
        assert_eq!(dominant_weights_below(&l(2)), vec![l(2), Weight::ZERO]);
        assert_eq!(
            dominant_weights_below(&l(4)),
            vec![l(4), Weight([1, 0, 0, 0, 0, 1]), l(2), Weight::ZERO]
        );
        assert_eq!(dominant_weights_below(&l(1)), vec![l(1)]);
    }

    #[test]
    fn dominant_rep_is_orbit_invariant() {
        let x = Weight([0, 1, 0, 0, 0, 0]);
        for w in orbit(&x).members.iter().take(20) {
            assert_eq!(dominant_representative(w), x);
        }
    }
}

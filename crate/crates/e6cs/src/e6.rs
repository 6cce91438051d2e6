//! Static combinatorial data of E6.
//!
//! Node numbering follows the Dynkin diagram with the chain 1-3-4-5-6 and
//! node 2 attached to node 4. All inner products route through the Cartan
//! matrix and its exact rational inverse; nothing here touches floating
//! point. Normalization: (a_i, a_i) = 2 for every simple root.

use crate::weight::{RootVec, Weight, RANK};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::sync::OnceLock;

/// The E6 Cartan matrix A[i][j] = (a_i, a_j), 0-based storage.
pub const CARTAN: [[i64; RANK]; RANK] = [
    [2, 0, -1, 0, 0, 0],
    [0, 2, 0, -1, 0, 0],
    [-1, 0, 2, -1, 0, 0],
    [0, -1, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, -1, 2],
];

/// Cartan matrix with its exact inverse.
pub struct CartanData {
    pub a: [[i64; RANK]; RANK],
    pub a_inv: [[BigRational; RANK]; RANK],
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl CartanData {
    fn build() -> CartanData {
        let a_inv = invert_exact(&CARTAN);
        // A * A_inv must be the identity, exactly.
        for i in 0..RANK {
            for j in 0..RANK {
                let mut s = BigRational::zero();
                for (l, row) in a_inv.iter().enumerate() {
                    s += rat(CARTAN[i][l]) * &row[j];
                }
                assert_eq!(s, if i == j { BigRational::one() } else { BigRational::zero() });
            }
        }
        CartanData { a: CARTAN, a_inv }
    }
}

/// Exact Gaussian elimination over the rationals.
fn invert_exact(a: &[[i64; RANK]; RANK]) -> [[BigRational; RANK]; RANK] {
    let mut m: Vec<Vec<BigRational>> = (0..RANK)
        .map(|i| {
            (0..2 * RANK)
                .map(|j| {
                    if j < RANK {
                        rat(a[i][j])
                    } else if j - RANK == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..RANK {
        let pivot = (col..RANK)
            .find(|&r| !m[r][col].is_zero())
            .expect("Cartan matrix is singular");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..2 * RANK {
            m[col][j] = &m[col][j] / &p;
        }
        for r in 0..RANK {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..2 * RANK {
                let sub = &f * &m[col][j];
                m[r][j] = &m[r][j] - &sub;
            }
        }
    }
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j + RANK].clone()))
}

pub fn cartan() -> &'static CartanData {
    static DATA: OnceLock<CartanData> = OnceLock::new();
    DATA.get_or_init(CartanData::build)
}

/// The 36 positive roots with their heights, ascending by height then by
/// coordinate order. Generated by closure: a lattice vector built from a
/// positive root beta plus a simple root a_i is again a root exactly when
/// (beta, a_i) = -1, since every root of a simply-laced system has norm 2.
pub fn positive_roots() -> &'static Vec<(RootVec, i32)> {
    static ROOTS: OnceLock<Vec<(RootVec, i32)>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let mut found: Vec<RootVec> = (1..=RANK).map(RootVec::simple).collect();
        let mut frontier = found.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 1..=RANK {
                    if inner_root(beta, &RootVec::simple(i)) == -1 {
                        let gamma = beta.add(&RootVec::simple(i));
                        if !found.contains(&gamma) && !next.contains(&gamma) {
                            next.push(gamma);
                        }
                    }
                }
            }
            found.extend(next.iter().copied());
            frontier = next;
        }
        let mut out: Vec<(RootVec, i32)> = found.into_iter().map(|r| (r, r.height())).collect();
        out.sort_by_key(|&(r, h)| (h, r.0));
        assert_eq!(out.len(), 36, "E6 must have 36 positive roots");
        out
    })
}

/// Number of positive roots at each height 1..=11.
pub fn root_height_counts() -> [usize; 11] {
    let mut counts = [0usize; 11];
    for &(_, h) in positive_roots() {
        counts[(h - 1) as usize] += 1;
    }
    counts
}

/// (x, y) for weight-basis vectors: x^T A^{-1} y.
pub fn inner_weight(x: &Weight, y: &Weight) -> BigRational {
    let c = cartan();
    let mut s = BigRational::zero();
    for i in 0..RANK {
        if x.0[i] == 0 {
            continue;
        }
        for j in 0..RANK {
            if y.0[j] == 0 {
                continue;
            }
            s += rat((x.0[i] * y.0[j]) as i64) * &c.a_inv[i][j];
        }
    }
    s
}

/// (a, y) for a root-basis vector against a weight-basis vector. Since
/// (a_i, l_j) = delta_ij this is a plain integer dot product.
pub fn inner_root_weight(a: &RootVec, y: &Weight) -> i64 {
    (0..RANK).map(|i| (a.0[i] * y.0[i]) as i64).sum()
}

/// (a, b) for two root-basis vectors: a^T A b.
pub fn inner_root(a: &RootVec, b: &RootVec) -> i64 {
    let mut s = 0i64;
    for i in 0..RANK {
        if a.0[i] == 0 {
            continue;
        }
        for j in 0..RANK {
            s += a.0[i] as i64 * CARTAN[i][j] * b.0[j] as i64;
        }
    }
    s
}

/// Weight-basis coordinates of a root-basis vector: A * a.
pub fn root_to_weight(a: &RootVec) -> Weight {
    let mut m = [0i32; RANK];
    for (i, mi) in m.iter_mut().enumerate() {
        *mi = (0..RANK).map(|j| (CARTAN[i][j] as i32) * a.0[j]).sum();
    }
    Weight(m)
}

/// Root-basis coordinates of a weight-basis vector, when they are integral:
/// A^{-1} * m. Returns None when m is not in the root lattice.
pub fn weight_to_root(m: &Weight) -> Option<RootVec> {
    let c = cartan();
    let mut out = [0i32; RANK];
    for (i, oi) in out.iter_mut().enumerate() {
        let mut s = BigRational::zero();
        for j in 0..RANK {
            if m.0[j] != 0 {
                s += rat(m.0[j] as i64) * &c.a_inv[i][j];
            }
        }
        if !s.is_integer() {
            return None;
        }
        let v = s.to_integer();
        if v.abs() > BigInt::from(i32::MAX) {
            return None;
        }
        *oi = i64::try_from(v).unwrap() as i32;
    }
    Some(RootVec(out))
}

/// The Weyl vector: sum of the fundamental weights.
pub const RHO: Weight = Weight([1; RANK]);

/// Weyl dimension formula: prod over positive roots of
/// (ht(a) + sum c_i m_i) / ht(a), for a = sum c_i a_i.
pub fn weyl_dimension(m: &Weight) -> Result<BigInt, String> {
    if !m.is_dominant() {
        return Err(format!("weyl_dimension requires a dominant weight, got {m}"));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for &(alpha, h) in positive_roots() {
        num *= BigInt::from(h as i64 + inner_root_weight(&alpha, m));
        den *= BigInt::from(h as i64);
    }
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    assert!(r.is_zero(), "Weyl dimension formula must divide exactly");
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_entries() {
        // 1-based (1,3) and (2,4) entries are -1
        assert_eq!(CARTAN[0][2], -1);
        assert_eq!(CARTAN[1][3], -1);
        assert_eq!(CARTAN[0][5], 0);
    }

    #[test]
    fn root_counts_by_height() {
        assert_eq!(root_height_counts(), [6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1]);
        assert_eq!(positive_roots().len(), 36);
    }

    #[test]
    fn highest_root() {
        let top = positive_roots().iter().find(|&&(_, h)| h == 11).unwrap().0;
        assert_eq!(top, RootVec([1, 2, 2, 3, 2, 1]));
    }

    #[test]
    fn simple_root_inner_products() {
        let a = RootVec::simple;
        assert_eq!(inner_root(&a(4), &a(2)), -1);
        assert_eq!(inner_root(&a(1), &a(6)), 0);
        for i in 1..=6 {
            assert_eq!(inner_root(&a(i), &a(i)), 2);
            assert_eq!(inner_root_weight(&a(i), &RHO), 1);
        }
    }

    #[test]
    fn rho_geometry() {
        assert_eq!(inner_weight(&RHO, &RHO), rat(78));
        assert_eq!(weight_to_root(&RHO), Some(RootVec([8, 11, 15, 21, 15, 8])));
        // every positive root has height equal to (alpha, rho)
        for &(alpha, h) in positive_roots() {
            assert_eq!(inner_root_weight(&alpha, &RHO), h as i64);
        }
    }

    #[test]
    fn root_weight_conversions() {
        assert_eq!(root_to_weight(&RootVec::simple(1)), Weight([2, 0, -1, 0, 0, 0]));
        assert_eq!(root_to_weight(&RootVec::ZERO), Weight::ZERO);
        assert_eq!(inner_weight(&Weight::ZERO, &RHO), BigRational::zero());
        // (l1, l1) = A_inv[1][1] = 4/3
        assert_eq!(
            inner_weight(&Weight::fundamental(1), &Weight::fundamental(1)),
            BigRational::new(4.into(), 3.into())
        );
    }

    #[test]
    fn fundamental_dimensions() {
        let dims: Vec<i64> = (1..=6)
            .map(|i| {
                weyl_dimension(&Weight::fundamental(i))
                    .unwrap()
                    .try_into()
                    .unwrap()
            })
            .collect();
        assert_eq!(dims, vec![27, 78, 351, 2925, 351, 27]);
        assert_eq!(weyl_dimension(&Weight::ZERO).unwrap(), BigInt::one());
        assert_eq!(weyl_dimension(&Weight([1, 0, 0, 0, 0, 1])).unwrap(), BigInt::from(650));
        assert!(weyl_dimension(&Weight([-1, 0, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn duality_preserves_dimension() {
        for m in [
            Weight([1, 0, 0, 0, 0, 0]),
            Weight([0, 0, 1, 0, 0, 0]),
            Weight([2, 1, 0, 0, 0, 1]),
            Weight([0, 1, 2, 3, 0, 1]),
        ] {
            assert_eq!(weyl_dimension(&m).unwrap(), weyl_dimension(&m.dual()).unwrap());
        }
    }

    #[test]
    fn inner_weight_positive_definite() {
        // leading principal minors of A_inv are positive
        let c = cartan();
        for n in 1..=RANK {
            let det = minor_det(&c.a_inv, n);
            assert!(det > BigRational::zero(), "minor {n} not positive");
        }
    }

    fn minor_det(m: &[[BigRational; RANK]; RANK], n: usize) -> BigRational {
        let mut a: Vec<Vec<BigRational>> =
            (0..n).map(|i| (0..n).map(|j| m[i][j].clone()).collect()).collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot else { return BigRational::zero() };
            if p != col {
                a.swap(col, p);
                det = -det;
            }
            det *= a[col][col].clone();
            let pv = a[col][col].clone();
            for r in col + 1..n {
                let f = &a[r][col] / &pv;
                for j in col..n {
                    let sub = &f * &a[col][j];
                    a[r][j] = &a[r][j] - &sub;
                }
            }
        }
        det
    }
}

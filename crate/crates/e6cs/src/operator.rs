//! The gauge-transformed operator in z-variables.
//!
//! The coefficient tables live as text in `operator_table.txt` so they can be
//! audited line by line; they are parsed once on first use. The operator acts
//! as `sum_{j,k} a_jk d_j d_k + sum_j (b0_j + k b1_j) d_j` with the double sum
//! over all ordered pairs (the convention is pinned by `apply(z1) = b_1 =
//! (32k + 8/3) z1` matching the eigenvalue of the label l1).
//!
//! Applied to a single monomial z^n the operator only lowers the weight:
//! every produced exponent p has n - p in the non-negative root lattice. The
//! possible drops are a fixed finite set determined by the tables, checked at
//! load time; `expansion_coefficients` exposes them per monomial.

use crate::e6::{inner_weight, weight_to_root, RHO};
use crate::kappa::{KPoly, KRat};
use crate::rep::fundamental_monomials;
use crate::text::parse_zpoly;
use crate::weight::{RootVec, Weight, RANK};
use crate::zpoly::ZPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::sync::OnceLock;

const TABLE_TEXT: &str = include_str!("operator_table.txt");

/// One stored second- or first-order table term, with its weight drop.
struct TableTerm {
    /// k-dependent coefficient (a-entries are k-free, b-entries linear in k).
    coeff: KRat,
    /// Variables differentiated: (j, k) with j <= k for second order.
    vars: (usize, Option<usize>),
    /// Weight lowered by this term, as a non-negative root-lattice element.
    drop: RootVec,
    /// Same drop in weight coordinates.
    drop_w: Weight,
}

pub struct OperatorSpec {
    a: Vec<Vec<ZPoly>>,
    b0: Vec<ZPoly>,
    b1: Vec<ZPoly>,
    terms: Vec<TableTerm>,
}

impl OperatorSpec {
    pub fn a(&self, j: usize, k: usize) -> &ZPoly {
        let (j, k) = if j <= k { (j, k) } else { (k, j) };
        &self.a[j - 1][k - j]
    }

    pub fn b0(&self, j: usize) -> &ZPoly {
        &self.b0[j - 1]
    }

    pub fn b1(&self, j: usize) -> &ZPoly {
        &self.b1[j - 1]
    }

    /// b_j = b0_j + k b1_j as a single polynomial.
    pub fn b(&self, j: usize) -> ZPoly {
        let kk = KRat::from_poly(KPoly::k());
        &self.b0[j - 1] + &self.b1[j - 1].scale(&kk)
    }
}

fn parse_table() -> OperatorSpec {
    let mut a: Vec<Vec<Option<ZPoly>>> = (0..RANK).map(|j| vec![None; RANK - j]).collect();
    let mut b0: Vec<Option<ZPoly>> = vec![None; RANK];
    let mut b1: Vec<Option<ZPoly>> = vec![None; RANK];
    for line in TABLE_TEXT.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, expr) = line.split_once(':').expect("table line needs ':'");
        let poly = parse_zpoly(expr).unwrap_or_else(|e| panic!("bad table entry {head}: {e}"));
        let fields: Vec<&str> = head.split_whitespace().collect();
        match fields.as_slice() {
            ["a", j, k] => {
                let j: usize = j.parse().unwrap();
                let k: usize = k.parse().unwrap();
                assert!(j <= k, "store only the upper triangle");
                a[j - 1][k - j] = Some(poly);
            }
            ["b0", j] => b0[j.parse::<usize>().unwrap() - 1] = Some(poly),
            ["b1", j] => b1[j.parse::<usize>().unwrap() - 1] = Some(poly),
            _ => panic!("unrecognized table head: {head}"),
        }
    }
    let a: Vec<Vec<ZPoly>> = a
        .into_iter()
        .map(|row| row.into_iter().map(|p| p.expect("missing a entry")).collect())
        .collect();
    let b0: Vec<ZPoly> = b0.into_iter().map(|p| p.expect("missing b0 entry")).collect();
    let b1: Vec<ZPoly> = b1.into_iter().map(|p| p.expect("missing b1 entry")).collect();

    let mut terms = Vec::new();
    let kk = KRat::from_poly(KPoly::k());
    for j in 1..=RANK {
        for k in j..=RANK {
            let factor = KRat::from_int(if j == k { 1 } else { 2 });
            for (gamma, c) in a[j - 1][k - j].terms() {
                let mut dw = Weight::ZERO;
                dw.0[j - 1] += 1;
                dw.0[k - 1] += 1;
                let drop_w = dw.sub(gamma);
                let drop = weight_to_root(&drop_w)
                    .filter(RootVec::is_nonnegative)
                    .unwrap_or_else(|| {
                        panic!("a[{j}][{k}] term z^{} raises the weight", gamma.label())
                    });
                terms.push(TableTerm {
                    coeff: c * &factor,
                    vars: (j, Some(k)),
                    drop,
                    drop_w,
                });
            }
        }
        let full_b = &b0[j - 1] + &b1[j - 1].scale(&kk);
        for (gamma, c) in full_b.terms() {
            let mut dw = Weight::ZERO;
            dw.0[j - 1] += 1;
            let drop_w = dw.sub(gamma);
            let drop = weight_to_root(&drop_w)
                .filter(RootVec::is_nonnegative)
                .unwrap_or_else(|| panic!("b[{j}] term z^{} raises the weight", gamma.label()));
            terms.push(TableTerm { coeff: c.clone(), vars: (j, None), drop, drop_w });
        }
    }
    OperatorSpec { a, b0, b1, terms }
}

pub fn operator() -> &'static OperatorSpec {
    static OP: OnceLock<OperatorSpec> = OnceLock::new();
    OP.get_or_init(parse_table)
}

impl OperatorSpec {
    /// Apply the operator with symbolic k to an arbitrary polynomial.
    pub fn apply(&self, p: &ZPoly) -> ZPoly {
        let kk = KRat::from_poly(KPoly::k());
        let mut out = ZPoly::zero();
        for j in 1..=RANK {
            let dj = p.partial(j);
            if dj.is_zero() {
                continue;
            }
            for k in j..=RANK {
                let djk = dj.partial(k);
                if djk.is_zero() {
                    continue;
                }
                let mut t = self.a(j, k) * &djk;
                if j != k {
                    t = t.scale(&KRat::from_int(2));
                }
                out = &out + &t;
            }
            let bj = &self.b0[j - 1] + &self.b1[j - 1].scale(&kk);
            out = &out + &(&bj * &dj);
        }
        out
    }

    /// Apply at a fixed rational coupling.
    pub fn apply_at(&self, p: &ZPoly, kappa: &BigRational) -> ZPoly {
        self.apply(p)
            .eval_kappa(kappa)
            .expect("operator coefficients are polynomial in k")
    }

    /// Image of the single monomial z^n, exploiting the fixed drop set.
    pub fn apply_monomial(&self, n: &Weight) -> ZPoly {
        let mut out = ZPoly::zero();
        for t in &self.terms {
            let f = monomial_factor(n, t);
            if f == 0 {
                continue;
            }
            let p = n.sub(&t.drop_w);
            debug_assert!(p.is_dominant());
            out.add_term(p, &(&t.coeff * &KRat::from_int(f)));
        }
        out
    }

    /// Drop decomposition of the image of z^n: pairs (beta, k_beta(kappa))
    /// with beta in the non-negative root lattice and z^n mapping to
    /// sum k_beta z^(n - beta). The beta = 0 coefficient is epsilon_n.
    pub fn expansion_coefficients(&self, n: &Weight) -> Vec<(RootVec, KRat)> {
        assert!(n.is_dominant(), "monomial exponent must be non-negative");
        let mut acc: std::collections::BTreeMap<RootVec, KRat> = std::collections::BTreeMap::new();
        for t in &self.terms {
            let f = monomial_factor(n, t);
            if f == 0 {
                continue;
            }
            let c = &t.coeff * &KRat::from_int(f);
            let e = acc.entry(t.drop).or_insert_with(KRat::zero);
            *e += &c;
        }
        acc.retain(|_, c| !c.is_zero());
        acc.into_iter().collect()
    }

    /// Iterator over the distinct drops the tables can produce, with their
    /// per-source bookkeeping left to the caller.
    pub(crate) fn push_drops<F: FnMut(&RootVec, &Weight, KRat)>(&self, n: &Weight, mut f: F) {
        for t in &self.terms {
            let fac = monomial_factor(n, t);
            if fac == 0 || t.drop.is_zero() {
                continue;
            }
            f(&t.drop, &t.drop_w, &t.coeff * &KRat::from_int(fac));
        }
    }
}

/// Integer factor produced by differentiating z^n in a table term.
fn monomial_factor(n: &Weight, t: &TableTerm) -> i64 {
    match t.vars {
        (j, Some(k)) if j == k => {
            let nj = n.0[j - 1] as i64;
            nj * (nj - 1)
        }
        (j, Some(k)) => (n.0[j - 1] as i64) * (n.0[k - 1] as i64),
        (j, None) => n.0[j - 1] as i64,
    }
}

/// Eigenvalue 2(m, m) + 4 kappa (m, rho) as an exact polynomial in k.
pub fn epsilon(m: &Weight) -> KRat {
    let c0 = inner_weight(m, m) * BigRational::from(BigInt::from(2));
    let c1 = inner_weight(m, &RHO) * BigRational::from(BigInt::from(4));
    let l = num_integer::Integer::lcm(c0.denom(), c1.denom());
    let n0 = c0.numer() * (&l / c0.denom());
    let n1 = c1.numer() * (&l / c1.denom());
    KRat::new(KPoly::from_coeffs(vec![n0, n1]), KPoly::from_coeffs(vec![l]))
}

/// Solve the k = 0 eigen-equations on the six fundamental monomial functions
/// for the first-order coefficients b0, given the stored a table. The system
/// resolves one b0_j at a time because each M carries z_j only linearly.
pub fn solve_b0_from_monomials() -> Result<Vec<ZPoly>, String> {
    let op = operator();
    let ms = fundamental_monomials();
    let mut solved: Vec<Option<ZPoly>> = vec![None; RANK];
    let mut progress = true;
    while progress {
        progress = false;
        for i in 1..=RANK {
            if solved[i - 1].is_some() {
                continue;
            }
            let m = &ms[i - 1];
            // need d_i M = 1 and every other contributing b0_j already solved
            if m.partial(i) != ZPoly::one() {
                continue;
            }
            let deps: Vec<usize> = (1..=RANK)
                .filter(|&j| j != i && !m.partial(j).is_zero())
                .collect();
            if deps.iter().any(|&j| solved[j - 1].is_none()) {
                continue;
            }
            // 2(l_i, l_i) M - second-order part - known first-order parts
            let lam = Weight::fundamental(i);
            let eig = epsilon(&lam)
                .eval(&BigRational::zero())
                .expect("epsilon is polynomial");
            let mut rhs = m.scale(&KRat::from_rational(&eig));
            for j in 1..=RANK {
                let dj = m.partial(j);
                if dj.is_zero() {
                    continue;
                }
                for k in j..=RANK {
                    let djk = dj.partial(k);
                    if djk.is_zero() {
                        continue;
                    }
                    let mut t = op.a(j, k) * &djk;
                    if j != k {
                        t = t.scale(&KRat::from_int(2));
                    }
                    rhs = &rhs - &t;
                }
            }
            for &j in &deps {
                rhs = &rhs - &(solved[j - 1].as_ref().unwrap() * &m.partial(j));
            }
            solved[i - 1] = Some(rhs);
            progress = true;
        }
    }
    let b0: Vec<ZPoly> = solved
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or(format!("b0[{}] could not be isolated", i + 1)))
        .collect::<Result<_, _>>()?;
    // the solved coefficients must satisfy all six equations simultaneously
    for i in 1..=RANK {
        let m = &ms[i - 1];
        let lam = Weight::fundamental(i);
        let eig = epsilon(&lam).eval(&BigRational::zero()).unwrap();
        let mut lhs = ZPoly::zero();
        for j in 1..=RANK {
            let dj = m.partial(j);
            if dj.is_zero() {
                continue;
            }
            for k in j..=RANK {
                let djk = dj.partial(k);
                if djk.is_zero() {
                    continue;
                }
                let mut t = op.a(j, k) * &djk;
                if j != k {
                    t = t.scale(&KRat::from_int(2));
                }
                lhs = &lhs + &t;
            }
            lhs = &lhs + &(&b0[j - 1] * &dj);
        }
        if lhs != m.scale(&KRat::from_rational(&eig)) {
            return Err(format!("solved b0 violates the equation for M_(l{i})"));
        }
    }
    Ok(b0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_to_z1_gives_b1() {
        let op = operator();
        let img = op.apply(&ZPoly::var(1));
        assert_eq!(img.to_string(), "(8 + 96*k)/(3)*z1");
        assert_eq!(img, ZPoly::var(1).scale(&epsilon(&Weight::fundamental(1))));
    }

    #[test]
    fn apply_to_constant_is_zero() {
        assert!(operator().apply(&ZPoly::one()).is_zero());
    }

    #[test]
    fn z1z6_coefficient_is_eigenvalue() {
        let op = operator();
        let m = Weight([1, 0, 0, 0, 0, 1]);
        let img = op.apply_monomial(&m);
        assert_eq!(img.coeff(&m), epsilon(&m));
    }

    #[test]
    fn epsilon_values() {
        // 2(l1,l1) + 4k(l1,rho) = 8/3 + 32k
        let e = epsilon(&Weight::fundamental(1));
        assert_eq!(e.to_string(), "(8 + 96*k)/(3)");
        assert!(epsilon(&Weight::ZERO).is_zero());
        let e2 = epsilon(&Weight::fundamental(2));
        assert_eq!(e2.eval(&BigRational::zero()).unwrap(), BigRational::from(BigInt::from(4)));
    }

    #[test]
    fn expansion_coefficients_examples() {
        let op = operator();
        // z^l1: single drop beta = 0 with 8/3 + 32k
        let e1 = op.expansion_coefficients(&Weight::fundamental(1));
        assert_eq!(e1.len(), 1);
        assert_eq!(e1[0].0, RootVec::ZERO);
        assert_eq!(e1[0].1, epsilon(&Weight::fundamental(1)));
        // z^l2: beta = 0 and the full drop to the constant with 24(k-1)
        let e2 = op.expansion_coefficients(&Weight::fundamental(2));
        assert_eq!(e2.len(), 2);
        assert_eq!(e2[0].0, RootVec::ZERO);
        assert_eq!(e2[0].1, epsilon(&Weight::fundamental(2)));
        assert_eq!(e2[1].0, RootVec([1, 2, 2, 3, 2, 1]));
        assert_eq!(e2[1].1.to_string(), "(-24 + 24*k)");
        // the zero exponent has an empty image
        assert!(op.expansion_coefficients(&Weight::ZERO).is_empty());
    }

    #[test]
    fn solved_b0_matches_table() {
        let op = operator();
        let b0 = solve_b0_from_monomials().unwrap();
        for j in 1..=RANK {
            assert_eq!(&b0[j - 1], op.b0(j), "b0[{j}] mismatch");
        }
        assert_eq!(b0[3], parse_zpoly("12*z4 - 16*z1*z6 - 24*z2 + 36").unwrap());
        assert_eq!(b0[0].to_string(), "(8)/(3)*z1");
        assert_eq!(b0[5].to_string(), "(8)/(3)*z6");
    }

    #[test]
    fn monomial_eigen_equation_at_zero() {
        // Delta^(0) M = 2(l,l) M for every fundamental monomial function
        let op = operator();
        let zero = BigRational::zero();
        for i in 1..=RANK {
            let m = &fundamental_monomials()[i - 1];
            let lam = Weight::fundamental(i);
            let eig = epsilon(&lam).eval(&zero).unwrap();
            assert_eq!(
                op.apply_at(m, &zero),
                m.scale(&KRat::from_rational(&eig)),
                "k=0 eigen-equation failed for M_(l{i})"
            );
        }
    }

    #[test]
    fn character_eigen_equation_at_one() {
        // Delta^(1) chi = eps(1) chi for the seven small characters
        let op = operator();
        let one = BigRational::from(BigInt::from(1));
        let mut cases: Vec<(Weight, ZPoly)> =
            (1..=RANK).map(|i| (Weight::fundamental(i), ZPoly::var(i))).collect();
        let mut chi16 = &ZPoly::var(1) * &ZPoly::var(6);
        chi16.add_term(Weight::fundamental(2), &KRat::from_int(-1));
        chi16.add_term(Weight::ZERO, &KRat::from_int(-1));
        cases.push((Weight([1, 0, 0, 0, 0, 1]), chi16));
        for (lam, chi) in cases {
            let eig = epsilon(&lam).eval(&one).unwrap();
            assert_eq!(
                op.apply_at(&chi, &one),
                chi.scale(&KRat::from_rational(&eig)),
                "k=1 eigen-equation failed for {lam}"
            );
        }
    }

    #[test]
    fn duality_conjugation_invariance() {
        // applying then swapping equals swapping then applying
        let op = operator();
        let samples = [
            "z1^2*z4 - 3*z2 + k*z5*z6 + 7",
            "z3*z5 + 2/(1+k)*z1*z2*z6 - z4^2",
            "z1 + z2 + z3 + z4 + z5 + z6 + 1",
        ];
        for s in samples {
            let p = crate::text::parse_zpoly(s).unwrap();
            assert_eq!(op.apply(&p).dual(), op.apply(&p.dual()), "duality failed on {s}");
        }
    }

    #[test]
    fn apply_monomial_matches_generic_apply() {
        let op = operator();
        for m in [
            Weight([1, 0, 0, 0, 0, 1]),
            Weight([0, 2, 0, 0, 0, 0]),
            Weight([1, 1, 1, 0, 0, 0]),
            Weight([0, 0, 0, 2, 1, 0]),
        ] {
            assert_eq!(op.apply_monomial(&m), op.apply(&ZPoly::from_exponent(&m)));
        }
    }
}

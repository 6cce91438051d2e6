//! Deformed Clebsch-Gordan series and recurrence coefficients.
//!
//! A product of two eigenpolynomials expands back into the eigenpolynomial
//! basis with k-rational coefficients. `deformed_cg` peels the expansion by
//! decreasing height: at each candidate label the residual's coefficient of
//! z^mu is the series coefficient, because every higher term has already been
//! subtracted and same-height polynomials cannot reach z^mu. The residual
//! must land on exactly zero.
//!
//! `recurrence_coefficients` specializes the same idea to z1 * P_{n l_k}.
//! The candidate labels are m + w over the 27 weights w of the orbit of l1
//! (those with m + w dominant), and all polynomials are solved truncated to
//! the window of heights >= the lowest candidate, which keeps the work small
//! for large n while still checking the identity on the whole window.

use crate::kappa::{KPoly, KRat};
use crate::orbits::{dominant_weights_below, orbit};
use crate::solver::{solve_cached, solve_truncated};
use crate::weight::{Weight, RANK};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

pub struct DeformedCgSeries {
    pub left: Weight,
    pub right: Weight,
    /// (label, coefficient) by decreasing height; leading term is (left+right, 1).
    pub terms: Vec<(Weight, KRat)>,
}

/// (x, rho) for a weight with integer coordinates; integral because each
/// fundamental weight has integral height 8, 11, 15, 21, 15, 8.
pub fn rho_height(x: &Weight) -> i32 {
    const H: [i32; RANK] = [8, 11, 15, 21, 15, 8];
    (0..RANK).map(|i| x.0[i] * H[i]).sum()
}

pub fn deformed_cg(left: &Weight, right: &Weight) -> Result<DeformedCgSeries, String> {
    if !left.is_dominant() || !right.is_dominant() {
        return Err("series labels must be dominant".into());
    }
    let pl = solve_cached(left)?;
    let pr = solve_cached(right)?;
    let mut residual = &pl * &pr;
    let top = left.add(right);
    let mut terms = Vec::new();
    for mu in dominant_weights_below(&top) {
        let c = residual.coeff(&mu);
        if c.is_zero() {
            continue;
        }
        let p = solve_cached(&mu)?;
        residual = &residual - &p.scale(&c);
        terms.push((mu, c));
    }
    if !residual.is_zero() {
        return Err(format!(
            "series peel for {} x {} left a nonzero residual",
            left.label(),
            right.label()
        ));
    }
    match terms.first() {
        Some((mu, c)) if *mu == top && c.is_one() => {}
        _ => return Err("series leading term is not (left+right, 1)".into()),
    }
    Ok(DeformedCgSeries { left: *left, right: *right, terms })
}

impl DeformedCgSeries {
    /// At k = 1 the coefficients are the classical tensor-product
    /// multiplicities; returns them with the dimension identity checked.
    pub fn classical_multiplicities(&self) -> Result<Vec<(Weight, BigInt)>, String> {
        let one = BigRational::from(BigInt::one());
        let mut out = Vec::new();
        let mut total = BigInt::zero();
        for (mu, c) in &self.terms {
            let v = c.eval(&one).ok_or("pole at k = 1")?;
            if !v.is_integer() || v.is_negative() {
                return Err(format!("coefficient of {} at k=1 is {}", mu.label(), v));
            }
            let n = v.to_integer();
            total += &n * crate::e6::weyl_dimension(mu).unwrap();
            out.push((*mu, n));
        }
        let want = crate::e6::weyl_dimension(&self.left).unwrap()
            * crate::e6::weyl_dimension(&self.right).unwrap();
        if total != want {
            return Err(format!("dimension identity failed: {total} vs {want}"));
        }
        Ok(out)
    }
}

pub struct RecurrenceFamily {
    pub variable: usize,
    pub n: i32,
    /// (label, coefficient) by decreasing height; leading term first.
    pub coefficients: Vec<(Weight, KRat)>,
}

/// Exact expansion of z1 * P_{n l_k} over the eigenpolynomial basis.
pub fn recurrence_coefficients(k: usize, n: i32) -> Result<RecurrenceFamily, String> {
    if !(1..=RANK).contains(&k) {
        return Err(format!("family index {k} out of 1..=6"));
    }
    if n < 1 {
        return Err("n must be positive".into());
    }
    let mut m = Weight::ZERO;
    m.0[k - 1] = n;

    let mut cands: Vec<Weight> = orbit(&Weight::fundamental(1))
        .members
        .iter()
        .map(|w| m.add(w))
        .filter(Weight::is_dominant)
        .collect();
    cands.sort_by(|a, b| rho_height(b).cmp(&rho_height(a)).then_with(|| b.cmp(a)));
    let lead = m.add(&Weight::fundamental(1));
    assert_eq!(cands.first(), Some(&lead));
    let min_h = cands.iter().map(rho_height).min().unwrap();

    // z1 * P_m truncated so that every kept exponent has height >= min_h
    let pm = solve_truncated(&m, rho_height(&m) + rho_height(&Weight::fundamental(1)) - min_h)?;
    let e1 = Weight::fundamental(1);
    let mut residual: BTreeMap<Weight, KRat> = BTreeMap::new();
    for (p, c) in pm {
        residual.insert(p.add(&e1), c);
    }

    let mut coefficients = Vec::new();
    for cand in &cands {
        let Some(c) = residual.get(cand).cloned() else { continue };
        if c.is_zero() {
            continue;
        }
        let part = solve_truncated(cand, rho_height(cand) - min_h)?;
        for (p, v) in part {
            let sub = &v * &c;
            let e = residual.entry(p).or_insert_with(KRat::zero);
            *e = &*e - &sub;
        }
        residual.retain(|_, v| !v.is_zero());
        coefficients.push((*cand, c));
    }
    // every kept exponent lies in the checked window, so the peel must be exact
    if !residual.is_empty() {
        let p = residual.keys().next().unwrap();
        return Err(format!(
            "recurrence peel for z1 * P_{} left residual at z^{}",
            m.label(),
            p.label()
        ));
    }
    match coefficients.first() {
        Some((mu, c)) if *mu == lead && c.is_one() => {}
        _ => return Err("recurrence leading term is not (m + l1, 1)".into()),
    }
    Ok(RecurrenceFamily { variable: k, n, coefficients })
}

/// c + d*k with small integers.
fn lin(c: i64, d: i64) -> KPoly {
    KPoly::from_ints(&[c, d])
}

fn closed_form(scale: i64, num: &[(i64, i64)], den: &[(i64, i64)]) -> KRat {
    let mut p = KPoly::constant(scale);
    for &(c, d) in num {
        p = &p * &lin(c, d);
    }
    let mut r = KRat::from_poly(p);
    for &(c, d) in den {
        r = &r / &KRat::from_poly(lin(c, d));
    }
    r
}

/// A printed closed form: coefficient name, the label pattern as printed,
/// and its value at a given n.
pub struct PrintedForm {
    pub name: &'static str,
    pub label: Weight,
    pub value: KRat,
}

fn lw(m: [i32; 6]) -> Weight {
    Weight(m)
}

/// The closed forms listed for the five z1 * P_{n l_k} shapes (k = 1 is
/// derived in the source's text, k = 2..6 in its display). Two documented
/// readings are applied: the k_n denominator fragment "(3n+11)k" is read as
/// "(3n+11k)", and the duplicated label printed for g_n is kept verbatim
/// here and resolved computationally by `verify_closed_forms`.
pub fn printed_forms(k: usize, n: i32) -> Vec<PrintedForm> {
    let n = n as i64;
    let ni = n as i32;
    match k {
        1 => vec![
            PrintedForm {
                name: "a_n",
                label: lw([ni - 1, 0, 1, 0, 0, 0]),
                value: closed_form(n, &[(n - 1, 2)], &[(n, 1), (n - 1, 1)]),
            },
            PrintedForm {
                name: "b_n",
                label: lw([ni - 1, 0, 0, 0, 0, 1]),
                value: closed_form(
                    n,
                    &[(n, 3), (n - 1, 5), (n - 1, 8)],
                    &[(n - 1, 1), (n - 1, 4), (n, 4), (n, 7)],
                ),
            },
        ],
        2 => vec![
            PrintedForm {
                name: "c_n",
                label: lw([0, ni - 1, 0, 0, 1, 0]),
                value: closed_form(n, &[(n - 1, 5)], &[(n - 1, 1), (n, 4)]),
            },
            PrintedForm {
                name: "d_n",
                label: lw([1, ni - 1, 0, 0, 0, 0]),
                value: closed_form(
                    2 * n,
                    &[(n, 2), (n - 1, 6), (n - 1, 8), (2 * n - 1, 12)],
                    &[(n - 1, 1), (n - 1, 3), (n, 7), (2 * n - 1, 11), (2 * n, 11)],
                ),
            },
        ],
        3 => vec![
            PrintedForm {
                name: "e_n",
                label: lw([0, 0, ni - 1, 1, 0, 0]),
                value: closed_form(n, &[(n - 1, 3)], &[(n - 1, 1), (n, 2)]),
            },
            PrintedForm {
                name: "f_n",
                label: lw([1, 0, ni - 1, 0, 0, 1]),
                value: closed_form(
                    2 * n,
                    &[(n, 2), (n - 1, 4), (n - 1, 6), (2 * n - 1, 8)],
                    &[(n - 1, 1), (n - 1, 3), (n, 5), (2 * n - 1, 7), (2 * n, 7)],
                ),
            },
            // printed with the same label as f_n; see verify_closed_forms
            PrintedForm {
                name: "g_n",
                label: lw([1, 0, ni - 1, 0, 0, 1]),
                value: closed_form(
                    n,
                    &[(n, 1), (n, 3), (n - 1, 5), (n - 1, 6), (2 * n - 1, 11)],
                    &[(n - 1, 1), (n - 1, 2), (n, 4), (n, 5), (n, 5), (2 * n - 1, 7)],
                ),
            },
        ],
        4 => vec![
            PrintedForm {
                name: "h_n",
                label: lw([0, 1, 0, ni - 1, 1, 0]),
                value: closed_form(n, &[(n - 1, 4)], &[(n - 1, 1), (n, 3)]),
            },
            PrintedForm {
                name: "i_n",
                label: lw([0, 0, 1, ni - 1, 0, 1]),
                value: closed_form(
                    n,
                    &[(n, 1), (n - 1, 3), (n - 1, 4), (2 * n - 1, 7)],
                    &[(n - 1, 1), (n - 1, 2), (n, 3), (n, 3), (2 * n - 1, 5)],
                ),
            },
            PrintedForm {
                name: "j_n",
                label: lw([1, 1, 0, ni - 1, 0, 0]),
                value: closed_form(
                    6 * n,
                    &[(n, 1), (n, 2), (n - 1, 4), (n - 1, 5), (2 * n - 1, 8), (3 * n - 1, 11)],
                    &[
                        (n - 1, 1),
                        (n - 1, 2),
                        (n, 4),
                        (2 * n - 1, 5),
                        (2 * n, 7),
                        (3 * n - 1, 10),
                        (3 * n, 10),
                    ],
                ),
            },
            PrintedForm {
                name: "k_n",
                label: lw([0, 0, 0, ni - 1, 1, 0]),
                value: closed_form(
                    3 * n,
                    &[
                        (n, 1),
                        (n, 2),
                        (n - 1, 4),
                        (n - 1, 5),
                        (2 * n, 5),
                        (2 * n - 1, 8),
                        (2 * n - 1, 9),
                        (3 * n - 1, 12),
                    ],
                    &[
                        (n - 1, 1),
                        (n - 1, 2),
                        (n, 4),
                        (n, 4),
                        (2 * n - 1, 5),
                        (2 * n - 1, 6),
                        (2 * n, 7),
                        (3 * n - 1, 10),
                        (3 * n, 11),
                    ],
                ),
            },
        ],
        5 => vec![
            PrintedForm {
                name: "l_n",
                label: lw([0, 1, 0, 0, ni - 1, 1]),
                value: closed_form(n, &[(n - 1, 5)], &[(n - 1, 1), (n, 4)]),
            },
            PrintedForm {
                name: "p_n",
                label: lw([0, 0, 1, 0, ni - 1, 0]),
                value: closed_form(
                    n,
                    &[(n, 1), (n - 1, 4), (n - 1, 5), (2 * n - 1, 9)],
                    &[(n - 1, 1), (n - 1, 2), (n, 4), (n, 4), (2 * n - 1, 7)],
                ),
            },
            PrintedForm {
                name: "q_n",
                label: lw([0, 0, 0, 0, ni - 1, 1]),
                value: closed_form(
                    2 * n,
                    &[(n, 2), (n, 3), (n - 1, 6), (n - 1, 8), (2 * n - 1, 12)],
                    &[(n - 1, 1), (n - 1, 3), (n, 5), (n, 7), (2 * n - 1, 7), (2 * n, 11)],
                ),
            },
        ],
        6 => vec![
            PrintedForm {
                name: "r_n",
                label: lw([0, 1, 0, 0, 0, ni - 1]),
                value: closed_form(n, &[(n - 1, 6)], &[(n - 1, 1), (n, 5)]),
            },
            PrintedForm {
                name: "s_n",
                label: lw([0, 0, 0, 0, 0, ni - 1]),
                value: closed_form(
                    n,
                    &[(n, 3), (n - 1, 9), (n - 1, 12)],
                    &[(n - 1, 1), (n - 1, 4), (n, 8), (n, 11)],
                ),
            },
        ],
        _ => panic!("family index out of range"),
    }
}

pub struct ClosedFormCheck {
    pub name: &'static str,
    pub n: i32,
    pub printed_label: Weight,
    /// Label the coefficient actually sits on in the computed expansion.
    pub used_label: Weight,
    pub computed: KRat,
    pub printed: KRat,
    pub pass: bool,
}

pub struct ClosedFormReport {
    pub variable: usize,
    pub checks: Vec<ClosedFormCheck>,
    pub notes: Vec<String>,
}

impl ClosedFormReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Compare the computed z1 * P_{n l_k} expansions against the printed closed
/// forms for n = 1..=n_max. Mismatches are reported with the computed
/// correction, not treated as fatal. The duplicated printed label in the
/// k = 3 family is resolved by matching values against the computed
/// expansion.
pub fn verify_closed_forms(k: usize, n_max: i32) -> Result<ClosedFormReport, String> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    for n in 1..=n_max {
        let fam = recurrence_coefficients(k, n)?;
        let computed: BTreeMap<Weight, KRat> = fam.coefficients.iter().cloned().collect();
        let forms = printed_forms(k, n);
        let mut matched: Vec<Weight> = vec![fam.coefficients[0].0];
        // direct label matches first
        let duplicated = k == 3;
        for (idx, form) in forms.iter().enumerate() {
            let is_dup_slot = duplicated && idx == 2;
            if is_dup_slot {
                continue;
            }
            let got = computed.get(&form.label).cloned().unwrap_or_else(KRat::zero);
            checks.push(ClosedFormCheck {
                name: form.name,
                n,
                printed_label: form.label,
                used_label: form.label,
                computed: got.clone(),
                printed: form.value.clone(),
                pass: got == form.value,
            });
            matched.push(form.label);
        }
        if duplicated {
            // the third printed coefficient reuses f_n's label; find the
            // computed label whose coefficient equals the printed value
            let form = &forms[2];
            let remaining: Vec<&Weight> =
                computed.keys().filter(|w| !matched.contains(w)).collect();
            let hit = remaining
                .iter()
                .find(|w| computed[**w] == form.value)
                .copied()
                .copied();
            match hit {
                Some(label) => {
                    notes.push(format!(
                        "n={n}: printed label {} for {} duplicates the {} label; the computed \
                         expansion carries this coefficient on label {}",
                        form.label.label(),
                        form.name,
                        forms[1].name,
                        label.label()
                    ));
                    checks.push(ClosedFormCheck {
                        name: form.name,
                        n,
                        printed_label: form.label,
                        used_label: label,
                        computed: computed[&label].clone(),
                        printed: form.value.clone(),
                        pass: true,
                    });
                    matched.push(label);
                }
                None => {
                    checks.push(ClosedFormCheck {
                        name: form.name,
                        n,
                        printed_label: form.label,
                        used_label: form.label,
                        computed: KRat::zero(),
                        printed: form.value.clone(),
                        pass: false,
                    });
                    notes.push(format!(
                        "n={n}: no computed coefficient matches the printed {}",
                        form.name
                    ));
                }
            }
        }
        // any computed label the printed list does not cover is a finding
        for (w, c) in &computed {
            if !matched.contains(w) {
                notes.push(format!(
                    "n={n}: computed expansion has an unlisted term: label {} coefficient {}",
                    w.label(),
                    c
                ));
            }
        }
    }
    Ok(ClosedFormReport { variable: k, checks, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_krat;

    fn w(m: [i32; 6]) -> Weight {
        Weight(m)
    }

    #[test]
    fn identity_element_series() {
        let s = deformed_cg(&Weight::ZERO, &w([0, 1, 0, 0, 0, 0])).unwrap();
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[0], (w([0, 1, 0, 0, 0, 0]), KRat::one()));
    }

    #[test]
    fn lambda1_squared_series() {
        let s = deformed_cg(&Weight::fundamental(1), &Weight::fundamental(1)).unwrap();
        let want = [
            (w([2, 0, 0, 0, 0, 0]), "1"),
            (w([0, 0, 1, 0, 0, 0]), "2/(1+k)"),
            (w([0, 0, 0, 0, 0, 1]), "10(1+3k)/((1+4k)(1+7k))"),
        ];
        assert_eq!(s.terms.len(), want.len());
        for ((wl, c), (we, ce)) in s.terms.iter().zip(want) {
            assert_eq!(*wl, we);
            assert_eq!(*c, parse_krat(ce).unwrap());
        }
    }

    #[test]
    fn lambda1_lambda6_series() {
        let s = deformed_cg(&Weight::fundamental(1), &Weight::fundamental(6)).unwrap();
        let want = [
            (w([1, 0, 0, 0, 0, 1]), "1"),
            (w([0, 1, 0, 0, 0, 0]), "6/(1+5k)"),
            (Weight::ZERO, "27(1+3k)/((1+8k)(1+11k))"),
        ];
        assert_eq!(s.terms.len(), want.len());
        for ((wl, c), (we, ce)) in s.terms.iter().zip(want) {
            assert_eq!(*wl, we);
            assert_eq!(*c, parse_krat(ce).unwrap());
        }
    }

    #[test]
    fn classical_dimension_identity_27x27() {
        let s = deformed_cg(&Weight::fundamental(1), &Weight::fundamental(1)).unwrap();
        let mults = s.classical_multiplicities().unwrap();
        let total: BigInt = mults
            .iter()
            .map(|(mu, n)| n * crate::e6::weyl_dimension(mu).unwrap())
            .sum();
        assert_eq!(total, BigInt::from(729));
    }

    #[test]
    fn duality_of_series() {
        let a = deformed_cg(&Weight::fundamental(1), &Weight::fundamental(3)).unwrap();
        let b = deformed_cg(&Weight::fundamental(6), &Weight::fundamental(5)).unwrap();
        let mapped: BTreeMap<Weight, KRat> =
            a.terms.iter().map(|(w, c)| (w.dual(), c.clone())).collect();
        let direct: BTreeMap<Weight, KRat> = b.terms.into_iter().collect();
        assert_eq!(mapped, direct);
    }

    #[test]
    fn recurrence_n1_matches_quadratic_series() {
        // z1 P_{l1} is the (l1, l1) series
        let fam = recurrence_coefficients(1, 1).unwrap();
        let s = deformed_cg(&Weight::fundamental(1), &Weight::fundamental(1)).unwrap();
        assert_eq!(fam.coefficients, s.terms);
    }

    #[test]
    fn printed_a2_value() {
        // a_2 = 2(1+2k)/((2+k)(1+k))
        let forms = printed_forms(1, 2);
        assert_eq!(forms[0].value, parse_krat("2(1+2k)/((2+k)(1+k))").unwrap());
    }

    #[test]
    fn printed_b1_and_r1_reduce() {
        let b1 = &printed_forms(1, 1)[1];
        assert_eq!(b1.value, parse_krat("10(1+3k)/((1+4k)(1+7k))").unwrap());
        let r1 = &printed_forms(6, 1)[0];
        assert_eq!(r1.value, parse_krat("6/(1+5k)").unwrap());
    }

    #[test]
    fn closed_forms_family_1_small_n() {
        let report = verify_closed_forms(1, 2).unwrap();
        assert!(report.all_pass(), "family 1 closed forms failed");
    }

    #[test]
    fn closed_forms_family_6_small_n() {
        let report = verify_closed_forms(6, 2).unwrap();
        assert!(report.all_pass(), "family 6 closed forms failed");
    }

    #[test]
    fn duplicate_label_resolved_in_family_3() {
        let report = verify_closed_forms(3, 1).unwrap();
        assert!(report.all_pass());
        assert!(
            report.notes.iter().any(|n| n.contains("label 010000")),
            "expected the duplicated label to resolve to 010000 at n=1: {:?}",
            report.notes
        );
    }
}

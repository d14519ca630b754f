use proptest::prelude::*;

use scrolldiv::algebra::{compare_revlex, Monomial};
use scrolldiv::groebner::{buchberger, verify_gb, DEFAULT_MAX_PAIRS};
use scrolldiv::resolution::{
    en_ranks, euler_check, factor_resolution, filtration_fine, ComplexRanks,
};
use scrolldiv::scroll::{build_psi, minors_h};
use scrolldiv::symbolic::{
    canonical_form, enumerate_eligible, generating_set_l, in_symbolic_power, is_canonical_shape, neighbor,
};
use scrolldiv::ScrollData;

const SIGMAS: [&[u32]; 7] = [&[1, 1], &[2, 1], &[2, 2], &[3, 1], &[3, 2], &[3, 2, 1], &[4]];

fn config() -> impl Strategy<Value = ScrollData> {
    (0..SIGMAS.len(), 2u32..7).prop_map(|(i, n)| ScrollData::new(SIGMAS[i].to_vec(), n, 32003).unwrap())
}

fn config_and_monomial(max_exp: u32) -> impl Strategy<Value = (ScrollData, Monomial)> {
    config().prop_flat_map(move |d| {
        let nv = d.nvars();
        (Just(d), proptest::collection::vec(0..=max_exp, nv))
            .prop_map(|(d, e)| (d, Monomial::from_exponents(e)))
    })
}

proptest! {
    #[test]
    fn revlex_is_a_multiplicative_total_order(
        a in proptest::collection::vec(0u32..4, 5),
        b in proptest::collection::vec(0u32..4, 5),
        c in proptest::collection::vec(0u32..4, 5),
    ) {
        let (a, b, c) = (Monomial::from_exponents(a), Monomial::from_exponents(b), Monomial::from_exponents(c));
        let ab = compare_revlex(&a, &b).unwrap();
        prop_assert_eq!(ab, a.cmp(&b));
        prop_assert_eq!(ab.reverse(), compare_revlex(&b, &a).unwrap());
        prop_assert_eq!(compare_revlex(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
        if !c.is_one() {
            prop_assert!(a.mul(&c) > a);
        }
    }

    #[test]
    fn canonical_form_invariants((d, m) in config_and_monomial(3)) {
        prop_assume!(d.deg(&m) > 0);
        let c = canonical_form(&d, &m).unwrap();
        prop_assert!(is_canonical_shape(&d, &c), "{}", d.format_monomial(&c));
        prop_assert_eq!(d.pi_image(&c), d.pi_image(&m));
        prop_assert_eq!(canonical_form(&d, &c).unwrap(), c.clone());
        let ring = d.ring();
        let diff = ring.sub(&ring.monomial(1, m.clone()), &ring.monomial(1, c.clone()));
        prop_assert!(ring.normal_form(&diff, &minors_h(&d, &build_psi(&d))).is_zero());
    }

    #[test]
    fn membership_via_generators((d, m) in config_and_monomial(3)) {
        prop_assume!(d.deg(&m) > 0);
        let c = canonical_form(&d, &m).unwrap();
        let divisible = generating_set_l(&d).iter().any(|g| g.divides(&c));
        prop_assert_eq!(divisible, in_symbolic_power(&d, &m));
    }

    #[test]
    fn minors_form_a_basis_in_every_characteristic(
        i in 0..SIGMAS.len(),
        p in prop::sample::select(vec![2u32, 3, 7, 101, 32003]),
    ) {
        let d = ScrollData::new(SIGMAS[i].to_vec(), 2, p).unwrap();
        prop_assert!(verify_gb(&d.ring(), &minors_h(&d, &build_psi(&d))).ok);
    }
}

#[test]
fn neighbours_are_adjacent() {
    for s in SIGMAS {
        for n in 2..8 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            let list = enumerate_eligible(&d);
            assert!(list.first().unwrap().a.is_empty());
            assert_eq!(list.last().unwrap().a, vec![0; d.ell() - 1]);
            for (pos, a) in list.iter().enumerate() {
                assert!(1 <= a.r && a.r <= d.sigma()[a.k()]);
                if a.k() + 1 == d.ell() {
                    assert!(neighbor(&d, a).is_err());
                    continue;
                }
                let b = neighbor(&d, a).unwrap();
                assert_eq!(list[pos + 1], b, "sigma={s:?} n={n} a={a}");
                if a.r == d.sigma()[a.k()] {
                    assert_eq!((b.f, b.r), (0, d.sigma()[a.k() + 1]));
                }
            }
        }
    }
}

#[test]
fn saturation_binomials_vanish_modulo_minors() {
    for s in SIGMAS {
        let d = ScrollData::new(s.to_vec(), 2, 32003).unwrap();
        let ring = d.ring();
        let g = minors_h(&d, &build_psi(&d));
        for i in 1..=d.ell() {
            let si = d.sigma_at(i) as usize;
            for j in 1..=si {
                let lhs = d.var(i, si + 1).pow((si - j) as u32).mul(&d.var(i, j));
                let rhs = d.var(i, si).pow((si + 1 - j) as u32);
                let b = ring.from_terms([(1, lhs), (-1, rhs)]);
                assert!(ring.normal_form(&b, &g).is_zero(), "T{i},{j}");
            }
        }
    }
}

#[test]
fn generator_degree_bound() {
    for s in SIGMAS {
        for n in 2..8 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            let top = generating_set_l(&d).iter().map(Monomial::total_degree).max().unwrap();
            assert_eq!(top, n.div_ceil(*s.last().unwrap()));
        }
    }
}

#[test]
fn engine_agrees_with_closed_form_basis() {
    for s in SIGMAS {
        for n in 2..6 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            let ring = d.ring();
            let mut gens = minors_h(&d, &build_psi(&d));
            gens.extend(generating_set_l(&d).into_iter().map(|m| ring.monomial(1, m)));
            // same initial ideal: compare minimal generators of the lead sets
            let leads: Vec<Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
            let mut want: Vec<Monomial> = leads
                .iter()
                .filter(|m| !leads.iter().any(|o| o != *m && o.divides(m)))
                .cloned()
                .collect();
            want.sort_by(|a, b| b.cmp(a));
            want.dedup();
            let gb = buchberger(&ring, &gens, DEFAULT_MAX_PAIRS).unwrap();
            assert!(gb.certified);
            assert_eq!(gb.leads(), want, "sigma={s:?} n={n}");
        }
    }
}

#[test]
fn eagon_northcott_linearity() {
    for s in SIGMAS {
        for n in 2..7 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            for a in enumerate_eligible(&d) {
                let gaps = en_ranks(&d, &a).band_gaps().expect("one band per position");
                let r = a.r as usize;
                let degenerate = a.k() + 1 == d.ell() && a.r == d.sigma()[a.k()];
                for (p, &g) in gaps.iter().enumerate() {
                    let want = if !degenerate && p + 1 == r { 2 } else { 1 };
                    assert_eq!(g, want, "sigma={s:?} n={n} a={a} p={p}");
                }
            }
        }
    }
}

#[test]
fn euler_check_detects_missing_factors() {
    let d = ScrollData::new(vec![3, 2, 1], 4, 32003).unwrap();
    let parts: Vec<ComplexRanks> = filtration_fine(&d).iter().map(|f| factor_resolution(&d, f)).collect();
    let all = ComplexRanks::direct_sum(&parts);
    assert!(euler_check(&d, &all, 7).ok);
    let without_last = ComplexRanks::direct_sum(&parts[..parts.len() - 1]);
    assert!(!euler_check(&d, &without_last, 7).ok);
    // Dropping a syzygy breaks it too.
    let mut broken = all.clone();
    broken.modules[1].shifts.pop();
    assert!(!euler_check(&d, &broken, 7).ok);
}

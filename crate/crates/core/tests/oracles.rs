use scrolldiv::betti::{invariants_from_betti, koszul_betti};
use scrolldiv::groebner::{depth_certificate, DEFAULT_MAX_PAIRS};
use scrolldiv::resolution::{filtration, hilbert_function, Filtration, HilbertTarget};
use scrolldiv::ScrollData;

const SIGMAS: [&[u32]; 6] = [&[1, 1], &[2, 1], &[2, 2], &[3, 1], &[3, 2], &[3, 2, 1]];

#[test]
fn invariants_of_the_largest_desk_scroll() {
    let d = ScrollData::new(vec![3, 2, 1], 4, 32003).unwrap();
    let inv = invariants_from_betti(&koszul_betti(&d, None).unwrap(), &d).unwrap();
    assert_eq!((inv.pd, inv.depth, inv.reg), (7, 2, 4));
}

#[test]
fn betti_tables_do_not_depend_on_the_prime() {
    for (sigma, n) in [(&[2u32, 2][..], 3), (&[3, 1][..], 4), (&[3, 2, 1][..], 2)] {
        let tables: Vec<_> = [7, 101, 32003]
            .iter()
            .map(|&p| koszul_betti(&ScrollData::new(sigma.to_vec(), n, p).unwrap(), None).unwrap().fine)
            .collect();
        assert_eq!(tables[0], tables[1]);
        assert_eq!(tables[1], tables[2]);
    }
}

#[test]
fn depth_certificates_on_the_desk() {
    for s in SIGMAS {
        for n in 2..=5 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            let c = depth_certificate(&d, DEFAULT_MAX_PAIRS).unwrap_or_else(|e| panic!("{s:?} {n}: {e}"));
            assert_eq!(c.regular.block, d.ell());
            assert!(c.enlarged_basis.certified);
        }
    }
}

#[test]
fn filtration_factors_add_up_to_the_ideal() {
    for s in SIGMAS {
        for n in 2..=5 {
            let d = ScrollData::new(s.to_vec(), n, 32003).unwrap();
            let want = hilbert_function(&d, HilbertTarget::Ideal, 7);
            for which in [Filtration::Fine, Filtration::Coarse] {
                let mut sum = vec![0; 8];
                for f in filtration(&d, which) {
                    for (t, v) in hilbert_function(&d, HilbertTarget::Factor(&f), 7).into_iter().enumerate() {
                        sum[t] += v;
                    }
                }
                assert_eq!(sum, want, "{s:?} n={n} {which:?}");
            }
        }
    }
}

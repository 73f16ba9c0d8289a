mod oracles;

use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

use hyperq::fence::{fence, ideals, iso_check, qcw_fence, rgf, stilde, weight_check};
use hyperq::hyperbinary::{
    enumerate, h_count, h_q, h_q_enumerated, h_rs, h_rs_enumerated, lattice_join, lattice_meet, leq, max_element,
    min_element,
};
use hyperq::matrices::{entries_formula, m_of, m_prime_check, row_sum_check, Mat2};
use hyperq::poly::LaurentPoly;
use hyperq::qrational::{cf_expand, cf_odd, cw_index, qdeform, qdeform_cf, qdeform_shift_check, qdeform_via_graph};
use hyperq::stern::{cw, cw_big, cw_q, fusc, fusc_q};

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=2048u64 {
        let got: Vec<Vec<u8>> = enumerate(n).iter().map(|d| d.digits().to_vec()).collect();
        assert_eq!(got, oracles::expansions(n), "n={n}");
    }
}

#[test]
fn generating_functions_match_brute_force() {
    for n in 0..=1024u64 {
        assert_eq!(h_q(n as i64), oracles::h_q(n), "n={n}");
        assert_eq!(h_rs(n as i64), oracles::h_rs(n), "n={n}");
    }
}

#[test]
fn ideals_match_brute_force() {
    for n in 1..=4096u64 {
        let f = fence(n);
        let mut brute = oracles::ideals(f.size(), &f.covers());
        brute.sort_by_key(|x| (x.count_ones(), *x));
        let dp: Vec<u64> = ideals(&f).iter().map(|i| i.0).collect();
        assert_eq!(dp, brute, "n={n}");
        assert_eq!(dp.len(), h_count(n));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fusc_recurrence(n in 1u64..1 << 40) {
        prop_assert_eq!(fusc(2 * n), fusc(n));
        prop_assert_eq!(fusc(2 * n + 1), fusc(n) + fusc(n + 1));
        prop_assert_eq!(fusc_q(2 * n), fusc_q(n).shift(1));
        prop_assert_eq!(fusc_q(2 * n + 1), fusc_q(n + 1) + fusc_q(n).shift(2));
    }

    #[test]
    fn fusc_q_is_h_q_shifted(n in 0u64..1 << 30) {
        prop_assert_eq!(fusc_q(n + 1), h_q(n as i64));
        prop_assert_eq!(fusc_q(n).eval_at_one(), fusc(n).into());
    }

    #[test]
    fn cw_consecutive_terms_are_coprime(n in 0u64..1 << 50) {
        let c = cw(n);
        prop_assert_eq!(c.num().gcd(c.den()), BigUint::from(1u32));
    }

    #[test]
    fn cw_index_inverts_cw(r in 1u64..5000, s in 1u64..5000) {
        let g = r.gcd(&s);
        let n = cw_index(r, s).unwrap();
        prop_assert_eq!(cw_big(&n).to_string(), format!("{}/{}", r / g, s / g));
    }

    #[test]
    fn q_calkin_wilf_is_q_deformation(n in 1u64..1 << 24) {
        let c = cw(n);
        let (r, s) = (c.num().to_u64_digits()[0], c.den().to_u64_digits()[0]);
        prop_assert_eq!(qdeform(r, s).unwrap(), cw_q(n).scale(&LaurentPoly::q()));
    }

    #[test]
    fn q_deformation_models_agree(r in 1u64..400, s in 1u64..400) {
        prop_assert!(qdeform_shift_check(r, s).unwrap());
        prop_assert_eq!(qdeform_cf(&cf_odd(r, s).unwrap()).unwrap(), qdeform_cf(&cf_expand(r, s).unwrap()).unwrap());
        if r > s {
            prop_assert_eq!(qdeform_via_graph(r, s).unwrap(), qdeform(r, s).unwrap());
        }
    }

    #[test]
    fn s_vector_meet_and_join_stay_in_the_lattice(n in 1u64..256, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let all = enumerate(n);
        let (a, b) = (&all[i.index(all.len())], &all[j.index(all.len())]);
        let (m, x) = (lattice_meet(a, b).unwrap(), lattice_join(a, b).unwrap());
        prop_assert!(leq(&m, a).unwrap() && leq(&m, b).unwrap());
        prop_assert!(leq(a, &x).unwrap() && leq(b, &x).unwrap());
        prop_assert!(leq(&min_element(n), &m).unwrap() && leq(&x, &max_element(n)).unwrap());
    }

    #[test]
    fn fence_identities(n in 1u64..1 << 20) {
        prop_assert!(weight_check(n));
        prop_assert_eq!(qcw_fence(n).unwrap(), cw_q(n));
        let g = rgf(n);
        prop_assert_eq!(g.coeff(0), 1.into());
        prop_assert_eq!(g.max_exp(), Some(fence(n).size() as i64));
    }

    #[test]
    fn isomorphism_holds(n in 1u64..1 << 14) {
        let rep = iso_check(n);
        prop_assert!(rep.ok, "{:?}", rep.counterexample);
        prop_assert_eq!(rep.size, h_count(n));
    }

    #[test]
    fn stilde_entries_are_bits(n in 1u64..1 << 12) {
        for d in enumerate(n) {
            prop_assert!(stilde(&d).unwrap().iter().all(|&b| b <= 1));
        }
    }

    #[test]
    fn matrix_identities(n in 1u64..1 << 32) {
        let m = m_of(n).unwrap();
        prop_assert_eq!(entries_formula(n).unwrap(), m.clone());
        prop_assert!(row_sum_check(n).unwrap());
        prop_assert_eq!(m_of(2 * n).unwrap(), &Mat2::l() * &m);
        prop_assert_eq!(m_of(2 * n + 1).unwrap(), &Mat2::r() * &m);
    }

    #[test]
    fn m_prime_row_sums(n in 1u64..1 << 16) {
        prop_assert!(m_prime_check(n).unwrap());
    }

    #[test]
    fn recurrences_match_enumeration(n in 0u64..1 << 16) {
        prop_assert_eq!(h_q(n as i64), h_q_enumerated(n));
        prop_assert_eq!(h_rs(n as i64), h_rs_enumerated(n));
    }
}

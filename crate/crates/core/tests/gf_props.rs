mod support;

use k2slot_core::gf::{mth_power_index, norm_to_base, poly_factor, ExtField, Poly};
use proptest::prelude::*;
use rand::Rng;
use support::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        for k in configs() {
            let (a, b, c) = (elem(&k, &mut r), elem(&k, &mut r), elem(&k, &mut r));
            prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
            prop_assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
            prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
            prop_assert_eq!(k.add(a, k.neg(a)), k.from_int(0));
            if !a.is_zero() {
                prop_assert_eq!(k.mul(a, k.inv(a)), k.from_int(1));
            }
        }
    }

    #[test]
    fn factor_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        for k in configs() {
            let f = nonzero_poly(&k, r.gen_range(0..=12), &mut r);
            let fac = poly_factor(&f, &k, seed).unwrap();
            prop_assert_eq!(fac.expand(&k), f.clone());
            for (g, e) in &fac.factors {
                prop_assert!(g.is_monic() && *e >= 1);
                prop_assert!(g.degree() > Some(4) || brute_irreducible(g, &k));
            }
            let mut sorted = fac.factors.clone();
            sorted.sort();
            prop_assert_eq!(&sorted, &fac.factors);
        }
    }

    #[test]
    fn index_is_a_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        for k in configs() {
            let d = r.gen_range(1..=3);
            let kap = ExtField::new(&k, least_irreducible(d, &k)).unwrap();
            let x = nonzero_ext(&kap, &mut r);
            let y = nonzero_ext(&kap, &mut r);
            let ix = mth_power_index(&x, &kap).unwrap();
            let iy = mth_power_index(&y, &kap).unwrap();
            prop_assert_eq!(mth_power_index(&kap.mul(&x, &y), &kap).unwrap(), (ix + iy) % k.m());
        }
    }

    #[test]
    fn norm_compatibility(seed in any::<u64>()) {
        let mut r = rng(seed);
        for k in configs() {
            let d = r.gen_range(1..=4);
            let kap = ExtField::new(&k, least_irreducible(d, &k)).unwrap();
            let x = nonzero_ext(&kap, &mut r);
            let via_norm = k.power_index(norm_to_base(&x, &kap)).unwrap();
            prop_assert_eq!(via_norm, direct_index(&x, &kap));
            prop_assert_eq!(mth_power_index(&x, &kap).unwrap(), via_norm);
        }
    }

    #[test]
    fn factorization_is_deterministic(seed in any::<u64>(), q_idx in 0usize..10) {
        let (q, m) = CONFIGS[q_idx];
        let k = field(q, m);
        let mut r = rng(seed);
        let f = nonzero_poly(&k, 10, &mut r);
        let a = poly_factor(&f, &k, seed).unwrap();
        let b = poly_factor(&f, &k, seed).unwrap();
        prop_assert_eq!(&a, &b);
        // the canonical output does not depend on the seed either
        prop_assert_eq!(&a, &poly_factor(&f, &k, seed ^ 0x9e37).unwrap());
    }
}

fn nonzero_ext(kap: &ExtField, r: &mut impl Rng) -> Poly {
    let k = kap.base();
    loop {
        let x = poly(k, kap.degree() - 1, r);
        if !x.is_zero() {
            return x;
        }
    }
}

#[test]
fn power_index_counts_cosets() {
    // exactly (q-1)/m elements of each index
    for k in configs() {
        let mut counts = vec![0u32; k.m() as usize];
        for a in k.nonzero_elements() {
            counts[k.power_index(a).unwrap() as usize] += 1;
        }
        assert!(
            counts.iter().all(|&c| c == (k.q() - 1) / k.m()),
            "q={} m={}",
            k.q(),
            k.m()
        );
    }
}

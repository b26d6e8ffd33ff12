//! Engine results against the brute-force oracle.

mod common;

use common::{indices, small_rings, Naive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rickart_core::ideals::{enumerate_idempotents, left_annihilator, right_annihilator};
use rickart_core::kernel::right_annihilator_by_kernel;
use rickart_core::properties::{is_generalized_right_pp, is_right_rickart};

#[test]
fn annihilators_match_oracle_on_every_element() {
    for ring in small_rings() {
        let naive = Naive::of(&ring);
        for i in 0..naive.size() {
            let x = ring.element_at(i);
            let coords = naive.decode(i);
            assert_eq!(x.coords(), coords.as_slice(), "decoding in {}", ring.provenance());
            let right = indices(&right_annihilator(&ring, &x).unwrap());
            assert_eq!(right, naive.right_ann(&coords), "r(x) in {}", ring.provenance());
            assert_eq!(
                indices(&right_annihilator_by_kernel(&ring, &x).unwrap()),
                right,
                "kernel r(x) in {}",
                ring.provenance()
            );
            let left = indices(&left_annihilator(&ring, &x).unwrap());
            assert_eq!(left, naive.left_ann(&coords), "l(x) in {}", ring.provenance());
        }
    }
}

#[test]
fn products_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for ring in small_rings() {
        let naive = Naive::of(&ring);
        for _ in 0..50 {
            let x = ring.random_element(&mut rng);
            let y = ring.random_element(&mut rng);
            assert_eq!(ring.mul(&x, &y).unwrap().coords(), naive.mul(x.coords(), y.coords()));
        }
    }
}

#[test]
fn idempotents_match_oracle() {
    for ring in small_rings() {
        let naive = Naive::of(&ring);
        let found: Vec<u64> = enumerate_idempotents(&ring)
            .unwrap()
            .iter()
            .map(|e| ring.index_of(e).unwrap())
            .collect();
        assert_eq!(found, naive.idempotents(), "{}", ring.provenance());
    }
}

#[test]
fn deciders_match_oracle_with_minimal_witness() {
    for ring in small_rings() {
        let naive = Naive::of(&ring);
        let v = is_generalized_right_pp(&ring).unwrap();
        let expected = naive.gen_right_pp_witness();
        assert_eq!(v.holds, expected.is_none(), "gen-right-pp on {}", ring.provenance());
        let got = v.witness.as_ref().map(|w| naive.encode(&w.coords));
        assert_eq!(got, expected, "gen-right-pp witness on {}", ring.provenance());

        let v = is_right_rickart(&ring).unwrap();
        let expected = naive.right_rickart_witness();
        assert_eq!(v.holds, expected.is_none(), "right Rickart on {}", ring.provenance());
        assert_eq!(v.witness.as_ref().map(|w| naive.encode(&w.coords)), expected);
    }
}

#[test]
fn commutativity_matches_oracle() {
    for ring in small_rings() {
        assert_eq!(ring.is_commutative(), Naive::of(&ring).is_commutative(), "{}", ring.provenance());
    }
}

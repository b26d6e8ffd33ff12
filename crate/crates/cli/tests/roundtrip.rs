//! Grammar and document round-trips.

use proptest::prelude::*;
use rickart_cli::spec_doc::{canonical, parse_ring_spec, ring_document, serialize_ring};
use rickart_cli::{parse_construction, parse_element, print, CliError};
use rickart_core::catalog::{CatalogKey, FineKind};
use rickart_core::identity_involution;
use rickart_core::recipe::{GroupRecipe, Recipe};

fn leaf() -> impl Strategy<Value = Recipe> {
    prop_oneof![
        (
            prop::sample::select(vec![FineKind::A, FineKind::B, FineKind::C, FineKind::D, FineKind::Dalt]),
            0u64..100
        )
            .prop_map(|(k, p)| Recipe::Catalog(CatalogKey::Fine(k, p))),
        (0u64..1000).prop_map(|n| Recipe::Catalog(CatalogKey::Z(n))),
        (0u64..1000).prop_map(|n| Recipe::Catalog(CatalogKey::Null(n))),
    ]
}

fn ast() -> impl Strategy<Value = Recipe> {
    leaf().prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), 0usize..10).prop_map(|(r, m)| r.group_ring(GroupRecipe::Cyclic(m))),
            (inner.clone(), 0usize..10).prop_map(|(r, m)| r.extension(GroupRecipe::Cyclic(m))),
            inner.clone().prop_map(Recipe::unitization),
            (inner.clone(), 0usize..10).prop_map(|(r, n)| r.triangular(n)),
            (inner.clone(), 0usize..10).prop_map(|(r, n)| r.const_diag(n)),
            (inner, 0usize..10).prop_map(|(r, n)| r.poly_quot(n)),
        ]
    })
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(r in ast()) {
        prop_assert_eq!(parse_construction(&print(&r)).unwrap(), r);
    }

    #[test]
    fn whitespace_is_insignificant(r in ast()) {
        let spaced = print(&r).replace('(', " ( ").replace(',', " , ").replace(')', " ) ");
        prop_assert_eq!(parse_construction(&spaced).unwrap(), r);
    }

    #[test]
    fn raw_coordinates_round_trip(x in prop::collection::vec(-100i64..100, 4)) {
        let ring = parse_construction("XGR(A(3), C2)").unwrap().evaluate().unwrap();
        let text = format!("[{}]", x.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
        let el = parse_element(&ring, &text).unwrap();
        let expect: Vec<u64> = x.iter().zip(ring.orders()).map(|(&v, &d)| v.rem_euclid(d as i64) as u64).collect();
        prop_assert_eq!(el.coords(), expect.as_slice());
        prop_assert_eq!(parse_element(&ring, &ring.format(&el)).unwrap(), el);
    }
}

const RINGS: &[&str] = &[
    "A(3)",
    "D(5)",
    "Z(4)",
    "Z(1)",
    "N(3)",
    "GR(A(3), C2)",
    "XGR(A(3), C2)",
    "U(B(3))",
    "T(Z(2), 2)",
    "T(Z(4), 3)",
    "CT(GR(A(3), C2), 2)",
    "PQ(Z(4), 2)",
];

#[test]
fn ring_documents_round_trip_bit_exactly() {
    for expr in RINGS {
        let ring = parse_construction(expr).unwrap().evaluate().unwrap();
        let text = serialize_ring(&ring, None);
        let (parsed, inv) = parse_ring_spec(&text).unwrap();
        assert!(inv.is_none());
        assert!(parsed.same_structure(&ring), "{expr}");
        assert_eq!(parsed.labels(), ring.labels());
        assert_eq!(serialize_ring(&parsed, None), text, "{expr}");
        let pretty = serde_json::to_string_pretty(&ring_document(&ring, None)).unwrap();
        assert_eq!(canonical(&pretty).unwrap(), text);
    }
}

#[test]
fn involutions_round_trip() {
    let ring = parse_construction("GR(Z(3), C3)").unwrap().evaluate().unwrap();
    let star = rickart_cli::source::load(Some("GR(Z(3), C3)"), None, Some(rickart_cli::source::InvolutionChoice::Star))
        .unwrap();
    let text = serialize_ring(&star.ring, star.involution.as_ref());
    let (parsed, inv) = parse_ring_spec(&text).unwrap();
    assert!(parsed.same_structure(&ring));
    assert_eq!(inv.unwrap().basis_images(), star.involution.unwrap().basis_images());
    let id = identity_involution(&parsed).unwrap();
    assert_eq!(serialize_ring(&parsed, Some(&id)), serialize_ring(&parsed, Some(&id)));
}

#[test]
fn document_for_a3_matches_catalog() {
    let text = r#"{"schema": "rickart.ring/v1", "orders": [9], "mul": [[[3]]], "labels": ["a"]}"#;
    let (ring, _) = parse_ring_spec(text).unwrap();
    let catalog = parse_construction("A(3)").unwrap().evaluate().unwrap();
    assert!(ring.same_structure(&catalog));
}

#[test]
fn integer_coefficients_need_a_unity() {
    let s = parse_construction("GR(A(3), C2)").unwrap().evaluate().unwrap();
    assert!(matches!(parse_element(&s, "e+g"), Err(CliError::IllegalIntegerCoefficient(_))));
    assert!(matches!(parse_element(&s, "3"), Err(CliError::IllegalIntegerCoefficient(_))));
    assert_eq!(parse_element(&s, "a*e - a*g").unwrap().coords(), &[1, 8]);
    assert_eq!(parse_element(&s, "[0,3]").unwrap().coords(), &[0, 3]);
    let u = parse_construction("XGR(A(3), C2)").unwrap().evaluate().unwrap();
    assert_eq!(parse_element(&u, "e+g").unwrap().coords(), &[1, 1, 0, 0]);
    assert_eq!(parse_element(&u, "2 + 3*a*g").unwrap().coords(), &[2, 0, 0, 3]);
    let c3 = parse_construction("XGR(A(5), C3)").unwrap().evaluate().unwrap();
    assert_eq!(parse_element(&c3, "e+g+g^2").unwrap().coords(), &[1, 1, 1, 0, 0, 0]);
    let t = parse_construction("T(Z(4), 2)").unwrap().evaluate().unwrap();
    assert_eq!(parse_element(&t, "3*1[1,2] - 1[2,2]").unwrap().coords(), &[0, 3, 3]);
}

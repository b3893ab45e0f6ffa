use std::ffi::{CStr, CString};
use std::ptr;

use dichoose_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(dichoose_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn dichromatic_number_of_the_directed_five_cycle() {
    let src = CString::new("digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(dichoose_digraph_parse(src.as_ptr(), &mut d), DichooseStatus::Ok);
        assert_eq!(dichoose_digraph_arc_count(d), 5);
        let mut value = 0usize;
        let mut colours = [0u32; 5];
        let status = dichoose_dichromatic_number(d, ptr::null(), &mut value, colours.as_mut_ptr(), colours.len());
        assert_eq!(status, DichooseStatus::Ok);
        assert_eq!(value, 2);
        assert!(colours.iter().all(|&c| c == 1 || c == 2));
        let mut short = [0u32; 2];
        let status = dichoose_dichromatic_number(d, ptr::null(), &mut value, short.as_mut_ptr(), short.len());
        assert_eq!(status, DichooseStatus::BufferTooSmall);
        dichoose_digraph_free(d);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let bad = CString::new("graph 2\n0 2\n").unwrap();
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(dichoose_graph_parse(bad.as_ptr(), &mut g), DichooseStatus::Parse);
        assert!(last_error().contains("line 2"), "{}", last_error());
        assert!(g.is_null());

        assert_eq!(dichoose_graph_new(3, &mut g), DichooseStatus::Ok);
        assert_eq!(last_error(), "");
        assert_eq!(dichoose_graph_add_edge(g, 0, 7), DichooseStatus::InvalidGraph);
        assert_eq!(dichoose_graph_add_edge(ptr::null_mut(), 0, 1), DichooseStatus::NullPointer);
        dichoose_graph_free(g);

        let mut caps = ptr::null_mut();
        let spec = CString::new("nonsense=1").unwrap();
        assert_eq!(dichoose_caps_new(spec.as_ptr(), &mut caps), DichooseStatus::InvalidArgument);
        let spec = CString::new("orientation_edges=2,acyclic_dp_vertices=2").unwrap();
        assert_eq!(dichoose_caps_new(spec.as_ptr(), &mut caps), DichooseStatus::Ok);
        let c5 = CString::new("graph 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
        assert_eq!(dichoose_graph_parse(c5.as_ptr(), &mut g), DichooseStatus::Ok);
        let mut p = 0.0;
        assert_eq!(dichoose_acyclic_probability(g, caps, &mut p), DichooseStatus::CapExceeded);
        assert_eq!(dichoose_acyclic_probability(g, ptr::null(), &mut p), DichooseStatus::Ok);
        assert_eq!(p, 30.0 / 32.0);
        dichoose_caps_free(caps);
        dichoose_graph_free(g);
    }
}

#[test]
fn certificate_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(dichoose_complete_bipartite(2, 2, &mut g), DichooseStatus::Ok);
        let mut value = 0;
        let mut cert = ptr::null_mut();
        assert_eq!(dichoose_graph_dichoosability(g, ptr::null(), &mut value, &mut cert), DichooseStatus::Ok);
        assert_eq!(value, 2);
        assert!(!cert.is_null());
        let mut valid = false;
        assert_eq!(dichoose_verify_certificate(cert, ptr::null(), &mut valid), DichooseStatus::Ok);
        assert!(valid);

        let tampered = CStr::from_ptr(cert).to_str().unwrap().replace("0: 1\n", "0: 2\n");
        let tampered = CString::new(tampered).unwrap();
        assert_eq!(dichoose_verify_certificate(tampered.as_ptr(), ptr::null(), &mut valid), DichooseStatus::Ok);
        assert!(!valid);
        assert!(!last_error().is_empty());
        dichoose_string_free(cert);
        dichoose_graph_free(g);
    }
}

#[test]
fn constructions_and_lists() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(dichoose_tournament(2, &mut t), DichooseStatus::Ok);
        assert_eq!(dichoose_digraph_vertex_count(t), 12);
        assert_eq!(dichoose_digraph_arc_count(t), 66);
        let mut acyclic = true;
        assert_eq!(dichoose_digraph_is_acyclic(t, &mut acyclic), DichooseStatus::Ok);
        assert!(!acyclic);
        let mut text = ptr::null_mut();
        assert_eq!(dichoose_digraph_to_text(t, &mut text), DichooseStatus::Ok);
        assert!(CStr::from_ptr(text).to_str().unwrap().starts_with("digraph 12\n"));
        dichoose_string_free(text);
        dichoose_digraph_free(t);

        let c3 = CString::new("digraph 3\n0 1\n1 2\n2 0\n").unwrap();
        let mut d = ptr::null_mut();
        assert_eq!(dichoose_digraph_parse(c3.as_ptr(), &mut d), DichooseStatus::Ok);
        for (src, expect) in [("0: 1\n1: 1\n2: 1\n", false), ("0: 1\n1: 1\n2: 2\n", true)] {
            let src = CString::new(src).unwrap();
            let mut lists = ptr::null_mut();
            assert_eq!(dichoose_lists_parse(src.as_ptr(), &mut lists), DichooseStatus::Ok);
            let mut found = !expect;
            let mut colours = [0u32; 3];
            let status = dichoose_l_dicolouring(d, lists, ptr::null(), &mut found, colours.as_mut_ptr(), 3);
            assert_eq!(status, DichooseStatus::Ok);
            assert_eq!(found, expect);
            dichoose_lists_free(lists);
        }
        let mut value = 0;
        assert_eq!(dichoose_dichoosability(d, ptr::null(), &mut value), DichooseStatus::Ok);
        assert_eq!(value, 2);
        dichoose_digraph_free(d);
    }
}

#[test]
fn seeded_monte_carlo_is_reproducible() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(dichoose_complete_bipartite(2, 2, &mut g), DichooseStatus::Ok);
        let (mut a, mut b, mut se) = (0.0, 0.0, 0.0);
        assert_eq!(dichoose_mc_acyclic_probability(g, 10_000, 3, &mut a, &mut se), DichooseStatus::Ok);
        assert_eq!(dichoose_mc_acyclic_probability(g, 10_000, 3, &mut b, ptr::null_mut()), DichooseStatus::Ok);
        assert_eq!(a, b);
        assert!((a - 0.875).abs() < 4.0 * se);
        assert_eq!(dichoose_mc_acyclic_probability(g, 0, 3, &mut a, ptr::null_mut()), DichooseStatus::InvalidArgument);
        let mut o = ptr::null_mut();
        assert_eq!(dichoose_random_orientation(g, 1, &mut o), DichooseStatus::Ok);
        assert_eq!(dichoose_digraph_arc_count(o), 4);
        dichoose_digraph_free(o);
        dichoose_graph_free(g);
        let (mut first, mut second) = (false, true);
        assert_eq!(dichoose_binomial_inequalities(1, &mut first, &mut second), DichooseStatus::Ok);
        assert!(first && !second);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(dichoose_version()) }.to_str().unwrap();
    assert_eq!(v, concat!("dichoose ", env!("CARGO_PKG_VERSION")));
}

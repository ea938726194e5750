use std::ffi::{c_char, CStr, CString};
use std::ptr;

use eds_unicyclic_ffi::*;

fn family(spec: &str) -> *mut EdsGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { eds_graph_from_family(spec.as_ptr(), &mut g) }, EdsStatus::Ok);
    assert!(!g.is_null());
    g
}

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { eds_string_free(s) };
    out
}

fn last_error() -> String {
    let p = eds_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn scalar_invariants_of_a_named_graph() {
    let g = family("U(6,3)");
    let (mut order, mut m, mut girth, mut delta) = (0usize, 0usize, 0usize, 0usize);
    let (mut eds, mut w, mut dd) = (0u64, 0u64, 0u64);
    unsafe {
        assert_eq!(eds_graph_order(g, &mut order), EdsStatus::Ok);
        assert_eq!(eds_graph_eds(g, &mut eds), EdsStatus::Ok);
        assert_eq!(eds_graph_wiener(g, &mut w), EdsStatus::Ok);
        assert_eq!(eds_graph_degree_distance(g, &mut dd), EdsStatus::Ok);
        assert_eq!(eds_graph_matching_number(g, &mut m), EdsStatus::Ok);
        assert_eq!(eds_graph_girth(g, &mut girth), EdsStatus::Ok);
        assert_eq!(eds_graph_max_degree(g, &mut delta), EdsStatus::Ok);
        eds_graph_free(g);
    }
    assert_eq!((order, eds, w, dd, m, girth, delta), (6, 148, 27, 98, 3, 3, 4));
}

#[test]
fn edges_and_graph6_round_trip() {
    let edges: [u32; 10] = [0, 1, 1, 2, 2, 3, 3, 4, 4, 0];
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { eds_graph_from_edges(5, edges.as_ptr(), 5, &mut g) },
        EdsStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { eds_graph_to_graph6(g, &mut s) }, EdsStatus::Ok);
    let text = take_string(s);
    assert_eq!(unsafe { eds_graph_canonical_code(g, &mut s) }, EdsStatus::Ok);
    assert_eq!(take_string(s), "5:(),(),(),(),()");

    let c = CString::new(text).unwrap();
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { eds_graph_from_graph6(c.as_ptr(), &mut h) }, EdsStatus::Ok);
    let mut eds = 0u64;
    assert_eq!(unsafe { eds_graph_eds(h, &mut eds) }, EdsStatus::Ok);
    assert_eq!(eds, 60);
    unsafe {
        eds_graph_free(g);
        eds_graph_free(h);
    }
}

#[test]
fn eccentricity_buffer_protocol() {
    let g = family("C(4)");
    let mut written = 0usize;
    let mut small = [0u64; 2];
    let st = unsafe { eds_graph_eccentricities(g, small.as_mut_ptr(), small.len(), &mut written) };
    assert_eq!(st, EdsStatus::BufferTooSmall);
    assert_eq!(written, 4);
    let mut buf = vec![0u64; written];
    let st = unsafe { eds_graph_eccentricities(g, buf.as_mut_ptr(), buf.len(), &mut written) };
    assert_eq!(st, EdsStatus::Ok);
    assert_eq!(buf, vec![2, 2, 2, 2]);
    unsafe { eds_graph_free(g) };
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut g = ptr::null_mut();
    let loops: [u32; 2] = [1, 1];
    assert_eq!(
        unsafe { eds_graph_from_edges(3, loops.as_ptr(), 1, &mut g) },
        EdsStatus::InvalidGraph
    );
    assert!(last_error().contains("self-loop") || !last_error().is_empty());

    let bad = CString::new("Q(3)").unwrap();
    assert_eq!(unsafe { eds_graph_from_family(bad.as_ptr(), &mut g) }, EdsStatus::Parse);
    assert!(g.is_null());

    let mut out = 0u64;
    assert_eq!(unsafe { eds_graph_eds(ptr::null(), &mut out) }, EdsStatus::NullPointer);

    let path: [u32; 4] = [0, 1, 1, 2];
    assert_eq!(
        unsafe { eds_graph_from_edges(3, path.as_ptr(), 2, &mut g) },
        EdsStatus::Ok
    );
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { eds_graph_canonical_code(g, &mut s) }, EdsStatus::NotUnicyclic);
    assert!(s.is_null());
    unsafe { eds_graph_free(g) };

    let disconnected: [u32; 2] = [0, 1];
    assert_eq!(
        unsafe { eds_graph_from_edges(3, disconnected.as_ptr(), 1, &mut g) },
        EdsStatus::Ok
    );
    assert_eq!(unsafe { eds_graph_eds(g, &mut out) }, EdsStatus::InvalidGraph);
    unsafe { eds_graph_free(g) };
}

#[test]
fn formula_evaluation() {
    let (mut num, mut den) = (0i64, 0i64);
    let name = CString::new("G1").unwrap();
    let p = [6i64];
    assert_eq!(
        unsafe { eds_formula_eval(name.as_ptr(), p.as_ptr(), 1, &mut num, &mut den) },
        EdsStatus::Ok
    );
    assert_eq!((num, den), (1053, 1));

    let name = CString::new("EQ22_ODD").unwrap();
    let p = [7i64, 5];
    assert_eq!(
        unsafe { eds_formula_eval(name.as_ptr(), p.as_ptr(), 2, &mut num, &mut den) },
        EdsStatus::Ok
    );
    assert_eq!((num, den), (913, 4));

    let unknown = CString::new("NOPE").unwrap();
    let st = unsafe { eds_formula_eval(unknown.as_ptr(), p.as_ptr(), 2, &mut num, &mut den) };
    assert_eq!(st, EdsStatus::InvalidArgument);
    let name = CString::new("G1").unwrap();
    let st = unsafe { eds_formula_eval(name.as_ptr(), p.as_ptr(), 2, &mut num, &mut den) };
    assert_eq!(st, EdsStatus::InvalidArgument);
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/eds_unicyclic.h");
    for name in [
        "eds_graph_from_edges",
        "eds_graph_from_family",
        "eds_graph_from_graph6",
        "eds_graph_free",
        "eds_graph_order",
        "eds_graph_size",
        "eds_graph_eds",
        "eds_graph_wiener",
        "eds_graph_degree_distance",
        "eds_graph_matching_number",
        "eds_graph_girth",
        "eds_graph_max_degree",
        "eds_graph_eccentricities",
        "eds_graph_canonical_code",
        "eds_graph_to_graph6",
        "eds_string_free",
        "eds_formula_eval",
        "eds_last_error_message",
        "eds_version",
    ] {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    assert!(header.contains("typedef struct EdsGraph EdsGraph;"));
    assert!(header.contains("EDS_STATUS_BUFFER_TOO_SMALL = 7"));
    let v = unsafe { CStr::from_ptr(eds_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

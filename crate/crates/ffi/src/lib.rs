//! C ABI over the `eds-unicyclic` library.
//!
//! Graphs are opaque `EdsGraph` handles created by one of the
//! `eds_graph_from_*` constructors and released with `eds_graph_free`.
//! Every fallible call returns an `EdsStatus`; on failure a description is
//! available from `eds_last_error_message` on the same thread. Strings
//! returned through out-parameters are owned by the caller and must be
//! released with `eds_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eds_unicyclic::enumeration::unicyclic_canonical_code;
use eds_unicyclic::families::parse_family_spec;
use eds_unicyclic::formulas::{eval, FormulaId};
use eds_unicyclic::graph::{self, DistanceMatrix, Graph, GraphError};
use eds_unicyclic::matching::{matching_number, MatchingError};
use eds_unicyclic::{graph6, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidGraph = 3,
    Parse = 4,
    NotUnicyclic = 5,
    TooLarge = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque graph handle.
pub struct EdsGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn fail(status: EdsStatus, msg: impl Into<String>) -> EdsStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> EdsStatus {
    match e {
        Error::Graph(GraphError::Parse { .. }) | Error::Family(_) => EdsStatus::Parse,
        Error::Graph(_) => EdsStatus::InvalidGraph,
        Error::Matching(MatchingError::TooLarge { .. }) => EdsStatus::TooLarge,
        Error::Matching(_) | Error::Enumeration(_) => EdsStatus::NotUnicyclic,
        Error::Formula(_) | Error::Audit(_) => EdsStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), EdsStatus>) -> EdsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EdsStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EdsStatus::Internal, "internal panic"),
    }
}

fn lift<T, E: Into<Error>>(r: Result<T, E>) -> Result<T, EdsStatus> {
    r.map_err(|e| {
        let e = e.into();
        fail(status_of(&e), e.to_string())
    })
}

unsafe fn graph_ref<'a>(g: *const EdsGraph) -> Result<&'a Graph, EdsStatus> {
    match g.as_ref() {
        Some(g) => Ok(&g.inner),
        None => Err(fail(EdsStatus::NullPointer, "null graph handle")),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, EdsStatus> {
    if s.is_null() {
        return Err(fail(EdsStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(EdsStatus::InvalidArgument, "string is not valid UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), EdsStatus> {
    if out.is_null() {
        return Err(fail(EdsStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_graph(g: Graph, out: *mut *mut EdsGraph) -> Result<(), EdsStatus> {
    write_out(out, Box::into_raw(Box::new(EdsGraph { inner: g })))
}

unsafe fn emit_string(s: String, out: *mut *mut c_char) -> Result<(), EdsStatus> {
    let c = CString::new(s).map_err(|_| fail(EdsStatus::Internal, "interior NUL"))?;
    write_out(out, c.into_raw())
}

/// Builds a graph from `edge_count` vertex pairs stored flat in `edges`
/// (`edges[2i]`, `edges[2i + 1]`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_from_edges(
    order: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut EdsGraph,
) -> EdsStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(EdsStatus::NullPointer, "null edge array"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = lift(Graph::new(order, &pairs))?;
        emit_graph(g, out)
    })
}

/// Builds a graph from a family expression such as `U(10,5)`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_from_family(spec: *const c_char, out: *mut *mut EdsGraph) -> EdsStatus {
    guard(|| {
        let text = c_str(spec)?;
        let spec = lift(parse_family_spec(text))?;
        let g = lift(spec.build())?;
        emit_graph(g, out)
    })
}

/// Decodes one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_from_graph6(text: *const c_char, out: *mut *mut EdsGraph) -> EdsStatus {
    guard(|| {
        let g = lift(graph6::decode(c_str(text)?.trim()))?;
        emit_graph(g, out)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from an `eds_graph_from_*` call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_free(g: *mut EdsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn scalar<T>(g: *const EdsGraph, out: *mut T, f: impl FnOnce(&Graph) -> Result<T, EdsStatus>) -> EdsStatus {
    guard(|| {
        let value = f(graph_ref(g)?)?;
        write_out(out, value)
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_order(g: *const EdsGraph, out: *mut usize) -> EdsStatus {
    scalar(g, out, |g| Ok(g.order()))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_size(g: *const EdsGraph, out: *mut usize) -> EdsStatus {
    scalar(g, out, |g| Ok(g.size()))
}

/// Eccentric distance sum.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_eds(g: *const EdsGraph, out: *mut u64) -> EdsStatus {
    scalar(g, out, |g| lift(graph::eds(g)))
}

/// Wiener index.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_wiener(g: *const EdsGraph, out: *mut u64) -> EdsStatus {
    scalar(g, out, |g| lift(graph::wiener(g)))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_degree_distance(g: *const EdsGraph, out: *mut u64) -> EdsStatus {
    scalar(g, out, |g| lift(graph::degree_distance(g)))
}

/// Fails with `TooLarge` for graphs that are neither forests nor
/// unicyclic and have more than 16 vertices.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_matching_number(g: *const EdsGraph, out: *mut usize) -> EdsStatus {
    scalar(g, out, |g| lift(matching_number(g)))
}

/// 0 for forests.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_girth(g: *const EdsGraph, out: *mut usize) -> EdsStatus {
    scalar(g, out, |g| Ok(graph::girth(g)))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_max_degree(g: *const EdsGraph, out: *mut usize) -> EdsStatus {
    scalar(g, out, |g| Ok(g.max_degree()))
}

/// Copies the eccentricities into `buf`. `written` always receives the
/// order; when `len` is smaller, nothing is copied and `BufferTooSmall` is
/// returned.
///
/// # Safety
/// `g` must be a live handle, `buf` writable for `len` values and `written`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_eccentricities(
    g: *const EdsGraph,
    buf: *mut u64,
    len: usize,
    written: *mut usize,
) -> EdsStatus {
    guard(|| {
        let g = graph_ref(g)?;
        write_out(written, g.order())?;
        if len < g.order() {
            return Err(fail(EdsStatus::BufferTooSmall, format!("need {} slots", g.order())));
        }
        if buf.is_null() {
            return Err(fail(EdsStatus::NullPointer, "null buffer"));
        }
        let ecc = lift(DistanceMatrix::new(g))?.eccentricities();
        ptr::copy_nonoverlapping(ecc.as_ptr(), buf, ecc.len());
        Ok(())
    })
}

/// Canonical isomorphism code of a unicyclic graph, e.g. `3:(()()),(),()`.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_canonical_code(g: *const EdsGraph, out: *mut *mut c_char) -> EdsStatus {
    guard(|| {
        let code = lift(unicyclic_canonical_code(graph_ref(g)?))?;
        emit_string(code.to_string(), out)
    })
}

/// graph6 encoding.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eds_graph_to_graph6(g: *const EdsGraph, out: *mut *mut c_char) -> EdsStatus {
    guard(|| emit_string(graph6::encode(graph_ref(g)?), out))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn eds_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates a named closed form (`"G1"`, `"EQ21_EVEN"`, ...) exactly. The
/// value is `numerator / denominator` in lowest terms with a positive
/// denominator.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` readable for `count`
/// values, and both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn eds_formula_eval(
    name: *const c_char,
    params: *const i64,
    count: usize,
    numerator: *mut i64,
    denominator: *mut i64,
) -> EdsStatus {
    guard(|| {
        let name = c_str(name)?;
        let id = FormulaId::ALL
            .iter()
            .copied()
            .find(|id| id.to_string() == name)
            .ok_or_else(|| fail(EdsStatus::InvalidArgument, format!("unknown formula {name:?}")))?;
        let args: &[i64] = if count == 0 {
            &[]
        } else if params.is_null() {
            return Err(fail(EdsStatus::NullPointer, "null parameter array"));
        } else {
            std::slice::from_raw_parts(params, count)
        };
        let value = lift(eval(id, args))?.value;
        write_out(numerator, *value.numer())?;
        write_out(denominator, *value.denom())
    })
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn eds_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn eds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_mapping() {
        let e: Error = GraphError::SelfLoop(1).into();
        assert_eq!(status_of(&e), EdsStatus::InvalidGraph);
        let e: Error = MatchingError::NotUnicyclic.into();
        assert_eq!(status_of(&e), EdsStatus::NotUnicyclic);
    }

    #[test]
    fn panics_become_internal() {
        assert_eq!(guard(|| panic!("boom")), EdsStatus::Internal);
    }
}

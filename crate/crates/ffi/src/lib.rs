//! C ABI over `dichoose`.
//!
//! Every function returns a [`DichooseStatus`]; on anything but
//! `DICHOOSE_STATUS_OK` the message is available from
//! [`dichoose_last_error`] on the same thread. Objects are opaque handles
//! created by `*_new`/`*_parse`/constructor functions and released with the
//! matching `*_free`. Strings returned through `char **` out-parameters are
//! owned by the caller and released with [`dichoose_string_free`].
//!
//! A null `caps` argument means the default search caps.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dichoose::caps::Caps;
use dichoose::certificate::{verify_certificate, LowerBoundCertificate};
use dichoose::error::Error;
use dichoose::graph::{Digraph, Graph};
use dichoose::lists::ListAssignment;
use dichoose::{constructions, dicolour, format, listcolour, orientation, probability};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DichooseStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Parse = 4,
    /// A search would exceed its cap; raise it through a caps handle.
    CapExceeded = 5,
    Precondition = 6,
    ExtractionFailed = 7,
    /// Out-of-range vertex, loop, duplicate edge or arc, or a digon where an
    /// orientation is required.
    InvalidGraph = 8,
    /// An output buffer is shorter than the vertex count.
    BufferTooSmall = 9,
    /// A Rust panic was caught at the boundary. This is a bug.
    Panic = 10,
}

/// An undirected simple graph.
pub struct DichooseGraph(Graph);

/// A digraph; digons are allowed.
pub struct DichooseDigraph(Digraph);

/// Search caps.
pub struct DichooseCaps(Caps);

/// A list assignment: one set of positive colours per vertex.
pub struct DichooseLists(ListAssignment);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(DichooseStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::VertexOutOfRange { .. } | Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::DuplicateArc(..) | Error::Digon(..) => {
                DichooseStatus::InvalidGraph
            }
            Error::CapExceeded { .. } => DichooseStatus::CapExceeded,
            Error::Parse { .. } => DichooseStatus::Parse,
            Error::Precondition(_) => DichooseStatus::Precondition,
            Error::ExtractionFailed(_) => DichooseStatus::ExtractionFailed,
            _ => DichooseStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail<T>(status: DichooseStatus, msg: &str) -> Result<T, Failure> {
    Err(Failure(status, msg.to_string()))
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DichooseStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            DichooseStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            DichooseStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().map_or_else(|| fail(DichooseStatus::NullPointer, "null handle"), Ok)
}

unsafe fn get_mut<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().map_or_else(|| fail(DichooseStatus::NullPointer, "null pointer"), Ok)
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return fail(DichooseStatus::NullPointer, "null string");
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(DichooseStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn caps_or_default(caps: *const DichooseCaps) -> Caps {
    caps.as_ref().map_or_else(Caps::default, |c| c.0.clone())
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    *get_mut(out)? = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).or_else(|_| fail(DichooseStatus::InvalidArgument, "string contains NUL"))?;
    *get_mut(out)? = c.into_raw();
    Ok(())
}

/// Copies `colours` into `buf` when `buf` is non-null.
unsafe fn put_colours(colours: &[u32], buf: *mut u32, len: usize) -> Result<(), Failure> {
    if buf.is_null() {
        return Ok(());
    }
    if len < colours.len() {
        return fail(DichooseStatus::BufferTooSmall, &format!("buffer holds {len} colours, {} needed", colours.len()));
    }
    ptr::copy_nonoverlapping(colours.as_ptr(), buf, colours.len());
    Ok(())
}

/// `"dichoose <version>"`, statically allocated.
#[no_mangle]
pub extern "C" fn dichoose_version() -> *const c_char {
    concat!("dichoose ", env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn dichoose_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dichoose_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Caps from `key=value,...` overrides on top of the defaults; `spec` may be null.
///
/// # Safety
/// `spec` is null or a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_caps_new(spec: *const c_char, out: *mut *mut DichooseCaps) -> DichooseStatus {
    guard(|| {
        let caps = if spec.is_null() { Caps::default() } else { Caps::default().with_overrides(text(spec)?)? };
        put(out, DichooseCaps(caps))
    })
}

/// # Safety
/// `caps` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_caps_free(caps: *mut DichooseCaps) {
    if !caps.is_null() {
        drop(Box::from_raw(caps));
    }
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_new(n: usize, out: *mut *mut DichooseGraph) -> DichooseStatus {
    guard(|| put(out, DichooseGraph(Graph::new(n))))
}

/// Parses the `graph <n>` text format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_parse(src: *const c_char, out: *mut *mut DichooseGraph) -> DichooseStatus {
    guard(|| put(out, DichooseGraph(format::parse_graph_text(text(src)?)?.into_graph()?)))
}

/// # Safety
/// `g` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_add_edge(g: *mut DichooseGraph, u: usize, v: usize) -> DichooseStatus {
    guard(|| Ok(get_mut(g)?.0.add_edge(u, v)?))
}

/// # Safety
/// `g` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_vertex_count(g: *const DichooseGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_edge_count(g: *const DichooseGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_to_text(g: *const DichooseGraph, out: *mut *mut c_char) -> DichooseStatus {
    guard(|| put_string(out, format::write_graph(&get(g)?.0)))
}

/// # Safety
/// `g` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_free(g: *mut DichooseGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_new(n: usize, out: *mut *mut DichooseDigraph) -> DichooseStatus {
    guard(|| put(out, DichooseDigraph(Digraph::new(n))))
}

/// Parses the `digraph <n>` text format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_parse(src: *const c_char, out: *mut *mut DichooseDigraph) -> DichooseStatus {
    guard(|| put(out, DichooseDigraph(format::parse_graph_text(text(src)?)?.into_digraph()?)))
}

/// # Safety
/// `d` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_add_arc(d: *mut DichooseDigraph, u: usize, v: usize) -> DichooseStatus {
    guard(|| Ok(get_mut(d)?.0.add_arc(u, v)?))
}

/// # Safety
/// `d` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_vertex_count(d: *const DichooseDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.0.n())
}

/// # Safety
/// `d` is a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_arc_count(d: *const DichooseDigraph) -> usize {
    d.as_ref().map_or(0, |d| d.0.arc_count())
}

/// # Safety
/// `d` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_is_acyclic(d: *const DichooseDigraph, out: *mut bool) -> DichooseStatus {
    guard(|| {
        *get_mut(out)? = get(d)?.0.is_acyclic();
        Ok(())
    })
}

/// # Safety
/// `d` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_to_text(d: *const DichooseDigraph, out: *mut *mut c_char) -> DichooseStatus {
    guard(|| put_string(out, format::write_digraph(&get(d)?.0)))
}

/// # Safety
/// `d` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_digraph_free(d: *mut DichooseDigraph) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// The tournament on `2d(d+1)` vertices with both semidegrees at least `d`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_tournament(d: usize, out: *mut *mut DichooseDigraph) -> DichooseStatus {
    guard(|| put(out, DichooseDigraph(constructions::rambaud_tournament(d)?)))
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_complete_bipartite(a: usize, b: usize, out: *mut *mut DichooseGraph) -> DichooseStatus {
    guard(|| put(out, DichooseGraph(constructions::complete_bipartite(a, b))))
}

/// Every edge of `g` replaced by a digon.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_bidirected(g: *const DichooseGraph, out: *mut *mut DichooseDigraph) -> DichooseStatus {
    guard(|| put(out, DichooseDigraph(constructions::bidirected(&get(g)?.0))))
}

/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_random_orientation(g: *const DichooseGraph, seed: u64, out: *mut *mut DichooseDigraph) -> DichooseStatus {
    guard(|| put(out, DichooseDigraph(orientation::random_orientation(&get(g)?.0, seed))))
}

/// Exact dichromatic number. When `colours` is non-null it receives an
/// optimal dicolouring and must hold at least `n` entries.
///
/// # Safety
/// Handles are live; `value` is writable; `colours` is null or holds `colours_len` entries.
#[no_mangle]
pub unsafe extern "C" fn dichoose_dichromatic_number(
    d: *const DichooseDigraph,
    caps: *const DichooseCaps,
    value: *mut usize,
    colours: *mut u32,
    colours_len: usize,
) -> DichooseStatus {
    guard(|| {
        let s = dicolour::dichromatic_number(&get(d)?.0, &caps_or_default(caps))?;
        put_colours(s.witness.colours(), colours, colours_len)?;
        *get_mut(value)? = s.value;
        Ok(())
    })
}

/// Exact chromatic number, with an optimal colouring as in
/// [`dichoose_dichromatic_number`].
///
/// # Safety
/// As for [`dichoose_dichromatic_number`].
#[no_mangle]
pub unsafe extern "C" fn dichoose_chromatic_number(
    g: *const DichooseGraph,
    caps: *const DichooseCaps,
    value: *mut usize,
    colours: *mut u32,
    colours_len: usize,
) -> DichooseStatus {
    guard(|| {
        let s = dicolour::chromatic_number(&get(g)?.0, &caps_or_default(caps))?;
        put_colours(s.witness.colours(), colours, colours_len)?;
        *get_mut(value)? = s.value;
        Ok(())
    })
}

/// Parses `<v>: <colour> ...` lines, one per vertex.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_lists_parse(src: *const c_char, out: *mut *mut DichooseLists) -> DichooseStatus {
    guard(|| put(out, DichooseLists(format::parse_lists_text(text(src)?)?)))
}

/// # Safety
/// `lists` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dichoose_lists_free(lists: *mut DichooseLists) {
    if !lists.is_null() {
        drop(Box::from_raw(lists));
    }
}

/// Searches for an L-dicolouring; `found` is false when none exists. On
/// success the colouring is copied to `colours` if non-null.
///
/// # Safety
/// Handles are live; `found` is writable; `colours` is null or holds `colours_len` entries.
#[no_mangle]
pub unsafe extern "C" fn dichoose_l_dicolouring(
    d: *const DichooseDigraph,
    lists: *const DichooseLists,
    caps: *const DichooseCaps,
    found: *mut bool,
    colours: *mut u32,
    colours_len: usize,
) -> DichooseStatus {
    guard(|| {
        let result = listcolour::exists_l_dicolouring(&get(d)?.0, &get(lists)?.0, &caps_or_default(caps))?;
        if let Some(c) = &result {
            put_colours(c.colours(), colours, colours_len)?;
        }
        *get_mut(found)? = result.is_some();
        Ok(())
    })
}

/// Dichoosability of a digraph.
///
/// # Safety
/// Handles are live; `value` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_dichoosability(d: *const DichooseDigraph, caps: *const DichooseCaps, value: *mut usize) -> DichooseStatus {
    guard(|| {
        *get_mut(value)? = listcolour::dichoosability(&get(d)?.0, &caps_or_default(caps))?.value;
        Ok(())
    })
}

/// Maximum dichoosability over the orientations of `g`. When `certificate`
/// is non-null it receives the lower-bound certificate text, or null when
/// the value is below 2.
///
/// # Safety
/// Handles are live; `value` is writable; `certificate` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_graph_dichoosability(
    g: *const DichooseGraph,
    caps: *const DichooseCaps,
    value: *mut usize,
    certificate: *mut *mut c_char,
) -> DichooseStatus {
    guard(|| {
        let answer = listcolour::dichoosability_of_graph(&get(g)?.0, &caps_or_default(caps))?;
        if !certificate.is_null() {
            match &answer.certificate {
                Some(c) => put_string(certificate, c.to_text())?,
                None => *certificate = ptr::null_mut(),
            }
        }
        *get_mut(value)? = answer.value;
        Ok(())
    })
}

/// Replays a certificate. `valid` is false when any check fails; the reason
/// is then available from [`dichoose_last_error`].
///
/// # Safety
/// `src` is a NUL-terminated string; `caps` is null or live; `valid` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_verify_certificate(src: *const c_char, caps: *const DichooseCaps, valid: *mut bool) -> DichooseStatus {
    let mut reason = None;
    let status = guard(|| {
        let cert = LowerBoundCertificate::parse(text(src)?)?;
        let verdict = verify_certificate(&cert, &caps_or_default(caps))?;
        reason = verdict.failed.map(|f| f.to_string());
        *get_mut(valid)? = reason.is_none();
        Ok(())
    });
    if let Some(r) = reason {
        set_last_error(&r);
    }
    status
}

/// Exact probability that a uniformly random orientation of `g` is acyclic,
/// as a double.
///
/// # Safety
/// Handles are live; `probability` is writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_acyclic_probability(g: *const DichooseGraph, caps: *const DichooseCaps, probability: *mut f64) -> DichooseStatus {
    guard(|| {
        let p = probability::exact_acyclic_probability(&get(g)?.0, &caps_or_default(caps))?;
        *get_mut(probability)? = probability::approx(&p.probability);
        Ok(())
    })
}

/// Monte Carlo estimate of the same probability. Seeded; the result does
/// not depend on the thread count.
///
/// # Safety
/// `g` is live; `estimate` is writable; `std_error` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_mc_acyclic_probability(
    g: *const DichooseGraph,
    trials: usize,
    seed: u64,
    estimate: *mut f64,
    std_error: *mut f64,
) -> DichooseStatus {
    guard(|| {
        let e = probability::mc_acyclic_probability(&get(g)?.0, trials, seed)?;
        *get_mut(estimate)? = e.estimate;
        if let Some(se) = std_error.as_mut() {
            *se = e.std_error;
        }
        Ok(())
    })
}

/// Whether both binomial inequalities hold at `r`.
///
/// # Safety
/// `first` and `second` are writable.
#[no_mangle]
pub unsafe extern "C" fn dichoose_binomial_inequalities(r: u64, first: *mut bool, second: *mut bool) -> DichooseStatus {
    guard(|| {
        let p = probability::verify_prop_2_4(r)?;
        *get_mut(first)? = p.first_holds;
        *get_mut(second)? = p.second_holds;
        Ok(())
    })
}

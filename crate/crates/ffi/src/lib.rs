//! C ABI over `gbx-core`.
//!
//! Every fallible function returns a [`GbxStatus`] and writes results through
//! out-pointers, which are left untouched on failure. The message for the
//! most recent failure on the calling thread is available from
//! [`gbx_last_error`]. Algebras and surfaces are opaque heap handles released
//! with their `_free` function.
//!
//! Kinds, rules, curves and mesh formats are passed as `uint32_t` codes (the
//! `GBX_*` constants) so that out-of-range values from C are reported rather
//! than undefined.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use gbx_core::hyperquadric::DEFAULT_MEMBERSHIP_TOL;
use gbx_core::lie::basis_field;
use gbx_core::mesh::{export_mesh, MeshFormat, MeshGrid};
use gbx_core::{
    AlgebraParams, ConjugationKind, CurveKind, Error, GbcNumber, Hyperquadric, HyperquadricKind, PlanarCurve,
    TensorRule, TensorSurface,
};

pub const GBX_KIND_TI: u32 = 0;
pub const GBX_KIND_TJ: u32 = 1;
pub const GBX_KIND_TIJ: u32 = 2;

pub const GBX_CURVE_CIRCLE: u32 = 0;
pub const GBX_CURVE_LORENTZIAN_CIRCLE: u32 = 1;
pub const GBX_CURVE_SPIRAL: u32 = 2;
pub const GBX_CURVE_HYPERBOLIC_SPIRAL: u32 = 3;

pub const GBX_FORMAT_CSV: u32 = 0;
pub const GBX_FORMAT_OBJ: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GbxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    NonFinite = 3,
    NotInvertible = 4,
    NotOnHyperquadric = 5,
    IndexNotInBasis = 6,
    CaseMismatch = 7,
    UnsupportedParams = 8,
    Degenerate = 9,
    InvalidArgument = 10,
    Io = 11,
    Internal = 12,
}

/// Coefficients on the basis `1, i, j, ij`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GbxNumber {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GbxFundamentalForm {
    pub g11: f64,
    pub g12: f64,
    pub g22: f64,
}

/// Opaque algebra parameters `(α, β)`.
pub struct GbxAlgebra(AlgebraParams);

/// Opaque tensor product surface.
pub struct GbxSurface(TensorSurface);

impl From<GbcNumber> for GbxNumber {
    fn from(x: GbcNumber) -> Self {
        let [c1, c2, c3, c4] = x.to_array();
        Self { c1, c2, c3, c4 }
    }
}

impl From<[f64; 4]> for GbxNumber {
    fn from([c1, c2, c3, c4]: [f64; 4]) -> Self {
        Self { c1, c2, c3, c4 }
    }
}

impl GbxNumber {
    fn to_core(self) -> Result<GbcNumber, Failure> {
        Ok(GbcNumber::new(self.c1, self.c2, self.c3, self.c4)?)
    }
}

struct Failure {
    status: GbxStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::InvalidParams { .. } => GbxStatus::InvalidParams,
            Error::NonFinite(_) => GbxStatus::NonFinite,
            Error::NotInvertible => GbxStatus::NotInvertible,
            Error::NotOnHyperquadric { .. } | Error::KindMismatch(..) => GbxStatus::NotOnHyperquadric,
            Error::IndexNotInBasis { .. } => GbxStatus::IndexNotInBasis,
            Error::CaseMismatch { .. } => GbxStatus::CaseMismatch,
            Error::UnsupportedSurfaceParams { .. } => GbxStatus::UnsupportedParams,
            Error::Degenerate(_) => GbxStatus::Degenerate,
            Error::CircleWithRate { .. } | Error::NotUnitCase | Error::InvalidArgument(_) => GbxStatus::InvalidArgument,
            Error::Io { .. } => GbxStatus::Io,
            Error::FormMismatch { .. } => GbxStatus::Internal,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

fn null(what: &str) -> Failure {
    Failure {
        status: GbxStatus::NullPointer,
        message: format!("{what} is null"),
    }
}

fn bad_code(what: &str, code: u32) -> Failure {
    Failure {
        status: GbxStatus::InvalidArgument,
        message: format!("unknown {what} code {code}"),
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, recording its error message and converting panics.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GbxStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        Err(Failure {
            status: GbxStatus::Internal,
            message: "internal panic".into(),
        })
    });
    match outcome {
        Ok(()) => {
            set_last_error("");
            GbxStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.message);
            e.status
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    let slot = p.as_mut().ok_or_else(|| null(what))?;
    *slot = value;
    Ok(())
}

fn kind(code: u32) -> Result<HyperquadricKind, Failure> {
    match code {
        GBX_KIND_TI => Ok(HyperquadricKind::Ti),
        GBX_KIND_TJ => Ok(HyperquadricKind::Tj),
        GBX_KIND_TIJ => Ok(HyperquadricKind::Tij),
        _ => Err(bad_code("kind", code)),
    }
}

fn rule(code: u32) -> Result<TensorRule, Failure> {
    Ok(match kind(code)? {
        HyperquadricKind::Ti => TensorRule::Ti,
        HyperquadricKind::Tj => TensorRule::Tj,
        HyperquadricKind::Tij => TensorRule::Tij,
    })
}

fn curve(code: u32) -> Result<CurveKind, Failure> {
    match code {
        GBX_CURVE_CIRCLE => Ok(CurveKind::Circle),
        GBX_CURVE_LORENTZIAN_CIRCLE => Ok(CurveKind::LorentzianCircle),
        GBX_CURVE_SPIRAL => Ok(CurveKind::Spiral),
        GBX_CURVE_HYPERBOLIC_SPIRAL => Ok(CurveKind::HyperbolicSpiral),
        _ => Err(bad_code("curve", code)),
    }
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gbx_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Static description of a status code; unknown codes get a generic text.
#[no_mangle]
pub extern "C" fn gbx_status_message(status: u32) -> *const c_char {
    const MESSAGES: [&CStr; 13] = [
        c"ok",
        c"null pointer argument",
        c"alpha and beta must be finite and nonzero",
        c"non-finite value",
        c"zero divisor",
        c"point is not on the hyperquadric",
        c"index is not a basis field of this group",
        c"curve kinds do not fit the rule and parameters",
        c"surfaces need alpha, beta in {-1, 1}",
        c"degenerate tangent plane",
        c"invalid argument",
        c"i/o error",
        c"internal error",
    ];
    let s = usize::try_from(status)
        .ok()
        .and_then(|i| MESSAGES.get(i))
        .copied()
        .unwrap_or(c"unknown status");
    s.as_ptr()
}

/// Creates an algebra handle. Free it with [`gbx_algebra_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gbx_algebra_new(alpha: f64, beta: f64, out: *mut *mut GbxAlgebra) -> GbxStatus {
    guard(|| {
        let p = AlgebraParams::new(alpha, beta)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(GbxAlgebra(p)));
        Ok(())
    })
}

/// # Safety
/// `algebra` must come from [`gbx_algebra_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn gbx_algebra_free(algebra: *mut GbxAlgebra) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_multiply(
    algebra: *const GbxAlgebra,
    x: GbxNumber,
    y: GbxNumber,
    out: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        let xy = p.checked_multiply(x.to_core()?, y.to_core()?)?;
        put(out, xy.into(), "out")
    })
}

/// Conjugation `kind` (a `GBX_KIND_*` code) of `x`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_conjugate(kind_code: u32, x: GbxNumber, out: *mut GbxNumber) -> GbxStatus {
    guard(|| {
        let k: ConjugationKind = kind(kind_code)?.conjugation();
        put(out, x.to_core()?.conjugate(k).into(), "out")
    })
}

/// Real part and single imaginary residual of `x · x^k`.
///
/// # Safety
/// Pointers must be valid; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_norm_form(
    algebra: *const GbxAlgebra,
    kind_code: u32,
    x: GbxNumber,
    scalar: *mut f64,
    residual: *mut f64,
) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        let nf = p.norm_form(x.to_core()?, kind(kind_code)?.conjugation());
        if scalar.is_null() || residual.is_null() {
            return Err(null("output"));
        }
        *scalar = nf.scalar;
        *residual = nf.residual;
        Ok(())
    })
}

/// Writes the 4x4 representation matrix row-major into `out[16]`.
///
/// # Safety
/// `out` must be valid for 16 writes.
#[no_mangle]
pub unsafe extern "C" fn gbx_rep_matrix(algebra: *const GbxAlgebra, x: GbxNumber, out: *mut f64) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = p.rep_matrix(x.to_core()?);
        let dst = std::slice::from_raw_parts_mut(out, 16);
        for (r, row) in m.entries.iter().enumerate() {
            dst[4 * r..4 * r + 4].copy_from_slice(row);
        }
        Ok(())
    })
}

/// Algebra inverse; fails with `NotInvertible` on zero divisors.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_inverse(algebra: *const GbxAlgebra, x: GbxNumber, out: *mut GbxNumber) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        put(out, p.inverse(x.to_core()?)?.into(), "out")
    })
}

/// Value of the bilinear constraint cutting out hyperquadric `kind`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_constraint_value(
    algebra: *const GbxAlgebra,
    kind_code: u32,
    x: GbxNumber,
    out: *mut f64,
) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        put(out, kind(kind_code)?.constraint_value(x.to_core()?, p), "out")
    })
}

unsafe fn quadric(algebra: *const GbxAlgebra, kind_code: u32) -> Result<Hyperquadric, Failure> {
    let p = get(algebra, "algebra")?.0;
    Ok(Hyperquadric::new(kind(kind_code)?, p, DEFAULT_MEMBERSHIP_TOL)?)
}

/// Group product of two members of hyperquadric `kind`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_group_product(
    algebra: *const GbxAlgebra,
    kind_code: u32,
    x: GbxNumber,
    y: GbxNumber,
    out: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let q = quadric(algebra, kind_code)?;
        let (x, y) = (q.membership(x.to_core()?)?, q.membership(y.to_core()?)?);
        put(out, q.product(&x, &y)?.value().into(), "out")
    })
}

/// Group inverse `x^k / N_x` of a member of hyperquadric `kind`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_group_inverse(
    algebra: *const GbxAlgebra,
    kind_code: u32,
    x: GbxNumber,
    out: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let q = quadric(algebra, kind_code)?;
        let x = q.membership(x.to_core()?)?;
        put(out, q.inverse(&x)?.value().into(), "out")
    })
}

/// Left-invariant basis field `X_m` (m in 1..=4) of group `kind` at `x`.
///
/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_basis_field(
    algebra: *const GbxAlgebra,
    kind_code: u32,
    m: u8,
    x: GbxNumber,
    out: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let p = &get(algebra, "algebra")?.0;
        let v = basis_field(kind(kind_code)?, m, x.to_core()?, p)?;
        put(out, v.components.into(), "out")
    })
}

/// Surface from explicit curve kinds and rates. Fails with `CaseMismatch`
/// when the kinds do not fit `(rule, α, β)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_new(
    rule_code: u32,
    alpha: f64,
    beta: f64,
    curve_gamma: u32,
    rate_gamma: f64,
    curve_delta: u32,
    rate_delta: f64,
    out: *mut *mut GbxSurface,
) -> GbxStatus {
    guard(|| {
        let gamma = PlanarCurve::new(curve(curve_gamma)?, rate_gamma)?;
        let delta = PlanarCurve::new(curve(curve_delta)?, rate_delta)?;
        let s = TensorSurface::new(gamma, delta, rule(rule_code)?, AlgebraParams::new(alpha, beta)?)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(GbxSurface(s)));
        Ok(())
    })
}

/// Surface with the curve kinds the case table requires: circles for zero
/// rates, spirals otherwise.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_for_case(
    rule_code: u32,
    alpha: f64,
    beta: f64,
    rate_gamma: f64,
    rate_delta: f64,
    out: *mut *mut GbxSurface,
) -> GbxStatus {
    guard(|| {
        let s = TensorSurface::for_case(
            rule(rule_code)?,
            AlgebraParams::new(alpha, beta)?,
            rate_gamma,
            rate_delta,
        )?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(GbxSurface(s)));
        Ok(())
    })
}

/// # Safety
/// `surface` must come from a `gbx_surface_*` constructor and not be freed
/// twice.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_free(surface: *mut GbxSurface) {
    if !surface.is_null() {
        drop(Box::from_raw(surface));
    }
}

/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_evaluate(
    surface: *const GbxSurface,
    t: f64,
    s: f64,
    out: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let f = get(surface, "surface")?.0.evaluate(t, s)?;
        put(out, f.into(), "out")
    })
}

/// `∂f/∂t` and `∂f/∂s` in ambient coordinates.
///
/// # Safety
/// Pointers must be valid; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_tangents(
    surface: *const GbxSurface,
    t: f64,
    s: f64,
    dt: *mut GbxNumber,
    ds: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let (ft, fs) = get(surface, "surface")?.0.tangents(t, s)?;
        if dt.is_null() || ds.is_null() {
            return Err(null("output"));
        }
        *dt = ft.components.into();
        *ds = fs.components.into();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_fundamental_form(
    surface: *const GbxSurface,
    t: f64,
    s: f64,
    out: *mut GbxFundamentalForm,
) -> GbxStatus {
    guard(|| {
        let g = get(surface, "surface")?.0.fundamental_form(t, s)?;
        put(
            out,
            GbxFundamentalForm {
                g11: g.g11,
                g12: g.g12,
                g22: g.g22,
            },
            "out",
        )
    })
}

/// Orthonormal tangent frame; `Degenerate` on lightlike directions.
///
/// # Safety
/// Pointers must be valid; outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn gbx_surface_frame(
    surface: *const GbxSurface,
    t: f64,
    s: f64,
    e1: *mut GbxNumber,
    e2: *mut GbxNumber,
) -> GbxStatus {
    guard(|| {
        let (a, b) = get(surface, "surface")?.0.orthonormal_frame(t, s)?;
        if e1.is_null() || e2.is_null() {
            return Err(null("output"));
        }
        *e1 = a.components.into();
        *e2 = b.components.into();
        Ok(())
    })
}

/// Writes an `nt` x `ns` grid over `[t_min, t_max] x [s_min, s_max]` to the
/// UTF-8 `path` as CSV or OBJ (`GBX_FORMAT_*`).
///
/// # Safety
/// `surface` must be valid and `path` a NUL-terminated string.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn gbx_surface_export_mesh(
    surface: *const GbxSurface,
    t_min: f64,
    t_max: f64,
    s_min: f64,
    s_max: f64,
    nt: usize,
    ns: usize,
    format: u32,
    path: *const c_char,
) -> GbxStatus {
    guard(|| {
        let surface = &get(surface, "surface")?.0;
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path).to_str().map_err(|_| Failure {
            status: GbxStatus::InvalidArgument,
            message: "path is not valid UTF-8".into(),
        })?;
        let format = match format {
            GBX_FORMAT_CSV => MeshFormat::Csv,
            GBX_FORMAT_OBJ => MeshFormat::Obj,
            other => return Err(bad_code("format", other)),
        };
        let grid = MeshGrid::new((t_min, t_max), (s_min, s_max), nt, ns)?;
        export_mesh(surface, &grid, format, Path::new(path))?;
        Ok(())
    })
}

//! C ABI for the copula toolkit: opaque model handles plus status codes.
//!
//! Every function returns an `NmcStatus`; results travel through out
//! pointers. Handles created by the constructors must be released with
//! `nmc_model_free`. All functions are thread-safe: models are immutable
//! after construction.

use std::ffi::{c_char, CStr};

use nmcopula::association::{measures_numeric, QuadSpec};
use nmcopula::empirical::{pseudo_observations, RawSample};
use nmcopula::inference::{
    aic, cic_with_chunks, cvm_criterion, fit_mple, FamilySpec, FitFamily, FitFlag,
};
use nmcopula::normal_mode::NormalModeParams;
use nmcopula::{CopulaError, CopulaModel};

/// Status code of every C-ABI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    DimensionMismatch = 3,
    NoDensity = 4,
    ConvergenceFailure = 5,
    NonFiniteInput = 6,
    FitFailure = 7,
    BufferTooSmall = 8,
}

/// Family selector for the C constructors.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NmcFamily {
    NormalMode = 0,
    Product = 1,
    FrechetLower = 2,
    FrechetUpper = 3,
    Amh = 4,
    Clayton = 5,
    Frank = 6,
    Fgm = 7,
    Gaussian = 8,
}

/// Opaque copula model handle.
pub struct NmcModel {
    inner: CopulaModel,
}

/// The six association measures.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct NmcMeasures {
    pub sigma: f64,
    pub rho: f64,
    pub tau: f64,
    pub beta: f64,
    pub gamma: f64,
    pub footrule: f64,
}

/// Estimation result for one family on one dataset.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct NmcFitResult {
    pub theta_hat: f64,
    pub loglik: f64,
    pub cvmc: f64,
    pub aic: f64,
    pub cic: f64,
    pub neg2n_cic: f64,
    pub n: u64,
    /// 1 when the estimate sits on a search boundary.
    pub boundary: u8,
    /// 1 when the pseudolog-likelihood was flat in the parameter.
    pub flat_likelihood: u8,
}

fn status_of(err: &CopulaError) -> NmcStatus {
    match err {
        CopulaError::DimensionMismatch { .. } => NmcStatus::DimensionMismatch,
        CopulaError::InvalidParameter(_) | CopulaError::Domain(_) => NmcStatus::InvalidParameter,
        CopulaError::NoDensity => NmcStatus::NoDensity,
        CopulaError::ConvergenceFailure { .. } => NmcStatus::ConvergenceFailure,
        CopulaError::NonFiniteInput { .. } => NmcStatus::NonFiniteInput,
        CopulaError::IndexOutOfRange { .. } => NmcStatus::InvalidParameter,
        CopulaError::EmptyAfterTrim => NmcStatus::InvalidParameter,
        CopulaError::NonFiniteLikelihood | CopulaError::FoldFailure { .. } => NmcStatus::FitFailure,
    }
}

/// Version string of the library; static storage, do not free.
#[no_mangle]
pub extern "C" fn nmc_version() -> *const c_char {
    const VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => unreachable!(),
    };
    VERSION.as_ptr()
}

/// Human-readable name of a status code; static storage, do not free.
#[no_mangle]
pub extern "C" fn nmc_status_name(status: NmcStatus) -> *const c_char {
    let name: &CStr = match status {
        NmcStatus::Ok => c"ok",
        NmcStatus::NullPointer => c"null pointer",
        NmcStatus::InvalidParameter => c"invalid parameter",
        NmcStatus::DimensionMismatch => c"dimension mismatch",
        NmcStatus::NoDensity => c"family has no density",
        NmcStatus::ConvergenceFailure => c"root search did not converge",
        NmcStatus::NonFiniteInput => c"non-finite input",
        NmcStatus::FitFailure => c"estimation failed",
        NmcStatus::BufferTooSmall => c"output buffer too small",
    };
    name.as_ptr()
}

unsafe fn hand_out(model: CopulaModel, out: *mut *mut NmcModel) -> NmcStatus {
    unsafe {
        *out = Box::into_raw(Box::new(NmcModel { inner: model }));
    }
    NmcStatus::Ok
}

/// Creates a normal mode copula from an amplitude and `dim` mode numbers.
///
/// # Safety
/// `kappa` must point to `dim` readable u32 values and `out` must be a valid
/// writable location.
#[no_mangle]
pub unsafe extern "C" fn nmc_model_new_normal_mode(
    theta: f64,
    kappa: *const u32,
    dim: usize,
    out: *mut *mut NmcModel,
) -> NmcStatus {
    if kappa.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let kappa = unsafe { std::slice::from_raw_parts(kappa, dim) }.to_vec();
    match NormalModeParams::new(theta, kappa) {
        Ok(params) => unsafe { hand_out(CopulaModel::normal_mode(params), out) },
        Err(e) => status_of(&e),
    }
}

/// Creates one of the bivariate one-parameter families
/// (amh, clayton, frank, fgm, gaussian).
///
/// # Safety
/// `out` must be a valid writable location.
#[no_mangle]
pub unsafe extern "C" fn nmc_model_new_classical(
    family: NmcFamily,
    theta: f64,
    out: *mut *mut NmcModel,
) -> NmcStatus {
    if out.is_null() {
        return NmcStatus::NullPointer;
    }
    let built = match family {
        NmcFamily::Amh => CopulaModel::amh(theta),
        NmcFamily::Clayton => CopulaModel::clayton(theta),
        NmcFamily::Frank => CopulaModel::frank(theta),
        NmcFamily::Fgm => CopulaModel::fgm(theta),
        NmcFamily::Gaussian => CopulaModel::gaussian(theta),
        _ => {
            return NmcStatus::InvalidParameter;
        }
    };
    match built {
        Ok(model) => unsafe { hand_out(model, out) },
        Err(e) => status_of(&e),
    }
}

/// Creates a parameter-free reference copula: the product copula of the
/// given dimension, or a (bivariate) Fréchet bound.
///
/// # Safety
/// `out` must be a valid writable location.
#[no_mangle]
pub unsafe extern "C" fn nmc_model_new_reference(
    family: NmcFamily,
    dim: usize,
    out: *mut *mut NmcModel,
) -> NmcStatus {
    if out.is_null() {
        return NmcStatus::NullPointer;
    }
    let built = match family {
        NmcFamily::Product => match CopulaModel::product(dim) {
            Ok(m) => m,
            Err(e) => return status_of(&e),
        },
        NmcFamily::FrechetLower => CopulaModel::frechet_lower(),
        NmcFamily::FrechetUpper => CopulaModel::frechet_upper(),
        _ => return NmcStatus::InvalidParameter,
    };
    unsafe { hand_out(built, out) }
}

/// Releases a model handle; a null pointer is ignored.
///
/// # Safety
/// `model` must have been returned by one of the constructors and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn nmc_model_free(model: *mut NmcModel) {
    if !model.is_null() {
        drop(unsafe { Box::from_raw(model) });
    }
}

/// Dimension of the model (0 for a null handle).
///
/// # Safety
/// `model` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn nmc_model_dim(model: *const NmcModel) -> usize {
    if model.is_null() {
        return 0;
    }
    unsafe { &*model }.inner.dim()
}

unsafe fn coords_slice<'a>(coords: *const f64, dim: usize) -> Option<&'a [f64]> {
    if coords.is_null() {
        return None;
    }
    Some(unsafe { std::slice::from_raw_parts(coords, dim) })
}

/// Boundary-extended CDF at `coords` (entries in [0, 1]).
///
/// # Safety
/// `model` must be a live handle; `coords` must hold `dim` readable doubles;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nmc_cdf(
    model: *const NmcModel,
    coords: *const f64,
    dim: usize,
    out: *mut f64,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let Some(coords) = (unsafe { coords_slice(coords, dim) }) else {
        return NmcStatus::NullPointer;
    };
    match unsafe { &*model }.inner.cdf_closed(coords) {
        Ok(v) => {
            unsafe { *out = v };
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Copula density at an interior point.
///
/// # Safety
/// As for `nmc_cdf`.
#[no_mangle]
pub unsafe extern "C" fn nmc_density(
    model: *const NmcModel,
    coords: *const f64,
    dim: usize,
    out: *mut f64,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let Some(coords) = (unsafe { coords_slice(coords, dim) }) else {
        return NmcStatus::NullPointer;
    };
    match unsafe { &*model }.inner.density_interior(coords) {
        Ok(v) => {
            unsafe { *out = v };
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Conditional CDF of coordinate `target` given the other one (bivariate).
///
/// # Safety
/// As for `nmc_cdf`.
#[no_mangle]
pub unsafe extern "C" fn nmc_conditional_cdf(
    model: *const NmcModel,
    target: usize,
    coords: *const f64,
    dim: usize,
    out: *mut f64,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let Some(coords) = (unsafe { coords_slice(coords, dim) }) else {
        return NmcStatus::NullPointer;
    };
    match unsafe { &*model }.inner.conditional_cdf_interior(target, coords) {
        Ok(v) => {
            unsafe { *out = v };
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Inverse of the conditional CDF in the target coordinate.
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nmc_conditional_quantile(
    model: *const NmcModel,
    target: usize,
    u_given: f64,
    prob: f64,
    out: *mut f64,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    match unsafe { &*model }.inner.conditional_quantile(target, u_given, prob) {
        Ok(v) => {
            unsafe { *out = v };
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Draws `n` points into `out` (row-major, `n * dim` doubles), deterministic
/// per seed.
///
/// # Safety
/// `model` must be a live handle; `out` must have room for `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn nmc_sample(
    model: *const NmcModel,
    n: usize,
    seed: u64,
    out: *mut f64,
    out_len: usize,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let inner = &unsafe { &*model }.inner;
    let dim = inner.dim();
    let needed = match n.checked_mul(dim) {
        Some(len) => len,
        None => return NmcStatus::BufferTooSmall,
    };
    if out_len < needed {
        return NmcStatus::BufferTooSmall;
    }
    match inner.sample(n, seed) {
        Ok(points) => {
            let slice = unsafe { std::slice::from_raw_parts_mut(out, needed) };
            for (i, point) in points.iter().enumerate() {
                slice[i * dim..(i + 1) * dim].copy_from_slice(point.coords());
            }
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Closed-form association measures (normal mode family only).
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nmc_measures_closed_form(
    model: *const NmcModel,
    out: *mut NmcMeasures,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let Some(params) = unsafe { &*model }.inner.normal_mode_params() else {
        return NmcStatus::InvalidParameter;
    };
    match params.measures() {
        Ok(m) => {
            unsafe {
                *out = NmcMeasures {
                    sigma: m.sigma,
                    rho: m.rho,
                    tau: m.tau,
                    beta: m.beta,
                    gamma: m.gamma,
                    footrule: m.footrule,
                };
            }
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Association measures by quadrature with `nodes` points per axis
/// (pass 0 for the default of 256).
///
/// # Safety
/// `model` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nmc_measures_numeric(
    model: *const NmcModel,
    nodes: usize,
    out: *mut NmcMeasures,
) -> NmcStatus {
    if model.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let spec = match QuadSpec::new(if nodes == 0 { 256 } else { nodes }, 12) {
        Ok(s) => s,
        Err(e) => return status_of(&e),
    };
    match measures_numeric(&unsafe { &*model }.inner, &spec) {
        Ok(m) => {
            unsafe {
                *out = NmcMeasures {
                    sigma: m.sigma,
                    rho: m.rho,
                    tau: m.tau,
                    beta: m.beta,
                    gamma: m.gamma,
                    footrule: m.footrule,
                };
            }
            NmcStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Full estimation pipeline on raw data: ranks the rows into
/// pseudo-observations, maximizes the pseudolikelihood, and evaluates the
/// goodness-of-fit and information criteria.
///
/// `data` holds `n` rows of two doubles (row-major). `kappa1`/`kappa2` are
/// only read for the normal mode family.
///
/// # Safety
/// `data` must hold `2 * n` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nmc_fit_mple(
    family: NmcFamily,
    kappa1: u32,
    kappa2: u32,
    data: *const f64,
    n: usize,
    out: *mut NmcFitResult,
) -> NmcStatus {
    if data.is_null() || out.is_null() {
        return NmcStatus::NullPointer;
    }
    let fit_family = match family {
        NmcFamily::NormalMode => FitFamily::NormalMode {
            kappa: [kappa1, kappa2],
        },
        NmcFamily::Amh => FitFamily::Amh,
        NmcFamily::Clayton => FitFamily::Clayton,
        NmcFamily::Frank => FitFamily::Frank,
        NmcFamily::Fgm => FitFamily::Fgm,
        NmcFamily::Gaussian => FitFamily::Gaussian,
        _ => return NmcStatus::InvalidParameter,
    };
    if family == NmcFamily::NormalMode && (kappa1 == 0 || kappa2 == 0) {
        return NmcStatus::InvalidParameter;
    }
    let flat = unsafe { std::slice::from_raw_parts(data, 2 * n) };
    let columns = vec![
        flat.iter().step_by(2).copied().collect::<Vec<f64>>(),
        flat.iter().skip(1).step_by(2).copied().collect::<Vec<f64>>(),
    ];
    let raw = match RawSample::new(columns, vec!["x1".into(), "x2".into()]) {
        Ok(r) => r,
        Err(e) => return status_of(&e),
    };
    let ps = pseudo_observations(&raw);
    let spec = FamilySpec::new(fit_family);
    let outcome = match fit_mple(&spec, &ps) {
        Ok(o) => o,
        Err(e) => return status_of(&e),
    };
    let model = match spec.family.model(outcome.theta_hat) {
        Ok(m) => m,
        Err(e) => return status_of(&e),
    };
    let cvmc = match cvm_criterion(&model, &ps) {
        Ok(v) => v,
        Err(e) => return status_of(&e),
    };
    let cic = match cic_with_chunks(&spec, &ps, Some(outcome.theta_hat), 1) {
        Ok(v) => v,
        Err(e) => return status_of(&e),
    };
    unsafe {
        *out = NmcFitResult {
            theta_hat: outcome.theta_hat,
            loglik: outcome.loglik,
            cvmc,
            aic: aic(outcome.loglik, 1),
            cic,
            neg2n_cic: -2.0 * n as f64 * cic,
            n: n as u64,
            boundary: outcome.flags.contains(&FitFlag::BoundaryTheta) as u8,
            flat_likelihood: outcome.flags.contains(&FitFlag::FlatLikelihood) as u8,
        };
    }
    NmcStatus::Ok
}

//! Exercises the C ABI exactly as a foreign caller would: raw pointers,
//! status codes, preallocated buffers.

use std::ffi::CStr;
use std::ptr;

use nmcopula_capi::*;

fn new_normal_mode(theta: f64, kappa: &[u32]) -> *mut NmcModel {
    let mut handle: *mut NmcModel = ptr::null_mut();
    let status =
        unsafe { nmc_model_new_normal_mode(theta, kappa.as_ptr(), kappa.len(), &mut handle) };
    assert_eq!(status, NmcStatus::Ok);
    assert!(!handle.is_null());
    handle
}

#[test]
fn lifecycle_and_cdf() {
    let model = new_normal_mode(1.0, &[2, 1]);
    assert_eq!(unsafe { nmc_model_dim(model) }, 2);
    let mut value = f64::NAN;
    let coords = [0.5f64, 0.5];
    let status = unsafe { nmc_cdf(model, coords.as_ptr(), 2, &mut value) };
    assert_eq!(status, NmcStatus::Ok);
    assert!((value - 0.25).abs() < 1e-14);
    // boundary extension works through the ABI
    let edge = [1.0f64, 0.7];
    unsafe { nmc_cdf(model, edge.as_ptr(), 2, &mut value) };
    assert_eq!(value, 0.7);
    unsafe { nmc_model_free(model) };
}

#[test]
fn invalid_parameters_are_reported() {
    let mut handle: *mut NmcModel = ptr::null_mut();
    let kappa = [1u32, 1];
    let status = unsafe { nmc_model_new_normal_mode(1.5, kappa.as_ptr(), 2, &mut handle) };
    assert_eq!(status, NmcStatus::InvalidParameter);
    assert!(handle.is_null());

    let status = unsafe { nmc_model_new_classical(NmcFamily::Clayton, -2.0, &mut handle) };
    assert_eq!(status, NmcStatus::InvalidParameter);

    let status = unsafe { nmc_model_new_normal_mode(1.0, ptr::null(), 2, &mut handle) };
    assert_eq!(status, NmcStatus::NullPointer);
}

#[test]
fn density_errors_for_frechet() {
    let mut handle: *mut NmcModel = ptr::null_mut();
    let status = unsafe { nmc_model_new_reference(NmcFamily::FrechetUpper, 2, &mut handle) };
    assert_eq!(status, NmcStatus::Ok);
    let coords = [0.3f64, 0.4];
    let mut value = 0.0;
    let status = unsafe { nmc_density(handle, coords.as_ptr(), 2, &mut value) };
    assert_eq!(status, NmcStatus::NoDensity);
    unsafe { nmc_model_free(handle) };
}

#[test]
fn sampling_fills_the_buffer_deterministically() {
    let model = new_normal_mode(0.8, &[1, 1]);
    let n = 256;
    let mut a = vec![0.0f64; 2 * n];
    let mut b = vec![0.0f64; 2 * n];
    assert_eq!(
        unsafe { nmc_sample(model, n, 7, a.as_mut_ptr(), a.len()) },
        NmcStatus::Ok
    );
    assert_eq!(
        unsafe { nmc_sample(model, n, 7, b.as_mut_ptr(), b.len()) },
        NmcStatus::Ok
    );
    assert_eq!(a, b);
    assert!(a.iter().all(|&u| u > 0.0 && u < 1.0));
    // undersized buffer is rejected before anything is written
    let mut small = vec![0.0f64; n];
    assert_eq!(
        unsafe { nmc_sample(model, n, 7, small.as_mut_ptr(), small.len()) },
        NmcStatus::BufferTooSmall
    );
    unsafe { nmc_model_free(model) };
}

#[test]
fn measures_closed_form_and_numeric_agree() {
    let model = new_normal_mode(1.0, &[1, 1]);
    let mut closed = NmcMeasures {
        sigma: 0.0,
        rho: 0.0,
        tau: 0.0,
        beta: 0.0,
        gamma: 0.0,
        footrule: 0.0,
    };
    let mut numeric = closed;
    assert_eq!(
        unsafe { nmc_measures_closed_form(model, &mut closed) },
        NmcStatus::Ok
    );
    assert_eq!(
        unsafe { nmc_measures_numeric(model, 128, &mut numeric) },
        NmcStatus::Ok
    );
    for (a, b) in [
        (closed.sigma, numeric.sigma),
        (closed.rho, numeric.rho),
        (closed.tau, numeric.tau),
        (closed.beta, numeric.beta),
        (closed.gamma, numeric.gamma),
        (closed.footrule, numeric.footrule),
    ] {
        assert!((a - b).abs() < 1e-6, "{a} vs {b}");
    }
    unsafe { nmc_model_free(model) };
}

#[test]
fn fit_through_the_abi_recovers_the_amplitude() {
    // generate through the ABI as well, then fit the same family
    let model = new_normal_mode(0.9, &[2, 1]);
    let n = 1500;
    let mut draws = vec![0.0f64; 2 * n];
    assert_eq!(
        unsafe { nmc_sample(model, n, 42, draws.as_mut_ptr(), draws.len()) },
        NmcStatus::Ok
    );
    unsafe { nmc_model_free(model) };

    let mut result = NmcFitResult {
        theta_hat: 0.0,
        loglik: 0.0,
        cvmc: 0.0,
        aic: 0.0,
        cic: 0.0,
        neg2n_cic: 0.0,
        n: 0,
        boundary: 0,
        flat_likelihood: 0,
    };
    let status = unsafe {
        nmc_fit_mple(
            NmcFamily::NormalMode,
            2,
            1,
            draws.as_ptr(),
            n,
            &mut result,
        )
    };
    assert_eq!(status, NmcStatus::Ok);
    assert!(
        (result.theta_hat - 0.9).abs() < 0.2,
        "theta_hat = {}",
        result.theta_hat
    );
    assert!(result.loglik > 0.0);
    assert!(result.cvmc >= 0.0);
    assert!((result.aic - (2.0 - 2.0 * result.loglik)).abs() < 1e-12);
    assert_eq!(result.n, n as u64);
}

#[test]
fn status_names_and_version_are_c_strings() {
    let version = unsafe { CStr::from_ptr(nmc_version()) };
    assert!(!version.to_str().unwrap().is_empty());
    let name = unsafe { CStr::from_ptr(nmc_status_name(NmcStatus::NoDensity)) };
    assert_eq!(name.to_str().unwrap(), "family has no density");
}

#[test]
fn generated_header_exposes_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/nmcopula.h"
    ))
    .expect("cbindgen header exists after build");
    for symbol in [
        "typedef struct NmcModel NmcModel;",
        "nmc_model_new_normal_mode",
        "nmc_model_free",
        "nmc_cdf",
        "nmc_sample",
        "nmc_fit_mple",
        "NmcStatus",
        "NmcFitResult",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}

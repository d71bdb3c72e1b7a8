use std::ffi::CStr;
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use fh_blend::{ExtParams, Interpolant, NodeSet};
use fh_blend_ffi::*;

fn runge(x: f64) -> f64 {
    1.0 / (1.0 + x * x)
}

fn equispaced_handle(n: usize, d: usize, e: usize) -> *mut FhbInterpolant {
    let nodes = NodeSet::equispaced(-5.0, 5.0, n).unwrap();
    let ys: Vec<f64> = nodes.xs().iter().map(|&x| runge(x)).collect();
    let mut h = ptr::null_mut();
    let s = unsafe { fhb_interpolant_new_equispaced(-5.0, 5.0, ys.as_ptr(), ys.len(), d, e, &mut h) };
    assert_eq!(s, FhbStatus::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(fhb_last_error_message()) }.to_str().unwrap().to_owned()
}

#[test]
fn matches_library() {
    let h = equispaced_handle(40, 14, 4);
    let nodes = NodeSet::equispaced(-5.0, 5.0, 40).unwrap();
    let lib = Interpolant::from_fn(nodes, ExtParams::new(14, 4), runge).unwrap();
    let xs: Vec<f64> = (0..101).map(|k| -5.0 + 0.1 * k as f64 + 0.013).collect();
    let mut out = vec![0.0; xs.len()];
    unsafe {
        assert_eq!(fhb_interpolant_len(h), 41);
        assert_eq!(fhb_interpolant_eval_many(h, xs.as_ptr(), xs.len(), out.as_mut_ptr()), FhbStatus::Ok);
        for (&x, &v) in xs.iter().zip(&out) {
            assert_eq!(v, lib.value(x).unwrap());
        }
        let mut lambda = 0.0;
        assert_eq!(fhb_interpolant_lebesgue(h, 4.9, &mut lambda), FhbStatus::Ok);
        assert_eq!(lambda, lib.scheme().lebesgue(4.9).unwrap());
        fhb_interpolant_free(h);
    }
}

#[test]
fn general_nodes_and_basis() {
    let xs = [0.0, 0.3, 0.45, 1.0, 1.7, 2.0];
    let ys = [1.0, -1.0, 2.0, 0.5, 0.0, 3.0];
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(fhb_interpolant_new(xs.as_ptr(), ys.as_ptr(), 6, 3, 2, &mut h), FhbStatus::Ok);
        let mut beta = [0.0; 6];
        assert_eq!(fhb_interpolant_basis(h, 0.8, beta.as_mut_ptr(), 6), FhbStatus::Ok);
        assert!((beta.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        let mut small = [0.0; 5];
        assert_eq!(fhb_interpolant_basis(h, 0.8, small.as_mut_ptr(), 5), FhbStatus::BufferTooSmall);
        let mut v = 0.0;
        assert_eq!(fhb_interpolant_eval(h, 0.45, &mut v), FhbStatus::Ok);
        assert_eq!(v, 2.0);
        fhb_interpolant_free(h);
    }
}

#[test]
fn error_codes_and_messages() {
    let xs = [0.0, 1.0, 1.0, 2.0];
    let ys = [0.0; 4];
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(fhb_interpolant_new(xs.as_ptr(), ys.as_ptr(), 4, 1, 0, &mut h), FhbStatus::InvalidNodes);
        assert!(h.is_null());
        assert!(last_error().contains("strictly increasing"));

        let xs = [0.0, 1.0, 2.0, 3.0];
        assert_eq!(fhb_interpolant_new(xs.as_ptr(), ys.as_ptr(), 4, 5, 0, &mut h), FhbStatus::DegreeOutOfRange);
        assert!(last_error().contains("d = 5"));
        assert_eq!(fhb_interpolant_new(xs.as_ptr(), ys.as_ptr(), 4, 2, 3, &mut h), FhbStatus::EndCountOutOfRange);
        assert_eq!(fhb_interpolant_new(ptr::null(), ys.as_ptr(), 4, 1, 0, &mut h), FhbStatus::NullPointer);
        let nan = [0.0, f64::NAN, 0.0, 0.0];
        assert_eq!(fhb_interpolant_new(xs.as_ptr(), nan.as_ptr(), 4, 1, 0, &mut h), FhbStatus::NonFinite);

        assert_eq!(fhb_interpolant_new(xs.as_ptr(), ys.as_ptr(), 4, 1, 0, &mut h), FhbStatus::Ok);
        let mut v = 0.0;
        assert_eq!(fhb_interpolant_eval(h, f64::INFINITY, &mut v), FhbStatus::NonFinite);
        assert_eq!(fhb_interpolant_eval(h, 0.5, ptr::null_mut()), FhbStatus::NullPointer);
        assert_eq!(fhb_interpolant_eval(ptr::null(), 0.5, &mut v), FhbStatus::NullPointer);
        fhb_interpolant_free(h);
        fhb_interpolant_free(ptr::null_mut());
        assert_eq!(fhb_interpolant_len(ptr::null()), 0);

        let msg = CStr::from_ptr(fhb_status_message(FhbStatus::WeightRange));
        assert!(msg.to_str().unwrap().contains("floating-point"));
    }
}

#[test]
fn shared_handle_across_threads() {
    struct Shared(*mut FhbInterpolant);
    unsafe impl Sync for Shared {}
    let h = Shared(equispaced_handle(64, 12, 4));
    let h = &h;
    std::thread::scope(|s| {
        for t in 0..4 {
            s.spawn(move || {
                for k in 0..500 {
                    let x = -4.99 + 0.005 * (k * 4 + t) as f64;
                    let mut v = 0.0;
                    assert_eq!(unsafe { fhb_interpolant_eval(h.0, x, &mut v) }, FhbStatus::Ok);
                    assert!((v - runge(x)).abs() < 1e-6);
                }
            });
        }
    });
    unsafe { fhb_interpolant_free(h.0) };
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/fh_blend.h")).unwrap();
    assert!(header.starts_with("#ifndef FH_BLEND_H"));
    assert!(header.contains("typedef struct FhbInterpolant FhbInterpolant;"));
    for name in [
        "fhb_interpolant_new(",
        "fhb_interpolant_new_equispaced(",
        "fhb_interpolant_free(",
        "fhb_interpolant_len(",
        "fhb_interpolant_eval(",
        "fhb_interpolant_eval_many(",
        "fhb_interpolant_basis(",
        "fhb_interpolant_lebesgue(",
        "fhb_status_message(",
        "fhb_last_error_message(",
        "FHB_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Compiles a small C program against the header and the shared library.
#[test]
fn c_program_links_and_runs() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler found; skipping");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap();
    assert!(lib_dir.join("libfh_blend_ffi.so").exists() || lib_dir.join("libfh_blend_ffi.dylib").exists());
    let out = std::env::temp_dir().join(format!("fhb-smoke-{}", std::process::id()));
    let status = Command::new(&cc)
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg("-L")
        .arg(lib_dir)
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .args(["-lfh_blend_ffi", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    std::fs::remove_file(&out).ok();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let v: f64 = String::from_utf8(run.stdout).unwrap().trim().parse().unwrap();
    let nodes = NodeSet::equispaced(-5.0, 5.0, 16).unwrap();
    let lib = Interpolant::from_fn(nodes, ExtParams::new(8, 4), runge).unwrap();
    assert_eq!(v, lib.value(0.3).unwrap());
}

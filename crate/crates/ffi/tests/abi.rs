use std::ffi::{CStr, CString};
use std::ptr;

use shortloc_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sl_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn preset_algebra_and_betti_numbers() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(sl_algebra_preset(cstr("alg_8_2_A").as_ptr(), 0, &mut alg), SlStatus::Ok);
        let (mut e, mut a) = (0, 0);
        assert_eq!(sl_algebra_hilbert_type(alg, &mut e, &mut a), SlStatus::Ok);
        assert_eq!((e, a), (3, 2));
        let mut comm = true;
        assert_eq!(sl_algebra_is_commutative(alg, &mut comm), SlStatus::Ok);
        assert!(!comm);

        let mut s = ptr::null_mut();
        assert_eq!(sl_module_simple(alg, &mut s), SlStatus::Ok);
        let mut buf = [0u64; 6];
        let (mut written, mut truncated) = (0, true);
        assert_eq!(sl_betti_numbers(s, 5, 0, buf.as_mut_ptr(), buf.len(), &mut written, &mut truncated), SlStatus::Ok);
        assert_eq!(written, 6);
        assert!(!truncated);
        assert_eq!(buf, [1, 3, 8, 21, 55, 144]);

        let mut small = [0u64; 2];
        assert_eq!(
            sl_betti_numbers(s, 5, 0, small.as_mut_ptr(), small.len(), &mut written, &mut truncated),
            SlStatus::BufferTooSmall
        );
        assert_eq!(written, 6);

        let mut aligned = false;
        assert_eq!(sl_is_aligned(s, &mut aligned), SlStatus::Ok);
        assert!(aligned);

        let mut json = ptr::null_mut();
        assert_eq!(sl_betti_report_json(s, 3, 0, &mut json), SlStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(json).to_str().unwrap()).unwrap();
        assert_eq!(v["t_seq"], serde_json::json!([1, 3, 8, 21]));
        sl_string_free(json);

        sl_module_free(s);
        sl_algebra_free(alg);
    }
}

#[test]
fn preset_modules_and_koszul() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(sl_module_preset(cstr("rem_4_2").as_ptr(), cstr("nonkoszul").as_ptr(), 3, &mut m), SlStatus::Ok);
        let (mut top, mut rad) = (0, 0);
        assert_eq!(sl_module_dimension(m, &mut top, &mut rad), SlStatus::Ok);
        assert_eq!((top, rad), (1, 1));
        let (mut k, mut ff) = (true, 0i64);
        assert_eq!(sl_koszul_up_to(m, 4, 0, &mut k, &mut ff), SlStatus::Ok);
        assert!(!k);
        assert_eq!(ff, 1);
        sl_module_free(m);

        let mut m = ptr::null_mut();
        assert_eq!(sl_module_preset(cstr("lambda_3_2").as_ptr(), cstr("M").as_ptr(), 0, &mut m), SlStatus::Ok);
        assert_eq!(sl_koszul_up_to(m, 4, 0, &mut k, &mut ff), SlStatus::Ok);
        assert!(k);
        assert_eq!(ff, -1);
        sl_module_free(m);
    }
}

#[test]
fn json_inputs() {
    let alg_json = r#"{"p": 32003, "e": 3, "a": 2, "products": [{"i": 1, "j": 1, "z": [1, 0]}, {"i": 2, "j": 2, "z": [0, 1]}]}"#;
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(sl_algebra_from_json(cstr(alg_json).as_ptr(), &mut alg), SlStatus::Ok);
        // A/(Ay + Az + Az1) with basis 1, x
        let module_json = r#"{"rank": 1, "relations": [[[0, 0, 1, 0, 0, 0]], [[0, 0, 0, 1, 0, 0]], [[0, 0, 0, 0, 1, 0]]]}"#;
        let mut m = ptr::null_mut();
        let st = sl_module_from_json(alg, cstr(module_json).as_ptr(), &mut m);
        assert_eq!(st, SlStatus::Ok, "{}", last_error());
        let (mut top, mut rad) = (0, 0);
        assert_eq!(sl_module_dimension(m, &mut top, &mut rad), SlStatus::Ok);
        assert_eq!((top, rad), (1, 1));
        sl_module_free(m);

        let mut free = ptr::null_mut();
        assert_eq!(sl_module_free_module(alg, 1, &mut free), SlStatus::Ok);
        assert_eq!(sl_module_dimension(free, &mut top, &mut rad), SlStatus::NotLoewy2);
        sl_module_free(free);
        sl_algebra_free(alg);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(sl_algebra_preset(cstr("nope").as_ptr(), 0, &mut alg), SlStatus::UnknownPreset);
        assert!(last_error().contains("nope"));
        assert!(alg.is_null());
        assert_eq!(sl_algebra_preset(cstr("ex_6_3").as_ptr(), 4, &mut alg), SlStatus::InvalidInput);
        assert_eq!(sl_algebra_preset(ptr::null(), 0, &mut alg), SlStatus::NullPointer);
        assert_eq!(sl_algebra_from_json(cstr("{").as_ptr(), &mut alg), SlStatus::InvalidInput);
        let bad = r#"{"p": 7, "e": 2, "a": 1, "products": []}"#;
        assert_eq!(sl_algebra_from_json(cstr(bad).as_ptr(), &mut alg), SlStatus::InvalidInput);
        let mut rho = 0.0;
        assert_eq!(sl_spectral_radius(3, 2, &mut rho), SlStatus::Ok);
        assert_eq!(rho, 2.0);
        sl_algebra_free(ptr::null_mut());
        sl_module_free(ptr::null_mut());
        sl_string_free(ptr::null_mut());
    }
}

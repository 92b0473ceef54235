use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    // write_to_file leaves the committed header untouched unless the
    // declarations actually changed
    cbindgen::generate(&crate_dir)
        .expect("header generation failed")
        .write_to_file(crate_dir.join("include").join("chm_ffi.h"));
}

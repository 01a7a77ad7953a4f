//! Executes every example end to end. The examples carry their own asserts,
//! so a nonzero exit here means a walkthrough's claims stopped being true.

use std::path::PathBuf;
use std::process::Command;

fn example_exe(name: &str) -> PathBuf {
    // this test runs from target/debug/deps; examples live one level up
    let mut p = std::env::current_exe().expect("test exe path");
    p.pop();
    p.pop();
    p.push("examples");
    p.push(name);
    p
}

fn run_example(name: &str) {
    let exe = example_exe(name);
    if !exe.exists() {
        // `cargo test --test examples_run` skips building examples; catch up
        let status = Command::new(env!("CARGO"))
            .args(["build", "--example", name])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .status()
            .expect("cargo runs");
        assert!(status.success(), "building example {name} failed");
    }
    let out = Command::new(&exe)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap_or_else(|e| panic!("spawning {} failed: {e}", exe.display()));
    assert!(
        out.status.success(),
        "example {name} exited with {:?}\n--- stdout\n{}\n--- stderr\n{}",
        out.status.code(),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    );
}

macro_rules! example_tests {
    ($($name:ident),* $(,)?) => {
        $(#[test]
        fn $name() {
            run_example(stringify!($name));
        })*
    };
}

example_tests!(
    plain_solve,
    priority_directives,
    config_language,
    destroy_operators,
    lnps_run,
    lns_vs_lnps,
    reschedule_zero_destruction,
    generate_and_verify,
    bench_suite,
);

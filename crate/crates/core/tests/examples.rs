//! Runs every example under `examples/`.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[path = $path]
        mod $name;
        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(monomial_arithmetic, "../examples/monomial_arithmetic.rs");
example!(hilbert_and_local_cohomology, "../examples/hilbert_and_local_cohomology.rs");
example!(betti_tables, "../examples/betti_tables.rs");
example!(power_regularity, "../examples/power_regularity.rs");
example!(saturation_degree, "../examples/saturation_degree.rs");
example!(family_verification, "../examples/family_verification.rs");
example!(defect_sequences, "../examples/defect_sequences.rs");
example!(spec_files, "../examples/spec_files.rs");

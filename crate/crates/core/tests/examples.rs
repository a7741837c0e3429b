//! Every program in `examples/` runs to completion and passes its own checks.

macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(coxeter_groups, "coxeter_groups.rs", coxeter_groups_example_runs);
example!(parabolic_maps, "parabolic_maps.rs", parabolic_maps_example_runs);
example!(descent_algebra, "descent_algebra.rs", descent_algebra_example_runs);
example!(shuffles, "shuffles.rs", shuffles_example_runs);
example!(quasisymmetric_series, "quasisymmetric_series.rs", quasisymmetric_series_example_runs);
example!(p_partitions, "p_partitions.rs", p_partitions_example_runs);
example!(hecke_modules, "hecke_modules.rs", hecke_modules_example_runs);
example!(verification, "verification.rs", verification_example_runs);
example!(command_line, "command_line.rs", command_line_example_runs);

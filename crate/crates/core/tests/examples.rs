macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run().expect("example runs");
        }
    };
}

example!(continued_fractions);
example!(corollary_probe);
example!(crt_partial_fractions);
example!(exponent_scan);
example!(exponential_sums);
example!(kappa_table);
example!(oracle_compare);
example!(partition_inversion);
example!(point_set_audit);
example!(prime_window);
example!(reciprocal_distance);
example!(reproducible_report);
example!(theorem1_search);
example!(theorem2_search);

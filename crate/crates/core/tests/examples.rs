//! Every cargo example runs with a light workload.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(root_data, "root_data.rs");
example!(weyl_words, "weyl_words.rs");
example!(coefficients, "coefficients.rs");
example!(daha_eval, "daha_eval.rs");
example!(bernstein, "bernstein.rs");
example!(involution, "involution.rs");
example!(lemmas, "lemmas.rs");

#[test]
fn root_data_example_runs() {
    for label in ["G2~", "C3~", "A2~"] {
        root_data::run_example(label).expect("root data example");
    }
}

#[test]
fn weyl_words_example_runs() {
    weyl_words::run_example("G2~", "s2 s1 s2", 4).expect("weyl example");
    weyl_words::run_example("A2~", "t[1,0] * s1", 3).expect("weyl example");
}

#[test]
fn coefficients_example_runs() {
    coefficients::run_example().expect("coefficients example");
}

#[test]
fn daha_eval_example_runs() {
    daha_eval::run_example("A1~", "T1 X[1] T1").expect("eval example");
    daha_eval::run_example("B2~", "T0 X[1,0] T1 - q^-1 Y[0,1]").expect("eval example");
}

#[test]
fn bernstein_example_runs() {
    bernstein::run_example("C2~").expect("bernstein example");
}

#[test]
fn involution_example_runs() {
    let labels = vec!["A1~".to_string(), "C2~".to_string()];
    assert!(involution::run_example(&labels, 3).expect("involution example"));
}

#[test]
fn lemmas_example_runs() {
    let labels = vec!["G2~".to_string(), "A2~".to_string()];
    assert!(lemmas::run_example(&labels, true).expect("lemmas example"));
}

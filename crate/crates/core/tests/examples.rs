//! Every example's `run` completes without error.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }
    };
}

example!(normalize_and_query);
example!(sorted_lists);
example!(nice_cover);
example!(path_decomposition);
example!(verify_cover);
example!(generate_graphs);
example!(scaling_bench);
example!(render_svg);

#[test]
fn normalize_and_query_runs() {
    normalize_and_query::run().unwrap();
}

#[test]
fn sorted_lists_runs() {
    sorted_lists::run().unwrap();
}

#[test]
fn nice_cover_runs() {
    nice_cover::run().unwrap();
}

#[test]
fn path_decomposition_runs() {
    path_decomposition::run().unwrap();
}

#[test]
fn verify_cover_runs() {
    verify_cover::run().unwrap();
}

#[test]
fn generate_graphs_runs() {
    generate_graphs::run().unwrap();
}

#[test]
fn scaling_bench_runs() {
    scaling_bench::run_sizes(&[1_000, 2_000]).unwrap();
}

#[test]
fn render_svg_produces_a_document() {
    let svg = render_svg::svg().unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

fn main() {
    std::process::exit(gridcarve::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(coboundary::cli::run(std::env::args_os()));
}

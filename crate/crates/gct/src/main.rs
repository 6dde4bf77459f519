fn main() {
    std::process::exit(gct::cli::run(std::env::args().collect()));
}

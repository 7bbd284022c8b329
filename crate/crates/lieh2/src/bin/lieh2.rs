fn main() {
    std::process::exit(lieh2::cli::run(std::env::args()));
}

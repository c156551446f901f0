fn main() {
    std::process::exit(origami::cli::run(std::env::args()));
}

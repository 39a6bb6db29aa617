fn main() {
    std::process::exit(octeig::cli::run());
}

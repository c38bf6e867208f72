fn main() {
    std::process::exit(braidcat::cli::run());
}

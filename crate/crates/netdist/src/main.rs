fn main() {
    std::process::exit(netdist::cli::run());
}

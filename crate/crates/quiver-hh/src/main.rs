fn main() {
    std::process::exit(quiver_hh::cli_main());
}

fn main() {
    std::process::exit(logarr::cli::main());
}

fn main() {
    std::process::exit(multichain::cli::run_from_env());
}

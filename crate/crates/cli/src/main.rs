fn main() {
    std::process::exit(mcdm_cli::run());
}

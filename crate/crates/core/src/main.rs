fn main() {
    std::process::exit(hardy_verify::cli::cli_main());
}

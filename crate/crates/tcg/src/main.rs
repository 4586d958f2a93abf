fn main() {
    std::process::exit(tcg::cli::run(std::env::args_os()));
}

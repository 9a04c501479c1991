fn main() {
    std::process::exit(hnk::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(diffexp::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(aeclab::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(folkman::cli::main_with(std::env::args_os()));
}

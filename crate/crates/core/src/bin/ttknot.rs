fn main() {
    std::process::exit(ttknot::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(sprel::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(fh_blend::cli::main_with(std::env::args_os()));
}

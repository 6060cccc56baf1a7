fn main() {
    std::process::exit(torjet::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(acp_core::cli::main_with(std::env::args_os()));
}

fn main() {
    std::process::exit(bridgewalk::lab::cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(polyapprox_cli::main_with_args(std::env::args_os()));
}

fn main() {
    std::process::exit(wellsim_cli::main_with_args(std::env::args_os()));
}

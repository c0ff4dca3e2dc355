fn main() {
    std::process::exit(periodicity_gate::cli::main_with_args(std::env::args_os()));
}

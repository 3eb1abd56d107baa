fn main() {
    std::process::exit(primefrac::experiment::main_with_args(std::env::args_os()));
}

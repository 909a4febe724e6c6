fn main() {
    std::process::exit(degpat::harness::main_with_args(std::env::args_os()));
}

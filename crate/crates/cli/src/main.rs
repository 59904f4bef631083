fn main() {
    std::process::exit(macdonald_cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(cycle_ramsey::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(persistent_ideals::cli::run(std::env::args_os()));
}

fn main() {
    std::process::exit(permchar::cli::run(std::env::args_os()));
}

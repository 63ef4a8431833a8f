fn main() {
    std::process::exit(realchar::cli::run(std::env::args_os()));
}

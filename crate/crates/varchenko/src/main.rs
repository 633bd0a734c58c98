fn main() {
    std::process::exit(varchenko::cli::run(std::env::args_os()));
}

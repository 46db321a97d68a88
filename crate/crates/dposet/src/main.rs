fn main() {
    std::process::exit(dposet::cli::run(std::env::args_os()));
}

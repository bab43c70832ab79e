fn main() {
    std::process::exit(ewens_walk::cli::run(std::env::args_os()));
}
